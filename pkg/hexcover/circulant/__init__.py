from .families import mobius_ladder, torus_2layer, circulant, cubic_circulants, Circulant, CirculantSpec
from .mcsd import MCSDLabeling, find_mcsd
