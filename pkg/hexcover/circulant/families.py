import logging
from dataclasses import dataclass
from math import gcd

from ..graph import build_graph, canonical_form
from ..util import create_even_order

even_order_4 = create_even_order(4)
even_order_6 = create_even_order(6)


@even_order_4
def mobius_ladder(n):
    """M_n: the n-cycle plus chords between vertices n/2 apart. M_4 is K_4."""
    half = n // 2
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + half) for i in range(half)]
    return build_graph(n, edges)


@even_order_6
def torus_2layer(n):
    """T_{n,2}: two (n/2)-cycles joined by a rung matching. T_{6,2} is the triangular prism."""
    half = n // 2
    edges = [(i, (i + 1) % half) for i in range(half)]
    edges += [(half + i, half + (i + 1) % half) for i in range(half)]
    edges += [(i, half + i) for i in range(half)]
    return build_graph(n, edges)


@dataclass(frozen=True)
class CirculantSpec:
    """
    Cubic circulant C_n(s, n/2): vertex i adjacent to i+s, i-s and i+n/2 modulo n.
    """
    n: int
    s: int

    def __post_init__(self):
        if self.n % 2 or self.n < 4:
            raise ValueError(f"cubic circulants need an even order of at least 4, got {self.n}")
        if not 1 <= self.s < self.n // 2:
            raise ValueError(f"connection {self.s} must lie in 1..{self.n // 2 - 1}")

    @property
    def connections(self):
        return frozenset({self.s, self.n - self.s, self.n // 2})

    @property
    def is_connected(self):
        return gcd(gcd(self.s, self.n // 2), self.n) == 1


@dataclass(frozen=True)
class Circulant:
    spec: CirculantSpec
    graph: object
    connected: bool


def circulant(spec):
    """
    Builds C_n(s, n/2). A disconnected result is returned with connected=False.
    """
    n, s = spec.n, spec.s
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n)}
    edges |= {(i, i + n // 2) for i in range(n // 2)}
    graph = build_graph(n, sorted(edges))
    connected = graph.is_connected()
    if not connected:
        logging.warning(f"C_{n}({s}, {n // 2}) is disconnected with {graph.component_count()} components")
    return Circulant(spec, graph, connected)


@even_order_4
def cubic_circulants(n):
    """
    Every cubic circulant of order n up to isomorphism, as Circulant records ordered by s.
    """
    seen = set()
    found = []
    for s in range(1, n // 2):
        result = circulant(CirculantSpec(n, s))
        certificate = canonical_form(result.graph).certificate
        if certificate not in seen:
            seen.add(certificate)
            found.append(result)
    return found
