import logging
from concurrent.futures import ProcessPoolExecutor
from functools import wraps

import tqdm


class GraphConstructionException(Exception):
    pass


class SelfLoopException(GraphConstructionException):
    pass


class DuplicateEdgeException(GraphConstructionException):
    pass


class VertexRangeException(GraphConstructionException):
    pass


class DegreeExceededException(GraphConstructionException):
    pass


class Graph6FormatException(Exception):
    pass


class NotCubicException(Exception):
    pass


class CycleFormatException(Exception):
    pass


class SearchBoundExceededException(Exception):
    pass


class AnchorMismatchException(Exception):
    pass


class SubstitutionException(Exception):
    pass


class HamiltonianSpliceException(Exception):
    pass


class ReductionFailedException(Exception):
    pass


class CatalogFormatException(Exception):
    pass


def create_requires_cubic(connected):
    def requires_cubic(func):
        @wraps(func)
        def wrapper_requires_cubic(graph, *args, **kwargs):
            if not graph.is_cubic():
                raise NotCubicException(f"{func.__name__} needs a cubic graph, got degrees {sorted(set(graph.degrees()))}")
            if connected and not graph.is_connected():
                raise NotCubicException(f"{func.__name__} needs a connected graph")
            return func(graph, *args, **kwargs)
        return wrapper_requires_cubic
    return requires_cubic


def create_even_order(minimum):
    def even_order(func):
        @wraps(func)
        def wrapper_even_order(n, *args, **kwargs):
            if n % 2 or n < minimum:
                raise ValueError(f"{func.__name__} needs an even order of at least {minimum}, got {n}")
            return func(n, *args, **kwargs)
        return wrapper_even_order
    return even_order


requires_cubic = create_requires_cubic(connected=True)
requires_cubic_component = create_requires_cubic(connected=False)


def read_int_rows(text, width, what):
    """
    Parses whitespace separated integer rows of a fixed width, skipping blank lines.
    :param text: text to parse
    :param width: expected number of integers per row
    :param what: description used in error messages
    :return: list of tuples of integers
    """
    rows = []
    for number, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != width:
            raise CycleFormatException(f"{what}: line {number + 1} has {len(tokens)} fields, expected {width}")
        try:
            rows.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise CycleFormatException(f"{what}: line {number + 1} is not numeric: {line!r}")
    return rows


def apply_parallel(function, items, jobs=1, desc=None):
    """
    Applies function to every item, in order. With jobs > 1 the calls run in a process pool; function and items
    must then be picklable.
    :param function: one-argument callable
    :param items: iterable of arguments
    :param jobs: number of worker processes, 1 for a serial run
    :param desc: progress bar label
    :return: list of results in item order
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        logging.info("using serial version.")
        return [r for r in tqdm.tqdm(map(function, items), total=len(items), desc=desc, disable=None if desc else True)]
    logging.info(f"using process pool version with {jobs} workers.")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [r for r in tqdm.tqdm(pool.map(function, items), total=len(items), desc=desc, disable=None if desc else True)]
