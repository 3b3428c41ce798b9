"""Exact flood polynomials of finite simple graphs.

Thin wrapper over the _floodpoly extension; see that module for the full
surface. Polynomials are lists of int coefficients, lowest degree first.
"""

try:
    # installed wheel: the extension lives inside the package
    from . import _floodpoly as _ext
except ImportError:
    # in-tree build: the extension sits on PYTHONPATH by itself
    import _floodpoly as _ext

Graph = _ext.Graph
centipede_poly = _ext.centipede_poly
closure = _ext.closure
cycle_flood_poly = _ext.cycle_flood_poly
facts = _ext.facts
fibonacci_poly = _ext.fibonacci_poly
flood_polynomial = _ext.flood_polynomial
floods = _ext.floods
free_vertices = _ext.free_vertices
from_graph6 = _ext.from_graph6
from_spec = _ext.from_spec
lucas_poly = _ext.lucas_poly
minimal_flooding_sets = _ext.minimal_flooding_sets
parallel_path_2n_poly = _ext.parallel_path_2n_poly
path_flood_poly = _ext.path_flood_poly
tick_poly = _ext.tick_poly
to_graph6 = _ext.to_graph6
triangle_mosaic_poly = _ext.triangle_mosaic_poly
verify = _ext.verify

__version__ = _ext.__version__

__all__ = [
    "Graph",
    "centipede_poly",
    "closure",
    "cycle_flood_poly",
    "facts",
    "fibonacci_poly",
    "flood_polynomial",
    "floods",
    "free_vertices",
    "from_graph6",
    "from_spec",
    "lucas_poly",
    "minimal_flooding_sets",
    "parallel_path_2n_poly",
    "path_flood_poly",
    "tick_poly",
    "to_graph6",
    "triangle_mosaic_poly",
    "verify",
]
