"""Exact censuses and orbit dynamics for SL2/SL3 character varieties of Z^r over finite fields."""

try:
    from . import _charvar as _impl
except ImportError:  # in-tree builds put the extension on sys.path directly
    import _charvar as _impl

cubic_census = _impl.cubic_census
cubic_census_enumerated = _impl.cubic_census_enumerated
epoly_eval = _impl.epoly_eval
epoly_str = _impl.epoly_str
euler_char = _impl.euler_char
git_census = _impl.git_census
irreducible_quadratic_count = _impl.irreducible_quadratic_count
orbit_census = _impl.orbit_census
points = _impl.points
ratio_table = _impl.ratio_table
realize_roundtrip_ok = _impl.realize_roundtrip_ok
roots_of_unity_count = _impl.roots_of_unity_count
stratum_counts = _impl.stratum_counts
stratum_counts_enumerated = _impl.stratum_counts_enumerated
__version__ = _impl.__version__

__all__ = [
    "cubic_census",
    "cubic_census_enumerated",
    "epoly_eval",
    "epoly_str",
    "euler_char",
    "git_census",
    "irreducible_quadratic_count",
    "orbit_census",
    "points",
    "ratio_table",
    "realize_roundtrip_ok",
    "roots_of_unity_count",
    "stratum_counts",
    "stratum_counts_enumerated",
]
