from .rational import Rat, to_rat, parse_rat, format_rat
from .linalg import RatVec, RatMat, identity, solve, rank, null_space

__all__ = [
    "Rat", "to_rat", "parse_rat", "format_rat",
    "RatVec", "RatMat", "identity", "solve", "rank", "null_space",
]
