from .cone import Cone, MembershipCert, Verdict, dual, membership, equal, is_subcone, MAX_AMBIENT_DIM
from .polyhedra import cone_generators_from_inequalities, facet_normals, nonnegative_combination

__all__ = [
    "Cone", "MembershipCert", "Verdict", "dual", "membership", "equal", "is_subcone", "MAX_AMBIENT_DIM",
    "cone_generators_from_inequalities", "facet_normals", "nonnegative_combination",
]
