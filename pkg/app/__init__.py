"""qprime: torus-invariant primes of quantum matrices"""

from .certificate import Certificate
from .errors import (
    DegreeGuardExceeded,
    DomainError,
    EvaluationError,
    QPrimeError,
    ResourceGuardExceeded,
    TruncatedBasisError,
)
from .groebner import GroebnerBasis, gk_dim_quotient, left_groebner, membership, normal_form, two_sided_groebner
from .polynormal import (
    generating_sequence,
    separating_minor,
    upsilon,
    verify_heights,
    verify_polynormal,
    verify_poset,
    verify_separation,
)
from .qcoeff import LaurentPoly, RatFunc, gauss_binom, qint
from .qmatrix import QMAlgebra, QMElement, get_algebra
from .session import RunConfig, VerificationSession
from .weyl import Permutation, bruhat_interval, bruhat_leq, coxeter_cm

__all__ = [
    "Certificate",
    "DegreeGuardExceeded",
    "DomainError",
    "EvaluationError",
    "QPrimeError",
    "ResourceGuardExceeded",
    "TruncatedBasisError",
    "GroebnerBasis",
    "gk_dim_quotient",
    "left_groebner",
    "membership",
    "normal_form",
    "two_sided_groebner",
    "generating_sequence",
    "separating_minor",
    "upsilon",
    "verify_heights",
    "verify_polynormal",
    "verify_poset",
    "verify_separation",
    "LaurentPoly",
    "RatFunc",
    "gauss_binom",
    "qint",
    "QMAlgebra",
    "QMElement",
    "get_algebra",
    "RunConfig",
    "VerificationSession",
    "Permutation",
    "bruhat_interval",
    "bruhat_leq",
    "coxeter_cm",
]
