"""Exact apolarity calculus for binary and ternary forms, Waring rank lower
bounds, and a verifier for the even-degree family
x y^(k-1) z^(k+2) + y^(2k) z^2."""

from .apolarity import (
    ApolarProfile,
    apolar_action,
    apolar_ideal_component,
    apolar_length,
    apolar_profile,
    catalecticant,
    derivative_space_basis,
)
from .binary import (
    BinaryRankCertificate,
    binary_rank,
    max_monomial_rank,
    monomial_rank,
    prop_pre_check,
    squarefree,
    z_divisibility,
)
from .bounds import (
    BoundReport,
    ReferenceProfile,
    bound_report,
    catalecticant_lower_bound,
    max_rank_lower_bound,
    prop3_bound,
    prop4_count,
    reference_profile,
)
from .errors import ApolarError, ArityError, FormParseError, VerificationError, ZeroFormError
from .family import FamilyInstance, FamilyReport, TailSample, bound_table, family_form, sample_tail, verify_family
from .forms import Form, add, differentiate, equal, linear_power, multiply, scale
from .linalg import QMatrix, matrix_rank
from .parsing import parse_form

__version__ = "0.1.0"
