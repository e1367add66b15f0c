from .intervals import INF, Affine, ClassMismatchError, IncomparableError, IntervalQ, Q, Qx, Rat, fmt
from .etpl import ETPL
from .periodic import PeriodicPL
from .mobius import CompactifiedMap, PiecewiseMobius, rho, rho_inv
from .piecewise import PiecewiseHomeo
from .roots import OrbitError, RootPL, RootProduct, affine_choice, nth_root, nth_root_componentwise
from .ops import (
    affine_conjugate,
    agree_on,
    canonicalize,
    compactify,
    compose,
    disagreement,
    equals,
    evaluate,
    identity_like,
    inverse,
    is_identity,
    kinks,
    power,
    restrict,
    support,
    to_mobius,
    witness,
)
