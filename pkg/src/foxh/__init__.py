"""Fox H-functions, Fox-Wright and Mittag-Leffler functions, their transform
identities, and numerical checkers for the monotonicity and definiteness
properties built on them."""

__version__ = "0.1.0"

from . import checks as _checks, errors as _errors, evaluate as _evaluate, foxwright as _foxwright
from . import gamma as _gamma, spec as _spec, theorems as _theorems, transforms as _transforms
from .checks import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .evaluate import *  # noqa: F401,F403
from .foxwright import *  # noqa: F401,F403
from .gamma import *  # noqa: F401,F403
from .spec import *  # noqa: F401,F403
from .theorems import *  # noqa: F401,F403
from .transforms import *  # noqa: F401,F403

__all__ = sorted(
    {n for m in (_checks, _evaluate, _foxwright, _gamma, _spec, _theorems, _transforms) for n in m.__all__}
    | {n for n in dir(_errors) if n.endswith(("Error", "Warning"))}
)
