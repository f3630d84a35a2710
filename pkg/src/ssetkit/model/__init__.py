"""Local-universe semantics: contexts, types, terms, and the type formers."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .formers import *  # noqa: F401,F403
from .formers import __all__ as _formers_all
from .audit import *  # noqa: F401,F403
from .audit import __all__ as _audit_all

__all__ = list(_core_all) + list(_formers_all) + list(_audit_all)
