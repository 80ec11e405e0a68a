"""Thompson's groups F, T and Aut+F: exact arithmetic and metric experiments."""

from ._core import *  # noqa: F401,F403
from ._core import AutfError, EPMap, TreePair, eval, eval_f, profile  # noqa: F401
