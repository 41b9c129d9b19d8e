"""Free decomposition spaces: presheaves on the inert simplex category, their
free simplicial sets, checkers and incidence coalgebras."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError, TruncationTooSmall  # noqa: F401
