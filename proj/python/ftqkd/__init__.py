"""Single-photon time/frequency QKD simulator and analytic toolkit.

Thin re-export of the compiled extension. Everything lives in C++; this
package exists so `import ftqkd` works and so docs/tools have a stable
import path.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
