"""Privacy-preserving vehicle-cluster data aggregation toolkit.

Masked in-cluster averaging with recoverable exclusion, joint Schnorr
approvals over the independently computed average, binary-tree fault
location for invalid sub-approvals, a cluster-key audit trail, and a
deterministic scenario simulator with a CLI.
"""

from .backend import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
