"""Quantum synchronizable codes from binary quadratic residue codes.

Submodules: ``poly2`` (GF(2)[x]), ``arith`` (residues, cyclotomic cosets),
``field`` (GF(2^t), minimal polynomials), ``cyclic`` (cyclic codes),
``qr`` (QR code family), ``chain`` (supercode chains and parameters),
``syncsim`` (framing and recovery simulation), ``cli``.
"""

from .poly2 import Poly, parse, from_hex
from .cyclic import CyclicCode, new_cyclic, dual, contains, min_distance
from .qr import build_qr_family, verify_lemma2
from .chain import mersenne_chain, qr_chain, qsync_params, theorem2_table, chain_pair
from .syncsim import encode_frame, transmit, recover, run_trials, Channel

__version__ = "0.1.0"

__all__ = [
    "Poly", "parse", "from_hex",
    "CyclicCode", "new_cyclic", "dual", "contains", "min_distance",
    "build_qr_family", "verify_lemma2",
    "mersenne_chain", "qr_chain", "qsync_params", "theorem2_table", "chain_pair",
    "encode_frame", "transmit", "recover", "run_trials", "Channel",
]
