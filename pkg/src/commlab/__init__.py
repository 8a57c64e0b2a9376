"""commlab: commutator calculus for words, finite carriers, braids, spheres.

Submodules:

* words     - freely reduced words, conjugates and commutators
* brackets  - bracket arrangements (binary commutator shapes)
* sampling  - seeded streams of symmetric/fat commutator generators
* magnus    - truncated Magnus expansion, lower-central membership
* finite    - brute-force subgroup identities in permutation groups
* braids    - braid words, Artin action, Brunnian checks
* homotopy  - one-relator presentations, homotopy-group certificates
* cli       - the ``commlab`` command line tool
"""

from commlab.kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
