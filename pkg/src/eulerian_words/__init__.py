"""Statistics, bijections and Eulerian pairs on words over {1,2} and beyond."""

from .analysis import (
    DistPolynomial, check_pair, distribution, find_preimages, image, joint_distribution,
)
from .bijections import gamma, gamma_binary_closed_form, phi1, phi1_inv, phi2, psi, stein_phi
from .families import FAMILY_TAGS, enumerate_family, is_member
from .partitions import Partition, durfee, lambda_of, weight
from .theorems import THEOREM_IDS, run_theorem
from .words import (
    BlockForm, assemble, block_form, des, exc, format_word, inv, maj, ones_count, parse_word,
    sorted_rearrangement, standardize, trailing_twos,
)

__version__ = "0.1.0"
