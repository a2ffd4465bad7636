"""Generic extensions, Hall polynomials and PBW bases for the cyclic quiver.

Isoclasses of nilpotent representations are ``MultiPartition`` objects,
words on the vertices are ``Word`` objects.  ``wp`` sends a word to the
generic extension of its simple factors; ``bracket`` counts composition
series; ``pbw_expand`` writes a Hall algebra element in the basis indexed
by separated multipartitions.
"""

from .basis import (
    HallVector,
    TransitionMatrix,
    canonical_section,
    distinguished_section,
    expand_monomial,
    in_radical,
    pbw_expand,
    radical_basis,
    random_section,
    transition_matrix,
    twisted_left,
    twisted_right,
)
from .core import MultiPartition, Word, content, dim_vector, enumerate_pi, size
from .hall import bracket, gauss, gauss_factorial, isotypic_step, reduced_filtration_count, socle_step, top_step
from .module_theory import aut_poly, end_dim, euler, ext_dim, hom_dim, hom_dim_ind, orbit_dim
from .monoid import (
    FiberTooLarge,
    canonical_word,
    fiber,
    fiber_size,
    is_distinguished,
    is_separated,
    sigma_minus,
    sigma_plus,
    tight_form,
    wp,
)
from .order import covers_closure, degeneration_poset, ideal, leq_deg
from .poly import LaurentPoly, Poly, RatFunc

__version__ = "0.1.0"
