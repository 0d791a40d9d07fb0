"""omegarec: omega-regular languages recognized by finite semigroups.

Library layers: finite semigroup algebra (semigroups), recognizing morphisms
and ultimately periodic membership (recognizers), Buchi automata and word
profiles (buchi), the conversion constructions (conversions), witness families
and the lower-bound certification engine (witnesses, certify), plus textual
artifact formats, the bound report and the command line front end.
"""

from .buchi import (
    BuchiAutomaton,
    TransitionProfile,
    ba_accepts_up,
    full_automaton,
    full_letter_map,
    full_word_map,
    letter_profile,
    nfa_accepts,
    profile,
    thm6_automaton,
    thm6_word,
    thm6_word_set,
    thm8_reference_ba,
)
from .certify import (
    LowerBoundCertificate,
    Witness,
    cached_oracle,
    certify_distinct,
    certify_lower_bound,
    prop4_transfer,
)
from .conversions import (
    ba_to_strong,
    ba_to_weak,
    nfa_to_recognizer,
    weak_to_ba,
    weak_to_strong_general,
    weak_to_strong_simple,
)
from .errors import CapacityError, CertificationError, FormatError, PreconditionError
from .recognizers import (
    FiniteWordRecognizer,
    Morphism,
    StrongRecognizer,
    UPWord,
    WeakRecognizer,
    complement,
    equivalent,
    h_of,
    syntactic_quotient,
    syntactic_quotient_finite,
    up_in_class,
    up_member_strong,
    up_member_weak,
)
from .semigroups import (
    FiniteSemigroup,
    GreensData,
    LinkedPair,
    ReesStructure,
    adjoin_identity,
    check_associativity,
    generate_subsemigroup,
    greens,
    idempotent_power,
    idempotents,
    is_j_trivial,
    is_simple,
    linked_pairs,
    r_dot,
    rees_structure,
)
from .witnesses import (
    full_certificate_words,
    leftzero_certificate_words,
    leftzero_recognizer,
    theorem8_recognizer,
    thm6_certificate_words,
)

__version__ = "0.1.0"
