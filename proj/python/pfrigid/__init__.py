"""Mapping tori of GL(2,Z) monodromies and finite-quotient fingerprints.

Matrices are passed as "a11,a12;a21,a22" strings, presentations in the
"a b | a a = b b b" form accepted by the command-line tool.
"""

from ._pfrigid import (
    DomainError,
    Error,
    InputError,
    abelianization,
    b1_profile,
    census,
    classify,
    epimorphism_count,
    fingerprint,
    h1,
    identify,
    is_conjugate,
    local_conjugacy,
    nielsen,
    presentation_of,
    quotients,
    run_cli,
)

__version__ = "0.1.0"
