"""Hamiltonian cycle instances for Erin and Stedman Triples."""

from ._ringhcp import (
    CallSequence,
    Instance,
    apply_place_notation,
    build,
    decode,
    gadget_certificate,
    group_elements,
    groups,
    load,
    manifest,
    parity,
    plain_course_length,
    six_of,
    solve,
    solve_instance,
    verify,
)

__all__ = [
    "CallSequence",
    "Instance",
    "apply_place_notation",
    "build",
    "decode",
    "gadget_certificate",
    "group_elements",
    "groups",
    "load",
    "manifest",
    "parity",
    "plain_course_length",
    "six_of",
    "solve",
    "solve_instance",
    "verify",
]
