"""Exact tilt-stability computations on P^3 and its canonical bundle.

Numbers are accepted as int, str ("3/4") or fractions.Fraction and returned as
Fraction. Classes are literals ("3,-2,0,2/3"), names ("T(-2)") or 4-sequences.
"""

from ._tiltwall import (
    DomainError,
    InputError,
    admissible_interval,
    bg_margin,
    central_charge,
    chi,
    chi_local,
    collection_check,
    discriminant,
    is_integral,
    parse_class,
    plot_svg,
    reduce,
    run_cli,
    spherical_twist,
    to_literal,
    twisted_v,
    walls,
)

__all__ = [
    "DomainError",
    "InputError",
    "admissible_interval",
    "bg_margin",
    "central_charge",
    "chi",
    "chi_local",
    "collection_check",
    "discriminant",
    "is_integral",
    "parse_class",
    "plot_svg",
    "reduce",
    "run_cli",
    "spherical_twist",
    "to_literal",
    "twisted_v",
    "walls",
]
