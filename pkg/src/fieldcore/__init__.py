from src.fieldcore.field import (
    FieldElement,
    FieldSpec,
    add,
    field_new,
    inv,
    is_prime,
    mul,
    neg,
    prime_power,
    quadratic_character,
    quadratic_residues,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "add",
    "field_new",
    "inv",
    "is_prime",
    "mul",
    "neg",
    "prime_power",
    "quadratic_character",
    "quadratic_residues",
]
