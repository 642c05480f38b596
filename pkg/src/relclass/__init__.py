"""Relative class numbers of orders in real quadratic fields."""

from .arith import discriminant_of, factor, is_prime, is_squarefree, isqrt, kronecker
from .pell import QuadUnit, PellCoords, ModMatrix2, fundamental_unit, unit_power
from .orders import ClassRecord, OrderId, class_record, phi, psi, relative_class_number
from .forms import IndefiniteForm, form_class_number, reduced_forms, relative_form_class_number

__all__ = [
    "discriminant_of", "factor", "is_prime", "is_squarefree", "isqrt", "kronecker",
    "QuadUnit", "PellCoords", "ModMatrix2", "fundamental_unit", "unit_power",
    "ClassRecord", "OrderId", "class_record", "phi", "psi", "relative_class_number",
    "IndefiniteForm", "form_class_number", "reduced_forms", "relative_form_class_number",
]
