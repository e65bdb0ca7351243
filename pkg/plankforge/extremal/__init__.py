from .family import (
    EqualityReport,
    ExtremalFamily,
    SharpnessReport,
    bst_sharpness_check,
    build_family,
    hilbert_sharpness_check,
    verify_equality,
)

__all__ = [
    'ExtremalFamily',
    'EqualityReport',
    'SharpnessReport',
    'build_family',
    'verify_equality',
    'bst_sharpness_check',
    'hilbert_sharpness_check',
]
