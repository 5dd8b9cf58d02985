"""
Maximal ranks of projective presentations, τ-regularity and the
Auslander-Reiten translate for bound quiver algebras.
"""

__version__ = '0.1.0'
