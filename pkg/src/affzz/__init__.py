"""Extended affine type A braid group actions: quiver algebra R_n, complexes of
projectives, Burau-type representations and trigraded curves on the punctured disk."""

__version__ = "0.1.0"
