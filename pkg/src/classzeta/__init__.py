"""Class numbers of imaginary quadratic fields checked against a rational
class-number zeta function and its predicted counts."""

__version__ = "0.1.0"
