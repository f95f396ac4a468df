from fractions import Fraction

from homdensity.exceptions import DensityRangeException


class Density(Fraction):
    """
    A homomorphism density: an exact, reduced rational in [0, 1].

    Comparisons and arithmetic are inherited from `Fraction`, so they are exact. Arithmetic results are plain
    fractions, since a sum of densities need not be a density.
    """

    def __new__(cls, numerator=0, denominator=None):
        self = super(Density, cls).__new__(cls, numerator, denominator)
        if not 0 <= self <= 1:
            raise DensityRangeException("A density must lie in [0, 1], got {}.".format(Fraction(self)))
        return self

    @classmethod
    def from_counts(cls, homomorphisms: int, mappings: int) -> 'Density':
        return cls(homomorphisms, mappings)

    def as_dict(self):
        return {"num": str(self.numerator), "den": str(self.denominator)}

    def __str__(self):
        return "{}/{}".format(self.numerator, self.denominator)


ONE = Density(1)
ZERO = Density(0)
