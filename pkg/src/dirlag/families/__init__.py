__all__ = [
    "ConvolutionFamily",
    "family_from_generator",
    "family_from_values",
    "beta_transform",
    "transform",
    "scale",
    "product",
    "twist",
    "verify_family",
    "is_multiplicative",
    "first_multiplicativity_failure",
    "FamilyError",
    "InvalidFamilyValues",
    "NotCompletelyMultiplicative",
]

from dirlag.families.family import ConvolutionFamily
from dirlag.families.generation import family_from_generator
from dirlag.families.generation import family_from_values
from dirlag.families.transforms import beta_transform
from dirlag.families.transforms import transform
from dirlag.families.transforms import scale
from dirlag.families.transforms import product
from dirlag.families.transforms import twist
from dirlag.families.verification import verify_family
from dirlag.families.verification import is_multiplicative
from dirlag.families.verification import first_multiplicativity_failure

from dirlag.families.exceptions import \
    FamilyError, \
    InvalidFamilyValues, \
    NotCompletelyMultiplicative
