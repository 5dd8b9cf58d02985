import numpy as np
from fractions import Fraction
from sympy import GF
from sympy import QQ
from sympy import isprime


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from sympy.polys.domains.domain import Domain

    from taurank.types import Scalar


DEFAULT_PRIME = 2147483647


class Field:
    """
    The exact coefficient field of a session.

    Either the rationals (the default) or a prime field F_p. All
    scalars handed around by the library are elements of ``domain``.
    """

    domain: 'Domain'
    characteristic: int

    def __init__(self, prime: int | None = None):
        if prime is None:
            self.domain = QQ
            self.characteristic = 0
        else:
            if not isprime(prime):
                raise ValueError(f'{prime} is not a prime')
            self.domain = GF(prime)
            self.characteristic = prime

    @classmethod
    def from_spec(cls, spec: str) -> 'Field':
        """ Parses ``q``, ``fp`` or ``fp:<prime>``. """
        spec = spec.strip().lower()
        if spec == 'q':
            return cls()
        if spec == 'fp':
            return cls(DEFAULT_PRIME)
        if spec.startswith('fp:'):
            try:
                prime = int(spec[3:])
            except ValueError:
                raise ValueError(f'invalid prime in field spec: {spec}')
            return cls(prime)
        raise ValueError(f'unknown field: {spec}')

    @property
    def tag(self) -> str:
        if self.characteristic == 0:
            return 'Q'
        return f'F_{self.characteristic}'

    @property
    def zero(self) -> 'Scalar':
        return self.domain.zero

    @property
    def one(self) -> 'Scalar':
        return self.domain.one

    def convert(self, value: 'int | Fraction | str | Scalar') -> 'Scalar':
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(f'not a rational number: {value!r}')
        if isinstance(value, Fraction):
            denominator = self.domain.convert(value.denominator)
            if not denominator:
                raise ZeroDivisionError(
                    f'{value} has no image in {self.tag}'
                )
            return self.domain.quo(
                self.domain.convert(value.numerator),
                denominator
            )
        return self.domain.convert(value)

    def to_json(self, value: 'Scalar') -> int | str:
        """ Integers stay integers, everything else becomes ``'p/q'``. """
        if self.characteristic:
            return int(self.domain.to_int(value))
        numerator = int(self.domain.numer(value))
        denominator = int(self.domain.denom(value))
        if denominator == 1:
            return numerator
        return f'{numerator}/{denominator}'

    def sample(self, rng: np.random.Generator, bound: int) -> 'Scalar':
        return sample_scalar(self, rng, bound)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.characteristic == other.characteristic

    def __hash__(self) -> int:
        return hash(('Field', self.characteristic))

    def __repr__(self) -> str:
        return f'Field({self.tag})'


def sample_scalar(
    field: Field,
    rng:   np.random.Generator,
    bound: int
) -> 'Scalar':
    """
    Draws one scalar: a uniform integer in ``[-bound, bound]`` over Q,
    a uniform element over F_p. Exactly one draw is taken from ``rng``
    (none when ``bound`` is zero).
    """
    if bound <= 0:
        return field.zero
    if field.characteristic == 0:
        value = rng.integers(-bound, bound, endpoint=True)
    else:
        value = rng.integers(0, field.characteristic)
    return field.domain.convert(int(value))


def split_seed(
    seed: 'int | np.random.SeedSequence',
    count: int
) -> list[np.random.Generator]:
    """
    Splits a master seed into ``count`` independent generators.

    The i-th generator depends only on the seed and i, so the
    i-th trial of a randomized computation is reproducible in isolation.
    """
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return [np.random.default_rng(child) for child in seed.spawn(count)]


def split_seed_sequences(
    seed: 'int | np.random.SeedSequence',
    count: int
) -> list[np.random.SeedSequence]:
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return seed.spawn(count)
