"""Wavelet basis and coefficient layout models"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pywt

from .errors import InvalidInputError

# Family names count vanishing moments: db4 has 8 taps, db8 has 16.
FAMILIES = ("haar", "db4", "db8")

_FILTER_TOL = 1e-12


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


def max_levels(length: int) -> int:
    """Deepest admissible decomposition for a power-of-two length."""
    if not _is_power_of_two(length) or length < 2:
        raise InvalidInputError(f"Signal length {length} is not a power of two >= 2")
    return int(length).bit_length() - 1


@dataclass(frozen=True)
class WaveletBasis:
    """
    Orthonormal filter pair defining the transform matrix.

    `levels=None` means the maximal depth for whatever length is transformed.
    """

    family: str = "db4"
    levels: Optional[int] = None
    low_pass: np.ndarray = field(init=False, repr=False, compare=False)
    high_pass: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        family = str(self.family).lower()
        if family not in FAMILIES:
            raise InvalidInputError(
                f"Unknown wavelet family '{self.family}'. Choose one of {', '.join(FAMILIES)}"
            )
        if self.levels is not None and int(self.levels) < 1:
            raise InvalidInputError(f"levels must be a positive integer, got {self.levels}")

        # rec_lo is the analysis filter in natural (h_0 first) order.
        h = np.asarray(pywt.Wavelet(family).rec_lo, dtype=float)
        k = np.arange(h.size)
        g = ((-1.0) ** k) * h[::-1]

        object.__setattr__(self, "family", family)
        object.__setattr__(self, "low_pass", h)
        object.__setattr__(self, "high_pass", g)
        self._check_filters()

    def _check_filters(self):
        h = self.low_pass
        if abs(h.sum() - np.sqrt(2.0)) > _FILTER_TOL:
            raise InvalidInputError(f"{self.family}: low-pass filter does not sum to sqrt(2)")
        for shift in range(0, h.size, 2):
            inner = float(np.dot(h[: h.size - shift], h[shift:]))
            expected = 1.0 if shift == 0 else 0.0
            if abs(inner - expected) > _FILTER_TOL:
                raise InvalidInputError(
                    f"{self.family}: low-pass filter is not orthonormal at shift {shift}"
                )

    @property
    def taps(self) -> int:
        return int(self.low_pass.size)

    def resolve_levels(self, length: int) -> int:
        """Decomposition depth to use for a signal of the given padded length."""
        deepest = max_levels(length)
        if self.levels is None:
            return deepest
        if self.levels > deepest:
            raise InvalidInputError(
                f"levels={self.levels} exceeds log2({length}) = {deepest}"
            )
        return int(self.levels)


@dataclass(frozen=True)
class CoefficientLayout:
    """
    Band layout of a coefficient vector: approximation first, then details
    from coarse to fine. Band names are `a<J>` and `d<j>`, `d1` the finest.
    """

    original_length: int
    padded_length: int
    levels: int
    band_offsets: tuple[tuple[str, int, int], ...]
    padding_mode: str = "zero"

    def __post_init__(self):
        if not _is_power_of_two(self.padded_length):
            raise InvalidInputError(f"padded_length {self.padded_length} is not a power of two")
        if self.original_length > self.padded_length:
            raise InvalidInputError("original_length exceeds padded_length")
        expected = 0
        for name, start, length in self.band_offsets:
            if start != expected:
                raise InvalidInputError(f"Band {name} is not contiguous")
            expected += length
        if expected != self.padded_length:
            raise InvalidInputError("Band lengths do not sum to padded_length")

    @classmethod
    def build(
        cls, original_length: int, padded_length: int, levels: int, padding_mode: str = "zero"
    ) -> "CoefficientLayout":
        approx = padded_length >> levels
        bands = [(f"a{levels}", 0, approx)]
        start = approx
        for j in range(levels, 0, -1):
            length = padded_length >> j
            bands.append((f"d{j}", start, length))
            start += length
        return cls(
            original_length=int(original_length),
            padded_length=int(padded_length),
            levels=int(levels),
            band_offsets=tuple(bands),
            padding_mode=padding_mode,
        )

    def band(self, name: str) -> slice:
        for band_name, start, length in self.band_offsets:
            if band_name == name:
                return slice(start, start + length)
        raise KeyError(name)

    @property
    def approximation(self) -> slice:
        _, start, length = self.band_offsets[0]
        return slice(start, start + length)

    @property
    def details(self) -> slice:
        return slice(self.band_offsets[0][2], self.padded_length)

    @property
    def finest_detail(self) -> slice:
        return self.band("d1")

    def to_dict(self) -> dict:
        return {
            "original_length": self.original_length,
            "padded_length": self.padded_length,
            "levels": self.levels,
            "padding_mode": self.padding_mode,
            "bands": [
                {"name": name, "start": start, "length": length}
                for name, start, length in self.band_offsets
            ],
        }
