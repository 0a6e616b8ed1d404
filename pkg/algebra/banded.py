"""
Band-compressed matrix sections.

Every section stores, per row, only the entries of its lower bands; the
unit superdiagonal (Hessenberg, N) or unit diagonal (L) is implicit.
Rows are indexed from 0 and bands[n][k] is the entry k places left of the
first stored position of row n.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.errors import BadShape, WindowTooLarge, ZeroEdgeBand, ZeroLowBand
from algebra.scalars import ONE, ZERO, ScalarLike, as_scalar, as_scalars, format_scalars

Bands = Tuple[Tuple[Fraction, ...], ...]


class BandedSection(ABC):
    """A finite leading section of an infinite banded matrix."""

    @property
    @abstractmethod
    def size(self) -> int:
        """Number of stored rows (and columns)."""

    @property
    @abstractmethod
    def upper(self) -> int:
        """Number of nonzero bands above the diagonal."""

    @property
    @abstractmethod
    def lower(self) -> int:
        """Number of nonzero bands below the diagonal."""

    @abstractmethod
    def entry(self, i: int, j: int) -> Fraction:
        """Entry (i, j) of the section."""

    def dense(self, window: Optional[int] = None) -> List[List[Fraction]]:
        """Leading ``window`` x ``window`` block as nested lists."""
        window = self.size if window is None else window
        if window > self.size:
            raise WindowTooLarge(window, self.size)
        return [[self.entry(i, j) for j in range(window)] for i in range(window)]


def _freeze_bands(bands: Sequence[Sequence[ScalarLike]]) -> Bands:
    return tuple(as_scalars(row) for row in bands)


def _check_row_lengths(bands: Bands, stored: int, offset: int, kind: str) -> None:
    for n, row in enumerate(bands):
        expected = min(n, stored) + offset
        if len(row) != expected:
            raise BadShape(f"{kind} row {n} holds {len(row)} entries, expected {expected}")


@dataclass(frozen=True)
class BandedHessenberg(BandedSection):
    """
    Finite section of the recurrence matrix J.

    bands[n][k] = a_{n,n-k} for k = 0..min(n, d); the superdiagonal is 1.
    """

    d: int
    bands: Bands

    def __post_init__(self) -> None:
        if self.d < 1:
            raise BadShape(f"band parameter must be positive, got {self.d}")
        object.__setattr__(self, "bands", _freeze_bands(self.bands))
        _check_row_lengths(self.bands, self.d, 1, "hessenberg")
        for n in range(self.d, len(self.bands)):
            if self.bands[n][self.d] == 0:
                raise ZeroLowBand(n)

    @property
    def size(self) -> int:
        return len(self.bands)

    @property
    def upper(self) -> int:
        return 1

    @property
    def lower(self) -> int:
        return self.d

    def entry(self, i: int, j: int) -> Fraction:
        if j == i + 1:
            return ONE
        k = i - j
        if 0 <= k <= min(i, self.d):
            return self.bands[i][k]
        return ZERO

    def coefficient(self, n: int, k: int) -> Fraction:
        """a_{n,n-k}."""
        return self.bands[n][k]

    def restrict(self, rows: int) -> "BandedHessenberg":
        """Leading section with ``rows`` rows."""
        if rows > self.size:
            raise BadShape(f"cannot restrict a section of size {self.size} to {rows}")
        return BandedHessenberg(self.d, self.bands[:rows])

    def shifted(self, a: ScalarLike) -> "BandedHessenberg":
        """J - aI."""
        a = as_scalar(a)
        return BandedHessenberg(self.d, tuple((row[0] - a,) + row[1:] for row in self.bands))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "hessenberg",
            "size": self.size,
            "d": self.d,
            "bands": [format_scalars(row) for row in self.bands],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], d: Optional[int] = None) -> "BandedHessenberg":
        try:
            bands = data["bands"]
            band_d = int(data.get("d", d if d is not None else 0))
        except (KeyError, TypeError, ValueError) as e:
            raise BadShape(f"malformed hessenberg section: {e}") from e
        if d is not None and band_d != d:
            raise BadShape(f"section declares d = {band_d}, expected {d}")
        matrix = cls(band_d, bands)
        if "size" in data and data["size"] != matrix.size:
            raise BadShape(f"declared size {data['size']} but {matrix.size} rows given")
        return matrix


@dataclass(frozen=True)
class BandedLowerTriangular(BandedSection):
    """
    Unit lower triangular section with ``q`` subdiagonal bands.

    bands[n][k-1] = gamma_{n,n-k} for k = 1..min(n, q).
    """

    q: int
    bands: Bands

    def __post_init__(self) -> None:
        if self.q < 0:
            raise BadShape(f"bandwidth must be non-negative, got {self.q}")
        object.__setattr__(self, "bands", _freeze_bands(self.bands))
        _check_row_lengths(self.bands, self.q, 0, "lower")

    @classmethod
    def identity(cls, size: int) -> "BandedLowerTriangular":
        return cls(0, tuple(() for _ in range(size)))

    @property
    def size(self) -> int:
        return len(self.bands)

    @property
    def upper(self) -> int:
        return 0

    @property
    def lower(self) -> int:
        return self.q

    def entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return ONE
        k = i - j
        if 1 <= k <= min(i, self.q):
            return self.bands[i][k - 1]
        return ZERO

    def gamma(self, n: int, s: int) -> Fraction:
        """gamma_{n,s}."""
        return self.entry(n, s)

    def require_edge_band(self) -> None:
        """
        Check gamma_{n,n-q} != 0 for every row n >= q.

        Raises:
            ZeroEdgeBand: On the first row whose edge entry vanishes
        """
        if self.q == 0:
            return
        for n in range(self.q, self.size):
            if self.bands[n][self.q - 1] == 0:
                raise ZeroEdgeBand(n)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "lower",
            "size": self.size,
            "q": self.q,
            "bands": [format_scalars(row) for row in self.bands],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BandedLowerTriangular":
        try:
            return cls(int(data["q"]), data["bands"])
        except (KeyError, TypeError, ValueError) as e:
            raise BadShape(f"malformed lower triangular section: {e}") from e


@dataclass(frozen=True)
class BandedN(BandedSection):
    """
    Lower Hessenberg section with d - q subdiagonal bands and unit superdiagonal.

    bands[n][k] = alpha_{n,n-k} for k = 0..min(n, d - q). With q = d this is
    the upper bidiagonal U whose diagonal must not vanish.
    """

    d: int
    q: int
    bands: Bands

    def __post_init__(self) -> None:
        if not 0 <= self.q <= self.d:
            raise BadShape(f"q must lie in 0..{self.d}, got {self.q}")
        object.__setattr__(self, "bands", _freeze_bands(self.bands))
        width = self.d - self.q
        _check_row_lengths(self.bands, width, 1, "N")
        for n in range(width, len(self.bands)):
            if self.bands[n][width] == 0:
                raise ZeroEdgeBand(n)

    @property
    def size(self) -> int:
        return len(self.bands)

    @property
    def upper(self) -> int:
        return 1

    @property
    def lower(self) -> int:
        return self.d - self.q

    def entry(self, i: int, j: int) -> Fraction:
        if j == i + 1:
            return ONE
        k = i - j
        if 0 <= k <= min(i, self.d - self.q):
            return self.bands[i][k]
        return ZERO

    def diagonal(self) -> List[Fraction]:
        return [row[0] for row in self.bands]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "n",
            "size": self.size,
            "d": self.d,
            "q": self.q,
            "bands": [format_scalars(row) for row in self.bands],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BandedN":
        try:
            return cls(int(data["d"]), int(data["q"]), data["bands"])
        except (KeyError, TypeError, ValueError) as e:
            raise BadShape(f"malformed N section: {e}") from e


@dataclass(frozen=True)
class DenseSection(BandedSection):
    """Exact product block, still usable as a banded operand."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    upper_reach: int
    lower_reach: int

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def upper(self) -> int:
        return self.upper_reach

    @property
    def lower(self) -> int:
        return self.lower_reach

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]


def banded_multiply(a: BandedSection, b: BandedSection, window: int) -> DenseSection:
    """
    Leading ``window`` x ``window`` block of the infinite product a * b.

    Entry (i, j) sums over k <= i + a.upper, so the block is exact as long
    as the window plus both superdiagonal reaches fits in both sections.

    Args:
        a: Left factor section
        b: Right factor section
        window: Size of the requested block

    Returns:
        The exact product block

    Raises:
        WindowTooLarge: If truncation would contaminate a requested entry
    """
    limit = min(a.size, b.size) - a.upper - b.upper
    if window < 0 or window > limit:
        raise WindowTooLarge(window, limit)
    rows = []
    for i in range(window):
        row = []
        for j in range(window):
            lo = max(0, i - a.lower, j - b.upper)
            hi = min(i + a.upper, j + b.lower)
            row.append(sum((a.entry(i, k) * b.entry(k, j) for k in range(lo, hi + 1)), ZERO))
        rows.append(tuple(row))
    return DenseSection(tuple(rows), a.upper + b.upper, a.lower + b.lower)


def multiply_chain(factors: Sequence[BandedSection], window: int) -> DenseSection:
    """
    Product of several sections, left to right.

    Each partial product is formed at the largest window its operands
    allow; the result is cut to ``window``.

    Raises:
        WindowTooLarge: If the chain cannot deliver the requested window
    """
    if not factors:
        raise BadShape("empty product")
    product: BandedSection = factors[0]
    if len(factors) == 1:
        if window > product.size:
            raise WindowTooLarge(window, product.size)
        return DenseSection(
            tuple(tuple(r) for r in product.dense(window)), product.upper, product.lower
        )
    for factor in factors[1:]:
        largest = min(product.size, factor.size) - product.upper - factor.upper
        if largest < window:
            raise WindowTooLarge(window, largest)
        product = banded_multiply(product, factor, largest)
    return DenseSection(
        tuple(row[:window] for row in product.rows[:window]), product.upper, product.lower
    )


def safe_window(size: int, d: int) -> int:
    """Window on which every product identity of a size-``size`` section is exact."""
    return size - d
