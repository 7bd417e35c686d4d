"""Exact power series truncated modulo q**(N+1)."""
from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from .. import kernels
from ..errors import NonUnitConstantTerm, ParameterDomain

_SAFE = 1 << 62


def _normalize(arr: np.ndarray) -> np.ndarray:
    """Return arr as int64 when every entry fits comfortably, else as object."""
    if arr.dtype == np.int64:
        if arr.size and int(np.abs(arr).max()) >= _SAFE:
            return np.array([int(v) for v in arr], dtype=object)
        return arr
    if all(-_SAFE < int(v) < _SAFE for v in arr):
        return arr.astype(np.int64)
    return arr


class TruncatedSeries:
    """A power series in q known exactly through q**order.

    Coefficients are arbitrary-precision integers. Binary operations return a
    series valid through the smaller of the two orders.

    >>> s = TruncatedSeries([1, -1], order=4)
    >>> s.inverse().coeffs
    (1, 1, 1, 1, 1)
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = (), order: int | None = None):
        values = [int(v) for v in coeffs]
        if order is None:
            order = max(len(values) - 1, 0)
        if order < 0:
            raise ParameterDomain(f"order must be non-negative, got {order}")
        values = values[: order + 1] + [0] * (order + 1 - len(values))
        self._c = kernels.as_coeffs(values)
        self._c.flags.writeable = False

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TruncatedSeries":
        out = cls.__new__(cls)
        arr = _normalize(arr)
        if arr.flags.writeable:
            arr.flags.writeable = False
        out._c = arr
        return out

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls._wrap(np.zeros(order + 1, dtype=np.int64))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        """coeff * q**exponent, which is zero when exponent > order."""
        if exponent < 0:
            raise ParameterDomain(f"negative exponent {exponent}")
        arr = np.zeros(order + 1, dtype=np.int64 if abs(coeff) < _SAFE else object)
        if exponent <= order:
            arr[exponent] = coeff
        return cls._wrap(arr)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]], order: int) -> "TruncatedSeries":
        """Sum of coeff * q**exp over (exp, coeff) pairs; exponents past order drop."""
        acc = [0] * (order + 1)
        for e, c in terms:
            if e < 0:
                raise ParameterDomain(f"negative exponent {e}")
            if e <= order:
                acc[e] += c
        return cls(acc, order)

    # -- access -----------------------------------------------------------
    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self._c)

    @property
    def array(self) -> np.ndarray:
        """Read-only coefficient array (int64 or object dtype)."""
        return self._c

    def __len__(self) -> int:
        return self._c.shape[0]

    def __iter__(self):
        return (int(v) for v in self._c)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [int(v) for v in self._c[i]]
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} outside 0..{self.order}")
        return int(self._c[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if i == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
            if len(terms) == 8:
                break
        text = " ".join(f"{s} {b}" for s, b in terms).lstrip("+ ") or "0"
        if terms and terms[0][0] == "-":
            text = "-" + text[2:]
        return f"TruncatedSeries({text} + O(q^{self.order + 1}))"

    # -- ring operations --------------------------------------------------
    def _align(self, other: "TruncatedSeries"):
        n = min(self.order, other.order) + 1
        return self._c[:n], other._c[:n]

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.order, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._align(other)
        return TruncatedSeries._wrap(a + b)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self._c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.order, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._align(other)
        return TruncatedSeries._wrap(a - b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            k = int(other)
            if self._c.dtype == np.int64 and abs(k) < (1 << 31) and (
                not self._c.size or int(np.abs(self._c).max()) < (1 << 31)
            ):
                return TruncatedSeries._wrap(self._c * k)
            return TruncatedSeries([int(v) * k for v in self._c], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries._wrap(kernels.convolve(self._c, other._c, order))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q**e, keeping the order."""
        if e < 0:
            raise ParameterDomain(f"shift exponent must be non-negative, got {e}")
        arr = np.zeros_like(self._c) if self._c.dtype == np.int64 else np.array(
            [0] * len(self._c), dtype=object
        )
        if e <= self.order:
            arr[e:] = self._c[: self.order + 1 - e]
        return TruncatedSeries._wrap(arr)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ParameterDomain(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries._wrap(self._c[: order + 1].copy())

    def inverse(self) -> "TruncatedSeries":
        a0 = int(self._c[0])
        if abs(a0) != 1:
            raise NonUnitConstantTerm(f"constant term is {a0}, need +1 or -1")
        return TruncatedSeries._wrap(kernels.invert(self._c, self.order))

    # -- sign scans -------------------------------------------------------
    def first_negative(self, start: int = 0) -> int | None:
        """Index of the first negative coefficient at or after start."""
        idx = np.nonzero(self._c[start:] < 0)[0]
        return None if idx.size == 0 else start + int(idx[0])

    def first_positive(self, start: int = 0) -> int | None:
        idx = np.nonzero(self._c[start:] > 0)[0]
        return None if idx.size == 0 else start + int(idx[0])

    def is_nonnegative(self) -> bool:
        return self.first_negative() is None

    def is_nonpositive(self) -> bool:
        return self.first_positive() is None

    def support(self) -> list[int]:
        return [int(i) for i in np.nonzero(self._c != 0)[0]]

    # -- serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        return cls([int(c) for c in data["coeffs"]], int(data["order"]))

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_dict(json.loads(text))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def shift(a: TruncatedSeries, e: int) -> TruncatedSeries:
    return a.shift(e)


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    return a.truncate(order)


def inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def series_sum(items: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(order)
    for s in items:
        acc = acc + s
    return acc
