"""
Exact polynomials in q with integer coefficients, q-integers and
q-factorials, the q-Stirling numbers S_q(n, k) of the second kind, and
generating functions of statistics over partition families.

S_q satisfies

    S_q(n, k) = q^(k-1) S_q(n-1, k-1) + [k]_q S_q(n-1, k)

with S_q(n, k) = delta_{n,k} whenever n = 0 or k = 0, where
[k]_q = 1 + q + ... + q^(k-1).  Its lowest-degree term is q^binom(k,2),
so dividing by that power (``shifted_stirling``) stays polynomial.

Text format: ascending exponents joined by `` + ``, zero terms omitted,
unit coefficients omitted, e.g. ``3*q + 3*q^2 + q^3``.  JSON format:
``{"coeffs": {"1": 3, "2": 3, "3": 1}}``.  Internally coefficients live
in a dense tuple; the sparse mapping appears only at the boundary.
"""

from __future__ import annotations

import re
import threading
from typing import Callable, Iterable, Mapping

from . import core


class QPolynomial:
    """Immutable polynomial in q with int coefficients.

    >>> (q_int(2) * q_int(3)).text()
    '1 + 2*q + 2*q^2 + q^3'
    >>> QPolynomial.parse("3*q + q^3").coefficient(3)
    1
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        dense = list(coeffs)
        while dense and dense[-1] == 0:
            dense.pop()
        for c in dense:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an int")
        self._coeffs: tuple[int, ...] = tuple(dense)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "QPolynomial":
        if not mapping:
            return cls.zero()
        exps = list(mapping)
        if min(exps) < 0:
            raise ValueError(f"negative exponent {min(exps)}")
        dense = [0] * (max(exps) + 1)
        for e, c in mapping.items():
            dense[e] = c
        return cls(dense)

    # -- views ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def to_dict(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self._coeffs) if c}

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self._coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, d: int) -> "QPolynomial":
        """Multiply by q^d."""
        if d < 0:
            raise ValueError("shift exponent must be non-negative")
        if self.is_zero:
            return self
        return QPolynomial((0,) * d + self._coeffs)

    def divide_by_q_power(self, d: int) -> "QPolynomial":
        """Exact division by q^d; raises if a low coefficient is non-zero."""
        if d < 0:
            raise ValueError("power must be non-negative")
        if self.is_zero:
            return self
        if any(self._coeffs[:d]):
            bad = next(e for e, c in enumerate(self._coeffs) if c)
            raise ValueError(f"not divisible by q^{d}: non-zero coefficient at q^{bad}")
        return QPolynomial(self._coeffs[d:])

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- formats -------------------------------------------------------

    def text(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            qpart = "q" if e == 1 else f"q^{e}"
            if c == 1:
                terms.append(qpart)
            elif c == -1:
                terms.append(f"-{qpart}")
            else:
                terms.append(f"{c}*{qpart}")
        return " + ".join(terms)

    _TERM = re.compile(
        r"^\s*(?:(?P<const>-?\d+)|(?:(?P<coef>-?\d+)\s*\*\s*)?q(?:\^(?P<exp>\d+))?)\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> "QPolynomial":
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty polynomial text")
        if stripped == "0":
            return cls.zero()
        coeffs: dict[int, int] = {}
        for term in stripped.split("+"):
            m = cls._TERM.match(term)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {term.strip()!r}")
            if m.group("const") is not None:
                e, c = 0, int(m.group("const"))
            else:
                c = int(m.group("coef")) if m.group("coef") else 1
                e = int(m.group("exp")) if m.group("exp") else 1
            coeffs[e] = coeffs.get(e, 0) + c
        return cls.from_dict(coeffs)

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(e): c for e, c in self.to_dict().items()}}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "QPolynomial":
        coeffs = data.get("coeffs", {})
        return cls.from_dict({int(e): int(c) for e, c in coeffs.items()})

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"QPolynomial({self.text()!r})"


def q_int(k: int) -> QPolynomial:
    """[k]_q = 1 + q + ... + q^(k-1), with [0]_q = 0."""
    if k < 0:
        raise ValueError("q-integer of a negative number")
    return QPolynomial((1,) * k)


def q_factorial(k: int) -> QPolynomial:
    """[k]_q! as a product of q-integers; the empty product is 1."""
    if k < 0:
        raise ValueError("q-factorial of a negative number")
    out = QPolynomial.one()
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


_STIRLING_CACHE: dict[tuple[int, int], QPolynomial] = {}
_STIRLING_LOCK = threading.Lock()


def q_stirling(n: int, k: int) -> QPolynomial:
    """S_q(n, k) by the two-term recurrence, memoized by (n, k)."""
    if n < 0 or k < 0:
        raise ValueError("q-Stirling numbers need n, k >= 0")
    if k > n:
        return QPolynomial.zero()
    try:
        return _STIRLING_CACHE[(n, k)]
    except KeyError:
        pass
    with _STIRLING_LOCK:
        for m in range(0, n + 1):
            for j in range(0, min(m, k) + 1):
                if (m, j) in _STIRLING_CACHE:
                    continue
                if m == 0 or j == 0:
                    val = QPolynomial.one() if m == j else QPolynomial.zero()
                elif j > m:
                    val = QPolynomial.zero()
                else:
                    left = _STIRLING_CACHE.get((m - 1, j - 1), QPolynomial.zero())
                    right = _STIRLING_CACHE.get((m - 1, j), QPolynomial.zero())
                    val = left.shift(j - 1) + q_int(j) * right
                _STIRLING_CACHE[(m, j)] = val
        return _STIRLING_CACHE[(n, k)]


def shifted_stirling(n: int, k: int) -> QPolynomial:
    """S_q(n, k) divided by its guaranteed factor q^binom(k,2)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return q_stirling(n, k).divide_by_q_power(k * (k - 1) // 2)


def generating_function(
    family: Iterable[core.Partition],
    statistic: "str | Callable[[core.Partition], int]",
) -> QPolynomial:
    """Sum of q^statistic over the family; zero for an empty family.

    ``statistic`` is a callable or a registered statistic name (see
    ``setpart.stats.resolve_statistic``).  A negative value aborts with
    an error naming the witness partition.
    """
    if isinstance(statistic, str):
        from . import stats

        fn = stats.resolve_statistic(statistic)
    else:
        fn = statistic
    counts: dict[int, int] = {}
    for p in family:
        value = fn(p)
        if value < 0:
            raise ValueError(
                f"statistic is negative ({value}) on partition {p.text()}"
            )
        counts[value] = counts.get(value, 0) + 1
    return QPolynomial.from_dict(counts)
