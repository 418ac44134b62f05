"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored in the power basis {zeta_N^k : 0 <= k < phi(N)} reduced
modulo the N-th cyclotomic polynomial, with Fraction coefficients.  The
representation is canonical: two values at the same level are equal iff
their coefficient vectors are equal.  Mixed-level arithmetic lifts both
operands to level lcm(N_a, N_b); levels are never lowered automatically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CycNum",
    "phi",
    "cyclotomic_polynomial",
    "root_of_unity",
    "rational",
    "zero",
    "one",
]


def phi(n: int) -> int:
    """Euler totient."""
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Exact division of integer polynomials; den must be monic.
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * max(1, len(num) - deg_d)
    while len(num) - 1 >= deg_d and any(num):
        shift = len(num) - 1 - deg_d
        coef = num[-1]
        quot[shift] = coef
        for i, c in enumerate(den):
            num[shift + i] -= coef * c
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_n, computed by dividing x^n - 1 by
    the product of all lower-index cyclotomic polynomials dividing it."""
    if n < 1:
        raise ValueError("level must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
            if any(rem):
                raise ArithmeticError("cyclotomic division left a remainder")
            num = quot
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^j mod Phi_n for 0 <= j < max(2*phi(n) - 1, n), each as a vector of
    length phi(n).  Covers every exponent produced by one multiplication of
    reduced values and by level lifting."""
    d = phi(n)
    ph = cyclotomic_polynomial(n)
    top = max(2 * d - 1, n)
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for j in range(top):
        rows.append(tuple(cur))
        nxt = [Fraction(0)] + cur[: d - 1]
        lead = cur[d - 1]
        if lead:
            for i in range(d):
                nxt[i] -= lead * ph[i]
        cur = nxt
    return tuple(rows)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class CycNum:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        if level < 1:
            raise ValueError("level must be >= 1")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi(level):
            raise ValueError("coefficient vector must have length phi(level)")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CycNum is immutable")

    # -- construction helpers --------------------------------------------

    @staticmethod
    def rational(q, level: int = 1) -> "CycNum":
        q = Fraction(q)
        coeffs = [Fraction(0)] * phi(level)
        coeffs[0] = q
        return CycNum(level, coeffs)

    @staticmethod
    def zeta(level: int, k: int = 1) -> "CycNum":
        k %= level
        table = _power_table(level)
        return CycNum(level, table[k])

    # -- structure --------------------------------------------------------

    def lift(self, level: int) -> "CycNum":
        """Embed into Q(zeta_level); requires self.level | level."""
        if level == self.level:
            return self
        if level % self.level != 0:
            raise ValueError(f"cannot lift level {self.level} into level {level}")
        step = level // self.level
        table = _power_table(level)
        d = phi(level)
        out = [Fraction(0)] * d
        for e, c in enumerate(self.coeffs):
            if c:
                row = table[e * step]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycNum(level, out)

    def _common(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        if self.level == other.level:
            return self, other
        lv = _lcm(self.level, other.level)
        return self.lift(lv), other.lift(lv)

    @staticmethod
    def _coerce(x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum.rational(x)
        return NotImplemented

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return CycNum(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        d = len(a.coeffs)
        if d == 1:
            return CycNum(a.level, (a.coeffs[0] * b.coeffs[0],))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(a.level)
        out = list(conv[:d])
        for j in range(d, 2 * d - 1):
            c = conv[j]
            if c:
                row = table[j]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycNum(a.level, out)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0], self.level)
        ph = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        g, s = _poly_xgcd(list(self.coeffs), ph)
        if len(g) != 1 or g[0] == 0:
            raise ArithmeticError("element not invertible modulo Phi_N")
        scale = 1 / g[0]
        d = phi(self.level)
        out = [Fraction(0)] * d
        table = _power_table(self.level)
        for e, c in enumerate(s):
            if c:
                row = table[e]
                for i in range(d):
                    if row[i]:
                        out[i] += scale * c * row[i]
        return CycNum(self.level, out)

    def __truediv__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.inv() ** (-n)
        result = CycNum.rational(1, self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # values compare across levels; do not use as dict keys

    # -- Galois / star structure -------------------------------------------

    def galois(self, j: int) -> "CycNum":
        """Apply zeta ->  zeta^j; requires gcd(j, N) = 1."""
        n = self.level
        if gcd(j, n) != 1:
            raise ValueError("galois exponent must be coprime to the level")
        d = phi(n)
        table = _power_table(n)
        out = [Fraction(0)] * d
        for e, c in enumerate(self.coeffs):
            if c:
                row = table[(e * j) % n]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycNum(n, out)

    def conj(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^(N-1)."""
        if self.level == 1:
            return self
        return self.galois(self.level - 1)

    def is_modulus_one(self) -> bool:
        return (self * self.conj()).is_one()

    def root_of_unity_order(self, bound: int | None = None) -> int | None:
        """Multiplicative order if self is a root of unity, else None.

        Roots of unity inside Q(zeta_N) all have order dividing N (N even)
        or 2N (N odd), so only that bound is probed unless overridden.
        """
        n = self.level
        if bound is None:
            bound = n if n % 2 == 0 else 2 * n
        if self.is_zero():
            return None
        acc = self
        for k in range(1, bound + 1):
            if acc.is_one():
                return k
            acc = acc * self
        return None

    # -- output -------------------------------------------------------------

    def approx(self, precision: int = 15):
        """Numeric value at the principal embedding zeta_N -> e^(2*pi*i/N).

        Diagnostics only; exact decisions never go through this.
        """
        import mpmath

        with mpmath.workdps(precision):
            z = mpmath.e ** (2j * mpmath.pi / self.level)
            acc = mpmath.mpc(0)
            for e in range(len(self.coeffs) - 1, -1, -1):
                acc = acc * z + mpmath.mpf(self.coeffs[e].numerator) / self.coeffs[e].denominator
            return complex(acc)

    def literal(self) -> str:
        """Canonical literal: rational, or a sum of c*z^k@N terms."""
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z^{e}@{self.level}")
            elif c == -1:
                parts.append(f"-z^{e}@{self.level}")
            else:
                parts.append(f"{c}*z^{e}@{self.level}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"CycNum({self.literal()})"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    if not any(den):
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        coef = num[-1] * inv_lead
        q[shift] += coef
        for i, c in enumerate(den):
            num[shift + i] -= coef * c
        _poly_trim(num)
    return _poly_trim(q), num


def _poly_xgcd(a: list[Fraction], b: list[Fraction]):
    """Return (g, s) with s*a = g mod b and g = gcd(a, b) as polynomials."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while any(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = _poly_mul(q, s1)
        s_new = _poly_sub(s0, qs)
        s0, s1 = s1, s_new
    return r0, s0


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


# -- module-level conveniences ------------------------------------------------


def root_of_unity(k: int, n: int) -> CycNum:
    """zeta_n^k in canonical form."""
    return CycNum.zeta(n, k)


def rational(q, level: int = 1) -> CycNum:
    return CycNum.rational(q, level)


def zero(level: int = 1) -> CycNum:
    return CycNum.rational(0, level)


def one(level: int = 1) -> CycNum:
    return CycNum.rational(1, level)
