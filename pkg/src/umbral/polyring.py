"""Exact rationals, sparse multivariate polynomials and truncated power series.

Coefficients are :class:`fractions.Fraction` throughout.  Polynomials live in
named indeterminates; the name ``z`` is reserved for the series variable and is
never accepted as a polynomial indeterminate.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rat = Fraction

SERIES_VAR = "z"

# canonical printing order; names not listed sort after these, naturally
REGISTRY = ("x", "y", "w", "t", "s", "v", "n", "lam", "p")

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class ReservedVariableError(ValueError):
    pass


class DivisorNotUnit(ArithmeticError):
    pass


class BadConstantTerm(ValueError):
    pass


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted on exact paths")
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def rat_str(q: Fraction) -> str:
    return str(q)


def _natural_key(name: str):
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.findall(r"\d+|\D+", name))


def var_rank(name: str):
    if name in REGISTRY:
        return (0, REGISTRY.index(name), ())
    return (1, 0, _natural_key(name))


def check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"invalid indeterminate name {name!r}")
    if name == SERIES_VAR:
        raise ReservedVariableError("'z' is reserved for the series variable")
    return name


# A monomial is a tuple of (name, exponent) pairs sorted by name, exponents > 0.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Immutable sparse polynomial over the rationals.

    >>> x, t = Poly.var("x"), Poly.var("t")
    >>> str((x + t) * (x - t))
    'x^2 - t^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self._terms = clean
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        c = rat(c)
        return cls({(): c}) if c else ZERO

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((check_name(name), 1),): Fraction(1)})

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    # predicates -------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(name, 0) for m in self._terms)

    # arithmetic -------------------------------------------------------

    def _add(self, other: "Poly", sign: int) -> "Poly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + (c if sign > 0 else -c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out)

    def __add__(self, other):
        other = as_poly(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_poly(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other, -1)

    def __rsub__(self, other):
        other = as_poly(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other._add(self, -1)

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return ZERO
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        other = as_poly(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and () in b:
            return self * b[()]
        if len(a) == 1 and () in a:
            return other * a[()]
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational only."""
        if isinstance(other, Poly):
            other = other.constant_value()
        q = rat(other)
        if not q:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / q)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus and substitution ---------------------------------------

    def diff(self, name: str) -> "Poly":
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if not e:
                continue
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            mm = tuple(sorted(d.items()))
            out[mm] = out.get(mm, 0) + c * e
        return Poly._raw({m: c for m, c in out.items() if c})

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute polynomials (or rationals) for indeterminates."""
        images = {k: as_poly(v) for k, v in mapping.items()}
        powers: dict = {}

        def power(name, e):
            key = (name, e)
            if key not in powers:
                powers[key] = images[name] ** e
            return powers[key]

        result = ZERO
        for m, c in self._terms.items():
            keep = []
            term = Poly.const(c)
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
                else:
                    keep.append((v, e))
            if keep:
                term = term * Poly._raw({tuple(keep): Fraction(1)})
            result = result + term
        return result

    def coefficients_in(self, name: str) -> dict:
        """Split into ``{exponent: coefficient polynomial}`` with respect to ``name``."""
        out: dict = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.pop(name, 0)
            out.setdefault(e, {})[tuple(sorted(d.items()))] = c
        return {e: Poly._raw(t) for e, t in out.items()}

    def evaluate(self, values: Mapping[str, object]):
        """Numeric evaluation; values may be floats or numpy arrays."""
        total = 0
        for m, c in self._terms.items():
            term = float(c)
            for v, e in m:
                term = term * values[v] ** e
            total = total + term
        return total

    def evaluate_exact(self, values: Mapping[str, object]) -> Fraction:
        p = self.subs(values)
        return p.constant_value()

    # presentation -----------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order over the registry order."""
        names = sorted(self.variables(), key=var_rank)

        def key(item):
            d = dict(item[0])
            vec = tuple(-d.get(v, 0) for v in names)
            return (-sum(d.values()), vec)

        return sorted(self._terms.items(), key=key)

    @staticmethod
    def _mono_str(m: Monomial, sep="*", latex=False) -> str:
        parts = []
        for v, e in sorted(m, key=lambda ve: var_rank(ve[0])):
            if e == 1:
                parts.append(v)
            elif latex:
                parts.append(f"{v}^{{{e}}}")
            else:
                parts.append(f"{v}^{e}")
        return sep.join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = self._mono_str(m)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def latex(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = self._mono_str(m, sep=" ", latex=True)
            if a.denominator == 1:
                num = str(a.numerator)
            else:
                num = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            if not mono:
                body = num
            elif a == 1:
                body = mono
            else:
                body = f"{num} {mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def to_json(self) -> dict:
        return {self._mono_str(m) or "1": rat_str(c) for m, c in self.sorted_terms()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "Poly":
        result = ZERO
        for mono, c in data.items():
            result = result + parse_poly(mono) * rat(c)
        return result


ZERO = Poly._raw({})
ONE = Poly._raw({(): Fraction(1)})


def as_poly(value, strict: bool = True):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.const(value)
    if isinstance(value, str):
        return parse_poly(value)
    if strict:
        raise TypeError(f"cannot convert {type(value).__name__} to Poly")
    return NotImplemented


def variables(*names: str) -> tuple:
    return tuple(Poly.var(n) for n in names)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str) -> Poly:
    """Parse the canonical text form, e.g. ``"3/2*x^2*t - t + 1"``.

    Only sums of signed products of rationals and powers of names are
    accepted, which is exactly what ``str(Poly)`` emits.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    result = ZERO
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"cannot parse polynomial {text!r}")
        first = False
        term = ONE
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"cannot parse polynomial {text!r}")
            if factor[0].isdigit():
                term = term * rat(factor)
            else:
                name, _, e = factor.partition("^")
                term = term * Poly.var(name.strip()) ** (int(e) if e else 1)
        result = result + (-term if sign == "-" else term)
        pos = m.end()
    return result


# ---------------------------------------------------------------------------
# truncated formal power series


class Series:
    """Truncated power series ``c_0 + c_1 z + ... + c_N z^N`` with Poly coefficients.

    Arithmetic is exact modulo ``z^(N+1)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_poly(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series([" + ", ".join(str(c) for c in self.coeffs) + "])"

    # constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "Series":
        cs = list(coeffs)[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        return cls(cs)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls.from_coeffs([c], order)

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def exp_z(cls, order: int, scale=1) -> "Series":
        """``exp(scale * z)``; ``scale`` may be a polynomial."""
        c = as_poly(scale)
        out, term = [], ONE
        for k in range(order + 1):
            out.append(term)
            term = term * c / (k + 1)
        return cls(out)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    # arithmetic --------------------------------------------------------

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError("series arithmetic needs two series")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.order)
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return Series.constant(other, self.order) - self

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = as_poly(other)
            return Series([a * c for a in self.coeffs])
        self._check(other)
        a, b, N = self.coeffs, other.coeffs, self.order
        out = []
        for n in range(N + 1):
            acc = ZERO
            for k in range(n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k]
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return Series([c / other for c in self.coeffs])
        return series_div(self, other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("use series_pow for non-integer exponents")
        result = Series.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by ``z^k``; the first ``k`` coefficients must vanish. Loses ``k`` orders."""
        if any(self.coeffs[:k]):
            raise BadConstantTerm(f"series is not divisible by z^{k}")
        return Series(self.coeffs[k:])

    def truncate(self, order: int) -> "Series":
        return Series.from_coeffs(self.coeffs, order)

    def scale_z(self, c) -> "Series":
        """Substitute ``z -> c z``."""
        c = as_poly(c)
        out, factor = [], ONE
        for a in self.coeffs:
            out.append(a * factor)
            factor = factor * c
        return Series(out)

    def derivative(self) -> "Series":
        """Formal derivative; loses one order."""
        return Series([self.coeffs[k] * k for k in range(1, len(self.coeffs))] or [ZERO])


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_div(a: Series, b: Series) -> Series:
    """Exact quotient ``a / b``.

    The divisor's constant term must be a nonzero rational.  When ``b`` starts
    at ``z^k`` and ``a`` vanishes to the same order, the common ``z^k`` is
    cancelled first and the quotient has order ``N - k``.
    """
    a._check(b)
    k = b.valuation()
    if k > b.order:
        raise DivisorNotUnit("division by the zero series")
    if k:
        if a.valuation() < k:
            raise DivisorNotUnit("divisor has zero constant term")
        a, b = a.shift_down(k), b.shift_down(k)
    if not b.coeffs[0].is_constant():
        raise DivisorNotUnit("divisor constant term is not a rational constant")
    inv0 = 1 / b.coeffs[0].constant_value()
    q: list = []
    for n in range(a.order + 1):
        acc = a.coeffs[n]
        for j in range(1, n + 1):
            if b.coeffs[j] and q[n - j]:
                acc = acc - b.coeffs[j] * q[n - j]
        q.append(acc * inv0)
    return Series(q)


def series_exp(a: Series) -> Series:
    if a.coeffs[0]:
        raise BadConstantTerm("exp needs a zero constant term")
    N = a.order
    b = [ONE]
    ka = [a.coeffs[k] * k for k in range(N + 1)]
    for n in range(1, N + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if ka[k] and b[n - k]:
                acc = acc + ka[k] * b[n - k]
        b.append(acc / n)
    return Series(b)


def series_log(a: Series) -> Series:
    if a.coeffs[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    N = a.order
    b = [ZERO]
    for n in range(1, N + 1):
        acc = ZERO
        for k in range(1, n):
            if b[k] and a.coeffs[n - k]:
                acc = acc + b[k] * a.coeffs[n - k] * k
        b.append(a.coeffs[n] - acc / n)
    return Series(b)


def series_compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(z))`` truncated; ``inner`` must have zero constant term."""
    outer._check(inner)
    if inner.coeffs[0]:
        raise BadConstantTerm("inner series must have zero constant term")
    N = outer.order
    result = Series.constant(outer.coeffs[N], N)
    for k in range(N - 1, -1, -1):
        result = result * inner + outer.coeffs[k]
    return result


def series_pow(base: Series, exponent) -> Series:
    """``base ** exponent`` for a symbolic (polynomial) exponent, ``base[0] == 1``.

    Uses the recurrence ``n b_n = sum_k (e k - (n - k)) a_k b_{n-k}`` that
    follows from ``a b' = e a' b``.
    """
    if base.coeffs[0] != 1:
        raise BadConstantTerm("symbolic power needs constant term 1")
    e = as_poly(exponent)
    a, N = base.coeffs, base.order
    b = [ONE]
    for n in range(1, N + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a[k] and b[n - k]:
                acc = acc + (e * k - (n - k)) * a[k] * b[n - k]
        b.append(acc / n)
    return Series(b)


def series_revert(f: Series) -> Series:
    """Compositional inverse of ``f`` with ``f(0) = 0`` and rational ``f'(0) != 0``.

    Lagrange inversion: ``[z^n] g = (1/n) [w^(n-1)] (w / f(w))^n``.
    """
    if f.coeffs[0]:
        raise BadConstantTerm("reversion needs zero constant term")
    if not f.coeffs[1].is_constant() or not f.coeffs[1]:
        raise DivisorNotUnit("reversion needs a nonzero rational linear coefficient")
    N = f.order
    g = [ZERO]
    if N == 0:
        return Series(g)
    h = f.shift_down(1)  # f / z, order N-1
    inv = series_div(Series.constant(1, N - 1), h)
    power = Series.constant(1, N - 1)
    for n in range(1, N + 1):
        power = power * inv
        g.append(power.coeffs[n - 1] / n)
    return Series(g)


def moments_from_egf(f: Series) -> list:
    """``(1, 1! c_1, 2! c_2, ..., N! c_N)`` for an egf with constant term 1."""
    if f.coeffs[0] != 1:
        raise BadConstantTerm("an umbra's generating function has constant term 1")
    return [c * math.factorial(k) for k, c in enumerate(f.coeffs)]


def egf_from_moments(moments: Sequence) -> Series:
    return Series([as_poly(m) / math.factorial(k) for k, m in enumerate(moments)])


def ogf_to_egf(f: Series) -> list:
    """Coefficients ``k! [z^k] f`` as a list."""
    return [c * math.factorial(k) for k, c in enumerate(f.coeffs)]
