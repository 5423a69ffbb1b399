"""Exact polynomial arithmetic.

Two representations are provided:

* :class:`UniPoly` -- dense univariate polynomial with ``Fraction``
  coefficients stored low-to-high; the zero polynomial has no coefficients.
* :class:`TriPoly` -- sparse polynomial in ``x, y, z`` with ``int``
  coefficients keyed by exponent triples ``(a, b, c)``.

Both are immutable values.  The argument shift ``z -> z + t`` is done by
Horner re-expansion, i.e. ``p(z + t) = (...(c_d (z+t) + c_{d-1})(z+t) + ...)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactnum import format_exact

__all__ = [
    "UniPoly",
    "TriPoly",
    "NEG_INF_DEGREE",
    "uni_add",
    "uni_sub",
    "uni_mul",
    "uni_scale",
    "uni_shift",
    "uni_eval",
    "tri_add",
    "tri_sub",
    "tri_mul",
    "tri_shift_z",
    "tri_eval",
    "tri_specialize_z",
    "render_descending",
    "render_factored",
]

NEG_INF_DEGREE = float("-inf")


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _shift_coeffs(coeffs: Sequence, t) -> list:
    """Coefficients of p(z + t) given those of p(z), both low-to-high."""
    out: list = []
    for c in reversed(coeffs):
        # out <- out * (z + t) + c
        nxt = [0] * (len(out) + 1)
        for i, a in enumerate(out):
            nxt[i + 1] += a
            nxt[i] += a * t
        nxt[0] += c
        out = nxt
    return _trim(out)


class UniPoly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c: tuple[Fraction, ...] = tuple(_trim([Fraction(c) for c in coeffs]))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_descending(cls, coeffs: Iterable) -> "UniPoly":
        return cls(list(coeffs)[::-1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF_DEGREE

    def is_zero(self) -> bool:
        return not self._c

    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"polynomial has non-integral coefficients: {self!r}")
        return [int(c) for c in self._c]

    def __add__(self, other):
        other = _as_uni(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self._c])

    def __sub__(self, other):
        other = _as_uni(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self._c])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._c or not other._c:
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = UniPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    def shift(self, t=1) -> "UniPoly":
        """p(z + t)."""
        return UniPoly(_shift_coeffs(self._c, Fraction(t)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"UniPoly({[format_exact(c) for c in self._c]})"

    def __str__(self):
        return render_descending(self)


def _as_uni(p):
    if isinstance(p, UniPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return UniPoly([p])
    return NotImplemented


def uni_add(p: UniPoly, q: UniPoly) -> UniPoly:
    return p + q


def uni_sub(p: UniPoly, q: UniPoly) -> UniPoly:
    return p - q


def uni_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    return p * q


def uni_scale(p: UniPoly, s) -> UniPoly:
    return p * Fraction(s)


def uni_shift(p: UniPoly, t=1) -> UniPoly:
    """Return q with q(z) = p(z + t); ``t=-1`` gives the inverse shift."""
    return p.shift(t)


def uni_eval(p: UniPoly, t) -> Fraction:
    return p(Fraction(t))


class TriPoly:
    """Sparse polynomial in x, y, z with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[tuple[int, int, int], int] = {}
        for exps, c in (terms or {}).items():
            if c:
                a, b, e = exps
                if min(a, b, e) < 0:
                    raise ValueError(f"negative exponent {exps}")
                clean[(int(a), int(b), int(e))] = _int_coeff(c)
        self._terms = clean

    @classmethod
    def constant(cls, c: int) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "TriPoly":
        return cls({{"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[name]: 1})

    @property
    def terms(self) -> dict[tuple[int, int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self):
        if not self._terms:
            return NEG_INF_DEGREE
        return max(sum(k) for k in self._terms)

    def degree_in(self, var: str):
        if not self._terms:
            return NEG_INF_DEGREE
        i = "xyz".index(var)
        return max(k[i] for k in self._terms)

    def __add__(self, other):
        other = _as_tri(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_tri(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TriPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, TriPoly):
            return NotImplemented
        out: dict[tuple[int, int, int], int] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                out[k] = out.get(k, 0) + u * v
        return TriPoly(out)

    __rmul__ = __mul__

    def shift_z(self) -> "TriPoly":
        """p(x, y, z + 1)."""
        by_xy: dict[tuple[int, int], list[int]] = {}
        for (a, b, c), v in self._terms.items():
            row = by_xy.setdefault((a, b), [])
            row.extend([0] * (c + 1 - len(row)))
            row[c] += v
        out: dict[tuple[int, int, int], int] = {}
        for (a, b), row in by_xy.items():
            for c, v in enumerate(_shift_coeffs(row, 1)):
                out[(a, b, c)] = v
        return TriPoly(out)

    def swap_xy(self) -> "TriPoly":
        return TriPoly({(b, a, c): v for (a, b, c), v in self._terms.items()})

    def __call__(self, x, y, z) -> Fraction:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        return sum((v * x**a * y**b * z**c for (a, b, c), v in self._terms.items()), Fraction(0))

    def specialize_z(self, x, y) -> UniPoly:
        """The univariate polynomial z -> p(x, y, z)."""
        x, y = Fraction(x), Fraction(y)
        coeffs: list[Fraction] = []
        for (a, b, c), v in self._terms.items():
            coeffs.extend([Fraction(0)] * (c + 1 - len(coeffs)))
            coeffs[c] += v * x**a * y**b
        return UniPoly(coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TriPoly.constant(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], int]]:
        """Terms by descending total degree, then lexicographically descending exponents."""
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __repr__(self):
        return f"TriPoly({dict(self.sorted_terms())})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), v in self.sorted_terms():
            mono = "".join(
                name if e == 1 else f"{name}^{e}" for name, e in (("x", a), ("y", b), ("z", c)) if e
            )
            if not mono:
                body = str(abs(v))
            elif abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _int_coeff(c) -> int:
    if isinstance(c, int):
        return c
    f = Fraction(c)
    if f.denominator != 1:
        raise ValueError(f"TriPoly coefficients must be integers, got {c}")
    return int(f)


def _as_tri(p):
    if isinstance(p, TriPoly):
        return p
    if isinstance(p, int):
        return TriPoly.constant(p)
    return NotImplemented


def tri_add(p: TriPoly, q: TriPoly) -> TriPoly:
    return p + q


def tri_sub(p: TriPoly, q: TriPoly) -> TriPoly:
    return p - q


def tri_mul(p: TriPoly, q: TriPoly) -> TriPoly:
    return p * q


def tri_shift_z(p: TriPoly) -> TriPoly:
    return p.shift_z()


def tri_eval(p: TriPoly, x, y, z) -> Fraction:
    return p(x, y, z)


def tri_specialize_z(p: TriPoly, x, y) -> UniPoly:
    return p.specialize_z(x, y)


# -- text rendering ---------------------------------------------------------

def _descending_terms(coeffs: Sequence[Fraction], var: str) -> str:
    pieces = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        mag_s = format_exact(mag)
        if i == 0:
            body = mag_s
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag_s}{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += sign + body
    return out


def render_descending(p: UniPoly, var: str = "z") -> str:
    """E.g. ``24z^3+60z^2+54z+17``."""
    return _descending_terms(p.coeffs, var)


def render_factored(p: UniPoly, var: str = "n") -> str:
    """Pull out a factor of ``var`` when the constant term vanishes, e.g. ``(6n^2-8n+3)n``."""
    c = p.coeffs
    if len(c) < 2 or c[0] != 0:
        return _descending_terms(c, var)
    inner = c[1:]
    if len(inner) == 1:
        return _descending_terms(c, var)
    return f"({_descending_terms(inner, var)}){var}"
