"""Dense exact univariate polynomials over Z and Q.

Coefficients are stored low-to-high with trailing zeros stripped; the zero
polynomial has an empty coefficient tuple and degree -1.  ``IntPolynomial``
carries Python ints, ``RatPolynomial`` carries ``fractions.Fraction``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Union

Scalar = Union[int, Fraction]


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _format_poly(coeffs, var: str = "t") -> str:
    if not coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            tpow = var if k == 1 else f"{var}^{k}"
            body = tpow if mag == 1 else f"{mag}{tpow}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial c_0 + c_1 t + ... + c_d t^d."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _strip(cs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_coefficient(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "IntPolynomial":
        other = _as_int_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        other = _as_int_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        return -(self - other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        other = _as_int_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial([Fraction(c) for c in self.coeffs])

    def __str__(self) -> str:
        return _format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _as_int_poly(x) -> "IntPolynomial":
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


@dataclass(frozen=True)
class RatPolynomial:
    """Polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _strip(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "RatPolynomial":
        other = _as_rat_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPolynomial":
        other = _as_rat_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatPolynomial":
        return -(self - other)

    def __mul__(self, other) -> "RatPolynomial":
        if isinstance(other, (int, Fraction)):
            return RatPolynomial([other * c for c in self.coeffs])
        other = _as_rat_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "RatPolynomial") -> tuple["RatPolynomial", "RatPolynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(self.degree - other.degree + 1, 0)
        rem = list(self.coeffs)
        d, lc = other.degree, other.leading_coefficient
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            c = rem[-1] / lc
            k = len(rem) - 1 - d
            q[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] -= c * oc
            rem.pop()
        return RatPolynomial(q), RatPolynomial(rem)

    def monic(self) -> "RatPolynomial":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        lc = self.leading_coefficient
        return RatPolynomial([c / lc for c in self.coeffs])

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def clear_denominators(self) -> tuple[Fraction, IntPolynomial]:
        """(scale, g) with self = scale * g and g an integer polynomial."""
        if self.is_zero:
            return Fraction(1), IntPolynomial()
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        return Fraction(1, lcm), IntPolynomial(ints)

    def __str__(self) -> str:
        return _format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self.coeffs]!r})"


def _as_rat_poly(x) -> "RatPolynomial":
    if isinstance(x, RatPolynomial):
        return x
    if isinstance(x, IntPolynomial):
        return x.to_rational()
    if isinstance(x, (int, Fraction)):
        return RatPolynomial([Fraction(x)])
    return NotImplemented


def substitute_power(f: IntPolynomial, k: int) -> IntPolynomial:
    """f(t**k): degree multiplies by k, coefficient multiset is preserved."""
    if k < 1:
        raise ValueError("substitution power must be >= 1")
    if k == 1 or f.is_zero:
        return f
    out = [0] * (f.degree * k + 1)
    for i, c in enumerate(f.coeffs):
        out[i * k] = c
    return IntPolynomial(out)


def content_and_primitive(f: IntPolynomial) -> tuple[int, IntPolynomial]:
    """(content, primitive part); the primitive part has positive leading
    coefficient and content * primitive == +-f."""
    if f.is_zero:
        raise ValueError("zero polynomial has no content decomposition")
    content = 0
    for c in f.coeffs:
        content = gcd(content, c)
    sign = 1 if f.leading_coefficient > 0 else -1
    return content, IntPolynomial([sign * c // content for c in f.coeffs])


def primitive_part(f: IntPolynomial) -> IntPolynomial:
    return content_and_primitive(f)[1]


def exact_div(f: IntPolynomial, g: IntPolynomial) -> Optional[IntPolynomial]:
    """Quotient f/g when g divides f exactly in Z[t], else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return IntPolynomial()
    if f.degree < g.degree:
        return None
    fc = list(f.coeffs)
    gc = g.coeffs
    glc = gc[-1]
    dg = g.degree
    q = [0] * (f.degree - dg + 1)
    for i in range(len(q) - 1, -1, -1):
        lead = fc[i + dg]
        if lead % glc:
            return None
        c = lead // glc
        q[i] = c
        if c:
            for j, gj in enumerate(gc):
                fc[i + j] -= c * gj
    if any(fc[:dg]):
        return None
    return IntPolynomial(q)


def pseudo_rem(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f = q*g + r exactly."""
    if g.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    if f.degree < g.degree:
        raise ValueError("pseudo_rem requires deg f >= deg g")
    d = g.leading_coefficient
    e = f.degree - g.degree + 1
    r = f
    while not r.is_zero and r.degree >= g.degree:
        s = IntPolynomial.monomial(r.leading_coefficient, r.degree - g.degree)
        r = r * d - s * g
        e -= 1
    return r * (d**e)


def int_poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """gcd in Z[t] (primitive remainder sequence), positive leading coefficient."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if f.is_zero:
        return content_and_primitive(g)[1] * content_and_primitive(g)[0]
    if g.is_zero:
        return content_and_primitive(f)[1] * content_and_primitive(f)[0]
    cf, a = content_and_primitive(f)
    cg, b = content_and_primitive(g)
    co = gcd(cf, cg)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = pseudo_rem(a, b)
        a, b = b, (content_and_primitive(r)[1] if not r.is_zero else IntPolynomial())
    return a * co


def poly_gcd(f, g) -> RatPolynomial:
    """Monic gcd over Q; accepts integer or rational polynomials."""
    fr, gr = _as_rat_poly(f), _as_rat_poly(g)
    if fr is NotImplemented or gr is NotImplemented:
        raise TypeError("poly_gcd expects polynomials")
    if fr.is_zero and gr.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if fr.is_zero:
        return gr.monic()
    if gr.is_zero:
        return fr.monic()
    _, fi = fr.clear_denominators()
    _, gi = gr.clear_denominators()
    return int_poly_gcd(fi, gi).to_rational().monic()


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant of two nonzero integer polynomials.

    Subresultant remainder sequence; zero exactly when f and g share a root
    in an algebraic closure.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant requires nonzero polynomials")
    a, b = f, g
    s = 1
    if a.degree < b.degree:
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.constant_coefficient**a.degree
    gg, hh = 1, 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = pseudo_rem(a, b)
        a = b
        divisor = gg * hh**delta
        b = IntPolynomial([c // divisor for c in r.coeffs])
        if b.is_zero:
            return 0
        gg = a.leading_coefficient
        if delta > 0:
            hh = gg**delta // hh ** (delta - 1)
        if b.degree == 0:
            break
    return s * b.constant_coefficient**a.degree // hh ** (a.degree - 1)


def reciprocal(f: IntPolynomial) -> IntPolynomial:
    """t**d * f(1/t): the coefficient tuple reversed (raw, no sign change)."""
    if f.is_zero:
        raise ValueError("reciprocal of zero polynomial")
    return IntPolynomial(list(reversed(f.coeffs)))


class PolyParseError(ValueError):
    """Syntax error in a polynomial string; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([t^*+\-/])|(\S))")


def parse_poly(s: str) -> IntPolynomial:
    """Parse ``poly := term (('+'|'-') term)*`` with an optional leading sign.

    ``term := int | int '*'? 't' ('^' uint)? | 't' ('^' uint)?``.  Whitespace
    is free; coefficients must be integers.
    """
    tokens: list[tuple[str, str, int]] = []
    for m in _TOKEN.finditer(s):
        pos = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append((m.group(2), m.group(2), pos))
        else:
            raise PolyParseError(f"unexpected character {m.group(3)!r}", pos)
    idx = 0

    def peek() -> Optional[tuple[str, str, int]]:
        return tokens[idx] if idx < len(tokens) else None

    def take() -> tuple[str, str, int]:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_term(sign: int, out: dict[int, int]) -> None:
        nonlocal idx
        tok = peek()
        if tok is None:
            raise PolyParseError("expected a term", len(s))
        coeff = 1
        has_coeff = False
        if tok[0] == "int":
            take()
            coeff = int(tok[1])
            has_coeff = True
            nxt = peek()
            if nxt is not None and nxt[0] == "/":
                raise PolyParseError("rational coefficient where integer required", nxt[2])
            if nxt is not None and nxt[0] == "*":
                take()
                nxt = peek()
                if nxt is None or nxt[0] != "t":
                    raise PolyParseError("expected 't' after '*'", nxt[2] if nxt else len(s))
        tok = peek()
        if tok is not None and tok[0] == "t":
            take()
            power = 1
            nxt = peek()
            if nxt is not None and nxt[0] == "^":
                take()
                exp = peek()
                if exp is None or exp[0] != "int":
                    raise PolyParseError("expected exponent after '^'", exp[2] if exp else len(s))
                take()
                power = int(exp[1])
            out[power] = out.get(power, 0) + sign * coeff
        elif has_coeff:
            out[0] = out.get(0, 0) + sign * coeff
        else:
            raise PolyParseError(f"expected a term, found {tok[1]!r}", tok[2])

    out: dict[int, int] = {}
    sign = 1
    tok = peek()
    if tok is not None and tok[0] in ("+", "-"):
        take()
        sign = -1 if tok[0] == "-" else 1
    if peek() is None:
        raise PolyParseError("empty polynomial", len(s))
    parse_term(sign, out)
    while (tok := peek()) is not None:
        if tok[0] not in ("+", "-"):
            raise PolyParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        take()
        parse_term(-1 if tok[0] == "-" else 1, out)
    coeffs = [0] * (max(out) + 1)
    for k, c in out.items():
        coeffs[k] = c
    return IntPolynomial(coeffs)
