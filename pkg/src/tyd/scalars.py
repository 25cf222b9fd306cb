"""Exact scalar arithmetic.

The coefficient ring everywhere is Q[hb]: polynomials in the formal
deformation parameter hb with rational coefficients.  Keeping hb formal
means every identity is verified for all values of hb at once; nothing
in this package ever touches floating point.

Rationals are ``fractions.Fraction`` (arbitrary-precision numerator,
positive denominator, always reduced), re-exported as ``Rational``.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class HPoly:
    """A polynomial in hb with Rational coefficients.

    Stored as a map exponent -> coefficient with no zero values.
    Instances are immutable by convention: no method mutates self,
    and the internal map must not be modified after construction.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v != 0:
                    if e < 0:
                        raise ValueError("negative hb exponent: %r" % (e,))
                    c[e] = v
        self.c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "HPoly":
        return HPoly()

    @staticmethod
    def one() -> "HPoly":
        return HPoly({0: _ONE})

    @staticmethod
    def const(q) -> "HPoly":
        return HPoly({0: Fraction(q)})

    @staticmethod
    def hbar(power: int = 1, coeff=1) -> "HPoly":
        return HPoly({power: Fraction(coeff)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "HPoly") -> "HPoly":
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, _ZERO) + v
            if w == 0:
                c.pop(e, None)
            else:
                c[e] = w
        out = HPoly.__new__(HPoly)
        out.c = c
        return out

    def __sub__(self, other: "HPoly") -> "HPoly":
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, _ZERO) - v
            if w == 0:
                c.pop(e, None)
            else:
                c[e] = w
        out = HPoly.__new__(HPoly)
        out.c = c
        return out

    def __neg__(self) -> "HPoly":
        out = HPoly.__new__(HPoly)
        out.c = {e: -v for e, v in self.c.items()}
        return out

    def __mul__(self, other: "HPoly") -> "HPoly":
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, _ZERO) + v1 * v2
                if w == 0:
                    c.pop(e, None)
                else:
                    c[e] = w
        out = HPoly.__new__(HPoly)
        out.c = c
        return out

    def scale(self, q) -> "HPoly":
        q = Fraction(q)
        if q == 0:
            return HPoly()
        out = HPoly.__new__(HPoly)
        out.c = {e: v * q for e, v in self.c.items()}
        return out

    def eval_at(self, x) -> Fraction:
        """Evaluate at hb = x, exactly."""
        x = Fraction(x)
        total = _ZERO
        for e, v in self.c.items():
            total += v * x**e
        return total

    # -- predicates / protocol ----------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        return isinstance(other, HPoly) and self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __repr__(self):
        return "HPoly(%s)" % (render_hpoly(self),)


def render_hpoly(p: HPoly) -> str:
    """Canonical text form, terms in descending exponent order.

    Examples: "1/4*hb^2 - 2*hb", "hb", "-3", "0".
    """
    if not p.c:
        return "0"
    parts = []
    for e in sorted(p.c, reverse=True):
        v = p.c[e]
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = str(a)
        else:
            pow_txt = "hb" if e == 1 else "hb^%d" % e
            body = pow_txt if a == 1 else "%s*%s" % (a, pow_txt)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += " %s %s" % (sign, body)
    return text


def render_rational(q: Fraction) -> str:
    return str(q)
