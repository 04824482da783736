"""Exact polynomials in q and x, Gaussian rationals, and Bareiss determinants.

``BiPoly`` is the workhorse: a sparse map ``(deg_q, deg_x) -> int``.  Products
and exact quotients of large operands go through Kronecker substitution, i.e.
both polynomials are packed into one Python integer, multiplied or divided by
the big-int routines, and unpacked again.  Small operands use the schoolbook
convolution directly.

``UPoly`` is a univariate polynomial in x whose coefficients are ints,
``Fraction`` or ``GaussianRational`` values.  It is what you get after fixing q.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import BadQLiteral, NotDivisible

try:  # optional: GMP division is subquadratic, CPython's is not
    import gmpy2
except ImportError:  # pragma: no cover
    gmpy2 = None

__all__ = [
    "BiPoly",
    "GaussianRational",
    "UPoly",
    "Q",
    "X",
    "ONE",
    "ZERO",
    "bareiss_det",
    "poly_arith",
    "poly_exact_div",
    "poly_eval",
    "poly_substitute_x",
    "parse_scalar",
    "normalize_scalar",
    "split_integer_roots",
]


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussianRational:
    """``re + im*i`` with both parts exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return cls(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (GaussianRational(1) / self) ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"


_Q_LITERAL = re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?\d+(?:/\d+)?)(?:(?P<isign>[+-])(?P<im>\d+(?:/\d+)?)?i)?
      | (?P<pure>[+-]?(?:\d+(?:/\d+)?)?)i
    )\s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str):
    """Parse ``"3"``, ``"-1/2"``, ``"2i"``, ``"-i"`` or ``"1/2+3i"`` exactly.

    Decimal literals are rejected so that no float ever sneaks in.
    """
    m = _Q_LITERAL.match(text)
    if not m:
        raise BadQLiteral(f"not an exact rational or Gaussian rational: {text!r}")
    try:
        return _scalar_from_match(m)
    except ZeroDivisionError:
        raise BadQLiteral(f"zero denominator: {text!r}") from None


def _scalar_from_match(m):
    if m.group("re") is not None:
        re_part = Fraction(m.group("re"))
        if m.group("isign") is None:
            return normalize_scalar(re_part)
        im = Fraction(m.group("im") or 1)
        if m.group("isign") == "-":
            im = -im
        return normalize_scalar(GaussianRational(re_part, im))
    pure = m.group("pure")
    if pure in ("", "+"):
        im = Fraction(1)
    elif pure == "-":
        im = Fraction(-1)
    else:
        im = Fraction(pure)
    return normalize_scalar(GaussianRational(0, im))


def normalize_scalar(v):
    """Collapse a scalar to the simplest exact type that represents it."""
    if isinstance(v, GaussianRational):
        if v.im != 0:
            return v
        v = v.re
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, Rational):
        return normalize_scalar(Fraction(v))
    raise TypeError(f"not an exact scalar: {v!r}")


def _sdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("scalar division by zero")
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    if isinstance(b, GaussianRational) or isinstance(a, GaussianRational):
        return normalize_scalar(GaussianRational._coerce(a) / b)
    return normalize_scalar(Fraction(a) / Fraction(b))


# ---------------------------------------------------------------------------
# Kronecker packing
# ---------------------------------------------------------------------------


_GMP_BITS = 4096


def _big_mul(a: int, b: int) -> int:
    if gmpy2 is not None and a.bit_length() > _GMP_BITS and b.bit_length() > _GMP_BITS:
        return int(gmpy2.mpz(a) * gmpy2.mpz(b))
    return a * b


def _big_divmod(a: int, b: int) -> tuple[int, int]:
    if gmpy2 is not None and a.bit_length() > _GMP_BITS:
        q, r = gmpy2.f_divmod(gmpy2.mpz(a), gmpy2.mpz(b))
        return int(q), int(r)
    return divmod(a, b)


def _round4(bits: int) -> int:
    return (bits + 3) & ~3


def _pack(terms: Mapping[tuple[int, int], int], stride: int, w: int) -> int:
    """Evaluate at q = 2^w, x = 2^(w*stride).  Needs |coeff| < 2^w."""
    h = w // 4
    size = max(dx * stride + dq for dq, dx in terms) + 1
    zero = "0" * h
    pos = [zero] * size
    neg = [zero] * size
    have_neg = False
    fmt = f"0{h}x"
    for (dq, dx), c in terms.items():
        idx = size - 1 - (dx * stride + dq)
        if c > 0:
            pos[idx] = format(c, fmt)
        else:
            neg[idx] = format(-c, fmt)
            have_neg = True
    value = int("".join(pos), 16)
    if have_neg:
        value -= int("".join(neg), 16)
    return value


def _unpack(value: int, stride: int, w: int) -> dict[tuple[int, int], int]:
    """Inverse of ``_pack`` using balanced base-2^w digits."""
    if value == 0:
        return {}
    h = w // 4
    half = 1 << (w - 1)
    slots = (abs(value).bit_length() + w) // w + 1
    bias = int(("8" + "0" * (h - 1)) * slots, 16)
    s = format(value + bias, "x").zfill(slots * h)
    zero_digit = "8" + "0" * (h - 1)
    out = {}
    end = len(s)
    dq = dx = 0
    for _ in range(slots):
        chunk = s[end - h:end]
        if chunk != zero_digit:
            out[(dq, dx)] = int(chunk, 16) - half
        end -= h
        dq += 1
        if dq == stride:
            dq = 0
            dx += 1
    return out


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------


class BiPoly:
    """Polynomial in q and x with integer coefficients, immutable.

    Terms are keyed ``(deg_q, deg_x)``; zero coefficients are never stored, so
    the empty map is the zero polynomial and equality is map equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        if terms:
            clean = {}
            for key, c in terms.items():
                if c:
                    dq, dx = key
                    if dq < 0 or dx < 0:
                        raise ValueError(f"negative exponent in {key}")
                    clean[(int(dq), int(dx))] = int(c)
            self._terms = clean
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, c: int, deg_q: int = 0, deg_x: int = 0) -> "BiPoly":
        return cls._raw({(deg_q, deg_x): int(c)} if c else {})

    @classmethod
    def coerce(cls, v) -> "BiPoly":
        if isinstance(v, BiPoly):
            return v
        if isinstance(v, int):
            return cls.const(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to BiPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, deg_q: int, deg_x: int) -> int:
        return self._terms.get((deg_q, deg_x), 0)

    @property
    def deg_q(self) -> int:
        return max((dq for dq, _ in self._terms), default=-1)

    @property
    def deg_x(self) -> int:
        return max((dx for _, dx in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def max_abs(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def x_coeffs(self) -> dict[int, "BiPoly"]:
        """Group by power of x: ``{deg_x: polynomial in q}``."""
        groups: dict[int, dict] = {}
        for (dq, dx), c in self._terms.items():
            groups.setdefault(dx, {})[(dq, 0)] = c
        return {dx: BiPoly._raw(t) for dx, t in groups.items()}

    def q_coeffs(self, deg_x: int) -> dict[int, int]:
        """Coefficient of ``x^deg_x`` as ``{deg_q: c}``."""
        return {dq: c for (dq, dx), c in self._terms.items() if dx == deg_x}

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __rsub__(self, other):
        if isinstance(other, int):
            return BiPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("BiPoly powers must be nonnegative integers")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        return _exact_div(self, BiPoly.coerce(other))

    # -- evaluation / substitution ------------------------------------------

    def eval(self, q=None, x=None):
        return poly_eval(self, q, x)

    def substitute_x(self, s: "BiPoly") -> "BiPoly":
        return poly_substitute_x(self, s)

    def shift_x(self, c: int) -> "BiPoly":
        """``p(x + c)``."""
        return poly_substitute_x(self, X + c)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda k: (-k[1], -k[0]))
        out = []
        for i, (dq, dx) in enumerate(keys):
            c = self._terms[(dq, dx)]
            mono = []
            if dq:
                mono.append("q" if dq == 1 else f"q^{dq}")
            if dx:
                mono.append("x" if dx == 1 else f"x^{dx}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if i == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"BiPoly.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Inverse of ``str``; also accepts any factor order within a term."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"[+-][^+-]+", s)
        if "".join(pieces) != s:
            raise ValueError(f"cannot parse polynomial: {text!r}")
        out: dict[tuple[int, int], int] = {}
        for piece in pieces:
            sign = -1 if piece[0] == "-" else 1
            c, dq, dx = 1, 0, 0
            for factor in piece[1:].split("*"):
                m = re.fullmatch(r"(\d+)|([qx])(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                if m.group(1):
                    c *= int(m.group(1))
                else:
                    e = int(m.group(3) or 1)
                    if m.group(2) == "q":
                        dq += e
                    else:
                        dx += e
            key = (dq, dx)
            out[key] = out.get(key, 0) + sign * c
        return cls(out)


ZERO = BiPoly._raw({})
ONE = BiPoly._raw({(0, 0): 1})
Q = BiPoly._raw({(1, 0): 1})
X = BiPoly._raw({(0, 1): 1})

_SCHOOLBOOK_LIMIT = 96


def _mul(a: BiPoly, b: BiPoly) -> BiPoly:
    ta, tb = a._terms, b._terms
    if not ta or not tb:
        return ZERO
    if len(ta) * len(tb) <= _SCHOOLBOOK_LIMIT:
        out: dict = {}
        for (qa, xa), ca in ta.items():
            for (qb, xb), cb in tb.items():
                k = (qa + qb, xa + xb)
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPoly._raw(out)
    stride = a.deg_q + b.deg_q + 1
    bound = a.max_abs() * b.max_abs() * min(len(ta), len(tb))
    w = _round4(bound.bit_length() + 2)
    return BiPoly._raw(_unpack(_big_mul(_pack(ta, stride, w), _pack(tb, stride, w)), stride, w))


def _exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    if not b:
        raise ZeroDivisionError("exact division by the zero polynomial")
    if not a:
        return ZERO
    tb = b._terms
    if len(tb) == 1:
        ((bq, bx), bc), = tb.items()
        out = {}
        for (dq, dx), c in a._terms.items():
            if dq < bq or dx < bx or c % bc:
                raise NotDivisible(f"{b} does not divide {a}")
            out[(dq - bq, dx - bx)] = c // bc
        return BiPoly._raw(out)
    dqa, dxa = a.deg_q, a.deg_x
    dqb, dxb = b.deg_q, b.deg_x
    if dqb > dqa or dxb > dxa:
        raise NotDivisible(f"{b} does not divide {a}")
    stride = dqa + 1
    ma = a.max_abs()
    b_l1 = sum(abs(c) for c in tb.values())
    # Mignotte-style ceiling on quotient coefficients of the packed univariate image
    packed_deg = dxa * stride + dqa
    norm2_bits = (sum(c * c for c in a._terms.values())).bit_length() // 2 + 1
    w_max = _round4(packed_deg + norm2_bits + b_l1.bit_length() + 4)
    w = _round4(max(ma.bit_length(), b_l1.bit_length()) + 8)
    while True:
        big_a = _pack(a._terms, stride, w)
        big_b = _pack(tb, stride, w)
        big_c, rem = _big_divmod(big_a, big_b)
        if rem:
            raise NotDivisible(f"{b} does not divide {a}")
        c_terms = _unpack(big_c, stride, w)
        if c_terms:
            mc = max(abs(v) for v in c_terms.values())
            fits = (
                max(dq for dq, _ in c_terms) + dqb <= dqa
                and mc.bit_length() + b_l1.bit_length() + 1 < w
                and ma.bit_length() + 1 < w
            )
            if fits:
                return BiPoly._raw(c_terms)
        if w >= w_max:
            break
        w = min(_round4(2 * w), w_max)
    # image-level quotient never certified: check directly before giving up
    c = BiPoly._raw(c_terms)
    if c * b == a:
        return c
    raise NotDivisible(f"{b} does not divide {a}")


def poly_arith(a: BiPoly, b: BiPoly, kind: str) -> BiPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def poly_exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Quotient ``c`` with ``b*c == a``; raises ``NotDivisible`` otherwise."""
    return _exact_div(BiPoly.coerce(a), BiPoly.coerce(b))


def poly_substitute_x(p: BiPoly, s: BiPoly) -> BiPoly:
    """Replace x by ``s`` and expand (Horner in x)."""
    s = BiPoly.coerce(s)
    groups = p.x_coeffs()
    if not groups:
        return ZERO
    result = ZERO
    for dx in range(max(groups), -1, -1):
        result = result * s
        c = groups.get(dx)
        if c is not None:
            result = result + c
    return result


def _powers(v, k):
    out = [1]
    for _ in range(k):
        out.append(out[-1] * v)
    return out


def poly_eval(p: BiPoly, q_val=None, x_val=None):
    """Substitute q (and optionally x) by exact scalars.

    With only ``q_val`` the result is a ``UPoly`` in x; with both it is a
    scalar.  With only ``x_val`` the result is a ``UPoly`` in q.
    """
    if q_val is None and x_val is None:
        return p
    if q_val is None:
        xv = normalize_scalar(x_val)
        pw = _powers(xv, max(p.deg_x, 0))
        coeffs: dict[int, object] = {}
        for (dq, dx), c in p.items():
            coeffs[dq] = coeffs.get(dq, 0) + c * pw[dx]
        return UPoly.from_dict(coeffs)
    qv = normalize_scalar(q_val)
    pw = _powers(qv, max(p.deg_q, 0))
    coeffs = {}
    for (dq, dx), c in p.items():
        coeffs[dx] = coeffs.get(dx, 0) + c * pw[dq]
    u = UPoly.from_dict(coeffs)
    if x_val is None:
        return u
    return u(x_val)


# ---------------------------------------------------------------------------
# UPoly
# ---------------------------------------------------------------------------


class UPoly:
    """Univariate polynomial in x over exact scalars; coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [normalize_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, d: Mapping[int, object]) -> "UPoly":
        if not d:
            return cls()
        cs = [0] * (max(d) + 1)
        for k, v in d.items():
            cs[k] = v
        return cls(cs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UPoly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(v) -> "UPoly":
        return v if isinstance(v, UPoly) else UPoly([v])

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "UPoly"):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(), self
        quot = [0] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c:
                f = _sdiv(c, lead)
                quot[k] = f
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = normalize_scalar(rem[k + j] - f * oc)
        return UPoly(quot), UPoly(rem)

    def exact_div(self, other) -> "UPoly":
        quot, rem = self.divmod(other)
        if rem:
            raise NotDivisible(f"{other} does not divide {self}")
        return quot

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return normalize_scalar(acc) if not isinstance(acc, float) else acc

    def compose(self, s: "UPoly") -> "UPoly":
        s = self._coerce(s)
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def to_bipoly(self) -> BiPoly:
        """Lift an integer-coefficient polynomial in x to a ``BiPoly``."""
        out = {}
        for k, c in enumerate(self.coeffs):
            if not isinstance(c, int):
                raise ValueError("only integer coefficients lift to BiPoly")
            out[(0, k)] = c
        return BiPoly(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        first = True
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if isinstance(c, GaussianRational):
                body = f"({c})" + (f"*{mono}" if mono else "")
                out.append(body if first else f" + {body}")
            else:
                mag = abs(c)
                if not mono:
                    body = str(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}"
                if first:
                    out.append(f"-{body}" if c < 0 else body)
                else:
                    out.append(f" - {body}" if c < 0 else f" + {body}")
            first = False
        return "".join(out)

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# Fraction-free determinant
# ---------------------------------------------------------------------------


def bareiss_det(m: Sequence[Sequence]):
    """Determinant by single-step Bareiss elimination.

    Works for any integral-domain element type exposing ``exact_div`` and the
    ring operators (``BiPoly``, ``UPoly``).  A zero pivot is replaced by a row
    swap; when no replacement exists the determinant is zero.
    """
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("bareiss_det needs a square matrix")
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead:
                    v = pivot * row_i[j] - lead * row_k[j]
                else:
                    v = pivot * row_i[j]
                if prev is not None and v:
                    v = v.exact_div(prev)
                row_i[j] = v
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def split_integer_roots(p: UPoly, candidates: Iterable[int]) -> tuple[dict[int, int], UPoly]:
    """Divide out ``(x - t)`` for every candidate root ``t`` as often as it goes.

    Returns ``({root: multiplicity}, residual)``.
    """
    roots: dict[int, int] = {}
    for t in candidates:
        lin = UPoly([-t, 1])
        while p.degree > 0 and p(t) == 0:
            p = p.exact_div(lin)
            roots[t] = roots.get(t, 0) + 1
    return roots, p
