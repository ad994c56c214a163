"""Exact coefficient arithmetic for everything downstream.

Three coefficient types circulate in this package:

* plain rationals — ``fractions.Fraction`` from the stdlib,
* :class:`TauPolynomial` — dense univariate polynomials in the dimension
  parameter, over Fraction coefficients,
* :class:`TauRational` — reduced ratios of two TauPolynomials, denominator
  normalized monic.

The three types coerce into each other under ``+ - * /`` and ``==``, so
callers can mix a Fraction-weighted group-algebra element with a symbolic
one without ceremony.  The module-level constant :data:`TAU` is the
indeterminate; passing it where a dimension is expected turns any
computation symbolic.

Text form uses the variable letter "t", explicit "^" powers, and terms in
descending degree, e.g. ``(-1)/(t^3 - t)``.  Exact integers render bare.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction  # the exact scalar type used throughout the package


class PoleError(Exception):
    """Evaluation of a rational function at a zero of its denominator."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class TauPolynomial:
    """Polynomial in one variable, coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "TauPolynomial":
        lead = self.leading()
        if lead == 1:
            return self
        return TauPolynomial(c / lead for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self.coeffs)

    def __eq__(self, other):
        f = _as_fraction(other)
        if f is not None:
            return self.is_constant() and self.constant_value() == f
        if isinstance(other, TauPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, TauRational):
            return other == self
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        f = _as_fraction(other)
        if f is not None:
            other = TauPolynomial((f,))
        elif not isinstance(other, TauPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TauPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return TauPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, TauRational):
            return NotImplemented  # handled by TauRational.__rsub__
        return self + (-other if isinstance(other, TauPolynomial) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        f = _as_fraction(other)
        if f is not None:
            if not f:
                return TauPolynomial()
            return TauPolynomial(c * f for c in self.coeffs)
        if not isinstance(other, TauPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TauPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TauPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TauRational):
            return TauRational(self) / other
        f = _as_fraction(other)
        if f is not None:
            if not f:
                raise ZeroDivisionError("division by zero")
            return self * (1 / f)
        if isinstance(other, TauPolynomial):
            return TauRational(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return TauRational(TauPolynomial((Fraction(other),)), self)

    def __pow__(self, k: int):
        out = TauPolynomial((Fraction(1),))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "TauPolynomial"):
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lead = other.degree, other.leading()
        if self.degree < db:
            return TauPolynomial(), self
        quot = [Fraction(0)] * (self.degree - db + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + db] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return TauPolynomial(quot), TauPolynomial(rem[:db])

    def evaluate(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "TauPolynomial":
        return TauPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __repr__(self):
        return f"TauPolynomial({render(self)!r})"


TAU = TauPolynomial((0, 1))
"""The indeterminate itself; pass as the dimension to go symbolic."""


def poly_gcd(a: TauPolynomial, b: TauPolynomial) -> TauPolynomial:
    """Monic gcd over the rationals (Euclid, remainder normalized each step)."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, (r.monic() if r else r)
    if a.is_zero():
        return a
    return a.monic()


class TauRational:
    """Reduced ratio of polynomials; denominator monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = TauPolynomial((Fraction(num),))
        if den is None:
            den = TauPolynomial((Fraction(1),))
        elif isinstance(den, (int, Fraction)):
            den = TauPolynomial((Fraction(den),))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = TauPolynomial()
            self.den = TauPolynomial((Fraction(1),))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.leading()
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: TauPolynomial, den: TauPolynomial) -> "TauRational":
        """Bypass reduction for inputs already in canonical form."""
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __eq__(self, other):
        if isinstance(other, TauRational):
            return self.num == other.num and self.den == other.den
        f = _as_fraction(other)
        if f is not None or isinstance(other, TauPolynomial):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    @staticmethod
    def _coerce(other):
        if isinstance(other, TauRational):
            return other
        f = _as_fraction(other)
        if f is not None:
            return TauRational(TauPolynomial((f,)))
        if isinstance(other, TauPolynomial):
            return TauRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return TauRational(self.num + o.num, self.den)
        return TauRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return TauRational._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TauRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return TauRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def inverse(self) -> "TauRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return TauRational(self.den, self.num)

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        d = self.den.evaluate(t)
        if not d:
            raise PoleError(f"pole at t = {t}")
        return self.num.evaluate(t) / d

    def __repr__(self):
        return f"TauRational({render(self)!r})"


def invert(x):
    """Multiplicative inverse in the appropriate ring."""
    if isinstance(x, TauRational):
        return x.inverse()
    if isinstance(x, TauPolynomial):
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return TauRational(TauPolynomial((Fraction(1),)), x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return 1 / Fraction(x)


def is_symbolic(x) -> bool:
    """True when x carries the indeterminate (so computations stay symbolic)."""
    if isinstance(x, TauPolynomial):
        return not x.is_constant()
    if isinstance(x, TauRational):
        return not (x.is_polynomial() and x.num.is_constant())
    return False


# -- text form -------------------------------------------------------------


def _render_fraction(f: Fraction) -> str:
    return str(f)


def _render_poly(p: TauPolynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for deg in range(p.degree, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if deg == 0:
            body = _render_fraction(mag)
        else:
            power = "t" if deg == 1 else f"t^{deg}"
            body = power if mag == 1 else f"{_render_fraction(mag)}*{power}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def _is_bare_term(text: str) -> bool:
    """Renders that are safe unparenthesized as a numerator or denominator."""
    return (" " not in text) and ("*" not in text) and (not text.startswith("-"))


def render(x) -> str:
    """Canonical text for Fraction, TauPolynomial, or TauRational values."""
    f = _as_fraction(x)
    if f is not None:
        return _render_fraction(f)
    if isinstance(x, TauPolynomial):
        return _render_poly(x)
    if isinstance(x, TauRational):
        if x.is_polynomial():
            return _render_poly(x.num)
        num = _render_poly(x.num)
        den = _render_poly(x.den)
        if not _is_bare_term(num):
            num = f"({num})"
        if not _is_bare_term(den):
            den = f"({den})"
        return f"{num}/{den}"
    raise TypeError(f"cannot render {type(x).__name__}")


def _split_rational(text: str):
    """Locate the numerator/denominator slash of a rendered TauRational.

    A denominator is monic, so after the top-level '/' comes 't' or '('.
    Slashes inside rational coefficients are always digit/digit.
    """
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0 and i + 1 < len(text) and text[i + 1] in "(t":
            return text[:i], text[i + 1:]
    return None


def _parse_poly(text: str) -> TauPolynomial:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        inner, depth = body[1:-1], 0
        for ch in inner:
            depth += (ch == "(") - (ch == ")")
            if depth < 0:
                break
        else:
            body = inner.strip()
    if not body:
        raise ValueError("empty polynomial text")
    # split into signed terms at top level (no parentheses occur inside terms)
    terms = []
    current, sign = "", 1
    i = 0
    while i < len(body):
        ch = body[i]
        if ch in "+-" and current.strip():
            terms.append((sign, current.strip()))
            sign = 1 if ch == "+" else -1
            current = ""
        elif ch == "-" and not current.strip():
            sign = -sign
        elif ch == "+" and not current.strip():
            pass
        else:
            current += ch
        i += 1
    if not current.strip():
        raise ValueError(f"malformed polynomial {text!r}")
    terms.append((sign, current.strip()))

    coeffs: dict[int, Fraction] = {}
    for sign, term in terms:
        term = term.replace(" ", "")
        if "t" not in term:
            coef, deg = Fraction(term), 0
        else:
            coef_text, _, power_text = term.partition("t")
            coef_text = coef_text.rstrip("*")
            coef = Fraction(coef_text) if coef_text else Fraction(1)
            if power_text.startswith("^"):
                deg = int(power_text[1:])
            elif power_text == "":
                deg = 1
            else:
                raise ValueError(f"malformed term {term!r}")
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + sign * coef
    out = [Fraction(0)] * (max(coeffs) + 1)
    for deg, c in coeffs.items():
        out[deg] = c
    return TauPolynomial(out)


def parse(text: str):
    """Inverse of :func:`render`; returns Fraction, TauPolynomial, or TauRational."""
    body = text.strip()
    if "t" not in body:
        return Fraction(body.replace(" ", ""))
    split = _split_rational(body)
    if split is not None:
        num, den = split
        return TauRational(_parse_poly(num), _parse_poly(den))
    return _parse_poly(body)
