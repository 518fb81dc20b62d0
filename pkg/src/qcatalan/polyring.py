"""Exact sparse polynomial arithmetic in the variables q, a, b.

A :class:`Poly` is a finite integer combination of monomials q^i a^j b^k,
stored as a dict from a packed exponent key to a nonzero Python int.  The
zero polynomial is the empty dict, so equal polynomials always have equal
term maps (the representation is canonical).

Exponents are packed into a single int, 40 bits per variable, which makes
monomial multiplication a plain integer addition.  Any exponent reaching
2^39 raises :class:`ExponentOverflowError` rather than silently bleeding
into the neighbouring field; at the depths this library is used at, real
degrees stay thousands of times below the bound.

On top of the polynomial ring sits :class:`QFrac`, a fraction num / den
whose denominator is kept factored as a product of (1 - q^i) powers.  That
restricted shape is all the q-exponential coefficients ever need, and it
avoids multivariate GCD entirely: normalization just strips factors
(1 - q^i) that exactly divide the numerator, and equality is decided by
cross-multiplication.
"""

from __future__ import annotations

import functools
import heapq
import re
from collections.abc import Iterable, Mapping

from .errors import (
    DenominatorResidueError,
    DivisionByZeroError,
    ExponentOverflowError,
    NotDivisibleError,
    PolyParseError,
)

VARS = ("q", "a", "b")

_FIELD = 40
_MASK = (1 << _FIELD) - 1
_SHIFT_A = _FIELD
_SHIFT_B = 2 * _FIELD
_MAX_EXP = (1 << (_FIELD - 1)) - 1
# one guard bit per 40-bit field; a set guard bit means a field overflowed
_GUARD = (1 << (_FIELD - 1)) | (1 << (2 * _FIELD - 1)) | (1 << (3 * _FIELD - 1))


def _pack(e_q: int, e_a: int, e_b: int) -> int:
    for e in (e_q, e_a, e_b):
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e > _MAX_EXP:
            raise ExponentOverflowError(f"exponent {e} exceeds supported range")
    return e_q | (e_a << _SHIFT_A) | (e_b << _SHIFT_B)


def _unpack(key: int) -> tuple[int, int, int]:
    return key & _MASK, (key >> _SHIFT_A) & _MASK, key >> _SHIFT_B


def _check_guard(terms: dict) -> dict:
    for k in terms:
        if k & _GUARD:
            raise ExponentOverflowError("exponent exceeds supported range")
    return terms


class Poly:
    """Immutable sparse polynomial in q, a, b with integer coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, _terms: dict | None = None):
        # internal: _terms must already be canonical (no zero coefficients)
        self._t = _terms if _terms is not None else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def const(cls, c: int) -> "Poly":
        if c == 0:
            return _ZERO
        return cls({0: c})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if name not in VARS:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARS}")
        return cls({_pack(*(1 if v == name else 0 for v in VARS)): 1})

    @classmethod
    def monomial(cls, coeff: int, e_q: int = 0, e_a: int = 0, e_b: int = 0) -> "Poly":
        if coeff == 0:
            return _ZERO
        return cls({_pack(e_q, e_a, e_b): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[tuple[int, int, int], int]]) -> "Poly":
        out: dict = {}
        for (e_q, e_a, e_b), c in terms:
            if not c:
                continue
            k = _pack(e_q, e_a, e_b)
            c = out.get(k, 0) + c
            if c:
                out[k] = c
            else:
                del out[k]
        return cls(out)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def terms(self) -> list[tuple[tuple[int, int, int], int]]:
        """Terms as ((e_q, e_a, e_b), coeff), in canonical order.

        Canonical order is graded lexicographic, variable precedence
        q < a < b: ascending total degree, ties broken by lower b power,
        then lower a power.
        """
        decoded = [(_unpack(k), c) for k, c in self._t.items()]
        decoded.sort(key=lambda item: (sum(item[0]), item[0][2], item[0][1], item[0][0]))
        return decoded

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def as_int(self) -> int:
        """The value of a constant polynomial; ValueError otherwise."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        raise ValueError(f"not a constant polynomial: {self}")

    def total_degree(self) -> int:
        if not self._t:
            return 0
        return max(sum(_unpack(k)) for k in self._t)

    def num_terms(self) -> int:
        return len(self._t)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._t:
            return other
        if not other._t:
            return self
        out = dict(self._t)
        for k, c in other._t.items():
            c = out.get(k, 0) + c
            if c:
                out[k] = c
            else:
                del out[k]
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        out = dict(self._t)
        for k, c in other._t.items():
            c = out.get(k, 0) - c
            if c:
                out[k] = c
            else:
                del out[k]
        return Poly(out)

    def __rsub__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Poly":
        return Poly({k: -c for k, c in self._t.items()})

    def __mul__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        s, t = self._t, other._t
        if not s or not t:
            return _ZERO
        if len(s) > len(t):
            s, t = t, s
        out: dict = {}
        get = out.get
        items = list(t.items())
        for k1, c1 in s.items():
            for k2, c2 in items:
                k = k1 + k2
                v = get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return Poly(_check_guard(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly exponent must be a nonnegative int")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly | int"]) -> "Poly":
        """Simultaneous substitution of variables by polynomials.

        Unbound variables are left alone.  All bindings are evaluated
        against the original polynomial, so e.g. {q: q**2, b: q} sends
        q^i b^k to q^(2i) q^k.
        """
        bind: dict[str, Poly] = {}
        for name, val in bindings.items():
            if name not in VARS:
                raise ValueError(f"unknown variable {name!r}")
            bind[name] = val if isinstance(val, Poly) else Poly.const(val)
        if not bind or not self._t:
            return self
        pow_cache: dict[str, dict[int, Poly]] = {n: {0: _ONE, 1: p} for n, p in bind.items()}

        def power(name: str, e: int) -> Poly:
            cache = pow_cache[name]
            got = cache.get(e)
            if got is None:
                got = cache[1] ** e
                cache[e] = got
            return got

        out = _ZERO
        for k, c in self._t.items():
            e_q, e_a, e_b = _unpack(k)
            residual = _pack(
                0 if "q" in bind else e_q,
                0 if "a" in bind else e_a,
                0 if "b" in bind else e_b,
            )
            term = Poly({residual: c})
            for name, e in (("q", e_q), ("a", e_a), ("b", e_b)):
                if e and name in bind:
                    term = term * power(name, e)
            out = out + term
        return out

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts: list[str] = []
        for (e_q, e_a, e_b), c in self.terms():
            factors = []
            for name, e in (("q", e_q), ("a", e_a), ("b", e_b)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json_obj(self) -> dict:
        """JSON-ready form: {"vars": ["q","a","b"], "terms": [{"c": "...", "e": [i,j,k]}, ...]}.

        Coefficients are decimal strings so arbitrary precision survives
        any JSON implementation.  Terms appear in canonical order.
        """
        return {
            "vars": list(VARS),
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Poly":
        if list(obj.get("vars", [])) != list(VARS):
            raise PolyParseError(f"unexpected variable list {obj.get('vars')!r}")
        try:
            terms = [((int(t["e"][0]), int(t["e"][1]), int(t["e"][2])), int(t["c"]))
                     for t in obj["terms"]]
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise PolyParseError(f"malformed term list: {exc}") from exc
        return cls.from_terms(terms)


_ZERO = Poly({})
_ONE = Poly({0: 1})

#: ready-made generators of the ring
q = Poly.variable("q")
a = Poly.variable("a")
b = Poly.variable("b")


def poly_arith(op: str, lhs: Poly, rhs: Poly | None = None) -> Poly:
    """Dispatch ring arithmetic by name: add, sub, mul, neg."""
    if op == "neg":
        return -lhs
    if rhs is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {op!r}")


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    """Exact division: the unique p with p * den == num.

    Raises NotDivisibleError when no such polynomial exists and
    DivisionByZeroError when den is zero.  Works by leading-term
    elimination under the packed-key order (lexicographic in b, a, q),
    which is admissible, so a failed leading-coefficient division or a
    monomial that does not divide proves non-divisibility.
    """
    if den.is_zero():
        raise DivisionByZeroError("exact division by zero polynomial")
    if num.is_zero():
        return _ZERO
    dterms = den._t
    dk = max(dterms)
    dc = dterms[dk]
    d_eq, d_ea, d_eb = _unpack(dk)
    rest = [(k, c) for k, c in dterms.items() if k != dk]

    rem = dict(num._t)
    out: dict = {}
    heap = [-k for k in rem]
    heapq.heapify(heap)
    while rem:
        while heap:
            top = -heap[0]
            if top in rem:
                break
            heapq.heappop(heap)
        else:
            raise AssertionError("heap exhausted with nonzero remainder")
        rk = -heapq.heappop(heap)
        rc = rem.pop(rk)
        r_eq, r_ea, r_eb = _unpack(rk)
        if r_eq < d_eq or r_ea < d_ea or r_eb < d_eb:
            raise NotDivisibleError("leading monomial not divisible")
        qc, rem_c = divmod(rc, dc)
        if rem_c:
            raise NotDivisibleError("leading coefficient not divisible")
        qk = rk - dk
        out[qk] = qc
        for k, c in rest:
            nk = qk + k
            v = rem.get(nk, 0) - qc * c
            if v:
                if nk not in rem:
                    heapq.heappush(heap, -nk)
                rem[nk] = v
            elif nk in rem:
                del rem[nk]
    return Poly(out)


@functools.cache
def qbinom(n: int, k: int) -> Poly:
    """Gaussian binomial coefficient [n k] as a polynomial in q.

    Defined by the q-Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k]
    with [n 0] = 1.  Returns 0 for k < 0 or k > n; n must be >= 0.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("qbinom requires n >= 0")
    if k < 0 or k > n:
        return _ZERO
    if k == 0 or k == n:
        return _ONE
    return qbinom(n - 1, k - 1) + Poly.monomial(1, k) * qbinom(n - 1, k)


def qrising(x: Poly | int, y: Poly | int, k: int) -> Poly:
    """Rising product (x + y)(x + qy)(x + q^2 y) ... (x + q^(k-1) y)."""
    if k < 0:
        raise ValueError("qrising requires k >= 0")
    x = x if isinstance(x, Poly) else Poly.const(x)
    y = y if isinstance(y, Poly) else Poly.const(y)
    out = _ONE
    for i in range(k):
        out = out * (x + Poly.monomial(1, i) * y)
    return out


@functools.cache
def pochhammer_factor(i: int) -> Poly:
    """The factor 1 - q^i."""
    if i < 1:
        raise ValueError("pochhammer factor index must be >= 1")
    return _ONE - Poly.monomial(1, i)


class QFrac:
    """Fraction num / prod (1 - q^i)^m_i over the polynomial ring.

    The denominator stays factored; construction strips every factor
    (1 - q^i) that exactly divides the numerator, so is_polynomial() is
    equivalent to an empty denominator.  Distinct normalized
    representations of the same value still exist (e.g. 1/(1-q) and
    (1+q)/(1-q^2)), which is why equality cross-multiplies.  Instances
    are immutable and unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: tuple[tuple[int, int], ...]):
        # internal: use QFrac.make for normalized construction
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num: Poly, den: Mapping[int, int] | None = None) -> "QFrac":
        factors: dict[int, int] = {}
        if den:
            for i, m in den.items():
                if i < 1 or m < 0:
                    raise ValueError("denominator factors need i >= 1, m >= 0")
                if m:
                    factors[i] = factors.get(i, 0) + m
        if num.is_zero():
            return cls(num, ())
        for i in sorted(factors):
            f = pochhammer_factor(i)
            while factors[i] > 0:
                try:
                    num = poly_exact_div(num, f)
                except NotDivisibleError:
                    break
                factors[i] -= 1
            if not factors[i]:
                del factors[i]
        return cls(num, tuple(sorted(factors.items())))

    @classmethod
    def from_poly(cls, p: "Poly | int") -> "QFrac":
        if isinstance(p, int):
            p = Poly.const(p)
        return cls(p, ())

    @classmethod
    def one(cls) -> "QFrac":
        return _QF_ONE

    @classmethod
    def zero(cls) -> "QFrac":
        return _QF_ZERO

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def as_poly(self) -> Poly:
        if self.den:
            raise DenominatorResidueError(f"coefficient is not polynomial: {self}")
        return self.num

    def den_as_poly(self) -> Poly:
        out = _ONE
        for i, m in self.den:
            out = out * pochhammer_factor(i) ** m
        return out

    @staticmethod
    def _coerce(other) -> "QFrac":
        if isinstance(other, QFrac):
            return other
        if isinstance(other, (Poly, int)):
            return QFrac.from_poly(other)
        return NotImplemented

    def _lift(self, target: dict[int, int]) -> Poly:
        # numerator scaled up to the common denominator `target`
        own = dict(self.den)
        num = self.num
        for i, m in target.items():
            extra = m - own.get(i, 0)
            if extra:
                num = num * pochhammer_factor(i) ** extra
        return num

    def __add__(self, other) -> "QFrac":
        other = QFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        common: dict[int, int] = dict(self.den)
        for i, m in other.den:
            if m > common.get(i, 0):
                common[i] = m
        return QFrac.make(self._lift(common) + other._lift(common), common)

    __radd__ = __add__

    def __sub__(self, other) -> "QFrac":
        other = QFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        common: dict[int, int] = dict(self.den)
        for i, m in other.den:
            if m > common.get(i, 0):
                common[i] = m
        return QFrac.make(self._lift(common) - other._lift(common), common)

    def __rsub__(self, other) -> "QFrac":
        other = QFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "QFrac":
        return QFrac(-self.num, self.den)

    def __mul__(self, other) -> "QFrac":
        other = QFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den: dict[int, int] = dict(self.den)
        for i, m in other.den:
            den[i] = den.get(i, 0) + m
        return QFrac.make(self.num * other.num, den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = QFrac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den_as_poly() == other.num * self.den_as_poly()

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None  # cross-multiplied equality has no cheap consistent hash

    def substitute(self, bindings: Mapping[str, "Poly | int"]) -> "QFrac":
        """Substitute variables; a q-binding must be a pure power q^r.

        Sending q to q^r maps each denominator factor (1 - q^i) to
        (1 - q^(r i)), which keeps the fraction inside the ring.  a and b
        may be bound to arbitrary polynomials (they never occur in the
        denominator).
        """
        bind = dict(bindings)
        den = self.den
        if "q" in bind:
            val = bind["q"]
            val = val if isinstance(val, Poly) else Poly.const(val)
            terms = val.terms()
            if len(terms) != 1 or terms[0][1] != 1 or terms[0][0][1] or terms[0][0][2]:
                raise ValueError("q may only be bound to a power of q")
            r = terms[0][0][0]
            if r == 0:
                raise ValueError("q may not be bound to a constant")
            den = tuple((i * r, m) for i, m in den)
        return QFrac.make(self.num.substitute(bind), dict(den))

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        den = "*".join(
            f"(1-q^{i})" + (f"^{m}" if m > 1 else "") for i, m in self.den
        )
        return f"({self.num}) / ({den})"

    def __repr__(self) -> str:
        return f"QFrac({self})"


_QF_ZERO = QFrac(_ZERO, ())
_QF_ONE = QFrac(_ONE, ())


def qfrac_arith_and_normalize(op: str, lhs: QFrac, rhs: QFrac | None = None) -> QFrac:
    """Dispatch fraction arithmetic by name: add, sub, mul, neg."""
    if op == "neg":
        return -lhs
    if rhs is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {op!r}")


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]+|\*\*|[-+*^()])")


def parse_poly(text: str, variables: tuple[str, ...] = VARS) -> Poly:
    """Parse a polynomial expression over the integers.

    Grammar: integers, the listed variables, +, -, *, ^ (power), and
    parentheses.  Multiplication must be explicit and powers are
    nonnegative integers.  '**' is accepted as a synonym for '^'.
    """
    for v in variables:
        if v not in VARS:
            raise ValueError(f"unknown variable {v!r}")
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append("")  # sentinel

    idx = 0

    def peek() -> str:
        return tokens[idx]

    def advance() -> str:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_expr() -> Poly:
        sign = 1
        while peek() in ("+", "-"):
            if advance() == "-":
                sign = -sign
        out = parse_term() * sign
        while peek() in ("+", "-"):
            op = advance()
            out = out + parse_term() if op == "+" else out - parse_term()
        return out

    def parse_term() -> Poly:
        out = parse_factor()
        while peek() == "*":
            advance()
            out = out * parse_factor()
        return out

    def parse_factor() -> Poly:
        base = parse_atom()
        if peek() in ("^", "**"):
            advance()
            tok = advance()
            if not tok.isdigit():
                raise PolyParseError("exponent must be a nonnegative integer")
            return base ** int(tok)
        return base

    def parse_atom() -> Poly:
        tok = advance()
        if tok == "(":
            inner = parse_expr()
            if advance() != ")":
                raise PolyParseError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -parse_atom()
        if tok.isdigit():
            return Poly.const(int(tok))
        if tok in variables:
            return Poly.variable(tok)
        raise PolyParseError(f"unexpected token {tok!r}")

    result = parse_expr()
    if peek() != "":
        raise PolyParseError(f"trailing input at token {peek()!r}")
    return result
