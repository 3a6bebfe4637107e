"""
Multivariate Laurent polynomials with exact rational coefficients.

The working variables are ``t`` (homological), ``q`` (quantum), and two
optional formal parameters ``d`` (framing) and ``mu``.  A polynomial is an
immutable mapping from exponent vectors to :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

VARS = ("t", "q", "d", "mu")
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]


def _as_exp(exps: Mapping[str, int]) -> tuple:
    unknown = set(exps) - set(VARS)
    if unknown:
        raise KeyError(f"unknown variable(s): {sorted(unknown)}")
    return tuple(int(exps.get(v, 0)) for v in VARS)


class LaurentPoly:
    """Immutable Laurent polynomial in ``t, q, d, mu`` over the rationals.

    Examples
    --------
    >>> q = LaurentPoly.var("q")
    >>> str(q + q**-1)
    'q + q^-1'
    >>> (q + q**-1) ** 2 == q**2 + 2 + q**-2
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c:
                    exp = tuple(exp)
                    if len(exp) != _NVARS:
                        exp = exp + (0,) * (_NVARS - len(exp))
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls({_as_exp({name: 1}): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exps: int) -> "LaurentPoly":
        """``monomial(3, t=-2, q=5)`` is ``3 t^-2 q^5``."""
        return cls({_as_exp(exps): coeff})

    @classmethod
    def from_tq(cls, table: Mapping[tuple, Scalar]) -> "LaurentPoly":
        """Build from ``{(t_exp, q_exp): coeff}`` (a Poincare table)."""
        return cls({(a, b, 0, 0): c for (a, b), c in table.items()})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- mapping-ish access ------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, **exps: int) -> Fraction:
        return self._terms.get(_as_exp(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set:
        used = set()
        for exp in self._terms:
            used.update(v for v, e in zip(VARS, exp) if e)
        return used

    def tq_table(self) -> dict:
        """``{(t_exp, q_exp): coeff}``; only valid when ``d`` and ``mu`` are absent."""
        if self.variables() - {"t", "q"}:
            raise ValueError("polynomial involves d or mu")
        return {(e[0], e[1]): c for e, c in self._terms.items()}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def inverse(self) -> "LaurentPoly":
        """Inverse of a monomial; other polynomials are not units."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in the Laurent ring")
        (e, c), = self._terms.items()
        return LaurentPoly({tuple(-x for x in e): 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c / other for e, c in self._terms.items()})
        other = LaurentPoly.coerce(other)
        if other.is_unit():
            return self * other.inverse()
        return self.exact_div(other)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division by a polynomial that involves a single variable.

        Raises
        ------
        ArithmeticError
            If the division leaves a remainder.
        """
        used = divisor.variables()
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if len(used) > 1:
            raise NotImplementedError("divisor must involve a single variable")
        if not used:
            return self / divisor.coeff()
        k = VARS.index(used.pop())
        dterms = sorted(divisor._terms.items(), key=lambda ec: ec[0][k])
        dtop_exp, dtop_c = dterms[-1]
        rem = dict(self._terms)
        quot: dict = {}
        if not rem:
            return LaurentPoly()
        floor = min(e[k] for e in rem) - min(e[0][k] for e in dterms)
        while rem:
            lead = max(rem, key=lambda e: (e[k], e))
            shift = lead[k] - dtop_exp[k]
            if shift < floor:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            qexp = list(lead)
            qexp[k] = shift
            qexp = tuple(qexp)
            qc = rem[lead] / dtop_c
            quot[qexp] = quot.get(qexp, 0) + qc
            for de, dc in dterms:
                e = tuple(a + b for a, b in zip(qexp, de))
                rem[e] = rem.get(e, 0) - qc * dc
                if not rem[e]:
                    del rem[e]
        return LaurentPoly(quot)

    # -- substitution ---------------------------------------------------------

    def subs(self, **values) -> "LaurentPoly":
        """Substitute scalars or polynomials for variables.

        >>> t, q = LaurentPoly.var("t"), LaurentPoly.var("q")
        >>> (t * q + 1).subs(t=-1) == 1 - q
        True
        """
        for name in values:
            if name not in VARS:
                raise KeyError(name)
        out = LaurentPoly()
        for exp, c in self._terms.items():
            term = LaurentPoly.const(c)
            keep = list(exp)
            for i, name in enumerate(VARS):
                if name in values and exp[i]:
                    val = values[name]
                    if isinstance(val, LaurentPoly):
                        term = term * val ** exp[i]
                    else:
                        v = Fraction(val)
                        term = term * (v ** exp[i])
                    keep[i] = 0
            out = out + term * LaurentPoly({tuple(keep): 1})
        return out

    # -- comparison / hashing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms sorted lexicographically ascending by exponent vector (t, q, d, mu)."""
        return sorted(self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in sorted(self._terms.items(), reverse=True):
            mono = " ".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(VARS, exp) if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = _fstr(mag)
            elif mag == 1:
                body = mono.replace(" ", "*")
            else:
                body = f"{_fstr(mag)}*{mono.replace(' ', '*')}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_term_lines(self) -> str:
        """Diff-stable text: one ``t^a q^b : p/r`` line per term, ascending."""
        lines = []
        for exp, c in self.sorted_terms():
            mono = " ".join(f"{v}^{e}" for v, e in zip(VARS, exp) if v in ("t", "q") or e)
            lines.append(f"{mono} : {_fstr(c)}")
        return "\n".join(lines)

    @classmethod
    def from_term_lines(cls, text: str) -> "LaurentPoly":
        terms = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            mono, coeff = line.split(":")
            exps = {}
            for tok in mono.split():
                name, e = tok.split("^")
                exps[name] = int(e)
            terms[_as_exp(exps)] = Fraction(coeff.strip())
        return cls(terms)

    def to_json(self) -> list:
        """List of ``{"t": a, "q": b, "c": "p/r"}`` objects (``d``/``mu`` keys when used)."""
        out = []
        for exp, c in self.sorted_terms():
            item = {"t": exp[0], "q": exp[1]}
            for v, e in zip(VARS[2:], exp[2:]):
                if e:
                    item[v] = e
            item["c"] = _fstr(c)
            out.append(item)
        return out

    @classmethod
    def from_json(cls, items: Iterable[Mapping]) -> "LaurentPoly":
        terms = {}
        for item in items:
            exps = {k: v for k, v in item.items() if k != "c"}
            terms[_as_exp(exps)] = Fraction(item["c"])
        return cls(terms)


def _fstr(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


t = LaurentPoly.var("t")
q = LaurentPoly.var("q")
d = LaurentPoly.var("d")
mu = LaurentPoly.var("mu")
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def qdim_from_degrees(degrees: Iterable[int]) -> LaurentPoly:
    """Graded dimension ``sum q^m`` over a multiset of degrees."""
    counts: dict = {}
    for m in degrees:
        counts[m] = counts.get(m, 0) + 1
    return LaurentPoly.from_tq({(0, m): c for m, c in counts.items()})
