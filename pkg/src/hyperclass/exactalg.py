"""Exact computer-algebra substrate.

Gaussian-rational numbers, multivariate polynomials over them, rational
functions, differential operators in one working variable, multiplier
conjugation, Moebius/quadratic substitution, and truncated complex Taylor
jets for numeric application of operators through algebraic substitutions.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

# Fixed, ordered symbol universe.  The first two are working variables, the
# rest are parameter symbols.  Exponent vectors are tuples of this length.
SYMBOLS: tuple[str, ...] = ("w", "v", "alpha", "beta", "mu", "theta", "lam")
_SYM_INDEX = {s: i for i, s in enumerate(SYMBOLS)}
NVARS = len(SYMBOLS)
_ZERO_EXP = (0,) * NVARS

Rationalish = Union[int, Fraction]


# ---------------------------------------------------------------------------
# GaussRational
# ---------------------------------------------------------------------------

class GaussRational:
    """A Gaussian rational a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def of(x: Union["GaussRational", Rationalish]) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(x)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = GaussRational.of(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.of(other))

    def __rsub__(self, other):
        return GaussRational.of(other) + (-self)

    def __mul__(self, other):
        other = GaussRational.of(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRational.of(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return self * GaussRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussRational.of(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return GaussRational(1) / (self ** (-n))
        out = GaussRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    # -- conversion / comparison ------------------------------------------
    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussRational(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)
HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------------

def _grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial over GaussRational.

    Exponent vectors run over the fixed symbol universe ``SYMBOLS``.
    Zero coefficients are never stored; the term order used for display and
    leading-term queries is graded lexicographic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, GaussRational] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = GaussRational.of(c)
                if not c.is_zero():
                    clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def const(c: Union[GaussRational, Rationalish]) -> "MultiPoly":
        return MultiPoly({_ZERO_EXP: GaussRational.of(c)})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        exp = [0] * NVARS
        exp[_SYM_INDEX[name]] = 1
        return MultiPoly({tuple(exp): GR_ONE})

    @staticmethod
    def of(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, str):
            return MultiPoly.var(x)
        return MultiPoly.const(x)

    # -- predicates / queries ---------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self) -> GaussRational:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(_ZERO_EXP, GR_ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = _SYM_INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def symbols_used(self) -> set[str]:
        out = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    out.add(SYMBOLS[i])
        return out

    def leading_term(self) -> tuple[tuple, GaussRational]:
        if not self.terms:
            return _ZERO_EXP, GR_ZERO
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = MultiPoly.of(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, GR_ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MultiPoly.of(other))

    def __rsub__(self, other):
        return MultiPoly.of(other) + (-self)

    def __mul__(self, other):
        other = MultiPoly.of(other)
        out: dict[tuple, GaussRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, GR_ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer exponent required")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "MultiPoly":
        c = GaussRational.of(c)
        return MultiPoly({e: k * c for e, k in self.terms.items()})

    # -- calculus ----------------------------------------------------------
    def deriv(self, name: str) -> "MultiPoly":
        i = _SYM_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return MultiPoly(out)

    # -- substitution / evaluation ----------------------------------------
    def coeffs_in(self, name: str) -> list["MultiPoly"]:
        """Coefficients [c0, c1, ...] of powers of `name`, as polynomials
        in the remaining symbols."""
        i = _SYM_INDEX[name]
        d = self.degree_in(name)
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            buckets[k][tuple(ne)] = c
        return [MultiPoly(b) for b in buckets]

    def subs_poly(self, name: str, value: "MultiPoly") -> "MultiPoly":
        """Exact substitution of a polynomial for a symbol (Horner)."""
        cs = self.coeffs_in(name)
        out = MultiPoly()
        for c in reversed(cs):
            out = out * value + c
        return out

    def eval_numeric(self, assign: Mapping[str, complex]) -> complex:
        out = 0j
        vals = [complex(assign.get(s, 0.0)) for s in SYMBOLS]
        for e, c in self.terms.items():
            t = complex(c)
            for i, k in enumerate(e):
                if k:
                    t *= vals[i] ** k
            out += t
        return out

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of
        denominators of all real/imag coefficient parts."""
        nums: list[int] = []
        dens: list[int] = []
        for c in self.terms.values():
            for f in (c.re, c.im):
                if f != 0:
                    nums.append(abs(f.numerator))
                    dens.append(f.denominator)
        if not nums:
            return Fraction(1)
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        l = 1
        for d in dens:
            l = l * d // math.gcd(l, d)
        return Fraction(g, l)

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRational)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{SYMBOLS[i]}^{k}" if k > 1 else SYMBOLS[i]
                for i, k in enumerate(e) if k
            )
            if mono:
                parts.append(f"{c!r}*{mono}" if c != GR_ONE else mono)
            else:
                parts.append(repr(c))
        return " + ".join(parts)


P_ZERO = MultiPoly()
P_ONE = MultiPoly.const(1)


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """Spec-surface polynomial arithmetic dispatcher."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# RatFun
# ---------------------------------------------------------------------------

class RatFun:
    """Rational function num/den of MultiPoly.

    No polynomial gcd is taken: only the scalar content is removed, and the
    denominator's leading coefficient is normalized to 1 for size and
    display stability.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        num = MultiPoly.of(num)
        den = P_ONE if den is None else MultiPoly.of(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFun")
        if num.is_zero():
            den = P_ONE
        else:
            _, lead = den.leading_term()
            num = num.scale(GR_ONE / lead)
            den = den.scale(GR_ONE / lead)
            c = num.content()
            if c != 1:
                num = num.scale(Fraction(1) / c)
                den = den.scale(Fraction(1) / c)
            cd = den.content()
            if cd != 1:
                # keep den leading coefficient exactly 1
                pass
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @staticmethod
    def of(x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return RatFun(MultiPoly.of(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == P_ONE

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = RatFun.of(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFun.of(other))

    def __rsub__(self, other):
        return RatFun.of(other) + (-self)

    def __mul__(self, other):
        other = RatFun.of(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero RatFun")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun.of(other) / self

    def deriv(self, name: str) -> "RatFun":
        if self.is_poly():
            return RatFun(self.num.deriv(name))
        return RatFun(self.num.deriv(name) * self.den
                      - self.num * self.den.deriv(name),
                      self.den * self.den)

    def eval_numeric(self, assign: Mapping[str, complex]) -> complex:
        d = self.den.eval_numeric(assign)
        if abs(d) < 1e-300:
            raise ZeroDivisionError("evaluation at singular point")
        return self.num.eval_numeric(assign) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRational, MultiPoly)):
            other = RatFun.of(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFun is not hashable (equality is semantic)")

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


RF_ZERO = RatFun(P_ZERO)
RF_ONE = RatFun(P_ONE)


def ratfun_equal(r1: RatFun, r2: RatFun) -> bool:
    """True iff r1 == r2 as rational functions (cross-multiplication)."""
    return RatFun.of(r1) == RatFun.of(r2)


# ---------------------------------------------------------------------------
# DiffOperator
# ---------------------------------------------------------------------------

class DiffOperator:
    """Linear differential operator sum_k c_k(x, params) * d^k/dx^k."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Sequence):
        if var not in ("w", "v"):
            raise ValueError(f"working variable must be w or v, got {var!r}")
        cs = [RatFun.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOperator is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def identity(var: str) -> "DiffOperator":
        return DiffOperator(var, [RF_ONE])

    @staticmethod
    def d(var: str) -> "DiffOperator":
        return DiffOperator(var, [RF_ZERO, RF_ONE])

    @staticmethod
    def mult(var: str, f) -> "DiffOperator":
        return DiffOperator(var, [RatFun.of(f)])

    # -- queries -----------------------------------------------------------
    def order(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> RatFun:
        return self.coeffs[k] if k < len(self.coeffs) else RF_ZERO

    # -- linear structure --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        if other.var != self.var:
            raise ValueError("operator variable mismatch")
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOperator(self.var,
                            [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __neg__(self):
        return DiffOperator(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> "DiffOperator":
        f = RatFun.of(f)
        return DiffOperator(self.var, [f * c for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        if self.var != other.var:
            return False
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) == other.coeff(k) for k in range(n))

    def __hash__(self):
        raise TypeError("DiffOperator is not hashable")

    def __repr__(self):
        if not self.coeffs:
            return "0"
        x = self.var
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            dpart = f"D{x}^{k}" if k > 1 else (f"D{x}" if k == 1 else "")
            parts.append(f"({c!r})" + (f"*{dpart}" if dpart else ""))
        return " + ".join(parts)

    # -- numeric -----------------------------------------------------------
    def numeric_coeffs(self, assign: Mapping[str, complex]) -> list[complex]:
        return [c.eval_numeric(assign) for c in self.coeffs]


def op_compose(A: DiffOperator, B: DiffOperator) -> DiffOperator:
    """Operator composition (A o B)f = A(Bf), via the Leibniz rule."""
    if A.var != B.var:
        raise ValueError("operator variable mismatch")
    x = A.var
    out = DiffOperator(x, [])
    # derivative powers of each coefficient of B
    for k, a in enumerate(A.coeffs):
        if a.is_zero():
            continue
        # d^k (b f) = sum_i C(k,i) b^{(i)} f^{(k-i)}
        for j, b in enumerate(B.coeffs):
            if b.is_zero():
                continue
            bi = b
            for i in range(k + 1):
                c = a * bi * math.comb(k, i)
                term = DiffOperator(x, [RF_ZERO] * (j + k - i) + [c])
                out = out + term
                bi = bi.deriv(x)
        if not B.coeffs:
            break
    return out


# ---------------------------------------------------------------------------
# Multiplier
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinFactor:
    """(a*x + b)^gamma with a, b Gaussian rationals and gamma a polynomial of
    degree <= 1 in the parameter symbols."""
    a: GaussRational
    b: GaussRational
    gamma: MultiPoly

    def __post_init__(self):
        g = self.gamma
        if g.total_degree() > 1 or g.symbols_used() & {"w", "v"}:
            raise ValueError(
                "multiplier exponent must be linear in parameter symbols")


class Multiplier:
    """Product of linear-factor powers times exp(q(x)), deg q <= 2.

    Conjugation of an operator by a multiplier is exact: the only effect is
    the shift  d/dx -> d/dx + dlog(m)  with dlog(m) a rational function.
    """

    __slots__ = ("var", "factors", "exp_part")

    def __init__(self, var: str, factors: Iterable[LinFactor] = (),
                 exp_part: Sequence = (0, 0, 0)):
        q = tuple(GaussRational.of(c) for c in exp_part)
        if len(q) != 3:
            raise ValueError("exp_part must be (q0, q1, q2) for q0+q1*x+q2*x^2")
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "factors", tuple(factors))
        object.__setattr__(self, "exp_part", q)

    def __setattr__(self, name, value):
        raise AttributeError("Multiplier is immutable")

    @staticmethod
    def one(var: str) -> "Multiplier":
        return Multiplier(var)

    @staticmethod
    def power(var: str, a, b, gamma) -> "Multiplier":
        """(a*x+b)^gamma as a multiplier."""
        return Multiplier(var, [LinFactor(GaussRational.of(a),
                                          GaussRational.of(b),
                                          MultiPoly.of(gamma))])

    @staticmethod
    def exp(var: str, q0=0, q1=0, q2=0) -> "Multiplier":
        """exp(q0 + q1*x + q2*x^2) as a multiplier."""
        return Multiplier(var, (), (q0, q1, q2))

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        if other.var != self.var:
            raise ValueError("multiplier variable mismatch")
        q = tuple(a + b for a, b in zip(self.exp_part, other.exp_part))
        return Multiplier(self.var, self.factors + other.factors, q)

    def inverse(self) -> "Multiplier":
        return Multiplier(
            self.var,
            [LinFactor(f.a, f.b, -f.gamma) for f in self.factors],
            tuple(-c for c in self.exp_part),
        )

    def dlog(self) -> RatFun:
        """Logarithmic derivative d/dx log m(x), an exact rational function."""
        x = self.var
        out = RatFun.of(0)
        for f in self.factors:
            lin = MultiPoly.var(x).scale(f.a) + MultiPoly.const(f.b)
            out = out + RatFun(MultiPoly.const(f.a) * f.gamma, lin)
        q0, q1, q2 = self.exp_part
        out = out + RatFun(MultiPoly.const(q1)
                           + MultiPoly.var(x).scale(q2 * 2))
        return out

    def eval_numeric(self, x: complex, assign: Mapping[str, complex]) -> complex:
        """Principal-branch numeric value of the multiplier."""
        out = 1 + 0j
        for f in self.factors:
            base = complex(f.a) * x + complex(f.b)
            out *= base ** f.gamma.eval_numeric(assign)
        q0, q1, q2 = (complex(c) for c in self.exp_part)
        out *= cmath.exp(q0 + q1 * x + q2 * x * x)
        return out

    def __repr__(self):
        parts = [f"({f.a!r}*{self.var}+{f.b!r})^({f.gamma!r})"
                 for f in self.factors]
        q0, q1, q2 = self.exp_part
        if not (q0.is_zero() and q1.is_zero() and q2.is_zero()):
            parts.append(f"exp({q0!r}+{q1!r}*{self.var}+{q2!r}*{self.var}^2)")
        return "*".join(parts) if parts else "1"


def op_conjugate(F: DiffOperator, m: Multiplier) -> DiffOperator:
    """m^{-1} o F o m, computed by the exact shift d -> d + dlog(m)."""
    if m.var != F.var:
        raise ValueError("multiplier/operator variable mismatch")
    x = F.var
    g = m.dlog()
    # (d + g)^k applied iteratively: P_{k} = (d + g) o P_{k-1}
    shifted_powers = [DiffOperator.identity(x)]
    for _ in range(F.order()):
        P = shifted_powers[-1]
        # (d + g) o P = d o P + g*P ; d o P = sum (c' d^j + c d^{j+1})
        dP = DiffOperator(x, [RF_ZERO] + list(P.coeffs))
        dP = dP + DiffOperator(x, [c.deriv(x) for c in P.coeffs])
        shifted_powers.append(dP + P.scale(g))
    out = DiffOperator(x, [])
    for k, c in enumerate(F.coeffs):
        if not c.is_zero():
            out = out + shifted_powers[k].scale(c)
    return out


# ---------------------------------------------------------------------------
# Substitution
# ---------------------------------------------------------------------------

class Substitution:
    """Change of variable x = phi(y), Moebius or quadratic.

    Moebius:   x = (p*y + q)/(r*y + s),  p*s - q*r != 0.
    Quadratic: x = c*y^2 + d.
    """

    __slots__ = ("kind", "data", "source", "target")

    def __init__(self, kind: str, data: tuple, source: str, target: str):
        if source == target:
            raise ValueError("source and target variables must differ")
        data = tuple(GaussRational.of(c) for c in data)
        if kind == "moebius":
            p, q, r, s = data
            if (p * s - q * r).is_zero():
                raise ValueError("singular Moebius substitution (ps - qr = 0)")
        elif kind == "quadratic":
            c, _d = data
            if c.is_zero():
                raise ValueError("degenerate quadratic substitution")
        else:
            raise ValueError(f"unknown substitution kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    @staticmethod
    def moebius(source: str, target: str, p, q, r, s) -> "Substitution":
        return Substitution("moebius", (p, q, r, s), source, target)

    @staticmethod
    def quadratic(source: str, target: str, c, d=0) -> "Substitution":
        return Substitution("quadratic", (c, d), source, target)

    def phi(self) -> RatFun:
        """phi(y) as a RatFun in the target variable."""
        y = MultiPoly.var(self.target)
        if self.kind == "moebius":
            p, q, r, s = self.data
            return RatFun(y.scale(p) + MultiPoly.const(q),
                          y.scale(r) + MultiPoly.const(s))
        c, d = self.data
        return RatFun(y * y.scale(c) + MultiPoly.const(d))

    def phi_prime(self) -> RatFun:
        return self.phi().deriv(self.target)

    def inverse(self) -> "Substitution":
        if self.kind != "moebius":
            raise ValueError("only Moebius substitutions are invertible here")
        p, q, r, s = self.data
        return Substitution("moebius", (s, -q, -r, p), self.target, self.source)

    def phi_numeric(self, y: complex) -> complex:
        if self.kind == "moebius":
            p, q, r, s = (complex(c) for c in self.data)
            return (p * y + q) / (r * y + s)
        c, d = (complex(c) for c in self.data)
        return c * y * y + d

    def __repr__(self):
        if self.kind == "moebius":
            p, q, r, s = self.data
            return (f"{self.source}=({p!r}*{self.target}+{q!r})"
                    f"/({r!r}*{self.target}+{s!r})")
        c, d = self.data
        return f"{self.source}={c!r}*{self.target}^2+{d!r}"


def _ratfun_compose(f: RatFun, name: str, phi: RatFun) -> RatFun:
    """f with the symbol `name` replaced by the rational function phi."""

    def poly_compose(p: MultiPoly) -> RatFun:
        cs = p.coeffs_in(name)
        d = len(cs) - 1
        num = P_ZERO
        for k, c in enumerate(cs):
            num = num + c * (phi.num ** k) * (phi.den ** (d - k))
        return RatFun(num, phi.den ** d)

    return poly_compose(f.num) / poly_compose(f.den)


def op_substitute(F: DiffOperator, s: Substitution) -> DiffOperator:
    """Rewrite F(x, d/dx) in the target variable under x = phi(y).

    The result G satisfies G[f](y) = F[g](phi(y)) for g(x) := f(phi^{-1}(x)),
    i.e. coefficients are composed with phi and d/dx -> (1/phi'(y)) d/dy.
    """
    if s.source != F.var:
        raise ValueError("substitution source must match operator variable")
    y = s.target
    phi = s.phi()
    inv_dphi = RF_ONE / s.phi_prime()
    D = DiffOperator(y, [RF_ZERO, inv_dphi])
    powers = [DiffOperator.identity(y)]
    for _ in range(F.order()):
        powers.append(op_compose(D, powers[-1]))
    out = DiffOperator(y, [])
    for k, c in enumerate(F.coeffs):
        if c.is_zero():
            continue
        out = out + powers[k].scale(_ratfun_compose(c, F.var, phi))
    return out


# ---------------------------------------------------------------------------
# Jet
# ---------------------------------------------------------------------------

DEFAULT_JET_ORDER = 4


class Jet:
    """Truncated complex Taylor expansion c0 + c1 (z-z0) + ... + cK (z-z0)^K."""

    __slots__ = ("center", "coeffs")

    def __init__(self, center: complex, coeffs: Sequence[complex]):
        object.__setattr__(self, "center", complex(center))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def variable(z0: complex, order: int = DEFAULT_JET_ORDER) -> "Jet":
        cs = [complex(z0), 1.0] + [0.0] * (order - 1)
        return Jet(z0, cs[: order + 1])

    @staticmethod
    def constant(c: complex, z0: complex, order: int = DEFAULT_JET_ORDER) -> "Jet":
        return Jet(z0, [complex(c)] + [0.0] * order)

    def _lift(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.center != self.center or other.order != self.order:
                raise ValueError("jet center/order mismatch")
            return other
        return Jet.constant(complex(other), self.center, self.order)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        return Jet(self.center, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.center, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        n = self.order
        out = [0j] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                out[i + j] += a * o.coeffs[j]
        return Jet(self.center, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.coeffs[0] == 0:
            raise ZeroDivisionError("jet division by zero constant term")
        n = self.order
        out = [0j] * (n + 1)
        inv0 = 1.0 / o.coeffs[0]
        for k in range(n + 1):
            s = self.coeffs[k]
            for j in range(1, k + 1):
                s -= o.coeffs[j] * out[k - j]
            out[k] = s * inv0
        return Jet(self.center, out)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    # -- analytic functions ------------------------------------------------
    def exp(self) -> "Jet":
        n = self.order
        out = [cmath.exp(self.coeffs[0])] + [0j] * n
        for k in range(1, n + 1):
            s = 0j
            for j in range(1, k + 1):
                s += j * self.coeffs[j] * out[k - j]
            out[k] = s / k
        return Jet(self.center, out)

    def log(self) -> "Jet":
        if self.coeffs[0] == 0:
            raise ValueError("jet log at zero")
        n = self.order
        out = [cmath.log(self.coeffs[0])] + [0j] * n
        for k in range(1, n + 1):
            s = k * self.coeffs[k]
            for j in range(1, k):
                s -= j * out[j] * self.coeffs[k - j]
            out[k] = s / (k * self.coeffs[0])
        return Jet(self.center, out)

    def pow(self, e: complex) -> "Jet":
        """Principal-branch complex power."""
        if isinstance(e, int):
            if e >= 0:
                out = Jet.constant(1.0, self.center, self.order)
                for _ in range(e):
                    out = out * self
                return out
            return 1.0 / self.pow(-e)
        return (self.log() * complex(e)).exp()

    def sqrt(self) -> "Jet":
        return self.pow(0.5)

    def deriv(self) -> "Jet":
        """Jet of the derivative (one order lower, padded with 0)."""
        n = self.order
        out = [(k + 1) * self.coeffs[k + 1] for k in range(n)]
        out.append(0j)
        return Jet(self.center, out)

    def derivative_value(self, k: int) -> complex:
        """f^{(k)} at the center."""
        if k > self.order:
            raise ValueError("jet order too low for requested derivative")
        return self.coeffs[k] * math.factorial(k)

    def value(self) -> complex:
        return self.coeffs[0]

    def compose_outer(self, outer_coeffs: Sequence[complex]) -> "Jet":
        """Given Taylor coefficients of g at self.value(), return jet of
        g(f(z)) at self.center.  outer_coeffs[k] = g^{(k)}(f(z0))/k!."""
        dz = self - self.value()
        out = Jet.constant(0.0, self.center, self.order)
        for c in reversed(list(outer_coeffs[: self.order + 1])):
            out = out * dz + complex(c)
        return out

    def __repr__(self):
        return f"Jet(center={self.center}, coeffs={list(self.coeffs)})"


def jet_apply(F: DiffOperator, f: Jet, assign: Mapping[str, complex]) -> complex:
    """Apply a numerically instantiated operator to a function given as a jet.

    `assign` supplies the numeric values of the working variable (at the jet
    center) and the parameter symbols.
    """
    if f.order < F.order():
        raise ValueError("jet order too low for operator order")
    out = 0j
    for k, c in enumerate(F.coeffs):
        if c.is_zero():
            continue
        out += c.eval_numeric(assign) * f.derivative_value(k)
    return out
