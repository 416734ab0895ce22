"""Formal Gamma monomials and exact reduction of their squares.

A monomial is a finite product of Gamma values at rationals in (0, 1]
together with powers of 2*pi and i, a rational scalar, and fractional powers
of integers.  Squares of constant-weight monomials reduce to exact cyclotomic
numbers: the doubled argument-multiplicity function decomposes integrally
over the basis relation functions, each of which has a closed Gamma-free
value by the translation, reflection, and multiplication identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from .characters import AmFunction, FermatCharacter, decompose_distribution, is_constant_weight
from .cyclotomic import ComplexApprox, CycloElement
from .errors import (
    NonHalfIntegerExponent,
    NotConstantWeight,
    NumericMismatch,
    TranscendentalResidue,
)
from .numbers import divisors, factorize

# ---------------------------------------------------------------------------
# the formal monomial


@dataclass(frozen=True)
class GammaMonomial:
    """(2*pi)^a * i^b * r * prod Gamma(x)^e * prod n^u with x in (0, 1]."""

    gamma_factors: tuple[tuple[Fraction, int], ...] = ()
    two_pi_exp: Fraction = Fraction(0)
    i_exp: int = 0
    rational_scalar: Fraction = Fraction(1)
    radical_part: tuple[tuple[int, Fraction], ...] = ()

    @staticmethod
    def make(
        factors: dict[Fraction, int] | None = None,
        two_pi: Fraction | int = 0,
        i_exp: int = 0,
        rational: Fraction | int = 1,
        radicals: dict[int, Fraction] | None = None,
    ) -> "GammaMonomial":
        """Normalize arguments into (0, 1] by the translation identity,
        folding the shifted linear factors into the rational scalar."""
        rat = Fraction(rational)
        norm: dict[Fraction, int] = {}
        for arg, e in (factors or {}).items():
            arg = Fraction(arg)
            if arg <= 0:
                raise ValueError("Gamma arguments must be positive")
            if e == 0:
                continue
            while arg > 1:
                arg -= 1
                rat *= arg**e
            if arg == 1:
                continue  # Gamma(1) = 1
            norm[arg] = norm.get(arg, 0) + e
        rads = {int(b): Fraction(x) for b, x in (radicals or {}).items() if x}
        for b in rads:
            if b < 2:
                raise ValueError("radical bases must be >= 2")
        return GammaMonomial(
            gamma_factors=tuple(sorted((a, e) for a, e in norm.items() if e)),
            two_pi_exp=Fraction(two_pi),
            i_exp=i_exp % 4,
            rational_scalar=rat,
            radical_part=tuple(sorted(rads.items())),
        )

    def __mul__(self, other: "GammaMonomial") -> "GammaMonomial":
        factors: dict[Fraction, int] = dict(self.gamma_factors)
        for a, e in other.gamma_factors:
            factors[a] = factors.get(a, 0) + e
        rads: dict[int, Fraction] = dict(self.radical_part)
        for b, x in other.radical_part:
            rads[b] = rads.get(b, Fraction(0)) + x
        return GammaMonomial.make(
            factors,
            self.two_pi_exp + other.two_pi_exp,
            self.i_exp + other.i_exp,
            self.rational_scalar * other.rational_scalar,
            rads,
        )

    def __pow__(self, k: int) -> "GammaMonomial":
        if self.rational_scalar == 0:
            raise ValueError("zero monomial")
        return GammaMonomial.make(
            {a: e * k for a, e in self.gamma_factors},
            self.two_pi_exp * k,
            self.i_exp * k,
            self.rational_scalar**k if k >= 0 else Fraction(1) / self.rational_scalar ** (-k),
            {b: x * k for b, x in self.radical_part},
        )

    def argument_modulus(self) -> int:
        m = 1
        for a, _ in self.gamma_factors:
            m = lcm(m, a.denominator)
        return m

    def factor_function(self) -> AmFunction:
        """Occurrence function of the Gamma arguments on A_m, m the lcm of
        the argument denominators (argument 1 counts at the point 0)."""
        m = self.argument_modulus()
        vals = [0] * m
        for a, e in self.gamma_factors:
            k = (a.numerator * (m // a.denominator)) % m
            vals[k] += e
        return AmFunction(m, tuple(vals))

    def to_text(self) -> str:
        bits = []
        if self.two_pi_exp:
            bits.append(f"(2pi)^{{{self.two_pi_exp}}}")
        if self.i_exp:
            bits.append(f"i^{{{self.i_exp}}}")
        bits.append(str(self.rational_scalar))
        for a, e in self.gamma_factors:
            bits.append(f"Gamma({a})^{{{e}}}" if e != 1 else f"Gamma({a})")
        for b, x in self.radical_part:
            bits.append(f"{b}^{{{x}}}")
        return " * ".join(bits)

    def __repr__(self) -> str:
        return self.to_text()


# -- builders ---------------------------------------------------------------


def from_equation(eq) -> GammaMonomial:
    """Gamma(f) = prod_j [Gamma(j/m)^2 Gamma([-2j]/m)]^{d_j} (no 2*pi*i factor)."""
    m = eq.m
    factors: dict[Fraction, int] = {}
    for j, d in eq.exponents.items():
        for arg in (Fraction(j, m), Fraction(j, m), Fraction((-2 * j) % m, m)):
            factors[arg] = factors.get(arg, 0) + d
    return GammaMonomial.make(factors)


def from_character(char: FermatCharacter) -> GammaMonomial:
    """Gamma(alpha) = (2*pi*i)^{-<alpha>} prod Gamma({a_i/m})."""
    from .characters import weight

    m = char.modulus
    w = weight(char)
    factors: dict[Fraction, int] = {}
    for a in char.entries:
        arg = Fraction(a % m, m) if a % m else Fraction(1)
        factors[arg] = factors.get(arg, 0) + 1
    assert w.denominator == 1, "characters in B have integral weight"
    return GammaMonomial.make(factors, two_pi=-w, i_exp=-int(w))


def gamma_hat(u: int, indices: list[int], m: int) -> GammaMonomial:
    """(2*pi*i)^{-q/2} prod_j Gamma([u i_j]/m)^2 / Gamma([2 u i_j]/m), with
    representatives in [1, m]."""
    q = len(indices)
    if q % 2:
        raise ValueError("gamma_hat needs an even number of indices")
    factors: dict[Fraction, int] = {}
    for i in indices:
        a1 = (u * i) % m or m
        a2 = (2 * u * i) % m or m
        factors[Fraction(a1, m)] = factors.get(Fraction(a1, m), 0) + 2
        factors[Fraction(a2, m)] = factors.get(Fraction(a2, m), 0) - 1
    return GammaMonomial.make(factors, two_pi=Fraction(-q, 2), i_exp=-(q // 2))


def p_value_monomial(indices: list[int], m: int) -> GammaMonomial:
    """(2*pi*i)^{-n/2} prod_r Gamma(i_r/m)^2 Gamma(2 i_r/m)^{-1}; arguments
    above 1 are translated, folding the rational factors exactly."""
    n = len(indices)
    if n % 2:
        raise ValueError("period products need an even number of indices")
    factors: dict[Fraction, int] = {}
    for i in indices:
        factors[Fraction(i, m)] = factors.get(Fraction(i, m), 0) + 2
        factors[Fraction(2 * i, m)] = factors.get(Fraction(2 * i, m), 0) - 1
    return GammaMonomial.make(factors, two_pi=Fraction(-n, 2), i_exp=-(n // 2))


def theta(k: int, m: int) -> GammaMonomial:
    """The monomial with value sin(k*pi/m) = pi / (Gamma(k/m) Gamma((m-k)/m))."""
    if not 0 < k < m:
        raise ValueError("need 0 < k < m")
    return GammaMonomial.make(
        {Fraction(k, m): -1, Fraction(m - k, m): -1},
        two_pi=1,
        rational=Fraction(1, 2),
    )


def build(source, **kw) -> GammaMonomial:
    """Dispatcher: MTEquation -> Gamma(f); FermatCharacter -> Gamma(alpha);
    ('gamma_hat', u, indices, m); ('p_value', indices, m); ('theta', k, m)."""
    if isinstance(source, FermatCharacter):
        return from_character(source)
    if hasattr(source, "exponents") and hasattr(source, "m"):
        return from_equation(source)
    tag = source[0]
    if tag == "gamma_hat":
        return gamma_hat(*source[1:])
    if tag == "p_value":
        return p_value_monomial(*source[1:])
    if tag == "theta":
        return theta(*source[1:])
    raise ValueError(f"unknown source {source!r}")


# ---------------------------------------------------------------------------
# numerics


def numeric_eval(gm: GammaMonomial, prec: int = 128) -> ComplexApprox:
    """Evaluate the monomial numerically at the requested bit precision."""
    if prec < 64:
        raise ValueError("prec must be >= 64")
    with mpmath.workprec(prec + 64):
        acc = mpmath.mpc(gm.rational_scalar.numerator) / gm.rational_scalar.denominator
        if gm.two_pi_exp:
            e = mpmath.mpf(gm.two_pi_exp.numerator) / gm.two_pi_exp.denominator
            acc *= (2 * mpmath.pi) ** e
        if gm.i_exp % 4:
            acc *= mpmath.mpc(0, 1) ** (gm.i_exp % 4)
        for a, k in gm.gamma_factors:
            acc *= mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator) ** k
        for b, x in gm.radical_part:
            acc *= mpmath.power(b, mpmath.mpf(x.numerator) / x.denominator)
        re, im = mpmath.mpf(acc.real), mpmath.mpf(acc.imag)
    return ComplexApprox(re, im, prec)


# ---------------------------------------------------------------------------
# exact reduction of squares


@dataclass
class SquareProfile:
    """Gamma-free closed form accumulated during reduction:
    (2*pi)^a * i^b * r * zeta_n^k * prod sin(pi s)^{e_s} * prod p^{x_p}."""

    two_pi_exp: Fraction = Fraction(0)
    i_exp: Fraction = Fraction(0)
    rational: Fraction = Fraction(1)
    radicals: dict[int, Fraction] = field(default_factory=dict)
    sin_exps: dict[Fraction, int] = field(default_factory=dict)
    zeta: tuple[int, int] = (1, 0)

    def mul_radical(self, base: int, exp: Fraction) -> None:
        for p, e in factorize(base):
            x = self.radicals.get(p, Fraction(0)) + exp * e
            if x:
                self.radicals[p] = x
            else:
                self.radicals.pop(p, None)

    def mul_sin(self, s: Fraction, e: int) -> None:
        if not 0 < s < 1:
            raise ValueError(f"sine argument {s} outside (0, 1)")
        if s > Fraction(1, 2):
            s = 1 - s  # sin(pi(1-s)) = sin(pi s)
        elif s == Fraction(1, 2):
            return  # sin(pi/2) = 1
        x = self.sin_exps.get(s, 0) + e
        if x:
            self.sin_exps[s] = x
        else:
            self.sin_exps.pop(s, None)

    def mul_zeta(self, order: int, exp: int) -> None:
        n0, k0 = self.zeta
        n = lcm(n0, order)
        k = (k0 * (n // n0) + exp * (n // order)) % n
        g = gcd(k, n) if k else n
        self.zeta = (n // g, k // g)

    def mul_profile(self, other: "SquareProfile", power: int = 1) -> None:
        self.two_pi_exp += other.two_pi_exp * power
        self.i_exp += other.i_exp * power
        self.rational *= other.rational**power
        for p, x in other.radicals.items():
            self.mul_radical(p, x * power)
        for s, e in other.sin_exps.items():
            self.mul_sin(s, e * power)
        n, k = other.zeta
        if k:
            self.mul_zeta(n, k * power)


@lru_cache(maxsize=None)
def _epsilon_value(d: int, b: int, m: int) -> SquareProfile:
    """Closed Gamma-free form of prod_x Gamma({x})^{eps_{d, b/m}(x)}.

    Translation reduces the unreduced multiplication-formula product and the
    Gamma(dA) tail; reflection converts Gamma({-dA}) into an inverse sine.
    """
    a = Fraction(b, m)
    da = d * a
    s_int = int(da)  # floor
    f_frac = da - s_int
    prof = SquareProfile()
    # R1: wrap corrections from {A + j/d} with A + j/d > 1
    r1 = Fraction(1)
    for j in range(d):
        arg = a + Fraction(j, d)
        if arg > 1:
            r1 *= arg - 1
    prof.two_pi_exp += Fraction(d - 1, 2)
    prof.mul_radical(d, Fraction(1, 2) - da)
    prof.rational /= r1
    if f_frac:
        t = Fraction(1)
        for j in range(s_int):
            t *= f_frac + j
        prof.two_pi_exp += 1  # the reflection's pi = (2 pi) / 2
        prof.rational *= t / 2
        prof.mul_sin(f_frac, -1)
    else:
        fact = 1
        for j in range(1, s_int):
            fact *= j
        prof.rational *= fact
    return prof


def square_profile(gm: GammaMonomial) -> SquareProfile:
    """Gamma-free profile of gm**2 via the distribution decomposition."""
    prof = SquareProfile(
        two_pi_exp=2 * gm.two_pi_exp,
        i_exp=Fraction(2 * gm.i_exp),
        rational=gm.rational_scalar**2,
    )
    for bse, x in gm.radical_part:
        prof.mul_radical(bse, 2 * x)
    fn = gm.factor_function()
    if fn.is_zero():
        return prof
    if not is_constant_weight(fn):
        raise NotConstantWeight("gamma factor function does not have constant weight")
    m = fn.modulus
    for (d, b), c in decompose_distribution(fn).items():
        prof.mul_profile(_epsilon_value(d, b, m), c)
    return prof


def sqrt_of_positive_integer(n: int) -> CycloElement:
    """An exact element squaring to n whose embedding is the positive root.

    Lives in Q(zeta_{4n}); built from quadratic Gauss sums (odd primes) and
    zeta_8 - zeta_8^3 (the prime 2), with i-factors folded exactly.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    out = CycloElement.one(1)
    i_count = 0
    for p, e in factorize(n):
        out = out * CycloElement.rational(p ** (e // 2))
        if e % 2 == 0:
            continue
        if p == 2:
            z8 = CycloElement.zeta(8)
            out = out * (z8 - z8**3)
        else:
            g = _quadratic_gauss_sum(p)
            if p % 4 == 3:
                i_count += 1  # g = i*sqrt(p)
            out = out * g
    if i_count:
        # divide by i^i_count exactly: i^-1 = -i = zeta_4^3
        z4 = CycloElement.zeta(4)
        out = out * (z4 ** (4 - (i_count % 4)) if i_count % 4 else CycloElement.one(1))
    assert out * out == n, "gauss-sum square root failed (bug)"
    emb = out.embed(96)
    assert emb.real > 0, "sign normalization failed (bug)"
    return out


@lru_cache(maxsize=None)
def _quadratic_gauss_sum(p: int) -> CycloElement:
    from .numbers import legendre

    vec = [0] * p
    for x in range(1, p):
        vec[x] = legendre(x, p)
    from .cyclotomic import _reduce_mod_phi

    return CycloElement(p, _reduce_mod_phi(vec, p))


def assemble_profile(prof: SquareProfile) -> CycloElement:
    """Exact cyclotomic value of a fully reduced profile.

    Asserts that 2*pi cancels, the i-exponent is integral, and every radical
    exponent is a half-integer; sines expand over roots of unity and residual
    square roots fold in through Gauss sums.
    """
    if prof.two_pi_exp != 0:
        raise TranscendentalResidue(f"2*pi exponent {prof.two_pi_exp} did not cancel")
    if prof.i_exp.denominator != 1:
        raise TranscendentalResidue(f"i exponent {prof.i_exp} is not integral")
    i4 = int(prof.i_exp)
    rational = prof.rational
    sqrt_n = 1
    for p, x in sorted(prof.radicals.items()):
        if x.denominator == 1:
            rational *= Fraction(p) ** int(x)
        elif x.denominator == 2:
            rational *= Fraction(p) ** int(x - Fraction(1, 2))
            sqrt_n *= p
        else:
            raise NonHalfIntegerExponent(f"exponent {x} of prime {p}")
    # sines: sin(pi s) = (z^k - z^-k) / (2i) at conductor 2*den
    i4 -= sum(prof.sin_exps.values())
    rational *= Fraction(1, 2) ** sum(prof.sin_exps.values())
    num = CycloElement.rational(1)
    den = CycloElement.rational(1)
    for s, e in sorted(prof.sin_exps.items()):
        piece = _pure_sin_part(s)
        if e > 0:
            num = num * piece**e
        else:
            den = den * piece ** (-e)
    # residual square roots: sqrt(p) = g_p for p = 1 (4), i^-1 g_p for p = 3 (4)
    # (g_p the quadratic Gauss sum); absorbing the i keeps odd conductors odd
    for p, e in factorize(sqrt_n):
        assert e == 1
        if p == 2:
            z8 = CycloElement.zeta(8)
            num = num * (z8 - z8**3)
        else:
            num = num * _quadratic_gauss_sum(p)
            if p % 4 == 3:
                i4 -= 1
    zn, zk = prof.zeta
    if zk % zn:
        num = num * CycloElement.zeta(zn, zk)
    i4 %= 4
    if i4 % 2:
        num = num * CycloElement.zeta(4, i4)
    elif i4 == 2:
        rational = -rational
    value = num * CycloElement.rational(rational)
    if not den.is_rational() or den.as_rational() != 1:
        value = value / den
    return value


@lru_cache(maxsize=None)
def _pure_sin_part(s: Fraction) -> CycloElement:
    """zeta_{2q}^p - zeta_{2q}^{-p} for s = p/q, i.e. 2i*sin(pi*s); descends
    to odd conductor q via the monomial remap when q is odd."""
    q2 = 2 * s.denominator
    z = CycloElement.zeta(q2)
    piece = z**s.numerator - z ** ((q2 - s.numerator) % q2)
    if s.denominator % 2:
        out = piece.descend(s.denominator)
        assert isinstance(out, CycloElement)
        return out
    return piece


@dataclass(frozen=True)
class ExactAlgebraic:
    """Exact cyclotomic value with provenance and its numeric check value."""

    value: CycloElement
    profile: SquareProfile
    check_value: ComplexApprox
    description: str = ""

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "numeric_check": [str(self.check_value.real), str(self.check_value.imag)],
            "description": self.description,
        }


def reduce_square(gm: GammaMonomial, prec: int = 256, description: str = "") -> ExactAlgebraic:
    """Exact value of gm**2 as a cyclotomic number, cross-checked numerically."""
    prof = square_profile(gm)
    value = assemble_profile(prof)
    num = numeric_eval(gm, prec)
    emb = value.embed(prec)
    with mpmath.workprec(prec + 64):
        target = num.to_mpc() ** 2
        got = emb.to_mpc()
        tol = mpmath.mpf(2) ** (-(prec // 2)) * max(1, abs(target))
        bad = abs(got - target) > tol
    if bad:
        raise NumericMismatch(
            f"exact {got} vs numeric {target} for {description or gm!r}"
        )
    return ExactAlgebraic(value, prof, ComplexApprox(
        mpmath.mpf(target.real), mpmath.mpf(target.imag), prec), description)


@lru_cache(maxsize=None)
def _sin_relation_deltas(m: int) -> tuple[SquareProfile, ...]:
    """Multiplicatively trivial profiles built from exact sine identities.

    For each divisor d > 1 and each nonzero coset: the d-section identity
    prod_k sin(pi {x + k/d}) = 2^(1-d) sin(pi {d x}); for each divisor n > 2:
    the half-product prod_{k <= (n-1)/2} 2 sin(k pi / n) = sqrt(n) (odd n),
    resp. sqrt(n/2) over k < n/2 (even n).  Adding any Z-combination of these
    to a profile does not change its value, but changes exponent parities.
    """
    deltas: list[SquareProfile] = []
    for d in divisors(m):
        if d == 1:
            continue
        seen: set[Fraction] = set()
        for b in range(1, m):
            x = Fraction(b, m)
            dx = d * x - int(d * x)
            if dx == 0 or dx in seen:
                continue
            seen.add(dx)
            p = SquareProfile(rational=Fraction(2) ** (d - 1))
            for k in range(d):
                arg = x + Fraction(k, d)
                arg -= int(arg)
                if arg == 0:
                    arg = Fraction(1)
                p.mul_sin(arg, 1)
            p.mul_sin(dx, -1)
            deltas.append(p)
    for n in divisors(m):
        if n <= 2:
            continue
        if n % 2:
            p = SquareProfile(rational=Fraction(2) ** ((n - 1) // 2))
            for k in range(1, (n - 1) // 2 + 1):
                p.mul_sin(Fraction(k, n), 1)
            p.mul_radical(n, Fraction(-1, 2))
        else:
            p = SquareProfile(rational=Fraction(2) ** (n // 2 - 1))
            for k in range(1, n // 2):
                p.mul_sin(Fraction(k, n), 1)
            p.mul_radical(n // 2, Fraction(-1, 2))
        deltas.append(p)
    return tuple(deltas)


def _parity_fix(prof: SquareProfile) -> SquareProfile | None:
    """A value-equal profile with even sine exponents and integral radical
    exponents, found by an F2 solve over the sine-identity lattice; None if
    the parity system is unsolvable."""
    m = 1
    for s in prof.sin_exps:
        m = lcm(m, s.denominator)
    for p, x in prof.radicals.items():
        if x.denominator == 2:
            m = lcm(m, p)
    if m == 1:
        return None
    deltas = _sin_relation_deltas(m)
    keys: list = sorted(
        {s for s in prof.sin_exps}
        | {s for d in deltas for s in d.sin_exps}
        | {("rad", p) for p in prof.radicals}
        | {("rad", p) for d in deltas for p in d.radicals},
        key=str,
    )
    key_pos = {k: i for i, k in enumerate(keys)}

    def parity_vec(p: SquareProfile) -> int:
        bits = 0
        for s, e in p.sin_exps.items():
            if e % 2:
                bits ^= 1 << key_pos[s]
        for q, x in p.radicals.items():
            if x.denominator == 2:
                bits ^= 1 << key_pos[("rad", q)]
        return bits

    target = parity_vec(prof)
    if target == 0:
        return prof
    # GF(2) solve: find a subset of deltas with parity sum == target
    basis: dict[int, tuple[int, int]] = {}  # pivot -> (vector, subset mask)
    for j, d in enumerate(deltas):
        v, mask = parity_vec(d), 1 << j
        while v:
            piv = v & (-v)
            if piv.bit_length() - 1 in basis:
                bv, bm = basis[piv.bit_length() - 1]
                v ^= bv
                mask ^= bm
            else:
                basis[piv.bit_length() - 1] = (v, mask)
                break
    v, mask = target, 0
    while v:
        lowbit = (v & (-v)).bit_length() - 1
        if lowbit not in basis:
            return None
        bv, bm = basis[lowbit]
        v ^= bv
        mask ^= bm
    fixed = SquareProfile(
        two_pi_exp=prof.two_pi_exp,
        i_exp=prof.i_exp,
        rational=prof.rational,
        radicals=dict(prof.radicals),
        sin_exps=dict(prof.sin_exps),
        zeta=prof.zeta,
    )
    j = 0
    while mask:
        if mask & 1:
            fixed.mul_profile(deltas[j])
        mask >>= 1
        j += 1
    return fixed


def profile_sqrt(prof: SquareProfile) -> CycloElement | None:
    """Exactly assembled square root of a profile, or None.

    The profile is first rewritten (value unchanged) via the sine-identity
    lattice so that sine exponents are even and radical exponents integral;
    the rewritten profile is then halved and assembled.
    """
    if prof.two_pi_exp != 0 or prof.i_exp.denominator != 1:
        return None
    if any(e % 2 for e in prof.sin_exps.values()) or any(
        x.denominator != 1 for x in prof.radicals.values()
    ):
        fixed = _parity_fix(prof)
        if fixed is None:
            return None
        return _profile_sqrt_even(fixed)
    return _profile_sqrt_even(prof)


def _profile_sqrt_even(prof: SquareProfile) -> CycloElement | None:
    if any(e % 2 for e in prof.sin_exps.values()):
        return None
    if int(prof.i_exp) % 2:
        return None
    half = SquareProfile(
        two_pi_exp=Fraction(0),
        i_exp=Fraction(int(prof.i_exp) // 2),
        rational=Fraction(1),
        radicals={},
        sin_exps={s: e // 2 for s, e in prof.sin_exps.items()},
    )
    zn, zk = prof.zeta
    if zk:
        half.mul_zeta(2 * zn, zk)
    # fold the rational scalar into radical exponents and halve
    r = prof.rational
    if r < 0:
        half.i_exp += 1  # sqrt(-1) = i
        r = -r
    for p, e in factorize(r.numerator):
        half.mul_radical(p, Fraction(e, 2))
    for p, e in factorize(r.denominator):
        half.mul_radical(p, Fraction(-e, 2))
    for p, x in prof.radicals.items():
        if x.denominator > 2:
            return None
        half.mul_radical(p, x / 2)
    try:
        return assemble_profile(half)
    except NonHalfIntegerExponent:
        return None
