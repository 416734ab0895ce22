"""Exact arithmetic in cyclotomic fields Q(zeta_N) on the power basis.

Elements are stored as integer coefficient vectors over a common positive
denominator, reduced modulo the N-th cyclotomic polynomial.  The complex
embedding is the fixed one zeta_N -> exp(2*pi*i/N) throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from .errors import DivisionByZero, NotCoprime, ZeroInput
from .linalg import lll_reduce
from .numbers import divisors, euler_phi, factorize, legendre, moebius, primes_in_progression

# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree, via the Moebius product."""
    if n == 1:
        return (-1, 1)
    # numerator = prod (x^d - 1)^[mu(n/d) = 1], denominator likewise for -1
    num = [1]
    den = [1]
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]  # x^d - 1
        if mu == 1:
            num = _poly_mul_int(num, factor)
        else:
            den = _poly_mul_int(den, factor)
    quot, rem = _poly_divmod_int(num, den)
    assert not any(rem), "cyclotomic polynomial division must be exact"
    return tuple(quot)


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_int(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Euclidean division of integer polynomials; b need not be monic but the
    division here is only used where it is exact over Z."""
    a = a[:]
    db = len(b) - 1
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
        db -= 1
    lead = b[-1]
    q = [0] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        c, r = divmod(a[i], lead)
        assert r == 0, "non-exact integer polynomial division"
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def _reduction_data(n: int) -> tuple[int, tuple[int, ...]]:
    """(phi(n), coefficients of Phi_n) used by the mod-Phi reducer."""
    return euler_phi(n), cyclotomic_polynomial(n)


def _reduce_mod_phi(vec: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient vector (powers of zeta_n) mod Phi_n."""
    phi, poly = _reduction_data(n)
    v = vec[:]
    if len(v) < phi:
        v += [0] * (phi - len(v))
    for i in range(len(v) - 1, phi - 1, -1):
        c = v[i]
        if c:
            v[i] = 0
            base = i - phi
            for j in range(phi):
                v[base + j] -= c * poly[j]
    del v[phi:]
    return v


# ---------------------------------------------------------------------------
# numeric wrapper


@dataclass(frozen=True)
class ComplexApprox:
    """A complex value carrying the working precision it was computed at."""

    real: mpmath.mpf
    imag: mpmath.mpf
    precision_bits: int

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(self.real, self.imag)

    def abs(self) -> mpmath.mpf:
        return abs(self.to_mpc())

    def __repr__(self) -> str:
        return f"ComplexApprox({self.real}, {self.imag}, bits={self.precision_bits})"


class NotInSubfield:
    """Returned by change_conductor when descent fails.

    A mathematically meaningful answer, not an error: the element is provably
    not fixed by the relevant Galois subgroup.
    """

    def __init__(self, conductor: int, target: int):
        self.conductor = conductor
        self.target = target

    def __repr__(self) -> str:
        return f"NotInSubfield(conductor={self.conductor}, target={self.target})"

    def __bool__(self) -> bool:
        return False


# ---------------------------------------------------------------------------
# the element class


class CycloElement:
    """Element of Q(zeta_N) on the power basis 1, zeta, ..., zeta^(phi(N)-1).

    Immutable; all arithmetic is exact.  Mixed-conductor arithmetic lifts both
    operands to the lcm of the conductors first.
    """

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, num: list[int], den: int = 1, *, _normalized: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        phi = euler_phi(conductor)
        if len(num) != phi:
            raise ValueError(f"need exactly phi({conductor}) = {phi} coefficients, got {len(num)}")
        if den == 0:
            raise DivisionByZero("zero denominator")
        if not _normalized:
            if den < 0:
                den, num = -den, [-x for x in num]
            g = gcd(den, *num) if any(num) else den
            if g > 1:
                den //= g
                num = [x // g for x in num]
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "_num", tuple(num))
        object.__setattr__(self, "_den", den)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycloElement is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fractions(conductor: int, coeffs: list[Fraction]) -> "CycloElement":
        den = 1
        for c in coeffs:
            den = lcm(den, Fraction(c).denominator)
        num = [int(Fraction(c) * den) for c in coeffs]
        return CycloElement(conductor, num, den)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CycloElement":
        """zeta_n^k as an element of Q(zeta_n)."""
        k %= n
        vec = [0] * (k + 1)
        vec[k] = 1
        return CycloElement(n, _reduce_mod_phi(vec, n))

    @staticmethod
    def rational(x, conductor: int = 1) -> "CycloElement":
        f = Fraction(x)
        num = [f.numerator] + [0] * (euler_phi(conductor) - 1)
        return CycloElement(conductor, num, f.denominator)

    @staticmethod
    def one(conductor: int = 1) -> "CycloElement":
        return CycloElement.rational(1, conductor)

    @staticmethod
    def zero(conductor: int = 1) -> "CycloElement":
        return CycloElement.rational(0, conductor)

    # -- basic views -------------------------------------------------------

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(n, self._den) for n in self._num]

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self._num[0] if self._num else 0, self._den)

    def __repr__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        x = self.canonicalize()
        parts = ", ".join(_frac_str(Fraction(n, x._den)) for n in x._num)
        return f"cyclo({x.conductor}; {parts})"

    @staticmethod
    def from_text(text: str) -> "CycloElement":
        body = text.strip()
        if not (body.startswith("cyclo(") and body.endswith(")")):
            raise ValueError(f"not a cyclo literal: {text!r}")
        head, _, rest = body[6:-1].partition(";")
        conductor = int(head.strip())
        coeffs = [Fraction(tok.strip()) for tok in rest.split(",") if tok.strip()]
        return CycloElement.from_fractions(conductor, coeffs)

    # -- arithmetic --------------------------------------------------------

    def _common(self, other: "CycloElement") -> tuple["CycloElement", "CycloElement"]:
        if self.conductor == other.conductor:
            return self, other
        target = lcm(self.conductor, other.conductor)
        return self.lift(target), other.lift(target)

    def __add__(self, other) -> "CycloElement":
        other = _coerce(other, self.conductor)
        a, b = self._common(other)
        da, db = a._den, b._den
        num = [x * db + y * da for x, y in zip(a._num, b._num)]
        return CycloElement(a.conductor, num, da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.conductor, [-x for x in self._num], self._den, _normalized=True)

    def __sub__(self, other) -> "CycloElement":
        return self + (-_coerce(other, self.conductor))

    def __rsub__(self, other) -> "CycloElement":
        return _coerce(other, self.conductor) - self

    def __mul__(self, other) -> "CycloElement":
        other = _coerce(other, self.conductor)
        a, b = self._common(other)
        conv = _poly_mul_int(list(a._num), list(b._num))
        num = _reduce_mod_phi(conv, a.conductor)
        return CycloElement(a.conductor, num, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """1/self via the conjugate product: the product of all nontrivial
        Galois conjugates divided by the (rational) norm.  Integer arithmetic
        only; exactness is guaranteed by construction."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        n = self.conductor
        if self.is_rational():
            f = 1 / self.as_rational()
            return CycloElement.rational(f, n)
        numerator_int = CycloElement(n, list(self._num), 1, _normalized=True)
        conj = CycloElement.one(n)
        for u in range(2, n):
            if gcd(u, n) == 1:
                conj = conj * numerator_int.galois(u)
        norm = numerator_int * conj
        if not norm.is_rational():
            raise DivisionByZero("norm failed to be rational (bug)")
        nr = norm.as_rational()
        # self = numerator_int / den ==> 1/self = den * conj / norm
        return conj * Fraction(self._den * nr.denominator, nr.numerator)

    def __truediv__(self, other) -> "CycloElement":
        other = _coerce(other, self.conductor)
        if other.is_zero():
            raise DivisionByZero("division by zero")
        if other.is_rational():
            f = other.as_rational()
            return CycloElement(self.conductor,
                                [x * f.denominator for x in self._num],
                                self._den * f.numerator)
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "CycloElement":
        return _coerce(other, self.conductor) / self

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElement.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloElement.rational(other, 1)
        if not isinstance(other, CycloElement):
            return NotImplemented
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        x = self.canonicalize()
        return hash((x.conductor, x._num, x._den))

    # -- Galois ------------------------------------------------------------

    def galois(self, u: int) -> "CycloElement":
        """Apply sigma_u: zeta_N -> zeta_N^u; requires gcd(u, N) = 1."""
        n = self.conductor
        u %= n
        if n == 1:
            return self
        if gcd(u, n) != 1:
            raise NotCoprime(f"gcd({u}, {n}) != 1")
        if u == 1:
            return self
        vec = [0] * n
        for k, c in enumerate(self._num):
            if c:
                vec[(u * k) % n] += c
        return CycloElement(n, _reduce_mod_phi(vec, n), self._den)

    def conjugate(self) -> "CycloElement":
        return self.galois(self.conductor - 1) if self.conductor > 2 else self

    # -- conductor changes ---------------------------------------------------

    def lift(self, target: int) -> "CycloElement":
        """Exact image in Q(zeta_target); requires conductor | target."""
        n = self.conductor
        if target == n:
            return self
        if target % n:
            raise ValueError(f"cannot lift conductor {n} into {target}")
        step = target // n
        vec = [0] * target
        for k, c in enumerate(self._num):
            if c:
                vec[k * step] += c
        return CycloElement(target, _reduce_mod_phi(vec, target), self._den)

    def _galois_stable_under(self, subgroup: list[int]) -> bool:
        return all(self.galois(u) == self for u in subgroup)

    def descend(self, target: int):
        """Exact image in Q(zeta_target) or NotInSubfield; requires target | conductor."""
        n = self.conductor
        if n == target:
            return self
        if n % target:
            raise ValueError(f"cannot descend conductor {n} onto {target}")
        phi_n, phi_t = euler_phi(n), euler_phi(target)
        if phi_n == phi_t:
            # equal fields: n = 2*target with target odd; monomial remap
            # zeta_n = -zeta_target^((target+1)/2)
            t = target
            vec = [0] * t
            half = (t + 1) // 2
            for k, c in enumerate(self._num):
                if c:
                    sign = -1 if k & 1 else 1
                    vec[(k * half) % t] += sign * c
            return CycloElement(t, _reduce_mod_phi(vec, t), self._den)
        gens = _kernel_subgroup_generators(n, target)
        if not self._galois_stable_under(gens):
            return NotInSubfield(n, target)
        # solve for coordinates on the lifted power basis of Q(zeta_target)
        basis = [CycloElement.zeta(target, j).lift(n) for j in range(phi_t)]
        sol = _solve_rational([b.coeffs for b in basis], self.coeffs)
        if sol is None:  # cannot happen if the invariance test passed
            return NotInSubfield(n, target)
        return CycloElement.from_fractions(target, sol)

    def change_conductor(self, target: int):
        if target % self.conductor == 0:
            return self.lift(target)
        if self.conductor % target == 0:
            return self.descend(target)
        raise ValueError("target conductor neither multiple nor divisor")

    def minimal_conductor(self) -> int:
        n = self.conductor
        for d in divisors(n):
            if d == n:
                return n
            if euler_phi(d) < euler_phi(n):
                cand = self.descend(d)
                if isinstance(cand, CycloElement):
                    return d
            else:
                return d  # equal fields: always descends
        return n

    def canonicalize(self) -> "CycloElement":
        d = self.minimal_conductor()
        out = self.descend(d)
        assert isinstance(out, CycloElement)
        return out

    # -- numerics ------------------------------------------------------------

    def embed(self, prec: int = 128) -> ComplexApprox:
        """Numeric value under zeta_N -> exp(2*pi*i/N), accurate to ~2^-prec.

        The working slack c is ceil(log2(1 + sum |coeffs|)) + 16 bits.
        """
        if prec < 64:
            raise ValueError("prec must be >= 64")
        n = self.conductor
        size = sum(abs(x) for x in self._num)
        guard = max(16, (size.bit_length() if size else 1)) + 16
        with mpmath.workprec(prec + guard):
            root = mpmath.exp(2j * mpmath.pi / n)
            acc = mpmath.mpc(0)
            power = mpmath.mpc(1)
            for k, c in enumerate(self._num):
                if c:
                    acc += c * (root**k if k else 1)
            acc /= self._den
            re, im = mpmath.mpf(acc.real), mpmath.mpf(acc.imag)
        return ComplexApprox(re, im, prec)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        x = self.canonicalize()
        return {
            "conductor": x.conductor,
            "coeffs": [_frac_str(Fraction(n, x._den)) for n in x._num],
        }

    @staticmethod
    def from_json(obj: dict) -> "CycloElement":
        return CycloElement.from_fractions(obj["conductor"], [Fraction(s) for s in obj["coeffs"]])


def _coerce(x, conductor: int) -> CycloElement:
    if isinstance(x, CycloElement):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloElement.rational(x, 1)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycloElement")


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# -- fraction polynomial helpers (division/inverse only) ----------------------


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    i = len(a)
    while i > 1 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod_frac(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    r = a[:]
    for i in range(len(r) - 1, db - 1, -1):
        if r[i] == 0 or i - db < 0:
            continue
        c = r[i] / lead
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] -= c * b[j]
    return _poly_trim(q), _poly_trim(r)


def _reduce_mod_phi_frac(vec: list[Fraction], n: int) -> list[Fraction]:
    phi, poly = _reduction_data(n)
    v = list(vec) + [Fraction(0)] * max(0, phi - len(vec))
    for i in range(len(v) - 1, phi - 1, -1):
        c = v[i]
        if c:
            v[i] = Fraction(0)
            for j in range(phi):
                v[i - phi + j] -= c * poly[j]
    return v[:phi]


@lru_cache(maxsize=None)
def _kernel_subgroup_generators(n: int, m: int) -> tuple[int, ...]:
    """Small generating set of {u in (Z/nZ)^x : u = 1 mod m}."""
    members = [u for u in range(1, n) if gcd(u, n) == 1 and u % m == 1 % m]
    gens: list[int] = []
    generated = {1 % n}
    for u in members:
        if u in generated:
            continue
        gens.append(u)
        # close under multiplication
        frontier = set(generated)
        for _ in range(len(members)):
            new = {x * y % n for x in frontier for y in gens} | generated
            if new == generated:
                break
            generated = new
            frontier = new
        if len(generated) == len(members):
            break
    return tuple(gens)


def _solve_rational(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j * columns[j] = target over Q, or None."""
    rows = len(target)
    ncols = len(columns)
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    pivot_cols: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append((r, c))
        r += 1
        if r == rows:
            break
    # consistency
    for i in range(r, rows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for pr, pc in pivot_cols:
        x[pc] = aug[pr][ncols]
    # verify (free columns assumed zero)
    for i in range(rows):
        if sum(columns[j][i] * x[j] for j in range(ncols)) != target[i]:
            return None
    return x


# ---------------------------------------------------------------------------
# square roots and squareness certificates


def reconstruct_in_field(z: mpmath.mpc, conductor: int, prec: int) -> list[CycloElement]:
    """Candidate exact representations of the complex number z in Q(zeta_conductor).

    Integer-relation detection on the power basis via LLL; candidates are
    unverified (callers must check exactly).  Sorted by plausibility.
    """
    phi = euler_phi(conductor)
    scale = 1 << max(64, prec - 24)
    with mpmath.workprec(prec + 32):
        root = mpmath.exp(2j * mpmath.pi / conductor)
        vals = []
        p = mpmath.mpc(1)
        for _ in range(phi):
            vals.append(p)
            p *= root
        vals.append(mpmath.mpc(z))
        rows = []
        for j, v in enumerate(vals):
            rows.append(
                [int(i == j) for i in range(phi + 1)]
                + [int(mpmath.nint(v.real * scale)), int(mpmath.nint(v.imag * scale))]
            )
    reduced = lll_reduce(rows)
    cands = []
    for row in sorted(reduced, key=lambda r: sum(x * x for x in r[: phi + 1])):
        b = row[phi]
        if b == 0:
            continue
        coeffs = [Fraction(-row[j], b) for j in range(phi)]
        cands.append(CycloElement.from_fractions(conductor, coeffs))
    return cands


def _normalize_sqrt_sign(witness: CycloElement, prec: int = 128) -> CycloElement:
    emb = witness.embed(prec)
    tol = mpmath.mpf(2) ** (-(prec // 2))
    if emb.real < -tol or (abs(emb.real) <= tol and emb.imag < 0):
        return -witness
    return witness


def sqrt_in_cyclotomic(
    x: CycloElement,
    candidates: list[int],
    prec: int = 256,
    prec_cap: int = 4096,
):
    """Search for an exact square root of x in the candidate conductors.

    On success returns (L, witness) with witness**2 == x verified exactly and
    the sign normalized (non-negative real part; if purely imaginary,
    non-negative imaginary part).  Returns None when no candidate housed a
    root: that is only a search failure, never a proof of non-squareness.
    """
    if x.is_zero():
        raise ZeroInput("sqrt of zero input")
    for L in candidates:
        if L % x.conductor:
            raise ValueError(f"candidate conductor {L} not a multiple of {x.conductor}")
    p = prec
    while p <= prec_cap:
        with mpmath.workprec(p + 32):
            target = mpmath.sqrt(x.embed(p).to_mpc())
        for L in candidates:
            lifted = x.lift(L)
            for cand in reconstruct_in_field(target, L, p)[:4]:
                if (cand * cand) == lifted:
                    return L, _normalize_sqrt_sign(cand)
        p *= 2
    return None


class SquareWithWitness:
    kind = "square"

    def __init__(self, witness: CycloElement):
        self.witness = witness

    def __repr__(self):
        return f"SquareWithWitness({self.witness!r})"


class CertifiedNonSquare:
    """Sound non-squareness certificate: a split prime q = 1 (mod m) together
    with a residue-field reduction of g that is a quadratic non-residue."""

    kind = "non_square"

    def __init__(self, prime: int, root: int, residue: int):
        self.prime = prime
        self.root = root
        self.residue = residue

    def verify(self) -> bool:
        return legendre(self.residue, self.prime) == -1

    def __repr__(self):
        return f"CertifiedNonSquare(q={self.prime}, w={self.root}, residue={self.residue})"


class Undecided:
    kind = "undecided"

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self):
        return f"Undecided({self.reason!r})"


def reduce_mod_split_prime(x: CycloElement, q: int, w: int) -> int | None:
    """Image of x in F_q under zeta -> w (w of exact order conductor(x) in F_q^*).

    None when the denominator vanishes mod q.
    """
    den = x._den % q
    if den == 0:
        return None
    acc = 0
    wp = 1
    for c in x._num:
        if c:
            acc = (acc + c * wp) % q
        wp = wp * w % q
    return acc * pow(den, -1, q) % q


def split_primes_with_root(m: int, skip: tuple[int, ...] = ()):
    """Yield (q, w): primes q = 1 (mod m) with w of exact order m, both residue
    classes of q mod 4 interleaved so that -1 can be certified non-square."""
    from .numbers import element_of_order

    mm = lcm(m, 4)
    gens = [primes_in_progression(r, mm) for r in _unit_classes_mod(mm, m)]
    idx = 0
    while True:
        q = next(gens[idx % len(gens)])
        idx += 1
        if q in skip or q <= m:
            continue
        yield q, element_of_order(m, q)


def _unit_classes_mod(mm: int, m: int) -> list[int]:
    """Residues r mod mm with r = 1 mod m, coprime to mm (covering q mod 4)."""
    out = [r for r in range(1, mm + 1) if r % m == 1 % m and gcd(r, mm) == 1]
    return out or [1]


def is_square_in_subfield(
    g: CycloElement,
    m: int,
    trial_primes: int = 24,
    prec: int = 256,
    prec_cap: int = 4096,
):
    """Decide squareness of g inside Q(zeta_m).

    Returns SquareWithWitness (exact, verified), CertifiedNonSquare (sound
    split-prime certificate), or Undecided after the configured budget.
    """
    if g.is_zero():
        raise ZeroInput("squareness of zero")
    gm = g.change_conductor(m) if g.conductor != m else g
    if isinstance(gm, NotInSubfield):
        raise ValueError("element does not lie in Q(zeta_m)")
    if gm.is_rational() and gm.as_rational() == 1:
        return SquareWithWitness(CycloElement.one(m))
    tried = 0
    gen = split_primes_with_root(m)
    while tried < trial_primes:
        q, w = next(gen)
        r = reduce_mod_split_prime(gm, q, w)
        if r is None or r == 0:
            continue
        tried += 1
        if legendre(r, q) == -1:
            return CertifiedNonSquare(q, w, r)
    found = sqrt_in_cyclotomic(gm, [m], prec=prec, prec_cap=prec_cap)
    if found is not None:
        return SquareWithWitness(found[1])
    return Undecided(f"no certificate after {trial_primes} primes and precision {prec_cap}")
