"""CM types, isogeny decomposition, and torus equations for J_m.

The variable x_i corresponds to the eigenbasis vector of the zeta_m action
with character zeta -> zeta^i, for i in {1, ..., m-1} minus m/2.  The lattice
map sends x_i through the reflex norm of the CM type of the factor indexed by
d = m / gcd(i, m) and then through the norm lift to level m; its kernel is
the character lattice of the torus cut out in the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .errors import BadModulus, BadPartition, NotInKernel
from .linalg import hnf_row, kernel_basis, row_rank, smith_normal_form
from .numbers import divisors, euler_phi, is_prime, units_mod

EXCEPTIONAL_DIVISORS = (20, 24, 60)

# Verbatim constants for the exceptional endomorphism fields: defining
# polynomials for d = 20, 24 and the three radical generators over Q(zeta_60).
F20_POLY = (1, 2, -2, -6, 2, -8, -2, -18, 20, 12, 46, 14, 27, 4, 8, 0, 1)  # ascending
F24_POLY = (256, 0, 0, 0, -128, 0, 0, 0, 432, 0, 0, 0, 40, 0, 0, 0, 1)  # ascending
F60_RADICAND_EXPONENTS = (
    {12: 3, 8: 2, 6: -2, 4: -1, 2: -2, 0: -1},
    {13: 4, 3: -2},
    {14: 2, 9: -2, 6: -1, 4: -2, 3: 2, 0: 2},
)
F60_FIELD_POLY = (45, 0, 15, 0, 1)  # x^4 + 15 x^2 + 45, CM field of Y_60


def variable_indices(m: int) -> list[int]:
    """Indices of the diagonal coordinates: 1..m-1, skipping m/2 for even m."""
    return [i for i in range(1, m) if 2 * i != m]


def genus(m: int) -> int:
    return (m - 1) // 2


def cm_type(d: int) -> list[int]:
    """{j coprime to d, 1 <= j <= floor((d-1)/2)}."""
    if d < 3:
        raise BadModulus("cm_type needs d >= 3")
    return [j for j in range(1, genus(d) + 1) if gcd(j, d) == 1]


def stabilizer(d: int) -> list[int]:
    """Units u with u * Phi_d = Phi_d, by brute force, checked against the
    known case list (trivial for odd and 2 mod 4; {1, d/2 - 1} for 4 | d
    outside 20/24/60; the three exceptional groups otherwise)."""
    phi_set = set(cm_type(d))
    stab = [u for u in units_mod(d) if {u * j % d for j in phi_set} == phi_set]
    if d in (20, 24, 60):
        expected = {20: [1, 3, 7, 9], 24: [1, 5, 7, 11], 60: [1, 11, 19, 29]}[d]
    elif d % 4 == 0:
        expected = sorted({1, d // 2 - 1})
    else:
        expected = [1]
    assert stab == expected, f"stabilizer({d}) = {stab}, expected {expected}"
    return stab


@dataclass(frozen=True)
class CMFactorData:
    divisor: int
    dimension: int
    cm_type: tuple[int, ...]
    stabilizer: tuple[int, ...]
    simple: bool
    exceptional: bool
    endo_algebra: str
    endo_field: str
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "d": self.divisor,
            "dimension": self.dimension,
            "cm_type": list(self.cm_type),
            "stabilizer": list(self.stabilizer),
            "simple": self.simple,
            "exceptional": self.exceptional,
            "endo_algebra": self.endo_algebra,
            "endo_field": self.endo_field,
            "notes": list(self.notes),
        }


def _factor_data(d: int) -> CMFactorData:
    stab = stabilizer(d)
    notes = []
    if d % 2 and is_prime(d):
        notes.append(f"isogenous over Q to the Jacobian of y^2 = x^{d} + 1")
    if d % 4 == 2:
        notes.append(f"isogenous over Q to the factor for divisor {d // 2}")
    if d in EXCEPTIONAL_DIVISORS:
        simple = False
        alg_centre = {20: "Q(sqrt(-5))", 24: "Q(sqrt(-6))", 60: "splitting field of x^4+15x^2+45"}[d]
        algebra = f"Mat_4x4({alg_centre})"
        fld = {
            20: "root field of f_20 (degree 16)",
            24: "root field of f_24 = x^16+40x^12+432x^8-128x^4+256 (degree 16)",
            60: "degree-8 extension of Q(zeta_60) by the three stored radicals",
        }[d]
        notes.append("fourth power of a simple factor over the closure")
    elif d % 4 == 0:
        simple = False
        algebra = f"Mat_2x2(Q(zeta_{d} - zeta_{d}^-1))"
        fld = f"Q(zeta_{d})"
        notes.append("square of a simple factor with CM by Q(zeta_d - zeta_d^-1)")
    else:
        simple = True
        algebra = f"Q(zeta_{d})"
        fld = f"Q(zeta_{d})"
    return CMFactorData(
        divisor=d,
        dimension=euler_phi(d) // 2,
        cm_type=tuple(cm_type(d)),
        stabilizer=tuple(stab),
        simple=simple,
        exceptional=d in EXCEPTIONAL_DIVISORS,
        endo_algebra=algebra,
        endo_field=fld,
        notes=tuple(notes),
    )


def decompose(m: int) -> dict:
    """Isogeny factors of J_m (one per divisor d of m, d not in {1, 2}) and
    the endomorphism-field report."""
    if m < 3:
        raise BadModulus("need m >= 3")
    factors = [_factor_data(d) for d in divisors(m) if d not in (1, 2)]
    assert sum(f.dimension for f in factors) == genus(m), "dimension count failed"
    exceptional = [d for d in EXCEPTIONAL_DIVISORS if m % d == 0]
    if exceptional:
        endo_field = "compositum of Q(zeta_%d) with %s" % (
            m,
            ", ".join(f"the stored endomorphism field for {d}" for d in exceptional),
        )
    else:
        endo_field = f"Q(zeta_{m})"
    return {
        "m": m,
        "genus": genus(m),
        "factors": factors,
        "endo_field": endo_field,
        "exceptional_divisors": exceptional,
    }


@dataclass(frozen=True)
class MTEquation:
    """A Laurent monomial prod x_j^{d_j} identically 1 on the torus.

    exponents maps variable index -> d_j (zero entries omitted); the total
    degree is always 0.
    """

    m: int
    exponents: dict[int, int] = field(hash=False)

    def __post_init__(self):
        exps = {j: int(d) for j, d in self.exponents.items() if d}
        bad = [j for j in exps if j < 1 or j >= self.m or 2 * j == self.m]
        if bad:
            raise ValueError(f"invalid variable indices {bad} for m = {self.m}")
        if sum(exps.values()):
            raise ValueError("total degree of an equation must be 0")
        object.__setattr__(self, "exponents", exps)

    @property
    def q(self) -> int:
        return sum(-d for d in self.exponents.values() if d < 0)

    def e(self, j: int) -> int:
        return self.exponents.get(j, 0) + 2 * self.q

    @property
    def n(self) -> int:
        return sum(self.e(j) for j in variable_indices(self.m))

    @property
    def weighted_exponent_sum(self) -> int:
        """e(f) = sum_j j * e_j."""
        return sum(j * self.e(j) for j in variable_indices(self.m))

    def as_vector(self) -> list[int]:
        return [self.exponents.get(j, 0) for j in variable_indices(self.m)]

    def is_symplectic_pair(self) -> bool:
        """True for x_j x_{m-j} / x_k x_{m-k} (the polarization family)."""
        pos = sorted(j for j, d in self.exponents.items() if d > 0 for _ in range(d))
        neg = sorted(j for j, d in self.exponents.items() if d < 0 for _ in range(-d))
        return (
            len(pos) == 2
            and len(neg) == 2
            and (pos[0] + pos[1]) % self.m == 0
            and (neg[0] + neg[1]) % self.m == 0
        )

    def to_text(self) -> str:
        num = [(j, d) for j, d in sorted(self.exponents.items()) if d > 0]
        den = [(j, -d) for j, d in sorted(self.exponents.items()) if d < 0]
        def fmt(j, e):
            return f"x_{j}" if e == 1 else f"x_{j}^{e}"
        parts = "*".join(fmt(j, e) for j, e in num) or "1"
        for j, e in den:
            parts += "/" + fmt(j, e)
        return parts

    def to_json(self) -> dict:
        return {"m": self.m, "exponents": {str(j): d for j, d in sorted(self.exponents.items())}}

    def __repr__(self) -> str:
        return self.to_text()

    def __mul__(self, other: "MTEquation") -> "MTEquation":
        if other.m != self.m:
            raise ValueError("mismatched moduli")
        exps = dict(self.exponents)
        for j, d in other.exponents.items():
            exps[j] = exps.get(j, 0) + d
        return MTEquation(self.m, exps)

    @staticmethod
    def from_text(m: int, text: str) -> "MTEquation":
        exps: dict[int, int] = {}
        sign = 1
        for chunk in text.replace("*", " * ").replace("/", " / ").split():
            if chunk == "*":
                continue
            if chunk == "/":
                sign = -1
                continue
            tok = chunk.strip()
            if not tok.startswith("x_"):
                raise ValueError(f"bad factor {tok!r}")
            body = tok[2:]
            if "^" in body:
                js, es = body.split("^")
                j, e = int(js), int(es)
            else:
                j, e = int(body), 1
            exps[j] = exps.get(j, 0) + sign * e
        return MTEquation(m, exps)


class CharacterLatticeMap:
    """Integer matrix 'E': rows indexed by the units mod m (ascending),
    columns by the variable indices."""

    def __init__(self, m: int):
        if m < 3:
            raise BadModulus("need m >= 3")
        self.m = m
        self.row_index = units_mod(m)
        self.col_index = variable_indices(m)
        self.matrix = [[0] * len(self.col_index) for _ in self.row_index]
        row_pos = {u: r for r, u in enumerate(self.row_index)}
        for c, i in enumerate(self.col_index):
            d = m // gcd(i, m)
            j = i // gcd(i, m)
            # reflex image: sum over a in Phi_d of [a^{-1} j mod d]
            counts: dict[int, int] = {}
            for a in cm_type(d):
                ainv = pow(a, -1, d)
                cls = ainv * j % d
                counts[cls] = counts.get(cls, 0) + 1
            # norm lift to level m: [cls mod d] -> sum over units u = cls (d)
            for u in self.row_index:
                cls = u % d
                if cls in counts:
                    self.matrix[row_pos[u]][c] += counts[cls]

    def apply(self, vec: list[int]) -> list[int]:
        return [sum(row[c] * vec[c] for c in range(len(vec))) for row in self.matrix]

    def in_kernel(self, eq: MTEquation) -> bool:
        return not any(self.apply(eq.as_vector()))

    def rank(self) -> int:
        return row_rank(self.matrix)

    def rank_smith(self) -> int:
        return len(smith_normal_form(self.matrix))


@lru_cache(maxsize=None)
def build_E_matrix(m: int) -> CharacterLatticeMap:
    return CharacterLatticeMap(m)


@lru_cache(maxsize=None)
def mt_equations(m: int) -> tuple[MTEquation, ...]:
    """Hermite-normal-form basis of the kernel of the character lattice map,
    one equation per basis vector."""
    lat = build_E_matrix(m)
    kern = kernel_basis(lat.matrix)
    h, _ = hnf_row(kern) if kern else ([], [])
    eqs = []
    for row in h:
        if not any(row):
            continue
        eq = MTEquation(m, {lat.col_index[c]: v for c, v in enumerate(row) if v})
        assert lat.in_kernel(eq)
        eqs.append(eq)
    return tuple(eqs)


def prime_power_equation(p: int, k: int, a: int, b_set: list[int], c_set: list[int]) -> MTEquation:
    """The equation x_a * prod_{b in B} x_{p^k - b} / prod_{c in C} x_c for
    p | a, where B and C partition {a/p + j p^{k-1} : j = 0..p-1} with
    |B| = (p-1)/2.  Kernel membership is asserted."""
    if p < 3 or not is_prime(p):
        raise BadPartition("p must be an odd prime")
    if k < 2:
        raise BadPartition("need k >= 2")
    m = p**k
    if a % p or not 1 <= a <= m - 1:
        raise BadPartition("need p | a and 1 <= a <= p^k - 1")
    expected = {(a // p + j * p ** (k - 1)) % m for j in range(p)}
    if set(b_set) | set(c_set) != expected or set(b_set) & set(c_set):
        raise BadPartition("B and C must partition {a/p + j p^(k-1)}")
    if len(b_set) != (p - 1) // 2 or len(c_set) != (p + 1) // 2:
        raise BadPartition("need |B| = (p-1)/2 and |C| = (p+1)/2")
    exps: dict[int, int] = {a: 1}
    for b in b_set:
        j = (m - b) % m
        exps[j] = exps.get(j, 0) + 1
    for c in c_set:
        exps[c] = exps.get(c, 0) - 1
    eq = MTEquation(m, exps)
    if not build_E_matrix(m).in_kernel(eq):
        raise NotInKernel(f"f_{a} not in the kernel (bug)")
    return eq
