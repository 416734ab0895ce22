"""The connected monodromy field: generators, 2-rank, and reports.

For odd m the field is generated over Q(zeta_m) by the Gamma-values of the
torus equations; for even m each value is adjusted by the root-of-unity and
2-power factors coming from the twist bookkeeping.  The rank over Q(zeta_m)
is certified from both sides: split-prime quadratic-residue vectors bound it
from below, and exact square witnesses for the residue-kernel relations bound
it from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gamma_exact
from .cyclotomic import (
    CertifiedNonSquare,
    CycloElement,
    NotInSubfield,
    SquareWithWitness,
    Undecided,
    is_square_in_subfield,
    reduce_mod_split_prime,
    split_primes_with_root,
    sqrt_in_cyclotomic,
)
from .errors import BudgetExhausted, DescentFailure, EvenModulus
from .gamma_exact import SquareProfile, profile_sqrt, square_profile
from .mumford_tate import MTEquation, mt_equations
from .numbers import euler_phi, factorize, legendre


@dataclass
class MonodromyGenerator:
    """One torus equation with the exact square class of its Gamma-value."""

    equation: MTEquation
    square_class: CycloElement  # exact, in Q(zeta_m)
    profile: SquareProfile  # closed-form provenance of the class
    squareness: SquareWithWitness | CertifiedNonSquare | Undecided | None = None

    def to_json(self) -> dict:
        out = {
            "equation": self.equation.to_json(),
            "square_class": self.square_class.to_json(),
        }
        if self.squareness is not None:
            out["is_square_in_K"] = self.squareness.kind == "square"
        return out


def _generator_profile(m: int, eq: MTEquation) -> SquareProfile:
    """Profile of the square class: Gamma(f)^2 for odd m; for even m the
    value is adjusted by 2^{4 e(f)/m} * zeta_m^{e(f)} (the fixed root
    mu = 4^{1/m} zeta_{2m} of x^m + 4 squared to mu^{2e})."""
    prof = square_profile(gamma_exact.from_equation(eq))
    if m % 2 == 0:
        e = eq.weighted_exponent_sum
        prof.mul_radical(2, Fraction(4 * e, m))
        prof.mul_zeta(m, e % m)
    return prof


def generator_square_class(m: int, eq: MTEquation) -> tuple[CycloElement, SquareProfile]:
    prof = _generator_profile(m, eq)
    value = gamma_exact.assemble_profile(prof)
    in_k = value.change_conductor(m) if value.conductor != m else value
    if isinstance(in_k, NotInSubfield):
        raise DescentFailure(
            f"square class of {eq} did not descend to Q(zeta_{m}) (bug)"
        )
    return in_k, prof


def generators(m: int, trial_primes: int = 24) -> list[MonodromyGenerator]:
    """One generator per kernel-basis equation, each with a decided
    squareness verdict in Q(zeta_m)."""
    if m < 3:
        raise ValueError("need m >= 3")
    gens = []
    for eq in mt_equations(m):
        value, prof = generator_square_class(m, eq)
        gens.append(MonodromyGenerator(eq, value, prof))
    _decide_squareness(m, gens, trial_primes)
    return gens


def _witness_for(m: int, value: CycloElement, prof: SquareProfile | None):
    """Exact y in Q(zeta_m) with y^2 = value, or None.

    Tries the closed-form half profile first (free), falling back to numeric
    reconstruction inside Q(zeta_m).
    """
    if prof is not None:
        root = profile_sqrt(prof)
        if root is not None:
            cand = root.change_conductor(m) if root.conductor != m else root
            if isinstance(cand, CycloElement) and cand * cand == value:
                return cand
            return None  # exact root exists outside K: value is not a K-square
    found = sqrt_in_cyclotomic(value, [m])
    if found is not None:
        return found[1]
    return None


def _decide_squareness(m: int, gens: list[MonodromyGenerator], trial_primes: int) -> None:
    residues = _residue_matrix(m, gens, trial_primes)
    for gen, vec in zip(gens, residues):
        if any(vec):
            gen.squareness = _certify_nonsquare(m, gen.square_class)
        else:
            witness = _witness_for(m, gen.square_class, gen.profile)
            if witness is not None:
                gen.squareness = SquareWithWitness(witness)
            else:
                gen.squareness = is_square_in_subfield(gen.square_class, m, trial_primes)


def _certify_nonsquare(m: int, value: CycloElement, budget: int = 200) -> CertifiedNonSquare:
    for count, (q, w) in enumerate(split_primes_with_root(m)):
        if count > budget:
            raise BudgetExhausted("no non-square certificate found")
        r = reduce_mod_split_prime(value, q, w)
        if r is None or r == 0:
            continue
        if legendre(r, q) == -1:
            return CertifiedNonSquare(q, w, r)
    raise BudgetExhausted("unreachable")


def _residue_matrix(m: int, gens: list[MonodromyGenerator], min_primes: int) -> list[list[int]]:
    """F2 residue vectors (one row per generator) over a shared prime set."""
    rows: list[list[int]] = [[] for _ in gens]
    used = 0
    for q, w in split_primes_with_root(m):
        col = []
        ok = True
        for gen in gens:
            r = reduce_mod_split_prime(gen.square_class, q, w)
            if r is None or r == 0:
                ok = False
                break
            col.append(0 if legendre(r, q) == 1 else 1)
        if not ok:
            continue
        for row, bit in zip(rows, col):
            row.append(bit)
        used += 1
        if used >= min_primes:
            break
    return rows


def _gf2_rank_kernel(rows: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Rank of the F2 row space and a basis of the left kernel (relations
    among the rows), via elimination with identity tracking."""
    n = len(rows)
    width = len(rows[0]) if rows else 0
    work = []
    for i, row in enumerate(rows):
        bits = 0
        for j, b in enumerate(row):
            if b:
                bits |= 1 << j
        track = 1 << i
        work.append((bits, track))
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for bits, track in work:
        while bits:
            low = bits & (-bits)
            j = low.bit_length() - 1
            if j in pivots:
                pb, pt = pivots[j]
                bits ^= pb
                track ^= pt
            else:
                pivots[j] = (bits, track)
                break
        if not bits:
            kernel.append([(track >> i) & 1 for i in range(n)])
    return len(pivots), kernel


def two_rank(
    gens: list[MonodromyGenerator],
    m: int | None = None,
    max_primes: int = 400,
) -> tuple[int, list[dict]]:
    """Rank over F2 of the subgroup of K^x/(K^x)^2 generated by the square
    classes, with every residue-kernel basis vector confirmed by an exact
    square witness for the corresponding product.

    The prime scan continues for 2r + 8 primes past the point where the rank
    stabilizes; if a kernel vector fails to confirm, more primes are added.
    """
    if not gens:
        return 0, []
    if any(g.squareness is not None and g.squareness.kind == "undecided" for g in gens):
        raise ValueError("all generators must be decided before ranking")
    m = m or gens[0].equation.m
    primes_used: list[tuple[int, int]] = []
    rows: list[list[int]] = [[] for _ in gens]
    stream = split_primes_with_root(m)
    stable_for = 0
    last_rank = -1
    while len(primes_used) < max_primes:
        q, w = next(stream)
        col = []
        for gen in gens:
            r = reduce_mod_split_prime(gen.square_class, q, w)
            if r is None or r == 0:
                col = None
                break
            col.append(0 if legendre(r, q) == 1 else 1)
        if col is None:
            continue
        for row, bit in zip(rows, col):
            row.append(bit)
        primes_used.append((q, w))
        rank, kernel = _gf2_rank_kernel(rows)
        if rank == last_rank:
            stable_for += 1
        else:
            stable_for = 0
            last_rank = rank
        if stable_for < 2 * rank + 8:
            continue
        witnesses = _confirm_kernel(m, gens, kernel)
        if witnesses is not None:
            return rank, witnesses
        stable_for = 0  # a fake relation survived: scan further
    raise BudgetExhausted(f"rank not certified within {max_primes} primes")


def _confirm_kernel(m: int, gens: list[MonodromyGenerator], kernel: list[list[int]]):
    witnesses = []
    for vec in kernel:
        prof = SquareProfile()
        value = CycloElement.one(m)
        members = []
        for i, bit in enumerate(vec):
            if bit:
                prof.mul_profile(gens[i].profile)
                value = value * gens[i].square_class
                members.append(gens[i].equation.to_text())
        w = _witness_for(m, value, prof)
        if w is None:
            return None
        witnesses.append({"product_of": members, "witness": w.to_json()})
    return witnesses


@dataclass
class MonodromyFieldReport:
    m: int
    generators: list[MonodromyGenerator]
    rank: int
    degree_over_Q: int
    witnesses: list[dict]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "rank": self.rank,
            "degree_over_Q": self.degree_over_Q,
            "generators": [g.to_json() for g in self.generators],
            "witnesses": self.witnesses,
        }


def report(m: int, trial_primes: int = 24) -> MonodromyFieldReport:
    """Full connected-monodromy-field report for J_m."""
    gens = generators(m, trial_primes)
    rank, witnesses = two_rank(gens, m)
    fac = factorize(m)
    if m % 2 and len(fac) == 1:
        assert rank == 0, f"odd prime power m = {m} must have rank 0"
    return MonodromyFieldReport(
        m=m,
        generators=gens,
        rank=rank,
        degree_over_Q=euler_phi(m) * 2**rank,
        witnesses=witnesses,
    )


def twist_invariance_check(m: int) -> bool:
    """True iff e(f) = 0 (mod m) for every kernel-basis equation; this is the
    computable content of twist independence for odd m."""
    if m % 2 == 0:
        raise EvenModulus("twist invariance is an odd-m statement")
    return all(eq.weighted_exponent_sum % m == 0 for eq in mt_equations(m))
