"""Characters of the Fermat symmetry group, weights, and distribution algebra.

A character is a zero-sum tuple of residues mod m.  Its occurrence-counting
function lives on A_m = (1/m)Z/Z, stored densely as a length-m integer
sequence indexed by k <-> k/m.  Constant-weight functions decompose (after
doubling) integrally over the basis functions built from the sets
S_{d,a} = {a + k/d} u {-d a}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import BadDivisor, BadIndex, NoIntegralSolution, NotConstantWeight, ZeroArgument
from .linalg import kernel_basis, lll_reduce, solve_integer
from .numbers import divisors, units_mod


@dataclass(frozen=True)
class FermatCharacter:
    """Zero-sum tuple (a_0, ..., a_{n+1}) of residues mod m; length >= 3.

    gamma_indices, when present, records that the character was assembled as
    a concatenation of the basic triples (i, i, -2i) with those i.
    """

    modulus: int
    entries: tuple[int, ...]
    gamma_indices: tuple[int, ...] | None = None

    def __post_init__(self):
        m = self.modulus
        ent = tuple(a % m for a in self.entries)
        object.__setattr__(self, "entries", ent)
        if len(ent) < 3:
            raise ValueError("characters have at least 3 entries")
        if sum(ent) % m:
            raise ValueError(f"entries must sum to 0 mod {m}: {ent}")

    @property
    def n(self) -> int:
        """The ambient dimension: entries live in (Z/m)^(n+2)."""
        return len(self.entries) - 2

    def to_text(self) -> str:
        return "(" + ",".join(str(a) for a in self.entries) + f") mod {self.modulus}"

    def __repr__(self) -> str:
        return self.to_text()


def make_gamma_char(i: int, m: int) -> FermatCharacter:
    """The basic character (i, i, -2i) mod m."""
    i %= m
    if i == 0 or (2 * i) % m == 0:
        raise BadIndex(f"need i and 2i nonzero mod {m}, got i = {i}")
    return FermatCharacter(m, (i, i, -2 * i % m), gamma_indices=(i,))


def concat(a: FermatCharacter, b: FermatCharacter) -> FermatCharacter:
    if a.modulus != b.modulus:
        raise ValueError("concat requires equal moduli")
    gi = None
    if a.gamma_indices is not None and b.gamma_indices is not None:
        gi = a.gamma_indices + b.gamma_indices
    return FermatCharacter(a.modulus, a.entries + b.entries, gamma_indices=gi)


def concat_gammas(m: int, indices: list[int]) -> FermatCharacter:
    """gamma_{i_1} * ... * gamma_{i_q} for the given index list."""
    out = None
    for i in indices:
        g = make_gamma_char(i, m)
        out = g if out is None else concat(out, g)
    if out is None:
        raise ValueError("empty index list")
    return out


def scale(u: int, a: FermatCharacter) -> FermatCharacter:
    m = a.modulus
    if gcd(u, m) != 1:
        raise ValueError(f"gcd({u}, {m}) != 1")
    gi = None
    if a.gamma_indices is not None:
        gi = tuple(u * i % m for i in a.gamma_indices)
    return FermatCharacter(m, tuple(u * x % m for x in a.entries), gamma_indices=gi)


def weight(a: FermatCharacter, t: int = 1) -> Fraction:
    """<t*alpha> = sum_i [t a_i] / m with representatives in [0, m-1]."""
    m = a.modulus
    if gcd(t, m) != 1:
        raise ValueError(f"gcd({t}, {m}) != 1")
    return Fraction(sum((t * x) % m for x in a.entries), m)


def membership(a: FermatCharacter) -> dict[str, bool]:
    """in_A: all entries nonzero; in_B: additionally <t*alpha> = n/2 + 1 for all t."""
    in_a = all(x % a.modulus for x in a.entries)
    target = Fraction(a.n, 2) + 1
    in_b = in_a and all(weight(a, t) == target for t in units_mod(a.modulus))
    return {"in_A": in_a, "in_B": in_b}


@dataclass(frozen=True)
class AmFunction:
    """Integer-valued function on A_m = (1/m)Z/Z, index k <-> k/m."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.modulus:
            raise ValueError("values must have length m")

    def __add__(self, other: "AmFunction") -> "AmFunction":
        if self.modulus != other.modulus:
            raise ValueError("mismatched moduli")
        return AmFunction(self.modulus, tuple(x + y for x, y in zip(self.values, other.values)))

    def __sub__(self, other: "AmFunction") -> "AmFunction":
        return self + (-1) * other

    def __rmul__(self, c: int) -> "AmFunction":
        return AmFunction(self.modulus, tuple(c * x for x in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def to_json(self) -> dict:
        return {f"{k}/{self.modulus}": v for k, v in enumerate(self.values) if v}


def to_am_function(a: FermatCharacter) -> AmFunction:
    vals = [0] * a.modulus
    for x in a.entries:
        vals[x] += 1
    return AmFunction(a.modulus, tuple(vals))


def weight_function(f: AmFunction, u: int = 1) -> Fraction:
    """u -> sum_{a in A_m} {a} f(ua), with {a} the representative in (0, 1]."""
    m = f.modulus
    if gcd(u, m) != 1:
        raise ValueError(f"gcd({u}, {m}) != 1")
    total = Fraction(0)
    for k in range(m):
        v = f.values[(u * k) % m]
        if v:
            total += v * (Fraction(k, m) if k else Fraction(1))
    return total


def is_constant_weight(f: AmFunction) -> bool:
    ws = {weight_function(f, u) for u in units_mod(f.modulus)}
    return len(ws) == 1


def _a_index(a, m: int) -> int:
    """Normalize an element of A_m (Fraction or index int) to an index mod m."""
    if isinstance(a, Fraction):
        if m % a.denominator:
            raise ValueError(f"{a} is not in (1/{m})Z/Z")
        return a.numerator * (m // a.denominator) % m
    return int(a) % m


def epsilon(d: int, a, m: int) -> AmFunction:
    """The formal sum over S_{d,a} = {a + k/d : k} u {-da}, multiplicities adding.

    Implemented with multiplicities rather than as a 0/1 characteristic
    function: the relation algebra needs additivity under collisions.
    """
    if d < 1 or m % d:
        raise BadDivisor(f"d = {d} must divide m = {m}")
    k0 = _a_index(a, m)
    if k0 == 0:
        raise ZeroArgument("a must be nonzero in A_m")
    vals = [0] * m
    step = m // d
    for j in range(d):
        vals[(k0 + j * step) % m] += 1
    vals[(-d * k0) % m] += 1
    return AmFunction(m, tuple(vals))


@lru_cache(maxsize=None)
def _epsilon_system(m: int):
    """Deduplicated epsilon columns for modulus m plus solver data.

    epsilon_{d,b} depends on b only through d*b (and epsilon_{1,b} is
    symmetric in b), so one column is kept per distinct value vector, labeled
    by its first (d, b) in ascending order.  Returns (labels, matrix,
    lll_reduced_kernel_rows).
    """
    labels: list[tuple[int, int]] = []
    columns: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for d in divisors(m):
        for b in range(1, m):
            col = epsilon(d, b, m).values
            if col in seen:
                continue
            seen.add(col)
            labels.append((d, b))
            columns.append(col)
    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(m)]
    kern = kernel_basis(matrix)
    kern_red = lll_reduce(kern) if kern else []
    return labels, matrix, kern_red


def _shorten_mod_lattice(sol: list[int], basis: list[list[int]]) -> list[int]:
    """Deterministic short representative of sol modulo the row lattice."""
    if not basis:
        return sol
    v = list(sol)
    norms = [sum(x * x for x in row) for row in basis]
    improved = True
    while improved:
        improved = False
        for row, nn in zip(basis, norms):
            ip = sum(a * b for a, b in zip(v, row))
            t = (2 * ip + nn) // (2 * nn)  # nearest integer to ip/nn
            if t:
                cand = [a - t * b for a, b in zip(v, row)]
                if sum(x * x for x in cand) < sum(x * x for x in v):
                    v = cand
                    improved = True
    return v


def decompose_distribution(f: AmFunction) -> dict[tuple[int, int], int]:
    """Integer coefficients {(d, b): c} with 2f = sum c * epsilon_{d,b}.

    Requires f to have constant weight.  The solution is canonicalized by
    norm reduction against the LLL-reduced relation kernel, so repeated runs
    give identical output.  The identity is re-verified exactly on every call.
    """
    m = f.modulus
    if not is_constant_weight(f):
        raise NotConstantWeight("weight function is not constant over units")
    labels, matrix, kern = _epsilon_system(m)
    target = [2 * v for v in f.values]
    sol = solve_integer(matrix, target)
    if sol is None:
        raise NoIntegralSolution("constant-weight double failed to decompose (bug)")
    sol = _shorten_mod_lattice(sol, kern)
    out = {labels[j]: c for j, c in enumerate(sol) if c}
    # mandatory re-expansion check
    acc = [0] * m
    for (d, b), c in out.items():
        for i, v in enumerate(epsilon(d, b, m).values):
            acc[i] += c * v
    if acc != target:
        raise NoIntegralSolution("re-expansion mismatch (bug)")
    return out


def char_of_equation(f) -> FermatCharacter:
    """gamma_f for an equation object with .m and .exponents (j -> d_j).

    Uses the non-negative normalization e_j = d_j + 2q, concatenating e_j
    copies of the basic character of index j in ascending index order.
    """
    m = f.m
    q = sum(-d for d in f.exponents.values() if d < 0)
    indices: list[int] = []
    for j in sorted(_variable_indices(m)):
        e = f.exponents.get(j, 0) + 2 * q
        indices.extend([j] * e)
    return concat_gammas(m, indices)


def _variable_indices(m: int) -> list[int]:
    return [j for j in range(1, m) if 2 * j != m]
