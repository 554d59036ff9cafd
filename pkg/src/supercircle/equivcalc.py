"""osp(1|2)-equivariant symbol and quantization maps.

The symbol space S_delta is the graded sum of density modules
F_delta, F_{delta-1/2}, F_{delta-1}, ...; a :class:`SymbolVector` stores the
coefficient functions of those parts by index j (weight delta - j/2).

Closed forms for the symbol map and its inverse are provided alongside
:func:`solve_betas`, which rederives the coefficients from the
equivariance conditions alone by exact linear algebra.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .contact import Density, WeightMismatch, lie_derivative
from .diffop import DiffOperator, DOrderedOperator, lie_action
from .linalg import RowReducer
from .superring import (
    XI,
    ZERO,
    SuperFunction,
    X,
    d_power,
    format_rational,
    rational,
    sf_mul,
)

DEFAULT_KMAX_BOUND = 12


class ResonanceError(ArithmeticError):
    """A denominator of the equivariant formulas vanishes at these weights."""


# --- scalars -----------------------------------------------------------------


def rational_binomial(nu, q: int) -> Fraction:
    """nu (nu-1) ... (nu-q+1) / q! for any rational nu."""
    if q < 0:
        return Fraction(0)
    nu = rational(nu)
    out = Fraction(1)
    for i in range(q):
        out = out * (nu - i) / (i + 1)
    return out


# --- resonance ---------------------------------------------------------------


@dataclass(frozen=True)
class NonResonant:
    def __str__(self):
        return "NonResonant"


@dataclass(frozen=True)
class ResonantSpecial:
    m: int

    def __str__(self):
        return f"ResonantSpecial(m={self.m})"


@dataclass(frozen=True)
class ResonantGeneric:
    m: int

    def __str__(self):
        return f"ResonantGeneric(m={self.m})"


ResonanceClass = Union[NonResonant, ResonantSpecial, ResonantGeneric]


def classify_resonance(lam, mu) -> ResonanceClass:
    """Resonant iff mu - lam is in {1/2, 1, 3/2, ...}; special iff in addition
    m = 2(mu - lam) is odd and lam = (1 - m)/4."""
    lam, mu = rational(lam), rational(mu)
    twice = 2 * (mu - lam)
    if twice.denominator != 1 or twice <= 0:
        return NonResonant()
    m = int(twice)
    if m % 2 == 1 and lam == Fraction(1 - m, 4):
        return ResonantSpecial(m)
    return ResonantGeneric(m)


# --- symbols -----------------------------------------------------------------


def _trim(parts: Iterable[SuperFunction]) -> tuple[SuperFunction, ...]:
    ps = list(parts)
    while ps and ps[-1].is_zero():
        ps.pop()
    return tuple(ps)


@dataclass(frozen=True)
class SymbolVector:
    """sum_j parts[j] alpha^{delta - j/2}."""

    delta: Fraction
    parts: tuple[SuperFunction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "delta", rational(self.delta))
        object.__setattr__(self, "parts", _trim(self.parts))

    @classmethod
    def single(cls, delta, j: int, f: SuperFunction) -> "SymbolVector":
        return cls(delta, [ZERO] * j + [f])

    @classmethod
    def from_densities(cls, delta, densities: Iterable[Density]) -> "SymbolVector":
        delta = rational(delta)
        parts: dict[int, SuperFunction] = {}
        for phi in densities:
            j2 = 2 * (delta - phi.weight)
            if j2.denominator != 1 or j2 < 0:
                raise WeightMismatch(
                    f"weight {phi.weight} is not delta - j/2 for delta = {delta}"
                )
            j = int(j2)
            parts[j] = parts.get(j, ZERO) + phi.fn
        n = max(parts, default=-1) + 1
        return cls(delta, [parts.get(j, ZERO) for j in range(n)])

    def weight(self, j: int) -> Fraction:
        return self.delta - Fraction(j, 2)

    def part(self, j: int) -> SuperFunction:
        return self.parts[j] if 0 <= j < len(self.parts) else ZERO

    def densities(self) -> list[Density]:
        return [Density(f, self.weight(j)) for j, f in enumerate(self.parts) if f]

    def is_zero(self) -> bool:
        return not self.parts

    def _check(self, other: "SymbolVector"):
        if self.delta != other.delta:
            raise WeightMismatch(f"symbol spaces S_{self.delta} and S_{other.delta} differ")

    def __add__(self, other: "SymbolVector") -> "SymbolVector":
        self._check(other)
        n = max(len(self.parts), len(other.parts))
        return SymbolVector(self.delta, [self.part(j) + other.part(j) for j in range(n)])

    def __sub__(self, other: "SymbolVector") -> "SymbolVector":
        return self + other.scale(-1)

    def scale(self, c) -> "SymbolVector":
        return SymbolVector(self.delta, [f * c for f in self.parts])

    def __str__(self):
        items = [f"[{j}] ({f})@{format_rational(self.weight(j))}" for j, f in enumerate(self.parts) if f]
        return "; ".join(items) or "0"


def symbol_action(h: SuperFunction, S: SymbolVector) -> SymbolVector:
    """Lie derivative applied to each part at its own weight."""
    return SymbolVector(
        S.delta, [lie_derivative(h, Density(f, S.weight(j))).fn for j, f in enumerate(S.parts)]
    )


# --- closed forms ------------------------------------------------------------


def _shared_numerator(n: int, k: int, lam: Fraction) -> Fraction:
    e = 1 if (n + k) % 2 == 0 else -1
    first = rational_binomial(k // 2, (2 * n + 1 - e) // 4)
    second = rational_binomial((k - 1) // 2 + 2 * lam, (2 * n + 1 + e) // 4)
    return first * second


def symbol_coefficient(n: int, k: int, lam, mu) -> Fraction:
    """Coefficient of D^n(a) in sigma(a Dbar^k); raises ResonanceError on 0/0 or x/0."""
    lam, mu = rational(lam), rational(mu)
    den = rational_binomial(2 * (mu - lam) + n - k - 1, (n + 1) // 2)
    if den == 0:
        raise ResonanceError(
            f"symbol map denominator vanishes at n={n}, k={k}, lambda={lam}, mu={mu}"
        )
    sign = -1 if ((n + 1) // 2) % 2 else 1
    return sign * _shared_numerator(n, k, lam) / den


def quantization_coefficient(n: int, k: int, lam, mu) -> Fraction:
    """Coefficient of D^n(f) Dbar^{k-n} in Q(f alpha^{mu-lam-k/2})."""
    lam, mu = rational(lam), rational(mu)
    # floor((n-1)/2) at n = 0 is -1; the lower index there is 0 so the value is 1.
    den = rational_binomial(2 * (mu - lam) - k + (n - 1) // 2, (n + 1) // 2)
    if den == 0:
        raise ResonanceError(
            f"quantization denominator vanishes at n={n}, k={k}, lambda={lam}, mu={mu}"
        )
    return _shared_numerator(n, k, lam) / den


def dbasis_quantization_coefficient(n: int, k: int, lam, mu) -> Fraction:
    """Coefficient of D^n(f) D^{k-n} in the D-ordered quantization formula."""
    lam, mu = rational(lam), rational(mu)
    q = (n + 1) // 2
    den = rational_binomial(k + 2 * (lam - mu), q)
    num = rational_binomial(k // 2, q) * rational_binomial((k - 1) // 2 + 2 * lam, n // 2)
    if den == 0:
        if num == 0:
            return Fraction(0)
        raise ResonanceError(
            f"D-basis quantization denominator vanishes at n={n}, k={k}, lambda={lam}, mu={mu}"
        )
    return num / den


def _special_table(lam: Fraction, mu: Fraction, k: int) -> "BetaTable":
    bound = max(k, DEFAULT_KMAX_BOUND)
    result = _solve_betas_cached(bound, lam, mu, None)
    if isinstance(result, Unique):
        return result.table
    if isinstance(result, Family):
        return result.particular
    raise ResonanceError(f"no equivariant symbol map at lambda={lam}, mu={mu}")


def _symbol_with(A: DiffOperator, coefficient) -> SymbolVector:
    parts: dict[int, SuperFunction] = {}
    for k, a in enumerate(A.coeffs):
        for p, part in a.homogeneous_parts():
            for n in range(k + 1):
                c = coefficient(k, n, p)
                if c:
                    parts[k - n] = parts.get(k - n, ZERO) + d_power(part, n) * c
    size = max(parts, default=-1) + 1
    return SymbolVector(A.dst - A.src, [parts.get(j, ZERO) for j in range(size)])


def symbol_map(A: DiffOperator) -> SymbolVector:
    """The osp(1|2)-equivariant symbol of A, normalized by the principal symbol.

    At the special resonant weights lam = (1-m)/4, mu = (1+m)/4 the 0/0
    entries are resolved by the solver's family member with all free
    parameters set to zero (the whole table is taken from the solver there).
    """
    lam, mu = A.src, A.dst
    if isinstance(classify_resonance(lam, mu), ResonantSpecial):
        table = _special_table(lam, mu, A.top_index)
        return _symbol_with(A, table.scalar)
    return _symbol_with(A, lambda k, n, p: symbol_coefficient(n, k, lam, mu))


def quantization_map(S: SymbolVector, lam, mu) -> DiffOperator:
    """Inverse of :func:`symbol_map`; raises ResonanceError at resonant weights."""
    lam, mu = rational(lam), rational(mu)
    if S.delta != mu - lam:
        raise WeightMismatch(f"symbol lives in S_{S.delta}, operators need S_{mu - lam}")
    coeffs: list[SuperFunction] = []
    for k, f in enumerate(S.parts):
        if f.is_zero():
            continue
        coeffs.extend([ZERO] * (k + 1 - len(coeffs)))
        for n in range(k + 1):
            c = quantization_coefficient(n, k, lam, mu)
            if c:
                coeffs[k - n] = coeffs[k - n] + d_power(f, n) * c
    return DiffOperator(lam, mu, coeffs)


def quantization_map_dbasis(S: SymbolVector, lam, mu) -> DOrderedOperator:
    """Q written as sum_n c_n D^n(f) D^{k-n}, summing n up to 2*floor((k+1)/2)."""
    lam, mu = rational(lam), rational(mu)
    if S.delta != mu - lam:
        raise WeightMismatch(f"symbol lives in S_{S.delta}, operators need S_{mu - lam}")
    coeffs: list[SuperFunction] = []
    for k, f in enumerate(S.parts):
        if f.is_zero():
            continue
        coeffs.extend([ZERO] * (k + 1 - len(coeffs)))
        for n in range(2 * ((k + 1) // 2) + 1):
            c = dbasis_quantization_coefficient(n, k, lam, mu)
            if not c:
                continue
            if n > k:
                raise AssertionError("negative D power with nonzero coefficient")
            coeffs[k - n] = coeffs[k - n] + d_power(f, n) * c
    return DOrderedOperator(lam, mu, coeffs)


# --- solver ------------------------------------------------------------------


@dataclass(frozen=True)
class BetaTable:
    """Coefficients beta^k_n, possibly depending on (x, xi) and on the
    parity of the operator coefficient they multiply.

    ``entries[(k, n, parity)]`` is a SuperFunction; missing keys are zero.
    """

    lam: Fraction
    mu: Fraction
    k_max: int
    entries: Mapping[tuple[int, int, int], SuperFunction] = field(default_factory=dict)

    def entry(self, k: int, n: int, parity: int) -> SuperFunction:
        return self.entries.get((k, n, parity), ZERO)

    def is_constant(self) -> bool:
        return all(v.odd.is_zero() and v.even.degree <= 0 for v in self.entries.values())

    def is_parity_independent(self) -> bool:
        return all(
            self.entry(k, n, 0) == self.entry(k, n, 1)
            for k in range(self.k_max + 1)
            for n in range(k + 1)
        )

    def scalar(self, k: int, n: int, parity: int = 0) -> Fraction:
        v = self.entry(k, n, parity)
        if not v.odd.is_zero() or v.even.degree > 0:
            raise ValueError(f"beta^{k}_{n} is not constant: {v}")
        return v.even[0]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        k, n = key
        v0, v1 = self.scalar(k, n, 0), self.scalar(k, n, 1)
        if v0 != v1:
            raise ValueError(f"beta^{k}_{n} depends on parity: {v0} vs {v1}")
        return v0

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(k, n): self[k, n] for k in range(self.k_max + 1) for n in range(k + 1)}


@dataclass(frozen=True)
class Unique:
    table: BetaTable

    def __str__(self):
        return "Unique"


@dataclass(frozen=True)
class Family:
    dimension: int
    particular: BetaTable
    directions: tuple[BetaTable, ...]

    def __str__(self):
        return f"Family(dim={self.dimension})"


@dataclass(frozen=True)
class NoSymbolMap:
    order: int

    def __str__(self):
        return f"NoSymbolMap(order={self.order})"


BetaSolution = Union[Unique, Family, NoSymbolMap]


def _coefficient_basis(coeff_degree: int | None) -> list[SuperFunction]:
    if coeff_degree is None:
        return [SuperFunction.const(1)]
    basis = [SuperFunction.monomial(d) for d in range(coeff_degree + 1)]
    basis += [SuperFunction.monomial(d, odd=True) for d in range(coeff_degree + 1)]
    return basis


def _flatten(j: int, f: SuperFunction, out: dict, scale, col: int | None, rhs: dict):
    for tag, poly in ((0, f.even), (1, f.odd)):
        for i, c in enumerate(poly.coeffs):
            if not c:
                continue
            key = (j, tag, i)
            if col is None:
                rhs[key] = rhs.get(key, 0) - c * scale
            else:
                row = out.setdefault(key, {})
                row[col] = row.get(col, 0) + c * scale


class _Ansatz:
    """Bookkeeping for the unknowns beta^{k,parity}_n (basis element b)."""

    def __init__(self, k_max: int, coeff_degree: int | None):
        self.basis = _coefficient_basis(coeff_degree)
        self.index: dict[tuple[int, int, int, int], int] = {}
        for k in range(k_max + 1):
            for n in range(1, k + 1):
                for p in (0, 1):
                    for b, fn in enumerate(self.basis):
                        # xi * (odd function) vanishes identically: no unknown.
                        if fn.odd and (p + n) % 2:
                            continue
                        self.index[(k, n, p, b)] = len(self.index)

    def terms(self, k: int, p: int):
        """(n, column or None, beta-basis function) for the order-k, parity-p row."""
        yield 0, None, SuperFunction.const(1)
        for n in range(1, k + 1):
            for b, fn in enumerate(self.basis):
                col = self.index.get((k, n, p, b))
                if col is not None:
                    yield n, col, fn


def _equations(ansatz: _Ansatz, A: DiffOperator, h: SuperFunction):
    """Rows of sigma(L_h A) - L_h sigma(A) = 0 as {key: {col: coeff}}, rhs."""
    lam, mu = A.src, A.dst
    delta = mu - lam
    rows: dict = {}
    rhs: dict = {}
    LA = lie_action(h, A)
    for k, a in enumerate(LA.coeffs):
        for p, part in a.homogeneous_parts():
            for n, col, fn in ansatz.terms(k, p):
                _flatten(k - n, sf_mul(fn, d_power(part, n)), rows, 1, col, rhs)
    for k, a in enumerate(A.coeffs):
        for p, part in a.homogeneous_parts():
            for n, col, fn in ansatz.terms(k, p):
                j = k - n
                val = sf_mul(fn, d_power(part, n))
                moved = lie_derivative(h, Density(val, delta - Fraction(j, 2))).fn
                _flatten(j, moved, rows, -1, col, rhs)
    for key in set(rows) | set(rhs):
        yield rows.get(key, {}), rhs.get(key, 0)


def _table_from(ansatz: _Ansatz, k_max, lam, mu, values: Mapping[int, Fraction], normalized: bool) -> BetaTable:
    entries: dict[tuple[int, int, int], SuperFunction] = {}
    if normalized:
        for k in range(k_max + 1):
            for p in (0, 1):
                entries[(k, 0, p)] = SuperFunction.const(1)
    for (k, n, p, b), col in ansatz.index.items():
        v = values.get(col, 0)
        if v:
            entries[(k, n, p)] = entries.get((k, n, p), ZERO) + ansatz.basis[b] * v
    return BetaTable(lam, mu, k_max, entries)


def solve_betas(
    k_max: int,
    lam,
    mu,
    *,
    coeff_degree: int | None = None,
    test_degree: int | None = None,
    bound: int = DEFAULT_KMAX_BOUND,
) -> BetaSolution:
    """Derive the symbol-map coefficients from equivariance alone.

    The ansatz sigma(a Dbar^k) = sum_n beta^k_n D^n(a) alpha^{delta+(n-k)/2}
    is imposed to commute with the actions of the odd generators xi and
    x*xi (which generate osp(1|2)), on test coefficients a = x^p, xi x^p.
    Unknowns are kept separate for even and odd a.  With ``coeff_degree``
    set, each beta is a polynomial in x plus xi times one, so constancy is
    an outcome of the solve rather than an assumption.  beta^k_0 = 1.
    """
    if k_max > bound:
        raise ValueError(f"k_max={k_max} exceeds the configured bound {bound}")
    return _solve_betas_cached(k_max, rational(lam), rational(mu), coeff_degree, test_degree)


@functools.lru_cache(maxsize=256)
def _solve_betas_cached(k_max, lam, mu, coeff_degree, test_degree=None) -> BetaSolution:
    ansatz = _Ansatz(k_max, coeff_degree)
    red = RowReducer()
    for col in ansatz.index.values():
        red.add_column(col)
    extra = coeff_degree or 0
    for k in range(k_max + 1):
        top = test_degree if test_degree is not None else k // 2 + 2 + extra
        for p in range(top + 1):
            for odd in (False, True):
                A = DiffOperator.monomial(SuperFunction.monomial(p, odd), k, lam, mu)
                for h in (XI, sf_mul(X, XI)):
                    for row, b in _equations(ansatz, A, h):
                        if not red.add_row(row, b):
                            return NoSymbolMap(k)
    particular = _table_from(ansatz, k_max, lam, mu, red.particular_solution(), True)
    null = red.nullspace()
    if not null:
        return Unique(particular)
    directions = tuple(_table_from(ansatz, k_max, lam, mu, v, False) for v in null)
    return Family(len(null), particular, directions)


def closed_form_table(k_max: int, lam, mu) -> dict[tuple[int, int], Fraction]:
    return {
        (k, n): symbol_coefficient(n, k, lam, mu) for k in range(k_max + 1) for n in range(k + 1)
    }


def printed_system_residuals(table: Mapping[tuple[int, int], Fraction], lam, mu, k_max: int):
    """Check the four recursions linking beta^{2s-1}, beta^{2s}, beta^{2s+1}.

    Yields (relation, s, m, lhs, rhs) for 1 <= s <= k_max//2, 0 <= m <= s,
    skipping instances that reach beyond ``k_max``.  Out-of-range lower
    indices (n < 0 or n > k) read as zero.  The first relation is used in the
    form s*beta^{2s-1}_{2m-1} = m*beta^{2s}_{2m}.
    """
    lam, mu = rational(lam), rational(mu)

    def b(n, k):
        return table.get((k, n), Fraction(0)) if 0 <= n <= k else Fraction(0)

    for s in range(1, k_max // 2 + 1):
        for m in range(s + 1):
            yield 1, s, m, s * b(2 * m - 1, 2 * s - 1), m * b(2 * m, 2 * s)
            yield 2, s, m, s * b(2 * m, 2 * s - 1), (2 * (lam - mu) - m + 2 * s) * b(2 * m + 1, 2 * s)
            if 2 * s + 1 <= k_max:
                yield 3, s, m, (2 * lam + s) * b(2 * m - 1, 2 * s), m * b(2 * m, 2 * s + 1)
                yield 4, s, m, (2 * lam + s) * b(2 * m, 2 * s), (
                    2 * (lam - mu) - m + 2 * s + 1
                ) * b(2 * m + 1, 2 * s + 1)
