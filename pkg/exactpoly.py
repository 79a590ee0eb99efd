"""exact sparse multivariate polynomials"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
import json
from typing import Iterable, Iterator, Mapping, Sequence

from typing_extensions import Self, TypeAlias

Exponent: TypeAlias = tuple[int, ...]

CANONICAL_ORDER = ("s", "t", "x", "y")


class EulerianError(Exception):
    """base error"""


class VarSetMismatchError(EulerianError, ValueError):
    """operands live over different variable sets"""


class UnknownVariableError(EulerianError, KeyError):
    """variable is not part of the variable set"""


class NotInSpanError(EulerianError):
    """no expansion exists"""


class BasisDependentError(EulerianError):
    """basis not independent"""


class InternalError(EulerianError):
    """exact divisibility or residual assertion failed"""


class CapExceededError(EulerianError, ValueError):
    """n is outside the allowed region"""


@dataclass(frozen=True)
class VarSet:
    """ordered, immutable set of variable names"""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicated variable names: {names}")
        object.__setattr__(self, "names", names)

    @classmethod
    def of(cls, *names: str) -> Self:
        """canonical order s, t, x, y first, then auxiliaries in given order"""
        known = [v for v in CANONICAL_ORDER if v in names]
        rest = [v for v in names if v not in CANONICAL_ORDER]
        return cls(tuple(known + rest))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, var: str) -> int:
        """position of var"""
        try:
            return self.names.index(var)
        except ValueError:
            raise UnknownVariableError(f"{var} not in {self.names}") from None


ST = VarSet(("s", "t"))
STXY = VarSet(("s", "t", "x", "y"))
T = VarSet(("t",))
TY = VarSet(("t", "y"))
X = VarSet(("x",))


@dataclass(frozen=True)
class Polynomial:
    """
    Sparse polynomial with integer coefficients.

    terms maps an exponent vector (one entry per variable of varset) to a
    nonzero int. Instances are immutable; every operation returns a new one.
    """

    varset: VarSet
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        width = len(self.varset)
        clean: dict[Exponent, int] = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != width:
                raise VarSetMismatchError(
                    f"exponent {exp} does not match {self.varset.names}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            if coeff != int(coeff):
                raise ValueError(f"coefficient {coeff} of {exp} is not an integer")
            if coeff:
                clean[exp] = int(coeff)
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.varset, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """terms in lexicographic exponent order"""
        return sorted(self.terms.items())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_sub(self, other)

    def __neg__(self) -> "Polynomial":
        return poly_neg(self)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    def __rmul__(self, other: int) -> "Polynomial":
        return poly_scale(self, other)

    def __pow__(self, k: int) -> "Polynomial":
        return poly_pow(self, k)

    def __repr__(self) -> str:
        return f"Polynomial({format_monomials(self)!r} over {self.varset.names})"

    def __str__(self) -> str:
        return format_monomials(self)


def zero(varset: VarSet) -> Polynomial:
    """zero polynomial"""
    return Polynomial(varset, {})


def constant(varset: VarSet, c: int) -> Polynomial:
    """constant polynomial"""
    return Polynomial(varset, {(0,) * len(varset): c})


def monomial(varset: VarSet, coeff: int = 1, **exps: int) -> Polynomial:
    """coeff * prod(v**e), e.g. monomial(STXY, s=1, t=1)"""
    exp = [0] * len(varset)
    for var, e in exps.items():
        exp[varset.index(var)] = e
    return Polynomial(varset, {tuple(exp): coeff})


def variable(varset: VarSet, var: str) -> Polynomial:
    """the polynomial `var`"""
    return monomial(varset, **{var: 1})


def _check_same(p: Polynomial, q: Polynomial):
    if p.varset != q.varset:
        raise VarSetMismatchError(f"{p.varset.names} != {q.varset.names}")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    """term-wise sum"""
    _check_same(p, q)
    terms = dict(p.terms)
    for exp, coeff in q.terms.items():
        terms[exp] = terms.get(exp, 0) + coeff
    return Polynomial(p.varset, terms)


def poly_neg(p: Polynomial) -> Polynomial:
    """negation"""
    return Polynomial(p.varset, {exp: -c for exp, c in p.terms.items()})


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    """difference"""
    return poly_add(p, poly_neg(q))


def poly_scale(p: Polynomial, c: int) -> Polynomial:
    """c * p"""
    return Polynomial(p.varset, {exp: c * v for exp, v in p.terms.items()})


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """distributive product"""
    _check_same(p, q)
    terms: dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            terms[exp] = terms.get(exp, 0) + c1 * c2
    return Polynomial(p.varset, terms)


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    """p**k by repeated squaring"""
    if k < 0:
        raise ValueError(f"negative power {k}")
    result = constant(p.varset, 1)
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_partial(p: Polynomial, var: str) -> Polynomial:
    """formal partial derivative"""
    idx = p.varset.index(var)
    terms: dict[Exponent, int] = {}
    for exp, coeff in p.terms.items():
        e = exp[idx]
        if e == 0:
            continue
        new = exp[:idx] + (e - 1,) + exp[idx + 1 :]
        terms[new] = terms.get(new, 0) + coeff * e
    return Polynomial(p.varset, terms)


def poly_coeff(p: Polynomial, exp: Sequence[int]) -> int:
    """stored coefficient or 0"""
    exp = tuple(exp)
    if len(exp) != len(p.varset):
        raise VarSetMismatchError(
            f"exponent {exp} does not match {p.varset.names}"
        )
    return p.terms.get(exp, 0)


def poly_permute_vars(p: Polynomial, mapping: Mapping[str, str]) -> Polynomial:
    """
    rename variables by a bijection of the variable names.

    mapping sends old name -> new name; names absent from mapping stay put.
    ex: poly_permute_vars(s**2*t, {"s": "t", "t": "s"}) == s*t**2
    """
    names = p.varset.names
    full = {v: mapping.get(v, v) for v in names}
    unknown = set(mapping) - set(names)
    if unknown or sorted(full.values()) != sorted(names):
        raise ValueError(f"{dict(mapping)} is not a bijection of {names}")

    # position i of the old vector moves to position target[i]
    target = [names.index(full[v]) for v in names]
    terms: dict[Exponent, int] = {}
    for exp, coeff in p.terms.items():
        new = [0] * len(names)
        for i, e in enumerate(exp):
            new[target[i]] = e
        terms[tuple(new)] = coeff
    return Polynomial(p.varset, terms)


def poly_homogenize(
    p: Polynomial,
    pairs: Sequence[tuple[str, str]],
    d: int,
    varset: VarSet | None = None,
) -> Polynomial:
    """
    prod(h**d) * p(v/h, ...) for every pair (v, h).

    The result lives over varset (default: p's variables plus the homogenizing
    ones in canonical order).
    ex: poly_homogenize(s*t, [("s", "x"), ("t", "y")], 2) == s*t*x*y
    """
    if varset is None:
        varset = VarSet.of(*p.varset.names, *[h for _, h in pairs])
    lifted = poly_lift(p, varset)
    terms: dict[Exponent, int] = {}
    for exp, coeff in lifted.terms.items():
        new = list(exp)
        for var, hvar in pairs:
            vi, hi = varset.index(var), varset.index(hvar)
            if exp[hi]:
                raise ValueError(f"{p} already involves {hvar}")
            if exp[vi] > d:
                raise ValueError(
                    f"degree {exp[vi]} in {var} exceeds homogenizing degree {d}"
                )
            new[hi] = d - exp[vi]
        terms[tuple(new)] = coeff
    return Polynomial(varset, terms)


def poly_lift(p: Polynomial, varset: VarSet) -> Polynomial:
    """view p over a larger variable set"""
    positions = [varset.index(v) for v in p.varset.names]
    terms: dict[Exponent, int] = {}
    for exp, coeff in p.terms.items():
        new = [0] * len(varset)
        for pos, e in zip(positions, exp):
            new[pos] = e
        terms[tuple(new)] = coeff
    return Polynomial(varset, terms)


def poly_evaluate(p: Polynomial, values: Mapping[str, int]) -> Polynomial:
    """substitute integers for some variables; the rest form the new varset"""
    for var in values:
        p.varset.index(var)
    keep = [v for v in p.varset.names if v not in values]
    keep_idx = [p.varset.index(v) for v in keep]
    subst = [(p.varset.index(v), c) for v, c in values.items()]
    varset = VarSet(tuple(keep))
    terms: dict[Exponent, int] = {}
    for exp, coeff in p.terms.items():
        for idx, c in subst:
            coeff *= c ** exp[idx]
        new = tuple(exp[i] for i in keep_idx)
        terms[new] = terms.get(new, 0) + coeff
    return Polynomial(varset, terms)


def poly_value(p: Polynomial, values: Mapping[str, int] | None = None) -> int:
    """integer value at a point (default: all variables = 1)"""
    if values is None:
        values = {v: 1 for v in p.varset}
    return poly_coeff(poly_evaluate(p, values), ())


def poly_exact_div(p: Polynomial, d: int) -> Polynomial:
    """divide every coefficient by d, which must divide all of them"""
    terms: dict[Exponent, int] = {}
    for exp, coeff in p.terms.items():
        q, r = divmod(coeff, d)
        if r:
            raise InternalError(f"coefficient {coeff} of {exp} not divisible by {d}")
        terms[exp] = q
    return Polynomial(p.varset, terms)


def poly_total_degree(p: Polynomial) -> int:
    """max total degree, -1 for zero"""
    return max((sum(exp) for exp in p.terms), default=-1)


def poly_degree_in(p: Polynomial, var: str) -> int:
    """max degree in var, -1 for zero"""
    idx = p.varset.index(var)
    return max((exp[idx] for exp in p.terms), default=-1)


def is_homogeneous(p: Polynomial, degree: int | None = None) -> bool:
    """all terms share one total degree (optionally a given one)"""
    degrees = {sum(exp) for exp in p.terms}
    if degree is not None:
        return degrees <= {degree}
    return len(degrees) <= 1


def poly_truncate(p: Polynomial, bounds: Mapping[str, int]) -> Polynomial:
    """drop terms whose exponent in any bounded variable exceeds its bound"""
    checks = [(p.varset.index(v), b) for v, b in bounds.items()]
    return Polynomial(
        p.varset,
        {
            exp: c
            for exp, c in p.terms.items()
            if all(exp[idx] <= b for idx, b in checks)
        },
    )


def binomial(n: int, k: int) -> int:
    """binomial coefficient, 0 when k < 0, k > n or n < 0"""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def inverse_power_series(varset: VarSet, var: str, power: int, bound: int) -> Polynomial:
    """(1 - var)**(-power) truncated at var**bound"""
    idx = varset.index(var)
    terms: dict[Exponent, int] = {}
    for k in range(bound + 1):
        exp = [0] * len(varset)
        exp[idx] = k
        terms[tuple(exp)] = binomial(k + power - 1, power - 1)
    return Polynomial(varset, terms)


@dataclass(frozen=True)
class RationalVector:
    """exact solution vector"""

    entries: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def is_integral(self) -> bool:
        """every entry has denominator 1"""
        return all(e.denominator == 1 for e in self.entries)


def solve_exact_linear(a: Sequence[Sequence[int]], b: Sequence[int]) -> RationalVector:
    """
    Solve A x = b exactly.

    Fraction-free (Bareiss) forward elimination on [A | b], exact rationals
    only during back substitution.

    Raises:
        NotInSpanError: the system is inconsistent
        BasisDependentError: A does not have full column rank
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if len(b) != rows:
        raise VarSetMismatchError(f"{rows} rows but {len(b)} right-hand sides")
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for row in m:
        if len(row) != cols + 1:
            raise ValueError("ragged matrix")

    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c, cols + 1):
                q, rem = divmod(p * row_i[j] - f * row_r[j], prev)
                if rem:
                    raise InternalError("Bareiss step is not exact")
                row_i[j] = q
        prev = p
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break

    rank = len(pivot_cols)
    if any(m[i][cols] for i in range(rank, rows)):
        raise NotInSpanError(f"no expansion exists (rank {rank}, {rows} equations)")
    if rank < cols:
        free = sorted(set(range(cols)) - set(pivot_cols))
        raise BasisDependentError(f"basis not independent (free columns {free})")

    x = [Fraction(0)] * cols
    for i in range(rank - 1, -1, -1):
        c = pivot_cols[i]
        acc = Fraction(m[i][cols])
        for j in range(c + 1, cols):
            if m[i][j]:
                acc -= m[i][j] * x[j]
        x[c] = acc / m[i][c]

    for row, rhs in zip(a, b):
        if sum(coef * xi for coef, xi in zip(row, x)) != rhs:
            raise InternalError("nonzero residual after back substitution")
    return RationalVector(tuple(x))


def poly_to_json(p: Polynomial) -> dict:
    """{"vars": [...], "terms": [{"e": [...], "c": "..."}]} in lex order"""
    return {
        "vars": list(p.varset.names),
        "terms": [{"e": list(exp), "c": str(c)} for exp, c in p.items()],
    }


def poly_from_json(data: dict | str) -> Polynomial:
    """inverse of poly_to_json"""
    if isinstance(data, str):
        data = json.loads(data)
    varset = VarSet(tuple(data["vars"]))
    return Polynomial(varset, {tuple(t["e"]): int(t["c"]) for t in data["terms"]})


def _format_power(var: str, e: int) -> str:
    if e == 1:
        return var
    return f"{var}^{e}"


def format_monomial(varset: VarSet, exp: Exponent) -> str:
    """s^2t for (2, 1), "" for the constant monomial"""
    return "".join(_format_power(v, e) for v, e in zip(varset.names, exp) if e)


def format_monomials(p: Polynomial) -> str:
    """expanded rendering, lowest exponents first: st + 4s^2t^2 + s^3t^3"""
    if not p.terms:
        return "0"
    parts: list[str] = []
    for exp, c in p.items():
        mono = format_monomial(p.varset, exp)
        mag = abs(c)
        body = mono if mono and mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def sum_polys(varset: VarSet, polys: Iterable[Polynomial]) -> Polynomial:
    """sum of many polynomials without intermediate objects"""
    terms: dict[Exponent, int] = {}
    for p in polys:
        if p.varset != varset:
            raise VarSetMismatchError(f"{p.varset.names} != {varset.names}")
        for exp, c in p.terms.items():
            terms[exp] = terms.get(exp, 0) + c
    return Polynomial(varset, terms)
