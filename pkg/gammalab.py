"""gamma basis: basis elements, exact expansion, coefficient recurrences"""

import csv
from functools import lru_cache
from dataclasses import dataclass, field
import io
import logging
import time
from typing import Iterable, Literal

from eulerian_report import VerificationReport, make_report
from eulerian_settings import EulerianSettings, get_settings
from eulerian_util import elapsed_ms

from exactpoly import (
    ST,
    STXY,
    TY,
    BasisDependentError,
    InternalError,
    NotInSpanError,
    Polynomial,
    VarSet,
    constant,
    monomial,
    poly_mul,
    poly_pow,
    poly_scale,
    solve_exact_linear,
    sum_polys,
    variable,
    poly_partial,
)
from genpoly import (
    apply_Tn,
    brute_four_variable,
    brute_two_sided_tau,
    rec_four_variable,
    rec_typeB,
)
from permstat import _des, format_word, iter_sn_words

logger = logging.getLogger(__name__)

Flavor = Literal["bivariate", "four-variable", "univariate"]
Index = tuple[int, int] | int


@dataclass(frozen=True)
class BasisSpec:
    """
    which gamma basis to use.

    four-variable: (stxy)^i (st+xy)^j (tx+sy)^(m-2i-j)
    bivariate:     (st)^i (s+t)^j (1+st)^(m-j-2i)
    univariate:    (ty)^i (t+y)^(m-2i), j absent
    """

    flavor: Flavor
    m: int
    i_min: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.i_min not in (0, 1):
            raise ValueError(f"i_min must be 0 or 1, got {self.i_min}")

    @property
    def varset(self) -> VarSet:
        """variables of the basis"""
        return {"four-variable": STXY, "bivariate": ST, "univariate": TY}[self.flavor]

    def indices(self) -> list[Index]:
        """valid region in order: increasing i, then j"""
        if self.flavor == "univariate":
            return [i for i in range(self.i_min, self.m // 2 + 1)]
        return [
            (i, j)
            for i in range(self.i_min, self.m // 2 + 1)
            for j in range(0, self.m - 2 * i + 1)
        ]

    def contains(self, index: Index) -> bool:
        """index is in the valid region"""
        if self.flavor == "univariate":
            return isinstance(index, int) and self.i_min <= index and 2 * index <= self.m
        i, j = index
        return i >= self.i_min and j >= 0 and 2 * i + j <= self.m


def four_variable_spec(n: int) -> BasisSpec:
    """basis for A_n(s,t;x,y)"""
    return BasisSpec("four-variable", n + 1, 1)


def bivariate_spec(n: int) -> BasisSpec:
    """basis for A_n(s,t)"""
    return BasisSpec("bivariate", n + 1, 1)


def univariate_spec(n: int) -> BasisSpec:
    """basis for A_n(t;y)"""
    return BasisSpec("univariate", n + 1, 1)


def typeB_spec(n: int) -> BasisSpec:
    """experimental basis for B_n(s,t): m = n, i_min = 0"""
    return BasisSpec("bivariate", n, 0)


@dataclass(frozen=True)
class GammaRow:
    """gamma coefficients of one n; keys (i, j), or i for univariate rows"""

    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {k: int(v) for k, v in sorted(self.entries.items()) if v}
        )

    def __getitem__(self, index: Index) -> int:
        return self.entries.get(index, 0)

    def negative_entries(self) -> dict:
        """entries < 0"""
        return {k: v for k, v in self.entries.items() if v < 0}

    def is_nonnegative(self) -> bool:
        """no negative entry"""
        return not self.negative_entries()

    def row_sums(self) -> dict[int, int]:
        """sum over j for each i"""
        sums: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            sums[i] = sums.get(i, 0) + v
        return {i: v for i, v in sums.items() if v}


def _factors(flavor: Flavor) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(monomial factor, j factor, remaining factor)"""
    if flavor == "four-variable":
        s, t, x, y = (variable(STXY, v) for v in "stxy")
        return monomial(STXY, s=1, t=1, x=1, y=1), s * t + x * y, t * x + s * y
    if flavor == "bivariate":
        s, t = variable(ST, "s"), variable(ST, "t")
        st = s * t
        return st, s + t, constant(ST, 1) + st
    t, y = variable(TY, "t"), variable(TY, "y")
    return t * y, t + y, t + y


@lru_cache(maxsize=None)
def basis_element(spec: BasisSpec, i: int, j: int = 0) -> Polynomial:
    """fully expanded basis element for (i, j); j is ignored for univariate"""
    index: Index = i if spec.flavor == "univariate" else (i, j)
    if not spec.contains(index):
        raise ValueError(f"{index} outside region of {spec}")
    mono, jfac, rest = _factors(spec.flavor)
    if spec.flavor == "univariate":
        j = 0
    return poly_mul(
        poly_mul(poly_pow(mono, i), poly_pow(jfac, j)),
        poly_pow(rest, spec.m - 2 * i - j),
    )


def combine_gamma(row: GammaRow, spec: BasisSpec) -> Polynomial:
    """sum of gamma * basis element"""
    parts = []
    for index, v in row.entries.items():
        i, j = (index, 0) if spec.flavor == "univariate" else index
        parts.append(poly_scale(basis_element(spec, i, j), v))
    return sum_polys(spec.varset, parts)


def expand_gamma(p: Polynomial, spec: BasisSpec, n: int | None = None) -> GammaRow:
    """
    Exact coefficients of p in the basis.

    Every monomial of every basis element and of p gives one equation; the
    system is solved exactly and the result re-expanded to confirm a zero
    residual.

    Raises:
        NotInSpanError: p is not a combination of the basis (or has a
            non-integer coefficient)
        BasisDependentError: rank deficiency
    """
    if p.varset != spec.varset:
        raise NotInSpanError(f"{p.varset.names} is not the basis variable set")
    indices = spec.indices()
    elements = [
        basis_element(spec, *((k, 0) if spec.flavor == "univariate" else k))
        for k in indices
    ]
    if not indices:
        if p:
            raise NotInSpanError(f"no expansion exists: empty basis for {spec}")
        return GammaRow(n if n is not None else spec.m - 1, {})
    monos = sorted(set(p.terms).union(*(e.terms for e in elements)))
    a = [[e.terms.get(mono, 0) for e in elements] for mono in monos]
    b = [p.terms.get(mono, 0) for mono in monos]

    solution = solve_exact_linear(a, b)
    if not solution.is_integral():
        raise NotInSpanError(f"non-integral expansion {list(solution)}")

    row = GammaRow(
        n if n is not None else spec.m - 1,
        {k: int(v) for k, v in zip(indices, solution)},
    )
    if combine_gamma(row, spec) != p:
        raise InternalError("gamma expansion does not reproduce the polynomial")
    return row


def gamma_univariate_rec(n_max: int) -> list[GammaRow]:
    """gamma_{n+1,i} = i gamma_{n,i} + 2(n+3-2i) gamma_{n,i-1}, gamma_{1,1} = 1"""
    rows = [GammaRow(1, {1: 1})]
    for n in range(1, n_max):
        prev = rows[-1]
        entries = {
            i: i * prev[i] + 2 * (n + 3 - 2 * i) * prev[i - 1]
            for i in range(1, (n + 2) // 2 + 1)
        }
        rows.append(GammaRow(n + 1, entries))
    return rows


def gamma_bivariate_rec(n_max: int) -> list[GammaRow]:
    """
    (n+1) gamma_{n+1,i,j} =  (n + i(n+2-i-j))          gamma_{n,i,j-1}
                           + (i(i+j) - n)               gamma_{n,i,j}
                           + (n+4-2i-j)(n+3-2i-j)       gamma_{n,i-1,j-1}
                           + (n+2i+j)(n+3-2i-j)         gamma_{n,i-1,j}
                           + (j+1)(2n+2-j)              gamma_{n,i-1,j+1}
                           + (j+1)(j+2)                 gamma_{n,i-1,j+2}

    from gamma_{1,1,0} = 1; values outside the region are 0.
    """
    rows = [GammaRow(1, {(1, 0): 1})]
    for n in range(1, n_max):
        g = rows[-1]
        entries = {}
        for i, j in four_variable_spec(n + 1).indices():
            total = (
                (n + i * (n + 2 - i - j)) * g[(i, j - 1)]
                + (i * (i + j) - n) * g[(i, j)]
                + (n + 4 - 2 * i - j) * (n + 3 - 2 * i - j) * g[(i - 1, j - 1)]
                + (n + 2 * i + j) * (n + 3 - 2 * i - j) * g[(i - 1, j)]
                + (j + 1) * (2 * n + 2 - j) * g[(i - 1, j + 1)]
                + (j + 1) * (j + 2) * g[(i - 1, j + 2)]
            )
            q, r = divmod(total, n + 1)
            if r:
                raise InternalError(
                    f"gamma_{n + 1},{i},{j}: {total} not divisible by {n + 1}"
                )
            entries[(i, j)] = q
        rows.append(GammaRow(n + 1, entries))
    return rows


def four_variable_to_bivariate(row: GammaRow) -> GammaRow:
    """re-index j (exponent of st+xy) to the exponent of s+t: j -> n+1-2i-j"""
    m = row.n + 1
    return GammaRow(row.n, {(i, m - 2 * i - j): v for (i, j), v in row.entries.items()})


def operator_closed_forms(n: int, i: int, j: int) -> dict[str, dict[tuple[int, int], int]]:
    """
    coefficients on B^(n+1) of the three operator actions on B^(n)_{i,j}
    and of their sum T_n; zero coefficients are left out.
    """

    def clean(d: dict) -> dict:
        return {k: v for k, v in d.items() if v}

    m_action = clean({(i, j + 1): n, (i, j): -n})
    d1 = clean(
        {
            (i, j + 1): i * (n + 1 - i - j),
            (i + 1, j - 1): j * (2 * n + 3 - j),
            (i + 1, j + 1): (n + 1 - 2 * i - j) * (n - 2 * i - j),
        }
    )
    d2 = clean(
        {
            (i, j): i * (i + j),
            (i + 1, j - 2): j * (j - 1),
            (i + 1, j): (n + 1 - 2 * i - j) * (n + 2 + 2 * i + j),
        }
    )
    total = clean(
        {
            (i, j + 1): n + i * (n + 1 - i - j),
            (i, j): i * (i + j) - n,
            (i + 1, j + 1): (n + 1 - 2 * i - j) * (n - 2 * i - j),
            (i + 1, j): (n + 2 + 2 * i + j) * (n + 1 - 2 * i - j),
            (i + 1, j - 1): j * (2 * n + 3 - j),
            (i + 1, j - 2): j * (j - 1),
        }
    )
    return {"M": m_action, "D1": d1, "D2": d2, "T": total}


def combine_basis(n: int, coeffs: dict[tuple[int, int], int]) -> Polynomial:
    """sum of c * B^(n)_{i,j}"""
    spec = four_variable_spec(n)
    parts = []
    for (i, j), c in coeffs.items():
        if not spec.contains((i, j)):
            raise ValueError(f"B^({n})_{i},{j} is not a basis element")
        parts.append(poly_scale(basis_element(spec, i, j), c))
    return sum_polys(STXY, parts)


def gamma_rows_to_csv(rows: Iterable[GammaRow]) -> str:
    """header n,i,j,gamma; univariate rows leave j empty"""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "i", "j", "gamma"])
    for row in sorted(rows, key=lambda r: r.n):
        for index, v in sorted(row.entries.items()):
            if isinstance(index, tuple):
                writer.writerow([row.n, index[0], index[1], v])
            else:
                writer.writerow([row.n, index, "", v])
    return out.getvalue()


def gamma_rows_to_json(rows: Iterable[GammaRow]) -> list[dict]:
    """[{"n": n, "i": i, "j": j|null, "gamma": "v"}]"""
    items = []
    for row in sorted(rows, key=lambda r: r.n):
        for index, v in sorted(row.entries.items()):
            i, j = index if isinstance(index, tuple) else (index, None)
            items.append({"n": row.n, "i": i, "j": j, "gamma": str(v)})
    return items


def _power(base: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return f"({base})" if "+" in base else base
    return f"({base})^{e}" if len(base) > 1 else f"{base}^{e}"


def format_gamma(row: GammaRow, spec: BasisSpec) -> str:
    """
    factored rendering in basis order, e.g. stxy(st+xy)^2 + 2(stxy)^2
    """
    names = {
        "four-variable": ("stxy", "st+xy", "tx+sy"),
        "bivariate": ("st", "s+t", "1+st"),
        "univariate": ("ty", "t+y", "t+y"),
    }[spec.flavor]
    if not row.entries:
        return "0"

    parts = []
    for index, v in sorted(row.entries.items(), key=lambda kv: _basis_order(kv[0])):
        i, j = (index, 0) if spec.flavor == "univariate" else index
        rest = spec.m - 2 * i - j
        if spec.flavor == "univariate":
            body = _power(names[0], i) + _power(names[1], rest)
        else:
            body = _power(names[0], i) + _power(names[1], j) + _power(names[2], rest)
        if not body:
            body = "1"
        mag = abs(v)
        text = body if mag == 1 and body != "1" else f"{mag}{body if body != '1' else ''}"
        if not parts:
            parts.append(text if v > 0 else f"-{text}")
        else:
            parts.append(f"{'+' if v > 0 else '-'} {text}")
    return " ".join(parts)


def _basis_order(index: Index) -> tuple[int, int]:
    # smallest i first, then larger j first
    if isinstance(index, tuple):
        return (index[0], -index[1])
    return (index, 0)


def try_expand(p: Polynomial, spec: BasisSpec, n: int | None = None) -> GammaRow | None:
    """expand_gamma or None when no expansion exists"""
    try:
        return expand_gamma(p, spec, n)
    except (NotInSpanError, BasisDependentError):
        return None


@dataclass(frozen=True)
class ExpansionResult:
    """gamma row, or the reason no expansion exists"""

    row: GammaRow | None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        """an expansion exists"""
        return self.row is not None


def _expand_or_reason(p: Polynomial, spec: BasisSpec, n: int) -> ExpansionResult:
    try:
        return ExpansionResult(expand_gamma(p, spec, n))
    except NotInSpanError as e:
        return ExpansionResult(None, f"not in span: {e}")
    except BasisDependentError as e:
        return ExpansionResult(None, f"basis dependent: {e}")


def expand_gamma_typeB(n: int, settings: EulerianSettings | None = None) -> ExpansionResult:
    """experimental: B_n(s,t) in the bivariate basis with m = n, i_min = 0"""
    return _expand_or_reason(rec_typeB(n, settings), typeB_spec(n), n)


def expand_gamma_tau(n: int, tau, **kwargs) -> ExpansionResult:
    """the tau-twisted two-sided polynomial in the bivariate basis"""
    return _expand_or_reason(brute_two_sided_tau(n, tau, **kwargs), bivariate_spec(n), n)


def _table(row: GammaRow) -> dict[str, int]:
    return {",".join(str(k) for k in (i if isinstance(i, tuple) else (i,))): v
            for i, v in row.entries.items()}


def check_gessel(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """
    expand A_n(s,t;x,y) (recurrence; cross-checked against brute force up to
    the oracle limit) and report whether every gamma is a nonnegative integer.

    A recurrence/brute-force mismatch is an implementation bug and raises
    InternalError; a negative coefficient is a finding reported as fail.
    """
    settings = settings or get_settings()
    start = time.perf_counter()
    a = rec_four_variable(n, settings)
    oracle = n <= min(settings.oracle_limit, settings.effective_cap("S"))
    if oracle and brute_four_variable(n, workers=1, settings=settings) != a:
        raise InternalError(f"rec_four_variable({n}) differs from brute force")

    row = expand_gamma(a, four_variable_spec(n), n)
    negative = row.negative_entries()
    witness = None
    if negative:
        witness = ", ".join(
            f"gamma_{n},{i},{j} = {v}" for (i, j), v in sorted(negative.items())
        )
    logger.info("check_gessel n=%d: %s", n, "fail" if witness else "pass")
    return make_report(
        "check_gessel",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        kind="conjecture",
        details={
            "oracle_checked": oracle,
            "gamma": _table(row),
            "gamma_bivariate": _table(four_variable_to_bivariate(row)),
        },
    )


def check_gessel_tau(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """
    every tau-twisted polynomial over S_n expands with nonnegative integer
    gamma, and the expansion depends only on des(tau)
    """
    settings = settings or get_settings()
    start = time.perf_counter()
    by_des: dict[int, tuple[str, GammaRow]] = {}
    witness = None
    for tau in iter_sn_words(n):
        result = expand_gamma_tau(n, tau, workers=1, settings=settings)
        label = format_word(tau)
        if not result.ok:
            witness = f"tau={label}: {result.reason}"
            break
        if not result.row.is_nonnegative():
            witness = f"tau={label}: negative {result.row.negative_entries()}"
            break
        d = _des(tau)
        if d not in by_des:
            by_des[d] = (label, result.row)
        elif by_des[d][1] != result.row:
            witness = f"tau={by_des[d][0]} and tau={label} differ with des={d}"
            break
    return make_report(
        "check_gessel_tau",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        kind="conjecture",
        details={str(d): _table(row) for d, (_, row) in sorted(by_des.items())},
    )


def verify_operator_identities(n: int, i: int, j: int) -> VerificationReport:
    """
    compare the closed forms of n(s-x)(t-y), stxy(dsdt + dxdy),
    stxy(dsdy + dtdx) and T_n on B^(n)_{i,j} with direct application
    """
    start = time.perf_counter()
    spec = four_variable_spec(n)
    if not spec.contains((i, j)):
        raise ValueError(f"({i}, {j}) outside the region for n = {n}")
    b = basis_element(spec, i, j)
    stxy = monomial(STXY, s=1, t=1, x=1, y=1)
    s, t, x, y = (variable(STXY, v) for v in "stxy")

    direct = {
        "M": n * ((s - x) * (t - y) * b),
        "D1": stxy * (poly_partial(poly_partial(b, "s"), "t")
                      + poly_partial(poly_partial(b, "x"), "y")),
        "D2": stxy * (poly_partial(poly_partial(b, "s"), "y")
                      + poly_partial(poly_partial(b, "t"), "x")),
        "T": apply_Tn(b, n),
    }
    failed = []
    for name, coeffs in operator_closed_forms(n, i, j).items():
        try:
            closed = combine_basis(n + 1, coeffs)
        except ValueError as e:
            failed.append(f"{name} ({e})")
            continue
        if closed != direct[name]:
            failed.append(name)
    return make_report(
        "verify_operator_identities",
        {"n": n, "i": i, "j": j},
        f"mismatch in {', '.join(failed)}" if failed else None,
        ms=elapsed_ms(start),
    )


def verify_operator_identities_all(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """verify_operator_identities over the whole region for n"""
    (settings or get_settings()).check_cap("rec", n, "verify_operator_identities")
    start = time.perf_counter()
    indices = four_variable_spec(n).indices()
    witness = None
    for i, j in indices:
        report = verify_operator_identities(n, i, j)
        if not report.passed:
            witness = f"(i, j) = ({i}, {j}): {report.witness}"
            break
    return make_report(
        "verify_operator_identities",
        {"n": n, "count": len(indices)},
        witness,
        ms=elapsed_ms(start),
    )
