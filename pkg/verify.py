"""executable checks of the identities, theorems and conjectures"""

import logging
import time
from typing import Any, Callable, Iterable

from eulerian_report import VerificationReport, make_report
from eulerian_settings import EulerianSettings, get_settings
from eulerian_util import elapsed_ms, get_worker_pool
from exactpoly import (
    ST,
    Polynomial,
    binomial,
    format_monomial,
    inverse_power_series,
    poly_coeff,
    poly_evaluate,
    poly_mul,
    poly_permute_vars,
    poly_to_json,
    poly_truncate,
    poly_value,
)
from gammalab import (
    expand_gamma,
    four_variable_spec,
    gamma_bivariate_rec,
    gamma_univariate_rec,
)
from genpoly import (
    PolyFamily,
    brute_cyclic,
    brute_dumont,
    brute_four_variable,
    brute_invseq,
    brute_reversal,
    brute_two_sided,
    brute_two_sided_tau,
    brute_typeB,
    brute_spaces,
    family_mass,
    generate,
    generators,
    rec_eulerian,
    rec_four_variable,
    rec_reversal,
    rec_two_sided,
    rec_typeB,
    tau_kinds,
)
from permstat import (
    Permutation,
    SignedPermutation,
    _cdes,
    _des,
    _des_b,
    _inverse,
    format_word,
    iter_bn_words,
    iter_sn_words,
)

logger = logging.getLogger(__name__)

klein_swaps: dict[str, dict[str, str]] = {
    "(12)(34)": {"s": "t", "t": "s", "x": "y", "y": "x"},
    "(13)(24)": {"s": "x", "x": "s", "t": "y", "y": "t"},
    "(14)(23)": {"s": "y", "y": "s", "t": "x", "x": "t"},
}

swap_st = {"s": "t", "t": "s"}


def _first_difference(p: Polynomial, q: Polynomial) -> str | None:
    """smallest monomial where p and q differ, rendered for a witness"""
    if p == q:
        return None
    exps = sorted(set(p.terms) | set(q.terms))
    for exp in exps:
        a, b = p.terms.get(exp, 0), q.terms.get(exp, 0)
        if a != b:
            mono = format_monomial(p.varset, exp) or "1"
            return f"coefficient of {mono}: {a} != {b}"
    raise AssertionError("unequal polynomials with equal terms")


def _series_witness(
    p: Polynomial, n: int, bound_i: int, bound_j: int, expected: Callable[[int, int], int]
) -> str | None:
    """
    multiply p by (1-s)^-(n+1) (1-t)^-(n+1) truncated at s^I t^J and compare
    every coefficient with expected(i, j)
    """
    bounds = {"s": bound_i, "t": bound_j}
    series = poly_truncate(
        poly_mul(p, inverse_power_series(ST, "s", n + 1, bound_i)), bounds
    )
    series = poly_truncate(
        poly_mul(series, inverse_power_series(ST, "t", n + 1, bound_j)), bounds
    )
    for i in range(bound_i + 1):
        for j in range(bound_j + 1):
            got, want = poly_coeff(series, (i, j)), expected(i, j)
            if got != want:
                return f"coefficient of s^{i}t^{j}: {got} != {want}"
    return None


def _bounds(n: int, bound_i: int | None, bound_j: int | None) -> tuple[int, int]:
    return (n + 4 if bound_i is None else bound_i, n + 4 if bound_j is None else bound_j)


def check_crs(
    n: int,
    bound_i: int | None = None,
    bound_j: int | None = None,
    settings: EulerianSettings | None = None,
) -> VerificationReport:
    """
    sum of binom(ij+n-1, n) s^i t^j = A_n(s,t) / (1-s)^(n+1) (1-t)^(n+1),
    compared coefficientwise up to s^I t^J (default I = J = n + 4).
    """
    start = time.perf_counter()
    bound_i, bound_j = _bounds(n, bound_i, bound_j)
    witness = _series_witness(
        rec_two_sided(n, settings),
        n,
        bound_i,
        bound_j,
        lambda i, j: binomial(i * j + n - 1, n),
    )
    return make_report(
        "check_crs",
        {"n": n, "I": bound_i, "J": bound_j},
        witness,
        ms=elapsed_ms(start),
    )


def check_crs_tau(
    n: int,
    tau,
    bound_i: int | None = None,
    bound_j: int | None = None,
    settings: EulerianSettings | None = None,
) -> VerificationReport:
    """
    sum of binom(ij+n-k, n) s^i t^j = A_n^(k)(s,t) / (1-s)^(n+1) (1-t)^(n+1)
    with k = des(tau) + 1.

    A_n^(k)(s,t) is the tau-twisted two-sided polynomial; it carries the same
    +1 exponent shifts as A_n(s,t).
    """
    start = time.perf_counter()
    word = Permutation(tau.word if isinstance(tau, Permutation) else tuple(tau)).word
    bound_i, bound_j = _bounds(n, bound_i, bound_j)
    k = _des(word) + 1
    p = brute_two_sided_tau(n, word, workers=1, settings=settings)
    witness = _series_witness(
        p, n, bound_i, bound_j, lambda i, j: binomial(i * j + n - k, n)
    )
    return make_report(
        "check_crs_tau",
        {"n": n, "tau": format_word(word), "k": k, "I": bound_i, "J": bound_j},
        witness,
        ms=elapsed_ms(start),
    )


def check_typeB_series(
    n: int,
    tau=None,
    bound_i: int | None = None,
    bound_j: int | None = None,
    settings: EulerianSettings | None = None,
) -> VerificationReport:
    """
    sum of binom(2ij+i+j+1+n-k, n) s^i t^j = B_n^(k)(s,t) / (1-s)^(n+1) (1-t)^(n+1)
    with k = des_B(tau) + 1; type B exponents are unshifted.
    """
    start = time.perf_counter()
    if tau is None:
        word = SignedPermutation.identity(n).word
    else:
        word = SignedPermutation(
            tau.word if isinstance(tau, SignedPermutation) else tuple(tau)
        ).word
    bound_i, bound_j = _bounds(n, bound_i, bound_j)
    k = _des_b(word) + 1
    p = brute_typeB(n, word, workers=1, settings=settings)
    witness = _series_witness(
        p,
        n,
        bound_i,
        bound_j,
        lambda i, j: binomial(2 * i * j + i + j + 1 + n - k, n),
    )
    return make_report(
        "check_typeB_series",
        {"n": n, "tau": format_word(word), "k": k, "I": bound_i, "J": bound_j},
        witness,
        ms=elapsed_ms(start),
    )


def _sweep(
    name: str, n: int, reports: Iterable[VerificationReport], label: str
) -> VerificationReport:
    """first failing report of a sweep becomes the witness"""
    start = time.perf_counter()
    count = 0
    witness = None
    for report in reports:
        count += 1
        if not report.passed:
            witness = f"{label}={report.params.get(label)}: {report.witness}"
            break
    return make_report(name, {"n": n, "count": count}, witness, ms=elapsed_ms(start))


def check_crs_tau_all(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """check_crs_tau for every tau in S_n"""
    (settings or get_settings()).check_cap("S", n, "check_crs_tau")
    return _sweep(
        "check_crs_tau",
        n,
        (check_crs_tau(n, tau, settings=settings) for tau in iter_sn_words(n)),
        "tau",
    )


def check_typeB_series_all(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """check_typeB_series for every tau in B_n"""
    (settings or get_settings()).check_cap("B", n, "check_typeB_series")
    return _sweep(
        "check_typeB_series",
        n,
        (check_typeB_series(n, tau, settings=settings) for tau in iter_bn_words(n)),
        "tau",
    )


def check_cyclic(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """(n+1) A_n(s,t) = sum over S_(n+1) of s^cdes(pi^-1) t^cdes(pi)"""
    start = time.perf_counter()
    (settings or get_settings()).check_cap("S", n + 1, "check_cyclic")
    left = (n + 1) * brute_two_sided(n, workers=1, settings=settings)
    right = brute_cyclic(n + 1, workers=1, settings=settings)
    return make_report(
        "check_cyclic",
        {"n": n},
        _first_difference(left, right),
        ms=elapsed_ms(start),
    )


def check_rotation_lemma(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """pi_2...pi_n pi_1 keeps cdes and cdes of the inverse, for every pi in S_n"""
    start = time.perf_counter()
    if n < 2:
        raise ValueError(f"rotation needs n >= 2, got {n}")
    (settings or get_settings()).check_cap("S", n, "check_rotation_lemma")
    witness = None
    for word in iter_sn_words(n):
        rotated = word[1:] + word[:1]
        before = (_cdes(word), _cdes(_inverse(word)))
        after = (_cdes(rotated), _cdes(_inverse(rotated)))
        if before != after:
            witness = f"pi={format_word(word)}: {before} -> {after}"
            break
    return make_report("check_rotation_lemma", {"n": n}, witness, ms=elapsed_ms(start))


def check_tau_independence(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """the tau-twisted polynomial depends on tau only through des(tau)"""
    start = time.perf_counter()
    (settings or get_settings()).check_cap("S", n, "check_tau_independence")
    groups: dict[int, tuple[str, Polynomial]] = {}
    sizes: dict[int, int] = {}
    witness = None
    for tau in iter_sn_words(n):
        d = _des(tau)
        p = brute_two_sided_tau(n, tau, workers=1, settings=settings)
        sizes[d] = sizes.get(d, 0) + 1
        if d not in groups:
            groups[d] = (format_word(tau), p)
            continue
        diff = _first_difference(groups[d][1], p)
        if diff:
            witness = f"tau={groups[d][0]} vs tau={format_word(tau)} (des={d}): {diff}"
            break
    return make_report(
        "check_tau_independence",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        kind="conjecture",
        details={
            "group_sizes": {str(d): c for d, c in sorted(sizes.items())},
            "polynomials": {
                str(d): poly_to_json(p) for d, (_, p) in sorted(groups.items())
            },
        },
    )


def check_invseq(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """
    A_n(s,t) = sum over I_n of s^dst(e) t^(asc_I(e)+1); also records whether the
    inversion sequence side is symmetric in s and t on its own.
    """
    start = time.perf_counter()
    right = brute_invseq(n, workers=1, settings=settings)
    left = brute_two_sided(n, workers=1, settings=settings)
    return make_report(
        "check_invseq",
        {"n": n},
        _first_difference(left, right),
        ms=elapsed_ms(start),
        kind="conjecture",
        details={
            "symmetric": poly_permute_vars(right, swap_st) == right,
            "polynomial": poly_to_json(right),
        },
    )


def check_klein(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """
    A_n(s,t;x,y) is fixed by the three double transpositions of the variables;
    for n >= 4 it is not fixed by s <-> x alone.
    """
    start = time.perf_counter()
    a = rec_four_variable(n, settings)
    witness = None
    for name, swap in klein_swaps.items():
        diff = _first_difference(a, poly_permute_vars(a, swap))
        if diff:
            witness = f"not fixed by {name}: {diff}"
            break

    asymmetry = _first_difference(a, poly_permute_vars(a, {"s": "x", "x": "s"}))
    if witness is None and n >= 4 and asymmetry is None:
        witness = "fixed by s <-> x, so fully symmetric"
    return make_report(
        "check_klein",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        details={"fully_symmetric": asymmetry is None, "asymmetry": asymmetry},
    )


def check_reversal(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """
    the tau = n...21 four-variable polynomial equals A_n(s,y;x,t); cross-checked
    against brute force up to the oracle limit
    """
    settings = settings or get_settings()
    start = time.perf_counter()
    rev = rec_reversal(n, settings)
    witness = _first_difference(
        rev, poly_permute_vars(rec_four_variable(n, settings), {"t": "y", "y": "t"})
    )
    oracle = n <= min(settings.oracle_limit, settings.effective_cap("S"))
    if witness is None and oracle:
        diff = _first_difference(rev, brute_reversal(n, workers=1, settings=settings))
        if diff:
            witness = f"recurrence vs brute force: {diff}"
    return make_report(
        "check_reversal",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        details={"oracle_checked": oracle},
    )


def check_dumont(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """sum over I_n of x^dst(e) = A_n(x)"""
    start = time.perf_counter()
    dumont = brute_dumont(n, workers=1, settings=settings)
    eulerian = rec_eulerian(n, settings)
    witness = None
    if dumont.terms != eulerian.terms:
        witness = f"{dict(dumont.items())} != {dict(eulerian.items())}"
    return make_report("check_dumont", {"n": n}, witness, ms=elapsed_ms(start))


def check_symmetry(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """A_n(s,t) = A_n(t,s) and the coefficients of s^i t^j and s^(n+1-i) t^(n+1-j) agree"""
    start = time.perf_counter()
    a = rec_two_sided(n, settings)
    witness = _first_difference(a, poly_permute_vars(a, swap_st))
    if witness is None:
        for (i, j), c in a.items():
            mirror = poly_coeff(a, (n + 1 - i, n + 1 - j))
            if c != mirror:
                witness = f"s^{i}t^{j} has {c}, s^{n + 1 - i}t^{n + 1 - j} has {mirror}"
                break
    return make_report("check_symmetry", {"n": n}, witness, ms=elapsed_ms(start))


def check_oracle_two_sided(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """both recurrences agree with brute force for A_n(s,t) and A_n(s,t;x,y)"""
    start = time.perf_counter()
    brute = brute_two_sided(n, workers=1, settings=settings)
    four = rec_four_variable(n, settings)
    comparisons = {
        "rec_two_sided": (rec_two_sided(n, settings), brute),
        "rec_four_variable at x=y=1": (poly_evaluate(four, {"x": 1, "y": 1}), brute),
        "rec_four_variable": (four, brute_four_variable(n, workers=1, settings=settings)),
    }
    witness = None
    for name, (left, right) in comparisons.items():
        diff = _first_difference(left, right)
        if diff:
            witness = f"{name}: {diff}"
            break
    return make_report("check_oracle_two_sided", {"n": n}, witness, ms=elapsed_ms(start))


def check_oracle_typeB(n: int, settings: EulerianSettings | None = None) -> VerificationReport:
    """rec_typeB(n) = brute_typeB(n, identity)"""
    start = time.perf_counter()
    witness = _first_difference(
        rec_typeB(n, settings), brute_typeB(n, workers=1, settings=settings)
    )
    return make_report("check_oracle_typeB", {"n": n}, witness, ms=elapsed_ms(start))


def check_gamma_recurrence(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """
    the gamma recurrence row for n equals the expansion of A_n(s,t;x,y), its
    row sums are the univariate gammas and its mass is n!
    """
    start = time.perf_counter()
    (settings or get_settings()).check_cap("rec", n, "check_gamma_recurrence")
    rec_row = gamma_bivariate_rec(n)[-1]
    spec = four_variable_spec(n)
    expanded = expand_gamma(rec_four_variable(n, settings), spec, n)
    univariate = gamma_univariate_rec(n)[-1]
    mass = sum(v * 2 ** (spec.m - 2 * i) for (i, _), v in rec_row.entries.items())

    witness = None
    if rec_row != expanded:
        witness = f"recurrence {rec_row.entries} != expansion {expanded.entries}"
    elif rec_row.row_sums() != univariate.entries:
        witness = f"row sums {rec_row.row_sums()} != {univariate.entries}"
    elif mass != family_mass("two-sided", n):
        witness = f"mass {mass} != {family_mass('two-sided', n)}"
    return make_report("check_gamma_recurrence", {"n": n}, witness, ms=elapsed_ms(start))


def check_normalization(
    n: int, settings: EulerianSettings | None = None
) -> VerificationReport:
    """
    every family (identity tau for the twisted ones) sums to n! or 2^n n! at
    all variables = 1; families whose cap is below n are listed as skipped
    """
    settings = settings or get_settings()
    start = time.perf_counter()
    witness = None
    checked, skipped = [], []
    for kind, methods in generators.items():
        method = "rec" if "rec" in methods else "brute"
        space = brute_spaces[kind][0] if method == "brute" else "rec"
        if n > settings.effective_cap(space) or (kind == "cyclic" and n < 2):
            skipped.append(kind)
            continue
        tau = None
        if kind in tau_kinds:
            tau = tuple(range(1, n + 1))
        p = generate(PolyFamily(kind=kind, n=n, tau=tau), method, workers=1, settings=settings)
        value, mass = poly_value(p), family_mass(kind, n)
        checked.append(kind)
        if value != mass:
            witness = f"{kind} ({method}) sums to {value}, expected {mass}"
            break
    return make_report(
        "check_normalization",
        {"n": n},
        witness,
        ms=elapsed_ms(start),
        details={"checked": checked, "skipped": skipped},
    )


def _run_check(
    name: str, fn: Callable[..., VerificationReport], n: int, settings: EulerianSettings
) -> VerificationReport:
    return fn(n, settings=settings)


def run_suite(
    names: Iterable[str],
    max_n: int | None = None,
    workers: int | None = None,
    settings: EulerianSettings | None = None,
) -> list[VerificationReport]:
    """
    Run the named checks for every n from the check's smallest n up to max_n
    (default: the check's own bound).

    Arguments:
        names: keys of checks.check_all.check_dic
        max_n: upper n for every check; n beyond a check's cap yields a
            skipped report
        workers: checks run in batches of this size, one process each;
            before_check fires as a batch starts, after_check as it ends

    Returns:
        reports sorted by check name, then params
    """
    # pylint:disable=import-outside-toplevel
    from checks.check_all import check_dic

    settings = settings or get_settings()
    workers = workers or settings.workers
    inner = settings.model_copy(
        update={"workers": 1, "before_check": None, "after_check": None}
    )

    tasks: list[tuple[str, Callable, int, EulerianSettings]] = []
    reports: list[VerificationReport] = []
    for name in names:
        if name not in check_dic:
            raise KeyError(f"unknown check {name}, choose from {sorted(check_dic)}")
        entry = check_dic[name]
        cap = entry.cap(settings)
        top = max_n if max_n is not None else min(entry.default_n, cap)
        for n in range(entry.min_n, top + 1):
            if n > cap:
                reports.append(
                    VerificationReport(
                        check=name,
                        params={"n": n},
                        outcome="skipped",
                        kind=entry.kind,
                        details={"reason": f"n = {n} outside valid region {entry.min_n}..{cap}"},
                    )
                )
                continue
            tasks.append((name, entry.fn, n, inner))

    for lo in range(0, len(tasks), workers):
        batch = tasks[lo : lo + workers]
        for name, _, n, _ in batch:
            logger.info("check start %s n=%d", name, n)
            if settings.before_check:
                settings.before_check(name, {"n": n})

        results = get_worker_pool(workers).starmap(_run_check, batch)

        for (name, _, n, _), report in zip(batch, results):
            logger.info("check end %s n=%d %s %dms", name, n, report.outcome, report.ms)
            if settings.after_check:
                settings.after_check(name, report.outcome, report.ms)
            reports.append(report)

    return sorted(reports, key=VerificationReport.sort_key)


def summarize(reports: Iterable[VerificationReport]) -> dict[str, Any]:
    """counts per outcome and the failing theorem-class checks"""
    counts: dict[str, int] = {"pass": 0, "fail": 0, "skipped": 0}
    theorem_failures = []
    for r in reports:
        counts[r.outcome] += 1
        if r.outcome == "fail" and r.kind == "theorem":
            theorem_failures.append(r.check)
    return {"counts": counts, "theorem_failures": theorem_failures}
