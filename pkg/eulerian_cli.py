"""command line: gen, gamma, verify, export"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, Literal

import humps
from pydantic import BaseModel, Field, ValidationError

from eulerian_report import reports_to_json
from eulerian_settings import EulerianSettings, get_settings, hard_caps
from eulerian_util import configure_logging
from exactpoly import (
    BasisDependentError,
    InternalError,
    NotInSpanError,
    Polynomial,
    format_monomials,
    poly_to_json,
)
from gammalab import (
    BasisSpec,
    GammaRow,
    bivariate_spec,
    expand_gamma,
    expand_gamma_typeB,
    format_gamma,
    four_variable_spec,
    four_variable_to_bivariate,
    gamma_bivariate_rec,
    gamma_rows_to_csv,
    gamma_rows_to_json,
    gamma_univariate_rec,
    try_expand,
    typeB_spec,
    univariate_spec,
)
from genpoly import (
    PolyFamily,
    family_kinds,
    generate,
    generators,
    rec_eulerian_homog,
    rec_four_variable,
    rec_two_sided,
)
from permstat import parse_word
from verify import run_suite, summarize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_THEOREM_FAILURE = 2
EXIT_INTERNAL = 3

# kinds whose polynomial lives in one of the gamma bases
pretty_specs: dict[str, Callable[[int], BasisSpec]] = {
    "two-sided": bivariate_spec,
    "two-sided-tau": bivariate_spec,
    "two-sided-homog": four_variable_spec,
    "reversal-homog": four_variable_spec,
    "eulerian-homog": univariate_spec,
    "type-B": typeB_spec,
}

gamma_flavors = ("four-variable", "bivariate", "univariate", "type-B")

valid_region = (
    f"valid region: S_n and I_n brute force n <= {hard_caps['S']}, "
    f"B_n brute force n <= {hard_caps['B']}, recurrences n <= {hard_caps['rec']} "
    "(EULERIAN_MAX_N lowers these)"
)


class CliConfig(BaseModel, frozen=True):
    """parsed command line: subcommand parameters and the global flags"""

    command: Literal["gen", "gamma", "verify", "export"]
    params: dict[str, Any] = {}
    workers: int | None = Field(default=None, ge=1)
    fmt: Literal["json", "csv", "pretty"] = "pretty"
    out: str | None = None
    log_level: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        """split argparse output into global flags and subcommand params"""
        params = vars(args).copy()
        flags = {k: params.pop(k) for k in ("command", "workers", "fmt", "out", "log_level")}
        if flags["fmt"] is None:
            flags["fmt"] = "json" if flags["command"] == "verify" else "pretty"
        return cls(**flags, params=params)


class UsageParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n{valid_region}\n")


def _global_flags(default) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=default, help="worker processes")
    common.add_argument(
        "--format",
        choices=["json", "csv", "pretty"],
        default=default,
        dest="fmt",
        help="default json for verify, pretty otherwise",
    )
    common.add_argument("--out", default=default, help="output path (default stdout)")
    common.add_argument("--log-level", default=default, help="DEBUG, INFO, WARNING, ...")
    return common


def build_parser() -> argparse.ArgumentParser:
    """parser with the four subcommands; global flags go before or after the subcommand"""
    common = _global_flags(argparse.SUPPRESS)

    parser = UsageParser(prog="eulerian", description=__doc__, parents=[_global_flags(None)])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a polynomial family")
    gen.add_argument("kind", choices=family_kinds)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--method", choices=["brute", "rec"], default=None)
    gen.add_argument("--tau", default=None, help='e.g. "321", "-2,1" or "-1"')

    gamma = sub.add_parser("gamma", parents=[common], help="gamma coefficient table")
    gamma.add_argument("--n-max", type=int, required=True)
    gamma.add_argument("--method", choices=["rec", "expand"], default="rec")
    gamma.add_argument("--flavor", choices=gamma_flavors, default="four-variable")

    verify = sub.add_parser("verify", parents=[common], help="run checks")
    verify.add_argument(
        "target", nargs="?", default=None, help="all, theorems, conjectures or a check name"
    )
    verify.add_argument("--suite", default=None, help="same as target")
    verify.add_argument("--max-n", type=int, default=None)

    export = sub.add_parser("export", parents=[common], help="coefficient triangle")
    export.add_argument("what", choices=["family", "gamma"])
    export.add_argument("--kind", choices=family_kinds, default="two-sided")
    export.add_argument("--n-max", type=int, required=True)
    export.add_argument("--method", choices=["brute", "rec"], default=None)
    export.add_argument("--flavor", choices=gamma_flavors[:3], default="four-variable")

    return parser


def _method(kind: str, method: str | None) -> str:
    if method is not None:
        return method
    return "rec" if "rec" in generators[kind] else "brute"


def _polynomial_csv(p: Polynomial) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([*p.varset.names, "coeff"])
    for exp, c in p.items():
        writer.writerow([*exp, c])
    return out.getvalue()


def render_polynomial(p: Polynomial, kind: str, n: int, fmt: str) -> str:
    """one polynomial in the requested format"""
    if fmt == "json":
        return json.dumps(poly_to_json(p)) + "\n"
    if fmt == "csv":
        return _polynomial_csv(p)

    text = format_monomials(p) + "\n"
    spec_fn = pretty_specs.get(kind)
    if spec_fn is not None:
        row = try_expand(p, spec_fn(n), n)
        if row is not None:
            text += f"= {format_gamma(row, spec_fn(n))}\n"
    return text


def cmd_gen(config: CliConfig, settings: EulerianSettings) -> int:
    """gen KIND --n N [--method] [--tau]"""
    p = config.params
    tau = parse_word(p["tau"]) if p["tau"] else None
    family = PolyFamily(kind=p["kind"], n=p["n"], tau=tau)
    method = _method(family.kind, p["method"])
    poly = generate(family, method, workers=config.workers, settings=settings)
    _write(render_polynomial(poly, family.kind, family.n, config.fmt), config.out)
    return EXIT_OK


def gamma_rows(
    n_max: int, method: str, flavor: str, settings: EulerianSettings
) -> tuple[list[GammaRow], dict[int, str]]:
    """
    gamma rows for n = 1..n_max and the reason for every n without one.

    rec: the coefficient recurrences; expand: the exact solver on the
    recurrence-generated polynomials.
    """
    if n_max < 1:
        raise ValueError(f"--n-max must be >= 1, got {n_max}")
    settings.check_cap("rec", n_max, "gamma")

    if method == "rec":
        if flavor == "type-B":
            raise ValueError("type-B gamma tables are only available with --method expand")
        if flavor == "univariate":
            return gamma_univariate_rec(n_max), {}
        rows = gamma_bivariate_rec(n_max)
        if flavor == "bivariate":
            rows = [four_variable_to_bivariate(r) for r in rows]
        return rows, {}

    rows, failures = [], {}
    for n in range(1, n_max + 1):
        if flavor == "type-B":
            result = expand_gamma_typeB(n, settings)
            if result.ok:
                rows.append(result.row)
            else:
                failures[n] = result.reason
            continue
        poly, spec = {
            "four-variable": (rec_four_variable, four_variable_spec),
            "bivariate": (rec_two_sided, bivariate_spec),
            "univariate": (rec_eulerian_homog, univariate_spec),
        }[flavor]
        try:
            rows.append(expand_gamma(poly(n, settings), spec(n), n))
        except NotInSpanError as e:
            failures[n] = f"not in span: {e}"
    return rows, failures


def _gamma_spec(flavor: str, n: int) -> BasisSpec:
    return {
        "four-variable": four_variable_spec,
        "bivariate": bivariate_spec,
        "univariate": univariate_spec,
        "type-B": typeB_spec,
    }[flavor](n)


def render_gamma(rows: list[GammaRow], flavor: str, fmt: str) -> str:
    """gamma rows in the requested format"""
    if fmt == "csv":
        return gamma_rows_to_csv(rows)
    if fmt == "json":
        return json.dumps(gamma_rows_to_json(rows)) + "\n"
    return "".join(
        f"{row.n}: {format_gamma(row, _gamma_spec(flavor, row.n))}\n"
        for row in sorted(rows, key=lambda r: r.n)
    )


def cmd_gamma(config: CliConfig, settings: EulerianSettings) -> int:
    """gamma --n-max N [--method] [--flavor]"""
    p = config.params
    rows, failures = gamma_rows(p["n_max"], p["method"], p["flavor"], settings)
    _write(render_gamma(rows, p["flavor"], config.fmt), config.out)
    for n, reason in sorted(failures.items()):
        print(f"n={n}: {reason}", file=sys.stderr)
    return EXIT_THEOREM_FAILURE if failures else EXIT_OK


def _reports_csv(reports) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["check", "params", "outcome", "kind", "witness", "ms"])
    for r in reports_to_json(reports):
        writer.writerow(
            [
                r["check"],
                json.dumps(r["params"], sort_keys=True),
                r["outcome"],
                r["kind"],
                r["witness"] or "",
                r["ms"],
            ]
        )
    return out.getvalue()


def render_reports(reports, fmt: str) -> str:
    """reports in the requested format"""
    if fmt == "json":
        return json.dumps(reports_to_json(reports), indent=2) + "\n"
    if fmt == "csv":
        return _reports_csv(reports)
    lines = []
    for r in reports_to_json(reports):
        params = " ".join(f"{k}={v}" for k, v in r["params"].items())
        line = f"{r['outcome']:7} {r['kind']:10} {r['check']} {params} ({r['ms']} ms)"
        if r["witness"]:
            line += f"\n        witness: {r['witness']}"
        lines.append(line)
    summary = summarize(reports)
    lines.append(
        "pass {pass}, fail {fail}, skipped {skipped}".format(**summary["counts"])
    )
    return "\n".join(lines) + "\n"


def resolve_checks(target: str) -> list[str]:
    """suite name or check name (kebab-case accepted) -> check names"""
    # pylint:disable=import-outside-toplevel
    from checks.check_all import check_dic, suites

    name = humps.dekebabize(target)
    if name in suites:
        return suites[name]
    if name in check_dic:
        return [name]
    raise KeyError(
        f"unknown check {target}; choose from {sorted(suites)} or {sorted(check_dic)}"
    )


def cmd_verify(config: CliConfig, settings: EulerianSettings) -> int:
    """verify {TARGET | --suite TARGET} [--max-n]"""
    p = config.params
    target = p["suite"] or p["target"]
    if target is None:
        raise ValueError("verify needs a suite (all, theorems, conjectures) or a check name")
    names = resolve_checks(target)
    reports = run_suite(names, p["max_n"], config.workers, settings)
    _write(render_reports(reports, config.fmt), config.out)
    if summarize(reports)["theorem_failures"]:
        return EXIT_THEOREM_FAILURE
    return EXIT_OK


def family_triangle(
    kind: str, n_max: int, method: str, settings: EulerianSettings, workers: int | None
) -> list[dict]:
    """
    rows {n, i, j, coeff} for n = 1..n_max: i and j are the exponents of the
    first two variables (the others follow by homogeneity); one-variable
    families leave j as None
    """
    if kind in ("two-sided-tau", "type-B-tau"):
        raise ValueError(f"{kind} depends on tau and has no triangle")
    rows = []
    start = 2 if kind == "cyclic" else 1
    for n in range(start, n_max + 1):
        p = generate(PolyFamily(kind=kind, n=n), method, workers=workers, settings=settings)
        for exp, c in p.items():
            j = exp[1] if len(exp) > 1 else None
            rows.append({"n": n, "i": exp[0], "j": j, "coeff": c})
    return sorted(rows, key=lambda r: (r["n"], r["i"], r["j"] or 0))


def cmd_export(config: CliConfig, settings: EulerianSettings) -> int:
    """export {family, gamma} --n-max N"""
    p = config.params
    if p["what"] == "gamma":
        rows, _ = gamma_rows(p["n_max"], "rec", p["flavor"], settings)
        text = (
            json.dumps(gamma_rows_to_json(rows)) + "\n"
            if config.fmt == "json"
            else gamma_rows_to_csv(rows)
        )
        _write(text, config.out)
        return EXIT_OK

    method = _method(p["kind"], p["method"])
    rows = family_triangle(p["kind"], p["n_max"], method, settings, config.workers)
    if config.fmt == "json":
        text = json.dumps([{**r, "coeff": str(r["coeff"])} for r in rows]) + "\n"
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "i", "j", "coeff"])
        for r in rows:
            writer.writerow([r["n"], r["i"], "" if r["j"] is None else r["j"], r["coeff"]])
        text = out.getvalue()
    _write(text, config.out)
    return EXIT_OK


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)


commands: dict[str, Callable[..., int]] = {
    "gen": cmd_gen,
    "gamma": cmd_gamma,
    "verify": cmd_verify,
    "export": cmd_export,
}


def join_signed_values(argv: list[str]) -> list[str]:
    """
    "--tau -2,1" -> "--tau=-2,1", argparse takes a leading minus for a flag
    """
    joined: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg == "--tau":
            value = next(it, None)
            if value is not None and value.startswith("-") and value[1:2].isdigit():
                joined.append(f"{arg}={value}")
                continue
            joined.append(arg)
            if value is not None:
                joined.append(value)
            continue
        joined.append(arg)
    return joined


def main(argv: list[str] | None = None) -> int:
    """entry point of the eulerian console script"""
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(join_signed_values(argv))
    settings = get_settings()
    try:
        config = CliConfig.from_args(args)
    except ValidationError as e:
        print(f"usage error: {e}\n{valid_region}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(config.log_level or settings.log_level)

    try:
        return commands[config.command](config, settings)
    except (InternalError, BasisDependentError) as e:
        logger.exception("internal error")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, KeyError) as e:
        print(f"usage error: {e}\n{valid_region}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
