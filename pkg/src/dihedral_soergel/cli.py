"""Command line entry point: ``dihedral-soergel``.

Exit codes: 0 on success or a passing check, 1 when a check ran and failed,
2 on usage or configuration errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import bimodule as bm
from . import verify as vf
from .dihedral import GroupElem, parse_word
from .qnum import BinomialIntegrityError, Color, specialize, two_color_binomial, two_color_quantum
from .realizations import FINITE_CATALOG, load_realization
from .subexpr import a_value_bruteforce, a_value_closed
from .symalg import DemazureCertificateRequired, RealizationError, q_equal

AVALUE_MAX_LENGTH = 10
MORPHISM_DEFAULT = ("a2", "b2", "g2", "h2")


def _usage_error(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load(source: str):
    try:
        return load_realization(source)
    except RealizationError as exc:
        _usage_error(str(exc))


def _color(_ctx, _param, value):
    try:
        return Color.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(human)


@click.group()
def main():
    """Exact rank-2 Soergel calculus: quantum numbers, subexpression sums,
    localized Bott-Samuelson bimodules."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="Index of the quantum number.")
@click.option("--color", type=str, default="X", callback=_color, show_default=True)
@click.option("--realization", default=None, help="Catalog name or JSON file to specialize in.")
def qnum(n, color, realization):
    """Print the two-colored quantum number [n]_color."""
    if n < 0:
        _usage_error("n must be non-negative")
    value = two_color_quantum(n, color)
    if realization is None:
        click.echo(value.render())
        return
    r = _load(realization)
    if r.m is None:
        click.echo(value.render())
    else:
        click.echo(str(specialize(value, r)))


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--color", type=str, default="X", callback=_color, show_default=True)
@click.option("--realization", default=None, help="Catalog name or JSON file to specialize in.")
def qbinom(m, n, color, realization):
    """Print the two-colored quantum binomial [m choose n]_color."""
    if m < 0 or n < 0:
        _usage_error("m and n must be non-negative")
    try:
        value = two_color_binomial(m, n, color)
    except BinomialIntegrityError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if realization is None:
        click.echo(value.render())
        return
    r = _load(realization)
    click.echo(value.render() if r.m is None else str(specialize(value, r)))


@main.command()
@click.option("--word", required=True, help="Word over s,t; 'e' for the empty word.")
@click.option("--target", required=True, help="Group element as a word; 'e' for the identity.")
@click.option("--realization", default="universal", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def avalue(word, target, realization, as_json):
    """Brute-force subexpression sum a^word(target) and its closed-form check."""
    try:
        w = parse_word(word)
        g = GroupElem.from_word(parse_word(target))
    except ValueError as exc:
        _usage_error(str(exc))
    if len(w) > AVALUE_MAX_LENGTH:
        _usage_error(f"word length {len(w)} exceeds the limit {AVALUE_MAX_LENGTH}")
    r = _load(realization)
    brute = a_value_bruteforce(w, g, r).cancel()
    matches = q_equal(brute, a_value_closed(w, g, r))
    roots = [rf.reflection.word for rf in brute.denominator_roots()]
    payload = {
        "numerator": brute.num.render(),
        "denominator_roots": roots,
        "matches_closed_form": matches,
    }
    human = "\n".join(
        [
            f"value: {brute.render()}",
            f"numerator: {payload['numerator']}",
            f"denominator_roots: {' '.join(roots) if roots else '(none)'}",
            f"matches_closed_form: {str(matches).lower()}",
        ]
    )
    _emit(payload, as_json, human)


def _human_report(report: vf.Report) -> str:
    lines = [f"{report.command}: {report.status} ({report.cases_run} cases, {len(report.failures)} failures)"]
    for f in report.failures:
        lines.append(f"  FAIL {f.case}")
        lines.append(f"    expected: {f.expected}")
        lines.append(f"    actual:   {f.actual}")
    return "\n".join(lines)


@main.command(name="verify")
@click.argument("suite", type=click.Choice(["quantum", "theorem", "morphism", "assumption", "specialized"]))
@click.option("--max-n", type=int, default=20, show_default=True, help="quantum: parameter bound.")
@click.option("--max-binom", type=int, default=12, show_default=True, help="quantum: bound for the binomial ratio.")
@click.option("--max-length", type=int, default=8, show_default=True, help="theorem: word length bound.")
@click.option("--realization", "realizations", multiple=True, help="Catalog name or JSON file; repeatable.")
@click.option("--trials", type=int, default=50, show_default=True, help="morphism: random tensors per realization.")
@click.option("--oracle-trials", type=int, default=None, help="morphism: tensors also checked against the oracle.")
@click.option("--degree", type=int, default=2, show_default=True, help="morphism: degree bound of tensor entries.")
@click.option("--seed", type=int, default=0, show_default=True, help="morphism: 64-bit PRNG seed.")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--no-timing", is_flag=True, help="Report elapsed_ms as 0 for byte-identical output.")
def verify_cmd(suite, max_n, max_binom, max_length, realizations, trials, oracle_trials, degree, seed, as_json, no_timing):
    """Run an invariant suite and print a report."""
    timing = not no_timing
    if min(max_n, max_binom, max_length, trials, degree) < 0 or seed < 0:
        _usage_error("numeric options must be non-negative")
    try:
        if suite == "quantum":
            report = vf.verify_quantum(max_n, max_binom, timing=timing)
        elif suite == "theorem":
            r = _load(realizations[0] if realizations else "universal")
            report = vf.verify_theorem(r, max_length, timing=timing)
        elif suite in ("assumption", "specialized"):
            rs = [_load(source) for source in (realizations or FINITE_CATALOG)]
            if any(r.m is None for r in rs):
                _usage_error(f"the {suite} suite needs finite realizations")
            fn = vf.verify_assumption if suite == "assumption" else vf.verify_specialized
            report = fn(rs, timing=timing)
        else:
            rs = [_load(source) for source in (realizations or MORPHISM_DEFAULT)]
            if any(r.m is None for r in rs):
                _usage_error("the morphism suite needs finite realizations")
            parts = [vf.verify_morphism(r, trials, degree, seed, oracle_trials, timing=timing) for r in rs]
            report = vf.merge_reports("verify morphism", parts)
    except (RealizationError, DemazureCertificateRequired) as exc:
        _usage_error(str(exc))
    _emit(report.to_json(), as_json, _human_report(report))
    sys.exit(0 if report.passed else 1)


@main.command()
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="JSON file with a localized element.")
@click.option("--realization", required=True)
@click.option("--json", "as_json", is_flag=True)
def member(input_path, realization, as_json):
    """Decide whether a localized element lies in the Bott-Samuelson bimodule."""
    r = _load(realization)
    try:
        with open(input_path) as fh:
            x = bm.Localized.from_json(r, json.load(fh))
        result = bm.membership(x)
    except (ValueError, KeyError, json.JSONDecodeError, DemazureCertificateRequired) as exc:
        _usage_error(str(exc))
    _emit({"member": result, "word": x.word}, as_json, str(result).lower())
    sys.exit(0 if result else 1)


if __name__ == "__main__":  # pragma: no cover
    main()
