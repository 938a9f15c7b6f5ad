"""Verification suites behind ``dihedral-soergel verify``.

Every suite returns a :class:`Report`.  Failures are sorted by case
descriptor so a report depends only on its inputs and seed.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bimodule as bm
from .bipoly import BiPoly
from .dihedral import GroupElem, bit_vectors, bruhat_leq, evaluate_word, universal_elements
from .qnum import Color, assumption_check, sigma_power, specialize, two_color_binomial, two_color_quantum
from .rng import SplitMix64
from .subexpr import (
    a_value_closed,
    a_value_terms,
    pi,
    ratio_rhs,
    terms_to_qelem,
    x_set,
    x_word,
    xi,
    y_word,
    zeta_roots,
)
from .symalg import QElem, Realization, is_polynomial, q_equal


@dataclass
class Failure:
    case: str
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"case": self.case, "expected": self.expected, "actual": self.actual}


@dataclass
class Report:
    command: str
    status: str = "pass"
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    details: dict = field(default_factory=dict)

    def check(self, case: str, ok: bool, expected: object = True, actual: object = False) -> bool:
        self.cases_run += 1
        if not ok:
            self.failures.append(Failure(case, str(expected), str(actual)))
        return ok

    def finish(self, started: float, timing: bool = True) -> Report:
        self.failures.sort(key=lambda f: f.case)
        if self.status != "error":
            self.status = "fail" if self.failures else "pass"
        self.elapsed_ms = int((time.perf_counter() - started) * 1000) if timing else 0
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "status": self.status,
            "cases_run": self.cases_run,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }
        if self.details:
            out["details"] = self.details
        return out


def merge_reports(command: str, parts: list[Report]) -> Report:
    """Concatenate per-realization reports; details are keyed by realization."""
    out = Report(command)
    for p in parts:
        out.cases_run += p.cases_run
        out.failures += p.failures
        out.elapsed_ms += p.elapsed_ms
        if p.status == "error":
            out.status = "error"
        out.details[p.details.get("realization", str(len(out.details)))] = p.details
    out.failures.sort(key=lambda f: f.case)
    if out.status != "error":
        out.status = "fail" if out.failures else "pass"
    return out


def _q(n: int, c: Color) -> BiPoly:
    return two_color_quantum(n, c)


def _b(m: int, n: int, c: Color) -> BiPoly:
    return two_color_binomial(m, n, c)


# -- quantum numbers ------------------------------------------------------------


def quantum_identity_cases(max_n: int = 20, max_binom: int = 12, max_parity: int = 30):
    """Yield ``(case, lhs, rhs)`` for every quantum-number identity."""
    sg = sigma_power
    for n in range(max_parity + 1):
        qx, qy = _q(n, Color.X), _q(n, Color.Y)
        if n % 2:
            yield f"parity n={n:02d}", qx, qy
        else:
            dx, dy = qx.exact_div(BiPoly.X), qy.exact_div(BiPoly.Y)
            yield f"parity n={n:02d} X|[n]_X", dx is not None, True
            yield f"parity n={n:02d} Y|[n]_Y", dy is not None, True
            yield f"parity n={n:02d} quotients", dx, dy
        for Z in Color:
            yield f"shift n={n:02d} Z={Z.value}", _q(n, Z), _q(n, sg(Z, n))
        if n:
            yield f"nonvanishing n={n:02d}", qx.evaluate(_Ints, 2, 2), n
    for m, n in itertools.product(range(max_n + 1), repeat=2):
        for Z in Color:
            sZ = Z.swap()
            tag = f"m={m:02d} n={n:02d} Z={Z.value}"
            yield f"product {tag}", _q(m + n + 1, sg(Z, n)), _q(m + 1, Z) * _q(n + 1, sZ) - _q(m, sZ) * _q(n, Z)
            yield f"difference {tag}", _q(m, sg(Z, n)), _q(m + n, Z) * _q(n + 1, sZ) - _q(m + n + 1, sZ) * _q(n, Z)
            lhs1 = _q(m + n + 1, sg(Z, n)) * _q(m + n, Z) - _q(m + 1, Z) * _q(m, sg(Z, n))
            yield f"square-difference-a {tag}", lhs1, _q(n, Z) * _q(2 * m + n + 1, sg(Z, m + 1))
            yield f"square-difference-b {tag}", lhs1, _q(n, sg(Z, n)) * _q(2 * m + n + 1, sg(Z, n + m))
            lhs3 = _q(m + n + 1, sg(Z, n + 1)) * _q(m + n + 1, Z) - _q(m, Z) * _q(m, sg(Z, n + 1))
            yield f"square-difference-c {tag}", lhs3, _q(n + 1, Z) * _q(2 * m + n + 1, sg(Z, m))
            if 1 <= n <= m:
                yield (
                    f"binomial-recursion-1 {tag}",
                    _b(m, n, Z),
                    _b(m + 1, n, sg(Z, n)) * _q(n + 1, Z) - _b(m, n - 1, Z) * _q(m + 2, sg(Z, n + 1)),
                )
                yield (
                    f"binomial-recursion-2 {tag}",
                    _b(m + 1, n, Z),
                    _b(m, n, sg(Z, n)) * _q(n + 1, Z) - _b(m, n - 1, Z) * _q(m - n, sg(Z, n + 1)),
                )
            if 1 <= m <= max_binom and n <= max_binom:
                yield (
                    f"binomial-ratio {tag}",
                    _q(2 * m + n + 1, sg(Z, m + 1)) * _b(2 * m + n, m - 1, sg(Z, n)),
                    _q(m, sg(Z, n)) * _b(2 * m + n + 1, m, sg(Z, n + 1)),
                )


class _Ints:
    """Integer arithmetic in the duck-typed ring shape ``BiPoly.evaluate`` expects."""

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def from_int(n):
        return n


def verify_quantum(max_n: int = 20, max_binom: int = 12, timing: bool = True) -> Report:
    started = time.perf_counter()
    report = Report("verify quantum")
    for case, lhs, rhs in quantum_identity_cases(max_n, max_binom, max(max_n, 30)):
        report.check(case, lhs == rhs, rhs, lhs)
    return report.finish(started, timing)


# -- closed form for subexpression sums ---------------------------------------------


def theorem_mismatches(r: Realization, max_length: int, max_g_length: int | None = None) -> Iterable[tuple[str, str, str]]:
    """Yield ``(case, closed, brute)`` for every mismatch, and ``None`` per case run."""
    gmax = max_length if max_g_length is None else max_g_length
    targets = universal_elements(gmax)
    for length in range(max_length + 1):
        for letters in itertools.product("st", repeat=length):
            w = "".join(letters)
            terms = a_value_terms(w, r)
            for g in targets:
                brute = terms_to_qelem(terms.get(g, {}), r)
                closed = a_value_closed(w, g, r)
                if q_equal(brute, closed):
                    yield None
                else:
                    yield (f"w={w or 'e'} g={g}", closed.render(), brute.cancel().render())


def verify_theorem(r: Realization, max_length: int = 8, max_g_length: int | None = None, timing: bool = True) -> Report:
    started = time.perf_counter()
    report = Report("verify theorem")
    for item in theorem_mismatches(r, max_length, max_g_length):
        if item is None:
            report.check("", True)
        else:
            report.check(*item)
    report.details = {"realization": r.name, "max_length": max_length}
    return report.finish(started, timing)


# -- assumption ------------------------------------------------------------------------


def verify_assumption(realizations: list[Realization], timing: bool = True) -> Report:
    """The three equivalent conditions must agree on each realization; the
    details record which way each one went."""
    started = time.perf_counter()
    report = Report("verify assumption")
    details = {}
    for r in realizations:
        a = assumption_check(r)
        details[r.name] = a.to_json()
        report.check(
            f"{r.name} conditions agree",
            a.conditions_agree,
            "conditions (1), (2), (3) agree",
            f"(1)={a.holds} (2)={a.condition_2} (3)={a.condition_3}",
        )
    report.details = {"realizations": details}
    return report.finish(started, timing)


# -- specialized identities in finite realizations ----------------------------------------


def specialized_cases(r: Realization):
    """Yield ``(case, ok, expected, actual)`` for the identities that hold only
    after specialization in a finite realization."""
    m = r.m
    c = r.coef
    xw, yw = x_word(m), y_word(m)
    px, py = pi(xw, r), pi(yw, r)
    q_m1 = specialize(two_color_quantum(m - 1, Color.X), r)
    factor = c.mul(xi(r).payload, q_m1.payload)
    rhs = px.scale(factor)
    yield "pi_y = xi*[m-1]_X*pi_x", py == rhs, rhs.render(), py.render()

    x_elem = GroupElem(None, "s", m)
    for g in universal_elements(m):
        if not bruhat_leq(g, x_elem):
            continue
        roots = x_set(g, x_elem).roots(r)
        prod = QElem.over_roots(r.one(), [(1, rf) for _, rf in roots])
        sign = 1
        for s, _ in roots:
            sign *= s
        # prod X / π_x  ==  ratio  <=>  sign * prod(factors) == ratio * π_x
        lhs = r.den_product(prod.den).scale(c.from_int(sign))
        target = ratio_rhs(r, g)
        rhs_poly = px.scale(target.payload)
        yield f"ratio g={g}", lhs == rhs_poly, rhs_poly.render(), lhs.render()

    for length in range(m + 1):
        for letters in itertools.product("st", repeat=length):
            w = "".join(letters)
            val = QElem(px) * a_value_closed(w, GroupElem.identity(), r)
            yield f"integral w={w or 'e'}", is_polynomial(val) is not None, "polynomial", val.render()

    for k in range(1, m + 1):
        for Z in Color:
            lhs = c.mul(specialize(two_color_quantum(k, Z), r).payload,
                        specialize(two_color_quantum(m - 1, sigma_power(Z, k - 1)), r).payload)
            rhs_v = specialize(two_color_quantum(m - k, Z), r).payload
            yield f"m-k k={k} Z={Z.value}", lhs == rhs_v, c.render(rhs_v), c.render(lhs)


def verify_specialized(realizations: list[Realization], timing: bool = True) -> Report:
    started = time.perf_counter()
    report = Report("verify specialized")
    for r in realizations:
        for case, ok, expected, actual in specialized_cases(r):
            report.check(f"{r.name} {case}", ok, expected, actual)
    report.details = {"realizations": [r.name for r in realizations]}
    return report.finish(started, timing)


# -- the morphism -----------------------------------------------------------------------------


def oracle_mismatches(r: Realization, ps) -> list[str]:
    """Bit strings ``f`` where ``φ_Q(p_1 ⊗ ... ⊗ p_m ⊗ 1)`` disagrees with the
    D-operator expansion."""
    m = r.m
    xw, yw = x_word(m), y_word(m)
    ps = list(ps[:m]) + [r.one()]
    out = bm.phi_apply(r, bm.embed_tensor(r, xw, ps))
    px = pi(xw, r)
    fs = list(bit_vectors(m))
    preds = bm.d_expansion_many(r, xw, ps[:m], [evaluate_word(yw, f, m) for f in fs])
    bad = []
    for f, comp, d in zip(fs, out.components, preds):
        pred = d * QElem.over_roots(px, zeta_roots(yw, f, r))
        if comp != pred:
            bad.append("".join(map(str, f)))
    return bad


def verify_morphism(
    r: Realization,
    trials: int = 50,
    degree: int = 2,
    seed: int = 0,
    oracle_trials: int | None = None,
    timing: bool = True,
    progress: Callable[[str], None] | None = None,
) -> Report:
    """Generator check against the assumption, then seeded image-containment and
    oracle checks on random tensors when the assumption holds."""
    started = time.perf_counter()
    report = Report("verify morphism")
    m = r.m
    a = assumption_check(r)
    gen = bm.phi_on_generator_check(r)
    witnesses = [{"k": k, "color": c.value, "value": str(v)} for k, c, v in a.witnesses]
    report.details = {
        "realization": r.name,
        "assumption_holds": a.holds,
        "assumption_witnesses": witnesses,
        "phi_ok": gen.phi_ok,
        "psi_ok": gen.psi_ok,
        "seed": seed,
    }
    report.check(
        f"{r.name} phi_on_generator",
        gen.both,
        "phi(b_x) = b_y and psi(b_y) = b_x",
        f"phi_ok={gen.phi_ok} psi_ok={gen.psi_ok} witnesses={witnesses} "
        f"phi_bad={gen.phi_failures} psi_bad={gen.psi_failures}",
    )
    report.check(
        f"{r.name} generator check matches assumption",
        gen.both == a.holds,
        f"assumption holds={a.holds}",
        f"generator check={gen.both}",
    )
    if not (a.holds and r.demazure_certified):
        report.details["random_tensors"] = "skipped"
        return report.finish(started, timing)

    rng = SplitMix64(seed)
    oracle_trials = trials if oracle_trials is None else oracle_trials
    for i in range(trials):
        px_tensor = bm.random_tensor(r, rng, m, degree)
        py_tensor = bm.random_tensor(r, rng, m, degree)
        tag = f"{r.name} trial={i:03d}"
        img = bm.phi_apply(r, bm.embed_tensor(r, x_word(m), px_tensor))
        report.check(f"{tag} phi image in B_y", bm.membership(img), True, _tensor_text(px_tensor))
        img = bm.psi_apply(r, bm.embed_tensor(r, y_word(m), py_tensor))
        report.check(f"{tag} psi image in B_x", bm.membership(img), True, _tensor_text(py_tensor))
        if i < oracle_trials:
            bad = oracle_mismatches(r, px_tensor)
            report.check(f"{tag} oracle", not bad, "all components agree", f"{bad} for {_tensor_text(px_tensor)}")
        if progress:
            progress(tag)
    return report.finish(started, timing)


def _tensor_text(ps) -> str:
    return " ⊗ ".join(f"({p.render()})" for p in ps)
