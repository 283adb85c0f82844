"""The check battery behind the CLI: every reproducible verification as a named check.

Each check is a pure function of a RunConfig and returns a CheckResult; the
JSON rendering of a report is a function of the RunConfig alone, so repeated
runs with identical parameters are byte-identical.  Wall-clock durations are
kept out of the JSON for the same reason.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from random import Random

from .algebra import TensorSeries, rational
from .dehn import (
    L,
    L_degree_lemmas,
    calibrate_twist_convention,
    contradiction_residual,
    expansion_independence_check,
    independence_matrix,
    solve_coefficients,
    table2,
    twist_power_check,
)
from .expansion import (
    BoundaryStatus,
    ExpansionTable,
    check_boundary,
    check_magnus_degree_one,
    ell,
    load_table,
    massuyeau_theta0,
)
from .linalg import matrix_rank
from .series import bch, dynkin_map, is_lie_element, random_lie_series, texp, tlog
from .symplectic import (
    conjugation_law_check,
    nmap,
    random_ia_omega,
    random_symplectic_linear,
)
from .words import Configuration, GroupWord, concat, config_xy, invert, parse_group_word


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one harness invocation; fully determines every report byte."""

    command: str = "verify-all"
    config: str | None = None
    g: int | None = None
    h: int | None = None
    k1: int | None = None
    k2: int | None = None
    trunc: int = 8
    seed: int = 0
    trials: int = 100
    fmt: str = "text"
    out: str | None = None
    pairing_sign: int = 1
    expansion: str = "builtin:massuyeau"

    def load_expansion(self, genus: int) -> ExpansionTable:
        if self.expansion == "builtin:massuyeau":
            return massuyeau_theta0(genus)
        table = load_table(self.expansion)
        if table.genus != genus:
            raise ValueError(
                f"expansion file has genus {table.genus}, run needs genus {genus}"
            )
        return table

    def uses_builtin_expansion(self) -> bool:
        return self.expansion == "builtin:massuyeau"

    def genera(self, *wanted: int) -> tuple[int, ...]:
        """The genera a sweep should cover: as requested for the builtin table,
        the file's own genus for an external one."""
        if self.uses_builtin_expansion():
            return wanted
        return (load_table(self.expansion).genus,)

    def applicable_configs(self, configs) -> list[Configuration]:
        if self.uses_builtin_expansion():
            return list(configs)
        genus = self.genera()[0] if self.genera() else None
        return [c for c in configs if c.g == genus]

    def params_json(self) -> dict:
        return {
            "command": self.command,
            "config": self.config,
            "g": self.g,
            "h": self.h,
            "k1": self.k1,
            "k2": self.k2,
            "trunc": self.trunc,
            "seed": self.seed,
            "trials": self.trials,
            "pairing_sign": self.pairing_sign,
            "expansion": self.expansion,
        }


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    duration: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def _timed(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, details = fn()
    except Exception as exc:  # a crash is a failed check, never a crashed report
        passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
    return CheckResult(name, passed, details, time.perf_counter() - start)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("TWISTKIT_THREADS", "1")))
    except ValueError:
        return 1


# -- the default configuration sweep ----------------------------------------

DEFAULT_CONFIGS: tuple[Configuration, ...] = (
    Configuration("I", g=2),
    Configuration("II-a", g=2, h=2),
    Configuration("II-b", g=2, h=2),
    Configuration("III-a", g=2, h=2),
    Configuration("III-b", g=2, h=2),
    Configuration("IV-a", g=2, k1=1, k2=1, h=0),
    Configuration("IV-b", g=2, k1=1, k2=1, h=0),
)

SPECIAL_H1_CONFIGS: tuple[Configuration, ...] = (
    Configuration("II-a", g=1, h=1),
    Configuration("II-b", g=1, h=1),
)

LARGER_CONFIGS: tuple[Configuration, ...] = (
    Configuration("I", g=3),
    Configuration("II-a", g=3, h=2),
    Configuration("II-b", g=3, h=3),
    Configuration("III-a", g=3, h=2),
    Configuration("III-b", g=3, h=3),
    Configuration("IV-a", g=3, k1=2, k2=1, h=0),
    Configuration("IV-b", g=3, k1=1, k2=1, h=1),
)


def config_from_run(rc: RunConfig) -> Configuration:
    if rc.config is None:
        raise ValueError("this command needs --config")
    g = rc.g if rc.g is not None else 2
    return Configuration(rc.config, g=g, h=rc.h, k1=rc.k1, k2=rc.k2)


# -- frozen expected values ---------------------------------------------------

# Degree-4 row coordinates per configuration, derived from the stated
# expansion values and cross-checked against independent direct expansions
# (see tests).  Keys: (L4x, L4y, M) in the (u1, u2, u3) or
# (N(w1w1), N(w1w2), N(w2w2)) coordinates.
TABLE2_EXPECTED: dict[str, dict[str, tuple]] = {
    "II-a": {
        "L4x": (rational(1, 2), rational(-1, 2), rational(1, 24)),
        "L4y": (rational(0), rational(0), rational(1, 24)),
        "M": (rational(0), rational(1, 2), rational(-1, 12)),
    },
    "II-b": {
        "L4x": (rational(1, 2), rational(-1, 2), rational(1, 24)),
        "L4y": (rational(1, 2), rational(0), rational(0)),
        "M": (rational(-1), rational(1, 2), rational(0)),
    },
    "III-a": {
        "L4x": (rational(1, 2), rational(-1, 2), rational(1, 24)),
        "L4y": (rational(0), rational(0), rational(1, 24)),
        "M": (rational(0), rational(-1, 2), rational(5, 12)),
    },
    "III-b": {
        "L4x": (rational(1, 2), rational(-1, 2), rational(1, 24)),
        "L4y": (rational(1, 2), rational(-1), rational(1, 2)),
        "M": (rational(-1), rational(3, 2), rational(-1, 2)),
    },
    "IV-a": {
        "L4x": (rational(1, 2), rational(0), rational(0)),
        "L4y": (rational(0), rational(0), rational(1, 2)),
        "M": (rational(0), rational(1), rational(0)),
    },
    "IV-b": {
        "L4x": (rational(1, 2), rational(0), rational(0)),
        "L4y": (rational(1, 2), rational(1), rational(1, 2)),
        "M": (rational(-1), rational(-1), rational(0)),
    },
}


def expected_case_one_residual(g: int) -> TensorSeries:
    """-(1/12) N([A1,A2][A1,A2]) in degree 4."""
    a1 = TensorSeries.letter(g, 4, 0)
    a2 = TensorSeries.letter(g, 4, 2)
    bracket = a1.commutator(a2)
    return nmap(bracket * bracket).scale(rational(-1, 12))


def _bracket_sum_series(g: int, trunc: int, start: int, stop: int) -> TensorSeries:
    total = TensorSeries.zero(g, trunc)
    for i in range(start, stop + 1):
        a = TensorSeries.letter(g, trunc, 2 * (i - 1))
        b = TensorSeries.letter(g, trunc, 2 * (i - 1) + 1)
        total = total + a.commutator(b)
    return total


def expected_separating_residual(config: Configuration) -> TensorSeries:
    """The closed-form decisive residual for a separating configuration."""
    g = config.g
    if config.kind in ("II-a", "II-b", "III-a", "III-b"):
        h = config.h
        stop = h if config.kind in ("II-a", "II-b") else h - 1
        b_h = TensorSeries.letter(g, 6, 2 * (h - 1) + 1)
        p = b_h.commutator(_bracket_sum_series(g, 6, 1, stop))
        return nmap(p * p).scale(rational(-1, 12))
    k1, k2 = config.k1, config.k2
    w1 = _bracket_sum_series(g, 8, 1, k1)
    w2 = _bracket_sum_series(g, 8, k1 + 1, k1 + k2)
    q = w1.commutator(w2)
    return nmap(q * q).scale(rational(-1, 12))


# -- individual checks --------------------------------------------------------


def check_bch_ground_truth(rc: RunConfig) -> CheckResult:
    """Low-degree BCH terms against the classical closed form.

    Degrees 2..4 are pinned to the printed coefficients 1/2, 1/12, -1/24;
    the degree-5 part (not printed anywhere) is certified primitive via the
    Dynkin criterion and antisymmetric under (u,v) -> (-v,-u).
    """

    def run():
        trunc = 5
        u = TensorSeries.letter(1, trunc, 0)
        v = TensorSeries.letter(1, trunc, 1)
        z = bch(u, v)
        c = u.commutator(v)
        expected = {
            1: (u + v).degree_part(1),
            2: c.scale(rational(1, 2)).degree_part(2),
            3: (u - v).commutator(c).scale(rational(1, 12)).degree_part(3),
            4: u.commutator(v.commutator(c)).scale(rational(-1, 24)).degree_part(4),
        }
        for degree, want in expected.items():
            if z.degree_part(degree) != want:
                return False, {"mismatch_degree": degree}
        z5 = z.degree_part(5)
        if dynkin_map(z5) != z5.scale(5):
            return False, {"degree5": "not primitive"}
        if bch(-v, -u).degree_part(5) != -z5:
            return False, {"degree5": "antisymmetry failed"}
        return True, {"checked_degrees": [1, 2, 3, 4, 5]}

    return _timed("bch_ground_truth", run)


def check_boundary_condition(rc: RunConfig) -> CheckResult:
    """theta(zeta) = exp(omega) through degree 3 for g in {1, 2, 3}."""

    def run():
        statuses = {}
        for g in rc.genera(1, 2, 3):
            table = rc.load_expansion(g)
            claim = min(3, table.valid_degree)
            statuses[f"g={g}"] = check_boundary(table, claim).value
        ok = all(v == BoundaryStatus.HOLDS.value for v in statuses.values())
        return ok, statuses

    return _timed("check_boundary", run)


def check_magnus_condition(rc: RunConfig) -> CheckResult:
    """Degree-1 part of theta(w) equals the homology class of w."""

    def run():
        rng = Random(rc.seed)
        ok = True
        for g in rc.genera(1, 2):
            table = rc.load_expansion(g)
            words = [parse_group_word("a1 b1", g), zeta_word(g)]
            for _ in range(10):
                words.append(_random_word(rng, g, 6))
            ok = ok and check_magnus_degree_one(table, words)
        return ok, {"words_per_genus": 12}

    return _timed("magnus_condition", run)


def zeta_word(g: int) -> GroupWord:
    from .words import zeta

    return zeta(g)


def _random_word(rng: Random, genus: int, max_len: int) -> GroupWord:
    letters = tuple(
        (rng.randrange(2 * genus), rng.choice((1, -1))) for _ in range(rng.randint(1, max_len))
    )
    return GroupWord(genus, letters)


def check_conjugation_law(rc: RunConfig) -> CheckResult:
    """U (Nv) U^{-1} = N(Uv) for seeded omega-preserving composites at trunc 6."""

    def run():
        trials = rc.trials
        failures = 0
        done = 0
        for index in range(trials):
            g = 1 if index % 2 == 0 else 2
            rng = Random(rc.seed * 100003 + index)
            u = random_ia_omega(g, 6, rng, sign=rc.pairing_sign).compose(
                random_symplectic_linear(g, 6, rng, sign=rc.pairing_sign)
            )
            terms = {}
            for _ in range(2):
                degree = rng.randint(1, 4)
                word = tuple(rng.randrange(2 * g) for _ in range(degree))
                terms[word] = rational(rng.randint(-3, 3), rng.randint(1, 3))
            v = TensorSeries(g, 6, terms)
            if not conjugation_law_check(u, v, rc.pairing_sign):
                failures += 1
            done += 1
        return failures == 0, {"trials": done, "failures": failures, "trunc": 6}

    return _timed("conjugation_law", run)


def check_lemma_suite(rc: RunConfig) -> CheckResult:
    """The degree 2/4/6/8 composition laws on random group-like pairs."""

    def run():
        per_degree = max(50, rc.trials // 2)
        counts = {}
        for degree in (2, 4, 6, 8):
            failures = 0
            for index in range(per_degree):
                rng = Random(rc.seed * 7919 + degree * 1009 + index)
                g = rng.choice((1, 2))
                top = min(rc.trunc, degree) - 1
                if degree == 2:
                    lx = random_lie_series(g, max(1, top), 1, rng.randrange(2**30)).series
                    ly = random_lie_series(g, max(1, top), 1, rng.randrange(2**30)).series
                elif degree == 8:
                    lx = random_lie_series(g, top, 2, rng.randrange(2**30)).series
                    ly = random_lie_series(g, top, 2, rng.randrange(2**30)).series
                else:
                    # commuting degree-1 parts: make l1(y) a rational multiple of l1(x)
                    lx = random_lie_series(g, top, 1, rng.randrange(2**30)).series
                    q = rational(rng.randint(-3, 3), rng.randint(1, 3))
                    ly = lx.degree_part(1).scale(q) + random_lie_series(
                        g, top, 2, rng.randrange(2**30)
                    ).series
                lhs, rhs = L_degree_lemmas(lx, ly, degree)
                if lhs != rhs:
                    failures += 1
            counts[f"degree{degree}"] = {"trials": per_degree, "failures": failures}
        ok = all(v["failures"] == 0 for v in counts.values())
        return ok, counts

    return _timed("lemma_suite", run)


def check_table2_values(rc: RunConfig) -> CheckResult:
    """Exact reproduction of the degree-4 rows at minimal and larger parameters."""

    def run():
        if not rc.uses_builtin_expansion():
            # row coordinates are specific to the builtin expansion data;
            # for external tables verify the internal consistency instead
            return _table2_consistency(rc)
        mismatches = []
        for config in list(DEFAULT_CONFIGS[1:]) + [
            c for c in LARGER_CONFIGS if c.kind != "I"
        ]:
            row = table2(config)
            expected = TABLE2_EXPECTED[config.kind]
            for key in ("L4x", "L4y", "M"):
                if tuple(row.coords[key]) != expected[key]:
                    mismatches.append(
                        {
                            "config": config.label(),
                            "entry": key,
                            "got": [str(c) for c in row.coords[key]],
                            "want": [str(c) for c in expected[key]],
                        }
                    )
        return not mismatches, {
            "rows_checked": 12,
            "mismatches": mismatches,
        }

    return _timed("table2", run)


def _table2_consistency(rc: RunConfig):
    checked = 0
    for config in rc.applicable_configs(DEFAULT_CONFIGS[1:]):
        table = rc.load_expansion(config.g)
        if table.valid_degree < 3:
            return False, {"error": "expansion data below degree 3"}
        row = table2(config, table)
        x, y = config_xy(config)
        l4xy = L(table, concat(x, y), 4).tensor.degree_part(4)
        if l4xy != row.L4x + row.L4y + row.M:
            return False, {"config": config.label(), "error": "M inconsistent"}
        checked += 1
    return True, {"rows_checked": checked, "mode": "consistency"}


def check_probe_matrix(rc: RunConfig) -> CheckResult:
    """Coefficient probes of the independence family at h = 2."""

    def run():
        g = h = 2
        u_family = []
        omega_h = _bracket_sum_series(g, 4, 1, h)
        c_h = _bracket_sum_series(g, 4, h, h)
        for left, right in ((omega_h, omega_h), (omega_h, c_h), (c_h, c_h)):
            u_family.append(nmap(left * right))
        probes = [
            (0, 1, 0, 1),  # A1 B1 A1 B1
            (0, 1, 2, 3),  # A1 B1 A2 B2
            (2, 3, 2, 3),  # A2 B2 A2 B2
        ]
        matrix = independence_matrix(u_family, probes)
        expected = [
            [rational(4), rational(0), rational(0)],
            [rational(2), rational(1), rational(0)],
            [rational(4), rational(4), rational(4)],
        ]
        got = [[v for v in row] for row in matrix]
        rank = matrix_rank(matrix)
        ok = got == expected and rank == 3
        return ok, {
            "matrix": [[str(v) for v in row] for row in got],
            "rank": rank,
        }

    return _timed("probe_matrix", run)


def check_coefficients(rc: RunConfig) -> CheckResult:
    """(2, 2, -1) for every configuration; constraint sets for the h = 1 cases."""

    def run():
        sweep = rc.applicable_configs(
            list(DEFAULT_CONFIGS) + list(SPECIAL_H1_CONFIGS) + list(LARGER_CONFIGS)
        )
        results = {}
        ok = bool(sweep)
        for config in sweep:
            table = rc.load_expansion(config.g)
            solution = solve_coefficients(config, table)
            results[config.label()] = {
                "m": list(solution.m) if solution.m else None,
                "constraints": list(solution.constraints),
            }
            if solution.m != (2, 2, -1) or not solution.consistent:
                ok = False
        want_a = {"m1 + m2 = 4", "m3 = -1"}
        want_b = {"m1 + m3 = 1", "m2 = 2"}
        if "II-a(g=1, h=1)" in results and set(results["II-a(g=1, h=1)"]["constraints"]) != want_a:
            ok = False
        if "II-b(g=1, h=1)" in results and set(results["II-b(g=1, h=1)"]["constraints"]) != want_b:
            ok = False
        return ok, results

    return _timed("coefficients", run)


def check_residuals(rc: RunConfig) -> CheckResult:
    """Nonzero decisive residuals for all seven configurations, with exact values."""

    def run():
        def one(config: Configuration) -> dict:
            table = rc.load_expansion(config.g)
            report = contradiction_residual(config, table)
            decisive_degree = {"I": 4}.get(
                config.kind, 8 if config.kind.startswith("IV") else 6
            )
            decisive = next(
                (r for r in report.residuals if r.degree == decisive_degree), None
            )
            entry = {
                "verdict": report.verdict,
                "nonzero_degree": report.nonzero_degree,
                "expected_degree": decisive_degree,
                "value_matches_closed_form": None,
            }
            if decisive is not None:
                expected = (
                    expected_case_one_residual(config.g)
                    if config.kind == "I"
                    else expected_separating_residual(config)
                )
                entry["value_matches_closed_form"] = decisive.tensor == expected
            return entry

        cap = thread_cap()
        configs = rc.applicable_configs(DEFAULT_CONFIGS)
        if cap > 1:
            with ThreadPoolExecutor(max_workers=cap) as pool:
                computed = list(pool.map(one, configs))
        else:
            computed = [one(c) for c in configs]
        results = {c.label(): entry for c, entry in zip(configs, computed)}
        ok = bool(results) and all(
            entry["verdict"] == "not a mapping class"
            and entry["nonzero_degree"] == entry["expected_degree"]
            and entry["value_matches_closed_form"] is True
            for entry in results.values()
        )
        return ok, results

    return _timed("residuals", run)


def check_calibration(rc: RunConfig) -> CheckResult:
    """Exactly one twist convention survives and acts as the right transvection."""

    def run():
        genus = rc.genera(2)[0]
        table = rc.load_expansion(genus)
        # degree-2 comparison must already isolate a single survivor
        coarse = calibrate_twist_convention(table, rc.pairing_sign, through_degree=2)
        fine = calibrate_twist_convention(table, rc.pairing_sign, through_degree=3)
        details = {}
        ok = True
        for curve in ("a1", "b1"):
            if coarse[curve].image_word != fine[curve].image_word:
                ok = False
            word = fine[curve].image_word
            matrix = fine[curve].homology_matrix
            # expected transvection: the transverse letter gains +-(pairing) times the curve letter
            curve_code = parse_group_word(curve, genus).letters[0][0]
            transverse_code = parse_group_word(
                fine[curve].transverse_generator, genus
            ).letters[0][0]
            from .symplectic import intersection

            expected_gain = -intersection(transverse_code, curve_code, rc.pairing_sign)
            if matrix[curve_code][transverse_code] != expected_gain:
                ok = False
            details[curve] = {
                "image": word.render(),
                "homology_gain": str(matrix[curve_code][transverse_code]),
            }
        return ok, details

    return _timed("calibration", run)


def check_nmap_identities(rc: RunConfig) -> CheckResult:
    """N(uv) = N(vu) and N([u,v]w) = N(u[v,w]) on random series."""

    def run():
        failures = 0
        for index in range(rc.trials):
            rng = Random(rc.seed * 37 + index)
            g = rng.choice((1, 2))
            trunc = rng.randint(3, min(6, rc.trunc))
            u = _random_series(rng, g, trunc)
            v = _random_series(rng, g, trunc)
            w = _random_series(rng, g, trunc)
            if nmap(u * v) != nmap(v * u):
                failures += 1
            elif nmap(u.commutator(v) * w) != nmap(u * v.commutator(w)):
                failures += 1
        return failures == 0, {"trials": rc.trials, "failures": failures}

    return _timed("nmap_identities", run)


def _random_series(rng: Random, genus: int, trunc: int, words: int = 3) -> TensorSeries:
    terms = {}
    for _ in range(words):
        degree = rng.randint(0, trunc)
        word = tuple(rng.randrange(2 * genus) for _ in range(degree))
        terms[word] = terms.get(word, rational(0)) + rational(
            rng.randint(-4, 4), rng.randint(1, 4)
        )
    return TensorSeries(genus, trunc, terms)


def check_exp_log(rc: RunConfig) -> CheckResult:
    """log(exp(v)) = v and exp(log(1 + u)) = 1 + u on random series."""

    def run():
        failures = 0
        for index in range(rc.trials):
            rng = Random(rc.seed * 53 + index)
            g = rng.choice((1, 2))
            trunc = rng.randint(2, min(8, rc.trunc))
            v = _random_series(rng, g, trunc)
            v = v - v.degree_part(0)
            if tlog(texp(v)) != v:
                failures += 1
                continue
            one_plus = TensorSeries.unit(g, trunc) + v
            if texp(tlog(one_plus)) != one_plus:
                failures += 1
        return failures == 0, {"trials": rc.trials, "failures": failures}

    return _timed("exp_log_inverse", run)


def check_l_invariance(rc: RunConfig) -> CheckResult:
    """L(x^{-1}) = L(x) and L(y x y^{-1}) = L(x) on random words."""

    def run():
        failures = 0
        genera = rc.genera(1, 2)
        for index in range(rc.trials):
            rng = Random(rc.seed * 71 + index)
            g = rng.choice(genera)
            table = rc.load_expansion(g)
            trunc = min(4, table.valid_degree + 1)
            x = _random_word(rng, g, 5)
            y = _random_word(rng, g, 4)
            lx = L(table, x, trunc).tensor
            if L(table, invert(x), trunc).tensor != lx:
                failures += 1
                continue
            conjugated = concat(concat(y, x), invert(y))
            if L(table, conjugated, trunc).tensor != lx:
                failures += 1
        return failures == 0, {"trials": rc.trials, "failures": failures}

    return _timed("l_invariance", run)


def check_power_law(rc: RunConfig) -> CheckResult:
    """L(x^m) = m^2 L(x) on random words and exponents."""

    def run():
        failures = 0
        genera = rc.genera(1, 2)
        for index in range(rc.trials):
            rng = Random(rc.seed * 89 + index)
            g = rng.choice(genera)
            table = rc.load_expansion(g)
            trunc = min(4, table.valid_degree + 1)
            x = _random_word(rng, g, 4)
            m = rng.choice((-2, -1, 2, 3))
            if not twist_power_check(table, x, m, trunc):
                failures += 1
        return failures == 0, {"trials": rc.trials, "failures": failures}

    return _timed("power_law", run)


def check_expansion_independence(rc: RunConfig) -> CheckResult:
    """The conjugation law for L under random omega-preserving perturbations."""

    def run():
        failures = 0
        genera = rc.genera(1, 2)
        for index in range(rc.trials):
            rng = Random(rc.seed * 97 + index)
            g = rng.choice(genera)
            trunc = 4 if index % 3 else 5
            word = _random_word(rng, g, 4)
            table = rc.load_expansion(g) if trunc <= 4 else None
            if not expansion_independence_check(
                word, rc.seed * 97 + index, trunc, table=table, sign=rc.pairing_sign
            ):
                failures += 1
        return failures == 0, {"trials": rc.trials, "failures": failures}

    return _timed("expansion_independence", run)


def check_log_primitivity(rc: RunConfig) -> CheckResult:
    """Stored generator logs pass the per-degree Dynkin criterion."""

    def run():
        ok = True
        genera = rc.genera(1, 2, 3)
        for g in genera:
            table = rc.load_expansion(g)
            for series in table.ell_values.values():
                if not is_lie_element(series):
                    ok = False
        return ok, {"genera": list(genera)}

    return _timed("log_primitivity", run)


ALL_CHECKS = (
    check_bch_ground_truth,
    check_boundary_condition,
    check_magnus_condition,
    check_conjugation_law,
    check_lemma_suite,
    check_table2_values,
    check_probe_matrix,
    check_coefficients,
    check_residuals,
    check_calibration,
    check_nmap_identities,
    check_exp_log,
    check_l_invariance,
    check_power_law,
    check_expansion_independence,
    check_log_primitivity,
)


def verify_all(rc: RunConfig) -> list[CheckResult]:
    fns = [(fn.__name__, fn) for fn in ALL_CHECKS]
    cap = thread_cap()
    if cap > 1:
        with ThreadPoolExecutor(max_workers=cap) as pool:
            results = list(pool.map(lambda f: f[1](rc), fns))
    else:
        results = [fn(rc) for _, fn in fns]
    return sorted(results, key=lambda r: r.name)
