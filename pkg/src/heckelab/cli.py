"""Command-line verification frontend.

Each subcommand wraps one library suite, parses all numeric input
exactly (integers or "p/q" strings, never floats), and prints a report
in text or JSON form.  Reports share one shape: a suite name, a list
of named checks with status PASS / FAIL / SKIPPED (FAIL always carries
a witness payload), optional suite data, and a wall time.  The process
exits 0 exactly when no check failed, 2 on configuration errors.

Input schemas (also documented in the README):
  datum        registry name (a1, a2, a3, b2, b3, c2, c3, g2, gl1,
               gl2, gl3, gl4) or a JSON file, either
               {"cartan": [[2,-1],[-1,2]], "central_rank": 0,
                "label": "A2"} or {"general_linear": 3}
  x            comma-separated rationals, e.g. "1/2,0,0"
  theta        comma-separated 0-based simple-root indices, e.g. "1"
  partition    0-based row blocks separated by "|", e.g. "0|1,2"
  catalog      "builtin" or a JSON file in the shipped catalog format
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Any, Callable, Sequence

from .apartment import (
    classify_point,
    filtration_profile,
    heart_condition1_check,
    in_base_alcove_closure,
)
from .catalog import build_catalog, evaluate_catalog, read_catalog, write_catalog
from .iwahori_hecke import BernsteinAlgebra, satake_check
from .padic_groups import (
    block_of,
    brute_point_count,
    conjugacy_obstruction,
    conjugate_by_permutation,
    from_filtration,
    intersect_levi,
    iwahori_factorization_check,
    iwahori_scheme,
    log_volume,
    point_count,
    scheme,
)
from .root_datum import (
    RootDatum,
    WeylGroup,
    cartan_matrix,
    datum_from_cartan,
    datum_general_linear,
)
from .torus_center import (
    invariant_dimension,
    orbits,
    roc_decomposition_check,
    stabilizer_Wchi,
)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

# enumeration guards: requests above these sizes are refused up front
# with an explicit cap error instead of grinding or exhausting memory
MAX_TORUS_PAIRS = 50_000
MAX_TORUS_KERNEL_PAIRS = 1_200
MAX_HECKE_LABELS = 350
MAX_CATALOG_GROUP_ORDER = 4_096


class CLIError(Exception):
    """Configuration or input-file problem; maps to exit code 2."""


# ---------------------------------------------------------------------------
# exact input parsing
# ---------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Q:
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise CLIError(f"not an exact rational (use p/q or an integer): {text!r}")
    return Q(token)


def parse_rational_vector(text: str) -> tuple[Q, ...]:
    parts = [p for p in text.split(",") if p.strip() != ""]
    if not parts:
        raise CLIError(f"empty coordinate list: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def parse_index_list(text: str) -> tuple[int, ...]:
    out = []
    for p in text.split(","):
        p = p.strip()
        if p == "":
            continue
        if not p.isdigit():
            raise CLIError(f"indices must be non-negative integers: {text!r}")
        out.append(int(p))
    return tuple(sorted(set(out)))


def parse_partition(text: str) -> tuple[tuple[int, ...], ...]:
    blocks = []
    for chunk in text.split("|"):
        block = parse_index_list(chunk)
        if not block:
            raise CLIError(f"empty block in partition: {text!r}")
        blocks.append(block)
    if not blocks:
        raise CLIError(f"empty partition: {text!r}")
    return tuple(blocks)


# ---------------------------------------------------------------------------
# datum registry and file loading
# ---------------------------------------------------------------------------

def _registry() -> dict[str, Callable[[], RootDatum]]:
    reg: dict[str, Callable[[], RootDatum]] = {
        "gl1": lambda: datum_from_cartan([], central_rank=1, label="GL1"),
        "gl2": lambda: datum_general_linear(2),
        "gl3": lambda: datum_general_linear(3),
        "gl4": lambda: datum_general_linear(4),
    }
    for kind, rank in (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3),
                       ("C", 2), ("C", 3), ("G", 2)):
        name = f"{kind.lower()}{rank}"
        reg[name] = (lambda k=kind, n=rank:
                     datum_from_cartan(cartan_matrix(k, n), label=f"{k}{n}"))
    return reg


def load_datum(source: str) -> RootDatum:
    reg = _registry()
    key = source.lower()
    if key in reg:
        return reg[key]()
    if not os.path.exists(source):
        names = ", ".join(sorted(reg))
        raise CLIError(f"unknown datum {source!r}; registry names are {names}, "
                       f"or pass a JSON file path")
    try:
        with open(source) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CLIError(f"{source}: invalid JSON at line {exc.lineno} "
                       f"column {exc.colno}") from exc
    try:
        if "general_linear" in data:
            return datum_general_linear(int(data["general_linear"]))
        return datum_from_cartan(data["cartan"],
                                 central_rank=int(data.get("central_rank", 0)),
                                 label=str(data.get("label", "custom")))
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError(f"{source}: bad datum description: {exc}") from exc


def load_models(source: str):
    if source == "builtin":
        return build_catalog()
    try:
        models = read_catalog(source)
    except FileNotFoundError as exc:
        raise CLIError(f"catalog file not found: {source}") from exc
    except json.JSONDecodeError as exc:
        raise CLIError(f"{source}: invalid JSON at line {exc.lineno} "
                       f"column {exc.colno}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError(f"{source}: bad catalog entry: {exc}") from exc
    for m in models:
        if m.group.order > MAX_CATALOG_GROUP_ORDER:
            raise CLIError(f"catalog entry {m.name!r} has group order "
                           f"{m.group.order}; cap is {MAX_CATALOG_GROUP_ORDER}")
    return models


# ---------------------------------------------------------------------------
# report structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str
    witness: dict | None = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("FAIL requires a witness")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[CheckRecord, ...]
    data: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def counts(self) -> tuple[int, int, int]:
        ps = sum(1 for c in self.checks if c.status == PASS)
        fs = sum(1 for c in self.checks if c.status == FAIL)
        ss = sum(1 for c in self.checks if c.status == SKIPPED)
        return ps, fs, ss

    @property
    def exit_code(self) -> int:
        return 1 if any(c.status == FAIL for c in self.checks) else 0


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    datum: str | None = None
    x: tuple[Q, ...] | None = None
    r: Q | None = None
    q: str = "symbolic"
    field_size: int | None = None
    radius: int | None = None
    theta: tuple[int, ...] | None = None
    partition: tuple[tuple[int, ...], ...] | None = None
    convention: str = "upper"
    require_exhaustive: bool = False
    catalog: str = "builtin"
    check: str = "all"
    jobs: int = 1
    quick: bool = False
    emit_catalog: str | None = None
    output_format: str = "text"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Q):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        ps, fs, ss = report.counts
        payload = {
            "suite": report.suite,
            "checks": [{"name": c.name, "status": c.status,
                        "witness": _jsonable(c.witness)}
                       for c in report.checks],
            "data": _jsonable(report.data),
            "summary": {"passed": ps, "failed": fs, "skipped": ss},
            "wall_time_s": round(report.wall_time_s, 6),
        }
        return json.dumps(payload, indent=2, ensure_ascii=False)
    lines = [f"suite: {report.suite}"]
    for c in report.checks:
        lines.append(f"{c.status:7s} {c.name}")
        if c.status != PASS and c.witness:
            packed = json.dumps(_jsonable(c.witness), ensure_ascii=False)
            lines.append(f"        witness: {packed}")
    for key in ("verdict", "obstruction", "dimension", "center_dimension"):
        if key in report.data:
            lines.append(f"{key}: {report.data[key]}")
    if "basis" in report.data:
        labels = ", ".join(t["label"] for t in report.data["basis"])
        lines.append(f"basis: {{{labels}}}")
    ps, fs, ss = report.counts
    lines.append(f"summary: {ps} passed, {fs} failed, {ss} skipped "
                 f"({report.wall_time_s:.2f}s)")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# shared math plumbing
# ---------------------------------------------------------------------------

def _bounds_list(K) -> list[list[int | None]]:
    return [list(row) for row in K.bounds]


def _point_str(x: Sequence[Q]) -> list[str]:
    return [str(Q(c)) for c in x]


def _theta_blocks(n: int, theta: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Partition of matrix rows 0..n-1 merging i with i+1 for each
    simple index i in theta (general-linear simple roots are adjacent
    coordinate differences)."""
    blocks: list[list[int]] = [[0]]
    for i in range(1, n):
        if (i - 1) in theta:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return tuple(tuple(b) for b in blocks)


def _weyl_word(w) -> list[int]:
    return list(w.word)


def _escalate_mismatch(datum: RootDatum, group: WeylGroup, x, r,
                       theta: Sequence[int], witnesses) -> dict:
    """Upgrade a threshold mismatch to a volume obstruction: build the
    integral models at x and at the mismatching Weyl image, cut to the
    theta Levi blocks, and compare block volumes.  DISTINCT_VOLUME on
    any block proves the Levi intersections are not Levi-conjugate."""
    if not datum.label.startswith("GL"):
        return {"status": SKIPPED,
                "reason": "no integral matrix model for this datum"}
    blocks = _theta_blocks(datum.ambient_rank, theta)
    try:
        base = from_filtration(filtration_profile(datum, x, r))
    except ValueError as exc:
        return {"status": SKIPPED, "reason": str(exc)}
    base_levi = intersect_levi(base, blocks)
    per_image = []
    proven = False
    for w2 in sorted({w.cochar_mat for w in (wit.w2 for wit in witnesses)},
                     key=str):
        w = next(wit.w2 for wit in witnesses if wit.w2.cochar_mat == w2)
        image = group.act_cocharacter(w, x)
        try:
            moved = from_filtration(filtration_profile(datum, image, r))
        except ValueError as exc:
            per_image.append({"weyl_word": _weyl_word(w), "status": SKIPPED,
                              "reason": str(exc)})
            continue
        moved_levi = intersect_levi(moved, blocks)
        block_verdicts = []
        for b in blocks:
            verdict = conjugacy_obstruction(block_of(base_levi, b),
                                            block_of(moved_levi, b))
            block_verdicts.append({"block": list(b), "obstruction": verdict})
            if verdict == "DISTINCT_VOLUME":
                proven = True
        per_image.append({
            "weyl_word": _weyl_word(w),
            "levi_intersection_at_x": _bounds_list(base_levi),
            "levi_intersection_at_image": _bounds_list(moved_levi),
            "blocks": block_verdicts,
        })
    out = {
        "status": "DISTINCT_VOLUME" if proven else "INCONCLUSIVE",
        "route": "levi-volume-comparison",
        "images": per_image,
    }
    if proven:
        out["verdict"] = f"G_{{x,{r}}} ∉ K^♥(S,G)"
    return out


# ---------------------------------------------------------------------------
# subcommand: rootdatum
# ---------------------------------------------------------------------------

def _run_rootdatum(config: RunConfig) -> VerificationReport:
    datum = load_datum(config.datum)
    group = WeylGroup(datum)
    checks = []

    bad_pairs = [k for k in range(len(datum.roots))
                 if datum.pairing(datum.roots[k], datum.coroots[k]) != 2]
    checks.append(CheckRecord(
        "root-coroot-pairing-two",
        PASS if not bad_pairs else FAIL,
        None if not bad_pairs else {"root_indices": bad_pairs}))

    root_set = set(datum.roots)
    broken = []
    for i_pos, i in enumerate(datum.simple):
        s = group.simple_reflection(i_pos)
        for a in datum.roots:
            if group.act_character(s, a) not in root_set:
                broken.append({"simple": i_pos, "root": list(a)})
    checks.append(CheckRecord(
        "reflection-closure",
        PASS if not broken else FAIL,
        None if not broken else {"escaped": broken}))

    cartan = [[int(datum.pairing(datum.roots[sj], datum.coroots[si]))
               for sj in datum.simple] for si in datum.simple]
    data = {
        "label": datum.label,
        "ambient_rank": datum.ambient_rank,
        "semisimple_rank": datum.semisimple_rank,
        "root_count": len(datum.roots),
        "roots": [list(a) for a in datum.roots],
        "coroots": [list(a) for a in datum.coroots],
        "simple_indices": list(datum.simple),
        "cartan_matrix": cartan,
        "weyl_order": len(group),
        "fundamental_coweights": [[str(c) for c in w]
                                  for w in datum.fundamental_coweights()],
    }
    return VerificationReport("rootdatum", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: heart-check
# ---------------------------------------------------------------------------

def _run_heart_check(config: RunConfig) -> VerificationReport:
    datum = load_datum(config.datum)
    group = WeylGroup(datum)
    x, r = config.x, config.r
    if x is None or r is None:
        raise CLIError("heart-check needs --x and --r")
    if len(x) != datum.ambient_rank:
        raise CLIError(f"--x needs {datum.ambient_rank} coordinates "
                       f"for datum {datum.label}")
    if r <= 0:
        raise CLIError("--r must be positive")
    m = datum.semisimple_rank
    if config.theta is not None:
        if any(t >= m for t in config.theta):
            raise CLIError(f"theta indices must be < {m}")
        subsets = [config.theta]
    else:
        subsets = [tuple(c) for size in range(m + 1)
                   for c in itertools.combinations(range(m), size)]

    checks = []
    data: dict[str, Any] = {
        "datum": datum.label,
        "x": _point_str(x),
        "r": str(r),
        "point_kind": classify_point(datum, x).kind,
    }
    proven_all = True
    for theta in subsets:
        verdict = heart_condition1_check(datum, group, x, r, theta)
        name = f"condition-1 theta={list(theta)}"
        if verdict.proven:
            checks.append(CheckRecord(name, PASS))
            continue
        proven_all = False
        witness = {
            "status": verdict.status,
            "mismatches": [{
                "weyl_word": _weyl_word(w.w2),
                "root": list(w.root),
                "threshold_at_x": w.threshold_at_x,
                "threshold_at_image": w.threshold_at_image,
            } for w in verdict.witnesses],
            "escalation": _escalate_mismatch(datum, group, x, r, theta,
                                             verdict.witnesses),
        }
        checks.append(CheckRecord(name, FAIL, witness))
        esc = witness["escalation"]
        if esc.get("status") == "DISTINCT_VOLUME":
            data["obstruction"] = "DISTINCT_VOLUME"
            data["verdict"] = esc["verdict"]
    if proven_all:
        data["verdict"] = "PROVEN_CONDITION_1"
    return VerificationReport("heart-check", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: counterexample
# ---------------------------------------------------------------------------

# hand evaluation of ceil(r - a(x)) at x = (1/2, 0, 0), r = 1, for the
# nine general-linear bound slots, and of the two Levi restrictions
_EXPECTED_GROUP = ((1, 1, 1), (2, 1, 1), (2, 1, 1))
_EXPECTED_CONJ = ((1, 2, 1), (1, 1, 1), (1, 2, 1))
_EXPECTED_LEVI = ((1, None, None), (None, 1, 1), (None, 1, 1))
_EXPECTED_CONJ_LEVI = ((1, None, None), (None, 1, 1), (None, 2, 1))


def _run_counterexample(config: RunConfig) -> VerificationReport:
    if config.q != "symbolic":
        raise CLIError("--q supports only 'symbolic'")
    datum = datum_general_linear(3)
    group = WeylGroup(datum)
    x = (Q(1, 2), Q(0), Q(0))
    r = Q(1)
    theta = (1,)
    blocks = ((0,), (1, 2))
    checks = []

    base = from_filtration(filtration_profile(datum, x, r))
    checks.append(CheckRecord(
        "filtration-group-matrix",
        PASS if base.bounds == _EXPECTED_GROUP else FAIL,
        None if base.bounds == _EXPECTED_GROUP
        else {"computed": _bounds_list(base)}))

    # route 1: permutation conjugation; route 2: reflected point
    swapped = conjugate_by_permutation(base, (1, 0, 2))
    s0 = group.simple_reflection(0)
    reflected = from_filtration(
        filtration_profile(datum, group.act_cocharacter(s0, x), r))
    agree = swapped.bounds == reflected.bounds
    checks.append(CheckRecord(
        "conjugation-route-agreement",
        PASS if agree else FAIL,
        None if agree else {"permutation_route": _bounds_list(swapped),
                            "reflection_route": _bounds_list(reflected)}))
    checks.append(CheckRecord(
        "conjugated-group-matrix",
        PASS if swapped.bounds == _EXPECTED_CONJ else FAIL,
        None if swapped.bounds == _EXPECTED_CONJ
        else {"computed": _bounds_list(swapped)}))

    levi = intersect_levi(base, blocks)
    conj_levi = intersect_levi(swapped, blocks)
    checks.append(CheckRecord(
        "levi-intersection-matrix",
        PASS if levi.bounds == _EXPECTED_LEVI else FAIL,
        None if levi.bounds == _EXPECTED_LEVI
        else {"computed": _bounds_list(levi)}))
    checks.append(CheckRecord(
        "conjugated-levi-intersection-matrix",
        PASS if conj_levi.bounds == _EXPECTED_CONJ_LEVI else FAIL,
        None if conj_levi.bounds == _EXPECTED_CONJ_LEVI
        else {"computed": _bounds_list(conj_levi)}))

    # the 2x2 blocks: principal congruence group vs pro-unipotent radical
    principal = block_of(levi, (1, 2))
    pro_unipotent = block_of(conj_levi, (1, 2))
    iwahori = iwahori_scheme(2)
    vol_k = log_volume(principal, iwahori)
    vol_i = log_volume(pro_unipotent, iwahori)
    checks.append(CheckRecord(
        "index-principal-congruence",
        PASS if str(vol_k) == "q*(q-1)^2" else FAIL,
        None if str(vol_k) == "q*(q-1)^2" else {"computed": str(vol_k)}))
    checks.append(CheckRecord(
        "index-pro-unipotent",
        PASS if str(vol_i) == "q^2*(q-1)^2" else FAIL,
        None if str(vol_i) == "q^2*(q-1)^2" else {"computed": str(vol_i)}))

    count_rows = []
    for p in (2, 3):
        whole = brute_point_count(iwahori, p, 2)
        small = brute_point_count(principal, p, 2)
        tiny = brute_point_count(pro_unipotent, p, 2)
        ratio_k, rem_k = divmod(whole, small)
        ratio_i, rem_i = divmod(whole, tiny)
        ok = (rem_k == 0 and rem_i == 0
              and ratio_k == p * (p - 1) ** 2
              and ratio_i == p ** 2 * (p - 1) ** 2
              and whole == point_count(iwahori, p, 2))
        row = {"p": p, "iwahori_points": whole,
               "principal_index": ratio_k, "pro_unipotent_index": ratio_i}
        count_rows.append(row)
        checks.append(CheckRecord(f"point-count-cross-check-p{p}",
                                  PASS if ok else FAIL,
                                  None if ok else row))

    verdict = heart_condition1_check(datum, group, x, r, theta)
    checks.append(CheckRecord(
        "threshold-mismatch-reproduced",
        PASS if verdict.status == "MISMATCH" else FAIL,
        None if verdict.status == "MISMATCH"
        else {"status": verdict.status}))

    obstruction = conjugacy_obstruction(principal, pro_unipotent)
    checks.append(CheckRecord(
        "volume-obstruction",
        PASS if obstruction == "DISTINCT_VOLUME" else FAIL,
        None if obstruction == "DISTINCT_VOLUME"
        else {"obstruction": obstruction}))

    failed = any(c.status == FAIL for c in checks)
    data = {
        "datum": "GL3",
        "x": _point_str(x),
        "r": str(r),
        "theta": list(theta),
        "reflection_word": _weyl_word(s0),
        "permutation": [1, 0, 2],
        "matrices": {
            "filtration_group": _bounds_list(base),
            "conjugated_group": _bounds_list(swapped),
            "levi_intersection": _bounds_list(levi),
            "conjugated_levi_intersection": _bounds_list(conj_levi),
        },
        "indices": {
            "principal_congruence_in_iwahori": str(vol_k),
            "pro_unipotent_in_iwahori": str(vol_i),
        },
        "point_counts": count_rows,
        "obstruction": obstruction,
    }
    if not failed:
        data["verdict"] = f"G_{{x,{r}}} ∉ K^♥(S,G)"
    return VerificationReport("counterexample", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: spade-check
# ---------------------------------------------------------------------------

def _standard_partitions(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All contiguous block partitions of 0..n-1 with at least two
    blocks (proper standard parabolics)."""
    out = []
    for cuts in itertools.chain.from_iterable(
            itertools.combinations(range(1, n), k) for k in range(1, n)):
        edges = (0,) + cuts + (n,)
        out.append(tuple(tuple(range(edges[i], edges[i + 1]))
                         for i in range(len(edges) - 1)))
    return out


def _run_spade_check(config: RunConfig) -> VerificationReport:
    datum = load_datum(config.datum)
    x, r = config.x, config.r
    if x is None or r is None:
        raise CLIError("spade-check needs --x and --r")
    if not datum.label.startswith("GL"):
        raise CLIError("spade-check needs a general-linear datum "
                       "(integral matrix model required)")
    if len(x) != datum.ambient_rank:
        raise CLIError(f"--x needs {datum.ambient_rank} coordinates")
    if r <= 0:
        raise CLIError("--r must be positive")
    n = datum.ambient_rank
    K = from_filtration(filtration_profile(datum, x, r))
    if config.partition is not None:
        flat = sorted(i for b in config.partition for i in b)
        if flat != list(range(n)):
            raise CLIError(f"partition must cover rows 0..{n - 1} once")
        partitions = [config.partition]
    else:
        partitions = _standard_partitions(n)

    checks = []
    rows = []
    for blocks in partitions:
        rep = iwahori_factorization_check(K, blocks,
                                          convention=config.convention)
        label = "|".join(",".join(str(i) for i in b) for b in blocks)
        good = rep.fully_verified if config.require_exhaustive else rep.passed
        witness = {
            "analytic_match": rep.analytic_match,
            "exhaustive": [[p, v] for p, v in rep.exhaustive],
            "flags": list(rep.flags),
        }
        rows.append({"partition": [list(b) for b in blocks], **witness})
        checks.append(CheckRecord(f"factorization blocks={label}",
                                  PASS if good else FAIL,
                                  None if good else witness))
    data = {
        "datum": datum.label,
        "x": _point_str(x),
        "r": str(r),
        "bounds": _bounds_list(K),
        "convention": config.convention,
        "partitions": rows,
    }
    return VerificationReport("spade-check", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: clifford
# ---------------------------------------------------------------------------

def _clifford_checks(results, mode: str) -> list[CheckRecord]:
    checks = []
    for res in results:
        name = f"entry {res.name}"
        if res.skipped:
            checks.append(CheckRecord(
                name, SKIPPED,
                {"hypothesis_failures": list(res.transfer.failures)}))
            continue
        if mode == "transfer":
            good = res.transfer.equal is True
        elif mode == "center":
            good = res.center.equal is True
        elif mode == "commutativity":
            good = res.commutativity.coincide is True
        else:
            good = res.passed
        checks.append(CheckRecord(name, PASS if good else FAIL,
                                  None if good else res.to_dict()))
    return checks


def _run_clifford(config: RunConfig) -> VerificationReport:
    if config.emit_catalog is not None:
        write_catalog(config.emit_catalog)
        n = len(build_catalog())
        return VerificationReport(
            "clifford",
            (CheckRecord("catalog-written", PASS),),
            {"path": config.emit_catalog, "entries": n})
    models = load_models(config.catalog)
    if config.quick:
        models = [m for m in models if m.group.order <= 32]
    results = evaluate_catalog(models, jobs=config.jobs)
    checks = _clifford_checks(results, config.check)
    data = {
        "catalog": config.catalog,
        "mode": config.check,
        "entries": [res.to_dict() for res in results],
    }
    return VerificationReport("clifford", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: torus-center
# ---------------------------------------------------------------------------

def _run_torus_center(config: RunConfig) -> VerificationReport:
    datum = load_datum(config.datum)
    q, radius = config.field_size, config.radius
    if q is None or radius is None:
        raise CLIError("torus-center needs --q and --radius")
    if radius < 0:
        raise CLIError("--radius must be >= 0")
    rank = datum.ambient_rank
    pairs = (max(q - 1, 1) ** rank) * ((2 * radius + 1) ** rank)
    if pairs > MAX_TORUS_PAIRS:
        raise CLIError(f"requested truncation enumerates about {pairs} "
                       f"lattice-character pairs; cap is {MAX_TORUS_PAIRS}")
    if config.check in ("dimension", "all") and pairs > MAX_TORUS_KERNEL_PAIRS:
        raise CLIError(f"the kernel dimension route handles at most "
                       f"{MAX_TORUS_KERNEL_PAIRS} pairs ({pairs} requested); "
                       f"rerun with --check roc")
    try:
        orbit_list = orbits(datum, q, radius)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc

    checks = []
    orbit_rows = []
    for idx, osum in enumerate(orbit_list):
        lam0, chi0 = osum.orbit[0]
        row = {
            "representative": {"coweight": list(lam0),
                               "character": list(chi0.components)},
            "size": len(osum.orbit),
            "members": [{"coweight": list(lam), "character": list(ch.components)}
                        for lam, ch in osum.orbit],
            "stabilizer_order": len(stabilizer_Wchi(datum, chi0)),
        }
        if config.check in ("roc", "all"):
            rep = roc_decomposition_check(datum, q, osum)
            row["blocks"] = {
                "characters": [list(c.components)
                               for c in rep.block_characters],
                "sizes": list(rep.block_sizes),
            }
            checks.append(CheckRecord(
                f"orbit-{idx}-block-decomposition",
                PASS if rep.ok else FAIL,
                None if rep.ok else {"failures": list(rep.failures),
                                     "representative": row["representative"]}))
        orbit_rows.append(row)

    data = {
        "datum": datum.label,
        "q": q,
        "radius": radius,
        "orbit_count": len(orbit_list),
        "orbits": orbit_rows,
    }
    if config.check in ("dimension", "all"):
        try:
            dim = invariant_dimension(datum, q, radius)
            checks.append(CheckRecord("invariant-dimension-three-way", PASS))
            data["dimension"] = dim
        except AssertionError as exc:
            checks.append(CheckRecord("invariant-dimension-three-way", FAIL,
                                      {"error": str(exc)}))
    return VerificationReport("torus-center", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: iwahori-center
# ---------------------------------------------------------------------------

def _term_label(lam, w) -> str:
    if all(c == 0 for c in lam) and not w.word:
        return "T_e"
    theta_part = f"th({','.join(str(c) for c in lam)})"
    if not w.word:
        return theta_part
    return f"{theta_part}*T[{','.join(str(i) for i in w.word)}]"


def _run_iwahori_center(config: RunConfig) -> VerificationReport:
    datum = load_datum(config.datum)
    radius = config.radius
    if radius is None:
        raise CLIError("iwahori-center needs --radius")
    if radius < 0:
        raise CLIError("--radius must be >= 0")
    labels = (2 * radius + 1) ** datum.ambient_rank
    if labels > MAX_HECKE_LABELS:
        raise CLIError(f"requested truncation spans about {labels} lattice "
                       f"labels; cap is {MAX_HECKE_LABELS}")
    report = satake_check(datum, radius)
    algebra = BernsteinAlgebra(datum)

    checks = [CheckRecord(
        "orbit-sums-central-and-independent",
        PASS if report.ok else FAIL,
        None if report.ok else {"failures": list(report.failures)})]
    dim_ok = report.center_dimension == len(report.representatives)
    checks.append(CheckRecord(
        "center-dimension-matches-orbit-count",
        PASS if dim_ok else FAIL,
        None if dim_ok else {"kernel_dimension": report.center_dimension,
                             "orbit_count": len(report.representatives)}))

    basis = []
    for mu in report.representatives:
        z = algebra.central_element(mu)
        terms = [{"coweight": list(lam), "word": _weyl_word(w),
                  "coefficient": repr(z.coefficient(lam, w))}
                 for lam, w in z.support]
        basis.append({"label": f"z({','.join(str(c) for c in mu)})",
                      "dominant_coweight": list(mu),
                      "terms": terms,
                      "term_labels": [_term_label(lam, w)
                                      for lam, w in z.support]})
    if len(report.representatives) == 1 \
            and all(c == 0 for c in report.representatives[0]):
        basis[0]["label"] = "T_e"
    data = {
        "datum": datum.label,
        "radius": radius,
        "center_dimension": report.center_dimension,
        "orbits": [[list(lam) for lam in orbit] for orbit in report.orbits],
        "basis": basis,
    }
    return VerificationReport("iwahori-center", tuple(checks), data)


# ---------------------------------------------------------------------------
# subcommand: verify-all
# ---------------------------------------------------------------------------

def _run_verify_all(config: RunConfig) -> VerificationReport:
    checks: list[CheckRecord] = []

    def absorb(prefix: str, report: VerificationReport) -> None:
        for c in report.checks:
            checks.append(CheckRecord(f"{prefix}: {c.name}", c.status,
                                      c.witness))

    absorb("counterexample", _run_counterexample(
        RunConfig("counterexample")))

    wall = _run_heart_check(RunConfig(
        "heart-check", datum="gl3", x=(Q(1, 2), Q(0), Q(0)), r=Q(1),
        theta=(1,)))
    esc_ok = (wall.data.get("obstruction") == "DISTINCT_VOLUME"
              and "verdict" in wall.data)
    checks.append(CheckRecord(
        "heart-check: wall-point-mismatch-escalates",
        PASS if esc_ok else FAIL,
        None if esc_ok else {"data": _jsonable(wall.data)}))

    interior = _run_heart_check(RunConfig(
        "heart-check", datum="gl3", x=(Q(2, 3), Q(1, 3), Q(0)), r=Q(1)))
    int_ok = interior.exit_code == 0
    checks.append(CheckRecord(
        "heart-check: alcove-interior-point-proven",
        PASS if int_ok else FAIL,
        None if int_ok else {"data": _jsonable(interior.data)}))

    absorb("spade-check", _run_spade_check(RunConfig(
        "spade-check", datum="gl2", x=(Q(1, 2), Q(0)), r=Q(1))))
    absorb("spade-check", _run_spade_check(RunConfig(
        "spade-check", datum="gl3", x=(Q(1, 2), Q(0), Q(0)), r=Q(1),
        partition=((0,), (1, 2)))))

    absorb("clifford", _run_clifford(RunConfig(
        "clifford", catalog="builtin", check="all", jobs=config.jobs,
        quick=config.quick)))

    absorb("torus-center", _run_torus_center(RunConfig(
        "torus-center", datum="gl2", field_size=3, radius=1, check="all")))

    absorb("iwahori-center", _run_iwahori_center(RunConfig(
        "iwahori-center", datum="a1", radius=2)))
    absorb("iwahori-center", _run_iwahori_center(RunConfig(
        "iwahori-center", datum="gl2", radius=1)))

    return VerificationReport("verify-all", tuple(checks),
                              {"quick": config.quick})


# ---------------------------------------------------------------------------
# dispatch, argument parsing, entry point
# ---------------------------------------------------------------------------

_RUNNERS: dict[str, Callable[[RunConfig], VerificationReport]] = {
    "rootdatum": _run_rootdatum,
    "heart-check": _run_heart_check,
    "counterexample": _run_counterexample,
    "spade-check": _run_spade_check,
    "clifford": _run_clifford,
    "torus-center": _run_torus_center,
    "iwahori-center": _run_iwahori_center,
    "verify-all": _run_verify_all,
}


def run(config: RunConfig) -> VerificationReport:
    runner = _RUNNERS.get(config.subcommand)
    if runner is None:
        raise CLIError(f"unknown subcommand {config.subcommand!r}")
    start = time.perf_counter()
    report = runner(config)
    elapsed = time.perf_counter() - start
    return VerificationReport(report.suite, report.checks, report.data,
                              elapsed)


def _default_jobs() -> int:
    raw = os.environ.get("HCK_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckelab",
        description="Exact verification suites for filtration comparison, "
                    "finite Clifford theory, and truncated Hecke centers.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")

    p = sub.add_parser("rootdatum", help="describe a root datum and check "
                                         "its internal consistency")
    p.add_argument("--datum", required=True,
                   help="registry name or JSON file (see module docstring)")
    add_format(p)

    p = sub.add_parser("heart-check",
                       help="compare Levi-root thresholds at a point and "
                            "its Weyl images; escalate mismatches to "
                            "volume obstructions")
    p.add_argument("--datum", required=True)
    p.add_argument("--x", required=True, help="point, e.g. 1/2,0,0")
    p.add_argument("--r", required=True, help="positive rational depth")
    p.add_argument("--theta", default=None,
                   help="0-based simple-root indices (default: all subsets)")
    add_format(p)

    p = sub.add_parser("counterexample",
                       help="reproduce the rank-3 wall-point volume "
                            "obstruction end to end")
    p.add_argument("--q", default="symbolic", choices=("symbolic",),
                   help="index arithmetic mode (symbolic only)")
    add_format(p)

    p = sub.add_parser("spade-check",
                       help="check block triangular factorizations of a "
                            "filtration group, analytically and by "
                            "enumeration")
    p.add_argument("--datum", required=True, help="general-linear datum")
    p.add_argument("--x", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--partition", default=None,
                   help="0-based row blocks, e.g. 0|1,2 "
                        "(default: all proper standard partitions)")
    p.add_argument("--convention", choices=("upper", "lower"),
                   default="upper")
    p.add_argument("--require-exhaustive", action="store_true",
                   help="fail when brute-force verification was skipped")
    add_format(p)

    p = sub.add_parser("clifford",
                       help="evaluate the finite-group catalog: restriction "
                            "multiplicities, index chains, transfer, "
                            "center, commutativity")
    p.add_argument("--catalog", default="builtin",
                   help="'builtin' or a catalog JSON file")
    p.add_argument("--check", default="all",
                   choices=("all", "transfer", "center", "commutativity"))
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="parallel entry evaluation (default: HCK_JOBS or 1)")
    p.add_argument("--quick", action="store_true",
                   help="only entries with group order <= 32")
    p.add_argument("--emit-catalog", default=None, metavar="PATH",
                   help="write the builtin catalog JSON to PATH and exit")
    add_format(p)

    p = sub.add_parser("torus-center",
                       help="orbit decomposition of the invariant "
                            "lattice-character algebra at depth one")
    p.add_argument("--datum", required=True)
    p.add_argument("--q", required=True, type=int,
                   help="residue field size (prime power)")
    p.add_argument("--radius", required=True, type=int,
                   help="sup-norm truncation radius for coweights")
    p.add_argument("--check", default="all",
                   choices=("all", "roc", "dimension"))
    add_format(p)

    p = sub.add_parser("iwahori-center",
                       help="central basis of the truncated lattice-"
                            "presented Hecke algebra, with exact kernel "
                            "verification")
    p.add_argument("--datum", required=True)
    p.add_argument("--radius", required=True, type=int)
    add_format(p)

    p = sub.add_parser("verify-all",
                       help="run a fixed fast configuration of every suite")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--quick", action="store_true",
                   help="skip the largest catalog entries")
    add_format(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    kw: dict[str, Any] = {"subcommand": args.subcommand,
                          "output_format": getattr(args, "format", "text")}
    if getattr(args, "datum", None) is not None:
        kw["datum"] = args.datum
    if getattr(args, "x", None) is not None:
        kw["x"] = parse_rational_vector(args.x)
    if getattr(args, "r", None) is not None:
        kw["r"] = parse_rational(args.r)
    if getattr(args, "theta", None) is not None:
        kw["theta"] = parse_index_list(args.theta)
    if getattr(args, "partition", None) is not None:
        kw["partition"] = parse_partition(args.partition)
    if hasattr(args, "convention"):
        kw["convention"] = args.convention
    if hasattr(args, "require_exhaustive"):
        kw["require_exhaustive"] = args.require_exhaustive
    if hasattr(args, "catalog"):
        kw["catalog"] = args.catalog
    if hasattr(args, "check"):
        kw["check"] = args.check
    if hasattr(args, "jobs"):
        kw["jobs"] = max(1, args.jobs)
    if hasattr(args, "quick"):
        kw["quick"] = args.quick
    if getattr(args, "emit_catalog", None) is not None:
        kw["emit_catalog"] = args.emit_catalog
    if args.subcommand == "counterexample":
        kw["q"] = args.q
    elif hasattr(args, "q"):
        kw["field_size"] = args.q
    if hasattr(args, "radius"):
        kw["radius"] = args.radius
    return RunConfig(**kw)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        report = run(config)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render_report(report, config.output_format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
