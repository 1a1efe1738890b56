"""Campaign configuration, execution, and report emission.

A campaign is a JSON file: a master seed, optional estimator settings, and a
list of check specifications.  Configurations are validated twice before
anything runs: against the shipped JSON schema (shape) and then semantically
(known check names, resolvable instances, parameters inside each check's
preconditions).  Execution derives one seed per check from the master seed
and the check's position, so results are independent of `--jobs` and
regenerable from the config alone; reports carry no timestamps or
machine-dependent content.

Outputs under the chosen directory:

* ``reports/NNN_<check>.json`` - one report per check;
* ``summary.json`` - pass/fail table, hard failures, and slope verdicts for
  every declared ladder (checks sharing a ``ladder`` label are fit together:
  log max-ratio against log instance size, bounded iff slope <= 0.05);
* ``plots/*.csv`` (via :func:`emit_plot_data`) - one delimited table per
  series-bearing report and per ladder, numbers at 12 significant digits.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from . import checks as checks_mod
from .checks import loglog_slope
from .errors import ConfigError, NcfourierError
from .fourier import build_finite_abelian, build_group_vna, perturb_fourier_matrix
from .groups import available_groups, load_group_file, resolve_group

__all__ = [
    "CheckSpec",
    "CampaignConfig",
    "load_config",
    "resolve_instance",
    "run_campaign",
    "emit_plot_data",
    "list_instances",
    "MAX_BOUNDED_SLOPE",
    "CHECK_DEFAULT_TRIALS",
]

MAX_BOUNDED_SLOPE = 0.05

# checks that operate on a Fourier pair / a matrix size / nothing
_PAIR_CHECKS = {
    "hausdorff_young",
    "real_interpolation",
    "inversion_plancherel",
    "multiplier_bound",
    "paley",
}
_MATRIX_CHECKS = {"schur_bound"}
_FREE_CHECKS = {"lemma_constants", "sharpness", "endpoint", "growth"}
KNOWN_CHECKS = _PAIR_CHECKS | _MATRIX_CHECKS | _FREE_CHECKS

CHECK_DEFAULT_TRIALS = {
    "lemma_constants": 1000,
    "hausdorff_young": 1000,
    "real_interpolation": 500,
    "inversion_plancherel": 1000,
    "multiplier_bound": 100,
    "paley": 1000,
    "schur_bound": 100,
}

_ALLOWED_PARAMS = {
    "lemma_constants": set(),
    "hausdorff_young": {"p"},
    "real_interpolation": {"p"},
    "inversion_plancherel": set(),
    "multiplier_bound": {"p", "q"},
    "paley": {"p"},
    "schur_bound": {"p", "q"},
    "sharpness": {"p", "q", "n_list", "s_factor", "m", "growth_factor"},
    "endpoint": {"k_list", "m", "growth_window", "min_growth"},
    "growth": {"num_generators", "m_growth", "p_star", "depth", "c"},
}


@dataclass(frozen=True)
class CheckSpec:
    check: str
    instance: object = None
    params: dict = field(default_factory=dict)
    trials: int | None = None
    ladder: str | None = None


@dataclass(frozen=True)
class CampaignConfig:
    seed: int
    checks: tuple[CheckSpec, ...]
    estimator: dict = field(default_factory=dict)

    def check_seed(self, index: int) -> int:
        return int(
            np.random.SeedSequence((self.seed, index)).generate_state(1, dtype=np.uint64)[0]
        )


# ---------------------------------------------------------------------------
# validation


def _schema() -> dict:
    path = resources.files("ncfourier").joinpath("data", "campaign.schema.json")
    return json.loads(path.read_text())


def _require_number(params: dict, key: str, check: str, lo=None, hi=None):
    if key not in params:
        raise ConfigError(f"check {check!r} needs parameter {key!r}")
    v = params[key]
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ConfigError(f"check {check!r}: parameter {key!r} must be a number, got {v!r}")
    if lo is not None and v < lo or hi is not None and v > hi:
        raise ConfigError(
            f"check {check!r}: parameter {key!r}={v} outside allowed range "
            f"[{lo}, {hi}]"
        )
    return float(v)


def _validate_params(check: str, params: dict) -> None:
    allowed = _ALLOWED_PARAMS[check]
    extra = set(params) - allowed
    if extra:
        raise ConfigError(
            f"check {check!r} does not accept parameters {sorted(extra)}; "
            f"allowed: {sorted(allowed)}"
        )
    if check == "hausdorff_young":
        _require_number(params, "p", check, 1.0, 2.0)
    elif check == "real_interpolation":
        p = _require_number(params, "p", check)
        if not 1.0 < p < 2.0:
            raise ConfigError(f"check {check!r}: p must satisfy 1 < p < 2, got {p}")
    elif check == "paley":
        _require_number(params, "p", check, 1.0, 2.0)
    elif check == "multiplier_bound":
        p = _require_number(params, "p", check, 1.0)
        q = _require_number(params, "q", check, 1.0)
        if not p <= q:
            raise ConfigError(f"check {check!r}: need p <= q, got ({p}, {q})")
    elif check == "schur_bound":
        p = _require_number(params, "p", check, 1.0, 2.0)
        q = _require_number(params, "q", check, 2.0)
        if not p <= q:
            raise ConfigError(f"check {check!r}: need p <= 2 <= q, got ({p}, {q})")
    elif check == "sharpness":
        p = _require_number(params, "p", check, 1.0)
        q = _require_number(params, "q", check)
        if not p < q:
            raise ConfigError(f"check {check!r}: need p < q, got ({p}, {q})")
        n_list = params.get("n_list")
        if not isinstance(n_list, list) or len(n_list) < 3:
            raise ConfigError(f"check {check!r}: n_list must be a list of >= 3 degrees")
        if "s_factor" in params and not params["s_factor"] > 1.0:
            raise ConfigError(f"check {check!r}: s_factor must exceed 1")
    elif check == "endpoint":
        k_list = params.get("k_list")
        if not isinstance(k_list, list) or not k_list:
            raise ConfigError(f"check {check!r}: k_list must be a nonempty list")
    elif check == "growth":
        _require_number(params, "num_generators", check, 1)
        _require_number(params, "m_growth", check)
        _require_number(params, "p_star", check)
        for key in ("num_generators", "depth"):
            if key in params and not isinstance(params[key], int):
                raise ConfigError(f"check {check!r}: {key} must be an integer")


def _validate_instance(spec: CheckSpec, index: int) -> None:
    check = spec.check
    inst = spec.instance
    if check in _FREE_CHECKS:
        if inst is not None:
            raise ConfigError(
                f"checks[{index}]: {check!r} takes no instance, got {inst!r}"
            )
        return
    if inst is None:
        raise ConfigError(f"checks[{index}]: {check!r} requires an instance")
    kind = _instance_kind(inst)
    if check in _MATRIX_CHECKS and kind != "matrix":
        raise ConfigError(
            f"checks[{index}]: {check!r} needs a matrix instance like 'M8', got {inst!r}"
        )
    if check in _PAIR_CHECKS and kind == "matrix":
        raise ConfigError(
            f"checks[{index}]: {check!r} needs a group/abelian instance, got {inst!r}"
        )


def _instance_kind(inst) -> str:
    """'matrix' or 'pair'; raises ConfigError on unparseable specs."""
    if isinstance(inst, str):
        if inst.startswith("M") and inst[1:].isdigit():
            return "matrix"
        return "pair"
    if isinstance(inst, dict):
        if "matrix" in inst:
            if len(set(inst) - {"matrix"}) > 0:
                raise ConfigError(f"matrix instance takes no other keys, got {inst!r}")
            return "matrix"
        builders = {"cyclic", "abelian", "group", "group_file"} & set(inst)
        if len(builders) != 1:
            raise ConfigError(
                f"instance {inst!r} must name exactly one of cyclic/abelian/group/group_file"
            )
        return "pair"
    raise ConfigError(f"unintelligible instance spec {inst!r}")


def load_config(path) -> CampaignConfig:
    """Parse and fully validate a campaign configuration file."""
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read campaign config {path}: {exc}") from exc
    try:
        jsonschema.validate(raw, _schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config {path} rejected at {where}: {exc.message}") from exc
    specs = []
    for i, item in enumerate(raw["checks"]):
        name = item["check"]
        if name not in KNOWN_CHECKS:
            raise ConfigError(
                f"checks[{i}]: unknown check {name!r}; known: {sorted(KNOWN_CHECKS)}"
            )
        spec = CheckSpec(
            check=name,
            instance=item.get("instance"),
            params=dict(item.get("params", {})),
            trials=item.get("trials"),
            ladder=item.get("ladder"),
        )
        if spec.trials is not None and name not in CHECK_DEFAULT_TRIALS:
            raise ConfigError(
                f"checks[{i}]: {name!r} does not take a trial count"
            )
        _validate_instance(spec, i)
        try:
            _validate_params(name, spec.params)
        except ConfigError as exc:
            raise ConfigError(f"checks[{i}]: {exc}") from exc
        specs.append(spec)
    config = CampaignConfig(
        seed=int(raw["seed"]),
        checks=tuple(specs),
        estimator=dict(raw.get("estimator", {})),
    )
    # resolve instances eagerly so a bad group file fails before any check runs
    for i, spec in enumerate(config.checks):
        if spec.check in _FREE_CHECKS:
            continue
        try:
            resolve_instance(spec.instance)
        except (NcfourierError, ValueError) as exc:
            raise ConfigError(f"checks[{i}]: cannot resolve instance: {exc}") from exc
    return config


# ---------------------------------------------------------------------------
# instance resolution


def resolve_instance(inst):
    """Turn an instance spec into a QuantumGroupPair or a matrix size int."""
    if isinstance(inst, str):
        if inst.startswith("M") and inst[1:].isdigit():
            return int(inst[1:])
        if inst.startswith("Z") and inst[1:].isdigit():
            return build_finite_abelian([int(inst[1:])], name=inst)
        return build_group_vna(resolve_group(inst))
    if isinstance(inst, dict):
        _instance_kind(inst)  # shape validation
        fault = inst.get("fault_scale")
        if "matrix" in inst:
            return int(inst["matrix"])
        if "cyclic" in inst:
            pair = build_finite_abelian([int(inst["cyclic"])])
        elif "abelian" in inst:
            pair = build_finite_abelian([int(o) for o in inst["abelian"]])
        elif "group" in inst:
            pair = build_group_vna(resolve_group(inst["group"]))
        else:
            pair = build_group_vna(load_group_file(inst["group_file"]))
        if fault is not None:
            pair = perturb_fourier_matrix(pair, float(fault))
        return pair
    raise ConfigError(f"unintelligible instance spec {inst!r}")


def _instance_label(inst) -> str:
    if inst is None:
        return "-"
    if isinstance(inst, str):
        return inst
    return json.dumps(inst, sort_keys=True)


# ---------------------------------------------------------------------------
# execution


def _run_one(args) -> dict:
    """Worker: run one check spec; returns the report dict."""
    index, spec_dict, seed, estimator = args
    spec = CheckSpec(**spec_dict)
    name = spec.check
    trials = spec.trials if spec.trials is not None else CHECK_DEFAULT_TRIALS.get(name)
    if name in _FREE_CHECKS:
        if name == "lemma_constants":
            report = checks_mod.check_lemma_constants(trials=trials, seed=seed)
        elif name == "sharpness":
            report = checks_mod.sharpness_experiment(seed=seed, **spec.params)
        elif name == "endpoint":
            p = dict(spec.params)
            if "growth_window" in p:
                p["growth_window"] = tuple(p["growth_window"])
            report = checks_mod.endpoint_experiment(seed=seed, **p)
        else:
            report = checks_mod.growth_symbol_check(**spec.params)
    else:
        instance = resolve_instance(spec.instance)
        if name == "hausdorff_young":
            report = checks_mod.check_hausdorff_young(instance, trials=trials, seed=seed, **spec.params)
        elif name == "real_interpolation":
            report = checks_mod.check_real_interpolation(instance, trials=trials, seed=seed, **spec.params)
        elif name == "inversion_plancherel":
            report = checks_mod.check_inversion_plancherel(instance, trials=trials, seed=seed)
        elif name == "multiplier_bound":
            report = checks_mod.check_multiplier_bound(
                instance, trials=trials, seed=seed, estimator=estimator, **spec.params
            )
        elif name == "paley":
            report = checks_mod.check_paley(instance, trials=trials, seed=seed, **spec.params)
        else:
            report = checks_mod.check_schur_bound(
                instance, trials=trials, seed=seed, estimator=estimator, **spec.params
            )
    doc = report.to_dict()
    doc["index"] = index
    doc["ladder"] = spec.ladder
    doc["instance_spec"] = spec.instance
    return doc


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def run_campaign(config: CampaignConfig, out_dir, jobs: int = 1):
    """Execute every check, write reports and summary; returns (exit_code, summary)."""
    if jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {jobs}")
    out = Path(out_dir)
    reports_dir = out / "reports"
    reports_dir.mkdir(parents=True, exist_ok=True)

    tasks = []
    for i, spec in enumerate(config.checks):
        spec_dict = {
            "check": spec.check,
            "instance": spec.instance,
            "params": spec.params,
            "trials": spec.trials,
            "ladder": spec.ladder,
        }
        tasks.append((i, spec_dict, config.check_seed(i), dict(config.estimator)))

    if jobs == 1:
        results = [_run_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))

    rows = []
    ladders: dict[str, list[dict]] = {}
    hard_failures = []
    report_files = []
    for doc in results:
        i = doc["index"]
        fname = f"{i:03d}_{doc['check']}.json"
        _write_json(reports_dir / fname, doc)
        report_files.append(fname)
        row = {
            "index": i,
            "check": doc["check"],
            "instance": doc["instance"],
            "instance_size": doc["instance_size"],
            "hard": doc["hard"],
            "passed": doc["passed"],
            "max_ratio": doc["max_ratio"],
            "report": fname,
        }
        rows.append(row)
        if doc["hard"] and not doc["passed"]:
            hard_failures.append({"index": i, "check": doc["check"], "instance": doc["instance"]})
        if doc.get("ladder"):
            ladders.setdefault(doc["ladder"], []).append(doc)

    ladder_summaries = {}
    for name, docs in sorted(ladders.items()):
        docs = sorted(docs, key=lambda d: (d["instance_size"] or 0, d["index"]))
        sizes = [d["instance_size"] for d in docs]
        ratios = [d["max_ratio"] for d in docs]
        entry = {"sizes": sizes, "max_ratios": ratios}
        usable = [
            (s, r) for s, r in zip(sizes, ratios) if s and r and s > 0 and r > 0
        ]
        if len(usable) >= 2 and len({s for s, _ in usable}) >= 2:
            slope = loglog_slope([s for s, _ in usable], [r for _, r in usable])
            entry["slope"] = slope
            entry["bounded"] = bool(slope <= MAX_BOUNDED_SLOPE)
        else:
            entry["slope"] = None
            entry["bounded"] = None
        ladder_summaries[name] = entry

    summary = {
        "format_version": 1,
        "seed": config.seed,
        "num_checks": len(rows),
        "checks": rows,
        "hard_failures": hard_failures,
        "all_hard_passed": not hard_failures,
        "ladders": ladder_summaries,
        "max_bounded_slope": MAX_BOUNDED_SLOPE,
    }
    _write_json(out / "summary.json", summary)
    return (0 if not hard_failures else 1), summary


# ---------------------------------------------------------------------------
# plot data


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return ""
    return str(v)


def emit_plot_data(report_dir, out_dir=None) -> list[str]:
    """Write CSV tables for every series-bearing report and ladder.

    Returns the list of files written (relative to the output directory).
    """
    src = Path(report_dir)
    if not src.is_dir():
        raise ConfigError(f"{report_dir} is not a directory")
    out = Path(out_dir) if out_dir is not None else src / "plots"
    out.mkdir(parents=True, exist_ok=True)
    written = []
    reports_dir = src / "reports"
    for rp in sorted(reports_dir.glob("*.json")) if reports_dir.is_dir() else []:
        doc = json.loads(rp.read_text())
        series = doc.get("series")
        if not series:
            continue
        cols = list(series[0].keys())
        lines = [",".join(cols)]
        for row in series:
            lines.append(",".join(_fmt(row.get(c)) for c in cols))
        name = rp.stem + ".csv"
        (out / name).write_text("\n".join(lines) + "\n")
        written.append(name)
    summary_path = src / "summary.json"
    if summary_path.exists():
        summary = json.loads(summary_path.read_text())
        for name, entry in sorted(summary.get("ladders", {}).items()):
            lines = ["size,max_ratio"]
            for s, r in zip(entry["sizes"], entry["max_ratios"]):
                lines.append(f"{_fmt(s)},{_fmt(r)}")
            lines.append("")
            slope = entry.get("slope")
            lines.append(f"# slope,{_fmt(slope)}")
            fname = f"ladder_{name}.csv"
            (out / fname).write_text("\n".join(lines) + "\n")
            written.append(fname)
    if not written:
        raise ConfigError(f"no series or ladders found under {report_dir}")
    return written


# ---------------------------------------------------------------------------
# instance catalog


_DEFAULT_CYCLIC = (2, 3, 4, 8, 16, 64)
_DEFAULT_MATRIX = (2, 4, 8, 16)


def list_instances(data_dir=None) -> list[dict]:
    """Describe every named instance this install can build."""
    rows = []
    for n in _DEFAULT_CYCLIC:
        pair = build_finite_abelian([n], name=f"Z{n}")
        rows.append(
            {
                "name": f"Z{n}",
                "kind": "abelian (parametric: any Z<n>)",
                "size": n,
                "dual_blocks": list(pair.dual.dims),
                "dual_weights": list(pair.dual.weights),
                "status": "ok",
            }
        )
    for name, source in sorted(available_groups(data_dir).items()):
        try:
            pair = build_group_vna(resolve_group(name, data_dir))
            rows.append(
                {
                    "name": name,
                    "kind": f"group ({source})",
                    "size": pair.size,
                    "dual_blocks": list(pair.dual.dims),
                    "dual_weights": list(pair.dual.weights),
                    "status": "ok",
                }
            )
        except NcfourierError as exc:
            rows.append(
                {
                    "name": name,
                    "kind": f"group ({source})",
                    "size": None,
                    "dual_blocks": None,
                    "dual_weights": None,
                    "status": f"invalid: {exc}",
                }
            )
    for n in _DEFAULT_MATRIX:
        rows.append(
            {
                "name": f"M{n}",
                "kind": "matrix (parametric: any M<n>)",
                "size": n,
                "dual_blocks": [n],
                "dual_weights": [1.0],
                "status": "ok",
            }
        )
    return rows
