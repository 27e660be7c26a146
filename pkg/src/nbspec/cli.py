"""Command-line front end.

Every subcommand accepts --config FILE with flat key=value lines ('#'
comments allowed); explicit flags win over config values, unknown keys are
rejected, and the fully resolved configuration is echoed to stderr before
the run. Exit codes: 0 success, 1 parameter error, 2 I/O error,
3 convergence error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import (
    ContractError,
    ConvergenceError,
    ParameterError,
    ParseError,
    ResourceError,
)
from .estimate import (
    RecursiveConfig,
    SequentialConfig,
    count_nb_informative,
    estimate_k_recursive,
    estimate_k_sequential,
    fit_model,
)
from .eig import EigOptions, eig_leading, eigh_leading
from .graphs import (
    build_q_delta,
    read_edge_list,
    sample_er,
    sample_sbm,
    write_edge_list,
)
from .harness import (
    SweepConfig,
    run_approx_gap,
    run_clustering_corr,
    run_null_scaling,
    run_power_sweep,
    run_vdv_growth,
)
from .operators import bethe_hessian, centered_adjacency, centered_nb_operator
from .operators import nb_operator, normalized_adjacency
from .stats import (
    NullDistribution,
    TestStatKind,
    bootstrap_null,
    compute_statistic,
    gof_test,
    simulate_null,
    v1_d_v1,
    y1hx1_gap,
)


def _add(parser, *args, **kwargs):
    # all defaults None so we can tell flags apart from config-file values
    kwargs.setdefault("default", None)
    parser.add_argument(*args, **kwargs)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="nbspec", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="sample a graph and write its edge list")
    _add(p, "--config")
    _add(p, "--model", choices=["er", "sbm"])
    _add(p, "--n", type=int)
    _add(p, "--p", type=float)
    _add(p, "--family", choices=["balanced", "unbalanced", "equal_degree", "three_block"])
    _add(p, "--n1", type=int)
    _add(p, "--n2", type=int)
    _add(p, "--n3", type=int)
    _add(p, "--p0", type=float)
    _add(p, "--delta", type=float)
    _add(p, "--seed", type=int)
    _add(p, "--out")

    p = sub.add_parser("spectrum", help="print leading eigenvalues of an operator")
    _add(p, "--config")
    _add(p, "--graph")
    _add(p, "--op", choices=["h", "cnb", "cadj", "nadj", "bh"])
    _add(p, "--k", type=int)
    _add(p, "--k0", type=int)
    _add(p, "--r")

    p = sub.add_parser("test", help="goodness-of-fit test for K = K0")
    _add(p, "--config")
    _add(p, "--graph")
    _add(p, "--k0", type=int)
    _add(p, "--stat")
    _add(p, "--alpha", type=float)
    _add(p, "--null", choices=["tw", "mc", "boot"])
    _add(p, "--reps", type=int)
    _add(p, "--seed", type=int)
    _add(p, "--jobs", type=int)
    _add(p, "--shift", action="store_true", default=None,
         help="apply the (np)^-1 correction to the TW threshold")

    p = sub.add_parser("estimate-k", help="estimate the number of communities")
    _add(p, "--config")
    _add(p, "--graph")
    _add(p, "--method", choices=["sequential", "recursive"])
    _add(p, "--stat")
    _add(p, "--alpha", type=float)
    _add(p, "--null", choices=["tw", "mc"])
    _add(p, "--min-size", type=int)
    _add(p, "--kmax", type=int)
    _add(p, "--reps", type=int)
    _add(p, "--seed", type=int)
    _add(p, "--jobs", type=int)
    _add(p, "--out")

    p = sub.add_parser("count-nb", help="count informative non-backtracking eigenvalues")
    _add(p, "--config")
    _add(p, "--graph")

    p = sub.add_parser("power", help="power sweep (or clustering correlation) over delta")
    _add(p, "--config")
    _add(p, "--experiment", choices=["power", "clustering"])
    _add(p, "--family", choices=["balanced", "unbalanced", "equal_degree", "three_block"])
    _add(p, "--n1", type=int)
    _add(p, "--n2", type=int)
    _add(p, "--n3", type=int)
    _add(p, "--p0", type=float)
    _add(p, "--deltas", help="comma-separated delta grid")
    _add(p, "--stats", help="comma-separated statistic keys")
    _add(p, "--alpha", type=float)
    _add(p, "--reps", type=int)
    _add(p, "--null-reps", type=int)
    _add(p, "--seed", type=int)
    _add(p, "--jobs", type=int)
    _add(p, "--out")

    p = sub.add_parser("null-sim", help="simulate a null distribution")
    _add(p, "--config")
    _add(p, "--stat")
    _add(p, "--n", type=int)
    _add(p, "--p", type=float)
    _add(p, "--k0", type=int)
    _add(p, "--reps", type=int)
    _add(p, "--seed", type=int)
    _add(p, "--jobs", type=int)
    _add(p, "--out")
    _add(p, "--scaling", action="store_true", default=None,
         help="run the n^(2/3) scaling table instead of a single null")
    _add(p, "--n-list", help="comma-separated n grid (with --scaling)")
    _add(p, "--mode", choices=["fixed_degree", "fixed_p"])
    _add(p, "--value", type=float)
    _add(p, "--stats", help="comma-separated statistic keys (with --scaling)")

    p = sub.add_parser("diag", help="leading-eigenvalue approximation diagnostics")
    _add(p, "--config")
    _add(p, "--graph")
    _add(p, "--experiment", choices=["single", "growth", "gap"])
    _add(p, "--p-mode", choices=["constant", "n^-1/3", "n^-1/2", "n^-1"])
    _add(p, "--n-list", help="comma-separated n grid")
    _add(p, "--reps", type=int)
    _add(p, "--seed", type=int)
    _add(p, "--jobs", type=int)
    _add(p, "--out")
    return top


def _read_config(path, known_keys):
    out = {}
    with open(path, "rt", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"expected key=value, got {line!r}", lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in known_keys:
                raise ParameterError(f"unknown config key {key!r}")
            out[key] = value
    return out


_DEFAULTS = {
    "gen": {"model": "er", "seed": 0, "p0": 0.01, "delta": 0.0},
    "spectrum": {"op": "h", "k": 6, "k0": 1, "r": "ra"},
    "test": {"k0": 1, "stat": "cnb", "alpha": 0.05, "null": "mc", "reps": 2000,
             "seed": 0, "jobs": 1, "shift": False},
    "estimate-k": {"method": "recursive", "stat": "cnb", "alpha": 0.001,
                   "null": "mc", "min_size": 20, "kmax": 10, "reps": 2000,
                   "seed": 0, "jobs": 1},
    "count-nb": {},
    "power": {"experiment": "power", "family": "balanced", "p0": 0.01,
              "stats": "cnb,nadj,nb", "alpha": 0.05, "reps": 1000,
              "null_reps": 2000, "seed": 0, "jobs": 1,
              "deltas": ",".join(str(round(d, 10)) for d in np.arange(0.0, 1.0, 0.02))},
    "null-sim": {"stat": "cnb", "k0": 1, "reps": 2000, "seed": 0, "jobs": 1,
                 "scaling": False, "mode": "fixed_p", "stats": "cnb,nadj"},
    "diag": {"experiment": "single", "p_mode": "n^-1", "reps": 50, "seed": 0, "jobs": 1},
}

_CASTS = {
    "n": int, "n1": int, "n2": int, "n3": int, "seed": int, "reps": int,
    "null_reps": int, "k": int, "k0": int, "kmax": int, "min_size": int,
    "jobs": int, "p": float, "p0": float, "delta": float, "alpha": float,
    "value": float, "shift": lambda s: s.lower() in ("1", "true", "yes"),
    "scaling": lambda s: s.lower() in ("1", "true", "yes"),
}


def _resolve(args: argparse.Namespace) -> dict:
    ns = vars(args)
    command = ns.pop("command")
    config_path = ns.pop("config", None)
    file_values = {}
    if config_path:
        file_values = _read_config(config_path, set(ns.keys()))
    resolved = {}
    for key, flag_value in ns.items():
        if flag_value is not None:
            resolved[key] = flag_value
        elif key in file_values:
            cast = _CASTS.get(key, str)
            try:
                resolved[key] = cast(file_values[key])
            except ValueError as exc:
                raise ParameterError(f"bad value for config key {key!r}") from exc
        else:
            resolved[key] = _DEFAULTS[command].get(key)
    resolved["command"] = command
    echo = " ".join(
        f"{k}={resolved[k]}" for k in sorted(resolved) if k != "command" and resolved[k] is not None
    )
    print(f"# nbspec {command}: {echo}", file=sys.stderr)
    return resolved


def _require(cfg, *keys):
    for key in keys:
        if cfg.get(key) is None:
            raise ParameterError(f"--{key.replace('_', '-')} is required")


def _load_graph(cfg):
    _require(cfg, "graph")
    g, report = read_edge_list(cfg["graph"])
    if report.self_loops or report.duplicates:
        print(
            f"# dropped {report.self_loops} self-loops, {report.duplicates} duplicates",
            file=sys.stderr,
        )
    if report.index_map is not None:
        print(f"# relabeled {report.index_map.size} node ids densely", file=sys.stderr)
    return g


def _parse_float_list(text):
    return tuple(float(x) for x in str(text).split(",") if x.strip() != "")


def _parse_int_list(text):
    return tuple(int(x) for x in str(text).split(",") if x.strip() != "")


def _cmd_gen(cfg) -> int:
    _require(cfg, "out")
    if cfg["model"] == "er":
        _require(cfg, "n", "p")
        g = sample_er(cfg["n"], cfg["p"], cfg["seed"])
    else:
        _require(cfg, "family", "n1", "n2")
        spec = build_q_delta(
            cfg["family"], cfg["n1"], cfg["n2"], cfg.get("n3"), cfg["p0"], cfg["delta"]
        )
        g = sample_sbm(spec, cfg["seed"])
    write_edge_list(g, cfg["out"])
    print(f"wrote {cfg['out']}: n={g.n} m={g.m}")
    return 0


def _cmd_spectrum(cfg) -> int:
    g = _load_graph(cfg)
    est = fit_model(g, cfg["k0"])
    op = {
        "h": lambda: nb_operator(g),
        "cnb": lambda: centered_nb_operator(g, est),
        "cadj": lambda: centered_adjacency(g, est),
        "nadj": lambda: normalized_adjacency(g, est),
        "bh": lambda: bethe_hessian(g, TestStatKind.parse(f"bh:{cfg['r']}" if cfg["r"] in ("ra", "rm") else f"bh:r={cfg['r']}").resolve_r(g)),
    }[cfg["op"]]()
    opts = EigOptions(k=min(cfg["k"], op.shape[0]))
    symmetric = cfg["op"] in ("cadj", "nadj", "bh")
    spec = eigh_leading(op, opts) if symmetric else eig_leading(op, opts)
    for val in spec.values:
        print(f"{float(val.real)!r} {float(val.imag)!r}")
    return 0


def _make_null(cfg, g, est, kind):
    if cfg["null"] == "tw":
        if kind.name not in ("centered_nb", "normalized_adj"):
            raise ParameterError("the TW null applies to cnb and nadj only")
        if cfg["k0"] != 1:
            raise ParameterError("the TW null applies to K0=1 only")
        return NullDistribution.tw1_reference()
    if cfg["null"] == "mc":
        if cfg["k0"] != 1:
            raise ParameterError("null=mc needs K0=1; use null=boot for K0>1")
        return simulate_null(
            kind, g.n, est.phat, 1, reps=cfg["reps"], seed=cfg["seed"],
            n_jobs=cfg["jobs"],
        )
    return bootstrap_null(g, est, kind, reps=cfg["reps"], seed=cfg["seed"],
                          n_jobs=cfg["jobs"])


def _cmd_test(cfg) -> int:
    g = _load_graph(cfg)
    kind = TestStatKind.parse(cfg["stat"])
    est = fit_model(g, cfg["k0"])
    value = compute_statistic(g, est, kind, cfg["k0"])
    null = _make_null(cfg, g, est, kind)
    shift = 1.0 / (g.n * est.phat) if (cfg["shift"] and cfg["null"] == "tw") else 0.0
    outcome = gof_test(value, null, cfg["alpha"], g.n, shift=shift)
    print(f"statistic={outcome.statistic!r}")
    print(f"threshold={outcome.threshold!r}")
    print(f"reject={'yes' if outcome.reject else 'no'}")
    return 0


def _cmd_estimate_k(cfg) -> int:
    g = _load_graph(cfg)
    kind = TestStatKind.parse(cfg["stat"])
    if cfg["method"] == "sequential":
        result = estimate_k_sequential(
            g,
            SequentialConfig(
                stat=kind, alpha=cfg["alpha"], null=cfg["null"], kmax=cfg["kmax"],
                null_reps=cfg["reps"], seed=cfg["seed"], n_jobs=cfg["jobs"],
            ),
        )
        print(f"K={result.k}{' (truncated at kmax)' if result.truncated else ''}")
        for outcome in result.outcomes:
            print(
                f"K0={outcome.k0} stat={outcome.statistic!r} "
                f"threshold={outcome.threshold!r} reject={'yes' if outcome.reject else 'no'}"
            )
        return 0
    root = estimate_k_recursive(
        g,
        RecursiveConfig(
            stat=kind, alpha=cfg["alpha"], null=cfg["null"],
            min_size=cfg["min_size"], null_reps=cfg["reps"], seed=cfg["seed"],
            n_jobs=cfg["jobs"],
        ),
    )
    leaves = root.leaves()
    print(f"K={len(leaves)}")
    print("leaf sizes:", " ".join(str(leaf.members.size) for leaf in leaves))
    if cfg.get("out"):
        with open(cfg["out"], "wt", encoding="utf-8", newline="\n") as fh:
            fh.write(root.to_json(indent=1))
            fh.write("\n")
        print(f"wrote {cfg['out']}")
    return 0


def _cmd_count_nb(cfg) -> int:
    g = _load_graph(cfg)
    print(f"K={count_nb_informative(g)}")
    return 0


def _cmd_power(cfg) -> int:
    _require(cfg, "out", "n1", "n2")
    sweep = SweepConfig(
        kind=cfg["family"], n1=cfg["n1"], n2=cfg["n2"], n3=cfg.get("n3"),
        p0=cfg["p0"], deltas=_parse_float_list(cfg["deltas"]),
        stats=tuple(str(cfg["stats"]).split(",")), alpha=cfg["alpha"],
        reps=cfg["reps"], null_reps=cfg["null_reps"], seed=cfg["seed"],
        n_jobs=cfg["jobs"],
    )
    if cfg["experiment"] == "clustering":
        run_clustering_corr(sweep, out=cfg["out"])
    else:
        run_power_sweep(sweep, out=cfg["out"])
    print(f"wrote {cfg['out']}")
    return 0


def _cmd_null_sim(cfg) -> int:
    _require(cfg, "out")
    if cfg["scaling"]:
        _require(cfg, "n_list", "value")
        run_null_scaling(
            _parse_int_list(cfg["n_list"]), cfg["mode"], cfg["value"],
            tuple(str(cfg["stats"]).split(",")), reps=cfg["reps"],
            seed=cfg["seed"], n_jobs=cfg["jobs"], out=cfg["out"],
        )
    else:
        _require(cfg, "n", "p")
        null = simulate_null(
            TestStatKind.parse(cfg["stat"]), cfg["n"], cfg["p"], cfg["k0"],
            reps=cfg["reps"], seed=cfg["seed"], n_jobs=cfg["jobs"],
        )
        null.to_csv(cfg["out"])
    print(f"wrote {cfg['out']}")
    return 0


def _cmd_diag(cfg) -> int:
    if cfg["experiment"] == "single":
        g = _load_graph(cfg)
        est = fit_model(g, 1)
        gap = y1hx1_gap(g, est)
        print(f"v1_D_v1={v1_d_v1(g, est)!r}")
        print(f"v1_Dc_v1={v1_d_v1(g, est, centered=True)!r}")
        print(f"mu1={gap.mu1!r}")
        print(f"y1hx1={gap.y1hx1_closed!r}")
        print(f"y1hx1_bilinear={gap.y1hx1_bilinear!r}")
        print(f"lam1={gap.lam1!r}")
        return 0
    _require(cfg, "out", "n_list")
    runner = run_vdv_growth if cfg["experiment"] == "growth" else run_approx_gap
    runner(
        cfg["p_mode"], _parse_int_list(cfg["n_list"]), reps=cfg["reps"],
        seed=cfg["seed"], n_jobs=cfg["jobs"], out=cfg["out"],
    )
    print(f"wrote {cfg['out']}")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "spectrum": _cmd_spectrum,
    "test": _cmd_test,
    "estimate-k": _cmd_estimate_k,
    "count-nb": _cmd_count_nb,
    "power": _cmd_power,
    "null-sim": _cmd_null_sim,
    "diag": _cmd_diag,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _resolve(args)
        return _COMMANDS[cfg["command"]](cfg)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; that is a parameter error here
        code = exc.code or 0
        return 0 if code == 0 else 1
    except (ParameterError, ContractError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
