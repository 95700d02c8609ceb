"""Command-line front end: reports, sweeps, trajectories, verification.

Four subcommands. `report` prints the correlation data of one spec,
`sweep` tabulates discord and concurrence over an overlap grid,
`evolve` follows a pair under dephasing, and `verify` replays the
cross-route consistency checks on randomized inputs. Output is CSV or
JSON with 9 significant digits; all validation failures exit with
code 2 and a one-line message, verify exits 1 when a tolerance is
violated.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .correlations import (
    MeasurementSide,
    concurrence_mixed,
    geometric_discord_numeric,
    geometric_discord_pure_closed,
    mixed_discord_closed,
    mixed_k_eigenvalues,
)
from .dephasing import (
    DephasingParams,
    apply_dephasing,
    discord_trajectory,
    sudden_death_time,
)
from .errors import CatcorrError, DomainError
from .kernels import WEYL_HEISENBERG, FamilyParams, overlap, su2, su11
from .oracle import discord_by_measurement_search, pair_density_from_overlaps
from .states import (
    BlochForm,
    Parity,
    SuperpositionSpec,
    bloch_compose,
    bloch_decompose,
    pure_split,
    reduced_pair_density,
)


def _fmt(x: float) -> str:
    """Locale independent, 9 significant digits."""
    return f"{x:.9g}"


def _jnum(x: float) -> float:
    """Float rounded to the printed precision so JSON round-trips."""
    return float(f"{x:.9g}")


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows, trailer=None) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    if trailer is not None:
        lines.append(trailer)
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _family_from_args(args) -> FamilyParams:
    if args.family == "wh":
        if args.j is not None or args.bargmann is not None:
            raise DomainError("the wh family takes no --j or --bargmann label")
        return WEYL_HEISENBERG
    if args.family == "su2":
        if args.j is None:
            raise DomainError("--family su2 needs --j")
        twice_j = round(2.0 * args.j)
        if abs(2.0 * args.j - twice_j) > 1e-9 or twice_j <= 0:
            raise DomainError("--j must be a positive integer or half-integer")
        return su2(int(twice_j))
    if args.family == "su11":
        if args.bargmann is None:
            raise DomainError("--family su11 needs --bargmann")
        return su11(args.bargmann)
    raise DomainError(f"unknown family {args.family!r}")


def _spec_from_args(args) -> SuperpositionSpec:
    parity = Parity(args.parity)
    if args.p is not None and args.family is not None:
        raise DomainError("give either --p or --family/--z, not both")
    if args.p is not None:
        if args.n is not None and args.n != len(args.p):
            raise DomainError(f"--n {args.n} disagrees with {len(args.p)} --p values")
        return SuperpositionSpec(overlaps=tuple(args.p), parity=parity)
    if args.family is not None:
        if args.z is None:
            raise DomainError("--family needs --z")
        if args.n is None:
            raise DomainError("--family mode needs an explicit --n")
        p = overlap(args.z, _family_from_args(args))
        return SuperpositionSpec(overlaps=(p,) * args.n, parity=parity)
    raise DomainError("overlaps required: give --p or --family with --z")


def _selection_from_args(args) -> tuple:
    """Return ("pure", k) or ("mixed", (i, j)) from the flags."""
    if args.pure and args.pair is not None:
        raise DomainError("give either --pure/--k or --pair, not both")
    if args.pure:
        if args.k is None:
            raise DomainError("--pure needs --k")
        return "pure", args.k
    if args.pair is not None:
        return "mixed", (args.pair[0], args.pair[1])
    raise DomainError("select a bipartition: --pure --k K or --pair I J")


def _labeled_lambdas_pure(report) -> tuple:
    lams = report.k_eigenvalues
    return float(lams[0]), float(lams[1]), float(lams[2])


def cmd_report(args) -> int:
    spec = _spec_from_args(args)
    side = MeasurementSide(args.side)
    mode, selection = _selection_from_args(args)
    if mode == "pure":
        closed = geometric_discord_pure_closed(spec, selection)
        rho = pure_split(spec, selection).projector()
        lam1, lam2, lam3 = _labeled_lambdas_pure(closed)
        selection_repr = str(selection)
        selection_json = {"mode": "pure", "k": selection}
    else:
        i, j = selection
        closed = mixed_discord_closed(spec, i, j, side)
        rho = reduced_pair_density(spec, i, j)
        lam1, lam2, lam3 = mixed_k_eigenvalues(spec, i, j, side)
        selection_repr = f"{i}-{j}"
        selection_json = {"mode": "mixed", "pair": [i, j]}
    numeric = geometric_discord_numeric(rho, side)

    payload = {
        "spec": {
            "n": spec.n,
            "overlaps": [_jnum(p) for p in spec.overlaps],
            "parity": spec.parity.value,
        },
        "selection": selection_json,
        "measurement_side": side.value,
        "discord": _jnum(closed.discord),
        "discord_numeric": _jnum(numeric.discord),
        "branch": closed.branch.value,
        "concurrence": _jnum(closed.concurrence),
        "lambda1": _jnum(lam1),
        "lambda2": _jnum(lam2),
        "lambda3": _jnum(lam3),
    }

    if args.time is not None and args.rate is None:
        raise DomainError("--time needs --rate")
    if args.rate is not None:
        t = args.time if args.time is not None else 0.0
        params = DephasingParams(rate=args.rate, time=t)
        if mode == "pure":
            evolved = apply_dephasing(rho, params.gamma)
            discord_t = geometric_discord_numeric(evolved, side).discord
            concurrence_t = concurrence_mixed(evolved)
            t0 = math.inf if closed.concurrence > 0.0 else 0.0
        else:
            traj = discord_trajectory(spec, i, j, args.rate, t, side)
            discord_t = traj.discord
            concurrence_t = traj.concurrence
            t0 = sudden_death_time(spec, i, j, args.rate)
        payload["trajectory"] = {
            "rate": _jnum(args.rate),
            "time": _jnum(t),
            "gamma": _jnum(params.gamma),
            "discord": _jnum(discord_t),
            "concurrence": _jnum(concurrence_t),
            "sudden_death_time": "infinite" if math.isinf(t0) else _jnum(t0),
        }

    if args.format == "json":
        _emit(_json_text(payload), args.out)
        return 0
    header = ["n", "parity", "overlaps", "mode", "selection", "measurement_side",
              "discord", "discord_numeric", "branch", "concurrence",
              "lambda1", "lambda2", "lambda3"]
    row = [str(spec.n), spec.parity.value,
           " ".join(_fmt(p) for p in spec.overlaps), mode, selection_repr,
           side.value, _fmt(closed.discord), _fmt(numeric.discord),
           closed.branch.value, _fmt(closed.concurrence),
           _fmt(lam1), _fmt(lam2), _fmt(lam3)]
    if "trajectory" in payload:
        block = payload["trajectory"]
        header += ["rate", "time", "gamma", "discord_t", "concurrence_t",
                   "sudden_death_time"]
        row += [_fmt(block["rate"]), _fmt(block["time"]), _fmt(block["gamma"]),
                _fmt(block["discord"]), _fmt(block["concurrence"]),
                block["sudden_death_time"] if isinstance(block["sudden_death_time"], str)
                else _fmt(block["sudden_death_time"])]
    _emit(_csv_text(header, [row]), args.out)
    return 0


@dataclass(frozen=True)
class SweepRequest:
    """Validated description of one overlap-grid sweep."""

    mode: str
    n: int
    parity: Parity
    k: int | None
    pair: tuple | None
    grid: np.ndarray
    side: MeasurementSide
    fmt: str

    def __post_init__(self):
        if self.mode not in ("pure", "mixed"):
            raise DomainError("sweep mode must be pure or mixed")
        if len(self.grid) < 2:
            raise DomainError("a sweep grid needs at least 2 steps")
        if self.grid.min() < 0.0 or self.grid.max() > 1.0:
            raise DomainError("overlap grid must stay within [0, 1]")
        if self.mode == "pure" and self.k is None:
            raise DomainError("pure sweeps need --k")
        if self.mode == "mixed" and self.pair is None:
            raise DomainError("mixed sweeps need --pair")


def _sweep_request_from_args(args) -> SweepRequest:
    if args.n is None:
        raise DomainError("sweeps need --n")
    if args.steps < 2:
        raise DomainError("a sweep grid needs at least 2 steps")
    if args.family is not None:
        params = _family_from_args(args)
        if args.z_start is None or args.z_stop is None:
            raise DomainError("family sweeps need --z-start and --z-stop")
        zs = np.linspace(args.z_start, args.z_stop, args.steps)
        grid = np.array([overlap(z, params) for z in zs])
    else:
        grid = np.linspace(args.p_start, args.p_stop, args.steps)
    pair = tuple(args.pair) if args.pair is not None else None
    mode = "pure" if args.pure else "mixed"
    if mode == "mixed" and pair is None:
        pair = (1, 2)
    return SweepRequest(mode=mode, n=args.n, parity=Parity(args.parity), k=args.k,
                        pair=pair, grid=grid, side=MeasurementSide(args.side),
                        fmt=args.format)


_SWEEP_COLUMNS = ["p", "discord_closed", "discord_numeric", "branch",
                  "concurrence", "lambda1", "lambda2", "lambda3"]


def cmd_sweep(args) -> int:
    request = _sweep_request_from_args(args)
    rows = []
    for p in request.grid:
        spec = SuperpositionSpec(overlaps=(float(p),) * request.n, parity=request.parity)
        if request.mode == "pure":
            closed = geometric_discord_pure_closed(spec, request.k)
            numeric = geometric_discord_numeric(
                pure_split(spec, request.k).projector(), request.side)
            lam1, lam2, lam3 = _labeled_lambdas_pure(closed)
        else:
            i, j = request.pair
            closed = mixed_discord_closed(spec, i, j, request.side)
            numeric = geometric_discord_numeric(
                reduced_pair_density(spec, i, j), request.side)
            lam1, lam2, lam3 = mixed_k_eigenvalues(spec, i, j, request.side)
        rows.append({
            "p": float(p),
            "discord_closed": closed.discord,
            "discord_numeric": numeric.discord,
            "branch": closed.branch.value,
            "concurrence": closed.concurrence,
            "lambda1": lam1,
            "lambda2": lam2,
            "lambda3": lam3,
        })
    if request.fmt == "json":
        payload = {
            "columns": _SWEEP_COLUMNS,
            "rows": [{key: (_jnum(val) if isinstance(val, float) else val)
                      for key, val in row.items()} for row in rows],
        }
        _emit(_json_text(payload), args.out)
        return 0
    csv_rows = [[_fmt(row[c]) if isinstance(row[c], float) else row[c]
                 for c in _SWEEP_COLUMNS] for row in rows]
    _emit(_csv_text(_SWEEP_COLUMNS, csv_rows), args.out)
    return 0


_EVOLVE_COLUMNS = ["t", "gamma", "discord", "concurrence"]


def cmd_evolve(args) -> int:
    spec = _spec_from_args(args)
    side = MeasurementSide(args.side)
    pair = tuple(args.pair) if args.pair is not None else (1, 2)
    i, j = pair
    if args.rate is None:
        raise DomainError("evolve needs --rate")
    if args.t_max is None or args.t_max <= 0.0:
        raise DomainError("evolve needs a positive --t-max")
    if args.steps < 2:
        raise DomainError("a time grid needs at least 2 steps")
    times = np.linspace(0.0, args.t_max, args.steps)
    rows = []
    for t in times:
        traj = discord_trajectory(spec, i, j, args.rate, float(t), side)
        gamma = DephasingParams(rate=args.rate, time=float(t)).gamma
        rows.append({"t": float(t), "gamma": gamma, "discord": traj.discord,
                     "concurrence": traj.concurrence})
    t0 = sudden_death_time(spec, i, j, args.rate)
    t0_repr = "infinite" if math.isinf(t0) else _jnum(t0)
    if args.format == "json":
        payload = {
            "columns": _EVOLVE_COLUMNS,
            "rows": [{key: _jnum(val) for key, val in row.items()} for row in rows],
            "sudden_death_time": t0_repr,
        }
        _emit(_json_text(payload), args.out)
        return 0
    csv_rows = [[_fmt(row[c]) for c in _EVOLVE_COLUMNS] for row in rows]
    trailer = "# sudden_death_time=" + (t0_repr if isinstance(t0_repr, str) else _fmt(t0))
    _emit(_csv_text(_EVOLVE_COLUMNS, csv_rows, trailer=trailer), args.out)
    return 0


def _random_verify_samples(rng, count: int) -> list:
    samples = []
    while len(samples) < count:
        n = int(rng.integers(2, 7))
        ps = rng.uniform(0.0, 1.0, size=n)
        parity = Parity.EVEN if rng.uniform() < 0.5 else Parity.ODD
        try:
            spec = SuperpositionSpec(overlaps=tuple(ps), parity=parity)
        except CatcorrError:
            continue
        i, j = sorted(int(x) + 1 for x in rng.choice(n, size=2, replace=False))
        side = MeasurementSide.FIRST if rng.uniform() < 0.5 else MeasurementSide.SECOND
        rate = float(rng.uniform(0.2, 2.0))
        t = float(rng.uniform(0.0, 3.0))
        gamma = float(rng.uniform(0.0, 1.0))
        samples.append((spec, i, j, side, rate, t, gamma))
    return samples


def _describe_sample(sample) -> str:
    spec, i, j, side, rate, t, gamma = sample
    ps = ",".join(_fmt(p) for p in spec.overlaps)
    return (f"n={spec.n} parity={spec.parity.value} p=[{ps}] pair=({i},{j}) "
            f"side={side.value} rate={_fmt(rate)} t={_fmt(t)} gamma={_fmt(gamma)}")


def _dephased_bloch(bloch: BlochForm, gamma: float) -> BlochForm:
    """Bloch data of the two-sided dephased state, by direct scaling.

    Each local channel shrinks the transverse Pauli components by
    sqrt(1-gamma): transverse rows and columns of R pick up one factor
    each, transverse local components likewise; everything along z is
    untouched.
    """
    shrink = math.sqrt(1.0 - gamma)
    weight = np.array([shrink, shrink, 1.0])
    return BlochForm(x=bloch.x * weight, y=bloch.y * weight,
                     r=bloch.r * np.outer(weight, weight))


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    samples = _random_verify_samples(rng, args.samples)
    results = []

    dev, worst = 0.0, None
    for sample in samples:
        spec, i, j, _, _, _, _ = sample
        gap = float(np.max(np.abs(pair_density_from_overlaps(spec, i, j)
                                  - reduced_pair_density(spec, i, j))))
        if gap > dev:
            dev, worst = gap, sample
    results.append(("gram_vs_closed", len(samples), dev, worst))

    dev, worst = 0.0, None
    for sample in samples:
        spec, i, j, side, _, _, _ = sample
        rho = reduced_pair_density(spec, i, j)
        gap = abs(mixed_discord_closed(spec, i, j, side).discord
                  - geometric_discord_numeric(rho, side).discord)
        if gap > dev:
            dev, worst = gap, sample
    results.append(("closed_vs_numeric", len(samples), dev, worst))

    dev, worst = 0.0, None
    for sample in samples:
        spec, i, j, _, _, _, gamma = sample
        rho = reduced_pair_density(spec, i, j)
        evolved = apply_dephasing(rho, gamma)
        rebuilt = bloch_compose(_dephased_bloch(bloch_decompose(rho), gamma))
        gap = float(np.max(np.abs(evolved - rebuilt)))
        if gap > dev:
            dev, worst = gap, sample
    results.append(("kraus_vs_bloch_scaling", len(samples), dev, worst))

    dev, worst = 0.0, None
    for sample in samples:
        spec, i, j, side, rate, t, _ = sample
        gamma = DephasingParams(rate=rate, time=t).gamma
        evolved = apply_dephasing(reduced_pair_density(spec, i, j), gamma)
        traj = discord_trajectory(spec, i, j, rate, t, side)
        gap = max(abs(traj.discord - geometric_discord_numeric(evolved, side).discord),
                  abs(traj.concurrence - concurrence_mixed(evolved)))
        if gap > dev:
            dev, worst = gap, sample
    results.append(("trajectory_consistency", len(samples), dev, worst))

    search_samples = samples[: min(len(samples), args.search_samples)]
    dev, worst = 0.0, None
    for sample in search_samples:
        spec, i, j, side, rate, t, _ = sample
        rho = reduced_pair_density(spec, i, j)
        if t > 1.5:
            rho = apply_dephasing(rho, DephasingParams(rate=rate, time=t).gamma)
        gap = abs(discord_by_measurement_search(rho, side)
                  - geometric_discord_numeric(rho, side).discord)
        if gap > dev:
            dev, worst = gap, sample
    results.append(("search_vs_spectrum", len(search_samples), dev, worst))

    all_pass = True
    lines = []
    for name, count, deviation, worst_sample in results:
        ok = deviation <= args.tol
        all_pass = all_pass and ok
        lines.append(f"{name:<24} samples={count} max_deviation={_fmt(deviation)} "
                     + ("PASS" if ok else "FAIL"))
        if not ok and worst_sample is not None:
            lines.append(f"    worst: {_describe_sample(worst_sample)}")
    verdict = "PASS" if all_pass else "FAIL"
    passed = sum(1 for name, count, deviation, _ in results if deviation <= args.tol)
    lines.append(f"verify: {verdict} ({passed}/{len(results)} assertions within "
                 f"tol={_fmt(args.tol)})")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_pass else 1


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None,
                        help="number of modes (inferred from --p when omitted)")
    parser.add_argument("--p", type=float, nargs="+", default=None,
                        help="per-mode branch overlaps in [0, 1]")
    parser.add_argument("--parity", choices=["even", "odd"], default="even",
                        help="relative phase parity of the superposition")
    parser.add_argument("--family", choices=["wh", "su2", "su11"], default=None,
                        help="coherent-state family used to translate --z into an overlap")
    parser.add_argument("--z", type=float, default=None,
                        help="family label amplitude (equal across modes)")
    parser.add_argument("--j", type=float, default=None,
                        help="spin length for --family su2 (integer or half-integer)")
    parser.add_argument("--bargmann", type=float, default=None,
                        help="positive Bargmann index for --family su11")
    parser.add_argument("--side", choices=["first", "second"], default="first",
                        help="which pair member the local measurement acts on")


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--out", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catcorr",
        description="Pairwise quantum correlations of multimode coherent-state "
                    "superpositions: geometric discord, concurrence, dephasing.")
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="correlations of a single configuration")
    _add_spec_arguments(report)
    report.add_argument("--pure", action="store_true",
                        help="use the pure k|(n-k) split instead of a mode pair")
    report.add_argument("--k", type=int, default=None, help="split size for --pure")
    report.add_argument("--pair", type=int, nargs=2, default=None,
                        metavar=("I", "J"), help="1-based mode pair")
    report.add_argument("--rate", type=float, default=None,
                        help="dephasing rate; adds a trajectory block")
    report.add_argument("--time", type=float, default=None,
                        help="evolution time for the trajectory block")
    _add_output_arguments(report)
    report.set_defaults(func=cmd_report)

    sweep = sub.add_parser("sweep", help="discord and concurrence over an overlap grid")
    _add_spec_arguments(sweep)
    sweep.add_argument("--pure", action="store_true")
    sweep.add_argument("--k", type=int, default=None)
    sweep.add_argument("--pair", type=int, nargs=2, default=None, metavar=("I", "J"))
    sweep.add_argument("--p-start", type=float, default=0.0)
    sweep.add_argument("--p-stop", type=float, default=1.0)
    sweep.add_argument("--z-start", type=float, default=None)
    sweep.add_argument("--z-stop", type=float, default=None)
    sweep.add_argument("--steps", type=int, default=101)
    _add_output_arguments(sweep)
    sweep.set_defaults(func=cmd_sweep)

    evolve = sub.add_parser("evolve", help="pair correlations along a dephasing trajectory")
    _add_spec_arguments(evolve)
    evolve.add_argument("--pair", type=int, nargs=2, default=None, metavar=("I", "J"))
    evolve.add_argument("--rate", type=float, default=None, help="dephasing rate, > 0")
    evolve.add_argument("--t-max", type=float, default=None, help="end of the time grid")
    evolve.add_argument("--steps", type=int, default=101)
    _add_output_arguments(evolve)
    evolve.set_defaults(func=cmd_evolve)

    verify = sub.add_parser("verify", help="randomized cross-route consistency checks")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=20260817)
    verify.add_argument("--tol", type=float, default=1e-6)
    verify.add_argument("--search-samples", type=int, default=48,
                        help="subset size for the measurement-search assertion")
    verify.add_argument("--out", default=None)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CatcorrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
