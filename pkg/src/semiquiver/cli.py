"""Command-line front end: ``semiquiver <group> <command> [options]``.

Output is tab-separated on stdout; diagnostics go to stderr.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import sympy

from . import io
from .canonical import canonical_algebra, isotropic_root
from .decompose import decompose
from .errors import QuiverError
from .quiver import classify_dimvector, euler_form, euler_pairing, topological_order
from .representation import DEFAULT_BOUND, ModuleSampler, check_module
from .semi_invariants import SIDimension, si_dim
from .stability import HilbertEntry, HilbertTable, format_shape, recognize_products, semistable_verdict

CACHE_ENV = "SEMIQUIVER_CACHE_DIR"
log = logging.getLogger("semiquiver")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    bound: int = DEFAULT_BOUND
    prime: Optional[int] = None
    n_phi: int = 4
    n_points: int = 4
    max_budget: int = 256
    p_max: int = 3
    cache_dir: Optional[str] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        if args.prime is not None and not (2 < args.prime < 2 ** 63 and sympy.isprime(args.prime)):
            raise UsageError(f"--prime: {args.prime} is not an odd prime below 2^63")
        if args.bound <= 0:
            raise UsageError("--bound must be positive")
        try:
            budget = [int(t) for t in args.budget.split(",")]
        except ValueError:
            raise UsageError(f"--budget: expected N or N_PHI,N_POINTS, got {args.budget!r}") from None
        if len(budget) == 1:
            budget *= 2
        if len(budget) != 2 or min(budget) <= 0:
            raise UsageError("--budget: budgets must be positive")
        if args.max_budget <= 0:
            raise UsageError("--max-budget must be positive")
        pmax = getattr(args, "pmax", 3)
        if pmax is not None and pmax <= 0:
            raise UsageError("--pmax must be positive")
        cache = args.cache_dir or os.environ.get(CACHE_ENV) or None
        return cls(args.seed % (1 << 64), args.bound, args.prime, budget[0], budget[1], args.max_budget,
                   pmax or 3, cache)


def _vector(a, text: str, flag: str) -> tuple:
    try:
        v = io.parse_vector(text)
    except QuiverError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None
    if len(v) != a.quiver.n:
        raise UsageError(f"{flag}: expected {a.quiver.n} entries, got {len(v)}")
    return v


def _row(*cells) -> str:
    return "\t".join(str(c) for c in cells)


# -- caching -----------------------------------------------------------------


def _cache_key(algebra_text: str, sampler: ModuleSampler, theta, p: int, cfg: RunConfig) -> str:
    payload = json.dumps([algebra_text, sampler.describe(), list(theta), p, cfg.n_phi, cfg.n_points,
                          cfg.max_budget, cfg.bound, cfg.seed])
    return hashlib.sha256(payload.encode()).hexdigest()


def cached_si_dim(algebra_text: str, sampler: ModuleSampler, theta, p: int, cfg: RunConfig) -> SIDimension:
    path = None
    if cfg.cache_dir:
        path = Path(cfg.cache_dir) / f"si-{_cache_key(algebra_text, sampler, theta, p, cfg)}.json"
        if path.exists():
            try:
                d = json.loads(path.read_text())
                return SIDimension(d["value"], d["stable"], d["n_phi"], d["n_points"])
            except (ValueError, KeyError):
                log.warning("ignoring unreadable cache entry %s", path)
    r = si_dim(sampler, theta, p, cfg.n_phi, cfg.n_points, cfg.seed, cfg.max_budget, cfg.bound)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"value": r.value, "stable": r.stable, "n_phi": r.n_phi, "n_points": r.n_points}))
    return r


# -- commands ----------------------------------------------------------------


def _load(args):
    return io.read_algebra(args.file)


def _load_module(a, args, cfg: RunConfig):
    return io.read_module(a, args.module, cfg.prime)


def cmd_quiver_check(args, cfg, out):
    a = _load(args)
    q = a.quiver
    out.append(_row("ok", f"vertices={q.n}", f"arrows={len(q.arrows)}", f"relations={len(a.relations)}"))
    out.append(_row("order", *topological_order(q)))


def cmd_algebra_cartan(args, cfg, out):
    a = _load(args)
    out.append(_row("", *a.quiver.vertices))
    for v, row in zip(a.quiver.vertices, a.cartan()):
        out.append(_row(v, *row))


def cmd_algebra_euler(args, cfg, out):
    a = _load(args)
    d = _vector(a, args.d, "--d")
    if args.e is None:
        out.append(_row(*euler_pairing(a, d)))
    else:
        out.append(str(euler_form(a, d, _vector(a, args.e, "--e"))))


def cmd_algebra_classify(args, cfg, out):
    a = _load(args)
    rc = classify_dimvector(a, _vector(a, args.d, "--d"))
    out.append(_row(rc.kind, f"chi={rc.chi}", f"connected={str(rc.connected).lower()}",
                    f"sincere={str(rc.sincere).lower()}"))


def cmd_canonical_build(args, cfg, out):
    try:
        weights = io.parse_vector(args.weights)
        params = tuple(io.parse_number(t) for t in args.params.split(",")) if args.params else ()
    except QuiverError as exc:
        raise UsageError(f"--weights/--params: {exc}") from None
    out.append(io.format_algebra(canonical_algebra(weights, params)).rstrip("\n"))


def cmd_module_check(args, cfg, out):
    a = _load(args)
    m = _load_module(a, args, cfg)
    out.append(_row("valid" if check_module(a, m) else "invalid", ",".join(map(str, m.dims)), m.field))


def cmd_module_decompose(args, cfg, out):
    a = _load(args)
    m = _load_module(a, args, cfg)
    for k, part in enumerate(decompose(m, seed=cfg.seed)):
        out.append(_row(k, ",".join(map(str, part.dims))))


def _theta(a, args, d=None):
    if args.theta == "auto-isotropic":
        return euler_pairing(a, isotropic_root(a))
    return _vector(a, args.theta, "--theta")


def _sampler(a, args, cfg) -> ModuleSampler:
    if args.d is not None and args.n is not None:
        raise UsageError("--d and --n are mutually exclusive")
    if args.n is not None:
        if args.n <= 0:
            raise UsageError("--n must be positive")
        d = tuple(args.n * x for x in isotropic_root(a))
    elif args.d is not None:
        d = _vector(a, args.d, "--d")
    else:
        raise UsageError("one of --d or --n is required")
    strategy = args.strategy or ("canonical-tube-sum" if a.canonical is not None else "hereditary-uniform")
    return ModuleSampler(a, d, strategy, cfg.bound, (), cfg.prime)


def cmd_si_dim(args, cfg, out):
    a = _load(args)
    sampler = _sampler(a, args, cfg)
    theta = _theta(a, args)
    if args.p <= 0:
        raise UsageError("--p must be positive")
    r = cached_si_dim(io.format_algebra(a), sampler, theta, args.p, cfg)
    out.append(_row(args.p, r.value, "stable" if r.stable else "unstable", r.n_phi, r.n_points))


def cmd_stability_check(args, cfg, out):
    a = _load(args)
    m = _load_module(a, args, cfg)
    theta = _theta(a, args)
    v = semistable_verdict(m, theta, p_max=cfg.p_max, n_phi=max(cfg.n_phi, 20), seed=cfg.seed, bound=cfg.bound)
    out.append(str(v))


def cmd_moduli_hilbert(args, cfg, out):
    a = _load(args)
    sampler = _sampler(a, args, cfg)
    theta = _theta(a, args)
    text = io.format_algebra(a)
    entries = [HilbertEntry(0, 1, True)]
    for p in range(1, cfg.p_max + 1):
        r = cached_si_dim(text, sampler, theta, p, cfg)
        entries.append(HilbertEntry(p, r.value, r.stable))
    table = HilbertTable(tuple(theta), tuple(entries))
    out.append(table.as_tsv())
    if table.all_stable:
        shapes = recognize_products(table)
        out.append("recognized\t" + ("; ".join(format_shape(s) for s in shapes) if shapes else "none"))
    else:
        out.append("recognized\tskipped (unstable entries)")


COMMANDS = {
    ("quiver", "check"): cmd_quiver_check,
    ("algebra", "cartan"): cmd_algebra_cartan,
    ("algebra", "euler"): cmd_algebra_euler,
    ("algebra", "classify"): cmd_algebra_classify,
    ("canonical", "build"): cmd_canonical_build,
    ("module", "check"): cmd_module_check,
    ("module", "decompose"): cmd_module_decompose,
    ("si", "dim"): cmd_si_dim,
    ("stability", "check"): cmd_stability_check,
    ("moduli", "hilbert"): cmd_moduli_hilbert,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coefficient bound B for sampling")
    common.add_argument("--prime", type=int, default=None, help="work over F_p instead of the rationals")
    common.add_argument("--budget", default="4", help="initial budgets N or N_PHI,N_POINTS")
    common.add_argument("--max-budget", type=int, default=256)
    common.add_argument("--cache-dir", default=None, help=f"si-dim cache directory (env {CACHE_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="semiquiver", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, *flags):
        g = groups.choices.get(group) or groups.add_parser(group)
        if not hasattr(g, "_cmds"):
            g._cmds = g.add_subparsers(dest="command", required=True)
        p = g._cmds.add_parser(name, parents=[common])
        for f in flags:
            f(p)
        return p

    def file_(p):
        p.add_argument("--file", required=True, help="algebra file")

    def module_(p):
        p.add_argument("--module", required=True, help="module file")

    def theta_(p):
        p.add_argument("--theta", required=True, help="weight vector or 'auto-isotropic'")

    def dimvec(p):
        p.add_argument("--d", default=None, help="dimension vector")
        p.add_argument("--n", type=int, default=None, help="use d = n*h on a canonical algebra")
        p.add_argument("--strategy", default=None,
                       choices=["hereditary-uniform", "canonical-tube-sum"])

    sub("quiver", "check", file_)
    sub("algebra", "cartan", file_)
    sub("algebra", "euler", file_, lambda p: p.add_argument("--d", required=True),
        lambda p: p.add_argument("--e", default=None))
    sub("algebra", "classify", file_, lambda p: p.add_argument("--d", required=True))
    sub("canonical", "build", lambda p: p.add_argument("--weights", required=True),
        lambda p: p.add_argument("--params", default=""))
    sub("module", "check", file_, module_)
    sub("module", "decompose", file_, module_)
    sub("si", "dim", file_, theta_, dimvec, lambda p: p.add_argument("--p", type=int, default=1))
    sub("stability", "check", file_, module_, theta_, lambda p: p.add_argument("--pmax", type=int, default=3))
    sub("moduli", "hilbert", file_, theta_, dimvec, lambda p: p.add_argument("--pmax", type=int, default=3))
    return parser


VECTOR_FLAGS = ("--theta", "--d", "--e", "--params")


def _glue_vectors(argv: list) -> list:
    """Attach vector values to their flag so that ``--theta -1,1`` is not read as an option."""
    out = []
    k = 0
    while k < len(argv):
        a = argv[k]
        if a in VECTOR_FLAGS and k + 1 < len(argv):
            out.append(f"{a}={argv[k + 1]}")
            k += 2
        else:
            out.append(a)
            k += 1
    return out


def execute(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_vectors(list(sys.argv[1:] if argv is None else argv))
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    out: list[str] = []
    try:
        cfg = RunConfig.from_args(args)
        COMMANDS[(args.group, args.command)](args, cfg, out)
    except UsageError as exc:
        print(f"semiquiver: usage error: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"semiquiver: {exc}", file=stderr)
        return 2
    except QuiverError as exc:
        print(f"semiquiver: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if out:
        stdout.write("\n".join(out) + "\n")
    return 0


def main() -> None:
    sys.exit(execute())


if __name__ == "__main__":
    main()
