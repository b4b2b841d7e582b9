"""Command line front end: ``fusscat count|enumerate|map|act|verify``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import boundary, chains, chords, diagram_algebra, integrability, noncrossing, paths
from .rings import FormalSum, LaurentPoly


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required here")


# -- count ---------------------------------------------------------------------

def _count(args):
    what = args.what
    if what == "fc":
        _need(args, "n", "r")
        return paths.fuss_catalan(args.n, args.r)
    if what == "ncp":
        _need(args, "n")
        return len(chains.enumerate_chains(args.n, args.r or 1))
    if what == "snc":
        _need(args, "n")
        return boundary.count_snc(args.n)
    if what == "primed":
        _need(args, "n")
        return len(boundary.enumerate_primed(args.n))
    if what == "B":
        _need(args, "n", "r")
        return boundary.count_B(args.n, args.r)
    if what in ("V", "K"):
        _need(args, "n", "r")
        return boundary.count_V(args.n, args.r) if what == "V" else boundary.count_K(args.n, args.r)
    if what == "gamma":
        _need(args, "n", "r")
        return boundary.count_gamma(args.n, args.r)
    if what == "dim":
        _need(args, "n", "r")
        return diagram_algebra.DiagramAlgebra(args.n, args.r, args.boundary).dimension()
    raise UsageError(f"unknown count {what!r}")


# -- enumerate -------------------------------------------------------------------

def _enumerate(args):
    kind = args.kind
    _need(args, "n")
    r = args.r or 1
    if kind == "paths":
        return [str(p) for p in paths.enumerate_paths(args.n, r)]
    if kind == "ncp":
        return [str(p) for p in noncrossing.enumerate_ncp(args.n)]
    if kind == "chains":
        return [str(c) for c in chains.enumerate_chains(args.n, r)]
    if kind == "snc":
        if r > 1:
            return [str(c) for c in boundary.enumerate_snc_chains(args.n, r, args.epsilon)]
        return [str(p) for p in boundary.enumerate_snc(args.n, args.epsilon)]
    if kind == "primed":
        if r > 1:
            return [str(c) for c in boundary.enumerate_primed_chains(args.n, r)]
        return [str(p) for p in boundary.enumerate_primed(args.n)]
    if kind == "basis":
        alg = diagram_algebra.DiagramAlgebra(args.n, r, args.boundary)
        return [str(d) for d in alg.enumerate_basis()]
    raise UsageError(f"unknown family {kind!r}")


# -- map -------------------------------------------------------------------------

def _chord_out(c: chords.ChordDiagram):
    return c.to_json()


def _map(args):
    fn, text = args.fn, args.input
    if text is None:
        raise UsageError("--input is required")
    if fn == "psi":
        return _chord_out(noncrossing.psi(noncrossing.NcPartition.parse(text, args.n)))
    if fn == "psi-inv":
        c = chords.path_to_matching(paths.RDyckPath.parse(text, 1))
        return str(noncrossing.psi_inv(c))
    if fn == "kreweras":
        p = noncrossing.NcPartition.parse(text, args.n)
        return str(noncrossing.kreweras_power(p, args.power))
    if fn == "kappa":
        return str(chains.kappa(chains.RChain.parse(text)))
    if fn == "kappa-inv":
        _need(args, "r")
        return str(chains.kappa_inv(text, args.r))
    if fn == "phi":
        return _chord_out(chains.phi(chains.RChain.parse(text)))
    if fn == "xi":
        _need(args, "r")
        return str(paths.jdt_rotate(paths.RDyckPath.parse(text, args.r)))
    if fn == "sigma":
        c = chords.path_to_matching(paths.RDyckPath.parse(text, 1))
        return str(chords.matching_to_path(chords.rotate_sigma(c, args.power)))
    if fn == "tiling":
        t = chains.build_tiling(chains.RChain.parse(text))
        return {"tiles": [list(x) for x in t.tiles], "top": str(chains.tiling_top_path(t))}
    raise UsageError(f"unknown map {fn!r}")


# -- act -------------------------------------------------------------------------

def _act(args):
    if args.word is None or args.state is None:
        raise UsageError("--word and --state are required")
    word = diagram_algebra.parse_word(args.word)
    alg = args.algebra
    if alg == "tl":
        x = FormalSum.basis(noncrossing.NcPartition.parse(args.state, args.n))
        step = lambda i, s, v: noncrossing.generator_F(i, v)  # noqa: E731
    elif alg == "fc":
        x = FormalSum.basis(chains.RChain.parse(args.state))
        step = chains.generator_Fs
    elif alg == "1bfc":
        x = FormalSum.basis(chains.RChain.parse(args.state))
        step = boundary.chain_generators_G
    elif alg == "2bfc":
        x = FormalSum.basis(boundary.PrimedChain.parse(args.state))
        step = boundary.chain_generators_G
    else:
        raise UsageError(f"unknown algebra {alg!r}")
    x = x.scale(LaurentPoly.constant(1))
    # the rightmost generator acts first
    for i, s in reversed(word):
        x = step(i, s, x)
    return {str(k): str(c) for k, c in sorted(x.items(), key=lambda kv: str(kv[0]))}


# -- verify ----------------------------------------------------------------------

def _verify(args):
    what = args.what
    if what in ("tl-relations", "fc-relations"):
        m = args.n or (4 if what == "fc-relations" else 3)
        r = 1 if what == "tl-relations" else (args.r or 2)
        rep = diagram_algebra.verify_relations(m, r)
        return rep, not rep["failures"]
    if what == "iso-1b":
        rep = boundary.verify_iso_1b(args.n or 3, args.r or 1)
        return rep, not rep["failures"]
    if what == "iso-2b":
        rep = boundary.verify_iso_2b(args.n or 3, args.r or 1)
        return rep, not rep["failures"]
    if what == "dims":
        m, r = args.n or 2, args.r or 2
        rows = {
            "none": [diagram_algebra.DiagramAlgebra(m, r, "none").dimension(),
                     paths.fuss_catalan(m, r)],
            "right": [diagram_algebra.DiagramAlgebra(m, r, "right").dimension(),
                      boundary.count_B(2 * m, r)],
            "both": [diagram_algebra.DiagramAlgebra(m, r, "both").dimension(),
                     boundary.count_K(m, r)],
        }
        failures = [mode for mode, (a, b) in rows.items() if a != b]
        return {"m": m, "r": r, "dimension_vs_count": rows, "failures": failures}, not failures
    if what == "ybe":
        rep = integrability.verify_ybe(args.samples, args.seed)
        return rep, rep["failures"] == 0
    if what == "re":
        rep = integrability.verify_re(args.samples, args.seed, args.branch)
        return rep, rep["failures"] == 0
    raise UsageError(f"unknown check {what!r}")


# -- driver ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fusscat", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default="text")
    # the flag is also accepted after the subcommand
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--r", type=int)

    c = sub.add_parser("count", parents=[fmt], help="closed-form and enumerated counts")
    c.add_argument("--what", required=True,
                   choices=("fc", "ncp", "snc", "primed", "B", "V", "K", "gamma", "dim"))
    c.add_argument("--boundary", choices=diagram_algebra.MODES, default="none")
    common(c)

    e = sub.add_parser("enumerate", parents=[fmt], help="list a combinatorial family")
    e.add_argument("kind", choices=("paths", "ncp", "chains", "snc", "primed", "basis"))
    e.add_argument("--epsilon", type=int, choices=(0, 1), default=0)
    e.add_argument("--boundary", choices=diagram_algebra.MODES, default="none")
    common(e)

    mp = sub.add_parser("map", parents=[fmt], help="apply a bijection or rotation")
    mp.add_argument("--fn", required=True, choices=(
        "psi", "psi-inv", "kappa", "kappa-inv", "phi", "kreweras", "xi", "sigma", "tiling"))
    mp.add_argument("--input")
    mp.add_argument("--power", type=int, default=1)
    common(mp)

    a = sub.add_parser("act", parents=[fmt], help="apply a generator word to a state")
    a.add_argument("--algebra", required=True, choices=("tl", "fc", "1bfc", "2bfc"))
    a.add_argument("--word")
    a.add_argument("--state")
    common(a)

    v = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    v.add_argument("--what", required=True, choices=(
        "tl-relations", "fc-relations", "iso-1b", "iso-2b", "dims", "ybe", "re"))
    v.add_argument("--samples", type=int, default=50)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--branch", choices=integrability.BRANCHES, default="generic+")
    common(v)
    return p


def _emit(value, fmt, out):
    if fmt == "json":
        out.write(json.dumps(value, sort_keys=True) + "\n")
    elif isinstance(value, list):
        out.write("\n".join(str(x) for x in value) + "\n")
    elif isinstance(value, dict):
        for k, v in value.items():
            out.write(f"{k}: {v}\n")
    else:
        out.write(f"{value}\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handlers = {"count": _count, "enumerate": _enumerate, "map": _map, "act": _act}
    try:
        if args.command == "verify":
            report, ok = _verify(args)
            if args.format == "json":
                _emit({"pass": ok, "report": report}, "json", out)
            else:
                failures = report.get("failures", [])
                n_fail = failures if isinstance(failures, int) else len(failures)
                out.write(f"{'pass' if ok else 'FAIL'} {args.what} failures={n_fail}\n")
            return 0 if ok else 1
        _emit(handlers[args.command](args), args.format, out)
        return 0
    except (UsageError, ValueError, IndexError) as exc:
        err.write(f"fusscat: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
