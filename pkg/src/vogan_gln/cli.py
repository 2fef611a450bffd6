"""Command line entry point.

Every verb prints JSON (default) or a plain-text rendering. Half-integers are
doubled integers on the wire. Exit status: 0 on success, 1 when a
verification fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import packets as pk
from .errors import VoganError
from .multisegments import Multisegment, is_simple, leq_oracle, mw_dual, stats
from .parameters import ArthurParameter, infinitesimal_support, vogan_shape
from .triangles import (
    RankTriangle,
    Support,
    enumerate_multisegments,
    enumerate_orbits,
    leq_triangle,
    multiseg_to_triangle,
    triangle_dual,
    triangle_to_multiseg,
)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class ContiguityViolation(Exception):
    pass


def _load(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{what}: invalid JSON ({exc.msg})") from exc


def _dump(obj) -> str:
    return json.dumps(obj)


def _support_arg(args) -> Support:
    if getattr(args, "support", None):
        return Support.from_json(_load(args.support, "support"))
    if args.d is not None and args.a is not None:
        return infinitesimal_support(args.d, args.a)
    raise UsageError("give --support JSON or both --d and --a")


def _cache_path(cache: str, support: Support) -> Path:
    key = hashlib.sha256(json.dumps(support.to_json(), sort_keys=True).encode()).hexdigest()[:16]
    return Path(cache) / f"orbits-{key}.json"


def _orbits(support: Support, cache: str | None) -> list[RankTriangle]:
    if cache is None:
        return enumerate_orbits(support)
    path = _cache_path(cache, support)
    if path.exists():
        log.info("orbit cache hit %s", path)
        return [RankTriangle.from_json(p) for p in json.loads(path.read_text())]
    orbits = enumerate_orbits(support)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dump([t.to_json() for t in orbits]))
    return orbits


def _table(rows: list[list[str]], header: list[str]) -> str:
    rows = [header] + rows
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _ranks_text(t: RankTriangle) -> str:
    return " | ".join(" ".join(map(str, row)) for row in t.ranks) or "-"


def _one_payload(args) -> Multisegment | RankTriangle:
    given = [x for x in (args.multisegment, args.triangle, getattr(args, "payload", None)) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --multisegment, --triangle" + (", --payload" if hasattr(args, "payload") else ""))
    if args.multisegment:
        return Multisegment.from_json(_load(args.multisegment, "multisegment"))
    if args.triangle:
        return RankTriangle.from_json(_load(args.triangle, "triangle"))
    data = _load(args.payload, "payload")
    if isinstance(data, dict) and "segments" in data:
        return Multisegment.from_json(data)
    if isinstance(data, dict) and "ranks" in data:
        return RankTriangle.from_json(data)
    raise UsageError("payload is neither a multisegment nor a rank triangle")


def cmd_convert(args) -> tuple[int, object, str]:
    obj = _one_payload(args)
    if isinstance(obj, Multisegment):
        t = multiseg_to_triangle(obj)
        return EXIT_OK, t.to_json(), str(t)
    m = triangle_to_multiseg(obj)
    return EXIT_OK, m.to_json(), str(m)


def cmd_dual(args) -> tuple[int, object, str]:
    obj = _one_payload(args)
    if isinstance(obj, Multisegment):
        m = mw_dual(obj)
        return EXIT_OK, m.to_json(), str(m)
    t = triangle_dual(obj)
    return EXIT_OK, t.to_json(), str(t)


def cmd_order(args) -> tuple[int, object, str]:
    if args.multisegment and len(args.multisegment) == 2 and not args.triangle:
        a, b = (Multisegment.from_json(_load(x, "multisegment")) for x in args.multisegment)
        ta, tb = multiseg_to_triangle(a), multiseg_to_triangle(b)
    elif args.triangle and len(args.triangle) == 2 and not args.multisegment:
        ta, tb = (RankTriangle.from_json(_load(x, "triangle")) for x in args.triangle)
        a, b = triangle_to_multiseg(ta), triangle_to_multiseg(tb)
    else:
        raise UsageError("order needs two --multisegment or two --triangle arguments")
    result = {
        "leq_oracle": leq_oracle(a, b),
        "leq_triangle": leq_triangle(ta, tb),
        "geq_oracle": leq_oracle(b, a),
        "geq_triangle": leq_triangle(tb, ta),
    }
    result["agree"] = result["leq_oracle"] == result["leq_triangle"] and result["geq_oracle"] == result["geq_triangle"]
    if not result["agree"]:
        raise ContiguityViolation(f"elementary-operation order and rank order disagree on {a} vs {b}")
    text = f"{a} <= {b}: {result['leq_oracle']}\n{b} <= {a}: {result['geq_oracle']}\noracle and triangle order agree"
    return EXIT_OK, result, text


def cmd_stats(args) -> tuple[int, object, str]:
    if not args.multisegment:
        raise UsageError("stats needs --multisegment")
    st = stats(Multisegment.from_json(_load(args.multisegment, "multisegment")))
    return EXIT_OK, {"L": st.L, "n": st.n, "c": st.c}, f"L={st.L} n={st.n} c={st.c}"


def cmd_enumerate(args) -> tuple[int, object, str]:
    support = _support_arg(args)
    if args.kind == "multisegments":
        items = enumerate_multisegments(support)
        return EXIT_OK, [m.to_json() for m in items], "\n".join(map(str, items))
    orbits = _orbits(support, args.cache)
    rows = [[str(i), _ranks_text(t), str(triangle_to_multiseg(t))] for i, t in enumerate(orbits)]
    text = f"{support}: {len(orbits)} orbits\n" + _table(rows, ["#", "ranks (by depth)", "multisegment"])
    return EXIT_OK, [t.to_json() for t in orbits], text


def cmd_shape(args) -> tuple[int, object, str]:
    shape = vogan_shape(_support_arg(args))
    text = (
        f"{shape.support}\ndim V = {shape.dim_V} (Hom blocks {list(shape.hom_dims)})\n"
        "H = " + " x ".join(f"GL_{m}" for m in shape.h_factors)
    )
    return EXIT_OK, shape.to_json(), text


def cmd_packet(args) -> tuple[int, object, str]:
    if args.triangle:
        base = RankTriangle.from_json(_load(args.triangle, "triangle"))
        arthur = is_simple(triangle_to_multiseg(base))
        packet = pk.pre_packet(base, jobs=args.jobs)
        param = None
    elif args.d is not None and args.a is not None:
        param = ArthurParameter(args.m, args.d, args.a, args.rho)
        packet = pk.irreducible_pre_packet(param, jobs=args.jobs)
        base = packet.base_orbit
        arthur = True
    else:
        raise UsageError("packet needs --d and --a (optionally --m) or --triangle")
    label = "ABV-packet" if arthur else "pre-packet (upper bound)"
    payload = packet.to_json()
    payload["label"] = label
    if param is not None:
        payload["parameter"] = param.to_json()
    members = set(packet.members)
    rows = []
    for t in _orbits(base.support, args.cache):
        flag = ("base " if t == base else "") + ("member" if t in members else "")
        rows.append([str(triangle_to_multiseg(t)), _ranks_text(t), flag.strip()])
    header = f"{label} of {triangle_to_multiseg(base)} on {base.support}"
    if param is not None and param.m > 1:
        header += f"\n(rho of dimension {param.m}: GL_{param.n} reduced to GL_{param.n // param.m})"
    text = (
        header + "\n"
        + _table(rows, ["multisegment", "ranks (by depth)", "in packet"])
        + f"\nsingleton: {packet.is_singleton}"
    )
    return EXIT_OK, payload, text


def cmd_verify_lemma(args) -> tuple[int, object, str]:
    if args.multisegment:
        targets = [Multisegment.from_json(_load(args.multisegment, "multisegment"))]
    elif args.support or (args.d is not None and args.a is not None):
        targets = [m for m in enumerate_multisegments(_support_arg(args)) if is_simple(m)]
    else:
        raise UsageError("verify-lemma needs --multisegment, --support, or --d and --a")
    report = []
    for m in targets:
        bad = pk.main_lemma_counterexamples(m)
        report.append({"multisegment": m.to_json(), "holds": not bad, "counterexamples": [b.to_json() for b in bad]})
    ok = all(r["holds"] for r in report)
    text = "\n".join(f"{m}: {'holds' if r['holds'] else 'FAILS'}" for m, r in zip(targets, report)) or "no simple multisegments"
    return (EXIT_OK if ok else EXIT_FAIL), {"holds": ok, "checked": report}, text


def cmd_verify_theorem(args) -> tuple[int, object, str]:
    if args.d is None or args.a is None:
        raise UsageError("verify-theorem needs --d and --a")
    p = ArthurParameter(args.m, args.d, args.a, args.rho)
    ok = pk.verify_theorem_irreducible(p, jobs=args.jobs)
    packet = pk.irreducible_pre_packet(p)
    payload = {"parameter": p.to_json(), "n": p.n, "members": len(packet.members), "holds": ok}
    text = f"m={p.m} d={p.d} a={p.a} (GL_{p.n}): {len(packet.members)} member(s), {'holds' if ok else 'FAILS'}"
    return (EXIT_OK if ok else EXIT_FAIL), payload, text


def _sweep_point(d: int, a: int) -> dict:
    packet = pk.pre_packet(pk.arthur_orbit(d, a))
    return {"d": d, "a": a, "members": len(packet.members), "holds": packet.is_singleton}


def cmd_sweep(args) -> tuple[int, object, str]:
    if args.max is None or args.max < 0:
        raise UsageError("sweep needs --max INT >= 0")
    grid = [(d, s - d) for s in range(args.max + 1) for d in range(s + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_point, *zip(*grid)))
    else:
        results = [_sweep_point(d, a) for d, a in grid]
    ok = all(r["holds"] for r in results)
    text = "\n".join(f"d={r['d']} a={r['a']} members={r['members']} {'ok' if r['holds'] else 'FAIL'}" for r in results)
    return (EXIT_OK if ok else EXIT_FAIL), {"max": args.max, "holds": ok, "results": results}, text


COMMANDS: dict[str, Callable] = {
    "convert": cmd_convert,
    "dual": cmd_dual,
    "order": cmd_order,
    "stats": cmd_stats,
    "enumerate": cmd_enumerate,
    "shape": cmd_shape,
    "packet": cmd_packet,
    "verify-lemma": cmd_verify_lemma,
    "verify-theorem": cmd_verify_theorem,
    "sweep": cmd_sweep,
}


def _add_parameter_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--m", type=int, default=1, help="dimension of rho")
    p.add_argument("--rho", default="1", help="label for rho")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes; results do not depend on it")
    common.add_argument("--cache", metavar="DIR", help="persist orbit enumerations here")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="vogan-gln", description="Multisegments, rank triangles and pre-packets for GL_n.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_)

    p = add("convert", "multisegment <-> rank triangle")
    p.add_argument("--multisegment")
    p.add_argument("--triangle")
    p.add_argument("--payload", help="either kind, detected from its keys")
    p = add("dual", "Zelevinsky involution of a multisegment or triangle")
    p.add_argument("--multisegment")
    p.add_argument("--triangle")
    p = add("order", "compare two multisegments or triangles with both order tests")
    p.add_argument("--multisegment", action="append")
    p.add_argument("--triangle", action="append")
    p = add("stats", "L, n, c of a multisegment")
    p.add_argument("--multisegment")
    for name, help_ in (("enumerate", "all orbits or multisegments of a support"), ("shape", "Vogan variety shape")):
        p = add(name, help_)
        p.add_argument("--support")
        p.add_argument("--d", type=int)
        p.add_argument("--a", type=int)
        if name == "enumerate":
            p.add_argument("--kind", choices=("orbits", "multisegments"), default="orbits")
    p = add("packet", "pre-packet of an Arthur parameter or of a base triangle")
    p.add_argument("--triangle")
    _add_parameter_flags(p)
    p = add("verify-lemma", "main lemma for a simple multisegment or every simple one on a support")
    p.add_argument("--multisegment")
    p.add_argument("--support")
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=int)
    p = add("verify-theorem", "main theorem for one (m, d, a)")
    _add_parameter_flags(p)
    p = add("sweep", "main theorem for every d + a <= MAX")
    p.add_argument("--max", type=int)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        status, payload, text = COMMANDS[args.verb](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContiguityViolation as exc:
        print(f"fatal: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (VoganError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text if args.format == "text" else _dump(payload))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
