"""Command-line entry point: ``ckpierce <command> ...``.

Exit codes: 0 success or positive finding, 1 negative finding (C(k)-free,
or a failed construction check), 2 no piercing within budget, 3 search unresolved,
4 bad input.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import construction, kkm
from .ck import find_ck
from .family import Family, FamilyError, load_family, save_family, scale_to_unit_disk
from .geometry import Line
from .piercing import count_bound_check, max_line_hits, min_piercing_lines
from .svg import render

EXIT_OK, EXIT_NEGATIVE, EXIT_BUDGET, EXIT_UNRESOLVED, EXIT_INPUT = 0, 1, 2, 3, 4


def _write(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_family(path: str) -> Family:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return load_family(text)


def _solution_doc(status: str, lines=(), order=None, best_g=None, resolution=None) -> dict:
    return {
        "status": status,
        "lines": [{"a": l.a, "b": l.b, "c": l.c} for l in lines],
        "certificate": {"order": list(order)} if order is not None else None,
        "diagnostics": {
            "best_g": None if best_g is None or not math.isfinite(best_g) else best_g,
            "resolution": resolution,
        },
    }


def cmd_generate(args) -> int:
    if args.kind == "construction":
        f = construction.build_construction(args.k, Fraction(args.perturbation))
    elif args.kind == "general-position-points":
        f = construction.general_position_points(args.n)
    else:
        f = construction.pentagon_ck(args.k)
    _write(save_family(f), args.out)
    return EXIT_OK


def cmd_detect(args) -> int:
    f = _read_family(args.inp)
    cert = find_ck(f, args.k)
    if cert is None:
        print(f"C({args.k})-free")
        return EXIT_NEGATIVE
    print(f"C({args.k}) found: {' '.join(map(str, cert.order))}")
    return EXIT_OK


def _resolutions(grid: int) -> tuple[int, ...]:
    res = tuple(m for m in kkm.DEFAULT_RESOLUTIONS if m <= grid)
    return res if res and res[-1] == grid else res + (grid,)


def cmd_pierce(args) -> int:
    f = _read_family(args.inp)
    if args.mode == "exact-min":
        budget = args.budget if args.budget is not None else max(1, args.k - 2)
        sol = min_piercing_lines(f, budget)
        if sol is None:
            print("none within budget")
            _write_json(_solution_doc("none_within_budget"), args.out)
            return EXIT_BUDGET
        print(f"pierced with {len(sol.lines)} line(s)")
        _write_json(_solution_doc("pierced", sol.lines), args.out)
        return EXIT_OK

    cfg = kkm.SearchConfig(resolutions=_resolutions(args.grid), seed=args.seed)
    res = kkm.find_piercing_lines(f, args.k, args.tolerance, cfg)
    diag = res.diagnostics
    if res.status == "pierced":
        doc = _solution_doc("pierced", res.solution.lines, best_g=diag.get("best_g"),
                            resolution=diag.get("resolution"))
        print(f"pierced with {len(res.solution.lines)} line(s)")
        code = EXIT_OK
    elif res.status == "ck_witness":
        doc = _solution_doc("ck_witness", order=res.certificate.order,
                            best_g=diag.get("best_g"), resolution=diag.get("resolution"))
        print(f"C({args.k}) found: {' '.join(map(str, res.certificate.order))}")
        code = EXIT_OK
    else:
        doc = _solution_doc("unresolved", best_g=diag.get("best_g"),
                            resolution=diag.get("resolution"))
        print("unresolved")
        code = EXIT_UNRESOLVED
    _write_json(doc, args.out)
    return code


def _write_json(doc: dict, out: Optional[str]):
    if out:
        Path(out).write_text(json.dumps(doc, indent=1) + "\n")


def cmd_render(args) -> int:
    f = _read_family(args.inp) if args.inp else None
    lines = []
    if args.solution:
        doc = json.loads(Path(args.solution).read_text())
        lines = [Line.from_coefficients(l["a"], l["b"], l["c"]) for l in doc.get("lines", [])]
    chords = boundary = None
    if args.x:
        x = [float(v) for v in args.x.split(",")]
        cs = kkm.chord_system(x, args.k)
        chords, boundary = cs.chords, cs.boundary[:-1]
        if f is not None:
            f, t = scale_to_unit_disk(f)
            lines = [_transform_line(l, t) for l in lines]
    if f is None and chords is None:
        print("render needs --in or --x", file=sys.stderr)
        return EXIT_INPUT
    _write(render(f, lines, chords=chords, boundary=boundary), args.out)
    return EXIT_OK


def _transform_line(line: Line, t) -> Line:
    # p' = s p + d, so a.x + b.y = c becomes a.x' + b.y' = s c + a dx + b dy
    dx, dy = t.translation
    return Line.from_coefficients(line.a, line.b, t.scale * line.c + line.a * dx + line.b * dy)


def cmd_verify_lemmas(args) -> int:
    k = args.k
    f = construction.build_construction(k, Fraction(args.perturbation))
    checks = []
    checks.append((f"family is C({k})-free", find_ck(f, k) is None))
    checks.append((f"family is C({k + 1})-free", find_ck(f, k + 1) is None))
    hits, _ = max_line_hits(f)
    checks.append((f"a line meets at most 6 members (max {hits})", hits <= 6))
    first, _ = max_line_hits(f, through=0)
    checks.append((f"a line through a member meets at most 5 (max {first})", first <= 5))
    budget = math.ceil(k / 2) - 1
    checks.append((f"counting bound rules out {budget} lines", not count_bound_check(f, budget)))
    checks.append((f"no {budget} lines pierce the family",
                   min_piercing_lines(f, budget) is None))
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ckpierce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a family as JSON")
    g.add_argument("kind", choices=["construction", "general-position-points", "pentagon-ck"])
    g.add_argument("--k", type=int, default=5)
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--perturbation", default="1/10")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("detect", help="search a family for a C(k)")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--k", type=int, required=True)
    d.set_defaults(func=cmd_detect)

    q = sub.add_parser("pierce", help="pierce a family with lines")
    q.add_argument("mode", choices=["exact-min", "kkm"])
    q.add_argument("--in", dest="inp", required=True)
    q.add_argument("--k", type=int, default=5)
    q.add_argument("--budget", type=int)
    q.add_argument("--tolerance", type=float, default=kkm.DEFAULT_TOLERANCE)
    q.add_argument("--grid", type=int, default=kkm.DEFAULT_RESOLUTIONS[-1])
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_pierce)

    r = sub.add_parser("render", help="draw a family, a solution or a chord system as SVG")
    r.add_argument("--in", dest="inp")
    r.add_argument("--solution")
    r.add_argument("--x", help="comma-separated simplex point for a chord-system view")
    r.add_argument("--k", type=int, default=5)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify-lemmas", help="check the lower-bound construction")
    v.add_argument("--k", type=int, default=5)
    v.add_argument("--perturbation", default="1/10")
    v.set_defaults(func=cmd_verify_lemmas)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FamilyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
