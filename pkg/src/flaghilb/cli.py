"""Command-line interface; every command prints JSON on stdout.

Words are whitespace-separated tokens; the rightmost token acts first:

    d+  d-  T:i  Tinv:i  z:i  y:i  phi  d*+  zA:i  N  SD  star  L  Linv  toH  toI  toIdual

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import elliptic_hall as eh
from .cache import ENV_VAR, Cache
from .fixed_points import (
    GradeError,
    KVector,
    WordSyntaxError,
    apply_word,
    operator_matrix,
    parse_word,
    pieri_lambda_star,
    pieri_product,
    set_test_mode,
)
from .phi import CALIBRATION, check_triangularity, phi_witness
from .qt import to_text
from .relations import get_relation, relation_ids, run_suite
from .shapes import (
    AIndex,
    FlagPoint,
    InvalidShape,
    add_cell,
    addable_cells,
    bruhat_leq,
    cotangent_flag,
    enumerate_a_indices,
    enumerate_flags,
    from_flag,
    make_flag,
    partition,
    to_flag,
)
from .symfunc import classical_macdonald

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _cells(text: str | None) -> tuple[tuple[int, int], ...]:
    """Cells as ``r,c;r,c;...``."""
    if not text:
        return ()
    out = []
    for chunk in text.split(";"):
        rc = _ints(chunk)
        if len(rc) != 2:
            raise UsageError(f"bad cell {chunk!r}; expected r,c")
        out.append(rc)
    return tuple(out)


def _flag(lam: str | None, order: str | None) -> FlagPoint:
    try:
        return make_flag(partition(_ints(lam)), _cells(order))
    except InvalidShape as e:
        raise UsageError(str(e)) from None


def _aindex(mu: str | None, a: str | None) -> AIndex:
    try:
        return AIndex(partition(_ints(mu)), _ints(a))
    except InvalidShape as e:
        raise UsageError(str(e)) from None


def _grade(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")


def _matrix_json(rows, cols, mat) -> dict:
    return {
        "rows": [p.to_json() for p in rows],
        "cols": [p.to_json() for p in cols],
        "entries": [[to_text(c) for c in row] for row in mat],
    }


# ---------------------------------------------------------------------------
# commands


def cmd_fixed_points(args, cache: Cache):
    _grade(args.n, args.k)
    out = []
    for p in enumerate_flags(args.n, args.k):
        ch = cotangent_flag(p)
        out.append({"flag": p.to_json(), "cotangent": ch.to_text(), "dimension": ch.total(),
                    "dimension_ok": ch.total() == 2 * args.n - args.k and ch.is_effective()})
    ok = all(e["dimension_ok"] for e in out)
    return {"n": args.n, "k": args.k, "count": len(out), "flags": out}, ok


def cmd_apply(args, cache: Cache):
    v = KVector.basis_vector(_flag(args.lam, args.order), args.basis)
    return {"word": args.word, "input": v.to_json(), "output": apply_word(parse_word(args.word), v).to_json()}, True


def cmd_matrix(args, cache: Cache):
    _grade(args.n, args.k)
    parse_word(args.word)
    params = {"word": args.word, "n": args.n, "k": args.k, "basis": args.basis}
    payload = cache.get_or_compute(
        "matrix", params, lambda: _matrix_json(*operator_matrix(args.word, args.n, args.k, args.basis)))
    return {**params, **payload}, True


def cmd_check(args, cache: Cache):
    if args.list:
        return {"relations": relation_ids()}, True
    try:
        specs = [get_relation(r) for r in args.relation] if args.relation else None
    except KeyError as e:
        raise UsageError(f"unknown relation id {e.args[0]!r}") from None
    if args.max_k > args.max_n:
        raise UsageError("need --max-k <= --max-n")
    reports = run_suite(args.max_n, args.max_k, specs)
    failed = [r.to_json() for r in reports if not r.passed]
    return {"max_n": args.max_n, "max_k": args.max_k, "checked": len(reports),
            "passed": not failed, "failures": failed}, not failed


def cmd_pieri(args, cache: Cache):
    lam = partition(_ints(args.lam))
    out = []
    for x in addable_cells(lam):
        lp = add_cell(lam, x)
        a, b = pieri_product(lp, lam), pieri_lambda_star(lp, lam)
        out.append({"lambda_plus": list(lp), "cell": list(x), "product": to_text(a),
                    "lambda_star": to_text(b), "agree": a == b})
    return {"lambda": list(lam), "coefficients": out}, all(e["agree"] for e in out)


def cmd_pmn(args, cache: Cache):
    try:
        eh.staircase(args.m, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    params = {"m": args.m, "n": args.n}
    vec = cache.get_or_compute("pmn", params, lambda: eh.pmn_vacuum(args.m, args.n).to_json())
    out = {**params, "word": str(eh.pmn_word(args.m, args.n)), "vector": vec}
    ok = True
    if args.compare_tableau:
        tab = eh.tableau_vector(args.m, args.n)
        ok = KVector.from_json(vec) == tab
        out["tableau"] = tab.to_json()
        out["agree"] = ok
    return out, ok


def cmd_bijection(args, cache: Cache):
    _grade(args.n, args.k)
    A = enumerate_a_indices(args.n, args.k)
    M = enumerate_flags(args.n, args.k)
    rows = []
    ok = len(A) == len(M)
    for x in A:
        p = to_flag(x, args.n, args.k)
        back = from_flag(p)
        ok &= back == x
        rows.append({"index": x.to_json(), "flag": p.to_json(), "chain": [list(c) for c in p.chain()]})
    return {"n": args.n, "k": args.k, "A_count": len(A), "M_count": len(M), "round_trip": ok,
            "pairs": rows}, ok


def cmd_bruhat(args, cache: Cache):
    x = _aindex(args.x_mu, args.x_a)
    y = _aindex(args.y_mu, args.y_a)
    try:
        res = bruhat_leq(x, y, leading=args.leading)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return {"x": x.to_json(), "y": y.to_json(), "leading": args.leading, "leq": res}, True


def cmd_phi(args, cache: Cache):
    x = _aindex(args.mu, args.a)
    k = len(x.a)
    n = x.size + k
    w = phi_witness(x)
    out = {"n": n, "k": k, **w.to_json()}
    ok = w.leading == x
    if args.check_triangularity:
        params = {"n": n, "k": k, "calibration": CALIBRATION}
        rep = cache.get_or_compute("triangularity", params, lambda: check_triangularity(n, k).to_json())
        out["triangularity"] = rep
        ok &= rep["passed"]
    return out, ok


def cmd_macdonald(args, cache: Cache):
    mu = partition(_ints(args.mu))
    params = {"mu": list(mu)}

    def compute():
        sch = classical_macdonald(mu).to_schur()
        return [{"schur": list(lam), "coeff": to_text(c)} for lam, c in sorted(sch.items(), reverse=True)]

    return {"mu": list(mu), "schur_expansion": cache.get_or_compute("macdonald", params, compute)}, True


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flaghilb", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--cache-dir", type=Path, default=None,
                    help=f"cache directory (default: ${ENV_VAR} or ~/.cache/flaghilb)")
    ap.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    ap.add_argument("--test-mode", action="store_true", help="cross-check closed formulas while computing")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixed-points", help="flags of U_{n,k} with cotangent characters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("apply", help="apply a word to a basis vector")
    p.add_argument("word")
    p.add_argument("--lam", default="", help="partition, e.g. 2,1 (default: empty)")
    p.add_argument("--order", default="", help="strip cells as r,c;r,c (box_1 first)")
    p.add_argument("--basis", choices=("H", "I", "Idual"), default="H")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("matrix", help="matrix of a word on U_{n,k}")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", choices=("H", "I", "Idual"), default="H")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("check", help="run the relation suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--relation", action="append", default=[], help="relation id (repeatable)")
    p.add_argument("--list", action="store_true", help="list relation ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pieri", help="Pieri coefficients d_{lam+x, lam}")
    p.add_argument("--lam", default="")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("pmn", help="P_{m,n} applied to the vacuum")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--compare-tableau", action="store_true")
    p.set_defaults(func=cmd_pmn)

    p = sub.add_parser("bijection", help="A(n,k) <-> M(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("bruhat", help="compare two indices of A(n,k)")
    p.add_argument("--x-mu", default="")
    p.add_argument("--x-a", default="")
    p.add_argument("--y-mu", default="")
    p.add_argument("--y-a", default="")
    p.add_argument("--leading", action="store_true", help="use the leading-term orientation")
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("phi", help="image of v_{mu,a} in the fixed-point basis")
    p.add_argument("--mu", default="")
    p.add_argument("--a", default="")
    p.add_argument("--check-triangularity", action="store_true")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("macdonald", help="modified Macdonald polynomial in the Schur basis")
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_macdonald)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    set_test_mode(args.test_mode)
    try:
        payload, ok = args.func(args, cache)
    except (UsageError, WordSyntaxError, GradeError) as e:
        json.dump({"error": type(e).__name__, "message": str(e),
                   **({"position": e.position} if isinstance(e, WordSyntaxError) else {})},
                  sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
        return EXIT_USAGE
    finally:
        set_test_mode(False)
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
