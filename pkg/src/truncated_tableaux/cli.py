"""Command-line front end.

Shapes are written as one of::

    shifted:delta(N)\\delta(K)
    rect(M,N)                   M rows of length N
    rect(M,N)\\delta(K)
    rect(M,N)\\almostsq(K)
    straight:[l1,l2,...]\\[m1,...]
    shifted:[l1,l2,...]\\[m1,...]

Exit status: 0 success, 1 bad input, 2 verification failure or disagreement,
3 unsupported family or suite, 4 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import enum
import json
import re
import sys
import time
from dataclasses import dataclass

from . import formulas as F
from .errors import ParseError, TableauxError, TooLarge, UnknownSuite, UnsupportedFamily
from .oracle import DEFAULT_MAX_CELLS, count_syt_oracle, pp_series_oracle
from .phi import SkewSSYT, phi_shifted, phi_shifted_inverse, phi_straight, phi_straight_inverse
from .qseries import DEFAULT_ORDER
from .shapes import Kind, TruncatedShape, almost_square, make_shape, rectangle, staircase
from .symfunc import rsk, rsk_inverse, schensted_stats
from .verify import format_cases, run_suite, suite_passed

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_UNSUPPORTED, EXIT_BUDGET = 0, 1, 2, 3, 4


class Family(str, enum.Enum):
    STAIRCASE_BOX = "staircase-box"
    RECT_STAIRCASE = "rect-staircase"
    RECT_ALMOSTSQ = "rect-almostsq"


@dataclass(frozen=True)
class ShapeSpec:
    shape: TruncatedShape
    family: Family | None = None
    params: tuple[int, ...] = ()

    def canonical(self) -> str:
        if self.family is Family.STAIRCASE_BOX:
            return f"shifted:delta({self.params[0]})\\delta(1)"
        if self.family is Family.RECT_STAIRCASE:
            n, m, k = self.params
            return f"rect({m},{n})\\delta({k})"
        if self.family is Family.RECT_ALMOSTSQ:
            n, m, k = self.params
            return f"rect({m},{n})\\almostsq({k})"
        return self.shape.describe()


_INT_LIST = r"\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]"
_PATTERNS = [
    ("delta", re.compile(r"shifted:delta\((\d+)\)\\delta\((\d+)\)")),
    ("rect_delta", re.compile(r"rect\((\d+),\s*(\d+)\)\\delta\((\d+)\)")),
    ("rect_almostsq", re.compile(r"rect\((\d+),\s*(\d+)\)\\almostsq\((\d+)\)")),
    ("rect", re.compile(r"rect\((\d+),\s*(\d+)\)")),
    ("explicit", re.compile(r"(straight|shifted):" + _INT_LIST + r"(?:\\" + _INT_LIST + r")?")),
]


def _ints(group: str | None) -> tuple[int, ...]:
    return tuple(int(x) for x in group.split(",")) if group else ()


def classify(shape: TruncatedShape) -> ShapeSpec:
    """Recognise the three families with closed forms, whatever the spelling.

    ``almostsq(2)`` and ``delta(2)`` are the same partition; such shapes are
    reported as rectangle-minus-staircase.
    """
    lam, mu = shape.outer.parts, shape.trunc.parts
    if shape.kind is Kind.SHIFTED:
        n = len(lam)
        if n >= 2 and lam == staircase(n).parts and mu == (1,):
            return ShapeSpec(shape, Family.STAIRCASE_BOX, (n,))
        return ShapeSpec(shape)
    if lam and len(set(lam)) == 1:
        n, m = lam[0], len(lam)
        k = len(mu)
        if mu == staircase(k).parts and k < min(n, m):
            return ShapeSpec(shape, Family.RECT_STAIRCASE, (n, m, k))
        for k in range(2, min(n, m) + 1):
            if mu == almost_square(k).parts and 2 * k <= min(n, m) + 1:
                return ShapeSpec(shape, Family.RECT_ALMOSTSQ, (n, m, k))
    return ShapeSpec(shape)


def parse_shape(text: str) -> ShapeSpec:
    text = text.strip()
    try:
        for kind, pat in _PATTERNS:
            mt = pat.fullmatch(text)
            if not mt:
                continue
            if kind == "delta":
                n, k = int(mt[1]), int(mt[2])
                return classify(make_shape(staircase(n), staircase(k), Kind.SHIFTED))
            if kind == "rect":
                return classify(make_shape(rectangle(int(mt[2]), int(mt[1]))))
            if kind == "rect_delta":
                m, n, k = int(mt[1]), int(mt[2]), int(mt[3])
                return classify(make_shape(rectangle(n, m), staircase(k)))
            if kind == "rect_almostsq":
                m, n, k = int(mt[1]), int(mt[2]), int(mt[3])
                return classify(make_shape(rectangle(n, m), almost_square(k)))
            return classify(make_shape(_ints(mt[2]), _ints(mt[3]), Kind(mt[1])))
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc
    raise ParseError(f"cannot parse shape {text!r}")


# -- counting ------------------------------------------------------------------------


def _count(spec: ShapeSpec, method: F.Method, max_cells: int) -> int:
    if method is F.Method.ORACLE:
        return count_syt_oracle(spec.shape, max_cells)
    fam, p = spec.family, spec.params
    if fam is None:
        raise UnsupportedFamily(f"no closed form for {spec.canonical()}")
    if method is F.Method.FORMULA:
        if fam is Family.STAIRCASE_BOX:
            return F.count_staircase_minus_box(*p)
        if fam is Family.RECT_STAIRCASE:
            return F.count_rect_minus_staircase(*p)
        return F.count_rect_minus_almost_square(*p)
    if fam is Family.STAIRCASE_BOX:
        if p[0] < 3:
            raise UnsupportedFamily("the limit path needs n >= 3")
        return F.count_staircase_minus_box_limit(*p)
    if fam is Family.RECT_STAIRCASE:
        return F.count_rect_minus_staircase_limit(*p)
    return F.count_rect_minus_almost_square_limit(*p)


def _timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, round((time.perf_counter() - t0) * 1000, 3)


def cmd_count(spec: ShapeSpec, method: str, max_cells: int) -> tuple[dict, int]:
    if method != "all":
        m = F.Method(method)
        value, ms = _timed(_count, spec, m, max_cells)
        return {"shape": spec.canonical(), "method": m.value, "count": str(value), "elapsed_ms": ms}, EXIT_OK
    results, status = [], EXIT_OK
    for m in F.Method:
        try:
            value, ms = _timed(_count, spec, m, max_cells)
            results.append({"method": m.value, "count": str(value), "elapsed_ms": ms})
        except UnsupportedFamily as exc:
            results.append({"method": m.value, "error": "unsupported", "detail": str(exc)})
            status = max(status, EXIT_UNSUPPORTED)
        except TooLarge as exc:
            results.append({"method": m.value, "error": "too-large", "detail": str(exc)})
            status = max(status, EXIT_BUDGET)
    counts = {r["count"] for r in results if "count" in r}
    agreement = all("count" in r for r in results) and len(counts) == 1
    if status == EXIT_OK and not agreement:
        status = EXIT_FAIL
    record = {"shape": spec.canonical(), "method": "all", "results": results, "agreement": agreement}
    return record, status


def _closed_series(spec: ShapeSpec, order: int):
    fam, p = spec.family, spec.params
    if fam is Family.STAIRCASE_BOX and p[0] >= 3:
        return F.gf_staircase_minus_box(p[0], order)
    if fam is Family.RECT_STAIRCASE and p[0] <= p[1]:
        return F.gf_rect_minus_staircase(*p, order)
    if fam is Family.RECT_ALMOSTSQ and p[0] <= p[1]:
        return F.gf_rect_minus_almost_square(*p, order)
    raise UnsupportedFamily(f"no closed-form series for {spec.canonical()}")


def cmd_gf(spec: ShapeSpec, order: int, method: str, max_cells: int) -> tuple[object, int]:
    def oracle():
        if spec.shape.size > max_cells:
            raise TooLarge(f"{spec.shape.size} cells exceeds the oracle budget of {max_cells}")
        return pp_series_oracle(spec.shape, order)

    if method == "closed":
        return [str(c) for c in _closed_series(spec, order).coeffs], EXIT_OK
    if method == "oracle":
        return [str(c) for c in oracle().coeffs], EXIT_OK
    closed, orc = _closed_series(spec, order), oracle()
    agreement = closed == orc
    record = {
        "shape": spec.canonical(),
        "order": order,
        "closed": [str(c) for c in closed.coeffs],
        "oracle": [str(c) for c in orc.coeffs],
        "agreement": agreement,
    }
    return record, EXIT_OK if agreement else EXIT_FAIL


# -- bijections ------------------------------------------------------------------------


def _read_json(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _tableau_json(P: SkewSSYT) -> dict:
    return {"outer": list(P.outer.parts), "inner": list(P.inner.parts), "rows": [list(r) for r in P.rows]}


def _tableau_from_json(obj) -> SkewSSYT:
    try:
        return SkewSSYT(tuple(obj.get("outer", ())), tuple(obj.get("inner", ())), tuple(map(tuple, obj["rows"])))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed tableau: {exc}") from exc


def cmd_phi(data, kind: str, inverse: bool) -> dict:
    if not inverse:
        filling = data["filling"] if isinstance(data, dict) else data
        if kind == "shifted":
            P = phi_shifted(filling)
            out = {"P": _tableau_json(P)}
            out["roundtrip"] = [list(r) for r in phi_shifted_inverse(P, len(filling), len(filling) - len(filling[0]))] == filling
            return out
        P, Q = phi_straight(filling)
        m, n = len(filling), len(filling[-1])
        back = phi_straight_inverse(P, Q, n, m, n - len(filling[0]))
        return {"P": _tableau_json(P), "Q": _tableau_json(Q), "roundtrip": [list(r) for r in back] == filling}
    try:
        P = _tableau_from_json(data["P"])
        if kind == "shifted":
            T = phi_shifted_inverse(P, int(data["n"]), int(data["k"]))
            return {"filling": [list(r) for r in T], "roundtrip": phi_shifted(T, int(data["n"]), int(data["k"])) == P}
        Q = _tableau_from_json(data["Q"])
        n, m, k = int(data["n"]), int(data["m"]), int(data["k"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing field {exc}") from exc
    T = phi_straight_inverse(P, Q, n, m, k)
    return {"filling": [list(r) for r in T], "roundtrip": phi_straight(T, n, m, k) == (P, Q)}


def cmd_rsk(data, inverse: bool) -> dict:
    if not inverse:
        A = data["matrix"] if isinstance(data, dict) else data
        if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
            raise ParseError("expected a matrix as a list of rows")
        P, Q = rsk(A)
        inc, dec = schensted_stats(A)
        size = (len(A), len(A[0]) if A else 0)
        return {
            "P": [list(r) for r in P],
            "Q": [list(r) for r in Q],
            "shape": [len(r) for r in P],
            "longest_weakly_increasing": inc,
            "longest_strictly_decreasing": dec,
            "roundtrip": rsk_inverse(P, Q, size) == A,
        }
    try:
        P, Q = data["P"], data["Q"]
        size = tuple(data["size"]) if "size" in data else None
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing field {exc}") from exc
    A = rsk_inverse(P, Q, size)
    P2, Q2 = rsk(A)
    return {"matrix": A, "roundtrip": [list(r) for r in P2] == P and [list(r) for r in Q2] == Q}


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="truncated-tableaux", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count standard fillings of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--method", default="formula", choices=[m.value for m in F.Method] + ["all"])
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gf", help="coefficients of the plane-partition generating function")
    p.add_argument("--shape", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--method", default="closed", choices=["closed", "oracle", "all"])
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-cells", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")

    for name, helptext in (("phi", "diagonal decomposition of a plane partition"), ("rsk", "RSK on a matrix")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--input", default="-", help="JSON file, '-' for stdin")
        p.add_argument("--output", default="-", help="JSON file, '-' for stdout")
        p.add_argument("--inverse", action="store_true")
        if name == "phi":
            p.add_argument("--kind", choices=["shifted", "straight"], default="shifted")
    return ap


def _emit(obj, path: str = "-", as_json: bool = True) -> None:
    text = json.dumps(obj, sort_keys=True) if as_json else str(obj)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _human_count(record: dict) -> str:
    if record["method"] != "all":
        return f"{record['shape']}  {record['method']}: {record['count']}"
    lines = [record["shape"]]
    for r in record["results"]:
        lines.append(f"  {r['method']}: {r.get('count', r.get('error'))}")
    lines.append(f"  agreement: {str(record['agreement']).lower()}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "count":
            record, status = cmd_count(parse_shape(args.shape), args.method, args.max_cells)
            _emit(record if args.json else _human_count(record), as_json=args.json)
            return status
        if args.command == "gf":
            out, status = cmd_gf(parse_shape(args.shape), args.order, args.method, args.max_cells)
            _emit(out)
            return status
        if args.command == "verify":
            cases = run_suite(args.suite, max_n=args.max_n, max_cells=args.max_cells, order=args.order)
            ok = suite_passed(cases)
            if args.json:
                _emit({"suite": args.suite, "passed": ok, "cases": [c.__dict__ for c in cases]})
            else:
                print(format_cases(cases))
                print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
            return EXIT_OK if ok else EXIT_FAIL
        data = _read_json(args.input)
        if args.command == "phi":
            _emit(cmd_phi(data, args.kind, args.inverse), args.output)
        else:
            _emit(cmd_rsk(data, args.inverse), args.output)
        return EXIT_OK
    except (UnsupportedFamily, UnknownSuite) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except TooLarge as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TableauxError, ValueError, KeyError, TypeError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
