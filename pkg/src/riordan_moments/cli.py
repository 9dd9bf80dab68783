"""Command-line interface: ``riordan-moments`` / ``python -m riordan_moments``.

Exit codes: 0 ok, 2 pipeline or usage error, 3 zero Hankel determinant,
4 non-polynomial result, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cf import (
    JFraction,
    ScalingSequence,
    cf_map,
    get_scaling,
    jfraction_to_series,
    series_to_jfraction,
)
from .errors import NetworkDisabled, NonPolynomialResult, RiordanError, ZeroHankel
from .eulerian import (
    EulerianParams,
    G_series,
    eulerian_egf,
    symmetric_eulerian_egf,
    symmetric_image_triangle,
    eulerian_orthogonal_array,
    triangle_from_bivariate,
)
from .fixtures import FetchConfig, NotFound, load_fixture, oeis_fetch
from .gfspec import GfSpec, SpecError, rational_series, parse_number_list, parse_rational, resolve
from .kernel import RatFunc
from .riordan import (
    OrthoPolyParams,
    RiordanPair,
    production_matrix,
    riordan_inverse,
    riordan_matrix,
)
from .transforms import EgfSeries, OgfSeries, sumudu, transform_T, transform_T_inv
from .verify import SUITES, run_suite

EXIT_OK, EXIT_PIPELINE, EXIT_HANKEL, EXIT_NONPOLY, EXIT_MISMATCH = 0, 2, 3, 4, 5
DEFAULT_ORDER = 16
MAX_ORDER = 64


class UsageError(RiordanError):
    pass


# output ----------------------------------------------------------------------

def to_json_value(c):
    if isinstance(c, RatFunc):
        return str(c) if not c.is_polynomial() else _poly_json(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def _poly_json(c: RatFunc):
    p = c.as_poly()
    if p.is_constant():
        return to_json_value(p.constant())
    return str(c)


def fmt(c) -> str:
    # polynomials print without spaces so sequence output stays whitespace-separated
    return str(to_json_value(c)).replace(" ", "")


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _jfraction_payload(J: JFraction) -> dict:
    return {"alpha": [to_json_value(a) for a in J.alpha], "beta": [to_json_value(b) for b in J.beta]}


def _jfraction_text(J: JFraction) -> str:
    return "alpha " + " ".join(fmt(a) for a in J.alpha) + "\nbeta " + " ".join(fmt(b) for b in J.beta)


def _rows_text(rows) -> str:
    return "\n".join(" ".join(fmt(c) for c in r) for r in rows)


# input -------------------------------------------------------------------------

def _pair(text: str) -> tuple[Fraction, Fraction]:
    vals = parse_number_list(text)
    if len(vals) != 2:
        raise SpecError(f"expected two numbers 'a,b', got {text!r}")
    return vals[0], vals[1]


def add_spec_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("input (choose one)")
    g.add_argument("--egf-rational", metavar="EXPR", help="rational function read as an EGF")
    g.add_argument("--ogf-rational", metavar="EXPR", help="rational function read as an OGF")
    g.add_argument("--num", metavar="LIST", help="numerator coefficients, e.g. 1,-1")
    g.add_argument("--den", metavar="LIST", help="denominator coefficients (default 1)")
    g.add_argument("--fixture", metavar="ID", help="embedded OEIS fixture, e.g. A000670")
    g.add_argument("--alpha", metavar="LIST", help="J-fraction alpha_0, alpha_1, ...")
    g.add_argument("--beta", metavar="LIST", help="J-fraction beta_1, beta_2, ...")
    g.add_argument("--eulerian", metavar="A,B", help="the Eulerian family at (a, b)")
    g.add_argument("--spec", metavar="JSON", help="a GfSpec as JSON")


def spec_from_args(args) -> tuple[GfSpec, str | None]:
    """The GfSpec named on the command line and the reading it forces, if any."""
    found = []
    if args.egf_rational is not None:
        found.append((GfSpec.from_infix(args.egf_rational), "egf"))
    if args.ogf_rational is not None:
        found.append((GfSpec.from_infix(args.ogf_rational), "ogf"))
    if args.num is not None:
        found.append((GfSpec.from_lists(args.num, args.den or "1"), None))
    elif args.den is not None:
        raise UsageError("--den needs --num")
    if args.fixture is not None:
        found.append((GfSpec(fixture=args.fixture.upper()), None))
    if args.alpha is not None or args.beta is not None:
        found.append((GfSpec.from_jfraction(args.alpha or "", args.beta or ""), None))
    if args.eulerian is not None:
        found.append((GfSpec(eulerian=_pair(args.eulerian)), None))
    if args.spec is not None:
        found.append((GfSpec.from_json(args.spec), None))
    if len(found) != 1:
        raise UsageError("give exactly one input: --egf-rational, --ogf-rational, --num/--den, "
                         "--fixture, --alpha/--beta, --eulerian or --spec")
    return found[0]


def _check_order(n: int) -> int:
    if n < 1:
        raise UsageError("order must be positive")
    if n > MAX_ORDER:
        raise UsageError(f"order {n} exceeds the maximum of {MAX_ORDER}")
    return n


# commands ----------------------------------------------------------------------

def cmd_transform(args) -> int:
    spec, forced = spec_from_args(args)
    want = "egf" if args.direction == "T" else "ogf"
    if forced and forced != want:
        raise UsageError(f"{args.direction} takes an {want.upper()} input, got --{forced}-rational")
    n = _check_order(args.n or args.order)
    src = resolve(spec, n, want)
    out = transform_T(src) if args.direction == "T" else transform_T_inv(src)
    terms = out.terms()
    _emit(args, " ".join(fmt(t) for t in terms), {
        "direction": args.direction,
        "input": spec.to_dict(),
        "terms": [to_json_value(t) for t in terms],
    })
    return EXIT_OK


def _scaling(args) -> ScalingSequence:
    if args.weights:
        return ScalingSequence.custom(parse_number_list(args.weights))
    return get_scaling(args.scaling)


def cmd_cf(args) -> int:
    if args.action == "extract":
        spec, forced = spec_from_args(args)
        n = _check_order(args.order if args.depth is None else max(2 * args.depth, 1))
        s = resolve(spec, n, forced or "ogf")
        if isinstance(s, EgfSeries):
            s = sumudu(s)
        J = series_to_jfraction(s, args.depth)
        _emit(args, _jfraction_text(J), _jfraction_payload(J))
        return EXIT_OK

    spec, _ = spec_from_args(args)
    if spec.variant != "jfraction":
        raise UsageError(f"cf {args.action} needs a J-fraction (--alpha/--beta)")
    J = JFraction(*spec.jfraction)
    if args.action == "evaluate":
        n = _check_order(args.n or min(args.order, J.trusted_order))
        terms = jfraction_to_series(J, n).terms()
        _emit(args, " ".join(fmt(t) for t in terms), {"terms": [to_json_value(t) for t in terms]})
        return EXIT_OK
    out = cf_map(J, args.direction, _scaling(args))
    _emit(args, _jfraction_text(out), _jfraction_payload(out))
    return EXIT_OK


def _riordan_from_args(args, order: int) -> RiordanPair:
    if args.ortho:
        vals = parse_number_list(args.ortho)
        if len(vals) != 4:
            raise UsageError("--ortho takes lam,mu,alpha,beta")
        return OrthoPolyParams(*vals).riordan_pair(order)
    if args.eulerian:
        a, b = _pair(args.eulerian)
        return eulerian_orthogonal_array(EulerianParams(a, b, order))
    if args.g is None or args.f is None:
        raise UsageError("give --g and --f, --ortho, or --eulerian")
    g = rational_series(*parse_rational(args.g), order)
    f = rational_series(*parse_rational(args.f), order)
    return RiordanPair(g, f, args.flavor)


def cmd_riordan(args) -> int:
    rows = _check_order(args.rows)
    need = rows + 2 if args.action == "production" else rows
    R = _riordan_from_args(args, need)
    if args.action == "matrix":
        out = [list(r) for r in riordan_matrix(R, rows).rows]
    elif args.action == "inverse":
        out = [list(r) for r in riordan_matrix(riordan_inverse(R), rows).rows]
    elif args.action == "production":
        P = production_matrix(R, rows + 1)
        out = [list(P[n][: n + 2]) for n in range(rows)]
    else:
        first = riordan_matrix(riordan_inverse(R), rows).column(0)
        _emit(args, " ".join(fmt(t) for t in first), {"terms": [to_json_value(t) for t in first]})
        return EXIT_OK
    _emit(args, _rows_text(out), [[to_json_value(c) for c in r] for r in out])
    return EXIT_OK


def cmd_triangle(args) -> int:
    rows = _check_order(args.rows)
    fam = args.family
    if fam in ("eulerian", "G"):
        p = EulerianParams(Fraction(args.a), Fraction(args.b), rows)
        src = eulerian_egf(p) if fam == "eulerian" else G_series(p)
        tri = triangle_from_bivariate(src)
    elif fam == "symmetric":
        tri = triangle_from_bivariate(symmetric_eulerian_egf(rows))
    else:
        tri = symmetric_image_triangle(rows)
    _emit(args, _rows_text(tri.rows), [[to_json_value(c) for c in r] for r in tri.rows])
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    failed = [c for c in checks if not c.ok]
    if args.json:
        print(json.dumps({
            "suite": args.suite,
            "ok": not failed,
            "checks": [
                {"name": c.name, "ok": c.ok, "finding": c.finding, "detail": c.detail} for c in checks
            ],
        }))
    else:
        for c in checks:
            print(c.line())
        passed = sum(1 for c in checks if c.ok and not c.finding)
        print(f"{passed} passed, {len(failed)} failed, {sum(c.finding for c in checks)} findings")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_fetch(args) -> int:
    cfg = FetchConfig()
    if args.offline:
        cfg.allow_network = False
    oeis_id = args.id.upper()
    source = "cache/network"
    try:
        fx = oeis_fetch(oeis_id, cfg)
    except NetworkDisabled:
        try:
            fx = load_fixture(oeis_id)
        except NotFound:
            raise NetworkDisabled(f"{oeis_id} is neither cached nor embedded, and network access is off") from None
        source = "embedded"
    terms = fx.terms[: args.n] if args.n else fx.terms
    if args.json:
        print(json.dumps({"oeis_id": fx.oeis_id, "offset": fx.offset, "source": source, "terms": list(terms)}))
    else:
        print(f"# {fx.oeis_id} offset {fx.offset} ({source})")
        print(" ".join(str(t) for t in terms))
    return EXIT_OK


# parser ------------------------------------------------------------------------

def _order_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be between 1 and {MAX_ORDER}")
    return n


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--order", type=_order_arg, default=argparse.SUPPRESS,
                        help=f"truncation order (default {DEFAULT_ORDER}, max {MAX_ORDER})")
    common.add_argument("--offline", action="store_true", default=argparse.SUPPRESS,
                        help="never touch the network")

    parser = argparse.ArgumentParser(
        prog="riordan-moments",
        description="Exact transforms of Riordan moment sequences.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common], help="apply T or T_inv to a series")
    add_spec_args(p)
    p.add_argument("--direction", choices=["T", "T_inv"], default="T")
    p.add_argument("-n", type=_order_arg, help="number of terms (default: --order)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("cf", parents=[common], help="J-fraction extract / evaluate / map")
    p.add_argument("action", choices=["extract", "evaluate", "map"])
    add_spec_args(p)
    p.add_argument("--depth", type=_order_arg, help="J-fraction depth for extract")
    p.add_argument("-n", type=_order_arg, help="number of terms for evaluate")
    p.add_argument("--direction", choices=["T", "T_inv"], default="T_inv")
    p.add_argument("--scaling", default="squares", help="beta scaling: squares or triangular")
    p.add_argument("--weights", metavar="LIST", help="custom beta weights w_1, w_2, ...")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("riordan", parents=[common], help="Riordan array computations")
    p.add_argument("action", choices=["matrix", "inverse", "production", "moments"])
    p.add_argument("--g", metavar="EXPR")
    p.add_argument("--f", metavar="EXPR")
    p.add_argument("--flavor", choices=["ordinary", "exponential"], default="ordinary")
    p.add_argument("--ortho", metavar="LAM,MU,ALPHA,BETA",
                   help="((1+lam x+mu x^2)/(1+alpha x+beta x^2), x/(1+alpha x+beta x^2))")
    p.add_argument("--eulerian", metavar="A,B", help="exponential array whose moments are E(x,y;a,b)")
    p.add_argument("--rows", type=_order_arg, default=6)
    p.set_defaults(func=cmd_riordan)

    p = sub.add_parser("triangle", parents=[common], help="print a number triangle")
    p.add_argument("--family", choices=["eulerian", "G", "symmetric", "symmetric-image"], required=True)
    p.add_argument("--a", default="0")
    p.add_argument("--b", default="1")
    p.add_argument("--rows", type=_order_arg, default=6)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", parents=[common], help="run reproduction checks")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fetch", parents=[common], help="fetch an OEIS b-file into the cache")
    p.add_argument("id")
    p.add_argument("-n", type=int, help="print only the first n terms")
    p.set_defaults(func=cmd_fetch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.order = getattr(args, "order", DEFAULT_ORDER)
    args.offline = getattr(args, "offline", False)
    try:
        return args.func(args)
    except ZeroHankel as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_HANKEL
    except NonPolynomialResult as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NONPOLY
    except (RiordanError, ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
