"""Reproduction suites run by ``riordan-moments verify``.

Each suite is a list of named checks against the embedded fixtures.  A check
marked as a *finding* reports an observation and never fails the suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .cf import JFraction, cf_map, jfraction_to_series, series_to_jfraction
from .eulerian import (
    E_jfraction,
    EulerianParams,
    G_jfraction,
    G_series,
    eulerian_egf,
    eulerian_ortho_params,
    symmetric_eulerian_egf,
    symmetric_image_triangle,
    triangle_from_bivariate,
)
from .fixtures import load_fixture, load_triangle, verify_sequence
from .riordan import (
    EXPONENTIAL,
    OrthoPolyParams,
    RiordanPair,
    moments_ordinary,
    production_matrix,
    riordan_matrix,
)
from .series import Series, exp_linear, series_mul, series_recip, shift_revert, trig_pair_scaled
from .transforms import EgfSeries, OgfSeries, invert_transform, sumudu, transform_T, transform_T_inv

# (EGF fixture, OGF fixture, leading OGF-fixture terms to drop)
TRANSFORM_PAIRS = [
    ("A000142", "A000108", 0),
    ("A049774", "A001006", 0),
    ("A097899", "A005043", 0),
    ("A000670", "A001003", 0),
    ("A001586", "A052709", 1),
    ("A000629", "A006318", 0),
]

# triangle fixture -> how to compute it
TRIANGLE_SOURCES: dict[str, Callable[[int], object]] = {
    "A123125": lambda n: triangle_from_bivariate(eulerian_egf(EulerianParams(0, 1, n))),
    "A173018": lambda n: triangle_from_bivariate(eulerian_egf(EulerianParams(1, 1, n))),
    "A060187": lambda n: triangle_from_bivariate(eulerian_egf(EulerianParams(1, 2, n))),
    "A090181": lambda n: triangle_from_bivariate(G_series(EulerianParams(0, 1, n))),
    "A131198": lambda n: triangle_from_bivariate(G_series(EulerianParams(1, 1, n))),
    "G-1-2": lambda n: triangle_from_bivariate(G_series(EulerianParams(1, 2, n))),
    "A008292": lambda n: triangle_from_bivariate(symmetric_eulerian_egf(n)),
    "symmetric-image": symmetric_image_triangle,
}

EULERIAN_GRID = [(0, 1), (1, 1), (1, 2), (2, 3)]

A064641_IMAGE = [1, 2, 7, 35, 232, 1919, 19045, 220502, 2917663, 43431983]
A111961_CF_IMAGE = [1, 2, 6, 22, 94, 454, 2454, 14766, 98678, 730422]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    finding: bool = False

    def line(self) -> str:
        tag = "INFO" if self.finding else ("PASS" if self.ok else "FAIL")
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def _seq(a, b) -> str:
    return " ".join(str(v) for v in a) + " vs " + " ".join(str(v) for v in b)


def _compare(name: str, got, want) -> Check:
    got, want = list(got), list(want)
    if got == want:
        return Check(name, True, f"{len(want)} terms match")
    return Check(name, False, _seq(got, want))


def _finding(name: str, formal, cf_img) -> Check:
    formal, cf_img = list(formal), list(cf_img)
    if formal == cf_img:
        return Check(name, True, "agree", finding=True)
    i = next(i for i, (u, v) in enumerate(zip(formal, cf_img)) if u != v)
    return Check(name, True, f"differ from index {i}: " + " ".join(map(str, formal)), finding=True)


# suites ----------------------------------------------------------------------

def suite_transform_pairs() -> Iterator[Check]:
    for egf_id, ogf_id, skip in TRANSFORM_PAIRS:
        src, dst = load_fixture(egf_id), load_fixture(ogf_id)
        n = min(len(src), len(dst) - skip)
        out = transform_T(EgfSeries.from_terms(src.terms[:n], n))
        rep = verify_sequence(out, dst, skip=skip)
        yield Check(f"T {egf_id} -> {ogf_id}", rep.ok and rep.compared == n, str(rep))


def suite_triangles() -> Iterator[Check]:
    for name, build in TRIANGLE_SOURCES.items():
        fx = load_triangle(name)
        rows = [list(r) for r in fx.rows]
        got = build(len(rows)).as_int_rows()
        ok = got == rows
        yield Check(f"triangle {name}", ok, f"{len(rows)} rows" if ok else f"got {got}")
    lag = load_triangle("A021009")
    R = RiordanPair(
        series_recip(Series([1, 1], len(lag.rows))),
        series_mul(Series.x(len(lag.rows)), series_recip(Series([1, 1], len(lag.rows)))),
        EXPONENTIAL,
    )
    got = [[int(c) for c in r] for r in riordan_matrix(R).rows]
    yield Check("triangle A021009", got == [list(r) for r in lag.rows], f"{len(got)} rows")


def suite_closed_form(order: int = 9) -> Iterator[Check]:
    for a, b in EULERIAN_GRID:
        p = EulerianParams(a, b, order)
        got = transform_T(eulerian_egf(p)).series
        yield Check(f"T(E) = G for (a,b)=({a},{b})", got == G_series(p).series, f"order {order}")
        moments = moments_ordinary(eulerian_ortho_params(p), order).series
        yield Check(f"G = moments of the orthogonal array ({a},{b})", moments == G_series(p).series)


def suite_continued_fractions(depth: int = 4) -> Iterator[Check]:
    N = 2 * depth
    for a, b in EULERIAN_GRID:
        p = EulerianParams(a, b, N)
        J = series_to_jfraction(G_series(p), depth)
        yield Check(f"G({a},{b}) J-fraction", J == G_jfraction(p, depth), f"depth {depth}")
        Je = series_to_jfraction(sumudu(eulerian_egf(p)), depth)
        yield Check(f"S(E({a},{b})) J-fraction", Je == E_jfraction(p, depth), f"depth {depth}")
        mapped = cf_map(G_jfraction(p, depth), "T_inv")
        yield Check(f"cf_map T_inv on G({a},{b})", mapped == Je)

    for src, dst in (("A001006", "A049774"), ("A005043", "A097899")):
        fs, fd = load_fixture(src), load_fixture(dst)
        n = min(len(fs), len(fd))
        S = OgfSeries.from_terms(fs.terms[:n], n)
        pipeline = transform_T_inv(S).terms()
        J = series_to_jfraction(S, n // 2)
        via_cf = EgfSeries(  # T_inv output is an EGF; its OGF is the mapped fraction
            Series.from_egf_terms(jfraction_to_series(cf_map(J, "T_inv"), n).terms(), n)
        ).terms()
        yield _compare(f"T_inv {src} -> {dst} (pipeline)", pipeline, fd.terms[:n])
        yield _compare(f"T_inv {src} -> {dst} (cf map)", via_cf, pipeline)


def reversion_moments(alpha, beta, gamma, order: int) -> tuple[Series, Series]:
    """(moments of the array, reversion formula) for the radical-free array."""
    p = OrthoPolyParams(-alpha, 0, beta, gamma)
    moments = moments_ordinary(p, order, method="inverse").series
    g = series_mul(
        Series([1, alpha], order),
        series_recip(Series([1, beta + 2 * alpha, alpha * alpha + alpha * beta + gamma], order)),
    )
    return moments, shift_revert(g)


def trig_reconstruction(alpha, beta, gamma, order: int) -> EgfSeries:
    """``exp((2 alpha + beta) t/2) / (C - beta S)`` with ``(C, S)`` at ``s = beta^2 - 4 gamma``."""
    s = Fraction(beta) ** 2 - 4 * Fraction(gamma)
    C, S = trig_pair_scaled(s, Series.x(order).scale(Fraction(1, 2)))
    num = exp_linear(Fraction(2 * alpha + beta, 2), order)
    return EgfSeries(series_mul(num, series_recip(C - S.scale(beta))))


def mu_zero(alpha, beta, gamma, order: int) -> OgfSeries:
    J = JFraction.from_rules(
        lambda k: beta + alpha if k == 0 else beta, lambda k: gamma, order // 2 + 1
    )
    return jfraction_to_series(J, order)


def suite_examples() -> Iterator[Check]:
    # T(A052186) = INVERT(-1)(A129775), with T taken at the CF level
    a052186, a129775 = load_fixture("A052186"), load_fixture("A129775")
    n = min(len(a052186), len(a129775))
    J = series_to_jfraction(OgfSeries.from_terms(a052186.terms[:n], n), n // 2)
    cf_img = jfraction_to_series(cf_map(J, "T"), n).terms()
    rhs = invert_transform(OgfSeries.from_terms(a129775.terms[:n], n), -1).terms()
    yield _compare("T(A052186) = INVERT(-1)(A129775) (cf map)", cf_img, rhs)
    J0 = JFraction.from_rules(lambda k: (0, 3)[k] if k < 2 else 2, lambda k: 1, n // 2)
    yield _compare("cf map of A052186 is J(0,3,2,2,...;1,1,...)", cf_map(J, "T").alpha, J0.alpha)
    formal = transform_T(EgfSeries.from_terms(a052186.terms[:n], n)).terms()
    yield _finding("A052186 formal pipeline vs cf-map", formal, cf_img)

    # A064641 under T_inv, and the closed form
    fx = load_fixture("A064641")
    img = transform_T_inv(OgfSeries.from_terms(fx.terms, len(fx))).terms()
    yield _compare("T_inv A064641", img, A064641_IMAGE)
    yield _compare("A064641 image closed form", trig_reconstruction(-1, 3, 3, 10).terms(), A064641_IMAGE)

    # CF-level image of A111961; the formal pipeline is reported
    fx = load_fixture("A111961")
    n = len(fx)
    S = OgfSeries.from_terms(fx.terms, n)
    J = series_to_jfraction(S, n // 2)
    cf_img = EgfSeries.from_terms(jfraction_to_series(cf_map(J, "T_inv"), n).terms()).terms()
    yield _compare("A111961 cf-map image", cf_img, A111961_CF_IMAGE)
    yield _finding("A111961 formal pipeline vs cf-map", transform_T_inv(S).terms(), cf_img)

    # Laguerre production matrix
    N = 6
    d = Series([1, -1], N + 1)
    R = RiordanPair(series_recip(d), series_mul(Series.x(N + 1), series_recip(d)), EXPONENTIAL)
    P = production_matrix(R, N)
    diag = [P[i][i] for i in range(N)]
    sub = [P[i + 1][i] for i in range(N - 1)]
    yield _compare("Laguerre production diagonal", diag, [1, 3, 5, 7, 9, 11])
    yield _compare("Laguerre production subdiagonal", sub, [1, 4, 9, 16, 25])

    # random radical-free arrays
    rng = random.Random(20240611)
    bad = []
    for _ in range(10):
        al, be, ga = (Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
        m, rev = reversion_moments(al, be, ga, 10)
        if m != rev:
            bad.append((al, be, ga))
        mu_e = transform_T_inv(mu_zero(al, be, ga, 10))
        if mu_e.series != trig_reconstruction(al, be, ga, 10).series:
            bad.append(("trig", al, be, ga))
    yield Check("random (alpha, beta, gamma) moment identities", not bad, f"failures {bad}" if bad else "10 instances")


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "transform-pairs": suite_transform_pairs,
    "triangles": suite_triangles,
    "closed-form": suite_closed_form,
    "continued-fractions": suite_continued_fractions,
    "examples": suite_examples,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {['all', *SUITES]}") from None
    return list(fn())
