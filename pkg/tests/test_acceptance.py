"""Acceptance criteria 1-10, each with its time limit.

Every criterion prints one PASS/FAIL line, collected into the terminal
summary under "acceptance criteria".
"""

import json
import random
import time

from conftest import ACCEPTANCE_LINES
from hierdepth import reproduce
from hierdepth.arcs import arc_size_bound, columns_as_points, is_k_arc, normal_rational_curve
from hierdepth.cli import main
from hierdepth.code import EvaluationSet, is_mds
from hierdepth.corpus import arc_corpus, code_corpus, reference_curve
from hierdepth.curve import CurveSpec, affine_points, rational_points
from hierdepth.filtration import (
    RSClass,
    build_chain,
    classify_rs,
    distance_premise_breaks,
    optimal_index,
    tradeoff,
)
from hierdepth.gf import FieldSpec, enumerate_field
from hierdepth.jets import additivity_sweep, lift_sweep, max_contact, max_multiplicity
from hierdepth.surface import (
    SurfaceNumerics,
    depth_formula,
    dual_depth_formula,
    p2_filtration,
    restrict_to_line,
)


def report(number, ok, elapsed, limit, detail=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = "" if limit is None else f" (limit {limit:g}s)"
    line = f"criterion {number}: {status} in {elapsed:.4f}s{budget}"
    if detail:
        line += f" {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def rs_chains():
    """Every prefix length and a few random subsets of P^1 points, q = 5, 7."""
    rng = random.Random(0)
    for q in (5, 7):
        line = CurveSpec.projective_line(FieldSpec(q))
        pts = affine_points(line)
        subsets = [pts[:n] for n in range(1, q + 1)]
        subsets += [rng.sample(pts, rng.randint(2, q)) for _ in range(4)]
        for sub in subsets:
            gamma = EvaluationSet(line, tuple(sub))
            yield q, build_chain(line, gamma, gamma.n - 1)


def test_criterion_1_p2_depth():
    t0 = time.perf_counter()
    h = depth_formula(SurfaceNumerics(4, -6, 1))
    filt = p2_filtration(2)
    elapsed = time.perf_counter() - t0
    ok = h == 6 and len(filt) == 6 and filt.names() == ["x^2", "xy", "xz", "y^2", "yz", "z^2"]
    report(1, ok, elapsed, 1e-3)


def test_criterion_2_point_count():
    t0 = time.perf_counter()
    curve = CurveSpec.elliptic(FieldSpec(5), 1, 1)
    pts = rational_points(curve)
    els = enumerate_field(curve.field)
    brute = sorted((x.index, y.index) for x in els for y in els if y * y == x**3 + x + 1)
    elapsed = time.perf_counter() - t0
    listed = sorted((p.x.index, p.y.index) for p in pts if not p.is_infinity)
    report(2, len(pts) == 9 and listed == brute and len(brute) == 8, elapsed, 0.01)


def test_criterion_3_rs_family():
    t0 = time.perf_counter()
    ok, count = True, 0
    for q, chain in rs_chains():
        n = chain.n
        for lv in chain.levels:
            count += 1
            ok &= (lv.code.n, lv.k, lv.d) == (n, lv.i + 1, n - lv.i)
            ok &= is_mds(lv.code)
            ok &= n > q + 1 or classify_rs(lv.code) is RSClass.RS_EQUIVALENT
    report(3, ok, time.perf_counter() - t0, 5.0, f"[{count} levels]")


def test_criterion_4_middle_layer():
    t0 = time.perf_counter()
    ok = True
    for _, chain in rs_chains():
        qs = [row.Q for row in tradeoff(chain).rows]
        i_star = (chain.n - 1) // 2
        ok &= qs[i_star] == max(qs)
        ok &= optimal_index(chain).agrees
    chain = build_chain(reference_curve(), EvaluationSet(reference_curve(), tuple(affine_points(reference_curve()))), 7)
    opt = optimal_index(chain)
    breaks = distance_premise_breaks(chain)
    ok &= chain.n == 8 and opt.i_star_formula == 4
    elapsed = time.perf_counter() - t0
    report(4, ok, elapsed, 10.0, f"[elliptic i*={opt.i_star_formula} empirical={opt.i_star_empirical} "
                                 f"agrees={opt.agrees} premise fails at {breaks}]")


def test_criterion_5_mds_arc_oracles():
    t0 = time.perf_counter()
    codes = [code for _, code in code_corpus()]
    for _, chain in rs_chains():
        codes += [lv.code for lv in chain.levels]
    ok = len(codes) >= 30
    for code in codes:
        try:
            arc = is_k_arc(columns_as_points(code), code.k - 1).is_arc
        except Exception:
            arc = False  # a zero column can never be part of an arc
        ok &= is_mds(code) == arc
    report(5, ok, time.perf_counter() - t0, 10.0, f"[{len(codes)} codes]")


def test_criterion_6_arc_bound():
    t0 = time.perf_counter()
    ok, count = True, 0
    for _, F, r, pts in arc_corpus(max_q=9, max_r=3):
        count += 1
        ok &= len(pts) <= arc_size_bound(r, F.q)
    conic = normal_rational_curve(FieldSpec(5), 2)
    ok &= len(conic) == 6 and is_k_arc(conic, 2).is_arc
    report(6, ok, time.perf_counter() - t0, 5.0, f"[{count} arcs]")


def test_criterion_7_discrepancy_detection():
    t0 = time.perf_counter()
    claims = {c.claim_id: c for c in reproduce.elliptic_claims(10**8)}
    levels = [c for cid, c in claims.items() if cid.startswith("elliptic-example-mds-")]
    deg2 = next(c for c in levels if c.computed["deg"] == 2)
    ok = deg2.status == reproduce.REFUTED and deg2.computed["d"] == 6 == deg2.computed["goppa"]
    ok &= all(c.computed["d"] >= c.computed["goppa"] and c.computed["d"] <= c.computed["singleton"] for c in levels)
    refuted = sorted(c.computed["deg"] for c in levels if c.status == reproduce.REFUTED)
    report(7, ok, time.perf_counter() - t0, 5.0, f"[MDS refuted at degrees {refuted}]")


def test_criterion_8_jets():
    t0 = time.perf_counter()
    ok = True
    for p, a, b in [(5, 1, 1), (7, 3, 2), (11, 1, 6)]:
        E = CurveSpec.elliptic(FieldSpec(p), a, b)
        rng = random.Random(p)
        ok &= lift_sweep(rng, E, 100) == 0
        tested, failures = additivity_sweep(rng, E, 100)
        ok &= tested == 100 and failures == 0
    E = reference_curve()
    pts = affine_points(E)
    for divisor in ([pts[0]] * 3, [pts[0], pts[0], pts[1]], pts[:3], [pts[2]] * 2 + [pts[5]] * 2):
        ok &= max_contact(E, divisor)[0] == max_multiplicity(divisor)
    claims = [c for c in reproduce.contact_claims(0) if c.claim_id.startswith("contact-order")]
    for c in claims:
        ok &= (c.status == reproduce.CONFIRMED) == ("equal" in c.claim_id)
    report(8, ok, time.perf_counter() - t0, 5.0)


def test_criterion_9_surface():
    t0 = time.perf_counter()
    rng = random.Random(9)
    ok = True
    for _ in range(1000):
        c1_sq, chi = rng.randint(-10**4, 10**4), rng.randint(-100, 100)
        c1_k = rng.randint(-10**4, 10**4)
        c1_k += (c1_sq - c1_k) % 2
        n = SurfaceNumerics(c1_sq, c1_k, chi)
        ok &= depth_formula(n) + dual_depth_formula(n) == c1_sq + 2 * chi
    for d in range(51):
        res = restrict_to_line(p2_filtration(d))
        ok &= res.restricted_dim == d + 1 and res.depth == (d * d + 3 * d) // 2 + 1
        ok &= res.inequality_holds and res.equality == (d == 0)
    report(9, ok, time.perf_counter() - t0, 1.0)


def test_criterion_10_determinism(tmp_path, capsys):
    t0 = time.perf_counter()
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = (main(["reproduce", "--out", str(a)]), main(["reproduce", "--out", str(b)]))
    capsys.readouterr()
    ok = codes == (0, 0) and a.read_bytes() == b.read_bytes()
    ok &= isinstance(json.loads(a.read_text()), list)
    report(10, ok, time.perf_counter() - t0, None)
