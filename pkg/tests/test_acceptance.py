"""Acceptance gate: one test and one summary line per criterion."""

import gc
import json
import time
from fractions import Fraction
from pathlib import Path

import pytest

from orthoguard import (
    Chain,
    EdgeClass,
    GenSpec,
    OrthoPolygon,
    SplitMix64,
    build_cells,
    bruteforce_guards,
    classify_edge,
    generate,
    guard_monotone,
    hidden_guard_histogram,
    min_guards_bruteforce,
    min_hidden_guards_bruteforce,
    pyramid_decompose,
    r_visible,
    verify_cover,
    verify_hidden,
    vertical_decompose,
    visibility_matrix,
)
from orthoguard.cli import main
from orthoguard.documents import dumps, point_doc, polygon_to_doc, rect_doc

ROOT = Path(__file__).resolve().parent.parent
FINDINGS = ROOT / "findings"
FIXTURES = Path(__file__).parent / "fixtures"
CELL_CAP = 64


def _write_finding(name, doc):
    FINDINGS.mkdir(exist_ok=True)
    (FINDINGS / name).write_text(dumps(doc))


def _kinds(P):
    return [(e, classify_edge(e, P)) for e in P.horizontal_edges]


def _small_corpus(family, count):
    """The first ``count`` seeds whose instance has at most CELL_CAP oracle cells."""
    out, seed = [], 0
    while len(out) < count:
        P = generate(GenSpec(family, 2 + seed % 6, (1, 6), seed))
        if build_cells(P).n_inside <= CELL_CAP:
            out.append((seed, P))
        seed += 1
    return out


def _sample_in(P, rng, i, denom=1000):
    p = P.profile
    fx = Fraction(rng.below(denom + 1), denom)
    fy = Fraction(rng.below(denom + 1), denom)
    return (p.xs[i] + fx * (p.xs[i + 1] - p.xs[i]), p.lo[i] + fy * (p.hi[i] - p.lo[i]))


def test_01_slab_count_law(acceptance_report):
    start = time.perf_counter()
    bad = []
    for seed in range(500):
        P = generate(GenSpec("monotone", 3 + seed % 38, seed=seed))
        if len(vertical_decompose(P)) != (P.n - 2) // 2:
            bad.append(seed)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    acceptance_report(1, ok, f"slab law {500 - len(bad)}/500, {elapsed:.2f} s (limit 5 s)")
    assert ok, bad[:10]


def test_02_tooth_dent_laws(acceptance_report):
    bad_m, bad_h = [], []
    for seed in range(500):
        P = generate(GenSpec("monotone", 1 + seed % 30, seed=seed))
        kinds = [k for _, k in _kinds(P)]
        if kinds.count(EdgeClass.TOOTH) != kinds.count(EdgeClass.DENT) + 2:
            bad_m.append(seed)
        H = generate(GenSpec("histogram", 1 + seed % 30, seed=seed))
        kinds = _kinds(H)
        upper_teeth = sum(k is EdgeClass.TOOTH and e.chain is Chain.UPPER for e, k in kinds)
        if upper_teeth != sum(k is EdgeClass.DENT for _, k in kinds) + 1:
            bad_h.append(seed)
    ok = not bad_m and not bad_h
    acceptance_report(2, ok, f"monotone {500 - len(bad_m)}/500, histogram {500 - len(bad_h)}/500")
    assert ok, (bad_m[:10], bad_h[:10])


def test_03_pyramid_count_and_tiling(acceptance_report):
    bad = []
    for seed in range(500):
        H = generate(GenSpec("histogram", 1 + seed % 30, seed=seed))
        dents = sum(k is EdgeClass.DENT for _, k in _kinds(H))
        parts = pyramid_decompose(H)
        if len(parts) != dents + 1 or sum(p.boundary.area for p in parts) != H.area:
            bad.append(seed)
    ok = not bad
    acceptance_report(3, ok, f"count and area {500 - len(bad)}/500")
    assert ok, bad[:10]


def test_04_hidden_correctness(acceptance_report):
    start = time.perf_counter()
    bad, events = [], []
    clamped = 0
    for seed in range(500):
        H = generate(GenSpec("histogram", 1 + seed % 30, seed=seed))
        rep = hidden_guard_histogram(H)
        grid = build_cells(H)
        if not (verify_cover(rep.points, H, grid).covered
                and verify_hidden(rep.points, H, grid).hidden):
            bad.append(seed)
        if rep.clamps:
            clamped += 1
            events.append({"seed": seed, "slabs": 1 + seed % 30,
                           "clips": [{"strip": rect_doc(a), "clipped": rect_doc(b)}
                                     for a, b in rep.clamp_events]})
    elapsed = time.perf_counter() - start
    n_events = sum(len(e["clips"]) for e in events)
    _write_finding("hidden_clamp_events.json", {"generator": "histogram, slabs 1 + seed % 30",
                                                "instances": events})
    ok = not bad and elapsed < 30
    acceptance_report(4, ok, f"cover+hidden {500 - len(bad)}/500, {elapsed:.2f} s (limit 30 s), "
                             f"{n_events} strip clamps on {clamped} instances")
    assert ok, bad[:10]


def test_05_hidden_optimality(acceptance_report):
    agree, found = 0, []
    for seed, H in _small_corpus("histogram", 200):
        m = hidden_guard_histogram(H).m
        hid, plain = min_hidden_guards_bruteforce(H), min_guards_bruteforce(H)
        if m == hid == plain:
            agree += 1
        else:
            found.append({"seed": seed, "polygon": polygon_to_doc(H), "m": m,
                          "hidden_oracle": hid, "plain_oracle": plain})
    _write_finding("hidden_counterexamples.json", {"instances": found})
    ok = agree == 200
    acceptance_report(5, ok, f"agreement {agree}/200 ({agree / 2:.1f}%)")
    assert ok, found[:3]


def test_06_monotone_optimality(acceptance_report):
    agree, below, confirmed, found = 0, 0, 0, []
    for seed, P in _small_corpus("monotone", 200):
        rep = guard_monotone(P)
        best = bruteforce_guards(P)
        if rep.m == len(best):
            agree += 1
            continue
        below += rep.m < len(best)
        # Cross-check the smaller set with the geometric predicate, cell by cell.
        confirmed += all(any(r_visible(c, g, P) for g in best) for c in build_cells(P).centers)
        found.append({"seed": seed, "polygon": polygon_to_doc(P),
                      "profile": {"lo": list(P.profile.lo), "hi": list(P.profile.hi)},
                      "m": rep.m, "points": [point_doc(p) for p in rep.points],
                      "oracle_m": len(best), "oracle_points": [point_doc(p) for p in best]})
    _write_finding("monotone_counterexamples.json", {"instances": found})
    ok = agree == 200
    acceptance_report(6, ok, f"agreement {agree}/200 ({agree / 2:.1f}%), {below} below the oracle, "
                             f"{len(found)} counterexamples ({confirmed} oracle sets re-checked "
                             "by r_visible) in findings/monotone_counterexamples.json")
    assert ok, f"{len(found)} counterexamples, first seed {found[0]['seed'] if found else None}"


def test_07_tooth_needs_its_own_range(acceptance_report):
    rng = SplitMix64(7)
    fams = ("monotone", "balanced", "histogram", "pyramid")
    checked, bad = 0, []
    for idx in range(100):
        P = generate(GenSpec(fams[idx % 4], 2 + idx % 12, seed=1000 + idx))
        prof = P.profile
        k = len(prof.lo)
        for e, kind in _kinds(P):
            if kind is not EdgeClass.TOOTH:
                continue
            a, b = e.left.x, e.right.x
            outside = [i for i in range(k) if prof.xs[i + 1] <= a or prof.xs[i] >= b]
            if not outside:
                continue
            drawn = 0
            while drawn < 10:
                q = _sample_in(P, rng, outside[rng.below(len(outside))])
                if q[0] in (a, b):
                    continue
                drawn += 1
                checked += 1
                if r_visible(q, e.left, P) and r_visible(q, e.right, P):
                    bad.append((idx, e, q))
    ok = not bad and checked > 0
    acceptance_report(7, ok, f"{checked - len(bad)}/{checked} samples miss a tooth endpoint")
    assert ok, bad[:5]


def test_08_oracle_soundness(acceptance_report):
    rng = SplitMix64(8)
    fams = ("monotone", "balanced", "histogram", "pyramid")
    pairs, mixed = 0, []
    while pairs < 1000:
        P = generate(GenSpec(fams[pairs % 4], 2 + pairs % 10, seed=pairs))
        grid = build_cells(P)
        cells = grid.cells
        V = visibility_matrix(P, grid)
        for _ in range(20):
            u, v = rng.below(len(cells)), rng.below(len(cells))
            ra, rb = grid.cell_rect(cells[u]), grid.cell_rect(cells[v])
            seen = set()
            for _ in range(100):
                p = tuple(r.lo[d] + Fraction(1 + rng.below(999), 1000) * (r.hi[d] - r.lo[d])
                          for r in (ra,) for d in (0, 1))
                q = tuple(r.lo[d] + Fraction(1 + rng.below(999), 1000) * (r.hi[d] - r.lo[d])
                          for r in (rb,) for d in (0, 1))
                seen.add(r_visible(p, q, P))
            if seen != {bool(V[u, v])}:
                mixed.append((pairs, cells[u], cells[v], seen))
            pairs += 1

    asym = 0
    for t in range(10_000):
        P = generate(GenSpec(fams[t % 4], 1 + t % 15, seed=50_000 + t // 10))
        k = len(P.profile.lo)
        p = _sample_in(P, rng, rng.below(k), denom=4)
        q = _sample_in(P, rng, rng.below(k), denom=4)
        asym += r_visible(p, q, P) != r_visible(q, p, P)
    ok = not mixed and asym == 0
    acceptance_report(8, ok, f"uniform cell pairs {1000 - len(mixed)}/1000 (100 samples each, "
                             f"matching the prefix-sum matrix), asymmetric pairs {asym}/10000")
    assert ok, (mixed[:3], asym)


def _best_time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        enabled = gc.isenabled()
        gc.disable()
        try:
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        finally:
            if enabled:
                gc.enable()
    return best


def test_09_linear_time(acceptance_report):
    rows, ok = [], True
    for family, run in (("monotone", guard_monotone), ("histogram", hidden_guard_histogram)):
        times = []
        for n in (100_000, 200_000):
            P = generate(GenSpec(family, (n - 2) // 2, seed=9))
            assert P.n == n
            raw = [(v.x, v.y) for v in P.vertices]
            times.append(_best_time(lambda: run(OrthoPolygon(raw))))
        ratio = times[1] / times[0]
        ok &= ratio <= 2.5 and times[0] < 1.0
        rows.append(f"{family} {times[0]:.3f} s / {times[1]:.3f} s ratio {ratio:.2f}")
    acceptance_report(9, ok, "; ".join(rows) + " (limits: ratio 2.5, 1 s)")
    assert ok, rows


def test_10_cli_end_to_end(acceptance_report, tmp_path, capsys):
    failed = []
    for seed in range(50):
        poly, guards = tmp_path / f"p{seed}.json", tmp_path / f"g{seed}.json"
        codes = (
            main(["gen", "--family", "histogram", "--slabs", str(1 + seed % 12),
                  "--seed", str(seed), "--output", str(poly)]),
            main(["hidden", "--input", str(poly), "--output", str(guards)]),
            main(["verify", "--input", str(poly), "--guards", str(guards), "--hidden",
                  "--output", str(tmp_path / "v.json")]),
        )
        if codes != (0, 0, 0):
            failed.append((seed, codes))
    capsys.readouterr()

    unstable = []
    for name in ("rectangle", "lshape", "hstar"):
        for command in ("hidden", "guard"):
            golden = FIXTURES / f"{name}.{command}.json"
            out = tmp_path / golden.name
            main([command, "--input", str(FIXTURES / f"{name}.polygon.json"), "--output", str(out)])
            if out.read_bytes() != golden.read_bytes():
                unstable.append(golden.name)
    ok = not failed and not unstable
    acceptance_report(10, ok, f"gen->hidden->verify {50 - len(failed)}/50 exit 0, "
                              f"golden documents stable {6 - len(unstable)}/6")
    assert ok, (failed, unstable)
