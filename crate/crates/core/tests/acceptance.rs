//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line with its
//! measurements and wall time, then asserts. Run with `--nocapture` to see
//! the lines of passing criteria too.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangle::arrangement::{build_arrangement, chessboard_coloring, locate_cell, same_cell_triangle_test};
use tangle::classify::{
    adjacent, find_disjoint_pair_k4, layout_check, layout_recognize, matchings, simplicity, simplicity_of,
    verify_flower, verify_type, DisjointnessSource, LayoutKind, DEFAULT_LAYOUT_BOUND,
};
use tangle::generators::{
    gen_adjacent_crossing, gen_convex, gen_degenerate_fixture, gen_flower, gen_flower_with, gen_twisted,
    gen_type3_geometric, oracle_type, DisjointnessOracle, FixtureKind, FixtureParams, FlowerParams, TypeKind,
};
use tangle::geometry::{chain_contacts, check_mild_assumptions, frac, key, EventKind};
use tangle::sanitizer::{sanitize, SanitizeMode};
use tangle::structures::{
    embed_structure, extract_disjoint_edges, index_family, verify_plane_embedding, Certificate, StructureGraph,
};
use tangle::{crossing_matrix, pair_profile, Coord, Drawing, EdgeKey, Mode, PairProfile, Point, PolylineEdge};

type Outcome = Result<String, String>;

/// Runs one criterion, prints its line and fails the test on a miss or an
/// overrun of the time limit.
fn criterion(id: u32, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let took = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {:.0?} limit", limit)),
        Err(d) => (false, d),
    };
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{tag}] {name}: {detail} ({:.2?})", took);
    assert!(ok, "criterion {id} failed: {detail}");
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Leaf counts along the spine, one canonical orientation per sequence.
fn caterpillar_shapes(max_n: usize) -> Vec<Vec<usize>> {
    fn go(seq: &mut Vec<usize>, used: usize, max_n: usize, out: &mut Vec<Vec<usize>>) {
        if !seq.is_empty() {
            let rev: Vec<usize> = seq.iter().rev().copied().collect();
            if *seq <= rev {
                out.push(seq.clone());
            }
        }
        for leaves in 0..max_n.saturating_sub(used) {
            if used + 1 + leaves > max_n {
                break;
            }
            seq.push(leaves);
            go(seq, used + 1 + leaves, max_n, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, max_n, &mut out);
    out
}

fn shape_size(shape: &[usize]) -> usize {
    shape.len() + shape.iter().sum::<usize>()
}

/// Appends the caterpillar with the given shape at vertex `off`.
fn push_caterpillar(shape: &[usize], off: usize, edges: &mut Vec<(usize, usize)>) -> usize {
    let k = shape.len();
    for i in 1..k {
        edges.push((off + i - 1, off + i));
    }
    let mut next = off + k;
    for (i, &leaves) in shape.iter().enumerate() {
        for _ in 0..leaves {
            edges.push((off + i, next));
            next += 1;
        }
    }
    next
}

fn caterpillar_forest(shapes: &[&Vec<usize>]) -> StructureGraph {
    let mut edges = Vec::new();
    let mut n = 0;
    for s in shapes {
        n = push_caterpillar(s, n, &mut edges);
    }
    StructureGraph::new(n, edges).expect("caterpillar forests are simple")
}

/// Every multiset of caterpillar shapes with at most `max_n` vertices in total.
fn caterpillar_forests(max_n: usize) -> Vec<StructureGraph> {
    fn go<'a>(
        shapes: &'a [Vec<usize>],
        from: usize,
        used: usize,
        max_n: usize,
        cur: &mut Vec<&'a Vec<usize>>,
        out: &mut Vec<StructureGraph>,
    ) {
        if !cur.is_empty() {
            out.push(caterpillar_forest(cur));
        }
        for (i, s) in shapes.iter().enumerate().skip(from) {
            if used + shape_size(s) <= max_n {
                cur.push(s);
                go(shapes, i, used + shape_size(s), max_n, cur, out);
                cur.pop();
            }
        }
    }
    let shapes = caterpillar_shapes(max_n);
    let mut out = Vec::new();
    go(&shapes, 0, 0, max_n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_01_flower_drawings_have_no_disjoint_edges() {
    criterion(1, "flower drawings", Duration::from_secs(10), || {
        for n in 3..=12 {
            let d = gen_flower(n).map_err(|e| format!("n={n}: {e}"))?;
            let rep = verify_flower(&d).map_err(|e| format!("n={n}: {e}"))?;
            check(rep.ok, || format!("n={n}: flower check witness {:?}", rep.witness))?;
            let m = crossing_matrix(&d, Mode::Strict).map_err(|e| format!("n={n}: {e}"))?;
            for (e, f, p) in m.iter() {
                let want = if adjacent(e, f) { 1..=1 } else { 1..=2 };
                check(want.contains(&p.crossing_count) && !p.disjoint, || {
                    format!("n={n}: {e:?} and {f:?} cross {} times", p.crossing_count)
                })?;
            }
            let coarse = gen_flower_with(&FlowerParams::new(n)).map_err(|e| e.to_string())?;
            let fine = gen_flower_with(&FlowerParams { discretization: 16, ..FlowerParams::new(n) })
                .map_err(|e| e.to_string())?;
            let counts = |d: &Drawing| crossing_matrix(d, Mode::Strict).map(|m| m.counts());
            check(counts(&coarse).ok() == counts(&fine).ok(), || format!("n={n}: matrix changes with refinement"))?;
        }
        Ok("n = 3..12 clean, stable at 8 and 16 points per arc".into())
    });
}

#[test]
fn criterion_02_type_three_construction() {
    criterion(2, "type III construction", Duration::from_secs(10), || {
        for n in 3..=8 {
            let d = gen_type3_geometric(n).map_err(|e| format!("n={n}: {e}"))?;
            let m = crossing_matrix(&d, Mode::Strict).map_err(|e| format!("n={n}: {e}"))?;
            check(simplicity_of(&m).adjacent_simple, || format!("n={n}: adjacent edges cross"))?;
            let id: Vec<usize> = (0..n).collect();
            let r = verify_type(&m, &id, TypeKind::III);
            check(r.ok && r.witness.is_none(), || format!("n={n}: witness {:?}", r.witness))?;
        }
        Ok("n = 3..8 adjacent-simple, zero witnesses".into())
    });
}

/// First disjoint matching of `w` under the oracle, in the classifier's
/// priority order, expressed on the relabeled vertices `0..4`.
fn expected_pair(o: &DisjointnessOracle, w: [usize; 4]) -> Option<(EdgeKey, EdgeKey)> {
    let local = matchings([0, 1, 2, 3]);
    matchings(w).iter().zip(local).find(|((e, f), _)| o.query(*e, *f)).map(|(_, l)| l)
}

#[test]
fn criterion_03_every_four_vertex_subdrawing_has_a_disjoint_pair() {
    criterion(3, "disjoint pair in every K4", Duration::from_secs(5), || {
        let t3 = gen_type3_geometric(8).map_err(|e| e.to_string())?;
        let families: [(&str, Drawing, DisjointnessOracle); 2] = [
            ("type3(8)", t3.clone(), oracle_type(8, TypeKind::III)),
            ("convex(8)", gen_convex(8), DisjointnessOracle::convex(8)),
        ];
        let mut runs = 0;
        for (name, d, o) in &families {
            for w in quadruples(8) {
                let got = find_disjoint_pair_k4(&d.induced(&w)).map_err(|e| format!("{name} {w:?}: {e}"))?;
                let want = expected_pair(o, w);
                check(Some(got) == want, || format!("{name} {w:?}: found {got:?}, oracle says {want:?}"))?;
                runs += 1;
            }
        }
        // Reading a nested quadruple i<j<k<l as (i,l,j,k) makes its disjoint
        // pair separated, as (i,j,l,k) interleaved.
        for (kind, name) in [(TypeKind::I, "type I"), (TypeKind::II, "type II")] {
            let o = oracle_type(4, kind);
            for [i, j, k, l] in quadruples(8) {
                let order = match kind {
                    TypeKind::I => [i, l, j, k],
                    _ => [i, j, l, k],
                };
                let q = t3.induced(&order);
                let m = crossing_matrix(&q, Mode::Strict).map_err(|e| e.to_string())?;
                let r = verify_type(&m, &[0, 1, 2, 3], kind);
                check(r.ok, || format!("{name} fixture {order:?} is not of its type"))?;
                let got = find_disjoint_pair_k4(&q).map_err(|e| format!("{name} {order:?}: {e}"))?;
                let want = expected_pair(&o, [0, 1, 2, 3]);
                check(Some(got) == want, || format!("{name} {order:?}: found {got:?}, oracle says {want:?}"))?;
                runs += 1;
            }
        }
        Ok(format!("{runs} quadruples over 4 families, all match the oracle"))
    });
}

fn grid(rng: &mut ChaCha8Rng, den: i64, span: i64) -> Point {
    Point::new(frac(rng.random_range(-span..=span), den), frac(rng.random_range(-span..=span), den))
}

fn triangle_edges(d: &Drawing) -> [PolylineEdge; 3] {
    [d.edges[0].clone(), d.edges[1].clone(), d.edges[2].clone()]
}

/// Walk parity check on one triangle: the number of crossings of a segment
/// with the triangle is odd exactly when its ends have different colors.
fn parity_walks(tri: &[PolylineEdge; 3], rng: &mut ChaCha8Rng, walks: usize) -> Result<(), String> {
    let arr = chessboard_coloring(&build_arrangement(tri).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    for a in &arr.arcs {
        check(arr.faces[a.left].color != arr.faces[a.right].color, || "coloring is not proper".into())?;
    }
    let mut done = 0;
    let mut tries = 0;
    while done < walks {
        tries += 1;
        if tries > 100 * walks {
            return Err("too many degenerate walks".into());
        }
        let (p, q) = (grid(rng, 7, 800), grid(rng, 7, 800));
        if p == q || arr.on_arrangement(&p) || arr.on_arrangement(&q) {
            continue;
        }
        let walk = [p.clone(), q.clone()];
        let mut crossings = 0;
        let mut clean = true;
        for t in tri {
            let c = chain_contacts(&walk, &t.chain);
            clean &= c.overlaps.is_empty()
                && c.points.iter().all(|x| x.kind == EventKind::ProperCrossing && !arr.nodes.contains(&x.at));
            crossings += c.points.len();
        }
        if !clean {
            continue;
        }
        let cp = arr.faces[locate_cell(&arr, &p).map_err(|e| e.to_string())?].color;
        let cq = arr.faces[locate_cell(&arr, &q).map_err(|e| e.to_string())?].color;
        check((crossings % 2 == 1) == (cp != cq), || {
            format!("walk {p:?} -> {q:?}: {crossings} crossings, {cp:?} vs {cq:?}")
        })?;
        done += 1;
    }
    Ok(())
}

#[test]
fn criterion_04_triangle_edge_misses_a_side() {
    criterion(4, "triangle plus edge", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7412);
        let per_variant = 30;
        let mut fixtures = 0;
        let mut with_crossings = 0;
        for crossing_variant in [false, true] {
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < per_variant {
                attempts += 1;
                if attempts > 20_000 {
                    return Err(format!("only {accepted} usable fixtures (crossing variant: {crossing_variant})"));
                }
                let corners = vec![grid(&mut rng, 1, 100), grid(&mut rng, 1, 100), grid(&mut rng, 1, 100)];
                let Ok(base) = Drawing::straight_complete(corners) else { continue };
                if !check_mild_assumptions(&base).passes() {
                    continue;
                }
                let tri = if crossing_variant {
                    match gen_adjacent_crossing(&base) {
                        Ok(d) => d,
                        Err(_) => continue,
                    }
                } else {
                    base
                };
                let tri = triangle_edges(&tri);
                let joints = rng.random_range(0..=3);
                let chain: Vec<Point> = (0..joints + 2).map(|_| grid(&mut rng, 3, 330)).collect();
                if chain.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let de = PolylineEdge::new(3, 4, chain);
                let Ok(t) = same_cell_triangle_test(&tri, &de) else { continue };
                if !t.applicable {
                    continue;
                }
                check(t.missed_edge.is_some(), || format!("counterexample: crossings {:?} for {de:?}", t.crossings))?;
                let missed = t.missed_edge.expect("checked above");
                let idx = tri.iter().position(|e| e.key() == missed).expect("missed edge is a triangle edge");
                check(t.crossings[idx] == 0, || format!("reported edge {missed:?} is crossed"))?;
                if t.crossings.iter().sum::<usize>() > 0 {
                    with_crossings += 1;
                }
                parity_walks(&tri, &mut rng, 100)?;
                accepted += 1;
                fixtures += 1;
            }
        }
        check(with_crossings > 0, || "no fixture had a crossed side".into())?;
        Ok(format!(
            "{fixtures} fixtures ({with_crossings} with crossed sides), zero counterexamples, 100 parity walks each"
        ))
    });
}

fn embeds_in_all_types(g: &StructureGraph, what: &str) -> Result<(), String> {
    for kind in TypeKind::ALL {
        let seq = embed_structure(g, kind).map_err(|e| format!("{what} {kind:?}: {e}"))?;
        let o = oracle_type(g.n.max(1), kind);
        let r = verify_plane_embedding(g, &seq, &o).map_err(|e| format!("{what} {kind:?}: {e}"))?;
        check(r.ok, || format!("{what} {kind:?}: edges {:?} cross", r.witness))?;
    }
    Ok(())
}

#[test]
fn criterion_05_squids_and_caterpillar_forests_embed() {
    criterion(5, "plane embeddings", Duration::from_secs(30), || {
        let mut squids = 0;
        for s in 0..=5 {
            for t in 0..=5 {
                for isolated in 0..=1 {
                    embeds_in_all_types(&StructureGraph::squid(s, t, isolated), &format!("squid({s},{t},{isolated})"))?;
                    squids += 1;
                }
            }
        }
        let forests = caterpillar_forests(10);
        for g in &forests {
            embeds_in_all_types(g, &format!("forest {:?}", g.edges))?;
        }
        Ok(format!("{squids} squids and {} caterpillar forests, 3 types each", forests.len()))
    });
}

#[test]
fn criterion_06_cycle_and_spider_do_not_embed() {
    criterion(6, "non-embeddable structures", Duration::from_secs(30), || {
        let c4 = StructureGraph::cycle(4);
        let orders4 = permutations(4);
        for kind in TypeKind::ALL {
            let o = oracle_type(4, kind);
            for seq in &orders4 {
                let r = verify_plane_embedding(&c4, seq, &o).map_err(|e| e.to_string())?;
                check(!r.ok, || format!("C4 embeds in type {kind:?} via {seq:?}"))?;
            }
        }
        let spider = StructureGraph::spider3();
        let o = oracle_type(7, TypeKind::I);
        let orders7 = permutations(7);
        for seq in &orders7 {
            let r = verify_plane_embedding(&spider, seq, &o).map_err(|e| e.to_string())?;
            check(!r.ok, || format!("3-spider embeds in type I via {seq:?}"))?;
        }
        Ok(format!("C4: {} orders x 3 types, 3-spider: {} orders, none plane", orders4.len(), orders7.len()))
    });
}

#[test]
fn criterion_07_extraction_on_type_oracles() {
    criterion(7, "disjoint edge extraction", Duration::from_secs(5), || {
        let r = 4;
        let mut runs = 0;
        for m in [2, 3] {
            let n = (2 * m + 1) * 4;
            for kind in TypeKind::ALL {
                let o = oracle_type(n, kind);
                let cert = Certificate::for_oracle(&o, r);
                let got = extract_disjoint_edges(&o, &cert, m).map_err(|e| format!("n={n} {kind:?}: {e}"))?;
                let want: Vec<EdgeKey> = index_family(kind, r, m).into_iter().map(|(a, b)| key(a - 1, b - 1)).collect();
                check(got == want, || format!("n={n} {kind:?}: {got:?} instead of {want:?}"))?;
                check(got.len() == m, || format!("n={n} {kind:?}: {} edges", got.len()))?;
                for (i, &e) in got.iter().enumerate() {
                    for &f in &got[i + 1..] {
                        check(o.disjoint(e, f), || format!("n={n} {kind:?}: {e:?} meets {f:?}"))?;
                    }
                }
                runs += 1;
            }
        }
        Ok(format!("{runs} runs, every edge set pairwise disjoint"))
    });
}

fn fixture_params(kind: FixtureKind, mode: SanitizeMode) -> FixtureParams {
    let adjacent = mode == SanitizeMode::S;
    match kind {
        FixtureKind::StarCenter => FixtureParams { size: if mode == SanitizeMode::A { 4 } else { 3 }, adjacent: false },
        FixtureKind::CoincidentBundle => FixtureParams { size: 4, adjacent },
        FixtureKind::TouchingPair => FixtureParams { size: 2, adjacent },
        FixtureKind::SelfCrossing => FixtureParams::default(),
    }
}

fn sanitize_cell(kind: FixtureKind, mode: SanitizeMode) -> Result<(), String> {
    let family = gen_degenerate_fixture(kind, fixture_params(kind, mode)).map_err(|e| e.to_string())?;
    let out = sanitize(&family, mode).map_err(|e| e.to_string())?;
    let d = &out.drawing;
    let mild = check_mild_assumptions(d);
    check(mild.passes(), || format!("mild assumptions fail: {:?}", mild.violations))?;
    let s = simplicity(d).map_err(|e| e.to_string())?;
    let simple = match mode {
        SanitizeMode::A => s.adjacent_simple,
        SanitizeMode::S => s.separate_simple,
    };
    check(simple, || format!("not simple enough: {:?}", s.witnesses))?;
    let before = crossing_matrix(&family.induced(&out.kept_vertices), Mode::Lenient).map_err(|e| e.to_string())?;
    let after = crossing_matrix(d, Mode::Strict).map_err(|e| e.to_string())?;
    for (e, f, p) in before.iter() {
        let q = after.between(e, f).ok_or_else(|| format!("pair {e:?} {f:?} missing after"))?;
        check(p.disjoint || !q.disjoint, || format!("{e:?} and {f:?} became disjoint"))?;
    }
    Ok(())
}

#[test]
fn criterion_08_sanitizer_on_degenerate_fixtures() {
    criterion(8, "sanitizer", Duration::from_secs(10), || {
        let mut failed = Vec::new();
        let mut passed = 0;
        for kind in FixtureKind::ALL {
            for mode in [SanitizeMode::A, SanitizeMode::S] {
                match sanitize_cell(kind, mode) {
                    Ok(()) => passed += 1,
                    Err(e) => failed.push(format!("{} mode {}: {e}", kind.name(), mode.letter())),
                }
            }
        }
        if failed.is_empty() {
            Ok(format!("{passed} of 8 cells"))
        } else {
            Err(format!("{passed} of 8 cells; {}", failed.join("; ")))
        }
    });
}

/// The only crossing pair of every quadruple `i<j<k<l` is `(ik, jl)` for the
/// convex drawing and `(il, jk)` for the twisted one, crossing once.
fn quadruple_crossings(d: &Drawing, twisted: bool) -> Result<(), String> {
    let m = crossing_matrix(d, Mode::Strict).map_err(|e| e.to_string())?;
    check(simplicity_of(&m).simple, || "not simple".into())?;
    for [i, j, k, l] in quadruples(d.n()) {
        let want = if twisted { (key(i, l), key(j, k)) } else { (key(i, k), key(j, l)) };
        let w = [i, j, k, l];
        let edges: Vec<EdgeKey> = (0..4).flat_map(|a| (a + 1..4).map(move |b| key(w[a], w[b]))).collect();
        for (x, &e) in edges.iter().enumerate() {
            for &f in &edges[x + 1..] {
                let c = m.between(e, f).map_or(usize::MAX, |p| p.crossing_count);
                let expect = usize::from((e, f) == want || (f, e) == want);
                check(c == expect, || format!("{w:?}: {e:?} and {f:?} cross {c} times"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_09_convex_twisted_and_layouts() {
    criterion(9, "convex, twisted and layouts", Duration::from_secs(60), || {
        for n in 1..=8 {
            quadruple_crossings(&gen_convex(n), false).map_err(|e| format!("convex({n}) {e}"))?;
            quadruple_crossings(&gen_twisted(n), true).map_err(|e| format!("twisted({n}) {e}"))?;
        }
        let mut graphs: Vec<(String, StructureGraph)> =
            (1..=8).map(|n| (format!("P{n}"), StructureGraph::path(n))).collect();
        for shape in caterpillar_shapes(8) {
            graphs.push((format!("caterpillar {shape:?}"), caterpillar_forest(&[&shape])));
        }
        for (name, g) in &graphs {
            for kind in [LayoutKind::Stack, LayoutKind::Queue] {
                let order = layout_recognize(g, kind, DEFAULT_LAYOUT_BOUND).map_err(|e| e.to_string())?;
                let ok = order.as_ref().is_some_and(|o| layout_check(g, o, kind));
                check(ok, || format!("{name} has no {kind:?} layout"))?;
            }
        }
        let k4 = StructureGraph::complete(4);
        let found = layout_recognize(&k4, LayoutKind::Queue, DEFAULT_LAYOUT_BOUND).map_err(|e| e.to_string())?;
        check(found.is_none(), || format!("K4 queue layout {found:?}"))?;
        let any = permutations(4).into_iter().find(|o| layout_check(&k4, o, LayoutKind::Queue));
        check(any.is_none(), || format!("K4 is a queue under {any:?}"))?;
        Ok(format!("n <= 8 exact, {} paths and caterpillars are stack and queue, K4 not 1-queue", graphs.len()))
    });
}

/// Independent pair profile: every segment pair is intersected with
/// Cramer's rule, contacts are keyed by where they sit on each chain, and
/// crossings are told from touchings by sorting the four rays by angle.
mod naive {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    enum Spot {
        Joint(usize),
        Inside(usize, Point),
    }

    type Dir = (Coord, Coord);

    fn sub(a: &Point, b: &Point) -> Dir {
        (&a.x - &b.x, &a.y - &b.y)
    }

    fn cross(u: &Dir, v: &Dir) -> Coord {
        &u.0 * &v.1 - &u.1 * &v.0
    }

    fn dot(u: &Dir, v: &Dir) -> Coord {
        &u.0 * &v.0 + &u.1 * &v.1
    }

    fn at(a: &Point, r: &Dir, t: &Coord) -> Point {
        Point::new(&a.x + &r.0 * t, &a.y + &r.1 * t)
    }

    fn spot(seg: usize, t: &Coord, p: Point) -> Spot {
        if t.is_zero() {
            Spot::Joint(seg)
        } else if *t == Coord::from_integer(1.into()) {
            Spot::Joint(seg + 1)
        } else {
            Spot::Inside(seg, p)
        }
    }

    fn unit(t: &Coord) -> bool {
        !t.is_negative() && *t <= Coord::from_integer(1.into())
    }

    fn rays(chain: &[Point], s: &Spot) -> Vec<Dir> {
        match s {
            Spot::Joint(k) => {
                let mut out = Vec::new();
                if *k > 0 {
                    out.push(sub(&chain[k - 1], &chain[*k]));
                }
                if k + 1 < chain.len() {
                    out.push(sub(&chain[k + 1], &chain[*k]));
                }
                out
            }
            Spot::Inside(i, p) => vec![sub(&chain[*i], p), sub(&chain[i + 1], p)],
        }
    }

    fn upper(u: &Dir) -> bool {
        u.1.is_positive() || (u.1.is_zero() && u.0.is_positive())
    }

    fn by_angle(u: &Dir, v: &Dir) -> Ordering {
        match (upper(u), upper(v)) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Coord::zero().cmp(&cross(u, v)),
        }
    }

    pub fn profile(p: &[Point], q: &[Point]) -> PairProfile {
        let mut out = PairProfile::default();
        let mut seen: Vec<(Spot, Spot)> = Vec::new();
        for i in 0..p.len() - 1 {
            for j in 0..q.len() - 1 {
                let (a, b, c, d) = (&p[i], &p[i + 1], &q[j], &q[j + 1]);
                let (r, s, ca) = (sub(b, a), sub(d, c), sub(c, a));
                let den = cross(&r, &s);
                let hit = if !den.is_zero() {
                    let t = cross(&ca, &s) / &den;
                    let u = cross(&ca, &r) / &den;
                    (unit(&t) && unit(&u)).then_some((t, u))
                } else if cross(&ca, &r).is_zero() {
                    let rr = dot(&r, &r);
                    let tc = dot(&ca, &r) / &rr;
                    let td = dot(&sub(d, a), &r) / &rr;
                    let lo = tc.clone().min(td.clone()).max(Coord::zero());
                    let hi = tc.max(td).min(Coord::from_integer(1.into()));
                    if lo < hi {
                        out.has_overlap = true;
                        None
                    } else if lo == hi {
                        let pt = at(a, &r, &lo);
                        let u = dot(&sub(&pt, c), &s) / dot(&s, &s);
                        Some((lo, u))
                    } else {
                        None
                    }
                } else {
                    None
                };
                if let Some((t, u)) = hit {
                    let pt = at(a, &r, &t);
                    let pair = (spot(i, &t, pt.clone()), spot(j, &u, pt));
                    if !seen.contains(&pair) {
                        seen.push(pair);
                    }
                }
            }
        }
        for (sp, sq) in &seen {
            let (rp, rq) = (rays(p, sp), rays(q, sq));
            match (rp.len(), rq.len()) {
                (1, 1) => out.shares_endpoint = true,
                (1, _) | (_, 1) => out.vertex_contacts += 1,
                _ => {
                    let along = rp.iter().any(|x| rq.iter().any(|y| cross(x, y).is_zero() && dot(x, y).is_positive()));
                    if along {
                        continue;
                    }
                    let mut all: Vec<(Dir, bool)> =
                        rp.into_iter().map(|x| (x, true)).chain(rq.into_iter().map(|y| (y, false))).collect();
                    all.sort_by(|x, y| by_angle(&x.0, &y.0));
                    if all[0].1 != all[1].1 && all[1].1 != all[2].1 && all[2].1 != all[3].1 {
                        out.crossing_count += 1;
                    } else {
                        out.touching_count += 1;
                    }
                }
            }
        }
        out.disjoint = out.crossing_count == 0
            && out.touching_count == 0
            && out.vertex_contacts == 0
            && !out.has_overlap
            && !out.shares_endpoint;
        out
    }
}

/// A random chain with distinct points that never turns straight back.
fn random_chain(rng: &mut ChaCha8Rng, den: i64) -> Option<Vec<Point>> {
    let len = rng.random_range(2..=5);
    let chain: Vec<Point> = (0..len).map(|_| grid(rng, den, 4 * den)).collect();
    for (i, a) in chain.iter().enumerate() {
        if chain[i + 1..].contains(a) {
            return None;
        }
    }
    for w in chain.windows(3) {
        let (u, v) = (w[0].sub(&w[1]), w[2].sub(&w[1]));
        let straight_back = (&u.0 * &v.1 - &u.1 * &v.0).is_zero() && (&u.0 * &v.0 + &u.1 * &v.1).is_positive();
        if straight_back {
            return None;
        }
    }
    Some(chain)
}

#[test]
fn criterion_10_pair_profile_matches_naive_oracle() {
    criterion(10, "kernel soundness", Duration::from_secs(10), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut pairs = 0;
        let mut degenerate = 0;
        while pairs < 1000 {
            let den = [1, 2, 3, 7][rng.random_range(0..4)];
            let (Some(p), Some(q)) = (random_chain(&mut rng, den), random_chain(&mut rng, den)) else { continue };
            let mut vertices: Vec<Point> = Vec::new();
            let mut id = |pt: &Point| match vertices.iter().position(|v| v == pt) {
                Some(i) => i,
                None => {
                    vertices.push(pt.clone());
                    vertices.len() - 1
                }
            };
            let (pu, pv) = (id(&p[0]), id(&p[p.len() - 1]));
            let (qu, qv) = (id(&q[0]), id(&q[q.len() - 1]));
            let Ok(d) = Drawing::new(
                vertices,
                vec![PolylineEdge::new(pu, pv, p.clone()), PolylineEdge::new(qu, qv, q.clone())],
            ) else {
                continue;
            };
            let (e, f) = (d.edge_id(pu, pv).expect("edge p"), d.edge_id(qu, qv).expect("edge q"));
            let got = pair_profile(&d, e, f).map_err(|x| x.to_string())?;
            let (a, b) = (&d.edges[e].chain, &d.edges[f].chain);
            let want = naive::profile(a, b);
            check(got == want, || format!("{a:?} vs {b:?}: kernel {got:?}, naive {want:?}"))?;
            if got.touching_count + got.vertex_contacts > 0 || got.has_overlap {
                degenerate += 1;
            }
            pairs += 1;
        }
        Ok(format!("{pairs} pairs agree exactly, {degenerate} with touchings, overlaps or vertex contacts"))
    });
}
