//! Acceptance criteria 1 to 11, one PASS/FAIL line each. Runs without the
//! libtest harness and exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use dncat::arquiver::{phi, sigma_ar, tau_ar};
use dncat::geometry::{EdgeClass, Polygon, TaggedEdge};
use dncat::quiver::{direct_quiver_of, is_isomorphic, FlipOrder, Quiver, QuiverAtlas};
use dncat::triangulation::{is_triangulation, Triangulation, TriangulationType};
use dncat::verify::{d4_witness, Check, Verifier};

type Outcome = Result<String, String>;

struct Ctx {
    verifiers: BTreeMap<u32, Verifier>,
}

impl Ctx {
    fn v(&mut self, n: u32) -> &Verifier {
        self.verifiers.entry(n).or_insert_with(|| Verifier::new(Polygon::new(n).unwrap()))
    }

    fn atlas(&mut self, n: u32) -> Result<&QuiverAtlas, String> {
        self.v(n).atlas().map_err(|e| e.to_string())
    }
}

fn all_pass(checks: &[Check]) -> Result<(), String> {
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
        None => Ok(()),
    }
}

fn criterion1(ctx: &mut Ctx) -> Outcome {
    let mut sizes = Vec::new();
    for n in 4..=8 {
        let p = Polygon::new(n).unwrap();
        let all = ctx.v(n).triangulations();
        for t in all {
            if t.edges().len() != n as usize || !is_triangulation(p, t.edges()).map_err(|e| e.to_string())? {
                return Err(format!("n = {n}: {t}"));
            }
        }
        sizes.push(all.len());
    }
    for n in 4..=6 {
        if let Some(s) = common::brute_force_maximal(Polygon::new(n).unwrap()).iter().find(|s| s.len() != n as usize) {
            return Err(format!("brute force at n = {n} found a maximal set of size {}", s.len()));
        }
    }
    Ok(format!("all {sizes:?} triangulations for n = 4..8 have n edges; brute force agrees for n = 4..6"))
}

fn criterion2(ctx: &mut Ctx) -> Outcome {
    let mut found = Vec::new();
    for n in 4..=6 {
        let brute = common::brute_force_maximal(Polygon::new(n).unwrap()).len() as u128;
        let formula = common::type_d_count(n);
        let search = ctx.v(n).triangulations().len() as u128;
        if brute != formula || search != formula {
            return Err(format!("n = {n}: brute force {brute}, search {search}, formula {formula}"));
        }
        found.push(brute);
    }
    Ok(format!("brute-force counts {found:?} equal (3n-2)/n * C(2n-2, n-1) for n = 4, 5, 6"))
}

fn criterion3(ctx: &mut Ctx) -> Outcome {
    let classes = ctx.v(5).classes().map_err(|e| e.to_string())?;
    let type1 = classes.iter().filter(|c| c.kind == TriangulationType::Type1).count();
    if type1 == 15 {
        Ok(format!("{type1} of {} classes at n = 5 are of type 1", classes.len()))
    } else {
        Err(format!("{type1} classes of type 1 at n = 5"))
    }
}

/// Type flags recomputed from the edge list.
fn type_flags(p: Polygon, t: &Triangulation) -> [bool; 4] {
    let n = p.n();
    let long = t.edges().iter().any(|e| matches!(*e, TaggedEdge::Plain { a, b } if (b + n - a) % n == n - 1));
    let bases: Vec<u32> = t.spokes().map(TaggedEdge::start).collect();
    let double = bases.len() == 2 && bases[0] == bases[1];
    [long, !long && double, !long && bases.len() == 2 && !double, !long && bases.len() >= 3]
}

fn criterion4(ctx: &mut Ctx) -> Outcome {
    let mut total = 0;
    for n in 4..=8 {
        let p = Polygon::new(n).unwrap();
        for t in ctx.v(n).triangulations() {
            let flags = type_flags(p, t);
            let kind = t.classify_type().map_err(|e| format!("n = {n}: {t}: {e}"))?;
            if flags.iter().filter(|&&f| f).count() != 1 || !flags[kind.number() as usize - 1] {
                return Err(format!("n = {n}: {t} flagged {flags:?}, classified {kind}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} triangulations for n = 4..8 each fall in exactly one type"))
}

/// The edge replacing `e` in `t`, found by scanning the alphabet.
fn scan_flip(p: Polygon, t: &Triangulation, e: &TaggedEdge) -> Result<TaggedEdge, String> {
    let rest: Vec<&TaggedEdge> = t.edges().iter().filter(|x| *x != e).collect();
    let options: Vec<TaggedEdge> =
        p.all_edges().into_iter().filter(|x| x != e && !t.contains(x) && rest.iter().all(|m| p.crossing(m, x) == 0)).collect();
    match options.as_slice() {
        [x] => Ok(*x),
        _ => Err(format!("{t} at {e}: {} candidates", options.len())),
    }
}

fn criterion5(ctx: &mut Ctx) -> Outcome {
    let mut flips = 0;
    for n in 4..=7 {
        let p = Polygon::new(n).unwrap();
        let atlas = ctx.atlas(n)?;
        let reversed = QuiverAtlas::build_with(p, FlipOrder::Reversed).map_err(|e| e.to_string())?;
        for (t, q) in atlas.iter() {
            if !q.same_labelled(reversed.get(t).map_err(|e| e.to_string())?) {
                return Err(format!("path dependence at {t}"));
            }
            let b = common::skew(q);
            for (v, e) in q.labels().iter().enumerate() {
                let added = scan_flip(p, t, e)?;
                let edges: Vec<TaggedEdge> = t.edges().iter().map(|x| if x == e { added } else { *x }).collect();
                let next = Triangulation::new(p, edges).map_err(|err| err.to_string())?;
                let target = atlas.get(&next).map_err(|err| err.to_string())?;
                // mutated matrix, rows indexed by the labels of q with e renamed
                let mutated = common::mutate_skew(&b, v);
                let labels: Vec<TaggedEdge> = q.labels().iter().map(|x| if x == e { added } else { *x }).collect();
                let pos: Vec<usize> = labels.iter().map(|x| target.index_of(x).unwrap()).collect();
                if common::permute(&mutated, &pos) != common::skew(target) {
                    return Err(format!("n = {n}: mu at {e} differs from the flip of {t}"));
                }
                flips += 1;
            }
        }
    }
    Ok(format!("{flips} flips commute with matrix mutation; two flip orders give equal quivers"))
}

fn criterion6(ctx: &mut Ctx) -> Outcome {
    let mut count = 0;
    for n in 4..=7 {
        for (t, q) in ctx.atlas(n)?.iter() {
            let d = direct_quiver_of(t).map_err(|e| e.to_string())?;
            if !is_isomorphic(&d, q) || !d.same_labelled(q) {
                return Err(format!("n = {n}: {t}"));
            }
            count += 1;
        }
    }
    Ok(format!("direct construction equals the transported quiver on all {count} triangulations for n = 4..7"))
}

fn brute_code<L: Clone + PartialEq>(q: &Quiver<L>) -> common::Skew {
    common::brute_canonical(&common::skew(q))
}

fn criterion7(ctx: &mut Ctx) -> Outcome {
    let mut summary = Vec::new();
    for n in 5..=7 {
        all_pass(&ctx.v(n).prop47()).map_err(|e| format!("n = {n}: {e}"))?;
        let classes = ctx.v(n).classes().map_err(|e| e.to_string())?.len();
        let reps: Vec<Triangulation> = ctx.v(n).classes().unwrap().iter().map(|c| c.representative.clone()).collect();
        let atlas = ctx.atlas(n)?;
        let codes: BTreeSet<common::Skew> = reps.iter().map(|t| brute_code(atlas.get(t).unwrap())).collect();
        let d = common::brute_mutation_class(common::dynkin(true, n as usize));
        if codes.len() != classes || codes != d {
            return Err(format!("n = {n}: {classes} classes, {} quiver classes, |D_{n}| = {}", codes.len(), d.len()));
        }
        summary.push(format!("n = {n}: {classes}"));
    }
    Ok(format!("classes = iso-classes of quivers, bijection verified ({}); brute force agrees", summary.join(", ")))
}

fn criterion8(_: &mut Ctx) -> Outcome {
    let (a, b) = d4_witness().map_err(|e| e.to_string())?.ok_or("no witness pair at n = 4")?;
    if a.canonical_form().0 == b.canonical_form().0 || a.orbit().contains(&b) {
        return Err(format!("{a} and {b} are equivalent"));
    }
    let qa = dncat::quiver::quiver_of(&a).map_err(|e| e.to_string())?;
    let qb = dncat::quiver::quiver_of(&b).map_err(|e| e.to_string())?;
    if !common::brute_isomorphic(&common::skew(&qa), &common::skew(&qb)) {
        return Err(format!("quivers of {a} and {b} are not isomorphic"));
    }
    Ok(format!("witness pair {a} | {b}"))
}

fn connected(b: &common::Skew) -> bool {
    let k = b.len();
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        if !std::mem::replace(&mut seen[i], true) {
            stack.extend((0..k).filter(|&j| b[i][j] != 0 && !seen[j]));
        }
    }
    k == 0 || seen.iter().all(|&s| s)
}

fn delete(b: &common::Skew, v: usize) -> common::Skew {
    b.iter()
        .enumerate()
        .filter(|(i, _)| *i != v)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != v).map(|(_, x)| *x).collect())
        .collect()
}

fn criterion9(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for n in 5..=6 {
        let checks = ctx.v(n).prop45();
        all_pass(&checks[..2]).map_err(|e| format!("n = {n}: {e}"))?;
        let k = (n - 1) as usize;
        let d = common::brute_mutation_class(common::dynkin(true, k));
        let a = common::brute_mutation_class(common::dynkin(false, k));
        let p = Polygon::new(n).unwrap();
        for (t, q) in ctx.atlas(n)?.iter() {
            let b = common::skew(q);
            for (v, m) in q.labels().iter().enumerate() {
                let rest = delete(&b, v);
                let code = common::brute_canonical(&rest);
                let in_d = connected(&rest) && d.contains(&code);
                let in_a = connected(&rest) && a.contains(&code);
                if in_d != (p.classify(m) == EdgeClass::CloseToBorder) || in_a != m.is_spoke() {
                    return Err(format!("n = {n}: {t} at {m}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("both deletion laws hold for {checked} (triangulation, edge) pairs at n = 5, 6"))
}

fn criterion10(ctx: &mut Ctx) -> Outcome {
    for n in 5..=7 {
        all_pass(&ctx.v(n).local()).map_err(|e| format!("n = {n}: {e}"))?;
    }
    Ok("separation, one-or-two neighbours, source/sink/cycle and no multiple arrows hold for n = 5..7".into())
}

fn criterion11(ctx: &mut Ctx) -> Outcome {
    for n in 4..=8 {
        all_pass(&ctx.v(n).ar()[..1]).map_err(|e| format!("n = {n}: {e}"))?;
        let p = Polygon::new(n).unwrap();
        let mut image = BTreeSet::new();
        for e in p.all_edges() {
            let v = phi(p, &e).map_err(|err| err.to_string())?;
            let ok = v.i < n && (1..=n).contains(&v.j) && phi(p, &p.tau(&e)) == tau_ar(p, v) && phi(p, &p.sigma(&e)) == sigma_ar(p, v);
            if !ok {
                return Err(format!("n = {n}: {e}"));
            }
            image.insert(v);
        }
        if image.len() != (n * n) as usize {
            return Err(format!("n = {n}: phi hits {} of {} vertices", image.len(), n * n));
        }
    }
    Ok("phi is a bijection onto Z_n x {1..n} commuting with tau and sigma for n = 4..8".into())
}

fn main() -> ExitCode {
    let criteria: [fn(&mut Ctx) -> Outcome; 11] = [
        criterion1,
        criterion2,
        criterion3,
        criterion4,
        criterion5,
        criterion6,
        criterion7,
        criterion8,
        criterion9,
        criterion10,
        criterion11,
    ];
    let mut ctx = Ctx { verifiers: BTreeMap::new() };
    let mut failed = 0;
    for (i, f) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f(&mut ctx);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({secs:.2}s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.2}s) {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
