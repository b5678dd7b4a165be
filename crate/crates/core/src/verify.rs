//! Exhaustive verification suites. Every check scans its domain in canonical
//! order and reports the first (smallest) counterexample it meets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::arquiver::{phi, phi_inv, sigma_ar, tau_ar, ArQuiver};
use crate::error::{Error, Result};
use crate::geometry::{EdgeClass, Polygon, TaggedEdge};
use crate::quiver::{
    canonical_code, direct_quiver_of, is_isomorphic, relations_of, CanonicalCode, FlipOrder, MutationClass, Quiver, QuiverAtlas,
};
use crate::triangulation::{classes, enumerate_all, is_triangulation, Triangulation, TriangulationClass, TriangulationType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Crossing,
    Flip,
    Transport,
    Types,
    Prop45,
    Prop47,
    D4,
    Ar,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = ["crossing", "flip", "transport", "types", "prop45", "prop47", "d4", "ar", "all"];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [Suite; 9] =
            [Suite::Crossing, Suite::Flip, Suite::Transport, Suite::Types, Suite::Prop45, Suite::Prop47, Suite::D4, Suite::Ar, Suite::All];
        ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub n: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} at n = {}", self.suite, self.n)?;
        for c in &self.checks {
            writeln!(f, "  {} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "verification FAILED" })
    }
}

/// A check body: `Ok(summary)` on success, `Err(counterexample)` otherwise.
type Outcome = std::result::Result<String, String>;

fn check(name: &str, outcome: Result<Outcome>) -> Check {
    let (passed, detail) = match outcome {
        Ok(Ok(summary)) => (true, summary),
        Ok(Err(witness)) => (false, format!("counterexample: {witness}")),
        Err(e) => (false, format!("error: {e}")),
    };
    Check { name: name.to_string(), passed, detail }
}

/// First failing item in iteration order, or `Ok(summary)`.
fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    summary: String,
    mut bad: impl FnMut(T) -> Result<Option<String>>,
) -> Result<Outcome> {
    for item in items {
        if let Some(witness) = bad(item)? {
            return Ok(Err(witness));
        }
    }
    Ok(Ok(summary))
}

/// Lazily computed data shared by the checks for one `n`.
pub struct Verifier {
    polygon: Polygon,
    all: OnceLock<Vec<Triangulation>>,
    atlas: OnceLock<Result<QuiverAtlas>>,
    classes: OnceLock<Result<Vec<TriangulationClass>>>,
}

impl Verifier {
    pub fn new(polygon: Polygon) -> Self {
        Verifier { polygon, all: OnceLock::new(), atlas: OnceLock::new(), classes: OnceLock::new() }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn triangulations(&self) -> &[Triangulation] {
        self.all.get_or_init(|| enumerate_all(self.polygon))
    }

    pub fn atlas(&self) -> Result<&QuiverAtlas> {
        self.atlas.get_or_init(|| QuiverAtlas::build(self.polygon)).as_ref().map_err(Clone::clone)
    }

    pub fn classes(&self) -> Result<&[TriangulationClass]> {
        self.classes.get_or_init(|| classes(self.triangulations())).as_deref().map_err(Clone::clone)
    }

    fn quiver(&self, t: &Triangulation) -> Result<&Quiver<TaggedEdge>> {
        self.atlas()?.get(t)
    }

    pub fn run(&self, suite: Suite) -> Report {
        let n = self.polygon.n();
        let checks = match suite {
            Suite::Crossing => self.crossing(),
            Suite::Flip => self.flip(),
            Suite::Transport => self.transport(),
            Suite::Types => self.types(),
            Suite::Prop45 => self.prop45(),
            Suite::Prop47 => self.prop47(),
            Suite::D4 => vec![d4_check()],
            Suite::Ar => self.ar(),
            Suite::All => {
                let mut all = self.crossing();
                all.extend(self.flip());
                all.extend(self.transport());
                all.extend(self.types());
                all.extend(self.ar());
                if n >= 5 {
                    all.extend(self.prop45());
                    all.extend(self.prop47());
                }
                all.push(d4_check());
                all
            }
        };
        Report { suite: suite.name().to_string(), n: if suite == Suite::D4 { 4 } else { n }, checks }
    }

    pub fn crossing(&self) -> Vec<Check> {
        let p = self.polygon;
        let n = p.n();
        let edges = p.all_edges();
        let pairs = || edges.iter().flat_map(|m| edges.iter().map(move |e| (m, e)));
        vec![
            check(
                "alphabet size",
                Ok(if edges.len() == (n * n) as usize {
                    Ok(format!("{} tagged edges", edges.len()))
                } else {
                    Err(format!("{} edges", edges.len()))
                }),
            ),
            check(
                "crossing symmetric and invariant under tau and sigma",
                first_failure(pairs(), format!("{} ordered pairs", edges.len() * edges.len()), |(m, e)| {
                    let c = p.crossing(m, e);
                    let ok = c == p.crossing(e, m)
                        && c == p.crossing(&p.tau(m), &p.tau(e))
                        && c == p.crossing(&p.sigma(m), &p.sigma(e))
                        && (m != e || c == 0)
                        && c <= 2
                        && (c < 2 || (m.is_plain() && e.is_plain()));
                    Ok((!ok).then(|| format!("e({m}, {e}) = {c}")))
                }),
            ),
            check(
                "tau and sigma are bijections; sigma is an involution",
                first_failure(&edges, "checked on every edge".into(), |e| {
                    let ok = p.tau_inv(&p.tau(e)) == *e && p.sigma(&p.sigma(e)) == *e && p.sigma(&p.tau(e)) == p.tau(&p.sigma(e));
                    Ok((!ok).then(|| e.to_string()))
                }),
            ),
            check(
                "every maximal non-crossing set has n edges",
                first_failure(self.triangulations(), format!("{} maximal sets", self.triangulations().len()), |t| {
                    let ok = t.edges().len() == n as usize && is_triangulation(p, t.edges())?;
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
        ]
    }

    pub fn flip(&self) -> Vec<Check> {
        let all = self.triangulations();
        vec![
            check(
                "every edge has a unique flip and flips are involutions",
                first_failure(all, format!("{} triangulations, {} flips", all.len(), all.len() * self.polygon.n() as usize), |t| {
                    for e in t.edges() {
                        match t.flip(e) {
                            Ok((next, r)) => {
                                if next.flip(&r)? != (t.clone(), *e) {
                                    return Ok(Some(format!("{t} at {e}")));
                                }
                            }
                            Err(err) => return Ok(Some(format!("{t} at {e}: {err}"))),
                        }
                    }
                    Ok(None)
                }),
            ),
            check(
                "flip graph is connected",
                self.atlas().map(|a| {
                    if a.len() == all.len() {
                        Ok(format!("breadth-first search from the fan reaches all {}", all.len()))
                    } else {
                        Err(format!("reached {} of {}", a.len(), all.len()))
                    }
                }),
            ),
        ]
    }

    pub fn transport(&self) -> Vec<Check> {
        let all = self.triangulations();
        let count = format!("{} triangulations", all.len());
        vec![
            check(
                "flip and mutation commute",
                self.atlas().and_then(|a| {
                    Ok(match a.first_commutation_failure()? {
                        None => Ok(format!("{} flips", all.len() * self.polygon.n() as usize)),
                        Some((t, e)) => Err(format!("{t} at {e}")),
                    })
                }),
            ),
            check(
                "transport is independent of the flip path",
                QuiverAtlas::build_with(self.polygon, FlipOrder::Reversed)
                    .and_then(|rev| first_failure(all, count.clone(), |t| Ok((self.quiver(t)? != rev.get(t)?).then(|| t.to_string())))),
            ),
            check(
                "direct construction agrees with transport",
                first_failure(all, count.clone(), |t| Ok((!self.quiver(t)?.same_labelled(&direct_quiver_of(t)?)).then(|| t.to_string()))),
            ),
            check(
                "quivers are invariant under tau and sigma up to isomorphism",
                first_failure(all, count.clone(), |t| {
                    let q = self.quiver(t)?;
                    let ok = is_isomorphic(q, self.quiver(&t.tau())?) && is_isomorphic(q, self.quiver(&t.sigma())?);
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
            check(
                "relation paths are composable",
                first_failure(all, count, |t| Ok(relations_of(t, self.quiver(t)?).err().map(|e| format!("{t}: {e}")))),
            ),
        ]
    }

    pub fn types(&self) -> Vec<Check> {
        let p = self.polygon;
        let n = p.n();
        let all = self.triangulations();
        let count = format!("{} triangulations", all.len());
        let mut checks = vec![
            check(
                "classification is total and exclusive",
                first_failure(all, count.clone(), |t| {
                    let long = t.edges().iter().any(|e| e.is_plain() && p.length(e) == n);
                    let s: Vec<&TaggedEdge> = t.spokes().collect();
                    let double = s.len() == 2 && s[0].start() == s[1].start();
                    let flags = [long, !long && double, !long && s.len() == 2 && !double, !long && s.len() >= 3];
                    let ok = flags.iter().filter(|&&f| f).count() == 1
                        && t.classify_type()? == TriangulationType::ALL[flags.iter().position(|&f| f).unwrap_or(0)];
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
            check(
                "at least two degenerate edges; distinct spokes share a tag unless doubled",
                first_failure(all, count.clone(), |t| {
                    let s: Vec<&TaggedEdge> = t.spokes().collect();
                    let double = s.iter().any(|x| s.iter().any(|y| x != y && x.start() == y.start()));
                    let tags_agree = s
                        .windows(2)
                        .all(|w| matches!((w[0], w[1]), (TaggedEdge::Spoke { tag: a, .. }, TaggedEdge::Spoke { tag: b, .. }) if a == b));
                    Ok((s.len() < 2 || !(double || tags_agree)).then(|| t.to_string()))
                }),
            ),
            check(
                "an edge of length n forces a double or a pairing",
                first_failure(all, count.clone(), |t| {
                    let long = t.edges().iter().any(|e| e.is_plain() && p.length(e) == n);
                    let s: Vec<&TaggedEdge> = t.spokes().collect();
                    let ok = !long || (s.len() == 2 && (s[0].start() == s[1].start() || pairing(p, s[0], s[1])));
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
            check(
                "type 2 contains p:a-b and p:b-a",
                first_failure(all, count.clone(), |t| {
                    if t.classify_type()? != TriangulationType::Type2 {
                        return Ok(None);
                    }
                    let a = t.spokes().next().unwrap().start();
                    let ok = (1..=n).any(|b| b != a && t.contains(&TaggedEdge::plain(a, b)) && t.contains(&TaggedEdge::plain(b, a)));
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
            check(
                "consecutive spokes at non-neighbours are joined by an edge",
                first_failure(all, count.clone(), |t| {
                    let mut bases: Vec<u32> = t.spokes().map(TaggedEdge::start).collect();
                    bases.sort_unstable();
                    bases.dedup();
                    if bases.len() < 2 {
                        return Ok(None);
                    }
                    for (i, &a) in bases.iter().enumerate() {
                        let b = bases[(i + 1) % bases.len()];
                        if p.offset(a, b) > 1 && !t.contains(&TaggedEdge::plain(a, b)) {
                            return Ok(Some(format!("{t}: missing p:{a}-{b}")));
                        }
                    }
                    Ok(None)
                }),
            ),
        ];
        checks.push(check("type census", self.census()));
        checks.extend(self.local());
        checks
    }

    fn census(&self) -> Result<Outcome> {
        let mut census: BTreeMap<TriangulationType, usize> = BTreeMap::new();
        for c in self.classes()? {
            *census.entry(c.kind).or_default() += 1;
        }
        let text =
            TriangulationType::ALL.iter().map(|k| format!("{k}: {}", census.get(k).copied().unwrap_or(0))).collect::<Vec<_>>().join(", ");
        let type1 = census.get(&TriangulationType::Type1).copied().unwrap_or(0);
        Ok(if self.polygon.n() == 5 && type1 != 15 {
            Err(format!("{type1} classes of type 1 at n = 5 ({text})"))
        } else {
            Ok(format!("classes by type: {text}"))
        })
    }

    /// Local structure of the quiver around single vertices.
    pub fn local(&self) -> Vec<Check> {
        let p = self.polygon;
        let all = self.triangulations();
        let count = format!("{} triangulations", all.len());
        vec![
            check(
                "no loops, 2-cycles or multiple arrows; connected",
                first_failure(all, count.clone(), |t| {
                    let q = self.quiver(t)?;
                    let ok = q.max_multiplicity() <= 1 && !q.has_loops() && !q.has_two_cycles() && q.is_connected();
                    Ok((!ok).then(|| t.to_string()))
                }),
            ),
            check(
                "a connected edge separates its polygon side from the rest",
                first_failure(all, count.clone(), |t| {
                    let q = self.quiver(t)?;
                    for m in t.edges().iter().filter(|e| p.classify(e) == EdgeClass::Connected) {
                        let (inside, outside) = sides(p, t, m);
                        let deleted = q.delete_vertex(m)?;
                        let comp = deleted.component_ids();
                        let at = |e: &TaggedEdge| comp[deleted.index_of(e).unwrap()];
                        let direct = inside
                            .iter()
                            .any(|x| outside.iter().any(|y| q.has_arrow(idx(q, x), idx(q, y)) || q.has_arrow(idx(q, y), idx(q, x))));
                        let linked = inside.iter().any(|x| outside.iter().any(|y| at(x) == at(y)));
                        if inside.is_empty() || direct || linked {
                            return Ok(Some(format!("{t} at {m}")));
                        }
                    }
                    Ok(None)
                }),
            ),
            check(
                "a connected edge has one or two neighbours on its polygon side, on a 3-cycle if two",
                first_failure(all, count.clone(), |t| {
                    let q = self.quiver(t)?;
                    for m in t.edges().iter().filter(|e| p.classify(e) == EdgeClass::Connected) {
                        let (inside, _) = sides(p, t, m);
                        let v = idx(q, m);
                        let near: Vec<usize> = q.neighbors(v).into_iter().filter(|w| inside.contains(q.label(*w))).collect();
                        let ok = match near.as_slice() {
                            [_] => true,
                            [x, y] => q.oriented_three_cycles().iter().any(|c| c.contains(&v) && c.contains(x) && c.contains(y)),
                            _ => false,
                        };
                        if !ok {
                            return Ok(Some(format!("{t} at {m}")));
                        }
                    }
                    Ok(None)
                }),
            ),
            check(
                "an edge close to the border is a source, a sink or on a cycle",
                first_failure(all, count, |t| {
                    let q = self.quiver(t)?;
                    for m in t.edges().iter().filter(|e| p.classify(e) == EdgeClass::CloseToBorder) {
                        let v = idx(q, m);
                        if !(q.is_source(v) || q.is_sink(v) || q.on_oriented_cycle(v)) {
                            return Ok(Some(format!("{t} at {m}")));
                        }
                    }
                    Ok(None)
                }),
            ),
        ]
    }

    pub fn prop45(&self) -> Vec<Check> {
        let p = self.polygon;
        let n = p.n();
        if n < 5 {
            return vec![check("deletion laws", Err(Error::UnsupportedSize { n, min: 5, max: crate::geometry::MAX_SUPPORTED_N }))];
        }
        let k = (n - 1) as usize;
        let classes = MutationClass::d(k).and_then(|d| Ok((d, MutationClass::a(k)?)));
        let smaller = Polygon::new(n - 1).and_then(QuiverAtlas::build);
        let all = self.triangulations();
        let count = format!("{} triangulations, {} edges each", all.len(), n);
        let law = |want_d: bool| -> Result<Outcome> {
            let (d, a) = classes.as_ref().map_err(Clone::clone)?;
            let class = if want_d { d } else { a };
            first_failure(all, count.clone(), |t| {
                let q = self.quiver(t)?;
                for m in t.edges() {
                    let rest = q.delete_vertex(m)?;
                    let member = rest.is_connected() && class.contains(&rest);
                    let expected = if want_d { p.classify(m) == EdgeClass::CloseToBorder } else { m.is_spoke() };
                    if member != expected {
                        return Ok(Some(format!("{t} at {m}")));
                    }
                }
                Ok(None)
            })
        };
        vec![
            check(&format!("deleting V_M gives a connected member of D_{k} iff M is close to the border"), law(true)),
            check(&format!("deleting V_M gives a connected member of A_{k} iff M is degenerate"), law(false)),
            check(
                "the quiver of the quotient is the quiver with V_M deleted",
                smaller.and_then(|small| {
                    first_failure(all, count.clone(), |t| {
                        let q = self.quiver(t)?;
                        for m in t.edges().iter().filter(|e| p.classify(e) == EdgeClass::CloseToBorder) {
                            if !is_isomorphic(&q.delete_vertex(m)?, small.get(&t.quotient(m)?)?) {
                                return Ok(Some(format!("{t} at {m}")));
                            }
                        }
                        Ok(None)
                    })
                }),
            ),
            check(
                "deleting a connected edge disconnects the quiver",
                first_failure(all, count, |t| {
                    let q = self.quiver(t)?;
                    for m in t.edges().iter().filter(|e| p.classify(e) == EdgeClass::Connected) {
                        if q.delete_vertex(m)?.is_connected() {
                            return Ok(Some(format!("{t} at {m}")));
                        }
                    }
                    Ok(None)
                }),
            ),
        ]
    }

    /// Canonical code of the quiver of every class representative.
    pub fn class_codes(&self) -> Result<Vec<(Triangulation, CanonicalCode)>> {
        self.classes()?.iter().map(|c| Ok((c.representative.clone(), canonical_code(self.quiver(&c.representative)?)))).collect()
    }

    pub fn prop47(&self) -> Vec<Check> {
        let n = self.polygon.n();
        let injective = self.class_codes().map(|codes| {
            let mut seen: BTreeMap<&CanonicalCode, &Triangulation> = BTreeMap::new();
            for (t, code) in &codes {
                if let Some(other) = seen.insert(code, t) {
                    return Err(format!("{other} and {t} have isomorphic quivers"));
                }
            }
            Ok(format!("{} classes give {} pairwise non-isomorphic quivers", codes.len(), codes.len()))
        });
        let onto = self.class_codes().and_then(|codes| {
            let d = MutationClass::d(n as usize)?;
            if let Some((t, _)) = codes.iter().find(|(_, c)| !d.contains_code(c)) {
                return Ok(Err(format!("the quiver of {t} is not mutation equivalent to D_{n}")));
            }
            let image: std::collections::BTreeSet<&CanonicalCode> = codes.iter().map(|(_, c)| c).collect();
            Ok(if image.len() == d.len() {
                Ok(format!("all {} quivers of the D_{n} mutation class are reached", d.len()))
            } else {
                Err(format!("{} of {} quivers in the D_{n} mutation class are reached", image.len(), d.len()))
            })
        });
        let mut checks =
            vec![check("classes to quivers is injective", injective), check("classes to quivers is onto the mutation class", onto)];
        let both = checks.iter().all(|c| c.passed);
        checks.push(check(
            "classes to quivers is a bijection",
            Ok(if both { Ok("classes = iso-classes of quivers, bijection verified".into()) } else { Err("see above".into()) }),
        ));
        checks
    }

    pub fn ar(&self) -> Vec<Check> {
        let p = self.polygon;
        let edges = p.all_edges();
        let ar = ArQuiver::build(p);
        vec![
            check(
                "phi is a bijection intertwining tau and sigma",
                first_failure(&edges, format!("{} edges", edges.len()), |e| {
                    let v = phi(p, e)?;
                    let ok = phi_inv(p, v)? == *e && phi(p, &p.tau(e))? == tau_ar(p, v)? && phi(p, &p.sigma(e))? == sigma_ar(p, v)?;
                    Ok((!ok).then(|| e.to_string()))
                })
                .map(|o| {
                    let mut images: Vec<_> = edges.iter().filter_map(|e| phi(p, e).ok()).collect();
                    images.sort();
                    images.dedup();
                    o.and_then(|s| if images.len() == edges.len() { Ok(s) } else { Err("phi is not injective".into()) })
                }),
            ),
            check(
                "AR arrows form a stable translation quiver",
                first_failure(ar.arrows(), format!("{} arrows", ar.arrows().len()), |&(u, v)| {
                    let ok = ar.has_arrow(tau_ar(p, u)?, tau_ar(p, v)?) && ar.has_arrow(tau_ar(p, v)?, u);
                    Ok((!ok).then(|| format!("{u} -> {v}")))
                }),
            ),
            check(
                "AR arrows carry non-zero morphisms",
                first_failure(ar.arrows(), format!("{} arrows", ar.arrows().len()), |&(u, v)| {
                    Ok((p.hom_dim(&phi_inv(p, u)?, &phi_inv(p, v)?) == 0).then(|| format!("{u} -> {v}")))
                }),
            ),
        ]
    }
}

fn idx(q: &Quiver<TaggedEdge>, e: &TaggedEdge) -> usize {
    q.index_of(e).expect("edge of the triangulation")
}

fn pairing(p: Polygon, x: &TaggedEdge, y: &TaggedEdge) -> bool {
    let (a, b) = (x.start(), y.start());
    (p.offset(a, b) == 1 || p.offset(b, a) == 1)
        && matches!((x, y), (TaggedEdge::Spoke { tag: s, .. }, TaggedEdge::Spoke { tag: t, .. }) if s == t)
}

/// Edges of `t` on the polygon side of the plain edge `m` (inside its
/// counterclockwise interval), and the others apart from `m`.
fn sides(p: Polygon, t: &Triangulation, m: &TaggedEdge) -> (Vec<TaggedEdge>, Vec<TaggedEdge>) {
    let TaggedEdge::Plain { a, b } = *m else { return (Vec::new(), Vec::new()) };
    let span = p.offset(a, b);
    t.edges().iter().filter(|e| *e != m).partition(|e| match **e {
        TaggedEdge::Plain { a: x, b: y } => p.offset(a, x) < p.offset(a, y) && p.offset(a, y) <= span,
        TaggedEdge::Spoke { .. } => false,
    })
}

/// Two inequivalent triangulations of the punctured square with isomorphic
/// quivers, the pair smallest in canonical order.
pub fn d4_witness() -> Result<Option<(Triangulation, Triangulation)>> {
    let v = Verifier::new(Polygon::new(4)?);
    let codes = v.class_codes()?;
    for (i, (t, c)) in codes.iter().enumerate() {
        if let Some((u, _)) = codes[i + 1..].iter().find(|(_, d)| d == c) {
            return Ok(Some((t.clone(), u.clone())));
        }
    }
    Ok(None)
}

fn d4_check() -> Check {
    check(
        "two inequivalent triangulations at n = 4 with isomorphic quivers",
        d4_witness().map(|w| match w {
            Some((a, b)) => Ok(format!("witness pair {a} | {b}")),
            None => Err("every pair of classes has non-isomorphic quivers".into()),
        }),
    )
}
