//! Isomorph-free generation of cubic graphs by edge insertion, and the
//! exhaustive classification check built on it.
//!
//! Edge insertion subdivides two distinct edges of a cubic graph and joins
//! the two new vertices. Its inverse, edge reduction, deletes an edge `xy`
//! and suppresses `x` and `y`; the reduction is admissible when the result
//! is again simple. Connectivity cannot be required of the reduced graph
//! (the smallest bridged cubic graph reduces only across its bridge), so
//! the search runs over all cubic graphs. The graphs without an admissible
//! reduction are disjoint unions of `K4` and rings of diamonds, and these
//! are the roots. A child is kept only when its inserted edge lies in the
//! orbit of the canonical reducible edge, which makes each isomorphism
//! class appear under exactly one parent.

use crate::canon::{canonical_form, CanonicalForm};
use crate::certify::{find_negative_witness, gap_check, is_psd, m_matrix, main_gap};
use crate::error::{Error, Result};
use crate::families::{classification_list, classify, Classification};
use crate::graph::{to_graph6, Girth, Graph};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};

/// Default largest vertex count.
pub const DEFAULT_CAP: usize = 16;
/// Largest vertex count that can be configured.
pub const HARD_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub min_girth: usize,
    pub connected_only: bool,
    pub cap: usize,
}

impl EnumSpec {
    pub fn new(n: usize) -> Self {
        EnumSpec { n, min_girth: 3, connected_only: true, cap: DEFAULT_CAP }
    }

    pub fn min_girth(mut self, g: usize) -> Self {
        self.min_girth = g;
        self
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 4 || self.n % 2 == 1 {
            return Err(Error::InvalidParameter(format!("cubic graphs need an even n >= 4, got {}", self.n)));
        }
        if self.cap > HARD_CAP {
            return Err(Error::InvalidParameter(format!("cap {} exceeds the hard cap {HARD_CAP}", self.cap)));
        }
        if self.n > self.cap {
            return Err(Error::InvalidParameter(format!("n = {} exceeds the cap {}", self.n, self.cap)));
        }
        if self.min_girth < 3 {
            return Err(Error::InvalidParameter(format!("min_girth must be >= 3, got {}", self.min_girth)));
        }
        Ok(())
    }
}

/// Cubic graph as neighbour triples, used while searching.
#[derive(Debug, Clone)]
struct Cubic {
    adj: Vec<[usize; 3]>,
}

impl Cubic {
    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Cubic {
        let mut adj = vec![[usize::MAX; 3]; n];
        let mut deg = vec![0; n];
        for &(u, v) in edges {
            adj[u][deg[u]] = v;
            adj[v][deg[v]] = u;
            deg[u] += 1;
            deg[v] += 1;
        }
        debug_assert!(deg.iter().all(|&d| d == 3));
        Cubic { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(3 * self.n() / 2);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    fn others(&self, x: usize, y: usize) -> (usize, usize) {
        let mut it = self.adj[x].iter().copied().filter(|&v| v != y);
        (it.next().unwrap(), it.next().unwrap())
    }

    fn replace(&mut self, u: usize, old: usize, new: usize) {
        let slot = self.adj[u].iter().position(|&v| v == old).unwrap();
        self.adj[u][slot] = new;
    }

    /// Subdivides `e` and `f` and joins the new vertices `n` and `n + 1`.
    fn insert(&self, e: (usize, usize), f: (usize, usize)) -> Cubic {
        let n = self.n();
        let (x, y) = (n, n + 1);
        let mut c = self.clone();
        c.adj.push([e.0, e.1, y]);
        c.adj.push([f.0, f.1, x]);
        c.replace(e.0, e.1, x);
        c.replace(e.1, e.0, x);
        c.replace(f.0, f.1, y);
        c.replace(f.1, f.0, y);
        c
    }

    fn reducible(&self, x: usize, y: usize) -> bool {
        if self.n() < 6 {
            return false;
        }
        let (a, b) = self.others(x, y);
        let (c, d) = self.others(y, x);
        !(self.adjacent(a, b) || self.adjacent(c, d) || (a.min(b), a.max(b)) == (c.min(d), c.max(d)))
    }

    /// Triangles and four-cycles through `xy`.
    fn edge_invariant(&self, x: usize, y: usize) -> (usize, usize) {
        let (a, b) = self.others(x, y);
        let (c, d) = self.others(y, x);
        let tri = [c, d].iter().filter(|&&w| w == a || w == b).count();
        let mut quad = 0;
        for p in [a, b] {
            for q in [c, d] {
                if p != q && self.adjacent(p, q) {
                    quad += 1;
                }
            }
        }
        (tri, quad)
    }

    fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.edges()).expect("valid cubic graph")
    }

    fn marked_form(&self, g: &Graph, x: usize, y: usize) -> CanonicalForm {
        let mut colors = vec![0u32; self.n()];
        colors[x] = 1;
        colors[y] = 1;
        canonical_form(g, &colors)
    }

    /// The canonical form of `self` with edge `(n-2, n-1)` marked, if that
    /// edge is in the orbit of the canonical reducible edge.
    fn accept_last(&self) -> Option<CanonicalForm> {
        let (x, y) = (self.n() - 2, self.n() - 1);
        let inv = self.edge_invariant(x, y);
        let mut ties = Vec::new();
        for (u, v) in self.edges() {
            if (u, v) == (x, y) {
                continue;
            }
            let iv = self.edge_invariant(u, v);
            if iv > inv || !self.reducible(u, v) {
                continue;
            }
            if iv < inv {
                return None;
            }
            ties.push((u, v));
        }
        let g = self.to_graph();
        let form = self.marked_form(&g, x, y);
        for (u, v) in ties {
            if self.marked_form(&g, u, v) < form {
                return None;
            }
        }
        Some(form)
    }
}

fn k4() -> Cubic {
    Cubic::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Builds graphs from free vertices joined by chains of diamonds.
struct DiamondBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DiamondBuilder {
    fn new(free: usize) -> Self {
        DiamondBuilder { n: free, edges: Vec::new() }
    }

    /// A chain of `k >= 1` diamonds from `u` to `v`.
    fn chain(&mut self, u: usize, v: usize, k: usize) {
        let mut prev = u;
        for _ in 0..k {
            let (s, a, b, t) = (self.n, self.n + 1, self.n + 2, self.n + 3);
            self.n += 4;
            self.edges.extend([(prev, s), (s, a), (s, b), (a, b), (a, t), (b, t)]);
            prev = t;
        }
        self.edges.push((prev, v));
    }

    fn build(self) -> Cubic {
        Cubic::from_edges(self.n, &self.edges)
    }
}

/// `k` copies of `K4` minus an edge, joined in a cycle through their
/// degree-two vertices. A ring of one diamond is `K4`.
fn ring_of_diamonds(k: usize) -> Cubic {
    if k == 1 {
        return k4();
    }
    let mut b = DiamondBuilder::new(1);
    b.chain(0, 0, k);
    // Contract the free vertex away: its chain ends become adjacent.
    let mut edges: Vec<(usize, usize)> = b.edges.iter().filter(|e| e.0 != 0 && e.1 != 0).map(|&(u, v)| (u - 1, v - 1)).collect();
    edges.push((0, b.n - 2));
    Cubic::from_edges(b.n - 1, &edges)
}

fn disjoint_union(parts: &[&Cubic]) -> Cubic {
    let mut adj = Vec::new();
    for p in parts {
        let off = adj.len();
        adj.extend(p.adj.iter().map(|nb| nb.map(|v| v + off)));
    }
    Cubic { adj }
}

/// Connected cubic graphs on at most `n` vertices with no reducible edge,
/// one per isomorphism class.
fn irreducible_components(n: usize) -> Vec<Cubic> {
    let mut out: Vec<Cubic> = (1..=n / 4).map(ring_of_diamonds).collect();
    let mut forms = HashSet::new();
    for d in 3.. {
        if 2 + 4 * d > n {
            break;
        }
        for i in 1..d {
            for j in 1..d - i {
                let k = d - i - j;
                let mut theta = DiamondBuilder::new(2);
                theta.chain(0, 1, i);
                theta.chain(0, 1, j);
                theta.chain(0, 1, k);
                let mut dumbbell = DiamondBuilder::new(2);
                dumbbell.chain(0, 0, i);
                dumbbell.chain(1, 1, j);
                dumbbell.chain(0, 1, k);
                for c in [theta.build(), dumbbell.build()] {
                    if forms.insert(canonical_form(&c.to_graph(), &vec![0; c.n()])) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Disjoint unions of irreducible components on at most `n` vertices.
fn roots(n: usize) -> Vec<Cubic> {
    fn extend<'a>(comps: &'a [Cubic], rest: usize, max: usize, acc: &mut Vec<&'a Cubic>, out: &mut Vec<Cubic>) {
        if !acc.is_empty() {
            out.push(disjoint_union(acc));
        }
        for i in (0..max).rev() {
            if comps[i].n() <= rest {
                acc.push(&comps[i]);
                extend(comps, rest - comps[i].n(), i + 1, acc, out);
                acc.pop();
            }
        }
    }
    let comps = irreducible_components(n);
    let mut out = Vec::new();
    extend(&comps, n, comps.len(), &mut Vec::new(), &mut out);
    out
}

struct Frame {
    graph: Cubic,
    edges: Vec<(usize, usize)>,
    i: usize,
    j: usize,
    seen: HashSet<CanonicalForm>,
}

impl Frame {
    fn new(graph: Cubic) -> Frame {
        let edges = graph.edges();
        Frame { graph, edges, i: 0, j: 1, seen: HashSet::new() }
    }

    fn next_pair(&mut self) -> Option<((usize, usize), (usize, usize))> {
        if self.j >= self.edges.len() {
            self.i += 1;
            self.j = self.i + 1;
            if self.j >= self.edges.len() {
                return None;
            }
        }
        let pair = (self.edges[self.i], self.edges[self.j]);
        self.j += 1;
        Some(pair)
    }
}

/// Streams the cubic graphs selected by an [`EnumSpec`], one per
/// isomorphism class.
pub struct CubicGraphs {
    spec: EnumSpec,
    roots: Vec<Cubic>,
    stack: Vec<Frame>,
}

impl CubicGraphs {
    fn new(spec: EnumSpec) -> Self {
        let mut roots = roots(spec.n);
        roots.reverse();
        CubicGraphs { spec, roots, stack: Vec::new() }
    }

    fn emit(&self, c: &Cubic) -> Option<Graph> {
        let g = c.to_graph();
        let keep = (!self.spec.connected_only || g.is_connected()) && g.girth().at_least(self.spec.min_girth);
        keep.then_some(g)
    }
}

impl Iterator for CubicGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let Some(frame) = self.stack.last_mut() else {
                let root = self.roots.pop()?;
                if root.n() == self.spec.n {
                    if let Some(g) = self.emit(&root) {
                        return Some(g);
                    }
                } else if root.n() < self.spec.n {
                    self.stack.push(Frame::new(root));
                }
                continue;
            };
            let Some((e, f)) = frame.next_pair() else {
                self.stack.pop();
                continue;
            };
            let child = frame.graph.insert(e, f);
            let Some(form) = child.accept_last() else { continue };
            if !frame.seen.insert(form) {
                continue;
            }
            if child.n() == self.spec.n {
                if let Some(g) = self.emit(&child) {
                    return Some(g);
                }
            } else {
                self.stack.push(Frame::new(child));
            }
        }
    }
}

/// Every cubic graph on `spec.n` vertices with girth at least
/// `spec.min_girth`, once up to isomorphism, restricted to connected graphs
/// when `spec.connected_only` is set.
pub fn enumerate_cubic(spec: EnumSpec) -> Result<CubicGraphs> {
    spec.validate()?;
    Ok(CubicGraphs::new(spec))
}

/// Whether `g` has no eigenvalue in `(-2, 0)`. A negative principal minor
/// of order at most three settles most graphs before the exact count.
pub fn survives_main_gap(g: &Graph) -> bool {
    if g.n() >= 3 && matches!(find_negative_witness(g, 3), Ok(Some(_))) {
        return false;
    }
    gap_check(g, &main_gap()).has_gap
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub graph6: String,
    pub tag: Classification,
    pub girth: Girth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerN {
    pub n: usize,
    pub total: usize,
    pub survivors: Vec<Survivor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub per_n: Vec<PerN>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn survivors(&self) -> impl Iterator<Item = &Survivor> {
        self.per_n.iter().flat_map(|p| &p.survivors)
    }
}

/// Runs the enumeration for every even `n` from 4 to `max_n`, keeps the
/// graphs without eigenvalues in `(-2, 0)` and compares them with the
/// classification list.
pub fn verify_classification(max_n: usize) -> Result<ClassificationReport> {
    verify_classification_with_cap(max_n, DEFAULT_CAP)
}

pub fn verify_classification_with_cap(max_n: usize, cap: usize) -> Result<ClassificationReport> {
    EnumSpec::new(max_n.max(4)).cap(cap).validate()?;
    let mut per_n = Vec::new();
    let mut failures = Vec::new();
    for n in (4..=max_n).step_by(2) {
        let mut total = 0;
        let mut survivors = Vec::new();
        for g in enumerate_cubic(EnumSpec::new(n).cap(cap))? {
            total += 1;
            if !survives_main_gap(&g) {
                continue;
            }
            let graph6 = to_graph6(&g);
            let tag = classify(&g)?;
            if tag == Classification::NotInList {
                failures.push(format!("{graph6}: no eigenvalue in (-2, 0) but not in the list"));
            }
            if !is_psd(&m_matrix(&g))? {
                failures.push(format!("{graph6}: survivor with M not positive semidefinite"));
            }
            survivors.push(Survivor { graph6, tag, girth: g.girth() });
        }
        for member in classification_list(n) {
            if !survivors.iter().any(|s| s.tag == member) {
                failures.push(format!("{member} on {n} vertices was not found among the survivors"));
            }
        }
        per_n.push(PerN { n, total, survivors });
    }
    Ok(ClassificationReport { ok: failures.is_empty(), per_n, failures })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthRow {
    pub girth: Girth,
    pub tags: Vec<Classification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthProfile {
    pub rows: Vec<GirthRow>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl GirthProfile {
    pub fn row(&self, girth: usize) -> &[Classification] {
        self.rows.iter().find(|r| r.girth == Girth::Finite(girth)).map_or(&[], |r| &r.tags)
    }
}

/// Survivors of [`verify_classification`] grouped by girth, with the
/// expected shape of each row checked.
pub fn girth_profile(max_n: usize) -> Result<GirthProfile> {
    let report = verify_classification(max_n)?;
    let mut by_girth: BTreeMap<Girth, Vec<Classification>> = BTreeMap::new();
    for s in report.survivors() {
        by_girth.entry(s.girth).or_default().push(s.tag);
    }
    let mut failures = report.failures.clone();
    for (girth, tags) in &by_girth {
        let allowed = |t: &Classification| match girth {
            Girth::Finite(3) => *t == Classification::Sporadic(crate::families::Sporadic::Prism),
            Girth::Finite(4) => {
                matches!(t, Classification::Sporadic(crate::families::Sporadic::K33) | Classification::Xn(_))
            }
            Girth::Finite(5) => matches!(
                t,
                Classification::Sporadic(
                    crate::families::Sporadic::Petersen | crate::families::Sporadic::Dodecahedron
                )
            ),
            Girth::Finite(8) => *t == Classification::Sporadic(crate::families::Sporadic::Tutte8),
            _ => false,
        };
        for t in tags.iter().filter(|t| !allowed(t)) {
            failures.push(format!("{t} has girth {girth}"));
        }
    }
    let rows = by_girth.into_iter().map(|(girth, tags)| GirthRow { girth, tags }).collect();
    Ok(GirthProfile { rows, ok: failures.is_empty(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form_plain;
    use crate::families::Sporadic;

    fn count(n: usize, girth: usize) -> usize {
        enumerate_cubic(EnumSpec::new(n).min_girth(girth)).unwrap().count()
    }

    #[test]
    fn spec_validation() {
        assert!(EnumSpec::new(7).validate().is_err());
        assert!(EnumSpec::new(2).validate().is_err());
        assert!(EnumSpec::new(18).validate().is_err());
        assert!(EnumSpec::new(18).cap(18).validate().is_ok());
        assert!(EnumSpec::new(20).cap(20).validate().is_err());
        assert!(EnumSpec::new(8).min_girth(2).validate().is_err());
    }

    #[test]
    fn roots_are_irreducible() {
        for c in roots(18) {
            assert!(c.edges().iter().all(|&(u, v)| !c.reducible(u, v)));
            assert!(c.to_graph().is_cubic());
        }
        // Rings of one to four diamonds, two chain graphs on 14 vertices.
        assert_eq!(irreducible_components(16).len(), 6);
        let forms: HashSet<_> = roots(18).iter().map(|c| canonical_form_plain(&c.to_graph())).collect();
        assert_eq!(forms.len(), roots(18).len());
    }

    #[test]
    fn insertion_inverts_reduction() {
        let c = k4().insert((0, 1), (2, 3));
        assert!(c.to_graph().is_cubic());
        assert!(c.reducible(4, 5));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(4, 3), 1);
        assert_eq!(count(6, 3), 2);
        assert_eq!(count(10, 5), 1);
        assert_eq!(count(12, 4), 22);
        assert_eq!(count(12, 3), 85);
    }

    #[test]
    fn outputs_are_pairwise_non_isomorphic() {
        for n in [8, 10, 12] {
            let forms: Vec<_> = enumerate_cubic(EnumSpec::new(n)).unwrap().map(|g| canonical_form_plain(&g)).collect();
            let distinct: HashSet<_> = forms.iter().collect();
            assert_eq!(distinct.len(), forms.len());
        }
    }

    #[test]
    fn petersen_is_the_girth_five_graph_on_ten() {
        let gs: Vec<_> = enumerate_cubic(EnumSpec::new(10).min_girth(5)).unwrap().collect();
        assert_eq!(classify(&gs[0]).unwrap(), Classification::Sporadic(Sporadic::Petersen));
    }

    #[test]
    fn classification_up_to_twelve() {
        let r = verify_classification(12).unwrap();
        assert!(r.ok, "{:?}", r.failures);
        let tags: Vec<_> = r.survivors().map(|s| s.tag.to_string()).collect();
        assert_eq!(tags.len(), 4);
        for t in ["PRISM", "K33", "PETERSEN", "XN(2)"] {
            assert!(tags.contains(&t.to_string()));
        }
        assert!(r.per_n.iter().find(|p| p.n == 8).unwrap().survivors.is_empty());
    }
}
