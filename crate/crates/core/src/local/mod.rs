//! Local structure around girth cycles: coronas, strong open
//! neighbourhoods, and graphs with a marked core.

mod girth5;

pub use girth5::{
    candidate_extensions, compute_girth5_enumeration, enumerate_girth5_extensions, girth5_enumeration, verify_girth5_endgame, CoronaExtension, EndgameTag,
    Girth5Enumeration,
};

use crate::canon::{canonical_form, canonical_labelling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph, VertexSet};
use crate::IntMatrix;
use num_bigint::BigInt;

/// A girth cycle `u_0 .. u_{g-1}` of a cubic host together with the third
/// neighbour `v_i` of each `u_i`.
#[derive(Debug, Clone)]
pub struct Corona {
    pub host: Graph,
    pub cycle: Vec<usize>,
    pub pendants: Vec<usize>,
}

impl Corona {
    /// Cycle vertices then pendants, repeated pendants listed once.
    pub fn vertex_set(&self) -> VertexSet {
        let mut seen = Vec::new();
        for v in self.cycle.iter().chain(&self.pendants) {
            if !seen.contains(v) {
                seen.push(*v);
            }
        }
        VertexSet::new(seen).expect("deduplicated")
    }

    /// Cycle edges followed by spokes `u_i v_i`, in host labels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let g = self.cycle.len();
        (0..g)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % g]))
            .chain((0..g).map(|i| (self.cycle[i], self.pendants[i])))
            .collect()
    }

    /// The corona as a graph on `vertex_set()`, vertex `i` being the
    /// `i`-th member.
    pub fn subgraph(&self) -> Graph {
        let vs = self.vertex_set();
        let pos = |v: usize| vs.as_slice().iter().position(|&x| x == v).unwrap();
        let mut g = Graph::new(vs.len()).expect("small");
        for (a, b) in self.edges() {
            g.add_edge(pos(a), pos(b)).expect("valid edge");
        }
        g
    }
}

/// Corona of a shortest cycle of a cubic graph.
pub fn corona_of_cycle(g: &Graph, cycle: &[usize]) -> Result<Corona> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let len = cycle.len();
    if len < 3 {
        return Err(Error::InvalidCycle(format!("length {len} is too short")));
    }
    let set = VertexSet::new(cycle.to_vec()).map_err(|_| Error::InvalidCycle("repeated vertex".into()))?;
    set.check_in(g)?;
    for i in 0..len {
        if !g.has_edge(cycle[i], cycle[(i + 1) % len]) {
            return Err(Error::InvalidCycle(format!("{} and {} are not adjacent", cycle[i], cycle[(i + 1) % len])));
        }
    }
    if g.girth() != Girth::Finite(len) {
        return Err(Error::InvalidCycle(format!("length {len} differs from the girth {}", g.girth())));
    }
    let mut pendants = Vec::with_capacity(len);
    for &u in cycle {
        let off: Vec<usize> = g.neighbors(u).filter(|w| !set.contains(*w)).collect();
        if off.len() != 1 {
            return Err(Error::InvalidCycle(format!("vertex {u} has {} neighbours off the cycle", off.len())));
        }
        pendants.push(off[0]);
    }
    Ok(Corona { host: g.clone(), cycle: cycle.to_vec(), pendants })
}

/// All cycles of length `len`, each once, starting at its least vertex and
/// oriented so the second vertex is below the last.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, len: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(last, start) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        for w in g.neighbors(last) {
            if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                go(g, len, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        go(g, len, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// `{v not in S : |N(v) ∩ S| >= 2}`, in increasing order.
pub fn strong_open_neighbourhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    s.check_in(g)?;
    let mut in_s = vec![false; g.n()];
    for v in s.iter() {
        in_s[v] = true;
    }
    Ok(VertexSet::from_iter_sorted(
        (0..g.n()).filter(|&v| !in_s[v] && g.neighbors(v).filter(|&w| in_s[w]).count() >= 2),
    ))
}

/// A graph whose vertices are split into a core and external vertices.
/// Each external vertex has at least two neighbours, all in the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub core: VertexSet,
    pub external: VertexSet,
}

impl MarkedGraph {
    /// Vertices outside `core` become external.
    pub fn new(graph: Graph, core: VertexSet) -> Result<Self> {
        core.check_in(&graph)?;
        let external = VertexSet::from_iter_sorted((0..graph.n()).filter(|&v| !core.contains(v)));
        for x in external.iter() {
            let nb: Vec<usize> = graph.neighbors(x).collect();
            if nb.iter().any(|&w| external.contains(w)) {
                return Err(Error::Precondition(format!("external vertex {x} has an external neighbour")));
            }
            if nb.len() < 2 {
                return Err(Error::Precondition(format!("external vertex {x} has fewer than two core neighbours")));
            }
        }
        Ok(MarkedGraph { graph, core, external })
    }

    /// Colour 0 for core vertices, 1 for external ones.
    pub fn colors(&self) -> Vec<u32> {
        (0..self.graph.n()).map(|v| u32::from(!self.core.contains(v))).collect()
    }

    /// One character per vertex label: `1` for core, `0` for external.
    pub fn core_mask(&self) -> String {
        (0..self.graph.n()).map(|v| if self.core.contains(v) { '1' } else { '0' }).collect()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.graph, &self.colors())
    }

    /// Relabelled canonically. Core vertices receive the lowest labels.
    pub fn canonical(&self) -> MarkedGraph {
        let lab = canonical_labelling(&self.graph, &self.colors());
        let graph = self.graph.relabel(&lab.labels).expect("permutation");
        let core = VertexSet::from_iter_sorted(self.core.iter().map(|v| lab.labels[v]));
        MarkedGraph::new(graph, core).expect("relabelling preserves the marking")
    }
}

/// `S ∪ N≥2(S)` with every host edge that has an endpoint in `S`. Core
/// vertex `i` is `s[i]`; external vertices follow in increasing host order.
pub fn tilde_subgraph(g: &Graph, s: &VertexSet) -> Result<MarkedGraph> {
    let ext = strong_open_neighbourhood(g, s)?;
    let verts: Vec<usize> = s.iter().chain(ext.iter()).collect();
    let k = s.len();
    let mut h = Graph::new(verts.len())?;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if (i < k || j < k) && g.has_edge(verts[i], verts[j]) {
                h.add_edge(i, j)?;
            }
        }
    }
    MarkedGraph::new(h, VertexSet::from_iter_sorted(0..k))
}

/// Colour-preserving isomorphism of marked graphs.
pub fn colored_isomorphic(a: &MarkedGraph, b: &MarkedGraph) -> bool {
    a.graph.n() == b.graph.n()
        && a.core.len() == b.core.len()
        && a.graph.edge_count() == b.graph.edge_count()
        && a.canonical_form() == b.canonical_form()
}

/// `M_SS` with `S` the core, assuming a cubic completion: diagonal 3,
/// off-diagonal entries from adjacency and common neighbours in the marked
/// graph.
pub fn m_ss_from_marked(mg: &MarkedGraph) -> IntMatrix {
    let core = mg.core.as_slice();
    let k = core.len();
    let g = &mg.graph;
    let mut m = IntMatrix::zeros(k);
    for i in 0..k {
        m[(i, i)] = BigInt::from(3);
        for j in 0..k {
            if i != j {
                let (u, v) = (core[i], core[j]);
                let c = g.common_neighbor_count(u, v) + if g.has_edge(u, v) { 2 } else { 0 };
                m[(i, j)] = BigInt::from(c);
            }
        }
    }
    m
}
