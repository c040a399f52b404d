//! Extensions of the corona `C5 ∘ K1` that can occur as `S̃` in a cubic
//! graph of girth five.

use super::{colored_isomorphic, corona_of_cycle, cycles_of_length, m_ss_from_marked, tilde_subgraph, MarkedGraph};
use crate::canon::{isomorphic, CanonicalForm};
use crate::certify::{gap_check, is_psd, main_gap};
use crate::error::{Error, Result};
use crate::graph::{cycle_corona, dodecahedron, petersen, Girth, Graph, VertexSet};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const PENDANT: usize = 5;

/// Edges among pendants `v_i = 5 + i` of `C5 ∘ K1` (cycle `u_i = i`) and
/// external vertices attached to two or three pendants. Pendants are given
/// by index `0..5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaExtension {
    pub internal_edges: Vec<(usize, usize)>,
    pub attachments: Vec<Vec<usize>>,
}

impl CoronaExtension {
    /// Base vertices `0..10`, external vertex `10 + k` for attachment `k`.
    pub fn realize(&self) -> Result<MarkedGraph> {
        let n = 10 + self.attachments.len();
        let mut g = Graph::new(n)?;
        for (u, v) in cycle_corona(5)?.edges() {
            g.add_edge(u, v)?;
        }
        for &(a, b) in &self.internal_edges {
            g.add_edge(PENDANT + a, PENDANT + b)?;
        }
        for (k, att) in self.attachments.iter().enumerate() {
            for &p in att {
                g.add_edge(10 + k, PENDANT + p)?;
            }
        }
        MarkedGraph::new(g, VertexSet::from_iter_sorted(0..10))
    }

    /// No cycle shorter than five and no pair of vertices with two common
    /// neighbours.
    pub fn is_structurally_valid(&self) -> bool {
        let Ok(mg) = self.realize() else {
            return false;
        };
        let g = &mg.graph;
        g.max_degree() <= 3
            && g.girth().at_least(5)
            && (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.common_neighbor_count(u, v) < 2))
    }
}

/// Every extension with pendant degrees at most three and attachment sets
/// meeting pairwise in at most one pendant, in depth-first order.
pub fn candidate_extensions() -> Vec<CoronaExtension> {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut sets: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                sets.push(vec![a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let internal: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let mut free = [2i32; 5];
        for &(a, b) in &internal {
            free[a] -= 1;
            free[b] -= 1;
        }
        if free.iter().any(|&f| f < 0) {
            continue;
        }
        let mut chosen = Vec::new();
        attach(&sets, 0, &mut free, &mut chosen, &internal, &mut out);
    }
    out
}

fn attach(
    sets: &[Vec<usize>],
    from: usize,
    free: &mut [i32; 5],
    chosen: &mut Vec<usize>,
    internal: &[(usize, usize)],
    out: &mut Vec<CoronaExtension>,
) {
    out.push(CoronaExtension {
        internal_edges: internal.to_vec(),
        attachments: chosen.iter().map(|&i| sets[i].clone()).collect(),
    });
    for i in from..sets.len() {
        let s = &sets[i];
        if s.iter().any(|&p| free[p] == 0) {
            continue;
        }
        if chosen.iter().any(|&j| sets[j].iter().filter(|p| s.contains(p)).count() > 1) {
            continue;
        }
        for &p in s {
            free[p] -= 1;
        }
        chosen.push(i);
        attach(sets, i + 1, free, chosen, internal, out);
        chosen.pop();
        for &p in s {
            free[p] += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct Girth5Enumeration {
    /// Extensions satisfying the degree and intersection rules.
    pub candidates: usize,
    /// Candidates that also pass the girth rules.
    pub structurally_valid: usize,
    /// Structurally valid candidates with `M_SS` positive semidefinite.
    pub psd: usize,
    /// Colour-isomorphism classes of PSD candidates, canonically labelled,
    /// sorted by canonical form.
    pub survivors: Vec<MarkedGraph>,
}

/// Runs the enumeration from scratch.
pub fn compute_girth5_enumeration() -> Girth5Enumeration {
    let candidates = candidate_extensions();
    let mut structurally_valid = 0;
    let mut psd = 0;
    let mut classes: BTreeMap<CanonicalForm, MarkedGraph> = BTreeMap::new();
    for ext in &candidates {
        if !ext.is_structurally_valid() {
            continue;
        }
        structurally_valid += 1;
        let mg = ext.realize().expect("valid extension");
        if !is_psd(&m_ss_from_marked(&mg)).expect("symmetric") {
            continue;
        }
        psd += 1;
        let canon = mg.canonical();
        classes.entry(canon.canonical_form()).or_insert(canon);
    }
    Girth5Enumeration { candidates: candidates.len(), structurally_valid, psd, survivors: classes.into_values().collect() }
}

/// Cached result of the full enumeration.
pub fn girth5_enumeration() -> &'static Girth5Enumeration {
    static CELL: OnceLock<Girth5Enumeration> = OnceLock::new();
    CELL.get_or_init(compute_girth5_enumeration)
}

/// The surviving configurations `S̃`, one per colour-isomorphism class.
pub fn enumerate_girth5_extensions() -> Vec<MarkedGraph> {
    girth5_enumeration().survivors.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EndgameTag {
    Petersen,
    Dodecahedron,
    Inconsistent,
}

fn tilde_of_first_corona(g: &Graph) -> MarkedGraph {
    let c = &cycles_of_length(g, 5)[0];
    tilde_subgraph(g, &corona_of_cycle(g, c).expect("girth cycle").vertex_set()).expect("valid set")
}

/// For a cubic girth-five graph with no eigenvalue in `(-2, 0)`, checks
/// that `S̃` of every 5-cycle corona is one of the two configurations that
/// close up, and identifies the graph.
pub fn verify_girth5_endgame(g: &Graph) -> Result<EndgameTag> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if g.girth() != Girth::Finite(5) {
        return Err(Error::Precondition(format!("girth is {}, not 5", g.girth())));
    }
    if !gap_check(g, &main_gap()).has_gap {
        return Err(Error::Precondition("graph has an eigenvalue in (-2, 0)".into()));
    }
    let survivors = &girth5_enumeration().survivors;
    let x1 = tilde_of_first_corona(&petersen());
    let x7 = tilde_of_first_corona(&dodecahedron());
    let allowed: Vec<&MarkedGraph> =
        survivors.iter().filter(|s| colored_isomorphic(s, &x1) || colored_isomorphic(s, &x7)).collect();
    for c in cycles_of_length(g, 5) {
        let t = tilde_subgraph(g, &corona_of_cycle(g, &c)?.vertex_set())?;
        if !allowed.iter().any(|s| colored_isomorphic(s, &t)) {
            return Ok(EndgameTag::Inconsistent);
        }
    }
    Ok(if isomorphic(g, &petersen()) {
        EndgameTag::Petersen
    } else if isomorphic(g, &dodecahedron()) {
        EndgameTag::Dodecahedron
    } else {
        EndgameTag::Inconsistent
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_corona_is_a_candidate() {
        let bare = CoronaExtension { internal_edges: vec![], attachments: vec![] };
        assert!(bare.is_structurally_valid());
        assert!(candidate_extensions().contains(&bare));
    }

    #[test]
    fn consecutive_pendant_edge_is_rejected() {
        let ext = CoronaExtension { internal_edges: vec![(0, 1)], attachments: vec![] };
        assert!(!ext.is_structurally_valid());
        let ext = CoronaExtension { internal_edges: vec![(0, 2)], attachments: vec![] };
        assert!(ext.is_structurally_valid());
    }

    #[test]
    fn endgame_preconditions() {
        assert!(verify_girth5_endgame(&crate::graph::prism()).is_err());
        assert!(verify_girth5_endgame(&crate::graph::generalized_petersen(7, 2).unwrap()).is_err());
    }
}
