//! Canonical labelling of vertex-coloured graphs by colour refinement and
//! individualisation. Two coloured graphs are isomorphic (by a bijection
//! preserving colours) exactly when their canonical forms are equal.
//!
//! Leaves with equal forms give automorphisms; at each node only one child
//! per orbit of the automorphisms fixing the individualised vertices is
//! explored.

use crate::graph::Graph;

/// Isomorphism invariant that determines a coloured graph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    /// Colour of the vertex with canonical label `i`.
    pub colors: Vec<u32>,
    /// Edges in canonical labels, `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(u32, u32)>,
}

/// Canonical labelling: `labels[v]` is the canonical label of vertex `v`.
#[derive(Debug, Clone)]
pub struct Labelling {
    pub labels: Vec<usize>,
    pub form: CanonicalForm,
}

struct Search<'a> {
    adj: Vec<Vec<usize>>,
    colors: &'a [u32],
    best: Option<Labelling>,
    automorphisms: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Refines `cell` (vertex to cell index) until equitable. Cell indices stay
/// ordered consistently with the input partition.
fn refine(adj: &[Vec<usize>], cell: &mut [usize]) {
    let n = cell.len();
    let mut cells = {
        let mut seen = cell.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    let mut order: Vec<usize> = (0..n).collect();
    let mut sig: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new()); n];
    loop {
        for v in 0..n {
            let mut nb: Vec<usize> = adj[v].iter().map(|&w| cell[w]).collect();
            nb.sort_unstable();
            sig[v] = (cell[v], nb);
        }
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
        let mut next = 0;
        for i in 0..n {
            if i > 0 && sig[order[i]] != sig[order[i - 1]] {
                next += 1;
            }
            cell[order[i]] = next;
        }
        let new_cells = if n == 0 { 0 } else { next + 1 };
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

impl Search<'_> {
    fn leaf(&mut self, cell: &[usize]) {
        let labels = cell.to_vec();
        let n = labels.len();
        let mut colors = vec![0; n];
        for v in 0..n {
            colors[labels[v]] = self.colors[v];
        }
        let mut edges = Vec::new();
        for (v, nb) in self.adj.iter().enumerate() {
            for &w in nb {
                if v < w {
                    let (a, b) = (labels[v] as u32, labels[w] as u32);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        let form = CanonicalForm { n, colors, edges };
        match &self.best {
            Some(b) if b.form == form => {
                let mut vertex_of = vec![0; n];
                for (v, &l) in b.labels.iter().enumerate() {
                    vertex_of[l] = v;
                }
                let gamma: Vec<usize> = labels.iter().map(|&l| vertex_of[l]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
            }
            Some(b) if b.form < form => {}
            _ => self.best = Some(Labelling { labels, form }),
        }
    }

    /// Orbit representatives under the known automorphisms fixing `path`.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in self.automorphisms.iter().filter(|g| path.iter().all(|&v| g[v] == v)) {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, mut cell: Vec<usize>, path: &mut Vec<usize>) {
        refine(&self.adj, &mut cell);
        let n = cell.len();
        let mut size = vec![0usize; n];
        for &c in &cell {
            size[c] += 1;
        }
        // First smallest non-singleton cell.
        let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            self.leaf(&cell);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| cell[v] == target).collect();
        let mut done: Vec<usize> = Vec::new();
        for &v in &members {
            if !done.is_empty() {
                let orbit = self.orbits(path);
                if done.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            done.push(v);
            // Individualise v: it gets a fresh cell placed just before the
            // rest of its old cell.
            let child: Vec<usize> = cell
                .iter()
                .enumerate()
                .map(|(w, &c)| match c.cmp(&target) {
                    std::cmp::Ordering::Less => 2 * c,
                    std::cmp::Ordering::Equal if w == v => 2 * c,
                    _ => 2 * c + 1,
                })
                .collect();
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }
}

/// Canonical labelling of `g` with vertex colours `colors`.
pub fn canonical_labelling(g: &Graph, colors: &[u32]) -> Labelling {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cell: Vec<usize> = colors.iter().map(|c| palette.binary_search(c).unwrap()).collect();
    let mut search = Search { adj, colors, best: None, automorphisms: Vec::new() };
    search.descend(cell, &mut Vec::new());
    search.best.unwrap_or(Labelling {
        labels: Vec::new(),
        form: CanonicalForm { n: 0, colors: Vec::new(), edges: Vec::new() },
    })
}

pub fn canonical_form(g: &Graph, colors: &[u32]) -> CanonicalForm {
    canonical_labelling(g, colors).form
}

/// Canonical form of an uncoloured graph.
pub fn canonical_form_plain(g: &Graph) -> CanonicalForm {
    canonical_form(g, &vec![0; g.n()])
}

/// `g` relabelled canonically.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labelling(g, &vec![0; g.n()]);
    g.relabel(&lab.labels).expect("labelling is a permutation")
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form_plain(a) == canonical_form_plain(b)
}
