//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitsets.

mod build;
mod graph6;

pub use build::*;
pub use graph6::{from_graph6, to_graph6};

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use num_traits::Num;
use std::collections::VecDeque;
use std::fmt;

/// Largest vertex count accepted by constructors and parsers.
pub const MAX_VERTICES: usize = 1024;

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        self >= Girth::Finite(g)
    }
}

/// A number, or `null` for forests.
impl serde::Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_none(),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph { n, words, bits: vec![0; n * words] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
        Ok(())
    }

    /// Panics if either vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn try_has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.has_edge(u, v))
    }

    /// Neighbours of `v` in increasing order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        assert!(v < self.n, "vertex out of range");
        let row = self.row(v);
        Neighbors { row, word: 0, cur: row[0] }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn try_degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.degree(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// `N(u) ∩ N(v)` for distinct vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(VertexSet(self.neighbors(u).filter(|&w| self.has_edge(v, w)).collect()))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for y in self.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn adjacency_matrix<T: Num + Clone>(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.n);
        for (u, v) in self.edges() {
            m[(u, v)] = T::one();
            m[(v, u)] = T::one();
        }
        m
    }

    /// Graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::DuplicateVertex(p));
            }
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Subgraph induced on `set`, with `set[i]` renamed `i`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        set.check_in(self)?;
        let vs = set.as_slice();
        let mut g = Graph::new(vs.len())?;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n;
        let mut g = Graph::new(n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n)?;
        }
        Ok(g)
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

/// Ordered set of distinct vertices. Order is preserved and determines the
/// row order of principal submatrices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(vertices))
    }

    /// Sorted, deduplicated set.
    pub fn from_iter_sorted(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn check_in(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|&v| g.check(v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(complete_bipartite(3, 3).unwrap().girth(), Girth::Finite(4));
        assert_eq!(petersen().girth(), Girth::Finite(5));
        assert_eq!(cycle(9).unwrap().girth(), Girth::Finite(9));
        assert_eq!(path(6).unwrap().girth(), Girth::Infinite);
        assert!(Girth::Finite(100) < Girth::Infinite);
    }

    #[test]
    fn edge_operations_validate() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(0, 0), Err(Error::Loop(0)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.common_neighbors(0, 0), Err(Error::SameVertex(0)));
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn neighbours_cross_word_boundaries() {
        let mut g = Graph::new(200).unwrap();
        g.add_edge(5, 70).unwrap();
        g.add_edge(5, 199).unwrap();
        g.add_edge(5, 63).unwrap();
        assert_eq!(g.neighbors(5).collect::<Vec<_>>(), vec![63, 70, 199]);
        assert_eq!(g.degree(5), 3);
    }

    #[test]
    fn common_neighbours_in_petersen() {
        let g = petersen();
        for u in 0..10 {
            for v in u + 1..10 {
                let c = g.common_neighbors(u, v).unwrap().len();
                assert_eq!(c, if g.has_edge(u, v) { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn vertex_set_rejects_duplicates() {
        assert_eq!(VertexSet::new(vec![1, 2, 1]), Err(Error::DuplicateVertex(1)));
        assert_eq!(VertexSet::from_iter_sorted([3, 1, 3]).as_slice(), &[1, 3]);
    }
}
