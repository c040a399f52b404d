use super::{implied_interval_from_submatrix, m_matrix};
use crate::algebra::Interval;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::{IntMatrix, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Vertex subset `T` of a host graph with `det(M_TT) < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub subset: VertexSet,
    pub determinant: BigInt,
    pub submatrix: IntMatrix,
    pub implied_interval: Option<Interval<BigInt>>,
}

impl MinorWitness {
    pub fn with_implied_interval(mut self, precision: &Rational) -> Result<Self> {
        self.implied_interval = Some(implied_interval_from_submatrix(&self.submatrix, precision)?);
        Ok(self)
    }
}

/// `{subset, det}`, plus `implied_interval` when present.
impl Serialize for MinorWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = 2 + self.implied_interval.is_some() as usize;
        let mut st = s.serialize_struct("MinorWitness", fields)?;
        st.serialize_field("subset", self.subset.as_slice())?;
        st.serialize_field("det", &self.determinant.to_string())?;
        if let Some(iv) = &self.implied_interval {
            st.serialize_field("implied_interval", iv)?;
        }
        st.end()
    }
}

/// Determinant of a small integer matrix by Bareiss elimination in `i128`;
/// `None` on overflow.
fn det_i128(a: &mut [i128], n: usize) -> Option<i128> {
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            sign = -sign;
        }
        let p = a[k * n + k];
        for i in k + 1..n {
            let aik = a[i * n + k];
            for j in k + 1..n {
                let v = p.checked_mul(a[i * n + j])?.checked_sub(aik.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = p;
    }
    Some(sign * if n == 0 { 1 } else { a[n * n - 1] })
}

struct Searcher<'a> {
    m: &'a [Vec<i64>],
    big: &'a IntMatrix,
    adj: Vec<Vec<usize>>,
    k: usize,
    blocked: Vec<u32>,
    sub: Vec<usize>,
    best: Option<(Vec<usize>, BigInt)>,
    scratch: Vec<i128>,
}

impl Searcher<'_> {
    fn det(&mut self, t: &[usize]) -> BigInt {
        let k = t.len();
        self.scratch.clear();
        for &i in t {
            for &j in t {
                self.scratch.push(self.m[i][j] as i128);
            }
        }
        match det_i128(&mut self.scratch, k) {
            Some(d) => BigInt::from(d),
            None => self.big.principal_submatrix(t).unwrap().det(),
        }
    }

    fn visit(&mut self) {
        let mut t = self.sub.clone();
        t.sort_unstable();
        if self.best.as_ref().is_some_and(|(b, _)| *b <= t) {
            return;
        }
        let d = self.det(&t);
        if d < BigInt::from(0) {
            self.best = Some((t, d));
        }
    }

    /// Enumerates each connected `k`-subset whose least element is `root`
    /// exactly once (ESU).
    fn extend(&mut self, ext: Vec<usize>, root: usize) {
        if self.sub.len() == self.k {
            self.visit();
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.adj[w] {
                if u > root && self.blocked[u] == 0 {
                    next.push(u);
                }
            }
            self.sub.push(w);
            self.blocked[w] += 1;
            for &u in &self.adj[w] {
                self.blocked[u] += 1;
            }
            self.extend(next, root);
            for &u in &self.adj[w] {
                self.blocked[u] -= 1;
            }
            self.blocked[w] -= 1;
            self.sub.pop();
        }
    }
}

/// First subset `T` with `|T| <= max_size` and `det(M_TT) < 0`, in order of
/// size and then lexicographically by sorted vertex list.
///
/// Only subsets connected in the graph of nonzero off-diagonal entries of
/// `M` are examined. This loses nothing: `M_TT` of a disconnected `T` is
/// block diagonal, so a negative determinant there yields a negative one on
/// a smaller subset, and a smallest witness is always connected.
pub fn find_negative_witness(g: &Graph, max_size: usize) -> Result<Option<MinorWitness>> {
    if max_size == 0 || max_size > g.n() {
        return Err(Error::InvalidParameter(format!("max_size must lie in 1..={}", g.n())));
    }
    let big = m_matrix(g);
    let n = g.n();
    let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| big[(i, j)].to_i64().expect("small entries")).collect()).collect();
    let adj = (0..n).map(|v| (0..n).filter(|&w| w != v && m[v][w] != 0).collect()).collect();
    let mut s = Searcher { m: &m, big: &big, adj, k: 0, blocked: vec![0; n], sub: Vec::new(), best: None, scratch: Vec::new() };
    for k in 1..=max_size {
        s.k = k;
        for root in 0..n {
            s.sub.push(root);
            s.blocked[root] += 1;
            let adj_root = s.adj[root].clone();
            for &u in &adj_root {
                s.blocked[u] += 1;
            }
            let ext = adj_root.iter().copied().filter(|&u| u > root).collect();
            s.extend(ext, root);
            for &u in &adj_root {
                s.blocked[u] -= 1;
            }
            s.blocked[root] -= 1;
            s.sub.pop();
            // Subsets with a larger least element come later lexicographically.
            if s.best.is_some() {
                break;
            }
        }
        if let Some((t, d)) = s.best.take() {
            let submatrix = big.principal_submatrix(&t)?;
            debug_assert_eq!(submatrix.det(), d);
            return Ok(Some(MinorWitness {
                subset: VertexSet::new(t)?,
                determinant: d,
                submatrix,
                implied_interval: None,
            }));
        }
    }
    Ok(None)
}
