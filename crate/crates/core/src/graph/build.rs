//! Named graphs with fixed vertex numberings.

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Parts are `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// `GP(n, k)`: outer cycle `u_i = i`, spokes `u_i v_i`, inner edges
/// `v_i v_{i+k}` with `v_i = n + i`. Requires `n >= 3` and `1 <= k < n/2`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!("GP({n}, {k}) needs n >= 3 and 1 <= k < n/2")));
    }
    let mut g = Graph::new(2 * n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(i, n + i)?;
        g.add_edge(n + i, n + (i + k) % n)?;
    }
    Ok(g)
}

/// `GP(5, 2)`.
pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

/// `GP(10, 2)`.
pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2).expect("valid parameters")
}

/// Triangles `0,1,2` and `3,4,5` joined by `i ~ i + 3`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("valid edges")
}

pub fn k33() -> Graph {
    complete_bipartite(3, 3).expect("valid parameters")
}

/// Vertex numbering of [`tutte_eight_cage`].
pub mod tutte {
    pub fn u(i: usize) -> usize {
        i % 8
    }
    pub fn v(i: usize) -> usize {
        8 + i % 8
    }
    pub fn w(i: usize) -> usize {
        16 + i % 8
    }
    pub const V04: usize = 24;
    pub const V26: usize = 25;
    pub const V15: usize = 26;
    pub const V37: usize = 27;
    pub const A: usize = 28;
    pub const B: usize = 29;
}

/// The Tutte–Coxeter graph: an 8-cycle `u_0..u_7`, spokes `u_i v_i` and
/// `v_i w_i`, chords `w_i w_{i+3}`, hubs joining `v_0 v_4`, `v_2 v_6`,
/// `v_1 v_5`, `v_3 v_7`, and `a`, `b` joining the even and odd hubs.
/// See [`tutte`] for the numbering.
pub fn tutte_eight_cage() -> Graph {
    use tutte::*;
    let mut g = Graph::new(30).expect("small");
    let mut add = |x, y| g.add_edge(x, y).expect("valid edge");
    for i in 0..8 {
        add(u(i), u(i + 1));
        add(u(i), v(i));
        add(v(i), w(i));
        add(w(i), w(i + 3));
    }
    for (hub, i, j, top) in [(V04, 0, 4, A), (V26, 2, 6, A), (V15, 1, 5, B), (V37, 3, 7, B)] {
        add(hub, v(i));
        add(hub, v(j));
        add(hub, top);
    }
    add(A, B);
    g
}

/// Corona of a cycle: cycle `u_i = i` for `i < n` and a pendant `v_i = n + i`
/// attached to each `u_i`.
pub fn cycle_corona(n: usize) -> Result<Graph> {
    let mut g = Graph::new(2 * n)?;
    for (u, v) in cycle(n)?.edges() {
        g.add_edge(u, v)?;
    }
    for i in 0..n {
        g.add_edge(i, n + i)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn named_graphs_are_cubic_with_expected_girth() {
        let cases = [
            (prism(), 6, 3),
            (k33(), 6, 4),
            (petersen(), 10, 5),
            (dodecahedron(), 20, 5),
            (tutte_eight_cage(), 30, 8),
        ];
        for (g, n, girth) in cases {
            assert_eq!(g.n(), n);
            assert!(g.is_cubic());
            assert!(g.is_connected());
            assert_eq!(g.girth(), Girth::Finite(girth));
        }
    }

    #[test]
    fn generalized_petersen_rejects_bad_parameters() {
        assert!(generalized_petersen(6, 3).is_err());
        assert!(generalized_petersen(6, 0).is_err());
        assert!(generalized_petersen(2, 1).is_err());
    }

    #[test]
    fn cycle_corona_shape() {
        let g = cycle_corona(5).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!((0..5).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![3; 5]);
        assert_eq!((5..10).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1; 5]);
    }
}
