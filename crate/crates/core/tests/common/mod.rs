//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use cubicgap::canon::{canonical_form_plain, CanonicalForm};
use cubicgap::local::{corona_of_cycle, cycles_of_length, Corona};
use cubicgap::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashSet, VecDeque};

/// Isomorphism classes of cubic graphs on `n` vertices as `(connected,
/// all)`, found by running over every symmetric 0/1 matrix with row sums
/// three in which vertex 0 is adjacent to 1, 2 and 3 (every class has such
/// a labelling) and grouping by canonical form.
pub fn brute_force_cubic_classes(n: usize) -> (HashSet<CanonicalForm>, HashSet<CanonicalForm>) {
    struct State<'a> {
        n: usize,
        pairs: &'a [(usize, usize)],
        deg: Vec<usize>,
        g: Graph,
        all: HashSet<CanonicalForm>,
        connected: HashSet<CanonicalForm>,
    }
    fn fill(s: &mut State, k: usize) {
        if k == s.pairs.len() {
            if s.deg.iter().all(|&d| d == 3) {
                let f = canonical_form_plain(&s.g);
                if s.g.is_connected() {
                    s.connected.insert(f.clone());
                }
                s.all.insert(f);
            }
            return;
        }
        let (u, v) = s.pairs[k];
        // (u, n - 1) is the last pair touching u that is still open.
        let closes_u = v == s.n - 1;
        if s.deg[u] < 3 && s.deg[v] < 3 {
            s.deg[u] += 1;
            s.deg[v] += 1;
            s.g.add_edge(u, v).unwrap();
            if !closes_u || s.deg[u] == 3 {
                fill(s, k + 1);
            }
            s.g.remove_edge(u, v).unwrap();
            s.deg[u] -= 1;
            s.deg[v] -= 1;
        }
        if !closes_u || s.deg[u] == 3 {
            fill(s, k + 1);
        }
    }
    let pairs: Vec<_> = (1..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut g = Graph::new(n).unwrap();
    let mut deg = vec![0; n];
    for v in 1..4 {
        g.add_edge(0, v).unwrap();
        deg[v] = 1;
    }
    deg[0] = 3;
    let mut s = State { n, pairs: &pairs, deg, g, all: HashSet::new(), connected: HashSet::new() };
    fill(&mut s, 0);
    (s.connected, s.all)
}

/// Cycle `0..n` plus chords `i ~ i + pattern[i mod len]`.
pub fn lcf(n: usize, pattern: &[i64]) -> Graph {
    let mut g = cubicgap::graph::cycle(n).unwrap();
    for i in 0..n {
        let j = (i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j).unwrap();
        }
    }
    assert!(g.is_cubic());
    g
}

pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7])
}

fn has_short_path(g: &Graph, a: usize, b: usize, limit: usize) -> bool {
    let d = g.bfs_distances(a);
    d[b].is_some_and(|d| d < limit)
}

/// An edge on a cycle shorter than `girth`, if any.
fn short_cycle_edge(g: &Graph, girth: usize) -> Option<(usize, usize)> {
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            if 2 * dist[x] + 1 >= girth {
                break;
            }
            for y in g.neighbors(x) {
                if y == parent[x] {
                    continue;
                }
                if dist[y] != usize::MAX {
                    if dist[x] + dist[y] + 1 < girth {
                        return Some((x, y));
                    }
                } else {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                }
            }
        }
    }
    None
}

/// Uniform random simple cubic graph on `n` vertices by the pairing model.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Graph {
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(rng);
        let mut g = Graph::new(n).unwrap();
        let simple = points.chunks(2).all(|pair| pair[0] != pair[1] && g.add_edge(pair[0], pair[1]).is_ok());
        if simple && g.is_cubic() {
            return g;
        }
    }
}

/// A cubic graph on `n` vertices with girth at least `girth`, from a random
/// cubic graph by edge switches that break short cycles without making new
/// ones.
pub fn high_girth_cubic(n: usize, girth: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_cubic(n, &mut rng);
    while let Some((a, b)) = short_cycle_edge(&g, girth) {
        let mut switched = false;
        for _ in 0..10_000 {
            let edges: Vec<_> = g.edges().collect();
            let &(mut c, mut d) = edges.choose(&mut rng).unwrap();
            if rng.gen_bool(0.5) {
                std::mem::swap(&mut c, &mut d);
            }
            if [a, b].contains(&c) || [a, b].contains(&d) || g.has_edge(a, c) || g.has_edge(b, d) {
                continue;
            }
            g.remove_edge(a, b).unwrap();
            g.remove_edge(c, d).unwrap();
            if !has_short_path(&g, a, c, girth - 1) {
                g.add_edge(a, c).unwrap();
                if !has_short_path(&g, b, d, girth - 1) {
                    g.add_edge(b, d).unwrap();
                    switched = true;
                    break;
                }
                g.remove_edge(a, c).unwrap();
            }
            g.add_edge(a, b).unwrap();
            g.add_edge(c, d).unwrap();
        }
        assert!(switched, "no switch removes the short cycle through {a} {b}");
    }
    assert!(g.is_cubic());
    g
}

/// Every girth-cycle corona of `g`, as `(u, v)` with `u` the cycle in
/// order and `v[i]` the pendant of `u[i]`.
pub fn coronas(g: &Graph) -> Vec<Corona> {
    let girth = match g.girth() {
        cubicgap::Girth::Finite(k) => k,
        cubicgap::Girth::Infinite => return Vec::new(),
    };
    cycles_of_length(g, girth).iter().map(|c| corona_of_cycle(g, c).unwrap()).collect()
}

/// Random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
