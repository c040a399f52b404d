//! The certificate matrix `M = A(A + 2I)` and what it proves.
//!
//! For a cubic graph, `A` has no eigenvalue in `(-2, 0)` exactly when `M`
//! is positive semidefinite. A principal submatrix `M_TT` with negative
//! determinant therefore witnesses an eigenvalue in `(-2, 0)`, and its least
//! eigenvalue `t` forces an eigenvalue of `A` into
//! `[-1 - sqrt(1 + t), -1 + sqrt(1 + t)]`.

mod replay;
mod witness;

pub use replay::{lemma_replay, ReplayCase, ReplayRow};
pub use witness::{find_negative_witness, MinorWitness};

use crate::algebra::{count_roots_in, smallest_root_bracket, Interval};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph, VertexSet};
use crate::{IntMatrix, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// `A(A + 2I)` by matrix multiplication.
pub fn m_matrix_product(g: &Graph) -> IntMatrix {
    let a: IntMatrix = g.adjacency_matrix();
    let two = BigInt::from(2);
    a.mul(&a.add(&IntMatrix::identity(g.n()).scale(&two)))
}

/// `M` from adjacency and common-neighbour counts; requires a cubic graph.
pub fn m_matrix_combinatorial(g: &Graph) -> Result<IntMatrix> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let n = g.n();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        m[(u, u)] = BigInt::from(3);
        for v in 0..n {
            if u != v {
                let c = g.common_neighbor_count(u, v) + if g.has_edge(u, v) { 2 } else { 0 };
                m[(u, v)] = BigInt::from(c);
            }
        }
    }
    Ok(m)
}

/// `M(g)`. For cubic graphs the product and combinatorial forms are both
/// computed and must agree.
pub fn m_matrix(g: &Graph) -> IntMatrix {
    let m = m_matrix_product(g);
    if let Ok(c) = m_matrix_combinatorial(g) {
        assert_eq!(m, c, "combinatorial and product forms of M disagree");
    }
    m
}

/// Rows and columns of `M(g)` indexed by `t`, in `t`'s order.
pub fn m_submatrix(g: &Graph, t: &VertexSet) -> Result<IntMatrix> {
    t.check_in(g)?;
    m_matrix(g).principal_submatrix(t.as_slice())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapVerdict {
    #[serde(rename = "graph6")]
    pub graph_id: String,
    pub interval: Interval<BigInt>,
    #[serde(rename = "count")]
    pub eigenvalue_count_in_interval: usize,
    pub has_gap: bool,
}

/// Eigenvalues of `A(g)` in `iv`, counted with multiplicity.
pub fn gap_check(g: &Graph, iv: &Interval<BigInt>) -> GapVerdict {
    let p = g.adjacency_matrix::<BigInt>().char_poly();
    let count = count_roots_in(&p, iv, true).expect("characteristic polynomial is monic");
    GapVerdict { graph_id: to_graph6(g), interval: iv.clone(), eigenvalue_count_in_interval: count, has_gap: count == 0 }
}

/// The open interval `(-2, 0)`.
pub fn main_gap() -> Interval<BigInt> {
    Interval::open_int(BigInt::from(-2), BigInt::zero()).expect("valid interval")
}

/// Exact PSD test for a symmetric integer matrix: writing
/// `det(xI - m) = x^n - e_1 x^(n-1) + e_2 x^(n-2) - ...`, the matrix is PSD
/// exactly when every `e_k` is nonnegative.
pub fn is_psd(m: &IntMatrix) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let p = m.char_poly();
    let n = m.n();
    Ok((0..=n).all(|k| {
        let c = p.coeff(n - k);
        if k % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    }))
}

/// Every principal minor is nonnegative. Exponential; for small matrices.
pub fn is_psd_by_minors(m: &IntMatrix) -> bool {
    let n = m.n();
    (1u64..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        !m.principal_submatrix(&idx).unwrap().det().is_negative()
    })
}

/// Smallest integer `s` with `s * s >= n`.
fn ceil_isqrt(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &s * &s < *n {
        s + 1
    } else {
        s
    }
}

/// Rational upper bound for `sqrt(r)`, exact when `r` is a rational square
/// and otherwise within `eps`.
pub fn sqrt_upper(r: &Rational, eps: &Rational) -> Rational {
    assert!(!r.is_negative(), "square root of a negative rational");
    let (p, q) = (r.numer(), r.denom());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    if &sp * &sp == *p && &sq * &sq == *q {
        return Rational::new(sp, sq);
    }
    let mut k = 0u32;
    while Rational::new(BigInt::one(), BigInt::one() << k) > *eps {
        k += 1;
    }
    let scaled = r * Rational::from_integer(BigInt::one() << (2 * k));
    Rational::new(ceil_isqrt(&scaled.ceil().to_integer()), BigInt::one() << k)
}

/// Certified closed interval containing
/// `[-1 - sqrt(1 + t), -1 + sqrt(1 + t)]`, where `t` is the least
/// eigenvalue of `msub`, overshooting each end by at most `precision`.
pub fn implied_interval_from_submatrix(msub: &IntMatrix, precision: &Rational) -> Result<Interval<BigInt>> {
    if !msub.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !precision.is_positive() {
        return Err(Error::InvalidParameter("precision must be positive".into()));
    }
    let p = msub.char_poly();
    let minus_one = -Rational::one();
    let bound: BigInt = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero) + 2;
    let below = Interval::open(Rational::from_integer(-bound), minus_one.clone())?;
    if count_roots_in(&p, &below, false)? > 0 {
        return Err(Error::LeastEigenvalueBelowMinusOne);
    }
    // sqrt is 1/2-Hoelder, so a bracket of width precision^2 / 4 moves
    // sqrt(1 + t) by at most precision / 2.
    let width = precision * precision / Rational::from_integer(4.into());
    let bracket = smallest_root_bracket(&p, &width)?;
    let s = sqrt_upper(&(Rational::one() + bracket.hi()), &(precision / Rational::from_integer(4.into())));
    Interval::closed(&minus_one - &s, &minus_one + &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, generalized_petersen, petersen, prism};

    fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn m_entries() {
        let g = petersen();
        let m = m_matrix(&g);
        for u in 0..10 {
            assert_eq!(m[(u, u)], BigInt::from(3));
            for v in 0..10 {
                if u != v {
                    let expect = if g.has_edge(u, v) { 2 } else { 1 };
                    assert_eq!(m[(u, v)], BigInt::from(expect));
                }
            }
        }
        // Prism: 0 and 1 are adjacent with common neighbour 2.
        assert_eq!(m_matrix(&prism())[(0, 1)], BigInt::from(3));
    }

    #[test]
    fn non_cubic_uses_product() {
        let g = crate::graph::path(3).unwrap();
        assert_eq!(m_matrix_combinatorial(&g), Err(Error::NotCubic));
        let m = m_matrix(&g);
        assert_eq!(m[(1, 1)], BigInt::from(2));
        assert_eq!(m[(0, 2)], BigInt::from(1));
    }

    #[test]
    fn submatrix_singleton() {
        let t = VertexSet::new(vec![4]).unwrap();
        assert_eq!(m_submatrix(&petersen(), &t).unwrap(), int_matrix(&[&[3]]));
        assert!(m_submatrix(&petersen(), &VertexSet::new(vec![10]).unwrap()).is_err());
    }

    #[test]
    fn gap_examples() {
        let v = gap_check(&petersen(), &main_gap());
        assert!(v.has_gap);
        let v = gap_check(&complete(4).unwrap(), &main_gap());
        assert_eq!(v.eigenvalue_count_in_interval, 3);
        assert!(!v.has_gap);
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd(&IntMatrix::identity(3)).unwrap());
        assert!(!is_psd(&int_matrix(&[&[3, 3, 1], &[3, 3, 2], &[1, 2, 3]])).unwrap());
        assert!(is_psd(&m_matrix(&petersen())).unwrap());
        assert!(is_psd(&int_matrix(&[&[0, 0], &[0, 0]])).unwrap());
        assert_eq!(is_psd(&int_matrix(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn psd_matches_gap_on_small_cubic_graphs() {
        for g in [complete(4).unwrap(), prism(), petersen(), generalized_petersen(8, 3).unwrap()] {
            assert_eq!(is_psd(&m_matrix(&g)).unwrap(), gap_check(&g, &main_gap()).has_gap);
        }
    }

    #[test]
    fn sqrt_bounds() {
        assert_eq!(sqrt_upper(&q(9, 4), &q(1, 100)), q(3, 2));
        let s = sqrt_upper(&q(2, 1), &q(1, 1000));
        assert!(&s * &s >= q(2, 1));
        assert!(s - q(1414213, 1000000) < q(1, 1000));
    }

    #[test]
    fn implied_interval_examples() {
        let eps = q(1, 1000000);
        let m = int_matrix(&[&[3, 3, 1], &[3, 3, 2], &[1, 2, 3]]);
        let iv = implied_interval_from_submatrix(&m, &eps).unwrap();
        assert!(*iv.lo() <= q(-1893358, 1000000) + q(1, 1000000));
        assert!(*iv.lo() > q(-1893360, 1000000));
        assert!(*iv.hi() >= q(-106642, 1000000) - q(1, 1000000));
        assert!(*iv.hi() < q(-106640, 1000000));

        let singular = int_matrix(&[&[1, 1], &[1, 1]]);
        assert_eq!(implied_interval_from_submatrix(&singular, &eps).unwrap(), Interval::closed(q(-2, 1), q(0, 1)).unwrap());
        assert_eq!(implied_interval_from_submatrix(&int_matrix(&[&[-1]]), &eps).unwrap(), Interval::point(q(-1, 1)));
        assert_eq!(
            implied_interval_from_submatrix(&int_matrix(&[&[-2]]), &eps),
            Err(Error::LeastEigenvalueBelowMinusOne)
        );
    }
}
