//! The graph family `X(n)` and the five sporadic graphs with no eigenvalue
//! in `(-2, 0)`.

use crate::algebra::{count_roots_in, smallest_root_bracket, Interval, Polynomial};
use crate::canon::isomorphic;
use crate::certify::{gap_check, main_gap};
use crate::error::{Error, Result};
use crate::graph::{dodecahedron, k33, petersen, prism, tutte_eight_cage, Graph};
use crate::{IntPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use std::fmt;

/// Edges of the six-vertex gadget in local labels.
pub const GADGET_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)];

/// `n` gadgets on `6k..6k+6`, gadget `k`'s vertex 4 joined to vertex 0 and
/// vertex 5 to vertex 1 of gadget `k + 1 mod n`.
pub fn build_xn(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("X(n) needs n >= 2, got {n}")));
    }
    let mut g = Graph::new(6 * n)?;
    for k in 0..n {
        let b = 6 * k;
        let next = 6 * ((k + 1) % n);
        for (x, y) in GADGET_EDGES {
            g.add_edge(b + x, b + y)?;
        }
        g.add_edge(b + 4, next)?;
        g.add_edge(b + 5, next + 1)?;
    }
    debug_assert!(g.is_cubic() && g.is_connected());
    Ok(g)
}

fn int_poly(c: &[i64]) -> IntPolynomial {
    Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

/// `x^n (x - 1)^n (x + 2)^n`.
pub fn xn_trivial_factor(n: usize) -> IntPolynomial {
    (&(&int_poly(&[0, 1]) * &int_poly(&[-1, 1])) * &int_poly(&[2, 1])).pow(n)
}

/// `2^(n+1) (T_n(z / 4) - 1)` with `z = x^3 - x^2 - 6x + 4`, computed from
/// `S_0 = 2`, `S_1 = z`, `S_(k+1) = z S_k - 4 S_(k-1)`, where
/// `S_k = 2^(k+1) T_k(z / 4)`.
pub fn xn_cubic_product(n: usize) -> IntPolynomial {
    let z = int_poly(&[4, -6, -1, 1]);
    let four = int_poly(&[4]);
    let (mut prev, mut cur) = (int_poly(&[2]), z.clone());
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = &(&z * &cur) - &(&four * &prev);
        prev = cur;
        cur = next;
    }
    &cur - &Polynomial::constant(BigInt::one() << (n + 1))
}

/// Characteristic polynomial of `X(n)` from the closed form.
pub fn xn_char_poly(n: usize) -> IntPolynomial {
    &xn_trivial_factor(n) * &xn_cubic_product(n)
}

/// Checks the closed form against the directly computed characteristic
/// polynomial: exact division by the trivial factor, then equality of the
/// quotient. Cost grows like `n^4`.
pub fn xn_charpoly_identity_check(n: usize) -> Result<bool> {
    let direct = build_xn(n)?.adjacency_matrix::<BigInt>().char_poly();
    let q = match direct.exact_divide(&xn_trivial_factor(n)) {
        Ok(q) => q,
        Err(Error::InexactDivision) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(q == xn_cubic_product(n))
}

/// Largest `n` for which [`xn_gap_check`] compares against the directly
/// computed characteristic polynomial rather than the closed form.
pub const XN_DIRECT_LIMIT: usize = 12;

/// Rational brackets `r1 < (-1 - sqrt 17) / 2` and `r2 > (-1 + sqrt 17) / 2`,
/// each within `width`.
pub fn sqrt17_brackets(width: &Rational) -> Result<(Rational, Rational)> {
    let f = int_poly(&[-4, 1, 1]);
    let low = smallest_root_bracket(&f, width)?;
    let high = smallest_root_bracket(&f.reflect(), width)?;
    Ok((low.lo().clone(), -high.lo().clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XnGapReport {
    pub n: usize,
    pub intervals: Vec<Interval<BigInt>>,
    pub counts: Vec<usize>,
    pub ok: bool,
}

/// Counts eigenvalues of `X(n)` in `(-2, 0)`, `(-3, r1)` and `(r2, 2)`, with
/// `r1`, `r2` bracketing the roots of `x^2 + x - 4` to within `10^-9`. For
/// `n` above [`XN_DIRECT_LIMIT`] the closed-form characteristic polynomial
/// is used.
pub fn xn_gap_check(n: usize) -> Result<XnGapReport> {
    let p = if n <= XN_DIRECT_LIMIT {
        build_xn(n)?.adjacency_matrix::<BigInt>().char_poly()
    } else {
        build_xn(n)?;
        xn_char_poly(n)
    };
    let width = Rational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
    let (r1, r2) = sqrt17_brackets(&width)?;
    let int = |k: i64| Rational::from_integer(BigInt::from(k));
    let intervals = vec![main_gap(), Interval::open(int(-3), r1)?, Interval::open(r2, int(2))?];
    let counts = intervals.iter().map(|iv| count_roots_in(&p, iv, true)).collect::<Result<Vec<_>>>()?;
    let ok = counts.iter().all(|&c| c == 0);
    Ok(XnGapReport { n, intervals, counts, ok })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sporadic {
    Prism,
    K33,
    Petersen,
    Dodecahedron,
    Tutte8,
}

impl Sporadic {
    pub const ALL: [Sporadic; 5] =
        [Sporadic::Prism, Sporadic::K33, Sporadic::Petersen, Sporadic::Dodecahedron, Sporadic::Tutte8];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::Prism => "prism",
            Sporadic::K33 => "k33",
            Sporadic::Petersen => "petersen",
            Sporadic::Dodecahedron => "dodecahedron",
            Sporadic::Tutte8 => "tutte8",
        }
    }

    pub fn from_name(s: &str) -> Option<Sporadic> {
        Sporadic::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn graph(self) -> Graph {
        match self {
            Sporadic::Prism => prism(),
            Sporadic::K33 => k33(),
            Sporadic::Petersen => petersen(),
            Sporadic::Dodecahedron => dodecahedron(),
            Sporadic::Tutte8 => tutte_eight_cage(),
        }
    }

    /// Eigenvalues with multiplicities.
    pub fn expected_spectrum(self) -> Vec<(Eigenvalue, usize)> {
        use Eigenvalue::{Integer as I, Sqrt};
        match self {
            Sporadic::Prism => vec![(I(3), 1), (I(1), 1), (I(0), 2), (I(-2), 2)],
            Sporadic::K33 => vec![(I(3), 1), (I(0), 4), (I(-3), 1)],
            Sporadic::Petersen => vec![(I(3), 1), (I(1), 5), (I(-2), 4)],
            Sporadic::Dodecahedron => vec![
                (I(3), 1),
                (Sqrt { a: 1, b: 5 }, 3),
                (I(1), 5),
                (I(0), 4),
                (I(-2), 4),
                (Sqrt { a: -1, b: 5 }, 3),
            ],
            Sporadic::Tutte8 => vec![(I(3), 1), (I(2), 9), (I(0), 10), (I(-2), 9), (I(-3), 1)],
        }
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sporadic::Prism => "PRISM",
            Sporadic::K33 => "K33",
            Sporadic::Petersen => "PETERSEN",
            Sporadic::Dodecahedron => "DODECAHEDRON",
            Sporadic::Tutte8 => "TUTTE8",
        })
    }
}

/// An integer `k`, or `a * sqrt(b)` with `b` square-free and `b > 1`.
/// Serialized as `{kind, a, b}`, integers with `b = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Integer(i64),
    Sqrt { a: i64, b: i64 },
}

#[derive(Serialize)]
struct EigenvalueJson {
    kind: &'static str,
    a: i64,
    b: i64,
}

impl Eigenvalue {
    fn json(&self) -> EigenvalueJson {
        match *self {
            Eigenvalue::Integer(a) => EigenvalueJson { kind: "integer", a, b: 1 },
            Eigenvalue::Sqrt { a, b } => EigenvalueJson { kind: "sqrt", a, b },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumRecord {
    pub name: Sporadic,
    pub entries: Vec<(Eigenvalue, usize)>,
}

impl Serialize for SpectrumRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            value: EigenvalueJson,
            multiplicity: usize,
        }
        #[derive(Serialize)]
        struct Record {
            name: String,
            spectrum: Vec<Entry>,
        }
        Record {
            name: self.name.to_string(),
            spectrum: self.entries.iter().map(|(v, m)| Entry { value: v.json(), multiplicity: *m }).collect(),
        }
        .serialize(s)
    }
}

impl SpectrumRecord {
    pub fn vertex_count(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Product of `(x - k)^m` over integer eigenvalues and `(x^2 - a^2 b)^m`
    /// over each pair `±a sqrt(b)`. Fails unless every square root appears
    /// together with its negative, with equal multiplicity.
    pub fn expansion(&self) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::one();
        for (v, m) in &self.entries {
            match *v {
                Eigenvalue::Integer(k) => p = &p * &Polynomial::linear_root(BigInt::from(k)).pow(*m),
                Eigenvalue::Sqrt { a, b } => {
                    let partner = self.entries.iter().find(|(w, _)| *w == Eigenvalue::Sqrt { a: -a, b });
                    if partner.map(|(_, pm)| pm) != Some(m) || a == 0 {
                        return Err(Error::Precondition(format!("unpaired eigenvalue {a}*sqrt({b})")));
                    }
                    if a > 0 {
                        p = &p * &int_poly(&[-(a * a * b), 0, 1]).pow(*m);
                    }
                }
            }
        }
        Ok(p)
    }
}

/// The named graph and its spectrum, checked against the exact
/// characteristic polynomial.
pub fn sporadic(name: Sporadic) -> Result<(Graph, SpectrumRecord)> {
    let g = name.graph();
    let rec = SpectrumRecord { name, entries: name.expected_spectrum() };
    let direct = g.adjacency_matrix::<BigInt>().char_poly();
    if rec.vertex_count() != g.n() || rec.expansion()? != direct {
        return Err(Error::Precondition(format!("spectrum of {name} does not match its characteristic polynomial")));
    }
    Ok((g, rec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    Sporadic(Sporadic),
    Xn(usize),
    NotInList,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Sporadic(s) => write!(f, "{s}"),
            Classification::Xn(n) => write!(f, "XN({n})"),
            Classification::NotInList => f.write_str("NOT_IN_LIST"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Identifies a connected cubic graph with the sporadic graphs or some
/// `X(n)`, up to isomorphism.
pub fn classify(g: &Graph) -> Result<Classification> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    for s in Sporadic::ALL {
        let h = s.graph();
        if h.n() == g.n() && isomorphic(g, &h) {
            return Ok(Classification::Sporadic(s));
        }
    }
    if g.n() % 6 == 0 && g.n() >= 12 {
        let n = g.n() / 6;
        if isomorphic(g, &build_xn(n)?) {
            return Ok(Classification::Xn(n));
        }
    }
    Ok(Classification::NotInList)
}

/// Members of the classification list on exactly `n` vertices.
pub fn classification_list(n: usize) -> Vec<Classification> {
    let mut out: Vec<Classification> =
        Sporadic::ALL.into_iter().filter(|s| s.graph().n() == n).map(Classification::Sporadic).collect();
    if n % 6 == 0 && n >= 12 {
        out.push(Classification::Xn(n / 6));
    }
    out
}

/// Whether `g` avoids `(-2, 0)`.
pub fn has_main_gap(g: &Graph) -> bool {
    gap_check(g, &main_gap()).has_gap
}
