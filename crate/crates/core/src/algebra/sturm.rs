use super::{Interval, Polynomial};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Exact value of an integer polynomial at a rational point.
pub fn eval_rational<I: Integer + Clone + Signed>(p: &Polynomial<I>, x: &Ratio<I>) -> Ratio<I> {
    p.coeffs().iter().rev().fold(Ratio::zero(), |acc, c| acc * x.clone() + Ratio::from_integer(c.clone()))
}

/// Sign of `p(x)`, evaluated homogeneously in integers.
fn sign_at<I: Integer + Clone + Signed>(p: &Polynomial<I>, x: &Ratio<I>) -> Ordering {
    let Some(d) = p.degree() else {
        return Ordering::Equal;
    };
    let (num, den) = (x.numer(), x.denom());
    let c = p.coeffs();
    let mut acc = c[d].clone();
    let mut pow = I::one();
    for k in (0..d).rev() {
        pow = pow * den.clone();
        acc = acc * num.clone() + c[k].clone() * pow.clone();
    }
    // den > 0, so the scaling by den^d does not change the sign.
    acc.cmp(&I::zero())
}

/// Divides out the positive content, preserving the sign.
fn positive_reduce<I: Integer + Clone + Signed>(p: Polynomial<I>) -> Polynomial<I> {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        p
    } else {
        p.map(|a| a.clone() / c.clone())
    }
}

/// `p = content * prod(factor^multiplicity)` with pairwise coprime,
/// square-free, primitive factors of positive degree and positive leading
/// coefficient, ordered by multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeDecomposition<I> {
    pub content: I,
    pub factors: Vec<(Polynomial<I>, usize)>,
}

/// Yun's algorithm, carried out over the integers with primitive gcds.
pub fn square_free_decomposition<I: Integer + Clone + Signed>(p: &Polynomial<I>) -> Result<SquareFreeDecomposition<I>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if p.degree() > Some(0) {
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_divide(&a0)?;
        let mut c = dp.exact_divide(&a0)?;
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while b.degree() > Some(0) {
            let a = b.gcd(&d);
            b = b.exact_divide(&a)?;
            c = d.exact_divide(&a)?;
            if a.degree() > Some(0) {
                factors.push((a, mult));
            }
            d = &c - &b.derivative();
            mult += 1;
        }
    }
    let prod = factors.iter().fold(Polynomial::constant(I::one()), |acc, (f, m)| &acc * &f.pow(*m));
    let content = p.exact_divide(&prod)?.coeff(0);
    Ok(SquareFreeDecomposition { content, factors })
}

/// Sturm sequence of the square-free part of a nonzero polynomial. Every
/// member after the first two is the negated remainder of its two
/// predecessors, scaled by a positive constant.
#[derive(Debug, Clone)]
pub struct SturmChain<I> {
    chain: Vec<Polynomial<I>>,
}

impl<I: Integer + Clone + Signed> SturmChain<I> {
    pub fn new(p: &Polynomial<I>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = p.gcd(&p.derivative());
        let f0 = positive_reduce(p.exact_divide(&g)?);
        let mut chain = vec![f0.clone()];
        let f1 = positive_reduce(f0.derivative());
        if !f1.is_zero() {
            chain.push(f1);
        }
        while chain.len() >= 2 {
            let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
            let prem = a.pseudo_remainder(b)?;
            if prem.is_zero() {
                break;
            }
            let e = a.degree().unwrap() - b.degree().unwrap() + 1;
            let flip = b.leading().unwrap().is_positive() || e % 2 == 0;
            let next = if flip { prem.map(|c| -c.clone()) } else { prem };
            chain.push(positive_reduce(next));
        }
        Ok(SturmChain { chain })
    }

    /// The square-free polynomial heading the chain.
    pub fn square_free_part(&self) -> &Polynomial<I> {
        &self.chain[0]
    }

    pub fn chain(&self) -> &[Polynomial<I>] {
        &self.chain
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Ratio<I>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for f in &self.chain {
            let s = sign_at(f, x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b]`; zero when `a >= b`.
    pub fn count_half_open(&self, a: &Ratio<I>, b: &Ratio<I>) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }

    pub fn is_root(&self, x: &Ratio<I>) -> bool {
        sign_at(&self.chain[0], x) == Ordering::Equal
    }

    /// Distinct roots in `iv`.
    pub fn count_in(&self, iv: &Interval<I>) -> usize {
        let (lo, hi) = (iv.lo(), iv.hi());
        if lo == hi {
            return self.is_root(lo) as usize;
        }
        let mut c = self.count_half_open(lo, hi);
        if !iv.lo_open() && self.is_root(lo) {
            c += 1;
        }
        if iv.hi_open() && self.is_root(hi) {
            c -= 1;
        }
        c
    }
}

/// Number of real roots of `p` in `iv`, counted with or without
/// multiplicity.
pub fn count_roots_in<I: Integer + Clone + Signed>(
    p: &Polynomial<I>,
    iv: &Interval<I>,
    with_multiplicity: bool,
) -> Result<usize> {
    if !with_multiplicity {
        return Ok(SturmChain::new(p)?.count_in(iv));
    }
    let dec = square_free_decomposition(p)?;
    let mut total = 0;
    for (f, m) in &dec.factors {
        total += m * SturmChain::new(f)?.count_in(iv);
    }
    Ok(total)
}

/// `1 + ceil(max |a_i / a_d|)`: every real root lies in `(-B, B)`.
fn cauchy_bound<I: Integer + Clone + Signed>(p: &Polynomial<I>) -> I {
    let c = p.coeffs();
    let lead = c[c.len() - 1].abs();
    let m = c[..c.len() - 1].iter().map(|a| a.abs()).max().unwrap_or_else(I::zero);
    I::one() + m.div_ceil(&lead)
}

/// Isolates the smallest real root of `p` in an interval of width at most
/// `width`. The result is `(lo, hi]` containing exactly one root, or the
/// degenerate `[r, r]` when the root is an integer or a bisection point
/// hits it exactly.
pub fn smallest_root_bracket<I: Integer + Clone + Signed>(p: &Polynomial<I>, width: &Ratio<I>) -> Result<Interval<I>> {
    if !width.is_positive() {
        return Err(Error::InvalidParameter("bracket width must be positive".into()));
    }
    let sc = SturmChain::new(p)?;
    let f = sc.square_free_part();
    if f.degree() == Some(0) {
        return Err(Error::NoRealRoots);
    }
    let b = cauchy_bound(f);
    let mut lo = Ratio::from_integer(-b.clone());
    let mut hi = Ratio::from_integer(b);
    if sc.count_half_open(&lo, &hi) == 0 {
        return Err(Error::NoRealRoots);
    }
    let two = Ratio::from_integer(I::one() + I::one());
    loop {
        let count = sc.count_half_open(&lo, &hi);
        if count == 1 {
            let k = hi.floor();
            if k > lo && sc.is_root(&k) {
                return Ok(Interval::point(k));
            }
            if hi.clone() - lo.clone() <= *width {
                break;
            }
        }
        let mid = (lo.clone() + hi.clone()) / two.clone();
        let left = sc.count_half_open(&lo, &mid);
        if left >= 1 {
            if left == 1 && sc.is_root(&mid) {
                return Ok(Interval::point(mid));
            }
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if sc.is_root(&hi) {
        return Ok(Interval::point(hi));
    }
    Interval::half_open(lo, hi)
}
