use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial with coefficients stored lowest degree first. The
/// leading coefficient is nonzero unless the polynomial is zero, in which
/// case the coefficient vector is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Num + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `x - r`.
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![T::zero() - r, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut k = T::zero();
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::constant(T::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn map<U: Num + Clone>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Num + Clone + Neg<Output = T>> Polynomial<T> {
    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl<I: Integer + Clone + Signed> Polynomial<I> {
    /// Quotient `self / q` when it exists in the coefficient ring.
    pub fn exact_divide(&self, q: &Self) -> Result<Self> {
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dq > dp {
            return Err(Error::DivisorDegree { dividend: dp, divisor: dq });
        }
        let lq = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![I::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = rem[k + dq].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lq);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * qc.clone();
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> I {
        self.coeffs.iter().fold(I::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }

    /// Pseudo-remainder `lc(q)^(deg p - deg q + 1) * p mod q`.
    pub fn pseudo_remainder(&self, q: &Self) -> Result<Self> {
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dq {
            return Ok(self.clone());
        }
        let lq = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        for k in (0..=dp - dq).rev() {
            let top = rem[k + dq].clone();
            for c in rem.iter_mut() {
                *c = c.clone() * lq.clone();
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - top.clone() * qc.clone();
            }
        }
        rem.truncate(dq);
        Ok(Self::new(rem))
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).expect("b is nonzero").primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn to_rational(&self) -> Polynomial<Ratio<I>> {
        self.map(|c| Ratio::from_integer(c.clone()))
    }
}

impl<I: Integer + Clone + Signed> Polynomial<Ratio<I>> {
    /// Euclidean division over the field of fractions.
    pub fn div_rem(&self, q: &Self) -> Result<(Self, Self)> {
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(dp) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dp < dq {
            return Ok((Self::zero(), self.clone()));
        }
        let lq = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Ratio::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let c = rem[k + dq].clone() / lq.clone();
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * qc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dq);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Scales by the common denominator and returns the primitive integer
    /// polynomial with positive leading coefficient.
    pub fn to_primitive_integer(&self) -> Polynomial<I> {
        let l = self.coeffs.iter().fold(I::one(), |l, c| l.lcm(c.denom()));
        Polynomial::new(self.coeffs.iter().map(|c| c.numer().clone() * (l.clone() / c.denom().clone())).collect())
            .primitive_part()
    }
}

impl<T: Num + Clone> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Num + Clone> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Num + Clone> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Num + Clone + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Num + Clone> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Num + Clone> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Num + Clone> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::constant(T::one())
    }
}

impl<T: Num + Clone + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

/// Serializes as the coefficient list, lowest degree first, each
/// coefficient a decimal string.
impl<T: fmt::Display> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
