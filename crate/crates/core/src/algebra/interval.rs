use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// Interval with rational endpoints, each endpoint open or closed.
/// `lo <= hi`, and a degenerate interval is closed at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval<I: Clone + Integer> {
    lo: Ratio<I>,
    hi: Ratio<I>,
    lo_open: bool,
    hi_open: bool,
}

impl<I: Clone + Integer> Interval<I> {
    pub fn new(lo: Ratio<I>, hi: Ratio<I>, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval("lower endpoint exceeds upper endpoint".into()));
        }
        if lo == hi && (lo_open || hi_open) {
            return Err(Error::InvalidInterval("degenerate interval must be closed".into()));
        }
        Ok(Interval { lo, hi, lo_open, hi_open })
    }

    pub fn open(lo: Ratio<I>, hi: Ratio<I>) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn closed(lo: Ratio<I>, hi: Ratio<I>) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// `(lo, hi]`.
    pub fn half_open(lo: Ratio<I>, hi: Ratio<I>) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    pub fn point(x: Ratio<I>) -> Self {
        Interval { lo: x.clone(), hi: x, lo_open: false, hi_open: false }
    }

    pub fn open_int(lo: I, hi: I) -> Result<Self> {
        Self::open(Ratio::from_integer(lo), Ratio::from_integer(hi))
    }

    pub fn lo(&self) -> &Ratio<I> {
        &self.lo
    }

    pub fn hi(&self) -> &Ratio<I> {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn width(&self) -> Ratio<I> {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains(&self, x: &Ratio<I>) -> bool {
        let above = if self.lo_open { *x > self.lo } else { *x >= self.lo };
        let below = if self.hi_open { *x < self.hi } else { *x <= self.hi };
        above && below
    }

    /// True when every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        let lo_ok = self.lo > other.lo || (self.lo == other.lo && (!other.lo_open || self.lo_open));
        let hi_ok = self.hi < other.hi || (self.hi == other.hi && (!other.hi_open || self.hi_open));
        lo_ok && hi_ok
    }
}

impl<I: Clone + Integer + fmt::Display + Signed> fmt::Display for Interval<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_open { '(' } else { '[' };
        let r = if self.hi_open { ')' } else { ']' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// `{lo, hi, lo_open, hi_open}` with endpoints as exact `p/q` strings.
impl<I: Clone + Integer + fmt::Display> Serialize for Interval<I> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Interval", 4)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("lo_open", &self.lo_open)?;
        st.serialize_field("hi_open", &self.hi_open)?;
        st.end()
    }
}
