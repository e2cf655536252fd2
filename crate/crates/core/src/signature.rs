//! Signatures: weakly decreasing tuples of nonnegative integers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;
pub const MAX_PART: i64 = 1_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.len() > MAX_LEN {
            return Err(Error::InvalidSignature(format!(
                "length {} exceeds {MAX_LEN}",
                parts.len()
            )));
        }
        if let Some(&p) = parts.iter().find(|&&p| !(0..=MAX_PART).contains(&p)) {
            return Err(Error::InvalidSignature(format!("part {p} out of range")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSignature(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Signature(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_multiset(mut parts: Vec<i64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Signature(parts)
    }

    pub fn empty() -> Self {
        Signature(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        Signature(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.0
    }

    /// 1-based part access; parts beyond the length read as `None`.
    pub fn part(&self, i: usize) -> Option<i64> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    pub fn first(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// n_k = #{i : λ_i = k}, only nonzero counts.
    pub fn multiplicities(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, k: i64) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Componentwise `self_i >= other_i`, same length.
    pub fn dominates(&self, other: &Signature) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Weak interlacing `other ≺ self` for len(self) = len(other) + 1.
    pub fn interlaces_over(&self, other: &Signature) -> bool {
        if self.len() != other.len() + 1 {
            return false;
        }
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &k)| self.0[i] >= k && k >= self.0[i + 1])
    }
}

impl TryFrom<Vec<i64>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<i64> {
    fn from(s: Signature) -> Vec<i64> {
        s.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All strict signatures of length `k` with parts in `[lo, hi]`, in lexicographic order.
pub fn strict_signatures(k: usize, lo: i64, hi: i64) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, lo: i64, top: i64, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if cur.len() == k {
            out.push(Signature(cur.clone()));
            return;
        }
        let remaining = (k - cur.len()) as i64;
        let mut p = lo + remaining - 1;
        while p <= top {
            cur.push(p);
            rec(k, lo, p - 1, cur, out);
            cur.pop();
            p += 1;
        }
    }
    if k == 0 {
        return vec![Signature::empty()];
    }
    rec(k, lo, hi, &mut cur, &mut out);
    out
}

/// All signatures of length `k` with parts in `[0, hi]`.
pub fn signatures_bounded(k: usize, hi: i64) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, top: i64, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if cur.len() == k {
            out.push(Signature(cur.clone()));
            return;
        }
        for p in 0..=top {
            cur.push(p);
            rec(k, p, cur, out);
            cur.pop();
        }
    }
    rec(k, hi, &mut cur, &mut out);
    out
}
