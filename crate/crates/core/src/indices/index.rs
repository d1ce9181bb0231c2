use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers; the empty index is ∅.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(Vec<u32>);

/// Membership flags for the index classes used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Entries ≤ q and last entry ≤ q − 1.
    pub in_thakur: bool,
    /// Empty or first entry > q.
    pub in_iprime: bool,
    /// First entry > 1 (convergent classical MZV).
    pub admissible0: bool,
    /// Last entry > 1 (convergent classical dagger value).
    pub rev_admissible0: bool,
}

impl Index {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidInput(format!("index entries must be positive, got {entries:?}")));
        }
        Ok(Self(entries))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// (s) for a single entry.
    pub fn single(s: u32) -> Self {
        assert!(s >= 1, "index entries must be positive");
        Self(vec![s])
    }

    /// ({c}^n)
    pub fn repeat(c: u32, n: usize) -> Self {
        assert!(c >= 1, "index entries must be positive");
        Self(vec![c; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// s[:i] = (s_1, …, s_i); clamps past the end.
    pub fn prefix(&self, i: usize) -> Index {
        Self(self.0[..i.min(self.0.len())].to_vec())
    }

    /// s[i:] = (s_i, …, s_r) with 1-based `i`; s[r+1:] = ∅.
    pub fn suffix(&self, i: usize) -> Index {
        let start = i.saturating_sub(1).min(self.0.len());
        Self(self.0[start..].to_vec())
    }

    /// s₊ = (s_1, …, s_{r−1})
    pub fn plus(&self) -> Result<Index> {
        if self.is_empty() {
            return Err(Error::EmptyIndex("plus"));
        }
        Ok(self.prefix(self.depth() - 1))
    }

    /// s₋ = (s_2, …, s_r)
    pub fn minus(&self) -> Result<Index> {
        if self.is_empty() {
            return Err(Error::EmptyIndex("minus"));
        }
        Ok(self.suffix(2))
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn prepend(&self, c: u32) -> Index {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(c);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn append(&self, c: u32) -> Index {
        let mut v = self.0.clone();
        v.push(c);
        Self(v)
    }

    pub fn reversed(&self) -> Index {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn in_thakur(&self, q: u32) -> bool {
        match self.0.split_last() {
            None => true,
            Some((&last, init)) => last < q && init.iter().all(|&s| s <= q),
        }
    }

    pub fn in_iprime(&self, q: u32) -> bool {
        self.first().map_or(true, |s| s > q)
    }

    pub fn classify(&self, q: u32) -> Classification {
        Classification {
            in_thakur: self.in_thakur(q),
            in_iprime: self.in_iprime(q),
            admissible0: self.first().map_or(true, |s| s > 1),
            rev_admissible0: self.last().map_or(true, |s| s > 1),
        }
    }

    /// All indices of weight `w`, in lexicographic order.
    pub fn compositions(w: u32) -> Vec<Index> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        compose(w, &mut cur, &mut out);
        out
    }

    /// All indices of weight `w` and depth at most `max_depth`.
    pub fn compositions_bounded(w: u32, max_depth: usize) -> Vec<Index> {
        Self::compositions(w).into_iter().filter(|s| s.depth() <= max_depth).collect()
    }

    /// I^T_w in lexicographic order.
    pub fn thakur_basis(q: u32, w: u32) -> Vec<Index> {
        Self::compositions(w).into_iter().filter(|s| s.in_thakur(q)).collect()
    }
}

fn compose(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
    if rest == 0 {
        out.push(Index(cur.clone()));
        return;
    }
    for first in 1..=rest {
        cur.push(first);
        compose(rest - first, cur, out);
        cur.pop();
    }
}

impl From<&[u32]> for Index {
    /// Panics on a zero entry; use [`Index::new`] for untrusted input.
    fn from(entries: &[u32]) -> Self {
        Index::new(entries.to_vec()).expect("positive entries")
    }
}

impl<const N: usize> From<[u32; N]> for Index {
    fn from(entries: [u32; N]) -> Self {
        Index::from(&entries[..])
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Accepts `()` and `(3,1,2)`, with optional whitespace.
    fn from_str(src: &str) -> Result<Self> {
        let t = src.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("index '{src}' must be a parenthesized list like (3,1,2)")))?;
        if inner.trim().is_empty() {
            return Ok(Index::empty());
        }
        let entries = inner
            .split(',')
            .map(|e| {
                e.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Error::Parse(format!("'{}' is not a positive integer in index '{src}'", e.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Index(entries))
    }
}
