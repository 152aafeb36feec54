//! Subsets of the simple roots, stored as a bitmask.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `{0, …, rank-1}` (0-based simple indices).
///
/// Displayed 1-based, e.g. `[1,3]`; the empty set is `[]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SimpleSet(u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(rank: usize) -> Self {
        assert!(rank <= 32);
        if rank == 32 {
            SimpleSet(u32::MAX)
        } else {
            SimpleSet((1u32 << rank) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> Self {
        SimpleSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        SimpleSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SimpleSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        SimpleSet(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        SimpleSet(self.0 & !(1 << i))
    }

    pub fn is_subset(self, other: SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of `{0, …, rank-1}` in [`Ord`] order.
    pub fn all(rank: usize) -> Vec<SimpleSet> {
        let mut out: Vec<_> = (0..(1u32 << rank)).map(SimpleSet).collect();
        out.sort();
        out
    }

    /// Parses `[1,2]`, `[]`, `{}` or `∅` (1-based indices).
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let t = s.trim();
        if t == "∅" || t.eq_ignore_ascii_case("empty") {
            return Ok(SimpleSet::EMPTY);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('{').and_then(|r| r.strip_suffix('}')))
            .unwrap_or(t);
        let mut set = SimpleSet::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::LabelParse(format!("bad simple index `{part}`")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            set = set.insert(i - 1);
        }
        Ok(set)
    }
}

impl Ord for SimpleSet {
    /// Cardinality first, then lexicographic on the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SimpleSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let s = SimpleSet::from_indices([0, 2]);
        assert_eq!(s.to_string(), "[1,3]");
        assert_eq!(SimpleSet::parse("[1,3]", 3).unwrap(), s);
        assert_eq!(SimpleSet::parse("[]", 3).unwrap(), SimpleSet::EMPTY);
        assert_eq!(SimpleSet::parse("∅", 3).unwrap(), SimpleSet::EMPTY);
        assert!(SimpleSet::parse("[4]", 3).is_err());
        assert!(SimpleSet::parse("[0]", 3).is_err());
    }

    #[test]
    fn order_is_by_size_then_lex() {
        let all = SimpleSet::all(3);
        let shown: Vec<_> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            shown,
            ["[]", "[1]", "[2]", "[3]", "[1,2]", "[1,3]", "[2,3]", "[1,2,3]"]
        );
    }

    #[test]
    fn subset_relation() {
        let a = SimpleSet::from_indices([1]);
        let b = SimpleSet::from_indices([0, 1]);
        assert!(a.is_subset(b));
        assert!(!b.is_subset(a));
        assert!(SimpleSet::EMPTY.is_subset(a));
    }
}
