//! Subsets of the player set `N = {1, …, n}` as bit masks.
//!
//! Player `i` (1-based, as written in text) occupies bit `i - 1`. Every subset
//! of a subset has a numerically smaller mask, so iterating masks in
//! ascending order visits subsets before their supersets.

use std::fmt;
use std::str::FromStr;

/// Largest supported player count; set functions are dense tables of `2ⁿ`
/// entries.
pub const MAX_PLAYERS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `N` for `n` players.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    /// The singleton holding the player at 0-based `index`.
    pub fn singleton(index: usize) -> Self {
        Coalition(1 << index)
    }

    /// Builds a coalition from 0-based player indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Coalition::EMPTY, |c, i| c.with(i))
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        Coalition(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Self {
        Coalition(self.0 & !(1 << index))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// `Aᶜ` relative to `N = {1, …, n}`.
    pub fn complement(self, n: usize) -> Self {
        Coalition(Coalition::full(n).0 & !self.0)
    }

    /// 0-based indices of the members, ascending.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// Every subset of `self`, ascending by mask (so `∅` first, `self` last).
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current | !full).wrapping_add(1) & full)
            };
            Some(Coalition(current))
        })
    }

    /// All `2ⁿ` coalitions of `n` players, ascending by mask.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..1u64 << n).map(|b| Coalition(b as u32))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a subset like {{1,3}}")]
pub struct ParseCoalitionError(pub String);

impl Coalition {
    /// Parses `{a,b,…}`, resolving each member with `resolve` into a 0-based
    /// index.
    pub fn parse_with<F>(text: &str, mut resolve: F) -> Result<Self, ParseCoalitionError>
    where
        F: FnMut(&str) -> Option<usize>,
    {
        let err = || ParseCoalitionError(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(err)?
            .trim();
        if inner.is_empty() {
            return Ok(Coalition::EMPTY);
        }
        let mut out = Coalition::EMPTY;
        for member in inner.split(',') {
            let index = resolve(member.trim()).ok_or_else(err)?;
            if index >= MAX_PLAYERS || out.contains(index) {
                return Err(err());
            }
            out = out.with(index);
        }
        Ok(out)
    }
}

impl FromStr for Coalition {
    type Err = ParseCoalitionError;

    /// Parses 1-based player ids, e.g. `{1,3}` or `{}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Coalition::parse_with(s, |m| m.parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_use_one_based_ids() {
        let c = Coalition::from_indices([0, 2]);
        assert_eq!(c.to_string(), "{1,3}");
        assert_eq!("{1,3}".parse::<Coalition>().unwrap(), c);
        assert_eq!("{ 3, 1 }".parse::<Coalition>().unwrap(), c);
        assert_eq!("{}".parse::<Coalition>().unwrap(), Coalition::EMPTY);
        for bad in ["1,3", "{0}", "{1,1}", "{a}", "{1,,2}"] {
            assert!(bad.parse::<Coalition>().is_err(), "{bad}");
        }
    }

    #[test]
    fn subsets_are_complete_and_ascending() {
        let c = Coalition::from_indices([0, 2, 3]);
        let subs: Vec<_> = c.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.is_subset_of(c)));
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn set_algebra() {
        let a = Coalition::from_indices([0, 1]);
        let b = Coalition::from_indices([1, 2]);
        assert_eq!(a.union(b), Coalition::full(3));
        assert_eq!(a.intersection(b), Coalition::singleton(1));
        assert_eq!(a.complement(3), Coalition::singleton(2));
        assert!(a.without(1).is_subset_of(a));
        assert!(!a.is_disjoint(b));
        assert_eq!(Coalition::all(3).count(), 8);
        assert_eq!(Coalition::full(3).players().collect::<Vec<_>>(), vec![0, 1, 2]);
    }
}
