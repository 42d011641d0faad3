use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A subset of the ground set `0..n`, stored as strictly increasing ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    /// Builds a set from arbitrary ids. Duplicates are rejected.
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> Result<Self> {
        let mut ids: Vec<usize> = ids.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSet(format!("duplicate element id {}", w[0])));
        }
        Ok(Self(ids))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The whole ground set `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Set whose members are the one bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut ids = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            ids.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        Self(ids)
    }

    /// Bit mask of the members. Only meaningful when every id is below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Inserts `v`, returning `false` if it was already present.
    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    /// Copy of `self` with `v` added.
    pub fn with(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    /// Fails unless every member is a valid id for a ground set of size `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= n => Err(Error::InvalidSet(format!(
                "element id {max} out of range for ground set of size {n}"
            ))),
            _ => Ok(()),
        }
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        ElementSet::new(ids).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<usize> for ElementSet {
    /// Collects ids, silently dropping duplicates.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(ElementSet::new([1, 2, 1]), Err(Error::InvalidSet(_))));
    }

    #[test]
    fn mask_round_trip() {
        let s = ElementSet::new([5, 0, 3]).unwrap();
        assert_eq!(s.as_slice(), &[0, 3, 5]);
        assert_eq!(s.to_mask(), 0b101001);
        assert_eq!(ElementSet::from_mask(s.to_mask()), s);
    }

    #[test]
    fn range_check() {
        let s = ElementSet::new([0, 3]).unwrap();
        assert!(s.check_within(4).is_ok());
        assert!(s.check_within(3).is_err());
        assert!(ElementSet::empty().check_within(0).is_ok());
    }

    #[test]
    fn insert_keeps_order() {
        let mut s = ElementSet::new([4, 1]).unwrap();
        assert!(s.insert(2));
        assert!(!s.insert(4));
        assert_eq!(s.as_slice(), &[1, 2, 4]);
        assert_eq!(s.to_string(), "{1,2,4}");
    }

    #[test]
    fn deserialize_validates() {
        assert!(serde_json::from_str::<ElementSet>("[2,0]").is_ok());
        assert!(serde_json::from_str::<ElementSet>("[2,2]").is_err());
    }
}
