//! Multisets backed by ordered maps, so iteration order is deterministic.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset over an ordered element type.
///
/// Multiplicities are always >= 1 for stored keys; inserting bumps the count,
/// removing decrements and drops the key at zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, usize>,
}

// Serialized as the expanded element list so any element type works as a
// JSON value, not only string-keyed ones.
impl<T: Ord + Clone + Serialize> Serialize for Multiset<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de, T: Ord + Clone + Deserialize<'de>> Deserialize<'de> for Multiset<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Vec::<T>::deserialize(deserializer)?.into_iter().collect())
    }
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(x: T) -> Self {
        let mut m = Self::new();
        m.insert(x);
        m
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of occurrences.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, x: &T) -> usize {
        self.counts.get(x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: &T) -> bool {
        self.counts.contains_key(x)
    }

    pub fn insert(&mut self, x: T) {
        *self.counts.entry(x).or_insert(0) += 1;
    }

    pub fn insert_n(&mut self, x: T, n: usize) {
        if n > 0 {
            *self.counts.entry(x).or_insert(0) += n;
        }
    }

    /// Removes one occurrence; false if the element was absent.
    pub fn remove_one(&mut self, x: &T) -> bool {
        match self.counts.get_mut(x) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(x);
                true
            }
            None => false,
        }
    }

    /// M_X(A) <= M_self(A) for all A in X.
    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.counts.iter().all(|(x, c)| other.count(x) >= *c)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in &other.counts {
            out.insert_n(x.clone(), *c);
        }
        out
    }

    /// Multiset difference, saturating at zero per element.
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (x, c) in &self.counts {
            let rest = c.saturating_sub(other.count(x));
            out.insert_n(x.clone(), rest);
        }
        out
    }

    /// Removes one occurrence of `x` and returns the rest, or None if absent.
    pub fn without_one(&self, x: &T) -> Option<Self> {
        if !self.contains(x) {
            return None;
        }
        let mut out = self.clone();
        out.remove_one(x);
        Some(out)
    }

    /// Distinct elements in order.
    pub fn keys(&self) -> impl Iterator<Item = &T> {
        self.counts.keys()
    }

    pub fn iter_counts(&self) -> impl Iterator<Item = (&T, usize)> {
        self.counts.iter().map(|(x, c)| (x, *c))
    }

    /// Every occurrence, repeated per multiplicity, in element order.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.counts
            .iter()
            .flat_map(|(x, c)| std::iter::repeat(x).take(*c))
    }

    /// The underlying element set (multiplicities collapsed).
    pub fn support(&self) -> Vec<&T> {
        self.counts.keys().collect()
    }

    pub fn all<F: Fn(&T) -> bool>(&self, f: F) -> bool {
        self.counts.keys().all(f)
    }

    /// Splits into (elements satisfying f, the rest), keeping multiplicities.
    pub fn partition<F: Fn(&T) -> bool>(&self, f: F) -> (Self, Self) {
        let mut yes = Self::new();
        let mut no = Self::new();
        for (x, c) in &self.counts {
            if f(x) {
                yes.insert_n(x.clone(), *c);
            } else {
                no.insert_n(x.clone(), *c);
            }
        }
        (yes, no)
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Self::new();
        for x in iter {
            m.insert(x);
        }
        m
    }
}

impl<T: Ord + Clone + fmt::Debug> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities_and_submultiset() {
        let mut a: Multiset<&str> = ["p", "p", "q"].into_iter().collect();
        let b: Multiset<&str> = ["p", "q"].into_iter().collect();
        assert_eq!(a.count(&"p"), 2);
        assert!(b.is_submultiset_of(&a));
        assert!(!a.is_submultiset_of(&b));
        assert!(a.remove_one(&"p"));
        assert_eq!(a, b);
        assert!(!a.remove_one(&"r"));
    }

    #[test]
    fn union_difference_roundtrip() {
        let a: Multiset<i32> = [1, 1, 2].into_iter().collect();
        let b: Multiset<i32> = [1, 3].into_iter().collect();
        let u = a.union(&b);
        assert_eq!(u.count(&1), 3);
        assert_eq!(u.difference(&b), a);
    }
}
