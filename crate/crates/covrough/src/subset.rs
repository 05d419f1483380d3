//! Subsets of a universe, stored as bit vectors.
//!
//! Element `i` of the universe occupies bit `i`, so set algebra is word
//! arithmetic.  Every binary operation checks that both operands were built
//! over the same universe; mixing universes is an error, never a silent
//! truncation.  The bit pattern doubles as the canonical order on subsets:
//! sorting by the underlying integer is how coverings keep their members in
//! a normal form.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::Universe;

/// A subset of a fixed universe.
#[derive(Debug, Clone)]
pub struct Subset {
    universe: Universe,
    bits: u64,
}

impl Subset {
    /// The empty subset of `universe`.
    pub fn empty(universe: &Universe) -> Self {
        Subset {
            universe: universe.clone(),
            bits: 0,
        }
    }

    /// The whole universe as a subset.
    pub fn full(universe: &Universe) -> Self {
        Subset {
            universe: universe.clone(),
            bits: universe.full_mask(),
        }
    }

    /// Builds a subset from element labels.  Repeated labels are harmless.
    pub fn from_labels<I, S>(universe: &Universe, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for label in labels {
            bits |= 1u64 << universe.index_of(label.as_ref())?;
        }
        Ok(Subset {
            universe: universe.clone(),
            bits,
        })
    }

    /// Builds a subset from element indices.
    pub fn from_indices<I>(universe: &Universe, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for index in indices {
            if index >= universe.size() {
                return Err(Error::IndexOutOfRange {
                    index,
                    len: universe.size(),
                });
            }
            bits |= 1u64 << index;
        }
        Ok(Subset {
            universe: universe.clone(),
            bits,
        })
    }

    pub(crate) fn from_mask(universe: &Universe, bits: u64) -> Self {
        debug_assert_eq!(bits & !universe.full_mask(), 0);
        Subset {
            universe: universe.clone(),
            bits,
        }
    }

    /// The universe this subset lives in.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub(crate) fn mask(&self) -> u64 {
        self.bits
    }

    /// Number of elements in the subset.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// True when the subset has no elements.
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True when the subset is the whole universe.
    pub fn is_full(&self) -> bool {
        self.bits == self.universe.full_mask()
    }

    /// Membership test by label.
    pub fn contains_label(&self, label: &str) -> Result<bool> {
        Ok(self.bits & (1 << self.universe.index_of(label)?) != 0)
    }

    /// Membership test by element index.
    pub fn contains_index(&self, index: usize) -> bool {
        index < self.universe.size() && self.bits & (1 << index) != 0
    }

    /// Indices of the elements, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.universe.size()).filter(move |i| bits & (1 << i) != 0)
    }

    /// Labels of the elements, in universe order.
    pub fn labels(&self) -> Vec<String> {
        self.indices()
            .map(|i| self.universe.names()[i].clone())
            .collect()
    }

    /// Set union.
    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.universe.require_same(&other.universe)?;
        Ok(Subset::from_mask(&self.universe, self.bits | other.bits))
    }

    /// Set intersection.
    pub fn intersect(&self, other: &Subset) -> Result<Subset> {
        self.universe.require_same(&other.universe)?;
        Ok(Subset::from_mask(&self.universe, self.bits & other.bits))
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.universe.require_same(&other.universe)?;
        Ok(Subset::from_mask(&self.universe, self.bits & !other.bits))
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Subset {
        Subset::from_mask(&self.universe, !self.bits & self.universe.full_mask())
    }

    /// Inclusion test `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.universe.require_same(&other.universe)?;
        Ok(self.bits & !other.bits == 0)
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.bits == other.bits
    }
}

impl Eq for Subset {}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    fn sub(u: &Universe, labels: &[&str]) -> Subset {
        Subset::from_labels(u, labels).unwrap()
    }

    #[test]
    fn intersection_of_overlapping_pairs() {
        let u = abcd();
        let ab = sub(&u, &["a", "b"]);
        let ac = sub(&u, &["a", "c"]);
        assert_eq!(ab.intersect(&ac).unwrap(), sub(&u, &["a"]));
    }

    #[test]
    fn difference_with_itself_is_empty() {
        let u = abcd();
        let x = sub(&u, &["a", "d"]);
        assert_eq!(x.difference(&x).unwrap(), Subset::empty(&u));
    }

    #[test]
    fn complement_of_ad_is_bc() {
        let u = abcd();
        assert_eq!(sub(&u, &["a", "d"]).complement(), sub(&u, &["b", "c"]));
    }

    #[test]
    fn mixing_universes_is_rejected() {
        let u = abcd();
        let v = Universe::new(["a", "b"]).unwrap();
        let x = sub(&u, &["a"]);
        let y = Subset::from_labels(&v, ["a"]).unwrap();
        assert_eq!(x.union(&y).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(x.is_subset_of(&y).unwrap_err(), Error::UniverseMismatch);
    }

    #[test]
    fn labels_round_trip_in_universe_order() {
        let u = abcd();
        let x = Subset::from_labels(&u, ["d", "a", "d"]).unwrap();
        assert_eq!(x.labels(), ["a", "d"]);
        assert_eq!(x.len(), 2);
        assert!(x.contains_label("d").unwrap());
        assert!(!x.contains_label("b").unwrap());
        assert!(x.contains_label("z").is_err());
    }

    #[test]
    fn indices_match_bit_positions() {
        let u = abcd();
        let x = Subset::from_indices(&u, [0, 3]).unwrap();
        assert_eq!(x.indices().collect::<Vec<_>>(), [0, 3]);
        assert_eq!(
            Subset::from_indices(&u, [4]).unwrap_err(),
            Error::IndexOutOfRange { index: 4, len: 4 }
        );
    }

    /// Boolean lattice laws, exhaustively over every pair and triple of
    /// subsets of a four-element universe.
    #[test]
    fn boolean_algebra_laws_hold_exhaustively() {
        let u = abcd();
        let all: Vec<Subset> = (0..16).map(|m| Subset::from_mask(&u, m)).collect();
        for x in &all {
            for y in &all {
                // Commutativity.
                assert_eq!(x.union(y).unwrap(), y.union(x).unwrap());
                assert_eq!(x.intersect(y).unwrap(), y.intersect(x).unwrap());
                // Absorption.
                assert_eq!(&x.union(&x.intersect(y).unwrap()).unwrap(), x);
                assert_eq!(&x.intersect(&x.union(y).unwrap()).unwrap(), x);
                // De Morgan.
                assert_eq!(
                    x.union(y).unwrap().complement(),
                    x.complement().intersect(&y.complement()).unwrap()
                );
                assert_eq!(
                    x.intersect(y).unwrap().complement(),
                    x.complement().union(&y.complement()).unwrap()
                );
                for z in &all {
                    // Associativity.
                    assert_eq!(
                        x.union(y).unwrap().union(z).unwrap(),
                        x.union(&y.union(z).unwrap()).unwrap()
                    );
                    assert_eq!(
                        x.intersect(y).unwrap().intersect(z).unwrap(),
                        x.intersect(&y.intersect(z).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn display_uses_braces_and_commas() {
        let u = abcd();
        assert_eq!(sub(&u, &["a", "d"]).to_string(), "{a, d}");
        assert_eq!(Subset::empty(&u).to_string(), "{}");
    }
}
