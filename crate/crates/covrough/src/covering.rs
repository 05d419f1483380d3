//! Coverings: finite families of nonempty subsets that jointly exhaust the
//! universe.
//!
//! A covering generalizes a partition by allowing its members to overlap.
//! Members are kept in a canonical form — deduplicated and sorted by their
//! bit pattern ascending — so structural equality of two `Covering` values
//! coincides with equality of the set families they denote.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::universe::Universe;

/// A canonical family of nonempty subsets whose union is the whole universe.
#[derive(Debug, Clone)]
pub struct Covering {
    universe: Universe,
    masks: Vec<u64>,
}

impl Covering {
    /// Builds a covering from families of element labels.
    ///
    /// Duplicate member sets are collapsed; member order is normalized.
    /// Fails if any member is empty, any label is unknown, or the members do
    /// not cover the universe.
    pub fn from_labels<I, M, S>(universe: &Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut masks = Vec::new();
        for member in members {
            masks.push(Subset::from_labels(universe, member)?.mask());
        }
        Covering::from_masks(universe, masks)
    }

    /// Builds a covering from already-constructed subsets of `universe`.
    pub fn from_subsets<I>(universe: &Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut masks = Vec::new();
        for member in members {
            universe.require_same(member.universe())?;
            masks.push(member.mask());
        }
        Covering::from_masks(universe, masks)
    }

    pub(crate) fn from_masks(universe: &Universe, mut masks: Vec<u64>) -> Result<Self> {
        let mut union = 0u64;
        for &mask in &masks {
            if mask == 0 {
                return Err(Error::EmptySet);
            }
            union |= mask;
        }
        if union != universe.full_mask() {
            return Err(Error::NotACovering);
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Covering {
            universe: universe.clone(),
            masks,
        })
    }

    /// The universe being covered.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of (distinct) members.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    /// A covering is never empty; this exists for API completeness.
    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// The member at canonical position `index`.
    pub fn member(&self, index: usize) -> Result<Subset> {
        self.masks
            .get(index)
            .map(|&m| Subset::from_mask(&self.universe, m))
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.masks.len(),
            })
    }

    /// Members in canonical order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.masks
            .iter()
            .map(move |&m| Subset::from_mask(&self.universe, m))
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// True when `set` is one of the members.
    pub fn contains(&self, set: &Subset) -> Result<bool> {
        self.universe.require_same(set.universe())?;
        Ok(self.masks.binary_search(&set.mask()).is_ok())
    }

    /// True when the members are pairwise disjoint, i.e. the covering is a
    /// partition of the universe.
    pub fn is_partition(&self) -> bool {
        let mut seen = 0u64;
        for &mask in &self.masks {
            if seen & mask != 0 {
                return false;
            }
            seen |= mask;
        }
        true
    }

    /// Intersection of all members containing element `x` (given by index).
    ///
    /// Every element lies in at least one member, so the result is nonempty
    /// and contains `x`.
    pub(crate) fn neighborhood_mask_of_index(&self, x: usize) -> u64 {
        let bit = 1u64 << x;
        let mut nb = self.universe.full_mask();
        for &mask in &self.masks {
            if mask & bit != 0 {
                nb &= mask;
            }
        }
        nb
    }
}

impl PartialEq for Covering {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.masks == other.masks
    }
}

impl Eq for Covering {}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", members.join(", "))
    }
}
