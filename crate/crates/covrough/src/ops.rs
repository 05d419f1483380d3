//! Operators that transform or compare coverings.
//!
//! * [`Covering::reduct`] deletes members expressible as unions of other
//!   members; it is the canonical representative for the lower-approximation
//!   operator.
//! * [`Covering::int`] deletes members expressible as intersections of other
//!   members; it preserves every neighborhood, hence the upper operator.
//! * [`Covering::nei`] replaces the covering by its family of neighborhoods.
//! * [`Covering::join`] / [`Covering::meet`] combine two coverings; the meet
//!   is the pointwise intersection of neighborhoods of the union family.
//! * [`Covering::definable_closure`] adjoins every nonempty sub-family union.
//! * `same_lower_operator` / `same_upper_operator` decide operator equality
//!   through finite certificates (reduct equality, neighborhood equality);
//!   the `..._by_subsets` variants are literal oracles that sweep every
//!   subset of a small universe.

use crate::approx::DEFAULT_SUBFAMILY_CAP;
use crate::covering::Covering;
use crate::error::{Error, Result};

/// Largest universe the exhaustive `..._by_subsets` oracles accept
/// (`2^n` subsets are swept).
pub const MAX_EXHAUSTIVE_N: usize = 12;

impl Covering {
    /// True when the member at `index` is *not* the union of any sub-family
    /// of the other members.
    ///
    /// A member is such a union iff it equals the union of all other members
    /// contained in it, so a single pass decides the question.
    pub fn is_irreducible(&self, index: usize) -> Result<bool> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(self.irreducible_at(index))
    }

    fn irreducible_at(&self, index: usize) -> bool {
        let masks = self.masks();
        let target = masks[index];
        let mut union = 0u64;
        for (j, &other) in masks.iter().enumerate() {
            if j != index && other & !target == 0 {
                union |= other;
            }
        }
        union != target
    }

    /// Deletes every member that is a union of other members.
    ///
    /// Redundancy is judged against the *original* covering, so the result
    /// does not depend on any deletion order, and what remains still covers
    /// the universe (every member is a union of irreducible ones).
    pub fn reduct(&self) -> Covering {
        let keep: Vec<u64> = self
            .masks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.irreducible_at(i))
            .map(|(_, &m)| m)
            .collect();
        Covering::from_masks(self.universe(), keep)
            .expect("irreducible members still cover the universe")
    }

    /// True when the member at `index` is *not* the intersection of any
    /// nonempty sub-family of the other members.
    ///
    /// A member is such an intersection iff at least one other member
    /// contains it and it equals the intersection of all of those.
    pub fn is_non_intersectional(&self, index: usize) -> Result<bool> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(self.non_intersectional_at(index))
    }

    fn non_intersectional_at(&self, index: usize) -> bool {
        let masks = self.masks();
        let target = masks[index];
        let mut meet = self.universe().full_mask();
        let mut any = false;
        for (j, &other) in masks.iter().enumerate() {
            if j != index && target & !other == 0 {
                meet &= other;
                any = true;
            }
        }
        !(any && meet == target)
    }

    /// Deletes every member that is an intersection of other members.
    ///
    /// Every member is an intersection of the surviving ones, so the result
    /// still covers the universe and leaves all neighborhoods unchanged.
    pub fn int(&self) -> Covering {
        let keep: Vec<u64> = self
            .masks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.non_intersectional_at(i))
            .map(|(_, &m)| m)
            .collect();
        Covering::from_masks(self.universe(), keep)
            .expect("non-intersectional members still cover the universe")
    }

    /// The covering formed by the neighborhoods of all elements.
    pub fn nei(&self) -> Covering {
        let masks: Vec<u64> = (0..self.universe().size())
            .map(|x| self.neighborhood_mask_of_index(x))
            .collect();
        Covering::from_masks(self.universe(), masks)
            .expect("every element lies in its own neighborhood")
    }

    /// The union of two coverings as families (members pooled, duplicates
    /// collapsed).
    pub fn join(&self, other: &Covering) -> Result<Covering> {
        self.universe().require_same(other.universe())?;
        let mut masks = self.masks().to_vec();
        masks.extend_from_slice(other.masks());
        Ok(Covering::from_masks(self.universe(), masks)
            .expect("a union of coverings covers the universe"))
    }

    /// The meet of two coverings: for every element, the intersection of all
    /// members of the pooled family containing it.
    ///
    /// Equivalently the pointwise intersection of the two neighborhoods,
    /// which is how it is computed here; the identity with
    /// `join(..).nei()` is one of the checked laws.
    pub fn meet(&self, other: &Covering) -> Result<Covering> {
        self.universe().require_same(other.universe())?;
        let masks: Vec<u64> = (0..self.universe().size())
            .map(|x| self.neighborhood_mask_of_index(x) & other.neighborhood_mask_of_index(x))
            .collect();
        Ok(Covering::from_masks(self.universe(), masks)
            .expect("pointwise neighborhood intersections cover the universe"))
    }

    /// Adjoins the union of every nonempty sub-family, i.e. the family of
    /// all nonempty definable sets.
    ///
    /// Enumeration is exponential in the member count and refused above
    /// [`DEFAULT_SUBFAMILY_CAP`].
    pub fn definable_closure(&self) -> Result<Covering> {
        self.definable_closure_capped(DEFAULT_SUBFAMILY_CAP)
    }

    /// [`Covering::definable_closure`] with an explicit enumeration cap.
    pub fn definable_closure_capped(&self, cap: usize) -> Result<Covering> {
        if self.len() > cap {
            return Err(Error::CoveringTooLarge {
                size: self.len(),
                cap,
            });
        }
        let member_masks = self.masks();
        let count = 1u64 << member_masks.len();
        let mut unions = vec![0u64; count as usize];
        for family in 1..count {
            let lowest = family.trailing_zeros() as usize;
            let rest = family & (family - 1);
            unions[family as usize] = unions[rest as usize] | member_masks[lowest];
        }
        Ok(Covering::from_masks(self.universe(), unions.split_off(1))
            .expect("sub-family unions cover the universe"))
    }

    /// Decides whether two coverings induce the same lower-approximation
    /// operator, via the finite certificate: equal reducts.
    pub fn same_lower_operator(&self, other: &Covering) -> Result<bool> {
        self.universe().require_same(other.universe())?;
        Ok(self.reduct() == other.reduct())
    }

    /// Decides whether two coverings induce the same upper-approximation
    /// operator, via the finite certificate: equal neighborhoods everywhere.
    pub fn same_upper_operator(&self, other: &Covering) -> Result<bool> {
        self.universe().require_same(other.universe())?;
        Ok((0..self.universe().size()).all(|x| {
            self.neighborhood_mask_of_index(x) == other.neighborhood_mask_of_index(x)
        }))
    }

    fn check_exhaustive_size(&self) -> Result<()> {
        let n = self.universe().size();
        if n > MAX_EXHAUSTIVE_N {
            Err(Error::ScopeTooLarge {
                max_n: n,
                limit: MAX_EXHAUSTIVE_N,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn lower_mask(&self, xm: u64) -> u64 {
        let mut acc = 0u64;
        for &m in self.masks() {
            if m & !xm == 0 {
                acc |= m;
            }
        }
        acc
    }

    /// Literal oracle for [`Covering::same_lower_operator`]: compares the
    /// lower approximation of every subset of the universe.
    pub fn same_lower_by_subsets(&self, other: &Covering) -> Result<bool> {
        self.universe().require_same(other.universe())?;
        self.check_exhaustive_size()?;
        let full = self.universe().full_mask();
        let mut xm = 0u64;
        loop {
            if self.lower_mask(xm) != other.lower_mask(xm) {
                return Ok(false);
            }
            if xm == full {
                return Ok(true);
            }
            xm += 1;
        }
    }

    /// Literal oracle for [`Covering::same_upper_operator`]: compares the
    /// upper approximation of every subset of the universe.
    pub fn same_upper_by_subsets(&self, other: &Covering) -> Result<bool> {
        self.universe().require_same(other.universe())?;
        self.check_exhaustive_size()?;
        let n = self.universe().size();
        let mine: Vec<u64> = (0..n).map(|x| self.neighborhood_mask_of_index(x)).collect();
        let theirs: Vec<u64> = (0..n)
            .map(|x| other.neighborhood_mask_of_index(x))
            .collect();
        let full = self.universe().full_mask();
        let mut xm = 0u64;
        loop {
            let mut a = 0u64;
            let mut b = 0u64;
            let mut rest = xm;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                a |= mine[i];
                b |= theirs[i];
            }
            if a != b {
                return Ok(false);
            }
            if xm == full {
                return Ok(true);
            }
            xm += 1;
        }
    }
}
