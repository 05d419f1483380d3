//! Approximation spaces and the approximation operators themselves.
//!
//! An [`ApproxSpace`] pairs a universe with a covering and caches the
//! *neighborhood* of every element: the intersection of all members the
//! element belongs to.  On top of that sit
//!
//! * the lower approximation — the union of members contained in the target,
//! * three routes to the upper approximation that provably agree:
//!   * [`ApproxSpace::upper_def3`] extends the lower approximation by the
//!     neighborhoods of the uncovered part,
//!   * [`ApproxSpace::upper_neigh`] takes the union of neighborhoods over the
//!     whole target,
//!   * [`ApproxSpace::upper_subcov`] intersects the unions of all
//!     sub-families that still cover the target.
//!
//! The third route enumerates sub-families and is exponential in the number
//! of members; it exists as an independent cross-check and is refused beyond
//! a configurable cap.

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::universe::Universe;

/// Default bound on covering size for sub-family enumeration (`2^cap`
/// sub-families are scanned).
pub const DEFAULT_SUBFAMILY_CAP: usize = 20;

/// Cached map from each element to its neighborhood.
///
/// The neighborhood of `x` is the intersection of every member containing
/// `x`; it is always nonempty and always contains `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodTable {
    universe: Universe,
    masks: Vec<u64>,
}

impl NeighborhoodTable {
    fn build(covering: &Covering) -> Self {
        let universe = covering.universe().clone();
        let masks = (0..universe.size())
            .map(|x| covering.neighborhood_mask_of_index(x))
            .collect();
        NeighborhoodTable { universe, masks }
    }

    /// Neighborhood of the element at `index`.
    pub fn at(&self, index: usize) -> Result<Subset> {
        self.masks
            .get(index)
            .map(|&m| Subset::from_mask(&self.universe, m))
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.masks.len(),
            })
    }

    /// Neighborhoods in element-index order.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.masks
            .iter()
            .map(move |&m| Subset::from_mask(&self.universe, m))
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.masks
    }
}

/// A universe together with a covering, ready for approximation queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxSpace {
    covering: Covering,
    table: NeighborhoodTable,
}

impl ApproxSpace {
    /// Wraps a covering; the neighborhood table is computed once here.
    pub fn new(covering: Covering) -> Self {
        let table = NeighborhoodTable::build(&covering);
        ApproxSpace { covering, table }
    }

    /// The underlying universe.
    pub fn universe(&self) -> &Universe {
        self.covering.universe()
    }

    /// The underlying covering.
    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    /// The cached element-to-neighborhood map.
    pub fn neighborhood_table(&self) -> &NeighborhoodTable {
        &self.table
    }

    /// Neighborhood of the element named `label`.
    pub fn neighborhood(&self, label: &str) -> Result<Subset> {
        let index = self.universe().index_of(label)?;
        self.table.at(index)
    }

    /// Neighborhood of the element at `index`.
    pub fn neighborhood_at(&self, index: usize) -> Result<Subset> {
        self.table.at(index)
    }

    fn require_operand(&self, x: &Subset) -> Result<u64> {
        self.universe().require_same(x.universe())?;
        Ok(x.mask())
    }

    /// Lower approximation: the union of all members contained in `x`.
    pub fn lower(&self, x: &Subset) -> Result<Subset> {
        let xm = self.require_operand(x)?;
        let mut acc = 0u64;
        for &m in self.covering.masks() {
            if m & !xm == 0 {
                acc |= m;
            }
        }
        Ok(Subset::from_mask(self.universe(), acc))
    }

    /// Upper approximation, built as the lower approximation plus the
    /// neighborhoods of the part of `x` the lower approximation misses.
    pub fn upper_def3(&self, x: &Subset) -> Result<Subset> {
        let xm = self.require_operand(x)?;
        let lower = self.lower(x)?.mask();
        let mut acc = lower;
        let mut rest = xm & !lower;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= self.table.masks()[i];
        }
        Ok(Subset::from_mask(self.universe(), acc))
    }

    /// Upper approximation as the union of the neighborhoods of all elements
    /// of `x`.
    pub fn upper_neigh(&self, x: &Subset) -> Result<Subset> {
        let xm = self.require_operand(x)?;
        let mut acc = 0u64;
        let mut rest = xm;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= self.table.masks()[i];
        }
        Ok(Subset::from_mask(self.universe(), acc))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.covering.len() > cap {
            Err(Error::CoveringTooLarge {
                size: self.covering.len(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// Runs `visit(family_mask, union_mask)` over every sub-family of the
    /// covering, in ascending order of the family bit mask.
    fn sweep_subfamilies(&self, mut visit: impl FnMut(u64, u64)) {
        let masks = self.covering.masks();
        let count = 1u64 << masks.len();
        let mut unions = vec![0u64; count as usize];
        visit(0, 0);
        for family in 1..count {
            let lowest = family.trailing_zeros() as usize;
            let rest = family & (family - 1);
            let union = unions[rest as usize] | masks[lowest];
            unions[family as usize] = union;
            visit(family, union);
        }
    }

    /// All sub-families of the covering whose union still contains `x`.
    ///
    /// Families are encoded as bit masks over canonical member indices and
    /// listed in ascending mask order.  The empty sub-family qualifies
    /// exactly when `x` is empty; the full family always qualifies.
    pub fn subcoverings(&self, x: &Subset, cap: usize) -> Result<SubcoveringFamily> {
        let xm = self.require_operand(x)?;
        self.check_cap(cap)?;
        let mut families = Vec::new();
        self.sweep_subfamilies(|family, union| {
            if xm & !union == 0 {
                families.push(family);
            }
        });
        Ok(SubcoveringFamily {
            base: self.clone(),
            target: x.clone(),
            families,
        })
    }

    /// Upper approximation as the intersection of the unions of all
    /// sub-families that cover `x` (enumeration capped at
    /// [`DEFAULT_SUBFAMILY_CAP`] members).
    pub fn upper_subcov(&self, x: &Subset) -> Result<Subset> {
        self.upper_subcov_capped(x, DEFAULT_SUBFAMILY_CAP)
    }

    /// [`ApproxSpace::upper_subcov`] with an explicit enumeration cap.
    pub fn upper_subcov_capped(&self, x: &Subset, cap: usize) -> Result<Subset> {
        let xm = self.require_operand(x)?;
        self.check_cap(cap)?;
        let mut acc = self.universe().full_mask();
        self.sweep_subfamilies(|_, union| {
            if xm & !union == 0 {
                acc &= union;
            }
        });
        Ok(Subset::from_mask(self.universe(), acc))
    }

    /// Upper approximation restricted to *proper* sub-families: the full
    /// family is excluded from the intersection.  Errors when the full
    /// family is the only one covering `x`.
    pub fn upper_subcov_nontrivial(&self, x: &Subset) -> Result<Subset> {
        let xm = self.require_operand(x)?;
        self.check_cap(DEFAULT_SUBFAMILY_CAP)?;
        let full_family = (1u64 << self.covering.len()) - 1;
        let mut acc = self.universe().full_mask();
        let mut found = false;
        self.sweep_subfamilies(|family, union| {
            if family != full_family && xm & !union == 0 {
                acc &= union;
                found = true;
            }
        });
        if found {
            Ok(Subset::from_mask(self.universe(), acc))
        } else {
            Err(Error::OnlyTrivialSubcovering)
        }
    }
}

/// The family of sub-families of a covering that still cover a target set.
#[derive(Debug, Clone)]
pub struct SubcoveringFamily {
    base: ApproxSpace,
    target: Subset,
    families: Vec<u64>,
}

impl SubcoveringFamily {
    /// The space the enumeration ran over.
    pub fn base(&self) -> &ApproxSpace {
        &self.base
    }

    /// The set every listed sub-family covers.
    pub fn target(&self) -> &Subset {
        &self.target
    }

    /// Sub-families as bit masks over canonical member indices, ascending.
    pub fn family_masks(&self) -> &[u64] {
        &self.families
    }

    /// Number of qualifying sub-families.
    pub fn len(&self) -> usize {
        self.families.len()
    }

    /// True when no sub-family qualifies (never happens: the full family
    /// always covers any subset of the universe).
    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// The members of the `index`-th qualifying sub-family.
    pub fn family(&self, index: usize) -> Result<Vec<Subset>> {
        let &mask = self.families.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.families.len(),
        })?;
        Ok(self
            .base
            .covering()
            .members()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, m)| m)
            .collect())
    }
}
