//! Mappings between universes and structure preservation between spaces.
//!
//! A [`Mapping`] is a total function from one universe to another.  It is a
//! *homomorphism* between two approximation spaces when the image of every
//! covering member is recognizable in the target covering, in one of two
//! senses:
//!
//! * [`HomMode::Strict`] — the image must itself be a member of the target
//!   covering;
//! * [`HomMode::Definable`] — the image must be a union of target members
//!   (the default, and the weaker of the two).
//!
//! Homomorphisms transport lower approximations into lower approximations
//! (one-sided); bijective two-way homomorphisms transport neighborhoods and
//! both approximations exactly.  [`Mapping::preservation_report`] computes
//! all of these comparisons for a concrete set.

use crate::approx::ApproxSpace;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::universe::Universe;

/// How the image of a covering member must sit inside the target covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HomMode {
    /// Images of members must be members of the target covering.
    Strict,
    /// Images of members must be unions of target members.
    #[default]
    Definable,
}

/// A total function between two universes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    source: Universe,
    target: Universe,
    /// `table[i]` is the target index of source element `i`.
    table: Vec<usize>,
}

impl Mapping {
    /// Builds a mapping from (source label, target label) pairs.  Every
    /// source element must be assigned exactly once.
    pub fn from_pairs<I, S, T>(source: &Universe, target: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut table: Vec<Option<usize>> = vec![None; source.size()];
        for (from, to) in pairs {
            let i = source.index_of(from.as_ref())?;
            let j = target.index_of(to.as_ref())?;
            if table[i].replace(j).is_some() {
                return Err(Error::DuplicateName(from.as_ref().to_string()));
            }
        }
        let mut resolved = Vec::with_capacity(source.size());
        for (i, slot) in table.into_iter().enumerate() {
            match slot {
                Some(j) => resolved.push(j),
                None => return Err(Error::IncompleteMapping(source.names()[i].clone())),
            }
        }
        Ok(Mapping {
            source: source.clone(),
            target: target.clone(),
            table: resolved,
        })
    }

    /// Builds a mapping from a table of target indices, one per source
    /// element in index order.
    pub fn from_index_table(source: &Universe, target: &Universe, table: Vec<usize>) -> Result<Self> {
        if table.len() < source.size() {
            return Err(Error::IncompleteMapping(source.names()[table.len()].clone()));
        }
        if table.len() > source.size() {
            return Err(Error::IndexOutOfRange {
                index: table.len() - 1,
                len: source.size(),
            });
        }
        for &j in &table {
            if j >= target.size() {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    len: target.size(),
                });
            }
        }
        Ok(Mapping {
            source: source.clone(),
            target: target.clone(),
            table,
        })
    }

    /// The identity mapping on `universe`.
    pub fn identity(universe: &Universe) -> Self {
        Mapping {
            source: universe.clone(),
            target: universe.clone(),
            table: (0..universe.size()).collect(),
        }
    }

    /// Domain universe.
    pub fn source(&self) -> &Universe {
        &self.source
    }

    /// Codomain universe.
    pub fn target(&self) -> &Universe {
        &self.target
    }

    /// Image of the source element at `index`.
    pub fn apply_index(&self, index: usize) -> Result<usize> {
        self.table.get(index).copied().ok_or(Error::IndexOutOfRange {
            index,
            len: self.table.len(),
        })
    }

    /// Image of the source element named `label`.
    pub fn apply(&self, label: &str) -> Result<&str> {
        let i = self.source.index_of(label)?;
        Ok(&self.target.names()[self.table[i]])
    }

    /// The (label, label) pairs of the mapping, in source index order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.table
            .iter()
            .enumerate()
            .map(move |(i, &j)| (self.source.names()[i].as_str(), self.target.names()[j].as_str()))
    }

    /// True when the mapping is a bijection between the universes.
    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = 0u64;
        for &j in &self.table {
            if seen & (1 << j) != 0 {
                return false;
            }
            seen |= 1 << j;
        }
        true
    }

    /// The inverse mapping, when this one is a bijection.
    pub fn inverse(&self) -> Option<Mapping> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0usize; self.target.size()];
        for (i, &j) in self.table.iter().enumerate() {
            table[j] = i;
        }
        Some(Mapping {
            source: self.target.clone(),
            target: self.source.clone(),
            table,
        })
    }

    /// Composition `then ∘ self` (apply `self` first).
    pub fn compose(&self, then: &Mapping) -> Result<Mapping> {
        self.target.require_same(&then.source)?;
        Ok(Mapping {
            source: self.source.clone(),
            target: then.target.clone(),
            table: self.table.iter().map(|&j| then.table[j]).collect(),
        })
    }

    /// Forward image of a subset of the source universe.
    pub fn image(&self, x: &Subset) -> Result<Subset> {
        self.source.require_same(x.universe())?;
        let mut bits = 0u64;
        let mut rest = x.mask();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            bits |= 1u64 << self.table[i];
        }
        Ok(Subset::from_indices(
            &self.target,
            (0..self.target.size()).filter(|j| bits & (1 << j) != 0),
        )
        .expect("image indices are in range"))
    }

    /// Preimage of a subset of the target universe.
    pub fn preimage(&self, y: &Subset) -> Result<Subset> {
        self.target.require_same(y.universe())?;
        Subset::from_indices(
            &self.source,
            self.table
                .iter()
                .enumerate()
                .filter(|&(_, &j)| y.contains_index(j))
                .map(|(i, _)| i),
        )
    }

    fn check_spaces(&self, source: &ApproxSpace, target: &ApproxSpace) -> Result<()> {
        self.source.require_same(source.universe())?;
        self.target.require_same(target.universe())
    }

    /// Whether the image of `set` is recognizable in `covering` under `mode`.
    fn image_recognizable(&self, set: &Subset, covering: &Covering, mode: HomMode) -> Result<bool> {
        let image = self.image(set)?;
        Ok(match mode {
            HomMode::Strict => covering.contains(&image)?,
            // A set is a union of members iff it equals the union of all
            // members contained in it.
            HomMode::Definable => covering.lower_mask(image.mask()) == image.mask(),
        })
    }

    /// True when the image of every member of the source covering is
    /// recognizable in the target covering under `mode`.
    pub fn is_homomorphism(
        &self,
        source: &ApproxSpace,
        target: &ApproxSpace,
        mode: HomMode,
    ) -> Result<bool> {
        self.check_spaces(source, target)?;
        for member in source.covering().members() {
            if !self.image_recognizable(&member, target.covering(), mode)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when the mapping is bijective and both it and its inverse are
    /// homomorphisms under `mode`.
    pub fn is_isomorphism(
        &self,
        source: &ApproxSpace,
        target: &ApproxSpace,
        mode: HomMode,
    ) -> Result<bool> {
        self.check_spaces(source, target)?;
        let Some(inverse) = self.inverse() else {
            return Ok(false);
        };
        Ok(self.is_homomorphism(source, target, mode)?
            && inverse.is_homomorphism(target, source, mode)?)
    }

    /// Compares the transport of approximations along the mapping for one
    /// concrete set.  Requires the mapping to be a homomorphism in the
    /// definable sense.
    pub fn preservation_report(
        &self,
        source: &ApproxSpace,
        target: &ApproxSpace,
        x: &Subset,
    ) -> Result<PreservationReport> {
        self.check_spaces(source, target)?;
        source.universe().require_same(x.universe())?;
        if !self.is_homomorphism(source, target, HomMode::Definable)? {
            return Err(Error::NotAHomomorphism);
        }
        let f_lower_x = self.image(&source.lower(x)?)?;
        let lower_f_x = target.lower(&self.image(x)?)?;
        let f_upper_x = self.image(&source.upper_neigh(x)?)?;
        let upper_f_x = target.upper_neigh(&self.image(x)?)?;
        let is_isomorphism = self.is_isomorphism(source, target, HomMode::Definable)?;
        let neighborhood_transport = if is_isomorphism {
            let mut all = true;
            for i in 0..self.source.size() {
                let transported = self.image(&source.neighborhood_at(i)?)?;
                let direct = target.neighborhood_at(self.table[i])?;
                if transported != direct {
                    all = false;
                    break;
                }
            }
            Some(all)
        } else {
            None
        };
        Ok(PreservationReport {
            lower_inclusion_holds: f_lower_x.is_subset_of(&lower_f_x)?,
            lower_equal: f_lower_x == lower_f_x,
            upper_equal: f_upper_x == upper_f_x,
            f_lower_x,
            lower_f_x,
            f_upper_x,
            upper_f_x,
            is_isomorphism,
            neighborhood_transport,
        })
    }
}

/// How a mapping transports the approximations of one concrete set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    /// Image of the source-side lower approximation.
    pub f_lower_x: Subset,
    /// Target-side lower approximation of the image.
    pub lower_f_x: Subset,
    /// Image of the source-side upper approximation.
    pub f_upper_x: Subset,
    /// Target-side upper approximation of the image.
    pub upper_f_x: Subset,
    /// `f(lower(X)) ⊆ lower(f(X))` — guaranteed for homomorphisms.
    pub lower_inclusion_holds: bool,
    /// `f(lower(X)) = lower(f(X))`.
    pub lower_equal: bool,
    /// `f(upper(X)) = upper(f(X))`.
    pub upper_equal: bool,
    /// Whether the mapping is a two-way definable homomorphism.
    pub is_isomorphism: bool,
    /// For isomorphisms: whether every neighborhood maps onto the
    /// neighborhood of the image point.  `None` otherwise.
    pub neighborhood_transport: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sub(u: &Universe, labels: &[&str]) -> Subset {
        Subset::from_labels(u, labels).unwrap()
    }

    #[test]
    fn image_and_preimage_of_the_collapsing_map() {
        let (src, dst, f) = fixtures::collapsing_map();
        let x = sub(src.universe(), &["x2", "x4"]);
        assert_eq!(f.image(&x).unwrap(), sub(dst.universe(), &["y2", "y3"]));
        assert_eq!(
            f.preimage(&sub(dst.universe(), &["y1"])).unwrap(),
            sub(src.universe(), &["x1", "x3"])
        );
        assert_eq!(
            f.preimage(&Subset::full(dst.universe())).unwrap(),
            Subset::full(src.universe())
        );
        assert!(f.image(&Subset::empty(src.universe())).unwrap().is_empty());
        assert!(f.preimage(&Subset::empty(dst.universe())).unwrap().is_empty());
    }

    #[test]
    fn identity_maps_sets_to_themselves() {
        let s = fixtures::pairs_space();
        let f = Mapping::identity(s.universe());
        let x = sub(s.universe(), &["a", "d"]);
        assert_eq!(f.image(&x).unwrap(), x);
        assert_eq!(f.preimage(&x).unwrap(), x);
        assert!(f.is_bijective());
    }

    #[test]
    fn mapping_construction_validates_totality() {
        let u = Universe::new(["x1", "x2"]).unwrap();
        let v = Universe::new(["y1"]).unwrap();
        assert_eq!(
            Mapping::from_pairs(&u, &v, [("x1", "y1")]).unwrap_err(),
            Error::IncompleteMapping("x2".into())
        );
        assert_eq!(
            Mapping::from_pairs(&u, &v, [("x1", "y1"), ("x1", "y1"), ("x2", "y1")]).unwrap_err(),
            Error::DuplicateName("x1".into())
        );
        assert_eq!(
            Mapping::from_pairs(&u, &v, [("x9", "y1")]).unwrap_err(),
            Error::UnknownLabel("x9".into())
        );
        assert_eq!(
            Mapping::from_pairs(&u, &v, [("x1", "y9")]).unwrap_err(),
            Error::UnknownLabel("y9".into())
        );
    }

    #[test]
    fn collapsing_map_is_definable_but_not_strict() {
        let (src, dst, f) = fixtures::collapsing_map();
        assert!(f.is_homomorphism(&src, &dst, HomMode::Definable).unwrap());
        // {x4,x5} lands on {y3,y4}, which is a union of members but not a
        // member itself.
        assert!(!f.is_homomorphism(&src, &dst, HomMode::Strict).unwrap());
        assert!(!f.is_isomorphism(&src, &dst, HomMode::Definable).unwrap());
    }

    #[test]
    fn strict_homomorphisms_are_definable_ones() {
        let (src, dst, f) = fixtures::collapsing_map();
        // Surjective images of members always give a strict homomorphism
        // onto the image family.
        let image_family = Covering::from_subsets(
            dst.universe(),
            src.covering().members().map(|m| f.image(&m).unwrap()),
        )
        .unwrap();
        let img_space = ApproxSpace::new(image_family);
        assert!(f.is_homomorphism(&src, &img_space, HomMode::Strict).unwrap());
        assert!(f.is_homomorphism(&src, &img_space, HomMode::Definable).unwrap());
    }

    #[test]
    fn identity_is_an_isomorphism_onto_the_reduct() {
        let c = fixtures::nested_covering();
        let s = ApproxSpace::new(c.clone());
        let r = ApproxSpace::new(c.reduct());
        let id = Mapping::identity(s.universe());
        assert!(id.is_homomorphism(&s, &r, HomMode::Definable).unwrap());
        assert!(id.is_homomorphism(&r, &s, HomMode::Definable).unwrap());
        assert!(id.is_isomorphism(&s, &r, HomMode::Definable).unwrap());
    }

    #[test]
    fn identity_into_the_neighborhood_family_is_one_way() {
        let s = fixtures::triangle_space();
        let n = ApproxSpace::new(s.covering().nei());
        let id = Mapping::identity(s.universe());
        // Every member is a union of neighborhoods …
        assert!(id.is_homomorphism(&s, &n, HomMode::Definable).unwrap());
        // … but a singleton neighborhood is not a union of two-point members.
        assert!(!id.is_homomorphism(&n, &s, HomMode::Definable).unwrap());
    }

    #[test]
    fn identity_from_the_int_family_is_strict_but_not_reversible() {
        let c = fixtures::nested_covering();
        let s = ApproxSpace::new(c.clone());
        let i = ApproxSpace::new(c.int());
        let id = Mapping::identity(s.universe());
        assert!(id.is_homomorphism(&i, &s, HomMode::Strict).unwrap());
        // {x1} is not a union of the surviving three-point members.
        assert!(!id.is_homomorphism(&s, &i, HomMode::Definable).unwrap());
    }

    #[test]
    fn preservation_report_on_the_collapsing_map() {
        let (src, dst, f) = fixtures::collapsing_map();
        let x = sub(src.universe(), &["x2", "x4"]);
        let report = f.preservation_report(&src, &dst, &x).unwrap();
        assert_eq!(report.f_upper_x, sub(dst.universe(), &["y2", "y3", "y4"]));
        assert_eq!(report.upper_f_x, sub(dst.universe(), &["y1", "y2", "y3"]));
        assert!(!report.upper_equal);
        // Neither upper transport contains the other.
        assert!(!report.f_upper_x.is_subset_of(&report.upper_f_x).unwrap());
        assert!(!report.upper_f_x.is_subset_of(&report.f_upper_x).unwrap());
        assert!(report.lower_inclusion_holds);
        assert_eq!(report.f_lower_x, Subset::empty(dst.universe()));
        assert_eq!(report.lower_f_x, sub(dst.universe(), &["y3"]));
        assert!(!report.lower_equal);
        assert!(!report.is_isomorphism);
        assert_eq!(report.neighborhood_transport, None);
    }

    #[test]
    fn preservation_report_rejects_non_homomorphisms() {
        let (src, dst, _) = fixtures::collapsing_map();
        // Send everything to y1: member images are {y1}, not definable in
        // the target covering ({y1,y2} is the smallest member around y1).
        let f = Mapping::from_index_table(src.universe(), dst.universe(), vec![0; 5]).unwrap();
        let x = sub(src.universe(), &["x1"]);
        assert_eq!(
            f.preservation_report(&src, &dst, &x).unwrap_err(),
            Error::NotAHomomorphism
        );
    }

    #[test]
    fn permutation_transport_is_exact() {
        let s = fixtures::pairs_space();
        // Rotate a→b→c→d→a.
        let f = Mapping::from_pairs(
            s.universe(),
            s.universe(),
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let rotated = Covering::from_subsets(
            s.universe(),
            s.covering().members().map(|m| f.image(&m).unwrap()),
        )
        .unwrap();
        let t = ApproxSpace::new(rotated);
        assert!(f.is_isomorphism(&s, &t, HomMode::Strict).unwrap());
        for xm in 0..16u64 {
            let x = Subset::from_indices(s.universe(), (0..4).filter(|i| xm & (1 << i) != 0))
                .unwrap();
            let report = f.preservation_report(&s, &t, &x).unwrap();
            assert!(report.lower_equal, "lower transport failed for {x}");
            assert!(report.upper_equal, "upper transport failed for {x}");
            assert_eq!(report.neighborhood_transport, Some(true));
        }
    }

    #[test]
    fn composition_of_homomorphisms_is_a_homomorphism() {
        let c = fixtures::nested_covering();
        let s = ApproxSpace::new(c.clone());
        let r = ApproxSpace::new(c.reduct());
        let rr = ApproxSpace::new(c.reduct().reduct());
        let id = Mapping::identity(s.universe());
        let composed = id.compose(&id).unwrap();
        assert!(id.is_homomorphism(&s, &r, HomMode::Definable).unwrap());
        assert!(id.is_homomorphism(&r, &rr, HomMode::Definable).unwrap());
        assert!(composed.is_homomorphism(&s, &rr, HomMode::Definable).unwrap());
    }

    #[test]
    fn inverse_round_trips() {
        let (src, _, f) = fixtures::collapsing_map();
        assert!(f.inverse().is_none());
        let id = Mapping::identity(src.universe());
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let (src, dst, f) = fixtures::collapsing_map();
        assert_eq!(
            f.is_homomorphism(&dst, &src, HomMode::Definable).unwrap_err(),
            Error::UniverseMismatch
        );
        let y = sub(dst.universe(), &["y1"]);
        assert_eq!(f.image(&y).unwrap_err(), Error::UniverseMismatch);
        let x = sub(src.universe(), &["x1"]);
        assert_eq!(f.preimage(&x).unwrap_err(), Error::UniverseMismatch);
    }
}
