//! Covering-based rough sets over finite universes.
//!
//! A *covering* generalizes a partition: a family of nonempty subsets whose
//! union is the universe, with overlaps allowed.  Around that one notion
//! this crate builds:
//!
//! * **Approximations** ([`ApproxSpace`]): the lower approximation of a set
//!   (union of the members inside it) and its upper approximation, computed
//!   by three independent routes that provably agree — the lower part plus
//!   the neighborhoods of the uncovered rest ([`ApproxSpace::upper_def3`]),
//!   the union of member-wise neighborhoods ([`ApproxSpace::upper_neigh`]),
//!   and the intersection of the unions of all subcoverings
//!   ([`ApproxSpace::upper_subcov`]).
//! * **Covering operators** (on [`Covering`]): pruning union-redundant
//!   members ([`Covering::reduct`]), pruning intersectional members
//!   ([`Covering::int`]), the neighborhood family ([`Covering::nei`]),
//!   join, meet, and the definable closure — together with finite
//!   certificates for operator equality ([`Covering::same_lower_operator`],
//!   [`Covering::same_upper_operator`]) and brute-force oracles to check
//!   them against ([`Covering::same_lower_by_subsets`],
//!   [`Covering::same_upper_by_subsets`]).
//! * **Morphisms** ([`Mapping`]): structure-preserving maps between spaces,
//!   in a strict and a definable flavor, with isomorphism detection and a
//!   per-set [`PreservationReport`].
//! * **Counting and enumeration** ([`count_coverings`],
//!   [`enumerate_coverings`], [`random_covering`]): exact closed-form
//!   counts (1, 5, 109, 32297, …), full enumeration on tiny universes, and
//!   seeded, platform-stable sampling.
//! * **An executable law suite** ([`laws`]): every algebraic fact above is
//!   a named, runnable law producing deterministic, replayable reports —
//!   including laws that assert the *existence* of counterexamples where
//!   inclusions are strict or converses fail.
//!
//! Universes are bounded at 64 elements so that subsets live in single
//! machine words; everything exponential (subcovering enumeration, full
//! covering enumeration, exhaustive operator comparison) is gated behind
//! explicit caps and returns typed errors beyond them.
//!
//! # Example
//!
//! ```
//! use covrough::{ApproxSpace, Covering, Subset, Universe};
//!
//! let u = Universe::new(["a", "b", "c", "d"])?;
//! let covering = Covering::from_labels(&u, [
//!     vec!["a", "b"],
//!     vec!["a", "c"],
//!     vec!["b", "d"],
//! ])?;
//! let space = ApproxSpace::new(covering);
//!
//! let x = Subset::from_labels(&u, ["a", "d"])?;
//! assert!(space.lower(&x)?.is_empty());
//!
//! let upper = space.upper_neigh(&x)?;
//! assert_eq!(upper, Subset::from_labels(&u, ["a", "b", "d"])?);
//! assert_eq!(space.upper_def3(&x)?, upper);
//! assert_eq!(space.upper_subcov(&x)?, upper);
//! # Ok::<(), covrough::Error>(())
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod approx;
pub mod covering;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod laws;
pub mod morphism;
pub mod ops;
pub mod subset;
pub mod universe;

pub use approx::{ApproxSpace, NeighborhoodTable, SubcoveringFamily, DEFAULT_SUBFAMILY_CAP};
pub use covering::Covering;
pub use enumeration::{
    count_coverings, enumerate_coverings, random_covering, CoveringStream, MAX_COUNT_N,
    MAX_ENUMERATION_N,
};
pub use error::{Error, Result};
pub use io::{MappingDoc, SpaceDoc};
pub use laws::{replay, run_all, run_law, LawId, LawReport, Outcome, ScopeSpec, Witness};
pub use morphism::{HomMode, Mapping, PreservationReport};
pub use subset::Subset;
pub use universe::{Universe, MAX_UNIVERSE_SIZE};
