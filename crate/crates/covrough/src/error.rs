//! Error taxonomy shared by every module of the crate.
//!
//! Constructors and operations never panic on bad input and never repair it
//! silently; each precondition violation maps to exactly one variant here.

use thiserror::Error;

/// Any failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A universe needs at least one element.
    #[error("universe must be nonempty")]
    EmptyUniverse,

    /// Element names within a universe must be pairwise distinct.
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),

    /// Element names must be nonempty strings.
    #[error("element names must be nonempty")]
    EmptyName,

    /// Universes are bounded by the bit width of the subset representation.
    #[error("universe of size {size} exceeds the supported maximum of {max} elements")]
    UniverseTooLarge {
        /// The rejected universe size.
        size: usize,
        /// The supported maximum.
        max: usize,
    },

    /// Covering members must be nonempty sets.
    #[error("covering members must be nonempty")]
    EmptySet,

    /// The members of a covering must jointly exhaust the universe.
    #[error("member sets do not cover the universe")]
    NotACovering,

    /// A label that does not name any element of the universe.
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    /// Two operands were built over different universes.
    #[error("operands belong to different universes")]
    UniverseMismatch,

    /// A positional index past the end of the indexed collection.
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange {
        /// The out-of-range index.
        index: usize,
        /// The length of the indexed collection.
        len: usize,
    },

    /// Sub-family enumeration is exponential in the number of members and is
    /// refused beyond the given cap.
    #[error("covering has {size} members, above the sub-family enumeration cap of {cap}")]
    CoveringTooLarge {
        /// The rejected member count.
        size: usize,
        /// The enumeration cap in force.
        cap: usize,
    },

    /// The only sub-family covering the target is the whole covering itself.
    #[error("no proper subcovering covers the target set")]
    OnlyTrivialSubcovering,

    /// Closed-form covering counting is exact only on a fixed range.
    #[error("argument {n} outside the supported range {min}..={max}")]
    OutOfSupportedRange {
        /// The rejected argument.
        n: u32,
        /// Smallest supported value.
        min: u32,
        /// Largest supported value.
        max: u32,
    },

    /// Full enumeration of coverings is doubly exponential and is refused
    /// beyond a small universe.
    #[error("cannot enumerate coverings of a {size}-element universe (maximum {max})")]
    UniverseTooLargeForEnumeration {
        /// The rejected universe size.
        size: usize,
        /// The largest enumerable universe.
        max: usize,
    },

    /// The supplied mapping does not send covering members to definable sets
    /// of the target space.
    #[error("mapping is not a homomorphism between the given spaces")]
    NotAHomomorphism,

    /// A mapping document must assign an image to every source element.
    #[error("mapping assigns no image to element {0:?}")]
    IncompleteMapping(String),

    /// Law checks with exhaustive subset sweeps are refused on scopes whose
    /// universe bound makes them intractable.
    #[error("scope max_n {max_n} exceeds the supported limit {limit}")]
    ScopeTooLarge {
        /// The requested universe-size bound.
        max_n: usize,
        /// The largest supported bound.
        limit: usize,
    },

    /// A law identifier that is not part of the catalog.
    #[error("unknown law identifier {0:?}")]
    UnknownLaw(String),

    /// A witness payload lacking a piece its law needs for replay.
    #[error("witness is missing {0}")]
    MalformedWitness(String),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
