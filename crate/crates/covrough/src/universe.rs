//! Finite universes of named elements.
//!
//! A [`Universe`] fixes the ground set every other object is built over: it
//! owns an ordered list of distinct, nonempty element names.  The position of
//! a name in that list is the element's index, and indices are what the
//! bit-level subset representation works with.  Universes are immutable and
//! cheap to clone (the name table is shared).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest universe the single-word subset representation supports.
pub const MAX_UNIVERSE_SIZE: usize = 64;

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An immutable, ordered ground set of named elements.
///
/// Two universes compare equal when they carry the same names in the same
/// order, regardless of how they were constructed.
#[derive(Debug, Clone)]
pub struct Universe {
    inner: Arc<Inner>,
}

impl Universe {
    /// Builds a universe from element names, keeping the given order.
    ///
    /// Fails on an empty list, an empty name, a repeated name, or more than
    /// [`MAX_UNIVERSE_SIZE`] elements.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if names.len() > MAX_UNIVERSE_SIZE {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                max: MAX_UNIVERSE_SIZE,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Universe {
            inner: Arc::new(Inner { names, index }),
        })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    /// Element names in index order.
    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// The name at `index`.
    pub fn name(&self, index: usize) -> Result<&str> {
        self.inner
            .names
            .get(index)
            .map(String::as_str)
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.size(),
            })
    }

    /// The index carrying `label`.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Bit mask with one bit set per element.
    pub(crate) fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    /// Fast sameness test: shared allocation, or equal name tables.
    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }

    /// Error unless `other` is the same universe.
    pub(crate) fn require_same(&self, other: &Universe) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_names_give_size_four() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        assert_eq!(u.size(), 4);
        assert_eq!(u.names(), ["a", "b", "c", "d"]);
        assert_eq!(u.index_of("c").unwrap(), 2);
        assert_eq!(u.name(3).unwrap(), "d");
    }

    #[test]
    fn singleton_universe_is_allowed() {
        let u = Universe::new(["a"]).unwrap();
        assert_eq!(u.size(), 1);
        assert_eq!(u.full_mask(), 0b1);
    }

    #[test]
    fn duplicate_name_is_rejected() {
        assert_eq!(
            Universe::new(["x", "x"]).unwrap_err(),
            Error::DuplicateName("x".into())
        );
    }

    #[test]
    fn empty_list_and_empty_name_are_rejected() {
        assert_eq!(Universe::new(Vec::<String>::new()).unwrap_err(), Error::EmptyUniverse);
        assert_eq!(Universe::new(["a", ""]).unwrap_err(), Error::EmptyName);
    }

    #[test]
    fn sixty_four_elements_fit_and_sixty_five_do_not() {
        let names: Vec<String> = (0..64).map(|i| format!("e{i}")).collect();
        let u = Universe::new(names).unwrap();
        assert_eq!(u.size(), 64);
        assert_eq!(u.full_mask(), u64::MAX);

        let names: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert_eq!(
            Universe::new(names).unwrap_err(),
            Error::UniverseTooLarge { size: 65, max: 64 }
        );
    }

    #[test]
    fn equality_is_by_content() {
        let u1 = Universe::new(["a", "b"]).unwrap();
        let u2 = Universe::new(["a", "b"]).unwrap();
        let u3 = Universe::new(["b", "a"]).unwrap();
        assert_eq!(u1, u2);
        assert_ne!(u1, u3);
        assert!(u1.require_same(&u2).is_ok());
        assert_eq!(u1.require_same(&u3).unwrap_err(), Error::UniverseMismatch);
    }

    #[test]
    fn unknown_label_is_reported_with_its_text() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(u.index_of("z").unwrap_err(), Error::UnknownLabel("z".into()));
    }
}
