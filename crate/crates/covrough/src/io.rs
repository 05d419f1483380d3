//! JSON documents for spaces and mappings.
//!
//! The on-disk format is deliberately small:
//!
//! ```json
//! {"universe": ["a", "b", "c", "d"],
//!  "covering": [["a", "b"], ["a", "c"], ["b", "d"]]}
//! ```
//!
//! for a space, and `{"map": {"x1": "y1", …}}` for a mapping, whose keys
//! must cover the source universe exactly.  Parsing a document is separate
//! from interpreting it: [`SpaceDoc::parse`] only consumes JSON, while
//! [`SpaceDoc::to_space`] applies the full semantic validation.  Emitted
//! documents are canonical — members deduplicated and sorted, labels in
//! universe order — so emit ∘ parse is the identity on canonical documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::approx::ApproxSpace;
use crate::covering::Covering;
use crate::error::Result;
use crate::morphism::Mapping;
use crate::universe::Universe;

/// The JSON form of a universe plus covering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    /// Element names, in index order.
    pub universe: Vec<String>,
    /// Covering members as lists of element labels.
    pub covering: Vec<Vec<String>>,
}

impl SpaceDoc {
    /// Reads a document from JSON text (syntax only; no semantic checks).
    pub fn parse(json: &str) -> serde_json::Result<SpaceDoc> {
        serde_json::from_str(json)
    }

    /// Validates the document and builds the approximation space.
    pub fn to_space(&self) -> Result<ApproxSpace> {
        Ok(ApproxSpace::new(self.to_covering()?))
    }

    /// Validates the document and builds the covering.
    pub fn to_covering(&self) -> Result<Covering> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        Covering::from_labels(&universe, self.covering.iter().map(|m| m.iter()))
    }

    /// The canonical document for a covering.
    pub fn from_covering(covering: &Covering) -> SpaceDoc {
        SpaceDoc {
            universe: covering.universe().names().to_vec(),
            covering: covering.members().map(|m| m.labels()).collect(),
        }
    }

    /// The canonical document for a space.
    pub fn from_space(space: &ApproxSpace) -> SpaceDoc {
        SpaceDoc::from_covering(space.covering())
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("space documents always serialize")
    }
}

/// The JSON form of a mapping between universes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingDoc {
    /// Source label → target label, one entry per source element.
    pub map: BTreeMap<String, String>,
}

impl MappingDoc {
    /// Reads a document from JSON text (syntax only; no semantic checks).
    pub fn parse(json: &str) -> serde_json::Result<MappingDoc> {
        serde_json::from_str(json)
    }

    /// Validates the document against the two universes.
    pub fn to_mapping(&self, source: &Universe, target: &Universe) -> Result<Mapping> {
        Mapping::from_pairs(source, target, self.map.iter())
    }

    /// The canonical document for a mapping.
    pub fn from_mapping(mapping: &Mapping) -> MappingDoc {
        MappingDoc {
            map: mapping
                .pairs()
                .map(|(s, t)| (s.to_string(), t.to_string()))
                .collect(),
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("mapping documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::subset::Subset;

    #[test]
    fn a_space_document_round_trips() {
        let text = r#"{"universe": ["a","b","c","d"],
                       "covering": [["a","b"],["a","c"],["b","d"]]}"#;
        let doc = SpaceDoc::parse(text).unwrap();
        let space = doc.to_space().unwrap();
        assert_eq!(space.universe().size(), 4);
        assert_eq!(space.covering().len(), 3);
        let emitted = SpaceDoc::from_space(&space);
        assert_eq!(SpaceDoc::parse(&emitted.to_json()).unwrap(), emitted);
    }

    #[test]
    fn emitted_documents_are_canonical() {
        // Members out of order and duplicated, labels shuffled.
        let text = r#"{"universe": ["a","b","c","d"],
                       "covering": [["d","b"],["b","a"],["a","b"],["c","a"]]}"#;
        let covering = SpaceDoc::parse(text).unwrap().to_covering().unwrap();
        let doc = SpaceDoc::from_covering(&covering);
        assert_eq!(
            doc.covering,
            vec![vec!["a", "b"], vec!["a", "c"], vec!["b", "d"]]
        );
        // Parsing what we emit yields the same covering again.
        let again = SpaceDoc::parse(&doc.to_json()).unwrap().to_covering().unwrap();
        assert_eq!(again, covering);
    }

    #[test]
    fn syntax_errors_are_distinct_from_semantic_errors() {
        assert!(SpaceDoc::parse("{\"universe\": [").is_err());
        assert!(SpaceDoc::parse(r#"{"universe": ["a"], "cov": []}"#).is_err());
        // Well-formed JSON, semantically invalid.
        let doc = SpaceDoc::parse(r#"{"universe": ["a","b"], "covering": [["a"]]}"#).unwrap();
        assert_eq!(doc.to_space().unwrap_err(), Error::NotACovering);
        let doc = SpaceDoc::parse(r#"{"universe": ["a","a"], "covering": [["a"]]}"#).unwrap();
        assert_eq!(doc.to_space().unwrap_err(), Error::DuplicateName("a".into()));
        let doc = SpaceDoc::parse(r#"{"universe": ["a"], "covering": [[]]}"#).unwrap();
        assert_eq!(doc.to_space().unwrap_err(), Error::EmptySet);
        let doc = SpaceDoc::parse(r#"{"universe": ["a"], "covering": [["z"]]}"#).unwrap();
        assert_eq!(doc.to_space().unwrap_err(), Error::UnknownLabel("z".into()));
    }

    #[test]
    fn mapping_documents_validate_against_both_universes() {
        let (src, dst, f) = fixtures::collapsing_map();
        let doc = MappingDoc::from_mapping(&f);
        let back = doc.to_mapping(src.universe(), dst.universe()).unwrap();
        assert_eq!(back, f);
        assert_eq!(
            back.image(&Subset::from_labels(src.universe(), ["x2", "x4"]).unwrap())
                .unwrap()
                .labels(),
            ["y2", "y3"]
        );

        let incomplete = MappingDoc::parse(r#"{"map": {"x1": "y1"}}"#).unwrap();
        assert!(matches!(
            incomplete
                .to_mapping(src.universe(), dst.universe())
                .unwrap_err(),
            Error::IncompleteMapping(_)
        ));
        let unknown = MappingDoc::parse(
            r#"{"map": {"x1":"y1","x2":"y2","x3":"y1","x4":"y3","x5":"y4","x6":"y4"}}"#,
        )
        .unwrap();
        assert_eq!(
            unknown
                .to_mapping(src.universe(), dst.universe())
                .unwrap_err(),
            Error::UnknownLabel("x6".into())
        );
    }
}
