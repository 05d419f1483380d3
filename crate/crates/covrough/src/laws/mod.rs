//! The executable law suite.
//!
//! Every algebraic fact the library relies on is encoded as a named,
//! runnable law.  A law sweeps a *scope* — exhaustively over all coverings
//! of small universes, plus seeded random samples on larger ones — and
//! produces a [`LawReport`] with a deterministic outcome:
//!
//! * `pass` — no violation anywhere in the scope;
//! * `fail` — a violation was found, carried as a replayable [`Witness`];
//! * `expected-failure-found` — for laws that assert the *existence* of a
//!   counterexample (strictness of an inclusion, failure of a converse),
//!   the witness was found as required.  For these laws, *not* finding the
//!   witness is what fails.
//!
//! Reports are pure functions of the [`ScopeSpec`]: the same scope yields
//! the same outcome, the same instance count, and the same witness, with
//! only the timing field varying between runs.

mod checks;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{MappingDoc, SpaceDoc};

/// Hard ceiling on `ScopeSpec::max_n` (exhaustive subset sweeps and the
/// sub-family cross-checks stop being desk-scale beyond this).
pub const MAX_SCOPE_N: usize = 8;

/// Identifier of one checkable law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(missing_docs)]
pub enum LawId {
    Thm1,
    Cor1,
    Prop1,
    Prop1ConverseFails,
    Cor2,
    Cor3,
    Cor4,
    Cor5,
    Lem1EqDef3,
    Lem2,
    Lem3,
    Lem4,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Prop2,
    Ex1,
    Ex2,
    Ex3,
    Ex4,
    Ex5,
    Ex6,
    Rmk2Strictness,
    Rmk3,
    Rmk4Strictness,
    Rmk5,
    CountA003465,
    Sandwich,
    Monotone,
    PartitionPawlak,
    Idempotence,
}

impl LawId {
    /// Every law, in catalog order.
    pub const ALL: [LawId; 34] = [
        LawId::Thm1,
        LawId::Cor1,
        LawId::Prop1,
        LawId::Prop1ConverseFails,
        LawId::Cor2,
        LawId::Cor3,
        LawId::Cor4,
        LawId::Cor5,
        LawId::Lem1EqDef3,
        LawId::Lem2,
        LawId::Lem3,
        LawId::Lem4,
        LawId::Thm2,
        LawId::Thm3,
        LawId::Thm4,
        LawId::Thm5,
        LawId::Thm6,
        LawId::Thm7,
        LawId::Prop2,
        LawId::Ex1,
        LawId::Ex2,
        LawId::Ex3,
        LawId::Ex4,
        LawId::Ex5,
        LawId::Ex6,
        LawId::Rmk2Strictness,
        LawId::Rmk3,
        LawId::Rmk4Strictness,
        LawId::Rmk5,
        LawId::CountA003465,
        LawId::Sandwich,
        LawId::Monotone,
        LawId::PartitionPawlak,
        LawId::Idempotence,
    ];

    /// The catalog name, as accepted by [`LawId::from_str`] and the CLI.
    pub fn name(self) -> &'static str {
        match self {
            LawId::Thm1 => "THM1",
            LawId::Cor1 => "COR1",
            LawId::Prop1 => "PROP1",
            LawId::Prop1ConverseFails => "PROP1_CONVERSE_FAILS",
            LawId::Cor2 => "COR2",
            LawId::Cor3 => "COR3",
            LawId::Cor4 => "COR4",
            LawId::Cor5 => "COR5",
            LawId::Lem1EqDef3 => "LEM1_EQ_DEF3",
            LawId::Lem2 => "LEM2",
            LawId::Lem3 => "LEM3",
            LawId::Lem4 => "LEM4",
            LawId::Thm2 => "THM2",
            LawId::Thm3 => "THM3",
            LawId::Thm4 => "THM4",
            LawId::Thm5 => "THM5",
            LawId::Thm6 => "THM6",
            LawId::Thm7 => "THM7",
            LawId::Prop2 => "PROP2",
            LawId::Ex1 => "EX1",
            LawId::Ex2 => "EX2",
            LawId::Ex3 => "EX3",
            LawId::Ex4 => "EX4",
            LawId::Ex5 => "EX5",
            LawId::Ex6 => "EX6",
            LawId::Rmk2Strictness => "RMK2_STRICTNESS",
            LawId::Rmk3 => "RMK3",
            LawId::Rmk4Strictness => "RMK4_STRICTNESS",
            LawId::Rmk5 => "RMK5",
            LawId::CountA003465 => "COUNT_A003465",
            LawId::Sandwich => "SANDWICH",
            LawId::Monotone => "MONOTONE",
            LawId::PartitionPawlak => "PARTITION_PAWLAK",
            LawId::Idempotence => "IDEMPOTENCE",
        }
    }

    /// One-line statement of what the law checks.
    pub fn description(self) -> &'static str {
        match self {
            LawId::Thm1 => "the three upper-approximation routes (lower-plus-neighborhoods, union of neighborhoods, intersection of subcovering unions) agree",
            LawId::Cor1 => "excluding the full family from the subcovering intersection never changes the upper approximation, wherever a proper subcovering exists",
            LawId::Prop1 => "coverings with equal lower operators have equal upper operators",
            LawId::Prop1ConverseFails => "equal upper operators do NOT force equal lower operators: a witness pair exists",
            LawId::Cor2 => "if every member of two coverings has the same lower approximation under both, the two coverings approximate identically",
            LawId::Cor3 => "two coverings share the lower operator exactly when their reducts are equal",
            LawId::Cor4 => "adjoining all definable sets changes neither approximation operator nor the reduct",
            LawId::Cor5 => "a covering and its reduct approximate identically",
            LawId::Lem1EqDef3 => "the union-of-neighborhoods route equals the lower-plus-missing-neighborhoods route to the upper approximation",
            LawId::Lem2 => "dropping intersectional members preserves every neighborhood",
            LawId::Lem3 => "homomorphisms map lower approximations into lower approximations of the image",
            LawId::Lem4 => "isomorphisms transport each neighborhood onto the neighborhood of the image point",
            LawId::Thm2 => "dropping intersectional members shrinks (or keeps) lower approximations and preserves upper approximations",
            LawId::Thm3 => "if every member has the same upper approximation under two coverings, all upper approximations agree",
            LawId::Thm4 => "replacing a covering by its neighborhood family grows (or keeps) lower approximations and preserves upper approximations",
            LawId::Thm5 => "the join of two coverings has larger lower and smaller upper approximations than either operand",
            LawId::Thm6 => "the meet of two coverings has larger lower and smaller upper approximations than either operand",
            LawId::Thm7 => "isomorphisms commute with both approximation operators",
            LawId::Prop2 => "the meet of two coverings equals the neighborhood family of their join",
            LawId::Ex1 => "the worked pairs space has the recorded neighborhoods and approximations",
            LawId::Ex2 => "the worked pairs space has exactly three subcoverings of {a,d}, intersecting to {a,b,d}",
            LawId::Ex3 => "the two redundant-triple coverings both reduce to the six pairs",
            LawId::Ex4 => "the nested covering keeps exactly its four three-point members after intersection pruning",
            LawId::Ex5 => "the worked covering pair has the recorded join, meet, and approximations of {x2,x3}",
            LawId::Ex6 => "the identity is a two-way homomorphism onto the reduct, one-way onto the neighborhood family, and one-way from the intersection pruning",
            LawId::Rmk2Strictness => "a covering exists whose intersection pruning strictly shrinks some lower approximation",
            LawId::Rmk3 => "union pruning and intersection pruning do not commute, yet both orders leave the upper operator intact",
            LawId::Rmk4Strictness => "a covering exists whose neighborhood family strictly grows some lower approximation",
            LawId::Rmk5 => "a homomorphism exists where the image of the upper approximation and the upper approximation of the image are incomparable",
            LawId::CountA003465 => "the closed-form covering count matches 1, 5, 109, 32297, 2147321017, … and full enumeration confirms it",
            LawId::Sandwich => "lower approximation ⊆ set ⊆ upper approximation, always",
            LawId::Monotone => "both approximation operators are monotone with respect to inclusion",
            LawId::PartitionPawlak => "on partitions, both operators degenerate to the classical equivalence-class approximations",
            LawId::Idempotence => "union pruning, intersection pruning, and the neighborhood family operator are idempotent",
        }
    }

    /// True for laws that assert the existence of a counterexample; their
    /// passing outcome is `expected-failure-found`.
    pub fn expects_failure(self) -> bool {
        matches!(
            self,
            LawId::Prop1ConverseFails
                | LawId::Rmk2Strictness
                | LawId::Rmk3
                | LawId::Rmk4Strictness
                | LawId::Rmk5
        )
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

impl Serialize for LawId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for LawId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How far a law run sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScopeSpec {
    /// Cap on universe size.  Exhaustive parts run up to each law's own
    /// exhaustive bound (3 for pairwise laws, 4 otherwise); seeded sampling
    /// covers the sizes between that bound and `max_n`.
    pub max_n: usize,
    /// Number of seeded random draws per sampled universe size.
    pub seeds: u64,
    /// Number of random target sets probed per sampled instance.
    pub sample_sets: usize,
}

impl Default for ScopeSpec {
    fn default() -> Self {
        ScopeSpec {
            max_n: 6,
            seeds: 500,
            sample_sets: 10,
        }
    }
}

/// Deterministic outcome of a law run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// No violation found in the scope.
    Pass,
    /// A violation was found (or, for existence laws, the expected
    /// counterexample was missing).
    Fail,
    /// For existence laws: the expected counterexample was found.
    ExpectedFailureFound,
}

impl Outcome {
    /// Whether this outcome counts as a passing law.
    pub fn is_success(self) -> bool {
        matches!(self, Outcome::Pass | Outcome::ExpectedFailureFound)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ExpectedFailureFound => "expected-failure-found",
        })
    }
}

/// A self-contained instance that reproduces a law's outcome.
///
/// Witnesses serialize to JSON and can be replayed with [`replay`]: the
/// spaces, sets, and mapping carried here are everything the single-instance
/// check needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Witness {
    /// The spaces involved, in law-specific order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceDoc>,
    /// Target sets as label lists, in law-specific order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subsets: Vec<Vec<String>>,
    /// The mapping, for morphism laws.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mapping: Option<MappingDoc>,
    /// Human-readable explanation of what the instance shows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

mod duration_millis {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        if !ms.is_finite() || ms < 0.0 {
            return Err(serde::de::Error::custom("elapsed_ms must be nonnegative"));
        }
        Ok(Duration::from_secs_f64(ms / 1e3))
    }
}

/// The result of running one law over one scope.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawReport {
    /// Which law ran.
    pub law: LawId,
    /// Human-readable description of the swept scope.
    pub scope: String,
    /// Number of instance checks performed (deterministic per scope).
    pub instances_checked: u64,
    /// The verdict.
    pub outcome: Outcome,
    /// The replayable instance behind a `fail` or
    /// `expected-failure-found` outcome, or an annotation attached to a
    /// passing worked-instance law.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Wall-clock time of the run (the only nondeterministic field).
    #[serde(rename = "elapsed_ms", with = "duration_millis")]
    pub elapsed: Duration,
}

/// What a check function concluded.
pub(crate) enum Verdict {
    /// Universal law: no violation.
    Holds,
    /// Universal law: no violation, with an annotation worth surfacing.
    HoldsWithNote(Witness),
    /// Universal law: violated by this instance.
    Violated(Witness),
    /// Existence law: counterexample found, as required.
    Found(Witness),
    /// Existence law: no counterexample in scope.
    NotFound,
}

pub(crate) struct CheckOutput {
    pub instances: u64,
    pub verdict: Verdict,
    pub scope_desc: String,
}

fn validate_scope(scope: &ScopeSpec) -> Result<()> {
    if scope.max_n > MAX_SCOPE_N {
        return Err(Error::ScopeTooLarge {
            max_n: scope.max_n,
            limit: MAX_SCOPE_N,
        });
    }
    Ok(())
}

/// Runs one law over `scope`.
pub fn run_law(law: LawId, scope: &ScopeSpec) -> Result<LawReport> {
    validate_scope(scope)?;
    let start = Instant::now();
    let output = checks::run(law, scope);
    let (outcome, witness) = match output.verdict {
        Verdict::Holds => (Outcome::Pass, None),
        Verdict::HoldsWithNote(w) => (Outcome::Pass, Some(w)),
        Verdict::Violated(w) => (Outcome::Fail, Some(w)),
        Verdict::Found(w) => (Outcome::ExpectedFailureFound, Some(w)),
        Verdict::NotFound => (Outcome::Fail, None),
    };
    Ok(LawReport {
        law,
        scope: output.scope_desc,
        instances_checked: output.instances,
        outcome,
        witness,
        elapsed: start.elapsed(),
    })
}

/// Runs the whole catalog over `scope`, one report per law in catalog
/// order.  Per-law errors become failing reports rather than aborting the
/// suite.
pub fn run_all(scope: &ScopeSpec) -> Vec<LawReport> {
    LawId::ALL
        .into_iter()
        .map(|law| {
            run_law(law, scope).unwrap_or_else(|e| LawReport {
                law,
                scope: "not run".to_string(),
                instances_checked: 0,
                outcome: Outcome::Fail,
                witness: Some(Witness {
                    note: Some(format!("law could not run: {e}")),
                    ..Witness::default()
                }),
                elapsed: Duration::ZERO,
            })
        })
        .collect()
}

/// Re-runs the single instance carried by `witness` under `law`.
///
/// Returns `true` when the instance still exhibits what the witness was
/// recorded for: the violation of a universal law, or the expected
/// counterexample of an existence law.
pub fn replay(law: LawId, witness: &Witness) -> Result<bool> {
    checks::replay(law, witness)
}
