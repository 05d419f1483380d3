//! The per-law check routines behind [`run_law`](super::run_law).
//!
//! Sweeps are deterministic: exhaustive parts follow enumeration order and
//! every random draw is derived from the law's identity plus the draw
//! counter, so a report is a pure function of its scope.  Each routine
//! stops at the first violation (or, for existence laws, the first
//! counterexample) and packages it as a replayable witness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::approx::ApproxSpace;
use crate::covering::Covering;
use crate::enumeration::{
    count_coverings, enumerate_coverings, enumerate_partitions, random_covering, random_partition,
    MAX_ENUMERATION_N,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::io::{MappingDoc, SpaceDoc};
use crate::morphism::{HomMode, Mapping};
use crate::subset::Subset;
use crate::universe::Universe;

use super::{CheckOutput, LawId, ScopeSpec, Verdict, Witness};

/// Member density of sampled coverings.  At the largest supported scope
/// (`n = 8`) this keeps the member count at 15 or fewer, safely inside the
/// sub-family enumeration cap.
const SAMPLE_DENSITY: f64 = 0.4;

pub(super) fn run(law: LawId, scope: &ScopeSpec) -> CheckOutput {
    match law {
        LawId::Thm1 => thm1(scope),
        LawId::Cor1 => cor1(scope),
        LawId::Prop1 => prop1(scope),
        LawId::Prop1ConverseFails => prop1_converse_fails(scope),
        LawId::Cor2 => cor2(scope),
        LawId::Cor3 => cor3(scope),
        LawId::Cor4 => cor4(scope),
        LawId::Cor5 => cor5(scope),
        LawId::Lem1EqDef3 => lem1_eq_def3(scope),
        LawId::Lem2 => lem2(scope),
        LawId::Lem3 => lem3(scope),
        LawId::Lem4 => lem4(scope),
        LawId::Thm2 => thm2(scope),
        LawId::Thm3 => thm3(scope),
        LawId::Thm4 => thm4(scope),
        LawId::Thm5 => thm5(scope),
        LawId::Thm6 => thm6(scope),
        LawId::Thm7 => thm7(scope),
        LawId::Prop2 => prop2(scope),
        LawId::Ex1 => ex1(),
        LawId::Ex2 => ex2(),
        LawId::Ex3 => ex3(),
        LawId::Ex4 => ex4(),
        LawId::Ex5 => ex5(),
        LawId::Ex6 => ex6(),
        LawId::Rmk2Strictness => rmk2_strictness(),
        LawId::Rmk3 => rmk3(),
        LawId::Rmk4Strictness => rmk4_strictness(),
        LawId::Rmk5 => rmk5(),
        LawId::CountA003465 => count_a003465(scope),
        LawId::Sandwich => sandwich(scope),
        LawId::Monotone => monotone(scope),
        LawId::PartitionPawlak => partition_pawlak(scope),
        LawId::Idempotence => idempotence(scope),
    }
}

// ---------------------------------------------------------------------------
// Shared sweep plumbing.
// ---------------------------------------------------------------------------

/// Splitmix-style combiner turning a law identity and draw counters into one
/// independent seed per sampled object.
fn mix_seed(parts: &[u64]) -> u64 {
    let mut h: u64 = 0x9E37_79B9_7F4A_7C15;
    for &p in parts {
        h ^= p.wrapping_mul(0xBF58_476D_1CE4_E5B9).rotate_left(31);
        h = h
            .wrapping_mul(0x94D0_49BB_1331_11EB)
            .wrapping_add(0x2545_F491_4F6C_DD1D);
    }
    h
}

fn law_tag(law: LawId) -> u64 {
    LawId::ALL
        .iter()
        .position(|&l| l == law)
        .expect("every law appears in the catalog") as u64
}

fn exhaustive_sizes(scope: &ScopeSpec, cap: usize) -> std::ops::RangeInclusive<usize> {
    1..=cap.min(scope.max_n).min(MAX_ENUMERATION_N)
}

fn sampled_sizes(scope: &ScopeSpec, cap: usize) -> std::ops::RangeInclusive<usize> {
    (cap.min(scope.max_n).min(MAX_ENUMERATION_N) + 1)..=scope.max_n
}

fn all_coverings(n: usize) -> impl Iterator<Item = Covering> {
    enumerate_coverings(&fixtures::indexed_universe(n))
        .expect("exhaustive sweeps stay within the enumeration bound")
}

fn sampled_covering(law: LawId, n: usize, draw: u64, slot: u64) -> Covering {
    let u = fixtures::indexed_universe(n);
    random_covering(
        &u,
        mix_seed(&[law_tag(law), n as u64, draw, slot]),
        SAMPLE_DENSITY,
    )
}

fn set_rng(law: LawId, n: usize, draw: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(&[law_tag(law), n as u64, draw, 0xFACE]))
}

fn random_mask(rng: &mut ChaCha8Rng, universe: &Universe) -> u64 {
    rng.random_range(0..=universe.full_mask())
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        p.swap(i, j);
    }
    p
}

/// Upper approximation of a mask as the union of its elements'
/// neighborhoods, without building an `ApproxSpace`.
fn upper_mask(c: &Covering, xm: u64) -> u64 {
    let mut acc = 0u64;
    let mut rest = xm;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        acc |= c.neighborhood_mask_of_index(x);
    }
    acc
}

fn labels_of(universe: &Universe, mask: u64) -> Vec<String> {
    Subset::from_mask(universe, mask).labels()
}

fn wit(coverings: &[&Covering], subsets: Vec<Vec<String>>, note: impl Into<String>) -> Witness {
    Witness {
        spaces: coverings.iter().map(|c| SpaceDoc::from_covering(c)).collect(),
        subsets,
        mapping: None,
        note: Some(note.into()),
    }
}

fn universal(witness: Option<Witness>) -> Verdict {
    match witness {
        None => Verdict::Holds,
        Some(w) => Verdict::Violated(w),
    }
}

fn sets_scope(scope: &ScopeSpec, cap: usize) -> String {
    let e = *exhaustive_sizes(scope, cap).end();
    let mut s = format!("all coverings and all subsets at n ≤ {e}");
    let sampled = sampled_sizes(scope, cap);
    if !sampled.is_empty() {
        s.push_str(&format!(
            "; {} seeded coverings × {} random sets each at n = {}..={}",
            scope.seeds,
            scope.sample_sets,
            sampled.start(),
            sampled.end()
        ));
    }
    s
}

fn spaces_scope(scope: &ScopeSpec, cap: usize) -> String {
    let e = *exhaustive_sizes(scope, cap).end();
    let mut s = format!("all coverings at n ≤ {e}");
    let sampled = sampled_sizes(scope, cap);
    if !sampled.is_empty() {
        s.push_str(&format!(
            "; {} seeded coverings at n = {}..={}",
            scope.seeds,
            sampled.start(),
            sampled.end()
        ));
    }
    s
}

fn pairs_scope(scope: &ScopeSpec, cap: usize) -> String {
    let e = *exhaustive_sizes(scope, cap).end();
    let mut s = format!("all covering pairs at n ≤ {e}");
    let sampled = sampled_sizes(scope, cap);
    if !sampled.is_empty() {
        s.push_str(&format!(
            "; {} seeded pairs at n = {}..={}",
            scope.seeds,
            sampled.start(),
            sampled.end()
        ));
    }
    s
}

/// Sweeps every (covering, subset) instance: exhaustive up to `cap`, seeded
/// beyond.  `check` returns a witness on violation.
fn sweep_space_sets(
    law: LawId,
    scope: &ScopeSpec,
    cap: usize,
    mut check: impl FnMut(&ApproxSpace, u64) -> Option<Witness>,
) -> (u64, Option<Witness>) {
    let mut instances = 0u64;
    for n in exhaustive_sizes(scope, cap) {
        for c in all_coverings(n) {
            let space = ApproxSpace::new(c);
            for xm in 0..=space.universe().full_mask() {
                instances += 1;
                if let Some(w) = check(&space, xm) {
                    return (instances, Some(w));
                }
            }
        }
    }
    for n in sampled_sizes(scope, cap) {
        for draw in 0..scope.seeds {
            let space = ApproxSpace::new(sampled_covering(law, n, draw, 0));
            let mut rng = set_rng(law, n, draw);
            for _ in 0..scope.sample_sets {
                let xm = random_mask(&mut rng, space.universe());
                instances += 1;
                if let Some(w) = check(&space, xm) {
                    return (instances, Some(w));
                }
            }
        }
    }
    (instances, None)
}

/// Sweeps every covering (one instance per covering; the check may loop over
/// subsets internally).
fn sweep_spaces(
    law: LawId,
    scope: &ScopeSpec,
    cap: usize,
    mut check: impl FnMut(&Covering) -> Option<Witness>,
) -> (u64, Option<Witness>) {
    let mut instances = 0u64;
    for n in exhaustive_sizes(scope, cap) {
        for c in all_coverings(n) {
            instances += 1;
            if let Some(w) = check(&c) {
                return (instances, Some(w));
            }
        }
    }
    for n in sampled_sizes(scope, cap) {
        for draw in 0..scope.seeds {
            let c = sampled_covering(law, n, draw, 0);
            instances += 1;
            if let Some(w) = check(&c) {
                return (instances, Some(w));
            }
        }
    }
    (instances, None)
}

/// Sweeps covering pairs: the full square of the enumeration up to `cap`,
/// seeded independent pairs beyond.
fn sweep_pairs(
    law: LawId,
    scope: &ScopeSpec,
    cap: usize,
    mut check: impl FnMut(&Covering, &Covering) -> Option<Witness>,
) -> (u64, Option<Witness>) {
    let mut instances = 0u64;
    for n in exhaustive_sizes(scope, cap) {
        let all: Vec<Covering> = all_coverings(n).collect();
        for c1 in &all {
            for c2 in &all {
                instances += 1;
                if let Some(w) = check(c1, c2) {
                    return (instances, Some(w));
                }
            }
        }
    }
    for n in sampled_sizes(scope, cap) {
        for draw in 0..scope.seeds {
            let c1 = sampled_covering(law, n, draw, 1);
            let c2 = sampled_covering(law, n, draw, 2);
            instances += 1;
            if let Some(w) = check(&c1, &c2) {
                return (instances, Some(w));
            }
        }
    }
    (instances, None)
}

/// Accumulator for the fixed worked-instance laws: counts assertions and
/// remembers the first failure.
struct Fixed {
    instances: u64,
    first_bad: Option<String>,
}

impl Fixed {
    fn new() -> Self {
        Fixed {
            instances: 0,
            first_bad: None,
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        self.instances += 1;
        if ok || self.first_bad.is_some() {
            return;
        }
        self.first_bad = Some(what.to_string());
    }

    fn output(self, scope_desc: &str, witness_base: Witness) -> CheckOutput {
        let verdict = match self.first_bad {
            None => Verdict::Holds,
            Some(bad) => Verdict::Violated(Witness {
                note: Some(bad),
                ..witness_base
            }),
        };
        CheckOutput {
            instances: self.instances,
            verdict,
            scope_desc: scope_desc.to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// Route-agreement and sandwich laws (per covering × subset).
// ---------------------------------------------------------------------------

fn thm1(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_space_sets(LawId::Thm1, scope, 4, |space, xm| {
        let x = Subset::from_mask(space.universe(), xm);
        let by_def = space
            .upper_def3(&x)
            .expect("same universe by construction");
        let by_neigh = space
            .upper_neigh(&x)
            .expect("same universe by construction");
        let by_subcov = space
            .upper_subcov(&x)
            .expect("sampled coverings stay under the sub-family cap");
        if by_def == by_neigh && by_neigh == by_subcov {
            None
        } else {
            Some(wit(
                &[space.covering()],
                vec![x.labels()],
                format!(
                    "upper routes disagree on {x}: lower-plus-neighborhoods gives {by_def}, \
                     neighborhood union gives {by_neigh}, subcovering intersection gives {by_subcov}"
                ),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: sets_scope(scope, 4),
    }
}

fn cor1(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_space_sets(LawId::Cor1, scope, 4, |space, xm| {
        let x = Subset::from_mask(space.universe(), xm);
        match space.upper_subcov_nontrivial(&x) {
            Ok(proper) => {
                let all = space
                    .upper_subcov(&x)
                    .expect("sampled coverings stay under the sub-family cap");
                if proper == all {
                    None
                } else {
                    Some(wit(
                        &[space.covering()],
                        vec![x.labels()],
                        format!(
                            "dropping the trivial subcovering changes the upper approximation \
                             of {x}: {proper} instead of {all}"
                        ),
                    ))
                }
            }
            Err(Error::OnlyTrivialSubcovering) => None,
            Err(e) => unreachable!("sub-family enumeration stays under the cap: {e}"),
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: sets_scope(scope, 4),
    }
}

fn lem1_eq_def3(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_space_sets(LawId::Lem1EqDef3, scope, 4, |space, xm| {
        let x = Subset::from_mask(space.universe(), xm);
        let by_def = space
            .upper_def3(&x)
            .expect("same universe by construction");
        let by_neigh = space
            .upper_neigh(&x)
            .expect("same universe by construction");
        if by_def == by_neigh {
            None
        } else {
            Some(wit(
                &[space.covering()],
                vec![x.labels()],
                format!("{by_def} (lower plus neighborhoods) differs from {by_neigh} (neighborhood union) on {x}"),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: sets_scope(scope, 4),
    }
}

fn sandwich(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_space_sets(LawId::Sandwich, scope, 4, |space, xm| {
        let lower = space.covering().lower_mask(xm);
        let upper = upper_mask(space.covering(), xm);
        if lower & !xm == 0 && xm & !upper == 0 {
            None
        } else {
            let u = space.universe();
            Some(wit(
                &[space.covering()],
                vec![labels_of(u, xm)],
                format!(
                    "approximations do not sandwich the set: lower {}, set {}, upper {}",
                    Subset::from_mask(u, lower),
                    Subset::from_mask(u, xm),
                    Subset::from_mask(u, upper)
                ),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: sets_scope(scope, 4),
    }
}

// ---------------------------------------------------------------------------
// Single-covering operator laws.
// ---------------------------------------------------------------------------

fn cor4(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Cor4, scope, 3, |c| {
        let closure = c
            .definable_closure()
            .expect("swept coverings stay under the sub-family cap");
        let lower_kept = c
            .same_lower_by_subsets(&closure)
            .expect("sweeps stay within the oracle bound");
        let upper_kept = c
            .same_upper_by_subsets(&closure)
            .expect("sweeps stay within the oracle bound");
        let reduct_kept = c.reduct() == closure.reduct();
        if lower_kept && upper_kept && reduct_kept {
            None
        } else {
            Some(wit(
                &[c, &closure],
                vec![],
                format!(
                    "adjoining definable sets changed the space: lower kept {lower_kept}, \
                     upper kept {upper_kept}, reduct kept {reduct_kept}"
                ),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 3),
    }
}

fn cor5(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Cor5, scope, 4, |c| {
        let red = c.reduct();
        let lower_kept = c
            .same_lower_by_subsets(&red)
            .expect("sweeps stay within the oracle bound");
        let upper_kept = c
            .same_upper_by_subsets(&red)
            .expect("sweeps stay within the oracle bound");
        if lower_kept && upper_kept {
            None
        } else {
            Some(wit(
                &[c, &red],
                vec![],
                format!("the reduct approximates differently: lower kept {lower_kept}, upper kept {upper_kept}"),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 4),
    }
}

fn lem2(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Lem2, scope, 4, |c| {
        let pruned = c.int();
        for x in 0..c.universe().size() {
            if c.neighborhood_mask_of_index(x) != pruned.neighborhood_mask_of_index(x) {
                let name = c.universe().name(x).expect("index in range").to_string();
                return Some(wit(
                    &[c, &pruned],
                    vec![vec![name.clone()]],
                    format!("the neighborhood of {name} changed after dropping intersectional members"),
                ));
            }
        }
        None
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 4),
    }
}

fn thm2(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Thm2, scope, 4, |c| {
        let pruned = c.int();
        let full = c.universe().full_mask();
        for xm in 0..=full {
            let shrunk = pruned.lower_mask(xm);
            let original = c.lower_mask(xm);
            if shrunk & !original != 0 || upper_mask(c, xm) != upper_mask(&pruned, xm) {
                return Some(wit(
                    &[c, &pruned],
                    vec![labels_of(c.universe(), xm)],
                    "dropping intersectional members must shrink lower approximations \
                     and preserve upper approximations",
                ));
            }
        }
        None
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 4),
    }
}

fn thm4(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Thm4, scope, 4, |c| {
        let neigh = c.nei();
        let full = c.universe().full_mask();
        for xm in 0..=full {
            let original = c.lower_mask(xm);
            let grown = neigh.lower_mask(xm);
            if original & !grown != 0 || upper_mask(c, xm) != upper_mask(&neigh, xm) {
                return Some(wit(
                    &[c, &neigh],
                    vec![labels_of(c.universe(), xm)],
                    "the neighborhood family must grow lower approximations \
                     and preserve upper approximations",
                ));
            }
        }
        None
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 4),
    }
}

fn idempotence(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_spaces(LawId::Idempotence, scope, 4, |c| {
        let red = c.reduct();
        let pruned = c.int();
        let neigh = c.nei();
        let culprit = if red.reduct() != red {
            Some("union pruning")
        } else if pruned.int() != pruned {
            Some("intersection pruning")
        } else if neigh.nei() != neigh {
            Some("the neighborhood family operator")
        } else {
            None
        };
        culprit.map(|op| wit(&[c], vec![], format!("{op} is not idempotent here")))
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: spaces_scope(scope, 4),
    }
}

// ---------------------------------------------------------------------------
// Pairwise operator laws.
// ---------------------------------------------------------------------------

fn oracle(outcome: Result<bool>) -> bool {
    outcome.expect("pair sweeps stay within the oracle bound")
}

fn prop1(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Prop1, scope, 3, |c1, c2| {
        if oracle(c1.same_lower_by_subsets(c2)) && !oracle(c1.same_upper_by_subsets(c2)) {
            Some(wit(
                &[c1, c2],
                vec![],
                "equal lower operators but distinct upper operators",
            ))
        } else {
            None
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

fn prop1_converse_fails(scope: &ScopeSpec) -> CheckOutput {
    let bound = 3.min(scope.max_n);
    let scope_desc = format!("search over all covering pairs at n ≤ {bound}");
    let mut instances = 0u64;
    for n in 1..=bound {
        let all: Vec<Covering> = all_coverings(n).collect();
        for (i, c1) in all.iter().enumerate() {
            for c2 in all.iter().skip(i + 1) {
                instances += 1;
                if oracle(c1.same_upper_by_subsets(c2)) && !oracle(c1.same_lower_by_subsets(c2)) {
                    let full = c1.universe().full_mask();
                    let split = (0..=full)
                        .find(|&xm| c1.lower_mask(xm) != c2.lower_mask(xm))
                        .expect("distinct lower operators differ somewhere");
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Found(wit(
                            &[c1, c2],
                            vec![labels_of(c1.universe(), split)],
                            format!(
                                "equal upper operators, yet the lower approximations of {} differ",
                                Subset::from_mask(c1.universe(), split)
                            ),
                        )),
                        scope_desc,
                    };
                }
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::NotFound,
        scope_desc,
    }
}

fn cor2(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Cor2, scope, 3, |c1, c2| {
        let members_agree = c1
            .masks()
            .iter()
            .chain(c2.masks())
            .all(|&m| c1.lower_mask(m) == c2.lower_mask(m));
        if !members_agree {
            return None;
        }
        if oracle(c1.same_lower_by_subsets(c2)) && oracle(c1.same_upper_by_subsets(c2)) {
            None
        } else {
            Some(wit(
                &[c1, c2],
                vec![],
                "every member has equal lower approximations under both coverings, \
                 yet the operators differ",
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

fn cor3(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Cor3, scope, 3, |c1, c2| {
        let by_oracle = oracle(c1.same_lower_by_subsets(c2));
        let by_certificate = c1
            .same_lower_operator(c2)
            .expect("same universe by construction");
        if by_oracle == by_certificate {
            None
        } else {
            Some(wit(
                &[c1, c2],
                vec![],
                format!(
                    "subset-by-subset comparison says same-lower = {by_oracle}, \
                     but reduct equality says {by_certificate}"
                ),
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

fn thm3(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Thm3, scope, 3, |c1, c2| {
        let members_agree = c1
            .masks()
            .iter()
            .chain(c2.masks())
            .all(|&m| upper_mask(c1, m) == upper_mask(c2, m));
        if !members_agree {
            return None;
        }
        if oracle(c1.same_upper_by_subsets(c2)) {
            None
        } else {
            Some(wit(
                &[c1, c2],
                vec![],
                "every member has equal upper approximations under both coverings, \
                 yet the upper operators differ",
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

fn thm5(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Thm5, scope, 3, |c1, c2| {
        let join = c1.join(c2).expect("same universe by construction");
        pooled_family_bounds(c1, c2, &join, "join")
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

fn thm6(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Thm6, scope, 3, |c1, c2| {
        let meet = c1.meet(c2).expect("same universe by construction");
        pooled_family_bounds(c1, c2, &meet, "meet")
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

/// Shared conclusion of the join and meet bounding laws: `combined` must
/// have pointwise larger lower and smaller upper approximations than both
/// operands.
fn pooled_family_bounds(
    c1: &Covering,
    c2: &Covering,
    combined: &Covering,
    what: &str,
) -> Option<Witness> {
    let full = c1.universe().full_mask();
    for xm in 0..=full {
        let low = combined.lower_mask(xm);
        let up = upper_mask(combined, xm);
        let low_ok = c1.lower_mask(xm) & !low == 0 && c2.lower_mask(xm) & !low == 0;
        let up_ok = up & !upper_mask(c1, xm) == 0 && up & !upper_mask(c2, xm) == 0;
        if !(low_ok && up_ok) {
            return Some(wit(
                &[c1, c2, combined],
                vec![labels_of(c1.universe(), xm)],
                format!(
                    "the {what} must dominate both lower approximations and be dominated \
                     by both upper approximations"
                ),
            ));
        }
    }
    None
}

fn prop2(scope: &ScopeSpec) -> CheckOutput {
    let (instances, witness) = sweep_pairs(LawId::Prop2, scope, 3, |c1, c2| {
        let meet = c1.meet(c2).expect("same universe by construction");
        let via_join = c1
            .join(c2)
            .expect("same universe by construction")
            .nei();
        if meet == via_join {
            None
        } else {
            Some(wit(
                &[c1, c2],
                vec![],
                "pointwise neighborhood intersections differ from the neighborhood \
                 family of the pooled covering",
            ))
        }
    });
    CheckOutput {
        instances,
        verdict: universal(witness),
        scope_desc: pairs_scope(scope, 3),
    }
}

// ---------------------------------------------------------------------------
// Morphism laws.
// ---------------------------------------------------------------------------

fn three_point_targets() -> (Universe, Universe, Vec<Mapping>) {
    let xs = fixtures::indexed_universe(3);
    let ys = Universe::new(["y1", "y2", "y3"]).expect("valid names");
    let mut maps = Vec::with_capacity(27);
    for t0 in 0..3 {
        for t1 in 0..3 {
            for t2 in 0..3 {
                maps.push(
                    Mapping::from_index_table(&xs, &ys, vec![t0, t1, t2])
                        .expect("total tables over matching universes"),
                );
            }
        }
    }
    (xs, ys, maps)
}

fn lem3(scope: &ScopeSpec) -> CheckOutput {
    let (xs, ys, maps) = three_point_targets();
    let scope_desc = format!(
        "all {} maps between two 3-element universes × {} seeded covering pairs, every subset",
        maps.len(),
        scope.seeds
    );
    let mut instances = 0u64;
    for draw in 0..scope.seeds {
        let src = ApproxSpace::new(random_covering(
            &xs,
            mix_seed(&[law_tag(LawId::Lem3), draw, 1]),
            SAMPLE_DENSITY,
        ));
        let dst = ApproxSpace::new(random_covering(
            &ys,
            mix_seed(&[law_tag(LawId::Lem3), draw, 2]),
            SAMPLE_DENSITY,
        ));
        for f in &maps {
            instances += 1;
            if !f
                .is_homomorphism(&src, &dst, HomMode::Definable)
                .expect("universes match by construction")
            {
                continue;
            }
            for xm in 0..=xs.full_mask() {
                let x = Subset::from_mask(&xs, xm);
                let transported = f
                    .image(&src.lower(&x).expect("same universe"))
                    .expect("same universe");
                let direct = dst
                    .lower(&f.image(&x).expect("same universe"))
                    .expect("same universe");
                if !transported
                    .is_subset_of(&direct)
                    .expect("same universe")
                {
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Violated(Witness {
                            spaces: vec![
                                SpaceDoc::from_space(&src),
                                SpaceDoc::from_space(&dst),
                            ],
                            subsets: vec![x.labels()],
                            mapping: Some(MappingDoc::from_mapping(f)),
                            note: Some(format!(
                                "the image of the lower approximation, {transported}, escapes \
                                 the lower approximation of the image, {direct}"
                            )),
                        }),
                        scope_desc,
                    };
                }
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::Holds,
        scope_desc,
    }
}

/// Builds the `draw`-th seeded permutation isomorphism for `law`: a source
/// covering and its relabeled copy.  Universe sizes cycle over `1..=max_n`.
fn permuted_instance(law: LawId, scope: &ScopeSpec, draw: u64) -> (ApproxSpace, ApproxSpace, Mapping) {
    let n = 1 + (draw as usize % scope.max_n.max(1));
    let u = fixtures::indexed_universe(n);
    let c = random_covering(&u, mix_seed(&[law_tag(law), n as u64, draw, 1]), SAMPLE_DENSITY);
    let mut rng = set_rng(law, n, draw);
    let f = Mapping::from_index_table(&u, &u, random_permutation(n, &mut rng))
        .expect("a permutation is a total table");
    let relabeled = Covering::from_subsets(
        &u,
        c.members().map(|m| f.image(&m).expect("same universe")),
    )
    .expect("a permuted covering is a covering");
    (ApproxSpace::new(c), ApproxSpace::new(relabeled), f)
}

fn iso_witness(src: &ApproxSpace, dst: &ApproxSpace, f: &Mapping, note: String) -> Witness {
    Witness {
        spaces: vec![SpaceDoc::from_space(src), SpaceDoc::from_space(dst)],
        subsets: vec![],
        mapping: Some(MappingDoc::from_mapping(f)),
        note: Some(note),
    }
}

fn lem4(scope: &ScopeSpec) -> CheckOutput {
    let scope_desc = format!(
        "{} seeded permutation isomorphisms at n = 1..={}, every element",
        scope.seeds,
        scope.max_n.max(1)
    );
    let mut instances = 0u64;
    for draw in 0..scope.seeds {
        let (src, dst, f) = permuted_instance(LawId::Lem4, scope, draw);
        instances += 1;
        if !f
            .is_isomorphism(&src, &dst, HomMode::Definable)
            .expect("universes match by construction")
        {
            return CheckOutput {
                instances,
                verdict: Verdict::Violated(iso_witness(
                    &src,
                    &dst,
                    &f,
                    "a relabeling of a covering must be an isomorphism".to_string(),
                )),
                scope_desc,
            };
        }
        for x in 0..src.universe().size() {
            let transported = f
                .image(&src.neighborhood_at(x).expect("index in range"))
                .expect("same universe");
            let direct = dst
                .neighborhood_at(f.apply_index(x).expect("index in range"))
                .expect("index in range");
            if transported != direct {
                let name = src.universe().name(x).expect("index in range").to_string();
                return CheckOutput {
                    instances,
                    verdict: Verdict::Violated(Witness {
                        subsets: vec![vec![name.clone()]],
                        ..iso_witness(
                            &src,
                            &dst,
                            &f,
                            format!(
                                "the neighborhood of {name} does not transport onto the \
                                 neighborhood of its image"
                            ),
                        )
                    }),
                    scope_desc,
                };
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::Holds,
        scope_desc,
    }
}

fn thm7(scope: &ScopeSpec) -> CheckOutput {
    let scope_desc = format!(
        "{} seeded permutation isomorphisms at n = 1..={} × {} random sets each",
        scope.seeds,
        scope.max_n.max(1),
        scope.sample_sets
    );
    let mut instances = 0u64;
    for draw in 0..scope.seeds {
        let (src, dst, f) = permuted_instance(LawId::Thm7, scope, draw);
        let mut rng = set_rng(LawId::Thm7, src.universe().size() + 100, draw);
        for _ in 0..scope.sample_sets {
            let x = Subset::from_mask(src.universe(), random_mask(&mut rng, src.universe()));
            instances += 1;
            let report = match f.preservation_report(&src, &dst, &x) {
                Ok(report) => report,
                Err(e) => {
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Violated(iso_witness(
                            &src,
                            &dst,
                            &f,
                            format!("a relabeling must be a homomorphism, but: {e}"),
                        )),
                        scope_desc,
                    }
                }
            };
            if !(report.is_isomorphism && report.lower_equal && report.upper_equal) {
                return CheckOutput {
                    instances,
                    verdict: Verdict::Violated(Witness {
                        subsets: vec![x.labels()],
                        ..iso_witness(
                            &src,
                            &dst,
                            &f,
                            format!(
                                "an isomorphism must commute with both operators on {x}: \
                                 iso {}, lower equal {}, upper equal {}",
                                report.is_isomorphism, report.lower_equal, report.upper_equal
                            ),
                        )
                    }),
                    scope_desc,
                };
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::Holds,
        scope_desc,
    }
}

// ---------------------------------------------------------------------------
// Monotonicity and the partition degeneration.
// ---------------------------------------------------------------------------

fn monotone(scope: &ScopeSpec) -> CheckOutput {
    let law = LawId::Monotone;
    let cap = 3;
    let mut instances = 0u64;
    let bad = |c: &Covering, xm: u64, ym: u64| -> Option<Witness> {
        let lower_ok = c.lower_mask(xm) & !c.lower_mask(ym) == 0;
        let upper_ok = upper_mask(c, xm) & !upper_mask(c, ym) == 0;
        if lower_ok && upper_ok {
            None
        } else {
            Some(wit(
                &[c],
                vec![labels_of(c.universe(), xm), labels_of(c.universe(), ym)],
                "approximations must be monotone along set inclusion",
            ))
        }
    };
    for n in exhaustive_sizes(scope, cap) {
        for c in all_coverings(n) {
            instances += 1;
            let full = c.universe().full_mask();
            for xm in 0..=full {
                // Walk every superset of xm: xm | s for s ranging over the
                // subsets of the complement.
                let comp = full & !xm;
                let mut s = 0u64;
                loop {
                    if let Some(w) = bad(&c, xm, xm | s) {
                        return CheckOutput {
                            instances,
                            verdict: Verdict::Violated(w),
                            scope_desc: spaces_scope(scope, cap),
                        };
                    }
                    if s == comp {
                        break;
                    }
                    s = s.wrapping_sub(comp) & comp;
                }
            }
        }
    }
    for n in sampled_sizes(scope, cap) {
        for draw in 0..scope.seeds {
            let c = sampled_covering(law, n, draw, 0);
            let mut rng = set_rng(law, n, draw);
            instances += 1;
            for _ in 0..scope.sample_sets {
                let xm = random_mask(&mut rng, c.universe());
                let ym = xm | random_mask(&mut rng, c.universe());
                if let Some(w) = bad(&c, xm, ym) {
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Violated(w),
                        scope_desc: spaces_scope(scope, cap),
                    };
                }
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::Holds,
        scope_desc: spaces_scope(scope, cap),
    }
}

/// Classical equivalence-class approximations of a partition: the union of
/// blocks inside the set, and the union of blocks meeting it.  Computed
/// directly from the blocks, independent of the neighborhood machinery.
fn pawlak_masks(partition: &Covering, xm: u64) -> (u64, u64) {
    let mut lower = 0u64;
    let mut upper = 0u64;
    for &block in partition.masks() {
        if block & !xm == 0 {
            lower |= block;
        }
        if block & xm != 0 {
            upper |= block;
        }
    }
    (lower, upper)
}

fn partition_pawlak(scope: &ScopeSpec) -> CheckOutput {
    let law = LawId::PartitionPawlak;
    let cap = 4;
    let e = *exhaustive_sizes(scope, cap).end();
    let mut scope_desc = format!("all partitions and all subsets at n ≤ {e}");
    let sampled = sampled_sizes(scope, cap);
    if !sampled.is_empty() {
        scope_desc.push_str(&format!(
            "; {} seeded partitions × {} random sets each at n = {}..={}",
            scope.seeds,
            scope.sample_sets,
            sampled.start(),
            sampled.end()
        ));
    }
    let mut instances = 0u64;
    let bad = |space: &ApproxSpace, xm: u64| -> Option<Witness> {
        let c = space.covering();
        let (expect_lower, expect_upper) = pawlak_masks(c, xm);
        let x = Subset::from_mask(space.universe(), xm);
        let lower = space.lower(&x).expect("same universe");
        let by_def = space.upper_def3(&x).expect("same universe");
        let by_neigh = space.upper_neigh(&x).expect("same universe");
        if lower.mask() == expect_lower
            && by_def.mask() == expect_upper
            && by_neigh.mask() == expect_upper
        {
            None
        } else {
            Some(wit(
                &[c],
                vec![x.labels()],
                "on a partition both operators must equal the classical \
                 equivalence-class approximations",
            ))
        }
    };
    for n in 1..=e {
        for c in enumerate_partitions(&fixtures::indexed_universe(n)) {
            let space = ApproxSpace::new(c);
            for xm in 0..=space.universe().full_mask() {
                instances += 1;
                if let Some(w) = bad(&space, xm) {
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Violated(w),
                        scope_desc,
                    };
                }
            }
        }
    }
    for n in sampled_sizes(scope, cap) {
        for draw in 0..scope.seeds {
            let u = fixtures::indexed_universe(n);
            let space = ApproxSpace::new(random_partition(
                &u,
                mix_seed(&[law_tag(law), n as u64, draw]),
            ));
            let mut rng = set_rng(law, n, draw);
            for _ in 0..scope.sample_sets {
                let xm = random_mask(&mut rng, space.universe());
                instances += 1;
                if let Some(w) = bad(&space, xm) {
                    return CheckOutput {
                        instances,
                        verdict: Verdict::Violated(w),
                        scope_desc,
                    };
                }
            }
        }
    }
    CheckOutput {
        instances,
        verdict: Verdict::Holds,
        scope_desc,
    }
}

// ---------------------------------------------------------------------------
// Counting.
// ---------------------------------------------------------------------------

/// Numbers of coverings of universes of size 1..=6.
const COVERING_COUNTS: [u128; 6] = [1, 5, 109, 32297, 2147321017, 9223372023970362989];

fn count_a003465(scope: &ScopeSpec) -> CheckOutput {
    let enum_bound = scope.max_n.min(MAX_ENUMERATION_N);
    let scope_desc = format!(
        "closed form at n = 1..=6, cross-checked against full enumeration at n ≤ {enum_bound}"
    );
    let mut fixed = Fixed::new();
    for (i, &expected) in COVERING_COUNTS.iter().enumerate() {
        let n = (i + 1) as u32;
        let got = count_coverings(n).expect("1..=6 is the supported range");
        fixed.check(
            got == expected,
            &format!("closed form at n = {n} gives {got}, expected {expected}"),
        );
    }
    for n in 1..=enum_bound {
        let listed = all_coverings(n).count() as u128;
        let counted = count_coverings(n as u32).expect("within the supported range");
        fixed.check(
            listed == counted,
            &format!("enumeration lists {listed} coverings at n = {n}, the closed form says {counted}"),
        );
    }
    fixed.output(&scope_desc, Witness::default())
}

// ---------------------------------------------------------------------------
// Fixed worked instances.
// ---------------------------------------------------------------------------

fn sub(u: &Universe, labels: &[&str]) -> Subset {
    Subset::from_labels(u, labels).expect("fixture labels are valid")
}

fn ex1() -> CheckOutput {
    let space = fixtures::pairs_space();
    let u = space.universe().clone();
    let mut fixed = Fixed::new();
    for (name, expected) in [
        ("a", vec!["a"]),
        ("b", vec!["b"]),
        ("c", vec!["a", "c"]),
        ("d", vec!["b", "d"]),
    ] {
        let got = space.neighborhood(name).expect("known label");
        fixed.check(
            got == sub(&u, &expected),
            &format!("the neighborhood of {name} must be {}", sub(&u, &expected)),
        );
    }
    let x = sub(&u, &["a", "d"]);
    let lower = space.lower(&x).expect("same universe");
    fixed.check(lower.is_empty(), "the lower approximation of {a, d} must be empty");
    let expected_upper = sub(&u, &["a", "b", "d"]);
    for (route, got) in [
        ("lower-plus-neighborhoods", space.upper_def3(&x)),
        ("neighborhood union", space.upper_neigh(&x)),
        ("subcovering intersection", space.upper_subcov(&x)),
    ] {
        let got = got.expect("well within all caps");
        fixed.check(
            got == expected_upper,
            &format!("the {route} upper approximation of {x} must be {expected_upper}, got {got}"),
        );
    }
    fixed.output(
        "one worked four-point space",
        wit(&[space.covering()], vec![x.labels()], ""),
    )
}

fn ex2() -> CheckOutput {
    let space = fixtures::pairs_space();
    let u = space.universe().clone();
    let x = sub(&u, &["a", "d"]);
    let mut fixed = Fixed::new();
    let family = space
        .subcoverings(&x, 20)
        .expect("three members is far under the cap");
    fixed.check(
        family.family_masks() == [0b101, 0b110, 0b111],
        "exactly three sub-families must cover {a, d}: members {0,2}, {1,2}, and all three",
    );
    let proper = space
        .upper_subcov_nontrivial(&x)
        .expect("a proper subcovering exists");
    let all = space.upper_subcov(&x).expect("within the cap");
    let expected = sub(&u, &["a", "b", "d"]);
    fixed.check(
        all == expected,
        &format!("the subcovering-intersection upper approximation must be {expected}"),
    );
    fixed.check(
        proper == expected,
        "dropping the trivial sub-family must not change the intersection",
    );
    fixed.output(
        "one worked four-point space",
        wit(&[space.covering()], vec![x.labels()], ""),
    )
}

fn ex3() -> CheckOutput {
    let (left, right) = fixtures::redundant_triples();
    let u = left.universe().clone();
    let six_pairs = Covering::from_labels(
        &u,
        [
            ["x1", "x2"],
            ["x1", "x3"],
            ["x1", "x4"],
            ["x2", "x3"],
            ["x2", "x4"],
            ["x3", "x4"],
        ],
    )
    .expect("valid covering");
    let mut fixed = Fixed::new();
    fixed.check(
        left.reduct() == six_pairs,
        "pruning union-redundant members of the first covering must leave the six pairs",
    );
    fixed.check(
        right.reduct() == six_pairs,
        "pruning union-redundant members of the second covering must leave the six pairs",
    );
    fixed.check(
        left.same_lower_operator(&right).expect("same universe"),
        "equal reducts must certify the shared lower operator",
    );
    fixed.check(
        left.same_lower_by_subsets(&right).expect("small universe"),
        "the subset-by-subset oracle must agree that the lower operators coincide",
    );
    fixed.output(
        "one worked pair of coverings over four points",
        wit(&[&left, &right], vec![], ""),
    )
}

fn ex4() -> CheckOutput {
    let c = fixtures::nested_covering();
    let u = c.universe().clone();
    let triples = Covering::from_labels(
        &u,
        [
            ["x1", "x2", "x3"],
            ["x1", "x2", "x4"],
            ["x1", "x3", "x4"],
            ["x2", "x3", "x4"],
        ],
    )
    .expect("valid covering");
    let mut fixed = Fixed::new();
    fixed.check(
        c.int() == triples,
        "dropping intersectional members must leave exactly the four triples",
    );
    fixed.check(
        c.same_upper_by_subsets(&triples).expect("small universe"),
        "the pruned covering must keep the upper operator",
    );
    fixed.check(
        (0..u.size()).all(|x| {
            c.neighborhood_mask_of_index(x) == triples.neighborhood_mask_of_index(x)
        }),
        "every neighborhood must survive the pruning",
    );
    fixed.output(
        "one worked eight-member covering over four points",
        wit(&[&c], vec![], ""),
    )
}

fn ex5() -> CheckOutput {
    let (c1, c2) = fixtures::join_meet_coverings();
    let u = c1.universe().clone();
    let mut fixed = Fixed::new();
    let join = c1.join(&c2).expect("same universe");
    let meet = c1.meet(&c2).expect("same universe");
    let expected_join = Covering::from_labels(
        &u,
        vec![
            vec!["x1", "x2"],
            vec!["x2", "x4"],
            vec!["x2", "x3", "x4"],
            vec!["x1", "x2", "x3"],
        ],
    )
    .expect("valid covering");
    let expected_meet = Covering::from_labels(
        &u,
        vec![
            vec!["x2"],
            vec!["x1", "x2"],
            vec!["x2", "x3"],
            vec!["x2", "x4"],
        ],
    )
    .expect("valid covering");
    fixed.check(join == expected_join, "the join must pool the two families");
    fixed.check(
        meet == expected_meet,
        "the meet must consist of the four pooled neighborhoods, including the singleton {x2}",
    );

    let x = sub(&u, &["x2", "x3"]);
    let spaces = [
        ("first covering", ApproxSpace::new(c1.clone())),
        ("second covering", ApproxSpace::new(c2.clone())),
        ("join", ApproxSpace::new(join.clone())),
        ("meet", ApproxSpace::new(meet.clone())),
    ];
    let expected_lower = [
        Subset::empty(&u),
        Subset::empty(&u),
        Subset::empty(&u),
        sub(&u, &["x2", "x3"]),
    ];
    let expected_upper = [
        sub(&u, &["x2", "x3", "x4"]),
        sub(&u, &["x2", "x3"]),
        sub(&u, &["x2", "x3"]),
        sub(&u, &["x2", "x3"]),
    ];
    for ((name, space), (lo, up)) in spaces
        .iter()
        .zip(expected_lower.iter().zip(expected_upper.iter()))
    {
        let got_lower = space.lower(&x).expect("same universe");
        let got_upper = space.upper_def3(&x).expect("same universe");
        fixed.check(
            got_lower == *lo,
            &format!("the lower approximation of {x} under the {name} must be {lo}, got {got_lower}"),
        );
        fixed.check(
            got_upper == *up,
            &format!("the upper approximation of {x} under the {name} must be {up}, got {got_upper}"),
        );
    }
    let scope_desc = "one worked pair of coverings over four points";
    let base = wit(&[&c1, &c2], vec![x.labels()], "");
    match fixed.first_bad {
        Some(bad) => CheckOutput {
            instances: fixed.instances,
            verdict: Verdict::Violated(Witness {
                note: Some(bad),
                ..base
            }),
            scope_desc: scope_desc.to_string(),
        },
        // The meet is taken literally: every pointwise neighborhood
        // intersection is a member, so the singleton {x2} appears alongside
        // the three pairs.  Annotate the passing report with the exact
        // family, since the abbreviated form without the singleton is a
        // frequent transcription slip.
        None => CheckOutput {
            instances: fixed.instances,
            verdict: Verdict::HoldsWithNote(Witness {
                note: Some(
                    "the meet is computed literally as all pointwise neighborhood \
                     intersections and therefore contains the singleton {x2} alongside \
                     {x1, x2}, {x2, x3}, and {x2, x4}"
                        .to_string(),
                ),
                ..base
            }),
            scope_desc: scope_desc.to_string(),
        },
    }
}

fn ex6() -> CheckOutput {
    let c = fixtures::nested_covering();
    let u = c.universe().clone();
    let id = Mapping::identity(&u);
    let base = ApproxSpace::new(c.clone());
    let reduct = ApproxSpace::new(c.reduct());
    let pruned = ApproxSpace::new(c.int());
    let neigh = ApproxSpace::new(c.nei());
    let mut fixed = Fixed::new();
    fixed.check(
        id.is_homomorphism(&base, &reduct, HomMode::Definable)
            .expect("same universe"),
        "the identity must be a homomorphism onto the reduct",
    );
    fixed.check(
        id.is_isomorphism(&base, &reduct, HomMode::Definable)
            .expect("same universe"),
        "the identity must be an isomorphism onto the reduct",
    );
    fixed.check(
        id.is_homomorphism(&base, &neigh, HomMode::Definable)
            .expect("same universe"),
        "the identity must be a homomorphism onto the neighborhood family",
    );
    fixed.check(
        !id.is_homomorphism(&neigh, &base, HomMode::Definable)
            .expect("same universe"),
        "the identity must NOT be a homomorphism back from the neighborhood family",
    );
    fixed.check(
        id.is_homomorphism(&pruned, &base, HomMode::Strict)
            .expect("same universe"),
        "the identity must be a strict homomorphism from the intersection pruning",
    );
    fixed.check(
        !id.is_homomorphism(&base, &pruned, HomMode::Definable)
            .expect("same universe"),
        "the identity must NOT be a homomorphism onto the intersection pruning",
    );
    fixed.output(
        "one worked eight-member covering over four points",
        Witness {
            spaces: vec![SpaceDoc::from_space(&base)],
            subsets: vec![],
            mapping: Some(MappingDoc::from_mapping(&id)),
            note: None,
        },
    )
}

// ---------------------------------------------------------------------------
// Existence (expected-failure) laws.
// ---------------------------------------------------------------------------

fn rmk2_strictness() -> CheckOutput {
    let c = fixtures::nested_covering();
    let u = c.universe().clone();
    let x = sub(&u, &["x1"]);
    let pruned = c.int();
    let original = c.lower_mask(x.mask());
    let shrunk = pruned.lower_mask(x.mask());
    let strict = shrunk & !original == 0 && shrunk != original;
    let (exact_original, exact_shrunk) = (original == x.mask(), shrunk == 0);
    CheckOutput {
        instances: 1,
        verdict: if strict && exact_original && exact_shrunk {
            Verdict::Found(wit(
                &[&c, &pruned],
                vec![x.labels()],
                "dropping intersectional members shrinks the lower approximation of {x1} \
                 from {x1} to the empty set; mind the direction — the strict inclusion \
                 runs pruned ⊊ original, and quoting it with the two subscripts swapped \
                 is a common transcription slip",
            ))
        } else {
            Verdict::NotFound
        },
        scope_desc: "one worked eight-member covering over four points".to_string(),
    }
}

fn rmk3() -> CheckOutput {
    let c = fixtures::nested_covering();
    let u = c.universe().clone();
    let int_then_reduct = c.int().reduct();
    let reduct_then_int = c.reduct().int();
    let expected_first = Covering::from_labels(
        &u,
        [
            ["x1", "x2", "x3"],
            ["x1", "x2", "x4"],
            ["x1", "x3", "x4"],
            ["x2", "x3", "x4"],
        ],
    )
    .expect("valid covering");
    let expected_second = Covering::from_labels(
        &u,
        vec![
            vec!["x2"],
            vec!["x1", "x3"],
            vec!["x1", "x2", "x4"],
            vec!["x1", "x3", "x4"],
            vec!["x2", "x3", "x4"],
        ],
    )
    .expect("valid covering");
    let mut fixed = Fixed::new();
    fixed.check(
        int_then_reduct == expected_first,
        "intersection pruning followed by union pruning must give the four triples",
    );
    fixed.check(
        reduct_then_int == expected_second,
        "union pruning followed by intersection pruning must give the five-member family",
    );
    fixed.check(
        int_then_reduct != reduct_then_int,
        "the two pruning orders must disagree on this covering",
    );
    fixed.check(
        int_then_reduct
            .same_upper_by_subsets(&reduct_then_int)
            .expect("small universe"),
        "both pruning orders must preserve the upper operator",
    );
    let witness = wit(
        &[&c, &int_then_reduct, &reduct_then_int],
        vec![],
        "the two pruning orders produce different families with the same upper operator",
    );
    CheckOutput {
        instances: fixed.instances,
        verdict: match fixed.first_bad {
            None => Verdict::Found(witness),
            Some(_) => Verdict::NotFound,
        },
        scope_desc: "one worked eight-member covering over four points".to_string(),
    }
}

fn rmk4_strictness() -> CheckOutput {
    let space = fixtures::triangle_space();
    let c = space.covering();
    let u = space.universe().clone();
    let x = sub(&u, &["a"]);
    let neigh = c.nei();
    let original = c.lower_mask(x.mask());
    let grown = neigh.lower_mask(x.mask());
    let found = original == 0 && grown == x.mask();
    CheckOutput {
        instances: 1,
        verdict: if found {
            Verdict::Found(wit(
                &[c, &neigh],
                vec![x.labels()],
                "the neighborhood family grows the lower approximation of {a} \
                 from the empty set to {a}",
            ))
        } else {
            Verdict::NotFound
        },
        scope_desc: "one worked three-point space".to_string(),
    }
}

fn rmk5() -> CheckOutput {
    let (src, dst, f) = fixtures::collapsing_map();
    let x = sub(src.universe(), &["x2", "x4"]);
    let report = match f.preservation_report(&src, &dst, &x) {
        Ok(report) => report,
        Err(_) => {
            return CheckOutput {
                instances: 1,
                verdict: Verdict::NotFound,
                scope_desc: "one worked five-to-four-point homomorphism".to_string(),
            }
        }
    };
    let v = dst.universe();
    let expected_transported = sub(v, &["y2", "y3", "y4"]);
    let expected_direct = sub(v, &["y1", "y2", "y3"]);
    let incomparable = !report
        .f_upper_x
        .is_subset_of(&report.upper_f_x)
        .expect("same universe")
        && !report
            .upper_f_x
            .is_subset_of(&report.f_upper_x)
            .expect("same universe");
    let found = report.f_upper_x == expected_transported
        && report.upper_f_x == expected_direct
        && incomparable
        && report.lower_inclusion_holds;
    CheckOutput {
        instances: 1,
        verdict: if found {
            Verdict::Found(Witness {
                spaces: vec![SpaceDoc::from_space(&src), SpaceDoc::from_space(&dst)],
                subsets: vec![x.labels()],
                mapping: Some(MappingDoc::from_mapping(&f)),
                note: Some(
                    "the image of the upper approximation, {y2, y3, y4}, and the upper \
                     approximation of the image, {y1, y2, y3}, are incomparable"
                        .to_string(),
                ),
            })
        } else {
            Verdict::NotFound
        },
        scope_desc: "one worked five-to-four-point homomorphism".to_string(),
    }
}

// ---------------------------------------------------------------------------
// Replay.
// ---------------------------------------------------------------------------

fn w_covering(w: &Witness, i: usize) -> Result<Covering> {
    w.spaces
        .get(i)
        .ok_or_else(|| Error::MalformedWitness(format!("space #{i}")))?
        .to_covering()
}

fn w_set(w: &Witness, i: usize, u: &Universe) -> Result<Subset> {
    let labels = w
        .subsets
        .get(i)
        .ok_or_else(|| Error::MalformedWitness(format!("set #{i}")))?;
    Subset::from_labels(u, labels.iter().map(String::as_str))
}

fn w_mapping(w: &Witness, src: &Universe, dst: &Universe) -> Result<Mapping> {
    w.mapping
        .as_ref()
        .ok_or_else(|| Error::MalformedWitness("a mapping".to_string()))?
        .to_mapping(src, dst)
}

/// Re-runs a fixed worked-instance law and reports whether the recorded
/// violation reproduces.
fn replay_fixed(law: LawId) -> bool {
    matches!(run(law, &ScopeSpec::default()).verdict, Verdict::Violated(_))
}

pub(super) fn replay(law: LawId, w: &Witness) -> Result<bool> {
    match law {
        LawId::Thm1 => {
            let space = ApproxSpace::new(w_covering(w, 0)?);
            let x = w_set(w, 0, space.universe())?;
            let by_def = space.upper_def3(&x)?;
            let by_neigh = space.upper_neigh(&x)?;
            let by_subcov = space.upper_subcov(&x)?;
            Ok(!(by_def == by_neigh && by_neigh == by_subcov))
        }
        LawId::Cor1 => {
            let space = ApproxSpace::new(w_covering(w, 0)?);
            let x = w_set(w, 0, space.universe())?;
            match space.upper_subcov_nontrivial(&x) {
                Ok(proper) => Ok(proper != space.upper_subcov(&x)?),
                Err(Error::OnlyTrivialSubcovering) => Ok(false),
                Err(e) => Err(e),
            }
        }
        LawId::Lem1EqDef3 => {
            let space = ApproxSpace::new(w_covering(w, 0)?);
            let x = w_set(w, 0, space.universe())?;
            Ok(space.upper_def3(&x)? != space.upper_neigh(&x)?)
        }
        LawId::Sandwich => {
            let space = ApproxSpace::new(w_covering(w, 0)?);
            let x = w_set(w, 0, space.universe())?;
            let lower = space.lower(&x)?;
            let upper = space.upper_neigh(&x)?;
            Ok(!(lower.is_subset_of(&x)? && x.is_subset_of(&upper)?))
        }
        LawId::Prop1 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(c1.same_lower_by_subsets(&c2)? && !c1.same_upper_by_subsets(&c2)?)
        }
        LawId::Prop1ConverseFails => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(c1.same_upper_by_subsets(&c2)? && !c1.same_lower_by_subsets(&c2)?)
        }
        LawId::Cor2 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            let members_agree = c1
                .masks()
                .iter()
                .chain(c2.masks())
                .all(|&m| c1.lower_mask(m) == c2.lower_mask(m));
            Ok(members_agree
                && !(c1.same_lower_by_subsets(&c2)? && c1.same_upper_by_subsets(&c2)?))
        }
        LawId::Cor3 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(c1.same_lower_by_subsets(&c2)? != c1.same_lower_operator(&c2)?)
        }
        LawId::Cor4 => {
            let c = w_covering(w, 0)?;
            let closure = c.definable_closure()?;
            Ok(!(c.same_lower_by_subsets(&closure)?
                && c.same_upper_by_subsets(&closure)?
                && c.reduct() == closure.reduct()))
        }
        LawId::Cor5 => {
            let c = w_covering(w, 0)?;
            let red = c.reduct();
            Ok(!(c.same_lower_by_subsets(&red)? && c.same_upper_by_subsets(&red)?))
        }
        LawId::Lem2 => {
            let c = w_covering(w, 0)?;
            let pruned = c.int();
            Ok((0..c.universe().size())
                .any(|x| c.neighborhood_mask_of_index(x) != pruned.neighborhood_mask_of_index(x)))
        }
        LawId::Lem3 => {
            let src = ApproxSpace::new(w_covering(w, 0)?);
            let dst = ApproxSpace::new(w_covering(w, 1)?);
            let f = w_mapping(w, src.universe(), dst.universe())?;
            let x = w_set(w, 0, src.universe())?;
            if !f.is_homomorphism(&src, &dst, HomMode::Definable)? {
                return Ok(false);
            }
            let transported = f.image(&src.lower(&x)?)?;
            let direct = dst.lower(&f.image(&x)?)?;
            Ok(!transported.is_subset_of(&direct)?)
        }
        LawId::Lem4 => {
            let src = ApproxSpace::new(w_covering(w, 0)?);
            let dst = ApproxSpace::new(w_covering(w, 1)?);
            let f = w_mapping(w, src.universe(), dst.universe())?;
            if !f.is_isomorphism(&src, &dst, HomMode::Definable)? {
                return Ok(true);
            }
            for x in 0..src.universe().size() {
                let transported = f.image(&src.neighborhood_at(x)?)?;
                let direct = dst.neighborhood_at(f.apply_index(x)?)?;
                if transported != direct {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        LawId::Thm2 => {
            let c = w_covering(w, 0)?;
            let pruned = c.int();
            let x = w_set(w, 0, c.universe())?;
            let shrunk = pruned.lower_mask(x.mask());
            let original = c.lower_mask(x.mask());
            Ok(shrunk & !original != 0
                || upper_mask(&c, x.mask()) != upper_mask(&pruned, x.mask()))
        }
        LawId::Thm3 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            let members_agree = c1
                .masks()
                .iter()
                .chain(c2.masks())
                .all(|&m| upper_mask(&c1, m) == upper_mask(&c2, m));
            Ok(members_agree && !c1.same_upper_by_subsets(&c2)?)
        }
        LawId::Thm4 => {
            let c = w_covering(w, 0)?;
            let neigh = c.nei();
            let x = w_set(w, 0, c.universe())?;
            let original = c.lower_mask(x.mask());
            let grown = neigh.lower_mask(x.mask());
            Ok(original & !grown != 0
                || upper_mask(&c, x.mask()) != upper_mask(&neigh, x.mask()))
        }
        LawId::Thm5 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(pooled_family_bounds(&c1, &c2, &c1.join(&c2)?, "join").is_some())
        }
        LawId::Thm6 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(pooled_family_bounds(&c1, &c2, &c1.meet(&c2)?, "meet").is_some())
        }
        LawId::Thm7 => {
            let src = ApproxSpace::new(w_covering(w, 0)?);
            let dst = ApproxSpace::new(w_covering(w, 1)?);
            let f = w_mapping(w, src.universe(), dst.universe())?;
            let x = w_set(w, 0, src.universe())?;
            match f.preservation_report(&src, &dst, &x) {
                Ok(report) => {
                    Ok(!(report.is_isomorphism && report.lower_equal && report.upper_equal))
                }
                Err(Error::NotAHomomorphism) => Ok(true),
                Err(e) => Err(e),
            }
        }
        LawId::Prop2 => {
            let c1 = w_covering(w, 0)?;
            let c2 = w_covering(w, 1)?;
            Ok(c1.meet(&c2)? != c1.join(&c2)?.nei())
        }
        LawId::Monotone => {
            let c = w_covering(w, 0)?;
            let x = w_set(w, 0, c.universe())?;
            let y = w_set(w, 1, c.universe())?;
            if !x.is_subset_of(&y)? {
                return Ok(false);
            }
            let lower_ok = c.lower_mask(x.mask()) & !c.lower_mask(y.mask()) == 0;
            let upper_ok = upper_mask(&c, x.mask()) & !upper_mask(&c, y.mask()) == 0;
            Ok(!(lower_ok && upper_ok))
        }
        LawId::PartitionPawlak => {
            let c = w_covering(w, 0)?;
            let x = w_set(w, 0, c.universe())?;
            if !c.is_partition() {
                return Ok(false);
            }
            let (expect_lower, expect_upper) = pawlak_masks(&c, x.mask());
            let space = ApproxSpace::new(c);
            Ok(space.lower(&x)?.mask() != expect_lower
                || space.upper_def3(&x)?.mask() != expect_upper
                || space.upper_neigh(&x)?.mask() != expect_upper)
        }
        LawId::Idempotence => {
            let c = w_covering(w, 0)?;
            Ok(c.reduct().reduct() != c.reduct()
                || c.int().int() != c.int()
                || c.nei().nei() != c.nei())
        }
        LawId::Rmk2Strictness => {
            let c = w_covering(w, 0)?;
            let x = w_set(w, 0, c.universe())?;
            let original = c.lower_mask(x.mask());
            let shrunk = c.int().lower_mask(x.mask());
            Ok(shrunk & !original == 0 && shrunk != original)
        }
        LawId::Rmk4Strictness => {
            let c = w_covering(w, 0)?;
            let x = w_set(w, 0, c.universe())?;
            let original = c.lower_mask(x.mask());
            let grown = c.nei().lower_mask(x.mask());
            Ok(original & !grown == 0 && original != grown)
        }
        LawId::Rmk3 => {
            let c = w_covering(w, 0)?;
            let first = c.int().reduct();
            let second = c.reduct().int();
            Ok(first != second && first.same_upper_by_subsets(&second)?)
        }
        LawId::Rmk5 => {
            let src = ApproxSpace::new(w_covering(w, 0)?);
            let dst = ApproxSpace::new(w_covering(w, 1)?);
            let f = w_mapping(w, src.universe(), dst.universe())?;
            let x = w_set(w, 0, src.universe())?;
            match f.preservation_report(&src, &dst, &x) {
                Ok(report) => Ok(!report.f_upper_x.is_subset_of(&report.upper_f_x)?
                    && !report.upper_f_x.is_subset_of(&report.f_upper_x)?),
                Err(Error::NotAHomomorphism) => Ok(false),
                Err(e) => Err(e),
            }
        }
        LawId::Ex1 | LawId::Ex2 | LawId::Ex3 | LawId::Ex4 | LawId::Ex5 | LawId::Ex6
        | LawId::CountA003465 => Ok(replay_fixed(law)),
    }
}
