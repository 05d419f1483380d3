//! A small catalog of worked spaces, coverings, and mappings.
//!
//! These fixtures anchor the law suite and the test suites: each one is a
//! hand-checked configuration whose approximations, operator images, and
//! morphism behavior are known exactly.  They are exported so that test
//! code, the law checks, and downstream examples all speak about the same
//! objects.

use crate::approx::ApproxSpace;
use crate::covering::Covering;
use crate::morphism::Mapping;
use crate::universe::Universe;

/// The universe `{x1, …, xn}`.
pub fn indexed_universe(n: usize) -> Universe {
    Universe::new((1..=n).map(|i| format!("x{i}"))).expect("indexed names are valid")
}

fn covering(u: &Universe, members: &[&[&str]]) -> Covering {
    Covering::from_labels(u, members.iter().map(|m| m.iter().copied()))
        .expect("fixture coverings are valid")
}

/// Four points covered by three overlapping pairs:
/// `{a,b}, {a,c}, {b,d}` over `{a,b,c,d}`.
///
/// Neighborhoods: `a ↦ {a}`, `b ↦ {b}`, `c ↦ {a,c}`, `d ↦ {b,d}`.  The set
/// `{a,d}` has empty lower approximation and upper approximation `{a,b,d}`.
pub fn pairs_space() -> ApproxSpace {
    let u = Universe::new(["a", "b", "c", "d"]).expect("valid names");
    ApproxSpace::new(covering(&u, &[&["a", "b"], &["a", "c"], &["b", "d"]]))
}

/// Two different coverings of `{x1,…,x4}` that share one reduct: all six
/// two-point sets, plus redundant three-point unions (a different selection
/// in each covering).
pub fn redundant_triples() -> (Covering, Covering) {
    let u = indexed_universe(4);
    let pairs: &[&[&str]] = &[
        &["x1", "x2"],
        &["x1", "x3"],
        &["x1", "x4"],
        &["x2", "x3"],
        &["x2", "x4"],
        &["x3", "x4"],
    ];
    let mut left: Vec<&[&str]> = pairs.to_vec();
    left.push(&["x1", "x2", "x3"]);
    left.push(&["x1", "x2", "x4"]);
    let mut right: Vec<&[&str]> = pairs.to_vec();
    right.push(&["x1", "x2", "x3"]);
    right.push(&["x1", "x3", "x4"]);
    right.push(&["x2", "x3", "x4"]);
    (covering(&u, &left), covering(&u, &right))
}

/// A covering of `{x1,…,x4}` mixing singletons, pairs, and all four
/// three-point sets:
/// `{x1}, {x2}, {x1,x2}, {x1,x3}, {x1,x2,x3}, {x1,x2,x4}, {x1,x3,x4},
/// {x2,x3,x4}`.
///
/// Pruning intersections keeps exactly the four triples; pruning unions
/// keeps `{x1}, {x2}, {x1,x3}` and three of the triples.  The two prunings
/// do not commute on this covering.
pub fn nested_covering() -> Covering {
    let u = indexed_universe(4);
    covering(
        &u,
        &[
            &["x1"],
            &["x2"],
            &["x1", "x2"],
            &["x1", "x3"],
            &["x1", "x2", "x3"],
            &["x1", "x2", "x4"],
            &["x1", "x3", "x4"],
            &["x2", "x3", "x4"],
        ],
    )
}

/// The three two-point sets over `{a,b,c}`.  Every neighborhood is a
/// singleton, so the neighborhood family is strictly finer than the
/// covering: lower approximations genuinely improve under `nei`.
pub fn triangle_space() -> ApproxSpace {
    let u = Universe::new(["a", "b", "c"]).expect("valid names");
    ApproxSpace::new(covering(&u, &[&["a", "b"], &["b", "c"], &["a", "c"]]))
}

/// Two coverings of `{x1,…,x4}` with interesting join and meet:
/// `{x1x2, x2x4, x2x3x4}` and `{x1x2x3, x2x3x4}`.
///
/// Their meet contains the singleton `{x2}` (the pooled neighborhood of
/// `x2`) alongside `{x1,x2}`, `{x2,x3}`, `{x2,x4}`.
pub fn join_meet_coverings() -> (Covering, Covering) {
    let u = indexed_universe(4);
    (
        covering(&u, &[&["x1", "x2"], &["x2", "x4"], &["x2", "x3", "x4"]]),
        covering(&u, &[&["x1", "x2", "x3"], &["x2", "x3", "x4"]]),
    )
}

/// A definable (but not strict, and not bijective) homomorphism from a
/// five-point space to a four-point space.
///
/// Source: `{x1,x2}, {x2,x3}, {x4,x5}` over `{x1,…,x5}`; target:
/// `{y1,y2}, {y3}, {y4}` over `{y1,…,y4}`; the map collapses `x1, x3 ↦ y1`
/// and sends `x2 ↦ y2`, `x4 ↦ y3`, `x5 ↦ y4`.  On `X = {x2,x4}` the upper
/// approximation and the map do not commute in either direction.
pub fn collapsing_map() -> (ApproxSpace, ApproxSpace, Mapping) {
    let u = indexed_universe(5);
    let v = Universe::new(["y1", "y2", "y3", "y4"]).expect("valid names");
    let src = ApproxSpace::new(covering(&u, &[&["x1", "x2"], &["x2", "x3"], &["x4", "x5"]]));
    let dst = ApproxSpace::new(covering(&v, &[&["y1", "y2"], &["y3"], &["y4"]]));
    let f = Mapping::from_pairs(
        &u,
        &v,
        [
            ("x1", "y1"),
            ("x2", "y2"),
            ("x3", "y1"),
            ("x4", "y3"),
            ("x5", "y4"),
        ],
    )
    .expect("fixture mapping is total");
    (src, dst, f)
}
