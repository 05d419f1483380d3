//! The README walkthrough: build a space, approximate a set, and watch the
//! three upper routes agree.

use covrough::{ApproxSpace, Covering, Subset, Universe};

fn main() -> covrough::Result<()> {
    let u = Universe::new(["a", "b", "c", "d"])?;
    let c = Covering::from_labels(&u, [["a", "b"], ["a", "c"], ["b", "d"]])?;
    let space = ApproxSpace::new(c);

    let x = Subset::from_labels(&u, ["a", "d"])?;
    assert!(space.lower(&x)?.is_empty());

    // Three routes to the upper approximation; they always agree.
    let upper = space.upper_neigh(&x)?;
    assert_eq!(upper, space.upper_def3(&x)?);
    assert_eq!(upper, space.upper_subcov(&x)?);
    assert_eq!(upper.labels(), ["a", "b", "d"]);

    println!("the upper approximation of {x} is {upper}");
    Ok(())
}
