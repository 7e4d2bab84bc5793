//! Minimum separation, one-point reductions, and pinned subset spaces.
//!
//! ```bash
//! cargo run --example reduce
//! ```

use subsetlab::subset::PinnedSpec;
use subsetlab::{FiniteSubset, ReduceMode, Space};

fn main() -> subsetlab::Result<()> {
    let line = Space::interval(0.0, 2.0)?;
    let a = FiniteSubset::from_scalars(line, &[0.0, 1.0, 1.2])?;
    let n = 3;

    // The minimum separation bounds how far a one-point reduction moves a set.
    let delta = a.min_separation(n)?;
    println!("A = {:?}, δ_{n}(A) = {delta}", a.scalars()?);

    let dropped = a.reduce_by_one(n, ReduceMode::Drop)?;
    println!(
        "drop:  {:?}  moved d_H = {} (≤ δ)",
        dropped.scalars()?,
        a.hausdorff(&dropped)?
    );

    let merged = a.reduce_by_one(n, ReduceMode::Merge)?;
    println!(
        "merge: {:?}  moved d_H = {} (≤ δ/2)",
        merged.scalars()?,
        a.hausdorff(&merged)?
    );

    // Sets below the cardinality cap are left alone.
    let small = FiniteSubset::from_scalars(Space::unit_interval(), &[0.5])?;
    assert_eq!(small.reduce_by_one(3, ReduceMode::Merge)?, small);
    println!("singletons are fixed points of both reductions");

    // Pinned subset spaces: sets that must contain both endpoints. The
    // spec with pins {0,1} over [0,1] and cap n+2 behaves very differently
    // for even and odd n, which is what makes reductions interesting.
    let d1 = PinnedSpec::dunce_hat(1); // cap 3
    let member = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.5, 1.0])?;
    let missing_pin = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.5])?;
    println!(
        "pinned membership: {:?} -> {}, {:?} -> {}",
        member.scalars()?,
        d1.contains(&member)?,
        missing_pin.scalars()?,
        d1.contains(&missing_pin)?
    );
    Ok(())
}
