//! The interval normalization pipeline: rescale a set to pin both
//! extremes, or drop a far cluster and renormalize — the machinery that
//! turns an arbitrary candidate retraction into a pinned one.
//!
//! ```bash
//! cargo run --example pipeline
//! ```

use subsetlab::pipeline::{adjoin_two, normalize_unit, pinned_truncate};
use subsetlab::{FiniteSubset, Space};

fn main() -> subsetlab::Result<()> {
    // Affine renormalization: extremes land exactly on 0 and 1.
    let s = FiniteSubset::from_scalars(Space::unit_interval(), &[0.1, 0.5, 0.9])?;
    let n = normalize_unit(&s)?;
    println!("normalize {:?} -> {:?}", s.scalars()?, n.scalars()?);

    // Adjoining a far pin at 2 is an isometric embedding of subsets of
    // [0, 1] into subsets of [0, 2].
    let a = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.5, 1.0])?;
    let b = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.6, 1.0])?;
    let (ia, ib) = (adjoin_two(&a)?, adjoin_two(&b)?);
    println!(
        "adjoin: d_H(A, B) = {} = d_H(ι(A), ι(B)) = {}",
        a.hausdorff(&b)?,
        ia.hausdorff(&ib)?
    );

    // Truncation removes the far cluster of a valid three-cluster
    // configuration; with c = 0.3 the cut sits at 1 + c/2 = 1.15.
    let wide = Space::interval(0.0, 2.0)?;
    let s = FiniteSubset::from_scalars(wide.clone(), &[0.05, 0.4, 1.02, 1.9])?;
    let t = pinned_truncate(&s, 0.3)?;
    println!(
        "truncate {:?} at c = 0.3 -> {:?}",
        s.scalars()?,
        t.scalars()?
    );

    // The full drop-and-renormalize composition: truncate, then rescale the
    // survivors back to pinned form on [0, 1].
    let sigma = normalize_unit(&t)?;
    println!("renormalized survivors: {:?}", sigma.scalars()?);

    // Outside the guard (c ≥ 1) the construction refuses to guess.
    let pins = FiniteSubset::from_scalars(wide, &[0.0, 1.0, 2.0])?;
    match pinned_truncate(&pins, 1.0) {
        Err(e) => println!("c = 1 is rejected: {e}"),
        Ok(_) => unreachable!("the guard must fire"),
    }
    Ok(())
}
