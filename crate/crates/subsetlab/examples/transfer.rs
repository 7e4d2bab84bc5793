//! Induced subset maps, norming-functional clamps, and retraction transfer:
//! a retraction on X becomes a retraction on Y along maps f: X → Y,
//! g: Y → X with f∘g = id.
//!
//! ```bash
//! cargo run --example transfer
//! ```

use subsetlab::pipeline::norming_clamp;
use subsetlab::retraction::transfer_retraction;
use subsetlab::{Exponent, FiniteSubset, Point, PointMap, RetractionCandidate, Space};

fn main() -> subsetlab::Result<()> {
    // Point maps act on subsets through their image, with set semantics.
    let double = PointMap::scale(1, 2.0)?;
    let a = FiniteSubset::new(
        Space::euclidean(1)?,
        vec![Point::vector([0.0]), Point::vector([1.0])],
    )?;
    println!(
        "doubling {:?} gives {:?}",
        a.points(),
        double.induce(&a)?.points()
    );

    // The closest-pair merge candidate on the line.
    let x = Space::euclidean(1)?;
    let merge = RetractionCandidate::merge(x, 4)?;

    // Conjugate it onto the unit interval along clamp/inclusion.
    let f = PointMap::clamp_to_interval(0.0, 1.0)?;
    let g = PointMap::interval_inclusion(0.0, 1.0)?;
    let s = transfer_retraction(&f, &merge, &g)?;
    println!("transferred candidate: {} on {:?}", s.name(), s.space());

    let crowded = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.5, 0.52, 1.0])?;
    println!(
        "s({:?}) = {:?}",
        crowded.scalars()?,
        s.apply(&crowded)?.scalars()?
    );
    let small = FiniteSubset::from_scalars(Space::unit_interval(), &[0.2, 0.8])?;
    assert_eq!(s.apply(&small)?, small, "sets below the cap are fixed");

    // Norming functionals give the 1-Lipschitz section/retraction pair used
    // to pull interval constructions into any normed space.
    let space = Space::pnorm(3, Exponent::Finite(3.0))?;
    let u = {
        let raw = [0.5f64, -0.7, 0.3];
        let norm = raw
            .iter()
            .map(|x| x.abs().powi(3))
            .sum::<f64>()
            .powf(1.0 / 3.0);
        Point::vector(raw.map(|x| x / norm))
    };
    let nc = norming_clamp(&space, &u)?;
    println!("norming functional φ = {:?}", nc.phi);
    for t in [0.0, 0.3, 1.0] {
        let back = nc.f.eval(&nc.g.eval(&Point::scalar(t))?)?;
        println!("  f(g({t})) = {}", back.as_scalar()?);
    }
    Ok(())
}
