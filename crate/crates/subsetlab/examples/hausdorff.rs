//! Spaces, points, finite subsets, and the Hausdorff distance.
//!
//! ```bash
//! cargo run --example hausdorff
//! ```

use subsetlab::{CircleMetric, Exponent, FiniteSubset, Point, Space};

fn main() -> subsetlab::Result<()> {
    // Distances in a few carriers.
    let plane = Space::euclidean(2)?;
    println!(
        "Euclidean plane: d((0,0),(3,4)) = {}",
        plane.distance(&Point::vector([0.0, 0.0]), &Point::vector([3.0, 4.0]))?
    );

    let taxicab = Space::pnorm(2, Exponent::Finite(1.0))?;
    println!(
        "l1 plane:        d((0,0),(1,1)) = {}",
        taxicab.distance(&Point::vector([0.0, 0.0]), &Point::vector([1.0, 1.0]))?
    );

    let circle = Space::circle(CircleMetric::Arclength);
    println!(
        "circle:          d(0, 3π/2)    = {} (the short way around)",
        circle.distance(
            &Point::angle(0.0),
            &Point::angle(1.5 * std::f64::consts::PI)
        )?
    );

    // Finite subsets canonicalize: order and repeats do not matter.
    let unit = Space::unit_interval();
    let a = FiniteSubset::from_scalars(unit.clone(), &[1.0, 0.4, 0.0, 0.4])?;
    let b = FiniteSubset::from_scalars(unit, &[0.2, 0.9])?;
    println!("A = {:?}", a.points());
    println!("B = {:?}", b.points());

    // The Hausdorff distance is the larger of the two directed max-min terms.
    let d = a.hausdorff(&b)?;
    println!("d_H(A, B) = {d}");
    assert!((d - 0.2).abs() < 1e-12);

    // Subsets serialize to a compact JSON form.
    println!("A as JSON: {}", serde_json::to_string(&a)?);
    Ok(())
}
