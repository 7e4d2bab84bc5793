//! Geodesics and the comparison inequality that separates tree-like spaces
//! from the circle.
//!
//! ```bash
//! cargo run --example geodesics
//! ```

use std::f64::consts::PI;

use subsetlab::{CircleMetric, Point, Space};

fn main() -> subsetlab::Result<()> {
    let circle = Space::circle(CircleMetric::Arclength);
    let tripod = Space::tripod([1.0, 1.0, 1.0])?;
    let plane = Space::euclidean(2)?;

    // Constant-speed geodesics; antipodal circle pairs resolve
    // counterclockwise from the first endpoint.
    let mid = circle.geodesic_point(&Point::angle(0.0), &Point::angle(PI), 0.5)?;
    println!("midpoint of the antipodal pair (0, π): {:?}", mid);

    // Walking between tripod legs passes through the center.
    let q = tripod.geodesic_point(&Point::on_leg(0, 1.0), &Point::on_leg(1, 1.0), 0.75)?;
    println!("3/4 of the way from leg 0 to leg 1: {q:?}");

    // The comparison residual is zero in Hilbert-like spaces, nonnegative in
    // trees, and negative on the circle.
    let r_plane = plane.hadamard_residual(
        &Point::vector([0.0, 0.0]),
        &Point::vector([1.0, 0.4]),
        &Point::vector([0.3, 1.0]),
        0.6,
    )?;
    let r_tripod = tripod.hadamard_residual(
        &Point::on_leg(0, 1.0),
        &Point::on_leg(1, 1.0),
        &Point::on_leg(2, 0.7),
        0.5,
    )?;
    let r_circle = circle.hadamard_residual(
        &Point::angle(0.0),
        &Point::angle(PI),
        &Point::angle(1.5 * PI),
        0.5,
    )?;
    println!("comparison residual, Euclidean plane: {r_plane:.3e}");
    println!("comparison residual, tripod tree:     {r_tripod:.6}");
    println!("comparison residual, circle:          {r_circle:.6} (= −π²)");
    assert!(r_plane.abs() < 1e-9);
    assert!(r_tripod >= 0.0);
    assert!((r_circle + PI * PI).abs() < 1e-9);

    // Nearest-point projection onto a segment never expands distances.
    let p = Point::vector([0.0, 0.0]);
    let q = Point::vector([1.0, 0.0]);
    let proj = plane.project_to_segment(&p, &q, &Point::vector([2.0, 3.0]))?;
    println!("projection of (2,3) onto the segment [(0,0),(1,0)]: {proj:?}");
    Ok(())
}
