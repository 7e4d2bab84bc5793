//! Exact minimal-radius covers by at most k points, on the line and on the
//! circle.
//!
//! ```bash
//! cargo run --example kcenter
//! ```

use std::f64::consts::{PI, TAU};

use subsetlab::{CircleMetric, FiniteSubset, Space};

fn main() -> subsetlab::Result<()> {
    // Line case: contiguous blocks of the sorted points, solved exactly by
    // dynamic programming.
    let a = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 0.1, 0.5, 0.9, 1.0])?;
    for k in 1..=3 {
        let r = a.exact_kcenter(k)?;
        println!(
            "k = {k}: radius {:.4}, centers {:?}",
            r.radius,
            r.centers.scalars()?
        );
    }

    // Circle case: every inter-point gap is tried as a cut.
    let angles: Vec<f64> = (0..4).map(|i| TAU * i as f64 / 4.0).collect();
    let b = FiniteSubset::from_angles(CircleMetric::Arclength, &angles)?;
    let r = b.exact_kcenter(3)?;
    println!(
        "4 equally spaced circle points, k = 3: radius {:.6} (= π/4 = {:.6})",
        r.radius,
        PI / 4.0
    );
    assert!((r.radius - PI / 4.0).abs() < 1e-9);

    // Asking for at least as many centers as points is free.
    let r = a.exact_kcenter(10)?;
    assert_eq!(r.radius, 0.0);
    println!("k ≥ |A| copies the set at radius 0");

    println!(
        "result JSON: {}",
        serde_json::to_string(&b.exact_kcenter(3)?)?
    );
    Ok(())
}
