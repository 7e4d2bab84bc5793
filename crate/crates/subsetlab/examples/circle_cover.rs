//! The rotational circle cover: at most k arc midpoints within Hausdorff
//! distance π(n−1)/(kn) of any n-point set, compared against the exact
//! oracle.
//!
//! ```bash
//! cargo run --example circle_cover
//! ```

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subsetlab::{CircleMetric, FiniteSubset, Space};

fn main() -> subsetlab::Result<()> {
    // The two-point set {0, π} covered by a single arc midpoint.
    let a = FiniteSubset::from_angles(CircleMetric::Arclength, &[0.0, PI])?;
    let cover = a.circle_k_cover(1)?;
    println!(
        "cover of {{0, π}} by one point: {:?} at d_H = {:.6}",
        cover.angles()?,
        a.hausdorff(&cover)?
    );

    // A randomized sweep: the construction never exceeds its bound, and the
    // exact oracle shows how much slack it leaves.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let circle = Space::circle(CircleMetric::Arclength);
    println!("\n  n  k    bound     cover d_H   exact optimum");
    for (n, k) in [(5usize, 2usize), (8, 3), (8, 7), (12, 5)] {
        let angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        let a = FiniteSubset::new(
            circle.clone(),
            angles.iter().map(|&t| subsetlab::Point::angle(t)).collect(),
        )?;
        let bound = PI * (n as f64 - 1.0) / (k as f64 * n as f64);
        let cover = a.circle_k_cover(k)?;
        let achieved = a.hausdorff(&cover)?;
        let optimum = a.exact_kcenter(k)?.radius;
        assert!(achieved <= bound + 1e-9);
        assert!(achieved + 1e-9 >= optimum);
        println!(" {n:>2} {k:>2}   {bound:.6}  {achieved:.6}    {optimum:.6}");
    }

    // On equally spaced points with k = n−1 the bound is attained exactly.
    let n = 6;
    let angles: Vec<f64> = (0..n)
        .map(|i| std::f64::consts::TAU * i as f64 / n as f64)
        .collect();
    let spaced = FiniteSubset::from_angles(CircleMetric::Arclength, &angles)?;
    let optimum = spaced.exact_kcenter(n - 1)?.radius;
    println!(
        "\nequally spaced, n = {n}, k = {}: optimum {:.6} = bound {:.6}",
        n - 1,
        optimum,
        PI / n as f64
    );
    Ok(())
}
