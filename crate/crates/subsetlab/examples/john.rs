//! Inscribed-ellipse coordinate changes for planar norms: the Euclidean
//! disk maps onto √2 times the maximal ellipse of the unit ball, giving
//! ‖T‖ ≤ √2 and ‖T⁻¹‖ ≤ 1, certified over sampled directions.
//!
//! ```bash
//! cargo run --example john
//! ```

use subsetlab::john::{john_transform, plane_projection, Gauge};
use subsetlab::{Exponent, Space};

fn main() -> subsetlab::Result<()> {
    println!("gauge            T (diagonal)        ‖T‖       ‖T⁻¹‖");
    for (label, gauge) in [
        (
            "p = 1",
            Gauge::PNorm {
                p: Exponent::Finite(1.0),
            },
        ),
        (
            "p = 1.5",
            Gauge::PNorm {
                p: Exponent::Finite(1.5),
            },
        ),
        (
            "p = 2",
            Gauge::PNorm {
                p: Exponent::Finite(2.0),
            },
        ),
        (
            "p = 3",
            Gauge::PNorm {
                p: Exponent::Finite(3.0),
            },
        ),
        (
            "p = ∞",
            Gauge::PNorm {
                p: Exponent::Infinity,
            },
        ),
        ("regular 12-gon", Gauge::regular_polygon(12)?),
    ] {
        let j = john_transform(&gauge)?;
        println!(
            "{label:<15}  [{:.6}, {:.6}]  {:.6}  {:.6}",
            j.t[0][0], j.t[1][1], j.norm_t, j.norm_t_inv
        );
    }

    // A stretched hexagon forces a genuinely anisotropic ellipse.
    let stretched = Gauge::polygon(vec![
        [2.0, 0.0],
        [1.0, 0.8],
        [-1.0, 0.8],
        [-2.0, 0.0],
        [-1.0, -0.8],
        [1.0, -0.8],
    ])?;
    let j = john_transform(&stretched)?;
    println!(
        "stretched hexagon: T = [[{:.4}, {:.4}], [{:.4}, {:.4}]]",
        j.t[0][0], j.t[0][1], j.t[1][0], j.t[1][1]
    );
    println!("certificate JSON: {}", serde_json::to_string(&j)?);

    // The planar reduction available per space: identity in dimension two,
    // orthogonal coordinate projection in Euclidean spaces.
    let proj = plane_projection(&Space::euclidean(5)?)?;
    println!("planar reduction for Euclidean(5): {}", proj.name());
    Ok(())
}
