//! Theoretical bound tables: every growth formula for retraction constants
//! evaluated side by side, with the known single-step upper bounds.
//!
//! ```bash
//! cargo run --example bounds
//! ```

use subsetlab::lab::{bound_table, bounds_csv, corollary_bound, theoretical_bounds};

fn main() -> subsetlab::Result<()> {
    // One row in detail.
    let row = theoretical_bounds(10, 9)?;
    println!("n = 10, k = 9:");
    println!("  lower bound, any normed plane:  {:.6}", row.lb_normed);
    println!("  lower bound, Hilbert space:     {:.6}", row.lb_hilbert);
    println!(
        "  lower bound, single step:       {:.6}",
        row.lb_hadamard.unwrap()
    );
    println!(
        "  interval formulas (even/odd):   {:.6} / {:.6}",
        row.lb_interval_even.unwrap(),
        row.lb_interval_odd.unwrap()
    );
    println!(
        "  known upper bound, Hilbert:     {:.6}",
        row.ub_hilbert.unwrap()
    );
    println!(
        "  known upper bound, geodesic:    {:.6}",
        row.ub_hadamard.unwrap()
    );

    // The transferred bound scales down with the distortion of the
    // section/retraction pair.
    println!(
        "\ntransferred single-step bound at n = 10: {} (distortion 1), {} (distortion 2)",
        corollary_bound(10, 1.0, 1.0)?,
        corollary_bound(10, 2.0, 1.0)?
    );

    // The CSV table the CLI emits.
    let rows = bound_table(4, 12, false)?;
    println!("\n{}", bounds_csv(&rows));
    Ok(())
}
