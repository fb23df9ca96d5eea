//! The q_1⋯q_m part of τ_Div ⋆ τ_pt, with symbolic coefficients.
//!
//! cargo run --example quantum_report -- [n] [m]

use oddflag::curve_nbhd::{expected_dim_check, quantum_report};
use oddflag::root_system::FlagContext;
use oddflag::weyl::Notation;

fn main() -> oddflag::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let ctx = FlagContext::new(*args.first().unwrap_or(&5), *args.get(1).unwrap_or(&3))?;

    let report = quantum_report(ctx)?;
    print!("{}", report.render_text(Notation::Bar));

    let two_n = 2 * ctx.n as i64;
    println!(
        "\nexpected-dimension test: dim {} -> {}, dim {} -> {}",
        two_n,
        expected_dim_check(&ctx, two_n),
        two_n - 1,
        expected_dim_check(&ctx, two_n - 1)
    );
    Ok(())
}
