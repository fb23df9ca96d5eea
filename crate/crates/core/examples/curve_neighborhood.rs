//! Curve neighborhoods Γ_d(X(λ)) in the odd moment graph.
//!
//! cargo run --example curve_neighborhood -- [n] [m] [lambda] [degree]
//! e.g. cargo run --example curve_neighborhood -- 4 3 "2|1|3" 1,0,1

use oddflag::cli::parse_degree;
use oddflag::curve_nbhd::{expected_components, gamma};
use oddflag::moment_graph::{GraphKind, MomentGraph};
use oddflag::root_system::FlagContext;
use oddflag::weyl::{CosetRep, Notation};

fn main() -> oddflag::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(5);
    let m = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let ctx = FlagContext::new(n, m)?;
    let lambda = match args.get(2) {
        Some(s) => CosetRep::parse(s, &ctx)?,
        None => CosetRep::identity(&ctx),
    };
    let degree = parse_degree(args.get(3).map_or("1^m", String::as_str), &ctx)?;

    let g = MomentGraph::build(ctx, GraphKind::Odd)?;
    let result = gamma(&g, &lambda, &degree)?;
    println!(
        "Γ_{} (X({})) in {ctx} has {} component(s):",
        degree,
        lambda.render(&ctx, Notation::Bar),
        result.components.len()
    );
    for c in &result.components {
        println!(
            "  {:<16} dim {:>3}{}",
            format!("X({})", c.rep.render(&ctx, Notation::Bar)),
            c.dim,
            if c.expected_dimension {
                "  expected dimension"
            } else {
                ""
            }
        );
    }

    if lambda == CosetRep::identity(&ctx) && degree == ctx.ones() {
        let mut want = expected_components(&ctx);
        want.sort();
        println!(
            "matches the predicted components: {}",
            want == result.reps()
        );
    }
    print!("{}", result.to_json(Notation::Bar)?);
    Ok(())
}
