//! Build a degree-labelled moment graph, export it, and compute a chain degree two ways.
//!
//! cargo run --example moment_graph -- [n] [m]

use oddflag::moment_graph::{chain_degree_direct, chain_degree_od, Chain, GraphKind, MomentGraph};
use oddflag::root_system::{edge_degree, parabolic_complement, FlagContext, Root};
use oddflag::weyl::{CosetRep, Notation};

fn main() -> oddflag::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let ctx = FlagContext::new(*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&2))?;

    println!("edge degrees for {ctx}:");
    for root in parabolic_complement(&ctx) {
        println!("  {root:<8} {}", edge_degree(root, &ctx)?);
    }

    let even = MomentGraph::build(ctx, GraphKind::Even)?;
    let odd = MomentGraph::build(ctx, GraphKind::Odd)?;
    println!(
        "even graph: {} vertices, {} directed edges; odd graph: {} vertices, {} directed edges",
        even.vertices().len(),
        even.edges().len(),
        odd.vertices().len(),
        odd.edges().len()
    );

    // Walk from the point along 2t_m, then t_1 - t_2 when m >= 2.
    let id = CosetRep::identity(&ctx);
    let mut steps = Vec::new();
    let mut at = odd.require(&id)?;
    let mut plan = vec![Root::Long(ctx.m)];
    if ctx.m >= 2 {
        plan.push(Root::Diff(1, 2));
    }
    for root in plan {
        if let Some(e) = odd.out_edges(at).iter().find(|e| e.root == root) {
            steps.push(odd.step(e));
            at = e.dst;
        }
    }
    let chain = Chain { start: id, steps };
    println!(
        "chain to {}: direct degree {}, class-count degree {}",
        chain.end().render(&ctx, Notation::Bar),
        chain_degree_direct(&chain, &ctx)?,
        chain_degree_od(&chain.roots(), &ctx)?
    );

    if ctx.wp_size() <= 24 {
        println!("\n{}", odd.to_dot(Notation::Bar));
    }
    let json = odd.to_json(Notation::Bar)?;
    assert_eq!(MomentGraph::from_json(&json)?, odd);
    println!("JSON export: {} bytes, round-trips", json.len());
    Ok(())
}
