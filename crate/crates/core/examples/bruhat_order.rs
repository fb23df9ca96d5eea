//! Bruhat order on W^P through sorted prefixes; down-sets and maximal elements.
//!
//! cargo run --example bruhat_order

use oddflag::bruhat::{down_set, leq, maximal, schubert_dim, sorted_prefix};
use oddflag::root_system::FlagContext;
use oddflag::weyl::{CosetRep, Notation};

fn main() -> oddflag::Result<()> {
    let ctx = FlagContext::new(5, 3)?;
    let a = CosetRep::parse("1|b2|3", &ctx)?;
    let b = CosetRep::parse("5|b4|2", &ctx)?;
    for k in 1..=ctx.m {
        println!(
            "k={k}: {:?} vs {:?}",
            sorted_prefix(&a, k)?.0,
            sorted_prefix(&b, k)?.0
        );
    }
    println!("1|b2|3 <= 5|b4|2 ? {}", leq(&a, &b)?);
    println!("5|b4|2 <= 1|b2|3 ? {}", leq(&b, &a)?);

    let ctx = FlagContext::new(2, 2)?;
    let top = CosetRep::odd_top(&ctx);
    let below = down_set(&top, &ctx, false);
    println!(
        "\n{ctx}: top class {} has dimension {} and {} elements below it",
        top.render(&ctx, Notation::Bar),
        schubert_dim(&top, &ctx)?,
        below.len()
    );

    let lam = CosetRep::parse("3|1", &ctx)?;
    let lower = down_set(&lam, &ctx, true);
    let names: Vec<String> = lower
        .iter()
        .map(|r| r.render(&ctx, Notation::Bar))
        .collect();
    println!("down-set of 3|1: {}", names.join(", "));

    let sample: Vec<CosetRep> = ["2|1", "1|3", "3|1", "1|b3"]
        .iter()
        .map(|s| CosetRep::parse(s, &ctx))
        .collect::<Result<_, _>>()?;
    let tops: Vec<String> = maximal(&sample)
        .iter()
        .map(|r| r.render(&ctx, Notation::Bar))
        .collect();
    println!(
        "maximal elements of {{2|1, 1|3, 3|1, 1|b3}}: {}",
        tops.join(", ")
    );
    Ok(())
}
