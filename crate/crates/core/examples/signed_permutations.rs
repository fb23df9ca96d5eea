//! Signed permutations, lengths, and the coset representatives W^P and W^odd.
//!
//! cargo run --example signed_permutations

use oddflag::root_system::{parabolic_complement, FlagContext, Root};
use oddflag::weyl::{enumerate_wodd, enumerate_wp, min_rep, CosetRep, Notation, Window};

fn main() -> oddflag::Result<()> {
    let ctx = FlagContext::new(2, 2)?;
    let id = Window::identity(ctx.rank());
    println!("identity {id}, length {}", id.length());

    for root in [Root::Diff(1, 2), Root::Sum(1, 2), Root::Long(1)] {
        let w = id.reflect(root);
        println!("s_{root:<6} = {w}, length {}", w.length());
    }

    let w = Window::new(vec![5, 1, 3])?;
    for root in parabolic_complement(&ctx) {
        let image = w.apply_to_root(root);
        println!(
            "{w} · {root:<6} = {}{}",
            if image.positive { "+" } else { "-" },
            image.root
        );
    }

    let wp = enumerate_wp(&ctx);
    let wodd = enumerate_wodd(&ctx);
    println!("\n{ctx}: |W^P| = {}, |W^odd| = {}", wp.len(), wodd.len());
    for rep in &wodd {
        let window = min_rep(rep, &ctx)?;
        println!(
            "  {:<8} window {window}  length {}",
            rep.render(&ctx, Notation::Bar),
            window.length()
        );
    }

    let ctx = FlagContext::new(5, 3)?;
    for s in ["1|b2|3", "5|b4|2", "3|b1|2"] {
        let rep = CosetRep::parse(s, &ctx)?;
        println!(
            "{ctx}: {s} ({}) in W^odd: {}",
            rep.render(&ctx, Notation::Raw),
            rep.is_odd(&ctx)
        );
    }
    Ok(())
}
