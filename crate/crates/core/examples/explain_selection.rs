//! Walks through each stage of a selection on the four cycle where MWSL and
//! its local variant disagree.
//!
//! cargo run --example explain_selection

use condorcet_axioms::methods::{select, MethodId};
use condorcet_axioms::tournament::WeightedTournament;

fn main() {
    let t = WeightedTournament::build(
        ["N", "W", "E", "S"],
        [("W", "N", 8), ("N", "E", 2), ("E", "W", 6), ("S", "W", 4), ("N", "S", 10), ("E", "S", 12)],
    )
    .unwrap();

    for method in [MethodId::Mwsl, MethodId::VariantLocalMin, MethodId::Minimax, MethodId::CgbPlus] {
        let r = select(method, &t);
        println!("{method}");
        for (i, step) in r.trace.steps.iter().enumerate() {
            let scores: Vec<String> = step.scores.iter().map(|&(c, s)| format!("{} {s}", t.label(c))).collect();
            println!(
                "  {}. {} ({}) -> {}",
                i + 1,
                step.stage.describe(),
                scores.join(", "),
                t.names(step.kept).join(", ")
            );
        }
        match r.unique() {
            Some(w) => println!("  winner {}\n", t.label(w)),
            None => println!("  tie {}\n", t.names(r.winners).join(", ")),
        }
    }
}
