//! Checks one axiom for one method on one tournament and replays the
//! counterexample it finds.
//!
//! cargo run --example check_axiom -- [METHOD] [AXIOM]

use condorcet_axioms::axioms::{check, AxiomId};
use condorcet_axioms::methods::MethodId;
use condorcet_axioms::tournament::WeightedTournament;

fn main() {
    let mut args = std::env::args().skip(1);
    let method: MethodId = args.next().as_deref().unwrap_or("cgb_plus").parse().expect("known method");
    let axiom: AxiomId = args.next().as_deref().unwrap_or("ProximityCondorcet").parse().expect("known axiom");

    let t = WeightedTournament::build(
        ["W", "N", "E", "S"],
        [("W", "N", 2), ("N", "E", 6), ("E", "W", 8), ("W", "S", 4), ("N", "S", 10), ("E", "S", 14)],
    )
    .unwrap();

    let verdict = check(axiom, method, &t, None).expect("axiom applies to this tournament");
    match verdict.counterexample {
        None => println!("{method} satisfies {} here", axiom.name()),
        Some(ce) => {
            println!("{}", ce.describe());
            ce.verify().expect("counterexample replays");
            println!("replayed from scratch: ok");
        }
    }
}
