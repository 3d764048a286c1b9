//! Classifies every orientation of a four-candidate tournament and checks
//! that the class alone predicts the MWSL winner, then names the class of a
//! five-candidate pentagram.
//!
//! cargo run --release --example classify_tournaments

use std::collections::BTreeMap;

use condorcet_axioms::axioms::audit::{default_magnitudes, TournamentSpace};
use condorcet_axioms::classify::{classify, expected_winner_fig1};
use condorcet_axioms::methods::{winners, MethodId};
use condorcet_axioms::tournament::WeightedTournament;

fn main() {
    let space = TournamentSpace::exhaustive(4, &default_magnitudes(4)).unwrap();
    let mut counts = BTreeMap::new();
    for t in space.iter() {
        let class = classify(&t).unwrap();
        let predicted = expected_winner_fig1(&class, &t).unwrap();
        assert!(winners(MethodId::Mwsl, &t).is_singleton(predicted));
        *counts.entry(class.label.name()).or_insert(0) += 1;
    }
    println!("{} four-candidate tournaments, MWSL winner predicted by class:", space.len());
    for (name, n) in counts {
        println!("  {name:<28} {n}");
    }

    let pentagram = WeightedTournament::build(
        ["A", "B", "C", "D", "E"],
        [("A", "B", 2), ("B", "C", 4), ("C", "D", 6), ("D", "E", 8), ("E", "A", 10),
         ("A", "C", 12), ("B", "D", 14), ("C", "E", 16), ("D", "A", 18), ("E", "B", 20)],
    )
    .unwrap();
    let class = classify(&pentagram).unwrap();
    println!("\npentagram: {} ({})", class.label.name(), class.describe_roles(&pentagram));
}
