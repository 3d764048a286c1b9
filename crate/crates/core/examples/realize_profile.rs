//! Builds voter profiles whose majority margins reproduce a target
//! tournament exactly, then tallies them back.
//!
//! cargo run --example realize_profile

use condorcet_axioms::profiles::{debord_realize, margins_of_profile, mcgarvey_realize, Parity};
use condorcet_axioms::tournament::WeightedTournament;

fn main() {
    let even = WeightedTournament::build(["A", "B", "C"], [("A", "B", 2), ("B", "C", 4), ("C", "A", 6)]).unwrap();
    let profile = debord_realize(&even, Parity::Even).unwrap();
    println!("even margins, {} voters:\n{}", profile.voter_count(), profile.to_text());
    assert_eq!(margins_of_profile(&profile), even);

    let odd = WeightedTournament::build(["A", "B", "C"], [("A", "B", 1), ("B", "C", 3), ("C", "A", 5)]).unwrap();
    let profile = debord_realize(&odd, Parity::Odd).unwrap();
    println!("odd margins, {} voters:\n{}", profile.voter_count(), profile.to_text());
    assert_eq!(margins_of_profile(&profile), odd);

    // unit-margin orientation only; magnitudes are not preserved
    let profile = mcgarvey_realize(&even).unwrap();
    let back = margins_of_profile(&profile);
    println!("pairwise-gadget profile gives {}", back.to_file_text().replace('\n', "; "));
}
