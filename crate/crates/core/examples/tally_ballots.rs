//! Tallies a small ranked-ballot election under every method.
//!
//! cargo run --example tally_ballots [BALLOT_FILE]

use condorcet_axioms::methods::{winners, MethodId};
use condorcet_axioms::profiles::{margins_of_profile, parse_ballots};

const ELECTION: &str = "\
candidates: Ada,Bo,Cy,Di
# count: ranking, unranked candidates tie last
4: Ada>Bo>Cy>Di
3: Bo>Cy>Ada
3: Cy>Di>Ada>Bo
2: Di>Ada>Cy
1: Bo>Di
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable ballot file"),
        None => ELECTION.to_string(),
    };
    let profile = parse_ballots(&text).expect("valid ballots");
    let t = margins_of_profile(&profile);

    println!("{} voters", profile.voter_count());
    for (a, b) in t.pairs() {
        let m = t.margin(a, b);
        let (w, l) = if m >= 0 { (a, b) } else { (b, a) };
        if m == 0 {
            println!("  {} ties {}", t.label(a), t.label(b));
        } else {
            println!("  {} beats {} by {}", t.label(w), t.label(l), m.abs());
        }
    }
    for method in MethodId::ALL {
        println!("{:>20}: {}", method.name(), t.names(winners(method, &t)).join(", "));
    }
}
