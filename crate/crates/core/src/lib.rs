//! Weighted tournament solutions centred on Most Wins, Smallest Loss (MWSL),
//! executable axiom checkers, tournament classification, ballot profiles and
//! an audit engine that searches tournament spaces for counterexamples.
//!
//! ```
//! use condorcet_axioms::methods::{winners, MethodId};
//! use condorcet_axioms::tournament::WeightedTournament;
//!
//! let t = WeightedTournament::build(
//!     ["N", "W", "E", "S"],
//!     [("W", "N", 8), ("N", "E", 2), ("E", "W", 6), ("S", "W", 4), ("N", "S", 10), ("E", "S", 12)],
//! )
//! .unwrap();
//! assert_eq!(t.names(winners(MethodId::Mwsl, &t)), ["E"]);
//! assert_eq!(t.names(winners(MethodId::VariantLocalMin, &t)), ["N"]);
//! ```

pub mod axioms;
pub mod classify;
pub mod cli;
pub mod methods;
pub mod profiles;
pub mod tournament;
