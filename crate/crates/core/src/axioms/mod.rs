//! Executable axiom checkers.
//!
//! Each checker evaluates one axiom for one method on one tournament and,
//! when the axiom fails, packages a counterexample that can be replayed
//! independently with [`Counterexample::verify`]. Perturbation searches
//! range over `n` (or replacement margins) up to a bound that defaults to
//! `max |m| + 1`. Perturbations of a uniquely-weighted tournament that
//! would repeat a magnitude are skipped, so witnesses stay in that domain.

pub mod audit;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::methods::{winners, MethodId};
use crate::tournament::{CandidateId, CandidateSet, WeightedTournament};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxiomId {
    ProximityCondorcet,
    ProximityCopeland,
    #[serde(rename = "IID")]
    Iid,
    WinMonotonicity,
    WinDominance,
    RareTies,
    ImmunitySpoilers,
    CondorcetCriterion,
}

impl AxiomId {
    pub const ALL: [AxiomId; 8] = [
        AxiomId::ProximityCondorcet,
        AxiomId::ProximityCopeland,
        AxiomId::Iid,
        AxiomId::WinMonotonicity,
        AxiomId::WinDominance,
        AxiomId::RareTies,
        AxiomId::ImmunitySpoilers,
        AxiomId::CondorcetCriterion,
    ];

    /// The four-candidate axiom set.
    pub const TABLE1: [AxiomId; 5] = [
        AxiomId::ProximityCondorcet,
        AxiomId::Iid,
        AxiomId::WinMonotonicity,
        AxiomId::WinDominance,
        AxiomId::RareTies,
    ];

    /// The five-candidate axiom set.
    pub const TABLE2: [AxiomId; 7] = [
        AxiomId::ProximityCondorcet,
        AxiomId::ProximityCopeland,
        AxiomId::ImmunitySpoilers,
        AxiomId::Iid,
        AxiomId::WinMonotonicity,
        AxiomId::WinDominance,
        AxiomId::RareTies,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::ProximityCondorcet => "ProximityCondorcet",
            AxiomId::ProximityCopeland => "ProximityCopeland",
            AxiomId::Iid => "IID",
            AxiomId::WinMonotonicity => "WinMonotonicity",
            AxiomId::WinDominance => "WinDominance",
            AxiomId::RareTies => "RareTies",
            AxiomId::ImmunitySpoilers => "ImmunitySpoilers",
            AxiomId::CondorcetCriterion => "CondorcetCriterion",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, AxiomError> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| AxiomError::Unknown(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("unknown axiom `{0}`")]
    Unknown(String),
    #[error("tournament has a zero margin between {0} and {1}")]
    ZeroMargin(String, String),
    #[error("tournament is not uniquely weighted")]
    NotUniquelyWeighted,
    #[error("axiom needs at least {needed} candidates, got {got}")]
    TooFewCandidates { needed: usize, got: usize },
}

/// How the counterexample's second tournament arises from the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    None,
    /// `m(a, x) += n`.
    ImproveMargin { a: CandidateId, x: CandidateId, n: i64 },
    /// `m(c, d) = value`.
    SetMargin { c: CandidateId, d: CandidateId, value: i64 },
    /// `m(a, x) += n` and `m(b, y) += n`.
    ImproveVictories {
        a: CandidateId,
        x: CandidateId,
        b: CandidateId,
        y: CandidateId,
        n: i64,
    },
    /// Delete candidate `b`.
    Remove { b: CandidateId },
}

impl Perturbation {
    pub fn apply(self, t: &WeightedTournament) -> Option<WeightedTournament> {
        match self {
            Perturbation::None => None,
            Perturbation::ImproveMargin { a, x, n } => t.improve_margin(a, x, n).ok(),
            Perturbation::SetMargin { c, d, value } => t.with_margin(c, d, value).ok(),
            Perturbation::ImproveVictories { a, x, b, y, n } => {
                t.improve_margin(a, x, n).and_then(|t| t.improve_margin(b, y, n)).ok()
            }
            Perturbation::Remove { b } => t.remove_candidate(b).ok(),
        }
    }

    pub fn describe(self, t: &WeightedTournament) -> String {
        let l = |c: CandidateId| t.label(c);
        match self {
            Perturbation::None => "none".to_string(),
            Perturbation::ImproveMargin { a, x, n } => format!("m({},{}) += {n}", l(a), l(x)),
            Perturbation::SetMargin { c, d, value } => format!("m({},{}) = {value}", l(c), l(d)),
            Perturbation::ImproveVictories { a, x, b, y, n } => {
                format!("m({},{}) += {n}, m({},{}) += {n}", l(a), l(x), l(b), l(y))
            }
            Perturbation::Remove { b } => format!("remove {}", l(b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: AxiomId,
    pub method: MethodId,
    pub primary: WeightedTournament,
    pub secondary: Option<WeightedTournament>,
    pub perturbation: Perturbation,
    /// Named candidates of `primary`.
    pub actors: Vec<(&'static str, CandidateId)>,
    pub n: Option<i64>,
    pub winners_before: CandidateSet,
    /// Winners on `secondary`, indexed by its own candidates.
    pub winners_after: Option<CandidateSet>,
}

impl Counterexample {
    pub fn actor(&self, name: &str) -> Option<CandidateId> {
        self.actors.iter().find(|(r, _)| *r == name).map(|&(_, c)| c)
    }

    /// Replays the perturbation, re-runs the method and re-checks the
    /// axiom-specific violation condition from scratch.
    pub fn verify(&self) -> Result<(), String> {
        let t = &self.primary;
        if self.perturbation.apply(t) != self.secondary {
            return Err("replayed perturbation does not reproduce the second tournament".into());
        }
        if winners(self.method, t) != self.winners_before {
            return Err("recorded winners differ from a fresh run".into());
        }
        if self.secondary.as_ref().map(|s| winners(self.method, s)) != self.winners_after {
            return Err("recorded winners after the perturbation differ from a fresh run".into());
        }
        let stays_in_domain = !t.is_uniquely_weighted() || self.secondary.as_ref().is_none_or(|s| s.is_uniquely_weighted());
        if matches!(self.axiom, AxiomId::Iid | AxiomId::WinMonotonicity) && !stays_in_domain {
            return Err("perturbation leaves the uniquely-weighted domain".into());
        }
        let get = |name: &str| self.actor(name).ok_or(format!("missing actor {name}"));
        let before = self.winners_before;
        let ok = match self.axiom {
            AxiomId::ProximityCondorcet => {
                let (a, b, n) = (get("A")?, get("B")?, self.n.ok_or("missing n")?);
                let a_wins = match &self.secondary {
                    Some(s) => s.condorcet_winner() == Some(a),
                    None => n == 0 && t.condorcet_winner() == Some(a),
                };
                a_wins
                    && matches!(self.perturbation, Perturbation::None | Perturbation::ImproveMargin { .. })
                    && t.improve_all_margins(b, n).map_err(|e| e.to_string())?.condorcet_winner() != Some(b)
                    && before.is_singleton(b)
            }
            AxiomId::ProximityCopeland => {
                let (a, b, n) = (get("A")?, get("B")?, self.n.ok_or("missing n")?);
                let unique = |t: &WeightedTournament, c| t.copeland_winners().0.is_singleton(c);
                let a_wins = match &self.secondary {
                    Some(s) => unique(s, a),
                    None => n == 0 && unique(t, a),
                };
                a_wins
                    && !unique(&t.improve_all_margins(b, n).map_err(|e| e.to_string())?, b)
                    && before.is_singleton(b)
            }
            AxiomId::Iid => {
                let (a, b, c, d) = (get("A")?, get("B")?, get("C")?, get("D")?);
                let distinct = [a, b].iter().all(|x| *x != c && *x != d);
                distinct
                    && matches!(self.perturbation, Perturbation::SetMargin { c: pc, d: pd, value } if pc == c && pd == d && value != 0)
                    && before.is_singleton(a)
                    && self.winners_after.is_some_and(|w| w.is_singleton(b))
            }
            AxiomId::WinMonotonicity => match self.perturbation {
                Perturbation::ImproveVictories { a, x, b, y, n } => {
                    n >= 0
                        && a != b
                        && y != a
                        && t.margin(a, x) > 0
                        && t.margin(b, y) > 0
                        && before.is_singleton(a)
                        && self.winners_after.is_some_and(|w| !w.is_singleton(a))
                }
                _ => false,
            },
            AxiomId::WinDominance => {
                let (a, b) = (get("A")?, get("B")?);
                t.dominates_in_wins(a, b).unwrap_or(false) && before.is_singleton(b)
            }
            AxiomId::RareTies => before.len() != 1,
            AxiomId::ImmunitySpoilers => {
                let (a, b, c) = (get("A")?, get("B")?, get("C")?);
                let a_in_reduced = CandidateId::new(a.index() - usize::from(a.index() > b.index()));
                matches!(self.perturbation, Perturbation::Remove { b: pb } if pb == b)
                    && t.margin(a, b) > 0
                    && self.winners_after.is_some_and(|w| w.is_singleton(a_in_reduced))
                    && c != a
                    && c != b
                    && before.is_singleton(c)
            }
            AxiomId::CondorcetCriterion => {
                let a = get("A")?;
                t.condorcet_winner() == Some(a) && !before.is_singleton(a)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{} violation condition does not hold on replay", self.axiom))
        }
    }

    /// Machine-readable form with candidates named by label.
    pub fn to_json(&self) -> Value {
        let t = &self.primary;
        let actors: serde_json::Map<String, Value> = self
            .actors
            .iter()
            .map(|&(r, c)| (r.to_string(), Value::from(t.label(c))))
            .collect();
        let mut tournaments = vec![Value::from(t.to_file_text())];
        if let Some(s) = &self.secondary {
            tournaments.push(Value::from(s.to_file_text()));
        }
        json!({
            "tournaments": tournaments,
            "perturbation": self.perturbation.describe(t),
            "actors": actors,
            "n": self.n,
            "winners_before": t.names(self.winners_before),
            "winners_after": self
                .secondary
                .as_ref()
                .zip(self.winners_after)
                .map(|(s, w)| s.names(w)),
        })
    }

    pub fn describe(&self) -> String {
        let t = &self.primary;
        let mut out = format!("{} violates {}", self.method, self.axiom);
        let actors: Vec<String> = self.actors.iter().map(|&(r, c)| format!("{r}={}", t.label(c))).collect();
        if !actors.is_empty() {
            out += &format!(" with {}", actors.join(" "));
        }
        if let Some(n) = self.n {
            out += &format!(", n={n}");
        }
        out += &format!("; winners {{{}}}", t.names(self.winners_before).join(","));
        if let (Some(s), Some(w)) = (&self.secondary, self.winners_after) {
            out += &format!(
                " become {{{}}} after {}",
                s.names(w).join(","),
                self.perturbation.describe(t)
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub method: MethodId,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl AxiomVerdict {
    fn holds(axiom: AxiomId, method: MethodId) -> Self {
        AxiomVerdict {
            axiom,
            method,
            holds: true,
            counterexample: None,
        }
    }

    fn violated(ce: Counterexample) -> Self {
        AxiomVerdict {
            axiom: ce.axiom,
            method: ce.method,
            holds: false,
            counterexample: Some(ce),
        }
    }
}

/// Default search bound for perturbation sizes and replacement margins.
pub fn default_bound(t: &WeightedTournament) -> i64 {
    t.max_abs_margin() + 1
}

fn zero_free(t: &WeightedTournament) -> Result<(), AxiomError> {
    match t.pairs().find(|&(a, b)| t.margin(a, b) == 0) {
        Some((a, b)) => Err(AxiomError::ZeroMargin(t.label(a).into(), t.label(b).into())),
        None => Ok(()),
    }
}

struct Witness {
    secondary: Option<WeightedTournament>,
    perturbation: Perturbation,
    actors: Vec<(&'static str, CandidateId)>,
    n: Option<i64>,
}

fn violation(axiom: AxiomId, method: MethodId, t: &WeightedTournament, before: CandidateSet, w: Witness) -> AxiomVerdict {
    let winners_after = w.secondary.as_ref().map(|s| winners(method, s));
    AxiomVerdict::violated(Counterexample {
        axiom,
        method,
        primary: t.clone(),
        secondary: w.secondary,
        perturbation: w.perturbation,
        actors: w.actors,
        n: w.n,
        winners_before: before,
        winners_after,
    })
}

/// Candidates `A` that could be made the Condorcet winner with a single
/// improvement no larger than `worst_loss(b)`, with the smallest such `n`.
/// A needs at most one loss; `n` is 0 without a loss and one more than the
/// loss otherwise.
pub fn proximity_condorcet_witnesses(t: &WeightedTournament, b: CandidateId) -> Vec<(CandidateId, i64)> {
    let limit = t.worst_loss(b);
    t.candidates()
        .filter(|&a| a != b)
        .filter_map(|a| {
            let losses = t.loss_profile(a);
            let n = match losses.count() {
                0 => 0,
                1 => losses.worst() + 1,
                _ => return None,
            };
            (n <= limit).then_some((a, n))
        })
        .collect()
}

/// The same pairs as [`proximity_condorcet_witnesses`], found by trying
/// every `n` in `0..=bound` and every single-margin improvement.
pub fn proximity_condorcet_by_search(t: &WeightedTournament, b: CandidateId, bound: i64) -> Vec<(CandidateId, i64)> {
    let mut out = Vec::new();
    for a in t.candidates().filter(|&a| a != b) {
        for n in 0..=bound {
            let a_can_win = t
                .candidates()
                .filter(|&x| x != a)
                .any(|x| t.improve_margin(a, x, n).unwrap().condorcet_winner() == Some(a));
            let b_cannot = t.improve_all_margins(b, n).unwrap().condorcet_winner() != Some(b);
            if a_can_win && b_cannot {
                out.push((a, n));
                break;
            }
        }
    }
    out
}

pub fn check_proximity_condorcet(method: MethodId, t: &WeightedTournament) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::ProximityCondorcet;
    zero_free(t)?;
    let before = winners(method, t);
    let Some(b) = before.as_singleton() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    let Some(&(a, n)) = proximity_condorcet_witnesses(t, b).first() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    let mut actors = vec![("A", a), ("B", b)];
    let (secondary, perturbation) = match t.loss_profile(a).losses.first() {
        Some(&(x, _)) => {
            actors.push(("X", x));
            let p = Perturbation::ImproveMargin { a, x, n };
            (p.apply(t), p)
        }
        None => (None, Perturbation::None),
    };
    Ok(violation(axiom, method, t, before, Witness { secondary, perturbation, actors, n: Some(n) }))
}

pub fn check_proximity_copeland(
    method: MethodId,
    t: &WeightedTournament,
    bound: Option<i64>,
) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::ProximityCopeland;
    zero_free(t)?;
    let bound = bound.unwrap_or_else(|| default_bound(t));
    let before = winners(method, t);
    let Some(b) = before.as_singleton() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    let unique = |t: &WeightedTournament, c| t.copeland_winners().0.is_singleton(c);
    let mut scratch = t.clone();
    for n in 0..=bound {
        // once B becomes the unique Copeland winner, larger n keeps it there
        if unique(&t.improve_all_margins(b, n).unwrap(), b) {
            break;
        }
        for a in t.candidates().filter(|&a| a != b) {
            if n == 0 {
                if unique(t, a) {
                    let w = Witness { secondary: None, perturbation: Perturbation::None, actors: vec![("A", a), ("B", b)], n: Some(0) };
                    return Ok(violation(axiom, method, t, before, w));
                }
                continue;
            }
            for x in t.candidates().filter(|&x| x != a) {
                let m = t.margin(a, x);
                scratch.set_margin(a, x, m + n);
                let hit = unique(&scratch, a);
                scratch.set_margin(a, x, m);
                if hit {
                    let perturbation = Perturbation::ImproveMargin { a, x, n };
                    let w = Witness {
                        secondary: perturbation.apply(t),
                        perturbation,
                        actors: vec![("A", a), ("B", b), ("X", x)],
                        n: Some(n),
                    };
                    return Ok(violation(axiom, method, t, before, w));
                }
            }
        }
    }
    Ok(AxiomVerdict::holds(axiom, method))
}

/// Whether some pair outside `changed` already has magnitude `v`.
fn magnitude_in_use(t: &WeightedTournament, v: i64, changed: &[(CandidateId, CandidateId)]) -> bool {
    let same = |(p, q): (CandidateId, CandidateId), (c, d): (CandidateId, CandidateId)| {
        (p == c && q == d) || (p == d && q == c)
    };
    t.pairs()
        .any(|pq| t.margin(pq.0, pq.1).abs() == v && !changed.iter().any(|&cd| same(pq, cd)))
}

fn replacement_values(original: i64, bound: i64) -> impl Iterator<Item = i64> {
    (-bound..=bound).filter(move |&v| v != 0 && v != original && (v - original) % 2 == 0)
}

pub fn check_iid(method: MethodId, t: &WeightedTournament, bound: Option<i64>) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::Iid;
    zero_free(t)?;
    let bound = bound.unwrap_or_else(|| default_bound(t));
    let before = winners(method, t);
    let Some(a) = before.as_singleton() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    let domain = t.is_uniquely_weighted();
    let mut scratch = t.clone();
    for (c, d) in t.pairs().filter(|&(c, d)| c != a && d != a) {
        let original = t.margin(c, d);
        for value in replacement_values(original, bound) {
            if domain && magnitude_in_use(t, value.abs(), &[(c, d)]) {
                continue;
            }
            scratch.set_margin(c, d, value);
            let after = winners(method, &scratch);
            if let Some(b) = after.as_singleton().filter(|&b| b != a && b != c && b != d) {
                let perturbation = Perturbation::SetMargin { c, d, value };
                let w = Witness {
                    secondary: Some(scratch),
                    perturbation,
                    actors: vec![("A", a), ("B", b), ("C", c), ("D", d)],
                    n: None,
                };
                return Ok(violation(axiom, method, t, before, w));
            }
        }
        scratch.set_margin(c, d, original);
    }
    Ok(AxiomVerdict::holds(axiom, method))
}

pub fn check_win_monotonicity(
    method: MethodId,
    t: &WeightedTournament,
    bound: Option<i64>,
) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::WinMonotonicity;
    zero_free(t)?;
    let bound = bound.unwrap_or_else(|| default_bound(t));
    let before = winners(method, t);
    let Some(a) = before.as_singleton() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    let domain = t.is_uniquely_weighted();
    let mut scratch = t.clone();
    for x in t.candidates().filter(|&x| t.margin(a, x) > 0) {
        for b in t.candidates().filter(|&b| b != a) {
            for y in t.candidates().filter(|&y| y != a && t.margin(b, y) > 0) {
                let (max, mby) = (t.margin(a, x), t.margin(b, y));
                for n in 1..=bound {
                    let changed = [(a, x), (b, y)];
                    if domain
                        && (max + n == mby + n
                            || magnitude_in_use(t, max + n, &changed)
                            || magnitude_in_use(t, mby + n, &changed))
                    {
                        continue;
                    }
                    scratch.set_margin(a, x, max + n);
                    scratch.set_margin(b, y, mby + n);
                    if !winners(method, &scratch).is_singleton(a) {
                        let perturbation = Perturbation::ImproveVictories { a, x, b, y, n };
                        let w = Witness {
                            secondary: Some(scratch),
                            perturbation,
                            actors: vec![("A", a), ("X", x), ("B", b), ("Y", y)],
                            n: Some(n),
                        };
                        return Ok(violation(axiom, method, t, before, w));
                    }
                }
                scratch.set_margin(a, x, max);
                scratch.set_margin(b, y, mby);
            }
        }
    }
    Ok(AxiomVerdict::holds(axiom, method))
}

pub fn check_win_dominance(method: MethodId, t: &WeightedTournament) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::WinDominance;
    zero_free(t)?;
    let before = winners(method, t);
    if let Some(b) = before.as_singleton() {
        if let Some(a) = t.candidates().find(|&a| a != b && t.dominates_in_wins(a, b).unwrap()) {
            let w = Witness { secondary: None, perturbation: Perturbation::None, actors: vec![("A", a), ("B", b)], n: None };
            return Ok(violation(axiom, method, t, before, w));
        }
    }
    Ok(AxiomVerdict::holds(axiom, method))
}

pub fn check_rare_ties(method: MethodId, t: &WeightedTournament) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::RareTies;
    if !t.is_uniquely_weighted() && t.len() > 1 {
        return Err(AxiomError::NotUniquelyWeighted);
    }
    let before = winners(method, t);
    if before.len() == 1 {
        return Ok(AxiomVerdict::holds(axiom, method));
    }
    let w = Witness { secondary: None, perturbation: Perturbation::None, actors: Vec::new(), n: None };
    Ok(violation(axiom, method, t, before, w))
}

pub fn check_immunity_spoilers(method: MethodId, t: &WeightedTournament) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::ImmunitySpoilers;
    if t.len() < 3 {
        return Err(AxiomError::TooFewCandidates { needed: 3, got: t.len() });
    }
    zero_free(t)?;
    let before = winners(method, t);
    let Some(c) = before.as_singleton() else {
        return Ok(AxiomVerdict::holds(axiom, method));
    };
    for b in t.candidates().filter(|&b| b != c) {
        let reduced = t.remove_candidate(b).unwrap();
        let Some(r) = winners(method, &reduced).as_singleton() else {
            continue;
        };
        let a = CandidateId::new(r.index() + usize::from(r.index() >= b.index()));
        if a != c && t.margin(a, b) > 0 {
            let w = Witness {
                secondary: Some(reduced),
                perturbation: Perturbation::Remove { b },
                actors: vec![("A", a), ("B", b), ("C", c)],
                n: None,
            };
            return Ok(violation(axiom, method, t, before, w));
        }
    }
    Ok(AxiomVerdict::holds(axiom, method))
}

pub fn check_condorcet_criterion(method: MethodId, t: &WeightedTournament) -> Result<AxiomVerdict, AxiomError> {
    let axiom = AxiomId::CondorcetCriterion;
    let before = winners(method, t);
    match t.condorcet_winner() {
        Some(a) if !before.is_singleton(a) => {
            let w = Witness { secondary: None, perturbation: Perturbation::None, actors: vec![("A", a)], n: None };
            Ok(violation(axiom, method, t, before, w))
        }
        _ => Ok(AxiomVerdict::holds(axiom, method)),
    }
}

/// Dispatches to the checker for `axiom`; `bound` applies to the searches
/// that take one and defaults to `max |m| + 1`.
pub fn check(axiom: AxiomId, method: MethodId, t: &WeightedTournament, bound: Option<i64>) -> Result<AxiomVerdict, AxiomError> {
    match axiom {
        AxiomId::ProximityCondorcet => check_proximity_condorcet(method, t),
        AxiomId::ProximityCopeland => check_proximity_copeland(method, t, bound),
        AxiomId::Iid => check_iid(method, t, bound),
        AxiomId::WinMonotonicity => check_win_monotonicity(method, t, bound),
        AxiomId::WinDominance => check_win_dominance(method, t),
        AxiomId::RareTies => check_rare_ties(method, t),
        AxiomId::ImmunitySpoilers => check_immunity_spoilers(method, t),
        AxiomId::CondorcetCriterion => check_condorcet_criterion(method, t),
    }
}
