//! Ranked ballots (linear orders with bottom indifference), their margins, and
//! constructive realizations of a target tournament as a ballot profile.
//!
//! Ballot text format:
//!
//! ```text
//! candidates: A,B,C      # optional; otherwise inferred in order of appearance
//! 3: A>B>C
//! B>C                    # count defaults to 1, A is unranked
//! ```

use std::sync::Arc;

use thiserror::Error;

use crate::tournament::{validate_labels, CandidateId, TournamentError, WeightedTournament};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown candidate `{label}`")]
    UnknownCandidate { line: usize, label: String },
    #[error("line {line}: candidate `{label}` ranked twice")]
    DuplicateInBallot { line: usize, label: String },
    #[error("line {line}: ballot count must be a positive integer")]
    InvalidCount { line: usize },
    #[error("profile has no voters")]
    NoVoters,
    #[error("margins do not all have {0} parity")]
    ParityMismatch(Parity),
    #[error("realization infeasible: {0}")]
    Infeasible(String),
    #[error("not a tournament: {0} and {1} are tied")]
    NotATournament(String, String),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}` (expected even|odd)")),
        }
    }
}

/// A strict ranking of some candidates; the rest are tied at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    pub ranked: Vec<CandidateId>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    labels: Arc<[String]>,
    ballots: Vec<Ballot>,
}

impl Profile {
    pub fn new<L, S>(labels: L) -> Result<Self, ProfileError>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(Profile {
            labels: validate_labels(labels)?.into(),
            ballots: Vec::new(),
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn voter_count(&self) -> u64 {
        self.ballots.iter().map(|b| b.count).sum()
    }

    /// Adds `count` copies of `ranked`, merging with an identical ballot.
    pub fn add(&mut self, ranked: Vec<CandidateId>, count: u64) {
        assert!(count > 0, "ballot count must be positive");
        debug_assert!(ranked.iter().all(|c| c.index() < self.labels.len()));
        if let Some(b) = self.ballots.iter_mut().find(|b| b.ranked == ranked) {
            b.count += count;
        } else {
            self.ballots.push(Ballot { ranked, count });
        }
    }

    /// Adds a linear order and its exact reverse, one voter each.
    pub fn add_reversed_pair(&mut self, ranked: Vec<CandidateId>) {
        let mut rev = ranked.clone();
        rev.reverse();
        self.add(ranked, 1);
        self.add(rev, 1);
    }

    /// Renders the ballot text format, header included.
    pub fn to_text(&self) -> String {
        let mut out = format!("candidates: {}\n", self.labels.join(","));
        for b in &self.ballots {
            let names: Vec<&str> = b.ranked.iter().map(|c| self.labels[c.index()].as_str()).collect();
            out.push_str(&format!("{}: {}\n", b.count, names.join(">")));
        }
        out
    }
}

/// Parses the ballot text format.
pub fn parse_ballots(text: &str) -> Result<Profile, ProfileError> {
    let mut header: Option<Vec<String>> = None;
    let mut inferred: Vec<String> = Vec::new();
    let mut parsed: Vec<(usize, Vec<String>, u64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("candidates:") {
            if header.is_some() || !parsed.is_empty() {
                return Err(ProfileError::Parse {
                    line,
                    message: "`candidates:` header must come first and only once".into(),
                });
            }
            let names = rest.split(',').map(|s| s.trim().to_string());
            header = Some(validate_labels(names).map_err(|e| ProfileError::Parse {
                line,
                message: e.to_string(),
            })?);
            continue;
        }
        let (count, ranking) = match body.split_once(':') {
            Some((c, r)) => {
                let count: u64 = c.trim().parse().map_err(|_| ProfileError::InvalidCount { line })?;
                (count, r.trim())
            }
            None => (1, body),
        };
        if count == 0 {
            return Err(ProfileError::InvalidCount { line });
        }
        let names: Vec<String> = ranking.split('>').map(|s| s.trim().to_string()).collect();
        if names.iter().any(|n| n.is_empty()) {
            return Err(ProfileError::Parse {
                line,
                message: format!("malformed ranking `{ranking}`"),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(ProfileError::DuplicateInBallot {
                    line,
                    label: n.clone(),
                });
            }
            match &header {
                Some(h) if !h.contains(n) => {
                    return Err(ProfileError::UnknownCandidate {
                        line,
                        label: n.clone(),
                    })
                }
                Some(_) => {}
                None if !inferred.contains(n) => inferred.push(n.clone()),
                None => {}
            }
        }
        parsed.push((line, names, count));
    }

    let labels = match header {
        Some(h) => h,
        None if inferred.is_empty() => return Err(ProfileError::NoVoters),
        None => validate_labels(inferred).map_err(|e| ProfileError::Parse {
            line: 0,
            message: e.to_string(),
        })?,
    };
    let mut profile = Profile::new(labels)?;
    for (_, names, count) in parsed {
        let ranked = names
            .iter()
            .map(|n| CandidateId::new(profile.labels.iter().position(|l| l == n).unwrap()))
            .collect();
        profile.add(ranked, count);
    }
    if profile.voter_count() == 0 {
        return Err(ProfileError::NoVoters);
    }
    Ok(profile)
}

/// The profile's associated weighted tournament.
///
/// Each voter contributes +1 to `m(A, B)` when ranking `A` strictly above
/// `B`; two unranked candidates are tied and contribute nothing to each other.
pub fn margins_of_profile(profile: &Profile) -> WeightedTournament {
    let k = profile.labels.len();
    let mut margins = vec![0i64; k * k];
    let mut ranked_mask = vec![false; k];
    for ballot in &profile.ballots {
        let c = ballot.count as i64;
        ranked_mask.iter_mut().for_each(|m| *m = false);
        for r in &ballot.ranked {
            ranked_mask[r.index()] = true;
        }
        for (i, a) in ballot.ranked.iter().enumerate() {
            let below = ballot.ranked[i + 1..]
                .iter()
                .map(|b| b.index())
                .chain((0..k).filter(|&u| !ranked_mask[u]));
            for b in below {
                margins[a.index() * k + b] += c;
                margins[b * k + a.index()] -= c;
            }
        }
    }
    WeightedTournament::from_parts(profile.labels.clone(), margins)
}

/// Adds `t` copies of `A>B>R` and `t` of `reverse(R)>A>B`: net +2t on `(A, B)`, 0 elsewhere.
fn add_pair_gadget(profile: &mut Profile, a: CandidateId, b: CandidateId, t: u64, k: usize) {
    let rest: Vec<CandidateId> = (0..k)
        .map(CandidateId::new)
        .filter(|&x| x != a && x != b)
        .collect();
    let mut first = vec![a, b];
    first.extend(&rest);
    let mut second: Vec<CandidateId> = rest.iter().rev().copied().collect();
    second.extend([a, b]);
    profile.add(first, t);
    profile.add(second, t);
}

/// Builds a profile of linear orders whose margins equal `target` exactly.
///
/// Requires every off-diagonal margin to have the requested parity. Odd
/// targets first subtract one base ballot in candidate order, which leaves
/// even margins the pair gadget can express.
pub fn debord_realize(target: &WeightedTournament, parity: Parity) -> Result<Profile, ProfileError> {
    let k = target.len();
    let want_odd = parity == Parity::Odd;
    if target
        .pairs()
        .any(|(a, b)| (target.margin(a, b).rem_euclid(2) == 1) != want_odd)
    {
        return Err(ProfileError::ParityMismatch(parity));
    }
    let mut profile = Profile {
        labels: target.shared_labels().clone(),
        ballots: Vec::new(),
    };
    let mut remaining = target.clone();
    if want_odd {
        let base: Vec<CandidateId> = target.candidates().collect();
        for (a, b) in target.pairs() {
            remaining.set_margin(a, b, target.margin(a, b) - 1);
        }
        profile.add(base, 1);
    }
    for (a, b) in target.pairs() {
        let m = remaining.margin(a, b);
        debug_assert_eq!(m % 2, 0);
        if m > 0 {
            add_pair_gadget(&mut profile, a, b, (m / 2) as u64, k);
        } else if m < 0 {
            add_pair_gadget(&mut profile, b, a, (-m / 2) as u64, k);
        }
    }
    if profile.voter_count() == 0 {
        // all-zero target: a neutral reversal pair keeps the profile nonempty
        profile.add_reversed_pair(target.candidates().collect());
    }
    if margins_of_profile(&profile) != *target {
        return Err(ProfileError::Infeasible(
            "constructed profile does not reproduce the target".into(),
        ));
    }
    Ok(profile)
}

/// Builds a profile whose margins have the sign pattern of `target`; every
/// defeat is realized with margin +2.
pub fn mcgarvey_realize(target: &WeightedTournament) -> Result<Profile, ProfileError> {
    let k = target.len();
    let mut profile = Profile {
        labels: target.shared_labels().clone(),
        ballots: Vec::new(),
    };
    for (a, b) in target.pairs() {
        match target.margin(a, b) {
            0 => {
                return Err(ProfileError::NotATournament(
                    target.label(a).to_string(),
                    target.label(b).to_string(),
                ))
            }
            m if m > 0 => add_pair_gadget(&mut profile, a, b, 1, k),
            _ => add_pair_gadget(&mut profile, b, a, 1, k),
        }
    }
    if profile.ballots.is_empty() {
        profile.add(target.candidates().collect(), 1);
    }
    Ok(profile)
}
