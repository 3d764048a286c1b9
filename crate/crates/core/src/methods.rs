//! Weighted tournament solutions.
//!
//! Every method is a short pipeline of stages over a shrinking pool of
//! candidates: Copeland (most wins), a loss statistic, the symmetric Borda
//! score, or the uncovered-set filter. Ties survive every stage; nothing is
//! broken silently.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tournament::{CandidateId, CandidateSet, WeightedTournament};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MethodError {
    #[error("unknown method `{0}`")]
    Unknown(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodId {
    Copeland,
    Minimax,
    /// Most Wins, Smallest Loss.
    Mwsl,
    VariantLocalMin,
    /// Copeland-Global-Minimax.
    Cgm,
    /// Copeland-Local-Minimax.
    Clm,
    /// Copeland-Global-Borda.
    Cgb,
    CgbPlus,
    UncoveredMinimax,
    GFixture,
}

impl MethodId {
    pub const ALL: [MethodId; 10] = [
        MethodId::Copeland,
        MethodId::Minimax,
        MethodId::Mwsl,
        MethodId::VariantLocalMin,
        MethodId::Cgm,
        MethodId::Clm,
        MethodId::Cgb,
        MethodId::CgbPlus,
        MethodId::UncoveredMinimax,
        MethodId::GFixture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::Copeland => "copeland",
            MethodId::Minimax => "minimax",
            MethodId::Mwsl => "mwsl",
            MethodId::VariantLocalMin => "variant_local_min",
            MethodId::Cgm => "cgm",
            MethodId::Clm => "clm",
            MethodId::Cgb => "cgb",
            MethodId::CgbPlus => "cgb_plus",
            MethodId::UncoveredMinimax => "uncovered_minimax",
            MethodId::GFixture => "g_fixture",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodId {
    type Err = MethodError;

    fn from_str(s: &str) -> Result<Self, MethodError> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| MethodError::Unknown(s.to_string()))
    }
}

/// Which opponents count when measuring a candidate's losses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Losses to anyone.
    Global,
    /// Losses to other members of the current pool (the Copeland winners).
    Local,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LossStat {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Stage {
    /// Keep the candidates with the most head-to-head wins.
    Copeland,
    /// Keep the candidates whose loss statistic is smallest (empty set counts as 0).
    Loss { scope: Scope, stat: LossStat },
    /// Keep the candidates with the greatest sum of margins.
    SymmetricBorda,
    /// Keep the uncovered candidates.
    Uncovered,
    /// Fixed output for the hard-coded counterexample shape.
    Pattern,
}

impl Stage {
    pub fn describe(self) -> &'static str {
        match self {
            Stage::Copeland => "most head-to-head wins",
            Stage::Loss {
                scope: Scope::Global,
                stat: LossStat::Min,
            } => "smallest loss",
            Stage::Loss {
                scope: Scope::Global,
                stat: LossStat::Max,
            } => "smallest worst loss",
            Stage::Loss {
                scope: Scope::Local,
                stat: LossStat::Min,
            } => "smallest loss within the group",
            Stage::Loss {
                scope: Scope::Local,
                stat: LossStat::Max,
            } => "smallest worst loss within the group",
            Stage::SymmetricBorda => "greatest symmetric Borda score",
            Stage::Uncovered => "uncovered",
            Stage::Pattern => "fixed counterexample shape",
        }
    }
}

const MWSL: &[Stage] = &[
    Stage::Copeland,
    Stage::Loss {
        scope: Scope::Global,
        stat: LossStat::Min,
    },
];
const MINIMAX_STEP: Stage = Stage::Loss {
    scope: Scope::Global,
    stat: LossStat::Max,
};

fn stages(method: MethodId) -> &'static [Stage] {
    use LossStat::*;
    use Scope::*;
    match method {
        MethodId::Copeland => &[Stage::Copeland],
        MethodId::Minimax => &[MINIMAX_STEP],
        MethodId::Mwsl | MethodId::GFixture => MWSL,
        MethodId::VariantLocalMin => &[
            Stage::Copeland,
            Stage::Loss {
                scope: Local,
                stat: Min,
            },
        ],
        MethodId::Cgm => &[Stage::Copeland, MINIMAX_STEP],
        MethodId::Clm => &[
            Stage::Copeland,
            Stage::Loss {
                scope: Local,
                stat: Max,
            },
        ],
        MethodId::Cgb => &[Stage::Copeland, Stage::SymmetricBorda],
        MethodId::CgbPlus => &[Stage::Copeland, Stage::SymmetricBorda, MINIMAX_STEP],
        MethodId::UncoveredMinimax => &[Stage::Uncovered, MINIMAX_STEP],
    }
}

/// One stage of a selection: the scores it looked at and who survived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub stage: Stage,
    pub scores: Vec<(CandidateId, i64)>,
    pub kept: CandidateSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTrace {
    pub method: MethodId,
    pub steps: Vec<TraceStep>,
}

impl SelectionTrace {
    /// The first stage after which a single candidate remained.
    pub fn decided_at(&self) -> Option<Stage> {
        self.steps
            .iter()
            .find(|s| s.kept.len() == 1)
            .map(|s| s.stage)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionResult {
    pub winners: CandidateSet,
    pub trace: SelectionTrace,
}

impl SelectionResult {
    pub fn unique(&self) -> Option<CandidateId> {
        self.winners.as_singleton()
    }
}

#[inline]
fn stage_score(t: &WeightedTournament, stage: Stage, pool: CandidateSet, x: CandidateId) -> i64 {
    match stage {
        Stage::Copeland => t.wins(x) as i64,
        Stage::Loss { scope, stat } => {
            let among = match scope {
                Scope::Global => t.all(),
                Scope::Local => pool,
            };
            match stat {
                LossStat::Min => t.smallest_loss_among(x, among),
                LossStat::Max => t.worst_loss_among(x, among),
            }
        }
        Stage::SymmetricBorda => t.symmetric_borda(x),
        Stage::Uncovered | Stage::Pattern => unreachable!("filter stages have no score"),
    }
}

fn maximizes(stage: Stage) -> bool {
    matches!(stage, Stage::Copeland | Stage::SymmetricBorda)
}

fn apply_stage(
    t: &WeightedTournament,
    stage: Stage,
    pool: CandidateSet,
    trace: Option<&mut Vec<TraceStep>>,
) -> CandidateSet {
    if stage == Stage::Uncovered {
        let kept = CandidateSet::from_iter(t.uncovered_set().iter().filter(|&c| pool.contains(c)));
        if let Some(trace) = trace {
            let scores = pool.iter().map(|c| (c, kept.contains(c) as i64)).collect();
            trace.push(TraceStep { stage, scores, kept });
        }
        return kept;
    }
    let mut best = 0;
    let mut kept = CandidateSet::empty();
    let mut scores = trace.as_ref().map(|_| Vec::with_capacity(pool.len()));
    for x in pool {
        let s = stage_score(t, stage, pool, x);
        if let Some(scores) = scores.as_mut() {
            scores.push((x, s));
        }
        let better = if maximizes(stage) { s > best } else { s < best };
        if kept.is_empty() || better {
            best = s;
            kept = CandidateSet::singleton(x);
        } else if s == best {
            kept.insert(x);
        }
    }
    if let (Some(trace), Some(scores)) = (trace, scores) {
        trace.push(TraceStep { stage, scores, kept });
    }
    kept
}

fn run(
    t: &WeightedTournament,
    stages: &[Stage],
    mut pool: CandidateSet,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> CandidateSet {
    for &stage in stages {
        pool = apply_stage(t, stage, pool, trace.as_deref_mut());
    }
    pool
}

/// Winner set of `method` on `t`, without building a trace.
pub fn winners(method: MethodId, t: &WeightedTournament) -> CandidateSet {
    if method == MethodId::GFixture {
        if let Some(s) = g_pattern(t) {
            return CandidateSet::singleton(s);
        }
    }
    run(t, stages(method), t.all(), None)
}

/// Runs `method` on `t` and records every stage.
pub fn select(method: MethodId, t: &WeightedTournament) -> SelectionResult {
    let mut steps = Vec::new();
    let winners = if method == MethodId::GFixture && g_pattern(t).is_some() {
        let s = CandidateSet::singleton(g_pattern(t).unwrap());
        steps.push(TraceStep {
            stage: Stage::Pattern,
            scores: Vec::new(),
            kept: s,
        });
        s
    } else {
        run(t, stages(method), t.all(), Some(&mut steps))
    };
    SelectionResult {
        winners,
        trace: SelectionTrace { method, steps },
    }
}

pub fn copeland_select(t: &WeightedTournament) -> SelectionResult {
    select(MethodId::Copeland, t)
}

pub fn minimax_select(t: &WeightedTournament) -> SelectionResult {
    select(MethodId::Minimax, t)
}

/// Copeland winners refined by a loss statistic: `(Global, Min)` is MWSL,
/// `(Global, Max)` CGM, `(Local, Max)` CLM and `(Local, Min)` the variant.
pub fn copeland_then_loss(t: &WeightedTournament, scope: Scope, stat: LossStat) -> SelectionResult {
    let method = match (scope, stat) {
        (Scope::Global, LossStat::Min) => MethodId::Mwsl,
        (Scope::Global, LossStat::Max) => MethodId::Cgm,
        (Scope::Local, LossStat::Min) => MethodId::VariantLocalMin,
        (Scope::Local, LossStat::Max) => MethodId::Clm,
    };
    select(method, t)
}

pub fn cgb_select(t: &WeightedTournament) -> SelectionResult {
    select(MethodId::Cgb, t)
}

/// `base` followed by a final Minimax tie-break over its winners.
pub fn plus_refine(base: MethodId, t: &WeightedTournament) -> SelectionResult {
    let mut result = select(base, t);
    result.winners = apply_stage(t, MINIMAX_STEP, result.winners, Some(&mut result.trace.steps));
    result
}

pub fn uncovered_minimax_select(t: &WeightedTournament) -> SelectionResult {
    select(MethodId::UncoveredMinimax, t)
}

pub fn g_select(t: &WeightedTournament) -> SelectionResult {
    select(MethodId::GFixture, t)
}

/// Matches the four-candidate shape on which the fixture method deviates:
/// roles W, N, E, S with `m(W,N) > 10` and exactly `m(N,E) = 10`,
/// `m(E,W) = 6`, `m(S,W) = 8`, `m(N,S) = 4`, `m(E,S) = 2`. Returns S.
pub fn g_pattern(t: &WeightedTournament) -> Option<CandidateId> {
    if t.len() != 4 {
        return None;
    }
    // E is the only candidate with m(E, S) = 2 and m(E, W) = 6
    let id = CandidateId::new;
    for e in 0..4 {
        for s in 0..4 {
            if s == e || t.margin(id(e), id(s)) != 2 {
                continue;
            }
            for w in 0..4 {
                if w == e || w == s || t.margin(id(e), id(w)) != 6 {
                    continue;
                }
                let n = 6 - e - s - w;
                let (w, n, e, s) = (id(w), id(n), id(e), id(s));
                if t.margin(w, n) > 10
                    && t.margin(n, e) == 10
                    && t.margin(s, w) == 8
                    && t.margin(n, s) == 4
                {
                    return Some(s);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::fixtures::*;

    fn names(t: &WeightedTournament, r: &SelectionResult) -> Vec<String> {
        t.names(r.winners).into_iter().map(String::from).collect()
    }

    fn fig2_right() -> WeightedTournament {
        let t = fig2_left();
        t.with_margin(t.id("W").unwrap(), t.id("S").unwrap(), 4).unwrap()
    }

    fn t_g(wn: i64) -> WeightedTournament {
        WeightedTournament::build(
            ["W", "N", "E", "S"],
            [
                ("W", "N", wn),
                ("N", "E", 10),
                ("E", "W", 6),
                ("S", "W", 8),
                ("N", "S", 4),
                ("E", "S", 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn method_names_round_trip() {
        for m in MethodId::ALL {
            assert_eq!(m.name().parse::<MethodId>().unwrap(), m);
        }
        assert_eq!("ranked_pairs".parse::<MethodId>(), Err(MethodError::Unknown("ranked_pairs".into())));
    }

    #[test]
    fn four_cycle_winners() {
        let t = fig2_left();
        assert_eq!(names(&t, &select(MethodId::Mwsl, &t)), ["E"]);
        assert_eq!(names(&t, &select(MethodId::VariantLocalMin, &t)), ["N"]);
        assert_eq!(names(&t, &select(MethodId::Copeland, &t)), ["N", "E"]);
        let r = fig2_right();
        assert_eq!(names(&r, &select(MethodId::Mwsl, &r)), ["E"]);
        assert_eq!(names(&r, &copeland_then_loss(&r, Scope::Local, LossStat::Min)), ["E"]);
    }

    #[test]
    fn cgb_fixture() {
        let t = cgb();
        assert_eq!(names(&t, &copeland_select(&t)), ["W", "N", "E"]);
        assert_eq!(names(&t, &select(MethodId::CgbPlus, &t)), ["E"]);
        assert_eq!(names(&t, &plus_refine(MethodId::Cgb, &t)), ["E"]);
        assert_eq!(names(&t, &select(MethodId::Mwsl, &t)), ["N"]);
        let plus = plus_refine(MethodId::Copeland, &t);
        assert!(plus.winners.is_subset(copeland_select(&t).winners));
    }

    #[test]
    fn condorcet_winner_everywhere() {
        let t = linear_order();
        for m in MethodId::ALL {
            assert_eq!(names(&t, &select(m, &t)), ["N"], "{m}");
        }
    }

    #[test]
    fn minimax_worst_losses() {
        let t = uncovered_minimax();
        let r = minimax_select(&t);
        assert_eq!(r.trace.steps[0].scores.iter().map(|s| s.1).collect::<Vec<_>>(), [4, 8, 6, 12]);
        assert_eq!(names(&t, &r), ["W"]);
        let p = pentagram();
        let r = minimax_select(&p);
        assert_eq!(r.trace.steps[0].scores.iter().map(|s| s.1).collect::<Vec<_>>(), [6, 5, 10, 12, 16]);
        assert_eq!(names(&p, &r), ["b"]);
    }

    #[test]
    fn pentagram_min_vs_max() {
        let t = pentagram();
        assert_eq!(names(&t, &copeland_select(&t)), ["a", "b", "c", "d", "e"]);
        assert_eq!(names(&t, &copeland_then_loss(&t, Scope::Global, LossStat::Min)), ["a"]);
        assert_eq!(names(&t, &copeland_then_loss(&t, Scope::Global, LossStat::Max)), ["b"]);
        let r = select(MethodId::Cgm, &t);
        assert_eq!(r.trace.decided_at(), Some(MINIMAX_STEP));
    }

    #[test]
    fn unique_copeland_winner_short_circuits() {
        let t = linear_order().remove_candidate(CandidateId::new(0)).unwrap();
        for (scope, stat) in [
            (Scope::Global, LossStat::Min),
            (Scope::Global, LossStat::Max),
            (Scope::Local, LossStat::Min),
            (Scope::Local, LossStat::Max),
        ] {
            let r = copeland_then_loss(&t, scope, stat);
            assert_eq!(names(&t, &r), ["W"]);
            assert_eq!(r.trace.decided_at(), Some(Stage::Copeland));
        }
    }

    #[test]
    fn uncovered_minimax_fixture() {
        let t = uncovered_minimax();
        assert_eq!(names(&t, &uncovered_minimax_select(&t)), ["W"]);
        let flipped = t.with_margin(t.id("S").unwrap(), t.id("N").unwrap(), 10).unwrap();
        assert_eq!(names(&flipped, &uncovered_minimax_select(&flipped)), ["E"]);
    }

    #[test]
    fn g_fixture_shape() {
        let t = t_g(12);
        assert_eq!(names(&t, &g_select(&t)), ["S"]);
        assert_eq!(g_select(&t).trace.decided_at(), Some(Stage::Pattern));
        assert_eq!(names(&t, &select(MethodId::Mwsl, &t)), ["E"]);
        // both victories over W improved by 1: now just MWSL
        let bumped = t.with_margin(t.id("S").unwrap(), t.id("W").unwrap(), 9).unwrap();
        let bumped = bumped.with_margin(t.id("E").unwrap(), t.id("W").unwrap(), 7).unwrap();
        assert_eq!(names(&bumped, &g_select(&bumped)), ["E"]);
        // m(W,N) = 10 is not of the form
        assert_eq!(g_pattern(&t_g(10)), None);
        // relabeled copies still match
        let perm = t.permuted(&[2, 0, 3, 1]);
        assert_eq!(perm.label(g_pattern(&perm).unwrap()), "S");
        let three = t.remove_candidate(CandidateId::new(3)).unwrap();
        assert_eq!(g_select(&three).winners, select(MethodId::Mwsl, &three).winners);
    }
}
