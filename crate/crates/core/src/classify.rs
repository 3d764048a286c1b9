//! Named classes of uniquely-weighted tournaments on four and five candidates.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::tournament::{CandidateId, WeightedTournament};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("classification needs {expected} candidates, got {got}")]
    WrongSize { expected: &'static str, got: usize },
    #[error("tournament is not uniquely weighted")]
    NotUniquelyWeighted,
    #[error("no reference digraph matches; the class table is incomplete")]
    NoMatch,
    #[error("tournaments have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("isomorphism search supports at most 7 candidates, got {0}")]
    TooLarge(usize),
    #[error("class {0} does not describe this tournament")]
    ClassMismatch(ClassLabel),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassLabel {
    LinearOrder,
    CondorcetWinnerBottomCycle,
    AscendingTopCycle,
    DescendingTopCycle,
    SLFourCycle,
    LSFourCycle,
    UniqueCopelandWinner5,
    #[serde(rename = "TopTopCycle_T4")]
    TopTopCycleT4,
    #[serde(rename = "TopFourCycle_T6")]
    TopFourCycleT6,
    #[serde(rename = "MidCycleOrder_T7")]
    MidCycleOrderT7,
    #[serde(rename = "Gyroscope_T8")]
    GyroscopeT8,
    #[serde(rename = "Pentagram_T12")]
    PentagramT12,
}

impl ClassLabel {
    pub const FOUR: [ClassLabel; 6] = [
        ClassLabel::LinearOrder,
        ClassLabel::CondorcetWinnerBottomCycle,
        ClassLabel::AscendingTopCycle,
        ClassLabel::DescendingTopCycle,
        ClassLabel::SLFourCycle,
        ClassLabel::LSFourCycle,
    ];

    pub const FIVE: [ClassLabel; 6] = [
        ClassLabel::UniqueCopelandWinner5,
        ClassLabel::TopTopCycleT4,
        ClassLabel::TopFourCycleT6,
        ClassLabel::MidCycleOrderT7,
        ClassLabel::GyroscopeT8,
        ClassLabel::PentagramT12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::LinearOrder => "LinearOrder",
            ClassLabel::CondorcetWinnerBottomCycle => "CondorcetWinnerBottomCycle",
            ClassLabel::AscendingTopCycle => "AscendingTopCycle",
            ClassLabel::DescendingTopCycle => "DescendingTopCycle",
            ClassLabel::SLFourCycle => "SLFourCycle",
            ClassLabel::LSFourCycle => "LSFourCycle",
            ClassLabel::UniqueCopelandWinner5 => "UniqueCopelandWinner5",
            ClassLabel::TopTopCycleT4 => "TopTopCycle_T4",
            ClassLabel::TopFourCycleT6 => "TopFourCycle_T6",
            ClassLabel::MidCycleOrderT7 => "MidCycleOrder_T7",
            ClassLabel::GyroscopeT8 => "Gyroscope_T8",
            ClassLabel::PentagramT12 => "Pentagram_T12",
        }
    }

    pub fn candidates(self) -> usize {
        if ClassLabel::FOUR.contains(&self) {
            4
        } else {
            5
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A class label plus the candidate playing each named role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TournamentClass {
    pub label: ClassLabel,
    pub roles: Vec<(&'static str, CandidateId)>,
}

impl TournamentClass {
    pub fn role(&self, name: &str) -> Option<CandidateId> {
        self.roles.iter().find(|(r, _)| *r == name).map(|&(_, c)| c)
    }

    pub fn describe_roles(&self, t: &WeightedTournament) -> String {
        self.roles
            .iter()
            .map(|&(r, c)| format!("{r}={}", t.label(c)))
            .join(" ")
    }
}

fn require(t: &WeightedTournament, k: usize, expected: &'static str) -> Result<(), ClassifyError> {
    if t.len() != k {
        return Err(ClassifyError::WrongSize {
            expected,
            got: t.len(),
        });
    }
    if !t.is_uniquely_weighted() {
        return Err(ClassifyError::NotUniquelyWeighted);
    }
    Ok(())
}

/// Classifies a uniquely-weighted four-candidate tournament by its Copeland
/// score multiset; roles are reported as N, W, E, S.
pub fn classify4(t: &WeightedTournament) -> Result<TournamentClass, ClassifyError> {
    require(t, 4, "4")?;
    let ids: Vec<CandidateId> = t.candidates().collect();
    let with_wins = |w: usize| ids.iter().copied().filter(move |&c| t.wins(c) == w);
    let beaten_by = |x: CandidateId, pool: &[CandidateId]| -> CandidateId {
        *pool.iter().find(|&&y| t.beats(x, y)).expect("cycle member beats someone")
    };
    let mut scores: Vec<usize> = ids.iter().map(|&c| t.wins(c)).collect();
    scores.sort_unstable_by(|a, b| b.cmp(a));

    let (label, n, w, e, s) = match scores.as_slice() {
        [3, 2, 1, 0] => {
            let pick = |k| with_wins(k).next().unwrap();
            (ClassLabel::LinearOrder, pick(3), pick(2), pick(1), pick(0))
        }
        [3, 1, 1, 1] => {
            let n = with_wins(3).next().unwrap();
            let bottom: Vec<_> = with_wins(1).collect();
            let w = bottom[0];
            let e = beaten_by(w, &bottom);
            let s = beaten_by(e, &bottom);
            (ClassLabel::CondorcetWinnerBottomCycle, n, w, e, s)
        }
        [2, 2, 2, 0] => {
            let s = with_wins(0).next().unwrap();
            let cycle: Vec<_> = with_wins(2).collect();
            // W -> N is the cycle's smallest edge
            let (w, n) = cycle
                .iter()
                .map(|&x| (x, beaten_by(x, &cycle)))
                .min_by_key(|&(x, y)| t.margin(x, y))
                .unwrap();
            let e = beaten_by(n, &cycle);
            let label = if t.margin(n, e) < t.margin(e, w) {
                ClassLabel::AscendingTopCycle
            } else {
                ClassLabel::DescendingTopCycle
            };
            (label, n, w, e, s)
        }
        [2, 2, 1, 1] => {
            let top: Vec<_> = with_wins(2).collect();
            let (n, e) = if t.beats(top[0], top[1]) {
                (top[0], top[1])
            } else {
                (top[1], top[0])
            };
            let w = ids.iter().copied().find(|&x| t.beats(x, n)).unwrap();
            let s = ids.iter().copied().find(|&x| ![n, e, w].contains(&x)).unwrap();
            let label = if t.margin(w, n) < t.margin(n, e) {
                ClassLabel::SLFourCycle
            } else {
                ClassLabel::LSFourCycle
            };
            (label, n, w, e, s)
        }
        _ => unreachable!("four-candidate score sequences always sum to 6"),
    };
    Ok(TournamentClass {
        label,
        roles: vec![("N", n), ("W", w), ("E", e), ("S", s)],
    })
}

/// The winner the four-candidate class table predicts for MWSL.
pub fn expected_winner_fig1(class: &TournamentClass, t: &WeightedTournament) -> Result<CandidateId, ClassifyError> {
    let actual = classify4(t)?;
    if actual != *class {
        return Err(ClassifyError::ClassMismatch(class.label));
    }
    let role = if class.label == ClassLabel::LSFourCycle { "E" } else { "N" };
    Ok(class.role(role).expect("four-candidate classes name all roles"))
}

/// Unweighted defeat relation: bit j of `beats[i]` is set when i beats j.
struct Digraph {
    roles: &'static [&'static str],
    beats: Vec<u16>,
}

impl Digraph {
    fn new(roles: &'static [&'static str], edges: &[(&str, &str)]) -> Self {
        let idx = |r: &str| roles.iter().position(|x| *x == r).unwrap();
        let mut beats = vec![0u16; roles.len()];
        for &(a, b) in edges {
            beats[idx(a)] |= 1 << idx(b);
        }
        Digraph { roles, beats }
    }

    fn beating_all(mut self, winners: &[&str], losers: &[&str]) -> Self {
        let idx = |r: &str| self.roles.iter().position(|x| *x == r).unwrap();
        for w in winners {
            for l in losers {
                self.beats[idx(w)] |= 1 << idx(l);
            }
        }
        self
    }
}

fn defeats(t: &WeightedTournament) -> Vec<u16> {
    t.candidates()
        .map(|a| t.candidates().filter(|&b| t.beats(a, b)).fold(0u16, |m, b| m | 1 << b.index()))
        .collect()
}

/// Finds `map` with `map[i]` the vertex of `b` playing vertex `i` of `a`.
fn find_isomorphism(a: &[u16], b: &[u16]) -> Option<Vec<usize>> {
    let k = a.len();
    let mut a_scores: Vec<u32> = a.iter().map(|m| m.count_ones()).collect();
    let mut b_scores: Vec<u32> = b.iter().map(|m| m.count_ones()).collect();
    let (sa, sb) = (a_scores.clone(), b_scores.clone());
    a_scores.sort_unstable();
    b_scores.sort_unstable();
    if a_scores != b_scores {
        return None;
    }
    (0..k).permutations(k).find(|map| {
        (0..k).all(|i| {
            sa[i] == sb[map[i]]
                && (0..k).all(|j| (a[i] >> j & 1 == 1) == (b[map[i]] >> map[j] & 1 == 1))
        })
    })
}

/// A defeat-preserving bijection from `t1` to `t2`, if one exists;
/// `result[i]` is the candidate of `t2` matched with candidate `i` of `t1`.
pub fn tournaments_isomorphic(
    t1: &WeightedTournament,
    t2: &WeightedTournament,
) -> Result<Option<Vec<CandidateId>>, ClassifyError> {
    if t1.len() != t2.len() {
        return Err(ClassifyError::SizeMismatch(t1.len(), t2.len()));
    }
    if t1.len() > 7 {
        return Err(ClassifyError::TooLarge(t1.len()));
    }
    Ok(find_isomorphism(&defeats(t1), &defeats(t2))
        .map(|m| m.into_iter().map(CandidateId::new).collect()))
}

fn reference_digraphs() -> Vec<(ClassLabel, Digraph)> {
    const ABCDY: &[&str] = &["a", "b", "c", "d", "Y"];
    const T7: &[&str] = &["X", "Z", "Y", "V", "U"];
    const T8: &[&str] = &["W", "X", "Y", "U", "V"];
    const PENT: &[&str] = &["a", "b", "c", "d", "e"];
    vec![
        (
            ClassLabel::TopTopCycleT4,
            Digraph::new(ABCDY, &[("a", "b"), ("b", "c"), ("c", "a")])
                .beating_all(&["a", "b", "c"], &["d"])
                .beating_all(&["a", "b", "c", "d"], &["Y"]),
        ),
        (
            ClassLabel::TopFourCycleT6,
            Digraph::new(
                ABCDY,
                &[("c", "a"), ("d", "c"), ("b", "c"), ("a", "d"), ("a", "b"), ("d", "b")],
            )
            .beating_all(&["a", "b", "c", "d"], &["Y"]),
        ),
        (
            ClassLabel::MidCycleOrderT7,
            Digraph::new(T7, &[("X", "Y"), ("Z", "Y"), ("X", "Z"), ("V", "U")])
                .beating_all(&["X", "Z", "Y"], &["V"])
                .beating_all(&["U"], &["X", "Z", "Y"]),
        ),
        (
            ClassLabel::GyroscopeT8,
            Digraph::new(
                T8,
                &[
                    ("X", "Y"),
                    ("W", "Y"),
                    ("W", "V"),
                    ("X", "V"),
                    ("W", "X"),
                    ("Y", "V"),
                    ("X", "U"),
                    ("U", "Y"),
                    ("V", "U"),
                    ("U", "W"),
                ],
            ),
        ),
        (
            ClassLabel::PentagramT12,
            Digraph::new(
                PENT,
                &[
                    ("c", "a"),
                    ("b", "a"),
                    ("c", "b"),
                    ("d", "b"),
                    ("d", "c"),
                    ("e", "c"),
                    ("e", "d"),
                    ("a", "d"),
                    ("a", "e"),
                    ("b", "e"),
                ],
            ),
        ),
    ]
}

/// Classifies a uniquely-weighted five-candidate tournament. Without a unique
/// Copeland winner the defeat digraph is matched against five references and
/// the roles name the reference vertices.
pub fn classify5(t: &WeightedTournament) -> Result<TournamentClass, ClassifyError> {
    require(t, 5, "5")?;
    let (winners, _) = t.copeland_winners();
    if let Some(w) = winners.as_singleton() {
        return Ok(TournamentClass {
            label: ClassLabel::UniqueCopelandWinner5,
            roles: vec![("winner", w)],
        });
    }
    let ours = defeats(t);
    for (label, reference) in reference_digraphs() {
        if let Some(map) = find_isomorphism(&reference.beats, &ours) {
            let roles = reference
                .roles
                .iter()
                .zip(map)
                .map(|(&r, c)| (r, CandidateId::new(c)))
                .collect();
            return Ok(TournamentClass { label, roles });
        }
    }
    Err(ClassifyError::NoMatch)
}

/// Dispatches on the candidate count.
pub fn classify(t: &WeightedTournament) -> Result<TournamentClass, ClassifyError> {
    match t.len() {
        4 => classify4(t),
        5 => classify5(t),
        got => Err(ClassifyError::WrongSize {
            expected: "4 or 5",
            got,
        }),
    }
}
