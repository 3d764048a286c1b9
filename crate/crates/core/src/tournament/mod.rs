//! Weighted tournaments: an antisymmetric integer margin matrix over a small,
//! ordered candidate set, together with the relations derived from it and the
//! perturbation operators the axioms quantify over.

mod format;
mod set;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use format::parse_tournament;
pub use set::{CandidateSet, Iter as CandidateSetIter};

/// Largest supported candidate count. Candidate sets are 16-bit masks.
pub const MAX_CANDIDATES: usize = 16;

/// Dense index of a candidate inside one tournament (or profile).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateId(pub(crate) usize);

impl CandidateId {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_CANDIDATES, "candidate index {index} out of range");
        CandidateId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("a tournament needs at least one candidate")]
    NoCandidates,
    #[error("at most {MAX_CANDIDATES} candidates are supported, got {0}")]
    TooManyCandidates(usize),
    #[error("duplicate candidate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid candidate label `{0}`")]
    InvalidLabel(String),
    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),
    #[error("conflicting margins given for {0} vs {1}")]
    ConflictingEntry(String, String),
    #[error("candidate `{0}` paired with itself with a nonzero margin")]
    SelfPair(String),
    #[error("operation needs two distinct candidates")]
    SameCandidate,
    #[error("improvement must be non-negative, got {0}")]
    NegativeImprovement(i64),
    #[error("removing the last candidate would leave an empty tournament")]
    WouldBeEmpty,
    #[error("margin matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("expected {expected} margins for the new candidate, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Positive incoming margins of one candidate, sorted by margin (ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LossProfile {
    pub owner: CandidateId,
    pub losses: Vec<(CandidateId, i64)>,
}

impl LossProfile {
    /// Largest loss, with `max(∅) = 0`.
    pub fn worst(&self) -> i64 {
        self.losses.last().map_or(0, |&(_, m)| m)
    }

    /// Smallest loss, with `min(∅) = 0`.
    pub fn smallest(&self) -> i64 {
        self.losses.first().map_or(0, |&(_, m)| m)
    }

    pub fn count(&self) -> usize {
        self.losses.len()
    }
}

/// A candidate set with an antisymmetric margin function `m(A, B) = -m(B, A)`.
///
/// Values are immutable: every perturbation returns a fresh tournament. The
/// candidate order is insertion order and every set-valued answer is sorted
/// by it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedTournament {
    labels: Arc<[String]>,
    margins: Vec<i64>,
}

pub(crate) fn validate_labels<I, S>(labels: I) -> Result<Vec<String>, TournamentError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    if labels.is_empty() {
        return Err(TournamentError::NoCandidates);
    }
    if labels.len() > MAX_CANDIDATES {
        return Err(TournamentError::TooManyCandidates(labels.len()));
    }
    for (i, label) in labels.iter().enumerate() {
        let bad = label.is_empty()
            || label
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, ',' | '>' | ':' | '#'));
        if bad {
            return Err(TournamentError::InvalidLabel(label.clone()));
        }
        if labels[..i].contains(label) {
            return Err(TournamentError::DuplicateLabel(label.clone()));
        }
    }
    Ok(labels)
}

impl WeightedTournament {
    /// Builds a tournament from labels and `(A, B, m(A, B))` entries.
    /// Unspecified pairs default to a zero margin. Repeating a pair is allowed
    /// only when the repeat agrees with the first entry.
    pub fn build<L, S, E, A, B>(labels: L, entries: E) -> Result<Self, TournamentError>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B, i64)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels = validate_labels(labels)?;
        let k = labels.len();
        let mut margins = vec![0i64; k * k];
        let mut given = vec![false; k * k];
        let find = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| TournamentError::UnknownCandidate(name.to_string()))
        };
        for (a, b, value) in entries {
            let (a, b) = (find(a.as_ref())?, find(b.as_ref())?);
            if a == b {
                if value != 0 {
                    return Err(TournamentError::SelfPair(labels[a].clone()));
                }
                continue;
            }
            if given[a * k + b] && margins[a * k + b] != value {
                return Err(TournamentError::ConflictingEntry(
                    labels[a].clone(),
                    labels[b].clone(),
                ));
            }
            given[a * k + b] = true;
            given[b * k + a] = true;
            margins[a * k + b] = value;
            margins[b * k + a] = -value;
        }
        Ok(WeightedTournament {
            labels: labels.into(),
            margins,
        })
    }

    /// Builds a tournament from a full row-major margin matrix.
    pub fn from_matrix<L, S>(labels: L, matrix: &[Vec<i64>]) -> Result<Self, TournamentError>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = validate_labels(labels)?;
        let k = labels.len();
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(TournamentError::WrongArity {
                expected: k,
                got: matrix.len(),
            });
        }
        for i in 0..k {
            for j in 0..k {
                if matrix[i][j] + matrix[j][i] != 0 {
                    return Err(TournamentError::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(WeightedTournament {
            labels: labels.into(),
            margins: matrix.iter().flatten().copied().collect(),
        })
    }

    /// Internal constructor for generators that already guarantee the invariants.
    pub(crate) fn from_parts(labels: Arc<[String]>, margins: Vec<i64>) -> Self {
        debug_assert_eq!(margins.len(), labels.len() * labels.len());
        WeightedTournament { labels, margins }
    }

    pub(crate) fn shared_labels(&self) -> &Arc<[String]> {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: CandidateId) -> &str {
        &self.labels[id.0]
    }

    pub fn id(&self, label: &str) -> Result<CandidateId, TournamentError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(CandidateId)
            .ok_or_else(|| TournamentError::UnknownCandidate(label.to_string()))
    }

    pub fn candidates(&self) -> impl Iterator<Item = CandidateId> + Clone {
        (0..self.len()).map(CandidateId)
    }

    pub fn all(&self) -> CandidateSet {
        CandidateSet::full(self.len())
    }

    /// `m(a, b)`: votes ranking `a` over `b` minus votes ranking `b` over `a`.
    #[inline]
    pub fn margin(&self, a: CandidateId, b: CandidateId) -> i64 {
        self.margins[a.0 * self.len() + b.0]
    }

    pub fn margin_by_label(&self, a: &str, b: &str) -> Result<i64, TournamentError> {
        Ok(self.margin(self.id(a)?, self.id(b)?))
    }

    #[inline]
    pub fn beats(&self, a: CandidateId, b: CandidateId) -> bool {
        self.margin(a, b) > 0
    }

    /// Overwrites `m(a, b)` (and `m(b, a)`) in place.
    #[inline]
    pub(crate) fn set_margin(&mut self, a: CandidateId, b: CandidateId, value: i64) {
        let k = self.len();
        self.margins[a.0 * k + b.0] = value;
        self.margins[b.0 * k + a.0] = -value;
    }

    /// Iterates over unordered pairs `(i, j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (CandidateId, CandidateId)> {
        let k = self.len();
        (0..k).flat_map(move |i| ((i + 1)..k).map(move |j| (CandidateId(i), CandidateId(j))))
    }

    pub fn max_abs_margin(&self) -> i64 {
        self.margins.iter().map(|m| m.abs()).max().unwrap_or(0)
    }

    pub fn is_zero_free(&self) -> bool {
        self.pairs().all(|(a, b)| self.margin(a, b) != 0)
    }

    /// True iff all pairwise magnitudes are nonzero and pairwise distinct.
    pub fn is_uniquely_weighted(&self) -> bool {
        let mut seen: Vec<i64> = self.pairs().map(|(a, b)| self.margin(a, b).abs()).collect();
        if seen.contains(&0) {
            return false;
        }
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn wins(&self, x: CandidateId) -> usize {
        let k = self.len();
        self.margins[x.0 * k..(x.0 + 1) * k]
            .iter()
            .filter(|&&m| m > 0)
            .count()
    }

    pub fn losses(&self, x: CandidateId) -> usize {
        let k = self.len();
        self.margins[x.0 * k..(x.0 + 1) * k]
            .iter()
            .filter(|&&m| m < 0)
            .count()
    }

    /// The candidate beating every other candidate, if any.
    pub fn condorcet_winner(&self) -> Option<CandidateId> {
        let k = self.len();
        self.candidates().find(|&x| self.wins(x) == k - 1)
    }

    /// Copeland winners (most head-to-head wins) and their win count.
    pub fn copeland_winners(&self) -> (CandidateSet, usize) {
        let mut best = 0;
        let mut winners = CandidateSet::empty();
        for x in self.candidates() {
            let w = self.wins(x);
            if w > best || winners.is_empty() {
                best = w;
                winners = CandidateSet::singleton(x);
            } else if w == best {
                winners.insert(x);
            }
        }
        (winners, best)
    }

    pub fn loss_profile(&self, x: CandidateId) -> LossProfile {
        let mut losses: Vec<(CandidateId, i64)> = self
            .candidates()
            .map(|y| (y, self.margin(y, x)))
            .filter(|&(_, m)| m > 0)
            .collect();
        losses.sort_by_key(|&(y, m)| (m, y));
        LossProfile { owner: x, losses }
    }

    /// `max{m(Y, x) > 0 | Y ∈ among}`, 0 when `x` has no such loss.
    #[inline]
    pub fn worst_loss_among(&self, x: CandidateId, among: CandidateSet) -> i64 {
        among
            .iter()
            .map(|y| self.margin(y, x))
            .filter(|&m| m > 0)
            .max()
            .unwrap_or(0)
    }

    /// `min{m(Y, x) > 0 | Y ∈ among}`, 0 when `x` has no such loss.
    #[inline]
    pub fn smallest_loss_among(&self, x: CandidateId, among: CandidateSet) -> i64 {
        among
            .iter()
            .map(|y| self.margin(y, x))
            .filter(|&m| m > 0)
            .min()
            .unwrap_or(0)
    }

    pub fn worst_loss(&self, x: CandidateId) -> i64 {
        self.worst_loss_among(x, self.all())
    }

    pub fn smallest_loss(&self, x: CandidateId) -> i64 {
        self.smallest_loss_among(x, self.all())
    }

    /// `a` beats `b` and beats everyone `b` beats by at least as much as `b` does.
    pub fn dominates_in_wins(&self, a: CandidateId, b: CandidateId) -> Result<bool, TournamentError> {
        if a == b {
            return Err(TournamentError::SameCandidate);
        }
        Ok(self.beats(a, b)
            && self
                .others(a, b)
                .all(|x| self.margin(b, x) <= 0 || self.margin(a, x) >= self.margin(b, x)))
    }

    /// `a` beats `b` and beats everyone `b` beats.
    pub fn covers(&self, a: CandidateId, b: CandidateId) -> Result<bool, TournamentError> {
        if a == b {
            return Err(TournamentError::SameCandidate);
        }
        Ok(self.beats(a, b) && self.others(a, b).all(|x| !self.beats(b, x) || self.beats(a, x)))
    }

    /// `a` beats `b` and has a margin at least as large as `b`'s against every third candidate.
    pub fn m_covers(&self, a: CandidateId, b: CandidateId) -> Result<bool, TournamentError> {
        if a == b {
            return Err(TournamentError::SameCandidate);
        }
        Ok(self.beats(a, b) && self.others(a, b).all(|x| self.margin(a, x) >= self.margin(b, x)))
    }

    /// Candidates not covered by any other candidate.
    pub fn uncovered_set(&self) -> CandidateSet {
        self.candidates()
            .filter(|&x| {
                !self
                    .candidates()
                    .any(|y| y != x && self.covers(y, x).unwrap_or(false))
            })
            .collect()
    }

    fn others(&self, a: CandidateId, b: CandidateId) -> impl Iterator<Item = CandidateId> + '_ {
        self.candidates().filter(move |&x| x != a && x != b)
    }

    /// Sum of `x`'s margins against every candidate.
    pub fn symmetric_borda(&self, x: CandidateId) -> i64 {
        let k = self.len();
        self.margins[x.0 * k..(x.0 + 1) * k].iter().sum()
    }

    /// The restriction of the margin function to every candidate but `b`.
    pub fn remove_candidate(&self, b: CandidateId) -> Result<Self, TournamentError> {
        if b.0 >= self.len() {
            return Err(TournamentError::UnknownCandidate(format!("#{}", b.0)));
        }
        if self.len() < 2 {
            return Err(TournamentError::WouldBeEmpty);
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != b.0).collect();
        Ok(self.restricted(&keep))
    }

    /// Sub-tournament on `keep`, in the given order.
    pub(crate) fn restricted(&self, keep: &[usize]) -> Self {
        let labels: Arc<[String]> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut margins = Vec::with_capacity(keep.len() * keep.len());
        for &i in keep {
            for &j in keep {
                margins.push(self.margins[i * self.len() + j]);
            }
        }
        WeightedTournament { labels, margins }
    }

    /// Appends a candidate with the given margins `m(new, existing_i)`.
    pub fn with_candidate(&self, label: &str, against: &[i64]) -> Result<Self, TournamentError> {
        if against.len() != self.len() {
            return Err(TournamentError::WrongArity {
                expected: self.len(),
                got: against.len(),
            });
        }
        let labels = validate_labels(self.labels.iter().cloned().chain([label.to_string()]))?;
        let k = labels.len();
        let mut margins = vec![0; k * k];
        for i in 0..k - 1 {
            for j in 0..k - 1 {
                margins[i * k + j] = self.margins[i * (k - 1) + j];
            }
            margins[(k - 1) * k + i] = against[i];
            margins[i * k + k - 1] = -against[i];
        }
        Ok(WeightedTournament {
            labels: labels.into(),
            margins,
        })
    }

    /// `m'(a, x) = m(a, x) + n`, everything else unchanged.
    pub fn improve_margin(&self, a: CandidateId, x: CandidateId, n: i64) -> Result<Self, TournamentError> {
        if n < 0 {
            return Err(TournamentError::NegativeImprovement(n));
        }
        if a == x {
            return Err(TournamentError::SameCandidate);
        }
        let mut out = self.clone();
        out.set_margin(a, x, self.margin(a, x) + n);
        Ok(out)
    }

    /// `m'(b, v) = m(b, v) + n` for every `v ≠ b`.
    pub fn improve_all_margins(&self, b: CandidateId, n: i64) -> Result<Self, TournamentError> {
        if n < 0 {
            return Err(TournamentError::NegativeImprovement(n));
        }
        let mut out = self.clone();
        for v in self.candidates().filter(|&v| v != b) {
            out.set_margin(b, v, self.margin(b, v) + n);
        }
        Ok(out)
    }

    /// Copy with `m(a, b)` replaced by `value`.
    pub fn with_margin(&self, a: CandidateId, b: CandidateId, value: i64) -> Result<Self, TournamentError> {
        if a == b {
            return Err(TournamentError::SameCandidate);
        }
        let mut out = self.clone();
        out.set_margin(a, b, value);
        Ok(out)
    }

    /// Relabeled copy: candidate `i` of the result is candidate `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len());
        self.restricted(order)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| (0..k).all(|j| self.margins[i * k + j] + self.margins[j * k + i] == 0))
    }

    /// Renders the tournament in the text file format.
    pub fn to_file_text(&self) -> String {
        format::render(self)
    }

    /// Names the members of `set`, in candidate order.
    pub fn names(&self, set: CandidateSet) -> Vec<&str> {
        set.iter().map(|c| self.label(c)).collect()
    }
}

impl fmt::Debug for WeightedTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedTournament[")?;
        let mut first = true;
        for (a, b) in self.pairs() {
            let m = self.margin(a, b);
            let (w, l, m) = if m >= 0 { (a, b, m) } else { (b, a, -m) };
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}>{} {}", self.label(w), self.label(l), m)?;
        }
        write!(f, "]")
    }
}

/// Margin grid, one row per candidate.
impl fmt::Display for WeightedTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .labels
            .iter()
            .map(|l| l.len())
            .chain(self.margins.iter().map(|m| m.to_string().len()))
            .max()
            .unwrap_or(1)
            + 1;
        write!(f, "{:>width$}", "")?;
        for l in self.labels.iter() {
            write!(f, "{l:>width$}")?;
        }
        writeln!(f)?;
        for a in self.candidates() {
            write!(f, "{:>width$}", self.label(a))?;
            for b in self.candidates() {
                write!(f, "{:>width$}", self.margin(a, b))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn id(t: &WeightedTournament, l: &str) -> CandidateId {
        t.id(l).unwrap()
    }

    #[test]
    fn build_fills_antisymmetric_entries() {
        let t = WeightedTournament::build(["A", "B"], [("A", "B", 2)]).unwrap();
        assert_eq!(t.margin_by_label("B", "A").unwrap(), -2);
        assert_eq!(t.margin_by_label("A", "A").unwrap(), 0);
        assert!(t.is_antisymmetric());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            WeightedTournament::build(["A", "B"], [("A", "B", 2), ("B", "A", 4)]).unwrap_err(),
            TournamentError::ConflictingEntry("B".into(), "A".into())
        );
        // a consistent restatement is fine
        assert!(WeightedTournament::build(["A", "B"], [("A", "B", 2), ("B", "A", -2)]).is_ok());
        assert_eq!(
            WeightedTournament::build(["A", "A"], Vec::<(&str, &str, i64)>::new()).unwrap_err(),
            TournamentError::DuplicateLabel("A".into())
        );
        assert_eq!(
            WeightedTournament::build(["A", "B"], [("A", "A", 1)]).unwrap_err(),
            TournamentError::SelfPair("A".into())
        );
        assert!(matches!(
            WeightedTournament::build(["A", "B"], [("A", "Q", 1)]),
            Err(TournamentError::UnknownCandidate(_))
        ));
        assert_eq!(
            WeightedTournament::build(Vec::<String>::new(), Vec::<(&str, &str, i64)>::new())
                .unwrap_err(),
            TournamentError::NoCandidates
        );
    }

    #[test]
    fn linear_order_has_condorcet_winner() {
        let t = linear_order();
        let n = id(&t, "N");
        for x in t.candidates().filter(|&x| x != n) {
            assert!(t.margin(n, x) > 0);
        }
        assert_eq!(t.condorcet_winner(), Some(n));
        assert_eq!(t.copeland_winners(), (CandidateSet::singleton(n), 3));
        let lp = t.loss_profile(n);
        assert!(lp.losses.is_empty());
        assert_eq!((lp.worst(), lp.smallest()), (0, 0));
    }

    #[test]
    fn margins_of_cgb_fixture() {
        let t = cgb();
        assert_eq!(t.margin_by_label("E", "W").unwrap(), 8);
        assert_eq!(t.margin_by_label("W", "E").unwrap(), -8);
        assert!(t.is_uniquely_weighted());
        let (w, score) = t.copeland_winners();
        assert_eq!(t.names(w), ["W", "N", "E"]);
        assert_eq!(score, 2);
        let lp = t.loss_profile(id(&t, "N"));
        assert_eq!(lp.losses, vec![(id(&t, "W"), 2)]);
        assert_eq!((lp.worst(), lp.smallest()), (2, 2));
        assert_eq!(t.symmetric_borda(id(&t, "E")), 16);
        assert_eq!(t.symmetric_borda(id(&t, "N")), 14);
        let total: i64 = t.candidates().map(|x| t.symmetric_borda(x)).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn borda_ties_from_remark() {
        // P has margins 13, 3, -1 and Q has 11, 7, -3
        let t = WeightedTournament::build(
            ["P", "Q", "R", "S"],
            [("P", "Q", 3), ("P", "R", 13), ("S", "P", 1), ("Q", "R", 11), ("Q", "S", 7), ("R", "S", 5)],
        )
        .unwrap();
        assert!(t.is_uniquely_weighted());
        assert_eq!(t.names(t.copeland_winners().0), ["P", "Q"]);
        assert_eq!(t.symmetric_borda(id(&t, "P")), 15);
        assert_eq!(t.symmetric_borda(id(&t, "Q")), 15);
    }

    #[test]
    fn uniquely_weighted_edge_cases() {
        let repeated =
            WeightedTournament::build(["A", "B", "C"], [("A", "B", 2), ("B", "C", 2), ("C", "A", 4)])
                .unwrap();
        assert!(!repeated.is_uniquely_weighted());
        let zero = WeightedTournament::build(["A", "B"], [("A", "B", 0)]).unwrap();
        assert!(!zero.is_uniquely_weighted());
        assert!(!zero.is_zero_free());
    }

    #[test]
    fn four_cycle_relations() {
        let t = fig2_left();
        assert_eq!(t.condorcet_winner(), None);
        let (w, s) = t.copeland_winners();
        assert_eq!((t.names(w), s), (vec!["N", "E"], 2));
        // E beats S by 12 while N beats S by 10
        assert!(!t.dominates_in_wins(id(&t, "N"), id(&t, "E")).unwrap());
        assert_eq!(
            t.dominates_in_wins(id(&t, "N"), id(&t, "N")),
            Err(TournamentError::SameCandidate)
        );
    }

    #[test]
    fn single_candidate_is_condorcet_winner() {
        let t = WeightedTournament::build(["A"], Vec::<(&str, &str, i64)>::new()).unwrap();
        assert_eq!(t.condorcet_winner(), Some(CandidateId(0)));
    }

    #[test]
    fn pentagram_losses() {
        let t = pentagram();
        let a = id(&t, "a");
        assert_eq!(t.loss_profile(a).losses, vec![(id(&t, "c"), 2), (id(&t, "b"), 6)]);
        for x in t.candidates() {
            assert_eq!(t.wins(x), 2);
        }
        let improved = t.improve_margin(a, id(&t, "c"), 3).unwrap();
        assert_eq!(improved.margin_by_label("c", "a").unwrap(), -1);
        assert_eq!(improved.copeland_winners(), (CandidateSet::singleton(a), 3));
        for x in t.candidates() {
            let sub = t.remove_candidate(x).unwrap();
            assert_eq!(sub.len(), 4);
            assert!(sub.is_uniquely_weighted());
        }
    }

    #[test]
    fn uncovered_sets() {
        let t = uncovered_minimax();
        assert_eq!(t.names(t.uncovered_set()), ["W", "N", "E"]);
        let flipped = t.with_margin(id(&t, "S"), id(&t, "N"), 10).unwrap();
        assert!(flipped.covers(id(&t, "S"), id(&t, "W")).unwrap());
        assert_eq!(flipped.names(flipped.uncovered_set()), ["N", "E", "S"]);
    }

    #[test]
    fn dominance_of_condorcet_loser() {
        let t = linear_order();
        assert!(t.dominates_in_wins(id(&t, "N"), id(&t, "S")).unwrap());
    }

    #[test]
    fn remove_and_readd() {
        let t = fig2_left();
        let s = id(&t, "S");
        let three = t.remove_candidate(s).unwrap();
        assert_eq!(three.labels(), ["N", "W", "E"]);
        assert_eq!(three.margin_by_label("W", "N").unwrap(), 8);
        assert_eq!(three.margin_by_label("N", "E").unwrap(), 2);
        assert_eq!(three.margin_by_label("E", "W").unwrap(), 6);
        let against: Vec<i64> = three
            .candidates()
            .map(|x| t.margin(s, t.id(three.label(x)).unwrap()))
            .collect();
        assert_eq!(three.with_candidate("S", &against).unwrap(), t);
        let one = WeightedTournament::build(["A"], Vec::<(&str, &str, i64)>::new()).unwrap();
        assert_eq!(one.remove_candidate(CandidateId(0)), Err(TournamentError::WouldBeEmpty));
    }

    #[test]
    fn improvements() {
        let t = pentagram();
        assert_eq!(t.improve_all_margins(CandidateId(1), 0).unwrap(), t);
        assert_eq!(
            t.improve_margin(CandidateId(0), CandidateId(1), -1),
            Err(TournamentError::NegativeImprovement(-1))
        );
        assert_eq!(
            t.improve_margin(CandidateId(0), CandidateId(0), 1),
            Err(TournamentError::SameCandidate)
        );
        let b = CandidateId(1);
        let up = t.improve_all_margins(b, 3).unwrap();
        for v in t.candidates().filter(|&v| v != b) {
            assert_eq!(up.margin(v, b), t.margin(v, b) - 3);
        }
        assert!(up.is_antisymmetric());
    }
}
