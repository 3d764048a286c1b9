//! Audits a set of methods against a set of axioms over a space of
//! uniquely-weighted tournaments, either every tournament built from a fixed
//! set of magnitudes or a seeded random sample.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use super::{check, AxiomError, AxiomId, Counterexample};
use crate::classify::{classify, ClassLabel};
use crate::methods::MethodId;
use crate::tournament::WeightedTournament;

/// Discard bound for stratified rejection sampling, per class.
const MAX_REJECTIONS: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("invalid magnitudes: {0}")]
    InvalidMagnitudes(String),
    #[error("{mode} audits support {supported} candidates, got {got}")]
    UnsupportedCandidates {
        mode: Mode,
        supported: &'static str,
        got: usize,
    },
    #[error("no sample of class {0} found after {MAX_REJECTIONS} draws")]
    Stratify(ClassLabel),
    #[error("checking {method}/{axiom} on tournament #{index}: {source}")]
    Check {
        method: MethodId,
        axiom: AxiomId,
        index: usize,
        source: AxiomError,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample => "sample",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sample" => Ok(Mode::Sample),
            _ => Err(format!("unknown mode `{s}` (expected exhaustive or sample)")),
        }
    }
}

/// Even magnitudes 2, 4, ..., 40: the default pool for sampling.
pub fn default_sample_pool() -> Vec<i64> {
    (1..=20).map(|i| 2 * i).collect()
}

pub fn default_magnitudes(candidates: usize) -> Vec<i64> {
    let pairs = candidates * candidates.saturating_sub(1) / 2;
    (1..=pairs as i64).map(|i| 2 * i).collect()
}

#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub methods: Vec<MethodId>,
    pub axioms: Vec<AxiomId>,
    pub candidates: usize,
    pub mode: Mode,
    /// Exhaustive: exactly one magnitude per pair. Sample: the pool drawn from.
    pub magnitudes: Vec<i64>,
    pub samples: usize,
    pub seed: u64,
    /// Lead the sample with one tournament of every class (four or five candidates).
    pub stratify: bool,
}

impl AuditConfig {
    /// Copeland, Minimax, MWSL and the variant on every four-candidate
    /// tournament with magnitudes 2, 4, ..., 12.
    pub fn table1() -> Self {
        AuditConfig {
            methods: vec![MethodId::Copeland, MethodId::Minimax, MethodId::Mwsl, MethodId::VariantLocalMin],
            axioms: AxiomId::TABLE1.to_vec(),
            candidates: 4,
            mode: Mode::Exhaustive,
            magnitudes: default_magnitudes(4),
            samples: 0,
            seed: 0,
            stratify: false,
        }
    }

    /// MWSL, CGM and CLM on a stratified five-candidate sample.
    pub fn table2(samples: usize, seed: u64) -> Self {
        AuditConfig {
            methods: vec![MethodId::Mwsl, MethodId::Cgm, MethodId::Clm],
            axioms: AxiomId::TABLE2.to_vec(),
            candidates: 5,
            mode: Mode::Sample,
            magnitudes: default_sample_pool(),
            samples,
            seed,
            stratify: true,
        }
    }

    pub fn space(&self) -> Result<TournamentSpace, AuditError> {
        match self.mode {
            Mode::Exhaustive => TournamentSpace::exhaustive(self.candidates, &self.magnitudes),
            Mode::Sample => {
                TournamentSpace::sampled(self.candidates, &self.magnitudes, self.samples, self.seed, self.stratify)
            }
        }
    }
}

/// Candidates are named P, Q, R, S, T so they never read as axiom roles.
fn labels(k: usize) -> Arc<[String]> {
    (0..k).map(|i| ((b'P' + i as u8) as char).to_string()).collect()
}

fn validate_magnitudes(magnitudes: &[i64]) -> Result<(), AuditError> {
    if let Some(m) = magnitudes.iter().find(|&&m| m <= 0) {
        return Err(AuditError::InvalidMagnitudes(format!("{m} is not positive")));
    }
    if !magnitudes.iter().all_unique() {
        return Err(AuditError::InvalidMagnitudes("values must be distinct".into()));
    }
    Ok(())
}

enum Source {
    /// Magnitude permutations; index = permutation * 2^pairs + orientation bits.
    Exhaustive(Vec<Vec<i64>>),
    /// Signed pair values, `pairs` per tournament.
    Sampled(Vec<i64>),
}

/// An indexed, deterministic collection of tournaments.
pub struct TournamentSpace {
    labels: Arc<[String]>,
    pairs: Vec<(usize, usize)>,
    source: Source,
}

impl TournamentSpace {
    /// Every assignment of `magnitudes` to the pairs, in every orientation.
    pub fn exhaustive(k: usize, magnitudes: &[i64]) -> Result<Self, AuditError> {
        if !(2..=4).contains(&k) {
            return Err(AuditError::UnsupportedCandidates {
                mode: Mode::Exhaustive,
                supported: "2 to 4",
                got: k,
            });
        }
        let pairs: Vec<_> = (0..k).tuple_combinations().collect();
        validate_magnitudes(magnitudes)?;
        if magnitudes.len() != pairs.len() {
            return Err(AuditError::InvalidMagnitudes(format!(
                "{k} candidates need exactly {} magnitudes, got {}",
                pairs.len(),
                magnitudes.len()
            )));
        }
        let perms = magnitudes.iter().copied().permutations(pairs.len()).collect();
        Ok(TournamentSpace {
            labels: labels(k),
            pairs,
            source: Source::Exhaustive(perms),
        })
    }

    /// `count` tournaments whose pair magnitudes are distinct draws from
    /// `pool`, each orientation equally likely.
    pub fn sampled(k: usize, pool: &[i64], count: usize, seed: u64, stratify: bool) -> Result<Self, AuditError> {
        if !(2..=5).contains(&k) {
            return Err(AuditError::UnsupportedCandidates {
                mode: Mode::Sample,
                supported: "2 to 5",
                got: k,
            });
        }
        let pairs: Vec<_> = (0..k).tuple_combinations().collect();
        validate_magnitudes(pool)?;
        if pool.len() < pairs.len() {
            return Err(AuditError::InvalidMagnitudes(format!(
                "{k} candidates need at least {} magnitudes in the pool, got {}",
                pairs.len(),
                pool.len()
            )));
        }
        let mut space = TournamentSpace {
            labels: labels(k),
            pairs,
            source: Source::Sampled(Vec::new()),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = space.pairs.len();
        let mut values = Vec::with_capacity(count * p);
        let draw = |rng: &mut ChaCha8Rng| -> Vec<i64> {
            rand::seq::index::sample(rng, pool.len(), p)
                .into_iter()
                .map(|i| if rng.gen::<bool>() { pool[i] } else { -pool[i] })
                .collect()
        };
        let classes: &[ClassLabel] = match (stratify, k) {
            (true, 4) => &ClassLabel::FOUR,
            (true, 5) => &ClassLabel::FIVE,
            _ => &[],
        };
        for &class in classes.iter().take(count) {
            let found = (0..MAX_REJECTIONS).map(|_| draw(&mut rng)).find(|v| {
                let t = space.build(v);
                classify(&t).map(|c| c.label) == Ok(class)
            });
            values.extend(found.ok_or(AuditError::Stratify(class))?);
        }
        while values.len() < count * p {
            values.extend(draw(&mut rng));
        }
        space.source = Source::Sampled(values);
        Ok(space)
    }

    pub fn candidates(&self) -> usize {
        self.labels.len()
    }

    pub fn len(&self) -> usize {
        match &self.source {
            Source::Exhaustive(perms) => perms.len() << self.pairs.len(),
            Source::Sampled(values) => values.len() / self.pairs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn build(&self, values: &[i64]) -> WeightedTournament {
        let k = self.labels.len();
        let mut margins = vec![0; k * k];
        for (&(i, j), &v) in self.pairs.iter().zip(values) {
            margins[i * k + j] = v;
            margins[j * k + i] = -v;
        }
        WeightedTournament::from_parts(self.labels.clone(), margins)
    }

    /// The tournament at `index`. Orientation bit `q` set means the first
    /// candidate of pair `q` (in `(0,1), (0,2), ...` order) wins it.
    pub fn get(&self, index: usize) -> WeightedTournament {
        match &self.source {
            Source::Exhaustive(perms) => {
                let p = self.pairs.len();
                let (perm, bits) = (&perms[index >> p], index & ((1 << p) - 1));
                let values: Vec<i64> = (0..p).map(|q| if bits >> q & 1 == 1 { perm[q] } else { -perm[q] }).collect();
                self.build(&values)
            }
            Source::Sampled(values) => {
                let p = self.pairs.len();
                self.build(&values[index * p..(index + 1) * p])
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = WeightedTournament> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

#[derive(Clone, Debug)]
pub struct CellResult {
    pub method: MethodId,
    pub axiom: AxiomId,
    pub holds: bool,
    /// Index of the counterexample within the space.
    pub index: Option<usize>,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub mode: Mode,
    pub candidates: usize,
    pub magnitudes: Vec<i64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub tournaments_checked: usize,
    pub methods: Vec<MethodId>,
    pub axioms: Vec<AxiomId>,
    pub results: Vec<CellResult>,
}

pub const BOUND_NOTE: &str =
    "perturbation sizes and replacement margins searched up to max|m|+1; larger values add no new sign or order patterns";

/// Runs every (method, axiom) check on every tournament of the space and
/// keeps the first counterexample by index. The result does not depend on
/// scheduling.
pub fn audit(config: &AuditConfig) -> Result<AuditReport, AuditError> {
    let space = config.space()?;
    let cells: Vec<(MethodId, AxiomId)> = config
        .methods
        .iter()
        .flat_map(|&m| config.axioms.iter().map(move |&a| (m, a)))
        .collect();
    let first: Vec<AtomicUsize> = cells.iter().map(|_| AtomicUsize::new(usize::MAX)).collect();
    let found: Vec<Mutex<Option<(usize, Counterexample)>>> = cells.iter().map(|_| Mutex::new(None)).collect();
    let failure: Mutex<Option<AuditError>> = Mutex::new(None);

    (0..space.len()).into_par_iter().for_each(|index| {
        if first.iter().all(|f| f.load(Ordering::Relaxed) < index) && !cells.is_empty() {
            return;
        }
        let t = space.get(index);
        for (c, &(method, axiom)) in cells.iter().enumerate() {
            if first[c].load(Ordering::Relaxed) < index {
                continue;
            }
            if axiom == AxiomId::ImmunitySpoilers && t.len() < 3 {
                continue;
            }
            match check(axiom, method, &t, None) {
                Ok(v) if v.holds => {}
                Ok(v) => {
                    let mut slot = found[c].lock().unwrap();
                    if slot.as_ref().is_none_or(|(i, _)| index < *i) {
                        *slot = Some((index, v.counterexample.expect("violations carry a witness")));
                    }
                    first[c].fetch_min(index, Ordering::Relaxed);
                }
                Err(source) => {
                    let mut f = failure.lock().unwrap();
                    if f.is_none() {
                        *f = Some(AuditError::Check { method, axiom, index, source });
                    }
                }
            }
        }
    });

    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let results = cells
        .iter()
        .zip(found)
        .map(|(&(method, axiom), slot)| {
            let slot = slot.into_inner().unwrap();
            CellResult {
                method,
                axiom,
                holds: slot.is_none(),
                index: slot.as_ref().map(|s| s.0),
                counterexample: slot.map(|s| s.1),
            }
        })
        .collect();
    let sampled = config.mode == Mode::Sample;
    Ok(AuditReport {
        mode: config.mode,
        candidates: config.candidates,
        magnitudes: config.magnitudes.clone(),
        samples: sampled.then_some(space.len()),
        seed: sampled.then_some(config.seed),
        tournaments_checked: space.len(),
        methods: config.methods.clone(),
        axioms: config.axioms.clone(),
        results,
    })
}

impl AuditReport {
    pub fn cell(&self, method: MethodId, axiom: AxiomId) -> Option<&CellResult> {
        self.results.iter().find(|r| r.method == method && r.axiom == axiom)
    }

    pub fn holds(&self, method: MethodId, axiom: AxiomId) -> Option<bool> {
        self.cell(method, axiom).map(|r| r.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &CellResult> {
        self.results.iter().filter(|r| !r.holds)
    }

    pub fn to_json(&self) -> Value {
        let mut space = json!({
            "mode": self.mode.name(),
            "candidates": self.candidates,
            "magnitudes": self.magnitudes,
            "bound": BOUND_NOTE,
        });
        if let (Some(n), Some(seed)) = (self.samples, self.seed) {
            space["sample_count"] = json!(n);
            space["seed"] = json!(seed);
        }
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "method": r.method.name(),
                    "axiom": r.axiom.name(),
                    "holds": r.holds,
                    "index": r.index,
                    "counterexample": r.counterexample.as_ref().map(Counterexample::to_json),
                })
            })
            .collect();
        json!({
            "space": space,
            "tournaments_checked": self.tournaments_checked,
            "results": results,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// Axioms as rows, methods as columns; `✓` holds, `-` violated.
    pub fn render_table(&self) -> String {
        let width = self.axioms.iter().map(|a| a.name().len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:width$}", "axiom");
        for m in &self.methods {
            let _ = write!(out, "  {m}");
        }
        out.push('\n');
        for &a in &self.axioms {
            let _ = write!(out, "{:width$}", a.name());
            for &m in &self.methods {
                let mark = match self.holds(m, a) {
                    Some(true) => "✓",
                    _ => "-",
                };
                let _ = write!(out, "  {mark:^w$}", w = m.name().len());
            }
            out.push('\n');
        }
        out
    }

    /// Writes `report.json` plus one file per counterexample tournament.
    pub fn write_to_dir(&self, dir: &Path) -> io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut written = vec![dir.join("report.json")];
        fs::write(&written[0], self.to_json_string())?;
        for r in self.violations() {
            let ce = r.counterexample.as_ref().expect("violations carry a witness");
            let header = format!("# {}\n", ce.describe());
            let mut files = vec![("before", &ce.primary)];
            if let Some(s) = &ce.secondary {
                files.push(("after", s));
            }
            for (suffix, t) in files {
                let path = dir.join(format!("{}-{}-{suffix}.txt", r.method, r.axiom));
                fs::write(&path, format!("{header}{}", t.to_file_text()))?;
                written.push(path);
            }
        }
        Ok(written)
    }
}
