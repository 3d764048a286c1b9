//! Text format:
//!
//! ```text
//! candidates: A,B,C
//! # comment
//! A B 8      # m(A, B) = 8
//! ```
//!
//! Unlisted pairs have margin 0. Lines that contradict each other are rejected.

use super::{validate_labels, TournamentError, WeightedTournament};

fn parse_error(line: usize, message: impl Into<String>) -> TournamentError {
    TournamentError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the tournament text format.
pub fn parse_tournament(text: &str) -> Result<WeightedTournament, TournamentError> {
    let mut labels: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, String, String, i64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("candidates:") {
            if labels.is_some() {
                return Err(parse_error(line_no, "duplicate `candidates:` header"));
            }
            let names = rest.split(',').map(|s| s.trim().to_string());
            labels = Some(validate_labels(names).map_err(|e| parse_error(line_no, e.to_string()))?);
            continue;
        }
        if labels.is_none() {
            return Err(parse_error(line_no, "expected `candidates:` header first"));
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b, value] = fields[..] else {
            return Err(parse_error(line_no, "expected `A B margin`"));
        };
        let value: i64 = value
            .parse()
            .map_err(|_| parse_error(line_no, format!("invalid margin `{value}`")))?;
        entries.push((line_no, a.to_string(), b.to_string(), value));
    }
    let labels = labels.ok_or_else(|| parse_error(0, "missing `candidates:` header"))?;

    // Build incrementally so errors carry the offending line number.
    let mut seen: Vec<(String, String, i64)> = Vec::new();
    for (line_no, a, b, value) in entries {
        seen.push((a, b, value));
        WeightedTournament::build(labels.clone(), seen.iter().map(|(a, b, v)| (a, b, *v)))
            .map_err(|e| parse_error(line_no, e.to_string()))?;
    }
    WeightedTournament::build(labels, seen.iter().map(|(a, b, v)| (a, b, *v)))
}

pub(super) fn render(t: &WeightedTournament) -> String {
    let mut out = format!("candidates: {}\n", t.labels().join(","));
    for (a, b) in t.pairs() {
        let m = t.margin(a, b);
        if m > 0 {
            out.push_str(&format!("{} {} {}\n", t.label(a), t.label(b), m));
        } else if m < 0 {
            out.push_str(&format!("{} {} {}\n", t.label(b), t.label(a), -m));
        }
    }
    out
}
