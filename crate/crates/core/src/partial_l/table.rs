use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::exact_series::ExactScalar;
use crate::weights_schur::SatakeData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IngestError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },
}

/// Satake data at a finite set of primes, all of the same rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeTable {
    n: usize,
    label: String,
    entries: BTreeMap<u64, SatakeData>,
}

impl SatakeTable {
    pub fn new(n: usize, label: impl Into<String>) -> Self {
        SatakeTable {
            n,
            label: label.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Entries in increasing order of the prime.
    pub fn entries(&self) -> &BTreeMap<u64, SatakeData> {
        &self.entries
    }

    pub fn get(&self, p: u64) -> Option<&SatakeData> {
        self.entries.get(&p)
    }

    pub fn insert(&mut self, p: u64, data: SatakeData) -> Result<(), String> {
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if data.rank() != self.n {
            return Err(format!(
                "expected {} Satake parameters, found {}",
                self.n,
                data.rank()
            ));
        }
        if self.entries.contains_key(&p) {
            return Err(format!("duplicate prime {p}"));
        }
        self.entries.insert(p, data);
        Ok(())
    }

    /// Text form accepted by [`ingest_str`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} label={}\n", self.n, self.label);
        for (p, d) in &self.entries {
            let z: Vec<String> = d.z().iter().map(|x| x.to_string()).collect();
            writeln!(out, "{} | {} | {}", p, z.join(" "), d.u()).expect("write to string");
        }
        out
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn ingest(path: impl AsRef<Path>) -> Result<SatakeTable, IngestError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| IngestError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    ingest_str(&text)
}

/// Parses the line format
///
/// ```text
/// # comment
/// n=2 label=toy
/// 2 | 1/2 3 | 1
/// ```
///
/// The header must precede every data line. Each data line is
/// `p | z_1 ... z_n | u`.
pub fn ingest_str(text: &str) -> Result<SatakeTable, IngestError> {
    let mut table: Option<SatakeTable> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let parse_err = |message: String| IngestError::Parse { line, message };
        let invalid = |message: String| IngestError::Validation { line, message };

        let Some(table) = table.as_mut() else {
            table = Some(parse_header(content).map_err(parse_err)?);
            if table.as_ref().is_some_and(|t| t.n == 0) {
                return Err(invalid("rank must be at least 1".into()));
            }
            continue;
        };

        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        let [p, z, u] = fields[..] else {
            return Err(parse_err(format!(
                "expected `p | z_1 ... z_n | u`, found {content:?}"
            )));
        };
        let p: u64 = p
            .parse()
            .map_err(|_| parse_err(format!("bad prime {p:?}")))?;
        let z = z
            .split_whitespace()
            .map(|x| x.parse::<ExactScalar>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| parse_err(e.to_string()))?;
        let u: ExactScalar = u
            .parse()
            .map_err(|e: crate::exact_series::ParseScalarError| parse_err(e.to_string()))?;
        if z.len() != table.n {
            return Err(invalid(format!(
                "expected {} Satake parameters, found {}",
                table.n,
                z.len()
            )));
        }
        let data = SatakeData::new(z, u).map_err(|e| invalid(e.to_string()))?;
        table.insert(p, data).map_err(invalid)?;
    }
    table.ok_or(IngestError::Parse {
        line: text.lines().count().max(1),
        message: "missing header `n=<rank> label=<name>`".into(),
    })
}

fn parse_header(content: &str) -> Result<SatakeTable, String> {
    let rest = content
        .strip_prefix("n=")
        .ok_or_else(|| format!("expected header `n=<rank> label=<name>`, found {content:?}"))?;
    let (rank, label) = match rest.split_once(char::is_whitespace) {
        Some((rank, tail)) => {
            let tail = tail.trim();
            let label = tail
                .strip_prefix("label=")
                .ok_or_else(|| format!("unexpected header field {tail:?}"))?;
            (rank, label.trim().to_string())
        }
        None => (rest, String::new()),
    };
    let n: usize = rank.parse().map_err(|_| format!("bad rank {rank:?}"))?;
    Ok(SatakeTable::new(n, label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_line() {
        let t = ingest_str("# toy\nn=2 label=demo set\n2 | 1/2 3 | 1\n").unwrap();
        assert_eq!(t.n(), 2);
        assert_eq!(t.label(), "demo set");
        let d = t.get(2).unwrap();
        assert_eq!(d.z(), [ExactScalar::ratio(1, 2), ExactScalar::from_int(3)]);
        assert_eq!(d.u(), &ExactScalar::one());
    }

    #[test]
    fn text_round_trip() {
        let t = ingest_str("n=2 label=x\n3 | -1/3 2 | 1/2  # trailing\n\n2 | 1 1 | -1\n").unwrap();
        assert_eq!(ingest_str(&t.to_text()).unwrap(), t);
        assert_eq!(t.entries().keys().copied().collect::<Vec<_>>(), [2, 3]);
    }

    #[test]
    fn rejects_duplicates_zeros_and_bad_lengths() {
        let dup = ingest_str("n=1 label=x\n2 | 1 | 1\n2 | 3 | 1\n").unwrap_err();
        assert!(
            matches!(dup, IngestError::Validation { line: 3, .. }),
            "{dup}"
        );
        let zero = ingest_str("n=2 label=x\n2 | 0 1 | 1\n").unwrap_err();
        assert!(
            matches!(zero, IngestError::Validation { line: 2, .. }),
            "{zero}"
        );
        let zero_u = ingest_str("n=1 label=x\n2 | 1 | 0\n").unwrap_err();
        assert!(matches!(zero_u, IngestError::Validation { .. }));
        let short = ingest_str("n=3 label=x\n5 | 1 2 | 1\n").unwrap_err();
        assert!(matches!(short, IngestError::Validation { line: 2, .. }));
        let composite = ingest_str("n=1 label=x\n4 | 1 | 1\n").unwrap_err();
        assert!(matches!(composite, IngestError::Validation { .. }));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = ingest_str("n=1 label=x\n\n2 | 1\n").unwrap_err();
        assert!(matches!(e, IngestError::Parse { line: 3, .. }));
        let e = ingest_str("n=1 label=x\n2 | a | 1\n").unwrap_err();
        assert!(matches!(e, IngestError::Parse { line: 2, .. }));
        let e = ingest_str("2 | 1 | 1\n").unwrap_err();
        assert!(matches!(e, IngestError::Parse { line: 1, .. }));
        assert!(matches!(
            ingest_str("# nothing\n"),
            Err(IngestError::Parse { .. })
        ));
        assert!(matches!(
            ingest_str("n=0 label=x\n"),
            Err(IngestError::Validation { line: 1, .. })
        ));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
