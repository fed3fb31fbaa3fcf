//! Galois census of ring-of-cliques interesting factors.
//!
//! For every non-decreasing tuple `(a_1, ..., a_n)` with entries in `1..=l`
//! and `gcd(a_1, ..., a_n) = 1`, the interesting factor of
//! `R(a_1, ..., a_n, 1)` (degree `n - 1`) is tested for irreducibility and,
//! when irreducible, its Galois group is identified.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor;
use crate::families::ring_interesting_factor;
use crate::galois::{self, GaloisResult};
use crate::intpoly::IntPoly;

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("invalid survey parameters: {0}")]
    InvalidParameters(String),
    #[error("bad record on line {line}: {msg}")]
    BadRecord { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Non-decreasing `n`-tuples over `1..=l` with gcd 1, in lexicographic order.
pub fn enumerate_tuples(n: usize, l: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if n == 0 || l == 0 { None } else { Some(vec![1; n]) };
    std::iter::from_fn(move || loop {
        let t = cur.take()?;
        let mut next = t.clone();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if next[i] < l {
                next[i] += 1;
                let v = next[i];
                for x in &mut next[i + 1..] {
                    *x = v;
                }
                cur = Some(next);
                break;
            }
        }
        if t.iter().fold(0, |g, &a| g.gcd(&a)) == 1 {
            return Some(t);
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Reducible,
    Irreducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRecord {
    pub tuple: Vec<usize>,
    pub degree: usize,
    pub status: Status,
    /// Present iff `status` is irreducible.
    pub group: Option<GaloisResult>,
    pub factor: IntPoly,
}

impl SurveyRecord {
    /// Irreducible with a Galois group that is not pinned down.
    pub fn is_ambiguous(&self) -> bool {
        self.group.as_ref().is_some_and(|g| g.is_ambiguous() || g.order.is_none())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&RecordLine::from(self)).expect("records serialize")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RecordLine {
    tuple: Vec<usize>,
    degree: usize,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    method: Option<galois::Method>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    ambiguous_with: Vec<String>,
    #[serde(default)]
    samples: usize,
    factor: String,
}

impl From<&SurveyRecord> for RecordLine {
    fn from(r: &SurveyRecord) -> Self {
        RecordLine {
            tuple: r.tuple.clone(),
            degree: r.degree,
            status: r.status,
            group: r.group.as_ref().map(|g| g.name.clone()),
            order: r.group.as_ref().and_then(|g| g.order),
            method: r.group.as_ref().map(|g| g.method),
            ambiguous_with: r.group.as_ref().map(|g| g.ambiguous_with.clone()).unwrap_or_default(),
            samples: r.group.as_ref().map_or(0, |g| g.samples),
            factor: r.factor.format_var('q'),
        }
    }
}

impl FromStr for SurveyRecord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let line: RecordLine = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let factor = IntPoly::from_str(&line.factor).map_err(|e| e.to_string())?;
        let group = match (line.status, line.group) {
            (Status::Irreducible, Some(name)) => Some(GaloisResult {
                degree: line.degree,
                name,
                order: line.order,
                method: line.method.ok_or("missing method")?,
                samples: line.samples,
                ambiguous_with: line.ambiguous_with,
            }),
            (Status::Reducible, None) => None,
            _ => return Err("group must be present exactly for irreducible records".into()),
        };
        Ok(SurveyRecord { tuple: line.tuple, degree: line.degree, status: line.status, group, factor })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyTally {
    pub n: usize,
    pub l: usize,
    pub total: u64,
    pub reducible: u64,
    pub counts: BTreeMap<String, u64>,
    pub ambiguous: u64,
}

impl SurveyTally {
    pub fn new(n: usize, l: usize) -> Self {
        SurveyTally { n, l, ..Default::default() }
    }

    pub fn add(&mut self, r: &SurveyRecord) {
        self.total += 1;
        match &r.group {
            None => self.reducible += 1,
            Some(_) if r.is_ambiguous() => self.ambiguous += 1,
            Some(g) => *self.counts.entry(g.name.clone()).or_default() += 1,
        }
    }

    pub fn merge(&mut self, other: &SurveyTally) {
        self.total += other.total;
        self.reducible += other.reducible;
        self.ambiguous += other.ambiguous;
        for (k, v) in &other.counts {
            *self.counts.entry(k.clone()).or_default() += v;
        }
    }

    /// `reducible + Σ counts + ambiguous = total`.
    pub fn is_conserved(&self) -> bool {
        self.reducible + self.counts.values().sum::<u64>() + self.ambiguous == self.total
    }
}

impl fmt::Display for SurveyTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "total={} reducible={}", self.total, self.reducible)?;
        let mut groups: Vec<(&String, &u64)> = self.counts.iter().collect();
        groups.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
        for (name, c) in groups {
            write!(f, " {name}={c}")?;
        }
        if self.ambiguous > 0 {
            write!(f, " ambiguous={}", self.ambiguous)?;
        }
        Ok(())
    }
}

/// Worker `offset` of `stride` handles tuple indices `≡ offset (mod stride)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub offset: usize,
    pub stride: usize,
}

impl Shard {
    pub const ALL: Shard = Shard { offset: 0, stride: 1 };

    pub fn new(offset: usize, stride: usize) -> Result<Self, SurveyError> {
        if stride == 0 || offset >= stride {
            return Err(SurveyError::InvalidParameters(format!("bad shard {offset}/{stride}")));
        }
        Ok(Shard { offset, stride })
    }
}

impl FromStr for Shard {
    type Err = SurveyError;

    /// `i/w`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SurveyError::InvalidParameters(format!("shard must look like i/w, got '{s}'"));
        let (i, w) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(i.trim().parse().map_err(|_| bad())?, w.trim().parse().map_err(|_| bad())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyConfig {
    /// Frobenius sample budget for degrees 5 and up.
    pub samples: usize,
    /// In-process worker threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig { samples: galois::DEFAULT_SAMPLES, workers: 1 }
    }
}

/// Factor and classify one tuple.
pub fn evaluate(tuple: &[usize], samples: usize) -> SurveyRecord {
    let factor = ring_interesting_factor(tuple).expect("tuples have at least two positive entries");
    let degree = factor.deg();
    let (status, group) = if factor::is_irreducible(&factor) {
        (Status::Irreducible, Some(galois::classify_irreducible(&factor, samples)))
    } else {
        (Status::Reducible, None)
    };
    SurveyRecord { tuple: tuple.to_vec(), degree, status, group, factor }
}

fn check(n: usize, l: usize) -> Result<(), SurveyError> {
    if n < 3 || l < 1 {
        return Err(SurveyError::InvalidParameters("need n >= 3 and l >= 1".into()));
    }
    Ok(())
}

const CHUNK: usize = 2048;

/// Run the survey over one shard, passing every record to `sink` in tuple
/// order, and return the tally. Tuples for which `skip` returns true are
/// neither evaluated nor counted.
pub fn survey_run_filtered(
    n: usize,
    l: usize,
    shard: Shard,
    config: SurveyConfig,
    skip: &(dyn Fn(&[usize]) -> bool + Sync),
    sink: &mut dyn FnMut(&SurveyRecord) -> io::Result<()>,
) -> Result<SurveyTally, SurveyError> {
    check(n, l)?;
    let mut tally = SurveyTally::new(n, l);
    let mine = enumerate_tuples(n, l)
        .enumerate()
        .filter(move |(i, _)| i % shard.stride == shard.offset)
        .map(|(_, t)| t)
        .filter(|t| !skip(t));
    let pool = if config.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .map_err(|e| SurveyError::InvalidParameters(e.to_string()))?,
        )
    } else {
        None
    };
    let mut batch: Vec<Vec<usize>> = Vec::with_capacity(CHUNK);
    let mut flush = |batch: &mut Vec<Vec<usize>>, tally: &mut SurveyTally| -> io::Result<()> {
        let records: Vec<SurveyRecord> = match &pool {
            Some(p) => p.install(|| batch.par_iter().map(|t| evaluate(t, config.samples)).collect()),
            None => batch.iter().map(|t| evaluate(t, config.samples)).collect(),
        };
        for r in &records {
            tally.add(r);
            sink(r)?;
        }
        batch.clear();
        Ok(())
    };
    for t in mine {
        batch.push(t);
        if batch.len() == CHUNK {
            flush(&mut batch, &mut tally)?;
        }
    }
    flush(&mut batch, &mut tally)?;
    Ok(tally)
}

/// [`survey_run_filtered`] without skipping.
pub fn survey_run(
    n: usize,
    l: usize,
    shard: Shard,
    config: SurveyConfig,
    sink: &mut dyn FnMut(&SurveyRecord) -> io::Result<()>,
) -> Result<SurveyTally, SurveyError> {
    survey_run_filtered(n, l, shard, config, &|_| false, sink)
}

/// Run the survey writing JSONL records to `path`. If the file already
/// holds records (from an interrupted run with the same parameters), they
/// are kept, counted, and their tuples skipped; a torn final line is
/// dropped.
pub fn survey_to_file(
    n: usize,
    l: usize,
    shard: Shard,
    config: SurveyConfig,
    path: &Path,
) -> Result<SurveyTally, SurveyError> {
    check(n, l)?;
    let mut tally = SurveyTally::new(n, l);
    let mut done: HashSet<Vec<usize>> = HashSet::new();
    let mut keep_bytes = 0u64;
    if path.exists() {
        let reader = BufReader::new(File::open(path)?);
        let mut offset = 0u64;
        for (i, line) in reader.split(b'\n').enumerate() {
            let bytes = line?;
            let text = String::from_utf8_lossy(&bytes);
            let len = bytes.len() as u64 + 1;
            if text.trim().is_empty() {
                offset += len;
                keep_bytes = offset;
                continue;
            }
            match text.parse::<SurveyRecord>() {
                Ok(r) => {
                    if r.tuple.len() != n || r.tuple.iter().any(|&a| a > l) {
                        return Err(SurveyError::BadRecord {
                            line: i + 1,
                            msg: "record from a different survey".into(),
                        });
                    }
                    if done.insert(r.tuple.clone()) {
                        tally.add(&r);
                    }
                    offset += len;
                    keep_bytes = offset;
                }
                Err(msg) => {
                    // only a torn trailing line is tolerated
                    offset += len;
                    let rest = std::fs::metadata(path)?.len();
                    if offset < rest {
                        return Err(SurveyError::BadRecord { line: i + 1, msg });
                    }
                }
            }
        }
    }
    let file = OpenOptions::new().create(true).write(true).truncate(false).open(path)?;
    file.set_len(keep_bytes.min(file.metadata()?.len()))?;
    let mut out = BufWriter::new(file);
    io::Seek::seek(&mut out, io::SeekFrom::End(0))?;
    let fresh = survey_run_filtered(n, l, shard, config, &|t| done.contains(t), &mut |r| {
        writeln!(out, "{}", r.to_json_line())
    })?;
    out.flush()?;
    tally.merge(&fresh);
    Ok(tally)
}

/// Merge per-shard tallies.
pub fn merge_tallies<'a>(parts: impl IntoIterator<Item = &'a SurveyTally>) -> SurveyTally {
    let mut it = parts.into_iter();
    let mut acc = it.next().cloned().unwrap_or_default();
    for t in it {
        acc.merge(t);
    }
    acc
}

/// Rebuild a tally from JSONL text.
pub fn tally_from_jsonl(n: usize, l: usize, text: &str) -> Result<SurveyTally, SurveyError> {
    let mut tally = SurveyTally::new(n, l);
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let r: SurveyRecord = line.parse().map_err(|msg| SurveyError::BadRecord { line: i + 1, msg })?;
        tally.add(&r);
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumeration() {
        let v: Vec<Vec<usize>> = enumerate_tuples(4, 2).collect();
        assert_eq!(v, vec![vec![1, 1, 1, 1], vec![1, 1, 1, 2], vec![1, 1, 2, 2], vec![1, 2, 2, 2]]);
        assert_eq!(enumerate_tuples(2, 1).collect::<Vec<_>>(), vec![vec![1, 1]]);
        // (2,2) and (3,3) have gcd > 1
        assert_eq!(enumerate_tuples(2, 3).count(), 4);
    }

    #[test]
    fn five_cycle_is_reducible() {
        let r = evaluate(&[1, 1, 1, 1], 100);
        assert_eq!(r.status, Status::Reducible);
        assert_eq!(r.factor, IntPoly::from_i64s(&[-4, 6, -4, 1]));
        assert!(r.group.is_none());
    }

    #[test]
    fn record_round_trip() {
        for t in [vec![1, 1, 1, 5], vec![1, 1, 1, 1], vec![1, 2, 3, 4, 5]] {
            let r = evaluate(&t, 200);
            let back: SurveyRecord = r.to_json_line().parse().unwrap();
            assert_eq!(back, r);
        }
        let line = evaluate(&[1, 1, 5], 10).to_json_line();
        assert_eq!(
            line,
            r#"{"tuple":[1,1,5],"degree":2,"status":"irreducible","group":"C2","order":2,"method":"exact-discriminant","samples":0,"factor":"q^2 - 7q + 11"}"#
        );
    }

    #[test]
    fn tally_display_and_merge() {
        let mut a = SurveyTally::new(4, 2);
        let mut b = SurveyTally::new(4, 2);
        for (i, t) in enumerate_tuples(4, 3).enumerate() {
            let r = evaluate(&t, 100);
            if i % 2 == 0 {
                a.add(&r)
            } else {
                b.add(&r)
            }
        }
        a.merge(&b);
        assert!(a.is_conserved());
        let s = a.to_string();
        assert!(s.starts_with(&format!("total={} reducible={}", a.total, a.reducible)));
    }

    #[test]
    fn shard_parsing() {
        assert_eq!("1/4".parse::<Shard>().unwrap(), Shard { offset: 1, stride: 4 });
        assert!("4/4".parse::<Shard>().is_err());
        assert!("x".parse::<Shard>().is_err());
    }
}
