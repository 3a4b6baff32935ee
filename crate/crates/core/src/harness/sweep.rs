use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::checks::{pair_keys, run_pair};
use super::record::{parse_line, Check, ScreenRecord, Status};
use crate::error::{Error, Result};
use crate::oracles::{Oracle, OracleLimits};
use crate::partition::{partitions_up_to, subpartitions, Partition};

/// Parameters of a screening run.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Largest `|λ|` visited; every `μ ⊆ λ` is visited.
    pub max_lambda_size: usize,
    /// Inclusive offsets added to `ℓ(λ)` to get the `n` values.
    pub n_offsets: RangeInclusive<i64>,
    /// Order of the series checks.
    pub truncation: usize,
    pub checks: BTreeSet<Check>,
    pub workers: usize,
    /// Append here and resume from it; stdout when `None`.
    pub output_path: Option<PathBuf>,
    pub json: bool,
    /// Print per-record running times. Off by default so that reports are
    /// reproducible byte for byte.
    pub timings: bool,
    pub limits: OracleLimits,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_lambda_size: 6,
            n_offsets: 0..=3,
            truncation: 20,
            checks: Check::ALL.into_iter().collect(),
            workers: 1,
            output_path: None,
            json: false,
            timings: false,
            limits: OracleLimits::default(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if *self.n_offsets.start() < 0 {
            return Err(Error::InvalidConfig("n offsets must be nonnegative".into()));
        }
        if self.n_offsets.is_empty() {
            return Err(Error::InvalidConfig("empty n offset range".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("at least one worker is required".into()));
        }
        Ok(())
    }

    /// The `n` values for `λ`.
    pub fn n_values(&self, lambda: &Partition) -> Vec<i64> {
        let base = lambda.len() as i64;
        self.n_offsets.clone().map(|k| base + k).collect()
    }

    /// Every `(λ, μ)` work unit in emission order.
    pub fn pairs(&self) -> Vec<(Partition, Partition)> {
        partitions_up_to(self.max_lambda_size)
            .flat_map(|lambda| {
                subpartitions(&lambda)
                    .into_iter()
                    .map(move |mu| (lambda.clone(), mu))
            })
            .collect()
    }

    fn check_list(&self) -> Vec<Check> {
        self.checks.iter().copied().collect()
    }

    fn render(&self, r: &ScreenRecord) -> String {
        if self.json {
            r.to_json(self.timings)
        } else {
            r.to_text(self.timings)
        }
    }
}

/// Record counts per status, plus the keys of failing records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub counts: BTreeMap<Status, usize>,
    pub fails: Vec<String>,
    /// Records found in the output file before this run.
    pub resumed: usize,
}

impl SweepSummary {
    fn tally(&mut self, key: String, status: Status) {
        *self.counts.entry(status).or_insert(0) += 1;
        if status == Status::Fail {
            self.fails.push(key);
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, status: Status) -> usize {
        self.counts.get(&status).copied().unwrap_or(0)
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} records", self.total())?;
        for (status, count) in &self.counts {
            write!(f, "; {status} {count}")?;
        }
        if self.resumed > 0 {
            write!(f, " ({} resumed)", self.resumed)?;
        }
        Ok(())
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))
}

/// Runs the sweep, calling `emit` on each record in deterministic order.
/// Pairs whose keys are all in `skip` are not recomputed.
fn drive(config: &SweepConfig, skip: &HashSet<String>, emit: &mut dyn FnMut(Vec<ScreenRecord>) -> Result<()>) -> Result<()> {
    config.validate()?;
    let checks = config.check_list();
    let oracle = Oracle::new(config.limits);
    let pairs: Vec<(Partition, Partition)> = config
        .pairs()
        .into_iter()
        .filter(|(l, m)| {
            skip.is_empty() || !pair_keys(l, m, &checks, &config.n_values(l)).iter().all(|k| skip.contains(k))
        })
        .collect();
    let pool = pool(config.workers)?;
    let chunk = (config.workers * 8).max(16);
    for batch in pairs.chunks(chunk) {
        let results: Vec<Vec<ScreenRecord>> = pool.install(|| {
            batch
                .par_iter()
                .map(|(l, m)| run_pair(l, m, &checks, &config.n_values(l), config.truncation, &oracle))
                .collect()
        });
        for recs in results {
            emit(recs.into_iter().filter(|r| !skip.contains(&r.key())).collect())?;
        }
    }
    Ok(())
}

/// All records of a run, in emission order.
pub fn sweep_records(config: &SweepConfig) -> Result<Vec<ScreenRecord>> {
    let mut out = Vec::new();
    drive(config, &HashSet::new(), &mut |recs| {
        out.extend(recs);
        Ok(())
    })?;
    Ok(out)
}

/// Writes every record not in `skip` to `out`, flushing after each pair.
pub fn sweep_to_writer(config: &SweepConfig, out: &mut dyn Write, skip: &HashSet<String>) -> Result<SweepSummary> {
    let mut summary = SweepSummary::default();
    drive(config, skip, &mut |recs| {
        for r in &recs {
            writeln!(out, "{}", config.render(r))?;
            summary.tally(r.key(), r.status);
        }
        out.flush()?;
        Ok(())
    })?;
    Ok(summary)
}

/// Keys already present in a report, after cutting off a trailing partial
/// line left by an interrupted run.
pub fn load_existing(path: &Path) -> Result<(HashSet<String>, SweepSummary)> {
    let mut summary = SweepSummary::default();
    let mut keys = HashSet::new();
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok((keys, summary)),
        Err(e) => return Err(e.into()),
    };
    let complete = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    if complete < bytes.len() {
        OpenOptions::new().write(true).open(path)?.set_len(complete as u64)?;
    }
    let text = String::from_utf8_lossy(&bytes[..complete]);
    for line in text.lines() {
        if let Some((key, status)) = parse_line(line) {
            if keys.insert(key.clone()) {
                summary.tally(key, status);
                summary.resumed += 1;
            }
        }
    }
    Ok((keys, summary))
}

/// Runs a sweep to `config.output_path` (resuming from whatever it already
/// holds) or to stdout. The returned summary covers the whole report.
pub fn sweep(config: &SweepConfig) -> Result<SweepSummary> {
    config.validate()?;
    match &config.output_path {
        None => sweep_to_writer(config, &mut io::stdout().lock(), &HashSet::new()),
        Some(path) => {
            let (skip, mut summary) = load_existing(path)?;
            let file = OpenOptions::new().create(true).append(true).open(path)?;
            let fresh = sweep_to_writer(config, &mut BufWriter::new(file), &skip)?;
            for (status, count) in fresh.counts {
                *summary.counts.entry(status).or_insert(0) += count;
            }
            summary.fails.extend(fresh.fails);
            Ok(summary)
        }
    }
}
