use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;

/// What a record verifies. The declaration order is the emission order
/// within one `(λ, μ, n)` key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Check {
    /// `H` sum side equals product side.
    Theorem,
    /// `H̄(n)` is a nonnegative integer.
    Conj1,
    /// Canonical `f_q` has nonnegative parts and `num(-1) ≥ 0`.
    Conj2,
    /// Same for `H(n; q) / [m]_q!`.
    Conj3,
    /// EYD series equals the tableau series of `s_{λ/μ}(1, q, q², …)`.
    Eq2,
    /// Straight-shape series equals `q^{b(λ)} Π 1/(1 - q^h)`.
    Eq3,
    /// Closed hook-content form equals the `SSYT^n` polynomial and `q^b H / [m]_q!`.
    Eq4,
    /// `f^{λ/μ} = Σ_ν c^λ_{μν} f^ν`.
    LR,
    /// Whether `f_q` is a polynomial with nonnegative coefficients.
    FqPolynomiality,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Theorem,
        Check::Conj1,
        Check::Conj2,
        Check::Conj3,
        Check::Eq2,
        Check::Eq3,
        Check::Eq4,
        Check::LR,
        Check::FqPolynomiality,
    ];

    /// Whether the check is run per `n`.
    pub fn takes_n(self) -> bool {
        matches!(self, Check::Theorem | Check::Conj1 | Check::Conj3 | Check::Eq4)
    }

    /// Whether the check only applies to straight shapes.
    pub fn straight_only(self) -> bool {
        matches!(self, Check::Eq3 | Check::Eq4)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        Ok(match key.as_str() {
            "theorem" => Check::Theorem,
            "conj1" => Check::Conj1,
            "conj2" => Check::Conj2,
            "conj3" => Check::Conj3,
            "eq2" => Check::Eq2,
            "eq3" => Check::Eq3,
            "eq4" => Check::Eq4,
            "lr" => Check::LR,
            "fqpolynomiality" | "fqpoly" => Check::FqPolynomiality,
            _ => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "unknown check".into(),
                })
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Pass,
    /// The canonical reduced form satisfies an existential claim.
    PassCanonical,
    /// The canonical form does not witness an existential claim; some other
    /// representation still might.
    Inconclusive,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "Pass" => Status::Pass,
            "PassCanonical" => Status::PassCanonical,
            "Inconclusive" => Status::Inconclusive,
            "Fail" => Status::Fail,
            "Skipped" => Status::Skipped,
            _ => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "unknown status".into(),
                })
            }
        })
    }
}

/// One result row of a screening run.
#[derive(Clone, Debug, PartialEq)]
pub struct ScreenRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: Option<i64>,
    pub check: Check,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

/// On-disk form of a record, one JSON object per line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecordLine {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: Option<i64>,
    pub check: Check,
    pub status: Status,
    pub detail: String,
    /// Milliseconds; `null` unless timings were requested.
    pub elapsed: Option<f64>,
}

/// Key identifying a record: `λ/μ n=<n|-> <check>`.
pub fn record_key(lambda: &Partition, mu: &Partition, n: Option<i64>, check: Check) -> String {
    let n = n.map_or_else(|| "-".to_string(), |v| v.to_string());
    format!("{lambda}/{mu} n={n} {check}")
}

impl ScreenRecord {
    pub fn key(&self) -> String {
        record_key(&self.lambda, &self.mu, self.n, self.check)
    }

    pub fn to_line(&self, timings: bool) -> RecordLine {
        RecordLine {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            n: self.n,
            check: self.check,
            status: self.status,
            detail: self.detail.clone(),
            elapsed: timings.then_some(self.elapsed.as_secs_f64() * 1e3),
        }
    }

    pub fn to_json(&self, timings: bool) -> String {
        serde_json::to_string(&self.to_line(timings)).expect("records serialize")
    }

    /// Aligned text: `shape n=… check status detail [elapsed]`.
    pub fn to_text(&self, timings: bool) -> String {
        let shape = format!("{}/{}", self.lambda, self.mu);
        let n = self.n.map_or_else(|| "-".to_string(), |v| v.to_string());
        let mut line = format!(
            "{shape:<20} n={n:<4} {:<15} {:<13} {}",
            self.check.to_string(),
            self.status.to_string(),
            self.detail
        );
        if timings {
            line.push_str(&format!(" [{:.3}ms]", self.elapsed.as_secs_f64() * 1e3));
        }
        line
    }
}

/// Key and status of a previously written line, text or JSON.
pub fn parse_line(line: &str) -> Option<(String, Status)> {
    let line = line.trim();
    if line.is_empty() {
        return None;
    }
    if line.starts_with('{') {
        let rec: RecordLine = serde_json::from_str(line).ok()?;
        return Some((record_key(&rec.lambda, &rec.mu, rec.n, rec.check), rec.status));
    }
    let mut tokens = line.split_whitespace();
    let shape = tokens.next()?;
    let n = tokens.next()?;
    let check = tokens.next()?;
    let status = tokens.next()?.parse().ok()?;
    Some((format!("{shape} {n} {check}"), status))
}
