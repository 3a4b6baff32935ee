use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::record::{Check, ScreenRecord, Status};
use crate::error::Error;
use crate::formulas::{principal_spec_closed, principal_spec_via_h, ExcitedShape};
use crate::oracles::Oracle;
use crate::partition::{Partition, SkewShape};
use crate::qarith::{QRat, QSeries};

fn record(shape: &ExcitedShape, n: Option<i64>, check: Check, status: Status, detail: String, elapsed: Duration) -> ScreenRecord {
    ScreenRecord {
        lambda: shape.shape().outer().clone(),
        mu: shape.shape().inner().clone(),
        n,
        check,
        status,
        detail,
        elapsed,
    }
}

/// Runs `body` and stamps the resulting record with its running time.
fn timed(
    shape: &ExcitedShape,
    n: Option<i64>,
    check: Check,
    body: impl FnOnce() -> (Status, String),
) -> ScreenRecord {
    let start = Instant::now();
    let (status, detail) = body();
    record(shape, n, check, status, detail, start.elapsed())
}

fn skipped_or_fail(err: &Error) -> (Status, String) {
    match err {
        Error::SizeLimitExceeded { .. } => (Status::Skipped, err.to_string()),
        _ => (Status::Fail, format!("error: {err}")),
    }
}

fn series_mismatch(a: &QSeries, b: &QSeries) -> Option<usize> {
    (0..=a.order()).find(|&k| a.coeff(k) != b.coeff(k))
}

/// `H(n; q)` as the literal EYD sum against `f_q · Π [n + c]_q`.
pub fn run_check_theorem(shape: &ExcitedShape, n: i64) -> ScreenRecord {
    timed(shape, Some(n), Check::Theorem, || {
        let sum = shape.h_sum(n);
        let prod = shape.h_product(n);
        match (sum, prod) {
            (Ok(s), Ok(p)) if s == p => (Status::Pass, format!("H = {p}")),
            (Ok(s), Ok(p)) => (Status::Fail, format!("sum = {s}; product = {p}")),
            (Err(e), _) | (_, Err(e)) => (Status::Fail, format!("error: {e}")),
        }
    })
}

/// One record per `n`: `H̄(n)` must be a nonnegative integer.
pub fn screen_conj1(shape: &ExcitedShape, ns: impl IntoIterator<Item = i64>) -> Vec<ScreenRecord> {
    ns.into_iter()
        .map(|n| {
            timed(shape, Some(n), Check::Conj1, || match shape.hbar(n) {
                Ok(v) if v.is_integer() && !v.is_negative() => (Status::Pass, format!("Hbar = {v}")),
                Ok(v) => (Status::Fail, format!("Hbar = {v}")),
                Err(e) => (Status::Fail, format!("error: {e}")),
            })
        })
        .collect()
}

fn canonical_verdict(r: &QRat) -> (Status, BigInt) {
    let at_minus_one = r.num_at_minus_one();
    let ok = r.all_coeffs_nonnegative() && !at_minus_one.is_negative();
    (if ok { Status::PassCanonical } else { Status::Inconclusive }, at_minus_one)
}

/// Conj2 for `n = None` (on `f_q`), Conj3 for `Some(n)` (on `H(n; q) / [m]_q!`).
/// Only the canonical reduced form is examined, so the verdict is
/// `PassCanonical` or `Inconclusive`.
pub fn screen_conj23(shape: &ExcitedShape, n: Option<i64>) -> ScreenRecord {
    match n {
        None => timed(shape, None, Check::Conj2, || {
            let f = shape.f_q();
            let (status, a) = canonical_verdict(f);
            (status, format!("f_q = {f}; num(-1) = {a}"))
        }),
        Some(n) => timed(shape, Some(n), Check::Conj3, || match shape.h_over_q_factorial(n) {
            Ok(r) => {
                let (status, a) = canonical_verdict(&r);
                let mut detail = format!("H/[m]! = {r}; num(-1) = {a}");
                if &r == shape.f_q() {
                    detail.push_str("; equals f_q");
                }
                (status, detail)
            }
            Err(e) => (Status::Inconclusive, format!("error: {e}")),
        }),
    }
}

/// Classification of `f_q`: trivial denominator, nonnegative numerator, and
/// whether every term of the hook-length sum is an integer.
pub fn screen_fq_polynomiality(shape: &ExcitedShape) -> ScreenRecord {
    timed(shape, None, Check::FqPolynomiality, || {
        let f = shape.f_q();
        let polynomial = f.as_poly().is_some();
        let nonnegative = f.num().coeffs().iter().all(|c| !c.is_negative());
        let terms = shape.naruse_terms();
        let integral = terms.iter().filter(|t| t.is_integer()).count();
        let yes = |b: bool| if b { "yes" } else { "no" };
        (
            Status::Pass,
            format!(
                "polynomial = {}; nonnegative = {}; integral terms = {}/{}",
                yes(polynomial),
                yes(nonnegative),
                integral,
                terms.len()
            ),
        )
    })
}

/// EYD series against semistandard tableaux with entries `1, 2, …`.
pub fn check_eq2(shape: &ExcitedShape, oracle: &Oracle, order: usize) -> ScreenRecord {
    timed(shape, None, Check::Eq2, || {
        let eyd = shape.spec_series(order);
        match oracle.ssyt_spec_series(shape.shape(), order) {
            Ok(brute) => match series_mismatch(&eyd, &brute) {
                None => (Status::Pass, format!("N = {order}")),
                Some(k) => (Status::Fail, format!("first mismatch at q^{k}; eyd = {eyd}; oracle = {brute}")),
            },
            Err(e) => skipped_or_fail(&e),
        }
    })
}

/// Straight shapes: EYD series against `q^{b(λ)} Π 1/(1 - q^h)`.
pub fn check_eq3(shape: &ExcitedShape, order: usize) -> ScreenRecord {
    timed(shape, None, Check::Eq3, || {
        let outer = shape.shape().outer();
        let eyd = shape.spec_series(order);
        let mut closed = QSeries::one(order).shift(outer.b_stat().min(order + 1));
        for c in outer.cells() {
            closed.div_one_minus_q_pow(outer.hook(c).expect("cell of λ"));
        }
        match series_mismatch(&eyd, &closed) {
            None => (Status::Pass, format!("N = {order}")),
            Some(k) => (Status::Fail, format!("first mismatch at q^{k}; eyd = {eyd}; closed = {closed}")),
        }
    })
}

/// Straight shapes: closed hook-content form against the tableau generating
/// polynomial and against `q^{b(λ)} H_λ(n; q) / [|λ|]_q!`.
pub fn check_eq4(shape: &ExcitedShape, oracle: &Oracle, n: i64) -> ScreenRecord {
    timed(shape, Some(n), Check::Eq4, || {
        let outer = shape.shape().outer();
        let Ok(nu) = usize::try_from(n) else {
            return (Status::Fail, format!("error: {}", Error::NegativeQInt(n)));
        };
        let closed = principal_spec_closed(outer, nu);
        let via_h = match principal_spec_via_h(outer, nu) {
            Ok(v) => v,
            Err(e) => return (Status::Fail, format!("error: {e}")),
        };
        if closed != via_h {
            return (Status::Fail, format!("closed = {closed}; via H = {via_h}"));
        }
        match oracle.ssyt_genpoly(shape.shape(), nu) {
            Ok(p) if QRat::from_poly(p.clone()) == closed => (Status::Pass, format!("s = {closed}")),
            Ok(p) => (Status::Fail, format!("closed = {closed}; oracle = {p}")),
            Err(e @ Error::SizeLimitExceeded { .. }) => {
                (Status::Skipped, format!("closed = via H; oracle: {e}"))
            }
            Err(e) => (Status::Fail, format!("error: {e}")),
        }
    })
}

/// `f^{λ/μ} = Σ_ν c^λ_{μν} f^ν` with brute-force coefficients.
pub fn check_lr(shape: &ExcitedShape, oracle: &Oracle) -> ScreenRecord {
    timed(shape, None, Check::LR, || {
        let (outer, inner) = (shape.shape().outer(), shape.shape().inner());
        let coeffs = match oracle.lr_coefficients(outer, inner) {
            Ok(c) => c,
            Err(e) => return skipped_or_fail(&e),
        };
        let lhs = match shape.naruse_f() {
            Ok(v) => v,
            Err(e) => return (Status::Fail, format!("error: {e}")),
        };
        let mut rhs = BigInt::zero();
        let mut terms = Vec::with_capacity(coeffs.len());
        for (nu, c) in &coeffs {
            match ExcitedShape::new(SkewShape::straight(nu.clone())).naruse_f() {
                Ok(f) => {
                    terms.push(format!("{c}*f[{nu}]={}", &f * c));
                    rhs += f * c;
                }
                Err(e) => return (Status::Fail, format!("error: {e}")),
            }
        }
        if lhs == rhs {
            (Status::Pass, format!("f = {lhs} over {} terms", coeffs.len()))
        } else {
            (Status::Fail, format!("f = {lhs}; sum = {rhs}; {}", terms.join(" + ")))
        }
    })
}

/// Every record for one `(λ, μ)` pair, in emission order: checks without `n`
/// first, then each `n` ascending.
pub fn run_pair(
    lambda: &Partition,
    mu: &Partition,
    checks: &[Check],
    ns: &[i64],
    truncation: usize,
    oracle: &Oracle,
) -> Vec<ScreenRecord> {
    let shape = ExcitedShape::new(SkewShape::new(lambda.clone(), mu.clone()).expect("μ ⊆ λ"));
    let straight = mu.is_empty();
    let active: Vec<Check> = checks.iter().copied().filter(|c| straight || !c.straight_only()).collect();
    let mut out = Vec::new();
    for &check in active.iter().filter(|c| !c.takes_n()) {
        out.push(match check {
            Check::Conj2 => screen_conj23(&shape, None),
            Check::Eq2 => check_eq2(&shape, oracle, truncation),
            Check::Eq3 => check_eq3(&shape, truncation),
            Check::LR => check_lr(&shape, oracle),
            Check::FqPolynomiality => screen_fq_polynomiality(&shape),
            _ => unreachable!(),
        });
    }
    for &n in ns {
        for &check in active.iter().filter(|c| c.takes_n()) {
            out.push(match check {
                Check::Theorem => run_check_theorem(&shape, n),
                Check::Conj1 => screen_conj1(&shape, [n]).remove(0),
                Check::Conj3 => screen_conj23(&shape, Some(n)),
                Check::Eq4 => check_eq4(&shape, oracle, n),
                _ => unreachable!(),
            });
        }
    }
    out
}

/// Keys [`run_pair`] would emit, without computing anything.
pub fn pair_keys(lambda: &Partition, mu: &Partition, checks: &[Check], ns: &[i64]) -> Vec<String> {
    let straight = mu.is_empty();
    let active: Vec<Check> = checks.iter().copied().filter(|c| straight || !c.straight_only()).collect();
    let mut out = Vec::new();
    for &check in active.iter().filter(|c| !c.takes_n()) {
        out.push(super::record::record_key(lambda, mu, None, check));
    }
    for &n in ns {
        for &check in active.iter().filter(|c| c.takes_n()) {
            out.push(super::record::record_key(lambda, mu, Some(n), check));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(text: &str) -> ExcitedShape {
        ExcitedShape::new(text.parse().unwrap())
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(run_check_theorem(&es("3,3,2,1/2,1"), 4).status, Status::Pass);
        assert_eq!(run_check_theorem(&es("5,5,3/3,2,1"), 3).status, Status::Pass);
        let r = run_check_theorem(&es("3,2/3,2"), 7);
        assert_eq!((r.status, r.detail.as_str()), (Status::Pass, "H = 1"));
    }

    #[test]
    fn conj1_examples() {
        let recs = screen_conj1(&es("3,3,2,1/2,1"), 4..=8);
        let details: Vec<&str> = recs.iter().map(|r| r.detail.as_str()).collect();
        assert!(recs.iter().all(|r| r.status == Status::Pass));
        // (61/720) Π_{k=-3}^{2} (n + k)
        let closed = |n: i64| 61 * (-3..=2).map(|k| n + k).product::<i64>() / 720;
        let expected: Vec<String> = (4..=8).map(|n| format!("Hbar = {}", closed(n))).collect();
        assert_eq!(details, expected);

        assert_eq!(screen_conj1(&es("3,3,2,2/2,1"), [4])[0].detail, "Hbar = 26");
        assert_eq!(screen_conj1(&es("2,1/2,1"), [2])[0].detail, "Hbar = 1");
    }

    #[test]
    fn conj23_examples() {
        let r = screen_conj23(&es("5,5,3/3,2,1"), None);
        assert_eq!(r.check, Check::Conj2);
        assert_eq!(r.status, Status::PassCanonical);
        assert!(r.detail.ends_with("num(-1) = 6"), "{}", r.detail);

        let r = screen_conj23(&es("3,3,2,2/2,1"), Some(4));
        assert_eq!((r.check, r.status), (Check::Conj3, Status::PassCanonical));
        assert!(r.detail.contains("(1 + q + q^2 + q^3 + q^4)"), "{}", r.detail);
        assert!(r.detail.contains("num(-1) = 6"), "{}", r.detail);

        let r = screen_conj23(&es("4,2,1"), None);
        assert_eq!(r.status, Status::PassCanonical);
        assert!(!r.detail.contains(" / "));
    }

    #[test]
    fn fq_polynomiality_examples() {
        let r = screen_fq_polynomiality(&es("3,3,2,1/2,1"));
        assert!(r.detail.starts_with("polynomial = yes; nonnegative = yes"), "{}", r.detail);
        let r = screen_fq_polynomiality(&es("5,5,3/3,2,1"));
        assert!(r.detail.starts_with("polynomial = no"), "{}", r.detail);
        let r = screen_fq_polynomiality(&es("3,2,2"));
        assert!(r.detail.starts_with("polynomial = yes"), "{}", r.detail);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn series_and_lr_checks() {
        let oracle = Oracle::default();
        assert_eq!(check_eq2(&es("3,2,1/1"), &oracle, 12).status, Status::Pass);
        assert_eq!(check_eq3(&es("3,1"), 15).status, Status::Pass);
        assert_eq!(check_eq4(&es("2,2,1"), &oracle, 4).status, Status::Pass);
        let r = check_lr(&es("3,3,2,1/2,1"), &oracle);
        assert_eq!((r.status, r.detail.as_str()), (Status::Pass, "f = 61 over 5 terms"));
    }

    #[test]
    fn oracle_limits_skip() {
        let tiny = Oracle::new(crate::oracles::OracleLimits { syt_cells: 2, ssyt_cells: 2 });
        assert_eq!(check_lr(&es("3,1"), &tiny).status, Status::Skipped);
        assert_eq!(check_eq2(&es("3,1"), &tiny, 5).status, Status::Skipped);
    }

    #[test]
    fn pair_emission_order() {
        let checks = Check::ALL;
        let lambda: Partition = "2,1".parse().unwrap();
        let recs = run_pair(&lambda, &Partition::empty(), &checks, &[2, 3], 8, &Oracle::default());
        let keys: Vec<String> = recs.iter().map(ScreenRecord::key).collect();
        assert_eq!(keys, pair_keys(&lambda, &Partition::empty(), &checks, &[2, 3]));
        assert_eq!(keys.len(), 5 + 2 * 4);
        assert!(recs.iter().all(|r| r.status != Status::Fail));

        let mu: Partition = "1".parse().unwrap();
        let recs = run_pair(&lambda, &mu, &checks, &[2], 8, &Oracle::default());
        assert!(recs.iter().all(|r| !r.check.straight_only()));
        assert_eq!(recs.len(), 4 + 3);
    }
}
