//! Cyclotomic polynomials, used to cancel q-integer factors without a full
//! polynomial gcd. Every denominator in this crate is a product of `1 - q^h`
//! factors, hence of cyclotomic polynomials.

use super::poly::QPoly;

/// `Φ_1, …, Φ_max` computed by `Φ_k = (q^k - 1) / Π_{d | k, d < k} Φ_d`.
#[derive(Clone, Debug)]
pub struct CyclotomicTable {
    phis: Vec<QPoly>,
}

impl CyclotomicTable {
    pub fn up_to(max: usize) -> Self {
        let mut phis: Vec<QPoly> = Vec::with_capacity(max);
        for k in 1..=max {
            let mut p = -QPoly::one_minus_q_pow(k);
            for d in (1..k).filter(|d| k % d == 0) {
                p = p
                    .div_exact(&phis[d - 1])
                    .expect("cyclotomic divisor divides q^k - 1");
            }
            phis.push(p);
        }
        CyclotomicTable { phis }
    }

    pub fn max_order(&self) -> usize {
        self.phis.len()
    }

    /// `Φ_k`, `1 ≤ k ≤ max_order`.
    pub fn get(&self, k: usize) -> &QPoly {
        &self.phis[k - 1]
    }

    /// Writes `p = rest · Π Φ_k^{e_k}` by repeated trial division.
    /// Returns the exponents (index `k - 1`) and the cofactor `rest`.
    pub fn split(&self, p: &QPoly) -> (Vec<u32>, QPoly) {
        let mut exps = vec![0u32; self.phis.len()];
        let mut rest = p.clone();
        if rest.is_zero() {
            return (exps, rest);
        }
        for (i, phi) in self.phis.iter().enumerate() {
            while let Some(q) = rest.try_div_exact(phi) {
                rest = q;
                exps[i] += 1;
            }
        }
        (exps, rest)
    }
}
