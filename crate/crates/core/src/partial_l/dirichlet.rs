use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::table::{is_prime, SatakeTable};
use crate::exact_series::ExactScalar;
use crate::local_factors::{
    exterior_square_factor, linear_local_factor, standard_factor, EulerFactor,
};
use crate::weights_schur::SatakeData;

/// Which local factors enter the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorSelection {
    /// `L(s, α ⊗ π) L(2s, Λ², π)`.
    #[default]
    Full,
    /// `L(s, α ⊗ π)` alone.
    StandardOnly,
    /// `L(2s, Λ², π)` alone.
    ExteriorSquareOnly,
}

impl FactorSelection {
    fn local_factor(self, data: &SatakeData) -> EulerFactor {
        match self {
            FactorSelection::Full => linear_local_factor(data),
            FactorSelection::StandardOnly => standard_factor(data),
            FactorSelection::ExteriorSquareOnly => exterior_square_factor(data),
        }
    }
}

/// Absolute values of the inverse roots of one local factor: `1/P` is
/// dominated coefficientwise by `∏ 1/(1 - a t) ∏ 1/(1 - b t^2)`.
#[derive(Debug, Clone)]
struct LocalMajorant {
    p: u64,
    linear: Vec<f64>,
    quadratic: Vec<f64>,
}

impl LocalMajorant {
    fn new(p: u64, data: &SatakeData, selection: FactorSelection) -> Self {
        let mut linear = Vec::new();
        let mut quadratic = Vec::new();
        if selection != FactorSelection::ExteriorSquareOnly {
            linear = data
                .z()
                .iter()
                .map(|z| (data.u() * z).abs().to_f64())
                .collect();
        }
        if selection != FactorSelection::StandardOnly {
            let z = data.z();
            for j in 0..z.len() {
                for k in j + 1..z.len() {
                    quadratic.push((&z[j] * &z[k]).abs().to_f64());
                }
            }
        }
        LocalMajorant {
            p,
            linear,
            quadratic,
        }
    }

    /// `max(log_p a, log_p b / 2)` over the inverse roots.
    fn log_scale(&self) -> f64 {
        let lp = (self.p as f64).ln();
        self.linear
            .iter()
            .map(|a| a.ln() / lp)
            .chain(self.quadratic.iter().map(|b| b.ln() / (2.0 * lp)))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Coefficients of the dominating series through `t^order`.
    fn series(&self, order: usize) -> Vec<f64> {
        let mut c = vec![0.0; order + 1];
        c[0] = 1.0;
        for &a in &self.linear {
            for k in 1..=order {
                c[k] += a * c[k - 1];
            }
        }
        for &b in &self.quadratic {
            for k in 2..=order {
                c[k] += b * c[k - 2];
            }
        }
        c
    }

    /// Value of the dominating factor at `t = p^{-sigma}`, infinite when a
    /// geometric factor diverges.
    fn value(&self, sigma: f64) -> f64 {
        let t = (self.p as f64).powf(-sigma);
        let mut v = 1.0;
        for &a in &self.linear {
            let r = a * t;
            if r >= 1.0 {
                return f64::INFINITY;
            }
            v /= 1.0 - r;
        }
        for &b in &self.quadratic {
            let r = b * t * t;
            if r >= 1.0 {
                return f64::INFINITY;
            }
            v /= 1.0 - r;
        }
        v
    }
}

/// `Σ_{m ≤ X} a_m m^{-s}` with exact coefficients `a_m`.
#[derive(Debug, Clone)]
pub struct DirichletSeries {
    label: String,
    n: usize,
    bound: u64,
    coeffs: Vec<ExactScalar>,
    skipped_primes: Vec<u64>,
    majorants: Vec<LocalMajorant>,
}

/// JSON shape of an assembled series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletJson {
    pub label: String,
    pub n: usize,
    #[serde(rename = "X")]
    pub bound: u64,
    pub skipped_primes: Vec<u64>,
    pub coeffs: BTreeMap<u64, ExactScalar>,
}

impl DirichletSeries {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `a_m` for `1 ≤ m ≤ X`.
    pub fn coeff(&self, m: u64) -> &ExactScalar {
        assert!(
            m >= 1 && m <= self.bound,
            "index {m} outside 1..={}",
            self.bound
        );
        &self.coeffs[m as usize]
    }

    /// Primes `≤ X` absent from the table, treated as part of the excluded set.
    pub fn skipped_primes(&self) -> &[u64] {
        &self.skipped_primes
    }

    /// Dirichlet convolution, truncated at the smaller bound. Entry `m - 1`
    /// of the result is the coefficient of `m^{-s}`.
    pub fn convolve(&self, other: &DirichletSeries) -> Vec<ExactScalar> {
        let bound = self.bound.min(other.bound) as usize;
        let mut out = vec![ExactScalar::zero(); bound + 1];
        for d in 1..=bound {
            let a = &self.coeffs[d];
            if a.is_zero() {
                continue;
            }
            for k in 1..=bound / d {
                let b = &other.coeffs[k];
                if !b.is_zero() {
                    out[d * k] += a * b;
                }
            }
        }
        out.remove(0);
        out
    }

    pub fn to_json(&self) -> DirichletJson {
        DirichletJson {
            label: self.label.clone(),
            n: self.n,
            bound: self.bound,
            skipped_primes: self.skipped_primes.clone(),
            coeffs: (1..=self.bound)
                .map(|m| (m, self.coeffs[m as usize].clone()))
                .collect(),
        }
    }

    fn convergence_margin(&self) -> f64 {
        self.majorants
            .iter()
            .map(LocalMajorant::log_scale)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn assemble(table: &SatakeTable, bound: u64) -> DirichletSeries {
    assemble_with(table, bound, FactorSelection::Full)
}

/// Expands each local factor as a series in `t = p^{-s}` to order
/// `⌊log_p X⌋` and merges them multiplicatively over `m ≤ X`.
///
/// Primes up to `X` missing from the table are recorded as skipped and every
/// `a_m` they divide is zero.
pub fn assemble_with(
    table: &SatakeTable,
    bound: u64,
    selection: FactorSelection,
) -> DirichletSeries {
    let x = bound as usize;
    let local: HashMap<u64, Vec<ExactScalar>> = table
        .entries()
        .iter()
        .filter(|(&p, _)| p <= bound)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(&p, data)| {
            let depth = max_power(p, bound);
            let series = selection.local_factor(data).inverse_series(depth);
            (p, series.into_coeffs())
        })
        .collect();

    let smallest = smallest_prime_factors(x);
    let mut coeffs = vec![ExactScalar::zero(); x + 1];
    if x >= 1 {
        coeffs[1] = ExactScalar::one();
    }
    for m in 2..=x {
        let p = smallest[m];
        let mut rest = m;
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if let Some(series) = local.get(&(p as u64)) {
            let c = &series[k] * &coeffs[rest];
            coeffs[m] = c;
        }
    }

    let skipped_primes = (2..=bound)
        .filter(|&p| is_prime(p) && table.get(p).is_none())
        .collect();
    let majorants = table
        .entries()
        .iter()
        .map(|(&p, d)| LocalMajorant::new(p, d, selection))
        .collect();
    DirichletSeries {
        label: table.label().to_string(),
        n: table.n(),
        bound,
        coeffs,
        skipped_primes,
        majorants,
    }
}

fn max_power(p: u64, bound: u64) -> usize {
    let mut k = 0;
    let mut pk = p;
    while pk <= bound {
        k += 1;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    k
}

fn smallest_prime_factors(x: usize) -> Vec<usize> {
    let mut spf = vec![0; x + 1];
    for i in 2..=x {
        if spf[i] == 0 {
            for j in (i..=x).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i;
                }
            }
        }
    }
    spf
}

/// Numeric value of a truncated series and a bound on what was cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    /// Upper bound on `|Σ_{m > X} a_m m^{-s}|` over the primes in the table,
    /// infinite when the dominating product diverges at `Re(s)`.
    pub tail_bound: f64,
    /// `Re(s)` clears `1 + max_p max(log_p |u z_i|, log_p |z_j z_k| / 2)`.
    pub convergence_verified: bool,
}

/// Relative slack covering floating-point error in the two sums whose
/// difference gives the tail bound.
const TAIL_ROUNDING_SLACK: f64 = 1e-12;

/// `Σ_{m ≤ X} a_m m^{-s}` together with a tail bound.
///
/// The tail is bounded by `B(σ) - Σ_{m ≤ X} b_m m^{-σ}`, where `b_m` are the
/// coefficients of the product of the geometric majorants of the local
/// factors and `B(σ)` is that product evaluated in closed form.
pub fn evaluate(series: &DirichletSeries, s: Complex64) -> Evaluation {
    let x = series.bound as usize;
    let value = (1..=x)
        .filter(|&m| !series.coeffs[m].is_zero())
        .map(|m| series.coeffs[m].to_f64() * (-s * (m as f64).ln()).exp())
        .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t);

    let sigma = s.re;
    let full: f64 = series.majorants.iter().map(|mj| mj.value(sigma)).product();
    let tail_bound = if full.is_finite() {
        let partial = majorant_partial_sum(series, sigma);
        (full - partial).max(0.0) + TAIL_ROUNDING_SLACK * full
    } else {
        f64::INFINITY
    };
    let margin = series.convergence_margin();
    Evaluation {
        value,
        tail_bound,
        convergence_verified: full.is_finite() && sigma > 1.0 + margin,
    }
}

fn majorant_partial_sum(series: &DirichletSeries, sigma: f64) -> f64 {
    let x = series.bound as usize;
    let local: HashMap<usize, Vec<f64>> = series
        .majorants
        .iter()
        .filter(|mj| mj.p <= series.bound)
        .map(|mj| (mj.p as usize, mj.series(max_power(mj.p, series.bound))))
        .collect();
    let smallest = smallest_prime_factors(x);
    let mut b = vec![0.0; x + 1];
    if x >= 1 {
        b[1] = 1.0;
    }
    for m in 2..=x {
        let p = smallest[m];
        let mut rest = m;
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if let Some(c) = local.get(&p) {
            b[m] = c[k] * b[rest];
        }
    }
    (1..=x).map(|m| b[m] * (m as f64).powf(-sigma)).sum()
}

/// `∏_p 1 / P_p(p^{-s})` over every prime in the table.
pub fn finite_euler_product(
    table: &SatakeTable,
    s: Complex64,
    selection: FactorSelection,
) -> Complex64 {
    table
        .entries()
        .iter()
        .map(|(&p, data)| {
            let t = (-s * (p as f64).ln()).exp();
            Complex64::new(1.0, 0.0) / selection.local_factor(data).evaluate(t)
        })
        .fold(Complex64::new(1.0, 0.0), |acc, f| acc * f)
}
