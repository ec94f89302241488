//! Constants, zeta values, and finite-N checks of the asymptotic statements.

use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::census::{partial_sums, tuple_counts_fast, CensusError, GKind};
use crate::numtheory::{FactorSieve, NumError};

/// Prime cutoff used for the Euler product in [`density_targets`].
pub const DEFAULT_MIRSKY_PRIME_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error("prime limit {0} is below 2")]
    PrimeLimitTooSmall(u64),
    #[error("s={s} is outside the region of convergence s > {min}")]
    OutsideConvergence { s: f64, min: f64 },
    #[error("at least one term is required")]
    NoTerms,
}

/// A real value together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate { value, error: 0.0 }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower() <= x && x <= self.upper()
    }
}

// B_2, B_4, ..., B_18
const BERNOULLI_EVEN: [f64; 9] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
];

/// Riemann zeta at real `s > 1` by Euler-Maclaurin summation.
///
/// The error bound is the magnitude of the first omitted correction term plus a
/// rounding allowance.
pub fn zeta(s: f64) -> Result<Estimate, AnalyticError> {
    if s.is_nan() || s <= 1.0 {
        return Err(AnalyticError::OutsideConvergence { s, min: 1.0 });
    }
    const CUT: f64 = 20.0;
    let head: f64 = (1..CUT as u32).rev().map(|n| f64::from(n).powf(-s)).sum();
    let mut value = head + CUT.powf(1.0 - s) / (s - 1.0) + 0.5 * CUT.powf(-s);
    // term_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * CUT^(-s-2k+1)
    let mut rising = s;
    let mut factorial = 2.0;
    let mut power = CUT.powf(-s - 1.0);
    let mut last = 0.0;
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = b / factorial * rising * power;
        if i + 1 == BERNOULLI_EVEN.len() {
            last = term.abs();
            break;
        }
        value += term;
        let k = (i + 1) as f64;
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        power /= CUT * CUT;
    }
    Ok(Estimate {
        value,
        error: last + 4.0 * f64::EPSILON * value,
    })
}

/// `prod_{p <= prime_limit} (1 - 2/p^2)`, bracketing the full product.
///
/// Every omitted prime is at least 3, so `-log(1 - 2/p^2) <= 3/p^2` and the tail
/// lies in `[exp(-3/P), 1]`.
pub fn mirsky_constant(prime_limit: u64) -> Result<Estimate, AnalyticError> {
    if prime_limit < 2 {
        return Err(AnalyticError::PrimeLimitTooSmall(prime_limit));
    }
    let sieve = FactorSieve::new(prime_limit)?;
    let partial: f64 = sieve
        .primes()
        .iter()
        .map(|&p| {
            let p = f64::from(p);
            1.0 - 2.0 / (p * p)
        })
        .product();
    let lower = partial * (-3.0 / prime_limit as f64).exp();
    let rounding = 1e-15 * sieve.primes().len() as f64 * partial;
    Ok(Estimate {
        value: 0.5 * (partial + lower),
        error: 0.5 * (partial - lower) + rounding,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantSet {
    pub mirsky_c: Estimate,
    pub zeta2: Estimate,
    pub zeta4: Estimate,
    pub zeta6: Estimate,
    /// `12/pi^2 - C`, limit of B/A.
    pub gpg_tuple_density: Estimate,
    /// `945/pi^6 = 1/zeta(6)`, limit of C/A.
    pub connected_tuple_density: Estimate,
    /// `5/16`, limit of CI(N)/N^2.
    pub class_growth: Estimate,
    /// `4(pi^2 - 3)/(5 pi^2)`, limit of CP/CI.
    pub gpg_class_density: Estimate,
    /// `6/pi^2`, limit of CI_c/CI.
    pub connected_class_density: Estimate,
    /// `2(pi^2 - 3)/15`, limit of CP/CI_c.
    pub gpg_among_connected: Estimate,
    /// `(1 + C)/2`.
    pub feller_tornier: Estimate,
}

fn compute_targets(prime_limit: u64) -> Result<ConstantSet, AnalyticError> {
    let mirsky_c = mirsky_constant(prime_limit)?;
    let pi2 = PI * PI;
    let eps = |x: f64| 4.0 * f64::EPSILON * x.abs();
    let closed = |x: f64| Estimate {
        value: x,
        error: eps(x),
    };
    Ok(ConstantSet {
        mirsky_c,
        zeta2: closed(pi2 / 6.0),
        zeta4: closed(pi2 * pi2 / 90.0),
        zeta6: closed(pi2 * pi2 * pi2 / 945.0),
        gpg_tuple_density: Estimate {
            value: 12.0 / pi2 - mirsky_c.value,
            error: mirsky_c.error + eps(12.0 / pi2),
        },
        connected_tuple_density: closed(945.0 / (pi2 * pi2 * pi2)),
        class_growth: Estimate::exact(5.0 / 16.0),
        gpg_class_density: closed(4.0 * (pi2 - 3.0) / (5.0 * pi2)),
        connected_class_density: closed(6.0 / pi2),
        gpg_among_connected: closed(2.0 * (pi2 - 3.0) / 15.0),
        feller_tornier: Estimate {
            value: (1.0 + mirsky_c.value) / 2.0,
            error: mirsky_c.error / 2.0,
        },
    })
}

/// Limit constants, computed once with [`DEFAULT_MIRSKY_PRIME_LIMIT`].
pub fn density_targets() -> ConstantSet {
    static TARGETS: OnceLock<ConstantSet> = OnceLock::new();
    *TARGETS.get_or_init(|| {
        compute_targets(DEFAULT_MIRSKY_PRIME_LIMIT).expect("default prime limit is valid")
    })
}

/// One exact partial sum compared with its predicted main term.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSum {
    pub name: &'static str,
    pub exact: u128,
    pub main_term: f64,
    pub ratio: f64,
}

impl LemmaSum {
    pub fn residual(&self) -> f64 {
        (self.ratio - 1.0).abs()
    }
}

/// Partial sums up to `n_max` of `phi^2`, `n phi`, `g1`, Dedekind psi and `phi`.
pub fn check_lemma_sums(n_max: u64, sieve: &FactorSieve) -> Result<Vec<LemmaSum>, AnalyticError> {
    if n_max < 1 {
        return Err(AnalyticError::NoTerms);
    }
    let (mut phi2, mut nphi, mut g1, mut psi, mut phi_sum) = (0u128, 0u128, 0u128, 0u128, 0u128);
    for n in 1..=n_max {
        let f = sieve.factorize(n)?;
        let phi = u128::from(f.phi());
        phi2 += phi * phi;
        nphi += u128::from(n) * phi;
        g1 += f
            .pairs
            .iter()
            .map(|&(p, k)| u128::from((p + 1) * p.pow(k) - 2) / u128::from(p - 1))
            .product::<u128>();
        psi += u128::from(f.dedekind_psi());
        phi_sum += phi;
    }
    let c = density_targets().mirsky_c.value;
    let x = n_max as f64;
    let pi2 = PI * PI;
    let entry = |name, exact: u128, main_term: f64| LemmaSum {
        name,
        exact,
        main_term,
        ratio: exact as f64 / main_term,
    };
    Ok(vec![
        entry("sum_phi_squared", phi2, c * x.powi(3) / 3.0),
        entry("sum_n_phi", nphi, 2.0 * x.powi(3) / pi2),
        entry("sum_g1", g1, 1.25 * x * x),
        entry("sum_dedekind_psi", psi, 15.0 / (2.0 * pi2) * x * x),
        entry("sum_phi", phi_sum, 3.0 / pi2 * x * x),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirichletSeries {
    /// `sum g1(n)/n^s = zeta(s)^2 zeta(s-1) / zeta(2s)`, `s > 2`.
    G1,
    /// `sum tau(n)^2/n^s = zeta(s)^4 / zeta(2s)`, `s > 1`.
    Gu,
}

impl DirichletSeries {
    pub fn abscissa(self) -> f64 {
        match self {
            DirichletSeries::G1 => 2.0,
            DirichletSeries::Gu => 1.0,
        }
    }

    fn kind(self) -> GKind {
        match self {
            DirichletSeries::G1 => GKind::G1,
            DirichletSeries::Gu => GKind::Gu,
        }
    }

    fn closed_form(self, s: f64) -> Result<f64, AnalyticError> {
        let z2s = zeta(2.0 * s)?.value;
        Ok(match self {
            DirichletSeries::G1 => zeta(s)?.value.powi(2) * zeta(s - 1.0)?.value / z2s,
            DirichletSeries::Gu => zeta(s)?.value.powi(4) / z2s,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// Truncated Dirichlet sum over `1..=terms` against the zeta expression.
pub fn dirichlet_truncation_check(
    series: DirichletSeries,
    s: f64,
    terms: u64,
    sieve: &FactorSieve,
) -> Result<DirichletCheck, AnalyticError> {
    let min = series.abscissa();
    if s.is_nan() || s <= min {
        return Err(AnalyticError::OutsideConvergence { s, min });
    }
    if terms == 0 {
        return Err(AnalyticError::NoTerms);
    }
    let kind = series.kind();
    let mut lhs = 0.0;
    // Smallest terms first.
    for n in (1..=terms).rev() {
        let f = sieve.factorize(n)?;
        let g: u64 = f
            .pairs
            .iter()
            .map(|&(p, k)| crate::census::g_prime_power(kind, p, k))
            .product::<Result<u64, _>>()?;
        lhs += g as f64 / (n as f64).powf(s);
    }
    let rhs = series.closed_form(s)?;
    Ok(DirichletCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).abs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioName {
    BOverA,
    COverA,
    CpOverCi,
    CicOverCi,
    CpOverCic,
    CiOverNSquared,
}

impl RatioName {
    pub const TUPLES: [RatioName; 2] = [RatioName::BOverA, RatioName::COverA];
    pub const CLASSES: [RatioName; 4] = [
        RatioName::CpOverCi,
        RatioName::CicOverCi,
        RatioName::CpOverCic,
        RatioName::CiOverNSquared,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RatioName::BOverA => "b_over_a",
            RatioName::COverA => "c_over_a",
            RatioName::CpOverCi => "cp_over_ci",
            RatioName::CicOverCi => "cic_over_ci",
            RatioName::CpOverCic => "cp_over_cic",
            RatioName::CiOverNSquared => "ci_over_n2",
        }
    }

    pub fn target(self, c: &ConstantSet) -> f64 {
        match self {
            RatioName::BOverA => c.gpg_tuple_density.value,
            RatioName::COverA => c.connected_tuple_density.value,
            RatioName::CpOverCi => c.gpg_class_density.value,
            RatioName::CicOverCi => c.connected_class_density.value,
            RatioName::CpOverCic => c.gpg_among_connected.value,
            RatioName::CiOverNSquared => c.class_growth.value,
        }
    }
}

impl fmt::Display for RatioName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioEntry {
    pub name: RatioName,
    pub value: f64,
    pub target: f64,
    /// `value - target`, signed.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub n_max: u64,
    pub entries: Vec<RatioEntry>,
}

impl DensityReport {
    pub fn get(&self, name: RatioName) -> Option<&RatioEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn entry(name: RatioName, value: f64, targets: &ConstantSet) -> RatioEntry {
    let target = name.target(targets);
    RatioEntry {
        name,
        value,
        target,
        residual: value - target,
    }
}

fn ratio(num: u128, den: u128) -> f64 {
    num as f64 / den as f64
}

/// B/A and C/A at `n_max`.
pub fn tuple_density(n_max: u64, sieve: &FactorSieve) -> Result<Vec<RatioEntry>, AnalyticError> {
    let t = tuple_counts_fast(n_max, sieve)?;
    let targets = density_targets();
    Ok(vec![
        entry(RatioName::BOverA, ratio(t.b, t.a), &targets),
        entry(RatioName::COverA, ratio(t.c, t.a), &targets),
    ])
}

/// Class-count ratios at `n_max`.
pub fn class_density(n_max: u64, sieve: &FactorSieve) -> Result<Vec<RatioEntry>, AnalyticError> {
    let p = partial_sums(n_max, sieve)?;
    let targets = density_targets();
    let n2 = u128::from(n_max) * u128::from(n_max);
    Ok(vec![
        entry(RatioName::CpOverCi, ratio(p.cp, p.ci), &targets),
        entry(RatioName::CicOverCi, ratio(p.ci_c, p.ci), &targets),
        entry(RatioName::CpOverCic, ratio(p.cp, p.ci_c), &targets),
        entry(RatioName::CiOverNSquared, ratio(p.ci, n2), &targets),
    ])
}

pub fn density_report(n_max: u64, sieve: &FactorSieve) -> Result<DensityReport, AnalyticError> {
    let mut entries = tuple_density(n_max, sieve)?;
    entries.extend(class_density(n_max, sieve)?);
    Ok(DensityReport { n_max, entries })
}
