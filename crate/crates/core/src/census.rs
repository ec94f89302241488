//! Exact class counts `I(n)`, `I_c(n)`, `P(n)` and tuple counts `A(N)`, `B(N)`, `C(N)`.
//!
//! The class counts are Burnside-type closed forms assembled from multiplicative
//! pieces. The tuple counts come in two routes: a direct loop over `(n, k, j)` that
//! serves as the reference, and a Möbius route that is fast enough for `N ~ 10^7`.

use thiserror::Error;

use crate::numtheory::{gcd, FactorSieve, Factorization, NumError};

/// Default largest `N` accepted by [`tuple_counts_direct`]; the loop is cubic in `N`.
pub const DEFAULT_DIRECT_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("n={0} is below 3")]
    BelowThree(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime-power exponent must be at least 1")]
    ZeroExponent,
    #[error("{what} at n={n}: {value} is not divisible by {divisor}")]
    NotIntegral {
        what: &'static str,
        n: u64,
        value: u64,
        divisor: u64,
    },
    #[error("{what} at n={n} would be negative")]
    Negative { what: &'static str, n: u64 },
    #[error("N={n} exceeds the direct-loop cap {cap}")]
    AboveDirectCap { n: u64, cap: u64 },
}

/// The prime-power factors entering the class-count formula for `I(n)`, plus the
/// divisor-square function `(k+1)^2` that bounds the last three.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GKind {
    G1,
    G2,
    G3,
    G4,
    Gu,
}

impl GKind {
    pub const SUMMANDS: [GKind; 4] = [GKind::G1, GKind::G2, GKind::G3, GKind::G4];

    /// `1..=4` for `g1..g4`.
    pub fn from_index(i: usize) -> Option<GKind> {
        GKind::SUMMANDS.get(i.checked_sub(1)?).copied()
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_power_value(kind: GKind, p: u64, k: u32) -> u64 {
    let k64 = u64::from(k);
    match kind {
        GKind::G1 => {
            let numer = (p + 1) * p.pow(k) - 2;
            debug_assert_eq!(numer % (p - 1), 0);
            numer / (p - 1)
        }
        GKind::G2 => {
            if p == 2 {
                4 * k64
            } else {
                2 * k64 + 1
            }
        }
        GKind::G3 => match (p, k) {
            (2, 1) => 2,
            (2, _) => 4 * (k64 - 1),
            _ => 2 * k64 + 1,
        },
        GKind::G4 => match p % 4 {
            _ if p == 2 => 2,
            1 => 2 * k64 + 1,
            _ => 1,
        },
        GKind::Gu => (k64 + 1) * (k64 + 1),
    }
}

/// Value of `kind` at the prime power `p^k`.
pub fn g_prime_power(kind: GKind, p: u64, k: u32) -> Result<u64, CensusError> {
    if !is_prime(p) {
        return Err(CensusError::NotPrime(p));
    }
    if k == 0 {
        return Err(CensusError::ZeroExponent);
    }
    if kind == GKind::G1 && !((p + 1) * p.pow(k) - 2).is_multiple_of(p - 1) {
        return Err(CensusError::NotIntegral {
            what: "g1",
            n: p.pow(k),
            value: (p + 1) * p.pow(k) - 2,
            divisor: p - 1,
        });
    }
    Ok(prime_power_value(kind, p, k))
}

pub fn g1(p: u64, k: u32) -> Result<u64, CensusError> {
    g_prime_power(GKind::G1, p, k)
}

pub fn g2(p: u64, k: u32) -> Result<u64, CensusError> {
    g_prime_power(GKind::G2, p, k)
}

pub fn g3(p: u64, k: u32) -> Result<u64, CensusError> {
    g_prime_power(GKind::G3, p, k)
}

pub fn g4(p: u64, k: u32) -> Result<u64, CensusError> {
    g_prime_power(GKind::G4, p, k)
}

fn g_of(kind: GKind, f: &Factorization) -> u64 {
    f.pairs
        .iter()
        .map(|&(p, k)| prime_power_value(kind, p, k))
        .product()
}

/// Multiplicative extension of `kind`; equals 1 at `n = 1`.
pub fn g_multiplicative(kind: GKind, n: u64, sieve: &FactorSieve) -> Result<u64, CensusError> {
    Ok(g_of(kind, &sieve.factorize(n)?))
}

fn quarter(what: &'static str, n: u64, value: u64) -> Result<u64, CensusError> {
    if !value.is_multiple_of(4) {
        return Err(CensusError::NotIntegral {
            what,
            n,
            value,
            divisor: 4,
        });
    }
    Ok(value / 4)
}

fn factor_at_least_three(n: u64, sieve: &FactorSieve) -> Result<Factorization, CensusError> {
    if n < 3 {
        return Err(CensusError::BelowThree(n));
    }
    Ok(sieve.factorize(n)?)
}

fn count_i_from(n: u64, f: &Factorization) -> Result<u64, CensusError> {
    let sum: u64 = GKind::SUMMANDS.iter().map(|&kind| g_of(kind, f)).sum();
    let q = quarter("I(n)", n, sum)?;
    let correction = if n.is_multiple_of(2) { 2 * f.tau() - 1 } else { f.tau() };
    q.checked_sub(correction)
        .ok_or(CensusError::Negative { what: "I(n)", n })
}

/// `t(n) = 2^omega(n) + 2^omega(n/2)` for even `n`, `2^omega(n)` for odd `n`.
fn t_term(n: u64, f: &Factorization) -> u64 {
    let w = f.omega();
    if n % 2 == 1 {
        return 1 << w;
    }
    // omega(n/2) drops the prime 2 only when 2 || n.
    let half_w = if f.pairs[0] == (2, 1) { w - 1 } else { w };
    (1 << w) + (1 << half_w)
}

fn count_ic_from(n: u64, f: &Factorization) -> Result<u64, CensusError> {
    let sum = f.dedekind_psi() + f.count_sqrt_one() + f.count_sqrt_minus_one() + t_term(n, f);
    let q = quarter("I_c(n)", n, sum)?;
    let correction = match n % 4 {
        0 => 2,
        2 => 3,
        _ => 1,
    };
    q.checked_sub(correction)
        .ok_or(CensusError::Negative { what: "I_c(n)", n })
}

fn count_p_from(n: u64, f: &Factorization) -> Result<u64, CensusError> {
    let plus = 2 * n + f.count_sqrt_one() + f.count_sqrt_minus_one();
    let minus = f.phi() + 2 * gcd(n, 2);
    let sum = plus
        .checked_sub(minus)
        .ok_or(CensusError::Negative { what: "P(n)", n })?;
    quarter("P(n)", n, sum)
}

/// Number of isomorphism classes of I-graphs on `2n` vertices.
#[allow(non_snake_case)]
pub fn count_I(n: u64, sieve: &FactorSieve) -> Result<u64, CensusError> {
    count_i_from(n, &factor_at_least_three(n, sieve)?)
}

/// Number of isomorphism classes of connected I-graphs on `2n` vertices.
#[allow(non_snake_case)]
pub fn count_Ic(n: u64, sieve: &FactorSieve) -> Result<u64, CensusError> {
    count_ic_from(n, &factor_at_least_three(n, sieve)?)
}

/// Number of isomorphism classes of generalised Petersen graphs on `2n` vertices.
#[allow(non_snake_case)]
pub fn count_P(n: u64, sieve: &FactorSieve) -> Result<u64, CensusError> {
    count_p_from(n, &factor_at_least_three(n, sieve)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: u64,
    pub i_count: u64,
    pub ic_count: u64,
    pub p_count: u64,
}

pub fn census_record(n: u64, sieve: &FactorSieve) -> Result<CensusRecord, CensusError> {
    let f = factor_at_least_three(n, sieve)?;
    Ok(CensusRecord {
        n,
        i_count: count_i_from(n, &f)?,
        ic_count: count_ic_from(n, &f)?,
        p_count: count_p_from(n, &f)?,
    })
}

/// Cumulative class counts over `3 <= n <= n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartialSums {
    pub n_max: u64,
    pub ci: u128,
    pub ci_c: u128,
    pub cp: u128,
}

impl PartialSums {
    fn add(&mut self, r: &CensusRecord) {
        self.n_max = r.n;
        self.ci += u128::from(r.i_count);
        self.ci_c += u128::from(r.ic_count);
        self.cp += u128::from(r.p_count);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub record: CensusRecord,
    pub sums: PartialSums,
}

/// One row per `n` in `3..=max_n`, with running sums.
pub fn census_rows(max_n: u64, sieve: &FactorSieve) -> Result<Vec<CensusRow>, CensusError> {
    let mut sums = PartialSums::default();
    (3..=max_n)
        .map(|n| {
            let record = census_record(n, sieve)?;
            sums.add(&record);
            Ok(CensusRow { record, sums })
        })
        .collect()
}

pub fn partial_sums(n_max: u64, sieve: &FactorSieve) -> Result<PartialSums, CensusError> {
    if n_max < 3 {
        return Err(CensusError::BelowThree(n_max));
    }
    if n_max > sieve.limit() {
        return Err(NumError::OutOfRange {
            n: n_max,
            limit: sieve.limit(),
        }
        .into());
    }
    let mut sums = PartialSums::default();
    for n in 3..=n_max {
        sums.add(&census_record(n, sieve)?);
    }
    Ok(sums)
}

/// Tuple counts over `3 <= n <= n_max`, `1 <= j <= k <= floor(n/2)`:
/// `a` all tuples, `b` GPG tuples, `c` connected tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleCounts {
    pub n_max: u64,
    pub a: u128,
    pub b: u128,
    pub c: u128,
}

/// Triangular number `x(x+1)/2`.
fn tri(x: u64) -> u128 {
    let x = u128::from(x);
    x * (x + 1) / 2
}

/// Contributions of a single `n` by enumerating every `(k, j)`.
pub fn tuple_counts_for_n(n: u64) -> (u64, u64, u64) {
    let m = n / 2;
    let coprime: Vec<bool> = (0..=m).map(|j| gcd(n, j) == 1).collect();
    let (mut a, mut b, mut c) = (0, 0, 0);
    for k in 1..=m {
        let gk = gcd(n, k);
        for j in 1..=k {
            a += 1;
            if gk == 1 || coprime[j as usize] {
                b += 1;
            }
            if gk == 1 || gcd(gk, j) == 1 {
                c += 1;
            }
        }
    }
    (a, b, c)
}

/// Reference counts by a cubic loop. Capped at [`DEFAULT_DIRECT_CAP`].
pub fn tuple_counts_direct(n_max: u64) -> Result<TupleCounts, CensusError> {
    tuple_counts_direct_with_cap(n_max, DEFAULT_DIRECT_CAP)
}

pub fn tuple_counts_direct_with_cap(n_max: u64, cap: u64) -> Result<TupleCounts, CensusError> {
    Ok(*tuple_counts_direct_prefixes(n_max, cap)?.last().unwrap())
}

/// Direct counts for every prefix `3..=N`, `N` running from 3 to `n_max`.
pub fn tuple_counts_direct_prefixes(n_max: u64, cap: u64) -> Result<Vec<TupleCounts>, CensusError> {
    if n_max < 3 {
        return Err(CensusError::BelowThree(n_max));
    }
    if n_max > cap {
        return Err(CensusError::AboveDirectCap { n: n_max, cap });
    }
    let mut acc = TupleCounts {
        n_max: 0,
        a: 0,
        b: 0,
        c: 0,
    };
    Ok((3..=n_max)
        .map(|n| {
            let (a, b, c) = tuple_counts_for_n(n);
            acc.n_max = n;
            acc.a += u128::from(a);
            acc.b += u128::from(b);
            acc.c += u128::from(c);
            acc
        })
        .collect())
}

/// Signed squarefree divisors `(d, mu(d))` built from distinct primes.
fn squarefree_divisors(primes: impl Iterator<Item = u64>) -> Vec<(u64, i8)> {
    let mut divs = vec![(1u64, 1i8)];
    for p in primes {
        let len = divs.len();
        for i in 0..len {
            let (d, s) = divs[i];
            divs.push((d * p, -s));
        }
    }
    divs
}

/// `#{1 <= k <= m : gcd(k, n) = 1}` as `sum_{d | n} mu(d) floor(m/d)`.
pub fn coprime_count(m: u64, f: &Factorization) -> u64 {
    let total: i128 = squarefree_divisors(f.squarefree_kernel_primes())
        .into_iter()
        .map(|(d, s)| i128::from(s) * i128::from(m / d))
        .sum();
    total as u64
}

/// `sum_{1 <= k <= m, gcd(k, n) = 1} k` as `sum_{d | n} mu(d) d T(floor(m/d))`.
pub fn coprime_sum(m: u64, f: &Factorization) -> u128 {
    let total: i128 = squarefree_divisors(f.squarefree_kernel_primes())
        .into_iter()
        .map(|(d, s)| i128::from(s) * i128::from(d) * tri(m / d) as i128)
        .sum();
    total as u128
}

/// `sum_{1 <= n <= M} T(floor(n/2))` in closed form (tetrahedral numbers).
pub fn tuple_prefix(m: u64) -> u128 {
    let h = u128::from(m / 2);
    if m % 2 == 1 {
        h * (h + 1) * (h + 2) / 3
    } else if h == 0 {
        0
    } else {
        (h - 1) * h * (h + 1) / 3 + h * (h + 1) / 2
    }
}

/// `A(N)` in closed form. Every `n` contributes `T(floor(n/2))`; `n = 1, 2`
/// contribute `0 + 1`.
pub fn count_a(n_max: u64) -> u128 {
    if n_max < 3 {
        return 0;
    }
    tuple_prefix(n_max) - 1
}

/// GPG tuples for a single `n`: all pairs minus those with both `j` and `k`
/// sharing a factor with `n`.
pub fn gpg_tuples_for_n(n: u64, f: &Factorization) -> u128 {
    let m = n / 2;
    let shared = m - coprime_count(m, f);
    tri(m) - tri(shared)
}

/// Exact counts via Möbius sums.
///
/// `C(N) = sum_{d <= N} mu(d) A*(floor(N/d))` where `A*` counts scaled tuples
/// `(n', k', j')` with `d n' >= 3`; only `d = 1` loses anything to that bound.
pub fn tuple_counts_fast(n_max: u64, sieve: &FactorSieve) -> Result<TupleCounts, CensusError> {
    if n_max < 3 {
        return Err(CensusError::BelowThree(n_max));
    }
    let mu = sieve.mobius_table(n_max)?;
    let a = count_a(n_max);
    let mut b = 0u128;
    for n in 3..=n_max {
        b += gpg_tuples_for_n(n, &sieve.factorize(n)?);
    }
    let mut c = 0i128;
    for d in 1..=n_max {
        let s = mu[d as usize];
        if s == 0 {
            continue;
        }
        let mut inner = tuple_prefix(n_max / d) as i128;
        if d == 1 {
            inner -= 1;
        }
        c += i128::from(s) * inner;
    }
    Ok(TupleCounts {
        n_max,
        a,
        b,
        c: c as u128,
    })
}
