//! Sieve-backed multiplicative functions.
//!
//! Everything here is exact integer arithmetic. A [`FactorSieve`] stores the
//! smallest prime factor of every integer up to its limit, so any `n` in range
//! factorises in `O(log n)` and every arithmetic function below is read off the
//! factorisation.

use thiserror::Error;

/// Largest sieve accepted by [`FactorSieve::new`]. The table is 4 bytes per entry.
pub const DEFAULT_MAX_SIEVE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("sieve limit {0} is below 2")]
    LimitTooSmall(u64),
    #[error("sieve limit {limit} exceeds the memory budget of {budget}")]
    LimitTooLarge { limit: u64, budget: u64 },
    #[error("{n} is outside the sieve range 1..={limit}")]
    OutOfRange { n: u64, limit: u64 },
}

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    limit: u64,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl FactorSieve {
    pub fn new(limit: u64) -> Result<Self, NumError> {
        Self::with_budget(limit, DEFAULT_MAX_SIEVE_LIMIT)
    }

    /// Linear sieve: each composite is struck exactly once, by its smallest prime.
    pub fn with_budget(limit: u64, budget: u64) -> Result<Self, NumError> {
        if limit < 2 {
            return Err(NumError::LimitTooSmall(limit));
        }
        if limit > budget || limit > u64::from(u32::MAX) {
            return Err(NumError::LimitTooLarge { limit, budget });
        }
        let size = limit as usize + 1;
        let mut spf = vec![0u32; size];
        let mut primes = Vec::new();
        for i in 2..size {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m >= size {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(FactorSieve { limit, spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primes up to the limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    pub fn spf(&self, n: u64) -> Result<u64, NumError> {
        if n < 2 || n > self.limit {
            return Err(NumError::OutOfRange { n, limit: self.limit });
        }
        Ok(u64::from(self.spf[n as usize]))
    }

    pub fn is_prime(&self, n: u64) -> Result<bool, NumError> {
        if n < 2 {
            self.check(n)?;
            return Ok(false);
        }
        Ok(self.spf(n)? == n)
    }

    fn check(&self, n: u64) -> Result<(), NumError> {
        if n == 0 || n > self.limit {
            Err(NumError::OutOfRange { n, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization, NumError> {
        self.check(n)?;
        let mut pairs = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            pairs.push((p as u64, k));
        }
        Ok(Factorization { pairs })
    }

    pub fn phi(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.phi())
    }

    pub fn mu(&self, n: u64) -> Result<i8, NumError> {
        Ok(self.factorize(n)?.mu())
    }

    pub fn omega(&self, n: u64) -> Result<u32, NumError> {
        Ok(self.factorize(n)?.omega())
    }

    pub fn tau(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.tau())
    }

    pub fn jordan2(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.jordan2())
    }

    pub fn dedekind_psi(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.dedekind_psi())
    }

    /// `r(n)`: number of square roots of 1 modulo `n`.
    pub fn count_sqrt_one(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.count_sqrt_one())
    }

    /// `s(n)`: number of square roots of -1 modulo `n`.
    pub fn count_sqrt_minus_one(&self, n: u64) -> Result<u64, NumError> {
        Ok(self.factorize(n)?.count_sqrt_minus_one())
    }

    /// Möbius values `mu(0..=upto)`, with `mu(0)` set to 0.
    pub fn mobius_table(&self, upto: u64) -> Result<Vec<i8>, NumError> {
        self.check(upto.max(1))?;
        let mut mu = vec![0i8; upto as usize + 1];
        if upto >= 1 {
            mu[1] = 1;
        }
        for i in 2..=upto as usize {
            let p = self.spf[i] as usize;
            let q = i / p;
            mu[i] = if q.is_multiple_of(p) { 0 } else { -mu[q] };
        }
        Ok(mu)
    }
}

/// Prime factorisation as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, k)| p.pow(k)).product()
    }

    pub fn omega(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn tau(&self) -> u64 {
        self.pairs.iter().map(|&(_, k)| u64::from(k) + 1).product()
    }

    pub fn phi(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, k)| p.pow(k - 1) * (p - 1))
            .product()
    }

    pub fn mu(&self) -> i8 {
        if self.pairs.iter().any(|&(_, k)| k > 1) {
            0
        } else if self.pairs.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `J_2(n) = n^2 prod (1 - 1/p^2)`, taken per prime power as `p^(2k-2) (p^2 - 1)`.
    pub fn jordan2(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, k)| p.pow(2 * k - 2) * (p * p - 1))
            .product()
    }

    /// `psi(n) = J_2(n) / phi(n) = n prod (1 + 1/p)`.
    pub fn dedekind_psi(&self) -> u64 {
        let j2 = self.jordan2();
        let phi = self.phi();
        assert_eq!(j2 % phi, 0, "J_2(n) not divisible by phi(n)");
        j2 / phi
    }

    pub fn squarefree_kernel_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    fn two_adic(&self) -> u32 {
        match self.pairs.first() {
            Some(&(2, k)) => k,
            _ => 0,
        }
    }

    pub fn count_sqrt_one(&self) -> u64 {
        let w = self.omega();
        match self.two_adic() {
            0 | 2 => 1 << w,
            1 => 1 << (w - 1),
            _ => 1 << (w + 1),
        }
    }

    pub fn count_sqrt_minus_one(&self) -> u64 {
        if self.two_adic() >= 2 || self.pairs.iter().any(|&(p, _)| p % 4 == 3) {
            return 0;
        }
        let odd = self.pairs.iter().filter(|&&(p, _)| p > 2).count();
        1 << odd
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Direct count of `x` in `[0, n)` with `x^2 = 1 (mod n)`.
pub fn scan_sqrt_one(n: u64) -> u64 {
    scan_roots(n, 1)
}

/// Direct count of `x` in `[0, n)` with `x^2 = -1 (mod n)`.
pub fn scan_sqrt_minus_one(n: u64) -> u64 {
    scan_roots(n, n - 1)
}

fn scan_roots(n: u64, target: u64) -> u64 {
    assert!(n >= 1);
    let n128 = u128::from(n);
    let target = u128::from(target) % n128;
    (0..n)
        .filter(|&x| (u128::from(x) * u128::from(x)) % n128 == target)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve() -> FactorSieve {
        FactorSieve::new(10_000).unwrap()
    }

    fn trial_spf(n: u64) -> u64 {
        (2..=n).find(|d| n.is_multiple_of(*d)).unwrap()
    }

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
    }

    #[test]
    fn sieve_small_values() {
        let s = FactorSieve::new(10).unwrap();
        assert_eq!(s.spf(9).unwrap(), 3);
        assert_eq!(s.spf(8).unwrap(), 2);
        assert_eq!(s.spf(7).unwrap(), 7);
        assert_eq!(FactorSieve::new(100).unwrap().spf(91).unwrap(), 7);
    }

    #[test]
    fn sieve_limits() {
        assert_eq!(FactorSieve::new(1).unwrap_err(), NumError::LimitTooSmall(1));
        assert!(matches!(
            FactorSieve::with_budget(1000, 100),
            Err(NumError::LimitTooLarge { .. })
        ));
        let s = FactorSieve::new(10).unwrap();
        assert!(s.factorize(11).is_err());
        assert!(s.factorize(0).is_err());
        assert!(s.phi(11).is_err());
    }

    #[test]
    fn spf_matches_trial_division() {
        let s = FactorSieve::new(3000).unwrap();
        for n in 2..=3000u64 {
            let p = s.spf(n).unwrap();
            assert_eq!(p, trial_spf(n), "n={n}");
            assert_eq!(s.is_prime(n).unwrap(), p == n);
        }
        assert_eq!(s.primes().len(), 430);
    }

    #[test]
    fn factorize_examples() {
        let s = sieve();
        assert!(s.factorize(1).unwrap().pairs.is_empty());
        assert_eq!(s.factorize(12).unwrap().pairs, vec![(2, 2), (3, 1)]);
        assert_eq!(s.factorize(97).unwrap().pairs, vec![(97, 1)]);
        for n in 1..=10_000 {
            let f = s.factorize(n).unwrap();
            assert_eq!(f.value(), n);
            assert!(f.pairs.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn arithmetic_function_examples() {
        let s = sieve();
        assert_eq!(s.phi(1).unwrap(), 1);
        assert_eq!(s.mu(1).unwrap(), 1);
        assert_eq!(s.tau(1).unwrap(), 1);
        assert_eq!(s.omega(1).unwrap(), 0);
        assert_eq!(s.phi(12).unwrap(), 4);
        assert_eq!(brute_phi(12), 4);
        assert_eq!(s.mu(12).unwrap(), 0);
        assert_eq!(s.mu(30).unwrap(), -1);
        assert_eq!(s.tau(12).unwrap(), 6);
        assert_eq!(s.omega(12).unwrap(), 2);
        assert_eq!(s.jordan2(1).unwrap(), 1);
        assert_eq!(s.jordan2(6).unwrap(), 24);
        assert_eq!(s.jordan2(5).unwrap(), 24);
        assert_eq!(s.dedekind_psi(1).unwrap(), 1);
        assert_eq!(s.dedekind_psi(6).unwrap(), 12);
        assert_eq!(s.dedekind_psi(4).unwrap(), 6);
    }

    #[test]
    fn root_count_examples() {
        let s = sieve();
        assert_eq!(s.count_sqrt_one(1).unwrap(), 1);
        assert_eq!(s.count_sqrt_one(8).unwrap(), 4);
        assert_eq!(s.count_sqrt_one(12).unwrap(), 4);
        assert_eq!(scan_sqrt_one(8), 4);
        assert_eq!(scan_sqrt_one(12), 4);
        assert_eq!(s.count_sqrt_minus_one(2).unwrap(), 1);
        assert_eq!(s.count_sqrt_minus_one(5).unwrap(), 2);
        assert_eq!(s.count_sqrt_minus_one(4).unwrap(), 0);
        assert_eq!(s.count_sqrt_minus_one(3).unwrap(), 0);
        assert_eq!(scan_sqrt_minus_one(5), 2);
        assert_eq!(scan_sqrt_minus_one(1), 1);
    }

    #[test]
    fn root_formulas_match_scan() {
        let s = sieve();
        for n in 1..=10_000 {
            assert_eq!(s.count_sqrt_one(n).unwrap(), scan_sqrt_one(n), "r({n})");
            assert_eq!(
                s.count_sqrt_minus_one(n).unwrap(),
                scan_sqrt_minus_one(n),
                "s({n})"
            );
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(6, 4), 2);
        assert_eq!(gcd3(6, 2, 3), 1);
        assert_eq!(gcd3(6, 2, 2), 2);
        assert_eq!(gcd(0, 5), 5);
    }

    #[test]
    fn divisor_sum_identities() {
        let s = sieve();
        for n in 1..=10_000u64 {
            let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            let phi_sum: u64 = divisors.iter().map(|&d| s.phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let sqfree = divisors.iter().filter(|&&d| s.mu(d).unwrap() != 0).count() as u64;
            assert_eq!(1u64 << s.omega(n).unwrap(), sqfree);
            assert_eq!(s.tau(n).unwrap(), divisors.len() as u64);
            assert_eq!(
                s.dedekind_psi(n).unwrap() * s.phi(n).unwrap(),
                s.jordan2(n).unwrap()
            );
        }
    }

    #[test]
    fn phi_matches_brute_force() {
        let s = sieve();
        for n in 1..=500 {
            assert_eq!(s.phi(n).unwrap(), brute_phi(n));
        }
    }

    #[test]
    fn mobius_table_matches_factorization() {
        let s = sieve();
        let table = s.mobius_table(10_000).unwrap();
        for n in 1..=10_000u64 {
            assert_eq!(table[n as usize], s.mu(n).unwrap());
        }
    }

    #[test]
    fn multiplicativity() {
        let s = FactorSieve::new(1_000_000).unwrap();
        for a in 1..=1000u64 {
            for b in (1..=1000u64).filter(|&b| gcd(a, b) == 1) {
                let ab = a * b;
                let f = |g: fn(&Factorization) -> u64| {
                    let fa = g(&s.factorize(a).unwrap());
                    let fb = g(&s.factorize(b).unwrap());
                    (g(&s.factorize(ab).unwrap()), fa * fb)
                };
                for g in [
                    Factorization::phi as fn(&Factorization) -> u64,
                    Factorization::jordan2,
                    Factorization::tau,
                    Factorization::count_sqrt_one,
                    Factorization::count_sqrt_minus_one,
                ] {
                    let (lhs, rhs) = f(g);
                    assert_eq!(lhs, rhs, "a={a} b={b}");
                }
            }
        }
    }
}
