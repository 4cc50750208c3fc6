//! The supernorm map: each partition with multiplicities m_i of part i
//! corresponds to the integer prod p_i^{m_i}, where p_i is the i-th prime.
//! Unique factorization makes this a bijection onto the positive integers.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::bijections::{perfectly_triangular, sc_to_distinct_odd};
use crate::enumeration::{distinct_odd_partitions, distinct_partitions, odd_partitions};
use crate::error::Error;
use crate::hooks::is_t_core_sc;
use crate::partition::Partition;

/// Growable 1-indexed list of primes (p_1 = 2, p_2 = 3, ...), extended by
/// trial division on demand. Extension requires exclusive access; wrap in a
/// lock to share across tasks.
#[derive(Debug, Clone)]
pub struct PrimeIndexer {
    cache: Vec<u64>,
}

impl Default for PrimeIndexer {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeIndexer {
    pub fn new() -> Self {
        PrimeIndexer { cache: Vec::new() }
    }

    /// The i-th prime, 1-indexed.
    pub fn nth_prime(&mut self, i: usize) -> u64 {
        assert!(i >= 1);
        self.extend_to(i);
        self.cache[i - 1]
    }

    fn extend_to(&mut self, count: usize) {
        let mut candidate = self.cache.last().copied().unwrap_or(1) + 1;
        while self.cache.len() < count {
            // Cached primes always cover sqrt(candidate).
            if self
                .cache
                .iter()
                .take_while(|&&p| p * p <= candidate)
                .all(|&p| candidate % p != 0)
            {
                self.cache.push(candidate);
            }
            candidate += 1;
        }
    }

    /// The supernorm of a partition: exponent of p_i equals the
    /// multiplicity of part i. The empty partition maps to 1.
    pub fn supernorm(&mut self, p: &Partition) -> SupernormImage {
        let mut factor_indices: BTreeMap<u64, u64> = BTreeMap::new();
        for (&part, &mult) in p.to_frequency().multiplicities() {
            factor_indices.insert(part, mult);
        }
        let mut value = BigUint::one();
        for (&index, &exp) in &factor_indices {
            let prime = BigUint::from(self.nth_prime(index as usize));
            value *= prime.pow(exp as u32);
        }
        SupernormImage {
            value,
            factor_indices,
        }
    }

    /// Inverse of the supernorm: factor n over the indexed primes and read
    /// the exponents back as part multiplicities.
    pub fn supernorm_inverse(&mut self, n: &BigUint) -> Partition {
        assert!(*n > BigUint::from(0u32), "supernorm images are positive");
        let mut rest = n.clone();
        let mut parts: Vec<u64> = Vec::new();
        let mut index = 1usize;
        while rest > BigUint::one() {
            let prime = BigUint::from(self.nth_prime(index));
            while (&rest % &prime) == BigUint::from(0u32) {
                rest /= &prime;
                parts.push(index as u64);
            }
            index += 1;
        }
        parts.reverse();
        Partition::from_sorted(parts)
    }

    /// True iff n is squarefree with all prime-factor indices odd, i.e. iff
    /// the partition it corresponds to has distinct odd parts.
    pub fn is_squarefree_odd_indexed(&mut self, n: u64) -> bool {
        assert!(n >= 1);
        let mut rest = n;
        let mut index = 1usize;
        while rest > 1 {
            let p = self.nth_prime(index);
            if rest % p == 0 {
                rest /= p;
                if index % 2 == 0 || rest % p == 0 {
                    return false;
                }
            }
            index += 1;
        }
        true
    }

    /// Counts of squarefree integers and odd-indexed-only integers whose
    /// prime indices sum to n, via the distinct-part and odd-part
    /// partitions of n. Equal by Euler's bijection.
    pub fn euler_count_pair(&mut self, n: u64) -> (u64, u64) {
        let squarefree: BTreeSet<BigUint> = distinct_partitions(n)
            .map(|p| self.supernorm(&p).value)
            .collect();
        let odd_indexed: BTreeSet<BigUint> = odd_partitions(n)
            .map(|p| self.supernorm(&p).value)
            .collect();
        (squarefree.len() as u64, odd_indexed.len() as u64)
    }

    /// Supernorm images of the k-th perfectly triangular partition and of
    /// its distinct-odd partner: the primorial p_1 ... p_k paired with a
    /// squarefree product of primes at indices 1 or 3 (mod 4).
    pub fn two_core_supernorm_pair(&mut self, k: u64) -> (BigUint, BigUint) {
        assert!(k >= 1);
        let gamma = perfectly_triangular(k);
        let lam = sc_to_distinct_odd(&gamma).expect("triangular partitions are self-conjugate");
        let gamma_image = self.supernorm(&gamma).value;
        let lambda_image = self.supernorm(lam.as_partition()).value;
        (gamma_image, lambda_image)
    }

    /// The supernorm images of the distinct-odd partitions of n whose
    /// self-conjugate partners are t-core, sorted ascending. Its size is
    /// sc_t(n).
    pub fn t_core_supernorm_set(&mut self, n: u64, t: u64) -> Result<Vec<BigUint>, Error> {
        if t < 2 {
            return Err(Error::InvalidModulus);
        }
        let mut images = Vec::new();
        for lam in distinct_odd_partitions(n) {
            if is_t_core_sc(&lam, t)?.is_none() {
                images.push(self.supernorm(lam.as_partition()).value);
            }
        }
        images.sort();
        Ok(images)
    }
}

/// A positive integer in the image of the supernorm, together with its
/// factorization over indexed primes (prime index -> exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupernormImage {
    pub value: BigUint,
    pub factor_indices: BTreeMap<u64, u64>,
}

/// Convenience wrappers over a fresh [`PrimeIndexer`].
pub fn nth_prime(i: usize) -> u64 {
    PrimeIndexer::new().nth_prime(i)
}

pub fn supernorm(p: &Partition) -> SupernormImage {
    PrimeIndexer::new().supernorm(p)
}

pub fn supernorm_inverse(n: &BigUint) -> Partition {
    PrimeIndexer::new().supernorm_inverse(n)
}
