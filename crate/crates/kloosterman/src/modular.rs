//! Modular-arithmetic primitives: validated odd primes, residues,
//! inverses, Legendre symbols, primitive roots.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModularError {
    #[error("{0} is not an odd prime > 3")]
    NotOddPrime(u64),
    #[error("0 has no inverse modulo {0}")]
    ZeroInverse(u64),
    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u64, modulus: u64 },
}

/// A validated odd prime `p > 3`, the global modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Prime(u64);

impl Prime {
    /// Validates by trial division up to sqrt(n). Desk-scale moduli only.
    pub fn new(n: u64) -> Result<Self, ModularError> {
        if n <= 3 || n % 2 == 0 || !is_prime(n) {
            return Err(ModularError::NotOddPrime(n));
        }
        Ok(Prime(n))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// f = p - 1, the order of the unit group.
    pub fn f(self) -> u64 {
        self.0 - 1
    }

    pub fn residue(self, n: u64) -> Residue {
        Residue {
            value: n % self.0,
            modulus: self,
        }
    }

    /// Reduces an arbitrary signed integer into [0, p).
    pub fn reduce(self, n: i64) -> u64 {
        let p = self.0 as i64;
        n.rem_euclid(p) as u64
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.0;
        let mut acc = 1u64;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of n modulo p via Fermat: n^(p-2).
    pub fn inv(self, n: u64) -> Result<u64, ModularError> {
        if n % self.0 == 0 {
            return Err(ModularError::ZeroInverse(self.0));
        }
        Ok(self.pow(n, self.0 - 2))
    }

    /// Legendre symbol (a/p) in {-1, 0, 1} by Euler's criterion.
    ///
    /// O(log p) per query, so it stays usable at p ~ 10^6.
    pub fn legendre(self, a: i64) -> i32 {
        let r = self.reduce(a);
        if r == 0 {
            return 0;
        }
        let e = self.pow(r, (self.0 - 1) / 2);
        if e == 1 {
            1
        } else {
            debug_assert_eq!(e, self.0 - 1);
            -1
        }
    }

    /// Smallest primitive root g >= 2 modulo p.
    ///
    /// Deterministic so conjugacy-class labels are reproducible.
    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.0 - 1);
        'outer: for g in 2..self.0 {
            for &q in &factors {
                if self.pow(g, (self.0 - 1) / q) == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every prime has a primitive root");
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class modulo a validated prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Prime,
}

impl Residue {
    pub fn new(value: u64, modulus: Prime) -> Result<Self, ModularError> {
        if value >= modulus.value() {
            return Err(ModularError::ResidueOutOfRange {
                value,
                modulus: modulus.value(),
            });
        }
        Ok(Residue { value, modulus })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

/// Inverse of n modulo p; errors on n = 0.
pub fn mod_inverse(n: Residue) -> Result<Residue, ModularError> {
    let p = n.modulus();
    let v = p.inv(n.value())?;
    Ok(p.residue(v))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
