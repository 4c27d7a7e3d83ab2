//! Residue arithmetic over Z_d for an odd prime d.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Hilbert-space dimension, which doubles as the prime modulus of every label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    /// Accepts odd primes only. `d = 2` is rejected because halving has no
    /// meaning in Z_2.
    pub fn new(d: u64) -> Result<Self> {
        if d <= 2 {
            return Err(Error::UnsupportedDimension(d));
        }
        if !is_prime(d) {
            return Err(Error::NotPrime(d));
        }
        Ok(Modulus(d))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.0 as usize
    }

    /// Residue of an arbitrary integer.
    #[inline]
    pub fn elem(self, value: i64) -> ZElem {
        ZElem::new(self, value)
    }

    /// All residues `0..d` in ascending order.
    pub fn residues(self) -> impl Iterator<Item = ZElem> + Clone {
        (0..self.0).map(move |v| ZElem {
            value: v,
            modulus: self,
        })
    }

    fn reduce(self, value: i64) -> u64 {
        value.rem_euclid(self.0 as i64) as u64
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Alias matching the free-function construction style used elsewhere.
pub fn make_modulus(d: u64) -> Result<Modulus> {
    Modulus::new(d)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// An element of Z_d, always kept in `[0, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZElem {
    value: u64,
    modulus: Modulus,
}

impl ZElem {
    pub fn new(modulus: Modulus, value: i64) -> Self {
        ZElem {
            value: modulus.reduce(value),
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn index(self) -> usize {
        self.value as usize
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(self) -> Result<ZElem> {
        if self.value == 0 {
            return Err(Error::NoInverse(0, self.modulus.get()));
        }
        let (mut r0, mut r1) = (self.modulus.get() as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime");
        Ok(ZElem::new(self.modulus, t0))
    }

    /// `self * 2^{-1}`. Total because the modulus is odd.
    pub fn half(self) -> ZElem {
        // 2^{-1} = (d + 1) / 2 for odd d
        let two_inv = self.modulus.get().div_ceil(2);
        ZElem {
            value: (self.value * two_inv) % self.modulus.get(),
            modulus: self.modulus,
        }
    }

    fn check(self, other: ZElem) {
        debug_assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

pub fn mod_inverse(a: ZElem) -> Result<ZElem> {
    a.inverse()
}

pub fn half(a: ZElem) -> ZElem {
    a.half()
}

impl fmt::Display for ZElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ZElem {
    type Output = ZElem;
    fn add(self, rhs: ZElem) -> ZElem {
        self.check(rhs);
        ZElem {
            value: (self.value + rhs.value) % self.modulus.get(),
            modulus: self.modulus,
        }
    }
}

impl Sub for ZElem {
    type Output = ZElem;
    fn sub(self, rhs: ZElem) -> ZElem {
        self.check(rhs);
        let d = self.modulus.get();
        ZElem {
            value: (self.value + d - rhs.value) % d,
            modulus: self.modulus,
        }
    }
}

impl Mul for ZElem {
    type Output = ZElem;
    fn mul(self, rhs: ZElem) -> ZElem {
        self.check(rhs);
        ZElem {
            value: (self.value * rhs.value) % self.modulus.get(),
            modulus: self.modulus,
        }
    }
}

impl Neg for ZElem {
    type Output = ZElem;
    fn neg(self) -> ZElem {
        let d = self.modulus.get();
        ZElem {
            value: (d - self.value) % d,
            modulus: self.modulus,
        }
    }
}

/// `ω^k` with `ω = e^{2πi/d}`. The exponent is reduced mod d first, then
/// mapped to `(-d/2, d/2)` so that `ω^{-k}` is bit-for-bit `conj(ω^k)`.
pub fn omega_power<T: Real>(d: Modulus, k: i64) -> Complex<T> {
    let k = d.reduce(k);
    if k == 0 {
        return Complex::new(T::one(), T::zero());
    }
    let signed = if 2 * k > d.get() {
        k as i64 - d.get() as i64
    } else {
        k as i64
    };
    let theta = T::TAU() * T::from_i64(signed).unwrap() / T::from_u64(d.get()).unwrap();
    Complex::from_polar(T::one(), theta)
}

/// `ω^k` for a residue exponent.
#[inline]
pub fn omega<T: Real>(k: ZElem) -> Complex<T> {
    omega_power(k.modulus(), k.value() as i64)
}
