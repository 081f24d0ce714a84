//! Prime fields GF(p) for p < 2^61.

use super::Scalar;
use rand::{Rng, RngCore};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Descriptor of a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GfField {
    pub p: u64,
}

impl GfField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 61), "modulus out of range");
        assert!(is_prime_u64(p), "modulus {p} is not prime");
        GfField { p }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for 64-bit integers with the standard base set.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// An element of GF(p). `p == 0` marks an unattached integer sentinel as
/// produced by `Zero::zero`/`One::one`; sentinels attach on first contact
/// with an attached element.
#[derive(Clone, Copy, Debug)]
pub struct Gf {
    v: i128,
    p: u64,
}

impl Gf {
    pub fn new(v: i64, field: &GfField) -> Self {
        Gf {
            v: (v as i128).rem_euclid(field.p as i128),
            p: field.p,
        }
    }

    pub fn value(&self) -> u64 {
        debug_assert!(self.p != 0, "sentinel has no canonical residue");
        self.v as u64
    }

    pub fn attach(&self, field: &GfField) -> Gf {
        Gf {
            v: self.v.rem_euclid(field.p as i128),
            p: field.p,
        }
    }

    fn join(a: &Gf, b: &Gf) -> u64 {
        match (a.p, b.p) {
            (0, p) | (p, 0) => p,
            (p, q) => {
                assert_eq!(p, q, "field mismatch: GF({p}) vs GF({q})");
                p
            }
        }
    }

    fn reduced(v: i128, p: u64) -> Gf {
        if p == 0 {
            Gf { v, p }
        } else {
            Gf {
                v: v.rem_euclid(p as i128),
                p,
            }
        }
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        let p = match (self.p, other.p) {
            (0, 0) => return self.v == other.v,
            (0, p) | (p, 0) => p,
            (p, q) => {
                if p != q {
                    return false;
                }
                p
            }
        };
        self.v.rem_euclid(p as i128) == other.v.rem_euclid(p as i128)
    }
}

impl Eq for Gf {}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Gf {
    type Output = Gf;
    fn add(self, rhs: Gf) -> Gf {
        let p = Gf::join(&self, &rhs);
        Gf::reduced(self.v + rhs.v, p)
    }
}

impl Sub for Gf {
    type Output = Gf;
    fn sub(self, rhs: Gf) -> Gf {
        let p = Gf::join(&self, &rhs);
        Gf::reduced(self.v - rhs.v, p)
    }
}

impl Mul for Gf {
    type Output = Gf;
    fn mul(self, rhs: Gf) -> Gf {
        let p = Gf::join(&self, &rhs);
        Gf::reduced(self.v * rhs.v, p)
    }
}

impl Neg for Gf {
    type Output = Gf;
    fn neg(self) -> Gf {
        Gf::reduced(-self.v, self.p)
    }
}

impl num_traits::Zero for Gf {
    fn zero() -> Self {
        Gf { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        if self.p == 0 {
            self.v == 0
        } else {
            self.v.rem_euclid(self.p as i128) == 0
        }
    }
}

impl num_traits::One for Gf {
    fn one() -> Self {
        Gf { v: 1, p: 0 }
    }
    fn is_one(&self) -> bool {
        if self.p == 0 {
            self.v == 1
        } else {
            self.v.rem_euclid(self.p as i128) == 1
        }
    }
}

impl Scalar for Gf {
    type Field = GfField;

    fn field(&self) -> Option<GfField> {
        if self.p == 0 {
            None
        } else {
            Some(GfField { p: self.p })
        }
    }

    fn from_ratio(num: i64, den: i64, field: &GfField) -> Option<Self> {
        let d = Gf::new(den, field);
        let n = Gf::new(num, field);
        d.inv().map(|di| n * di)
    }

    fn inv(&self) -> Option<Self> {
        let p = self.p;
        if p == 0 {
            // Unattached sentinels: ±1 are self-inverse in every field, zero
            // has no inverse; anything else needs a modulus to reduce by.
            return match self.v {
                0 => None,
                1 | -1 => Some(self.clone()),
                _ => panic!("cannot invert an unattached non-unit sentinel"),
            };
        }
        let v = self.v.rem_euclid(p as i128) as u64;
        if v == 0 {
            return None;
        }
        Some(Gf {
            v: pow_mod(v, p - 2, p) as i128,
            p,
        })
    }

    fn characteristic(field: &GfField) -> u64 {
        field.p
    }

    fn poly_roots(field: &GfField, coeffs: &[Self]) -> Vec<Self> {
        super::roots::gf_roots(field, coeffs)
    }

    fn sample(field: &GfField, rng: &mut dyn RngCore) -> Self {
        Gf {
            v: rng.gen_range(0..field.p) as i128,
            p: field.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(6_700_417u64 * 97));
    }

    #[test]
    fn sentinels_attach() {
        use num_traits::{One, Zero};
        let f = GfField::new(7);
        let three = Gf::new(3, &f);
        assert_eq!(Gf::zero() + three, three);
        assert_eq!(Gf::one() * three, three);
        assert_eq!(-Gf::one() * three, Gf::new(4, &f));
        assert_eq!(three.inv().unwrap(), Gf::new(5, &f));
    }
}
