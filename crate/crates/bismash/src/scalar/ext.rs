//! Extension fields of the rationals: ℚ[t]/(f) for monic irreducible f of
//! degree at most 4.

use super::{poly, roots, Rat, Scalar};
use num_traits::{One, Zero};
use rand::RngCore;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// A monic irreducible rational polynomial defining an extension field.
#[derive(Clone, Debug)]
pub struct ExtField {
    /// Ascending coefficients of the defining polynomial, leading coefficient 1.
    pub modulus: Vec<Rat>,
    /// Display name of the generator, e.g. `"i"`.
    pub var: String,
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl ExtField {
    /// Builds the field, rejecting non-monic, out-of-range-degree, or
    /// reducible moduli.
    pub fn new(modulus: Vec<Rat>, var: &str) -> Result<Arc<Self>, String> {
        let modulus = poly::trim(modulus);
        let deg = match poly::deg(&modulus) {
            Some(d) if (2..=4).contains(&d) => d,
            _ => return Err("modulus degree must be between 2 and 4".into()),
        };
        if !modulus.last().unwrap().is_one() {
            return Err("modulus must be monic".into());
        }
        if !is_irreducible(&modulus, deg) {
            return Err("modulus is reducible over the rationals".into());
        }
        Ok(Arc::new(ExtField {
            modulus,
            var: var.to_string(),
        }))
    }

    /// ℚ(i), the Gaussian rationals.
    pub fn gaussian() -> Arc<Self> {
        ExtField::new(
            vec![Rat::from_int(1), Rat::from_int(0), Rat::from_int(1)],
            "i",
        )
        .expect("t^2+1 is irreducible")
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The class of the generator t.
    pub fn gen(self: &Arc<Self>) -> ExtElem {
        let mut coeffs = vec![Rat::zero(); self.degree()];
        coeffs[1] = Rat::one();
        ExtElem {
            coeffs,
            field: Some(self.clone()),
        }
    }
}

/// Irreducibility over ℚ for monic polynomials of degree 2..=4.
fn is_irreducible(m: &[Rat], deg: usize) -> bool {
    if !roots::rational_roots(m).is_empty() {
        return false;
    }
    if deg < 4 {
        return true;
    }
    // No linear factors; rule out a split into two rational quadratics by
    // depressing to x^4 + P x^2 + Q x + R and testing the cubic resolvent
    // m^3 + 2P m^2 + (P^2 - 4R) m - Q^2 for a rational square root m = p^2.
    let a = m[3].clone();
    let b = m[2].clone();
    let c = m[1].clone();
    let d = m[0].clone();
    let q4 = Rat::ratio(1, 4);
    let shift = -(a.clone() * q4); // x -> x + shift
    let p2 = |x: &Rat| x.clone() * x.clone();
    // Expand (x+shift)^4 + a(x+shift)^3 + b(x+shift)^2 + c(x+shift) + d.
    let s = shift;
    let s2 = p2(&s);
    let s3 = s2.clone() * s.clone();
    let s4 = s2.clone() * s2.clone();
    let big_p = Rat::from_int(6) * s2.clone()
        + a.clone() * Rat::from_int(3) * s.clone()
        + b.clone();
    let big_q = Rat::from_int(4) * s3.clone()
        + a.clone() * Rat::from_int(3) * s2.clone()
        + b.clone() * Rat::from_int(2) * s.clone()
        + c.clone();
    let big_r = s4
        + a.clone() * s3
        + b.clone() * s2.clone()
        + c.clone() * s.clone()
        + d;
    if big_q.is_zero() {
        // (x^2+q)(x^2+s): reducible iff P^2 - 4R is a rational square.
        let disc = p2(&big_p) - Rat::from_int(4) * big_r.clone();
        if disc.is_square() {
            return false;
        }
    }
    let resolvent = vec![
        -p2(&big_q),
        p2(&big_p) - Rat::from_int(4) * big_r,
        Rat::from_int(2) * big_p,
        Rat::one(),
    ];
    for root in roots::rational_roots(&resolvent) {
        if !root.is_zero() && root.is_square() {
            return false;
        }
    }
    true
}

/// An element of ℚ[t]/(f): rational coordinates in the power basis of the
/// generator. `field == None` marks an unattached rational sentinel.
#[derive(Clone, Debug)]
pub struct ExtElem {
    coeffs: Vec<Rat>,
    field: Option<Arc<ExtField>>,
}

impl ExtElem {
    pub fn new(coeffs: Vec<Rat>, field: &Arc<ExtField>) -> Self {
        let reduced = poly::rem(&coeffs, &field.modulus);
        let mut coeffs = reduced;
        coeffs.resize(field.degree(), Rat::zero());
        ExtElem {
            coeffs,
            field: Some(field.clone()),
        }
    }

    pub fn constant(c: Rat) -> Self {
        ExtElem {
            coeffs: vec![c],
            field: None,
        }
    }

    /// Power-basis coordinates, padded to the field degree.
    pub fn coords(&self, field: &Arc<ExtField>) -> Vec<Rat> {
        let mut c = self.coeffs.clone();
        c.resize(field.degree(), Rat::zero());
        c
    }

    pub fn attach(&self, field: &Arc<ExtField>) -> ExtElem {
        match &self.field {
            Some(f) => {
                assert_eq!(f.modulus, field.modulus, "field mismatch");
                self.clone()
            }
            None => ExtElem::new(self.coeffs.clone(), field),
        }
    }

    fn join(a: &ExtElem, b: &ExtElem) -> Option<Arc<ExtField>> {
        match (&a.field, &b.field) {
            (None, None) => None,
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (Some(f), Some(g)) => {
                assert_eq!(f.modulus, g.modulus, "field mismatch");
                Some(f.clone())
            }
        }
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self
            .field
            .as_ref()
            .map(|fl| fl.var.clone())
            .unwrap_or_else(|| "t".to_string());
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 if c.is_one() => var.clone(),
                1 => format!("{c}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{c}*{var}^{i}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Add for ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: ExtElem) -> ExtElem {
        let field = ExtElem::join(&self, &rhs);
        ExtElem {
            coeffs: poly::add(&self.coeffs, &rhs.coeffs),
            field,
        }
    }
}

impl Sub for ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: ExtElem) -> ExtElem {
        let field = ExtElem::join(&self, &rhs);
        ExtElem {
            coeffs: poly::sub(&self.coeffs, &rhs.coeffs),
            field,
        }
    }
}

impl Mul for ExtElem {
    type Output = ExtElem;
    fn mul(self, rhs: ExtElem) -> ExtElem {
        let field = ExtElem::join(&self, &rhs);
        let prod = poly::mul(&self.coeffs, &rhs.coeffs);
        let coeffs = match &field {
            Some(f) => poly::rem(&prod, &f.modulus),
            None => prod,
        };
        ExtElem { coeffs, field }
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            field: self.field,
        }
    }
}

impl Zero for ExtElem {
    fn zero() -> Self {
        ExtElem {
            coeffs: Vec::new(),
            field: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for ExtElem {
    fn one() -> Self {
        ExtElem {
            coeffs: vec![Rat::one()],
            field: None,
        }
    }
    fn is_one(&self) -> bool {
        *self == ExtElem::one()
    }
}

impl Scalar for ExtElem {
    type Field = Arc<ExtField>;

    fn field(&self) -> Option<Arc<ExtField>> {
        self.field.clone()
    }

    fn from_ratio(num: i64, den: i64, field: &Arc<ExtField>) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(ExtElem::new(vec![Rat::ratio(num, den)], field))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.field {
            None => {
                // Unattached constant.
                Some(ExtElem {
                    coeffs: vec![self.coeffs[0].inv()?],
                    field: None,
                })
            }
            Some(f) => {
                let (g, s, _) = poly::xgcd(&self.coeffs, &f.modulus);
                assert_eq!(g, vec![Rat::one()], "modulus not coprime to element");
                Some(ExtElem::new(s, f))
            }
        }
    }

    fn characteristic(_field: &Arc<ExtField>) -> u64 {
        0
    }

    fn poly_roots(field: &Arc<ExtField>, coeffs: &[Self]) -> Vec<Self> {
        roots::ext_roots(field, coeffs)
    }

    fn sample(field: &Arc<ExtField>, rng: &mut dyn RngCore) -> Self {
        let coeffs = (0..field.degree())
            .map(|_| <Rat as Scalar>::sample(&super::QField, rng))
            .collect();
        ExtElem::new(coeffs, field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn gaussian_arithmetic() {
        let f = ExtField::gaussian();
        let i = f.gen();
        assert_eq!(i.clone() * i.clone(), -ExtElem::one());
        let z = ExtElem::new(vec![q(1), q(2)], &f); // 1 + 2i
        let zi = z.inv().unwrap();
        assert!((z * zi).is_one());
    }

    #[test]
    fn reducible_moduli_rejected() {
        // t^2 - 1 splits.
        assert!(ExtField::new(vec![q(-1), q(0), q(1)], "t").is_err());
        // t^4 + 4 = (t^2-2t+2)(t^2+2t+2).
        assert!(ExtField::new(vec![q(4), q(0), q(0), q(0), q(1)], "t").is_err());
        // t^4 - 4 has the quadratic factor t^2 - 2.
        assert!(ExtField::new(vec![q(-4), q(0), q(0), q(0), q(1)], "t").is_err());
        // t^4 + 1 is irreducible.
        assert!(ExtField::new(vec![q(1), q(0), q(0), q(0), q(1)], "t").is_ok());
        // t^4 - t - 1 is irreducible.
        assert!(ExtField::new(vec![q(-1), q(-1), q(0), q(0), q(1)], "t").is_ok());
        // t^3 - 2 is irreducible.
        assert!(ExtField::new(vec![q(-2), q(0), q(0), q(1)], "t").is_ok());
    }

    #[test]
    fn quartic_with_quadratic_split_rejected() {
        // (t^2+t+1)(t^2-t+2) = t^4 + 2t^2 + t + 2.
        let m = poly::mul(&[q(1), q(1), q(1)], &[q(2), q(-1), q(1)]);
        assert!(ExtField::new(m, "t").is_err());
    }
}
