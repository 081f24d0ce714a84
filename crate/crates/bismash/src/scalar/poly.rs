//! Dense univariate polynomial helpers over any [`Scalar`] field.
//!
//! Polynomials are coefficient vectors in ascending order; the zero
//! polynomial is the empty vector. All routines keep results trimmed.

use super::Scalar;

pub fn trim<K: Scalar>(mut p: Vec<K>) -> Vec<K> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn deg<K: Scalar>(p: &[K]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(K::zero);
        let y = b.get(i).cloned().unwrap_or_else(K::zero);
        out.push(x + y);
    }
    trim(out)
}

pub fn sub<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(K::zero);
        let y = b.get(i).cloned().unwrap_or_else(K::zero);
        out.push(x - y);
    }
    trim(out)
}

pub fn scale<K: Scalar>(a: &[K], k: &K) -> Vec<K> {
    trim(a.iter().map(|c| c.clone() * k.clone()).collect())
}

pub fn mul<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![K::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = std::mem::replace(&mut out[i + j], K::zero());
            out[i + j] = t + x.clone() * y.clone();
        }
    }
    trim(out)
}

/// Euclidean division; panics when the divisor is zero.
pub fn divmod<K: Scalar>(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lead_inv = b.last().unwrap().inv().expect("nonzero leading coefficient");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![K::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = rem.last().unwrap().clone() * lead_inv.clone();
        quo[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = std::mem::replace(&mut rem[k + i], K::zero());
            rem[k + i] = t - c.clone() * bc.clone();
        }
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quo), rem)
}

pub fn rem<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    divmod(a, b).1
}

/// Monic generator of the ideal (a, b); the zero polynomial when both vanish.
pub fn gcd<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// Scales to leading coefficient one; returns zero unchanged.
pub fn monic<K: Scalar>(p: &[K]) -> Vec<K> {
    match p.last() {
        None => Vec::new(),
        Some(c) => {
            let ci = c.inv().expect("nonzero leading coefficient");
            scale(p, &ci)
        }
    }
}

pub fn derivative<K: Scalar>(p: &[K], field: &K::Field) -> Vec<K> {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(K::int(i as i64, field) * c.clone());
    }
    trim(out)
}

pub fn eval<K: Scalar>(p: &[K], x: &K) -> K {
    let mut acc = K::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Extended Euclid: returns (g, s, t) with s·a + t·b = g, g monic.
pub fn xgcd<K: Scalar>(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>, Vec<K>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![K::one()];
    let mut s1 = Vec::new();
    let mut t0 = Vec::new();
    let mut t1 = vec![K::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(c) => {
            let ci = c.inv().expect("nonzero leading coefficient");
            (scale(&r0, &ci), scale(&s0, &ci), scale(&t0, &ci))
        }
    }
}

/// The product of the distinct irreducible factors, in characteristic zero
/// or when the polynomial is separable enough for gcd-based removal.
pub fn squarefree_part<K: Scalar>(p: &[K], field: &K::Field) -> Vec<K> {
    let p = monic(p);
    if p.len() <= 1 {
        return p;
    }
    let d = derivative(&p, field);
    if d.is_empty() {
        // Inseparable (only possible in characteristic p); callers at desk
        // scale never hit this with antipode/minimal polynomials, but fall
        // back to the input rather than divide by zero.
        return p;
    }
    let g = gcd(&p, &d);
    if g.len() <= 1 {
        return p;
    }
    monic(&divmod(&p, &g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QField, Rat};

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn divmod_roundtrip() {
        // (x^2-1) = (x+1)(x-1)
        let a = vec![q(-1), q(0), q(1)];
        let b = vec![q(1), q(1)];
        let (quo, rem) = divmod(&a, &b);
        assert_eq!(quo, vec![q(-1), q(1)]);
        assert!(rem.is_empty());
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = mul(&[q(1), q(1)], &[q(-2), q(1)]);
        let b = mul(&[q(1), q(1)], &[q(3), q(1)]);
        assert_eq!(gcd(&a, &b), vec![q(1), q(1)]);
    }

    #[test]
    fn xgcd_bezout() {
        let a = vec![q(-1), q(0), q(1)];
        let b = vec![q(2), q(1)];
        let (g, s, t) = xgcd(&a, &b);
        let lhs = add(&mul(&s, &a), &mul(&t, &b));
        assert_eq!(lhs, g);
        assert_eq!(g, vec![q(1)]);
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+2) -> (x-1)(x+2)
        let p = mul(&mul(&[q(-1), q(1)], &[q(-1), q(1)]), &[q(2), q(1)]);
        let sf = squarefree_part(&p, &QField);
        assert_eq!(sf, mul(&[q(-1), q(1)], &[q(2), q(1)]));
    }
}
