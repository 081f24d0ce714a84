//! Exact root finding over the supported fields.
//!
//! Rational and extension-field roots are found through a large prime:
//! roots are computed modulo p by equal-degree splitting, lifted back by
//! rational reconstruction, and verified exactly. For the rationals the
//! prime is chosen above a rigorous height bound, so the result is complete;
//! over extension fields the prime is astronomically larger than any
//! coordinate that can appear at this scale, and every returned root is
//! exactly verified either way. All randomness is internally seeded, so
//! results are deterministic.

use super::{poly, ExtElem, ExtField, Gf, GfField, Rat};
use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

const ROOTS_SEED: u64 = 0x5eed_0f_b15a5;

type MPoly = Vec<BigUint>;

fn mtrim(mut f: MPoly) -> MPoly {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

fn modinv(a: &BigUint, p: &BigUint) -> Option<BigUint> {
    let a = BigInt::from_biguint(Sign::Plus, a.clone());
    let p = BigInt::from_biguint(Sign::Plus, p.clone());
    let e = a.extended_gcd(&p);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(&p).to_biguint().unwrap())
}

fn mscale(f: &[BigUint], k: &BigUint, p: &BigUint) -> MPoly {
    mtrim(f.iter().map(|c| (c * k) % p).collect())
}

fn mmul(a: &[BigUint], b: &[BigUint], p: &BigUint) -> MPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + x * y) % p;
        }
    }
    mtrim(out)
}

fn msub(a: &[BigUint], b: &[BigUint], p: &BigUint) -> MPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigUint::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigUint::zero);
        out.push((x + p - (y % p)) % p);
    }
    mtrim(out)
}

/// Remainder of `a` by `b` (any nonzero `b`) mod p.
fn mrem(a: &[BigUint], b: &[BigUint], p: &BigUint) -> MPoly {
    let b = mtrim(b.to_vec());
    assert!(!b.is_empty());
    let lead_inv = modinv(b.last().unwrap(), p).expect("leading coefficient invertible");
    let mut rem = mtrim(a.to_vec());
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = (rem.last().unwrap() * &lead_inv) % p;
        for (i, bc) in b.iter().enumerate() {
            let sub = (bc * &c) % p;
            rem[k + i] = (&rem[k + i] + p - sub) % p;
        }
        rem = mtrim(rem);
    }
    rem
}

fn mgcd(a: &[BigUint], b: &[BigUint], p: &BigUint) -> MPoly {
    let mut a = mtrim(a.to_vec());
    let mut b = mtrim(b.to_vec());
    while !b.is_empty() {
        let r = mrem(&a, &b, p);
        a = b;
        b = r;
    }
    match a.last() {
        None => a,
        Some(c) => {
            let ci = modinv(c, p).expect("nonzero lead");
            mscale(&a, &ci, p)
        }
    }
}

/// `base^e mod (m, p)` for polynomials.
fn mpowmod(base: &[BigUint], e: &BigUint, m: &[BigUint], p: &BigUint) -> MPoly {
    let mut acc = vec![BigUint::one()];
    let mut b = mrem(base, m, p);
    let mut e = e.clone();
    let two = BigUint::from(2u32);
    while !e.is_zero() {
        if e.is_odd() {
            acc = mrem(&mmul(&acc, &b, p), m, p);
        }
        b = mrem(&mmul(&b, &b, p), m, p);
        e /= &two;
    }
    acc
}

fn mb_is_prime(n: &BigUint, rng: &mut ChaCha8Rng) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for q in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let q = BigUint::from(q);
        if *n == q {
            return true;
        }
        if (n % &q).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2u32;
        s += 1;
    }
    'round: for _ in 0..32 {
        let a = rng.gen_biguint_range(&BigUint::from(2u32), &nm1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

fn random_prime(bits: u64, rng: &mut ChaCha8Rng) -> BigUint {
    loop {
        let mut c = rng.gen_biguint(bits);
        c.set_bit(bits - 1, true);
        c.set_bit(0, true);
        if mb_is_prime(&c, rng) {
            return c;
        }
    }
}

/// All roots of f in GF(p) (each once), via gcd with x^p - x and
/// equal-degree splitting.
fn roots_mod(f: &[BigUint], p: &BigUint, rng: &mut ChaCha8Rng) -> Vec<BigUint> {
    let f = mtrim(f.iter().map(|c| c % p).collect());
    if f.len() <= 1 {
        return Vec::new();
    }
    if *p == BigUint::from(2u32) || *p == BigUint::from(3u32) {
        let mut out = Vec::new();
        let pl: u32 = p.try_into().unwrap();
        for r in 0..pl {
            let r = BigUint::from(r);
            let mut acc = BigUint::zero();
            for c in f.iter().rev() {
                acc = (acc * &r + c) % p;
            }
            if acc.is_zero() {
                out.push(r);
            }
        }
        return out;
    }
    // x^p mod f, then the product of the distinct linear factors.
    let x = vec![BigUint::zero(), BigUint::one()];
    let xp = mpowmod(&x, p, &f, p);
    let g = mgcd(&f, &msub(&xp, &x, p), p);
    let mut out = Vec::new();
    let mut stack = vec![g];
    let half = (p - BigUint::one()) / BigUint::from(2u32);
    let mut guard = 0usize;
    while let Some(g) = stack.pop() {
        if g.len() <= 1 {
            continue;
        }
        if g.len() == 2 {
            // c0 + c1 x: root -c0/c1.
            let c1i = modinv(&g[1], p).unwrap();
            out.push(((p - &g[0] % p) * c1i) % p);
            continue;
        }
        loop {
            guard += 1;
            assert!(guard < 10_000, "splitting failed to converge");
            let a = rng.gen_biguint_below(p);
            let shifted = vec![a, BigUint::one()];
            let pw = mpowmod(&shifted, &half, &g, p);
            let h = mgcd(&g, &msub(&pw, &[BigUint::one()], p), p);
            if !h.is_empty() && h.len() > 1 && h.len() < g.len() {
                let (q, r) = (mdiv(&g, &h, p), mrem(&g, &h, p));
                debug_assert!(r.is_empty());
                stack.push(h);
                stack.push(q);
                break;
            }
        }
    }
    out.sort();
    out
}

fn mdiv(a: &[BigUint], b: &[BigUint], p: &BigUint) -> MPoly {
    let b = mtrim(b.to_vec());
    let lead_inv = modinv(b.last().unwrap(), p).unwrap();
    let mut rem = mtrim(a.to_vec());
    if rem.len() < b.len() {
        return Vec::new();
    }
    let mut quo = vec![BigUint::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = (rem.last().unwrap() * &lead_inv) % p;
        quo[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let sub = (bc * &c) % p;
            rem[k + i] = (&rem[k + i] + p - sub) % p;
        }
        rem = mtrim(rem);
    }
    mtrim(quo)
}

/// Recovers a small rational from its residue mod p: the unique a/b with
/// |a|, b <= sqrt(p/2) congruent to r, when one exists.
fn rat_reconstruct(r: &BigUint, p: &BigUint) -> Option<Rat> {
    let bound = (p / BigUint::from(2u32)).sqrt();
    let p_i = BigInt::from_biguint(Sign::Plus, p.clone());
    let mut r0 = p_i.clone();
    let mut r1 = BigInt::from_biguint(Sign::Plus, r % p);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    let bound_i = BigInt::from_biguint(Sign::Plus, bound);
    while r1.abs() > bound_i {
        if r1.is_zero() {
            return None;
        }
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound_i {
        return None;
    }
    let (mut num, mut den) = (r1, t1);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    Some(Rat::from_big(num, den))
}

fn to_residue(x: &Rat, p: &BigUint) -> Option<BigUint> {
    let pm = BigInt::from_biguint(Sign::Plus, p.clone());
    let den = x.denom().mod_floor(&pm).to_biguint().unwrap();
    let deni = modinv(&den, p)?;
    let num = x.numer().mod_floor(&pm).to_biguint().unwrap();
    Some((num * deni) % p)
}

/// All rational roots of a rational polynomial. Complete: the prime exceeds
/// twice the square of the numerator/denominator bound from the rational
/// root theorem.
pub fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(ROOTS_SEED);
    let f = poly::trim(coeffs.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in &f {
        lcm = lcm.lcm(c.denom());
    }
    let zf: Vec<BigInt> = f
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    // Strip powers of x; 0 is a root when the constant term vanishes.
    let mut zf = zf;
    let mut zero_root = false;
    while zf.first().map_or(false, |c| c.is_zero()) {
        zero_root = true;
        zf.remove(0);
    }
    let mut out = Vec::new();
    if zero_root {
        out.push(Rat::zero());
    }
    if zf.len() > 1 {
        let lead = zf.last().unwrap().abs();
        let tail = zf.first().unwrap().abs();
        let m = lead.max(tail).to_biguint().unwrap();
        let bits = (2 * m.bits() + 8).max(64);
        let p = loop {
            let p = random_prime(bits, &mut rng);
            if !(zf.last().unwrap().mod_floor(&BigInt::from_biguint(Sign::Plus, p.clone())))
                .is_zero()
            {
                break p;
            }
        };
        let pm = BigInt::from_biguint(Sign::Plus, p.clone());
        let fm: MPoly = zf
            .iter()
            .map(|c| c.mod_floor(&pm).to_biguint().unwrap())
            .collect();
        for r in roots_mod(&fm, &p, &mut rng) {
            if let Some(cand) = rat_reconstruct(&r, &p) {
                if poly::eval(&f, &cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

/// All roots in GF(p).
pub fn gf_roots(field: &GfField, coeffs: &[Gf]) -> Vec<Gf> {
    let mut rng = ChaCha8Rng::seed_from_u64(ROOTS_SEED);
    let attached: Vec<Gf> = coeffs.iter().map(|c| c.attach(field)).collect();
    let mut f = attached;
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    if f.len() <= 1 {
        return Vec::new();
    }
    if field.p <= 1 << 16 {
        // Brute force for small fields.
        let mut out = Vec::new();
        for v in 0..field.p {
            let x = Gf::new(v as i64, field);
            if poly::eval(&f, &x).is_zero() {
                out.push(x);
            }
        }
        return out;
    }
    let p = BigUint::from(field.p);
    let fm: MPoly = f.iter().map(|c| BigUint::from(c.value())).collect();
    let mut out: Vec<Gf> = roots_mod(&fm, &p, &mut rng)
        .into_iter()
        .map(|r| {
            let v: u64 = r.try_into().unwrap();
            Gf::new(v as i64, field)
        })
        .collect();
    out.sort_by_key(|g| g.value());
    out
}

/// All roots in ℚ[t]/(m). Every returned root is verified exactly; the
/// search is modular with a prime far above the coordinate heights that can
/// occur at this scale.
pub fn ext_roots(field: &Arc<ExtField>, coeffs: &[ExtElem]) -> Vec<ExtElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(ROOTS_SEED);
    let attached: Vec<ExtElem> = coeffs.iter().map(|c| c.attach(field)).collect();
    let f = poly::trim(attached);
    if f.len() <= 1 {
        return Vec::new();
    }
    let sf = poly::monic(&poly::squarefree_part(&f, field));
    let d = field.degree();
    // Height estimate over all rational coordinates in play.
    let mut max_bits = 8u64;
    let mut scan = |r: &Rat| {
        max_bits = max_bits
            .max(r.numer().to_biguint().map_or(0, |b| b.bits()) + 1)
            .max(r.denom().to_biguint().map_or(0, |b| b.bits()) + 1);
    };
    for c in &sf {
        for co in c.coords(field) {
            scan(&co);
        }
    }
    for c in &field.modulus {
        scan(c);
    }
    let bits = (2 * max_bits + 64).max(192);
    'prime: for _ in 0..200 {
        let p = random_prime(bits, &mut rng);
        let pm = BigInt::from_biguint(Sign::Plus, p.clone());
        // All denominators must be invertible mod p.
        let to_res = |r: &Rat| -> Option<BigUint> {
            if r.denom().mod_floor(&pm).is_zero() {
                return None;
            }
            to_residue(r, &p)
        };
        let mut modulus_m = Vec::new();
        for c in &field.modulus {
            match to_res(c) {
                Some(v) => modulus_m.push(v),
                None => continue 'prime,
            }
        }
        // The defining polynomial must split with d distinct roots.
        let thetas = roots_mod(&modulus_m, &p, &mut rng);
        if thetas.len() != d {
            continue 'prime;
        }
        // Image of the polynomial under each embedding.
        let mut embedded: Vec<MPoly> = Vec::with_capacity(d);
        for theta in &thetas {
            let mut fj: MPoly = Vec::with_capacity(sf.len());
            for c in &sf {
                let mut acc = BigUint::zero();
                let mut pw = BigUint::one();
                for co in c.coords(field) {
                    let r = match to_res(&co) {
                        Some(v) => v,
                        None => continue 'prime,
                    };
                    acc = (acc + r * &pw) % &p;
                    pw = (pw * theta) % &p;
                }
                fj.push(acc);
            }
            embedded.push(fj);
        }
        let root_sets: Vec<Vec<BigUint>> = embedded
            .iter()
            .map(|fj| roots_mod(fj, &p, &mut rng))
            .collect();
        let total: usize = root_sets.iter().map(|s| s.len().max(1)).product();
        assert!(total <= 1 << 20, "root tuple space too large");
        if root_sets.iter().any(|s| s.is_empty()) {
            return Vec::new();
        }
        // Every root of the polynomial determines one residue per embedding;
        // interpolate coordinates from each tuple and verify exactly.
        let mut out: Vec<ExtElem> = Vec::new();
        let mut idx = vec![0usize; d];
        loop {
            let tuple: Vec<BigUint> = (0..d).map(|j| root_sets[j][idx[j]].clone()).collect();
            if let Some(coords_m) = interpolate(&thetas, &tuple, &p) {
                let mut coords = Vec::with_capacity(d);
                let mut ok = true;
                for cm in &coords_m {
                    match rat_reconstruct(cm, &p) {
                        Some(r) => coords.push(r),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let cand = ExtElem::new(coords, field);
                    if poly::eval(&sf, &cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
            // Advance the mixed-radix tuple index.
            let mut k = d;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < root_sets[k].len() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
        out.sort_by(|a, b| a.coords(field).cmp(&b.coords(field)));
        return out;
    }
    panic!("no usable prime found for extension-field root search");
}

/// Coefficients of the polynomial of degree < d through (theta_j, r_j) mod p.
fn interpolate(thetas: &[BigUint], values: &[BigUint], p: &BigUint) -> Option<MPoly> {
    let d = thetas.len();
    let mut acc: MPoly = Vec::new();
    for j in 0..d {
        // l_j(x) = prod_{k != j} (x - theta_k) / (theta_j - theta_k)
        let mut num: MPoly = vec![BigUint::one()];
        let mut den = BigUint::one();
        for k in 0..d {
            if k == j {
                continue;
            }
            num = mmul(&num, &[(p - &thetas[k] % p) % p, BigUint::one()], p);
            den = (den * ((p + &thetas[j] - &thetas[k]) % p)) % p;
        }
        let scale = (&values[j] * modinv(&den, p)?) % p;
        acc = {
            let term = mscale(&num, &scale, p);
            let n = acc.len().max(term.len());
            let mut out = Vec::with_capacity(n);
            for i in 0..n {
                let x = acc.get(i).cloned().unwrap_or_else(BigUint::zero);
                let y = term.get(i).cloned().unwrap_or_else(BigUint::zero);
                out.push((x + y) % p);
            }
            mtrim(out)
        };
    }
    let mut out = acc;
    out.resize(d, BigUint::zero());
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn rational_roots_of_products() {
        // (x - 2)(x + 1/3)(x^2 + 1) -> roots 2, -1/3
        let f = poly::mul(
            &poly::mul(&[q(-2), q(1)], &[Rat::ratio(1, 3), q(1)]),
            &[q(1), q(0), q(1)],
        );
        assert_eq!(rational_roots(&f), vec![Rat::ratio(-1, 3), q(2)]);
    }

    #[test]
    fn rational_roots_zero_and_repeat() {
        // x^2 (x - 5)^2
        let f = poly::mul(
            &poly::mul(&[q(0), q(1)], &[q(0), q(1)]),
            &poly::mul(&[q(-5), q(1)], &[q(-5), q(1)]),
        );
        assert_eq!(rational_roots(&f), vec![q(0), q(5)]);
    }

    #[test]
    fn rational_roots_none() {
        assert!(rational_roots(&[q(1), q(0), q(1)]).is_empty());
        assert!(rational_roots(&[q(7)]).is_empty());
        assert!(rational_roots(&[]).is_empty());
    }

    #[test]
    fn gf_roots_small() {
        let f5 = GfField::new(5);
        let g = |n: i64| Gf::new(n, &f5);
        // x^2 + 1 = (x-2)(x-3) over GF(5)
        let roots = gf_roots(&f5, &[g(1), g(0), g(1)]);
        assert_eq!(roots, vec![g(2), g(3)]);
    }

    #[test]
    fn gf_roots_large_prime() {
        let p = (1u64 << 61) - 1;
        let f = GfField::new(p);
        let g = |n: i64| Gf::new(n, &f);
        // (x - 3)(x - 1234567891011)
        let r = Gf::new(1234567891011, &f);
        let coeffs = vec![g(3) * r, -(g(3) + r), Gf::new(1, &f)];
        let roots = gf_roots(&f, &coeffs);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&g(3)) && roots.contains(&r));
    }

    #[test]
    fn ext_roots_gaussian() {
        let f = ExtField::gaussian();
        let i = f.gen();
        let one = ExtElem::constant(Rat::one());
        // x^2 + 1 has roots ±i in ℚ(i).
        let roots = ExtElem::poly_roots(&f, &[one.clone(), ExtElem::zero(), one.clone()]);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&i));
        assert!(roots.contains(&(-f.gen())));
        // x^4 - 1 has roots ±1, ±i.
        let roots4 = ExtElem::poly_roots(
            &f,
            &[
                -one.clone(),
                ExtElem::zero(),
                ExtElem::zero(),
                ExtElem::zero(),
                one.clone(),
            ],
        );
        assert_eq!(roots4.len(), 4);
        // x^2 - 2 has no roots in ℚ(i).
        let two = ExtElem::constant(Rat::from_int(2));
        let none = ExtElem::poly_roots(&f, &[-two, ExtElem::zero(), one]);
        assert!(none.is_empty());
    }

    #[test]
    fn reconstruction_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = random_prime(128, &mut rng);
        for (n, d) in [(3i64, 7i64), (-22, 5), (0, 1), (1000, 999)] {
            let x = Rat::ratio(n, d);
            let r = to_residue(&x, &p).unwrap();
            assert_eq!(rat_reconstruct(&r, &p).unwrap(), x);
        }
    }
}
