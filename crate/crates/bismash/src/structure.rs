//! Integrals and semisimplicity.

use crate::hopf::HopfData;
use crate::linalg;
use crate::report::Report;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::MathError;

/// Basis of the space of left integrals: all t with x·t = ε(x)·t for every x.
pub fn left_integrals<K: Scalar>(h: &HopfData<K>) -> Matrix<K> {
    let n = h.dim();
    let mut stacked: Option<Matrix<K>> = None;
    for i in 0..n {
        let op = h
            .algebra
            .left_mult(&h.basis_vec(i))
            .sub(&Matrix::identity(n).scale(&h.coalgebra.counit[i]));
        stacked = Some(match stacked {
            None => op,
            Some(s) => s.vstack(&op),
        });
    }
    linalg::kernel_basis(&stacked.expect("positive dimension"))
}

/// Basis of the space of right integrals: all t with t·x = ε(x)·t.
pub fn right_integrals<K: Scalar>(h: &HopfData<K>) -> Matrix<K> {
    let n = h.dim();
    let mut stacked: Option<Matrix<K>> = None;
    for i in 0..n {
        let op = h
            .algebra
            .right_mult(&h.basis_vec(i))
            .sub(&Matrix::identity(n).scale(&h.coalgebra.counit[i]));
        stacked = Some(match stacked {
            None => op,
            Some(s) => s.vstack(&op),
        });
    }
    linalg::kernel_basis(&stacked.expect("positive dimension"))
}

/// Semisimplicity by the integral criterion: the (one-dimensional) left
/// integral space is not annihilated by the counit.
pub fn is_semisimple<K: Scalar>(h: &HopfData<K>) -> Result<bool, MathError> {
    let li = left_integrals(h);
    if li.cols != 1 {
        return Err(MathError::Structure(format!(
            "left integral space has dimension {}, expected 1 for Hopf input",
            li.cols
        )));
    }
    Ok(!h.coalgebra.counit_of(&li.col(0)).is_zero())
}

/// Checks that the product of integrals α⊗t of the components, pushed
/// through bar, is a left integral of the result: the action fixes α up to
/// the scalar ε_L(h⇀1), and bar(α⊗t) satisfies x·v = ε(x)v in the result.
pub fn check_integral_product<K: Scalar>(
    bp: &crate::bismash::BismashProduct<K>,
) -> Result<Report, MathError> {
    let mut rep = Report::new(&format!("integrals:{}", bp.hopf.name));
    let li_l = left_integrals(&bp.pair.l);
    let li_h = left_integrals(&bp.pair.h);
    rep.push(
        "integral.component-dims",
        li_l.cols == 1 && li_h.cols == 1,
        Some(format!(
            "integral spaces have dimensions {} and {}",
            li_l.cols, li_h.cols
        )),
    );
    if li_l.cols != 1 || li_h.cols != 1 {
        return Ok(rep);
    }
    let alpha = li_l.col(0);
    let t = li_h.col(0);

    // h⇀α = ε_L(h⇀1)α for every h.
    let mut fail = None;
    for i in 0..bp.pair.h.dim() {
        let hv = bp.pair.h.basis_vec(i);
        let acted = bp.pair.action.apply_vec(&hv, &alpha);
        let scalar = bp
            .pair
            .l
            .coalgebra
            .counit_of(&bp.pair.action.apply_vec(&hv, &bp.pair.l.algebra.unit));
        let expected: Vec<K> = alpha.iter().map(|c| c.clone() * scalar.clone()).collect();
        if acted != expected {
            fail = Some(format!("h = {}", bp.pair.h.algebra.label(i)));
            break;
        }
    }
    rep.push("integral.action-eigenvector", fail.is_none(), fail);

    // v = bar(α⊗t) in result coordinates.
    let nh = bp.pair.h.dim();
    let mut w = vec![K::zero(); bp.pair.l.dim() * nh];
    for (x, a) in alpha.iter().enumerate() {
        for (h, b) in t.iter().enumerate() {
            w[x * nh + h] = a.clone() * b.clone();
        }
    }
    let image = bp.bar.apply(&w);
    if !bp.result.contains(&image) {
        rep.push_fail(
            "integral.product-member",
            "bar(α⊗t) left the result subspace".into(),
        );
        return Ok(rep);
    }
    let v = bp.result.project(&image);
    rep.push(
        "integral.product-nonzero",
        v.iter().any(|c| !c.is_zero()),
        Some("bar(α⊗t) = 0".into()),
    );
    let mut fail = None;
    for i in 0..bp.hopf.dim() {
        let prod = bp.hopf.algebra.mult_vec(&bp.hopf.basis_vec(i), &v);
        let scaled: Vec<K> = v
            .iter()
            .map(|c| c.clone() * bp.hopf.coalgebra.counit[i].clone())
            .collect();
        if prod != scaled {
            fail = Some(format!("x = {}", bp.hopf.algebra.label(i)));
            break;
        }
    }
    rep.push("integral.product-member", fail.is_none(), fail);
    Ok(rep)
}

/// The three-way semisimplicity equivalence for λ/z-built pairs:
/// the result is semisimple ⟺ L is semisimple and λ(∫ₗ^H) ≠ 0
/// ⟺ L is semisimple and λ(∫ᵣ^H) ≠ 0.
pub fn semisimplicity_equivalence<K: Scalar>(
    bp: &crate::bismash::BismashProduct<K>,
) -> Result<Report, MathError> {
    let lambda = bp.pair.lambda.as_ref().ok_or_else(|| {
        MathError::Precondition("pair was not built from λ and z".into())
    })?;
    let mut rep = Report::new(&format!("semisimplicity:{}", bp.hopf.name));
    let a = is_semisimple(&bp.hopf)?;
    let l_ss = is_semisimple(&bp.pair.l)?;
    let pair_with = |ints: Matrix<K>| -> Result<bool, MathError> {
        if ints.cols != 1 {
            return Err(MathError::Structure(format!(
                "integral space of H has dimension {}",
                ints.cols
            )));
        }
        let v = ints.col(0);
        let applied = lambda
            .iter()
            .zip(&v)
            .fold(K::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
        Ok(l_ss && !applied.is_zero())
    };
    let b = pair_with(left_integrals(&bp.pair.h))?;
    let c = pair_with(right_integrals(&bp.pair.h))?;
    rep.push(
        "semisimple.result-iff-left",
        a == b,
        Some(format!("result semisimple = {a}, L ss ∧ λ(∫ₗ)≠0 = {b}")),
    );
    rep.push(
        "semisimple.result-iff-right",
        a == c,
        Some(format!("result semisimple = {a}, L ss ∧ λ(∫ᵣ)≠0 = {c}")),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use crate::zoo;

    #[test]
    fn group_algebra_integral_is_group_sum() {
        let h = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(3), &crate::scalar::QField);
        let li = left_integrals(&h);
        assert_eq!(li.cols, 1);
        // The integral is a multiple of the sum of the group elements.
        let t = li.col(0);
        assert!(t.iter().all(|c| *c == t[0]));
        assert!(is_semisimple(&h).unwrap());
        assert_eq!(left_integrals(&h), right_integrals(&h));
    }

    #[test]
    fn integral_product_and_semisimplicity_on_the_c4_pair() {
        use crate::matchedpair::PartialMatchedPair;
        use num_traits::Zero;
        let g = zoo::groups::cyclic(4);
        let h = zoo::dual_group_algebra::<Rat>(&g, &crate::scalar::QField);
        let l = zoo::group_algebra::<Rat>(&g, &crate::scalar::QField);
        let half = Rat::ratio(1, 2);
        let mut lambda = vec![Rat::zero(); 4];
        let mut z = vec![Rat::zero(); 4];
        lambda[0] = half.clone();
        lambda[2] = half.clone();
        z[0] = half.clone();
        z[2] = half;
        let pair = PartialMatchedPair::from_lambda_z("c4", h, l, lambda, z).unwrap();
        let bp = crate::bismash::bismash_unchecked(&pair).unwrap();
        let rep = check_integral_product(&bp).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = semisimplicity_equivalence(&bp).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }
}
