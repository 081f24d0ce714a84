//! Exact linear algebra: reduced row echelon form with transform tracking,
//! solving, kernels, images with sections, minimal polynomials and joint
//! eigen-characters.
//!
//! Over the rationals a fraction-free (Bareiss) elimination runs on
//! integer-scaled rows before a short rational normalization pass; other
//! fields use pivoted Gauss-Jordan elimination. Both produce the same
//! (unique) reduced echelon form.

use crate::matrix::Matrix;
use crate::scalar::{common_field, Scalar};
use crate::MathError;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Outcome of row reduction: `transform * input = rref`.
#[derive(Clone, Debug)]
pub struct Reduced<K> {
    pub rref: Matrix<K>,
    pub pivots: Vec<usize>,
    pub transform: Matrix<K>,
}

pub fn row_reduce<K: Scalar>(a: &Matrix<K>) -> Reduced<K> {
    if let Some(r) = bareiss_reduce(a) {
        return r;
    }
    gauss_reduce(a)
}

fn split_augmented<K: Scalar>(m: Matrix<K>, n: usize, pivots: Vec<usize>) -> Reduced<K> {
    let rref = Matrix::from_fn(m.rows, n, |i, j| m[(i, j)].clone());
    let transform = Matrix::from_fn(m.rows, m.cols - n, |i, j| m[(i, n + j)].clone());
    Reduced {
        rref,
        pivots,
        transform,
    }
}

/// Scales pivot rows to 1 and clears above each pivot; assumes row echelon
/// form with the given pivot columns in rows `0..pivots.len()`.
fn jordan_normalize<K: Scalar>(m: &mut Matrix<K>, pivots: &[usize]) {
    for (r, &col) in pivots.iter().enumerate() {
        let inv = m[(r, col)].inv().expect("pivot entry nonzero");
        for j in 0..m.cols {
            let t = std::mem::replace(&mut m[(r, j)], K::zero());
            m[(r, j)] = t * inv.clone();
        }
        for i in 0..r {
            let f = m[(i, col)].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..m.cols {
                let t = std::mem::replace(&mut m[(i, j)], K::zero());
                m[(i, j)] = t - f.clone() * m[(r, j)].clone();
            }
        }
    }
}

fn gauss_reduce<K: Scalar>(a: &Matrix<K>) -> Reduced<K> {
    let n = a.cols;
    let mut m = a.hstack(&Matrix::identity(a.rows));
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, pr);
        let inv = m[(r, col)].inv().expect("pivot nonzero");
        for j in 0..m.cols {
            let t = std::mem::replace(&mut m[(r, j)], K::zero());
            m[(r, j)] = t * inv.clone();
        }
        for i in 0..a.rows {
            if i == r || m[(i, col)].is_zero() {
                continue;
            }
            let f = m[(i, col)].clone();
            for j in 0..m.cols {
                let t = std::mem::replace(&mut m[(i, j)], K::zero());
                m[(i, j)] = t - f.clone() * m[(r, j)].clone();
            }
        }
        pivots.push(col);
        r += 1;
    }
    split_augmented(m, n, pivots)
}

/// Fraction-free elimination for fields embedding the integers exactly.
fn bareiss_reduce<K: Scalar>(a: &Matrix<K>) -> Option<Reduced<K>> {
    let n = a.cols;
    let total = n + a.rows;
    // Integer-scale each augmented row.
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(a.rows);
    for i in 0..a.rows {
        let mut ratios = Vec::with_capacity(n);
        for j in 0..n {
            ratios.push(a[(i, j)].to_int_ratio()?);
        }
        let mut lcm = BigInt::one();
        for (_, d) in &ratios {
            lcm = num_integer::Integer::lcm(&lcm, d);
        }
        let mut row: Vec<BigInt> = ratios
            .into_iter()
            .map(|(num, den)| num * (&lcm / &den))
            .collect();
        row.extend((0..a.rows).map(|j| if j == i { lcm.clone() } else { BigInt::zero() }));
        m.push(row);
    }
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..a.rows {
            for j in (col..total).rev() {
                let v = (&m[i][j] * &m[r][col] - &m[i][col] * &m[r][j]) / &prev;
                debug_assert_eq!(
                    &(&m[i][j] * &m[r][col] - &m[i][col] * &m[r][j]) % &prev,
                    BigInt::zero(),
                    "fraction-free step not exact"
                );
                m[i][j] = v;
            }
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let mut km: Matrix<K> = Matrix::from_fn(a.rows, total, |i, j| {
        K::from_int_ratio(m[i][j].clone(), BigInt::one()).expect("integer embeds")
    });
    jordan_normalize(&mut km, &pivots);
    Some(split_augmented(km, n, pivots))
}

pub fn rank<K: Scalar>(a: &Matrix<K>) -> usize {
    row_reduce(a).pivots.len()
}

/// Solves `a x = b` column-by-column (free variables zero). `None` when any
/// right-hand side is inconsistent.
pub fn solve_linear<K: Scalar>(
    a: &Matrix<K>,
    b: &Matrix<K>,
) -> Result<Option<Matrix<K>>, MathError> {
    if a.rows != b.rows {
        return Err(MathError::DimMismatch(format!(
            "solve: {} rows vs {} rows",
            a.rows, b.rows
        )));
    }
    let mut all: Vec<K> = a.entries().to_vec();
    all.extend_from_slice(b.entries());
    common_field(&all)?;
    let red = row_reduce(a);
    let y = red.transform.mul(b);
    let r = red.pivots.len();
    for i in r..a.rows {
        for j in 0..b.cols {
            if !y[(i, j)].is_zero() {
                return Ok(None);
            }
        }
    }
    let mut x = Matrix::zero(a.cols, b.cols);
    for (k, &col) in red.pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(col, j)] = y[(k, j)].clone();
        }
    }
    Ok(Some(x))
}

/// Columns spanning the kernel of `a`.
pub fn kernel_basis<K: Scalar>(a: &Matrix<K>) -> Matrix<K> {
    let red = row_reduce(a);
    let r = red.pivots.len();
    let free: Vec<usize> = (0..a.cols).filter(|c| !red.pivots.contains(c)).collect();
    let mut out = Matrix::zero(a.cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        out[(fc, j)] = K::one();
        for (k, &pc) in red.pivots.iter().enumerate().take(r) {
            out[(pc, j)] = -red.rref[(k, fc)].clone();
        }
    }
    out
}

/// A basis of the column space of `a` (pivot columns of `a` itself) together
/// with a section: `section * basis = identity`, and every column of `a`
/// equals `basis * section * column`.
pub fn image_basis<K: Scalar>(a: &Matrix<K>) -> (Matrix<K>, Matrix<K>) {
    let red = row_reduce(a);
    let r = red.pivots.len();
    let basis = Matrix::from_fn(a.rows, r, |i, j| a[(i, red.pivots[j])].clone());
    let section = Matrix::from_fn(r, a.rows, |i, j| red.transform[(i, j)].clone());
    debug_assert_eq!(section.mul(&basis), Matrix::identity(r));
    (basis, section)
}

pub fn inverse<K: Scalar>(a: &Matrix<K>) -> Option<Matrix<K>> {
    assert_eq!(a.rows, a.cols);
    let red = row_reduce(a);
    if red.pivots.len() == a.rows {
        Some(red.transform)
    } else {
        None
    }
}

/// Monic minimal polynomial of a square matrix (ascending coefficients).
pub fn matrix_minpoly<K: Scalar>(m: &Matrix<K>) -> Vec<K> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return vec![K::one()];
    }
    let mut powers: Vec<Vec<K>> = vec![Matrix::identity(n).entries().to_vec()];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(m);
        let target = Matrix::col_vec(cur.entries());
        let span = Matrix::from_cols(powers.clone());
        if let Some(sol) = solve_linear(&span, &target).expect("same field") {
            let k = powers.len();
            let mut coeffs: Vec<K> = (0..k).map(|i| -sol[(i, 0)].clone()).collect();
            coeffs.push(K::one());
            return coeffs;
        }
        powers.push(cur.entries().to_vec());
        assert!(powers.len() <= n + 1, "minimal polynomial search overran");
    }
}

/// Simultaneous eigen-characters of a family of commuting multiplication
/// operators: all tuples `(λ_i)` realized on a joint eigenvector and
/// multiplicative against the structure constants read off the operators
/// (column `j` of `ops[i]` is the product of basis elements `i` and `j`).
pub fn minpoly_factor_characters<K: Scalar>(
    ops: &[Matrix<K>],
    field: &K::Field,
) -> Result<Vec<Vec<K>>, MathError> {
    if ops.is_empty() {
        return Ok(Vec::new());
    }
    let m = ops[0].rows;
    for op in ops {
        if op.rows != m || op.cols != m {
            return Err(MathError::DimMismatch("operators must be square and equal-sized".into()));
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if ops[i].mul(&ops[j]) != ops[j].mul(&ops[i]) {
                return Err(MathError::Precondition(format!(
                    "operators {i} and {j} do not commute"
                )));
            }
        }
    }
    // Split the dual space into joint eigenspaces of the transposes.
    let mut parts: Vec<(Matrix<K>, Vec<K>)> = vec![(Matrix::identity(m), Vec::new())];
    for op in ops {
        let t = op.transpose();
        let mut next = Vec::new();
        for (basis, evs) in parts {
            let (b, section) = image_basis(&basis);
            let restricted = section.mul(&t.mul(&b));
            if b.mul(&restricted) != t.mul(&b) {
                return Err(MathError::Structure(
                    "subspace not invariant under commuting operator".into(),
                ));
            }
            let mp = matrix_minpoly(&restricted);
            let sf = crate::scalar::poly::squarefree_part(&mp, field);
            for lam in K::poly_roots(field, &sf) {
                let shifted = restricted.sub(&Matrix::identity(b.cols).scale(&lam));
                let ker = kernel_basis(&shifted);
                if ker.cols > 0 {
                    let mut e = evs.clone();
                    e.push(lam);
                    next.push((b.mul(&ker), e));
                }
            }
        }
        parts = next;
    }
    let mut out = Vec::new();
    for (_, evs) in parts {
        if evs.iter().all(|l| l.is_zero()) {
            continue;
        }
        // Multiplicativity against the structure constants.
        let mut ok = true;
        'pairs: for i in 0..ops.len() {
            for j in 0..ops.len() {
                let mut acc = K::zero();
                for k in 0..m {
                    if !ops[i][(k, j)].is_zero() {
                        acc = acc + ops[i][(k, j)].clone() * evs[k].clone();
                    }
                }
                if acc != evs[i].clone() * evs[j].clone() {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            out.push(evs);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QField, Rat};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rat::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_transform_contract() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        let red = row_reduce(&a);
        assert_eq!(red.transform.mul(&a), red.rref);
        assert_eq!(red.pivots, vec![0, 1]);
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let a = m(vec![vec![2, 0], vec![0, 4]]);
        let b = Matrix::col_vec(&[Rat::from_int(6), Rat::from_int(8)]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(x.col(0), vec![Rat::from_int(3), Rat::from_int(2)]);
        let sing = m(vec![vec![1, 1], vec![1, 1]]);
        let bad = Matrix::col_vec(&[Rat::from_int(0), Rat::from_int(1)]);
        assert!(solve_linear(&sing, &bad).unwrap().is_none());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(vec![vec![1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols, 2);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn image_section_contract() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let (basis, section) = image_basis(&a);
        assert_eq!(basis.cols, 2);
        assert_eq!(section.mul(&basis), Matrix::identity(2));
        // basis * section acts as identity on the column space of a.
        assert_eq!(basis.mul(&section.mul(&a)), a);
    }

    #[test]
    fn minpoly_of_projection() {
        // Diagonal (1, 1, 0): minimal polynomial x^2 - x.
        let p = m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        assert_eq!(
            matrix_minpoly(&p),
            vec![Rat::from_int(0), Rat::from_int(-1), Rat::from_int(1)]
        );
    }

    #[test]
    fn characters_of_group_algebra_c2() {
        // Multiplication operators of k[C2] in the basis {e, a}.
        let ne = m(vec![vec![1, 0], vec![0, 1]]);
        let na = m(vec![vec![0, 1], vec![1, 0]]);
        let chars = minpoly_factor_characters(&[ne, na], &QField).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars.contains(&vec![Rat::from_int(1), Rat::from_int(1)]));
        assert!(chars.contains(&vec![Rat::from_int(1), Rat::from_int(-1)]));
    }

    #[test]
    fn characters_reject_noncommuting() {
        let a = m(vec![vec![0, 1], vec![0, 0]]);
        let b = m(vec![vec![0, 0], vec![1, 0]]);
        assert!(minpoly_factor_characters(&[a, b], &QField).is_err());
    }

    proptest! {
        #[test]
        fn fraction_free_and_pivoted_elimination_agree(
            entries in proptest::collection::vec((-30i64..=30, 1i64..=9), 20)
        ) {
            let a = Matrix::from_fn(4, 5, |i, j| {
                let (n, d) = entries[i * 5 + j];
                Rat::ratio(n, d)
            });
            let ff = bareiss_reduce(&a).expect("rational input takes the fraction-free path");
            let piv = gauss_reduce(&a);
            prop_assert_eq!(&ff.rref, &piv.rref);
            prop_assert_eq!(&ff.pivots, &piv.pivots);
            prop_assert_eq!(ff.transform.mul(&a), ff.rref);
            prop_assert_eq!(piv.transform.mul(&a), piv.rref);
        }
    }
}
