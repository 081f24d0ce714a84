//! Hopf algebras presented by structure constants, with exhaustive exact
//! axiom checking over all basis tuples.

use crate::linalg;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::scalar::{field_of, Scalar};
use crate::tensor::{SparseOp, Tensor};
use crate::MathError;
use std::collections::BTreeMap;

/// Which unit laws an algebra is expected to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnitLaws {
    TwoSided,
    /// Only `1·a = a` is promised (smash-product ambients).
    LeftOnly,
    /// Only `a·1 = a` is promised (mirrored smash-product ambients).
    RightOnly,
}

/// Which counit laws a coalgebra is expected to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CounitLaws {
    TwoSided,
    /// Only `(id⊗ε)Δ = id` is promised (smash-coproduct ambients).
    RightOnly,
    /// Only `(ε⊗id)Δ = id` is promised (mirrored smash-coproduct ambients).
    LeftOnly,
}

/// An associative algebra by structure constants. `mult[i*dim + j]` lists the
/// sparse expansion of the product of basis elements `i` and `j`.
#[derive(Clone, Debug)]
pub struct AlgebraData<K> {
    pub dim: usize,
    pub mult: Vec<Vec<(usize, K)>>,
    pub unit: Vec<K>,
    pub labels: Vec<String>,
    pub unit_laws: UnitLaws,
}

/// A coassociative coalgebra by structure constants. `comult[i]` lists
/// `(j, k, c)` triples of `Δ(e_i) = Σ c · e_j ⊗ e_k`.
#[derive(Clone, Debug)]
pub struct CoalgebraData<K> {
    pub dim: usize,
    pub comult: Vec<Vec<(usize, usize, K)>>,
    pub counit: Vec<K>,
    pub counit_laws: CounitLaws,
}

/// Bialgebra or Hopf algebra data; the antipode is optional and can be
/// solved for.
#[derive(Clone, Debug)]
pub struct HopfData<K> {
    pub name: String,
    pub algebra: AlgebraData<K>,
    pub coalgebra: CoalgebraData<K>,
    pub antipode: Option<Matrix<K>>,
}

fn acc<K: Scalar>(map: &mut BTreeMap<usize, K>, idx: usize, c: K) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(idx).or_insert_with(K::zero);
    let v = std::mem::replace(e, K::zero()) + c;
    if v.is_zero() {
        map.remove(&idx);
    } else {
        *map.entry(idx).or_insert_with(K::zero) = v;
    }
}

/// Sparse view of a dense coordinate vector.
pub fn sparse_of_vec<K: Scalar>(v: &[K]) -> Vec<(usize, K)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl<K: Scalar> AlgebraData<K> {
    pub fn entry(&self, i: usize, j: usize) -> &[(usize, K)] {
        &self.mult[i * self.dim + j]
    }

    /// Product of two coordinate vectors.
    pub fn mult_vec(&self, a: &[K], b: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                for (k, c) in self.entry(i, j) {
                    let t = std::mem::replace(&mut out[*k], K::zero());
                    out[*k] = t + x.clone() * y.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `v`.
    pub fn left_mult(&self, v: &[K]) -> Matrix<K> {
        Matrix::from_cols(
            (0..self.dim)
                .map(|j| {
                    let mut e = vec![K::zero(); self.dim];
                    e[j] = K::one();
                    self.mult_vec(v, &e)
                })
                .collect(),
        )
    }

    /// Matrix of right multiplication by `v`.
    pub fn right_mult(&self, v: &[K]) -> Matrix<K> {
        Matrix::from_cols(
            (0..self.dim)
                .map(|j| {
                    let mut e = vec![K::zero(); self.dim];
                    e[j] = K::one();
                    self.mult_vec(&e, v)
                })
                .collect(),
        )
    }

    pub fn mult_op(&self) -> SparseOp<K> {
        SparseOp::new(
            vec![self.dim, self.dim],
            vec![self.dim],
            self.mult.clone(),
        )
    }

    pub fn unit_op(&self) -> SparseOp<K> {
        SparseOp::insert(&self.unit)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                let a: BTreeMap<usize, K> = self.entry(i, j).iter().cloned().collect();
                let b: BTreeMap<usize, K> = self.entry(j, i).iter().cloned().collect();
                let mut d = BTreeMap::new();
                for (k, c) in a {
                    acc(&mut d, k, c);
                }
                for (k, c) in b {
                    acc(&mut d, k, -c);
                }
                if !d.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity over all basis triples plus the promised unit laws.
    pub fn check(&self) -> Report {
        let mut rep = Report::new("algebra");
        let n = self.dim;
        let mut assoc_witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.entry(i, j).to_vec();
                for k in 0..n {
                    let mut diff: BTreeMap<usize, K> = BTreeMap::new();
                    for (p, c) in &ij {
                        for (q, d) in self.entry(*p, k) {
                            acc(&mut diff, *q, c.clone() * d.clone());
                        }
                    }
                    for (p, c) in self.entry(j, k) {
                        for (q, d) in self.entry(i, *p) {
                            acc(&mut diff, *q, -(c.clone() * d.clone()));
                        }
                    }
                    if !diff.is_empty() {
                        assoc_witness = Some(format!(
                            "({}, {}, {})",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push("algebra.associativity", assoc_witness.is_none(), assoc_witness);
        let e = |j: usize| {
            let mut v = vec![K::zero(); n];
            v[j] = K::one();
            v
        };
        let mut left_w = None;
        let mut right_w = None;
        for j in 0..n {
            let ej = e(j);
            if left_w.is_none() && self.mult_vec(&self.unit, &ej) != ej {
                left_w = Some(self.label(j).to_string());
            }
            if right_w.is_none() && self.mult_vec(&ej, &self.unit) != ej {
                right_w = Some(self.label(j).to_string());
            }
        }
        if self.unit_laws != UnitLaws::RightOnly {
            rep.push("algebra.unit.left", left_w.is_none(), left_w);
        }
        if self.unit_laws != UnitLaws::LeftOnly {
            rep.push("algebra.unit.right", right_w.is_none(), right_w);
        }
        rep
    }
}

impl<K: Scalar> CoalgebraData<K> {
    pub fn comult_op(&self) -> SparseOp<K> {
        let n = self.dim;
        let cols = self
            .comult
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(j, k, c)| (j * n + k, c.clone()))
                    .collect()
            })
            .collect();
        SparseOp::new(vec![n], vec![n, n], cols)
    }

    pub fn counit_op(&self) -> SparseOp<K> {
        SparseOp::functional(&self.counit)
    }

    pub fn counit_of(&self, v: &[K]) -> K {
        let mut acc = K::zero();
        for (c, x) in self.counit.iter().zip(v) {
            if !x.is_zero() {
                acc = acc + c.clone() * x.clone();
            }
        }
        acc
    }

    /// Comultiplication of a coordinate vector as a two-slot tensor.
    pub fn comult_of(&self, v: &[K]) -> Tensor<K> {
        Tensor::from_vec(v).apply(0, &self.comult_op())
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            let mut d: BTreeMap<usize, K> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                acc(&mut d, j * n + k, c.clone());
                acc(&mut d, k * n + j, -c.clone());
            }
            if !d.is_empty() {
                return false;
            }
        }
        true
    }

    /// Coassociativity over all basis elements plus the promised counit laws.
    pub fn check(&self, labels: &[String]) -> Report {
        let mut rep = Report::new("coalgebra");
        let n = self.dim;
        let mut coassoc_w = None;
        for i in 0..n {
            let mut d: BTreeMap<usize, K> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                // (Δ⊗id)Δ
                for (a, b, c2) in &self.comult[*j] {
                    acc(&mut d, (a * n + b) * n + k, c.clone() * c2.clone());
                }
                // (id⊗Δ)Δ
                for (a, b, c2) in &self.comult[*k] {
                    acc(&mut d, (j * n + a) * n + b, -(c.clone() * c2.clone()));
                }
            }
            if !d.is_empty() {
                coassoc_w = Some(labels[i].clone());
                break;
            }
        }
        rep.push("coalgebra.coassociativity", coassoc_w.is_none(), coassoc_w);
        let mut right_w = None;
        let mut left_w = None;
        for i in 0..n {
            // (id⊗ε)Δ = id and (ε⊗id)Δ = id on e_i.
            let mut r: BTreeMap<usize, K> = BTreeMap::new();
            let mut l: BTreeMap<usize, K> = BTreeMap::new();
            for (j, k, c) in &self.comult[i] {
                acc(&mut r, *j, c.clone() * self.counit[*k].clone());
                acc(&mut l, *k, c.clone() * self.counit[*j].clone());
            }
            acc(&mut r, i, -K::one());
            acc(&mut l, i, -K::one());
            if right_w.is_none() && !r.is_empty() {
                right_w = Some(labels[i].clone());
            }
            if left_w.is_none() && !l.is_empty() {
                left_w = Some(labels[i].clone());
            }
        }
        if self.counit_laws != CounitLaws::LeftOnly {
            rep.push("coalgebra.counit.right", right_w.is_none(), right_w);
        }
        if self.counit_laws != CounitLaws::RightOnly {
            rep.push("coalgebra.counit.left", left_w.is_none(), left_w);
        }
        rep
    }
}

impl<K: Scalar> HopfData<K> {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.algebra.labels
    }

    /// First attached field found among the structure constants.
    pub fn field(&self) -> Option<K::Field> {
        if let Some(f) = field_of(&self.algebra.unit) {
            return Some(f);
        }
        if let Some(f) = field_of(&self.coalgebra.counit) {
            return Some(f);
        }
        for terms in &self.algebra.mult {
            if let Some(f) = field_of(&terms.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>()) {
                return Some(f);
            }
        }
        for terms in &self.coalgebra.comult {
            if let Some(f) =
                field_of(&terms.iter().map(|(_, _, c)| c.clone()).collect::<Vec<_>>())
            {
                return Some(f);
            }
        }
        None
    }

    pub fn field_or_err(&self) -> Result<K::Field, MathError> {
        self.field()
            .ok_or_else(|| MathError::Precondition("no attached field in structure constants".into()))
    }

    pub fn basis_vec(&self, i: usize) -> Vec<K> {
        let mut v = vec![K::zero(); self.dim()];
        v[i] = K::one();
        v
    }

    /// Bialgebra laws: component checks plus compatibility of Δ and ε with
    /// multiplication and unit.
    pub fn check_bialgebra(&self) -> Report {
        let mut rep = Report::new(&format!("bialgebra({})", self.name));
        rep.absorb("bialgebra", &self.algebra.check());
        rep.absorb("bialgebra", &self.coalgebra.check(&self.algebra.labels));
        let n = self.dim();
        // Δ multiplicative: Δ(e_i e_j) = Δ(e_i) Δ(e_j).
        let mut w = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let mut d: BTreeMap<usize, K> = BTreeMap::new();
                for (k, c) in self.algebra.entry(i, j) {
                    for (a, b, c2) in &self.coalgebra.comult[*k] {
                        acc(&mut d, a * n + b, c.clone() * c2.clone());
                    }
                }
                for (a1, b1, c1) in &self.coalgebra.comult[i] {
                    for (a2, b2, c2) in &self.coalgebra.comult[j] {
                        let c12 = c1.clone() * c2.clone();
                        for (p, cp) in self.algebra.entry(*a1, *a2) {
                            for (q, cq) in self.algebra.entry(*b1, *b2) {
                                acc(
                                    &mut d,
                                    p * n + q,
                                    -(c12.clone() * cp.clone() * cq.clone()),
                                );
                            }
                        }
                    }
                }
                if !d.is_empty() {
                    w = Some(format!("({}, {})", self.algebra.label(i), self.algebra.label(j)));
                    break 'outer;
                }
            }
        }
        rep.push("bialgebra.comult.multiplicative", w.is_none(), w);
        // Δ(1) = 1⊗1.
        let d1 = self.coalgebra.comult_of(&self.algebra.unit);
        let mut oneone = Tensor::zero(vec![n, n]);
        for (i, a) in self.algebra.unit.iter().enumerate() {
            for (j, b) in self.algebra.unit.iter().enumerate() {
                oneone.add_term(vec![i, j], a.clone() * b.clone());
            }
        }
        rep.push(
            "bialgebra.comult.unit",
            d1 == oneone,
            d1.first_diff_witness(&oneone),
        );
        // ε multiplicative and ε(1) = 1.
        let mut w = None;
        'outer2: for i in 0..n {
            for j in 0..n {
                let mut lhs = K::zero();
                for (k, c) in self.algebra.entry(i, j) {
                    lhs = lhs + c.clone() * self.coalgebra.counit[*k].clone();
                }
                let rhs = self.coalgebra.counit[i].clone() * self.coalgebra.counit[j].clone();
                if lhs != rhs {
                    w = Some(format!("({}, {})", self.algebra.label(i), self.algebra.label(j)));
                    break 'outer2;
                }
            }
        }
        rep.push("bialgebra.counit.multiplicative", w.is_none(), w);
        let e1 = self.coalgebra.counit_of(&self.algebra.unit);
        rep.push(
            "bialgebra.counit.unit",
            e1.is_one(),
            Some(format!("ε(1) = {e1}")),
        );
        rep
    }

    /// Full Hopf check: bialgebra laws plus both antipode convolution laws.
    pub fn check_hopf(&self) -> Report {
        let mut rep = self.check_bialgebra();
        rep.name = format!("hopf({})", self.name);
        match &self.antipode {
            None => rep.push_fail("hopf.antipode.present", "no antipode attached".into()),
            Some(s) => {
                let (lw, rw) = self.antipode_law_witnesses(s);
                rep.push("hopf.antipode.left", lw.is_none(), lw);
                rep.push("hopf.antipode.right", rw.is_none(), rw);
            }
        }
        rep
    }

    /// Witnesses against m(S⊗id)Δ = uε and m(id⊗S)Δ = uε, if any.
    fn antipode_law_witnesses(&self, s: &Matrix<K>) -> (Option<String>, Option<String>) {
        let n = self.dim();
        let sop = SparseOp::from_matrix(s, vec![n], vec![n]);
        let mop = self.algebra.mult_op();
        let cop = self.coalgebra.comult_op();
        let mut lw = None;
        let mut rw = None;
        for i in 0..n {
            let d = Tensor::basis(vec![n], &[i]).apply(0, &cop);
            let target = Tensor::from_vec(&self.algebra.unit).scale(&self.coalgebra.counit[i]);
            let left = d.apply(0, &sop).apply(0, &mop);
            let right = d.apply(1, &sop).apply(0, &mop);
            if lw.is_none() && left != target {
                lw = Some(self.algebra.label(i).to_string());
            }
            if rw.is_none() && right != target {
                rw = Some(self.algebra.label(i).to_string());
            }
        }
        (lw, rw)
    }

    /// Convolution product of two endomorphism matrices: m ∘ (f⊗g) ∘ Δ.
    pub fn convolution(&self, f: &Matrix<K>, g: &Matrix<K>) -> Matrix<K> {
        let n = self.dim();
        let fop = SparseOp::from_matrix(f, vec![n], vec![n]);
        let gop = SparseOp::from_matrix(g, vec![n], vec![n]);
        let mop = self.algebra.mult_op();
        let cop = self.coalgebra.comult_op();
        Matrix::from_cols(
            (0..n)
                .map(|i| {
                    Tensor::basis(vec![n], &[i])
                        .apply(0, &cop)
                        .apply(0, &fop)
                        .apply(1, &gop)
                        .apply(0, &mop)
                        .to_flat_vec()
                })
                .collect(),
        )
    }

    /// The convolution unit uε as a matrix.
    pub fn convolution_unit(&self) -> Matrix<K> {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| {
            self.algebra.unit[i].clone() * self.coalgebra.counit[j].clone()
        })
    }

    /// Solves for the antipode as the convolution inverse of the identity,
    /// through the minimal polynomial of the identity in the convolution
    /// algebra. `None` when the identity is not convolution invertible.
    pub fn solve_antipode(&self) -> Option<Matrix<K>> {
        let n = self.dim();
        let idm = Matrix::identity(n);
        let mut powers: Vec<Matrix<K>> = vec![self.convolution_unit()];
        let mut cur = idm.clone();
        loop {
            // powers[k] = id^{*k}; find the first linear dependency.
            let span = Matrix::from_cols(powers.iter().map(|m| m.entries().to_vec()).collect());
            let target = Matrix::col_vec(cur.entries());
            if let Some(sol) = linalg::solve_linear(&span, &target).expect("one field") {
                // id^{*k} = Σ_{i<k} c_i id^{*i}; invertible iff c_0 ≠ 0.
                let c0 = sol[(0, 0)].clone();
                let c0_inv = c0.inv()?;
                let mut s = powers.last().unwrap().clone();
                for i in 1..powers.len() {
                    s = s.sub(&powers[i - 1].scale(&sol[(i, 0)]));
                }
                // s = id^{*(k-1)} - Σ_{i>=1} c_i id^{*(i-1)}; S = c0^{-1} s.
                let s = s.scale(&c0_inv);
                debug_assert_eq!(self.convolution(&s, &idm), self.convolution_unit());
                debug_assert_eq!(self.convolution(&idm, &s), self.convolution_unit());
                return Some(s);
            }
            powers.push(cur.clone());
            cur = self.convolution(&cur, &idm);
            assert!(
                powers.len() <= n * n + 2,
                "convolution minimal polynomial search overran"
            );
        }
    }

    /// The dual Hopf algebra on the dual basis, via transposition through
    /// the canonical pairing of H* ⊗ H* with (H ⊗ H)*.
    pub fn dual(&self) -> HopfData<K> {
        let n = self.dim();
        let mut mult = vec![Vec::new(); n * n];
        for (k, terms) in self.coalgebra.comult.iter().enumerate() {
            for (i, j, c) in terms {
                mult[i * n + j].push((k, c.clone()));
            }
        }
        let mut comult = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.algebra.entry(i, j) {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        HopfData {
            name: format!("{}*", self.name),
            algebra: AlgebraData {
                dim: n,
                mult,
                unit: self.coalgebra.counit.clone(),
                labels: self
                    .algebra
                    .labels
                    .iter()
                    .map(|l| format!("{l}*"))
                    .collect(),
                unit_laws: UnitLaws::TwoSided,
            },
            coalgebra: CoalgebraData {
                dim: n,
                comult,
                counit: self.algebra.unit.clone(),
                counit_laws: CounitLaws::TwoSided,
            },
            antipode: self.antipode.as_ref().map(|s| s.transpose()),
        }
    }

    /// Tensor product Hopf algebra with flat index `i * dim_other + j`.
    pub fn tensor_with(&self, other: &HopfData<K>) -> HopfData<K> {
        let (na, nb) = (self.dim(), other.dim());
        let n = na * nb;
        let mut mult = vec![Vec::new(); n * n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        let mut terms = Vec::new();
                        for (p, c) in self.algebra.entry(i1, i2) {
                            for (q, d) in other.algebra.entry(j1, j2) {
                                terms.push((p * nb + q, c.clone() * d.clone()));
                            }
                        }
                        mult[(i1 * nb + j1) * n + (i2 * nb + j2)] = terms;
                    }
                }
            }
        }
        let mut unit = vec![K::zero(); n];
        for (i, a) in self.algebra.unit.iter().enumerate() {
            for (j, b) in other.algebra.unit.iter().enumerate() {
                unit[i * nb + j] = a.clone() * b.clone();
            }
        }
        let mut comult = vec![Vec::new(); n];
        let mut counit = vec![K::zero(); n];
        for i in 0..na {
            for j in 0..nb {
                let mut terms = Vec::new();
                for (a1, a2, c) in &self.coalgebra.comult[i] {
                    for (b1, b2, d) in &other.coalgebra.comult[j] {
                        terms.push((a1 * nb + b1, a2 * nb + b2, c.clone() * d.clone()));
                    }
                }
                comult[i * nb + j] = terms;
                counit[i * nb + j] =
                    self.coalgebra.counit[i].clone() * other.coalgebra.counit[j].clone();
            }
        }
        let labels = (0..na)
            .flat_map(|i| {
                (0..nb).map(move |j| {
                    format!("{}⊗{}", self.algebra.labels[i], other.algebra.labels[j])
                })
            })
            .collect();
        let antipode = match (&self.antipode, &other.antipode) {
            (Some(a), Some(b)) => Some(a.kron(b)),
            _ => None,
        };
        HopfData {
            name: format!("{}⊗{}", self.name, other.name),
            algebra: AlgebraData {
                dim: n,
                mult,
                unit,
                labels,
                unit_laws: UnitLaws::TwoSided,
            },
            coalgebra: CoalgebraData {
                dim: n,
                comult,
                counit,
                counit_laws: CounitLaws::TwoSided,
            },
            antipode,
        }
    }

    /// Opposite algebra structure; the antipode becomes S⁻¹.
    pub fn opposite(&self) -> Result<HopfData<K>, MathError> {
        let n = self.dim();
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.algebra.entry(j, i).to_vec();
            }
        }
        let antipode = match &self.antipode {
            None => None,
            Some(s) => Some(linalg::inverse(s).ok_or_else(|| {
                MathError::Structure("antipode is not invertible".into())
            })?),
        };
        Ok(HopfData {
            name: format!("{}^op", self.name),
            algebra: AlgebraData {
                dim: n,
                mult,
                unit: self.algebra.unit.clone(),
                labels: self.algebra.labels.clone(),
                unit_laws: self.algebra.unit_laws,
            },
            coalgebra: self.coalgebra.clone(),
            antipode,
        })
    }

    /// Opposite coalgebra structure; the antipode becomes S⁻¹.
    pub fn coopposite(&self) -> Result<HopfData<K>, MathError> {
        let comult = self
            .coalgebra
            .comult
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(j, k, c)| (*k, *j, c.clone()))
                    .collect()
            })
            .collect();
        let antipode = match &self.antipode {
            None => None,
            Some(s) => Some(linalg::inverse(s).ok_or_else(|| {
                MathError::Structure("antipode is not invertible".into())
            })?),
        };
        Ok(HopfData {
            name: format!("{}^cop", self.name),
            algebra: self.algebra.clone(),
            coalgebra: CoalgebraData {
                dim: self.dim(),
                comult,
                counit: self.coalgebra.counit.clone(),
                counit_laws: self.coalgebra.counit_laws,
            },
            antipode,
        })
    }

    /// All grouplike elements, as characters of the commutative quotient of
    /// the dual algebra, each verified against Δg = g⊗g and ε(g) = 1.
    pub fn grouplikes(&self) -> Result<Vec<Vec<K>>, MathError> {
        let field = self.field_or_err()?;
        let n = self.dim();
        let dual = self.dual();
        let da = &dual.algebra;
        // Commutator ideal of the dual algebra.
        let mut gens: Vec<Vec<K>> = Vec::new();
        for i in 0..n {
            for j in 0..i {
                let ei = self.basis_vec(i);
                let ej = self.basis_vec(j);
                let mut c = da.mult_vec(&ei, &ej);
                let d = da.mult_vec(&ej, &ei);
                for (x, y) in c.iter_mut().zip(d) {
                    let t = std::mem::replace(x, K::zero());
                    *x = t - y;
                }
                if c.iter().any(|x| !x.is_zero()) {
                    gens.push(c);
                }
            }
        }
        let mut ideal: Matrix<K> = if gens.is_empty() {
            Matrix::zero(n, 0)
        } else {
            linalg::image_basis(&Matrix::from_cols(gens)).0
        };
        loop {
            let mut cols: Vec<Vec<K>> = (0..ideal.cols).map(|j| ideal.col(j)).collect();
            let start = cols.len();
            for j in 0..start {
                for k in 0..n {
                    let ek = self.basis_vec(k);
                    cols.push(da.mult_vec(&ek, &cols[j]));
                    cols.push(da.mult_vec(&cols[j], &ek));
                }
            }
            let closed = linalg::image_basis(&Matrix::from_cols(cols)).0;
            if closed.cols == ideal.cols {
                break;
            }
            ideal = closed;
        }
        // Complete the ideal basis to a basis of the dual with standard vectors.
        let d = ideal.cols;
        let m = n - d;
        let mut combined = ideal.clone();
        let mut selected = Vec::new();
        for k in 0..n {
            if combined.cols == n {
                break;
            }
            let ek = Matrix::col_vec(&self.basis_vec(k));
            let trial = combined.hstack(&ek);
            if linalg::rank(&trial) > combined.cols {
                combined = trial;
                selected.push(k);
            }
        }
        assert_eq!(combined.cols, n, "ideal completion failed");
        let inv = linalg::inverse(&combined).expect("basis change invertible");
        // Quotient coordinates are the last m rows of the inverse.
        let q = Matrix::from_fn(m, n, |i, j| inv[(d + i, j)].clone());
        // Multiplication operators of the quotient in its chosen basis.
        let lift = |j: usize| self.basis_vec(selected[j]);
        let ops: Vec<Matrix<K>> = (0..m)
            .map(|i| {
                Matrix::from_cols(
                    (0..m)
                        .map(|k| q.apply(&da.mult_vec(&lift(i), &lift(k))))
                        .collect(),
                )
            })
            .collect();
        let chars = linalg::minpoly_factor_characters(&ops, &field)?;
        let qt = q.transpose();
        let mut out = Vec::new();
        for lam in chars {
            let g = qt.apply(&lam);
            // Exact grouplike verification.
            let dg = self.coalgebra.comult_of(&g);
            let mut gg = Tensor::zero(vec![n, n]);
            for (i, a) in g.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in g.iter().enumerate() {
                    if !b.is_zero() {
                        gg.add_term(vec![i, j], a.clone() * b.clone());
                    }
                }
            }
            if dg == gg && self.coalgebra.counit_of(&g).is_one() {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Order of the antipode: smallest k ≥ 1 with S^k = id, searched up to 16.
    pub fn antipode_order(&self) -> Option<u32> {
        let s = self.antipode.as_ref()?;
        let idm = Matrix::identity(self.dim());
        let mut cur = s.clone();
        for k in 1..=16u32 {
            if cur == idm {
                return Some(k);
            }
            cur = cur.mul(s);
        }
        None
    }

    /// Cheap isomorphism-invariant summary. Matching fingerprints are
    /// necessary but not sufficient for isomorphism.
    pub fn fingerprint(&self) -> Result<Fingerprint<K>, MathError> {
        let li = crate::structure::left_integrals(self);
        let semisimple = crate::structure::is_semisimple(self)?;
        let s = self
            .antipode
            .as_ref()
            .ok_or_else(|| MathError::Precondition("fingerprint requires an antipode".into()))?;
        Ok(Fingerprint {
            dim: self.dim(),
            commutative: self.algebra.is_commutative(),
            cocommutative: self.coalgebra.is_cocommutative(),
            semisimple,
            left_integral_dim: li.cols,
            grouplike_count: self.grouplikes()?.len(),
            antipode_order: self.antipode_order(),
            trace_s: s.trace(),
            trace_s2: s.mul(s).trace(),
        })
    }
}

/// Isomorphism-invariant summary of a Hopf algebra over its field.
#[derive(Clone, Debug, PartialEq)]
pub struct Fingerprint<K> {
    pub dim: usize,
    pub commutative: bool,
    pub cocommutative: bool,
    pub semisimple: bool,
    pub left_integral_dim: usize,
    pub grouplike_count: usize,
    pub antipode_order: Option<u32>,
    pub trace_s: K,
    pub trace_s2: K,
}

impl<K: Scalar> Fingerprint<K> {
    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("dim: {}", self.dim),
            format!("commutative: {}", self.commutative),
            format!("cocommutative: {}", self.cocommutative),
            format!("semisimple: {}", self.semisimple),
            format!("left_integral_dim: {}", self.left_integral_dim),
            format!("grouplike_count: {}", self.grouplike_count),
            format!(
                "antipode_order: {}",
                self.antipode_order
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "none (>16)".into())
            ),
            format!("trace_S: {}", self.trace_s),
            format!("trace_S2: {}", self.trace_s2),
        ]
    }
}

/// Component-by-component fingerprint comparison. A passing report means the
/// two algebras are not distinguished by these invariants; it does not prove
/// them isomorphic.
pub fn fingerprint_compare<K: Scalar>(a: &Fingerprint<K>, b: &Fingerprint<K>) -> Report {
    let mut rep = Report::new("fingerprint-compare");
    let mut cmp = |law: &str, ok: bool, l: String, r: String| {
        rep.push(law, ok, Some(format!("{l} vs {r}")));
    };
    cmp("fingerprint.dim", a.dim == b.dim, a.dim.to_string(), b.dim.to_string());
    cmp(
        "fingerprint.commutative",
        a.commutative == b.commutative,
        a.commutative.to_string(),
        b.commutative.to_string(),
    );
    cmp(
        "fingerprint.cocommutative",
        a.cocommutative == b.cocommutative,
        a.cocommutative.to_string(),
        b.cocommutative.to_string(),
    );
    cmp(
        "fingerprint.semisimple",
        a.semisimple == b.semisimple,
        a.semisimple.to_string(),
        b.semisimple.to_string(),
    );
    cmp(
        "fingerprint.left_integral_dim",
        a.left_integral_dim == b.left_integral_dim,
        a.left_integral_dim.to_string(),
        b.left_integral_dim.to_string(),
    );
    cmp(
        "fingerprint.grouplike_count",
        a.grouplike_count == b.grouplike_count,
        a.grouplike_count.to_string(),
        b.grouplike_count.to_string(),
    );
    cmp(
        "fingerprint.antipode_order",
        a.antipode_order == b.antipode_order,
        format!("{:?}", a.antipode_order),
        format!("{:?}", b.antipode_order),
    );
    cmp(
        "fingerprint.trace_S",
        a.trace_s == b.trace_s,
        format!("{}", a.trace_s),
        format!("{}", b.trace_s),
    );
    cmp(
        "fingerprint.trace_S2",
        a.trace_s2 == b.trace_s2,
        format!("{}", a.trace_s2),
        format!("{}", b.trace_s2),
    );
    rep
}

/// Builds sparse multiplication data from a dense product function.
pub fn mult_table<K: Scalar>(
    dim: usize,
    mut f: impl FnMut(usize, usize) -> Vec<(usize, K)>,
) -> Vec<Vec<(usize, K)>> {
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            mult.push(f(i, j));
        }
    }
    mult
}
