//! Sparse tensors with named slots and sparse structure maps.
//!
//! Axiom checking composes structure maps (multiplication, comultiplication,
//! (co)units, (co)actions, antipodes) slot by slot on basis tensors, so each
//! side of a law is evaluated without ever materializing large dense
//! matrices. A [`Tensor`] is a sparse element of a tensor product of based
//! spaces; a [`SparseOp`] consumes a contiguous block of slots and splices in
//! its output slots.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A sparse linear map between tensor products of based spaces, stored by
/// column. Flat indices are mixed-radix with the leftmost factor major.
#[derive(Clone, Debug)]
pub struct SparseOp<K> {
    pub in_dims: Vec<usize>,
    pub out_dims: Vec<usize>,
    /// `cols[flat_in]` lists `(flat_out, coeff)` pairs.
    pub cols: Vec<Vec<(usize, K)>>,
}

pub fn flat_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

pub fn to_flat(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    let mut f = 0;
    for (d, i) in dims.iter().zip(idx) {
        debug_assert!(i < d);
        f = f * d + i;
    }
    f
}

pub fn from_flat(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

impl<K: Scalar> SparseOp<K> {
    pub fn new(in_dims: Vec<usize>, out_dims: Vec<usize>, cols: Vec<Vec<(usize, K)>>) -> Self {
        assert_eq!(cols.len(), flat_dim(&in_dims));
        SparseOp {
            in_dims,
            out_dims,
            cols,
        }
    }

    /// From a dense matrix whose column index runs over `in_dims` and row
    /// index over `out_dims`.
    pub fn from_matrix(m: &Matrix<K>, in_dims: Vec<usize>, out_dims: Vec<usize>) -> Self {
        assert_eq!(m.cols, flat_dim(&in_dims));
        assert_eq!(m.rows, flat_dim(&out_dims));
        let cols = (0..m.cols)
            .map(|j| {
                (0..m.rows)
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i, m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        SparseOp {
            in_dims,
            out_dims,
            cols,
        }
    }

    /// A zero-input op inserting a fixed element (e.g. a unit).
    pub fn insert(v: &[K]) -> Self {
        let col = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SparseOp {
            in_dims: vec![],
            out_dims: vec![v.len()],
            cols: vec![col],
        }
    }

    /// A functional (one input slot, scalar output), e.g. a counit.
    pub fn functional(v: &[K]) -> Self {
        let cols = v
            .iter()
            .map(|c| {
                if c.is_zero() {
                    vec![]
                } else {
                    vec![(0, c.clone())]
                }
            })
            .collect();
        SparseOp {
            in_dims: vec![v.len()],
            out_dims: vec![],
            cols,
        }
    }

    pub fn to_matrix(&self) -> Matrix<K> {
        let mut m = Matrix::zero(flat_dim(&self.out_dims), flat_dim(&self.in_dims));
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                let t = std::mem::replace(&mut m[(*i, j)], K::zero());
                m[(*i, j)] = t + c.clone();
            }
        }
        m
    }
}

/// A sparse element of a tensor product of based spaces.
#[derive(Clone, Debug)]
pub struct Tensor<K> {
    pub dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, K>,
}

impl<K: Scalar> Tensor<K> {
    pub fn zero(dims: Vec<usize>) -> Self {
        Tensor {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(dims: Vec<usize>, idx: &[usize]) -> Self {
        assert_eq!(dims.len(), idx.len());
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), K::one());
        Tensor { dims, terms }
    }

    /// A one-slot tensor from dense coordinates.
    pub fn from_vec(v: &[K]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![i], c.clone());
            }
        }
        Tensor {
            dims: vec![v.len()],
            terms,
        }
    }

    /// A multi-slot tensor from a flat dense vector.
    pub fn from_flat_vec(dims: Vec<usize>, v: &[K]) -> Self {
        assert_eq!(v.len(), flat_dim(&dims));
        let mut terms = BTreeMap::new();
        for (f, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(from_flat(&dims, f), c.clone());
            }
        }
        Tensor { dims, terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: K) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = std::mem::replace(e.get_mut(), K::zero()) + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (idx, c) in other.terms.iter() {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-K::one()))
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Tensor::zero(self.dims.clone());
        }
        let mut out = Tensor::zero(self.dims.clone());
        for (idx, c) in self.terms.iter() {
            out.add_term(idx.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> K {
        self.terms.get(idx).cloned().unwrap_or_else(K::zero)
    }

    /// Applies `op` to the contiguous slots starting at `slot`, splicing in
    /// the op's output slots there.
    pub fn apply(&self, slot: usize, op: &SparseOp<K>) -> Self {
        let a = op.in_dims.len();
        assert!(slot + a <= self.dims.len(), "slot range out of bounds");
        assert_eq!(
            &self.dims[slot..slot + a],
            op.in_dims.as_slice(),
            "slot dimensions do not match the op's input"
        );
        let mut dims = Vec::with_capacity(self.dims.len() - a + op.out_dims.len());
        dims.extend_from_slice(&self.dims[..slot]);
        dims.extend_from_slice(&op.out_dims);
        dims.extend_from_slice(&self.dims[slot + a..]);
        let mut out = Tensor::zero(dims);
        for (idx, c) in self.terms.iter() {
            let flat_in = to_flat(&op.in_dims, &idx[slot..slot + a]);
            for (flat_out, v) in &op.cols[flat_in] {
                let mid = from_flat(&op.out_dims, *flat_out);
                let mut nidx = Vec::with_capacity(out.dims.len());
                nidx.extend_from_slice(&idx[..slot]);
                nidx.extend_from_slice(&mid);
                nidx.extend_from_slice(&idx[slot + a..]);
                out.add_term(nidx, c.clone() * v.clone());
            }
        }
        out
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of the input.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dims.len());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zero(dims);
        for (idx, c) in self.terms.iter() {
            let nidx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            out.add_term(nidx, c.clone());
        }
        out
    }

    /// Swaps two slots.
    pub fn swap(&self, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.dims.len()).collect();
        perm.swap(a, b);
        self.permute(&perm)
    }

    /// Dense flat coordinates.
    pub fn to_flat_vec(&self) -> Vec<K> {
        let mut v = vec![K::zero(); flat_dim(&self.dims)];
        for (idx, c) in self.terms.iter() {
            v[to_flat(&self.dims, idx)] = c.clone();
        }
        v
    }

    /// The scalar value of a zero-slot tensor.
    pub fn scalar_value(&self) -> K {
        assert!(self.dims.is_empty(), "not a scalar tensor");
        self.coeff(&[])
    }

    /// A short human-readable witness like `3 @ (1,0,2)` for the
    /// lexicographically first term of the difference from another tensor.
    pub fn first_diff_witness(&self, other: &Self) -> Option<String> {
        let d = self.sub(other);
        d.terms.iter().next().map(|(idx, c)| {
            format!(
                "coefficient {c} at index ({})",
                idx.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
    }
}

impl<K: Scalar> PartialEq for Tensor<K> {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.sub(other).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn apply_splices_slots() {
        // "comultiplication" on a 2-dim space: e0 -> e0⊗e0, e1 -> e0⊗e1 + e1⊗e0.
        let op = SparseOp::new(
            vec![2],
            vec![2, 2],
            vec![vec![(0, q(1))], vec![(1, q(1)), (2, q(1))]],
        );
        let t = Tensor::basis(vec![3, 2], &[2, 1]);
        let r = t.apply(1, &op);
        assert_eq!(r.dims, vec![3, 2, 2]);
        assert_eq!(r.coeff(&[2, 0, 1]), q(1));
        assert_eq!(r.coeff(&[2, 1, 0]), q(1));
        assert!(r.coeff(&[2, 1, 1]).is_zero());
    }

    #[test]
    fn insert_and_functional() {
        let unit = SparseOp::insert(&[q(1), q(0)]);
        let t = Tensor::basis(vec![2], &[1]).apply(0, &SparseOp::functional(&[q(3), q(5)]));
        assert_eq!(t.scalar_value(), q(5));
        let u = Tensor::basis(vec![2], &[1]);
        let w = u.apply(0, &unit);
        // insert consumed zero slots at 0: dims now [2,2], value e0⊗e1
        assert_eq!(w.dims, vec![2, 2]);
        assert_eq!(w.coeff(&[0, 1]), q(1));
    }

    #[test]
    fn permute_roundtrip() {
        let t = Tensor::<Rat>::basis(vec![2, 3, 4], &[1, 2, 3]);
        let p = t.permute(&[2, 0, 1]);
        assert_eq!(p.dims, vec![4, 2, 3]);
        assert_eq!(p.coeff(&[3, 1, 2]), q(1));
        assert_eq!(p.permute(&[1, 2, 0]), t);
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = Tensor::<Rat>::basis(vec![2], &[0]);
        let b = Tensor::<Rat>::basis(vec![2], &[0]);
        assert!(a.sub(&b).is_zero());
        assert_eq!(a, b);
    }
}
