//! Partial actions and partial coactions, in both orientations, together
//! with the law checkers and the λ-/z-shaped constructors.
//!
//! Conventions. A (left) partial action of a Hopf algebra H on a unital
//! algebra L is a linear map H⊗L → L, written h⇀x, stored as a matrix with
//! `nl` rows and `nh·nl` columns; column `h·nl + x` holds h⇀x for basis
//! elements h, x. A (right) partial coaction of a Hopf algebra L on a
//! coalgebra C is a linear map ρ: C → C⊗L, c ↦ c⁰⊗c¹, stored as a matrix
//! with `nc·nl` rows (row `c·nl + v`) and `nc` columns.
//!
//! The mirrored variants act on the other side: a right partial action
//! B⊗A → B, written b↼a (matrix rows `nb`, columns `b·na + a`), and a left
//! partial coaction ρ': A → B⊗A, u ↦ u⁻¹⊗u⁰ (matrix rows `b·na + a`,
//! columns `na`). Transposing a straight structure through the canonical
//! pairing with the dual bases yields a mirrored structure and vice versa,
//! and each law corresponds across the transposition.

use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{SparseOp, Tensor};
use crate::MathError;

/// Left partial action of a Hopf algebra (dimension `nh`) on a unital
/// algebra (dimension `nl`).
#[derive(Clone, Debug)]
pub struct PartialAction<K> {
    pub nh: usize,
    pub nl: usize,
    /// Rows `nl`, columns `nh·nl`; column `h·nl + x` is h⇀x.
    pub act: Matrix<K>,
}

impl<K: Scalar> PartialAction<K> {
    pub fn new(nh: usize, nl: usize, act: Matrix<K>) -> Result<Self, MathError> {
        if act.rows != nl || act.cols != nh * nl {
            return Err(MathError::DimMismatch(format!(
                "action matrix is {}x{}, expected {}x{}",
                act.rows,
                act.cols,
                nl,
                nh * nl
            )));
        }
        Ok(PartialAction { nh, nl, act })
    }

    /// The action as a two-slot tensor operator [H, L] → [L].
    pub fn op(&self) -> SparseOp<K> {
        SparseOp::from_matrix(&self.act, vec![self.nh, self.nl], vec![self.nl])
    }

    /// h⇀x for vectors h, x.
    pub fn apply_vec(&self, h: &[K], x: &[K]) -> Vec<K> {
        Tensor::from_vec(x)
            .apply(0, &SparseOp::insert(h))
            .apply(0, &self.op())
            .to_flat_vec()
    }

    /// The transpose through the dual bases: a left partial coaction of H*
    /// on the coalgebra L*, ρ'(u) = u⁻¹⊗u⁰.
    pub fn transpose_to_left_coaction(&self) -> LeftPartialCoaction<K> {
        LeftPartialCoaction {
            na: self.nl,
            nb: self.nh,
            coact: self.act.transpose(),
        }
    }
}

/// Right partial coaction of a Hopf algebra (dimension `nl`) on a coalgebra
/// (dimension `nc`): ρ(c) = c⁰⊗c¹ with c⁰ in the coalgebra, c¹ in the Hopf
/// algebra.
#[derive(Clone, Debug)]
pub struct PartialCoaction<K> {
    pub nc: usize,
    pub nl: usize,
    /// Rows `nc·nl` (row `c·nl + v`), columns `nc`.
    pub coact: Matrix<K>,
}

impl<K: Scalar> PartialCoaction<K> {
    pub fn new(nc: usize, nl: usize, coact: Matrix<K>) -> Result<Self, MathError> {
        if coact.rows != nc * nl || coact.cols != nc {
            return Err(MathError::DimMismatch(format!(
                "coaction matrix is {}x{}, expected {}x{}",
                coact.rows,
                coact.cols,
                nc * nl,
                nc
            )));
        }
        Ok(PartialCoaction { nc, nl, coact })
    }

    /// The coaction as a tensor operator [C] → [C, L].
    pub fn op(&self) -> SparseOp<K> {
        SparseOp::from_matrix(&self.coact, vec![self.nc], vec![self.nc, self.nl])
    }

    /// The transpose through the dual bases: a right partial action of L*
    /// on the algebra C*.
    pub fn transpose_to_right_action(&self) -> RightPartialAction<K> {
        RightPartialAction {
            na: self.nl,
            nb: self.nc,
            act: self.coact.transpose(),
        }
    }
}

/// Right partial action of a Hopf algebra A (dimension `na`) on a unital
/// algebra B (dimension `nb`), written b↼a.
#[derive(Clone, Debug)]
pub struct RightPartialAction<K> {
    pub na: usize,
    pub nb: usize,
    /// Rows `nb`, columns `nb·na`; column `b·na + a` is b↼a.
    pub act: Matrix<K>,
}

impl<K: Scalar> RightPartialAction<K> {
    /// The action as a two-slot tensor operator [B, A] → [B].
    pub fn op(&self) -> SparseOp<K> {
        SparseOp::from_matrix(&self.act, vec![self.nb, self.na], vec![self.nb])
    }

    pub fn transpose_to_coaction(&self) -> PartialCoaction<K> {
        PartialCoaction {
            nc: self.nb,
            nl: self.na,
            coact: self.act.transpose(),
        }
    }
}

/// Left partial coaction of a Hopf algebra B (dimension `nb`) on a
/// coalgebra A (dimension `na`): ρ'(u) = u⁻¹⊗u⁰.
#[derive(Clone, Debug)]
pub struct LeftPartialCoaction<K> {
    pub na: usize,
    pub nb: usize,
    /// Rows `nb·na` (row `b·na + a`), columns `na`.
    pub coact: Matrix<K>,
}

impl<K: Scalar> LeftPartialCoaction<K> {
    /// The coaction as a tensor operator [A] → [B, A].
    pub fn op(&self) -> SparseOp<K> {
        SparseOp::from_matrix(&self.coact, vec![self.na], vec![self.nb, self.na])
    }

    pub fn transpose_to_action(&self) -> PartialAction<K> {
        PartialAction {
            nh: self.nb,
            nl: self.na,
            act: self.coact.transpose(),
        }
    }
}

fn witness(parts: &[(&str, &str)], diff: &str) -> String {
    let ctx: Vec<String> = parts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}: {}", ctx.join(", "), diff)
}

/// Checks the four partial-action laws of h⇀x:
/// (i) 1⇀x = x; (ii) h⇀(xy) = (h₁⇀x)(h₂⇀y);
/// (iii) h⇀(g⇀x) = (h₁⇀1)((h₂g)⇀x); (iv) h⇀(g⇀x) = ((h₁g)⇀x)(h₂⇀1).
pub fn check_partial_action<K: Scalar>(
    h: &HopfData<K>,
    l: &HopfData<K>,
    action: &PartialAction<K>,
) -> Result<Report, MathError> {
    let (nh, nl) = (h.dim(), l.dim());
    if action.nh != nh || action.nl != nl {
        return Err(MathError::DimMismatch("action does not fit the pair".into()));
    }
    crate::scalar::fields_agree::<K>(&[h.field(), l.field()])?;
    let mut rep = Report::new("partial-action");
    let act = action.op();
    let mult_l = l.algebra.mult_op();
    let mult_h = h.algebra.mult_op();
    let com_h = h.coalgebra.comult_op();
    let ins_unit_h = SparseOp::insert(&h.algebra.unit);
    let ins_unit_l = SparseOp::insert(&l.algebra.unit);

    // (i) unit acts as the identity.
    let mut fail = None;
    'uo: for x in 0..nl {
        let lhs = Tensor::basis(vec![nl], &[x])
            .apply(0, &ins_unit_h)
            .apply(0, &act);
        let rhs = Tensor::basis(vec![nl], &[x]);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("x", l.algebra.label(x))], &d));
            break 'uo;
        }
    }
    rep.push("paction.unit", fail.is_none(), fail);

    // (ii) multiplicativity.
    let mut fail = None;
    'mo: for i in 0..nh {
        for x in 0..nl {
            for y in 0..nl {
                let base = Tensor::basis(vec![nh, nl, nl], &[i, x, y]);
                let lhs = base.apply(1, &mult_l).apply(0, &act);
                let rhs = base
                    .apply(0, &com_h)
                    .permute(&[0, 2, 1, 3])
                    .apply(0, &act)
                    .apply(1, &act)
                    .apply(0, &mult_l);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[
                            ("h", h.algebra.label(i)),
                            ("x", l.algebra.label(x)),
                            ("y", l.algebra.label(y)),
                        ],
                        &d,
                    ));
                    break 'mo;
                }
            }
        }
    }
    rep.push("paction.mult", fail.is_none(), fail);

    // (iii) and (iv): composition in its two partial forms.
    let mut fail3 = None;
    let mut fail4 = None;
    'co: for i in 0..nh {
        for j in 0..nh {
            for x in 0..nl {
                let base = Tensor::basis(vec![nh, nh, nl], &[i, j, x]);
                let lhs = base.apply(1, &act).apply(0, &act);
                let ctx = [
                    ("h", h.algebra.label(i)),
                    ("g", h.algebra.label(j)),
                    ("x", l.algebra.label(x)),
                ];
                if fail3.is_none() {
                    let rhs = base
                        .apply(0, &com_h)
                        .apply(1, &mult_h)
                        .apply(1, &act)
                        .apply(1, &ins_unit_l)
                        .apply(0, &act)
                        .apply(0, &mult_l);
                    if let Some(d) = lhs.first_diff_witness(&rhs) {
                        fail3 = Some(witness(&ctx, &d));
                    }
                }
                if fail4.is_none() {
                    let rhs = base
                        .apply(0, &com_h)
                        .permute(&[0, 2, 1, 3])
                        .apply(0, &mult_h)
                        .permute(&[0, 2, 1])
                        .apply(0, &act)
                        .apply(2, &ins_unit_l)
                        .apply(1, &act)
                        .apply(0, &mult_l);
                    if let Some(d) = lhs.first_diff_witness(&rhs) {
                        fail4 = Some(witness(&ctx, &d));
                    }
                }
                if fail3.is_some() && fail4.is_some() {
                    break 'co;
                }
            }
        }
    }
    rep.push("paction.comp", fail3.is_none(), fail3);
    rep.push("paction.comp.sym", fail4.is_none(), fail4);
    Ok(rep)
}

/// Whether the partial action is global: h⇀1 = ε(h)·1 for every h.
pub fn action_is_global<K: Scalar>(
    h: &HopfData<K>,
    l: &HopfData<K>,
    action: &PartialAction<K>,
) -> bool {
    let act = action.op();
    let ins_unit_l = SparseOp::insert(&l.algebra.unit);
    (0..h.dim()).all(|i| {
        let lhs = Tensor::basis(vec![h.dim()], &[i])
            .apply(1, &ins_unit_l)
            .apply(0, &act);
        let rhs = Tensor::from_vec(&l.algebra.unit).scale(&h.coalgebra.counit[i]);
        lhs == rhs
    })
}

/// Checks the four partial-coaction laws of ρ(c) = c⁰⊗c¹ with c¹ in the
/// Hopf algebra L:
/// (i) (id⊗ε)ρ = id; (ii) (Δ⊗id)ρ(c) = c₁⁰⊗c₂⁰⊗c₁¹c₂¹;
/// (iii) (ρ⊗id)ρ(c) = ε(c₂⁰)·c₁⁰⊗(c₁¹)₁⊗(c₁¹)₂c₂¹;
/// (iv) (ρ⊗id)ρ(c) = ε(c₁⁰)·c₂⁰⊗(c₂¹)₁⊗c₁¹(c₂¹)₂.
pub fn check_partial_coaction<K: Scalar>(
    c: &HopfData<K>,
    l: &HopfData<K>,
    coaction: &PartialCoaction<K>,
) -> Result<Report, MathError> {
    let (nc, nl) = (c.dim(), l.dim());
    if coaction.nc != nc || coaction.nl != nl {
        return Err(MathError::DimMismatch("coaction does not fit the pair".into()));
    }
    crate::scalar::fields_agree::<K>(&[c.field(), l.field()])?;
    let mut rep = Report::new("partial-coaction");
    let rho = coaction.op();
    let com_c = c.coalgebra.comult_op();
    let mult_l = l.algebra.mult_op();
    let com_l = l.coalgebra.comult_op();
    let eps_c = c.coalgebra.counit_op();
    let eps_l = l.coalgebra.counit_op();

    // (i) counit law.
    let mut fail = None;
    for i in 0..nc {
        let lhs = Tensor::basis(vec![nc], &[i]).apply(0, &rho).apply(1, &eps_l);
        let rhs = Tensor::basis(vec![nc], &[i]);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("c", c.algebra.label(i))], &d));
            break;
        }
    }
    rep.push("pcoaction.counit", fail.is_none(), fail);

    // (ii) comultiplicativity.
    let mut fail = None;
    for i in 0..nc {
        let base = Tensor::basis(vec![nc], &[i]);
        let lhs = base.apply(0, &rho).apply(0, &com_c);
        let rhs = base
            .apply(0, &com_c)
            .apply(0, &rho)
            .apply(2, &rho)
            .permute(&[0, 2, 1, 3])
            .apply(2, &mult_l);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("c", c.algebra.label(i))], &d));
            break;
        }
    }
    rep.push("pcoaction.comult", fail.is_none(), fail);

    // (iii) and (iv): coassociativity in its two partial forms.
    let mut fail3 = None;
    let mut fail4 = None;
    for i in 0..nc {
        let base = Tensor::basis(vec![nc], &[i]);
        let lhs = base.apply(0, &rho).apply(0, &rho);
        let split = base.apply(0, &com_c).apply(0, &rho).apply(2, &rho);
        // split slots: [c₁⁰, c₁¹, c₂⁰, c₂¹]
        let ctx = [("c", c.algebra.label(i))];
        if fail3.is_none() {
            let rhs = split
                .apply(2, &eps_c)
                .apply(1, &com_l)
                .apply(2, &mult_l);
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail3 = Some(witness(&ctx, &d));
            }
        }
        if fail4.is_none() {
            let rhs = split
                .apply(0, &eps_c)
                .apply(2, &com_l)
                .permute(&[1, 2, 0, 3])
                .apply(2, &mult_l);
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail4 = Some(witness(&ctx, &d));
            }
        }
    }
    rep.push("pcoaction.comp", fail3.is_none(), fail3);
    rep.push("pcoaction.comp.sym", fail4.is_none(), fail4);
    Ok(rep)
}

/// Whether the partial coaction is global: ε(c⁰)c¹ = ε(c)·1 for every c.
pub fn coaction_is_global<K: Scalar>(
    c: &HopfData<K>,
    l: &HopfData<K>,
    coaction: &PartialCoaction<K>,
) -> bool {
    let rho = coaction.op();
    let eps_c = c.coalgebra.counit_op();
    (0..c.dim()).all(|i| {
        let lhs = Tensor::basis(vec![c.dim()], &[i]).apply(0, &rho).apply(0, &eps_c);
        let rhs = Tensor::from_vec(&l.algebra.unit).scale(&c.coalgebra.counit[i]);
        lhs == rhs
    })
}

/// The action h⇀x = λ(h)·x induced by a functional λ on H (no validity
/// check; see [`check_lambda`]).
pub fn action_from_lambda<K: Scalar>(lambda: &[K], nl: usize) -> PartialAction<K> {
    let nh = lambda.len();
    let mut act = Matrix::zero(nl, nh * nl);
    for h in 0..nh {
        for x in 0..nl {
            act[(x, h * nl + x)] = lambda[h].clone();
        }
    }
    PartialAction { nh, nl, act }
}

/// Validity of λ for [`action_from_lambda`]: λ(1) = 1 and
/// λ(h)λ(g) = λ(h₁)λ(h₂g) for all h, g.
pub fn check_lambda<K: Scalar>(h: &HopfData<K>, lambda: &[K]) -> Report {
    let mut rep = Report::new("lambda");
    let nh = h.dim();
    assert_eq!(lambda.len(), nh);
    let lam_of = |v: &[K]| -> K {
        v.iter()
            .zip(lambda)
            .fold(K::zero(), |s, (c, l)| s + c.clone() * l.clone())
    };
    let unit_val = lam_of(&h.algebra.unit);
    rep.push(
        "lambda.unit",
        unit_val.is_one(),
        Some(format!("λ(1) = {unit_val}")),
    );
    let lam_op = SparseOp::functional(lambda);
    let mult_h = h.algebra.mult_op();
    let com_h = h.coalgebra.comult_op();
    let mut fail = None;
    'outer: for i in 0..nh {
        for j in 0..nh {
            let lhs = lambda[i].clone() * lambda[j].clone();
            let rhs = Tensor::basis(vec![nh, nh], &[i, j])
                .apply(0, &com_h)
                .apply(0, &lam_op)
                .apply(0, &mult_h)
                .apply(0, &lam_op)
                .scalar_value();
            if lhs != rhs {
                fail = Some(witness(
                    &[("h", h.algebra.label(i)), ("g", h.algebra.label(j))],
                    &format!("λ(h)λ(g) = {lhs} but λ(h₁)λ(h₂g) = {rhs}"),
                ));
                break 'outer;
            }
        }
    }
    rep.push("lambda.product", fail.is_none(), fail);
    rep
}

/// The coaction ρ(c) = c⊗z induced by an element z of L (no validity
/// check; see [`check_z`]).
pub fn coaction_from_z<K: Scalar>(z: &[K], nc: usize) -> PartialCoaction<K> {
    let nl = z.len();
    let mut coact = Matrix::zero(nc * nl, nc);
    for c in 0..nc {
        for v in 0..nl {
            coact[(c * nl + v, c)] = z[v].clone();
        }
    }
    PartialCoaction { nc, nl, coact }
}

/// Validity of z for [`coaction_from_z`]: ε(z) = 1 and z⊗z = Δ(z)(1⊗z).
/// These force z² = z.
pub fn check_z<K: Scalar>(l: &HopfData<K>, z: &[K]) -> Report {
    let mut rep = Report::new("z");
    let nl = l.dim();
    assert_eq!(z.len(), nl);
    let eps_val = l.coalgebra.counit_of(z);
    rep.push(
        "z.counit",
        eps_val.is_one(),
        Some(format!("ε(z) = {eps_val}")),
    );
    let zt = Tensor::from_vec(z);
    let mut zz = Tensor::zero(vec![nl, nl]);
    for (i, ci) in zt.terms() {
        for (j, cj) in zt.terms() {
            zz.add_term(vec![i[0], j[0]], ci.clone() * cj.clone());
        }
    }
    let mult_l = l.algebra.mult_op();
    let rhs = zt
        .apply(0, &l.coalgebra.comult_op())
        .apply(2, &SparseOp::insert(z))
        .apply(1, &mult_l);
    let ok = zz == rhs;
    let wit = zz.first_diff_witness(&rhs).map(|d| format!("z⊗z - Δ(z)(1⊗z) has {d}"));
    rep.push("z.comult", ok, wit);
    rep
}

/// Checks the mirrored partial-action laws of b↼a:
/// (i) b↼1 = b; (ii) (bb')↼u = (b↼u₁)(b'↼u₂);
/// (iii) (b↼u)↼v = (b↼uv₁)(1↼v₂); (iv) (b↼u)↼v = (1↼v₁)(b↼uv₂).
pub fn check_right_partial_action<K: Scalar>(
    a: &HopfData<K>,
    b: &HopfData<K>,
    action: &RightPartialAction<K>,
) -> Result<Report, MathError> {
    let (na, nb) = (a.dim(), b.dim());
    if action.na != na || action.nb != nb {
        return Err(MathError::DimMismatch("action does not fit the pair".into()));
    }
    crate::scalar::fields_agree::<K>(&[a.field(), b.field()])?;
    let mut rep = Report::new("right-partial-action");
    let act = action.op();
    let mult_b = b.algebra.mult_op();
    let mult_a = a.algebra.mult_op();
    let com_a = a.coalgebra.comult_op();
    let ins_unit_a = SparseOp::insert(&a.algebra.unit);
    let ins_unit_b = SparseOp::insert(&b.algebra.unit);

    // (i)
    let mut fail = None;
    for x in 0..nb {
        let lhs = Tensor::basis(vec![nb], &[x]).apply(1, &ins_unit_a).apply(0, &act);
        let rhs = Tensor::basis(vec![nb], &[x]);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("b", b.algebra.label(x))], &d));
            break;
        }
    }
    rep.push("rpaction.unit", fail.is_none(), fail);

    // (ii)
    let mut fail = None;
    'mo: for x in 0..nb {
        for y in 0..nb {
            for u in 0..na {
                let base = Tensor::basis(vec![nb, nb, na], &[x, y, u]);
                let lhs = base.apply(0, &mult_b).apply(0, &act);
                let rhs = base
                    .apply(2, &com_a)
                    .permute(&[0, 2, 1, 3])
                    .apply(0, &act)
                    .apply(1, &act)
                    .apply(0, &mult_b);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[
                            ("b", b.algebra.label(x)),
                            ("b'", b.algebra.label(y)),
                            ("u", a.algebra.label(u)),
                        ],
                        &d,
                    ));
                    break 'mo;
                }
            }
        }
    }
    rep.push("rpaction.mult", fail.is_none(), fail);

    // (iii) and (iv)
    let mut fail3 = None;
    let mut fail4 = None;
    'co: for x in 0..nb {
        for u in 0..na {
            for v in 0..na {
                let base = Tensor::basis(vec![nb, na, na], &[x, u, v]);
                let lhs = base.apply(0, &act).apply(0, &act);
                let ctx = [
                    ("b", b.algebra.label(x)),
                    ("u", a.algebra.label(u)),
                    ("v", a.algebra.label(v)),
                ];
                if fail3.is_none() {
                    // (b↼uv₁)(1↼v₂)
                    let rhs = base
                        .apply(2, &com_a)
                        .apply(1, &mult_a)
                        .apply(0, &act)
                        .apply(1, &ins_unit_b)
                        .apply(1, &act)
                        .apply(0, &mult_b);
                    if let Some(d) = lhs.first_diff_witness(&rhs) {
                        fail3 = Some(witness(&ctx, &d));
                    }
                }
                if fail4.is_none() {
                    // (1↼v₁)(b↼uv₂)
                    let rhs = base
                        .apply(2, &com_a)
                        .permute(&[0, 1, 3, 2])
                        .apply(1, &mult_a)
                        .apply(0, &act)
                        .permute(&[1, 0])
                        .apply(0, &ins_unit_b)
                        .apply(0, &act)
                        .apply(0, &mult_b);
                    if let Some(d) = lhs.first_diff_witness(&rhs) {
                        fail4 = Some(witness(&ctx, &d));
                    }
                }
                if fail3.is_some() && fail4.is_some() {
                    break 'co;
                }
            }
        }
    }
    rep.push("rpaction.comp", fail3.is_none(), fail3);
    rep.push("rpaction.comp.sym", fail4.is_none(), fail4);
    Ok(rep)
}

/// Whether the mirrored action is global: 1↼u = ε(u)·1 for every u.
pub fn right_action_is_global<K: Scalar>(
    a: &HopfData<K>,
    b: &HopfData<K>,
    action: &RightPartialAction<K>,
) -> bool {
    let act = action.op();
    let ins_unit_b = SparseOp::insert(&b.algebra.unit);
    (0..a.dim()).all(|u| {
        let lhs = Tensor::basis(vec![a.dim()], &[u])
            .apply(0, &ins_unit_b)
            .apply(0, &act);
        let rhs = Tensor::from_vec(&b.algebra.unit).scale(&a.coalgebra.counit[u]);
        lhs == rhs
    })
}

/// Checks the mirrored partial-coaction laws of ρ'(u) = u⁻¹⊗u⁰ with u⁻¹ in
/// the Hopf algebra B:
/// (i) (ε⊗id)ρ' = id; (ii) (id⊗Δ)ρ'(u) = u₁⁻¹u₂⁻¹⊗u₁⁰⊗u₂⁰;
/// (iii) u⁻¹⊗ρ'(u⁰) = ε(u₁⁰)·u₁⁻¹(u₂⁻¹)₁⊗(u₂⁻¹)₂⊗u₂⁰;
/// (iv) u⁻¹⊗ρ'(u⁰) = ε(u₂⁰)·(u₁⁻¹)₁u₂⁻¹⊗(u₁⁻¹)₂⊗u₁⁰.
pub fn check_left_partial_coaction<K: Scalar>(
    b: &HopfData<K>,
    a: &HopfData<K>,
    coaction: &LeftPartialCoaction<K>,
) -> Result<Report, MathError> {
    let (na, nb) = (a.dim(), b.dim());
    if coaction.na != na || coaction.nb != nb {
        return Err(MathError::DimMismatch("coaction does not fit the pair".into()));
    }
    crate::scalar::fields_agree::<K>(&[a.field(), b.field()])?;
    let mut rep = Report::new("left-partial-coaction");
    let rho = coaction.op();
    let com_a = a.coalgebra.comult_op();
    let mult_b = b.algebra.mult_op();
    let com_b = b.coalgebra.comult_op();
    let eps_a = a.coalgebra.counit_op();
    let eps_b = b.coalgebra.counit_op();

    // (i)
    let mut fail = None;
    for i in 0..na {
        let lhs = Tensor::basis(vec![na], &[i]).apply(0, &rho).apply(0, &eps_b);
        let rhs = Tensor::basis(vec![na], &[i]);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("u", a.algebra.label(i))], &d));
            break;
        }
    }
    rep.push("lpcoaction.counit", fail.is_none(), fail);

    // (ii)
    let mut fail = None;
    for i in 0..na {
        let base = Tensor::basis(vec![na], &[i]);
        let lhs = base.apply(0, &rho).apply(1, &com_a);
        let rhs = base
            .apply(0, &com_a)
            .apply(0, &rho)
            .apply(2, &rho)
            .permute(&[0, 2, 1, 3])
            .apply(0, &mult_b);
        if let Some(d) = lhs.first_diff_witness(&rhs) {
            fail = Some(witness(&[("u", a.algebra.label(i))], &d));
            break;
        }
    }
    rep.push("lpcoaction.comult", fail.is_none(), fail);

    // (iii) and (iv); both sides live in B⊗B⊗A as u⁻¹⊗(u⁰)⁻¹⊗(u⁰)⁰.
    let mut fail3 = None;
    let mut fail4 = None;
    for i in 0..na {
        let base = Tensor::basis(vec![na], &[i]);
        let lhs = base.apply(0, &rho).apply(1, &rho);
        let split = base.apply(0, &com_a).apply(0, &rho).apply(2, &rho);
        // split slots: [u₁⁻¹, u₁⁰, u₂⁻¹, u₂⁰]
        let ctx = [("u", a.algebra.label(i))];
        if fail3.is_none() {
            let rhs = split
                .apply(1, &eps_a)
                .apply(1, &com_b)
                .apply(0, &mult_b);
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail3 = Some(witness(&ctx, &d));
            }
        }
        if fail4.is_none() {
            let rhs = split
                .apply(3, &eps_a)
                .apply(0, &com_b)
                .permute(&[0, 3, 1, 2])
                .apply(0, &mult_b);
            // slots now [(u₁⁻¹)₁u₂⁻¹, (u₁⁻¹)₂, u₁⁰]
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail4 = Some(witness(&ctx, &d));
            }
        }
    }
    rep.push("lpcoaction.comp", fail3.is_none(), fail3);
    rep.push("lpcoaction.comp.sym", fail4.is_none(), fail4);
    Ok(rep)
}

/// Whether the mirrored coaction is global: ε(u⁰)u⁻¹ = ε(u)·1 for every u.
pub fn left_coaction_is_global<K: Scalar>(
    b: &HopfData<K>,
    a: &HopfData<K>,
    coaction: &LeftPartialCoaction<K>,
) -> bool {
    let rho = coaction.op();
    let eps_a = a.coalgebra.counit_op();
    (0..a.dim()).all(|i| {
        let lhs = Tensor::basis(vec![a.dim()], &[i]).apply(0, &rho).apply(1, &eps_a);
        let rhs = Tensor::from_vec(&b.algebra.unit).scale(&a.coalgebra.counit[i]);
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QField, Rat};
    use crate::zoo;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn trivial_action_of_group_algebra_is_partial_and_global() {
        let h = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(4), &QField);
        let l = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        // h⇀x = ε(h)x, the global trivial action.
        let lambda: Vec<Rat> = h.coalgebra.counit.clone();
        assert!(check_lambda(&h, &lambda).passed());
        let act = action_from_lambda(&lambda, l.dim());
        let rep = check_partial_action(&h, &l, &act).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(action_is_global(&h, &l, &act));
    }

    #[test]
    fn indicator_lambda_gives_genuinely_partial_action() {
        // H = kC2, λ = indicator of the trivial subgroup: λ(e)=1, λ(c)=0.
        let h = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        let l = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(3), &QField);
        let lambda = vec![q(1), q(0)];
        assert!(check_lambda(&h, &lambda).passed());
        let act = action_from_lambda(&lambda, l.dim());
        let rep = check_partial_action(&h, &l, &act).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(!action_is_global(&h, &l, &act));
        // A non-multiplicative λ breaks the composition laws.
        let bad = vec![q(1), q(5)];
        assert!(!check_lambda(&h, &bad).passed());
        let bad_act = action_from_lambda(&bad, l.dim());
        let bad_rep = check_partial_action(&h, &l, &bad_act).unwrap();
        assert!(!bad_rep.passed());
    }

    #[test]
    fn group_like_projection_gives_partial_coaction() {
        // L = kC2, z = (1 + a)/2; coaction of L on the coalgebra H = kC3.
        let l = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        let c = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(3), &QField);
        let z = vec![Rat::ratio(1, 2), Rat::ratio(1, 2)];
        assert!(check_z(&l, &z).passed());
        // z² = z.
        assert_eq!(l.algebra.mult_vec(&z, &z), z);
        let co = coaction_from_z(&z, c.dim());
        let rep = check_partial_coaction(&c, &l, &co).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(!coaction_is_global(&c, &l, &co));
        // z with ε(z) = 1 but failing the comultiplicative condition.
        let bad = vec![q(3), q(-2)];
        let rep_bad = check_z(&l, &bad);
        assert!(rep_bad.item("z.counit").unwrap().passed);
        assert!(!rep_bad.passed());
        let co_bad = coaction_from_z(&bad, c.dim());
        assert!(!check_partial_coaction(&c, &l, &co_bad).unwrap().passed());
    }

    #[test]
    fn transposition_adjointness_for_actions_and_coactions() {
        // A valid coaction transposes to a valid mirrored action and back.
        let l = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        let c = zoo::group_algebra::<Rat>(&zoo::groups::sym(3), &QField);
        let z = vec![Rat::ratio(1, 2), Rat::ratio(1, 2)];
        let co = coaction_from_z(&z, c.dim());
        let mir = co.transpose_to_right_action();
        let rep = check_right_partial_action(&l.dual(), &c.dual(), &mir).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(right_action_is_global(&l.dual(), &c.dual(), &mir) == coaction_is_global(&c, &l, &co));
        let back = mir.transpose_to_coaction();
        assert_eq!(back.coact, co.coact);

        // A valid action transposes to a valid mirrored coaction and back.
        let h = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        let lambda = vec![q(1), q(0)];
        let act = action_from_lambda(&lambda, l.dim());
        let mirco = act.transpose_to_left_coaction();
        let rep = check_left_partial_coaction(&h.dual(), &l.dual(), &mirco).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert_eq!(mirco.transpose_to_action().act, act.act);

        // An invalid coaction transposes to an invalid mirrored action,
        // failing the corresponding law.
        let bad = vec![q(3), q(-2)];
        let co_bad = coaction_from_z(&bad, c.dim());
        let rep_s = check_partial_coaction(&c, &l, &co_bad).unwrap();
        let rep_m =
            check_right_partial_action(&l.dual(), &c.dual(), &co_bad.transpose_to_right_action())
                .unwrap();
        let straight: Vec<bool> = rep_s.items.iter().map(|i| i.passed).collect();
        let mirrored: Vec<bool> = rep_m.items.iter().map(|i| i.passed).collect();
        assert_eq!(straight, mirrored);
        assert!(!rep_m.passed());
    }
}
