//! Partial matched pairs (H, L): a partial action of H on L together with a
//! partial coaction of L on the coalgebra H, subject to compatibility laws,
//! plus the mirrored (right/left) variant obtained by transposition.

use crate::hopf::HopfData;
use crate::partial::{
    self, LeftPartialCoaction, PartialAction, PartialCoaction, RightPartialAction,
};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{SparseOp, Tensor};
use crate::MathError;

/// A candidate partial matched pair. `lambda`/`z` are kept when the action
/// and coaction were built from a functional λ on H and an element z of L.
#[derive(Clone, Debug)]
pub struct PartialMatchedPair<K> {
    pub name: String,
    pub h: HopfData<K>,
    pub l: HopfData<K>,
    /// Partial action of H on the algebra L.
    pub action: PartialAction<K>,
    /// Partial coaction of L on the coalgebra H.
    pub coaction: PartialCoaction<K>,
    pub lambda: Option<Vec<K>>,
    pub z: Option<Vec<K>>,
}

/// The transposed pair: B = H* acted on the right by A = L*, and A coacted
/// on the left by B.
#[derive(Clone, Debug)]
pub struct MirroredPair<K> {
    pub name: String,
    pub a: HopfData<K>,
    pub b: HopfData<K>,
    pub action: RightPartialAction<K>,
    pub coaction: LeftPartialCoaction<K>,
}

fn witness(parts: &[(&str, &str)], diff: &str) -> String {
    let ctx: Vec<String> = parts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}: {}", ctx.join(", "), diff)
}

impl<K: Scalar> PartialMatchedPair<K> {
    /// Builds the λ/z-shaped pair: h⇀x = λ(h)x and ρ(h) = h⊗z.
    pub fn from_lambda_z(
        name: &str,
        h: HopfData<K>,
        l: HopfData<K>,
        lambda: Vec<K>,
        z: Vec<K>,
    ) -> Result<Self, MathError> {
        if lambda.len() != h.dim() || z.len() != l.dim() {
            return Err(MathError::DimMismatch("λ/z length mismatch".into()));
        }
        let action = partial::action_from_lambda(&lambda, l.dim());
        let coaction = partial::coaction_from_z(&z, h.dim());
        Ok(PartialMatchedPair {
            name: name.to_string(),
            h,
            l,
            action,
            coaction,
            lambda: Some(lambda),
            z: Some(z),
        })
    }

    pub fn from_parts(
        name: &str,
        h: HopfData<K>,
        l: HopfData<K>,
        action: PartialAction<K>,
        coaction: PartialCoaction<K>,
    ) -> Result<Self, MathError> {
        if action.nh != h.dim()
            || action.nl != l.dim()
            || coaction.nc != h.dim()
            || coaction.nl != l.dim()
        {
            return Err(MathError::DimMismatch("pair component dimensions".into()));
        }
        Ok(PartialMatchedPair {
            name: name.to_string(),
            h,
            l,
            action,
            coaction,
            lambda: None,
            z: None,
        })
    }

    /// Hopf-algebra checks for both components plus the partial action and
    /// partial coaction laws.
    pub fn check_components(&self) -> Result<Report, MathError> {
        let mut rep = Report::new(&self.name);
        rep.absorb("H", &self.h.check_hopf());
        rep.absorb("L", &self.l.check_hopf());
        rep.absorb(
            "pair",
            &partial::check_partial_action(&self.h, &self.l, &self.action)?,
        );
        rep.absorb(
            "pair",
            &partial::check_partial_coaction(&self.h, &self.l, &self.coaction)?,
        );
        Ok(rep)
    }

    /// The matched-pair compatibility laws on top of the partial action and
    /// coaction laws:
    /// compat: (h₂g)⁰⊗(h₁⇀x)₁⊗(h₁⇀x)₂(h₂g)¹
    ///         = h₃⁰g⁰⊗(h₁⁰⇀x₁)⊗h₁¹(h₂⇀x₂)h₃¹(h₄⇀g¹);
    /// counit: ε_L(h⇀x) = ε_L(h⇀1)ε_L(x);
    /// unit-coaction: ρ(1_H) = 1_H⊗ε_H(1⁰)1¹.
    pub fn check_pmp(&self) -> Result<Report, MathError> {
        let mut rep = Report::new(&self.name);
        rep.absorb(
            "pmp",
            &partial::check_partial_action(&self.h, &self.l, &self.action)?,
        );
        rep.absorb(
            "pmp",
            &partial::check_partial_coaction(&self.h, &self.l, &self.coaction)?,
        );
        let (nh, nl) = (self.h.dim(), self.l.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_h = self.h.coalgebra.comult_op();
        let com_l = self.l.coalgebra.comult_op();
        let mult_h = self.h.algebra.mult_op();
        let mult_l = self.l.algebra.mult_op();
        let eps_h = self.h.coalgebra.counit_op();
        let ins_unit_l = SparseOp::insert(&self.l.algebra.unit);

        let mut fail = None;
        let mut tau_fail = None;
        'compat: for i in 0..nh {
            for j in 0..nh {
                for x in 0..nl {
                    let base = Tensor::basis(vec![nh, nh, nl], &[i, j, x]);
                    let ctx = [
                        ("h", self.h.algebra.label(i)),
                        ("g", self.h.algebra.label(j)),
                        ("x", self.l.algebra.label(x)),
                    ];
                    // LHS: (h₂g)⁰ ⊗ (h₁⇀x)₁ ⊗ (h₁⇀x)₂(h₂g)¹
                    let lhs = base
                        .apply(0, &com_h)
                        .apply(1, &mult_h)
                        // [h₁, h₂g, x]
                        .apply(1, &rho)
                        // [h₁, (h₂g)⁰, (h₂g)¹, x]
                        .permute(&[0, 3, 1, 2])
                        .apply(0, &act)
                        // [h₁⇀x, (h₂g)⁰, (h₂g)¹]
                        .apply(0, &com_l)
                        .permute(&[2, 0, 1, 3])
                        .apply(2, &mult_l);
                    if tau_fail.is_none() {
                        // Same left side assembled through the flip maps:
                        // (τ⊗m_L)(id⊗τ⊗id)(Δ_L(h₁⇀x)⊗ρ(h₂g)).
                        let tau = base
                            .apply(0, &com_h)
                            .apply(1, &mult_h)
                            .permute(&[0, 2, 1])
                            .apply(0, &act)
                            // [h₁⇀x, h₂g]
                            .apply(0, &com_l)
                            .apply(2, &rho)
                            // [w₁, w₂, (h₂g)⁰, (h₂g)¹]
                            .swap(1, 2)
                            .swap(0, 1)
                            .apply(2, &mult_l);
                        if let Some(d) = tau.first_diff_witness(&lhs) {
                            tau_fail = Some(witness(&ctx, &d));
                        }
                    }
                    if fail.is_none() {
                        // RHS with h split four ways and ρ applied to h₁,
                        // h₃ and g.
                        let rhs = base
                            .apply(0, &com_h)
                            .apply(1, &com_h)
                            .apply(2, &com_h)
                            // [h₁, h₂, h₃, h₄, g, x]
                            .apply(0, &rho)
                            .apply(3, &rho)
                            .apply(6, &rho)
                            // [h₁⁰, h₁¹, h₂, h₃⁰, h₃¹, h₄, g⁰, g¹, x]
                            .apply(8, &com_l)
                            // + [x₁, x₂] at the end
                            .permute(&[3, 6, 0, 8, 1, 2, 9, 4, 5, 7])
                            // [h₃⁰, g⁰, h₁⁰, x₁, h₁¹, h₂, x₂, h₃¹, h₄, g¹]
                            .apply(0, &mult_h)
                            .apply(1, &act)
                            .apply(3, &act)
                            .apply(5, &act)
                            // [h₃⁰g⁰, h₁⁰⇀x₁, h₁¹, h₂⇀x₂, h₃¹, h₄⇀g¹]
                            .apply(2, &mult_l)
                            .apply(2, &mult_l)
                            .apply(2, &mult_l);
                        if let Some(d) = lhs.first_diff_witness(&rhs) {
                            fail = Some(witness(&ctx, &d));
                        }
                    }
                    if fail.is_some() && tau_fail.is_some() {
                        break 'compat;
                    }
                }
            }
        }
        rep.push("pmp.compat", fail.is_none(), fail);
        rep.push("pmp.compat.tau-agrees", tau_fail.is_none(), tau_fail);

        // counit law.
        let mut fail = None;
        'counit: for i in 0..nh {
            for x in 0..nl {
                let lhs = self
                    .l
                    .coalgebra
                    .counit_of(&self.action.apply_vec(&self.h.basis_vec(i), &self.l.basis_vec(x)));
                let rhs = self
                    .l
                    .coalgebra
                    .counit_of(&self.action.apply_vec(&self.h.basis_vec(i), &self.l.algebra.unit))
                    * self.l.coalgebra.counit[x].clone();
                if lhs != rhs {
                    fail = Some(witness(
                        &[("h", self.h.algebra.label(i)), ("x", self.l.algebra.label(x))],
                        &format!("ε(h⇀x) = {lhs} but ε(h⇀1)ε(x) = {rhs}"),
                    ));
                    break 'counit;
                }
            }
        }
        rep.push("pmp.counit", fail.is_none(), fail);

        // unit-coaction law.
        let t = Tensor::from_vec(&self.h.algebra.unit).apply(0, &rho);
        let s = t.apply(0, &eps_h).to_flat_vec();
        let rhs = Tensor::from_vec(&self.h.algebra.unit).apply(1, &SparseOp::insert(&s));
        let fail = t
            .first_diff_witness(&rhs)
            .map(|d| format!("ρ(1) - 1⊗ε(1⁰)1¹ has {d}"));
        rep.push("pmp.unit-coaction", fail.is_none(), fail);
        let _ = ins_unit_l;
        Ok(rep)
    }

    /// The quasi-abelian law: h₂⁰⊗(h₁⇀x)h₂¹ = h₁⁰⊗h₁¹(h₂⇀x).
    pub fn check_quasi_abelian(&self) -> Result<Report, MathError> {
        let mut rep = Report::new(&self.name);
        let (nh, nl) = (self.h.dim(), self.l.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_h = self.h.coalgebra.comult_op();
        let mult_l = self.l.algebra.mult_op();
        let mut fail = None;
        'outer: for i in 0..nh {
            for x in 0..nl {
                let base = Tensor::basis(vec![nh, nl], &[i, x]).apply(0, &com_h);
                // [h₁, h₂, x]
                let lhs = base
                    .apply(1, &rho)
                    .permute(&[1, 0, 3, 2])
                    .apply(1, &act)
                    .apply(1, &mult_l);
                let rhs = base
                    .apply(0, &rho)
                    // [h₁⁰, h₁¹, h₂, x]
                    .apply(2, &act)
                    .apply(1, &mult_l);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("h", self.h.algebra.label(i)), ("x", self.l.algebra.label(x))],
                        &d,
                    ));
                    break 'outer;
                }
            }
        }
        rep.push("pmp.quasi-abelian", fail.is_none(), fail);
        Ok(rep)
    }

    /// Globality of the action and coaction, plus the two identities a
    /// global pair satisfies: ρ(hg) = h₁⁰g⁰⊗h₁¹(h₂⇀g¹) and
    /// Δ(h⇀x) = (h₁⁰⇀x₁)⊗h₁¹(h₂⇀x₂).
    pub fn check_global(&self) -> Report {
        let mut rep = Report::new(&self.name);
        rep.push(
            "global.action",
            partial::action_is_global(&self.h, &self.l, &self.action),
            Some("h⇀1 ≠ ε(h)1 for some h".into()),
        );
        rep.push(
            "global.coaction",
            partial::coaction_is_global(&self.h, &self.l, &self.coaction),
            Some("ε(h⁰)h¹ ≠ ε(h)1 for some h".into()),
        );
        let (nh, nl) = (self.h.dim(), self.l.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_h = self.h.coalgebra.comult_op();
        let com_l = self.l.coalgebra.comult_op();
        let mult_h = self.h.algebra.mult_op();
        let mult_l = self.l.algebra.mult_op();

        let mut fail = None;
        'rho: for i in 0..nh {
            for j in 0..nh {
                let base = Tensor::basis(vec![nh, nh], &[i, j]);
                let lhs = base.apply(0, &mult_h).apply(0, &rho);
                let rhs = base
                    .apply(0, &com_h)
                    .apply(0, &rho)
                    .apply(3, &rho)
                    // [h₁⁰, h₁¹, h₂, g⁰, g¹]
                    .permute(&[0, 3, 1, 2, 4])
                    .apply(3, &act)
                    .apply(2, &mult_l)
                    .apply(0, &mult_h);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("h", self.h.algebra.label(i)), ("g", self.h.algebra.label(j))],
                        &d,
                    ));
                    break 'rho;
                }
            }
        }
        rep.push("global.coaction.multiplicative", fail.is_none(), fail);

        let mut fail = None;
        'act: for i in 0..nh {
            for x in 0..nl {
                let base = Tensor::basis(vec![nh, nl], &[i, x]);
                let lhs = base.apply(0, &act).apply(0, &com_l);
                let rhs = base
                    .apply(0, &com_h)
                    .apply(2, &com_l)
                    // [h₁, h₂, x₁, x₂]
                    .apply(0, &rho)
                    // [h₁⁰, h₁¹, h₂, x₁, x₂]
                    .permute(&[0, 3, 1, 2, 4])
                    .apply(0, &act)
                    .apply(2, &act)
                    .apply(1, &mult_l);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("h", self.h.algebra.label(i)), ("x", self.l.algebra.label(x))],
                        &d,
                    ));
                    break 'act;
                }
            }
        }
        rep.push("global.action.comultiplicative", fail.is_none(), fail);
        rep
    }

    /// Whether both the action and the coaction are global.
    pub fn is_global(&self) -> bool {
        partial::action_is_global(&self.h, &self.l, &self.action)
            && partial::coaction_is_global(&self.h, &self.l, &self.coaction)
    }

    /// For λ/z-shaped pairs: the λ and z admissibility laws plus the four
    /// closed conditions controlling the pair:
    /// z-central (xz = zx) and λ-commute (λ(h₁)h₂ = h₁λ(h₂)) characterize
    /// the quasi-abelian matched pairs; z-partial (xz = zxz) and λ-partial
    /// (λ(h₁)h₂λ(h₃) = λ(h₁)h₂) characterize the matched pairs.
    pub fn check_lambda_z(&self) -> Result<Report, MathError> {
        let (lambda, z) = match (&self.lambda, &self.z) {
            (Some(lam), Some(z)) => (lam, z),
            _ => {
                return Err(MathError::Precondition(
                    "pair was not built from λ and z".into(),
                ))
            }
        };
        let mut rep = Report::new(&self.name);
        rep.absorb("lz", &partial::check_lambda(&self.h, lambda));
        rep.absorb("lz", &partial::check_z(&self.l, z));

        let nh = self.h.dim();
        let nl = self.l.dim();
        let mut central_fail = None;
        let mut zxz_fail = None;
        for x in 0..nl {
            let ex = self.l.basis_vec(x);
            let xz = self.l.algebra.mult_vec(&ex, z);
            let zx = self.l.algebra.mult_vec(z, &ex);
            if central_fail.is_none() && xz != zx {
                central_fail = Some(format!("x={}", self.l.algebra.label(x)));
            }
            let zxz = self.l.algebra.mult_vec(&zx, z);
            if zxz_fail.is_none() && xz != zxz {
                zxz_fail = Some(format!("x={}", self.l.algebra.label(x)));
            }
        }
        rep.push("lz.z-central", central_fail.is_none(), central_fail);
        rep.push("lz.z-partial", zxz_fail.is_none(), zxz_fail);

        let lam_op = SparseOp::functional(lambda);
        let com_h = self.h.coalgebra.comult_op();
        let mut commute_fail = None;
        let mut partial_fail = None;
        for i in 0..nh {
            let split = Tensor::basis(vec![nh], &[i]).apply(0, &com_h);
            let left = split.apply(0, &lam_op); // λ(h₁)h₂
            if commute_fail.is_none() {
                let right = split.apply(1, &lam_op); // h₁λ(h₂)
                if left != right {
                    commute_fail = Some(format!("h={}", self.h.algebra.label(i)));
                }
            }
            if partial_fail.is_none() {
                let lhs = Tensor::basis(vec![nh], &[i])
                    .apply(0, &com_h)
                    .apply(0, &com_h)
                    .apply(0, &lam_op)
                    .apply(1, &lam_op); // λ(h₁)h₂λ(h₃)
                if lhs != left {
                    partial_fail = Some(format!("h={}", self.h.algebra.label(i)));
                }
            }
        }
        rep.push("lz.lambda-commute", commute_fail.is_none(), commute_fail);
        rep.push("lz.lambda-partial", partial_fail.is_none(), partial_fail);
        Ok(rep)
    }

    /// The two antipode-compatibility conditions and their consequences:
    /// I:  (h⁰⇀1)⊗S_L(h¹) = ε_L(h⇀1)·1⊗ε_H(1⁰)1¹;
    /// II: ε_H(h⁰)(S_H(g)⇀h¹) = ε_L(g⇀1)ε_H(h)·ε_H(1⁰)1¹;
    /// consequences ε_L(h⇀1) = ε_L(S_H(h)⇀1) and h⇀1 = ε_L(h⇀1)1.
    pub fn check_conditions_i_ii(&self) -> Result<Report, MathError> {
        let s_l = self.l.antipode.as_ref().ok_or_else(|| {
            MathError::Precondition("L has no antipode".into())
        })?;
        let s_h = self.h.antipode.as_ref().ok_or_else(|| {
            MathError::Precondition("H has no antipode".into())
        })?;
        let mut rep = Report::new(&self.name);
        let (nh, nl) = (self.h.dim(), self.l.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let eps_h = self.h.coalgebra.counit_op();
        let sl_op = SparseOp::from_matrix(s_l, vec![nl], vec![nl]);
        let ins_unit_l = SparseOp::insert(&self.l.algebra.unit);

        // s = ε_H(1⁰)1¹ from ρ(1_H).
        let s = Tensor::from_vec(&self.h.algebra.unit)
            .apply(0, &rho)
            .apply(0, &eps_h)
            .to_flat_vec();
        let eps_act_unit = |i: usize| -> K {
            self.l
                .coalgebra
                .counit_of(&self.action.apply_vec(&self.h.basis_vec(i), &self.l.algebra.unit))
        };

        let mut fail = None;
        for i in 0..nh {
            let lhs = Tensor::basis(vec![nh], &[i])
                .apply(0, &rho)
                // [h⁰, h¹]
                .apply(1, &sl_op)
                .apply(1, &ins_unit_l)
                // [h⁰, 1_L, S_L(h¹)]
                .apply(0, &act);
            let rhs = Tensor::from_vec(&self.l.algebra.unit)
                .apply(1, &SparseOp::insert(&s))
                .scale(&eps_act_unit(i));
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail = Some(witness(&[("h", self.h.algebra.label(i))], &d));
                break;
            }
        }
        rep.push("cond.I", fail.is_none(), fail);

        let mut fail = None;
        'two: for i in 0..nh {
            let kernel = Tensor::basis(vec![nh], &[i])
                .apply(0, &rho)
                .apply(0, &eps_h); // ε_H(h⁰)h¹ ∈ L
            for j in 0..nh {
                let sg = s_h.apply(&self.h.basis_vec(j));
                let lhs = kernel.apply(0, &SparseOp::insert(&sg)).apply(0, &act);
                let scalar = eps_act_unit(j) * self.h.coalgebra.counit[i].clone();
                let rhs = Tensor::from_vec(&s).scale(&scalar);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("h", self.h.algebra.label(i)), ("g", self.h.algebra.label(j))],
                        &d,
                    ));
                    break 'two;
                }
            }
        }
        rep.push("cond.II", fail.is_none(), fail);

        let mut inv_fail = None;
        let mut scalar_fail = None;
        for i in 0..nh {
            if inv_fail.is_none() {
                let sh = s_h.apply(&self.h.basis_vec(i));
                let lhs = eps_act_unit(i);
                let rhs = self
                    .l
                    .coalgebra
                    .counit_of(&self.action.apply_vec(&sh, &self.l.algebra.unit));
                if lhs != rhs {
                    inv_fail = Some(format!("h={}", self.h.algebra.label(i)));
                }
            }
            if scalar_fail.is_none() {
                let lhs = self.action.apply_vec(&self.h.basis_vec(i), &self.l.algebra.unit);
                let rhs: Vec<K> = self
                    .l
                    .algebra
                    .unit
                    .iter()
                    .map(|c| c.clone() * eps_act_unit(i))
                    .collect();
                if lhs != rhs {
                    scalar_fail = Some(format!("h={}", self.h.algebra.label(i)));
                }
            }
        }
        rep.push(
            "cond.consequence.counit-invariance",
            inv_fail.is_none(),
            inv_fail,
        );
        rep.push(
            "cond.consequence.unit-scalar",
            scalar_fail.is_none(),
            scalar_fail,
        );
        Ok(rep)
    }

    /// The identities h⇀1 = (h₁⇀1)ε(h₂⇀1) = ε(h₁⇀1)(h₂⇀1), which hold on
    /// every quasi-abelian matched pair.
    pub fn check_unit_action_splitting(&self) -> Report {
        let mut rep = Report::new(&self.name);
        let nh = self.h.dim();
        let act = self.action.op();
        let com_h = self.h.coalgebra.comult_op();
        let eps_l = self.l.coalgebra.counit_op();
        let ins_unit_l = SparseOp::insert(&self.l.algebra.unit);
        let mut fail_a = None;
        let mut fail_b = None;
        for i in 0..nh {
            let direct = Tensor::basis(vec![nh], &[i])
                .apply(1, &ins_unit_l)
                .apply(0, &act);
            let split = Tensor::basis(vec![nh], &[i])
                .apply(0, &com_h)
                .apply(1, &ins_unit_l)
                // [h₁, 1_L, h₂]
                .apply(0, &act)
                .apply(2, &ins_unit_l)
                .apply(1, &act);
            // [h₁⇀1, h₂⇀1]
            if fail_a.is_none() {
                let a = split.apply(1, &eps_l);
                if let Some(d) = direct.first_diff_witness(&a) {
                    fail_a = Some(witness(&[("h", self.h.algebra.label(i))], &d));
                }
            }
            if fail_b.is_none() {
                let b = split.apply(0, &eps_l);
                if let Some(d) = direct.first_diff_witness(&b) {
                    fail_b = Some(witness(&[("h", self.h.algebra.label(i))], &d));
                }
            }
        }
        rep.push("invariant.unit-split.right", fail_a.is_none(), fail_a);
        rep.push("invariant.unit-split.left", fail_b.is_none(), fail_b);
        rep
    }

    /// The identity ε_H(h₁⁰)h₁¹(h₂⇀1) = ε_L(h₁⁰⇀1)h₁¹(h₂⇀1), which holds
    /// on every quasi-abelian matched pair and underlies the normal form of
    /// the bismash product.
    pub fn check_normal_form_prefactor(&self) -> Report {
        let mut rep = Report::new(&self.name);
        let nh = self.h.dim();
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_h = self.h.coalgebra.comult_op();
        let eps_h = self.h.coalgebra.counit_op();
        let eps_l = self.l.coalgebra.counit_op();
        let mult_l = self.l.algebra.mult_op();
        let ins_unit_l = SparseOp::insert(&self.l.algebra.unit);
        let mut fail = None;
        for i in 0..nh {
            let split = Tensor::basis(vec![nh], &[i])
                .apply(0, &com_h)
                .apply(0, &rho);
            // [h₁⁰, h₁¹, h₂]
            let tail = |t: Tensor<K>| -> Tensor<K> {
                // from [h₁¹, h₂] to [h₁¹(h₂⇀1)]
                t.apply(2, &ins_unit_l).apply(1, &act).apply(0, &mult_l)
            };
            let lhs = tail(split.apply(0, &eps_h));
            let rhs = tail(
                split
                    .apply(1, &ins_unit_l)
                    // [h₁⁰, 1_L, h₁¹, h₂]
                    .apply(0, &act)
                    .apply(0, &eps_l),
            );
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail = Some(witness(&[("h", self.h.algebra.label(i))], &d));
                break;
            }
        }
        rep.push("invariant.normal-form-prefactor", fail.is_none(), fail);
        rep
    }

    /// The transposed pair on the dual Hopf algebras.
    pub fn dual_pair(&self) -> MirroredPair<K> {
        MirroredPair {
            name: format!("{}*", self.name),
            a: self.l.dual(),
            b: self.h.dual(),
            action: self.coaction.transpose_to_right_action(),
            coaction: self.action.transpose_to_left_coaction(),
        }
    }
}

impl<K: Scalar> MirroredPair<K> {
    /// The mirrored matched-pair laws on top of the mirrored partial action
    /// and coaction laws:
    /// compat: (uv₁)⁻¹(ψ↼v₂)₁ ⊗ (ψ↼v₂)₂ ⊗ (uv₁)⁰
    ///   = (u⁻¹↼v₁)(v₂)⁻¹(ψ₁↼v₃)(v₄)⁻¹ ⊗ (ψ₂↼(v₄)⁰) ⊗ u⁰(v₂)⁰;
    /// counit: ε_B(ψ↼u) = ε_B(ψ)ε_B(1↼u);
    /// unit-coaction: ρ'(1_A) = ε_A(1⁰)1⁻¹ ⊗ 1_A.
    pub fn check_pmp(&self) -> Result<Report, MathError> {
        let mut rep = Report::new(&self.name);
        rep.absorb(
            "mpmp",
            &partial::check_right_partial_action(&self.a, &self.b, &self.action)?,
        );
        rep.absorb(
            "mpmp",
            &partial::check_left_partial_coaction(&self.b, &self.a, &self.coaction)?,
        );
        let (na, nb) = (self.a.dim(), self.b.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_a = self.a.coalgebra.comult_op();
        let com_b = self.b.coalgebra.comult_op();
        let mult_a = self.a.algebra.mult_op();
        let mult_b = self.b.algebra.mult_op();
        let eps_a = self.a.coalgebra.counit_op();

        let mut fail = None;
        'compat: for p in 0..nb {
            for u in 0..na {
                for v in 0..na {
                    let base = Tensor::basis(vec![nb, na, na], &[p, u, v]);
                    let ctx = [
                        ("ψ", self.b.algebra.label(p)),
                        ("u", self.a.algebra.label(u)),
                        ("v", self.a.algebra.label(v)),
                    ];
                    let lhs = base
                        .apply(2, &com_a)
                        .apply(1, &mult_a)
                        // [ψ, uv₁, v₂]
                        .apply(1, &rho)
                        // [ψ, (uv₁)⁻¹, (uv₁)⁰, v₂]
                        .permute(&[0, 3, 1, 2])
                        .apply(0, &act)
                        // [ψ↼v₂, (uv₁)⁻¹, (uv₁)⁰]
                        .apply(0, &com_b)
                        .permute(&[2, 0, 1, 3])
                        .apply(0, &mult_b);
                    let rhs = base
                        .apply(0, &com_b)
                        // [ψ₁, ψ₂, u, v]
                        .apply(3, &com_a)
                        .apply(3, &com_a)
                        .apply(3, &com_a)
                        // [ψ₁, ψ₂, u, v₁, v₂, v₃, v₄]
                        .apply(2, &rho)
                        // [ψ₁, ψ₂, u⁻¹, u⁰, v₁, v₂, v₃, v₄]
                        .apply(5, &rho)
                        // + (v₂)⁻¹, (v₂)⁰ at 5, 6
                        .apply(8, &rho)
                        // + (v₄)⁻¹, (v₄)⁰ at 8, 9
                        .permute(&[2, 4, 5, 0, 7, 8, 1, 9, 3, 6])
                        // [u⁻¹, v₁, (v₂)⁻¹, ψ₁, v₃, (v₄)⁻¹, ψ₂, (v₄)⁰, u⁰, (v₂)⁰]
                        .apply(0, &act)
                        .apply(2, &act)
                        .apply(4, &act)
                        // [u⁻¹↼v₁, (v₂)⁻¹, ψ₁↼v₃, (v₄)⁻¹, ψ₂↼(v₄)⁰, u⁰, (v₂)⁰]
                        .apply(0, &mult_b)
                        .apply(0, &mult_b)
                        .apply(0, &mult_b)
                        .apply(2, &mult_a);
                    if let Some(d) = lhs.first_diff_witness(&rhs) {
                        fail = Some(witness(&ctx, &d));
                        break 'compat;
                    }
                }
            }
        }
        rep.push("mpmp.compat", fail.is_none(), fail);

        // counit law.
        let ins_unit_b = SparseOp::insert(&self.b.algebra.unit);
        let eps_b_vals = &self.b.coalgebra.counit;
        let mut fail = None;
        'counit: for p in 0..nb {
            for u in 0..na {
                let lhs = self.b.coalgebra.counit_of(
                    &Tensor::basis(vec![nb, na], &[p, u])
                        .apply(0, &act)
                        .to_flat_vec(),
                );
                let unit_part = self.b.coalgebra.counit_of(
                    &Tensor::basis(vec![na], &[u])
                        .apply(0, &ins_unit_b)
                        .apply(0, &act)
                        .to_flat_vec(),
                );
                let rhs = eps_b_vals[p].clone() * unit_part;
                if lhs != rhs {
                    fail = Some(witness(
                        &[("ψ", self.b.algebra.label(p)), ("u", self.a.algebra.label(u))],
                        &format!("ε(ψ↼u) = {lhs} but ε(ψ)ε(1↼u) = {rhs}"),
                    ));
                    break 'counit;
                }
            }
        }
        rep.push("mpmp.counit", fail.is_none(), fail);

        // unit-coaction law.
        let t = Tensor::from_vec(&self.a.algebra.unit).apply(0, &rho);
        let kappa0 = t.apply(1, &eps_a).to_flat_vec();
        let rhs = Tensor::from_vec(&self.a.algebra.unit).apply(0, &SparseOp::insert(&kappa0));
        let fail = t
            .first_diff_witness(&rhs)
            .map(|d| format!("ρ'(1) - ε(1⁰)1⁻¹⊗1 has {d}"));
        rep.push("mpmp.unit-coaction", fail.is_none(), fail);
        Ok(rep)
    }

    /// The mirrored quasi-abelian law:
    /// (u₁)⁻¹(ψ↼u₂)⊗(u₁)⁰ = (ψ↼u₁)(u₂)⁻¹⊗(u₂)⁰.
    pub fn check_quasi_abelian(&self) -> Result<Report, MathError> {
        let mut rep = Report::new(&self.name);
        let (na, nb) = (self.a.dim(), self.b.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let com_a = self.a.coalgebra.comult_op();
        let mult_b = self.b.algebra.mult_op();
        let mut fail = None;
        'outer: for p in 0..nb {
            for u in 0..na {
                let base = Tensor::basis(vec![nb, na], &[p, u]).apply(1, &com_a);
                // [ψ, u₁, u₂]
                let lhs = base
                    .apply(1, &rho)
                    // [ψ, (u₁)⁻¹, (u₁)⁰, u₂]
                    .permute(&[0, 3, 1, 2])
                    .apply(0, &act)
                    .permute(&[1, 0, 2])
                    .apply(0, &mult_b);
                let rhs = base
                    .apply(2, &rho)
                    // [ψ, u₁, (u₂)⁻¹, (u₂)⁰]
                    .apply(0, &act)
                    .apply(0, &mult_b);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("ψ", self.b.algebra.label(p)), ("u", self.a.algebra.label(u))],
                        &d,
                    ));
                    break 'outer;
                }
            }
        }
        rep.push("mpmp.quasi-abelian", fail.is_none(), fail);
        Ok(rep)
    }

    /// Mirrored antipode-compatibility conditions, with κ(u) = ε_A(u⁰)u⁻¹
    /// and κ₀ = κ(1_A):
    /// I:  κ(u)↼S_A(v) = ε_A(u)ε_B(1↼v)·κ₀;
    /// II: (1↼u⁰)⊗S_B(u⁻¹) = ε_B(1↼u)·1⊗κ₀.
    pub fn check_conditions_i_ii(&self) -> Result<Report, MathError> {
        let s_a = self.a.antipode.as_ref().ok_or_else(|| {
            MathError::Precondition("A has no antipode".into())
        })?;
        let s_b = self.b.antipode.as_ref().ok_or_else(|| {
            MathError::Precondition("B has no antipode".into())
        })?;
        let mut rep = Report::new(&self.name);
        let (na, nb) = (self.a.dim(), self.b.dim());
        let act = self.action.op();
        let rho = self.coaction.op();
        let eps_a = self.a.coalgebra.counit_op();
        let sb_op = SparseOp::from_matrix(s_b, vec![nb], vec![nb]);
        let ins_unit_b = SparseOp::insert(&self.b.algebra.unit);

        let kappa = |u: &Tensor<K>| -> Tensor<K> { u.apply(0, &rho).apply(1, &eps_a) };
        let kappa0 = kappa(&Tensor::from_vec(&self.a.algebra.unit)).to_flat_vec();
        let eps_unit_act = |u: usize| -> K {
            self.b.coalgebra.counit_of(
                &Tensor::basis(vec![na], &[u])
                    .apply(0, &ins_unit_b)
                    .apply(0, &act)
                    .to_flat_vec(),
            )
        };

        let mut fail = None;
        'one: for u in 0..na {
            let ku = kappa(&Tensor::basis(vec![na], &[u]));
            for v in 0..na {
                let sv = s_a.apply(&self.a.basis_vec(v));
                let lhs = ku.apply(1, &SparseOp::insert(&sv)).apply(0, &act);
                let scalar = self.a.coalgebra.counit[u].clone() * eps_unit_act(v);
                let rhs = Tensor::from_vec(&kappa0).scale(&scalar);
                if let Some(d) = lhs.first_diff_witness(&rhs) {
                    fail = Some(witness(
                        &[("u", self.a.algebra.label(u)), ("v", self.a.algebra.label(v))],
                        &d,
                    ));
                    break 'one;
                }
            }
        }
        rep.push("mcond.I", fail.is_none(), fail);

        let mut fail = None;
        for u in 0..na {
            let lhs = Tensor::basis(vec![na], &[u])
                .apply(0, &rho)
                // [u⁻¹, u⁰]
                .apply(1, &ins_unit_b)
                // [u⁻¹, 1_B, u⁰]
                .apply(1, &act)
                // [u⁻¹, 1↼u⁰]
                .apply(0, &sb_op)
                .permute(&[1, 0]);
            let rhs = Tensor::from_vec(&self.b.algebra.unit)
                .apply(1, &SparseOp::insert(&kappa0))
                .scale(&eps_unit_act(u));
            if let Some(d) = lhs.first_diff_witness(&rhs) {
                fail = Some(witness(&[("u", self.a.algebra.label(u))], &d));
                break;
            }
        }
        rep.push("mcond.II", fail.is_none(), fail);
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QField, Rat};
    use crate::zoo;
    use num_traits::Zero;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    /// λ the indicator of N ≤ G scaled by 1/|N| on H = kG*, z the uniform
    /// average over N in L = kG: the running dual-group example.
    fn kg_dual_pair(
        g: &zoo::groups::GroupPresentation,
        n: &[usize],
    ) -> PartialMatchedPair<Rat> {
        let h = zoo::dual_group_algebra::<Rat>(g, &QField);
        let l = zoo::group_algebra::<Rat>(g, &QField);
        let size = q(n.len() as i64).inv().unwrap();
        let mut lambda = vec![Rat::zero(); g.order];
        let mut z = vec![Rat::zero(); g.order];
        for &i in n {
            lambda[i] = size.clone();
            z[i] = size.clone();
        }
        PartialMatchedPair::from_lambda_z("kG*-kG", h, l, lambda, z).unwrap()
    }

    #[test]
    fn dual_group_pair_on_s3_is_quasi_abelian_pmp() {
        let g = zoo::groups::sym(3);
        let a3 = g.subgroup_closure(&[g.index_of_label("(123)").unwrap()]);
        assert!(g.is_normal(&a3));
        let pair = kg_dual_pair(&g, &a3);
        let rep = pair.check_lambda_z().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = pair.check_pmp().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = pair.check_quasi_abelian().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(!pair.is_global());
        let rep = pair.check_conditions_i_ii().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(pair.check_unit_action_splitting().passed());
        assert!(pair.check_normal_form_prefactor().passed());
    }

    #[test]
    fn non_normal_subgroup_breaks_the_pair() {
        let g = zoo::groups::sym(3);
        let t = g.subgroup_closure(&[g.index_of_label("(12)").unwrap()]);
        assert!(!g.is_normal(&t));
        let pair = kg_dual_pair(&g, &t);
        // λ is still admissible on kG* but z fails its law in kG, and the
        // matched-pair laws fail.
        let rep = pair.check_lambda_z().unwrap();
        assert!(!rep.passed());
        let rep = pair.check_pmp().unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn trivial_pair_is_global() {
        // λ = ε_H and z = 1_L give the trivial global pair.
        let h = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(2), &QField);
        let l = zoo::group_algebra::<Rat>(&zoo::groups::cyclic(3), &QField);
        let lambda = h.coalgebra.counit.clone();
        let z = l.algebra.unit.clone();
        let pair = PartialMatchedPair::from_lambda_z("trivial", h, l, lambda, z).unwrap();
        assert!(pair.check_pmp().unwrap().passed());
        assert!(pair.is_global());
        let rep = pair.check_global();
        assert!(rep.passed(), "{}", rep.summary());
    }

    #[test]
    fn mirrored_checks_agree_with_straight_checks_under_transposition() {
        let g = zoo::groups::sym(3);
        let a3 = g.subgroup_closure(&[g.index_of_label("(123)").unwrap()]);
        let pair = kg_dual_pair(&g, &a3);
        let mir = pair.dual_pair();
        let rep = mir.check_pmp().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = mir.check_quasi_abelian().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = mir.check_conditions_i_ii().unwrap();
        assert!(rep.passed(), "{}", rep.summary());

        // A failing pair fails mirrored too.
        let t = g.subgroup_closure(&[g.index_of_label("(12)").unwrap()]);
        let bad = kg_dual_pair(&g, &t);
        assert!(!bad.dual_pair().check_pmp().unwrap().passed());
    }
}
