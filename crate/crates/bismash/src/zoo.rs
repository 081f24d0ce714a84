//! Built-in groups, Hopf algebras and matched pairs used by the test suite
//! and the CLI.

use crate::hopf::{AlgebraData, CoalgebraData, CounitLaws, HopfData, UnitLaws};
use crate::matchedpair::PartialMatchedPair;
use crate::matrix::Matrix;
use crate::partial::{PartialAction, PartialCoaction};
use crate::scalar::Scalar;
use crate::tensor::{SparseOp, Tensor};
use crate::MathError;

pub mod groups {
    //! Finite groups by Cayley table.

    /// A finite group with a verified multiplication table.
    #[derive(Clone, Debug)]
    pub struct GroupPresentation {
        pub name: String,
        pub order: usize,
        /// `table[i][j]` is the index of the product of elements i and j.
        pub table: Vec<Vec<usize>>,
        pub identity: usize,
        pub labels: Vec<String>,
    }

    impl GroupPresentation {
        /// Validates associativity, identity and inverses.
        pub fn new(
            name: &str,
            table: Vec<Vec<usize>>,
            labels: Vec<String>,
        ) -> Result<Self, String> {
            let n = table.len();
            if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n) {
                return Err("table/label shape mismatch".into());
            }
            if table.iter().flatten().any(|&x| x >= n) {
                return Err("table entry out of range".into());
            }
            let identity = (0..n)
                .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
                .ok_or("no identity element")?;
            for i in 0..n {
                if !(0..n).any(|j| table[i][j] == identity && table[j][i] == identity) {
                    return Err(format!("element {i} has no inverse"));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if table[table[i][j]][k] != table[i][table[j][k]] {
                            return Err(format!("associativity fails at ({i},{j},{k})"));
                        }
                    }
                }
            }
            Ok(GroupPresentation {
                name: name.to_string(),
                order: n,
                table,
                identity,
                labels,
            })
        }

        pub fn mul(&self, i: usize, j: usize) -> usize {
            self.table[i][j]
        }

        pub fn inv(&self, i: usize) -> usize {
            (0..self.order)
                .find(|&j| self.table[i][j] == self.identity)
                .expect("verified group")
        }

        pub fn is_abelian(&self) -> bool {
            (0..self.order).all(|i| (0..i).all(|j| self.table[i][j] == self.table[j][i]))
        }

        pub fn index_of_label(&self, label: &str) -> Option<usize> {
            self.labels.iter().position(|l| l == label)
        }

        /// Smallest subgroup containing the given elements, sorted.
        pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
            let mut set = vec![false; self.order];
            set[self.identity] = true;
            let mut stack: Vec<usize> = vec![self.identity];
            for &g in gens {
                if !set[g] {
                    set[g] = true;
                    stack.push(g);
                }
            }
            while let Some(g) = stack.pop() {
                let members: Vec<usize> =
                    (0..self.order).filter(|&i| set[i]).collect();
                for m in members {
                    for p in [self.mul(g, m), self.mul(m, g), self.inv(g)] {
                        if !set[p] {
                            set[p] = true;
                            stack.push(p);
                        }
                    }
                }
            }
            (0..self.order).filter(|&i| set[i]).collect()
        }

        pub fn is_subgroup(&self, set: &[usize]) -> bool {
            !set.is_empty()
                && set.contains(&self.identity)
                && set
                    .iter()
                    .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
                && set.iter().all(|&a| set.contains(&self.inv(a)))
        }

        /// Every subgroup, as a sorted element list. Enumerates closures of
        /// generator sets of size at most two, which finds all subgroups of
        /// the groups shipped here (every subgroup is 2-generated at these
        /// orders).
        pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
            let mut seen: Vec<Vec<usize>> = Vec::new();
            for a in 0..self.order {
                for b in a..self.order {
                    let sub = self.subgroup_closure(&[a, b]);
                    if !seen.contains(&sub) {
                        seen.push(sub);
                    }
                }
            }
            seen.sort_by_key(|s| (s.len(), s.clone()));
            seen
        }

        pub fn is_normal(&self, set: &[usize]) -> bool {
            self.is_subgroup(set)
                && (0..self.order).all(|g| {
                    set.iter()
                        .all(|&n| set.contains(&self.mul(self.mul(g, n), self.inv(g))))
                })
        }
    }

    pub fn cyclic(n: usize) -> GroupPresentation {
        assert!(n >= 1);
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "c".to_string(),
                _ => format!("c{i}"),
            })
            .collect();
        GroupPresentation::new(&format!("C{n}"), table, labels).expect("cyclic group is valid")
    }

    /// Direct product with index `i * |B| + j` and labels joined by `*`.
    pub fn direct_product(a: &GroupPresentation, b: &GroupPresentation) -> GroupPresentation {
        let n = a.order * b.order;
        let mut table = vec![vec![0usize; n]; n];
        for i1 in 0..a.order {
            for j1 in 0..b.order {
                for i2 in 0..a.order {
                    for j2 in 0..b.order {
                        table[i1 * b.order + j1][i2 * b.order + j2] =
                            a.mul(i1, i2) * b.order + b.mul(j1, j2);
                    }
                }
            }
        }
        let labels = (0..a.order)
            .flat_map(|i| {
                (0..b.order).map(move |j| {
                    match (i == a.identity, j == b.identity) {
                        (true, true) => "e".to_string(),
                        (true, false) => b.labels[j].clone(),
                        (false, true) => a.labels[i].clone(),
                        (false, false) => format!("{}*{}", a.labels[i], b.labels[j]),
                    }
                })
            })
            .collect();
        GroupPresentation::new(&format!("{}x{}", a.name, b.name), table, labels)
            .expect("product of valid groups is valid")
    }

    /// The Klein four group with labels e, g, h, gh.
    pub fn klein4() -> GroupPresentation {
        let table = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let labels = ["e", "g", "h", "gh"].map(String::from).to_vec();
        GroupPresentation::new("C2xC2", table, labels).expect("valid")
    }

    /// Dihedral group of order 2n: r^n = s^2 = e, s r s = r^{-1};
    /// element `a*n + k` is `s^a r^k`.
    pub fn dihedral(n: usize) -> GroupPresentation {
        assert!((3..=6).contains(&n), "dihedral parameter out of range");
        let order = 2 * n;
        let idx = |a: usize, k: usize| a * n + k;
        let mut table = vec![vec![0usize; order]; order];
        for a1 in 0..2 {
            for k1 in 0..n {
                for a2 in 0..2 {
                    for k2 in 0..n {
                        // (s^a1 r^k1)(s^a2 r^k2) = s^(a1+a2) r^(±k1+k2)
                        let k = if a2 == 0 { (k1 + k2) % n } else { (n - k1 + k2) % n };
                        table[idx(a1, k1)][idx(a2, k2)] = idx((a1 + a2) % 2, k);
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|i| {
                let (a, k) = (i / n, i % n);
                match (a, k) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "r".to_string(),
                    (0, k) => format!("r{k}"),
                    (1, 0) => "s".to_string(),
                    (1, 1) => "sr".to_string(),
                    (_, k) => format!("sr{k}"),
                }
            })
            .collect();
        GroupPresentation::new(&format!("D{n}"), table, labels).expect("valid")
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }

    fn cycle_label(p: &[usize]) -> String {
        let n = p.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] || p[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = p[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = p[cur];
            }
            parts.push(format!(
                "({})",
                cyc.iter().map(|i| (i + 1).to_string()).collect::<String>()
            ));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.concat()
        }
    }

    /// Symmetric group on n letters (n = 3 or 4), cycle-notation labels.
    pub fn sym(n: usize) -> GroupPresentation {
        assert!((3..=4).contains(&n), "symmetric parameter out of range");
        let perms = permutations(n);
        let order = perms.len();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mut table = vec![vec![0usize; order]; order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // (p·q)(x) = p(q(x))
                let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[i][j] = index(&comp);
            }
        }
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        GroupPresentation::new(&format!("S{n}"), table, labels).expect("valid")
    }

    /// Built-in group lookup by name: C1..C8, C2xC2, C4xC2, D3..D6, S3, S4.
    pub fn by_name(name: &str) -> Option<GroupPresentation> {
        if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
            if (1..=8).contains(&n) {
                return Some(cyclic(n));
            }
        }
        match name {
            "C2xC2" => Some(klein4()),
            "C4xC2" => Some(direct_product(&cyclic(4), &cyclic(2))),
            "D3" | "D4" | "D5" | "D6" => {
                let n = name[1..].parse().unwrap();
                Some(dihedral(n))
            }
            "S3" => Some(sym(3)),
            "S4" => Some(sym(4)),
            _ => None,
        }
    }
}

use groups::GroupPresentation;

/// The group algebra kG: grouplike basis, S(g) = g^{-1}.
pub fn group_algebra<K: Scalar>(g: &GroupPresentation, field: &K::Field) -> HopfData<K> {
    let n = g.order;
    let one = K::int(1, field);
    let mut mult = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = vec![(g.mul(i, j), one.clone())];
        }
    }
    let mut unit = vec![K::zero(); n];
    unit[g.identity] = one.clone();
    let comult = (0..n).map(|i| vec![(i, i, one.clone())]).collect();
    let counit = vec![one.clone(); n];
    let mut s = Matrix::zero(n, n);
    for i in 0..n {
        s[(g.inv(i), i)] = one.clone();
    }
    HopfData {
        name: format!("k[{}]", g.name),
        algebra: AlgebraData {
            dim: n,
            mult,
            unit,
            labels: g.labels.clone(),
            unit_laws: UnitLaws::TwoSided,
        },
        coalgebra: CoalgebraData {
            dim: n,
            comult,
            counit,
            counit_laws: CounitLaws::TwoSided,
        },
        antipode: Some(s),
    }
}

/// The dual group algebra (kG)* on the basis of indicator functions.
pub fn dual_group_algebra<K: Scalar>(g: &GroupPresentation, field: &K::Field) -> HopfData<K> {
    let mut h = group_algebra::<K>(g, field).dual();
    h.name = format!("k[{}]*", g.name);
    h.algebra.labels = g.labels.iter().map(|l| format!("p_{l}")).collect();
    h
}

/// Pointed rank-one Hopf algebra on an abelian group: basis γ x^a (a ∈ {0,1})
/// with x γ = χ(γ) γ x, x² = 0, Δx = x⊗1 + γ₀⊗x, for a character χ with
/// χ(γ₀) = -1. Basis index is `γ * 2 + a`.
pub fn pointed_rank_one<K: Scalar>(
    name: &str,
    g: &GroupPresentation,
    chi: &[K],
    gamma0: usize,
    field: &K::Field,
) -> Result<HopfData<K>, MathError> {
    if !g.is_abelian() {
        return Err(MathError::Precondition("group must be abelian".into()));
    }
    if chi.len() != g.order {
        return Err(MathError::Precondition("character length mismatch".into()));
    }
    for i in 0..g.order {
        for j in 0..g.order {
            if chi[g.mul(i, j)] != chi[i].clone() * chi[j].clone() {
                return Err(MathError::Precondition(format!(
                    "χ is not multiplicative at ({}, {})",
                    g.labels[i], g.labels[j]
                )));
            }
        }
    }
    if chi[g.identity] != K::int(1, field) {
        return Err(MathError::Precondition("χ(e) must be 1".into()));
    }
    if chi[gamma0] != K::int(-1, field) {
        return Err(MathError::Precondition("χ(γ₀) must be -1".into()));
    }
    let n = 2 * g.order;
    let idx = |gamma: usize, a: usize| gamma * 2 + a;
    let one = K::int(1, field);
    let mut mult = vec![Vec::new(); n * n];
    for g1 in 0..g.order {
        for a in 0..2 {
            for g2 in 0..g.order {
                for b in 0..2 {
                    let terms = if a + b >= 2 {
                        Vec::new()
                    } else {
                        let coeff = if a == 1 { chi[g2].clone() } else { one.clone() };
                        vec![(idx(g.mul(g1, g2), a + b), coeff)]
                    };
                    mult[idx(g1, a) * n + idx(g2, b)] = terms;
                }
            }
        }
    }
    let mut unit = vec![K::zero(); n];
    unit[idx(g.identity, 0)] = one.clone();
    let mut comult = vec![Vec::new(); n];
    let mut counit = vec![K::zero(); n];
    for gamma in 0..g.order {
        comult[idx(gamma, 0)] = vec![(idx(gamma, 0), idx(gamma, 0), one.clone())];
        counit[idx(gamma, 0)] = one.clone();
        comult[idx(gamma, 1)] = vec![
            (idx(gamma, 1), idx(gamma, 0), one.clone()),
            (idx(g.mul(gamma, gamma0), 0), idx(gamma, 1), one.clone()),
        ];
    }
    let mut s = Matrix::zero(n, n);
    for gamma in 0..g.order {
        s[(idx(g.inv(gamma), 0), idx(gamma, 0))] = one.clone();
        // S(γx) = -χ(γ)^{-1} γ₀^{-1} γ^{-1} x
        let target = g.mul(g.inv(gamma0), g.inv(gamma));
        let coeff = -(chi[gamma].inv().expect("character values are units"));
        s[(idx(target, 1), idx(gamma, 1))] = coeff;
    }
    let labels = (0..g.order)
        .flat_map(|gamma| {
            let gl = g.labels[gamma].clone();
            let xl = if gamma == g.identity {
                "x".to_string()
            } else {
                format!("{gl}x")
            };
            [gl, xl]
        })
        .collect();
    Ok(HopfData {
        name: name.to_string(),
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
        antipode: Some(s),
    })
}

/// Character on a group given by values on each element index.
fn indicator_character<K: Scalar>(
    g: &GroupPresentation,
    values: &[(usize, i64)],
    field: &K::Field,
) -> Vec<K> {
    let mut chi = vec![K::int(1, field); g.order];
    for (i, v) in values {
        chi[*i] = K::int(*v, field);
    }
    chi
}

/// Sweedler's four-dimensional Hopf algebra (characteristic ≠ 2).
pub fn h4<K: Scalar>(field: &K::Field) -> Result<HopfData<K>, MathError> {
    if K::characteristic(field) == 2 {
        return Err(MathError::Precondition("characteristic 2 not supported".into()));
    }
    let g = groups::cyclic(2);
    let chi = indicator_character(&g, &[(1, -1)], field);
    pointed_rank_one("H4", &g, &chi, 1, field)
}

/// The eight-dimensional pointed Hopf algebra on the Klein four group with
/// χ(g) = χ(h) = -1 and distinguished grouplike g.
pub fn a22<K: Scalar>(field: &K::Field) -> Result<HopfData<K>, MathError> {
    if K::characteristic(field) == 2 {
        return Err(MathError::Precondition("characteristic 2 not supported".into()));
    }
    let g = groups::klein4();
    let chi = indicator_character(&g, &[(1, -1), (2, -1), (3, 1)], field);
    pointed_rank_one("A22", &g, &chi, 1, field)
}

/// The eight-dimensional pointed Hopf algebra on C4 with χ(c) = -1 and
/// distinguished grouplike c.
pub fn a4prime<K: Scalar>(field: &K::Field) -> Result<HopfData<K>, MathError> {
    if K::characteristic(field) == 2 {
        return Err(MathError::Precondition("characteristic 2 not supported".into()));
    }
    let g = groups::cyclic(4);
    let chi = indicator_character(&g, &[(1, -1), (2, 1), (3, -1)], field);
    pointed_rank_one("A4'", &g, &chi, 1, field)
}

/// The sixteen-dimensional pointed Hopf algebra on C4×C2: χ(g) = q with
/// q² = -1, χ(h) = 1, distinguished grouplike g²h.
pub fn h16<K: Scalar>(field: &K::Field, q: &K) -> Result<HopfData<K>, MathError> {
    if q.clone() * q.clone() != K::int(-1, field) {
        return Err(MathError::Precondition(
            "h16 needs q with q² = -1 in the base field".into(),
        ));
    }
    let g = groups::direct_product(&groups::cyclic(4), &groups::cyclic(2));
    // Element (i, j) has index i*2 + j; χ(c^i d^j) = q^i.
    let mut chi = Vec::with_capacity(g.order);
    for i in 0..4 {
        for _j in 0..2 {
            let mut v = K::int(1, field);
            for _ in 0..i {
                v = v * q.clone();
            }
            chi.push(v);
        }
    }
    // γ₀ = g²h = (2, 1) -> index 5; χ(γ₀) = q² = -1.
    pointed_rank_one("H16", &g, &chi, 5, field)
}

fn inv_of_count<K: Scalar>(n: usize, field: &K::Field) -> Result<K, MathError> {
    K::from_ratio(1, n as i64, field).ok_or_else(|| {
        MathError::Precondition(format!(
            "the characteristic divides the subgroup order {n}"
        ))
    })
}

/// The pair with H = kG' acting on L = kG* through the indicator of a
/// subgroup N' ≤ G', and kG* coacting through z = Σ_{h∈N} p_h for a
/// subgroup N ≤ G.
pub fn pair_4_1<K: Scalar>(
    g: &GroupPresentation,
    n: &[usize],
    gprime: &GroupPresentation,
    nprime: &[usize],
    field: &K::Field,
) -> Result<PartialMatchedPair<K>, MathError> {
    if !g.is_subgroup(n) || !gprime.is_subgroup(nprime) {
        return Err(MathError::Precondition("N and N' must be subgroups".into()));
    }
    let h = group_algebra::<K>(gprime, field);
    let l = dual_group_algebra::<K>(g, field);
    let one = K::int(1, field);
    let mut lambda = vec![K::zero(); gprime.order];
    for &i in nprime {
        lambda[i] = one.clone();
    }
    let mut z = vec![K::zero(); g.order];
    for &i in n {
        z[i] = one.clone();
    }
    PartialMatchedPair::from_lambda_z("pair-4-1", h, l, lambda, z)
}

/// The pair with H = kG* acting on L = kG through the normalized indicator
/// of a normal subgroup N on the dual basis, and coacting through the
/// averaged subgroup sum z = (1/|N|)Σ_{g∈N} g.
pub fn pair_4_2<K: Scalar>(
    g: &GroupPresentation,
    n: &[usize],
    field: &K::Field,
) -> Result<PartialMatchedPair<K>, MathError> {
    if !g.is_subgroup(n) {
        return Err(MathError::Precondition("N must be a subgroup".into()));
    }
    let h = dual_group_algebra::<K>(g, field);
    let l = group_algebra::<K>(g, field);
    let size = inv_of_count::<K>(n.len(), field)?;
    let mut lambda = vec![K::zero(); g.order];
    let mut z = vec![K::zero(); g.order];
    for &i in n {
        lambda[i] = size.clone();
        z[i] = size.clone();
    }
    PartialMatchedPair::from_lambda_z("pair-4-2", h, l, lambda, z)
}

/// The pair with H = L = kG: λ the indicator of a subgroup N and z the
/// averaged sum over a normal subgroup W.
pub fn pair_kgkg<K: Scalar>(
    g: &GroupPresentation,
    n: &[usize],
    w: &[usize],
    field: &K::Field,
) -> Result<PartialMatchedPair<K>, MathError> {
    if !g.is_subgroup(n) || !g.is_subgroup(w) {
        return Err(MathError::Precondition("N and W must be subgroups".into()));
    }
    let h = group_algebra::<K>(g, field);
    let l = group_algebra::<K>(g, field);
    let one = K::int(1, field);
    let mut lambda = vec![K::zero(); g.order];
    for &i in n {
        lambda[i] = one.clone();
    }
    let size = inv_of_count::<K>(w.len(), field)?;
    let mut z = vec![K::zero(); g.order];
    for &i in w {
        z[i] = size.clone();
    }
    PartialMatchedPair::from_lambda_z("pair-kgkg", h, l, lambda, z)
}

/// The adjoint-style pair on a Hopf algebra with invertible antipode:
/// H^op acts on H by h⇀a = λ(h₂)S(h₁)ah₃ and H coacts on H^op by
/// ρ(h) = h₂⊗S(h₁)zh₃, for a convolution-idempotent-like λ and a central z.
pub fn pair_adjoint<K: Scalar>(
    h: &HopfData<K>,
    lambda: &[K],
    z: &[K],
) -> Result<PartialMatchedPair<K>, MathError> {
    let n = h.dim();
    if lambda.len() != n || z.len() != n {
        return Err(MathError::DimMismatch("λ/z length mismatch".into()));
    }
    let s = h
        .antipode
        .as_ref()
        .ok_or_else(|| MathError::Precondition("antipode required".into()))?;
    let s_op = SparseOp::from_matrix(s, vec![n], vec![n]);
    let com = h.coalgebra.comult_op();
    let mult = h.algebra.mult_op();
    let lam_op = SparseOp::functional(lambda);

    let mut act = Matrix::zero(n, n * n);
    for hh in 0..n {
        let split = Tensor::basis(vec![n], &[hh]).apply(0, &com).apply(1, &com);
        for a in 0..n {
            let col = split
                .apply(1, &lam_op)
                // [h₁, h₃] scaled by λ(h₂)
                .apply(0, &s_op)
                .apply(1, &SparseOp::insert(&h.basis_vec(a)))
                // [S(h₁), a, h₃]
                .apply(0, &mult)
                .apply(0, &mult)
                .to_flat_vec();
            for (r, c) in col.into_iter().enumerate() {
                act[(r, hh * n + a)] = c;
            }
        }
    }
    let mut coact = Matrix::zero(n * n, n);
    for hh in 0..n {
        let col = Tensor::basis(vec![n], &[hh])
            .apply(0, &com)
            .apply(1, &com)
            .apply(0, &s_op)
            .permute(&[1, 0, 2])
            // [h₂, S(h₁), h₃]
            .apply(2, &SparseOp::insert(z))
            // [h₂, S(h₁), z, h₃]
            .apply(1, &mult)
            .apply(1, &mult)
            .to_flat_vec();
        for (r, c) in col.into_iter().enumerate() {
            coact[(r, hh)] = c;
        }
    }
    PartialMatchedPair::from_parts(
        "pair-adjoint",
        h.opposite()?,
        h.clone(),
        PartialAction::new(n, n, act)?,
        PartialCoaction::new(n, n, coact)?,
    )
}

/// The adjoint pair on kS₃: λ the indicator of ⟨(12)⟩ and z the averaged
/// sum over A₃.
pub fn pair_adjoint_s3<K: Scalar>(field: &K::Field) -> Result<PartialMatchedPair<K>, MathError> {
    let g = groups::sym(3);
    let h = group_algebra::<K>(&g, field);
    let one = K::int(1, field);
    let mut lambda = vec![K::zero(); g.order];
    for i in g.subgroup_closure(&[g.index_of_label("(12)").expect("transposition")]) {
        lambda[i] = one.clone();
    }
    let third = inv_of_count::<K>(3, field)?;
    let mut z = vec![K::zero(); g.order];
    for i in g.subgroup_closure(&[g.index_of_label("(123)").expect("3-cycle")]) {
        z[i] = third.clone();
    }
    pair_adjoint(&h, &lambda, &z)
}

/// One hit of [`adjoint_pair_search`]: the subgroups whose indicator λ and
/// averaged sum z make the adjoint pair on kG satisfy all matched-pair laws.
#[derive(Clone, Debug)]
pub struct AdjointSearchHit {
    pub lambda_subgroup: Vec<usize>,
    pub z_subgroup: Vec<usize>,
}

/// Brute-force search for valid adjoint-pair data on a group algebra:
/// λ ranges over subgroup indicators and z over averaged subgroup sums
/// (skipping subgroups whose order the characteristic divides). Returns
/// every combination that passes the matched-pair and quasi-abelian laws;
/// an empty result means no such data exists in this family.
pub fn adjoint_pair_search<K: Scalar>(
    g: &GroupPresentation,
    field: &K::Field,
) -> Result<Vec<AdjointSearchHit>, MathError> {
    let h = group_algebra::<K>(g, field);
    let subgroups = g.all_subgroups();
    let one = K::int(1, field);
    let mut hits = Vec::new();
    for t in &subgroups {
        let mut lambda = vec![K::zero(); g.order];
        for &i in t {
            lambda[i] = one.clone();
        }
        for w in &subgroups {
            let avg = match inv_of_count::<K>(w.len(), field) {
                Ok(a) => a,
                Err(_) => continue,
            };
            let mut z = vec![K::zero(); g.order];
            for &i in w {
                z[i] = avg.clone();
            }
            let pair = pair_adjoint(&h, &lambda, &z)?;
            if pair.check_pmp()?.passed() && pair.check_quasi_abelian()?.passed() {
                hits.push(AdjointSearchHit {
                    lambda_subgroup: t.clone(),
                    z_subgroup: w.clone(),
                });
            }
        }
    }
    Ok(hits)
}

/// The self-pair on A₂,₂ with λ supported on {1, g} and z = (1+gh)/2.
pub fn pair_a22<K: Scalar>(field: &K::Field) -> Result<PartialMatchedPair<K>, MathError> {
    let h = a22::<K>(field)?;
    let l = a22::<K>(field)?;
    let one = K::int(1, field);
    let half = inv_of_count::<K>(2, field)?;
    let mut lambda = vec![K::zero(); 8];
    lambda[0] = one; // 1
    lambda[2] = K::int(1, field); // g
    let mut z = vec![K::zero(); 8];
    z[0] = half.clone(); // 1
    z[6] = half; // gh
    PartialMatchedPair::from_lambda_z("pair-a22", h, l, lambda, z)
}

/// The pair with H₁₆ acting on A₄' through the indicator of the grouplike
/// subgroup {1, h, g², g²h} and A₄' coacting through z = (1+c²)/2. Needs a
/// base field containing a square root of -1.
pub fn pair_a4prime<K: Scalar>(field: &K::Field) -> Result<PartialMatchedPair<K>, MathError> {
    let minus_one = K::int(-1, field);
    let coeffs = [K::int(1, field), K::zero(), K::int(1, field)];
    let roots = K::poly_roots(field, &coeffs);
    let q = roots
        .into_iter()
        .find(|r| r.clone() * r.clone() == minus_one)
        .ok_or_else(|| {
            MathError::Precondition("the base field has no square root of -1".into())
        })?;
    let h = h16::<K>(field, &q)?;
    let l = a4prime::<K>(field)?;
    let one = K::int(1, field);
    let half = inv_of_count::<K>(2, field)?;
    let mut lambda = vec![K::zero(); 16];
    for i in [0usize, 2, 8, 10] {
        lambda[i] = one.clone(); // 1, h, g², g²h
    }
    let mut z = vec![K::zero(); 8];
    z[0] = half.clone(); // 1
    z[4] = half; // c²
    PartialMatchedPair::from_lambda_z("pair-a4prime", h, l, lambda, z)
}

/// Which side of the Sweedler-algebra counterexample family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegativeMode {
    /// H = H₄ with λ = (1, 0, β, -β) on (1, c, x, xc); fails the λ law
    /// λ(h₁)h₂λ(h₃) = λ(h₁)h₂ for every β.
    Lambda,
    /// L = H₄ with z = 1/2 + c/2 + βxc; fails xz = zxz for every β.
    Z,
}

/// The negative-control family around the Sweedler algebra: for every β the
/// data fails a matched-pair law, so the construction must refuse it.
pub fn pair_h4_negative<K: Scalar>(
    field: &K::Field,
    beta: &K,
    mode: NegativeMode,
) -> Result<PartialMatchedPair<K>, MathError> {
    let half = inv_of_count::<K>(2, field)?;
    match mode {
        NegativeMode::Lambda => {
            let h = h4::<K>(field)?;
            let l = group_algebra::<K>(&groups::cyclic(2), field);
            // Basis order (1, x, c, cx).
            let lambda = vec![K::int(1, field), beta.clone(), K::zero(), -beta.clone()];
            let z = vec![half.clone(), half];
            PartialMatchedPair::from_lambda_z("pair-h4-neg-lambda", h, l, lambda, z)
        }
        NegativeMode::Z => {
            let h = a22::<K>(field)?;
            let l = h4::<K>(field)?;
            let mut lambda = vec![K::zero(); 8];
            lambda[0] = K::int(1, field);
            lambda[2] = K::int(1, field);
            // Basis order (1, x, c, cx).
            let z = vec![half.clone(), K::zero(), half, beta.clone()];
            PartialMatchedPair::from_lambda_z("pair-h4-neg-z", h, l, lambda, z)
        }
    }
}

/// Names and short descriptions of the built-in Hopf algebras.
pub fn hopf_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("kG", "group algebra; G is any of C1..C8, C2xC2, C4xC2, D3..D6, S3, S4"),
        ("kG*", "dual group algebra of the same groups"),
        ("h4", "Sweedler's 4-dimensional Hopf algebra"),
        ("a22", "pointed rank-one algebra A22 of dimension 8"),
        ("a4prime", "pointed rank-one algebra A4' of dimension 8"),
        ("h16", "16-dimensional algebra H16; needs a square root of -1"),
        ("h4xh4", "tensor square of Sweedler's algebra"),
        ("h4xa22", "tensor product of Sweedler's algebra with A22"),
    ]
}

/// Builds a named Hopf algebra from [`hopf_names`] over the given field.
/// Group algebras are spelled `kC4`, `kS3`, ...; duals carry a trailing `*`.
pub fn hopf_by_name<K: Scalar>(name: &str, field: &K::Field) -> Result<HopfData<K>, MathError> {
    if let Some(gname) = name.strip_prefix('k') {
        let (gname, dual) = match gname.strip_suffix('*') {
            Some(s) => (s, true),
            None => (gname, false),
        };
        if let Some(g) = groups::by_name(gname) {
            return Ok(if dual {
                dual_group_algebra::<K>(&g, field)
            } else {
                group_algebra::<K>(&g, field)
            });
        }
    }
    match name {
        "h4" => h4::<K>(field),
        "a22" => a22::<K>(field),
        "a4prime" => a4prime::<K>(field),
        "h16" => {
            let minus_one = K::int(-1, field);
            let coeffs = [K::int(1, field), K::zero(), K::int(1, field)];
            let q = K::poly_roots(field, &coeffs)
                .into_iter()
                .find(|r| r.clone() * r.clone() == minus_one)
                .ok_or_else(|| {
                    MathError::Precondition("the base field has no square root of -1".into())
                })?;
            h16::<K>(field, &q)
        }
        "h4xh4" => {
            let h = h4::<K>(field)?;
            Ok(h.tensor_with(&h))
        }
        "h4xa22" => Ok(h4::<K>(field)?.tensor_with(&a22::<K>(field)?)),
        _ => Err(MathError::Precondition(format!("unknown algebra name {name}"))),
    }
}

/// Names and short descriptions of the built-in pairs.
pub fn pair_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("4-1-c2", "kC2* with kC2 acting through N' = C2, z over N = {e}"),
        ("4-2-c4", "kC4 with kC4* acting, N = {e, c²}"),
        ("4-2-s3", "kS3 with kS3* acting, N = A3"),
        ("adjoint-s3", "kS3 with kS3^op acting adjointly, λ on <(12)>, z over A3"),
        ("kgkg-s3", "kS3 with kS3 acting, λ on <(12)>, z over A3"),
        ("a22", "A22 on itself, λ on {1, g}, z = (1+gh)/2"),
        ("a4prime", "A4' with H16 acting, λ on {1, h, g², g²h}, z = (1+c²)/2"),
        ("h4-neg-lambda", "negative control: H4 acting on kC2, λ = (1, 0, 1, -1)"),
        ("h4-neg-z", "negative control: A22 acting on H4, z = (1+c)/2 + xc"),
    ]
}

/// Builds a named pair from [`pair_names`] over the given field.
pub fn pair_by_name<K: Scalar>(
    name: &str,
    field: &K::Field,
) -> Result<PartialMatchedPair<K>, MathError> {
    match name {
        "4-1-c2" => {
            let c2 = groups::cyclic(2);
            pair_4_1::<K>(&c2, &[0], &c2, &[0, 1], field)
        }
        "4-2-c4" => pair_4_2::<K>(&groups::cyclic(4), &[0, 2], field),
        "4-2-s3" => {
            let g = groups::sym(3);
            let a3 = g.subgroup_closure(&[g.index_of_label("(123)").expect("3-cycle")]);
            pair_4_2::<K>(&g, &a3, field)
        }
        "adjoint-s3" => pair_adjoint_s3::<K>(field),
        "kgkg-s3" => {
            let g = groups::sym(3);
            let n = g.subgroup_closure(&[g.index_of_label("(12)").expect("transposition")]);
            let w = g.subgroup_closure(&[g.index_of_label("(123)").expect("3-cycle")]);
            pair_kgkg::<K>(&g, &n, &w, field)
        }
        "a22" => pair_a22::<K>(field),
        "a4prime" => pair_a4prime::<K>(field),
        "h4-neg-lambda" => {
            pair_h4_negative::<K>(field, &K::int(1, field), NegativeMode::Lambda)
        }
        "h4-neg-z" => pair_h4_negative::<K>(field, &K::int(1, field), NegativeMode::Z),
        _ => Err(MathError::Precondition(format!("unknown pair name {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExtField, QField, Rat};

    #[test]
    fn group_constructions_are_valid() {
        for name in ["C2", "C4", "C6", "C2xC2", "C4xC2", "D4", "D6", "S3", "S4"] {
            let g = groups::by_name(name).unwrap();
            assert_eq!(g.name, name);
        }
        let s3 = groups::sym(3);
        assert!(!s3.is_abelian());
        let a3 = s3.subgroup_closure(&[s3.index_of_label("(123)").unwrap()]);
        assert_eq!(a3.len(), 3);
        assert!(s3.is_normal(&a3));
        let t = s3.subgroup_closure(&[s3.index_of_label("(12)").unwrap()]);
        assert_eq!(t.len(), 2);
        assert!(s3.is_subgroup(&t) && !s3.is_normal(&t));
    }

    #[test]
    fn group_algebra_is_hopf() {
        let h = group_algebra::<Rat>(&groups::sym(3), &QField);
        assert!(h.check_hopf().passed());
        let d = dual_group_algebra::<Rat>(&groups::sym(3), &QField);
        assert!(d.check_hopf().passed());
    }

    #[test]
    fn pointed_rank_one_families_are_hopf() {
        let h4 = h4::<Rat>(&QField).unwrap();
        assert!(h4.check_hopf().passed(), "{}", h4.check_hopf().summary());
        assert_eq!(h4.dim(), 4);
        let a22 = a22::<Rat>(&QField).unwrap();
        assert!(a22.check_hopf().passed(), "{}", a22.check_hopf().summary());
        let a4p = a4prime::<Rat>(&QField).unwrap();
        assert!(a4p.check_hopf().passed(), "{}", a4p.check_hopf().summary());
    }

    #[test]
    fn h16_over_gaussian_rationals_and_gf5() {
        let f = ExtField::gaussian();
        let h = h16(&f, &f.gen()).unwrap();
        assert_eq!(h.dim(), 16);
        assert!(h.check_hopf().passed(), "{}", h.check_hopf().summary());
        let g5 = crate::scalar::GfField::new(5);
        let q = crate::scalar::Gf::new(2, &g5);
        let h5 = h16(&g5, &q).unwrap();
        assert!(h5.check_hopf().passed(), "{}", h5.check_hopf().summary());
    }

    #[test]
    fn h4_antipode_has_order_four() {
        let h = h4::<Rat>(&QField).unwrap();
        assert_eq!(h.antipode_order(), Some(4));
        assert_eq!(h.solve_antipode().unwrap(), h.antipode.clone().unwrap());
    }

    #[test]
    fn group_built_pairs_pass_the_matched_pair_laws() {
        for name in ["4-1-c2", "4-2-c4", "kgkg-s3"] {
            let pair = pair_by_name::<Rat>(name, &QField).unwrap();
            let rep = pair.check_pmp().unwrap();
            assert!(rep.passed(), "{name}: {}", rep.summary());
            let rep = pair.check_quasi_abelian().unwrap();
            assert!(rep.passed(), "{name}: {}", rep.summary());
        }
    }

    #[test]
    fn adjoint_pair_on_s3_is_a_matched_pair() {
        let pair = pair_adjoint_s3::<Rat>(&QField).unwrap();
        let rep = pair.check_components().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = pair.check_pmp().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = pair.check_quasi_abelian().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }

    #[test]
    fn pointed_rank_one_pairs_pass_the_matched_pair_laws() {
        let pair = pair_a22::<Rat>(&QField).unwrap();
        let rep = pair.check_pmp().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        let rep = pair.check_quasi_abelian().unwrap();
        assert!(rep.passed(), "{}", rep.summary());

        let g5 = crate::scalar::GfField::new(5);
        let pair = pair_a4prime::<crate::scalar::Gf>(&g5).unwrap();
        let rep = pair.check_pmp().unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }

    #[test]
    fn adjoint_search_on_s3_finds_exactly_the_normal_z_subgroups() {
        let g = groups::sym(3);
        assert_eq!(g.all_subgroups().len(), 6);
        let hits = adjoint_pair_search::<Rat>(&g, &QField).unwrap();
        assert!(!hits.is_empty());
        // z must average over a normal subgroup; λ is unconstrained here.
        for hit in &hits {
            assert!(g.is_normal(&hit.z_subgroup), "{:?}", hit.z_subgroup);
        }
        // The shipped instance is among the hits.
        let t = g.subgroup_closure(&[g.index_of_label("(12)").unwrap()]);
        let a3 = g.subgroup_closure(&[g.index_of_label("(123)").unwrap()]);
        assert!(hits
            .iter()
            .any(|h| h.lambda_subgroup == t && h.z_subgroup == a3));
    }

    #[test]
    fn negative_controls_fail_a_matched_pair_law() {
        for beta in [0i64, 1, -1, 2] {
            let b = Rat::int(beta, &QField);
            let lam = pair_h4_negative::<Rat>(&QField, &b, NegativeMode::Lambda).unwrap();
            assert!(
                !lam.check_lambda_z().unwrap().passed(),
                "λ mode should fail for β = {beta}"
            );
            assert!(crate::bismash::bismash(&lam).is_err());
            let z = pair_h4_negative::<Rat>(&QField, &b, NegativeMode::Z).unwrap();
            assert!(
                !z.check_lambda_z().unwrap().passed(),
                "z mode should fail for β = {beta}"
            );
            assert!(crate::bismash::bismash(&z).is_err());
        }
    }
}
