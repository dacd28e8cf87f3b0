//! Unitary representations of finite groups and of finite gauge groupoids.

use std::f64::consts::TAU;

use nalgebra::DVector;

use super::{c, max_abs, nullspace, unitarity_defect, CMat, C64};
use crate::groupoid::{FiniteGroup, GaugeGroupoid, GaugeMorphism};
use crate::{Error, Result};

const UNITARY_TOL: f64 = 1e-10;
const NULL_TOL: f64 = 1e-9;

pub const MAX_FIBER_DIM: usize = 8;
pub const MAX_GROUP_ORDER: usize = 24;

fn real(m: &nalgebra::DMatrix<f64>) -> CMat {
    m.map(|x| c(x, 0.0))
}

/// A unitary representation `g ↦ T(g)` of a finite group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRep {
    group: FiniteGroup,
    dim: usize,
    mats: Vec<CMat>,
}

impl GroupRep {
    /// Checks shape, unitarity and the homomorphism property.
    pub fn new(group: FiniteGroup, mats: Vec<CMat>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::BadParams(format!("{} matrices for a group of order {}", mats.len(), group.order())));
        }
        let dim = mats.first().map_or(0, |m| m.nrows());
        for (g, m) in mats.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::BadParams(format!("matrix of element {g} is not {dim}×{dim}")));
            }
            let defect = unitarity_defect(m);
            if defect > UNITARY_TOL {
                return Err(Error::NotUnitary(format!("element {g}: ‖T†T − I‖ = {defect:e}")));
            }
        }
        for a in group.elements() {
            for b in group.elements() {
                let defect = max_abs(&(&mats[a] * &mats[b] - &mats[group.mul(a, b)]));
                if defect > UNITARY_TOL {
                    return Err(Error::BadParams(format!("T({a})T({b}) ≠ T({a}·{b}), defect {defect:e}")));
                }
            }
        }
        Ok(GroupRep { group, dim, mats })
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let mats = vec![CMat::identity(1, 1); group.order()];
        GroupRep { group, dim: 1, mats }
    }

    /// `k ↦ e^{2πi·k·charge/n}` on ℤ/n.
    pub fn cyclic_character(n: usize, charge: i64) -> Result<Self> {
        let mats = (0..n)
            .map(|k| {
                let arg = TAU * (k as f64) * (charge as f64) / n as f64;
                CMat::from_element(1, 1, c(arg.cos(), arg.sin()))
            })
            .collect();
        Self::new(FiniteGroup::cyclic(n), mats)
    }

    pub fn sign(group: FiniteGroup) -> Result<Self> {
        let mats = group
            .elements()
            .map(|g| group.sign(g).map(|s| CMat::from_element(1, 1, c(s as f64, 0.0))))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::BadParams(format!("{} is not a permutation group", group.name())))?;
        Self::new(group, mats)
    }

    /// Permutation matrices `P(σ) e_i = e_{σ(i)}`.
    pub fn permutation(group: FiniteGroup) -> Result<Self> {
        let mats = group
            .elements()
            .map(|g| {
                group.permutation(g).map(|p| {
                    let mut m = CMat::zeros(p.len(), p.len());
                    for (i, &pi) in p.iter().enumerate() {
                        m[(pi, i)] = c(1.0, 0.0);
                    }
                    m
                })
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::BadParams(format!("{} is not a permutation group", group.name())))?;
        Self::new(group, mats)
    }

    /// Standard representation: the permutation action on the sum-zero
    /// hyperplane, written in the Helmert basis as `Bᵀ P(g) B`.
    pub fn standard(group: FiniteGroup) -> Result<Self> {
        let perm = Self::permutation(group)?;
        let n = perm.dim;
        if n < 2 {
            return Err(Error::BadParams("standard representation needs at least 2 points".into()));
        }
        let b = real(&nalgebra::DMatrix::from_fn(n, n - 1, |i, j| {
            let k = (j + 1) as f64;
            let norm = (k * (k + 1.0)).sqrt();
            match i.cmp(&(j + 1)) {
                std::cmp::Ordering::Less => 1.0 / norm,
                std::cmp::Ordering::Equal => -k / norm,
                std::cmp::Ordering::Greater => 0.0,
            }
        }));
        let mats = perm.mats.iter().map(|p| b.adjoint() * p * &b).collect();
        Self::new(perm.group, mats)
    }

    /// Left regular representation `L(g) e_h = e_{gh}`.
    pub fn regular(group: FiniteGroup) -> Self {
        let k = group.order();
        let mats = group
            .elements()
            .map(|g| {
                let mut m = CMat::zeros(k, k);
                for h in group.elements() {
                    m[(group.mul(g, h), h)] = c(1.0, 0.0);
                }
                m
            })
            .collect();
        GroupRep { group, dim: k, mats }
    }

    pub fn direct_sum(&self, other: &GroupRep) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::BadParams("direct sum of representations of different groups".into()));
        }
        let d = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = CMat::zeros(d, d);
                m.view_mut((0, 0), (self.dim, self.dim)).copy_from(a);
                m.view_mut((self.dim, self.dim), (other.dim, other.dim)).copy_from(b);
                m
            })
            .collect();
        Ok(GroupRep { group: self.group.clone(), dim: d, mats })
    }

    /// `g ↦ U T(g) U†`.
    pub fn conjugate(&self, u: &CMat) -> Result<Self> {
        if u.nrows() != self.dim || unitarity_defect(u) > UNITARY_TOL {
            return Err(Error::NotUnitary("conjugating matrix is not a unitary of the right size".into()));
        }
        let mats = self.mats.iter().map(|m| u * m * u.adjoint()).collect();
        Ok(GroupRep { group: self.group.clone(), dim: self.dim, mats })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CMat {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.mats
    }

    pub fn character(&self, g: usize) -> C64 {
        self.mats[g].trace()
    }
}

/// `Σ|χ(g)|² / |G|`, the dimension of the commutant.
pub fn character_commutant_dim(t: &GroupRep) -> f64 {
    t.group.elements().map(|g| t.character(g).norm_sqr()).sum::<f64>() / t.group.order() as f64
}

fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Basis of `{X : B_i X = X A_i for all i}`.
pub fn intertwiner_space(a: &[CMat], b: &[CMat]) -> Vec<CMat> {
    let (Some(a0), Some(b0)) = (a.first(), b.first()) else { return Vec::new() };
    let (da, db) = (a0.nrows(), b0.nrows());
    let ia = CMat::identity(da, da);
    let ib = CMat::identity(db, db);
    let blocks: Vec<CMat> = a.iter().zip(b).map(|(ai, bi)| kron(&ia, bi) - kron(&ai.transpose(), &ib)).collect();
    let mut system = CMat::zeros(blocks.len() * da * db, da * db);
    for (i, blk) in blocks.iter().enumerate() {
        system.rows_mut(i * da * db, da * db).copy_from(blk);
    }
    nullspace(&system, NULL_TOL).into_iter().map(|v| CMat::from_column_slice(db, da, v.as_slice())).collect()
}

/// Nonzero combination of a basis with fixed generic coefficients.
fn generic_combination(basis: &[CMat]) -> Option<CMat> {
    let first = basis.first()?;
    let mut x = CMat::zeros(first.nrows(), first.ncols());
    for (k, b) in basis.iter().enumerate() {
        let t = k as f64 + 1.0;
        x += b * c((1.7 * t).cos() + 0.5, (2.3 * t).sin());
    }
    Some(x)
}

/// Unitary `U` with `B(g) U = U A(g)`, if the representations are equivalent.
pub fn find_equivalence(a: &GroupRep, b: &GroupRep) -> Option<CMat> {
    if a.group != b.group || a.dim != b.dim {
        return None;
    }
    let x = generic_combination(&intertwiner_space(&a.mats, &b.mats))?;
    let svd = x.svd(true, true);
    if svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min) < 1e-8 {
        return None;
    }
    let u = svd.u? * svd.v_t?;
    let residual = a.mats.iter().zip(&b.mats).map(|(am, bm)| max_abs(&(bm * &u - &u * am))).fold(0.0, f64::max);
    (residual < 1e-8).then_some(u)
}

/// A unitary representation of a finite gauge groupoid: one `d×d` matrix per
/// morphism, in trivialized frames.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupoidRep {
    groupoid: GaugeGroupoid,
    dim: usize,
    mats: Vec<CMat>,
}

impl GroupoidRep {
    /// Checks unitarity of every matrix and functoriality on every composable pair.
    pub fn new(groupoid: GaugeGroupoid, mats: Vec<CMat>) -> Result<Self> {
        if mats.len() != groupoid.n_morphisms() {
            return Err(Error::BadParams(format!("{} matrices for {} morphisms", mats.len(), groupoid.n_morphisms())));
        }
        let dim = mats.first().map_or(0, |m| m.nrows());
        for m in &mats {
            let defect = unitarity_defect(m);
            if m.nrows() != dim || defect > UNITARY_TOL {
                return Err(Error::NotUnitary(format!("‖Φ†Φ − I‖ = {defect:e}")));
            }
        }
        let rep = GroupoidRep { groupoid, dim, mats };
        let defect = rep.functoriality_defect();
        if defect > UNITARY_TOL {
            return Err(Error::BadParams(format!("not functorial, defect {defect:e}")));
        }
        Ok(rep)
    }

    pub fn groupoid(&self) -> &GaugeGroupoid {
        &self.groupoid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, m: &GaugeMorphism) -> &CMat {
        &self.mats[self.groupoid.index(m)]
    }

    /// `max ‖Φ(β∘α) − Φ(β)Φ(α)‖` over all composable pairs.
    pub fn functoriality_defect(&self) -> f64 {
        let g = &self.groupoid;
        let mut worst = 0.0_f64;
        for alpha in g.morphisms() {
            for beta in g.morphisms().filter(|b| b.source == alpha.target) {
                let composed = g.compose(&beta, &alpha).expect("composable by construction");
                let d = max_abs(&(self.matrix(&composed) - self.matrix(&beta) * self.matrix(&alpha)));
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.mats.iter().map(unitarity_defect).fold(0.0, f64::max)
    }

    /// `Φ'(y, g, x) = U_y Φ(y, g, x) U_x†`.
    pub fn gauge_transform(&self, us: &[CMat]) -> Result<Self> {
        if us.len() != self.groupoid.n_objects() || us.iter().any(|u| u.nrows() != self.dim || unitarity_defect(u) > UNITARY_TOL) {
            return Err(Error::NotUnitary("gauge transformation needs one unitary per object".into()));
        }
        let mats = self.groupoid.morphisms().map(|m| &us[m.target] * self.matrix(&m) * us[m.source].adjoint()).collect();
        Ok(GroupoidRep { groupoid: self.groupoid.clone(), dim: self.dim, mats })
    }

    /// Largest change of `|⟨ψ, φ⟩|² / (‖ψ‖²‖φ‖²)` under any morphism, over the
    /// given vector pairs.
    pub fn transition_defect(&self, pairs: &[(DVector<C64>, DVector<C64>)]) -> f64 {
        let mut worst = 0.0_f64;
        for m in self.groupoid.morphisms() {
            let phi = self.matrix(&m);
            for (u, v) in pairs {
                let before = transition_probability(u, v);
                let after = transition_probability(&(phi * u), &(phi * v));
                worst = worst.max((before - after).abs());
            }
        }
        worst
    }
}

/// Transition probability between the rays of two nonzero vectors.
pub fn transition_probability(u: &DVector<C64>, v: &DVector<C64>) -> f64 {
    u.dotc(v).norm_sqr() / (u.norm_squared() * v.norm_squared())
}

fn check_group(g: &GaugeGroupoid, t: &GroupRep) -> Result<()> {
    if g.group() != t.group() {
        return Err(Error::BadParams(format!(
            "representation of {} cannot be induced to a gauge groupoid of {}",
            t.group().name(),
            g.group().name()
        )));
    }
    Ok(())
}

/// Induction with the canonical section `α_x = (x, e, x₀)`: `Φ(y, g, x) = T(g)`.
pub fn induce_groupoid_rep(g: &GaugeGroupoid, t: &GroupRep) -> Result<GroupoidRep> {
    let identity = vec![g.group().identity(); g.n_objects()];
    induce_with_section(g, t, &identity)
}

/// Induction with section `α_x = (x, h_x, x₀)`: `Φ(y, g, x) = T(h_y⁻¹ g h_x)`.
pub fn induce_with_section(g: &GaugeGroupoid, t: &GroupRep, section: &[usize]) -> Result<GroupoidRep> {
    check_group(g, t)?;
    if section.len() != g.n_objects() || section.iter().any(|&h| h >= g.group().order()) {
        return Err(Error::BadParams("section must give one group element per object".into()));
    }
    let grp = g.group();
    let mats = g
        .morphisms()
        .map(|m| t.matrix(grp.mul(grp.mul(grp.inv(section[m.target]), m.elem), section[m.source])).clone())
        .collect();
    GroupoidRep::new(g.clone(), mats)
}

/// The isotropy representation at `x0`.
pub fn restrict_rep(rep: &GroupoidRep, x0: usize) -> Result<GroupRep> {
    if x0 >= rep.groupoid.n_objects() {
        return Err(Error::BadParams(format!("object {x0} out of range")));
    }
    let grp = rep.groupoid.group().clone();
    let mats = grp.elements().map(|h| rep.matrix(&GaugeMorphism::new(x0, h, x0)).clone()).collect();
    GroupRep::new(grp, mats)
}

/// Per-object unitaries `U_x` with `U_y a(β) = b(β) U_x`, built from an
/// intertwiner of the isotropy representations at object 0.
pub fn groupoid_equivalence(a: &GroupoidRep, b: &GroupoidRep) -> Option<Vec<CMat>> {
    if a.groupoid != b.groupoid || a.dim != b.dim || a.groupoid.n_objects() == 0 {
        return None;
    }
    let u0 = find_equivalence(&restrict_rep(a, 0).ok()?, &restrict_rep(b, 0).ok()?)?;
    let e = a.groupoid.group().identity();
    let us: Vec<CMat> = (0..a.groupoid.n_objects())
        .map(|x| {
            let alpha = GaugeMorphism::new(x, e, 0);
            b.matrix(&alpha) * &u0 * a.matrix(&alpha).adjoint()
        })
        .collect();
    let residual = a
        .groupoid
        .morphisms()
        .map(|m| max_abs(&(&us[m.target] * a.matrix(&m) - b.matrix(&m) * &us[m.source])))
        .fold(0.0, f64::max);
    (residual < 1e-8).then_some(us)
}

/// A proper invariant subbundle: orthonormal columns spanning a subspace of
/// each fiber.
#[derive(Debug, Clone)]
pub struct InvariantSubbundle {
    pub fibers: Vec<CMat>,
    pub rank: usize,
    /// `max ‖(I − V_y V_y†) Φ(β) V_x‖` over all morphisms.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub commutant_dim: usize,
    pub witness: Option<InvariantSubbundle>,
}

/// Brute-force irreducibility: the commutant `{C_x : C_y Φ(β) = Φ(β) C_x}` is
/// computed over every morphism. A non-scalar commutant yields an invariant
/// subbundle from an eigenspace of a Hermitian commutant element.
pub fn is_irreducible(rep: &GroupoidRep) -> Result<Irreducibility> {
    let g = &rep.groupoid;
    let (d, n) = (rep.dim, g.n_objects());
    if d > MAX_FIBER_DIM || g.group().order() > MAX_GROUP_ORDER {
        return Err(Error::TooLarge(format!(
            "fiber dimension {d} or group order {} exceeds the brute-force limits ({MAX_FIBER_DIM}, {MAX_GROUP_ORDER})",
            g.group().order()
        )));
    }
    if d == 0 || n == 0 {
        return Ok(Irreducibility { irreducible: false, commutant_dim: 0, witness: None });
    }
    let dd = d * d;
    let id = CMat::identity(d, d);
    let mut system = CMat::zeros(g.n_morphisms() * dd, n * dd);
    for (row, m) in g.morphisms().enumerate() {
        let phi = rep.matrix(&m);
        let left = kron(&phi.transpose(), &id);
        let right = kron(&id, phi);
        let mut blk = system.view_mut((row * dd, m.target * dd), (dd, dd));
        blk += left;
        let mut blk = system.view_mut((row * dd, m.source * dd), (dd, dd));
        blk -= right;
    }
    let basis = nullspace(&system, NULL_TOL);
    let commutant_dim = basis.len();
    if commutant_dim <= 1 {
        return Ok(Irreducibility { irreducible: true, commutant_dim, witness: None });
    }
    let family = |v: &DVector<C64>| -> Vec<CMat> { (0..n).map(|x| CMat::from_column_slice(d, d, &v.as_slice()[x * dd..(x + 1) * dd])).collect() };
    let witness = basis
        .iter()
        .flat_map(|v| {
            let cs = family(v);
            let herm = cs.iter().map(|c0| c0 + c0.adjoint()).collect::<Vec<_>>();
            let skew = cs.iter().map(|c0| (c0 - c0.adjoint()) * c(0.0, 1.0)).collect::<Vec<_>>();
            [herm, skew]
        })
        .find_map(|h| eigenspace_witness(rep, &h[0]))
        .expect("a commutant of dimension > 1 contains a non-scalar Hermitian element");
    Ok(Irreducibility { irreducible: false, commutant_dim, witness: Some(witness) })
}

fn eigenspace_witness(rep: &GroupoidRep, h0: &CMat) -> Option<InvariantSubbundle> {
    let eig = h0.clone().symmetric_eigen();
    let vals = &eig.eigenvalues;
    let scale = vals.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let cols: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] - lo <= 1e-8 * scale).collect();
    if cols.len() == vals.len() {
        return None;
    }
    let mut v0 = CMat::zeros(rep.dim, cols.len());
    for (j, &i) in cols.iter().enumerate() {
        v0.set_column(j, &eig.eigenvectors.column(i));
    }
    let g = &rep.groupoid;
    let e = g.group().identity();
    let fibers: Vec<CMat> = (0..g.n_objects()).map(|x| rep.matrix(&GaugeMorphism::new(x, e, 0)) * &v0).collect();
    let id = CMat::identity(rep.dim, rep.dim);
    let residual = g
        .morphisms()
        .map(|m| {
            let vy = &fibers[m.target];
            max_abs(&((&id - vy * vy.adjoint()) * rep.matrix(&m) * &fibers[m.source]))
        })
        .fold(0.0, f64::max);
    Some(InvariantSubbundle { fibers, rank: cols.len(), residual })
}

/// Irreducibility of a group representation, as the one-object groupoid.
pub fn is_irreducible_group(t: &GroupRep) -> Result<Irreducibility> {
    let g = GaugeGroupoid::new(1, t.group.clone())?;
    is_irreducible(&induce_groupoid_rep(&g, t)?)
}
