#![allow(dead_code)]

use nalgebra::Vector3;
use num::{BigRational, Zero};
use rand::Rng;

use wigneroid::cohomology::LieAlgebra;
use wigneroid::groupoid::{transport_covector, LorentzMatrix, PoincareMorphism, WignerMorphism};
use wigneroid::spacetime::{MetricSpec, SpacetimePoint, TetradCovector};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Rank by dense fraction-exact Gaussian elimination.
pub fn oracle_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let t = &f * &m[rank][c];
                m[r][c] -= t;
            }
        }
        rank += 1;
    }
    rank
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // position of (i, j), i < j, in lexicographic order
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// `ω ↦` coefficient vector of `ω(X_a, X_b)` as a linear functional on 2-cochains.
fn add_omega(row: &mut [Q], n: usize, a: usize, b: usize, coeff: &Q) {
    if a == b || coeff.is_zero() {
        return;
    }
    if a < b {
        row[pair_index(n, a, b)] += coeff;
    } else {
        row[pair_index(n, b, a)] -= coeff;
    }
}

/// Coboundary `δ: C¹ → C²`, `(δα)(X_i, X_j) = −α([X_i, X_j])`.
pub fn oracle_d1(alg: &LieAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((0..n).map(|k| -alg.structure(i, j, k).clone()).collect());
        }
    }
    out
}

/// Coboundary `δ: C² → C³`,
/// `(δω)(X, Y, Z) = −ω([X, Y], Z) + ω([X, Z], Y) − ω([Y, Z], X)`.
pub fn oracle_d2(alg: &LieAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let np = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![Q::zero(); np];
                for l in 0..n {
                    add_omega(&mut row, n, l, k, &-alg.structure(i, j, l).clone());
                    add_omega(&mut row, n, l, j, alg.structure(i, k, l));
                    add_omega(&mut row, n, l, i, &-alg.structure(j, k, l).clone());
                }
                out.push(row);
            }
        }
    }
    out
}

/// `dim H² = dim ker δ₂ − rank δ₁`.
pub fn oracle_h2_dim(alg: &LieAlgebra) -> usize {
    let n = alg.dim();
    let np = n * n.saturating_sub(1) / 2;
    let ker = np - oracle_rank(oracle_d2(alg));
    ker - oracle_rank(oracle_d1(alg))
}

/// Applies `δ₂` (oracle form) to a packed 2-cochain.
pub fn oracle_apply_d2(alg: &LieAlgebra, omega: &[Q]) -> Vec<Q> {
    oracle_d2(alg).iter().map(|row| row.iter().zip(omega).map(|(a, b)| a * b).sum()).collect()
}

/// Whether a packed 2-cochain is a coboundary.
pub fn oracle_is_exact(alg: &LieAlgebra, omega: &[Q]) -> bool {
    let n = alg.dim();
    let d1 = oracle_d1(alg);
    let cols: Vec<Vec<Q>> = (0..n).map(|c| d1.iter().map(|r| r[c].clone()).collect()).collect();
    let base = oracle_rank(cols.clone());
    let mut with = cols;
    with.push(omega.to_vec());
    oracle_rank(with) == base
}

/// Semidirect product `ℝ ⋉_A ℝ³`: `[X0, Y_i] = Σ_j A_ji Y_j`.
pub fn semidirect(a: &[[i64; 3]; 3]) -> LieAlgebra {
    let mut entries = Vec::new();
    for i in 0..3 {
        for (j, row) in a.iter().enumerate() {
            if row[i] != 0 {
                entries.push((0, i + 1, j + 1, q(row[i])));
            }
        }
    }
    LieAlgebra::from_entries(4, &entries).unwrap()
}

fn aff2() -> LieAlgebra {
    LieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap()
}

/// A random 4-dimensional algebra: a known Lie algebra in a random rational basis.
pub fn random_algebra4<R: Rng>(rng: &mut R) -> LieAlgebra {
    let base = match rng.gen_range(0..7) {
        0 => LieAlgebra::su2().direct_sum(&LieAlgebra::abelian(1)),
        1 => LieAlgebra::e2().direct_sum(&LieAlgebra::abelian(1)),
        2 => LieAlgebra::heisenberg3().direct_sum(&LieAlgebra::abelian(1)),
        3 => LieAlgebra::abelian(4),
        4 => aff2().direct_sum(&aff2()),
        5 => wigneroid::cohomology::central_extension(
            &LieAlgebra::e2(),
            &[wigneroid::cohomology::TwoCochain::elementary(3, 1, 2, q(1))],
        )
        .unwrap(),
        _ => {
            let mut a = [[0i64; 3]; 3];
            for row in a.iter_mut() {
                for x in row.iter_mut() {
                    *x = rng.gen_range(-2..=2);
                }
            }
            semidirect(&a)
        }
    };
    loop {
        let p: Vec<Vec<Q>> = (0..4).map(|_| (0..4).map(|_| qf(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect()).collect();
        if oracle_rank(p.clone()) == 4 {
            return base.change_basis(&p).unwrap();
        }
    }
}

/// Kruskal chart point with `r ∈ (0.1M, 20M)` and `θ` away from the poles.
pub fn random_kruskal_point<R: Rng>(rng: &mut R) -> [f64; 4] {
    let xi: f64 = rng.gen_range(0.05..10.0);
    let w: f64 = (1.0 - xi) * xi.exp();
    let s = rng.gen_range(-2.0..2.0);
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let (u, v) = if w >= 0.0 {
        (sign * w.sqrt() * f64::exp(s), sign * w.sqrt() * f64::exp(-s))
    } else {
        (-sign * (-w).sqrt() * f64::exp(s), sign * (-w).sqrt() * f64::exp(-s))
    };
    [u, v, rng.gen_range(0.1..std::f64::consts::PI - 0.1), rng.gen_range(0.0..std::f64::consts::TAU)]
}

pub fn random_point<R: Rng>(rng: &mut R, metric: MetricSpec) -> SpacetimePoint {
    let coords = match metric {
        MetricSpec::Minkowski => [0; 4].map(|_| rng.gen_range(-10.0..10.0)),
        MetricSpec::SchwarzschildKruskal { .. } => random_kruskal_point(rng),
    };
    SpacetimePoint::new(metric, coords).unwrap()
}

pub fn random_unit<R: Rng>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

pub fn random_lorentz<R: Rng>(rng: &mut R) -> LorentzMatrix {
    let b = LorentzMatrix::boost(random_unit(rng), rng.gen_range(-1.5..1.5)).unwrap();
    let r = LorentzMatrix::rotation(random_unit(rng), rng.gen_range(-3.0..3.0)).unwrap();
    b.compose(&r)
}

pub fn random_covector<R: Rng>(rng: &mut R) -> TetradCovector {
    TetradCovector([0; 4].map(|_| rng.gen_range(-5.0..5.0)))
}

/// A Wigner morphism out of `(x, p)` to a random point.
pub fn random_morphism_from<R: Rng>(rng: &mut R, x: SpacetimePoint, p: TetradCovector) -> WignerMorphism {
    let y = random_point(rng, x.metric);
    let lambda = random_lorentz(rng);
    WignerMorphism::new(PoincareMorphism::new(x, y, lambda).unwrap(), p).unwrap()
}

/// Three composable morphisms `α: ξ₀ → ξ₁`, `β: ξ₁ → ξ₂`, `γ: ξ₂ → ξ₃`.
pub fn random_triple<R: Rng>(rng: &mut R, metric: MetricSpec) -> [WignerMorphism; 3] {
    let x = random_point(rng, metric);
    let p = random_covector(rng);
    let a = random_morphism_from(rng, x, p);
    let b = random_morphism_from(rng, a.target().base, a.p_tgt());
    let c = random_morphism_from(rng, b.target().base, b.p_tgt());
    [a, b, c]
}

/// Max-entry difference of the Lorentz matrices and end covectors.
pub fn morphism_distance(a: &WignerMorphism, b: &WignerMorphism) -> f64 {
    let dl = (a.lambda().matrix() - b.lambda().matrix()).amax();
    let dp = (a.p_src().as_vector() - b.p_src().as_vector()).amax();
    let dq = (a.p_tgt().as_vector() - b.p_tgt().as_vector()).amax();
    let same_points = a.source().base == b.source().base && a.target().base == b.target().base;
    if same_points {
        dl.max(dp).max(dq)
    } else {
        f64::INFINITY
    }
}

pub fn transported_p2_residual(lambda: &LorentzMatrix, p: &TetradCovector) -> f64 {
    let out = transport_covector(lambda, p).unwrap();
    let p2 = |v: &TetradCovector| v.0[0] * v.0[0] - v.0[1] * v.0[1] - v.0[2] * v.0[2] - v.0[3] * v.0[3];
    (p2(&out) - p2(p)).abs() / p.euclidean_norm_squared().max(1.0)
}
