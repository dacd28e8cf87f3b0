use std::collections::BTreeMap;

use num::{Signed, Zero};

use super::algebra::{check_jacobi, LieAlgebra};
use super::{linalg, Q};
use crate::{Error, Result};

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// An antisymmetric bilinear form `ω_{ij} = ω(X_i, X_j)`, stored for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    dim: usize,
    vals: Vec<Q>,
}

impl TwoCochain {
    pub fn zero(dim: usize) -> Self {
        TwoCochain { dim, vals: vec![Q::zero(); dim * dim.saturating_sub(1) / 2] }
    }

    /// Values in the packed `(i < j)` lexicographic order.
    pub fn from_packed(dim: usize, vals: Vec<Q>) -> Result<Self> {
        if vals.len() != dim * dim.saturating_sub(1) / 2 {
            return Err(Error::BadParams(format!("expected {} packed values", dim * dim.saturating_sub(1) / 2)));
        }
        Ok(TwoCochain { dim, vals })
    }

    /// From a full matrix; must be antisymmetric.
    pub fn from_matrix(m: &[Vec<Q>]) -> Result<Self> {
        let n = m.len();
        for i in 0..n {
            if m[i].len() != n || !m[i][i].is_zero() {
                return Err(Error::BadParams("2-cochain matrix must be square with zero diagonal".into()));
            }
            for j in 0..n {
                if m[i][j] != -m[j][i].clone() {
                    return Err(Error::BadParams("2-cochain matrix must be antisymmetric".into()));
                }
            }
        }
        Ok(TwoCochain { dim: n, vals: pairs(n).map(|(i, j)| m[i][j].clone()).collect() })
    }

    /// The form with a single entry `ω(X_i, X_j) = v`.
    pub fn elementary(dim: usize, i: usize, j: usize, v: Q) -> Self {
        let mut w = Self::zero(dim);
        w.set(i, j, v);
        w
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn packed(&self) -> &[Q] {
        &self.vals
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Q::zero(),
            Less => self.vals[pair_index(self.dim, i, j)].clone(),
            Greater => -self.vals[pair_index(self.dim, j, i)].clone(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert_ne!(i, j);
        if i < j {
            self.vals[pair_index(self.dim, i, j)] = v;
        } else {
            self.vals[pair_index(self.dim, j, i)] = -v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(Zero::is_zero)
    }

    /// Nonzero entries keyed `"(Xi,Xj)"` with `i < j`, values as `"p/q"`.
    pub fn labelled(&self, names: &[String]) -> BTreeMap<String, String> {
        pairs(self.dim)
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .map(|(i, j)| (format!("({},{})", names[i], names[j]), self.get(i, j).to_string()))
            .collect()
    }
}

/// An alternating trilinear form, stored for `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCochain {
    dim: usize,
    vals: BTreeMap<(usize, usize, usize), Q>,
}

impl ThreeCochain {
    pub fn get(&self, i: usize, j: usize, k: usize) -> Q {
        let mut idx = [i, j, k];
        if i == j || j == k || i == k {
            return Q::zero();
        }
        // sort with parity
        let mut odd = false;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    odd = !odd;
                }
            }
        }
        let v = self.vals.get(&(idx[0], idx[1], idx[2])).cloned().unwrap_or_else(Q::zero);
        if odd {
            -v
        } else {
            v
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.vals.values().all(Zero::is_zero)
    }
}

/// Global sign applied to a coboundary map; the cohomology does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, q: Q) -> Q {
        match self {
            Sign::Plus => q,
            Sign::Minus => -q,
        }
    }
}

/// Matrix of `δ: C¹ → C²`, `(δα)(X_i, X_j) = −α([X_i, X_j])`. Rows are
/// pairs `i < j`, columns are basis indices.
pub fn d1_matrix(alg: &LieAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    pairs(n).map(|(i, j)| (0..n).map(|k| -alg.structure(i, j, k).clone()).collect()).collect()
}

/// Matrix of `δ: C² → C³`,
/// `(δω)(X, Y, Z) = −ω([X,Y],Z) + ω([X,Z],Y) − ω([Y,Z],X)`.
/// Rows are triples `i < j < k`, columns pairs `a < b`.
pub fn d2_matrix(alg: &LieAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let n_pairs = n * n.saturating_sub(1) / 2;
    triples(n)
        .map(|(i, j, k)| {
            let mut row = vec![Q::zero(); n_pairs];
            // coefficient · ω([X_a, X_b], X_c)
            for (coeff, a, b, c) in [(-1, i, j, k), (1, i, k, j), (-1, j, k, i)] {
                for m in 0..n {
                    let s = alg.structure(a, b, m);
                    if s.is_zero() || m == c {
                        continue;
                    }
                    let (lo, hi, sign) = if m < c { (m, c, coeff) } else { (c, m, -coeff) };
                    let term = s * Q::from_integer(sign.into());
                    row[pair_index(n, lo, hi)] += term;
                }
            }
            row
        })
        .collect()
}

fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
        .collect()
}

/// Coboundary of a 1-cochain `α` (coordinates in the dual basis).
pub fn d1(alg: &LieAlgebra, alpha: &[Q]) -> TwoCochain {
    assert_eq!(alpha.len(), alg.dim());
    TwoCochain { dim: alg.dim(), vals: mat_vec(&d1_matrix(alg), alpha) }
}

/// Coboundary of a 2-cochain.
pub fn d2(alg: &LieAlgebra, omega: &TwoCochain) -> ThreeCochain {
    assert_eq!(omega.dim, alg.dim());
    let vals = mat_vec(&d2_matrix(alg), &omega.vals);
    ThreeCochain { dim: alg.dim(), vals: triples(alg.dim()).zip(vals).collect() }
}

/// `H²(𝔤, ℝ)` with explicit representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub dim_h2: usize,
    /// Closed forms independent modulo exact ones, in reduced echelon form
    /// relative to the coboundaries.
    pub basis: Vec<TwoCochain>,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
}

pub fn h2(alg: &LieAlgebra) -> Result<CohomologyResult> {
    h2_with_signs(alg, Sign::Plus, Sign::Plus)
}

/// H² computed with the coboundary maps scaled by the given signs.
pub fn h2_with_signs(alg: &LieAlgebra, s1: Sign, s2: Sign) -> Result<CohomologyResult> {
    check_jacobi(alg)?;
    let n = alg.dim();
    let n_pairs = n * n.saturating_sub(1) / 2;
    let flip = |m: Vec<Vec<Q>>, s: Sign| -> Vec<Vec<Q>> {
        m.into_iter().map(|r| r.into_iter().map(|x| s.apply(x)).collect()).collect()
    };
    let dm1 = flip(d1_matrix(alg), s1);
    let dm2 = flip(d2_matrix(alg), s2);

    let cocycles = linalg::nullspace(&dm2, n_pairs);

    // image of d1: spanned by its columns
    let mut image: Vec<Vec<Q>> = (0..n).map(|c| dm1.iter().map(|r| r[c].clone()).collect()).collect();
    let image_pivots = linalg::rref(&mut image);
    image.truncate(image_pivots.len());

    let mut reduced: Vec<Vec<Q>> = cocycles
        .iter()
        .map(|z| {
            let mut v = z.clone();
            for (row, &pc) in image.iter().zip(&image_pivots) {
                if v[pc].is_zero() {
                    continue;
                }
                let f = v[pc].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
            v
        })
        .collect();
    let pivots = linalg::rref(&mut reduced);
    let basis: Vec<TwoCochain> =
        reduced.into_iter().take(pivots.len()).map(|vals| TwoCochain { dim: n, vals }).collect();

    debug_assert_eq!(basis.len(), cocycles.len() - image_pivots.len());
    Ok(CohomologyResult {
        dim_h2: basis.len(),
        basis,
        dim_cocycles: cocycles.len(),
        dim_coboundaries: image_pivots.len(),
    })
}

/// `𝔤 ⊕ ℝ^r` with `[X̄, Ȳ] = ([X, Y], ω₁(X, Y), …, ω_r(X, Y))`; the new basis
/// vectors come last and are central.
pub fn central_extension(alg: &LieAlgebra, cocycles: &[TwoCochain]) -> Result<LieAlgebra> {
    let n = alg.dim();
    for (index, w) in cocycles.iter().enumerate() {
        if w.dim != n {
            return Err(Error::BadParams(format!("cocycle #{index} has dimension {} ≠ {n}", w.dim)));
        }
        if !d2(alg, w).is_zero() {
            return Err(Error::NotClosed { index });
        }
    }
    let r = cocycles.len();
    let mut entries = Vec::new();
    for (i, j) in pairs(n) {
        for k in 0..n {
            let c = alg.structure(i, j, k);
            if !c.is_zero() {
                entries.push((i, j, k, c.clone()));
            }
        }
        for (a, w) in cocycles.iter().enumerate() {
            let v = w.get(i, j);
            if !v.is_zero() {
                entries.push((i, j, n + a, v));
            }
        }
    }
    let mut names = alg.names().to_vec();
    for a in 0..r {
        let base = if r == 1 { "E".to_string() } else { format!("E{}", a + 1) };
        let mut name = base.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    LieAlgebra::from_entries(n + r, &entries)?.with_names(names)
}

impl CohomologyResult {
    /// Normalises every representative so its first nonzero entry is positive.
    pub fn positive_leading(&self) -> Vec<TwoCochain> {
        self.basis
            .iter()
            .map(|w| match w.vals.iter().find(|v| !v.is_zero()) {
                Some(v) if v.is_negative() => TwoCochain { dim: w.dim, vals: w.vals.iter().map(|x| -x.clone()).collect() },
                _ => w.clone(),
            })
            .collect()
    }
}
