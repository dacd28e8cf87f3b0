use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{linalg, Q};
use crate::{Error, Result};

/// A finite-dimensional real Lie algebra given by rational structure
/// constants `[X_i, X_j] = Σ_k c^k_{ij} X_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Q>,
    names: Vec<String>,
}

/// One structure constant in the JSON exchange format; `val` is `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub val: String,
}

/// `{"dim":3,"c":[{"i":0,"j":1,"k":2,"val":"1"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub dim: usize,
    pub c: Vec<StructureEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl LieAlgebra {
    /// The abelian algebra ℝⁿ.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![Q::zero(); dim * dim * dim],
            names: (0..dim).map(|i| format!("X{i}")).collect(),
        }
    }

    /// Builds an algebra from the constants with `i < j` or `i > j`; the
    /// antisymmetric partner is filled in. Conflicting entries are rejected.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Q)]) -> Result<Self> {
        let mut alg = Self::abelian(dim);
        let mut seen = vec![false; dim * dim * dim];
        for (i, j, k, val) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!("index ({i},{j},{k}) out of range for dim {dim}")));
            }
            if i == j {
                if !val.is_zero() {
                    return Err(Error::InvalidAlgebra(format!("c^{k}_{{{i}{i}}} must vanish")));
                }
                continue;
            }
            let (a, b) = (alg.idx(i, j, k), alg.idx(j, i, k));
            if seen[a] && alg.c[a] != *val {
                return Err(Error::InvalidAlgebra(format!("conflicting values for c^{k}_{{{i}{j}}}")));
            }
            seen[a] = true;
            seen[b] = true;
            alg.c[a] = val.clone();
            alg.c[b] = -val.clone();
        }
        Ok(alg)
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!("expected {} basis names, got {}", self.dim, names.len())));
        }
        self.names = names;
        Ok(self)
    }

    /// 𝔢(2) on the basis `(J, P1, P2)`: `[J,P1] = P2`, `[J,P2] = −P1`, `[P1,P2] = 0`.
    pub fn e2() -> Self {
        let one = Q::one();
        Self::from_entries(3, &[(0, 1, 2, one.clone()), (0, 2, 1, -one)])
            .and_then(|a| a.with_names(["J", "P1", "P2"]))
            .expect("valid preset")
    }

    /// 𝔰𝔲(2): `c^k_{ij} = ε_{ijk}`.
    pub fn su2() -> Self {
        let one = Q::one();
        Self::from_entries(3, &[(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (2, 0, 1, one)])
            .and_then(|a| a.with_names(["L1", "L2", "L3"]))
            .expect("valid preset")
    }

    /// The 3-dimensional Heisenberg algebra `[X, Y] = Z`.
    pub fn heisenberg3() -> Self {
        Self::from_entries(3, &[(0, 1, 2, Q::one())])
            .and_then(|a| a.with_names(["X", "Y", "Z"]))
            .expect("valid preset")
    }

    /// Named presets: `e2`, `su2`, `heisenberg3`, `abelian:n`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "e2" => Ok(Self::e2()),
            "su2" => Ok(Self::su2()),
            "heisenberg3" => Ok(Self::heisenberg3()),
            other => {
                let n = other
                    .strip_prefix("abelian:")
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::Parse(format!("unknown algebra preset `{other}`")))?;
                Ok(Self::abelian(n))
            }
        }
    }

    pub fn from_json(spec: &StructureConstantsJson) -> Result<Self> {
        let entries = spec
            .c
            .iter()
            .map(|e| {
                let val = Q::from_str(e.val.trim()).map_err(|_| Error::Parse(format!("bad rational `{}`", e.val)))?;
                Ok((e.i, e.j, e.k, val))
            })
            .collect::<Result<Vec<_>>>()?;
        let alg = Self::from_entries(spec.dim, &entries)?;
        match &spec.names {
            Some(names) => alg.with_names(names.clone()),
            None => Ok(alg),
        }
    }

    /// Nonzero constants with `i < j`, ordered by `(i, j, k)`.
    pub fn to_json(&self) -> StructureConstantsJson {
        let mut c = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let v = self.structure(i, j, k);
                    if !v.is_zero() {
                        c.push(StructureEntry { i, j, k, val: v.to_string() });
                    }
                }
            }
        }
        StructureConstantsJson { dim: self.dim, c, names: Some(self.names.clone()) }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `c^k_{ij}`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[self.idx(i, j, k)]
    }

    /// Bracket of two elements given in basis coordinates.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Structure constants in the basis `Y_a = Σ_i P_{ia} X_i`.
    pub fn change_basis(&self, p: &[Vec<Q>]) -> Result<Self> {
        let n = self.dim;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAlgebra("change of basis must be n×n".into()));
        }
        // invert P by row-reducing [P | I]
        let mut aug: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row = p[i].clone();
                row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let pivots = linalg::rref(&mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::InvalidAlgebra("change of basis is singular".into()));
        }
        let p_inv: Vec<Vec<Q>> = aug.iter().map(|r| r[n..].to_vec()).collect();
        let column = |a: usize| -> Vec<Q> { (0..n).map(|i| p[i][a].clone()).collect() };
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let br = self.bracket(&column(a), &column(b));
                for (cc, row) in p_inv.iter().enumerate() {
                    let v: Q = row.iter().zip(&br).map(|(x, y)| x * y).sum();
                    if !v.is_zero() {
                        entries.push((a, b, cc, v));
                    }
                }
            }
        }
        Self::from_entries(n, &entries)
    }

    /// `self ⊕ other` as Lie algebras.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Self {
        let n = self.dim;
        let mut entries = Vec::new();
        for (alg, off) in [(self, 0), (other, n)] {
            for i in 0..alg.dim {
                for j in i + 1..alg.dim {
                    for k in 0..alg.dim {
                        let v = alg.structure(i, j, k);
                        if !v.is_zero() {
                            entries.push((i + off, j + off, k + off, v.clone()));
                        }
                    }
                }
            }
        }
        let mut out = Self::from_entries(n + other.dim, &entries).expect("direct sum of valid algebras");
        out.names = self.names.iter().chain(&other.names).cloned().collect();
        out
    }
}

/// Exact Jacobi check; reports the first `(i, j, k, l)` (lexicographic over
/// `i < j < k`, then `l`) whose cyclic sum is nonzero.
pub fn check_jacobi(alg: &LieAlgebra) -> Result<()> {
    let n = alg.dim;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in 0..n {
                    let mut sum = Q::zero();
                    for m in 0..n {
                        sum += alg.structure(i, j, m) * alg.structure(m, k, l)
                            + alg.structure(j, k, m) * alg.structure(m, i, l)
                            + alg.structure(k, i, m) * alg.structure(m, j, l);
                    }
                    if !sum.is_zero() {
                        return Err(Error::Jacobi { i, j, k, l });
                    }
                }
            }
        }
    }
    Ok(())
}
