use crate::{Error, Result};

/// A finite group given by its multiplication table; elements are `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    /// Elements as permutations of `0..n`, for symmetric groups.
    permutations: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not closed".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { name: name.into(), table, identity, inverses, permutations: None })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/n with element `k` ↦ `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { name: format!("Z/{n}"), table, identity: 0, inverses: (0..n).map(|a| (n - a) % n).collect(), permutations: None }
    }

    /// The symmetric group S_n, elements in lexicographic order of their
    /// one-line notation; the product is composition `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n));
        let mut perms = vec![(0..n).collect::<Vec<_>>()];
        loop {
            let mut p = perms.last().unwrap().clone();
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>())).collect())
            .collect();
        let inverses = perms
            .iter()
            .map(|s| {
                let mut inv = vec![0; n];
                for (i, &si) in s.iter().enumerate() {
                    inv[si] = i;
                }
                index(&inv)
            })
            .collect();
        FiniteGroup { name: format!("S{n}"), table, identity: 0, inverses, permutations: Some(perms) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn permutation(&self, g: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|p| p[g].as_slice())
    }

    /// Sign of a permutation element; `None` for non-permutation groups.
    pub fn sign(&self, g: usize) -> Option<i32> {
        let p = self.permutation(g)?;
        let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_pass_validation() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(3), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)] {
            let again = FiniteGroup::from_table(g.name(), g.table.clone()).unwrap();
            assert_eq!(again.identity, g.identity);
            assert_eq!(again.inverses, g.inverses);
        }
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
    }

    #[test]
    fn s3_is_nonabelian_with_signs() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(s3.elements().any(|a| s3.elements().any(|b| s3.mul(a, b) != s3.mul(b, a))));
        let odd = s3.elements().filter(|&g| s3.sign(g) == Some(-1)).count();
        assert_eq!(odd, 3);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroup::from_table("x", vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![0, 2], vec![1, 0]]).is_err());
        assert!(FiniteGroup::from_table("x", vec![]).is_err());
    }
}
