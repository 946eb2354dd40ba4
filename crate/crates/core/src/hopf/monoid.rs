//! Finite semigroups, monoids and groups given by Cayley tables.

use crate::error::{Error, Result};

/// A finite semigroup. When `identity` is set it is element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: Option<usize>,
}

impl FiniteMonoid {
    /// Validate a Cayley table. Element 0 is taken as the identity when it
    /// acts as one; otherwise the semigroup has no identity.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidTable(format!("{} labels for {n} elements", labels.len())));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(Error::InvalidTable(format!("entry ({i}, {j}) = {} is out of range", row[j])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative: ({}·{})·{} ≠ {}·({}·{})",
                            labels[a], labels[b], labels[c], labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n).all(|j| table[0][j] == j && table[j][0] == j).then_some(0);
        Ok(FiniteMonoid { name: name.into(), labels, table, identity })
    }

    /// Like [`FiniteMonoid::new`] but insists that element 0 is an identity.
    pub fn with_identity(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let m = Self::new(name, labels, table)?;
        if m.identity.is_none() {
            return Err(Error::InvalidTable("element 0 is not a two-sided identity".into()));
        }
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let monoid = FiniteMonoid::new(name, labels, table).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        Self::from_monoid(monoid)
    }

    pub fn from_monoid(monoid: FiniteMonoid) -> Result<Self> {
        if monoid.identity.is_none() {
            return Err(Error::InvalidGroup("element 0 is not an identity".into()));
        }
        let n = monoid.order();
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| monoid.table[a][b] == 0 && monoid.table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return Err(Error::InvalidGroup(format!("{} has no inverse", monoid.labels[a]))),
            }
        }
        Ok(FiniteGroup { monoid, inverse })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn name(&self) -> &str {
        self.monoid.name()
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    pub fn labels(&self) -> &[String] {
        self.monoid.labels()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("{prefix}{i}") }).collect()
}

/// Cyclic group `Z_n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(format!("Z{n}"), numbered("g", n), table).expect("cyclic group table")
}

pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::new("trivial", vec!["e".into()], vec![vec![0]]).expect("trivial group table")
}

/// Klein four-group, element `2a+b` for `(a, b) ∈ Z₂×Z₂`.
pub fn klein_four() -> FiniteGroup {
    let table = (0..4).map(|x: usize| (0..4).map(|y: usize| x ^ y).collect()).collect();
    let labels = vec!["e".into(), "b".into(), "a".into(), "ab".into()];
    FiniteGroup::new("Z2xZ2", labels, table).expect("Klein four table")
}

/// Symmetric group on three letters, permutations in lexicographic order
/// (identity first), composed as `(p·q)(i) = p(q(i))`.
pub fn symmetric3() -> FiniteGroup {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table = perms
        .iter()
        .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    let labels = perms.iter().map(|p| format!("{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
    FiniteGroup::new("S3", labels, table).expect("S3 table")
}

/// `{a, b}` with `xy = x`: a semigroup without identity.
pub fn left_zero_semigroup() -> FiniteMonoid {
    FiniteMonoid::new("left-zero", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![1, 1]])
        .expect("left-zero table")
}

/// `{e, a, b}` with `xy = y` on `{a, b}` and `e` the identity.
pub fn right_zero_with_identity() -> FiniteMonoid {
    FiniteMonoid::with_identity(
        "right-zero+1",
        vec!["e".into(), "a".into(), "b".into()],
        vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]],
    )
    .expect("right-zero table")
}

/// `{1, 0}` under multiplication.
pub fn one_zero_monoid() -> FiniteMonoid {
    FiniteMonoid::with_identity("one-zero", vec!["1".into(), "0".into()], vec![vec![0, 1], vec![1, 1]])
        .expect("{1,0} table")
}
