//! Finite groups given by multiplication tables, and permutations of
//! boundary components.

use std::fmt;

use thiserror::Error;

/// First failing group axiom found while validating a table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry ({row}, {col}) = {value} is not an element index")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("row {row} repeats element {value} (not a Latin square)")]
    NotLatinRow { row: usize, value: usize },
    #[error("column {col} repeats element {value} (not a Latin square)")]
    NotLatinColumn { col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {g} has no inverse")]
    NoInverse { g: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Checks every group axiom exhaustively; row `g`, column `h` holds `g*h`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupViolation> {
        let n = table.len();
        if n == 0 {
            return Err(GroupViolation::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupViolation::NotSquare {
                    row,
                    len: r.len(),
                    order: n,
                });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupViolation::EntryOutOfRange { row, col, value });
            }
        }
        for (row, r) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &value in r {
                if std::mem::replace(&mut seen[value], true) {
                    return Err(GroupViolation::NotLatinRow { row, value });
                }
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for r in &table {
                let value = r[col];
                if std::mem::replace(&mut seen[value], true) {
                    return Err(GroupViolation::NotLatinColumn { col, value });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupViolation::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupViolation::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or(GroupViolation::NoInverse { g })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(table).expect("cyclic table is a group")
    }

    /// Dihedral group of order `2n`; element `k + n*e` is `r^k s^e`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n > 0);
        let mul = |x: usize, y: usize| {
            let (a, e) = (x % n, x / n);
            let (b, f) = (y % n, y / n);
            let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
            k + n * ((e + f) % 2)
        };
        let table = (0..2 * n)
            .map(|x| (0..2 * n).map(|y| mul(x, y)).collect())
            .collect();
        FiniteGroup::from_table(table).expect("dihedral table is a group")
    }

    /// Quaternion group: index `u + 4*s` is `(-1)^s · [1, i, j, k][u]`.
    pub fn quaternion() -> FiniteGroup {
        // unit products as (unit, sign flip)
        const UNITS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let mul = |x: usize, y: usize| {
            let (u, flip) = UNITS[x % 4][y % 4];
            u + 4 * ((x / 4 + y / 4 + flip) % 2)
        };
        let table = (0..8)
            .map(|x| (0..8).map(|y| mul(x, y)).collect())
            .collect();
        FiniteGroup::from_table(table).expect("quaternion table is a group")
    }

    /// `G × H`; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let m = h.order();
        let n = g.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Whether `elems` is closed under products and inverses and contains the identity.
    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &g in elems {
            if g >= self.order() {
                return false;
            }
            member[g] = true;
        }
        member[self.identity]
            && elems
                .iter()
                .all(|&a| member[self.inverse(a)] && elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> bool {
        if !self.is_subgroup(elems) {
            return false;
        }
        let mut member = vec![false; self.order()];
        elems.iter().for_each(|&g| member[g] = true);
        self.elements().all(|x| {
            elems
                .iter()
                .all(|&h| member[self.mul(self.mul(x, h), self.inverse(x))])
        })
    }

    /// Left cosets `gH` of a subgroup, each sorted, ordered by smallest element.
    pub fn left_cosets(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut cosets = Vec::new();
        for g in self.elements() {
            if assigned[g] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            coset.dedup();
            coset.iter().for_each(|&x| assigned[x] = true);
            cosets.push(coset);
        }
        cosets
    }
}

/// Permutation of `{0, …, n-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Permutation(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for Permutation {
    /// One-line notation with 1-based images, e.g. `(2,1,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", imgs.join(","))
    }
}
