use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GroupFamilySpec;
use crate::{Error, Result};

/// Orders up to this are checked for associativity on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite group given by its full Cayley table.
///
/// Elements are the indices `0..order`; `table[i * order + j]` is the index of
/// `g_i * g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    labels: Vec<String>,
    family: Option<GroupFamilySpec>,
}

#[derive(Serialize, Deserialize)]
struct GroupDump {
    order: usize,
    identity: usize,
    labels: Vec<String>,
    table: Vec<Vec<u32>>,
}

impl FiniteGroup {
    /// Validates `table` (rows of element indices) and wraps it as a group.
    pub fn from_table(table: Vec<Vec<u32>>, labels: Vec<String>) -> Result<Self> {
        let order = table.len();
        if table.iter().any(|row| row.len() != order) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        let flat = table.into_iter().flatten().collect();
        Self::from_flat(order, flat, labels)
    }

    /// Builds the table from `mul(i, j)` on indices.
    pub fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let mut flat = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                flat.push(mul(i, j) as u32);
            }
        }
        Self::from_flat(order, flat, labels)
    }

    /// Builds the table of a closed set of concrete elements under `mul`.
    /// Element `i` of the result is `elements[i]`.
    pub fn from_elements<T: Eq + Hash>(
        elements: &[T],
        mul: impl Fn(&T, &T) -> T,
        label: impl Fn(&T) -> String,
    ) -> Result<Self> {
        let index: HashMap<&T, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x, i as u32))
            .collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidTable("duplicate elements".into()));
        }
        let n = elements.len();
        let mut flat = Vec::with_capacity(n * n);
        for x in elements {
            for y in elements {
                let z = mul(x, y);
                let k = index
                    .get(&z)
                    .ok_or_else(|| Error::InvalidTable("set is not closed".into()))?;
                flat.push(*k);
            }
        }
        Self::from_flat(n, flat, elements.iter().map(label).collect())
    }

    fn from_flat(order: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if labels.len() != order {
            return Err(Error::InvalidTable(format!(
                "{} labels for {order} elements",
                labels.len()
            )));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        check_latin(order, &table)?;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] as usize == j))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;
        if (0..order).any(|j| table[j * order + identity] as usize != j) {
            return Err(Error::InvalidTable("identity is one-sided".into()));
        }
        let mut inverses = vec![0u32; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            // Latin rows guarantee exactly one right inverse.
            let j = (0..order)
                .find(|&j| table[i * order + j] as usize == identity)
                .unwrap();
            if table[j * order + i] as usize != identity {
                return Err(Error::InvalidTable(format!("element {i} has no two-sided inverse")));
            }
            *inv = j as u32;
        }
        let group = FiniteGroup {
            order,
            table,
            identity,
            inverses,
            labels,
            family: None,
        };
        group.check_associative()?;
        Ok(group)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = |i: usize, j: usize, k: usize| self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k));
        let fail = |i, j, k| Err(Error::InvalidTable(format!("not associative at ({i}, {j}, {k})")));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for i in 0..n {
                let row_i = &self.table[i * n..(i + 1) * n];
                for j in 0..n {
                    let ij = row_i[j] as usize;
                    let row_ij = &self.table[ij * n..(ij + 1) * n];
                    let row_j = &self.table[j * n..(j + 1) * n];
                    for k in 0..n {
                        if row_ij[k] != row_i[row_j[k] as usize] {
                            return fail(i, j, k);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(i, j, k) {
                    return fail(i, j, k);
                }
            }
        }
        Ok(())
    }

    pub fn with_family(mut self, family: GroupFamilySpec) -> Self {
        self.family = Some(family);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.table[a * self.order + b] == self.table[b * self.order + a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn family(&self) -> Option<&GroupFamilySpec> {
        self.family.as_ref()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Index of the element with the given label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn to_json(&self) -> String {
        let dump = GroupDump {
            order: self.order,
            identity: self.identity,
            labels: self.labels.clone(),
            table: self.table.chunks(self.order).map(<[u32]>::to_vec).collect(),
        };
        serde_json::to_string(&dump).expect("group dump serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dump: GroupDump =
            serde_json::from_str(text).map_err(|e| Error::parse("group JSON", e.to_string()))?;
        if dump.order != dump.table.len() {
            return Err(Error::InvalidTable("order does not match table".into()));
        }
        let g = Self::from_table(dump.table, dump.labels)?;
        if g.identity != dump.identity {
            return Err(Error::InvalidTable("declared identity is wrong".into()));
        }
        Ok(g)
    }
}

fn check_latin(order: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for i in 0..order {
        for j in 0..order {
            let x = table[i * order + j] as usize;
            if seen[x] == i {
                return Err(Error::InvalidTable(format!("row {i} repeats an entry")));
            }
            seen[x] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..order {
        for i in 0..order {
            let x = table[i * order + j] as usize;
            if seen[x] == j {
                return Err(Error::InvalidTable(format!("column {j} repeats an entry")));
            }
            seen[x] = j;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |i, j| (i + j) % n, (0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn cyclic_table() {
        let g = cyclic(5);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(2), 3);
        assert_eq!(g.element_order(1), 5);
        assert!(g.is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        let labels = || vec!["x".to_string(), "y".to_string()];
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![1, 1]], labels()).is_err());
        // Ragged rows.
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1]], labels()).is_err());
        // Latin square with identity but not associative.
        let quasi = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(quasi, (0..5).map(|i| i.to_string()).collect());
        assert!(matches!(err, Err(Error::InvalidTable(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = cyclic(4);
        let text = g.to_json();
        assert!(text.starts_with(r#"{"order":4,"identity":0,"labels":["0","1","2","3"],"table":[[0,1,2,3],"#));
        assert_eq!(FiniteGroup::from_json(&text).unwrap(), g);
    }

    #[test]
    fn from_elements_of_residues() {
        let units: Vec<u32> = vec![1, 2, 4, 5, 7, 8];
        let g = FiniteGroup::from_elements(&units, |a, b| a * b % 9, |a| a.to_string()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(g.find("2").unwrap()), 6);
        let not_closed = FiniteGroup::from_elements(&[1u32, 2], |a, b| a * b % 9, |a| a.to_string());
        assert!(not_closed.is_err());
    }
}
