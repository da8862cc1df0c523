use std::collections::HashSet;

use num_rational::BigRational;

use super::FiniteGroup;
use crate::algebra::is_prime;
use crate::Result;

/// A sorted set of element indices of some group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset(Vec<u32>);

impl Subset {
    pub fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Subset(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&(x as u32)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }
}

/// What the central quotient `G/Z(G)` was recognized as.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientTag {
    ElemAbelianPSquared(u64),
    /// Dihedral of order `2m`.
    Dihedral(u64),
    Suzuki2,
    Other,
}

impl FiniteGroup {
    pub fn center(&self) -> Subset {
        let n = self.order();
        Subset((0..n).filter(|&x| (0..n).all(|y| self.commutes(x, y))).map(|x| x as u32).collect())
    }

    pub fn centralizer(&self, x: usize) -> Result<Subset> {
        self.check_index(x)?;
        Ok(Subset(
            (0..self.order()).filter(|&y| self.commutes(x, y)).map(|y| y as u32).collect(),
        ))
    }

    /// Number of distinct subsets `C_G(x)` as `x` ranges over `G`.
    pub fn centralizer_count(&self) -> usize {
        let n = self.order();
        let distinct: HashSet<Vec<u64>> = (0..n)
            .map(|x| {
                let mut bits = vec![0u64; n.div_ceil(64)];
                for y in 0..n {
                    if self.commutes(x, y) {
                        bits[y / 64] |= 1 << (y % 64);
                    }
                }
                bits
            })
            .collect();
        distinct.len()
    }

    /// Number of ordered pairs `(x, y)` with `xy = yx`.
    pub fn commuting_pairs(&self) -> u64 {
        let n = self.order();
        let mut count = n as u64;
        for x in 0..n {
            for y in x + 1..n {
                if self.commutes(x, y) {
                    count += 2;
                }
            }
        }
        count
    }

    pub fn commutativity_degree(&self) -> BigRational {
        let n = self.order() as u64;
        BigRational::new(self.commuting_pairs().into(), (n * n).into())
    }

    /// `Σ_x |C_G(x)| / |G|^2`, an independent route to the commutativity degree.
    pub fn commutativity_degree_by_centralizers(&self) -> BigRational {
        let n = self.order();
        let total: u64 = (0..n)
            .map(|x| self.centralizer(x).expect("index in range").len() as u64)
            .sum();
        BigRational::new(total.into(), ((n * n) as u64).into())
    }

    /// Coset index of every element, cosets numbered by smallest representative.
    fn central_cosets(&self) -> (Vec<usize>, Vec<usize>) {
        let z = self.center();
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for c in z.iter() {
                coset[self.mul(g, c)] = id;
            }
        }
        (coset, reps)
    }

    /// Cayley table of `G/Z(G)`; each coset is labeled by its smallest member.
    pub fn central_quotient(&self) -> FiniteGroup {
        let (coset, reps) = self.central_cosets();
        let labels = reps.iter().map(|&r| self.label(r).to_string()).collect();
        FiniteGroup::from_fn(reps.len(), |i, j| coset[self.mul(reps[i], reps[j])], labels)
            .expect("quotient by a normal subgroup is a group")
    }

    /// `m` such that `G/Z(G)` is dihedral of order `2m` (`m >= 3`).
    pub fn quotient_dihedral_m(&self) -> Option<u64> {
        dihedral_m(&self.central_quotient())
    }

    pub fn recognize_quotient(&self) -> QuotientTag {
        let q = self.central_quotient();
        let n = q.order();
        if let Some(p) = square_root_prime(n) {
            if (0..n).all(|x| x == q.identity() || q.element_order(x) as u64 == p) {
                return QuotientTag::ElemAbelianPSquared(p);
            }
        }
        if let Some(m) = dihedral_m(&q) {
            return QuotientTag::Dihedral(m);
        }
        if n == 20 && is_suzuki2(&q) {
            return QuotientTag::Suzuki2;
        }
        QuotientTag::Other
    }
}

fn square_root_prime(n: usize) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r * r == n as u64 && is_prime(r)).then_some(r)
}

/// Searches for `r` of order `m`, `s` of order 2 outside `<r>` with `s r s = r^-1`.
fn dihedral_m(q: &FiniteGroup) -> Option<u64> {
    let n = q.order();
    if n % 2 != 0 || n < 6 {
        return None;
    }
    let m = n / 2;
    let orders: Vec<usize> = (0..n).map(|x| q.element_order(x)).collect();
    let r = (0..n).find(|&x| orders[x] == m)?;
    let mut rotations = vec![false; n];
    let mut x = q.identity();
    for _ in 0..m {
        rotations[x] = true;
        x = q.mul(x, r);
    }
    // Every element outside <r> must be a reflection in a dihedral group.
    let ok = (0..n)
        .filter(|&s| !rotations[s])
        .all(|s| orders[s] == 2 && q.conjugate(r, s) == q.inv(r));
    ok.then_some(m as u64)
}

/// Order-20 group with `a^5 = b^4 = 1`, `b^-1 a b = a^2`.
fn is_suzuki2(q: &FiniteGroup) -> bool {
    let n = q.order();
    let fives: Vec<usize> = (0..n).filter(|&x| q.element_order(x) == 5).collect();
    let fours: Vec<usize> = (0..n).filter(|&x| q.element_order(x) == 4).collect();
    fives.iter().any(|&a| {
        let a2 = q.mul(a, a);
        fours.iter().any(|&b| q.mul(q.mul(q.inv(b), a), b) == a2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupFamilySpec;
    use crate::rational::ratio;

    fn build(text: &str) -> FiniteGroup {
        text.parse::<GroupFamilySpec>().unwrap().build(2048).unwrap()
    }

    #[test]
    fn centers() {
        assert_eq!(build("dihedral:m=3").center().len(), 1);
        assert_eq!(build("dicyclic:m=2").center().len(), 2);
        assert_eq!(build("gl2:p=3,n=1").center().len(), 2);
        assert_eq!(build("cyclic:n=7").center().len(), 7);
        assert_eq!(build("hanakiU:n=2").center().len(), 4);
    }

    #[test]
    fn centralizers() {
        let d8 = build("dihedral:m=4");
        let a = d8.find("a").unwrap();
        let c = d8.centralizer(a).unwrap();
        let names: Vec<&str> = c.iter().map(|x| d8.label(x)).collect();
        assert_eq!(names, ["1", "a", "a^2", "a^3"]);
        assert_eq!(d8.centralizer(d8.identity()).unwrap().len(), 8);
        assert!(d8.centralizer(8).is_err());
    }

    #[test]
    fn centralizer_counts() {
        assert_eq!(build("cyclic:n=6").centralizer_count(), 1);
        assert_eq!(build("dihedral:m=4").centralizer_count(), 4);
        assert_eq!(build("dihedral:m=3").centralizer_count(), 5);
    }

    #[test]
    fn commutativity_degrees() {
        assert_eq!(build("cyclic:n=5").commutativity_degree(), ratio(1, 1));
        assert_eq!(build("dihedral:m=4").commutativity_degree(), ratio(5, 8));
        assert_eq!(build("dihedral:m=3").commutativity_degree(), ratio(1, 2));
        for d in ["suzuki2", "a4", "pq:p=3,q=7", "s4"] {
            let g = build(d);
            assert_eq!(g.commutativity_degree(), g.commutativity_degree_by_centralizers());
        }
    }

    #[test]
    fn quotients() {
        let q8 = build("dicyclic:m=2").central_quotient();
        assert_eq!(q8.order(), 4);
        assert!((0..4).all(|x| x == q8.identity() || q8.element_order(x) == 2));
        assert_eq!(build("cyclic:n=4").central_quotient().order(), 1);
        assert_eq!(build("metacyclic:m=5,n=2").central_quotient().order(), 10);
        assert_eq!(build("metacyclic:m=6,n=2").central_quotient().order(), 6);
    }

    #[test]
    fn recognition() {
        assert_eq!(build("dihedral:m=4").recognize_quotient(), QuotientTag::ElemAbelianPSquared(2));
        assert_eq!(build("hanakiV:p=3,n=1").recognize_quotient(), QuotientTag::ElemAbelianPSquared(3));
        assert_eq!(build("metacyclic:m=5,n=2").recognize_quotient(), QuotientTag::Dihedral(5));
        assert_eq!(build("metacyclic:m=6,n=1").recognize_quotient(), QuotientTag::Dihedral(3));
        assert_eq!(build("suzuki2").recognize_quotient(), QuotientTag::Suzuki2);
        assert_eq!(build("product:inner=suzuki2,k=3").recognize_quotient(), QuotientTag::Suzuki2);
        assert_eq!(build("a4").recognize_quotient(), QuotientTag::Other);
        assert_eq!(build("pq:p=2,q=5").recognize_quotient(), QuotientTag::Dihedral(5));
    }
}
