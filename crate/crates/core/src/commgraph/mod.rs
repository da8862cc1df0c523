//! The commuting graph of a finite group: vertices are the non-central
//! elements, edges join distinct commuting pairs.

mod matrix;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

pub use matrix::{IntMatrix, MatrixKind};

use crate::groups::FiniteGroup;
use crate::{Error, Result};

/// A simple graph stored as packed adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingGraph {
    /// Group element index of each vertex, increasing.
    vertices: Vec<u32>,
    labels: Vec<String>,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

/// Sizes of the complete components, largest first.
pub type CliqueSizes = Vec<usize>;

/// `A`, `D`, `L = D - A`, `Q = D + A`.
#[derive(Clone, Debug)]
pub struct GraphMatrices {
    pub adjacency: IntMatrix,
    pub degree: IntMatrix,
    pub laplacian: IntMatrix,
    pub signless: IntMatrix,
}

#[derive(Serialize)]
struct EdgeDump<'a> {
    vertices: &'a [String],
    edges: Vec<[usize; 2]>,
}

impl CommutingGraph {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let z = g.center();
        if z.len() == g.order() {
            return Err(Error::AbelianGroup);
        }
        let vertices: Vec<u32> = (0..g.order())
            .filter(|&x| !z.contains(x))
            .map(|x| x as u32)
            .collect();
        let labels = vertices.iter().map(|&x| g.label(x as usize).to_string()).collect();
        let n = vertices.len();
        let mut graph = Self::empty(vertices, labels);
        for i in 0..n {
            for j in i + 1..n {
                if g.commutes(graph.vertices[i] as usize, graph.vertices[j] as usize) {
                    graph.add_edge(i, j);
                }
            }
        }
        Ok(graph)
    }

    /// An arbitrary simple graph on `labels.len()` vertices.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut graph = Self::empty((0..n as u32).collect(), labels);
        for &(i, j) in edges {
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidParameters(format!("bad edge ({i}, {j})")));
            }
            if !graph.adjacent(i, j) {
                graph.add_edge(i, j);
            }
        }
        Ok(graph)
    }

    /// Disjoint union of complete graphs of the given sizes.
    pub fn clique_union(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut edges = Vec::new();
        let mut start = 0;
        for &s in sizes {
            for i in start..start + s {
                for j in i + 1..start + s {
                    edges.push((i, j));
                }
            }
            start += s;
        }
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), &edges)
            .expect("clique edges are valid")
    }

    fn empty(vertices: Vec<u32>, labels: Vec<String>) -> Self {
        let n = vertices.len();
        let words = n.div_ceil(64);
        CommutingGraph {
            vertices,
            labels,
            words,
            bits: vec![0; words * n],
            edges: 0,
        }
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
        self.edges += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    pub fn is_regular(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || (1..n).all(|i| self.degree(i) == self.degree(0))
    }

    pub fn adjacency(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut a = IntMatrix::zeros(n, MatrixKind::Adjacency);
        for i in 0..n {
            for j in self.neighbors(i) {
                a.set(i, j, 1);
            }
        }
        a
    }

    pub fn matrices(&self) -> GraphMatrices {
        let n = self.vertex_count();
        let adjacency = self.adjacency();
        let mut degree = IntMatrix::zeros(n, MatrixKind::Degree);
        let mut laplacian = IntMatrix::zeros(n, MatrixKind::Laplacian);
        let mut signless = IntMatrix::zeros(n, MatrixKind::Signless);
        for i in 0..n {
            let d = self.degree(i) as i64;
            degree.set(i, i, d);
            for j in 0..n {
                let (dij, aij) = (degree.get(i, j), adjacency.get(i, j));
                laplacian.set(i, j, dij - aij);
                signless.set(i, j, dij + aij);
            }
        }
        GraphMatrices {
            adjacency,
            degree,
            laplacian,
            signless,
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Clique sizes when every component is complete, largest first.
    pub fn clique_decomposition(&self) -> Option<CliqueSizes> {
        let comps = self.components();
        let complete = comps
            .iter()
            .all(|c| c.iter().all(|&v| self.degree(v) == c.len() - 1));
        if !complete {
            return None;
        }
        let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph commuting {\n");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, j) in self.edge_list() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let dump = EdgeDump {
            vertices: &self.labels,
            edges: self.edge_list().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&dump).expect("edge list serializes")
    }
}

/// `size -> count` view of a clique multiset.
pub fn clique_counts(sizes: &[usize]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for &s in sizes {
        *counts.entry(s).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupFamilySpec, DEFAULT_ORDER_CAP};

    fn graph(d: &str) -> CommutingGraph {
        let g = d.parse::<GroupFamilySpec>().unwrap().build(DEFAULT_ORDER_CAP).unwrap();
        CommutingGraph::new(&g).unwrap()
    }

    #[test]
    fn counts() {
        let q8 = graph("dicyclic:m=2");
        assert_eq!((q8.vertex_count(), q8.edge_count()), (6, 3));
        let sz = graph("suzuki2");
        assert_eq!((sz.vertex_count(), sz.edge_count()), (19, 21));
        let a4 = graph("a4");
        assert_eq!((a4.vertex_count(), a4.edge_count()), (11, 7));
    }

    #[test]
    fn abelian_is_rejected() {
        let g = "cyclic:n=6".parse::<GroupFamilySpec>().unwrap().build(64).unwrap();
        assert_eq!(CommutingGraph::new(&g), Err(Error::AbelianGroup));
    }

    #[test]
    fn matrix_invariants() {
        let k2 = CommutingGraph::clique_union(&[2]);
        assert_eq!(
            k2.matrices().laplacian,
            IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]], MatrixKind::Laplacian).unwrap()
        );
        for d in ["suzuki2", "s4", "a4", "gl2:p=3,n=1"] {
            let g = graph(d);
            let m = g.matrices();
            assert!(m.laplacian.row_sums().iter().all(|&s| s == 0));
            let degrees: Vec<i64> = (0..g.vertex_count()).map(|i| 2 * g.degree(i) as i64).collect();
            assert_eq!(m.signless.row_sums(), degrees);
            assert!(m.adjacency.is_symmetric());
            assert_eq!(m.adjacency.trace(), 0);
            assert_eq!(m.laplacian.trace(), 2 * g.edge_count() as i64);
            assert_eq!(m.signless.trace(), 2 * g.edge_count() as i64);
        }
        assert_eq!(graph("suzuki2").matrices().laplacian.trace(), 42);
    }

    #[test]
    fn components_and_cliques() {
        let q8 = graph("dicyclic:m=2");
        assert_eq!(q8.components().len(), 3);
        assert_eq!(q8.clique_decomposition(), Some(vec![2, 2, 2]));
        let a4 = graph("a4");
        let mut sizes: Vec<usize> = a4.components().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [2, 2, 2, 2, 3]);
        assert_eq!(graph("suzuki2").clique_decomposition(), Some(vec![4, 3, 3, 3, 3, 3]));
        assert_eq!(graph("s4").clique_decomposition(), None);
        let gl = graph("gl2:p=3,n=1").clique_decomposition().unwrap();
        assert_eq!(clique_counts(&gl), BTreeMap::from([(2, 6), (4, 4), (6, 3)]));
        let path = CommutingGraph::from_edges(vec!["x".into(), "y".into(), "z".into()], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.components().len(), 1);
        assert_eq!(path.clique_decomposition(), None);
    }

    #[test]
    fn adjacency_is_commutation() {
        let g = "s4".parse::<GroupFamilySpec>().unwrap().build(64).unwrap();
        let gamma = CommutingGraph::new(&g).unwrap();
        let vs = gamma.vertices();
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                let want = i != j && g.commutes(vs[i] as usize, vs[j] as usize);
                assert_eq!(gamma.adjacent(i, j), want);
            }
        }
    }

    #[test]
    fn exports() {
        let k2 = CommutingGraph::clique_union(&[2, 1]);
        assert_eq!(k2.to_json(), r#"{"vertices":["0","1","2"],"edges":[[0,1]]}"#);
        assert_eq!(k2.to_dot(), "graph commuting {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 1;\n}\n");
    }
}
