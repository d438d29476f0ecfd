//! The edge-compressing disk complex as a flag complex.
//!
//! Vertices are the chords of both families; two vertices are adjacent
//! exactly when their compressing disks can be made disjoint
//! ([`t1_disjoint`]). A set of vertices spans a simplex precisely when it
//! is pairwise adjacent, so the complex is fully determined by this graph
//! and is stored as nothing more.

use crate::chords::{t1_disjoint, Chord, ChordFamilies};
use crate::{Error, Result};

/// A growable bitset used for adjacency rows and alive-vertex masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn new(n: usize) -> Bits {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

/// The chord compatibility graph: one vertex per chord, an edge for each
/// pair whose compressing disks are disjoint away from the 1-skeleton.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatibilityGraph {
    labels: Vec<String>,
    chords: Vec<Option<Chord>>,
    rows: Vec<Bits>,
}

impl CompatibilityGraph {
    /// Builds the graph of a chord diagram. Vertices are ordered `V1..Vm`
    /// then `W1..Wm` (families in their stored order), so matrices and
    /// certificates are reproducible.
    pub fn from_families(fam: &ChordFamilies) -> CompatibilityGraph {
        let all = fam.all();
        let m = fam.v().len();
        let labels = (0..all.len())
            .map(|i| if i < m { format!("V{}", i + 1) } else { format!("W{}", i - m + 1) })
            .collect();
        let mut g = CompatibilityGraph {
            labels,
            chords: all.iter().copied().map(Some).collect(),
            rows: vec![Bits::new(all.len()); all.len()],
        };
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                // Chords with identical endpoints on opposite sides stay
                // distinct vertices; they are trivially disjoint.
                if t1_disjoint(all[i], all[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Builds an arbitrary graph (used by tests and ad-hoc inputs).
    /// Vertices are labeled by their index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> CompatibilityGraph {
        let mut g = CompatibilityGraph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            chords: vec![None; n],
            rows: vec![Bits::new(n); n],
        };
        for &(a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge ({a},{b})");
            g.add_edge(a, b);
        }
        g
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.rows[a].set(b);
        self.rows[b].set(a);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The chord behind vertex `i`, when the graph came from a diagram.
    pub fn chord(&self, i: usize) -> Option<Chord> {
        self.chords[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// All edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            for j in i + 1..self.vertex_count() {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The subgraph induced by `keep` (strictly increasing original ids),
    /// with vertices renumbered in that order and labels preserved.
    pub fn induced(&self, keep: &[usize]) -> CompatibilityGraph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut g = CompatibilityGraph {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            chords: keep.iter().map(|&i| self.chords[i]).collect(),
            rows: vec![Bits::new(keep.len()); keep.len()],
        };
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if self.adjacent(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// True when, restricted to `alive`, every neighbor of `v` is `u` or a
    /// neighbor of `u`, and `u` is itself an adjacent live witness.
    pub(crate) fn dominates(&self, u: usize, v: usize, alive: &Bits) -> bool {
        if u == v || !alive.get(u) || !self.adjacent(u, v) {
            return false;
        }
        let ubit = |w: usize| if u / 64 == w { 1u64 << (u % 64) } else { 0 };
        self.rows[v]
            .words()
            .iter()
            .zip(self.rows[u].words())
            .zip(alive.words())
            .enumerate()
            .all(|(w, ((&rv, &ru), &al))| rv & al & !(ru | ubit(w)) == 0)
    }

    pub(crate) fn full_mask(&self) -> Bits {
        let mut b = Bits::new(self.vertex_count());
        for i in 0..self.vertex_count() {
            b.set(i);
        }
        b
    }

    /// Graphviz rendering with stable vertex and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph compatibility {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let chord = self.chords[i]
                .map(|c| {
                    let (a, b) = c.endpoints();
                    format!(" ({a},{b})")
                })
                .unwrap_or_default();
            out.push_str(&format!("  {i} [label=\"{l}{chord}\"];\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The flag (clique) complex of a compatibility graph. Simplices exist
/// only implicitly; they are enumerated on demand under a budget.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    graph: CompatibilityGraph,
}

impl FlagComplex {
    pub fn new(graph: CompatibilityGraph) -> FlagComplex {
        FlagComplex { graph }
    }

    pub fn graph(&self) -> &CompatibilityGraph {
        &self.graph
    }

    pub fn is_empty(&self) -> bool {
        self.graph.vertex_count() == 0
    }

    /// All cliques of size at most `max_dim + 1` as sorted vertex lists,
    /// ordered by dimension and then lexicographically. Aborts with
    /// `CapacityExceeded` once more than `budget` simplices are produced.
    pub fn enumerate_simplices(&self, max_dim: usize, budget: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.graph.vertex_count();
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_dim + 1];
        let mut produced = 0usize;
        let mut stack = Vec::new();
        for v in 0..n {
            self.grow_clique(v, &mut stack, max_dim, budget, &mut produced, &mut by_dim)?;
        }
        Ok(by_dim.into_iter().flatten().collect())
    }

    fn grow_clique(
        &self,
        v: usize,
        stack: &mut Vec<usize>,
        max_dim: usize,
        budget: usize,
        produced: &mut usize,
        by_dim: &mut [Vec<Vec<usize>>],
    ) -> Result<()> {
        stack.push(v);
        *produced += 1;
        if *produced > budget {
            return Err(Error::CapacityExceeded { budget });
        }
        by_dim[stack.len() - 1].push(stack.clone());
        if stack.len() <= max_dim {
            for u in v + 1..self.graph.vertex_count() {
                if stack.iter().all(|&s| self.graph.adjacent(s, u)) {
                    self.grow_clique(u, stack, max_dim, budget, produced, by_dim)?;
                }
            }
        }
        stack.pop();
        Ok(())
    }

    /// Every clique of the graph, with no dimension cap.
    pub fn all_simplices(&self, budget: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.graph.vertex_count();
        self.enumerate_simplices(n.saturating_sub(1), budget)
    }
}

/// Builds the disk complex of a chord diagram.
pub fn build_complex(fam: &ChordFamilies) -> FlagComplex {
    FlagComplex::new(CompatibilityGraph::from_families(fam))
}

/// Builds the disk complex of the disk bounded by a normal loop.
///
/// Triangles and quadrilaterals admit no compressing chords, so their
/// complex is empty; spirals get the complex of their chord diagram.
pub fn complex_for_loop(c: &crate::curves::NormalLoop) -> crate::Result<FlagComplex> {
    match crate::curves::classify_loop(c)? {
        crate::curves::LoopClass::Spiral { .. } => {
            Ok(build_complex(&crate::chords::chords_from_loop(c)?))
        }
        _ => Ok(FlagComplex::new(CompatibilityGraph::from_edges(0, &[]))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chords::{chords_from_loop, synthetic_chords};
    use crate::curves::enumerate_loops;

    const BUDGET: usize = 1 << 20;

    fn twelve_gon_graph() -> CompatibilityGraph {
        CompatibilityGraph::from_families(&synthetic_chords(3, 2).unwrap())
    }

    #[test]
    fn triangles_and_quads_get_empty_complexes() {
        for lp in enumerate_loops(4) {
            let cx = complex_for_loop(&lp).unwrap();
            assert!(cx.is_empty());
            assert_eq!(cx.all_simplices(BUDGET).unwrap(), Vec::<Vec<usize>>::new());
        }
        let spiral = enumerate_loops(8).into_iter().find(|l| l.length() == 8).unwrap();
        assert_eq!(complex_for_loop(&spiral).unwrap().graph().vertex_count(), 2);
    }

    #[test]
    fn octagon_complex_is_two_isolated_vertices() {
        let lp = enumerate_loops(8).into_iter().find(|l| l.length() == 8).unwrap();
        let fam = chords_from_loop(&lp).unwrap();
        let g = CompatibilityGraph::from_families(&fam);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![]);
    }

    #[test]
    fn twelve_gon_offset_2_graph_is_frozen() {
        let g = twelve_gon_graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.labels,
            vec!["V1", "V2", "V3", "W1", "W2", "W3"]
                .into_iter()
                .map(String::from)
                .collect::<Vec<_>>()
        );
        // Each family is a triangle; across families only the two
        // endpoint-sharing pairs are compatible.
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 2), (0, 5), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn families_induce_complete_subgraphs() {
        for len in [12, 16, 20] {
            for lp in enumerate_loops(len).into_iter().filter(|l| l.length() == len) {
                let fam = chords_from_loop(&lp).unwrap();
                let g = CompatibilityGraph::from_families(&fam);
                let m = fam.v().len();
                for i in 0..m {
                    for j in i + 1..m {
                        assert!(g.adjacent(i, j));
                        assert!(g.adjacent(m + i, m + j));
                    }
                }
            }
        }
    }

    #[test]
    fn simplices_of_the_complete_triangle() {
        let g = CompatibilityGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let c = FlagComplex::new(g);
        let simplices = c.enumerate_simplices(2, BUDGET).unwrap();
        assert_eq!(
            simplices,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn simplices_of_two_isolated_vertices() {
        let c = FlagComplex::new(CompatibilityGraph::from_edges(2, &[]));
        assert_eq!(c.enumerate_simplices(1, BUDGET).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = CompatibilityGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let c = FlagComplex::new(g);
        assert!(matches!(
            c.enumerate_simplices(2, 3),
            Err(Error::CapacityExceeded { budget: 3 })
        ));
    }

    #[test]
    fn flag_property_on_the_12_gon_complex() {
        let g = twelve_gon_graph();
        let c = FlagComplex::new(g);
        let simplices = c.all_simplices(BUDGET).unwrap();
        // Exhaustive check over all vertex subsets: pairwise adjacency is
        // exactly membership.
        for mask in 1u32..1 << 6 {
            let set: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
            let pairwise = set
                .iter()
                .enumerate()
                .all(|(a, &i)| set[a + 1..].iter().all(|&j| c.graph().adjacent(i, j)));
            assert_eq!(pairwise, simplices.contains(&set));
        }
        // Maximal simplex dimension is 2 (the two family triangles).
        assert_eq!(simplices.iter().map(|s| s.len()).max(), Some(3));
    }

    #[test]
    fn complex_is_invariant_under_boundary_relabeling() {
        use petgraph::algo::is_isomorphic;
        use petgraph::graph::UnGraph;
        let to_pet = |g: &CompatibilityGraph| -> UnGraph<(), ()> {
            UnGraph::from_edges(
                g.edges().iter().map(|&(a, b)| (a as u32, b as u32)).collect::<Vec<_>>(),
            )
        };
        let base = twelve_gon_graph();
        for lp in enumerate_loops(12).into_iter().filter(|l| l.length() == 12) {
            let g = CompatibilityGraph::from_families(&chords_from_loop(&lp).unwrap());
            assert!(is_isomorphic(&to_pet(&base), &to_pet(&g)));
        }
    }

    #[test]
    fn induced_subgraph_keeps_labels_and_adjacency() {
        let g = twelve_gon_graph();
        let sub = g.induced(&[0, 2, 3, 5]);
        assert_eq!(sub.vertex_count(), 4);
        assert_eq!(sub.labels, vec!["V1", "V3", "W1", "W3"]);
        // The 4-cycle V1 - V3 - W1 - W3 - V1.
        assert_eq!(sub.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn dot_export_is_stable() {
        let g = CompatibilityGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(
            g.to_dot(),
            "graph compatibility {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n"
        );
    }

    #[test]
    fn domination_respects_the_alive_mask() {
        let g = twelve_gon_graph();
        let mut alive = g.full_mask();
        // Initially V2 (id 1) is dominated by V1 (id 0).
        assert!(g.dominates(0, 1, &alive));
        assert!(!g.dominates(1, 0, &alive));
        // W1 (id 3) is not dominated while W2 is alive...
        assert!(!g.dominates(4, 3, &alive));
        // ...nor does removing W2 change W1's status, but W2 itself is
        // dominated by W1 once V-side neighbors are irrelevant.
        alive.clear(1);
        assert!(g.dominates(3, 4, &alive));
    }
}
