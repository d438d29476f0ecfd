//! Topological index of a disk complex, with certificates.
//!
//! The decision procedure is: an empty complex has index 0; otherwise the
//! graph is strongly collapsed by repeatedly deleting dominated vertices
//! (which preserves homotopy type of the flag complex). A core that is a
//! single vertex means the complex is contractible; a core whose
//! complement is a perfect matching is the boundary of a cross-polytope,
//! a sphere, certifying the index; anything else is reported honestly as
//! indeterminate together with its homology.

use crate::complex::{CompatibilityGraph, FlagComplex};
use crate::snf::SparseIntMatrix;
use crate::Result;
use std::collections::BTreeMap;

/// An audited record of a strong collapse: the removal sequence and the
/// residual core.
#[derive(Clone, Debug)]
pub struct CollapseTrace {
    /// `(removed, witness)` pairs in removal order; at the moment of
    /// removal the witness was adjacent to the removed vertex and adjacent
    /// to all of its other live neighbors.
    pub steps: Vec<(usize, usize)>,
    /// Vertices of the core in increasing original id.
    pub core_vertices: Vec<usize>,
    /// The core as an induced subgraph (original labels preserved).
    pub core: CompatibilityGraph,
}

/// Collapses by always removing the lowest-id dominated vertex, with the
/// lowest-id witness. Deterministic.
pub fn strong_collapse(g: &CompatibilityGraph) -> CollapseTrace {
    let identity: Vec<usize> = (0..g.vertex_count()).collect();
    strong_collapse_with_priority(g, &identity)
}

/// Collapses with a custom preference order: among currently dominated
/// vertices the one with the smallest `(priority, id)` is removed first,
/// using the witness with the smallest `(priority, id)`. Used to check
/// that cores do not depend on removal order.
pub fn strong_collapse_with_priority(g: &CompatibilityGraph, priority: &[usize]) -> CollapseTrace {
    assert_eq!(priority.len(), g.vertex_count());
    let n = g.vertex_count();
    let mut alive = g.full_mask();
    let mut steps = Vec::new();
    loop {
        let mut choice: Option<(usize, usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| alive.get(v)) {
            let witness = (0..n)
                .filter(|&u| g.dominates(u, v, &alive))
                .min_by_key(|&u| (priority[u], u));
            if let Some(u) = witness {
                if choice.is_none_or(|(pv, cv, _, _)| (priority[v], v) < (pv, cv)) {
                    choice = Some((priority[v], v, priority[u], u));
                }
            }
        }
        match choice {
            Some((_, v, _, u)) => {
                steps.push((v, u));
                alive.clear(v);
            }
            None => break,
        }
    }
    let core_vertices: Vec<usize> = (0..n).filter(|&v| alive.get(v)).collect();
    CollapseTrace { steps, core: g.induced(&core_vertices), core_vertices }
}

/// Replays a trace against the original graph, checking every step's
/// domination condition and the final core.
pub fn audit_collapse(g: &CompatibilityGraph, trace: &CollapseTrace) -> bool {
    let mut alive = g.full_mask();
    for &(v, u) in &trace.steps {
        if !alive.get(v) || !g.dominates(u, v, &alive) {
            return false;
        }
        alive.clear(v);
    }
    let survivors: Vec<usize> = (0..g.vertex_count()).filter(|&v| alive.get(v)).collect();
    if survivors != trace.core_vertices {
        return false;
    }
    // The core must be dominated-vertex free.
    survivors
        .iter()
        .all(|&v| !(0..g.vertex_count()).any(|u| g.dominates(u, v, &alive)))
}

/// Recognizes the boundary complex of an `n`-dimensional cross-polytope:
/// `2n` vertices whose complement graph is a perfect matching. Such a flag
/// complex is the join of `n` zero-spheres, a sphere of dimension `n − 1`.
pub fn recognize_cross_polytope(core: &CompatibilityGraph) -> Option<usize> {
    let m = core.vertex_count();
    if m == 0 || !m.is_multiple_of(2) {
        return None;
    }
    for v in 0..m {
        if core.degree(v) != m - 2 {
            return None;
        }
    }
    Some(m / 2)
}

/// The complement matching of a recognized cross-polytope core, as pairs
/// of vertex ids of `core`.
fn complement_matching(core: &CompatibilityGraph) -> Vec<(usize, usize)> {
    let m = core.vertex_count();
    let mut pairs = Vec::new();
    for v in 0..m {
        for u in v + 1..m {
            if !core.adjacent(v, u) {
                pairs.push((v, u));
            }
        }
    }
    pairs
}

/// Reduced integral homology, one rank and one torsion list per dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyProfile {
    /// True for the empty complex, which has no groups to report.
    pub empty: bool,
    /// `betti[i]` is the rank of the reduced homology in dimension `i`.
    pub betti: Vec<usize>,
    /// `torsion[i]` lists the torsion divisors (> 1) in dimension `i`.
    pub torsion: Vec<Vec<u64>>,
}

impl HomologyProfile {
    pub fn empty_profile() -> HomologyProfile {
        HomologyProfile { empty: true, betti: Vec::new(), torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti.iter().all(|&b| b == 0) && self.torsion.iter().all(|t| t.is_empty())
    }

    /// True when the profile is that of a sphere of dimension `d`:
    /// rank one in dimension `d`, nothing else.
    pub fn is_sphere(&self, d: usize) -> bool {
        !self.empty
            && self.torsion.iter().all(|t| t.is_empty())
            && self.betti.iter().enumerate().all(|(i, &b)| b == usize::from(i == d))
            && self.betti.len() > d
    }

    /// Smallest dimension with nonzero reduced homology.
    pub fn first_nonzero(&self) -> Option<usize> {
        (0..self.betti.len().max(self.torsion.len()))
            .find(|&i| self.betti.get(i).is_some_and(|&b| b > 0)
                || self.torsion.get(i).is_some_and(|t| !t.is_empty()))
    }

    /// Alternating sum of reduced Betti numbers.
    pub fn reduced_euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Closes a facet list under taking faces, producing a full simplex list
/// in dimension-then-lex order (the shape `homology_of_simplices` expects).
pub fn with_all_faces(facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for f in facets {
        let mut sorted = f.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted.len();
        for mask in 1u64..1 << m {
            let sub: Vec<usize> =
                (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| sorted[i]).collect();
            seen.insert(sub);
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// Reduced integral homology of an explicit simplex list (sorted vertex
/// lists, closed under faces).
pub fn homology_of_simplices(simplices: &[Vec<usize>]) -> Result<HomologyProfile> {
    if simplices.is_empty() {
        return Ok(HomologyProfile::empty_profile());
    }
    let mut by_dim: Vec<BTreeMap<Vec<usize>, usize>> = Vec::new();
    for s in simplices {
        debug_assert!(s.windows(2).all(|w| w[0] < w[1]), "simplex vertices must be sorted");
        let d = s.len() - 1;
        while by_dim.len() <= d {
            by_dim.push(BTreeMap::new());
        }
        let next = by_dim[d].len();
        by_dim[d].insert(s.clone(), next);
    }
    let dim = by_dim.len() - 1;
    let counts: Vec<usize> = by_dim.iter().map(|m| m.len()).collect();
    assert!(counts.iter().all(|&c| c > 0), "no empty dimension below the top");

    // rank[d] and torsion divisors of the boundary map from d-chains to
    // (d-1)-chains; rank[0] is the augmentation onto the point.
    let mut ranks = vec![0usize; dim + 2];
    let mut divisors: Vec<Vec<u64>> = vec![Vec::new(); dim + 2];
    ranks[0] = 1; // augmentation of a nonempty complex
    for d in 1..=dim {
        let mut m = SparseIntMatrix::new(counts[d - 1], counts[d]);
        for (s, &j) in &by_dim[d] {
            let mut sign = 1i128;
            for omit in 0..s.len() {
                let face: Vec<usize> =
                    s.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v).collect();
                let i = *by_dim[d - 1].get(&face).expect("face closure");
                m.add_entry(i, j, sign);
                sign = -sign;
            }
        }
        let (r, divs) = m.rank_and_divisors()?;
        ranks[d] = r;
        divisors[d] = divs;
    }

    let mut betti = Vec::with_capacity(dim + 1);
    let mut torsion = Vec::with_capacity(dim + 1);
    for d in 0..=dim {
        betti.push(counts[d] - ranks[d] - ranks[d + 1]);
        torsion.push(divisors[d + 1].clone());
    }
    // Canonical form: trailing trivial dimensions are trimmed, so equal
    // profiles compare equal regardless of the complexes' dimensions.
    while betti.last() == Some(&0) && torsion.last().is_some_and(|t| t.is_empty()) {
        betti.pop();
        torsion.pop();
    }
    Ok(HomologyProfile { empty: false, betti, torsion })
}

/// Reduced integral homology of a flag complex, enumerating its cliques
/// under the given budget.
pub fn homology(c: &FlagComplex, budget: usize) -> Result<HomologyProfile> {
    let simplices = c.all_simplices(budget)?;
    homology_of_simplices(&simplices)
}

/// Certificate that a core is the boundary of a cross-polytope.
#[derive(Clone, Debug)]
pub struct IndexCertificate {
    /// The complement perfect matching, as pairs of original vertex ids.
    pub matching: Vec<(usize, usize)>,
    /// Homology of the core, matching the sphere of dimension `n − 1`.
    pub homology: HomologyProfile,
}

/// Outcome of the index decision procedure.
#[derive(Clone, Debug)]
pub enum IndexResult {
    /// The complex is empty: index 0.
    EmptyComplex,
    /// The core is an `n`-dimensional cross-polytope boundary: index `n`.
    Index { n: usize, trace: CollapseTrace, certificate: IndexCertificate },
    /// The complex is contractible (core is one vertex): the disk admits
    /// a further compression, so it carries no index.
    NotMinimal { trace: CollapseTrace },
    /// The core is neither a point nor a cross-polytope; its homology is
    /// reported as evidence, with the smallest nonvanishing dimension.
    Indeterminate {
        trace: CollapseTrace,
        homology: HomologyProfile,
        first_nonzero: Option<usize>,
    },
}

impl IndexResult {
    /// The certified index, when one exists.
    pub fn index(&self) -> Option<usize> {
        match self {
            IndexResult::EmptyComplex => Some(0),
            IndexResult::Index { n, .. } => Some(*n),
            _ => None,
        }
    }
}

/// Decides the index of a disk complex with a full certificate.
pub fn determine_index(c: &FlagComplex, budget: usize) -> Result<IndexResult> {
    if c.is_empty() {
        return Ok(IndexResult::EmptyComplex);
    }
    let trace = strong_collapse(c.graph());
    if trace.core.vertex_count() == 1 {
        return Ok(IndexResult::NotMinimal { trace });
    }
    let profile = homology(&FlagComplex::new(trace.core.clone()), budget)?;
    if let Some(n) = recognize_cross_polytope(&trace.core) {
        if profile.is_sphere(n - 1) {
            let matching = complement_matching(&trace.core)
                .into_iter()
                .map(|(a, b)| (trace.core_vertices[a], trace.core_vertices[b]))
                .collect();
            return Ok(IndexResult::Index {
                n,
                trace,
                certificate: IndexCertificate { matching, homology: profile },
            });
        }
    }
    let first_nonzero = profile.first_nonzero();
    Ok(IndexResult::Indeterminate { trace, homology: profile, first_nonzero })
}
