//! Reduced Betti numbers over F2 of a flag complex, from scratch.
//!
//! Cliques are found by subset growth over bitmasks, boundary matrices
//! are F2 bit vectors, and ranks come from plain Gaussian elimination.

use std::collections::BTreeMap;

/// Reduced F2 Betti numbers of the flag complex of a graph on `n`
/// vertices (at most 20) with the given undirected edges. Trailing zero
/// entries are trimmed; an empty graph yields an empty vector.
pub fn oracle_betti_f2(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    assert!(n <= 20, "oracle Betti computation is capped at 20 vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        assert!(a < n && b < n && a != b, "bad edge ({a}, {b})");
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }

    // is_clique[m] for every nonempty vertex subset m, by peeling the
    // lowest vertex: m is a clique iff m \ {v} is and v sees all of it.
    let full = 1usize << n;
    let mut is_clique = vec![false; full];
    let mut by_dim: Vec<Vec<u32>> = Vec::new();
    for m in 1..full {
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        if rest == 0 {
            is_clique[m] = true;
        } else {
            is_clique[m] = is_clique[rest] && rest & !(adj[v] as usize) == 0;
        }
        if is_clique[m] {
            let d = m.count_ones() as usize - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(m as u32);
        }
    }

    // rank[d] of the boundary map from d-simplices to (d-1)-simplices;
    // the augmentation map of a nonempty complex always has rank one.
    let dims = by_dim.len();
    let mut rank = vec![0usize; dims + 1];
    rank[0] = 1;
    for d in 1..dims {
        let rows: BTreeMap<u32, usize> =
            by_dim[d - 1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let words = by_dim[d - 1].len().div_ceil(64);
        let mut pivots: Vec<Vec<u64>> = Vec::new();
        for &simplex in &by_dim[d] {
            let mut col = vec![0u64; words];
            let mut m = simplex;
            while m != 0 {
                let v = m.trailing_zeros();
                let row = rows[&(simplex ^ (1 << v))];
                col[row / 64] ^= 1 << (row % 64);
                m &= m - 1;
            }
            for p in &pivots {
                let lead = p.iter().position(|&w| w != 0).unwrap();
                let bit = p[lead].trailing_zeros() as usize;
                if col[lead] >> bit & 1 == 1 {
                    for (c, w) in col.iter_mut().zip(p) {
                        *c ^= w;
                    }
                }
            }
            if col.iter().any(|&w| w != 0) {
                pivots.push(col);
            }
        }
        rank[d] = pivots.len();
    }

    let mut betti: Vec<usize> =
        (0..dims).map(|d| by_dim[d].len() - rank[d] - rank[d + 1]).collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn contractible_complexes_have_no_reduced_homology() {
        assert_eq!(oracle_betti_f2(1, &[]), Vec::<usize>::new());
        assert_eq!(oracle_betti_f2(4, &[(0, 1), (1, 2), (1, 3)]), Vec::<usize>::new());
        let k4: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        assert_eq!(oracle_betti_f2(4, &k4), Vec::<usize>::new());
    }

    #[test]
    fn disconnected_vertices_add_to_betti_zero() {
        assert_eq!(oracle_betti_f2(2, &[]), vec![1]);
        assert_eq!(oracle_betti_f2(3, &[(0, 1)]), vec![1]);
    }

    #[test]
    fn cycles_are_circles() {
        assert_eq!(oracle_betti_f2(5, &cycle(5)), vec![0, 1]);
        assert_eq!(oracle_betti_f2(6, &cycle(6)), vec![0, 1]);
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        // Complete tripartite K(2,2,2): every pair adjacent except three
        // antipodal pairs; its flag complex is the octahedron boundary.
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    edges.push((i, j));
                }
            }
        }
        assert_eq!(oracle_betti_f2(6, &edges), vec![0, 0, 1]);
    }

    #[test]
    fn empty_graph_has_empty_profile() {
        assert_eq!(oracle_betti_f2(0, &[]), Vec::<usize>::new());
    }
}
