//! Loop enumeration by direct arc-by-arc backtracking.
//!
//! The walker grows a path of normal arcs on the boundary of the
//! tetrahedron, keeping an explicit ordered list of crossing points on
//! each of the six edges. At every step it tries both corners the next
//! arc could cut and every insertion slot for the new crossing point,
//! rejecting an arc as soon as it crosses an existing arc inside its
//! face. Whenever the path closes into a single loop the multiset of
//! arc types is recorded. There is no coordinate arithmetic anywhere:
//! embeddings are represented purely by point order.

use std::collections::BTreeSet;

/// Edge endpoints in index order; edge `e` joins `EDGES[e].0 < EDGES[e].1`.
const EDGES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Face `f` is the triangle omitting vertex `f`, vertices ascending.
const FACES: [[u8; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

fn edge_index(a: u8, b: u8) -> usize {
    let pair = if a < b { (a, b) } else { (b, a) };
    EDGES.iter().position(|&e| e == pair).expect("vertices must differ")
}

fn faces_of_edge(e: usize) -> [usize; 2] {
    let (a, b) = EDGES[e];
    let mut out = [0usize; 2];
    let mut n = 0;
    for (f, verts) in FACES.iter().enumerate() {
        if verts.contains(&a) && verts.contains(&b) {
            out[n] = f;
            n += 1;
        }
    }
    assert_eq!(n, 2);
    out
}

/// Arc types indexed `face * 3 + rank of corner within the face`.
fn arc_type(face: usize, corner: u8) -> usize {
    face * 3 + FACES[face].iter().position(|&v| v == corner).expect("corner not on face")
}

/// The two edges of `face` meeting `corner`, ascending by edge index.
fn edges_at(face: usize, corner: u8) -> [usize; 2] {
    let mut out = [usize::MAX; 2];
    let mut n = 0;
    for &v in &FACES[face] {
        if v != corner {
            out[n] = edge_index(corner, v);
            n += 1;
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Copy)]
struct Arc {
    face: usize,
    corner: u8,
    from: u32,
    to: u32,
}

struct Walk {
    max_len: usize,
    first_type: usize,
    /// Point ids on each edge, ordered from the lower-numbered endpoint.
    edge_pts: [Vec<u32>; 6],
    /// Edge holding each point, indexed by point id.
    pt_edge: Vec<usize>,
    arcs: Vec<Arc>,
    face_arcs: [Vec<usize>; 4],
    found: BTreeSet<[u32; 12]>,
}

impl Walk {
    /// Linear position of point `p` along the boundary cycle of `face`
    /// (vertices visited in `FACES[face]` order).
    fn boundary_key(&self, face: usize, p: u32) -> usize {
        let [a, b, c] = FACES[face];
        for (leg, (x, y)) in [(a, b), (b, c), (c, a)].into_iter().enumerate() {
            let e = edge_index(x, y);
            if self.pt_edge[p as usize] != e {
                continue;
            }
            let pts = &self.edge_pts[e];
            let i = pts.iter().position(|&q| q == p).expect("point not on its edge");
            let pos = if x < y { i } else { pts.len() - 1 - i };
            return leg * 1000 + pos;
        }
        unreachable!("point is not on an edge of this face")
    }

    /// Would an arc from `p` to `q` cross an existing arc of `face`?
    /// Arcs of one face never share endpoints, so a crossing is exactly a
    /// strict interleaving of endpoint positions around the boundary.
    fn crosses(&self, face: usize, p: u32, q: u32) -> bool {
        let (kp, kq) = (self.boundary_key(face, p), self.boundary_key(face, q));
        let (lo, hi) = if kp < kq { (kp, kq) } else { (kq, kp) };
        self.face_arcs[face].iter().any(|&i| {
            let arc = self.arcs[i];
            let inside = |r: u32| {
                let k = self.boundary_key(face, r);
                lo < k && k < hi
            };
            inside(arc.from) != inside(arc.to)
        })
    }

    fn record_closed(&mut self, face: usize, corner: u8) {
        let mut counts = [0u32; 12];
        for a in &self.arcs {
            counts[arc_type(a.face, a.corner)] += 1;
        }
        counts[arc_type(face, corner)] += 1;
        self.found.insert(counts);
    }

    /// Extend the open path ending at point `open`, whose previous arc
    /// lay in `came_face`.
    fn extend(&mut self, open: u32, came_face: usize) {
        let e = self.pt_edge[open as usize];
        let [fa, fb] = faces_of_edge(e);
        let face = if fa == came_face { fb } else { fa };
        let (u, v) = EDGES[e];
        for corner in [u, v] {
            if arc_type(face, corner) < self.first_type {
                continue;
            }
            let [e1, e2] = edges_at(face, corner);
            let target = if e1 == e { e2 } else { e1 };
            // Close the loop onto the start point when it sits on the
            // target edge and its one existing arc is in the other face.
            if self.arcs.len() >= 2
                && self.pt_edge[0] == target
                && self.arcs[0].face != face
                && !self.crosses(face, open, 0)
            {
                self.record_closed(face, corner);
            }
            if self.arcs.len() + 2 > self.max_len {
                continue;
            }
            for slot in 0..=self.edge_pts[target].len() {
                let new = self.pt_edge.len() as u32;
                self.pt_edge.push(target);
                self.edge_pts[target].insert(slot, new);
                if !self.crosses(face, open, new) {
                    self.arcs.push(Arc { face, corner, from: open, to: new });
                    self.face_arcs[face].push(self.arcs.len() - 1);
                    self.extend(new, face);
                    self.face_arcs[face].pop();
                    self.arcs.pop();
                }
                self.edge_pts[target].remove(slot);
                self.pt_edge.pop();
            }
        }
    }
}

/// Enumerates the arc-type count vectors of every connected embedded
/// normal loop of length at most `max_len`, sorted lexicographically.
///
/// The search is exponential in the length; lengths above 24 are refused.
pub fn oracle_loops(max_len: usize) -> Vec<[u32; 12]> {
    assert!(max_len <= 24, "oracle walker is capped at length 24");
    let mut found = BTreeSet::new();
    if max_len >= 3 {
        // Every loop contains an arc of its least type; starting there and
        // walking in the direction that leaves via the higher-indexed edge
        // visits each loop at least once, so one seed orientation suffices.
        for first_type in 0..12 {
            let face = first_type / 3;
            let corner = FACES[face][first_type % 3];
            let [e1, e2] = edges_at(face, corner);
            let mut walk = Walk {
                max_len,
                first_type,
                edge_pts: Default::default(),
                pt_edge: vec![e1, e2],
                arcs: vec![Arc { face, corner, from: 0, to: 1 }],
                face_arcs: Default::default(),
                found: BTreeSet::new(),
            };
            walk.edge_pts[e1].push(0);
            walk.edge_pts[e2].push(1);
            walk.face_arcs[face].push(0);
            walk.extend(1, face);
            found.extend(walk.found);
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_length(max: usize) -> Vec<(u32, usize)> {
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for c in oracle_loops(max) {
            let len = c.iter().sum::<u32>();
            match counts.iter_mut().find(|(l, _)| *l == len) {
                Some((_, n)) => *n += 1,
                None => counts.push((len, 1)),
            }
        }
        counts.sort_unstable();
        counts
    }

    #[test]
    fn four_triangles_and_three_quadrilaterals() {
        assert_eq!(by_length(3), vec![(3, 4)]);
        assert_eq!(by_length(4), vec![(3, 4), (4, 3)]);
    }

    #[test]
    fn triangle_counts_touch_three_edges_once() {
        for c in oracle_loops(3) {
            assert_eq!(c.iter().sum::<u32>(), 3);
            assert!(c.iter().all(|&x| x <= 1));
        }
    }

    #[test]
    fn no_loops_of_length_five_six_or_seven() {
        assert_eq!(by_length(7), vec![(3, 4), (4, 3)]);
    }

    #[test]
    fn three_octagons() {
        assert_eq!(by_length(8), vec![(3, 4), (4, 3), (8, 3)]);
    }
}
