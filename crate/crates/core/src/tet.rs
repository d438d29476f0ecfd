//! The fixed labeled tetrahedron.
//!
//! Vertices are labeled `0..=3`. Edges and faces are newtype indices into
//! fixed tables, so every geometric object has one canonical encoding and
//! ordering. The twelve [`ArcType`]s are the normal arc types on the
//! boundary: in each face, an arc can cut off any of the three corners.

/// A vertex label, `0..=3`.
pub type Vertex = u8;

/// Endpoints of the six edges, in canonical (sorted) order.
///
/// With this ordering, edge `i` and edge `5 - i` are opposite (they share
/// no vertex).
pub const EDGE_ENDPOINTS: [(Vertex, Vertex); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// An edge of the tetrahedron, encoded as an index into [`EDGE_ENDPOINTS`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(u8);

impl Edge {
    pub const ALL: [Edge; 6] = [Edge(0), Edge(1), Edge(2), Edge(3), Edge(4), Edge(5)];

    /// The edge joining two distinct vertices.
    pub fn between(a: Vertex, b: Vertex) -> Edge {
        assert!(a != b && a < 4 && b < 4, "no edge between {a} and {b}");
        let key = (a.min(b), a.max(b));
        let idx = EDGE_ENDPOINTS.iter().position(|&e| e == key).unwrap();
        Edge(idx as u8)
    }

    pub fn from_index(i: usize) -> Edge {
        assert!(i < 6);
        Edge(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Endpoints in sorted order.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        EDGE_ENDPOINTS[self.0 as usize]
    }

    /// The unique edge sharing no vertex with `self`.
    pub fn opposite(self) -> Edge {
        Edge(5 - self.0)
    }

    pub fn contains(self, v: Vertex) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == v
    }

    pub fn other_endpoint(self, v: Vertex) -> Vertex {
        let (a, b) = self.endpoints();
        debug_assert!(a == v || b == v);
        if a == v {
            b
        } else {
            a
        }
    }

    /// The two faces containing this edge, in index order.
    pub fn faces(self) -> [Face; 2] {
        let mut out = [Face(0); 2];
        let mut n = 0;
        for f in Face::ALL {
            if f.contains_edge(self) {
                out[n] = f;
                n += 1;
            }
        }
        debug_assert_eq!(n, 2);
        out
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "e{a}{b}")
    }
}

/// A face of the tetrahedron, identified by the one vertex it omits.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(u8);

impl Face {
    pub const ALL: [Face; 4] = [Face(0), Face(1), Face(2), Face(3)];

    /// The face omitting vertex `v`.
    pub fn omitting(v: Vertex) -> Face {
        assert!(v < 4);
        Face(v)
    }

    pub fn from_index(i: usize) -> Face {
        assert!(i < 4);
        Face(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn omitted_vertex(self) -> Vertex {
        self.0
    }

    /// The three vertices of the face, sorted.
    pub fn vertices(self) -> [Vertex; 3] {
        let mut out = [0; 3];
        let mut n = 0;
        for v in 0..4 {
            if v != self.0 {
                out[n] = v;
                n += 1;
            }
        }
        out
    }

    /// The three edges of the face, in index order.
    pub fn edges(self) -> [Edge; 3] {
        let [a, b, c] = self.vertices();
        let mut out = [Edge::between(a, b), Edge::between(a, c), Edge::between(b, c)];
        out.sort();
        out
    }

    pub fn contains_vertex(self, v: Vertex) -> bool {
        v < 4 && v != self.0
    }

    pub fn contains_edge(self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        self.contains_vertex(a) && self.contains_vertex(b)
    }

    /// The two face edges meeting at corner `v`.
    pub fn edges_at(self, v: Vertex) -> [Edge; 2] {
        debug_assert!(self.contains_vertex(v));
        let [a, b, c] = self.vertices();
        match v {
            _ if v == a => [Edge::between(a, b), Edge::between(a, c)],
            _ if v == b => [Edge::between(b, a), Edge::between(b, c)],
            _ => [Edge::between(c, a), Edge::between(c, b)],
        }
    }

    /// The face edge that does not contain corner `v`.
    pub fn edge_opposite(self, v: Vertex) -> Edge {
        debug_assert!(self.contains_vertex(v));
        let others: Vec<Vertex> = self.vertices().into_iter().filter(|&u| u != v).collect();
        Edge::between(others[0], others[1])
    }
}

impl std::fmt::Debug for Face {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.vertices();
        write!(f, "f{a}{b}{c}")
    }
}

/// A normal arc type: an arc in `face` cutting off the corner at `corner`.
///
/// Its endpoints lie on the two face edges meeting at the corner. There are
/// three types per face, twelve in total.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcType {
    face: Face,
    corner: Vertex,
}

impl ArcType {
    pub const COUNT: usize = 12;

    pub fn new(face: Face, corner: Vertex) -> ArcType {
        assert!(face.contains_vertex(corner));
        ArcType { face, corner }
    }

    /// All twelve arc types in index order.
    pub fn all() -> [ArcType; 12] {
        let mut out = [ArcType { face: Face(0), corner: 1 }; 12];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = ArcType::from_index(i);
        }
        out
    }

    /// Canonical index: `3 * face + rank of the corner among the face's
    /// sorted vertices`. Coordinate vectors are laid out in this order.
    pub fn index(self) -> usize {
        let rank = self.face.vertices().iter().position(|&v| v == self.corner).unwrap();
        self.face.index() * 3 + rank
    }

    pub fn from_index(i: usize) -> ArcType {
        assert!(i < 12);
        let face = Face::from_index(i / 3);
        let corner = face.vertices()[i % 3];
        ArcType { face, corner }
    }

    pub fn face(self) -> Face {
        self.face
    }

    pub fn corner(self) -> Vertex {
        self.corner
    }

    /// The two edges the arc's endpoints lie on.
    pub fn edges(self) -> [Edge; 2] {
        self.face.edges_at(self.corner)
    }
}

impl std::fmt::Debug for ArcType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a({:?},{})", self.face, self.corner)
    }
}

/// A symmetry of the labeled tetrahedron: a permutation of the vertices,
/// acting on edges, faces, and arc types by relabeling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symmetry {
    /// `map[v]` is the image of vertex `v`.
    map: [Vertex; 4],
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { map: [0, 1, 2, 3] };

    /// Builds a symmetry from an image table, checking it is a permutation.
    pub fn from_map(map: [Vertex; 4]) -> Option<Symmetry> {
        let mut seen = [false; 4];
        for &v in &map {
            if v >= 4 || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Symmetry { map })
    }

    pub fn map(self) -> [Vertex; 4] {
        self.map
    }

    pub fn apply_vertex(self, v: Vertex) -> Vertex {
        self.map[v as usize]
    }

    pub fn apply_edge(self, e: Edge) -> Edge {
        let (a, b) = e.endpoints();
        Edge::between(self.apply_vertex(a), self.apply_vertex(b))
    }

    pub fn apply_face(self, f: Face) -> Face {
        Face::omitting(self.apply_vertex(f.omitted_vertex()))
    }

    pub fn apply_arc(self, a: ArcType) -> ArcType {
        ArcType::new(self.apply_face(a.face), self.apply_vertex(a.corner))
    }

    /// `self.then(next)` applies `self` first, then `next`.
    pub fn then(self, next: Symmetry) -> Symmetry {
        let mut map = [0; 4];
        for v in 0..4u8 {
            map[v as usize] = next.apply_vertex(self.apply_vertex(v));
        }
        Symmetry { map }
    }

    pub fn inverse(self) -> Symmetry {
        let mut map = [0; 4];
        for v in 0..4u8 {
            map[self.map[v as usize] as usize] = v;
        }
        Symmetry { map }
    }
}

/// All 24 symmetries, sorted lexicographically by image table (the identity
/// comes first).
pub fn symmetries() -> [Symmetry; 24] {
    let mut out = [Symmetry::IDENTITY; 24];
    let mut n = 0;
    let mut vals: [Vertex; 4] = [0, 1, 2, 3];
    permute(&mut vals, 0, &mut |map| {
        out[n] = Symmetry { map };
        n += 1;
    });
    out.sort();
    out
}

fn permute(vals: &mut [Vertex; 4], at: usize, emit: &mut impl FnMut([Vertex; 4])) {
    if at == 4 {
        emit(*vals);
        return;
    }
    for i in at..4 {
        vals.swap(at, i);
        permute(vals, at + 1, emit);
        vals.swap(at, i);
    }
}

/// The fixed labeled tetrahedron, as a namespace for incidence queries.
pub struct Tetrahedron;

impl Tetrahedron {
    pub fn vertices() -> [Vertex; 4] {
        [0, 1, 2, 3]
    }

    pub fn edges() -> [Edge; 6] {
        Edge::ALL
    }

    pub fn faces() -> [Face; 4] {
        Face::ALL
    }

    /// The edge sharing no vertex with `e`.
    pub fn opposite_edge(e: Edge) -> Edge {
        e.opposite()
    }

    pub fn symmetries() -> [Symmetry; 24] {
        symmetries()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_edge_is_the_complementary_pair() {
        assert_eq!(Tetrahedron::opposite_edge(Edge::between(0, 1)), Edge::between(2, 3));
        for e in Edge::ALL {
            let o = e.opposite();
            let (a, b) = e.endpoints();
            assert!(!o.contains(a) && !o.contains(b));
            assert_eq!(o.opposite(), e, "opposite is an involution");
        }
    }

    #[test]
    fn edge_between_round_trips() {
        for e in Edge::ALL {
            let (a, b) = e.endpoints();
            assert_eq!(Edge::between(a, b), e);
            assert_eq!(Edge::between(b, a), e);
            assert_eq!(e.other_endpoint(a), b);
        }
    }

    #[test]
    fn every_edge_lies_in_exactly_two_faces() {
        for e in Edge::ALL {
            let fs = e.faces();
            assert_ne!(fs[0], fs[1]);
            for f in fs {
                assert!(f.contains_edge(e));
            }
        }
    }

    #[test]
    fn face_incidence_is_coherent() {
        for f in Face::ALL {
            let vs = f.vertices();
            assert!(!vs.contains(&f.omitted_vertex()));
            for v in vs {
                let [e1, e2] = f.edges_at(v);
                assert!(e1.contains(v) && e2.contains(v));
                assert!(f.contains_edge(e1) && f.contains_edge(e2));
                let opp = f.edge_opposite(v);
                assert!(!opp.contains(v) && f.contains_edge(opp));
            }
        }
    }

    #[test]
    fn arc_type_indexing_round_trips() {
        for i in 0..ArcType::COUNT {
            let a = ArcType::from_index(i);
            assert_eq!(a.index(), i);
            let [e1, e2] = a.edges();
            assert!(e1.contains(a.corner()) && e2.contains(a.corner()));
        }
        assert_eq!(ArcType::all().len(), 12);
    }

    #[test]
    fn there_are_24_distinct_symmetries_forming_a_group() {
        let syms = symmetries();
        let mut seen = std::collections::BTreeSet::new();
        for s in syms {
            seen.insert(s.map());
            assert_eq!(s.then(s.inverse()), Symmetry::IDENTITY);
        }
        assert_eq!(seen.len(), 24);
        assert_eq!(syms[0], Symmetry::IDENTITY);
    }

    #[test]
    fn arc_action_is_a_group_action() {
        let syms = symmetries();
        for &s1 in &syms {
            for &s2 in &syms {
                let composed = s1.then(s2);
                for a in ArcType::all() {
                    assert_eq!(s2.apply_arc(s1.apply_arc(a)), composed.apply_arc(a));
                }
            }
        }
    }

    #[test]
    fn transposing_0_and_1_swaps_the_corner_types_at_0_and_1() {
        let s = Symmetry::from_map([1, 0, 2, 3]).unwrap();
        let f = Face::omitting(3); // face {0,1,2}
        assert_eq!(s.apply_arc(ArcType::new(f, 0)), ArcType::new(f, 1));
        assert_eq!(s.apply_arc(ArcType::new(f, 1)), ArcType::new(f, 0));
        // The type cutting off corner 2 joins edges {0,2} and {1,2}; the
        // transposition swaps those edges and fixes the type.
        assert_eq!(s.apply_arc(ArcType::new(f, 2)), ArcType::new(f, 2));
    }

    #[test]
    fn symmetries_preserve_incidence() {
        for s in symmetries() {
            for e in Edge::ALL {
                assert_eq!(s.apply_edge(e.opposite()), s.apply_edge(e).opposite());
            }
            for f in Face::ALL {
                for v in f.vertices() {
                    assert!(s.apply_face(f).contains_vertex(s.apply_vertex(v)));
                }
            }
        }
    }
}
