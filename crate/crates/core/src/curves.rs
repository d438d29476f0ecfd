//! Embedded normal loops on the boundary of the tetrahedron.
//!
//! A normal curve is encoded by its arc coordinates: one count per
//! [`ArcType`], subject to the six edge-matching equations. Solutions are in
//! bijection with edge-weight vectors satisfying, in every face, a parity
//! condition and the triangle inequality; the enumeration walks edge
//! weights and derives the coordinates. Every solution has a unique
//! embedded realization up to isotopy — the canonical nested drawing where
//! same-type arcs are parallel and each type hugs its corner — so
//! connectivity is well defined and computed by tracing the realized curve.

use crate::tet::{ArcType, Edge, Face, Symmetry, Tetrahedron, Vertex};
use crate::{Error, Result};

/// Arc coordinates: a count per normal arc type, laid out by
/// [`ArcType::index`], satisfying the edge-matching equations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcCoordinates {
    counts: [u32; 12],
}

impl ArcCoordinates {
    /// Validates the six matching equations: on each edge, both adjacent
    /// faces contribute the same number of arc endpoints.
    pub fn new(counts: [u32; 12]) -> Result<ArcCoordinates> {
        let coords = ArcCoordinates { counts };
        for e in Edge::ALL {
            let [f1, f2] = e.faces();
            if coords.endpoints_on(e, f1) != coords.endpoints_on(e, f2) {
                return Err(Error::MalformedLoop(format!(
                    "matching equation fails on edge {e:?}: {} vs {} endpoints",
                    coords.endpoints_on(e, f1),
                    coords.endpoints_on(e, f2),
                )));
            }
        }
        Ok(coords)
    }

    /// Coordinates realizing the given edge weights, if the per-face parity
    /// and triangle conditions hold (otherwise no normal curve system has
    /// these weights).
    pub fn from_edge_weights(weights: [u32; 6]) -> Option<ArcCoordinates> {
        let mut counts = [0u32; 12];
        for f in Face::ALL {
            let [wa, wb, wc] = f.edges().map(|e| weights[e.index()]);
            if (wa + wb + wc) % 2 != 0 {
                return None;
            }
            for v in f.vertices() {
                let [e1, e2] = f.edges_at(v);
                let e3 = f.edge_opposite(v);
                let (sum, opp) = (weights[e1.index()] + weights[e2.index()], weights[e3.index()]);
                if sum < opp {
                    return None;
                }
                counts[ArcType::new(f, v).index()] = (sum - opp) / 2;
            }
        }
        Some(ArcCoordinates { counts })
    }

    pub fn counts(&self) -> [u32; 12] {
        self.counts
    }

    pub fn count(&self, arc: ArcType) -> u32 {
        self.counts[arc.index()]
    }

    /// Number of arcs, which equals the number of intersection points with
    /// the 1-skeleton.
    pub fn total(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    fn endpoints_on(&self, e: Edge, f: Face) -> u32 {
        let (u, v) = e.endpoints();
        self.count(ArcType::new(f, u)) + self.count(ArcType::new(f, v))
    }

    /// Number of intersection points on an edge.
    pub fn edge_weight(&self, e: Edge) -> u32 {
        self.endpoints_on(e, e.faces()[0])
    }

    /// The coordinates of the relabeled curve system.
    pub fn apply_symmetry(&self, s: Symmetry) -> ArcCoordinates {
        let mut counts = [0u32; 12];
        for arc in ArcType::all() {
            counts[s.apply_arc(arc).index()] = self.count(arc);
        }
        ArcCoordinates { counts }
    }

    /// Lexicographically smallest coordinate vector over the 24 symmetries:
    /// a canonical orbit invariant.
    pub fn canonical(&self) -> ArcCoordinates {
        Tetrahedron::symmetries()
            .into_iter()
            .map(|s| self.apply_symmetry(s))
            .min_by(|a, b| a.counts.cmp(&b.counts))
            .unwrap()
    }
}

/// An intersection point of a curve with an edge: `pos` counts points along
/// the edge starting from its lower-labeled endpoint.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgePoint {
    pub edge: Edge,
    pub pos: u32,
}

/// One arc of a traversal: the arc type crossed, the point where the curve
/// enters the face, and the point where it leaves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ArcStep {
    pub arc: ArcType,
    pub enter: EdgePoint,
    pub exit: EdgePoint,
}

/// A connected embedded normal loop: validated coordinates plus the
/// canonical traversal of the realized curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalLoop {
    coords: ArcCoordinates,
    traversal: Vec<ArcStep>,
}

impl NormalLoop {
    pub fn coords(&self) -> ArcCoordinates {
        self.coords
    }

    /// Canonical orbit invariant under the 24 symmetries.
    pub fn canonical_coords(&self) -> ArcCoordinates {
        self.coords.canonical()
    }

    pub fn length(&self) -> usize {
        self.traversal.len()
    }

    pub fn traversal(&self) -> &[ArcStep] {
        &self.traversal
    }

    pub fn edge_weight(&self, e: Edge) -> u32 {
        self.coords.edge_weight(e)
    }

    /// Intersection points in traversal order; boundary label `i + 1`
    /// belongs to `points_in_order()[i]`.
    pub fn points_in_order(&self) -> Vec<EdgePoint> {
        self.traversal.iter().map(|s| s.enter).collect()
    }
}

/// The trichotomy of connected normal loops.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LoopClass {
    /// Length 3: the link of a vertex.
    VertexLink { vertex: Vertex },
    /// Length 4: a quadrilateral separating a pair of opposite edges
    /// (the two edges it does not meet).
    EdgePairQuad { pair: (Edge, Edge) },
    /// Length 4k, k ≥ 2: a spiral whose hemispheres each contain two
    /// vertices and 2k−3 parallel interior sub-edges.
    Spiral { k: usize },
}

impl std::fmt::Display for LoopClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoopClass::VertexLink { vertex } => write!(f, "vertex_link({vertex})"),
            LoopClass::EdgePairQuad { pair } => {
                let ((a, b), (c, d)) = (pair.0.endpoints(), pair.1.endpoints());
                write!(f, "quad({{{a},{b}}},{{{c},{d}}})")
            }
            LoopClass::Spiral { k } => write!(f, "spiral({k})"),
        }
    }
}

/// Enumerates every connected embedded normal loop of length at most
/// `max_length`, one per normal-isotopy class (distinct coordinate
/// vectors), sorted by length and then by coordinates.
///
/// Solutions of the matching equations are walked via their edge weights
/// (the bijective parametrization), realized in the canonical nested model,
/// and kept when the realization is a single closed curve.
pub fn enumerate_loops(max_length: usize) -> Vec<NormalLoop> {
    let mut out = Vec::new();
    let mut weights = [0u32; 6];
    enumerate_weights(&mut weights, 0, max_length, &mut |w| {
        if let Some(coords) = ArcCoordinates::from_edge_weights(w) {
            if coords.total() > 0 {
                if let Some(lp) = realize_connected(coords) {
                    out.push(lp);
                }
            }
        }
    });
    out.sort_by_key(|lp| (lp.length(), lp.coords().counts()));
    out
}

fn enumerate_weights(
    weights: &mut [u32; 6],
    at: usize,
    remaining: usize,
    emit: &mut impl FnMut([u32; 6]),
) {
    if at == 6 {
        emit(*weights);
        return;
    }
    for w in 0..=remaining as u32 {
        weights[at] = w;
        enumerate_weights(weights, at + 1, remaining - w as usize, emit);
    }
    weights[at] = 0;
}

/// Realizes the coordinate vector in the canonical nested model and traces
/// it; returns the loop when the curve is a single component.
fn realize_connected(coords: ArcCoordinates) -> Option<NormalLoop> {
    let cycles = trace_cycles(coords);
    match <[Vec<ArcStep>; 1]>::try_from(cycles) {
        Ok([cycle]) => Some(NormalLoop { coords, traversal: normalize_traversal(cycle) }),
        Err(_) => None,
    }
}

/// Builds the canonical realization of a coordinate vector and splits it
/// into closed curves. Each arc instance `(type, depth)` joins the points
/// at distance `depth` from its corner on the two corner edges; each
/// intersection point lies on exactly one arc in each adjacent face.
fn trace_cycles(coords: ArcCoordinates) -> Vec<Vec<ArcStep>> {
    let weights: Vec<u32> = Edge::ALL.iter().map(|&e| coords.edge_weight(e)).collect();
    let mut offset = [0usize; 6];
    let mut total = 0;
    for e in Edge::ALL {
        offset[e.index()] = total;
        total += weights[e.index()] as usize;
    }
    let point_id = |p: EdgePoint| offset[p.edge.index()] + p.pos as usize;

    // Endpoint of an arc cutting `corner`, at nesting depth `d`, on edge `e`.
    let end_on = |e: Edge, corner: Vertex, d: u32| -> EdgePoint {
        let (lo, _) = e.endpoints();
        let w = weights[e.index()];
        EdgePoint { edge: e, pos: if corner == lo { d } else { w - 1 - d } }
    };

    struct ArcInstance {
        arc: ArcType,
        ends: [EdgePoint; 2],
    }
    let mut arcs = Vec::with_capacity(total);
    for arc in ArcType::all() {
        let [e1, e2] = arc.edges();
        for d in 0..coords.count(arc) {
            arcs.push(ArcInstance { arc, ends: [end_on(e1, arc.corner(), d), end_on(e2, arc.corner(), d)] });
        }
    }
    debug_assert_eq!(arcs.len(), coords.total());

    // Each point is an endpoint of exactly two arcs, one per adjacent face.
    let mut at_point: Vec<[usize; 2]> = vec![[usize::MAX; 2]; total];
    for (i, a) in arcs.iter().enumerate() {
        for &p in &a.ends {
            let slot = &mut at_point[point_id(p)];
            if slot[0] == usize::MAX {
                slot[0] = i;
            } else {
                debug_assert_eq!(slot[1], usize::MAX);
                slot[1] = i;
            }
        }
    }
    debug_assert!(at_point.iter().all(|s| s[1] != usize::MAX));

    let mut visited = vec![false; arcs.len()];
    let mut cycles = Vec::new();
    for start in 0..arcs.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        let mut enter = arcs[start].ends[0];
        loop {
            visited[cur] = true;
            let exit = if arcs[cur].ends[0] == enter { arcs[cur].ends[1] } else { arcs[cur].ends[0] };
            cycle.push(ArcStep { arc: arcs[cur].arc, enter, exit });
            let [a, b] = at_point[point_id(exit)];
            let next = if a == cur { b } else { a };
            if next == start && exit == arcs[start].ends[0] {
                break;
            }
            cur = next;
            enter = exit;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Rotates and orients a closed traversal so it starts at the smallest
/// `(edge, position)` intersection point and takes the lexicographically
/// smaller of the two directions.
fn normalize_traversal(cycle: Vec<ArcStep>) -> Vec<ArcStep> {
    let reversed: Vec<ArcStep> = cycle
        .iter()
        .rev()
        .map(|s| ArcStep { arc: s.arc, enter: s.exit, exit: s.enter })
        .collect();
    let rotate_to_min = |steps: Vec<ArcStep>| -> Vec<ArcStep> {
        let min = steps.iter().enumerate().min_by_key(|(_, s)| s.enter).map(|(i, _)| i).unwrap();
        let mut out = steps;
        out.rotate_left(min);
        out
    };
    let fwd = rotate_to_min(cycle);
    let bwd = rotate_to_min(reversed);
    let key = |steps: &[ArcStep]| -> Vec<(usize, usize, u32, usize, u32)> {
        steps
            .iter()
            .map(|s| (s.arc.index(), s.enter.edge.index(), s.enter.pos, s.exit.edge.index(), s.exit.pos))
            .collect()
    };
    if key(&fwd) <= key(&bwd) {
        fwd
    } else {
        bwd
    }
}

/// One endpoint of a sub-edge of the 1-skeleton: either a vertex of the
/// tetrahedron or an intersection point with the loop.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SubEdgeEnd {
    Vertex(Vertex),
    Crossing(EdgePoint),
}

/// A maximal piece of an edge cut out by the loop's intersection points.
/// An edge of weight `w` carries `w + 1` sub-edges indexed by `seg`,
/// starting at the lower-labeled vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubEdge {
    pub edge: Edge,
    pub seg: u32,
    pub lo: SubEdgeEnd,
    pub hi: SubEdgeEnd,
}

impl SubEdge {
    /// True when both endpoints are intersection points with the loop.
    pub fn is_interior(&self) -> bool {
        matches!((self.lo, self.hi), (SubEdgeEnd::Crossing(_), SubEdgeEnd::Crossing(_)))
    }

    pub fn touches_vertex(&self, v: Vertex) -> bool {
        self.lo == SubEdgeEnd::Vertex(v) || self.hi == SubEdgeEnd::Vertex(v)
    }
}

/// The two components of `∂Δ − c` for a connected loop `c`, as an
/// inventory of sub-edges and vertices with side tags. Side 0 is the
/// component containing vertex 0.
#[derive(Clone, Debug)]
pub struct Hemispheres {
    pub vertex_side: [u8; 4],
    /// All sub-edges of the 1-skeleton with their side, sorted by
    /// `(edge, seg)`.
    pub sub_edges: Vec<(SubEdge, u8)>,
}

impl Hemispheres {
    pub fn side_of(&self, edge: Edge, seg: u32) -> u8 {
        let at = self
            .sub_edges
            .binary_search_by_key(&(edge.index(), seg), |(s, _)| (s.edge.index(), s.seg))
            .expect("sub-edge exists");
        self.sub_edges[at].1
    }

    pub fn vertices_on(&self, side: u8) -> Vec<Vertex> {
        (0..4u8).filter(|&v| self.vertex_side[v as usize] == side).collect()
    }

    pub fn interior_sub_edges(&self, side: u8) -> Vec<SubEdge> {
        self.sub_edges
            .iter()
            .filter(|(s, sd)| *sd == side && s.is_interior())
            .map(|(s, _)| *s)
            .collect()
    }
}

/// Splits the complement of the loop into its two components and assigns
/// every sub-edge and vertex a side.
///
/// Within a face the loop's arcs cut out corner regions, strips between
/// parallel arcs, and one central region; each sub-edge borders one region
/// in each adjacent face, and crossing the sub-edge connects them. A
/// union-find over regions therefore recovers the components.
pub fn hemispheres(c: &NormalLoop) -> Result<Hemispheres> {
    let coords = c.coords();
    let weights: Vec<u32> = Edge::ALL.iter().map(|&e| coords.edge_weight(e)).collect();

    // Region nodes: one central region per face, then one region per
    // (face, corner, depth) nested inside the arc at that depth.
    let mut base = [[0usize; 4]; 4];
    let mut nodes = 4usize;
    for f in Face::ALL {
        for v in f.vertices() {
            base[f.index()][v as usize] = nodes;
            nodes += coords.count(ArcType::new(f, v)) as usize;
        }
    }
    let region = |f: Face, v: Vertex, depth: u32| base[f.index()][v as usize] + depth as usize;
    let central = |f: Face| f.index();

    // The region a sub-edge borders inside face `f`: nested at one of the
    // edge's corners if the seg index falls within that corner's arcs,
    // otherwise the central region.
    let face_region = |f: Face, e: Edge, seg: u32| -> usize {
        let (u, v) = e.endpoints();
        let (xu, xv) = (coords.count(ArcType::new(f, u)), coords.count(ArcType::new(f, v)));
        let w = weights[e.index()];
        if seg < xu {
            region(f, u, seg)
        } else if w - seg < xv {
            region(f, v, w - seg)
        } else {
            central(f)
        }
    };

    let mut uf = UnionFind::new(nodes);
    for e in Edge::ALL {
        let [f1, f2] = e.faces();
        for seg in 0..=weights[e.index()] {
            uf.union(face_region(f1, e, seg), face_region(f2, e, seg));
        }
    }

    let vertex_region = |v: Vertex| -> usize {
        let f = Face::ALL.into_iter().find(|f| f.contains_vertex(v)).unwrap();
        if coords.count(ArcType::new(f, v)) > 0 {
            region(f, v, 0)
        } else {
            central(f)
        }
    };

    let mut roots: Vec<usize> = (0..nodes).map(|n| uf.find(n)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() != 2 {
        return Err(Error::MalformedLoop(format!(
            "complement of a connected loop must have 2 components, found {}",
            roots.len()
        )));
    }
    let side_zero = uf.find(vertex_region(0));
    let side_of_root = |root: usize| u8::from(root != side_zero);

    let mut vertex_side = [0u8; 4];
    for v in 0..4u8 {
        vertex_side[v as usize] = side_of_root(uf.find(vertex_region(v)));
    }

    let mut sub_edges = Vec::new();
    for e in Edge::ALL {
        let (u, v) = e.endpoints();
        let w = weights[e.index()];
        for seg in 0..=w {
            let lo = if seg == 0 {
                SubEdgeEnd::Vertex(u)
            } else {
                SubEdgeEnd::Crossing(EdgePoint { edge: e, pos: seg - 1 })
            };
            let hi = if seg == w {
                SubEdgeEnd::Vertex(v)
            } else {
                SubEdgeEnd::Crossing(EdgePoint { edge: e, pos: seg })
            };
            let side = side_of_root(uf.find(face_region(e.faces()[0], e, seg)));
            debug_assert_eq!(side, side_of_root(uf.find(face_region(e.faces()[1], e, seg))));
            sub_edges.push((SubEdge { edge: e, seg, lo, hi }, side));
        }
    }
    Ok(Hemispheres { vertex_side, sub_edges })
}

/// Classifies a loop per the length trichotomy, validating the structural
/// facts the downstream stages rely on.
pub fn classify_loop(c: &NormalLoop) -> Result<LoopClass> {
    let coords = c.coords();
    match c.length() {
        3 => {
            for v in 0..4u8 {
                let linked = ArcType::all().iter().all(|&a| {
                    let expect = u32::from(a.corner() == v && a.face().contains_vertex(v));
                    coords.count(a) == expect
                });
                if linked {
                    return Ok(LoopClass::VertexLink { vertex: v });
                }
            }
            Err(Error::MalformedLoop("length 3 but not a vertex link".into()))
        }
        4 => {
            let zero: Vec<Edge> =
                Edge::ALL.into_iter().filter(|&e| coords.edge_weight(e) == 0).collect();
            let ones = Edge::ALL.into_iter().filter(|&e| coords.edge_weight(e) == 1).count();
            match zero.as_slice() {
                [a, b] if *b == a.opposite() && ones == 4 => {
                    Ok(LoopClass::EdgePairQuad { pair: (*a, *b) })
                }
                _ => Err(Error::MalformedLoop(
                    "length 4 but not a quadrilateral separating an opposite edge pair".into(),
                )),
            }
        }
        n if n % 4 == 0 && n >= 8 => {
            let k = n / 4;
            let hemi = hemispheres(c)?;
            for side in 0..2u8 {
                let verts = hemi.vertices_on(side);
                if verts.len() != 2 {
                    return Err(Error::MalformedLoop(format!(
                        "spiral hemisphere {side} contains {} vertices instead of 2",
                        verts.len()
                    )));
                }
                for &v in &verts {
                    let meeting = hemi
                        .sub_edges
                        .iter()
                        .filter(|(s, sd)| *sd == side && s.touches_vertex(v))
                        .count();
                    if meeting != 3 {
                        return Err(Error::MalformedLoop(format!(
                            "spiral vertex {v} meets {meeting} sub-edges instead of 3"
                        )));
                    }
                }
                let interior = hemi.interior_sub_edges(side).len();
                if interior != 2 * k - 3 {
                    return Err(Error::MalformedLoop(format!(
                        "spiral hemisphere {side} has {interior} interior sub-edges, expected {}",
                        2 * k - 3
                    )));
                }
            }
            Ok(LoopClass::Spiral { k })
        }
        n => Err(Error::MalformedLoop(format!("no normal loop class has length {n}"))),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
