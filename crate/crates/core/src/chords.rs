//! The flat-disk chord model of a spiral boundary.
//!
//! A disk bounded by a length-`4k` spiral is flattened so its boundary
//! becomes a circle with `4k` labeled points (the intersections with the
//! 1-skeleton, in traversal order). Each hemisphere of the complement
//! contributes `2k − 3` interior sub-edges of the 1-skeleton; these become
//! two families of pairwise non-crossing chords, `V` and `W`. Every
//! edge-compressing disk for the spiral compresses along exactly one chord,
//! so the chord diagram determines the whole disk complex.

use crate::curves::{classify_loop, hemispheres, EdgePoint, LoopClass, NormalLoop};
use crate::{Error, Result};

/// A chord of the boundary circle, joining two labeled points. Labels are
/// `1..=4k`; endpoints are stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Chord {
    a: u32,
    b: u32,
}

impl Chord {
    pub fn new(x: u32, y: u32) -> Chord {
        assert_ne!(x, y, "a chord joins two distinct points");
        Chord { a: x.min(y), b: x.max(y) }
    }

    pub fn endpoints(self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn has_endpoint(self, label: u32) -> bool {
        self.a == label || self.b == label
    }
}

/// True when compressing disks along the two chords can be made disjoint:
/// the chords either share an endpoint (parallel pushed-off copies) or do
/// not interleave on the circle. Strictly interleaved chords must cross.
pub fn t1_disjoint(x: Chord, y: Chord) -> bool {
    if x.has_endpoint(y.a) || x.has_endpoint(y.b) {
        return true;
    }
    let inside = |p: u32| x.a < p && p < x.b;
    inside(y.a) == inside(y.b)
}

/// Boundary labels of a loop: label `i + 1` is the `i`-th intersection
/// point along the canonical traversal.
#[derive(Clone, Debug)]
pub struct BoundaryLabeling {
    points: Vec<EdgePoint>,
}

impl BoundaryLabeling {
    pub fn from_loop(c: &NormalLoop) -> BoundaryLabeling {
        BoundaryLabeling { points: c.points_in_order() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, label: u32) -> EdgePoint {
        self.points[label as usize - 1]
    }

    pub fn label(&self, p: EdgePoint) -> u32 {
        self.points.iter().position(|&q| q == p).expect("point lies on the loop") as u32 + 1
    }
}

/// The two chord families of a spiral's flat-disk model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChordFamilies {
    k: usize,
    v: Vec<Chord>,
    w: Vec<Chord>,
}

impl ChordFamilies {
    /// Validates and normalizes two families: each must hold `2k − 3`
    /// chords with endpoints among `1..=4k`, pairwise disjoint and sharing
    /// no endpoints within the family. Families are stored sorted.
    pub fn new(k: usize, mut v: Vec<Chord>, mut w: Vec<Chord>) -> Result<ChordFamilies> {
        if k < 2 {
            return Err(Error::MalformedFamilies(format!("k = {k} is below 2")));
        }
        v.sort_unstable();
        w.sort_unstable();
        for (name, fam) in [("V", &v), ("W", &w)] {
            if fam.len() != 2 * k - 3 {
                return Err(Error::MalformedFamilies(format!(
                    "family {name} has {} chords, expected {}",
                    fam.len(),
                    2 * k - 3
                )));
            }
            for c in fam {
                let (a, b) = c.endpoints();
                if a < 1 || b > 4 * k as u32 {
                    return Err(Error::MalformedFamilies(format!(
                        "family {name} chord ({a},{b}) leaves the label range 1..={}",
                        4 * k
                    )));
                }
            }
            for (i, &x) in fam.iter().enumerate() {
                for &y in &fam[i + 1..] {
                    let (ya, yb) = y.endpoints();
                    if x.has_endpoint(ya) || x.has_endpoint(yb) {
                        return Err(Error::MalformedFamilies(format!(
                            "family {name} chords {x:?} and {y:?} share an endpoint"
                        )));
                    }
                    if !t1_disjoint(x, y) {
                        return Err(Error::MalformedFamilies(format!(
                            "family {name} chords {x:?} and {y:?} cross"
                        )));
                    }
                }
            }
        }
        Ok(ChordFamilies { k, v, w })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of boundary labels, `4k`.
    pub fn circle_len(&self) -> u32 {
        4 * self.k as u32
    }

    pub fn v(&self) -> &[Chord] {
        &self.v
    }

    pub fn w(&self) -> &[Chord] {
        &self.w
    }

    /// All chords, the `V` family followed by the `W` family. This is the
    /// vertex order of the disk complex.
    pub fn all(&self) -> Vec<Chord> {
        self.v.iter().chain(self.w.iter()).copied().collect()
    }

    /// Boundary labels not met by any chord of either family.
    pub fn uncovered_labels(&self) -> Vec<u32> {
        (1..=self.circle_len())
            .filter(|&l| !self.v.iter().chain(self.w.iter()).any(|c| c.has_endpoint(l)))
            .collect()
    }
}

/// Extracts the chord families of a spiral loop: interior sub-edges of the
/// 1-skeleton become chords between the labels of their endpoints, grouped
/// by hemisphere (`V` is the hemisphere containing vertex 0).
pub fn chords_from_loop(c: &NormalLoop) -> Result<ChordFamilies> {
    let LoopClass::Spiral { k } = classify_loop(c)? else {
        return Err(Error::NotSpiral { length: c.length() });
    };
    let labeling = BoundaryLabeling::from_loop(c);
    let hemi = hemispheres(c)?;
    let mut families = [Vec::new(), Vec::new()];
    for (sub, side) in &hemi.sub_edges {
        if !sub.is_interior() {
            continue;
        }
        let lo = EdgePoint { edge: sub.edge, pos: sub.seg - 1 };
        let hi = EdgePoint { edge: sub.edge, pos: sub.seg };
        families[*side as usize].push(Chord::new(labeling.label(lo), labeling.label(hi)));
    }
    let [v, w] = families;
    ChordFamilies::new(k, v, w)
}

/// The offset between the two families, with a degeneracy marker.
///
/// For `k ≥ 3` the offset lies in `0..=k−1`; the octagon (`k = 2`) has
/// offset 2 by convention and is flagged degenerate because the two
/// rotation directions coincide.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Offset {
    pub value: usize,
    pub degenerate: bool,
}

/// Computes the rotational offset between the families.
///
/// Each family misses exactly six boundary labels, forming two antipodal
/// runs of three consecutive labels; the run midpoints are the family's
/// poles. The offset is the circular distance between the poles of `V` and
/// `W`, measured modulo `2k` and folded to the smaller direction.
pub fn offset_of(families: &ChordFamilies) -> Result<Offset> {
    let n = families.circle_len();
    let k = families.k() as u32;
    let pole = |fam: &[Chord], name: &str| -> Result<u32> {
        let missing: Vec<u32> =
            (1..=n).filter(|&l| !fam.iter().any(|c| c.has_endpoint(l))).collect();
        if missing.len() != 6 {
            return Err(Error::MalformedFamilies(format!(
                "family {name} misses {} labels, expected 6",
                missing.len()
            )));
        }
        // Split the missing labels into cyclic runs of consecutive labels.
        let in_missing = |l: u32| missing.contains(&((l - 1) % n + 1));
        let mut starts: Vec<u32> =
            missing.iter().copied().filter(|&l| !in_missing(l + n - 1)).collect();
        starts.sort_unstable();
        let run_len = |s: u32| (0..n).take_while(|&d| in_missing(s + d)).count();
        if starts.len() != 2 || starts.iter().any(|&s| run_len(s) != 3) {
            return Err(Error::MalformedFamilies(format!(
                "family {name} must miss two runs of three consecutive labels"
            )));
        }
        let mids: Vec<u32> = starts.iter().map(|&s| s % n + 1).collect();
        if (mids[1] + n - mids[0]) % n != n / 2 {
            return Err(Error::MalformedFamilies(format!(
                "family {name} pole runs are not antipodal"
            )));
        }
        Ok(mids[0])
    };
    let (pv, pw) = (pole(&families.v, "V")?, pole(&families.w, "W")?);
    let d = (pw + n - pv) % (2 * k);
    let value = d.min(2 * k - d) as usize;
    Ok(Offset { value, degenerate: d == k })
}

/// Builds the synthetic chord families for a length-`4k` spiral at the
/// given offset, matching real diagrams up to relabeling.
///
/// Family `V` is poled at label 1: chords `(2+j, 4k−j)` for
/// `j = 1..=2k−3`. Family `W` is the same fan poled at `offset + 1`.
/// Accepts `0..=k−1` for `k ≥ 3` and exactly the conventional offset 2 for
/// `k = 2`.
pub fn synthetic_chords(k: usize, offset: usize) -> Result<ChordFamilies> {
    let valid = (k >= 3 && offset < k) || (k == 2 && offset == 2);
    if !valid {
        return Err(Error::BadParameters { k, offset });
    }
    let n = 4 * k as i64;
    let wrap = |x: i64| -> u32 { ((x - 1).rem_euclid(n) + 1) as u32 };
    let p = offset as i64 + 1;
    let mut v = Vec::new();
    let mut w = Vec::new();
    for j in 1..=(2 * k as i64 - 3) {
        v.push(Chord::new(wrap(2 + j), wrap(-j)));
        w.push(Chord::new(wrap(p + 1 + j), wrap(p - 1 - j)));
    }
    ChordFamilies::new(k, v, w)
}

/// True when two diagrams agree up to rotating or reflecting the boundary
/// labels and optionally swapping the families.
pub fn equivalent_up_to_relabeling(a: &ChordFamilies, b: &ChordFamilies) -> bool {
    if a.k() != b.k() {
        return false;
    }
    let n = a.circle_len() as i64;
    let wrap = |x: i64| -> u32 { ((x - 1).rem_euclid(n) + 1) as u32 };
    let relabel = |fam: &[Chord], t: i64, refl: bool| -> Vec<Chord> {
        let mut out: Vec<Chord> = fam
            .iter()
            .map(|c| {
                let (x, y) = c.endpoints();
                let m = |l: u32| if refl { wrap(t - l as i64) } else { wrap(l as i64 + t) };
                Chord::new(m(x), m(y))
            })
            .collect();
        out.sort_unstable();
        out
    };
    for t in 0..n {
        for refl in [false, true] {
            let (av, aw) = (relabel(&a.v, t, refl), relabel(&a.w, t, refl));
            if (av == b.v && aw == b.w) || (av == b.w && aw == b.v) {
                return true;
            }
        }
    }
    false
}
