//! Serializable records for every pipeline artifact.
//!
//! Each record carries a `schema` version so downstream consumers can
//! detect format changes. Field order is fixed by declaration order and
//! all collections are emitted in a deterministic order, so serializing
//! the same value twice yields identical bytes.

use serde::{Deserialize, Serialize};

use crate::chords::{offset_of, ChordFamilies};
use crate::complex::FlagComplex;
use crate::curves::{classify_loop, ArcStep, EdgePoint, NormalLoop};
use crate::topology::{CollapseTrace, HomologyProfile, IndexResult};
use crate::Result;

/// Version stamp written into every record.
pub const SCHEMA_VERSION: u32 = 1;

/// A point on an edge of the tetrahedron, as `{"edge": [u, v], "pos": i}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PointRecord {
    pub edge: [u8; 2],
    pub pos: u32,
}

impl From<EdgePoint> for PointRecord {
    fn from(p: EdgePoint) -> Self {
        let (u, v) = p.edge.endpoints();
        PointRecord { edge: [u, v], pos: p.pos }
    }
}

/// One arc of a loop traversal.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StepRecord {
    /// The face crossed, as its vertex triple.
    pub face: [u8; 3],
    /// The vertex the arc cuts off within that face.
    pub corner: u8,
    pub enter: PointRecord,
    pub exit: PointRecord,
}

impl From<&ArcStep> for StepRecord {
    fn from(s: &ArcStep) -> Self {
        StepRecord {
            face: s.arc.face().vertices(),
            corner: s.arc.corner(),
            enter: s.enter.into(),
            exit: s.exit.into(),
        }
    }
}

/// Catalog entry for one normal loop.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LoopRecord {
    pub schema: u32,
    /// Stable identifier, `"{length}-{position}"` within the catalog.
    pub id: String,
    pub length: usize,
    /// Human-readable class, e.g. `"spiral(3)"`.
    pub class: String,
    /// Arc counts in canonical index order.
    pub coords: Vec<u32>,
    /// Lexicographically least arc counts over all 24 symmetries.
    pub canonical_coords: Vec<u32>,
    pub traversal: Vec<StepRecord>,
}

/// Builds the catalog record for a loop with the given identifier.
pub fn loop_record(c: &NormalLoop, id: String) -> Result<LoopRecord> {
    let class = classify_loop(c)?;
    Ok(LoopRecord {
        schema: SCHEMA_VERSION,
        id,
        length: c.length(),
        class: class.to_string(),
        coords: c.coords().counts().to_vec(),
        canonical_coords: c.canonical_coords().counts().to_vec(),
        traversal: c.traversal().iter().map(StepRecord::from).collect(),
    })
}

/// Chord-diagram export: both families plus the computed offset.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChordRecord {
    pub schema: u32,
    pub k: usize,
    pub offset: usize,
    /// Present (and `true`) only when the two offset directions tie.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
    #[serde(rename = "V")]
    pub v: Vec<[u32; 2]>,
    #[serde(rename = "W")]
    pub w: Vec<[u32; 2]>,
}

/// Builds the chord record, computing the offset from the families.
pub fn chord_record(fam: &ChordFamilies) -> Result<ChordRecord> {
    let off = offset_of(fam)?;
    let pack = |cs: &[crate::chords::Chord]| {
        cs.iter()
            .map(|c| {
                let (a, b) = c.endpoints();
                [a, b]
            })
            .collect()
    };
    Ok(ChordRecord {
        schema: SCHEMA_VERSION,
        k: fam.k(),
        offset: off.value,
        degenerate: off.degenerate,
        v: pack(fam.v()),
        w: pack(fam.w()),
    })
}

/// Compatibility graph and its clique list.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexRecord {
    pub schema: u32,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    /// All simplices, dimension-major then lexicographic.
    pub simplices: Vec<Vec<usize>>,
}

/// Builds the complex record, enumerating simplices within `budget`.
pub fn complex_record(complex: &FlagComplex, budget: usize) -> Result<ComplexRecord> {
    let g = complex.graph();
    Ok(ComplexRecord {
        schema: SCHEMA_VERSION,
        labels: (0..g.vertex_count()).map(|i| g.label(i).to_string()).collect(),
        edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        simplices: complex.all_simplices(budget)?,
    })
}

/// Core graph left after collapsing, in terms of original vertex ids.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoreRecord {
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    /// The perfect matching of the complement when the core is a
    /// cross-polytope; pairs use original vertex ids.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub matching: Vec<[usize; 2]>,
}

fn core_record(trace: &CollapseTrace, matching: &[(usize, usize)]) -> CoreRecord {
    let ids = &trace.core_vertices;
    CoreRecord {
        vertices: ids.clone(),
        labels: (0..trace.core.vertex_count())
            .map(|i| trace.core.label(i).to_string())
            .collect(),
        edges: trace.core.edges().into_iter().map(|(a, b)| [ids[a], ids[b]]).collect(),
        matching: matching.iter().map(|&(a, b)| [a, b]).collect(),
    }
}

/// Homology groups as Betti numbers plus torsion divisors per dimension.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomologyRecord {
    pub empty: bool,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

impl From<&HomologyProfile> for HomologyRecord {
    fn from(h: &HomologyProfile) -> Self {
        HomologyRecord { empty: h.empty, betti: h.betti.clone(), torsion: h.torsion.clone() }
    }
}

/// Index determination with its replayable certificate.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateRecord {
    pub schema: u32,
    /// `"index"`, `"not_minimal"`, or `"indeterminate"`.
    pub result: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Collapse steps as `[removed, witness]` pairs of original ids.
    pub collapse: Vec<[usize; 2]>,
    pub core: CoreRecord,
    pub homology: HomologyRecord,
    /// Least dimension with a nonzero group, reported only when the
    /// core homology rules out a recognized sphere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_nonzero: Option<usize>,
}

/// Builds the certificate record for an index determination.
pub fn certificate_record(result: &IndexResult) -> CertificateRecord {
    let steps = |t: &CollapseTrace| t.steps.iter().map(|&(r, w)| [r, w]).collect();
    match result {
        IndexResult::EmptyComplex => CertificateRecord {
            schema: SCHEMA_VERSION,
            result: "index".into(),
            n: Some(0),
            collapse: Vec::new(),
            core: CoreRecord::default(),
            homology: HomologyRecord { empty: true, ..HomologyRecord::default() },
            first_nonzero: None,
        },
        IndexResult::Index { n, trace, certificate } => CertificateRecord {
            schema: SCHEMA_VERSION,
            result: "index".into(),
            n: Some(*n),
            collapse: steps(trace),
            core: core_record(trace, &certificate.matching),
            homology: (&certificate.homology).into(),
            first_nonzero: None,
        },
        IndexResult::NotMinimal { trace } => CertificateRecord {
            schema: SCHEMA_VERSION,
            result: "not_minimal".into(),
            n: None,
            collapse: steps(trace),
            core: core_record(trace, &[]),
            homology: HomologyRecord::default(),
            first_nonzero: None,
        },
        IndexResult::Indeterminate { trace, homology, first_nonzero } => CertificateRecord {
            schema: SCHEMA_VERSION,
            result: "indeterminate".into(),
            n: None,
            collapse: steps(trace),
            core: core_record(trace, &[]),
            homology: homology.into(),
            first_nonzero: *first_nonzero,
        },
    }
}
