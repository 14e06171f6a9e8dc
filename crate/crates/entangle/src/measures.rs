//! Chain-level entanglement measures assembled from the pair kernel:
//! writhe, linking number, total torsion, self-linking number and average
//! crossing number.
//!
//! For straight edges the triple product in the Gauss integrand is constant
//! over a pair, so each pair's unsigned integral equals the absolute value of
//! its signed solid angle. Both the signed and unsigned sums below are
//! therefore exact closed forms; the slow estimators in [`crate::oracle`]
//! certify them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::Chain;
use crate::geometry::{
    binormal_angle, seg_pair_linking, segments_share_endpoint, GeomError, Segment, GEOM_EPS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MeasureError {
    /// A non-adjacent edge pair was degenerate (intersecting or nearly so).
    #[error("degenerate edge pair ({i}, {j})")]
    DegeneratePair { i: usize, j: usize },
}

/// The measures this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    Writhe,
    Linking,
    Torsion,
    SelfLinking,
    Acn,
}

impl MeasureKind {
    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Writhe => "writhe",
            MeasureKind::Linking => "linking",
            MeasureKind::Torsion => "torsion",
            MeasureKind::SelfLinking => "self_linking",
            MeasureKind::Acn => "acn",
        }
    }

    pub fn parse(s: &str) -> Option<MeasureKind> {
        match s {
            "writhe" => Some(MeasureKind::Writhe),
            "linking" => Some(MeasureKind::Linking),
            "torsion" => Some(MeasureKind::Torsion),
            "self_linking" => Some(MeasureKind::SelfLinking),
            "acn" => Some(MeasureKind::Acn),
            _ => None,
        }
    }
}

/// A measure value tagged with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: f64,
}

/// Sums f(pair contribution) over non-adjacent edge pairs i < j.
///
/// The summation order is fixed, so results are bit-stable.
fn pair_sum(c: &Chain, f: impl Fn(f64) -> f64) -> Result<f64, MeasureError> {
    let edges: Vec<Segment> = c.edges().collect();
    let mut sum = 0.0;
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if c.edges_adjacent(i, j) {
                continue;
            }
            let v = seg_pair_linking(&edges[i], &edges[j])
                .map_err(|_| MeasureError::DegeneratePair { i, j })?;
            sum += f(v);
        }
    }
    Ok(sum)
}

/// Writhe: twice the sum of the Gauss pair integrals over non-adjacent edge
/// pairs. Equals the diagram self-crossing sum averaged over all projection
/// directions. For an open chain the (first, last) pair is an ordinary
/// non-adjacent pair and is included.
pub fn writhe(c: &Chain) -> Result<f64, MeasureError> {
    pair_sum(c, |v| 2.0 * v)
}

/// Average crossing number: the same pair sum with the integrand taken in
/// absolute value. Always at least |writhe|.
pub fn acn(c: &Chain) -> Result<f64, MeasureError> {
    pair_sum(c, |v| 2.0 * v.abs())
}

/// Gauss linking number of two disjoint chains: the pair integral summed over
/// all inter-chain edge pairs. Integer for a pair of closed chains.
///
/// Edge pairs that share an endpoint exactly (for instance the junction pair
/// of two walks starting at the same point) contribute zero: the integrand
/// vanishes identically there, so the continuous extension is exact.
pub fn linking_number(a: &Chain, b: &Chain) -> Result<f64, MeasureError> {
    let ea: Vec<Segment> = a.edges().collect();
    let eb: Vec<Segment> = b.edges().collect();
    let mut sum = 0.0;
    for (i, sa) in ea.iter().enumerate() {
        for (j, sb) in eb.iter().enumerate() {
            if segments_share_endpoint(sa, sb, GEOM_EPS) {
                continue;
            }
            match seg_pair_linking(sa, sb) {
                Ok(v) => sum += v,
                Err(GeomError::DegeneratePair) | Err(GeomError::DegenerateSegment) => {
                    return Err(MeasureError::DegeneratePair { i, j })
                }
                Err(_) => unreachable!("pair kernel returns only pair degeneracies"),
            }
        }
    }
    Ok(sum)
}

/// Total torsion: the sum of signed binormal angles over consecutive edge
/// triples. Closed chains have one angle per edge (wrapping); an open chain
/// with n edges has n − 2. Parallel consecutive edges contribute zero.
pub fn total_torsion(c: &Chain) -> f64 {
    let dirs = c.edge_dirs();
    let m = dirs.len();
    let mut sum = 0.0;
    if c.is_closed() {
        for i in 0..m {
            sum += binormal_angle(dirs[i], dirs[(i + 1) % m], dirs[(i + 2) % m]).unwrap_or(0.0);
        }
    } else {
        for i in 0..m.saturating_sub(2) {
            sum += binormal_angle(dirs[i], dirs[i + 1], dirs[i + 2]).unwrap_or(0.0);
        }
    }
    sum
}

/// Self-linking number: writhe plus total torsion over 2π. A topological
/// integer invariant for closed chains; equals the linking number of the
/// chain with a slightly translated copy of itself.
pub fn self_linking(c: &Chain) -> Result<f64, MeasureError> {
    Ok(writhe(c)? + total_torsion(c) / std::f64::consts::TAU)
}

/// Every single-chain measure at once, in a fixed order.
pub fn all_chain_measures(c: &Chain) -> Result<Vec<MeasureValue>, MeasureError> {
    let wr = writhe(c)?;
    let tau = total_torsion(c);
    Ok(vec![
        MeasureValue { kind: MeasureKind::Writhe, value: wr },
        MeasureValue { kind: MeasureKind::Torsion, value: tau },
        MeasureValue {
            kind: MeasureKind::SelfLinking,
            value: wr + tau / std::f64::consts::TAU,
        },
        MeasureValue { kind: MeasureKind::Acn, value: acn(c)? },
    ])
}
