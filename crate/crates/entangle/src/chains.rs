//! Chain construction: random models, the two fixed closed curves, and
//! chain transforms.
//!
//! Random generation is keyed: every sample is drawn from its own
//! counter-based substream, so ensembles are reproducible bit-for-bit
//! regardless of evaluation order or thread count.

use std::io::{self, BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Point3, Segment, Vec3, GEOM_EPS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChainError {
    #[error("chain needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("{model} needs at least {min} edges, got {got}")]
    TooFewEdges { model: &'static str, min: usize, got: usize },
    #[error("consecutive vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("closed chain must not repeat its first vertex at the end")]
    ClosureRepeated,
    #[error("concatenation requires open chains with coincident start points")]
    ConcatMismatch,
    #[error("chain file malformed: {0}")]
    Malformed(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<io::Error> for ChainError {
    fn from(e: io::Error) -> Self {
        ChainError::Io(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Chain
// ---------------------------------------------------------------------------

/// An oriented polygonal chain: ordered vertices plus an open/closed flag.
///
/// For a closed chain the last edge connects the final vertex back to the
/// first; the first vertex is never repeated at the end. An open chain with
/// k+1 vertices has k edges; a closed chain with k vertices has k edges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chain {
    vertices: Vec<Point3>,
    closed: bool,
}

impl Chain {
    pub fn new(vertices: Vec<Point3>, closed: bool) -> Result<Self, ChainError> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(ChainError::TooFewVertices { min, got: vertices.len() });
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(ChainError::NonFinite(i));
            }
        }
        for i in 1..vertices.len() {
            if vertices[i] == vertices[i - 1] {
                return Err(ChainError::RepeatedVertex(i - 1, i));
            }
        }
        if closed && vertices[0] == *vertices.last().unwrap() {
            return Err(ChainError::ClosureRepeated);
        }
        Ok(Self { vertices, closed })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn edge(&self, i: usize) -> Segment {
        let n = self.vertices.len();
        let j = if self.closed { (i + 1) % n } else { i + 1 };
        Segment { start: self.vertices[i], end: self.vertices[j] }
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.edge_count()).map(|i| self.edge(i))
    }

    /// Edge direction vectors, in traversal order.
    pub fn edge_dirs(&self) -> Vec<Vec3> {
        self.edges().map(|e| e.dir()).collect()
    }

    /// Whether edges `i` and `j` share a vertex (wrapping for closed chains).
    pub fn edges_adjacent(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        if hi - lo == 1 {
            return true;
        }
        self.closed && lo == 0 && hi == self.edge_count() - 1
    }

    pub fn reversed(&self) -> Chain {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Chain { vertices, closed: self.closed }
    }

    pub fn translated(&self, t: Vec3) -> Chain {
        self.map_vertices(|p| p + t)
    }

    /// Uniform scaling about the origin; `s` must be positive.
    pub fn scaled(&self, s: f64) -> Chain {
        assert!(s > 0.0, "scale factor must be positive");
        self.map_vertices(|p| p * s)
    }

    pub fn mirrored(&self, plane: MirrorPlane) -> Chain {
        self.map_vertices(|p| match plane {
            MirrorPlane::Xy => Vec3::new(p.x, p.y, -p.z),
            MirrorPlane::Xz => Vec3::new(p.x, -p.y, p.z),
            MirrorPlane::Yz => Vec3::new(-p.x, p.y, p.z),
        })
    }

    /// Applies `f` to every vertex. The caller must keep the chain valid
    /// (rigid motions and positive scalings always do).
    pub fn map_vertices(&self, f: impl Fn(Point3) -> Point3) -> Chain {
        Chain {
            vertices: self.vertices.iter().map(|&p| f(p)).collect(),
            closed: self.closed,
        }
    }
}

/// Coordinate plane for mirror reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MirrorPlane {
    Xy,
    Xz,
    Yz,
}

/// Joins two open chains sharing a start point into the single open chain
/// (Yₙ, …, Y₁, Y₀ = X₀, X₁, …, Xₙ); the shared vertex appears once.
pub fn concat_at_start(x: &Chain, y: &Chain) -> Result<Chain, ChainError> {
    if x.is_closed() || y.is_closed() {
        return Err(ChainError::ConcatMismatch);
    }
    if (x.vertices[0] - y.vertices[0]).norm() > GEOM_EPS {
        return Err(ChainError::ConcatMismatch);
    }
    let mut vertices: Vec<Point3> = y.vertices.iter().rev().copied().collect();
    vertices.extend_from_slice(&x.vertices[1..]);
    Chain::new(vertices, false)
}

// ---------------------------------------------------------------------------
// Keyed random streams
// ---------------------------------------------------------------------------

/// Identifies one sample's substream: (experiment, subcollection, sample).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StreamKey {
    pub experiment: u64,
    pub subcollection: u64,
    pub sample: u64,
}

impl StreamKey {
    pub fn new(experiment: u64, subcollection: u64, sample: u64) -> Self {
        Self { experiment, subcollection, sample }
    }

    /// Moves the key to a fresh resampling lane. Sample indices stay below
    /// 2⁴⁸, so the high bits are free for the attempt counter.
    pub fn resample(self, attempt: u64) -> Self {
        Self { sample: self.sample ^ (attempt << 48), ..self }
    }
}

/// A seeded family of independent, reproducible random substreams.
///
/// The 256-bit ChaCha key is exactly (seed, experiment, subcollection,
/// sample), making the construction counter-based: identical (seed, key)
/// yields an identical generator no matter when or where it is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&self, key: StreamKey) -> ChaCha8Rng {
        let mut bytes = [0u8; 32];
        bytes[0..8].copy_from_slice(&self.seed.to_le_bytes());
        bytes[8..16].copy_from_slice(&key.experiment.to_le_bytes());
        bytes[16..24].copy_from_slice(&key.subcollection.to_le_bytes());
        bytes[24..32].copy_from_slice(&key.sample.to_le_bytes());
        ChaCha8Rng::from_seed(bytes)
    }
}

/// 64-bit FNV-1a, used to derive stable experiment ids from series labels.
pub fn fnv1a64(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in data {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// SplitMix64 finalizer, used to fold chain length into experiment ids.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

// ---------------------------------------------------------------------------
// Random and fixed models
// ---------------------------------------------------------------------------

/// The chain models used by the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainModel {
    UniformWalk,
    UniformPolygon,
    EquilateralWalk,
    FixedSquare,
    FixedTrefoil,
}

impl ChainModel {
    pub fn name(self) -> &'static str {
        match self {
            ChainModel::UniformWalk => "uniform_walk",
            ChainModel::UniformPolygon => "uniform_polygon",
            ChainModel::EquilateralWalk => "equilateral_walk",
            ChainModel::FixedSquare => "fixed_square",
            ChainModel::FixedTrefoil => "fixed_trefoil",
        }
    }

    pub fn parse(s: &str) -> Option<ChainModel> {
        match s {
            "uniform_walk" => Some(ChainModel::UniformWalk),
            "uniform_polygon" => Some(ChainModel::UniformPolygon),
            "equilateral_walk" => Some(ChainModel::EquilateralWalk),
            "fixed_square" => Some(ChainModel::FixedSquare),
            "fixed_trefoil" => Some(ChainModel::FixedTrefoil),
            _ => None,
        }
    }

    pub fn is_fixed(self) -> bool {
        matches!(self, ChainModel::FixedSquare | ChainModel::FixedTrefoil)
    }

    pub fn is_closed(self) -> bool {
        matches!(
            self,
            ChainModel::UniformPolygon | ChainModel::FixedSquare | ChainModel::FixedTrefoil
        )
    }

    /// Generates an `n`-edge chain of this model. Fixed curves ignore `n`.
    pub fn generate<R: Rng + ?Sized>(self, n: usize, rng: &mut R) -> Chain {
        match self {
            ChainModel::UniformWalk => gen_uniform_walk(n, rng),
            ChainModel::UniformPolygon => gen_uniform_polygon(n, rng),
            ChainModel::EquilateralWalk => gen_equilateral_walk(n, rng),
            ChainModel::FixedSquare => fixed_square(),
            ChainModel::FixedTrefoil => fixed_trefoil(),
        }
    }
}

/// A model together with its edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub model: ChainModel,
    pub n: usize,
}

impl ChainSpec {
    pub fn new(model: ChainModel, n: usize) -> Result<Self, ChainError> {
        let min = match model {
            ChainModel::UniformPolygon => 3,
            ChainModel::UniformWalk | ChainModel::EquilateralWalk => 1,
            ChainModel::FixedSquare | ChainModel::FixedTrefoil => 0,
        };
        if n < min {
            return Err(ChainError::TooFewEdges { model: model.name(), min, got: n });
        }
        Ok(Self { model, n })
    }

    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Chain {
        self.model.generate(self.n, rng)
    }
}

fn uniform_point<R: Rng + ?Sized>(rng: &mut R) -> Point3 {
    Point3::new(rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>())
}

/// Open chain of `n` edges with i.i.d. vertices uniform in the unit cube.
pub fn gen_uniform_walk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Chain {
    assert!(n >= 1, "walk needs at least one edge");
    Chain { vertices: uniform_vertices(n + 1, rng), closed: false }
}

/// Closed chain of `n` edges with i.i.d. vertices uniform in the unit cube.
pub fn gen_uniform_polygon<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Chain {
    assert!(n >= 3, "polygon needs at least three edges");
    let mut vertices = uniform_vertices(n, rng);
    // Probability-zero closure coincidence: redraw the final vertex.
    while vertices[n - 1] == vertices[0] || vertices[n - 1] == vertices[n - 2] {
        vertices[n - 1] = uniform_point(rng);
    }
    Chain { vertices, closed: true }
}

fn uniform_vertices<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<Point3> {
    let mut vertices = Vec::with_capacity(count);
    vertices.push(uniform_point(rng));
    while vertices.len() < count {
        let p = uniform_point(rng);
        if p == *vertices.last().unwrap() {
            continue; // exact coincidence: resample this vertex
        }
        vertices.push(p);
    }
    vertices
}

/// Open chain from the origin with `n` unit steps uniform on the sphere.
pub fn gen_equilateral_walk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Chain {
    assert!(n >= 1, "walk needs at least one edge");
    let mut vertices = Vec::with_capacity(n + 1);
    let mut p = Point3::ZERO;
    vertices.push(p);
    for _ in 0..n {
        p = p + crate::geometry::Direction::sample_uniform(rng).as_vec();
        vertices.push(p);
    }
    Chain { vertices, closed: false }
}

/// The fixed planar square S₁ in the mid-plane of the unit cube.
pub fn fixed_square() -> Chain {
    Chain {
        vertices: vec![
            Point3::new(0.1, 0.1, 0.5),
            Point3::new(0.9, 0.1, 0.5),
            Point3::new(0.9, 0.9, 0.5),
            Point3::new(0.1, 0.9, 0.5),
        ],
        closed: true,
    }
}

/// The fixed six-vertex trefoil S₂ inside the unit cube.
pub fn fixed_trefoil() -> Chain {
    Chain {
        vertices: vec![
            Point3::new(0.9, 0.5, 0.5),
            Point3::new(0.1, 0.5, 0.4),
            Point3::new(0.5, 0.3, 0.9),
            Point3::new(0.6, 0.3, 0.1),
            Point3::new(0.2, 0.9, 0.6),
            Point3::new(0.5, 0.2, 0.5),
        ],
        closed: true,
    }
}

// ---------------------------------------------------------------------------
// Chain files
// ---------------------------------------------------------------------------

/// Writes the text chain format: a header line
/// `# chain closed=<true|false> n=<edges>` followed by one `x y z` triple per
/// line in round-trip decimal precision.
pub fn write_chain<W: Write>(c: &Chain, w: &mut W) -> io::Result<()> {
    writeln!(w, "# chain closed={} n={}", c.is_closed(), c.edge_count())?;
    for v in c.vertices() {
        writeln!(w, "{} {} {}", v.x, v.y, v.z)?;
    }
    Ok(())
}

/// Reads the format written by [`write_chain`].
pub fn read_chain<R: BufRead>(r: R) -> Result<Chain, ChainError> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| ChainError::Malformed("empty file".into()))??;
    let rest = header
        .strip_prefix("# chain ")
        .ok_or_else(|| ChainError::Malformed("missing '# chain' header".into()))?;
    let mut closed = None;
    let mut n = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("closed=") {
            closed = Some(v.parse::<bool>().map_err(|_| {
                ChainError::Malformed(format!("bad closed flag: {v}"))
            })?);
        } else if let Some(v) = field.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| {
                ChainError::Malformed(format!("bad edge count: {v}"))
            })?);
        }
    }
    let closed = closed.ok_or_else(|| ChainError::Malformed("header lacks closed=".into()))?;
    let n = n.ok_or_else(|| ChainError::Malformed("header lacks n=".into()))?;

    let mut vertices = Vec::new();
    for line in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut coord = || -> Result<f64, ChainError> {
            it.next()
                .ok_or_else(|| ChainError::Malformed(format!("short vertex line: {line}")))?
                .parse::<f64>()
                .map_err(|_| ChainError::Malformed(format!("bad coordinate in: {line}")))
        };
        let (x, y, z) = (coord()?, coord()?, coord()?);
        vertices.push(Point3::new(x, y, z));
    }
    let expected = if closed { n } else { n + 1 };
    if vertices.len() != expected {
        return Err(ChainError::Malformed(format!(
            "expected {expected} vertices for n={n} closed={closed}, got {}",
            vertices.len()
        )));
    }
    Chain::new(vertices, closed)
}
