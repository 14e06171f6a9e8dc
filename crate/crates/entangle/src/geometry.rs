//! Exact per-edge-pair geometry kernel.
//!
//! Three primitives everything else is assembled from:
//!
//! * [`seg_pair_linking`]: the Gauss double integral of one straight segment
//!   pair, evaluated in closed form as the signed solid angle of the spherical
//!   quadrangle spanned by the four endpoint-difference directions (the
//!   construction of Klenin & Langowski, J. Biomol. Struct. Dyn. 2000).
//! * [`signed_crossing`]: the ±1 crossing sign of two segments in the
//!   orthogonal projection along a direction.
//! * [`binormal_angle`]: the signed dihedral angle between consecutive
//!   binormals of a polygonal chain, the per-vertex torsion contribution.
//!
//! All operations are pure functions of their arguments.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rand::Rng;
use thiserror::Error;

/// Absolute degeneracy tolerance. Chains live in the unit cube, so no
/// relative scaling is applied.
pub const GEOM_EPS: f64 = 1e-12;

/// Errors raised by the kernel primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    /// Segments intersect, nearly intersect, or share an endpoint.
    #[error("degenerate segment pair (intersecting, nearly intersecting, or sharing an endpoint)")]
    DegeneratePair,
    /// The projection of the pair is not in general position; resample the direction.
    #[error("degenerate projection (projected segments not in general position)")]
    DegenerateProjection,
    /// Two consecutive edge directions are parallel; no binormal plane exists.
    #[error("degenerate turn (consecutive edges parallel)")]
    DegenerateTurn,
    /// A segment has zero length.
    #[error("degenerate segment (zero length)")]
    DegenerateSegment,
}

// ---------------------------------------------------------------------------
// Vectors and points
// ---------------------------------------------------------------------------

/// A vector (or point) in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Points and vectors share one representation.
pub type Point3 = Vec3;

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    #[inline]
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    /// Unit vector along `self`, or `None` for the zero vector.
    #[inline]
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self / n)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Scalar triple product (a, b, c) = (a × b) · c.
#[inline]
pub fn triple(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    a.cross(b).dot(c)
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

// ---------------------------------------------------------------------------
// Segments and directions
// ---------------------------------------------------------------------------

/// An oriented straight segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Point3,
    pub end: Point3,
}

impl Segment {
    pub fn new(start: Point3, end: Point3) -> Result<Self, GeomError> {
        if (end - start).norm2() == 0.0 {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Self { start, end })
    }

    #[inline]
    pub fn dir(&self) -> Vec3 {
        self.end - self.start
    }

    #[inline]
    pub fn reversed(&self) -> Segment {
        Segment { start: self.end, end: self.start }
    }
}

/// A unit vector on S², e.g. a projection direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction(Vec3);

impl Direction {
    /// Normalizes `v`; fails on (near-)zero input.
    pub fn new(v: Vec3) -> Result<Self, GeomError> {
        let n = v.norm();
        if n < GEOM_EPS {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Self(v / n))
    }

    #[inline]
    pub fn as_vec(self) -> Vec3 {
        self.0
    }

    /// Uniform direction on the sphere (Marsaglia's rejection method; exact).
    pub fn sample_uniform<R: Rng + ?Sized>(rng: &mut R) -> Direction {
        loop {
            let x1: f64 = rng.random_range(-1.0..1.0);
            let x2: f64 = rng.random_range(-1.0..1.0);
            let s = x1 * x1 + x2 * x2;
            if s >= 1.0 || s == 0.0 {
                continue;
            }
            let f = 2.0 * (1.0 - s).sqrt();
            return Direction(Vec3::new(x1 * f, x2 * f, 1.0 - 2.0 * s));
        }
    }

    /// An orthonormal frame (u, v, ξ) with u × v = ξ.
    pub fn plane_basis(self) -> (Vec3, Vec3) {
        let xi = self.0;
        // Seed with the axis least aligned with xi.
        let seed = if xi.x.abs() <= xi.y.abs() && xi.x.abs() <= xi.z.abs() {
            Vec3::new(1.0, 0.0, 0.0)
        } else if xi.y.abs() <= xi.z.abs() {
            Vec3::new(0.0, 1.0, 0.0)
        } else {
            Vec3::new(0.0, 0.0, 1.0)
        };
        let u = xi.cross(seed).normalized().expect("seed not parallel to xi");
        let v = xi.cross(u);
        (u, v)
    }
}

// ---------------------------------------------------------------------------
// Segment-segment closest distance
// ---------------------------------------------------------------------------

/// Minimum distance between two segments (clamped closest-point method).
pub fn segment_min_distance(a: &Segment, b: &Segment) -> f64 {
    let d1 = a.dir();
    let d2 = b.dir();
    let r = a.start - b.start;
    let aa = d1.norm2();
    let ee = d2.norm2();
    let ff = d2.dot(r);

    let (s, t);
    if aa == 0.0 && ee == 0.0 {
        return r.norm();
    }
    if aa == 0.0 {
        s = 0.0;
        t = (ff / ee).clamp(0.0, 1.0);
    } else {
        let cc = d1.dot(r);
        if ee == 0.0 {
            t = 0.0;
            s = (-cc / aa).clamp(0.0, 1.0);
        } else {
            let bb = d1.dot(d2);
            let denom = aa * ee - bb * bb;
            let s0 = if denom != 0.0 {
                ((bb * ff - cc * ee) / denom).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let t0 = bb * s0 + ff;
            if t0 < 0.0 {
                t = 0.0;
                s = (-cc / aa).clamp(0.0, 1.0);
            } else if t0 > ee {
                t = 1.0;
                s = ((bb - cc) / aa).clamp(0.0, 1.0);
            } else {
                t = t0 / ee;
                s = s0;
            }
        }
    }
    ((a.start + d1 * s) - (b.start + d2 * t)).norm()
}

/// True when any endpoint of `a` coincides with an endpoint of `b` within `eps`.
pub fn segments_share_endpoint(a: &Segment, b: &Segment, eps: f64) -> bool {
    let pts = [
        (a.start, b.start),
        (a.start, b.end),
        (a.end, b.start),
        (a.end, b.end),
    ];
    pts.iter().any(|(p, q)| (*p - *q).norm() < eps)
}

// ---------------------------------------------------------------------------
// Gauss integral of a segment pair
// ---------------------------------------------------------------------------

/// Exact Gauss double integral of two straight segments, normalized by 4π.
///
/// Returns (1/4π) ∬ (ȧ, ḃ, a−b)/|a−b|³ dt ds over the pair. The value is the
/// signed solid angle of the quadrangle spanned by the four unit vectors
/// between endpoints, divided by 4π, so it always lies in [−1/2, 1/2].
///
/// Symmetric under argument swap; negated when either segment is reversed.
pub fn seg_pair_linking(a: &Segment, b: &Segment) -> Result<f64, GeomError> {
    if a.dir().norm2() == 0.0 || b.dir().norm2() == 0.0 {
        return Err(GeomError::DegenerateSegment);
    }
    if segments_share_endpoint(a, b, GEOM_EPS) {
        return Err(GeomError::DegeneratePair);
    }
    if segment_min_distance(a, b) < GEOM_EPS {
        return Err(GeomError::DegeneratePair);
    }

    // The triple product in the integrand is constant over the pair:
    // (A, B, a(t)−b(s)) = (A × B) · (a0 − b0). Coplanar pairs integrate to 0.
    let nf = triple(a.dir(), b.dir(), a.start - b.start);
    if nf == 0.0 {
        return Ok(0.0);
    }

    let r13 = b.start - a.start;
    let r14 = b.end - a.start;
    let r23 = b.start - a.end;
    let r24 = b.end - a.end;

    // Face normals of the tetrahedron, in the quadrangle's cyclic order.
    let n1 = match r13.cross(r14).normalized() {
        Some(n) => n,
        None => return Ok(0.0),
    };
    let n2 = match r14.cross(r24).normalized() {
        Some(n) => n,
        None => return Ok(0.0),
    };
    let n3 = match r24.cross(r23).normalized() {
        Some(n) => n,
        None => return Ok(0.0),
    };
    let n4 = match r23.cross(r13).normalized() {
        Some(n) => n,
        None => return Ok(0.0),
    };

    let asin_clamped = |x: f64| x.clamp(-1.0, 1.0).asin();
    let omega = asin_clamped(n1.dot(n2))
        + asin_clamped(n2.dot(n3))
        + asin_clamped(n3.dot(n4))
        + asin_clamped(n4.dot(n1));

    Ok(omega.abs() / (4.0 * PI) * nf.signum())
}

// ---------------------------------------------------------------------------
// Projected crossing sign
// ---------------------------------------------------------------------------

/// Sign of the crossing of `a` over/under `b` in the projection along `xi`.
///
/// Returns 0 when the projected segments do not cross. When they do, the sign
/// is +1 if the over-strand direction rotated counterclockwise by 90° (viewed
/// from +ξ) aligns with the under-strand direction, −1 otherwise; the strand
/// higher along ξ is the over-strand.
pub fn signed_crossing(a: &Segment, b: &Segment, xi: Direction) -> Result<i32, GeomError> {
    let (u, v) = xi.plane_basis();
    let p = |q: Point3| (q.dot(u), q.dot(v));
    let (a0x, a0y) = p(a.start);
    let (a1x, a1y) = p(a.end);
    let (b0x, b0y) = p(b.start);
    let (b1x, b1y) = p(b.end);

    let adx = a1x - a0x;
    let ady = a1y - a0y;
    let bdx = b1x - b0x;
    let bdy = b1y - b0y;

    let cross2 = |px: f64, py: f64, qx: f64, qy: f64| px * qy - py * qx;
    let det = cross2(adx, ady, bdx, bdy);
    let rx = b0x - a0x;
    let ry = b0y - a0y;

    if det.abs() < GEOM_EPS {
        // Parallel projections: distinct lines never cross; collinear
        // overlapping ones are not in general position.
        if cross2(rx, ry, bdx, bdy).abs() < GEOM_EPS {
            let alen2 = adx * adx + ady * ady;
            if alen2 == 0.0 {
                return Err(GeomError::DegenerateProjection);
            }
            // Overlap test along the shared line.
            let t0 = (rx * adx + ry * ady) / alen2;
            let t1 = t0 + (bdx * adx + bdy * ady) / alen2;
            let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
            if hi >= 0.0 && lo <= 1.0 {
                return Err(GeomError::DegenerateProjection);
            }
        }
        return Ok(0);
    }

    let t = cross2(rx, ry, bdx, bdy) / det;
    let s = cross2(rx, ry, adx, ady) / det;

    // Endpoint-touching intersections are not in general position.
    let near = |x: f64, y: f64| (x - y).abs() < GEOM_EPS;
    if near(t, 0.0) || near(t, 1.0) || near(s, 0.0) || near(s, 1.0) {
        return Err(GeomError::DegenerateProjection);
    }
    if !(0.0..=1.0).contains(&t) || !(0.0..=1.0).contains(&s) {
        return Ok(0);
    }

    let xiv = xi.as_vec();
    let ha = a.start.dot(xiv) + t * a.dir().dot(xiv);
    let hb = b.start.dot(xiv) + s * b.dir().dot(xiv);
    if (ha - hb).abs() < GEOM_EPS {
        return Err(GeomError::DegenerateProjection);
    }

    let sign = if ha > hb {
        cross2(adx, ady, bdx, bdy)
    } else {
        cross2(bdx, bdy, adx, ady)
    };
    Ok(if sign > 0.0 { 1 } else { -1 })
}

// ---------------------------------------------------------------------------
// Binormal (torsion) angle
// ---------------------------------------------------------------------------

/// Signed angle between the binormals B₁ = e1×e2 and B₂ = e2×e3 of three
/// consecutive edge directions, measured around e2. Range [−π, π].
pub fn binormal_angle(e1: Vec3, e2: Vec3, e3: Vec3) -> Result<f64, GeomError> {
    let b1 = e1.cross(e2);
    let b2 = e2.cross(e3);
    let n1 = b1.norm();
    let n2 = b2.norm();
    if n1 <= GEOM_EPS * e1.norm() * e2.norm() || n2 <= GEOM_EPS * e2.norm() * e3.norm() {
        return Err(GeomError::DegenerateTurn);
    }
    let b1 = b1 / n1;
    let b2 = b2 / n2;
    let e2u = match e2.normalized() {
        Some(u) => u,
        None => return Err(GeomError::DegenerateSegment),
    };
    // b1 × b2 is parallel to e2; its e2-component carries the sign.
    Ok(b1.cross(b2).dot(e2u).atan2(b1.dot(b2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn seg(a: [f64; 3], b: [f64; 3]) -> Segment {
        Segment::new(Vec3::new(a[0], a[1], a[2]), Vec3::new(b[0], b[1], b[2])).unwrap()
    }

    #[test]
    fn min_distance_known_configurations() {
        // Skew perpendicular segments: closest points at midheights.
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.5, -0.5, 0.25], [0.5, 0.5, 0.25]);
        assert!((segment_min_distance(&a, &b) - 0.25).abs() < 1e-14);
        // Parallel unit-separated segments.
        let c = seg([0.0, 1.0, 0.0], [1.0, 1.0, 0.0]);
        assert!((segment_min_distance(&a, &c) - 1.0).abs() < 1e-14);
        // Crossing segments.
        let d = seg([0.5, -0.5, 0.0], [0.5, 0.5, 0.0]);
        assert!(segment_min_distance(&a, &d) < 1e-14);
        // Closest approach at endpoints.
        let e = seg([2.0, 0.0, 0.0], [3.0, 1.0, 0.5]);
        assert!((segment_min_distance(&a, &e) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn coplanar_pair_vanishes() {
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.0, 1.0, 0.0], [1.0, 1.0, 0.0]);
        assert_eq!(seg_pair_linking(&a, &b).unwrap(), 0.0);
    }

    #[test]
    fn pair_is_symmetric() {
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.3, 0.4, 0.5], [0.7, -0.2, 0.8]);
        let ab = seg_pair_linking(&a, &b).unwrap();
        let ba = seg_pair_linking(&b, &a).unwrap();
        assert!((ab - ba).abs() < 1e-15, "ab={ab} ba={ba}");
    }

    #[test]
    fn pair_matches_frozen_quadrature_value() {
        // Frozen from the quadrature oracle (tol 1e-9) over this pair.
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.5, -0.5, 0.25], [0.5, 0.5, 0.25]);
        let v = seg_pair_linking(&a, &b).unwrap();
        assert!((v - (-0.295167235300867)).abs() < 1e-8, "v={v}");
    }

    #[test]
    fn pair_bounded_by_half() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 500 {
            let p = |r: &mut rand_chacha::ChaCha8Rng| {
                Vec3::new(r.random::<f64>(), r.random::<f64>(), r.random::<f64>())
            };
            let a = Segment::new(p(&mut rng), p(&mut rng)).unwrap();
            let b = Segment::new(p(&mut rng), p(&mut rng)).unwrap();
            if let Ok(v) = seg_pair_linking(&a, &b) {
                assert!(v.abs() <= 0.5 + 1e-12, "|{v}| > 1/2");
                checked += 1;
            }
        }
    }

    #[test]
    fn crossing_mean_over_directions_approaches_pair_integral() {
        // E_ξ[ε] = 2 × (Gauss pair integral); checked at 3σ with 1e5 samples.
        use rand::SeedableRng;
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.5, -0.5, 0.25], [0.5, 0.5, 0.25]);
        let spl = seg_pair_linking(&a, &b).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let n = 100_000usize;
        let mut sum = 0i64;
        let mut sumsq = 0i64;
        let mut got = 0usize;
        while got < n {
            let xi = Direction::sample_uniform(&mut rng);
            if let Ok(s) = signed_crossing(&a, &b, xi) {
                sum += s as i64;
                sumsq += (s * s) as i64;
                got += 1;
            }
        }
        let mean = sum as f64 / n as f64;
        let var = (sumsq as f64 / n as f64 - mean * mean) * n as f64 / (n as f64 - 1.0);
        let se = (var / n as f64).sqrt();
        assert!(
            (mean - 2.0 * spl).abs() < 3.0 * se,
            "mean={mean} vs 2·spl={} (se={se})",
            2.0 * spl
        );
    }

    #[test]
    fn shared_endpoint_is_degenerate() {
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([1.0, 0.0, 0.0], [1.0, 1.0, 0.5]);
        assert_eq!(seg_pair_linking(&a, &b), Err(GeomError::DegeneratePair));
    }

    #[test]
    fn intersecting_pair_is_degenerate() {
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.5, -0.5, 0.0], [0.5, 0.5, 0.0]);
        assert_eq!(seg_pair_linking(&a, &b), Err(GeomError::DegeneratePair));
    }

    #[test]
    fn crossing_sign_flips_with_orientation() {
        let xi = Direction::new(Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let a = seg([0.0, -1.0, 1.0], [0.0, 1.0, 1.0]);
        let b = seg([-1.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let s = signed_crossing(&a, &b, xi).unwrap();
        assert!(s == 1 || s == -1);
        let s_rev = signed_crossing(&a.reversed(), &b, xi).unwrap();
        assert_eq!(s_rev, -s);
        let s_swap = signed_crossing(&b, &a, xi).unwrap();
        assert_eq!(s_swap, s);
    }

    #[test]
    fn disjoint_projection_is_zero() {
        let xi = Direction::new(Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([2.0, 1.0, 0.0], [3.0, 1.0, 0.0]);
        assert_eq!(signed_crossing(&a, &b, xi).unwrap(), 0);
    }

    #[test]
    fn parallel_disjoint_projection_is_zero() {
        // Parallel projected segments on distinct lines simply do not cross.
        let xi = Direction::new(Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let a = seg([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let b = seg([0.0, 1.0, 0.3], [1.0, 1.0, 0.3]);
        assert_eq!(signed_crossing(&a, &b, xi).unwrap(), 0);
    }

    #[test]
    fn binormal_angle_right_angle_frame() {
        // B1 = x̂×ŷ = ẑ, B2 = ŷ×ẑ = x̂, sign from (ẑ×x̂)·ŷ = +1.
        let phi = binormal_angle(
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        )
        .unwrap();
        assert!((phi - FRAC_PI_2).abs() < 1e-12, "phi={phi}");
    }

    #[test]
    fn binormal_angle_planar_is_zero() {
        let phi = binormal_angle(
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.2, 1.0, 0.0),
            Vec3::new(-0.7, 0.4, 0.0),
        )
        .unwrap();
        assert_eq!(phi, 0.0);
    }

    #[test]
    fn binormal_angle_mirror_negates() {
        let e = [
            Vec3::new(0.3, 0.5, 0.2),
            Vec3::new(-0.4, 0.8, 0.1),
            Vec3::new(0.2, -0.3, 0.9),
        ];
        let m = |v: Vec3| Vec3::new(v.x, v.y, -v.z);
        let phi = binormal_angle(e[0], e[1], e[2]).unwrap();
        let phi_m = binormal_angle(m(e[0]), m(e[1]), m(e[2])).unwrap();
        assert!((phi + phi_m).abs() < 1e-12);
    }

    #[test]
    fn binormal_angle_parallel_pair_is_degenerate() {
        let e2 = Vec3::new(0.5, 0.5, 0.0);
        assert_eq!(
            binormal_angle(e2 * 2.0, e2, Vec3::new(0.0, 0.0, 1.0)),
            Err(GeomError::DegenerateTurn)
        );
    }

    #[test]
    fn direction_basis_is_right_handed() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let d = Direction::sample_uniform(&mut rng);
            let (u, v) = d.plane_basis();
            assert!((u.norm() - 1.0).abs() < 1e-12);
            assert!((v.norm() - 1.0).abs() < 1e-12);
            assert!((u.cross(v) - d.as_vec()).norm() < 1e-12);
        }
    }
}
