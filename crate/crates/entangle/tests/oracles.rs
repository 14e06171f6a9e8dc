//! Cross-checks between the exact closed forms and the slow estimators:
//! brute-force quadrature of the Gauss integrand and projection-direction
//! sampling of diagram crossing sums.

use entangle::chains::{
    fixed_square, fixed_trefoil, gen_uniform_walk, Chain, RngStream, StreamKey,
};
use entangle::geometry::{seg_pair_linking, segment_min_distance, Segment, Vec3};
use entangle::measures::{acn, linking_number, writhe};
use entangle::oracle::{
    acn_by_projection, linking_by_projection, seg_pair_abs_quadrature, seg_pair_quadrature,
    writhe_by_projection,
};
use rand::Rng;

fn rng(tag: u64) -> rand_chacha::ChaCha8Rng {
    RngStream::new(0x0e_ac1e).rng(StreamKey::new(tag, 0, 0))
}

fn random_generic_pair(rng: &mut impl Rng, min_dist: f64) -> (Segment, Segment) {
    loop {
        let mut p = || Vec3::new(rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>());
        let (a0, a1, b0, b1) = (p(), p(), p(), p());
        let (Ok(a), Ok(b)) = (Segment::new(a0, a1), Segment::new(b0, b1)) else {
            continue;
        };
        if segment_min_distance(&a, &b) >= min_dist {
            return (a, b);
        }
    }
}

#[test]
fn kernel_agrees_with_quadrature_on_random_pairs() {
    let mut rng = rng(1);
    let mut max_err: f64 = 0.0;
    for _ in 0..300 {
        let (a, b) = random_generic_pair(&mut rng, 0.02);
        let exact = seg_pair_linking(&a, &b).unwrap();
        let quad = seg_pair_quadrature(&a, &b, 1e-9).unwrap();
        max_err = max_err.max((exact - quad).abs());
    }
    assert!(max_err < 1e-8, "max error {max_err:.3e}");
}

#[test]
fn unsigned_quadrature_equals_absolute_kernel() {
    // The integrand's sign is constant over a straight pair, so the unsigned
    // integral must equal |signed| after the 2π/4π normalization swap.
    let mut rng = rng(2);
    for _ in 0..50 {
        let (a, b) = random_generic_pair(&mut rng, 0.05);
        let signed = seg_pair_linking(&a, &b).unwrap();
        let unsigned = seg_pair_abs_quadrature(&a, &b, 1e-9).unwrap();
        assert!(
            (unsigned - 2.0 * signed.abs()).abs() < 1e-8,
            "unsigned={unsigned} signed={signed}"
        );
    }
}

#[test]
fn trefoil_writhe_matches_projection_oracle() {
    let trefoil = fixed_trefoil();
    let exact = writhe(&trefoil).unwrap();
    let est = writhe_by_projection(&trefoil, 100_000, &mut rng(3));
    let z = (est.value - exact) / est.stderr;
    assert!(z.abs() < 3.0, "exact {exact}, oracle {} ± {} (z={z})", est.value, est.stderr);
}

#[test]
fn trefoil_acn_matches_projection_oracle() {
    let trefoil = fixed_trefoil();
    let exact = acn(&trefoil).unwrap();
    let est = acn_by_projection(&trefoil, 1_000_000, &mut rng(4));
    let z = (est.value - exact) / est.stderr;
    assert!(z.abs() < 3.0, "exact {exact}, oracle {} ± {} (z={z})", est.value, est.stderr);
}

#[test]
fn planar_square_has_no_crossings_in_any_projection() {
    let est = writhe_by_projection(&fixed_square(), 2_000, &mut rng(5));
    assert_eq!(est.value, 0.0);
    assert_eq!(est.stderr, 0.0);
}

#[test]
fn walk_pair_linking_matches_projection_oracle() {
    let mut gen = rng(6);
    let a = gen_uniform_walk(12, &mut gen);
    let b = gen_uniform_walk(12, &mut gen);
    let exact = linking_number(&a, &b).unwrap();
    let est = linking_by_projection(&a, &b, 100_000, &mut rng(7));
    let z = (est.value - exact) / est.stderr;
    assert!(z.abs() < 3.0, "exact {exact}, oracle {} ± {} (z={z})", est.value, est.stderr);
}

#[test]
fn hopf_pair_linking_is_plus_minus_one() {
    let a = Chain::new(
        vec![
            Vec3::new(0.0, -1.0, -1.0),
            Vec3::new(0.0, 1.0, -1.0),
            Vec3::new(0.0, 1.0, 1.0),
            Vec3::new(0.0, -1.0, 1.0),
        ],
        true,
    )
    .unwrap();
    let b = Chain::new(
        vec![
            Vec3::new(-1.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(1.0, 2.0, 0.0),
            Vec3::new(-1.0, 2.0, 0.0),
        ],
        true,
    )
    .unwrap();
    let est = linking_by_projection(&a, &b, 5_000, &mut rng(8));
    // The diagram linking number of a closed pair is the same in every
    // generic projection, so the estimate is exact with zero spread.
    assert!((est.value.abs() - 1.0).abs() < 1e-12);
    assert_eq!(est.stderr, 0.0);

    let split = b.translated(Vec3::new(0.0, 0.0, 9.0));
    let est = linking_by_projection(&a, &split, 2_000, &mut rng(9));
    assert_eq!(est.value, 0.0);
}

#[test]
fn projection_estimate_is_rotation_invariant_in_distribution() {
    let trefoil = fixed_trefoil();
    // Rotate 90° about z: (x, y, z) -> (-y, x, z).
    let rotated = trefoil.map_vertices(|p| Vec3::new(-p.y, p.x, p.z));
    let e1 = writhe_by_projection(&trefoil, 50_000, &mut rng(10));
    let e2 = writhe_by_projection(&rotated, 50_000, &mut rng(11));
    let gap = (e1.value - e2.value).abs();
    let sigma = (e1.stderr * e1.stderr + e2.stderr * e2.stderr).sqrt();
    assert!(gap < 3.0 * sigma, "gap {gap} vs 3σ {}", 3.0 * sigma);
}

#[test]
fn projection_stderr_scales_as_inverse_sqrt_ndirs() {
    let trefoil = fixed_trefoil();
    let small = writhe_by_projection(&trefoil, 20_000, &mut rng(12));
    let large = writhe_by_projection(&trefoil, 80_000, &mut rng(13));
    let ratio = large.stderr / small.stderr;
    assert!((0.4..0.6).contains(&ratio), "stderr ratio {ratio}");
}
