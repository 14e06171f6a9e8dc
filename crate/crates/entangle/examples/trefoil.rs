//! Measures of the built-in six-vertex trefoil, cross-checked against the
//! projection oracle.

use entangle::chains::{fixed_trefoil, RngStream, StreamKey};
use entangle::measures::{acn, self_linking, total_torsion, writhe};
use entangle::oracle::writhe_by_projection;

fn main() {
    let trefoil = fixed_trefoil();
    let wr = writhe(&trefoil).unwrap();
    println!("writhe        = {wr:+.9}");
    println!("total torsion = {:+.9}", total_torsion(&trefoil));
    println!("self-linking  = {:+.9}", self_linking(&trefoil).unwrap());
    println!("acn           = {:+.9}", acn(&trefoil).unwrap());

    let mut rng = RngStream::new(1).rng(StreamKey::new(0, 0, 0));
    let est = writhe_by_projection(&trefoil, 200_000, &mut rng);
    println!(
        "writhe by projection sampling: {:+.6} ± {:.6} (exact {wr:+.6})",
        est.value, est.stderr
    );
}
