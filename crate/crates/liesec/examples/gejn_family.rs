//! The gejn(k) family: minimal non-abelian simple algebras over ℚ.
//!
//! gejn(k) is a 3(k+1)-dimensional simple Lie algebra over the rationals
//! whose proper subalgebras are all abelian — so it is far from sl₂ in
//! structure while sharing the "every section looks the same" behavior
//! at its three distinguished maximal subalgebras.
//!
//! Run with: `cargo run --example gejn_family`

use liesec::cert::centroid_field_certificate;
use liesec::ideals::is_certified_simple;
use liesec::invariants::killing_rank;
use liesec::catalog::catalog;
use liesec::maximal::{is_maximal, MaximalityAnswer};
use liesec::section::analyze_maximal;
use liesec::FieldSpec;

const BUDGET: u64 = 1 << 20;

fn main() {
    for k in 1..=2usize {
        let entry = catalog(FieldSpec::Rationals, &format!("gejn({k})")).expect("catalog entry");
        let l = &entry.algebra;
        let s = k + 1;
        assert_eq!(l.dim, 3 * s);

        // Simplicity is certified, not assumed: nondegenerate Killing
        // form plus a 1-dimensional centroid plus minimal-ideal checks.
        let simple = is_certified_simple(l).expect("certificate");
        let centroid = centroid_field_certificate(l);
        println!(
            "gejn({k}): dim {}, killing rank {}, certified simple: {}, centroid dim {}",
            l.dim,
            killing_rank(l),
            simple.certified,
            centroid.centroid_dim,
        );

        for (idx, m) in entry.declared_maximals.iter().enumerate() {
            // Maximality of the declared subalgebras is re-certified by
            // the one-step extension argument, never trusted.
            let answer = is_maximal(l, m, BUDGET).expect("certification");
            assert_eq!(answer, MaximalityAnswer::Yes);
            let r = analyze_maximal(l, m, BUDGET).expect("analysis");
            println!(
                "  maximal #{idx} of dim {}: c-index {}, ideal index {}, type {}",
                r.m.dim(),
                r.c_index,
                r.ideal_index,
                r.prim_type,
            );
            // The supplementing factor is L itself (simple), so the
            // section is M and the c-index equals dim M = s.
            assert_eq!(r.c_index, s);
            assert_eq!(r.ideal_index, r.c_index + (l.dim - m.dim()));
        }
    }
}
