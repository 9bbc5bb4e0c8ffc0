//! Full analysis of maximal subalgebras: cores, sections, and indices.
//!
//! For a maximal subalgebra M of L, the analysis reports the core M_L
//! (largest ideal of L inside M), the section Sec(M) built from a chief
//! factor supplemented by M, the c-index η* = dim Sec(M), the ideal
//! index η, the primitivity type of L/M_L, and whether M is a c-ideal.
//! The identity η = η* + dim(L/M) is re-checked on every call.
//!
//! Run with: `cargo run --example analyze_maximal`

use liesec::catalog::catalog;
use liesec::maximal::maximal_subalgebras;
use liesec::section::analyze_maximal;
use liesec::FieldSpec;

const BUDGET: u64 = 1 << 20;

fn main() {
    // Over ℚ, analyze the declared maximal subalgebras of sl₂: the two
    // Borels. Their sections are 2-dimensional and non-abelian, so a
    // simple algebra can be "seen" failing solvability at any maximal.
    let sl2 = catalog(FieldSpec::Rationals, "sl2").expect("catalog entry");
    println!("sl2 over Q:");
    for m in &sl2.declared_maximals {
        let r = analyze_maximal(&sl2.algebra, m, BUDGET).expect("analysis");
        println!(
            "  Borel of dim {}: type {}, c-index {}, ideal index {}, c-ideal: {}, section \
             solvable: {}, nil: {}",
            r.m.dim(),
            r.prim_type,
            r.c_index,
            r.ideal_index,
            r.is_c_ideal,
            r.sec_flags.solvable,
            r.sec_flags.nil,
        );
        assert_eq!(r.c_index, 2);
        assert_eq!(r.ideal_index, 3);
    }

    // Over GF(2) every maximal subalgebra can be enumerated outright.
    for name in ["r2", "heisenberg"] {
        let l = catalog(FieldSpec::PrimeField(2), name)
            .expect("catalog entry")
            .algebra;
        let maximals = maximal_subalgebras(&l, BUDGET).expect("enumeration");
        println!("{name} over GF(2): {} maximal subalgebras", maximals.len());
        for m in &maximals {
            let r = analyze_maximal(&l, m, BUDGET).expect("analysis");
            println!(
                "  dim {}: type {}, c-index {}, ideal index {}, core dim {}",
                r.m.dim(),
                r.prim_type,
                r.c_index,
                r.ideal_index,
                r.core.dim(),
            );
            // Both algebras are solvable, so every section is trivial.
            assert_eq!(r.c_index, 0);
        }
    }
}
