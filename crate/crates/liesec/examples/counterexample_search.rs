//! Sharpness probe: hunting for non-solvable algebras with a
//! trivial-section maximal subalgebra.
//!
//! Over characteristic 0 no such algebra exists (solvability is
//! equivalent to all sections being trivial), but over small prime
//! fields the reverse direction is only a theorem for the claims'
//! stated scopes — so the search treats any hit as a finding to report,
//! not a failure.
//!
//! Run with: `cargo run --example counterexample_search`

use liesec::verify::search_counterexample;
use liesec::FieldSpec;

fn main() {
    for p in [2u64, 3] {
        let outcome = search_counterexample(FieldSpec::PrimeField(p), 4, 42, 8, 1 << 20)
            .expect("search");
        println!(
            "GF({p}), dim ≤ 4, seed 42: scanned {} algebras, {} non-solvable, {} finding(s)",
            outcome.algebras_scanned, outcome.non_solvable_count, outcome.findings.len()
        );
        for f in &outcome.findings {
            println!(
                "  {} (dim {}): {} trivial-section maximal subalgebra(s)",
                f.algebra,
                f.dim,
                f.trivial_maximals.len()
            );
        }
        for w in &outcome.warnings {
            println!("  warning: {w}");
        }
    }
}
