//! Radicals, minimal ideals, and chief series.
//!
//! A chief series refines 0 ⊂ L into steps B ⊂ A where A/B is a minimal
//! ideal of L/B (a chief factor). Solvability is visible in the series:
//! every chief factor of a solvable algebra is abelian.
//!
//! Run with: `cargo run --example chief_series`

use liesec::catalog::catalog;
use liesec::ideals::{chief_series, minimal_ideals, radical};
use liesec::invariants::is_solvable;
use liesec::FieldSpec;

fn main() {
    let cases = [
        (FieldSpec::Rationals, "upper_triangular(3)"),
        (FieldSpec::Rationals, "direct_sum(sl2,r2)"),
        (FieldSpec::PrimeField(2), "heisenberg"),
        (FieldSpec::PrimeField(3), "sl2"),
    ];

    for (field, name) in cases {
        let l = catalog(field, name).expect("catalog entry").algebra;
        let r = radical(&l).expect("radical");
        println!(
            "{name} over {field:?}: dim {}, radical dim {}, solvable: {}",
            l.dim,
            r.dim(),
            is_solvable(&l)
        );

        let minimal = minimal_ideals(&l).expect("minimal ideals");
        for (ideal, verified) in minimal.ideals.iter().zip(&minimal.verified) {
            println!(
                "  minimal ideal of dim {} (minimality {})",
                ideal.dim(),
                if *verified { "certified" } else { "not certified" }
            );
        }

        let series = chief_series(&l).expect("chief series");
        let steps: Vec<String> = series
            .iter()
            .map(|f| {
                format!(
                    "{}/{}{}",
                    f.a.dim(),
                    f.b.dim(),
                    if f.abelian { " (abelian)" } else { "" }
                )
            })
            .collect();
        println!("  chief factors (dims): {}", steps.join(", "));
        if is_solvable(&l) {
            assert!(series.iter().all(|f| f.abelian));
        }
    }
}
