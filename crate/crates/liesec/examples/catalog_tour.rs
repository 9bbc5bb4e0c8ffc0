//! Tour of the built-in algebra catalog.
//!
//! Every entry is constructed from exact structure constants, validated
//! against the Jacobi identity, and tagged with the structural
//! properties the construction guarantees.
//!
//! Run with: `cargo run --example catalog_tour`

use liesec::catalog::catalog;
use liesec::invariants::{derived_subalgebra, is_nilpotent, is_solvable};
use liesec::FieldSpec;

fn main() {
    let entries = [
        (FieldSpec::Rationals, "abelian(3)"),
        (FieldSpec::Rationals, "r2"),
        (FieldSpec::Rationals, "heisenberg"),
        (FieldSpec::Rationals, "upper_triangular(3)"),
        (FieldSpec::Rationals, "sl2"),
        (FieldSpec::Rationals, "gejn(1)"),
        (FieldSpec::Rationals, "direct_sum(sl2,r2)"),
        (FieldSpec::PrimeField(2), "sl2"),
        (FieldSpec::PrimeField(3), "heisenberg"),
    ];

    for (field, name) in entries {
        let entry = catalog(field, name).expect("catalog entry");
        let l = &entry.algebra;
        assert!(l.validate().is_empty(), "catalog entries satisfy Jacobi");

        let props: Vec<String> = entry
            .declared_properties
            .iter()
            .map(|p| p.to_string())
            .collect();
        println!(
            "{name} over {field:?}: dim {}, derived subalgebra dim {}, solvable: {}, \
             nilpotent: {}",
            l.dim,
            derived_subalgebra(l).dim(),
            is_solvable(l),
            is_nilpotent(l),
        );
        if !props.is_empty() {
            println!("  declared: {}", props.join(", "));
        }
        if !entry.declared_maximals.is_empty() {
            let dims: Vec<usize> = entry.declared_maximals.iter().map(|m| m.dim()).collect();
            println!("  declared maximal subalgebras of dims {dims:?}");
        }
    }
}
