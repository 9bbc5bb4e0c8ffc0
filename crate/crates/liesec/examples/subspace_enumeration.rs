//! Exhaustive subspace enumeration over a finite field.
//!
//! Over GF(q) the number of d-dimensional subspaces of an n-dimensional
//! space is the Gaussian binomial [n choose d]_q; the enumerator visits
//! each exactly once, which is what makes exhaustive ideal and maximal
//! subalgebra searches possible at small scale.
//!
//! Run with: `cargo run --example subspace_enumeration`

use liesec::catalog::catalog;
use liesec::invariants::{is_ideal, is_subalgebra};
use liesec::subspace::{enumerate_subspaces, gaussian_binomial};
use liesec::FieldSpec;

fn main() {
    let field = FieldSpec::PrimeField(2);
    let n = 4;
    let budget = 1 << 20;

    for d in 0..=n {
        let expected = gaussian_binomial(n, d, 2);
        let found = enumerate_subspaces(field, n, d, budget)
            .expect("within budget")
            .len();
        println!("[{n} choose {d}]_2 = {expected}, enumerated {found}");
        assert_eq!(expected, found as u128);
    }

    // Classify every proper nonzero subspace of the 3-dimensional
    // Heisenberg algebra over GF(2).
    let l = catalog(field, "heisenberg").expect("catalog entry").algebra;
    let (mut subalgebras, mut ideals, mut other) = (0usize, 0usize, 0usize);
    for d in 1..l.dim {
        for s in &enumerate_subspaces(field, l.dim, d, budget).expect("within budget") {
            if is_ideal(&l, &s) {
                ideals += 1;
            } else if is_subalgebra(&l, &s) {
                subalgebras += 1;
            } else {
                other += 1;
            }
        }
    }
    println!(
        "heisenberg over GF(2): {ideals} proper nonzero ideals, {subalgebras} \
         non-ideal subalgebras, {other} bare subspaces"
    );
}
