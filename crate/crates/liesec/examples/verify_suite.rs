//! Running the claim verification suite as a library call.
//!
//! The suite sweeps a corpus and reports one outcome per claim: how many
//! instances the quantifier ranged over, any violations (failures are
//! data, not panics), and honesty notes for skipped or degraded checks.
//!
//! Run with: `cargo run --example verify_suite`

use liesec::corpus::{generate_corpus, CorpusSpec};
use liesec::verify::{rational_catalog_targets, verify, ClaimId, ClaimStatus, VerifyTarget};
use liesec::FieldSpec;

const BUDGET: u64 = 1 << 20;

fn print_outcomes(outcomes: &[liesec::verify::VerificationOutcome]) {
    for o in outcomes {
        let status = match &o.status {
            ClaimStatus::Pass => format!("pass ({} instances)", o.instances_checked),
            ClaimStatus::Fail => format!("FAIL with {} violation(s)", o.violations.len()),
            ClaimStatus::Skipped { reason } => format!("skipped: {reason}"),
        };
        println!("  {}: {status}", o.claim.name());
        for v in &o.violations {
            println!("    violation in {}: {}", v.algebra, v.witness);
        }
        for n in &o.notes {
            println!("    note: {n}");
        }
    }
}

fn main() {
    // A deterministic generated corpus over GF(2): every maximal
    // subalgebra and every ideal is enumerated exhaustively.
    let corpus = generate_corpus(&CorpusSpec {
        field: FieldSpec::PrimeField(2),
        ambient_matrix_size: 3,
        generator_count: 2,
        seed: 42,
        max_dim: 4,
        target_count: 12,
    })
    .expect("corpus generation");
    println!(
        "GF(2) corpus of {} algebras (dims ≤ 4):",
        corpus.algebras.len()
    );
    let targets = VerifyTarget::from_corpus(&corpus);
    print_outcomes(&verify(&ClaimId::ALL, &targets, BUDGET));

    // The characteristic-zero sweep: catalog entries with declared
    // maximal subalgebras, including the structure theorem instances.
    println!("rational catalog sweep:");
    let targets = rational_catalog_targets().expect("catalog targets");
    print_outcomes(&verify(&ClaimId::ALL, &targets, BUDGET));
}
