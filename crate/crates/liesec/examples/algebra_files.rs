//! The JSON algebra file format: exact, canonical, round-tripping.
//!
//! Scalars are stored as canonical strings ("1/2", never 0.5), omitted
//! basis pairs mean zero brackets, and saving is deterministic — so a
//! saved file reloads to an equal algebra and re-saves to identical
//! bytes.
//!
//! Run with: `cargo run --example algebra_files`

use liesec::catalog::catalog;
use liesec::format::{load_str, save_string, sha256_hex};
use liesec::FieldSpec;

fn main() {
    let l = catalog(FieldSpec::Rationals, "sl2").expect("catalog entry").algebra;
    let text = save_string(&l);
    println!("sl2 over Q serializes to:\n{text}");
    println!("sha-256: {}", sha256_hex(text.as_bytes()));

    let back = load_str(&text).expect("reload");
    assert_eq!(back.dim, l.dim);
    assert!(back.structure_identical(&l));
    assert_eq!(save_string(&back), text, "byte-exact round trip");

    // Loading is strict: the same file with a non-canonical scalar
    // ("2/4" instead of "1/2") is rejected, not silently repaired.
    let broken = text.replace("\"1\"", "\"2/2\"");
    assert!(load_str(&broken).is_err());
    println!("non-canonical scalar spelling rejected, as required");
}
