//! Quotient algebras L/B and restriction to subalgebras.
//!
//! ## Coordinates
//!
//! For an ideal B with RREF pivot columns P, the quotient L/B uses the
//! complementary free columns F as coordinates: the class of x is read off
//! by B-reducing x and keeping the entries at F. The section y ↦ Σ y_r e_{F_r}
//! lifts classes back to representatives, and projection ∘ lift is the
//! identity on L/B. Basis labels of the free columns carry over, so L/0
//! reproduces L exactly.
//!
//! Structure constants of the quotient are projections of the lifted
//! brackets; the result is validated after construction and an anomaly is
//! reported if the Jacobi identity broke (it cannot for a genuine ideal).

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::invariants::{is_ideal, is_subalgebra};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use std::collections::BTreeMap;

/// The linear data of a quotient L → L/B: projection, a fixed linear
/// section, and B itself.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    /// The ideal that was quotiented out.
    pub b: Subspace,
    /// q×n projection matrix (q = dim L − dim B).
    pub proj: Matrix,
    /// n×q section matrix; proj · lift = identity.
    pub lift: Matrix,
    /// Columns of L kept as quotient coordinates (non-pivots of B).
    pub free_cols: Vec<usize>,
}

impl QuotientMap {
    pub fn project_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.proj.mul_vec(x)
    }

    pub fn lift_vec(&self, y: &[Scalar]) -> Vec<Scalar> {
        self.lift.mul_vec(y)
    }

    /// Image of a subspace of L in L/B.
    pub fn push_subspace(&self, u: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = u.basis_rows().map(|r| self.project_vec(r)).collect();
        Subspace::from_rows(self.b.field, self.proj.rows, rows)
    }

    /// Preimage of a subspace of L/B in L; always contains B.
    pub fn pull_subspace(&self, v: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = v.basis_rows().map(|r| self.lift_vec(r)).collect();
        self.b
            .sum(&Subspace::from_rows(self.b.field, self.lift.rows, rows))
    }
}

/// Quotient of L by a validated ideal B.
pub fn quotient(l: &LieAlgebra, b: &Subspace) -> Result<(LieAlgebra, QuotientMap)> {
    if !is_ideal(l, b) {
        return Err(Error::NotAnIdeal);
    }
    let f = l.field;
    let n = l.dim;
    let pivots = b.pivots();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free_cols: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let q = free_cols.len();
    // Projection: reduce each basis vector modulo B, keep free coordinates.
    let mut proj = Matrix::zeros(f, q, n);
    for c in 0..n {
        let reduced = b.reduce(&l.basis_vector(c));
        for (r, &fc) in free_cols.iter().enumerate() {
            proj.set(r, c, reduced[fc].clone());
        }
    }
    // Section: class r ↦ e_{free_cols[r]}.
    let mut lift = Matrix::zeros(f, n, q);
    for (r, &fc) in free_cols.iter().enumerate() {
        lift.set(fc, r, f.one());
    }
    let map = QuotientMap {
        b: b.clone(),
        proj,
        lift,
        free_cols: free_cols.clone(),
    };
    // Structure constants from lifted brackets.
    let mut sc = BTreeMap::new();
    for i in 0..q {
        for j in i + 1..q {
            let z = l.bracket(
                &l.basis_vector(free_cols[i]),
                &l.basis_vector(free_cols[j]),
            );
            sc.insert((i, j), map.project_vec(&z));
        }
    }
    let labels: Vec<String> = free_cols
        .iter()
        .map(|&c| l.basis_labels[c].clone())
        .collect();
    let quot = LieAlgebra::new(f, q, Some(labels), sc)?;
    let violations = quot.validate();
    if !violations.is_empty() {
        return Err(Error::Anomaly {
            detail: format!(
                "quotient broke the Jacobi identity ({} violations)",
                violations.len()
            ),
        });
    }
    Ok((quot, map))
}

/// The algebra structure induced on a validated subalgebra S, in the basis
/// given by S's canonical rows.
pub fn restrict(l: &LieAlgebra, s: &Subspace) -> Result<LieAlgebra> {
    if !is_subalgebra(l, s) {
        return Err(Error::NotASubalgebra);
    }
    let f = l.field;
    let r = s.dim();
    let rows: Vec<Vec<Scalar>> = s.basis_rows().map(<[Scalar]>::to_vec).collect();
    let mut sc = BTreeMap::new();
    for i in 0..r {
        for j in i + 1..r {
            let z = l.bracket(&rows[i], &rows[j]);
            let coords = s.coords(&z).ok_or_else(|| Error::Anomaly {
                detail: "bracket of subalgebra basis vectors escaped the subalgebra".into(),
            })?;
            sc.insert((i, j), coords);
        }
    }
    let restricted = LieAlgebra::new(f, r, None, sc)?;
    debug_assert!(
        restricted.validate().is_empty(),
        "restriction inherits the Jacobi identity"
    );
    Ok(restricted)
}
