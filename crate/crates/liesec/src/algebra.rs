//! Structure-constant Lie algebras.
//!
//! ## Representation
//!
//! An n-dimensional algebra stores, for each basis pair i < j, the
//! coefficient vector of [e_i, e_j]; pairs with zero bracket are absent.
//! Antisymmetry is structural: [e_j, e_i] is the negation of the stored
//! vector, and [e_i, e_i] is zero by construction. Because the diagonal is
//! never stored, the alternating law [x, x] = 0 holds identically in every
//! characteristic — including characteristic 2, where it does not follow
//! from antisymmetry.
//!
//! ## Validation
//!
//! [`LieAlgebra::validate`] checks the Jacobi identity on every basis triple
//! i < j < k and returns violations as data (empty list = valid), so corrupt
//! input files can be diagnosed rather than rejected opaquely.
//!
//! ## Matrix closures
//!
//! [`LieAlgebra::from_matrices`] spans a set of square matrices, closes the
//! span under commutators, and converts the result to structure constants —
//! the bridge from concrete matrix algebras (catalog constructions, corpus
//! sampling) to the abstract representation.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::Subspace;
use std::collections::BTreeMap;

/// A finite-dimensional Lie algebra presented by structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `sc[(i,j)]` with i < j is the coefficient vector of [e_i, e_j];
    /// missing keys mean zero. Stored vectors are never all-zero.
    sc: BTreeMap<(usize, usize), Vec<Scalar>>,
    /// Optional free-text note on where the algebra came from.
    pub provenance: Option<String>,
}

/// One failed Jacobi (or alternation) check, as data.
#[derive(Clone, Debug)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// The nonzero value of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
    pub residual: Vec<Scalar>,
}

impl LieAlgebra {
    /// Builds an algebra from sparse structure constants. Keys must satisfy
    /// i < j < dim; coefficient vectors must have length dim. All-zero
    /// vectors are dropped to keep the representation canonical.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        basis_labels: Option<Vec<String>>,
        sc: BTreeMap<(usize, usize), Vec<Scalar>>,
    ) -> Result<LieAlgebra> {
        field.validate()?;
        let labels = match basis_labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(Error::InvalidInput {
                        detail: format!("{} labels for dimension {dim}", l.len()),
                    });
                }
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let mut clean = BTreeMap::new();
        for ((i, j), v) in sc {
            if i >= j || j >= dim {
                return Err(Error::InvalidInput {
                    detail: format!("bad structure-constant key ({i},{j}) for dimension {dim}"),
                });
            }
            if v.len() != dim {
                return Err(Error::InvalidInput {
                    detail: format!("coefficient vector for ({i},{j}) has length {}", v.len()),
                });
            }
            if !v.iter().all(Scalar::is_zero) {
                clean.insert((i, j), v);
            }
        }
        Ok(LieAlgebra {
            field,
            dim,
            basis_labels: labels,
            sc: clean,
            provenance: None,
        })
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(field: FieldSpec, dim: usize) -> LieAlgebra {
        LieAlgebra::new(field, dim, None, BTreeMap::new()).expect("abelian is always valid")
    }

    /// Sparse structure constants (i < j only, zero entries absent).
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.sc
    }

    /// [e_i, e_j] for arbitrary index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        let f = self.field;
        if i == j {
            return vec![f.zero(); self.dim];
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.sc.get(&(a, b)) {
            None => vec![f.zero(); self.dim],
            Some(v) => {
                if flip {
                    v.iter().map(|s| f.neg(s)).collect()
                } else {
                    v.clone()
                }
            }
        }
    }

    /// Bilinear bracket of coefficient vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "vector length mismatch");
        assert_eq!(y.len(), self.dim, "vector length mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for (&(i, j), v) in &self.sc {
            // Contribution (x_i y_j − x_j y_i) · [e_i, e_j].
            let c = f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i]));
            if c.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                if !v[k].is_zero() {
                    out[k] = f.add(&out[k], &f.mul(&c, &v[k]));
                }
            }
        }
        out
    }

    /// Adjoint matrix of x: column j is [x, e_j].
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_vector(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Adjoint matrix of basis vector e_i.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&self.basis_vector(i))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let f = self.field;
        let mut v = vec![f.zero(); self.dim];
        v[i] = f.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    /// The full space as a subspace value.
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// Jacobi check on every triple i < j < k; violations returned as data.
    /// (Alternation needs no check: the representation cannot express a
    /// nonzero [e_i, e_i].)
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let f = self.field;
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let t1 = self.bracket(&self.bracket_basis(i, j), &self.basis_vector(k));
                    let t2 = self.bracket(&self.bracket_basis(j, k), &self.basis_vector(i));
                    let t3 = self.bracket(&self.bracket_basis(k, i), &self.basis_vector(j));
                    let mut residual = Vec::with_capacity(self.dim);
                    let mut nonzero = false;
                    for idx in 0..self.dim {
                        let s = f.add(&f.add(&t1[idx], &t2[idx]), &t3[idx]);
                        nonzero |= !s.is_zero();
                        residual.push(s);
                    }
                    if nonzero {
                        out.push(JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        out
    }

    /// True when all structure constants vanish.
    pub fn is_abelian(&self) -> bool {
        self.sc.is_empty()
    }

    /// Structural identity: same field, dimension, and stored constants
    /// (labels and provenance ignored).
    pub fn structure_identical(&self, other: &LieAlgebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.sc == other.sc
    }

    /// Direct sum with componentwise bracket.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        assert_eq!(self.field, other.field, "field mismatch in direct_sum");
        let f = self.field;
        let n = self.dim;
        let m = other.dim;
        let mut sc = BTreeMap::new();
        for (&(i, j), v) in &self.sc {
            let mut ext = v.clone();
            ext.extend(vec![f.zero(); m]);
            sc.insert((i, j), ext);
        }
        for (&(i, j), v) in &other.sc {
            let mut ext = vec![f.zero(); n];
            ext.extend(v.iter().cloned());
            sc.insert((i + n, j + n), ext);
        }
        let mut labels: Vec<String> = self.basis_labels.iter().map(|l| format!("{l}'")).collect();
        labels.extend(other.basis_labels.iter().map(|l| format!("{l}''")));
        LieAlgebra::new(f, n + m, Some(labels), sc).expect("direct sum of valid algebras")
    }

    /// Lie algebra generated by a set of square matrices: spans them, closes
    /// the span under commutators, and reads off structure constants.
    ///
    /// Returns `Ok(None)` when the closure dimension exceeds `max_dim`.
    /// The returned closure keeps the generating matrices (pruned to an
    /// independent set) as its leading basis vectors.
    pub fn from_matrices(
        field: FieldSpec,
        mats: &[Matrix],
        max_dim: Option<usize>,
    ) -> Result<Option<MatrixClosure>> {
        field.validate()?;
        let Some(first) = mats.first() else {
            return Err(Error::InvalidInput {
                detail: "from_matrices needs at least one matrix".into(),
            });
        };
        let m = first.rows;
        for mat in mats {
            if mat.rows != m || mat.cols != m || mat.field != field {
                return Err(Error::InvalidInput {
                    detail: "from_matrices: matrices must be square, same size, same field".into(),
                });
            }
        }
        let cap = max_dim.unwrap_or(m * m);
        let ambient = m * m;
        let mut basis: Vec<Matrix> = Vec::new();
        let mut span = Subspace::zero(field, ambient);
        let push_independent = |mat: &Matrix, basis: &mut Vec<Matrix>, span: &mut Subspace| {
            let flat = mat.flatten();
            if span.contains(&flat) {
                return false;
            }
            *span = span.sum(&Subspace::from_rows(field, ambient, vec![flat]));
            basis.push(mat.clone());
            true
        };
        for mat in mats {
            if !mat.is_zero() {
                push_independent(mat, &mut basis, &mut span);
            }
        }
        // Close under commutators; each pass brackets new members against
        // everything. Dimension strictly grows per pass, so ≤ ambient passes.
        let mut frontier_start = 0;
        while frontier_start < basis.len() {
            if basis.len() > cap {
                return Ok(None);
            }
            let frontier_end = basis.len();
            for a in 0..frontier_end {
                let lo = a.max(frontier_start);
                for b in lo..frontier_end {
                    if a == b {
                        continue;
                    }
                    let comm = basis[a].mul(&basis[b]).sub(&basis[b].mul(&basis[a]));
                    if !comm.is_zero() {
                        push_independent(&comm, &mut basis, &mut span);
                        if basis.len() > cap {
                            return Ok(None);
                        }
                    }
                }
            }
            frontier_start = frontier_end;
        }
        if basis.len() > cap {
            return Ok(None);
        }
        let dim = basis.len();
        if dim == 0 {
            return Ok(Some(MatrixClosure {
                algebra: LieAlgebra::abelian(field, 0),
                matrices: Vec::new(),
            }));
        }
        // Structure constants: solve B^T · x = flat([b_i, b_j]).
        let bt = Matrix::from_rows(
            field,
            basis.iter().map(|b| b.flatten()).collect(),
            ambient,
        )
        .transpose();
        let mut sc = BTreeMap::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let comm = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
                let coords = bt.solve(&comm.flatten()).ok_or_else(|| Error::Anomaly {
                    detail: "commutator escaped its own closure".into(),
                })?;
                sc.insert((i, j), coords);
            }
        }
        let algebra = LieAlgebra::new(field, dim, None, sc)?;
        Ok(Some(MatrixClosure {
            algebra,
            matrices: basis,
        }))
    }
}

/// Result of [`LieAlgebra::from_matrices`]: the abstract algebra plus the
/// concrete matrices realizing its basis (in order).
#[derive(Clone, Debug)]
pub struct MatrixClosure {
    pub algebra: LieAlgebra,
    pub matrices: Vec<Matrix>,
}

impl MatrixClosure {
    /// Coordinates of a matrix in the closure basis, if it lies in the span.
    pub fn coords_of(&self, mat: &Matrix) -> Option<Vec<Scalar>> {
        let field = self.algebra.field;
        let ambient = match self.matrices.first() {
            Some(m) => m.rows * m.cols,
            None => return None,
        };
        let bt = Matrix::from_rows(
            field,
            self.matrices.iter().map(|b| b.flatten()).collect(),
            ambient,
        )
        .transpose();
        bt.solve(&mat.flatten())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    /// r₂: [x, y] = x on basis (x, y).
    pub(crate) fn r2(field: FieldSpec) -> LieAlgebra {
        let mut sc = BTreeMap::new();
        sc.insert((0, 1), vec![field.one(), field.zero()]);
        LieAlgebra::new(field, 2, Some(vec!["x".into(), "y".into()]), sc).unwrap()
    }

    /// sl₂ on basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = −2f.
    pub(crate) fn sl2(field: FieldSpec) -> LieAlgebra {
        let mut sc = BTreeMap::new();
        // [e,h] = −2e
        sc.insert((0, 1), vec![field.from_i64(-2), field.zero(), field.zero()]);
        // [e,f] = h
        sc.insert((0, 2), vec![field.zero(), field.one(), field.zero()]);
        // [h,f] = −2f
        sc.insert((1, 2), vec![field.zero(), field.zero(), field.from_i64(-2)]);
        LieAlgebra::new(
            field,
            3,
            Some(vec!["e".into(), "h".into(), "f".into()]),
            sc,
        )
        .unwrap()
    }

    #[test]
    fn abelian_validates() {
        for dim in [0usize, 1, 3, 5] {
            assert!(LieAlgebra::abelian(Q, dim).validate().is_empty());
            assert!(LieAlgebra::abelian(F2, dim).validate().is_empty());
        }
    }

    #[test]
    fn sl2_validates_and_brackets_match() {
        let l = sl2(Q);
        assert!(l.validate().is_empty());
        let e = l.basis_vector(0);
        let h = l.basis_vector(1);
        let f = l.basis_vector(2);
        assert_eq!(l.bracket(&h, &e), vec![Q.from_i64(2), Q.zero(), Q.zero()]);
        assert_eq!(l.bracket(&h, &f), vec![Q.zero(), Q.zero(), Q.from_i64(-2)]);
        assert_eq!(l.bracket(&e, &f), vec![Q.zero(), Q.one(), Q.zero()]);
    }

    #[test]
    fn bracket_is_alternating_even_in_char_2() {
        let l = r2(F2);
        let mut v = l.zero_vector();
        v[0] = F2.one();
        v[1] = F2.one();
        assert!(l.bracket(&v, &v).iter().all(Scalar::is_zero));
    }

    #[test]
    fn tampered_constants_fail_jacobi() {
        // dim 3 with [x,y] = x and [x,z] = y: Jacobi on (x,y,z) fails.
        let mut sc = BTreeMap::new();
        sc.insert((0, 1), vec![Q.one(), Q.zero(), Q.zero()]);
        sc.insert((0, 2), vec![Q.zero(), Q.one(), Q.zero()]);
        let l = LieAlgebra::new(Q, 3, None, sc).unwrap();
        let violations = l.validate();
        assert!(!violations.is_empty());
        assert_eq!((violations[0].i, violations[0].j, violations[0].k), (0, 1, 2));
    }

    #[test]
    fn ad_of_y_in_r2_is_diag_minus_one_zero() {
        let l = r2(Q);
        let y = l.basis_vector(1);
        let m = l.ad(&y);
        assert_eq!(Q.format_scalar(m.get(0, 0)), "-1");
        assert!(m.get(0, 1).is_zero());
        assert!(m.get(1, 0).is_zero());
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn direct_sum_blocks_do_not_interact() {
        let l = r2(Q).direct_sum(&sl2(Q));
        assert_eq!(l.dim, 5);
        assert!(l.validate().is_empty());
        // Cross brackets vanish.
        let x = l.basis_vector(0);
        let e = l.basis_vector(2);
        assert!(l.bracket(&x, &e).iter().all(Scalar::is_zero));
        // Component brackets survive: [e, f] = h at offset.
        let f = l.basis_vector(4);
        let h = l.bracket(&e, &f);
        assert!(h[3].is_one());
    }

    #[test]
    fn matrix_closure_of_sl2_triple() {
        // e = E12, f = E21 close to the full sl2 inside gl2.
        let e = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]);
        let c = LieAlgebra::from_matrices(Q, &[e, f], None)
            .unwrap()
            .unwrap();
        assert_eq!(c.algebra.dim, 3);
        assert!(c.algebra.validate().is_empty());
    }

    #[test]
    fn matrix_closure_respects_max_dim() {
        let e = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]);
        assert!(LieAlgebra::from_matrices(Q, &[e, f], Some(2))
            .unwrap()
            .is_none());
    }

    #[test]
    fn closure_structure_constants_reproduce_commutators() {
        let e = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]);
        let c = LieAlgebra::from_matrices(Q, &[e, f], None)
            .unwrap()
            .unwrap();
        // For every basis pair, the abstract bracket must match the
        // concrete commutator through the basis matrices.
        let n = c.algebra.dim;
        for i in 0..n {
            for j in 0..n {
                let abstract_br = c.algebra.bracket_basis(i, j);
                let concrete = c.matrices[i]
                    .mul(&c.matrices[j])
                    .sub(&c.matrices[j].mul(&c.matrices[i]));
                // Rebuild the concrete matrix from abstract coordinates.
                let mut rebuilt = Matrix::zeros(Q, 2, 2);
                for (k, coeff) in abstract_br.iter().enumerate() {
                    rebuilt = rebuilt.add(&c.matrices[k].scale(coeff));
                }
                assert_eq!(rebuilt, concrete, "pair ({i},{j})");
            }
        }
    }
}
