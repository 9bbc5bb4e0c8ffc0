//! Canonical subspaces of F^n and exhaustive subspace enumeration.
//!
//! ## Canonical form
//!
//! A [`Subspace`] stores the unique RREF basis of its row space with zero
//! rows dropped, so set equality of subspaces is representation equality
//! (`==`), and subspaces can serve as dictionary keys.
//!
//! ## Lattice operations
//!
//! Sums concatenate-and-reduce; intersections use the Zassenhaus block
//! trick: reducing rows `[u | u]` for u in U and `[w | 0]` for w in W, the
//! right halves of the rows whose left half vanished form a basis of U ∩ W.
//!
//! ## Enumeration
//!
//! Over GF(p), [`enumerate_subspaces`] yields every dim-d subspace exactly
//! once in canonical order (lexicographic on the flattened RREF basis).
//! Counts are Gaussian binomials; a budget guards against blowups before any
//! work happens.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use std::cmp::Ordering;

/// A linear subspace of F^ambient in canonical RREF form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Subspace spanned by arbitrary row vectors.
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::from_matrix(&Matrix::from_rows(field, rows, ambient))
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        let mut rows = Vec::with_capacity(r.rank);
        for i in 0..r.rank {
            rows.push(r.matrix.row(i).to_vec());
        }
        Subspace {
            field: m.field,
            ambient: m.cols,
            basis: Matrix::from_rows(m.field, rows, m.cols),
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_matrix(&Matrix::identity(field, ambient))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.rows_iter()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim());
        for row in self.basis_rows() {
            let p = row.iter().position(|s| !s.is_zero()).expect("no zero rows");
            out.push(p);
        }
        out
    }

    /// Remainder of `v` after eliminating the pivot coordinates of the
    /// basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis_rows().zip(self.pivots().iter()) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for j in 0..self.ambient {
                out[j] = f.sub(&out[j], &f.mul(&c, &row[j]));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` in the canonical basis (entries of `v` at pivot
    /// columns), or `None` when `v` is outside the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let stacked = Matrix::vstack(self.field, self.ambient, &[&self.basis, &other.basis]);
        Subspace::from_matrix(&stacked)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let f = self.field;
        let n = self.ambient;
        let mut rows = Vec::new();
        for u in self.basis_rows() {
            let mut r = u.to_vec();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for w in other.basis_rows() {
            let mut r = w.to_vec();
            r.extend(vec![f.zero(); n]);
            rows.push(r);
        }
        let reduced = Matrix::from_rows(f, rows, 2 * n).rref();
        let mut inter_rows = Vec::new();
        for i in 0..reduced.rank {
            let row = reduced.matrix.row(i);
            if row[..n].iter().all(Scalar::is_zero) {
                inter_rows.push(row[n..].to_vec());
            }
        }
        Subspace::from_rows(f, n, inter_rows)
    }

    /// Matrix Q whose rows annihilate exactly this subspace:
    /// `Q · v = 0 ⟺ v ∈ self`. (The right kernel of the basis matrix.)
    pub fn membership_matrix(&self) -> Matrix {
        if self.dim() == 0 {
            return Matrix::identity(self.field, self.ambient);
        }
        self.basis.kernel()
    }

    /// Canonical total order: by dimension, then lexicographically on the
    /// flattened basis entries.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.check_compatible(other);
        self.dim().cmp(&other.dim()).then_with(|| {
            for (a, b) in self
                .basis
                .flatten()
                .iter()
                .zip(other.basis.flatten().iter())
            {
                match a.canonical_cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
    }
}

/// Number of d-dimensional subspaces of GF(q)^n, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, d: usize, q: u64) -> u128 {
    if d > n {
        return 0;
    }
    // Product formula: Π_{i=0}^{d-1} (q^{n-i} − 1) / (q^{d-i} − 1), computed
    // incrementally as exact integers.
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let qq = q as u128;
    let pow = |e: usize| -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.checked_mul(qq)?;
        }
        Some(acc)
    };
    for i in 0..d {
        let (Some(pn), Some(pd)) = (pow(n - i), pow(d - i)) else {
            return u128::MAX;
        };
        let Some(nn) = num.checked_mul(pn - 1) else {
            return u128::MAX;
        };
        num = nn;
        den = den.checked_mul(pd - 1).expect("denominator overflow");
        // Keep the running product reduced so intermediate values stay small.
        let g = gcd_u128(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1, "gaussian binomial must be integral");
    num
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// Total number of subspaces of GF(q)^n over all dimensions.
pub fn subspace_count_all_dims(n: usize, q: u64) -> u128 {
    let mut total: u128 = 0;
    for d in 0..=n {
        total = total.saturating_add(gaussian_binomial(n, d, q));
    }
    total
}

/// Every d-dimensional subspace of GF(p)^ambient, in canonical order.
///
/// Errors with [`Error::InfiniteField`] over ℚ and [`Error::BudgetExceeded`]
/// when the Gaussian-binomial count exceeds `budget`.
pub fn enumerate_subspaces(
    field: FieldSpec,
    ambient: usize,
    dim: usize,
    budget: u64,
) -> Result<Vec<Subspace>> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::InfiniteField {
            op: "enumerate_subspaces",
        });
    };
    let count = gaussian_binomial(ambient, dim, p);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget,
        });
    }
    if dim == 0 {
        return Ok(vec![Subspace::zero(field, ambient)]);
    }
    let mut out: Vec<Subspace> = Vec::with_capacity(count as usize);
    // One pivot-column choice at a time; free entries sit strictly right of
    // their row's pivot and outside pivot columns.
    for pivots in combinations(ambient, dim) {
        let mut free_cells = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..ambient {
                if !pivots.contains(&c) {
                    free_cells.push((r, c));
                }
            }
        }
        let mut counters = vec![0u64; free_cells.len()];
        loop {
            let mut m = Matrix::zeros(field, dim, ambient);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, field.one());
            }
            for (idx, &(r, c)) in free_cells.iter().enumerate() {
                m.set(r, c, Scalar::Mod(counters[idx]));
            }
            out.push(Subspace {
                field,
                ambient,
                basis: m,
            });
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == counters.len() {
                    break;
                }
                counters[i] += 1;
                if counters[i] < p {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == counters.len() {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// All subspaces of GF(p)^ambient, ascending dimension, canonical order
/// within each dimension. The budget applies to the total count.
pub fn enumerate_all_subspaces(
    field: FieldSpec,
    ambient: usize,
    budget: u64,
) -> Result<Vec<Subspace>> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::InfiniteField {
            op: "enumerate_all_subspaces",
        });
    };
    let total = subspace_count_all_dims(ambient, p);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for d in 0..=ambient {
        out.extend(enumerate_subspaces(field, ambient, d, budget)?);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    fn qvec(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| Q.from_i64(v)).collect()
    }

    #[test]
    fn sum_and_intersect_of_axes() {
        let u = Subspace::from_rows(Q, 3, vec![qvec(&[1, 0, 0])]);
        let v = Subspace::from_rows(Q, 3, vec![qvec(&[0, 1, 0])]);
        assert_eq!(u.sum(&v).dim(), 2);
        assert!(u.intersect(&v).is_zero());
        // Idempotence.
        assert_eq!(u.sum(&u), u);
        assert_eq!(u.intersect(&u), u);
    }

    #[test]
    fn canonical_equality() {
        // Two spanning sets of the same plane canonicalize identically.
        let a = Subspace::from_rows(Q, 3, vec![qvec(&[1, 1, 0]), qvec(&[0, 0, 1])]);
        let b = Subspace::from_rows(Q, 3, vec![qvec(&[1, 1, 1]), qvec(&[2, 2, 1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn coords_read_pivot_columns() {
        let u = Subspace::from_rows(Q, 3, vec![qvec(&[1, 0, 2]), qvec(&[0, 1, 3])]);
        let v = qvec(&[5, 7, 31]); // 5·(1,0,2) + 7·(0,1,3)
        assert_eq!(u.coords(&v).unwrap(), qvec(&[5, 7]));
        assert!(u.coords(&qvec(&[0, 0, 1])).is_none());
    }

    #[test]
    fn membership_matrix_characterizes_subspace() {
        let u = Subspace::from_rows(F2, 4, vec![
            vec![Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(0)],
            vec![Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(1)],
        ]);
        let q = u.membership_matrix();
        assert_eq!(q.rows, 2); // ambient 4 − dim 2
        // Exhaustive over all 16 vectors of GF(2)^4.
        for mask in 0..16u64 {
            let v: Vec<Scalar> = (0..4).map(|i| Scalar::Mod((mask >> i) & 1)).collect();
            let annihilated = q.mul_vec(&v).iter().all(Scalar::is_zero);
            assert_eq!(annihilated, u.contains(&v));
        }
    }

    #[test]
    fn sum_intersect_match_exhaustive_vector_oracle_over_gf2() {
        // Fixed pair of subspaces of GF(2)^4; oracle checks membership of
        // all 16 vectors directly.
        let u = Subspace::from_rows(F2, 4, vec![
            vec![Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(0)],
            vec![Scalar::Mod(0), Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(1)],
        ]);
        let w = Subspace::from_rows(F2, 4, vec![
            vec![Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(1)],
            vec![Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(1)],
        ]);
        let s = u.sum(&w);
        let i = u.intersect(&w);
        let all_vecs: Vec<Vec<Scalar>> = (0..16u64)
            .map(|mask| (0..4).map(|b| Scalar::Mod((mask >> b) & 1)).collect())
            .collect();
        // Intersection = common membership.
        for v in &all_vecs {
            assert_eq!(i.contains(v), u.contains(v) && w.contains(v));
        }
        // Sum = span of the union: check u,w ⊆ s and dim via modular law.
        assert!(s.contains_space(&u));
        assert!(s.contains_space(&w));
        assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        // And every sum vector decomposes: s is the smallest such — every
        // vector in s must be a + b with a ∈ u, b ∈ w. Exhaustive check.
        for v in &all_vecs {
            if s.contains(v) {
                let mut decomposable = false;
                'outer: for a in &all_vecs {
                    if !u.contains(a) {
                        continue;
                    }
                    let b: Vec<Scalar> =
                        (0..4).map(|j| F2.sub(&v[j], &a[j])).collect();
                    if w.contains(&b) {
                        decomposable = true;
                        break 'outer;
                    }
                }
                assert!(decomposable);
            }
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(subspace_count_all_dims(5, 2), 374);
    }

    #[test]
    fn enumerate_counts_match_gaussian_binomials() {
        for (n, d, p, expect) in [
            (2usize, 1usize, 2u64, 3usize),
            (3, 1, 2, 7),
            (3, 2, 2, 7),
            (4, 2, 2, 35),
            (3, 1, 3, 13),
            (3, 2, 3, 13),
        ] {
            let subs = enumerate_subspaces(FieldSpec::PrimeField(p), n, d, 1_000_000).unwrap();
            assert_eq!(subs.len(), expect, "[{n},{d}]_{p}");
            // Exactly once: all distinct.
            for i in 0..subs.len() {
                for j in i + 1..subs.len() {
                    assert_ne!(subs[i], subs[j]);
                }
            }
            // Canonical order.
            for w in subs.windows(2) {
                assert_eq!(w[0].canonical_cmp(&w[1]), std::cmp::Ordering::Less);
            }
        }
    }

    #[test]
    fn enumerate_all_dims_total_374() {
        let subs = enumerate_all_subspaces(F2, 5, 1_000_000).unwrap();
        assert_eq!(subs.len(), 374);
    }

    #[test]
    fn enumerate_dim_zero() {
        let subs = enumerate_subspaces(F2, 3, 0, 10).unwrap();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].is_zero());
    }

    #[test]
    fn enumeration_budget_and_infinite_field_errors() {
        assert!(matches!(
            enumerate_subspaces(F2, 4, 2, 10),
            Err(crate::error::Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_subspaces(Q, 3, 1, 100),
            Err(crate::error::Error::InfiniteField { .. })
        ));
    }

    proptest! {
        /// Modular law: dim(U) + dim(W) = dim(U+W) + dim(U∩W), over GF(2)
        /// ambient 4 with arbitrary spanning sets.
        #[test]
        fn modular_law_gf2(u_rows in prop::collection::vec(prop::collection::vec(0u64..2, 4), 0..4),
                           w_rows in prop::collection::vec(prop::collection::vec(0u64..2, 4), 0..4)) {
            let mk = |rows: &Vec<Vec<u64>>| {
                Subspace::from_rows(
                    F2,
                    4,
                    rows.iter().map(|r| r.iter().map(|&x| Scalar::Mod(x)).collect()).collect(),
                )
            };
            let u = mk(&u_rows);
            let w = mk(&w_rows);
            prop_assert_eq!(u.dim() + w.dim(), u.sum(&w).dim() + u.intersect(&w).dim());
        }

        /// RREF canonicalization is stable: rebuilding from the canonical
        /// basis gives the same subspace.
        #[test]
        fn canonical_stability_q(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 0..4)) {
            let u = Subspace::from_rows(Q, 3, rows.iter().map(|r| qvec(r)).collect());
            let rebuilt = Subspace::from_matrix(u.basis());
            prop_assert_eq!(u, rebuilt);
        }
    }
}
