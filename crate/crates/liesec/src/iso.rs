//! Isomorphism invariants and decision: fingerprints, centroid and
//! derivation dimensions, and exhaustive basis-change search over small
//! finite fields.
//!
//! ## Fingerprints
//!
//! A [`Fingerprint`] packs basis-independent integers; isomorphic algebras
//! always agree on all of them, so a mismatch refutes isomorphism. Every
//! component is invariant under basis change: series dimensions, the centre,
//! the Killing rank, the centralizer of the derived subalgebra, the centroid
//! and derivation-algebra dimensions, and — over finite fields small enough
//! to enumerate *all* elements — the multiset of ad-nilpotency indices taken
//! over the whole algebra (never over a basis, whose indices would depend on
//! the presentation).
//!
//! ## Exact decision
//!
//! [`is_isomorphic`] refutes via fingerprints, confirms identical
//! presentations directly, and otherwise searches every invertible matrix
//! over GF(p) when the candidate space is small (dimension ≤ 3, or ≤ 4 over
//! GF(2)); anything larger honestly returns `Unknown` rather than guessing.
//! The search runs on raw residues for speed.

use crate::algebra::LieAlgebra;
use crate::invariants::{
    centralizer, centre, derived_subalgebra, is_ideal, is_subalgebra, killing_form, killing_rank,
    series, SeriesKind,
};
use crate::matrix::Matrix;
use crate::scalar::FieldSpec;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, Subspace};

/// Basis-independent invariants; equality is necessary (never sufficient)
/// for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub centre_dim: usize,
    pub killing_rank: usize,
    pub derived_centralizer_dim: usize,
    pub centroid_dim: usize,
    pub derivation_dim: usize,
    /// Dimensions of the ascending central series 0 ⊆ Z(L) ⊆ Z₂ ⊆ … up to
    /// stabilization.
    pub upper_central_dims: Vec<usize>,
    /// Rank of the Killing form of L restricted to the derived subalgebra.
    pub killing_rank_on_derived: usize,
    /// Centralizer dimension of each lower-central-series term.
    pub lower_central_centralizer_dims: Vec<usize>,
    /// Sorted ad-nilpotency indices over every element of the algebra, when
    /// the field is finite and p^dim ≤ 729; empty otherwise. A non-nilpotent
    /// ad is encoded as 0.
    pub ad_nil_profile: Vec<usize>,
    /// Sorted ranks of ad v over the same enumeration; empty under the same
    /// conditions as the nilpotency profile.
    pub ad_rank_profile: Vec<usize>,
    /// Number of 1-dimensional ideals, when the field is finite and the line
    /// count is small enough to enumerate; `None` otherwise.
    pub ideal_line_count: Option<usize>,
    /// Number of codimension-1 subalgebras under the same enumeration bound.
    pub codim1_subalgebra_count: Option<usize>,
}

/// Upper bound on |L| for the whole-algebra nilpotency/rank profiles.
const AD_NIL_ENUMERATION_CAP: u128 = 729;

/// Upper bound on the number of lines/hyperplanes enumerated for the
/// subspace-count invariants.
const SUBSPACE_COUNT_CAP: u128 = 2_000;

pub fn fingerprint(l: &LieAlgebra) -> Fingerprint {
    let derived = series(l, SeriesKind::Derived);
    let lower = series(l, SeriesKind::LowerCentral);
    let (ad_nil_profile, ad_rank_profile) = ad_profiles(l);
    let (ideal_line_count, codim1_subalgebra_count) = subspace_counts(l);
    Fingerprint {
        dim: l.dim,
        derived_dims: derived.terms.iter().map(Subspace::dim).collect(),
        lower_central_dims: lower.terms.iter().map(Subspace::dim).collect(),
        centre_dim: centre(l).dim(),
        killing_rank: killing_rank(l),
        derived_centralizer_dim: centralizer(l, &derived_subalgebra(l)).dim(),
        centroid_dim: centroid_dim(l),
        derivation_dim: derivation_algebra_dim(l),
        upper_central_dims: upper_central_dims(l),
        killing_rank_on_derived: killing_rank_on_derived(l),
        lower_central_centralizer_dims: lower
            .terms
            .iter()
            .map(|t| centralizer(l, t).dim())
            .collect(),
        ad_nil_profile,
        ad_rank_profile,
        ideal_line_count,
        codim1_subalgebra_count,
    }
}

/// Dimensions of the ascending central series: Z₁ = Z(L) and
/// Z_{i+1} = {x : [x, L] ⊆ Z_i}, recorded until the dimension stabilizes.
pub fn upper_central_dims(l: &LieAlgebra) -> Vec<usize> {
    let n = l.dim;
    let mut dims = Vec::new();
    let mut current = Subspace::zero(l.field, n);
    loop {
        // x lies in the next term iff membership(current)·ad(e_j)·x = 0
        // for every j (using [x, e_j] = −ad(e_j)·x).
        let membership = current.membership_matrix();
        let mut rows = Vec::new();
        for j in 0..n {
            let conditions = membership.mul(&l.ad_basis(j));
            for r in 0..conditions.rows {
                rows.push(conditions.row(r).to_vec());
            }
        }
        let next = Subspace::from_matrix(&Matrix::from_rows(l.field, rows, n).kernel());
        if next.dim() == current.dim() {
            return dims;
        }
        dims.push(next.dim());
        current = next;
    }
}

/// Rank of the Killing form of L as a bilinear form on the derived
/// subalgebra: the Gram matrix κ(dᵃ, dᵇ) over a derived basis.
fn killing_rank_on_derived(l: &LieAlgebra) -> usize {
    let d = derived_subalgebra(l);
    if d.is_zero() {
        return 0;
    }
    let basis = d.basis();
    let k = killing_form(l);
    basis.mul(&k).mul(&basis.transpose()).rank()
}

/// Counts of 1-dimensional ideals and codimension-1 subalgebras over a
/// finite field, when the line count stays under the enumeration cap.
fn subspace_counts(l: &LieAlgebra) -> (Option<usize>, Option<usize>) {
    let FieldSpec::PrimeField(p) = l.field else {
        return (None, None);
    };
    let n = l.dim;
    if n == 0 {
        return (Some(0), Some(0));
    }
    if gaussian_binomial(n, 1, p) > SUBSPACE_COUNT_CAP {
        return (None, None);
    }
    let lines = enumerate_subspaces(l.field, n, 1, SUBSPACE_COUNT_CAP as u64)
        .expect("line count checked against the cap");
    let hyperplanes = enumerate_subspaces(l.field, n, n - 1, SUBSPACE_COUNT_CAP as u64)
        .expect("hyperplane count equals the line count");
    let ideal_lines = lines.iter().filter(|s| is_ideal(l, s)).count();
    let codim1 = hyperplanes.iter().filter(|s| is_subalgebra(l, s)).count();
    (Some(ideal_lines), Some(codim1))
}

/// Dimension of the centroid {T : T∘ad x = ad x∘T for all x}.
///
/// For a simple algebra the centroid is a field extension of the base field;
/// its dimension is 1 exactly when the algebra is central.
pub fn centroid_dim(l: &LieAlgebra) -> usize {
    centroid_basis(l).len()
}

/// A basis of the centroid, as n×n matrices (canonical kernel order). Used
/// by certification code to test whether the centroid is a field.
pub fn centroid_basis(l: &LieAlgebra) -> Vec<Matrix> {
    let n = l.dim;
    let f = l.field;
    if n == 0 {
        return Vec::new();
    }
    // Unknowns: T[a][b], row-major index a·n + b. For each generator
    // A = ad(e_g), impose TA − AT = 0 entrywise.
    let mut rows: Vec<Vec<crate::scalar::Scalar>> = Vec::with_capacity(n * n * n);
    for g in 0..n {
        let a = l.ad_basis(g);
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![f.zero(); n * n];
                // (TA)[r][c] = Σ_k T[r][k]·A[k][c]
                for k in 0..n {
                    let coeff = a.get(k, c);
                    if !coeff.is_zero() {
                        row[r * n + k] = f.add(&row[r * n + k], coeff);
                    }
                }
                // −(AT)[r][c] = −Σ_k A[r][k]·T[k][c]
                for k in 0..n {
                    let coeff = a.get(r, k);
                    if !coeff.is_zero() {
                        row[k * n + c] = f.sub(&row[k * n + c], coeff);
                    }
                }
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = Matrix::from_rows(f, rows, n * n).kernel();
    (0..kernel.rows)
        .map(|i| Matrix::from_flat(f, n, n, kernel.row(i).to_vec()))
        .collect()
}

/// Dimension of the derivation algebra
/// {D : D[x,y] = [Dx,y] + [x,Dy] for all x,y}.
pub fn derivation_algebra_dim(l: &LieAlgebra) -> usize {
    let n = l.dim;
    if n == 0 {
        return 0;
    }
    let f = l.field;
    // Unknowns D[a][b] (row-major). For each pair i<j and output
    // coordinate r: ([De_i,e_j] + [e_i,De_j] − D[e_i,e_j])_r = 0.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c_ij = l.bracket_basis(i, j);
            // Row block: n equations (one per output coordinate).
            let mut block = vec![vec![f.zero(); n * n]; n];
            for a in 0..n {
                // +[e_a, e_j] coefficient on D[a][i]
                let v = l.bracket_basis(a, j);
                for r in 0..n {
                    if !v[r].is_zero() {
                        block[r][a * n + i] = f.add(&block[r][a * n + i], &v[r]);
                    }
                }
                // +[e_i, e_a] coefficient on D[a][j]
                let w = l.bracket_basis(i, a);
                for r in 0..n {
                    if !w[r].is_zero() {
                        block[r][a * n + j] = f.add(&block[r][a * n + j], &w[r]);
                    }
                }
            }
            // −D(c_ij): coefficient −(c_ij)_t on D[r][t] for output r.
            for t in 0..n {
                if c_ij[t].is_zero() {
                    continue;
                }
                for (r, block_row) in block.iter_mut().enumerate() {
                    block_row[r * n + t] = f.sub(&block_row[r * n + t], &c_ij[t]);
                }
            }
            for row in block {
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let m = Matrix::from_rows(f, rows, n * n);
    n * n - m.rank()
}

/// Sorted multiset of nilpotency indices of ad v over every v in the
/// algebra; 0 encodes a non-nilpotent ad. Empty when the algebra is not a
/// small finite one.
pub fn ad_nil_profile(l: &LieAlgebra) -> Vec<usize> {
    ad_profiles(l).0
}

/// Sorted multisets of (nilpotency index, rank) of ad v over every v in the
/// algebra, as two parallel-sorted lists; both empty when the algebra is not
/// a small finite one.
fn ad_profiles(l: &LieAlgebra) -> (Vec<usize>, Vec<usize>) {
    let FieldSpec::PrimeField(p) = l.field else {
        return (Vec::new(), Vec::new());
    };
    let n = l.dim;
    let count = (p as u128).saturating_pow(n as u32);
    if count > AD_NIL_ENUMERATION_CAP {
        return (Vec::new(), Vec::new());
    }
    let mut nil_profile = Vec::with_capacity(count as usize);
    let mut rank_profile = Vec::with_capacity(count as usize);
    let mut counters = vec![0u64; n];
    loop {
        let v: Vec<_> = counters.iter().map(|&c| l.field.from_i64(c as i64)).collect();
        let ad = l.ad(&v);
        let mut index = 0usize; // 0 = not nilpotent
        let mut power = Matrix::identity(l.field, n);
        for k in 1..=n.max(1) {
            power = power.mul(&ad);
            if power.is_zero() {
                index = k;
                break;
            }
        }
        nil_profile.push(index);
        rank_profile.push(ad.rank());
        let mut t = 0;
        loop {
            if t == n {
                nil_profile.sort_unstable();
                rank_profile.sort_unstable();
                return (nil_profile, rank_profile);
            }
            counters[t] += 1;
            if counters[t] < p {
                break;
            }
            counters[t] = 0;
            t += 1;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsoAnswer {
    Yes,
    No,
    Unknown,
}

/// Decides isomorphism where possible. Same-field inputs only.
pub fn is_isomorphic(l1: &LieAlgebra, l2: &LieAlgebra) -> IsoAnswer {
    assert_eq!(l1.field, l2.field, "isomorphism needs a common field");
    if l1.dim != l2.dim {
        return IsoAnswer::No;
    }
    if fingerprint(l1) != fingerprint(l2) {
        return IsoAnswer::No;
    }
    if l1.structure_identical(l2) {
        return IsoAnswer::Yes;
    }
    let FieldSpec::PrimeField(p) = l1.field else {
        return IsoAnswer::Unknown;
    };
    let n = l1.dim;
    let searchable = n <= 3 || (n <= 4 && p == 2);
    if !searchable {
        return IsoAnswer::Unknown;
    }
    if exhaustive_gl_search(l1, l2, p) {
        IsoAnswer::Yes
    } else {
        IsoAnswer::No
    }
}

/// Raw-residue exhaustive search for an invertible T with
/// T[x,y]₁ = [Tx,Ty]₂. Complete over the searched space: returns false only
/// after every invertible matrix failed.
fn exhaustive_gl_search(l1: &LieAlgebra, l2: &LieAlgebra, p: u64) -> bool {
    let n = l1.dim;
    if n == 0 {
        return true;
    }
    // Dense structure-constant tables as raw residues.
    let table = |l: &LieAlgebra| -> Vec<Vec<Vec<u64>>> {
        let mut t = vec![vec![vec![0u64; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, s) in l.bracket_basis(i, j).iter().enumerate() {
                    t[i][j][k] = s.residue().expect("finite field");
                }
            }
        }
        t
    };
    let c1 = table(l1);
    let c2 = table(l2);
    let nn = n * n;
    let mut entries = vec![0u64; nn]; // T[r][c] = entries[r*n + c]
    loop {
        if matrix_is_invertible(&entries, n, p) && is_homomorphism(&entries, &c1, &c2, n, p) {
            return true;
        }
        // Odometer.
        let mut t = 0;
        loop {
            if t == nn {
                return false;
            }
            entries[t] += 1;
            if entries[t] < p {
                break;
            }
            entries[t] = 0;
            t += 1;
        }
    }
}

fn matrix_is_invertible(entries: &[u64], n: usize, p: u64) -> bool {
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|r| entries[r * n..(r + 1) * n].to_vec())
        .collect();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| m[r][col] % p != 0) else {
            return false;
        };
        m.swap(col, pivot_row);
        let inv = crate::scalar::pow_mod(m[col][col] % p, p - 2, p);
        for r in col + 1..n {
            let factor = (m[r][col] % p) as u128 * inv as u128 % p as u128;
            for c in col..n {
                let sub = factor * m[col][c] as u128 % p as u128;
                m[r][c] = ((m[r][c] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
            }
        }
    }
    true
}

fn is_homomorphism(
    t: &[u64],
    c1: &[Vec<Vec<u64>>],
    c2: &[Vec<Vec<u64>>],
    n: usize,
    p: u64,
) -> bool {
    // For all i<j: T·c1[i][j] == bracket₂(T e_i, T e_j).
    for i in 0..n {
        for j in i + 1..n {
            for r in 0..n {
                // Left side: Σ_k T[r][k]·c1[i][j][k]
                let mut lhs: u128 = 0;
                for k in 0..n {
                    lhs += t[r * n + k] as u128 * c1[i][j][k] as u128;
                }
                // Right side: Σ_{a,b} T[a][i]·T[b][j]·c2[a][b][r]
                let mut rhs: u128 = 0;
                for a in 0..n {
                    let ta = t[a * n + i];
                    if ta == 0 {
                        continue;
                    }
                    for b in 0..n {
                        let tb = t[b * n + j];
                        if tb == 0 || c2[a][b][r] == 0 {
                            continue;
                        }
                        rhs += ta as u128 * tb as u128 % p as u128 * c2[a][b][r] as u128;
                    }
                }
                if lhs % p as u128 != rhs % p as u128 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::scalar::Scalar;
    use std::collections::BTreeMap;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);

    #[test]
    fn every_algebra_is_isomorphic_to_itself() {
        for name in ["abelian(2)", "r2", "heisenberg", "sl2"] {
            let l = catalog(F2, name).unwrap().algebra;
            assert_eq!(is_isomorphic(&l, &l), IsoAnswer::Yes, "{name}");
        }
    }

    #[test]
    fn abelian_vs_r2_differ() {
        let a = catalog(F2, "abelian(2)").unwrap().algebra;
        let r = catalog(F2, "r2").unwrap().algebra;
        assert_eq!(is_isomorphic(&a, &r), IsoAnswer::No);
        assert_ne!(fingerprint(&a), fingerprint(&r));
    }

    #[test]
    fn swapped_basis_presentations_of_r2_are_isomorphic() {
        let r = catalog(F2, "r2").unwrap().algebra;
        // Presentation on (y, x): [y, x] = −x, i.e. c(0,1) = (0, −1).
        let mut sc = BTreeMap::new();
        sc.insert((0, 1), vec![F2.zero(), F2.from_i64(-1)]);
        let swapped = LieAlgebra::new(F2, 2, None, sc).unwrap();
        assert!(!swapped.structure_identical(&r));
        assert_eq!(is_isomorphic(&r, &swapped), IsoAnswer::Yes);
        assert_eq!(is_isomorphic(&swapped, &r), IsoAnswer::Yes);
    }

    #[test]
    fn conjugated_sl2_over_gf3_is_found_isomorphic() {
        let s = catalog(F3, "sl2").unwrap().algebra;
        // Re-express in the permuted basis (f, e, h).
        let perm = [2usize, 0, 1];
        let mut sc = BTreeMap::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let orig = s.bracket_basis(perm[i], perm[j]);
                let mut v = vec![F3.zero(); 3];
                for (new_idx, &old_idx) in perm.iter().enumerate() {
                    v[new_idx] = orig[old_idx].clone();
                }
                sc.insert((i, j), v);
            }
        }
        let permuted = LieAlgebra::new(F3, 3, None, sc).unwrap();
        assert!(permuted.validate().is_empty());
        assert_eq!(is_isomorphic(&s, &permuted), IsoAnswer::Yes);
    }

    #[test]
    fn rational_equal_fingerprints_stay_unknown_without_identical_constants() {
        // Scale the sl₂ constants by an invertible change that alters the
        // table but not the isomorphism class.
        let s = catalog(Q, "sl2").unwrap().algebra;
        let mut sc = BTreeMap::new();
        let two = Q.from_i64(2);
        for (&(i, j), v) in s.structure_constants() {
            // Basis e' = 2e, h' = h, f' = f/... : use a diagonal rescale
            // d = (2, 1, 1): [e',h'] = 2[e,h] has e'-coordinate unchanged,
            // [e',f'] = 2[e,f] = 2h', [h',f'] = [h,f].
            let scale_pair = match (i, j) {
                (0, 1) | (0, 2) => two.clone(),
                _ => Q.one(),
            };
            let unscale = |k: usize, s: &Scalar| {
                if k == 0 {
                    Q.div(s, &two)
                } else {
                    s.clone()
                }
            };
            let w: Vec<Scalar> = v
                .iter()
                .enumerate()
                .map(|(k, s)| unscale(k, &Q.mul(s, &scale_pair)))
                .collect();
            sc.insert((i, j), w);
        }
        let rescaled = LieAlgebra::new(Q, 3, None, sc).unwrap();
        assert!(rescaled.validate().is_empty());
        assert!(!rescaled.structure_identical(&s));
        assert_eq!(fingerprint(&rescaled), fingerprint(&s));
        assert_eq!(is_isomorphic(&s, &rescaled), IsoAnswer::Unknown);
    }

    #[test]
    fn centroid_dimensions() {
        assert_eq!(centroid_dim(&catalog(Q, "sl2").unwrap().algebra), 1);
        assert_eq!(centroid_dim(&catalog(Q, "abelian(2)").unwrap().algebra), 4);
        // The 6-dimensional simple catalog algebra has a quadratic-field
        // centroid — dimension 2, not 1.
        assert_eq!(centroid_dim(&catalog(Q, "gejn(1)").unwrap().algebra), 2);
    }

    #[test]
    fn derivation_dimensions() {
        // All derivations of a semisimple algebra are inner.
        assert_eq!(
            derivation_algebra_dim(&catalog(Q, "sl2").unwrap().algebra),
            3
        );
        assert_eq!(derivation_algebra_dim(&catalog(Q, "r2").unwrap().algebra), 2);
        assert_eq!(
            derivation_algebra_dim(&catalog(Q, "heisenberg").unwrap().algebra),
            6
        );
    }

    #[test]
    fn ad_nil_profiles_over_small_fields() {
        let h = catalog(F2, "heisenberg").unwrap().algebra;
        assert_eq!(ad_nil_profile(&h), vec![1, 1, 2, 2, 2, 2, 2, 2]);
        let r = catalog(F2, "r2").unwrap().algebra;
        assert_eq!(ad_nil_profile(&r), vec![0, 0, 1, 2]);
        // Too large to enumerate: empty profile.
        let big = catalog(F3, "direct_sum(sl2,sl2,abelian(1))").unwrap().algebra;
        assert_eq!(big.dim, 7);
        assert_eq!(ad_nil_profile(&big), Vec::<usize>::new());
        // Rationals: never enumerated.
        assert_eq!(
            ad_nil_profile(&catalog(Q, "r2").unwrap().algebra),
            Vec::<usize>::new()
        );
    }

    #[test]
    fn fingerprint_is_invariant_under_the_permuted_presentation() {
        let s = catalog(F3, "sl2").unwrap().algebra;
        let f1 = fingerprint(&s);
        assert_eq!(f1.dim, 3);
        assert_eq!(f1.killing_rank, 3);
        assert_eq!(f1.centre_dim, 0);
        assert!(!f1.ad_nil_profile.is_empty(), "3³ = 27 ≤ 729 is enumerable");
    }
}
