//! Structural invariants of a Lie algebra: bracket closures, centralizers,
//! series, the Killing form, Fitting decompositions, and the nil test.
//!
//! ## Conventions
//!
//! All subspace arguments live in the coefficient space of the algebra's
//! basis; ambient dimensions must match `L.dim`. Functions here are total
//! except where a precondition names a subalgebra — those return
//! [`Error::NotASubalgebra`] instead of guessing.
//!
//! ## Fixpoint bounds
//!
//! Every iterative computation here (closures, series, associative
//! envelopes) moves a subspace dimension monotonically inside a space of
//! fixed finite dimension, so each loop terminates within that dimension
//! plus one steps; the loops below rely on that invariant rather than on
//! iteration caps.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Span of all brackets `[u, w]` with u ranging over a basis of U and w over
/// a basis of W.
pub fn subspace_bracket(l: &LieAlgebra, u: &Subspace, w: &Subspace) -> Subspace {
    assert_eq!(u.ambient, l.dim, "subspace ambient mismatch");
    assert_eq!(w.ambient, l.dim, "subspace ambient mismatch");
    let mut rows = Vec::new();
    for a in u.basis_rows() {
        for b in w.basis_rows() {
            rows.push(l.bracket(a, b));
        }
    }
    Subspace::from_rows(l.field, l.dim, rows)
}

/// Least subalgebra containing U: iterate U ← U + [U, U] to a fixpoint.
pub fn subalgebra_closure(l: &LieAlgebra, u: &Subspace) -> Subspace {
    let mut cur = u.clone();
    loop {
        let next = cur.sum(&subspace_bracket(l, &cur, &cur));
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// Least ideal containing U: iterate U ← U + [L, U] to a fixpoint.
pub fn ideal_closure(l: &LieAlgebra, u: &Subspace) -> Subspace {
    let full = l.full_space();
    let mut cur = u.clone();
    loop {
        let next = cur.sum(&subspace_bracket(l, &full, &cur));
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

pub fn is_subalgebra(l: &LieAlgebra, u: &Subspace) -> bool {
    u.contains_space(&subspace_bracket(l, u, u))
}

pub fn is_ideal(l: &LieAlgebra, u: &Subspace) -> bool {
    u.contains_space(&subspace_bracket(l, &l.full_space(), u))
}

/// The derived subalgebra [L, L].
pub fn derived_subalgebra(l: &LieAlgebra) -> Subspace {
    let full = l.full_space();
    subspace_bracket(l, &full, &full)
}

/// Elements commuting with every element of U:
/// `{x : [x, u] = 0 for all u ∈ U}`.
pub fn centralizer(l: &LieAlgebra, u: &Subspace) -> Subspace {
    assert_eq!(u.ambient, l.dim, "subspace ambient mismatch");
    if u.dim() == 0 || l.dim == 0 {
        return l.full_space();
    }
    // [x, u_t] = −ad(u_t)·x, so x must lie in every ker ad(u_t).
    let ads: Vec<Matrix> = u.basis_rows().map(|r| l.ad(r)).collect();
    let refs: Vec<&Matrix> = ads.iter().collect();
    let stacked = Matrix::vstack(l.field, l.dim, &refs);
    Subspace::from_matrix(&stacked.kernel())
}

/// The centre Z(L) = centralizer of L itself.
pub fn centre(l: &LieAlgebra) -> Subspace {
    centralizer(l, &l.full_space())
}

/// Elements x with [x, U] ⊆ U.
pub fn normalizer(l: &LieAlgebra, u: &Subspace) -> Subspace {
    assert_eq!(u.ambient, l.dim, "subspace ambient mismatch");
    if u.dim() == 0 || l.dim == 0 {
        return l.full_space();
    }
    // [x, u_t] ∈ U  ⟺  Q · ad(u_t) · x = 0, with Q the membership matrix.
    let q = u.membership_matrix();
    let blocks: Vec<Matrix> = u.basis_rows().map(|r| q.mul(&l.ad(r))).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let stacked = Matrix::vstack(l.field, l.dim, &refs);
    Subspace::from_matrix(&stacked.kernel())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// L⁽⁰⁾ = L, L⁽ᵏ⁺¹⁾ = [L⁽ᵏ⁾, L⁽ᵏ⁾].
    Derived,
    /// L¹ = L, Lᵏ⁺¹ = [L, Lᵏ].
    LowerCentral,
}

/// A descending series, listed from L down to its stable term.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Strictly decreasing; the last entry repeats under the defining step.
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
}

pub fn series(l: &LieAlgebra, kind: SeriesKind) -> SeriesReport {
    let full = l.full_space();
    let mut terms = vec![full.clone()];
    loop {
        let prev = terms.last().expect("terms nonempty");
        let next = match kind {
            SeriesKind::Derived => subspace_bracket(l, prev, prev),
            SeriesKind::LowerCentral => subspace_bracket(l, &full, prev),
        };
        if next.dim() == prev.dim() {
            // Bracketing cannot grow a term, so equal dimension means the
            // term repeated exactly.
            debug_assert!(prev.contains_space(&next));
            return SeriesReport {
                kind,
                terms,
                stabilized: true,
            };
        }
        terms.push(next);
    }
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    series(l, SeriesKind::Derived)
        .terms
        .last()
        .expect("terms nonempty")
        .is_zero()
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    series(l, SeriesKind::LowerCentral)
        .terms
        .last()
        .expect("terms nonempty")
        .is_zero()
}

/// The Killing form as a symmetric matrix: κ(i, j) = trace(ad e_i ∘ ad e_j).
pub fn killing_form(l: &LieAlgebra) -> Matrix {
    let ads: Vec<Matrix> = (0..l.dim).map(|i| l.ad_basis(i)).collect();
    let mut k = Matrix::zeros(l.field, l.dim, l.dim);
    for i in 0..l.dim {
        for j in i..l.dim {
            let t = ads[i].mul(&ads[j]).trace();
            k.set(i, j, t.clone());
            if i != j {
                k.set(j, i, t);
            }
        }
    }
    k
}

pub fn killing_rank(l: &LieAlgebra) -> usize {
    killing_form(l).rank()
}

/// Fitting decomposition of L relative to ad a: with N = (ad a)^dim,
/// L₀ = ker N and L₁ = im N. Always L = L₀ ⊕ L₁ and L₀ is a subalgebra.
pub fn fitting_decomposition(l: &LieAlgebra, a: &[Scalar]) -> (Subspace, Subspace) {
    assert_eq!(a.len(), l.dim, "vector length mismatch");
    let n = l.ad(a).pow(l.dim);
    let l0 = Subspace::from_matrix(&n.kernel());
    let l1 = Subspace::from_matrix(&n.transpose());
    debug_assert_eq!(l0.dim() + l1.dim(), l.dim, "Fitting dimensions must add");
    debug_assert!(is_subalgebra(l, &l0), "Fitting null component is a subalgebra");
    (l0, l1)
}

/// Whether every element u of the subalgebra U has nilpotent ad u.
///
/// Decision procedure: the span of {ad u_t} over a basis of U is weakly
/// closed (brackets of its members land back in it), so element-wise
/// nilpotency is equivalent to nilpotency of the associative envelope E it
/// generates, and in that case Eⁿ = 0 for n = dim L. The envelope is
/// computed as the span of all nonzero products of generators (closing
/// under right multiplication), then its power spans E ⊇ E² ⊇ … are walked
/// until one vanishes or the dimension bound rules nilpotency out. This is
/// exact over every field — no element sampling.
pub fn is_nil_subalgebra(l: &LieAlgebra, u: &Subspace) -> Result<bool> {
    if !is_subalgebra(l, u) {
        return Err(Error::NotASubalgebra);
    }
    if u.dim() == 0 || l.dim == 0 {
        return Ok(true);
    }
    let n = l.dim;
    let ambient = n * n;
    let gens: Vec<Matrix> = u.basis_rows().map(|r| l.ad(r)).collect();
    let gens: Vec<Matrix> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(true);
    }
    // Envelope: close span{gens} under right multiplication by generators.
    let mut env_mats: Vec<Matrix> = Vec::new();
    let mut env_span = Subspace::zero(l.field, ambient);
    let push = |m: Matrix, mats: &mut Vec<Matrix>, span: &mut Subspace| {
        let flat = m.flatten();
        if m.is_zero() || span.contains(&flat) {
            return;
        }
        *span = span.sum(&Subspace::from_rows(l.field, ambient, vec![flat]));
        mats.push(m);
    };
    for g in &gens {
        push(g.clone(), &mut env_mats, &mut env_span);
    }
    let mut frontier = 0;
    while frontier < env_mats.len() {
        let end = env_mats.len();
        for i in frontier..end {
            for g in &gens {
                let prod = env_mats[i].mul(g);
                push(prod, &mut env_mats, &mut env_span);
            }
        }
        frontier = end;
    }
    // Power spans: W₁ = E, W_{k+1} = W_k · E; nilpotent iff some W_k = 0
    // with k ≤ n.
    let mut power = env_mats.clone();
    for _ in 1..=n {
        if power.is_empty() {
            return Ok(true);
        }
        let mut next_mats = Vec::new();
        let mut next_span = Subspace::zero(l.field, ambient);
        for w in &power {
            for e in &env_mats {
                push(w.mul(e), &mut next_mats, &mut next_span);
            }
        }
        power = next_mats;
    }
    Ok(power.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);

    fn r2(field: FieldSpec) -> LieAlgebra {
        catalog(field, "r2").unwrap().algebra
    }
    fn h3(field: FieldSpec) -> LieAlgebra {
        catalog(field, "heisenberg").unwrap().algebra
    }
    fn sl2(field: FieldSpec) -> LieAlgebra {
        catalog(field, "sl2").unwrap().algebra
    }
    fn span(l: &LieAlgebra, vecs: &[&[i64]]) -> Subspace {
        let rows = vecs
            .iter()
            .map(|v| v.iter().map(|&c| l.field.from_i64(c)).collect())
            .collect();
        Subspace::from_rows(l.field, l.dim, rows)
    }

    #[test]
    fn ideal_closures_match_hand_computation() {
        let r = r2(Q);
        let x_line = span(&r, &[&[1, 0]]);
        assert_eq!(ideal_closure(&r, &x_line), x_line);

        let s = sl2(Q);
        let e_line = span(&s, &[&[1, 0, 0]]);
        assert!(ideal_closure(&s, &e_line).is_full());
    }

    #[test]
    fn one_dim_subspaces_are_closed_subalgebras() {
        let s = sl2(Q);
        for v in [&[1i64, 0, 0][..], &[1, 1, 0], &[2, -3, 5]] {
            let u = span(&s, &[v]);
            assert_eq!(subalgebra_closure(&s, &u), u);
            assert!(is_subalgebra(&s, &u));
        }
    }

    #[test]
    fn centre_of_heisenberg_is_its_commutator_line() {
        let h = h3(Q);
        assert_eq!(centre(&h), span(&h, &[&[0, 0, 1]]));
        assert!(centre(&sl2(Q)).is_zero());
        // In characteristic 2 the element h of sl₂ becomes central.
        assert_eq!(centre(&sl2(F2)), span(&sl2(F2), &[&[0, 1, 0]]));
    }

    #[test]
    fn ideal_checks_in_r2() {
        let r = r2(Q);
        assert!(is_ideal(&r, &span(&r, &[&[1, 0]])));
        assert!(!is_ideal(&r, &span(&r, &[&[0, 1]])));
    }

    #[test]
    fn normalizer_and_centralizer_in_heisenberg() {
        let h = h3(Q);
        let x_line = span(&h, &[&[1, 0, 0]]);
        let xz = span(&h, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(normalizer(&h, &x_line), xz);
        assert!(normalizer(&h, &x_line).contains_space(&x_line));
        assert_eq!(centralizer(&h, &x_line), xz);
        // Centralizer of the whole algebra is the centre.
        assert_eq!(centralizer(&h, &h.full_space()), centre(&h));
    }

    #[test]
    fn series_shapes() {
        let a = LieAlgebra::abelian(Q, 3);
        let d = series(&a, SeriesKind::Derived);
        assert_eq!(d.terms.len(), 2);
        assert!(d.terms[1].is_zero() && d.stabilized);
        assert!(is_solvable(&a) && is_nilpotent(&a));

        let r = r2(Q);
        let d = series(&r, SeriesKind::Derived);
        assert_eq!(
            d.terms.iter().map(Subspace::dim).collect::<Vec<_>>(),
            vec![2, 1, 0]
        );
        let lc = series(&r, SeriesKind::LowerCentral);
        assert_eq!(
            lc.terms.iter().map(Subspace::dim).collect::<Vec<_>>(),
            vec![2, 1]
        );
        assert_eq!(lc.terms[1], span(&r, &[&[1, 0]]));
        assert!(is_solvable(&r) && !is_nilpotent(&r));

        let s = sl2(Q);
        let d = series(&s, SeriesKind::Derived);
        assert_eq!(d.terms.len(), 1, "derived series stabilizes at L");
        assert!(!is_solvable(&s) && !is_nilpotent(&s));
    }

    #[test]
    fn killing_form_of_sl2() {
        let s = sl2(Q);
        let k = killing_form(&s);
        assert_eq!(Q.format_scalar(k.get(1, 1)), "8");
        assert_eq!(Q.format_scalar(k.get(0, 2)), "4");
        assert_eq!(Q.format_scalar(k.get(2, 0)), "4");
        assert!(k.get(0, 0).is_zero() && k.get(0, 1).is_zero());
        assert_eq!(k.rank(), 3);
        assert_eq!(killing_rank(&s), 3);
    }

    #[test]
    fn fitting_decompositions() {
        let r = r2(Q);
        let (l0, l1) = fitting_decomposition(&r, &r.basis_vector(1));
        assert_eq!(l0, span(&r, &[&[0, 1]]));
        assert_eq!(l1, span(&r, &[&[1, 0]]));

        let s = sl2(Q);
        let (l0, l1) = fitting_decomposition(&s, &s.basis_vector(1));
        assert_eq!(l0, span(&s, &[&[0, 1, 0]]));
        assert_eq!(l1, span(&s, &[&[1, 0, 0], &[0, 0, 1]]));

        // Nilpotent ad a: whole algebra is the null component.
        let h = h3(Q);
        let (l0, l1) = fitting_decomposition(&h, &h.basis_vector(0));
        assert!(l0.is_full() && l1.is_zero());
    }

    #[test]
    fn fitting_dims_add_over_a_spread_of_vectors() {
        let s = sl2(F3);
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    let v = vec![
                        F3.from_i64(a as i64),
                        F3.from_i64(b as i64),
                        F3.from_i64(c as i64),
                    ];
                    let (l0, l1) = fitting_decomposition(&s, &v);
                    assert_eq!(l0.dim() + l1.dim(), 3);
                    assert!(is_subalgebra(&s, &l0));
                }
            }
        }
    }

    #[test]
    fn nil_subalgebra_answers() {
        let h = h3(Q);
        assert!(is_nil_subalgebra(&h, &span(&h, &[&[1, 0, 0]])).unwrap());
        assert!(is_nil_subalgebra(&h, &h.full_space()).unwrap());

        let r = r2(Q);
        assert!(!is_nil_subalgebra(&r, &span(&r, &[&[0, 1]])).unwrap());
        assert!(is_nil_subalgebra(&r, &span(&r, &[&[1, 0]])).unwrap());

        let s = sl2(Q);
        let borel = span(&s, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(!is_nil_subalgebra(&s, &borel).unwrap());

        // Non-subalgebra input is rejected, not guessed at.
        let ef = span(&s, &[&[1, 0, 0], &[0, 0, 1]]);
        assert!(matches!(
            is_nil_subalgebra(&s, &ef),
            Err(Error::NotASubalgebra)
        ));
    }

    #[test]
    fn nil_test_agrees_with_exhaustive_element_check_over_small_fields() {
        // Oracle: over GF(p) enumerate every element of U and test (ad u)^dim.
        fn oracle(l: &LieAlgebra, u: &Subspace) -> bool {
            let p = match l.field {
                FieldSpec::PrimeField(p) => p,
                _ => unreachable!(),
            };
            let r = u.dim();
            let mut counters = vec![0u64; r];
            loop {
                let mut v = l.zero_vector();
                for (t, row) in u.basis_rows().enumerate() {
                    for (idx, entry) in row.iter().enumerate() {
                        let c = l.field.from_i64(counters[t] as i64);
                        v[idx] = l.field.add(&v[idx], &l.field.mul(&c, entry));
                    }
                }
                if !l.ad(&v).pow(l.dim).is_zero() {
                    return false;
                }
                // Odometer over GF(p)^r.
                let mut t = 0;
                loop {
                    if t == r {
                        return true;
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
        for l in [h3(F2), r2(F3), sl2(F2), sl2(F3)] {
            let full = l.full_space();
            assert_eq!(is_nil_subalgebra(&l, &full).unwrap(), oracle(&l, &full));
        }
        let r = r2(F3);
        let u = span(&r, &[&[1, 0]]);
        assert_eq!(is_nil_subalgebra(&r, &u).unwrap(), oracle(&r, &u));
    }
}
