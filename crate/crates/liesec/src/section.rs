//! Cores, c-ideals, supplementing chief factors, sections of maximal
//! subalgebras, and the two indices attached to them.
//!
//! ## The construction
//!
//! For a maximal subalgebra M of L, take the core D = M_L (the largest
//! ideal of L inside M) and any chief factor C/D with L = M + C. The
//! algebra (M ∩ C)/D is the *section* of M; its isomorphism class does not
//! depend on the chosen factor, so its dimension — the *c-index* η*(L:M) —
//! is well defined. The *ideal index* η(L:M) is the dimension of a chief
//! factor C/D where C is inclusion-minimal among ideals supplementing M;
//! the two are tied by the exact identity η = η* + dim(L/M), which
//! [`ideal_index`] recomputes from scratch and enforces, never assumes.
//!
//! ## Canonical section, cross-checked
//!
//! [`c_section`] always builds the section at D = M_L from the canonically
//! first verified minimal ideal of L/D. Over a finite field it then
//! rebuilds the section from *every* minimal ideal of L/D and every
//! supplementing factor of the canonical chief series, and insists each
//! alternative is isomorphic (or fingerprint-equal where the isomorphism
//! search is out of range). A disagreement would contradict the uniqueness
//! lemma and is reported as an anomaly, never filtered.
//!
//! ## Honesty over ℚ
//!
//! Exhaustive ideal enumeration only exists over GF(p). Over the rationals
//! the searches run over a constructed ideal lattice (chief-series terms,
//! radical, derived and lower-central terms, centre, verified minimal
//! ideals, closed under sums); positive answers are constructive and
//! final, while negative answers carry an explicit exhaustiveness flag.
//! Index computations that would need the full lattice refuse with a
//! capability error instead of guessing.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::ideals::{chief_series, is_certified_simple, minimal_ideals, radical, ChiefFactor};
use crate::invariants::{
    centre, is_ideal, is_nil_subalgebra, is_nilpotent, is_solvable, is_subalgebra, series,
    subspace_bracket, SeriesKind,
};
use crate::iso::{fingerprint, is_isomorphic, IsoAnswer};
use crate::matrix::Matrix;
use crate::maximal::{is_maximal, MaximalityAnswer};
use crate::quotients::{quotient, restrict};
use crate::scalar::FieldSpec;
use crate::subspace::{enumerate_all_subspaces, Subspace};

/// Default subspace budget for exhaustive finite-field ideal searches.
const ENUM_BUDGET: u64 = 1_000_000;

/// The largest ideal of L contained in B (B_L), for any subspace B:
/// the descending fixpoint X₀ = B, X_{t+1} = {x ∈ X_t : [L, x] ⊆ X_t}.
pub fn core(l: &LieAlgebra, b: &Subspace) -> Subspace {
    assert_eq!(b.ambient, l.dim, "core needs a subspace of L");
    assert_eq!(b.field, l.field, "core needs a subspace over the same field");
    let mut current = b.clone();
    loop {
        // {x : [L, x] ⊆ current} via [e_j, x] = ad(e_j)·x.
        let membership = current.membership_matrix();
        let mut rows = Vec::new();
        for j in 0..l.dim {
            let conditions = membership.mul(&l.ad_basis(j));
            for r in 0..conditions.rows {
                rows.push(conditions.row(r).to_vec());
            }
        }
        let invariant = Subspace::from_matrix(&Matrix::from_rows(l.field, rows, l.dim).kernel());
        let next = current.intersect(&invariant);
        if next.dim() == current.dim() {
            debug_assert!(is_ideal(l, &next));
            return next;
        }
        current = next;
    }
}

/// Every ideal of L, by exhaustive subspace enumeration (finite fields).
pub(crate) fn ideals_of(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    let all = enumerate_all_subspaces(l.field, l.dim, ENUM_BUDGET)?;
    Ok(all.into_iter().filter(|s| is_ideal(l, s)).collect())
}

/// A sub-lattice of the ideals of L available without enumeration: zero,
/// L, centre, radical, derived/lower-central terms, chief-series terms,
/// verified minimal ideals, closed under pairwise sums. Every member is a
/// genuine ideal; the list is complete exactly when L is certified simple.
pub(crate) fn lattice_ideals(l: &LieAlgebra) -> Vec<Subspace> {
    let mut seeds: Vec<Subspace> = vec![Subspace::zero(l.field, l.dim), l.full_space()];
    seeds.push(centre(l));
    if let Ok(r) = radical(l) {
        seeds.push(r);
    }
    for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
        seeds.extend(series(l, kind).terms);
    }
    if let Ok(factors) = chief_series(l) {
        for f in &factors {
            seeds.push(f.b.clone());
            seeds.push(f.a.clone());
        }
    }
    if let Ok(mi) = minimal_ideals(l) {
        for (ideal, verified) in mi.ideals.into_iter().zip(mi.verified) {
            if verified {
                seeds.push(ideal);
            }
        }
    }
    let mut lattice: Vec<Subspace> = Vec::new();
    for s in seeds {
        if !lattice.contains(&s) {
            lattice.push(s);
        }
    }
    // Close under sums (sums of ideals are ideals).
    loop {
        let snapshot = lattice.len();
        for i in 0..snapshot {
            for j in i + 1..snapshot {
                let s = lattice[i].sum(&lattice[j]);
                if !lattice.contains(&s) {
                    lattice.push(s);
                }
            }
        }
        if lattice.len() == snapshot {
            break;
        }
    }
    debug_assert!(lattice.iter().all(|s| is_ideal(l, s)));
    lattice.sort_by(Subspace::canonical_cmp);
    lattice
}

/// Answer of the c-ideal test: a found witness is conclusive; a negative
/// answer is conclusive only when the ideal search was exhaustive.
#[derive(Clone, Debug)]
pub struct CIdealAnswer {
    pub is_c_ideal: bool,
    /// An ideal C with L = B + C and B ∩ C ⊆ B_L, when one was found.
    pub witness: Option<Subspace>,
    /// Whether the search covered every ideal of L.
    pub exhaustive: bool,
}

/// Tests whether the subalgebra B has an ideal supplement C with
/// B ∩ C ⊆ B_L. Exhaustive over finite fields; over ℚ the search runs on
/// the constructed ideal lattice and a miss is flagged non-exhaustive
/// unless L is certified simple.
pub fn is_c_ideal(l: &LieAlgebra, b: &Subspace) -> Result<CIdealAnswer> {
    is_c_ideal_with(l, b, None)
}

/// [`is_c_ideal`] with an optional precomputed exhaustive ideal list
/// (finite fields), so sweeps over many subalgebras of one L enumerate
/// its ideals once.
pub(crate) fn is_c_ideal_with(
    l: &LieAlgebra,
    b: &Subspace,
    cached_ideals: Option<&[Subspace]>,
) -> Result<CIdealAnswer> {
    if !is_subalgebra(l, b) {
        return Err(Error::NotASubalgebra);
    }
    let (candidates, exhaustive) = match (l.field, cached_ideals) {
        (FieldSpec::PrimeField(_), Some(ideals)) => (ideals.to_vec(), true),
        (FieldSpec::PrimeField(_), None) => (ideals_of(l)?, true),
        (FieldSpec::Rationals, _) => {
            let complete = is_certified_simple(l)?.certified;
            (lattice_ideals(l), complete)
        }
    };
    let b_core = core(l, b);
    let full = l.full_space();
    for c in candidates {
        if b.sum(&c) == full && b_core.contains_space(&b.intersect(&c)) {
            return Ok(CIdealAnswer {
                is_c_ideal: true,
                witness: Some(c),
                exhaustive: true,
            });
        }
    }
    Ok(CIdealAnswer {
        is_c_ideal: false,
        witness: None,
        exhaustive,
    })
}

/// A chief factor C/D of L with D = M_L and L = M + C, built from the
/// canonically first verified minimal ideal of L/M_L.
pub fn supplementing_chief_factor(l: &LieAlgebra, m: &Subspace) -> Result<ChiefFactor> {
    if !is_subalgebra(l, m) {
        return Err(Error::NotASubalgebra);
    }
    if m.is_full() {
        return Err(Error::InvalidInput {
            detail: "the full algebra has no supplementing chief factor".into(),
        });
    }
    let d = core(l, m);
    supplementing_factor_at(l, m, &d)
}

/// Supplementing factor with the core D already computed.
pub(crate) fn supplementing_factor_at(
    l: &LieAlgebra,
    m: &Subspace,
    d: &Subspace,
) -> Result<ChiefFactor> {
    let (quot, map) = quotient(l, d)?;
    let mi = minimal_ideals(&quot)?;
    let full = l.full_space();
    for (ideal, verified) in mi.ideals.iter().zip(&mi.verified) {
        if !verified {
            continue;
        }
        let c = map.pull_subspace(ideal);
        // A minimal ideal of L/M_L cannot sit inside M (it would enlarge
        // the core), so for a genuinely maximal M it supplements.
        if m.sum(&c) != full {
            return Err(Error::NotMaximal {
                reason: format!(
                    "a minimal ideal of L/core leaves M + C of dimension {} < {}",
                    m.sum(&c).dim(),
                    l.dim
                ),
            });
        }
        let factor = factor_algebra(l, &c, d)?;
        let abelian = factor.is_abelian();
        return Ok(ChiefFactor {
            a: c,
            b: d.clone(),
            quotient: factor,
            abelian,
        });
    }
    Err(Error::Unconfirmed {
        step: format!(
            "no verified minimal ideal of the dimension-{} core quotient",
            quot.dim
        ),
    })
}

/// The algebra on C/D for nested subspaces D ⊆ C with C a subalgebra and
/// D invariant under it.
pub(crate) fn factor_algebra(l: &LieAlgebra, c: &Subspace, d: &Subspace) -> Result<LieAlgebra> {
    debug_assert!(c.contains_space(d));
    let on_c = restrict(l, c)?;
    let d_rows: Vec<Vec<_>> = d
        .basis_rows()
        .map(|r| c.coords(r).expect("D lies inside C"))
        .collect();
    let d_in_c = Subspace::from_rows(l.field, c.dim(), d_rows);
    Ok(quotient(&on_c, &d_in_c)?.0)
}

/// The section of M at the factor C/D: the algebra (M ∩ C)/D.
pub(crate) fn section_at(
    l: &LieAlgebra,
    m: &Subspace,
    c: &Subspace,
    d: &Subspace,
) -> Result<LieAlgebra> {
    factor_algebra(l, &m.intersect(c), d)
}

/// The canonical section at D = M_L with no cross-checking — the cheap
/// path for sweeps whose claims compare sections themselves.
pub(crate) fn c_section_plain(l: &LieAlgebra, m: &Subspace) -> Result<LieAlgebra> {
    let d = core(l, m);
    let factor = supplementing_factor_at(l, m, &d)?;
    section_at(l, m, &factor.a, &d)
}

/// Sec(M): the section of the maximal subalgebra M, computed at D = M_L
/// and cross-checked against every alternative supplementing factor
/// available over a finite field. Does not re-certify maximality; see
/// [`analyze_maximal`] for the certified entry point.
pub fn c_section(l: &LieAlgebra, m: &Subspace) -> Result<LieAlgebra> {
    let factor = supplementing_chief_factor(l, m)?;
    let d = &factor.b;
    let sec = section_at(l, m, &factor.a, d)?;
    if let FieldSpec::PrimeField(_) = l.field {
        cross_check_sections(l, m, d, &factor.a, &sec)?;
    }
    Ok(sec)
}

/// η*(L:M) = dim Sec(M).
pub fn c_index(l: &LieAlgebra, m: &Subspace) -> Result<usize> {
    Ok(c_section(l, m)?.dim)
}

/// Rebuilds the section from every minimal ideal of L/D and from every
/// supplementing factor of the canonical chief series, and demands each
/// agree with the canonical section up to isomorphism (fingerprint
/// equality where the exact search is out of range).
fn cross_check_sections(
    l: &LieAlgebra,
    m: &Subspace,
    d: &Subspace,
    canonical_c: &Subspace,
    canonical_sec: &LieAlgebra,
) -> Result<()> {
    let mut alternatives: Vec<(Subspace, Subspace)> = Vec::new();
    let (quot, map) = quotient(l, d)?;
    for ideal in minimal_ideals(&quot)?.ideals {
        let c = map.pull_subspace(&ideal);
        if &c != canonical_c {
            alternatives.push((c, d.clone()));
        }
    }
    let full = l.full_space();
    for f in chief_series(l)? {
        if m.contains_space(&f.b) && m.sum(&f.a) == full && (&f.a, &f.b) != (canonical_c, d) {
            alternatives.push((f.a, f.b));
        }
    }
    for (c_alt, d_alt) in alternatives {
        let alt = section_at(l, m, &c_alt, &d_alt)?;
        let agree = match is_isomorphic(canonical_sec, &alt) {
            IsoAnswer::Yes => true,
            IsoAnswer::No => false,
            IsoAnswer::Unknown => fingerprint(canonical_sec) == fingerprint(&alt),
        };
        if !agree {
            return Err(Error::Anomaly {
                detail: format!(
                    "two supplementing chief factors give non-isomorphic sections \
                     (dims {} and {}): the uniqueness lemma fails",
                    canonical_sec.dim, alt.dim
                ),
            });
        }
    }
    Ok(())
}

/// η(L:M): the dimension of a chief factor C/D where C is
/// inclusion-minimal among ideals supplementing M and D = core(L, C ∩ M).
/// Recomputed independently of the c-index, then checked against the exact
/// identity η = η* + dim(L/M); a mismatch is a verification failure.
pub fn ideal_index(l: &LieAlgebra, m: &Subspace) -> Result<usize> {
    if !is_subalgebra(l, m) {
        return Err(Error::NotASubalgebra);
    }
    if m.is_full() {
        return Err(Error::InvalidInput {
            detail: "the full algebra has no ideal index".into(),
        });
    }
    let eta = match l.field {
        FieldSpec::PrimeField(_) => ideal_index_exhaustive(l, m, &ideals_of(l)?)?,
        FieldSpec::Rationals => ideal_index_rationals(l, m)?,
    };
    let eta_star = c_index(l, m)?;
    let codim = l.dim - m.dim();
    if eta != eta_star + codim {
        return Err(Error::VerificationFailure {
            detail: format!(
                "ideal index {eta} differs from c-index {eta_star} + codimension {codim}"
            ),
        });
    }
    Ok(eta)
}

/// Finite fields: from the exhaustive ideal list, keep inclusion-minimal
/// supplements of M, and read off dim(C/D) with D = core(L, C ∩ M). The
/// dimension must not depend on the choice of C; since that uniqueness is
/// cited theory, disagreement is an anomaly.
pub(crate) fn ideal_index_exhaustive(
    l: &LieAlgebra,
    m: &Subspace,
    ideals: &[Subspace],
) -> Result<usize> {
    let full = l.full_space();
    let supplements: Vec<Subspace> = ideals
        .iter()
        .filter(|c| m.sum(c) == full)
        .cloned()
        .collect();
    let minimal: Vec<&Subspace> = supplements
        .iter()
        .filter(|c| {
            !supplements
                .iter()
                .any(|o| o.dim() < c.dim() && c.contains_space(o))
        })
        .collect();
    let mut value: Option<usize> = None;
    for c in minimal {
        // For an inclusion-minimal supplement, C/core(L, C∩M) is a chief
        // factor: an ideal strictly between would either sit inside M
        // (enlarging that core) or be a smaller supplement.
        let d = core(l, &c.intersect(m));
        let dim = c.dim() - d.dim();
        match value {
            None => value = Some(dim),
            Some(v) if v != dim => {
                return Err(Error::Anomaly {
                    detail: format!(
                        "two inclusion-minimal supplements give chief factors of \
                         dimensions {v} and {dim}: the ideal index is not well defined"
                    ),
                });
            }
            Some(_) => {}
        }
    }
    value.ok_or_else(|| Error::NotMaximal {
        reason: "no ideal supplements the subalgebra".into(),
    })
}

/// Rationals: sound in two cases — a verified minimal ideal supplements M
/// (it is inclusion-minimal outright, and D = 0 because a minimal ideal
/// has no proper nonzero sub-ideal), or L is certified simple (the only
/// supplement is L itself). Anything else is an honest capability error.
pub(crate) fn ideal_index_rationals(l: &LieAlgebra, m: &Subspace) -> Result<usize> {
    let full = l.full_space();
    let mi = minimal_ideals(l)?;
    for (ideal, verified) in mi.ideals.iter().zip(&mi.verified) {
        if *verified && m.sum(ideal) == full {
            return Ok(ideal.dim());
        }
    }
    if is_certified_simple(l)?.certified {
        let d = core(l, m);
        return Ok(l.dim - d.dim());
    }
    Err(Error::Unconfirmed {
        step: "ideal index needs the full ideal lattice: no verified minimal ideal \
               supplements the subalgebra and the algebra is not certified simple"
            .into(),
    })
}

/// Primitivity type of M: the type of the primitive algebra L/M_L.
/// 1 — unique minimal ideal, abelian; 2 — unique minimal ideal,
/// non-abelian; 3 — exactly two minimal ideals, both non-abelian. Any
/// other exhaustive configuration contradicts the cited trichotomy and is
/// an anomaly.
pub fn primitivity_type(l: &LieAlgebra, m: &Subspace) -> Result<u8> {
    if !is_subalgebra(l, m) {
        return Err(Error::NotASubalgebra);
    }
    if m.is_full() {
        return Err(Error::InvalidInput {
            detail: "the full algebra has no primitivity type".into(),
        });
    }
    let d = core(l, m);
    primitivity_type_at(l, &d)
}

/// Primitivity type from the already-computed core.
pub(crate) fn primitivity_type_at(l: &LieAlgebra, d: &Subspace) -> Result<u8> {
    let (quot, _) = quotient(l, d)?;
    let mi = minimal_ideals(&quot)?;
    let abelian = |s: &Subspace| subspace_bracket(&quot, s, s).is_zero();
    if mi.exhaustive {
        let total = mi.ideals.len();
        let abelian_count = mi.ideals.iter().filter(|s| abelian(s)).count();
        return match (total, abelian_count) {
            (1, 1) => Ok(1),
            (1, 0) => Ok(2),
            (2, 0) => Ok(3),
            _ => Err(Error::Anomaly {
                detail: format!(
                    "the core quotient has {total} minimal ideals ({abelian_count} abelian), \
                     outside the primitive trichotomy"
                ),
            }),
        };
    }
    // Non-exhaustive (ℚ): an abelian ideal — minimal or not — contains an
    // abelian minimal ideal, which the trichotomy only allows in type 1.
    if mi.ideals.iter().any(|s| abelian(s)) {
        return Ok(1);
    }
    if is_certified_simple(&quot)?.certified {
        return Ok(2);
    }
    let verified_nonabelian = mi
        .ideals
        .iter()
        .zip(&mi.verified)
        .filter(|(s, v)| **v && !abelian(s))
        .count();
    if verified_nonabelian >= 2 {
        return Ok(3);
    }
    Err(Error::Unconfirmed {
        step: "primitivity type needs the minimal ideals of the core quotient \
               classified exhaustively"
            .into(),
    })
}

/// Structural flags of the section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecFlags {
    pub solvable: bool,
    pub nilpotent: bool,
    /// Whether M ∩ C acts nilpotently on L/D — the section is nil as a
    /// subalgebra of the ambient quotient, not merely nilpotent in itself.
    pub nil: bool,
}

/// Everything this library can say about one maximal subalgebra.
#[derive(Clone, Debug)]
pub struct MaximalReport {
    pub m: Subspace,
    pub core: Subspace,
    pub prim_type: u8,
    pub sec: LieAlgebra,
    pub c_index: usize,
    pub ideal_index: usize,
    pub is_c_ideal: bool,
    pub sec_flags: SecFlags,
}

/// Certifies maximality, then assembles the full report and enforces the
/// exact cross-identities: η = η* + dim(L/M), c-ideal ⟺ η* = 0, type 1/3
/// ⟹ η* = 0, and over ℚ for type 2 the section must match M/M_L.
/// Violations surface as errors, never as silently adjusted numbers.
pub fn analyze_maximal(l: &LieAlgebra, m: &Subspace, budget: u64) -> Result<MaximalReport> {
    match is_maximal(l, m, budget)? {
        MaximalityAnswer::Yes => {}
        MaximalityAnswer::No { witness } => {
            return Err(Error::NotMaximal {
                reason: format!(
                    "a proper intermediate subalgebra of dimension {} contains it",
                    witness.dim()
                ),
            });
        }
        MaximalityAnswer::Unknown => {
            return Err(Error::NotMaximal {
                reason: "maximality could not be certified over the rationals".into(),
            });
        }
    }
    analyze_certified(l, m, None)
}

/// Report assembly for an already-certified maximal subalgebra, with an
/// optional precomputed exhaustive ideal list (finite fields) so corpus
/// sweeps enumerate each algebra's ideals once.
pub(crate) fn analyze_certified(
    l: &LieAlgebra,
    m: &Subspace,
    cached_ideals: Option<&[Subspace]>,
) -> Result<MaximalReport> {
    let d = core(l, m);
    let factor = supplementing_factor_at(l, m, &d)?;
    let sec = section_at(l, m, &factor.a, &d)?;
    if let FieldSpec::PrimeField(_) = l.field {
        cross_check_sections(l, m, &d, &factor.a, &sec)?;
    }
    let c_index = sec.dim;
    let prim_type = primitivity_type_at(l, &d)?;
    let eta = match (l.field, cached_ideals) {
        (FieldSpec::PrimeField(_), Some(ideals)) => ideal_index_exhaustive(l, m, ideals)?,
        (FieldSpec::PrimeField(_), None) => ideal_index_exhaustive(l, m, &ideals_of(l)?)?,
        (FieldSpec::Rationals, _) => ideal_index_rationals(l, m)?,
    };
    let codim = l.dim - m.dim();
    if eta != c_index + codim {
        return Err(Error::VerificationFailure {
            detail: format!(
                "ideal index {eta} differs from c-index {c_index} + codimension {codim}"
            ),
        });
    }
    let c_ideal = is_c_ideal_with(l, m, cached_ideals)?;

    let (quot, map) = quotient(l, &d)?;
    let section_image = map.push_subspace(&m.intersect(&factor.a));
    let sec_flags = SecFlags {
        solvable: is_solvable(&sec),
        nilpotent: is_nilpotent(&sec),
        nil: is_nil_subalgebra(&quot, &section_image)?,
    };

    if c_ideal.is_c_ideal != (c_index == 0) {
        return Err(Error::VerificationFailure {
            detail: format!(
                "c-ideal answer {} disagrees with c-index {c_index}",
                c_ideal.is_c_ideal
            ),
        });
    }
    if (prim_type == 1 || prim_type == 3) && c_index != 0 {
        return Err(Error::VerificationFailure {
            detail: format!("type-{prim_type} maximal subalgebra has nonzero c-index {c_index}"),
        });
    }
    // In characteristic zero a type-2 maximal subalgebra's section is
    // M/M_L itself; a decided non-isomorphism is a verification failure
    // (an undecided comparison already has equal fingerprints).
    if l.field == FieldSpec::Rationals && prim_type == 2 {
        let m_mod_core = factor_algebra(l, m, &d)?;
        if is_isomorphic(&sec, &m_mod_core) == IsoAnswer::No {
            return Err(Error::VerificationFailure {
                detail: format!(
                    "type-2 section (dim {}) is not isomorphic to M/M_L (dim {})",
                    sec.dim, m_mod_core.dim
                ),
            });
        }
    }
    Ok(MaximalReport {
        m: m.clone(),
        core: d,
        prim_type,
        sec,
        c_index,
        ideal_index: eta,
        is_c_ideal: c_ideal.is_c_ideal,
        sec_flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::maximal::maximal_subalgebras;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);
    const BUDGET: u64 = 1 << 20;

    fn named(field: FieldSpec, name: &str) -> LieAlgebra {
        catalog(field, name).unwrap().algebra
    }

    fn span(l: &LieAlgebra, rows: &[&[i64]]) -> Subspace {
        let rows: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| l.field.from_i64(x)).collect())
            .collect();
        Subspace::from_rows(l.field, l.dim, rows)
    }

    #[test]
    fn core_pins() {
        // r₂: [x, y] = x pushes y's line down to zero.
        let r2 = named(Q, "r2");
        assert!(core(&r2, &span(&r2, &[&[0, 1]])).is_zero());
        // h₃: span{x, z} is already an ideal.
        let h = named(Q, "heisenberg");
        let xz = span(&h, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(core(&h, &xz), xz);
        // A simple algebra has no nonzero ideal inside a proper subalgebra.
        let sl2 = named(Q, "sl2");
        assert!(core(&sl2, &span(&sl2, &[&[1, 0, 0], &[0, 1, 0]])).is_zero());
    }

    #[test]
    fn core_is_the_sum_of_all_ideals_inside_the_subspace() {
        for name in ["r2", "heisenberg", "sl2", "abelian(3)", "upper_triangular(2)"] {
            let l = named(F2, name);
            for b in enumerate_all_subspaces(F2, l.dim, BUDGET).unwrap() {
                let ideal_sum = ideals_of(&l)
                    .unwrap()
                    .into_iter()
                    .filter(|i| b.contains_space(i))
                    .fold(Subspace::zero(F2, l.dim), |acc, i| acc.sum(&i));
                assert_eq!(core(&l, &b), ideal_sum, "{name}: {b:?}");
            }
        }
    }

    #[test]
    fn c_ideal_pins_over_the_rationals() {
        let r2 = named(Q, "r2");
        let ans = is_c_ideal(&r2, &span(&r2, &[&[0, 1]])).unwrap();
        assert!(ans.is_c_ideal);
        assert_eq!(ans.witness.unwrap(), span(&r2, &[&[1, 0]]));

        // A Borel subalgebra of a simple algebra is not a c-ideal, and the
        // lattice {0, L} of a certified-simple algebra makes that final.
        let sl2 = named(Q, "sl2");
        let borel = span(&sl2, &[&[1, 0, 0], &[0, 1, 0]]);
        let ans = is_c_ideal(&sl2, &borel).unwrap();
        assert!(!ans.is_c_ideal);
        assert!(ans.exhaustive);

        // B = L always works; the canonical witness is the zero ideal.
        let ans = is_c_ideal(&sl2, &sl2.full_space()).unwrap();
        assert!(ans.is_c_ideal);
        assert!(ans.witness.unwrap().is_zero());
    }

    #[test]
    fn c_ideal_over_gf2_matches_a_direct_double_loop() {
        for name in ["r2", "heisenberg", "sl2", "upper_triangular(2)"] {
            let l = named(F2, name);
            let ideals = ideals_of(&l).unwrap();
            let full = l.full_space();
            for b in enumerate_all_subspaces(F2, l.dim, BUDGET).unwrap() {
                if !is_subalgebra(&l, &b) {
                    continue;
                }
                let b_core = core(&l, &b);
                let expected = ideals
                    .iter()
                    .any(|c| b.sum(c) == full && b_core.contains_space(&b.intersect(c)));
                let got = is_c_ideal(&l, &b).unwrap();
                assert_eq!(got.is_c_ideal, expected, "{name}: {b:?}");
                assert!(got.exhaustive);
                if let Some(w) = got.witness {
                    assert!(is_ideal(&l, &w));
                }
            }
        }
    }

    #[test]
    fn supplementing_factor_pins() {
        let r2 = named(Q, "r2");
        let f = supplementing_chief_factor(&r2, &span(&r2, &[&[0, 1]])).unwrap();
        assert_eq!(f.a, span(&r2, &[&[1, 0]]));
        assert!(f.b.is_zero());
        assert!(f.abelian);

        let sl2 = named(Q, "sl2");
        let f = supplementing_chief_factor(&sl2, &span(&sl2, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert!(f.a.is_full());
        assert!(f.b.is_zero());
        assert!(!f.abelian);

        // Every maximal of h₃ over GF(2) is supplemented by an abelian
        // 1-dimensional factor with D inside M.
        let h = named(F2, "heisenberg");
        for m in maximal_subalgebras(&h, BUDGET).unwrap() {
            let f = supplementing_chief_factor(&h, &m).unwrap();
            assert_eq!(f.quotient.dim, 1);
            assert!(f.abelian);
            assert!(m.contains_space(&f.b));
        }
    }

    #[test]
    fn section_pins() {
        let r2 = named(Q, "r2");
        assert_eq!(c_index(&r2, &span(&r2, &[&[0, 1]])).unwrap(), 0);

        // The Borel's section is the Borel itself: 2-dimensional,
        // solvable, non-nilpotent.
        let sl2 = named(Q, "sl2");
        let borel = span(&sl2, &[&[1, 0, 0], &[0, 1, 0]]);
        let sec = c_section(&sl2, &borel).unwrap();
        assert_eq!(sec.dim, 2);
        assert!(is_solvable(&sec) && !is_nilpotent(&sec));
        assert_eq!(fingerprint(&sec), fingerprint(&restrict(&sl2, &borel).unwrap()));

        // All three declared maximals of the 6-dimensional simple algebra
        // have c-index 2.
        let g = named(Q, "gejn(1)");
        for rows in [
            [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]],
            [[0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0]],
            [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]],
        ] {
            let m = span(&g, &[&rows[0], &rows[1]]);
            assert_eq!(c_index(&g, &m).unwrap(), 2);
        }
    }

    #[test]
    fn sl2_over_gf3_sections_are_never_trivial() {
        // Planes have c-index 2, anisotropic lines c-index 1 — no maximal
        // subalgebra of this non-solvable algebra has a trivial section.
        let s = named(F3, "sl2");
        for m in maximal_subalgebras(&s, BUDGET).unwrap() {
            let idx = c_index(&s, &m).unwrap();
            let expected = if m.dim() == 2 { 2 } else { 1 };
            assert_eq!(idx, expected, "maximal {m:?}");
        }
    }

    #[test]
    fn ideal_index_pins() {
        let r2 = named(Q, "r2");
        assert_eq!(ideal_index(&r2, &span(&r2, &[&[0, 1]])).unwrap(), 1);

        let sl2 = named(Q, "sl2");
        assert_eq!(
            ideal_index(&sl2, &span(&sl2, &[&[1, 0, 0], &[0, 1, 0]])).unwrap(),
            3
        );

        let g = named(Q, "gejn(1)");
        let m = span(
            &g,
            &[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0]],
        );
        assert_eq!(ideal_index(&g, &m).unwrap(), 6);

        let h = named(F2, "heisenberg");
        for m in maximal_subalgebras(&h, BUDGET).unwrap() {
            assert_eq!(ideal_index(&h, &m).unwrap(), 1);
        }
    }

    #[test]
    fn ideal_index_matches_brute_force_over_small_fields() {
        // Oracle: scan every (C, D) pair with C an inclusion-minimal
        // supplement, D ⊆ C ∩ M an ideal with nothing strictly between D
        // and C; all such factors must share one dimension.
        for (field, name) in [
            (F2, "r2"),
            (F2, "heisenberg"),
            (F2, "sl2"),
            (F3, "sl2"),
            (F2, "upper_triangular(2)"),
            (F2, "abelian(3)"),
        ] {
            let l = named(field, name);
            let ideals = ideals_of(&l).unwrap();
            let full = l.full_space();
            for m in maximal_subalgebras(&l, BUDGET).unwrap() {
                let supplements: Vec<&Subspace> =
                    ideals.iter().filter(|c| m.sum(c) == full).collect();
                let mut oracle: Option<usize> = None;
                for c in &supplements {
                    if supplements
                        .iter()
                        .any(|o| o.dim() < c.dim() && c.contains_space(o))
                    {
                        continue;
                    }
                    for d in &ideals {
                        let chief = c.contains_space(d)
                            && d.dim() < c.dim()
                            && m.contains_space(d)
                            && !ideals.iter().any(|e| {
                                e.dim() > d.dim()
                                    && e.dim() < c.dim()
                                    && e.contains_space(d)
                                    && c.contains_space(e)
                            });
                        if chief {
                            let dim = c.dim() - d.dim();
                            assert!(
                                oracle.is_none() || oracle == Some(dim),
                                "{name}: ill-defined ideal index"
                            );
                            oracle = Some(dim);
                        }
                    }
                }
                assert_eq!(
                    ideal_index(&l, &m).unwrap(),
                    oracle.unwrap(),
                    "{name}: {m:?}"
                );
            }
        }
    }

    #[test]
    fn primitivity_type_pins() {
        let r2 = named(Q, "r2");
        assert_eq!(primitivity_type(&r2, &span(&r2, &[&[0, 1]])).unwrap(), 1);

        let sl2 = named(Q, "sl2");
        let borel = span(&sl2, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(primitivity_type(&sl2, &borel).unwrap(), 2);

        let h = named(F2, "heisenberg");
        for m in maximal_subalgebras(&h, BUDGET).unwrap() {
            assert_eq!(primitivity_type(&h, &m).unwrap(), 1);
        }

        let g = named(Q, "gejn(1)");
        let m = span(&g, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0]]);
        assert_eq!(primitivity_type(&g, &m).unwrap(), 2);
    }

    #[test]
    fn diagonal_of_a_double_is_type_3_with_trivial_section() {
        // The diagonal of sl₂ ⊕ sl₂ over GF(3) is maximal; the core
        // quotient is the double itself with two non-abelian minimal
        // ideals, and the section vanishes.
        let l = named(F3, "direct_sum(sl2,sl2)");
        let m = span(
            &l,
            &[
                &[1, 0, 0, 1, 0, 0],
                &[0, 1, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 1],
            ],
        );
        assert_eq!(primitivity_type(&l, &m).unwrap(), 3);
        assert_eq!(c_index(&l, &m).unwrap(), 0);
        let ans = is_c_ideal(&l, &m).unwrap();
        assert!(ans.is_c_ideal);
    }

    #[test]
    fn analyze_maximal_assembles_the_rational_worked_examples() {
        let r2 = named(Q, "r2");
        let rep = analyze_maximal(&r2, &span(&r2, &[&[0, 1]]), BUDGET).unwrap();
        assert!(rep.core.is_zero());
        assert_eq!(rep.prim_type, 1);
        assert_eq!(rep.c_index, 0);
        assert_eq!(rep.ideal_index, 1);
        assert!(rep.is_c_ideal);
        assert!(rep.sec_flags.solvable && rep.sec_flags.nilpotent && rep.sec_flags.nil);

        let sl2 = named(Q, "sl2");
        let rep = analyze_maximal(&sl2, &span(&sl2, &[&[1, 0, 0], &[0, 1, 0]]), BUDGET).unwrap();
        assert!(rep.core.is_zero());
        assert_eq!(rep.prim_type, 2);
        assert_eq!(rep.sec.dim, 2);
        assert_eq!(rep.c_index, 2);
        assert_eq!(rep.ideal_index, 3);
        assert!(!rep.is_c_ideal);
        assert!(rep.sec_flags.solvable);
        assert!(!rep.sec_flags.nilpotent);
        assert!(!rep.sec_flags.nil);
    }

    #[test]
    fn analyze_maximal_on_an_abelian_line() {
        let a = named(F2, "abelian(2)");
        let m = span(&a, &[&[1, 0]]);
        let rep = analyze_maximal(&a, &m, BUDGET).unwrap();
        assert_eq!(rep.core, m);
        assert_eq!(rep.prim_type, 1);
        assert_eq!(rep.c_index, 0);
        assert_eq!(rep.ideal_index, 1);
        assert!(rep.is_c_ideal);
        assert!(rep.sec_flags.nil);
    }

    #[test]
    fn analyze_maximal_refuses_non_maximal_input() {
        let h = named(F2, "heisenberg");
        // span{z} is the centre: a subalgebra, but far from maximal.
        let err = analyze_maximal(&h, &span(&h, &[&[0, 0, 1]]), BUDGET).unwrap_err();
        assert!(matches!(err, Error::NotMaximal { .. }));
        // span{e, f} in sl₂ is not even a subalgebra.
        let sl2 = named(Q, "sl2");
        let err = analyze_maximal(&sl2, &span(&sl2, &[&[1, 0, 0], &[0, 0, 1]]), BUDGET).unwrap_err();
        assert!(matches!(err, Error::NotASubalgebra));
    }

    #[test]
    fn solvable_iff_every_section_trivial_on_small_gf2_algebras() {
        // The solvability criterion, checked exhaustively on catalog
        // landmarks: solvable algebras have only trivial sections, and
        // the non-solvable ones exhibit a nonzero c-index somewhere.
        for name in [
            "r2",
            "heisenberg",
            "abelian(3)",
            "upper_triangular(2)",
            "sl2",
            "direct_sum(r2,abelian(1))",
        ] {
            let l = named(F2, name);
            let all_trivial = maximal_subalgebras(&l, BUDGET)
                .unwrap()
                .iter()
                .all(|m| c_index(&l, m).unwrap() == 0);
            assert_eq!(all_trivial, is_solvable(&l), "{name}");
        }
    }

    #[test]
    fn nil_flag_matches_solvability_on_gf3_landmarks() {
        for name in ["sl2", "upper_triangular(2)", "heisenberg"] {
            let l = named(F3, name);
            let all_nil = maximal_subalgebras(&l, BUDGET)
                .unwrap()
                .iter()
                .all(|m| analyze_maximal(&l, m, BUDGET).unwrap().sec_flags.nil);
            assert_eq!(all_nil, is_solvable(&l), "{name}");
        }
    }

    #[test]
    fn lattice_ideals_are_ideals_and_include_the_chief_chain() {
        let l = named(Q, "direct_sum(r2,abelian(1))");
        let lattice = lattice_ideals(&l);
        assert!(lattice.iter().all(|s| is_ideal(&l, s)));
        assert!(lattice.iter().any(|s| s.is_zero()));
        assert!(lattice.iter().any(|s| s.is_full()));
        for f in chief_series(&l).unwrap() {
            assert!(lattice.contains(&f.a));
            assert!(lattice.contains(&f.b));
        }
    }
}
