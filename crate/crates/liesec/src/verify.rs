//! Claim-by-claim verification suite and the counterexample search.
//!
//! Each registered claim is an exact mathematical statement about maximal
//! subalgebras and their sections. [`verify`] sweeps a corpus and reports
//! one [`VerificationOutcome`] per claim: how many instances were checked,
//! every violation found (failures are data, never errors), and any
//! honesty notes — skipped instances, isomorphism checks degraded to
//! fingerprint comparison, scopes narrowed by capability.
//!
//! ## Independence discipline
//!
//! The identity claims recompute both sides by unrelated code paths: the
//! c-index comes from an explicit quotient construction, the ideal index
//! from exhaustive ideal enumeration, the c-ideal answer from a witness
//! search. The suite would therefore catch a bug in any single path.
//!
//! ## Determinism
//!
//! Per-algebra work runs in parallel; results are merged in input order,
//! and claims are reported in registry order, so output is byte-stable
//! across worker counts.

use std::cell::OnceCell;

use rayon::prelude::*;

use crate::algebra::LieAlgebra;
use crate::catalog::{catalog, CatalogEntry, DeclaredProperty};
use crate::corpus::{standard_corpus, Corpus};
use crate::error::{Error, Result};
use crate::ideals::{chief_series, minimal_ideals, radical};
use crate::invariants::{is_nil_subalgebra, is_solvable, subspace_bracket};
use crate::iso::{fingerprint, is_isomorphic, IsoAnswer};
use crate::maximal::{is_maximal, maximal_subalgebras, MaximalityAnswer};
use crate::quotients::{quotient, restrict};
use crate::scalar::FieldSpec;
use crate::section::{
    c_section_plain, core, ideal_index_exhaustive, ideal_index_rationals, ideals_of,
    is_c_ideal_with, lattice_ideals, primitivity_type_at, section_at, supplementing_factor_at,
    CIdealAnswer,
};
use crate::subspace::Subspace;

// ---------------------------------------------------------------------------
// Claim registry
// ---------------------------------------------------------------------------

/// The registered claims, in canonical reporting order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ClaimId {
    /// All supplementing chief factors of one maximal subalgebra yield
    /// isomorphic sections (exhaustive over finite fields).
    LemmaUnique,
    /// M is a c-ideal ⟺ its c-index is 0.
    Lemma2I,
    /// η = η* + dim(L/M), as an exact integer identity.
    Lemma2II,
    /// An abelian chief factor supplemented by a maximal M is
    /// complemented: M ∩ A = B exactly.
    LemmaSupp,
    /// For every ideal B ⊆ M, Sec(M) and Sec(M/B) agree.
    LemmaFactor,
    /// Primitivity type 1 or 3 forces c-index 0.
    LemmaPrim,
    /// L is solvable ⟺ every maximal subalgebra has c-index 0.
    ThmTrivialI,
    /// L is solvable ⟺ every maximal subalgebra's section is nil.
    ThmNil,
    /// Characteristic 0: all sections solvable ⟺ L = radical ∔ (direct
    /// sum of simples, each minimal non-abelian or sl₂).
    ThmChar0Structure,
    /// The declared maximal subalgebras of sl₂(ℚ) and each gejn(k) share
    /// a single c-index value per algebra.
    CorCindex,
}

impl ClaimId {
    /// Every claim, in reporting order.
    pub const ALL: [ClaimId; 10] = [
        ClaimId::LemmaUnique,
        ClaimId::Lemma2I,
        ClaimId::Lemma2II,
        ClaimId::LemmaSupp,
        ClaimId::LemmaFactor,
        ClaimId::LemmaPrim,
        ClaimId::ThmTrivialI,
        ClaimId::ThmNil,
        ClaimId::ThmChar0Structure,
        ClaimId::CorCindex,
    ];

    /// Stable machine-readable identifier.
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::LemmaUnique => "lemma_unique",
            ClaimId::Lemma2I => "lemma2_i",
            ClaimId::Lemma2II => "lemma2_ii",
            ClaimId::LemmaSupp => "lemma_supp",
            ClaimId::LemmaFactor => "lemma_factor",
            ClaimId::LemmaPrim => "lemma_prim",
            ClaimId::ThmTrivialI => "thm_trivial_i",
            ClaimId::ThmNil => "thm_nil",
            ClaimId::ThmChar0Structure => "thm_char0_structure",
            ClaimId::CorCindex => "cor_cindex",
        }
    }

    /// Parses a claim identifier as printed by [`ClaimId::name`].
    pub fn parse(s: &str) -> Result<ClaimId> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput {
                detail: format!(
                    "unknown claim {s:?}; known claims: {}",
                    ClaimId::ALL.map(|c| c.name()).join(", ")
                ),
            })
    }
}

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

/// One disproved instance of a claim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    /// Identifier of the algebra (provenance tag or catalog name).
    pub algebra: String,
    /// Human-readable witness data.
    pub witness: String,
}

/// Outcome status; `Fail` exactly when violations are nonempty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped { reason: String },
}

/// Result of running one claim over a corpus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationOutcome {
    pub claim: ClaimId,
    /// Number of instances the claim's quantifier actually ranged over.
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
    pub status: ClaimStatus,
    /// Honesty notes: skipped instances, fingerprint degradations,
    /// capability-narrowed scopes. Duplicates are squashed with counts.
    pub notes: Vec<String>,
}

impl VerificationOutcome {
    fn finish(
        claim: ClaimId,
        instances_checked: usize,
        mut violations: Vec<Violation>,
        notes: Vec<String>,
        skip_reason: Option<String>,
    ) -> Self {
        violations.sort_by(|a, b| (&a.algebra, &a.witness).cmp(&(&b.algebra, &b.witness)));
        let status = match skip_reason {
            Some(reason) => ClaimStatus::Skipped { reason },
            None if violations.is_empty() => ClaimStatus::Pass,
            None => ClaimStatus::Fail,
        };
        VerificationOutcome {
            claim,
            instances_checked,
            violations,
            status,
            notes: squash(notes),
        }
    }

    /// True unless the claim failed (skipped counts as not-failed).
    pub fn passed(&self) -> bool {
        !matches!(self.status, ClaimStatus::Fail)
    }
}

/// Deduplicates notes, keeping first-appearance order and appending
/// multiplicities.
fn squash(notes: Vec<String>) -> Vec<String> {
    let mut out: Vec<(String, usize)> = Vec::new();
    for n in notes {
        match out.iter_mut().find(|(s, _)| *s == n) {
            Some((_, k)) => *k += 1,
            None => out.push((n, 1)),
        }
    }
    out.into_iter()
        .map(|(s, k)| if k == 1 { s } else { format!("{s} (×{k})") })
        .collect()
}

// ---------------------------------------------------------------------------
// Targets and precomputation
// ---------------------------------------------------------------------------

/// One algebra to sweep, with its maximal-subalgebra source.
#[derive(Clone, Debug)]
pub struct VerifyTarget {
    pub id: String,
    pub algebra: LieAlgebra,
    /// `None`: enumerate maximal subalgebras exhaustively (finite fields).
    /// `Some`: restrict the sweep to this list (catalog entries over ℚ,
    /// where exhaustive enumeration does not exist).
    pub declared_maximals: Option<Vec<Subspace>>,
}

impl VerifyTarget {
    /// Target from a bare algebra, identified by its provenance tag.
    pub fn from_algebra(algebra: LieAlgebra) -> Self {
        let id = algebra
            .provenance
            .clone()
            .unwrap_or_else(|| format!("unnamed[dim={}]", algebra.dim));
        VerifyTarget {
            id,
            algebra,
            declared_maximals: None,
        }
    }

    /// Target from a catalog entry, restricted to its declared maximal
    /// subalgebras (the only sound sweep over ℚ).
    pub fn from_catalog(entry: CatalogEntry) -> Self {
        VerifyTarget {
            id: entry.name,
            algebra: entry.algebra,
            declared_maximals: Some(entry.declared_maximals),
        }
    }

    /// Targets for every algebra of a generated corpus.
    pub fn from_corpus(corpus: &Corpus) -> Vec<VerifyTarget> {
        corpus
            .algebras
            .iter()
            .cloned()
            .map(VerifyTarget::from_algebra)
            .collect()
    }
}

/// The fixed characteristic-zero sweep set: every catalog family at small
/// parameters, including the entries with declared maximal subalgebras
/// (r2, sl2, gejn) that anchor the characteristic-zero claims.
pub fn rational_catalog_targets() -> Result<Vec<VerifyTarget>> {
    const NAMES: [&str; 12] = [
        "abelian(1)",
        "abelian(2)",
        "abelian(3)",
        "r2",
        "heisenberg",
        "upper_triangular(2)",
        "sl2",
        "gejn(1)",
        "gejn(2)",
        "direct_sum(r2,abelian(1))",
        "direct_sum(sl2,abelian(1))",
        "direct_sum(sl2,r2)",
    ];
    NAMES
        .into_iter()
        .map(|n| Ok(VerifyTarget::from_catalog(catalog(FieldSpec::Rationals, n)?)))
        .collect()
}

/// A computed value, or the reason it is missing. `Hard` wraps anomalies
/// and verification failures (claim violations); `Soft` wraps capability
/// gaps (instances honestly skipped).
enum Item<T> {
    Ok(T),
    Hard(String),
    Soft(String),
}

fn classify<T>(r: Result<T>) -> Item<T> {
    match r {
        Ok(v) => Item::Ok(v),
        Err(e @ (Error::Anomaly { .. } | Error::VerificationFailure { .. })) => {
            Item::Hard(e.to_string())
        }
        Err(e) => Item::Soft(e.to_string()),
    }
}

/// Everything computed once per (algebra, maximal) pair. Each field comes
/// from an independent code path; the claims only read them.
struct PairData {
    m: Subspace,
    core: Subspace,
    sec: Item<LieAlgebra>,
    eta: Item<usize>,
    c_ideal: Item<CIdealAnswer>,
    prim: Item<u8>,
    nil: Item<bool>,
}

fn broken_pair(m: Subspace, core: Subspace, hard: bool, msg: &str) -> PairData {
    let mk = || -> String { msg.to_string() };
    macro_rules! item {
        () => {
            if hard {
                Item::Hard(mk())
            } else {
                Item::Soft(mk())
            }
        };
    }
    PairData {
        m,
        core,
        sec: item!(),
        eta: item!(),
        c_ideal: item!(),
        prim: item!(),
        nil: item!(),
    }
}

/// Per-algebra data shared by all claims.
struct TargetData {
    id: String,
    algebra: LieAlgebra,
    solvable: bool,
    /// Whether `pairs` covers every maximal subalgebra of the algebra.
    exhaustive: bool,
    /// Exhaustive ideal list (finite fields only).
    ideals: Option<Vec<Subspace>>,
    pairs: Vec<PairData>,
    /// Chief-factor covering pairs (d, c) indexing into `ideals`,
    /// computed lazily because only two claims need it.
    cover: OnceCell<std::result::Result<Vec<(usize, usize)>, String>>,
    notes: Vec<String>,
}

impl TargetData {
    fn chief_cover(&self) -> std::result::Result<&[(usize, usize)], String> {
        let ideals = self.ideals.as_deref().expect("cover needs the ideal list");
        let computed = self.cover.get_or_init(|| {
            chief_cover(&self.algebra, ideals).map_err(|e| e.to_string())
        });
        match computed {
            Ok(v) => Ok(v.as_slice()),
            Err(e) => Err(e.clone()),
        }
    }
}

/// All chief factors C/D of L as index pairs (d, c) into the exhaustive
/// ideal list: for each ideal D, the ideals covering it chief-ly are
/// exactly the preimages of the minimal ideals of L/D.
fn chief_cover(l: &LieAlgebra, ideals: &[Subspace]) -> Result<Vec<(usize, usize)>> {
    let mut cover = Vec::new();
    for (di, d) in ideals.iter().enumerate() {
        if d.is_full() {
            continue;
        }
        let (q, map) = quotient(l, d)?;
        for ideal in minimal_ideals(&q)?.ideals {
            let c = map.pull_subspace(&ideal);
            let ci = ideals
                .iter()
                .position(|x| *x == c)
                .ok_or_else(|| Error::Anomaly {
                    detail: "a chief cover escaped the exhaustive ideal list".into(),
                })?;
            cover.push((di, ci));
        }
    }
    Ok(cover)
}

/// Computes all per-pair data for one target.
fn prepare(target: &VerifyTarget, budget: u64) -> TargetData {
    let l = &target.algebra;
    let mut notes = Vec::new();
    let finite = matches!(l.field, FieldSpec::PrimeField(_));

    let ideals = if finite {
        match ideals_of(l) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("{}: ideal enumeration failed: {e}", target.id));
                None
            }
        }
    } else {
        None
    };

    let (maximals, exhaustive) = match (&target.declared_maximals, finite) {
        (Some(list), _) => (list.clone(), false),
        (None, true) => match maximal_subalgebras(l, budget) {
            Ok(v) => (v, true),
            Err(e) => {
                notes.push(format!(
                    "{}: maximal enumeration failed, target skipped: {e}",
                    target.id
                ));
                (Vec::new(), false)
            }
        },
        (None, false) => {
            notes.push(format!(
                "{}: no declared maximal subalgebras over the rationals, target skipped",
                target.id
            ));
            (Vec::new(), false)
        }
    };

    let pairs = maximals
        .into_iter()
        .map(|m| {
            let d = core(l, &m);
            // Declared maximals are re-certified; enumerated ones already are.
            if !exhaustive {
                match is_maximal(l, &m, budget) {
                    Ok(MaximalityAnswer::Yes) => {}
                    Ok(MaximalityAnswer::No { witness }) => {
                        return broken_pair(
                            m,
                            d,
                            true,
                            &format!(
                                "declared maximal is not maximal (intermediate of dim {})",
                                witness.dim()
                            ),
                        );
                    }
                    Ok(MaximalityAnswer::Unknown) => {
                        return broken_pair(m, d, false, "maximality not certifiable over ℚ");
                    }
                    Err(e) => {
                        let hard = matches!(
                            e,
                            Error::Anomaly { .. } | Error::VerificationFailure { .. }
                        );
                        return broken_pair(m, d, hard, &e.to_string());
                    }
                }
            }
            let factor = supplementing_factor_at(l, &m, &d);
            let (sec, nil) = match &factor {
                Ok(f) => {
                    let sec = classify(section_at(l, &m, &f.a, &d));
                    let nil = classify(quotient(l, &d).and_then(|(q, map)| {
                        is_nil_subalgebra(&q, &map.push_subspace(&m.intersect(&f.a)))
                    }));
                    (sec, nil)
                }
                Err(e) => {
                    let hard =
                        matches!(e, Error::Anomaly { .. } | Error::VerificationFailure { .. });
                    let msg = e.to_string();
                    let sec = if hard {
                        Item::Hard(msg.clone())
                    } else {
                        Item::Soft(msg.clone())
                    };
                    let nil = if hard { Item::Hard(msg) } else { Item::Soft(msg) };
                    (sec, nil)
                }
            };
            let eta = classify(match (l.field, ideals.as_deref()) {
                (FieldSpec::PrimeField(_), Some(list)) => ideal_index_exhaustive(l, &m, list),
                (FieldSpec::PrimeField(_), None) => Err(Error::Unconfirmed {
                    step: "ideal index needs the exhaustive ideal list".into(),
                }),
                (FieldSpec::Rationals, _) => ideal_index_rationals(l, &m),
            });
            let c_ideal = classify(is_c_ideal_with(l, &m, ideals.as_deref()));
            let prim = classify(primitivity_type_at(l, &d));
            PairData {
                m,
                core: d,
                sec,
                eta,
                c_ideal,
                prim,
                nil,
            }
        })
        .collect();

    TargetData {
        id: target.id.clone(),
        algebra: l.clone(),
        solvable: is_solvable(l),
        exhaustive,
        ideals,
        pairs,
        cover: OnceCell::new(),
        notes,
    }
}

// ---------------------------------------------------------------------------
// The suite
// ---------------------------------------------------------------------------

/// Runs the requested claims over the targets. Failures are reported as
/// data, never errors; claims are returned in registry order.
pub fn verify(claims: &[ClaimId], targets: &[VerifyTarget], budget: u64) -> Vec<VerificationOutcome> {
    let data: Vec<TargetData> = targets.par_iter().map(|t| prepare(t, budget)).collect();
    ClaimId::ALL
        .into_iter()
        .filter(|c| claims.contains(c))
        .map(|c| evaluate(c, &data))
        .collect()
}

fn evaluate(claim: ClaimId, data: &[TargetData]) -> VerificationOutcome {
    let mut instances = 0usize;
    let mut violations: Vec<Violation> = Vec::new();
    let mut notes: Vec<String> = data.iter().flat_map(|t| t.notes.clone()).collect();
    let mut skip: Option<String> = None;

    match claim {
        ClaimId::Lemma2I => {
            for t in data {
                for p in &t.pairs {
                    check_pair(
                        t,
                        p,
                        [&p.sec.map_dim(), &p.c_ideal.map_c()],
                        |v| (v[1] == 1) == (v[0] == 0),
                        "is_c_ideal disagrees with c-index",
                        &mut instances,
                        &mut violations,
                        &mut notes,
                    );
                }
            }
        }
        ClaimId::Lemma2II => {
            for t in data {
                for p in &t.pairs {
                    let codim = t.algebra.dim - p.m.dim();
                    check_pair(
                        t,
                        p,
                        [&p.sec.map_dim(), &p.eta.map_id()],
                        |v| v[1] == v[0] + codim,
                        "η ≠ η* + dim(L/M)",
                        &mut instances,
                        &mut violations,
                        &mut notes,
                    );
                }
            }
        }
        ClaimId::LemmaPrim => {
            for t in data {
                for p in &t.pairs {
                    check_pair(
                        t,
                        p,
                        [&p.sec.map_dim(), &p.prim.map_u8()],
                        |v| !(v[1] == 1 || v[1] == 3) || v[0] == 0,
                        "type-1/3 maximal subalgebra with nonzero c-index",
                        &mut instances,
                        &mut violations,
                        &mut notes,
                    );
                }
            }
        }
        ClaimId::ThmTrivialI => {
            sweep_solvability(
                data,
                |p| match &p.sec {
                    Item::Ok(sec) => Item::Ok(sec.dim == 0),
                    Item::Hard(e) => Item::Hard(e.clone()),
                    Item::Soft(e) => Item::Soft(e.clone()),
                },
                "c-index",
                &mut instances,
                &mut violations,
                &mut notes,
            );
        }
        ClaimId::ThmNil => {
            sweep_solvability(
                data,
                |p| match &p.nil {
                    Item::Ok(v) => Item::Ok(*v),
                    Item::Hard(e) => Item::Hard(e.clone()),
                    Item::Soft(e) => Item::Soft(e.clone()),
                },
                "nil section",
                &mut instances,
                &mut violations,
                &mut notes,
            );
        }
        ClaimId::LemmaUnique => {
            lemma_unique(data, &mut instances, &mut violations, &mut notes, &mut skip);
        }
        ClaimId::LemmaSupp => {
            lemma_supp(data, &mut instances, &mut violations, &mut notes);
        }
        ClaimId::LemmaFactor => {
            lemma_factor(data, &mut instances, &mut violations, &mut notes);
        }
        ClaimId::ThmChar0Structure => {
            thm_char0(data, &mut instances, &mut violations, &mut notes, &mut skip);
        }
        ClaimId::CorCindex => {
            cor_cindex(data, &mut instances, &mut violations, &mut notes, &mut skip);
        }
    }

    VerificationOutcome::finish(claim, instances, violations, notes, skip)
}

// Small adaptors so heterogeneous pair fields can share one checker.
impl Item<LieAlgebra> {
    fn map_dim(&self) -> Item<usize> {
        match self {
            Item::Ok(l) => Item::Ok(l.dim),
            Item::Hard(e) => Item::Hard(e.clone()),
            Item::Soft(e) => Item::Soft(e.clone()),
        }
    }
}
impl Item<CIdealAnswer> {
    fn map_c(&self) -> Item<usize> {
        match self {
            Item::Ok(a) => Item::Ok(usize::from(a.is_c_ideal)),
            Item::Hard(e) => Item::Hard(e.clone()),
            Item::Soft(e) => Item::Soft(e.clone()),
        }
    }
}
impl Item<usize> {
    fn map_id(&self) -> Item<usize> {
        match self {
            Item::Ok(v) => Item::Ok(*v),
            Item::Hard(e) => Item::Hard(e.clone()),
            Item::Soft(e) => Item::Soft(e.clone()),
        }
    }
}
impl Item<u8> {
    fn map_u8(&self) -> Item<usize> {
        match self {
            Item::Ok(v) => Item::Ok(*v as usize),
            Item::Hard(e) => Item::Hard(e.clone()),
            Item::Soft(e) => Item::Soft(e.clone()),
        }
    }
}

/// Evaluates one pair-level predicate over already-computed fields,
/// recording violations for hard errors and notes for capability skips.
#[allow(clippy::too_many_arguments)]
fn check_pair(
    t: &TargetData,
    p: &PairData,
    inputs: [&Item<usize>; 2],
    predicate: impl Fn([usize; 2]) -> bool,
    label: &str,
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
) {
    let mut values = [0usize; 2];
    for (slot, item) in values.iter_mut().zip(inputs) {
        match item {
            Item::Ok(v) => *slot = *v,
            Item::Hard(e) => {
                violations.push(Violation {
                    algebra: t.id.clone(),
                    witness: format!("{} — {e}", describe(&p.m)),
                });
                return;
            }
            Item::Soft(e) => {
                notes.push(format!("instance skipped: {e}"));
                return;
            }
        }
    }
    *instances += 1;
    if !predicate(values) {
        violations.push(Violation {
            algebra: t.id.clone(),
            witness: format!("{}: {label} (values {values:?})", describe(&p.m)),
        });
    }
}

/// Shared evaluator for the two solvability characterizations: the ⟹
/// direction is checked on every pair, the ⟸ direction only where the
/// maximal list is exhaustive.
fn sweep_solvability(
    data: &[TargetData],
    field: impl Fn(&PairData) -> Item<bool> + Copy,
    what: &str,
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
) {
    for t in data {
        let mut all_known = true;
        let mut all_trivial = true;
        for p in &t.pairs {
            match field(p) {
                Item::Ok(trivial) => {
                    *instances += 1;
                    if t.solvable && !trivial {
                        violations.push(Violation {
                            algebra: t.id.clone(),
                            witness: format!(
                                "solvable algebra with non-trivial {what} at {}",
                                describe(&p.m)
                            ),
                        });
                    }
                    all_trivial &= trivial;
                }
                Item::Hard(e) => {
                    all_known = false;
                    violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    });
                }
                Item::Soft(e) => {
                    all_known = false;
                    notes.push(format!("instance skipped: {e}"));
                }
            }
        }
        if t.exhaustive && all_known {
            if !t.solvable && all_trivial {
                violations.push(Violation {
                    algebra: t.id.clone(),
                    witness: format!(
                        "non-solvable algebra whose every maximal subalgebra has trivial {what}"
                    ),
                });
            }
        } else if !t.solvable && !t.pairs.is_empty() {
            notes.push(
                "reverse direction not concluded without an exhaustive maximal list".to_string(),
            );
        }
    }
}

fn lemma_unique(
    data: &[TargetData],
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
    skip: &mut Option<String>,
) {
    let mut any_finite = false;
    let mut degraded = 0usize;
    let mut multi_factor_pairs = 0usize;
    for t in data {
        let Some(ideals) = t.ideals.as_deref() else {
            if !t.pairs.is_empty() {
                notes.push(
                    "rational targets skipped: uniqueness needs exhaustive ideal enumeration"
                        .to_string(),
                );
            }
            continue;
        };
        any_finite = true;
        let cover = match t.chief_cover() {
            Ok(c) => c,
            Err(e) => {
                notes.push(format!("{}: chief-factor enumeration failed: {e}", t.id));
                continue;
            }
        };
        let l = &t.algebra;
        let full = l.full_space();
        for p in &t.pairs {
            let factors: Vec<(usize, usize)> = cover
                .iter()
                .copied()
                .filter(|(di, ci)| {
                    p.m.contains_space(&ideals[*di]) && p.m.sum(&ideals[*ci]) == full
                })
                .collect();
            if factors.is_empty() {
                notes.push("instance skipped: no supplementing chief factor".to_string());
                continue;
            }
            if factors.len() >= 2 {
                multi_factor_pairs += 1;
            }
            *instances += 1;
            // Cheap screen: section dimensions must already agree.
            let dims: Vec<usize> = factors
                .iter()
                .map(|(di, ci)| p.m.intersect(&ideals[*ci]).dim() - ideals[*di].dim())
                .collect();
            if dims.iter().any(|d| *d != dims[0]) {
                violations.push(Violation {
                    algebra: t.id.clone(),
                    witness: format!(
                        "{}: supplementing chief factors give sections of dimensions {dims:?}",
                        describe(&p.m)
                    ),
                });
                continue;
            }
            if dims[0] == 0 {
                continue; // every section is the zero algebra
            }
            let sections: Vec<Item<LieAlgebra>> = factors
                .iter()
                .map(|(di, ci)| classify(section_at(l, &p.m, &ideals[*ci], &ideals[*di])))
                .collect();
            let mut first: Option<&LieAlgebra> = None;
            for s in &sections {
                match s {
                    Item::Ok(alg) => match first {
                        None => first = Some(alg),
                        Some(reference) => match is_isomorphic(reference, alg) {
                            IsoAnswer::Yes => {}
                            IsoAnswer::Unknown => degraded += 1,
                            IsoAnswer::No => violations.push(Violation {
                                algebra: t.id.clone(),
                                witness: format!(
                                    "{}: two supplementing chief factors give non-isomorphic \
                                     sections of dimension {}",
                                    describe(&p.m),
                                    alg.dim
                                ),
                            }),
                        },
                    },
                    Item::Hard(e) => violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    }),
                    Item::Soft(e) => notes.push(format!("section skipped: {e}")),
                }
            }
        }
    }
    if degraded > 0 {
        notes.push(format!(
            "{degraded} comparisons degraded to fingerprint equality (isomorphism search out of range)"
        ));
    }
    if any_finite {
        notes.push(format!(
            "{multi_factor_pairs} pairs had at least two supplementing chief factors"
        ));
    } else {
        *skip = Some("needs exhaustive ideal enumeration over a finite field".to_string());
    }
}

fn lemma_supp(
    data: &[TargetData],
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
) {
    for t in data {
        let l = &t.algebra;
        let full = l.full_space();
        if let Some(ideals) = t.ideals.as_deref() {
            let cover = match t.chief_cover() {
                Ok(c) => c,
                Err(e) => {
                    notes.push(format!("{}: chief-factor enumeration failed: {e}", t.id));
                    continue;
                }
            };
            // Abelian-ness of C/D depends on [C, C] ⊆ D; cache the bracket
            // per ideal.
            let mut brackets: Vec<Option<Subspace>> = vec![None; ideals.len()];
            for p in &t.pairs {
                *instances += 1;
                for (di, ci) in cover {
                    let (d, c) = (&ideals[*di], &ideals[*ci]);
                    if !p.m.contains_space(d) || p.m.sum(c) != full {
                        continue;
                    }
                    let bracket = brackets[*ci]
                        .get_or_insert_with(|| subspace_bracket(l, c, c))
                        .clone();
                    if !d.contains_space(&bracket) {
                        continue; // factor not abelian
                    }
                    if p.m.intersect(c) != *d {
                        violations.push(Violation {
                            algebra: t.id.clone(),
                            witness: format!(
                                "{}: abelian supplemented chief factor (dims {} over {}) is \
                                 not complemented",
                                describe(&p.m),
                                c.dim(),
                                d.dim()
                            ),
                        });
                    }
                }
            }
        } else {
            // ℚ: canonical chief series plus each pair's own factor.
            let series_factors = chief_series(l);
            for p in &t.pairs {
                *instances += 1;
                let mut factors: Vec<(Subspace, Subspace, bool)> = Vec::new();
                if let Ok(fs) = &series_factors {
                    for f in fs {
                        factors.push((f.a.clone(), f.b.clone(), f.abelian));
                    }
                }
                if let Ok(f) = supplementing_factor_at(l, &p.m, &p.core) {
                    factors.push((f.a.clone(), f.b.clone(), f.abelian));
                }
                if factors.is_empty() {
                    notes.push(
                        "instance checked against no factors (chief series unavailable over ℚ)"
                            .to_string(),
                    );
                }
                for (a, b, abelian) in factors {
                    if !abelian || !p.m.contains_space(&b) || p.m.sum(&a) != full {
                        continue;
                    }
                    if p.m.intersect(&a) != b {
                        violations.push(Violation {
                            algebra: t.id.clone(),
                            witness: format!(
                                "{}: abelian supplemented chief factor (dims {} over {}) is \
                                 not complemented",
                                describe(&p.m),
                                a.dim(),
                                b.dim()
                            ),
                        });
                    }
                }
            }
            notes.push(
                "rational factors limited to the canonical chief series and core factors"
                    .to_string(),
            );
        }
    }
}

fn lemma_factor(
    data: &[TargetData],
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
) {
    let mut degraded = 0usize;
    for t in data {
        let l = &t.algebra;
        let inner_ideals: Vec<Subspace> = match t.ideals.as_deref() {
            Some(list) => list.to_vec(),
            None => {
                notes.push(
                    "rational ideal chains limited to the constructed ideal lattice".to_string(),
                );
                lattice_ideals(l)
            }
        };
        for p in &t.pairs {
            let sec0 = match &p.sec {
                Item::Ok(s) => s,
                Item::Hard(e) => {
                    violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    });
                    continue;
                }
                Item::Soft(e) => {
                    notes.push(format!("instance skipped: {e}"));
                    continue;
                }
            };
            // Ideals of L inside M are exactly the ideals inside the core.
            for b in inner_ideals.iter().filter(|b| p.core.contains_space(b)) {
                *instances += 1;
                let reduced = quotient(l, b).and_then(|(q, map)| {
                    c_section_plain(&q, &map.push_subspace(&p.m))
                });
                match classify(reduced) {
                    Item::Ok(sec_b) => match is_isomorphic(sec0, &sec_b) {
                        IsoAnswer::Yes => {}
                        IsoAnswer::Unknown => degraded += 1,
                        IsoAnswer::No => violations.push(Violation {
                            algebra: t.id.clone(),
                            witness: format!(
                                "{}: Sec(M) (dim {}) differs from Sec(M/B) (dim {}) at an \
                                 ideal B of dim {}",
                                describe(&p.m),
                                sec0.dim,
                                sec_b.dim,
                                b.dim()
                            ),
                        }),
                    },
                    Item::Hard(e) => violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    }),
                    Item::Soft(e) => notes.push(format!("chain skipped: {e}")),
                }
            }
        }
    }
    if degraded > 0 {
        notes.push(format!(
            "{degraded} comparisons degraded to fingerprint equality (isomorphism search out of range)"
        ));
    }
}

fn thm_char0(
    data: &[TargetData],
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
    skip: &mut Option<String>,
) {
    let applicable: Vec<&TargetData> = data
        .iter()
        .filter(|t| t.algebra.field == FieldSpec::Rationals && !t.pairs.is_empty())
        .collect();
    if applicable.is_empty() {
        *skip = Some(
            "statement about characteristic-zero catalog entries with declared maximal \
             subalgebras; run the rational sweep"
                .to_string(),
        );
        return;
    }
    notes.push(
        "left side quantified over declared maximal subalgebras only (exhaustive \
         enumeration undecidable over ℚ)"
            .to_string(),
    );
    for t in applicable {
        let mut lhs = true;
        let mut undecided = false;
        for p in &t.pairs {
            match &p.sec {
                Item::Ok(sec) => lhs &= is_solvable(sec),
                Item::Hard(e) => {
                    violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    });
                    undecided = true;
                }
                Item::Soft(e) => {
                    notes.push(format!("instance skipped: {e}"));
                    undecided = true;
                }
            }
        }
        if undecided {
            continue;
        }
        match levi_structure(&t.algebra, notes) {
            Item::Ok(rhs) => {
                *instances += 1;
                if lhs != rhs {
                    violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!(
                            "sections {} solvable but radical-plus-qualifying-simples \
                             structure is {rhs}",
                            if lhs { "all" } else { "not all" }
                        ),
                    });
                }
            }
            Item::Hard(e) => violations.push(Violation {
                algebra: t.id.clone(),
                witness: e,
            }),
            Item::Soft(e) => notes.push(format!("{}: structure side undecided: {e}", t.id)),
        }
    }
}

/// Decides whether L = radical ∔ (direct sum of simples each minimal
/// non-abelian or sl₂): true when the radical is everything, otherwise
/// the Levi factor L/R must decompose into verified minimal ideals each
/// of which matches sl₂ or a catalog minimal-non-abelian entry.
fn levi_structure(l: &LieAlgebra, notes: &mut Vec<String>) -> Item<bool> {
    let r = match classify(radical(l)) {
        Item::Ok(r) => r,
        Item::Hard(e) => return Item::Hard(e),
        Item::Soft(e) => return Item::Soft(e),
    };
    if r.dim() == l.dim {
        return Item::Ok(true);
    }
    let q = match classify(quotient(l, &r)) {
        Item::Ok((q, _)) => q,
        Item::Hard(e) => return Item::Hard(e),
        Item::Soft(e) => return Item::Soft(e),
    };
    let mi = match classify(minimal_ideals(&q)) {
        Item::Ok(v) => v,
        Item::Hard(e) => return Item::Hard(e),
        Item::Soft(e) => return Item::Soft(e),
    };
    let verified: Vec<&Subspace> = mi
        .ideals
        .iter()
        .zip(&mi.verified)
        .filter(|(_, v)| **v)
        .map(|(s, _)| s)
        .collect();
    let span = verified.iter().fold(Subspace::zero(q.field, q.dim), |acc, s| acc.sum(s));
    let dim_sum: usize = verified.iter().map(|s| s.dim()).sum();
    if !span.is_full() || dim_sum != q.dim {
        return Item::Soft("Levi factor decomposition into minimal ideals incomplete".into());
    }
    let sl2 = match catalog(FieldSpec::Rationals, "sl2") {
        Ok(e) => e.algebra,
        Err(e) => return Item::Soft(e.to_string()),
    };
    for s in verified {
        let summand = match classify(restrict(&q, s)) {
            Item::Ok(a) => a,
            Item::Hard(e) => return Item::Hard(e),
            Item::Soft(e) => return Item::Soft(e),
        };
        match is_isomorphic(&summand, &sl2) {
            IsoAnswer::Yes => continue,
            IsoAnswer::Unknown => {
                notes.push("a Levi summand matches sl₂ by fingerprint only".to_string());
                continue;
            }
            IsoAnswer::No => {}
        }
        if summand.dim % 3 == 0 && summand.dim >= 6 {
            let k = summand.dim / 3 - 1;
            if let Ok(entry) = catalog(FieldSpec::Rationals, &format!("gejn({k})")) {
                if entry
                    .declared_properties
                    .contains(&DeclaredProperty::MinimalNonabelian)
                    && fingerprint(&summand) == fingerprint(&entry.algebra)
                {
                    notes.push(format!(
                        "a Levi summand matched the minimal non-abelian entry gejn({k}) by \
                         fingerprint"
                    ));
                    continue;
                }
            }
        }
        return Item::Soft(format!(
            "cannot decide whether a dimension-{} Levi summand is minimal non-abelian",
            summand.dim
        ));
    }
    Item::Ok(true)
}

fn cor_cindex(
    data: &[TargetData],
    instances: &mut usize,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
    skip: &mut Option<String>,
) {
    let applicable: Vec<&TargetData> = data
        .iter()
        .filter(|t| {
            t.algebra.field == FieldSpec::Rationals
                && (t.id == "sl2" || t.id.starts_with("gejn("))
                && !t.pairs.is_empty()
        })
        .collect();
    if applicable.is_empty() {
        *skip = Some(
            "statement about the declared maximal subalgebras of sl2 and gejn(k) over the \
             rationals; run the rational sweep"
                .to_string(),
        );
        return;
    }
    for t in applicable {
        let mut values: Vec<usize> = Vec::new();
        let mut undecided = false;
        for p in &t.pairs {
            match &p.sec {
                Item::Ok(sec) => {
                    *instances += 1;
                    values.push(sec.dim);
                }
                Item::Hard(e) => {
                    violations.push(Violation {
                        algebra: t.id.clone(),
                        witness: format!("{} — {e}", describe(&p.m)),
                    });
                    undecided = true;
                }
                Item::Soft(e) => {
                    notes.push(format!("instance skipped: {e}"));
                    undecided = true;
                }
            }
        }
        if undecided || values.is_empty() {
            continue;
        }
        if values.iter().any(|v| *v != values[0]) {
            violations.push(Violation {
                algebra: t.id.clone(),
                witness: format!("declared maximal subalgebras have c-indices {values:?}"),
            });
        } else {
            notes.push(format!("{}: shared c-index {}", t.id, values[0]));
        }
    }
}

/// Compact, deterministic rendering of a subspace for witness strings.
fn describe(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis_rows()
        .map(|r| {
            let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", coords.join(" "))
        })
        .collect();
    if rows.is_empty() {
        "span{}".to_string()
    } else {
        format!("span{{{}}}", rows.join(", "))
    }
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

/// A non-solvable algebra with at least one maximal subalgebra whose
/// section vanishes — outside characteristic zero this is not ruled out
/// by any verified claim, so occurrences are findings, not failures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounterexampleFinding {
    pub algebra: String,
    pub dim: usize,
    /// The maximal subalgebras witnessing a trivial section.
    pub trivial_maximals: Vec<Subspace>,
}

/// Result of one sharpness probe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchOutcome {
    pub findings: Vec<CounterexampleFinding>,
    pub algebras_scanned: usize,
    pub non_solvable_count: usize,
    pub warnings: Vec<String>,
}

/// Scans a deterministic corpus over a finite field for non-solvable
/// algebras with a trivial-section maximal subalgebra. Same seed, same
/// findings.
pub fn search_counterexample(
    field: FieldSpec,
    max_dim: usize,
    seed: u64,
    per_config_target: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    if !matches!(field, FieldSpec::PrimeField(_)) {
        return Err(Error::InfiniteField {
            op: "search_counterexample",
        });
    }
    let corpus = standard_corpus(field, seed, max_dim, per_config_target)?;
    let mut warnings = corpus.warnings.clone();
    let algebras_scanned = corpus.algebras.len();
    let scanned: Vec<std::result::Result<Option<CounterexampleFinding>, String>> = corpus
        .algebras
        .par_iter()
        .filter(|l| !is_solvable(l))
        .map(|l| {
            let id = l.provenance.clone().unwrap_or_else(|| "unnamed".into());
            let maximals = maximal_subalgebras(l, budget).map_err(|e| format!("{id}: {e}"))?;
            let mut trivial = Vec::new();
            for m in maximals {
                let sec = c_section_plain(l, &m).map_err(|e| format!("{id}: {e}"))?;
                if sec.dim == 0 {
                    trivial.push(m);
                }
            }
            Ok((!trivial.is_empty()).then_some(CounterexampleFinding {
                algebra: id,
                dim: l.dim,
                trivial_maximals: trivial,
            }))
        })
        .collect();
    let mut findings = Vec::new();
    let mut non_solvable_count = 0usize;
    for item in scanned {
        non_solvable_count += 1;
        match item {
            Ok(Some(f)) => findings.push(f),
            Ok(None) => {}
            Err(w) => warnings.push(w),
        }
    }
    Ok(SearchOutcome {
        findings,
        algebras_scanned,
        non_solvable_count,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate_corpus, CorpusSpec};

    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);
    const BUDGET: u64 = 1 << 20;

    fn small_corpus(field: FieldSpec, max_dim: usize, target: usize) -> Vec<VerifyTarget> {
        let corpus = generate_corpus(&CorpusSpec {
            field,
            ambient_matrix_size: 3,
            generator_count: 2,
            seed: 42,
            max_dim,
            target_count: target,
        })
        .unwrap();
        VerifyTarget::from_corpus(&corpus)
    }

    #[test]
    fn claim_names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(ClaimId::parse(c.name()).unwrap(), c);
        }
        assert!(ClaimId::parse("lemma_unknown").is_err());
    }

    #[test]
    fn all_claims_pass_on_a_small_gf2_corpus() {
        let targets = small_corpus(F2, 3, 10);
        let outcomes = verify(&ClaimId::ALL, &targets, BUDGET);
        assert_eq!(outcomes.len(), 10);
        for o in &outcomes {
            assert!(o.violations.is_empty(), "{}: {:?}", o.claim.name(), o.violations);
            match o.claim {
                ClaimId::ThmChar0Structure | ClaimId::CorCindex => {
                    assert!(matches!(o.status, ClaimStatus::Skipped { .. }), "{:?}", o);
                }
                _ => {
                    assert_eq!(o.status, ClaimStatus::Pass, "{:?}", o.claim);
                    assert!(o.instances_checked > 0, "{:?} checked nothing", o.claim);
                }
            }
        }
    }

    #[test]
    fn all_claims_pass_on_the_rational_catalog() {
        let targets = rational_catalog_targets().unwrap();
        let outcomes = verify(&ClaimId::ALL, &targets, BUDGET);
        for o in &outcomes {
            assert!(o.violations.is_empty(), "{}: {:?}", o.claim.name(), o.violations);
            match o.claim {
                ClaimId::LemmaUnique => {
                    assert!(matches!(o.status, ClaimStatus::Skipped { .. }));
                }
                ClaimId::ThmChar0Structure => {
                    assert_eq!(o.status, ClaimStatus::Pass);
                    // r2, sl2, gejn(1), gejn(2) all decide both sides.
                    assert!(o.instances_checked >= 4, "{o:?}");
                }
                ClaimId::CorCindex => {
                    assert_eq!(o.status, ClaimStatus::Pass);
                    assert!(o.notes.iter().any(|n| n.contains("sl2: shared c-index 2")));
                    assert!(o
                        .notes
                        .iter()
                        .any(|n| n.contains("gejn(1): shared c-index 2")));
                }
                _ => assert_eq!(o.status, ClaimStatus::Pass, "{:?}", o.claim),
            }
        }
    }

    #[test]
    fn verification_is_deterministic() {
        let targets = small_corpus(F3, 3, 8);
        let a = verify(&ClaimId::ALL, &targets, BUDGET);
        let b = verify(&ClaimId::ALL, &targets, BUDGET);
        assert_eq!(a, b);
    }

    #[test]
    fn lemma_unique_counts_multi_factor_instances() {
        // Direct sums provide maximal subalgebras supplemented by several
        // chief factors, so the uniqueness claim must range over them.
        let targets = small_corpus(F2, 4, 14);
        let outcomes = verify(&[ClaimId::LemmaUnique], &targets, BUDGET);
        assert_eq!(outcomes.len(), 1);
        assert_eq!(outcomes[0].status, ClaimStatus::Pass);
        assert!(outcomes[0].instances_checked > 10);
    }

    #[test]
    fn search_on_a_solvable_only_corpus_is_empty() {
        // Every algebra of dimension ≤ 2 is solvable.
        let out = search_counterexample(F2, 2, 7, 6, BUDGET).unwrap();
        assert!(out.findings.is_empty());
        assert!(out.non_solvable_count == 0);
        assert!(out.algebras_scanned > 0);
    }

    #[test]
    fn search_is_deterministic_and_sl2_gf3_is_never_a_finding() {
        let a = search_counterexample(F3, 3, 42, 10, BUDGET).unwrap();
        let b = search_counterexample(F3, 3, 42, 10, BUDGET).unwrap();
        assert_eq!(a, b);
        // sl₂(GF(3)) is non-solvable but all its sections have dimension
        // 1 or 2, so it must never appear among the findings.
        assert!(a.non_solvable_count > 0);
        assert!(a.findings.iter().all(|f| f.algebra != "catalog/sl2"));
    }

    #[test]
    fn note_squashing_keeps_order_and_counts() {
        let notes = vec!["a".to_string(), "b".to_string(), "a".to_string()];
        assert_eq!(squash(notes), vec!["a (×2)".to_string(), "b".to_string()]);
    }
}
