//! Maximal-subalgebra listing and maximality decisions.
//!
//! ## Finite fields
//!
//! Both operations are exhaustive within a subspace-enumeration budget:
//! list every proper subalgebra and keep (or compare against) the
//! inclusion-maximal ones. Answers are decisions, not certificates.
//!
//! ## Rationals
//!
//! No enumeration exists, so sound one-sided criteria are layered:
//!
//! 1. **codim 1** — always maximal.
//! 2. **One-step extensions** — the subalgebra closure of M plus a
//!    candidate vector outside M is larger than M; if it is also proper,
//!    it is an intermediate subalgebra: a definitive *no* with witness.
//!    Candidates that all close to L prove nothing on their own, because
//!    an intermediate subalgebra can avoid every candidate vector.
//! 3. **Module irreducibility** — an intermediate subalgebra N would make
//!    N/M a nonzero proper subspace of V = L/M invariant under ad(M),
//!    hence under the unital associative envelope E of the action. So V
//!    having no such subspace proves maximality. Two finite certificates:
//!    dim E = (dim V)² (E is the full matrix algebra, which leaves only 0
//!    and V invariant), or some α ∈ E whose minimal polynomial is
//!    irreducible of degree dim V (α is then nonderogatory, making V a
//!    cyclic ℚ[α]-module isomorphic to the field ℚ[x]/(min poly), which
//!    has no nontrivial submodules).
//!
//! When no criterion fires, the answer is an honest `Unknown` rather than
//! a guess — that genuinely happens, e.g. when the action envelope is a
//! noncommutative division algebra, where minimal polynomial degrees top
//! out below dim V.

use crate::algebra::LieAlgebra;
use crate::cert::{integerize, irreducible_over_q, min_poly};
use crate::error::{Error, Result};
use crate::ideals::candidate_vectors;
use crate::invariants::{is_subalgebra, subalgebra_closure};
use crate::matrix::Matrix;
use crate::scalar::FieldSpec;
use crate::subspace::{enumerate_all_subspaces, Subspace};

/// Three-valued maximality verdict. `No` carries an intermediate proper
/// subalgebra strictly containing the queried one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalityAnswer {
    Yes,
    No { witness: Subspace },
    Unknown,
}

impl MaximalityAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, MaximalityAnswer::Yes)
    }
}

/// Every maximal subalgebra of a finite-field algebra: the proper
/// subalgebras that are inclusion-maximal among proper subalgebras, in
/// canonical subspace order.
pub fn maximal_subalgebras(l: &LieAlgebra, budget: u64) -> Result<Vec<Subspace>> {
    if !l.field.is_finite() {
        return Err(Error::InfiniteField {
            op: "maximal_subalgebras",
        });
    }
    let proper: Vec<Subspace> = enumerate_all_subspaces(l.field, l.dim, budget)?
        .into_iter()
        .filter(|u| u.dim() < l.dim && is_subalgebra(l, u))
        .collect();
    Ok(proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|t| t.dim() > m.dim() && t.contains_space(m))
        })
        .cloned()
        .collect())
}

/// Decides (finite fields) or certifies (ℚ) whether `m` is a maximal
/// subalgebra of `l`; see the module docs for the exact guarantees.
pub fn is_maximal(l: &LieAlgebra, m: &Subspace, budget: u64) -> Result<MaximalityAnswer> {
    if m.ambient != l.dim || m.field != l.field || !is_subalgebra(l, m) {
        return Err(Error::NotASubalgebra);
    }
    if m.is_full() {
        return Err(Error::InvalidInput {
            detail: "maximality is asked of proper subalgebras; got the whole algebra".into(),
        });
    }
    if m.dim() + 1 == l.dim {
        return Ok(MaximalityAnswer::Yes);
    }
    if l.field.is_finite() {
        for t in enumerate_all_subspaces(l.field, l.dim, budget)? {
            if t.dim() > m.dim() && t.dim() < l.dim && t.contains_space(m) && is_subalgebra(l, &t)
            {
                return Ok(MaximalityAnswer::No { witness: t });
            }
        }
        return Ok(MaximalityAnswer::Yes);
    }
    // One-step extensions: sound for "no".
    for v in candidate_vectors(l) {
        if m.contains(&v) {
            continue;
        }
        let extended = m.sum(&Subspace::from_rows(l.field, l.dim, vec![v]));
        let closure = subalgebra_closure(l, &extended);
        if !closure.is_full() {
            return Ok(MaximalityAnswer::No { witness: closure });
        }
    }
    // Module-irreducibility certificates: sound for "yes".
    let d = l.dim - m.dim();
    let envelope = associative_envelope(l.field, &module_action(l, m), d);
    if envelope.len() == d * d {
        return Ok(MaximalityAnswer::Yes);
    }
    let mut alphas = envelope.clone();
    for i in 0..envelope.len() {
        for j in i + 1..envelope.len() {
            alphas.push(envelope[i].add(&envelope[j]));
        }
    }
    for alpha in &alphas {
        let poly = min_poly(l.field, alpha);
        if poly.len() - 1 == d && irreducible_over_q(&integerize(&poly)).is_some() {
            return Ok(MaximalityAnswer::Yes);
        }
    }
    Ok(MaximalityAnswer::Unknown)
}

/// Matrices of ad(m_t) acting on the coordinate space of L/M (the free —
/// non-pivot — columns of M's canonical basis), one per basis row of M.
fn module_action(l: &LieAlgebra, m: &Subspace) -> Vec<Matrix> {
    let pivots = m.pivots();
    let free: Vec<usize> = (0..l.dim).filter(|c| !pivots.contains(c)).collect();
    let d = free.len();
    m.basis_rows()
        .map(|mb| {
            let mut rows = vec![vec![l.field.zero(); d]; d];
            for (c, &fc) in free.iter().enumerate() {
                let reduced = m.reduce(&l.bracket(mb, &l.basis_vector(fc)));
                for (r, &fr) in free.iter().enumerate() {
                    rows[r][c] = reduced[fr].clone();
                }
            }
            Matrix::from_rows(l.field, rows, d)
        })
        .collect()
}

/// Basis, as matrices, of the unital associative algebra generated by
/// `gens` inside d×d matrices (word closure from the identity).
fn associative_envelope(field: FieldSpec, gens: &[Matrix], d: usize) -> Vec<Matrix> {
    let mut span = Subspace::zero(field, d * d);
    let mut reps: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = vec![Matrix::identity(field, d)];
    while let Some(w) = queue.pop() {
        if span.contains(&w.flatten()) {
            continue;
        }
        span = span.sum(&Subspace::from_rows(field, d * d, vec![w.flatten()]));
        for g in gens {
            queue.push(w.mul(g));
        }
        reps.push(w);
    }
    reps
}
