//! Brute-force oracle for maximal zero-product subspaces.
//!
//! Deliberately independent of the annihilator machinery: nothing here calls
//! `lann`/`rann` or the closure operators. Products come straight from the
//! multiplication table, and the only linear algebra is a locally built
//! kernel for the extension candidates, so agreement with the classifier is
//! evidence rather than a tautology.
//!
//! A subspace S is a zero-product subspace when all pairwise basis products
//! vanish, and maximal when no single vector v with v² = 0, v·S = 0 and
//! S·v = 0 lies outside S. The single-vector test is complete: any larger
//! zero-product subset containing S also contains S ∪ {v} for some v ∉ S,
//! and the span of a zero-product set again has zero product.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::linalg::{count_subspaces, enumerate_subspaces, Mat, Subspace};

/// All pairwise products of basis vectors vanish.
pub fn is_zero_product(alg: &Algebra, s: &Subspace) -> bool {
    for i in 0..s.dim() {
        let a = alg.element(s.basis().row(i));
        for j in 0..s.dim() {
            let b = alg.element(s.basis().row(j));
            if !alg.mul(&a, &b).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The space of vectors killed by S on both sides, {v : v·S = 0 and S·v = 0},
/// built directly from the table (no annihilator module involved). Extension
/// candidates for a zero-product S live here.
fn two_sided_kill_space(alg: &Algebra, s: &Subspace) -> Subspace {
    let d = alg.dim();
    if s.is_zero() {
        return alg.full_space();
    }
    let mut sys = Mat::zero(2 * s.dim() * d, d, alg.p());
    for r in 0..s.dim() {
        let sv = alg.element(s.basis().row(r));
        for i in 0..d {
            let e = alg.basis_element(i);
            let vs = alg.mul(&e, &sv);
            let sv_e = alg.mul(&sv, &e);
            for m in 0..d {
                sys.set((2 * r) * d + m, i, vs.coords()[m]);
                sys.set((2 * r + 1) * d + m, i, sv_e.coords()[m]);
            }
        }
    }
    sys.kernel()
}

/// Whether a zero-product subspace admits no single-vector extension.
pub fn is_maximal_zero_product(alg: &Algebra, s: &Subspace) -> bool {
    debug_assert!(is_zero_product(alg, s));
    let candidates = two_sided_kill_space(alg, s);
    for v in candidates.elements() {
        if s.contains_vector(&v) {
            continue;
        }
        let e = alg.element(&v);
        if alg.mul(&e, &e).is_zero() {
            return false; // S + span{v} is a strictly larger zero-product set
        }
    }
    true
}

/// Exhaustive oracle: every maximal zero-product subspace of the algebra, in
/// canonical order. Refuses when the subspace count exceeds the budget.
pub fn oracle_max_zero_product(
    alg: &Algebra,
    budget_subspaces: u64,
) -> Result<Vec<Subspace>, Error> {
    let mut found = Vec::new();
    for s in enumerate_subspaces(alg.dim(), alg.p(), budget_subspaces)? {
        if is_zero_product(alg, &s) && is_maximal_zero_product(alg, &s) {
            found.push(s);
        }
    }
    found.sort();
    Ok(found)
}

/// Randomized fallback for algebras whose subspace poset is out of budget:
/// seeds a walk at a random square-zero vector and greedily extends it by the
/// single-vector test (choosing uniformly among eligible extensions) until
/// maximal. Returns the deduplicated, canonically sorted set of endpoints.
///
/// Fully deterministic for a fixed seed. Needs `p^dim` within the element
/// budget to pre-check that square-zero vectors exist at all; when none do,
/// the zero subspace is the unique maximal zero-product subset.
pub fn randomized_max_zero_product(
    alg: &Algebra,
    budget_elements: u64,
    seed: u64,
    walks: u32,
) -> Result<Vec<Subspace>, Error> {
    if alg.nilpotent_witness(budget_elements)?.is_none() {
        return Ok(vec![alg.zero_space()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = std::collections::BTreeSet::new();
    for _ in 0..walks {
        found.insert(random_greedy_maximal(alg, &mut rng));
    }
    Ok(found.into_iter().collect())
}

fn random_greedy_maximal(alg: &Algebra, rng: &mut ChaCha8Rng) -> Subspace {
    let d = alg.dim();
    let p = alg.p();
    let start = loop {
        let coords: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        let e = alg.element(&coords);
        if !e.is_zero() && alg.mul(&e, &e).is_zero() {
            break coords;
        }
    };
    let mut s = Subspace::line(p, &start);
    loop {
        let candidates = two_sided_kill_space(alg, &s);
        let eligible: Vec<Vec<u64>> = candidates
            .elements()
            .filter(|v| {
                if s.contains_vector(v) {
                    return false;
                }
                let e = alg.element(v);
                alg.mul(&e, &e).is_zero()
            })
            .collect();
        if eligible.is_empty() {
            debug_assert!(is_maximal_zero_product(alg, &s));
            return s;
        }
        let pick = &eligible[rng.gen_range(0..eligible.len())];
        s = s.sum(&Subspace::line(p, pick));
    }
}

/// Exact subspace count of the algebra's coordinate space; the classifier
/// uses this to choose between the exhaustive and randomized oracle.
pub fn oracle_cost(alg: &Algebra) -> u128 {
    count_subspaces(alg.dim(), alg.p())
}
