//! Annihilators, Galois closures, orthogonal pairs and regular inner ideals.
//!
//! `lann`/`rann` set up an antitone Galois connection between the lattices of
//! right and left ideals: both maps reverse inclusions, their composites are
//! extensive, and `rann∘lann∘rann = rann` (likewise on the other side). A
//! one-sided ideal is *closed* when it equals its double annihilator, which
//! happens exactly when it is an annihilator ideal. Orthogonal pairs (R, L)
//! with L·R = 0 are maximal exactly when R = rann(L) and L = lann(R), and
//! every pair saturates to a maximal one via (rann(lann(R)), lann(R)).
//!
//! Annihilators are computed as single stacked-kernel solves (dim(S)·d linear
//! equations in d unknowns), never by element sweeps.

use crate::algebra::{Algebra, IdealSide};
use crate::error::Error;
use crate::linalg::{Mat, Subspace};

/// Left annihilator {a : a·s = 0 for all s ∈ S}; always a left ideal.
/// For the zero subspace this is all of Q.
pub fn lann(alg: &Algebra, s: &Subspace) -> Subspace {
    annihilator(alg, s, true)
}

/// Right annihilator {a : s·a = 0 for all s ∈ S}; always a right ideal.
pub fn rann(alg: &Algebra, s: &Subspace) -> Subspace {
    annihilator(alg, s, false)
}

fn annihilator(alg: &Algebra, s: &Subspace, left: bool) -> Subspace {
    let d = alg.dim();
    let p = alg.p();
    assert_eq!(s.ambient_dim(), d, "dimension mismatch");
    if s.is_zero() {
        return alg.full_space();
    }
    // Unknown a with (a·s)_m = sum_i a_i (e_i·s)_m for each basis vector s of
    // S and coordinate m; stack all dim(S)·d equations and take the kernel.
    let mut sys = Mat::zero(s.dim() * d, d, p);
    for r in 0..s.dim() {
        let sv = alg.element(s.basis().row(r));
        for i in 0..d {
            let e = alg.basis_element(i);
            let prod = if left {
                alg.mul(&e, &sv)
            } else {
                alg.mul(&sv, &e)
            };
            for (m, &coord) in prod.coords().iter().enumerate() {
                sys.set(r * d + m, i, coord);
            }
        }
    }
    sys.kernel()
}

/// Closure of a right ideal: rann(lann(R)). Contains R and is idempotent.
pub fn close_right(alg: &Algebra, r: &Subspace) -> Result<Subspace, Error> {
    if !alg.is_ideal(r, IdealSide::Right) {
        return Err(Error::SideViolation(IdealSide::Right));
    }
    Ok(rann(alg, &lann(alg, r)))
}

/// Closure of a left ideal: lann(rann(L)).
pub fn close_left(alg: &Algebra, l: &Subspace) -> Result<Subspace, Error> {
    if !alg.is_ideal(l, IdealSide::Left) {
        return Err(Error::SideViolation(IdealSide::Left));
    }
    Ok(lann(alg, &rann(alg, l)))
}

/// Whether an ideal of the given side equals its closure (for `TwoSided`,
/// whether it is closed on both sides).
pub fn is_closed(alg: &Algebra, ideal: &Subspace, side: IdealSide) -> Result<bool, Error> {
    match side {
        IdealSide::Right => Ok(close_right(alg, ideal)? == *ideal),
        IdealSide::Left => Ok(close_left(alg, ideal)? == *ideal),
        IdealSide::TwoSided => {
            if !alg.is_ideal(ideal, IdealSide::TwoSided) {
                return Err(Error::SideViolation(IdealSide::TwoSided));
            }
            Ok(close_right(alg, ideal)? == *ideal && close_left(alg, ideal)? == *ideal)
        }
    }
}

/// A nonzero right ideal R and nonzero left ideal L with L·R = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthogonalPair {
    right: Subspace,
    left: Subspace,
}

impl OrthogonalPair {
    /// Validates the full pair invariants: proper ideal sides, both nonzero,
    /// L·R = 0.
    pub fn new(alg: &Algebra, right: Subspace, left: Subspace) -> Result<Self, Error> {
        if !is_orthogonal_pair(alg, &right, &left) {
            return Err(Error::NotOrthogonal);
        }
        Ok(OrthogonalPair { right, left })
    }

    pub fn right(&self) -> &Subspace {
        &self.right
    }

    pub fn left(&self) -> &Subspace {
        &self.left
    }
}

/// Both subspaces nonzero, ideals of the correct sides, and L·R = 0.
pub fn is_orthogonal_pair(alg: &Algebra, right: &Subspace, left: &Subspace) -> bool {
    !right.is_zero()
        && !left.is_zero()
        && alg.is_ideal(right, IdealSide::Right)
        && alg.is_ideal(left, IdealSide::Left)
        && alg.set_product(left, right).is_zero()
}

/// Maximal orthogonal pair test: orthogonal, R = rann(L) and L = lann(R).
pub fn is_maximal_pair(alg: &Algebra, right: &Subspace, left: &Subspace) -> bool {
    is_orthogonal_pair(alg, right, left) && rann(alg, left) == *right && lann(alg, right) == *left
}

/// Grows an orthogonal pair to the maximal pair (rann(lann(R)), lann(R)).
///
/// The input only needs a nonzero right ideal R and any nonzero L with
/// L·R = 0; L is superseded by lann(R) in the output, and L ⊆ lann(R) is all
/// the maximality argument uses. The result contains the input pair.
pub fn saturate_pair(
    alg: &Algebra,
    right: &Subspace,
    left: &Subspace,
) -> Result<OrthogonalPair, Error> {
    if right.is_zero()
        || left.is_zero()
        || !alg.is_ideal(right, IdealSide::Right)
        || !alg.set_product(left, right).is_zero()
    {
        return Err(Error::NotOrthogonal);
    }
    let l = lann(alg, right);
    let r = rann(alg, &l);
    OrthogonalPair::new(alg, r, l)
}

/// Regular inner ideal test: B·Q·B ⊆ B and B² = 0. The zero subspace is
/// vacuously regular.
pub fn is_regular_inner_ideal(alg: &Algebra, b: &Subspace) -> bool {
    let q = alg.full_space();
    let bqb = alg.set_product(&alg.set_product(b, &q), b);
    b.contains(&bqb) && alg.set_product(b, b).is_zero()
}

/// The orthogonal pair (B + B·Q, B + Q·B) attached to a nonzero regular
/// inner ideal B. Un-saturated by design; compose with [`saturate_pair`] for
/// a maximal pair.
pub fn pair_from_inner(alg: &Algebra, b: &Subspace) -> Result<OrthogonalPair, Error> {
    if b.is_zero() || !is_regular_inner_ideal(alg, b) {
        return Err(Error::NotRegularInner);
    }
    let q = alg.full_space();
    let right = b.sum(&alg.set_product(b, &q));
    let left = b.sum(&alg.set_product(&q, b));
    OrthogonalPair::new(alg, right, left)
}

/// In a von Neumann regular algebra every orthogonal pair carries a unique
/// regular inner ideal R·L = R ∩ L; this checks that identity for one pair.
pub fn check_vnr_identity(alg: &Algebra, pair: &OrthogonalPair) -> bool {
    alg.set_product(pair.right(), pair.left()) == pair.right().intersect(pair.left())
}
