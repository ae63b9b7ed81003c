//! The Lie ring Q⁽⁻⁾ derived from an associative algebra.
//!
//! The bracket [x, y] = xy − yx needs no new table. An additive subgroup B is
//! a Lie inner ideal when [[B, Q], B] ⊆ B, abelian when additionally
//! [B, B] = 0. Every regular inner ideal of the associative algebra is an
//! abelian inner ideal of Q⁽⁻⁾ ([B,B] ⊆ B² = 0 and the double bracket expands
//! inside BQB + B²Q + QB²). The converse direction of the classification
//! corollary is stated only for non-unital simple rings of characteristic
//! ≥ 5; no finite non-unital simple ring exists, and in unital algebras the
//! entry S sits strictly inside the abelian inner ideal S ⊕ F·1, which
//! [`cross_check`] reports as the unital obstruction.

use crate::algebra::{Algebra, Element};
use crate::classify::{classify_max_zero_product, ClassificationReport, ClassifyOptions};
use crate::error::Error;
use crate::linalg::{Mat, Subspace};

/// The commutator [a, b] = ab − ba.
pub fn bracket(alg: &Algebra, a: &Element, b: &Element) -> Element {
    alg.sub(&alg.mul(a, b), &alg.mul(b, a))
}

/// span{ [a_i, b_j] } over the two bases.
pub fn set_bracket(alg: &Algebra, a: &Subspace, b: &Subspace) -> Subspace {
    assert_eq!(a.ambient_dim(), alg.dim(), "dimension mismatch");
    assert_eq!(b.ambient_dim(), alg.dim(), "dimension mismatch");
    if a.is_zero() || b.is_zero() {
        return alg.zero_space();
    }
    let mut rows = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        let x = alg.element(a.basis().row(i));
        for j in 0..b.dim() {
            let y = alg.element(b.basis().row(j));
            rows.push(bracket(alg, &x, &y).coords().to_vec());
        }
    }
    Subspace::from_generators(&Mat::from_rows(alg.p(), &rows))
}

/// Lie inner ideal: [[B, Q], B] ⊆ B.
pub fn is_inner_ideal(alg: &Algebra, b: &Subspace) -> bool {
    let q = alg.full_space();
    b.contains(&set_bracket(alg, &set_bracket(alg, b, &q), b))
}

/// Abelian inner ideal: inner and [B, B] = 0.
pub fn is_abelian_inner_ideal(alg: &Algebra, b: &Subspace) -> bool {
    is_inner_ideal(alg, b) && set_bracket(alg, b, b).is_zero()
}

/// Jacobi identity on every basis triple; sanity for the derived bracket.
pub fn jacobi_holds(alg: &Algebra) -> bool {
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (a, b, c) = (
                    alg.basis_element(i),
                    alg.basis_element(j),
                    alg.basis_element(k),
                );
                let s1 = bracket(alg, &bracket(alg, &a, &b), &c);
                let s2 = bracket(alg, &bracket(alg, &b, &c), &a);
                let s3 = bracket(alg, &bracket(alg, &c, &a), &b);
                if !alg.add(&alg.add(&s1, &s2), &s3).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of [`cross_check`], merged into classification reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LieReport {
    pub checked: bool,
    /// Every classified maximal zero-product subspace is an abelian inner
    /// ideal of Q⁽⁻⁾.
    pub all_abelian_inner: bool,
    /// Some entry sits strictly inside the abelian inner ideal S ⊕ F·1, so
    /// maximality among all abelian inner ideals fails in this unital
    /// algebra.
    pub unital_obstruction_found: bool,
}

/// Classifies and then verifies the (ii) ⟹ (iii) direction of the Lie
/// corollary on every entry. Hard-gated to characteristic ≥ 5, matching the
/// corollary's hypothesis.
pub fn cross_check(
    alg: &Algebra,
    opts: &ClassifyOptions,
) -> Result<(ClassificationReport, LieReport), Error> {
    if alg.p() < 5 {
        return Err(Error::Characteristic(alg.p()));
    }
    let report = classify_max_zero_product(alg, opts)?;
    let mut all_abelian = true;
    let mut obstruction = false;
    for entry in &report.entries {
        if !is_abelian_inner_ideal(alg, &entry.subset) {
            all_abelian = false;
        }
        if let Some(unit) = alg.unit() {
            let bigger = entry.subset.sum(&alg.span(&[unit]));
            if bigger != entry.subset && is_abelian_inner_ideal(alg, &bigger) {
                obstruction = true;
            }
        }
    }
    let lie = LieReport {
        checked: true,
        all_abelian_inner: all_abelian,
        unital_obstruction_found: obstruction,
    };
    Ok((report, lie))
}
