//! Finite-dimensional dual pairs (X, Y, ⟨·,·⟩) over GF(p).
//!
//! The algebra Y ⊗ X carries the product
//! (y₁⊗x₁)(y₂⊗x₂) = y₁ ⊗ ⟨x₁, y₂⟩x₂ and models the simple algebras with
//! minimal one-sided ideals; at finite dimension n it is isomorphic to
//! M_n(F_p). The pairing is ⟨x, y⟩ := (G·x)·y for an invertible matrix G,
//! which makes the fixed isomorphism y⊗x ↦ y·(Gx)ᵀ multiplicative (for the
//! standard pairing G = I the two conventions coincide). Elements of Y ⊗ X
//! are n² coordinate vectors over the basis f_i ⊗ g_j, flattened row-major
//! in the Y index.

use crate::error::Error;
use crate::linalg::{self, Mat, Subspace};

/// Which space a subspace argument lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DualSide {
    /// W ⊆ Y; the perp lands in X.
    InY,
    /// V ⊆ X; the perp lands in Y.
    InX,
}

/// A dual pair of n-dimensional spaces over GF(p) with pairing matrix G.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualPair {
    pairing: Mat,
}

impl DualPair {
    /// Builds a dual pair from an invertible pairing matrix.
    pub fn new(pairing: Mat) -> Result<Self, Error> {
        if !linalg::is_prime(pairing.modulus()) {
            return Err(Error::NotPrime(pairing.modulus()));
        }
        let n = pairing.rows();
        let (_, rank) = pairing.rref();
        if pairing.cols() != n || rank != n {
            return Err(Error::Validation(
                "pairing matrix must be square and invertible".into(),
            ));
        }
        Ok(DualPair { pairing })
    }

    /// The standard pairing ⟨x, y⟩ = x·y (G = I).
    pub fn standard(n: usize, p: u64) -> Self {
        DualPair {
            pairing: Mat::identity(n, p),
        }
    }

    pub fn n(&self) -> usize {
        self.pairing.rows()
    }

    pub fn p(&self) -> u64 {
        self.pairing.modulus()
    }

    pub fn pairing(&self) -> &Mat {
        &self.pairing
    }

    /// ⟨x, y⟩ = (G·x)·y.
    pub fn pair(&self, x: &[u64], y: &[u64]) -> u64 {
        let n = self.n();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let p = self.p();
        let mut acc = 0u64;
        for r in 0..n {
            let mut gx = 0u64;
            for c in 0..n {
                gx = (gx + self.pairing.get(r, c) * x[c]) % p;
            }
            acc = (acc + gx * y[r]) % p;
        }
        acc
    }

    /// W^⊥: vectors of the opposite space pairing to zero against all of W.
    /// Finite-dimensional subspaces are closed: perp(perp(W)) = W.
    pub fn perp(&self, w: &Subspace, side: DualSide) -> Subspace {
        let n = self.n();
        assert_eq!(w.ambient_dim(), n, "dimension mismatch");
        assert_eq!(w.modulus(), self.p(), "modulus mismatch");
        if w.is_zero() {
            return Subspace::full(n, self.p());
        }
        // For w ∈ Y: {x : (Gx)·w = 0} = kernel of rows wᵀG.
        // For v ∈ X: {y : (Gv)·y = 0} = kernel of rows (Gv)ᵀ.
        let sys = match side {
            DualSide::InY => w.basis().mul(&self.pairing),
            DualSide::InX => w.basis().mul(&self.pairing.transpose()),
        };
        sys.kernel()
    }

    /// Coordinates of the pure tensor y ⊗ x in Y ⊗ X.
    pub fn tensor(&self, y: &[u64], x: &[u64]) -> Vec<u64> {
        let n = self.n();
        assert_eq!(y.len(), n);
        assert_eq!(x.len(), n);
        let p = self.p();
        let mut coords = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                coords[i * n + j] = (y[i] * x[j]) % p;
            }
        }
        coords
    }

    /// Product in Y ⊗ X, extended bilinearly from
    /// (y₁⊗x₁)(y₂⊗x₂) = ⟨x₁, y₂⟩ y₁⊗x₂; as matrices this is A·Gᵀ·B.
    pub fn product(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n();
        assert_eq!(a.len(), n * n);
        assert_eq!(b.len(), n * n);
        let p = self.p();
        let am = coords_to_mat(a, n, p);
        let bm = coords_to_mat(b, n, p);
        let out = am.mul(&self.pairing.transpose()).mul(&bm);
        mat_to_coords(&out)
    }

    /// The fixed isomorphism Y ⊗ X → M_n(F_p): y⊗x ↦ y·(Gx)ᵀ, i.e. T ↦ T·Gᵀ
    /// on coordinates.
    pub fn to_matrix_element(&self, t: &[u64]) -> Vec<u64> {
        let n = self.n();
        assert_eq!(t.len(), n * n);
        let tm = coords_to_mat(t, n, self.p());
        mat_to_coords(&tm.mul(&self.pairing.transpose()))
    }

    /// Pushes a subspace of Y ⊗ X through the isomorphism to M_n(F_p).
    pub fn to_matrix_subspace(&self, s: &Subspace) -> Subspace {
        let n = self.n();
        assert_eq!(s.ambient_dim(), n * n, "dimension mismatch");
        if s.is_zero() {
            return Subspace::zero(n * n, self.p());
        }
        let rows: Vec<Vec<u64>> = (0..s.dim())
            .map(|r| self.to_matrix_element(s.basis().row(r)))
            .collect();
        Subspace::from_generators(&Mat::from_rows(self.p(), &rows))
    }

    /// W ⊗ W^⊥ as a subspace of Y ⊗ X.
    pub fn tensor_subspace(&self, w: &Subspace) -> Subspace {
        let n = self.n();
        let wp = self.perp(w, DualSide::InY);
        if w.is_zero() || wp.is_zero() {
            return Subspace::zero(n * n, self.p());
        }
        let mut rows = Vec::with_capacity(w.dim() * wp.dim());
        for i in 0..w.dim() {
            for j in 0..wp.dim() {
                rows.push(self.tensor(w.basis().row(i), wp.basis().row(j)));
            }
        }
        Subspace::from_generators(&Mat::from_rows(self.p(), &rows))
    }

    /// The image of W ↦ W ⊗ W^⊥ over the proper nonzero subspaces W ⊆ Y:
    /// the maximal zero-product subspaces of Y ⊗ X, canonically sorted.
    pub fn classification(&self) -> Vec<Subspace> {
        assert!(self.n() >= 2, "dual-pair classification needs n >= 2");
        // Subspace posets here are tiny (n ≤ 4); the budget is nominal.
        let mut out = Vec::new();
        for w in linalg::enumerate_subspaces(self.n(), self.p(), u64::MAX)
            .unwrap_or_else(|e| panic!("{e}"))
        {
            if w.is_zero() || w.is_full() {
                continue;
            }
            out.push(self.tensor_subspace(&w));
        }
        out.sort();
        out
    }
}

fn coords_to_mat(coords: &[u64], n: usize, p: u64) -> Mat {
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|r| coords[r * n..(r + 1) * n].to_vec())
        .collect();
    Mat::from_rows(p, &rows)
}

fn mat_to_coords(m: &Mat) -> Vec<u64> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}
