//! Exact linear algebra over prime fields GF(p).
//!
//! Everything downstream reduces to row reduction and kernels of small dense
//! matrices: annihilators are stacked kernels, ideal lattices are subspace
//! lattices, and the brute-force oracle walks the full poset of subspaces.
//! A [`Subspace`] is always stored with its reduced-row-echelon basis, so
//! subspace equality is plain matrix equality and every result is canonical.

use std::fmt;

use crate::error::Error;

/// Trial-division primality test; inputs here are small (p < 2³¹).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

#[inline]
fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

#[inline]
fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `a` must be nonzero mod p.
fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "division by zero in GF({p})");
    mod_pow(a, p - 2, p)
}

/// A residue in GF(p).
///
/// Arithmetic between scalars of different moduli panics. The modulus is
/// assumed prime (checked where scalars enter the system, not per operation),
/// which makes division by any nonzero scalar total.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    value: u64,
    modulus: u64,
}

impl Scalar {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Scalar {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.value == 0 {
            None
        } else {
            Some(Scalar {
                value: mod_inv(self.value, self.modulus),
                modulus: self.modulus,
            })
        }
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Scalar {
            value: mod_add(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Scalar {
            value: mod_sub(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Scalar {
            value: mod_mul(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        self * rhs.inv().expect("division by zero")
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: mod_sub(0, self.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A dense row-major matrix over GF(p).
///
/// All entries share one modulus and are stored reduced. Ordering is by
/// (rows, cols, modulus, entries), which downstream code uses as the
/// canonical sort for RREF bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        assert!(p >= 2);
        Mat {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    /// A 0×cols matrix (basis of the zero subspace).
    pub fn empty(cols: usize, p: u64) -> Self {
        Mat::zero(0, cols, p)
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Mat::zero(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from row vectors, reducing every entry mod p.
    ///
    /// Panics if `rows` is empty (use [`Mat::empty`] for 0-row matrices) or
    /// if the rows have uneven lengths.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        assert!(p >= 2);
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x % p));
        }
        Mat {
            rows: rows.len(),
            cols,
            p,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn at(&self, r: usize, c: usize) -> Scalar {
        Scalar::new(self.get(r, c), self.p)
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.data[r * self.cols + c] = value % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Matrix product; panics on inner-dimension or modulus mismatch.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols, self.p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let cur = out.data[r * rhs.cols + c];
                    out.data[r * rhs.cols + c] = (cur + a * rhs.get(k, c)) % self.p;
                }
            }
        }
        out
    }

    /// Stacks `rhs` below `self`; panics on column or modulus mismatch.
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.cols, rhs.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    fn take_rows(mut self, n: usize) -> Mat {
        self.data.truncate(n * self.cols);
        self.rows = n;
        self
    }

    /// The unique reduced row echelon form of this matrix and its rank.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let p = m.p;
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..m.cols {
                    m.data.swap(pivot * m.cols + c, rank * m.cols + c);
                }
            }
            let inv = mod_inv(m.get(rank, col), p);
            for c in col..m.cols {
                let v = m.get(rank, c);
                m.data[rank * m.cols + c] = mod_mul(v, inv, p);
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = mod_sub(m.get(r, c), mod_mul(factor, m.get(rank, c), p), p);
                    m.data[r * m.cols + c] = v;
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    /// The right kernel {v : M·v = 0}, as a canonical subspace of GF(p)^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        let mut col = 0;
        for row in 0..rank {
            while r.get(row, col) == 0 {
                col += 1;
            }
            pivots.push(col);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Subspace::zero(self.cols, self.p);
        }
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = mod_sub(0, r.get(row, f), self.p);
            }
            rows.push(v);
        }
        Subspace::from_generators(&Mat::from_rows(self.p, &rows))
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A linear subspace of GF(p)^n, stored as its RREF basis with no zero rows.
///
/// The RREF basis is the canonical form: two subspaces are equal exactly when
/// their basis matrices are identical, and the derived ordering (dimension,
/// then basis entries lexicographically) is the canonical sort used in every
/// report.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    /// The span of the rows of `generators`, canonicalized.
    pub fn from_generators(generators: &Mat) -> Self {
        let (r, rank) = generators.rref();
        Subspace {
            basis: r.take_rows(rank),
        }
    }

    /// Internal constructor for matrices already known to be in RREF with no
    /// zero rows (the subspace enumerator emits these directly).
    pub(crate) fn from_rref_unchecked(basis: Mat) -> Self {
        debug_assert!({
            let (r, rank) = basis.rref();
            rank == basis.rows && r == basis
        });
        Subspace { basis }
    }

    pub fn zero(ambient_dim: usize, p: u64) -> Self {
        Subspace {
            basis: Mat::empty(ambient_dim, p),
        }
    }

    pub fn full(ambient_dim: usize, p: u64) -> Self {
        Subspace {
            basis: Mat::identity(ambient_dim, p),
        }
    }

    /// The span of a single vector.
    pub fn line(p: u64, v: &[u64]) -> Self {
        Subspace::from_generators(&Mat::from_rows(p, &[v.to_vec()]))
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Reduces `v` against the RREF basis; the remainder is zero exactly when
    /// `v` lies in the subspace.
    fn reduce(&self, v: &mut [u64]) {
        let p = self.modulus();
        for r in 0..self.dim() {
            let row = self.basis.row(r);
            let pivot = row
                .iter()
                .position(|&x| x != 0)
                .expect("no zero basis rows");
            let factor = v[pivot];
            if factor == 0 {
                continue;
            }
            for (vc, &bc) in v.iter_mut().zip(row.iter()) {
                *vc = mod_sub(*vc, mod_mul(factor, bc, p), p);
            }
        }
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "dimension mismatch");
        let p = self.modulus();
        let mut w: Vec<u64> = v.iter().map(|&x| x % p).collect();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// `self.contains(other)` is true exactly when `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(
            self.ambient_dim(),
            other.ambient_dim(),
            "dimension mismatch"
        );
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        (0..other.dim()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    /// Lattice join: the span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim(),
            other.ambient_dim(),
            "dimension mismatch"
        );
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        Subspace::from_generators(&self.basis.vstack(&other.basis))
    }

    /// Lattice meet, via the kernel of the stacked system u·A = v·B.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim(),
            other.ambient_dim(),
            "dimension mismatch"
        );
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        let p = self.modulus();
        let n = self.ambient_dim();
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Subspace::zero(n, p);
        }
        // Columns are the unknowns (u, v); rows are the n coordinate equations
        // sum_i u_i A[i][c] - sum_j v_j B[j][c] = 0.
        let mut sys = Mat::zero(n, ka + kb, p);
        for c in 0..n {
            for i in 0..ka {
                sys.set(c, i, self.basis.get(i, c));
            }
            for j in 0..kb {
                sys.set(c, ka + j, mod_sub(0, other.basis.get(j, c), p));
            }
        }
        let solutions = sys.kernel();
        if solutions.is_zero() {
            return Subspace::zero(n, p);
        }
        let mut rows = Vec::with_capacity(solutions.dim());
        for s in 0..solutions.dim() {
            let uv = solutions.basis().row(s);
            let mut x = vec![0u64; n];
            for i in 0..ka {
                if uv[i] == 0 {
                    continue;
                }
                for c in 0..n {
                    x[c] = mod_add(x[c], mod_mul(uv[i], self.basis.get(i, c), p), p);
                }
            }
            rows.push(x);
        }
        Subspace::from_generators(&Mat::from_rows(p, &rows))
    }

    /// All p^dim coordinate vectors of this subspace, in base-p counter order
    /// over the basis coefficients (first basis vector least significant).
    pub fn elements(&self) -> SubspaceElements<'_> {
        SubspaceElements {
            space: self,
            counter: 0,
            total: (self.modulus() as u128).pow(self.dim() as u32),
        }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = (0..self.dim())
            .map(|r| {
                let row: Vec<String> = self.basis.row(r).iter().map(|x| x.to_string()).collect();
                format!("[{}]", row.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

/// Iterator over all vectors of a subspace.
pub struct SubspaceElements<'a> {
    space: &'a Subspace,
    counter: u128,
    total: u128,
}

impl Iterator for SubspaceElements<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.counter == self.total {
            return None;
        }
        let p = self.space.modulus();
        let n = self.space.ambient_dim();
        let mut t = self.counter;
        let mut v = vec![0u64; n];
        for i in 0..self.space.dim() {
            let digit = (t % p as u128) as u64;
            t /= p as u128;
            if digit != 0 {
                for (vc, &bc) in v.iter_mut().zip(self.space.basis.row(i)) {
                    *vc = mod_add(*vc, mod_mul(digit, bc, p), p);
                }
            }
        }
        self.counter += 1;
        Some(v)
    }
}

/// The Gaussian binomial coefficient [n choose k]_p: the number of
/// k-dimensional subspaces of GF(p)^n. Saturates at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    // Pascal-style recurrence [n,k] = [n-1,k-1] + p^k [n-1,k]; every
    // intermediate value is itself a Gaussian binomial, so saturation is
    // monotone and exact below the cap.
    let mut row: Vec<u128> = vec![1];
    for _ in 1..=n {
        let mut next = vec![1u128; row.len() + 1];
        for j in 1..row.len() {
            let pj = (p as u128).checked_pow(j as u32).unwrap_or(u128::MAX);
            next[j] = row[j - 1].saturating_add(row[j].saturating_mul(pj));
        }
        row = next;
    }
    row[k]
}

/// Total number of subspaces of GF(p)^n (the Galois number). Saturating.
pub fn count_subspaces(ambient_dim: usize, p: u64) -> u128 {
    (0..=ambient_dim).fold(0u128, |acc, k| {
        acc.saturating_add(gaussian_binomial(ambient_dim, k, p))
    })
}

/// Enumerates every subspace of GF(p)^n exactly once.
///
/// Order is deterministic: ascending rank, then pivot-column sets in
/// lexicographic order, then the free entries counted in base p. Refuses with
/// the exact count when it exceeds `budget`.
pub fn enumerate_subspaces(ambient_dim: usize, p: u64, budget: u64) -> Result<SubspaceEnum, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let count = count_subspaces(ambient_dim, p);
    if count > budget as u128 {
        return Err(Error::SubspaceBudget { count, budget });
    }
    Ok(SubspaceEnum {
        n: ambient_dim,
        p,
        rank: 0,
        pivots: Vec::new(),
        counter: 0,
        counter_max: 1,
        done: false,
    })
}

/// Streaming subspace enumerator; see [`enumerate_subspaces`].
#[derive(Debug)]
pub struct SubspaceEnum {
    n: usize,
    p: u64,
    rank: usize,
    pivots: Vec<usize>,
    counter: u64,
    counter_max: u64,
    done: bool,
}

impl SubspaceEnum {
    /// Positions of the free entries for the current pivot profile, row-major.
    fn free_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (i, &pc) in self.pivots.iter().enumerate() {
            for c in (pc + 1)..self.n {
                if !self.pivots.contains(&c) {
                    cells.push((i, c));
                }
            }
        }
        cells
    }

    fn emit(&self) -> Subspace {
        let mut m = Mat::zero(self.rank, self.n, self.p);
        for (i, &pc) in self.pivots.iter().enumerate() {
            m.set(i, pc, 1);
        }
        let cells = self.free_cells();
        let mut t = self.counter;
        // Last free cell is the least significant digit.
        for &(r, c) in cells.iter().rev() {
            m.set(r, c, t % self.p);
            t /= self.p;
        }
        Subspace::from_rref_unchecked(m)
    }

    /// Advances to the next pivot profile; false when exhausted.
    fn next_profile(&mut self) -> bool {
        // Lexicographic successor of the current pivot combination.
        let r = self.pivots.len();
        let mut i = r as isize - 1;
        while i >= 0 && self.pivots[i as usize] == self.n - r + i as usize {
            i -= 1;
        }
        if i >= 0 {
            self.pivots[i as usize] += 1;
            for j in (i as usize + 1)..r {
                self.pivots[j] = self.pivots[j - 1] + 1;
            }
        } else {
            // Move to the next rank.
            if self.rank == self.n {
                return false;
            }
            self.rank += 1;
            self.pivots = (0..self.rank).collect();
        }
        let e = self.free_cells().len() as u32;
        self.counter = 0;
        self.counter_max = self.p.pow(e);
        true
    }
}

impl Iterator for SubspaceEnum {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.emit();
        self.counter += 1;
        if self.counter == self.counter_max && !self.next_profile() {
            self.done = true;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn gf2(rows: &[Vec<u64>]) -> Mat {
        Mat::from_rows(2, rows)
    }

    #[test]
    fn scalar_field_arithmetic() {
        let a = Scalar::new(3, 5);
        let b = Scalar::new(4, 5);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((a / b).value(), 2); // 3 * 4^{-1} = 3 * 4 = 12 = 2
        assert_eq!((-b).value(), 1);
        assert!(Scalar::new(0, 5).inv().is_none());
        for v in 1..7 {
            let s = Scalar::new(v, 7);
            assert_eq!((s * s.inv().unwrap()).value(), 1);
        }
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Mat::identity(2, 2);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_of_zero_is_zero() {
        let z = Mat::zero(3, 3, 2);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_reduces_to_identity_over_gf2() {
        let m = gf2(&[vec![1, 1], vec![1, 0]]);
        let (r, rank) = m.rref();
        assert_eq!(r, Mat::identity(2, 2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(Mat::identity(3, 3).kernel().is_zero());
    }

    #[test]
    fn kernel_of_zero_map_is_full() {
        let k = Mat::zero(3, 3, 3).kernel();
        assert_eq!(k, Subspace::full(3, 3));
    }

    #[test]
    fn kernel_of_sum_functional_over_gf2() {
        let k = gf2(&[vec![1, 1]]).kernel();
        assert_eq!(k, Subspace::line(2, &[1, 1]));
    }

    #[test]
    fn lattice_ops_match_hand_computations() {
        let e1 = Subspace::line(2, &[1, 0]);
        let e2 = Subspace::line(2, &[0, 1]);
        let diag = Subspace::line(2, &[1, 1]);
        let full = Subspace::full(2, 2);
        let zero = Subspace::zero(2, 2);

        assert_eq!(e1.sum(&zero), e1);
        assert_eq!(e1.intersect(&full), e1);
        assert_eq!(e1.sum(&e2), full);
        assert_eq!(e1.intersect(&diag), zero);
        assert!(full.contains(&diag));
        assert!(!e1.contains(&diag));
        assert!(e1.contains(&zero));
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(count_subspaces(2, 2), 5);
        assert_eq!(count_subspaces(4, 2), 67);
        assert_eq!(count_subspaces(4, 3), 212);
        assert_eq!(count_subspaces(4, 5), 1120);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(9, 4, 2), 3_309_747);
        assert_eq!(count_subspaces(9, 2), 8_283_458);
    }

    #[test]
    fn enumeration_yields_each_subspace_once() {
        for (n, p) in [(2usize, 2u64), (3, 2), (2, 3), (4, 2)] {
            let expected = count_subspaces(n, p);
            let all: Vec<Subspace> = enumerate_subspaces(n, p, 10_000).unwrap().collect();
            assert_eq!(all.len() as u128, expected);
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for s in &all {
                // Canonical: re-reducing the basis changes nothing.
                assert_eq!(Subspace::from_generators(s.basis()), *s);
            }
        }
    }

    #[test]
    fn enumeration_refuses_over_budget_with_count() {
        match enumerate_subspaces(4, 5, 100) {
            Err(Error::SubspaceBudget { count, budget }) => {
                assert_eq!(count, 1120);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn subspace_elements_cover_the_space() {
        let s = Subspace::full(2, 3);
        let all: BTreeSet<Vec<u64>> = s.elements().collect();
        assert_eq!(all.len(), 9);
        let line = Subspace::line(5, &[1, 2]);
        let got: BTreeSet<Vec<u64>> = line.elements().collect();
        let want: BTreeSet<Vec<u64>> = (0..5u64).map(|t| vec![t % 5, (2 * t) % 5]).collect();
        assert_eq!(got, want);
    }

    fn arb_mat() -> impl Strategy<Value = Mat> {
        (
            prop::sample::select(vec![2u64, 3, 5, 7]),
            1usize..5,
            1usize..5,
        )
            .prop_flat_map(|(p, rows, cols)| {
                prop::collection::vec(prop::collection::vec(0..p, cols), rows)
                    .prop_map(move |rs| Mat::from_rows(p, &rs))
            })
    }

    fn arb_subspace_triple() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
        (prop::sample::select(vec![2u64, 3, 5]), 2usize..5).prop_flat_map(|(p, n)| {
            let rows = prop::collection::vec(prop::collection::vec(0..p, n), 1..4);
            (rows.clone(), rows.clone(), rows).prop_map(move |(ra, rb, rc)| {
                (
                    Subspace::from_generators(&Mat::from_rows(p, &ra)),
                    Subspace::from_generators(&Mat::from_rows(p, &rb)),
                    Subspace::from_generators(&Mat::from_rows(p, &rc)),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_mat()) {
            let (r1, k1) = m.rref();
            let (r2, k2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(k1, k2);
        }

        #[test]
        fn rank_nullity(m in arb_mat()) {
            let (_, rank) = m.rref();
            prop_assert_eq!(m.kernel().dim() + rank, m.cols());
        }

        #[test]
        fn kernel_vectors_are_killed(m in arb_mat()) {
            let k = m.kernel();
            for r in 0..k.dim() {
                let v = Mat::from_rows(m.modulus(), &[k.basis().row(r).to_vec()]);
                prop_assert!(m.mul(&v.transpose()).is_zero());
            }
        }

        #[test]
        fn modular_law(triple in arb_subspace_triple()) {
            let (a0, b, c0) = triple;
            let c = c0.sum(&a0); // force a ⊆ c
            let lhs = a0.sum(&b.intersect(&c));
            let rhs = a0.sum(&b).intersect(&c);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
