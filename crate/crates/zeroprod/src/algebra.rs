//! Structure-constant algebras over GF(p).
//!
//! An [`Algebra`] is a finite-dimensional associative algebra described by a
//! d×d table of coordinate vectors (`table[i][j]` = coordinates of e_i·e_j),
//! an optional unit, and basis labels. Construction validates associativity
//! on every basis triple and the unit axioms, so downstream code can assume a
//! genuine associative algebra. Ring predicates (semiprime, prime, simple,
//! core) and element inventories (idempotents, square-zero witnesses) are
//! exhaustive element sweeps, gated by an explicit budget rather than
//! silently sampling.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::annlattice;
use crate::error::Error;
use crate::linalg::{is_prime, Mat, Subspace};

/// Hard cap on the algebra dimension; the table alone is d³ scalars.
pub const MAX_DIM: usize = 16;

/// Cap on the modulus so triple products fit in u64 arithmetic.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// Which multiplications an ideal must absorb.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for IdealSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSide::Left => write!(f, "left"),
            IdealSide::Right => write!(f, "right"),
            IdealSide::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// An element of an algebra, as coordinates over the algebra's basis.
///
/// Elements are plain coordinate vectors; all arithmetic goes through the
/// owning [`Algebra`], which knows the modulus and multiplication table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Element {
    coords: Vec<u64>,
}

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// First structural violation found while validating an algebra description.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    NotPrime(u64),
    ModulusTooLarge(u64),
    DimOutOfRange(usize),
    BasisNameCount { expected: usize, got: usize },
    TableShape { i: usize, j: usize },
    UnitLength { expected: usize, got: usize },
    Associativity { i: usize, j: usize, k: usize },
    UnitAxiom { i: usize, side: &'static str },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPrime(p) => write!(f, "p = {p} is not prime"),
            Violation::ModulusTooLarge(p) => {
                write!(f, "p = {p} exceeds the supported maximum {MAX_MODULUS}")
            }
            Violation::DimOutOfRange(d) => write!(f, "dim = {d} is outside 1..={MAX_DIM}"),
            Violation::BasisNameCount { expected, got } => {
                write!(f, "expected {expected} basis names, got {got}")
            }
            Violation::TableShape { i, j } => {
                write!(f, "table entry [{i}][{j}] has the wrong shape")
            }
            Violation::UnitLength { expected, got } => {
                write!(f, "unit has {got} coordinates, expected {expected}")
            }
            Violation::Associativity { i, j, k } => {
                write!(f, "associativity fails at basis triple ({i}, {j}, {k})")
            }
            Violation::UnitAxiom { i, side } => {
                write!(
                    f,
                    "declared unit fails {side} unit axiom at basis element {i}"
                )
            }
        }
    }
}

/// The JSON-facing description of an algebra.
///
/// Schema: `{"p": <prime>, "dim": <d>, "basis_names": [<d strings>],
/// "table": [[[<d ints>]×d]×d], "unit": [<d ints>] | null}` where
/// `table[i][j][k]` is the coefficient of basis_k in basis_i·basis_j.
/// Integers are reduced mod p on load.
#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct RawAlgebra {
    pub p: u64,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub table: Vec<Vec<Vec<i64>>>,
    pub unit: Option<Vec<i64>>,
}

impl RawAlgebra {
    /// Returns the first structural violation, or `None` when valid.
    pub fn validate(&self) -> Option<Violation> {
        self.check().err()
    }

    /// Validates and builds the immutable [`Algebra`].
    pub fn build(&self) -> Result<Algebra, Error> {
        self.check().map_err(|v| Error::Validation(v.to_string()))
    }

    fn check(&self) -> Result<Algebra, Violation> {
        if !is_prime(self.p) {
            return Err(Violation::NotPrime(self.p));
        }
        if self.p > MAX_MODULUS {
            return Err(Violation::ModulusTooLarge(self.p));
        }
        let d = self.dim;
        if d == 0 || d > MAX_DIM {
            return Err(Violation::DimOutOfRange(d));
        }
        if self.basis_names.len() != d {
            return Err(Violation::BasisNameCount {
                expected: d,
                got: self.basis_names.len(),
            });
        }
        if self.table.len() != d {
            return Err(Violation::TableShape {
                i: self.table.len(),
                j: 0,
            });
        }
        let reduce = |x: i64| x.rem_euclid(self.p as i64) as u64;
        let mut table = vec![0u64; d * d * d];
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != d {
                return Err(Violation::TableShape { i, j: row.len() });
            }
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != d {
                    return Err(Violation::TableShape { i, j });
                }
                for (k, &c) in entry.iter().enumerate() {
                    table[(i * d + j) * d + k] = reduce(c);
                }
            }
        }
        let unit = match &self.unit {
            None => None,
            Some(u) => {
                if u.len() != d {
                    return Err(Violation::UnitLength {
                        expected: d,
                        got: u.len(),
                    });
                }
                Some(u.iter().map(|&c| reduce(c)).collect::<Vec<u64>>())
            }
        };
        let alg = Algebra {
            p: self.p,
            dim: d,
            table,
            basis_names: self.basis_names.clone(),
            unit,
            matrix_units: None,
        };
        // Associativity on every basis triple: (e_i e_j) e_k = e_i (e_j e_k).
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = alg.mul_coords(alg.table_coords(i, j), &alg.basis_coords(k));
                    let rhs = alg.mul_coords(&alg.basis_coords(i), alg.table_coords(j, k));
                    if lhs != rhs {
                        return Err(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        if let Some(u) = alg.unit.clone() {
            for i in 0..d {
                let e = alg.basis_coords(i);
                if alg.mul_coords(&u, &e) != e {
                    return Err(Violation::UnitAxiom { i, side: "left" });
                }
                if alg.mul_coords(&e, &u) != e {
                    return Err(Violation::UnitAxiom { i, side: "right" });
                }
            }
        }
        let mut alg = alg;
        alg.matrix_units = alg.detect_matrix_units();
        Ok(alg)
    }
}

/// A validated finite-dimensional associative algebra over GF(p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    p: u64,
    dim: usize,
    /// Flat d³ table, indexed (i*d + j)*d + k.
    table: Vec<u64>,
    basis_names: Vec<String>,
    unit: Option<Vec<u64>>,
    /// `Some(n)` when the table is exactly the matrix-unit table of M_n in
    /// row-major basis order; detected structurally at build time.
    matrix_units: Option<usize>,
}

impl Algebra {
    /// The full matrix algebra M_n(F_p) on the matrix-unit basis E_rc,
    /// ordered row-major (E11, E12, ..., Enn).
    pub fn matrix(n: usize, p: u64) -> Result<Algebra, Error> {
        assert!(n >= 1);
        let d = n * n;
        if d > MAX_DIM {
            return Err(Error::Validation(Violation::DimOutOfRange(d).to_string()));
        }
        let mut table = vec![vec![vec![0i64; d]; d]; d];
        for r in 0..n {
            for c in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if c == k {
                            // E_rc · E_kl = E_rl
                            table[r * n + c][k * n + l][r * n + l] = 1;
                        }
                    }
                }
            }
        }
        let mut unit = vec![0i64; d];
        for r in 0..n {
            unit[r * n + r] = 1;
        }
        let names = (0..n)
            .flat_map(|r| (0..n).map(move |c| format!("E{}{}", r + 1, c + 1)))
            .collect();
        RawAlgebra {
            p,
            dim: d,
            basis_names: names,
            table,
            unit: Some(unit),
        }
        .build()
    }

    /// The upper-triangular subalgebra of M_n(F_p), basis E_rc for r ≤ c.
    pub fn upper_triangular(n: usize, p: u64) -> Result<Algebra, Error> {
        assert!(n >= 1);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect();
        let d = pairs.len();
        if d > MAX_DIM {
            return Err(Error::Validation(Violation::DimOutOfRange(d).to_string()));
        }
        let index = |r: usize, c: usize| pairs.iter().position(|&(a, b)| (a, b) == (r, c)).unwrap();
        let mut table = vec![vec![vec![0i64; d]; d]; d];
        for (i, &(r, c)) in pairs.iter().enumerate() {
            for (j, &(k, l)) in pairs.iter().enumerate() {
                if c == k {
                    table[i][j][index(r, l)] = 1;
                }
            }
        }
        let mut unit = vec![0i64; d];
        for r in 0..n {
            unit[index(r, r)] = 1;
        }
        let names = pairs
            .iter()
            .map(|&(r, c)| format!("E{}{}", r + 1, c + 1))
            .collect();
        RawAlgebra {
            p,
            dim: d,
            basis_names: names,
            table,
            unit: Some(unit),
        }
        .build()
    }

    /// Parses and validates the JSON description; see [`RawAlgebra`].
    pub fn from_json(text: &str) -> Result<Algebra, Error> {
        let raw: RawAlgebra = serde_json::from_str(text)?;
        raw.build()
    }

    pub fn to_raw(&self) -> RawAlgebra {
        let d = self.dim;
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.table_coords(i, j).iter().map(|&x| x as i64).collect())
                    .collect()
            })
            .collect();
        RawAlgebra {
            p: self.p,
            dim: d,
            basis_names: self.basis_names.clone(),
            table,
            unit: self
                .unit
                .as_ref()
                .map(|u| u.iter().map(|&x| x as i64).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("algebra serializes")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn unit(&self) -> Option<Element> {
        self.unit.clone().map(|coords| Element { coords })
    }

    /// `Some(n)` when this algebra is M_n(F_p) on the standard matrix-unit
    /// basis order; enables the column-space fast path in classification.
    pub fn matrix_unit_rank(&self) -> Option<usize> {
        self.matrix_units
    }

    fn detect_matrix_units(&self) -> Option<usize> {
        let n = (1..=4).find(|&n| n * n == self.dim)?;
        for r in 0..n {
            for c in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let got = self.table_coords(r * n + c, k * n + l);
                        for (idx, &coeff) in got.iter().enumerate() {
                            let want = if c == k && idx == r * n + l { 1 } else { 0 };
                            if coeff != want {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(n)
    }

    fn basis_coords(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    pub fn table_coords(&self, i: usize, j: usize) -> &[u64] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j) * d + d]
    }

    /// Coordinate-level product, used by validation and [`Algebra::mul`].
    fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.dim;
        let p = self.p;
        let mut out = vec![0u64; d];
        for i in 0..d {
            if a[i] == 0 {
                continue;
            }
            for j in 0..d {
                if b[j] == 0 {
                    continue;
                }
                let coeff = (a[i] * b[j]) % p;
                if coeff == 0 {
                    continue;
                }
                let t = self.table_coords(i, j);
                for k in 0..d {
                    if t[k] != 0 {
                        out[k] = (out[k] + coeff * t[k]) % p;
                    }
                }
            }
        }
        out
    }

    /// Builds an element from coordinates, reducing mod p.
    pub fn element(&self, coords: &[u64]) -> Element {
        assert_eq!(coords.len(), self.dim, "dimension mismatch");
        Element {
            coords: coords.iter().map(|&c| c % self.p).collect(),
        }
    }

    pub fn zero_element(&self) -> Element {
        Element {
            coords: vec![0; self.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim);
        let mut coords = vec![0; self.dim];
        coords[i] = 1;
        Element { coords }
    }

    /// The element with index `k`: coordinates are the base-p digits of `k`,
    /// first coordinate least significant. Indexing is the deterministic
    /// order used by every exhaustive sweep, so "first witness found" is
    /// stable.
    pub fn element_at_index(&self, k: u64) -> Element {
        let mut coords = vec![0u64; self.dim];
        let mut t = k;
        for c in coords.iter_mut() {
            *c = t % self.p;
            t /= self.p;
        }
        Element { coords }
    }

    /// Ring product via the structure-constant table.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.coords.len(), self.dim, "dimension mismatch");
        assert_eq!(b.coords.len(), self.dim, "dimension mismatch");
        Element {
            coords: self.mul_coords(&a.coords, &b.coords),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| (x + self.p - y) % self.p)
                .collect(),
        }
    }

    /// The full coordinate space, as a subspace (the algebra Q itself).
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim, self.p)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim, self.p)
    }

    /// The span of a list of elements.
    pub fn span(&self, elements: &[Element]) -> Subspace {
        if elements.is_empty() {
            return self.zero_space();
        }
        let rows: Vec<Vec<u64>> = elements.iter().map(|e| e.coords.clone()).collect();
        Subspace::from_generators(&Mat::from_rows(self.p, &rows))
    }

    /// span{ x·y : x ∈ basis(A), y ∈ basis(B) } — the subspace generated by
    /// the set product A·B.
    pub fn set_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient_dim(), self.dim, "dimension mismatch");
        assert_eq!(b.ambient_dim(), self.dim, "dimension mismatch");
        if a.is_zero() || b.is_zero() {
            return self.zero_space();
        }
        let mut rows = Vec::with_capacity(a.dim() * b.dim());
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                rows.push(self.mul_coords(a.basis().row(i), b.basis().row(j)));
            }
        }
        Subspace::from_generators(&Mat::from_rows(self.p, &rows))
    }

    /// Whether `s` absorbs multiplication from the given side(s).
    pub fn is_ideal(&self, s: &Subspace, side: IdealSide) -> bool {
        let q = self.full_space();
        let right_ok = || s.contains(&self.set_product(s, &q));
        let left_ok = || s.contains(&self.set_product(&q, s));
        match side {
            IdealSide::Right => right_ok(),
            IdealSide::Left => left_ok(),
            IdealSide::TwoSided => right_ok() && left_ok(),
        }
    }

    /// Smallest subspace containing `gen` that is an ideal of the requested
    /// side: saturate by adding X·Q and/or Q·X until stable.
    pub fn ideal_closure(&self, gen: &Subspace, side: IdealSide) -> Subspace {
        let q = self.full_space();
        let mut x = Subspace::from_generators(gen.basis());
        loop {
            let mut next = x.clone();
            if matches!(side, IdealSide::Right | IdealSide::TwoSided) {
                next = next.sum(&self.set_product(&x, &q));
            }
            if matches!(side, IdealSide::Left | IdealSide::TwoSided) {
                next = next.sum(&self.set_product(&q, &x));
            }
            if next == x {
                return x;
            }
            x = next;
        }
    }

    /// Number of elements p^dim, or a budget refusal.
    fn element_count(&self, budget: u64) -> Result<u64, Error> {
        let mut needed: u128 = 1;
        for _ in 0..self.dim {
            needed = needed.saturating_mul(self.p as u128);
        }
        if needed > budget as u128 {
            return Err(Error::ElementBudget { needed, budget });
        }
        Ok(needed as u64)
    }

    /// A nonzero `a` with a·Q·a = 0, if one exists (disproving semiprimeness).
    pub fn semiprime_witness(&self, budget: u64) -> Result<Option<Element>, Error> {
        let count = self.element_count(budget)?;
        'outer: for k in 1..count {
            let a = self.element_at_index(k);
            for i in 0..self.dim {
                let e = self.basis_element(i);
                if !self.mul(&self.mul(&a, &e), &a).is_zero() {
                    continue 'outer;
                }
            }
            return Ok(Some(a));
        }
        Ok(None)
    }

    /// `aQa = 0 ⟹ a = 0`.
    pub fn is_semiprime(&self, budget: u64) -> Result<bool, Error> {
        Ok(self.semiprime_witness(budget)?.is_none())
    }

    /// A nonzero `a` whose principal two-sided ideal has nonzero left
    /// annihilator, if one exists (disproving primeness). Sweeps vectors
    /// whose first nonzero coordinate is 1; scaling changes neither the
    /// generated ideal nor the annihilator.
    pub fn prime_witness(&self, budget: u64) -> Result<Option<Element>, Error> {
        let count = self.element_count(budget)?;
        for k in 1..count {
            let a = self.element_at_index(k);
            if a.coords.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let ideal =
                self.ideal_closure(&self.span(std::slice::from_ref(&a)), IdealSide::TwoSided);
            if !annlattice::lann(self, &ideal).is_zero() {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    /// `lann(I) = 0` for every nonzero ideal I; it suffices to check the
    /// principal ideals, since every nonzero ideal contains one and lann is
    /// antitone.
    pub fn is_prime(&self, budget: u64) -> Result<bool, Error> {
        Ok(self.prime_witness(budget)?.is_none())
    }

    /// The intersection of all nonzero ideals (equivalently, of all nonzero
    /// principal ideals). Equals Q for simple algebras; may be 0.
    pub fn core(&self, budget: u64) -> Result<Subspace, Error> {
        let count = self.element_count(budget)?;
        let mut core = self.full_space();
        for k in 1..count {
            let a = self.element_at_index(k);
            if a.coords.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let ideal = self.ideal_closure(&self.span(&[a]), IdealSide::TwoSided);
            core = core.intersect(&ideal);
            if core.is_zero() {
                break;
            }
        }
        Ok(core)
    }

    /// Q² ≠ 0 and every nonzero element generates Q as a two-sided ideal.
    pub fn is_simple(&self, budget: u64) -> Result<bool, Error> {
        let count = self.element_count(budget)?;
        let q = self.full_space();
        if self.set_product(&q, &q).is_zero() {
            return Ok(false);
        }
        for k in 1..count {
            let a = self.element_at_index(k);
            if a.coords.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            if !self
                .ideal_closure(&self.span(&[a]), IdealSide::TwoSided)
                .is_full()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All idempotents e² = e, in element-index order (includes 0 and, when
    /// present, the unit).
    pub fn idempotents(&self, budget: u64) -> Result<Vec<Element>, Error> {
        let count = self.element_count(budget)?;
        let mut out = Vec::new();
        for k in 0..count {
            let e = self.element_at_index(k);
            if self.mul(&e, &e) == e {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// The first nonzero element with a² = 0, if any. Squaring suffices for
    /// the classification gate: members of zero-product sets square to zero.
    pub fn nilpotent_witness(&self, budget: u64) -> Result<Option<Element>, Error> {
        let count = self.element_count(budget)?;
        for k in 1..count {
            let a = self.element_at_index(k);
            if self.mul(&a, &a).is_zero() {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    pub fn has_nonzero_nilpotent(&self, budget: u64) -> Result<bool, Error> {
        Ok(self.nilpotent_witness(budget)?.is_some())
    }

    /// Renders an element as a sum of named basis terms, e.g. "E12 + 2*E22".
    pub fn format_element(&self, e: &Element) -> String {
        let terms: Vec<String> = e
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.basis_names[i].clone()
                } else {
                    format!("{c}*{}", self.basis_names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}
