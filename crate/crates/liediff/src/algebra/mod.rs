//! Finite-dimensional (graded) algebras presented by structure constants.
//!
//! A [`StructureTable`] holds the constants c^k_{ij} of products of basis
//! elements, together with a ℤ₂ parity per basis element (all even for the
//! ungraded case — ungraded algebras are the degrees-all-zero special case of
//! the graded path, so there is one code path for signs). Validation reports
//! every violated antisymmetry, parity-compatibility or Jacobi constraint
//! exactly; the table itself never silently fixes an inconsistent input.

mod builtins;
mod format;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::linalg::{Matrix, Rational, Subspace};
use crate::{Error, Result};

pub use builtins::{abelian, builtin, car, car_with_form, ccr, ccr_with_form, gl, o, sl};
pub use format::{parse_table, render_table};

/// ℤ₂ parity of a basis element or homogeneous object.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Result<Parity> {
        match b {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::InvalidTable(format!("parity must be 0 or 1, got {b}"))),
        }
    }

    /// Koszul sign (−1)^{[a][b]}.
    pub fn sign_with(self, other: Parity) -> Rational {
        if self == Parity::Odd && other == Parity::Odd {
            Rational::from_int(-1)
        } else {
            Rational::one()
        }
    }
}

/// An element of the algebra, stored by coordinates over the table basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AlgebraElement {
    pub coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn basis_vector(dim: usize, i: usize) -> Self {
        let mut e = AlgebraElement::zero(dim);
        e.coords[i] = Rational::one();
        e
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        AlgebraElement { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> AlgebraElement {
        AlgebraElement {
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }
}

/// Kind of axiom a table can violate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Antisymmetry,
    ParityCompatibility,
    Jacobi,
}

/// One violated constraint: which axiom, at which (1-based) index triple,
/// with the exact residual vector.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Antisymmetry => "antisymmetry",
            ViolationKind::ParityCompatibility => "parity",
            ViolationKind::Jacobi => "jacobi",
        };
        let res: Vec<String> = self.residual.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "{kind} violated at ({}, {}, {}); residual [{}]",
            self.indices.0,
            self.indices.1,
            self.indices.2,
            res.join(", ")
        )
    }
}

/// Result of [`StructureTable::validate`]; empty iff the table is a (graded)
/// Lie algebra.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A (graded) algebra of dimension N given by structure constants.
///
/// Constants are stored for every ordered pair (i, j) with a nonzero product
/// vector. Constructors that take one-sided input (`i < j`, or `i ≤ j` with
/// an odd diagonal in the graded case) fill the opposite orientation by the
/// graded sign rule; a file may also specify both orientations explicitly,
/// in which case `validate` cross-checks them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StructureTable {
    dim: usize,
    degrees: Vec<Parity>,
    names: Option<Vec<String>>,
    /// (i, j) → coordinates of aᵢ·aⱼ; zero vectors are never stored.
    constants: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl StructureTable {
    /// Builds a table from explicit entries `(i, j, k, c)` (0-based) meaning
    /// c^k_{ij} = c. Missing opposite orientations are filled in by the sign
    /// rule c^k_{ji} = −(−1)^{[aᵢ][aⱼ]} c^k_{ij}; orientations given in the
    /// input are kept exactly as given.
    pub fn from_entries(
        dim: usize,
        degrees: Vec<Parity>,
        names: Option<Vec<String>>,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        if degrees.len() != dim {
            return Err(Error::InvalidTable(format!(
                "expected {dim} degrees, got {}",
                degrees.len()
            )));
        }
        if let Some(n) = &names {
            if n.len() != dim {
                return Err(Error::InvalidTable(format!(
                    "expected {dim} basis names, got {}",
                    n.len()
                )));
            }
        }
        let mut given: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidTable(format!(
                    "constant index ({}, {}, {}) out of range for dim {dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::InvalidTable(format!(
                    "duplicate constant for ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            given
                .entry((*i, *j))
                .or_insert_with(|| vec![Rational::zero(); dim])[*k] = c.clone();
        }
        let mut constants = given.clone();
        for ((i, j), v) in &given {
            if i == j || given.contains_key(&(*j, *i)) {
                continue;
            }
            let sign = -degrees[*i].sign_with(degrees[*j]);
            constants.insert((*j, *i), v.iter().map(|c| &sign * c).collect());
        }
        constants.retain(|_, v| !v.iter().all(Rational::is_zero));
        Ok(StructureTable {
            dim,
            degrees,
            names,
            constants,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> &[Parity] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> Parity {
        self.degrees[i]
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.iter().any(|&d| d == Parity::Odd)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name_of(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None => format!("a{}", i + 1),
        }
    }

    /// Iterates over stored nonzero product vectors.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Vec<Rational>)> {
        self.constants.iter().map(|((i, j), v)| (*i, *j, v))
    }

    /// Coordinates of the basis product aᵢ·aⱼ.
    pub fn product(&self, i: usize, j: usize) -> Vec<Rational> {
        self.constants
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.dim])
    }

    /// Single constant c^k_{ij}.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constants
            .get(&(i, j))
            .map_or_else(Rational::zero, |v| v[k].clone())
    }

    /// Bilinear extension of the table: (x·y)_k = Σᵢⱼ xᵢ yⱼ c^k_{ij}.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "algebra product",
                expected: self.dim,
                found: x.dim().max(y.dim()),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for ((i, j), v) in &self.constants {
            if x.coords[*i].is_zero() || y.coords[*j].is_zero() {
                continue;
            }
            let factor = &x.coords[*i] * &y.coords[*j];
            for (o, c) in out.iter_mut().zip(v) {
                if !c.is_zero() {
                    let delta = &factor * c;
                    *o += &delta;
                }
            }
        }
        Ok(AlgebraElement::from_coords(out))
    }

    /// Product of a basis element with an arbitrary coordinate vector.
    pub fn multiply_basis_left(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for j in 0..self.dim {
            if y[j].is_zero() {
                continue;
            }
            if let Some(v) = self.constants.get(&(i, j)) {
                for (o, c) in out.iter_mut().zip(v) {
                    if !c.is_zero() {
                        let delta = &y[j] * c;
                        *o += &delta;
                    }
                }
            }
        }
        out
    }

    /// Product of an arbitrary coordinate vector with a basis element.
    pub fn multiply_basis_right(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            if let Some(v) = self.constants.get(&(i, j)) {
                for (o, c) in out.iter_mut().zip(v) {
                    if !c.is_zero() {
                        let delta = &x[i] * c;
                        *o += &delta;
                    }
                }
            }
        }
        out
    }

    /// Matrix of the left multiplication c ↦ a·c. The map a ↦ ad(a) is
    /// linear and its kernel is the center.
    pub fn ad(&self, a: &AlgebraElement) -> Result<Matrix> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "ad operator",
                expected: self.dim,
                found: a.dim(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for ((i, j), v) in &self.constants {
            if a.coords[*i].is_zero() {
                continue;
            }
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let delta = &a.coords[*i] * c;
                    m[(k, *j)] += &delta;
                }
            }
        }
        Ok(m)
    }

    /// ad matrix of the i-th basis element.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&AlgebraElement::basis_vector(self.dim, i))
            .expect("basis element has the right dimension")
    }

    /// The center {a : a·b = 0 for all b}, as the nullspace of the stacked
    /// ad-constraint rows.
    pub fn center(&self) -> Subspace {
        // rows indexed by (j, k): Σᵢ c^k_{ij} xᵢ = 0
        let m = Matrix::from_fn(self.dim * self.dim, self.dim, |row, i| {
            let (j, k) = (row / self.dim, row % self.dim);
            self.constant(i, j, k)
        });
        m.nullspace()
    }

    /// Checks every antisymmetry, parity-compatibility and Jacobi constraint
    /// exactly and reports each violation with the offending index triple
    /// (1-based) and the residual vector. Empty report iff the table is a
    /// (graded) Lie algebra.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        // graded antisymmetry: c_{ij} + (−1)^{[i][j]} c_{ji} = 0, pairs i ≤ j
        for i in 0..self.dim {
            for j in i..self.dim {
                let sign = self.degrees[i].sign_with(self.degrees[j]);
                let cij = self.product(i, j);
                let cji = self.product(j, i);
                let residual: Vec<Rational> = cij
                    .iter()
                    .zip(&cji)
                    .map(|(a, b)| a + &(&sign * b))
                    .collect();
                if let Some(k) = residual.iter().position(|r| !r.is_zero()) {
                    report.violations.push(Violation {
                        kind: ViolationKind::Antisymmetry,
                        indices: (i + 1, j + 1, k + 1),
                        residual,
                    });
                }
            }
        }
        // parity compatibility: c^k_{ij} = 0 unless [a_k] = [aᵢ] + [aⱼ]
        for ((i, j), v) in &self.constants {
            let expected = self.degrees[*i].combine(self.degrees[*j]);
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() && self.degrees[k] != expected {
                    let mut residual = vec![Rational::zero(); self.dim];
                    residual[k] = c.clone();
                    report.violations.push(Violation {
                        kind: ViolationKind::ParityCompatibility,
                        indices: (*i + 1, *j + 1, k + 1),
                        residual,
                    });
                }
            }
        }
        // graded Jacobi over ordered triples i ≤ j ≤ k; remaining orders are
        // sign-equivalent once antisymmetry holds and are reported there
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in j..self.dim {
                    let residual = self.jacobi_residual(i, j, k);
                    if !residual.iter().all(Rational::is_zero) {
                        report.violations.push(Violation {
                            kind: ViolationKind::Jacobi,
                            indices: (i + 1, j + 1, k + 1),
                            residual,
                        });
                    }
                }
            }
        }
        report
    }

    /// Exact residual of the graded Jacobi identity on the basis triple
    /// (i, j, k): (−1)^{[i][k]} aᵢ·(aⱼ·a_k) + cyclic.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let d = &self.degrees;
        let mut out = vec![Rational::zero(); self.dim];
        let terms = [
            (i, j, k, d[i].sign_with(d[k])),
            (j, k, i, d[j].sign_with(d[i])),
            (k, i, j, d[k].sign_with(d[j])),
        ];
        for (a, b, c, sign) in terms {
            let inner = self.product(b, c);
            let outer = self.multiply_basis_left(a, &inner);
            for (o, x) in out.iter_mut().zip(&outer) {
                if !x.is_zero() {
                    let delta = &sign * x;
                    *o += &delta;
                }
            }
        }
        out
    }

    /// Emits the table in the line-oriented text format.
    pub fn render(&self) -> String {
        format::render_table(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetry_violation_is_reported_at_the_triple() {
        // c^3_{12} = 1 and c^3_{21} = 1 violates antisymmetry at (1,2,3)
        let t = StructureTable::from_entries(
            3,
            vec![Parity::Even; 3],
            None,
            &[
                (0, 1, 2, Rational::one()),
                (1, 0, 2, Rational::one()),
            ],
        )
        .unwrap();
        let report = t.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Antisymmetry && v.indices == (1, 2, 3)));
    }

    #[test]
    fn sign_rule_fills_the_missing_orientation() {
        let t = StructureTable::from_entries(
            3,
            vec![Parity::Even; 3],
            None,
            &[(0, 1, 2, Rational::one())],
        )
        .unwrap();
        assert_eq!(t.constant(1, 0, 2), Rational::from_int(-1));
        assert!(t.validate().is_empty());
    }

    #[test]
    fn graded_sign_rule_is_symmetric_for_odd_pairs() {
        let t = StructureTable::from_entries(
            3,
            vec![Parity::Odd, Parity::Odd, Parity::Even],
            None,
            &[(0, 1, 2, Rational::one())],
        )
        .unwrap();
        assert_eq!(t.constant(1, 0, 2), Rational::one());
        assert!(t.validate().is_empty());
    }

    #[test]
    fn parity_compatibility_checked() {
        // odd·odd landing on an odd coordinate is flagged
        let t = StructureTable::from_entries(
            2,
            vec![Parity::Odd, Parity::Odd],
            None,
            &[(0, 1, 0, Rational::one())],
        )
        .unwrap();
        let report = t.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::ParityCompatibility));
    }

    #[test]
    fn jacobi_violation_detected() {
        // antisymmetric but non-Jacobi: [a1,a2]=a3, [a1,a3]=a2, [a2,a3]=a1
        let t = StructureTable::from_entries(
            3,
            vec![Parity::Even; 3],
            None,
            &[
                (0, 1, 2, Rational::one()),
                (0, 2, 1, Rational::one()),
                (1, 2, 0, Rational::one()),
            ],
        )
        .unwrap();
        let report = t.validate();
        assert!(report
            .violations
            .iter()
            .all(|v| v.kind == ViolationKind::Jacobi));
        assert!(!report.is_empty());
    }

    #[test]
    fn duplicate_entry_rejected() {
        let err = StructureTable::from_entries(
            2,
            vec![Parity::Even; 2],
            None,
            &[
                (0, 1, 0, Rational::one()),
                (0, 1, 0, Rational::from_int(2)),
            ],
        );
        assert!(err.is_err());
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let err = StructureTable::from_entries(
            2,
            vec![Parity::Even; 2],
            None,
            &[(0, 1, 5, Rational::one())],
        );
        assert!(err.is_err());
    }
}
