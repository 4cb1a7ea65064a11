//! Linear subspaces of ℚⁿ in canonical reduced echelon form.

use serde::Serialize;

use super::{Matrix, Rational};
use crate::{Error, Result};

/// A subspace of ℚⁿ stored by a canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two equal subspaces always
/// store identical bases, so `PartialEq` is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Rational::zero(); ambient];
                    v[i] = Rational::one();
                    v
                })
                .collect(),
        )
    }

    /// Canonicalizes an arbitrary spanning set. Panics if a vector has the
    /// wrong length, which is a programming error, not bad input.
    pub fn from_spanning(ambient: usize, spanning: Vec<Vec<Rational>>) -> Self {
        for v in &spanning {
            assert_eq!(v.len(), ambient, "spanning vector length mismatch");
        }
        if spanning.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(spanning).expect("checked lengths");
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates_of(v).is_some()
    }

    /// Expresses `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if v.iter().all(Rational::is_zero) {
            return Some(vec![Rational::zero(); self.dim()]);
        }
        if self.basis.is_empty() {
            return None;
        }
        // Rows are in echelon form: peel off pivot coordinates in order.
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            let c = residual[pivot].clone();
            if !c.is_zero() {
                for (res, b) in residual.iter_mut().zip(row) {
                    let delta = &c * b;
                    *res -= &delta;
                }
            }
            coords.push(c);
        }
        if residual.iter().all(Rational::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis.iter().all(|v| other.contains(v)))
    }

    /// Sum `U + V`, canonicalized.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut spanning = self.basis.clone();
        spanning.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(self.ambient, spanning))
    }

    /// Intersection `U ∩ V` via the kernel of the stacked coefficient
    /// constraints: x = Σ αᵢuᵢ = Σ βⱼvⱼ.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let du = self.dim();
        let dv = other.dim();
        // columns: (α..., β...); rows: ambient coordinates of Σαu − Σβv = 0
        let m = Matrix::from_fn(self.ambient, du + dv, |r, c| {
            if c < du {
                self.basis[c][r].clone()
            } else {
                -&other.basis[c - du][r]
            }
        });
        let kernel = m.nullspace();
        let spanning = kernel
            .basis()
            .iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (i, u) in self.basis.iter().enumerate() {
                    if coeffs[i].is_zero() {
                        continue;
                    }
                    for (vk, uk) in v.iter_mut().zip(u) {
                        let delta = &coeffs[i] * uk;
                        *vk += &delta;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_spanning(self.ambient, spanning))
    }
}
