//! Builtin algebra constructors.
//!
//! Basis conventions (they matter only for printed bases; every check made
//! elsewhere in the crate is basis-independent):
//!
//! * `sl(k)`: diagonal H₁..H₍k₋₁₎ with Hᵢ = Eᵢᵢ − Eᵢ₊₁,ᵢ₊₁, followed by the
//!   off-diagonal elementary matrices in row-major order. For k = 2 this is
//!   the classical (h, e, f) with h·e = 2e, h·f = −2f, e·f = h.
//! * `gl(k)`: elementary matrices Eₐᵦ in row-major order.
//! * `o(k)`: Lₐᵦ = Eₐᵦ − Eᵦₐ for a < b, in row-major order.
//! * `ccr(m)` / `car(m)`: basis (eπ¹..eπᵐ, eφ¹..eφᵐ, 𝟙) with the bracket
//!   valued in the central 𝟙 through a symmetric bilinear form (the standard
//!   scalar product by default, any nondegenerate symmetric matrix via the
//!   `*_with_form` constructors). `ccr` is ungraded; `car` has odd eπ, eφ.

use super::{Parity, StructureTable};
use crate::linalg::{Matrix, Rational};
use crate::{Error, Result};

/// Resolves a builtin name as used by the CLI: one of `sl2`, `sl3`, `gl2`,
/// `o3`, `abelian:N`, `ccr:M`, `car:M`.
pub fn builtin(name: &str) -> Result<StructureTable> {
    let parse_size = |s: &str, what: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::UnknownBuiltin(format!("{name} (bad {what} `{s}`)")))
    };
    match name {
        "sl2" => sl(2),
        "sl3" => sl(3),
        "gl2" => gl(2),
        "o3" => o(3),
        _ => {
            if let Some(n) = name.strip_prefix("abelian:") {
                abelian(parse_size(n, "size")?)
            } else if let Some(m) = name.strip_prefix("ccr:") {
                ccr(parse_size(m, "size")?)
            } else if let Some(m) = name.strip_prefix("car:") {
                car(parse_size(m, "size")?)
            } else {
                Err(Error::UnknownBuiltin(name.to_string()))
            }
        }
    }
}

/// Structure constants of a matrix Lie algebra from explicit basis matrices,
/// by expanding each commutator in the basis with an exact solve.
fn from_matrix_basis(
    k: usize,
    basis: Vec<Matrix>,
    names: Vec<String>,
) -> Result<StructureTable> {
    let dim = basis.len();
    let flat = Matrix::from_fn(k * k, dim, |r, c| basis[c].flatten()[r].clone());
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let comm = basis[i].commutator(&basis[j])?;
            let coords = flat
                .solve(&comm.flatten())?
                .ok_or(Error::Internal("commutator outside the spanned algebra"))?;
            for (t, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, t, c));
                }
            }
        }
    }
    StructureTable::from_entries(dim, vec![Parity::Even; dim], Some(names), &entries)
}

fn elementary(k: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(k, k);
    m[(a, b)] = Rational::one();
    m
}

/// Special linear algebra sl(k), k ≥ 2; traceless k×k matrices.
pub fn sl(k: usize) -> Result<StructureTable> {
    if k < 2 {
        return Err(Error::InvalidSize(format!("sl({k}) needs k >= 2")));
    }
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..k - 1 {
        let mut h = Matrix::zeros(k, k);
        h[(i, i)] = Rational::one();
        h[(i + 1, i + 1)] = Rational::from_int(-1);
        basis.push(h);
        names.push(format!("H{}", i + 1));
    }
    for a in 0..k {
        for b in 0..k {
            if a != b {
                basis.push(elementary(k, a, b));
                names.push(format!("E{}{}", a + 1, b + 1));
            }
        }
    }
    if k == 2 {
        names = vec!["h".into(), "e".into(), "f".into()];
    }
    from_matrix_basis(k, basis, names)
}

/// General linear algebra gl(k), k ≥ 2; all k×k matrices.
pub fn gl(k: usize) -> Result<StructureTable> {
    if k < 2 {
        return Err(Error::InvalidSize(format!("gl({k}) needs k >= 2")));
    }
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for a in 0..k {
        for b in 0..k {
            basis.push(elementary(k, a, b));
            names.push(format!("E{}{}", a + 1, b + 1));
        }
    }
    from_matrix_basis(k, basis, names)
}

/// Orthogonal algebra o(k), k ≥ 2; antisymmetric k×k matrices.
pub fn o(k: usize) -> Result<StructureTable> {
    if k < 2 {
        return Err(Error::InvalidSize(format!("o({k}) needs k >= 2")));
    }
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            let mut l = elementary(k, a, b);
            l[(b, a)] = Rational::from_int(-1);
            basis.push(l);
            names.push(format!("L{}{}", a + 1, b + 1));
        }
    }
    from_matrix_basis(k, basis, names)
}

/// Abelian algebra of dimension n ≥ 1: all products vanish.
pub fn abelian(n: usize) -> Result<StructureTable> {
    if n < 1 {
        return Err(Error::InvalidSize("abelian(0) is empty".into()));
    }
    StructureTable::from_entries(n, vec![Parity::Even; n], None, &[])
}

fn check_form(m: usize, gram: &Matrix) -> Result<()> {
    if gram.rows() != m || gram.cols() != m {
        return Err(Error::DimensionMismatch {
            context: "scalar product matrix",
            expected: m,
            found: gram.rows(),
        });
    }
    if gram != &gram.transpose() {
        return Err(Error::InvalidTable("scalar product must be symmetric".into()));
    }
    if gram.rank() != m {
        return Err(Error::InvalidTable(
            "scalar product must be nondegenerate".into(),
        ));
    }
    Ok(())
}

fn ccr_car_names(m: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(2 * m + 1);
    for i in 1..=m {
        names.push(format!("pi{i}"));
    }
    for i in 1..=m {
        names.push(format!("phi{i}"));
    }
    names.push("one".into());
    names
}

/// Canonical commutation relations on ℚᵐ⊕ℚᵐ⊕ℚ with the standard scalar
/// product: eπⁱ·eφʲ = δᵢⱼ𝟙, everything else zero, 𝟙 central. Ungraded.
pub fn ccr(m: usize) -> Result<StructureTable> {
    ccr_with_form(m, &Matrix::identity(m))
}

/// CCR algebra with an arbitrary nondegenerate symmetric scalar product.
pub fn ccr_with_form(m: usize, gram: &Matrix) -> Result<StructureTable> {
    if m < 1 {
        return Err(Error::InvalidSize("ccr(m) needs m >= 1".into()));
    }
    check_form(m, gram)?;
    let dim = 2 * m + 1;
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let g = gram[(i, j)].clone();
            if !g.is_zero() {
                // eπⁱ · eφʲ = G_ij 𝟙; the opposite orientation fills by sign
                entries.push((i, m + j, dim - 1, g));
            }
        }
    }
    StructureTable::from_entries(
        dim,
        vec![Parity::Even; dim],
        Some(ccr_car_names(m)),
        &entries,
    )
}

/// Canonical anticommutation relations: same underlying space, eπ and eφ
/// odd, 𝟙 even, with the symmetric bracket eπⁱ·eφʲ = G_ij 𝟙 = eφʲ·eπⁱ.
pub fn car(m: usize) -> Result<StructureTable> {
    car_with_form(m, &Matrix::identity(m))
}

/// CAR algebra with an arbitrary nondegenerate symmetric scalar product.
pub fn car_with_form(m: usize, gram: &Matrix) -> Result<StructureTable> {
    if m < 1 {
        return Err(Error::InvalidSize("car(m) needs m >= 1".into()));
    }
    check_form(m, gram)?;
    let dim = 2 * m + 1;
    let mut degrees = vec![Parity::Odd; dim];
    degrees[dim - 1] = Parity::Even;
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let g = gram[(i, j)].clone();
            if !g.is_zero() {
                entries.push((i, m + j, dim - 1, g));
            }
        }
    }
    StructureTable::from_entries(dim, degrees, Some(ccr_car_names(m)), &entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;

    fn e(dim: usize, i: usize) -> AlgebraElement {
        AlgebraElement::basis_vector(dim, i)
    }

    #[test]
    fn sl2_table_is_the_classical_one() {
        let t = sl(2).unwrap();
        assert_eq!(t.dim(), 3);
        assert_eq!(t.names().unwrap(), ["h", "e", "f"]);
        // h·e = 2e, h·f = −2f, e·f = h
        let he = t.multiply(&e(3, 0), &e(3, 1)).unwrap();
        assert_eq!(he, e(3, 1).scale(&Rational::from_int(2)));
        let hf = t.multiply(&e(3, 0), &e(3, 2)).unwrap();
        assert_eq!(hf, e(3, 2).scale(&Rational::from_int(-2)));
        let ef = t.multiply(&e(3, 1), &e(3, 2)).unwrap();
        assert_eq!(ef, e(3, 0));
        assert!(t.validate().is_empty());
    }

    #[test]
    fn all_builtins_validate_clean() {
        for t in [
            sl(2).unwrap(),
            sl(3).unwrap(),
            gl(2).unwrap(),
            gl(3).unwrap(),
            o(3).unwrap(),
            o(4).unwrap(),
            abelian(3).unwrap(),
            ccr(1).unwrap(),
            ccr(2).unwrap(),
            car(1).unwrap(),
            car(2).unwrap(),
        ] {
            assert!(t.validate().is_empty(), "builtin failed validation");
        }
    }

    #[test]
    fn ccr1_products() {
        let t = ccr(1).unwrap();
        let one = e(3, 2);
        // eπ·eφ = 𝟙, eφ·eπ = −𝟙, 𝟙 central
        assert_eq!(t.multiply(&e(3, 0), &e(3, 1)).unwrap(), one);
        assert_eq!(
            t.multiply(&e(3, 1), &e(3, 0)).unwrap(),
            one.scale(&Rational::from_int(-1))
        );
        for i in 0..3 {
            assert!(t.multiply(&one, &e(3, i)).unwrap().is_zero());
        }
    }

    #[test]
    fn car1_products_are_symmetric() {
        let t = car(1).unwrap();
        let one = e(3, 2);
        assert_eq!(t.multiply(&e(3, 0), &e(3, 1)).unwrap(), one);
        assert_eq!(t.multiply(&e(3, 1), &e(3, 0)).unwrap(), one);
        assert!(t.multiply(&e(3, 0), &e(3, 0)).unwrap().is_zero());
    }

    #[test]
    fn abelian_products_vanish() {
        let t = abelian(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(t.multiply(&e(3, i), &e(3, j)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn centers_of_builtins() {
        assert_eq!(sl(2).unwrap().center().dim(), 0);
        assert_eq!(o(3).unwrap().center().dim(), 0);
        assert_eq!(gl(2).unwrap().center().dim(), 1);
        assert_eq!(abelian(4).unwrap().center().dim(), 4);
        assert_eq!(ccr(1).unwrap().center().dim(), 1);
        assert_eq!(ccr(2).unwrap().center().dim(), 1);
        assert_eq!(car(1).unwrap().center().dim(), 1);
    }

    #[test]
    fn ad_of_h_in_sl2_is_diagonal() {
        let t = sl(2).unwrap();
        let ad_h = t.ad_basis(0);
        let mut expected = Matrix::zeros(3, 3);
        expected[(1, 1)] = Rational::from_int(2);
        expected[(2, 2)] = Rational::from_int(-2);
        assert_eq!(ad_h, expected);
    }

    #[test]
    fn ad_of_central_element_vanishes() {
        let t = ccr(1).unwrap();
        assert!(t.ad(&e(3, 2)).unwrap().is_zero());
    }

    #[test]
    fn degenerate_form_rejected() {
        let gram = Matrix::zeros(2, 2);
        assert!(ccr_with_form(2, &gram).is_err());
        let asym = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert!(car_with_form(2, &asym).is_err());
    }

    #[test]
    fn unknown_and_invalid_names() {
        assert!(builtin("su2").is_err());
        assert!(builtin("abelian:x").is_err());
        assert!(builtin("ccr:0").is_err());
        assert!(sl(1).is_err());
    }

    #[test]
    fn builtin_names_resolve() {
        for name in ["sl2", "sl3", "gl2", "o3", "abelian:2", "ccr:1", "car:2"] {
            assert!(builtin(name).is_ok(), "builtin {name} failed");
        }
    }
}
