//! The (graded) derivation algebra of a structure table.
//!
//! A derivation of parity p is an N×N operator supported on the parity-p
//! matrix block that satisfies the graded Leibniz rule
//! ∂(a·b) = ∂a·b + (−1)^{p[a]} a·∂b on all basis pairs. The solver assembles
//! those constraints as an exact linear system and takes its nullspace; the
//! full derivation space is the direct sum of the even and odd solutions.
//! For an ungraded table the odd block is empty and the classical Leibniz
//! rule is recovered.

use serde::Serialize;

use crate::algebra::{Parity, StructureTable};
use crate::linalg::{Matrix, Rational, Subspace};
use crate::{Error, Result};

/// Parity of a linear operator on a graded coordinate space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OpParity {
    /// Preserves degrees.
    Even,
    /// Reverses degrees.
    Odd,
    /// Supported on both blocks.
    Mixed,
}

impl OpParity {
    pub fn from_parity(p: Parity) -> Self {
        match p {
            Parity::Even => OpParity::Even,
            Parity::Odd => OpParity::Odd,
        }
    }

    pub fn as_parity(self) -> Option<Parity> {
        match self {
            OpParity::Even => Some(Parity::Even),
            OpParity::Odd => Some(Parity::Odd),
            OpParity::Mixed => None,
        }
    }
}

/// An N×N rational matrix acting on algebra (or module) coordinates,
/// tagged with its parity relative to the owning grading.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinearOperator {
    pub matrix: Matrix,
    pub parity: OpParity,
}

impl LinearOperator {
    pub fn new(matrix: Matrix, degrees: &[Parity]) -> Self {
        let parity = operator_parity(&matrix, degrees);
        LinearOperator { matrix, parity }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.matrix.flatten()
    }
}

/// Determines the parity of a matrix from its support against `degrees`.
pub fn operator_parity(m: &Matrix, degrees: &[Parity]) -> OpParity {
    let mut even = false;
    let mut odd = false;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if m[(r, c)].is_zero() {
                continue;
            }
            if degrees[r] == degrees[c] {
                even = true;
            } else {
                odd = true;
            }
        }
    }
    match (even, odd) {
        (true, true) => OpParity::Mixed,
        (false, true) => OpParity::Odd,
        // the zero operator counts as even
        _ => OpParity::Even,
    }
}

/// What a basis of operators spans.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceLabel {
    DerivationsEven,
    DerivationsOdd,
    DerivationsFull,
    Inner,
    Commutant,
    Diff(usize),
}

/// A canonicalized space of operators on an n-dimensional coordinate space,
/// embedded in ℚ^(n²) by row-major flattening.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OperatorSpace {
    /// Dimension of the space the operators act on.
    pub operand_dim: usize,
    pub label: SpaceLabel,
    pub space: Subspace,
    pub basis: Vec<LinearOperator>,
}

impl OperatorSpace {
    pub fn from_subspace(
        operand_dim: usize,
        label: SpaceLabel,
        space: Subspace,
        degrees: &[Parity],
    ) -> Self {
        let basis = space
            .basis()
            .iter()
            .map(|flat| {
                let m = Matrix::from_flat(operand_dim, operand_dim, flat.clone())
                    .expect("flattened operator has n² entries");
                LinearOperator::new(m, degrees)
            })
            .collect();
        OperatorSpace {
            operand_dim,
            label,
            space,
            basis,
        }
    }

    pub fn from_spanning(
        operand_dim: usize,
        label: SpaceLabel,
        spanning: Vec<Vec<Rational>>,
        degrees: &[Parity],
    ) -> Self {
        let space = Subspace::from_spanning(operand_dim * operand_dim, spanning);
        OperatorSpace::from_subspace(operand_dim, label, space, degrees)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, op: &Matrix) -> bool {
        self.space.contains(&op.flatten())
    }
}

/// Even and odd derivation spaces plus their direct sum.
#[derive(Clone, Debug, Serialize)]
pub struct DerivationAlgebra {
    pub even: OperatorSpace,
    pub odd: OperatorSpace,
    pub full: OperatorSpace,
}

impl DerivationAlgebra {
    pub fn dim(&self) -> usize {
        self.full.dim()
    }
}

/// Matrix positions a parity-p operator may occupy.
fn allowed_positions(degrees: &[Parity], p: Parity) -> Vec<(usize, usize)> {
    let n = degrees.len();
    let mut out = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let target = match p {
                Parity::Even => degrees[c],
                Parity::Odd => degrees[c].flip(),
            };
            if degrees[r] == target {
                out.push((r, c));
            }
        }
    }
    out
}

/// Basis pairs the Leibniz system ranges over: i < j always, plus the odd
/// diagonal for graded tables (even diagonal constraints are vacuous by
/// antisymmetry).
fn leibniz_pairs(t: &StructureTable) -> Vec<(usize, usize)> {
    let n = t.dim();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && t.degree(i) == Parity::Even {
                continue;
            }
            pairs.push((i, j));
        }
    }
    pairs
}

/// Assembles the Leibniz constraint matrix for parity-`p` operators; columns
/// follow `positions`.
fn leibniz_system(t: &StructureTable, p: Parity, positions: &[(usize, usize)]) -> Matrix {
    let n = t.dim();
    let pairs = leibniz_pairs(t);
    let col_of: std::collections::BTreeMap<(usize, usize), usize> = positions
        .iter()
        .enumerate()
        .map(|(c, &pos)| (pos, c))
        .collect();
    let mut m = Matrix::zeros(pairs.len() * n, positions.len());
    for (pi, &(i, j)) in pairs.iter().enumerate() {
        let sign = if p == Parity::Odd && t.degree(i) == Parity::Odd {
            Rational::from_int(-1)
        } else {
            Rational::one()
        };
        for r in 0..n {
            let row = pi * n + r;
            // ∂(aᵢ·aⱼ) term: Σ_k c^k_{ij} D[r][k]
            for k in 0..n {
                let c = t.constant(i, j, k);
                if c.is_zero() {
                    continue;
                }
                if let Some(&col) = col_of.get(&(r, k)) {
                    m[(row, col)] += &c;
                }
            }
            // −(∂aᵢ)·aⱼ term: −Σ_s c^r_{sj} D[s][i]
            for s in 0..n {
                let c = t.constant(s, j, r);
                if c.is_zero() {
                    continue;
                }
                if let Some(&col) = col_of.get(&(s, i)) {
                    let neg = -&c;
                    m[(row, col)] += &neg;
                }
            }
            // −(−1)^{p[aᵢ]} aᵢ·(∂aⱼ) term: −sign·Σ_s c^r_{is} D[s][j]
            for s in 0..n {
                let c = t.constant(i, s, r);
                if c.is_zero() {
                    continue;
                }
                if let Some(&col) = col_of.get(&(s, j)) {
                    let delta = -&(&sign * &c);
                    m[(row, col)] += &delta;
                }
            }
        }
    }
    m
}

fn expand_positions(n: usize, positions: &[(usize, usize)], packed: &[Rational]) -> Vec<Rational> {
    let mut flat = vec![Rational::zero(); n * n];
    for (&(r, c), v) in positions.iter().zip(packed) {
        flat[r * n + c] = v.clone();
    }
    flat
}

fn derivation_space_of_parity(t: &StructureTable, p: Parity, label: SpaceLabel) -> OperatorSpace {
    let n = t.dim();
    let positions = allowed_positions(t.degrees(), p);
    if positions.is_empty() {
        return OperatorSpace::from_subspace(n, label, Subspace::zero(n * n), t.degrees());
    }
    let system = leibniz_system(t, p, &positions);
    let kernel = system.nullspace();
    let spanning = kernel
        .basis()
        .iter()
        .map(|packed| expand_positions(n, &positions, packed))
        .collect();
    OperatorSpace::from_spanning(n, label, spanning, t.degrees())
}

/// Solves the Leibniz constraints per parity and returns even, odd and full
/// derivation spaces. The two parity blocks are independent, so they may be
/// solved in parallel; `derivation_algebra` keeps it sequential because the
/// blocks are tiny at desk scale.
pub fn derivation_algebra(t: &StructureTable) -> DerivationAlgebra {
    let even = derivation_space_of_parity(t, Parity::Even, SpaceLabel::DerivationsEven);
    let odd = derivation_space_of_parity(t, Parity::Odd, SpaceLabel::DerivationsOdd);
    let full_space = even
        .space
        .sum(&odd.space)
        .expect("even and odd blocks share the ambient space");
    let full = OperatorSpace::from_subspace(
        t.dim(),
        SpaceLabel::DerivationsFull,
        full_space,
        t.degrees(),
    );
    DerivationAlgebra { even, odd, full }
}

/// Exact residuals of the graded Leibniz rule for `op` at parity `p`, one
/// vector per constraint pair; all zero iff `op` is a parity-`p` derivation.
pub fn leibniz_residuals(
    t: &StructureTable,
    op: &Matrix,
    p: Parity,
) -> Vec<((usize, usize), Vec<Rational>)> {
    let n = t.dim();
    let mut out = Vec::new();
    for (i, j) in leibniz_pairs(t) {
        let sign = if p == Parity::Odd && t.degree(i) == Parity::Odd {
            Rational::from_int(-1)
        } else {
            Rational::one()
        };
        let lhs = op
            .mul_vec(&t.product(i, j))
            .expect("operator dimension matches table");
        let d_i: Vec<Rational> = (0..n).map(|r| op[(r, i)].clone()).collect();
        let d_j: Vec<Rational> = (0..n).map(|r| op[(r, j)].clone()).collect();
        let term1 = t.multiply_basis_right(&d_i, j);
        let term2 = t.multiply_basis_left(i, &d_j);
        let residual: Vec<Rational> = (0..n)
            .map(|r| &(&lhs[r] - &term1[r]) - &(&sign * &term2[r]))
            .collect();
        if !residual.iter().all(Rational::is_zero) {
            out.push(((i, j), residual));
        }
    }
    out
}

/// Span of the inner derivations {ad(aᵢ)}; its dimension is
/// N − dim center by rank–nullity of the ad map.
pub fn inner_derivations(t: &StructureTable) -> OperatorSpace {
    let spanning = (0..t.dim()).map(|i| t.ad_basis(i).flatten()).collect();
    OperatorSpace::from_spanning(t.dim(), SpaceLabel::Inner, spanning, t.degrees())
}

/// Dimension summary of the derivation algebra.
#[derive(Clone, Debug, Serialize)]
pub struct OuterReport {
    pub dim_full: usize,
    pub dim_even: usize,
    pub dim_odd: usize,
    pub dim_inner: usize,
    pub dim_outer: usize,
    /// Canonical basis of the full space, flattened row-major.
    pub basis: Vec<Vec<Rational>>,
}

/// Computes {dim_full, dim_inner, dim_outer}; dim_full ≤ N² always holds.
pub fn outer_report(t: &StructureTable) -> OuterReport {
    let ders = derivation_algebra(t);
    let inner = inner_derivations(t);
    let dim_full = ders.full.dim();
    assert!(dim_full <= t.dim() * t.dim());
    OuterReport {
        dim_full,
        dim_even: ders.even.dim(),
        dim_odd: ders.odd.dim(),
        dim_inner: inner.dim(),
        dim_outer: dim_full - inner.dim(),
        basis: ders.full.space.basis().to_vec(),
    }
}

/// Graded bracket d₁∘d₂ − (−1)^{p₁p₂} d₂∘d₁ with resulting parity p₁+p₂.
/// Errors on mixed-parity input: the graded bracket needs homogeneous
/// operands.
pub fn bracket(d1: &LinearOperator, d2: &LinearOperator) -> Result<LinearOperator> {
    let (Some(p1), Some(p2)) = (d1.parity.as_parity(), d2.parity.as_parity()) else {
        return Err(Error::MixedParity("graded bracket needs homogeneous operators"));
    };
    let ab = d1.matrix.mul(&d2.matrix)?;
    let ba = d2.matrix.mul(&d1.matrix)?;
    let matrix = if p1 == Parity::Odd && p2 == Parity::Odd {
        ab.add(&ba)?
    } else {
        ab.sub(&ba)?
    };
    Ok(LinearOperator {
        matrix,
        parity: OpParity::from_parity(p1.combine(p2)),
    })
}

/// The two closed-form derivation families of the CCR/CAR algebras.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivationFamily {
    /// Block family (M, O₁, O₂, C₁, C₂) with M₂ = −G⁻¹MᵀG and O₁, O₂
    /// G-self-adjoint, for the commutation-relation algebra.
    CcrGeneric,
    /// Same block shape with O₁, O₂ G-skew-adjoint (and the C generators
    /// odd), for the anticommutation-relation algebra.
    CarGeneric,
}

/// Outcome of checking a closed-form family against the solver space.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: &'static str,
    /// Rank of the span of the family generators.
    pub family_dim: usize,
    /// Dimension of the solver's full derivation space (ground truth).
    pub solver_dim: usize,
    /// Every generator satisfies the exact Leibniz check at its parity.
    pub all_generators_leibniz: bool,
    /// Every generator lies in the solver space.
    pub contained: bool,
    /// Whether the family exhausts the solver space. Not asserted anywhere:
    /// the solver dimension is the ground truth and a strictly larger solver
    /// space (the center-scaling direction) is expected.
    pub dims_equal: bool,
}

fn read_ccr_car_shape(t: &StructureTable, family: DerivationFamily) -> Result<(usize, Matrix)> {
    let n = t.dim();
    if n < 3 || n % 2 == 0 {
        return Err(Error::Unsupported(
            "family containment needs a ccr(m)/car(m)-shaped table".into(),
        ));
    }
    let m = (n - 1) / 2;
    let graded = match family {
        DerivationFamily::CcrGeneric => false,
        DerivationFamily::CarGeneric => true,
    };
    if t.is_graded() != graded {
        return Err(Error::Unsupported(
            "family/table mismatch: grading disagrees".into(),
        ));
    }
    // products must live entirely in the central coordinate with the right
    // block pattern: eπⁱ·eφʲ = G_ij 𝟙 and nothing else
    let mut gram = Matrix::zeros(m, m);
    for (i, j, v) in t.nonzero_products() {
        let central_only = v[..n - 1].iter().all(Rational::is_zero);
        let in_pi_phi = i < m && (m..2 * m).contains(&j);
        let in_phi_pi = j < m && (m..2 * m).contains(&i);
        if !central_only || !(in_pi_phi || in_phi_pi) {
            return Err(Error::Unsupported(
                "family/table mismatch: products are not ccr/car shaped".into(),
            ));
        }
        if in_pi_phi {
            gram[(i, j - m)] = v[n - 1].clone();
        }
    }
    if gram.rank() != m {
        return Err(Error::Unsupported(
            "family/table mismatch: degenerate scalar product".into(),
        ));
    }
    Ok((m, gram))
}

/// Basis of {X : XᵀG = sign·GX} for the O-blocks of the family.
fn adjoint_constrained(m: usize, gram: &Matrix, sign: i64) -> Vec<Matrix> {
    let mm = Matrix::from_fn(m * m, m * m, |row, col| {
        // row ↔ (r, c) entry of XᵀG − sign·GX; col ↔ X_{a,b}
        let (r, c) = (row / m, row % m);
        let (a, b) = (col / m, col % m);
        let mut v = Rational::zero();
        // (XᵀG)_{rc} = Σ_s X_{s r} G_{s c} → coefficient of X_{a b}: [b == r] G_{a c}
        if b == r {
            v += &gram[(a, c)];
        }
        // −sign (GX)_{rc} = −sign Σ_s G_{r s} X_{s c} → coefficient: [b == c] G_{r a}
        if b == c {
            let delta = &Rational::from_int(-sign) * &gram[(r, a)];
            v += &delta;
        }
        v
    });
    mm.nullspace()
        .basis()
        .iter()
        .map(|flat| Matrix::from_flat(m, m, flat.clone()).expect("m² entries"))
        .collect()
}

/// Generators of the family as operators on the (2m+1)-dimensional algebra.
pub fn family_generators(
    t: &StructureTable,
    family: DerivationFamily,
) -> Result<Vec<LinearOperator>> {
    let (m, gram) = read_ccr_car_shape(t, family)?;
    let n = 2 * m + 1;
    let gram_inv = invert(&gram)?;
    let mut gens: Vec<Matrix> = Vec::new();

    // M generators: M₁ = E_ab, M₂ = −G⁻¹ M₁ᵀ G
    for a in 0..m {
        for b in 0..m {
            let mut m1 = Matrix::zeros(m, m);
            m1[(a, b)] = Rational::one();
            let m2 = gram_inv.mul(&m1.transpose())?.mul(&gram)?.scale(&Rational::from_int(-1));
            let mut g = Matrix::zeros(n, n);
            copy_block(&mut g, &m1, 0, 0);
            copy_block(&mut g, &m2, m, m);
            gens.push(g);
        }
    }
    // O generators: O₁ into the (π-out, φ-in) block, O₂ into (φ-out, π-in)
    let o_sign = match family {
        DerivationFamily::CcrGeneric => 1,
        DerivationFamily::CarGeneric => -1,
    };
    for o in adjoint_constrained(m, &gram, o_sign) {
        let mut g = Matrix::zeros(n, n);
        copy_block(&mut g, &o, 0, m);
        gens.push(g);
        let mut g = Matrix::zeros(n, n);
        copy_block(&mut g, &o, m, 0);
        gens.push(g);
    }
    // C generators: eπⁱ ↦ 𝟙 and eφⁱ ↦ 𝟙
    for col in 0..2 * m {
        let mut g = Matrix::zeros(n, n);
        g[(n - 1, col)] = Rational::one();
        gens.push(g);
    }
    Ok(gens
        .into_iter()
        .map(|matrix| LinearOperator::new(matrix, t.degrees()))
        .collect())
}

fn copy_block(target: &mut Matrix, block: &Matrix, row0: usize, col0: usize) {
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            target[(row0 + r, col0 + c)] = block[(r, c)].clone();
        }
    }
}

fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        let col = m
            .solve(&e)?
            .ok_or(Error::InvalidTable("matrix is singular".into()))?;
        cols.push(col);
    }
    Ok(Matrix::from_fn(n, n, |r, c| cols[c][r].clone()))
}

/// Builds the family generators, verifies each one against the exact Leibniz
/// check and against membership in the solver's derivation space, and
/// records the family dimension next to the solver dimension. Containment is
/// the contract; equality of the dimensions is reported, never asserted.
pub fn family_containment(t: &StructureTable, family: DerivationFamily) -> Result<FamilyReport> {
    let gens = family_generators(t, family)?;
    let ders = derivation_algebra(t);
    let mut all_leibniz = true;
    let mut contained = true;
    for g in &gens {
        let p = g
            .parity
            .as_parity()
            .ok_or(Error::Internal("family generator must be homogeneous"))?;
        if !leibniz_residuals(t, &g.matrix, p).is_empty() {
            all_leibniz = false;
        }
        if !ders.full.contains(&g.matrix) {
            contained = false;
        }
    }
    let family_dim = Subspace::from_spanning(
        t.dim() * t.dim(),
        gens.iter().map(LinearOperator::flatten).collect(),
    )
    .dim();
    Ok(FamilyReport {
        family: match family {
            DerivationFamily::CcrGeneric => "ccr-generic",
            DerivationFamily::CarGeneric => "car-generic",
        },
        family_dim,
        solver_dim: ders.full.dim(),
        all_generators_leibniz: all_leibniz,
        contained,
        dims_equal: family_dim == ders.full.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, car, ccr, gl, o, sl, AlgebraElement};

    #[test]
    fn semisimple_derivations_are_inner() {
        for (t, expect) in [(sl(2).unwrap(), 3), (o(3).unwrap(), 3)] {
            let report = outer_report(&t);
            assert_eq!(report.dim_full, expect);
            assert_eq!(report.dim_inner, expect);
            assert_eq!(report.dim_outer, 0);
        }
    }

    #[test]
    fn abelian_derivations_are_everything() {
        let t = abelian(3).unwrap();
        let report = outer_report(&t);
        assert_eq!(report.dim_full, 9);
        assert_eq!(report.dim_inner, 0);
        assert_eq!(report.dim_outer, 9);
    }

    #[test]
    fn sl2_leibniz_system_rank_matches_elimination_oracle() {
        // 9 unknowns, 3 pairs × 3 coordinates = 9 equations; rank 6,
        // nullity 3 (frozen from the independent elimination in
        // tests/oracle checks)
        let t = sl(2).unwrap();
        let positions = allowed_positions(t.degrees(), Parity::Even);
        let system = leibniz_system(&t, Parity::Even, &positions);
        assert_eq!(system.rows(), 9);
        assert_eq!(system.cols(), 9);
        assert_eq!(system.rank(), 6);
        assert_eq!(system.nullspace().dim(), 3);
    }

    #[test]
    fn ccr1_solver_dimensions() {
        // hand-derived: constraints d13 = d23 = 0 and d33 = d11 + d22,
        // leaving a 6-dimensional space
        let t = ccr(1).unwrap();
        let ders = derivation_algebra(&t);
        assert_eq!(ders.full.dim(), 6);
        assert_eq!(ders.odd.dim(), 0);
        assert_eq!(inner_derivations(&t).dim(), 2);
    }

    #[test]
    fn car1_solver_dimensions() {
        // hand-derived: even block {d11, d22 free, d33 = d11 + d22} (dim 2),
        // odd block {d31, d32 free} (dim 2)
        let t = car(1).unwrap();
        let ders = derivation_algebra(&t);
        assert_eq!(ders.even.dim(), 2);
        assert_eq!(ders.odd.dim(), 2);
        assert_eq!(ders.full.dim(), 4);
    }

    #[test]
    fn gl2_has_the_central_scaling_derivation() {
        let t = gl(2).unwrap();
        let report = outer_report(&t);
        assert_eq!(report.dim_inner, 3);
        assert_eq!(report.dim_full, 4);
        assert_eq!(report.dim_outer, 1);
    }

    #[test]
    fn inner_contained_in_full_with_rank_nullity() {
        for t in [
            sl(2).unwrap(),
            gl(2).unwrap(),
            o(3).unwrap(),
            ccr(1).unwrap(),
            car(1).unwrap(),
            abelian(2).unwrap(),
        ] {
            let ders = derivation_algebra(&t);
            let inner = inner_derivations(&t);
            assert!(inner.space.is_subspace_of(&ders.full.space).unwrap());
            assert_eq!(inner.dim(), t.dim() - t.center().dim());
        }
    }

    #[test]
    fn bracket_closure_on_derivation_bases() {
        for t in [sl(2).unwrap(), ccr(1).unwrap(), car(1).unwrap()] {
            let ders = derivation_algebra(&t);
            for d1 in &ders.full.basis {
                for d2 in &ders.full.basis {
                    let b = bracket(d1, d2).unwrap();
                    assert!(ders.full.contains(&b.matrix));
                }
            }
        }
    }

    #[test]
    fn bracket_of_ads_is_ad_of_product() {
        let t = sl(2).unwrap();
        let x = AlgebraElement::from_coords(vec![
            Rational::from_int(1),
            Rational::from_int(-2),
            Rational::new(1, 3),
        ]);
        let y = AlgebraElement::from_coords(vec![
            Rational::zero(),
            Rational::from_int(5),
            Rational::from_int(7),
        ]);
        let lhs = t.ad(&x).unwrap().commutator(&t.ad(&y).unwrap()).unwrap();
        let rhs = t.ad(&t.multiply(&x, &y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_of_two_odd_car_derivations_is_even() {
        let t = car(1).unwrap();
        let ders = derivation_algebra(&t);
        assert_eq!(ders.odd.dim(), 2);
        let b = bracket(&ders.odd.basis[0], &ders.odd.basis[1]).unwrap();
        assert_eq!(b.parity, OpParity::Even);
        assert!(ders.full.contains(&b.matrix));
    }

    #[test]
    fn mixed_parity_bracket_rejected() {
        let t = car(1).unwrap();
        let mut m = Matrix::zeros(3, 3);
        m[(0, 0)] = Rational::one(); // even support
        m[(2, 0)] = Rational::one(); // odd support
        let mixed = LinearOperator::new(m, t.degrees());
        assert_eq!(mixed.parity, OpParity::Mixed);
        let even = LinearOperator::new(Matrix::identity(3), t.degrees());
        assert!(bracket(&mixed, &even).is_err());
    }

    #[test]
    fn ccr1_family_has_dim_5_and_is_strictly_contained() {
        let t = ccr(1).unwrap();
        let report = family_containment(&t, DerivationFamily::CcrGeneric).unwrap();
        assert_eq!(report.family_dim, 5);
        assert_eq!(report.solver_dim, 6);
        assert!(report.all_generators_leibniz);
        assert!(report.contained);
        assert!(!report.dims_equal);
    }

    #[test]
    fn car1_family_has_dim_3_and_is_strictly_contained() {
        let t = car(1).unwrap();
        let report = family_containment(&t, DerivationFamily::CarGeneric).unwrap();
        assert_eq!(report.family_dim, 3);
        assert_eq!(report.solver_dim, 4);
        assert!(report.all_generators_leibniz);
        assert!(report.contained);
    }

    #[test]
    fn ccr2_family_dimension() {
        // m² + m(m+1) + 2m = 4 + 6 + 4 = 14 generators; solver adds the
        // central-scaling direction
        let t = ccr(2).unwrap();
        let report = family_containment(&t, DerivationFamily::CcrGeneric).unwrap();
        assert_eq!(report.family_dim, 14);
        assert_eq!(report.solver_dim, 15);
        assert!(report.contained);
    }

    #[test]
    fn family_table_mismatch_rejected() {
        let t = sl(2).unwrap();
        assert!(family_containment(&t, DerivationFamily::CcrGeneric).is_err());
        let t = ccr(1).unwrap();
        assert!(family_containment(&t, DerivationFamily::CarGeneric).is_err());
    }

    #[test]
    fn derivation_bound_holds() {
        for t in [sl(2).unwrap(), gl(2).unwrap(), ccr(2).unwrap(), car(2).unwrap()] {
            let n = t.dim();
            assert!(derivation_algebra(&t).dim() <= n * n);
        }
    }
}
