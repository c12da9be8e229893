//! Congruence of derived matrices and the ∗-product on `H_φ ⊗ Z₂`.
//!
//! Matrices of maps have the images of basis vectors as columns. With `ψ`
//! of matrix `J(A)` and `θ` of matrix `Θ`, the congruence diagram reads
//! `J(A) · D_φ = D_φ′ · Θ` over `Z₂[Z₂]`.

use crate::covering::{
    j_embed, omega_of, relating_transvection, s_related, w_row, QuadraticSection, SpecialCovering,
};
use crate::error::{Error, Result};
use crate::fox::derived_matrix_mod2;
use crate::gf2::{BitMatrix, BitVector};
use crate::group_ring::{GroupRingElement2, GroupRingMatrix2};
use crate::symplectic::{full_symplectic_group, pairing, SymplecticMatrix, MAX_ENUM_GENUS};

/// The matrix `Θ = [[B₁, B₂], [B₃, b]]` of `θ`, reduced mod `(1+t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaParams {
    /// `B₁ = (b_ij)`.
    pub b_matrix1: BitMatrix,
    /// `B₂ = (c_i)`.
    pub b_col: BitVector,
    /// `B₃ = (b_j)`.
    pub b_row: BitVector,
    pub b: bool,
}

impl ThetaParams {
    pub fn identity(genus: usize) -> Self {
        Self {
            b_matrix1: BitMatrix::identity(2 * genus),
            b_col: BitVector::zeros(2 * genus),
            b_row: BitVector::zeros(2 * genus),
            b: true,
        }
    }

    pub fn genus(&self) -> usize {
        self.b_row.len() / 2
    }

    /// The shape required for congruence: `B₃ = 0`, `b = 1`.
    pub fn is_congruence_shape(&self) -> bool {
        self.b_row.is_zero() && self.b
    }

    /// `Θ` lifted to constant entries of `Z₂[Z₂]`.
    pub fn matrix(&self) -> GroupRingMatrix2 {
        let n = self.b_row.len();
        let mut m = BitMatrix::zeros(n + 1, n + 1);
        m.paste(1, 1, &self.b_matrix1);
        for i in 1..=n {
            m.set(i, n + 1, self.b_col.get(i));
            m.set(n + 1, i, self.b_row.get(i));
        }
        m.set(n + 1, n + 1, self.b);
        GroupRingMatrix2::from_constant(m)
    }

    /// Every parameter choice at genus `g`, in a fixed order. `g = 1` only
    /// gives 512 choices; larger genera grow as `2^{4g²+4g+1}`.
    pub fn all(genus: usize) -> impl Iterator<Item = ThetaParams> {
        let n = 2 * genus;
        BitVector::all(n * n + 2 * n + 1).map(move |bits| {
            let mut b_matrix1 = BitMatrix::zeros(n, n);
            for i in 1..=n {
                for j in 1..=n {
                    b_matrix1.set(i, j, bits.get((i - 1) * n + j));
                }
            }
            let base = n * n;
            ThetaParams {
                b_matrix1,
                b_col: bits.slice(base + 1, base + n),
                b_row: bits.slice(base + n + 1, base + 2 * n),
                b: bits.get(base + 2 * n + 1),
            }
        })
    }
}

fn check_same(phi: &SpecialCovering, phi2: &SpecialCovering, a: &SymplecticMatrix) -> Result<()> {
    if phi.genus() != phi2.genus() || phi.chern() != phi2.chern() || a.genus() != phi.genus() {
        return Err(Error::DimensionMismatch(format!(
            "{phi:?}, {phi2:?} and a genus-{} matrix",
            a.genus()
        )));
    }
    Ok(())
}

/// Conditions (α), (β), (γ), (δ) mod `(1+t)`:
///
/// - (α) `b_ij = a_ij + b_j ε′(i)`
/// - (β) `c_i = Σ_j a_ij ε(j) + b ε′(i)`
/// - (γ) `w_j + n_j = Σ_i n′_i a_ij + b_j c`
/// - (δ) `0 = 1 + b + Σ b_j ε(j)`
///
/// (δ) is the invertibility of `θ`; for odd `c` it is also forced by the
/// commutativity of the diagram, so it is checked for both parities.
pub fn check_dn(
    a: &SymplecticMatrix,
    theta: &ThetaParams,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
    c: i64,
) -> Result<bool> {
    check_same(phi, phi2, a)?;
    let n = 2 * a.genus();
    let c = c.rem_euclid(2) == 1;
    let eps = phi.epsilon_mod2();
    let eps2 = phi2.epsilon_mod2();
    let w = w_row(a, s)?;
    let alpha = (1..=n).all(|i| {
        (1..=n).all(|j| {
            theta.b_matrix1.get(i, j) == (a.get(i, j) ^ (theta.b_row.get(j) & eps2.get(i)))
        })
    });
    let beta = (1..=n).all(|i| {
        let sum = (1..=n).fold(false, |acc, j| acc ^ (a.get(i, j) & eps.get(j)));
        theta.b_col.get(i) == sum ^ (theta.b & eps2.get(i))
    });
    let gamma = (1..=n).all(|j| {
        let sum = (1..=n).fold(false, |acc, i| acc ^ (phi2.n(i) & a.get(i, j)));
        (w.get(j) ^ phi.n(j)) == sum ^ (theta.b_row.get(j) & c)
    });
    // 1 + b + Σ b_j ε(j) = 0
    let delta = theta.b ^ theta.b_row.dot(&eps)?;
    Ok(alpha && beta && gamma && delta)
}

/// `J(A) · D_φ = D_φ′ · Θ`, by group-ring matrix multiplication.
pub fn diagram_commutes(
    a: &SymplecticMatrix,
    theta: &ThetaParams,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<bool> {
    check_same(phi, phi2, a)?;
    let psi = GroupRingMatrix2::from_constant(j_embed(a, s)?.into_matrix());
    let lhs = psi.mul(&derived_matrix_mod2(phi))?;
    let rhs = derived_matrix_mod2(phi2).mul(&theta.matrix())?;
    Ok(lhs == rhs)
}

/// The congruence-shape `θ` for `a`: `B₁ = A`, `B₂ = Aε + ε′`, `B₃ = 0`, `b = 1`.
/// It makes the diagram commute exactly when (γ) holds.
pub fn congruence_theta(
    a: &SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
) -> Result<ThetaParams> {
    check_same(phi, phi2, a)?;
    let mut b_col = a.matrix().mul_vec(&phi.epsilon_mod2())?;
    b_col += &phi2.epsilon_mod2();
    Ok(ThetaParams {
        b_matrix1: a.matrix().clone(),
        b_col,
        b_row: BitVector::zeros(2 * a.genus()),
        b: true,
    })
}

/// The unconstrained recipe: pick `b_j` for (γ), then `b_ij` from (α), `b`
/// from (δ) and `c_i` from (β). Returns `None` for even `c` when (γ) fails,
/// since `b_j` then drops out of (γ).
pub fn even_odd_theta(
    a: &SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Option<ThetaParams>> {
    check_same(phi, phi2, a)?;
    let n = 2 * a.genus();
    let m = quotient_row(a, phi, phi2, s)?;
    let c_odd = phi.c().rem_euclid(2) == 1;
    let b_row = if c_odd {
        m
    } else if m.is_zero() {
        BitVector::zeros(n)
    } else {
        return Ok(None);
    };
    let eps = phi.epsilon_mod2();
    let eps2 = phi2.epsilon_mod2();
    let mut b_matrix1 = a.matrix().clone();
    for i in 1..=n {
        for j in 1..=n {
            if b_row.get(j) & eps2.get(i) {
                b_matrix1.set(i, j, !b_matrix1.get(i, j));
            }
        }
    }
    let b = !b_row.dot(&eps)?;
    let mut b_col = a.matrix().mul_vec(&eps)?;
    if b {
        b_col += &eps2;
    }
    Ok(Some(ThetaParams {
        b_matrix1,
        b_col,
        b_row,
        b,
    }))
}

/// How a congruence witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMethod {
    /// Breadth-first scan of the whole group.
    GroupSearch,
    /// Equal Arf invariants, relating transvection.
    ArfShortcut,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub a: SymplecticMatrix,
    pub theta: ThetaParams,
    pub method: WitnessMethod,
}

/// `J(A)·D_φ` and `D_φ′·Θ` for a witness; equal by construction.
pub fn witness_sides(
    w: &CongruenceWitness,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<(GroupRingMatrix2, GroupRingMatrix2)> {
    let psi = GroupRingMatrix2::from_constant(j_embed(&w.a, s)?.into_matrix());
    Ok((
        psi.mul(&derived_matrix_mod2(phi))?,
        derived_matrix_mod2(phi2).mul(&w.theta.matrix())?,
    ))
}

fn verified(
    a: SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
    method: WitnessMethod,
) -> Result<Option<CongruenceWitness>> {
    let theta = congruence_theta(&a, phi, phi2)?;
    if !diagram_commutes(&a, &theta, phi, phi2, s)? {
        return Ok(None);
    }
    if !theta.matrix().is_invertible()? {
        return Err(Error::Internal(format!("θ for {a:?} is singular")));
    }
    Ok(Some(CongruenceWitness { a, theta, method }))
}

/// A pair `(a, θ)` making the derived matrices of `φ` and `φ′` congruent.
///
/// For `g ≤ 2` every element of `Sp(Z₂, 2g)` is tried in BFS order and the
/// first commuting diagram wins. For larger `g` the Arf invariants decide,
/// and a relating transvection supplies `a`; its diagram is still verified.
pub fn congruent(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Option<CongruenceWitness>> {
    if phi.genus() <= 2 {
        let group = full_symplectic_group(phi.genus())?;
        for a in group.iter() {
            if let Some(w) = verified(a, phi, phi2, s, WitnessMethod::GroupSearch)? {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    congruent_by_arf(phi, phi2, s)
}

/// The Arf shortcut on its own, valid for every genus.
pub fn congruent_by_arf(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Option<CongruenceWitness>> {
    // act(a, φ′) = φ, so the transvection relating (φ, φ′) is the a we need.
    match relating_transvection(phi, phi2, s)? {
        None => Ok(None),
        Some(a) => {
            let w = verified(a, phi, phi2, s, WitnessMethod::ArfShortcut)?;
            if w.is_none() {
                return Err(Error::Internal(format!(
                    "relating transvection fails the diagram for {phi:?}, {phi2:?}"
                )));
            }
            Ok(w)
        }
    }
}

/// Congruence with `θ` of arbitrary shape (any bottom row), by exhaustive
/// search over `a` and all `θ` parameters; `θ` must be invertible. Only
/// feasible at `g = 1`.
pub fn congruent_general(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Option<(SymplecticMatrix, ThetaParams)>> {
    if phi.genus() != 1 {
        return Err(Error::GenusOutOfRange {
            genus: phi.genus(),
            min: 1,
            max: 1,
        });
    }
    let group = full_symplectic_group(1)?;
    for a in group.iter() {
        for theta in ThetaParams::all(1) {
            if theta.matrix().is_invertible()? && diagram_commutes(&a, &theta, phi, phi2, s)? {
                return Ok(Some((a, theta)));
            }
        }
    }
    Ok(None)
}

/// An element `Σ d_i v̄_i + y ū₀` of `H_φ ⊗ Z₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HphiElement {
    pub v_coeffs: BitVector,
    pub u0_coeff: GroupRingElement2,
}

impl HphiElement {
    /// For odd `c` the `ū₀` coefficient lives in `Z₂`, so its `t` part must vanish.
    pub fn new(v_coeffs: BitVector, u0_coeff: GroupRingElement2, chern: i64) -> Result<Self> {
        if (chern / 2).rem_euclid(2) == 1 && u0_coeff.b {
            return Err(Error::InvalidBits(
                "ū₀ coefficient must lie in Z₂ when c is odd".into(),
            ));
        }
        Ok(Self { v_coeffs, u0_coeff })
    }

    pub fn v(genus: usize, i: usize) -> Self {
        Self {
            v_coeffs: BitVector::unit(2 * genus, i),
            u0_coeff: GroupRingElement2::ZERO,
        }
    }

    pub fn u0(genus: usize, coeff: GroupRingElement2) -> Self {
        Self {
            v_coeffs: BitVector::zeros(2 * genus),
            u0_coeff: coeff,
        }
    }

    /// A `Z₂`-basis: `v̄₁, …, v̄₂g, ū₀`, plus `tū₀` when `c` is even.
    pub fn basis(genus: usize, chern: i64) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=2 * genus).map(|i| Self::v(genus, i)).collect();
        out.push(Self::u0(genus, GroupRingElement2::ONE));
        if (chern / 2).rem_euclid(2) == 0 {
            out.push(Self::u0(genus, GroupRingElement2::T));
        }
        out
    }

    /// `π_φ`: `v̄_i ↦ τ_i`, `y ū₀ ↦ y(1) τ₀`, as coordinates in `τ`
    /// (`τ₀` last).
    pub fn project_tau(&self) -> BitVector {
        let n = self.v_coeffs.len();
        let mut out = BitVector::zeros(n + 1);
        for i in self.v_coeffs.ones() {
            out.set(i, true);
        }
        out.set(n + 1, self.u0_coeff.augment());
        out
    }

    /// `p_φ = p_⋆ ∘ π_φ`, which forgets `τ₀`.
    pub fn project(&self) -> BitVector {
        self.v_coeffs.clone()
    }
}

/// `x ∗ y = p_φ(x) · p_φ(y)`.
pub fn star_product(x: &HphiElement, y: &HphiElement, phi: &SpecialCovering) -> Result<bool> {
    let n = 2 * phi.genus();
    if x.v_coeffs.len() != n || y.v_coeffs.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "elements of H_φ ⊗ Z₂ for genus {} need {n} coefficients",
            phi.genus()
        )));
    }
    Ok(pairing(&x.project(), &y.project()))
}

/// The matrix `[[A, B], [C, D]]` of `Ψ` in the bases `V̄`, `V̄′`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PsiMatrix {
    pub a: BitMatrix,
    /// Entries in `Z₂[t]/(1−t) ≅ Z₂`.
    pub b: BitVector,
    pub c: BitVector,
    pub d: GroupRingElement2,
}

impl PsiMatrix {
    pub fn identity(genus: usize) -> Self {
        Self {
            a: BitMatrix::identity(2 * genus),
            b: BitVector::zeros(2 * genus),
            c: BitVector::zeros(2 * genus),
            d: GroupRingElement2::ONE,
        }
    }

    /// `Ψ_f = [[A, 0], [0, 1]]`.
    pub fn psi_f(a: &SymplecticMatrix) -> Self {
        Self {
            a: a.matrix().clone(),
            ..Self::identity(a.genus())
        }
    }

    /// Image of `x`. The `v̄` part only sees the augmentation of the `ū₀`
    /// coefficient; the `ū₀` part is `C·d + D·y`.
    pub fn apply(&self, x: &HphiElement) -> Result<HphiElement> {
        let mut v = self.a.mul_vec(&x.v_coeffs)?;
        if x.u0_coeff.augment() {
            v += &self.b;
        }
        let cv = GroupRingElement2::from(self.c.dot(&x.v_coeffs)?);
        Ok(HphiElement {
            v_coeffs: v,
            u0_coeff: cv + self.d * x.u0_coeff,
        })
    }
}

/// `Ψ(x) ∗ Ψ(y) = x ∗ y` for all `x, y` iff `A` is symplectic and `B = 0`.
pub fn psi_respects_product(psi: &PsiMatrix) -> Result<bool> {
    Ok(crate::symplectic::is_symplectic(&psi.a)? && psi.b.is_zero())
}

/// First pair of basis elements (in [`HphiElement::basis`] order) whose
/// ∗-product `Ψ` changes, or `None` if it preserves every pair.
pub fn product_violation(
    psi: &PsiMatrix,
    phi: &SpecialCovering,
) -> Result<Option<(HphiElement, HphiElement)>> {
    let basis = HphiElement::basis(phi.genus(), phi.chern());
    for x in &basis {
        for y in &basis {
            let before = star_product(x, y, phi)?;
            let after = star_product(&psi.apply(x)?, &psi.apply(y)?, phi)?;
            if before != after {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// The row `M = (w_j + n_j + Σ_i a_ij n′_i)`.
pub fn quotient_row(
    a: &SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<BitVector> {
    check_same(phi, phi2, a)?;
    let mut m = a.matrix().vec_mul(phi2.bits())?;
    m += &w_row(a, s)?;
    m += phi.bits();
    Ok(m)
}

/// The matrix of `ψ_f` in the bases `(V, V′)`, i.e. `P_{V′}⁻¹ · J(A) · P_V`,
/// which has the shape `[[A, 0], [M, 1]]`.
pub fn psi_f_in_v_bases(
    a: &SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<BitMatrix> {
    check_same(phi, phi2, a)?;
    let p = |f: &SpecialCovering| {
        let n = 2 * f.genus();
        let mut m = BitMatrix::identity(n + 1);
        for i in 1..=n {
            m.set(n + 1, i, f.n(i));
        }
        m
    };
    p(phi2)
        .inverse()?
        .mul(j_embed(a, s)?.matrix())?
        .mul(&p(phi))
}

/// `Ψ_f` is a quotient of `ψ_f` iff the row `M` of `ψ_f` in the bases
/// `(V, V′)` vanishes.
pub fn is_quotient(
    a: &SymplecticMatrix,
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<bool> {
    let m = psi_f_in_v_bases(a, phi, phi2, s)?;
    let n = 2 * a.genus();
    if m.block(1, n, 1, n) != *a.matrix() || !m.get(n + 1, n + 1) {
        return Err(Error::Internal("ψ_f has the wrong block shape".into()));
    }
    let row = m.row(n + 1).slice(1, n);
    if row != quotient_row(a, phi, phi2, s)? {
        return Err(Error::Internal(
            "row M disagrees with its closed form".into(),
        ));
    }
    Ok(row.is_zero())
}

/// Arf invariants of `ω_φ` and `ω_φ′`.
pub fn arf_pair(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<(bool, bool)> {
    Ok((omega_of(phi, s)?.arf(), omega_of(phi2, s)?.arf()))
}

/// Exists some `a` in the full group with `s_related(φ, φ′, a, s)`; `g ≤ 3`.
pub fn exists_s_relation(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<bool> {
    if phi.genus() > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfRange {
            genus: phi.genus(),
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    let group = full_symplectic_group(phi.genus())?;
    for a in group.iter() {
        if s_related(phi, phi2, &a, s)? {
            return Ok(true);
        }
    }
    Ok(false)
}
