//! Special 2-fold coverings, quadratic sections and the symplectic action.
//!
//! A special covering `φ: π₁P → Z₂` with `φ(u₀) = 1` is stored as the bits
//! `n_i = φ(u_i)` for `i = 1..2g`. A quadratic section is stored as the bits
//! `r_i` with `s(σ_i) = ν_i + r_i ν₀`.
//!
//! # Action convention
//!
//! [`act`]`(a, φ′, s)` returns the `φ` that is s-related to `φ′` through `a`,
//! i.e. `φ̃ = φ̃′ ∘ J(a)`. As a row vector `(n, 1) = (n′, 1) · J(a)`, so
//! `act(a·b, φ) = act(b, act(a, φ))`: a right action.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::quadform::QuadraticForm;
use crate::symplectic::{
    full_symplectic_group, full_symplectic_group_with, is_symplectic, SpGroup, SymplecticMatrix,
};

/// An element of `E(q)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialCovering {
    genus: usize,
    chern: i64,
    bits: BitVector,
}

impl SpecialCovering {
    /// `E(q)` is empty for odd `q`, so odd Chern classes are rejected.
    pub fn new(genus: usize, chern: i64, bits: BitVector) -> Result<Self> {
        if chern % 2 != 0 {
            return Err(Error::OddChernClass(chern));
        }
        if genus == 0 {
            return Err(Error::GenusOutOfRange {
                genus,
                min: 1,
                max: usize::MAX,
            });
        }
        if bits.len() != 2 * genus {
            return Err(Error::DimensionMismatch(format!(
                "covering of genus {genus} needs {} bits, got {}",
                2 * genus,
                bits.len()
            )));
        }
        Ok(Self { genus, chern, bits })
    }

    /// Parses `n₁n₂…n₂g`.
    pub fn parse(genus: usize, chern: i64, bits: &str) -> Result<Self> {
        Self::new(genus, chern, BitVector::parse(bits)?)
    }

    pub fn trivial(genus: usize, chern: i64) -> Result<Self> {
        Self::new(genus, chern, BitVector::zeros(2 * genus))
    }

    /// All `2^{2g}` elements of `E(q)` in lexicographic order.
    pub fn all(genus: usize, chern: i64) -> Result<Vec<Self>> {
        if chern % 2 != 0 {
            return Err(Error::OddChernClass(chern));
        }
        Ok(BitVector::all(2 * genus)
            .map(|bits| Self { genus, chern, bits })
            .collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The Chern class `q`.
    pub fn chern(&self) -> i64 {
        self.chern
    }

    /// `c = q / 2`.
    pub fn c(&self) -> i64 {
        self.chern / 2
    }

    /// `φ(u_i)` for `1 ≤ i ≤ 2g`.
    pub fn n(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub(crate) fn with_bits(&self, bits: BitVector) -> Self {
        Self {
            genus: self.genus,
            chern: self.chern,
            bits,
        }
    }

    /// `ε(i)` reduced mod 2: `ε(2s−1) = n_{2s}`, `ε(2s) = n_{2s−1}`.
    pub fn epsilon_mod2(&self) -> BitVector {
        self.bits.pair_swap()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus || self.chern != other.chern {
            return Err(Error::DimensionMismatch(format!(
                "coverings over (g={}, q={}) and (g={}, q={})",
                self.genus, self.chern, other.genus, other.chern
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for SpecialCovering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "φ[{} q={}]", self.bits, self.chern)
    }
}

/// A quadratic section `s`, `s(σ_i) = ν_i + r_i ν₀`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSection {
    r: BitVector,
}

impl QuadraticSection {
    pub fn new(r: BitVector) -> Result<Self> {
        if r.is_empty() || !r.len().is_multiple_of(2) {
            return Err(Error::OddDimension(r.len()));
        }
        Ok(Self { r })
    }

    pub fn parse(bits: &str) -> Result<Self> {
        Self::new(BitVector::parse(bits)?)
    }

    /// The default section, `r = 0`.
    pub fn zero(genus: usize) -> Self {
        Self {
            r: BitVector::zeros(2 * genus),
        }
    }

    /// Johnson's normalization `r_i = 1` for all `i`.
    pub fn johnson(genus: usize) -> Self {
        let mut r = BitVector::zeros(2 * genus);
        for i in 1..=2 * genus {
            r.set(i, true);
        }
        Self { r }
    }

    pub fn all(genus: usize) -> impl Iterator<Item = QuadraticSection> {
        BitVector::all(2 * genus).map(|r| Self { r })
    }

    pub fn genus(&self) -> usize {
        self.r.len() / 2
    }

    pub fn r(&self) -> &BitVector {
        &self.r
    }

    /// `s(a) = Σ a_i s(σ_i) + (Σ a_{2i−1} a_{2i}) ν₀`, as coordinates in the
    /// basis `(ν₁, …, ν₂g, ν₀)`.
    pub fn apply(&self, a: &BitVector) -> Result<BitVector> {
        let n = self.r.len();
        if a.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "section of genus {} applied to a vector of length {}",
                self.genus(),
                a.len()
            )));
        }
        let mut out = BitVector::zeros(n + 1);
        for i in a.ones() {
            out.set(i, true);
        }
        let nu0 = self.r.dot(a)? ^ QuadraticForm::omega0(self.genus()).evaluate(a)?;
        out.set(n + 1, nu0);
        Ok(out)
    }
}

impl std::fmt::Debug for QuadraticSection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "s[r={}]", self.r)
    }
}

fn check_genus(g: usize, other: usize, what: &str) -> Result<()> {
    if g != other {
        return Err(Error::DimensionMismatch(format!(
            "genus {g} does not match {what} of genus {other}"
        )));
    }
    Ok(())
}

/// `ω_φ = φ̃ ∘ s`; on the basis, `ω_φ(σ_i) = n_i + r_i`.
pub fn omega_of(phi: &SpecialCovering, s: &QuadraticSection) -> Result<QuadraticForm> {
    check_genus(phi.genus(), s.genus(), "section")?;
    QuadraticForm::from_basis_values(phi.bits.xor(&s.r)?)
}

/// The covering determined by a quadratic form and a section (inverse of
/// [`omega_of`]).
pub fn covering_of(w: &QuadraticForm, s: &QuadraticSection, chern: i64) -> Result<SpecialCovering> {
    check_genus(w.genus(), s.genus(), "section")?;
    SpecialCovering::new(w.genus(), chern, w.basis_values().xor(&s.r)?)
}

/// `(2g+1) × (2g+1)` matrix `[[A, 0], [W, 1]]` of `f_s` in the basis `ν`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedMatrix(BitMatrix);

impl EmbeddedMatrix {
    pub fn matrix(&self) -> &BitMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.0
    }

    pub fn a_block(&self) -> BitMatrix {
        let n = self.0.rows() - 1;
        self.0.block(1, n, 1, n)
    }

    pub fn w_row(&self) -> BitVector {
        let n = self.0.rows() - 1;
        self.0.row(n + 1).slice(1, n)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }
}

impl std::fmt::Debug for EmbeddedMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "J{:?}", self.0)
    }
}

/// The row `W`: `w_j = Σ_i a_ij r_i + S_j + r_j` with
/// `S_j = Σ_i a_{2i,j} a_{2i−1,j}` (that is, `ω₀` of column `j`).
pub fn w_row(a: &SymplecticMatrix, s: &QuadraticSection) -> Result<BitVector> {
    check_genus(a.genus(), s.genus(), "section")?;
    let omega0 = QuadraticForm::omega0(a.genus());
    let n = 2 * a.genus();
    let mut w = a.matrix().vec_mul(&s.r)?;
    w.xor_assign_unchecked(&s.r);
    for j in 1..=n {
        if omega0.evaluate(&a.image_of_basis(j))? {
            w.flip(j);
        }
    }
    Ok(w)
}

/// `J(A) = [[A, 0], [W, 1]]`, the matrix of `f_s` with `f_s ∘ s = s ∘ f`.
pub fn j_embed(a: &SymplecticMatrix, s: &QuadraticSection) -> Result<EmbeddedMatrix> {
    if !is_symplectic(a.matrix())? {
        return Err(Error::NotSymplectic);
    }
    let w = w_row(a, s)?;
    let n = 2 * a.genus();
    let mut m = BitMatrix::zeros(n + 1, n + 1);
    m.paste(1, 1, a.matrix());
    for j in w.ones() {
        m.set(n + 1, j, true);
    }
    m.set(n + 1, n + 1, true);
    Ok(EmbeddedMatrix(m))
}

/// `φ(u_j) = Σ_i a_ij φ′(u_i) + w_j` for every `j`.
pub fn s_related(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    a: &SymplecticMatrix,
    s: &QuadraticSection,
) -> Result<bool> {
    phi.compatible(phi2)?;
    check_genus(phi.genus(), a.genus(), "matrix")?;
    Ok(act(a, phi2, s)? == *phi)
}

/// The unique `φ` that is s-related to `φ′` through `a`:
/// `n_j = Σ_i a_ij n′_i + w_j`.
pub fn act(
    a: &SymplecticMatrix,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<SpecialCovering> {
    check_genus(phi2.genus(), a.genus(), "matrix")?;
    let mut n = a.matrix().vec_mul(&phi2.bits)?;
    n.xor_assign_unchecked(&w_row(a, s)?);
    Ok(phi2.with_bits(n))
}

/// Some `a` with `s_related(φ, φ′, a, s)`, built as a single transvection,
/// or `None` when the Arf invariants of `ω_φ` and `ω_φ′` differ.
///
/// With `V` defined by `ω_φ − ω_φ′ = V·(−)`, equal invariants force
/// `ω_φ′(V) = 0`, and then `ω_φ′ ∘ T_V = ω_φ`.
pub fn relating_transvection(
    phi: &SpecialCovering,
    phi2: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Option<SymplecticMatrix>> {
    phi.compatible(phi2)?;
    let w = omega_of(phi, s)?;
    let w2 = omega_of(phi2, s)?;
    if w.arf() != w2.arf() {
        return Ok(None);
    }
    let v = w2.difference_vector(&w)?;
    let t = SymplecticMatrix::transvection(&v)?;
    if !s_related(phi, phi2, &t, s)? {
        return Err(Error::Internal(format!(
            "transvection T_{v} does not relate {phi:?} and {phi2:?}"
        )));
    }
    Ok(Some(t))
}

/// One class of the partition of `E(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub arf: bool,
    pub members: Vec<SpecialCovering>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub genus: usize,
    pub chern: i64,
    /// Arf-0 class first, then Arf-1.
    pub classes: Vec<OrbitClass>,
    /// Set when the partition was confirmed by the explicit group action.
    pub action_checked: bool,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }
}

/// Partition of `E(q)` by the Arf invariant of `ω_φ`.
pub fn orbits_by_arf(genus: usize, chern: i64, s: &QuadraticSection) -> Result<OrbitPartition> {
    check_genus(genus, s.genus(), "section")?;
    let mut classes = vec![
        OrbitClass {
            arf: false,
            members: Vec::new(),
        },
        OrbitClass {
            arf: true,
            members: Vec::new(),
        },
    ];
    for phi in SpecialCovering::all(genus, chern)? {
        let arf = omega_of(&phi, s)?.arf();
        classes[arf as usize].members.push(phi);
    }
    Ok(OrbitPartition {
        genus,
        chern,
        classes,
        action_checked: false,
    })
}

/// Orbits of `E(q)` under every element of `group`, in order of their
/// smallest member. Each orbit is sorted.
pub fn orbits_by_action(
    group: &SpGroup,
    chern: i64,
    s: &QuadraticSection,
) -> Result<Vec<Vec<SpecialCovering>>> {
    check_genus(group.genus(), s.genus(), "section")?;
    let elements: Vec<SymplecticMatrix> = group.iter().collect();
    let mut remaining: std::collections::BTreeSet<SpecialCovering> =
        SpecialCovering::all(group.genus(), chern)?
            .into_iter()
            .collect();
    let mut orbits = Vec::new();
    while let Some(start) = remaining.pop_first() {
        let mut orbit = std::collections::BTreeSet::new();
        orbit.insert(start.clone());
        for a in &elements {
            orbit.insert(act(a, &start, s)?);
        }
        for phi in &orbit {
            remaining.remove(phi);
        }
        orbits.push(orbit.into_iter().collect());
    }
    Ok(orbits)
}

/// The two orbits of `E(q)`. For `g ≤ 2` the Arf partition is cross-checked
/// set-for-set against the orbits of the full group action; any disagreement
/// is reported as an internal error.
pub fn orbits(genus: usize, chern: i64, s: &QuadraticSection) -> Result<OrbitPartition> {
    orbits_with(genus, chern, s, false)
}

/// [`orbits`], optionally enumerating the group in parallel.
pub fn orbits_with(
    genus: usize,
    chern: i64,
    s: &QuadraticSection,
    parallel: bool,
) -> Result<OrbitPartition> {
    let mut partition = orbits_by_arf(genus, chern, s)?;
    if genus <= 2 {
        let group = full_symplectic_group_with(genus, parallel)?;
        let by_action = orbits_by_action(&group, chern, s)?;
        use std::collections::BTreeSet;
        let expected: BTreeSet<BTreeSet<SpecialCovering>> = partition
            .classes
            .iter()
            .map(|c| c.members.iter().cloned().collect())
            .collect();
        let got: BTreeSet<BTreeSet<SpecialCovering>> = by_action
            .into_iter()
            .map(|o| o.into_iter().collect())
            .collect();
        if expected != got {
            return Err(Error::Internal(format!(
                "Arf partition {expected:?} differs from action orbits {got:?}"
            )));
        }
        partition.action_checked = true;
    }
    Ok(partition)
}

/// `{a ∈ group : act(a, φ, s) = φ}`.
pub fn stabilizer_in(
    group: &SpGroup,
    phi: &SpecialCovering,
    s: &QuadraticSection,
) -> Result<Vec<SymplecticMatrix>> {
    let mut out = Vec::new();
    for a in group.iter() {
        if act(&a, phi, s)? == *phi {
            out.push(a);
        }
    }
    Ok(out)
}

/// Stabilizer of `φ` in the whole of `Sp(Z₂, 2g)`; `g ≤ 3`.
pub fn stabilizer(phi: &SpecialCovering, s: &QuadraticSection) -> Result<Vec<SymplecticMatrix>> {
    let group = full_symplectic_group(phi.genus())?;
    stabilizer_in(&group, phi, s)
}

/// A section for which both `ω_φ` and `ω_φ′` have Arf invariant 0:
/// `r_i = φ(u_i)` for odd `i` and `r_i = φ′(u_i)` for even `i`.
pub fn choose_section(phi: &SpecialCovering, phi2: &SpecialCovering) -> Result<QuadraticSection> {
    phi.compatible(phi2)?;
    let mut r = BitVector::zeros(2 * phi.genus());
    for i in 1..=2 * phi.genus() {
        let bit = if i % 2 == 1 { phi.n(i) } else { phi2.n(i) };
        r.set(i, bit);
    }
    QuadraticSection::new(r)
}
