//! Fox free differential calculus on the presentation of `π₁P`, and the
//! derived matrices of special coverings.
//!
//! Matrices have one row per generator and one column per relator. The
//! indices `1..2g` come first and index `0` (`u₀`, `R₀`) is last, so entry
//! `(j, i)` of a matrix is `∂R_i/∂u_j` with `0` stored at position `2g+1`.

use crate::covering::SpecialCovering;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::group_ring::{GroupRingElement2, GroupRingElementZ, GroupRingMatrix2, GroupRingMatrixZ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the free group on `u₀, …, u_n`. Not reduced automatically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        Self {
            letters: vec![Letter {
                generator: i,
                inverse: false,
            }],
        }
    }

    /// `u_i^k`.
    pub fn power(i: usize, k: i64) -> Self {
        let letter = Letter {
            generator: i,
            inverse: k < 0,
        };
        Self {
            letters: vec![letter; k.unsigned_abs() as usize],
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Replaces every `u_i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Self> {
        let mut out = Word::empty();
        for l in &self.letters {
            let w = images.get(l.generator).ok_or(Error::GeneratorOutOfRange {
                index: l.generator,
                max: images.len().saturating_sub(1),
            })?;
            out = out.concat(&if l.inverse { w.inverse() } else { w.clone() });
        }
        Ok(out)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "u{}", l.generator)?;
            if l.inverse {
                f.write_str("⁻¹")?;
            }
        }
        Ok(())
    }
}

/// `⟨u₀, …, u₂g | R_i = [u_i, u₀], R₀ = Π[u₂ℓ₋₁, u₂ℓ] u₀^q⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub genus: usize,
    pub chern: i64,
    /// `relators[i] = R_i`, `0 ≤ i ≤ 2g`.
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(genus: usize, chern: i64) -> Self {
        let u = Word::generator;
        let mut relators = Vec::with_capacity(2 * genus + 1);
        let mut r0 = Word::empty();
        for l in 1..=genus {
            r0 = r0.concat(&Word::commutator(&u(2 * l - 1), &u(2 * l)));
        }
        relators.push(r0.concat(&Word::power(0, chern)));
        for i in 1..=2 * genus {
            relators.push(Word::commutator(&u(i), &u(0)));
        }
        Self {
            genus,
            chern,
            relators,
        }
    }

    pub fn generator_count(&self) -> usize {
        2 * self.genus + 1
    }
}

/// Matrix position of generator or relator index `i` (`0` goes last).
pub fn position(genus: usize, i: usize) -> usize {
    if i == 0 {
        2 * genus + 1
    } else {
        i
    }
}

/// Inverse of a unit `±1`, `±t` of `Z[Z₂]`; each is its own inverse.
fn unit_inverse(x: GroupRingElementZ) -> Result<GroupRingElementZ> {
    if x * x == GroupRingElementZ::ONE {
        Ok(x)
    } else {
        Err(Error::Internal(format!("{x} is not a group element")))
    }
}

/// Image of a word under `u_i ↦ images[i]`.
pub fn evaluate_word(w: &Word, images: &[GroupRingElementZ]) -> Result<GroupRingElementZ> {
    let mut acc = GroupRingElementZ::ONE;
    for l in &w.letters {
        let x = *images.get(l.generator).ok_or(Error::GeneratorOutOfRange {
            index: l.generator,
            max: images.len().saturating_sub(1),
        })?;
        acc = acc * if l.inverse { unit_inverse(x)? } else { x };
    }
    Ok(acc)
}

/// `∂w/∂u_j`, evaluated through `u_i ↦ images[i]` (images must be `±1` or `±t`).
///
/// Uses `∂(uv)/∂x = ∂u/∂x + u ∂v/∂x`, `∂x/∂x = 1`, `∂x⁻¹/∂x = −x⁻¹`.
pub fn fox_derivative_with(
    w: &Word,
    j: usize,
    images: &[GroupRingElementZ],
) -> Result<GroupRingElementZ> {
    if j >= images.len() {
        return Err(Error::GeneratorOutOfRange {
            index: j,
            max: images.len().saturating_sub(1),
        });
    }
    let mut prefix = GroupRingElementZ::ONE;
    let mut acc = GroupRingElementZ::ZERO;
    for l in &w.letters {
        let x = *images.get(l.generator).ok_or(Error::GeneratorOutOfRange {
            index: l.generator,
            max: images.len() - 1,
        })?;
        if l.inverse {
            let x_inv = unit_inverse(x)?;
            if l.generator == j {
                acc = acc - prefix * x_inv;
            }
            prefix = prefix * x_inv;
        } else {
            if l.generator == j {
                acc = acc + prefix;
            }
            prefix = prefix * x;
        }
    }
    Ok(acc)
}

/// `φ(u₀) = t`, `φ(u_i) = t^{n_i}`, indexed by generator.
pub fn covering_images(phi: &SpecialCovering) -> Vec<GroupRingElementZ> {
    let mut images = vec![GroupRingElementZ::T];
    for i in 1..=2 * phi.genus() {
        images.push(GroupRingElementZ::t_pow(phi.n(i) as i64));
    }
    images
}

/// `φ(∂w/∂u_j)` for `0 ≤ j ≤ 2g`.
pub fn fox_derivative(w: &Word, j: usize, phi: &SpecialCovering) -> Result<GroupRingElementZ> {
    fox_derivative_with(w, j, &covering_images(phi))
}

/// `Σ_j φ(∂R/∂u_j)(φ(u_j) − 1) = φ(R) − 1`.
pub fn fundamental_identity_holds(w: &Word, images: &[GroupRingElementZ]) -> Result<bool> {
    let mut lhs = GroupRingElementZ::ZERO;
    for (j, &x) in images.iter().enumerate() {
        lhs = lhs + fox_derivative_with(w, j, images)? * (x - GroupRingElementZ::ONE);
    }
    Ok(lhs == evaluate_word(w, images)? - GroupRingElementZ::ONE)
}

/// Derived matrix of an arbitrary family of relators, by the Fox engine.
pub fn jacobian(
    genus: usize,
    relators: &[Word],
    images: &[GroupRingElementZ],
) -> Result<GroupRingMatrixZ> {
    let n = 2 * genus + 1;
    if relators.len() != n || images.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected {n} relators and generators, got {} and {}",
            relators.len(),
            images.len()
        )));
    }
    let mut m = GroupRingMatrixZ::zeros(n, n);
    for (i, r) in relators.iter().enumerate() {
        for j in 0..n {
            let d = fox_derivative_with(r, j, images)?;
            m.set(position(genus, j), position(genus, i), d);
        }
    }
    Ok(m)
}

/// The matrix of `d_φ` over `Z[Z₂]`, computed by the Fox engine.
pub fn derived_matrix(phi: &SpecialCovering) -> Result<GroupRingMatrixZ> {
    let p = Presentation::new(phi.genus(), phi.chern());
    jacobian(phi.genus(), &p.relators, &covering_images(phi))
}

/// Integral `n_i ∈ {0, −1}`: `0` when `φ(u_i) = 1`, `−1` when `φ(u_i) = t`.
pub fn integral_n(phi: &SpecialCovering) -> Vec<i64> {
    (1..=2 * phi.genus()).map(|i| -(phi.n(i) as i64)).collect()
}

/// Integral `ε`: `ε(2s) = n_{2s−1}`, `ε(2s−1) = −n_{2s}`. Entry `k` is `ε(k+1)`.
pub fn epsilon(phi: &SpecialCovering) -> Vec<i64> {
    let n = integral_n(phi);
    (0..n.len())
        .map(|k| if k % 2 == 0 { -n[k + 1] } else { n[k - 1] })
        .collect()
}

/// `Σ n_i ε(i)` (integral); always zero.
pub fn n_epsilon_sum(phi: &SpecialCovering) -> i64 {
    integral_n(phi)
        .iter()
        .zip(epsilon(phi))
        .map(|(n, e)| n * e)
        .sum()
}

/// The closed form of `d_φ`: `(1−t)` on the diagonal, `ε(i)(1−t)` in the
/// last column, `n_i(1−t)` in the last row and `c(1+t)` in the corner.
pub fn closed_form_matrix(phi: &SpecialCovering) -> GroupRingMatrixZ {
    let g = phi.genus();
    let n = 2 * g + 1;
    let one_minus_t = GroupRingElementZ::new(1, -1);
    let (ni, eps) = (integral_n(phi), epsilon(phi));
    let mut m = GroupRingMatrixZ::zeros(n, n);
    for i in 1..=2 * g {
        m.set(i, i, one_minus_t);
        m.set(i, n, one_minus_t.scale(eps[i - 1]));
        m.set(n, i, one_minus_t.scale(ni[i - 1]));
    }
    m.set(n, n, GroupRingElementZ::new(1, 1).scale(phi.c()));
    m
}

/// The derived matrix over `Z₂[Z₂]`: `(1+t)` times the matrix with an
/// identity block, last column `(n₂, n₁, n₄, n₃, …)`, last row `n` and
/// corner `c mod 2`.
pub fn derived_matrix_mod2(phi: &SpecialCovering) -> GroupRingMatrix2 {
    let g = phi.genus();
    let n = 2 * g + 1;
    let mut core = BitMatrix::zeros(n, n);
    let swapped = phi.epsilon_mod2();
    for i in 1..=2 * g {
        core.set(i, i, true);
        core.set(i, n, swapped.get(i));
        core.set(n, i, phi.n(i));
    }
    core.set(n, n, phi.c().rem_euclid(2) == 1);
    GroupRingMatrix2::from_constant(core).scale(GroupRingElement2::ONE_PLUS_T)
}

/// The change of bases `R → Q` and `U → V` and the resulting matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VqBasisChange {
    /// Columns express `R₁, …, R₂g, Q` in the basis `R`.
    pub p_q: GroupRingMatrix2,
    /// Columns express `v₁, …, v₂g, v₀` in the basis `U`.
    pub p_v: GroupRingMatrix2,
    /// `P_V⁻¹ · D · P_Q`, the matrix of `d_φ ⊗ id` in the bases `(Q, V)`.
    pub normal_form: GroupRingMatrix2,
}

/// Rewrites the derived matrix in the bases `v_i = u_i + n_i u₀`,
/// `Q = R₀ − Σ ε(i) R_i`. Both transforms are checked invertible.
pub fn vq_basis_change(phi: &SpecialCovering) -> Result<VqBasisChange> {
    let g = phi.genus();
    let n = 2 * g + 1;
    let eps = phi.epsilon_mod2();
    let mut p_q = BitMatrix::identity(n);
    let mut p_v = BitMatrix::identity(n);
    for i in 1..=2 * g {
        p_q.set(i, n, eps.get(i));
        p_v.set(n, i, phi.n(i));
    }
    let p_q = GroupRingMatrix2::from_constant(p_q);
    let p_v = GroupRingMatrix2::from_constant(p_v);
    if !p_q.is_invertible()? || !p_v.is_invertible()? {
        return Err(Error::Internal("basis change is not invertible".into()));
    }
    let normal_form = p_v.inverse()?.mul(&derived_matrix_mod2(phi))?.mul(&p_q)?;
    Ok(VqBasisChange {
        p_q,
        p_v,
        normal_form,
    })
}

pub fn vq_normal_form(phi: &SpecialCovering) -> Result<GroupRingMatrix2> {
    Ok(vq_basis_change(phi)?.normal_form)
}

/// Module structure of `H_φ` and of `H_φ ⊗ Z₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDescriptor {
    /// Rank of the free abelian part of `H_φ`.
    pub free_rank: u32,
    /// Orders of the cyclic torsion summands of `H_φ`.
    pub torsion: Vec<u64>,
    /// Copies of `Z₂` in `H_φ ⊗ Z₂`.
    pub z2_summands: u32,
    /// Copies of `Z₂[Z₂]` in `H_φ ⊗ Z₂`.
    pub z2z2_summands: u32,
}

fn superscript(k: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if k == 1 {
        return String::new();
    }
    k.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl ModuleDescriptor {
    /// e.g. `Z⁵ ⊕ Z/2`.
    pub fn integral_string(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z{}", superscript(self.free_rank)));
        }
        parts.extend(self.torsion.iter().map(|k| format!("Z/{k}")));
        parts.join(" ⊕ ")
    }

    /// e.g. `Z₂² ⊕ Z₂[Z₂]`.
    pub fn mod2_string(&self) -> String {
        let mut parts = Vec::new();
        if self.z2_summands > 0 {
            parts.push(format!("Z₂{}", superscript(self.z2_summands)));
        }
        if self.z2z2_summands > 0 {
            parts.push(format!("Z₂[Z₂]{}", superscript(self.z2z2_summands)));
        }
        parts.join(" ⊕ ")
    }
}

/// `H_φ = ⊕ Z v̄_i ⊕ Z[t]/((1−t²), c(1+t)) ū₀ ≅ Z^{2g+1} ⊕ Z/c`, and
/// `H_φ ⊗ Z₂` is `Z₂^{2g+1}` for odd `c`, `Z₂^{2g} ⊕ Z₂[Z₂]` for even `c`.
///
/// For `c = 0` the last summand is `Z[Z₂] ≅ Z²` and there is no torsion.
pub fn module_structure(phi: &SpecialCovering) -> ModuleDescriptor {
    let g = phi.genus() as u32;
    let c = phi.c().unsigned_abs();
    let (free_rank, torsion) = match c {
        0 => (2 * g + 2, vec![]),
        1 => (2 * g + 1, vec![]),
        _ => (2 * g + 1, vec![c]),
    };
    let (z2_summands, z2z2_summands) = if c % 2 == 1 {
        (2 * g + 1, 0)
    } else {
        (2 * g, 1)
    };
    ModuleDescriptor {
        free_rank,
        torsion,
        z2_summands,
        z2z2_summands,
    }
}

/// Result of replacing `u_i` by `u′_i = u₀^{−α_i} u_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorChange {
    /// `φ′(u_i) = φ(u_i) + α_i`.
    pub phi2: SpecialCovering,
    /// `φ(C)` with `C_{ij} = ∂u_j/∂u′_i`.
    pub c_matrix: GroupRingMatrix2,
    /// Derived matrix of the rewritten relators in the generators `u′`.
    pub m_prime: GroupRingMatrix2,
}

/// Rewrites the relators in the generators `u′_i = u₀^{−α_i} u_i` (so
/// `u_i = u′₀^{α_i} u′_i`), differentiates them directly with the Fox
/// engine and checks `M′ = φ(C)·M` over `Z[Z₂]` before returning.
pub fn change_generators(phi: &SpecialCovering, alpha: &BitVector) -> Result<GeneratorChange> {
    let g = phi.genus();
    if alpha.len() != 2 * g {
        return Err(Error::DimensionMismatch(format!(
            "α must have {} entries, got {}",
            2 * g,
            alpha.len()
        )));
    }
    let phi2 = phi.with_bits(phi.bits().xor(alpha)?);
    // u_k as words in the new generators.
    let mut old_in_new = vec![Word::generator(0)];
    for k in 1..=2 * g {
        old_in_new.push(Word::power(0, alpha.get(k) as i64).concat(&Word::generator(k)));
    }
    let new_images = covering_images(&phi2);
    let presentation = Presentation::new(g, phi.chern());
    let rewritten: Vec<Word> = presentation
        .relators
        .iter()
        .map(|r| r.substitute(&old_in_new))
        .collect::<Result<_>>()?;
    let m_prime = jacobian(g, &rewritten, &new_images)?;

    let n = 2 * g + 1;
    let mut c = GroupRingMatrixZ::zeros(n, n);
    for (k, w) in old_in_new.iter().enumerate() {
        for i in 0..n {
            let d = fox_derivative_with(w, i, &new_images)?;
            c.set(position(g, i), position(g, k), d);
        }
    }
    let m = derived_matrix(phi)?;
    if c.mul(&m)? != m_prime {
        return Err(Error::Internal(format!(
            "M′ ≠ φ(C)·M for {phi:?}, α = {alpha}"
        )));
    }
    Ok(GeneratorChange {
        phi2,
        c_matrix: c.mod2(),
        m_prime: m_prime.mod2(),
    })
}
