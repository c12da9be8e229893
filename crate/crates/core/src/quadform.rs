//! Quadratic refinements of the intersection form and their Arf invariant.

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::symplectic::{is_symplectic, pairing, SymplecticMatrix};

/// A map `ω: Z₂^{2g} → Z₂` with `ω(x+y) = ω(x) + ω(y) + x·y`.
///
/// Such a map is determined by its values on the basis `σ`; those values are
/// all that is stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    values: BitVector,
}

impl QuadraticForm {
    /// `values[i] = ω(σ_i)`. The length must be even and positive.
    pub fn from_basis_values(values: BitVector) -> Result<Self> {
        if values.is_empty() || !values.len().is_multiple_of(2) {
            return Err(Error::OddDimension(values.len()));
        }
        Ok(Self { values })
    }

    /// `ω₀(x) = Σ x_{2k-1} x_{2k}`: zero on every basis vector.
    pub fn omega0(genus: usize) -> Self {
        Self {
            values: BitVector::zeros(2 * genus),
        }
    }

    /// `ω₁(x) = ω₀(x) + x₁ + x₂`.
    pub fn omega1(genus: usize) -> Self {
        let mut values = BitVector::zeros(2 * genus);
        values.set(1, true);
        values.set(2, true);
        Self { values }
    }

    /// `ω₀` or `ω₁`.
    pub fn reference(which: u8, genus: usize) -> Self {
        match which {
            0 => Self::omega0(genus),
            _ => Self::omega1(genus),
        }
    }

    /// All `2^{2g}` forms, in lexicographic order of their basis values.
    pub fn all(genus: usize) -> impl Iterator<Item = QuadraticForm> {
        BitVector::all(2 * genus).map(|values| Self { values })
    }

    pub fn genus(&self) -> usize {
        self.values.len() / 2
    }

    pub fn basis_values(&self) -> &BitVector {
        &self.values
    }

    /// `ω(x) = Σ x_i ω(σ_i) + Σ_k x_{2k-1} x_{2k}`.
    pub fn evaluate(&self, x: &BitVector) -> Result<bool> {
        let linear = self.values.dot(x)?;
        Ok(linear ^ omega0_value(x))
    }

    /// `α(ω) = Σ_j ω(σ_{2j-1}) ω(σ_{2j})`.
    pub fn arf(&self) -> bool {
        omega0_value(&self.values)
    }

    /// The form `x ↦ ω(A·x)`.
    pub fn compose(&self, a: &SymplecticMatrix) -> Result<QuadraticForm> {
        if a.genus() != self.genus() {
            return Err(Error::DimensionMismatch(format!(
                "form of genus {} composed with a genus-{} matrix",
                self.genus(),
                a.genus()
            )));
        }
        if !is_symplectic(a.matrix())? {
            return Err(Error::NotSymplectic);
        }
        Ok(self.compose_unchecked(a))
    }

    pub(crate) fn compose_unchecked(&self, a: &SymplecticMatrix) -> QuadraticForm {
        let n = self.values.len();
        let mut values = BitVector::zeros(n);
        for i in 1..=n {
            if self.evaluate(&a.image_of_basis(i)).expect("same length") {
                values.set(i, true);
            }
        }
        QuadraticForm { values }
    }

    /// The unique `V` with `other(x) − self(x) = V·x` for all `x`.
    ///
    /// The difference of two forms is linear with coefficients `d_i` on
    /// `σ_i`; the dual of `σ` under the pairing is the pair-swapped basis, so
    /// `V` is `d` with each hyperbolic pair swapped.
    pub fn difference_vector(&self, other: &QuadraticForm) -> Result<BitVector> {
        Ok(self.values.xor(&other.values)?.pair_swap())
    }

    /// `ω ∘ T_y = ω + (1 + ω(y)) (y · −)`, read off on the basis.
    pub fn compose_transvection(&self, y: &BitVector) -> Result<QuadraticForm> {
        let factor = !self.evaluate(y)?;
        let mut values = self.values.clone();
        if factor {
            values.xor_assign_unchecked(&y.pair_swap());
        }
        Ok(QuadraticForm { values })
    }

    /// Number of zeros of the form, by enumeration. Requires `g <= 31`.
    pub fn count_zeros(&self) -> u64 {
        BitVector::all(self.values.len())
            .filter(|x| !self.evaluate(x).expect("same length"))
            .count() as u64
    }
}

impl std::fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadraticForm({})", self.values)
    }
}

/// `Σ_k x_{2k-1} x_{2k}`.
fn omega0_value(x: &BitVector) -> bool {
    let mut acc = false;
    for k in 1..=x.len() / 2 {
        acc ^= x.get(2 * k - 1) & x.get(2 * k);
    }
    acc
}

/// `2^{g-1}(2^g + 1)`: the number of Arf-0 forms, and the zero count of `ω₀`.
pub fn even_count(genus: usize) -> u64 {
    (1u64 << (genus - 1)) * ((1u64 << genus) + 1)
}

/// `2^{g-1}(2^g − 1)`.
pub fn odd_count(genus: usize) -> u64 {
    (1u64 << (genus - 1)) * ((1u64 << genus) - 1)
}

/// Checks `ω(x+y) = ω(x) + ω(y) + x·y` for one pair.
pub fn polarization_holds(w: &QuadraticForm, x: &BitVector, y: &BitVector) -> Result<bool> {
    let lhs = w.evaluate(&x.xor(y)?)?;
    Ok(lhs == (w.evaluate(x)? ^ w.evaluate(y)? ^ pairing(x, y)))
}
