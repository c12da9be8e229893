//! The subgroups `Sp₀`, `Sp₁` fixing `ω₀`, `ω₁`, their explicit generators,
//! and the covering of `Sp(Z₂, 2g)` by conjugates of them.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::quadform::QuadraticForm;
use crate::symplectic::{
    group_closure, symplectic_permutations, vector_orbit, SpGroup, SymplecticMatrix, MAX_ENUM_GENUS,
};

/// The three named matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BMatrix {
    /// `diag([[1,1],[0,1]], I)`.
    B0,
    /// `diag(A₁, I)`, a generator of `Sp₀`.
    B1,
    /// `diag(A₂, I)`, a generator of `Sp₁`.
    B2,
}

const A1: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 0, 0, 1]];
const A2: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 1], [1, 0, 1, 1], [0, 0, 0, 1]];

pub fn b_matrix(which: BMatrix, genus: usize) -> Result<SymplecticMatrix> {
    let (block, min) = match which {
        BMatrix::B0 => (BitMatrix::from_rows(&[[1, 1], [0, 1]]), 1),
        BMatrix::B1 => (BitMatrix::from_rows(&A1), 2),
        BMatrix::B2 => (BitMatrix::from_rows(&A2), 2),
    };
    if genus < min {
        return Err(Error::GenusOutOfRange {
            genus,
            min,
            max: usize::MAX,
        });
    }
    SymplecticMatrix::embed(&block, genus, 0)
}

fn check_which(which: u8) -> Result<()> {
    if which > 1 {
        return Err(Error::InvalidBits(format!(
            "reference form must be 0 or 1, got {which}"
        )));
    }
    Ok(())
}

/// Explicit generator lists for the two stabilizers.
///
/// `Sp₀`: symplectic permutations, and `B₁` when `g ≥ 2`.
/// `Sp₁`: `B₀` and the swap on the first pair (generating `Sp(Z₂,2)`), the
/// generators of `Sp₀(Z₂, 2g−2)` shifted onto positions `3..2g`, and `B₂`
/// when `g ≥ 2`.
pub fn sp_generators(which: u8, genus: usize) -> Result<Vec<SymplecticMatrix>> {
    check_which(which)?;
    if genus == 0 {
        return Err(Error::GenusOutOfRange {
            genus,
            min: 1,
            max: usize::MAX,
        });
    }
    let mut gens = Vec::new();
    if which == 0 {
        gens.extend(symplectic_permutations(genus));
        if genus >= 2 {
            gens.push(b_matrix(BMatrix::B1, genus)?);
        }
        return Ok(gens);
    }
    gens.push(b_matrix(BMatrix::B0, genus)?);
    gens.push(SymplecticMatrix::embed(
        symplectic_permutations(1)[0].matrix(),
        genus,
        0,
    )?);
    if genus >= 2 {
        for a in sp_generators(0, genus - 1)? {
            gens.push(SymplecticMatrix::embed(a.matrix(), genus, 2)?);
        }
        gens.push(b_matrix(BMatrix::B2, genus)?);
    }
    Ok(gens)
}

/// `ω_which ∘ a = ω_which`.
pub fn membership(a: &SymplecticMatrix, which: u8) -> Result<bool> {
    check_which(which)?;
    let w = QuadraticForm::reference(which, a.genus());
    Ok(w.compose(a)? == w)
}

/// A generator list together with the form it fixes.
#[derive(Clone, Debug)]
pub struct StabilizerSpec {
    pub genus: usize,
    pub which: u8,
    pub generators: Vec<SymplecticMatrix>,
}

impl StabilizerSpec {
    /// The explicit generators, each checked to fix `ω_which`.
    pub fn new(which: u8, genus: usize) -> Result<Self> {
        let generators = sp_generators(which, genus)?;
        for a in &generators {
            if !membership(a, which)? {
                return Err(Error::Internal(format!(
                    "generator {a:?} does not fix ω{which}"
                )));
            }
        }
        Ok(Self {
            genus,
            which,
            generators,
        })
    }

    pub fn closure(&self) -> Result<SpGroup> {
        group_closure(self.genus, &self.generators)
    }
}

/// `α_which = {y : ω_which(y) = 0}`, in lexicographic order.
pub fn alpha_set(which: u8, genus: usize) -> Result<Vec<BitVector>> {
    check_which(which)?;
    let w = QuadraticForm::reference(which, genus);
    Ok(BitVector::all(2 * genus)
        .filter(|y| !w.evaluate(y).expect("same length"))
        .collect())
}

/// A certificate that `a` lies in a conjugate of `Sp_which`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub which: u8,
    pub y: BitVector,
    /// The form fixed by `a` that produced the certificate.
    pub fixed_form: QuadraticForm,
}

/// Finds the first form (lexicographically by basis values) fixed by `a`,
/// sets `which` to its Arf invariant and `y` to its difference vector from
/// `ω_which`, then checks `T_y · a · T_y ∈ Sp_which` before returning.
pub fn cover_witness(a: &SymplecticMatrix) -> Result<CoverWitness> {
    let g = a.genus();
    if g > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfRange {
            genus: g,
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    let fixed = QuadraticForm::all(g)
        .find(|w| w.compose(a).map(|v| v == *w).unwrap_or(false))
        .ok_or_else(|| Error::Internal(format!("{a:?} fixes no quadratic form")))?;
    let which = fixed.arf() as u8;
    let reference = QuadraticForm::reference(which, g);
    let y = reference.difference_vector(&fixed)?;
    if reference.evaluate(&y)? {
        return Err(Error::Internal(format!("ω{which}({y}) ≠ 0")));
    }
    let t = SymplecticMatrix::transvection(&y)?;
    let conj = t.mul(a)?.mul(&t)?;
    if !membership(&conj, which)? {
        return Err(Error::Internal(format!(
            "T_y a T_y ∉ Sp{which} for a = {a:?}, y = {y}"
        )));
    }
    Ok(CoverWitness {
        which,
        y,
        fixed_form: fixed,
    })
}

/// The `Sp₀`-orbits of `e₁` and of `e₁ + e₂`, under the group generated by
/// [`sp_generators`]`(0, g)`.
pub fn sp0_vector_orbits(genus: usize) -> Result<(Vec<BitVector>, Vec<BitVector>)> {
    if genus == 0 || genus > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfRange {
            genus,
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    let gens = sp_generators(0, genus)?;
    let n = 2 * genus;
    let e1 = BitVector::unit(n, 1);
    let e12 = &e1 + &BitVector::unit(n, 2);
    Ok((vector_orbit(&e1, &gens), vector_orbit(&e12, &gens)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::full_symplectic_group;

    #[test]
    fn b_matrices_are_verbatim() {
        assert_eq!(
            b_matrix(BMatrix::B1, 2).unwrap().matrix().row_strings(),
            ["1000", "0101", "1010", "0001"]
        );
        assert_eq!(
            b_matrix(BMatrix::B2, 2).unwrap().matrix().row_strings(),
            ["1000", "0101", "1011", "0001"]
        );
        assert!(b_matrix(BMatrix::B1, 1).is_err());
        let b1 = b_matrix(BMatrix::B1, 3).unwrap();
        assert_eq!(b1.matrix().block(5, 6, 5, 6), BitMatrix::identity(2));
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&SymplecticMatrix::identity(2), 0).unwrap());
        assert!(membership(&b_matrix(BMatrix::B1, 2).unwrap(), 0).unwrap());
        assert!(membership(&b_matrix(BMatrix::B2, 2).unwrap(), 1).unwrap());
        assert!(!membership(&b_matrix(BMatrix::B0, 1).unwrap(), 0).unwrap());
        assert!(membership(&b_matrix(BMatrix::B0, 1).unwrap(), 1).unwrap());
    }

    #[test]
    fn generator_closure_orders() {
        for (which, g, order) in [(0, 1, 2), (1, 1, 6), (0, 2, 72), (1, 2, 120)] {
            let spec = StabilizerSpec::new(which, g).unwrap();
            assert_eq!(spec.closure().unwrap().order(), order, "Sp{which} g={g}");
        }
        assert_eq!(sp_generators(0, 1).unwrap().len(), 1);
    }

    #[test]
    fn closure_is_the_whole_fixing_subgroup_at_genus_2() {
        let full = full_symplectic_group(2).unwrap();
        for which in 0..=1 {
            let sub = StabilizerSpec::new(which, 2).unwrap().closure().unwrap();
            let fixing = full
                .iter()
                .filter(|a| membership(a, which).unwrap())
                .count();
            assert_eq!(sub.order(), fixing);
            assert!(sub.iter().all(|a| membership(&a, which).unwrap()));
        }
    }

    #[test]
    fn cover_witness_examples() {
        let w = cover_witness(&SymplecticMatrix::identity(2)).unwrap();
        assert_eq!((w.which, w.y.is_zero()), (0, true));
        // B₀ fixes ω₁ but also the Arf-0 form with values (1,0), which comes
        // first in the scan.
        let w = cover_witness(&b_matrix(BMatrix::B0, 1).unwrap()).unwrap();
        assert_eq!(w.fixed_form.basis_values().to_string(), "10");
        assert_eq!((w.which, w.y.to_string()), (0, "01".to_string()));
    }

    #[test]
    fn every_element_gets_a_witness_at_genus_2() {
        for a in full_symplectic_group(2).unwrap().iter() {
            cover_witness(&a).unwrap();
        }
    }

    #[test]
    fn alpha_sizes() {
        for (g, n0, n1) in [(1, 3, 1), (2, 10, 6), (3, 36, 28)] {
            assert_eq!(alpha_set(0, g).unwrap().len(), n0);
            assert_eq!(alpha_set(1, g).unwrap().len(), n1);
        }
    }

    #[test]
    fn sp0_vector_orbit_sizes() {
        for (g, h0, h1) in [(1, 2, 1), (2, 9, 6), (3, 35, 28)] {
            let (o0, o1) = sp0_vector_orbits(g).unwrap();
            assert_eq!((o0.len(), o1.len()), (h0, h1));
        }
    }
}
