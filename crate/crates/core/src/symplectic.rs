//! The symplectic space `(Z₂^{2g}, ·)` and the group `Sp(Z₂, 2g)`.
//!
//! The basis is arranged in hyperbolic pairs `(σ₁,σ₂), (σ₃,σ₄), …`, so the
//! pairing matrix is block diagonal with `g` copies of `[[0,1],[1,0]]`.
//! Matrices act on column vectors: column `j` of `A` is the image of `σ_j`.

use std::collections::VecDeque;
use std::hash::Hash;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::gf2::{packed_mul, BitMatrix, BitVector};

/// Largest genus for which whole-group enumeration is allowed.
pub const MAX_ENUM_GENUS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::GenusOutOfRange {
                genus,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(Self { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dimension(&self) -> usize {
        2 * self.genus
    }

    pub fn pairing_matrix(&self) -> BitMatrix {
        pairing_matrix(self.genus)
    }
}

/// The Gram matrix of the intersection form in the basis `σ`.
pub fn pairing_matrix(genus: usize) -> BitMatrix {
    let mut j = BitMatrix::zeros(2 * genus, 2 * genus);
    for k in 1..=genus {
        j.set(2 * k - 1, 2 * k, true);
        j.set(2 * k, 2 * k - 1, true);
    }
    j
}

/// `x·y = Σ_k (x_{2k-1} y_{2k} + x_{2k} y_{2k-1})` mod 2.
pub fn intersection_product(x: &BitVector, y: &BitVector) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    if !x.len().is_multiple_of(2) {
        return Err(Error::OddDimension(x.len()));
    }
    x.dot(&y.pair_swap())
}

/// Infallible pairing for callers that already know the lengths agree.
#[inline]
pub(crate) fn pairing(x: &BitVector, y: &BitVector) -> bool {
    intersection_product(x, y).expect("pairing of mismatched vectors")
}

/// `mᵀ J m = J`.
pub fn is_symplectic(m: &BitMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.rows().is_multiple_of(2) {
        return Err(Error::OddDimension(m.rows()));
    }
    let j = pairing_matrix(m.rows() / 2);
    Ok(m.transpose().mul(&j)?.mul(m)? == j)
}

/// `|Sp(Z₂, 2g)| = 2^{g²} · Π_{i=1..g} (2^{2i} − 1)`.
pub fn classical_order(genus: usize) -> u128 {
    let mut order: u128 = 1u128 << (genus * genus);
    for i in 1..=genus {
        order *= (1u128 << (2 * i)) - 1;
    }
    order
}

/// A `2g × 2g` matrix known to preserve the intersection form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: usize,
    matrix: BitMatrix,
}

impl SymplecticMatrix {
    pub fn new(matrix: BitMatrix) -> Result<Self> {
        if !is_symplectic(&matrix)? {
            return Err(Error::NotSymplectic);
        }
        Ok(Self {
            genus: matrix.rows() / 2,
            matrix,
        })
    }

    pub(crate) fn new_unchecked(matrix: BitMatrix) -> Self {
        debug_assert!(is_symplectic(&matrix).unwrap_or(false));
        Self {
            genus: matrix.rows() / 2,
            matrix,
        }
    }

    pub fn identity(genus: usize) -> Self {
        Self::new_unchecked(BitMatrix::identity(2 * genus))
    }

    /// `T_y(x) = x + (y·x) y`.
    pub fn transvection(y: &BitVector) -> Result<Self> {
        if !y.len().is_multiple_of(2) || y.is_empty() {
            return Err(Error::OddDimension(y.len()));
        }
        let n = y.len();
        let cols: Vec<BitVector> = (1..=n)
            .map(|j| {
                let e = BitVector::unit(n, j);
                if pairing(y, &e) {
                    &e + y
                } else {
                    e
                }
            })
            .collect();
        Ok(Self::new_unchecked(BitMatrix::from_columns(&cols)?))
    }

    /// Block-diagonal embedding of a `2h × 2h` symplectic block into genus
    /// `genus`, occupying basis positions `offset+1 ..= offset+2h`. The
    /// offset must be even so that hyperbolic pairs stay aligned.
    pub fn embed(block: &BitMatrix, genus: usize, offset: usize) -> Result<Self> {
        if !offset.is_multiple_of(2) || block.rows() + offset > 2 * genus {
            return Err(Error::DimensionMismatch(format!(
                "cannot place a {}x{} block at offset {offset} in genus {genus}",
                block.rows(),
                block.cols()
            )));
        }
        let mut m = BitMatrix::identity(2 * genus);
        m.paste(offset + 1, offset + 1, block);
        Self::new(m)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::new_unchecked(self.matrix.mul(&other.matrix)?))
    }

    /// For symplectic `A`, `A⁻¹ = J Aᵀ J`.
    pub fn inverse(&self) -> Self {
        let j = pairing_matrix(self.genus);
        let inv = j
            .mul(&self.matrix.transpose())
            .and_then(|m| m.mul(&j))
            .expect("square matrices of equal size");
        Self::new_unchecked(inv)
    }

    pub fn apply(&self, x: &BitVector) -> Result<BitVector> {
        self.matrix.mul_vec(x)
    }

    /// Image of the basis vector `σ_j`.
    pub fn image_of_basis(&self, j: usize) -> BitVector {
        self.matrix.col(j)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    fn pack(&self) -> u64 {
        self.matrix
            .pack_small()
            .expect("packing is only used for genus <= 4")
    }
}

impl std::fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sp{:?}", self.matrix)
    }
}

/// Every transvection `T_y` with `y ≠ 0`, in lexicographic order of `y`.
pub fn all_transvections(genus: usize) -> Vec<SymplecticMatrix> {
    BitVector::all(2 * genus)
        .skip(1)
        .map(|y| SymplecticMatrix::transvection(&y).expect("even length"))
        .collect()
}

/// Generators of the pairing-preserving permutation matrices: the swap
/// inside each hyperbolic pair, then the swaps of adjacent pairs. They
/// generate a group of order `2^g · g!`.
pub fn symplectic_permutations(genus: usize) -> Vec<SymplecticMatrix> {
    let n = 2 * genus;
    let perm_matrix = |perm: &dyn Fn(usize) -> usize| {
        let cols: Vec<BitVector> = (1..=n).map(|j| BitVector::unit(n, perm(j))).collect();
        SymplecticMatrix::new_unchecked(BitMatrix::from_columns(&cols).expect("square"))
    };
    let mut gens = Vec::with_capacity(2 * genus - 1);
    for k in 1..=genus {
        let (a, b) = (2 * k - 1, 2 * k);
        gens.push(perm_matrix(&|j| {
            if j == a {
                b
            } else if j == b {
                a
            } else {
                j
            }
        }));
    }
    for k in 1..genus {
        let lo = 2 * k - 1;
        gens.push(perm_matrix(&|j| {
            if j == lo || j == lo + 1 {
                j + 2
            } else if j == lo + 2 || j == lo + 3 {
                j - 2
            } else {
                j
            }
        }));
    }
    gens
}

/// A finite subgroup of `Sp(Z₂, 2g)` held as an explicit element list.
///
/// Elements are packed one row per byte into a `u64`; the list is in BFS
/// order from the identity, which makes iteration order reproducible.
#[derive(Clone)]
pub struct SpGroup {
    genus: usize,
    generators: Vec<SymplecticMatrix>,
    elements: Vec<u64>,
    index: FxHashMap<u64, u32>,
}

impl SpGroup {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[SymplecticMatrix] {
        &self.generators
    }

    pub fn element(&self, k: usize) -> SymplecticMatrix {
        let n = 2 * self.genus;
        SymplecticMatrix::new_unchecked(BitMatrix::unpack_small(n, n, self.elements[k]))
    }

    pub fn iter(&self) -> impl Iterator<Item = SymplecticMatrix> + '_ {
        (0..self.elements.len()).map(|k| self.element(k))
    }

    pub fn position(&self, m: &BitMatrix) -> Option<usize> {
        if m.rows() != 2 * self.genus || m.cols() != 2 * self.genus {
            return None;
        }
        self.index.get(&m.pack_small()?).map(|&k| k as usize)
    }

    pub fn contains(&self, m: &BitMatrix) -> bool {
        self.position(m).is_some()
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &SpGroup) -> bool {
        self.genus == other.genus && self.elements.iter().all(|k| other.index.contains_key(k))
    }
}

impl std::fmt::Debug for SpGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpGroup")
            .field("genus", &self.genus)
            .field("order", &self.elements.len())
            .finish()
    }
}

/// The subgroup generated by `gens`, by breadth-first closure under right
/// multiplication. Refuses `genus > 3`.
pub fn group_closure(genus: usize, gens: &[SymplecticMatrix]) -> Result<SpGroup> {
    group_closure_with(genus, gens, false)
}

const CHUNK: usize = 1 << 15;

/// As [`group_closure`]; with `parallel` the products of each frontier chunk
/// are computed on the rayon pool and merged in sequential order, so the
/// element list is identical either way.
pub fn group_closure_with(
    genus: usize,
    gens: &[SymplecticMatrix],
    parallel: bool,
) -> Result<SpGroup> {
    if genus == 0 || genus > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfRange {
            genus,
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    if let Some(bad) = gens.iter().find(|m| m.genus() != genus) {
        return Err(Error::DimensionMismatch(format!(
            "generator of genus {} in a genus-{genus} closure",
            bad.genus()
        )));
    }
    let n = 2 * genus;
    let packed_gens: Vec<u64> = gens.iter().map(SymplecticMatrix::pack).collect();
    let identity = BitMatrix::identity(n).pack_small().expect("n <= 8");

    let mut elements = vec![identity];
    let mut index = FxHashMap::default();
    index.insert(identity, 0u32);

    let mut level_start = 0;
    while level_start < elements.len() {
        let level_end = elements.len();
        let mut chunk_start = level_start;
        while chunk_start < level_end {
            let chunk_end = (chunk_start + CHUNK).min(level_end);
            let frontier = &elements[chunk_start..chunk_end];
            let step = |&e: &u64| packed_gens.iter().map(move |&g| packed_mul(n, e, g));
            let products: Vec<u64> = if parallel {
                frontier.par_iter().flat_map_iter(step).collect()
            } else {
                frontier.iter().flat_map(step).collect()
            };
            for p in products {
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(p) {
                    slot.insert(elements.len() as u32);
                    elements.push(p);
                }
            }
            chunk_start = chunk_end;
        }
        level_start = level_end;
    }

    Ok(SpGroup {
        genus,
        generators: gens.to_vec(),
        elements,
        index,
    })
}

/// `Sp(Z₂, 2g)` generated by all transvections together with the symplectic
/// permutations.
pub fn full_symplectic_group(genus: usize) -> Result<SpGroup> {
    full_symplectic_group_with(genus, false)
}

pub fn full_symplectic_group_with(genus: usize, parallel: bool) -> Result<SpGroup> {
    let mut gens = all_transvections(genus);
    gens.extend(symplectic_permutations(genus));
    group_closure_with(genus, &gens, parallel)
}

/// Breadth-first orbit of `start` under the maps produced by `step`.
/// The result lists the orbit in discovery order, `start` first.
pub fn bfs_orbit<T, F, I>(start: T, mut step: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: FnMut(&T) -> I,
    I: IntoIterator<Item = T>,
{
    let mut seen = FxHashSet::default();
    seen.insert(start.clone());
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in step(&x) {
            if seen.insert(y.clone()) {
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    order
}

/// Orbit of a vector under the group generated by `gens` acting by `x ↦ A·x`.
pub fn vector_orbit(start: &BitVector, gens: &[SymplecticMatrix]) -> Vec<BitVector> {
    bfs_orbit(start.clone(), |x| {
        gens.iter()
            .map(|a| a.apply(x).expect("matching dimensions"))
            .collect::<Vec<_>>()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> BitVector {
        BitVector::unit(n, i)
    }

    #[test]
    fn intersection_examples() {
        assert!(intersection_product(&e(2, 1), &e(2, 2)).unwrap());
        assert!(!intersection_product(&e(2, 1), &e(2, 1)).unwrap());
        let x = &e(4, 1) + &e(4, 3);
        let y = &e(4, 2) + &e(4, 4);
        assert!(!intersection_product(&x, &y).unwrap());
        assert!(intersection_product(&e(2, 1), &e(4, 1)).is_err());
    }

    #[test]
    fn transvection_examples() {
        let t0 = SymplecticMatrix::transvection(&BitVector::zeros(4)).unwrap();
        assert!(t0.is_identity());
        let t = SymplecticMatrix::transvection(&e(2, 1)).unwrap();
        assert_eq!(t.apply(&e(2, 2)).unwrap(), &e(2, 1) + &e(2, 2));
        assert_eq!(t.apply(&e(2, 1)).unwrap(), e(2, 1));
    }

    #[test]
    fn is_symplectic_examples() {
        assert!(is_symplectic(&BitMatrix::identity(4)).unwrap());
        assert!(is_symplectic(&BitMatrix::from_rows(&[[1, 1], [0, 1]])).unwrap());
        assert!(!is_symplectic(&BitMatrix::from_rows(&[[1, 0], [0, 0]])).unwrap());
        assert_eq!(
            is_symplectic(&BitMatrix::identity(3)),
            Err(Error::OddDimension(3))
        );
        assert!(SymplecticMatrix::new(BitMatrix::from_rows(&[[1, 0], [0, 0]])).is_err());
    }

    #[test]
    fn permutation_generators() {
        let g1 = symplectic_permutations(1);
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[0].matrix(), &BitMatrix::from_rows(&[[0, 1], [1, 0]]));
        for g in 1..=3 {
            let gens = symplectic_permutations(g);
            assert_eq!(gens.len(), 2 * g - 1);
            for m in &gens {
                assert!(is_symplectic(m.matrix()).unwrap());
            }
        }
        assert_eq!(
            group_closure(2, &symplectic_permutations(2))
                .unwrap()
                .order(),
            8
        );
    }

    #[test]
    fn closure_examples() {
        assert_eq!(group_closure(2, &[]).unwrap().order(), 1);
        assert_eq!(group_closure(1, &all_transvections(1)).unwrap().order(), 6);
        assert_eq!(
            group_closure(2, &all_transvections(2)).unwrap().order(),
            720
        );
        assert!(matches!(
            group_closure(4, &[]),
            Err(Error::GenusOutOfRange { genus: 4, .. })
        ));
    }

    #[test]
    fn parallel_closure_matches_sequential() {
        let gens = all_transvections(2);
        let a = group_closure_with(2, &gens, false).unwrap();
        let b = group_closure_with(2, &gens, true).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn inverse_via_pairing() {
        let group = full_symplectic_group(2).unwrap();
        for a in group.iter() {
            assert!(a.mul(&a.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn classical_orders() {
        assert_eq!(classical_order(1), 6);
        assert_eq!(classical_order(2), 720);
        assert_eq!(classical_order(3), 1_451_520);
    }
}
