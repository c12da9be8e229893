use proptest::prelude::*;

use arfcover::covering::{act, omega_of, QuadraticSection, SpecialCovering};
use arfcover::fox::{derived_matrix, fox_derivative_with, fundamental_identity_holds, Word};
use arfcover::group_ring::{GroupRingElement2, GroupRingElementZ, GroupRingMatrix2};
use arfcover::quadform::{polarization_holds, QuadraticForm};
use arfcover::symplectic::{intersection_product, SymplecticMatrix};
use arfcover::{BitMatrix, BitVector};

fn bits(len: usize) -> impl Strategy<Value = BitVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(|b| BitVector::from_bits(&b))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    prop::collection::vec(any::<bool>(), rows * cols).prop_map(move |b| {
        let mut m = BitMatrix::zeros(rows, cols);
        for (k, v) in b.into_iter().enumerate() {
            m.set(k / cols + 1, k % cols + 1, v);
        }
        m
    })
}

/// Products of random transvections.
fn symplectic(genus: usize) -> impl Strategy<Value = SymplecticMatrix> {
    prop::collection::vec(bits(2 * genus), 0..8).prop_map(move |ys| {
        ys.iter().fold(SymplecticMatrix::identity(genus), |a, y| {
            a.mul(&SymplecticMatrix::transvection(y).unwrap()).unwrap()
        })
    })
}

/// Rank by elimination on `Vec<Vec<bool>>`.
fn naive_rank(m: &BitMatrix) -> usize {
    let mut rows: Vec<Vec<bool>> = (1..=m.rows())
        .map(|i| (1..=m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) {
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

fn ring_element() -> impl Strategy<Value = GroupRingElement2> {
    (any::<bool>(), any::<bool>()).prop_map(|(a, b)| GroupRingElement2::new(a, b))
}

fn ring_matrix(n: usize) -> impl Strategy<Value = GroupRingMatrix2> {
    prop::collection::vec(prop::collection::vec(ring_element(), n), n)
        .prop_map(|rows| GroupRingMatrix2::from_entries(&rows))
}

fn word(max_gen: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..=max_gen, any::<bool>()), 0..12).prop_map(|letters| {
        letters.into_iter().fold(Word::empty(), |w, (g, inv)| {
            let l = Word::generator(g);
            w.concat(&if inv { l.inverse() } else { l })
        })
    })
}

proptest! {
    #[test]
    fn matrix_product_is_associative(a in matrix(5, 7), b in matrix(7, 3), c in matrix(3, 6)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_matches_naive_elimination(m in matrix(6, 9)) {
        prop_assert_eq!(m.rank(), naive_rank(&m));
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(6, 6)) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
            Err(_) => prop_assert!(naive_rank(&m) < 6),
        }
    }

    #[test]
    fn vector_products_agree_with_transpose(m in matrix(4, 6), x in bits(4), y in bits(6)) {
        prop_assert_eq!(m.vec_mul(&x).unwrap(), m.transpose().mul_vec(&x).unwrap());
        let lhs = x.dot(&m.mul_vec(&y).unwrap()).unwrap();
        let rhs = m.vec_mul(&x).unwrap().dot(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn forms_polarize_to_the_intersection_product(v in bits(6), x in bits(6), y in bits(6)) {
        let w = QuadraticForm::from_basis_values(v).unwrap();
        prop_assert!(polarization_holds(&w, &x, &y).unwrap());
    }

    #[test]
    fn arf_is_invariant(v in bits(8), a in symplectic(4)) {
        let w = QuadraticForm::from_basis_values(v).unwrap();
        prop_assert_eq!(w.compose(&a).unwrap().arf(), w.arf());
    }

    #[test]
    fn products_of_transvections_are_symplectic(a in symplectic(3), x in bits(6), y in bits(6)) {
        let lhs = intersection_product(&a.apply(&x).unwrap(), &a.apply(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, intersection_product(&x, &y).unwrap());
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn action_is_a_right_action(
        a in symplectic(3),
        b in symplectic(3),
        n in bits(6),
        r in bits(6),
    ) {
        let s = QuadraticSection::new(r).unwrap();
        let phi = SpecialCovering::new(3, 2, n).unwrap();
        let ab = a.mul(&b).unwrap();
        let once = act(&ab, &phi, &s).unwrap();
        let twice = act(&b, &act(&a, &phi, &s).unwrap(), &s).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(omega_of(&once, &s).unwrap().arf(), omega_of(&phi, &s).unwrap().arf());
    }

    #[test]
    fn group_ring_inverse(m in ring_matrix(5)) {
        if m.is_invertible().unwrap() {
            let inv = m.inverse().unwrap();
            prop_assert!(m.mul(&inv).unwrap().is_identity());
            prop_assert!(inv.mul(&m).unwrap().is_identity());
        } else {
            prop_assert!(m.augment().inverse().is_err());
        }
    }

    #[test]
    fn fox_fundamental_identity(w in word(4), images in prop::collection::vec(0..2i64, 5)) {
        let images: Vec<GroupRingElementZ> =
            images.into_iter().map(GroupRingElementZ::t_pow).collect();
        prop_assert!(fundamental_identity_holds(&w, &images).unwrap());
    }

    #[test]
    fn fox_derivative_of_a_product(u in word(3), v in word(3), j in 0..=3usize) {
        // ∂(uv) = ∂u + u·∂v under the images u_i ↦ t.
        let images = vec![GroupRingElementZ::T; 4];
        let uv = fox_derivative_with(&u.concat(&v), j, &images).unwrap();
        let du = fox_derivative_with(&u, j, &images).unwrap();
        let dv = fox_derivative_with(&v, j, &images).unwrap();
        let tu = GroupRingElementZ::t_pow(
            u.letters.iter().map(|l| if l.inverse { -1 } else { 1 }).sum(),
        );
        prop_assert_eq!(uv, du + tu * dv);
    }

    #[test]
    fn derived_matrix_reduces_mod_2(n in bits(4), c in 1..6i64) {
        let phi = SpecialCovering::new(2, 2 * c, n).unwrap();
        let m = derived_matrix(&phi).unwrap();
        prop_assert_eq!(m.mod2(), arfcover::fox::derived_matrix_mod2(&phi));
    }
}
