//! Acceptance criteria, one line each. Expected values come from small
//! oracles written here on plain bitmasks, not from the library.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use arfcover::congruence::{
    congruence_theta, congruent, is_quotient, psi_respects_product, star_product, HphiElement,
    PsiMatrix,
};
use arfcover::covering::{act, j_embed, orbits, s_related, QuadraticSection, SpecialCovering};
use arfcover::fox::{change_generators, derived_matrix, derived_matrix_mod2, vq_basis_change};
use arfcover::group_ring::{GroupRingElement2, GroupRingMatrix2};
use arfcover::quadform::QuadraticForm;
use arfcover::stabilizers::{cover_witness, sp0_vector_orbits, StabilizerSpec};
use arfcover::symplectic::{all_transvections, full_symplectic_group, SymplecticMatrix};
use arfcover::{BitMatrix, BitVector};

type Outcome = Result<String, String>;

/// Vectors are bitmasks with coordinate `i` at bit `i − 1`.
mod oracle {
    use super::*;

    pub fn bit(x: u32, i: usize) -> bool {
        x >> (i - 1) & 1 == 1
    }

    pub fn mask(v: &BitVector) -> u32 {
        (1..=v.len())
            .filter(|&i| v.get(i))
            .map(|i| 1 << (i - 1))
            .sum()
    }

    pub fn pairing(x: u32, y: u32, g: usize) -> bool {
        (1..=g).fold(false, |acc, k| {
            acc ^ (bit(x, 2 * k - 1) & bit(y, 2 * k)) ^ (bit(x, 2 * k) & bit(y, 2 * k - 1))
        })
    }

    /// The quadratic refinement with the given values on the basis.
    pub fn eval(values: u32, x: u32, g: usize) -> bool {
        let linear = (values & x).count_ones() % 2 == 1;
        (1..=g).fold(linear, |acc, k| acc ^ (bit(x, 2 * k - 1) & bit(x, 2 * k)))
    }

    /// Arf invariant as the majority value.
    pub fn arf(values: u32, g: usize) -> bool {
        let ones = (0..1u32 << (2 * g)).filter(|&x| eval(values, x, g)).count();
        ones > 1 << (2 * g - 1)
    }

    /// Form of a covering relative to a section: values `n + r`.
    pub fn covering_arf(phi: &SpecialCovering, s: &QuadraticSection) -> bool {
        arf(mask(phi.bits()) ^ mask(s.r()), phi.genus())
    }

    pub fn apply(a: &BitMatrix, x: u32) -> u32 {
        (1..=a.cols())
            .filter(|&j| bit(x, j))
            .map(|j| mask(&a.col(j)))
            .fold(0, |acc, c| acc ^ c)
    }

    /// `ω ∘ a = ω` for `ω` with the given basis values.
    pub fn fixes(a: &BitMatrix, values: u32, g: usize) -> bool {
        (1..=2 * g).all(|i| eval(values, apply(a, 1 << (i - 1)), g) == bit(values, i))
    }

    pub fn reference_values(which: u8) -> u32 {
        if which == 0 {
            0
        } else {
            0b11
        }
    }

    pub fn classical_order(g: u32) -> u128 {
        (1..=g).fold(1u128 << (g * g), |acc, i| acc * ((1u128 << (2 * i)) - 1))
    }

    /// `Z₂[Z₂]` element `a + bt`.
    pub type E = (bool, bool);

    pub fn mul(x: E, y: E) -> E {
        ((x.0 & y.0) ^ (x.1 & y.1), (x.0 & y.1) ^ (x.1 & y.0))
    }

    pub fn entries(m: &GroupRingMatrix2) -> Vec<Vec<E>> {
        (1..=m.rows())
            .map(|i| {
                (1..=m.cols())
                    .map(|j| {
                        let e = m.get(i, j);
                        (e.a, e.b)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn constant(m: &BitMatrix) -> Vec<Vec<E>> {
        (1..=m.rows())
            .map(|i| (1..=m.cols()).map(|j| (m.get(i, j), false)).collect())
            .collect()
    }

    pub fn matmul(x: &[Vec<E>], y: &[Vec<E>]) -> Vec<Vec<E>> {
        let (n, k, m) = (x.len(), y.len(), y[0].len());
        (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..k).fold((false, false), |acc, l| {
                            let p = mul(x[i][l], y[l][j]);
                            (acc.0 ^ p.0, acc.1 ^ p.1)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Invertible over `Z₂[Z₂]` iff the augmentation is invertible over `Z₂`.
    pub fn invertible(m: &[Vec<E>]) -> bool {
        let mut rows: Vec<Vec<bool>> = m
            .iter()
            .map(|r| r.iter().map(|e| e.0 ^ e.1).collect())
            .collect();
        let n = rows.len();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r][col]) else {
                return false;
            };
            rows.swap(col, p);
            for r in 0..n {
                if r != col && rows[r][col] {
                    let pivot = rows[col].clone();
                    for (x, y) in rows[r].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
        }
        true
    }

    pub fn identity(n: usize) -> Vec<Vec<E>> {
        (0..n)
            .map(|i| (0..n).map(|j| (i == j, false)).collect())
            .collect()
    }
}

fn sections(g: usize) -> Vec<QuadraticSection> {
    if g == 1 {
        QuadraticSection::all(1).collect()
    } else {
        vec![QuadraticSection::zero(g), QuadraticSection::johnson(g)]
    }
}

fn expected_sizes(g: u32) -> (usize, usize) {
    let h = 1usize << (g - 1);
    (h * ((1 << g) + 1), h * ((1 << g) - 1))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn orbit_census() -> Outcome {
    for (g, q) in [(1, 2), (2, 2), (2, 4), (3, 2)] {
        for s in sections(g) {
            let p = orbits(g, q, &s).map_err(|e| e.to_string())?;
            let (e0, e1) = expected_sizes(g as u32);
            ensure(p.sizes() == [e0, e1], || {
                format!("g={g} q={q}: sizes {:?}", p.sizes())
            })?;
            for class in &p.classes {
                for phi in &class.members {
                    ensure(oracle::covering_arf(phi, &s) == class.arf, || {
                        format!("{phi:?} labelled {}", class.arf)
                    })?;
                }
            }
            if g > 2 {
                continue;
            }
            // Orbits of the transvection action by union-find.
            let all = SpecialCovering::all(g, q).unwrap();
            let index = |phi: &SpecialCovering| all.iter().position(|p| p == phi).unwrap();
            let mut parent: Vec<usize> = (0..all.len()).collect();
            fn find(parent: &mut [usize], i: usize) -> usize {
                if parent[i] != i {
                    parent[i] = find(parent, parent[i]);
                }
                parent[i]
            }
            for t in all_transvections(g) {
                for phi in &all {
                    let (a, b) = (index(phi), index(&act(&t, phi, &s).unwrap()));
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
            let mut by_action: Vec<BTreeSet<&SpecialCovering>> = Vec::new();
            for root in 0..all.len() {
                let orbit: BTreeSet<_> = (0..all.len())
                    .filter(|&i| find(&mut parent, i) == root)
                    .map(|i| &all[i])
                    .collect();
                if !orbit.is_empty() {
                    by_action.push(orbit);
                }
            }
            let by_arf: BTreeSet<BTreeSet<&SpecialCovering>> = p
                .classes
                .iter()
                .map(|c| c.members.iter().collect())
                .collect();
            ensure(by_arf == by_action.into_iter().collect(), || {
                format!("g={g} q={q} r={}: partitions differ", s.r())
            })?;
        }
    }
    Ok("sizes (3,1) (10,6) (10,6) (36,28), partitions coincide for g ≤ 2".into())
}

fn arf_classification() -> Outcome {
    let mut pairs = 0;
    for g in 1..=2 {
        let group: Vec<SymplecticMatrix> = full_symplectic_group(g).unwrap().iter().collect();
        for s in sections(g) {
            let all = SpecialCovering::all(g, 2).unwrap();
            for phi in &all {
                for phi2 in &all {
                    let related = group.iter().any(|a| s_related(phi, phi2, a, &s).unwrap());
                    let same = oracle::covering_arf(phi, &s) == oracle::covering_arf(phi2, &s);
                    ensure(related == same, || format!("{phi:?} vs {phi2:?}"))?;
                    pairs += 1;
                }
            }
        }
    }
    let mut form_pairs = 0;
    for g in 1..=3 {
        let n = 1u32 << (2 * g);
        for v1 in 0..n {
            for v2 in 0..n {
                // The difference vector: ω′(x) − ω(x) = x·V for every x.
                let v = (0..n)
                    .find(|&v| {
                        (0..n).all(|x| {
                            oracle::eval(v1, x, g) ^ oracle::eval(v2, x, g)
                                == oracle::pairing(x, v, g)
                        })
                    })
                    .ok_or("no difference vector")?;
                let w =
                    QuadraticForm::from_basis_values(BitVector::from_lex_bits(v1, 2 * g)).unwrap();
                let w2 =
                    QuadraticForm::from_basis_values(BitVector::from_lex_bits(v2, 2 * g)).unwrap();
                ensure(
                    oracle::mask(&w.difference_vector(&w2).unwrap()) == v,
                    || format!("difference vector of {w:?}, {w2:?}"),
                )?;
                ensure(
                    oracle::arf(v2, g) ^ oracle::arf(v1, g) == oracle::eval(v1, v, g),
                    || format!("arf identity at {w:?}, {w2:?}"),
                )?;
                ensure(w.arf() == oracle::arf(v1, g), || format!("arf of {w:?}"))?;
                form_pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} covering pairs searched over the group, {form_pairs} form pairs"
    ))
}

fn generator_theorems() -> Outcome {
    let mut orders = Vec::new();
    for (which, g, order) in [
        (0, 1, 2),
        (1, 1, 6),
        (0, 2, 72),
        (1, 2, 120),
        (0, 3, 40320),
        (1, 3, 51840),
    ] {
        let closure = StabilizerSpec::new(which, g)
            .and_then(|s| s.closure())
            .map_err(|e| e.to_string())?;
        let values = oracle::reference_values(which);
        ensure(closure.order() == order, || {
            format!("Sp{which} g={g}: closure has {} elements", closure.order())
        })?;
        ensure(
            closure.iter().all(|a| oracle::fixes(a.matrix(), values, g)),
            || format!("Sp{which} g={g}: closure leaves the stabilizer"),
        )?;
        let fixing = full_symplectic_group(g)
            .unwrap()
            .iter()
            .filter(|a| oracle::fixes(a.matrix(), values, g))
            .count();
        ensure(fixing == order, || {
            format!("Sp{which} g={g}: fixing subgroup has {fixing} elements")
        })?;
        orders.push(order.to_string());
    }
    Ok(format!("orders {}", orders.join(", ")))
}

fn group_orders() -> Outcome {
    let mut orders = Vec::new();
    for g in 1..=3 {
        let group = full_symplectic_group(g).map_err(|e| e.to_string())?;
        let expected = oracle::classical_order(g as u32);
        ensure(group.order() as u128 == expected, || {
            format!("g={g}: {} vs {expected}", group.order())
        })?;
        // Spot-check that elements preserve the pairing.
        for a in group.iter().step_by(997) {
            for x in 0..1u32 << (2 * g) {
                for y in [1u32, 2, 1 << (2 * g - 1)] {
                    let (ax, ay) = (oracle::apply(a.matrix(), x), oracle::apply(a.matrix(), y));
                    ensure(
                        oracle::pairing(ax, ay, g) == oracle::pairing(x, y, g),
                        || format!("{a:?} is not symplectic"),
                    )?;
                }
            }
        }
        orders.push(group.order().to_string());
    }
    Ok(format!("orders {}", orders.join(", ")))
}

fn conjugacy_covering() -> Outcome {
    let g = 2;
    let mut count = 0;
    for a in full_symplectic_group(g).unwrap().iter() {
        let w = cover_witness(&a).map_err(|e| format!("{a:?}: {e}"))?;
        let y = oracle::mask(&w.y);
        let t = |x: u32| if oracle::pairing(y, x, g) { x ^ y } else { x };
        let values = oracle::reference_values(w.which);
        ensure(
            (1..=2 * g).all(|i| {
                let x = 1u32 << (i - 1);
                oracle::eval(values, t(oracle::apply(a.matrix(), t(x))), g)
                    == oracle::bit(values, i)
            }),
            || format!("certificate for {a:?} fails"),
        )?;
        ensure(!oracle::eval(values, y, g), || {
            format!("ω(y) ≠ 0 for {a:?}")
        })?;
        count += 1;
    }
    Ok(format!("{count} certified elements"))
}

fn fox_closed_form() -> Outcome {
    let mut count = 0;
    for g in 1..=2 {
        for c in 1..=3i64 {
            for phi in SpecialCovering::all(g, 2 * c).unwrap() {
                let m = derived_matrix(&phi).map_err(|e| e.to_string())?;
                let n = 2 * g + 1;
                // φ(u_i) − 1 is 0 or t − 1.
                let im = |i: usize| if phi.n(i) { (-1, 1) } else { (0, 0) };
                let neg = |(a, b): (i64, i64)| (-a, -b);
                let mut expected = vec![vec![(0i64, 0i64); n]; n];
                for i in 1..=2 * g {
                    expected[i - 1][i - 1] = (1, -1);
                    expected[n - 1][i - 1] = im(i);
                }
                for j in 1..=g {
                    expected[2 * j - 2][n - 1] = neg(im(2 * j));
                    expected[2 * j - 1][n - 1] = im(2 * j - 1);
                }
                expected[n - 1][n - 1] = (c, c);
                for i in 1..=n {
                    for j in 1..=n {
                        let e = m.get(i, j);
                        ensure((e.a, e.b) == expected[i - 1][j - 1], || {
                            format!("{phi:?} entry ({i},{j}) = {e}")
                        })?;
                    }
                }
                let nn: Vec<i64> = (1..=2 * g).map(|i| -(phi.n(i) as i64)).collect();
                let eps = |k: usize| {
                    if k.is_multiple_of(2) {
                        nn[k - 2]
                    } else {
                        -nn[k]
                    }
                };
                let sum: i64 = (1..=2 * g).map(|i| nn[i - 1] * eps(i)).sum();
                ensure(sum == 0, || format!("Σ n ε = {sum} for {phi:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} coverings"))
}

fn normal_form() -> Outcome {
    let mut count = 0;
    for g in 1..=2 {
        for c in 0..=4i64 {
            for phi in SpecialCovering::all(g, 2 * c).unwrap() {
                let vq = vq_basis_change(&phi).map_err(|e| e.to_string())?;
                let n = 2 * g + 1;
                let (p_q, p_v) = (oracle::entries(&vq.p_q), oracle::entries(&vq.p_v));
                let nf = oracle::entries(&vq.normal_form);
                let d = oracle::entries(&derived_matrix_mod2(&phi));
                ensure(
                    oracle::matmul(&p_q, &p_q) == oracle::identity(n)
                        && oracle::matmul(&p_v, &p_v) == oracle::identity(n),
                    || format!("basis change for {phi:?} is not an involution"),
                )?;
                ensure(
                    oracle::matmul(&p_v, &nf) == oracle::matmul(&d, &p_q),
                    || format!("P_V N ≠ D P_Q for {phi:?}"),
                )?;
                let mut expected = vec![vec![(false, false); n]; n];
                for (i, row) in expected.iter_mut().enumerate() {
                    if i < 2 * g || c % 2 == 1 {
                        row[i] = (true, true);
                    }
                }
                ensure(nf == expected, || format!("normal form of {phi:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} coverings, c = 0..4"))
}

fn main_theorem() -> Outcome {
    let mut counts = (0, 0);
    for (g, q) in [(1, 2), (1, 4), (2, 2)] {
        let group: Vec<SymplecticMatrix> = full_symplectic_group(g).unwrap().iter().collect();
        let s = QuadraticSection::zero(g);
        let all = SpecialCovering::all(g, q).unwrap();
        for phi in &all {
            let m = oracle::entries(&derived_matrix_mod2(phi));
            for phi2 in &all {
                let m2 = oracle::entries(&derived_matrix_mod2(phi2));
                let same = oracle::covering_arf(phi, &s) == oracle::covering_arf(phi2, &s);
                let witness = congruent(phi, phi2, &s).map_err(|e| e.to_string())?;
                ensure(witness.is_some() == same, || {
                    format!("g={g} q={q}: {phi:?} vs {phi2:?}")
                })?;
                let commutes = |a: &SymplecticMatrix, theta: &GroupRingMatrix2| {
                    let psi = oracle::constant(j_embed(a, &s).unwrap().matrix());
                    let theta = oracle::entries(theta);
                    oracle::matmul(&psi, &m) == oracle::matmul(&m2, &theta)
                        && oracle::invertible(&theta)
                };
                match witness {
                    Some(w) => {
                        ensure(commutes(&w.a, &w.theta.matrix()), || {
                            format!("witness for {phi:?}, {phi2:?} fails")
                        })?;
                        counts.0 += 1;
                    }
                    None => {
                        let found = group.iter().any(|a| {
                            let theta = congruence_theta(a, phi, phi2).unwrap().matrix();
                            commutes(a, &theta)
                        });
                        ensure(!found, || format!("missed witness {phi:?}, {phi2:?}"))?;
                        counts.1 += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} congruent pairs verified, {} non-congruent pairs confirmed",
        counts.0, counts.1
    ))
}

fn star_product_criteria() -> Outcome {
    let mut checked = 0;
    for q in [2i64, 4] {
        let phi = SpecialCovering::trivial(1, q).unwrap();
        let basis = HphiElement::basis(1, q);
        let ds: Vec<GroupRingElement2> = if q == 2 {
            vec![GroupRingElement2::ZERO, GroupRingElement2::ONE]
        } else {
            GroupRingElement2::ALL.to_vec()
        };
        for a in 0..16u32 {
            let a = BitMatrix::parse(2, 2, &format!("{a:04b}")).unwrap();
            for b in BitVector::all(2) {
                for c in BitVector::all(2) {
                    for &d in &ds {
                        let psi = PsiMatrix {
                            a: a.clone(),
                            b: b.clone(),
                            c: c.clone(),
                            d,
                        };
                        let brute = basis.iter().all(|x| {
                            basis.iter().all(|y| {
                                let (px, py) = (psi.apply(x).unwrap(), psi.apply(y).unwrap());
                                star_product(&px, &py, &phi).unwrap()
                                    == star_product(x, y, &phi).unwrap()
                            })
                        });
                        ensure(brute == psi_respects_product(&psi).unwrap(), || {
                            format!("q={q}: {psi:?}")
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    let group: Vec<SymplecticMatrix> = full_symplectic_group(1).unwrap().iter().collect();
    let mut triples = 0;
    for q in [2, 4] {
        let all = SpecialCovering::all(1, q).unwrap();
        for s in QuadraticSection::all(1) {
            for phi in &all {
                for phi2 in &all {
                    for a in &group {
                        ensure(
                            is_quotient(a, phi, phi2, &s).unwrap()
                                == s_related(phi, phi2, a, &s).unwrap(),
                            || format!("{a:?}, {phi:?}, {phi2:?}, r={}", s.r()),
                        )?;
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{checked} block choices, {triples} quotient triples"
    ))
}

fn change_of_generators() -> Outcome {
    let mut count = 0;
    for g in 1..=2 {
        let n = 2 * g + 1;
        for c in 1..=2i64 {
            for phi in SpecialCovering::all(g, 2 * c).unwrap() {
                let m = oracle::entries(&derived_matrix_mod2(&phi));
                for alpha in BitVector::all(2 * g) {
                    let change = change_generators(&phi, &alpha).map_err(|e| e.to_string())?;
                    // ∂u_k/∂u′_k = t^{α_k}, ∂u_k/∂u′₀ = α_k, u₀ = u′₀.
                    let mut cm = oracle::identity(n);
                    for k in 1..=2 * g {
                        let a = alpha.get(k);
                        cm[k - 1][k - 1] = (!a, a);
                        cm[n - 1][k - 1] = (a, false);
                    }
                    ensure(oracle::entries(&change.c_matrix) == cm, || {
                        format!("C for {phi:?}, α={alpha}")
                    })?;
                    ensure(
                        oracle::matmul(&cm, &m) == oracle::entries(&change.m_prime),
                        || format!("M′ ≠ φ(C)M for {phi:?}, α={alpha}"),
                    )?;
                    ensure(
                        oracle::mask(change.phi2.bits())
                            == oracle::mask(phi.bits()) ^ oracle::mask(&alpha),
                        || format!("φ′ for {phi:?}, α={alpha}"),
                    )?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} (φ, α) pairs"))
}

fn sp0_vector_orbit_sets() -> Outcome {
    let mut sizes = Vec::new();
    for g in 1..=3 {
        let (o0, o1) = sp0_vector_orbits(g).map_err(|e| e.to_string())?;
        let got0: BTreeSet<u32> = o0.iter().map(oracle::mask).collect();
        let got1: BTreeSet<u32> = o1.iter().map(oracle::mask).collect();
        let h0: BTreeSet<u32> = (1..1u32 << (2 * g))
            .filter(|&x| !oracle::eval(0, x, g))
            .collect();
        let h1: BTreeSet<u32> = (1..1u32 << (2 * g))
            .filter(|&x| oracle::eval(0, x, g))
            .collect();
        ensure(got0 == h0 && o0.len() == h0.len(), || {
            format!("g={g}: orbit of e₁")
        })?;
        ensure(got1 == h1 && o1.len() == h1.len(), || {
            format!("g={g}: orbit of e₁+e₂")
        })?;
        sizes.push(format!("({}, {})", h0.len(), h1.len()));
    }
    Ok(format!("sizes {}", sizes.join(" ")))
}

/// Pads a `u32` mask into a vector, coordinate `i` from bit `i − 1`.
trait FromMask {
    fn from_lex_bits(mask: u32, len: usize) -> BitVector;
}

impl FromMask for BitVector {
    fn from_lex_bits(mask: u32, len: usize) -> BitVector {
        let bits: Vec<bool> = (1..=len).map(|i| oracle::bit(mask, i)).collect();
        BitVector::from_bits(&bits)
    }
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 11] = [
        ("orbit census", orbit_census, secs(5)),
        ("Arf classification", arf_classification, secs(30)),
        ("stabilizer generators", generator_theorems, secs(60)),
        ("symplectic group orders", group_orders, secs(120)),
        ("conjugacy covering", conjugacy_covering, None),
        ("Fox engine vs closed form", fox_closed_form, None),
        ("normal form and module structure", normal_form, None),
        ("congruence iff equal Arf", main_theorem, secs(600)),
        ("star product", star_product_criteria, None),
        ("change of generators", change_of_generators, None),
        ("Sp0 orbits of e1 and e1+e2", sp0_vector_orbit_sets, None),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.2?}, budget {b:.0?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("pass", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!(
            "criterion {:>2} [{tag}] {name}: {detail} ({elapsed:.2?})",
            k + 1
        );
        failed += outcome.is_err() as usize;
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
