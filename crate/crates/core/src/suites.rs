//! Named verification suites, each a list of exact checks over a range of
//! genera. Used by the command-line `verify` command.

use std::ops::RangeInclusive;

use crate::congruence::{
    congruent, diagram_commutes, is_quotient, product_violation, psi_respects_product,
    witness_sides, PsiMatrix,
};
use crate::covering::{act, omega_of, orbits, s_related, QuadraticSection, SpecialCovering};
use crate::error::{Error, Result};
use crate::fox::{
    change_generators, closed_form_matrix, covering_images, derived_matrix, derived_matrix_mod2,
    fundamental_identity_holds, n_epsilon_sum, vq_basis_change, Presentation,
};
use crate::gf2::{BitMatrix, BitVector};
use crate::group_ring::{GroupRingElement2, GroupRingMatrix2};
use crate::quadform::{even_count, odd_count, polarization_holds, QuadraticForm};
use crate::stabilizers::{alpha_set, cover_witness, membership, sp0_vector_orbits, StabilizerSpec};
use crate::symplectic::{
    classical_order, full_symplectic_group_with, SpGroup, SymplecticMatrix, MAX_ENUM_GENUS,
};

pub const SUITES: [&str; 8] = [
    "arf",
    "orbits",
    "generators",
    "cover",
    "fox",
    "congruence",
    "star",
    "all",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub genus: usize,
    pub passed: bool,
    /// Values worth reporting, e.g. closure orders.
    pub detail: String,
    /// First failing input, if any.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

struct Ctx<'a> {
    suite: &'a str,
    genus: usize,
    out: &'a mut Vec<Check>,
}

impl Ctx<'_> {
    fn record(&mut self, name: &str, detail: String, counterexample: Option<String>) {
        self.out.push(Check {
            suite: self.suite.to_string(),
            name: name.to_string(),
            genus: self.genus,
            passed: counterexample.is_none(),
            detail,
            counterexample,
        });
    }
}

/// Runs a suite (or `all`) for every genus in `genera`.
pub fn run_suite(name: &str, genera: RangeInclusive<usize>, parallel: bool) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if *genera.start() == 0 || *genera.end() > MAX_ENUM_GENUS || genera.is_empty() {
        return Err(Error::GenusOutOfRange {
            genus: *genera.end(),
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    let names: Vec<&str> = if name == "all" {
        SUITES[..SUITES.len() - 1].to_vec()
    } else {
        vec![name]
    };
    let mut report = SuiteReport::default();
    for g in genera {
        let group = full_symplectic_group_with(g, parallel)?;
        for &suite in &names {
            let mut ctx = Ctx {
                suite,
                genus: g,
                out: &mut report.checks,
            };
            match suite {
                "arf" => arf_suite(&mut ctx, &group)?,
                "orbits" => orbit_suite(&mut ctx)?,
                "generators" => generator_suite(&mut ctx, &group)?,
                "cover" => cover_suite(&mut ctx, &group)?,
                "fox" => fox_suite(&mut ctx)?,
                "congruence" => congruence_suite(&mut ctx)?,
                "star" => star_suite(&mut ctx, &group)?,
                _ => unreachable!(),
            }
        }
    }
    Ok(report)
}

/// Elements used for checks that are exhaustive at `g ≤ 2` and sampled at `g = 3`.
fn sample(group: &SpGroup) -> Vec<SymplecticMatrix> {
    let step = if group.genus() <= 2 { 1 } else { 9973 };
    group.iter().step_by(step).collect()
}

fn first<T: std::fmt::Debug>(
    mut it: impl Iterator<Item = Result<Option<T>>>,
) -> Result<Option<String>> {
    it.try_fold(None, |acc, x| Ok(acc.or(x?.map(|v| format!("{v:?}")))))
}

fn arf_suite(ctx: &mut Ctx, group: &SpGroup) -> Result<()> {
    let g = ctx.genus;
    let forms: Vec<QuadraticForm> = QuadraticForm::all(g).collect();
    let vectors: Vec<BitVector> = BitVector::all(2 * g).collect();

    let mut bad = None;
    'outer: for w in &forms {
        for x in &vectors {
            for y in &vectors {
                if !polarization_holds(w, x, y)? {
                    bad = Some(format!("{w:?} at {x}, {y}"));
                    break 'outer;
                }
            }
        }
    }
    ctx.record("polarization", String::new(), bad);

    let elements = sample(group);
    let bad = first(forms.iter().flat_map(|w| {
        elements.iter().map(move |a| {
            let v = w.compose(a)?;
            Ok((v.arf() != w.arf()).then(|| (w.clone(), a.clone())))
        })
    }))?;
    ctx.record(
        "arf invariance",
        format!("{} elements", elements.len()),
        bad,
    );

    let bad = first(forms.iter().flat_map(|w| {
        forms.iter().map(move |w2| {
            let v = w.difference_vector(w2)?;
            Ok(((w2.arf() ^ w.arf()) != w.evaluate(&v)?).then(|| (w.clone(), w2.clone())))
        })
    }))?;
    ctx.record("arf difference identity", String::new(), bad);

    if g <= 2 {
        let s = QuadraticSection::zero(g);
        let all = SpecialCovering::all(g, 2)?;
        let mut bad = None;
        for phi2 in &all {
            let reached: std::collections::BTreeSet<SpecialCovering> = group
                .iter()
                .map(|a| act(&a, phi2, &s))
                .collect::<Result<_>>()?;
            for phi in &all {
                let related = reached.contains(phi);
                let same = omega_of(phi, &s)?.arf() == omega_of(phi2, &s)?.arf();
                if related != same && bad.is_none() {
                    bad = Some(format!("{phi:?} vs {phi2:?}"));
                }
            }
        }
        ctx.record(
            "s-relation iff equal arf",
            format!("{} pairs", all.len() * all.len()),
            bad,
        );
    }
    Ok(())
}

fn orbit_suite(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.genus;
    let expected = vec![even_count(g) as usize, odd_count(g) as usize];
    let sections: Vec<QuadraticSection> = match g {
        1 => QuadraticSection::all(1).collect(),
        _ => vec![QuadraticSection::zero(g), QuadraticSection::johnson(g)],
    };
    for q in [2, 4] {
        let mut bad = None;
        let mut checked = false;
        for s in &sections {
            let p = orbits(g, q, s)?;
            checked |= p.action_checked;
            if p.sizes() != expected && bad.is_none() {
                bad = Some(format!("q={q} r={} sizes {:?}", s.r(), p.sizes()));
            }
        }
        ctx.record(
            &format!("orbit sizes q={q}"),
            format!("{expected:?}, action cross-check: {checked}"),
            bad,
        );
    }
    Ok(())
}

fn generator_suite(ctx: &mut Ctx, group: &SpGroup) -> Result<()> {
    let g = ctx.genus;
    let order = group.order();
    let classical = classical_order(g);
    ctx.record(
        "group order",
        format!("{order}"),
        (order as u128 != classical).then(|| format!("closure {order} vs formula {classical}")),
    );
    for which in 0..=1u8 {
        let sub = StabilizerSpec::new(which, g)?.closure()?;
        let expected = if which == 0 {
            even_count(g)
        } else {
            odd_count(g)
        } as usize;
        let mut bad = (sub.order() * expected != order)
            .then(|| format!("order {} times orbit {expected} ≠ {order}", sub.order()));
        if g <= 2 && bad.is_none() {
            let fixing = group
                .iter()
                .filter(|a| membership(a, which).unwrap_or(false))
                .count();
            if fixing != sub.order() {
                bad = Some(format!(
                    "closure {} vs fixing subgroup {fixing}",
                    sub.order()
                ));
            }
        }
        ctx.record(
            &format!("Sp{which} generators"),
            format!("{}", sub.order()),
            bad,
        );
    }
    let (o0, o1) = sp0_vector_orbits(g)?;
    let (h0, h1) = (even_count(g) as usize - 1, odd_count(g) as usize);
    ctx.record(
        "Sp0 transitivity",
        format!("{} and {}", o0.len(), o1.len()),
        (o0.len() != h0 || o1.len() != h1).then(|| format!("expected {h0} and {h1}")),
    );
    let (a0, a1) = (alpha_set(0, g)?.len(), alpha_set(1, g)?.len());
    ctx.record(
        "alpha set sizes",
        format!("{a0} and {a1}"),
        (a0 != even_count(g) as usize || a1 != odd_count(g) as usize).then(|| "mismatch".into()),
    );
    Ok(())
}

fn cover_suite(ctx: &mut Ctx, group: &SpGroup) -> Result<()> {
    let elements = sample(group);
    let mut bad = None;
    let mut counts = [0usize; 2];
    for a in &elements {
        match cover_witness(a) {
            Ok(w) => counts[w.which as usize] += 1,
            Err(e) => {
                bad = Some(format!("{a:?}: {e}"));
                break;
            }
        }
    }
    ctx.record(
        "conjugacy covering",
        format!(
            "{} elements, {} in conjugates of Sp0, {} of Sp1",
            elements.len(),
            counts[0],
            counts[1]
        ),
        bad,
    );
    Ok(())
}

fn fox_suite(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.genus;
    let mut bad = None;
    let mut nf_bad = None;
    let mut cg_bad = None;
    let plus = GroupRingElement2::ONE_PLUS_T;
    for c in 1..=4i64 {
        for phi in SpecialCovering::all(g, 2 * c)? {
            if c <= 3 {
                let m = derived_matrix(&phi)?;
                if m != closed_form_matrix(&phi)
                    || m.mod2() != derived_matrix_mod2(&phi)
                    || n_epsilon_sum(&phi) != 0
                {
                    bad.get_or_insert(format!("{phi:?}"));
                }
                let images = covering_images(&phi);
                for r in &Presentation::new(g, 2 * c).relators {
                    if !fundamental_identity_holds(r, &images)? {
                        bad.get_or_insert(format!("fundamental identity {phi:?}"));
                    }
                }
            }
            let vq = vq_basis_change(&phi)?;
            let mut diag = vec![plus; 2 * g + 1];
            if c % 2 == 0 {
                diag[2 * g] = GroupRingElement2::ZERO;
            }
            if vq.normal_form != GroupRingMatrix2::diagonal(&diag) {
                nf_bad.get_or_insert(format!("{phi:?}"));
            }
            if g <= 2 && c <= 2 {
                for alpha in BitVector::all(2 * g) {
                    if let Err(e) = change_generators(&phi, &alpha) {
                        cg_bad.get_or_insert(format!("{phi:?} α={alpha}: {e}"));
                    }
                }
            }
        }
    }
    ctx.record("engine equals closed form", "c = 1..3".into(), bad);
    ctx.record("normal form", "c = 1..4".into(), nf_bad);
    if g <= 2 {
        ctx.record("change of generators", "c = 1..2".into(), cg_bad);
    }
    Ok(())
}

fn congruence_suite(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.genus;
    if g > 2 {
        return Ok(());
    }
    let chern: &[i64] = if g == 1 { &[2, 4] } else { &[2] };
    for &q in chern {
        let s = QuadraticSection::zero(g);
        let all = SpecialCovering::all(g, q)?;
        let mut bad = None;
        let mut found = 0;
        for phi in &all {
            for phi2 in &all {
                let w = congruent(phi, phi2, &s)?;
                let same = omega_of(phi, &s)?.arf() == omega_of(phi2, &s)?.arf();
                if let Some(w) = &w {
                    found += 1;
                    let (l, r) = witness_sides(w, phi, phi2, &s)?;
                    if l != r
                        || !w.theta.matrix().is_invertible()?
                        || !diagram_commutes(&w.a, &w.theta, phi, phi2, &s)?
                    {
                        bad.get_or_insert(format!("bad witness for {phi:?}, {phi2:?}"));
                    }
                }
                if w.is_some() != same {
                    bad.get_or_insert(format!("{phi:?} vs {phi2:?}"));
                }
            }
        }
        ctx.record(
            &format!("congruence iff equal arf q={q}"),
            format!("{found} congruent pairs"),
            bad,
        );
    }
    Ok(())
}

fn star_suite(ctx: &mut Ctx, group: &SpGroup) -> Result<()> {
    let g = ctx.genus;
    if g == 1 {
        for q in [2, 4] {
            let phi = SpecialCovering::trivial(1, q)?;
            let ds: &[GroupRingElement2] = if q == 2 {
                &[GroupRingElement2::ZERO, GroupRingElement2::ONE]
            } else {
                &GroupRingElement2::ALL
            };
            let mut bad = None;
            for bits in BitVector::all(4) {
                let a = BitMatrix::parse(2, 2, &bits.to_string())?;
                for b in BitVector::all(2) {
                    for c in BitVector::all(2) {
                        for &d in ds {
                            let psi = PsiMatrix {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                                d,
                            };
                            let brute = product_violation(&psi, &phi)?.is_none();
                            if brute != psi_respects_product(&psi)? {
                                bad.get_or_insert(format!("{psi:?}"));
                            }
                        }
                    }
                }
            }
            ctx.record(&format!("product criterion q={q}"), String::new(), bad);
        }
    }
    let s = QuadraticSection::zero(g);
    let elements = sample(group);
    let all = SpecialCovering::all(g, 2)?;
    let pairs: Vec<(&SpecialCovering, &SpecialCovering)> = if g == 1 {
        all.iter()
            .flat_map(|p| all.iter().map(move |q| (p, q)))
            .collect()
    } else {
        all.iter()
            .step_by(5)
            .flat_map(|p| all.iter().step_by(3).map(move |q| (p, q)))
            .collect()
    };
    let mut bad = None;
    for (phi, phi2) in &pairs {
        for a in &elements {
            if is_quotient(a, phi, phi2, &s)? != s_related(phi, phi2, a, &s)? {
                bad.get_or_insert(format!("{a:?}, {phi:?}, {phi2:?}"));
            }
        }
    }
    ctx.record(
        "quotient iff s-related",
        format!("{} pairs", pairs.len()),
        bad,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_genus_1() {
        let report = run_suite("all", 1..=1, false).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.checks.len() > 10);
    }

    #[test]
    fn generator_orders_at_genus_2() {
        let report = run_suite("generators", 2..=2, false).unwrap();
        let details: Vec<&str> = report.checks.iter().map(|c| c.detail.as_str()).collect();
        assert!(details.contains(&"72") && details.contains(&"120"));
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", 1..=1, false).is_err());
        assert!(run_suite("arf", 1..=4, false).is_err());
    }
}
