use std::ops::RangeInclusive;

use arfcover::congruence::{congruent, witness_sides, WitnessMethod};
use arfcover::covering::{omega_of, orbits_with, QuadraticSection, SpecialCovering};
use arfcover::fox::{
    closed_form_matrix, derived_matrix, derived_matrix_mod2, module_structure, vq_basis_change,
};
use arfcover::group_ring::{GroupRingElement2, GroupRingMatrix2};
use arfcover::quadform::{even_count, odd_count};
use arfcover::stabilizers::{cover_witness, membership, sp_generators};
use arfcover::suites::run_suite;
use arfcover::symplectic::{SymplecticMatrix, MAX_ENUM_GENUS};
use arfcover::{BitMatrix, Error, Result};

use crate::report::{Item, Parameters, ReportDocument, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoxMode {
    Integral,
    Mod2,
    Vq,
}

fn check_genus(genus: usize) -> Result<()> {
    if genus == 0 || genus > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfRange {
            genus,
            min: 1,
            max: MAX_ENUM_GENUS,
        });
    }
    Ok(())
}

fn bit_rows(m: &BitMatrix) -> Vec<Vec<String>> {
    m.row_strings()
        .into_iter()
        .map(|r| r.chars().map(String::from).collect())
        .collect()
}

fn params(genus: usize, chern: Option<i64>, section: Option<&QuadraticSection>) -> Parameters {
    Parameters {
        genus: Some(genus),
        chern,
        section: section.map(|s| s.r().to_string()),
        extra: Default::default(),
    }
}

/// Resolves `--section`/`--johnson` into a section of the given genus.
pub fn section(genus: usize, bits: Option<&str>, johnson: bool) -> Result<QuadraticSection> {
    let s = match (bits, johnson) {
        (Some(_), true) => {
            return Err(Error::InvalidBits(
                "--section and --johnson are exclusive".into(),
            ))
        }
        (Some(b), false) => QuadraticSection::parse(b)?,
        (None, true) => QuadraticSection::johnson(genus),
        (None, false) => QuadraticSection::zero(genus),
    };
    if s.genus() != genus {
        return Err(Error::InvalidBits(format!(
            "section needs {} bits, got {}",
            2 * genus,
            s.r().len()
        )));
    }
    Ok(s)
}

pub fn orbits(
    command: String,
    genus: usize,
    chern: i64,
    s: &QuadraticSection,
    parallel: bool,
) -> Result<ReportDocument> {
    check_genus(genus)?;
    let partition = orbits_with(genus, chern, s, parallel)?;
    let mut doc = ReportDocument::new(command, params(genus, Some(chern), Some(s)));
    for class in &partition.classes {
        doc.results.push(Item::Orbit {
            arf: class.arf as u8,
            size: class.members.len(),
            members: class.members.iter().map(|p| p.bits().to_string()).collect(),
        });
    }
    let expected = vec![even_count(genus) as usize, odd_count(genus) as usize];
    let mut sizes = Verdict::new("orbit sizes", partition.sizes() == expected);
    sizes.detail = format!("{:?}", partition.sizes());
    if sizes.verdict == crate::report::Outcome::Fail {
        sizes.counterexample = Some(format!("expected {expected:?}"));
    }
    doc.verdicts.push(sizes);
    if partition.action_checked {
        doc.verdicts
            .push(Verdict::new("arf partition equals action orbits", true));
    }
    Ok(doc)
}

pub fn fox(
    command: String,
    genus: usize,
    chern: i64,
    bits: &str,
    mode: FoxMode,
) -> Result<ReportDocument> {
    let phi = SpecialCovering::parse(genus, chern, bits)?;
    let mut p = params(genus, Some(chern), None);
    p.extra.insert("covering".into(), bits.into());
    let mut doc = ReportDocument::new(command, p);
    match mode {
        FoxMode::Integral => {
            let m = derived_matrix(&phi)?;
            doc.matrix("derived matrix over Z[Z2]", m.render_rows());
            doc.verdicts.push(Verdict::new(
                "engine equals closed form",
                m == closed_form_matrix(&phi),
            ));
        }
        FoxMode::Mod2 => {
            doc.matrix(
                "derived matrix over Z2[Z2]",
                derived_matrix_mod2(&phi).render_rows(),
            );
        }
        FoxMode::Vq => {
            let vq = vq_basis_change(&phi)?;
            doc.matrix("normal form", vq.normal_form.render_rows());
            doc.matrix("P_Q", vq.p_q.render_rows());
            doc.matrix("P_V", vq.p_v.render_rows());
            let descriptor = module_structure(&phi);
            doc.value("module mod 2", descriptor.mod2_string());
            doc.value("module", descriptor.integral_string());
            let n = 2 * genus + 1;
            let mut diag = vec![GroupRingElement2::ONE_PLUS_T; n];
            if phi.c() % 2 == 0 {
                diag[n - 1] = GroupRingElement2::ZERO;
            }
            doc.verdicts.push(Verdict::new(
                "normal form",
                vq.normal_form == GroupRingMatrix2::diagonal(&diag),
            ));
        }
    }
    Ok(doc)
}

pub fn congruent_cmd(
    command: String,
    genus: usize,
    chern: i64,
    bits: &str,
    bits2: &str,
    s: &QuadraticSection,
) -> Result<ReportDocument> {
    check_genus(genus)?;
    let phi = SpecialCovering::parse(genus, chern, bits)?;
    let phi2 = SpecialCovering::parse(genus, chern, bits2)?;
    let mut p = params(genus, Some(chern), Some(s));
    p.extra.insert("phi".into(), bits.into());
    p.extra.insert("phi2".into(), bits2.into());
    let mut doc = ReportDocument::new(command, p);
    let arf = omega_of(&phi, s)?.arf() as u8;
    let arf2 = omega_of(&phi2, s)?.arf() as u8;
    doc.value("arf", format!("{arf} vs {arf2}"));
    match congruent(&phi, &phi2, s)? {
        None => doc.value("congruent", "no"),
        Some(w) => {
            doc.value("congruent", "yes");
            let method = match w.method {
                WitnessMethod::GroupSearch => "group search",
                WitnessMethod::ArfShortcut => "arf shortcut",
            };
            doc.value("method", method);
            doc.matrix("a", bit_rows(w.a.matrix()));
            doc.matrix("theta", w.theta.matrix().render_rows());
            let (l, r) = witness_sides(&w, &phi, &phi2, s)?;
            doc.matrix("psi D_phi", l.render_rows());
            doc.matrix("D_phi2 theta", r.render_rows());
            doc.verdicts.push(Verdict::new("diagram commutes", l == r));
        }
    }
    Ok(doc)
}

pub fn sp(command: String, genus: usize, parallel: bool) -> Result<ReportDocument> {
    check_genus(genus)?;
    let mut doc = ReportDocument::new(command, params(genus, None, None));
    let report = run_suite("generators", genus..=genus, parallel)?;
    for c in &report.checks {
        if !c.detail.is_empty() {
            doc.value(&c.name, &c.detail);
        }
    }
    for which in 0..=1u8 {
        for (k, a) in sp_generators(which, genus)?.iter().enumerate() {
            doc.matrix(
                &format!("Sp{which} generator {}", k + 1),
                bit_rows(a.matrix()),
            );
        }
    }
    doc.verdicts
        .extend(report.checks.into_iter().map(|c| Verdict {
            name: c.name,
            verdict: if c.passed {
                crate::report::Outcome::Pass
            } else {
                crate::report::Outcome::Fail
            },
            genus: None,
            detail: String::new(),
            counterexample: c.counterexample,
        }));
    Ok(doc)
}

pub fn witness(command: String, genus: usize, bits: &str) -> Result<ReportDocument> {
    check_genus(genus)?;
    let n = 2 * genus;
    if bits.len() != n * n {
        return Err(Error::InvalidBits(format!(
            "matrix needs {} bits, got {}",
            n * n,
            bits.len()
        )));
    }
    let a = SymplecticMatrix::new(BitMatrix::parse(n, n, bits)?)?;
    let mut p = params(genus, None, None);
    p.extra.insert("matrix".into(), bits.into());
    let mut doc = ReportDocument::new(command, p);
    let w = cover_witness(&a)?;
    doc.value("which", w.which);
    doc.value("y", &w.y);
    doc.value("fixed form values", w.fixed_form.basis_values());
    let t = SymplecticMatrix::transvection(&w.y)?;
    let conj = t.mul(&a)?.mul(&t)?;
    doc.matrix("T_y a T_y", bit_rows(conj.matrix()));
    doc.verdicts.push(Verdict::new(
        format!("T_y a T_y fixes omega{}", w.which),
        membership(&conj, w.which)?,
    ));
    Ok(doc)
}

/// `"2"`, `"1..3"` or `"1..=3"`; both range forms are inclusive.
pub fn parse_genus_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidBits(format!("genus range {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let range = match text.split_once("..") {
        None => num(text).map(|g| g..=g)?,
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
    };
    if range.is_empty() {
        return Err(bad());
    }
    check_genus(*range.start())?;
    check_genus(*range.end())?;
    Ok(range)
}

pub fn verify(
    command: String,
    suite: &str,
    genera: RangeInclusive<usize>,
    parallel: bool,
) -> Result<ReportDocument> {
    let mut p = Parameters::default();
    p.extra.insert("suite".into(), suite.into());
    p.extra.insert(
        "genera".into(),
        format!("{}..={}", genera.start(), genera.end()),
    );
    let mut doc = ReportDocument::new(command, p);
    let report = run_suite(suite, genera, parallel)?;
    for c in report.checks {
        let mut v = Verdict::new(format!("{}: {}", c.suite, c.name), c.passed);
        v.genus = Some(c.genus);
        v.detail = c.detail;
        v.counterexample = c.counterexample;
        doc.verdicts.push(v);
    }
    Ok(doc)
}
