//! Acceptance criteria. Each test prints one `PASS` or `FAIL` line (written
//! straight to stdout so it shows even when output capture is on) and then
//! asserts the criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use quandle_aut::construct::{conj_m, core, dihedral_quandle};
use quandle_aut::group::constructors::*;
use quandle_aut::harness::{
    check_alex, check_alex_semidirect, check_conj_aaut_intersection, check_core, check_core_abelian_full,
    check_core_corollaries, check_f_props, check_pi_anti, check_pi_aut, check_qi, commutator_central_exponent_3,
    oracle_agreement, quandles_from, run_census, Catalog, CensusConfig, GroupData, DEFAULT_M_RANGE,
};
use quandle_aut::maps::enumerate_aut;
use quandle_aut::morphisms::{
    enumerate_quandle_antis, enumerate_quandle_antis_oracle, enumerate_quandle_auts, enumerate_quandle_auts_oracle,
    satisfies,
};
use quandle_aut::{Caps, FiniteGroup, Relationship, Target, Verdict};

const DIHEDRAL_AUT_BUDGET: Duration = Duration::from_secs(5);
const DIHEDRAL_ANTI_BUDGET: Duration = Duration::from_secs(5);
const CONJ_ORACLE_BUDGET: Duration = Duration::from_secs(30);
const CORE_Z3XZ3_BUDGET: Duration = Duration::from_secs(60);
const CENSUS_BUDGET: Duration = Duration::from_secs(300);

fn report(id: u32, name: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{} criterion {id:02} {name}: {}", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
    pass
}

fn catalog() -> Vec<FiniteGroup> {
    Catalog::standard(&Caps::default()).unwrap().groups
}

fn data(g: FiniteGroup) -> GroupData {
    GroupData::new(g, &Caps::default()).unwrap()
}

fn totient(n: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    (1..=n).filter(|&k| gcd(n, k) == 1).count()
}

fn leaves(v: &Verdict) -> Vec<&Verdict> {
    if v.parts.is_empty() {
        vec![v]
    } else {
        v.parts.iter().flat_map(leaves).collect()
    }
}

/// Disagreements summed over the two-sided and structural leaves; the
/// `-forward` implication parts are reported separately by the harness.
fn iff_disagreements(v: &Verdict) -> usize {
    leaves(v)
        .into_iter()
        .filter(|l| l.skipped.is_none() && l.relationship != Relationship::Implies)
        .map(|l| l.disagreements)
        .sum()
}

fn first_failure(vs: &[Verdict]) -> String {
    vs.iter()
        .flat_map(|v| leaves(v))
        .find(|l| l.failed() && l.relationship != Relationship::Implies)
        .map(|l| {
            let c = l.counterexample.as_ref().map(|c| c.detail.clone()).unwrap_or_default();
            format!("first failure {} ({}) lhs={} rhs={}: {c}", l.theorem_id, l.inputs, l.lhs, l.rhs)
        })
        .unwrap_or_default()
}

#[test]
fn criterion_01_dihedral_automorphism_counts() {
    let caps = Caps::default();
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=10 {
        let q = dihedral_quandle(n).unwrap();
        let auts = enumerate_quandle_auts(&q, &caps).unwrap();
        if auts.len() != n * totient(n) {
            bad.push(format!("R{n}: {} != {}", auts.len(), n * totient(n)));
        }
        if n <= 7 && auts != enumerate_quandle_auts_oracle(&q, &caps).unwrap() {
            bad.push(format!("R{n}: oracle disagrees"));
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < DIHEDRAL_AUT_BUDGET;
    assert!(report(1, "dihedral-aut-counts", pass, format!("n=3..10, {elapsed:.2?} (budget {DIHEDRAL_AUT_BUDGET:?}) {bad:?}")));
}

#[test]
fn criterion_02_dihedral_quandles_have_no_antiautomorphisms() {
    let caps = Caps::default();
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 4..=10 {
        let antis = enumerate_quandle_antis(&dihedral_quandle(n).unwrap(), &caps).unwrap();
        if !antis.is_empty() {
            bad.push(format!("R{n}: {} antiautomorphisms", antis.len()));
        }
    }
    let r3 = dihedral_quandle(3).unwrap();
    let antis = enumerate_quandle_antis(&r3, &caps).unwrap();
    if antis.len() != 6 || antis != enumerate_quandle_auts(&r3, &caps).unwrap() {
        bad.push(format!("R3: {} antiautomorphisms, not equal to Aut(R3)", antis.len()));
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < DIHEDRAL_ANTI_BUDGET;
    assert!(report(2, "dihedral-no-anti", pass, format!("{elapsed:.2?} (budget {DIHEDRAL_ANTI_BUDGET:?}) {bad:?}")));
}

#[test]
fn criterion_03_conjugation_quandles_have_no_antiautomorphisms() {
    let caps = Caps::default();
    let start = Instant::now();
    let mut scanned = 0;
    let mut bad = Vec::new();
    for g in catalog().into_iter().filter(|g| (2..=7).contains(&g.order())) {
        for m in [0, 1, 2] {
            let q = conj_m(&g, m).unwrap();
            scanned += 1;
            let antis = enumerate_quandle_antis_oracle(&q, &caps).unwrap();
            if !antis.is_empty() {
                bad.push(format!("{} m={m}", g.label()));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < CONJ_ORACLE_BUDGET;
    assert!(report(3, "conj-no-anti", pass, format!("{scanned} quandles by full bijection scan, {elapsed:.2?} (budget {CONJ_ORACLE_BUDGET:?}) {bad:?}")));
}

#[test]
fn criterion_04_conjugation_intersection_predicate() {
    let mut verdicts = Vec::new();
    for g in catalog().into_iter().filter(|g| g.order() <= 24) {
        let d = data(g);
        for m in DEFAULT_M_RANGE {
            verdicts.push(check_conj_aaut_intersection(&d, m).unwrap());
        }
    }
    let disagreements: usize = verdicts.iter().map(iff_disagreements).sum();
    let positive = verdicts.iter().filter(|v| v.lhs).count();
    let detail = format!("{} instances, {positive} with an inducing antiautomorphism, {disagreements} disagreements", verdicts.len());
    assert!(report(4, "conj-aaut-intersection", disagreements == 0, detail));
}

#[test]
fn criterion_05_centerless_conjugation_automorphisms() {
    let caps = Caps::default();
    let s3 = symmetric(3).unwrap();
    let quandle = enumerate_quandle_auts(&conj_m(&s3, 1).unwrap(), &caps).unwrap().len();
    let group = enumerate_aut(&s3, &caps).unwrap().len();
    assert!(report(5, "conj-s3-automorphisms", quandle == 6 && group == 6, format!("|Aut(Conj(S3))| = {quandle}, |Aut(S3)| = {group}")));
}

#[test]
fn criterion_06_core_suite() {
    let mut bad = Vec::new();
    let mut positives = Vec::new();
    for g in catalog() {
        let d = data(g);
        let core_q = core(&d.group).unwrap();
        let v = check_core(&d).unwrap();
        if !v.holds {
            bad.push(first_failure(std::slice::from_ref(&v)));
        }
        let c = check_core_corollaries(&d).unwrap();
        if c.failed() {
            bad.push(first_failure(std::slice::from_ref(&c)));
        }
        let exists = d.auts.iter().chain(&d.aauts).any(|f| satisfies(&core_q, f, Target::Anti).unwrap());
        if exists != (d.group.exponent() == 3) {
            bad.push(format!("{}: existence {exists}, exponent {}", d.label, d.group.exponent()));
        }
        if exists {
            positives.push(d.label.clone());
        }
    }
    let pass = bad.is_empty() && positives.contains(&"heisenberg3".to_string()) && positives.contains(&"Z3".to_string());
    assert!(report(6, "core-suite", pass, format!("positive cases {positives:?} {bad:?}")));
}

#[test]
fn criterion_07_f_structure() {
    let caps = Caps::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in [cyclic(4).unwrap(), symmetric(3).unwrap(), dihedral(4).unwrap(), quaternion8().unwrap()] {
        let d = data(g);
        for phi in &d.auts {
            let v = check_f_props(&d, phi, &caps).unwrap();
            checked += 1;
            if !v.holds {
                bad.push(first_failure(std::slice::from_ref(&v)));
            }
        }
    }
    assert!(report(7, "f-structure", bad.is_empty(), format!("{checked} (G, phi) pairs {bad:?}")));
}

#[test]
fn criterion_08_core_automorphisms_of_odd_abelian_groups() {
    let caps = Caps::default();
    let z3xz3 = direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap();
    // |G| * |Aut(G)|: 3*2, 5*4, 7*6, 9*6, 9*48
    let expected = [6, 20, 42, 54, 432];
    let mut found = Vec::new();
    let mut bad = Vec::new();
    let mut z3xz3_time = Duration::ZERO;
    for (g, want) in [cyclic(3).unwrap(), cyclic(5).unwrap(), cyclic(7).unwrap(), cyclic(9).unwrap(), z3xz3].into_iter().zip(expected) {
        let start = Instant::now();
        let d = data(g);
        let v = check_core_abelian_full(&d, &caps).unwrap();
        let count = enumerate_quandle_auts(&core(&d.group).unwrap(), &caps).unwrap().len();
        if d.order() == 9 && !d.group.is_cyclic() {
            z3xz3_time = start.elapsed();
        }
        found.push(count);
        if !v.holds || count != want || count != d.order() * d.auts.len() {
            bad.push(format!("{}: {count}", d.label));
        }
    }
    let pass = bad.is_empty() && z3xz3_time < CORE_Z3XZ3_BUDGET;
    assert!(report(8, "core-abelian-full", pass, format!("counts {found:?}, Z3xZ3 {z3xz3_time:.2?} (budget {CORE_Z3XZ3_BUDGET:?}) {bad:?}")));
}

#[test]
fn criterion_09_alexander_suite() {
    let caps = Caps::default();
    let mut verdicts = Vec::new();
    let (mut abelian_leaves, mut abelian_vacuous) = (0, 0);
    for g in catalog().into_iter().filter(|g| g.order() <= 12) {
        let d = data(g);
        for phi in &d.auts {
            let a = check_alex(&d, phi).unwrap();
            if d.group.is_abelian() {
                let ls = leaves(&a);
                abelian_leaves += ls.len();
                abelian_vacuous += ls.iter().filter(|l| l.vacuous).count();
            }
            verdicts.push(a);
            verdicts.push(check_alex_semidirect(&d, phi, &caps).unwrap());
        }
    }
    let disagreements: usize = verdicts.iter().map(iff_disagreements).sum();
    let vacuous_ok = 2 * abelian_vacuous < abelian_leaves;
    let pass = disagreements == 0 && vacuous_ok;
    let detail = format!(
        "{} verdicts, {disagreements} disagreements, abelian vacuous {abelian_vacuous}/{abelian_leaves}; {}",
        verdicts.len(),
        first_failure(&verdicts)
    );
    assert!(report(9, "alexander-suite", pass, detail));
}

#[test]
fn criterion_10_qi_suite() {
    let mut verdicts = Vec::new();
    for g in catalog().into_iter().filter(|g| g.order() <= 12) {
        let d = data(g);
        for phi in &d.auts {
            verdicts.push(check_qi(&d, 1, phi).unwrap());
        }
        for psi in &d.aauts {
            for i in 2..=4 {
                verdicts.push(check_qi(&d, i, psi).unwrap());
            }
        }
    }
    let h = data(heisenberg(3).unwrap());
    assert!(commutator_central_exponent_3(&h.group));
    let mut branch_instances = 0;
    for psi in &h.aauts {
        for i in 3..=4 {
            let v = check_qi(&h, i, psi).unwrap();
            if let Some(p) = v.find_part(&format!("q{i}/anti-induces-anti")) {
                if p.rhs {
                    branch_instances += p.instances;
                }
            }
            verdicts.push(v);
        }
    }
    let constructible = verdicts.iter().filter(|v| !v.is_skipped()).count();
    let disagreements: usize = verdicts.iter().map(iff_disagreements).sum();
    let pass = disagreements == 0 && branch_instances > 0;
    let detail = format!(
        "{constructible} constructible, {disagreements} disagreements, heisenberg3 exponent-3 branch instances {branch_instances}; {}",
        first_failure(&verdicts)
    );
    assert!(report(10, "qi-suite", pass, detail));
}

#[test]
fn criterion_11_pi_suite() {
    let mut verdicts = Vec::new();
    let mut identity_column_ok = true;
    for g in [cyclic(6).unwrap(), symmetric(3).unwrap(), dihedral(4).unwrap(), quaternion8().unwrap(), heisenberg(3).unwrap()] {
        let d = data(g);
        for c in d.group.elements() {
            let aut = check_pi_aut(&d, c).unwrap();
            if c == d.group.identity() {
                identity_column_ok &= leaves(&aut).iter().all(|l| l.holds && l.lhs && l.rhs);
            }
            verdicts.push(aut);
            verdicts.push(check_pi_anti(&d, c).unwrap());
        }
    }
    let disagreements: usize = verdicts.iter().map(iff_disagreements).sum();
    let pass = disagreements == 0 && identity_column_ok;
    let detail = format!(
        "{} verdicts, {disagreements} disagreements, identity column all induced: {identity_column_ok}; {}",
        verdicts.len(),
        first_failure(&verdicts)
    );
    assert!(report(11, "pi-suite", pass, detail));
}

#[test]
fn criterion_12_oracle_equivalence() {
    let caps = Caps::default();
    let mut verdicts = Vec::new();
    let mut quandles = 0;
    for g in catalog().into_iter().filter(|g| g.order() <= caps.oracle) {
        let d = data(g);
        let qs = quandles_from(&d, &DEFAULT_M_RANGE);
        quandles += qs.len();
        verdicts.push(oracle_agreement("oracle-agreement", &d.inputs(), &qs, &caps).unwrap());
    }
    let dihedral: Vec<_> = (3..=7).map(|n| dihedral_quandle(n).unwrap()).collect();
    quandles += dihedral.len();
    verdicts.push(oracle_agreement("oracle-agreement", "R3..R7", &dihedral, &caps).unwrap());
    let disagreements: usize = verdicts.iter().map(|v| v.disagreements).sum();
    assert!(report(12, "oracle-equivalence", disagreements == 0, format!("{quandles} distinct quandles, {disagreements} disagreements")));
}

#[test]
fn criterion_13_full_census() {
    let caps = Caps::default();
    let start = Instant::now();
    let r = run_census(&Catalog::standard(&caps).unwrap(), &CensusConfig::default());
    let elapsed = start.elapsed();
    let exit_code = if r.all_hold() { 0 } else { 1 };
    let pass = elapsed < CENSUS_BUDGET && exit_code == 0;
    let s = &r.summary;
    let detail = format!(
        "{elapsed:.2?} (budget {CENSUS_BUDGET:?}), exit code {exit_code}; total {} holds {} failed {} vacuous {} skipped {}",
        s.total, s.holds, s.failed, s.vacuous, s.skipped
    );
    assert!(report(13, "full-census", pass, detail));
}
