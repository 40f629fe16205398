//! Checks on generalized Alexander quandles and the two-sided
//! multiplication maps.

use crate::config::Caps;
use crate::construct::{alex, core};
use crate::maps::{build_f, build_f_prime, f_ab, is_central_map, verify_f_iso, PointMap};
use crate::morphisms::{satisfies, semidirect_verify, Target};
use crate::verdict::{Relationship, Verdict};

use super::{structural, tally_maps, GroupData, HarnessError};

/// For `ψ` commuting with `φ`: `ψ ∈ Aut(Alex(G, φ))` iff `φ` is central,
/// and `ψ ∈ AAut(Alex(G, φ))` iff `G` is abelian; some automorphism
/// commuting with `φ` is an antiautomorphism of the quandle iff `G` is
/// abelian.
pub fn check_alex(d: &GroupData, phi: &PointMap) -> Result<Verdict, HarnessError> {
    let id = "alex";
    let inputs = format!("G={}, phi={}", d.label, d.describe(phi));
    let g = &d.group;
    let q = alex(g, phi)?;
    let central = is_central_map(g, phi);
    let abelian = g.is_abelian();
    let c_aaut = d.centralizer_aaut(phi);
    let c_aut = d.centralizer_aut(phi);

    let part = |name: &str| format!("{id}/{name}");
    let induced_auto = tally_maps(&part("induced-auto"), &inputs, Relationship::Iff, d, &q, c_aaut.iter().copied(), Target::Auto, central);
    let induced_anti = tally_maps(&part("induced-anti"), &inputs, Relationship::Iff, d, &q, c_aaut.iter().copied(), Target::Anti, abelian);
    let induced_anti_fwd =
        tally_maps(&part("induced-anti-forward"), &inputs, Relationship::Implies, d, &q, c_aaut.iter().copied(), Target::Anti, abelian);

    let found = c_aut.iter().find(|f| satisfies(&q, f, Target::Anti).expect("same carrier"));
    let evidence = match found {
        Some(f) => d.map_evidence(f, format!("commutes with phi and is an antiautomorphism of {}", q.label())),
        None => d.evidence(format!(
            "none of the {} automorphisms commuting with phi is an antiautomorphism of {}; G abelian: {abelian}",
            c_aut.len(),
            q.label()
        )),
    };
    let centralizer_anti = Verdict::single(part("centralizer-anti"), inputs.clone(), Relationship::Iff, found.is_some(), abelian, evidence.clone());
    let centralizer_anti_fwd =
        Verdict::single(part("centralizer-anti-forward"), inputs.clone(), Relationship::Implies, found.is_some(), abelian, evidence);

    Ok(Verdict::composite(
        id,
        inputs,
        Relationship::Iff,
        vec![induced_auto, induced_anti, induced_anti_fwd, centralizer_anti, centralizer_anti_fwd],
    ))
}

/// Right multiplications `x ↦ x b` and the centralizer of `φ` in `Aut(G)`
/// form `G^op ⋊ C_Aut(G)(φ)` inside `Aut(Alex(G, φ))`.
pub fn check_alex_semidirect(d: &GroupData, phi: &PointMap, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "alex-semidirect";
    let inputs = format!("G={}, phi={}", d.label, d.describe(phi));
    let g = &d.group;
    let q = alex(g, phi)?;
    let e = g.identity();
    let right: Vec<PointMap> = g.elements().map(|b| f_ab(g, e, b)).collect();
    let centralizer: Vec<PointMap> = d.centralizer_aut(phi).into_iter().cloned().collect();
    let report = semidirect_verify(&right, &centralizer, &q, caps);
    let detail = match &report.failing_clause {
        Some(c) => c.clone(),
        None => format!("|G^op|={} |C|={} closure {}", report.normal_part_size, report.complement_size, report.closure_size),
    };
    Ok(structural(id, &inputs, Relationship::SubgroupEmbedding, report.verdict, d.evidence(detail))
        .with_note(serde_json::to_string(&report).expect("report serializes")))
}

/// `F ≤ Aut(Core(G))`, `F′ ≤ Aut(Alex(G, φ))`, `|F| = |G|²/|Z(G)|` and
/// `F ≅ (G × G^op)/N`.
pub fn check_f_props(d: &GroupData, phi: &PointMap, caps: &Caps) -> Result<Verdict, HarnessError> {
    let id = "f-props";
    let inputs = format!("G={}, phi={}", d.label, d.describe(phi));
    let g = &d.group;
    let f = build_f(g);
    let f_prime = build_f_prime(g, phi, caps)?;
    let core_q = core(g)?;
    let alex_q = alex(g, phi)?;
    let part = |name: &str| format!("{id}/{name}");

    let expected = g.order() * g.order() / d.center.len();
    let order = structural(
        &part("f-order"),
        &inputs,
        Relationship::Isomorphism,
        f.len() == expected,
        d.evidence(format!("|F| = {}, |G|^2/|Z(G)| = {expected}", f.len())),
    );
    let f_core = tally_maps(&part("f-in-aut-core"), &inputs, Relationship::SubgroupEmbedding, d, &core_q, &f, Target::Auto, true);
    let f_prime_alex =
        tally_maps(&part("f-prime-in-aut-alex"), &inputs, Relationship::SubgroupEmbedding, d, &alex_q, &f_prime, Target::Auto, true);
    let mut iso = verify_f_iso(g)?;
    iso.theorem_id = part("f-iso");
    iso.inputs = inputs.clone();
    Ok(Verdict::composite(id, inputs, Relationship::SubgroupEmbedding, vec![order, f_core, f_prime_alex, iso]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;
    use crate::maps::{inner_automorphism, inversion_map};

    fn data(g: crate::group::FiniteGroup) -> GroupData {
        GroupData::new(g, &Caps::default()).unwrap()
    }

    #[test]
    fn alex_on_z5_doubling() {
        let d = data(cyclic(5).unwrap());
        let phi = PointMap::new((0..5).map(|x| 2 * x % 5).collect()).unwrap();
        let v = check_alex(&d, &phi).unwrap();
        let auto = v.find_part("alex/induced-auto").unwrap();
        assert!(auto.holds && !auto.vacuous && auto.lhs && auto.rhs);
    }

    #[test]
    fn alex_on_s3_inner() {
        let d = data(symmetric(3).unwrap());
        let phi = inner_automorphism(&d.group, 3);
        let v = check_alex(&d, &phi).unwrap();
        assert!(v.find_part("alex/induced-auto").unwrap().holds);
        assert!(v.find_part("alex/induced-anti").unwrap().holds);
        assert!(v.find_part("alex/centralizer-anti").unwrap().holds);
    }

    #[test]
    fn alex_identity_on_abelian_group_refutes_the_converse() {
        // Alex(Z5, id) is trivial and has no antiautomorphisms although Z5 is abelian
        let d = data(cyclic(5).unwrap());
        let v = check_alex(&d, &PointMap::identity(5)).unwrap();
        let anti = v.find_part("alex/induced-anti").unwrap();
        assert!(!anti.holds && !anti.lhs && anti.rhs);
        assert!(v.find_part("alex/induced-anti-forward").unwrap().holds);
        assert!(!v.find_part("alex/centralizer-anti").unwrap().holds);
        assert!(v.find_part("alex/centralizer-anti-forward").unwrap().holds);
    }

    #[test]
    fn alex_z3xz3_inversion() {
        let d = data(direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap());
        let eps = inversion_map(&d.group).map;
        let v = check_alex(&d, &eps).unwrap();
        assert!(v.holds, "{v:#?}");
    }

    #[test]
    fn semidirect_examples() {
        let caps = Caps::default();
        let z4 = data(cyclic(4).unwrap());
        let v = check_alex_semidirect(&z4, &inversion_map(&z4.group).map, &caps).unwrap();
        assert!(v.holds, "{v:?}");
        assert!(v.notes[0].contains("\"closure_size\":8"));
        let s3 = data(symmetric(3).unwrap());
        assert!(check_alex_semidirect(&s3, &PointMap::identity(6), &caps).unwrap().holds);
        let d4 = data(dihedral(4).unwrap());
        // r -> r^3, s -> s on indices r^i s^j = i + 4j
        let phi = PointMap::new((0..8).map(|x| (4 - x % 4) % 4 + 4 * (x / 4)).collect()).unwrap();
        assert!(crate::maps::satisfies_hom_law(&d4.group, &phi));
        assert!(check_alex_semidirect(&d4, &phi, &caps).unwrap().holds);
    }

    #[test]
    fn f_props_examples() {
        let caps = Caps::default();
        for g in [symmetric(3).unwrap(), cyclic(1).unwrap(), dihedral(4).unwrap()] {
            let d = data(g);
            for phi in d.auts.clone() {
                let v = check_f_props(&d, &phi, &caps).unwrap();
                assert!(v.holds, "{v:#?}");
            }
        }
    }
}
