//! Checks on the quandles `Qᵢ(G, φ)` and `Pᵢ(G, c)`.

use crate::construct::{q_quandle, verbal_quandle};
use crate::group::FiniteGroup;
use crate::maps::{is_central_map, PointMap};
use crate::morphisms::Target;
use crate::verdict::{Relationship, Verdict};

use super::{tally_maps, tally_pred, GroupData, HarnessError};

/// `[G, G]` is central and its exponent divides 3.
pub fn commutator_central_exponent_3(g: &FiniteGroup) -> bool {
    let center = g.center();
    let e = g.identity();
    g.commutator_subgroup().members().iter().all(|&c| center.contains(c) && g.power(c, 3) == e)
}

/// Maps commuting with the base map act on `Qᵢ(G, base)`: members of
/// `C_Aut(G)(base)` are automorphisms; a commuting map is an
/// antiautomorphism iff `G` is abelian (`i = 1, 2`) or `[G, G]` is central
/// of exponent 3 (`i = 3, 4`); a commuting antiautomorphism of `G` is an
/// automorphism of `Qᵢ` iff the base map is central (`i = 1, 2`) or
/// `y base⁻¹(y) ∈ Z(G)` for all `y` (`i = 3, 4`).
///
/// `base` is an automorphism for `i = 1` and an antiautomorphism otherwise.
pub fn check_qi(d: &GroupData, i: usize, base: &PointMap) -> Result<Verdict, HarnessError> {
    let id = format!("q{i}");
    let inputs = format!("G={}, i={i}, map={}", d.label, d.describe(base));
    let g = &d.group;
    let q = match q_quandle(g, i, base) {
        Ok(q) => q,
        Err(e) => return Ok(Verdict::skipped(id, inputs, format!("not constructible: {e}"))),
    };
    let c_aut = d.centralizer_aut(base);
    let c_aaut = d.centralizer_aaut(base);
    let anti_pred = if i <= 2 { g.is_abelian() } else { commutator_central_exponent_3(g) };
    let auto_pred = if i <= 2 {
        is_central_map(g, base)
    } else {
        let base_inv = base.inverse();
        g.elements().all(|y| d.center.contains(g.mul(y, base_inv.apply(y))))
    };
    let part = |name: &str| format!("{id}/{name}");
    let parts = vec![
        tally_maps(&part("centralizer-aut"), &inputs, Relationship::SubgroupEmbedding, d, &q, c_aut.iter().copied(), Target::Auto, true),
        tally_maps(&part("aut-induces-anti"), &inputs, Relationship::Iff, d, &q, c_aut.iter().copied(), Target::Anti, anti_pred),
        tally_maps(
            &part("aut-induces-anti-forward"),
            &inputs,
            Relationship::Implies,
            d,
            &q,
            c_aut.iter().copied(),
            Target::Anti,
            anti_pred,
        ),
        tally_maps(&part("anti-induces-anti"), &inputs, Relationship::Iff, d, &q, c_aaut.iter().copied(), Target::Anti, anti_pred),
        tally_maps(
            &part("anti-induces-anti-forward"),
            &inputs,
            Relationship::Implies,
            d,
            &q,
            c_aaut.iter().copied(),
            Target::Anti,
            anti_pred,
        ),
        tally_maps(&part("anti-induces-auto"), &inputs, Relationship::Iff, d, &q, c_aaut.iter().copied(), Target::Auto, auto_pred),
    ];
    Ok(Verdict::composite(id, inputs, Relationship::Iff, parts))
}

/// For each `i`, `φ ∈ Aut(G)` is an automorphism of `Pᵢ(G, c)` iff
/// `c⁻¹ φ⁻¹(c) ∈ Z(G)`.
pub fn check_pi_aut(d: &GroupData, c: usize) -> Result<Verdict, HarnessError> {
    let id = "pi-aut";
    let inputs = format!("G={}, c={c}", d.label);
    let g = &d.group;
    g.check_element(c)?;
    let ci = g.inv(c);
    let pred = |phi: &PointMap| d.center.contains(g.mul(ci, phi.inverse().apply(c)));
    let mut parts = Vec::new();
    for i in 1..=4 {
        let p = verbal_quandle(g, i, c)?;
        parts.push(tally_pred(&format!("{id}/p{i}"), &inputs, Relationship::Iff, d, &p, &d.auts, Target::Auto, pred));
    }
    Ok(Verdict::composite(id, inputs, Relationship::Iff, parts))
}

/// For each `i`: an automorphism of `G` fixing `c` is an antiautomorphism
/// of `Pᵢ(G, c)` iff `x = [x, c⁻¹]` for all `x`; an antiautomorphism of `G`
/// fixing `c` is an automorphism of `Pᵢ(G, c)` iff `c² ∈ Z(G)`.
pub fn check_pi_anti(d: &GroupData, c: usize) -> Result<Verdict, HarnessError> {
    let id = "pi-anti";
    let inputs = format!("G={}, c={c}", d.label);
    let g = &d.group;
    g.check_element(c)?;
    let ci = g.inv(c);
    let fixing_aut: Vec<&PointMap> = d.auts.iter().filter(|f| f.apply(c) == c).collect();
    let fixing_aaut: Vec<&PointMap> = d.aauts.iter().filter(|f| f.apply(c) == c).collect();
    let anti_pred = g.elements().all(|x| x == g.commutator(x, ci));
    let auto_pred = d.center.contains(g.mul(c, c));
    let mut parts = Vec::new();
    for i in 1..=4 {
        let p = verbal_quandle(g, i, c)?;
        let part = |name: &str| format!("{id}/p{i}/{name}");
        parts.push(tally_maps(&part("aut-induces-anti"), &inputs, Relationship::Iff, d, &p, fixing_aut.iter().copied(), Target::Anti, anti_pred));
        parts.push(tally_maps(&part("anti-induces-auto"), &inputs, Relationship::Iff, d, &p, fixing_aaut.iter().copied(), Target::Auto, auto_pred));
        parts.push(tally_maps(
            &part("anti-induces-auto-forward"),
            &inputs,
            Relationship::Implies,
            d,
            &p,
            fixing_aaut.iter().copied(),
            Target::Auto,
            auto_pred,
        ));
    }
    Ok(Verdict::composite(id, inputs, Relationship::Iff, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::group::constructors::*;
    use crate::maps::{inner_automorphism, inversion_map};

    fn data(g: FiniteGroup) -> GroupData {
        GroupData::new(g, &Caps::default()).unwrap()
    }

    #[test]
    fn commutator_condition() {
        assert!(commutator_central_exponent_3(&heisenberg(3).unwrap()));
        assert!(commutator_central_exponent_3(&cyclic(4).unwrap()));
        assert!(!commutator_central_exponent_3(&symmetric(3).unwrap()));
        assert!(!commutator_central_exponent_3(&dihedral(4).unwrap()));
    }

    #[test]
    fn qi_on_z6_with_inversion() {
        let d = data(cyclic(6).unwrap());
        let eps = inversion_map(&d.group).map;
        for i in 2..=4 {
            let v = check_qi(&d, i, &eps).unwrap();
            assert!(!v.is_skipped());
            assert!(v.find_part(&format!("q{i}/centralizer-aut")).unwrap().holds);
            assert!(v.find_part(&format!("q{i}/aut-induces-anti-forward")).unwrap().holds);
            assert!(v.find_part(&format!("q{i}/anti-induces-auto")).unwrap().holds);
        }
    }

    #[test]
    fn qi_on_s3_inner() {
        let d = data(symmetric(3).unwrap());
        let phi = inner_automorphism(&d.group, 3);
        let v = check_qi(&d, 1, &phi).unwrap();
        let anti = v.find_part("q1/aut-induces-anti").unwrap();
        assert!(anti.holds && !anti.rhs && !anti.lhs);
        assert!(v.find_part("q1/centralizer-aut").unwrap().holds);
    }

    #[test]
    fn qi_on_heisenberg_reaches_the_exponent_3_branch() {
        let d = data(heisenberg(3).unwrap());
        let eps = inversion_map(&d.group).map;
        let v = check_qi(&d, 3, &eps).unwrap();
        let anti = v.find_part("q3/anti-induces-anti-forward").unwrap();
        assert!(anti.holds && anti.instances > 0);
    }

    #[test]
    fn pi_examples() {
        for g in [cyclic(6).unwrap(), symmetric(3).unwrap(), cyclic(1).unwrap()] {
            let d = data(g);
            for c in d.group.elements() {
                let v = check_pi_aut(&d, c).unwrap();
                assert!(v.holds, "{v:#?}");
                let v = check_pi_anti(&d, c).unwrap();
                for i in 1..=4 {
                    assert!(v.find_part(&format!("pi-anti/p{i}/aut-induces-anti")).unwrap().holds);
                    assert!(v.find_part(&format!("pi-anti/p{i}/anti-induces-auto-forward")).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn pi_anti_d4_rotation() {
        let d = data(dihedral(4).unwrap());
        let v = check_pi_anti(&d, 1).unwrap();
        let part = v.find_part("pi-anti/p1/anti-induces-auto").unwrap();
        assert!(part.rhs && part.instances > 0);
        assert!(part.holds, "{part:?}");
    }
}
