// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The reticulation on surjective morphisms, and preservation of
//! quotients, products, semiprime reduction and hyperarchimedean algebras.

use crate::algebra::{direct_product, projections, quotient_algebra, FiniteAlgebra, SurjectiveMorphism};
use crate::commutator::{computed, CommutatorStructure, SEMI_DEGENERATE, STANDING};
use crate::congruence::{cg_generate, Congruence};
use crate::error::{Error, Result};
use crate::ideals::{quotient_by_ideal, LatticeIdeal};
use crate::iso::lattice_iso;
use crate::lattice::FiniteLattice;
use crate::report::Report;
use crate::reticulation::{build_reticulation, theta_star, Reticulation};
use crate::spectrum::{boolean_center, is_hyperarchimedean, maximal, Spectral};

/// `L(f)` together with `φ_f` on congruence indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReticMorphism {
    /// `φ_f(α) = f(α ∨ Ker f)`, from Con(A) to Con(B).
    pub phi: Vec<usize>,
    /// `L(f)(λ_A(α)) = λ_B(φ_f(α))`, read off class representatives.
    pub map: Vec<usize>,
}

/// Congruences of the source and target of `f`, checked against the
/// reticulations' structures.
fn check_ends<'a>(
    f: &SurjectiveMorphism,
    ra: &'a Reticulation,
    rb: &'a Reticulation,
) -> Result<(&'a crate::congruence::CongruenceLattice, &'a crate::congruence::CongruenceLattice)> {
    let (aa, ca) = computed(ra.source())?;
    let (ab, cb) = computed(rb.source())?;
    if aa != f.source() || ab != f.target() {
        return Err(Error::InvalidArgument(
            "reticulations do not match the morphism's source and target".into(),
        ));
    }
    Ok((ca, cb))
}

pub fn phi_f(f: &SurjectiveMorphism, ra: &Reticulation, rb: &Reticulation) -> Result<Vec<usize>> {
    let (ca, cb) = check_ends(f, ra, rb)?;
    ca.congruences()
        .iter()
        .map(|c| {
            let t = f.transport(c)?;
            cb.index_of(&t)
                .ok_or_else(|| Error::Internal("transported partition is not a congruence".into()))
        })
        .collect()
}

pub fn retic_morphism(f: &SurjectiveMorphism, ra: &Reticulation, rb: &Reticulation) -> Result<ReticMorphism> {
    let phi = phi_f(f, ra, rb)?;
    let map = (0..ra.size())
        .map(|c| rb.lambda(phi[ra.representative(c)]))
        .collect();
    Ok(ReticMorphism { phi, map })
}

/// `Ker_Id(L(f)) = L(f)⁻¹(0)`.
pub fn ker_id(m: &ReticMorphism, ra: &Reticulation, rb: &Reticulation) -> Result<LatticeIdeal> {
    let zero = rb.lattice().bottom();
    let members: Vec<usize> = (0..ra.size()).filter(|&c| m.map[c] == zero).collect();
    LatticeIdeal::new(ra.lattice(), &members)
}

/// Well-definedness, surjectivity and the morphism laws of `L(f)`.
pub fn morphism_checks(m: &ReticMorphism, ra: &Reticulation, rb: &Reticulation) -> Report {
    let a = ra.source();
    let b = rb.source();
    let mut r = Report::new(format!("L({} -> {})", a.name(), b.name()));
    let bad = (0..a.size()).find(|&x| m.map[ra.lambda(x)] != rb.lambda(m.phi[x]));
    r.check("L(f)(lambda(a)) = lambda(phi_f(a)) for every a", bad.is_none(), || {
        a.label(bad.unwrap()).to_string()
    });
    let mut hit = vec![false; rb.size()];
    for &y in &m.map {
        hit[y] = true;
    }
    r.check("L(f) is surjective", hit.iter().all(|&h| h), String::new);
    r.check(
        "L(f) is a bounded lattice morphism",
        ra.lattice().is_bounded_morphism(rb.lattice(), &m.map),
        String::new,
    );
    let mut hit = vec![false; b.size()];
    for &y in &m.phi {
        hit[y] = true;
    }
    r.check("phi_f is onto Con(B)", hit.iter().all(|&h| h), String::new);
    if a.flags().nabla_neutral && b.flags().nabla_neutral {
        let bb = boolean_center(b);
        let bad = boolean_center(a).into_iter().find(|x| !bb.contains(&m.phi[*x]));
        r.gated(
            "phi_f maps B(Con(A)) into B(Con(B))",
            STANDING,
            a.flags().standing() && b.flags().standing(),
            bad.is_none(),
            || a.label(bad.unwrap()).to_string(),
        );
    } else {
        r.skip("phi_f maps B(Con(A)) into B(Con(B))", "[a,nabla] = a fails");
    }
    r
}

fn structure_of(alg: &FiniteAlgebra, modular: bool) -> CommutatorStructure {
    if modular {
        CommutatorStructure::from_algebra_in_modular_variety(alg)
    } else {
        CommutatorStructure::from_algebra(alg)
    }
}

/// `L(A/θ) ≅ L(A)/θ*` and `Ker_Id(L(p_θ)) = θ*`.
pub fn verify_quotient_preservation(cs: &CommutatorStructure, theta: usize) -> Result<Report> {
    let (alg, con) = computed(cs)?;
    let (q, p) = quotient_algebra(alg, con.get(theta))?;
    let qs = structure_of(&q, cs.modular_variety());
    let ra = build_reticulation(cs)?;
    let rq = build_reticulation(&qs)?;
    let m = retic_morphism(&p, &ra, &rq)?;
    let star = theta_star(&ra, theta)?;
    let (lq, class) = quotient_by_ideal(ra.lattice(), &star)?;
    let hyp = cs.flags().standing() && qs.flags().standing();
    let mut r = Report::new(format!("{} / {}", cs.name(), cs.label(theta)));
    r.gated("L(A/theta) = L(A)/theta*", STANDING, hyp, lattice_iso(rq.lattice(), &lq).is_some(), || {
        format!("{} vs {} elements", rq.size(), lq.size())
    });
    let ker = ker_id(&m, &ra, &rq)?;
    r.gated("Ker_Id(L(p_theta)) = theta*", STANDING, hyp, ker == star, || {
        format!("{} vs {}", ker.display(ra.lattice()), star.display(ra.lattice()))
    });
    let bad = (0..ra.size())
        .flat_map(|x| (0..ra.size()).map(move |y| (x, y)))
        .find(|&(x, y)| (class[x] == class[y]) != (m.map[x] == m.map[y]));
    r.gated(
        "L(p_theta) identifies exactly the classes of the ideal quotient",
        STANDING,
        hyp,
        bad.is_none(),
        || format!("{bad:?}"),
    );
    r.absorb("", morphism_checks(&m, &ra, &rq));
    Ok(r)
}

/// Congruences of `A × B` that are not of the form `α × β`.
pub fn skew_congruences(
    a: &CommutatorStructure,
    b: &CommutatorStructure,
    ab: &CommutatorStructure,
) -> Result<Vec<usize>> {
    let (_, ca) = computed(a)?;
    let (_, cb) = computed(b)?;
    let (_, cab) = computed(ab)?;
    let products: Vec<Congruence> = ca
        .congruences()
        .iter()
        .flat_map(|x| cb.congruences().iter().map(move |y| x.product(y)))
        .collect();
    if cab.len() == ca.len() * cb.len() && products.iter().all(|c| cab.index_of(c).is_some()) {
        return Ok(Vec::new());
    }
    Ok((0..cab.len())
        .filter(|&i| !products.contains(cab.get(i)))
        .collect())
}

/// For `A × B` without skew congruences: the spectrum formula,
/// `L(A × B) ≅ L(A) × L(B)`, and `Cg(X × Y) = Cg(X) × Cg(Y)`.
pub fn verify_product_preservation(a: &CommutatorStructure, b: &CommutatorStructure) -> Result<Report> {
    let (aa, ca) = computed(a)?;
    let (ab, cb) = computed(b)?;
    let prod = direct_product(aa, ab)?;
    let ps = structure_of(&prod, a.modular_variety() && b.modular_variety());
    let (_, cab) = computed(&ps)?;
    let mut r = Report::new(format!("{} x {}", a.name(), b.name()));
    let skew = skew_congruences(a, b, &ps)?;
    r.check("no skew congruences", skew.is_empty(), || {
        let v: Vec<&str> = skew.iter().map(|&i| ps.label(i)).collect();
        v.join(", ")
    });
    let spec_a = Spectral::new(a)?.spec;
    let spec_b = Spectral::new(b)?.spec;
    let spec_ab = Spectral::new(&ps)?.spec;
    let nab_a = ca.get(a.top());
    let nab_b = cb.get(b.top());
    if !skew.is_empty() {
        r.skip("Spec(A x B) from Spec(A) and Spec(B)", "skew congruences present");
        r.skip("L(A x B) = L(A) x L(B)", "skew congruences present");
        return Ok(r);
    }
    let mut want: Vec<usize> = spec_a
        .iter()
        .map(|&p| ca.get(p).product(nab_b))
        .chain(spec_b.iter().map(|&q| nab_a.product(cb.get(q))))
        .map(|c| cab.index_of(&c).expect("products are congruences"))
        .collect();
    want.sort_unstable();
    want.dedup();
    let cm = ps.modular_variety();
    r.gated(
        "Spec(A x B) from Spec(A) and Spec(B)",
        crate::commutator::MODULAR_VARIETY,
        cm,
        want == spec_ab,
        || format!("{} vs {}", want.len(), spec_ab.len()),
    );
    let la = build_reticulation(a)?;
    let lb = build_reticulation(b)?;
    let lab = build_reticulation(&ps)?;
    let both = la.lattice().product(lb.lattice());
    r.gated(
        "L(A x B) = L(A) x L(B)",
        crate::commutator::MODULAR_VARIETY,
        cm,
        lattice_iso(lab.lattice(), &both).is_some(),
        || format!("{} vs {} elements", lab.size(), both.size()),
    );
    let nb = ab.size();
    let mut bad = None;
    'outer: for x1 in 0..aa.size() {
        for x2 in 0..aa.size() {
            for y1 in 0..nb {
                for y2 in 0..nb {
                    let lhs = cg_generate(&prod, &[(x1 * nb + y1, x2 * nb + y2)]);
                    let rhs = cg_generate(aa, &[(x1, x2)]).product(&cg_generate(ab, &[(y1, y2)]));
                    if lhs != rhs {
                        bad = Some(format!(
                            "({}, {}) x ({}, {})",
                            aa.label(x1),
                            aa.label(x2),
                            ab.label(y1),
                            ab.label(y2)
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    r.check("Cg(X x Y) = Cg(X) x Cg(Y) on single pairs", bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });
    let (p1, p2) = projections(aa, ab, &prod)?;
    for p in [p1, p2] {
        let rt = if p.target() == aa { &la } else { &lb };
        let m = retic_morphism(&p, &lab, rt)?;
        r.absorb("projection: ", morphism_checks(&m, &lab, rt));
    }
    Ok(r)
}

/// The interval `[θ, ∇]` with `[α, β] ∨ θ`, which is Con(A/θ) with its
/// commutator in a congruence-modular variety.
pub fn interval_quotient(cs: &CommutatorStructure, theta: usize) -> Result<CommutatorStructure> {
    let l = cs.lattice();
    let elems: Vec<usize> = (0..cs.size()).filter(|&a| l.leq(theta, a)).collect();
    let lat = l.induced(&elems)?;
    let pos = |x: usize| elems.iter().position(|&e| e == x).expect("join stays above theta");
    let k = elems.len();
    let table = (0..k * k)
        .map(|p| pos(l.join(cs.comm(elems[p / k], elems[p % k]), theta)))
        .collect();
    Ok(CommutatorStructure::from_table(format!("{}/{}", cs.name(), cs.label(theta)), lat, table, None)?
        .assume_modular_variety(cs.modular_variety()))
}

/// `A/θ` as a structure: computed from the quotient algebra when there is
/// one, else from the interval.
fn quotient_structure(cs: &CommutatorStructure, theta: usize) -> Result<(CommutatorStructure, bool)> {
    match computed(cs) {
        Ok((alg, con)) => {
            let (q, _) = quotient_algebra(alg, con.get(theta))?;
            Ok((structure_of(&q, cs.modular_variety()), true))
        }
        Err(_) => Ok((interval_quotient(cs, theta)?, false)),
    }
}

fn boolean_part(l: &FiniteLattice) -> Result<FiniteLattice> {
    l.induced(&l.complemented())
}

/// `A/ρ(Δ)` is semiprime with `L(A) ≅ L(A/ρ(Δ))` and
/// `B(L(A)) ≅ B(Con(A/ρ(Δ)))`.
pub fn verify_semiprime_reduction(cs: &CommutatorStructure) -> Result<Report> {
    let ra = build_reticulation(cs)?;
    let rd = ra.rho(cs.bottom());
    let (qs, from_algebra) = quotient_structure(cs, rd)?;
    let rq = build_reticulation(&qs)?;
    let mut r = Report::new(format!("{} / rho(Delta)", cs.name()));
    let (hyp, ok) = if from_algebra {
        (STANDING, cs.flags().standing())
    } else {
        ("congruence-modular variety", cs.modular_variety())
    };
    r.gated("A/rho(Delta) is semiprime", hyp, ok, Spectral::new(&qs)?.semiprime_algebra(&qs), String::new);
    r.gated("L(A) = L(A/rho(Delta))", hyp, ok, lattice_iso(ra.lattice(), rq.lattice()).is_some(), || {
        format!("{} vs {} elements", ra.size(), rq.size())
    });
    let bl = boolean_part(ra.lattice())?;
    let bq = boolean_part(qs.lattice())?;
    // Transporting Boolean centers uses lambda(a) = 1 only for a = nabla.
    let sd = cs.semi_degenerate();
    r.gated("B(L(A)) = B(Con(A/rho(Delta)))", SEMI_DEGENERATE, sd, lattice_iso(&bl, &bq).is_some(), || {
        format!("{} vs {} elements", bl.size(), bq.size())
    });
    Ok(r)
}

/// The six conditions equivalent to being hyperarchimedean, in order:
/// A hyperarchimedean, A/ρ(Δ) hyperarchimedean, Max = Spec, L(A) Boolean,
/// L(A) ≅ B(Con(A)), L(A) ≅ B(Con(A/ρ(Δ))). The first two are absent
/// when principal congruences are unknown.
pub fn hyperarchimedean_conditions(cs: &CommutatorStructure) -> Result<[Option<bool>; 6]> {
    let ra = build_reticulation(cs)?;
    let (qs, _) = quotient_structure(cs, ra.rho(cs.bottom()))?;
    let s = ra.spectral();
    let mut max = maximal(cs);
    max.sort_unstable();
    let bcon = boolean_part(cs.lattice())?;
    let bq = boolean_part(qs.lattice())?;
    Ok([
        is_hyperarchimedean(cs).ok().map(|h| h.holds),
        is_hyperarchimedean(&qs).ok().map(|h| h.holds),
        Some(max == s.spec),
        Some(ra.lattice().is_boolean()),
        Some(lattice_iso(ra.lattice(), &bcon).is_some()),
        Some(lattice_iso(ra.lattice(), &bq).is_some()),
    ])
}

pub fn verify_hyperarchimedean_equivalences(cs: &CommutatorStructure) -> Result<Report> {
    let conds = hyperarchimedean_conditions(cs)?;
    let known: Vec<bool> = conds.iter().flatten().copied().collect();
    let agree = known.iter().all(|&c| c == known[0]);
    let sd = cs.semi_degenerate();
    let mut r = Report::new(format!("hyperarchimedean conditions on {}", cs.name()));
    r.gated("the six conditions agree", SEMI_DEGENERATE, sd, agree, || format!("{conds:?}"));
    let hyper = conds[0];
    match hyper {
        Some(true) => {
            r.gated("hyperarchimedean implies L(A) Boolean", SEMI_DEGENERATE, sd, conds[3] == Some(true), String::new);
            let (alg, con) = computed(cs)?;
            let bad = (0..con.len()).find(|&t| {
                quotient_algebra(alg, con.get(t))
                    .map(|(q, _)| {
                        let qs = structure_of(&q, cs.modular_variety());
                        is_hyperarchimedean(&qs).map(|h| h.holds).unwrap_or(false)
                    })
                    .map(|h| !h)
                    .unwrap_or(true)
            });
            r.gated(
                "quotients of a hyperarchimedean algebra are hyperarchimedean",
                SEMI_DEGENERATE,
                sd,
                bad.is_none(),
                || cs.label(bad.unwrap()).to_string(),
            );
        }
        Some(false) => {
            r.skip("hyperarchimedean implies L(A) Boolean", "not hyperarchimedean");
            r.skip("quotients of a hyperarchimedean algebra are hyperarchimedean", "not hyperarchimedean");
        }
        None => {
            r.skip("hyperarchimedean implies L(A) Boolean", "principal congruences unknown");
            r.skip(
                "quotients of a hyperarchimedean algebra are hyperarchimedean",
                "principal congruences unknown",
            );
        }
    }
    Ok(r)
}

/// `L(g ∘ f) = L(g) ∘ L(f)` along `A → A/θ → A/ζ` for `θ ≤ ζ`.
pub fn verify_functoriality(cs: &CommutatorStructure, theta: usize, zeta: usize) -> Result<Report> {
    let (alg, con) = computed(cs)?;
    if !cs.lattice().leq(theta, zeta) {
        return Err(Error::InvalidArgument(format!(
            "{} is not below {}",
            cs.label(theta),
            cs.label(zeta)
        )));
    }
    let (q1, f) = quotient_algebra(alg, con.get(theta))?;
    let (q2, h) = quotient_algebra(alg, con.get(zeta))?;
    let mut gmap = vec![usize::MAX; q1.size()];
    for x in 0..alg.size() {
        gmap[f.apply(x)] = h.apply(x);
    }
    let g = SurjectiveMorphism::new(q1.clone(), q2.clone(), gmap)?;
    let gf = f.then(&g)?;
    let modular = cs.modular_variety();
    let ra = build_reticulation(cs)?;
    let r1 = build_reticulation(&structure_of(&q1, modular))?;
    let r2 = build_reticulation(&structure_of(&q2, modular))?;
    let lf = retic_morphism(&f, &ra, &r1)?;
    let lg = retic_morphism(&g, &r1, &r2)?;
    let lgf = retic_morphism(&gf, &ra, &r2)?;
    let composed: Vec<usize> = lf.map.iter().map(|&x| lg.map[x]).collect();
    let mut r = Report::new(format!(
        "{} -> /{} -> /{}",
        cs.name(),
        cs.label(theta),
        cs.label(zeta)
    ));
    r.check("L(g o f) = L(g) o L(f)", composed == lgf.map, || {
        format!("{:?} vs {:?}", lgf.map, composed)
    });
    let id = SurjectiveMorphism::identity(alg);
    let lid = retic_morphism(&id, &ra, &ra)?;
    r.check(
        "L(id) = id",
        lid.map.iter().enumerate().all(|(i, &x)| i == x),
        String::new,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::identify;

    fn cs(name: &str) -> CommutatorStructure {
        fixtures::structure(name).unwrap()
    }

    #[test]
    fn identity_and_collapse() {
        let a = cs("n5x");
        let (alg, con) = computed(&a).unwrap();
        let ra = build_reticulation(&a).unwrap();
        let id = SurjectiveMorphism::identity(alg);
        let m = retic_morphism(&id, &ra, &ra).unwrap();
        assert_eq!(m.map, (0..ra.size()).collect::<Vec<_>>());
        let (q, p) = quotient_algebra(alg, con.get(a.top())).unwrap();
        let rq = build_reticulation(&CommutatorStructure::from_algebra(&q)).unwrap();
        assert_eq!(rq.size(), 1);
        let m = retic_morphism(&p, &ra, &rq).unwrap();
        assert!(m.map.iter().all(|&x| x == 0));
        assert!(morphism_checks(&m, &ra, &rq).passed());
    }

    #[test]
    fn c8_mod_minus_one_is_klein() {
        let a = cs("c8");
        let (alg, con) = computed(&a).unwrap();
        let z = a.lattice().upper_covers(a.bottom())[0];
        let (q, _) = quotient_algebra(alg, con.get(z)).unwrap();
        assert_eq!(q.size(), 4);
        let qs = CommutatorStructure::from_algebra(&q);
        assert!(crate::classify(&qs).abelian);
        assert_eq!(identify(build_reticulation(&qs).unwrap().lattice()), vec!["L1"]);
    }

    #[test]
    fn quotients_of_p() {
        let a = cs("lattice-p");
        for t in 0..a.size() {
            let r = verify_quotient_preservation(&a, t).unwrap();
            assert!(r.passed() && r.failures().is_empty(), "{r}");
        }
    }

    #[test]
    fn e_times_p() {
        let r = verify_product_preservation(&cs("lattice-e"), &cs("lattice-p")).unwrap();
        assert!(r.find("no skew congruences").unwrap().holds());
        assert!(r.failures().is_empty(), "{r}");
    }

    #[test]
    fn hyperarchimedean_conditions_on_lattices() {
        assert_eq!(hyperarchimedean_conditions(&cs("chain-4")).unwrap(), [Some(true); 6]);
        assert_eq!(hyperarchimedean_conditions(&cs("lattice-p")).unwrap(), [Some(false); 6]);
    }

    #[test]
    fn semiprime_reduction_of_c8_is_trivial() {
        let r = verify_semiprime_reduction(&cs("c8")).unwrap();
        assert!(r.failures().is_empty(), "{r}");
    }

    #[test]
    fn interval_quotient_of_u() {
        let u = cs("u5");
        let q = interval_quotient(&u, u.top()).unwrap();
        assert_eq!(q.size(), 1);
        assert!(verify_semiprime_reduction(&u).unwrap().failures().is_empty());
    }

    #[test]
    fn functoriality_on_chain() {
        let a = cs("chain-4");
        let l = a.lattice();
        for t in 0..a.size() {
            for z in (0..a.size()).filter(|&z| l.leq(t, z)) {
                assert!(verify_functoriality(&a, t, z).unwrap().passed());
            }
        }
    }
}
