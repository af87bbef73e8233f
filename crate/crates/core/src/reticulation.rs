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

//! The reticulation `L(A) = Con(A)/≡`, where `α ≡ β` iff `ρ(α) = ρ(β)`,
//! with the `θ*`/`I_*` correspondence between congruences and ideals.

use crate::algebra::{FiniteAlgebra, Signature};
use crate::commutator::{perp, CommutatorStructure, SEMI_DEGENERATE, STANDING};
use crate::error::{Error, Result};
use crate::ideals::{
    annihilator, ideal_lattice, ideals, is_prime_ideal, max_ideals, prime_ideals, v_id,
    LatticeIdeal,
};
use crate::iso::lattice_iso;
use crate::lattice::FiniteLattice;
use crate::report::Report;
use crate::spectrum::{boolean_center, Spectral};

#[derive(Clone, Debug)]
pub struct Reticulation {
    source: CommutatorStructure,
    spectral: Spectral,
    /// Congruences of each class, ascending.
    classes: Vec<Vec<usize>>,
    /// The common radical of each class.
    radical: Vec<usize>,
    /// Least member of each class (or its first member if it has no least).
    reps: Vec<usize>,
    lambda: Vec<usize>,
    lattice: FiniteLattice,
}

impl Reticulation {
    pub fn source(&self) -> &CommutatorStructure {
        &self.source
    }

    pub fn spectral(&self) -> &Spectral {
        &self.spectral
    }

    pub fn rho(&self, theta: usize) -> usize {
        self.spectral.rho[theta]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The class of a congruence.
    pub fn lambda(&self, theta: usize) -> usize {
        self.lambda[theta]
    }

    pub fn lambda_map(&self) -> &[usize] {
        &self.lambda
    }

    pub fn representative(&self, class: usize) -> usize {
        self.reps[class]
    }

    /// The radical congruence of a class.
    pub fn class_radical(&self, class: usize) -> usize {
        self.radical[class]
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Whether the commutator is commutative and distributes over joins.
    pub fn standing(&self) -> bool {
        self.source.flags().standing()
    }
}

/// Groups Con(A) by radical and orders the classes by their radicals.
/// The lattice laws of `λ` are verified exhaustively; a failure is refused
/// with the law named.
pub fn build_reticulation(cs: &CommutatorStructure) -> Result<Reticulation> {
    let spectral = Spectral::new(cs)?;
    let l = cs.lattice();
    let m = cs.size();
    let mut classes: Vec<(usize, Vec<usize>)> = spectral
        .radicals()
        .into_iter()
        .map(|r| (r, (0..m).filter(|&a| spectral.rho[a] == r).collect()))
        .collect();
    let rep_of = |c: &[usize]| {
        let low = l.meet_all(c.iter().copied());
        if c.contains(&low) {
            low
        } else {
            c[0]
        }
    };
    classes.sort_by_key(|(_, c)| rep_of(c));
    let reps: Vec<usize> = classes.iter().map(|(_, c)| rep_of(c)).collect();
    let radical: Vec<usize> = classes.iter().map(|(r, _)| *r).collect();
    let classes: Vec<Vec<usize>> = classes.into_iter().map(|(_, c)| c).collect();
    let mut lambda = vec![0; m];
    for (i, c) in classes.iter().enumerate() {
        for &a in c {
            lambda[a] = i;
        }
    }
    let labels = reps.iter().map(|&r| cs.label(r).to_string()).collect();
    let lattice = FiniteLattice::from_fn(labels, |x, y| l.leq(radical[x], radical[y]))?;

    let mut failed = None;
    'outer: for a in 0..m {
        for b in 0..m {
            let want = lattice.meet(lambda[a], lambda[b]);
            if lambda[l.join(a, b)] != lattice.join(lambda[a], lambda[b]) {
                failed = Some("lambda(a v b) = lambda(a) v lambda(b)");
            } else if lambda[l.meet(a, b)] != want {
                failed = Some("lambda(a ^ b) = lambda(a) ^ lambda(b)");
            } else if lambda[cs.comm(a, b)] != want {
                failed = Some("lambda([a,b]) = lambda(a) ^ lambda(b)");
            }
            if failed.is_some() {
                break 'outer;
            }
        }
    }
    if failed.is_none() && !lattice.is_distributive() {
        failed = Some("L(A) is distributive");
    }
    if let Some(law) = failed {
        let f = cs.flags();
        let mut missing = Vec::new();
        if !f.commutative {
            missing.push("commutative");
        }
        if !f.join_distributive {
            missing.push("distributive over joins");
        }
        return Err(if missing.is_empty() {
            Error::Internal(format!("{}: {law} fails", cs.name()))
        } else {
            Error::Hypothesis(format!(
                "{}: {law} fails; the commutator is not {}",
                cs.name(),
                missing.join(" and ")
            ))
        });
    }
    Ok(Reticulation {
        source: cs.clone(),
        spectral,
        classes,
        radical,
        reps,
        lambda,
        lattice,
    })
}

/// `θ* = {λ(α) | α ≤ θ}`.
pub fn theta_star(r: &Reticulation, theta: usize) -> Result<LatticeIdeal> {
    let l = r.source.lattice();
    let members: Vec<usize> = (0..r.source.size())
        .filter(|&a| l.leq(a, theta))
        .map(|a| r.lambda[a])
        .collect();
    LatticeIdeal::new(&r.lattice, &members)
}

/// `I_* = ⋁{α | λ(α) ∈ I}`.
pub fn ideal_lower_star(r: &Reticulation, i: &LatticeIdeal) -> Result<usize> {
    let i = LatticeIdeal::new(&r.lattice, i.members())?;
    Ok(r
        .source
        .lattice()
        .join_all((0..r.source.size()).filter(|&a| i.contains(r.lambda[a]))))
}

/// Radical congruences under the induced order, whose join is `ρ(α ∨ β)`.
pub fn rcon_lattice(cs: &CommutatorStructure) -> Result<(FiniteLattice, Vec<usize>)> {
    let r = build_reticulation(cs)?;
    let rads = r.spectral.radicals();
    let l = cs.lattice();
    let labels = rads.iter().map(|&x| cs.label(x).to_string()).collect();
    let lat = FiniteLattice::from_fn(labels, |a, b| l.leq(rads[a], rads[b]))?;
    Ok((lat, rads))
}

fn show(l: &FiniteLattice, xs: &[usize]) -> String {
    let v: Vec<&str> = xs.iter().map(|&x| l.label(x)).collect();
    format!("{{{}}}", v.join(", "))
}

/// `u(φ) = φ*` and `v(P) = P_*` between Spec(A) and the prime ideals of
/// L(A), with transport of the closed sets.
pub fn verify_spec_homeomorphism(r: &Reticulation) -> Result<Report> {
    let cs = &r.source;
    let l = cs.lattice();
    let spec = &r.spectral.spec;
    let primes = prime_ideals(&r.lattice)?;
    let std = r.standing();
    let mut rep = Report::new(format!("spectra of {} and L({})", cs.name(), cs.name()));

    let u: Vec<LatticeIdeal> = spec.iter().map(|&p| theta_star(r, p)).collect::<Result<_>>()?;
    let bad: Vec<usize> = spec
        .iter()
        .zip(&u)
        .filter(|(_, i)| !is_prime_ideal(&r.lattice, i))
        .map(|(&p, _)| p)
        .collect();
    rep.gated("u maps primes to prime ideals", STANDING, std, bad.is_empty(), || show(l, &bad));
    let v: Vec<usize> = primes.iter().map(|p| ideal_lower_star(r, p)).collect::<Result<_>>()?;
    let bad: Vec<String> = primes
        .iter()
        .zip(&v)
        .filter(|(_, x)| !spec.contains(x))
        .map(|(p, _)| p.display(&r.lattice))
        .collect();
    rep.gated("v maps prime ideals to primes", STANDING, std, bad.is_empty(), || bad.join(", "));
    let vu = spec
        .iter()
        .zip(&u)
        .all(|(&p, i)| ideal_lower_star(r, i).ok() == Some(p));
    rep.gated("v(u(p)) = p", STANDING, std, vu, String::new);
    let uv = primes
        .iter()
        .zip(&v)
        .all(|(p, &x)| theta_star(r, x).ok().as_ref() == Some(p));
    rep.gated("u(v(P)) = P", STANDING, std, uv, String::new);
    rep.gated(
        "|Spec(A)| = |Spec_Id(L(A))|",
        STANDING,
        std,
        spec.len() == primes.len(),
        || format!("{} vs {}", spec.len(), primes.len()),
    );

    let mut bad = None;
    let mut closed_a = Vec::new();
    let mut closed_l = Vec::new();
    for t in 0..cs.size() {
        let ts = theta_star(r, t)?;
        let va: Vec<usize> = r.spectral.v(cs, t);
        let mut image: Vec<usize> = va
            .iter()
            .filter_map(|p| spec.iter().position(|q| q == p))
            .filter_map(|k| primes.iter().position(|pp| *pp == u[k]))
            .collect();
        image.sort_unstable();
        let vl = v_id(&primes, &ts);
        if image != vl && bad.is_none() {
            bad = Some(cs.label(t).to_string());
        }
        closed_a.push(va);
        closed_l.push(vl);
    }
    rep.gated("u(V(theta)) = V_Id(theta*)", STANDING, std, bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });
    let all_ideals = ideals(&r.lattice)?;
    let mut sets_l: Vec<Vec<usize>> = all_ideals.iter().map(|j| v_id(&primes, j)).collect();
    closed_a.sort();
    closed_a.dedup();
    sets_l.sort();
    sets_l.dedup();
    rep.gated(
        "as many closed sets on each side",
        STANDING,
        std,
        closed_a.len() == sets_l.len(),
        || format!("{} vs {}", closed_a.len(), sets_l.len()),
    );
    Ok(rep)
}

/// `(θ*)_* = ρ(θ)`, `(I_*)* = I`, and the isomorphism RCon(A) ≅ Id(L(A)).
pub fn galois_checks(r: &Reticulation) -> Result<Report> {
    let cs = &r.source;
    let l = cs.lattice();
    let m = cs.size();
    let std = r.standing();
    let mut rep = Report::new(format!("ideals of L({})", cs.name()));
    let stars: Vec<LatticeIdeal> = (0..m).map(|t| theta_star(r, t)).collect::<Result<_>>()?;
    let all = ideals(&r.lattice)?;

    let bad = (0..m).find(|&t| !l.leq(t, ideal_lower_star(r, &stars[t]).unwrap_or(t)));
    rep.gated("theta <= (theta*)_*", STANDING, std, bad.is_none(), || {
        cs.label(bad.unwrap()).to_string()
    });
    let bad = (0..m).find(|&t| ideal_lower_star(r, &stars[t]).ok() != Some(r.rho(t)));
    rep.gated("(theta*)_* = rho(theta)", STANDING, std, bad.is_none(), || {
        cs.label(bad.unwrap()).to_string()
    });
    let bad = all.iter().find(|i| {
        ideal_lower_star(r, i)
            .and_then(|x| theta_star(r, x))
            .ok()
            .as_ref()
            != Some(*i)
    });
    rep.gated("(I_*)* = I", STANDING, std, bad.is_none(), || {
        bad.unwrap().display(&r.lattice)
    });
    let bad = (0..m).find(|&t| stars[r.rho(t)] != stars[t]);
    rep.gated("rho(theta)* = theta*", STANDING, std, bad.is_none(), || {
        cs.label(bad.unwrap()).to_string()
    });
    let bad = (0..m).find(|&t| stars[t] != LatticeIdeal::principal(&r.lattice, r.lambda[t]));
    rep.gated("theta* = (lambda(theta)]", STANDING, std, bad.is_none(), || {
        cs.label(bad.unwrap()).to_string()
    });
    let bad = all.iter().find_map(|i| {
        let lo = ideal_lower_star(r, i).ok()?;
        (0..m)
            .find(|&a| l.leq(a, lo) != i.contains(r.lambda[a]))
            .map(|a| format!("{} against {}", cs.label(a), i.display(&r.lattice)))
    });
    rep.gated("a <= I_* iff lambda(a) in I", STANDING, std, bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });

    let rads = r.spectral.radicals();
    let idl = ideal_lattice(&r.lattice, &all)?;
    let image: Vec<Option<usize>> = rads
        .iter()
        .map(|&t| all.iter().position(|i| *i == stars[t]))
        .collect();
    let iso = image.iter().all(Option::is_some) && {
        let img: Vec<usize> = image.iter().map(|x| x.unwrap()).collect();
        let mut seen = img.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == all.len()
            && img.len() == all.len()
            && (0..rads.len()).all(|a| {
                (0..rads.len()).all(|b| l.leq(rads[a], rads[b]) == idl.leq(img[a], img[b]))
            })
    };
    rep.gated(
        "theta -> theta* is an isomorphism RCon(A) -> Id(L(A))",
        STANDING,
        std,
        iso,
        || format!("{} radicals, {} ideals", rads.len(), all.len()),
    );
    Ok(rep)
}

/// The two-operation bounded-lattice algebra on `l`, with constants.
pub fn lattice_algebra(name: &str, l: &FiniteLattice) -> Result<FiniteAlgebra> {
    let sig = Signature::new(vec![
        ("join".into(), 2),
        ("meet".into(), 2),
        ("zero".into(), 0),
        ("one".into(), 0),
    ])?;
    FiniteAlgebra::from_fn(name, l.labels().to_vec(), &sig, |i, args| match i {
        0 => l.join(args[0], args[1]),
        1 => l.meet(args[0], args[1]),
        2 => l.bottom(),
        _ => l.top(),
    })
}

/// Structural facts about `λ` and `L(A)`.
pub fn lattice_checks(r: &Reticulation) -> Result<Report> {
    let cs = &r.source;
    let l = cs.lattice();
    let m = cs.size();
    let lat = &r.lattice;
    let mut rep = Report::new(format!("L({})", cs.name()));

    let mut hit = vec![false; r.size()];
    for &c in &r.lambda {
        hit[c] = true;
    }
    rep.check("lambda is surjective", hit.iter().all(|&h| h), String::new);
    let bad = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).find(|&(a, b)| {
        (r.lambda[a] == r.lambda[b]) != (r.rho(a) == r.rho(b))
    });
    rep.check("lambda(a) = lambda(b) iff rho(a) = rho(b)", bad.is_none(), || format!("{bad:?}"));
    rep.check(
        "lambda is a bounded lattice morphism",
        l.is_bounded_morphism(lat, &r.lambda),
        String::new,
    );
    rep.check("L(A) is distributive", lat.is_distributive(), String::new);
    let bad = (0..m).find(|&a| (r.lambda[a] == lat.top()) != (a == cs.top()));
    rep.gated(
        "lambda(a) = 1 iff a = nabla",
        SEMI_DEGENERATE,
        cs.semi_degenerate(),
        bad.is_none(),
        || cs.label(bad.unwrap()).to_string(),
    );

    let boolean = lat.is_boolean();
    let maxi = max_ideals(lat)?;
    let primes = prime_ideals(lat)?;
    rep.check(
        "L(A) Boolean iff maximal ideals = prime ideals",
        boolean == (maxi == primes),
        || format!("Boolean: {boolean}, {} maximal, {} prime", maxi.len(), primes.len()),
    );

    if cs.flags().equals_meet {
        let (rcon, rads) = rcon_lattice(cs)?;
        rep.check("commutator = meet: RCon(A) = Con(A)", rads.len() == m, || {
            format!("{} of {m}", rcon.size())
        });
        rep.check(
            "commutator = meet: L(A) = Con(A)",
            lattice_iso(lat, l).is_some(),
            String::new,
        );
        let lcon = {
            let alg = lattice_algebra("Con", l)?;
            let s = CommutatorStructure::from_algebra(&alg).assume_modular_variety(true);
            build_reticulation(&s)?.lattice
        };
        let conl = CommutatorStructure::from_algebra(&lattice_algebra("L", lat)?);
        rep.check(
            "L(Con(A)) = Con(L(A))",
            lattice_iso(&lcon, conl.lattice()).is_some(),
            || format!("{} vs {} elements", lcon.size(), conl.size()),
        );
    } else {
        rep.skip("commutator = meet: RCon(A) = Con(A)", "commutator differs from meet");
        rep.skip("commutator = meet: L(A) = Con(A)", "commutator differs from meet");
        rep.skip("L(Con(A)) = Con(L(A))", "commutator differs from meet");
    }
    Ok(rep)
}

/// Annihilators in L(A) against `⊥` in Con(A).
pub fn annihilator_checks(r: &Reticulation) -> Result<Report> {
    let cs = &r.source;
    let m = cs.size();
    let std = r.standing();
    let semiprime = r.spectral.semiprime_algebra(cs);
    let mut rep = Report::new(format!("annihilators in L({})", cs.name()));
    let perps: Vec<Option<usize>> = (0..m).map(|t| perp(cs, t).ok()).collect();
    if perps.iter().any(Option::is_none) {
        for name in ["(theta^perp)* in Ann(theta*)", "(I_*)^perp <= Ann(I)_*"] {
            rep.skip(name, "some theta^perp does not exist");
        }
        return Ok(rep);
    }
    let l = cs.lattice();
    let all = ideals(&r.lattice)?;
    let mut sub = true;
    let mut eq = true;
    for (t, p) in perps.iter().enumerate().take(m) {
        let left = theta_star(r, p.unwrap())?;
        let right = annihilator(&r.lattice, &theta_star(r, t)?);
        sub &= left.is_subset(&right);
        eq &= left == right;
    }
    rep.gated("(theta^perp)* in Ann(theta*)", STANDING, std, sub, String::new);
    let mut sub2 = true;
    let mut eq2 = true;
    for i in &all {
        let left = perp(cs, ideal_lower_star(r, i)?)?;
        let right = ideal_lower_star(r, &annihilator(&r.lattice, i))?;
        sub2 &= l.leq(left, right);
        eq2 &= left == right;
    }
    rep.gated("(I_*)^perp <= Ann(I)_*", STANDING, std, sub2, String::new);
    if semiprime {
        rep.gated("semiprime: (theta^perp)* = Ann(theta*)", STANDING, std, eq, String::new);
        rep.gated("semiprime: (I_*)^perp = Ann(I)_*", STANDING, std, eq2, String::new);
    } else {
        rep.skip("semiprime: (theta^perp)* = Ann(theta*)", "algebra is not semiprime");
        rep.skip("semiprime: (I_*)^perp = Ann(I)_*", "algebra is not semiprime");
    }
    Ok(rep)
}

/// `λ` restricted to the Boolean center.
pub fn boolean_checks(r: &Reticulation) -> Report {
    let cs = &r.source;
    let lat = &r.lattice;
    let b = boolean_center(cs);
    let bl = lat.complemented();
    let f = cs.flags();
    let sd = cs.semi_degenerate();
    let semiprime = r.spectral.semiprime_algebra(cs);
    let mut rep = Report::new(format!("Boolean centers of {} and L({})", cs.name(), cs.name()));
    let image: Vec<usize> = {
        let mut v: Vec<usize> = b.iter().map(|&a| r.lambda[a]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let hyp = "commutative, join-distributive commutator with [a,nabla] = a";
    let ok = f.standing() && f.nabla_neutral;
    let lands = image.iter().all(|x| bl.contains(x));
    rep.gated("lambda maps B(Con(A)) into B(L(A))", hyp, ok, lands, String::new);
    let injective = image.len() == b.len();
    rep.gated("lambda is injective on B(Con(A))", SEMI_DEGENERATE, sd, injective, || {
        format!("{} onto {}", b.len(), image.len())
    });
    let onto = image == bl;
    if f.associative {
        rep.gated("associative: lambda maps B(Con(A)) onto B(L(A))", SEMI_DEGENERATE, sd, onto, || {
            format!("{} of {}", image.len(), bl.len())
        });
    } else {
        rep.skip("associative: lambda maps B(Con(A)) onto B(L(A))", "commutator is not associative");
    }
    if semiprime {
        rep.gated("semiprime: lambda maps B(Con(A)) onto B(L(A))", SEMI_DEGENERATE, sd, onto, || {
            format!("{} of {}", image.len(), bl.len())
        });
        let bad = (0..cs.size()).find(|&a| b.contains(&a) != bl.contains(&r.lambda[a]));
        rep.gated(
            "semiprime: a in B(Con(A)) iff lambda(a) in B(L(A))",
            SEMI_DEGENERATE,
            sd,
            bad.is_none(),
            || cs.label(bad.unwrap()).to_string(),
        );
    } else {
        rep.skip("semiprime: lambda maps B(Con(A)) onto B(L(A))", "algebra is not semiprime");
        rep.skip(
            "semiprime: a in B(Con(A)) iff lambda(a) in B(L(A))",
            "algebra is not semiprime",
        );
    }
    if b.len() == cs.size() {
        rep.gated("Con(A) Boolean implies L(A) Boolean", hyp, ok, lat.is_boolean(), String::new);
    } else {
        rep.skip("Con(A) Boolean implies L(A) Boolean", "Con(A) is not Boolean");
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::identify;

    fn retic(name: &str) -> Reticulation {
        build_reticulation(&fixtures::structure(name).unwrap()).unwrap()
    }

    #[test]
    fn named_reticulations() {
        assert_eq!(identify(retic("c8").lattice()), vec!["L1"]);
        assert_eq!(identify(retic("s3").lattice()), vec!["L1"]);
        assert_eq!(identify(retic("u5").lattice()), vec!["L1"]);
        assert_eq!(identify(retic("n5x").lattice()), vec!["L2^2"]);
        assert_eq!(identify(retic("lattice-p").lattice()), vec!["L2+L2^2"]);
        assert_eq!(identify(retic("chain-4").lattice()), vec!["L2^3"]);
    }

    #[test]
    fn n_radicals() {
        let r = retic("n5x");
        let (rcon, _) = rcon_lattice(r.source()).unwrap();
        assert_eq!(rcon.size(), 4);
        for t in 0..r.source().size() {
            let s = theta_star(&r, t).unwrap();
            assert_eq!(ideal_lower_star(&r, &s).unwrap(), r.rho(t));
        }
    }

    #[test]
    fn semiprime_delta_star() {
        let r = retic("lattice-p");
        let d = theta_star(&r, r.source().bottom()).unwrap();
        assert_eq!(d, LatticeIdeal::principal(r.lattice(), r.lattice().bottom()));
    }

    #[test]
    fn batteries_hold_on_lattices() {
        for name in ["lattice-e", "lattice-p", "lattice-d", "chain-2", "chain-3", "chain-4"] {
            let r = retic(name);
            for rep in [
                verify_spec_homeomorphism(&r).unwrap(),
                galois_checks(&r).unwrap(),
                lattice_checks(&r).unwrap(),
                annihilator_checks(&r).unwrap(),
                boolean_checks(&r),
            ] {
                assert!(rep.all_hold() && rep.failures().is_empty(), "{rep}");
            }
        }
    }

    #[test]
    fn lower_star_rejects_foreign_ideals() {
        let r = retic("n5x");
        let big = retic("lattice-e");
        let foreign = LatticeIdeal::principal(big.lattice(), big.lattice().top());
        assert!(ideal_lower_star(&r, &foreign).is_err());
    }

    #[test]
    fn lattice_algebra_round_trip() {
        let l = FiniteLattice::boolean(2);
        let a = lattice_algebra("sq", &l).unwrap();
        let cs = CommutatorStructure::from_algebra(&a);
        assert_eq!(cs.size(), 4);
        assert!(cs.flags().equals_meet);
    }
}
