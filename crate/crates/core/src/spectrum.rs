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

//! Prime and semiprime congruences, radicals, Stone sets, the Boolean
//! center and hyperarchimedean algebras.

use serde::{Deserialize, Serialize};

use crate::commutator::{perp, CommutatorStructure, SEMI_DEGENERATE, STANDING};
use crate::error::{Error, Result};
use crate::report::Report;

/// `φ` is proper and `[α,β] ≤ φ` forces `α ≤ φ` or `β ≤ φ`.
pub fn is_prime(cs: &CommutatorStructure, phi: usize) -> bool {
    let l = cs.lattice();
    let m = cs.size();
    phi != cs.top()
        && (0..m).all(|a| {
            l.leq(a, phi) || (0..m).all(|b| l.leq(b, phi) || !l.leq(cs.comm(a, b), phi))
        })
}

/// `[α,α] ≤ φ` forces `α ≤ φ`.
pub fn is_semiprime(cs: &CommutatorStructure, phi: usize) -> bool {
    let l = cs.lattice();
    (0..cs.size()).all(|a| !l.leq(cs.comm(a, a), phi) || l.leq(a, phi))
}

/// Spec by the definition. When the commutator distributes over joins the
/// primes are exactly the meet-irreducible semiprime congruences; that
/// characterization is recomputed and any disagreement is an error.
pub fn spectrum(cs: &CommutatorStructure) -> Result<Vec<usize>> {
    let spec: Vec<usize> = (0..cs.size()).filter(|&p| is_prime(cs, p)).collect();
    if cs.flags().join_distributive {
        let l = cs.lattice();
        let alt: Vec<usize> = (0..cs.size())
            .filter(|&p| l.is_meet_irreducible(p) && is_semiprime(cs, p))
            .collect();
        if alt != spec {
            return Err(Error::Internal(format!(
                "primes {:?} differ from meet-irreducible semiprimes {:?} in {}",
                spec,
                alt,
                cs.name()
            )));
        }
    }
    Ok(spec)
}

/// The coatoms.
pub fn maximal(cs: &CommutatorStructure) -> Vec<usize> {
    cs.lattice().coatoms()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalMethod {
    /// Meet of the primes above θ (∇ when there are none).
    ViaSpec,
    /// Join of the principal α with `[α,α]^k ≤ θ` for some `k`.
    ViaIteration,
}

fn radical_from_spec(cs: &CommutatorStructure, spec: &[usize], theta: usize) -> usize {
    let l = cs.lattice();
    l.meet_all(spec.iter().copied().filter(|&p| l.leq(theta, p)))
}

fn radical_by_iteration(cs: &CommutatorStructure, principal: &[bool], theta: usize) -> usize {
    let l = cs.lattice();
    l.join_all((0..cs.size()).filter(|&a| {
        principal[a] && cs.self_powers(a).iter().any(|&p| l.leq(p, theta))
    }))
}

pub fn radical(cs: &CommutatorStructure, theta: usize, method: RadicalMethod) -> Result<usize> {
    match method {
        RadicalMethod::ViaSpec => Ok(radical_from_spec(cs, &spectrum(cs)?, theta)),
        RadicalMethod::ViaIteration => {
            let principal = cs.principal().ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{} has no principal congruences marked",
                    cs.name()
                ))
            })?;
            Ok(radical_by_iteration(cs, principal, theta))
        }
    }
}

/// Spectrum, maximal congruences and radicals, computed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectral {
    pub spec: Vec<usize>,
    pub max: Vec<usize>,
    /// `rho[θ]` is the radical of θ.
    pub rho: Vec<usize>,
}

impl Spectral {
    pub fn new(cs: &CommutatorStructure) -> Result<Self> {
        let spec = spectrum(cs)?;
        let rho = (0..cs.size()).map(|t| radical_from_spec(cs, &spec, t)).collect();
        Ok(Spectral {
            spec,
            max: maximal(cs),
            rho,
        })
    }

    /// Primes above θ.
    pub fn v(&self, cs: &CommutatorStructure, theta: usize) -> Vec<usize> {
        self.spec.iter().copied().filter(|&p| cs.lattice().leq(theta, p)).collect()
    }

    /// Primes not above θ.
    pub fn d(&self, cs: &CommutatorStructure, theta: usize) -> Vec<usize> {
        self.spec.iter().copied().filter(|&p| !cs.lattice().leq(theta, p)).collect()
    }

    pub fn semiprime_algebra(&self, cs: &CommutatorStructure) -> bool {
        self.rho[cs.bottom()] == cs.bottom()
    }

    /// Radical congruences, in lattice order.
    pub fn radicals(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.rho.clone();
        r.sort_unstable();
        r.dedup();
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoneSets {
    pub v: Vec<usize>,
    pub d: Vec<usize>,
}

pub fn stone_sets(cs: &CommutatorStructure, theta: usize) -> Result<StoneSets> {
    let s = Spectral::new(cs)?;
    Ok(StoneSets {
        v: s.v(cs, theta),
        d: s.d(cs, theta),
    })
}

/// Congruences with a complement: `α ∨ β = ∇` and `α ∧ β = Δ`.
pub fn boolean_center(cs: &CommutatorStructure) -> Vec<usize> {
    cs.lattice().complemented()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperarchimedean {
    pub holds: bool,
    /// For each principal α, the least `n` with `[α,α]^n` in the Boolean
    /// center, if any.
    pub witnesses: Vec<(usize, Option<usize>)>,
}

pub fn is_hyperarchimedean(cs: &CommutatorStructure) -> Result<Hyperarchimedean> {
    let principal = cs.principal().ok_or_else(|| {
        Error::InvalidArgument(format!("{} has no principal congruences marked", cs.name()))
    })?;
    let center = boolean_center(cs);
    let witnesses: Vec<(usize, Option<usize>)> = (0..cs.size())
        .filter(|&a| principal[a])
        .map(|a| {
            let n = cs
                .self_powers(a)
                .iter()
                .position(|p| center.contains(p))
                .map(|i| i + 1);
            (a, n)
        })
        .collect();
    Ok(Hyperarchimedean {
        holds: witnesses.iter().all(|w| w.1.is_some()),
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub spec: Vec<String>,
    pub max: Vec<String>,
    /// `(θ, ρ(θ))` for every θ.
    pub radical_map: Vec<(String, String)>,
    pub semiprime_algebra: bool,
    pub boolean_center: Vec<String>,
    /// Absent when principal congruences are unknown.
    pub hyperarchimedean: Option<bool>,
}

pub fn spectrum_report(cs: &CommutatorStructure) -> Result<SpectrumReport> {
    let s = Spectral::new(cs)?;
    let lab = |a: &usize| cs.label(*a).to_string();
    Ok(SpectrumReport {
        spec: s.spec.iter().map(lab).collect(),
        max: s.max.iter().map(lab).collect(),
        radical_map: (0..cs.size()).map(|t| (lab(&t), lab(&s.rho[t]))).collect(),
        semiprime_algebra: s.semiprime_algebra(cs),
        boolean_center: boolean_center(cs).iter().map(lab).collect(),
        hyperarchimedean: is_hyperarchimedean(cs).ok().map(|h| h.holds),
    })
}

fn names(cs: &CommutatorStructure, xs: &[usize]) -> String {
    let v: Vec<&str> = xs.iter().map(|&x| cs.label(x)).collect();
    format!("{{{}}}", v.join(", "))
}

/// Radical and Stone-topology identities over every congruence.
pub fn spectrum_checks(cs: &CommutatorStructure) -> Result<Report> {
    let s = Spectral::new(cs)?;
    let l = cs.lattice();
    let m = cs.size();
    let f = cs.flags();
    let std = f.standing();
    let (bot, top) = (cs.bottom(), cs.top());
    let rho = |a: usize| s.rho[a];
    let lab = |a: usize| cs.label(a).to_string();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
    let mut r = Report::new(format!("spectrum of {}", cs.name()));

    r.check("primes are proper", !s.spec.contains(&top), String::new);
    r.check("rho(nabla) = nabla", rho(top) == top, || lab(rho(top)));
    r.check(
        "V(Delta) = Spec and V(nabla) is empty",
        s.v(cs, bot) == s.spec && s.v(cs, top).is_empty(),
        String::new,
    );
    let bad = pairs.iter().find(|&&(a, b)| {
        let mut both = s.v(cs, a);
        let vb = s.v(cs, b);
        both.retain(|p| vb.contains(p));
        s.v(cs, l.join(a, b)) != both
    });
    r.check("V(a v b) = V(a) n V(b)", bad.is_none(), || format!("{bad:?}"));
    let bad = pairs.iter().find(|&&(a, b)| {
        let mut either = s.v(cs, a);
        either.extend(s.v(cs, b));
        either.sort_unstable();
        either.dedup();
        s.v(cs, cs.comm(a, b)) != either || s.v(cs, l.meet(a, b)) != either
    });
    r.gated("V([a,b]) = V(a ^ b) = V(a) u V(b)", STANDING, std, bad.is_none(), || {
        let (a, b) = bad.unwrap();
        format!("{} {}", lab(*a), lab(*b))
    });
    let bad = (0..m).find(|&a| !l.leq(a, rho(a)) || rho(rho(a)) != rho(a) || s.v(cs, a) != s.v(cs, rho(a)));
    r.check("rho is extensive and idempotent with V(rho(a)) = V(a)", bad.is_none(), || {
        lab(bad.unwrap())
    });
    let bad = pairs
        .iter()
        .find(|&&(a, b)| l.leq(a, b) && !l.leq(rho(a), rho(b)));
    r.check("rho is monotone", bad.is_none(), || format!("{bad:?}"));
    let bad = pairs.iter().find(|&&(a, b)| {
        let sub = |x: &[usize], y: &[usize]| y.iter().all(|p| x.contains(p));
        let (va, vb) = (s.v(cs, a), s.v(cs, b));
        let c1 = l.leq(rho(a), rho(b));
        c1 != l.leq(a, rho(b)) || c1 != sub(&va, &vb) || (rho(a) == rho(b)) != (va == vb)
    });
    r.check(
        "rho(a) <= rho(b) iff a <= rho(b) iff V(a) contains V(b)",
        bad.is_none(),
        || format!("{bad:?}"),
    );
    let bad = pairs.iter().find_map(|&(a, b)| {
        let want = l.meet(rho(a), rho(b));
        let ok = rho(l.meet(a, b)) == want
            && (1..=3).all(|n| rho(cs.power(a, b, n)) == want && rho(cs.power(a, a, n)) == rho(a));
        (!ok).then(|| format!("{} {}", lab(a), lab(b)))
    });
    r.gated(
        "rho([a,b]^n) = rho(a ^ b) = rho(a) ^ rho(b) (n<=3)",
        STANDING,
        std,
        bad.is_none(),
        || bad.clone().unwrap_or_default(),
    );

    let sd = cs.semi_degenerate();
    let bad = (0..m).find(|&a| (s.v(cs, a).is_empty()) != (a == top));
    r.gated("V(a) empty iff a = nabla", SEMI_DEGENERATE, sd, bad.is_none(), || {
        lab(bad.unwrap())
    });
    let bad = (0..m).find(|&a| (rho(a) == top) != (a == top));
    r.gated("rho(a) = nabla iff a = nabla", SEMI_DEGENERATE, sd, bad.is_none(), || {
        lab(bad.unwrap())
    });
    let stray: Vec<usize> = s.max.iter().copied().filter(|x| !s.spec.contains(x)).collect();
    r.gated("maximal congruences are prime", SEMI_DEGENERATE, sd, stray.is_empty(), || {
        names(cs, &stray)
    });

    match cs.principal() {
        Some(principal) => {
            let cm = cs.modular_variety() && std;
            let hyp = "congruence-modular variety with commutative, join-distributive commutator";
            let bad = (0..m).find(|&t| radical_by_iteration(cs, principal, t) != rho(t));
            r.gated("radical via primes = radical via iterated commutators", hyp, cm, bad.is_none(), || {
                let t = bad.unwrap();
                format!(
                    "theta = {}: {} vs {}",
                    lab(t),
                    lab(rho(t)),
                    lab(radical_by_iteration(cs, principal, t))
                )
            });
            let bad = (0..m).filter(|&a| principal[a]).find(|&a| {
                l.leq(a, rho(bot)) != cs.self_powers(a).contains(&bot)
            });
            r.gated(
                "principal a <= rho(Delta) iff [a,a]^k = Delta for some k",
                hyp,
                cm,
                bad.is_none(),
                || lab(bad.unwrap()),
            );
        }
        None => {
            r.skip(
                "radical via primes = radical via iterated commutators",
                "principal congruences unknown",
            );
            r.skip(
                "principal a <= rho(Delta) iff [a,a]^k = Delta for some k",
                "principal congruences unknown",
            );
        }
    }

    if s.semiprime_algebra(cs) {
        let bad = pairs
            .iter()
            .find(|&&(a, b)| (cs.comm(a, b) == bot) != (l.meet(a, b) == bot));
        r.gated("semiprime: [a,b] = Delta iff a ^ b = Delta", STANDING, std, bad.is_none(), || {
            format!("{bad:?}")
        });
    } else {
        r.skip("semiprime: [a,b] = Delta iff a ^ b = Delta", "algebra is not semiprime");
    }
    Ok(r)
}

/// The Boolean center is a Boolean algebra under `∨`, `[·,·] = ∧` and `⊥`.
pub fn boolean_center_checks(cs: &CommutatorStructure) -> Report {
    let l = cs.lattice();
    let b = boolean_center(cs);
    let mut r = Report::new(format!("Boolean center of {}", cs.name()));
    r.check(
        "Delta and nabla are complemented",
        b.contains(&cs.bottom()) && b.contains(&cs.top()),
        String::new,
    );
    if !cs.flags().nabla_neutral {
        r.skip("Boolean center is a Boolean algebra with complement perp", "[a,nabla] = a fails");
        return r;
    }
    let std = cs.flags().standing();
    let mut problems = Vec::new();
    for &x in &b {
        for &y in &b {
            if !b.contains(&l.join(x, y)) || !b.contains(&l.meet(x, y)) {
                problems.push(format!("{} , {} not closed", cs.label(x), cs.label(y)));
            }
            if cs.comm(x, y) != l.meet(x, y) {
                problems.push(format!("[{}, {}] is not the meet", cs.label(x), cs.label(y)));
            }
            for &z in &b {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    problems.push("not distributive".into());
                }
            }
        }
        match perp(cs, x) {
            Ok(p) => {
                if l.join(x, p) != cs.top() || l.meet(x, p) != cs.bottom() {
                    problems.push(format!("{}^perp = {} is not a complement", cs.label(x), cs.label(p)));
                }
            }
            Err(e) => problems.push(e.to_string()),
        }
    }
    problems.dedup();
    r.gated(
        "Boolean center is a Boolean algebra with complement perp",
        STANDING,
        std,
        problems.is_empty(),
        || problems.join("; "),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn by_label(cs: &CommutatorStructure, label: &str) -> usize {
        cs.lattice().index_of(label).unwrap()
    }

    #[test]
    fn c8_has_empty_spectrum() {
        let cs = fixtures::structure("c8").unwrap();
        let s = Spectral::new(&cs).unwrap();
        assert!(s.spec.is_empty());
        assert!(s.rho.iter().all(|&r| r == cs.top()));
        assert_eq!(boolean_center(&cs), vec![cs.bottom(), cs.top()]);
    }

    #[test]
    fn u_fixture() {
        let cs = fixtures::structure("u5").unwrap();
        assert!(spectrum(&cs).unwrap().is_empty());
        assert!(radical(&cs, 0, RadicalMethod::ViaIteration).is_err());
        assert_eq!(radical(&cs, 0, RadicalMethod::ViaSpec).unwrap(), cs.top());
    }

    #[test]
    fn lattice_p() {
        let cs = fixtures::structure("lattice-p").unwrap();
        let s = Spectral::new(&cs).unwrap();
        // meet-irreducibles of L2 + L2^2: bottom and the two coatoms
        assert_eq!(s.spec.len(), 3);
        assert!(s.spec.contains(&cs.bottom()));
        assert_eq!(s.max.len(), 2);
        assert!(s.semiprime_algebra(&cs));
        assert!(!is_hyperarchimedean(&cs).unwrap().holds);
    }

    #[test]
    fn chain_four_is_hyperarchimedean() {
        let cs = fixtures::structure("chain-4").unwrap();
        assert_eq!(boolean_center(&cs).len(), 8);
        let h = is_hyperarchimedean(&cs).unwrap();
        assert!(h.holds);
        assert!(h.witnesses.iter().all(|w| w.1 == Some(1)));
    }

    #[test]
    fn radical_methods_agree_on_groups_and_lattices() {
        for name in ["c8", "s3", "lattice-e", "lattice-p", "lattice-d", "chain-3"] {
            let cs = fixtures::structure(name).unwrap();
            for t in 0..cs.size() {
                assert_eq!(
                    radical(&cs, t, RadicalMethod::ViaSpec).unwrap(),
                    radical(&cs, t, RadicalMethod::ViaIteration).unwrap(),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn checks_hold_on_lattices() {
        for name in ["lattice-e", "lattice-p", "lattice-d", "chain-4"] {
            let cs = fixtures::structure(name).unwrap();
            let r = spectrum_checks(&cs).unwrap();
            assert!(r.passed() && r.count(|s| matches!(s, crate::Status::Conditional { .. })) == 0, "{r}");
            assert!(boolean_center_checks(&cs).passed());
        }
    }

    #[test]
    fn n_primes() {
        let cs = fixtures::structure("n5x").unwrap();
        let psi = by_label(&cs, "{a}{b,c}{x,y}");
        let xi = by_label(&cs, "{a,b}{c}{x,y}");
        assert_eq!(spectrum(&cs).unwrap(), {
            let mut v = vec![psi, xi];
            v.sort();
            v
        });
        let chi = by_label(&cs, "{a,b,c}{x,y}");
        assert!(!is_prime(&cs, chi));
        assert!(!is_prime(&cs, cs.top()));
    }
}
