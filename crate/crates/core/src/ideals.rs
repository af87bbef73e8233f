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

//! Ideals of finite lattices: enumeration, prime and maximal ideals,
//! annihilators and quotients by ideals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Default bound on the lattice size accepted by [`ideals`].
pub const DEFAULT_MAX_LATTICE: usize = 20;

/// The ideal-enumeration cap: `RETIC_MAX_LATTICE` if set and valid, else
/// [`DEFAULT_MAX_LATTICE`].
pub fn max_lattice_from_env() -> usize {
    std::env::var("RETIC_MAX_LATTICE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_LATTICE)
}

/// A nonempty down-set closed under joins, stored as sorted members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeIdeal {
    members: Vec<usize>,
}

impl LatticeIdeal {
    pub fn new(l: &FiniteLattice, members: &[usize]) -> Result<Self> {
        let mut m: Vec<usize> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if let Some(&bad) = m.iter().find(|&&x| x >= l.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: l.size(),
            });
        }
        let inside = mask(l.size(), &m);
        let down = m
            .iter()
            .all(|&x| (0..l.size()).all(|y| !l.leq(y, x) || inside[y]));
        let joins = m.iter().all(|&x| m.iter().all(|&y| inside[l.join(x, y)]));
        if m.is_empty() || !down || !joins {
            let labels: Vec<&str> = m.iter().map(|&x| l.label(x)).collect();
            return Err(Error::InvalidArgument(format!(
                "{{{}}} is not an ideal",
                labels.join(", ")
            )));
        }
        Ok(LatticeIdeal { members: m })
    }

    /// `(x]`.
    pub fn principal(l: &FiniteLattice, x: usize) -> Self {
        LatticeIdeal {
            members: (0..l.size()).filter(|&y| l.leq(y, x)).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &LatticeIdeal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_proper(&self, l: &FiniteLattice) -> bool {
        !self.contains(l.top())
    }

    /// The largest member.
    pub fn generator(&self, l: &FiniteLattice) -> usize {
        l.join_all(self.members.iter().copied())
    }

    pub fn display(&self, l: &FiniteLattice) -> String {
        format!("({}]", l.label(self.generator(l)))
    }
}

fn mask(n: usize, members: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in members {
        m[x] = true;
    }
    m
}

/// Smallest ideal containing `seed`.
fn close(l: &FiniteLattice, seed: &mut [bool]) {
    let n = l.size();
    loop {
        let mut grew = false;
        let cur: Vec<usize> = (0..n).filter(|&x| seed[x]).collect();
        for &x in &cur {
            for (y, s) in seed.iter_mut().enumerate() {
                if !*s && l.leq(y, x) {
                    *s = true;
                    grew = true;
                }
            }
            for &z in &cur {
                let j = l.join(x, z);
                if !seed[j] {
                    seed[j] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return;
        }
    }
}

/// Every ideal, by closure from `{0}` one element at a time. Refuses
/// lattices larger than the cap from the environment.
pub fn ideals(l: &FiniteLattice) -> Result<Vec<LatticeIdeal>> {
    ideals_with_cap(l, max_lattice_from_env())
}

pub fn ideals_with_cap(l: &FiniteLattice, cap: usize) -> Result<Vec<LatticeIdeal>> {
    let n = l.size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut start = vec![false; n];
    start[l.bottom()] = true;
    close(l, &mut start);
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(cur) = stack.pop() {
        for x in (0..n).filter(|&x| !cur[x]) {
            let mut next = cur.clone();
            next[x] = true;
            close(l, &mut next);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<LatticeIdeal> = seen
        .into_iter()
        .map(|m| LatticeIdeal {
            members: (0..n).filter(|&x| m[x]).collect(),
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// Proper `P` with `x ∧ y ∈ P` forcing `x ∈ P` or `y ∈ P`.
pub fn is_prime_ideal(l: &FiniteLattice, p: &LatticeIdeal) -> bool {
    let n = l.size();
    p.is_proper(l)
        && (0..n).all(|x| {
            p.contains(x) || (0..n).all(|y| p.contains(y) || !p.contains(l.meet(x, y)))
        })
}

pub fn prime_ideals(l: &FiniteLattice) -> Result<Vec<LatticeIdeal>> {
    Ok(ideals(l)?.into_iter().filter(|p| is_prime_ideal(l, p)).collect())
}

/// Proper ideals maximal under inclusion.
pub fn max_ideals(l: &FiniteLattice) -> Result<Vec<LatticeIdeal>> {
    let all = ideals(l)?;
    let proper: Vec<&LatticeIdeal> = all.iter().filter(|i| i.is_proper(l)).collect();
    Ok(proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect())
}

/// Prime ideals containing `j`.
pub fn v_id(primes: &[LatticeIdeal], j: &LatticeIdeal) -> Vec<usize> {
    (0..primes.len()).filter(|&i| j.is_subset(&primes[i])).collect()
}

/// `Ann(I) = {a | a ∧ x = 0 for all x ∈ I}`.
pub fn annihilator(l: &FiniteLattice, i: &LatticeIdeal) -> LatticeIdeal {
    LatticeIdeal {
        members: (0..l.size())
            .filter(|&a| i.members.iter().all(|&x| l.meet(a, x) == l.bottom()))
            .collect(),
    }
}

/// Complemented elements.
pub fn boolean_center_lattice(l: &FiniteLattice) -> Vec<usize> {
    l.complemented()
}

/// `Id(L)` ordered by inclusion, each ideal labelled `(x]`.
pub fn ideal_lattice(l: &FiniteLattice, ids: &[LatticeIdeal]) -> Result<FiniteLattice> {
    let labels = ids.iter().map(|i| i.display(l)).collect();
    FiniteLattice::from_fn(labels, |a, b| ids[a].is_subset(&ids[b]))
}

/// `L/I` under `x ~ y iff x ∨ a = y ∨ a for some a ∈ I`, with the
/// projection. Classes are labelled by their least member.
pub fn quotient_by_ideal(l: &FiniteLattice, i: &LatticeIdeal) -> Result<(FiniteLattice, Vec<usize>)> {
    let n = l.size();
    let related = |x: usize, y: usize| i.members.iter().any(|&a| l.join(x, a) == l.join(y, a));
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        let members: Vec<usize> = (x..n).filter(|&y| class[y] == usize::MAX && related(x, y)).collect();
        for &y in &members {
            class[y] = c;
        }
        reps.push(l.meet_all(members));
    }
    for x in 0..n {
        for y in 0..n {
            if (class[x] == class[y]) != related(x, y) {
                return Err(Error::NotALattice(format!(
                    "ideal relation is not an equivalence at {} {}",
                    l.label(x),
                    l.label(y)
                )));
            }
        }
    }
    // x ~ y forces x ∨ z ~ y ∨ z and x ∧ z ~ y ∧ z in a distributive lattice;
    // checked here so a non-distributive input is reported rather than
    // silently mislabelled.
    for x in 0..n {
        for y in (0..n).filter(|&y| class[y] == class[x]) {
            for z in 0..n {
                if class[l.join(x, z)] != class[l.join(y, z)] || class[l.meet(x, z)] != class[l.meet(y, z)] {
                    return Err(Error::NotALattice(
                        "ideal relation is not a lattice congruence".into(),
                    ));
                }
            }
        }
    }
    let labels = reps.iter().map(|&r| l.label(r).to_string()).collect();
    let q = FiniteLattice::from_fn(labels, |a, b| class[l.join(reps[a], reps[b])] == b)?;
    Ok((q, class))
}
