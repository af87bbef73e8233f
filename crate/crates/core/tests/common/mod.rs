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

//! Brute-force oracles that read only raw operation tables and lattice
//! orders, independent of the library's closure algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use retic_core::{Congruence, FiniteAlgebra, FiniteLattice};

/// Every partition of `0..n` as a restricted growth string.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    go(1, 0, &mut cur, &mut out);
    out
}

/// All argument tuples of length `k` over `0..n`.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// `key` is compatible when related argument tuples give related values.
pub fn compatible(alg: &FiniteAlgebra, key: &[usize]) -> bool {
    let n = alg.size();
    alg.operations().iter().all(|op| {
        let k = op.arity();
        let all = tuples(n, k);
        all.iter().all(|s| {
            all.iter().all(|t| {
                let related = s.iter().zip(t).all(|(&x, &y)| key[x] == key[y]);
                !related || key[op.apply(s)] == key[op.apply(t)]
            })
        })
    })
}

/// Congruences by exhaustive search over partitions.
pub fn congruences(alg: &FiniteAlgebra) -> Vec<Congruence> {
    partitions(alg.size())
        .into_iter()
        .filter(|k| compatible(alg, k))
        .map(|k| Congruence::from_key(&k))
        .collect()
}

/// A finite group read from a binary operation table.
pub struct Group {
    pub n: usize,
    mul: Vec<usize>,
    pub one: usize,
}

impl Group {
    pub fn new(alg: &FiniteAlgebra, symbol: &str) -> Self {
        let n = alg.size();
        let mul: Vec<usize> = tuples(n, 2)
            .iter()
            .map(|t| alg.evaluate(symbol, t).unwrap())
            .collect();
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
            .expect("identity");
        Group { n, mul, one }
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        (0..self.n).find(|&y| self.mul(x, y) == self.one).unwrap()
    }

    /// Closure of `gens` under multiplication.
    pub fn generated(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut s = gens.clone();
        s.insert(self.one);
        loop {
            let next: BTreeSet<usize> = s
                .iter()
                .flat_map(|&x| s.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .chain(s.iter().copied())
                .collect();
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn normal_subgroups(&self) -> Vec<BTreeSet<usize>> {
        (0u64..1 << self.n)
            .map(|mask| (0..self.n).filter(|&x| mask >> x & 1 == 1).collect::<BTreeSet<usize>>())
            .filter(|s| {
                s.contains(&self.one)
                    && s.iter().all(|&x| s.iter().all(|&y| s.contains(&self.mul(x, y))))
                    && s.iter().all(|&x| {
                        (0..self.n).all(|g| s.contains(&self.mul(self.mul(g, x), self.inv(g))))
                    })
            })
            .collect()
    }

    /// The subgroup generated by the commutators `h k h^-1 k^-1`.
    pub fn commutator(&self, h: &BTreeSet<usize>, k: &BTreeSet<usize>) -> BTreeSet<usize> {
        let gens = h
            .iter()
            .flat_map(|&x| k.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y))))
            .collect();
        self.generated(&gens)
    }

    /// Cosets of a normal subgroup as a congruence.
    pub fn congruence(&self, s: &BTreeSet<usize>) -> Congruence {
        let key: Vec<usize> = (0..self.n)
            .map(|x| (0..self.n).find(|&y| s.contains(&self.mul(self.inv(y), x))).unwrap())
            .collect();
        Congruence::from_key(&key)
    }
}

/// Nonempty down-sets closed under joins.
pub fn ideals(l: &FiniteLattice) -> Vec<BTreeSet<usize>> {
    let n = l.size();
    (1u64..1 << n)
        .map(|mask| (0..n).filter(|&x| mask >> x & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| {
            s.iter().all(|&x| (0..n).all(|y| !l.leq(y, x) || s.contains(&y)))
                && s.iter().all(|&x| s.iter().all(|&y| s.contains(&l.join(x, y))))
        })
        .collect()
}

pub fn prime_ideals(l: &FiniteLattice) -> Vec<BTreeSet<usize>> {
    let n = l.size();
    ideals(l)
        .into_iter()
        .filter(|s| {
            s.len() < n
                && (0..n).all(|a| (0..n).all(|b| !s.contains(&l.meet(a, b)) || s.contains(&a) || s.contains(&b)))
        })
        .collect()
}

/// Elements with a complement.
pub fn complemented(l: &FiniteLattice) -> Vec<usize> {
    let n = l.size();
    (0..n)
        .filter(|&a| (0..n).any(|b| l.join(a, b) == l.top() && l.meet(a, b) == l.bottom()))
        .collect()
}

/// Primes of a commutator table straight from the definition.
pub fn primes(l: &FiniteLattice, comm: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let n = l.size();
    (0..n)
        .filter(|&p| {
            p != l.top()
                && (0..n).all(|a| (0..n).all(|b| !l.leq(comm(a, b), p) || l.leq(a, p) || l.leq(b, p)))
        })
        .collect()
}

/// Meet of the primes above θ, ∇ when there are none.
pub fn radical(l: &FiniteLattice, primes: &[usize], theta: usize) -> usize {
    primes
        .iter()
        .filter(|&&p| l.leq(theta, p))
        .fold(l.top(), |acc, &p| l.meet(acc, p))
}
