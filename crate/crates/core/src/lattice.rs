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

//! Finite bounded lattices with precomputed join and meet tables.

use crate::error::{Error, Result};

/// Five elements `[bottom, a, b, c, top]` spanning an `N5` or `M3`.
pub type SublatticeWitness = [usize; 5];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from a full order matrix (row-major, `leq[a*n+b]`).
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        if leq.len() != n * n {
            return Err(Error::NotALattice("order matrix has the wrong size".into()));
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !le(a, a) {
                return Err(Error::NotALattice(format!("`{}` is not below itself", labels[a])));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(Error::NotALattice(format!(
                        "`{}` and `{}` are below each other",
                        labels[a], labels[b]
                    )));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(Error::NotALattice(format!(
                            "order is not transitive at `{}`, `{}`, `{}`",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let ub: Vec<usize> = (0..n).filter(|&u| le(a, u) && le(b, u)).collect();
                let lub = ub.iter().copied().find(|&u| ub.iter().all(|&v| le(u, v)));
                let lb: Vec<usize> = (0..n).filter(|&u| le(u, a) && le(u, b)).collect();
                let glb = lb.iter().copied().find(|&u| lb.iter().all(|&v| le(v, u)));
                match (lub, glb) {
                    (Some(j), Some(m)) => {
                        join[a * n + b] = j;
                        meet[a * n + b] = m;
                    }
                    _ => {
                        return Err(Error::NotALattice(format!(
                            "`{}` and `{}` lack a join or a meet",
                            labels[a], labels[b]
                        )))
                    }
                }
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(FiniteLattice {
            labels,
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// Builds a lattice from generating pairs `a ≤ b`, taking the
    /// reflexive-transitive closure.
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    size: n,
                });
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(labels, leq)
    }

    pub fn from_fn(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let leq = (0..n * n).map(|p| le(p / n, p % n)).collect();
        Self::from_leq(labels, leq)
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(labels, |a, b| a <= b).expect("a chain is a lattice")
    }

    /// Subsets of a `k`-set under inclusion, as bitmasks.
    pub fn boolean(k: usize) -> Self {
        let labels = (0..1usize << k).map(|m| format!("{m:0k$b}")).collect();
        Self::from_fn(labels, |a, b| a & !b == 0).expect("a power set is a lattice")
    }

    /// Componentwise order; `(i, j)` has index `i * |other| + j`.
    pub fn product(&self, other: &FiniteLattice) -> Self {
        let nb = other.size();
        let labels = self
            .labels
            .iter()
            .flat_map(|x| other.labels.iter().map(move |y| format!("({x},{y})")))
            .collect();
        Self::from_fn(labels, |p, q| {
            self.leq(p / nb, q / nb) && other.leq(p % nb, q % nb)
        })
        .expect("a product of lattices is a lattice")
    }

    /// Glued ordinal sum: `other` is stacked on `self` with the top of
    /// `self` identified with the bottom of `other`.
    pub fn ordinal_sum(&self, other: &FiniteLattice) -> Self {
        let na = self.size();
        let below: Vec<usize> = (0..na).filter(|&x| x != self.top).collect();
        let above: Vec<usize> = (0..other.size()).collect();
        let mut labels: Vec<String> = below.iter().map(|&x| format!("l{}", self.labels[x])).collect();
        labels.extend(above.iter().map(|&y| format!("u{}", other.labels[y])));
        let split = below.len();
        Self::from_fn(labels, |p, q| match (p < split, q < split) {
            (true, true) => self.leq(below[p], below[q]),
            (true, false) => true,
            (false, true) => false,
            (false, false) => other.leq(above[p - split], above[q - split]),
        })
        .expect("an ordinal sum of lattices is a lattice")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn relabel(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        let n = self.size();
        (0..n)
            .filter(|&b| self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        let n = self.size();
        (0..n)
            .filter(|&b| self.lt(b, a) && !(0..n).any(|c| self.lt(b, c) && self.lt(c, a)))
            .collect()
    }

    /// Hasse edges `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|a| self.upper_covers(a).into_iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(self.bottom)
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers(self.top)
    }

    /// Length of the longest chain from the bottom to `a`.
    pub fn height(&self, a: usize) -> usize {
        let mut memo = vec![usize::MAX; self.size()];
        self.height_memo(a, &mut memo)
    }

    fn height_memo(&self, a: usize, memo: &mut Vec<usize>) -> usize {
        if memo[a] != usize::MAX {
            return memo[a];
        }
        let h = self
            .lower_covers(a)
            .into_iter()
            .map(|b| self.height_memo(b, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[a] = h;
        h
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut memo = vec![usize::MAX; self.size()];
        (0..self.size()).map(|a| self.height_memo(a, &mut memo)).collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Exactly one upper cover.
    pub fn is_meet_irreducible(&self, a: usize) -> bool {
        self.upper_covers(a).len() == 1
    }

    /// Exactly one lower cover.
    pub fn is_join_irreducible(&self, a: usize) -> bool {
        self.lower_covers(a).len() == 1
    }

    /// An `N5` sublattice, if any.
    pub fn find_pentagon(&self) -> Option<SublatticeWitness> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                for c in 0..n {
                    let incomparable = |x: usize| !self.leq(x, c) && !self.leq(c, x);
                    if incomparable(a)
                        && incomparable(b)
                        && self.meet(a, c) == self.meet(b, c)
                        && self.join(a, c) == self.join(b, c)
                    {
                        return Some([self.meet(a, c), a, b, c, self.join(a, c)]);
                    }
                }
            }
        }
        None
    }

    /// An `M3` sublattice, if any.
    pub fn find_diamond(&self) -> Option<SublatticeWitness> {
        let n = self.size();
        let incomparable = |x: usize, y: usize| !self.leq(x, y) && !self.leq(y, x);
        for x in 0..n {
            for y in (x + 1)..n {
                if !incomparable(x, y) {
                    continue;
                }
                for z in (y + 1)..n {
                    if incomparable(x, z)
                        && incomparable(y, z)
                        && self.meet(x, y) == self.meet(x, z)
                        && self.meet(x, y) == self.meet(y, z)
                        && self.join(x, y) == self.join(x, z)
                        && self.join(x, y) == self.join(y, z)
                    {
                        return Some([self.meet(x, y), x, y, z, self.join(x, y)]);
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.find_pentagon().is_none()
    }

    pub fn is_distributive(&self) -> bool {
        self.find_pentagon().is_none() && self.find_diamond().is_none()
    }

    /// A triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn complements(&self, a: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&b| self.join(a, b) == self.top && self.meet(a, b) == self.bottom)
            .collect()
    }

    /// Elements that have a complement.
    pub fn complemented(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| !self.complements(a).is_empty())
            .collect()
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.complemented().len() == self.size()
    }

    /// The subset with the induced order, validated as a lattice in its own
    /// right (joins may differ from those of `self`).
    pub fn induced(&self, subset: &[usize]) -> Result<FiniteLattice> {
        let labels = subset.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_fn(labels, |p, q| self.leq(subset[p], subset[q]))
    }

    /// Whether `subset` is closed under the join and meet of `self`.
    pub fn is_sublattice(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.size()];
        for &x in subset {
            inside[x] = true;
        }
        subset.iter().all(|&x| {
            subset
                .iter()
                .all(|&y| inside[self.join(x, y)] && inside[self.meet(x, y)])
        })
    }

    /// Whether `map` preserves joins, meets and both bounds.
    pub fn is_bounded_morphism(&self, target: &FiniteLattice, map: &[usize]) -> bool {
        let n = self.size();
        map.len() == n
            && map[self.bottom] == target.bottom
            && map[self.top] == target.top
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    map[self.join(a, b)] == target.join(map[a], map[b])
                        && map[self.meet(a, b)] == target.meet(map[a], map[b])
                })
            })
    }
}
