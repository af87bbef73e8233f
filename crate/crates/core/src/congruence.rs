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

//! Congruences as canonical partitions, principal generation and the
//! congruence lattice.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{for_each_tuple, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, SublatticeWitness};

/// Union-find whose roots are always the least element of their class, so
/// reading off the roots gives the canonical representative vector.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn from_congruence(c: &Congruence) -> Self {
        UnionFind {
            parent: c.rep.clone(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Merges the classes of `x` and `y`; returns whether they were apart.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo as u32;
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let rep = (0..n).map(|x| self.find(x) as u32).collect();
        Congruence { rep }
    }
}

/// An equivalence relation on `0..n`, stored as `rep[x]` = least element of
/// the block of `x`. Nothing here asserts compatibility with operations;
/// use [`Congruence::check_compatible`] for that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    rep: Vec<u32>,
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "{}", blocks.concat())
    }
}

impl Congruence {
    pub fn diagonal(n: usize) -> Self {
        Congruence {
            rep: (0..n as u32).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Congruence { rep: vec![0; n] }
    }

    /// Puts `x` and `y` together exactly when `key[x] == key[y]`.
    pub fn from_key<K: std::hash::Hash + Eq>(key: &[K]) -> Self {
        let mut first: HashMap<&K, u32> = HashMap::new();
        let rep = key
            .iter()
            .enumerate()
            .map(|(i, k)| *first.entry(k).or_insert(i as u32))
            .collect();
        Congruence { rep }
    }

    /// Accepts only vectors already in canonical form.
    pub fn from_rep(rep: Vec<usize>) -> Result<Self> {
        for (x, &r) in rep.iter().enumerate() {
            if r > x || rep[r] != r {
                return Err(Error::InvalidArgument(format!(
                    "representative vector is not canonical at {x}"
                )));
            }
        }
        Ok(Congruence {
            rep: rep.into_iter().map(|r| r as u32).collect(),
        })
    }

    /// Blocks must be disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut key = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
                if key[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("element {x} in two blocks")));
                }
                key[x] = b;
            }
        }
        if let Some(x) = key.iter().position(|&k| k == usize::MAX) {
            return Err(Error::InvalidArgument(format!("element {x} in no block")));
        }
        Ok(Self::from_key(&key))
    }

    pub fn size(&self) -> usize {
        self.rep.len()
    }

    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.rep[x] as usize
    }

    pub fn rep_vec(&self) -> Vec<usize> {
        self.rep.iter().map(|&r| r as usize).collect()
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    /// Block representatives in increasing order.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.rep(x) == x).collect()
    }

    pub fn block_count(&self) -> usize {
        (0..self.size()).filter(|&x| self.rep(x) == x).count()
    }

    /// Blocks ordered by least element, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.size()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.size() {
            let r = self.rep(x);
            if r == x {
                index[x] = out.len();
                out.push(Vec::new());
            }
            out[index[r]].push(x);
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| i as u32 == r)
    }

    pub fn is_total(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    /// Refinement order: `self ⊆ other` as relations.
    pub fn leq(&self, other: &Congruence) -> bool {
        debug_assert_eq!(self.size(), other.size());
        (0..self.size()).all(|x| other.rep[x] == other.rep[self.rep(x)])
    }

    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::from_congruence(self);
        for x in 0..self.size() {
            uf.union(x, other.rep(x));
        }
        uf.into_congruence()
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let key: Vec<(u32, u32)> = self.rep.iter().copied().zip(other.rep.iter().copied()).collect();
        Congruence::from_key(&key)
    }

    /// All related pairs `(x, y)`, including the diagonal.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for block in self.blocks() {
            for &x in &block {
                for &y in &block {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Related pairs with `x < y`.
    pub fn proper_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().into_iter().filter(|(x, y)| x < y).collect()
    }

    /// `self × other` on the product carrier indexed `i * |other| + j`.
    pub fn product(&self, other: &Congruence) -> Congruence {
        let nb = other.size();
        let key: Vec<(u32, u32)> = (0..self.size() * nb)
            .map(|p| (self.rep[p / nb], other.rep[p % nb]))
            .collect();
        Congruence::from_key(&key)
    }

    /// `self ∩ S²`, re-indexed along the embedding `elems` of `S`.
    pub fn restrict(&self, elems: &[usize]) -> Congruence {
        let key: Vec<u32> = elems.iter().map(|&x| self.rep[x]).collect();
        Congruence::from_key(&key)
    }

    /// Errors with an operation name and an offending argument tuple when the
    /// partition is not preserved.
    pub fn check_compatible(&self, alg: &FiniteAlgebra) -> Result<()> {
        if self.size() != alg.size() {
            return Err(Error::CarrierMismatch {
                expected: alg.size(),
                got: self.size(),
            });
        }
        let n = alg.size();
        for op in alg.operations() {
            let k = op.arity();
            for pos in 0..k {
                let mut witness = None;
                for_each_tuple(n, k, |t| {
                    if witness.is_some() || self.rep(t[pos]) == t[pos] {
                        return;
                    }
                    let mut u = t.to_vec();
                    u[pos] = self.rep(t[pos]);
                    if !self.related(op.apply(t), op.apply(&u)) {
                        witness = Some((t.to_vec(), u));
                    }
                });
                if let Some((t, u)) = witness {
                    let show = |v: &[usize]| {
                        v.iter().map(|&x| alg.label(x)).collect::<Vec<_>>().join(", ")
                    };
                    return Err(Error::NotCompatible {
                        op: op.name().to_string(),
                        witness: format!("({}) vs ({})", show(&t), show(&u)),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_compatible(&self, alg: &FiniteAlgebra) -> bool {
        self.check_compatible(alg).is_ok()
    }

    /// Blocks written with element labels, e.g. `{a,b}{x,y,z}`.
    pub fn display_with(&self, labels: &[String]) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                let s: Vec<&str> = b.iter().map(|&x| labels[x].as_str()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect()
    }
}

/// Sort key giving Δ first and ∇ last.
fn order_key(c: &Congruence) -> (Reverse<usize>, &[u32]) {
    (Reverse(c.block_count()), &c.rep)
}

/// The congruence generated by `pairs`.
pub fn cg_generate(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Congruence {
    cg_extend(alg, &Congruence::diagonal(alg.size()), pairs)
}

/// The congruence generated by `base ∪ pairs`, where `base` is already a
/// congruence of `alg`.
///
/// Every edge that merges two classes is pushed through all basic
/// translations; since the edges span the relation, that closes it under
/// all unary polynomials.
pub fn cg_extend(alg: &FiniteAlgebra, base: &Congruence, pairs: &[(usize, usize)]) -> Congruence {
    let translations = alg.basic_translations();
    let mut uf = UnionFind::from_congruence(base);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((a, b)) = work.pop() {
        for t in translations {
            let (x, y) = (t[a] as usize, t[b] as usize);
            if uf.union(x, y) {
                work.push((x, y));
            }
        }
    }
    uf.into_congruence()
}

/// Con(A) with its lattice structure and principal congruences marked.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    n: usize,
    congruences: Vec<Congruence>,
    lattice: FiniteLattice,
    principal: Vec<bool>,
    principal_of: Vec<usize>,
    index: HashMap<Congruence, usize>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.congruences[i]
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn principal(&self) -> &[bool] {
        &self.principal
    }

    /// Index of `Cg(a, b)`.
    pub fn principal_index(&self, a: usize, b: usize) -> usize {
        self.principal_of[a * self.n + b]
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }
}

/// All congruences: principal ones first, then closure under binary joins.
pub fn enumerate_congruences(alg: &FiniteAlgebra) -> CongruenceLattice {
    let n = alg.size();
    // warm the translation cache before fanning out
    alg.basic_translations();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let principals: Vec<Congruence> = pairs
        .par_iter()
        .map(|&(a, b)| cg_generate(alg, &[(a, b)]))
        .collect();

    let mut all: Vec<Congruence> = vec![Congruence::diagonal(n)];
    let mut seen: HashMap<Congruence, usize> = HashMap::new();
    seen.insert(all[0].clone(), 0);
    for c in &principals {
        if !seen.contains_key(c) {
            seen.insert(c.clone(), all.len());
            all.push(c.clone());
        }
    }
    let mut i = 1;
    while i < all.len() {
        for j in 0..i {
            let c = all[i].join(&all[j]);
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), all.len());
                all.push(c);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| order_key(a).cmp(&order_key(b)));
    let index: HashMap<Congruence, usize> =
        all.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut principal = vec![false; all.len()];
    let mut principal_of = vec![0usize; n * n];
    for a in 0..n {
        principal_of[a * n + a] = 0;
    }
    principal[0] = true;
    for (&(a, b), c) in pairs.iter().zip(&principals) {
        let k = index[c];
        principal[k] = true;
        principal_of[a * n + b] = k;
        principal_of[b * n + a] = k;
    }

    let m = all.len();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = all[i].leq(&all[j]);
        }
    }
    let labels = all.iter().map(|c| c.display_with(alg.labels())).collect();
    let lattice = FiniteLattice::from_leq(labels, leq)
        .expect("congruences of an algebra form a lattice under refinement");
    CongruenceLattice {
        n,
        congruences: all,
        lattice,
        principal,
        principal_of,
        index,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTests {
    pub modular: bool,
    pub distributive: bool,
    /// An `N5` sublattice when not modular.
    pub pentagon: Option<SublatticeWitness>,
    /// An `M3` sublattice when modular but not distributive.
    pub diamond: Option<SublatticeWitness>,
}

/// Modularity and distributivity by scanning for `N5` and `M3` sublattices.
pub fn lattice_tests(lat: &CongruenceLattice) -> LatticeTests {
    let pentagon = lat.lattice.find_pentagon();
    let diamond = lat.lattice.find_diamond();
    LatticeTests {
        modular: pentagon.is_none(),
        distributive: pentagon.is_none() && diamond.is_none(),
        pentagon,
        diamond: diamond.filter(|_| pentagon.is_none()),
    }
}

/// Indices of the coatoms of Con(A).
pub fn maximal_congruences(lat: &CongruenceLattice) -> Vec<usize> {
    lat.lattice.coatoms()
}

/// See [`FiniteAlgebra::singleton_subuniverses`].
pub fn singleton_subuniverses(alg: &FiniteAlgebra) -> Vec<usize> {
    alg.singleton_subuniverses()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    /// Every set partition of `0..n`, as block-key vectors.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut key = vec![0usize; n];
        fn go(i: usize, blocks: usize, key: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == key.len() {
                out.push(key.clone());
                return;
            }
            for b in 0..=blocks {
                key[i] = b;
                go(i + 1, blocks.max(b + 1), key, out);
            }
        }
        if n == 0 {
            return vec![vec![]];
        }
        go(0, 0, &mut key, &mut out);
        out
    }

    /// Brute-force compatibility: compare images of all pairs of related tuples.
    fn compatible_brute(alg: &FiniteAlgebra, c: &Congruence) -> bool {
        let n = alg.size();
        alg.operations().iter().all(|op| {
            let mut ok = true;
            for_each_tuple(n, op.arity(), |u| {
                for_each_tuple(n, op.arity(), |v| {
                    if ok && u.iter().zip(v).all(|(&a, &b)| c.related(a, b)) {
                        ok = c.related(op.apply(u), op.apply(v));
                    }
                });
            });
            ok
        })
    }

    fn brute_congruences(alg: &FiniteAlgebra) -> Vec<Congruence> {
        let mut v: Vec<Congruence> = all_partitions(alg.size())
            .iter()
            .map(|k| Congruence::from_key(k))
            .filter(|c| compatible_brute(alg, c))
            .collect();
        v.sort_by(|a, b| order_key(a).cmp(&order_key(b)));
        v
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn enumeration_matches_brute_force_on_fixtures() {
        for name in ["c8", "s3", "m5", "n5x", "lattice-e", "lattice-p", "lattice-d", "chain-4"] {
            let alg = fixtures::algebra(name).unwrap();
            let lat = enumerate_congruences(&alg);
            assert_eq!(lat.congruences(), brute_congruences(&alg).as_slice(), "{name}");
        }
    }

    #[test]
    fn fast_and_brute_compatibility_agree() {
        for name in ["m5", "n5x", "s3", "lattice-p"] {
            let alg = fixtures::algebra(name).unwrap();
            for k in all_partitions(alg.size()) {
                let c = Congruence::from_key(&k);
                assert_eq!(c.is_compatible(&alg), compatible_brute(&alg, &c), "{name} {c:?}");
            }
        }
    }

    #[test]
    fn principal_is_least_containing_pair() {
        for name in ["m5", "n5x", "s3", "lattice-e"] {
            let alg = fixtures::algebra(name).unwrap();
            let brute = brute_congruences(&alg);
            let n = alg.size();
            for a in 0..n {
                for b in 0..n {
                    let cg = cg_generate(&alg, &[(a, b)]);
                    let oracle = brute
                        .iter()
                        .filter(|c| c.related(a, b))
                        .fold(Congruence::total(n), |acc, c| acc.meet(c));
                    assert_eq!(cg, oracle, "{name} Cg({a},{b})");
                }
            }
        }
    }

    #[test]
    fn cg_examples() {
        let c8 = fixtures::algebra("c8").unwrap();
        assert!(cg_generate(&c8, &[(3, 3)]).is_diagonal());
        let minus = cg_generate(&c8, &[(0, 1)]);
        assert_eq!(minus, Congruence::from_key(&[0, 0, 1, 1, 2, 2, 3, 3]));
        let l4 = fixtures::algebra("chain-4").unwrap();
        let c = cg_generate(&l4, &[(1, 2)]);
        assert_eq!(c, Congruence::from_blocks(4, &[vec![0], vec![1, 2], vec![3]]).unwrap());
    }

    #[test]
    fn c8_lattice_shape() {
        let c8 = fixtures::algebra("c8").unwrap();
        let lat = enumerate_congruences(&c8);
        assert_eq!(lat.len(), 6);
        let t = lattice_tests(&lat);
        assert!(t.modular);
        assert!(!t.distributive);
        assert!(t.diamond.is_some());
        let max = maximal_congruences(&lat);
        assert_eq!(max.len(), 3);
        let minus = lat.index_of(&Congruence::from_key(&[0, 0, 1, 1, 2, 2, 3, 3])).unwrap();
        for &m in &max {
            assert_eq!(lat.lattice().lower_covers(m), vec![minus]);
        }
        // Delta < <-1> < three coatoms < nabla
        assert_eq!(lat.lattice().cover_pairs().len(), 7);
    }

    #[test]
    fn s3_has_three_congruences() {
        let s3 = fixtures::algebra("s3").unwrap();
        let lat = enumerate_congruences(&s3);
        assert_eq!(lat.len(), 3);
        assert!(lat.lattice().is_chain());
    }

    #[test]
    fn lattice_fixture_tests() {
        // Con(N) has 11 members; {abc}{x}{y} lies under {abcx}{y},
        // {abcy}{x} and {abc}{xy}, which pairwise join to nabla: a diamond.
        let n = fixtures::algebra("n5x").unwrap();
        let con = enumerate_congruences(&n);
        assert_eq!(con.len(), 11);
        let t = lattice_tests(&con);
        assert!(t.modular && !t.distributive);
        let w = t.diamond.unwrap();
        assert_eq!(con.get(w[0]).display_with(n.labels()), "{a,b,c}{x}{y}");
        let l4 = fixtures::algebra("chain-4").unwrap();
        let t = lattice_tests(&enumerate_congruences(&l4));
        assert!(t.modular && t.distributive);
        let p = fixtures::algebra("lattice-p").unwrap();
        let lat = enumerate_congruences(&p);
        let alpha = Congruence::from_blocks(5, &[vec![0, 2, 3], vec![1, 4]]).unwrap();
        let beta = Congruence::from_blocks(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        let mut max: Vec<Congruence> =
            maximal_congruences(&lat).iter().map(|&i| lat.get(i).clone()).collect();
        max.sort();
        let mut want = vec![alpha, beta];
        want.sort();
        assert_eq!(max, want);
    }

    #[test]
    fn trivial_algebra() {
        let c8 = fixtures::algebra("c8").unwrap();
        let one = FiniteAlgebra::trivial(&c8.signature());
        let lat = enumerate_congruences(&one);
        assert_eq!(lat.len(), 1);
        assert!(maximal_congruences(&lat).is_empty());
    }

    #[test]
    fn every_congruence_is_join_of_principals() {
        for name in ["c8", "n5x", "lattice-e", "m5"] {
            let alg = fixtures::algebra(name).unwrap();
            let lat = enumerate_congruences(&alg);
            let l = lat.lattice();
            for i in 0..lat.len() {
                let j = (0..lat.len())
                    .filter(|&p| lat.principal()[p] && l.leq(p, i))
                    .fold(l.bottom(), |acc, p| l.join(acc, p));
                assert_eq!(j, i, "{name}");
            }
        }
    }

    #[test]
    fn meet_is_blockwise_intersection() {
        for name in ["c8", "n5x", "m5", "lattice-p"] {
            let lat = enumerate_congruences(&fixtures::algebra(name).unwrap());
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let m = lat.lattice().meet(i, j);
                    assert_eq!(lat.get(m), &lat.get(i).meet(lat.get(j)));
                    let jn = lat.lattice().join(i, j);
                    assert_eq!(lat.get(jn), &lat.get(i).join(lat.get(j)));
                }
            }
        }
    }

    #[test]
    fn canonical_form_checks() {
        assert!(Congruence::from_rep(vec![0, 0, 2]).is_ok());
        assert!(Congruence::from_rep(vec![0, 2, 2]).is_err());
        assert!(Congruence::from_rep(vec![1, 1]).is_err());
        assert!(Congruence::from_blocks(3, &[vec![0], vec![0, 1, 2]]).is_err());
        assert!(Congruence::from_blocks(3, &[vec![0]]).is_err());
    }

    #[test]
    fn product_and_restrict() {
        let a = Congruence::from_key(&[0, 0, 1]);
        let b = Congruence::from_key(&[0, 1]);
        let p = a.product(&b);
        assert_eq!(p.size(), 6);
        assert!(p.related(0, 2));
        assert!(!p.related(0, 1));
        assert_eq!(p.restrict(&[0, 2, 4]), a);
    }

    fn arb_partition(n: usize) -> impl Strategy<Value = Congruence> {
        proptest::collection::vec(0..n, n).prop_map(|k| Congruence::from_key(&k))
    }

    proptest! {
        #[test]
        fn join_meet_are_bounds(a in arb_partition(7), b in arb_partition(7)) {
            let j = a.join(&b);
            let m = a.meet(&b);
            prop_assert!(a.leq(&j) && b.leq(&j));
            prop_assert!(m.leq(&a) && m.leq(&b));
            prop_assert_eq!(a.join(&m), a.clone());
            prop_assert_eq!(a.meet(&j), a.clone());
            prop_assert_eq!(j, b.join(&a));
        }

        #[test]
        fn canonical_reps(a in arb_partition(9)) {
            for x in 0..9 {
                prop_assert!(a.rep(x) <= x);
                prop_assert_eq!(a.rep(a.rep(x)), a.rep(x));
            }
            prop_assert_eq!(Congruence::from_rep(a.rep_vec()).unwrap(), a);
        }

        #[test]
        fn generated_congruence_is_closed(a in 0usize..5, b in 0usize..5, c in 0usize..5, d in 0usize..5) {
            for name in ["m5", "n5x", "lattice-p"] {
                let alg = fixtures::algebra(name).unwrap();
                let cg = cg_generate(&alg, &[(a, b), (c, d)]);
                prop_assert!(cg.related(a, b) && cg.related(c, d));
                prop_assert!(compatible_brute(&alg, &cg));
            }
        }
    }
}
