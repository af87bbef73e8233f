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

//! Finite algebras stored as flattened operation tables.
//!
//! Elements are `0..n`; labels only matter for input and output. An
//! operation of arity `k` is a table of `n^k` entries indexed row-major, so
//! `f(x_0, .., x_{k-1})` lives at `x_0 * n^(k-1) + .. + x_{k-1}`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};

/// Operation symbols with their arities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Signature {
    ops: Vec<(String, usize)>,
}

impl Signature {
    pub fn new(ops: Vec<(String, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (name, _) in &ops {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlgebra(format!(
                    "operation symbol `{name}` declared twice"
                )));
            }
        }
        Ok(Signature { ops })
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.ops.iter().map(|(s, k)| (s.as_str(), *k))
    }

    pub fn arity(&self, symbol: &str) -> Option<usize> {
        self.ops.iter().find(|(s, _)| s == symbol).map(|(_, k)| *k)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ops.iter().map(|(s, k)| format!("{s}/{k}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    name: String,
    arity: usize,
    n: usize,
    table: Vec<u32>,
}

impl Operation {
    pub fn new(name: impl Into<String>, arity: usize, n: usize, table: Vec<usize>) -> Result<Self> {
        let name = name.into();
        let expected = checked_pow(n, arity).ok_or_else(|| {
            Error::InvalidAlgebra(format!("table of `{name}` is too large"))
        })?;
        if table.len() != expected {
            return Err(Error::InvalidAlgebra(format!(
                "table of `{name}` has {} entries, expected {expected}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidAlgebra(format!(
                "table of `{name}` refers to element {bad} outside the carrier"
            )));
        }
        Ok(Operation {
            name,
            arity,
            n,
            table: table.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Table lookup; `args` must hold `arity` valid indices.
    #[inline]
    pub fn apply(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0usize;
        for &a in args {
            idx = idx * self.n + a;
        }
        self.table[idx] as usize
    }
}

fn checked_pow(n: usize, k: usize) -> Option<usize> {
    let mut acc = 1usize;
    for _ in 0..k {
        acc = acc.checked_mul(n)?;
    }
    Some(acc)
}

/// Calls `f` on every tuple of `0..n` of length `k`, in row-major order.
pub(crate) fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 && k > 0 {
        return;
    }
    let mut t = vec![0usize; k];
    loop {
        f(&t);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

pub struct FiniteAlgebra {
    name: String,
    labels: Vec<String>,
    ops: Vec<Operation>,
    translations: OnceLock<Vec<Vec<u32>>>,
}

impl Clone for FiniteAlgebra {
    fn clone(&self) -> Self {
        FiniteAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            ops: self.ops.clone(),
            translations: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.ops == other.ops
    }
}

impl Eq for FiniteAlgebra {}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAlgebra")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("signature", &self.signature())
            .finish()
    }
}

impl FiniteAlgebra {
    /// Builds an algebra from `(symbol, arity, row-major table)` triples.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        ops: Vec<(String, usize, Vec<usize>)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("carrier must be nonempty".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidAlgebra(format!("label `{l}` repeated")));
            }
        }
        Signature::new(ops.iter().map(|(s, k, _)| (s.clone(), *k)).collect())?;
        let ops = ops
            .into_iter()
            .map(|(s, k, t)| Operation::new(s, k, n, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteAlgebra {
            name: name.into(),
            labels,
            ops,
            translations: OnceLock::new(),
        })
    }

    /// Builds an algebra by evaluating `f(op_index, args)` on every tuple.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        signature: &Signature,
        mut f: impl FnMut(usize, &[usize]) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let mut ops = Vec::with_capacity(signature.len());
        for (i, (sym, k)) in signature.iter().enumerate() {
            let mut table = Vec::new();
            for_each_tuple(n, k, |t| table.push(f(i, t)));
            ops.push((sym.to_string(), k, table));
        }
        Self::new(name, labels, ops)
    }

    /// The one-element algebra of the given signature.
    pub fn trivial(signature: &Signature) -> Self {
        Self::from_fn("1", vec!["*".to_string()], signature, |_, _| 0)
            .expect("one-element algebra is always valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn signature(&self) -> Signature {
        Signature {
            ops: self.ops.iter().map(|o| (o.name.clone(), o.arity)).collect(),
        }
    }

    pub fn operations(&self) -> &[Operation] {
        &self.ops
    }

    pub fn operation(&self, symbol: &str) -> Result<&Operation> {
        self.ops
            .iter()
            .find(|o| o.name == symbol)
            .ok_or_else(|| Error::UnknownOperation(symbol.to_string()))
    }

    pub fn evaluate(&self, symbol: &str, args: &[usize]) -> Result<usize> {
        let op = self.operation(symbol)?;
        if args.len() != op.arity {
            return Err(Error::ArityMismatch {
                op: symbol.to_string(),
                expected: op.arity,
                got: args.len(),
            });
        }
        if let Some(&bad) = args.iter().find(|&&a| a >= self.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: self.size(),
            });
        }
        Ok(op.apply(args))
    }

    /// Label-level evaluation, e.g. `evaluate_labels("*", &["i", "j"])`.
    pub fn evaluate_labels(&self, symbol: &str, args: &[&str]) -> Result<&str> {
        let idx = args
            .iter()
            .map(|a| self.index_of(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.label(self.evaluate(symbol, &idx)?))
    }

    /// Non-constant, non-identity unary polynomials obtained from one
    /// operation by fixing all arguments but one. A partition is a congruence
    /// exactly when every one of these maps preserves it.
    pub fn basic_translations(&self) -> &[Vec<u32>] {
        self.translations.get_or_init(|| {
            let n = self.size();
            let mut seen: HashSet<Vec<u32>> = HashSet::new();
            let mut out = Vec::new();
            for op in &self.ops {
                let k = op.arity;
                if k == 0 {
                    continue;
                }
                for pos in 0..k {
                    for_each_tuple(n, k - 1, |rest| {
                        let mut args = Vec::with_capacity(k);
                        args.extend_from_slice(&rest[..pos]);
                        args.push(0);
                        args.extend_from_slice(&rest[pos..]);
                        let map: Vec<u32> = (0..n)
                            .map(|x| {
                                args[pos] = x;
                                op.apply(&args) as u32
                            })
                            .collect();
                        let identity = map.iter().enumerate().all(|(i, &v)| i as u32 == v);
                        let constant = map.iter().all(|&v| v == map[0]);
                        if !identity && !constant && seen.insert(map.clone()) {
                            out.push(map);
                        }
                    });
                }
            }
            out.sort();
            out
        })
    }

    /// True when `subset` is closed under every operation (the empty set
    /// counts only when there are no constants).
    pub fn is_subuniverse(&self, subset: &[usize]) -> bool {
        let inside: HashSet<usize> = subset.iter().copied().collect();
        let elems: Vec<usize> = {
            let mut v: Vec<usize> = inside.iter().copied().collect();
            v.sort_unstable();
            v
        };
        for op in &self.ops {
            let mut ok = true;
            for_each_tuple(elems.len(), op.arity, |t| {
                if ok {
                    let args: Vec<usize> = t.iter().map(|&i| elems[i]).collect();
                    ok = inside.contains(&op.apply(&args));
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }

    /// Elements `x` with `f(x, .., x) = x` for every operation, i.e. the
    /// one-element subuniverses.
    pub fn singleton_subuniverses(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| {
                self.ops.iter().all(|op| {
                    let args = vec![x; op.arity];
                    op.apply(&args) == x
                })
            })
            .collect()
    }
}

/// Coordinatewise product; element `(i, j)` has index `i * |b| + j`.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let sig = a.signature();
    if sig != b.signature() {
        return Err(Error::SignatureMismatch(format!(
            "{} vs {}",
            sig,
            b.signature()
        )));
    }
    let nb = b.size();
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("({x},{y})")))
        .collect();
    let name = format!("{}x{}", a.name, b.name);
    FiniteAlgebra::from_fn(name, labels, &sig, |i, args| {
        let left: Vec<usize> = args.iter().map(|&p| p / nb).collect();
        let right: Vec<usize> = args.iter().map(|&p| p % nb).collect();
        a.ops[i].apply(&left) * nb + b.ops[i].apply(&right)
    })
}

/// The two projections out of `product = direct_product(a, b)`.
pub fn projections(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    product: &FiniteAlgebra,
) -> Result<(SurjectiveMorphism, SurjectiveMorphism)> {
    let nb = b.size();
    let n = product.size();
    let p1 = SurjectiveMorphism::new(product.clone(), a.clone(), (0..n).map(|p| p / nb).collect())?;
    let p2 = SurjectiveMorphism::new(product.clone(), b.clone(), (0..n).map(|p| p % nb).collect())?;
    Ok((p1, p2))
}

/// `A/theta` with its canonical projection. Blocks are ordered by their
/// least element and carry that element's label.
pub fn quotient_algebra(
    a: &FiniteAlgebra,
    theta: &Congruence,
) -> Result<(FiniteAlgebra, SurjectiveMorphism)> {
    if theta.size() != a.size() {
        return Err(Error::CarrierMismatch {
            expected: a.size(),
            got: theta.size(),
        });
    }
    theta.check_compatible(a)?;
    let reps = theta.representatives();
    let block_of: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let map: Vec<usize> = (0..a.size()).map(|x| block_of[&theta.rep(x)]).collect();
    let labels = reps.iter().map(|&r| a.label(r).to_string()).collect();
    let name = format!("{}/~", a.name);
    let q = FiniteAlgebra::from_fn(name, labels, &a.signature(), |i, args| {
        let lifted: Vec<usize> = args.iter().map(|&b| reps[b]).collect();
        map[a.ops[i].apply(&lifted)]
    })?;
    let p = SurjectiveMorphism::new(a.clone(), q.clone(), map)?;
    Ok((q, p))
}

/// The subalgebra on a closed subset, with its embedding into `a`.
pub fn subalgebra(a: &FiniteAlgebra, subset: &[usize]) -> Result<(FiniteAlgebra, Vec<usize>)> {
    let mut elems: Vec<usize> = subset.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if let Some(&bad) = elems.iter().find(|&&x| x >= a.size()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            size: a.size(),
        });
    }
    if elems.is_empty() || !a.is_subuniverse(&elems) {
        return Err(Error::InvalidArgument(
            "subset is not a nonempty subuniverse".into(),
        ));
    }
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let labels = elems.iter().map(|&x| a.label(x).to_string()).collect();
    let sub = FiniteAlgebra::from_fn(format!("sub({})", a.name), labels, &a.signature(), |i, args| {
        let lifted: Vec<usize> = args.iter().map(|&s| elems[s]).collect();
        pos[&a.ops[i].apply(&lifted)]
    })?;
    Ok((sub, elems))
}

/// A verified onto homomorphism between algebras of the same signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectiveMorphism {
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    map: Vec<usize>,
}

impl SurjectiveMorphism {
    pub fn new(source: FiniteAlgebra, target: FiniteAlgebra, map: Vec<usize>) -> Result<Self> {
        if source.signature() != target.signature() {
            return Err(Error::SignatureMismatch(format!(
                "{} vs {}",
                source.signature(),
                target.signature()
            )));
        }
        if map.len() != source.size() {
            return Err(Error::CarrierMismatch {
                expected: source.size(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        for (sop, top) in source.ops.iter().zip(&target.ops) {
            let mut witness = None;
            for_each_tuple(source.size(), sop.arity, |t| {
                if witness.is_some() {
                    return;
                }
                let image: Vec<usize> = t.iter().map(|&x| map[x]).collect();
                if map[sop.apply(t)] != top.apply(&image) {
                    witness = Some(t.to_vec());
                }
            });
            if let Some(t) = witness {
                let args: Vec<&str> = t.iter().map(|&x| source.label(x)).collect();
                return Err(Error::NotHomomorphism(format!(
                    "`{}` at ({})",
                    sop.name,
                    args.join(", ")
                )));
            }
        }
        let mut hit = vec![false; target.size()];
        for &y in &map {
            hit[y] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::NotSurjective);
        }
        Ok(SurjectiveMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(a: &FiniteAlgebra) -> Self {
        SurjectiveMorphism {
            source: a.clone(),
            target: a.clone(),
            map: (0..a.size()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FiniteAlgebra {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SurjectiveMorphism) -> Result<SurjectiveMorphism> {
        if self.target != g.source {
            return Err(Error::InvalidArgument(
                "morphisms are not composable".into(),
            ));
        }
        Ok(SurjectiveMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.iter().map(|&x| g.map[x]).collect(),
        })
    }

    pub fn kernel(&self) -> Congruence {
        Congruence::from_key(&self.map)
    }

    /// `f(alpha ∨ Ker f)` as a congruence of the target.
    pub fn transport(&self, alpha: &Congruence) -> Result<Congruence> {
        if alpha.size() != self.source.size() {
            return Err(Error::CarrierMismatch {
                expected: self.source.size(),
                got: alpha.size(),
            });
        }
        let joined = alpha.join(&self.kernel());
        let mut uf = UnionFind::new(self.target.size());
        for x in 0..self.source.size() {
            uf.union(self.map[x], self.map[joined.rep(x)]);
        }
        Ok(uf.into_congruence())
    }

    /// `f*(beta)`: the pairs whose images are `beta`-related.
    pub fn pull_back(&self, beta: &Congruence) -> Result<Congruence> {
        if beta.size() != self.target.size() {
            return Err(Error::CarrierMismatch {
                expected: self.target.size(),
                got: beta.size(),
            });
        }
        let key: Vec<usize> = self.map.iter().map(|&y| beta.rep(y)).collect();
        Ok(Congruence::from_key(&key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain(n: usize) -> FiniteAlgebra {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let sig = Signature::new(vec![("join".into(), 2), ("meet".into(), 2)]).unwrap();
        FiniteAlgebra::from_fn("chain", labels, &sig, |i, a| {
            if i == 0 {
                a[0].max(a[1])
            } else {
                a[0].min(a[1])
            }
        })
        .unwrap()
    }

    #[test]
    fn quaternion_products() {
        let c8 = fixtures::algebra("c8").unwrap();
        assert_eq!(c8.evaluate_labels("*", &["i", "j"]).unwrap(), "k");
        assert_eq!(c8.evaluate_labels("*", &["j", "i"]).unwrap(), "-k");
        assert_eq!(c8.evaluate_labels("*", &["i", "i"]).unwrap(), "-1");
        assert_eq!(c8.evaluate_labels("e", &[]).unwrap(), "1");
    }

    #[test]
    fn evaluate_errors() {
        let c8 = fixtures::algebra("c8").unwrap();
        assert!(matches!(c8.evaluate("?", &[]), Err(Error::UnknownOperation(_))));
        assert!(matches!(c8.evaluate("*", &[1]), Err(Error::ArityMismatch { .. })));
        assert!(matches!(c8.evaluate("*", &[1, 9]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(c8.evaluate_labels("inv", &["q"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn chain_join_is_max() {
        let l4 = chain(4);
        assert_eq!(l4.evaluate("join", &[1, 2]).unwrap(), 2);
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteAlgebra::new("x", labels.clone(), vec![("f".into(), 1, vec![0])]).is_err());
        assert!(FiniteAlgebra::new("x", labels.clone(), vec![("f".into(), 1, vec![0, 2])]).is_err());
        assert!(FiniteAlgebra::new(
            "x",
            labels,
            vec![("f".into(), 0, vec![0]), ("f".into(), 0, vec![1])]
        )
        .is_err());
    }

    #[test]
    fn product_sizes_and_projections() {
        let e = fixtures::algebra("lattice-e").unwrap();
        let p = fixtures::algebra("lattice-p").unwrap();
        let ep = direct_product(&e, &p).unwrap();
        assert_eq!(ep.size(), 30);
        let (p1, p2) = projections(&e, &p, &ep).unwrap();
        assert_eq!(p1.target().size(), 6);
        assert_eq!(p2.target().size(), 5);
        let c8 = fixtures::algebra("c8").unwrap();
        assert!(direct_product(&e, &c8).is_err());
    }

    #[test]
    fn unit_factor() {
        let p = fixtures::algebra("lattice-p").unwrap();
        let one = FiniteAlgebra::trivial(&p.signature());
        let p1 = direct_product(&p, &one).unwrap();
        let (proj, _) = projections(&p, &one, &p1).unwrap();
        assert!(proj.kernel().is_diagonal());
    }

    #[test]
    fn quotient_by_minus_one_is_klein() {
        let c8 = fixtures::algebra("c8").unwrap();
        let minus = Congruence::from_key(&[0, 0, 1, 1, 2, 2, 3, 3]);
        let (q, p) = quotient_algebra(&c8, &minus).unwrap();
        assert_eq!(q.size(), 4);
        // every element squares to the identity and the group is abelian
        let mul = q.operation("*").unwrap();
        for x in 0..4 {
            assert_eq!(mul.apply(&[x, x]), 0);
            for y in 0..4 {
                assert_eq!(mul.apply(&[x, y]), mul.apply(&[y, x]));
            }
        }
        assert_eq!(p.kernel(), minus);
    }

    #[test]
    fn quotient_by_diagonal_and_incompatible() {
        let c8 = fixtures::algebra("c8").unwrap();
        let (q, p) = quotient_algebra(&c8, &Congruence::diagonal(8)).unwrap();
        assert_eq!(q.size(), 8);
        assert!(p.kernel().is_diagonal());
        // {1, i} alone is not a normal-subgroup partition
        let bad = Congruence::from_key(&[0, 1, 0, 3, 4, 5, 6, 7]);
        assert!(matches!(quotient_algebra(&c8, &bad), Err(Error::NotCompatible { .. })));
    }

    #[test]
    fn transport_and_pull_back() {
        let c8 = fixtures::algebra("c8").unwrap();
        let minus = Congruence::from_key(&[0, 0, 1, 1, 2, 2, 3, 3]);
        let (q, p) = quotient_algebra(&c8, &minus).unwrap();
        assert_eq!(p.pull_back(&Congruence::diagonal(q.size())).unwrap(), minus);
        assert!(p.transport(&minus).unwrap().is_diagonal());
        // <i> collapses {1,-1,i,-i} and {j,-j,k,-k}
        let mod_i = Congruence::from_key(&[0, 0, 0, 0, 1, 1, 1, 1]);
        let image = p.transport(&mod_i).unwrap();
        assert_eq!(image.block_count(), 2);
        assert_eq!(p.pull_back(&image).unwrap(), mod_i);
    }

    #[test]
    fn composition_and_identity() {
        let c8 = fixtures::algebra("c8").unwrap();
        let minus = Congruence::from_key(&[0, 0, 1, 1, 2, 2, 3, 3]);
        let (q, p) = quotient_algebra(&c8, &minus).unwrap();
        let (_, p2) = quotient_algebra(&q, &Congruence::total(q.size())).unwrap();
        let both = p.then(&p2).unwrap();
        assert_eq!(both.target().size(), 1);
        assert!(both.kernel().is_total());
        let id = SurjectiveMorphism::identity(&c8);
        assert_eq!(id.then(&p).unwrap(), p);
        assert!(p2.then(&p).is_err());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let c8 = fixtures::algebra("c8").unwrap();
        let map = vec![0, 1, 0, 0, 0, 0, 0, 0];
        assert!(matches!(
            SurjectiveMorphism::new(c8.clone(), c8.clone(), map),
            Err(Error::NotHomomorphism(_))
        ));
        let (q, _) = quotient_algebra(&c8, &Congruence::total(8)).unwrap();
        let two = direct_product(&q, &q).unwrap();
        assert_eq!(two.size(), 1);
    }

    #[test]
    fn subalgebra_generated_by_i() {
        let c8 = fixtures::algebra("c8").unwrap();
        let (sub, emb) = subalgebra(&c8, &[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.size(), 4);
        assert_eq!(emb, vec![0, 1, 2, 3]);
        assert!(subalgebra(&c8, &[0, 2]).is_err());
    }

    #[test]
    fn singletons() {
        let c8 = fixtures::algebra("c8").unwrap();
        assert_eq!(c8.singleton_subuniverses(), vec![0]);
        let m = fixtures::algebra("m5").unwrap();
        assert_eq!(m.singleton_subuniverses(), vec![0, 1, 2, 3, 4]);
        let p = fixtures::algebra("lattice-p").unwrap();
        assert!(p.singleton_subuniverses().is_empty());
    }

    #[test]
    fn translations_skip_trivial_maps() {
        let m = fixtures::algebra("m5").unwrap();
        for t in m.basic_translations() {
            assert!(t.iter().any(|&v| v != t[0]));
            assert!(t.iter().enumerate().any(|(i, &v)| i as u32 != v));
        }
    }
}
