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

//! Subuniverse generation in finite powers `A^k`.
//!
//! Tuples are kept in insertion order in one flat buffer. When the scan
//! reaches position `p`, it applies each operation to the argument lists
//! drawn from positions `0..=p` whose largest position is exactly `p`, so
//! every argument list is evaluated once overall.

use std::collections::HashSet;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// Dense bitsets are used up to this many possible tuples.
const BITSET_LIMIT: u64 = 1 << 26;

enum Seen {
    Bits(Vec<u64>),
    Codes(HashSet<u64>),
    Tuples(HashSet<Vec<u32>>),
}

struct Membership {
    n: u64,
    seen: Seen,
}

impl Membership {
    fn new(n: usize, k: usize) -> Self {
        let total = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(n as u64));
        let seen = match total {
            Some(t) if t <= BITSET_LIMIT => Seen::Bits(vec![0; (t as usize).div_ceil(64)]),
            Some(_) => Seen::Codes(HashSet::new()),
            None => Seen::Tuples(HashSet::new()),
        };
        Membership { n: n as u64, seen }
    }

    fn code(&self, t: &[u32]) -> u64 {
        t.iter().fold(0u64, |acc, &x| acc * self.n + x as u64)
    }

    /// Records `t`; returns whether it was new.
    fn insert(&mut self, t: &[u32]) -> bool {
        let code = match self.seen {
            Seen::Tuples(_) => 0,
            _ => self.code(t),
        };
        match &mut self.seen {
            Seen::Bits(bits) => {
                let (w, b) = ((code / 64) as usize, code % 64);
                let fresh = bits[w] & (1 << b) == 0;
                bits[w] |= 1 << b;
                fresh
            }
            Seen::Codes(set) => set.insert(code),
            Seen::Tuples(set) => set.insert(t.to_vec()),
        }
    }
}

/// Closure of a flat generator buffer (`k` entries per tuple).
///
/// With `stop_at = Some(m)` the scan returns as soon as `m` tuples are
/// known; callers use this when an upper bound of size `m` is already known
/// to contain the closure, so reaching it means the closure equals it.
pub(crate) fn close_flat(
    alg: &FiniteAlgebra,
    k: usize,
    generators: &[u32],
    stop_at: Option<usize>,
) -> Vec<u32> {
    let n = alg.size();
    let mut seen = Membership::new(n, k);
    let mut data: Vec<u32> = Vec::with_capacity(generators.len());
    let full = |data: &Vec<u32>| stop_at.is_some_and(|m| data.len() / k.max(1) >= m);

    if k == 0 {
        // A^0 has exactly one tuple; it is in the closure whenever anything is.
        return Vec::new();
    }
    for t in generators.chunks(k) {
        if seen.insert(t) {
            data.extend_from_slice(t);
        }
    }
    for op in alg.operations().iter().filter(|o| o.arity() == 0) {
        let t = vec![op.table()[0]; k];
        if seen.insert(&t) {
            data.extend_from_slice(&t);
        }
    }
    if full(&data) {
        return data;
    }

    let ops: Vec<_> = alg.operations().iter().filter(|o| o.arity() > 0).collect();
    let mut out = vec![0u32; k];
    let mut p = 0usize;
    while p * k < data.len() {
        for op in &ops {
            let r = op.arity();
            let table = op.table();
            let strides: Vec<usize> = (0..r).map(|i| n.pow((r - 1 - i) as u32)).collect();
            let mut args = vec![0usize; r];
            for j in 0..r {
                if j > 0 && p == 0 {
                    continue;
                }
                // positions before j stay below p, position j is p, later ones go up to p
                let limit = |i: usize| if i < j { p } else { p + 1 };
                for (i, a) in args.iter_mut().enumerate() {
                    *a = if i == j { p } else { 0 };
                }
                loop {
                    for (c, slot) in out.iter_mut().enumerate() {
                        let mut idx = 0usize;
                        for i in 0..r {
                            idx += data[args[i] * k + c] as usize * strides[i];
                        }
                        *slot = table[idx];
                    }
                    if seen.insert(&out) {
                        data.extend_from_slice(&out);
                        if full(&data) {
                            return data;
                        }
                    }
                    // advance the odometer over every slot except j
                    let mut i = r;
                    let mut done = true;
                    while i > 0 {
                        i -= 1;
                        if i == j {
                            continue;
                        }
                        args[i] += 1;
                        if args[i] < limit(i) {
                            done = false;
                            break;
                        }
                        args[i] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
        }
        p += 1;
    }
    data
}

/// The least subset of `A^k` containing `generators` and closed under every
/// operation applied coordinatewise, sorted lexicographically.
pub fn generate_subuniverse(
    alg: &FiniteAlgebra,
    k: usize,
    generators: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    let mut flat = Vec::with_capacity(generators.len() * k);
    for g in generators {
        if g.len() != k {
            return Err(Error::InvalidArgument(format!(
                "generator of length {} in power {k}",
                g.len()
            )));
        }
        if let Some(&bad) = g.iter().find(|&&x| x >= alg.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: alg.size(),
            });
        }
        flat.extend(g.iter().map(|&x| x as u32));
    }
    let data = close_flat(alg, k, &flat, None);
    let mut out: Vec<Vec<usize>> = data
        .chunks(k)
        .map(|t| t.iter().map(|&x| x as usize).collect())
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    /// Naive fixed point: apply every operation to every argument list
    /// until nothing new appears.
    fn naive_closure(alg: &FiniteAlgebra, k: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut set: std::collections::BTreeSet<Vec<usize>> = gens.iter().cloned().collect();
        loop {
            let cur: Vec<Vec<usize>> = set.iter().cloned().collect();
            let mut grew = false;
            for op in alg.operations() {
                let r = op.arity();
                crate::algebra::for_each_tuple(cur.len(), r, |choice| {
                    let t: Vec<usize> = (0..k)
                        .map(|c| {
                            let args: Vec<usize> = choice.iter().map(|&i| cur[i][c]).collect();
                            op.apply(&args)
                        })
                        .collect();
                    grew |= set.insert(t);
                });
            }
            if !grew {
                return set.into_iter().collect();
            }
        }
    }

    #[test]
    fn identity_subgroup() {
        let c8 = fixtures::algebra("c8").unwrap();
        assert_eq!(generate_subuniverse(&c8, 1, &[vec![0]]).unwrap(), vec![vec![0]]);
        // <i> = {1, -1, i, -i}
        let sub = generate_subuniverse(&c8, 1, &[vec![2]]).unwrap();
        assert_eq!(sub, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn constants_alone_generate() {
        let p = fixtures::algebra("lattice-p").unwrap();
        let sub = generate_subuniverse(&p, 2, &[]).unwrap();
        assert_eq!(sub, vec![vec![0, 0], vec![4, 4]]);
        let m = fixtures::algebra("m5").unwrap();
        assert!(generate_subuniverse(&m, 2, &[]).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_generators() {
        let m = fixtures::algebra("m5").unwrap();
        assert!(generate_subuniverse(&m, 2, &[vec![0]]).is_err());
        assert!(generate_subuniverse(&m, 1, &[vec![7]]).is_err());
        assert!(generate_subuniverse(&m, 0, &[]).is_err());
    }

    #[test]
    fn diagonal_of_square() {
        let s3 = fixtures::algebra("s3").unwrap();
        let gens: Vec<Vec<usize>> = vec![vec![1, 1], vec![4, 4]];
        let sub = generate_subuniverse(&s3, 2, &gens).unwrap();
        assert_eq!(sub.len(), 6);
        assert!(sub.iter().all(|t| t[0] == t[1]));
    }

    #[test]
    fn early_stop_returns_prefix() {
        let c8 = fixtures::algebra("c8").unwrap();
        let all = close_flat(&c8, 1, &[2, 4], None);
        assert_eq!(all.len(), 8);
        let part = close_flat(&c8, 1, &[2, 4], Some(5));
        assert_eq!(part.len(), 5);
        assert_eq!(&all[..5], &part[..]);
    }

    #[test]
    fn large_power_uses_hashing() {
        // 8^8 exceeds the bitset limit
        let c8 = fixtures::algebra("c8").unwrap();
        let g = vec![vec![2, 0, 0, 0, 0, 0, 0, 4]];
        let sub = generate_subuniverse(&c8, 8, &g).unwrap();
        assert_eq!(sub, naive_closure(&c8, 8, &g));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn matches_naive_and_is_idempotent(
            gens in proptest::collection::vec(proptest::collection::vec(0usize..5, 3), 0..4),
            which in 0usize..4,
        ) {
            let name = ["m5", "n5x", "lattice-p", "lattice-d"][which];
            let alg = fixtures::algebra(name).unwrap();
            let fast = generate_subuniverse(&alg, 3, &gens).unwrap();
            let mut slow = naive_closure(&alg, 3, &gens);
            for op in alg.operations().iter().filter(|o| o.arity() == 0) {
                let c = op.table()[0] as usize;
                if !slow.contains(&vec![c; 3]) {
                    slow = naive_closure(&alg, 3, &[slow.clone(), vec![vec![c; 3]]].concat());
                }
            }
            prop_assert_eq!(&fast, &slow);
            prop_assert_eq!(generate_subuniverse(&alg, 3, &fast).unwrap(), fast);
        }
    }
}
