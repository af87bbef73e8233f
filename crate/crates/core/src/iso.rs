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

//! Lattice isomorphism by invariant-pruned backtracking, and a catalog of
//! small named lattices.

use crate::lattice::FiniteLattice;

/// Height, lower-cover count, upper-cover count, down-set and up-set size.
fn invariants(l: &FiniteLattice) -> Vec<[usize; 5]> {
    let h = l.heights();
    let n = l.size();
    (0..n)
        .map(|a| {
            [
                h[a],
                l.lower_covers(a).len(),
                l.upper_covers(a).len(),
                (0..n).filter(|&b| l.leq(b, a)).count(),
                (0..n).filter(|&b| l.leq(a, b)).count(),
            ]
        })
        .collect()
}

/// An order isomorphism `a -> b`, if one exists.
pub fn lattice_iso(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let (ia, ib) = (invariants(a), invariants(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (ia[x][0], x));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        order: &[usize],
        a: &FiniteLattice,
        b: &FiniteLattice,
        ia: &[[usize; 5]],
        ib: &[[usize; 5]],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..b.size() {
            if used[y] || ia[x] != ib[y] {
                continue;
            }
            let ok = order[..depth].iter().all(|&z| {
                a.leq(z, x) == b.leq(map[z], y) && a.leq(x, z) == b.leq(y, map[z])
            });
            if !ok {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(depth + 1, order, a, b, ia, ib, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
    go(0, &order, a, b, &ia, &ib, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    lattice_iso(a, b).is_some()
}

/// `L1..L5`, `L2^2`, `L2^3`, `L2+L2^2` and `L2+L2+L2`, where `+` is the
/// glued ordinal sum, so `L2+L2+L2` is another name for `L4`.
pub fn catalog() -> Vec<(&'static str, FiniteLattice)> {
    let l2 = FiniteLattice::chain(2);
    let sq = FiniteLattice::boolean(2);
    vec![
        ("L1", FiniteLattice::chain(1)),
        ("L2", FiniteLattice::chain(2)),
        ("L3", FiniteLattice::chain(3)),
        ("L4", FiniteLattice::chain(4)),
        ("L5", FiniteLattice::chain(5)),
        ("L2^2", sq.clone()),
        ("L2^3", FiniteLattice::boolean(3)),
        ("L2+L2^2", l2.ordinal_sum(&sq)),
        ("L2+L2+L2", l2.ordinal_sum(&l2).ordinal_sum(&l2)),
    ]
}

/// Every catalog name of `l`, in catalog order.
pub fn identify(l: &FiniteLattice) -> Vec<&'static str> {
    catalog()
        .into_iter()
        .filter(|(_, c)| is_isomorphic(l, c))
        .map(|(name, _)| name)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn diamond_relabelled() {
        let d = FiniteLattice::from_relation(
            ["0", "a", "b", "1"].map(String::from).to_vec(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(is_isomorphic(&FiniteLattice::boolean(2), &d));
        assert_eq!(identify(&d), vec!["L2^2"]);
    }

    #[test]
    fn chain_vs_square() {
        assert!(lattice_iso(&FiniteLattice::chain(3), &FiniteLattice::boolean(2)).is_none());
        assert!(lattice_iso(&FiniteLattice::chain(4), &FiniteLattice::boolean(2)).is_none());
    }

    #[test]
    fn ordinal_sum_of_chains_is_chain() {
        let l2 = FiniteLattice::chain(2);
        assert_eq!(identify(&l2.ordinal_sum(&l2).ordinal_sum(&l2)), vec!["L4", "L2+L2+L2"]);
    }

    #[test]
    fn catalog_is_distinct_up_to_the_l4_alias() {
        let c = catalog();
        let alias = |a: &str, b: &str| matches!((a, b), ("L4", "L2+L2+L2") | ("L2+L2+L2", "L4"));
        for i in 0..c.len() {
            for j in 0..c.len() {
                let want = i == j || alias(c[i].0, c[j].0);
                assert_eq!(is_isomorphic(&c[i].1, &c[j].1), want, "{} {}", c[i].0, c[j].0);
            }
        }
    }

    fn shuffled() -> impl Strategy<Value = (usize, Vec<usize>)> {
        (0usize..4).prop_flat_map(|k| {
            let n = (1 << k) + 1;
            (Just(k), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn permuted_copies_are_isomorphic((k, perm) in shuffled()) {
            let l = FiniteLattice::boolean(k).ordinal_sum(&FiniteLattice::chain(2));
            let n = l.size();
            let mut inv = vec![0; n];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            let labels = (0..n).map(|i| i.to_string()).collect();
            let m = FiniteLattice::from_fn(labels, |a, b| l.leq(inv[a], inv[b])).unwrap();
            let f = lattice_iso(&l, &m).unwrap();
            for a in 0..n {
                for b in 0..n {
                    prop_assert_eq!(l.leq(a, b), m.leq(f[a], f[b]));
                }
            }
        }
    }
}
