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

//! Library results against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use retic_core::ideals::{ideals, prime_ideals};
use retic_core::reticulation::build_reticulation;
use retic_core::spectrum::{boolean_center, radical, spectrum, RadicalMethod};
use retic_core::{cg_generate, enumerate_congruences, fixtures, CommutatorStructure};

const ALGEBRAS: [&str; 10] = [
    "c8", "s3", "m5", "n5x", "lattice-e", "lattice-p", "lattice-d", "chain-2", "chain-3", "chain-4",
];

fn sorted_keys(cs: impl IntoIterator<Item = retic_core::Congruence>) -> BTreeSet<Vec<usize>> {
    cs.into_iter().map(|c| c.rep_vec()).collect()
}

#[test]
fn congruences_match_the_partition_oracle() {
    for name in ALGEBRAS {
        let alg = fixtures::algebra(name).unwrap();
        let lib = enumerate_congruences(&alg);
        let oracle = common::congruences(&alg);
        assert_eq!(
            sorted_keys(lib.congruences().iter().cloned()),
            sorted_keys(oracle),
            "{name}"
        );
    }
}

#[test]
fn group_commutators_match_commutator_subgroups() {
    for name in ["c8", "s3"] {
        let alg = fixtures::algebra(name).unwrap();
        let g = common::Group::new(&alg, "*");
        let cs = CommutatorStructure::from_algebra(&alg);
        let con = cs.congruences().unwrap();
        let normal = g.normal_subgroups();
        assert_eq!(normal.len(), cs.size(), "{name}");
        for h in &normal {
            for k in &normal {
                let a = con.index_of(&g.congruence(h)).unwrap();
                let b = con.index_of(&g.congruence(k)).unwrap();
                let want = con.index_of(&g.congruence(&g.commutator(h, k))).unwrap();
                assert_eq!(cs.comm(a, b), want, "{name}: [{h:?}, {k:?}]");
            }
        }
    }
}

#[test]
fn primes_radicals_and_centers_match_definitions() {
    for name in fixtures::names() {
        let cs = fixtures::structure(name).unwrap();
        let l = cs.lattice();
        let primes = common::primes(l, |a, b| cs.comm(a, b));
        assert_eq!(spectrum(&cs).unwrap(), primes, "{name}");
        for t in 0..cs.size() {
            let want = common::radical(l, &primes, t);
            assert_eq!(radical(&cs, t, RadicalMethod::ViaSpec).unwrap(), want, "{name}");
        }
        assert_eq!(boolean_center(&cs), common::complemented(l), "{name}");
    }
}

#[test]
fn ideals_of_reticulations_match_subset_search() {
    for name in fixtures::names() {
        let cs = fixtures::structure(name).unwrap();
        let r = build_reticulation(&cs).unwrap();
        let l = r.lattice();
        let as_sets = |v: Vec<retic_core::ideals::LatticeIdeal>| -> BTreeSet<BTreeSet<usize>> {
            v.iter().map(|i| i.members().iter().copied().collect()).collect()
        };
        let want: BTreeSet<_> = common::ideals(l).into_iter().collect();
        assert_eq!(as_sets(ideals(l).unwrap()), want, "{name}");
        let want: BTreeSet<_> = common::prime_ideals(l).into_iter().collect();
        assert_eq!(as_sets(prime_ideals(l).unwrap()), want, "{name}");
    }
}

#[test]
fn partition_count_is_bell() {
    let bell = [1, 1, 2, 5, 15, 52, 203, 877];
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(common::partitions(n).len(), b);
    }
}

fn fixture_and_pair() -> impl Strategy<Value = (&'static str, usize, usize)> {
    prop::sample::select(ALGEBRAS.to_vec()).prop_flat_map(|name| {
        let n = fixtures::algebra(name).unwrap().size();
        (Just(name), 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn principal_congruence_is_least_compatible_partition((name, x, y) in fixture_and_pair()) {
        let alg = fixtures::algebra(name).unwrap();
        let cg = cg_generate(&alg, &[(x, y)]);
        prop_assert!(cg.related(x, y));
        prop_assert!(common::compatible(&alg, &cg.rep_vec()));
        for c in enumerate_congruences(&alg).congruences() {
            if c.related(x, y) {
                prop_assert!(cg.leq(c));
            }
        }
    }
}
