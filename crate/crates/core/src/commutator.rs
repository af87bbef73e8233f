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

//! The term-condition commutator and everything built from its table.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{direct_product, quotient_algebra, subalgebra, FiniteAlgebra};
use crate::congruence::{
    cg_extend, cg_generate, enumerate_congruences, Congruence, CongruenceLattice, UnionFind,
};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::report::Report;
use crate::subpower::close_flat;

/// Hypothesis label for statements that assume a commutative commutator
/// distributing over joins.
pub const STANDING: &str = "commutative, join-distributive commutator";
/// Hypothesis label for statements about congruence-modular varieties.
pub const MODULAR_VARIETY: &str = "congruence-modular variety";
/// Hypothesis label for statements about congruence-modular,
/// semi-degenerate varieties.
pub const SEMI_DEGENERATE: &str = "congruence-modular, semi-degenerate variety";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawFlags {
    pub commutative: bool,
    pub join_distributive: bool,
    pub equals_meet: bool,
    pub associative: bool,
    /// `[θ, ∇] = θ` for every θ.
    pub nabla_neutral: bool,
}

impl LawFlags {
    /// Exhaustive evaluation over the whole table.
    pub fn compute(l: &FiniteLattice, table: &[usize]) -> Self {
        let m = l.size();
        let c = |a: usize, b: usize| table[a * m + b];
        let all2 = |f: &dyn Fn(usize, usize) -> bool| (0..m).all(|a| (0..m).all(|b| f(a, b)));
        let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
            (0..m).all(|a| (0..m).all(|b| (0..m).all(|d| f(a, b, d))))
        };
        LawFlags {
            commutative: all2(&|a, b| c(a, b) == c(b, a)),
            join_distributive: all3(&|a, b, d| {
                c(a, l.join(b, d)) == l.join(c(a, b), c(a, d))
                    && c(l.join(b, d), a) == l.join(c(b, a), c(d, a))
            }),
            equals_meet: all2(&|a, b| c(a, b) == l.meet(a, b)),
            associative: all3(&|a, b, d| c(c(a, b), d) == c(a, c(b, d))),
            nabla_neutral: (0..m).all(|a| c(a, l.top()) == a),
        }
    }

    pub fn standing(&self) -> bool {
        self.commutative && self.join_distributive
    }
}

#[derive(Clone, Debug)]
pub struct ComputedSource {
    pub algebra: FiniteAlgebra,
    pub congruences: CongruenceLattice,
}

#[derive(Clone, Debug)]
pub enum Provenance {
    Computed(Box<ComputedSource>),
    Fixture,
}

/// A finite bounded lattice with a commutator table.
#[derive(Clone, Debug)]
pub struct CommutatorStructure {
    name: String,
    lattice: FiniteLattice,
    table: Vec<usize>,
    principal: Option<Vec<bool>>,
    provenance: Provenance,
    flags: LawFlags,
    modular_variety: bool,
}

impl CommutatorStructure {
    /// A structure given directly by its table. The table must lie below
    /// meets and be monotone in both arguments.
    pub fn from_table(
        name: impl Into<String>,
        lattice: FiniteLattice,
        table: Vec<usize>,
        principal: Option<Vec<bool>>,
    ) -> Result<Self> {
        let m = lattice.size();
        if table.len() != m * m {
            return Err(Error::InvalidCommutator(format!(
                "table has {} cells, expected {}",
                table.len(),
                m * m
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidCommutator(format!("entry {bad} out of range")));
        }
        if principal.as_ref().is_some_and(|p| p.len() != m) {
            return Err(Error::InvalidCommutator("principal marks have the wrong length".into()));
        }
        let cs = CommutatorStructure {
            name: name.into(),
            flags: LawFlags::compute(&lattice, &table),
            lattice,
            table,
            principal,
            provenance: Provenance::Fixture,
            modular_variety: false,
        };
        if let Some((a, b)) = cs.above_meet() {
            return Err(Error::InvalidCommutator(format!(
                "[{}, {}] is not below their meet",
                cs.label(a),
                cs.label(b)
            )));
        }
        if let Some((a, b, c, d)) = cs.monotonicity_violation() {
            return Err(Error::InvalidCommutator(format!(
                "not monotone: {} <= {}, {} <= {}",
                cs.label(a),
                cs.label(c),
                cs.label(b),
                cs.label(d)
            )));
        }
        Ok(cs)
    }

    /// Enumerates Con(A) and computes every commutator.
    pub fn from_algebra(alg: &FiniteAlgebra) -> Self {
        let con = enumerate_congruences(alg);
        commutator_table(alg, &con)
    }

    /// Uses the congruence-modular shortcut for every commutator; only
    /// sound when the algebra lies in a congruence-modular variety.
    pub fn from_algebra_in_modular_variety(alg: &FiniteAlgebra) -> Self {
        let con = enumerate_congruences(alg);
        modular_commutator_table(alg, &con)
    }

    /// Marks the structure as coming from a congruence-modular variety,
    /// which statements about such varieties then assume.
    pub fn assume_modular_variety(mut self, yes: bool) -> Self {
        self.modular_variety = yes;
        self
    }

    pub fn modular_variety(&self) -> bool {
        self.modular_variety
    }

    /// Whether the semi-degenerate, congruence-modular setting is
    /// confirmed as far as one algebra can show it: the variety is declared
    /// congruence-modular, `[θ,∇] = θ` holds, and the (non-trivial) algebra
    /// has no one-element subuniverse. Table fixtures never confirm it.
    pub fn semi_degenerate(&self) -> bool {
        self.modular_variety
            && self.flags.nabla_neutral
            && self
                .algebra()
                .is_some_and(|a| a.size() > 1 && a.singleton_subuniverses().is_empty())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn label(&self, a: usize) -> &str {
        self.lattice.label(a)
    }

    pub fn flags(&self) -> LawFlags {
        self.flags
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn principal(&self) -> Option<&[bool]> {
        self.principal.as_deref()
    }

    pub fn algebra(&self) -> Option<&FiniteAlgebra> {
        match &self.provenance {
            Provenance::Computed(src) => Some(&src.algebra),
            Provenance::Fixture => None,
        }
    }

    pub fn congruences(&self) -> Option<&CongruenceLattice> {
        match &self.provenance {
            Provenance::Computed(src) => Some(&src.congruences),
            Provenance::Fixture => None,
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    fn above_meet(&self) -> Option<(usize, usize)> {
        let m = self.size();
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find(|&(a, b)| !self.lattice.leq(self.comm(a, b), self.lattice.meet(a, b)))
    }

    fn monotonicity_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let m = self.size();
        let l = &self.lattice;
        for a in 0..m {
            for c in 0..m {
                if !l.leq(a, c) {
                    continue;
                }
                for b in 0..m {
                    for d in 0..m {
                        if l.leq(b, d) && !l.leq(self.comm(a, b), self.comm(c, d)) {
                            return Some((a, b, c, d));
                        }
                    }
                }
            }
        }
        None
    }

    /// `[α,β]^n` (square) or `(α,β]^n` (left), `n ≥ 1`.
    pub fn iterated(&self, a: usize, b: usize, n: usize, mode: IterMode) -> Result<usize> {
        if n == 0 {
            return Err(Error::InvalidArgument("iteration index must be positive".into()));
        }
        Ok(self.iterate(a, b, n, mode))
    }

    pub(crate) fn iterate(&self, a: usize, b: usize, n: usize, mode: IterMode) -> usize {
        let mut x = self.comm(a, b);
        for _ in 1..n {
            let next = match mode {
                IterMode::Square => self.comm(x, x),
                IterMode::Left => self.comm(a, x),
            };
            if next == x {
                break;
            }
            x = next;
        }
        x
    }

    /// `[α,β]^n`.
    pub fn power(&self, a: usize, b: usize, n: usize) -> usize {
        self.iterate(a, b, n, IterMode::Square)
    }

    /// Every value of `[α,α]^k` for `k ≥ 1` up to stabilization.
    pub fn self_powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![self.comm(a, a)];
        loop {
            let last = *out.last().unwrap();
            let next = self.comm(last, last);
            if next == last {
                return out;
            }
            out.push(next);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IterMode {
    Square,
    Left,
}

/// The set `U` of 4-tuples `(x,y,z,w)` with `x α z`, `y α w`, `x β y`,
/// `z β w`; it is a subuniverse of `A^4` containing the generators of
/// `M(α,β)`, so `|U|` bounds the closure.
fn count_bound(alpha: &Congruence, beta: &Congruence) -> usize {
    let n = alpha.size();
    let beta_blocks = beta.blocks();
    let mut block_of = vec![0usize; n];
    for (i, b) in beta_blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    let mut total = 0usize;
    for x in 0..n {
        for z in 0..n {
            if !alpha.related(x, z) {
                continue;
            }
            for &y in &beta_blocks[block_of[x]] {
                total += beta_blocks[block_of[z]]
                    .iter()
                    .filter(|&&w| alpha.related(y, w))
                    .count();
            }
        }
    }
    total
}

/// `M(α,β)` as a flat buffer of 4-tuples `(x,y,z,w)`, read as the matrix
/// with rows `(x,y)` and `(z,w)`.
pub fn matrices(alg: &FiniteAlgebra, alpha: &Congruence, beta: &Congruence) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    for (a, b) in alpha.pairs() {
        gens.extend([a as u32, a as u32, b as u32, b as u32]);
    }
    for (c, d) in beta.pairs() {
        gens.extend([c as u32, d as u32, c as u32, d as u32]);
    }
    let bound = count_bound(alpha, beta);
    close_flat(alg, 4, &gens, Some(bound))
}

/// The least congruence δ such that, for every matrix in `M(α,β)`, the top
/// row is in δ exactly when the bottom row is.
fn commutator_raw(alg: &FiniteAlgebra, alpha: &Congruence, beta: &Congruence) -> Congruence {
    let m = matrices(alg, alpha, beta);
    let mut delta = Congruence::diagonal(alg.size());
    loop {
        let mut fresh: Vec<(usize, usize)> = Vec::new();
        for t in m.chunks_exact(4) {
            let (x, y, z, w) = (t[0] as usize, t[1] as usize, t[2] as usize, t[3] as usize);
            let top = delta.related(x, y);
            let bottom = delta.related(z, w);
            if top && !bottom {
                fresh.push((z, w));
            } else if bottom && !top {
                fresh.push((x, y));
            }
        }
        if fresh.is_empty() {
            return delta;
        }
        delta = cg_extend(alg, &delta, &fresh);
    }
}

/// `[α,β]_A`; both arguments must be members of `lat`.
pub fn tc_commutator(
    alg: &FiniteAlgebra,
    lat: &CongruenceLattice,
    alpha: &Congruence,
    beta: &Congruence,
) -> Result<Congruence> {
    for c in [alpha, beta] {
        if lat.index_of(c).is_none() {
            return Err(Error::InvalidArgument(format!(
                "{} is not a congruence of {}",
                c.display_with(alg.labels()),
                alg.name()
            )));
        }
    }
    Ok(commutator_raw(alg, alpha, beta))
}

/// All `|Con(A)|^2` commutators, computed in parallel.
pub fn commutator_table(alg: &FiniteAlgebra, con: &CongruenceLattice) -> CommutatorStructure {
    let m = con.len();
    alg.basic_translations();
    let table: Vec<usize> = (0..m * m)
        .into_par_iter()
        .map(|cell| {
            let c = commutator_raw(alg, con.get(cell / m), con.get(cell % m));
            con.index_of(&c)
                .expect("a commutator is a congruence of the same algebra")
        })
        .collect();
    let lattice = con.lattice().clone();
    CommutatorStructure {
        name: alg.name().to_string(),
        flags: LawFlags::compute(&lattice, &table),
        lattice,
        table,
        principal: Some(con.principal().to_vec()),
        provenance: Provenance::Computed(Box::new(ComputedSource {
            algebra: alg.clone(),
            congruences: con.clone(),
        })),
        modular_variety: false,
    }
}

/// `A(α)`: the subalgebra of `A^2` on the pairs of α, with the index of
/// each pair `(x, y)` stored at `x * n + y`.
fn pair_algebra(alg: &FiniteAlgebra, alpha: &Congruence) -> (FiniteAlgebra, Vec<usize>) {
    let n = alg.size();
    let square = direct_product(alg, alg).expect("same signature");
    let subset: Vec<usize> = alpha.pairs().into_iter().map(|(x, y)| x * n + y).collect();
    let (sub, elems) = subalgebra(&square, &subset).expect("a congruence is a subuniverse of A^2");
    let mut pos = vec![usize::MAX; n * n];
    for (i, &e) in elems.iter().enumerate() {
        pos[e] = i;
    }
    (sub, pos)
}

/// `[α,β]` as the pairs `(x, y)` of α with `(x,x) Δ (x,y)`, where Δ is the
/// congruence of `A(α)` generated by `((y,y), (z,z))` for `y β z`. In a
/// congruence-modular variety this is the term-condition commutator.
fn modular_raw(alg: &FiniteAlgebra, pa: &(FiniteAlgebra, Vec<usize>), alpha: &Congruence, beta: &Congruence) -> Congruence {
    let n = alg.size();
    let (sub, pos) = pa;
    let gens: Vec<(usize, usize)> = beta
        .proper_pairs()
        .into_iter()
        .map(|(y, z)| (pos[y * n + y], pos[z * n + z]))
        .collect();
    let delta = cg_generate(sub, &gens);
    let mut uf = UnionFind::new(n);
    for (x, y) in alpha.proper_pairs() {
        if delta.related(pos[x * n + x], pos[x * n + y]) {
            uf.union(x, y);
        }
    }
    uf.into_congruence()
}

/// `[α,β]` computed through `A(α)`; valid only when the algebra lies in a
/// congruence-modular variety. Both arguments must be members of `lat`.
pub fn modular_commutator(
    alg: &FiniteAlgebra,
    lat: &CongruenceLattice,
    alpha: &Congruence,
    beta: &Congruence,
) -> Result<Congruence> {
    for c in [alpha, beta] {
        if lat.index_of(c).is_none() {
            return Err(Error::InvalidArgument(format!(
                "{} is not a congruence of {}",
                c.display_with(alg.labels()),
                alg.name()
            )));
        }
    }
    Ok(modular_raw(alg, &pair_algebra(alg, alpha), alpha, beta))
}

/// The commutator table through [`modular_commutator`]. The result is marked
/// as coming from a congruence-modular variety.
pub fn modular_commutator_table(alg: &FiniteAlgebra, con: &CongruenceLattice) -> CommutatorStructure {
    let m = con.len();
    let rows: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|a| {
            let alpha = con.get(a);
            let pa = pair_algebra(alg, alpha);
            pa.0.basic_translations();
            (0..m)
                .map(|b| {
                    let c = modular_raw(alg, &pa, alpha, con.get(b));
                    con.index_of(&c)
                        .expect("a commutator is a congruence of the same algebra")
                })
                .collect()
        })
        .collect();
    let table: Vec<usize> = rows.concat();
    let lattice = con.lattice().clone();
    CommutatorStructure {
        name: alg.name().to_string(),
        flags: LawFlags::compute(&lattice, &table),
        lattice,
        table,
        principal: Some(con.principal().to_vec()),
        provenance: Provenance::Computed(Box::new(ComputedSource {
            algebra: alg.clone(),
            congruences: con.clone(),
        })),
        modular_variety: true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub abelian: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    /// Least `n` with `[∇,∇]^n = Δ`.
    pub solvable_witness: Option<usize>,
    /// Least `n` with `(∇,∇]^n = Δ`.
    pub nilpotent_witness: Option<usize>,
}

fn first_reaching_bottom(cs: &CommutatorStructure, mode: IterMode) -> Option<usize> {
    let (top, bottom) = (cs.top(), cs.bottom());
    let mut x = cs.comm(top, top);
    for n in 1..=cs.size() + 1 {
        if x == bottom {
            return Some(n);
        }
        let next = match mode {
            IterMode::Square => cs.comm(x, x),
            IterMode::Left => cs.comm(top, x),
        };
        if next == x {
            return None;
        }
        x = next;
    }
    None
}

pub fn classify(cs: &CommutatorStructure) -> Classification {
    let solvable_witness = first_reaching_bottom(cs, IterMode::Square);
    let nilpotent_witness = first_reaching_bottom(cs, IterMode::Left);
    Classification {
        abelian: cs.comm(cs.top(), cs.top()) == cs.bottom(),
        solvable: solvable_witness.is_some(),
        nilpotent: nilpotent_witness.is_some(),
        solvable_witness,
        nilpotent_witness,
    }
}

/// Join of a candidate set, returned only if it is itself a candidate.
fn greatest(cs: &CommutatorStructure, ok: impl Fn(usize) -> bool, what: &str) -> Result<usize> {
    let l = cs.lattice();
    let cands: Vec<usize> = (0..cs.size()).filter(|&a| ok(a)).collect();
    let j = l.join_all(cands.iter().copied());
    if ok(j) {
        Ok(j)
    } else {
        let names: Vec<&str> = cands.iter().map(|&a| cs.label(a)).collect();
        Err(Error::Hypothesis(format!(
            "{what} has no greatest element: candidates {{{}}} join to {}, which fails the \
             condition (the commutator does not distribute over this join)",
            names.join(", "),
            cs.label(j)
        )))
    }
}

/// `θ → ζ`, the greatest α with `[θ,α] ≤ ζ`.
pub fn residuation(cs: &CommutatorStructure, theta: usize, zeta: usize) -> Result<usize> {
    let l = cs.lattice();
    greatest(
        cs,
        |a| l.leq(cs.comm(theta, a), zeta),
        &format!("{} -> {}", cs.label(theta), cs.label(zeta)),
    )
}

/// `θ⊥`, the greatest α with `[α,θ] = Δ`.
pub fn perp(cs: &CommutatorStructure, theta: usize) -> Result<usize> {
    greatest(
        cs,
        |a| cs.comm(a, theta) == cs.bottom(),
        &format!("{}^perp", cs.label(theta)),
    )
}

/// Largest `k` tried by [`omega_diagnostic`].
pub const OMEGA_MAX_K: usize = 6;

/// One cell of the bounded search: the least `k ≤ OMEGA_MAX_K` with
/// `[[α,α]^k,[β,β]^k] ≤ [α,β]^n`, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaCell {
    pub alpha: usize,
    pub beta: usize,
    pub n: usize,
    pub k: Option<usize>,
}

/// Bounded search for the `k` asked for by property `(A,Ω)`. A cell
/// without a `k` is undecided, not a counterexample: a larger `k` might
/// still work.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaDiagnostic {
    pub max_k: usize,
    pub cells: Vec<OmegaCell>,
}

impl OmegaDiagnostic {
    /// True when every cell found a `k`.
    pub fn settled(&self) -> bool {
        self.cells.iter().all(|c| c.k.is_some())
    }

    pub fn undecided(&self) -> impl Iterator<Item = &OmegaCell> {
        self.cells.iter().filter(|c| c.k.is_none())
    }
}

/// Runs the bounded `(A,Ω)` search over `α, β ∈ omega` and `1 ≤ n ≤ n_max`.
pub fn omega_diagnostic(cs: &CommutatorStructure, omega: &[usize], n_max: usize) -> Result<OmegaDiagnostic> {
    if let Some(&bad) = omega.iter().find(|&&a| a >= cs.size()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            size: cs.size(),
        });
    }
    let l = cs.lattice();
    let mut cells = Vec::new();
    for &alpha in omega {
        for &beta in omega {
            for n in 1..=n_max {
                let target = cs.power(alpha, beta, n);
                let k = (1..=OMEGA_MAX_K).find(|&k| {
                    let lhs = cs.comm(cs.power(alpha, alpha, k), cs.power(beta, beta, k));
                    l.leq(lhs, target)
                });
                cells.push(OmegaCell { alpha, beta, n, k });
            }
        }
    }
    Ok(OmegaDiagnostic {
        max_k: OMEGA_MAX_K,
        cells,
    })
}

/// Lattice-level commutator laws. Statements whose source assumes a
/// commutative, join-distributive commutator (or `[θ,∇] = θ`) are reported
/// as conditional when the table does not satisfy that assumption.
pub fn law_checks(cs: &CommutatorStructure) -> Report {
    let l = cs.lattice();
    let m = cs.size();
    let f = cs.flags();
    let lab = |a: usize| cs.label(a).to_string();
    let pw = |a: usize, b: usize, n: usize| cs.power(a, b, n);
    let mut r = Report::new(format!("commutator laws of {}", cs.name()));
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();

    let below = pairs.iter().find(|&&(a, b)| !l.leq(cs.comm(a, b), l.meet(a, b)));
    r.check("commutator below meet", below.is_none(), || {
        let (a, b) = below.unwrap();
        format!("[{}, {}] = {}", lab(*a), lab(*b), lab(cs.comm(*a, *b)))
    });
    let mono = cs.monotonicity_violation();
    r.check("monotone in both arguments", mono.is_none(), || format!("{mono:?}"));

    let cm = cs.modular_variety();
    r.gated("commutative", MODULAR_VARIETY, cm, f.commutative, || {
        let (a, b) = pairs.iter().find(|&&(a, b)| cs.comm(a, b) != cs.comm(b, a)).unwrap();
        format!("[{}, {}] != [{}, {}]", lab(*a), lab(*b), lab(*b), lab(*a))
    });
    r.gated("distributive over binary joins", MODULAR_VARIETY, cm, f.join_distributive, || {
        for &(a, b) in &pairs {
            for d in 0..m {
                if cs.comm(a, l.join(b, d)) != l.join(cs.comm(a, b), cs.comm(a, d)) {
                    return format!(
                        "[{}, {} v {}] = {} but [{},{}] v [{},{}] = {}",
                        lab(a),
                        lab(b),
                        lab(d),
                        lab(cs.comm(a, l.join(b, d))),
                        lab(a),
                        lab(b),
                        lab(a),
                        lab(d),
                        lab(l.join(cs.comm(a, b), cs.comm(a, d)))
                    );
                }
            }
        }
        "right argument distributes; left does not".into()
    });

    let std = f.standing();
    let witness = |v: Option<String>| move || v.unwrap_or_default();

    // iterated monotonicity
    let mut bad = None;
    'outer: for &(a, c) in pairs.iter().filter(|&&(a, c)| l.leq(a, c)) {
        for &(b, d) in pairs.iter().filter(|&&(b, d)| l.leq(b, d)) {
            for n in 1..=3 {
                if !l.leq(pw(a, b, n), pw(c, d, n)) {
                    bad = Some(format!("n={n}: {} {} {} {}", lab(a), lab(b), lab(c), lab(d)));
                    break 'outer;
                }
            }
        }
    }
    r.gated("iterated commutators are monotone (n<=3)", STANDING, std, bad.is_none(), witness(bad));

    let bad = pairs.iter().find_map(|&(a, b)| {
        let x = cs.comm(a, b);
        (1..=4)
            .find(|&n| pw(a, b, n + 1) != pw(x, x, n))
            .map(|n| format!("n={n}: {} {}", lab(a), lab(b)))
    });
    r.gated("[a,b]^(n+1) = [[a,b],[a,b]]^n (n<=4)", STANDING, std, bad.is_none(), witness(bad));

    let bad = pairs.iter().find_map(|&(a, b)| {
        (1..=4)
            .flat_map(|n| (1..=n).map(move |k| (n, k)))
            .find(|&(n, k)| !l.leq(pw(a, b, n), pw(a, b, k)))
            .map(|(n, k)| format!("n={n}, k={k}: {} {}", lab(a), lab(b)))
    });
    r.gated("iterates decrease (k<=n<=4)", STANDING, std, bad.is_none(), witness(bad));

    let bad = pairs.iter().find_map(|&(a, b)| {
        (2..=3)
            .flat_map(|k| (2..=3).map(move |n| (k, n)))
            .find(|&(k, n)| {
                let y = pw(a, b, k);
                !l.leq(pw(a, b, k * n), pw(y, y, n))
            })
            .map(|(k, n)| format!("k={k}, n={n}: {} {}", lab(a), lab(b)))
    });
    r.gated("[a,b]^(kn) <= [[a,b]^k,[a,b]^k]^n (2<=k,n<=3)", STANDING, std, bad.is_none(), witness(bad));

    let bad = pairs.iter().find_map(|&(a, b)| {
        let j = l.join(a, b);
        (1..=3)
            .find(|&n| !l.leq(pw(j, j, n), l.join(a, pw(b, b, n))))
            .map(|n| format!("n={n}: {} {}", lab(a), lab(b)))
    });
    r.gated("[a v b, a v b]^n <= a v [b,b]^n (n<=3)", STANDING, std, bad.is_none(), witness(bad));

    let bad = pairs.iter().find_map(|&(a, b)| {
        let j = l.join(a, b);
        (1..=3)
            .flat_map(|n| (1..=3).map(move |k| (n, k)))
            .find(|&(n, k)| !l.leq(pw(j, j, n * k), l.join(pw(a, a, k), pw(b, b, n))))
            .map(|(n, k)| format!("n={n}, k={k}: {} {}", lab(a), lab(b)))
    });
    r.gated(
        "[a v b, a v b]^(nk) <= [a,a]^k v [b,b]^n (n,k<=3)",
        STANDING,
        std,
        bad.is_none(),
        witness(bad),
    );

    let bad = pairs.iter().find_map(|&(a, b)| {
        let j = l.join(a, b);
        (1..=3)
            .find(|&n| !l.leq(pw(j, j, n * n), l.join(pw(a, a, n), pw(b, b, n))))
            .map(|n| format!("n={n}: {} {}", lab(a), lab(b)))
    });
    r.gated("[a v b, a v b]^(n^2) <= [a,a]^n v [b,b]^n (n<=3)", STANDING, std, bad.is_none(), witness(bad));

    let mut bad = None;
    'k3: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for (k, items) in [(1usize, vec![a]), (2, vec![a, b]), (3, vec![a, b, c])] {
                    let j = l.join_all(items.iter().copied());
                    for n in 1..=3usize {
                        let rhs = l.join_all(items.iter().map(|&x| pw(x, x, n)));
                        if !l.leq(pw(j, j, n.pow(k as u32)), rhs) {
                            bad = Some(format!("k={k}, n={n}: {items:?}"));
                            break 'k3;
                        }
                    }
                }
            }
        }
    }
    r.gated(
        "[a1 v..v ak, same]^(n^k) <= [a1,a1]^n v..v [ak,ak]^n (n,k<=3)",
        STANDING,
        std,
        bad.is_none(),
        witness(bad),
    );

    if f.associative {
        let bad = pairs.iter().find_map(|&(a, b)| {
            (1..=3)
                .find(|&n| pw(a, b, n + 1) != cs.comm(pw(a, a, n), pw(b, b, n)))
                .map(|n| format!("n={n}: {} {}", lab(a), lab(b)))
        });
        r.gated(
            "associative: [a,b]^(n+1) = [[a,a]^n,[b,b]^n] (n<=3)",
            STANDING,
            std,
            bad.is_none(),
            witness(bad),
        );
    } else {
        r.skip("associative: [a,b]^(n+1) = [[a,a]^n,[b,b]^n] (n<=3)", "commutator is not associative");
    }

    // residuation
    let imps: Vec<Result<usize>> = pairs.iter().map(|&(t, z)| residuation(cs, t, z)).collect();
    let refused = imps.iter().filter(|x| x.is_err()).count();
    r.gated(
        "residuals exist",
        STANDING,
        std,
        refused == 0,
        || format!("{refused} of {} residuals have no greatest element", pairs.len()),
    );
    let imp = |t: usize, z: usize| imps[t * m + z].as_ref().ok().copied();
    let bad = (0..m).find_map(|a| {
        pairs.iter().find_map(|&(b, g)| {
            let rhs = imp(b, g)?;
            (l.leq(cs.comm(a, b), g) != l.leq(a, rhs))
                .then(|| format!("{} {} {}", lab(a), lab(b), lab(g)))
        })
    });
    r.gated("[a,b] <= c iff a <= b -> c", STANDING, std, bad.is_none(), witness(bad));
    let bad = (0..m).find_map(|a| (imp(a, cs.top()) != Some(cs.top())).then(|| lab(a)));
    r.check("a -> nabla = nabla", bad.is_none(), witness(bad));

    let nn = f.nabla_neutral;
    let nn_std = std && nn;
    let hyp_nn = "commutative, join-distributive commutator with [a,nabla] = a";
    if nn {
        let bad = pairs.iter().find_map(|&(a, b)| {
            let v = imp(a, b)?;
            ((v == cs.top()) != l.leq(a, b)).then(|| format!("{} {}", lab(a), lab(b)))
        });
        r.gated("a -> b = nabla iff a <= b", STANDING, std, bad.is_none(), witness(bad));

        let bad = pairs.iter().find_map(|&(a, b)| {
            (l.join(a, b) == cs.top() && cs.comm(a, b) != l.meet(a, b))
                .then(|| format!("{} {}", lab(a), lab(b)))
        });
        r.gated("a v b = nabla implies [a,b] = a ^ b", hyp_nn, nn_std, bad.is_none(), witness(bad));

        let bad = pairs.iter().find_map(|&(a, b)| {
            (0..m).find_map(|g| {
                if l.join(a, b) != cs.top() || l.join(a, g) != cs.top() {
                    return None;
                }
                let x = l.join(a, cs.comm(b, g));
                let y = l.join(a, l.meet(b, g));
                (x != cs.top() || y != cs.top()).then(|| format!("{} {} {}", lab(a), lab(b), lab(g)))
            })
        });
        r.gated(
            "a v b = a v c = nabla implies a v [b,c] = a v (b ^ c) = nabla",
            hyp_nn,
            nn_std,
            bad.is_none(),
            witness(bad),
        );

        let bad = pairs.iter().find_map(|&(a, b)| {
            if l.join(a, b) != cs.top() {
                return None;
            }
            (1..=3)
                .find(|&n| l.join(pw(a, a, n), pw(b, b, n)) != cs.top())
                .map(|n| format!("n={n}: {} {}", lab(a), lab(b)))
        });
        r.gated(
            "a v b = nabla implies [a,a]^n v [b,b]^n = nabla (n<=3)",
            hyp_nn,
            nn_std,
            bad.is_none(),
            witness(bad),
        );

        let center = l.complemented();
        let bad = center.iter().find_map(|&a| {
            (0..m)
                .find(|&t| cs.comm(a, t) != l.meet(a, t))
                .map(|t| format!("{} {}", lab(a), lab(t)))
        });
        r.gated(
            "complemented a: [a,t] = a ^ t",
            hyp_nn,
            nn_std,
            bad.is_none(),
            witness(bad),
        );
    } else {
        for name in [
            "a -> b = nabla iff a <= b",
            "a v b = nabla implies [a,b] = a ^ b",
            "a v b = a v c = nabla implies a v [b,c] = a v (b ^ c) = nabla",
            "a v b = nabla implies [a,a]^n v [b,b]^n = nabla (n<=3)",
            "complemented a: [a,t] = a ^ t",
        ] {
            r.skip(name, "[a,nabla] = a fails for some a");
        }
    }
    r
}

/// Containment of the subalgebra commutator in the restricted one, for the
/// subalgebra on `subset`.
pub fn check_subalgebra(cs: &CommutatorStructure, subset: &[usize]) -> Result<Report> {
    let (alg, con) = computed(cs)?;
    let (sub, emb) = subalgebra(alg, subset)?;
    let sub_con = enumerate_congruences(&sub);
    let names: Vec<&str> = emb.iter().map(|&x| alg.label(x)).collect();
    let mut r = Report::new(format!("subalgebra {{{}}} of {}", names.join(","), alg.name()));
    let m = con.len();
    let bad = (0..m * m).into_par_iter().find_map_first(|cell| {
        let (a, b) = (con.get(cell / m), con.get(cell % m));
        let (ra, rb) = (a.restrict(&emb), b.restrict(&emb));
        let lhs = tc_commutator(&sub, &sub_con, &ra, &rb).ok()?;
        let rhs = con.get(cs.comm(cell / m, cell % m)).restrict(&emb);
        (!lhs.leq(&rhs)).then(|| {
            format!(
                "alpha = {}, beta = {}",
                a.display_with(alg.labels()),
                b.display_with(alg.labels())
            )
        })
    });
    r.gated(
        "[a|S, b|S]_S <= [a,b] restricted to S",
        MODULAR_VARIETY,
        cs.modular_variety(),
        bad.is_none(),
        || bad.clone().unwrap_or_default(),
    );
    Ok(r)
}

/// Commutators of product congruences against products of commutators.
pub fn check_product(a: &CommutatorStructure, b: &CommutatorStructure) -> Result<Report> {
    let (alg_a, con_a) = computed(a)?;
    let (alg_b, con_b) = computed(b)?;
    let prod = direct_product(alg_a, alg_b)?;
    prod.basic_translations();
    let (ma, mb) = (con_a.len(), con_b.len());
    let total = ma * ma * mb * mb;
    let bad = (0..total).into_par_iter().find_map_first(|cell| {
        let (a1, rest) = (cell / (ma * mb * mb), cell % (ma * mb * mb));
        let (b1, rest) = (rest / (mb * mb), rest % (mb * mb));
        let (a2, b2) = (rest / mb, rest % mb);
        let alpha = con_a.get(a1).product(con_b.get(a2));
        let beta = con_a.get(b1).product(con_b.get(b2));
        let lhs = commutator_raw(&prod, &alpha, &beta);
        let rhs = con_a.get(a.comm(a1, b1)).product(con_b.get(b.comm(a2, b2)));
        (lhs != rhs).then(|| format!("cell ({a1},{b1}) x ({a2},{b2})"))
    });
    let mut r = Report::new(format!("products {} x {}", alg_a.name(), alg_b.name()));
    r.gated(
        "[a1 x a2, b1 x b2] = [a1,b1] x [a2,b2]",
        MODULAR_VARIETY,
        a.modular_variety() && b.modular_variety(),
        bad.is_none(),
        || bad.clone().unwrap_or_default(),
    );
    Ok(r)
}

/// Iterated commutators commute with passing to `A/θ` (n ≤ 3).
pub fn check_quotient_commutators(cs: &CommutatorStructure, theta: usize) -> Result<Report> {
    let (alg, con) = computed(cs)?;
    let th = con.get(theta);
    let (q, p) = quotient_algebra(alg, th)?;
    let qcs = CommutatorStructure::from_algebra(&q);
    let qcon = qcs.congruences().expect("computed structure");
    let mut r = Report::new(format!(
        "quotient {}/{}",
        alg.name(),
        th.display_with(alg.labels())
    ));
    let m = con.len();
    let to_q = |a: usize| -> usize {
        let image = p.transport(con.get(a)).expect("same carrier");
        qcon.index_of(&image).expect("images of congruences are congruences")
    };
    let images: Vec<usize> = (0..m).map(to_q).collect();
    let mut bad = None;
    'all: for a in 0..m {
        for b in 0..m {
            for n in 1..=3 {
                let lhs = qcs.power(images[a], images[b], n);
                let rhs = images[cs.power(a, b, n)];
                if lhs != rhs {
                    bad = Some(format!("n={n}: {} {}", cs.label(a), cs.label(b)));
                    break 'all;
                }
            }
        }
    }
    r.gated(
        "[(a v t)/t, (b v t)/t]^n = ([a,b]^n v t)/t (n<=3)",
        MODULAR_VARIETY,
        cs.modular_variety(),
        bad.is_none(),
        || bad.clone().unwrap_or_default(),
    );
    Ok(r)
}

pub(crate) fn computed(cs: &CommutatorStructure) -> Result<(&FiniteAlgebra, &CongruenceLattice)> {
    match cs.provenance() {
        Provenance::Computed(src) => Ok((&src.algebra, &src.congruences)),
        Provenance::Fixture => Err(Error::InvalidArgument(format!(
            "{} is a table fixture without an algebra",
            cs.name()
        ))),
    }
}
