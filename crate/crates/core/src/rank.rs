//! Minimum generating sets and ranks of the five monoids.
//!
//! For `End` and `wEnd` the pipeline is: one map per kernel among the
//! non-bijective members, grouped into two-sided dihedral classes
//! (`a ~ σaξ`), then filtered stratum by stratum from the top rank down,
//! dropping every class whose kernels contain a kernel of a kept class of
//! higher rank. The kept classes together with `g` and `h` generate.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::cycle::{is_member, CycleContext, KernelPartition, MonoidKind, Transformation};
use crate::dihedral::DihedralElement;
use crate::enumerate::{cardinality, closure, collect_monoid, enumerate_monoid};
use crate::error::{Error, Result};

/// How representatives are picked from each class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// Lexicographically smallest at every level.
    #[default]
    Lexicographic,
    /// Seeded random choice, for checking that the rank does not depend on it.
    Seeded(u64),
}

/// A two-sided dihedral class `{σaξ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimClass {
    /// Lexicographically least member.
    pub canonical: Transformation,
    /// The member used as a generator.
    pub representative: Transformation,
    pub rank: usize,
    /// The distinct kernels `ker(σ·canonical)`, sorted.
    pub kernels: Vec<KernelPartition>,
}

impl SimClass {
    pub fn with_representative(mut self, representative: Transformation) -> Self {
        self.representative = representative;
        self
    }
}

/// Canonical form of `a` under `a ~ σaξ`.
///
/// For each left factor `σ`, only the two `ξ` sending `1σa` to `1` can give a
/// sequence starting with `1`, so `4n` products suffice.
pub fn sim_canonicalize(a: &Transformation) -> SimClass {
    let n = a.n();
    let group: Vec<Transformation> = DihedralElement::all(n).iter().map(|s| s.to_transformation()).collect();
    let mut best: Option<Transformation> = None;
    let mut kernels = Vec::with_capacity(2 * n);
    for s in &group {
        let sa = s.then(a);
        kernels.push(sa.kernel());
        let v = sa.raw()[0] as usize;
        for xi in [DihedralElement::new(n, false, n - v), DihedralElement::new(n, true, v + 1)] {
            let candidate = sa.then(&xi.to_transformation());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    kernels.sort();
    kernels.dedup();
    let canonical = best.expect("dihedral group is non-empty");
    SimClass { representative: canonical.clone(), rank: a.rank(), canonical, kernels }
}

/// `A ≼ B`: some kernel of `A` is contained in some kernel of `B`.
///
/// Both kernel sets are closed under the dihedral action, so testing a
/// single kernel of `A` is enough.
pub fn preceq(a: &SimClass, b: &SimClass) -> bool {
    let k = &a.kernels[0];
    b.kernels.iter().any(|kb| k.is_contained_in(kb))
}

fn check_kind(kind: MonoidKind) -> Result<()> {
    match kind {
        MonoidKind::End | MonoidKind::WEnd => Ok(()),
        other => Err(Error::UnsupportedKind(other)),
    }
}

/// One non-bijective member per kernel, the least one, sorted.
pub fn r_transversal(kind: MonoidKind, n: usize) -> Result<Vec<Transformation>> {
    check_kind(kind)?;
    let elements = collect_monoid(kind, n)?;
    let least = elements
        .into_par_iter()
        .filter(|t| !t.is_bijective())
        .fold(FxHashMap::default, |mut acc: FxHashMap<KernelPartition, Transformation>, t| {
            keep_least(&mut acc, t);
            acc
        })
        .reduce(FxHashMap::default, |mut a, b| {
            for t in b.into_values() {
                keep_least(&mut a, t);
            }
            a
        });
    let mut reps: Vec<Transformation> = least.into_values().collect();
    reps.sort();
    Ok(reps)
}

fn keep_least(acc: &mut FxHashMap<KernelPartition, Transformation>, t: Transformation) {
    match acc.entry(t.kernel()) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            if t < *e.get() {
                e.insert(t);
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(t);
        }
    }
}

/// Groups an R-transversal into `~`-classes, ordered by canonical form.
/// Each class keeps the first of its members in `reps` as representative.
pub fn sim_transversal(reps: &[Transformation]) -> Vec<SimClass> {
    let classes: Vec<SimClass> = reps.par_iter().map(sim_canonicalize).collect();
    let mut by_canonical: BTreeMap<Transformation, SimClass> = BTreeMap::new();
    for (class, rep) in classes.into_iter().zip(reps) {
        by_canonical.entry(class.canonical.clone()).or_insert_with(|| class.with_representative(rep.clone()));
    }
    by_canonical.into_values().collect()
}

/// Bookkeeping for one rank stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stratum {
    pub rank: usize,
    pub candidates: usize,
    pub kept: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtered {
    pub kept: Vec<SimClass>,
    pub strata: Vec<Stratum>,
}

/// Keeps the top-rank stratum, then for each lower rank keeps the classes
/// not above any class already kept.
pub fn filter_dominated(classes: Vec<SimClass>, n: usize) -> Result<Filtered> {
    let top = n / 2 + 1;
    let mut by_rank: BTreeMap<usize, Vec<SimClass>> = BTreeMap::new();
    for c in classes {
        if c.rank > top || c.rank == 0 {
            return Err(Error::InvariantViolation(format!(
                "class of {} has rank {} outside 1..={top}",
                c.canonical, c.rank
            )));
        }
        by_rank.entry(c.rank).or_default().push(c);
    }
    let mut kept: Vec<SimClass> = Vec::new();
    let mut strata = Vec::with_capacity(top);
    for rank in (1..=top).rev() {
        let stratum = by_rank.remove(&rank).unwrap_or_default();
        let candidates = stratum.len();
        let survivors: Vec<SimClass> =
            stratum.into_par_iter().filter(|alpha| !kept.iter().any(|beta| preceq(beta, alpha))).collect();
        strata.push(Stratum { rank, candidates, kept: survivors.len() });
        kept.extend(survivors);
    }
    Ok(Filtered { kept, strata })
}

/// A minimum generating set and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub kind: MonoidKind,
    pub n: usize,
    pub rank: usize,
    /// `g`, `h`, then the remaining generators by decreasing rank.
    pub generators: Vec<Transformation>,
    /// Number of generators of each transformation rank.
    pub generator_count_by_rank: BTreeMap<usize, usize>,
    /// Per-stratum bookkeeping; empty when no filtering was run.
    pub strata: Vec<Stratum>,
}

impl RankResult {
    fn new(kind: MonoidKind, n: usize, generators: Vec<Transformation>, strata: Vec<Stratum>) -> Self {
        let mut generator_count_by_rank = BTreeMap::new();
        for g in &generators {
            *generator_count_by_rank.entry(g.rank()).or_insert(0) += 1;
        }
        Self { kind, n, rank: generators.len(), generators, generator_count_by_rank, strata }
    }
}

fn random_r_transversal(kind: MonoidKind, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Transformation>> {
    let group: Vec<Transformation> = DihedralElement::all(n).iter().map(|s| s.to_transformation()).collect();
    Ok(r_transversal(kind, n)?.into_iter().map(|rep| rep.then(&group[rng.gen_range(0..group.len())])).collect())
}

fn random_sim_transversal(reps: &[Transformation], rng: &mut ChaCha8Rng) -> Vec<SimClass> {
    let classes: Vec<SimClass> = reps.par_iter().map(sim_canonicalize).collect();
    let mut members: BTreeMap<Transformation, (SimClass, Vec<Transformation>)> = BTreeMap::new();
    for (class, rep) in classes.into_iter().zip(reps) {
        members.entry(class.canonical.clone()).or_insert_with(|| (class, Vec::new())).1.push(rep.clone());
    }
    members
        .into_values()
        .map(|(class, reps)| {
            let pick = reps.choose(rng).expect("class has a member").clone();
            class.with_representative(pick)
        })
        .collect()
}

fn pipeline(kind: MonoidKind, n: usize, selection: Selection) -> Result<RankResult> {
    let ctx = CycleContext::new(n)?;
    let classes = match selection {
        Selection::Lexicographic => sim_transversal(&r_transversal(kind, n)?),
        Selection::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let reps = random_r_transversal(kind, n, &mut rng)?;
            random_sim_transversal(&reps, &mut rng)
        }
    };
    let filtered = filter_dominated(classes, n)?;
    let mut generators = vec![ctx.rotation(), ctx.reflection()];
    generators.extend(filtered.kept.into_iter().map(|c| c.representative));
    Ok(RankResult::new(kind, n, generators, filtered.strata))
}

/// Least member of `kind` of the given rank.
fn least_of_rank(kind: MonoidKind, n: usize, rank: usize) -> Result<Transformation> {
    let mut found: Vec<Transformation> = enumerate_monoid(kind, n)?.filter(|t| t.rank() == rank).collect();
    found.sort();
    found
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvariantViolation(format!("{kind} over C_{n} has no element of rank {rank}")))
}

/// Rank and a minimum generating set of `kind` over `C_n`.
pub fn monoid_rank(kind: MonoidKind, n: usize) -> Result<RankResult> {
    monoid_rank_with(kind, n, Selection::Lexicographic)
}

pub fn monoid_rank_with(kind: MonoidKind, n: usize, selection: Selection) -> Result<RankResult> {
    let ctx = CycleContext::new(n)?;
    let units = vec![ctx.rotation(), ctx.reflection()];
    let constant = ctx.constant(1)?;
    let with = |extra: Vec<Transformation>| {
        let mut g = units.clone();
        g.extend(extra);
        RankResult::new(kind, n, g, Vec::new())
    };
    Ok(match kind {
        MonoidKind::Aut => with(vec![]),
        MonoidKind::SEnd if n == 4 => with(vec![least_of_rank(MonoidKind::SEnd, 4, 3)?]),
        MonoidKind::SEnd => with(vec![]),
        MonoidKind::SwEnd if n == 3 => RankResult { kind, ..pipeline(MonoidKind::WEnd, 3, selection)? },
        MonoidKind::SwEnd if n == 4 => with(vec![least_of_rank(MonoidKind::SEnd, 4, 3)?, constant]),
        MonoidKind::SwEnd => with(vec![constant]),
        MonoidKind::End | MonoidKind::WEnd => pipeline(kind, n, selection)?,
    })
}

/// Does the generating set produce exactly the monoid?
pub fn verify_generating_set(result: &RankResult, cap: usize) -> Result<bool> {
    let expected = cardinality(result.kind, result.n)?;
    let generated = closure(&result.generators, cap)?;
    Ok(generated.len() as u128 == expected && generated.iter().all(|t| is_member(t, result.kind)))
}

/// One row of the size/rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub n: usize,
    pub kind: MonoidKind,
    pub size: u128,
    pub rank: usize,
}

/// Sizes and ranks of all five monoids for `3 <= n <= max_n`.
pub fn results_table(max_n: usize) -> Result<Vec<TableEntry>> {
    let mut rows = Vec::new();
    for n in 3..=max_n {
        for kind in MonoidKind::ALL {
            rows.push(TableEntry { n, kind, size: cardinality(kind, n)?, rank: monoid_rank(kind, n)?.rank });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::from_images(images).unwrap()
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let a = t(&[2, 3, 3, 2, 1, 1, 2]);
        let base = sim_canonicalize(&a);
        assert_eq!(base.canonical.apply(1), 1);
        for s in DihedralElement::all(7) {
            for x in DihedralElement::all(7) {
                let b = s.to_transformation().then(&a).then(&x.to_transformation());
                assert_eq!(sim_canonicalize(&b).canonical, base.canonical);
            }
        }
    }

    #[test]
    fn canonical_form_matches_full_search() {
        let a = t(&[3, 4, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2]);
        let group: Vec<_> = DihedralElement::all(12).iter().map(|s| s.to_transformation()).collect();
        let a = &a;
        let brute = group.iter().flat_map(|s| group.iter().map(move |x| s.then(a).then(x))).min().unwrap();
        assert_eq!(sim_canonicalize(a).canonical, brute);
    }

    #[test]
    fn constants_form_one_class() {
        let c = CycleContext::new(6).unwrap();
        let classes: Vec<_> = c.constants().map(|k| sim_canonicalize(&k).canonical).collect();
        assert!(classes.iter().all(|k| *k == classes[0]));
        assert_eq!(sim_canonicalize(&c.constant(4).unwrap()).kernels.len(), 1);
    }

    #[test]
    fn everything_precedes_constants() {
        let c = CycleContext::new(6).unwrap();
        let k = sim_canonicalize(&c.constant(1).unwrap());
        let a = sim_canonicalize(&t(&[1, 2, 3, 4, 3, 2]));
        assert!(preceq(&a, &k));
        assert!(!preceq(&k, &a));
        assert!(preceq(&a, &a));
    }

    #[test]
    fn empty_input_keeps_nothing() {
        let out = filter_dominated(Vec::new(), 9).unwrap();
        assert!(out.kept.is_empty());
        assert_eq!(out.strata.len(), 5);
    }

    #[test]
    fn oversized_rank_is_rejected() {
        let class = sim_canonicalize(&t(&[1, 2, 3, 4, 5, 6, 5, 4]));
        assert!(matches!(filter_dominated(vec![class], 8), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn small_ranks() {
        assert_eq!(monoid_rank(MonoidKind::WEnd, 3).unwrap().rank, 3);
        assert_eq!(monoid_rank(MonoidKind::End, 4).unwrap().rank, 3);
        assert_eq!(monoid_rank(MonoidKind::WEnd, 6).unwrap().rank, 6);
        assert_eq!(monoid_rank(MonoidKind::End, 9).unwrap().rank, 2);
        assert_eq!(monoid_rank(MonoidKind::SwEnd, 4).unwrap().rank, 4);
        assert_eq!(monoid_rank(MonoidKind::SEnd, 4).unwrap().rank, 3);
    }

    #[test]
    fn rank_is_generator_count_plus_units() {
        let r = monoid_rank(MonoidKind::WEnd, 7).unwrap();
        assert_eq!(r.rank, r.generators.len());
        assert_eq!(r.strata.iter().map(|s| s.kept).sum::<usize>() + 2, r.rank);
        assert_eq!(r.generator_count_by_rank.values().sum::<usize>(), r.rank);
    }

    #[test]
    fn transversal_has_one_map_per_kernel() {
        let reps = r_transversal(MonoidKind::WEnd, 5).unwrap();
        let mut kernels: Vec<_> = reps.iter().map(|t| t.kernel()).collect();
        kernels.sort();
        kernels.dedup();
        assert_eq!(kernels.len(), reps.len());
        assert!(reps.iter().all(|t| !t.is_bijective()));
        assert_eq!(r_transversal(MonoidKind::Aut, 5), Err(Error::UnsupportedKind(MonoidKind::Aut)));
    }

    #[test]
    fn generating_sets_close_up() {
        for kind in MonoidKind::ALL {
            for n in 3..=7 {
                let r = monoid_rank(kind, n).unwrap();
                assert!(verify_generating_set(&r, 1 << 20).unwrap(), "{kind} n={n}");
            }
        }
    }
}
