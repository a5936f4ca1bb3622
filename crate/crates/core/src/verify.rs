//! Self-checks over every structural property the library relies on.
//!
//! Each check runs exhaustively (or on seeded random samples) up to a size
//! limit and reports how many cases it examined.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycle::{is_member, CycleContext, KernelPartition, MonoidKind, Transformation};
use crate::dihedral::DihedralElement;
use crate::enumerate::{
    all_transformations, brute_force_members, cardinality, closure, collect_monoid, Monoid, DEFAULT_ELEMENT_CAP,
};
use crate::error::Result;
use crate::green::{self, Relation};
use crate::rank::{self, Selection};

/// Known `(size, rank)` pairs for `n = 3..=12`, columns in [`MonoidKind::ALL`] order.
pub const REFERENCE_TABLE: [[(u128, usize); 5]; 10] = [
    [(6, 2), (6, 2), (6, 2), (27, 3), (27, 3)],
    [(8, 2), (32, 3), (32, 3), (36, 4), (84, 4)],
    [(10, 2), (10, 2), (10, 2), (15, 3), (265, 4)],
    [(12, 2), (12, 2), (132, 3), (18, 3), (858, 6)],
    [(14, 2), (14, 2), (14, 2), (21, 3), (2765, 7)],
    [(16, 2), (16, 2), (576, 4), (24, 3), (8872, 13)],
    [(18, 2), (18, 2), (18, 2), (27, 3), (28269, 20)],
    [(20, 2), (20, 2), (2540, 5), (30, 3), (89550, 50)],
    [(22, 2), (22, 2), (22, 2), (33, 3), (282205, 105)],
    [(24, 2), (24, 2), (11112, 10), (36, 3), (885492, 272)],
];

/// Looks up the reference `(size, rank)` for `kind` over `C_n`.
pub fn reference_value(kind: MonoidKind, n: usize) -> Option<(u128, usize)> {
    let row = REFERENCE_TABLE.get(n.checked_sub(3)?)?;
    let col = MonoidKind::ALL.iter().position(|&k| k == kind)?;
    Some(row[col])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Every check, sizes capped at 6 and small samples.
    Quick,
    /// Every check at its full range (still capped by `max_n`).
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub level: Level,
    pub max_n: usize,
}

impl Limits {
    /// Effective upper bound for a property stated up to `stated`.
    pub fn upto(&self, stated: usize) -> usize {
        let quick = if self.level == Level::Quick { 6 } else { usize::MAX };
        stated.min(self.max_n).min(quick)
    }

    fn samples(&self, full: usize) -> usize {
        match self.level {
            Level::Quick => (full / 20).max(50),
            Level::Full => full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

type CheckFn = fn(&Limits) -> Result<(u64, Option<String>)>;

/// All checks, by name.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("membership_lattice", membership_lattice),
    ("kernel_containment_order", kernel_containment_order),
    ("interval_images_are_arcs", interval_images_are_arcs),
    ("rank_bound", rank_bound),
    ("kernel_parity", kernel_parity),
    ("neighbour_preimages", neighbour_preimages),
    ("normalized_images", normalized_images),
    ("dihedral_formulas", dihedral_formulas),
    ("dihedral_homomorphism", dihedral_homomorphism),
    ("automorphisms_are_dihedral", automorphisms_are_dihedral),
    ("counts_match_formulas", counts_match_formulas),
    ("enumeration_matches_brute_force", enumeration_matches_brute_force),
    ("odd_end_is_aut", odd_end_is_aut),
    ("strong_endomorphisms", strong_endomorphisms),
    ("strong_weak_endomorphisms", strong_weak_endomorphisms),
    ("closure_idempotence", closure_idempotence),
    ("regularity_oracle", regularity_oracle),
    ("regularity_agreement", regularity_agreement),
    ("regular_semigroups", regular_semigroups),
    ("r_relation", r_relation),
    ("l_relation", l_relation),
    ("d_relation", d_relation),
    ("preceq_antisymmetry", preceq_antisymmetry),
    ("reference_table", reference_table),
    ("generating_sets", generating_sets),
    ("generator_minimality", generator_minimality),
    ("selection_independence", selection_independence),
    ("top_rank_generators_are_strict", top_rank_generators_are_strict),
];

/// Runs every check under `limits`, in [`CHECKS`] order.
pub fn run_all(limits: &Limits) -> Vec<CheckReport> {
    CHECKS.iter().map(|&(name, f)| run_check(name, f, limits)).collect()
}

pub fn run_check(name: &'static str, f: CheckFn, limits: &Limits) -> CheckReport {
    match f(limits) {
        Ok((cases, failure)) => CheckReport { name, passed: failure.is_none(), cases, failure },
        Err(e) => CheckReport { name, passed: false, cases: 0, failure: Some(e.to_string()) },
    }
}

fn load(kind: MonoidKind, n: usize) -> Result<Monoid> {
    Monoid::load(kind, n, DEFAULT_ELEMENT_CAP)
}

fn first_failure<T: Send + Sync, F>(items: Vec<T>, f: F) -> Option<String>
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    items.par_iter().find_map_first(f)
}

fn random_map(n: usize, rng: &mut ChaCha8Rng) -> Transformation {
    let images: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
    Transformation::from_images(&images).expect("valid images")
}

/// A random walk with steps in {-1, 0, 1}; often, but not always, in wEnd.
fn random_walk(n: usize, rng: &mut ChaCha8Rng) -> Transformation {
    let mut v: isize = rng.gen_range(0..n as isize);
    let images: Vec<usize> = (0..n)
        .map(|_| {
            let out = v.rem_euclid(n as isize) as usize + 1;
            v += rng.gen_range(-1..=1);
            out
        })
        .collect();
    Transformation::from_images(&images).expect("valid images")
}

fn lattice_violation(t: &Transformation) -> Option<String> {
    use MonoidKind::*;
    let m = |k| is_member(t, k);
    let ok =
        (!m(Aut) || m(SEnd)) && (!m(SEnd) || (m(End) && m(SwEnd))) && (!m(End) || m(WEnd)) && (!m(SwEnd) || m(WEnd));
    (!ok).then(|| format!("membership lattice broken at {t}"))
}

fn membership_lattice(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(6) {
        let maps: Vec<_> = all_transformations(n).collect();
        cases += maps.len() as u64;
        if let Some(f) = first_failure(maps, lattice_violation) {
            return Ok((cases, Some(f)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 7..=l.upto(12) {
        for _ in 0..l.samples(2000) {
            let t = if rng.gen_bool(0.5) { random_walk(n, &mut rng) } else { random_map(n, &mut rng) };
            cases += 1;
            if let Some(f) = lattice_violation(&t) {
                return Ok((cases, Some(f)));
            }
        }
    }
    Ok((cases, None))
}

fn kernel_containment_order(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let n = 7;
    let part = |rng: &mut ChaCha8Rng| {
        let blocks: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
        KernelPartition::from_assignment(&blocks)
    };
    let samples = l.samples(5000);
    for _ in 0..samples {
        let (a, b, c) = (part(&mut rng), part(&mut rng), part(&mut rng));
        let by_pairs = (1..=n).all(|i| (1..=n).all(|j| !a.identifies(i, j) || b.identifies(i, j)));
        if a.is_contained_in(&b) != by_pairs
            || !a.is_contained_in(&a)
            || (a.is_contained_in(&b) && b.is_contained_in(&a) && a != b)
            || (a.is_contained_in(&b) && b.is_contained_in(&c) && !a.is_contained_in(&c))
        {
            return Ok((samples as u64, Some(format!("order axioms fail on {a:?}, {b:?}, {c:?}"))));
        }
    }
    Ok((samples as u64, None))
}

fn interval_images_are_arcs(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(7) {
        let elements = collect_monoid(MonoidKind::WEnd, n)?;
        cases += elements.len() as u64;
        let f = first_failure(elements, |t| {
            for i in 1..=n {
                for j in i..=n {
                    if t.interval_image(i, j).is_err() {
                        return Some(format!("[{i},{j}] under {t} is not an arc"));
                    }
                }
            }
            None
        });
        if f.is_some() {
            return Ok((cases, f));
        }
    }
    Ok((cases, None))
}

fn rank_bound(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(10) {
        let elements = collect_monoid(MonoidKind::WEnd, n)?;
        cases += elements.len() as u64;
        let f = first_failure(elements, |t| {
            let r = t.rank();
            if r == n {
                return (!is_member(t, MonoidKind::Aut)).then(|| format!("bijective {t} is not an automorphism"));
            }
            if r > n / 2 + 1 {
                return Some(format!("{t} has rank {r} > {}", n / 2 + 1));
            }
            (n % 2 == 0 && r == n / 2 + 1 && !is_member(t, MonoidKind::End))
                .then(|| format!("{t} has top rank but collapses an edge"))
        });
        if f.is_some() {
            return Ok((cases, f));
        }
    }
    Ok((cases, None))
}

fn kernel_parity(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in (4..=l.upto(10)).step_by(2) {
        let elements = collect_monoid(MonoidKind::End, n)?;
        cases += elements.len() as u64;
        let f = first_failure(elements, |t| {
            for i in 1..=n {
                for j in i..=n {
                    if t.apply(i) == t.apply(j) && (j - i) % 2 == 1 {
                        return Some(format!("{t} identifies {i} and {j}"));
                    }
                }
            }
            None
        });
        if f.is_some() {
            return Ok((cases, f));
        }
    }
    Ok((cases, None))
}

fn neighbour_preimages(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(7) {
        let elements = collect_monoid(MonoidKind::WEnd, n)?;
        cases += elements.len() as u64;
        let f = first_failure(elements, |t| {
            let image = t.image_mask();
            for j in 0..n {
                let next = (j + 1) % n;
                if !(image[j] && image[next]) {
                    continue;
                }
                let found = (0..n).any(|i| {
                    t.raw()[i] as usize == j
                        && [(i + 1) % n, (i + n - 1) % n].iter().any(|&k| t.raw()[k] as usize == next)
                });
                if !found {
                    return Some(format!("{t}: no neighbouring preimages for {} and {}", j + 1, next + 1));
                }
            }
            None
        });
        if f.is_some() {
            return Ok((cases, f));
        }
    }
    Ok((cases, None))
}

fn normalized_images(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(8) {
        let elements = collect_monoid(MonoidKind::WEnd, n)?;
        cases += elements.len() as u64;
        let f = first_failure(elements, |t| match crate::cycle::normalize_image(t) {
            Ok((norm, _)) => {
                let expected: BTreeSet<usize> = (1..=t.rank()).collect();
                (norm.image() != expected || norm.kernel() != t.kernel())
                    .then(|| format!("normalizing {t} gave {norm}"))
            }
            Err(e) => Some(e.to_string()),
        });
        if f.is_some() {
            return Ok((cases, f));
        }
    }
    Ok((cases, None))
}

fn dihedral_formulas(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.max_n.min(12) {
        for k in 0..n {
            let rot = DihedralElement::new(n, false, k);
            let refl = DihedralElement::new(n, true, k);
            for i in 1..=n {
                cases += 1;
                let r = if i <= n - k { i + k } else { i + k - n };
                let h = if i <= k { k - i + 1 } else { n + k - i + 1 };
                if rot.apply(i) != r || refl.apply(i) != h {
                    return Ok((cases, Some(format!("g^{k} or hg^{k} wrong at {i}, n={n}"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn dihedral_homomorphism(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.max_n.min(10) {
        let group = DihedralElement::all(n);
        for x in &group {
            for y in &group {
                cases += 1;
                if x.then(y).to_transformation() != x.to_transformation().then(&y.to_transformation()) {
                    return Ok((cases, Some(format!("product {x} * {y} disagrees with composition"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn automorphisms_are_dihedral(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(8) {
        cases += n.pow(n as u32) as u64;
        let brute: BTreeSet<_> =
            all_transformations(n).par_bridge().filter(|t| t.is_bijective() && is_member(t, MonoidKind::Aut)).collect();
        let group: BTreeSet<_> = DihedralElement::all(n).iter().map(|x| x.to_transformation()).collect();
        if brute != group {
            return Ok((cases, Some(format!("automorphisms of C_{n} differ from the dihedral group"))));
        }
    }
    Ok((cases, None))
}

fn counts_match_formulas(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.max_n.min(12) {
        for kind in MonoidKind::ALL {
            let count = collect_monoid(kind, n)?.len() as u128;
            cases += count as u64;
            let formula = cardinality(kind, n)?;
            if count != formula {
                return Ok((cases, Some(format!("{kind} n={n}: enumerated {count}, formula {formula}"))));
            }
        }
    }
    Ok((cases, None))
}

fn enumeration_matches_brute_force(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(6) {
        for kind in MonoidKind::ALL {
            let mut listed = collect_monoid(kind, n)?;
            listed.sort();
            let brute = brute_force_members(kind, n);
            cases += brute.len() as u64;
            if listed != brute {
                return Ok((cases, Some(format!("{kind} n={n}: enumeration differs from filtering T_n"))));
            }
        }
    }
    Ok((cases, None))
}

fn odd_end_is_aut(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in (3..=l.max_n.min(11)).step_by(2) {
        let mut end = collect_monoid(MonoidKind::End, n)?;
        let mut aut = collect_monoid(MonoidKind::Aut, n)?;
        end.sort();
        aut.sort();
        cases += end.len() as u64;
        if end != aut {
            return Ok((cases, Some(format!("End(C_{n}) != Aut(C_{n})"))));
        }
    }
    Ok((cases, None))
}

fn strong_endomorphisms(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.max_n.min(12) {
        // Strong maps preserve edges, so filtering End finds all of them.
        let strong: BTreeSet<_> =
            collect_monoid(MonoidKind::End, n)?.into_iter().filter(|t| is_member(t, MonoidKind::SEnd)).collect();
        cases += strong.len() as u64;
        if n == 4 {
            let by_rank = |r| strong.iter().filter(|t| t.rank() == r).count();
            if (strong.len(), by_rank(4), by_rank(3), by_rank(2)) != (32, 8, 16, 8) {
                return Ok((cases, Some(format!("sEnd(C_4) has {} elements", strong.len()))));
            }
        } else {
            let group: BTreeSet<_> = DihedralElement::all(n).iter().map(|x| x.to_transformation()).collect();
            if strong != group {
                return Ok((cases, Some(format!("sEnd(C_{n}) is not the dihedral group"))));
            }
        }
    }
    Ok((cases, None))
}

fn strong_weak_endomorphisms(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 5..=l.max_n.min(12) {
        let found: BTreeSet<_> =
            collect_monoid(MonoidKind::WEnd, n)?.into_par_iter().filter(|t| is_member(t, MonoidKind::SwEnd)).collect();
        cases += found.len() as u64;
        let ctx = CycleContext::new(n)?;
        let expected: BTreeSet<_> =
            DihedralElement::all(n).iter().map(|x| x.to_transformation()).chain(ctx.constants()).collect();
        if found != expected {
            return Ok((cases, Some(format!("swEnd(C_{n}) is not units plus constants"))));
        }
    }
    Ok((cases, None))
}

fn closure_idempotence(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let samples = l.samples(200);
    for _ in 0..samples {
        let n = rng.gen_range(3..=5);
        let size = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..size).map(|_| random_map(n, &mut rng)).collect();
        let once = closure(&gens, DEFAULT_ELEMENT_CAP)?;
        if closure(&once, DEFAULT_ELEMENT_CAP)? != once {
            return Ok((samples as u64, Some(format!("closure not idempotent for {gens:?}"))));
        }
    }
    Ok((samples as u64, None))
}

fn regularity_oracle(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for (kind, stated) in [(MonoidKind::WEnd, 6), (MonoidKind::End, 8)] {
        for n in 3..=l.upto(stated) {
            let m = load(kind, n)?;
            cases += m.len() as u64;
            let f = first_failure(m.elements().to_vec(), |a| {
                let fast = green::full_sublist_witness(a);
                if let Some(w) = fast {
                    let beta = w.inverse(a).to_transformation();
                    if !w.verify(a) || &a.then(&beta).then(a) != a {
                        return Some(format!("bad regularity witness for {a}"));
                    }
                }
                (fast.is_some() != green::regular_oracle(a, &m)).then(|| format!("{kind}: regularity of {a}"))
            });
            if f.is_some() {
                return Ok((cases, f));
            }
        }
    }
    Ok((cases, None))
}

fn regularity_agreement(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(6) {
        let end = load(MonoidKind::End, n)?;
        let wend = load(MonoidKind::WEnd, n)?;
        cases += end.len() as u64;
        for a in end.elements() {
            if green::is_regular(a, MonoidKind::End)? != green::is_regular(a, MonoidKind::WEnd)?
                || green::regular_oracle(a, &end) != green::regular_oracle(a, &wend)
            {
                return Ok((cases, Some(format!("End and wEnd disagree on {a}"))));
            }
        }
    }
    Ok((cases, None))
}

fn all_regular(kind: MonoidKind, n: usize) -> Result<bool> {
    Ok(collect_monoid(kind, n)?.iter().all(|a| green::full_sublist_witness(a).is_some()))
}

fn regular_semigroups(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    let mut expect = |kind, n, regular: bool| -> Result<Option<String>> {
        if n > l.max_n {
            return Ok(None);
        }
        cases += 1;
        Ok((all_regular(kind, n)? != regular).then(|| format!("{kind}(C_{n}) regular: expected {regular}")))
    };
    for n in [3, 4, 5] {
        if let Some(f) = expect(MonoidKind::WEnd, n, true)? {
            return Ok((0, Some(f)));
        }
    }
    for n in [4, 6, 8] {
        if let Some(f) = expect(MonoidKind::End, n, true)? {
            return Ok((0, Some(f)));
        }
    }
    if let Some(f) = expect(MonoidKind::WEnd, 6, false)? {
        return Ok((0, Some(f)));
    }
    if l.level == Level::Full {
        if let Some(f) = expect(MonoidKind::End, 10, false)? {
            return Ok((0, Some(f)));
        }
    }
    Ok((cases, None))
}

fn r_relation(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for kind in [MonoidKind::End, MonoidKind::WEnd] {
        for n in 3..=l.upto(6) {
            let m = load(kind, n)?;
            let e = m.elements();
            cases += (e.len() * e.len()) as u64;
            let f = first_failure(e.to_vec(), |a| {
                for b in e {
                    let same = a.kernel() == b.kernel();
                    let ok = match green::factor(a, b) {
                        Ok(s) => same && &b.then(&s.to_transformation()) == a,
                        Err(_) => !same,
                    };
                    if !ok || green::r_related(a, b) != same {
                        return Some(format!("R fails on {a} | {b}"));
                    }
                }
                None
            });
            if f.is_some() {
                return Ok((cases, f));
            }
        }
    }
    Ok((cases, None))
}

fn l_pair_failure(a: &Transformation, b: &Transformation, m: &Monoid) -> Option<String> {
    match green::l_related(a, b, m.kind()) {
        Ok(r) => {
            let witness_ok = r.witness.as_ref().map_or(!r.related, |w| w.verify(a, b, m.kind()));
            (r.related != green::l_oracle(a, b, m) || !witness_ok).then(|| format!("L fails on {a} | {b}"))
        }
        Err(e) => Some(e.to_string()),
    }
}

fn l_relation(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for kind in [MonoidKind::End, MonoidKind::WEnd] {
        for n in 3..=l.upto(5) {
            let m = load(kind, n)?;
            let e = m.elements();
            cases += (e.len() * e.len()) as u64;
            let f = first_failure(e.to_vec(), |a| e.iter().find_map(|b| l_pair_failure(a, b, &m)));
            if f.is_some() {
                return Ok((cases, f));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in 6..=l.upto(7) {
            let m = load(kind, n)?;
            let e = m.elements();
            let mut by_image: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
            for (i, t) in e.iter().enumerate() {
                by_image.entry(t.image_mask()).or_default().push(i);
            }
            let pairs: Vec<(usize, usize)> = (0..l.samples(10_000))
                .map(|round| {
                    let i = rng.gen_range(0..e.len());
                    let j = if round % 4 == 0 {
                        rng.gen_range(0..e.len())
                    } else {
                        let same = &by_image[&e[i].image_mask()];
                        same[rng.gen_range(0..same.len())]
                    };
                    (i, j)
                })
                .collect();
            cases += pairs.len() as u64;
            let f = first_failure(pairs, |&(i, j)| l_pair_failure(&e[i], &e[j], &m));
            if f.is_some() {
                return Ok((cases, f));
            }
        }
    }
    Ok((cases, None))
}

fn d_relation(l: &Limits) -> Result<(u64, Option<String>)> {
    if l.max_n < 5 {
        return Ok((0, None));
    }
    let m = load(MonoidKind::WEnd, 5)?;
    let d = green::classes(&m, Relation::D)?;
    let mut class_of = vec![0; m.len()];
    for (k, c) in d.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    let e = m.elements();
    let indices: Vec<usize> = (0..e.len()).collect();
    let f = first_failure(indices, |&i| {
        for j in 0..e.len() {
            let forward = green::d_related(&e[i], &e[j], MonoidKind::WEnd).ok()?;
            let backward = green::d_related(&e[j], &e[i], MonoidKind::WEnd).ok()?;
            if forward != backward || forward != (class_of[i] == class_of[j]) || (forward && e[i].rank() != e[j].rank())
            {
                return Some(format!("D fails on {} | {}", e[i], e[j]));
            }
        }
        None
    });
    Ok(((e.len() * e.len()) as u64, f))
}

fn preceq_antisymmetry(l: &Limits) -> Result<(u64, Option<String>)> {
    if l.max_n < 6 {
        return Ok((0, None));
    }
    let classes = rank::sim_transversal(&rank::r_transversal(MonoidKind::WEnd, 6)?);
    let mut cases = 0;
    for a in &classes {
        for b in &classes {
            cases += 1;
            if rank::preceq(a, b) && rank::preceq(b, a) && a.canonical != b.canonical {
                return Ok((cases, Some(format!("{} and {} precede each other", a.canonical, b.canonical))));
            }
        }
    }
    Ok((cases, None))
}

fn reference_table(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    let top = if l.level == Level::Quick { l.max_n.min(8) } else { l.max_n.min(12) };
    for n in 3..=top {
        for kind in MonoidKind::ALL {
            cases += 1;
            let (size, rank) = reference_value(kind, n).expect("n in table range");
            let got = (cardinality(kind, n)?, rank::monoid_rank(kind, n)?.rank);
            if got != (size, rank) {
                return Ok((cases, Some(format!("{kind} n={n}: got {got:?}, expected {:?}", (size, rank)))));
            }
        }
    }
    Ok((cases, None))
}

fn generating_sets(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(10) {
        for kind in MonoidKind::ALL {
            let r = rank::monoid_rank(kind, n)?;
            cases += 1;
            if !rank::verify_generating_set(&r, DEFAULT_ELEMENT_CAP)? {
                return Ok((cases, Some(format!("generators of {kind}(C_{n}) do not close up"))));
            }
        }
    }
    Ok((cases, None))
}

fn generator_minimality(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.max_n.min(6) {
        for kind in MonoidKind::ALL {
            let r = rank::monoid_rank(kind, n)?;
            let full = cardinality(kind, n)?;
            for skip in 0..r.generators.len() {
                cases += 1;
                let fewer: Vec<_> =
                    r.generators.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, g)| g.clone()).collect();
                if closure(&fewer, DEFAULT_ELEMENT_CAP)?.len() as u128 >= full {
                    return Ok((cases, Some(format!("{kind}(C_{n}): generator {skip} is redundant"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn selection_independence(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in 3..=l.upto(10) {
        for kind in [MonoidKind::End, MonoidKind::WEnd] {
            let lex = rank::monoid_rank(kind, n)?;
            for seed in [7, 8] {
                cases += 1;
                let random = rank::monoid_rank_with(kind, n, Selection::Seeded(seed))?;
                if random.rank != lex.rank {
                    return Ok((cases, Some(format!("{kind}(C_{n}) seed {seed}: rank {}", random.rank))));
                }
                if n <= 8 && !rank::verify_generating_set(&random, DEFAULT_ELEMENT_CAP)? {
                    return Ok((cases, Some(format!("{kind}(C_{n}) seed {seed}: generators do not close up"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn top_rank_generators_are_strict(l: &Limits) -> Result<(u64, Option<String>)> {
    let mut cases = 0;
    for n in (4..=l.upto(12)).step_by(2) {
        let r = rank::monoid_rank(MonoidKind::WEnd, n)?;
        for g in r.generators.iter().filter(|g| g.rank() == n / 2 + 1) {
            cases += 1;
            if !is_member(g, MonoidKind::End) {
                return Ok((cases, Some(format!("top-rank generator {g} of wEnd(C_{n}) is not in End"))));
            }
        }
    }
    Ok((cases, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes_at_small_n() {
        let reports = run_all(&Limits { level: Level::Quick, max_n: 5 });
        assert_eq!(reports.len(), CHECKS.len());
        for r in reports {
            assert!(r.passed, "{}: {:?}", r.name, r.failure);
        }
    }

    #[test]
    fn reference_lookup() {
        assert_eq!(reference_value(MonoidKind::WEnd, 12), Some((885_492, 272)));
        assert_eq!(reference_value(MonoidKind::SwEnd, 4), Some((36, 4)));
        assert_eq!(reference_value(MonoidKind::End, 13), None);
        assert_eq!(reference_value(MonoidKind::End, 2), None);
    }

    #[test]
    fn limits_cap_ranges() {
        let quick = Limits { level: Level::Quick, max_n: 12 };
        assert_eq!(quick.upto(10), 6);
        let full = Limits { level: Level::Full, max_n: 8 };
        assert_eq!(full.upto(10), 8);
        assert_eq!(full.upto(7), 7);
    }
}
