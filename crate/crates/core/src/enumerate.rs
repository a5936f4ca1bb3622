//! Enumeration of the five monoids, their closed-form sizes, and a closure
//! engine for checking generating sets.
//!
//! `wEnd` and `End` are walked as step sequences: a member is fixed by `1α`
//! and the `n - 1` steps `t_i` with `(i+1)α ≡ iα + t_i (mod n)`. The closing
//! pair `(n, 1)` only constrains the total `Σ t_i`, so a branch is cut as soon
//! as no admissible total is reachable from it.

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::cycle::{is_member, CycleContext, MonoidKind, Transformation};
use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};

/// Default ceiling on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 1 << 24;

/// A weak endomorphism written as a start value and its consecutive steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepSequence {
    /// `1α`, 1-based.
    pub start: usize,
    /// `t_1, ..., t_{n-1}`, each in `{-1, 0, 1}`.
    pub steps: Vec<i8>,
}

impl StepSequence {
    pub fn n(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn decode(&self) -> Transformation {
        let n = self.n();
        let mut images = Vec::with_capacity(n);
        let mut current = self.start - 1;
        images.push(current as u8);
        for &t in &self.steps {
            current = crate::cycle::add_mod(current, t as isize, n);
            images.push(current as u8);
        }
        Transformation::from_raw(images.into_boxed_slice())
    }

    /// Reads the steps of `t`; `None` if some consecutive pair is not a step.
    pub fn encode(t: &Transformation) -> Option<StepSequence> {
        let n = t.n();
        let raw = t.raw();
        let steps = raw
            .windows(2)
            .map(|w| match (w[1] as usize + n - w[0] as usize) % n {
                0 => Some(0),
                1 => Some(1),
                d if d == n - 1 => Some(-1),
                _ => None,
            })
            .collect::<Option<Vec<i8>>>()?;
        Some(StepSequence { start: raw[0] as usize + 1, steps })
    }

    pub fn total(&self) -> i32 {
        self.steps.iter().map(|&t| t as i32).sum()
    }

    /// Whether the total closes the cycle for the given monoid (`End` or `wEnd`).
    pub fn is_admissible(&self, kind: MonoidKind) -> bool {
        let allowed_steps = match kind {
            MonoidKind::End => self.steps.iter().all(|&t| t != 0),
            MonoidKind::WEnd => true,
            _ => return false,
        };
        allowed_steps && admissible_totals(kind, self.n()).contains(&self.total())
    }
}

fn admissible_totals(kind: MonoidKind, n: usize) -> Vec<i32> {
    let n = n as i32;
    match kind {
        MonoidKind::End => vec![1 - n, -1, 1, n - 1],
        _ => vec![1 - n, -1, 0, 1, n - 1],
    }
}

/// Lexicographic walk over step sequences with a reachability cut.
#[derive(Debug, Clone)]
struct StepWalker {
    alphabet: &'static [i8],
    targets: Vec<i32>,
    parity: bool,
    len: usize,
    digits: Vec<usize>,
    sums: Vec<i32>,
    state: WalkState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl StepWalker {
    fn new(kind: MonoidKind, n: usize) -> Self {
        let (alphabet, parity): (&'static [i8], bool) = match kind {
            MonoidKind::End => (&[-1, 1], true),
            _ => (&[-1, 0, 1], false),
        };
        Self {
            alphabet,
            targets: admissible_totals(kind, n),
            parity,
            len: n - 1,
            digits: Vec::with_capacity(n),
            sums: Vec::with_capacity(n),
            state: WalkState::Fresh,
        }
    }

    /// Can some admissible total still be reached from `sum` with `remaining` steps?
    fn reachable(&self, sum: i32, remaining: usize) -> bool {
        let r = remaining as i32;
        self.targets.iter().any(|&t| (t - sum).abs() <= r && (!self.parity || (t - sum - r) % 2 == 0))
    }

    fn prefix_sum(&self) -> i32 {
        self.sums.last().copied().unwrap_or(0)
    }

    /// Pushes the first feasible digit at or after `from`; false if none.
    fn push_from(&mut self, from: usize) -> bool {
        let base = self.prefix_sum();
        let remaining = self.len - self.digits.len() - 1;
        for d in from..self.alphabet.len() {
            let s = base + self.alphabet[d] as i32;
            if self.reachable(s, remaining) {
                self.digits.push(d);
                self.sums.push(s);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) {
        while self.digits.len() < self.len {
            // Every reachable prefix extends, so this cannot fail.
            let pushed = self.push_from(0);
            debug_assert!(pushed);
        }
    }

    fn current(&self) -> Vec<i8> {
        self.digits.iter().map(|&d| self.alphabet[d]).collect()
    }
}

impl Iterator for StepWalker {
    type Item = Vec<i8>;

    fn next(&mut self) -> Option<Vec<i8>> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                if !self.reachable(0, self.len) {
                    self.state = WalkState::Done;
                    return None;
                }
                self.fill();
                return Some(self.current());
            }
            WalkState::Running => {}
        }
        while let Some(d) = self.digits.pop() {
            self.sums.pop();
            if self.push_from(d + 1) {
                self.fill();
                return Some(self.current());
            }
        }
        self.state = WalkState::Done;
        None
    }
}

/// A deterministic stream over one monoid of `C_n`.
///
/// `End` and `wEnd` come in lexicographic `(1α, steps)` order with steps
/// ordered `-1 < 0 < 1`; the other monoids come in lexicographic image order.
pub struct MonoidIter {
    inner: Inner,
}

enum Inner {
    Steps { n: usize, kind: MonoidKind, start: usize, walker: StepWalker },
    Listed(std::vec::IntoIter<Transformation>),
}

impl Iterator for MonoidIter {
    type Item = Transformation;

    fn next(&mut self) -> Option<Transformation> {
        match &mut self.inner {
            Inner::Listed(it) => it.next(),
            Inner::Steps { n, kind, start, walker } => loop {
                if let Some(steps) = walker.next() {
                    return Some(StepSequence { start: *start, steps }.decode());
                }
                if *start == *n {
                    return None;
                }
                *start += 1;
                *walker = StepWalker::new(*kind, *n);
            },
        }
    }
}

/// Streams every member of `kind` over `C_n`, each exactly once.
pub fn enumerate_monoid(kind: MonoidKind, n: usize) -> Result<MonoidIter> {
    let ctx = CycleContext::new(n)?;
    let inner = match kind {
        MonoidKind::End | MonoidKind::WEnd => Inner::Steps { n, kind, start: 1, walker: StepWalker::new(kind, n) },
        _ => Inner::Listed(listed_members(kind, &ctx).into_iter()),
    };
    Ok(MonoidIter { inner })
}

/// Collects a monoid, splitting the `End`/`wEnd` walk by start value.
/// The order matches [`enumerate_monoid`].
pub fn collect_monoid(kind: MonoidKind, n: usize) -> Result<Vec<Transformation>> {
    let ctx = CycleContext::new(n)?;
    match kind {
        MonoidKind::End | MonoidKind::WEnd => {
            let chunks: Vec<Vec<Transformation>> = (1..=n)
                .into_par_iter()
                .map(|start| StepWalker::new(kind, n).map(|steps| StepSequence { start, steps }.decode()).collect())
                .collect();
            Ok(chunks.into_iter().flatten().collect())
        }
        _ => Ok(listed_members(kind, &ctx)),
    }
}

fn dihedral_maps(n: usize) -> Vec<Transformation> {
    DihedralElement::all(n).iter().map(|x| x.to_transformation()).collect()
}

fn listed_members(kind: MonoidKind, ctx: &CycleContext) -> Vec<Transformation> {
    let n = ctx.n();
    let mut members = match kind {
        MonoidKind::Aut => dihedral_maps(n),
        MonoidKind::SEnd if n == 4 => brute_force_members(MonoidKind::SEnd, 4),
        MonoidKind::SEnd => dihedral_maps(n),
        MonoidKind::SwEnd if n == 3 => all_transformations(3).collect(),
        MonoidKind::SwEnd => {
            let mut m = if n == 4 { brute_force_members(MonoidKind::SEnd, 4) } else { dihedral_maps(n) };
            m.extend(ctx.constants());
            m
        }
        MonoidKind::End | MonoidKind::WEnd => unreachable!("walked, not listed"),
    };
    members.sort();
    members
}

/// Every map `{1..n} -> {1..n}` in lexicographic order. Only sensible for small `n`.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    let total = n.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut images = vec![0u8; n];
        for slot in images.iter_mut().rev() {
            *slot = (code % n) as u8;
            code /= n;
        }
        Transformation::from_raw(images.into_boxed_slice())
    })
}

/// Members of `kind` found by testing all of `T_n`.
pub fn brute_force_members(kind: MonoidKind, n: usize) -> Vec<Transformation> {
    all_transformations(n).filter(|t| is_member(t, kind)).collect()
}

/// Row `n` of Pascal's triangle, or `None` once an entry overflows.
fn binomial_row(n: usize) -> Option<Vec<u128>> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(1);
        for w in row.windows(2) {
            next.push(w[0].checked_add(w[1])?);
        }
        next.push(1);
        row = next;
    }
    Some(row)
}

/// Closed-form size of the monoid `kind` over `C_n`.
///
/// Fails with [`Error::Overflow`] when the size does not fit in a `u128`.
pub fn cardinality(kind: MonoidKind, n: usize) -> Result<u128> {
    CycleContext::new(n)?;
    let overflow = || Error::Overflow(format!("|{kind}(C_{n})| exceeds u128"));
    let n128 = n as u128;
    let size = match kind {
        MonoidKind::Aut => 2 * n128,
        MonoidKind::SEnd if n == 4 => 32,
        MonoidKind::SEnd => 2 * n128,
        MonoidKind::SwEnd => match n {
            3 => 27,
            4 => 36,
            _ => 3 * n128,
        },
        MonoidKind::End if n % 2 == 1 => 2 * n128,
        MonoidKind::End => {
            let middle = binomial_row(n).ok_or_else(overflow)?[n / 2];
            n128.checked_mul(middle).and_then(|x| x.checked_add(2 * n128)).ok_or_else(overflow)?
        }
        MonoidKind::WEnd => {
            let row = binomial_row(n).ok_or_else(overflow)?;
            let mut tail = 0u128;
            for k in 1..=n / 2 {
                let odd = binomial_row(2 * k - 1).ok_or_else(overflow)?[k];
                tail = odd.checked_mul(row[2 * k]).and_then(|x| x.checked_add(tail)).ok_or_else(overflow)?;
            }
            tail.checked_mul(2 * n128).and_then(|x| x.checked_add(3 * n128)).ok_or_else(overflow)?
        }
    };
    Ok(size)
}

/// A monoid enumerated into memory, sorted lexicographically.
#[derive(Debug, Clone)]
pub struct Monoid {
    kind: MonoidKind,
    n: usize,
    elements: Vec<Transformation>,
}

impl Monoid {
    /// Enumerates `kind` over `C_n`, refusing monoids larger than `cap`.
    pub fn load(kind: MonoidKind, n: usize, cap: usize) -> Result<Self> {
        if cardinality(kind, n)? > cap as u128 {
            return Err(Error::ResourceCap { cap });
        }
        let mut elements = collect_monoid(kind, n)?;
        elements.par_sort_unstable();
        Ok(Self { kind, n, elements })
    }

    pub fn kind(&self) -> MonoidKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index_of(t).is_some()
    }
}

/// The subsemigroup generated by `generators`, sorted.
///
/// Breadth-first: every new element is right-multiplied by each generator.
/// The identity appears only if it is a product of generators.
pub fn closure(generators: &[Transformation], cap: usize) -> Result<Vec<Transformation>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let n = first.n();
    for g in generators {
        if g.n() != n {
            return Err(Error::ContextMismatch { expected: n, found: g.n() });
        }
    }
    let mut elements = if n <= 16 { packed_closure(generators, cap)? } else { generic_closure(generators, cap)? };
    elements.sort();
    Ok(elements)
}

fn pack(t: &[u8]) -> u128 {
    t.iter().enumerate().fold(0u128, |acc, (i, &v)| acc | (v as u128) << (8 * i))
}

fn unpack(key: u128, n: usize) -> Transformation {
    Transformation::from_raw((0..n).map(|i| (key >> (8 * i)) as u8).collect())
}

fn packed_closure(generators: &[Transformation], cap: usize) -> Result<Vec<Transformation>> {
    let n = generators[0].n();
    let gens: Vec<[u8; 16]> = generators
        .iter()
        .map(|g| {
            let mut table = [0u8; 16];
            table[..n].copy_from_slice(g.raw());
            table
        })
        .collect();
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    let mut queue: Vec<u128> = Vec::new();
    for g in generators {
        let key = pack(g.raw());
        if seen.insert(key) {
            queue.push(key);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for table in &gens {
            let mut y = 0u128;
            for i in 0..n {
                let v = (x >> (8 * i)) as u8;
                y |= (table[v as usize] as u128) << (8 * i);
            }
            if seen.insert(y) {
                if queue.len() >= cap {
                    return Err(Error::ResourceCap { cap });
                }
                queue.push(y);
            }
        }
    }
    Ok(queue.into_iter().map(|k| unpack(k, n)).collect())
}

fn generic_closure(generators: &[Transformation], cap: usize) -> Result<Vec<Transformation>> {
    let mut seen: FxHashSet<Transformation> = FxHashSet::default();
    let mut queue: Vec<Transformation> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if queue.len() >= cap {
                    return Err(Error::ResourceCap { cap });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(queue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn count(kind: MonoidKind, n: usize) -> usize {
        enumerate_monoid(kind, n).unwrap().count()
    }

    #[test]
    fn counts_match_reported_sizes() {
        assert_eq!(count(MonoidKind::WEnd, 5), 265);
        assert_eq!(count(MonoidKind::End, 7), 14);
        assert_eq!(count(MonoidKind::End, 6), 132);
        assert_eq!(count(MonoidKind::WEnd, 3), 27);
    }

    #[test]
    fn strong_endomorphisms_of_c4() {
        let members: Vec<_> = enumerate_monoid(MonoidKind::SEnd, 4).unwrap().collect();
        assert_eq!(members.len(), 32);
        assert_eq!(members.iter().filter(|t| t.rank() == 3).count(), 16);
        assert_eq!(members.iter().filter(|t| t.rank() == 2).count(), 8);
    }

    #[test]
    fn formulas() {
        assert_eq!(cardinality(MonoidKind::End, 6).unwrap(), 132);
        assert_eq!(cardinality(MonoidKind::WEnd, 12).unwrap(), 885_492);
        for n in 3..=20 {
            assert_eq!(cardinality(MonoidKind::Aut, n).unwrap(), 2 * n as u128);
        }
        assert!(cardinality(MonoidKind::WEnd, 2).is_err());
        assert!(matches!(cardinality(MonoidKind::WEnd, 200), Err(Error::Overflow(_))));
        assert!(matches!(cardinality(MonoidKind::End, 200), Err(Error::Overflow(_))));
        assert_eq!(cardinality(MonoidKind::End, 201).unwrap(), 402);
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(enumerate_monoid(MonoidKind::WEnd, 2).err(), Some(Error::InvalidOrder(2)));
    }

    #[test]
    fn stream_is_sorted_by_start_then_steps() {
        let seqs: Vec<StepSequence> =
            enumerate_monoid(MonoidKind::WEnd, 6).unwrap().map(|t| StepSequence::encode(&t).unwrap()).collect();
        assert!(seqs.windows(2).all(|w| w[0] < w[1]));
        assert!(seqs.iter().all(|s| s.is_admissible(MonoidKind::WEnd)));
    }

    #[test]
    fn parallel_collection_matches_stream() {
        for kind in MonoidKind::ALL {
            let a: Vec<_> = enumerate_monoid(kind, 7).unwrap().collect();
            assert_eq!(a, collect_monoid(kind, 7).unwrap());
        }
    }

    #[test]
    fn step_sequence_round_trip() {
        let s = StepSequence { start: 3, steps: vec![1, 0, -1, -1, 0] };
        let t = s.decode();
        assert_eq!(t.images(), vec![3, 4, 4, 3, 2, 2]);
        assert_eq!(StepSequence::encode(&t), Some(s));
    }

    #[test]
    fn closure_of_generators() {
        let c = CycleContext::new(5).unwrap();
        let d = closure(&[c.rotation(), c.reflection()], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(d.len(), 10);
        let sw = closure(&[c.rotation(), c.reflection(), c.constant(1).unwrap()], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(sw, collect_monoid(MonoidKind::SwEnd, 5).unwrap());
    }

    #[test]
    fn snapshot_is_sorted_and_capped() {
        let m = Monoid::load(MonoidKind::WEnd, 5, 1000).unwrap();
        assert_eq!(m.len(), 265);
        assert!(m.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(m.contains(&CycleContext::new(5).unwrap().rotation()));
        assert_eq!(Monoid::load(MonoidKind::WEnd, 6, 100).err(), Some(Error::ResourceCap { cap: 100 }));
    }

    #[test]
    fn closure_cap_is_an_error() {
        let c = CycleContext::new(6).unwrap();
        assert_eq!(closure(&[c.rotation(), c.reflection()], 5), Err(Error::ResourceCap { cap: 5 }));
    }

    #[test]
    fn closure_without_identity() {
        let c = CycleContext::new(4).unwrap();
        let k = c.constant(2).unwrap();
        assert_eq!(closure(std::slice::from_ref(&k), 10).unwrap(), vec![k]);
    }

    #[test]
    fn generic_closure_agrees_with_packed() {
        let c = CycleContext::new(6).unwrap();
        let gens = vec![c.rotation(), c.transformation(&[1, 2, 1, 2, 1, 2]).unwrap()];
        let mut a = packed_closure(&gens, 1000).unwrap();
        let mut b = generic_closure(&gens, 1000).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn closure_is_idempotent(raw in proptest::collection::vec(proptest::collection::vec(1usize..=5, 5), 1..4)) {
            let gens: Vec<Transformation> =
                raw.iter().map(|v| Transformation::from_images(v).unwrap()).collect();
            let once = closure(&gens, DEFAULT_ELEMENT_CAP).unwrap();
            let twice = closure(&once, DEFAULT_ELEMENT_CAP).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
