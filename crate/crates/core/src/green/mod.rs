//! Regularity and Green's relations `R`, `L`, `D` in `End(C_n)` and `wEnd(C_n)`.
//!
//! Each fast test has a brute-force counterpart over an enumerated [`Monoid`].

mod left;
mod regular;
mod right;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use left::{d_related, l_oracle, l_related, l_witness, left_factor, LRelation, LWitness};
pub use regular::{full_sublist_witness, is_regular, regular_inverse, regular_oracle, FullSublistWitness};
pub use right::{factor, r_classes, r_related};

use crate::cycle::{KernelPartition, MonoidKind};
use crate::enumerate::Monoid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    R,
    L,
    D,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::R => "r",
            Relation::L => "l",
            Relation::D => "d",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(Relation::R),
            "l" => Ok(Relation::L),
            "d" => Ok(Relation::D),
            other => Err(Error::Parse(format!("unknown relation {other:?}"))),
        }
    }
}

/// Class counts and the histogram of class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub relation: Relation,
    pub classes: usize,
    /// class size -> number of classes of that size
    pub sizes: BTreeMap<usize, usize>,
}

impl ClassSummary {
    pub fn of(relation: Relation, classes: &[Vec<usize>]) -> Self {
        let mut sizes = BTreeMap::new();
        for c in classes {
            *sizes.entry(c.len()).or_insert(0) += 1;
        }
        Self { relation, classes: classes.len(), sizes }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(mut self) -> Vec<Vec<usize>> {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.parent.len() {
            let r = self.find(x);
            groups.entry(r).or_default().push(x);
        }
        groups.into_values().collect()
    }
}

fn group_indices<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<Vec<usize>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.enumerate() {
        let s = *slot.entry(k).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[s].push(i);
    }
    groups
}

fn r_partition(monoid: &Monoid) -> Vec<Vec<usize>> {
    group_indices(monoid.elements().iter().map(KernelPartition::of))
}

fn l_partition(monoid: &Monoid) -> Result<Vec<Vec<usize>>> {
    let kind = monoid.kind();
    let elements = monoid.elements();
    let by_image = group_indices(elements.iter().map(|t| t.image_mask()));
    let split: Vec<Vec<Vec<usize>>> = by_image
        .into_par_iter()
        .map(|group| {
            let mut classes: Vec<Vec<usize>> = Vec::new();
            'member: for i in group {
                for class in classes.iter_mut() {
                    let rep = &elements[class[0]];
                    let t = &elements[i];
                    if left_factor(t, rep, kind)?.is_some() && left_factor(rep, t, kind)?.is_some() {
                        class.push(i);
                        continue 'member;
                    }
                }
                classes.push(vec![i]);
            }
            Ok(classes)
        })
        .collect::<Result<_>>()?;
    Ok(split.into_iter().flatten().collect())
}

/// Partition of an enumerated `End` or `wEnd` into classes of `relation`.
///
/// Classes hold indices into [`Monoid::elements`], sorted, and are ordered
/// by their smallest index.
pub fn classes(monoid: &Monoid, relation: Relation) -> Result<Vec<Vec<usize>>> {
    let kind = monoid.kind();
    if !matches!(kind, MonoidKind::End | MonoidKind::WEnd) {
        return Err(Error::UnsupportedKind(kind));
    }
    let mut out = match relation {
        Relation::R => r_partition(monoid),
        Relation::L => l_partition(monoid)?,
        Relation::D => {
            let mut sets = DisjointSets::new(monoid.len());
            for class in r_partition(monoid).into_iter().chain(l_partition(monoid)?) {
                for &x in &class[1..] {
                    sets.union(class[0], x);
                }
            }
            sets.classes()
        }
    };
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort_unstable_by_key(|c| c[0]);
    Ok(out)
}
