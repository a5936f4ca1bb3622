use std::fmt;

use super::Transformation;
use crate::error::{Error, Result};

/// The kernel `{(i, j) : iα = jα}` of a transformation, stored canonically.
///
/// `labels[i]` is the smallest vertex with the same image as `i`, so two maps
/// have equal `KernelPartition`s exactly when they identify the same pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelPartition {
    labels: Box<[u8]>,
}

impl KernelPartition {
    pub fn of(t: &Transformation) -> Self {
        Self::from_assignment(t.raw())
    }

    /// Canonicalizes an arbitrary block assignment (any value type with equality).
    pub fn from_assignment<T: PartialEq>(blocks: &[T]) -> Self {
        let n = blocks.len();
        let mut labels = vec![0u8; n];
        for i in 0..n {
            labels[i] = i as u8;
            if let Some(j) = (0..i).find(|&j| blocks[j] == blocks[i]) {
                labels[i] = labels[j];
            }
        }
        Self { labels: labels.into_boxed_slice() }
    }

    /// Accepts 1-based first-occurrence labels, validating canonical form.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        for (i, &l) in labels.iter().enumerate() {
            if l == 0 || l > i + 1 || labels[l - 1] != l {
                return Err(Error::Parse(format!("non-canonical kernel labels {labels:?}")));
            }
        }
        Ok(Self { labels: labels.iter().map(|&l| (l - 1) as u8).collect() })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// 1-based canonical labels.
    pub fn labels(&self) -> Vec<usize> {
        self.labels.iter().map(|&l| l as usize + 1).collect()
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().enumerate().filter(|&(i, &l)| i == l as usize).count()
    }

    /// Blocks as sorted 1-based vertex lists, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n()];
        for (i, &l) in self.labels.iter().enumerate() {
            let l = l as usize;
            if slot[l] == usize::MAX {
                slot[l] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[l]].push(i + 1);
        }
        classes
    }

    /// Are the 1-based vertices `i` and `j` in one block?
    pub fn identifies(&self, i: usize, j: usize) -> bool {
        self.labels[i - 1] == self.labels[j - 1]
    }

    /// `self ⊆ coarse` as relations: every identified pair of `self` is
    /// identified by `coarse`.
    #[inline]
    pub fn is_contained_in(&self, coarse: &KernelPartition) -> bool {
        debug_assert_eq!(self.n(), coarse.n());
        self.labels.iter().zip(coarse.labels.iter()).all(|(&l, &c)| coarse.labels[l as usize] == c)
    }
}

/// Is `fine ⊆ coarse` as sets of identified pairs?
pub fn kernel_contains(fine: &KernelPartition, coarse: &KernelPartition) -> bool {
    fine.is_contained_in(coarse)
}

impl fmt::Debug for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KernelPartition{:?}", self.classes())
    }
}
