use std::fmt;

/// A set of cyclically consecutive vertices of `C_n`.
///
/// `Interval { lo, hi }` is `{lo, ..., hi}`; `Wrap { start, end }` is
/// `[start, n] ∪ [1, end]` with `end < start - 1`. The whole vertex set is
/// always `Interval { lo: 1, hi: n }`, and any set that fits in one interval
/// uses the interval form, so each subset has a single representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    Interval { lo: usize, hi: usize },
    Wrap { start: usize, end: usize },
}

impl Arc {
    /// Recognizes an arc from a 0-based membership mask of length `n`.
    pub fn from_mask(mask: &[bool]) -> Option<Arc> {
        let n = mask.len();
        let size = mask.iter().filter(|&&b| b).count();
        if size == 0 {
            return None;
        }
        if size == n {
            return Some(Arc::Interval { lo: 1, hi: n });
        }
        // An arc has exactly one member whose predecessor is missing.
        let mut first = None;
        for v in 0..n {
            if mask[v] && !mask[(v + n - 1) % n] {
                if first.is_some() {
                    return None;
                }
                first = Some(v);
            }
        }
        let first = first? + 1;
        let last = first + size - 1;
        Some(if last <= n { Arc::Interval { lo: first, hi: last } } else { Arc::Wrap { start: first, end: last - n } })
    }

    /// Arc of `len` vertices starting at `first` and moving forward (1-based).
    pub fn starting_at(first: usize, len: usize, n: usize) -> Arc {
        let mut mask = vec![false; n];
        for t in 0..len {
            mask[(first - 1 + t) % n] = true;
        }
        Arc::from_mask(&mask).expect("consecutive vertices form an arc")
    }

    /// Every arc of `C_n`, ordered by first vertex and then by length.
    pub fn all(n: usize) -> Vec<Arc> {
        let mut arcs = Vec::with_capacity(n * n);
        for first in 1..=n {
            for len in 1..n {
                arcs.push(Arc::starting_at(first, len, n));
            }
        }
        arcs.push(Arc::Interval { lo: 1, hi: n });
        arcs
    }

    pub fn len(&self, n: usize) -> usize {
        match *self {
            Arc::Interval { lo, hi } => hi - lo + 1,
            Arc::Wrap { start, end } => n - start + 1 + end,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        match *self {
            Arc::Interval { lo, hi } => lo <= v && v <= hi,
            Arc::Wrap { start, end } => v >= start || v <= end,
        }
    }

    /// First vertex in cyclic (increasing) order.
    pub fn first(&self) -> usize {
        match *self {
            Arc::Interval { lo, .. } => lo,
            Arc::Wrap { start, .. } => start,
        }
    }

    pub fn last(&self) -> usize {
        match *self {
            Arc::Interval { hi, .. } => hi,
            Arc::Wrap { end, .. } => end,
        }
    }

    /// Members in cyclic order from [`Arc::first`].
    pub fn vertices(&self, n: usize) -> Vec<usize> {
        let first = self.first();
        (0..self.len(n)).map(|t| (first - 1 + t) % n + 1).collect()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.vertices(n) {
            mask[v - 1] = true;
        }
        mask
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
            Arc::Wrap { start, end } => write!(f, "[{start},n]u[1,{end}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(n: usize, members: &[usize]) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in members {
            m[v - 1] = true;
        }
        m
    }

    #[test]
    fn recognizes_intervals_and_wraps() {
        assert_eq!(Arc::from_mask(&mask(5, &[2, 3, 4])), Some(Arc::Interval { lo: 2, hi: 4 }));
        assert_eq!(Arc::from_mask(&mask(5, &[5, 1])), Some(Arc::Wrap { start: 5, end: 1 }));
        assert_eq!(Arc::from_mask(&mask(5, &[5])), Some(Arc::Interval { lo: 5, hi: 5 }));
        assert_eq!(Arc::from_mask(&mask(5, &[1, 2, 3, 4, 5])), Some(Arc::Interval { lo: 1, hi: 5 }));
        assert_eq!(Arc::from_mask(&mask(5, &[1, 3])), None);
        assert_eq!(Arc::from_mask(&mask(5, &[])), None);
        assert_eq!(Arc::from_mask(&mask(12, &[9, 10, 11, 12, 1, 2])), Some(Arc::Wrap { start: 9, end: 2 }));
    }

    #[test]
    fn all_arcs_are_distinct_and_counted() {
        for n in 3..=9 {
            let arcs = Arc::all(n);
            // n starting points times n - 1 proper lengths, plus the full set.
            assert_eq!(arcs.len(), n * (n - 1) + 1);
            let mut sorted = arcs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), arcs.len());
            for arc in arcs {
                if let Arc::Wrap { start, end } = arc {
                    assert!(1 <= end && end + 1 < start && start <= n);
                }
                assert_eq!(Arc::from_mask(&arc.mask(n)), Some(arc));
            }
        }
    }

    #[test]
    fn vertices_in_cyclic_order() {
        let arc = Arc::Wrap { start: 9, end: 2 };
        assert_eq!(arc.vertices(12), vec![9, 10, 11, 12, 1, 2]);
        assert_eq!(arc.len(12), 6);
        assert!(arc.contains(12) && arc.contains(1) && !arc.contains(5));
    }
}
