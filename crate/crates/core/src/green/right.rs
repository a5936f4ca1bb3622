use std::collections::BTreeMap;

use crate::cycle::{KernelPartition, Transformation};
use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};

/// `a R b` in `End(C_n)` or `wEnd(C_n)`: the kernels coincide.
pub fn r_related(a: &Transformation, b: &Transformation) -> bool {
    a.n() == b.n() && a.kernel() == b.kernel()
}

/// A dihedral `σ` with `a = bσ`, first in `(reflected, shift)` order.
pub fn factor(a: &Transformation, b: &Transformation) -> Result<DihedralElement> {
    if a.n() != b.n() {
        return Err(Error::ContextMismatch { expected: a.n(), found: b.n() });
    }
    if a.kernel() != b.kernel() {
        return Err(Error::KernelMismatch);
    }
    DihedralElement::all(a.n())
        .into_iter()
        .find(|s| &b.then(&s.to_transformation()) == a)
        .ok_or_else(|| Error::InvariantViolation(format!("{a} and {b} share a kernel but no dihedral factor")))
}

/// Groups maps by kernel. Classes are ordered by kernel, members keep input order.
pub fn r_classes(elements: &[Transformation]) -> Vec<Vec<Transformation>> {
    let mut groups: BTreeMap<KernelPartition, Vec<Transformation>> = BTreeMap::new();
    for t in elements {
        groups.entry(t.kernel()).or_default().push(t.clone());
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::CycleContext;

    fn t(images: &[usize]) -> Transformation {
        Transformation::from_images(images).unwrap()
    }

    #[test]
    fn right_translates_are_related() {
        let a = t(&[1, 2, 2, 3, 2, 2]);
        for s in DihedralElement::all(6) {
            let b = a.then(&s.to_transformation());
            assert!(r_related(&a, &b));
            let f = factor(&b, &a).unwrap();
            assert_eq!(a.then(&f.to_transformation()), b);
        }
    }

    #[test]
    fn displayed_pair_has_different_kernels() {
        let alpha = t(&[3, 4, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2]);
        let beta = t(&[3, 2, 1, 2, 1, 2, 3, 2, 3, 4, 3, 2]);
        assert!(!r_related(&alpha, &beta));
        assert_eq!(factor(&alpha, &beta), Err(Error::KernelMismatch));
    }

    #[test]
    fn classes_partition_input() {
        let c = CycleContext::new(4).unwrap();
        let maps = vec![c.identity(), c.rotation(), c.constant(1).unwrap(), c.constant(3).unwrap()];
        let classes = r_classes(&maps);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 4);
    }
}
