use crate::cycle::{add_mod, is_member, Arc, MonoidKind, Transformation};
use crate::dihedral::DihedralElement;
use crate::enumerate::Monoid;
use crate::error::{Error, Result};

/// An arc of length `rank` starting at `start` on which the map walks the
/// cycle in one direction: `(start + t)α = startα + t·direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullSublistWitness {
    pub start: usize,
    pub direction: i8,
    pub rank: usize,
}

impl FullSublistWitness {
    pub fn arc(&self, n: usize) -> Arc {
        Arc::starting_at(self.start, self.rank, n)
    }

    /// Re-checks the defining equations against `a`.
    pub fn verify(&self, a: &Transformation) -> bool {
        let n = a.n();
        if self.start == 0 || self.start > n || self.rank != a.rank() || self.direction.abs() != 1 {
            return false;
        }
        let raw = a.raw();
        let base = raw[self.start - 1] as usize;
        let walks = (0..self.rank).all(|t| {
            let x = (self.start - 1 + t) % n;
            raw[x] as usize == add_mod(base, t as isize * self.direction as isize, n)
        });
        walks && {
            let mut covered = vec![false; n];
            for v in self.arc(n).vertices(n) {
                covered[raw[v - 1] as usize] = true;
            }
            covered == a.image_mask()
        }
    }

    /// A dihedral `β` with `aβa = a`.
    pub fn inverse(&self, a: &Transformation) -> DihedralElement {
        let n = a.n();
        let (i, ia) = (self.start, a.apply(self.start));
        if self.direction == 1 {
            DihedralElement::new(n, false, n + i - ia)
        } else {
            DihedralElement::new(n, true, i + ia - 1)
        }
    }
}

/// First full sublist of consecutive images: smallest start, then `+1`
/// before `-1`.
pub fn full_sublist_witness(a: &Transformation) -> Option<FullSublistWitness> {
    let n = a.n();
    let rank = a.rank();
    let raw = a.raw();
    for start in 1..=n {
        let base = raw[start - 1] as usize;
        for direction in [1i8, -1] {
            let walks = (1..rank)
                .all(|t| raw[(start - 1 + t) % n] as usize == add_mod(base, t as isize * direction as isize, n));
            if walks {
                return Some(FullSublistWitness { start, direction, rank });
            }
        }
    }
    None
}

fn check_kind(a: &Transformation, kind: MonoidKind) -> Result<()> {
    if !matches!(kind, MonoidKind::End | MonoidKind::WEnd) {
        return Err(Error::UnsupportedKind(kind));
    }
    if !is_member(a, kind) {
        return Err(Error::NotMember(kind));
    }
    Ok(())
}

/// Regularity of `a` in `End(C_n)` or `wEnd(C_n)`.
pub fn is_regular(a: &Transformation, kind: MonoidKind) -> Result<bool> {
    check_kind(a, kind)?;
    Ok(full_sublist_witness(a).is_some())
}

/// A dihedral inverse `β` with `aβa = a`, when `a` is regular.
pub fn regular_inverse(a: &Transformation) -> Option<DihedralElement> {
    full_sublist_witness(a).map(|w| w.inverse(a))
}

/// Brute force: does some `β` in the monoid satisfy `aβa = a`?
pub fn regular_oracle(a: &Transformation, monoid: &Monoid) -> bool {
    monoid.elements().iter().any(|b| &a.then(b).then(a) == a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::CycleContext;

    fn t(images: &[usize]) -> Transformation {
        Transformation::from_images(images).unwrap()
    }

    #[test]
    fn rotation_has_trivial_witness() {
        let c = CycleContext::new(7).unwrap();
        let w = full_sublist_witness(&c.rotation()).unwrap();
        assert_eq!(w, FullSublistWitness { start: 1, direction: 1, rank: 7 });
        assert!(w.verify(&c.rotation()));
    }

    #[test]
    fn low_rank_maps_are_regular() {
        let c = CycleContext::new(6).unwrap();
        for k in c.constants() {
            assert!(is_regular(&k, MonoidKind::WEnd).unwrap());
        }
        assert!(is_regular(&t(&[1, 2, 1, 2, 1, 2]), MonoidKind::End).unwrap());
    }

    #[test]
    fn displayed_non_regular_maps() {
        let a = t(&[1, 2, 3, 2, 3, 4, 3, 2, 3, 2]);
        assert!(full_sublist_witness(&a).is_none());
        assert_eq!(is_regular(&a, MonoidKind::End), Ok(false));
        let b = t(&[1, 2, 2, 3, 2, 2]);
        assert_eq!(is_regular(&b, MonoidKind::WEnd), Ok(false));
        assert_eq!(is_regular(&b, MonoidKind::End), Err(Error::NotMember(MonoidKind::End)));
        assert_eq!(is_regular(&b, MonoidKind::SwEnd), Err(Error::UnsupportedKind(MonoidKind::SwEnd)));
    }

    #[test]
    fn dihedral_inverse_works() {
        let a = t(&[2, 3, 4, 5, 4, 3, 2, 1]);
        let w = full_sublist_witness(&a).unwrap();
        assert!(w.verify(&a));
        let beta = w.inverse(&a).to_transformation();
        assert_eq!(a.then(&beta).then(&a), a);
        let down = t(&[4, 3, 2, 1, 2, 3]);
        let w = full_sublist_witness(&down).unwrap();
        assert_eq!(w.direction, -1);
        let beta = w.inverse(&down).to_transformation();
        assert_eq!(down.then(&beta).then(&down), down);
    }

    #[test]
    fn witness_verification_rejects_tampering() {
        let a = t(&[1, 2, 3, 4, 3, 2]);
        let w = full_sublist_witness(&a).unwrap();
        assert!(w.verify(&a));
        assert!(!FullSublistWitness { direction: -1, ..w }.verify(&a));
        assert!(!FullSublistWitness { rank: 3, ..w }.verify(&a));
    }
}
