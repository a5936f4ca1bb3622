//! The dihedral group `D_2n = <g, h>` in the normal form `g^k` / `hg^k`.
//!
//! With `g: i -> i + 1` and `h: i -> n - i + 1`, the element `hg^k` sends
//! `i` to `k - i + 1` (mod `n`). Products follow the right action and the
//! relation `gh = hg^(n-1)`.

use std::fmt;

use crate::cycle::{Transformation, MAX_N};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    n: u8,
    reflected: bool,
    shift: u8,
}

impl DihedralElement {
    /// `g^shift`, or `hg^shift` when `reflected`; `shift` is reduced mod `n`.
    pub fn new(n: usize, reflected: bool, shift: usize) -> Self {
        assert!((3..=MAX_N).contains(&n), "dihedral group needs 3 <= n <= {MAX_N}");
        Self { n: n as u8, reflected, shift: (shift % n) as u8 }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, false, 0)
    }

    /// `g`.
    pub fn rotation(n: usize) -> Self {
        Self::new(n, false, 1)
    }

    /// `h`.
    pub fn reflection(n: usize) -> Self {
        Self::new(n, true, 0)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn is_reflected(&self) -> bool {
        self.reflected
    }

    pub fn shift(&self) -> usize {
        self.shift as usize
    }

    pub fn is_identity(&self) -> bool {
        !self.reflected && self.shift == 0
    }

    /// Image of the 0-based vertex `x`.
    #[inline]
    pub(crate) fn apply_raw(&self, x: usize) -> usize {
        let n = self.n();
        let k = self.shift();
        if self.reflected {
            // 1-based i -> k - i + 1 is 0-based x -> k - 1 - x.
            (k + 2 * n - 1 - x) % n
        } else {
            (x + k) % n
        }
    }

    /// Image of the 1-based vertex `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.apply_raw(i - 1) + 1
    }

    /// Right-action product: `self` first, then `other`.
    pub fn then(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.n, other.n, "dihedral groups of different degree");
        let n = self.n();
        let (a, b) = (self.shift(), other.shift());
        let (reflected, shift) = match (self.reflected, other.reflected) {
            (false, false) => (false, a + b),
            (false, true) => (true, b + n - a),
            (true, false) => (true, a + b),
            (true, true) => (false, b + n - a),
        };
        Self::new(n, reflected, shift)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            Self::new(self.n(), false, self.n() - self.shift())
        }
    }

    pub fn to_transformation(&self) -> Transformation {
        Transformation::from_raw((0..self.n()).map(|x| self.apply_raw(x) as u8).collect())
    }

    /// Reads `1α` and `2α` to pick the candidate, then checks every point.
    pub fn recognize(t: &Transformation) -> Option<DihedralElement> {
        let n = t.n();
        let images = t.raw();
        let (first, second) = (images[0] as usize, images[1] as usize);
        let candidate = if second == (first + 1) % n {
            Self::new(n, false, first)
        } else if first == (second + 1) % n {
            Self::new(n, true, first + 1)
        } else {
            return None;
        };
        (0..n).all(|x| candidate.apply_raw(x) == images[x] as usize).then_some(candidate)
    }

    /// All `2n` elements: `1, g, ..., g^(n-1), h, hg, ..., hg^(n-1)`.
    pub fn all(n: usize) -> Vec<DihedralElement> {
        [false, true].into_iter().flat_map(|reflected| (0..n).map(move |k| Self::new(n, reflected, k))).collect()
    }

    /// Parses `g^k`, `g`, `h`, `h*g^k`, `hg^k` or `1` for the group of degree `n`.
    pub fn parse(s: &str, n: usize) -> Result<DihedralElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a dihedral element: {s:?}"));
        if !(3..=MAX_N).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        if compact == "1" || compact == "id" {
            return Ok(Self::identity(n));
        }
        let (reflected, rest) = if let Some(rest) = compact.strip_prefix("h*") {
            (true, rest)
        } else if let Some(rest) = compact.strip_prefix('h') {
            (true, rest)
        } else {
            (false, compact.as_str())
        };
        let shift = match rest {
            "" if reflected => 0,
            "g" => 1,
            _ => rest.strip_prefix("g^").and_then(|k| k.parse::<usize>().ok()).ok_or_else(bad)?,
        };
        Ok(Self::new(n, reflected, shift))
    }
}

/// The automorphism group of `C_n` as transformations.
pub fn enumerate_dihedral(n: usize) -> Vec<DihedralElement> {
    DihedralElement::all(n)
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "h*g^{}", self.shift)
        } else {
            write!(f, "g^{}", self.shift)
        }
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{is_member, CycleContext, MonoidKind};

    fn g(n: usize, k: usize) -> DihedralElement {
        DihedralElement::new(n, false, k)
    }

    fn hg(n: usize, k: usize) -> DihedralElement {
        DihedralElement::new(n, true, k)
    }

    #[test]
    fn closed_formulas_for_powers() {
        for n in 3..=12 {
            for k in 0..n {
                let rot = g(n, k).to_transformation();
                let refl = hg(n, k).to_transformation();
                for i in 1..=n {
                    let expected_rot = if i <= n - k { i + k } else { i + k - n };
                    let expected_refl = if i <= k { k - i + 1 } else { n + k - i + 1 };
                    assert_eq!(rot.apply(i), expected_rot, "g^{k}, n={n}, i={i}");
                    assert_eq!(refl.apply(i), expected_refl, "hg^{k}, n={n}, i={i}");
                }
            }
        }
    }

    #[test]
    fn presentation_relations() {
        let n = 9;
        assert_eq!(g(n, 1).then(&hg(n, 0)), hg(n, n - 1));
        assert_eq!(g(n, 4).then(&g(n, 7)), g(n, 2));
        assert!(hg(n, 0).then(&hg(n, 0)).is_identity());
        assert_eq!(hg(7, 2).then(&hg(7, 5)), g(7, 3));
    }

    #[test]
    fn product_matches_composition() {
        for n in 3..=10 {
            for x in DihedralElement::all(n) {
                for y in DihedralElement::all(n) {
                    assert_eq!(x.then(&y).to_transformation(), x.to_transformation().then(&y.to_transformation()));
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for n in 3..=8 {
            for x in DihedralElement::all(n) {
                assert!(x.then(&x.inverse()).is_identity());
                assert!(x.inverse().then(&x).is_identity());
            }
            assert_eq!(g(n, 2).inverse(), g(n, n - 2));
            assert_eq!(hg(n, 2).inverse(), hg(n, 2));
            assert!(DihedralElement::identity(n).inverse().is_identity());
        }
    }

    #[test]
    fn recognize_generators() {
        let c = CycleContext::new(6).unwrap();
        assert_eq!(DihedralElement::recognize(&c.rotation()), Some(g(6, 1)));
        assert_eq!(
            DihedralElement::recognize(&c.transformation(&[6, 5, 4, 3, 2, 1]).unwrap()),
            Some(DihedralElement::reflection(6))
        );
        assert_eq!(DihedralElement::recognize(&c.constant(2).unwrap()), None);
        assert_eq!(DihedralElement::recognize(&c.transformation(&[2, 3, 4, 5, 6, 6]).unwrap()), None);
        for x in DihedralElement::all(6) {
            assert_eq!(DihedralElement::recognize(&x.to_transformation()), Some(x));
        }
    }

    #[test]
    fn enumeration_is_the_automorphism_group() {
        for n in 3..=8 {
            let group = enumerate_dihedral(n);
            assert_eq!(group.len(), 2 * n);
            let mut maps: Vec<_> = group.iter().map(|x| x.to_transformation()).collect();
            maps.sort();
            maps.dedup();
            assert_eq!(maps.len(), 2 * n);
            assert!(maps.iter().all(|m| is_member(m, MonoidKind::Aut)));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(DihedralElement::parse("g^3", 7).unwrap(), g(7, 3));
        assert_eq!(DihedralElement::parse("h*g^2", 7).unwrap(), hg(7, 2));
        assert_eq!(DihedralElement::parse("hg^2", 7).unwrap(), hg(7, 2));
        assert_eq!(DihedralElement::parse("h", 7).unwrap(), hg(7, 0));
        assert_eq!(DihedralElement::parse("g", 7).unwrap(), g(7, 1));
        assert_eq!(DihedralElement::parse("1", 7).unwrap(), g(7, 0));
        assert_eq!(DihedralElement::parse("g^9", 7).unwrap(), g(7, 2));
        assert!(DihedralElement::parse("x", 7).is_err());
        assert!(DihedralElement::parse("g^", 7).is_err());
        for x in DihedralElement::all(7) {
            assert_eq!(DihedralElement::parse(&x.to_string(), 7).unwrap(), x);
        }
    }
}
