use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{Arc, KernelPartition, MAX_N};
use crate::error::{Error, Result};

/// A full transformation of `{1, ..., n}`.
///
/// Stored 0-based; every accessor speaks 1-based vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Box<[u8]>,
}

impl Transformation {
    /// Builds a map from its 1-based image list; position `i - 1` holds `i`'s image.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if !(3..=MAX_N).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        let raw = images
            .iter()
            .map(|&v| if v == 0 || v > n { Err(Error::VertexOutOfRange { vertex: v, n }) } else { Ok((v - 1) as u8) })
            .collect::<Result<Box<[u8]>>>()?;
        Ok(Self { images: raw })
    }

    pub(crate) fn from_raw(images: Box<[u8]>) -> Self {
        debug_assert!(images.iter().all(|&v| (v as usize) < images.len()));
        Self { images }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    #[inline]
    pub fn raw(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 1-based vertex `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// The 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.n() != other.n() {
            return Err(Error::ContextMismatch { expected: self.n(), found: other.n() });
        }
        Ok(self.then(other))
    }

    /// Unchecked right-action product `self * other`.
    ///
    /// # Panics
    /// If the two maps act on different vertex counts.
    #[inline]
    pub fn then(&self, other: &Transformation) -> Transformation {
        assert_eq!(self.n(), other.n(), "composing maps of different degree");
        Transformation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `mask[v]` is set iff the 0-based vertex `v` is in the image.
    pub fn image_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &v in self.images.iter() {
            mask[v as usize] = true;
        }
        mask
    }

    pub fn rank(&self) -> usize {
        self.image_mask().into_iter().filter(|&b| b).count()
    }

    pub fn is_bijective(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn is_constant(&self) -> bool {
        self.images.iter().all(|&v| v == self.images[0])
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&v| self.images[v as usize] == v)
    }

    pub fn kernel(&self) -> KernelPartition {
        KernelPartition::of(self)
    }

    /// Image of the interval `[i, j]`, `1 <= i <= j <= n`, as an arc.
    ///
    /// Fails when the image is not an arc, which cannot happen for weak
    /// endomorphisms.
    pub fn interval_image(&self, i: usize, j: usize) -> Result<Arc> {
        let n = self.n();
        if i == 0 || j > n || i > j {
            return Err(Error::VertexOutOfRange { vertex: if i == 0 { i } else { j }, n });
        }
        let mut mask = vec![false; n];
        for &v in &self.images[i - 1..j] {
            mask[v as usize] = true;
        }
        Arc::from_mask(&mask)
            .ok_or_else(|| Error::InvariantViolation(format!("image of [{i},{j}] under {self} is not an arc")))
    }

    /// The image of the whole vertex set as an arc, if it is one.
    pub fn image_arc(&self) -> Option<Arc> {
        Arc::from_mask(&self.image_mask())
    }

    /// Restriction equality on a vertex subset (1-based vertices).
    pub fn agrees_on(&self, other: &Transformation, vertices: impl IntoIterator<Item = usize>) -> bool {
        vertices.into_iter().all(|v| self.apply(v) == other.apply(v))
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, &v) in self.images.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transformation[{self}]")
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<usize>().map_err(|_| Error::Parse(format!("not a vertex: {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::CycleContext;

    fn t(images: &[usize]) -> Transformation {
        Transformation::from_images(images).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let c = CycleContext::new(5).unwrap();
        let a = t(&[2, 2, 3, 3, 4]);
        assert_eq!(c.identity().then(&a), a);
        assert_eq!(a.then(&c.identity()), a);
    }

    #[test]
    fn rotation_squared() {
        let c = CycleContext::new(5).unwrap();
        let g = c.rotation();
        assert_eq!(g.then(&g).images(), vec![3, 4, 5, 1, 2]);
    }

    #[test]
    fn right_action_convention() {
        let a = t(&[2, 2, 3, 3, 4]);
        let b = t(&[1, 2, 1, 2, 1]);
        assert_eq!(a.compose(&b).unwrap().images(), vec![2, 2, 1, 1, 2]);
    }

    #[test]
    fn compose_rejects_mismatched_degree() {
        let a = t(&[1, 2, 3]);
        let b = t(&[1, 2, 3, 4]);
        assert_eq!(a.compose(&b), Err(Error::ContextMismatch { expected: 3, found: 4 }));
    }

    #[test]
    fn image_and_rank() {
        let c = CycleContext::new(7).unwrap();
        assert_eq!(c.identity().rank(), 7);
        assert_eq!(c.constant(3).unwrap().rank(), 1);
        let alpha = t(&[3, 4, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2]);
        assert_eq!(alpha.image(), [1, 2, 3, 4].into_iter().collect());
        assert_eq!(alpha.rank(), 4);
    }

    #[test]
    fn parse_and_display() {
        let g: Transformation = "2 3 4 5 1".parse().unwrap();
        assert_eq!(g.to_string(), "2 3 4 5 1");
        assert!("1 2".parse::<Transformation>().is_err());
        assert!("1 2 7".parse::<Transformation>().is_err());
        assert!("1 x 3".parse::<Transformation>().is_err());
        assert_eq!("1,2,3".parse::<Transformation>().unwrap(), t(&[1, 2, 3]));
    }

    #[test]
    fn interval_images() {
        let c = CycleContext::new(5).unwrap();
        assert_eq!(c.identity().interval_image(2, 4).unwrap(), Arc::Interval { lo: 2, hi: 4 });
        assert_eq!(c.rotation().interval_image(4, 5).unwrap(), Arc::Wrap { start: 5, end: 1 });
        let alpha = t(&[3, 4, 3, 2, 3, 2, 3, 2, 1, 2, 3, 2]);
        assert_eq!(alpha.interval_image(1, 12).unwrap(), Arc::Interval { lo: 1, hi: 4 });
        // {1, 3} is not an arc of C_5.
        let bad = t(&[1, 3, 3, 3, 3]);
        assert!(matches!(bad.interval_image(1, 2), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn idempotent_and_constant() {
        let c = CycleContext::new(4).unwrap();
        assert!(c.identity().is_idempotent());
        assert!(c.constant(2).unwrap().is_idempotent());
        assert!(c.constant(2).unwrap().is_constant());
        assert!(!c.rotation().is_idempotent());
    }
}
