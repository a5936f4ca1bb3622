//! The cycle graph `C_n` and full transformations of its vertex set.
//!
//! Vertices are `1..=n` at every public boundary. Maps act on the right:
//! `x(ab) = (xa)b`, so [`Transformation::then`] applies `self` first.

mod arc;
mod kernel;
mod membership;
mod transformation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use arc::Arc;
pub use kernel::{kernel_contains, KernelPartition};
pub(crate) use membership::adjacent;
pub use membership::is_member;
pub use transformation::Transformation;

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};

/// Largest supported vertex count; images are stored as bytes.
pub const MAX_N: usize = 255;

/// A fixed cycle graph `C_n` with `n >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleContext {
    n: usize,
}

impl CycleContext {
    pub fn new(n: usize) -> Result<Self> {
        if !(3..=MAX_N).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `{i, j}` is an edge of `C_n` iff `|i - j|` is `1` or `n - 1`.
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let d = i.abs_diff(j);
        d == 1 || d == self.n - 1
    }

    pub fn identity(&self) -> Transformation {
        Transformation::from_raw((0..self.n as u8).collect())
    }

    /// The constant map onto `vertex` (1-based).
    pub fn constant(&self, vertex: usize) -> Result<Transformation> {
        self.check_vertex(vertex)?;
        Ok(Transformation::from_raw(vec![(vertex - 1) as u8; self.n].into_boxed_slice()))
    }

    pub fn constants(&self) -> impl Iterator<Item = Transformation> + '_ {
        (1..=self.n).map(|v| self.constant(v).expect("vertex in range"))
    }

    /// The rotation `g: i -> i + 1`.
    pub fn rotation(&self) -> Transformation {
        DihedralElement::rotation(self.n).to_transformation()
    }

    /// The reflection `h: i -> n - i + 1`.
    pub fn reflection(&self) -> Transformation {
        DihedralElement::reflection(self.n).to_transformation()
    }

    pub fn transformation(&self, images: &[usize]) -> Result<Transformation> {
        let t = Transformation::from_images(images)?;
        self.check(&t)?;
        Ok(t)
    }

    /// Parses one line of the text format, e.g. `"2 3 4 5 1"`.
    pub fn parse(&self, line: &str) -> Result<Transformation> {
        let t: Transformation = line.parse()?;
        self.check(&t)?;
        Ok(t)
    }

    pub fn check(&self, t: &Transformation) -> Result<()> {
        if t.n() != self.n {
            return Err(Error::ContextMismatch { expected: self.n, found: t.n() });
        }
        Ok(())
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex == 0 || vertex > self.n {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }
}

/// The five endomorphism monoids of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonoidKind {
    Aut,
    SEnd,
    SwEnd,
    End,
    WEnd,
}

impl MonoidKind {
    pub const ALL: [MonoidKind; 5] =
        [MonoidKind::Aut, MonoidKind::SEnd, MonoidKind::End, MonoidKind::SwEnd, MonoidKind::WEnd];

    /// Lower-case identifier used on the command line and in JSON.
    pub fn as_str(&self) -> &'static str {
        match self {
            MonoidKind::Aut => "aut",
            MonoidKind::SEnd => "send",
            MonoidKind::SwEnd => "swend",
            MonoidKind::End => "end",
            MonoidKind::WEnd => "wend",
        }
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        is_member(t, *self)
    }

    /// Is `self` a submonoid of `other` for every `n`?
    pub fn is_contained_in(&self, other: MonoidKind) -> bool {
        use MonoidKind::*;
        matches!(
            (self, other),
            (Aut, _) | (SEnd, SEnd | SwEnd | End | WEnd) | (SwEnd, SwEnd | WEnd) | (End, End | WEnd) | (WEnd, WEnd)
        )
    }
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MonoidKind::Aut => "Aut",
            MonoidKind::SEnd => "sEnd",
            MonoidKind::SwEnd => "swEnd",
            MonoidKind::End => "End",
            MonoidKind::WEnd => "wEnd",
        };
        f.write_str(name)
    }
}

impl FromStr for MonoidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "aut" => Ok(MonoidKind::Aut),
            "send" => Ok(MonoidKind::SEnd),
            "swend" => Ok(MonoidKind::SwEnd),
            "end" => Ok(MonoidKind::End),
            "wend" => Ok(MonoidKind::WEnd),
            other => Err(Error::Parse(format!("unknown monoid kind {other:?}"))),
        }
    }
}

/// Rotates the image of a weak endomorphism onto `[1, rank]`.
///
/// Returns `(t g^s, g^s)`. The kernel is unchanged since `g^s` is a
/// permutation. Fails only when the image is not an arc.
pub fn normalize_image(t: &Transformation) -> Result<(Transformation, DihedralElement)> {
    let n = t.n();
    let arc = t.image_arc().ok_or_else(|| Error::InvariantViolation(format!("image of {t} is not an arc")))?;
    let shift = (n - arc.first() + 1) % n;
    let rotation = DihedralElement::new(n, false, shift);
    Ok((t.then(&rotation.to_transformation()), rotation))
}

/// Vertex arithmetic modulo `n` on 0-based residues.
#[inline]
pub(crate) fn add_mod(x: usize, d: isize, n: usize) -> usize {
    (x as isize + d).rem_euclid(n as isize) as usize
}
