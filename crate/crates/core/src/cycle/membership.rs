use super::{MonoidKind, Transformation};

/// Cyclic distance test on 0-based vertices: `|x - y|` in `{1, n - 1}`.
#[inline]
pub(crate) fn adjacent(x: u8, y: u8, n: usize) -> bool {
    let d = x.abs_diff(y) as usize;
    d == 1 || d == n - 1
}

/// Every consecutive pair `(i, i + 1)`, including `(n, 1)`, lands on equal
/// vertices (if `allow_collapse`) or on an edge.
fn preserves_edges(images: &[u8], allow_collapse: bool) -> bool {
    let n = images.len();
    (0..n).all(|i| {
        let (x, y) = (images[i], images[(i + 1) % n]);
        (allow_collapse && x == y) || adjacent(x, y, n)
    })
}

/// Images that are adjacent only come from adjacent vertices.
fn reflects_edges(images: &[u8]) -> bool {
    let n = images.len();
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(images[i], images[j], n) && !adjacent(i as u8, j as u8, n) {
                return false;
            }
        }
    }
    true
}

/// Membership of `t` in the monoid `kind` of `C_{t.n()}`.
pub fn is_member(t: &Transformation, kind: MonoidKind) -> bool {
    let images = t.raw();
    match kind {
        MonoidKind::WEnd => preserves_edges(images, true),
        MonoidKind::End => preserves_edges(images, false),
        MonoidKind::SwEnd => preserves_edges(images, true) && reflects_edges(images),
        MonoidKind::SEnd => preserves_edges(images, false) && reflects_edges(images),
        MonoidKind::Aut => t.is_bijective() && preserves_edges(images, false),
    }
}
