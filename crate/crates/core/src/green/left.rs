use crate::cycle::{adjacent, is_member, Arc, MonoidKind, Transformation};
use crate::dihedral::DihedralElement;
use crate::enumerate::Monoid;
use crate::error::{Error, Result};

/// Certificate for `a L b`: `a = σ ε1 b` and `b = σ⁻¹ ε2 a` with idempotents
/// `ε1`, `ε2` whose images are `Iσ` and `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LWitness {
    pub arc: Arc,
    pub sigma: DihedralElement,
    pub eps1: Transformation,
    pub eps2: Transformation,
}

impl LWitness {
    /// Evaluates every defining equation directly.
    pub fn verify(&self, a: &Transformation, b: &Transformation, kind: MonoidKind) -> bool {
        let n = a.n();
        if b.n() != n || self.sigma.n() != n || self.eps1.n() != n || self.eps2.n() != n {
            return false;
        }
        let arc_vertices = self.arc.vertices(n);
        let arc_image: std::collections::BTreeSet<usize> = arc_vertices.iter().map(|&v| a.apply(v)).collect();
        let sigma = self.sigma.to_transformation();
        let sigma_inv = self.sigma.inverse().to_transformation();
        let sigma_b = sigma.then(b);
        let shifted: std::collections::BTreeSet<usize> = arc_vertices.iter().map(|&v| self.sigma.apply(v)).collect();
        let idempotents_ok = [&self.eps1, &self.eps2].iter().all(|e| e.is_idempotent() && is_member(e, kind));
        arc_image == a.image()
            && a.agrees_on(&sigma_b, arc_vertices.iter().copied())
            && self.eps1.image() == shifted
            && self.eps2.image() == arc_vertices.iter().copied().collect()
            && idempotents_ok
            && &sigma.then(&self.eps1).then(b) == a
            && &sigma_inv.then(&self.eps2).then(a) == b
    }
}

/// Outcome of [`l_related`]; the witness is present exactly when related.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRelation {
    pub related: bool,
    pub witness: Option<LWitness>,
}

/// Picks `f(x) ∈ domains[x]` (0-based vertices) so that cyclically
/// consecutive values are adjacent, or equal when `allow_equal`.
/// Prefers small values at the most constrained vertex.
pub(crate) fn solve_cyclic(domains: &[Vec<u8>], allow_equal: bool) -> Option<Vec<u8>> {
    let n = domains.len();
    if domains.iter().any(Vec::is_empty) {
        return None;
    }
    let ok = |x: u8, y: u8| (allow_equal && x == y) || adjacent(x, y, n);
    let anchor = (0..n).min_by_key(|&x| domains[x].len())?;
    'start: for &first in &domains[anchor] {
        let mut layers: Vec<Vec<(u8, usize)>> = vec![vec![(first, 0)]];
        for step in 1..n {
            let v = (anchor + step) % n;
            let prev = &layers[step - 1];
            let layer: Vec<(u8, usize)> =
                domains[v].iter().filter_map(|&y| prev.iter().position(|&(x, _)| ok(x, y)).map(|p| (y, p))).collect();
            if layer.is_empty() {
                continue 'start;
            }
            layers.push(layer);
        }
        let Some(mut idx) = layers[n - 1].iter().position(|&(y, _)| ok(y, first)) else {
            continue;
        };
        let mut values = vec![0u8; n];
        for step in (0..n).rev() {
            let (y, parent) = layers[step][idx];
            values[(anchor + step) % n] = y;
            idx = parent;
        }
        return Some(values);
    }
    None
}

fn check_pair(a: &Transformation, b: &Transformation, kind: MonoidKind) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::ContextMismatch { expected: a.n(), found: b.n() });
    }
    if !matches!(kind, MonoidKind::End | MonoidKind::WEnd) {
        return Err(Error::UnsupportedKind(kind));
    }
    if !is_member(a, kind) || !is_member(b, kind) {
        return Err(Error::NotMember(kind));
    }
    Ok(())
}

/// Some `γ` in the monoid with `a = γb`, if one exists.
///
/// Exact: `xγ` must lie in the fibre of `b` over `xa`, and the choices
/// along the cycle must respect adjacency, which is a path problem.
pub fn left_factor(a: &Transformation, b: &Transformation, kind: MonoidKind) -> Result<Option<Transformation>> {
    check_pair(a, b, kind)?;
    let n = a.n();
    let mut fibres: Vec<Vec<u8>> = vec![Vec::new(); n];
    for (y, &v) in b.raw().iter().enumerate() {
        fibres[v as usize].push(y as u8);
    }
    let domains: Vec<Vec<u8>> = a.raw().iter().map(|&v| fibres[v as usize].clone()).collect();
    Ok(solve_cyclic(&domains, kind == MonoidKind::WEnd).map(|raw| Transformation::from_raw(raw.into_boxed_slice())))
}

/// An idempotent `ε` of the monoid with image `target` (0-based mask) and
/// `(zε)p = zq` for all `z`.
fn idempotent_through(
    target: &[bool],
    p: &Transformation,
    q: &Transformation,
    kind: MonoidKind,
) -> Option<Transformation> {
    let n = target.len();
    let (p, q) = (p.raw(), q.raw());
    let domains: Vec<Vec<u8>> = (0..n)
        .map(|z| {
            if target[z] {
                if p[z] == q[z] {
                    vec![z as u8]
                } else {
                    Vec::new()
                }
            } else {
                (0..n).filter(|&w| target[w] && p[w] == q[z]).map(|w| w as u8).collect()
            }
        })
        .collect();
    solve_cyclic(&domains, kind == MonoidKind::WEnd).map(|raw| Transformation::from_raw(raw.into_boxed_slice()))
}

/// Searches arcs `I` (by first vertex, then length) and `σ` (by
/// `(reflected, shift)`) for a verified [`LWitness`].
pub fn l_witness(a: &Transformation, b: &Transformation, kind: MonoidKind) -> Result<Option<LWitness>> {
    check_pair(a, b, kind)?;
    let n = a.n();
    let image = a.image_mask();
    if image != b.image_mask() {
        return Ok(None);
    }
    for arc in Arc::all(n) {
        let vertices = arc.vertices(n);
        let mut covered = vec![false; n];
        for &v in &vertices {
            covered[a.raw()[v - 1] as usize] = true;
        }
        if covered != image {
            continue;
        }
        let arc_mask = arc.mask(n);
        for sigma in DihedralElement::all(n) {
            let st = sigma.to_transformation();
            let sigma_b = st.then(b);
            if !a.agrees_on(&sigma_b, vertices.iter().copied()) {
                continue;
            }
            // (zε2)a = (zσ)b
            let Some(eps2) = idempotent_through(&arc_mask, a, &sigma_b, kind) else {
                continue;
            };
            // (zε1)b = (zσ⁻¹)a
            let mut shifted = vec![false; n];
            for &v in &vertices {
                shifted[sigma.apply(v) - 1] = true;
            }
            let sigma_inv_a = sigma.inverse().to_transformation().then(a);
            let Some(eps1) = idempotent_through(&shifted, b, &sigma_inv_a, kind) else {
                continue;
            };
            let witness = LWitness { arc, sigma, eps1, eps2 };
            if witness.verify(a, b, kind) {
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

/// Decides `a L b` in `End(C_n)` or `wEnd(C_n)` and certifies a positive answer.
///
/// The decision comes from [`left_factor`] in both directions. When related,
/// the arc/idempotent certificate is searched as well; its absence for a
/// related pair is reported as an invariant violation.
pub fn l_related(a: &Transformation, b: &Transformation, kind: MonoidKind) -> Result<LRelation> {
    check_pair(a, b, kind)?;
    if a.image_mask() != b.image_mask() {
        return Ok(LRelation { related: false, witness: None });
    }
    let related = left_factor(a, b, kind)?.is_some() && left_factor(b, a, kind)?.is_some();
    if !related {
        return Ok(LRelation { related, witness: None });
    }
    match l_witness(a, b, kind)? {
        Some(w) => Ok(LRelation { related, witness: Some(w) }),
        None => Err(Error::InvariantViolation(format!("{a} L {b} but no arc certificate exists"))),
    }
}

/// Brute force: some `γ, λ` in the monoid give `a = γb` and `b = λa`.
pub fn l_oracle(a: &Transformation, b: &Transformation, monoid: &Monoid) -> bool {
    let m = monoid.elements();
    m.iter().any(|g| &g.then(b) == a) && m.iter().any(|l| &l.then(a) == b)
}

/// `a D b`: some right translate `aσ` is L-related to `b`.
pub fn d_related(a: &Transformation, b: &Transformation, kind: MonoidKind) -> Result<bool> {
    check_pair(a, b, kind)?;
    if a.rank() != b.rank() {
        return Ok(false);
    }
    for sigma in DihedralElement::all(a.n()) {
        let c = a.then(&sigma.to_transformation());
        if c.image_mask() == b.image_mask()
            && left_factor(&c, b, kind)?.is_some()
            && left_factor(b, &c, kind)?.is_some()
        {
            return Ok(true);
        }
    }
    Ok(false)
}
