use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{algebraic_mutation, binomial_factor, LaurentPoly};
use crate::point::LatticePoint;
use crate::polygon::convex_hull;

/// A search node: polynomial, parent and step taken from it, depth.
type Node = (LaurentPoly, Option<(usize, LaurentStep)>, usize);

/// One algebraic mutation `x^m ↦ x^m (1 + x^w)^{k⟨m,v⟩}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaurentStep {
    pub v: LatticePoint,
    pub w: LatticePoint,
    pub k: u32,
}

impl LaurentStep {
    pub fn apply(&self, f: &LaurentPoly) -> Option<LaurentPoly> {
        algebraic_mutation(f, self.v, &binomial_factor(self.w, self.k)).ok()
    }
}

impl fmt::Display for LaurentStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} F=(1+x^{})^{}", self.v, self.w, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceBounds {
    pub max_depth: usize,
    pub max_nodes: usize,
}

impl Default for EquivalenceBounds {
    fn default() -> Self {
        EquivalenceBounds { max_depth: 3, max_nodes: 2000 }
    }
}

/// Candidate steps for `f`: for every edge of the hull of the support that
/// lies at negative height, factors `(1 + x^{±w})^k` along it with `k` up to
/// the number of height-sized pieces that fit in the edge.
fn candidate_steps(f: &LaurentPoly) -> Vec<LaurentStep> {
    let hull = convex_hull(&f.support());
    let n = hull.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for i in 0..n {
        let d = hull[(i + 1) % n] - hull[i];
        let v = d.primitive().perp();
        let height = -v.dot(hull[i]);
        if height <= 0 {
            continue;
        }
        let max_k = d.content() / height;
        for w in [v.perp(), -v.perp()] {
            for k in 1..=max_k {
                out.push(LaurentStep { v, w, k: k as u32 });
            }
        }
    }
    out
}

/// Breadth-first search for a chain of algebraic mutations carrying `f` to `g`
/// up to a monomial change of basis. `None` means no chain within the bounds.
pub fn mutation_equivalent_laurent(
    f: &LaurentPoly,
    g: &LaurentPoly,
    bounds: EquivalenceBounds,
) -> Option<Vec<LaurentStep>> {
    if let (Ok(pf), Ok(pg)) = (f.newton_polygon(), g.newton_polygon()) {
        if !pf.singularity_content().same_as(&pg.singularity_content()) {
            return None;
        }
    }
    let goal = g.canonical_form()?;
    let mut nodes: Vec<Node> = vec![(f.clone(), None, 0)];
    let mut seen = BTreeSet::new();
    seen.insert(f.canonical_form()?);
    let mut found = (f.canonical_form()? == goal).then_some(0);
    let mut head = 0;
    while found.is_none() && head < nodes.len() {
        let i = head;
        head += 1;
        if nodes[i].2 >= bounds.max_depth {
            continue;
        }
        for step in candidate_steps(&nodes[i].0) {
            let Some(image) = step.apply(&nodes[i].0) else { continue };
            let Some(canon) = image.canonical_form() else { continue };
            if !seen.insert(canon.clone()) || nodes.len() >= bounds.max_nodes {
                continue;
            }
            let depth = nodes[i].2 + 1;
            nodes.push((image, Some((i, step)), depth));
            if canon == goal {
                found = Some(nodes.len() - 1);
                break;
            }
        }
    }
    let mut j = found?;
    let mut chain = Vec::new();
    while let Some((i, step)) = nodes[j].1 {
        chain.push(step);
        j = i;
    }
    chain.reverse();
    Some(chain)
}
