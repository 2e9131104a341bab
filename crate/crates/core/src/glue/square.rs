//! Square faces of ladder-glued webs and their resolution.
//!
//! In a ladder-glued web a square face is bounded by two rungs joined by two
//! oppositely oriented strands that run side by side between them: adjacent
//! on every boundary edge in between, and adjacent opposite-letter corner
//! arcs at the same corner of every triangle in between. Resolving the square
//! swaps each of those arc pairs, which removes both rungs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::ladder::{Crossing, CrossingKey, LadderGluing};
use super::GlobalWeb;
use crate::error::{Error, Result};
use crate::localweb::StrandEnd;

/// A corner transposition `(triangle, corner, position)`: swap letters
/// `position` and `position + 1` of that corner word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    pub tri: usize,
    pub corner: usize,
    pub position: usize,
}

/// Two rungs bounding a square face, plus the arc swaps that resolve it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareFace {
    pub first: Crossing,
    pub second: Crossing,
    /// Sorted; one per intermediate triangle visit.
    pub transpositions: Vec<Transposition>,
}

impl SquareFace {
    fn sort_key(&self) -> (CrossingKey, CrossingKey, &[Transposition]) {
        (self.first.key(), self.second.key(), &self.transpositions)
    }
}

/// All square faces, in deterministic order (first crossing's edge, then
/// positions).
pub fn find_square_faces(web: &GlobalWeb<'_>) -> Result<Vec<SquareFace>> {
    let gluing = LadderGluing::new(web)?;
    Ok(squares_of(web, &gluing))
}

pub(crate) fn squares_of(web: &GlobalWeb<'_>, gluing: &LadderGluing) -> Vec<SquareFace> {
    let mut found = BTreeSet::new();
    for c in gluing.crossings() {
        for side in 0..2 {
            if let Some(sq) = walk(web, gluing, c, side) {
                found.insert(sq);
            }
        }
    }
    let mut out: Vec<SquareFace> = found.into_iter().collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Follows the two strands of `start` out of its biangle through `side`,
/// checking they stay side by side until they cross again.
fn walk(web: &GlobalWeb<'_>, gluing: &LadderGluing, start: &Crossing, side: usize) -> Option<SquareFace> {
    let passes = gluing.passes();
    // `lead` travels towards `side`, `trail` arrives from it.
    let (mut lead, mut trail) = if side == 1 {
        (start.forward.pass, start.backward.pass)
    } else {
        (start.backward.pass, start.forward.pass)
    };
    let mut transpositions = Vec::new();
    let mut used_arcs = BTreeSet::new();
    for _ in 0..=passes.len() {
        let (tri, slot, a) = gluing.endpoint(lead, false);
        let (tri_b, slot_b, b) = gluing.endpoint(trail, true);
        debug_assert_eq!((tri, slot), (tri_b, slot_b));
        if a.abs_diff(b) != 1 {
            return None;
        }
        let w = &web.webs()[tri];
        let (
            StrandEnd::Corner {
                corner: ka,
                index: ia,
            },
            StrandEnd::Corner {
                corner: kb,
                index: ib,
            },
        ) = (w.end_at(slot, a), w.end_at(slot, b))
        else {
            return None;
        };
        if ka != kb || ia.abs_diff(ib) != 1 || w.corner(ka)[ia] == w.corner(ka)[ib] {
            return None;
        }
        if !used_arcs.insert((tri, ka, ia)) || !used_arcs.insert((tri, ka, ib)) {
            return None;
        }
        transpositions.push(Transposition {
            tri,
            corner: ka,
            position: ia.min(ib),
        });

        let next_lead = gluing.next_pass(lead)?;
        let next_trail = gluing.prev_pass(trail)?;
        if passes[next_lead].edge != passes[next_trail].edge {
            return None;
        }
        if let Some(end) = gluing.crossing_between(next_lead, next_trail) {
            if end == start {
                return None;
            }
            transpositions.sort();
            let (first, second) = if start.key() <= end.key() {
                (*start, *end)
            } else {
                (*end, *start)
            };
            return Some(SquareFace {
                first,
                second,
                transpositions,
            });
        }
        lead = next_lead;
        trail = next_trail;
    }
    None
}

/// Applies the arc swaps of `sq` without checking that it is current.
pub(crate) fn apply_square<'t>(web: &GlobalWeb<'t>, sq: &SquareFace) -> Result<GlobalWeb<'t>> {
    let mut webs = web.webs().to_vec();
    for t in &sq.transpositions {
        webs[t.tri] = webs[t.tri].corner_transpose(t.corner, t.position)?;
    }
    GlobalWeb::new(web.triangulation(), webs)
}

/// Resolves one square face. Fails with [`Error::StaleSquare`] if `sq` is
/// not a square face of `web`.
pub fn resolve_square<'t>(web: &GlobalWeb<'t>, sq: &SquareFace) -> Result<GlobalWeb<'t>> {
    let before = LadderGluing::new(web)?;
    if !squares_of(web, &before).contains(sq) {
        return Err(Error::StaleSquare);
    }
    resolve_checked(web, &before, sq)
}

/// Resolution with the accounting postconditions: two fewer crossings and
/// unchanged coordinates.
pub(crate) fn resolve_checked<'t>(
    web: &GlobalWeb<'t>,
    before: &LadderGluing,
    sq: &SquareFace,
) -> Result<GlobalWeb<'t>> {
    let out = apply_square(web, sq)?;
    let after = LadderGluing::new(&out)?;
    if after.crossings().len() + 2 != before.crossings().len() {
        return Err(Error::Internal(alloc::format!(
            "square resolution changed crossings {} -> {}",
            before.crossings().len(),
            after.crossings().len()
        )));
    }
    if out.global_coords()? != web.global_coords()? {
        return Err(Error::Internal("square resolution changed coordinates".into()));
    }
    Ok(out)
}
