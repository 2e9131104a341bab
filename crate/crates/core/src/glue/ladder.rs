//! Ladder gluing of triangle webs across the biangles of the split
//! triangulation.
//!
//! Biangle contents are never stored. For each edge, the strands leaving one
//! side are matched order-preservingly with the strands arriving on the other
//! side, and a forward/backward pair crosses exactly when its endpoints
//! interleave. Each crossing stands for one rung of the ladder-web.

use alloc::vec;
use alloc::vec::Vec;

use super::GlobalWeb;
use crate::error::{Error, Result};
use crate::localweb::{StrandDir, StrandEnd};

/// One passage of a strand across a biangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub edge: usize,
    /// Side (0 or 1) the strand leaves from; it arrives on the other side.
    pub from_side: usize,
    /// Position in the boundary word of the departure side.
    pub from_pos: usize,
    /// Position in the boundary word of the arrival side.
    pub to_pos: usize,
}

impl Pass {
    pub fn to_side(&self) -> usize {
        1 - self.from_side
    }

    /// Position of this pass in the boundary word of `side`.
    pub fn position_on(&self, side: usize) -> usize {
        if side == self.from_side {
            self.from_pos
        } else {
            self.to_pos
        }
    }
}

/// A strand pass together with the traveler it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PassRef {
    pub pass: usize,
    pub traveler: usize,
    /// Index of the pass along the traveler's route.
    pub index: usize,
}

/// A rung of a ladder-web: a strand leaving side 0 meets a strand leaving
/// side 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    pub edge: usize,
    pub forward: PassRef,
    pub backward: PassRef,
    /// Boundary-word positions of the forward strand on sides 0 and 1.
    pub forward_positions: [usize; 2],
    /// Boundary-word positions of the backward strand on sides 0 and 1.
    pub backward_positions: [usize; 2],
}

/// Edge index, then forward and backward positions.
pub type CrossingKey = (usize, [usize; 2], [usize; 2]);

impl Crossing {
    pub fn key(&self) -> CrossingKey {
        (self.edge, self.forward_positions, self.backward_positions)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TravelerKind {
    Loop,
    Arc,
}

/// A point where a traveler crosses one boundary edge of a biangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RouteEntry {
    pub edge: usize,
    pub side: usize,
    pub position: usize,
}

/// A component of the global picture: a loop, or an arc running from an
/// out-honeycomb to an in-honeycomb.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Traveler {
    pub id: usize,
    pub kind: TravelerKind,
    /// Biangle passes in travel order. Loops start at their base point.
    pub passes: Vec<usize>,
    /// Two entries per pass: departure edge side, then arrival edge side.
    pub route: Vec<RouteEntry>,
}

type SlotPosition = (usize, usize);

/// The ladder-glued global picture of a compatible web.
#[derive(Debug, Clone)]
pub struct LadderGluing {
    passes: Vec<Pass>,
    /// Pass through each `(triangle, slot, position)`.
    pass_at: Vec<[Vec<usize>; 3]>,
    /// Other endpoint `(slot, position)` of the corner arc at each
    /// `(triangle, slot, position)`; `None` for honeycomb strands.
    arc_other: Vec<[Vec<Option<SlotPosition>>; 3]>,
    crossings: Vec<Crossing>,
    travelers: Vec<Traveler>,
    /// `(traveler, index)` of every pass.
    owner: Vec<(usize, usize)>,
    /// `(triangle, slot)` of both sides of every edge.
    sides: Vec<[(usize, usize); 2]>,
}

impl LadderGluing {
    pub fn new(web: &GlobalWeb<'_>) -> Result<Self> {
        let tri = web.triangulation();
        let ends: Vec<[Vec<(StrandEnd, StrandDir)>; 3]> = web
            .webs()
            .iter()
            .map(|w| core::array::from_fn(|slot| w.boundary_ends(slot)))
            .collect();

        let arc_other = web
            .webs()
            .iter()
            .zip(&ends)
            .map(|(w, words)| {
                core::array::from_fn(|slot| {
                    words[slot]
                        .iter()
                        .map(|(end, _)| match *end {
                            StrandEnd::Corner { corner, index } => {
                                let other = if slot == (corner + 2) % 3 {
                                    (corner + 1) % 3
                                } else {
                                    (corner + 2) % 3
                                };
                                Some((other, w.arc_position(corner, index, other)))
                            }
                            StrandEnd::Honeycomb { .. } => None,
                        })
                        .collect()
                })
            })
            .collect();

        let mut passes = Vec::new();
        let mut pass_at: Vec<[Vec<usize>; 3]> = ends
            .iter()
            .map(|w| core::array::from_fn(|slot| vec![usize::MAX; w[slot].len()]))
            .collect();
        let mut crossings = Vec::new();
        let mut edge_ranges = Vec::with_capacity(tri.num_edges());

        for (e, edge) in tri.edges().iter().enumerate() {
            let [s0, s1] = edge.sides;
            let w0 = &ends[s0.tri][s0.slot];
            let w1 = &ends[s1.tri][s1.slot];
            let positions = |w: &[(StrandEnd, StrandDir)], d: StrandDir| -> Vec<usize> {
                w.iter()
                    .enumerate()
                    .filter(|(_, (_, x))| *x == d)
                    .map(|(i, _)| i)
                    .collect()
            };
            let out0 = positions(w0, StrandDir::Out);
            let in0 = positions(w0, StrandDir::In);
            // Side 1 runs the other way along the edge, so its aligned order
            // is descending position.
            let mut out1 = positions(w1, StrandDir::Out);
            let mut in1 = positions(w1, StrandDir::In);
            out1.reverse();
            in1.reverse();
            if out0.len() != in1.len() || out1.len() != in0.len() {
                return Err(Error::Incompatible(edge.id.clone()));
            }
            let m = w0.len();

            let first = passes.len();
            for (&p, &q) in out0.iter().zip(&in1) {
                passes.push(Pass {
                    edge: e,
                    from_side: 0,
                    from_pos: p,
                    to_pos: q,
                });
            }
            let split = passes.len();
            for (&q, &p) in out1.iter().zip(&in0) {
                passes.push(Pass {
                    edge: e,
                    from_side: 1,
                    from_pos: q,
                    to_pos: p,
                });
            }
            for (id, pass) in passes.iter().enumerate().skip(first) {
                let side = edge.sides[pass.from_side];
                pass_at[side.tri][side.slot][pass.from_pos] = id;
                let side = edge.sides[pass.to_side()];
                pass_at[side.tri][side.slot][pass.to_pos] = id;
            }
            edge_ranges.push((first, split, passes.len(), m));
        }

        let mut gluing = Self {
            passes,
            pass_at,
            arc_other,
            crossings: Vec::new(),
            travelers: Vec::new(),
            owner: Vec::new(),
            sides: tri
                .edges()
                .iter()
                .map(|e| e.sides.map(|s| (s.tri, s.slot)))
                .collect(),
        };
        gluing.trace()?;

        for (e, &(first, split, end, m)) in edge_ranges.iter().enumerate() {
            for f in first..split {
                for b in split..end {
                    let pf = gluing.passes[f];
                    let pb = gluing.passes[b];
                    // aligned coordinates along the edge
                    let f_pos = [pf.from_pos, pf.to_pos];
                    let b_pos = [pb.to_pos, pb.from_pos];
                    let below = f_pos[0] < b_pos[0];
                    let above = m - 1 - f_pos[1] < m - 1 - b_pos[1];
                    if below != above {
                        crossings.push(Crossing {
                            edge: e,
                            forward: gluing.pass_ref(f),
                            backward: gluing.pass_ref(b),
                            forward_positions: f_pos,
                            backward_positions: b_pos,
                        });
                    }
                }
            }
        }
        crossings.sort_by_key(Crossing::key);
        gluing.crossings = crossings;
        Ok(gluing)
    }

    fn pass_ref(&self, pass: usize) -> PassRef {
        let (traveler, index) = self.owner[pass];
        PassRef {
            pass,
            traveler,
            index,
        }
    }

    fn trace(&mut self) -> Result<()> {
        let n = self.passes.len();
        self.owner = vec![(usize::MAX, 0); n];
        let mut travelers: Vec<Traveler> = Vec::new();
        for start in 0..n {
            if self.owner[start].0 != usize::MAX {
                continue;
            }
            // Walk backwards to an out-honeycomb, or around a loop.
            let mut first = start;
            let mut kind = TravelerKind::Arc;
            while let Some(prev) = self.prev_pass(first) {
                if prev == start {
                    kind = TravelerKind::Loop;
                    break;
                }
                first = prev;
            }
            let mut seq = vec![first];
            let mut cur = first;
            while let Some(next) = self.next_pass(cur) {
                if next == first {
                    break;
                }
                seq.push(next);
                cur = next;
                if seq.len() > n {
                    return Err(Error::Internal("traveler tracing did not terminate".into()));
                }
            }
            if kind == TravelerKind::Loop {
                let base = (0..seq.len())
                    .min_by_key(|&i| {
                        let p = self.passes[seq[i]];
                        (p.edge, p.from_side, p.from_pos)
                    })
                    .unwrap_or(0);
                seq.rotate_left(base);
            }
            let id = travelers.len();
            let mut route = Vec::with_capacity(2 * seq.len());
            for (index, &pass) in seq.iter().enumerate() {
                if self.owner[pass].0 != usize::MAX {
                    return Err(Error::Internal("strand pass on two travelers".into()));
                }
                self.owner[pass] = (id, index);
                let p = self.passes[pass];
                route.push(RouteEntry {
                    edge: p.edge,
                    side: p.from_side,
                    position: p.from_pos,
                });
                route.push(RouteEntry {
                    edge: p.edge,
                    side: p.to_side(),
                    position: p.to_pos,
                });
            }
            travelers.push(Traveler {
                id,
                kind,
                passes: seq,
                route,
            });
        }
        self.travelers = travelers;
        Ok(())
    }

    /// Pass following `pass` along its orientation, `None` at an
    /// in-honeycomb.
    pub fn next_pass(&self, pass: usize) -> Option<usize> {
        let (tri, slot, pos) = self.endpoint(pass, false);
        let (o_slot, o_pos) = self.arc_other[tri][slot][pos]?;
        Some(self.pass_at[tri][o_slot][o_pos])
    }

    /// Pass preceding `pass`, `None` at an out-honeycomb.
    pub fn prev_pass(&self, pass: usize) -> Option<usize> {
        let (tri, slot, pos) = self.endpoint(pass, true);
        let (o_slot, o_pos) = self.arc_other[tri][slot][pos]?;
        Some(self.pass_at[tri][o_slot][o_pos])
    }

    /// `(triangle, slot, position)` of the departure or arrival end.
    pub fn endpoint(&self, pass: usize, departure: bool) -> (usize, usize, usize) {
        let p = self.passes[pass];
        let (side, pos) = if departure {
            (p.from_side, p.from_pos)
        } else {
            (p.to_side(), p.to_pos)
        };
        let (tri, slot) = self.sides[p.edge][side];
        (tri, slot, pos)
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edge_crossings(&self, edge: usize) -> impl Iterator<Item = &Crossing> {
        self.crossings.iter().filter(move |c| c.edge == edge)
    }

    pub fn travelers(&self) -> &[Traveler] {
        &self.travelers
    }

    /// `(traveler, index along route)` of a pass.
    pub fn owner(&self, pass: usize) -> (usize, usize) {
        self.owner[pass]
    }

    pub fn pass_at(&self, tri: usize, slot: usize, position: usize) -> usize {
        self.pass_at[tri][slot][position]
    }

    /// Crossing between two passes, if they cross.
    pub fn crossing_between(&self, a: usize, b: usize) -> Option<&Crossing> {
        self.crossings.iter().find(|c| {
            (c.forward.pass == a && c.backward.pass == b) || (c.forward.pass == b && c.backward.pass == a)
        })
    }

    /// Passes leaving `side` of `edge`, ordered left to right as seen from
    /// that side's triangle.
    pub fn out_strands(&self, edge: usize, side: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.passes.len())
            .filter(|&i| self.passes[i].edge == edge && self.passes[i].from_side == side)
            .collect();
        v.sort_by_key(|&i| self.passes[i].from_pos);
        v
    }
}
