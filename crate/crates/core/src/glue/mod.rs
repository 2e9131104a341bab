//! Global webs in good position with respect to the split triangulation.
//!
//! A [`GlobalWeb`] assigns a [`TriangleWeb`] to every triangle; the ladder
//! webs in the biangles are implied by the boundary words.

mod ladder;
mod square;

use alloc::vec::Vec;

pub use ladder::{Crossing, CrossingKey, LadderGluing, Pass, PassRef, RouteEntry, Traveler, TravelerKind};
pub use square::{find_square_faces, resolve_square, SquareFace, Transposition};

use crate::cone::{decompose_global, in_global_cone, GlobalConePoint};
use crate::error::{Error, Result};
use crate::localweb::{LocalWebContent, TriangleWeb};
use crate::surface::{Dot, IdealTriangulation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalWeb<'t> {
    tri: &'t IdealTriangulation,
    webs: Vec<TriangleWeb>,
}

impl<'t> GlobalWeb<'t> {
    /// `webs[i]` is the local web of triangle `i`.
    pub fn new(tri: &'t IdealTriangulation, webs: Vec<TriangleWeb>) -> Result<Self> {
        if webs.len() != tri.num_triangles() {
            return Err(Error::DimensionMismatch {
                expected: tri.num_triangles(),
                actual: webs.len(),
            });
        }
        Ok(Self { tri, webs })
    }

    pub fn empty(tri: &'t IdealTriangulation) -> Self {
        Self {
            tri,
            webs: alloc::vec![TriangleWeb::empty(); tri.num_triangles()],
        }
    }

    /// Canonical representatives (all `R` before all `L`) of the contents.
    pub fn from_contents(tri: &'t IdealTriangulation, contents: &[LocalWebContent]) -> Result<Self> {
        Self::new(
            tri,
            contents
                .iter()
                .map(LocalWebContent::canonical_from_counts)
                .collect(),
        )
    }

    pub fn triangulation(&self) -> &'t IdealTriangulation {
        self.tri
    }

    pub fn webs(&self) -> &[TriangleWeb] {
        &self.webs
    }

    pub fn into_webs(self) -> Vec<TriangleWeb> {
        self.webs
    }

    pub fn contents(&self) -> Vec<LocalWebContent> {
        self.webs.iter().map(TriangleWeb::content).collect()
    }

    /// Strand counts agree across every edge: out-strands on one side equal
    /// in-strands on the other.
    pub fn check_compatible(&self) -> bool {
        self.first_incompatible_edge().is_none()
    }

    fn first_incompatible_edge(&self) -> Option<usize> {
        self.tri.edges().iter().position(|e| {
            let [s0, s1] = e.sides;
            let (in0, out0) = self.webs[s0.tri].strand_counts(s0.slot);
            let (in1, out1) = self.webs[s1.tri].strand_counts(s1.slot);
            out0 != in1 || in0 != out1
        })
    }

    fn require_compatible(&self) -> Result<()> {
        match self.first_incompatible_edge() {
            Some(e) => Err(Error::Incompatible(self.tri.edges()[e].id.clone())),
            None => Ok(()),
        }
    }

    pub fn ladder(&self) -> Result<LadderGluing> {
        self.require_compatible()?;
        LadderGluing::new(self)
    }

    /// Crossings (rungs) in the biangle of `edge`.
    pub fn biangle_crossings(&self, edge: usize) -> Result<Vec<Crossing>> {
        Ok(self.ladder()?.edge_crossings(edge).copied().collect())
    }

    pub fn crossing_count(&self) -> Result<usize> {
        Ok(self.ladder()?.crossings().len())
    }

    pub fn trace_travelers(&self) -> Result<Vec<Traveler>> {
        Ok(self.ladder()?.travelers().to_vec())
    }

    /// Global Fock-Goncharov coordinates in dot-index order. Edge dots are
    /// read from the edge's first-listed side; the second side must agree
    /// with left and right exchanged.
    pub fn global_coords(&self) -> Result<GlobalConePoint> {
        self.require_compatible()?;
        let idx = self.tri.dot_indexing();
        let local: Vec<[i64; 7]> = self.webs.iter().map(|w| w.local_coords().0).collect();
        let mut out = GlobalConePoint::zero(idx.len());
        for (e, edge) in self.tri.edges().iter().enumerate() {
            let [s0, s1] = edge.sides;
            let (l0, r0) = (local[s0.tri][2 * s0.slot], local[s0.tri][2 * s0.slot + 1]);
            let (l1, r1) = (local[s1.tri][2 * s1.slot], local[s1.tri][2 * s1.slot + 1]);
            if l0 != r1 || r0 != l1 {
                return Err(Error::GluingIdentity(edge.id.clone()));
            }
            out.0[idx.index_of(Dot::EdgeLeft(e))] = l0;
            out.0[idx.index_of(Dot::EdgeRight(e))] = r0;
        }
        for (t, c) in local.iter().enumerate() {
            out.0[idx.index_of(Dot::Triangle(t))] = c[6];
        }
        Ok(out)
    }

    pub fn square_faces(&self) -> Result<Vec<SquareFace>> {
        self.require_compatible()?;
        find_square_faces(self)
    }

    /// No square faces. Disk and bigon faces cannot occur in ladder-glued
    /// webs.
    pub fn is_nonelliptic(&self) -> Result<bool> {
        Ok(self.square_faces()?.is_empty())
    }

    pub fn resolve_square(&self, sq: &SquareFace) -> Result<Self> {
        self.require_compatible()?;
        resolve_square(self, sq)
    }

    /// Runs the square removing algorithm, always resolving the first square
    /// in [`find_square_faces`] order. Returns the non-elliptic web and the
    /// number of squares resolved.
    pub fn remove_squares(&self) -> Result<(Self, usize)> {
        self.require_compatible()?;
        let mut cur = self.clone();
        let mut gluing = LadderGluing::new(&cur)?;
        let budget = gluing.crossings().len() / 2;
        let mut steps = 0;
        loop {
            let squares = square::squares_of(&cur, &gluing);
            let Some(first) = squares.first() else {
                return Ok((cur, steps));
            };
            if steps == budget {
                return Err(Error::Internal("square removal exceeded crossing budget".into()));
            }
            cur = square::resolve_checked(&cur, &gluing, first)?;
            gluing = LadderGluing::new(&cur)?;
            steps += 1;
        }
    }
}

/// Inverse coordinate map: canonical local webs glued by ladders, then
/// squares removed.
pub fn reconstruct<'t>(c: &GlobalConePoint, tri: &'t IdealTriangulation) -> Result<GlobalWeb<'t>> {
    let idx = tri.dot_indexing();
    if !in_global_cone(c, tri, &idx)? {
        return Err(Error::NotInCone);
    }
    let contents = decompose_global(c, tri, &idx)?;
    let glued = GlobalWeb::from_contents(tri, &contents)?;
    if !glued.check_compatible() {
        return Err(Error::Internal(
            "cone point produced incompatible local webs".into(),
        ));
    }
    let (web, _) = glued.remove_squares()?;
    if web.global_coords()? != *c {
        return Err(Error::Internal("reconstruction changed the coordinates".into()));
    }
    Ok(web)
}

#[cfg(test)]
mod tests;
