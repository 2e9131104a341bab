//! Ideal triangulations of punctured surfaces.
//!
//! A triangulation is stored as a combinatorial map: a list of triangles and
//! a list of edges, each edge pairing two triangle sides. Every triangle is
//! oriented counterclockwise with vertices `v0, v1, v2`; slot `j` carries the
//! edge running from `v(j+1)` to `v(j+2)` (indices mod 3), and corner `k` is
//! the vertex opposite slot `k`. Gluing two triangles always reverses the
//! induced edge direction, so every side pairing yields an oriented surface.
//!
//! Slots and corners are 0-based in this crate. File formats use 1-based
//! slots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One side of an edge: a triangle index and a 0-based slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub tri: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// `sides[0]` is the canonical viewing side for the global dot order.
    pub sides: [Side; 2],
}

/// Unvalidated side record, as read from a document. `slot` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSide {
    pub tri: String,
    pub slot: u8,
}

/// Unvalidated edge record, as read from a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub sides: Vec<RawSide>,
}

/// A validated ideal triangulation with no self-folded triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTriangulation {
    triangles: Vec<String>,
    edges: Vec<Edge>,
    /// `(edge index, side index)` for every `(triangle, slot)`.
    side_of: Vec<[(usize, usize); 3]>,
}

impl IdealTriangulation {
    /// Validates a raw triangle and edge listing.
    pub fn new(triangles: Vec<String>, raw_edges: Vec<RawEdge>) -> Result<Self> {
        if triangles.is_empty() {
            return Err(Error::Schema("no triangles".into()));
        }
        let mut tri_index = BTreeMap::new();
        for (i, t) in triangles.iter().enumerate() {
            if tri_index.insert(t.as_str(), i).is_some() {
                return Err(Error::Schema(format!("duplicate triangle id {t}")));
            }
        }

        let mut side_of: Vec<[Option<(usize, usize)>; 3]> = vec![[None; 3]; triangles.len()];
        let mut edge_ids = BTreeMap::new();
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (e, raw) in raw_edges.iter().enumerate() {
            if edge_ids.insert(raw.id.as_str(), e).is_some() {
                return Err(Error::Schema(format!("duplicate edge id {}", raw.id)));
            }
            if raw.sides.len() != 2 {
                return Err(Error::Schema(format!(
                    "edge {} has {} sides, expected 2",
                    raw.id,
                    raw.sides.len()
                )));
            }
            let mut sides = [Side { tri: 0, slot: 0 }; 2];
            for (s, rs) in raw.sides.iter().enumerate() {
                let tri = *tri_index
                    .get(rs.tri.as_str())
                    .ok_or_else(|| Error::Schema(format!("unknown triangle {}", rs.tri)))?;
                if !(1..=3).contains(&rs.slot) {
                    return Err(Error::Schema(format!("slot {} out of range 1..=3", rs.slot)));
                }
                let slot = usize::from(rs.slot - 1);
                if side_of[tri][slot].is_some() {
                    return Err(Error::DuplicateSide {
                        tri: rs.tri.clone(),
                        slot: rs.slot,
                    });
                }
                side_of[tri][slot] = Some((e, s));
                sides[s] = Side { tri, slot };
            }
            if sides[0].tri == sides[1].tri {
                return Err(Error::SelfFolded(raw.id.clone()));
            }
            edges.push(Edge {
                id: raw.id.clone(),
                sides,
            });
        }

        let mut complete = Vec::with_capacity(triangles.len());
        for (t, slots) in side_of.iter().enumerate() {
            let mut row = [(0, 0); 3];
            for (j, s) in slots.iter().enumerate() {
                row[j] = s.ok_or_else(|| Error::MissingSide {
                    tri: triangles[t].clone(),
                    slot: j as u8 + 1,
                })?;
            }
            complete.push(row);
        }

        let chi = triangles.len() as i64 - edges.len() as i64;
        if chi >= 0 {
            return Err(Error::NonNegativeEuler(chi));
        }

        let tri = Self {
            triangles,
            edges,
            side_of: complete,
        };
        if !tri.dual_graph_connected() {
            return Err(Error::Disconnected);
        }
        Ok(tri)
    }

    fn dual_graph_connected(&self) -> bool {
        let mut seen = vec![false; self.triangles.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for slot in 0..3 {
                let (e, s) = self.side_of[t][slot];
                let other = self.edges[e].sides[1 - s].tri;
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    pub fn triangles(&self) -> &[String] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_index(&self, id: &str) -> Option<usize> {
        self.triangles.iter().position(|t| t == id)
    }

    /// Edge index and side index (0 or 1) glued to `slot` of triangle `tri`.
    pub fn side_of(&self, tri: usize, slot: usize) -> (usize, usize) {
        self.side_of[tri][slot]
    }

    /// Number of triangles minus number of edges.
    pub fn euler_characteristic(&self) -> i64 {
        self.triangles.len() as i64 - self.edges.len() as i64
    }

    /// Ideal vertices: classes of triangle corners under the edge gluings.
    /// Corner `k` of a triangle is its vertex opposite slot `k`.
    pub fn num_punctures(&self) -> usize {
        let mut parent: Vec<usize> = (0..3 * self.triangles.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let corner = |s: Side, k: usize| 3 * s.tri + (s.slot + k) % 3;
        for e in &self.edges {
            let [s0, s1] = e.sides;
            // Gluing reverses direction along the edge.
            for (a, b) in [(corner(s0, 1), corner(s1, 2)), (corner(s0, 2), corner(s1, 1))] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Genus of the closed surface obtained by filling in the punctures.
    pub fn genus(&self) -> usize {
        let closed = self.num_punctures() as i64 + self.euler_characteristic();
        ((2 - closed) / 2) as usize
    }

    pub fn dot_indexing(&self) -> DotIndexing {
        let mut dots = Vec::with_capacity(2 * self.edges.len() + self.triangles.len());
        for e in 0..self.edges.len() {
            dots.push(Dot::EdgeLeft(e));
            dots.push(Dot::EdgeRight(e));
        }
        dots.extend((0..self.triangles.len()).map(Dot::Triangle));
        DotIndexing {
            num_edges: self.edges.len(),
            dots,
        }
    }

    /// Converts back to raw records with 1-based slots.
    pub fn to_raw(&self) -> (Vec<String>, Vec<RawEdge>) {
        let edges = self
            .edges
            .iter()
            .map(|e| RawEdge {
                id: e.id.clone(),
                sides: e
                    .sides
                    .iter()
                    .map(|s| RawSide {
                        tri: self.triangles[s.tri].clone(),
                        slot: s.slot as u8 + 1,
                    })
                    .collect(),
            })
            .collect();
        (self.triangles.clone(), edges)
    }
}

/// A dot of the dotted triangulation. Edge dots are named as viewed from the
/// edge's first-listed side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dot {
    EdgeLeft(usize),
    EdgeRight(usize),
    Triangle(usize),
}

/// Bijection between dots and `0..N`: two dots per edge in file order, then
/// one dot per triangle in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotIndexing {
    num_edges: usize,
    dots: Vec<Dot>,
}

impl DotIndexing {
    pub fn len(&self) -> usize {
        self.dots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    pub fn dots(&self) -> &[Dot] {
        &self.dots
    }

    pub fn index_of(&self, dot: Dot) -> usize {
        match dot {
            Dot::EdgeLeft(e) => 2 * e,
            Dot::EdgeRight(e) => 2 * e + 1,
            Dot::Triangle(t) => 2 * self.num_edges + t,
        }
    }

    /// Global indices of the seven dots of triangle `tri`, in local order
    /// `(a00, a01, a10, a11, a20, a21, a)`: per slot the (left, right) pair as
    /// viewed from `tri`, then the triangle dot.
    pub fn triangle_dots(&self, tri: &IdealTriangulation, t: usize) -> [usize; 7] {
        let mut out = [0; 7];
        for slot in 0..3 {
            let (e, s) = tri.side_of(t, slot);
            let (l, r) = (self.index_of(Dot::EdgeLeft(e)), self.index_of(Dot::EdgeRight(e)));
            // Gluing reverses direction: the second side sees the pair swapped.
            let (l, r) = if s == 0 { (l, r) } else { (r, l) };
            out[2 * slot] = l;
            out[2 * slot + 1] = r;
        }
        out[6] = self.index_of(Dot::Triangle(t));
        out
    }

    /// Human-readable legend such as `aL`, `aR`, `tT0`.
    pub fn label(&self, tri: &IdealTriangulation, index: usize) -> String {
        match self.dots[index] {
            Dot::EdgeLeft(e) => format!("{}L", tri.edges()[e].id),
            Dot::EdgeRight(e) => format!("{}R", tri.edges()[e].id),
            Dot::Triangle(t) => format!("t{}", tri.triangles()[t]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{four_punctured_sphere, raw_edge, torus};
    use alloc::string::ToString;

    #[test]
    fn torus_counts() {
        let t = torus();
        assert_eq!(t.num_edges(), 3);
        assert_eq!(t.num_triangles(), 2);
        assert_eq!(t.euler_characteristic(), -1);
        assert_eq!((t.num_punctures(), t.genus()), (1, 1));
    }

    #[test]
    fn sphere_counts() {
        let s = four_punctured_sphere();
        assert_eq!(s.num_triangles(), 4);
        assert_eq!(s.num_edges(), 6);
        assert_eq!(s.euler_characteristic(), -2);
        assert_eq!(s.dot_indexing().len(), 16);
        assert_eq!((s.num_punctures(), s.genus()), (4, 0));
    }

    #[test]
    fn torus_dot_order() {
        let t = torus();
        let idx = t.dot_indexing();
        let labels: Vec<String> = (0..idx.len()).map(|i| idx.label(&t, i)).collect();
        assert_eq!(labels, ["aL", "aR", "bL", "bR", "cL", "cR", "tT0", "tT1"]);
        assert_eq!(idx.triangle_dots(&t, 0), [0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(idx.triangle_dots(&t, 1), [1, 0, 3, 2, 5, 4, 7]);
    }

    #[test]
    fn rejects_self_folded() {
        let err = IdealTriangulation::new(
            vec!["T0".to_string(), "T1".to_string()],
            vec![
                raw_edge("a", ("T0", 1), ("T0", 2)),
                raw_edge("b", ("T0", 3), ("T1", 3)),
                raw_edge("c", ("T1", 1), ("T1", 2)),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::SelfFolded("a".into()));
    }

    #[test]
    fn rejects_duplicate_side() {
        let err = IdealTriangulation::new(
            vec!["T0".to_string(), "T1".to_string()],
            vec![
                raw_edge("a", ("T0", 1), ("T1", 1)),
                raw_edge("b", ("T0", 1), ("T1", 2)),
                raw_edge("c", ("T0", 3), ("T1", 3)),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DuplicateSide { slot: 1, .. }));
    }

    #[test]
    fn rejects_missing_and_bad_slots() {
        let err = IdealTriangulation::new(
            vec!["T0".to_string(), "T1".to_string()],
            vec![raw_edge("a", ("T0", 1), ("T1", 1))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingSide { .. }));

        let err = IdealTriangulation::new(
            vec!["T0".to_string(), "T1".to_string()],
            vec![raw_edge("a", ("T0", 4), ("T1", 1))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Schema(_)));

        let err = IdealTriangulation::new(vec!["T0".to_string()], vec![]).unwrap_err();
        assert!(matches!(err, Error::MissingSide { .. }));
    }

    #[test]
    fn rejects_disconnected() {
        // Two disjoint copies of the torus.
        let tris = ["T0", "T1", "U0", "U1"].map(String::from).to_vec();
        let mut edges = Vec::new();
        for (p, q) in [("T0", "T1"), ("U0", "U1")] {
            for slot in 1..=3 {
                edges.push(raw_edge(&format!("{p}{slot}"), (p, slot), (q, slot)));
            }
        }
        assert_eq!(
            IdealTriangulation::new(tris, edges).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn raw_roundtrip_is_identity() {
        for t in [torus(), four_punctured_sphere()] {
            let (tris, edges) = t.to_raw();
            assert_eq!(IdealTriangulation::new(tris, edges).unwrap(), t);
        }
    }
}
