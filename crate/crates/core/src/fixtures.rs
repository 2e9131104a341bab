//! Small triangulations and webs used by tests, examples and the CLI.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::glue::GlobalWeb;
use crate::localweb::{Honeycomb, HoneycombDir, TriangleWeb};
use crate::surface::{IdealTriangulation, RawEdge, RawSide};

pub fn raw_edge(id: &str, a: (&str, u8), b: (&str, u8)) -> RawEdge {
    RawEdge {
        id: id.to_string(),
        sides: vec![
            RawSide {
                tri: a.0.to_string(),
                slot: a.1,
            },
            RawSide {
                tri: b.0.to_string(),
                slot: b.1,
            },
        ],
    }
}

/// Once-punctured torus: triangles `T0`, `T1`; edge `x` glues slot `x` of
/// both triangles.
pub fn torus() -> IdealTriangulation {
    IdealTriangulation::new(
        vec!["T0".into(), "T1".into()],
        vec![
            raw_edge("a", ("T0", 1), ("T1", 1)),
            raw_edge("b", ("T0", 2), ("T1", 2)),
            raw_edge("c", ("T0", 3), ("T1", 3)),
        ],
    )
    .expect("torus fixture is valid")
}

/// Four-punctured sphere as the boundary of a tetrahedron, faces oriented
/// consistently.
pub fn four_punctured_sphere() -> IdealTriangulation {
    let faces: [[u8; 3]; 4] = [[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]];
    let names: Vec<String> = (0..faces.len()).map(|i| format!("F{i}")).collect();
    let mut by_edge: BTreeMap<(u8, u8), Vec<(usize, u8)>> = BTreeMap::new();
    for (f, v) in faces.iter().enumerate() {
        for slot in 0..3 {
            let (x, y) = (v[(slot + 1) % 3], v[(slot + 2) % 3]);
            by_edge
                .entry((x.min(y), x.max(y)))
                .or_default()
                .push((f, slot as u8 + 1));
        }
    }
    let edges = by_edge
        .into_iter()
        .map(|((x, y), sides)| {
            raw_edge(
                &format!("e{x}{y}"),
                (&names[sides[0].0], sides[0].1),
                (&names[sides[1].0], sides[1].1),
            )
        })
        .collect();
    IdealTriangulation::new(names, edges).expect("sphere fixture is valid")
}

fn corner0(word: &str) -> TriangleWeb {
    TriangleWeb::from_words(None, [word, "", ""]).expect("valid word")
}

/// One loop: `R` at corner 0 of `T0`, `L` at corner 0 of `T1`.
pub fn torus_loop(tri: &IdealTriangulation) -> GlobalWeb<'_> {
    GlobalWeb::new(tri, vec![corner0("R"), corner0("L")]).expect("two triangles")
}

/// Out-honeycomb in `T0` facing an in-honeycomb in `T1`.
pub fn honeycomb_pair(tri: &IdealTriangulation) -> GlobalWeb<'_> {
    let h = |dir| TriangleWeb::new(Honeycomb::new(dir, 1), Default::default()).expect("valid");
    GlobalWeb::new(tri, vec![h(HoneycombDir::Out), h(HoneycombDir::In)]).expect("two triangles")
}

/// Two parallel, oppositely oriented loops with no crossings.
pub fn two_loops_parallel(tri: &IdealTriangulation) -> GlobalWeb<'_> {
    GlobalWeb::new(tri, vec![corner0("RL"), corner0("RL")]).expect("two triangles")
}

/// The same two loops arranged so that they cross twice.
pub fn two_loops_crossing(tri: &IdealTriangulation) -> GlobalWeb<'_> {
    GlobalWeb::new(tri, vec![corner0("RL"), corner0("LR")]).expect("two triangles")
}
