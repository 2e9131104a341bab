use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::fixtures::*;
use crate::localweb::{Honeycomb, HoneycombDir, Letter};

fn corner0(word: &str) -> TriangleWeb {
    TriangleWeb::from_words(None, [word, "", ""]).unwrap()
}

#[test]
fn compatibility() {
    let t = torus();
    assert!(torus_loop(&t).check_compatible());
    assert!(GlobalWeb::empty(&t).check_compatible());
    let broken = GlobalWeb::new(&t, vec![corner0("R"), TriangleWeb::empty()]).unwrap();
    assert!(!broken.check_compatible());
    assert!(matches!(broken.global_coords(), Err(Error::Incompatible(_))));
    assert!(matches!(
        GlobalWeb::new(&t, vec![TriangleWeb::empty()]),
        Err(Error::DimensionMismatch {
            expected: 2,
            actual: 1
        })
    ));
}

#[test]
fn crossings_in_biangles() {
    let t = torus();
    let parallel = two_loops_parallel(&t);
    assert_eq!(parallel.crossing_count().unwrap(), 0);
    let crossing = two_loops_crossing(&t);
    assert_eq!(crossing.biangle_crossings(0).unwrap().len(), 0);
    assert_eq!(crossing.biangle_crossings(1).unwrap().len(), 1);
    assert_eq!(crossing.biangle_crossings(2).unwrap().len(), 1);
    // Strands all running one way never cross.
    let one_way = GlobalWeb::new(&t, vec![corner0("RR"), corner0("LL")]).unwrap();
    assert_eq!(one_way.crossing_count().unwrap(), 0);
}

#[test]
fn travelers() {
    let t = torus();
    let loops = torus_loop(&t).trace_travelers().unwrap();
    assert_eq!(loops.len(), 1);
    assert_eq!(loops[0].kind, TravelerKind::Loop);
    assert_eq!(loops[0].route.len(), 4);
    let edges: Vec<usize> = loops[0].route.iter().map(|r| r.edge).collect();
    assert_eq!(edges, vec![1, 1, 2, 2]);

    let arcs = honeycomb_pair(&t).trace_travelers().unwrap();
    assert_eq!(arcs.len(), 3);
    assert!(arcs
        .iter()
        .all(|a| a.kind == TravelerKind::Arc && a.route.len() == 2));

    assert!(GlobalWeb::empty(&t).trace_travelers().unwrap().is_empty());
}

#[test]
fn global_coords_examples() {
    let t = torus();
    assert_eq!(
        torus_loop(&t).global_coords().unwrap().0,
        vec![0, 0, 1, 2, 2, 1, 1, 2]
    );
    assert_eq!(
        honeycomb_pair(&t).global_coords().unwrap().0,
        vec![1, 2, 1, 2, 1, 2, 3, 3]
    );
    assert_eq!(GlobalWeb::empty(&t).global_coords().unwrap().0, vec![0; 8]);
    let s = four_punctured_sphere();
    assert_eq!(GlobalWeb::empty(&s).global_coords().unwrap().0, vec![0; 16]);
}

#[test]
fn square_faces_and_resolution() {
    let t = torus();
    assert!(torus_loop(&t).square_faces().unwrap().is_empty());
    assert!(GlobalWeb::empty(&t).square_faces().unwrap().is_empty());
    assert!(two_loops_parallel(&t).is_nonelliptic().unwrap());

    let w = two_loops_crossing(&t);
    assert!(!w.is_nonelliptic().unwrap());
    let squares = w.square_faces().unwrap();
    assert_eq!(squares.len(), 2);
    for sq in &squares {
        assert_eq!(sq.transpositions.len(), 1);
        let out = w.resolve_square(sq).unwrap();
        assert_eq!(out.crossing_count().unwrap(), 0);
        let changed = (0..2).filter(|&i| out.webs()[i] != w.webs()[i]).count();
        assert_eq!(changed, 1);
        assert_eq!(out.global_coords().unwrap(), w.global_coords().unwrap());
        assert_eq!(out.resolve_square(sq), Err(Error::StaleSquare));
    }
    let (done, steps) = w.remove_squares().unwrap();
    assert_eq!(steps, 1);
    assert!(done.is_nonelliptic().unwrap());
}

#[test]
fn reconstruct_examples() {
    let t = torus();
    let w = reconstruct(&GlobalConePoint(vec![0, 0, 1, 2, 2, 1, 1, 2]), &t).unwrap();
    assert_eq!(w.webs()[0].corner(0), &[Letter::R]);
    assert_eq!(w.webs()[1].corner(0), &[Letter::L]);
    let w = reconstruct(&GlobalConePoint(vec![1, 2, 1, 2, 1, 2, 3, 3]), &t).unwrap();
    assert_eq!(w, honeycomb_pair(&t));
    assert_eq!(
        reconstruct(&GlobalConePoint(vec![0; 8]), &t).unwrap(),
        GlobalWeb::empty(&t)
    );
    assert_eq!(
        reconstruct(&GlobalConePoint(vec![1, 0, 0, 0, 0, 0, 0, 0]), &t),
        Err(Error::NotInCone)
    );
    assert!(matches!(
        reconstruct(&GlobalConePoint(vec![0; 7]), &t),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn honeycomb_sizes() {
    let t = torus();
    for n in 1..=4 {
        let h = |dir| TriangleWeb::new(Honeycomb::new(dir, n), Default::default()).unwrap();
        let w = GlobalWeb::new(&t, vec![h(HoneycombDir::Out), h(HoneycombDir::In)]).unwrap();
        let c = w.global_coords().unwrap();
        assert_eq!(reconstruct(&c, &t).unwrap(), w);
        assert_eq!(w.trace_travelers().unwrap().len(), 3 * n as usize);
    }
}

fn arb_torus_loops() -> impl Strategy<Value = (Vec<Letter>, Vec<Letter>)> {
    prop::collection::vec(prop_oneof![Just(Letter::R), Just(Letter::L)], 0..6).prop_flat_map(|w0| {
        let n = w0.len();
        let letters = w0.iter().map(|l| l.flipped()).collect::<Vec<_>>();
        (
            Just(w0),
            Just(letters).prop_shuffle().prop_map(move |v| v[..n].to_vec()),
        )
    })
}

proptest! {
    #[test]
    fn removal_reaches_nonelliptic_web((w0, w1) in arb_torus_loops()) {
        let t = torus();
        let w = GlobalWeb::new(&t, vec![
            TriangleWeb::new(None, [w0, vec![], vec![]]).unwrap(),
            TriangleWeb::new(None, [w1, vec![], vec![]]).unwrap(),
        ]).unwrap();
        prop_assert!(w.check_compatible());
        let crossings = w.crossing_count().unwrap();
        let (done, steps) = w.remove_squares().unwrap();
        prop_assert!(done.is_nonelliptic().unwrap());
        prop_assert_eq!(done.crossing_count().unwrap() + 2 * steps, crossings);
        prop_assert_eq!(done.global_coords().unwrap(), w.global_coords().unwrap());
        prop_assert_eq!(reconstruct(&w.global_coords().unwrap(), &t).unwrap().global_coords().unwrap(),
            w.global_coords().unwrap());
    }
}

#[test]
fn square_with_both_rungs_in_one_biangle() {
    let t = torus();
    let tw = || TriangleWeb::from_words(None, ["", "RL", "LR"]).unwrap();
    let w = GlobalWeb::new(&t, vec![tw(), tw()]).unwrap();
    let squares = w.square_faces().unwrap();
    let same: Vec<_> = squares
        .iter()
        .filter(|sq| sq.first.edge == sq.second.edge)
        .collect();
    assert!(!same.is_empty());
    for sq in same {
        assert_eq!(sq.transpositions.len(), 2);
        let out = w.resolve_square(sq).unwrap();
        assert_eq!(out.crossing_count().unwrap() + 2, w.crossing_count().unwrap());
        assert_eq!(out.global_coords().unwrap(), w.global_coords().unwrap());
    }
    let report = crate::oracle::confluence_check(&w).unwrap();
    assert!(report.confluent);
}
