//! Roundtrips, fellow-travelers and confluence beyond the acceptance bounds.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use webcoord_core::fixtures::{four_punctured_sphere, torus};
use webcoord_core::glue::GlobalWeb;
use webcoord_core::oracle::{
    confluence_check, crossings_correspond, enumerate_cone, fellow_traveler_check, roundtrip_web,
};
use webcoord_core::{reconstruct, IdealTriangulation, TriangleWeb};

fn shuffled<'t>(w: &GlobalWeb<'t>, rng: &mut ChaCha8Rng) -> GlobalWeb<'t> {
    let webs = w
        .webs()
        .iter()
        .map(|tw| {
            let mut corners = tw.corners().clone();
            corners.iter_mut().for_each(|c| c.shuffle(rng));
            TriangleWeb::new(tw.honeycomb(), corners).unwrap()
        })
        .collect();
    GlobalWeb::new(w.triangulation(), webs).unwrap()
}

fn check_surface(tri: &IdealTriangulation, bound: u32, reorderings: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let points = enumerate_cone(tri, bound);
    let mut max_squares = 0;
    for c in &points {
        let web = reconstruct(c, tri).unwrap();
        assert!(roundtrip_web(&web).unwrap(), "{:?}", c.0);
        for _ in 0..reorderings {
            let w = shuffled(&web, &mut rng);
            let squares = w.square_faces().unwrap().len();
            max_squares = max_squares.max(squares);
            let done = if squares == 0 {
                w
            } else {
                let report = confluence_check(&w).unwrap();
                assert!(report.confluent, "{:?} {report:?}", w.webs());
                w.remove_squares().unwrap().0
            };
            assert_eq!(done.global_coords().unwrap(), *c);
            let corr = fellow_traveler_check(&web, &done)
                .unwrap_or_else(|e| panic!("{:?} vs {:?}: {e}", web.webs(), done.webs()));
            assert!(
                crossings_correspond(&web, &done, &corr).unwrap(),
                "{:?}",
                done.webs()
            );
            assert!(roundtrip_web(&done).unwrap());
        }
    }
    (points.len(), max_squares)
}

#[test]
fn torus_up_to_twelve() {
    let (n, sq) = check_surface(&torus(), 12, 8);
    assert!(n > 13);
    assert!(sq > 2);
}

#[test]
fn sphere_up_to_three() {
    let (n, _) = check_surface(&four_punctured_sphere(), 3, 8);
    assert!(n > 1);
}

#[test]
fn sampled_confluence_on_many_squares() {
    let t = torus();
    let words = |a: &str, b: &str| {
        GlobalWeb::new(
            &t,
            vec![
                TriangleWeb::from_words(None, [a, "", ""]).unwrap(),
                TriangleWeb::from_words(None, [b, "", ""]).unwrap(),
            ],
        )
        .unwrap()
    };
    let w = words("RLRLRLRL", "LRLRLRLR");
    let report = confluence_check(&w).unwrap();
    assert!(report.initial_squares > 6, "{report:?}");
    assert!(!report.exhaustive);
    assert!(report.confluent);
    let (done, _) = w.remove_squares().unwrap();
    assert_eq!(done.global_coords().unwrap(), w.global_coords().unwrap());
    assert!(roundtrip_web(&done).unwrap());
}
