//! Executable checks of the web/cone bijection: traveler correspondence,
//! roundtrips, confluence of square removal and bounded cone enumeration.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{in_global_cone, in_local_cone, GlobalConePoint, LocalConePoint};
use crate::error::{Error, Result};
use crate::glue::{reconstruct, GlobalWeb, LadderGluing, TravelerKind};
use crate::localweb::TriangleWeb;
use crate::surface::IdealTriangulation;

/// Bijection between the travelers of two webs with equal contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TravelerCorrespondence {
    /// `pairs[i] = (i, j)`: traveler `i` of the first web matches traveler
    /// `j` of the second.
    pub pairs: Vec<(usize, usize)>,
}

impl TravelerCorrespondence {
    pub fn image(&self, traveler: usize) -> usize {
        self.pairs[traveler].1
    }
}

/// Matches the traveler through the i-th out-strand of every edge side of
/// `w` with the traveler through the i-th out-strand of `w2`, then checks the
/// matching is a bijection of fellow-travelers.
pub fn fellow_traveler_check(w: &GlobalWeb<'_>, w2: &GlobalWeb<'_>) -> Result<TravelerCorrespondence> {
    let tri = w.triangulation();
    if tri != w2.triangulation() {
        return Err(Error::Schema("webs live on different triangulations".into()));
    }
    for (t, (a, b)) in w.webs().iter().zip(w2.webs()).enumerate() {
        if a.content() != b.content() {
            return Err(Error::ContentMismatch(tri.triangles()[t].clone()));
        }
    }
    let g = w.ladder()?;
    let g2 = w2.ladder()?;
    let conflict = |msg: alloc::string::String| Err(Error::CorrespondenceConflict(msg));

    // Corresponding out-strands, pass to pass.
    let mut strand_map = vec![usize::MAX; g.passes().len()];
    let mut forward: BTreeMap<usize, usize> = BTreeMap::new();
    let mut backward: BTreeMap<usize, usize> = BTreeMap::new();
    for e in 0..tri.num_edges() {
        for side in 0..2 {
            let outs = g.out_strands(e, side);
            let outs2 = g2.out_strands(e, side);
            if outs.len() != outs2.len() {
                return conflict(format!("out-strand counts differ on edge {}", tri.edges()[e].id));
            }
            for (&p, &p2) in outs.iter().zip(&outs2) {
                strand_map[p] = p2;
                let (t, _) = g.owner(p);
                let (t2, _) = g2.owner(p2);
                if *forward.entry(t).or_insert(t2) != t2 || *backward.entry(t2).or_insert(t) != t {
                    return conflict(format!("traveler {t} maps inconsistently"));
                }
            }
        }
    }
    if forward.len() != g.travelers().len() || backward.len() != g2.travelers().len() {
        return conflict("correspondence is not a bijection".into());
    }

    for traveler in g.travelers() {
        let other = &g2.travelers()[forward[&traveler.id]];
        if traveler.kind != other.kind || traveler.passes.len() != other.passes.len() {
            return conflict(format!("traveler {} changes kind or length", traveler.id));
        }
        // Base the partner at the strand matching this traveler's base.
        let base = strand_map[traveler.passes[0]];
        let Some(shift) = other.passes.iter().position(|&p| p == base) else {
            return conflict(format!(
                "base strand of traveler {} not on its partner",
                traveler.id
            ));
        };
        if traveler.kind == TravelerKind::Arc && shift != 0 {
            return conflict(format!("arc {} starts elsewhere on its partner", traveler.id));
        }
        let n = other.passes.len();
        for (k, &p) in traveler.passes.iter().enumerate() {
            let q = other.passes[(k + shift) % n];
            let (a, b) = (g.passes()[p], g2.passes()[q]);
            if (a.edge, a.from_side) != (b.edge, b.from_side) {
                return conflict(format!("routes of traveler {} diverge at step {k}", traveler.id));
            }
            if strand_map[p] != q {
                return conflict(format!(
                    "strand order of traveler {} differs at step {k}",
                    traveler.id
                ));
            }
        }
    }
    Ok(TravelerCorrespondence {
        pairs: forward.into_iter().collect(),
    })
}

/// Number of crossings between each unordered pair of travelers.
fn crossing_counts(g: &LadderGluing) -> BTreeMap<(usize, usize), usize> {
    let mut counts = BTreeMap::new();
    for c in g.crossings() {
        let (a, b) = (c.forward.traveler, c.backward.traveler);
        *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    counts
}

/// Corresponding traveler pairs cross equally often.
pub fn crossings_correspond(
    w: &GlobalWeb<'_>,
    w2: &GlobalWeb<'_>,
    corr: &TravelerCorrespondence,
) -> Result<bool> {
    let mapped: BTreeMap<(usize, usize), usize> = crossing_counts(&w.ladder()?)
        .into_iter()
        .map(|((a, b), n)| {
            let (x, y) = (corr.image(a), corr.image(b));
            ((x.min(y), x.max(y)), n)
        })
        .collect();
    Ok(mapped == crossing_counts(&w2.ladder()?))
}

/// Coordinates of the reconstructed web equal `c`.
pub fn roundtrip_cone(c: &GlobalConePoint, tri: &IdealTriangulation) -> Result<bool> {
    let web = reconstruct(c, tri)?;
    Ok(web.global_coords()? == *c)
}

/// Reconstructing a non-elliptic web from its coordinates yields a web with
/// fellow-travelers and matching crossing counts.
pub fn roundtrip_web(w: &GlobalWeb<'_>) -> Result<bool> {
    if !w.is_nonelliptic()? {
        return Err(Error::Elliptic);
    }
    let c = w.global_coords()?;
    let w2 = reconstruct(&c, w.triangulation())?;
    let corr = match fellow_traveler_check(w, &w2) {
        Ok(corr) => corr,
        Err(Error::CorrespondenceConflict(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    crossings_correspond(w, &w2, &corr)
}

/// Outcome of exploring square-removal orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    /// Squares present in the starting web.
    pub initial_squares: usize,
    /// Complete resolution orders explored (or sampled).
    pub orders: u64,
    /// Whether every order was explored.
    pub exhaustive: bool,
    /// Distinct terminal webs reached.
    pub terminals: usize,
    pub confluent: bool,
}

/// Exhaustive exploration up to this many initial squares; beyond it,
/// orders are sampled.
pub const EXHAUSTIVE_SQUARE_LIMIT: usize = 6;
pub const SAMPLED_ORDERS: u64 = 16;
pub const SAMPLE_SEED: u64 = 0;

/// Runs square removal under every resolution order (or a seeded sample)
/// and checks all terminal webs share coordinates and fellow-travel.
pub fn confluence_check(w: &GlobalWeb<'_>) -> Result<ConfluenceReport> {
    let initial = w.square_faces()?.len();
    let mut terminals: BTreeSet<Vec<TriangleWeb>> = BTreeSet::new();
    let exhaustive = initial <= EXHAUSTIVE_SQUARE_LIMIT;
    let orders = if exhaustive {
        let mut memo = BTreeMap::new();
        count_orders(w, &mut memo, &mut terminals)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_ORDERS {
            let mut cur = w.clone();
            loop {
                let squares = cur.square_faces()?;
                if squares.is_empty() {
                    break;
                }
                let pick = rng.random_range(0..squares.len());
                cur = cur.resolve_square(&squares[pick])?;
            }
            terminals.insert(cur.into_webs());
        }
        SAMPLED_ORDERS
    };

    let coords = w.global_coords()?;
    let tri = w.triangulation();
    let finals: Vec<GlobalWeb<'_>> = terminals
        .iter()
        .map(|webs| GlobalWeb::new(tri, webs.clone()))
        .collect::<Result<_>>()?;
    let mut confluent = true;
    for (i, a) in finals.iter().enumerate() {
        if a.global_coords()? != coords || !a.is_nonelliptic()? {
            confluent = false;
        }
        for b in &finals[i + 1..] {
            match fellow_traveler_check(a, b) {
                Ok(_) => {}
                Err(Error::CorrespondenceConflict(_)) => confluent = false,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(ConfluenceReport {
        initial_squares: initial,
        orders,
        exhaustive,
        terminals: finals.len(),
        confluent,
    })
}

/// Number of complete resolution orders from `w`, collecting terminals.
fn count_orders(
    w: &GlobalWeb<'_>,
    memo: &mut BTreeMap<Vec<TriangleWeb>, u64>,
    terminals: &mut BTreeSet<Vec<TriangleWeb>>,
) -> Result<u64> {
    if let Some(&n) = memo.get(w.webs()) {
        return Ok(n);
    }
    let squares = w.square_faces()?;
    let n = if squares.is_empty() {
        terminals.insert(w.webs().to_vec());
        1
    } else {
        let mut total = 0u64;
        for sq in &squares {
            let next = w.resolve_square(sq)?;
            total = total.saturating_add(count_orders(&next, memo, terminals)?);
        }
        total
    };
    memo.insert(w.webs().to_vec(), n);
    Ok(n)
}

/// All points of the local cone with every coordinate in `0..=bound`, in
/// lexicographic order.
pub fn local_cone_points(bound: i64) -> Vec<LocalConePoint> {
    let mut out = Vec::new();
    let mut c = [0i64; 7];
    fill_local(&mut c, 0, bound, &mut out);
    out
}

fn fill_local(c: &mut [i64; 7], i: usize, bound: i64, out: &mut Vec<LocalConePoint>) {
    if i == 7 {
        let p = LocalConePoint(*c);
        if in_local_cone(&p) {
            out.push(p);
        }
        return;
    }
    for v in 0..=bound {
        c[i] = v;
        fill_local(c, i + 1, bound, out);
    }
}

/// Global cone points with every coordinate in `0..=bound`, in lexicographic
/// order.
pub fn enumerate_cone(tri: &IdealTriangulation, bound: u32) -> Vec<GlobalConePoint> {
    enumerate_cone_part(tri, bound, 0, 1)
}

/// The share of [`enumerate_cone`] whose first triangle uses a local point
/// with index `≡ part (mod parts)`. The union over `part in 0..parts` is the
/// full enumeration; each share is sorted.
pub fn enumerate_cone_part(
    tri: &IdealTriangulation,
    bound: u32,
    part: usize,
    parts: usize,
) -> Vec<GlobalConePoint> {
    let idx = tri.dot_indexing();
    let local = local_cone_points(i64::from(bound));
    let dots: Vec<[usize; 7]> = (0..tri.num_triangles())
        .map(|t| idx.triangle_dots(tri, t))
        .collect();
    let mut assignment = vec![None; idx.len()];
    let mut out = Vec::new();
    join_triangles(&dots, &local, 0, (part, parts.max(1)), &mut assignment, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|v| in_global_cone(v, tri, &idx).unwrap_or(false)));
    out
}

fn join_triangles(
    dots: &[[usize; 7]],
    local: &[LocalConePoint],
    t: usize,
    partition: (usize, usize),
    assignment: &mut Vec<Option<i64>>,
    out: &mut Vec<GlobalConePoint>,
) {
    if t == dots.len() {
        out.push(GlobalConePoint(
            assignment.iter().map(|v| v.unwrap_or(0)).collect(),
        ));
        return;
    }
    let d = &dots[t];
    for (k, p) in local.iter().enumerate() {
        if t == 0 && k % partition.1 != partition.0 {
            continue;
        }
        if d.iter()
            .zip(&p.0)
            .any(|(&i, &v)| assignment[i].is_some_and(|a| a != v))
        {
            continue;
        }
        let fresh: Vec<usize> = d.iter().copied().filter(|&i| assignment[i].is_none()).collect();
        for (&i, &v) in d.iter().zip(&p.0) {
            assignment[i] = Some(v);
        }
        join_triangles(dots, local, t + 1, partition, assignment, out);
        for i in fresh {
            assignment[i] = None;
        }
    }
}
