//! Rung-less essential local webs in an ideal triangle.
//!
//! Every such web is a (possibly empty) honeycomb together with disjoint
//! corner arcs. A [`TriangleWeb`] stores the honeycomb and, for each corner,
//! the word of arc letters listed innermost-first (nearest the vertex first).
//!
//! Arc `R` at corner `k` enters the triangle through slot `k+2` and leaves
//! through slot `k+1` (mod 3); `L` is its orientation reverse.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cone::LocalConePoint;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    R,
    L,
}

impl Letter {
    pub fn flipped(self) -> Self {
        match self {
            Letter::R => Letter::L,
            Letter::L => Letter::R,
        }
    }

    /// Parses a corner word such as `"RLR"`.
    pub fn parse_word(word: &str) -> Result<Vec<Letter>> {
        word.chars()
            .map(|c| match c {
                'R' => Ok(Letter::R),
                'L' => Ok(Letter::L),
                other => Err(Error::Schema(alloc::format!("invalid corner letter {other:?}"))),
            })
            .collect()
    }

    pub fn word_string(word: &[Letter]) -> String {
        word.iter()
            .map(|l| match l {
                Letter::R => 'R',
                Letter::L => 'L',
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HoneycombDir {
    In,
    Out,
}

/// A honeycomb of size `n >= 1`. All its boundary strands point in the same
/// direction relative to the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Honeycomb {
    pub dir: HoneycombDir,
    pub n: u32,
}

impl Honeycomb {
    /// `None` for `n == 0`.
    pub fn new(dir: HoneycombDir, n: u32) -> Option<Self> {
        (n > 0).then_some(Self { dir, n })
    }
}

/// Orientation of a boundary strand relative to the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StrandDir {
    In,
    Out,
}

impl StrandDir {
    pub fn flipped(self) -> Self {
        match self {
            StrandDir::In => StrandDir::Out,
            StrandDir::Out => StrandDir::In,
        }
    }
}

impl From<HoneycombDir> for StrandDir {
    fn from(d: HoneycombDir) -> Self {
        match d {
            HoneycombDir::In => StrandDir::In,
            HoneycombDir::Out => StrandDir::Out,
        }
    }
}

/// Strand orientations read left to right along an edge as viewed from the
/// triangle.
pub type StrandWord = Vec<StrandDir>;

/// What occupies a position of a boundary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandEnd {
    /// Arc at `corner`, `index` positions from the vertex.
    Corner { corner: usize, index: usize },
    /// The `index`-th honeycomb strand on this edge, counted left to right.
    Honeycomb { index: usize },
}

/// Direction of the endpoint of a corner arc on `slot`.
pub(crate) fn arc_dir(corner: usize, letter: Letter, slot: usize) -> StrandDir {
    // R at corner k enters via slot k+2, exits via slot k+1.
    let entering = if slot == (corner + 2) % 3 {
        true
    } else {
        debug_assert_eq!(slot, (corner + 1) % 3);
        false
    };
    match (letter, entering) {
        (Letter::R, true) | (Letter::L, false) => StrandDir::In,
        _ => StrandDir::Out,
    }
}

/// A honeycomb plus three corner words (innermost-first).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleWeb {
    honeycomb: Option<Honeycomb>,
    corners: [Vec<Letter>; 3],
}

impl TriangleWeb {
    pub fn new(honeycomb: Option<Honeycomb>, corners: [Vec<Letter>; 3]) -> Result<Self> {
        if let Some(h) = honeycomb {
            if h.n == 0 {
                return Err(Error::Schema("honeycomb with a direction needs n >= 1".into()));
            }
        }
        Ok(Self { honeycomb, corners })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a web from corner word strings such as `["RL", "", ""]`.
    pub fn from_words(honeycomb: Option<Honeycomb>, words: [&str; 3]) -> Result<Self> {
        let [a, b, c] = words;
        Self::new(
            honeycomb,
            [
                Letter::parse_word(a)?,
                Letter::parse_word(b)?,
                Letter::parse_word(c)?,
            ],
        )
    }

    pub fn honeycomb(&self) -> Option<Honeycomb> {
        self.honeycomb
    }

    pub fn corner(&self, k: usize) -> &[Letter] {
        &self.corners[k]
    }

    pub fn corners(&self) -> &[Vec<Letter>; 3] {
        &self.corners
    }

    fn honeycomb_n(&self) -> usize {
        self.honeycomb.map_or(0, |h| h.n as usize)
    }

    /// Corner-ambiguity class: letter counts per corner plus the honeycomb.
    pub fn content(&self) -> LocalWebContent {
        let mut r = [0u32; 3];
        let mut l = [0u32; 3];
        for k in 0..3 {
            for letter in &self.corners[k] {
                match letter {
                    Letter::R => r[k] += 1,
                    Letter::L => l[k] += 1,
                }
            }
        }
        LocalWebContent {
            r,
            l,
            honeycomb: self.honeycomb,
        }
    }

    /// `(n_in, n_out)` on `slot`.
    pub fn strand_counts(&self, slot: usize) -> (u32, u32) {
        let mut counts = (0, 0);
        let mut add = |d: StrandDir, m: u32| match d {
            StrandDir::In => counts.0 += m,
            StrandDir::Out => counts.1 += m,
        };
        if let Some(h) = self.honeycomb {
            add(h.dir.into(), h.n);
        }
        let c = self.content();
        for corner in [(slot + 1) % 3, (slot + 2) % 3] {
            add(arc_dir(corner, Letter::R, slot), c.r[corner]);
            add(arc_dir(corner, Letter::L, slot), c.l[corner]);
        }
        counts
    }

    /// Strand orientations along `slot`, left to right: arcs of the left
    /// corner (innermost leftmost), then the honeycomb strands, then arcs of
    /// the right corner (innermost rightmost).
    pub fn boundary_word(&self, slot: usize) -> StrandWord {
        self.boundary_ends(slot).into_iter().map(|(_, d)| d).collect()
    }

    /// Same as [`boundary_word`](Self::boundary_word), also naming the
    /// component that owns each position.
    pub fn boundary_ends(&self, slot: usize) -> Vec<(StrandEnd, StrandDir)> {
        let left = (slot + 1) % 3;
        let right = (slot + 2) % 3;
        let mut out = Vec::with_capacity(self.corners[left].len() + self.corners[right].len());
        for (index, &letter) in self.corners[left].iter().enumerate() {
            out.push((
                StrandEnd::Corner { corner: left, index },
                arc_dir(left, letter, slot),
            ));
        }
        if let Some(h) = self.honeycomb {
            for index in 0..h.n as usize {
                out.push((StrandEnd::Honeycomb { index }, h.dir.into()));
            }
        }
        for (index, &letter) in self.corners[right].iter().enumerate().rev() {
            out.push((
                StrandEnd::Corner { corner: right, index },
                arc_dir(right, letter, slot),
            ));
        }
        out
    }

    /// Position on `slot` of the arc `(corner, index)`. `slot` must be one of
    /// the two edges adjacent to `corner`.
    pub fn arc_position(&self, corner: usize, index: usize, slot: usize) -> usize {
        if slot == (corner + 2) % 3 {
            // corner is the left end of slot
            index
        } else {
            debug_assert_eq!(slot, (corner + 1) % 3);
            let left = (slot + 1) % 3;
            self.corners[left].len() + self.honeycomb_n() + (self.corners[corner].len() - 1 - index)
        }
    }

    /// What sits at `position` on `slot`.
    pub fn end_at(&self, slot: usize, position: usize) -> StrandEnd {
        let left = (slot + 1) % 3;
        let right = (slot + 2) % 3;
        let nl = self.corners[left].len();
        let nh = self.honeycomb_n();
        if position < nl {
            StrandEnd::Corner {
                corner: left,
                index: position,
            }
        } else if position < nl + nh {
            StrandEnd::Honeycomb { index: position - nl }
        } else {
            let from_right = position - nl - nh;
            StrandEnd::Corner {
                corner: right,
                index: self.corners[right].len() - 1 - from_right,
            }
        }
    }

    /// Fock-Goncharov local coordinates.
    pub fn local_coords(&self) -> LocalConePoint {
        self.content().local_coords()
    }

    /// Swaps the letters at `position` and `position + 1` of a corner word.
    /// The letters must differ.
    pub fn corner_transpose(&self, corner: usize, position: usize) -> Result<Self> {
        let word = &self.corners[corner];
        if position + 1 >= word.len() {
            return Err(Error::OutOfRange { corner, position });
        }
        if word[position] == word[position + 1] {
            return Err(Error::EqualLetters { corner, position });
        }
        let mut out = self.clone();
        out.corners[corner].swap(position, position + 1);
        Ok(out)
    }

    /// Disjoint union, concatenating corner words (this web's arcs inner).
    /// `None` when both webs carry a honeycomb.
    pub fn disjoint_union(&self, other: &Self) -> Option<Self> {
        let honeycomb = match (self.honeycomb, other.honeycomb) {
            (Some(_), Some(_)) => return None,
            (h, None) | (None, h) => h,
        };
        let mut corners = self.corners.clone();
        for (c, o) in corners.iter_mut().zip(&other.corners) {
            c.extend_from_slice(o);
        }
        Some(Self { honeycomb, corners })
    }

    /// Every orientation reversed.
    pub fn reversed(&self) -> Self {
        Self {
            honeycomb: self.honeycomb.map(|h| Honeycomb {
                dir: match h.dir {
                    HoneycombDir::In => HoneycombDir::Out,
                    HoneycombDir::Out => HoneycombDir::In,
                },
                n: h.n,
            }),
            corners: self
                .corners
                .clone()
                .map(|w| w.into_iter().map(Letter::flipped).collect()),
        }
    }

    /// Relabels corners and slots `k -> k+1`.
    pub fn rotated(&self) -> Self {
        let [a, b, c] = self.corners.clone();
        Self {
            honeycomb: self.honeycomb,
            corners: [c, a, b],
        }
    }
}

impl fmt::Display for TriangleWeb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.honeycomb {
            Some(h) => write!(f, "H{}{:?}", h.n, h.dir)?,
            None => write!(f, "-")?,
        }
        for w in &self.corners {
            write!(f, " [{}]", Letter::word_string(w))?;
        }
        Ok(())
    }
}

/// A local web with corner orderings forgotten.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalWebContent {
    /// Number of `R` arcs per corner.
    pub r: [u32; 3],
    /// Number of `L` arcs per corner.
    pub l: [u32; 3],
    pub honeycomb: Option<Honeycomb>,
}

/// Coordinates of `R` at corner 0; other corners are obtained by rotating the
/// slot pairs.
const R0: [i64; 7] = [0, 0, 1, 2, 2, 1, 1];
const L0: [i64; 7] = [0, 0, 2, 1, 1, 2, 2];
const H_IN: [i64; 7] = [2, 1, 2, 1, 2, 1, 3];
const H_OUT: [i64; 7] = [1, 2, 1, 2, 1, 2, 3];

fn rotate_pairs(v: [i64; 7], k: usize) -> [i64; 7] {
    let mut out = [0; 7];
    for slot in 0..3 {
        let from = (slot + 3 - k) % 3;
        out[2 * slot] = v[2 * from];
        out[2 * slot + 1] = v[2 * from + 1];
    }
    out[6] = v[6];
    out
}

/// Local coordinates of a single corner arc.
pub fn arc_coords(corner: usize, letter: Letter) -> LocalConePoint {
    let base = match letter {
        Letter::R => R0,
        Letter::L => L0,
    };
    LocalConePoint(rotate_pairs(base, corner))
}

/// Local coordinates of a honeycomb.
pub fn honeycomb_coords(h: Honeycomb) -> LocalConePoint {
    let base = match h.dir {
        HoneycombDir::In => H_IN,
        HoneycombDir::Out => H_OUT,
    };
    LocalConePoint(base.map(|x| x * i64::from(h.n)))
}

impl LocalWebContent {
    /// Sum of the generator vectors of all components.
    pub fn local_coords(&self) -> LocalConePoint {
        let mut acc = LocalConePoint::zero();
        for k in 0..3 {
            acc = acc + arc_coords(k, Letter::R).scaled(i64::from(self.r[k]));
            acc = acc + arc_coords(k, Letter::L).scaled(i64::from(self.l[k]));
        }
        if let Some(h) = self.honeycomb {
            acc = acc + honeycomb_coords(h);
        }
        acc
    }

    /// The representative listing every `R` before every `L` at each corner.
    pub fn canonical_from_counts(&self) -> TriangleWeb {
        let corners = core::array::from_fn(|k| {
            let mut w = Vec::with_capacity((self.r[k] + self.l[k]) as usize);
            w.extend(core::iter::repeat_n(Letter::R, self.r[k] as usize));
            w.extend(core::iter::repeat_n(Letter::L, self.l[k] as usize));
            w
        });
        TriangleWeb {
            honeycomb: self.honeycomb,
            corners,
        }
    }
}

/// Edge-dot pair `(aL, aR)` of an edge carrying `n_in` in-strands and `n_out`
/// out-strands.
pub fn edge_dot_pair(n_in: u32, n_out: u32) -> (i64, i64) {
    let (i, o) = (i64::from(n_in), i64::from(n_out));
    (2 * i + o, i + 2 * o)
}

/// Inverse of [`edge_dot_pair`].
pub fn strand_counts_from_dots(a_left: i64, a_right: i64) -> Result<(u32, u32)> {
    let n_in = 2 * a_left - a_right;
    let n_out = 2 * a_right - a_left;
    if n_in < 0 || n_out < 0 || n_in % 3 != 0 || n_out % 3 != 0 {
        return Err(Error::NotRepresentable(a_left, a_right));
    }
    let conv = |v: i64| u32::try_from(v / 3).map_err(|_| Error::NotRepresentable(a_left, a_right));
    Ok((conv(n_in)?, conv(n_out)?))
}
