//! Knutson-Tao local and global cones.
//!
//! A local cone point is written `(a00, a01, a10, a11, a20, a21, a)`: the
//! (left, right) edge-dot pair of each slot followed by the triangle dot.
//! Rhombus numbers are kept as exact numerators over 3.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::localweb::{Honeycomb, HoneycombDir, LocalWebContent};
use crate::surface::{DotIndexing, IdealTriangulation};

/// Seven integer dot coordinates of one triangle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalConePoint(pub [i64; 7]);

impl LocalConePoint {
    pub fn zero() -> Self {
        Self([0; 7])
    }

    pub fn scaled(self, k: i64) -> Self {
        Self(self.0.map(|x| x * k))
    }
}

impl Add for LocalConePoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for LocalConePoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

/// An exact rational with denominator 3, stored as its numerator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Thirds(pub i64);

impl Thirds {
    pub fn numerator(self) -> i64 {
        self.0
    }

    /// The integer value, if the numerator is divisible by 3.
    pub fn as_integer(self) -> Option<i64> {
        (self.0 % 3 == 0).then_some(self.0 / 3)
    }
}

impl Add for Thirds {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for Thirds {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/3", self.0),
        }
    }
}

/// Rhombus numbers `(r11, r12, r13, r21, r22, r23, r31, r32, r33)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RhombusVector(pub [Thirds; 9]);

impl RhombusVector {
    pub fn numerators(&self) -> [i64; 9] {
        self.0.map(Thirds::numerator)
    }

    /// Entry `r_ij` with 1-based `i` and `j`, matching the usual naming.
    pub fn get(&self, i: usize, j: usize) -> Thirds {
        self.0[3 * (i - 1) + (j - 1)]
    }

    /// Integer values, when every numerator is divisible by 3.
    pub fn as_integers(&self) -> Option<[i64; 9]> {
        let mut out = [0; 9];
        for (o, t) in out.iter_mut().zip(self.0) {
            *o = t.as_integer()?;
        }
        Some(out)
    }
}

impl Add for RhombusVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(core::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

pub fn rhombus_vector(c: &LocalConePoint) -> RhombusVector {
    let [a11, a12, a21, a22, a31, a32, a] = c.0;
    RhombusVector(
        [
            a22 + a31 - a,
            a + a32 - a11 - a31,
            a21 + a - a12 - a22,
            a32 + a11 - a,
            a + a12 - a21 - a11,
            a31 + a - a22 - a32,
            a12 + a21 - a,
            a + a22 - a31 - a21,
            a11 + a - a32 - a12,
        ]
        .map(Thirds),
    )
}

/// All nine rhombus numbers are non-negative integers.
pub fn in_local_cone(c: &LocalConePoint) -> bool {
    rhombus_vector(c)
        .numerators()
        .iter()
        .all(|&n| n >= 0 && n % 3 == 0)
}

/// Tropical X-coordinate of the triangle.
pub fn tropical_x(c: &LocalConePoint) -> Thirds {
    let [a11, a12, a21, a22, a31, a32, _] = c.0;
    Thirds(a11 - a12 + a21 - a22 + a31 - a32)
}

/// Unique decomposition of a local cone point into corner arcs plus at most
/// one honeycomb.
pub fn decompose_local(c: &LocalConePoint) -> Result<LocalWebContent> {
    let r = rhombus_vector(c)
        .as_integers()
        .filter(|r| r.iter().all(|&v| v >= 0))
        .ok_or(Error::NotInCone)?;
    let x = tropical_x(c)
        .as_integer()
        .ok_or_else(|| Error::Internal("x is not an integer on a cone point".into()))?;
    for i in 0..3 {
        if r[3 * i + 2] - r[3 * i + 1] != x {
            return Err(Error::Internal("x disagrees with rhombus differences".into()));
        }
    }
    // Entries r_i1 count R arcs and r_i2 count L arcs at corner i; a negative
    // x means an out-honeycomb absorbed x copies of L from every corner.
    let shift = x.min(0);
    let to_count =
        |v: i64| u32::try_from(v).map_err(|_| Error::Internal("negative arc count in decomposition".into()));
    let mut content = LocalWebContent::default();
    for i in 0..3 {
        content.r[i] = to_count(r[3 * i])?;
        content.l[i] = to_count(r[3 * i + 1] + shift)?;
    }
    content.honeycomb = match x {
        0 => None,
        x if x > 0 => Honeycomb::new(HoneycombDir::In, x as u32),
        x => Honeycomb::new(HoneycombDir::Out, (-x) as u32),
    };
    if content.local_coords() != *c {
        return Err(Error::Internal(
            "decomposition does not reproduce the point".into(),
        ));
    }
    Ok(content)
}

/// Integer vector indexed by the dots of the dotted triangulation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlobalConePoint(pub Vec<i64>);

impl GlobalConePoint {
    pub fn zero(n: usize) -> Self {
        Self(alloc::vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The seven coordinates seen by triangle `t`.
    pub fn local(&self, tri: &IdealTriangulation, idx: &DotIndexing, t: usize) -> LocalConePoint {
        LocalConePoint(idx.triangle_dots(tri, t).map(|i| self.0[i]))
    }

    fn check_len(&self, idx: &DotIndexing) -> Result<()> {
        if self.0.len() != idx.len() {
            return Err(Error::DimensionMismatch {
                expected: idx.len(),
                actual: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Add for &GlobalConePoint {
    type Output = GlobalConePoint;
    fn add(self, rhs: Self) -> GlobalConePoint {
        GlobalConePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Every triangle's induced 7-tuple lies in the local cone.
pub fn in_global_cone(v: &GlobalConePoint, tri: &IdealTriangulation, idx: &DotIndexing) -> Result<bool> {
    v.check_len(idx)?;
    Ok((0..tri.num_triangles()).all(|t| in_local_cone(&v.local(tri, idx, t))))
}

/// Per-triangle contents of a global cone point.
pub fn decompose_global(
    v: &GlobalConePoint,
    tri: &IdealTriangulation,
    idx: &DotIndexing,
) -> Result<Vec<LocalWebContent>> {
    v.check_len(idx)?;
    (0..tri.num_triangles())
        .map(|t| decompose_local(&v.local(tri, idx, t)))
        .collect()
}
