//! Exact integer lattice geometry: points, `ℓ∞` spheres, the plane `F`,
//! frames, sticks, the scale ladder, and path traces.
//!
//! Everything here is plain integer arithmetic so that sphere and frame
//! membership stays bit-exact; all values are immutable after construction
//! and safe to share across workers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Maximal ambient dimension supported by the fixed-size walk buffers.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum LatticeError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("dimension {0} out of supported range 2..={MAX_DIM}")]
    BadDim(usize),
    #[error("point {0:?} is not in the plane F (coordinates 3..d must vanish)")]
    NotInPlane(Vec<i64>),
    #[error("scale ladder overflow: L0={l0}, level {n}")]
    LadderOverflow { l0: i64, n: u32 },
    #[error("invalid L0={0}: must be >= 1")]
    BadL0(i64),
    #[error("invalid path: {0}")]
    BadPath(String),
}

/// A site of `Z^d`. The dimension is the coordinate count.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<i64>);

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Point {
    pub fn new(coords: Vec<i64>) -> Result<Self, LatticeError> {
        if coords.len() < 2 || coords.len() > MAX_DIM {
            return Err(LatticeError::BadDim(coords.len()));
        }
        Ok(Point(coords))
    }

    pub fn origin(dim: usize) -> Result<Self, LatticeError> {
        Self::new(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinatewise difference `self - other`.
    pub fn sub(&self, other: &Point) -> Result<Point, LatticeError> {
        if self.dim() != other.dim() {
            return Err(LatticeError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &Point) -> Result<Point, LatticeError> {
        if self.dim() != other.dim() {
            return Err(LatticeError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `ℓ∞` norm.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// True iff coordinates `3..d` all vanish (membership in the plane `F`).
    /// In `d = 2` the plane is all of `Z^2`.
    pub fn in_plane(&self) -> bool {
        self.0.iter().skip(2).all(|&c| c == 0)
    }
}

/// `ℓ∞` distance between two sites of equal dimension.
pub fn chebyshev(x: &Point, y: &Point) -> Result<i64, LatticeError> {
    if x.dim() != y.dim() {
        return Err(LatticeError::DimMismatch(x.dim(), y.dim()));
    }
    Ok(x.0
        .iter()
        .zip(&y.0)
        .map(|(a, b)| (a - b).abs())
        .max()
        .unwrap_or(0))
}

/// `ℓ1` distance, used by nearest-neighbor path validation.
pub fn taxicab(x: &Point, y: &Point) -> Result<i64, LatticeError> {
    if x.dim() != y.dim() {
        return Err(LatticeError::DimMismatch(x.dim(), y.dim()));
    }
    Ok(x.0.iter().zip(&y.0).map(|(a, b)| (a - b).abs()).sum())
}

/// Number of sites on `S(x, R)` in dimension `d`: `(2R+1)^d - (2R-1)^d`
/// for `R >= 1`, and `1` for `R = 0`.
pub fn sphere_size(dim: usize, radius: i64) -> u128 {
    assert!(radius >= 0, "sphere radius must be nonnegative");
    if radius == 0 {
        return 1;
    }
    let outer = (2 * radius as u128 + 1).pow(dim as u32);
    let inner = (2 * radius as u128 - 1).pow(dim as u32);
    outer - inner
}

/// Iterator over the `ℓ∞` sphere `S(x, R)` that never materializes the ball.
///
/// Sites are classified by the first coordinate index attaining `|c| = R`
/// (with its sign), so each site is produced exactly once.
pub fn sphere_iter(x: &Point, radius: i64) -> impl Iterator<Item = Point> + '_ {
    assert!(radius >= 0, "sphere radius must be nonnegative");
    let dim = x.dim();
    SphereIter {
        center: x,
        radius,
        dim,
        pinned: 0,
        sign: 1,
        free: vec![0; dim],
        started: false,
        done: radius == 0,
        zero_emitted: false,
    }
}

struct SphereIter<'a> {
    center: &'a Point,
    radius: i64,
    dim: usize,
    /// Index of the coordinate pinned at `sign * radius`.
    pinned: usize,
    sign: i64,
    /// Offsets for the non-pinned coordinates: strictly inside for indices
    /// before `pinned`, full range for indices after.
    free: Vec<i64>,
    started: bool,
    done: bool,
    zero_emitted: bool,
}

impl<'a> SphereIter<'a> {
    fn lo(&self, i: usize) -> i64 {
        if i < self.pinned {
            -(self.radius - 1)
        } else {
            -self.radius
        }
    }

    fn hi(&self, i: usize) -> i64 {
        -self.lo(i)
    }

    fn emit(&self) -> Point {
        let mut coords = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let off = if i == self.pinned {
                self.sign * self.radius
            } else {
                self.free[i]
            };
            coords.push(self.center.0[i] + off);
        }
        Point(coords)
    }

    fn reset_free(&mut self) {
        for i in 0..self.dim {
            self.free[i] = self.lo(i);
        }
    }

    /// Odometer increment over the free coordinates; false when exhausted.
    fn advance_free(&mut self) -> bool {
        for i in (0..self.dim).rev() {
            if i == self.pinned {
                continue;
            }
            if self.free[i] < self.hi(i) {
                self.free[i] += 1;
                return true;
            }
            self.free[i] = self.lo(i);
        }
        false
    }
}

impl<'a> Iterator for SphereIter<'a> {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        if self.radius == 0 {
            if self.zero_emitted {
                return None;
            }
            self.zero_emitted = true;
            return Some(self.center.clone());
        }
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.reset_free();
            return Some(self.emit());
        }
        if self.advance_free() {
            return Some(self.emit());
        }
        // Next (pinned, sign) class.
        if self.sign == 1 {
            self.sign = -1;
        } else {
            self.sign = 1;
            self.pinned += 1;
            if self.pinned >= self.dim {
                self.done = true;
                return None;
            }
        }
        self.reset_free();
        Some(self.emit())
    }
}

/// Materialized `ℓ∞` sphere `S(x, R)`, each site exactly once.
pub fn sphere(x: &Point, radius: i64) -> Vec<Point> {
    sphere_iter(x, radius).collect()
}

/// Subset of `points` lying in the plane `F = Z^2 × {0}^{d-2}`.
/// For `d = 2` the plane is all of `Z^2` and the input passes through.
pub fn plane_section(points: &[Point]) -> Vec<Point> {
    points.iter().filter(|p| p.in_plane()).cloned().collect()
}

/// The frame `□_y^L = S(y, L-1) ∩ F`: a planar square ring.
/// `L = 1` yields `{y}`; for `L >= 2` the frame has `8L - 8` sites.
pub fn frame(y: &Point, l: i64) -> Result<Vec<Point>, LatticeError> {
    assert!(l >= 1, "frame parameter L must be >= 1");
    if !y.in_plane() {
        return Err(LatticeError::NotInPlane(y.0.clone()));
    }
    if l == 1 {
        return Ok(vec![y.clone()]);
    }
    let r = l - 1;
    let dim = y.dim();
    let mut out = Vec::with_capacity((8 * l - 8) as usize);
    for dx in -r..=r {
        for dy in -r..=r {
            if dx.abs().max(dy.abs()) != r {
                continue;
            }
            let mut coords = vec![0; dim];
            coords[0] = y.0[0] + dx;
            coords[1] = y.0[1] + dy;
            out.push(Point(coords));
        }
    }
    Ok(out)
}

/// Decomposition of `frame(y, L)` into four corner-overlapping sticks of
/// length `2L - 1` (the view used by the frame capacity bound). Corners are
/// shared between consecutive sticks; the union equals the frame.
pub fn frame_sticks(y: &Point, l: i64) -> Result<[Vec<Point>; 4], LatticeError> {
    assert!(l >= 1, "frame parameter L must be >= 1");
    if !y.in_plane() {
        return Err(LatticeError::NotInPlane(y.0.clone()));
    }
    let r = l - 1;
    let dim = y.dim();
    let mk = |dx: i64, dy: i64| -> Point {
        let mut coords = vec![0; dim];
        coords[0] = y.0[0] + dx;
        coords[1] = y.0[1] + dy;
        Point(coords)
    };
    let mut sides: [Vec<Point>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for t in -r..=r {
        sides[0].push(mk(t, r));
        sides[1].push(mk(t, -r));
        sides[2].push(mk(r, t));
        sides[3].push(mk(-r, t));
    }
    Ok(sides)
}

/// The stick `S_ℓ = {1, ..., ℓ} × {0}^{d-1}`.
pub fn stick(len: i64, dim: usize) -> Vec<Point> {
    assert!(len >= 1, "stick length must be >= 1");
    (1..=len)
        .map(|i| {
            let mut coords = vec![0; dim];
            coords[0] = i;
            Point(coords)
        })
        .collect()
}

/// The geometric scale ladder `L_n = L_0 · 6^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleLadder {
    l0: i64,
}

impl ScaleLadder {
    pub fn new(l0: i64) -> Result<Self, LatticeError> {
        if l0 < 1 {
            return Err(LatticeError::BadL0(l0));
        }
        Ok(ScaleLadder { l0 })
    }

    pub fn l0(&self) -> i64 {
        self.l0
    }

    /// `L_n = L_0 · 6^n`, with overflow detection.
    pub fn level(&self, n: u32) -> Result<i64, LatticeError> {
        6i64
            .checked_pow(n)
            .and_then(|p| self.l0.checked_mul(p))
            .ok_or(LatticeError::LadderOverflow { l0: self.l0, n })
    }
}

/// Path connectivity kinds: nearest-neighbor steps (`ℓ1` distance 1) or
/// star-connected steps (`ℓ∞` distance 1, diagonals allowed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    NearestNeighbor,
    StarConnected,
}

/// A finite lattice path; consecutive sites satisfy the step rule of `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathTrace {
    pub kind: PathKind,
    pub sites: Vec<Point>,
}

impl PathTrace {
    pub fn new(kind: PathKind, sites: Vec<Point>) -> Result<Self, LatticeError> {
        if sites.is_empty() {
            return Err(LatticeError::BadPath("empty path".into()));
        }
        let dim = sites[0].dim();
        for (i, w) in sites.windows(2).enumerate() {
            if w[1].dim() != dim {
                return Err(LatticeError::DimMismatch(dim, w[1].dim()));
            }
            let ok = match kind {
                PathKind::NearestNeighbor => taxicab(&w[0], &w[1])? == 1,
                PathKind::StarConnected => chebyshev(&w[0], &w[1])? == 1,
            };
            if !ok {
                return Err(LatticeError::BadPath(format!(
                    "illegal step at index {}: {:?} -> {:?}",
                    i, w[0], w[1]
                )));
            }
        }
        Ok(PathTrace { kind, sites })
    }

    pub fn dim(&self) -> usize {
        self.sites[0].dim()
    }

    /// Every nearest-neighbor path is also star-connected.
    pub fn as_star_connected(&self) -> PathTrace {
        PathTrace {
            kind: PathKind::StarConnected,
            sites: self.sites.clone(),
        }
    }
}

/// True iff the path range meets both `S(x, r_in)` and `S(x, r_out)`.
pub fn crosses_annulus(path: &PathTrace, x: &Point, r_in: i64, r_out: i64) -> bool {
    assert!(r_in < r_out, "crosses_annulus requires r_in < r_out");
    let mut hit_in = false;
    let mut hit_out = false;
    for s in &path.sites {
        let d = chebyshev(s, x).expect("path/center dimension mismatch");
        hit_in |= d == r_in;
        hit_out |= d == r_out;
        if hit_in && hit_out {
            return true;
        }
    }
    false
}
