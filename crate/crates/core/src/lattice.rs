//! Hypercuboids, their points, and the canonical flat layout.
//!
//! A hypercuboid of width `(r_0, ..., r_{d-1})` is the product of the
//! integer intervals `[0, r_i]` ordered componentwise. Points are stored in
//! *canonical order*: lexicographic, last coordinate varying fastest, so the
//! flat index of `x` is `sum x_i * stride_i` with `stride_{d-1} = 1` and
//! `stride_i = prod_{j > i} (r_j + 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-direction widths `(r_0, ..., r_{d-1})`. Zero entries and the empty
/// width are legal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Width(pub Vec<usize>);

impl Width {
    pub fn new(entries: impl Into<Vec<usize>>) -> Self {
        Width(entries.into())
    }

    /// A hypercube `[r]^d`.
    pub fn cube(r: usize, d: usize) -> Self {
        Width(vec![r; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `|r̄|`, the ℓ1-norm of the top point.
    pub fn l1(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of points, or `None` on overflow.
    pub fn num_points(&self) -> Option<usize> {
        self.0
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r.checked_add(1)?))
    }

    pub fn top(&self) -> Point {
        Point(self.0.clone())
    }

    pub fn zero(&self) -> Point {
        Point(vec![0; self.dim()])
    }

    /// Parses `"r1,r2,..."`; the empty string is the empty width.
    pub fn parse(s: &str) -> Result<Self> {
        parse_coords(s).map(Width)
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A point of a hypercuboid. The width it belongs to is carried by context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<usize>);

impl Point {
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Point(coords.into())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `t·ē_i` in dimension `d`.
    pub fn axis(d: usize, i: usize, t: usize) -> Self {
        let mut c = vec![0; d];
        c[i] = t;
        Point(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn l1(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn join(&self, other: &Point) -> Result<Point> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.join_unchecked(other))
    }

    pub fn meet(&self, other: &Point) -> Result<Point> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.meet_unchecked(other))
    }

    /// The partial order `⪯`.
    pub fn leq(&self, other: &Point) -> Result<bool> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.leq_unchecked(other))
    }

    /// `r̄ − x̄`.
    pub fn complement(&self, width: &Width) -> Result<Point> {
        same_dim(width.dim(), self.dim())?;
        check_in(width, self)?;
        Ok(Point(
            width.0.iter().zip(&self.0).map(|(r, x)| r - x).collect(),
        ))
    }

    pub(crate) fn join_unchecked(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub(crate) fn meet_unchecked(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub(crate) fn leq_unchecked(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn lt_unchecked(&self, other: &Point) -> bool {
        self != other && self.leq_unchecked(other)
    }

    /// `x̄ + ē_i`, if it stays within `width`.
    pub fn step_up(&self, width: &Width, i: usize) -> Option<Point> {
        (self.0[i] < width.0[i]).then(|| {
            let mut c = self.0.clone();
            c[i] += 1;
            Point(c)
        })
    }

    /// `x̄ − ē_i`, if `x_i ≥ 1`.
    pub fn step_down(&self, i: usize) -> Option<Point> {
        (self.0[i] > 0).then(|| {
            let mut c = self.0.clone();
            c[i] -= 1;
            Point(c)
        })
    }

    /// Parses `"x1,x2,..."`.
    pub fn parse(s: &str) -> Result<Self> {
        parse_coords(s).map(Point)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

fn parse_coords(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Malformed(format!("bad coordinate {t:?}: {e}")))
        })
        .collect()
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::WidthMismatch { expected, found })
    }
}

fn check_in(width: &Width, p: &Point) -> Result<()> {
    if p.0.iter().zip(&width.0).all(|(x, r)| x <= r) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            point: p.to_string(),
            width: width.to_string(),
        })
    }
}

/// Index arithmetic over the canonical layout of one hypercuboid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypercuboid {
    width: Width,
    strides: Vec<usize>,
    len: usize,
}

impl Hypercuboid {
    pub fn new(width: Width) -> Result<Self> {
        let len = width.num_points().ok_or(Error::SizeGuard {
            limit: "hypercuboid points",
            size: usize::MAX,
            guard: usize::MAX,
        })?;
        let d = width.dim();
        let mut strides = vec![1; d];
        for i in (0..d.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (width.0[i + 1] + 1);
        }
        Ok(Hypercuboid {
            width,
            strides,
            len,
        })
    }

    pub fn width(&self) -> &Width {
        &self.width
    }

    pub fn dim(&self) -> usize {
        self.width.dim()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && p.0.iter().zip(&self.width.0).all(|(x, r)| x <= r)
    }

    /// Validates membership and returns the canonical index.
    pub fn index(&self, p: &Point) -> Result<usize> {
        same_dim(self.dim(), p.dim())?;
        check_in(&self.width, p)?;
        Ok(self.index_unchecked(p))
    }

    pub(crate) fn index_unchecked(&self, p: &Point) -> usize {
        p.0.iter().zip(&self.strides).map(|(x, s)| x * s).sum()
    }

    pub fn point(&self, mut idx: usize) -> Point {
        debug_assert!(idx < self.len);
        let mut c = vec![0; self.dim()];
        for (i, s) in self.strides.iter().enumerate() {
            c[i] = idx / s;
            idx %= s;
        }
        Point(c)
    }

    /// Coordinate `i` of the point at `idx`.
    pub fn coord(&self, idx: usize, i: usize) -> usize {
        (idx / self.strides[i]) % (self.width.0[i] + 1)
    }

    pub fn up(&self, idx: usize, i: usize) -> Option<usize> {
        (self.coord(idx, i) < self.width.0[i]).then(|| idx + self.strides[i])
    }

    pub fn down(&self, idx: usize, i: usize) -> Option<usize> {
        (self.coord(idx, i) > 0).then(|| idx - self.strides[i])
    }

    /// Index of `r̄ − x̄`; the canonical layout is reversed by complement.
    pub fn complement_index(&self, idx: usize) -> usize {
        self.len - 1 - idx
    }

    pub fn l1_of(&self, idx: usize) -> usize {
        (0..self.dim()).map(|i| self.coord(idx, i)).sum()
    }

    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        (0..self.dim()).all(|i| self.coord(a, i) <= self.coord(b, i))
    }

    pub fn join_index(&self, a: usize, b: usize) -> usize {
        (0..self.dim())
            .map(|i| self.coord(a, i).max(self.coord(b, i)) * self.strides[i])
            .sum()
    }

    pub fn meet_index(&self, a: usize, b: usize) -> usize {
        (0..self.dim())
            .map(|i| self.coord(a, i).min(self.coord(b, i)) * self.strides[i])
            .sum()
    }

    /// Points in canonical order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.len).map(move |k| self.point(k))
    }
}

/// Convenience constructor matching the operation name used by callers.
pub fn make_hypercuboid(width: Width) -> Result<Hypercuboid> {
    Hypercuboid::new(width)
}
