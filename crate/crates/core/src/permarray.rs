//! Dot arrays on hypercubes `[r]^d`, and the correspondence between
//! permutation arrays and simple matricubes of rank `r` or `r + 1`.
//!
//! Subarrays are upper principal: `P[x]` keeps the dots `y ⪰ x`.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cryptomorph::flats_of;
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point, Width};
use crate::matricube::{is_simple, Matricube, RankTable};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DotArray {
    r: usize,
    d: usize,
    dots: BTreeSet<Point>,
}

impl DotArray {
    pub fn new(r: usize, d: usize, dots: impl IntoIterator<Item = Point>) -> Result<Self> {
        let cube = Hypercuboid::new(Width::cube(r, d))?;
        let dots: BTreeSet<Point> = dots.into_iter().collect();
        for p in &dots {
            cube.index(p)?;
        }
        Ok(DotArray { r, d, dots })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn width(&self) -> Width {
        Width::cube(self.r, self.d)
    }

    pub fn dots(&self) -> &BTreeSet<Point> {
        &self.dots
    }

    pub fn is_dotted(&self, p: &Point) -> bool {
        self.dots.contains(p)
    }

    /// `P ∪ A`.
    pub fn with(&self, extra: impl IntoIterator<Item = Point>) -> Result<Self> {
        DotArray::new(self.r, self.d, self.dots.iter().cloned().chain(extra))
    }

    /// `P ∖ A`.
    pub fn without(&self, remove: &BTreeSet<Point>) -> Self {
        DotArray {
            r: self.r,
            d: self.d,
            dots: self.dots.difference(remove).cloned().collect(),
        }
    }

    fn above<'a>(&'a self, x: &'a Point) -> impl Iterator<Item = &'a Point> + 'a {
        self.dots.iter().filter(move |y| x.leq_unchecked(y))
    }

    fn points(&self) -> Vec<Point> {
        Hypercuboid::new(self.width())
            .expect("checked")
            .points()
            .collect()
    }
}

/// `rank_j(P[x])`: how many layers `t ∈ [x_j, r]` of the subarray hold a dot.
pub fn rank_along(p: &DotArray, x: &Point, j: usize) -> Result<usize> {
    Hypercuboid::new(p.width())?.index(x)?;
    if j >= p.d {
        return Err(Error::BadDirection { dir: j, dim: p.d });
    }
    Ok(p.above(x).map(|y| y.get(j)).collect::<BTreeSet<_>>().len())
}

/// First point `x` and pair of axes `(i, j)` with `rank_i(P[x]) ≠ rank_j(P[x])`.
pub fn rankability_witness(p: &DotArray) -> Option<(Point, usize, usize)> {
    for x in p.points() {
        let ranks: Vec<usize> = (0..p.d)
            .map(|j| rank_along(p, &x, j).expect("in range"))
            .collect();
        if let Some(j) = (1..p.d).find(|&j| ranks[j] != ranks[0]) {
            return Some((x, 0, j));
        }
    }
    None
}

pub fn is_totally_rankable(p: &DotArray) -> bool {
    rankability_witness(p).is_none()
}

/// The common rank of `P = P[0]` along every axis, if the axes agree.
pub fn rank_of_array(p: &DotArray) -> Option<usize> {
    let zero = Point(vec![0; p.d]);
    let ranks: BTreeSet<usize> = (0..p.d)
        .map(|j| rank_along(p, &zero, j).expect("in range"))
        .collect();
    match ranks.len() {
        0 => Some(0),
        1 => ranks.into_iter().next(),
        _ => None,
    }
}

/// A position `x` is redundant when some `m ≥ 2` dots `y ≠ x`, each sharing
/// a coordinate with `x`, meet in `x`. Adding dots to such a family only
/// moves the meet down towards `x`, so it suffices to test the largest one:
/// every dot `y ⪰ x`, `y ≠ x`, sharing a coordinate with `x`.
pub fn redundant_positions(p: &DotArray) -> BTreeSet<Point> {
    p.points()
        .into_iter()
        .filter(|x| {
            let family: Vec<&Point> = p
                .above(x)
                .filter(|y| *y != x && (0..p.d).any(|k| y.get(k) == x.get(k)))
                .collect();
            family.len() >= 2
                && family
                    .iter()
                    .skip(1)
                    .fold(family[0].clone(), |acc, y| acc.meet_unchecked(y))
                    == *x
        })
        .collect()
}

/// Why `p` is not a permutation array, if it is not one.
pub fn permutation_array_failure(p: &DotArray) -> Option<String> {
    if let Some((x, i, j)) = rankability_witness(p) {
        return Some(format!(
            "subarray at {x} has different ranks along axes {i} and {j}"
        ));
    }
    let rank = rank_of_array(p).expect("totally rankable");
    if rank != p.r + 1 {
        return Some(format!("rank {rank}, expected {}", p.r + 1));
    }
    let redundant = redundant_positions(p);
    if let Some(x) = p.dots.iter().find(|x| redundant.contains(*x)) {
        return Some(format!("redundant dot at {x}"));
    }
    None
}

/// Totally rankable, of rank `r + 1`, with no redundant dots.
pub fn is_permutation_array(p: &DotArray) -> bool {
    permutation_array_failure(p).is_none()
}

/// `rk(a) = r + 1 − rank(P[a])`.
pub fn matricube_from_permarray(p: &DotArray) -> Result<Matricube> {
    if let Some(why) = permutation_array_failure(p) {
        return Err(Error::NotPermutationArray(why));
    }
    let table = RankTable::from_fn(p.width(), |a| {
        let rank = if p.d == 0 {
            p.dots.len()
        } else {
            rank_along(p, a, 0).expect("in range")
        };
        (p.r + 1 - rank) as i64
    })?;
    Matricube::new(table)
}

/// Dots on the flats other than `r̄`, plus `r̄` when the rank is `r`, with
/// the redundant positions of that array removed.
pub fn permarray_from_matricube(m: &Matricube) -> Result<DotArray> {
    let width = m.width();
    let d = width.dim();
    let r = width.entries().first().copied().unwrap_or(0);
    if width.entries().iter().any(|&x| x != r) {
        return Err(Error::NotHypercube(width.to_string()));
    }
    if !is_simple(m) {
        return Err(Error::NotSimple);
    }
    let rank = m.rank_of();
    if rank != r as i64 && rank != r as i64 + 1 {
        return Err(Error::WrongRank { rank, r });
    }
    let top = width.top();
    let mut dots: BTreeSet<Point> = flats_of(m).iter().filter(|a| **a != top).cloned().collect();
    if rank == r as i64 {
        dots.insert(top);
    }
    let full = DotArray { r, d, dots };
    let redundant = redundant_positions(&full);
    Ok(full.without(&redundant))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DotJson {
    r: usize,
    d: usize,
    dots: Vec<Point>,
}

impl Serialize for DotArray {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DotJson {
            r: self.r,
            d: self.d,
            dots: self.dots.iter().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DotArray {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DotJson::deserialize(d)?;
        DotArray::new(raw.r, raw.d, raw.dots).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniform;

    fn square(dots: &[[usize; 2]]) -> DotArray {
        DotArray::new(1, 2, dots.iter().map(|p| Point::new(*p))).unwrap()
    }

    fn pts(v: &[[usize; 2]]) -> BTreeSet<Point> {
        v.iter().map(|p| Point::new(*p)).collect()
    }

    #[test]
    fn ranks_along_axes() {
        let p = square(&[[1, 0], [0, 1]]);
        let zero = Point::new([0, 0]);
        assert_eq!(rank_along(&p, &zero, 0).unwrap(), 2);
        assert_eq!(rank_along(&square(&[]), &zero, 1).unwrap(), 0);
        let top = Point::new([1, 1]);
        assert_eq!(rank_along(&p, &top, 0).unwrap(), 0);
        assert_eq!(rank_along(&square(&[[1, 1]]), &top, 1).unwrap(), 1);
        assert!(rank_along(&p, &zero, 2).is_err());
        assert!(rank_along(&p, &Point::new([2, 0]), 0).is_err());
    }

    #[test]
    fn total_rankability() {
        let p = square(&[[1, 0], [0, 1]]);
        assert!(is_totally_rankable(&p));
        assert_eq!(rank_of_array(&p), Some(2));
        let q = square(&[[1, 1]]);
        assert!(is_totally_rankable(&q));
        assert_eq!(rank_of_array(&q), Some(1));
        let s = square(&[[1, 0]]);
        assert!(is_totally_rankable(&s));
        assert_eq!(rank_of_array(&s), Some(1));
        let bad = square(&[[1, 0], [0, 1], [1, 1]]);
        assert_eq!(rankability_witness(&bad), Some((Point::new([0, 1]), 0, 1)));
    }

    #[test]
    fn redundancy() {
        assert_eq!(
            redundant_positions(&square(&[[1, 0], [0, 1]])),
            pts(&[[0, 0]])
        );
        assert!(redundant_positions(&square(&[[1, 1]])).is_empty());
        assert!(redundant_positions(&square(&[[1, 1], [1, 0]])).is_empty());
    }

    #[test]
    fn permutation_arrays() {
        assert!(is_permutation_array(&square(&[[1, 0], [0, 1]])));
        assert!(!is_permutation_array(&square(&[[1, 1]])));
        let dotted_redundant = square(&[[0, 0], [1, 0], [0, 1]]);
        assert_eq!(
            permutation_array_failure(&dotted_redundant).unwrap(),
            "redundant dot at (0,0)"
        );
        assert!(!is_permutation_array(&square(&[[1, 0], [0, 1], [1, 1]])));
    }

    #[test]
    fn free_square_both_ways() {
        let p = square(&[[1, 0], [0, 1]]);
        let m = matricube_from_permarray(&p).unwrap();
        assert_eq!(m, uniform(Width::new([1, 1]), 2).unwrap());
        assert_eq!(permarray_from_matricube(&m).unwrap(), p);
        let flats: BTreeSet<Point> = flats_of(&m).iter().cloned().collect();
        let mut expected = p.dots().clone();
        expected.extend(redundant_positions(&p));
        expected.insert(Point::new([1, 1]));
        assert_eq!(flats, expected);
    }

    #[test]
    fn rank_r_case() {
        let m = Matricube::from_values(Width::new([1, 1]), vec![0, 1, 1, 1]).unwrap();
        let p = permarray_from_matricube(&m).unwrap();
        assert_eq!(p.dots(), &pts(&[[0, 0], [1, 1]]));
        assert!(is_permutation_array(&p));
        assert_eq!(matricube_from_permarray(&p).unwrap(), m);
    }

    #[test]
    fn preconditions_are_named() {
        let loopy = Matricube::from_values(Width::new([1, 1]), vec![0, 0, 1, 1]).unwrap();
        assert_eq!(permarray_from_matricube(&loopy), Err(Error::NotSimple));
        let rect = uniform(Width::new([2, 1]), 3).unwrap();
        assert!(matches!(
            permarray_from_matricube(&rect),
            Err(Error::NotHypercube(_))
        ));
        let big = uniform(Width::new([2, 2]), 4).unwrap();
        assert_eq!(
            permarray_from_matricube(&big),
            Err(Error::WrongRank { rank: 4, r: 2 })
        );
        assert!(matches!(
            matricube_from_permarray(&square(&[[1, 1]])),
            Err(Error::NotPermutationArray(_))
        ));
    }

    #[test]
    fn json_form() {
        let p = square(&[[1, 0], [0, 1]]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"r":1,"d":2,"dots":[[0,1],[1,0]]}"#);
        assert_eq!(serde_json::from_str::<DotArray>(&s).unwrap(), p);
        assert!(serde_json::from_str::<DotArray>(r#"{"r":1,"d":2,"dots":[[2,0]]}"#).is_err());
    }
}
