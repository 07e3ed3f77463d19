use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::Point;
use crate::error::{Error, Result};

/// Lattice neighbours of `m`: same-level moves `e_k - e_j` and single
/// coordinate steps `+-e_k`.
pub fn neighbors(m: &[i32]) -> Vec<Point> {
    let n = m.len();
    let mut out = Vec::with_capacity(n * (n + 1));
    for k in 0..n {
        for delta in [-1, 1] {
            let mut p = m.to_vec();
            p[k] += delta;
            out.push(p);
        }
        for j in 0..n {
            if j != k {
                let mut p = m.to_vec();
                p[k] += 1;
                p[j] -= 1;
                out.push(p);
            }
        }
    }
    out
}

/// Graph distance in the lattice under [`neighbors`].
///
/// With `g(m) = (-|m|, m)` every move shifts one unit between two
/// coordinates of `g`, so the distance is the positive part of `g(a) - g(b)`.
pub fn lattice_distance(a: &[i32], b: &[i32]) -> u32 {
    let la: i32 = a.iter().sum();
    let lb: i32 = b.iter().sum();
    let mut pos = (lb - la).max(0);
    for (x, y) in a.iter().zip(b) {
        pos += (x - y).max(0);
    }
    pos as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullSimplex {
    /// Componentwise minimum of the support.
    pub corner: Point,
    /// Largest level `|m|` in the support.
    pub top_level: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    n: usize,
    points: BTreeSet<Point>,
}

impl Support {
    pub fn new<I: IntoIterator<Item = Point>>(n: usize, points: I) -> Self {
        let points: BTreeSet<Point> = points.into_iter().collect();
        debug_assert!(points.iter().all(|p| p.len() == n));
        Support { n, points }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn contains(&self, m: &[i32]) -> bool {
        self.points.contains(m)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn components(&self) -> Vec<BTreeSet<Point>> {
        let mut seen: BTreeSet<Point> = BTreeSet::new();
        let mut comps = Vec::new();
        for start in &self.points {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start.clone()]);
            seen.insert(start.clone());
            while let Some(m) = queue.pop_front() {
                for nb in neighbors(&m) {
                    if self.points.contains(&nb) && seen.insert(nb.clone()) {
                        queue.push_back(nb);
                    }
                }
                comp.insert(m);
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn hull(&self) -> Result<HullSimplex> {
        let first = self.points.iter().next().ok_or_else(|| Error::Precondition("empty support".into()))?;
        let mut corner = first.clone();
        let mut top = i32::MIN;
        for m in &self.points {
            for (c, x) in corner.iter_mut().zip(m) {
                *c = (*c).min(*x);
            }
            top = top.max(m.iter().sum());
        }
        Ok(HullSimplex { corner, top_level: top })
    }

    /// Diameter of the hull simplex plus one.
    pub fn size(&self) -> Result<i32> {
        let h = self.hull()?;
        Ok(h.top_level - h.corner.iter().sum::<i32>() + 1)
    }

    /// `(connected, size, hull)`.
    pub fn geometry(&self) -> Result<(bool, i32, HullSimplex)> {
        Ok((self.is_connected(), self.size()?, self.hull()?))
    }

    /// Shortest path length between two support points, moving inside the support.
    pub fn distance(&self, a: &[i32], b: &[i32]) -> Option<u32> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        let mut seen = BTreeSet::from([a.to_vec()]);
        let mut queue = VecDeque::from([(a.to_vec(), 0u32)]);
        while let Some((m, dist)) = queue.pop_front() {
            if m == b {
                return Some(dist);
            }
            for nb in neighbors(&m) {
                if self.points.contains(&nb) && seen.insert(nb.clone()) {
                    queue.push_back((nb, dist + 1));
                }
            }
        }
        None
    }

    /// Translate so that every coordinate attains 0.
    pub fn normalized(&self) -> Support {
        match self.hull() {
            Err(_) => self.clone(),
            Ok(h) => Support::new(
                self.n,
                self.points
                    .iter()
                    .map(|m| m.iter().zip(&h.corner).map(|(x, c)| x - c).collect()),
            ),
        }
    }

    /// First overhang point found, if any.
    pub fn has_overhang(&self) -> Result<Option<Point>> {
        match self.n {
            2 => Ok(self.points.iter().find(|m| overhang_2d(&self.points, m)).cloned()),
            3 => {
                for j in 0..3 {
                    let proj: BTreeSet<Point> = self.points.iter().map(|m| project(j, m)).collect();
                    for m in &self.points {
                        if overhang_2d(&proj, &project(j, m)) {
                            return Ok(Some(m.clone()));
                        }
                    }
                }
                Ok(None)
            }
            n => Err(Error::Dimension(n)),
        }
    }
}

/// The three collapse maps of `Z^3` onto `Z^2`.
pub(crate) fn project(j: usize, m: &[i32]) -> Point {
    match j {
        0 => vec![m[0], m[1] + m[2]],
        1 => vec![m[0] + m[2], m[1]],
        _ => vec![m[0] + m[1], m[2]],
    }
}

fn left_overhang(k: &BTreeSet<Point>, a: i32, b: i32) -> bool {
    if a == 0 && b == 0 {
        return false;
    }
    !k.contains(&vec![a, b - 1]) && !k.iter().any(|p| p[0] == a - 1 && p[1] >= b)
}

pub(crate) fn overhang_2d(k: &BTreeSet<Point>, m: &[i32]) -> bool {
    left_overhang(k, m[0], m[1]) || {
        let swapped: BTreeSet<Point> = k.iter().map(|p| vec![p[1], p[0]]).collect();
        left_overhang(&swapped, m[1], m[0])
    }
}
