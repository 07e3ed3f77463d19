//! Faces of a three dimensional support and their surface counts.
//!
//! A vertical face in direction `j` at height `C` consists of support points
//! `m` with `m_j = C` that have a 0-point among `m - e_j` and `m + e_k - e_j`
//! (the lower-side neighbours across the plane). A
//! horizontal face at level `C` consists of points `m` with `|m| = C` having
//! some upper neighbour `m + e_k` outside the support. Faces are the
//! connected components of these sets inside their plane.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::support::neighbors;
use super::{halves, Point, Support};
use crate::error::{Error, Result};
use crate::poly::Rat;

pub const FACE_POINT_CAP: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FaceKind {
    Vertical { j: usize, c: i32 },
    Horizontal { c: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub kind: FaceKind,
    pub points: BTreeSet<Point>,
}

fn in_plane(kind: FaceKind, m: &[i32]) -> bool {
    match kind {
        FaceKind::Vertical { j, c } => m[j] == c,
        FaceKind::Horizontal { c } => m.iter().sum::<i32>() == c,
    }
}

fn plane_components(kind: FaceKind, pts: &BTreeSet<Point>) -> Vec<BTreeSet<Point>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in pts {
        if seen.contains(s) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![s.clone()];
        seen.insert(s.clone());
        while let Some(m) = stack.pop() {
            for nb in neighbors(&m) {
                if in_plane(kind, &nb) && pts.contains(&nb) && seen.insert(nb.clone()) {
                    stack.push(nb);
                }
            }
            comp.insert(m);
        }
        out.push(comp);
    }
    out
}

pub fn faces_3d(k: &Support) -> Result<Vec<Face>> {
    if k.n() != 3 {
        return Err(Error::Dimension(k.n()));
    }
    let mut groups: BTreeMap<FaceKind, BTreeSet<Point>> = BTreeMap::new();
    for m in k.points() {
        for j in 0..3 {
            // zero neighbours on the lower side of the plane m_j = C
            let open_below = (0..3).any(|l| {
                let mut p = m.clone();
                p[j] -= 1;
                if l != j {
                    p[l] += 1;
                }
                !k.contains(&p)
            });
            if open_below {
                groups.entry(FaceKind::Vertical { j, c: m[j] }).or_default().insert(m.clone());
            }
        }
        let open_above = (0..3).any(|j| {
            let mut up = m.clone();
            up[j] += 1;
            !k.contains(&up)
        });
        if open_above {
            let c = m.iter().sum();
            groups.entry(FaceKind::Horizontal { c }).or_default().insert(m.clone());
        }
    }
    let mut faces = Vec::new();
    for (kind, pts) in groups {
        for comp in plane_components(kind, &pts) {
            faces.push(Face { kind, points: comp });
        }
    }
    Ok(faces)
}

/// A node seen from a face: bitmask of its in-plane face points and its weight in half units.
struct FaceNode {
    mask: u32,
    weight: i64,
}

fn face_nodes(face: &Face, k: &Support, index: &BTreeMap<Point, usize>) -> Vec<FaceNode> {
    let mut cands: BTreeSet<Point> = BTreeSet::new();
    for m in &face.points {
        match face.kind {
            FaceKind::Vertical { j, .. } => {
                cands.insert(m.clone());
                for l in 0..3 {
                    if l != j {
                        let mut up = m.clone();
                        up[l] += 1;
                        cands.insert(up);
                    }
                }
            }
            FaceKind::Horizontal { .. } => {
                for l in 0..3 {
                    let mut up = m.clone();
                    up[l] += 1;
                    cands.insert(up);
                }
            }
        }
    }
    let mut out = Vec::new();
    'cand: for a in cands {
        // in-plane points and the single out-of-plane point
        let (inside, outside): (Vec<Point>, Point) = match face.kind {
            FaceKind::Vertical { j, .. } => {
                let mut pts = vec![a.clone()];
                for l in 0..3 {
                    if l != j {
                        let mut p = a.clone();
                        p[l] -= 1;
                        pts.push(p);
                    }
                }
                let mut o = a.clone();
                o[j] -= 1;
                (pts, o)
            }
            FaceKind::Horizontal { .. } => {
                let pts = (0..3)
                    .map(|l| {
                        let mut p = a.clone();
                        p[l] -= 1;
                        p
                    })
                    .collect();
                (pts, a.clone())
            }
        };
        if k.contains(&outside) {
            continue;
        }
        let mut mask = 0u32;
        let mut present = Vec::with_capacity(3);
        for p in &inside {
            match index.get(p) {
                Some(&i) => {
                    mask |= 1 << i;
                    present.push(true);
                }
                None if k.contains(p) => continue 'cand,
                None => present.push(false),
            }
        }
        let nonzero = present.iter().filter(|&&b| b).count();
        let weight = match (nonzero, face.kind) {
            (0, _) => continue,
            (3, _) => 2,
            (2, _) => 1,
            (_, FaceKind::Horizontal { .. }) => 0,
            // vertical vertex node; a bottom node has only alpha' present
            (_, FaceKind::Vertical { .. }) => {
                if present[0] {
                    0
                } else {
                    1
                }
            }
        };
        if weight > 0 {
            out.push(FaceNode { mask, weight });
        }
    }
    out
}

/// Minimum weighted node count of a face over all sign assignments.
pub fn face_sc_min(face: &Face, k: &Support) -> Result<Rat> {
    let size = face.points.len();
    if size > FACE_POINT_CAP {
        return Err(Error::CapExceeded {
            what: "face points for exhaustive sign search".into(),
            size: size as u64,
            cap: FACE_POINT_CAP as u64,
        });
    }
    if size == 0 {
        return Ok(halves(0));
    }
    let index: BTreeMap<Point, usize> =
        face.points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let nodes = face_nodes(face, k, &index);
    // the last point is pinned to P: a global flip changes nothing
    let free = size - 1;
    let best = (0u32..(1u32 << free))
        .map(|pmask| {
            let pm = pmask | (1 << free);
            nodes
                .iter()
                .filter(|nd| {
                    let on = nd.mask & pm;
                    on == 0 || on == nd.mask
                })
                .map(|nd| nd.weight)
                .sum::<i64>()
        })
        .min()
        .unwrap_or(0);
    Ok(halves(best))
}

/// `SC(K)`: sum of face minima.
pub fn surface_count_3d(k: &Support) -> Result<Rat> {
    let mut total = halves(0);
    for f in faces_3d(k)? {
        total += face_sc_min(&f, k)?;
    }
    Ok(total)
}
