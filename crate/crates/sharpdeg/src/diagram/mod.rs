//! Newton diagrams: the sign pattern of `Q = P / S` on the lattice.
//!
//! A monomial `X^beta` of `Q` (degree `d - 1`) sits at the lattice point
//! `m = (beta_1, ..., beta_n)`; `beta_0 = d - 1 - |m|` is implied.

mod faces;
mod support;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial, Rat, VarStyle};

pub use faces::{face_sc_min, faces_3d, surface_count_3d, Face, FaceKind, FACE_POINT_CAP};
pub use support::{lattice_distance, neighbors, Support};

pub type Point = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    P,
    N,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::P => Sign::N,
            Sign::N => Sign::P,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::P => 1,
            Sign::N => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v.signum() {
            1 => Some(Sign::P),
            -1 => Some(Sign::N),
            _ => None,
        }
    }
}

/// Graded lexicographic order on lattice points.
pub fn grlex_key(m: &[i32]) -> (i32, Vec<i32>) {
    (m.iter().sum(), m.to_vec())
}

/// All points of `N0^n` with `|m| <= max_level`, in graded-lex order.
pub fn simplex_points(n: usize, max_level: i32) -> Vec<Point> {
    let mut out = Vec::new();
    for level in 0..=max_level {
        let mut cur = vec![0; n];
        level_points(n, level, 0, &mut cur, &mut out);
    }
    out.sort_by_key(|m| grlex_key(m));
    out
}

/// Points of `N0^n` with `|m| = level`.
pub fn level_points_of(n: usize, level: i32) -> Vec<Point> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    level_points(n, level, 0, &mut cur, &mut out);
    out.sort_by_key(|m| grlex_key(m));
    out
}

fn level_points(n: usize, left: i32, i: usize, cur: &mut Vec<i32>, out: &mut Vec<Point>) {
    if n == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for v in 0..=left {
        cur[i] = v;
        level_points(n, left - v, i + 1, cur, out);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonDiagram {
    n: usize,
    d: u32,
    signs: BTreeMap<Point, Sign>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Interior,
    Edge,
    Vertex,
    Bottom,
    /// A node in a dimension other than 2, where no finer label is defined.
    Node,
    NotANode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeSite {
    pub alpha: Vec<u32>,
    /// `points[0]` is `alpha'`, `points[k]` is `alpha' - e_k`.
    pub points: Vec<Point>,
    pub values: Vec<i8>,
    pub kind: NodeKind,
}

impl NodeSite {
    pub fn is_node(&self) -> bool {
        self.kind != NodeKind::NotANode
    }
}

impl NewtonDiagram {
    pub fn new(n: usize, d: u32) -> Self {
        NewtonDiagram { n, d, signs: BTreeMap::new() }
    }

    pub fn from_signs<I>(n: usize, d: u32, signs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Point, Sign)>,
    {
        let mut diag = NewtonDiagram::new(n, d);
        for (m, s) in signs {
            diag.set(m, s)?;
        }
        Ok(diag)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn in_simplex(&self, m: &[i32]) -> bool {
        m.len() == self.n && m.iter().all(|&x| x >= 0) && m.iter().sum::<i32>() < self.d as i32
    }

    pub fn set(&mut self, m: Point, s: Sign) -> Result<()> {
        if !self.in_simplex(&m) {
            return Err(Error::Precondition(format!(
                "point {m:?} outside the simplex |m| <= {}",
                self.d as i32 - 1
            )));
        }
        self.signs.insert(m, s);
        Ok(())
    }

    pub fn clear(&mut self, m: &[i32]) {
        self.signs.remove(m);
    }

    pub fn get(&self, m: &[i32]) -> Option<Sign> {
        self.signs.get(m).copied()
    }

    /// +1, -1, or 0 (also 0 for points outside the simplex).
    pub fn value(&self, m: &[i32]) -> i8 {
        self.signs.get(m).map_or(0, |s| s.value())
    }

    pub fn signs(&self) -> &BTreeMap<Point, Sign> {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn support(&self) -> Support {
        Support::new(self.n, self.signs.keys().cloned())
    }

    pub fn flipped(&self) -> NewtonDiagram {
        NewtonDiagram {
            n: self.n,
            d: self.d,
            signs: self.signs.iter().map(|(m, s)| (m.clone(), s.flip())).collect(),
        }
    }

    /// Same signs, embedded in a larger degree.
    pub fn with_degree(&self, d: u32) -> Result<NewtonDiagram> {
        NewtonDiagram::from_signs(self.n, d, self.signs.iter().map(|(m, s)| (m.clone(), *s)))
    }

    /// Diagram of a quotient `Q` of degree `d - 1` in `n + 1` variables.
    pub fn of(q: &Polynomial, d: u32) -> Result<Self> {
        if d == 0 || q.is_zero() || !q.is_homogeneous() || q.degree() != Some(d - 1) {
            return Err(Error::Precondition(format!(
                "quotient must be nonzero and homogeneous of degree {}",
                d as i64 - 1
            )));
        }
        let n = q.n_vars() - 1;
        let mut diag = NewtonDiagram::new(n, d);
        for (beta, c) in q.terms() {
            let m: Point = beta.0[1..].iter().map(|&e| e as i32).collect();
            let s = if c.is_positive() { Sign::P } else { Sign::N };
            diag.signs.insert(m, s);
        }
        Ok(diag)
    }

    /// Unit-magnitude quotient with these signs.
    pub fn realize(&self) -> Polynomial {
        let d = self.d as i32;
        Polynomial::from_terms(
            self.n + 1,
            VarStyle::Projective,
            self.signs.iter().map(|(m, s)| {
                let mut e = Vec::with_capacity(self.n + 1);
                e.push((d - 1 - m.iter().sum::<i32>()) as u32);
                e.extend(m.iter().map(|&x| x as u32));
                let c = if *s == Sign::P { Rat::one() } else { -Rat::one() };
                (MultiIndex(e), c)
            }),
        )
    }

    /// Candidate `alpha'` values whose point set meets the support.
    fn node_candidates(&self) -> BTreeSet<Point> {
        let mut out = BTreeSet::new();
        for m in self.signs.keys() {
            out.insert(m.clone());
            for j in 0..self.n {
                let mut up = m.clone();
                up[j] += 1;
                out.insert(up);
            }
        }
        out
    }

    pub fn site(&self, alpha_prime: &[i32]) -> NodeSite {
        let n = self.n;
        let mut points = Vec::with_capacity(n + 1);
        points.push(alpha_prime.to_vec());
        for j in 0..n {
            let mut p = alpha_prime.to_vec();
            p[j] -= 1;
            points.push(p);
        }
        let values: Vec<i8> = points.iter().map(|p| self.value(p)).collect();
        let nonzero: Vec<i8> = values.iter().copied().filter(|&v| v != 0).collect();
        let is_node = !nonzero.is_empty() && nonzero.iter().all(|&v| v == nonzero[0]);
        let kind = if !is_node {
            NodeKind::NotANode
        } else if n != 2 {
            NodeKind::Node
        } else {
            match values.iter().filter(|&&v| v == 0).count() {
                0 => NodeKind::Interior,
                1 => NodeKind::Edge,
                _ if values[0] != 0 => NodeKind::Bottom,
                _ => NodeKind::Vertex,
            }
        };
        let level: i32 = alpha_prime.iter().sum();
        let mut alpha = Vec::with_capacity(n + 1);
        alpha.push((self.d as i32 - level) as u32);
        alpha.extend(alpha_prime.iter().map(|&x| x as u32));
        NodeSite { alpha, points, values, kind }
    }

    /// All nodes, ordered by `alpha'` in graded-lex order.
    pub fn nodes(&self) -> Vec<NodeSite> {
        let mut cands: Vec<Point> = self.node_candidates().into_iter().collect();
        cands.sort_by_key(|m| grlex_key(m));
        cands
            .iter()
            .map(|a| self.site(a))
            .filter(|s| s.is_node())
            .collect()
    }

    /// `#(D)`.
    pub fn node_count(&self) -> usize {
        self.node_candidates()
            .iter()
            .filter(|a| self.site(a).is_node())
            .count()
    }

    /// `interior + (edge + vertex - bottom) / 2`, where bottom nodes are a
    /// subset of the vertex nodes.
    pub fn weighted_surface_count_2d(&self) -> Result<Rat> {
        if self.n != 2 {
            return Err(Error::Dimension(self.n));
        }
        let mut halves: i64 = 0;
        for site in self.nodes() {
            halves += match site.kind {
                NodeKind::Interior => 2,
                NodeKind::Edge | NodeKind::Vertex => 1,
                _ => 0,
            };
        }
        Ok(Rat::new(halves.into(), 2.into()))
    }

    pub fn bottom_node_count(&self) -> usize {
        self.nodes().iter().filter(|s| s.kind == NodeKind::Bottom).count()
    }

    /// Points with their signs in graded-lex order.
    pub fn sorted_points(&self) -> Vec<(Point, Sign)> {
        let mut v: Vec<(Point, Sign)> = self.signs.iter().map(|(m, s)| (m.clone(), *s)).collect();
        v.sort_by_key(|(m, _)| grlex_key(m));
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DiagramJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: DiagramJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Input(e.to_string()))?;
        NewtonDiagram::from_signs(j.n, j.d, j.points.into_iter().map(|p| (p.m, p.sign)))
    }
}

impl Serialize for NewtonDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson::from(self).serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    d: u32,
    points: Vec<PointJson>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    m: Point,
    sign: Sign,
}

impl From<&NewtonDiagram> for DiagramJson {
    fn from(diag: &NewtonDiagram) -> Self {
        DiagramJson {
            n: diag.n,
            d: diag.d,
            points: diag
                .sorted_points()
                .into_iter()
                .map(|(m, sign)| PointJson { m, sign })
                .collect(),
        }
    }
}

/// Exact weighted count helper in half units.
pub(crate) fn halves(h: i64) -> Rat {
    if h == 0 {
        Rat::zero()
    } else {
        Rat::new(h.into(), 2.into())
    }
}
