//! Degree bounds, their verification, and the two reductions to two variables.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::dkr_sharp_2d;
use crate::diagram::{simplex_points, NewtonDiagram, Point, Support};
use crate::enumeration::{decomposability_oracle, Decomposition};
use crate::error::{Error, Result};
use crate::poly::{
    class_membership, divide_by_s, homogenize_and_flip, p_degree_and_count, ratio, ser_rat, MultiIndex, Polynomial,
    Rat, VarStyle,
};
use crate::quadrics::{degree_report, MonomialMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundClass {
    Positive2d,
    Positive3d,
    Indecomposable2d,
    /// `N` counts the terms of the homogeneous `P`.
    IndecomposableGeneral,
    /// `N` is the target projective dimension (the map has `N + 1` components).
    Crmap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub tag: String,
    #[serde(serialize_with = "ser_rat")]
    pub value: Rat,
    pub formula: String,
}

fn entry(tag: &str, value: Rat, formula: &str) -> BoundEntry {
    BoundEntry { tag: tag.into(), value, formula: formula.into() }
}

fn r(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn t11i(nn: i64) -> BoundEntry {
    entry("T1.1i", r(2 * nn - 3), "2N-3")
}

fn four_thirds(tag: &str, n: i64, nn: i64) -> BoundEntry {
    entry(tag, ratio(4 * (2 * nn - 3), 3 * (2 * n - 3)), "(4/3)(2N-3)/(2n-3)")
}

fn t71(n: i64, np: i64) -> BoundEntry {
    entry("T7.1", ratio(2 * n * (2 * np - 5), 3 * n * n - 3 * n - 2), "2n(2N-5)/(3n^2-3n-2)")
}

fn t72(n: i64, np: i64) -> BoundEntry {
    entry("T7.2", r((n - 1) * (2 * np - 5)), "(n-1)(2N-5)")
}

fn c74(n: i64, nn: i64) -> BoundEntry {
    entry("C7.4", ratio(nn - 1, n - 1), "(N-1)/(n-1)")
}

/// Bounds on the degree for the given class, as exact rationals.
pub fn bound_table(n: usize, big_n: usize, class: BoundClass) -> Result<Vec<BoundEntry>> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "no degree bound exists for n = {n}: z -> z^d maps the circle to itself for every d"
        )));
    }
    if big_n == 0 {
        return Err(Error::Precondition("term count must be at least 1".into()));
    }
    let (n, nn) = (n as i64, big_n as i64);
    let need = |want: i64| {
        if n == want {
            Ok(())
        } else {
            Err(Error::Dimension(n as usize))
        }
    };
    Ok(match class {
        BoundClass::Positive2d => {
            need(2)?;
            vec![t11i(nn), four_thirds("T1.1ii", n, nn)]
        }
        BoundClass::Positive3d => {
            need(3)?;
            vec![entry("T1.2ii", ratio(nn - 1, 2), "(N-1)/2"), four_thirds("T1.1ii", n, nn)]
        }
        BoundClass::Indecomposable2d => {
            need(2)?;
            vec![entry("T1.2i", r(2 * nn - 3), "2N-3")]
        }
        BoundClass::IndecomposableGeneral => {
            let mut v = vec![four_thirds("T1.2iv", n, nn - 1), t72(n, nn)];
            if n >= 3 {
                v.insert(1, t71(n, nn));
            }
            v
        }
        BoundClass::Crmap => {
            let mut v = Vec::new();
            if n == 2 {
                v.push(entry("T1.3i", r(2 * nn - 3), "2N-3"));
            }
            if n == 3 {
                v.push(entry("T1.3ii", ratio(nn - 1, 2), "(N-1)/2"));
            }
            v.push(entry("T1.3iii", r((n - 1) * (2 * nn - 3)), "(n-1)(2N-3)"));
            v
        }
    })
}

/// How a hypothesis was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Licence {
    /// Checked exactly.
    Proved,
    /// Only suggested by a heuristic; the bound is reported but not asserted.
    Conditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    #[serde(flatten)]
    pub bound: BoundEntry,
    pub licence: Licence,
    pub satisfied: bool,
    pub sharp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub term_count: usize,
    pub actual_degree: u32,
    pub checks: Vec<BoundCheck>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(n: usize, term_count: usize, actual_degree: u32) -> Self {
        BoundReport { n, term_count, actual_degree, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, bound: BoundEntry, licence: Licence) {
        let d = r(self.actual_degree as i64);
        let satisfied = d <= bound.value;
        let sharp = d == bound.value;
        self.checks.push(BoundCheck { bound, licence, satisfied, sharp });
    }

    pub fn get(&self, tag: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.bound.tag == tag)
    }

    /// A proved hypothesis with a failed inequality.
    pub fn violations(&self) -> Vec<&BoundCheck> {
        self.checks.iter().filter(|c| c.licence == Licence::Proved && !c.satisfied).collect()
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations().is_empty()
    }
}

pub enum BoundObject {
    Polynomial(Polynomial),
    Map(MonomialMap),
}

/// Indecomposability of a homogeneous `P` in `SI(n)`: exact for small inputs, by
/// support connectivity otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Indecomposability {
    Indecomposable,
    Decomposable,
    /// Support of `Q` is connected but the exact oracle was not run.
    LikelyIndecomposable,
}

pub fn indecomposability(big_p: &Polynomial) -> Result<Indecomposability> {
    match decomposability_oracle(big_p) {
        Ok(Decomposition::Indecomposable) => Ok(Indecomposability::Indecomposable),
        Ok(Decomposition::Split(_)) => Ok(Indecomposability::Decomposable),
        Err(Error::CapExceeded { .. }) => {
            let q = divide_by_s(big_p)?;
            let d = big_p.degree().ok_or(Error::ZeroPolynomial)?;
            let diag = NewtonDiagram::of(&q, d)?;
            Ok(if diag.support().is_connected() {
                Indecomposability::LikelyIndecomposable
            } else {
                Indecomposability::Decomposable
            })
        }
        Err(e) => Err(e),
    }
}

fn licence_of(ind: Indecomposability) -> Option<Licence> {
    match ind {
        Indecomposability::Indecomposable => Some(Licence::Proved),
        Indecomposability::LikelyIndecomposable => Some(Licence::Conditional),
        Indecomposability::Decomposable => None,
    }
}

pub fn verify_bound(object: &BoundObject) -> Result<BoundReport> {
    match object {
        BoundObject::Map(f) => degree_report(f),
        BoundObject::Polynomial(p) if p.style() == VarStyle::Projective && p.is_homogeneous() => {
            verify_homogeneous(p)
        }
        BoundObject::Polynomial(p) => verify_affine(p),
    }
}

fn verify_affine(p: &Polynomial) -> Result<BoundReport> {
    let n = p.n_vars();
    let rep = class_membership(p, n);
    if !rep.in_i {
        return Err(Error::Precondition("polynomial is not constant 1 on s = 1".into()));
    }
    let nn = p.term_count();
    let mut report = BoundReport::new(n, nn, rep.degree);
    if n < 2 {
        report.notes.push("n = 1: no bound exists".into());
        return Ok(report);
    }
    if rep.in_h {
        if n == 2 {
            for b in bound_table(2, nn, BoundClass::Positive2d)? {
                report.push(b, Licence::Proved);
            }
        } else {
            if n == 3 {
                report.push(bound_table(3, nn, BoundClass::Positive3d)?.remove(0), Licence::Proved);
            }
            report.push(four_thirds("T1.1ii", n as i64, nn as i64), Licence::Proved);
            let d = rep.degree;
            if p.terms().any(|(m, _)| m.degree() == d && m.support_len() <= 3) {
                report.push(c74(n as i64, nn as i64), Licence::Proved);
            }
        }
    }
    let big_p = homogenize_and_flip(p)?;
    let ind = indecomposability(&big_p)?;
    report.notes.push(format!("indecomposability: {}", serde_json::to_value(ind).expect("enum")).replace('"', ""));
    if let Some(lic) = licence_of(ind) {
        if n == 2 {
            report.push(bound_table(2, nn, BoundClass::Indecomposable2d)?.remove(0), lic);
        }
        if n == 3 {
            let diag = NewtonDiagram::of(&divide_by_s(&big_p)?, rep.degree)?;
            if diag.support().has_overhang()?.is_none() {
                report.push(entry("T1.2iii", ratio(nn as i64 - 1, 2), "(N-1)/2"), lic);
            }
        }
        report.push(four_thirds("T1.2iv", n as i64, nn as i64), lic);
        // the projective count is one more than the affine one
        report.push(t72(n as i64, nn as i64 + 1), lic);
    }
    Ok(report)
}

fn verify_homogeneous(big_p: &Polynomial) -> Result<BoundReport> {
    let n = big_p.n_vars() - 1;
    divide_by_s(big_p)?;
    let (pdeg, _, nn) = p_degree_and_count(big_p)?;
    let mut report = BoundReport::new(n, nn, pdeg);
    let ind = indecomposability(big_p)?;
    report.notes.push(format!("indecomposability: {}", serde_json::to_value(ind).expect("enum")).replace('"', ""));
    if let Some(lic) = licence_of(ind) {
        if n == 2 {
            report.push(entry("T1.2i", r(2 * nn as i64 - 5), "2N-5"), lic);
        }
        if n >= 3 && has_pure_monomial(&strip_gcd(big_p)) {
            report.push(t71(n as i64, nn as i64), lic);
        }
        if n >= 2 {
            report.push(t72(n as i64, nn as i64), lic);
        }
    }
    Ok(report)
}

fn strip_gcd(p: &Polynomial) -> Polynomial {
    match p.gcd_monomial() {
        Some(g) => p.divide_monomial(&g),
        None => p.clone(),
    }
}

fn has_pure_monomial(p: &Polynomial) -> bool {
    p.terms().any(|(m, _)| m.support_len() == 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct PullbackAccounting {
    pub d: u32,
    #[serde(rename = "D")]
    pub big_d: u32,
    /// Variable renaming applied so the pure monomial is `X_n^d`.
    pub permutation: Vec<usize>,
    #[serde(serialize_with = "crate::poly::ser_rat_vec")]
    pub c: Vec<Rat>,
    pub witness: Vec<u32>,
    pub degree_lower_bound: u32,
    pub composed_p_degree: u32,
    pub input_terms: usize,
    pub composed_terms: usize,
    #[serde(serialize_with = "ser_rat")]
    pub bound: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct PullbackResult {
    pub composed: Polynomial,
    pub accounting: PullbackAccounting,
}

/// Compose `P` (with a pure monomial) with the sign-flipped sharp
/// two-variable map of degree `2n - 3`.
pub fn pullback_compose(big_p: &Polynomial) -> Result<PullbackResult> {
    if big_p.n_vars() < 4 {
        return Err(Error::Precondition("pullback needs n >= 3 (at least four homogeneous variables)".into()));
    }
    let n = big_p.n_vars() - 1;
    divide_by_s(big_p)?;
    let p0 = strip_gcd(big_p);
    let d = p0.degree().ok_or(Error::ZeroPolynomial)?;
    let pure = p0
        .terms()
        .find(|(m, _)| m.support_len() == 1)
        .map(|(m, _)| m.0.iter().position(|&e| e > 0).expect("pure"))
        .ok_or_else(|| Error::Precondition("no pure monomial".into()))?;
    let mut perm: Vec<usize> = (0..=n).collect();
    perm.swap(pure, n);
    let p = p0.permute(&perm);
    if indecomposability(&p)? == Indecomposability::Decomposable {
        return Err(Error::Precondition("input is decomposable".into()));
    }

    let big_d = 2 * n as u32 - 3;
    let dkr = dkr_sharp_2d(big_d)?;
    let c: Vec<Rat> = (1..=n as u32 - 2)
        .map(|j| dkr.coeff(&MultiIndex(vec![big_d - 2 * j, j])))
        .collect();
    if c.iter().any(|x| !x.is_positive()) {
        return Err(Error::Contradiction("sharp map coefficients must be positive".into()));
    }
    // X_k -> sigma_k * mag_k * u^a v^b t^c
    let mut images: Vec<(Rat, [u32; 3])> = vec![(Rat::one(), [big_d, 0, 0]), (Rat::one(), [0, big_d, 0])];
    for (j, cj) in c.iter().enumerate() {
        let j = j as u32 + 1;
        let sign = if j % 2 == 1 { -Rat::one() } else { Rat::one() };
        images.push((sign * cj, [big_d - 2 * j, j, j]));
    }
    images.push((Rat::one(), [0, 0, big_d]));

    let image_of = |m: &MultiIndex| -> (Rat, MultiIndex) {
        let mut coeff = Rat::one();
        let mut e = [0u32; 3];
        for (k, &a) in m.0.iter().enumerate() {
            for _ in 0..a {
                coeff *= &images[k].0;
            }
            for (x, y) in e.iter_mut().zip(images[k].1) {
                *x += a * y;
            }
        }
        (coeff, MultiIndex(e.to_vec()))
    };
    let composed = Polynomial::from_terms(
        3,
        VarStyle::Projective,
        p.terms().map(|(m, c)| {
            let (k, e) = image_of(m);
            (e, k * c)
        }),
    );
    divide_by_s(&composed)
        .map_err(|_| Error::Contradiction("composition is not divisible by u + v + t".into()))?;
    if composed.term_count() > p.term_count() {
        return Err(Error::Contradiction("composition increased the term count".into()));
    }

    let mut best: Option<(u32, Vec<u32>)> = None;
    for (m, _) in p.terms() {
        if m.0[n] != 0 {
            continue;
        }
        if m.degree() != d {
            return Err(Error::Contradiction("exponents of a witness must sum to d".into()));
        }
        let (_, e) = image_of(m);
        if composed.coeff(&e).is_zero() {
            continue;
        }
        let loss: u32 = (2..n).map(|j| (j as u32 - 1) * m.0[j]).sum();
        let lb = d * big_d - loss;
        if best.as_ref().map_or(true, |(b, _)| lb > *b) {
            best = Some((lb, m.0.clone()));
        }
    }
    let (lb, witness) =
        best.ok_or_else(|| Error::Contradiction("no surviving monomial free of the pure variable".into()))?;
    let (cpdeg, _, _) = p_degree_and_count(&composed)?;
    if cpdeg < lb {
        return Err(Error::Contradiction(format!("composed p-degree {cpdeg} below its lower bound {lb}")));
    }
    let bound = t71(n as i64, p.term_count() as i64).value;
    if r(d as i64) > bound {
        return Err(Error::Contradiction(format!("p-degree {d} exceeds {bound}")));
    }
    let composed_terms = composed.term_count();
    Ok(PullbackResult {
        composed,
        accounting: PullbackAccounting {
            d,
            big_d,
            permutation: perm,
            c,
            witness,
            degree_lower_bound: lb,
            composed_p_degree: cpdeg,
            input_terms: p.term_count(),
            composed_terms,
            bound,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseResult {
    pub collapsed: Polynomial,
    /// `ordering[k]` is the new index of old variable `k`.
    pub ordering: Vec<usize>,
    #[serde(serialize_with = "crate::poly::ser_rat_vec")]
    pub x_prime: Vec<Rat>,
    pub tries: usize,
    pub p_degree: u32,
    pub collapsed_p_degree: u32,
    #[serde(serialize_with = "ser_rat")]
    pub bound: Rat,
}

const COLLAPSE_TRIES: usize = 4000;

/// Points with positive rational coordinates summing to 1, denominators `2..=97`.
fn x_prime_sequence(k: usize) -> impl Iterator<Item = Vec<Rat>> {
    (k.max(1) as i64..=97).flat_map(move |q| {
        let mut out = Vec::new();
        compositions(q, k, &mut Vec::new(), &mut out, 64);
        out.into_iter().map(move |parts| parts.into_iter().map(|a| ratio(a, q)).collect::<Vec<_>>())
    })
}

fn compositions(left: i64, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>, cap: usize) {
    if out.len() >= cap {
        return;
    }
    if parts == 1 {
        if left >= 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    for a in 1..left {
        cur.push(a);
        compositions(left - a, parts - 1, cur, out, cap);
        cur.pop();
    }
}

/// `P(X0, X1, X2 T, ..., Xn T)` with `X2 + ... + Xn = 1` fixed at a
/// non-cancelling rational point.
pub fn collapse_to_two_vars(big_p: &Polynomial) -> Result<CollapseResult> {
    if big_p.n_vars() < 3 {
        return Err(Error::Precondition("collapse needs n >= 2".into()));
    }
    let n = big_p.n_vars() - 1;
    divide_by_s(big_p)?;
    let p0 = strip_gcd(big_p);
    let d = p0.degree().ok_or(Error::ZeroPolynomial)?;
    if indecomposability(&p0)? == Indecomposability::Decomposable {
        return Err(Error::Precondition("input is decomposable".into()));
    }
    // keep the pair of variables with the largest combined exponent
    let mut best = (0u32, 0usize, 1usize);
    for i in 0..=n {
        for j in i + 1..=n {
            let top = p0.terms().map(|(m, _)| m.0[i] + m.0[j]).max().unwrap_or(0);
            if top > best.0 {
                best = (top, i, j);
            }
        }
    }
    let (_, i, j) = best;
    let mut ordering: Vec<usize> = vec![usize::MAX; n + 1];
    ordering[i] = 0;
    ordering[j] = 1;
    let mut next = 2;
    for (k, slot) in ordering.iter_mut().enumerate() {
        if k != i && k != j {
            *slot = next;
            next += 1;
        }
    }
    let p = p0.permute(&ordering);
    let q = divide_by_s(&p)?;
    let q_diag = NewtonDiagram::of(&q, d)?;

    // coefficient of X0^a X1^b in Q, grouped, as functions of X'
    let mut groups: BTreeMap<(u32, u32), Vec<(Vec<u32>, Rat)>> = BTreeMap::new();
    for (m, c) in q.terms() {
        groups.entry((m.0[0], m.0[1])).or_default().push((m.0[2..].to_vec(), c.clone()));
    }

    for (tries, xp) in x_prime_sequence(n - 1).take(COLLAPSE_TRIES).enumerate() {
        let survives = groups.values().all(|terms| {
            let mut acc = Rat::zero();
            for (e, c) in terms {
                let mut v = c.clone();
                for (x, &k) in xp.iter().zip(e) {
                    for _ in 0..k {
                        v *= x;
                    }
                }
                acc += v;
            }
            !acc.is_zero()
        });
        if !survives {
            continue;
        }
        let collapsed = Polynomial::from_terms(
            3,
            VarStyle::Projective,
            p.terms().map(|(m, c)| {
                let mut v = c.clone();
                for (x, &k) in xp.iter().zip(&m.0[2..]) {
                    for _ in 0..k {
                        v *= x;
                    }
                }
                let t: u32 = m.0[2..].iter().sum();
                (MultiIndex(vec![m.0[0], m.0[1], t]), v)
            }),
        );
        let q2 = divide_by_s(&collapsed)
            .map_err(|_| Error::Contradiction("collapsed polynomial is not divisible by X0 + X1 + T".into()))?;
        let (cpdeg, _, _) = p_degree_and_count(&collapsed)?;
        if r(cpdeg as i64 * (n as i64 - 1)) < r(d as i64) {
            return Err(Error::Contradiction(format!("collapsed p-degree {cpdeg} below d/(n-1)")));
        }
        if q_diag.support().is_connected() && !NewtonDiagram::of(&q2, d)?.support().is_connected() {
            return Err(Error::Contradiction("collapse disconnected the support".into()));
        }
        let bound = t72(n as i64, p.term_count() as i64).value;
        if r(d as i64) > bound {
            return Err(Error::Contradiction(format!("p-degree {d} exceeds {bound}")));
        }
        return Ok(CollapseResult {
            collapsed,
            ordering,
            x_prime: xp,
            tries: tries + 1,
            p_degree: d,
            collapsed_p_degree: cpdeg,
            bound,
        });
    }
    Err(Error::CapExceeded { what: "rational points tried for a non-cancelling X'".into(), size: COLLAPSE_TRIES as u64, cap: COLLAPSE_TRIES as u64 })
}

#[derive(Clone, Debug, Serialize)]
pub struct DependenceReport {
    pub degree: u32,
    pub counts: Vec<usize>,
    /// Present when `p` has a degree-`d` monomial in at most three variables.
    pub corollary: Option<BoundReport>,
}

/// Number of terms depending on each variable, which must be at least `d`.
pub fn variable_dependence_check(p: &Polynomial) -> Result<DependenceReport> {
    let n = p.n_vars();
    if n < 3 {
        return Err(Error::Precondition(
            "needs n >= 3: in two variables a variable can appear in fewer than d terms".into(),
        ));
    }
    let rep = class_membership(p, n);
    if !rep.in_h {
        return Err(Error::Precondition("polynomial is not in the positive class".into()));
    }
    let d = rep.degree;
    let counts: Vec<usize> = (0..n).map(|j| p.terms().filter(|(m, _)| m.0[j] > 0).count()).collect();
    if let Some(j) = counts.iter().position(|&c| c < d as usize) {
        return Err(Error::Contradiction(format!("x{} appears in {} < {d} terms", j + 1, counts[j])));
    }
    let corollary = if p.terms().any(|(m, _)| m.degree() == d && m.support_len() <= 3) {
        let mut r = BoundReport::new(n, p.term_count(), d);
        r.push(c74(n as i64, p.term_count() as i64), Licence::Proved);
        if !r.all_satisfied() {
            return Err(Error::Contradiction(format!("degree {d} exceeds (N-1)/(n-1)")));
        }
        Some(r)
    } else {
        None
    };
    Ok(DependenceReport { degree: d, counts, corollary })
}

pub const OBSERVATION_FACE_CAP: usize = 22;
pub const OBSERVATION_BRUTE_CAP: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct ObservationVerdict {
    pub d: u32,
    /// Minimum of `(edge nodes)/3 + (interior nodes)` over signs on one 2-face.
    #[serde(serialize_with = "ser_rat")]
    pub face_minimum: Rat,
    /// `5 + 10 * face_minimum`.
    #[serde(serialize_with = "ser_rat")]
    pub certified_lower_bound: Rat,
    /// Exact minimum over all sign assignments when the simplex is small enough.
    pub brute_force_minimum: Option<usize>,
    pub whitney_nodes: usize,
    pub target: u32,
    pub certified: bool,
}

/// Node count of a full-simplex diagram in four variables versus the
/// Whitney diagrams with `3d + 2` nodes.
pub fn filled_observation_check(n: usize, d: u32) -> Result<ObservationVerdict> {
    if n != 4 {
        return Err(Error::Dimension(n));
    }
    if d < 2 {
        return Err(Error::Precondition("needs d >= 2".into()));
    }
    let tri = simplex_points(2, d as i32 - 1);
    if tri.len() > OBSERVATION_FACE_CAP {
        return Err(Error::CapExceeded { what: "points on a 2-face".into(), size: tri.len() as u64, cap: OBSERVATION_FACE_CAP as u64 });
    }
    let face_minimum = face_minimum_2d(d);
    // the five pure powers are always nodes; each of the 10 two-faces
    // contributes its interior nodes plus a third of each edge node
    let certified_lower_bound = r(5) + r(10) * &face_minimum;

    let full = simplex_points(4, d as i32 - 1);
    let brute_force_minimum = if full.len() <= OBSERVATION_BRUTE_CAP {
        let k = Support::new(4, full.clone());
        Some(crate::enumeration::min_nodes_over_signs(&k)?.0)
    } else {
        None
    };
    let w = crate::constructions::whitney(4, d, None)?;
    let q = divide_by_s(&homogenize_and_flip(&w)?)?;
    let whitney_nodes = NewtonDiagram::of(&q, d)?.node_count();
    let target = 3 * d + 2;
    let certified = certified_lower_bound > r(target as i64)
        && brute_force_minimum.map_or(true, |m| m > target as usize);
    Ok(ObservationVerdict {
        d,
        face_minimum,
        certified_lower_bound,
        brute_force_minimum,
        whitney_nodes,
        target,
        certified,
    })
}

/// Exhaustive minimum of `edge/3 + interior` for a filled triangle of size `d`.
fn face_minimum_2d(d: u32) -> Rat {
    let pts = simplex_points(2, d as i32 - 1);
    let index: BTreeMap<Point, usize> = pts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // homogeneous alpha of degree d in 3 coordinates, excluding the corners
    let mut sites: Vec<(u32, bool)> = Vec::new();
    let mut seen = BTreeSet::new();
    for a in simplex_points(2, d as i32) {
        if !seen.insert(a.clone()) {
            continue;
        }
        let alpha0 = d as i32 - a[0] - a[1];
        let nonzero = [alpha0, a[0], a[1]].iter().filter(|&&x| x > 0).count();
        if nonzero == 1 {
            continue;
        }
        let mut mask = 0u32;
        let mut cands = vec![a.clone()];
        for j in 0..2 {
            let mut p = a.clone();
            p[j] -= 1;
            cands.push(p);
        }
        for p in cands {
            if let Some(&i) = index.get(&p) {
                mask |= 1 << i;
            }
        }
        sites.push((mask, nonzero == 3));
    }
    let size = pts.len();
    let best = (0u32..(1u32 << (size - 1)))
        .into_par_iter()
        .map(|s| {
            let s = s | (1 << (size - 1));
            let (mut edge, mut interior) = (0i64, 0i64);
            for &(mask, inner) in &sites {
                let on = s & mask;
                if on == 0 || on == mask {
                    if inner {
                        interior += 1;
                    } else {
                        edge += 1;
                    }
                }
            }
            edge + 3 * interior
        })
        .min()
        .unwrap_or(0);
    ratio(best, 3)
}
