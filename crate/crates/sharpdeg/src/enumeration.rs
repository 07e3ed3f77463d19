//! Brute-force harnesses over supports and sign assignments.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{simplex_points, NewtonDiagram, Point, Sign, Support};
use crate::error::{Error, Result};
use crate::poly::{divide_by_s, MultiIndex, Polynomial, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    Connected,
    ContainsOrigin,
    NoOverhang,
    /// The whole simplex `|m| <= d - 1`.
    Maximal,
    /// Size exactly `d` rather than at most `d`.
    ExactSize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    All,
    /// Same as `All`: every sign pattern on a support is realized by a
    /// polynomial with unit coefficients.
    RealizableOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSpec {
    pub n: usize,
    pub d: u32,
    pub constraints: BTreeSet<Constraint>,
    pub sign_mode: SignMode,
    /// Largest simplex (in points) whose subsets are enumerated.
    pub max_simplex_points: usize,
    /// Largest support handed to the sign search.
    pub max_support_points: usize,
}

impl SearchSpec {
    pub fn new(n: usize, d: u32, constraints: &[Constraint]) -> Self {
        SearchSpec {
            n,
            d,
            constraints: constraints.iter().copied().collect(),
            sign_mode: SignMode::All,
            max_simplex_points: 20,
            max_support_points: MAX_SIGN_POINTS,
        }
    }

    /// Number of subsets that will be examined.
    pub fn estimated_cost(&self) -> u64 {
        1u64 << simplex_points(self.n, self.d as i32 - 1).len().min(63)
    }

    fn has(&self, c: Constraint) -> bool {
        self.constraints.contains(&c)
    }
}

pub const MAX_SIGN_POINTS: usize = 24;

/// Normalized supports inside `|m| <= d - 1` meeting the constraints, in
/// canonical order (by bitmask over the graded-lex simplex points).
pub fn enumerate_supports(spec: &SearchSpec) -> Result<Vec<Support>> {
    if spec.n == 0 || spec.d == 0 {
        return Err(Error::Precondition("needs n >= 1 and d >= 1".into()));
    }
    let pts = simplex_points(spec.n, spec.d as i32 - 1);
    if pts.len() > spec.max_simplex_points {
        return Err(Error::CapExceeded {
            what: format!("simplex points (about {} subsets)", spec.estimated_cost()),
            size: pts.len() as u64,
            cap: spec.max_simplex_points as u64,
        });
    }
    if spec.has(Constraint::Maximal) {
        let k = Support::new(spec.n, pts);
        return Ok(if keep(spec, &k)? { vec![k] } else { vec![] });
    }
    let total = 1u64 << pts.len();
    let found: Vec<Result<Option<Support>>> = (1..total)
        .into_par_iter()
        .map(|mask| {
            let k = Support::new(
                spec.n,
                pts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()),
            );
            Ok(if keep(spec, &k)? { Some(k) } else { None })
        })
        .collect();
    found.into_iter().filter_map(|r| r.transpose()).collect()
}

fn keep(spec: &SearchSpec, k: &Support) -> Result<bool> {
    let h = k.hull()?;
    if h.corner.iter().any(|&c| c != 0) {
        return Ok(false);
    }
    if spec.has(Constraint::ExactSize) && k.size()? != spec.d as i32 {
        return Ok(false);
    }
    if spec.has(Constraint::ContainsOrigin) && !k.contains(&vec![0; spec.n]) {
        return Ok(false);
    }
    if spec.has(Constraint::NoOverhang) && k.has_overhang()?.is_some() {
        return Ok(false);
    }
    if spec.has(Constraint::Connected) && !k.is_connected() {
        return Ok(false);
    }
    Ok(true)
}

/// Node sites of a support as bitmasks over its points.
fn site_masks(k: &Support) -> Vec<u32> {
    let index: BTreeMap<&Point, usize> = k.points().iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut cands: BTreeSet<Point> = BTreeSet::new();
    for m in k.points() {
        cands.insert(m.clone());
        for j in 0..k.n() {
            let mut up = m.clone();
            up[j] += 1;
            cands.insert(up);
        }
    }
    cands
        .iter()
        .map(|a| {
            let mut mask = 0u32;
            if let Some(&i) = index.get(a) {
                mask |= 1 << i;
            }
            for j in 0..k.n() {
                let mut p = a.clone();
                p[j] -= 1;
                if let Some(&i) = index.get(&p) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect()
}

/// Exact minimum of `#(D)` over all sign assignments on `K`, with a minimizing diagram.
pub fn min_nodes_over_signs(k: &Support) -> Result<(usize, NewtonDiagram)> {
    let size = k.len();
    if size == 0 {
        return Err(Error::Precondition("empty support".into()));
    }
    if size > MAX_SIGN_POINTS {
        return Err(Error::CapExceeded { what: "support points for sign search".into(), size: size as u64, cap: MAX_SIGN_POINTS as u64 });
    }
    let sites = site_masks(k);
    // the last point is pinned to P; flipping every sign changes nothing
    let top = 1u32 << (size - 1);
    let count = |s: u32| sites.iter().filter(|&&m| s & m == 0 || s & m == m).count();
    let (best, arg) = if size > 14 {
        (0..top)
            .into_par_iter()
            .map(|s| (count(s | top), s | top))
            .min()
            .expect("nonempty")
    } else {
        (0..top).map(|s| (count(s | top), s | top)).min().expect("nonempty")
    };
    let d = k.hull()?.top_level as u32 + 1;
    let diag = NewtonDiagram::from_signs(
        k.n(),
        d,
        k.points().iter().enumerate().map(|(i, p)| (p.clone(), if arg >> i & 1 == 1 { Sign::P } else { Sign::N })),
    )?;
    Ok((best, diag))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Connected supports in two variables: `#(D) >= (d + 5) / 2`.
    #[serde(rename = "T3.4")]
    T34,
    /// Supports without overhang in three variables: `#(D) >= 2d + 2`.
    #[serde(rename = "T5.2")]
    T52,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::T34 => "T3.4",
            Theorem::T52 => "T5.2",
        }
    }

    pub fn bound(self, d: u32) -> usize {
        match self {
            Theorem::T34 => (d as usize + 5).div_ceil(2),
            Theorem::T52 => 2 * d as usize + 2,
        }
    }

    fn max_d(self, long_running: bool) -> u32 {
        match (self, long_running) {
            (Theorem::T34, _) => 5,
            (Theorem::T52, false) => 3,
            (Theorem::T52, true) => 4,
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T3.4" | "T34" => Ok(Theorem::T34),
            "T5.2" | "T52" => Ok(Theorem::T52),
            _ => Err(Error::Input(format!("unknown theorem tag {s:?}; expected T3.4 or T5.2"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelCertificate {
    pub theorem: Theorem,
    pub d: u32,
    pub support_count: usize,
    pub min_nodes: usize,
    pub bound: usize,
    /// A minimizing diagram.
    pub witness: NewtonDiagram,
    pub violations: Vec<NewtonDiagram>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub levels: Vec<LevelCertificate>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.levels.iter().all(|l| l.violations.is_empty() && l.min_nodes >= l.bound)
    }
}

/// Sweep every admissible support of size `d <= d_max` and minimize node counts.
pub fn exhaustive_bound_verify(theorem: Theorem, d_max: u32, long_running: bool) -> Result<Certificate> {
    let cap = theorem.max_d(long_running);
    if d_max > cap {
        return Err(Error::CapExceeded { what: format!("degree for {} sweep", theorem.tag()), size: d_max as u64, cap: cap as u64 });
    }
    let mut levels = Vec::new();
    for d in 1..=d_max {
        let spec = match theorem {
            Theorem::T34 => SearchSpec::new(2, d, &[Constraint::Connected, Constraint::ExactSize]),
            Theorem::T52 => SearchSpec::new(3, d, &[Constraint::NoOverhang, Constraint::ExactSize]),
        };
        let supports = enumerate_supports(&spec)?;
        let bound = theorem.bound(d);
        let mins: Vec<(usize, NewtonDiagram)> =
            supports.iter().map(min_nodes_over_signs).collect::<Result<_>>()?;
        let (min_nodes, witness) = mins
            .iter()
            .min_by_key(|(m, _)| *m)
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("no supports at d = {d}")))?;
        let violations = mins.into_iter().filter(|(m, _)| *m < bound).map(|(_, w)| w).collect();
        levels.push(LevelCertificate { theorem, d, support_count: supports.len(), min_nodes, bound, witness, violations });
    }
    Ok(Certificate { theorem, levels })
}

pub const ORACLE_TERM_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decomposition {
    Indecomposable,
    /// Parts with disjoint monomials, each divisible by `S`, summing to `P`.
    Split(Vec<Polynomial>),
}

impl Decomposition {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Decomposition::Split(_))
    }
}

const PRIME: u64 = (1 << 61) - 1;
const HASH_POINTS: usize = 4;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn rat_mod(c: &Rat) -> u64 {
    let p = BigInt::from(PRIME);
    let num = c.numer().mod_floor(&p).to_u64().expect("reduced");
    let den = c.denom().mod_floor(&p).to_u64().expect("reduced");
    mulmod(num, powmod(den, PRIME - 2))
}

/// Decide whether `P = S Q` splits into monomial-disjoint parts each
/// divisible by `S`, returning the finest split found.
pub fn decomposability_oracle(big_p: &Polynomial) -> Result<Decomposition> {
    divide_by_s(big_p)?;
    let terms: Vec<(MultiIndex, Rat)> = big_p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let n_terms = terms.len();
    if n_terms > ORACLE_TERM_CAP {
        return Err(Error::CapExceeded { what: "terms for the subset oracle".into(), size: n_terms as u64, cap: ORACLE_TERM_CAP as u64 });
    }
    let good = good_subsets(big_p, &terms);
    // split the whole set until no part has a proper good subset
    let full: u32 = if n_terms == 32 { u32::MAX } else { (1u32 << n_terms) - 1 };
    let mut parts = vec![full];
    loop {
        let mut changed = false;
        let mut next = Vec::new();
        for part in parts {
            let sub = good
                .iter()
                .filter(|&&g| g & part == g && g != part && g != 0)
                .min_by_key(|g| (g.count_ones(), **g));
            match sub {
                Some(&g) if is_exact_part(big_p, &terms, part & !g) => {
                    next.push(g);
                    next.push(part & !g);
                    changed = true;
                }
                _ => next.push(part),
            }
        }
        parts = next;
        if !changed {
            break;
        }
    }
    if parts.len() == 1 {
        return Ok(Decomposition::Indecomposable);
    }
    parts.sort_by_key(|&m| m.trailing_zeros());
    Ok(Decomposition::Split(parts.into_iter().map(|m| sub_polynomial(big_p, &terms, m)).collect()))
}

fn sub_polynomial(big_p: &Polynomial, terms: &[(MultiIndex, Rat)], mask: u32) -> Polynomial {
    Polynomial::from_terms(
        big_p.n_vars(),
        big_p.style(),
        terms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| t.clone()),
    )
}

fn is_exact_part(big_p: &Polynomial, terms: &[(MultiIndex, Rat)], mask: u32) -> bool {
    divide_by_s(&sub_polynomial(big_p, terms, mask)).is_ok()
}

/// Proper nonempty subsets whose sub-sum is divisible by `S`, screened by
/// evaluation modulo a prime on random points of `S = 0`, then checked exactly.
fn good_subsets(big_p: &Polynomial, terms: &[(MultiIndex, Rat)]) -> Vec<u32> {
    let n_terms = terms.len();
    let nv = big_p.n_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut vals: Vec<[u64; HASH_POINTS]> = vec![[0; HASH_POINTS]; n_terms];
    for h in 0..HASH_POINTS {
        let mut x: Vec<u64> = (1..nv).map(|_| rng.gen_range(1..PRIME)).collect();
        let sum = x.iter().fold(0u64, |a, &b| (a + b) % PRIME);
        x.insert(0, (PRIME - sum) % PRIME);
        for (t, (m, c)) in terms.iter().enumerate() {
            let mut v = rat_mod(c);
            for (xi, &e) in x.iter().zip(&m.0) {
                v = mulmod(v, powmod(*xi, e as u64));
            }
            vals[t][h] = v;
        }
    }
    if n_terms < 2 {
        return Vec::new();
    }
    // Gray code over subsets of the first n-1 terms; the last term is left out
    // so each complementary pair is visited once
    let free = n_terms - 1;
    let mut acc = [0u64; HASH_POINTS];
    let mut mask = 0u32;
    let mut out = Vec::new();
    let full = (1u32 << n_terms) - 1;
    for step in 1u64..(1u64 << free) {
        let bit = step.trailing_zeros() as usize;
        mask ^= 1 << bit;
        let adding = mask >> bit & 1 == 1;
        for h in 0..HASH_POINTS {
            acc[h] = if adding { (acc[h] + vals[bit][h]) % PRIME } else { (acc[h] + PRIME - vals[bit][h]) % PRIME };
        }
        if acc.iter().all(|&a| a == 0) && is_exact_part(big_p, terms, mask) {
            out.push(mask);
            out.push(full & !mask);
        }
    }
    out
}

/// Components of `supp(Q)` as polynomials `S * Q_i`, when they are
/// monomial-disjoint.
pub fn support_split(big_p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
    let q = divide_by_s(big_p)?;
    let d = big_p.degree().ok_or(Error::ZeroPolynomial)?;
    let diag = NewtonDiagram::of(&q, d)?;
    let comps = diag.support().components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let s = Polynomial::hyperplane(big_p.n_vars() - 1);
    let mut parts = Vec::new();
    let mut seen: BTreeSet<MultiIndex> = BTreeSet::new();
    for comp in comps {
        let qi = Polynomial::from_terms(
            q.n_vars(),
            q.style(),
            q.terms().filter(|(m, _)| {
                let pt: Point = m.0[1..].iter().map(|&e| e as i32).collect();
                comp.contains(&pt)
            }).map(|(m, c)| (m.clone(), c.clone())),
        );
        let part = &s * &qi;
        for (m, _) in part.terms() {
            if !seen.insert(m.clone()) {
                return Ok(None);
            }
        }
        parts.push(part);
    }
    Ok(Some(parts))
}
