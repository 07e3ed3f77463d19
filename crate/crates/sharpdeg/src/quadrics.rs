//! Monomial maps between hyperquadrics and their real polynomials.
//!
//! Complex coefficients only enter through `|C|^2`, which is stored as a
//! positive rational.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_table, BoundClass, BoundReport, Licence};
use crate::enumeration::ORACLE_TERM_CAP;
use crate::error::{Error, Result};
use crate::poly::{class_membership, divide_by_s, MultiIndex, Polynomial, Rat, VarStyle};

/// `Q(a, b)` in `CP^{a+b}`: in homogeneous coordinates the first `a`
/// variables carry `+|z|^2` and the remaining `b + 1` carry `-|z|^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperquadricSignature {
    pub positive: usize,
    pub negative: usize,
}

impl HyperquadricSignature {
    pub fn new(positive: usize, negative: usize) -> Result<Self> {
        if positive == 0 {
            return Err(Error::Input("a hyperquadric needs at least one positive term".into()));
        }
        Ok(HyperquadricSignature { positive, negative })
    }

    pub fn sphere(n: usize) -> Self {
        HyperquadricSignature { positive: n, negative: 0 }
    }

    /// Number of homogeneous coordinates.
    pub fn coords(&self) -> usize {
        self.positive + self.negative + 1
    }

    pub fn is_sphere(&self) -> bool {
        self.negative == 0
    }

    /// The real defining form `x_0 + ... + x_{a-1} - x_a - ... - x_{a+b}`.
    pub fn real_form(&self) -> Polynomial {
        let n = self.coords();
        Polynomial::from_terms(
            n,
            VarStyle::Projective,
            (0..n).map(|k| {
                let c = if k < self.positive { Rat::one() } else { -Rat::one() };
                (MultiIndex::unit(n, k), c)
            }),
        )
    }
}

impl fmt::Display for HyperquadricSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({},{})", self.positive, self.negative)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slot {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// `|C|^2`, strictly positive.
    #[serde(with = "rat_text")]
    pub weight: Rat,
    pub exponent: Vec<u32>,
    pub slot: Slot,
}

mod rat_text {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Rat>().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub source: HyperquadricSignature,
    pub target: HyperquadricSignature,
    pub components: Vec<Component>,
}

impl MonomialMap {
    pub fn new(source: HyperquadricSignature, target: HyperquadricSignature, components: Vec<Component>) -> Result<Self> {
        let n = source.coords();
        if components.is_empty() {
            return Err(Error::Input("a map needs at least one component".into()));
        }
        let d: u32 = components[0].exponent.iter().sum();
        for c in &components {
            if c.exponent.len() != n {
                return Err(Error::VariableCountMismatch { left: n, right: c.exponent.len() });
            }
            if c.exponent.iter().sum::<u32>() != d {
                return Err(Error::NotHomogeneous);
            }
            if !c.weight.is_positive() {
                return Err(Error::Input("component weights |C|^2 must be positive".into()));
            }
        }
        let pos = components.iter().filter(|c| c.slot == Slot::Positive).count();
        let neg = components.len() - pos;
        if pos != target.positive || neg != target.negative + 1 {
            return Err(Error::Input(format!(
                "target {target} needs {} positive and {} negative components, got {pos} and {neg}",
                target.positive,
                target.negative + 1
            )));
        }
        Ok(MonomialMap { source, target, components })
    }

    pub fn degree(&self) -> u32 {
        self.components[0].exponent.iter().sum()
    }

    /// No exponent appears twice.
    pub fn has_independent_components(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.components.iter().all(|c| seen.insert(c.exponent.clone()))
    }

    /// Identity map of `Q(a, b)`.
    pub fn identity(sig: HyperquadricSignature) -> Self {
        let n = sig.coords();
        let components = (0..n)
            .map(|k| Component {
                weight: Rat::one(),
                exponent: MultiIndex::unit(n, k).0,
                slot: if k < sig.positive { Slot::Positive } else { Slot::Negative },
            })
            .collect();
        MonomialMap { source: sig, target: sig, components }
    }

    /// Sub-map on some components, with the target signature they span.
    pub fn restrict(&self, idx: &[usize]) -> Result<MonomialMap> {
        let components: Vec<Component> = idx.iter().map(|&i| self.components[i].clone()).collect();
        let pos = components.iter().filter(|c| c.slot == Slot::Positive).count();
        let neg = components.len() - pos;
        if pos == 0 || neg == 0 {
            return Err(Error::Input("a sub-map needs components of both signs".into()));
        }
        MonomialMap::new(self.source, HyperquadricSignature { positive: pos, negative: neg - 1 }, components)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "map source={} target={} [", self.source, self.target)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ;")?;
            }
            let mono: Vec<String> = c
                .exponent
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, e)| format!("z{k}^{e}"))
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join(" ") };
            let sign = if c.slot == Slot::Positive { '+' } else { '-' };
            write!(f, " {mono} : {sign}{}", c.weight)?;
        }
        write!(f, " ]")
    }
}

/// `sum_pos |C|^2 x^alpha - sum_neg |C|^2 x^alpha`.
pub fn real_polynomial_of_map(f: &MonomialMap) -> Polynomial {
    Polynomial::from_terms(
        f.source.coords(),
        VarStyle::Projective,
        f.components.iter().map(|c| {
            let w = if c.slot == Slot::Positive { c.weight.clone() } else { -c.weight.clone() };
            (MultiIndex(c.exponent.clone()), w)
        }),
    )
}

/// Sphere map of a polynomial in the positive class: `z_0..z_{n-1}` play
/// `x_1..x_n`, `z_n` homogenizes, and `-|z_n^d|^2` is the one negative component.
pub fn map_of_positive_polynomial(p: &Polynomial) -> Result<MonomialMap> {
    let n = p.n_vars();
    if !p.has_nonnegative_coefficients() {
        return Err(Error::Precondition("polynomial has a negative coefficient".into()));
    }
    let rep = class_membership(p, n);
    if !rep.in_h {
        return Err(Error::Precondition("polynomial is not 1 on s = 1".into()));
    }
    let d = rep.degree;
    let mut components: Vec<Component> = p
        .terms()
        .map(|(m, c)| {
            let mut e = m.0.clone();
            e.push(d - m.degree());
            Component { weight: c.clone(), exponent: e, slot: Slot::Positive }
        })
        .collect();
    let mut top = vec![0; n + 1];
    top[n] = d;
    components.push(Component { weight: Rat::one(), exponent: top, slot: Slot::Negative });
    MonomialMap::new(HyperquadricSignature::sphere(n), HyperquadricSignature::sphere(p.term_count()), components)
}

/// Inverse of [`map_of_positive_polynomial`]: set `x_n = 1` and add 1.
pub fn positive_polynomial_of_map(f: &MonomialMap) -> Result<Polynomial> {
    if !f.source.is_sphere() || !f.target.is_sphere() {
        return Err(Error::Precondition("expected a map between spheres".into()));
    }
    let real = real_polynomial_of_map(f);
    let n = f.source.coords() - 1;
    let mut p = real.map_monomials(n, VarStyle::Affine, |m, c| (MultiIndex(m.0[..n].to_vec()), c.clone()));
    p = &p + &Polynomial::constant(n, VarStyle::Affine, Rat::one());
    Ok(p)
}

/// The real polynomial vanishes on the source form's zero set.
pub fn verify_quadric_map(f: &MonomialMap) -> bool {
    let real = real_polynomial_of_map(f);
    if real.is_zero() {
        return true;
    }
    let flip: Vec<bool> = (0..f.source.coords()).map(|k| k >= f.source.positive).collect();
    divide_by_s(&real.flip_signs(&flip)).is_ok()
}

/// The decomposable family of degree `d`:
/// `[z2^{d-1} z0, z2^{d-1} z1, z0^d, z0^{d-1} z1, z2^d, z0^{d-1} z2]` from `Q(2,0)` to `Q(4,1)`.
pub fn reducible_map_example(d: u32) -> Result<MonomialMap> {
    if d == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let c = |e: [u32; 3], slot| Component { weight: Rat::one(), exponent: e.to_vec(), slot };
    MonomialMap::new(
        HyperquadricSignature::sphere(2),
        HyperquadricSignature::new(4, 1)?,
        vec![
            c([1, 0, d - 1], Slot::Positive),
            c([0, 1, d - 1], Slot::Positive),
            c([d, 0, 0], Slot::Positive),
            c([d - 1, 1, 0], Slot::Positive),
            c([0, 0, d], Slot::Negative),
            c([d - 1, 0, 1], Slot::Negative),
        ],
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapDecomposition {
    Indecomposable,
    /// Component indices of the two groups.
    Decomposable(Vec<usize>, Vec<usize>),
    Indeterminate,
}

impl MapDecomposition {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, MapDecomposition::Decomposable(..))
    }
}

pub const MAP_ORACLE_CAP: usize = ORACLE_TERM_CAP;
const SCREEN_POINTS: usize = 3;

/// Integer points on the source form's zero set.
fn screen_points(f: &MonomialMap) -> Vec<Vec<i64>> {
    let n = f.source.coords();
    let a = f.source.positive;
    (0..SCREEN_POINTS)
        .map(|s| {
            // small distinct values, then solve for x_0
            let mut x: Vec<i64> = (0..n).map(|k| 2 + ((k as i64 * 7 + s as i64 * 5 + k as i64 * s as i64 * 3) % 11)).collect();
            let rest: i64 = (1..n).map(|k| if k < a { x[k] } else { -x[k] }).sum();
            x[0] = -rest;
            x
        })
        .collect()
}

/// Values `|C|^2 x^alpha` scaled to integers, or `None` on overflow.
fn screen_values(f: &MonomialMap, pts: &[Vec<i64>]) -> Option<Vec<Vec<i128>>> {
    let lcm = f.components.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.weight.denom()));
    f.components
        .iter()
        .map(|c| {
            let w = (c.weight.numer() * (&lcm / c.weight.denom())).to_i128()?;
            let w = if c.slot == Slot::Positive { w } else { -w };
            pts.iter()
                .map(|x| {
                    let mut v = w;
                    for (xi, &e) in x.iter().zip(&c.exponent) {
                        for _ in 0..e {
                            v = v.checked_mul(*xi as i128)?;
                        }
                    }
                    Some(v)
                })
                .collect()
        })
        .collect()
}

/// Exact search for a split into two monomial sub-maps.
pub fn monomial_decomposability(f: &MonomialMap) -> Result<MapDecomposition> {
    if !verify_quadric_map(f) {
        return Err(Error::Precondition("not a map between the stated hyperquadrics".into()));
    }
    let k = f.components.len();
    if k > MAP_ORACLE_CAP {
        return Ok(MapDecomposition::Indeterminate);
    }
    if k < 2 {
        return Ok(MapDecomposition::Indecomposable);
    }
    let pts = screen_points(f);
    let vals = screen_values(f, &pts);
    let screened_out = |mask: u32| -> bool {
        let Some(vals) = &vals else { return false };
        (0..pts.len()).any(|p| {
            let mut acc: i128 = 0;
            for (i, v) in vals.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    match acc.checked_add(v[p]) {
                        Some(a) => acc = a,
                        // undecided: leave it to the exact check
                        None => return false,
                    }
                }
            }
            acc != 0
        })
    };
    let group_ok = |mask: u32| -> bool {
        if screened_out(mask) {
            return false;
        }
        let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Component> = idx.iter().map(|&i| f.components[i].clone()).collect();
        let real = Polynomial::from_terms(
            f.source.coords(),
            VarStyle::Projective,
            sub.iter().map(|c| {
                let w = if c.slot == Slot::Positive { c.weight.clone() } else { -c.weight.clone() };
                (MultiIndex(c.exponent.clone()), w)
            }),
        );
        let flip: Vec<bool> = (0..f.source.coords()).map(|j| j >= f.source.positive).collect();
        real.is_zero() || divide_by_s(&real.flip_signs(&flip)).is_ok()
    };
    // component 0 stays in the first group
    let full = (1u32 << k) - 1;
    for rest in 0..(1u32 << (k - 1)) {
        let g = (rest << 1) | 1;
        if g == full {
            continue;
        }
        if group_ok(g) && group_ok(full & !g) {
            let a = (0..k).filter(|i| g >> i & 1 == 1).collect();
            let b = (0..k).filter(|i| g >> i & 1 == 0).collect();
            return Ok(MapDecomposition::Decomposable(a, b));
        }
    }
    Ok(MapDecomposition::Indecomposable)
}

/// Degree bounds licensed by the map's hypotheses.
pub fn degree_report(f: &MonomialMap) -> Result<BoundReport> {
    if !verify_quadric_map(f) {
        return Err(Error::Precondition("not a map between the stated hyperquadrics".into()));
    }
    let n = f.source.positive + f.source.negative;
    let big_n = f.target.positive + f.target.negative;
    let mut report = BoundReport::new(n, f.components.len(), f.degree());
    let independent = f.has_independent_components();
    let split = monomial_decomposability(f)?;
    report.notes.push(format!("linearly independent components: {independent}"));
    report.notes.push(format!("decomposability: {}", serde_json::to_value(&split).expect("enum")).replace('"', ""));
    if n < 2 {
        report.notes.push("n = 1: no bound exists".into());
        return Ok(report);
    }
    let table = bound_table(n, big_n, BoundClass::Crmap)?;
    for b in table {
        let licence = match b.tag.as_str() {
            "T1.3ii" if f.source.is_sphere() && f.target.is_sphere() => Some(Licence::Proved),
            "T1.3ii" => None,
            _ => match (&split, independent) {
                (MapDecomposition::Indecomposable, true) => Some(Licence::Proved),
                (MapDecomposition::Indeterminate, true) => Some(Licence::Conditional),
                _ => None,
            },
        };
        match licence {
            Some(l) => report.push(b, l),
            None => report.notes.push(format!("{} withheld: hypotheses not met", b.tag)),
        }
    }
    Ok(report)
}

/// `Q` of the map's real polynomial with the source signs flipped to `S`.
pub fn flipped_real_polynomial(f: &MonomialMap) -> Polynomial {
    let flip: Vec<bool> = (0..f.source.coords()).map(|k| k >= f.source.positive).collect();
    real_polynomial_of_map(f).flip_signs(&flip)
}
