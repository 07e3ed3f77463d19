//! Exact sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`MultiIndex`], whose ordering is
//! graded lexicographic with the first variable most significant.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let mut v = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(v))
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Number of variables with a positive exponent.
    pub fn support_len(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn bump(&self, i: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How variables are named when printing: `x1..xn` or `X0..Xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarStyle {
    Affine,
    Projective,
}

impl VarStyle {
    pub fn name(self, i: usize) -> String {
        match self {
            VarStyle::Affine => format!("x{}", i + 1),
            VarStyle::Projective => format!("X{}", i),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    n_vars: usize,
    style: VarStyle,
    terms: BTreeMap<MultiIndex, Rat>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n_vars == other.n_vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(n_vars: usize, style: VarStyle) -> Self {
        Polynomial { n_vars, style, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, style: VarStyle, c: Rat) -> Self {
        Self::monomial(n_vars, style, MultiIndex::zero(n_vars), c)
    }

    pub fn var(n_vars: usize, style: VarStyle, i: usize) -> Self {
        Self::monomial(n_vars, style, MultiIndex::unit(n_vars, i), Rat::one())
    }

    pub fn monomial(n_vars: usize, style: VarStyle, m: MultiIndex, c: Rat) -> Self {
        assert_eq!(m.len(), n_vars, "exponent length must match variable count");
        let mut p = Self::zero(n_vars, style);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(n_vars: usize, style: VarStyle, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rat)>,
    {
        let mut p = Self::zero(n_vars, style);
        for (m, c) in terms {
            assert_eq!(m.len(), n_vars, "exponent length must match variable count");
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer exponent rows and coefficients.
    pub fn from_int_terms(n_vars: usize, style: VarStyle, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            n_vars,
            style,
            terms.iter().map(|(e, c)| (MultiIndex(e.to_vec()), rat(*c))),
        )
    }

    /// `x1 + ... + xn`.
    pub fn affine_s(n: usize) -> Self {
        Self::from_terms(n, VarStyle::Affine, (0..n).map(|i| (MultiIndex::unit(n, i), Rat::one())))
    }

    /// `X0 + X1 + ... + Xn` in `n + 1` variables.
    pub fn hyperplane(n: usize) -> Self {
        Self::from_terms(
            n + 1,
            VarStyle::Projective,
            (0..=n).map(|i| (MultiIndex::unit(n + 1, i), Rat::one())),
        )
    }

    pub(crate) fn add_term(&mut self, m: MultiIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn style(&self) -> VarStyle {
        self.style
    }

    pub fn with_style(mut self, style: VarStyle) -> Self {
        self.style = style;
        self
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&MultiIndex, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn gcd_monomial(&self) -> Option<MultiIndex> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| {
            MultiIndex(acc.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect())
        }))
    }

    /// Divide every term by the monomial `m`, which must divide all of them.
    pub fn divide_monomial(&self, m: &MultiIndex) -> Polynomial {
        Polynomial::from_terms(
            self.n_vars,
            self.style,
            self.terms.iter().map(|(e, c)| {
                (e.checked_sub(m).expect("monomial does not divide every term"), c.clone())
            }),
        )
    }

    fn check_compat(&self, other: &Polynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableCountMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = Polynomial::zero(self.n_vars, self.style);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars, self.style);
        }
        Polynomial {
            n_vars: self.n_vars,
            style: self.style,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.n_vars, self.style, Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replace variable `var` by `replacement`.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_compat(replacement)?;
        if var >= self.n_vars {
            return Err(Error::Precondition(format!("variable index {var} out of range")));
        }
        let mut powers: Vec<Polynomial> = Vec::new();
        let mut out = Polynomial::zero(self.n_vars, self.style);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = match powers.last() {
                    None => Polynomial::constant(self.n_vars, self.style, Rat::one()),
                    Some(p) => p * replacement,
                };
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[var] = 0;
            for (m2, c2) in &powers[e].terms {
                out.add_term(rest.add(m2), c * c2);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.n_vars {
            return Err(Error::VariableCountMismatch { left: self.n_vars, right: point.len() });
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Apply `f` to every exponent vector, producing a polynomial in `n_vars` variables.
    pub fn map_monomials<F>(&self, n_vars: usize, style: VarStyle, mut f: F) -> Polynomial
    where
        F: FnMut(&MultiIndex, &Rat) -> (MultiIndex, Rat),
    {
        Polynomial::from_terms(n_vars, style, self.terms.iter().map(|(m, c)| f(m, c)))
    }

    /// Rename variables: old variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.n_vars);
        self.map_monomials(self.n_vars, self.style, |m, c| {
            let mut v = vec![0; m.len()];
            for (i, &e) in m.0.iter().enumerate() {
                v[perm[i]] = e;
            }
            (MultiIndex(v), c.clone())
        })
    }

    /// Replace `X_i` by `signs[i] * X_i` with `signs[i]` in {+1, -1}.
    pub fn flip_signs(&self, negate: &[bool]) -> Polynomial {
        assert_eq!(negate.len(), self.n_vars);
        self.map_monomials(self.n_vars, self.style, |m, c| {
            let odd = m.0.iter().zip(negate).filter(|(e, &neg)| neg && *e % 2 == 1).count() % 2 == 1;
            (m.clone(), if odd { -c.clone() } else { c.clone() })
        })
    }
}

pub fn poly_algebra(a: &Polynomial, b: &Polynomial, op: AlgebraOp) -> Result<Polynomial> {
    match op {
        AlgebraOp::Add => a.try_add(b),
        AlgebraOp::Sub => a.try_sub(b),
        AlgebraOp::Mul => a.try_mul(b),
    }
}

impl<'a> std::ops::Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable-count mismatch")
    }
}

impl<'a> std::ops::Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("variable-count mismatch")
    }
}

impl<'a> std::ops::Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable-count mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

fn fmt_coeff(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                parts.push(fmt_coeff(&mag));
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.style.name(v)),
                    _ => parts.push(format!("{}^{}", self.style.name(v), e)),
                }
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Polynomial", 3)?;
        st.serialize_field("n_vars", &self.n_vars)?;
        st.serialize_field("style", &self.style)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

/// Homogenize `p - 1` with an auxiliary `t`, then substitute `t = -X0`.
pub fn homogenize_and_flip(p: &Polynomial) -> Result<Polynomial> {
    let d = match p.degree() {
        None => return Err(Error::Degenerate("zero polynomial".into())),
        Some(0) => return Err(Error::Degenerate("constant polynomial".into())),
        Some(d) => d,
    };
    let n = p.n_vars();
    let mut out = Polynomial::zero(n + 1, VarStyle::Projective);
    let mut push = |beta: &MultiIndex, c: &Rat| {
        let k = d - beta.degree();
        let mut e = Vec::with_capacity(n + 1);
        e.push(k);
        e.extend_from_slice(&beta.0);
        let c = if k % 2 == 1 { -c.clone() } else { c.clone() };
        out.add_term(MultiIndex(e), c);
    };
    for (m, c) in p.terms() {
        push(m, c);
    }
    push(&MultiIndex::zero(n), &rat(-1));
    Ok(out)
}

/// Exact quotient `P / (X0 + ... + Xn)`; fails with `NotDivisible` on a nonzero remainder.
pub fn divide_by_s(p: &Polynomial) -> Result<Polynomial> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let nv = p.n_vars();
    let mut rem = p.terms.clone();
    let mut q = Polynomial::zero(nv, p.style());
    while let Some((m, c)) = rem.pop_last() {
        if m.0[0] == 0 {
            return Err(Error::NotDivisible { remainder_lead: format!("{:?}", m.0) });
        }
        let mut qm = m.clone();
        qm.0[0] -= 1;
        for i in 1..nv {
            let key = qm.bump(i);
            let entry = rem.entry(key).or_insert_with(Rat::zero);
            *entry -= &c;
            if entry.is_zero() {
                let key = qm.bump(i);
                rem.remove(&key);
            }
        }
        q.add_term(qm, c);
    }
    Ok(q)
}

/// `(p_degree, degree, N)`.
pub fn p_degree_and_count(p: &Polynomial) -> Result<(u32, u32, usize)> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let g = p.gcd_monomial().expect("nonzero");
    Ok((deg - g.degree(), deg, p.term_count()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionHint {
    DisconnectedSupport,
    ConnectedSupport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub in_i: bool,
    pub in_h: bool,
    pub degree: u32,
    pub p_degree: u32,
    /// N(p) of the affine input.
    pub monomial_count: usize,
    /// N(P) of the homogenized, flipped image.
    pub projective_count: usize,
    pub decomposability_hint: Option<DecompositionHint>,
}

pub fn class_membership(p: &Polynomial, n: usize) -> ClassReport {
    let degree = p.degree().unwrap_or(0);
    let mut report = ClassReport {
        in_i: false,
        in_h: false,
        degree,
        p_degree: 0,
        monomial_count: p.term_count(),
        projective_count: 0,
        decomposability_hint: None,
    };
    if p.n_vars() != n || degree == 0 {
        return report;
    }
    let big_p = homogenize_and_flip(p).expect("nonconstant");
    let (pd, _, count) = p_degree_and_count(&big_p).expect("nonzero");
    report.p_degree = pd;
    report.projective_count = count;
    if let Ok(q) = divide_by_s(&big_p) {
        report.in_i = true;
        report.in_h = p.has_nonnegative_coefficients();
        let diag = crate::diagram::NewtonDiagram::of(&q, degree).expect("homogeneous quotient");
        report.decomposability_hint = Some(if diag.support().is_connected() {
            DecompositionHint::ConnectedSupport
        } else {
            DecompositionHint::DisconnectedSupport
        });
    }
    report
}

/// Serialize a rational as `"a/b"` (or `"a"` for integers).
pub fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_coeff_signed(r))
}

pub fn ser_rat_vec<S: serde::Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&fmt_coeff_signed(r))?;
    }
    seq.end()
}

pub fn fmt_coeff_signed(c: &Rat) -> String {
    if c.is_negative() {
        format!("-{}", fmt_coeff(&c.abs()))
    } else {
        fmt_coeff(c)
    }
}
