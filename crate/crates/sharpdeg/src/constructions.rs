//! Sharp families and related generators.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::NewtonDiagram;
use crate::error::{Error, Result};
use crate::poly::{class_membership, divide_by_s, homogenize_and_flip, rat, MultiIndex, Polynomial, Rat, VarStyle};

fn affine(n: usize, exps: &[u32], c: i64) -> Polynomial {
    Polynomial::monomial(n, VarStyle::Affine, MultiIndex(exps.to_vec()), rat(c))
}

fn require_in_h(p: &Polynomial, what: &str) -> Result<()> {
    let rep = class_membership(p, p.n_vars());
    if !rep.in_h {
        return Err(Error::Contradiction(format!("{what} is not constant on s = 1 with nonnegative coefficients")));
    }
    Ok(())
}

/// Replace the term `c m` of `p` by `c m g`.
fn replace_term(p: &Polynomial, m: &MultiIndex, g: &Polynomial) -> Result<Polynomial> {
    let c = p.coeff(m);
    if c.is_zero() {
        return Err(Error::Precondition(format!("monomial {:?} is not a term", m.0)));
    }
    let mono = Polynomial::monomial(p.n_vars(), p.style(), m.clone(), c);
    let grown = &mono * g;
    Ok(&(p - &mono) + &grown)
}

/// Generalized Whitney polynomial: `p_1 = s`, then `p_k = p_{k-1} - m + m s`
/// with `m = choices[k - 2]` (default `x_n^{k-1}`).
pub fn whitney(n: usize, d: u32, choices: Option<&[MultiIndex]>) -> Result<Polynomial> {
    if n == 0 || d == 0 {
        return Err(Error::Precondition("whitney needs n >= 1 and d >= 1".into()));
    }
    if let Some(ch) = choices {
        if ch.len() != d as usize - 1 {
            return Err(Error::Precondition(format!("expected {} choices, got {}", d - 1, ch.len())));
        }
    }
    let s = Polynomial::affine_s(n);
    let mut p = s.clone();
    for k in 2..=d {
        let m = match choices {
            Some(ch) => ch[k as usize - 2].clone(),
            None => {
                let mut e = vec![0; n];
                e[n - 1] = k - 1;
                MultiIndex(e)
            }
        };
        if m.len() != n || m.degree() != k - 1 {
            return Err(Error::Precondition(format!("choice {:?} must have degree {}", m.0, k - 1)));
        }
        p = replace_term(&p, &m, &s)?;
    }
    require_in_h(&p, "whitney polynomial")?;
    let expected = d as usize * (n - 1) + 1;
    if p.term_count() != expected {
        return Err(Error::Contradiction(format!("whitney term count {} != {expected}", p.term_count())));
    }
    Ok(p)
}

/// The two-variable cubic `x1^3 + 3 x1 x2 + x2^3` and its three-variable
/// extension obtained from `x2 -> x2 + x3`.
pub fn faran_cubics() -> (Polynomial, Polynomial) {
    let p2 = &(&affine(2, &[3, 0], 1) + &affine(2, &[1, 1], 3)) + &affine(2, &[0, 3], 1);
    let lift = p2.map_monomials(3, VarStyle::Affine, |m, c| (MultiIndex(vec![m.0[0], m.0[1], 0]), c.clone()));
    let x2_plus_x3 = &affine(3, &[0, 1, 0], 1) + &affine(3, &[0, 0, 1], 1);
    let p3 = lift.substitute(1, &x2_plus_x3).expect("same variable count");
    (p2, p3)
}

/// Factor used by [`sharp_extend`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Extender {
    S,
    /// The three-variable cubic with variables renamed by `perm` (old `i` -> new `perm[i]`).
    Faran3([usize; 3]),
}

/// `p - m + m g` for a degree-`d` monomial `m` of `p`.
pub fn sharp_extend(p: &Polynomial, m: &MultiIndex, g: Extender) -> Result<Polynomial> {
    if p.n_vars() != 3 {
        return Err(Error::Precondition("sharp_extend works in three variables".into()));
    }
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if m.degree() != d || p.coeff(m).is_zero() {
        return Err(Error::Precondition(format!("{:?} is not a degree-{d} term of p", m.0)));
    }
    let (gp, k) = match g {
        Extender::S => (Polynomial::affine_s(3), 1),
        Extender::Faran3(perm) => (faran_cubics().1.permute(&perm), 3),
    };
    let out = replace_term(p, m, &gp)?;
    require_in_h(&out, "extended polynomial")?;
    if out.degree() != Some(d + k) || out.term_count() != p.term_count() + 2 * k as usize {
        return Err(Error::Contradiction(format!(
            "extension has degree {:?} and {} terms",
            out.degree(),
            out.term_count()
        )));
    }
    Ok(out)
}

/// Two-variable sharp polynomial of odd degree `d` with `(d + 3) / 2` terms.
pub fn dkr_sharp_2d(d: u32) -> Result<Polynomial> {
    if d % 2 == 0 {
        return Err(Error::Precondition(format!("degree must be odd, got {d}")));
    }
    let x = affine(2, &[1, 0], 1);
    let y = affine(2, &[0, 1], 1);
    let mut prev = Polynomial::constant(2, VarStyle::Affine, rat(2));
    let mut cur = x.clone();
    for _ in 2..=d {
        let next = &(&x * &cur) + &(&y * &prev);
        prev = cur;
        cur = next;
    }
    let p = &cur + &affine(2, &[0, d], 1);
    require_in_h(&p, "dkr polynomial")?;
    if p.term_count() != (d as usize + 3) / 2 {
        return Err(Error::Contradiction(format!("dkr term count {} for d = {d}", p.term_count())));
    }
    Ok(p)
}

/// Sub-degree coefficients `c_alpha` (`|alpha| < d`) of `p`.
pub fn undoing_decomposition(p: &Polynomial) -> Result<Vec<(MultiIndex, Rat)>> {
    let rep = class_membership(p, p.n_vars());
    if !rep.in_h {
        return Err(Error::Precondition("polynomial is not in the positive class".into()));
    }
    let d = rep.degree;
    if p.is_homogeneous() {
        let sd = Polynomial::affine_s(p.n_vars()).pow(d);
        if p != &sd {
            return Err(Error::Contradiction("homogeneous member differs from s^d".into()));
        }
    }
    let list: Vec<(MultiIndex, Rat)> =
        p.terms().filter(|(m, _)| m.degree() < d).map(|(m, c)| (m.clone(), c.clone())).collect();
    let back = rebuild(p.n_vars(), d, &list);
    if &back != p {
        return Err(Error::Contradiction("rebuild does not reproduce the input".into()));
    }
    Ok(list)
}

/// `s^d + sum c_alpha x^alpha (1 - s^{d - |alpha|})`.
pub fn rebuild(n: usize, d: u32, list: &[(MultiIndex, Rat)]) -> Polynomial {
    let s = Polynomial::affine_s(n);
    let one = Polynomial::constant(n, VarStyle::Affine, Rat::one());
    let mut p = s.pow(d);
    for (m, c) in list {
        let mono = Polynomial::monomial(n, VarStyle::Affine, m.clone(), c.clone());
        let factor = &one - &s.pow(d - m.degree());
        p = &p + &(&mono * &factor);
    }
    p
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn multinomial(e: &[u32]) -> Rat {
    let top = factorial(e.iter().sum());
    let bottom = e.iter().fold(BigInt::one(), |acc, &x| acc * factorial(x));
    Rat::from_integer(top / bottom)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FilledSharpStats {
    pub candidate_terms: usize,
    pub subsets_visited: u64,
    pub systems_solved: u64,
    /// Zero patterns whose linear system left some coefficient free.
    pub underdetermined: u64,
    pub rejected_by_constraints: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FilledSharpOutcome {
    pub d: u32,
    pub results: Vec<Polynomial>,
    pub stats: FilledSharpStats,
}

/// Linear form in the unknown coefficients plus a constant (last entry).
type Row = Vec<Rat>;

/// Echelon basis kept with pivot columns.
#[derive(Clone)]
struct Echelon {
    rows: Vec<(usize, Row)>,
}

impl Echelon {
    fn reduce(&self, row: &Row) -> Row {
        let mut r = row.clone();
        for (piv, b) in &self.rows {
            if !r[*piv].is_zero() {
                let f = r[*piv].clone() / &b[*piv];
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    fn solve(&self, unknowns: usize) -> Option<Vec<Rat>> {
        if self.rows.len() < unknowns {
            return None;
        }
        let mut sol = vec![Rat::zero(); unknowns];
        // rows were reduced against earlier rows only; finish with back substitution
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| std::cmp::Reverse(*p));
        let mut done = vec![false; unknowns];
        for (piv, r) in rows {
            let mut acc = r[unknowns].clone();
            for j in 0..unknowns {
                if j != piv && !r[j].is_zero() {
                    if !done[j] {
                        return None;
                    }
                    acc += &r[j] * &sol[j];
                }
            }
            sol[piv] = -acc / &r[piv];
            done[piv] = true;
        }
        Some(sol)
    }
}

struct SearchCtx {
    d: u32,
    cands: Vec<MultiIndex>,
    /// Non-pure degree-d monomials.
    rows: Vec<MultiIndex>,
}

/// Exhaustive search for sharp members of the positive class in three
/// variables whose diagram has maximal support.
pub fn filledsharp_search(d: u32, long_running: bool) -> Result<FilledSharpOutcome> {
    if d == 0 || d > 7 {
        return Err(Error::Precondition(format!("degree {d} outside 1..=7")));
    }
    if d > 5 && !long_running {
        return Err(Error::CapExceeded { what: "filled-sharp search degree without long-running mode".into(), size: d as u64, cap: 5 });
    }
    let mut cands = Vec::new();
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        for k in 2..d {
            for a in 1..k {
                let mut e = vec![0; 3];
                e[i] = a;
                e[j] = k - a;
                cands.push(MultiIndex(e));
            }
        }
    }
    let mut rows = Vec::new();
    for a in 0..=d {
        for b in 0..=(d - a) {
            let m = MultiIndex(vec![a, b, d - a - b]);
            if m.support_len() >= 2 {
                rows.push(m);
            }
        }
    }
    let ctx = SearchCtx { d, cands, rows };
    let mut stats = FilledSharpStats { candidate_terms: ctx.cands.len(), ..Default::default() };

    // subsets A of candidate terms, pruned by |A| + untouched rows <= 2d - 2
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    collect_subsets(&ctx, 0, &mut Vec::new(), &mut subsets);
    stats.subsets_visited = subsets.len() as u64;

    let per: Vec<(Vec<Polynomial>, u64, u64, u64)> = subsets.par_iter().map(|a| solve_subset(&ctx, a)).collect();
    let mut seen = BTreeSet::new();
    let mut results = Vec::new();
    for (found, solved, under, rejected) in per {
        stats.systems_solved += solved;
        stats.underdetermined += under;
        stats.rejected_by_constraints += rejected;
        for p in found {
            if seen.insert(p.to_string()) {
                results.push(p);
            }
        }
    }
    results.sort_by_key(|p| p.to_string());
    Ok(FilledSharpOutcome { d, results, stats })
}

fn untouched(ctx: &SearchCtx, chosen: &[usize]) -> usize {
    ctx.rows
        .iter()
        .filter(|b| !chosen.iter().any(|&i| ctx.cands[i].divides(b)))
        .count()
}

fn collect_subsets(ctx: &SearchCtx, next: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let budget = 2 * ctx.d as usize - 2;
    if cur.len() > budget {
        return;
    }
    // adding every remaining candidate gives the fewest untouched rows
    let mut all: Vec<usize> = cur.clone();
    all.extend(next..ctx.cands.len());
    if cur.len() + untouched(ctx, &all) > budget {
        return;
    }
    if next == ctx.cands.len() {
        if cur.len() + untouched(ctx, cur) <= budget {
            out.push(cur.clone());
        }
        return;
    }
    cur.push(next);
    collect_subsets(ctx, next + 1, cur, out);
    cur.pop();
    collect_subsets(ctx, next + 1, cur, out);
}

/// Returns (solutions, systems solved, underdetermined, rejected).
fn solve_subset(ctx: &SearchCtx, a: &[usize]) -> (Vec<Polynomial>, u64, u64, u64) {
    let d = ctx.d;
    let unknowns = a.len();
    let untouched_rows = untouched(ctx, a);
    let budget = 2 * d as usize - 2 - a.len() - untouched_rows;
    let mut touched: Vec<Row> = Vec::new();
    let mut touched_idx: Vec<usize> = Vec::new();
    for (ri, beta) in ctx.rows.iter().enumerate() {
        let mut row = vec![Rat::zero(); unknowns + 1];
        let mut any = false;
        for (u, &ci) in a.iter().enumerate() {
            let alpha = &ctx.cands[ci];
            if let Some(rest) = beta.checked_sub(alpha) {
                row[u] = -multinomial(&rest.0);
                any = true;
            }
        }
        if any {
            row[unknowns] = multinomial(&beta.0);
            touched.push(row);
            touched_idx.push(ri);
        }
    }
    let mut out = (Vec::new(), 0, 0, 0);
    let mut marks = vec![false; touched.len()];
    dfs(ctx, a, &touched, &touched_idx, 0, budget, 0, &Echelon { rows: Vec::new() }, &mut marks, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    ctx: &SearchCtx,
    a: &[usize],
    touched: &[Row],
    touched_idx: &[usize],
    i: usize,
    budget: usize,
    nonzero: usize,
    ech: &Echelon,
    marks: &mut Vec<bool>,
    out: &mut (Vec<Polynomial>, u64, u64, u64),
) {
    let unknowns = a.len();
    if nonzero > budget || nonzero + (touched.len() - i) < budget {
        return;
    }
    if i == touched.len() {
        out.1 += 1;
        match ech.solve(unknowns) {
            None => out.2 += 1,
            Some(c) => finish(ctx, a, touched, touched_idx, &c, marks, out),
        }
        return;
    }
    let r = ech.reduce(&touched[i]);
    let free = r[..unknowns].iter().any(|x| !x.is_zero());
    if !free {
        // determined by the rows already forced to zero
        let nz = !r[unknowns].is_zero();
        marks[i] = nz;
        dfs(ctx, a, touched, touched_idx, i + 1, budget, nonzero + nz as usize, ech, marks, out);
        return;
    }
    let piv = r[..unknowns].iter().position(|x| !x.is_zero()).expect("free row");
    let mut with = ech.clone();
    with.rows.push((piv, r));
    marks[i] = false;
    dfs(ctx, a, touched, touched_idx, i + 1, budget, nonzero, &with, marks, out);
    marks[i] = true;
    dfs(ctx, a, touched, touched_idx, i + 1, budget, nonzero + 1, ech, marks, out);
}

fn finish(
    ctx: &SearchCtx,
    a: &[usize],
    touched: &[Row],
    _touched_idx: &[usize],
    c: &[Rat],
    marks: &[bool],
    out: &mut (Vec<Polynomial>, u64, u64, u64),
) {
    let d = ctx.d;
    let unknowns = a.len();
    if c.iter().any(|x| !x.is_positive()) {
        return;
    }
    for (row, &nz) in touched.iter().zip(marks) {
        let mut v = row[unknowns].clone();
        for (x, y) in row[..unknowns].iter().zip(c) {
            v += x * y;
        }
        if nz != !v.is_zero() || v.is_negative() {
            return;
        }
    }
    let list: Vec<(MultiIndex, Rat)> = a.iter().zip(c).map(|(&i, x)| (ctx.cands[i].clone(), x.clone())).collect();
    let p = rebuild(3, d, &list);
    if p.term_count() != 2 * d as usize + 1 || !class_membership(&p, 3).in_h {
        return;
    }
    if !has_maximal_support(&p) {
        return;
    }
    if !satisfies_proof_constraints(&p, d) {
        out.3 += 1;
        return;
    }
    out.0.push(p);
}

/// The diagram of `p` contains every point with `|m| < d`.
pub fn has_maximal_support(p: &Polynomial) -> bool {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return false,
    };
    let big = match homogenize_and_flip(p).and_then(|x| divide_by_s(&x)) {
        Ok(q) => q,
        Err(_) => return false,
    };
    let diag = NewtonDiagram::of(&big, d).expect("homogeneous quotient");
    let n = p.n_vars();
    diag.len() == crate::diagram::simplex_points(n, d as i32 - 1).len()
}

/// The four necessary conditions on sharp filled polynomials in three variables.
pub fn satisfies_proof_constraints(p: &Polynomial, d: u32) -> bool {
    let terms: Vec<&MultiIndex> = p.terms().map(|(m, _)| m).collect();
    // (i) no sub-degree term uses all three variables
    if terms.iter().any(|m| m.degree() < d && m.support_len() == 3) {
        return false;
    }
    // (ii) exactly one pure degree-d term per variable
    for i in 0..3 {
        let pure = terms.iter().filter(|m| m.support_len() == 1 && m.0[i] > 0 && m.degree() == d).count();
        if pure != 1 {
            return false;
        }
    }
    let need = Rat::new(BigInt::from(d as i64 - 1), BigInt::from(2));
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    // (iii) weighted non-pure terms avoiding x_i
    for i in 0..3 {
        let mut w = Rat::zero();
        for m in terms.iter().filter(|m| m.support_len() >= 2 && m.0[i] == 0) {
            w += if m.degree() == d { half.clone() } else { Rat::one() };
        }
        if w < need {
            return false;
        }
    }
    // (iv) weighted non-pure degree-d terms
    let mut w = Rat::zero();
    for m in terms.iter().filter(|m| m.degree() == d && m.support_len() >= 2) {
        w += if m.support_len() == 2 { half.clone() } else { Rat::one() };
    }
    w >= need
}

/// Every variable permutation image of `p`, deduplicated.
pub fn permutation_orbit(p: &Polynomial) -> Vec<Polynomial> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for perm in perms {
        let q = p.permute(&perm);
        if seen.insert(q.to_string()) {
            out.push(q);
        }
    }
    out.sort_by_key(|q| q.to_string());
    out
}
