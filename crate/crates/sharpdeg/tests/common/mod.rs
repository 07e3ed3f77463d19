//! Test-side oracles, written from the definitions and independent of the
//! library's own bookkeeping.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use sharpdeg::constructions::{faran_cubics, sharp_extend, whitney, Extender};
use sharpdeg::poly::{homogenize_and_flip, ratio};
use sharpdeg::quadrics::{map_of_positive_polynomial, reducible_map_example, HyperquadricSignature, MonomialMap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sharpdeg::diagram::{NewtonDiagram, Sign};
use sharpdeg::poly::Rat;
use sharpdeg::{MultiIndex, Polynomial};

/// All `(n+1)`-tuples of total degree `d`.
pub fn tuples(len: usize, d: u32) -> Vec<Vec<u32>> {
    if len == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in tuples(len - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn value_at(diag: &NewtonDiagram, p: &[i64]) -> i8 {
    if p.iter().any(|&x| x < 0) {
        return 0;
    }
    let m: Vec<i32> = p.iter().map(|&x| x as i32).collect();
    match diag.signs().get(&m) {
        Some(Sign::P) => 1,
        Some(Sign::N) => -1,
        None => 0,
    }
}

/// For each degree-`d` monomial `X^alpha` of `P = Q S`, the quotient values
/// at `alpha - e_j` (`j = 0..n`), seen through `m -> (d-1-|m|, m)`.
pub fn contributions(diag: &NewtonDiagram) -> Vec<(Vec<u32>, Vec<i8>)> {
    let n = diag.n();
    let d = diag.d();
    tuples(n + 1, d)
        .into_iter()
        .map(|alpha| {
            let vals = (0..=n)
                .map(|j| {
                    if alpha[j] == 0 {
                        return 0;
                    }
                    let mut b: Vec<i64> = alpha.iter().map(|&x| x as i64).collect();
                    b[j] -= 1;
                    value_at(diag, &b[1..])
                })
                .collect();
            (alpha, vals)
        })
        .collect()
}

fn one_signed(vals: &[i8]) -> bool {
    let nz: Vec<i8> = vals.iter().copied().filter(|&v| v != 0).collect();
    !nz.is_empty() && nz.iter().all(|&v| v == nz[0])
}

pub fn node_count(diag: &NewtonDiagram) -> usize {
    contributions(diag).iter().filter(|(_, v)| one_signed(v)).count()
}

/// Weighted surface count in half units: no zero 2, one zero 1, two zeros 1
/// unless the only nonzero point is `alpha - e_0`.
pub fn sc_halves(diag: &NewtonDiagram) -> i64 {
    assert_eq!(diag.n(), 2);
    contributions(diag)
        .iter()
        .filter(|(_, v)| one_signed(v))
        .map(|(_, v)| match v.iter().filter(|&&x| x == 0).count() {
            0 => 2,
            1 => 1,
            _ if v[0] != 0 => 0,
            _ => 1,
        })
        .sum()
}

pub fn sc(diag: &NewtonDiagram) -> Rat {
    Rat::new(sc_halves(diag).into(), 2.into())
}

/// Dense product over exponent vectors.
pub fn mul(a: &Polynomial, b: &Polynomial) -> BTreeMap<Vec<u32>, Rat> {
    let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rat::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn as_map(p: &Polynomial) -> BTreeMap<Vec<u32>, Rat> {
    p.terms().map(|(e, c)| (e.0.clone(), c.clone())).collect()
}

/// Evaluate at a rational point by direct power sums.
pub fn eval(p: &Polynomial, x: &[Rat]) -> Rat {
    let mut total = Rat::zero();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        for (xi, &k) in x.iter().zip(&e.0) {
            for _ in 0..k {
                t *= xi;
            }
        }
        total += t;
    }
    total
}

/// Exact divisibility by the sum of all variables: substitute
/// `x_last = -(x_0 + .. + x_{n-2})`, expand densely, and test for zero.
pub fn divisible_by_variable_sum(p: &Polynomial) -> bool {
    let n = p.n_vars();
    let k = n - 1;
    let mut powers: Vec<BTreeMap<Vec<u32>, Rat>> = vec![BTreeMap::from([(vec![0; k], Rat::one())])];
    let max = p.terms().map(|(e, _)| e.0[k]).max().unwrap_or(0);
    for _ in 0..max {
        let prev = powers.last().unwrap();
        let mut next: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e, c) in prev {
            for j in 0..k {
                let mut f = e.clone();
                f[j] += 1;
                *next.entry(f).or_insert_with(Rat::zero) -= c;
            }
        }
        powers.push(next);
    }
    let mut total: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    for (e, c) in p.terms() {
        for (f, c2) in &powers[e.0[k] as usize] {
            let g: Vec<u32> = (0..k).map(|j| e.0[j] + f[j]).collect();
            *total.entry(g).or_insert_with(Rat::zero) += c * c2;
        }
    }
    total.values().all(|c| c.is_zero())
}

/// Value at a random point of the simplex `s = 1`.
pub fn on_simplex_value(p: &Polynomial, rng: &mut impl Rng) -> Rat {
    let n = p.n_vars();
    let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
    let total: i64 = w.iter().sum();
    let x: Vec<Rat> = w.into_iter().map(|k| Rat::new(k.into(), total.into())).collect();
    eval(p, &x)
}

/// A Whitney-type polynomial built from random degree-`k` choices.
pub fn random_whitney(n: usize, d: u32, rng: &mut impl Rng) -> (Polynomial, Vec<MultiIndex>) {
    let mut choices: Vec<MultiIndex> = Vec::new();
    for k in 2..=d {
        let p = whitney(n, k - 1, Some(&choices)).unwrap();
        let tops: Vec<MultiIndex> = p.terms().filter(|(m, _)| m.degree() == k - 1).map(|(m, _)| m.clone()).collect();
        choices.push(tops.choose(rng).unwrap().clone());
    }
    (whitney(n, d, Some(&choices)).unwrap(), choices)
}

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::P
    } else {
        Sign::N
    }
}

/// Random diagram on the `n`-simplex with levels `< d`; each point is set with probability `fill`.
pub fn random_diagram(n: usize, d: u32, fill: f64, rng: &mut impl Rng) -> NewtonDiagram {
    let mut diag = NewtonDiagram::new(n, d);
    for t in (0..d).flat_map(|l| tuples(n, l)) {
        if rng.gen_bool(fill) {
            diag.set(t.iter().map(|&x| x as i32).collect(), random_sign(rng)).unwrap();
        }
    }
    diag
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

fn set(diag: &mut NewtonDiagram, a: i32, b: i32, s: Sign) {
    diag.set(vec![a, b], s).unwrap();
}

/// Input for a level fill: levels below `k` full, at least one point on level `k`.
pub fn fill_input(rng: &mut impl Rng) -> (NewtonDiagram, u32) {
    let d = rng.gen_range(2..=9u32);
    let k = rng.gen_range(0..d) as i32;
    let mut diag = NewtonDiagram::new(2, d);
    for l in 0..d as i32 {
        for b in 0..=l {
            let keep = if l < k { true } else if l == k { rng.gen_bool(0.5) } else { rng.gen_bool(0.4) };
            if keep {
                set(&mut diag, l - b, b, random_sign(rng));
            }
        }
    }
    let b = rng.gen_range(0..=k);
    if diag.get(&[k - b, b]).is_none() {
        set(&mut diag, k - b, b, random_sign(rng));
    }
    (diag, k as u32)
}

/// Input for slicing: levels below `k` full and the columns `a = 0`, `a = 1`
/// empty from level `k` on.
pub fn slice_input(rng: &mut impl Rng) -> (NewtonDiagram, u32) {
    let d = rng.gen_range(2..=9u32);
    let k = rng.gen_range(1..d) as i32;
    let mut diag = NewtonDiagram::new(2, d);
    for l in 0..d as i32 {
        for b in 0..=l {
            let a = l - b;
            let blocked = l >= k && a <= 1;
            if !blocked && (l < k || rng.gen_bool(0.5)) {
                set(&mut diag, a, b, random_sign(rng));
            }
        }
    }
    (diag, k as u32)
}

/// Input for a triangle glue: nothing below level `k`, something on level `k`.
pub fn glue_input(rng: &mut impl Rng) -> (NewtonDiagram, u32) {
    let d = rng.gen_range(2..=9u32);
    let k = rng.gen_range(1..d) as i32;
    let mut diag = NewtonDiagram::new(2, d);
    for l in k..d as i32 {
        for b in 0..=l {
            if rng.gen_bool(0.5) {
                set(&mut diag, l - b, b, random_sign(rng));
            }
        }
    }
    let b = rng.gen_range(0..=k);
    if diag.get(&[k - b, b]).is_none() {
        set(&mut diag, k - b, b, random_sign(rng));
    }
    (diag, k as u32)
}

/// Homogeneous inputs with a pure monomial: Whitney paths and three-variable extensions.
pub fn pullback_inputs(count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (_, f3) = faran_cubics();
    let mut out = vec![homogenize_and_flip(&f3).unwrap()];
    while out.len() < count {
        let p = if rng.gen_bool(0.8) {
            random_whitney(rng.gen_range(3..=5), rng.gen_range(1..=3), &mut rng).0
        } else {
            let base = random_whitney(3, rng.gen_range(1..=2), &mut rng).0;
            let d = base.degree().unwrap();
            let tops: Vec<MultiIndex> = base.terms().filter(|(m, _)| m.degree() == d).map(|(m, _)| m.clone()).collect();
            sharp_extend(&base, &tops[rng.gen_range(0..tops.len())], Extender::S).unwrap()
        };
        out.push(homogenize_and_flip(&p).unwrap());
    }
    out
}

/// Maps with independent components built from Whitney polynomials, their
/// convex combinations, identities, and the decomposable family.
pub fn agreement_instances(rng: &mut impl Rng) -> Vec<MonomialMap> {
    let mut out: Vec<MonomialMap> = (3..=5).map(|d| reducible_map_example(d).unwrap()).collect();
    for (a, b) in [(1, 0), (2, 0), (1, 1), (2, 1), (3, 0)] {
        out.push(MonomialMap::identity(HyperquadricSignature::new(a, b).unwrap()));
    }
    let (f2, f3) = faran_cubics();
    out.push(map_of_positive_polynomial(&f2).unwrap());
    out.push(map_of_positive_polynomial(&f3).unwrap());
    while out.len() < 80 {
        let n = rng.gen_range(2..=3);
        let d = rng.gen_range(1..=4);
        let (p, _) = random_whitney(n, d, rng);
        let p = if rng.gen_bool(0.5) {
            let (q, _) = random_whitney(n, d, rng);
            let t = ratio(rng.gen_range(1..=4), 5);
            &p.scale(&t) + &q.scale(&(Rat::from_integer(1.into()) - &t))
        } else {
            p
        };
        if p.term_count() + 1 <= 12 {
            out.push(map_of_positive_polynomial(&p).unwrap());
        }
    }
    out
}

