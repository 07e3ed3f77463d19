//! Diagram surgeries. Each returns a receipt whose inequality is checked
//! before the receipt is handed out; a failed check is a [`Error::Contradiction`].

use serde::Serialize;

use crate::diagram::{
    level_points_of, surface_count_3d, NewtonDiagram, NodeKind, Point, Sign,
};
use crate::error::{Error, Result};
use crate::poly::{rat, ratio, ser_rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    NodeCount,
    Sc,
    /// Face-wise surface count of a three dimensional support.
    SupportSc,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransformReceipt {
    pub op: &'static str,
    pub before: NewtonDiagram,
    pub after: NewtonDiagram,
    pub metric: Metric,
    #[serde(serialize_with = "ser_rat")]
    pub metric_before: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub metric_after: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub delta_bound: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub delta_actual: Rat,
}

impl TransformReceipt {
    fn checked(
        op: &'static str,
        before: NewtonDiagram,
        after: NewtonDiagram,
        metric: Metric,
        metric_before: Rat,
        metric_after: Rat,
        delta_bound: Rat,
    ) -> Result<Self> {
        let delta_actual = &metric_after - &metric_before;
        if delta_actual > delta_bound {
            return Err(Error::Contradiction(format!(
                "{op}: metric changed by {delta_actual}, bound {delta_bound}"
            )));
        }
        Ok(TransformReceipt {
            op,
            before,
            after,
            metric,
            metric_before,
            metric_after,
            delta_bound,
            delta_actual,
        })
    }

    pub fn holds(&self) -> bool {
        self.delta_actual <= self.delta_bound
    }
}

fn metric_of(d: &NewtonDiagram, metric: Metric) -> Result<Rat> {
    match metric {
        Metric::NodeCount => Ok(rat(d.node_count() as i64)),
        Metric::Sc => d.weighted_surface_count_2d(),
        Metric::SupportSc => surface_count_3d(&d.support()),
    }
}

fn require_2d(d: &NewtonDiagram) -> Result<()> {
    if d.n() != 2 {
        return Err(Error::Dimension(d.n()));
    }
    Ok(())
}

/// Level `k` of the 2D simplex, indexed by the second coordinate.
fn level(k: i32) -> Vec<Point> {
    (0..=k).map(|b| vec![k - b, b]).collect()
}

/// Weight of the node at `alpha'` in half units (interior 2, edge and vertex 1).
fn site_halves(d: &NewtonDiagram, alpha_prime: &[i32]) -> i64 {
    match d.site(alpha_prime).kind {
        NodeKind::Interior => 2,
        NodeKind::Edge | NodeKind::Vertex => 1,
        _ => 0,
    }
}

/// Minimise `sum_b unary[b][v_b] + sum_{b>=1} pair[b][v_{b-1}][v_b]` over sign
/// vectors respecting `allowed`. Index 0 is P; ties resolve toward P.
fn chain_dp(allowed: &[[bool; 2]], unary: &[[i64; 2]], pair: &[[[i64; 2]; 2]]) -> Vec<Sign> {
    const INF: i64 = i64::MAX / 4;
    let len = allowed.len();
    let mut best = vec![[INF; 2]; len];
    let mut back = vec![[0usize; 2]; len];
    for v in 0..2 {
        if allowed[0][v] {
            best[0][v] = unary[0][v];
        }
    }
    for b in 1..len {
        for v in 0..2 {
            if !allowed[b][v] {
                continue;
            }
            for u in 0..2 {
                if best[b - 1][u] >= INF {
                    continue;
                }
                let c = best[b - 1][u] + pair[b][u][v] + unary[b][v];
                if c < best[b][v] {
                    best[b][v] = c;
                    back[b][v] = u;
                }
            }
        }
    }
    let mut v = if best[len - 1][0] <= best[len - 1][1] { 0 } else { 1 };
    let mut out = vec![Sign::P; len];
    for b in (0..len).rev() {
        out[b] = if v == 0 { Sign::P } else { Sign::N };
        if b > 0 {
            v = back[b][v];
        }
    }
    out
}

fn from_index(i: usize) -> Sign {
    if i == 0 {
        Sign::P
    } else {
        Sign::N
    }
}

/// Fill the zeros of level `k` without increasing the chosen metric.
pub fn fill_level_2d(diag: &NewtonDiagram, k: u32, metric: Metric) -> Result<TransformReceipt> {
    require_2d(diag)?;
    let k = k as i32;
    if k >= diag.d() as i32 {
        return Err(Error::Precondition(format!("level {k} must be below d = {}", diag.d())));
    }
    for l in 0..k {
        if level(l).iter().any(|m| diag.get(m).is_none()) {
            return Err(Error::Precondition(format!("level {l} below {k} is not full")));
        }
    }
    let row = level(k);
    let current: Vec<Option<Sign>> = row.iter().map(|m| diag.get(m)).collect();
    if current.iter().all(|s| s.is_none()) {
        return Err(Error::Precondition(format!("level {k} has no nonzero point")));
    }
    let filled: Vec<Sign> = match metric {
        Metric::NodeCount => fill_alternating(diag, k, &current),
        Metric::Sc => fill_min_sc(diag, k, &current),
        Metric::SupportSc => return Err(Error::Precondition("metric not defined in 2D".into())),
    };
    let mut after = diag.clone();
    for (m, s) in row.iter().zip(&filled) {
        after.set(m.clone(), *s)?;
    }
    let before_metric = metric_of(diag, metric)?;
    let after_metric = metric_of(&after, metric)?;
    TransformReceipt::checked(
        "fill_level_2d",
        diag.clone(),
        after,
        metric,
        before_metric,
        after_metric,
        rat(0),
    )
}

/// Alternating fill of each run of zeros; runs touching the ends take the
/// opposite sign of the adjacent lower-level corner point.
fn fill_alternating(diag: &NewtonDiagram, k: i32, current: &[Option<Sign>]) -> Vec<Sign> {
    let len = current.len();
    let lower = level(k - 1);
    let mut out: Vec<Option<Sign>> = current.to_vec();
    let mut i = 0;
    while i < len {
        if out[i].is_some() {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < len && out[j + 1].is_none() {
            j += 1;
        }
        if i == 0 {
            let first = diag.get(&lower[0]).expect("full lower level").flip();
            let mut s = first;
            for slot in out.iter_mut().take(j + 1) {
                *slot = Some(s);
                s = s.flip();
            }
        } else if j == len - 1 {
            let last = diag.get(&lower[len - 2]).expect("full lower level").flip();
            let mut s = last;
            for t in (i..=j).rev() {
                out[t] = Some(s);
                s = s.flip();
            }
        } else {
            let mut s = out[i - 1].expect("left neighbour").flip();
            for slot in out.iter_mut().take(j + 1).skip(i) {
                *slot = Some(s);
                s = s.flip();
            }
        }
        i = j + 1;
    }
    out.into_iter().map(|s| s.expect("filled")).collect()
}

/// Exact minimisation of SC over the zero slots of level `k`. Only nodes with
/// `alpha'` on levels `k` and `k + 1` see level `k`, giving a chain.
fn fill_min_sc(diag: &NewtonDiagram, k: i32, current: &[Option<Sign>]) -> Vec<Sign> {
    let len = current.len();
    let row = level(k);
    let allowed: Vec<[bool; 2]> = current
        .iter()
        .map(|s| match s {
            None => [true, true],
            Some(Sign::P) => [true, false],
            Some(Sign::N) => [false, true],
        })
        .collect();
    let mut scratch = diag.clone();
    let mut unary = vec![[0i64; 2]; len];
    for b in 0..len {
        for v in 0..2 {
            scratch.set(row[b].clone(), from_index(v)).expect("in simplex");
            // alpha' = the point itself
            let mut w = site_halves(&scratch, &row[b]);
            if b == 0 {
                w += site_halves(&scratch, &[k + 1, 0]);
            }
            if b == len - 1 {
                w += site_halves(&scratch, &[0, k + 1]);
            }
            unary[b][v] = w;
        }
        restore(&mut scratch, &row[b], current[b]);
    }
    let mut pair = vec![[[0i64; 2]; 2]; len];
    for b in 1..len {
        for u in 0..2 {
            for v in 0..2 {
                scratch.set(row[b - 1].clone(), from_index(u)).expect("in simplex");
                scratch.set(row[b].clone(), from_index(v)).expect("in simplex");
                // alpha' = (k + 1 - b, b) sees row[b - 1] and row[b]
                pair[b][u][v] = site_halves(&scratch, &[k + 1 - b as i32, b as i32]);
            }
        }
        restore(&mut scratch, &row[b - 1], current[b - 1]);
        restore(&mut scratch, &row[b], current[b]);
    }
    chain_dp(&allowed, &unary, &pair)
}

fn restore(d: &mut NewtonDiagram, m: &[i32], s: Option<Sign>) {
    match s {
        Some(s) => d.set(m.to_vec(), s).expect("in simplex"),
        None => d.clear(m),
    }
}

/// Drop the row `b = 0` and shift down: `D'(a, b) = D(a, b + 1)`, degree `d - 1`.
pub fn slice_column_2d(diag: &NewtonDiagram, k: u32) -> Result<TransformReceipt> {
    require_2d(diag)?;
    let k = k as i32;
    let d = diag.d() as i32;
    if d < 2 || k < 1 {
        return Err(Error::Precondition("slicing needs d >= 2 and k >= 1".into()));
    }
    for l in 0..k {
        if level(l).iter().any(|m| diag.get(m).is_none()) {
            return Err(Error::Precondition(format!("level {l} below {k} is not full")));
        }
    }
    for (m, _) in diag.signs() {
        if (m[0] == 0 && m[1] >= k) || (m[0] == 1 && m[1] + 1 >= k) {
            return Err(Error::Precondition(format!(
                "point {m:?} lies in the columns that must be empty above level {k}"
            )));
        }
    }
    let after = NewtonDiagram::from_signs(
        2,
        (d - 1) as u32,
        diag.signs()
            .iter()
            .filter(|(m, _)| m[1] >= 1)
            .map(|(m, s)| (vec![m[0], m[1] - 1], *s)),
    )?;
    let sb = diag.weighted_surface_count_2d()?;
    let sa = after.weighted_surface_count_2d()?;
    TransformReceipt::checked("slice_column_2d", diag.clone(), after, Metric::Sc, sb, sa, ratio(-1, 2))
}

/// Level `d - 1` is `top_row` (indexed by the second coordinate); each lower
/// level drops its first entry and flips all signs.
pub fn prescribed_minimal_2d(top_row: &[Sign], d: u32) -> Result<NewtonDiagram> {
    if top_row.len() != d as usize || d == 0 {
        return Err(Error::Precondition(format!(
            "top row has length {} but d = {d}",
            top_row.len()
        )));
    }
    let d = d as i32;
    let mut diag = NewtonDiagram::new(2, d as u32);
    for a in 0..d {
        for b in 0..(d - a) {
            let base = top_row[(d - 1 - a) as usize];
            let s = if (d - 1 - a - b) % 2 == 0 { base } else { base.flip() };
            diag.set(vec![a, b], s)?;
        }
    }
    let sc = diag.weighted_surface_count_2d()?;
    if sc != ratio(d as i64 + 1, 2) {
        return Err(Error::Contradiction(format!(
            "prescribed diagram has SC {sc}, expected {}/2",
            d + 1
        )));
    }
    Ok(diag)
}

/// Glue a prescribed minimal triangle of size `k` under a diagram that is
/// empty below level `k`, choosing its top row so that SC grows by at most `k/2`.
pub fn triangle_glue_2d(diag: &NewtonDiagram, k: u32) -> Result<TransformReceipt> {
    require_2d(diag)?;
    let k = k as i32;
    if k < 1 || k >= diag.d() as i32 {
        return Err(Error::Precondition(format!("need 1 <= k < d, got k = {k}")));
    }
    if diag.signs().keys().any(|m| m[0] + m[1] < k) {
        return Err(Error::Precondition(format!("support meets a level below {k}")));
    }
    let top = level(k);
    if top.iter().all(|m| diag.get(m).is_none()) {
        return Err(Error::Precondition(format!("no support point at level {k}")));
    }
    // Choose the interface row R (level k - 1). The node at alpha' = (k - b, b)
    // sees R[b - 1], R[b] and D at level k; nothing else depends on R beyond SC(E).
    // Only the nodes at alpha' on level k see both R and D; the rest of SC(E)
    // is fixed, so minimise (merged weight - weight inside E alone) per node.
    let len = k as usize;
    let lower = level(k - 1);
    let mut merged = diag.clone();
    let mut alone = NewtonDiagram::new(2, diag.d());
    let mut weight = |sets: &[(usize, usize)], at: &Point| -> Result<i64> {
        for &(b, v) in sets {
            merged.set(lower[b].clone(), from_index(v))?;
            alone.set(lower[b].clone(), from_index(v))?;
        }
        let w = site_halves(&merged, at) - site_halves(&alone, at);
        for &(b, _) in sets {
            merged.clear(&lower[b]);
            alone.clear(&lower[b]);
        }
        Ok(w)
    };
    let mut unary = vec![[0i64; 2]; len];
    let mut pair = vec![[[0i64; 2]; 2]; len];
    for v in 0..2 {
        unary[0][v] += weight(&[(0, v)], &top[0])?;
        unary[len - 1][v] += weight(&[(len - 1, v)], &top[len])?;
    }
    for b in 1..len {
        for u in 0..2 {
            for v in 0..2 {
                pair[b][u][v] = weight(&[(b - 1, u), (b, v)], &top[b])?;
            }
        }
    }
    let allowed = vec![[true, true]; len];
    let row = chain_dp(&allowed, &unary, &pair);
    let e = prescribed_minimal_2d(&row, k as u32)?;
    let mut after = diag.clone();
    for (m, s) in e.signs() {
        after.set(m.clone(), *s)?;
    }
    let sb = diag.weighted_surface_count_2d()?;
    let sa = after.weighted_surface_count_2d()?;
    TransformReceipt::checked("triangle_glue_2d", diag.clone(), after, Metric::Sc, sb, sa, ratio(k as i64, 2))
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum ReduceStep {
    SliceOffFace { axis: usize, level: u32, receipt: TransformReceipt },
    FillLevel { level: u32, receipt: TransformReceipt },
    Terminal,
}

/// One step of the three dimensional reduction.
pub fn reduce_3d_step(diag: &NewtonDiagram) -> Result<ReduceStep> {
    if diag.n() != 3 {
        return Err(Error::Dimension(diag.n()));
    }
    let support = diag.support();
    if support.is_empty() {
        return Err(Error::Precondition("empty diagram".into()));
    }
    if !support.is_connected() {
        return Err(Error::Precondition("support is disconnected".into()));
    }
    if let Some(w) = support.has_overhang()? {
        return Err(Error::Precondition(format!("overhang at {w:?}")));
    }
    let d = diag.d() as i32;
    if support.size()? != d {
        return Err(Error::Precondition(format!("support size {} differs from d = {d}", support.size()?)));
    }
    let mut k = 0;
    while k < d && level_points_of(3, k).iter().all(|m| support.contains(m)) {
        k += 1;
    }
    if k == d {
        return Ok(ReduceStep::Terminal);
    }
    let row: Vec<Point> = level_points_of(3, k).into_iter().filter(|m| support.contains(m)).collect();
    let missing = (0..3).find(|&j| !row.iter().any(|m| m[j] == 0));
    let before_sc = surface_count_3d(&support)?;
    match missing {
        Some(j) => {
            let after = NewtonDiagram::from_signs(
                3,
                (d - 1) as u32,
                diag.signs().iter().filter(|(m, _)| m[j] >= 1).map(|(m, s)| {
                    let mut p = m.clone();
                    p[j] -= 1;
                    (p, *s)
                }),
            )?;
            let after_sc = surface_count_3d(&after.support())?;
            let receipt = TransformReceipt::checked(
                "reduce_3d_step/slice",
                diag.clone(),
                after,
                Metric::SupportSc,
                before_sc,
                after_sc,
                rat(-2),
            )?;
            Ok(ReduceStep::SliceOffFace { axis: j, level: k as u32, receipt })
        }
        None => {
            let mut after = diag.clone();
            for m in level_points_of(3, k) {
                if after.get(&m).is_some() {
                    continue;
                }
                let mut below = m.clone();
                if m[0] > 0 {
                    below[0] -= 1;
                } else if m[1] > 0 {
                    below[1] -= 1;
                } else {
                    below[2] -= 1;
                }
                let s = diag.get(&below).unwrap_or(Sign::P);
                after.set(m, s)?;
            }
            let after_sc = surface_count_3d(&after.support())?;
            let receipt = TransformReceipt::checked(
                "reduce_3d_step/fill",
                diag.clone(),
                after,
                Metric::SupportSc,
                before_sc,
                after_sc,
                rat(0),
            )?;
            Ok(ReduceStep::FillLevel { level: k as u32, receipt })
        }
    }
}

/// Two 2D views of a 3D diagram: at `(a, b)` take the value of `(a, k, b - k)`
/// for the smallest (first view) or largest (second view) `k` where it is nonzero.
pub fn view_diagrams_3d(diag: &NewtonDiagram) -> Result<(NewtonDiagram, NewtonDiagram)> {
    if diag.n() != 3 {
        return Err(Error::Dimension(diag.n()));
    }
    let d = diag.d() as i32;
    let mut d1 = NewtonDiagram::new(2, diag.d());
    let mut d2 = NewtonDiagram::new(2, diag.d());
    for a in 0..d {
        for b in 0..(d - a) {
            let hits: Vec<Sign> = (0..=b).filter_map(|k| diag.get(&[a, k, b - k])).collect();
            if let (Some(first), Some(last)) = (hits.first(), hits.last()) {
                d1.set(vec![a, b], *first)?;
                d2.set(vec![a, b], *last)?;
            }
        }
    }
    Ok((d1, d2))
}
