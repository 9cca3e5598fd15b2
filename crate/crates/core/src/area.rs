//! Area formulas in tangent-length variables.
//!
//! Heron, the right-triangle product, Brahmagupta, the pairwise chain products
//! of a fan, and the two-bracket area of a general cyclic polygon, together
//! with the recovery of interior apex tangents from boundary data.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{EdgePartition, FanDecomposition, TriangleSplit};

fn require_positive(name: &str, values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite() && *v > 0.0) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{name} requires positive finite arguments, got {values:?}"
        )))
    }
}

/// Triangle area from its incircle tangent lengths: `√((r+s+t)·r·s·t)`.
pub fn heron_area(r: f64, s: f64, t: f64) -> Result<f64> {
    require_positive("heron_area", &[r, s, t])?;
    Ok(((r + s + t) * r * s * t).sqrt())
}

/// Triangle area from its side lengths: `√(p(p−a)(p−b)(p−c))`.
pub fn heron_area_sides(a: f64, b: f64, c: f64) -> Result<f64> {
    require_positive("heron_area_sides", &[a, b, c])?;
    let p = 0.5 * (a + b + c);
    let factors = [p - a, p - b, p - c];
    if factors.iter().any(|&f| f <= 0.0) {
        return Err(Error::InvalidInput(format!(
            "sides ({a}, {b}, {c}) violate the strict triangle inequality"
        )));
    }
    Ok((p * factors[0] * factors[1] * factors[2]).sqrt())
}

/// Area of a right triangle as the product of the two segments its incircle
/// cuts on the hypotenuse.
pub fn right_triangle_area_product(s: f64, t: f64) -> Result<f64> {
    require_positive("right_triangle_area_product", &[s, t])?;
    Ok(s * t)
}

/// Brahmagupta's area of a cyclic quadrilateral with sides `a, b, c, d`.
pub fn brahmagupta_area(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    require_positive("brahmagupta_area", &[a, b, c, d])?;
    let p = 0.5 * (a + b + c + d);
    let factors = [p - a, p - b, p - c, p - d];
    if factors.iter().any(|&f| f <= 0.0) {
        return Err(Error::InvalidInput(format!(
            "sides ({a}, {b}, {c}, {d}) cannot form a quadrilateral"
        )));
    }
    Ok((factors[0] * factors[1] * factors[2] * factors[3]).sqrt())
}

fn check_pair(fan: &FanDecomposition, h: usize, k: usize) -> Result<()> {
    if h >= 1 && h < k && k <= fan.len() {
        Ok(())
    } else {
        Err(Error::InvalidArguments(format!(
            "need 1 <= h < k <= {}, got h = {h}, k = {k}",
            fan.len()
        )))
    }
}

/// Both closed forms of `A_h·A_k` for fan triangles `h < k` (1-based):
///
/// ```text
/// s_h t_h s_k r_k Π_{i=h+1}^{k-1} s_i/p_i  =  p_h r_h p_k t_k Π_{i=h+1}^{k-1} p_i/s_i
/// ```
pub fn pair_area_product(fan: &FanDecomposition, h: usize, k: usize) -> Result<(f64, f64)> {
    check_pair(fan, h, k)?;
    let (th, tk) = (fan.triangle(h), fan.triangle(k));
    let between = &fan.splits()[h..k - 1];
    let shrink: f64 = between.iter().map(|t| t.s / t.p).product();
    let grow: f64 = between.iter().map(|t| t.p / t.s).product();
    Ok((
        th.s * th.t * tk.s * tk.r * shrink,
        th.p * th.r * tk.p * tk.t * grow,
    ))
}

/// `ρ_h·ρ_k` from tangent lengths: `r_h t_k Π_{i=h+1}^{k-1} p_i/s_i`.
pub fn inradius_chain_product(fan: &FanDecomposition, h: usize, k: usize) -> Result<f64> {
    check_pair(fan, h, k)?;
    let grow: f64 = fan.splits()[h..k - 1].iter().map(|t| t.p / t.s).product();
    Ok(fan.triangle(h).r * fan.triangle(k).t * grow)
}

/// The two brackets whose product is the squared polygon area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FactorPair {
    pub f1: f64,
    pub f2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaResult {
    pub area: f64,
    pub factors: FactorPair,
}

/// `p₁r₁ + Σ_{q=2}^n r_q s_q Π_{m=2}^{q-1} s_m/p_m`
///
/// Tuples are `(r, s, t, p)`. The running product is updated after each term
/// so that it always covers `m = 2..q-1`.
fn first_bracket(tuples: &[(f64, f64, f64, f64)]) -> f64 {
    let Some(&(r1, _, _, p1)) = tuples.first() else {
        return 0.0;
    };
    let mut sum = p1 * r1;
    let mut running = 1.0;
    for &(r, s, _, p) in &tuples[1..] {
        sum += r * s * running;
        running *= s / p;
    }
    sum
}

/// `s₁t₁ + Σ_{q=2}^n p_q t_q Π_{m=2}^{q-1} p_m/s_m`
fn second_bracket(tuples: &[(f64, f64, f64, f64)]) -> f64 {
    let Some(&(_, s1, t1, _)) = tuples.first() else {
        return 0.0;
    };
    let mut sum = s1 * t1;
    let mut running = 1.0;
    for &(_, s, t, p) in &tuples[1..] {
        sum += p * t * running;
        running *= p / s;
    }
    sum
}

fn tuples(splits: &[TriangleSplit]) -> Vec<(f64, f64, f64, f64)> {
    splits.iter().map(|t| (t.r, t.s, t.t, t.p)).collect()
}

/// Area of the cyclic polygon covered by `fan`, with the two brackets whose
/// product is its square. An empty fan has area 0.
pub fn cyclic_area(fan: &FanDecomposition) -> Result<AreaResult> {
    let values = tuples(fan.splits());
    let factors = FactorPair {
        f1: first_bracket(&values),
        f2: second_bracket(&values),
    };
    let squared = factors.f1 * factors.f2;
    if !squared.is_finite() || squared < 0.0 {
        return Err(Error::Numeric(format!(
            "squared area {squared} is not a non-negative number (f1 = {}, f2 = {})",
            factors.f1, factors.f2
        )));
    }
    Ok(AreaResult {
        area: squared.sqrt(),
        factors,
    })
}

/// Evaluates both bracket expressions with `r ↔ t` and `s ↔ p` exchanged in
/// every triangle. The exchanged first bracket is returned as `f1` and the
/// exchanged second bracket as `f2`, so the result is the swapped
/// [`cyclic_area`] factor pair.
pub fn factor_exchange(fan: &FanDecomposition) -> FactorPair {
    let exchanged: Vec<_> = fan
        .splits()
        .iter()
        .map(|tri| (tri.t, tri.p, tri.r, tri.s))
        .collect();
    FactorPair {
        f1: first_bracket(&exchanged),
        f2: second_bracket(&exchanged),
    }
}

/// Apex tangents and semiperimeters of `T_2..T_n` recovered from the edge
/// segments.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reconstruction {
    /// `s_2..s_n`
    pub s: Vec<f64>,
    /// `p_2..p_n`
    pub p: Vec<f64>,
    /// Reconstructed `s_n` minus the `s_n` carried by the boundary data.
    pub s_last_residual: f64,
}

/// Recovers the interior apex tangents by `s_q = s_{q−1} + t_{q−1} − r_q`.
pub fn reconstruct_internal(boundary: &EdgePartition) -> Result<Reconstruction> {
    let n = boundary.r.len();
    if boundary.t.len() != n {
        return Err(Error::InvalidInput(format!(
            "boundary has {} r segments but {} t segments",
            n,
            boundary.t.len()
        )));
    }
    let mut s = Vec::with_capacity(n.saturating_sub(1));
    let mut p = Vec::with_capacity(n.saturating_sub(1));
    let mut previous = boundary.s_first;
    for q in 1..n {
        let current = previous + boundary.t[q - 1] - boundary.r[q];
        if !(current > 0.0) {
            return Err(Error::InconsistentBoundary(format!(
                "reconstructed s_{} = {current} is not positive",
                q + 1
            )));
        }
        s.push(current);
        p.push(boundary.r[q] + current + boundary.t[q]);
        previous = current;
    }
    Ok(Reconstruction {
        s,
        p,
        s_last_residual: previous - boundary.s_last,
    })
}
