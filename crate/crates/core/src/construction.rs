//! Building cyclic polygons from central angles, side lengths, raw vertices,
//! or a seeded generator.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Circle, CyclicPolygon, Point2, GAP_SUM_TOLERANCE};

/// Tolerance on `Σ gaps = 2π` accepted from callers before renormalization.
pub const GAP_SUM_INPUT_TOLERANCE: f64 = 1e-9;

/// Below this `|F(s_max / 2)|` the longest side is taken to be a diameter.
pub const DIAMETER_TOLERANCE: f64 = 1e-12;

const MAX_SOLVER_ITERATIONS: usize = 200;
const MAX_NEWTON_STEPS: usize = 5;
const BRACKET_WIDTH: f64 = 1e-14;

/// Relative tolerance for accepting raw points as concyclic.
pub const CONCYCLIC_TOLERANCE: f64 = 1e-9;

/// Circumradius of the convex cyclic polygon with given sides, and whether the
/// circumcenter lies inside it (or on its longest side).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSolution {
    pub radius: f64,
    pub center_inside: bool,
}

/// Polygon on a circle of `radius` centered at the origin, first vertex at
/// angle 0, with the given central angles.
pub fn from_central_angles(radius: f64, gaps: &[f64]) -> Result<CyclicPolygon> {
    if gaps.len() < 3 {
        return Err(Error::InvalidSpec(format!(
            "need at least 3 central angles, got {}",
            gaps.len()
        )));
    }
    if let Some((i, g)) = gaps
        .iter()
        .enumerate()
        .find(|(_, g)| !(g.is_finite() && **g > 0.0))
    {
        return Err(Error::InvalidSpec(format!(
            "central angle {i} must be positive, got {g}"
        )));
    }
    let total: f64 = gaps.iter().sum();
    if (total - TAU).abs() > GAP_SUM_INPUT_TOLERANCE {
        return Err(Error::InvalidSpec(format!(
            "central angles sum to {total}, expected 2π within {GAP_SUM_INPUT_TOLERANCE:e}"
        )));
    }
    let circle = Circle::centered(radius)?;
    CyclicPolygon::from_gaps(circle, 0.0, normalize_gaps(gaps))
}

/// Rescales gaps to sum to 2π. Gaps already within the polygon tolerance are
/// returned untouched so that a serialized polygon replays bit for bit.
fn normalize_gaps(gaps: &[f64]) -> Vec<f64> {
    let total: f64 = gaps.iter().sum();
    if (total - TAU).abs() <= GAP_SUM_TOLERANCE {
        return gaps.to_vec();
    }
    let scale = TAU / total;
    gaps.iter().map(|g| g * scale).collect()
}

fn check_sides(sides: &[f64]) -> Result<usize> {
    if sides.len() < 3 {
        return Err(Error::InfeasibleSides(format!(
            "need at least 3 sides, got {}",
            sides.len()
        )));
    }
    if let Some((i, s)) = sides
        .iter()
        .enumerate()
        .find(|(_, s)| !(s.is_finite() && **s > 0.0))
    {
        return Err(Error::InfeasibleSides(format!(
            "side {i} must be positive and finite, got {s}"
        )));
    }
    let longest = sides
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let others: f64 = sides
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != longest)
        .map(|(_, s)| s)
        .sum();
    if !(sides[longest] < others) {
        return Err(Error::InfeasibleSides(format!(
            "longest side {} is not shorter than the sum of the others {}",
            sides[longest], others
        )));
    }
    Ok(longest)
}

/// Half central angle `asin(s / 2R)`, clamped at the diameter.
fn half_angle(side: f64, radius: f64) -> f64 {
    (side / (2.0 * radius)).min(1.0).asin()
}

/// `d/dR asin(s / 2R)`
fn half_angle_slope(side: f64, radius: f64) -> f64 {
    let u = (side / (2.0 * radius)).min(1.0);
    -u / (radius * (1.0 - u * u).sqrt())
}

/// Closure function for a center inside the polygon: `Σ 2 asin(sᵢ/2R) − 2π`.
/// Strictly decreasing on `[s_max / 2, ∞)`.
fn closure_inside(sides: &[f64], radius: f64) -> f64 {
    sides.iter().map(|&s| 2.0 * half_angle(s, radius)).sum::<f64>() - TAU
}

fn closure_inside_slope(sides: &[f64], radius: f64) -> f64 {
    sides.iter().map(|&s| 2.0 * half_angle_slope(s, radius)).sum()
}

/// Closure function for a center beyond the longest side:
/// `Σ_{i≠max} asin(sᵢ/2R) − asin(s_max/2R)`.
fn closure_outside(sides: &[f64], longest: usize, radius: f64) -> f64 {
    sides
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let a = half_angle(s, radius);
            if i == longest {
                -a
            } else {
                a
            }
        })
        .sum()
}

fn closure_outside_slope(sides: &[f64], longest: usize, radius: f64) -> f64 {
    sides
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let d = half_angle_slope(s, radius);
            if i == longest {
                -d
            } else {
                d
            }
        })
        .sum()
}

/// Finds the root of `f` on a bracket starting at `lo`, where `f(lo)` has sign
/// `sign_lo`. The upper end starts at `hi` and doubles until the sign flips,
/// then bisection narrows the bracket and Newton steps polish the root.
fn solve_bracketed(
    f: impl Fn(f64) -> f64,
    slope: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    width: f64,
) -> Result<f64> {
    let positive_at_lo = f(lo) > 0.0;
    let mut iterations = 0;
    let (mut lo, mut hi) = (lo, hi);
    loop {
        let fh = f(hi);
        if fh == 0.0 {
            return Ok(hi);
        }
        if (fh > 0.0) != positive_at_lo {
            break;
        }
        lo = hi;
        hi *= 2.0;
        iterations += 1;
        if iterations >= MAX_SOLVER_ITERATIONS || !hi.is_finite() {
            return Err(Error::Numeric(format!(
                "could not bracket the circumradius after {iterations} doublings"
            )));
        }
    }

    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == positive_at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations >= MAX_SOLVER_ITERATIONS {
            return Err(Error::Numeric(format!(
                "circumradius bisection did not converge in {MAX_SOLVER_ITERATIONS} iterations"
            )));
        }
    }

    let mut x = 0.5 * (lo + hi);
    let mut fx = f(x);
    for _ in 0..MAX_NEWTON_STEPS {
        let d = slope(x);
        if fx == 0.0 || !d.is_finite() || d == 0.0 {
            break;
        }
        let next = x - fx / d;
        if !(next >= lo && next <= hi) {
            break;
        }
        let fn_ = f(next);
        if fn_.abs() >= fx.abs() {
            break;
        }
        x = next;
        fx = fn_;
    }
    if !x.is_finite() {
        return Err(Error::Numeric("circumradius solver produced a non-finite value".into()));
    }
    Ok(x)
}

/// Solves for the circumradius of the convex cyclic polygon with the given
/// side lengths in the given cyclic order.
pub fn circumradius_from_sides(sides: &[f64]) -> Result<RadiusSolution> {
    let longest = check_sides(sides)?;
    let s_max = sides[longest];
    let r_min = 0.5 * s_max;
    let width = BRACKET_WIDTH * s_max;

    let at_min = closure_inside(sides, r_min);
    if at_min.abs() <= DIAMETER_TOLERANCE {
        return Ok(RadiusSolution {
            radius: r_min,
            center_inside: true,
        });
    }
    if at_min > 0.0 {
        let radius = solve_bracketed(
            |r| closure_inside(sides, r),
            |r| closure_inside_slope(sides, r),
            r_min,
            s_max,
            width,
        )?;
        Ok(RadiusSolution {
            radius,
            center_inside: true,
        })
    } else {
        let radius = solve_bracketed(
            |r| closure_outside(sides, longest, r),
            |r| closure_outside_slope(sides, longest, r),
            r_min,
            s_max,
            width,
        )?;
        Ok(RadiusSolution {
            radius,
            center_inside: false,
        })
    }
}

/// The convex cyclic polygon with the given side lengths, in the given order.
pub fn polygon_from_sides(sides: &[f64]) -> Result<CyclicPolygon> {
    let solution = circumradius_from_sides(sides)?;
    let radius = solution.radius;
    let mut gaps: Vec<f64> = sides.iter().map(|&s| 2.0 * half_angle(s, radius)).collect();
    if !solution.center_inside {
        let longest = check_sides(sides)?;
        let others: f64 = gaps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != longest)
            .map(|(_, g)| g)
            .sum();
        gaps[longest] = TAU - others;
    }
    from_central_angles(radius, &gaps).map_err(|e| match e {
        Error::InvalidSpec(msg) => Error::Numeric(format!("side closure failed: {msg}")),
        other => other,
    })
}

/// Smallest gap produced by [`random_cyclic_polygon`] as a fraction of the
/// mean gap.
pub const RANDOM_GAP_FLOOR: f64 = 1e-4;

/// Random central angles for `vertex_count` vertices, each at least
/// `RANDOM_GAP_FLOOR · 2π / vertex_count`.
pub fn random_gaps(seed: u64, vertex_count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = vertex_count as f64;
    let floor = RANDOM_GAP_FLOOR * TAU / n;
    let weights: Vec<f64> = (0..vertex_count).map(|_| rng.gen::<f64>() + f64::EPSILON).collect();
    let total: f64 = weights.iter().sum();
    let spread = TAU - n * floor;
    normalize_gaps(
        &weights
            .iter()
            .map(|w| floor + spread * w / total)
            .collect::<Vec<_>>(),
    )
}

/// Deterministic random convex cyclic polygon centered at the origin.
pub fn random_cyclic_polygon(seed: u64, vertex_count: usize, radius: f64) -> Result<CyclicPolygon> {
    if vertex_count < 3 {
        return Err(Error::InvalidSpec(format!(
            "vertex_count must be at least 3, got {vertex_count}"
        )));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "radius must be positive, got {radius}"
        )));
    }
    from_central_angles(radius, &random_gaps(seed, vertex_count))
}

/// Polygon through concyclic points given in counterclockwise order.
pub fn polygon_from_vertices(points: &[Point2]) -> Result<CyclicPolygon> {
    let m = points.len();
    if m < 3 {
        return Err(Error::InvalidSpec(format!(
            "need at least 3 vertices, got {m}"
        )));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidSpec("vertex coordinates must be finite".into()));
    }
    let circle = Circle::through(points[0], points[m / 3], points[2 * m / 3])?;
    for (i, p) in points.iter().enumerate() {
        let d = p.distance(circle.center);
        if (d - circle.radius).abs() > CONCYCLIC_TOLERANCE * circle.radius {
            return Err(Error::InvalidSpec(format!(
                "vertex {i} is off the circle through the others (distance {d}, radius {})",
                circle.radius
            )));
        }
    }
    let angles: Vec<f64> = points
        .iter()
        .map(|p| (p.y - circle.center.y).atan2(p.x - circle.center.x))
        .collect();
    let gaps: Vec<f64> = (0..m)
        .map(|i| (angles[(i + 1) % m] - angles[i]).rem_euclid(TAU))
        .collect();
    let total: f64 = gaps.iter().sum();
    if (total - TAU).abs() > GAP_SUM_INPUT_TOLERANCE {
        return Err(Error::InvalidSpec(
            "vertices must go once around the circle in counterclockwise order".into(),
        ));
    }
    if gaps.contains(&0.0) {
        return Err(Error::Degenerate("repeated vertex".into()));
    }
    CyclicPolygon::from_gaps(circle, angles[0], normalize_gaps(&gaps))
}
