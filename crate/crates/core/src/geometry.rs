//! Points, circles, and the cyclic polygon model.
//!
//! A [`CyclicPolygon`] stores its circumcircle together with the angular
//! position of every vertex. The angular gaps between consecutive vertices are
//! kept alongside the positions: chord lengths are evaluated from the gaps
//! directly, so a tiny gap never loses precision to the subtraction of two
//! large angles.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest admissible central angle between consecutive vertices, in radians.
pub const MIN_GAP: f64 = 1e-9;

/// Tolerance on `Σ gaps = 2π` for an already normalized polygon.
pub const GAP_SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidInput("circle center must be finite".into()));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "circle radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Circle { center, radius })
    }

    /// Circle of the given radius centered at the origin.
    pub fn centered(radius: f64) -> Result<Self> {
        Circle::new(Point2::new(0.0, 0.0), radius)
    }

    /// Point at angular position `theta` on the circle.
    pub fn point_at(&self, theta: f64) -> Point2 {
        let (sin, cos) = theta.sin_cos();
        Point2::new(
            self.center.x + self.radius * cos,
            self.center.y + self.radius * sin,
        )
    }

    /// Length of the chord subtending the central angle `arc`.
    pub fn chord(&self, arc: f64) -> f64 {
        2.0 * self.radius * (0.5 * arc).sin()
    }

    /// The unique circle through three non-collinear points.
    pub fn through(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        // Shift to `a` to keep the determinant well scaled.
        let (bx, by) = (b.x - a.x, b.y - a.y);
        let (cx, cy) = (c.x - a.x, c.y - a.y);
        let d = 2.0 * (bx * cy - by * cx);
        let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
        if !(d.abs() > 1e-14 * scale) {
            return Err(Error::Degenerate(
                "points are collinear, no circumcircle".into(),
            ));
        }
        let b2 = bx * bx + by * by;
        let c2 = cx * cx + cy * cy;
        let ux = (cy * b2 - by * c2) / d;
        let uy = (bx * c2 - cx * b2) / d;
        Circle::new(Point2::new(a.x + ux, a.y + uy), ux.hypot(uy))
    }
}

/// A convex polygon inscribed in a circle, vertices in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CyclicPolygon {
    circle: Circle,
    thetas: Vec<f64>,
    gaps: Vec<f64>,
}

impl CyclicPolygon {
    /// Builds a polygon from strictly increasing angular positions spanning
    /// less than a full turn.
    pub fn new(circle: Circle, thetas: Vec<f64>) -> Result<Self> {
        if thetas.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "a polygon needs at least 3 vertices, got {}",
                thetas.len()
            )));
        }
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidInput("angles must be finite".into()));
        }
        let span = thetas[thetas.len() - 1] - thetas[0];
        if !(span < TAU) {
            return Err(Error::InvalidInput(
                "angular positions must span less than 2π".into(),
            ));
        }
        let mut gaps: Vec<f64> = thetas.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.push(TAU - span);
        Self::from_gaps(circle, thetas[0], gaps)
    }

    /// Builds a polygon from its first angular position and the central angle
    /// of every side, the last gap closing back to the first vertex.
    pub fn from_gaps(circle: Circle, start: f64, gaps: Vec<f64>) -> Result<Self> {
        if gaps.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "a polygon needs at least 3 vertices, got {}",
                gaps.len()
            )));
        }
        if !start.is_finite() {
            return Err(Error::InvalidInput("start angle must be finite".into()));
        }
        for (i, &g) in gaps.iter().enumerate() {
            if !g.is_finite() || g <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "gap {i} must be positive, got {g}"
                )));
            }
            if g < MIN_GAP {
                return Err(Error::Degenerate(format!(
                    "gap {i} = {g:e} rad is below the floor {MIN_GAP:e}"
                )));
            }
        }
        let total: f64 = gaps.iter().sum();
        if (total - TAU).abs() > GAP_SUM_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "gaps sum to {total}, expected 2π"
            )));
        }

        let start = start.rem_euclid(TAU);
        let mut thetas = Vec::with_capacity(gaps.len());
        let mut theta = start;
        for g in &gaps {
            thetas.push(theta);
            theta += g;
        }
        Ok(CyclicPolygon {
            circle,
            thetas,
            gaps,
        })
    }

    pub fn circle(&self) -> &Circle {
        &self.circle
    }

    pub fn radius(&self) -> f64 {
        self.circle.radius
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// Central angle of side `i` (from vertex `i` to vertex `i + 1`, wrapping).
    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    pub fn vertex_count(&self) -> usize {
        self.thetas.len()
    }

    pub fn vertices(&self) -> Vec<Point2> {
        self.thetas.iter().map(|&t| self.circle.point_at(t)).collect()
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.gaps.iter().map(|&g| self.circle.chord(g)).collect()
    }

    /// Chord between vertices `i` and `j`, evaluated on the shorter of the
    /// two arcs joining them.
    pub fn chord(&self, i: usize, j: usize) -> f64 {
        let m = self.vertex_count();
        let (i, j) = (i % m, j % m);
        if i == j {
            return 0.0;
        }
        let forward: f64 = (0..(j + m - i) % m).map(|k| self.gaps[(i + k) % m]).sum();
        let backward: f64 = (0..(i + m - j) % m).map(|k| self.gaps[(j + k) % m]).sum();
        self.circle.chord(forward.min(backward))
    }

    /// The same polygon with every length multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let circle = Circle::new(
            Point2::new(self.circle.center.x * factor, self.circle.center.y * factor),
            self.circle.radius * factor,
        )?;
        Ok(CyclicPolygon {
            circle,
            ..self.clone()
        })
    }

    /// The same polygon moved rigidly: rotated by `angle` about the circle
    /// center, then translated by `(dx, dy)`.
    pub fn moved(&self, angle: f64, dx: f64, dy: f64) -> Result<Self> {
        let center = Point2::new(self.circle.center.x + dx, self.circle.center.y + dy);
        let circle = Circle::new(center, self.circle.radius)?;
        Self::from_gaps(circle, self.thetas[0] + angle, self.gaps.clone())
    }
}

/// Absolute area enclosed by a simple polygon given by its vertices.
pub fn shoelace_area(points: &[Point2]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "shoelace needs at least 3 points, got {}",
            points.len()
        )));
    }
    // Relative to the first vertex, which removes the translation term from
    // every cross product.
    let origin = points[0];
    let twice: f64 = points
        .windows(2)
        .skip(1)
        .map(|w| {
            let (ax, ay) = (w[0].x - origin.x, w[0].y - origin.y);
            let (bx, by) = (w[1].x - origin.x, w[1].y - origin.y);
            ax * by - bx * ay
        })
        .sum();
    Ok(0.5 * twice.abs())
}
