//! Fan triangulation and incircle tangent-length splits.
//!
//! The fan from apex `V₀` covers the polygon with triangles
//! `T_j = (V₀, V_j, V_{j+1})`, `j = 1..n`. In each triangle the incircle
//! touches the sides at distances
//!
//! * `s_j` from the apex `V₀`,
//! * `r_j` from `V_j`,
//! * `t_j` from `V_{j+1}`,
//!
//! so the diagonal shared by `T_i` and `T_{i+1}` has length
//! `s_i + t_i = s_{i+1} + r_{i+1}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::CyclicPolygon;

/// Relative tolerance for the shared-diagonal constraint of a fan.
pub const CHAIN_TOLERANCE: f64 = 1e-10;

/// Tangent lengths at the three vertices of a triangle, indexed by the side
/// each vertex faces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangents {
    /// `opposite[i]` is the tangent length at the vertex facing side `i`.
    pub opposite: [f64; 3],
}

/// Incircle tangent lengths of a triangle with sides `a`, `b`, `c`.
///
/// The tangent length at a vertex is the semiperimeter minus the side facing
/// it, evaluated as `(b + c − a) / 2`.
pub fn tangent_split(a: f64, b: f64, c: f64) -> Result<Tangents> {
    if ![a, b, c].iter().all(|x| x.is_finite() && *x > 0.0) {
        return Err(Error::Degenerate(format!(
            "triangle sides must be positive, got ({a}, {b}, {c})"
        )));
    }
    let opposite = [0.5 * (b + c - a), 0.5 * (a + c - b), 0.5 * (a + b - c)];
    if opposite.iter().any(|&x| x <= 0.0) {
        return Err(Error::Degenerate(format!(
            "sides ({a}, {b}, {c}) violate the strict triangle inequality"
        )));
    }
    Ok(Tangents { opposite })
}

/// One fan triangle described by its incircle tangent lengths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleSplit {
    /// Tangent length at the lower-index base vertex.
    pub r: f64,
    /// Tangent length at the apex.
    pub s: f64,
    /// Tangent length at the higher-index base vertex.
    pub t: f64,
    /// Semiperimeter, `r + s + t`.
    pub p: f64,
    /// Inradius, `√(rst/p)`.
    pub rho: f64,
    /// Heron area, `√(p·r·s·t)`.
    pub area: f64,
}

impl TriangleSplit {
    pub fn new(r: f64, s: f64, t: f64) -> Result<Self> {
        if ![r, s, t].iter().all(|x| x.is_finite() && *x > 0.0) {
            return Err(Error::Degenerate(format!(
                "tangent lengths must be positive, got (r, s, t) = ({r}, {s}, {t})"
            )));
        }
        let p = r + s + t;
        let rst = r * s * t;
        Ok(TriangleSplit {
            r,
            s,
            t,
            p,
            rho: (rst / p).sqrt(),
            area: (p * rst).sqrt(),
        })
    }

    /// Side from the apex to the lower base vertex.
    pub fn apex_to_near(&self) -> f64 {
        self.s + self.r
    }

    /// Outer polygon edge.
    pub fn base(&self) -> f64 {
        self.r + self.t
    }

    /// Side from the apex to the higher base vertex.
    pub fn apex_to_far(&self) -> f64 {
        self.s + self.t
    }
}

/// Fan of triangles sharing one apex vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FanDecomposition {
    apex_index: usize,
    splits: Vec<TriangleSplit>,
}

impl FanDecomposition {
    /// Assembles a fan from consecutive splits, checking that neighbouring
    /// triangles agree on their shared diagonal. An empty fan is the
    /// degenerate polygon collapsed to a segment.
    pub fn from_splits(apex_index: usize, splits: Vec<TriangleSplit>) -> Result<Self> {
        for (i, w) in splits.windows(2).enumerate() {
            let left = w[0].apex_to_far();
            let right = w[1].apex_to_near();
            if (left - right).abs() > CHAIN_TOLERANCE * left.max(right) {
                return Err(Error::InvalidInput(format!(
                    "triangles {} and {} disagree on their shared diagonal: {left} vs {right}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(FanDecomposition { apex_index, splits })
    }

    pub fn apex_index(&self) -> usize {
        self.apex_index
    }

    pub fn splits(&self) -> &[TriangleSplit] {
        &self.splits
    }

    /// Number of triangles, two fewer than the vertex count.
    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    /// Triangle `T_j` with the 1-based index used by the chain formulas.
    pub fn triangle(&self, j: usize) -> &TriangleSplit {
        &self.splits[j - 1]
    }

    /// Interior diagonals `L_{i,i+1}` as seen from both sides:
    /// `(s_i + t_i, s_{i+1} + r_{i+1})`.
    pub fn diagonals(&self) -> Vec<(f64, f64)> {
        self.splits
            .windows(2)
            .map(|w| (w[0].apex_to_far(), w[1].apex_to_near()))
            .collect()
    }

    /// Σ A_j
    pub fn area_sum(&self) -> f64 {
        self.splits.iter().map(|t| t.area).sum()
    }
}

/// Triangulates `poly` from vertex `apex_index` and splits every triangle by
/// its incircle.
///
/// Side lengths come from the chord formula over the angular gaps; vertex
/// coordinates are never used.
pub fn fan_decompose(poly: &CyclicPolygon, apex_index: usize) -> Result<FanDecomposition> {
    let m = poly.vertex_count();
    if apex_index >= m {
        return Err(Error::InvalidArguments(format!(
            "apex index {apex_index} out of range for {m} vertices"
        )));
    }
    let gaps = poly.gaps();
    let circle = poly.circle();
    let gap = |j: usize| gaps[(apex_index + j) % m];

    // Arc from the apex to V_j, measured both ways round the circle.
    let mut forward = vec![0.0; m];
    for j in 1..m {
        forward[j] = forward[j - 1] + gap(j - 1);
    }
    let mut backward = vec![0.0; m];
    for j in (1..m).rev() {
        backward[j] = gap(j) + if j + 1 < m { backward[j + 1] } else { 0.0 };
    }
    let diagonal: Vec<f64> = (0..m)
        .map(|j| circle.chord(forward[j].min(backward[j])))
        .collect();

    let mut splits = Vec::with_capacity(m - 2);
    for j in 1..m - 1 {
        let near = diagonal[j];
        let far = diagonal[j + 1];
        let edge = circle.chord(gap(j));
        // Sides facing: apex -> edge, V_j -> far, V_{j+1} -> near.
        let tangents = tangent_split(edge, far, near)?;
        let [s, r, t] = tangents.opposite;
        splits.push(TriangleSplit::new(r, s, t)?);
    }
    FanDecomposition::from_splits(apex_index, splits)
}

/// Segments of the polygon's edges cut by the fan's incircles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgePartition {
    /// Apex tangent of `T₁`, on the edge `V₀V₁`.
    pub s_first: f64,
    /// `r_1..r_n`
    pub r: Vec<f64>,
    /// `t_1..t_n`
    pub t: Vec<f64>,
    /// Apex tangent of `T_n`, on the edge `V₀V_{n+1}`.
    pub s_last: f64,
}

impl EdgePartition {
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

/// Extracts the tangent segments lying on the polygon's boundary.
pub fn edge_partition(fan: &FanDecomposition) -> Result<EdgePartition> {
    let (first, last) = match (fan.splits.first(), fan.splits.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => {
            return Err(Error::InvalidArguments(
                "an empty fan has no edge partition".into(),
            ))
        }
    };
    Ok(EdgePartition {
        s_first: first.s,
        r: fan.splits.iter().map(|t| t.r).collect(),
        t: fan.splits.iter().map(|t| t.t).collect(),
        s_last: last.s,
    })
}
