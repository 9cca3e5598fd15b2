//! Serialized polygon descriptions.
//!
//! ```json
//! {"kind": "side_lengths", "sides": [2, 2, 2, 2]}
//! {"kind": "central_angles", "radius": 1.0, "gaps": [2.0, 2.0, 2.2831853071795862]}
//! {"kind": "vertices", "points": [[1, 0], [0, 1], [-1, 0]]}
//! {"kind": "random", "seed": 7, "vertex_count": 6, "radius": 1.0}
//! ```
//!
//! Each kind accepts exactly its own fields; anything else is rejected.

use serde::{Deserialize, Serialize};

use crate::construction;
use crate::error::{Error, Result};
use crate::geometry::{CyclicPolygon, Point2};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PolygonSpec {
    CentralAngles { radius: f64, gaps: Vec<f64> },
    SideLengths { sides: Vec<f64> },
    Vertices { points: Vec<[f64; 2]> },
    Random { seed: u64, vertex_count: usize, radius: f64 },
}

impl PolygonSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PolygonSpec::CentralAngles { .. } => "central_angles",
            PolygonSpec::SideLengths { .. } => "side_lengths",
            PolygonSpec::Vertices { .. } => "vertices",
            PolygonSpec::Random { .. } => "random",
        }
    }

    pub fn build(&self) -> Result<CyclicPolygon> {
        match self {
            PolygonSpec::CentralAngles { radius, gaps } => {
                construction::from_central_angles(*radius, gaps)
            }
            PolygonSpec::SideLengths { sides } => construction::polygon_from_sides(sides),
            PolygonSpec::Vertices { points } => {
                let points: Vec<Point2> = points.iter().map(|&[x, y]| Point2::new(x, y)).collect();
                construction::polygon_from_vertices(&points)
            }
            PolygonSpec::Random {
                seed,
                vertex_count,
                radius,
            } => construction::random_cyclic_polygon(*seed, *vertex_count, *radius),
        }
    }

    /// Central-angle description of an existing polygon. Rebuilding it gives
    /// the same gaps and radius, with the circle moved to the origin and the
    /// first vertex at angle 0.
    pub fn of_polygon(poly: &CyclicPolygon) -> Self {
        PolygonSpec::CentralAngles {
            radius: poly.radius(),
            gaps: poly.gaps().to_vec(),
        }
    }
}
