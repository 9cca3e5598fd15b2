//! Area of convex cyclic polygons from the incircle tangent lengths of a fan
//! triangulation.
//!
//! A convex polygon inscribed in a circle is split into triangles sharing one
//! apex. Each triangle's incircle cuts its edges into three tangent lengths
//! `(r, s, t)`: `s` at the apex, `r` at the lower-index base vertex and `t` at
//! the higher-index base vertex. The squared polygon area is the product of two
//! brackets built only from these lengths:
//!
//! ```text
//! A² = (p₁r₁ + Σ_{q≥2} r_q s_q Π_{m=2}^{q-1} s_m/p_m)
//!    · (s₁t₁ + Σ_{q≥2} p_q t_q Π_{m=2}^{q-1} p_m/s_m)
//! ```
//!
//! which reduces to Heron for a triangle and to Brahmagupta for a cyclic
//! quadrilateral. Every intermediate identity is exposed so it can be checked
//! against the coordinate (shoelace) area.
//!
//! ```
//! use cyclic_area::{construction, fan, area};
//!
//! let square = construction::polygon_from_sides(&[2.0, 2.0, 2.0, 2.0]).unwrap();
//! let decomposition = fan::fan_decompose(&square, 0).unwrap();
//! let result = area::cyclic_area(&decomposition).unwrap();
//! assert!((result.area - 4.0).abs() < 1e-12);
//! ```

pub mod area;
pub mod cli;
pub mod construction;
pub mod error;
pub mod fan;
pub mod geometry;
pub mod json;
pub mod spec;
pub mod verify;

pub use area::{cyclic_area, AreaResult, FactorPair};
pub use construction::{circumradius_from_sides, polygon_from_sides, random_cyclic_polygon};
pub use error::{Error, Result};
pub use fan::{fan_decompose, FanDecomposition, TriangleSplit};
pub use geometry::{shoelace_area, Circle, CyclicPolygon, Point2};
pub use spec::PolygonSpec;
pub use verify::{fuzz, verify_polygon, FuzzConfig, Tolerances, VerificationReport};
