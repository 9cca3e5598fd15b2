//! Two-bracket area of cyclic polygons with any number of sides, checked
//! against closed forms and the shoelace area of the vertex coordinates.

use std::f64::consts::PI;

use cyclic_area::area::cyclic_area;
use cyclic_area::construction::{polygon_from_sides, random_cyclic_polygon};
use cyclic_area::fan::fan_decompose;
use cyclic_area::geometry::shoelace_area;

fn main() -> Result<(), cyclic_area::Error> {
    for n in [5usize, 6, 12] {
        let poly = polygon_from_sides(&vec![1.0; n])?;
        let area = cyclic_area(&fan_decompose(&poly, 0)?)?.area;
        let closed = n as f64 / (4.0 * (PI / n as f64).tan());
        println!("regular {n}-gon, side 1: {area:.12} (closed form {closed:.12})");
    }

    let poly = random_cyclic_polygon(2024, 9, 1.0)?;
    println!("\nrandom 9-gon, sides {:.4?}", poly.side_lengths());
    for apex in 0..poly.vertex_count() {
        let result = cyclic_area(&fan_decompose(&poly, apex)?)?;
        println!(
            "  apex {apex}: f1 = {:.12}, f2 = {:.12}, area = {:.15}",
            result.factors.f1, result.factors.f2, result.area
        );
    }
    println!("  shoelace        {:.15}", shoelace_area(&poly.vertices())?);
    Ok(())
}
