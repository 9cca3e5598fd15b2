//! A cyclic quadrilateral split into two triangles along a diagonal: the
//! two-bracket area, the product of the two triangle areas, and
//! Brahmagupta's formula all agree.

use cyclic_area::area::{brahmagupta_area, cyclic_area, pair_area_product};
use cyclic_area::construction::polygon_from_sides;
use cyclic_area::fan::fan_decompose;
use cyclic_area::geometry::shoelace_area;

fn main() -> Result<(), cyclic_area::Error> {
    for sides in [[2.0, 2.0, 2.0, 2.0], [1.0, 2.0, 1.0, 2.0], [3.0, 5.0, 4.0, 2.5]] {
        let quad = polygon_from_sides(&sides)?;
        let fan = fan_decompose(&quad, 0)?;
        let result = cyclic_area(&fan)?;
        let (t1, t2) = (fan.triangle(1), fan.triangle(2));
        let (by_diagonal, by_opposite) = pair_area_product(&fan, 1, 2)?;

        println!("sides {sides:?} on a circle of radius {:.6}", quad.radius());
        println!("  T1 (r, s, t) = ({:.6}, {:.6}, {:.6})", t1.r, t1.s, t1.t);
        println!("  T2 (r, s, t) = ({:.6}, {:.6}, {:.6})", t2.r, t2.s, t2.t);
        println!("  A1 A2 = {:.12}, s1 t1 s2 r2 = {by_diagonal:.12}, p1 r1 p2 t2 = {by_opposite:.12}", t1.area * t2.area);
        println!(
            "  f1 = {:.12}, f2 = {:.12}, area = {:.12}",
            result.factors.f1, result.factors.f2, result.area
        );
        println!(
            "  Brahmagupta {:.12}, shoelace {:.12}",
            brahmagupta_area(sides[0], sides[1], sides[2], sides[3])?,
            shoelace_area(&quad.vertices())?
        );
    }
    Ok(())
}
