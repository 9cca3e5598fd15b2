//! Heron's formula in tangent lengths, and the right-triangle special cases:
//! the hypotenuse segments multiply to the area, and the legs satisfy
//! Pythagoras when written as sums of tangent lengths.

use cyclic_area::area::{heron_area, heron_area_sides, right_triangle_area_product};
use cyclic_area::fan::tangent_split;

fn main() -> Result<(), cyclic_area::Error> {
    let (a, b, c) = (3.0, 4.0, 5.0);
    let [at_a, at_b, right] = tangent_split(a, b, c)?.opposite;
    println!("3-4-5 tangent lengths: {at_a} (facing 3), {at_b} (facing 4), {right} (right angle)");

    let hypotenuse_product = right_triangle_area_product(at_a, at_b)?;
    println!("hypotenuse segments {at_a} x {at_b} = {hypotenuse_product}");
    println!("Heron from sides      = {}", heron_area_sides(a, b, c)?);
    println!("Heron from tangents   = {}", heron_area(right, at_a, at_b)?);
    println!("r (r + s + t)         = {}", right * (right + at_a + at_b));

    let legs = (right + at_a).powi(2) + (right + at_b).powi(2);
    println!("(r+s)^2 + (r+t)^2 = {legs}, (s+t)^2 = {}", (at_a + at_b).powi(2));

    let (a, b, c) = (5.0, 6.0, 7.0);
    let [x, y, z] = tangent_split(a, b, c)?.opposite;
    let rho = (x * y * z / (x + y + z)).sqrt();
    println!("\n5-6-7: tangents ({x}, {y}, {z}), inradius {rho}, area {}", heron_area(x, y, z)?);
    Ok(())
}
