//! Recovering the circumcircle from side lengths alone, including the case
//! where the center falls outside the polygon.

use std::f64::consts::PI;

use cyclic_area::construction::{circumradius_from_sides, polygon_from_sides};

fn main() -> Result<(), cyclic_area::Error> {
    for n in 3..=12 {
        let solution = circumradius_from_sides(&vec![1.0; n])?;
        let expected = 1.0 / (2.0 * (PI / n as f64).sin());
        println!("regular {n:>2}-gon side 1: R = {:.15} (expected {expected:.15})", solution.radius);
    }

    for sides in [vec![3.0, 4.0, 5.0], vec![2.0, 2.0, 3.9], vec![1.0, 1.0, 1.0, 2.9]] {
        let solution = circumradius_from_sides(&sides)?;
        let poly = polygon_from_sides(&sides)?;
        println!(
            "{sides:?}: R = {:.15}, center {}, chords back {:.12?}",
            solution.radius,
            if solution.center_inside { "inside" } else { "outside" },
            poly.side_lengths()
        );
    }

    match circumradius_from_sides(&[1.0, 1.0, 2.5]) {
        Err(e) => println!("[1, 1, 2.5]: {e}"),
        Ok(s) => println!("[1, 1, 2.5]: unexpectedly solved {s:?}"),
    }
    Ok(())
}
