//! Pairwise products along a fan: areas, inradii, and the similar right
//! triangles linking consecutive incircles.

use cyclic_area::area::{inradius_chain_product, pair_area_product};
use cyclic_area::construction::random_cyclic_polygon;
use cyclic_area::fan::fan_decompose;

fn main() -> Result<(), cyclic_area::Error> {
    let poly = random_cyclic_polygon(7, 7, 1.0)?;
    let fan = fan_decompose(&poly, 0)?;
    println!("heptagon fan, {} triangles", fan.len());
    for (j, t) in fan.splits().iter().enumerate() {
        println!(
            "  T{}: r {:.6} s {:.6} t {:.6} p {:.6} rho {:.6} area {:.6}",
            j + 1, t.r, t.s, t.t, t.p, t.rho, t.area
        );
    }
    for (i, (left, right)) in fan.diagonals().iter().enumerate() {
        println!("  L{},{}: s+t = {left:.12}, s+r = {right:.12}", i + 1, i + 2);
    }

    println!("\n  h k   A_h A_k          form 1           form 2           rho_h rho_k      r_h t_k prod");
    for h in 1..fan.len() {
        for k in h + 1..=fan.len() {
            let (form1, form2) = pair_area_product(&fan, h, k)?;
            let rho = inradius_chain_product(&fan, h, k)?;
            let (a, b) = (fan.triangle(h), fan.triangle(k));
            println!(
                "  {h} {k}   {:.12}   {form1:.12}   {form2:.12}   {:.12}   {rho:.12}",
                a.area * b.area,
                a.rho * b.rho
            );
        }
    }
    for w in fan.splits().windows(2) {
        println!("  rho_i / r_i = {:.12}, t_(i+1) / rho_(i+1) = {:.12}", w[0].rho / w[0].r, w[1].t / w[1].rho);
    }
    Ok(())
}
