//! Only the tangent segments lying on the polygon's edges are needed: the
//! apex tangents of the inner triangles follow from consecutiveness, and the
//! two area brackets are symmetric under exchanging r with t and s with p.

use cyclic_area::area::{cyclic_area, factor_exchange, reconstruct_internal};
use cyclic_area::construction::random_cyclic_polygon;
use cyclic_area::fan::{edge_partition, fan_decompose};

fn main() -> Result<(), cyclic_area::Error> {
    let fan = fan_decompose(&random_cyclic_polygon(31, 8, 2.0)?, 0)?;
    let boundary = edge_partition(&fan)?;
    println!("s_1 = {:.12}, s_n = {:.12}", boundary.s_first, boundary.s_last);
    println!("r = {:.6?}", boundary.r);
    println!("t = {:.6?}", boundary.t);

    let rebuilt = reconstruct_internal(&boundary)?;
    for (q, tri) in fan.splits().iter().enumerate().skip(1) {
        println!(
            "  q = {}: s rebuilt {:.12} stored {:.12} | p rebuilt {:.12} stored {:.12}",
            q + 1,
            rebuilt.s[q - 1],
            tri.s,
            rebuilt.p[q - 1],
            tri.p
        );
    }
    println!("s_n residual {:e}", rebuilt.s_last_residual);

    let factors = cyclic_area(&fan)?.factors;
    let exchanged = factor_exchange(&fan);
    println!("\nf1 = {:e}, exchanged f2 expression = {:e}", factors.f1, exchanged.f2);
    println!("f2 = {:e}, exchanged f1 expression = {:e}", factors.f2, exchanged.f1);
    println!("bitwise equal: {}", factors.f1.to_bits() == exchanged.f2.to_bits() && factors.f2.to_bits() == exchanged.f1.to_bits());
    Ok(())
}
