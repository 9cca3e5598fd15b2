//! Acceptance criteria, one line per criterion. Runs as a plain binary so the
//! verdict lines always reach the console.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclic_area::area::{
    brahmagupta_area, cyclic_area, factor_exchange, heron_area, heron_area_sides,
    inradius_chain_product, pair_area_product, reconstruct_internal, right_triangle_area_product,
};
use cyclic_area::construction::{
    circumradius_from_sides, from_central_angles, polygon_from_sides, random_cyclic_polygon,
};
use cyclic_area::fan::{edge_partition, fan_decompose, tangent_split};
use cyclic_area::geometry::shoelace_area;
use cyclic_area::verify::{fuzz, FuzzConfig, Identity};

type Outcome = Result<String, String>;

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1e-300)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// 3-4-5 triangle: split {1,2,3}, hypotenuse product, Heron and r(r+s+t).
fn ac1() -> Outcome {
    let [at_3, at_4, at_right] = tangent_split(3.0, 4.0, 5.0).map_err(e)?.opposite;
    let mut sorted = [at_3, at_4, at_right];
    sorted.sort_by(f64::total_cmp);
    for (got, want) in sorted.iter().zip([1.0, 2.0, 3.0]) {
        ensure((got - want).abs() <= 1e-12, || format!("tangent {got} != {want}"))?;
    }
    let product = right_triangle_area_product(at_4, at_3).map_err(e)?;
    let heron = heron_area_sides(3.0, 4.0, 5.0).map_err(e)?;
    let heron_t = heron_area(at_right, at_3, at_4).map_err(e)?;
    let incircle = at_right * (at_right + at_3 + at_4);
    for (name, v) in [("s*t", product), ("heron", heron), ("heron(r,s,t)", heron_t), ("r(r+s+t)", incircle)] {
        ensure((v - 6.0).abs() <= 1e-12, || format!("{name} = {v}"))?;
    }
    Ok(format!("split {sorted:?}, s*t = {product}, heron = {heron}, r(r+s+t) = {incircle}"))
}

/// Pythagoras in tangent lengths over 1000 right triangles.
fn ac2() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_product = 0.0f64;
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let theta = rng.gen_range(1e-3..PI - 1e-3);
        let radius = rng.gen_range(0.1..10.0);
        let diameter_at = (seed % 3) as usize;
        let mut gaps = [theta, PI - theta, PI - theta];
        gaps[diameter_at] = PI;
        gaps[(diameter_at + 1) % 3] = theta;
        gaps[(diameter_at + 2) % 3] = PI - theta;
        let tri = from_central_angles(radius, &gaps).map_err(e)?;
        let apex = ((seed / 3) % 3) as usize;
        let fan = fan_decompose(&tri, apex).map_err(e)?;
        let t = fan.triangle(1);
        // gap i joins vertices i and i+1, so the right angle sits at vertex
        // diameter_at + 2; its position in the fan picks s, r or t.
        let corner = (diameter_at + 2 + 3 - apex) % 3;
        let (right, a, b) = match corner {
            0 => (t.s, t.r, t.t),
            1 => (t.r, t.s, t.t),
            _ => (t.t, t.s, t.r),
        };
        let legs = (right + a).powi(2) + (right + b).powi(2);
        let hyp = (a + b).powi(2);
        worst = worst.max(rel(legs, hyp));
        worst_product = worst_product.max(rel(a * b, t.area));
    }
    ensure(worst <= 1e-10, || format!("max rel err {worst:e}"))?;
    ensure(worst_product <= 1e-10, || format!("hypotenuse product max rel err {worst_product:e}"))?;
    Ok(format!("max rel err {worst:.2e} (hypotenuse product {worst_product:.2e})"))
}

/// Quadrilaterals: two-bracket area, Brahmagupta and shoelace agree.
fn ac3() -> Outcome {
    let (mut vs_b, mut vs_shoe) = (0.0f64, 0.0f64);
    for seed in 0..1000u64 {
        let quad = random_cyclic_polygon(seed, 4, 1.0).map_err(e)?;
        let s = quad.side_lengths();
        let area = cyclic_area(&fan_decompose(&quad, 0).map_err(e)?).map_err(e)?.area;
        let b = brahmagupta_area(s[0], s[1], s[2], s[3]).map_err(e)?;
        let shoe = shoelace_area(&quad.vertices()).map_err(e)?;
        vs_b = vs_b.max(rel(area, b));
        vs_shoe = vs_shoe.max(rel(area, shoe)).max(rel(b, shoe));
    }
    ensure(vs_b <= 1e-9 && vs_shoe <= 1e-9, || {
        format!("brahmagupta {vs_b:e}, shoelace {vs_shoe:e}")
    })?;
    Ok(format!("vs brahmagupta {vs_b:.2e}, vs shoelace {vs_shoe:.2e}"))
}

/// General formula against shoelace for many vertex counts.
fn ac4() -> Outcome {
    let mut summary = Vec::new();
    for n in [3usize, 4, 5, 6, 8, 12, 20, 50] {
        let mut worst = 0.0f64;
        for seed in 0..1000u64 {
            let poly = random_cyclic_polygon(seed, n, 1.0).map_err(e)?;
            let area = cyclic_area(&fan_decompose(&poly, 0).map_err(e)?).map_err(e)?.area;
            let shoe = shoelace_area(&poly.vertices()).map_err(e)?;
            worst = worst.max(rel(area, shoe));
        }
        ensure(worst <= 1e-8, || format!("n = {n}: max rel err {worst:e}"))?;
        summary.push(format!("{n}:{worst:.1e}"));
    }
    Ok(format!("max rel err by n {}", summary.join(" ")))
}

/// Pairwise chain products on decagons, all pairs.
fn ac5() -> Outcome {
    let (mut f1, mut f2, mut rho) = (0.0f64, 0.0f64, 0.0f64);
    for seed in 0..200u64 {
        let fan = fan_decompose(&random_cyclic_polygon(seed, 10, 1.0).map_err(e)?, 0).map_err(e)?;
        for h in 1..fan.len() {
            for k in h + 1..=fan.len() {
                let (a, b) = (fan.triangle(h), fan.triangle(k));
                let (form1, form2) = pair_area_product(&fan, h, k).map_err(e)?;
                f1 = f1.max(rel(form1, a.area * b.area));
                f2 = f2.max(rel(form2, a.area * b.area));
                let chain = inradius_chain_product(&fan, h, k).map_err(e)?;
                rho = rho.max(rel(chain, a.rho * b.rho));
            }
        }
    }
    ensure(f1 <= 1e-9 && f2 <= 1e-9 && rho <= 1e-9, || {
        format!("form1 {f1:e}, form2 {f2:e}, inradius {rho:e}")
    })?;
    Ok(format!("form1 {f1:.2e}, form2 {f2:.2e}, inradius {rho:.2e}"))
}

/// Area is the same from every apex.
fn ac6() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..200u64 {
        let poly = random_cyclic_polygon(seed, 8, 1.0).map_err(e)?;
        let areas = (0..8)
            .map(|a| Ok(cyclic_area(&fan_decompose(&poly, a).map_err(e)?).map_err(e)?.area))
            .collect::<Result<Vec<_>, String>>()?;
        let hi = areas.iter().copied().fold(f64::MIN, f64::max);
        let lo = areas.iter().copied().fold(f64::MAX, f64::min);
        worst = worst.max(rel(hi, lo));
    }
    ensure(worst < 1e-8, || format!("spread {worst:e}"))?;
    Ok(format!("max spread {worst:.2e}"))
}

/// Apex tangents rebuilt from edge segments.
fn ac7() -> Outcome {
    let mut worst = 0.0f64;
    let mut largest_n = 0;
    for seed in 0..500u64 {
        let vertex_count = 3 + (seed % 20) as usize;
        let fan = fan_decompose(&random_cyclic_polygon(seed, vertex_count, 1.0).map_err(e)?, 0)
            .map_err(e)?;
        largest_n = largest_n.max(fan.len());
        let rebuilt = reconstruct_internal(&edge_partition(&fan).map_err(e)?).map_err(e)?;
        for (q, tri) in fan.splits().iter().enumerate().skip(1) {
            worst = worst.max(rel(rebuilt.s[q - 1], tri.s)).max(rel(rebuilt.p[q - 1], tri.p));
        }
    }
    ensure(largest_n == 20, || format!("largest fan n = {largest_n}"))?;
    ensure(worst <= 1e-10, || format!("max rel err {worst:e}"))?;
    Ok(format!("max rel err {worst:.2e} over n = 1..{largest_n}"))
}

/// Circumradius of regular polygons and of an obtuse triangle.
fn ac8() -> Outcome {
    let mut worst = 0.0f64;
    for n in 3..=12usize {
        let solution = circumradius_from_sides(&vec![1.0; n]).map_err(e)?;
        let expected = 1.0 / (2.0 * (PI / n as f64).sin());
        worst = worst.max(rel(solution.radius, expected));
        ensure(solution.center_inside, || format!("regular {n}-gon center reported outside"))?;
    }
    ensure(worst <= 1e-10, || format!("regular radius max rel err {worst:e}"))?;

    let sides = [2.0, 2.0, 3.9];
    let solution = circumradius_from_sides(&sides).map_err(e)?;
    ensure(!solution.center_inside, || "(2,2,3.9) center reported inside".into())?;
    let chords = polygon_from_sides(&sides).map_err(e)?.side_lengths();
    let chord_err = chords
        .iter()
        .zip(sides)
        .map(|(c, s)| rel(*c, s))
        .fold(0.0, f64::max);
    ensure(chord_err <= 1e-9, || format!("chord mismatch {chord_err:e}"))?;
    Ok(format!(
        "regular max rel err {worst:.2e}; (2,2,3.9) R = {:.12}, outside, chord err {chord_err:.2e}",
        solution.radius
    ))
}

/// Named values: square, regular pentagon and hexagon.
fn ac9() -> Outcome {
    let square = cyclic_area(&fan_decompose(&polygon_from_sides(&[2.0; 4]).map_err(e)?, 0).map_err(e)?)
        .map_err(e)?;
    ensure(
        (square.area - 4.0).abs() <= 1e-12
            && (square.factors.f1 - 4.0).abs() <= 1e-12
            && (square.factors.f2 - 4.0).abs() <= 1e-12,
        || format!("square {square:?}"),
    )?;
    let pentagon = cyclic_area(&fan_decompose(&polygon_from_sides(&[1.0; 5]).map_err(e)?, 0).map_err(e)?)
        .map_err(e)?
        .area;
    let pentagon_closed = 1.25 / (PI / 5.0).tan();
    ensure((pentagon - pentagon_closed).abs() <= 1e-9, || format!("pentagon {pentagon}"))?;
    ensure((pentagon_closed - 1.720_477_400_6).abs() <= 1e-10, || "pentagon closed form".into())?;
    let hexagon = cyclic_area(&fan_decompose(&polygon_from_sides(&[1.0; 6]).map_err(e)?, 0).map_err(e)?)
        .map_err(e)?
        .area;
    let hexagon_closed = 1.5 * 3f64.sqrt();
    ensure((hexagon - hexagon_closed).abs() <= 1e-9, || format!("hexagon {hexagon}"))?;
    Ok(format!(
        "square {} (f1 {}, f2 {}), pentagon {pentagon:.10}, hexagon {hexagon:.10}",
        square.area, square.factors.f1, square.factors.f2
    ))
}

/// Exchange symmetry of the two brackets, bit for bit, on every fuzz trial.
fn ac10() -> Outcome {
    let config = FuzzConfig::default();
    let report = fuzz(&config).map_err(e)?;
    let record = report.record(Identity::FactorExchange);
    let expected_trials = 2 * config.seed_count * config.vertex_counts.len() as u64;
    ensure(record.trials == expected_trials, || {
        format!("{} trials, expected {expected_trials}", record.trials)
    })?;
    ensure(record.max_rel_err == 0.0 && record.failures == 0 && record.pass, || {
        format!("max rel err {:e}", record.max_rel_err)
    })?;

    let mut checked = 0;
    for n in [3usize, 12, 50] {
        for seed in 0..100u64 {
            let fan = fan_decompose(&random_cyclic_polygon(seed, n, 1.0).map_err(e)?, 0).map_err(e)?;
            let factors = cyclic_area(&fan).map_err(e)?.factors;
            let swapped = factor_exchange(&fan);
            ensure(
                swapped.f1.to_bits() == factors.f2.to_bits() && swapped.f2.to_bits() == factors.f1.to_bits(),
                || format!("n = {n}, seed {seed}: exchange not exact"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "exact over {} fuzz evaluations and {checked} direct fans; global fuzz {}",
        record.trials,
        if report.pass { "pass" } else { "FAIL" }
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 10] = [
        ("AC-1", "3-4-5 split, hypotenuse product and Heron", ac1),
        ("AC-2", "Pythagoras in tangent lengths, 1000 right triangles", ac2),
        ("AC-3", "quadrilaterals vs Brahmagupta and shoelace", ac3),
        ("AC-4", "general formula vs shoelace, 8 vertex counts x 1000", ac4),
        ("AC-5", "chain products on 200 decagons, all pairs", ac5),
        ("AC-6", "apex independence on 200 octagons", ac6),
        ("AC-7", "boundary reconstruction on 500 fans up to n = 20", ac7),
        ("AC-8", "circumradius solver", ac8),
        ("AC-9", "named values", ac9),
        ("AC-10", "factor exchange symmetry", ac10),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
