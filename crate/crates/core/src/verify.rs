//! Identity harness: runs every area identity on a polygon, or on a seeded
//! grid of random polygons, and reports the largest relative error seen for
//! each.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::area::{
    brahmagupta_area, cyclic_area, factor_exchange, heron_area,
    inradius_chain_product, pair_area_product, reconstruct_internal,
};
use crate::construction::{from_central_angles, random_gaps};
use crate::error::{Error, Result};
use crate::fan::{edge_partition, fan_decompose, FanDecomposition};
use crate::geometry::{shoelace_area, CyclicPolygon, MIN_GAP};
use crate::spec::PolygonSpec;

/// `|x − y| / max(|x|, |y|, 1e−300)`
pub fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1e-300)
}

/// A triangle side is treated as a diameter when its central angle is within
/// this many radians of π.
pub const DIAMETER_ARC_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Two-bracket area against the shoelace area of the vertices.
    OracleEquivalence,
    /// Spread of the two-bracket area over every apex choice.
    ApexIndependence,
    /// Two-bracket area against the sum of the fan's Heron areas.
    FanAdditivity,
    /// Shared diagonals agree from both neighbouring triangles.
    ChainConstraint,
    /// `ρ·(r+s+t)` against `abc / 4R` on the chord side lengths.
    IncircleArea,
    /// `√(rst/p)` against `abc / 4R` over the chord semiperimeter.
    InradiusFormula,
    /// `ρ_i / r_i = t_{i+1} / ρ_{i+1}`
    SimilitudeChain,
    /// `s_h t_h s_k r_k Π s_i/p_i = A_h A_k`
    PairProductForm1,
    /// `p_h r_h p_k t_k Π p_i/s_i = A_h A_k`
    PairProductForm2,
    /// `r_h t_k Π p_i/s_i = ρ_h ρ_k`
    InradiusChain,
    /// Hypotenuse segment product against the area of a right fan triangle.
    RightTriangleProduct,
    /// Legs squared against hypotenuse squared in tangent lengths.
    Pythagorean,
    /// Apex tangents and semiperimeters rebuilt from edge segments.
    Reconstruction,
    /// Exchanging `r ↔ t`, `s ↔ p` maps one bracket onto the other exactly.
    FactorExchange,
    /// Two-bracket area of a quadrilateral against Brahmagupta.
    Brahmagupta,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::OracleEquivalence,
        Identity::ApexIndependence,
        Identity::FanAdditivity,
        Identity::ChainConstraint,
        Identity::IncircleArea,
        Identity::InradiusFormula,
        Identity::SimilitudeChain,
        Identity::PairProductForm1,
        Identity::PairProductForm2,
        Identity::InradiusChain,
        Identity::RightTriangleProduct,
        Identity::Pythagorean,
        Identity::Reconstruction,
        Identity::FactorExchange,
        Identity::Brahmagupta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::OracleEquivalence => "oracle_equivalence",
            Identity::ApexIndependence => "apex_independence",
            Identity::FanAdditivity => "fan_additivity",
            Identity::ChainConstraint => "chain_constraint",
            Identity::IncircleArea => "incircle_area",
            Identity::InradiusFormula => "inradius_formula",
            Identity::SimilitudeChain => "similitude_chain",
            Identity::PairProductForm1 => "pair_product_form1",
            Identity::PairProductForm2 => "pair_product_form2",
            Identity::InradiusChain => "inradius_chain",
            Identity::RightTriangleProduct => "right_triangle_product",
            Identity::Pythagorean => "pythagorean",
            Identity::Reconstruction => "reconstruction",
            Identity::FactorExchange => "factor_exchange",
            Identity::Brahmagupta => "brahmagupta",
        }
    }

    pub fn from_name(name: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == name)
    }

    /// Default relative tolerance. Zero means exact equality.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Identity::OracleEquivalence | Identity::ApexIndependence => 1e-8,
            Identity::FanAdditivity | Identity::Brahmagupta => 1e-9,
            Identity::PairProductForm1 | Identity::PairProductForm2 | Identity::InradiusChain => {
                1e-9
            }
            Identity::ChainConstraint
            | Identity::SimilitudeChain
            | Identity::RightTriangleProduct
            | Identity::Pythagorean
            | Identity::Reconstruction => 1e-10,
            Identity::IncircleArea | Identity::InradiusFormula => 1e-10,
            Identity::FactorExchange => 0.0,
        }
    }
}

/// Per-identity relative tolerances.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Tolerances(BTreeMap<Identity, f64>);

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances(
            Identity::ALL
                .into_iter()
                .map(|i| (i, i.default_tolerance()))
                .collect(),
        )
    }
}

impl Tolerances {
    /// Defaults with the given entries replaced.
    pub fn with_overrides(overrides: &BTreeMap<Identity, f64>) -> Result<Self> {
        let mut tolerances = Tolerances::default();
        for (&identity, &tol) in overrides {
            tolerances.set(identity, tol)?;
        }
        Ok(tolerances)
    }

    pub fn set(&mut self, identity: Identity, tolerance: f64) -> Result<()> {
        if !(tolerance.is_finite() && tolerance >= 0.0) {
            return Err(Error::InvalidSpec(format!(
                "tolerance for {} must be finite and non-negative, got {tolerance}",
                identity.name()
            )));
        }
        self.0.insert(identity, tolerance);
        Ok(())
    }

    pub fn get(&self, identity: Identity) -> f64 {
        self.0
            .get(&identity)
            .copied()
            .unwrap_or_else(|| identity.default_tolerance())
    }
}

/// Outcome of one identity over all trials folded into it so far.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub trials: u64,
    /// Trials whose computation raised an error instead of producing a value.
    pub failures: u64,
    pub max_rel_err: f64,
    pub worst_seed: Option<u64>,
    pub worst_case: Option<PolygonSpec>,
    pub pass: bool,
}

impl IdentityRecord {
    fn empty() -> Self {
        IdentityRecord {
            trials: 0,
            failures: 0,
            max_rel_err: 0.0,
            worst_seed: None,
            worst_case: None,
            pass: true,
        }
    }

    /// Larger error wins; ties go to the smaller seed, then the smaller
    /// polygon, so that merging is independent of order.
    fn worse_than(&self, other: &IdentityRecord) -> bool {
        match self.max_rel_err.total_cmp(&other.max_rel_err) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => self.case_key() < other.case_key(),
        }
    }

    fn case_key(&self) -> (u64, usize, String) {
        let size = match &self.worst_case {
            Some(PolygonSpec::Random { vertex_count, .. }) => *vertex_count,
            Some(PolygonSpec::CentralAngles { gaps, .. }) => gaps.len(),
            Some(PolygonSpec::SideLengths { sides }) => sides.len(),
            Some(PolygonSpec::Vertices { points }) => points.len(),
            None => usize::MAX,
        };
        let text = self
            .worst_case
            .as_ref()
            .and_then(|c| crate::json::to_string(c).ok())
            .unwrap_or_default();
        (self.worst_seed.unwrap_or(u64::MAX), size, text)
    }

    fn merge(self, other: IdentityRecord) -> IdentityRecord {
        let trials = self.trials + other.trials;
        let failures = self.failures + other.failures;
        let worst = if other.worse_than(&self) { other } else { self };
        IdentityRecord {
            trials,
            failures,
            ..worst
        }
    }
}

/// Echo of the settings a report was produced with.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportConfig {
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_start: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_counts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub near_degenerate: Option<f64>,
}

impl ReportConfig {
    fn single(tolerances: &Tolerances) -> Self {
        ReportConfig {
            tolerances: tolerances.clone(),
            seed_start: None,
            seed_count: None,
            vertex_counts: None,
            radius: None,
            near_degenerate: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub config: ReportConfig,
    pub identities: BTreeMap<Identity, IdentityRecord>,
}

impl VerificationReport {
    pub fn record(&self, identity: Identity) -> &IdentityRecord {
        &self.identities[&identity]
    }

    /// Identities whose verdict is a failure.
    pub fn failing(&self) -> Vec<Identity> {
        self.identities
            .iter()
            .filter(|(_, r)| !r.pass)
            .map(|(&i, _)| i)
            .collect()
    }

    /// Combines two reports over disjoint trials. Associative and
    /// commutative; the configuration of `self` is kept.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        for (identity, record) in other.identities {
            let merged = match self.identities.remove(&identity) {
                Some(mine) => mine.merge(record),
                None => record,
            };
            self.identities.insert(identity, merged);
        }
        self.finalize();
        self
    }

    fn finalize(&mut self) {
        for (&identity, record) in self.identities.iter_mut() {
            let tol = self.config.tolerances.get(identity);
            record.pass = record.failures == 0 && record.max_rel_err <= tol;
        }
        self.pass = self.identities.values().all(|r| r.pass);
    }

    pub fn to_json(&self) -> Result<String> {
        crate::json::to_string(self)
    }
}

/// Per-identity trial counts and maximum errors for one polygon.
#[derive(Default)]
struct Observations(BTreeMap<Identity, (u64, u64, f64)>);

impl Observations {
    fn observe(&mut self, identity: Identity, err: f64) {
        let entry = self.0.entry(identity).or_insert((0, 0, 0.0));
        entry.0 += 1;
        // NaN counts as the worst possible error.
        let err = if err.is_nan() { f64::INFINITY } else { err };
        if err > entry.2 {
            entry.2 = err;
        }
    }

    fn compare(&mut self, identity: Identity, x: f64, y: f64) {
        self.observe(identity, rel_err(x, y));
    }

    fn fail(&mut self, identity: Identity) {
        let entry = self.0.entry(identity).or_insert((0, 0, 0.0));
        entry.0 += 1;
        entry.1 += 1;
    }

    /// Records `value` or, on error, a failed trial.
    fn check<T>(&mut self, identity: Identity, value: Result<T>) -> Option<T> {
        match value {
            Ok(v) => Some(v),
            Err(_) => {
                self.fail(identity);
                None
            }
        }
    }
}

/// Central angles of the three sides of fan triangle `j` (1-based) facing the
/// apex, `V_j` and `V_{j+1}` respectively.
fn triangle_arcs(poly: &CyclicPolygon, apex: usize, j: usize) -> [f64; 3] {
    let m = poly.vertex_count();
    let gaps = poly.gaps();
    let arc_to = |k: usize| -> f64 {
        let forward: f64 = (0..k).map(|i| gaps[(apex + i) % m]).sum();
        let backward: f64 = (k..m).map(|i| gaps[(apex + i) % m]).sum();
        forward.min(backward)
    };
    [gaps[(apex + j) % m], arc_to(j + 1), arc_to(j)]
}

fn observe_right_triangles(
    obs: &mut Observations,
    poly: &CyclicPolygon,
    apex: usize,
    fan: &FanDecomposition,
) {
    for (idx, tri) in fan.splits().iter().enumerate() {
        let arcs = triangle_arcs(poly, apex, idx + 1);
        // tangents at the apex, V_j and V_{j+1}, aligned with `arcs`
        let tangents = [tri.s, tri.r, tri.t];
        for (corner, arc) in arcs.iter().enumerate() {
            if (arc - PI).abs() > DIAMETER_ARC_TOLERANCE {
                continue;
            }
            let right = tangents[corner];
            let a = tangents[(corner + 1) % 3];
            let b = tangents[(corner + 2) % 3];
            if let Some(product) = obs.check(
                Identity::RightTriangleProduct,
                crate::area::right_triangle_area_product(a, b),
            ) {
                obs.compare(Identity::RightTriangleProduct, product, tri.area);
            }
            let legs = (right + a).powi(2) + (right + b).powi(2);
            obs.compare(Identity::Pythagorean, legs, (a + b).powi(2));
        }
    }
}

fn observe_polygon(poly: &CyclicPolygon) -> Observations {
    let mut obs = Observations::default();
    let m = poly.vertex_count();

    let Some(fan) = obs.check(Identity::OracleEquivalence, fan_decompose(poly, 0)) else {
        return obs;
    };
    let Some(result) = obs.check(Identity::OracleEquivalence, cyclic_area(&fan)) else {
        return obs;
    };
    let area = result.area;
    match shoelace_area(&poly.vertices()) {
        Ok(oracle) => obs.compare(Identity::OracleEquivalence, area, oracle),
        Err(_) => obs.fail(Identity::OracleEquivalence),
    }

    let mut apex_areas = vec![area];
    for apex in 1..m {
        match fan_decompose(poly, apex).and_then(|f| cyclic_area(&f)) {
            Ok(r) => apex_areas.push(r.area),
            Err(_) => obs.fail(Identity::ApexIndependence),
        }
        if let Ok(f) = fan_decompose(poly, apex) {
            observe_right_triangles(&mut obs, poly, apex, &f);
        }
    }
    let hi = apex_areas.iter().copied().fold(f64::MIN, f64::max);
    let lo = apex_areas.iter().copied().fold(f64::MAX, f64::min);
    obs.compare(Identity::ApexIndependence, hi, lo);

    let heron_sum: Result<f64> = fan
        .splits()
        .iter()
        .map(|t| heron_area(t.r, t.s, t.t))
        .sum();
    if let Some(sum) = obs.check(Identity::FanAdditivity, heron_sum) {
        obs.compare(Identity::FanAdditivity, area, sum);
    }

    for (left, right) in fan.diagonals() {
        obs.compare(Identity::ChainConstraint, left, right);
    }

    let splits = fan.splits();
    for (idx, tri) in splits.iter().enumerate() {
        let j = idx + 1;
        let sides = [
            poly.chord(0, j),
            poly.chord(j, j + 1),
            poly.chord(0, j + 1),
        ];
        // abc / 4R: a product of chords, free of the subtractions in Heron.
        let by_chords = sides[0] * sides[1] * sides[2] / (4.0 * poly.radius());
        obs.compare(Identity::IncircleArea, tri.rho * (tri.r + tri.s + tri.t), by_chords);
        let semi = 0.5 * (sides[0] + sides[1] + sides[2]);
        let rho = (tri.r * tri.s * tri.t / tri.p).sqrt();
        obs.compare(Identity::InradiusFormula, rho, by_chords / semi);
    }

    for w in splits.windows(2) {
        obs.compare(Identity::SimilitudeChain, w[0].rho / w[0].r, w[1].t / w[1].rho);
    }

    let n = fan.len();
    for h in 1..n {
        for k in h + 1..=n {
            let direct = fan.triangle(h).area * fan.triangle(k).area;
            if let Some((form1, form2)) =
                obs.check(Identity::PairProductForm1, pair_area_product(&fan, h, k))
            {
                obs.compare(Identity::PairProductForm1, form1, direct);
                obs.compare(Identity::PairProductForm2, form2, direct);
            }
            if let Some(rho) = obs.check(Identity::InradiusChain, inradius_chain_product(&fan, h, k)) {
                let direct = fan.triangle(h).rho * fan.triangle(k).rho;
                obs.compare(Identity::InradiusChain, rho, direct);
            }
        }
    }

    observe_right_triangles(&mut obs, poly, 0, &fan);

    let rebuilt = edge_partition(&fan).and_then(|b| reconstruct_internal(&b).map(|r| (b, r)));
    if let Some((boundary, rec)) = obs.check(Identity::Reconstruction, rebuilt) {
        for (q, tri) in splits.iter().enumerate().skip(1) {
            obs.compare(Identity::Reconstruction, rec.s[q - 1], tri.s);
            obs.compare(Identity::Reconstruction, rec.p[q - 1], tri.p);
        }
        obs.compare(
            Identity::Reconstruction,
            boundary.s_last + rec.s_last_residual,
            boundary.s_last,
        );
    }

    let exchanged = factor_exchange(&fan);
    for (x, y) in [
        (exchanged.f1, result.factors.f2),
        (exchanged.f2, result.factors.f1),
    ] {
        let err = if x.to_bits() == y.to_bits() {
            0.0
        } else {
            rel_err(x, y).max(f64::MIN_POSITIVE)
        };
        obs.observe(Identity::FactorExchange, err);
    }

    if m == 4 {
        let s = poly.side_lengths();
        if let Some(b) = obs.check(Identity::Brahmagupta, brahmagupta_area(s[0], s[1], s[2], s[3])) {
            obs.compare(Identity::Brahmagupta, area, b);
        }
    }
    obs
}

fn build_report(
    obs: Observations,
    config: ReportConfig,
    seed: Option<u64>,
    case: &PolygonSpec,
) -> VerificationReport {
    let mut identities: BTreeMap<Identity, IdentityRecord> = Identity::ALL
        .into_iter()
        .map(|i| (i, IdentityRecord::empty()))
        .collect();
    for (identity, (trials, failures, err)) in obs.0 {
        identities.insert(
            identity,
            IdentityRecord {
                trials,
                failures,
                max_rel_err: err,
                worst_seed: seed,
                worst_case: Some(case.clone()),
                pass: true,
            },
        );
    }
    let mut report = VerificationReport {
        pass: true,
        config,
        identities,
    };
    report.finalize();
    report
}

/// Runs every identity on one polygon.
pub fn verify_polygon(poly: &CyclicPolygon, tolerances: &Tolerances) -> VerificationReport {
    build_report(
        observe_polygon(poly),
        ReportConfig::single(tolerances),
        None,
        &PolygonSpec::of_polygon(poly),
    )
}

/// Seeded grid for [`fuzz`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzConfig {
    pub seed_start: u64,
    pub seed_count: u64,
    pub vertex_counts: Vec<usize>,
    #[serde(default = "default_radius")]
    pub radius: f64,
    #[serde(default)]
    pub tolerances: BTreeMap<Identity, f64>,
    /// When set, the first gap of every polygon is pinched to this central
    /// angle and the others are rescaled to close the circle.
    #[serde(default)]
    pub near_degenerate: Option<f64>,
}

fn default_radius() -> f64 {
    1.0
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed_start: 0,
            seed_count: 1000,
            vertex_counts: (3..=10).collect(),
            radius: 1.0,
            tolerances: BTreeMap::new(),
            near_degenerate: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<Tolerances> {
        if self.seed_count == 0 {
            return Err(Error::InvalidSpec("seed_count must be at least 1".into()));
        }
        if self.vertex_counts.is_empty() || self.vertex_counts.iter().any(|&n| n < 3) {
            return Err(Error::InvalidSpec(
                "vertex_counts must be non-empty with every entry at least 3".into(),
            ));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "radius must be positive, got {}",
                self.radius
            )));
        }
        if let Some(pinch) = self.near_degenerate {
            if !(MIN_GAP..PI).contains(&pinch) {
                return Err(Error::InvalidSpec(format!(
                    "near_degenerate gap must lie in [{MIN_GAP:e}, π), got {pinch}"
                )));
            }
        }
        Tolerances::with_overrides(&self.tolerances)
    }

    /// The polygon for one grid point, with the spec that replays it.
    pub fn polygon(&self, seed: u64, vertex_count: usize) -> Result<(CyclicPolygon, PolygonSpec)> {
        match self.near_degenerate {
            None => {
                let spec = PolygonSpec::Random {
                    seed,
                    vertex_count,
                    radius: self.radius,
                };
                Ok((spec.build()?, spec))
            }
            Some(pinch) => {
                let mut gaps = random_gaps(seed, vertex_count);
                let rest: f64 = gaps[1..].iter().sum();
                let scale = (2.0 * PI - pinch) / rest;
                gaps[0] = pinch;
                gaps[1..].iter_mut().for_each(|g| *g *= scale);
                let poly = from_central_angles(self.radius, &gaps)?;
                let spec = PolygonSpec::of_polygon(&poly);
                Ok((poly, spec))
            }
        }
    }

    fn echo(&self, tolerances: Tolerances) -> ReportConfig {
        ReportConfig {
            tolerances,
            seed_start: Some(self.seed_start),
            seed_count: Some(self.seed_count),
            vertex_counts: Some(self.vertex_counts.clone()),
            radius: Some(self.radius),
            near_degenerate: self.near_degenerate,
        }
    }
}

/// Runs [`verify_polygon`] over the seed × vertex-count grid in parallel.
/// Identical configurations give identical reports.
pub fn fuzz(config: &FuzzConfig) -> Result<VerificationReport> {
    let tolerances = config.validate()?;
    let echo = config.echo(tolerances);
    let grid: Vec<(u64, usize)> = config
        .vertex_counts
        .iter()
        .flat_map(|&n| (0..config.seed_count).map(move |i| (i, n)))
        .map(|(i, n)| (config.seed_start.wrapping_add(i), n))
        .collect();

    let empty = build_report(
        Observations::default(),
        echo.clone(),
        None,
        &PolygonSpec::Random {
            seed: config.seed_start,
            vertex_count: config.vertex_counts[0],
            radius: config.radius,
        },
    );
    let report = grid
        .par_iter()
        .map(|&(seed, n)| {
            let (obs, spec) = match config.polygon(seed, n) {
                Ok((poly, spec)) => (observe_polygon(&poly), spec),
                Err(_) => {
                    let mut obs = Observations::default();
                    obs.fail(Identity::OracleEquivalence);
                    (obs, PolygonSpec::Random { seed, vertex_count: n, radius: config.radius })
                }
            };
            build_report(obs, echo.clone(), Some(seed), &spec)
        })
        .reduce(|| empty.clone(), VerificationReport::merge);
    Ok(report)
}

/// Repeats [`fuzz`] with the first gap pinched to each of `pinches`, to see how
/// the errors grow as a polygon approaches degeneracy.
pub fn pinch_sweep(config: &FuzzConfig, pinches: &[f64]) -> Result<Vec<(f64, VerificationReport)>> {
    pinches
        .iter()
        .map(|&pinch| {
            let cfg = FuzzConfig {
                near_degenerate: Some(pinch),
                ..config.clone()
            };
            fuzz(&cfg).map(|r| (pinch, r))
        })
        .collect()
}
