//! Named property suites behind the `verify` command.
//!
//! Every suite draws its randomness from the run seed combined with the
//! check name, so reports are reproducible check by check. Checks record
//! the extremal measured value (worst violation or tightest margin) and a
//! serialized witness when they fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::john::{john_transform, Gauge};
use crate::lab::{displacement_residual, estimate_lipschitz, lipschitz_ratio, SearchConfig};
use crate::pipeline::{adjoin_two, normalize_unit, norming_clamp, pinned_truncate};
use crate::report::{CheckResult, ExperimentReport};
use crate::retraction::{transfer_retraction, PointMap, RetractionCandidate};
use crate::sample::DomainSampler;
use crate::space::{CircleMetric, Exponent, Point, Space, TAU};
use crate::subset::{FiniteSubset, ReduceMode};

pub const SUITE_NAMES: &[&str] = &[
    "metric",
    "hausdorff",
    "lemma31",
    "lemma32",
    "lemma33",
    "lemma42",
    "john",
    "pipeline",
    "hadamard",
];

/// Runs one named suite. `trials` caps the per-check sample counts (the
/// defaults match the documented invariants).
pub fn run_suite(
    name: &str,
    seed: u64,
    tol: f64,
    trials: Option<usize>,
) -> Result<ExperimentReport> {
    let checks = match name {
        "metric" => suite_metric(seed, tol, trials),
        "hausdorff" => suite_hausdorff(seed, tol, trials),
        "lemma31" => suite_lemma31(seed, tol, trials),
        "lemma32" => suite_lemma32(seed, tol, trials),
        "lemma33" => suite_lemma33(seed, tol, trials),
        "lemma42" => suite_lemma42(seed, tol, trials),
        "john" => suite_john(),
        "pipeline" => suite_pipeline(seed, tol, trials),
        "hadamard" => suite_hadamard(seed, tol, trials),
        other => {
            return Err(Error::invalid(format!(
                "unknown suite {other:?}; available: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }?;
    let mut report = ExperimentReport::new(format!("verify {name}"), name, seed, tol);
    report.checks = checks;
    Ok(report)
}

fn check_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(check_seed(seed, name))
}

fn cap(trials: Option<usize>, default: usize) -> usize {
    trials.unwrap_or(default).max(1)
}

fn random_subset(space: &Space, card: usize, rng: &mut ChaCha8Rng) -> Result<FiniteSubset> {
    DomainSampler::uniform(space.clone(), card)?.sample(rng)
}

fn equally_spaced_circle(n: usize) -> FiniteSubset {
    let angles: Vec<f64> = (0..n).map(|i| TAU * i as f64 / n as f64).collect();
    FiniteSubset::from_angles(CircleMetric::Arclength, &angles).expect("valid angles")
}

/// Running extremum with the witness that attained it.
struct Extremum {
    value: f64,
    witness: Option<serde_json::Value>,
}

impl Extremum {
    fn lowest() -> Self {
        Extremum {
            value: f64::NEG_INFINITY,
            witness: None,
        }
    }

    fn highest() -> Self {
        Extremum {
            value: f64::INFINITY,
            witness: None,
        }
    }

    fn update_max(&mut self, v: f64, witness: impl FnOnce() -> serde_json::Value) {
        if v > self.value || self.witness.is_none() {
            self.value = v.max(self.value);
            self.witness = Some(witness());
        }
    }

    fn update_min(&mut self, v: f64, witness: impl FnOnce() -> serde_json::Value) {
        if v < self.value || self.witness.is_none() {
            self.value = v.min(self.value);
            self.witness = Some(witness());
        }
    }

    fn check_at_most(self, name: &str, bound: f64, detail: impl Into<String>) -> CheckResult {
        if self.value <= bound {
            CheckResult::pass(name, self.value, detail)
        } else {
            CheckResult::fail(name, self.value, detail, self.witness)
        }
    }

    fn check_at_least(self, name: &str, bound: f64, detail: impl Into<String>) -> CheckResult {
        if self.value >= bound {
            CheckResult::pass(name, self.value, detail)
        } else {
            CheckResult::fail(name, self.value, detail, self.witness)
        }
    }
}

fn metric_spaces() -> Vec<Space> {
    vec![
        Space::euclidean(2).expect("valid"),
        Space::pnorm(2, Exponent::Finite(1.0)).expect("valid"),
        Space::pnorm(2, Exponent::Finite(3.0)).expect("valid"),
        Space::pnorm(2, Exponent::Infinity).expect("valid"),
        Space::circle(CircleMetric::Arclength),
        Space::circle(CircleMetric::Chordal),
        Space::unit_interval(),
        Space::tripod([1.0, 1.5, 2.0]).expect("valid"),
    ]
}

fn subset_spaces() -> Vec<Space> {
    vec![
        Space::unit_interval(),
        Space::euclidean(2).expect("valid"),
        Space::circle(CircleMetric::Arclength),
        Space::tripod([1.0, 1.0, 1.0]).expect("valid"),
    ]
}

// ---------------------------------------------------------------------------
// metric
// ---------------------------------------------------------------------------

fn suite_metric(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let n_triples = cap(trials, 10_000);

    for space in metric_spaces() {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("metric-axioms-{label}"));
        let sampler = DomainSampler::uniform(space.clone(), 1)?;
        let mut sym = Extremum::lowest();
        let mut triangle = Extremum::lowest();
        let mut identity = Extremum::lowest();
        for _ in 0..n_triples {
            let x = sampler.sample_point(&mut rng);
            let y = sampler.sample_point(&mut rng);
            let z = sampler.sample_point(&mut rng);
            let dxy = space.distance(&x, &y)?;
            let dyx = space.distance(&y, &x)?;
            let dyz = space.distance(&y, &z)?;
            let dxz = space.distance(&x, &z)?;
            let witness = || json!({"space": space, "x": x, "y": y, "z": z});
            sym.update_max((dxy - dyx).abs(), witness);
            triangle.update_max(dxz - dxy - dyz, witness);
            identity.update_max(space.distance(&x, &x)?, witness);
        }
        checks.push(sym.check_at_most(
            &format!("symmetry[{label}]"),
            0.0,
            "max |d(x,y) − d(y,x)| over sampled pairs",
        ));
        checks.push(identity.check_at_most(
            &format!("identity[{label}]"),
            0.0,
            "max d(x,x) over sampled points",
        ));
        checks.push(triangle.check_at_most(
            &format!("triangle[{label}]"),
            tol,
            "max d(x,z) − d(x,y) − d(y,z) over sampled triples",
        ));
    }

    // Geodesics: the defining identity d(γ(t), γ(s)) = |t−s|·d(p,q) at 16
    // sampled parameters per pair (s = 0 covers the endpoint identity).
    for space in metric_spaces() {
        if !space.is_geodesic() {
            continue;
        }
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("metric-geodesic-{label}"));
        let sampler = DomainSampler::uniform(space.clone(), 1)?;
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 10_000) / 16 {
            let p = sampler.sample_point(&mut rng);
            let q = sampler.sample_point(&mut rng);
            let total = space.distance(&p, &q)?;
            for i in 0..=16 {
                let t = i as f64 / 16.0;
                let s: f64 = if i % 4 == 0 { 0.0 } else { rng.gen_range(0.0..=1.0) };
                let gt = space.geodesic_point(&p, &q, t)?;
                let gs = space.geodesic_point(&p, &q, s)?;
                let err =
                    (space.distance(&gt, &gs)? - (t - s).abs() * total).abs() / total.max(1.0);
                worst.update_max(err, || json!({"space": space, "p": p, "q": q, "t": t, "s": s}));
            }
        }
        checks.push(worst.check_at_most(
            &format!("geodesic-identity[{label}]"),
            tol,
            "max relative error of d(γ(t), γ(s)) = |t−s|·d(p,q)",
        ));
    }

    // Segment projections never increase distances.
    for space in [
        Space::euclidean(2)?,
        Space::unit_interval(),
        Space::tripod([1.0, 1.5, 2.0])?,
    ] {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("metric-projection-{label}"));
        let sampler = DomainSampler::uniform(space.clone(), 1)?;
        let mut expansion = Extremum::lowest();
        for _ in 0..cap(trials, 10_000) {
            let p = sampler.sample_point(&mut rng);
            let q = sampler.sample_point(&mut rng);
            let z1 = sampler.sample_point(&mut rng);
            let z2 = sampler.sample_point(&mut rng);
            let pr1 = space.project_to_segment(&p, &q, &z1)?;
            let pr2 = space.project_to_segment(&p, &q, &z2)?;
            let gap = space.distance(&pr1, &pr2)? - space.distance(&z1, &z2)?;
            expansion.update_max(
                gap,
                || json!({"space": space, "p": p, "q": q, "z1": z1, "z2": z2}),
            );
        }
        checks.push(expansion.check_at_most(
            &format!("projection-nonexpansive[{label}]"),
            tol,
            "max d(proj z, proj z') − d(z, z') over sampled pairs",
        ));
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// hausdorff
// ---------------------------------------------------------------------------

fn suite_hausdorff(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();

    for space in subset_spaces() {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("hausdorff-axioms-{label}"));
        let mut sym = Extremum::lowest();
        let mut triangle = Extremum::lowest();
        let mut identity = Extremum::lowest();
        for _ in 0..cap(trials, 10_000) {
            let a = random_subset(&space, rng.gen_range(1..=5), &mut rng)?;
            let b = random_subset(&space, rng.gen_range(1..=5), &mut rng)?;
            let c = random_subset(&space, rng.gen_range(1..=5), &mut rng)?;
            let dab = a.hausdorff(&b)?;
            let dba = b.hausdorff(&a)?;
            let dbc = b.hausdorff(&c)?;
            let dac = a.hausdorff(&c)?;
            let witness = || json!({"a": a, "b": b, "c": c});
            sym.update_max((dab - dba).abs(), witness);
            triangle.update_max(dac - dab - dbc, witness);
            identity.update_max(a.hausdorff(&a)?, witness);
        }
        checks.push(sym.check_at_most(
            &format!("symmetry[{label}]"),
            0.0,
            "max |d_H(A,B) − d_H(B,A)|",
        ));
        checks.push(identity.check_at_most(&format!("identity[{label}]"), 0.0, "max d_H(A,A)"));
        checks.push(triangle.check_at_most(
            &format!("triangle[{label}]"),
            tol,
            "max d_H(A,C) − d_H(A,B) − d_H(B,C)",
        ));
    }

    // Extremes of line subsets move at most by the Hausdorff distance.
    {
        let space = Space::unit_interval();
        let mut rng = rng_for(seed, "hausdorff-maxmin");
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 10_000) {
            let a = random_subset(&space, rng.gen_range(1..=6), &mut rng)?;
            let b = random_subset(&space, rng.gen_range(1..=6), &mut rng)?;
            let d = a.hausdorff(&b)?;
            let (sa, sb) = (a.scalars()?, b.scalars()?);
            let gap = (sa.last().unwrap() - sb.last().unwrap())
                .abs()
                .max((sa[0] - sb[0]).abs());
            worst.update_max(gap - d, || json!({"a": a, "b": b}));
        }
        checks.push(worst.check_at_most(
            "extremes-bounded-by-hausdorff",
            1e-12,
            "max (|max A − max B| ∨ |min A − min B|) − d_H(A,B) on [0,1]",
        ));
    }

    // Set semantics: permutations with repeats canonicalize identically.
    {
        let mut rng = rng_for(seed, "hausdorff-dedup");
        let mut ok = true;
        let mut witness = None;
        for space in subset_spaces() {
            for _ in 0..cap(trials, 10_000) / 10 {
                let a = random_subset(&space, rng.gen_range(1..=5), &mut rng)?;
                let mut pts = a.points().to_vec();
                let dup = pts[rng.gen_range(0..pts.len())].clone();
                pts.push(dup);
                let k = rng.gen_range(0..pts.len());
                pts.rotate_left(k);
                let again = FiniteSubset::new(space.clone(), pts)?;
                if again != a {
                    ok = false;
                    witness = Some(json!({"a": a, "rebuilt": again}));
                }
            }
        }
        checks.push(if ok {
            CheckResult::pass(
                "dedup-canonical-form",
                0.0,
                "rebuild with repeats is identical",
            )
        } else {
            CheckResult::fail(
                "dedup-canonical-form",
                1.0,
                "canonical form differs",
                witness,
            )
        });
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// lemma31 (one-point reductions and the k-center cross-check)
// ---------------------------------------------------------------------------

fn suite_lemma31(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();

    for space in subset_spaces() {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("lemma31-{label}"));
        let mut drop_excess = Extremum::lowest();
        let mut merge_excess = Extremum::lowest();
        let mut small_fixed = true;
        for _ in 0..cap(trials, 10_000) {
            let n = rng.gen_range(2..=8usize);
            let a = random_subset(&space, n, &mut rng)?;
            let delta = a.min_separation(n)?;
            let dropped = a.reduce_by_one(n, ReduceMode::Drop)?;
            drop_excess.update_max(a.hausdorff(&dropped)? - delta, || json!({"a": a, "n": n}));
            let merged = a.reduce_by_one(n, ReduceMode::Merge)?;
            merge_excess.update_max(
                a.hausdorff(&merged)? - delta / 2.0,
                || json!({"a": a, "n": n}),
            );
            let small = random_subset(&space, n - 1, &mut rng)?;
            if small.reduce_by_one(n, ReduceMode::Drop)? != small {
                small_fixed = false;
            }
        }
        checks.push(drop_excess.check_at_most(
            &format!("drop-within-minsep[{label}]"),
            1e-12,
            "max d_H(A, drop(A)) − δ_n(A)",
        ));
        checks.push(merge_excess.check_at_most(
            &format!("merge-within-half-minsep[{label}]"),
            1e-12,
            "max d_H(A, merge(A)) − δ_n(A)/2",
        ));
        checks.push(if small_fixed {
            CheckResult::pass(
                format!("small-sets-fixed[{label}]"),
                0.0,
                "reduction is the identity below the cap",
            )
        } else {
            CheckResult::fail(
                format!("small-sets-fixed[{label}]"),
                1.0,
                "a set below the cap moved",
                None,
            )
        });
    }

    // On the interval the optimal (n−1)-center radius is exactly δ_n/2.
    {
        let space = Space::unit_interval();
        let mut rng = rng_for(seed, "lemma31-kcenter-minsep");
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 10_000) {
            let n = rng.gen_range(2..=8usize);
            let a = random_subset(&space, n, &mut rng)?;
            let r = a.exact_kcenter(n - 1)?;
            worst.update_max(
                (r.radius - a.min_separation(n)? / 2.0).abs(),
                || json!({"a": a, "n": n}),
            );
        }
        checks.push(worst.check_at_most(
            "kcenter-radius-equals-half-minsep",
            tol,
            "max |kcenter(A, n−1).radius − δ_n(A)/2| on [0,1]",
        ));
    }

    // Brute-force oracle agreement on small sets, line and circle.
    for space in [
        Space::unit_interval(),
        Space::circle(CircleMetric::Arclength),
    ] {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("lemma31-brute-{label}"));
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 10_000).min(500) {
            let card = rng.gen_range(2..=6usize);
            let k = rng.gen_range(1..card);
            let a = random_subset(&space, card, &mut rng)?;
            let exact = a.exact_kcenter(k)?.radius;
            let brute = brute_force_kcenter(&a, k)?;
            worst.update_max((exact - brute).abs(), || json!({"a": a, "k": k}));
        }
        checks.push(worst.check_at_most(
            &format!("kcenter-matches-brute-force[{label}]"),
            tol,
            "max |dp radius − partition-enumeration radius|, |A| ≤ 6",
        ));
    }

    Ok(checks)
}

/// Independent k-center oracle: enumerate every partition of the points
/// into at most k clusters (not only contiguous ones) and take the best
/// single-center radius per cluster.
pub fn brute_force_kcenter(a: &FiniteSubset, k: usize) -> Result<f64> {
    let n = a.len();
    if n <= k {
        return Ok(0.0);
    }
    enum Coords {
        Line(Vec<f64>),
        Circle(Vec<f64>),
    }
    let coords = match a.space() {
        Space::Interval { .. } | Space::Euclidean { d: 1 } | Space::PNorm { d: 1, .. } => {
            Coords::Line(a.scalars()?)
        }
        Space::Circle {
            metric: CircleMetric::Arclength,
        } => Coords::Circle(a.angles()?),
        other => {
            return Err(Error::unsupported(format!(
                "brute-force oracle covers one-dimensional carriers, got {other:?}"
            )))
        }
    };
    let cluster_radius = |members: &[usize]| -> f64 {
        match &coords {
            Coords::Line(xs) => {
                let lo = members.iter().map(|&i| xs[i]).fold(f64::INFINITY, f64::min);
                let hi = members
                    .iter()
                    .map(|&i| xs[i])
                    .fold(f64::NEG_INFINITY, f64::max);
                (hi - lo) / 2.0
            }
            Coords::Circle(angles) => {
                let mut t: Vec<f64> = members.iter().map(|&i| angles[i]).collect();
                t.sort_by(f64::total_cmp);
                let mut max_gap = t[0] + TAU - t[t.len() - 1];
                for w in t.windows(2) {
                    max_gap = max_gap.max(w[1] - w[0]);
                }
                (TAU - max_gap) / 2.0
            }
        }
    };
    let mut best = f64::INFINITY;
    let mut assign = Vec::with_capacity(n);
    fn walk(
        assign: &mut Vec<usize>,
        parts: usize,
        n: usize,
        max_parts: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if assign.len() == n {
            visit(assign);
            return;
        }
        for part in 0..=parts.min(max_parts - 1) {
            assign.push(part);
            walk(assign, parts.max(part + 1), n, max_parts, visit);
            assign.pop();
        }
    }
    walk(&mut assign, 0, n, k, &mut |assignment: &[usize]| {
        let parts = assignment.iter().max().copied().unwrap_or(0) + 1;
        let mut worst: f64 = 0.0;
        for part in 0..parts {
            let members: Vec<usize> = (0..n).filter(|&i| assignment[i] == part).collect();
            worst = worst.max(cluster_radius(&members));
        }
        best = best.min(worst);
    });
    Ok(best)
}

// ---------------------------------------------------------------------------
// lemma32 (displacement inequality)
// ---------------------------------------------------------------------------

fn suite_lemma32(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let space = Space::unit_interval();

    for n in [3usize, 4, 5] {
        let r = RetractionCandidate::merge(space.clone(), n)?;
        let sampler = DomainSampler::clustered(space.clone(), n)?;
        let config = SearchConfig {
            trials: 64,
            steps_per_scale: 50,
            ..SearchConfig::with_seed(check_seed(seed, &format!("lemma32-estimate-{n}")))
        };
        let measured = estimate_lipschitz(&r, &sampler, &config)?;
        let claim = 10.0 * measured.ratio;
        let mut rng = rng_for(seed, &format!("lemma32-residual-{n}"));
        let mut min_residual = Extremum::highest();
        for _ in 0..cap(trials, 1_000) {
            let a = random_subset(&space, rng.gen_range(1..=n), &mut rng)?;
            let res = displacement_residual(&r, &a, claim)?;
            min_residual.update_min(res, || json!({"a": a, "claim": claim}));
        }
        checks.push(min_residual.check_at_least(
            &format!("residual-nonnegative[n={n}]"),
            -tol,
            format!("min (L+1)·dist(A, smaller) − d_H(r(A), A) at L = {claim:.6}"),
        ));
    }

    // A constructed violation: merging then shifting by 1 breaks the claim.
    {
        let shifted =
            RetractionCandidate::new("merge-then-shift", space.clone(), 3, 2, move |a| {
                let merged = a.reduce_by_one(3, ReduceMode::Merge)?;
                let pts: Vec<f64> = merged
                    .scalars()?
                    .iter()
                    .map(|v| (v + 1.0).min(1.0))
                    .collect();
                FiniteSubset::from_scalars(a.space().clone(), &pts)
            })?;
        let a = FiniteSubset::from_scalars(space, &[0.0, 0.45, 0.5])?;
        let res = displacement_residual(&shifted, &a, 0.0)?;
        checks.push(if res < 0.0 {
            CheckResult::pass(
                "adversarial-shift-flagged",
                res,
                "residual goes negative for an invalid Lipschitz claim",
            )
        } else {
            CheckResult::fail(
                "adversarial-shift-flagged",
                res,
                "the constructed violation was not detected",
                Some(json!({"a": a})),
            )
        });
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// lemma33 (induced maps and retraction transfer)
// ---------------------------------------------------------------------------

fn suite_lemma33(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();

    // Induced maps of linear point maps keep the point-map constant, and the
    // sampled supremum attains it.
    let cos30 = (std::f64::consts::PI / 6.0).cos();
    let sin30 = (std::f64::consts::PI / 6.0).sin();
    let mut linear_maps: Vec<PointMap> = Vec::new();
    for lip in [0.5, 1.0, 2.0] {
        linear_maps.push(PointMap::scale(1, lip)?);
        linear_maps.push(PointMap::linear2(
            format!("rot30-scale:{lip}"),
            [[lip * cos30, -lip * sin30], [lip * sin30, lip * cos30]],
            Some(lip),
        )?);
    }
    for map in &linear_maps {
        let lip = map.lip().expect("stock maps carry constants");
        let label = format!("{}[{:?}]", map.name(), map.source());
        let mut rng = rng_for(seed, &format!("lemma33-induced-{label}"));
        let mut excess = Extremum::lowest();
        let mut sup: f64 = 0.0;
        for _ in 0..cap(trials, 10_000) {
            let a = random_subset(map.source(), rng.gen_range(1..=4), &mut rng)?;
            let b = random_subset(map.source(), rng.gen_range(1..=4), &mut rng)?;
            let den = a.hausdorff(&b)?;
            if den == 0.0 {
                continue;
            }
            let num = map.induce(&a)?.hausdorff(&map.induce(&b)?)?;
            let ratio = num / den;
            sup = sup.max(ratio);
            excess.update_max(num - lip * den, || json!({"a": a, "b": b}));
        }
        checks.push(excess.check_at_most(
            &format!("induced-ratio-bounded[{label}]"),
            tol,
            format!("max d_H(gA, gB) − {lip}·d_H(A, B)"),
        ));
        checks.push(if sup >= 0.999 * lip {
            CheckResult::pass(
                format!("induced-sup-attained[{label}]"),
                sup,
                format!("sampled supremum vs constant {lip}"),
            )
        } else {
            CheckResult::fail(
                format!("induced-sup-attained[{label}]"),
                sup,
                format!("sampled supremum below 0.999·{lip}"),
                None,
            )
        });
    }

    // Singleton pairs reproduce the point-map ratio exactly.
    {
        let map = PointMap::scale(1, 2.0)?;
        let mut rng = rng_for(seed, "lemma33-singletons");
        let sampler = DomainSampler::uniform(map.source().clone(), 1)?;
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 1_000) {
            let x = sampler.sample_point(&mut rng);
            let y = sampler.sample_point(&mut rng);
            let den = map.source().distance(&x, &y)?;
            if den == 0.0 {
                continue;
            }
            let point_ratio = map.target().distance(&map.eval(&x)?, &map.eval(&y)?)? / den;
            let a = FiniteSubset::singleton(map.source().clone(), x.clone())?;
            let b = FiniteSubset::singleton(map.source().clone(), y.clone())?;
            let subset_ratio = lipschitz_ratio(&map, &a, &b)?.ratio;
            worst.update_max(
                (point_ratio - subset_ratio).abs(),
                || json!({"x": x, "y": y}),
            );
        }
        checks.push(worst.check_at_most(
            "singleton-ratio-exact",
            0.0,
            "max |point ratio − singleton subset ratio|",
        ));
    }

    // Transfer candidates satisfy the retraction contract.
    {
        let x = Space::euclidean(1)?;
        let r = RetractionCandidate::merge(x, 4)?;
        let f = PointMap::clamp_to_interval(0.0, 1.0)?;
        let g = PointMap::interval_inclusion(0.0, 1.0)?;
        let s = transfer_retraction(&f, &r, &g)?;
        let mut rng = rng_for(seed, "lemma33-transfer-contract");
        let mut fixed = Extremum::lowest();
        for _ in 0..cap(trials, 1_000) {
            let a = random_subset(s.space(), rng.gen_range(1..=s.target_cap()), &mut rng)?;
            fixed.update_max(s.apply(&a)?.hausdorff(&a)?, || json!({"a": a}));
        }
        checks.push(fixed.check_at_most(
            "transfer-fixes-small-sets",
            0.0,
            "max d_H(s(A), A) for |A| ≤ k through clamp/inclusion transfer",
        ));
    }

    // Shipped candidates: identity on small sets, cardinality cap always.
    {
        let mut rng = rng_for(seed, "lemma33-contract");
        let mut candidates: Vec<RetractionCandidate> = Vec::new();
        for n in [3usize, 4, 5] {
            candidates.push(RetractionCandidate::merge(Space::unit_interval(), n)?);
        }
        candidates.push(RetractionCandidate::merge(Space::euclidean(2)?, 3)?);
        let mut ok = true;
        let mut witness = None;
        let per = cap(trials, 10_000) / candidates.len();
        for r in &candidates {
            for _ in 0..per {
                let card = rng.gen_range(1..=r.domain_cap());
                let a = random_subset(r.space(), card, &mut rng)?;
                let out = r.apply(&a)?;
                if out.len() > r.target_cap() || (a.len() <= r.target_cap() && out != a) {
                    ok = false;
                    witness = Some(json!({"candidate": r.name(), "a": a}));
                }
            }
        }
        checks.push(if ok {
            CheckResult::pass(
                "retraction-contract",
                0.0,
                "r(A) = A below the cap, |r(A)| ≤ k",
            )
        } else {
            CheckResult::fail("retraction-contract", 1.0, "contract violated", witness)
        });
    }

    // Conjugating by inverse dilations leaves sampled ratios unchanged.
    {
        let space = Space::euclidean(1)?;
        let r = RetractionCandidate::merge(space.clone(), 3)?;
        let g = PointMap::scale(1, 2.0)?;
        let f = PointMap::scale(1, 0.5)?;
        let s = transfer_retraction(&f, &r, &g)?;
        let mut rng = rng_for(seed, "lemma33-conjugation");
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 1_000).min(500) {
            let a = random_subset(&space, 3, &mut rng)?;
            let b = random_subset(&space, 3, &mut rng)?;
            if a.hausdorff(&b)? == 0.0 {
                continue;
            }
            let ratio_s = lipschitz_ratio(&s, &a, &b)?.ratio;
            let (ga, gb) = (g.induce(&a)?, g.induce(&b)?);
            let ratio_r = lipschitz_ratio(&r, &ga, &gb)?.ratio;
            worst.update_max((ratio_s - ratio_r).abs(), || json!({"a": a, "b": b}));
        }
        checks.push(worst.check_at_most(
            "conjugation-preserves-ratios",
            tol,
            "max |ratio of conjugated map − ratio of original on matched pairs|",
        ));
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// lemma42 (circle covers)
// ---------------------------------------------------------------------------

fn suite_lemma42(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let per_pair = cap(trials, 1_000);

    let mut bound_excess = Extremum::lowest();
    let mut below_optimal = Extremum::lowest();
    let mut card_ok = true;
    let mut card_witness = None;
    let mut rng = rng_for(seed, "lemma42-sweep");
    for n in 2..=12usize {
        for k in 1..n {
            let bound = std::f64::consts::PI * (n as f64 - 1.0) / (k as f64 * n as f64);
            for _ in 0..per_pair {
                let a = random_subset(&Space::circle(CircleMetric::Arclength), n, &mut rng)?;
                let b = a.circle_k_cover(k)?;
                if b.len() > k {
                    card_ok = false;
                    card_witness = Some(json!({"a": a, "k": k, "cover": b}));
                }
                let d = a.hausdorff(&b)?;
                bound_excess.update_max(d - bound, || json!({"a": a, "k": k, "cover": b}));
                let optimum = a.exact_kcenter(k)?.radius;
                below_optimal.update_max(optimum - d, || json!({"a": a, "k": k, "cover": b}));
            }
        }
    }
    checks.push(if card_ok {
        CheckResult::pass("cover-cardinality", 0.0, "|cover| ≤ k over the full sweep")
    } else {
        CheckResult::fail(
            "cover-cardinality",
            1.0,
            "a cover exceeded k points",
            card_witness,
        )
    });
    checks.push(bound_excess.check_at_most(
        "cover-within-bound",
        tol,
        "max d_H(A, cover) − π(n−1)/(kn) over n ≤ 12, k < n",
    ));
    checks.push(below_optimal.check_at_most(
        "cover-never-beats-exact",
        tol,
        "max optimal radius − cover radius (a positive value would beat the oracle)",
    ));

    // Tightness at k = n−1 on equally spaced points.
    {
        let mut worst = Extremum::lowest();
        for n in 2..=12usize {
            let a = equally_spaced_circle(n);
            let r = a.exact_kcenter(n - 1)?;
            let expected = std::f64::consts::PI / n as f64;
            worst.update_max((r.radius - expected).abs(), || json!({"n": n}));
        }
        checks.push(worst.check_at_most(
            "equally-spaced-tightness",
            tol,
            "max |optimal radius − π/n| for equally spaced points, k = n−1",
        ));
    }

    // Frozen two-point trace.
    {
        let a = FiniteSubset::from_angles(CircleMetric::Arclength, &[0.0, std::f64::consts::PI])?;
        let b = a.circle_k_cover(1)?;
        let mid = b.angles()?[0];
        let d = a.hausdorff(&b)?;
        let ok = b.len() == 1
            && (mid - std::f64::consts::PI / 2.0).abs() <= tol
            && (d - std::f64::consts::PI / 2.0).abs() <= tol;
        checks.push(if ok {
            CheckResult::pass("two-point-trace", mid, "cover of {0, π} at k = 1 is {π/2}")
        } else {
            CheckResult::fail(
                "two-point-trace",
                mid,
                "unexpected cover",
                Some(json!({"cover": b})),
            )
        });
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// john
// ---------------------------------------------------------------------------

fn suite_john() -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let sqrt2 = std::f64::consts::SQRT_2;

    let gauges: Vec<(String, Gauge)> = vec![
        (
            "p=1".into(),
            Gauge::PNorm {
                p: Exponent::Finite(1.0),
            },
        ),
        (
            "p=1.5".into(),
            Gauge::PNorm {
                p: Exponent::Finite(1.5),
            },
        ),
        (
            "p=2".into(),
            Gauge::PNorm {
                p: Exponent::Finite(2.0),
            },
        ),
        (
            "p=3".into(),
            Gauge::PNorm {
                p: Exponent::Finite(3.0),
            },
        ),
        (
            "p=inf".into(),
            Gauge::PNorm {
                p: Exponent::Infinity,
            },
        ),
        ("regular-12gon".into(), Gauge::regular_polygon(12)?),
    ];
    for (label, gauge) in &gauges {
        match john_transform(gauge) {
            Ok(j) => {
                checks.push(CheckResult::pass(
                    format!("norm-certificate[{label}]"),
                    j.norm_t,
                    format!(
                        "‖T‖ = {:.9} ≤ √2, ‖T⁻¹‖ = {:.9} ≤ 1",
                        j.norm_t, j.norm_t_inv
                    ),
                ));
            }
            Err(e) => {
                checks.push(CheckResult::fail(
                    format!("norm-certificate[{label}]"),
                    f64::NAN,
                    e.to_string(),
                    None,
                ));
            }
        }
    }

    // Analytic matrices for the corner exponents.
    let expectations = [
        ("p=1", Exponent::Finite(1.0), 1.0),
        ("p=2", Exponent::Finite(2.0), 1.0),
        ("p=inf", Exponent::Infinity, sqrt2),
    ];
    for (label, p, diag) in expectations {
        let j = john_transform(&Gauge::PNorm { p })?;
        let err = (j.t[0][0] - diag)
            .abs()
            .max((j.t[1][1] - diag).abs())
            .max(j.t[0][1].abs())
            .max(j.t[1][0].abs());
        checks.push(if err <= 1e-9 {
            CheckResult::pass(
                format!("analytic-matrix[{label}]"),
                err,
                format!("T matches {diag:.6}·I"),
            )
        } else {
            CheckResult::fail(
                format!("analytic-matrix[{label}]"),
                err,
                format!("T deviates from {diag:.6}·I"),
                Some(json!({"T": j.t})),
            )
        });
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// pipeline (normalization, truncation, adjoining, norming clamps)
// ---------------------------------------------------------------------------

fn suite_pipeline(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let unit = Space::unit_interval();

    // Normalization lands the extremes exactly.
    {
        let mut rng = rng_for(seed, "pipeline-normalize");
        let mut exact = true;
        let mut witness = None;
        for _ in 0..cap(trials, 1_000) {
            let s = random_subset(&unit, rng.gen_range(2..=6), &mut rng)?;
            let n = normalize_unit(&s)?;
            let v = n.scalars()?;
            if v[0] != 0.0 || *v.last().unwrap() != 1.0 || v.windows(2).any(|w| w[0] >= w[1]) {
                exact = false;
                witness = Some(json!({"s": s, "normalized": n}));
            }
        }
        checks.push(if exact {
            CheckResult::pass(
                "normalize-extremes-exact",
                0.0,
                "min = 0 and max = 1 exactly",
            )
        } else {
            CheckResult::fail(
                "normalize-extremes-exact",
                1.0,
                "extremes not exact",
                witness,
            )
        });
    }

    // Truncation never expands valid configurations below the guard.
    {
        let wide = Space::interval(0.0, 2.0)?;
        let mut rng = rng_for(seed, "pipeline-truncate");
        let mut expansion = Extremum::lowest();
        for _ in 0..cap(trials, 1_000) {
            let c: f64 = rng.gen_range(0.1..0.8);
            let half = c / 2.0;
            // Perturbations of ±eps stay inside each cluster's zone because
            // base points keep a 2·eps margin from every zone boundary.
            let eps = half.min(1.0 - c) / 8.0;
            let margin = 2.0 * eps;
            let mut base = vec![
                rng.gen_range(0.0..half - margin),
                rng.gen_range(1.0 - half + margin..1.0 + half - margin),
                rng.gen_range(2.0 - half + margin..2.0 - margin),
            ];
            for _ in 0..rng.gen_range(0usize..3) {
                base.push(rng.gen_range(0.0..1.0 + half - margin));
            }
            let moved: Vec<f64> = base
                .iter()
                .map(|v| (v + rng.gen_range(-eps..=eps)).clamp(0.0, 2.0))
                .collect();
            let s = FiniteSubset::from_scalars(wide.clone(), &base)?;
            let s2 = FiniteSubset::from_scalars(wide.clone(), &moved)?;
            let before = s.hausdorff(&s2)?;
            if before >= 1.0 - c {
                continue;
            }
            let after = pinned_truncate(&s, c)?.hausdorff(&pinned_truncate(&s2, c)?)?;
            expansion.update_max(after - before, || json!({"s": s, "s2": s2, "c": c}));
        }
        checks.push(expansion.check_at_most(
            "truncate-nonexpansive",
            1e-12,
            "max d_H(trunc S, trunc S') − d_H(S, S') below the guard",
        ));

        // Guard behavior.
        let pins = FiniteSubset::from_scalars(wide.clone(), &[0.0, 1.0, 2.0])?;
        let guard_errors = pinned_truncate(&pins, 1.0).is_err()
            && pinned_truncate(&FiniteSubset::from_scalars(wide, &[0.0, 2.0])?, 0.5).is_err();
        checks.push(if guard_errors {
            CheckResult::pass(
                "truncate-guards",
                0.0,
                "c ≥ 1 and malformed shapes are rejected",
            )
        } else {
            CheckResult::fail("truncate-guards", 1.0, "a guard failed to fire", None)
        });
    }

    // Adjoining the far pin is an isometry.
    {
        let mut rng = rng_for(seed, "pipeline-adjoin");
        let mut worst = Extremum::lowest();
        for _ in 0..cap(trials, 1_000) {
            let a = random_subset(&unit, rng.gen_range(1..=5), &mut rng)?;
            let b = random_subset(&unit, rng.gen_range(1..=5), &mut rng)?;
            let d0 = a.hausdorff(&b)?;
            let d1 = adjoin_two(&a)?.hausdorff(&adjoin_two(&b)?)?;
            worst.update_max((d0 - d1).abs(), || json!({"a": a, "b": b}));
        }
        checks.push(worst.check_at_most(
            "adjoin-isometry",
            1e-12,
            "max |d_H(ι(A), ι(B)) − d_H(A, B)|",
        ));
    }

    // Norming functionals: unit dual norm, value 1 at u, section identity,
    // and nonexpansive clamp/ray maps.
    for p in [
        Exponent::Finite(1.0),
        Exponent::Finite(2.0),
        Exponent::Finite(3.0),
        Exponent::Infinity,
    ] {
        let label = format!("p={p}");
        let space = Space::pnorm(3, p)?;
        let mut rng = rng_for(seed, &format!("pipeline-norming-{label}"));
        let mut dual_err = Extremum::lowest();
        let mut value_err = Extremum::lowest();
        let mut section_err = Extremum::lowest();
        let mut lip_excess = Extremum::lowest();
        let sampler = DomainSampler::uniform(space.clone(), 1)?;
        for _ in 0..cap(trials, 1_000).min(200) {
            let raw = sampler.sample_point(&mut rng);
            let norm = space.distance(&raw, &Point::vector([0.0, 0.0, 0.0]))?;
            if norm < 1e-6 {
                continue;
            }
            let u = Point::Vector(raw.coords()?.iter().map(|x| x / norm).collect());
            let nc = norming_clamp(&space, &u)?;
            let witness = || json!({"u": u, "phi": nc.phi});
            // Dual norm of φ.
            let dual = match p.dual() {
                Exponent::Infinity => nc.phi.iter().map(|x| x.abs()).fold(0.0, f64::max),
                Exponent::Finite(1.0) => nc.phi.iter().map(|x| x.abs()).sum(),
                Exponent::Finite(q) => nc
                    .phi
                    .iter()
                    .map(|x| x.abs().powf(q))
                    .sum::<f64>()
                    .powf(1.0 / q),
            };
            dual_err.update_max((dual - 1.0).abs(), witness);
            let at_u: f64 = nc.phi.iter().zip(u.coords()?).map(|(a, b)| a * b).sum();
            value_err.update_max((at_u - 1.0).abs(), witness);
            for i in 0..=8 {
                let t = i as f64 / 8.0;
                let back = nc.f.eval(&nc.g.eval(&Point::scalar(t))?)?;
                section_err.update_max((back.as_scalar()? - t).abs(), witness);
            }
            let x = sampler.sample_point(&mut rng);
            let y = sampler.sample_point(&mut rng);
            let den = space.distance(&x, &y)?;
            if den > 0.0 {
                let num = (nc.f.eval(&x)?.as_scalar()? - nc.f.eval(&y)?.as_scalar()?).abs();
                lip_excess.update_max(num - den, || json!({"x": x, "y": y}));
            }
        }
        checks.push(dual_err.check_at_most(
            &format!("norming-dual-norm[{label}]"),
            tol,
            "max |‖φ‖_dual − 1|",
        ));
        checks.push(value_err.check_at_most(
            &format!("norming-value[{label}]"),
            tol,
            "max |φ(u) − 1|",
        ));
        checks.push(section_err.check_at_most(
            &format!("norming-section[{label}]"),
            tol,
            "max |f(g(t)) − t|",
        ));
        checks.push(lip_excess.check_at_most(
            &format!("norming-clamp-nonexpansive[{label}]"),
            tol,
            "max |f(x) − f(y)| − ‖x − y‖",
        ));
    }

    Ok(checks)
}

// ---------------------------------------------------------------------------
// hadamard (comparison-inequality residuals)
// ---------------------------------------------------------------------------

fn suite_hadamard(seed: u64, tol: f64, trials: Option<usize>) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();

    for space in [
        Space::euclidean(2)?,
        Space::unit_interval(),
        Space::tripod([1.0, 1.0, 1.0])?,
    ] {
        let label = format!("{space:?}");
        let mut rng = rng_for(seed, &format!("hadamard-{label}"));
        let sampler = DomainSampler::uniform(space.clone(), 1)?;
        let mut min_residual = Extremum::highest();
        for _ in 0..cap(trials, 10_000) {
            let p = sampler.sample_point(&mut rng);
            let q = sampler.sample_point(&mut rng);
            let z = sampler.sample_point(&mut rng);
            let t: f64 = rng.gen_range(0.0..=1.0);
            let r = space.hadamard_residual(&p, &q, &z, t)?;
            min_residual.update_min(r, || json!({"p": p, "q": q, "z": z, "t": t}));
        }
        checks.push(min_residual.check_at_least(
            &format!("residual-nonnegative[{label}]"),
            -tol,
            "min comparison residual over sampled configurations",
        ));
    }

    // The circle fails the inequality, reproducibly and substantially.
    {
        let circle = Space::circle(CircleMetric::Arclength);
        let pi = std::f64::consts::PI;
        let frozen = circle.hadamard_residual(
            &Point::angle(0.0),
            &Point::angle(pi),
            &Point::angle(1.5 * pi),
            0.5,
        )?;
        let err = (frozen - (-pi * pi)).abs();
        checks.push(if err <= tol {
            CheckResult::pass(
                "circle-violation-frozen",
                frozen,
                "antipodal configuration reproduces residual −π²",
            )
        } else {
            CheckResult::fail(
                "circle-violation-frozen",
                frozen,
                "frozen circle configuration drifted",
                None,
            )
        });

        let mut rng = rng_for(seed, "hadamard-circle-sampled");
        let sampler = DomainSampler::uniform(circle.clone(), 1)?;
        let mut min_residual = Extremum::highest();
        for _ in 0..cap(trials, 10_000) {
            let p = sampler.sample_point(&mut rng);
            let q = sampler.sample_point(&mut rng);
            let z = sampler.sample_point(&mut rng);
            let t: f64 = rng.gen_range(0.0..=1.0);
            let r = circle.hadamard_residual(&p, &q, &z, t)?;
            min_residual.update_min(r, || json!({"p": p, "q": q, "z": z, "t": t}));
        }
        let found = min_residual.value;
        checks.push(if found < -0.1 {
            CheckResult::pass(
                "circle-violation-sampled",
                found,
                "sampling finds residuals below −0.1",
            )
        } else {
            CheckResult::fail(
                "circle-violation-sampled",
                found,
                "no substantial violation found on the circle",
                min_residual.witness,
            )
        });
    }

    Ok(checks)
}
