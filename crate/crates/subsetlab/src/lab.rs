//! Certified empirical Lipschitz lower bounds via seeded sampling with
//! hill-climbing refinement, displacement-inequality checks, and the
//! theoretical bound tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::retraction::{PointMap, RetractionCandidate};
use crate::sample::DomainSampler;
use crate::space::{CircleMetric, Space};
use crate::subset::{FiniteSubset, ReduceMode};

/// Anything that maps finite subsets to finite subsets over a fixed domain
/// space: candidate retractions and induced point maps alike.
pub trait SubsetMap: Send + Sync {
    fn name(&self) -> &str;
    fn domain(&self) -> &Space;
    fn apply(&self, a: &FiniteSubset) -> Result<FiniteSubset>;
}

impl SubsetMap for PointMap {
    fn name(&self) -> &str {
        PointMap::name(self)
    }

    fn domain(&self) -> &Space {
        self.source()
    }

    fn apply(&self, a: &FiniteSubset) -> Result<FiniteSubset> {
        self.induce(a)
    }
}

impl SubsetMap for RetractionCandidate {
    fn name(&self) -> &str {
        RetractionCandidate::name(self)
    }

    fn domain(&self) -> &Space {
        self.space()
    }

    fn apply(&self, a: &FiniteSubset) -> Result<FiniteSubset> {
        RetractionCandidate::apply(self, a)
    }
}

/// A machine-checkable witness that a map's Lipschitz constant is at least
/// `ratio`: the stored pair reproduces the ratio by recomputation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LipschitzCertificate {
    pub map: String,
    pub a: FiniteSubset,
    pub b: FiniteSubset,
    pub input_distance: f64,
    pub output_distance: f64,
    pub ratio: f64,
}

impl LipschitzCertificate {
    /// Recomputes the ratio from the stored pair.
    pub fn replay(&self, map: &dyn SubsetMap) -> Result<f64> {
        let cert = lipschitz_ratio(map, &self.a, &self.b)?;
        Ok(cert.ratio)
    }

    /// Checks that the stored ratio matches a replay within 1e−12.
    pub fn verify(&self, map: &dyn SubsetMap) -> Result<()> {
        let replayed = self.replay(map)?;
        if (replayed - self.ratio).abs() > 1e-12 {
            return Err(Error::NumericalFailure(format!(
                "certificate ratio {} does not replay (got {replayed})",
                self.ratio
            )));
        }
        Ok(())
    }
}

/// The distance ratio of one pair under a map.
pub fn lipschitz_ratio(
    map: &dyn SubsetMap,
    a: &FiniteSubset,
    b: &FiniteSubset,
) -> Result<LipschitzCertificate> {
    let input_distance = a.hausdorff(b)?;
    if input_distance == 0.0 {
        return Err(Error::DegenerateInput(
            "the pair is degenerate: d_H(A, B) = 0".into(),
        ));
    }
    let fa = map.apply(a)?;
    let fb = map.apply(b)?;
    let output_distance = fa.hausdorff(&fb)?;
    Ok(LipschitzCertificate {
        map: map.name().to_string(),
        a: a.clone(),
        b: b.clone(),
        input_distance,
        output_distance,
        ratio: output_distance / input_distance,
    })
}

/// Configuration of the adversarial search. Identical configurations
/// (including the seed) reproduce identical certificates, independent of
/// scheduling: each trial derives its own generator from `seed ⊕ trial`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: usize,
    pub steps_per_scale: usize,
    /// Decreasing perturbation scales as fractions of the domain diameter.
    pub scales: Vec<f64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trials: 256,
            steps_per_scale: 200,
            scales: vec![0.1, 0.03, 0.01, 0.003, 0.001],
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> Self {
        SearchConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::invalid("at least one trial is required"));
        }
        if self.scales.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
            return Err(Error::invalid("perturbation scales must be positive"));
        }
        if self.scales.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::invalid("perturbation scales must be nonincreasing"));
        }
        Ok(())
    }
}

/// A certificate together with the search that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub certificate: LipschitzCertificate,
    pub config: SearchConfig,
}

struct Incumbent {
    cert: LipschitzCertificate,
    key: Option<String>,
}

impl Incumbent {
    fn key(&mut self) -> &str {
        if self.key.is_none() {
            self.key = Some(
                serde_json::to_string(&(&self.cert.a, &self.cert.b)).expect("subsets serialize"),
            );
        }
        self.key.as_deref().unwrap()
    }
}

/// Merge rule for incumbents: larger ratio wins; exact ties keep the
/// lexicographically smaller serialized pair, so any execution order
/// produces the same winner.
fn merge_incumbents(x: Option<Incumbent>, y: Option<Incumbent>) -> Option<Incumbent> {
    match (x, y) {
        (None, r) => r,
        (l, None) => l,
        (Some(mut l), Some(mut r)) => {
            if r.cert.ratio > l.cert.ratio || (r.cert.ratio == l.cert.ratio && r.key() < l.key()) {
                Some(r)
            } else {
                Some(l)
            }
        }
    }
}

fn run_trial(
    map: &dyn SubsetMap,
    sampler: &DomainSampler,
    config: &SearchConfig,
    trial: usize,
    trace: Option<&mut Vec<f64>>,
) -> Option<Incumbent> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ trial as u64);
    let mut pair = None;
    for _ in 0..32 {
        let a = sampler.sample(&mut rng).ok()?;
        let b = sampler.sample(&mut rng).ok()?;
        if let Ok(cert) = lipschitz_ratio(map, &a, &b) {
            pair = Some(cert);
            break;
        }
    }
    let mut best = pair?;
    let mut trace = trace;
    if let Some(t) = trace.as_deref_mut() {
        t.push(best.ratio);
    }
    let diameter = sampler.diameter();
    let coords = sampler.coords_per_point();
    for &scale in &config.scales {
        let step = scale * diameter;
        for _ in 0..config.steps_per_scale {
            let perturb_a = rng.gen_bool(0.5);
            let target = if perturb_a { &best.a } else { &best.b };
            let idx = rng.gen_range(0..target.len());
            let coord = rng.gen_range(0..coords);
            let delta = rng.gen_range(-step..=step);
            let moved = sampler.perturb(&target.points()[idx], coord, delta);
            let mut pts = target.points().to_vec();
            pts[idx] = moved;
            let Ok(cand) = FiniteSubset::new(sampler.space().clone(), pts) else {
                continue;
            };
            let (ca, cb) = if perturb_a {
                (&cand, &best.b)
            } else {
                (&best.a, &cand)
            };
            if let Ok(cert) = lipschitz_ratio(map, ca, cb) {
                if cert.ratio > best.ratio {
                    best = cert;
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                t.push(best.ratio);
            }
        }
    }
    Some(Incumbent {
        cert: best,
        key: None,
    })
}

/// Best certificate over seeded random pairs, each refined by coordinate
/// hill climbing over the decreasing scale schedule. Trials run in parallel;
/// the result is identical to sequential execution.
pub fn estimate_lipschitz(
    map: &dyn SubsetMap,
    sampler: &DomainSampler,
    config: &SearchConfig,
) -> Result<LipschitzCertificate> {
    estimate_lipschitz_with(map, sampler, config, true)
}

/// As [`estimate_lipschitz`], with explicit control over parallelism. Both
/// modes produce bit-identical certificates.
pub fn estimate_lipschitz_with(
    map: &dyn SubsetMap,
    sampler: &DomainSampler,
    config: &SearchConfig,
    parallel: bool,
) -> Result<LipschitzCertificate> {
    config.validate()?;
    if sampler.space() != map.domain() {
        return Err(Error::invalid(format!(
            "sampler space {:?} does not match the map domain {:?}",
            sampler.space(),
            map.domain()
        )));
    }
    let best = if parallel {
        (0..config.trials)
            .into_par_iter()
            .map(|t| run_trial(map, sampler, config, t, None))
            .reduce(|| None, merge_incumbents)
    } else {
        (0..config.trials)
            .map(|t| run_trial(map, sampler, config, t, None))
            .fold(None, merge_incumbents)
    };
    best.map(|i| i.cert).ok_or_else(|| {
        Error::SearchFailure("sampler exhaustion: no nondegenerate pair was found".into())
    })
}

/// Residual of the displacement inequality
/// `(L + 1)·dist_H(A, X(k)) − d_H(r(A), A)` for a claimed Lipschitz upper
/// bound L. A negative residual certifies that L is not valid for `r`.
pub fn displacement_residual(
    r: &RetractionCandidate,
    a: &FiniteSubset,
    lip_claim: f64,
) -> Result<f64> {
    if !(lip_claim.is_finite() && lip_claim >= 0.0) {
        return Err(Error::invalid(format!(
            "claimed Lipschitz bound must be >= 0, got {lip_claim}"
        )));
    }
    let dist = dist_to_smaller(a, r.target_cap())?;
    let moved = a.hausdorff(&r.apply(a)?)?;
    Ok((lip_claim + 1.0) * dist - moved)
}

/// `dist_H(A, X(k))`: exact via the k-center oracle on one-dimensional
/// carriers and the arclength circle; elsewhere an upper bound by iterated
/// midpoint merging, which keeps the displacement check conservative.
pub fn dist_to_smaller(a: &FiniteSubset, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if a.len() <= k {
        return Ok(0.0);
    }
    match a.space() {
        Space::Interval { .. }
        | Space::Euclidean { d: 1 }
        | Space::PNorm { d: 1, .. }
        | Space::Circle {
            metric: CircleMetric::Arclength,
        } => Ok(a.exact_kcenter(k)?.radius),
        space if space.is_geodesic() => {
            let mut b = a.clone();
            while b.len() > k {
                b = b.reduce_by_one(b.len(), ReduceMode::Merge)?;
            }
            a.hausdorff(&b)
        }
        _ => {
            let mut b = a.clone();
            while b.len() > k {
                b = b.reduce_by_one(b.len(), ReduceMode::Drop)?;
            }
            a.hausdorff(&b)
        }
    }
}

/// One row of the theoretical bound table: every bound formula evaluated at
/// (n, k). The single-step bounds and the cited upper bounds apply only to
/// k = n − 1 and are left empty otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundTableRow {
    pub n: usize,
    pub k: usize,
    pub lb_normed: f64,
    pub lb_hilbert: f64,
    pub lb_hadamard: Option<f64>,
    pub lb_interval_even: Option<f64>,
    pub lb_interval_odd: Option<f64>,
    pub ub_hilbert: Option<f64>,
    pub ub_hadamard: Option<f64>,
}

/// Evaluates the bound formulas at (n, k), 1 ≤ k ≤ n−1:
///
/// - any normed plane-containing space: kn/(2π(n−1)) − 1/2;
/// - Hilbert spaces: kn/(π(n−1)) − 1;
/// - for k = n−1 additionally: n−3 (geodesic comparison spaces), n−2 / n−3
///   (interval, even/odd formulas), and the known single-step upper bounds
///   max(n^{3/2}, 2n−1) and max(2n² + √n, 4n^{3/2} + 1).
pub fn theoretical_bounds(n: usize, k: usize) -> Result<BoundTableRow> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "need n >= 2 and 1 <= k <= n−1, got n = {n}, k = {k}"
        )));
    }
    let nf = n as f64;
    let kf = k as f64;
    let pi = std::f64::consts::PI;
    let lb_normed = kf * nf / (2.0 * pi * (nf - 1.0)) - 0.5;
    let lb_hilbert = kf * nf / (pi * (nf - 1.0)) - 1.0;
    let single_step = k == n - 1;
    Ok(BoundTableRow {
        n,
        k,
        lb_normed,
        lb_hilbert,
        lb_hadamard: single_step.then_some(nf - 3.0),
        lb_interval_even: single_step.then_some(nf - 2.0),
        lb_interval_odd: single_step.then_some(nf - 3.0),
        ub_hilbert: single_step.then_some(nf.powf(1.5).max(2.0 * nf - 1.0)),
        ub_hadamard: single_step
            .then_some((2.0 * nf * nf + nf.sqrt()).max(4.0 * nf.powf(1.5) + 1.0)),
    })
}

/// The full table for n in [n_min, n_max]: the k = n−1 rows, or all
/// 1 ≤ k ≤ n−1 when `all_k` is set.
pub fn bound_table(n_min: usize, n_max: usize, all_k: bool) -> Result<Vec<BoundTableRow>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::invalid(format!(
            "need 2 <= n_min <= n_max, got [{n_min}, {n_max}]"
        )));
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        if all_k {
            for k in 1..n {
                rows.push(theoretical_bounds(n, k)?);
            }
        } else {
            rows.push(theoretical_bounds(n, n - 1)?);
        }
    }
    Ok(rows)
}

/// The transferred single-step bound: (n − 3)/(Lip(f)·Lip(g)) for a space
/// that admits a section/retraction pair to a nondegenerate compact
/// interval.
pub fn corollary_bound(n: usize, lip_f: f64, lip_g: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid(format!("need n >= 2, got {n}")));
    }
    if !(lip_f > 0.0 && lip_g > 0.0) {
        return Err(Error::invalid(format!(
            "Lipschitz constants must be positive, got ({lip_f}, {lip_g})"
        )));
    }
    Ok((n as f64 - 3.0) / (lip_f * lip_g))
}

/// CSV rendering of the bound table, values rounded to 6 decimals; empty
/// cells where a formula does not apply.
pub fn bounds_csv(rows: &[BoundTableRow]) -> String {
    let mut out = String::from(
        "n,k,lb_normed,lb_hilbert,lb_hadamard,lb_interval_even,lb_interval_odd,ub_hilbert,ub_hadamard\n",
    );
    let cell = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_default();
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.6},{:.6},{},{},{},{},{}\n",
            r.n,
            r.k,
            r.lb_normed,
            r.lb_hilbert,
            cell(r.lb_hadamard),
            cell(r.lb_interval_even),
            cell(r.lb_interval_odd),
            cell(r.ub_hilbert),
            cell(r.ub_hadamard),
        ));
    }
    out
}

/// Builds a named map together with its default domain sampler. Names:
/// `identity`, `scale:<factor>`, `radial:<rho>`, `merge`, `transfer:clamp`.
pub fn named_map(
    name: &str,
    space: Option<Space>,
    n: usize,
    kind_clustered: bool,
) -> Result<(Box<dyn SubsetMap>, DomainSampler)> {
    if n == 0 {
        return Err(Error::invalid("cardinality must be at least 1"));
    }
    let sampler_for = |space: Space, card: usize| -> Result<DomainSampler> {
        if kind_clustered {
            DomainSampler::clustered(space, card)
        } else {
            DomainSampler::uniform(space, card)
        }
    };
    if let Some(rho) = name.strip_prefix("radial:") {
        let rho: f64 = rho
            .parse()
            .map_err(|_| Error::invalid(format!("bad inner radius in {name:?}")))?;
        let map = PointMap::radial_projection_map(2, rho)?;
        let sampler = DomainSampler::annulus(2, rho, 1.0, n)?;
        return Ok((Box::new(map), sampler));
    }
    if let Some(factor) = name.strip_prefix("scale:") {
        let factor: f64 = factor
            .parse()
            .map_err(|_| Error::invalid(format!("bad factor in {name:?}")))?;
        let d = match &space {
            Some(Space::Euclidean { d }) => *d,
            None => 1,
            Some(other) => {
                return Err(Error::invalid(format!(
                    "scaling maps live on Euclidean spaces, got {other:?}"
                )))
            }
        };
        let map = PointMap::scale(d, factor)?;
        let sampler = sampler_for(map.source().clone(), n)?;
        return Ok((Box::new(map), sampler));
    }
    match name {
        "identity" => {
            let space = space.unwrap_or(Space::Euclidean { d: 2 });
            let map = PointMap::identity(space.clone());
            Ok((Box::new(map), sampler_for(space, n)?))
        }
        "merge" => {
            let space = space.unwrap_or(Space::unit_interval());
            let r = RetractionCandidate::merge(space.clone(), n)?;
            Ok((Box::new(r), sampler_for(space, n)?))
        }
        "transfer:clamp" => {
            let x = Space::euclidean(1)?;
            let r = RetractionCandidate::merge(x, n)?;
            let f = PointMap::clamp_to_interval(0.0, 1.0)?;
            let g = PointMap::interval_inclusion(0.0, 1.0)?;
            let s = crate::retraction::transfer_retraction(&f, &r, &g)?;
            Ok((Box::new(s), sampler_for(Space::unit_interval(), n)?))
        }
        other => Err(Error::invalid(format!(
            "unknown map {other:?}; available: identity, scale:<f>, radial:<rho>, merge, transfer:clamp"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Point;

    fn line_set(values: &[f64]) -> FiniteSubset {
        FiniteSubset::new(
            Space::euclidean(1).unwrap(),
            values.iter().map(|&v| Point::vector([v])).collect(),
        )
        .unwrap()
    }

    #[test]
    fn ratio_of_identity_and_scale() {
        let id = PointMap::identity(Space::euclidean(1).unwrap());
        let a = line_set(&[0.0, 0.4]);
        let b = line_set(&[0.1, 0.8]);
        assert_eq!(lipschitz_ratio(&id, &a, &b).unwrap().ratio, 1.0);
        let double = PointMap::scale(1, 2.0).unwrap();
        assert_eq!(lipschitz_ratio(&double, &a, &b).unwrap().ratio, 2.0);
    }

    #[test]
    fn ratio_of_merge_example() {
        let r = RetractionCandidate::merge(Space::euclidean(1).unwrap(), 3).unwrap();
        let a = line_set(&[0.0, 1.0, 1.2]);
        let b = line_set(&[0.0, 1.0, 1.4]);
        let cert = lipschitz_ratio(&r, &a, &b).unwrap();
        assert!((cert.ratio - 0.5).abs() < 1e-12);
        cert.verify(&r).unwrap();
    }

    #[test]
    fn degenerate_pair_is_rejected() {
        let id = PointMap::identity(Space::euclidean(1).unwrap());
        let a = line_set(&[0.0, 1.0]);
        assert!(matches!(
            lipschitz_ratio(&id, &a, &a.clone()),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn estimator_hits_exact_constants_for_linear_maps() {
        let id = PointMap::identity(Space::euclidean(2).unwrap());
        let sampler = DomainSampler::uniform(Space::euclidean(2).unwrap(), 3).unwrap();
        let config = SearchConfig {
            trials: 8,
            steps_per_scale: 10,
            ..SearchConfig::with_seed(5)
        };
        let cert = estimate_lipschitz(&id, &sampler, &config).unwrap();
        assert_eq!(cert.ratio, 1.0);

        let double = PointMap::scale(2, 2.0).unwrap();
        let cert = estimate_lipschitz(&double, &sampler, &config).unwrap();
        assert_eq!(cert.ratio, 2.0);
    }

    #[test]
    fn estimator_is_deterministic_and_scheduling_independent() {
        let r = RetractionCandidate::merge(Space::unit_interval(), 3).unwrap();
        let sampler = DomainSampler::clustered(Space::unit_interval(), 3).unwrap();
        let config = SearchConfig {
            trials: 24,
            steps_per_scale: 40,
            ..SearchConfig::with_seed(77)
        };
        let par1 = estimate_lipschitz_with(&r, &sampler, &config, true).unwrap();
        let par2 = estimate_lipschitz_with(&r, &sampler, &config, true).unwrap();
        let seq = estimate_lipschitz_with(&r, &sampler, &config, false).unwrap();
        assert_eq!(
            serde_json::to_string(&par1).unwrap(),
            serde_json::to_string(&par2).unwrap()
        );
        assert_eq!(
            serde_json::to_string(&par1).unwrap(),
            serde_json::to_string(&seq).unwrap()
        );
        par1.verify(&r).unwrap();
    }

    #[test]
    fn refinement_incumbent_is_monotone() {
        let r = RetractionCandidate::merge(Space::unit_interval(), 4).unwrap();
        let sampler = DomainSampler::uniform(Space::unit_interval(), 4).unwrap();
        let config = SearchConfig {
            trials: 1,
            steps_per_scale: 60,
            ..SearchConfig::with_seed(3)
        };
        let mut trace = Vec::new();
        let inc = run_trial(&r, &sampler, &config, 0, Some(&mut trace)).unwrap();
        assert!(trace.windows(2).all(|w| w[1] >= w[0]));
        assert_eq!(*trace.last().unwrap(), inc.cert.ratio);
    }

    #[test]
    fn displacement_residual_examples() {
        let r = RetractionCandidate::merge(Space::euclidean(1).unwrap(), 3).unwrap();
        // Small sets: both terms vanish.
        let small = line_set(&[0.2, 0.9]);
        assert_eq!(displacement_residual(&r, &small, 0.0).unwrap(), 0.0);
        // Exact cancellation at L = 0 for the merge candidate.
        let a = line_set(&[0.0, 1.0, 1.2]);
        let res = displacement_residual(&r, &a, 0.0).unwrap();
        assert!(res.abs() < 1e-12);
        // An adversarial shift certifies an invalid claim.
        let shifted = RetractionCandidate::new(
            "merge-then-shift",
            Space::euclidean(1).unwrap(),
            3,
            2,
            move |a| {
                let merged = a.reduce_by_one(3, ReduceMode::Merge)?;
                let pts: Vec<Point> = merged
                    .points()
                    .iter()
                    .map(|p| Ok(Point::vector([p.coords()?[0] + 1.0])))
                    .collect::<Result<_>>()?;
                FiniteSubset::new(a.space().clone(), pts)
            },
        )
        .unwrap();
        let res = displacement_residual(&shifted, &a, 0.0).unwrap();
        assert!((res - (0.1 - 1.0)).abs() < 1e-9);
        assert!(res < 0.0);
    }

    #[test]
    fn bound_row_reference_values() {
        let row = theoretical_bounds(10, 9).unwrap();
        let pi = std::f64::consts::PI;
        assert!((row.lb_hilbert - (10.0 / pi - 1.0)).abs() < 1e-12);
        assert!((row.lb_normed - (5.0 / pi - 0.5)).abs() < 1e-12);
        assert_eq!(row.lb_hadamard, Some(7.0));
        assert_eq!(row.lb_interval_even, Some(8.0));
        assert_eq!(row.lb_interval_odd, Some(7.0));
        assert!((row.ub_hilbert.unwrap() - 10f64.powf(1.5)).abs() < 1e-12);
    }

    #[test]
    fn bounds_are_monotone_in_k_and_sane() {
        for n in 4..=64 {
            let mut prev_normed = f64::NEG_INFINITY;
            let mut prev_hilbert = f64::NEG_INFINITY;
            for k in 1..n {
                let row = theoretical_bounds(n, k).unwrap();
                assert!(row.lb_normed >= prev_normed);
                assert!(row.lb_hilbert >= prev_hilbert);
                prev_normed = row.lb_normed;
                prev_hilbert = row.lb_hilbert;
            }
            let top = theoretical_bounds(n, n - 1).unwrap();
            let ub_h = top.ub_hilbert.unwrap();
            let ub_had = top.ub_hadamard.unwrap();
            for lb in [
                top.lb_normed,
                top.lb_hilbert,
                top.lb_hadamard.unwrap(),
                top.lb_interval_even.unwrap(),
                top.lb_interval_odd.unwrap(),
            ] {
                assert!(lb <= ub_h, "n = {n}: {lb} > {ub_h}");
                assert!(lb <= ub_had);
            }
        }
    }

    #[test]
    fn corollary_bound_examples() {
        assert_eq!(corollary_bound(10, 1.0, 1.0).unwrap(), 7.0);
        assert_eq!(corollary_bound(10, 2.0, 1.0).unwrap(), 3.5);
        assert_eq!(corollary_bound(3, 5.0, 0.5).unwrap(), 0.0);
        assert!(corollary_bound(10, 0.0, 1.0).is_err());
    }

    #[test]
    fn csv_formatting() {
        let rows = bound_table(4, 5, false).unwrap();
        let csv = bounds_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,k,lb_normed,lb_hilbert,lb_hadamard,lb_interval_even,lb_interval_odd,ub_hilbert,ub_hadamard"
        );
        assert_eq!(lines.count(), 2);
        let all = bound_table(4, 6, true).unwrap();
        assert_eq!(all.len(), 3 + 4 + 5);
        // Non-final k leaves the single-step cells empty.
        let csv = bounds_csv(&all);
        let first = csv.lines().nth(1).unwrap();
        assert!(first.starts_with("4,1,"));
        assert!(first.contains(",,"));
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!(bound_table(10, 4, false).is_err());
        assert!(bound_table(1, 4, false).is_err());
        assert!(theoretical_bounds(5, 5).is_err());
        assert!(theoretical_bounds(5, 0).is_err());
    }

    #[test]
    fn named_map_registry() {
        for name in [
            "identity",
            "scale:2",
            "radial:0.5",
            "merge",
            "transfer:clamp",
        ] {
            let (map, sampler) = named_map(name, None, 3, false).unwrap();
            assert_eq!(map.domain(), sampler.space());
        }
        assert!(named_map("bogus", None, 3, false).is_err());
    }
}
