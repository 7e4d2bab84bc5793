//! Finite subsets as first-class values: Hausdorff distance, minimum
//! separation, one-point reductions, pinned membership, exact k-center
//! oracles on the line and the circle, and the rotational k-cover
//! construction for circular point sets.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{point_order, wrap_angle, CircleMetric, Point, Space, TAU};

/// A canonical nonempty finite point set in a [`Space`].
///
/// Construction deduplicates (set semantics) and sorts points by the
/// space's total order, so equal sets have identical representations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteSubset {
    space: Space,
    points: Vec<Point>,
}

#[derive(Deserialize)]
struct RawSubset {
    space: Space,
    points: Vec<Point>,
}

impl<'de> Deserialize<'de> for FiniteSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSubset::deserialize(d)?;
        FiniteSubset::new(raw.space, raw.points).map_err(serde::de::Error::custom)
    }
}

impl FiniteSubset {
    pub fn new(space: Space, points: Vec<Point>) -> Result<Self> {
        space.validate()?;
        if points.is_empty() {
            return Err(Error::invalid("a finite subset must be nonempty"));
        }
        let mut canon: Vec<Point> = points
            .iter()
            .map(|p| space.check_point(p))
            .collect::<Result<_>>()?;
        canon.sort_by(point_order);
        canon.dedup();
        Ok(FiniteSubset {
            space,
            points: canon,
        })
    }

    pub fn singleton(space: Space, point: Point) -> Result<Self> {
        Self::new(space, vec![point])
    }

    pub fn from_scalars(space: Space, values: &[f64]) -> Result<Self> {
        Self::new(space, values.iter().map(|&v| Point::scalar(v)).collect())
    }

    pub fn from_angles(metric: CircleMetric, angles: &[f64]) -> Result<Self> {
        Self::new(
            Space::circle(metric),
            angles.iter().map(|&a| Point::angle(a)).collect(),
        )
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees nonemptiness
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self.space.check_point(p) {
            Ok(cp) => self
                .points
                .binary_search_by(|q| point_order(q, &cp))
                .is_ok(),
            Err(_) => false,
        }
    }

    /// Scalar coordinates for one-dimensional carriers (interval or
    /// Euclidean line), in ascending order.
    pub fn scalars(&self) -> Result<Vec<f64>> {
        match &self.space {
            Space::Interval { .. } => self.points.iter().map(Point::as_scalar).collect(),
            Space::Euclidean { d: 1 } | Space::PNorm { d: 1, .. } => {
                self.points.iter().map(|p| Ok(p.coords()?[0])).collect()
            }
            other => Err(Error::unsupported(format!(
                "scalar view requires a one-dimensional carrier, got {other:?}"
            ))),
        }
    }

    /// Angles in ascending order (circle carriers).
    pub fn angles(&self) -> Result<Vec<f64>> {
        match &self.space {
            Space::Circle { .. } => self.points.iter().map(Point::as_angle).collect(),
            other => Err(Error::unsupported(format!(
                "not a circle carrier: {other:?}"
            ))),
        }
    }

    fn require_same_space(&self, other: &FiniteSubset) -> Result<()> {
        if self.space != other.space {
            return Err(Error::invalid(format!(
                "subsets live in different spaces: {:?} vs {:?}",
                self.space, other.space
            )));
        }
        Ok(())
    }

    /// Hausdorff distance: the larger of the two directed max–min terms.
    pub fn hausdorff(&self, other: &FiniteSubset) -> Result<f64> {
        self.require_same_space(other)?;
        let directed = |from: &FiniteSubset, to: &FiniteSubset| -> Result<f64> {
            let mut worst = 0.0f64;
            for p in &from.points {
                let mut best = f64::INFINITY;
                for q in &to.points {
                    let d = from.space.distance(p, q)?;
                    if d < best {
                        best = d;
                    }
                }
                if best > worst {
                    worst = best;
                }
            }
            Ok(worst)
        };
        Ok(directed(self, other)?.max(directed(other, self)?))
    }

    /// Minimum separation: the smallest pairwise distance when `|A| = n`,
    /// zero when `|A| < n`. Defined for n ≥ 2.
    pub fn min_separation(&self, n: usize) -> Result<f64> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "minimum separation requires n >= 2, got {n}"
            )));
        }
        if self.len() > n {
            return Err(Error::invalid(format!(
                "cardinality {} exceeds the cap n = {n}",
                self.len()
            )));
        }
        if self.len() < n {
            return Ok(0.0);
        }
        let (_, _, d) = self.closest_pair()?;
        Ok(d)
    }

    /// Indices and distance of the closest pair, taking the lexicographically
    /// first pair (in canonical order) among ties.
    fn closest_pair(&self) -> Result<(usize, usize, f64)> {
        if self.len() < 2 {
            return Err(Error::DegenerateInput(
                "closest pair requires at least two points".into(),
            ));
        }
        let mut best = (0usize, 1usize, f64::INFINITY);
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let d = self.space.distance(&self.points[i], &self.points[j])?;
                if d < best.2 {
                    best = (i, j, d);
                }
            }
        }
        Ok(best)
    }

    fn without(&self, idx: usize) -> FiniteSubset {
        let mut pts = self.points.clone();
        pts.remove(idx);
        FiniteSubset {
            space: self.space.clone(),
            points: pts,
        }
    }

    /// Reduces an n-point set to at most n−1 points.
    ///
    /// `Drop` removes one endpoint of the closest pair (whichever drop gives
    /// the smaller Hausdorff displacement; ties drop the later point in
    /// canonical order) and moves the set by at most the minimum separation.
    /// `Merge` replaces the closest pair by its geodesic midpoint and moves
    /// the set by at most half the minimum separation. Sets with fewer than
    /// n points are returned unchanged.
    pub fn reduce_by_one(&self, n: usize, mode: ReduceMode) -> Result<FiniteSubset> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "reduction requires n >= 2, got {n}"
            )));
        }
        if self.len() > n {
            return Err(Error::invalid(format!(
                "cardinality {} exceeds the cap n = {n}",
                self.len()
            )));
        }
        if mode == ReduceMode::Merge && !self.space.is_geodesic() {
            return Err(Error::unsupported(format!(
                "merge reduction requires a geodesic space, got {:?}",
                self.space
            )));
        }
        if self.len() < n {
            return Ok(self.clone());
        }
        let (i, j, _) = self.closest_pair()?;
        match mode {
            ReduceMode::Drop => {
                let without_i = self.without(i);
                let without_j = self.without(j);
                let di = self.hausdorff(&without_i)?;
                let dj = self.hausdorff(&without_j)?;
                // Ties drop the later point in canonical order (index j).
                if di < dj {
                    Ok(without_i)
                } else {
                    Ok(without_j)
                }
            }
            ReduceMode::Merge => {
                let mid = self
                    .space
                    .geodesic_point(&self.points[i], &self.points[j], 0.5)?;
                let mut pts: Vec<Point> = self
                    .points
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i && *k != j)
                    .map(|(_, p)| p.clone())
                    .collect();
                pts.push(mid);
                FiniteSubset::new(self.space.clone(), pts)
            }
        }
    }

    /// Exact minimal-radius cover by at most k points, for one-dimensional
    /// carriers and the arclength circle.
    ///
    /// The line case enumerates contiguous partitions of the sorted points
    /// into at most k blocks by dynamic programming (block center = midpoint,
    /// block radius = half diameter). The circle case tries every inter-point
    /// gap as a cut and solves the line problem on the unrolled points.
    pub fn exact_kcenter(&self, k: usize) -> Result<KCenterResult> {
        if k == 0 {
            return Err(Error::invalid("k must be at least 1"));
        }
        if self.len() <= k {
            return Ok(KCenterResult {
                centers: self.clone(),
                radius: 0.0,
            });
        }
        match &self.space {
            Space::Interval { .. } | Space::Euclidean { d: 1 } | Space::PNorm { d: 1, .. } => {
                let xs = self.scalars()?;
                let (_, centers) = kcenter_line(&xs, k);
                let centers = match &self.space {
                    Space::Interval { .. } => {
                        FiniteSubset::from_scalars(self.space.clone(), &centers)?
                    }
                    _ => FiniteSubset::new(
                        self.space.clone(),
                        centers.iter().map(|&c| Point::vector([c])).collect(),
                    )?,
                };
                let radius = self.hausdorff(&centers)?;
                Ok(KCenterResult { centers, radius })
            }
            Space::Circle { metric: CircleMetric::Arclength } => {
                let angles = self.angles()?;
                let m = angles.len();
                let mut best: Option<(f64, Vec<f64>)> = None;
                for cut in 0..m {
                    // Unroll starting just past the cut gap (after index `cut`).
                    let unrolled: Vec<f64> = (0..m)
                        .map(|i| {
                            let idx = (cut + 1 + i) % m;
                            let a = angles[idx];
                            if idx <= cut { a + TAU } else { a }
                        })
                        .collect();
                    let (radius, centers) = kcenter_line(&unrolled, k);
                    if best.as_ref().is_none_or(|(r, _)| radius < *r) {
                        best = Some((radius, centers));
                    }
                }
                let (_, centers) = best.expect("nonempty set yields at least one cut");
                let centers = FiniteSubset::from_angles(
                    CircleMetric::Arclength,
                    &centers.iter().map(|&c| wrap_angle(c)).collect::<Vec<_>>(),
                )?;
                let radius = self.hausdorff(&centers)?;
                Ok(KCenterResult { centers, radius })
            }
            other => Err(Error::unsupported(format!(
                "exact k-center is implemented for one-dimensional carriers and the arclength circle, got {other:?}"
            ))),
        }
    }

    /// Covers a circular point set by at most k arc midpoints within
    /// Hausdorff distance π(n−1)/(kn).
    ///
    /// The set is united with its rotations by multiples of 2π/k; the
    /// resulting k-fold symmetric set leaves an open gap of length at least
    /// 2π/(kn), and k uniformly spaced closed arcs of length 2π(n−1)/(kn)
    /// laid from the gap's end cover it. The output consists of the
    /// midpoints of the arcs that meet the input. Ties among maximal gaps
    /// are broken toward the smallest arc starting angle.
    pub fn circle_k_cover(&self, k: usize) -> Result<FiniteSubset> {
        if k == 0 {
            return Err(Error::invalid("k must be at least 1"));
        }
        match &self.space {
            Space::Circle {
                metric: CircleMetric::Arclength,
            } => {}
            other => {
                return Err(Error::unsupported(format!(
                    "the k-cover construction needs the arclength circle, got {other:?}"
                )))
            }
        }
        let n = self.len();
        if n <= k {
            return Ok(self.clone());
        }
        let angles = self.angles()?;

        let mut rotated: Vec<f64> = Vec::with_capacity(k * n);
        for j in 0..k {
            let rot = TAU * j as f64 / k as f64;
            rotated.extend(angles.iter().map(|&a| wrap_angle(a + rot)));
        }
        rotated.sort_by(f64::total_cmp);
        rotated.dedup();

        // Largest gap of the symmetrized set; ties pick the smallest arc
        // start angle, i.e. the smallest gap end modulo 2π.
        let m = rotated.len();
        let mut gap_len = f64::NEG_INFINITY;
        let mut arc_start = 0.0f64;
        for i in 0..m {
            let start = rotated[i];
            let end = if i + 1 < m {
                rotated[i + 1]
            } else {
                rotated[0] + TAU
            };
            let len = end - start;
            let key = wrap_angle(end);
            if len > gap_len || (len == gap_len && key < arc_start) {
                gap_len = len;
                arc_start = key;
            }
        }
        let nk = (k * n) as f64;
        if gap_len < TAU / nk - 1e-9 {
            return Err(Error::NumericalFailure(format!(
                "no gap of length 2π/(kn) found (largest {gap_len}); the counting bound failed"
            )));
        }

        let period = TAU / k as f64;
        let arc_len = TAU * (n as f64 - 1.0) / nk;
        let mut hit = vec![false; k];
        for &a in &angles {
            let rel = wrap_angle(a - arc_start);
            let mut idx = (rel / period).floor() as usize;
            let mut off = rel - period * idx as f64;
            if idx >= k {
                idx = 0;
                off = 0.0;
            }
            if off > arc_len + 1e-9 {
                // Rounding placed the point just before the next arc's start.
                if period - off <= 1e-9 {
                    idx = (idx + 1) % k;
                } else {
                    return Err(Error::NumericalFailure(format!(
                        "point at angle {a} escaped every covering arc"
                    )));
                }
            }
            hit[idx] = true;
        }
        let centers: Vec<f64> = (0..k)
            .filter(|&j| hit[j])
            .map(|j| wrap_angle(arc_start + period * j as f64 + arc_len / 2.0))
            .collect();
        FiniteSubset::from_angles(CircleMetric::Arclength, &centers)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceMode {
    Drop,
    Merge,
}

/// Line k-center on sorted coordinates: minimal max block half-diameter over
/// contiguous partitions into at most k blocks, with the block midpoints as
/// centers. O(k·m²).
fn kcenter_line(xs: &[f64], k: usize) -> (f64, Vec<f64>) {
    let m = xs.len();
    debug_assert!(m > 0);
    if m <= k {
        return (0.0, xs.to_vec());
    }
    let cost = |i: usize, j: usize| (xs[j] - xs[i]) / 2.0;
    // dp[c][j]: best radius covering the first j points with at most c blocks.
    let mut dp = vec![vec![f64::INFINITY; m + 1]; k + 1];
    let mut parent = vec![vec![0usize; m + 1]; k + 1];
    dp[0][0] = 0.0;
    for c in 1..=k {
        dp[c][0] = 0.0;
        for j in 1..=m {
            for i in 0..j {
                if dp[c - 1][i].is_finite() {
                    let r = dp[c - 1][i].max(cost(i, j - 1));
                    // `<=` keeps the latest tie, i.e. greedy-long early blocks.
                    if r <= dp[c][j] {
                        dp[c][j] = r;
                        parent[c][j] = i;
                    }
                }
            }
        }
    }
    let radius = dp[k][m];
    let mut centers = Vec::new();
    let mut c = k;
    let mut j = m;
    while j > 0 {
        let i = parent[c][j];
        centers.push((xs[i] + xs[j - 1]) / 2.0);
        j = i;
        c -= 1;
    }
    centers.reverse();
    (radius, centers)
}

/// A pinned subset space: sets of cardinality at most `cap` that contain
/// every pin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PinnedSpec {
    pins: FiniteSubset,
    cap: usize,
}

impl PinnedSpec {
    pub fn new(pins: FiniteSubset, cap: usize) -> Result<Self> {
        if pins.len() > cap {
            return Err(Error::invalid(format!(
                "pin set of size {} exceeds the cap {cap}",
                pins.len()
            )));
        }
        Ok(PinnedSpec { pins, cap })
    }

    /// The n-th pinned interval space over [0, 1] with pins {0, 1} and
    /// cardinality cap n + 2 (contractible for even n, sphere-like for odd).
    pub fn dunce_hat(n: usize) -> Self {
        let pins = FiniteSubset::from_scalars(Space::unit_interval(), &[0.0, 1.0])
            .expect("static pin set is valid");
        PinnedSpec { pins, cap: n + 2 }
    }

    pub fn pins(&self) -> &FiniteSubset {
        &self.pins
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Membership: the pins are contained in `a` and `|a| ≤ cap`.
    pub fn contains(&self, a: &FiniteSubset) -> Result<bool> {
        self.pins.require_same_space(a)?;
        Ok(a.len() <= self.cap && self.pins.points().iter().all(|p| a.contains(p)))
    }
}

/// Result of the exact k-center oracle: at most k centers together with the
/// Hausdorff distance they achieve, recomputed from the output.
#[derive(Clone, Debug, PartialEq)]
pub struct KCenterResult {
    pub centers: FiniteSubset,
    pub radius: f64,
}

impl Serialize for KCenterResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KCenterResult", 3)?;
        st.serialize_field("space", self.centers.space())?;
        st.serialize_field("centers", &self.centers.points())?;
        st.serialize_field("radius", &self.radius)?;
        st.end()
    }
}
