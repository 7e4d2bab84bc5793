//! Seeded samplers for points and subsets of the supported spaces.
//!
//! Vector spaces are sampled from the box [−1, 1]^d (or an annulus when
//! requested); bounded carriers are sampled from their own extent. Every
//! sampler is a pure function of the supplied RNG, so a fixed seed
//! reproduces the same stream regardless of scheduling.

use rand::Rng;

use crate::error::{Error, Result};
use crate::space::{Point, Space, TAU};
use crate::subset::FiniteSubset;

/// Fraction of the domain diameter used when planting near-coincident
/// partners in the clustered sampler.
const CLUSTER_SCALE: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerKind {
    /// Points i.i.d. uniform over the support.
    Uniform,
    /// Half the points are anchors; the rest are planted close to an anchor,
    /// where retraction-like maps are least regular.
    Clustered,
}

/// A seeded generator of subsets of fixed cardinality from one space.
#[derive(Clone, Debug)]
pub struct DomainSampler {
    space: Space,
    cardinality: usize,
    kind: SamplerKind,
    /// Radial bounds (inner, outer) restricting vector supports to an annulus.
    annulus: Option<(f64, f64)>,
}

impl DomainSampler {
    pub fn uniform(space: Space, cardinality: usize) -> Result<Self> {
        space.validate()?;
        if cardinality == 0 {
            return Err(Error::invalid("sampler cardinality must be at least 1"));
        }
        Ok(DomainSampler {
            space,
            cardinality,
            kind: SamplerKind::Uniform,
            annulus: None,
        })
    }

    pub fn clustered(space: Space, cardinality: usize) -> Result<Self> {
        let mut s = Self::uniform(space, cardinality)?;
        s.kind = SamplerKind::Clustered;
        Ok(s)
    }

    /// Singleton-or-larger sampler restricted to ρ ≤ ‖x‖₂ ≤ R in Euclidean d.
    pub fn annulus(d: usize, inner: f64, outer: f64, cardinality: usize) -> Result<Self> {
        if !(0.0 < inner && inner <= outer) {
            return Err(Error::invalid(format!(
                "annulus requires 0 < inner <= outer, got ({inner}, {outer})"
            )));
        }
        let mut s = Self::uniform(Space::euclidean(d)?, cardinality)?;
        s.annulus = Some((inner, outer));
        Ok(s)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    /// An upper bound on the support diameter, used to scale perturbations.
    pub fn diameter(&self) -> f64 {
        match (&self.space, self.annulus) {
            (Space::Euclidean { .. } | Space::PNorm { .. }, Some((_, outer))) => 2.0 * outer,
            (Space::Euclidean { d } | Space::PNorm { d, .. }, None) => 2.0 * (*d as f64).sqrt(),
            (Space::Circle { .. }, _) => std::f64::consts::PI,
            (Space::Interval { a, b }, _) => b - a,
            (Space::Tripod { legs }, _) => {
                let mut sorted = *legs;
                sorted.sort_by(f64::total_cmp);
                sorted[1] + sorted[2]
            }
        }
    }

    /// Number of perturbable coordinates per point.
    pub fn coords_per_point(&self) -> usize {
        match &self.space {
            Space::Euclidean { d } | Space::PNorm { d, .. } => *d,
            _ => 1,
        }
    }

    pub fn sample_point(&self, rng: &mut impl Rng) -> Point {
        match &self.space {
            Space::Euclidean { d } | Space::PNorm { d, .. } => {
                if let Some((inner, outer)) = self.annulus {
                    // Rejection from the bounding box of the outer ball.
                    loop {
                        let v: Vec<f64> = (0..*d).map(|_| rng.gen_range(-outer..=outer)).collect();
                        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                        if norm >= inner && norm <= outer {
                            return Point::Vector(v);
                        }
                    }
                } else {
                    Point::Vector((0..*d).map(|_| rng.gen_range(-1.0..=1.0)).collect())
                }
            }
            Space::Circle { .. } => Point::angle(rng.gen_range(0.0..TAU)),
            Space::Interval { a, b } => Point::scalar(rng.gen_range(*a..=*b)),
            Space::Tripod { legs } => {
                let leg = rng.gen_range(0usize..3);
                Point::on_leg(leg, rng.gen_range(0.0..=legs[leg]))
            }
        }
    }

    /// A subset of exactly `cardinality` distinct points.
    pub fn sample(&self, rng: &mut impl Rng) -> Result<FiniteSubset> {
        let mut points = Vec::with_capacity(self.cardinality);
        match self.kind {
            SamplerKind::Uniform => {
                for _ in 0..self.cardinality {
                    points.push(self.sample_point(rng));
                }
            }
            SamplerKind::Clustered => {
                let anchors = self.cardinality.div_ceil(2);
                for _ in 0..anchors {
                    points.push(self.sample_point(rng));
                }
                let eps = CLUSTER_SCALE * self.diameter();
                while points.len() < self.cardinality {
                    let anchor = points[rng.gen_range(0..anchors)].clone();
                    let coord = rng.gen_range(0..self.coords_per_point());
                    let delta = rng.gen_range(-eps..=eps);
                    points.push(self.perturb(&anchor, coord, delta));
                }
            }
        }
        let mut subset = FiniteSubset::new(self.space.clone(), points)?;
        // Collisions are measure zero but possible; top up to the target.
        let mut guard = 0;
        while subset.len() < self.cardinality {
            let mut pts = subset.points().to_vec();
            pts.push(self.sample_point(rng));
            subset = FiniteSubset::new(self.space.clone(), pts)?;
            guard += 1;
            if guard > 64 {
                return Err(Error::SearchFailure(
                    "could not reach the target cardinality".into(),
                ));
            }
        }
        Ok(subset)
    }

    /// Moves one coordinate of a point by `delta`, clamped back into the
    /// sampler's support.
    pub fn perturb(&self, p: &Point, coord: usize, delta: f64) -> Point {
        match (&self.space, p) {
            (Space::Euclidean { d } | Space::PNorm { d, .. }, Point::Vector(v)) => {
                let mut v = v.clone();
                let i = coord % *d;
                if let Some((inner, outer)) = self.annulus {
                    v[i] += delta;
                    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm < 1e-300 {
                        return p.clone();
                    }
                    let scale = if norm < inner {
                        inner / norm
                    } else if norm > outer {
                        outer / norm
                    } else {
                        1.0
                    };
                    Point::Vector(v.into_iter().map(|x| x * scale).collect())
                } else {
                    v[i] = (v[i] + delta).clamp(-1.0, 1.0);
                    Point::Vector(v)
                }
            }
            (Space::Circle { .. }, Point::Angle { angle }) => Point::angle(angle + delta),
            (Space::Interval { a, b }, Point::Scalar(x)) => {
                Point::scalar((x + delta).clamp(*a, *b))
            }
            (Space::Tripod { legs }, Point::Tripod { leg, offset }) => {
                Point::on_leg(*leg, (offset + delta).clamp(0.0, legs[*leg]))
            }
            _ => p.clone(),
        }
    }
}

/// One point uniform over the default support of `space` (box [−1, 1]^d for
/// vector spaces).
pub fn uniform_point(space: &Space, rng: &mut impl Rng) -> Result<Point> {
    Ok(DomainSampler::uniform(space.clone(), 1)?.sample_point(rng))
}
