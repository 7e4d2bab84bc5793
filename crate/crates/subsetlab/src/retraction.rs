//! Point maps, induced subset maps, retraction candidates, and retraction
//! transfer along a section/retraction pair of spaces.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sample::uniform_point;
use crate::space::{Point, Space, DEFAULT_TOL};
use crate::subset::FiniteSubset;

/// Number of sampled arguments used to validate composition identities at
/// construction time.
const COMPOSITION_SAMPLES: usize = 64;
const COMPOSITION_SEED: u64 = 0x5eed_cafe;

type PointFn = Arc<dyn Fn(&Point) -> Result<Point> + Send + Sync>;
type SubsetFn = Arc<dyn Fn(&FiniteSubset) -> Result<FiniteSubset> + Send + Sync>;

/// A named map between two spaces, evaluated on points.
///
/// `lip`, when present, is an analytic Lipschitz upper bound; the test
/// suites verify it by sampling rather than trusting it.
#[derive(Clone)]
pub struct PointMap {
    name: String,
    source: Space,
    target: Space,
    lip: Option<f64>,
    eval: PointFn,
}

impl fmt::Debug for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointMap")
            .field("name", &self.name)
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl PointMap {
    pub fn new(
        name: impl Into<String>,
        source: Space,
        target: Space,
        lip: Option<f64>,
        eval: impl Fn(&Point) -> Result<Point> + Send + Sync + 'static,
    ) -> Result<Self> {
        source.validate()?;
        target.validate()?;
        if let Some(l) = lip {
            if !(l.is_finite() && l >= 0.0) {
                return Err(Error::invalid(format!(
                    "Lipschitz bound must be >= 0, got {l}"
                )));
            }
        }
        Ok(PointMap {
            name: name.into(),
            source,
            target,
            lip,
            eval: Arc::new(eval),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn lip(&self) -> Option<f64> {
        self.lip
    }

    /// Evaluates the map, validating the argument against the source space
    /// and the value against the target space.
    pub fn eval(&self, p: &Point) -> Result<Point> {
        let p = self.source.check_point(p)?;
        let out = (self.eval)(&p)?;
        self.target.check_point(&out)
    }

    /// The induced subset map: the image of `a` under this map, with
    /// collisions silently reducing cardinality (set semantics).
    pub fn induce(&self, a: &FiniteSubset) -> Result<FiniteSubset> {
        if a.space() != &self.source {
            return Err(Error::invalid(format!(
                "subset over {:?} fed to a map from {:?}",
                a.space(),
                self.source
            )));
        }
        let images: Vec<Point> = a
            .points()
            .iter()
            .map(|p| self.eval(p))
            .collect::<Result<_>>()?;
        FiniteSubset::new(self.target.clone(), images)
    }

    pub fn identity(space: Space) -> Self {
        PointMap::new("identity", space.clone(), space, Some(1.0), |p| {
            Ok(p.clone())
        })
        .expect("identity map is always valid")
    }

    /// x ↦ factor·x on Euclidean d-space.
    pub fn scale(d: usize, factor: f64) -> Result<Self> {
        let space = Space::euclidean(d)?;
        PointMap::new(
            format!("scale:{factor}"),
            space.clone(),
            space,
            Some(factor.abs()),
            move |p| {
                Ok(Point::Vector(
                    p.coords()?.iter().map(|x| factor * x).collect(),
                ))
            },
        )
    }

    /// A linear map of the plane given by a 2×2 matrix.
    pub fn linear2(name: impl Into<String>, m: [[f64; 2]; 2], lip: Option<f64>) -> Result<Self> {
        let space = Space::euclidean(2)?;
        PointMap::new(name, space.clone(), space, lip, move |p| {
            let c = p.coords()?;
            Ok(Point::vector([
                m[0][0] * c[0] + m[0][1] * c[1],
                m[1][0] * c[0] + m[1][1] * c[1],
            ]))
        })
    }

    /// Inclusion of the interval [a, b] into the Euclidean line.
    pub fn interval_inclusion(a: f64, b: f64) -> Result<Self> {
        PointMap::new(
            "inclusion",
            Space::interval(a, b)?,
            Space::euclidean(1)?,
            Some(1.0),
            |p| Ok(Point::vector([p.as_scalar()?])),
        )
    }

    /// Clamp of the Euclidean line onto the interval [a, b].
    pub fn clamp_to_interval(a: f64, b: f64) -> Result<Self> {
        PointMap::new(
            "clamp",
            Space::euclidean(1)?,
            Space::interval(a, b)?,
            Some(1.0),
            move |p| Ok(Point::scalar(p.coords()?[0].clamp(a, b))),
        )
    }

    /// Radial projection x ↦ x/‖x‖ restricted to the annulus ‖x‖ ≥ ρ, where
    /// it is (1/ρ)-Lipschitz.
    pub fn radial_projection_map(d: usize, rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::invalid(format!(
                "inner radius must lie in (0, 1], got {rho}"
            )));
        }
        let space = Space::euclidean(d)?;
        PointMap::new(
            format!("radial:{rho}"),
            space.clone(),
            space,
            Some(1.0 / rho),
            move |p| radial_projection(p, rho),
        )
    }
}

/// x/‖x‖ for points with ‖x‖ ≥ ρ; identity on the unit sphere.
pub fn radial_projection(x: &Point, rho: f64) -> Result<Point> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Error::invalid(format!(
            "inner radius must lie in (0, 1], got {rho}"
        )));
    }
    let c = x.coords()?;
    let norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm < rho - DEFAULT_TOL {
        return Err(Error::DomainError(format!(
            "‖x‖ = {norm} is below the inner radius {rho}"
        )));
    }
    Ok(Point::Vector(c.iter().map(|v| v / norm).collect()))
}

/// A named candidate retraction of X(n) onto X(k): keeps sets of at most k
/// points fixed and never emits more than k points.
#[derive(Clone)]
pub struct RetractionCandidate {
    name: String,
    space: Space,
    n: usize,
    k: usize,
    eval: SubsetFn,
}

impl fmt::Debug for RetractionCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RetractionCandidate")
            .field("name", &self.name)
            .field("space", &self.space)
            .field("n", &self.n)
            .field("k", &self.k)
            .finish_non_exhaustive()
    }
}

impl RetractionCandidate {
    pub fn new(
        name: impl Into<String>,
        space: Space,
        n: usize,
        k: usize,
        eval: impl Fn(&FiniteSubset) -> Result<FiniteSubset> + Send + Sync + 'static,
    ) -> Result<Self> {
        space.validate()?;
        if k == 0 || k >= n {
            return Err(Error::invalid(format!(
                "need 1 <= k < n, got k = {k}, n = {n}"
            )));
        }
        Ok(RetractionCandidate {
            name: name.into(),
            space,
            n,
            k,
            eval: Arc::new(eval),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn domain_cap(&self) -> usize {
        self.n
    }

    pub fn target_cap(&self) -> usize {
        self.k
    }

    pub fn apply(&self, a: &FiniteSubset) -> Result<FiniteSubset> {
        if a.space() != &self.space {
            return Err(Error::invalid(format!(
                "subset over {:?} fed to a retraction on {:?}",
                a.space(),
                self.space
            )));
        }
        if a.len() > self.n {
            return Err(Error::invalid(format!(
                "subset of {} points exceeds the domain cap n = {}",
                a.len(),
                self.n
            )));
        }
        (self.eval)(a)
    }

    /// The closest-pair merge heuristic: sets of fewer than n points are
    /// fixed; an n-point set has its closest pair (lexicographically first
    /// among ties) replaced by the pair's geodesic midpoint. No Lipschitz
    /// constant is claimed; the lab measures one.
    pub fn merge(space: Space, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "merge retraction requires n >= 2, got {n}"
            )));
        }
        if !space.is_geodesic() {
            return Err(Error::unsupported(format!(
                "merge retraction requires a geodesic space, got {space:?}"
            )));
        }
        RetractionCandidate::new("merge", space, n, n - 1, move |a| {
            if a.len() < n {
                Ok(a.clone())
            } else {
                a.reduce_by_one(n, crate::subset::ReduceMode::Merge)
            }
        })
    }

    /// Checks the retraction contract on sampled arguments: `r(A) = A`
    /// whenever `|A| ≤ k`, and `|r(A)| ≤ k` always.
    pub fn check_contract(&self, samples: &[FiniteSubset]) -> Result<()> {
        for a in samples {
            let out = self.apply(a)?;
            if out.len() > self.k {
                return Err(Error::NumericalFailure(format!(
                    "candidate {} emitted {} points (cap {}) on {}",
                    self.name,
                    out.len(),
                    self.k,
                    serde_json::to_string(a)?
                )));
            }
            if a.len() <= self.k && out != *a {
                return Err(Error::NumericalFailure(format!(
                    "candidate {} moved a fixed set: {}",
                    self.name,
                    serde_json::to_string(a)?
                )));
            }
        }
        Ok(())
    }
}

/// Conjugates a retraction on X into a retraction on Y along maps
/// f: X → Y and g: Y → X with f∘g = id on Y.
///
/// The identity is validated on sampled arguments at construction. The
/// returned candidate evaluates the induced image under g, applies r, and
/// maps back with the induced image under f.
pub fn transfer_retraction(
    f: &PointMap,
    r: &RetractionCandidate,
    g: &PointMap,
) -> Result<RetractionCandidate> {
    if g.target() != r.space() {
        return Err(Error::InvalidComposition(format!(
            "g maps into {:?} but the retraction lives on {:?}",
            g.target(),
            r.space()
        )));
    }
    if f.source() != r.space() {
        return Err(Error::InvalidComposition(format!(
            "f maps from {:?} but the retraction lives on {:?}",
            f.source(),
            r.space()
        )));
    }
    if f.target() != g.source() {
        return Err(Error::InvalidComposition(format!(
            "f lands in {:?} but g starts from {:?}",
            f.target(),
            g.source()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(COMPOSITION_SEED);
    for _ in 0..COMPOSITION_SAMPLES {
        let y = uniform_point(g.source(), &mut rng)?;
        let back = f.eval(&g.eval(&y)?)?;
        let gap = g.source().distance(&y, &back)?;
        if gap > DEFAULT_TOL {
            return Err(Error::InvalidComposition(format!(
                "f∘g differs from the identity by {gap} at {y:?}"
            )));
        }
    }
    let (f, g, r) = (f.clone(), g.clone(), r.clone());
    let name = format!("transfer:{}", f.name());
    let space = g.source().clone();
    let (n, k) = (r.domain_cap(), r.target_cap());
    RetractionCandidate::new(name, space, n, k, move |a| {
        let lifted = g.induce(a)?;
        let reduced = r.apply(&lifted)?;
        f.induce(&reduced)
    })
}
