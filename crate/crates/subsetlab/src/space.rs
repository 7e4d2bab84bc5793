//! Concrete metric spaces: distances, geodesics, comparison residuals, and
//! nearest-point projections onto geodesic segments.
//!
//! Supported carriers: Euclidean and p-norm vector spaces, the unit circle
//! (arclength or chordal metric), compact intervals, and the tripod tree
//! (three legs glued at a center). All values are immutable and all
//! operations are pure, so everything here is safe to share across threads.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for floating-point comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) const TAU: f64 = std::f64::consts::TAU;

/// Exponent of a p-norm: a real p ≥ 1, or ∞.
///
/// Serializes as a JSON number, with ∞ spelled `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    fn validate(self) -> Result<Self> {
        match self {
            Exponent::Finite(p) if p.is_finite() && p >= 1.0 => Ok(self),
            Exponent::Infinity => Ok(self),
            _ => Err(Error::invalid(format!(
                "p-norm exponent must satisfy p >= 1, got {self}"
            ))),
        }
    }

    /// Hölder-dual exponent: 1 ↔ ∞, otherwise p/(p−1).
    pub fn dual(self) -> Exponent {
        match self {
            Exponent::Infinity => Exponent::Finite(1.0),
            Exponent::Finite(1.0) => Exponent::Infinity,
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => s.serialize_f64(*p),
            Exponent::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(p) => Ok(Exponent::Finite(p)),
            Raw::Str(s) if s == "inf" => Ok(Exponent::Infinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "unknown exponent {s:?}; use a number or \"inf\""
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleMetric {
    /// Shorter-arc length between angles.
    Arclength,
    /// Straight-line distance in the ambient plane: 2·sin(arc/2).
    Chordal,
}

/// Descriptor of a concrete metric space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Space {
    Euclidean { d: usize },
    PNorm { d: usize, p: Exponent },
    Circle { metric: CircleMetric },
    Interval { a: f64, b: f64 },
    Tripod { legs: [f64; 3] },
}

/// A point tagged by its carrier representation.
///
/// JSON forms: vectors as arrays, circle points as `{"angle":θ}`, interval
/// points as bare numbers, tripod points as `{"leg":i,"offset":t}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    Angle { angle: f64 },
    Tripod { leg: usize, offset: f64 },
    Vector(Vec<f64>),
    Scalar(f64),
}

impl Point {
    pub fn vector(coords: impl Into<Vec<f64>>) -> Self {
        Point::Vector(coords.into())
    }

    pub fn angle(angle: f64) -> Self {
        Point::Angle { angle }
    }

    pub fn scalar(x: f64) -> Self {
        Point::Scalar(x)
    }

    pub fn on_leg(leg: usize, offset: f64) -> Self {
        Point::Tripod { leg, offset }
    }

    /// Coordinates as a slice (vector points only).
    pub fn coords(&self) -> Result<&[f64]> {
        match self {
            Point::Vector(v) => Ok(v),
            other => Err(Error::invalid(format!(
                "expected a vector point, got {other:?}"
            ))),
        }
    }

    pub fn as_scalar(&self) -> Result<f64> {
        match self {
            Point::Scalar(x) => Ok(*x),
            other => Err(Error::invalid(format!(
                "expected a scalar point, got {other:?}"
            ))),
        }
    }

    pub fn as_angle(&self) -> Result<f64> {
        match self {
            Point::Angle { angle } => Ok(*angle),
            other => Err(Error::invalid(format!(
                "expected a circle point, got {other:?}"
            ))),
        }
    }
}

/// Normalizes -0.0 to +0.0 so canonical forms compare bitwise.
fn canon_f(x: f64) -> f64 {
    x + 0.0
}

/// Total order used for the canonical sorting of points within one space.
pub(crate) fn point_order(a: &Point, b: &Point) -> Ordering {
    match (a, b) {
        (Point::Scalar(x), Point::Scalar(y)) => x.total_cmp(y),
        (Point::Angle { angle: x }, Point::Angle { angle: y }) => x.total_cmp(y),
        (Point::Vector(x), Point::Vector(y)) => {
            for (xi, yi) in x.iter().zip(y.iter()) {
                match xi.total_cmp(yi) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            x.len().cmp(&y.len())
        }
        (
            Point::Tripod {
                leg: l1,
                offset: o1,
            },
            Point::Tripod {
                leg: l2,
                offset: o2,
            },
        ) => l1.cmp(l2).then(o1.total_cmp(o2)),
        // Mixed representations never survive validation; order arbitrarily.
        _ => Ordering::Equal,
    }
}

pub(crate) fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(TAU);
    if t >= TAU {
        t = 0.0;
    }
    canon_f(t)
}

fn pnorm_of(diff: impl Iterator<Item = f64>, p: Exponent) -> f64 {
    match p {
        Exponent::Infinity => diff.map(f64::abs).fold(0.0, f64::max),
        Exponent::Finite(1.0) => diff.map(f64::abs).sum(),
        Exponent::Finite(2.0) => diff.map(|d| d * d).sum::<f64>().sqrt(),
        Exponent::Finite(p) => diff.map(|d| d.abs().powf(p)).sum::<f64>().powf(1.0 / p),
    }
}

impl Space {
    pub fn euclidean(d: usize) -> Result<Self> {
        let s = Space::Euclidean { d };
        s.validate()?;
        Ok(s)
    }

    pub fn pnorm(d: usize, p: Exponent) -> Result<Self> {
        let s = Space::PNorm { d, p };
        s.validate()?;
        Ok(s)
    }

    pub fn circle(metric: CircleMetric) -> Self {
        Space::Circle { metric }
    }

    pub fn interval(a: f64, b: f64) -> Result<Self> {
        let s = Space::Interval { a, b };
        s.validate()?;
        Ok(s)
    }

    pub fn tripod(legs: [f64; 3]) -> Result<Self> {
        let s = Space::Tripod { legs };
        s.validate()?;
        Ok(s)
    }

    /// Unit interval [0, 1].
    pub fn unit_interval() -> Self {
        Space::Interval { a: 0.0, b: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Space::Euclidean { d } | Space::PNorm { d, .. } if *d == 0 => {
                Err(Error::invalid("dimension must be at least 1"))
            }
            Space::PNorm { p, .. } => {
                p.validate()?;
                Ok(())
            }
            Space::Interval { a, b } => {
                if !(a.is_finite() && b.is_finite() && a < b) {
                    Err(Error::invalid(format!(
                        "interval requires a < b, got [{a}, {b}]"
                    )))
                } else {
                    Ok(())
                }
            }
            Space::Tripod { legs } => {
                if legs.iter().all(|l| l.is_finite() && *l > 0.0) {
                    Ok(())
                } else {
                    Err(Error::invalid(format!(
                        "tripod legs must be positive, got {legs:?}"
                    )))
                }
            }
            _ => Ok(()),
        }
    }

    /// True when every pair of points is joined by a geodesic we can evaluate.
    /// The chordal circle is excluded: its chords leave the carrier.
    pub fn is_geodesic(&self) -> bool {
        !matches!(
            self,
            Space::Circle {
                metric: CircleMetric::Chordal
            }
        )
    }

    /// Validates a point against this space and returns its canonical form
    /// (angles wrapped to [0, 2π), the tripod center pinned to leg 0,
    /// negative zeros normalized). Coordinates within `DEFAULT_TOL` outside
    /// a bounded carrier are clamped; anything farther out is rejected.
    pub fn check_point(&self, p: &Point) -> Result<Point> {
        match (self, p) {
            (Space::Euclidean { d } | Space::PNorm { d, .. }, Point::Vector(v)) => {
                if v.len() != *d {
                    return Err(Error::invalid(format!(
                        "point has {} coordinates, space has dimension {d}",
                        v.len()
                    )));
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(Error::invalid("non-finite coordinate"));
                }
                Ok(Point::Vector(v.iter().map(|&x| canon_f(x)).collect()))
            }
            (Space::Circle { .. }, Point::Angle { angle }) => {
                if !angle.is_finite() {
                    return Err(Error::invalid("non-finite angle"));
                }
                Ok(Point::Angle {
                    angle: wrap_angle(*angle),
                })
            }
            (Space::Interval { a, b }, Point::Scalar(x)) => {
                if !x.is_finite() {
                    return Err(Error::invalid("non-finite scalar"));
                }
                if *x < a - DEFAULT_TOL || *x > b + DEFAULT_TOL {
                    return Err(Error::invalid(format!("{x} lies outside [{a}, {b}]")));
                }
                Ok(Point::Scalar(canon_f(x.clamp(*a, *b))))
            }
            (Space::Tripod { legs }, Point::Tripod { leg, offset }) => {
                if *leg >= 3 {
                    return Err(Error::invalid(format!(
                        "tripod leg index {leg} out of range"
                    )));
                }
                if !offset.is_finite() {
                    return Err(Error::invalid("non-finite offset"));
                }
                let len = legs[*leg];
                if *offset < -DEFAULT_TOL || *offset > len + DEFAULT_TOL {
                    return Err(Error::invalid(format!(
                        "offset {offset} lies outside leg {leg} of length {len}"
                    )));
                }
                let off = canon_f(offset.clamp(0.0, len));
                if off == 0.0 {
                    // The center is one point; represent it on leg 0.
                    Ok(Point::Tripod {
                        leg: 0,
                        offset: 0.0,
                    })
                } else {
                    Ok(Point::Tripod {
                        leg: *leg,
                        offset: off,
                    })
                }
            }
            _ => Err(Error::invalid(format!(
                "point representation {p:?} does not match space {self:?}"
            ))),
        }
    }

    /// The metric of the space. Symmetric, zero exactly on equal points.
    pub fn distance(&self, x: &Point, y: &Point) -> Result<f64> {
        let x = self.check_point(x)?;
        let y = self.check_point(y)?;
        Ok(match (self, &x, &y) {
            (Space::Euclidean { .. }, Point::Vector(a), Point::Vector(b)) => pnorm_of(
                a.iter().zip(b.iter()).map(|(u, v)| u - v),
                Exponent::Finite(2.0),
            ),
            (Space::PNorm { p, .. }, Point::Vector(a), Point::Vector(b)) => {
                pnorm_of(a.iter().zip(b.iter()).map(|(u, v)| u - v), *p)
            }
            (Space::Circle { metric }, Point::Angle { angle: a }, Point::Angle { angle: b }) => {
                let direct = (a - b).abs();
                let arc = direct.min(TAU - direct);
                match metric {
                    CircleMetric::Arclength => arc,
                    CircleMetric::Chordal => 2.0 * (arc / 2.0).sin(),
                }
            }
            (Space::Interval { .. }, Point::Scalar(a), Point::Scalar(b)) => (a - b).abs(),
            (
                Space::Tripod { .. },
                Point::Tripod {
                    leg: l1,
                    offset: o1,
                },
                Point::Tripod {
                    leg: l2,
                    offset: o2,
                },
            ) => {
                if l1 == l2 {
                    (o1 - o2).abs()
                } else {
                    // Path metric through the center.
                    o1 + o2
                }
            }
            _ => unreachable!("check_point guarantees matching representations"),
        })
    }

    /// The point γ(t) on a constant-speed geodesic from `p` to `q`.
    ///
    /// `t = 0` returns `p` exactly and `t = 1` returns `q` exactly. On the
    /// arclength circle an antipodal pair is resolved deterministically by
    /// traversing the counterclockwise arc from `p`.
    pub fn geodesic_point(&self, p: &Point, q: &Point, t: f64) -> Result<Point> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::invalid(format!(
                "geodesic parameter {t} outside [0, 1]"
            )));
        }
        let p = self.check_point(p)?;
        let q = self.check_point(q)?;
        if t == 0.0 {
            return Ok(p);
        }
        if t == 1.0 {
            return Ok(q);
        }
        match (self, &p, &q) {
            (Space::Euclidean { .. } | Space::PNorm { .. }, Point::Vector(a), Point::Vector(b)) => {
                let v: Vec<f64> = a
                    .iter()
                    .zip(b.iter())
                    .map(|(u, w)| (1.0 - t) * u + t * w)
                    .collect();
                self.check_point(&Point::Vector(v))
            }
            (Space::Circle { metric }, Point::Angle { angle: a }, Point::Angle { angle: b }) => {
                if *metric == CircleMetric::Chordal {
                    return Err(Error::unsupported(
                        "the chordal circle carries no geodesics; use the arclength metric",
                    ));
                }
                let raw = (b - a).rem_euclid(TAU);
                // Signed shorter arc; ties (raw == π) go counterclockwise.
                let delta = if raw <= std::f64::consts::PI {
                    raw
                } else {
                    raw - TAU
                };
                self.check_point(&Point::Angle {
                    angle: a + t * delta,
                })
            }
            (Space::Interval { .. }, Point::Scalar(a), Point::Scalar(b)) => {
                self.check_point(&Point::Scalar((1.0 - t) * a + t * b))
            }
            (
                Space::Tripod { .. },
                Point::Tripod {
                    leg: l1,
                    offset: o1,
                },
                Point::Tripod {
                    leg: l2,
                    offset: o2,
                },
            ) => {
                let target = if l1 == l2 || *o1 == 0.0 || *o2 == 0.0 {
                    // Both on one leg (the center lies on every leg).
                    let leg = if *o1 != 0.0 { *l1 } else { *l2 };
                    Point::Tripod {
                        leg,
                        offset: (1.0 - t) * o1 + t * o2,
                    }
                } else {
                    // Distinct legs: walk o1 down to the center, then up leg l2.
                    let total = o1 + o2;
                    let s = t * total;
                    if s <= *o1 {
                        Point::Tripod {
                            leg: *l1,
                            offset: o1 - s,
                        }
                    } else {
                        Point::Tripod {
                            leg: *l2,
                            offset: s - o1,
                        }
                    }
                };
                self.check_point(&target)
            }
            _ => unreachable!("check_point guarantees matching representations"),
        }
    }

    /// Residual of the comparison inequality at one configuration:
    ///
    /// `(1−t)·d(p,z)² + t·d(q,z)² − t(1−t)·d(p,q)² − d(γ(t),z)²`
    ///
    /// Nonnegative residuals certify the inequality; Hilbert-like spaces give
    /// zero, trees give nonnegative values, and the circle violates it.
    pub fn hadamard_residual(&self, p: &Point, q: &Point, z: &Point, t: f64) -> Result<f64> {
        let gamma = self.geodesic_point(p, q, t)?;
        let dpz = self.distance(p, z)?;
        let dqz = self.distance(q, z)?;
        let dpq = self.distance(p, q)?;
        let dgz = self.distance(&gamma, z)?;
        Ok((1.0 - t) * dpz * dpz + t * dqz * dqz - t * (1.0 - t) * dpq * dpq - dgz * dgz)
    }

    /// Nearest point to `z` on the geodesic segment from `p` to `q`.
    ///
    /// Supported where that projection is unique: Euclidean and p=2 spaces,
    /// intervals, and the tripod tree.
    pub fn project_to_segment(&self, p: &Point, q: &Point, z: &Point) -> Result<Point> {
        let p = self.check_point(p)?;
        let q = self.check_point(q)?;
        let z = self.check_point(z)?;
        match self {
            Space::Euclidean { .. }
            | Space::PNorm {
                p: Exponent::Finite(2.0),
                ..
            } => {
                let a = p.coords()?;
                let b = q.coords()?;
                let c = z.coords()?;
                let mut dot = 0.0;
                let mut norm2 = 0.0;
                for i in 0..a.len() {
                    let dir = b[i] - a[i];
                    dot += (c[i] - a[i]) * dir;
                    norm2 += dir * dir;
                }
                if norm2 == 0.0 {
                    return Ok(p);
                }
                let t = (dot / norm2).clamp(0.0, 1.0);
                let v: Vec<f64> = a
                    .iter()
                    .zip(b.iter())
                    .map(|(u, w)| u + t * (w - u))
                    .collect();
                self.check_point(&Point::Vector(v))
            }
            Space::Interval { .. } => {
                let (a, b) = (p.as_scalar()?, q.as_scalar()?);
                let (lo, hi) = (a.min(b), a.max(b));
                self.check_point(&Point::Scalar(z.as_scalar()?.clamp(lo, hi)))
            }
            Space::Tripod { .. } => self.check_point(&tripod_segment_projection(&p, &q, &z)),
            Space::Circle { .. } => Err(Error::unsupported(
                "segment projection on the circle is not unique",
            )),
            Space::PNorm { p, .. } => Err(Error::unsupported(format!(
                "segment projection requires p = 2, got p = {p}"
            ))),
        }
    }
}

/// Nearest point of the tree path [p, q] from z; this is the median of the
/// three points in the tripod.
fn tripod_segment_projection(p: &Point, q: &Point, z: &Point) -> Point {
    let (lp, op) = match p {
        Point::Tripod { leg, offset } => (*leg, *offset),
        _ => unreachable!(),
    };
    let (lq, oq) = match q {
        Point::Tripod { leg, offset } => (*leg, *offset),
        _ => unreachable!(),
    };
    let (lz, oz) = match z {
        Point::Tripod { leg, offset } => (*leg, *offset),
        _ => unreachable!(),
    };
    let same_leg = lp == lq || op == 0.0 || oq == 0.0;
    if same_leg {
        // The segment lives on a single leg as offsets [lo, hi]; when one
        // endpoint is the center, lo = 0.
        let leg = if op != 0.0 { lp } else { lq };
        let (lo, hi) = if lp == lq {
            (op.min(oq), op.max(oq))
        } else {
            (0.0, op.max(oq))
        };
        if lz == leg || oz == 0.0 {
            let off = if oz == 0.0 { 0.0 } else { oz };
            Point::Tripod {
                leg,
                offset: off.clamp(lo, hi),
            }
        } else {
            // z hangs off another leg: nearest segment point is the one
            // closest to the center.
            Point::Tripod { leg, offset: lo }
        }
    } else {
        // Segment spans [0, op] on leg lp, through the center, [0, oq] on lq.
        if lz == lp || oz == 0.0 {
            Point::Tripod {
                leg: lp,
                offset: oz.min(op),
            }
        } else if lz == lq {
            Point::Tripod {
                leg: lq,
                offset: oz.min(oq),
            }
        } else {
            Point::Tripod {
                leg: 0,
                offset: 0.0,
            }
        }
    }
}

/// A constant-speed geodesic segment with endpoints fixed at construction.
#[derive(Clone, Debug)]
pub struct Geodesic {
    space: Space,
    p: Point,
    q: Point,
}

impl Geodesic {
    pub fn new(space: Space, p: Point, q: Point) -> Result<Self> {
        space.validate()?;
        if !space.is_geodesic() {
            return Err(Error::unsupported(format!(
                "{space:?} is not a geodesic space"
            )));
        }
        let p = space.check_point(&p)?;
        let q = space.check_point(&q)?;
        Ok(Geodesic { space, p, q })
    }

    pub fn eval(&self, t: f64) -> Result<Point> {
        self.space.geodesic_point(&self.p, &self.q, t)
    }

    pub fn length(&self) -> f64 {
        self.space
            .distance(&self.p, &self.q)
            .expect("endpoints validated")
    }

    pub fn endpoints(&self) -> (&Point, &Point) {
        (&self.p, &self.q)
    }
}
