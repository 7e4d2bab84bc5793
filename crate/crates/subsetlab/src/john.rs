//! Maximum-area inscribed ellipses of planar symmetric unit balls and the
//! linear change of coordinates they certify.
//!
//! For a symmetric 2D gauge B, the transform T maps the Euclidean unit disk
//! onto √2·E where E is the maximum-area ellipse inscribed in B. Direction
//! sampling then certifies ‖T‖ (Euclidean → gauge) ≤ √2 and ‖T⁻¹‖
//! (gauge → Euclidean) ≤ 1, which is what makes the plane interchangeable
//! with any two-dimensional normed space at bounded distortion.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::retraction::PointMap;
use crate::space::{Exponent, Point, Space, TAU};

const SQRT2: f64 = std::f64::consts::SQRT_2;
/// Slack allowed by the direction-sampling certificates.
const CERT_TOL: f64 = 1e-6;
/// Convergence tolerance on the inscribed-ellipse area.
const AREA_TOL: f64 = 1e-10;

/// A symmetric planar gauge: a p-norm or a convex symmetric polygon with at
/// least six vertices. Polygon edges are stored as functionals aᵢ with the
/// body equal to {x : aᵢ·x ≤ 1 for all i}.
#[derive(Clone, Debug)]
pub enum Gauge {
    PNorm {
        p: Exponent,
    },
    Polygon {
        vertices: Vec<[f64; 2]>,
        edges: Vec<[f64; 2]>,
    },
}

impl Gauge {
    pub fn from_space(space: &Space) -> Result<Gauge> {
        match space {
            Space::Euclidean { d: 2 } => Ok(Gauge::PNorm {
                p: Exponent::Finite(2.0),
            }),
            Space::PNorm { d: 2, p } => Ok(Gauge::PNorm { p: *p }),
            other => Err(Error::invalid(format!(
                "a planar norm descriptor is required, got {other:?}"
            ))),
        }
    }

    /// Builds a polygon gauge from its vertex list (either orientation).
    pub fn polygon(mut vertices: Vec<[f64; 2]>) -> Result<Gauge> {
        if vertices.len() < 6 {
            return Err(Error::invalid(format!(
                "polygon gauges need at least 6 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::invalid("non-finite polygon vertex"));
        }
        // Normalize to counterclockwise order.
        let doubled_area: f64 = vertices
            .iter()
            .zip(vertices.iter().cycle().skip(1))
            .map(|(v, w)| v[0] * w[1] - v[1] * w[0])
            .sum();
        if doubled_area < 0.0 {
            vertices.reverse();
        }
        let m = vertices.len();
        // Convexity: consecutive edges must turn left.
        for i in 0..m {
            let a = vertices[i];
            let b = vertices[(i + 1) % m];
            let c = vertices[(i + 2) % m];
            let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            if cross <= 1e-12 {
                return Err(Error::invalid(format!(
                    "polygon is not strictly convex at vertex {}",
                    (i + 1) % m
                )));
            }
        }
        // Central symmetry: every vertex has its antipode.
        for v in &vertices {
            let has_opposite = vertices
                .iter()
                .any(|w| (w[0] + v[0]).abs() <= 1e-9 && (w[1] + v[1]).abs() <= 1e-9);
            if !has_opposite {
                return Err(Error::invalid(format!(
                    "polygon is not symmetric: vertex {v:?} has no antipode"
                )));
            }
        }
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let v = vertices[i];
            let w = vertices[(i + 1) % m];
            let n = [w[1] - v[1], -(w[0] - v[0])]; // outward for CCW order
            let c = n[0] * v[0] + n[1] * v[1];
            if c <= 1e-12 {
                return Err(Error::invalid(
                    "polygon does not strictly contain the origin",
                ));
            }
            edges.push([n[0] / c, n[1] / c]);
        }
        Ok(Gauge::Polygon { vertices, edges })
    }

    /// Regular 2m-gon with vertices on the unit circle, first vertex at
    /// angle 0.
    pub fn regular_polygon(vertex_count: usize) -> Result<Gauge> {
        if vertex_count < 6 || !vertex_count.is_multiple_of(2) {
            return Err(Error::invalid(
                "a symmetric regular polygon needs an even vertex count of at least 6",
            ));
        }
        let vertices: Vec<[f64; 2]> = (0..vertex_count)
            .map(|i| {
                let t = TAU * i as f64 / vertex_count as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        Gauge::polygon(vertices)
    }

    /// Gauge value of a point: the Minkowski functional of the unit ball.
    pub fn eval(&self, x: [f64; 2]) -> f64 {
        match self {
            Gauge::PNorm { p } => match p {
                Exponent::Infinity => x[0].abs().max(x[1].abs()),
                Exponent::Finite(p) if *p == 1.0 => x[0].abs() + x[1].abs(),
                Exponent::Finite(p) if *p == 2.0 => x[0].hypot(x[1]),
                Exponent::Finite(p) => (x[0].abs().powf(*p) + x[1].abs().powf(*p)).powf(1.0 / *p),
            },
            Gauge::Polygon { edges, .. } => edges
                .iter()
                .map(|a| a[0] * x[0] + a[1] * x[1])
                .fold(0.0, f64::max),
        }
    }
}

/// A linear coordinate change together with its direction-sampled operator
/// norms. Serializes as `{"T":[[..]],"norm_T":..,"norm_Tinv":..,"directions":..}`.
#[derive(Clone, Debug, PartialEq)]
pub struct JohnTransform {
    pub t: [[f64; 2]; 2],
    pub norm_t: f64,
    pub norm_t_inv: f64,
    pub directions: usize,
}

impl Serialize for JohnTransform {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("JohnTransform", 4)?;
        st.serialize_field("T", &self.t)?;
        st.serialize_field("norm_T", &self.norm_t)?;
        st.serialize_field("norm_Tinv", &self.norm_t_inv)?;
        st.serialize_field("directions", &self.directions)?;
        st.end()
    }
}

/// Computes the inscribed-ellipse transform for a planar gauge and certifies
/// ‖T‖ ≤ √2 and ‖T⁻¹‖ ≤ 1 over 360 sampled directions.
pub fn john_transform(gauge: &Gauge) -> Result<JohnTransform> {
    john_transform_with(gauge, 360)
}

pub fn john_transform_with(gauge: &Gauge, directions: usize) -> Result<JohnTransform> {
    if directions < 360 {
        return Err(Error::invalid(
            "certification needs at least 360 directions",
        ));
    }
    let t = match gauge {
        Gauge::PNorm { p } => {
            match p {
                // The inscribed ellipse of the disk is the disk itself; no
                // inflation is needed, so short-circuit to the identity.
                Exponent::Finite(p) if *p == 2.0 => [[1.0, 0.0], [0.0, 1.0]],
                _ => {
                    // By symmetry the maximal ellipse is a disk: radius 1 for
                    // p ≥ 2, radius 2^(1/2 − 1/p) for p ≤ 2.
                    let r = match p {
                        Exponent::Infinity => 1.0,
                        Exponent::Finite(p) if *p >= 2.0 => 1.0,
                        Exponent::Finite(p) => 2f64.powf(0.5 - 1.0 / *p),
                    };
                    let s = SQRT2 * r;
                    [[s, 0.0], [0.0, s]]
                }
            }
        }
        Gauge::Polygon { edges, .. } => {
            let m = max_area_inscribed(edges)?;
            let s = sqrt_spd(m);
            [
                [SQRT2 * s[0][0], SQRT2 * s[0][1]],
                [SQRT2 * s[1][0], SQRT2 * s[1][1]],
            ]
        }
    };
    certify(gauge, t, directions)
}

fn certify(gauge: &Gauge, t: [[f64; 2]; 2], directions: usize) -> Result<JohnTransform> {
    let det = t[0][0] * t[1][1] - t[0][1] * t[1][0];
    if det.abs() < 1e-300 {
        return Err(Error::NumericalFailure("transform is singular".into()));
    }
    let t_inv = [
        [t[1][1] / det, -t[0][1] / det],
        [-t[1][0] / det, t[0][0] / det],
    ];
    let mut norm_t = 0.0f64;
    let mut norm_t_inv = 0.0f64;
    for i in 0..directions {
        let theta = TAU * i as f64 / directions as f64;
        let e = [theta.cos(), theta.sin()];
        let te = [
            t[0][0] * e[0] + t[0][1] * e[1],
            t[1][0] * e[0] + t[1][1] * e[1],
        ];
        let forward = gauge.eval(te);
        if forward > norm_t {
            norm_t = forward;
        }
        if forward > SQRT2 + CERT_TOL {
            return Err(Error::NumericalFailure(format!(
                "‖T‖ certificate fails at direction θ = {theta}: gauge(T e) = {forward}"
            )));
        }
        let boundary_scale = gauge.eval(e);
        let b = [e[0] / boundary_scale, e[1] / boundary_scale];
        let tb = [
            t_inv[0][0] * b[0] + t_inv[0][1] * b[1],
            t_inv[1][0] * b[0] + t_inv[1][1] * b[1],
        ];
        let backward = tb[0].hypot(tb[1]);
        if backward > norm_t_inv {
            norm_t_inv = backward;
        }
        if backward > 1.0 + CERT_TOL {
            return Err(Error::NumericalFailure(format!(
                "‖T⁻¹‖ certificate fails at direction θ = {theta}: |T⁻¹ b| = {backward}"
            )));
        }
    }
    Ok(JohnTransform {
        t,
        norm_t,
        norm_t_inv,
        directions,
    })
}

/// Maximum-area centered ellipse {x : xᵀM⁻¹x ≤ 1} inscribed in the polygon
/// {x : aᵢ·x ≤ 1}. Containment is linear in M (aᵢᵀ M aᵢ ≤ 1), so this
/// maximizes log det M under linear constraints with a log-barrier and
/// damped Newton steps, starting from the inscribed circle.
fn max_area_inscribed(edges: &[[f64; 2]]) -> Result<[[f64; 2]; 2]> {
    // Constraint functionals c·(m11, m22, m12) ≤ 1.
    let cons: Vec<[f64; 3]> = edges
        .iter()
        .map(|a| [a[0] * a[0], a[1] * a[1], 2.0 * a[0] * a[1]])
        .collect();
    let r0sq = {
        let max_norm2 = edges
            .iter()
            .map(|a| a[0] * a[0] + a[1] * a[1])
            .fold(0.0f64, f64::max);
        (1.0 - 1e-6) / max_norm2
    };
    let mut m = [r0sq, r0sq, 0.0];

    let det = |m: &[f64; 3]| m[0] * m[1] - m[2] * m[2];
    let feasible = |m: &[f64; 3]| {
        m[0] > 0.0
            && det(m) > 0.0
            && cons
                .iter()
                .all(|c| 1.0 - (c[0] * m[0] + c[1] * m[1] + c[2] * m[2]) > 0.0)
    };
    let objective = |m: &[f64; 3], mu: f64| {
        let mut f = det(m).ln();
        for c in &cons {
            f += mu * (1.0 - (c[0] * m[0] + c[1] * m[1] + c[2] * m[2])).ln();
        }
        f
    };

    let mut mu = 1.0;
    let mut prev_area = std::f64::consts::PI * det(&m).sqrt();
    while mu > 1e-13 {
        for _ in 0..100 {
            let d = det(&m);
            let g_det = [m[1], m[0], -2.0 * m[2]];
            let mut grad = [g_det[0] / d, g_det[1] / d, g_det[2] / d];
            // Hessian of log det: B/det − g gᵀ with B the Hessian of det.
            let mut hess = [
                [
                    -grad[0] * grad[0],
                    1.0 / d - grad[0] * grad[1],
                    -grad[0] * grad[2],
                ],
                [
                    1.0 / d - grad[1] * grad[0],
                    -grad[1] * grad[1],
                    -grad[1] * grad[2],
                ],
                [
                    -grad[2] * grad[0],
                    -grad[2] * grad[1],
                    -2.0 / d - grad[2] * grad[2],
                ],
            ];
            for c in &cons {
                let s = 1.0 - (c[0] * m[0] + c[1] * m[1] + c[2] * m[2]);
                for i in 0..3 {
                    grad[i] -= mu * c[i] / s;
                    for j in 0..3 {
                        hess[i][j] -= mu * c[i] * c[j] / (s * s);
                    }
                }
            }
            let step = solve3(&hess, &[-grad[0], -grad[1], -grad[2]]).ok_or_else(|| {
                Error::NumericalFailure("singular Newton system in the ellipse solver".into())
            })?;
            let decrement = -(grad[0] * step[0] + grad[1] * step[1] + grad[2] * step[2]);
            // `step` solves H δ = −∇ with H negative definite, so δ ascends.
            let mut alpha = 1.0;
            let f0 = objective(&m, mu);
            let mut accepted = false;
            for _ in 0..60 {
                let cand = [
                    m[0] + alpha * step[0],
                    m[1] + alpha * step[1],
                    m[2] + alpha * step[2],
                ];
                if feasible(&cand) && objective(&cand, mu) > f0 + 0.25 * alpha * decrement {
                    m = cand;
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if !accepted || decrement.abs() < 1e-12 {
                break;
            }
        }
        let area = std::f64::consts::PI * det(&m).sqrt();
        if (area - prev_area).abs() < AREA_TOL && mu < 1e-6 {
            break;
        }
        prev_area = area;
        mu *= 0.2;
    }
    Ok([[m[0], m[2]], [m[2], m[1]]])
}

/// Solves a symmetric 3×3 system by the adjugate; `None` when singular.
fn solve3(a: &[[f64; 3]; 3], b: &[f64; 3]) -> Option<[f64; 3]> {
    let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if det.abs() < 1e-300 {
        return None;
    }
    let inv = [
        [
            (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det,
            (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det,
            (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det,
        ],
        [
            (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det,
            (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det,
            (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det,
        ],
        [
            (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det,
            (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det,
            (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det,
        ],
    ];
    Some([
        inv[0][0] * b[0] + inv[0][1] * b[1] + inv[0][2] * b[2],
        inv[1][0] * b[0] + inv[1][1] * b[1] + inv[1][2] * b[2],
        inv[2][0] * b[0] + inv[2][1] * b[1] + inv[2][2] * b[2],
    ])
}

/// Square root of a 2×2 SPD matrix.
fn sqrt_spd(m: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let s = det.max(0.0).sqrt();
    let t = (tr + 2.0 * s).sqrt();
    [
        [(m[0][0] + s) / t, m[0][1] / t],
        [m[1][0] / t, (m[1][1] + s) / t],
    ]
}

/// The planar reduction map available for a space: orthogonal projection to
/// the first two coordinates in Euclidean spaces, the identity for any
/// two-dimensional vector space, unsupported otherwise.
pub fn plane_projection(space: &Space) -> Result<PointMap> {
    match space {
        Space::Euclidean { d: 2 } | Space::PNorm { d: 2, .. } => {
            Ok(PointMap::identity(space.clone()))
        }
        Space::Euclidean { d } if *d > 2 => PointMap::new(
            "plane-projection",
            space.clone(),
            Space::euclidean(2)?,
            Some(1.0),
            |p| {
                let c = p.coords()?;
                Ok(Point::vector([c[0], c[1]]))
            },
        ),
        other => Err(Error::unsupported(format!(
            "no planar projection is constructed for {other:?}"
        ))),
    }
}
