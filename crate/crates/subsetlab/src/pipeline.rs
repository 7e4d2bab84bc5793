//! Normalization pipelines on interval subsets and norming-functional
//! clamps on vector spaces. These are the building blocks that turn a
//! candidate retraction into a pinned retraction with both extremes fixed.

use crate::error::{Error, Result};
use crate::retraction::PointMap;
use crate::space::{Exponent, Point, Space, DEFAULT_TOL};
use crate::subset::FiniteSubset;

/// Affine rescaling of an interval subset so its minimum is exactly 0 and
/// its maximum exactly 1; interior points map through
/// t ↦ (t − min)/(max − min). The extremes are written symbolically, not
/// divided by themselves, so the endpoints are exact.
pub fn normalize_unit(s: &FiniteSubset) -> Result<FiniteSubset> {
    let values = match s.space() {
        Space::Interval { .. } => s.scalars()?,
        other => {
            return Err(Error::invalid(format!(
                "normalization is defined on interval subsets, got {other:?}"
            )))
        }
    };
    let lo = values[0];
    let hi = values[values.len() - 1];
    if hi - lo <= 0.0 {
        return Err(Error::DegenerateInput(format!(
            "cannot normalize a set with max = min = {lo}"
        )));
    }
    let span = hi - lo;
    let mapped: Vec<f64> = values
        .iter()
        .map(|&t| {
            if t == lo {
                0.0
            } else if t == hi {
                1.0
            } else {
                ((t - lo) / span).clamp(0.0, 1.0)
            }
        })
        .collect();
    FiniteSubset::from_scalars(Space::unit_interval(), &mapped)
}

/// Drops the far cluster of a three-cluster configuration on [0, 2]:
/// returns S ∩ [0, 1 + c/2].
///
/// Preconditions (validated): c in (0, 1); S meets [0, c/2],
/// [1 − c/2, 1 + c/2] and [2 − c/2, 2]; S avoids the open middle
/// (1 + c/2, 2 − c/2). Outside this regime the truncation is undefined and
/// an invalid-configuration error is returned. The result has at least one
/// point fewer than S. For two valid configurations at Hausdorff distance
/// below 1 − c the truncation does not increase their distance.
pub fn pinned_truncate(s: &FiniteSubset, c: f64) -> Result<FiniteSubset> {
    if !(0.0 < c && c < 1.0) {
        return Err(Error::InvalidConfiguration(format!(
            "the truncation guard requires 0 < c < 1, got c = {c}"
        )));
    }
    match s.space() {
        Space::Interval { a, b } if *a == 0.0 && *b == 2.0 => {}
        other => {
            return Err(Error::invalid(format!(
                "truncation expects a subset of the interval [0, 2], got {other:?}"
            )))
        }
    }
    let values = s.scalars()?;
    let half = c / 2.0;
    let cut = 1.0 + half;
    let meets_low = values.iter().any(|&v| v <= half);
    let meets_mid = values.iter().any(|&v| (1.0 - half..=cut).contains(&v));
    let meets_high = values.iter().any(|&v| v >= 2.0 - half);
    let invades_gap = values.iter().any(|&v| v > cut && v < 2.0 - half);
    if !(meets_low && meets_mid && meets_high) || invades_gap {
        return Err(Error::InvalidConfiguration(format!(
            "set does not realize the pinned three-cluster shape for c = {c}"
        )));
    }
    let kept: Vec<f64> = values.into_iter().filter(|&v| v <= cut).collect();
    debug_assert!(kept.len() < s.len());
    FiniteSubset::from_scalars(s.space().clone(), &kept)
}

/// Embeds a subset of [0, 1] into [0, 2] and adjoins the far pin {2}.
/// This embedding is an isometry for the Hausdorff distance.
pub fn adjoin_two(a: &FiniteSubset) -> Result<FiniteSubset> {
    match a.space() {
        Space::Interval { a: lo, b: hi } if *lo == 0.0 && *hi == 1.0 => {}
        other => {
            return Err(Error::invalid(format!(
                "expected a subset of the unit interval, got {other:?}"
            )))
        }
    }
    let mut values = a.scalars()?;
    values.push(2.0);
    FiniteSubset::from_scalars(Space::interval(0.0, 2.0)?, &values)
}

/// A norming functional φ for a unit vector u (‖φ‖* = 1, φ(u) = 1) together
/// with the clamp f(x) = min(max(φ(x), 0), 1) into [0, 1] and the ray
/// g(t) = t·u back into the space. Both maps are 1-Lipschitz and f∘g = id.
#[derive(Debug, Clone)]
pub struct NormingClamp {
    pub phi: Vec<f64>,
    pub f: PointMap,
    pub g: PointMap,
}

/// Builds the norming functional and its clamp/ray pair for a unit vector
/// in a p-norm space (Euclidean spaces count as p = 2).
///
/// The functional is explicit per exponent: for p in (1, ∞),
/// φ_i = sign(u_i)·|u_i|^(p−1); for p = 1, φ_i = sign(u_i) on the support
/// and 0 elsewhere; for p = ∞, φ = sign(u_i*)·e_i* at the smallest index
/// attaining the maximal coordinate.
pub fn norming_clamp(space: &Space, u: &Point) -> Result<NormingClamp> {
    let (d, p) = match space {
        Space::Euclidean { d } => (*d, Exponent::Finite(2.0)),
        Space::PNorm { d, p } => (*d, *p),
        other => {
            return Err(Error::invalid(format!(
                "norming functionals are built for vector spaces, got {other:?}"
            )))
        }
    };
    let u = space.check_point(u)?;
    let coords = u.coords()?.to_vec();
    let zero = Point::Vector(vec![0.0; d]);
    let norm = space.distance(&u, &zero)?;
    if (norm - 1.0).abs() > DEFAULT_TOL {
        return Err(Error::invalid(format!(
            "u must be a unit vector, got ‖u‖ = {norm}"
        )));
    }

    let phi: Vec<f64> = match p {
        Exponent::Finite(1.0) => coords
            .iter()
            .map(|&x| if x == 0.0 { 0.0 } else { x.signum() })
            .collect(),
        Exponent::Finite(p) => coords
            .iter()
            .map(|&x| {
                if x == 0.0 {
                    0.0
                } else {
                    x.signum() * x.abs().powf(p - 1.0)
                }
            })
            .collect(),
        Exponent::Infinity => {
            let mut best = 0usize;
            for (i, x) in coords.iter().enumerate() {
                if x.abs() > coords[best].abs() {
                    best = i;
                }
            }
            let mut phi = vec![0.0; d];
            phi[best] = coords[best].signum();
            phi
        }
    };

    let phi_for_f = phi.clone();
    let f = PointMap::new(
        "norming-clamp",
        space.clone(),
        Space::unit_interval(),
        Some(1.0),
        move |x| {
            let c = x.coords()?;
            let v: f64 = c.iter().zip(&phi_for_f).map(|(a, b)| a * b).sum();
            Ok(Point::scalar(v.clamp(0.0, 1.0)))
        },
    )?;
    let ray = coords;
    let g = PointMap::new(
        "norming-ray",
        Space::unit_interval(),
        space.clone(),
        Some(1.0),
        move |t| {
            let t = t.as_scalar()?;
            Ok(Point::Vector(ray.iter().map(|&x| t * x).collect()))
        },
    )?;
    Ok(NormingClamp { phi, f, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn unit_set(values: &[f64]) -> FiniteSubset {
        FiniteSubset::from_scalars(Space::unit_interval(), values).unwrap()
    }

    fn wide_set(values: &[f64]) -> FiniteSubset {
        FiniteSubset::from_scalars(Space::interval(0.0, 2.0).unwrap(), values).unwrap()
    }

    #[test]
    fn normalize_affine_example() {
        let s = unit_set(&[0.1, 0.5, 0.9]);
        let n = normalize_unit(&s).unwrap();
        assert_eq!(n.scalars().unwrap(), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn normalize_fixed_and_two_point_cases() {
        let s = unit_set(&[0.0, 0.3, 1.0]);
        assert_eq!(normalize_unit(&s).unwrap(), s);
        let s = unit_set(&[0.2, 0.8]);
        assert_eq!(
            normalize_unit(&s).unwrap().scalars().unwrap(),
            vec![0.0, 1.0]
        );
    }

    #[test]
    fn normalize_rejects_degenerate() {
        let s = unit_set(&[0.4]);
        assert!(matches!(normalize_unit(&s), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn truncate_example() {
        let s = wide_set(&[0.05, 0.4, 1.02, 1.9]);
        let t = pinned_truncate(&s, 0.3).unwrap();
        assert_eq!(t.scalars().unwrap(), vec![0.05, 0.4, 1.02]);
    }

    #[test]
    fn truncate_pins_only() {
        let s = wide_set(&[0.0, 1.0, 2.0]);
        let t = pinned_truncate(&s, 0.5).unwrap();
        assert_eq!(t.scalars().unwrap(), vec![0.0, 1.0]);
    }

    #[test]
    fn truncate_guards() {
        let s = wide_set(&[0.0, 1.0, 2.0]);
        assert!(matches!(
            pinned_truncate(&s, 1.0),
            Err(Error::InvalidConfiguration(_))
        ));
        // Missing the middle cluster.
        let bad = wide_set(&[0.0, 2.0]);
        assert!(matches!(
            pinned_truncate(&bad, 0.5),
            Err(Error::InvalidConfiguration(_))
        ));
        // A point strictly inside the forbidden middle band.
        let bad = wide_set(&[0.0, 1.0, 1.5, 2.0]);
        assert!(matches!(
            pinned_truncate(&bad, 0.4),
            Err(Error::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn adjoin_examples() {
        let a = unit_set(&[0.0, 0.5, 1.0]);
        assert_eq!(
            adjoin_two(&a).unwrap().scalars().unwrap(),
            vec![0.0, 0.5, 1.0, 2.0]
        );
        let pins = unit_set(&[0.0, 1.0]);
        assert_eq!(
            adjoin_two(&pins).unwrap().scalars().unwrap(),
            vec![0.0, 1.0, 2.0]
        );
    }

    #[test]
    fn norming_self_duality_p2() {
        let space = Space::pnorm(2, Exponent::Finite(2.0)).unwrap();
        let u = Point::vector([0.6, 0.8]);
        let nc = norming_clamp(&space, &u).unwrap();
        assert!((nc.phi[0] - 0.6).abs() < TOL && (nc.phi[1] - 0.8).abs() < TOL);
        for t in [0.0, 0.25, 1.0] {
            let back = nc.f.eval(&nc.g.eval(&Point::scalar(t)).unwrap()).unwrap();
            assert!((back.as_scalar().unwrap() - t).abs() < TOL);
        }
    }

    #[test]
    fn norming_l1_basis_vector() {
        let space = Space::pnorm(3, Exponent::Finite(1.0)).unwrap();
        let u = Point::vector([1.0, 0.0, 0.0]);
        let nc = norming_clamp(&space, &u).unwrap();
        assert_eq!(nc.phi, vec![1.0, 0.0, 0.0]);
        // Dual (sup) norm of φ is 1 and φ(u) = 1.
        let dual = nc.phi.iter().map(|x| x.abs()).fold(0.0, f64::max);
        assert!((dual - 1.0).abs() < TOL);
    }

    #[test]
    fn norming_clamp_saturates() {
        let space = Space::pnorm(2, Exponent::Finite(2.0)).unwrap();
        let u = Point::vector([1.0, 0.0]);
        let nc = norming_clamp(&space, &u).unwrap();
        let hi = nc.f.eval(&Point::vector([1.7, 0.3])).unwrap();
        assert_eq!(hi.as_scalar().unwrap(), 1.0);
        let lo = nc.f.eval(&Point::vector([-0.2, 0.5])).unwrap();
        assert_eq!(lo.as_scalar().unwrap(), 0.0);
    }

    #[test]
    fn norming_rejects_non_unit_vectors() {
        let space = Space::pnorm(2, Exponent::Finite(2.0)).unwrap();
        assert!(norming_clamp(&space, &Point::vector([1.0, 1.0])).is_err());
    }

    #[test]
    fn norming_linf_picks_smallest_max_index() {
        let space = Space::pnorm(3, Exponent::Infinity).unwrap();
        let u = Point::vector([-1.0, 1.0, 0.2]);
        let nc = norming_clamp(&space, &u).unwrap();
        assert_eq!(nc.phi, vec![-1.0, 0.0, 0.0]);
        // φ(u) = 1 despite the sign.
        let val: f64 = nc
            .phi
            .iter()
            .zip(u.coords().unwrap())
            .map(|(a, b)| a * b)
            .sum();
        assert!((val - 1.0).abs() < TOL);
    }

    proptest! {
        /// Normalization always lands the extremes exactly on 0 and 1 and
        /// preserves order.
        #[test]
        fn normalize_extremes_exact(values in proptest::collection::vec(0.0f64..1.0, 2..7)) {
            let s = unit_set(&values);
            prop_assume!(s.len() >= 2);
            let n = normalize_unit(&s).unwrap();
            let v = n.scalars().unwrap();
            prop_assert_eq!(v[0], 0.0);
            prop_assert_eq!(*v.last().unwrap(), 1.0);
        }

        /// Adjoining the far pin is an isometry.
        #[test]
        fn adjoin_isometry(
            xs in proptest::collection::vec(0.0f64..1.0, 1..6),
            ys in proptest::collection::vec(0.0f64..1.0, 1..6),
        ) {
            let (a, b) = (unit_set(&xs), unit_set(&ys));
            let d0 = a.hausdorff(&b).unwrap();
            let d1 = adjoin_two(&a).unwrap().hausdorff(&adjoin_two(&b).unwrap()).unwrap();
            prop_assert!((d0 - d1).abs() <= 1e-12);
        }
    }
}
