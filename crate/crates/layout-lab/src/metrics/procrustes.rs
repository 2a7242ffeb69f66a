//! 2D Procrustes alignment: translation, uniform scale, and the closed-form
//! optimal rotation (no reflection). The residual statistic is the
//! similarity-invariant distance between two layouts and doubles as the PS
//! loss value.

use super::MetricError;
use crate::graph::Layout;

/// Result of aligning a prediction onto a target.
///
/// `rotation`, `scale`, and `translation` map the raw prediction into the raw
/// target's frame: `aligned = scale * R(rotation) * pred + translation`.
/// The statistic itself is computed between the unit-RMS-normalized sets.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcrustesResult {
    pub statistic: f64,
    pub rotation: f64,
    pub scale: f64,
    pub translation: [f64; 2],
}

pub(crate) struct Normalized {
    pub points: Vec<[f64; 2]>,
    pub centroid: [f64; 2],
    pub rms: f64,
}

/// Centers a point set and scales it to unit root-mean-square radius.
pub(crate) fn normalize(coords: &[[f64; 2]]) -> Option<Normalized> {
    let n = coords.len() as f64;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for c in coords {
        cx += c[0];
        cy += c[1];
    }
    cx /= n;
    cy /= n;
    let mut sq = 0.0;
    for c in coords {
        sq += (c[0] - cx).powi(2) + (c[1] - cy).powi(2);
    }
    let rms = (sq / n).sqrt();
    if rms <= 0.0 {
        return None;
    }
    let points = coords
        .iter()
        .map(|c| [(c[0] - cx) / rms, (c[1] - cy) / rms])
        .collect();
    Some(Normalized {
        points,
        centroid: [cx, cy],
        rms,
    })
}

/// Optimal rotation angle aligning `pred` onto `target` (both centered):
/// maximizes `sum target_i . R(theta) pred_i`.
pub(crate) fn optimal_rotation(target: &[[f64; 2]], pred: &[[f64; 2]]) -> f64 {
    let mut a = 0.0;
    let mut b = 0.0;
    for (t, p) in target.iter().zip(pred) {
        a += t[0] * p[0] + t[1] * p[1];
        b += t[1] * p[0] - t[0] * p[1];
    }
    b.atan2(a)
}

/// Aligns `pred` to `target` by centering both, scaling both to unit RMS
/// radius, and rotating `pred` by the closed-form optimal angle. Returns the
/// residual sum of squared distances and the raw-frame transform.
pub fn procrustes_align(target: &Layout, pred: &Layout) -> Result<ProcrustesResult, MetricError> {
    if target.len() != pred.len() {
        return Err(MetricError::PointCountMismatch(target.len(), pred.len()));
    }
    if target.len() < 2 {
        return Err(MetricError::TooFewPoints(target.len()));
    }
    let t = normalize(target.coords()).ok_or(MetricError::DegenerateTarget)?;
    let p = normalize(pred.coords()).ok_or(MetricError::DegeneratePrediction)?;
    let theta = optimal_rotation(&t.points, &p.points);
    let (sin, cos) = theta.sin_cos();
    let mut statistic = 0.0;
    for (zt, zp) in t.points.iter().zip(&p.points) {
        let rx = cos * zp[0] - sin * zp[1];
        let ry = sin * zp[0] + cos * zp[1];
        statistic += (zt[0] - rx).powi(2) + (zt[1] - ry).powi(2);
    }
    let scale = t.rms / p.rms;
    let translation = [
        t.centroid[0] - scale * (cos * p.centroid[0] - sin * p.centroid[1]),
        t.centroid[1] - scale * (sin * p.centroid[0] + cos * p.centroid[1]),
    ];
    Ok(ProcrustesResult {
        statistic,
        rotation: theta,
        scale,
        translation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn layout(points: &[[f64; 2]]) -> Layout {
        Layout::new(points.to_vec()).unwrap()
    }

    fn square() -> Layout {
        layout(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    }

    #[test]
    fn identical_sets_give_zero() {
        let r = procrustes_align(&square(), &square()).unwrap();
        assert!(r.statistic <= 1e-12);
    }

    #[test]
    fn similarity_transform_gives_zero_and_recovers_transform() {
        let target = square();
        let theta = 37.0f64.to_radians();
        let (s, c) = theta.sin_cos();
        let pred: Vec<[f64; 2]> = target
            .coords()
            .iter()
            .map(|p| {
                [
                    5.0 * (c * p[0] - s * p[1]) + 3.0,
                    5.0 * (s * p[0] + c * p[1]) - 2.0,
                ]
            })
            .collect();
        let r = procrustes_align(&target, &layout(&pred)).unwrap();
        assert!(r.statistic <= 1e-9);
        // Aligning the prediction back must undo the rotation and scale.
        assert_relative_eq!(r.rotation, -theta, epsilon = 1e-9);
        assert_relative_eq!(r.scale, 1.0 / 5.0, epsilon = 1e-9);
        for (t, p) in target.coords().iter().zip(&pred) {
            let (sin, cos) = r.rotation.sin_cos();
            let ax = r.scale * (cos * p[0] - sin * p[1]) + r.translation[0];
            let ay = r.scale * (sin * p[0] + cos * p[1]) + r.translation[1];
            assert_relative_eq!(ax, t[0], epsilon = 1e-9);
            assert_relative_eq!(ay, t[1], epsilon = 1e-9);
        }
    }

    #[test]
    fn statistic_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a: Vec<[f64; 2]> = (0..8).map(|_| [rng.gen::<f64>(), rng.gen::<f64>()]).collect();
            let b: Vec<[f64; 2]> = (0..8).map(|_| [rng.gen::<f64>(), rng.gen::<f64>()]).collect();
            let ab = procrustes_align(&layout(&a), &layout(&b)).unwrap().statistic;
            let ba = procrustes_align(&layout(&b), &layout(&a)).unwrap().statistic;
            assert_relative_eq!(ab, ba, epsilon = 1e-9);
        }
    }

    #[test]
    fn degenerate_sets_are_rejected() {
        let flat = layout(&[[2.0, 3.0], [2.0, 3.0], [2.0, 3.0]]);
        let ok = layout(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert!(matches!(
            procrustes_align(&flat, &ok),
            Err(MetricError::DegenerateTarget)
        ));
        assert!(matches!(
            procrustes_align(&ok, &flat),
            Err(MetricError::DegeneratePrediction)
        ));
        assert!(procrustes_align(&ok, &layout(&[[0.0, 0.0], [1.0, 0.0]])).is_err());
    }

    /// Brute-force minimization over (angle, scale, translation) applied to
    /// the unit-RMS-normalized prediction, by iterated grid refinement.
    fn grid_search_statistic(target: &Layout, pred: &Layout) -> f64 {
        let t = normalize(target.coords()).unwrap();
        let p = normalize(pred.coords()).unwrap();
        let mut best = f64::INFINITY;
        let mut center = (0.0f64, 1.0f64, 0.0f64, 0.0f64); // theta, scale, tx, ty
        let mut span = (std::f64::consts::PI, 0.5, 0.5, 0.5);
        for _ in 0..12 {
            let mut best_local = center;
            for it in -4..=4i32 {
                let theta = center.0 + span.0 * it as f64 / 4.0;
                let (sin, cos) = theta.sin_cos();
                for is in -4..=4i32 {
                    let s = center.1 + span.1 * is as f64 / 4.0;
                    for ix in -4..=4i32 {
                        let tx = center.2 + span.2 * ix as f64 / 4.0;
                        for iy in -4..=4i32 {
                            let ty = center.3 + span.3 * iy as f64 / 4.0;
                            let mut acc = 0.0;
                            for (zt, zp) in t.points.iter().zip(&p.points) {
                                let rx = s * (cos * zp[0] - sin * zp[1]) + tx;
                                let ry = s * (sin * zp[0] + cos * zp[1]) + ty;
                                acc += (zt[0] - rx).powi(2) + (zt[1] - ry).powi(2);
                            }
                            if acc < best {
                                best = acc;
                                best_local = (theta, s, tx, ty);
                            }
                        }
                    }
                }
            }
            center = best_local;
            span = (span.0 / 3.0, span.1 / 3.0, span.2 / 3.0, span.3 / 3.0);
        }
        best
    }

    #[test]
    fn displaced_square_matches_grid_search_oracle() {
        let target = square();
        let pred = layout(&[[0.1, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        let stat = procrustes_align(&target, &pred).unwrap().statistic;
        let oracle = grid_search_statistic(&target, &pred);
        assert!(
            (stat - oracle).abs() <= 1e-4,
            "closed form {stat} vs oracle {oracle}"
        );
    }
}
