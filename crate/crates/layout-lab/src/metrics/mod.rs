//! Layout quality metrics: crossing count (nc), stress (s), angular
//! resolution (ar), and Procrustes alignment.

mod procrustes;

pub use procrustes::{procrustes_align, ProcrustesResult};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, Layout};

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("layout has {got} coordinates but the graph has {want} nodes")]
    SizeMismatch { got: usize, want: usize },
    #[error("zero-length edge ({0}, {1})")]
    ZeroLengthEdge(usize, usize),
    #[error("point sets have different sizes ({0} vs {1})")]
    PointCountMismatch(usize, usize),
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate target: all points coincide")]
    DegenerateTarget,
    #[error("degenerate prediction: all points coincide")]
    DegeneratePrediction,
}

/// Tolerance for the orientation predicate in crossing tests.
const ORIENT_EPS: f64 = 1e-12;

/// Per-graph metric values as written to reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub nc: usize,
    pub s: f64,
    pub ar: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub loss: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub loss_kind: Option<String>,
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> i8 {
    let v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if v > ORIENT_EPS {
        1
    } else if v < -ORIENT_EPS {
        -1
    } else {
        0
    }
}

/// Proper crossing of open segments: interiors intersect transversally, or
/// the segments are collinear and overlap in more than a point.
pub fn segments_cross(p1: [f64; 2], q1: [f64; 2], p2: [f64; 2], q2: [f64; 2]) -> bool {
    let o1 = orient(p1, q1, p2);
    let o2 = orient(p1, q1, q2);
    let o3 = orient(p2, q2, p1);
    let o4 = orient(p2, q2, q1);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    if o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0 {
        // Collinear: overlap of positive length counts once.
        let axis = usize::from(
            (q1[0] - p1[0]).abs().max((q2[0] - p2[0]).abs())
                < (q1[1] - p1[1]).abs().max((q2[1] - p2[1]).abs()),
        );
        let (a1, b1) = minmax(p1[axis], q1[axis]);
        let (a2, b2) = minmax(p2[axis], q2[axis]);
        return b1.min(b2) - a1.max(a2) > ORIENT_EPS;
    }
    false
}

fn minmax(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Number of unordered edge pairs whose open segments properly intersect.
/// Pairs sharing a graph endpoint never count.
pub fn count_crossings(g: &Graph, l: &Layout) -> usize {
    debug_assert_eq!(l.len(), g.n());
    let edges = g.edges();
    let mut count = 0;
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_cross(l.get(a), l.get(b), l.get(c), l.get(d)) {
                count += 1;
            }
        }
    }
    count
}

/// Stress of a layout against hop distances:
/// `sum over i < j of d_ij^-2 * (||x_i - x_j|| - d_ij)^2`.
///
/// Summed with Kahan compensation so that per-iteration monotonicity checks
/// are not drowned in accumulation noise.
pub fn stress_value(d: &DistanceMatrix, l: &Layout) -> f64 {
    debug_assert_eq!(l.len(), d.n());
    let n = d.n();
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..n {
        let xi = l.get(i);
        for j in i + 1..n {
            let xj = l.get(j);
            let dij = f64::from(d.dist(i, j));
            let e = ((xi[0] - xj[0]).powi(2) + (xi[1] - xj[1]).powi(2)).sqrt();
            let diff = e - dij;
            let term = diff * diff / (dij * dij);
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    sum
}

/// Mean over nodes of degree >= 2 of `min adjacent angle / (2 pi / degree)`.
/// A node whose incident edges are perfectly evenly spread contributes 1.
/// Graphs with no such node score 1.0 vacuously.
pub fn angular_resolution(g: &Graph, l: &Layout) -> Result<f64, MetricError> {
    if l.len() != g.n() {
        return Err(MetricError::SizeMismatch {
            got: l.len(),
            want: g.n(),
        });
    }
    let tau = std::f64::consts::TAU;
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut angles = Vec::new();
    for v in 0..g.n() {
        let deg = g.degree(v);
        if deg < 2 {
            continue;
        }
        let pv = l.get(v);
        angles.clear();
        for &w in g.neighbors(v) {
            let dx = l.get(w)[0] - pv[0];
            let dy = l.get(w)[1] - pv[1];
            if dx == 0.0 && dy == 0.0 {
                return Err(MetricError::ZeroLengthEdge(v, w));
            }
            angles.push(dy.atan2(dx));
        }
        angles.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        let mut min_gap = tau - angles[deg - 1] + angles[0];
        for pair in angles.windows(2) {
            min_gap = min_gap.min(pair[1] - pair[0]);
        }
        sum += min_gap / (tau / deg as f64);
        count += 1;
    }
    Ok(if count == 0 { 1.0 } else { sum / count as f64 })
}

/// Rescales a layout into a `size x size` box anchored at the origin,
/// preserving aspect ratio. Degenerate layouts (single point) are centered.
pub fn normalize_to_canvas(l: &Layout, size: f64) -> Layout {
    let coords = l.coords();
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for c in coords {
        min_x = min_x.min(c[0]);
        min_y = min_y.min(c[1]);
        max_x = max_x.max(c[0]);
        max_y = max_y.max(c[1]);
    }
    let extent = (max_x - min_x).max(max_y - min_y);
    if extent <= 0.0 {
        let scaled = vec![[size / 2.0, size / 2.0]; coords.len()];
        return Layout::new(scaled).unwrap();
    }
    let scale = size / extent;
    let scaled = coords
        .iter()
        .map(|c| [(c[0] - min_x) * scale, (c[1] - min_y) * scale])
        .collect();
    Layout::new(scaled).unwrap()
}

/// Canvas edge used for cross-technique metric comparability.
pub const CANVAS_SIZE: f64 = 1000.0;

/// nc/s/ar of a raw layout after normalization to the standard canvas.
pub fn evaluate_layout(
    g: &Graph,
    d: &DistanceMatrix,
    raw: &Layout,
) -> Result<MetricReport, MetricError> {
    if raw.len() != g.n() {
        return Err(MetricError::SizeMismatch {
            got: raw.len(),
            want: g.n(),
        });
    }
    let l = normalize_to_canvas(raw, CANVAS_SIZE);
    Ok(MetricReport {
        nc: count_crossings(g, &l),
        s: stress_value(d, &l),
        ar: angular_resolution(g, &l)?,
        loss: None,
        loss_kind: None,
    })
}
