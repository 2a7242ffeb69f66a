//! Stress majorization over hop distances with weights `w_ij = d_ij^-2`,
//! iterated with the localized (per-node) majorizing update. Each sweep is
//! guaranteed not to increase the stress.

use rand::Rng;

use super::LayoutError;
use crate::graph::{shortest_path_matrix, Graph, Layout};
use crate::metrics::stress_value;

#[derive(Debug, Clone)]
pub struct SmConfig {
    pub max_iters: usize,
    /// Relative stress-change threshold that ends the iteration.
    pub tolerance: f64,
    /// Starting layout; random-uniform in the unit square when absent.
    pub init: Option<Layout>,
    /// Record the layout after every sweep (for monotonicity checks).
    pub record_iterates: bool,
}

impl Default for SmConfig {
    fn default() -> Self {
        Self {
            max_iters: 300,
            tolerance: 1e-7,
            init: None,
            record_iterates: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SmResult {
    pub layout: Layout,
    pub iterations: usize,
    pub final_stress: f64,
    /// Layout after each sweep, including the initial one; empty unless
    /// `record_iterates` is set.
    pub iterates: Vec<Layout>,
}

pub fn stress_majorization<R: Rng>(
    g: &Graph,
    cfg: &SmConfig,
    rng: &mut R,
) -> Result<SmResult, LayoutError> {
    let n = g.n();
    if n < 2 {
        return Err(LayoutError::TooFewNodes(n));
    }
    let dm = shortest_path_matrix(g)?;
    let mut pos: Vec<[f64; 2]> = match &cfg.init {
        Some(init) => {
            init.matches(g)?;
            init.coords().to_vec()
        }
        None => (0..n).map(|_| [rng.gen::<f64>(), rng.gen::<f64>()]).collect(),
    };

    let mut iterates = Vec::new();
    if cfg.record_iterates {
        iterates.push(Layout::new(pos.clone()).unwrap());
    }
    let mut prev_stress = stress_value(&dm, &Layout::new(pos.clone()).unwrap());
    let mut iterations = 0;

    for _ in 0..cfg.max_iters {
        // One Gauss-Seidel sweep of the majorizing update:
        // x_i <- sum_j w_ij (x_j + d_ij (x_i - x_j) / |x_i - x_j|) / sum_j w_ij
        for i in 0..n {
            let mut num = [0.0, 0.0];
            let mut den = 0.0;
            let xi = pos[i];
            for (j, xj) in pos.iter().enumerate() {
                if j == i {
                    continue;
                }
                let dij = f64::from(dm.dist(i, j));
                let w = dij.powi(-2);
                let dx = xi[0] - xj[0];
                let dy = xi[1] - xj[1];
                let dist = (dx * dx + dy * dy).sqrt();
                if dist > 1e-12 {
                    num[0] += w * (xj[0] + dij * dx / dist);
                    num[1] += w * (xj[1] + dij * dy / dist);
                } else {
                    // Coincident points give no direction; pull toward x_j.
                    num[0] += w * xj[0];
                    num[1] += w * xj[1];
                }
                den += w;
            }
            pos[i] = [num[0] / den, num[1] / den];
        }
        iterations += 1;
        let layout = Layout::new(pos.clone()).unwrap();
        let stress = stress_value(&dm, &layout);
        if cfg.record_iterates {
            iterates.push(layout);
        }
        let drop = prev_stress - stress;
        let done = stress <= 0.0 || drop <= cfg.tolerance * prev_stress;
        prev_stress = stress;
        if done {
            break;
        }
    }

    Ok(SmResult {
        layout: Layout::new(pos).unwrap(),
        iterations,
        final_stress: prev_stress,
        iterates,
    })
}
