//! ForceAtlas2: attraction proportional to distance along edges,
//! degree-weighted repulsion between all pairs, gravity toward the origin,
//! and the adaptive local/global speed scheme of the original method.

use rand::Rng;

use super::LayoutError;
use crate::graph::{Graph, Layout};

#[derive(Debug, Clone)]
pub struct FdConfig {
    pub iterations: usize,
    /// Repulsion scaling ratio (kr).
    pub scaling: f64,
    /// Gravity strength (kg).
    pub gravity: f64,
    /// Barnes-Hut is deliberately not built; enabling it is an error.
    pub barnes_hut: bool,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            iterations: 1000,
            scaling: 2.0,
            gravity: 1.0,
            barnes_hut: false,
        }
    }
}

const JITTER_TOLERANCE: f64 = 1.0;
const KS: f64 = 0.1;
const KS_MAX: f64 = 10.0;

pub fn forceatlas2<R: Rng>(g: &Graph, cfg: &FdConfig, rng: &mut R) -> Result<Layout, LayoutError> {
    if cfg.barnes_hut {
        return Err(LayoutError::BarnesHutUnavailable);
    }
    let n = g.n();
    if n < 2 {
        return Err(LayoutError::TooFewNodes(n));
    }
    let mass: Vec<f64> = (0..n).map(|v| (g.degree(v) + 1) as f64).collect();
    let mut pos: Vec<[f64; 2]> = (0..n).map(|_| [rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    let mut force = vec![[0.0f64; 2]; n];
    let mut prev_force = vec![[0.0f64; 2]; n];
    let mut global_speed = 1.0;

    for _ in 0..cfg.iterations {
        std::mem::swap(&mut force, &mut prev_force);
        force.iter_mut().for_each(|f| *f = [0.0, 0.0]);

        // Attraction: each edge pulls with force proportional to distance.
        for &(u, v) in g.edges() {
            let dx = pos[v][0] - pos[u][0];
            let dy = pos[v][1] - pos[u][1];
            force[u][0] += dx;
            force[u][1] += dy;
            force[v][0] -= dx;
            force[v][1] -= dy;
        }

        // Repulsion: kr * (deg_u + 1)(deg_v + 1) / distance, along the pair.
        for u in 0..n {
            for v in u + 1..n {
                let dx = pos[u][0] - pos[v][0];
                let dy = pos[u][1] - pos[v][1];
                let d2 = dx * dx + dy * dy;
                if d2 <= 1e-18 {
                    continue;
                }
                let f = cfg.scaling * mass[u] * mass[v] / d2;
                force[u][0] += f * dx;
                force[u][1] += f * dy;
                force[v][0] -= f * dx;
                force[v][1] -= f * dy;
            }
        }

        // Gravity: kg * (deg + 1) toward the origin.
        for v in 0..n {
            let d = (pos[v][0].powi(2) + pos[v][1].powi(2)).sqrt();
            if d > 1e-12 {
                let f = cfg.gravity * mass[v] / d;
                force[v][0] -= f * pos[v][0];
                force[v][1] -= f * pos[v][1];
            }
        }

        // Adaptive speeds from per-node swinging vs. traction.
        let mut global_swing = 0.0;
        let mut global_traction = 0.0;
        for v in 0..n {
            let sx = force[v][0] - prev_force[v][0];
            let sy = force[v][1] - prev_force[v][1];
            let tx = (force[v][0] + prev_force[v][0]) / 2.0;
            let ty = (force[v][1] + prev_force[v][1]) / 2.0;
            global_swing += mass[v] * (sx * sx + sy * sy).sqrt();
            global_traction += mass[v] * (tx * tx + ty * ty).sqrt();
        }
        if global_swing > 0.0 {
            let target = JITTER_TOLERANCE * JITTER_TOLERANCE * global_traction / global_swing;
            global_speed = target.min(1.5 * global_speed);
        }

        for v in 0..n {
            let f_norm = (force[v][0].powi(2) + force[v][1].powi(2)).sqrt();
            if f_norm <= 1e-300 {
                continue;
            }
            let sx = force[v][0] - prev_force[v][0];
            let sy = force[v][1] - prev_force[v][1];
            let swing = (sx * sx + sy * sy).sqrt();
            let mut speed = KS * global_speed / (1.0 + global_speed * swing.sqrt());
            speed = speed.min(KS_MAX / f_norm);
            pos[v][0] += force[v][0] * speed;
            pos[v][1] += force[v][1] * speed;
        }
    }

    Layout::new(pos).map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_edge_separates() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let l = forceatlas2(&g, &FdConfig::default(), &mut rng).unwrap();
        let a = l.get(0);
        let b = l.get(1);
        assert!(a != b);
        let d = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
        assert!(d > 1e-3, "distance {d}");
    }

    #[test]
    fn star_center_inside_leaf_hull() {
        let edges: Vec<(usize, usize)> = (1..9).map(|v| (0, v)).collect();
        let g = Graph::new(9, edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let l = forceatlas2(&g, &FdConfig::default(), &mut rng).unwrap();
        let c = l.get(0);
        // Inside the convex hull iff no half-plane through c has all leaves
        // strictly on one side; check via the angular spread of the leaves.
        let mut angles: Vec<f64> = (1..9)
            .map(|v| {
                let p = l.get(v);
                (p[1] - c[1]).atan2(p[0] - c[0])
            })
            .collect();
        angles.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        let mut max_gap = std::f64::consts::TAU - angles[7] + angles[0];
        for w in angles.windows(2) {
            max_gap = max_gap.max(w[1] - w[0]);
        }
        assert!(max_gap < std::f64::consts::PI, "max angular gap {max_gap}");
    }

    #[test]
    fn deterministic_given_seed_and_finite() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let mut rng1 = ChaCha8Rng::seed_from_u64(3);
        let mut rng2 = ChaCha8Rng::seed_from_u64(3);
        let a = forceatlas2(&g, &FdConfig::default(), &mut rng1).unwrap();
        let b = forceatlas2(&g, &FdConfig::default(), &mut rng2).unwrap();
        assert_eq!(a, b);
        for c in a.coords() {
            assert!(c[0].is_finite() && c[1].is_finite());
        }
    }

    #[test]
    fn barnes_hut_toggle_is_rejected() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let cfg = FdConfig {
            barnes_hut: true,
            ..FdConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(matches!(
            forceatlas2(&g, &cfg, &mut rng),
            Err(LayoutError::BarnesHutUnavailable)
        ));
    }
}
