//! Radial tree layout: depth maps to radius, each subtree is confined to an
//! angular wedge sized by its leaf count. Wedges are narrowed to the annulus
//! chord bound `2 * acos(r / (r + 1))`, which keeps every subtree inside its
//! own sector and the drawing free of crossings.

use super::LayoutError;
use crate::graph::{Graph, Layout};

pub fn radial_tree_layout(t: &Graph, root: usize) -> Result<Layout, LayoutError> {
    let n = t.n();
    if root >= n {
        return Err(LayoutError::InvalidRoot(root, n));
    }
    if !t.is_tree() {
        return Err(LayoutError::NotATree {
            n,
            m: t.edge_count(),
        });
    }
    if n == 1 {
        return Ok(Layout::new(vec![[0.0, 0.0]]).unwrap());
    }

    // Orient the tree away from the root; children keep ascending order.
    let mut parent = vec![usize::MAX; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut depth = vec![0usize; n];
    let mut stack = vec![root];
    let mut visit_order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        visit_order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                children[v].push(w);
                stack.push(w);
            }
        }
    }

    // Leaf counts bottom-up (reverse DFS order).
    let mut leaves = vec![1usize; n];
    for &v in visit_order.iter().rev() {
        if !children[v].is_empty() {
            leaves[v] = children[v].iter().map(|&c| leaves[c]).sum();
        }
    }

    let tau = std::f64::consts::TAU;
    let mut coords = vec![[0.0f64; 2]; n];
    // (node, wedge start, wedge width)
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((root, 0.0, tau));
    while let Some((v, start, width)) = queue.pop_front() {
        let angle = start + width / 2.0;
        let r = depth[v] as f64;
        coords[v] = [r * angle.cos(), r * angle.sin()];
        if children[v].is_empty() {
            continue;
        }
        // Restrict the span handed to children so that chords between points
        // of the sub-wedge never dip inside the circle of radius r.
        let limit = if depth[v] == 0 {
            tau
        } else {
            2.0 * (r / (r + 1.0)).acos()
        };
        let span = width.min(limit);
        let mut cursor = angle - span / 2.0;
        for &c in &children[v] {
            let child_width = span * leaves[c] as f64 / leaves[v] as f64;
            queue.push_back((c, cursor, child_width));
            cursor += child_width;
        }
    }

    Ok(Layout::new(coords).unwrap())
}
