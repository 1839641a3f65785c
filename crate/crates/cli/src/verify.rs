//! Result checks that use only edge lists, so they share nothing with the
//! solvers' own bookkeeping.

use std::collections::HashSet;

use indforest::Forest;

fn edge_set(f: &Forest) -> HashSet<(usize, usize)> {
    f.edges().into_iter().collect()
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Whether `map` sends `pattern` onto an induced copy in `host`.
pub fn induced_copy(pattern: &Forest, host: &Forest, map: &[usize]) -> Result<(), String> {
    if map.len() != pattern.order() {
        return Err(format!(
            "map has {} entries for a pattern of order {}",
            map.len(),
            pattern.order()
        ));
    }
    if let Some(&v) = map.iter().find(|&&v| v >= host.order()) {
        return Err(format!("image {v} outside host of order {}", host.order()));
    }
    let image: HashSet<usize> = map.iter().copied().collect();
    if image.len() != map.len() {
        return Err("map is not injective".into());
    }
    let pattern_edges = edge_set(pattern);
    let host_edges = edge_set(host);
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            let in_pattern = pattern_edges.contains(&(i, j));
            let in_host = host_edges.contains(&key(map[i], map[j]));
            if in_pattern != in_host {
                return Err(format!(
                    "pair {i},{j} is {} in the pattern but {} in the host",
                    if in_pattern { "adjacent" } else { "not adjacent" },
                    if in_host { "adjacent" } else { "not adjacent" },
                ));
            }
        }
    }
    Ok(())
}

pub fn connected(f: &Forest) -> Result<(), String> {
    if f.order() > 0 && f.edges().len() + 1 == f.order() {
        Ok(())
    } else {
        Err(format!("result of order {} is not a tree", f.order()))
    }
}

pub fn components_at_most(f: &Forest, delta: usize) -> Result<(), String> {
    match f.components().iter().map(Forest::order).max() {
        Some(m) if m > delta => Err(format!("component of order {m} exceeds {delta}")),
        _ => Ok(()),
    }
}
