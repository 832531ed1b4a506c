//! Strand gluing: resolve a union of δ-lines into open chains and closed
//! loops.

/// Outcome of gluing: each open chain as a pair of its two end vertices,
/// and the number of closed loops.
#[derive(Debug)]
pub(crate) struct Glued {
    pub chains: Vec<(usize, usize)>,
    pub loops: u32,
}

/// Every vertex must have degree at most two. Degree-one vertices are chain
/// ends; a self-edge counts twice at its vertex.
pub(crate) fn glue(n_vertices: usize, edges: &[(usize, usize)]) -> Glued {
    const NONE: usize = usize::MAX;
    let mut adj = vec![[NONE; 2]; n_vertices];
    let mut deg = vec![0u8; n_vertices];
    for (e, &(a, b)) in edges.iter().enumerate() {
        for v in [a, b] {
            debug_assert!(deg[v] < 2, "vertex {v} has degree above 2");
            adj[v][deg[v] as usize] = e;
            deg[v] += 1;
        }
    }
    let mut used = vec![false; edges.len()];
    let next = |v: usize, used: &[bool]| adj[v][..deg[v] as usize].iter().copied().find(|&e| !used[e]);
    let other = |e: usize, v: usize| {
        let (a, b) = edges[e];
        if a == v {
            b
        } else {
            a
        }
    };

    let mut chains = Vec::new();
    for v in 0..n_vertices {
        if deg[v] != 1 || used[adj[v][0]] {
            continue;
        }
        let mut cur = v;
        while let Some(e) = next(cur, &used) {
            used[e] = true;
            cur = other(e, cur);
        }
        chains.push((v, cur));
    }

    let mut loops = 0;
    for e0 in 0..edges.len() {
        if used[e0] {
            continue;
        }
        used[e0] = true;
        let mut cur = edges[e0].1;
        while let Some(e) = next(cur, &used) {
            used[e] = true;
            cur = other(e, cur);
        }
        loops += 1;
    }
    Glued { chains, loops }
}
