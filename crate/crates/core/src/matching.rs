//! Maximum bipartite matching by augmenting paths (Kuhn).

/// `adj[l]` lists the right vertices adjacent to left vertex `l`.
pub fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(l, adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(l: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none_or(|o| augment(o, adj, owner, seen)) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

/// True iff every left vertex can be matched.
pub fn saturates_left(adj: &[Vec<usize>], right: usize) -> bool {
    adj.len() <= right && max_matching(adj, right) == adj.len()
}
