//! Small helpers for permutations stored as image vectors (`perm[v]` is the image of `v`).

/// Cycles of `perm`, each starting at its smallest element, ordered by that element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = perm[v];
        }
        out.push(cycle);
    }
    out
}

pub fn even_cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut even = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = perm[v];
        }
        even += usize::from(len % 2 == 0);
    }
    even
}

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&v| v < perm.len() && !std::mem::replace(&mut seen[v], true))
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (v, &w) in perm.iter().enumerate() {
        inv[w] = v;
    }
    inv
}

/// Cycle notation including fixed points, e.g. `(v1 v2 v3)(v4)`.
pub fn cycle_notation(perm: &[usize], labels: &[String]) -> String {
    if perm.is_empty() {
        return "()".to_string();
    }
    cycles(perm)
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&v| labels[v].as_str()).collect();
            format!("({})", names.join(" "))
        })
        .collect()
}
