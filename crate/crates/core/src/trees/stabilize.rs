use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Edge, MarkedTree, TreeError};

/// Forget all marks outside `keep` and contract what becomes unstable.
pub fn stabilize(t: &MarkedTree, keep: &[&str]) -> Result<MarkedTree, TreeError> {
    let keep: BTreeSet<&str> = keep.iter().copied().collect();
    for k in &keep {
        if t.vertex_of(k).is_none() {
            return Err(TreeError::UnknownMark(k.to_string()));
        }
    }
    if keep.len() < 3 {
        return Err(TreeError::TooFewMarks(keep.len()));
    }
    let n = t.len();
    let kept_at = |v: usize| t.marks_at(v).into_iter().filter(|m| keep.contains(m)).count();
    let survives: Vec<bool> = (0..n)
        .map(|v| {
            let dirs =
                t.neighbors(v).iter().filter(|&&(w, _)| t.component(w, v).into_iter().any(|x| kept_at(x) > 0)).count();
            kept_at(v) + dirs >= 3
        })
        .collect();
    let survivors: Vec<usize> = (0..n).filter(|&v| survives[v]).collect();
    let new_id: BTreeMap<usize, usize> = survivors.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // Two survivors are joined when everything strictly between them dies.
    let mut edges = Vec::new();
    for (i, &a) in survivors.iter().enumerate() {
        for &b in &survivors[i + 1..] {
            let path = t.path(a, b);
            if path[1..path.len() - 1].iter().all(|&x| !survives[x]) {
                edges.push(Edge { u: new_id[&a], v: new_id[&b], thickness: t.weighted_distance(a, b) });
            }
        }
    }

    let nearest = |start: usize| {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            if survives[u] {
                return u;
            }
            for &(w, _) in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
        unreachable!("some vertex survives when 3 marks are kept")
    };
    let marks: BTreeMap<String, usize> =
        keep.iter().map(|&k| (k.to_string(), new_id[&nearest(t.vertex_of(k).unwrap())])).collect();
    MarkedTree::new(survivors.len(), edges, marks)
}
