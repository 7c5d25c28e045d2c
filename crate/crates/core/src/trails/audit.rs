use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::terminals::{terminal_matching, terminal_points};
use super::{ChangingTrail, TrailKind, TwoColouredGraph};
use crate::schur::{path_weight, Point, Step};

/// Structural checks of the changing-trail machinery on one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GraphAudit {
    pub trails: usize,
    pub path_like: usize,
    pub cycle_like: usize,
    /// Trails partition the edge instances.
    pub partition: bool,
    /// The trail through an edge does not depend on where tracing starts.
    pub uniqueness: bool,
    /// No two trails cross at a shared vertex.
    pub locally_noncrossing: bool,
    /// The terminal matching is perfect and noncrossing.
    pub matching_noncrossing: bool,
    /// Every matched pair joins black to white and odd to even.
    pub colour_parity: bool,
    /// Recolouring from a terminal, retracing and recolouring again restores the graph.
    pub involution: bool,
    /// Recolouring yields valid families with the same total weight.
    pub weight_preserved: bool,
}

impl GraphAudit {
    pub fn passed(&self) -> bool {
        self.partition
            && self.uniqueness
            && self.locally_noncrossing
            && self.matching_noncrossing
            && self.colour_parity
            && self.involution
            && self.weight_preserved
    }
}

pub fn check_graph(g: &TwoColouredGraph) -> GraphAudit {
    let trails = g.all_trails();
    let mut audit = GraphAudit {
        trails: trails.len(),
        path_like: trails.iter().filter(|t| t.kind == TrailKind::PathLike).count(),
        cycle_like: trails.iter().filter(|t| t.kind == TrailKind::CycleLike).count(),
        ..GraphAudit::default()
    };

    let mut owner = vec![usize::MAX; g.edge_slots()];
    audit.partition = true;
    for (k, t) in trails.iter().enumerate() {
        for id in t.edge_set() {
            if owner[id] != usize::MAX {
                audit.partition = false;
            }
            owner[id] = k;
        }
    }
    audit.partition &= owner.iter().all(|&o| o != usize::MAX);

    let sets: Vec<BTreeSet<usize>> = trails.iter().map(ChangingTrail::edge_set).collect();
    audit.uniqueness = audit.partition && g.trails_from_every_state().all(|(id, t)| t.edge_set() == sets[owner[id]]);

    audit.locally_noncrossing = locally_noncrossing(&trails);

    let q = terminal_points(g);
    match terminal_matching(g) {
        Ok(m) => {
            audit.matching_noncrossing = m.is_perfect(q.len()) && m.is_noncrossing();
            audit.colour_parity = m.pairs_odd_with_even()
                && m.pairs.iter().all(|&(a, b)| q[a - 1].matching_colour != q[b - 1].matching_colour);
        }
        Err(_) => {
            audit.matching_noncrossing = false;
            audit.colour_parity = false;
        }
    }

    let weight = |h: &TwoColouredGraph| {
        h.decompose_to_families().ok().map(|(b, gr)| path_weight(&b).mul(&path_weight(&gr)))
    };
    let base = weight(g);
    audit.involution = true;
    audit.weight_preserved = base.is_some();
    for p in &q {
        let ok = (|| {
            let t = g.trace_from_terminal(p.location).ok()?;
            let h = g.recolour(std::slice::from_ref(&t)).ok()?;
            let w = weight(&h)?;
            let back = h.trace_from_terminal(p.location).ok()?;
            let same = back.edge_set() == t.edge_set() && h.recolour(&[back]).ok()? == *g;
            Some((same, Some(w) == base))
        })();
        match ok {
            Some((inv, w)) => {
                audit.involution &= inv;
                audit.weight_preserved &= w;
            }
            None => {
                audit.involution = false;
                audit.weight_preserved = false;
            }
        }
    }
    audit
}

/// Direction of an edge end at a vertex, in counter-clockwise order
/// east, north, west, south.
fn direction(at: Point, tail: Point, step: Step) -> u8 {
    let leaving = at == tail;
    match (step, leaving) {
        (Step::E, true) => 0,
        (Step::N, true) => 1,
        (Step::E, false) => 2,
        (Step::N, false) => 3,
    }
}

/// Two trails cross at `v` when their edge-end pairs at `v` interleave in
/// cyclic order.
fn locally_noncrossing(trails: &[ChangingTrail]) -> bool {
    // For each vertex, the direction pairs each trail uses when passing it.
    let mut passes: BTreeMap<Point, Vec<(usize, u8, u8)>> = BTreeMap::new();
    for (k, t) in trails.iter().enumerate() {
        let n = t.steps.len();
        let closed = t.kind == TrailKind::CycleLike;
        let count = if closed { n } else { n.saturating_sub(1) };
        for i in 0..count {
            let a = &t.steps[i];
            let b = &t.steps[(i + 1) % n];
            let v = a.to();
            passes.entry(v).or_default().push((k, direction(v, a.tail, a.step), direction(v, b.tail, b.step)));
        }
    }
    passes.values().all(|list| {
        list.iter().all(|&(k1, a1, a2)| {
            list.iter().filter(|&&(k2, _, _)| k2 != k1).all(|&(_, b1, b2)| !interleaved(a1, a2, b1, b2))
        })
    })
}

fn interleaved(a1: u8, a2: u8, b1: u8, b2: u8) -> bool {
    if a1 == a2 || b1 == b2 || [b1, b2].contains(&a1) || [b1, b2].contains(&a2) {
        return false;
    }
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    let inside = |d: u8| lo < d && d < hi;
    inside(b1) != inside(b2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::PathFamily;

    fn fam(paths: &[&str]) -> PathFamily {
        PathFamily::new(paths.iter().map(|p| p.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn figures_pass_the_audit() {
        let green = fam(&["(-1,1):EEEENNENN", "(-2,1):NENENENE", "(-3,1):NNNENEE"]);
        for blue_third in ["(-4,1):NNNNEE", "(-4,1):NNNENE"] {
            let blue = fam(&["(-2,1):ENEENNEN", "(-3,1):NENNEEN", blue_third]);
            let g = TwoColouredGraph::new(&blue, &green).unwrap();
            let a = check_graph(&g);
            assert!(a.passed(), "{a:?}");
            assert_eq!(a.path_like, 2);
        }
    }

    #[test]
    fn interleaving() {
        assert!(interleaved(0, 2, 1, 3));
        assert!(!interleaved(2, 3, 0, 1));
        assert!(!interleaved(0, 1, 0, 1));
    }
}
