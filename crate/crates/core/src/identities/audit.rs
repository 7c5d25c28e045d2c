use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::sum;
use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::polyring::{Alphabet, Polynomial};
use crate::schur::{enumerate_families, path_weight, PathFamily, Point, SchurCache, TerminalSpec};
use crate::trails::{check_graph, Side, TerminalLocation, TwoColouredGraph};

/// Where the trail from the rightmost green end finishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditClass {
    /// The rightmost start `(-1, 1)`.
    A,
    /// The leftmost end `(λ_{r+1} - r - 1, N)`.
    B,
    /// The start `(-r-1, 1)` that no trail should reach.
    Gap,
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub lambda: Vec<i64>,
    pub n: u32,
    pub lhs_objects: usize,
    pub type_a: usize,
    pub type_b: usize,
    pub gap_hits: usize,
    pub other_hits: usize,
    /// Sizes of the two target sets, enumerated independently.
    pub a_objects: usize,
    pub b_objects: usize,
    pub injective: bool,
    /// The image is exactly the disjoint union of both target sets.
    pub surjective: bool,
    pub weight_preserved: bool,
    /// Each class lands in its own target set.
    pub classes_consistent: bool,
    /// Tracing from the same terminal in the image and recolouring again gives back the object.
    pub inverse: bool,
    /// Weight sums of the two classes equal the two right-side products.
    pub class_sums_match: bool,
    pub graphs_checked: usize,
    pub graph_failures: usize,
    pub elapsed_ms: u128,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.surjective
            && self.weight_preserved
            && self.classes_consistent
            && self.inverse
            && self.class_sums_match
            && self.gap_hits == 0
            && self.other_hits == 0
            && self.graph_failures == 0
    }
}

type Object = (PathFamily, PathFamily);

/// Families for shape `parts` at the given offset; empty if a part is negative.
fn families(parts: &[i64], n: u32, offset: i64) -> Vec<PathFamily> {
    let Ok(p) = Partition::from_signed(parts) else {
        return Vec::new();
    };
    let shape = SkewShape::straight(p.padded(parts.len()));
    enumerate_families(&TerminalSpec::for_shape(&shape, n, offset)).collect()
}

fn product(blue: &[PathFamily], green: &[PathFamily]) -> Vec<Object> {
    blue.iter().flat_map(|b| green.iter().map(move |g| (b.clone(), g.clone()))).collect()
}

fn weight(o: &Object) -> crate::polyring::Monomial {
    path_weight(&o.0).mul(&path_weight(&o.1))
}

/// Recolours the trail leaving `(λ_1 - 1, N)` in the graph with the given
/// blue and green families and classifies where it ends.
pub fn classify_object(lambda: &[i64], blue: &PathFamily, green: &PathFamily, n: u32) -> Result<(AuditClass, Object)> {
    let r = lambda.len() as i64 - 1;
    let g = TwoColouredGraph::with_height(blue, green, n)?;
    let start = TerminalLocation { point: Point::new(lambda[0] - 1, n as i64), side: Side::Top };
    let t = g.trace_from_terminal(start)?;
    let end = t.end().ok_or_else(|| Error::NoTrail(format!("closed trail from {start}")))?;
    let at = |x: i64, y: i64, side: Side| end == TerminalLocation { point: Point::new(x, y), side };
    let class = if at(-1, 1, Side::Bottom) {
        AuditClass::A
    } else if at(lambda[r as usize] - r - 1, n as i64, Side::Top) {
        AuditClass::B
    } else if at(-r - 1, 1, Side::Bottom) {
        AuditClass::Gap
    } else {
        AuditClass::Other
    };
    Ok((class, g.recolour(&[t])?.decompose_to_families()?))
}

/// Exhaustive check of the bijection behind the two-term identity: the
/// green family of `(λ_1..λ_r)` at offset 0 with the blue family of
/// `(λ_2..λ_{r+1})` at offset -1.
pub fn bijection_audit(lambda: &[i64], n: u32) -> Result<AuditReport> {
    let started = Instant::now();
    let lam = Partition::from_signed(lambda)?.padded(lambda.len()).signed();
    if lam.len() < 2 || n == 0 {
        return Err(Error::InvalidParameter("need at least two parts and N >= 1".into()));
    }
    let r = lam.len() - 1;
    let plus: Vec<i64> = lam[..r].iter().map(|p| p + 1).collect();
    let minus: Vec<i64> = lam[1..].iter().map(|p| p - 1).collect();

    let lhs = product(&families(&lam[1..], n, -1), &families(&lam[..r], n, 0));
    let a_set: BTreeSet<Object> = product(&families(&lam, n, 0), &families(&lam[1..r], n, -1)).into_iter().collect();
    let b_set: BTreeSet<Object> = product(&families(&plus, n, -1), &families(&minus, n, 0)).into_iter().collect();

    let mapped: Vec<(AuditClass, Object)> =
        lhs.par_iter().map(|(b, g)| classify_object(&lam, b, g, n)).collect::<Result<_>>()?;
    let count = |c: AuditClass| mapped.iter().filter(|(k, _)| *k == c).count();
    let images: BTreeSet<&Object> = mapped.iter().map(|(_, o)| o).collect();
    let union: BTreeSet<&Object> = a_set.iter().chain(&b_set).collect();
    let classes_consistent = mapped.iter().all(|(c, o)| match c {
        AuditClass::A => a_set.contains(o),
        AuditClass::B => b_set.contains(o),
        _ => false,
    });
    let weight_preserved = lhs.iter().zip(&mapped).all(|(o, (_, img))| weight(o) == weight(img));

    let lhs_set: BTreeSet<&Object> = lhs.iter().collect();
    let inverse = union
        .par_iter()
        .map(|o| classify_object(&lam, &o.0, &o.1, n).map(|(_, back)| lhs_set.contains(&back) && images.contains(o)))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok)
        && lhs.iter().zip(&mapped).all(|(o, (_, img))| {
            classify_object(&lam, &img.0, &img.1, n).is_ok_and(|(_, back)| back == *o)
        });

    let x = Alphabet::X { nvars: n };
    let class_sum = |c: AuditClass| {
        sum(x, mapped.iter().filter(|(k, _)| *k == c).map(|(_, o)| Polynomial::monomial(x, weight(o))))
    };
    let mut cache = SchurCache::new(n);
    let mut s = |p: &[i64]| cache.get_signed(p).expect("slices of a partition");
    let expect_a = &s(&lam) * &s(&lam[1..r]);
    let expect_b = &s(&plus) * &s(&minus);
    let class_sums_match = class_sum(AuditClass::A) == expect_a && class_sum(AuditClass::B) == expect_b;

    let graphs: Vec<&Object> = lhs.iter().chain(&a_set).chain(&b_set).collect();
    let graph_failures = graphs
        .par_iter()
        .filter(|(b, g)| TwoColouredGraph::with_height(b, g, n).map_or(true, |gr| !check_graph(&gr).passed()))
        .count();

    Ok(AuditReport {
        lambda: lam,
        n,
        lhs_objects: lhs.len(),
        type_a: count(AuditClass::A),
        type_b: count(AuditClass::B),
        gap_hits: count(AuditClass::Gap),
        other_hits: count(AuditClass::Other),
        a_objects: a_set.len(),
        b_objects: b_set.len(),
        injective: images.len() == mapped.len(),
        surjective: images == union && a_set.is_disjoint(&b_set),
        weight_preserved,
        classes_consistent,
        inverse,
        class_sums_match,
        graphs_checked: graphs.len(),
        graph_failures,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one_splits_two_plus_four() {
        let a = bijection_audit(&[2, 1], 2).unwrap();
        assert!(a.passed(), "{a:?}");
        assert_eq!((a.lhs_objects, a.type_a, a.type_b), (6, 2, 4));
        assert_eq!(a.gap_hits, 0);
    }

    #[test]
    fn single_variable() {
        let a = bijection_audit(&[1, 1], 1).unwrap();
        assert!(a.passed(), "{a:?}");
        // s1(x1)^2 = s11(x1) + s2(x1) s0(x1), and s11 vanishes in one variable
        assert_eq!((a.lhs_objects, a.type_a, a.type_b), (1, 0, 1));
    }

    #[test]
    fn zero_last_part() {
        let a = bijection_audit(&[2, 0], 2).unwrap();
        assert!(a.passed(), "{a:?}");
        assert_eq!(a.b_objects, 0);
    }
}
