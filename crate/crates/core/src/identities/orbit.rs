use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use super::sum;
use crate::error::{Error, Result};
use crate::partitions::SkewShape;
use crate::polyring::{Alphabet, Polynomial};
use crate::schur::{enumerate_families, path_weight, schur_poly, PathFamily, Point, SchurMethod, TerminalSpec};
use crate::trails::{terminal_sequence, Colour, MatchingColour, Parity, TerminalLocation, TerminalPoint, TwoColouredGraph};

/// Terminal geometry of a pair of families, which determines the shapes
/// `λ/μ` (blue) and `σ/τ` (green) together with their offsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple {
    pub blue_starts: Vec<Point>,
    pub blue_ends: Vec<Point>,
    pub green_starts: Vec<Point>,
    pub green_ends: Vec<Point>,
}

impl Quadruple {
    fn of(blue: &PathFamily, green: &PathFamily) -> Self {
        Quadruple {
            blue_starts: blue.starts(),
            blue_ends: blue.ends(),
            green_starts: green.starts(),
            green_ends: green.ends(),
        }
    }

    fn spec(starts: &[Point], ends: &[Point], n: u32) -> TerminalSpec {
        TerminalSpec { starts: starts.to_vec(), ends: ends.to_vec(), n, offset: 0 }
    }

    /// Normalised blue and green shapes; `None` for an impossible geometry.
    pub fn shapes(&self, n: u32) -> (Option<SkewShape>, Option<SkewShape>) {
        (
            Quadruple::spec(&self.blue_starts, &self.blue_ends, n).shape(),
            Quadruple::spec(&self.green_starts, &self.green_ends, n).shape(),
        )
    }

    fn objects(&self, n: u32) -> Vec<(PathFamily, PathFamily)> {
        let greens: Vec<PathFamily> = enumerate_families(&Quadruple::spec(&self.green_starts, &self.green_ends, n)).collect();
        let mut out = Vec::new();
        for b in enumerate_families(&Quadruple::spec(&self.blue_starts, &self.blue_ends, n)) {
            for g in &greens {
                out.push((b.clone(), g.clone()));
            }
        }
        out
    }

    fn terminal_points(&self) -> Vec<TerminalPoint> {
        terminal_sequence(&self.blue_ends, &self.green_ends, &self.blue_starts, &self.green_starts)
    }

    fn colouring(&self, selected: &[TerminalLocation]) -> Vec<Option<Colour>> {
        let q = self.terminal_points();
        selected.iter().map(|loc| q.iter().find(|p| p.location == *loc).map(|p| p.path_colour)).collect()
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts = |v: &[Point]| v.iter().map(|p| p.x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "blue [{}]->[{}], green [{}]->[{}]",
            pts(&self.blue_starts),
            pts(&self.blue_ends),
            pts(&self.green_starts),
            pts(&self.green_ends)
        )
    }
}

#[derive(Debug, Clone)]
pub struct OrbitResult {
    pub terminals: Vec<TerminalPoint>,
    pub selected: Vec<usize>,
    pub initial: Quadruple,
    pub s0: Vec<Quadruple>,
    pub s1: Vec<Quadruple>,
    pub o0_size: usize,
    pub o1_size: usize,
    pub per_quadruple: Vec<(Quadruple, usize)>,
    /// Recolouring maps O_0 onto O_1 injectively and back again.
    pub bijection: bool,
    /// Generating functions of O_0 and O_1 agree, i.e. equal weight multisets.
    pub weights_match: bool,
    /// Σ over S_1 of the Schur products equals Σ over S_0.
    pub schur_sums_match: bool,
    /// Black points share one parity and white points share the other.
    pub parity_hypothesis: bool,
    /// Under the parity hypothesis, S_0 is the initial quadruple alone.
    pub single_product: Option<bool>,
    /// For each selected point, how many O_0 trails end at each `Q` index.
    pub trail_ends: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub n: u32,
    pub elapsed_ms: u128,
}

impl OrbitResult {
    pub fn passed(&self) -> bool {
        self.bijection && self.weights_match && self.schur_sums_match && self.single_product != Some(false)
    }

    pub fn to_json(&self) -> Value {
        let quad = |q: &Quadruple| {
            let (b, g) = q.shapes(self.n);
            json!({
                "blue": b.map(|s| s.to_string()),
                "green": g.map(|s| s.to_string()),
                "terminals": q.to_string(),
            })
        };
        json!({
            "terminals": self.terminals.iter().map(|p| json!({
                "index": p.index,
                "point": p.location.point.to_string(),
                "side": p.location.side,
                "colour": p.path_colour,
                "matching_colour": p.matching_colour,
            })).collect::<Vec<_>>(),
            "selected": self.selected,
            "s0": self.s0.iter().map(quad).collect::<Vec<_>>(),
            "s1": self.s1.iter().map(quad).collect::<Vec<_>>(),
            "o0_size": self.o0_size,
            "o1_size": self.o1_size,
            "per_quadruple": self.per_quadruple.iter().map(|(q, c)| {
                let mut v = quad(q);
                v["objects"] = json!(c);
                v
            }).collect::<Vec<_>>(),
            "bijection": self.bijection,
            "weights_match": self.weights_match,
            "schur_sums_match": self.schur_sums_match,
            "parity_hypothesis": self.parity_hypothesis,
            "single_product": self.single_product,
            "trail_ends": self.trail_ends,
            "passed": self.passed(),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

type Object = (PathFamily, PathFamily);

/// Recolours the trails leaving the selected terminals; also reports the
/// terminal each trail ends at.
fn recolour_object(obj: &Object, n: u32, selected: &[TerminalLocation]) -> Result<(Object, Vec<TerminalLocation>)> {
    let g = TwoColouredGraph::with_height(&obj.0, &obj.1, n)?;
    let mut trails = Vec::new();
    let mut seen = BTreeSet::new();
    let mut ends = Vec::new();
    for &loc in selected {
        let t = g.trace_from_terminal(loc)?;
        ends.push(t.end().unwrap_or(loc));
        if seen.insert(t.edge_set()) {
            trails.push(t);
        }
    }
    Ok((g.recolour(&trails)?.decompose_to_families()?, ends))
}

/// Closes the objects of `s_{λ/μ} s_{σ/τ}` (blue at offset 0, green at
/// offset `t`) under recolouring from the selected `Q` points.
pub fn explore_orbit(blue: &SkewShape, green: &SkewShape, t: i64, selected: &[usize], n: u32) -> Result<OrbitResult> {
    let started = Instant::now();
    let bspec = TerminalSpec::for_shape(blue, n, 0);
    let gspec = TerminalSpec::for_shape(green, n, t);
    let initial = Quadruple {
        blue_starts: bspec.starts,
        blue_ends: bspec.ends,
        green_starts: gspec.starts,
        green_ends: gspec.ends,
    };
    let q = initial.terminal_points();
    let mut sel: Vec<usize> = selected.to_vec();
    sel.sort_unstable();
    sel.dedup();
    if let Some(&bad) = sel.iter().find(|&&i| i == 0 || i > q.len()) {
        return Err(Error::IndexOutOfRange { index: bad, count: q.len() });
    }
    let locs: Vec<TerminalLocation> = sel.iter().map(|&i| q[i - 1].location).collect();
    let base_colouring = initial.colouring(&locs);
    let flipped: Vec<Option<Colour>> = base_colouring.iter().map(|c| c.map(Colour::other)).collect();

    // Every quadruple in the orbit is a recolouring of the same terminal set.
    let cap = 1usize << q.len().min(usize::BITS as usize - 2);
    let mut objects: BTreeMap<Quadruple, Vec<Object>> = BTreeMap::new();
    let mut image: BTreeMap<Object, Object> = BTreeMap::new();
    let mut ends: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    let mut work = vec![initial.clone()];
    while let Some(quad) = work.pop() {
        if objects.contains_key(&quad) {
            continue;
        }
        if objects.len() >= cap {
            return Err(Error::OrbitDiverged(objects.len()));
        }
        let objs = quad.objects(n);
        let in_o0 = quad.colouring(&locs) == base_colouring;
        for obj in &objs {
            let (img, trail_ends) = recolour_object(obj, n, &locs)?;
            if in_o0 {
                for (&from, end) in sel.iter().zip(&trail_ends) {
                    let to = q.iter().find(|p| p.location == *end).map_or(0, |p| p.index);
                    *ends.entry(from).or_default().entry(to).or_default() += 1;
                }
            }
            let target = Quadruple::of(&img.0, &img.1);
            if !objects.contains_key(&target) {
                work.push(target);
            }
            image.insert(obj.clone(), img);
        }
        objects.insert(quad, objs);
    }

    let mut s0 = Vec::new();
    let mut s1 = Vec::new();
    let mut o0: BTreeSet<&Object> = BTreeSet::new();
    let mut o1: BTreeSet<&Object> = BTreeSet::new();
    let mut stray = false;
    for (quad, objs) in &objects {
        let c = quad.colouring(&locs);
        if c == base_colouring {
            s0.push(quad.clone());
            o0.extend(objs);
        } else if c == flipped {
            s1.push(quad.clone());
            o1.extend(objs);
        } else {
            stray = true;
        }
    }
    let empty_selection = sel.is_empty();
    let images_of = |set: &BTreeSet<&Object>| -> BTreeSet<&Object> { set.iter().map(|o| &image[*o]).collect() };
    let bijection = !stray
        && if empty_selection {
            o1.is_empty() && o0.iter().all(|o| image[*o] == **o)
        } else {
            images_of(&o0) == o1
                && images_of(&o1) == o0
                && o0.len() == o1.len()
                && o0.iter().all(|o| image[&image[*o]] == **o)
        };

    let x = Alphabet::X { nvars: n };
    let weight_sum = |set: &BTreeSet<&Object>| {
        sum(x, set.iter().map(|(b, g)| Polynomial::monomial(x, path_weight(b).mul(&path_weight(g)))))
    };
    let weights_match = empty_selection || weight_sum(&o0) == weight_sum(&o1);

    let mut schur_cache: BTreeMap<SkewShape, Polynomial> = BTreeMap::new();
    let mut schur_sum = |quads: &[Quadruple]| -> Result<Polynomial> {
        let mut acc = Polynomial::zero(x);
        for qd in quads {
            let (b, g) = qd.shapes(n);
            let (Some(b), Some(g)) = (b, g) else { continue };
            let mut get = |s: SkewShape| -> Result<Polynomial> {
                if let Some(p) = schur_cache.get(&s) {
                    return Ok(p.clone());
                }
                let p = schur_poly(&s, n, SchurMethod::Tableaux)?;
                schur_cache.insert(s, p.clone());
                Ok(p)
            };
            acc = &acc + &(&get(b)? * &get(g)?);
        }
        Ok(acc)
    };
    let schur_sums_match = empty_selection || schur_sum(&s0)? == schur_sum(&s1)?;

    let parity_of = |c: MatchingColour| -> BTreeSet<Parity> {
        q.iter().filter(|p| p.matching_colour == c).map(|p| p.parity).collect()
    };
    let parity_hypothesis = parity_of(MatchingColour::Black).len() <= 1 && parity_of(MatchingColour::White).len() <= 1;
    // The reduction also needs the selected points to be of one colour, so no
    // trail joins two of them.
    let one_colour = sel.iter().map(|&i| q[i - 1].matching_colour).collect::<BTreeSet<_>>().len() <= 1;
    let single_product = (parity_hypothesis && one_colour).then(|| s0 == vec![initial.clone()]);

    let per_quadruple = objects.iter().map(|(k, v)| (k.clone(), v.len())).collect();
    Ok(OrbitResult {
        terminals: q,
        selected: sel,
        initial,
        s0,
        s1,
        o0_size: o0.len(),
        o1_size: o1.len(),
        per_quadruple,
        bijection,
        weights_match,
        schur_sums_match,
        parity_hypothesis,
        single_product,
        trail_ends: ends,
        n,
        elapsed_ms: started.elapsed().as_millis(),
    })
}
