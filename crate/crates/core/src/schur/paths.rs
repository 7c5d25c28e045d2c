use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tableau::{enumerate_ssyt, Tableau};
use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::polyring::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, s: Step) -> Point {
        match s {
            Step::E => Point::new(self.x + 1, self.y),
            Step::N => Point::new(self.x, self.y + 1),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { what: "point", input: s.to_string(), reason: reason.into() };
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| err("expected (x,y)"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| err("expected (x,y)"))?;
        let x = a.trim().parse().map_err(|_| err("bad x coordinate"))?;
        let y = b.trim().parse().map_err(|_| err("bad y coordinate"))?;
        Ok(Point::new(x, y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    E,
    N,
}

/// A monotone lattice path stored as its start and step word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            p = p.step(s);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, &s| p.step(s))
    }

    /// `(tail, step)` for every edge, in path order.
    pub fn edges(&self) -> Vec<(Point, Step)> {
        let mut p = self.start;
        self.steps
            .iter()
            .map(|&s| {
                let e = (p, s);
                p = p.step(s);
                e
            })
            .collect()
    }

    /// `∏ x_k^{n(P,k)}` where `n(P,k)` counts east steps at height `k`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_pairs(self.edges().into_iter().filter(|&(_, s)| s == Step::E).map(|(p, _)| (p.y as u32, 1)))
    }
}

impl fmt::Display for LatticePath {
    /// `(x,y):ENN...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: String = self.steps.iter().map(|s| if *s == Step::E { 'E' } else { 'N' }).collect();
        write!(f, "{}:{}", self.start, word)
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse { what: "lattice path", input: s.to_string(), reason };
        let (pt, word) = s.trim().rsplit_once(':').ok_or_else(|| err("expected (x,y):STEPS".into()))?;
        let start: Point = pt.parse()?;
        let steps = word
            .trim()
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                other => Err(err(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, steps })
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered tuple of lattice paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Checks that no two paths share a lattice point.
    pub fn new(paths: Vec<LatticePath>) -> Result<Self> {
        let f = PathFamily { paths };
        if let Some(p) = f.first_shared_vertex() {
            return Err(Error::MalformedFamily(format!("paths meet at {p}")));
        }
        Ok(f)
    }

    pub fn empty() -> Self {
        PathFamily { paths: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn first_shared_vertex(&self) -> Option<Point> {
        let mut seen = HashSet::new();
        for path in &self.paths {
            for v in path.vertices() {
                if !seen.insert(v) {
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn is_nonintersecting(&self) -> bool {
        self.first_shared_vertex().is_none()
    }

    pub fn starts(&self) -> Vec<Point> {
        self.paths.iter().map(|p| p.start).collect()
    }

    pub fn ends(&self) -> Vec<Point> {
        self.paths.iter().map(LatticePath::end).collect()
    }

    pub fn weight(&self) -> Monomial {
        path_weight(self)
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn path_weight(f: &PathFamily) -> Monomial {
    f.paths.iter().fold(Monomial::one(), |acc, p| acc.mul(&p.weight()))
}

/// Starting points on `y = 1` and end points on `y = N`, plus the horizontal
/// offset applied to the whole family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalSpec {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub n: u32,
    pub offset: i64,
}

impl TerminalSpec {
    pub fn new(starts: Vec<Point>, ends: Vec<Point>, n: u32, offset: i64) -> Result<Self> {
        let bad = |m: &str| Err(Error::MalformedFamily(m.into()));
        if starts.len() != ends.len() {
            return bad("start and end counts differ");
        }
        if starts.iter().any(|p| p.y != 1) || ends.iter().any(|p| p.y != n as i64) {
            return bad("starts must lie on y=1 and ends on y=N");
        }
        if starts.windows(2).any(|w| w[0].x <= w[1].x) || ends.windows(2).any(|w| w[0].x <= w[1].x) {
            return bad("terminal x-coordinates must strictly decrease with the path index");
        }
        Ok(TerminalSpec { starts, ends, n, offset })
    }

    /// Path `i` runs from `(μ_i - i + t, 1)` to `(λ_i - i + t, N)`.
    pub fn for_shape(shape: &SkewShape, n: u32, offset: i64) -> Self {
        let (starts, ends) = (1..=shape.rows())
            .map(|i| {
                let base = offset - i as i64;
                (
                    Point::new(shape.inner().part(i - 1) as i64 + base, 1),
                    Point::new(shape.outer().part(i - 1) as i64 + base, n as i64),
                )
            })
            .unzip();
        TerminalSpec { starts, ends, n, offset }
    }

    /// The skew shape whose families have these terminals, normalised so the
    /// last inner part is zero. `None` when no family can exist.
    pub fn shape(&self) -> Option<SkewShape> {
        let r = self.starts.len();
        if r == 0 {
            return Some(SkewShape::straight(Partition::empty()));
        }
        let t = self.starts[r - 1].x + r as i64;
        let inner: Vec<i64> = (1..=r).map(|i| self.starts[i - 1].x + i as i64 - t).collect();
        let outer: Vec<i64> = (1..=r).map(|i| self.ends[i - 1].x + i as i64 - t).collect();
        let outer = Partition::from_signed(&outer).ok()?;
        let inner = Partition::from_signed(&inner).ok()?;
        SkewShape::new(outer, inner).ok()
    }

    /// Offset after the normalisation used by [`TerminalSpec::shape`].
    fn normal_offset(&self) -> i64 {
        let r = self.starts.len();
        if r == 0 { self.offset } else { self.starts[r - 1].x + r as i64 }
    }
}

/// Path `i` starts at `(μ_i - i + t0, 1)` and takes its east steps at the
/// heights given by the entries of row `i`.
pub fn tableau_to_paths(t: &Tableau, t0: i64) -> PathFamily {
    let shape = t.shape();
    let n = t.n();
    let paths = t
        .rows()
        .iter()
        .enumerate()
        .map(|(idx, row)| {
            let i = idx as i64 + 1;
            let start = Point::new(shape.inner().part(idx) as i64 - i + t0, 1);
            let mut steps = Vec::new();
            for k in 1..=n {
                steps.extend(row.iter().filter(|&&v| v == k).map(|_| Step::E));
                if k < n {
                    steps.push(Step::N);
                }
            }
            LatticePath { start, steps }
        })
        .collect();
    PathFamily { paths }
}

/// Inverse of [`tableau_to_paths`] for the same offset and height.
pub fn paths_to_tableau(f: &PathFamily, t0: i64, n: u32) -> Result<Tableau> {
    if let Some(p) = f.first_shared_vertex() {
        return Err(Error::MalformedFamily(format!("paths meet at {p}")));
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (idx, path) in f.paths.iter().enumerate() {
        let i = idx as i64 + 1;
        let end = path.end();
        if path.start.y != 1 || end.y != n as i64 {
            return Err(Error::MalformedFamily(format!("path {path} does not run from y=1 to y={n}")));
        }
        inner.push(path.start.x + i - t0);
        outer.push(end.x + i - t0);
        rows.push(
            path.edges().into_iter().filter(|&(_, s)| s == Step::E).map(|(p, _)| p.y as u32).collect(),
        );
    }
    let shape = SkewShape::new(Partition::from_signed(&outer)?, Partition::from_signed(&inner)?)
        .map_err(|e| Error::MalformedFamily(e.to_string()))?;
    Tableau::new(shape, rows, n).map_err(|e| Error::MalformedFamily(e.to_string()))
}

/// Every nonintersecting family with the given terminals, produced through
/// the tableau correspondence.
pub fn enumerate_families(spec: &TerminalSpec) -> Box<dyn Iterator<Item = PathFamily>> {
    let Some(shape) = spec.shape() else {
        return Box::new(std::iter::empty());
    };
    let t0 = spec.normal_offset();
    Box::new(enumerate_ssyt(&shape, spec.n).map(move |t| tableau_to_paths(&t, t0)))
}
