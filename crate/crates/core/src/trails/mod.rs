//! Two-coloured superpositions of path families, changing trails, and
//! recolouring along them.
//!
//! Every path carries two extra north "stub" edges, one entering its start
//! and one leaving its end. A trail therefore always finishes on the free end
//! of a stub, and stopping at an intersection without a possible switch
//! becomes walking into the stub of that terminal. Stubs are never reported.

mod audit;
mod svg;
mod terminals;

pub use audit::{check_graph, GraphAudit};
pub use svg::render_svg;
pub use terminals::{
    count_noncrossing_matchings, enumerate_noncrossing_matchings, terminal_matching, terminal_points,
    terminal_sequence, MatchingColour, NoncrossingMatching, Parity, TerminalPoint,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schur::{LatticePath, PathFamily, Point, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Blue,
    Green,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Blue => Colour::Green,
            Colour::Green => Colour::Blue,
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Blue => "blue",
            Colour::Green => "green",
        })
    }
}

/// `Forward` is right-upwards, the direction of the paths; `Backward` is
/// left-downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Backward,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Forward => "forward",
            Orientation::Backward => "backward",
        })
    }
}

/// Top terminals are path ends, bottom terminals are path starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
}

/// A path end (`Top`) or path start (`Bottom`) at a lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TerminalLocation {
    pub point: Point,
    pub side: Side,
}

impl fmt::Display for TerminalLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.point)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Edge {
    colour: Colour,
    tail: Point,
    step: Step,
    stub: bool,
}

impl Edge {
    fn head(&self) -> Point {
        self.tail.step(self.step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TrailStep {
    pub tail: Point,
    pub step: Step,
    pub colour: Colour,
    pub orientation: Orientation,
}

impl TrailStep {
    pub fn head(&self) -> Point {
        self.tail.step(self.step)
    }

    /// Vertex the step leaves from, given its orientation.
    pub fn from(&self) -> Point {
        match self.orientation {
            Orientation::Forward => self.tail,
            Orientation::Backward => self.head(),
        }
    }

    pub fn to(&self) -> Point {
        match self.orientation {
            Orientation::Forward => self.head(),
            Orientation::Backward => self.tail,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrailKind {
    PathLike,
    CycleLike,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangingTrail {
    pub kind: TrailKind,
    /// Steps in traversal order, stubs removed.
    pub steps: Vec<TrailStep>,
    /// For path-like trails, the terminals at either end.
    pub endpoints: Option<(TerminalLocation, TerminalLocation)>,
    edge_ids: Vec<usize>,
}

impl ChangingTrail {
    /// Edge-instance ids including stubs, sorted.
    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.edge_ids.iter().copied().collect()
    }

    pub fn start(&self) -> Option<TerminalLocation> {
        self.endpoints.map(|(a, _)| a)
    }

    pub fn end(&self) -> Option<TerminalLocation> {
        self.endpoints.map(|(_, b)| b)
    }

    /// Vertex sequence of the trail, for drawing.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self.steps.first().map(|s| vec![s.from()]).unwrap_or_default();
        out.extend(self.steps.iter().map(TrailStep::to));
        if out.is_empty() {
            if let Some((a, _)) = self.endpoints {
                out.push(a.point);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let point = |t: Option<TerminalLocation>| t.map(|t| t.point.to_string());
        serde_json::json!({
            "kind": self.kind,
            "start": point(self.start()),
            "end": point(self.end()),
            "steps": self.steps.iter().map(|s| serde_json::json!([
                format!("{}->{}", s.tail, s.head()),
                s.colour,
                s.orientation,
            ])).collect::<Vec<_>>(),
        })
    }
}

type State = (usize, Orientation);

/// The superposition of a blue and a green nonintersecting family, all paths
/// running from `y = bottom` to `y = top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColouredGraph {
    bottom: i64,
    top: i64,
    edges: Vec<Edge>,
    outgoing: [BTreeMap<Point, usize>; 2],
    incoming: [BTreeMap<Point, usize>; 2],
}

impl TwoColouredGraph {
    /// Infers the bottom and top lines from the paths; an empty graph uses `y = 1`.
    pub fn new(blue: &PathFamily, green: &PathFamily) -> Result<Self> {
        let all: Vec<&LatticePath> = blue.paths.iter().chain(&green.paths).collect();
        let (bottom, top) = match all.first() {
            Some(p) => (p.start.y, p.end().y),
            None => (1, 1),
        };
        TwoColouredGraph::with_bounds(blue, green, bottom, top)
    }

    /// Paths of height `N`, i.e. from `y = 1` to `y = N`.
    pub fn with_height(blue: &PathFamily, green: &PathFamily, n: u32) -> Result<Self> {
        TwoColouredGraph::with_bounds(blue, green, 1, n as i64)
    }

    pub fn with_bounds(blue: &PathFamily, green: &PathFamily, bottom: i64, top: i64) -> Result<Self> {
        let mut edges = Vec::new();
        for (colour, fam) in [(Colour::Blue, blue), (Colour::Green, green)] {
            if let Some(p) = fam.first_shared_vertex() {
                return Err(Error::InvalidGraph(format!("{colour} family meets itself at {p}")));
            }
            for path in &fam.paths {
                if path.start.y != bottom || path.end().y != top {
                    return Err(Error::InvalidGraph(format!("path {path} does not run from y={bottom} to y={top}")));
                }
                let below = Point::new(path.start.x, bottom - 1);
                edges.push(Edge { colour, tail: below, step: Step::N, stub: true });
                edges.extend(path.edges().into_iter().map(|(tail, step)| Edge { colour, tail, step, stub: false }));
                edges.push(Edge { colour, tail: path.end(), step: Step::N, stub: true });
            }
        }
        TwoColouredGraph::from_edges(bottom, top, edges)
    }

    fn from_edges(bottom: i64, top: i64, edges: Vec<Edge>) -> Result<Self> {
        let mut outgoing = [BTreeMap::new(), BTreeMap::new()];
        let mut incoming = [BTreeMap::new(), BTreeMap::new()];
        for (id, e) in edges.iter().enumerate() {
            let c = e.colour.idx();
            if outgoing[c].insert(e.tail, id).is_some() {
                return Err(Error::InvalidGraph(format!("two {} edges leave {}", e.colour, e.tail)));
            }
            if incoming[c].insert(e.head(), id).is_some() {
                return Err(Error::InvalidGraph(format!("two {} edges enter {}", e.colour, e.head())));
            }
        }
        Ok(TwoColouredGraph { bottom, top, edges, outgoing, incoming })
    }

    pub fn bottom(&self) -> i64 {
        self.bottom
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Number of non-stub edge instances.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|e| !e.stub).count()
    }

    fn touches(&self, c: Colour, v: Point) -> bool {
        self.outgoing[c.idx()].contains_key(&v) || self.incoming[c.idx()].contains_key(&v)
    }

    /// A vertex met by edges of both colours.
    pub fn is_intersection(&self, v: Point) -> bool {
        self.touches(Colour::Blue, v) && self.touches(Colour::Green, v)
    }

    /// Non-stub edges of one colour as `(tail, step)`, sorted.
    pub fn coloured_edges(&self, c: Colour) -> Vec<(Point, Step)> {
        let mut v: Vec<(Point, Step)> =
            self.edges.iter().filter(|e| e.colour == c && !e.stub).map(|e| (e.tail, e.step)).collect();
        v.sort();
        v
    }

    /// Terminals of one colour on one side, by x-coordinate.
    pub fn terminals(&self, c: Colour, side: Side) -> Vec<Point> {
        let mut v: Vec<Point> = self
            .edges
            .iter()
            .filter(|e| e.stub && e.colour == c)
            .filter_map(|e| stub_terminal(self, e))
            .filter(|t| t.side == side)
            .map(|t| t.point)
            .collect();
        v.sort();
        v
    }

    fn arrival(&self, (id, o): State) -> Point {
        let e = &self.edges[id];
        match o {
            Orientation::Forward => e.head(),
            Orientation::Backward => e.tail,
        }
    }

    fn departure(&self, (id, o): State) -> Point {
        self.arrival((id, o.flip()))
    }

    /// The local rule: at an intersection switch colour and orientation, away
    /// from one keep both. `None` means the trail stops.
    fn next(&self, state: State) -> Option<State> {
        let (id, o) = state;
        let v = self.arrival(state);
        let c = self.edges[id].colour;
        let (colour, orient) = if self.is_intersection(v) { (c.other(), o.flip()) } else { (c, o) };
        let table = match orient {
            Orientation::Forward => &self.outgoing,
            Orientation::Backward => &self.incoming,
        };
        table[colour.idx()].get(&v).map(|&e| (e, orient))
    }

    fn trace_state(&self, start: State) -> ChangingTrail {
        let mut forward = vec![start];
        let mut cur = start;
        while let Some(nx) = self.next(cur) {
            if nx == start {
                return self.finish(TrailKind::CycleLike, forward);
            }
            forward.push(nx);
            cur = nx;
        }
        let mut backward = Vec::new();
        let mut cur = (start.0, start.1.flip());
        while let Some(nx) = self.next(cur) {
            backward.push((nx.0, nx.1.flip()));
            cur = nx;
        }
        backward.reverse();
        backward.extend(forward);
        self.finish(TrailKind::PathLike, backward)
    }

    fn finish(&self, kind: TrailKind, states: Vec<State>) -> ChangingTrail {
        let endpoints = match kind {
            TrailKind::CycleLike => None,
            TrailKind::PathLike => {
                let first = *states.first().expect("a trail has at least one edge");
                let last = *states.last().expect("a trail has at least one edge");
                Some((self.end_terminal(first, true), self.end_terminal(last, false)))
            }
        };
        let steps = states
            .iter()
            .filter(|&&(id, _)| !self.edges[id].stub)
            .map(|&(id, orientation)| {
                let e = &self.edges[id];
                TrailStep { tail: e.tail, step: e.step, colour: e.colour, orientation }
            })
            .collect();
        ChangingTrail { kind, steps, endpoints, edge_ids: states.iter().map(|&(id, _)| id).collect() }
    }

    /// The terminal a path-like trail starts or stops at: the attached end of
    /// its boundary stub.
    fn end_terminal(&self, state: State, at_start: bool) -> TerminalLocation {
        let e = &self.edges[state.0];
        if e.stub {
            if let Some(t) = stub_terminal(self, e) {
                return t;
            }
        }
        let point = if at_start { self.departure(state) } else { self.arrival(state) };
        let side = if point.y <= self.bottom { Side::Bottom } else { Side::Top };
        TerminalLocation { point, side }
    }

    fn stub_at(&self, loc: TerminalLocation) -> Option<State> {
        let candidates = [Colour::Green, Colour::Blue];
        candidates.iter().find_map(|&c| match loc.side {
            Side::Bottom => self.incoming[c.idx()]
                .get(&loc.point)
                .filter(|&&id| self.edges[id].stub)
                .map(|&id| (id, Orientation::Forward)),
            Side::Top => self.outgoing[c.idx()]
                .get(&loc.point)
                .filter(|&&id| self.edges[id].stub)
                .map(|&id| (id, Orientation::Backward)),
        })
    }

    /// The changing trail that begins at a path terminal.
    pub fn trace_from_terminal(&self, loc: TerminalLocation) -> Result<ChangingTrail> {
        let state = self.stub_at(loc).ok_or_else(|| Error::NoTrail(loc.to_string()))?;
        Ok(self.trace_state(state))
    }

    /// Like [`TwoColouredGraph::trace_from_terminal`], preferring a path end
    /// when the point carries both kinds of terminal.
    pub fn trace_from_point(&self, p: Point) -> Result<ChangingTrail> {
        let top = TerminalLocation { point: p, side: Side::Top };
        let bottom = TerminalLocation { point: p, side: Side::Bottom };
        self.trace_from_terminal(top).or_else(|_| self.trace_from_terminal(bottom))
    }

    /// The unique changing trail through a given edge instance traversed in
    /// the given orientation.
    pub fn trace_edge(&self, tail: Point, step: Step, colour: Colour, orientation: Orientation) -> Result<ChangingTrail> {
        let id = self.outgoing[colour.idx()]
            .get(&tail)
            .copied()
            .filter(|&id| self.edges[id].step == step && !self.edges[id].stub)
            .ok_or_else(|| Error::NoTrail(format!("{colour} edge {tail}{step:?}")))?;
        Ok(self.trace_state((id, orientation)))
    }

    /// All changing trails; every edge instance lies on exactly one.
    pub fn all_trails(&self) -> Vec<ChangingTrail> {
        let mut seen = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for id in 0..self.edges.len() {
            if seen[id] {
                continue;
            }
            let t = self.trace_state((id, Orientation::Forward));
            for &e in &t.edge_ids {
                seen[e] = true;
            }
            out.push(t);
        }
        out
    }

    /// Every trail traced from every edge instance in both orientations, for
    /// checking that the trail through an edge does not depend on the start.
    pub(crate) fn trails_from_every_state(&self) -> impl Iterator<Item = (usize, ChangingTrail)> + '_ {
        (0..self.edges.len()).flat_map(move |id| {
            [Orientation::Forward, Orientation::Backward].into_iter().map(move |o| (id, self.trace_state((id, o))))
        })
    }

    pub(crate) fn edge_slots(&self) -> usize {
        self.edges.len()
    }

    /// Swaps blue and green along the given pairwise edge-disjoint trails.
    pub fn recolour(&self, trails: &[ChangingTrail]) -> Result<TwoColouredGraph> {
        let mut flip = vec![false; self.edges.len()];
        for t in trails {
            for &id in &t.edge_ids {
                if id >= flip.len() {
                    return Err(Error::OverlappingTrails(format!("edge {id} not in this graph")));
                }
                if flip[id] {
                    let e = &self.edges[id];
                    return Err(Error::OverlappingTrails(format!("{} edge at {}", e.colour, e.tail)));
                }
                flip[id] = true;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&flip)
            .map(|(e, &f)| if f { Edge { colour: e.colour.other(), ..*e } } else { *e })
            .collect();
        TwoColouredGraph::from_edges(self.bottom, self.top, edges)
    }

    /// Reads the blue and green families back off the edges. Paths are
    /// ordered by decreasing start coordinate.
    pub fn decompose_to_families(&self) -> Result<(PathFamily, PathFamily)> {
        let one = |c: Colour| -> Result<PathFamily> {
            let mut paths = Vec::new();
            let stub_tails: Vec<Point> = self
                .edges
                .iter()
                .filter(|e| e.colour == c && e.stub && e.tail.y == self.bottom - 1)
                .map(|e| e.tail)
                .collect();
            for below in stub_tails {
                let start = Point::new(below.x, self.bottom);
                let mut steps = Vec::new();
                let mut v = start;
                loop {
                    let &id = self.outgoing[c.idx()]
                        .get(&v)
                        .ok_or_else(|| Error::InvalidGraph(format!("{c} path breaks off at {v}")))?;
                    let e = &self.edges[id];
                    if e.stub {
                        break;
                    }
                    steps.push(e.step);
                    v = e.head();
                }
                if v.y != self.top {
                    return Err(Error::InvalidGraph(format!("{c} path from {start} ends at {v}")));
                }
                paths.push(LatticePath::new(start, steps));
            }
            let used: usize = paths.iter().map(|p| p.steps.len()).sum();
            let owned = self.edges.iter().filter(|e| e.colour == c && !e.stub).count();
            if used != owned {
                return Err(Error::InvalidGraph(format!("{c} edges do not decompose into paths")));
            }
            paths.sort_by_key(|p| std::cmp::Reverse(p.start.x));
            PathFamily::new(paths).map_err(|e| Error::InvalidGraph(format!("{c}: {e}")))
        };
        Ok((one(Colour::Blue)?, one(Colour::Green)?))
    }
}

fn stub_terminal(g: &TwoColouredGraph, e: &Edge) -> Option<TerminalLocation> {
    if !e.stub {
        return None;
    }
    if e.tail.y == g.bottom - 1 {
        Some(TerminalLocation { point: e.head(), side: Side::Bottom })
    } else {
        Some(TerminalLocation { point: e.tail, side: Side::Top })
    }
}

/// Graph description `{"blue": [paths], "green": [paths]}`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphConfig {
    #[serde(default)]
    pub blue: Vec<LatticePath>,
    #[serde(default)]
    pub green: Vec<LatticePath>,
}

impl GraphConfig {
    pub fn build(&self) -> Result<TwoColouredGraph> {
        let blue = PathFamily { paths: self.blue.clone() };
        let green = PathFamily { paths: self.green.clone() };
        TwoColouredGraph::new(&blue, &green)
    }
}
