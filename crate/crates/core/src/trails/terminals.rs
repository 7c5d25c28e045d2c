use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Colour, Side, TerminalLocation, TwoColouredGraph};
use crate::error::{Error, Result};
use crate::schur::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchingColour {
    Black,
    White,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A point `Q_i` of the terminal sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TerminalPoint {
    /// 1-based position in the sequence.
    pub index: usize,
    pub location: TerminalLocation,
    pub path_colour: Colour,
    pub matching_colour: MatchingColour,
    pub parity: Parity,
}

/// The terminals not shared by both colours: path ends from right to left,
/// then path starts from left to right. On the top line blue is black and
/// green is white; on the bottom line the colouring is reversed.
pub fn terminal_points(g: &TwoColouredGraph) -> Vec<TerminalPoint> {
    terminal_sequence(
        &g.terminals(Colour::Blue, Side::Top),
        &g.terminals(Colour::Green, Side::Top),
        &g.terminals(Colour::Blue, Side::Bottom),
        &g.terminals(Colour::Green, Side::Bottom),
    )
}

/// [`terminal_points`] computed from terminal positions alone.
pub fn terminal_sequence(
    blue_ends: &[Point],
    green_ends: &[Point],
    blue_starts: &[Point],
    green_starts: &[Point],
) -> Vec<TerminalPoint> {
    let lonely = |side: Side, blue: &[Point], green: &[Point]| -> Vec<(TerminalLocation, Colour)> {
        let blue: BTreeSet<_> = blue.iter().copied().collect();
        let green: BTreeSet<_> = green.iter().copied().collect();
        let mut v: Vec<_> = blue
            .difference(&green)
            .map(|&p| (p, Colour::Blue))
            .chain(green.difference(&blue).map(|&p| (p, Colour::Green)))
            .map(|(point, c)| (TerminalLocation { point, side }, c))
            .collect();
        v.sort_by_key(|(t, _)| t.point.x);
        v
    };
    let mut tops = lonely(Side::Top, blue_ends, green_ends);
    tops.reverse();
    let bottoms = lonely(Side::Bottom, blue_starts, green_starts);
    tops.into_iter()
        .chain(bottoms)
        .enumerate()
        .map(|(k, (location, path_colour))| {
            let black = (location.side == Side::Top) == (path_colour == Colour::Blue);
            TerminalPoint {
                index: k + 1,
                location,
                path_colour,
                matching_colour: if black { MatchingColour::Black } else { MatchingColour::White },
                parity: if k % 2 == 0 { Parity::Odd } else { Parity::Even },
            }
        })
        .collect()
}

/// A set of disjoint index pairs `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct NoncrossingMatching {
    pub pairs: Vec<(usize, usize)>,
}

impl NoncrossingMatching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        for p in &mut pairs {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        NoncrossingMatching { pairs }
    }

    /// No `a < c < b < d` with `(a,b)` and `(c,d)` both present.
    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// Every point in `1..=points` covered exactly once.
    pub fn is_perfect(&self, points: usize) -> bool {
        let mut seen = vec![false; points + 1];
        for &(a, b) in &self.pairs {
            for i in [a, b] {
                if i == 0 || i > points || seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn pairs_odd_with_even(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| (a + b) % 2 == 1)
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| match () {
            _ if a == i => Some(b),
            _ if b == i => Some(a),
            _ => None,
        })
    }
}

/// The matching of the terminal sequence induced by the path-like trails.
pub fn terminal_matching(g: &TwoColouredGraph) -> Result<NoncrossingMatching> {
    let q = terminal_points(g);
    let mut pairs = Vec::new();
    for p in &q {
        let t = g.trace_from_terminal(p.location)?;
        let end = t.end().ok_or_else(|| Error::InvalidGraph(format!("trail from {} is closed", p.location)))?;
        let other = q
            .iter()
            .find(|r| r.location == end)
            .ok_or_else(|| Error::InvalidGraph(format!("trail from {} stops at {}, not a terminal", p.location, end)))?;
        pairs.push((p.index, other.index));
    }
    Ok(NoncrossingMatching::new(pairs))
}

/// All perfect noncrossing matchings of `points` cyclically arranged points.
pub fn enumerate_noncrossing_matchings(points: usize) -> Result<Vec<NoncrossingMatching>> {
    if points % 2 == 1 {
        return Err(Error::InvalidParameter(format!("odd point count {points}")));
    }
    fn go(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        // Matchings of lo..=hi: lo pairs with some m, splitting the rest.
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for m in (lo + 1..=hi).step_by(2) {
            for inside in go(lo + 1, m - 1) {
                for outside in go(m + 1, hi) {
                    let mut v = vec![(lo, m)];
                    v.extend(inside.iter().copied());
                    v.extend(outside.iter().copied());
                    out.push(v);
                }
            }
        }
        out
    }
    Ok(go(1, points).into_iter().map(NoncrossingMatching::new).collect())
}

pub fn count_noncrossing_matchings(points: usize) -> Result<u64> {
    if points % 2 == 1 {
        return Err(Error::InvalidParameter(format!("odd point count {points}")));
    }
    // Catalan recurrence C_{m+1} = sum C_i C_{m-i}.
    let n = points / 2;
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    Ok(c[n])
}
