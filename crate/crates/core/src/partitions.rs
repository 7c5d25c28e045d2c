//! Partitions, skew shapes, and the corner encoding of a Ferrers board.
//!
//! The corner encoding records the distinct nonzero parts `x_1 > .. > x_n`
//! together with `y_i`, the number of parts that are at least `x_i`. Border
//! strips and columns are added or removed by shifting these coordinates,
//! which is how the strip operations `pi`, `mu` and `omega` are defined here.
//! All corner indices are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative parts.
///
/// Trailing zeros are kept: `(2,1)` and `(2,1,0)` are different shapes
/// because the number of rows decides where lattice paths start and end.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Accepts signed parts, rejecting negative ones.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts.to_vec()));
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart(parts.to_vec()));
        }
        Ok(Partition { parts: parts.iter().map(|&p| p as usize).collect() })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `[c^r]`: `r` rows of length `c`.
    pub fn rectangle(c: usize, r: usize) -> Self {
        Partition { parts: vec![c; r] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows, counting zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The same partition with zero parts removed.
    pub fn trimmed(&self) -> Partition {
        Partition { parts: self.parts.iter().copied().filter(|&p| p > 0).collect() }
    }

    /// Pads with zero parts up to `len` rows.
    pub fn padded(&self, len: usize) -> Partition {
        let mut parts = self.parts.clone();
        if parts.len() < len {
            parts.resize(len, 0);
        }
        Partition { parts }
    }

    /// Signed copy of the parts, convenient for index arithmetic.
    pub fn signed(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }

    /// All partitions of `n` with at most `max_len` nonzero parts, in
    /// reverse lexicographic order, without trailing zeros.
    pub fn all_of_size(n: usize, max_len: usize) -> Vec<Partition> {
        fn go(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rem)).rev() {
                cur.push(p);
                go(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::from_signed(&parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

fn parse_signed_list(s: &str, what: &'static str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                what,
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// Parses a comma-separated list of integers; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    parse_signed_list(s, "integer list")
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::from_signed(&parse_signed_list(s, "partition")?)
    }
}

/// A skew shape `outer/inner`; `inner` is padded with zeros to the length of `outer`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() && inner.parts()[outer.len()..].iter().any(|&p| p > 0) {
            return Err(Error::InnerExceedsOuter {
                outer: outer.parts.clone(),
                inner: inner.parts.clone(),
            });
        }
        let mut inner_parts = inner.parts;
        inner_parts.resize(outer.len(), 0);
        if inner_parts.iter().zip(outer.parts()).any(|(i, o)| i > o) {
            return Err(Error::InnerExceedsOuter { outer: outer.parts.clone(), inner: inner_parts });
        }
        Ok(SkewShape { outer, inner: Partition { parts: inner_parts } })
    }

    pub fn straight(outer: Partition) -> Self {
        let inner = Partition { parts: vec![0; outer.len()] };
        SkewShape { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.parts.iter().all(|&p| p == 0)
    }

    /// Number of cells in row `i` (0-based).
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Corner coordinates `(x_i, y_i)`; outside corner `c_i` sits at `(x_i, -y_i)`.
///
/// Genuine partitions give `x` strictly decreasing and `y` strictly
/// increasing. After strip operations the monotonicity may become weak; such
/// encodings still describe a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CornerEncoding {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl CornerEncoding {
    pub fn new(x: Vec<i64>, y: Vec<i64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::InvalidEncoding(format!(
                "x has {} entries but y has {}",
                x.len(),
                y.len()
            )));
        }
        Ok(CornerEncoding { x, y })
    }

    /// Corner count `n`.
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// `x_i` with `x_{n+1} = 0`.
    fn x_at(&self, i: usize) -> i64 {
        if i > self.len() { 0 } else { self.x[i - 1] }
    }

    /// `y_i` with `y_0 = 0`.
    fn y_at(&self, i: usize) -> i64 {
        if i == 0 { 0 } else { self.y[i - 1] }
    }

    /// Size of the strip between outside corner `i` and inside corner `j`:
    /// `x_i - x_{j+1} + y_j - y_i`, the cell count π^i_j adds and μ^i_j removes.
    pub fn strip_size(&self, i: usize, j: usize) -> Result<i64> {
        self.check_pair(i, j)?;
        Ok(self.x_at(i) - self.x_at(j + 1) + self.y_at(j) - self.y_at(i))
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        let n = self.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, count: n });
        }
        if j < i || j > n {
            return Err(Error::IndexOutOfRange { index: j, count: n });
        }
        Ok(())
    }

    /// Weak monotonicity plus `y_1 >= 0` and `x_n >= 0`.
    pub fn check_weak(&self) -> Result<()> {
        if self.x.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidEncoding(format!("x not weakly decreasing: {:?}", self.x)));
        }
        if self.y.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidEncoding(format!("y not weakly increasing: {:?}", self.y)));
        }
        if self.y.first().is_some_and(|&y| y < 0) {
            return Err(Error::InvalidEncoding(format!("y_1 negative: {:?}", self.y)));
        }
        if self.x.last().is_some_and(|&x| x < 0) {
            return Err(Error::InvalidEncoding(format!("x_n negative: {:?}", self.x)));
        }
        Ok(())
    }

    fn shifted(&self, i: usize, j: usize, delta: i64) -> CornerEncoding {
        let mut out = self.clone();
        for t in i + 1..=j {
            out.x[t - 1] += delta;
        }
        for t in i..=j {
            out.y[t - 1] += delta;
        }
        out
    }
}

/// Encodes the nonzero parts of `p` by their corners.
pub fn corner_encoding(p: &Partition) -> CornerEncoding {
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (row, &part) in p.parts().iter().enumerate() {
        if part == 0 {
            break;
        }
        let count = row as i64 + 1;
        if x.last() == Some(&(part as i64)) {
            *y.last_mut().unwrap() = count;
        } else {
            x.push(part as i64);
            y.push(count);
        }
    }
    CornerEncoding { x, y }
}

/// Rebuilds `(x_1^{y_1-y_0}, x_2^{y_2-y_1}, ..)`, dropping zero parts.
pub fn partition_from_corners(e: &CornerEncoding) -> Result<Partition> {
    if e.x.len() != e.y.len() {
        return Err(Error::InvalidEncoding("x and y lengths differ".into()));
    }
    let mut parts = Vec::new();
    let mut prev_y = 0;
    for (&x, &y) in e.x.iter().zip(&e.y) {
        if y < prev_y {
            return Err(Error::InvalidEncoding(format!("y decreases: {:?}", e.y)));
        }
        if x < 0 {
            return Err(Error::InvalidEncoding(format!("negative x: {:?}", e.x)));
        }
        if x > 0 {
            parts.extend(std::iter::repeat_n(x as usize, (y - prev_y) as usize));
        }
        prev_y = y;
    }
    Partition::new(parts)
        .map_err(|_| Error::InvalidEncoding(format!("x not weakly decreasing: {:?}", e.x)))
}

/// `pi^i_j`: adds 1 to `x_{i+1}, .., x_j` and `y_i, .., y_j`.
pub fn apply_pi(e: &CornerEncoding, i: usize, j: usize) -> Result<CornerEncoding> {
    e.check_pair(i, j)?;
    let out = e.shifted(i, j, 1);
    out.check_weak()?;
    Ok(out)
}

/// `mu^i_j`: subtracts 1 from `x_{i+1}, .., x_j` and `y_i, .., y_j`.
pub fn apply_mu(e: &CornerEncoding, i: usize, j: usize) -> Result<CornerEncoding> {
    e.check_pair(i, j)?;
    let out = e.shifted(i, j, -1);
    out.check_weak().map_err(|err| Error::NotRemovable { i, j, reason: err.to_string() })?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripDirection {
    /// `pi`
    Add,
    /// `mu`
    Remove,
}

/// Nested strips `(i_1,j_1), .., (i_m,j_m)` with `i_1 < .. < i_m <= j_m < .. < j_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BorderStripSpec {
    pairs: Vec<(usize, usize)>,
    direction: StripDirection,
}

impl BorderStripSpec {
    pub fn new(pairs: Vec<(usize, usize)>, direction: StripDirection) -> Result<Self> {
        let nested = pairs.windows(2).all(|w| w[0].0 < w[1].0 && w[1].1 < w[0].1)
            && pairs.last().is_none_or(|&(i, j)| i <= j);
        if !nested || pairs.iter().any(|&(i, _)| i == 0) {
            return Err(Error::NotNested(pairs));
        }
        Ok(BorderStripSpec { pairs, direction })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn direction(&self) -> StripDirection {
        self.direction
    }
}

/// Applies the composition `op^{i_1}_{j_1} o .. o op^{i_m}_{j_m}`, innermost
/// pair first. Each single removal is checked as it is applied.
pub fn apply_nested(e: &CornerEncoding, spec: &BorderStripSpec) -> Result<CornerEncoding> {
    let mut cur = e.clone();
    for &(i, j) in spec.pairs.iter().rev() {
        cur = match spec.direction {
            StripDirection::Add => apply_pi(&cur, i, j)?,
            StripDirection::Remove => apply_mu(&cur, i, j)?,
        };
    }
    Ok(cur)
}

/// `p + omega_l` (sign > 0) or `p - omega_l` (sign < 0) with `l = y_k`:
/// shifts `x_1, .., x_k` by the sign.
pub fn apply_omega(p: &Partition, k: usize, sign: i8) -> Result<Partition> {
    let e = corner_encoding(p);
    let n = e.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, count: n });
    }
    let delta = if sign >= 0 { 1 } else { -1 };
    let mut out = e.clone();
    for x in out.x.iter_mut().take(k) {
        *x += delta;
    }
    out.check_weak().map_err(|err| Error::NotRemovable { i: 1, j: k, reason: err.to_string() })?;
    partition_from_corners(&out)
}

/// The partition `(t_r - r + 1, .., t_2 - 1, t_1)` of a strictly increasing set.
pub fn partition_from_set(t: &[i64]) -> Result<Partition> {
    if t.iter().any(|&v| v <= 0) || t.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSet(t.to_vec()));
    }
    let parts: Vec<i64> = t.iter().enumerate().rev().map(|(idx, &v)| v - idx as i64).collect();
    Partition::from_signed(&parts)
}
