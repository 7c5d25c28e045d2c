use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::polyring::Monomial;

/// An `N`-semistandard filling of a skew shape. `rows[i]` holds only the
/// cells of row `i`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
    n: u32,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>, n: u32) -> Result<Self> {
        let t = Tableau { shape, rows, n };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(n: u32) -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new(), n }
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::Parse { what: "tableau", input: self.to_string(), reason };
        if self.rows.len() != self.shape.rows() {
            return Err(bad(format!("{} rows for a shape with {}", self.rows.len(), self.shape.rows())));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_len(i) {
                return Err(bad(format!("row {} has {} cells, shape needs {}", i + 1, row.len(), self.shape.row_len(i))));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > self.n) {
                return Err(bad(format!("entry {v} outside 1..={}", self.n)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(bad(format!("row {} is not weakly increasing", i + 1)));
            }
            if i > 0 {
                for (k, &v) in row.iter().enumerate() {
                    let col = self.shape.inner().part(i) + k;
                    if let Some(up) = self.get(i - 1, col) {
                        if up >= v {
                            return Err(bad(format!("column {} is not strictly increasing", col + 1)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Entry at 0-based row `i` and absolute column `col`, if that cell is in the shape.
    pub fn get(&self, i: usize, col: usize) -> Option<u32> {
        let start = self.shape.inner().part(i);
        if i >= self.rows.len() || col < start {
            return None;
        }
        self.rows[i].get(col - start).copied()
    }

    /// Number of entries equal to `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.rows.iter().flatten().filter(|&&v| v == k).count()
    }
}

/// `∏ x_k^{m(T,k)}`.
pub fn tableau_weight(t: &Tableau) -> Monomial {
    Monomial::from_pairs(t.rows.iter().flatten().map(|&v| (v, 1)))
}

impl fmt::Display for Tableau {
    /// Rows separated by `;`, entries by `,`, skew holes shown as `·`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let holes = std::iter::repeat_n("·".to_string(), self.shape.inner().part(i));
                holes.chain(row.iter().map(|v| v.to_string())).collect::<Vec<_>>().join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl Tableau {
    /// Parses the text format with an explicit alphabet bound.
    pub fn parse(s: &str, n: u32) -> Result<Self> {
        let err = |reason: String| Error::Parse { what: "tableau", input: s.to_string(), reason };
        if s.trim().is_empty() {
            return Ok(Tableau::empty(n));
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row in s.split(';') {
            let mut holes = 0;
            let mut vals = Vec::new();
            for tok in row.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                if tok == "·" || tok == "." {
                    if !vals.is_empty() {
                        return Err(err("hole after an entry".into()));
                    }
                    holes += 1;
                } else {
                    vals.push(tok.parse::<u32>().map_err(|e| err(e.to_string()))?);
                }
            }
            outer.push(holes + vals.len());
            inner.push(holes);
            rows.push(vals);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Tableau::new(shape, rows, n)
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Uses the largest entry as the alphabet bound.
    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split([',', ';'])
            .filter_map(|t| t.trim().parse::<u32>().ok())
            .max()
            .unwrap_or(1);
        Tableau::parse(s, n)
    }
}

/// Iterates the `N`-semistandard tableaux of a skew shape in lexicographic
/// order of their row-reading words.
pub struct SsytIter {
    shape: SkewShape,
    n: u32,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    upper: Vec<u32>,
    rows: Vec<usize>,
    vals: Vec<u32>,
    state: IterState,
}

#[derive(PartialEq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_ssyt(shape: &SkewShape, n: u32) -> SsytIter {
    let mut cells = Vec::new();
    for i in 0..shape.rows() {
        for col in shape.inner().part(i)..shape.outer().part(i) {
            cells.push((i, col));
        }
    }
    let index_of = |i: usize, col: usize| cells.iter().position(|&c| c == (i, col));
    let mut left = Vec::new();
    let mut above = Vec::new();
    let mut upper = Vec::new();
    for &(i, col) in &cells {
        left.push(if col > 0 { index_of(i, col - 1) } else { None });
        above.push(if i > 0 { index_of(i - 1, col) } else { None });
        let below = cells.iter().filter(|&&(r, c)| c == col && r > i).count() as u32;
        upper.push(n.saturating_sub(below));
    }
    let rows = cells.iter().map(|&(i, _)| i).collect();
    SsytIter {
        shape: shape.clone(),
        n,
        vals: vec![0; cells.len()],
        left,
        above,
        upper,
        rows,
        state: IterState::Fresh,
    }
}

impl SsytIter {
    fn lower(&self, q: usize) -> u32 {
        let l = self.left[q].map_or(1, |p| self.vals[p]);
        let a = self.above[q].map_or(1, |p| self.vals[p] + 1);
        l.max(a)
    }

    fn fill_from(&mut self, start: usize) -> bool {
        for q in start..self.vals.len() {
            let lo = self.lower(q);
            if lo > self.upper[q] {
                return false;
            }
            self.vals[q] = lo;
        }
        true
    }

    fn current(&self) -> Tableau {
        let mut rows = vec![Vec::new(); self.shape.rows()];
        for (q, &v) in self.vals.iter().enumerate() {
            rows[self.rows[q]].push(v);
        }
        Tableau { shape: self.shape.clone(), rows, n: self.n }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                // The pointwise minimal filling is below every tableau, so if it
                // breaks an upper bound there is nothing to enumerate.
                if self.fill_from(0) {
                    self.state = IterState::Running;
                    Some(self.current())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Running => {
                let mut p = self.vals.len();
                while p > 0 {
                    p -= 1;
                    if self.vals[p] < self.upper[p] {
                        self.vals[p] += 1;
                        if self.fill_from(p + 1) {
                            return Some(self.current());
                        }
                    }
                }
                self.state = IterState::Done;
                None
            }
        }
    }
}
