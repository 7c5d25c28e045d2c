use num_bigint::BigInt;
use rayon::prelude::*;

use super::{Alphabet, Polynomial};
use crate::error::{Error, Result};

/// A dense matrix of polynomials over a single alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalMatrix {
    rows: usize,
    cols: usize,
    alphabet: Alphabet,
    entries: Vec<Polynomial>,
}

impl FormalMatrix {
    /// The generic matrix whose `(i,j)` entry is the variable `a_{i,j}`.
    pub fn generic(rows: usize, cols: usize) -> Self {
        let c = cols as u32;
        FormalMatrix::from_fn(rows, cols, Alphabet::Entry { cols: c }, |i, j| {
            Polynomial::entry_var(c, i as u32, j as u32)
        })
        .expect("generic entries share one alphabet")
    }

    /// Builds the matrix from a 1-based entry function.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        alphabet: Alphabet,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                let e = f(i, j);
                if e.alphabet() != alphabet {
                    return Err(Error::AlphabetMismatch(alphabet.to_string(), e.alphabet().to_string()));
                }
                entries.push(e);
            }
        }
        Ok(FormalMatrix { rows, cols, alphabet, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Applies `f` entrywise, moving the result into `target`.
    pub fn map(&self, target: Alphabet, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<FormalMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        if let Some(bad) = entries.iter().find(|e| e.alphabet() != target) {
            return Err(Error::AlphabetMismatch(target.to_string(), bad.alphabet().to_string()));
        }
        Ok(FormalMatrix { rows: self.rows, cols: self.cols, alphabet: target, entries })
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let idx: Vec<usize> = (1..=self.rows).collect();
        Ok(self.det_of(&idx, &idx))
    }

    /// Determinant of the submatrix on the listed rows and columns, in the listed order.
    /// The empty selection has determinant 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!("{} rows but {} columns", rows.len(), cols.len())));
        }
        if let Some(&r) = rows.iter().find(|&&r| r == 0 || r > self.rows) {
            return Err(Error::InvalidMinor(format!("row {r} outside 1..={}", self.rows)));
        }
        if let Some(&c) = cols.iter().find(|&&c| c == 0 || c > self.cols) {
            return Err(Error::InvalidMinor(format!("column {c} outside 1..={}", self.cols)));
        }
        Ok(self.det_of(rows, cols))
    }

    fn det_of(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let d = rows.len();
        if d == 0 {
            return Polynomial::one(self.alphabet);
        }
        // Expand along the first row; each branch is a full permutation sum.
        let branch = |k: usize| -> Polynomial {
            let rest_cols: Vec<usize> = cols.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, &c)| c).collect();
            let sub = permutation_sum(self, &rows[1..], &rest_cols);
            let term = self.entry(rows[0], cols[k]) * &sub;
            if k % 2 == 1 { -&term } else { term }
        };
        let parts: Vec<Polynomial> = if d >= 4 {
            (0..d).into_par_iter().map(branch).collect()
        } else {
            (0..d).map(branch).collect()
        };
        parts.iter().fold(Polynomial::zero(self.alphabet), |acc, p| &acc + p)
    }
}

fn permutation_sum(m: &FormalMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let d = rows.len();
    let mut acc = Polynomial::zero(m.alphabet);
    if d == 0 {
        return Polynomial::one(m.alphabet);
    }
    let mut perm: Vec<usize> = (0..d).collect();
    let mut c = vec![0usize; d];
    let mut sign = 1i8;
    let emit = |perm: &[usize], sign: i8, acc: &mut Polynomial| {
        let mut term = Polynomial::constant(m.alphabet, BigInt::from(sign));
        for (r, &p) in perm.iter().enumerate() {
            term = &term * m.entry(rows[r], cols[p]);
            if term.is_zero() {
                return;
            }
        }
        *acc = &*acc + &term;
    };
    emit(&perm, sign, &mut acc);
    // Heap's algorithm: every swap flips the sign.
    let mut i = 0;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            emit(&perm, sign, &mut acc);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;
    use proptest::prelude::*;

    fn cofactor(m: &FormalMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(m.alphabet());
        }
        let mut acc = Polynomial::zero(m.alphabet());
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = m.entry(rows[0], c) * &cofactor(m, &rows[1..], &rest);
            acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let g1 = FormalMatrix::generic(1, 1);
        assert_eq!(g1.determinant().unwrap().to_string(), "a1_1");
        let g2 = FormalMatrix::generic(2, 2);
        assert_eq!(g2.determinant().unwrap().to_string(), "a1_1*a2_2 - a1_2*a2_1");
        assert!(matches!(FormalMatrix::generic(2, 3).determinant(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn minors_follow_listed_order() {
        let g2 = FormalMatrix::generic(2, 2);
        assert_eq!(g2.minor(&[1], &[1]).unwrap().to_string(), "a1_1");
        let swapped = g2.minor(&[2, 1], &[1, 2]).unwrap();
        assert_eq!(swapped, -&g2.determinant().unwrap());
        let g3 = FormalMatrix::generic(3, 3);
        assert_eq!(g3.minor(&[1, 2], &[2, 3]).unwrap().to_string(), "a1_2*a2_3 - a1_3*a2_2");
        assert!(g3.minor(&[1, 1], &[1, 2]).unwrap().is_zero());
        assert!(g3.minor(&[], &[]).unwrap() == Polynomial::one(g3.alphabet()));
        assert!(g3.minor(&[1, 4], &[1, 2]).is_err());
        assert!(g3.minor(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn generic_term_counts() {
        for (d, fact) in [(3, 6), (4, 24), (5, 120)] {
            assert_eq!(FormalMatrix::generic(d, d).determinant().unwrap().term_count(), fact);
        }
    }

    fn arb_matrix(d: usize) -> impl Strategy<Value = FormalMatrix> {
        let a = Alphabet::X { nvars: 3 };
        proptest::collection::vec((0u32..3, 0u32..2, -3i64..4), d * d).prop_map(move |cells| {
            let mut it = cells.into_iter();
            FormalMatrix::from_fn(d, d, a, |_, _| {
                let (v, e, c) = it.next().unwrap();
                Polynomial::from_terms(a, [(Monomial::from_pairs([(v + 1, e)]), BigInt::from(c))])
            })
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn agrees_with_cofactor_3(m in arb_matrix(3)) {
            let idx = [1, 2, 3];
            prop_assert_eq!(m.determinant().unwrap(), cofactor(&m, &idx, &idx));
        }

        #[test]
        fn agrees_with_cofactor_4(m in arb_matrix(4)) {
            let idx = [1, 2, 3, 4];
            prop_assert_eq!(m.determinant().unwrap(), cofactor(&m, &idx, &idx));
        }
    }
}
