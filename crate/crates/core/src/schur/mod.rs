//! Schur polynomials from tableaux and from Jacobi–Trudi determinants, and the
//! correspondence between tableaux and nonintersecting lattice paths.

mod paths;
mod tableau;

pub use paths::{
    enumerate_families, path_weight, paths_to_tableau, tableau_to_paths, LatticePath, PathFamily, Point, Step,
    TerminalSpec,
};
pub use tableau::{enumerate_ssyt, tableau_weight, SsytIter, Tableau};

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::polyring::{complete_homogeneous, Alphabet, FormalMatrix, Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchurMethod {
    /// Sum of tableau weights.
    Tableaux,
    /// `det(h_{λ_i - i + j})`; straight shapes only.
    JacobiTrudi,
    /// `det(h_{λ_i - μ_j - i + j})`. An extension used as a cross-check.
    SkewJacobiTrudi,
}

pub fn schur_poly(shape: &SkewShape, n: u32, method: SchurMethod) -> Result<Polynomial> {
    match method {
        SchurMethod::Tableaux => Ok(schur_by_tableaux(shape, n)),
        SchurMethod::JacobiTrudi => {
            if !shape.is_straight() {
                return Err(Error::SkewJacobiTrudi(shape.inner().parts().to_vec()));
            }
            Ok(jacobi_trudi(shape, n))
        }
        SchurMethod::SkewJacobiTrudi => Ok(jacobi_trudi(shape, n)),
    }
}

/// `s_λ(x_1, .., x_N)` by tableau enumeration.
pub fn schur(lambda: &Partition, n: u32) -> Polynomial {
    schur_by_tableaux(&SkewShape::straight(lambda.clone()), n)
}

fn schur_by_tableaux(shape: &SkewShape, n: u32) -> Polynomial {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for t in enumerate_ssyt(shape, n) {
        *counts.entry(tableau_weight(&t)).or_default() += 1;
    }
    Polynomial::from_terms(Alphabet::X { nvars: n }, counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

fn jacobi_trudi(shape: &SkewShape, n: u32) -> Polynomial {
    // Trailing rows with λ_i = μ_i = 0 contribute an identity block.
    let r = (0..shape.rows()).rev().find(|&i| shape.outer().part(i) > 0).map_or(0, |i| i + 1);
    let lam = shape.outer().signed();
    let mu = shape.inner().signed();
    let mut h_cache: HashMap<i64, Polynomial> = HashMap::new();
    let m = FormalMatrix::from_fn(r, r, Alphabet::X { nvars: n }, |i, j| {
        let deg = lam[i - 1] - mu[j - 1] - i as i64 + j as i64;
        h_cache.entry(deg).or_insert_with(|| complete_homogeneous(deg, n)).clone()
    })
    .expect("all entries share one alphabet");
    m.determinant().expect("square by construction")
}

/// Rewrites `s_a` for an arbitrary integer sequence `a`, read through the
/// Jacobi–Trudi determinant, as `±s_ν` for a partition `ν`. Returns `None`
/// when the determinant vanishes.
pub fn straighten(seq: &[i64]) -> Option<(i8, Partition)> {
    let r = seq.len();
    let mut pos: Vec<i64> = seq.iter().enumerate().map(|(i, &a)| a - (i as i64 + 1)).collect();
    let mut sign = 1i8;
    // Bubble sort into strictly decreasing order, counting transpositions.
    for pass in 0..r {
        for k in 0..r.saturating_sub(pass + 1) {
            if pos[k] < pos[k + 1] {
                pos.swap(k, k + 1);
                sign = -sign;
            }
        }
    }
    if pos.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts: Vec<i64> = pos.iter().enumerate().map(|(i, &p)| p + i as i64 + 1).collect();
    if parts.last().is_some_and(|&p| p < 0) {
        return None;
    }
    Some((sign, Partition::from_signed(&parts).expect("strictly decreasing positions give a partition")))
}

/// Memoised tableau Schur polynomials at a fixed `N`.
#[derive(Debug, Clone)]
pub struct SchurCache {
    n: u32,
    map: HashMap<Vec<usize>, Polynomial>,
}

impl SchurCache {
    pub fn new(n: u32) -> Self {
        SchurCache { n, map: HashMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::X { nvars: self.n }
    }

    pub fn get(&mut self, lambda: &Partition) -> Polynomial {
        let key = lambda.trimmed().parts().to_vec();
        let n = self.n;
        self.map.entry(key).or_insert_with(|| schur(&lambda.trimmed(), n)).clone()
    }

    /// `s_a` for an integer sequence: zero if any part is negative, otherwise
    /// the sequence must be weakly decreasing.
    pub fn get_signed(&mut self, parts: &[i64]) -> Result<Polynomial> {
        if parts.iter().any(|&p| p < 0) {
            return Ok(Polynomial::zero(self.alphabet()));
        }
        let p = Partition::from_signed(parts)?;
        Ok(self.get(&p))
    }

    /// `s_a` for an arbitrary sequence via [`straighten`].
    pub fn get_straightened(&mut self, parts: &[i64]) -> Polynomial {
        match straighten(parts) {
            None => Polynomial::zero(self.alphabet()),
            Some((sign, p)) => {
                let s = self.get(&p);
                if sign < 0 { -&s } else { s }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn small_schur_polynomials() {
        let s1 = schur_poly(&shape("1"), 3, SchurMethod::Tableaux).unwrap();
        assert_eq!(s1.to_string(), "x1 + x2 + x3");
        let s21 = schur_poly(&shape("2,1"), 2, SchurMethod::JacobiTrudi).unwrap();
        assert_eq!(s21.to_string(), "x1^2*x2 + x1*x2^2");
        assert_eq!(s21, schur_poly(&shape("2,1"), 2, SchurMethod::Tableaux).unwrap());
        let skew = schur_poly(&shape("4,3,2/1"), 6, SchurMethod::Tableaux).unwrap();
        let m = Monomial::from_pairs([(3, 2), (4, 2), (5, 2), (6, 2)]);
        assert!(skew.coefficient(&m) > BigInt::from(0));
    }

    #[test]
    fn skew_shapes_need_the_extension() {
        let sh = shape("3,2/1");
        assert!(matches!(schur_poly(&sh, 3, SchurMethod::JacobiTrudi), Err(Error::SkewJacobiTrudi(_))));
        for s in ["3,2/1", "3,3,1/2,1", "4,2/2", "2,2,2/1,1"] {
            let sh = shape(s);
            for n in 1..=3 {
                assert_eq!(
                    schur_poly(&sh, n, SchurMethod::SkewJacobiTrudi).unwrap(),
                    schur_poly(&sh, n, SchurMethod::Tableaux).unwrap(),
                    "{s} at N={n}"
                );
            }
        }
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten(&[2, 1]), Some((1, "2,1".parse().unwrap())));
        // positions (3-1, 4-2) = (2, 2) collide
        assert_eq!(straighten(&[3, 4]), None);
        // s_{(1,3)}: positions (0, 1) -> swap -> (1, 0) -> parts (2, 2)
        assert_eq!(straighten(&[1, 3]), Some((-1, "2,2".parse().unwrap())));
        assert_eq!(straighten(&[1, -1]), None);
        assert_eq!(straighten(&[]), Some((1, Partition::empty())));
    }

    #[test]
    fn straightening_matches_determinant() {
        let n = 3;
        for seq in [[1i64, 3], [0, 2], [2, 4], [0, 3], [-1, 2], [3, 0]] {
            let r = seq.len();
            let m = FormalMatrix::from_fn(r, r, Alphabet::X { nvars: n }, |i, j| {
                complete_homogeneous(seq[i - 1] - i as i64 + j as i64, n)
            })
            .unwrap();
            let mut cache = SchurCache::new(n);
            assert_eq!(cache.get_straightened(&seq), m.determinant().unwrap(), "{seq:?}");
        }
    }
}
