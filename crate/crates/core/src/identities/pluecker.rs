use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{sum, IdentityReport};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{complete_homogeneous, Alphabet, FormalMatrix, Polynomial};
use crate::schur::SchurCache;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum PlueckerMode {
    /// Minors of a generic `2n×n` matrix.
    Formal,
    /// The Schur function form for partitions `λ`, `σ` with `n` parts.
    Schur { lambda: Vec<i64>, sigma: Vec<i64>, vars: u32 },
}

/// All increasing `k`-subsets of `lo..=hi`.
fn subsets(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        if hi + 1 - first < k {
            break;
        }
        for mut rest in subsets(first + 1, hi, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn check_rlist(n: usize, rlist: &[usize]) -> Result<()> {
    if rlist.iter().any(|&r| r == 0 || r > n) || rlist.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(format!("row list {rlist:?} must be increasing within 1..={n}")));
    }
    Ok(())
}

/// `[1..n]·[n+1..2n]` against the sum over `s_1 < .. < s_k` in `n+1..2n` of
/// the minors with rows `r_i` and `s_i` exchanged in place.
fn minor_sides(a: &FormalMatrix, n: usize, rlist: &[usize]) -> Result<(Polynomial, Polynomial, Vec<Vec<usize>>)> {
    let first: Vec<usize> = (1..=n).collect();
    let second: Vec<usize> = (n + 1..=2 * n).collect();
    let cols = first.clone();
    let lhs = &a.minor(&first, &cols)? * &a.minor(&second, &cols)?;
    let choices = subsets(n + 1, 2 * n, rlist.len());
    let mut terms = Vec::with_capacity(choices.len());
    for s in &choices {
        let mut top = first.clone();
        let mut bottom = second.clone();
        for (&r, &si) in rlist.iter().zip(s) {
            top[r - 1] = si;
            bottom[si - n - 1] = r;
        }
        terms.push(&a.minor(&top, &cols)? * &a.minor(&bottom, &cols)?);
    }
    Ok((lhs, sum(a.alphabet(), terms), choices))
}

pub fn verify_pluecker(n: usize, rlist: &[usize], mode: &PlueckerMode) -> Result<IdentityReport> {
    let started = Instant::now();
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    check_rlist(n, rlist)?;
    match mode {
        PlueckerMode::Formal => {
            let a = FormalMatrix::generic(2 * n, n);
            let (lhs, rhs, choices) = minor_sides(&a, n, rlist)?;
            let params = json!({ "n": n, "rlist": rlist, "mode": "formal" });
            Ok(IdentityReport::compare("pluecker", params, lhs, rhs, started)
                .with_details(json!({ "summands": choices.len() })))
        }
        PlueckerMode::Schur { lambda, sigma, vars } => schur_form(n, rlist, lambda, sigma, *vars, started),
    }
}

/// Exchanging endpoints of the paths: part `λ_r` moves to the position of
/// `σ_s`, i.e. becomes `σ_s - s + r`, and vice versa. Sequences that are not
/// partitions are straightened, which may cancel summands or flip signs.
fn schur_form(
    n: usize,
    rlist: &[usize],
    lambda: &[i64],
    sigma: &[i64],
    vars: u32,
    started: Instant,
) -> Result<IdentityReport> {
    let lam = Partition::from_signed(lambda)?.padded(n).signed();
    let sig = Partition::from_signed(sigma)?.padded(n).signed();
    if lam.len() != n || sig.len() != n {
        return Err(Error::InvalidParameter(format!("λ and σ need at most {n} parts")));
    }
    let mut cache = SchurCache::new(vars);
    let lhs = &cache.get_signed(&lam)? * &cache.get_signed(&sig)?;
    let mut rhs = Polynomial::zero(cache.alphabet());
    let mut summands = Vec::new();
    for s in subsets(1, n, rlist.len()) {
        let (mut l2, mut s2) = (lam.clone(), sig.clone());
        for (&r, &si) in rlist.iter().zip(&s) {
            l2[r - 1] = sig[si - 1] - si as i64 + r as i64;
            s2[si - 1] = lam[r - 1] - r as i64 + si as i64;
        }
        let term = &cache.get_straightened(&l2) * &cache.get_straightened(&s2);
        summands.push(json!({ "s": s, "lambda": l2, "sigma": s2, "zero": term.is_zero() }));
        rhs = &rhs + &term;
    }

    // The same sum read off minors of the Jacobi-Trudi matrix stack.
    let x = Alphabet::X { nvars: vars };
    let rows: Vec<i64> = lam.iter().chain(&sig).copied().collect();
    let h = FormalMatrix::from_fn(2 * n, n, x, |i, j| {
        let local = if i > n { i - n } else { i };
        complete_homogeneous(rows[i - 1] - local as i64 + j as i64, vars)
    })?;
    let (m_lhs, m_rhs, _) = minor_sides(&h, n, rlist)?;
    let minors_agree = m_lhs == lhs && m_rhs == rhs;

    let params = json!({ "n": n, "rlist": rlist, "mode": "schur", "lambda": lam, "sigma": sig, "vars": vars });
    let mut rep = IdentityReport::compare("pluecker", params, lhs, rhs, started);
    rep.equal &= minors_agree;
    Ok(rep.with_details(json!({ "summands": summands, "minors_agree": minors_agree })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(3, 4, 1), vec![vec![3], vec![4]]);
        assert_eq!(subsets(1, 4, 2).len(), 6);
        assert_eq!(subsets(1, 3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn three_term_relation() {
        let rep = verify_pluecker(2, &[1], &PlueckerMode::Formal).unwrap();
        assert!(rep.equal);
        // [1,2][3,4] = [3,2][1,4] + [4,2][3,1]
        let a = FormalMatrix::generic(4, 2);
        let m = |r: [usize; 2]| a.minor(&r, &[1, 2]).unwrap();
        let expected = &(&m([3, 2]) * &m([1, 4])) + &(&m([4, 2]) * &m([3, 1]));
        assert_eq!(rep.rhs, expected);
    }

    #[test]
    fn empty_exchange_is_trivial() {
        let rep = verify_pluecker(2, &[], &PlueckerMode::Formal).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, rep.rhs);
    }

    #[test]
    fn all_row_lists_small() {
        for rl in [vec![1], vec![2], vec![1, 2]] {
            assert!(verify_pluecker(2, &rl, &PlueckerMode::Formal).unwrap().equal, "{rl:?}");
        }
        for r in 1..=3 {
            assert!(verify_pluecker(3, &[r], &PlueckerMode::Formal).unwrap().equal);
        }
    }

    #[test]
    fn schur_form_small() {
        let mode = PlueckerMode::Schur { lambda: vec![4, 2], sigma: vec![3, 1], vars: 3 };
        let rep = verify_pluecker(2, &[1], &mode).unwrap();
        assert!(rep.equal, "{:?}", rep.details);
        // s42 s31 = s32 s41 + s11 s44
        let mut c = SchurCache::new(3);
        let mut s = |p: &[i64]| c.get_signed(p).unwrap();
        assert_eq!(rep.rhs, &(&s(&[3, 2]) * &s(&[4, 1])) + &(&s(&[1, 1]) * &s(&[4, 4])));
    }

    #[test]
    fn bad_row_lists() {
        assert!(verify_pluecker(2, &[2, 1], &PlueckerMode::Formal).is_err());
        assert!(verify_pluecker(2, &[3], &PlueckerMode::Formal).is_err());
    }
}
