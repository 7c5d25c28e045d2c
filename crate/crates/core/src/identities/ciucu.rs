use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;

use super::{sum, IdentityReport};
use crate::error::{Error, Result};
use crate::partitions::partition_from_set;
use crate::polyring::{Alphabet, Polynomial};
use crate::schur::SchurCache;

/// With `|T| = 2k`: `Σ_{A ⊂ T, |A| = k} s_{λ(A)} s_{λ(T-A)} = 2^k s_{λ(t_2, t_4, .., t_2k)} s_{λ(t_1, t_3, .., t_2k-1)}`.
///
/// With `|T| = 2n > 2k` the slice of that sum in which exactly `k` odd-indexed
/// elements of `T` lie in `A` (the row exchanges of size `k` in the
/// determinant form) is checked instead; it carries the factor `C(n, k)`, and
/// the slices for `k = 0..n` add up to the full identity.
pub fn verify_ciucu(t: &[i64], k: usize, n: u32) -> Result<IdentityReport> {
    let started = Instant::now();
    if t.len() % 2 == 1 || t.len() < 2 * k || t.is_empty() {
        return Err(Error::InvalidParameter(format!("T needs an even number of at least 2k = {} elements, got {}", 2 * k, t.len())));
    }
    partition_from_set(t)?;
    let half = t.len() / 2;
    let full = half == k;
    let mut cache = SchurCache::new(n);
    let mut s = |set: &[i64]| -> Result<Polynomial> { Ok(cache.get(&partition_from_set(set)?)) };

    let odd_mask: u64 = (0..t.len()).step_by(2).map(|i| 1u64 << i).sum();
    let mut terms = Vec::new();
    for mask in 0u64..1 << t.len() {
        let keep = if full {
            mask.count_ones() as usize == k
        } else {
            mask.count_ones() as usize == half && (mask & odd_mask).count_ones() as usize == k
        };
        if !keep {
            continue;
        }
        let pick = |bit: usize| -> Vec<i64> {
            t.iter().enumerate().filter(|(i, _)| (mask >> i & 1) as usize == bit).map(|(_, &v)| v).collect()
        };
        let (a, rest) = (pick(1), pick(0));
        terms.push(&s(&a)? * &s(&rest)?);
    }
    let summands = terms.len();
    let lhs = sum(Alphabet::X { nvars: n }, terms);
    let evens: Vec<i64> = t.iter().skip(1).step_by(2).copied().collect();
    let odds: Vec<i64> = t.iter().step_by(2).copied().collect();
    let factor = if full { BigInt::from(1) << k } else { binomial(half, k) };
    let rhs = (&s(&evens)? * &s(&odds)?).scale(&factor);
    let params = json!({ "t": t, "k": k, "n": n });
    Ok(IdentityReport::compare("ciucu", params, lhs, rhs, started)
        .with_details(json!({ "summands": summands, "factor": factor.to_string(), "slice": !full })))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_element_sets() {
        let rep = verify_ciucu(&[1, 2], 1, 2).unwrap();
        assert!(rep.equal);
        let mut c = SchurCache::new(2);
        let twice = (&c.get(&"1".parse().unwrap()) * &c.get(&"2".parse().unwrap())).scale(&2.into());
        assert_eq!(rep.lhs, twice);
        assert!(verify_ciucu(&[1, 3], 1, 2).unwrap().equal);
    }

    #[test]
    fn four_element_set() {
        let rep = verify_ciucu(&[1, 2, 3, 4], 2, 3).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.details.unwrap()["summands"], 6);
        let rep = verify_ciucu(&[1, 2, 3, 4], 1, 3).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.details.unwrap()["summands"], 4);
    }

    #[test]
    fn slices_add_up_to_the_full_sum() {
        let t = [1, 3, 4, 6, 7, 8];
        let full = verify_ciucu(&t, 3, 3).unwrap();
        assert!(full.equal);
        let mut total = Polynomial::zero(Alphabet::X { nvars: 3 });
        for k in 0..3 {
            let rep = verify_ciucu(&t, k, 3).unwrap();
            assert!(rep.equal, "k={k}");
            total = &total + &rep.lhs;
        }
        let last = verify_ciucu(&t, 3, 3).unwrap();
        // the k = n slice is the single term A = odd-indexed elements
        let mut c = SchurCache::new(3);
        let single = &c.get(&partition_from_set(&[1, 4, 7]).unwrap()) * &c.get(&partition_from_set(&[3, 6, 8]).unwrap());
        assert_eq!(&total + &single, last.lhs);
    }

    #[test]
    fn malformed_sets() {
        assert!(verify_ciucu(&[1, 2, 3], 1, 2).is_err());
        assert!(verify_ciucu(&[1, 2], 2, 2).is_err());
        assert!(verify_ciucu(&[2, 1], 1, 2).is_err());
        assert!(verify_ciucu(&[0, 1], 1, 2).is_err());
    }
}
