use std::time::Instant;

use serde_json::json;

use super::IdentityReport;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::schur::SchurCache;

/// `s(λ_1..λ_r) s(λ_2..λ_{r+1}) = s(λ_1..λ_{r+1}) s(λ_2..λ_r)
///   + s(λ_1+1..λ_r+1) s(λ_2-1..λ_{r+1}-1)`.
/// A part `-1` in the last factor makes it zero.
pub fn verify_general(lambda: &[i64], n: u32) -> Result<IdentityReport> {
    let started = Instant::now();
    let lam = Partition::from_signed(lambda)?.padded(lambda.len());
    if lam.len() < 2 {
        return Err(Error::InvalidParameter(format!("need at least two parts, got {}", lam.len())));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let l = lam.signed();
    let r = l.len() - 1;
    let mut cache = SchurCache::new(n);
    let mut s = |parts: &[i64]| cache.get_signed(parts).expect("slices of a partition are weakly decreasing");
    let lhs = &s(&l[..r]) * &s(&l[1..]);
    let plus: Vec<i64> = l[..r].iter().map(|p| p + 1).collect();
    let minus: Vec<i64> = l[1..].iter().map(|p| p - 1).collect();
    let rhs = &(&s(&l) * &s(&l[1..r])) + &(&s(&plus) * &s(&minus));
    Ok(IdentityReport::compare("general", json!({ "lambda": l, "n": n }), lhs, rhs, started))
}

/// `(s_{c^r})^2 = s_{c^(r-1)} s_{c^(r+1)} + s_{(c-1)^r} s_{(c+1)^r}`, the
/// constant case of [`verify_general`].
pub fn verify_kirillov(c: usize, r: usize, n: u32) -> Result<IdentityReport> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let mut rep = verify_general(&vec![c as i64; r + 1], n)?;
    rep.identity = "kirillov".into();
    rep.params = json!({ "c": c, "r": r, "n": n });
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Alphabet, Polynomial};

    #[test]
    fn smallest_kirillov_case() {
        let rep = verify_general(&[1, 1], 2).unwrap();
        assert!(rep.equal);
        let x = |v| Polynomial::var(Alphabet::X { nvars: 2 }, v);
        assert_eq!(rep.lhs, (&x(1) + &x(2)).pow(2));
    }

    #[test]
    fn zero_partition_degenerates() {
        let rep = verify_general(&[0, 0], 2).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs.to_string(), "1");
    }

    #[test]
    fn rejects_increasing_input() {
        assert!(matches!(verify_general(&[3, 4], 2), Err(Error::NotWeaklyDecreasing(_))));
        assert!(verify_general(&[3], 2).is_err());
    }

    #[test]
    fn kirillov_matches_general() {
        for c in 0..=3 {
            for r in 1..=3 {
                for n in 1..=3 {
                    let k = verify_kirillov(c, r, n).unwrap();
                    assert!(k.equal, "c={c} r={r} N={n}");
                    assert_eq!(k.lhs, verify_general(&vec![c as i64; r + 1], n).unwrap().lhs);
                }
            }
        }
    }
}
