use std::time::Instant;

use serde_json::json;

use super::IdentityReport;
use crate::error::{Error, Result};
use crate::polyring::{complete_homogeneous, Alphabet, FormalMatrix, Polynomial};
use crate::schur::SchurCache;

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// The two sides of
/// `det A · A[2..r, 2..r] = A[1..r, 1..r] · A[2..r+1, 2..r+1] - A[2..r+1, 1..r] · A[1..r, 2..r+1]`
/// for an `(r+1)×(r+1)` matrix.
fn sides(a: &FormalMatrix) -> Result<(Polynomial, Polynomial)> {
    let r = a.rows() - 1;
    let full = a.determinant()?;
    let mid = a.minor(&range(2, r), &range(2, r))?;
    let top = a.minor(&range(1, r), &range(1, r))?;
    let bot = a.minor(&range(2, r + 1), &range(2, r + 1))?;
    let lower = a.minor(&range(2, r + 1), &range(1, r))?;
    let upper = a.minor(&range(1, r), &range(2, r + 1))?;
    Ok((&full * &mid, &(&top * &bot) - &(&lower * &upper)))
}

pub fn verify_dodgson(r: usize) -> Result<IdentityReport> {
    let started = Instant::now();
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let a = FormalMatrix::generic(r + 1, r + 1);
    let (lhs, rhs) = sides(&a)?;
    Ok(IdentityReport::compare("dodgson", json!({ "r": r }), lhs, rhs, started))
}

/// Specialises the formal identity at `a_{i,j} = h_{λ_i - i + j}(x_1..x_N)`
/// with `λ = ((r+1)r, r·r, .., r)`, whose entries are pairwise distinct, and
/// compares both sides and every minor against tableau Schur polynomials.
pub fn dodgson_specialisation(r: usize, n: u32) -> Result<IdentityReport> {
    let started = Instant::now();
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter("r and N must be positive".into()));
    }
    let lam: Vec<i64> = (1..=r + 1).map(|i| ((r + 2 - i) * r) as i64).collect();
    let x = Alphabet::X { nvars: n };
    let h = |i: usize, j: usize| complete_homogeneous(lam[i - 1] - i as i64 + j as i64, n);
    let hm = FormalMatrix::from_fn(r + 1, r + 1, x, h)?;

    let generic = FormalMatrix::generic(r + 1, r + 1);
    let (f_lhs, f_rhs) = sides(&generic)?;
    let cols = (r + 1) as u32;
    let image = |v: u32| h(((v - 1) / cols + 1) as usize, ((v - 1) % cols + 1) as usize);
    let lhs = f_lhs.substitute(x, image)?;
    let rhs_formal = f_rhs.substitute(x, image)?;

    let mut cache = SchurCache::new(n);
    let plus: Vec<i64> = lam[..r].iter().map(|p| p + 1).collect();
    let minus: Vec<i64> = lam[1..].iter().map(|p| p - 1).collect();
    let mut s = |p: &[i64]| cache.get_signed(p).expect("witness slices are partitions");
    let checks = [
        ("full", hm.determinant()?, s(&lam)),
        ("mid", hm.minor(&range(2, r), &range(2, r))?, s(&lam[1..r])),
        ("top", hm.minor(&range(1, r), &range(1, r))?, s(&lam[..r])),
        ("bot", hm.minor(&range(2, r + 1), &range(2, r + 1))?, s(&lam[1..])),
        ("lower", hm.minor(&range(2, r + 1), &range(1, r))?, s(&minus)),
        ("upper", hm.minor(&range(1, r), &range(2, r + 1))?, s(&plus)),
    ];
    let minors_ok = checks.iter().all(|(_, m, t)| m == t);
    let rhs = &(&checks[2].2 * &checks[3].2) - &(&checks[4].2 * &checks[5].2);
    let mut rep = IdentityReport::compare("dodgson_specialised", json!({ "r": r, "n": n, "lambda": lam }), lhs, rhs, started);
    let formal_ok = rhs_formal == rep.rhs;
    rep.equal &= minors_ok && formal_ok;
    Ok(rep.with_details(json!({
        "minors": checks.iter().map(|(name, m, t)| json!({ "minor": name, "matches_schur": m == t })).collect::<Vec<_>>(),
        "formal_rhs_matches": formal_ok,
    })))
}
