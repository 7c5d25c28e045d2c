use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::IdentityReport;
use crate::error::{Error, Result};
use crate::partitions::{
    apply_nested, apply_omega, corner_encoding, partition_from_corners, BorderStripSpec, Partition, StripDirection,
};
use crate::polyring::Polynomial;
use crate::schur::SchurCache;

/// One summand `sign · s_plus · s_minus` of the right side. The leading
/// `λ ± ω` term has no pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleberTerm {
    pub sign: i8,
    pub pairs: Vec<(usize, usize)>,
    pub plus: Partition,
    pub minus: Partition,
}

fn choose(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        for mut rest in choose(&items[idx + 1..], m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The surviving summands for corner `k`, and the number of nested index
/// lists dropped because a strip could not be removed.
pub fn kleber_terms(lambda: &Partition, k: usize) -> Result<(Vec<KleberTerm>, usize)> {
    let e = corner_encoding(lambda);
    let n = e.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, count: n });
    }
    let mut terms = vec![KleberTerm {
        sign: 1,
        pairs: Vec::new(),
        plus: apply_omega(lambda, k, 1)?,
        minus: apply_omega(lambda, k, -1)?,
    }];
    let mut skipped = 0;
    let lower: Vec<usize> = (1..=k).collect();
    let upper: Vec<usize> = (k..=n).collect();
    for m in 1..=k.min(n + 1 - k) {
        for is in choose(&lower, m) {
            for mut js in choose(&upper, m) {
                js.reverse();
                let pairs: Vec<(usize, usize)> = is.iter().copied().zip(js).collect();
                let build = |dir| -> Result<Partition> {
                    let spec = BorderStripSpec::new(pairs.clone(), dir)?;
                    partition_from_corners(&apply_nested(&e, &spec)?)
                };
                match (build(StripDirection::Add), build(StripDirection::Remove)) {
                    (Ok(plus), Ok(minus)) => terms.push(KleberTerm {
                        sign: if m % 2 == 1 { 1 } else { -1 },
                        pairs,
                        plus,
                        minus,
                    }),
                    _ => skipped += 1,
                }
            }
        }
    }
    Ok((terms, skipped))
}

/// `s_λ^2 = s_{λ+ω} s_{λ-ω} + Σ (-1)^(m-1) s_{π(λ)} s_{μ(λ)}` over nested
/// lists `i_1 < .. < i_m <= k <= j_m < .. < j_1`.
pub fn verify_kleber(lambda: &Partition, k: usize, n: u32) -> Result<IdentityReport> {
    let started = Instant::now();
    let (terms, skipped) = kleber_terms(lambda, k)?;
    let mut cache = SchurCache::new(n);
    let s = cache.get(lambda);
    let lhs = &s * &s;
    let mut rhs = Polynomial::zero(cache.alphabet());
    for t in &terms {
        let prod = &cache.get(&t.plus) * &cache.get(&t.minus);
        rhs = if t.sign > 0 { &rhs + &prod } else { &rhs - &prod };
    }
    let params = json!({ "lambda": lambda.parts(), "k": k, "n": n });
    let mut details = json!({
        "terms": terms.iter().map(|t| json!({
            "sign": t.sign,
            "pairs": t.pairs,
            "plus": t.plus.to_string(),
            "minus": t.minus.to_string(),
        })).collect::<Vec<_>>(),
        "skipped": skipped,
    });
    if let Some(ok) = rectangle_terms_match(lambda, &terms) {
        details["kirillov_terms_match"] = json!(ok);
    }
    Ok(IdentityReport::compare("kleber", params, lhs, rhs, started).with_details(details))
}

/// For a rectangle `c^r`, whether the summands are exactly the two products
/// `s_{c^(r-1)} s_{c^(r+1)}` and `s_{(c-1)^r} s_{(c+1)^r}`, both positive.
pub(crate) fn rectangle_terms_match(lambda: &Partition, terms: &[KleberTerm]) -> Option<bool> {
    let t = lambda.trimmed();
    let (r, c) = (t.len(), t.part(0));
    if r == 0 || t.parts().iter().any(|&p| p != c) {
        return None;
    }
    let rect = |c: usize, r: usize| Partition::rectangle(c, r).trimmed();
    let key = |a: &Partition, b: &Partition| {
        let (a, b) = (a.trimmed(), b.trimmed());
        if a <= b { (a, b) } else { (b, a) }
    };
    let mut got: Vec<_> = terms.iter().map(|t| (t.sign, key(&t.plus, &t.minus))).collect();
    let mut want = vec![(1, key(&rect(c, r - 1), &rect(c, r + 1))), (1, key(&rect(c - 1, r), &rect(c + 1, r)))];
    got.sort();
    want.sort();
    Some(got == want)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_one_first_corner() {
        // s21^2 = s31 s11 + s22 s11 + s222 s∅
        let (terms, skipped) = kleber_terms(&p("2,1"), 1).unwrap();
        let got: Vec<(String, String)> = terms.iter().map(|t| (t.plus.to_string(), t.minus.to_string())).collect();
        assert_eq!(got, vec![("3,1".into(), "1,1".into()), ("2,2".into(), "1,1".into()), ("2,2,2".into(), "".into())]);
        assert_eq!(skipped, 0);
        assert!(verify_kleber(&p("2,1"), 1, 3).unwrap().equal);
    }

    #[test]
    fn both_corners_and_rectangles() {
        assert!(verify_kleber(&p("2,1"), 2, 3).unwrap().equal);
        let rep = verify_kleber(&p("2,2"), 1, 3).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.details.unwrap()["kirillov_terms_match"], true);
    }

    #[test]
    fn larger_shapes() {
        for (shape, n) in [("3,1", 3), ("3,2,1", 3), ("4,2,1", 3), ("3,3,1,1", 3)] {
            let lam = p(shape);
            for k in 1..=corner_encoding(&lam).len() {
                let rep = verify_kleber(&lam, k, n).unwrap();
                assert!(rep.equal, "{shape} k={k}: {:?}", rep.details);
            }
        }
    }

    #[test]
    fn corner_out_of_range() {
        assert!(verify_kleber(&p("2,1"), 3, 2).is_err());
        assert!(verify_kleber(&p("2,1"), 0, 2).is_err());
    }
}
