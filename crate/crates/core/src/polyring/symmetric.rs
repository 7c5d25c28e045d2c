use num_bigint::BigInt;
use num_traits::One;

use super::{Alphabet, Monomial, Polynomial};

/// `h_m(x_1, .., x_N)`: the sum of all monomials of degree `m`.
/// `h_0 = 1` and `h_m = 0` for negative `m`.
pub fn complete_homogeneous(m: i64, nvars: u32) -> Polynomial {
    let alphabet = Alphabet::X { nvars };
    if m < 0 || (nvars == 0 && m > 0) {
        return Polynomial::zero(alphabet);
    }
    let mut terms = Vec::new();
    let mut exps = vec![0u32; nvars as usize];
    fill(&mut exps, 0, m as u32, &mut terms);
    Polynomial::from_terms(alphabet, terms.into_iter().map(|mono| (mono, BigInt::one())))
}

fn fill(exps: &mut [u32], pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = left;
        }
        out.push(Monomial::from_pairs(exps.iter().enumerate().map(|(v, &e)| (v as u32 + 1, e))));
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn conventions() {
        assert_eq!(complete_homogeneous(0, 3).to_string(), "1");
        assert!(complete_homogeneous(-2, 3).is_zero());
        assert_eq!(complete_homogeneous(2, 2).to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(complete_homogeneous(3, 1).to_string(), "x1^3");
    }

    #[test]
    fn term_counts_are_binomial() {
        for n in 1..=4u32 {
            for m in 0..=6i64 {
                let h = complete_homogeneous(m, n);
                assert_eq!(h.term_count() as u64, binom(m as u64 + n as u64 - 1, n as u64 - 1));
                assert!(h.terms().all(|(mono, c)| c.is_one() && mono.degree() == m as u32));
            }
        }
    }
}
