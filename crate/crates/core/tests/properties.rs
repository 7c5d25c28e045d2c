use proptest::prelude::*;

use schurtrails::identities::{bijection_audit, explore_orbit, verify_general, verify_kleber};
use schurtrails::partitions::{corner_encoding, Partition, SkewShape};
use schurtrails::polyring::{Alphabet, Polynomial};
use schurtrails::schur::schur;

fn decreasing(max_len: usize, max_part: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max_part, 1..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn skew(max_len: usize, max_part: usize) -> impl Strategy<Value = SkewShape> {
    (decreasing(max_len, max_part), prop::collection::vec(0..=max_part, max_len)).prop_map(|(outer, cut)| {
        let mut inner: Vec<usize> = outer.iter().zip(&cut).map(|(&o, &c)| o.min(c)).collect();
        for i in 1..inner.len() {
            inner[i] = inner[i].min(inner[i - 1]);
        }
        SkewShape::new(Partition::new(outer).unwrap(), Partition::new(inner).unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_is_symmetric(parts in decreasing(3, 3), n in 2u32..=3, a in 1u32..=3, b in 1u32..=3) {
        let (a, b) = (a.min(n), b.min(n));
        let s = schur(&Partition::new(parts).unwrap(), n);
        let x = Alphabet::X { nvars: n };
        let swapped = s.substitute(x, |v| Polynomial::var(x, if v == a { b } else if v == b { a } else { v })).unwrap();
        prop_assert_eq!(s, swapped);
    }

    #[test]
    fn two_term_identity(parts in decreasing(4, 5), n in 1u32..=3) {
        let mut l: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        if l.len() < 2 { l.push(0); }
        prop_assert!(verify_general(&l, n).unwrap().equal);
    }

    #[test]
    fn audit_passes(parts in decreasing(3, 3), n in 1u32..=2) {
        let mut l: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        if l.len() < 2 { l.push(0); }
        let a = bijection_audit(&l, n).unwrap();
        prop_assert!(a.passed(), "{:?}", a);
        prop_assert_eq!(a.lhs_objects, a.type_a + a.type_b);
    }

    #[test]
    fn kleber_every_corner(parts in decreasing(3, 3)) {
        let lam = Partition::new(parts).unwrap().trimmed();
        for k in 1..=corner_encoding(&lam).len() {
            let rep = verify_kleber(&lam, k, 3).unwrap();
            prop_assert!(rep.equal, "{} k={}", lam, k);
        }
    }

    #[test]
    fn orbits_balance(blue in skew(2, 3), green in skew(2, 3), t in -1i64..=2, mask in 0u32..16) {
        let probe = explore_orbit(&blue, &green, t, &[], 2).unwrap();
        let selected: Vec<usize> = (1..=probe.terminals.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let r = explore_orbit(&blue, &green, t, &selected, 2).unwrap();
        prop_assert!(r.passed(), "{}", r.to_json());
        if !selected.is_empty() {
            prop_assert_eq!(r.o0_size, r.o1_size);
        }
    }
}
