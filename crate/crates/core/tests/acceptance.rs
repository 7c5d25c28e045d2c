use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use schurtrails::identities::{
    bijection_audit, kleber_terms, verify_ciucu, verify_dodgson, verify_general, verify_kirillov, verify_kleber,
    verify_pluecker, AuditReport, PlueckerMode,
};
use schurtrails::partitions::{Partition, SkewShape};
use schurtrails::schur::{
    enumerate_ssyt, path_weight, paths_to_tableau, schur_poly, tableau_to_paths, tableau_weight, SchurCache,
    SchurMethod,
};
use schurtrails::trails::{count_noncrossing_matchings, enumerate_noncrossing_matchings};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn partitions_up_to(size: usize) -> Vec<Partition> {
    (0..=size).flat_map(|n| Partition::all_of_size(n, n)).collect()
}

/// Weakly decreasing sequences of length 2..=4 with parts in 0..=4.
fn general_instances() -> Vec<Vec<i64>> {
    fn go(len: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            go(len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for len in 2..=4 {
        go(len, 4, &mut Vec::new(), &mut out);
    }
    out
}

fn c1() -> Outcome {
    let parts = partitions_up_to(6);
    let mut checked = 0;
    for n in 2..=4 {
        for p in &parts {
            let sh = SkewShape::straight(p.clone());
            let a = schur_poly(&sh, n, SchurMethod::Tableaux).map_err(|e| e.to_string())?;
            let b = schur_poly(&sh, n, SchurMethod::JacobiTrudi).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("s_{p} differs at N={n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (partition, N) pairs"))
}

fn c2() -> Outcome {
    // Skew shapes λ/μ with |λ/μ| <= 6, taking |λ| <= 8.
    let mut shapes = Vec::new();
    for outer in partitions_up_to(8) {
        for inner in partitions_up_to(outer.size()) {
            if outer.size() - inner.size() <= 6 {
                if let Ok(sh) = SkewShape::new(outer.clone(), inner) {
                    shapes.push(sh);
                }
            }
        }
    }
    let total: usize = shapes
        .par_iter()
        .map(|sh| -> Result<usize, String> {
            let mut count = 0;
            for n in 1..=4 {
                for t in enumerate_ssyt(sh, n) {
                    for t0 in [0, 3] {
                        let f = tableau_to_paths(&t, t0);
                        let back = paths_to_tableau(&f, t0, n).map_err(|e| format!("{sh}: {e}"))?;
                        ensure(back == t, || format!("roundtrip changed {t} of {sh}"))?;
                        ensure(path_weight(&f) == tableau_weight(&t), || format!("weight of {t} of {sh}"))?;
                    }
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{} shapes, {total} tableaux", shapes.len()))
}

fn c3() -> Outcome {
    let mut cases = general_instances();
    cases.push(vec![5, 4, 3, 2]);
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|l| match verify_general(l, 3) {
            Ok(r) if r.equal => None,
            Ok(_) => Some(format!("{l:?} unequal")),
            Err(e) => Some(format!("{l:?}: {e}")),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} instances at N=3", cases.len()))
}

fn audit_ok(a: &AuditReport) -> Result<(), String> {
    ensure(a.passed(), || format!("audit of {:?} at N={} failed: {a:?}", a.lambda, a.n))
}

fn c4() -> Outcome {
    let a = bijection_audit(&[2, 1], 2).map_err(|e| e.to_string())?;
    audit_ok(&a)?;
    ensure((a.lhs_objects, a.type_a, a.type_b) == (6, 2, 4), || {
        format!("counts {} = {} + {}", a.lhs_objects, a.type_a, a.type_b)
    })?;
    ensure(a.gap_hits == 0, || "a trail reached the gap".into())?;
    let b = bijection_audit(&[5, 4, 3, 2], 2).map_err(|e| e.to_string())?;
    audit_ok(&b)?;
    Ok(format!("(2,1): 6 = 2 + 4; (5,4,3,2) at N=2: {} objects", b.lhs_objects))
}

fn c5() -> Outcome {
    for r in 1..=3 {
        let rep = verify_dodgson(r).map_err(|e| e.to_string())?;
        ensure(rep.equal, || format!("r={r} unequal: {:?}", rep.witness))?;
    }
    Ok("r = 1, 2, 3".into())
}

fn c6() -> Outcome {
    let mut count = 0;
    let lists: Vec<(usize, Vec<usize>)> = vec![
        (2, vec![]),
        (2, vec![1]),
        (2, vec![2]),
        (2, vec![1, 2]),
        (3, vec![1]),
        (3, vec![2]),
        (3, vec![3]),
    ];
    for (n, rl) in &lists {
        let rep = verify_pluecker(*n, rl, &PlueckerMode::Formal).map_err(|e| e.to_string())?;
        ensure(rep.equal, || format!("formal n={n} r={rl:?} unequal"))?;
        count += 1;
    }
    let mode = PlueckerMode::Schur { lambda: vec![4, 2], sigma: vec![3, 1], vars: 3 };
    let rep = verify_pluecker(2, &[1], &mode).map_err(|e| e.to_string())?;
    ensure(rep.equal, || "schur form for (4,2), (3,1) unequal".into())?;
    Ok(format!("{count} formal cases and the Schur form"))
}

fn c7() -> Outcome {
    for (t, k) in [(vec![1, 2], 1), (vec![1, 3], 1), (vec![1, 2, 3, 4], 1), (vec![1, 2, 3, 4], 2)] {
        let rep = verify_ciucu(&t, k, 3).map_err(|e| e.to_string())?;
        ensure(rep.equal, || format!("T={t:?} k={k} unequal"))?;
    }
    Ok("4 cases at N=3".into())
}

fn c8() -> Outcome {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    for (l, k) in [("2,1", 1), ("2,1", 2), ("2,2", 1)] {
        let rep = verify_kleber(&p(l), k, 3).map_err(|e| e.to_string())?;
        ensure(rep.equal, || format!("λ=({l}) k={k} unequal"))?;
    }
    // Rectangle: the summands are exactly the two products of the square identity.
    let (terms, _) = kleber_terms(&p("2,2"), 1).map_err(|e| e.to_string())?;
    let kir = verify_kirillov(2, 2, 3).map_err(|e| e.to_string())?;
    let mut cache = SchurCache::new(3);
    let prods: Vec<_> = terms.iter().map(|t| (t.sign, &cache.get(&t.plus) * &cache.get(&t.minus))).collect();
    let want = [
        &cache.get(&Partition::rectangle(2, 1)) * &cache.get(&Partition::rectangle(2, 3)),
        &cache.get(&Partition::rectangle(1, 2)) * &cache.get(&Partition::rectangle(3, 2)),
    ];
    ensure(prods.len() == 2 && prods.iter().all(|(s, _)| *s == 1), || format!("{} summands", prods.len()))?;
    ensure(want.iter().all(|w| prods.iter().any(|(_, q)| q == w)), || "summands differ".into())?;
    ensure(kir.equal && &prods[0].1 + &prods[1].1 == kir.rhs, || "square identity right side differs".into())?;
    Ok("3 cases; rectangle matches term by term".into())
}

fn c9() -> Outcome {
    let counts: Vec<u64> = [2, 4, 6, 8]
        .iter()
        .map(|&p| count_noncrossing_matchings(p))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts == [1, 2, 5, 14], || format!("counts {counts:?}"))?;
    for p in [2, 4, 6, 8] {
        let all = enumerate_noncrossing_matchings(p).map_err(|e| e.to_string())?;
        ensure(all.len() as u64 == count_noncrossing_matchings(p).unwrap(), || format!("{p} points"))?;
        ensure(all.iter().all(|m| m.pairs_odd_with_even() && m.is_noncrossing() && m.is_perfect(p)), || {
            format!("bad matching on {p} points")
        })?;
    }
    Ok("1, 2, 5, 14".into())
}

fn c10() -> Outcome {
    let mut cases: Vec<(Vec<i64>, u32)> = general_instances().into_iter().map(|l| (l, 3)).collect();
    cases.push((vec![5, 4, 3, 2], 3));
    cases.push((vec![2, 1], 2));
    cases.push((vec![5, 4, 3, 2], 2));
    let reports: Vec<AuditReport> = cases
        .par_iter()
        .map(|(l, n)| bijection_audit(l, *n).map_err(|e| format!("{l:?}: {e}")))
        .collect::<Result<_, _>>()?;
    for a in &reports {
        audit_ok(a)?;
    }
    let graphs: usize = reports.iter().map(|a| a.graphs_checked).sum();
    Ok(format!("{graphs} graphs from {} instances", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Jacobi-Trudi equals tableau Schur polynomials, |λ| <= 6, N = 2..4", c1),
        ("lattice path roundtrip on skew tableaux, |λ/μ| <= 6, N <= 4", c2),
        ("two-term identity, <= 4 parts, λ_1 <= 4, N = 3, plus (5,4,3,2)", c3),
        ("bijection audit on (2,1) at N=2 and (5,4,3,2) at N=2", c4),
        ("Dodgson condensation for r = 1, 2, 3", c5),
        ("Plücker relations, formal and Schur forms", c6),
        ("Ciucu's identity", c7),
        ("Kleber's identity and the rectangle reduction", c8),
        ("Catalan counts of noncrossing matchings", c9),
        ("trail properties on every audited graph", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let ms = t.elapsed().as_millis();
        match out {
            Ok(detail) => println!("PASS {:>2}  {name}  [{detail}] ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}  [{why}] ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
