//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check is exact; time limits are part of the criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use quiver_schubert::quiver::{
    quiver_coefficients, split_double_schubert, split_double_sequences, split_single, split_single_sequences,
};
use quiver_schubert::schubert::{single_schubert, universal_double};
use quiver_schubert::verify::{
    check_column_splitting, check_diagonal_substitution, check_monomials, check_split_oracle, check_stanley,
    check_table_agreement, check_three_alphabet, check_universal_expansion, sample_permutations, DEFAULT_SEED,
};
use quiver_schubert::{Partition, Permutation, Polynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn p(s: &str) -> Permutation {
    s.parse().expect("valid permutation")
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_of<I>(cases: I) -> Result<usize, String>
where
    I: IntoIterator<Item = Result<(), String>>,
{
    let mut count = 0;
    for c in cases {
        c?;
        count += 1;
    }
    Ok(count)
}

fn example_312() -> Outcome {
    let w = p("312");
    let text = universal_double(&w).to_string();
    let expected = "c_1(1)c_1(2) - c_1(1)d_1(2) - c_2(2) + d_2(2)";
    ensure(text == expected, || format!("universal 312 printed {text}"))?;
    let table = quiver_coefficients(&w, 2).map_err(|e| e.to_string())?;
    let e = Partition::empty();
    ensure(table.len() == 2, || format!("table has {} entries", table.len()))?;
    ensure(table.coefficient(&[e.clone(), part(&[2]), e.clone()]) == 1, || "missing (0,(2),0)".into())?;
    ensure(table.coefficient(&[e.clone(), part(&[1]), part(&[1])]) == 1, || "missing (0,(1),(1))".into())?;
    Ok(format!("{expected}; table {{(0,(2),0): 1, (0,(1),(1)): 1}}"))
}

fn example_321() -> Outcome {
    let w = p("321");
    let r = split_double_schubert(&w, &[1, 2], &[1, 2]).map_err(|e| e.to_string())?;
    let seqs = split_double_sequences(&w, &[1, 2], &[1, 2]).map_err(|e| e.to_string())?;
    ensure(r.raw.total() == 4 && seqs.len() == 4, || format!("found {} sequences", r.raw.total()))?;
    let (x, y) = (Polynomial::x, Polynomial::y);
    let product = &(&(&x(1) - &y(1)) * &(&x(1) - &y(2))) * &(&x(2) - &y(1));
    ensure(r.polynomial == product, || format!("polynomial {}", r.polynomial))?;
    Ok("4 sequences; (x_1-y_1)(x_1-y_2)(x_2-y_1)".into())
}

fn example_32541() -> Outcome {
    let w = p("32541");
    let r = split_single(&w, &[1, 3, 4]).map_err(|e| e.to_string())?;
    let mut words: Vec<Vec<u32>> =
        split_single_sequences(&w, &[1, 3, 4]).map_err(|e| e.to_string())?.into_iter().map(|s| s.word).collect();
    words.sort();
    ensure(r.table.total() == 2, || format!("found {} nonvanishing sequences", r.table.total()))?;
    ensure(words == vec![vec![2, 1, 4, 2, 3, 4], vec![4, 2, 1, 2, 3, 4]], || format!("words {words:?}"))?;
    let expected = "x_1^3x_2x_3x_4 + x_1^2x_2^2x_3x_4 + x_1^2x_2x_3^2x_4";
    ensure(r.polynomial.to_string() == expected, || format!("polynomial {}", r.polynomial))?;
    ensure(r.polynomial == single_schubert(&w), || "differs from divided differences".into())?;
    Ok(format!("2 sequences (s4s2s1s2s3s4, s2s1s4s2s3s4); {expected}"))
}

fn oracle_suite_s4() -> Outcome {
    let perms = Permutation::all(4);
    let a = all_of(perms.iter().map(|w| check_universal_expansion(w, 3)))?;
    let b = all_of(perms.iter().map(|w| check_table_agreement(w, 3)))?;
    let mut pairs = 0;
    for w in &perms {
        pairs += check_split_oracle(w, 4)?;
    }
    let d = all_of(perms.iter().map(|w| check_monomials(w, 4)))?;
    ensure(a == 24 && b == 24 && d == 24, || "not every permutation was checked".into())?;
    Ok(format!("24 permutations: (a) (b) (d) exact; (c) {pairs} compatible (a,b) pairs"))
}

fn identity_suite() -> Outcome {
    let s3 = Permutation::all(3);
    let s4 = Permutation::all(4);
    let same = all_of(s3.iter().chain(&s4).flat_map(|w| (0..=2).map(move |m| check_diagonal_substitution(w, m))))?;
    let three = all_of(s3.iter().chain(&s4).map(check_three_alphabet))?;
    let split = all_of(s3.iter().flat_map(|w| (1..=2).map(move |r| check_column_splitting(w, r))))?;
    Ok(format!("diagonal substitution {same} cases, three-alphabet {three} cases, column splittings {split} cases"))
}

fn stanley_suite() -> Outcome {
    let perms = Permutation::all(4);
    let n = all_of(perms.iter().flat_map(|w| (1..=3).map(move |k| check_stanley(w, k))))?;
    Ok(format!("{n} (w, k) cases"))
}

fn s5_sample() -> Outcome {
    let sample = sample_permutations(5, 10, DEFAULT_SEED);
    for w in &sample {
        check_universal_expansion(w, 4)?;
        check_table_agreement(w, 4)?;
    }
    let names: Vec<String> = sample.iter().map(|w| w.to_string()).collect();
    Ok(format!("seed {DEFAULT_SEED}: {}", names.join(" ")))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1. worked example 312", Duration::from_secs(1), example_312),
        ("2. worked example 321", Duration::from_secs(1), example_321),
        ("3. worked example 32541", Duration::from_secs(1), example_32541),
        ("4. oracle equivalence on S4", Duration::from_secs(300), oracle_suite_s4),
        ("5. identity suite", Duration::from_secs(60), identity_suite),
        ("6. Stanley stability", Duration::from_secs(60), stanley_suite),
        ("7. S5 sample", Duration::from_secs(600), s5_sample),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("[PASS] {name} ({elapsed:.2?}, limit {limit:?}): {detail}"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {name} ({elapsed:.2?}, limit {limit:?}): {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
