//! Cross-checks between the counting formulas and the divided-difference
//! oracle, grouped into suites over small symmetric groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::permutation::Permutation;
use crate::poly::{Family, Monomial, Polynomial, Var};
use crate::quiver::{
    expand_universal, monomial_coefficient, quiver_coefficients, quiver_coefficients_skew, split_double_schubert,
    stanley_product,
};
use crate::schubert::{double_schubert, stanley_schur_expansion, stanley_truncation, universal_double};

pub type CheckResult = std::result::Result<(), String>;

/// `expand_universal(quiver table) == universal_double`.
pub fn check_universal_expansion(w: &Permutation, n: usize) -> CheckResult {
    let table = quiver_coefficients(w, n).map_err(|e| e.to_string())?;
    let lhs = expand_universal(&table, n);
    let rhs = universal_double(w);
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{w}: table expands to {lhs}, expected {rhs}"))
    }
}

/// Straight, skew and Stanley-product tables coincide.
pub fn check_table_agreement(w: &Permutation, n: usize) -> CheckResult {
    let straight = quiver_coefficients(w, n).map_err(|e| e.to_string())?;
    let skew = quiver_coefficients_skew(w, n).map_err(|e| e.to_string())?;
    let product = stanley_product(w, n).map_err(|e| e.to_string())?;
    if straight != skew {
        return Err(format!("{w}: skew table differs"));
    }
    if straight != product {
        return Err(format!("{w}: Stanley product differs"));
    }
    let degree_ok = straight.iter().all(|(k, _)| k.iter().map(|l| l.size() as usize).sum::<usize>() == w.length());
    if !degree_ok {
        return Err(format!("{w}: a key has the wrong total size"));
    }
    Ok(())
}

fn subsets(lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if hi < lo {
        return Vec::new();
    }
    let n = hi - lo + 1;
    (1u32..(1 << n)).map(|mask| (lo..=hi).filter(|i| mask & (1 << (i - lo)) != 0).collect()).collect()
}

/// Every compatible pair `(a, b)` with `a` in `1..n-1` and `b` in `0..n-1`
/// splits `S_w(X;Y)` correctly. Returns the number of pairs checked.
pub fn check_split_oracle(w: &Permutation, n: usize) -> std::result::Result<usize, String> {
    let oracle = double_schubert(w, n).map_err(|e| e.to_string())?;
    let top = n as u32 - 1;
    let winv = w.inverse();
    let mut pairs = 0;
    for a in subsets(1, top).into_iter().filter(|a| w.is_compatible(a)) {
        for b in subsets(0, top).into_iter().filter(|b| winv.is_compatible(b)) {
            let r = split_double_schubert(w, &a, &b).map_err(|e| e.to_string())?;
            if r.polynomial != oracle {
                return Err(format!("{w} a={a:?} b={b:?}: split gives {}", r.polynomial));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Every monomial of degree `l(w)` in `x_1..x_{n-1}, y_1..y_{n-1}` has the
/// coefficient predicted by the reduced-word rule.
pub fn check_monomials(w: &Permutation, n: usize) -> CheckResult {
    let oracle = double_schubert(w, n).map_err(|e| e.to_string())?;
    let m = n - 1;
    let mut all = Vec::new();
    compositions(w.length() as u32, 2 * m, &mut Vec::new(), &mut all);
    let mut nonzero = 0;
    for exps in all {
        let (u, v) = exps.split_at(m);
        let mono = Monomial::from_powers(
            (0..m).map(|i| (Var::x(i as u16 + 1), u[i])).chain((0..m).map(|i| (Var::y(i as u16 + 1), v[i]))),
        );
        let expected = oracle.coefficient(&mono);
        let got = monomial_coefficient(w, u, v);
        if got != expected {
            return Err(format!("{w}: coefficient of {mono} is {expected}, rule gives {got}"));
        }
        if got != BigInt::from(0) {
            nonzero += 1;
        }
    }
    if nonzero != oracle.len() {
        return Err(format!("{w}: oracle has monomials outside x_1..x_{m}, y_1..y_{m}"));
    }
    Ok(())
}

/// Substituting one fresh alphabet for both `c(j)` and `d(j)`, `j > m`,
/// keeps `S_w(c;d)` when `w` lies in `S_{m+1}` and kills it otherwise.
pub fn check_diagonal_substitution(w: &Permutation, m: usize) -> CheckResult {
    let f = universal_double(w);
    let later = |j: u16| j as usize > m;
    let g = f.replace_family(Family::C, Some(Family::B), later).replace_family(Family::D, Some(Family::B), later);
    let expected = if w.in_group(m + 1) { f } else { Polynomial::zero() };
    if g == expected {
        Ok(())
    } else {
        Err(format!("{w}, m={m}: got {g}, expected {expected}"))
    }
}

fn left_right(w: &Permutation) -> Vec<(Permutation, Permutation)> {
    w.left_factors().into_iter().map(|u| (u.clone(), &u.inverse() * w)).collect()
}

/// `S_w(c;d) = sum_{u.v=w} S_u(b;d) S_v(c;b)`.
pub fn check_three_alphabet(w: &Permutation) -> CheckResult {
    let mut sum = Polynomial::zero();
    for (u, v) in left_right(w) {
        let left = universal_double(&u).replace_family(Family::C, Some(Family::B), |_| true);
        let right = universal_double(&v).replace_family(Family::D, Some(Family::B), |_| true);
        sum += &left * &right;
    }
    let expected = universal_double(w);
    if sum == expected {
        Ok(())
    } else {
        Err(format!("{w}: convolution gives {sum}"))
    }
}

/// Both splittings of `S_w(c;d)` at column `r`: `c(1..r)` against the
/// later `c`, and `d(1..r)` against the later `d`.
pub fn check_column_splitting(w: &Permutation, r: usize) -> CheckResult {
    let expected = universal_double(w);
    let low = move |j: u16| (j as usize) <= r;
    let high = move |j: u16| (j as usize) > r;
    let mut first = Polynomial::zero();
    let mut second = Polynomial::zero();
    for (u, v) in left_right(w) {
        let fu = universal_double(&u);
        let fv = universal_double(&v);
        let no_d = |f: &Polynomial| f.replace_family(Family::D, None, |_| true);
        let no_c = |f: &Polynomial| f.replace_family(Family::C, None, |_| true);
        first += &fu.replace_family(Family::C, None, low) * &no_d(&fv).replace_family(Family::C, None, high);
        second += &no_c(&fu).replace_family(Family::D, None, high) * &fv.replace_family(Family::D, None, low);
    }
    if first != expected {
        return Err(format!("{w}, r={r}: c-splitting gives {first}"));
    }
    if second != expected {
        return Err(format!("{w}, r={r}: d-splitting gives {second}"));
    }
    Ok(())
}

/// `F_w(x_1..x_k)` from `1^m x w` agrees for `m = k, k+1` and with the
/// tableau-counted Schur expansion.
pub fn check_stanley(w: &Permutation, k: usize) -> CheckResult {
    let expansion = stanley_schur_expansion(w);
    if expansion.iter().any(|(a, _)| a.size() as usize != w.length()) {
        return Err(format!("{w}: Schur expansion has a term of the wrong degree"));
    }
    let at_k = stanley_truncation(w, k, k);
    if at_k != stanley_truncation(w, k, k + 1) {
        return Err(format!("{w}, k={k}: truncation depends on m"));
    }
    if at_k != expansion.evaluate(k as u16) {
        return Err(format!("{w}, k={k}: truncation differs from the Schur expansion"));
    }
    Ok(())
}

/// `count` distinct permutations of `S_n` drawn with a seeded ChaCha8 stream.
pub fn sample_permutations(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = Permutation::all(n);
    let mut sample: Vec<Permutation> = all.choose_multiple(&mut rng, count).cloned().collect();
    sample.sort_by_key(|w| w.one_line(n));
    sample
}

pub const DEFAULT_SEED: u64 = 20_020_101;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    S3,
    S4,
    S5Sample,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Error> {
        match s {
            "s3" => Ok(Suite::S3),
            "s4" => Ok(Suite::S4),
            "s5-sample" => Ok(Suite::S5Sample),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?} (expected s3, s4 or s5-sample)"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::S3 => "s3",
            Suite::S4 => "s4",
            Suite::S5Sample => "s5-sample",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub failures: Vec<String>,
    pub cases: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_check(name: &str, cases: impl IntoIterator<Item = CheckResult>) -> Check {
    let mut check = Check { name: name.to_string(), failures: Vec::new(), cases: 0 };
    for r in cases {
        check.cases += 1;
        if let Err(e) = r {
            check.failures.push(e);
        }
    }
    check
}

/// Runs every check of `suite`. The seed only affects `s5-sample`.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<Check> {
    let size = match suite {
        Suite::S3 => 3,
        Suite::S4 => 4,
        Suite::S5Sample => 5,
    };
    let n = size - 1;
    let perms = match suite {
        Suite::S5Sample => sample_permutations(5, 10, seed),
        _ => Permutation::all(size),
    };
    let mut checks = vec![
        run_check("universal expansion", perms.iter().map(|w| check_universal_expansion(w, n))),
        run_check("straight = skew = Stanley product", perms.iter().map(|w| check_table_agreement(w, n))),
    ];
    if suite == Suite::S5Sample {
        return checks;
    }
    checks.push(run_check(
        "splitting vs divided differences",
        perms.iter().map(|w| check_split_oracle(w, size).map(|_| ())),
    ));
    checks.push(run_check("monomial coefficients", perms.iter().map(|w| check_monomials(w, size))));
    checks.push(run_check(
        "diagonal substitution",
        perms.iter().flat_map(|w| (0..=2).map(move |m| check_diagonal_substitution(w, m))),
    ));
    checks.push(run_check("three-alphabet convolution", perms.iter().map(check_three_alphabet)));
    checks.push(run_check(
        "column splittings",
        perms.iter().flat_map(|w| (1..=2).map(move |r| check_column_splitting(w, r))),
    ));
    checks.push(run_check(
        "Stanley stability",
        perms.iter().flat_map(|w| (1..=size - 1).map(move |k| check_stanley(w, k))),
    ));
    checks
}
