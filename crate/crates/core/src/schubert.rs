//! Schubert polynomials from divided differences, Stanley symmetric
//! functions, and universal Schubert polynomials in Chern-class variables.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::permutation::Permutation;
use crate::poly::{divided_difference, super_schur, Alphabet, Family, Monomial, Polynomial, Var};
use crate::shapes::{parse_column_lengths, Partition};

/// `F_w = sum d_{w,alpha} s_alpha`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion(BTreeMap<Partition, u64>);

impl SchurExpansion {
    pub fn coefficient(&self, alpha: &Partition) -> u64 {
        self.0.get(alpha).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.0.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum d_alpha s_alpha(x_1, ..., x_k)`.
    pub fn evaluate(&self, k: u16) -> Polynomial {
        let xs: Vec<Polynomial> = (1..=k).map(Polynomial::x).collect();
        let mut out = Polynomial::zero();
        for (alpha, c) in self.iter() {
            out += super_schur(alpha, &xs, &[]).scale(&BigInt::from(c));
        }
        out
    }
}

impl FromIterator<(Partition, u64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut map = BTreeMap::new();
        for (a, c) in iter {
            if c > 0 {
                *map.entry(a).or_default() += c;
            }
        }
        Self(map)
    }
}

/// Coefficients `a_{i_1..i_n}` of `S_w(X)` in the basis
/// `e_{i_1}(x_1) e_{i_2}(x_1, x_2) ... e_{i_n}(x_1..x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EExpansion {
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

#[derive(Clone, Copy)]
enum Chain {
    SmallestAscent,
    #[cfg_attr(not(test), allow(dead_code))]
    LargestAscent,
}

fn top_polynomial(n: usize, double: bool) -> Polynomial {
    let mut f = Polynomial::one();
    for i in 1..n as u16 {
        for j in 1..=(n as u16 - i) {
            let factor = if double { &Polynomial::x(i) - &Polynomial::y(j) } else { Polynomial::x(i) };
            f = &f * &factor;
        }
    }
    f
}

fn schubert_via_chain(w: &Permutation, n: usize, double: bool, chain: Chain) -> Result<Polynomial> {
    w.require_in_group(n)?;
    let n = n.max(1);
    let top = Permutation::longest(n);
    let mut v = w.clone();
    let mut steps = Vec::new();
    while v != top {
        let ascents = (1..n as u32).filter(|&i| v.apply(i) < v.apply(i + 1));
        let i = match chain {
            Chain::SmallestAscent => ascents.min(),
            Chain::LargestAscent => ascents.max(),
        }
        .expect("a non-longest element has an ascent");
        v = v.mul_simple_right(i);
        steps.push(i as u16);
    }
    let mut f = top_polynomial(n, double);
    for &i in steps.iter().rev() {
        f = divided_difference(&f, i);
    }
    Ok(f)
}

/// `S_w(X;Y)` computed inside `S_n` by divided differences starting from
/// `prod_{i+j<=n} (x_i - y_j)`.
pub fn double_schubert(w: &Permutation, n: usize) -> Result<Polynomial> {
    schubert_via_chain(w, n, true, Chain::SmallestAscent)
}

/// `S_w(X) = S_w(X;0)`, computed in the smallest symmetric group holding `w`.
pub fn single_schubert(w: &Permutation) -> Polynomial {
    schubert_via_chain(w, w.size(), false, Chain::SmallestAscent).expect("w lies in S_size")
}

/// `d_{w,alpha}` counts tableaux of shape `alpha'` whose
/// column word is reduced for `w`. The column lengths of such a tableau are
/// the parts of `alpha`.
pub fn stanley_schur_expansion(w: &Permutation) -> SchurExpansion {
    w.reduced_words().iter().flat_map(|word| parse_column_lengths(word, None, 0)).map(|alpha| (alpha, 1)).collect()
}

/// `S_{1^m x w}(x_1, ..., x_k, 0, 0, ...)`.
pub fn stanley_truncation(w: &Permutation, k: usize, m: usize) -> Polynomial {
    assert!(m >= k, "truncation needs m >= k");
    single_schubert(&w.shift(m))
        .substitute_with(|v| (v.family == Family::X && v.index as usize > k).then(Polynomial::zero))
}

fn e_basis_keys(n: usize, degree: usize) -> Vec<Vec<u32>> {
    fn go(alpha: usize, n: usize, left: usize, key: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if alpha > n {
            if left == 0 {
                out.push(key.clone());
            }
            return;
        }
        // the remaining positions alpha..n can absorb at most sum alpha..n
        let capacity: usize = (alpha..=n).sum();
        if left > capacity {
            return;
        }
        for i in 0..=alpha.min(left) {
            key.push(i as u32);
            go(alpha + 1, n, left - i, key, out);
            key.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, degree, &mut Vec::new(), &mut out);
    out
}

/// Solves `columns * a = target` exactly; `None` if the system has no
/// solution or more than one.
fn solve_exact(columns: &[Polynomial], target: &Polynomial) -> Option<Vec<BigRational>> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in columns.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let k = columns.len();
    let mut rows = vec![vec![BigRational::zero(); k + 1]; index.len()];
    for (col, p) in columns.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[index[m]][col] = BigRational::from_integer(c.clone());
        }
    }
    for (m, c) in target.terms() {
        rows[index[m]][k] = BigRational::from_integer(c.clone());
    }

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &factor * p;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| rows[r][k].clone()).collect())
}

/// Expands `S_w(X)` in the `e_{i_1}(x_1) ... e_{i_n}(x_1..x_n)` basis with
/// the smallest `n` such that `w` lies in `S_{n+1}`.
pub fn e_expansion(w: &Permutation) -> EExpansion {
    let n = w.size().max(2) - 1;
    e_expansion_in(w, n)
}

/// As [`e_expansion`], for a chosen `n` with `w` in `S_{n+1}`.
pub fn e_expansion_in(w: &Permutation, n: usize) -> EExpansion {
    assert!(w.in_group(n + 1), "{w} is not in S_{}", n + 1);
    let target = single_schubert(w);
    let keys = e_basis_keys(n, w.length());
    let elementary: Vec<Alphabet> =
        (1..=n as u16).map(|alpha| Alphabet::elementary(&(1..=alpha).map(Polynomial::x).collect::<Vec<_>>())).collect();
    let products: Vec<Polynomial> = keys
        .iter()
        .map(|key| key.iter().enumerate().fold(Polynomial::one(), |acc, (a, &i)| &acc * &elementary[a].get(i as i64)))
        .collect();
    let solution = solve_exact(&products, &target).expect("elementary products form a basis");
    let terms = keys
        .into_iter()
        .zip(solution)
        .filter(|(_, a)| !a.is_zero())
        .map(|(key, a)| {
            assert!(a.is_integer(), "non-integral coefficient {a} for {w}");
            (key, a.to_integer())
        })
        .collect();
    EExpansion { n, terms }
}

fn universal_single_in(w: &Permutation, family: Family) -> Polynomial {
    let expansion = e_expansion(w);
    let mut out = Polynomial::zero();
    for (key, a) in &expansion.terms {
        let mut term = Polynomial::constant(a.clone());
        for (j, &i) in key.iter().enumerate() {
            term = &term * &Polynomial::chern(family, i as i64, j as u16 + 1);
        }
        out += term;
    }
    out
}

/// `S_w(c) = sum a_{i_1..i_n} c_{i_1}(1) ... c_{i_n}(n)`.
pub fn universal_single(w: &Permutation) -> Polynomial {
    universal_single_in(w, Family::C)
}

/// `S_w(c;d) = sum_{u.v=w} (-1)^{l(u)} S_{u^{-1}}(d) S_v(c)`.
pub fn universal_double(w: &Permutation) -> Polynomial {
    let mut memo: HashMap<(Permutation, Family), Polynomial> = HashMap::new();
    let mut single =
        |p: Permutation, f: Family| memo.entry((p.clone(), f)).or_insert_with(|| universal_single_in(&p, f)).clone();
    let mut out = Polynomial::zero();
    for u in w.left_factors() {
        let v = &u.inverse() * w;
        let term = &single(u.inverse(), Family::D) * &single(v, Family::C);
        if u.length() % 2 == 1 {
            out = &out - &term;
        } else {
            out += term;
        }
    }
    out
}

/// True when every coefficient of `f` is nonnegative.
pub fn is_nonnegative(f: &Polynomial) -> bool {
    f.terms().all(|(_, c)| !c.is_negative())
}

/// Evaluates a universal polynomial on the Chern roots of the flag
/// `F_j = x_1 + ... + x_j` and `G_j = y_1 + ... + y_j`.
pub fn chern_roots(f: &Polynomial) -> Polynomial {
    let mut alphabets: HashMap<(Family, u16), Alphabet> = HashMap::new();
    for v in f.variables() {
        let roots: fn(u16) -> Polynomial = match v.family {
            Family::C => Polynomial::x,
            Family::D => Polynomial::y,
            _ => continue,
        };
        alphabets
            .entry((v.family, v.column))
            .or_insert_with(|| Alphabet::elementary(&(1..=v.column).map(roots).collect::<Vec<_>>()));
    }
    f.substitute_with(|v: Var| alphabets.get(&(v.family, v.column)).map(|a| a.get(v.index as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(i: u16) -> Polynomial {
        Polynomial::x(i)
    }

    fn y(i: u16) -> Polynomial {
        Polynomial::y(i)
    }

    fn c(i: u16, j: u16) -> Polynomial {
        Polynomial::var(Var::chern(Family::C, i, j))
    }

    fn d(i: u16, j: u16) -> Polynomial {
        Polynomial::var(Var::chern(Family::D, i, j))
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn double_schubert_examples() {
        assert_eq!(double_schubert(&Permutation::identity(), 3).unwrap(), Polynomial::one());
        let expected = &(&(&x(1) - &y(1)) * &(&x(1) - &y(2))) * &(&x(2) - &y(1));
        assert_eq!(double_schubert(&p("321"), 3).unwrap(), expected);
        assert!(double_schubert(&p("4123"), 3).is_err());
    }

    #[test]
    fn single_schubert_examples() {
        assert_eq!(single_schubert(&p("21")), x(1));
        assert_eq!(single_schubert(&p("312")), x(1).pow(2));
        assert_eq!(single_schubert(&p("32541")).to_string(), "x_1^3x_2x_3x_4 + x_1^2x_2^2x_3x_4 + x_1^2x_2x_3^2x_4");
    }

    #[test]
    fn schubert_chain_independence() {
        for w in Permutation::all(4) {
            let a = schubert_via_chain(&w, 4, true, Chain::SmallestAscent).unwrap();
            let b = schubert_via_chain(&w, 4, true, Chain::LargestAscent).unwrap();
            assert_eq!(a, b, "{w}");
        }
    }

    #[test]
    fn double_schubert_stability() {
        for w in Permutation::all(4) {
            assert_eq!(double_schubert(&w, 4).unwrap(), double_schubert(&w, 5).unwrap(), "{w}");
        }
    }

    #[test]
    fn single_schubert_is_y_specialization() {
        for w in Permutation::all(4) {
            let double = double_schubert(&w, 4).unwrap();
            let specialized = double.substitute_with(|v| (v.family == Family::Y).then(Polynomial::zero));
            assert_eq!(single_schubert(&w), specialized);
            assert!(is_nonnegative(&specialized));
        }
    }

    #[test]
    fn stanley_examples() {
        let s1 = stanley_schur_expansion(&p("21"));
        assert_eq!(s1.iter().collect::<Vec<_>>(), vec![(&part(&[1]), 1)]);
        let e = stanley_schur_expansion(&p("321"));
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![(&part(&[2, 1]), 1)]);
        let e = stanley_schur_expansion(&p("312"));
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![(&part(&[2]), 1)]);
    }

    #[test]
    fn stanley_truncation_examples() {
        assert_eq!(stanley_truncation(&p("21"), 1, 1), x(1));
        let s2 = &(&x(1).pow(2) + &(&x(1) * &x(2))) + &x(2).pow(2);
        assert_eq!(stanley_truncation(&p("312"), 2, 2), s2);
        let s21 = super_schur(&part(&[2, 1]), &[x(1), x(2)], &[]);
        assert_eq!(stanley_truncation(&p("321"), 2, 2), s21);
    }

    #[test]
    fn stanley_stability_on_s4() {
        for w in Permutation::all(4) {
            let expansion = stanley_schur_expansion(&w);
            assert!(expansion.iter().all(|(a, _)| a.size() as usize == w.length()));
            for k in 1..=3 {
                let at_k = stanley_truncation(&w, k, k);
                assert_eq!(at_k, stanley_truncation(&w, k, k + 1), "{w} k={k}");
                assert_eq!(at_k, expansion.evaluate(k as u16), "{w} k={k}");
            }
        }
    }

    #[test]
    fn e_expansion_examples() {
        let id = e_expansion(&Permutation::identity());
        assert_eq!(id.terms.len(), 1);
        assert_eq!(id.terms[&vec![0]], BigInt::from(1));
        let e = e_expansion(&p("312"));
        assert_eq!(e.n, 2);
        let expected: BTreeMap<Vec<u32>, BigInt> =
            [(vec![1, 1], BigInt::from(1)), (vec![0, 2], BigInt::from(-1))].into_iter().collect();
        assert_eq!(e.terms, expected);
        let s1 = e_expansion(&p("21"));
        assert_eq!(s1.terms, [(vec![1], BigInt::from(1))].into_iter().collect());
    }

    #[test]
    fn e_expansion_is_stable_in_n() {
        for w in Permutation::all(4) {
            let small = e_expansion_in(&w, 3);
            let large = e_expansion_in(&w, 4);
            let padded: BTreeMap<Vec<u32>, BigInt> = small
                .terms
                .into_iter()
                .map(|(mut k, a)| {
                    k.push(0);
                    (k, a)
                })
                .collect();
            assert_eq!(padded, large.terms, "{w}");
        }
    }

    #[test]
    fn universal_examples() {
        assert_eq!(universal_single(&Permutation::identity()), Polynomial::one());
        assert_eq!(universal_single(&p("21")), c(1, 1));
        assert_eq!(universal_single(&p("312")), &(&c(1, 1) * &c(1, 2)) - &c(2, 2));
        assert_eq!(universal_double(&Permutation::identity()), Polynomial::one());
        assert_eq!(universal_double(&p("21")), &c(1, 1) - &d(1, 1));
        assert_eq!(universal_double(&p("312")).to_string(), "c_1(1)c_1(2) - c_1(1)d_1(2) - c_2(2) + d_2(2)");
    }

    #[test]
    fn universal_double_matches_pair_scan() {
        for w in Permutation::all(4) {
            let mut scan = Polynomial::zero();
            for v in Permutation::all(4) {
                let u = w.clone() * v.inverse();
                if u.length() + v.length() != w.length() {
                    continue;
                }
                let uinv = u.inverse();
                let du = universal_single(&uinv).replace_family(Family::C, Some(Family::D), |_| true);
                let term = &du * &universal_single(&v);
                scan = if u.length() % 2 == 1 { &scan - &term } else { &scan + &term };
            }
            assert_eq!(scan, universal_double(&w), "{w}");
        }
    }

    #[test]
    fn universal_double_specializes_to_double_schubert() {
        for w in Permutation::all(4) {
            assert_eq!(chern_roots(&universal_double(&w)), double_schubert(&w, 4).unwrap(), "{w}");
        }
    }

    #[test]
    fn collapsing_the_diagonal_kills_the_example() {
        let f = universal_double(&p("312")).replace_family(Family::D, Some(Family::C), |j| j == 2);
        assert!(f.is_zero());
    }
}
