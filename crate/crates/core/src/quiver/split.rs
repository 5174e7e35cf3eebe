//! Splitting double and single Schubert polynomials along blocks of
//! variables, and single monomial coefficients.

use num_bigint::BigInt;

use super::{enumerate_sequences, tally_sequences, Bound, SchurSeqExpansion, TableauSequence};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::poly::{super_schur, super_schur_vanishes, Polynomial};
use crate::shapes::Partition;

/// A splitting table. `raw` counts every admissible tableau sequence;
/// `table` keeps the keys whose Schur factors are all nonzero, and
/// `polynomial` is the assembled sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub raw: SchurSeqExpansion,
    pub table: SchurSeqExpansion,
    pub polynomial: Polynomial,
}

/// The variable blocks `(X, Y)` attached to one position.
type Blocks = Vec<(Vec<Polynomial>, Vec<Polynomial>)>;

fn block(make: fn(u16) -> Polynomial, lo: u32, hi: u32) -> Vec<Polynomial> {
    (lo + 1..=hi).map(|i| make(i as u16)).collect()
}

fn check_sequence(seq: &[u32], name: &str, min: u32) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::InvalidSequence(format!("{name} must be nonempty")));
    }
    if seq[0] < min || seq.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidSequence(format!(
            "{name} = {seq:?} must be strictly increasing with entries >= {min}"
        )));
    }
    Ok(())
}

fn nonvanishing(key: &[Partition], blocks: &Blocks) -> bool {
    key.iter().zip(blocks).all(|(l, (x, y))| !super_schur_vanishes(l, x.len(), y.len()))
}

fn assemble_split(raw: SchurSeqExpansion, blocks: &Blocks) -> SplitResult {
    let table = raw.filter(|key| nonvanishing(key, blocks));
    let polynomial = super::assemble(&table, |i, lambda| {
        let (x, y) = &blocks[i - 1];
        super_schur(lambda, x, y)
    });
    SplitResult { raw, table, polynomial }
}

fn double_layout(w: &Permutation, a: &[u32], b: &[u32]) -> Result<(Vec<Bound>, Blocks)> {
    check_sequence(a, "a", 1)?;
    check_sequence(b, "b", 0)?;
    w.require_compatible(a)?;
    w.inverse().require_compatible(b)?;
    let (p, q) = (a.len(), b.len());
    let lower = |m: u32| Bound { min_exclusive: m, max: None };
    let mut bounds = Vec::with_capacity(p + q - 1);
    let mut blocks: Blocks = Vec::with_capacity(p + q - 1);
    // positions 1..q-1 carry Y_q, ..., Y_2
    for j in 1..q {
        let k = q - j; // Y_{k+1}
        bounds.push(lower(b[k - 1]));
        blocks.push((Vec::new(), block(Polynomial::y, b[k - 1], b[k])));
    }
    bounds.push(lower(0));
    blocks.push((block(Polynomial::x, 0, a[0]), block(Polynomial::y, 0, b[0])));
    for i in 1..p {
        bounds.push(lower(a[i - 1]));
        blocks.push((block(Polynomial::x, a[i - 1], a[i]), Vec::new()));
    }
    Ok((bounds, blocks))
}

/// `S_w(X;Y) = sum c_lambda s_{lambda^1}(0/Y_q) ... s_{lambda^q}(X_1/Y_1)
/// ... s_{lambda^{p+q-1}}(X_p)`, where `c_lambda` counts tableau sequences
/// strictly bounded below by `(b_{q-1}, ..., b_1, 0, a_1, ..., a_{p-1})`.
pub fn split_double_schubert(w: &Permutation, a: &[u32], b: &[u32]) -> Result<SplitResult> {
    let (bounds, blocks) = double_layout(w, a, b)?;
    Ok(assemble_split(tally_sequences(w, &bounds), &blocks))
}

/// The tableau sequences of [`split_double_schubert`] with nonzero terms.
pub fn split_double_sequences(w: &Permutation, a: &[u32], b: &[u32]) -> Result<Vec<TableauSequence>> {
    let (bounds, blocks) = double_layout(w, a, b)?;
    Ok(enumerate_sequences(w, &bounds).into_iter().filter(|s| nonvanishing(&s.key(), &blocks)).collect())
}

fn single_layout(w: &Permutation, a: &[u32]) -> Result<(Vec<Bound>, Blocks)> {
    check_sequence(a, "a", 1)?;
    w.require_compatible(a)?;
    let mut bounds = Vec::with_capacity(a.len());
    let mut blocks: Blocks = Vec::with_capacity(a.len());
    let mut prev = 0;
    for &ai in a {
        bounds.push(Bound { min_exclusive: prev, max: None });
        blocks.push((block(Polynomial::x, prev, ai), Vec::new()));
        prev = ai;
    }
    Ok((bounds, blocks))
}

/// `S_w(X) = sum c_lambda s_{lambda^1}(X_1) ... s_{lambda^p}(X_p)`, where
/// `c_lambda` counts tableau sequences strictly bounded below by
/// `(0, a_1, ..., a_{p-1})`.
pub fn split_single(w: &Permutation, a: &[u32]) -> Result<SplitResult> {
    let (bounds, blocks) = single_layout(w, a)?;
    Ok(assemble_split(tally_sequences(w, &bounds), &blocks))
}

/// The tableau sequences of [`split_single`] with nonzero terms.
pub fn split_single_sequences(w: &Permutation, a: &[u32]) -> Result<Vec<TableauSequence>> {
    let (bounds, blocks) = single_layout(w, a)?;
    Ok(enumerate_sequences(w, &bounds).into_iter().filter(|s| nonvanishing(&s.key(), &blocks)).collect())
}

/// Coefficient of `x^u y^v` in `S_w(X;Y)`, read off from reduced words
/// that split into increasing runs (one per `y_{n-1}, ..., y_1`) followed by
/// decreasing runs (one per `x_1, ..., x_{n-1}`).
pub fn monomial_coefficient(w: &Permutation, u: &[u32], v: &[u32]) -> BigInt {
    let degree: u32 = u.iter().chain(v).sum();
    if degree as usize != w.length() {
        return BigInt::from(0);
    }
    let n = w.size().max(u.len() + 1).max(v.len() + 1).max(2);
    let at = |s: &[u32], k: usize| s.get(k - 1).copied().unwrap_or(0) as usize;
    // g[i] = v_{n-i} + ... + v_{n-1}, f[i] = g[n-1] + u_1 + ... + u_i
    let mut g = vec![0usize; n];
    for i in 1..n {
        g[i] = g[i - 1] + at(v, n - i);
    }
    let mut f = vec![g[n - 1]; n];
    for i in 1..n {
        f[i] = f[i - 1] + at(u, i);
    }
    let ok = |e: &[u32]| {
        (1..n).all(|i| {
            let up = &e[g[i - 1]..g[i]];
            let down = &e[f[i - 1]..f[i]];
            up.windows(2).all(|p| p[0] < p[1])
                && up.first().is_none_or(|&x| x as usize >= n - i)
                && down.windows(2).all(|p| p[0] > p[1])
                && down.last().is_none_or(|&x| x as usize >= i)
        })
    };
    let count = w.reduced_words().iter().filter(|e| ok(e)).count();
    let sign = if g[n - 1].is_multiple_of(2) { 1 } else { -1 };
    BigInt::from(sign * count as i64)
}
