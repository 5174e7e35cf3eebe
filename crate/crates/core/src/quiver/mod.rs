//! Quiver coefficients of universal Schubert polynomials, counted by
//! sequences of tableaux whose concatenated column word is reduced.

mod giambelli;
mod split;

pub use giambelli::{giambelli_i, giambelli_ii, ClassSymbol, GiambelliExpression};
pub use split::{
    monomial_coefficient, split_double_schubert, split_double_sequences, split_single, split_single_sequences,
    SplitResult,
};

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::permutation::{Permutation, ReducedWord};
use crate::poly::{schur_det, Alphabet, Family, Polynomial};
use crate::schubert::stanley_schur_expansion;
use crate::shapes::{parse_column_lengths, parse_column_word, Partition, SkewTableau, Tableau};

/// Integer coefficients indexed by fixed-length sequences of partitions.
/// Empty partitions are stored explicitly so every key has length `arity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSeqExpansion {
    arity: usize,
    entries: BTreeMap<Vec<Partition>, u64>,
}

impl SchurSeqExpansion {
    pub fn new(arity: usize) -> Self {
        Self { arity, entries: BTreeMap::new() }
    }

    /// The table `{(empty, ..., empty): 1}`.
    pub fn unit(arity: usize) -> Self {
        let mut t = Self::new(arity);
        t.add(vec![Partition::empty(); arity], 1);
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add(&mut self, key: Vec<Partition>, count: u64) {
        assert_eq!(key.len(), self.arity, "key has the wrong length");
        if count > 0 {
            *self.entries.entry(key).or_default() += count;
        }
    }

    pub fn coefficient(&self, key: &[Partition]) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Partition], u64)> {
        self.entries.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Keeps the entries whose key satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&[Partition]) -> bool) -> Self {
        Self {
            arity: self.arity,
            entries: self.entries.iter().filter(|(k, _)| keep(k)).map(|(k, &c)| (k.clone(), c)).collect(),
        }
    }

    /// Entries whose partitions are empty outside positions `p..=q`
    /// (1-based).
    pub fn restrict(&self, p: usize, q: usize) -> Self {
        self.filter(|key| key.iter().enumerate().all(|(i, l)| (p..=q).contains(&(i + 1)) || l.is_empty()))
    }

    /// Product of two tables whose supports live on disjoint positions:
    /// keys are merged position by position.
    pub fn disjoint_product(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::new(self.arity);
        for (ka, ca) in self.iter() {
            for (kb, cb) in other.iter() {
                let key = ka
                    .iter()
                    .zip(kb)
                    .map(|(a, b)| {
                        assert!(a.is_empty() || b.is_empty(), "supports overlap");
                        if a.is_empty() {
                            b.clone()
                        } else {
                            a.clone()
                        }
                    })
                    .collect();
                out.add(key, ca * cb);
            }
        }
        out
    }

    pub fn merge(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add(k.to_vec(), c);
        }
    }

    /// `{"w": ..., "n": ..., "entries": [{"lambda": [[..], ..], "coeff": c}]}`.
    pub fn to_json(&self, w: &Permutation, n: usize) -> Value {
        let entries: Vec<Value> = self
            .iter()
            .map(|(key, c)| {
                let lambda: Vec<Value> = key.iter().map(|l| json!(l.parts())).collect();
                json!({ "lambda": lambda, "coeff": c })
            })
            .collect();
        json!({ "w": w.to_string(), "n": n, "entries": entries })
    }
}

impl std::fmt::Display for SchurSeqExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (key, c) in self.iter() {
            let parts: Vec<String> = key.iter().map(|l| l.to_string()).collect();
            writeln!(f, "{c}  [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Admissible entries for one tableau of a sequence: `min_exclusive < e <= max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Bound {
    pub min_exclusive: u32,
    pub max: Option<u32>,
}

impl Bound {
    fn admits(&self, e: u32) -> bool {
        e > self.min_exclusive && self.max.is_none_or(|m| e <= m)
    }
}

/// Tallies the column-length keys of every way to cut `word` into
/// `bounds.len()` consecutive pieces, each parsing as a bounded tableau.
fn tally_word(word: &[u32], bounds: &[Bound], out: &mut HashMap<Vec<Partition>, u64>) {
    fn go(word: &[u32], bounds: &[Bound], key: &mut Vec<Partition>, out: &mut HashMap<Vec<Partition>, u64>) {
        let Some((bound, rest)) = bounds.split_first() else {
            if word.is_empty() {
                *out.entry(key.clone()).or_default() += 1;
            }
            return;
        };
        let limit = if rest.is_empty() { word.len() } else { 0 };
        for end in limit..=word.len() {
            if end > 0 && !bound.admits(word[end - 1]) {
                break;
            }
            for lambda in parse_column_lengths(&word[..end], bound.max, bound.min_exclusive) {
                key.push(lambda);
                go(&word[end..], rest, key, out);
                key.pop();
            }
        }
    }
    go(word, bounds, &mut Vec::with_capacity(bounds.len()), out);
}

/// Counts bounded tableau sequences whose column word is reduced for `w`,
/// in parallel over the reduced words.
pub(crate) fn tally_sequences(w: &Permutation, bounds: &[Bound]) -> SchurSeqExpansion {
    let words = w.reduced_words();
    let merged = words
        .par_iter()
        .fold(HashMap::new, |mut acc, word| {
            tally_word(word, bounds, &mut acc);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        });
    let mut table = SchurSeqExpansion::new(bounds.len());
    for (k, c) in merged {
        table.add(k, c);
    }
    table
}

/// One sequence of straight tableaux together with its concatenated word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauSequence {
    pub word: ReducedWord,
    pub tableaux: Vec<Tableau>,
}

impl TableauSequence {
    /// Column lengths of each tableau, i.e. the conjugates of the shapes.
    pub fn key(&self) -> Vec<Partition> {
        self.tableaux.iter().map(|t| t.shape().conjugate()).collect()
    }
}

/// Every bounded tableau sequence whose column word is reduced for `w`.
pub(crate) fn enumerate_sequences(w: &Permutation, bounds: &[Bound]) -> Vec<TableauSequence> {
    fn go(full: &ReducedWord, word: &[u32], bounds: &[Bound], acc: &mut Vec<Tableau>, out: &mut Vec<TableauSequence>) {
        let Some((bound, rest)) = bounds.split_first() else {
            if word.is_empty() {
                out.push(TableauSequence { word: full.clone(), tableaux: acc.clone() });
            }
            return;
        };
        let limit = if rest.is_empty() { word.len() } else { 0 };
        for end in limit..=word.len() {
            if end > 0 && !bound.admits(word[end - 1]) {
                break;
            }
            for t in parse_column_word(&word[..end], bound.max, bound.min_exclusive) {
                acc.push(t);
                go(full, &word[end..], rest, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    for word in w.reduced_words() {
        go(&word, &word, bounds, &mut Vec::new(), &mut out);
    }
    out
}

fn position_bound(i: usize, n: usize) -> u32 {
    i.min(2 * n - i) as u32
}

fn require_n(w: &Permutation, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    w.require_in_group(n + 1)
}

fn upper_bounds(n: usize) -> Vec<Bound> {
    (1..2 * n).map(|i| Bound { min_exclusive: 0, max: Some(position_bound(i, n)) }).collect()
}

/// `c^{(n)}_{w,lambda}` for `w` in `S_{n+1}`: tableau sequences
/// `(T_1..T_{2n-1})` with entries of `T_i` at most `min(i, 2n-i)` and
/// reduced concatenated column word, keyed by column lengths.
pub fn quiver_coefficients(w: &Permutation, n: usize) -> Result<SchurSeqExpansion> {
    require_n(w, n)?;
    Ok(tally_sequences(w, &upper_bounds(n)))
}

/// The tableau sequences behind [`quiver_coefficients`].
pub fn quiver_sequences(w: &Permutation, n: usize) -> Result<Vec<TableauSequence>> {
    require_n(w, n)?;
    Ok(enumerate_sequences(w, &upper_bounds(n)))
}

/// A sequence of skew tableaux with its reduced column word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewSequence {
    pub word: ReducedWord,
    pub tableaux: Vec<SkewTableau>,
    pub key: Vec<Partition>,
}

/// Skew tableau sequences for `w` with entries of `T_i` at most
/// `min(i, 2n-i)`, obtained by turning upside down the straight sequences of
/// `w0 w^{-1} w0` (in `S_{n+1}`) that are strictly bounded below by
/// `(n-1, ..., 1, 0, 1, ..., n-1)`.
pub fn skew_sequences(w: &Permutation, n: usize) -> Result<Vec<SkewSequence>> {
    require_n(w, n)?;
    let conj = w.w0_conjugate(n + 1)?;
    let lower: Vec<Bound> =
        (1..2 * n).map(|i| Bound { min_exclusive: n as u32 - position_bound(i, n), max: None }).collect();
    let complement = n as u32 + 1;
    let mut out = Vec::new();
    for seq in enumerate_sequences(&conj, &lower) {
        let key: Vec<Partition> = seq.key().into_iter().rev().collect();
        let tableaux: Vec<SkewTableau> = seq.tableaux.iter().rev().map(|t| t.rotate180(complement)).collect();
        let word: ReducedWord = seq.word.iter().rev().map(|&e| complement - e).collect();
        for (i, (t, lambda)) in tableaux.iter().zip(&key).enumerate() {
            debug_assert!(t.is_semistandard());
            debug_assert!(t.entries().all(|e| e >= 1 && e <= position_bound(i + 1, n)));
            debug_assert_eq!(*t.shape(), crate::shapes::rotate180(lambda));
        }
        debug_assert_eq!(tableaux.iter().flat_map(|t| t.column_word()).collect::<Vec<_>>(), word);
        debug_assert!(w.is_reduced_word(&word));
        out.push(SkewSequence { word, tableaux, key });
    }
    Ok(out)
}

/// The same coefficients as [`quiver_coefficients`], counted with skew
/// tableaux of rotated shapes.
pub fn quiver_coefficients_skew(w: &Permutation, n: usize) -> Result<SchurSeqExpansion> {
    let mut table = SchurSeqExpansion::new(2 * n - 1);
    for seq in skew_sequences(w, n)? {
        table.add(seq.key, 1);
    }
    Ok(table)
}

/// Sum over reduced factorizations `u_1 ... u_{2n-1} = w` with `u_i` in
/// `S_{min(i,2n-i)+1}` of the tensor products of Stanley expansions.
pub fn stanley_product(w: &Permutation, n: usize) -> Result<SchurSeqExpansion> {
    require_n(w, n)?;
    let bounds: Vec<usize> = (1..2 * n).map(|i| position_bound(i, n) as usize).collect();
    let mut expansions: HashMap<Permutation, Vec<(Partition, u64)>> = HashMap::new();
    let mut table = SchurSeqExpansion::new(2 * n - 1);
    for factors in w.reduced_factorizations(&bounds) {
        let parts: Vec<Vec<(Partition, u64)>> = factors
            .iter()
            .map(|u| {
                expansions
                    .entry(u.clone())
                    .or_insert_with(|| stanley_schur_expansion(u).iter().map(|(a, c)| (a.clone(), c)).collect())
                    .clone()
            })
            .collect();
        let mut partial: Vec<(Vec<Partition>, u64)> = vec![(Vec::new(), 1)];
        for choices in &parts {
            partial = partial
                .iter()
                .flat_map(|(key, c)| {
                    choices.iter().map(move |(a, d)| {
                        let mut k = key.clone();
                        k.push(a.clone());
                        (k, c * d)
                    })
                })
                .collect();
        }
        for (k, c) in partial {
            table.add(k, c);
        }
    }
    Ok(table)
}

/// The alphabet pair `(c, d)` for position `i` of a `(2n-1)`-table:
/// `d(i+1) - d(i)` below `n`, `c(n) - d(n)` at `n`, `c(2n-i) - c(2n-i+1)` above.
fn universal_alphabets(i: usize, n: usize) -> (Alphabet, Alphabet) {
    let col = |j: usize| j as u16;
    match i.cmp(&n) {
        std::cmp::Ordering::Less => (Alphabet::chern(Family::D, col(i + 1)), Alphabet::chern(Family::D, col(i))),
        std::cmp::Ordering::Equal => (Alphabet::chern(Family::C, col(n)), Alphabet::chern(Family::D, col(n))),
        std::cmp::Ordering::Greater => {
            (Alphabet::chern(Family::C, col(2 * n - i)), Alphabet::chern(Family::C, col(2 * n - i + 1)))
        }
    }
}

/// Sums `coeff * prod_i factor(i, lambda^i)` with memoized factors.
pub(crate) fn assemble(table: &SchurSeqExpansion, factor: impl Fn(usize, &Partition) -> Polynomial) -> Polynomial {
    let mut memo: HashMap<(usize, Partition), Polynomial> = HashMap::new();
    let mut out = Polynomial::zero();
    for (key, c) in table.iter() {
        let mut term = Polynomial::constant(c);
        for (i, lambda) in key.iter().enumerate() {
            if lambda.is_empty() {
                continue;
            }
            let f = memo.entry((i, lambda.clone())).or_insert_with(|| factor(i + 1, lambda));
            term = &term * &*f;
            if term.is_zero() {
                break;
            }
        }
        out += term;
    }
    out
}

/// `sum_lambda c_lambda s_{lambda^1}(d(2)-d(1)) ... s_{lambda^n}(c(n)-d(n))
/// ... s_{lambda^{2n-1}}(c(1)-c(2))`.
pub fn expand_universal(table: &SchurSeqExpansion, n: usize) -> Polynomial {
    assert_eq!(table.arity(), 2 * n - 1, "table arity does not match n");
    assemble(table, |i, lambda| {
        let (c, d) = universal_alphabets(i, n);
        schur_det(lambda, &c, &d)
    })
}

fn check_increasing(seq: &[u32], what: &str) -> Result<()> {
    if seq.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidSequence(format!("{what} {seq:?} is not strictly increasing")));
    }
    Ok(())
}

/// Checks the hypotheses for placing a quiver table on the subsequence
/// `G_{b_1} -> ... -> G_{b_q} -> F_{a_p} -> ... -> F_{a_1}`.
fn check_placement(w: &Permutation, n: usize, a: &[u32], b: &[u32]) -> Result<()> {
    require_n(w, n)?;
    check_increasing(a, "a")?;
    check_increasing(b, "b")?;
    for (name, seq) in [("a", a), ("b", b)] {
        match (seq.first(), seq.last()) {
            (Some(&first), Some(&last)) if first >= 1 && last as usize <= n => {}
            _ => {
                return Err(Error::InvalidSequence(format!(
                    "{name} must be a nonempty sequence in 1..={n}, got {seq:?}"
                )))
            }
        }
    }
    w.require_compatible(a)?;
    w.inverse().require_compatible(b)
}

/// λ-position (1-based, in a `(2n-1)`-table) carrying `mu^k` (1-based) on the
/// subsequence `G_{b_1} .. G_{b_q} -> F_{a_p} .. F_{a_1}`.
///
/// The bundles `G_{b_{k+1}}` and `G_{b_{k+1}-1}` differ by a trivial summand,
/// so `s(G_{b_{k+1}} - G_{b_k})` sits where `d(b_{k+1}) - d(b_{k+1}-1)` does;
/// likewise on the `F` side.
fn placement_positions(n: usize, a: &[u32], b: &[u32]) -> Vec<usize> {
    let (p, q) = (a.len(), b.len());
    let mut positions = Vec::with_capacity(p + q - 1);
    positions.extend(b.iter().skip(1).map(|&bk| bk as usize - 1));
    positions.push(n);
    for k in (1..p).rev() {
        positions.push(2 * n - a[k] as usize + 1);
    }
    positions
}

/// Rearranges the `(2n-1)`-table of `w` into the `(p+q-1)`-table for the
/// subsequence `G_{b_1} -> ... -> G_{b_q} -> F_{a_p} -> ... -> F_{a_1}`,
/// with `mu^k` on `G_{b_{k+1}} - G_{b_k}` for `k < q`, `mu^q` on
/// `F_{a_p} - G_{b_q}` and `mu^{p+q-k}` on `F_{a_k} - F_{a_{k+1}}`.
/// Entries with a nonempty partition at any other position are dropped.
pub fn place_coefficients(
    w: &Permutation,
    table: &SchurSeqExpansion,
    n: usize,
    a: &[u32],
    b: &[u32],
) -> Result<SchurSeqExpansion> {
    check_placement(w, n, a, b)?;
    if table.arity() != 2 * n - 1 {
        return Err(Error::InvalidArgument(format!("table has arity {}, expected {}", table.arity(), 2 * n - 1)));
    }
    let positions = placement_positions(n, a, b);
    let mut out = SchurSeqExpansion::new(positions.len());
    for (key, c) in table.iter() {
        let outside = key.iter().enumerate().any(|(i, l)| !l.is_empty() && !positions.contains(&(i + 1)));
        if outside {
            continue;
        }
        out.add(positions.iter().map(|&i| key[i - 1].clone()).collect(), c);
    }
    Ok(out)
}

/// Evaluates a placed table with `c(j)` standing for `F_j` and `d(j)` for `G_j`.
pub fn expand_placed(table: &SchurSeqExpansion, a: &[u32], b: &[u32]) -> Polynomial {
    let (p, q) = (a.len(), b.len());
    assert_eq!(table.arity(), p + q - 1);
    let chern = |f: Family, j: u32| Alphabet::chern(f, j as u16);
    assemble(table, |k, lambda| {
        let (c, d) = if k < q {
            (chern(Family::D, b[k]), chern(Family::D, b[k - 1]))
        } else if k == q {
            (chern(Family::C, a[p - 1]), chern(Family::D, b[q - 1]))
        } else {
            let j = p + q - k;
            (chern(Family::C, a[j - 1]), chern(Family::C, a[j]))
        };
        schur_det(lambda, &c, &d)
    })
}

/// Replaces `c(i)` by `c(a_k)` for the largest `a_k <= i` (and by `0` when
/// there is none), and the same for `d` with `b`. This models bundles
/// `F_i = F_{i-1} + C` for `i` outside `a`.
pub fn collapse_columns(f: &Polynomial, a: &[u32], b: &[u32]) -> Polynomial {
    let target = |seq: &[u32], col: u16| seq.iter().rev().find(|&&s| s as u16 <= col).map(|&s| s as u16);
    f.substitute_with(|v| {
        let seq = match v.family {
            Family::C => a,
            Family::D => b,
            _ => return None,
        };
        Some(match target(seq, v.column) {
            Some(col) => Polynomial::chern(v.family, v.index as i64, col),
            None => Polynomial::zero(),
        })
    })
}
