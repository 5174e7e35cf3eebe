//! Permutations in one-line notation, identified with their stabilized
//! extension to all positive integers.
//!
//! Products follow the functional convention: `u * v` applies `v` first and
//! then `u`, so a word `(e_1, ..., e_l)` stands for `s_{e_1} * ... * s_{e_l}`
//! and right multiplication by `s_i` swaps the entries in positions `i` and
//! `i + 1`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A reduced word, listed as simple-reflection indices `e_1 .. e_l`.
pub type ReducedWord = Vec<u32>;

/// A permutation of the positive integers fixing all but finitely many.
///
/// The window is kept minimal: trailing fixed points are stripped, so the
/// identity has an empty window and `w` lies in `S_n` exactly when
/// `w.size() <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    window: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self { window: Vec::new() }
    }

    /// Builds a permutation from one-line notation `w(1) .. w(n)`.
    pub fn from_one_line(values: &[u32]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?} is not a rearrangement of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Self::from_window_unchecked(values.to_vec()))
    }

    fn from_window_unchecked(mut window: Vec<u32>) -> Self {
        while let Some(&last) = window.last() {
            if last as usize == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Self { window }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: u32) -> Self {
        assert!(i >= 1, "simple reflections are indexed from 1");
        let mut window: Vec<u32> = (1..=i + 1).collect();
        window.swap(i as usize - 1, i as usize);
        Self { window }
    }

    /// The longest element of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::from_window_unchecked((1..=n as u32).rev().collect())
    }

    /// The product `s_{e_1} * ... * s_{e_l}`.
    pub fn from_word(word: &[u32]) -> Self {
        let n = word.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut window: Vec<u32> = (1..=n as u32).collect();
        // w * s_e swaps positions, so fold from the left
        for &e in word {
            window.swap(e as usize - 1, e as usize);
        }
        Self::from_window_unchecked(window)
    }

    /// Smallest `n` with `self` in `S_n` (zero for the identity).
    pub fn size(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    pub fn in_group(&self, n: usize) -> bool {
        self.size() <= n
    }

    /// Returns an error unless `self` lies in `S_n`.
    pub fn require_in_group(&self, n: usize) -> Result<()> {
        if self.in_group(n) {
            Ok(())
        } else {
            Err(Error::NotInSymmetricGroup { w: self.to_string(), n })
        }
    }

    /// `w(j)` for any `j >= 1`.
    pub fn apply(&self, j: u32) -> u32 {
        match self.window.get(j as usize - 1) {
            Some(&v) => v,
            None => j,
        }
    }

    /// One-line notation padded with fixed points to length `n`.
    pub fn one_line(&self, n: usize) -> Vec<u32> {
        let n = n.max(self.size());
        (1..=n as u32).map(|j| self.apply(j)).collect()
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `r_w(p, q) = #{ i <= p : w(i) <= q }`.
    pub fn rank(&self, p: u32, q: u32) -> u32 {
        (1..=p).filter(|&i| self.apply(i) <= q).count() as u32
    }

    /// Positions `i` with `w(i) > w(i+1)`, in increasing order.
    pub fn descents(&self) -> Vec<u32> {
        self.window.windows(2).enumerate().filter(|(_, pair)| pair[0] > pair[1]).map(|(i, _)| i as u32 + 1).collect()
    }

    pub fn has_descent(&self, i: u32) -> bool {
        i >= 1 && self.apply(i) > self.apply(i + 1)
    }

    /// True when every descent of `self` occurs in the strictly increasing
    /// sequence `seq`.
    pub fn is_compatible(&self, seq: &[u32]) -> bool {
        self.first_missing_descent(seq).is_none()
    }

    pub(crate) fn first_missing_descent(&self, seq: &[u32]) -> Option<u32> {
        self.descents().into_iter().find(|d| !seq.contains(d))
    }

    /// Checks strict increase and compatibility, reporting the first problem.
    pub fn require_compatible(&self, seq: &[u32]) -> Result<()> {
        if seq.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidSequence(format!("{seq:?} is not strictly increasing")));
        }
        match self.first_missing_descent(seq) {
            None => Ok(()),
            Some(descent) => Err(Error::Incompatible { seq: seq.to_vec(), w: self.to_string(), descent }),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self { window: inv }
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: u32) -> Self {
        let mut window = self.one_line(i as usize + 1);
        window.swap(i as usize - 1, i as usize);
        Self::from_window_unchecked(window)
    }

    /// `s_i * w`: swaps the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: u32) -> Self {
        let window = self
            .one_line(i as usize + 1)
            .into_iter()
            .map(|v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Self::from_window_unchecked(window)
    }

    /// `w0 * w^{-1} * w0` with `w0` the longest element of `S_n`.
    pub fn w0_conjugate(&self, n: usize) -> Result<Self> {
        self.require_in_group(n)?;
        let inv = self.inverse();
        let n32 = n as u32;
        let window = (1..=n32).map(|j| n32 + 1 - inv.apply(n32 + 1 - j)).collect();
        Ok(Self::from_window_unchecked(window))
    }

    /// `1^m x w`: the identity on `1..=m`, and `j -> w(j - m) + m` above.
    pub fn shift(&self, m: usize) -> Self {
        let m32 = m as u32;
        let window = (1..=m32).chain(self.window.iter().map(|&v| v + m32)).collect();
        Self::from_window_unchecked(window)
    }

    /// All reduced words, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        fn descend(w: &Permutation, suffix: &mut Vec<u32>, out: &mut Vec<ReducedWord>) {
            let descents = w.descents();
            if descents.is_empty() {
                out.push(suffix.iter().rev().copied().collect());
                return;
            }
            for i in descents {
                suffix.push(i);
                descend(&w.mul_simple_right(i), suffix, out);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        descend(self, &mut Vec::with_capacity(self.length()), &mut out);
        out.sort();
        out
    }

    /// True when `word` multiplies to `self` without cancellation.
    pub fn is_reduced_word(&self, word: &[u32]) -> bool {
        word.len() == self.length() && Permutation::from_word(word) == *self
    }

    /// Every `u` with `l(u) + l(u^{-1} w) = l(w)`, i.e. every left factor of
    /// a reduced factorization `u * v = w`. Sorted.
    pub fn left_factors(&self) -> Vec<Permutation> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut stack = vec![Permutation::identity()];
        seen.insert(Permutation::identity());
        while let Some(u) = stack.pop() {
            let rest = &u.inverse() * self;
            // s_i is a left descent of `rest` when i+1 precedes i in it
            let rest_inv = rest.inverse();
            for i in 1..rest.size().max(1) as u32 {
                if rest_inv.apply(i) > rest_inv.apply(i + 1) {
                    let next = u.mul_simple_right(i);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// All reduced factorizations `u_1 * ... * u_r = w` with `u_i` in
    /// `S_{bounds[i] + 1}`; `r = bounds.len()`.
    pub fn reduced_factorizations(&self, bounds: &[usize]) -> Vec<Vec<Permutation>> {
        fn go(w: &Permutation, bounds: &[usize], prefix: &mut Vec<Permutation>, out: &mut Vec<Vec<Permutation>>) {
            match bounds {
                [] => {}
                [last] => {
                    if w.in_group(last.saturating_add(1)) {
                        prefix.push(w.clone());
                        out.push(prefix.clone());
                        prefix.pop();
                    }
                }
                [first, rest @ ..] => {
                    for u in w.left_factors() {
                        if !u.in_group(first.saturating_add(1)) {
                            continue;
                        }
                        let remainder = &u.inverse() * w;
                        prefix.push(u);
                        go(&remainder, rest, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, bounds, &mut Vec::with_capacity(bounds.len()), &mut out);
        out
    }

    /// All elements of `S_n`, sorted by one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n as u32).collect();
        permute(&mut current, 0, &mut out);
        out.sort_by_key(|w| w.one_line(n));
        out
    }
}

fn permute(values: &mut Vec<u32>, k: usize, out: &mut Vec<Permutation>) {
    if k == values.len() {
        out.push(Permutation::from_window_unchecked(values.clone()));
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permute(values, k + 1, out);
        values.swap(k, i);
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        let n = self.size().max(rhs.size());
        let window = (1..=n as u32).map(|j| self.apply(rhs.apply(j))).collect();
        Permutation::from_window_unchecked(window)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        if self.size() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses compact digits (`"32541"`) or a comma-separated list
    /// (`"10,2,3,4,5,6,7,8,9,1"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty string".into()));
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {part:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&values)
    }
}
