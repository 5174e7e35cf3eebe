//! Partitions, skew shapes and semistandard tableaux, together with the
//! column-word parser that every tableau-counting formula in this crate is
//! built on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Accepts a weakly decreasing sequence; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|p| p[0] >= p[1]) && !parts.contains(&0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|alpha|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of columns of the diagram.
    pub fn width(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.width();
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Self { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} is not contained in {outer}")));
        }
        Ok(Self { outer, inner })
    }

    pub fn cell_count(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

/// The 180-degree rotation of the diagram of `alpha'` inside its bounding
/// box.
pub fn rotate180(alpha: &Partition) -> SkewShape {
    let shape = alpha.conjugate();
    let rows = shape.len();
    let cols = shape.width();
    let outer = Partition::from_parts_unchecked(vec![cols; rows]);
    let inner: Vec<u32> = (0..rows).map(|r| cols - shape.part(rows - 1 - r)).collect();
    let inner = Partition::new(inner).expect("complement of a partition in a box");
    SkewShape { outer, inner }
}

/// A semistandard tableau of straight shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// Validates the shape and the semistandard conditions.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let t = Self { rows };
        Partition::new(t.rows.iter().map(|r| r.len() as u32).collect())?;
        if !t.is_semistandard() {
            return Err(Error::InvalidArgument(format!("{:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    /// Builds a tableau from its columns, listed left to right, each top to
    /// bottom. Column lengths must weakly decrease.
    fn from_columns(columns: &[Vec<u32>]) -> Self {
        let height = columns.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in columns {
            for (r, &v) in col.iter().enumerate() {
                rows[r].push(v);
            }
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below)
        });
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&v| v >= 1)
    }

    /// Columns read bottom to top, left to right.
    pub fn column_word(&self) -> Vec<u32> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).flat_map(|c| self.column(c).into_iter().rev()).collect()
    }

    /// Turns the tableau on its head inside its bounding box and replaces
    /// every entry `e` with `complement - e`.
    pub fn rotate180(&self, complement: u32) -> SkewTableau {
        let height = self.rows.len();
        let width = self.rows.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(height);
        let mut inner = Vec::with_capacity(height);
        for r in (0..height).rev() {
            let row: Vec<u32> = self.rows[r].iter().rev().map(|&e| complement - e).collect();
            inner.push((width - row.len()) as u32);
            rows.push(row);
        }
        let outer = Partition::from_parts_unchecked(vec![width as u32; height]);
        let inner = Partition::new(inner).expect("rotated straight shape");
        SkewTableau { shape: SkewShape { outer, inner }, rows }
    }
}

/// A filling of a skew shape; `rows[r]` lists the cells of row `r` from
/// column `inner_r` to `outer_r - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn entry(&self, r: usize, c: u32) -> Option<u32> {
        let start = self.shape.inner.part(r);
        if c < start {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get((c - start) as usize)).copied()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            (0..self.shape.outer.part(r)).all(|c| match (self.entry(r - 1, c), self.entry(r, c)) {
                (Some(above), Some(below)) => above < below,
                _ => true,
            })
        });
        rows_ok && cols_ok
    }

    /// Columns read bottom to top, left to right.
    pub fn column_word(&self) -> Vec<u32> {
        let width = self.shape.outer.width();
        let mut word = Vec::new();
        for c in 0..width {
            for r in (0..self.rows.len()).rev() {
                if let Some(v) = self.entry(r, c) {
                    word.push(v);
                }
            }
        }
        word
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }
}

/// Column lengths of every straight-shape semistandard tableau whose column
/// word is `word`, with all entries in `(min_exclusive, max]`. The column
/// lengths of `T` are the parts of the conjugate of its shape.
pub(crate) fn parse_column_lengths(word: &[u32], max: Option<u32>, min_exclusive: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if word.iter().any(|&e| e <= min_exclusive || max.is_some_and(|m| e > m)) {
        return out;
    }
    parse_columns(word, &mut Vec::new(), &mut |cols| {
        out.push(Partition::from_parts_unchecked(cols.iter().map(|c| c.len() as u32).collect()));
    });
    out
}

/// Splits `word` into weakly shrinking columns, each strictly decreasing when
/// read bottom to top, with rows weakly increasing between neighbours.
fn parse_columns(word: &[u32], columns: &mut Vec<Vec<u32>>, emit: &mut dyn FnMut(&[Vec<u32>])) {
    if word.is_empty() {
        emit(columns);
        return;
    }
    let max_len = columns.last().map_or(word.len(), Vec::len).min(word.len());
    let mut k = 1;
    while k <= max_len {
        if k > 1 && word[k - 1] >= word[k - 2] {
            break;
        }
        // top-to-bottom order of this column
        let column: Vec<u32> = word[..k].iter().rev().copied().collect();
        let rows_ok = columns.last().is_none_or(|prev| column.iter().zip(prev).all(|(cur, left)| left <= cur));
        if rows_ok {
            columns.push(column);
            parse_columns(&word[k..], columns, emit);
            columns.pop();
        }
        k += 1;
    }
}

/// Every semistandard straight-shape tableau `T` with `column_word(T) ==
/// word` and entries in `(min_exclusive, max]` (`max = None` for no upper
/// bound). Distinct results have distinct shapes.
pub fn parse_column_word(word: &[u32], max: Option<u32>, min_exclusive: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    if word.iter().any(|&e| e <= min_exclusive || max.is_some_and(|m| e > m)) {
        return out;
    }
    parse_columns(word, &mut Vec::new(), &mut |cols| out.push(Tableau::from_columns(cols)));
    out
}

/// All semistandard fillings of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    fn fill(shape: &Partition, max: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        let r = rows.len() - 1;
        let c = rows[r].len();
        if c == shape.part(r) as usize {
            if r + 1 == shape.len() {
                out.push(Tableau { rows: rows.clone() });
            } else {
                rows.push(Vec::new());
                fill(shape, max, rows, out);
                rows.pop();
            }
            return;
        }
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=max {
            rows[r].push(v);
            fill(shape, max, rows, out);
            rows[r].pop();
        }
    }
    if shape.is_empty() {
        return vec![Tableau::empty()];
    }
    let mut out = Vec::new();
    fill(shape, max_entry, &mut vec![Vec::new()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[2]).conjugate(), part(&[1, 1]));
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
        for n in 0..8 {
            for p in Partition::all_of_size(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn rotations() {
        let empty = rotate180(&Partition::empty());
        assert_eq!(empty.cell_count(), 0);
        let one = rotate180(&part(&[1]));
        assert_eq!((one.outer.clone(), one.inner.clone()), (part(&[1]), Partition::empty()));
        let r = rotate180(&part(&[2, 1]));
        assert_eq!(r.outer, part(&[2, 2]));
        assert_eq!(r.inner, part(&[1]));
        for n in 0..8 {
            for p in Partition::all_of_size(n) {
                assert_eq!(rotate180(&p).cell_count(), n);
            }
        }
    }

    #[test]
    fn column_words() {
        let single = Tableau::from_rows(vec![vec![2]]).unwrap();
        assert_eq!(single.column_word(), vec![2]);
        let column = Tableau::from_rows(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(column.column_word(), vec![2, 1]);
        let t = Tableau::from_rows(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(t.column_word(), vec![2, 1, 2]);
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn parse_examples() {
        let parses = parse_column_word(&[2, 1], Some(2), 0);
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].shape(), part(&[1, 1]));

        assert_eq!(parse_column_word(&[], None, 0), vec![Tableau::empty()]);

        let parses = parse_column_word(&[1, 2], None, 0);
        assert_eq!(parses, vec![Tableau::from_rows(vec![vec![1, 2]]).unwrap()]);

        assert!(parse_column_word(&[2, 1], None, 1).is_empty());
        assert!(parse_column_word(&[2, 1], Some(1), 0).is_empty());
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&part(&[1]), 2).len(), 2);
        assert_eq!(enumerate_ssyt(&part(&[1, 1]), 1).len(), 0);
        assert_eq!(enumerate_ssyt(&part(&[2, 1]), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3).len(), 1);
    }

    #[test]
    fn ssyt_matches_brute_force_fillings() {
        let shape = part(&[2, 1]);
        let mut brute = 0;
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    if Tableau::from_rows(vec![vec![a, b], vec![c]]).is_ok() {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, enumerate_ssyt(&shape, 3).len());
    }

    #[test]
    fn parse_round_trips_every_small_tableau() {
        for n in 0..=6 {
            for shape in Partition::all_of_size(n) {
                for max in 1..=4 {
                    for t in enumerate_ssyt(&shape, max) {
                        let parses = parse_column_word(&t.column_word(), Some(max), 0);
                        assert!(parses.contains(&t), "{t:?}");
                        let mut shapes: Vec<_> = parses.iter().map(Tableau::shape).collect();
                        shapes.sort();
                        shapes.dedup();
                        assert_eq!(shapes.len(), parses.len());
                        assert!(parses.iter().all(Tableau::is_semistandard));
                        let lengths = parse_column_lengths(&t.column_word(), Some(max), 0);
                        let conj: Vec<_> = parses.iter().map(|p| p.shape().conjugate()).collect();
                        assert_eq!(lengths, conj);
                    }
                }
            }
        }
    }

    #[test]
    fn rotated_tableaux_are_skew_semistandard() {
        for n in 0..=5 {
            for shape in Partition::all_of_size(n) {
                for t in enumerate_ssyt(&shape, 3) {
                    let rotated = t.rotate180(4);
                    assert!(rotated.is_semistandard());
                    assert_eq!(rotated.shape(), &rotate180(&shape.conjugate()));
                    let expected: Vec<u32> = t.column_word().iter().rev().map(|&e| 4 - e).collect();
                    assert_eq!(rotated.column_word(), expected);
                }
            }
        }
    }
}
