//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over the alphabets `x_i`, `y_i`, `c_i(j)`, `d_i(j)` and
//! `b_i(j)`, plus divided differences and Schur determinants.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::shapes::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    C,
    D,
    B,
}

/// A single indeterminate. `x_i`/`y_i` use `index` only; the triangular
/// families use `c_index(column)` with `1 <= index <= column`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: Family,
    pub index: u16,
    pub column: u16,
}

impl Var {
    pub fn x(i: u16) -> Self {
        Self { family: Family::X, index: i, column: 0 }
    }

    pub fn y(i: u16) -> Self {
        Self { family: Family::Y, index: i, column: 0 }
    }

    /// `c_i(j)`, `d_i(j)` or `b_i(j)`.
    pub fn chern(family: Family, i: u16, j: u16) -> Self {
        assert!(
            matches!(family, Family::C | Family::D | Family::B) && 1 <= i && i <= j,
            "{family:?}_{i}({j}) is out of range"
        );
        Self { family, index: i, column: j }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x_{}", self.index),
            Family::Y => write!(f, "y_{}", self.index),
            Family::C => write!(f, "c_{}({})", self.index, self.column),
            Family::D => write!(f, "d_{}({})", self.index, self.column),
            Family::B => write!(f, "b_{}({})", self.index, self.column),
        }
    }
}

/// Variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.binary_search_by(|&(w, _)| w.cmp(&v)).map_or(0, |k| self.0[k].1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Graded order used for printing: higher degree first, then the larger
    /// exponent on the earliest variable.
    fn display_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal => {
                            if ea != eb {
                                return eb.cmp(&ea);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &(v, e) in &self.0 {
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An exact polynomial; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial(vec![(v, 1)]), 1)
    }

    pub fn x(i: u16) -> Self {
        Self::var(Var::x(i))
    }

    pub fn y(i: u16) -> Self {
        Self::var(Var::y(i))
    }

    /// `c_i(j)` with the conventions `c_0(j) = 1` and `c_i(j) = 0` outside
    /// `0 <= i <= j`.
    pub fn chern(family: Family, i: i64, j: u16) -> Self {
        if i == 0 {
            Self::one()
        } else if i < 0 || i > j as i64 {
            Self::zero()
        } else {
            Self::var(Var::chern(family, i as u16, j))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each variable for which `assign` returns `Some` and keeps
    /// the others.
    pub fn substitute_with(&self, assign: impl Fn(Var) -> Option<Polynomial>) -> Self {
        let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut images: HashMap<Var, Option<Polynomial>> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in &m.0 {
                let image = images.entry(v).or_insert_with(|| assign(v));
                match image {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pe = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        factor = &factor * &*pe;
                    }
                }
                if factor.is_zero() {
                    break;
                }
            }
            let kept = Polynomial::term(Monomial(kept), 1);
            out += &factor * &kept;
        }
        out
    }

    pub fn substitute(&self, assignment: &HashMap<Var, Polynomial>) -> Self {
        self.substitute_with(|v| assignment.get(&v).cloned())
    }

    /// Sends `f_i(j)` to `g_i(j)` for every column `j` accepted by `columns`,
    /// where `f = from` and `g = to`; `to = None` sets those variables to 0.
    pub fn replace_family(&self, from: Family, to: Option<Family>, columns: impl Fn(u16) -> bool) -> Self {
        self.substitute_with(|v| {
            (v.family == from && columns(v.column)).then(|| match to {
                Some(g) => Polynomial::var(Var { family: g, ..v }),
                None => Polynomial::zero(),
            })
        })
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: u16) -> Self {
        let (a, b) = (Var::x(i), Var::x(i + 1));
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let swapped = Monomial::from_powers(m.0.iter().map(|&(v, e)| {
                if v == a {
                    (b, e)
                } else if v == b {
                    (a, e)
                } else {
                    (v, e)
                }
            }));
            out.add_term(swapped, c.clone());
        }
        out
    }

    /// Splits `self` as `sum_k coeffs[k] * v^k` with `coeffs[k]` free of `v`.
    fn coefficients_in(&self, v: Var) -> Vec<Polynomial> {
        let mut coeffs: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let k = m.exponent(v) as usize;
            if coeffs.len() <= k {
                coeffs.resize_with(k + 1, Polynomial::zero);
            }
            let rest = Monomial(m.0.iter().copied().filter(|&(w, _)| w != v).collect());
            coeffs[k].add_term(rest, c.clone());
        }
        coeffs
    }

    /// Divides by `v - a` where `a` does not involve `v`, returning the
    /// quotient and the remainder.
    pub fn div_linear(&self, v: Var, a: &Polynomial) -> (Polynomial, Polynomial) {
        debug_assert!(!a.variables().contains(&v));
        let coeffs = self.coefficients_in(v);
        if coeffs.is_empty() {
            return (Polynomial::zero(), Polynomial::zero());
        }
        let top = coeffs.len() - 1;
        // synthetic division: q_{k-1} = g_k + a q_k
        let mut quotient_coeffs = vec![Polynomial::zero(); top];
        let mut carry = Polynomial::zero();
        for k in (1..=top).rev() {
            let qk = &coeffs[k] + &(a * &carry);
            quotient_coeffs[k - 1] = qk.clone();
            carry = qk;
        }
        let remainder = &coeffs[0] + &(a * &carry);
        let vpoly = Polynomial::var(v);
        let mut quotient = Polynomial::zero();
        let mut power = Polynomial::one();
        for q in quotient_coeffs {
            quotient += &q * &power;
            power = &power * &vpoly;
        }
        (quotient, remainder)
    }

    /// `JSON` form: `{"terms": [{"monomial": [["x_1", 2], ...], "coeff": c}]}`
    /// in display order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono: Vec<Value> = m.0.iter().map(|(v, e)| json!([v.to_string(), e])).collect();
                json!({ "monomial": mono, "coeff": bigint_json(c) })
            })
            .collect();
        json!({ "terms": terms })
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        terms
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.0.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// `(f - s_i f) / (x_i - x_{i+1})`, computed by long division in `x_i`.
///
/// Panics if the division leaves a remainder, which would mean the
/// polynomial arithmetic is broken.
pub fn divided_difference(f: &Polynomial, i: u16) -> Polynomial {
    assert!(i >= 1);
    let numerator = f - &f.swap_x(i);
    let (quotient, remainder) = numerator.div_linear(Var::x(i), &Polynomial::x(i + 1));
    assert!(remainder.is_zero(), "divided difference left remainder {remainder}");
    quotient
}

/// A sequence `a_1, a_2, ...` of polynomials standing in for Chern classes;
/// `a_0 = 1` and entries past the end are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet(pub Vec<Polynomial>);

impl Alphabet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(c_1(j), ..., c_j(j))` for the triangular family `family`.
    pub fn chern(family: Family, column: u16) -> Self {
        Self((1..=column).map(|i| Polynomial::var(Var::chern(family, i, column))).collect())
    }

    /// Elementary symmetric polynomials of `vars`.
    pub fn elementary(vars: &[Polynomial]) -> Self {
        let mut e = vec![Polynomial::one()];
        for v in vars {
            e.push(Polynomial::zero());
            for k in (1..e.len()).rev() {
                let term = &e[k - 1] * v;
                e[k] += term;
            }
        }
        e.remove(0);
        Self(e)
    }

    pub fn get(&self, k: i64) -> Polynomial {
        if k == 0 {
            Polynomial::one()
        } else if k < 0 {
            Polynomial::zero()
        } else {
            self.0.get(k as usize - 1).cloned().unwrap_or_default()
        }
    }
}

/// Coefficients `h_0 .. h_max` of
/// `(1 - d_1 t + d_2 t^2 - ...) / (1 - c_1 t + c_2 t^2 - ...)`.
pub fn h_series(c: &Alphabet, d: &Alphabet, max: usize) -> Vec<Polynomial> {
    let mut h: Vec<Polynomial> = Vec::with_capacity(max + 1);
    for k in 0..=max {
        let mut hk = d.get(k as i64);
        if k % 2 == 1 {
            hk = -hk;
        }
        for j in 1..=k.min(c.0.len()) {
            let term = &c.0[j - 1] * &h[k - j];
            // subtract (-1)^j c_j h_{k-j}
            if j % 2 == 0 {
                hk = &hk - &term;
            } else {
                hk += term;
            }
        }
        h.push(hk);
    }
    h
}

/// The single coefficient `h_k`; zero for `k < 0`.
pub fn h_k(c: &Alphabet, d: &Alphabet, k: i64) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    h_series(c, d, k as usize).pop().expect("nonempty series")
}

/// Determinant of a square matrix of polynomials by Laplace expansion over
/// column subsets.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let p = matrix.len();
    if p == 0 {
        return Polynomial::one();
    }
    assert!(p < 32, "determinant too large");
    let mut layer: HashMap<u32, Polynomial> = HashMap::new();
    layer.insert(0, Polynomial::one());
    for row in matrix {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (&mask, partial) in &layer {
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (c + 1)).count_ones();
                let mut product = partial * entry;
                if inversions % 2 == 1 {
                    product = -product;
                }
                *next.entry(mask | (1 << c)).or_default() += product;
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    layer.remove(&((1u32 << p) - 1)).unwrap_or_default()
}

/// `s_alpha(c - d) = det(h_{alpha_i + j - i})`.
pub fn schur_det(alpha: &Partition, c: &Alphabet, d: &Alphabet) -> Polynomial {
    let p = alpha.len();
    if p == 0 {
        return Polynomial::one();
    }
    let max = (alpha.part(0) as usize) + p;
    let h = h_series(c, d, max);
    let entry = |k: i64| if k < 0 { Polynomial::zero() } else { h[k as usize].clone() };
    let matrix: Vec<Vec<Polynomial>> =
        (0..p).map(|i| (0..p).map(|j| entry(alpha.part(i) as i64 + j as i64 - i as i64)).collect()).collect();
    determinant(&matrix)
}

/// The supersymmetric Schur function `s_alpha(X / Y)`.
pub fn super_schur(alpha: &Partition, xs: &[Polynomial], ys: &[Polynomial]) -> Polynomial {
    schur_det(alpha, &Alphabet::elementary(xs), &Alphabet::elementary(ys))
}

/// `s_alpha(X / Y)` vanishes identically exactly when `alpha` contains the
/// `(|X| + 1) x (|Y| + 1)` rectangle.
pub fn super_schur_vanishes(alpha: &Partition, x_count: usize, y_count: usize) -> bool {
    alpha.part(x_count) as usize > y_count
}
