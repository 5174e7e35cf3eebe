//! Schubert classes of partial flag varieties written in the quotient
//! classes `Q_k` or in the special classes of `F_{a_k}`.

use std::fmt;

use serde_json::{json, Value};

use super::split::split_single;
use super::{quiver_coefficients, SchurSeqExpansion};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::poly::{super_schur, Polynomial};
use crate::shapes::Partition;

/// The bundle (or virtual difference) a Schur factor is evaluated on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassSymbol {
    /// `Q_k`, the kernel of `F_{a_k} -> F_{a_{k-1}}`.
    Q(u32),
    /// `F_j`.
    F(u32),
    /// `F_i - F_j`.
    FDiff(u32, u32),
}

impl ClassSymbol {
    /// Chern roots in the `x` alphabet: `Q_k` has `x_{a_{k-1}+1} .. x_{a_k}`
    /// and `F_j` has `x_1 .. x_j`.
    fn schur(&self, lambda: &Partition, a: &[u32]) -> Polynomial {
        let xs = |lo: u32, hi: u32| (lo + 1..=hi).map(|i| Polynomial::x(i as u16)).collect::<Vec<_>>();
        match *self {
            ClassSymbol::Q(k) => {
                let lo = if k >= 2 { a[k as usize - 2] } else { 0 };
                super_schur(lambda, &xs(lo, a[k as usize - 1]), &[])
            }
            ClassSymbol::F(j) => super_schur(lambda, &xs(0, j), &[]),
            ClassSymbol::FDiff(i, j) => super_schur(lambda, &xs(0, i), &xs(0, j)),
        }
    }
}

impl fmt::Display for ClassSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSymbol::Q(k) => write!(f, "Q_{k}"),
            ClassSymbol::F(j) => write!(f, "F_{j}"),
            ClassSymbol::FDiff(i, j) => write!(f, "F_{i} - F_{j}"),
        }
    }
}

/// `sum coeff * prod s_lambda(class)`; factors with empty partitions are
/// omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiambelliExpression {
    pub a: Vec<u32>,
    pub n: usize,
    pub terms: Vec<(u64, Vec<(ClassSymbol, Partition)>)>,
}

impl GiambelliExpression {
    /// Substitutes Chern roots `x_i` for the classes.
    pub fn expand(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (c, factors) in &self.terms {
            let mut term = Polynomial::constant(*c);
            for (class, lambda) in factors {
                term = &term * &class.schur(lambda, &self.a);
            }
            out += term;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(c, factors)| {
                let factors: Vec<Value> = factors
                    .iter()
                    .map(|(class, l)| json!({ "class": class.to_string(), "partition": l.parts() }))
                    .collect();
                json!({ "coeff": c, "factors": factors })
            })
            .collect();
        json!({ "a": self.a, "n": self.n, "terms": terms })
    }
}

impl fmt::Display for GiambelliExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, factors)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if *c != 1 {
                write!(f, "{c} ")?;
            }
            let rendered: Vec<String> = factors.iter().map(|(class, l)| format!("s_{l}({class})")).collect();
            write!(f, "{}", rendered.join(" "))?;
        }
        Ok(())
    }
}

fn check(w: &Permutation, a: &[u32], n: usize) -> Result<()> {
    w.require_in_group(n)?;
    let valid = !a.is_empty() && a[0] >= 1 && a.windows(2).all(|p| p[0] < p[1]) && (*a.last().unwrap() as usize) < n;
    if !valid {
        return Err(Error::InvalidSequence(format!(
            "a = {a:?} must be strictly increasing within 1..{}",
            n.saturating_sub(1)
        )));
    }
    w.require_compatible(a)
}

fn terms_from(
    table: &SchurSeqExpansion,
    symbols: &[(usize, ClassSymbol)],
) -> Vec<(u64, Vec<(ClassSymbol, Partition)>)> {
    table
        .iter()
        .map(|(key, c)| {
            let factors = symbols
                .iter()
                .filter(|(i, _)| !key[*i].is_empty())
                .map(|(i, s)| (s.clone(), key[*i].clone()))
                .collect();
            (c, factors)
        })
        .collect()
}

/// `[Omega_w] = sum c_lambda s_{lambda^1}(Q_1) ... s_{lambda^p}(Q_p)` with
/// the coefficients of the single splitting along `a`.
pub fn giambelli_i(w: &Permutation, a: &[u32], n: usize) -> Result<GiambelliExpression> {
    check(w, a, n)?;
    let table = split_single(w, a)?.table;
    let symbols: Vec<(usize, ClassSymbol)> = (0..a.len()).map(|k| (k, ClassSymbol::Q(k as u32 + 1))).collect();
    Ok(GiambelliExpression { a: a.to_vec(), n, terms: terms_from(&table, &symbols) })
}

/// `[Omega_w] = sum c_nu s_{nu^p}(F_{a_p}) ... s_{nu^1}(F_{a_1} - F_{a_2})`,
/// read off from the `(2n-1)`-table of `w`.
///
/// With `a_{p+1} = n`, the factor on `F_{a_k} - F_{a_{k+1}}` sits at
/// position `2n - a_{k+1} + 1`, where `c(a_{k+1}-1) - c(a_{k+1})` stands
/// once every `F_i` outside `a` is a trivial extension of `F_{i-1}`. Keys
/// with a nonempty partition anywhere else are dropped.
pub fn giambelli_ii(w: &Permutation, a: &[u32], n: usize) -> Result<GiambelliExpression> {
    check(w, a, n)?;
    let table = quiver_coefficients(w, n)?;
    let p = a.len();
    let next = |k: usize| if k < p { a[k] } else { n as u32 };
    let mut symbols: Vec<(usize, ClassSymbol)> = (1..=p)
        .map(|k| {
            let position = 2 * n - next(k) as usize + 1;
            let class = if k == p { ClassSymbol::F(a[p - 1]) } else { ClassSymbol::FDiff(a[k - 1], a[k]) };
            (position - 1, class)
        })
        .collect();
    symbols.reverse();
    let placed =
        table.filter(|key| key.iter().enumerate().all(|(i, l)| l.is_empty() || symbols.iter().any(|(j, _)| *j == i)));
    Ok(GiambelliExpression { a: a.to_vec(), n, terms: terms_from(&placed, &symbols) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::single_schubert;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn subsequences(hi: u32) -> Vec<Vec<u32>> {
        (1u32..(1 << hi)).map(|mask| (1..=hi).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
    }

    #[test]
    fn identity_is_one() {
        let id = Permutation::identity();
        assert_eq!(giambelli_i(&id, &[1], 3).unwrap().to_string(), "1");
        assert_eq!(giambelli_ii(&id, &[1], 3).unwrap().to_string(), "1");
    }

    #[test]
    fn example_32541() {
        let e = giambelli_i(&p("32541"), &[1, 3, 4], 5).unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.to_string(), "s_(2)(Q_1) s_(2,1)(Q_2) s_(1)(Q_3) + s_(3)(Q_1) s_(1,1)(Q_2) s_(1)(Q_3)");
        assert_eq!(e.expand(), single_schubert(&p("32541")));
    }

    #[test]
    fn small_examples_of_the_second_form() {
        let e = giambelli_ii(&p("312"), &[1], 3).unwrap();
        assert_eq!(e.to_string(), "s_(2)(F_1)");
        assert_eq!(e.expand(), Polynomial::x(1).pow(2));
        let e = giambelli_ii(&p("321"), &[1, 2], 3).unwrap();
        assert_eq!(e.expand(), single_schubert(&p("321")));
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(giambelli_i(&p("312"), &[2], 3).is_err());
        assert!(giambelli_i(&p("312"), &[1, 3], 3).is_err());
        assert!(giambelli_ii(&p("4123"), &[3], 3).is_err());
    }

    #[test]
    fn grassmannian_forms_agree() {
        for w in Permutation::all(4) {
            let d = w.descents();
            if d.len() != 1 {
                continue;
            }
            let one = giambelli_i(&w, &d, 4).unwrap();
            let two = giambelli_ii(&w, &d, 4).unwrap();
            let renamed: Vec<_> = one
                .terms
                .iter()
                .map(|(c, fs)| (*c, fs.iter().map(|(_, l)| (ClassSymbol::F(d[0]), l.clone())).collect::<Vec<_>>()))
                .collect();
            let mut expected = two.terms.clone();
            expected.sort();
            let mut renamed = renamed;
            renamed.sort();
            assert_eq!(renamed, expected, "{w}");
            assert_eq!(one.expand(), two.expand(), "{w}");
        }
    }

    #[test]
    fn both_forms_represent_the_schubert_class_on_s4() {
        for w in Permutation::all(4) {
            for a in subsequences(3).into_iter().filter(|a| w.is_compatible(a)) {
                let one = giambelli_i(&w, &a, 4).unwrap().expand();
                assert_eq!(one, single_schubert(&w), "{w} {a:?}");
                let two = giambelli_ii(&w, &a, 4).unwrap().expand();
                assert_eq!(one, two, "{w} {a:?}");
            }
        }
    }
}
