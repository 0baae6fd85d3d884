use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Monomial;
use crate::linalg::RatMatrix;
use crate::Rational;

/// Sparse polynomial with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// `x, y, z, w` for up to four variables, `x1, x2, …` beyond.
pub fn default_var_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies by the term `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            *dm.exponent_mut(i) -= 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Matrix of second partials at the origin.
    pub fn hessian_at_origin(&self) -> RatMatrix {
        let n = self.nvars;
        let mut h = RatMatrix::zeros(n, n);
        for (m, c) in &self.terms {
            if m.degree() != 2 {
                continue;
            }
            let idx: Vec<usize> = m
                .exponents()
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
                .collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                h.set(i, i, c * Rational::from_integer(2.into()));
            } else {
                h.set(i, j, c.clone());
                h.set(j, i, c.clone());
            }
        }
        h
    }

    /// Same polynomial in one more variable, appended last, not occurring.
    pub fn with_extra_var(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.push_var(0), c.clone()))
                .collect(),
        }
    }

    /// Drops variable `i`, which must not occur in any term.
    pub fn without_var(&self, i: usize) -> Polynomial {
        assert!(
            self.terms.keys().all(|m| m.exponents()[i] == 0),
            "variable still occurs"
        );
        Polynomial {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remove_var(i), c.clone()))
                .collect(),
        }
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn to_string_with(&self, names: &[impl AsRef<str>]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, name)| {
                    if e == 1 {
                        name.as_ref().to_string()
                    } else {
                        format!("{}^{}", name.as_ref(), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&format!("{}*{}", abs, factors.join("*")));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_names(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("y^5 + x^3").to_string(), "y^5 + x^3");
        assert_eq!(p("x^2*y + y^3").to_string(), "x^2*y + y^3");
        assert_eq!(p("-x + 1/2*y^2 - 3").to_string(), "1/2*y^2 - x - 3");
        assert_eq!(p("x - x").to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = p("x + y");
        assert_eq!(a.mul(&a), p("x^2 + 2*x*y + y^2"));
        assert_eq!(a.pow(3).sub(&a.mul(&a).mul(&a)), Polynomial::zero(2));
        assert_eq!(p("x^3*y").derivative(0), p("3*x^2*y"));
        assert_eq!(p("x^3*y").derivative(1), p("x^3"));
    }

    #[test]
    fn hessian() {
        let h = p("x^2 + 3*x*y + x^3").hessian_at_origin();
        assert_eq!(h.get(0, 0), &Rational::from_integer(2.into()));
        assert_eq!(h.get(0, 1), &Rational::from_integer(3.into()));
        assert_eq!(h.get(1, 1), &Rational::zero());
    }

    #[test]
    fn var_bookkeeping() {
        let f = p("x^3 + y^2");
        let g = f.with_extra_var();
        assert_eq!(g.nvars(), 3);
        assert_eq!(g.without_var(2), f);
    }
}
