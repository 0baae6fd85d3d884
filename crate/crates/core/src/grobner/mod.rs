//! Buchberger completion and reduction over the rationals.
//!
//! Bases are always returned reduced: monic, inter-reduced and sorted by
//! leading monomial, so two generating sets of the same ideal yield identical
//! bases under the same [`TermOrder`].

mod quotient;

pub use quotient::{
    class_in_local_algebra, local_algebra, milnor_number, quotient_monomial_basis, LocalAlgebra,
    QuotientBasis,
};

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrobnerError {
    #[error(
        "quotient is not zero-dimensional (no pure power of variable {var} among leading terms)"
    )]
    NotZeroDimensional { var: usize },
    #[error("non-isolated singularity")]
    NonIsolated,
}

/// Graded lexicographic order, optionally graded by a positive weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TermOrder {
    weights: Option<Vec<u64>>,
}

impl TermOrder {
    pub fn graded_lex() -> Self {
        Self { weights: None }
    }

    /// Grades by `⟨k, w⟩` first. Rational weights are scaled to integers.
    /// Panics unless every weight is positive.
    pub fn weighted(weights: &[Rational]) -> Self {
        assert!(
            weights.iter().all(Signed::is_positive),
            "weights must be positive"
        );
        let lcm = weights
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled = weights
            .iter()
            .map(|w| {
                (w * Rational::from_integer(lcm.clone()))
                    .to_integer()
                    .to_u64()
                    .expect("weight fits in u64")
            })
            .collect();
        Self {
            weights: Some(scaled),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.weights {
            None => a.cmp(b),
            Some(w) => a.cmp_weighted(b, w),
        }
    }
}

/// Terms sorted in descending order under a fixed [`TermOrder`].
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &TermOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = self.lc().recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self − c·m·g`, merging in order.
    fn sub_scaled(
        &self,
        c: &Rational,
        m: &Monomial,
        g: &SortedPoly,
        order: &TermOrder,
    ) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), -(gc * c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (xm, xc) = a.next().unwrap();
                        let (_, yc) = b.next().unwrap();
                        let s = xc + yc;
                        if !s.is_zero() {
                            out.push((xm.clone(), s));
                        }
                    }
                },
            }
        }
        SortedPoly { terms: out }
    }

    /// Full reduction modulo `basis`.
    fn reduce(&self, basis: &[SortedPoly], order: &TermOrder) -> SortedPoly {
        let mut p = self.clone();
        let mut rem = Vec::new();
        while !p.is_zero() {
            let (lm, lc) = (p.lm().clone(), p.lc().clone());
            let hit = basis
                .iter()
                .find_map(|g| g.lm().quotient_of(&lm).map(|q| (g, q)));
            match hit {
                Some((g, q)) => {
                    let c = &lc / g.lc();
                    p = p.sub_scaled(&c, &q, g, order);
                }
                None => {
                    rem.push(p.terms.remove(0));
                }
            }
        }
        SortedPoly { terms: rem }
    }
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: &TermOrder) -> SortedPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&lcm).expect("lcm divisible");
    let mg = g.lm().quotient_of(&lcm).expect("lcm divisible");
    let scaled_f = SortedPoly { terms: Vec::new() }.sub_scaled(&-f.lc().recip(), &mf, f, order);
    scaled_f.sub_scaled(&g.lc().recip(), &mg, g, order)
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    sorted: Vec<SortedPoly>,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Always true: [`buchberger`] only produces reduced bases.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|g| g.lm().clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|g| g.lm().is_one())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        normal_form(p, self).is_zero()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest-lcm first; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> GroebnerBasis {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    let mut basis: Vec<SortedPoly> = Vec::new();
    for g in gens {
        let mut s = SortedPoly::from_poly(g, order).reduce(&basis, order);
        if !s.is_zero() {
            s.make_monic();
            basis.push(s);
        }
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ia, ja) = pairs[a];
                let (ib, jb) = pairs[b];
                let la = basis[ia].lm().lcm(basis[ja].lm());
                let lb = basis[ib].lm().lcm(basis[jb].lm());
                order.cmp(&la, &lb).then((ja, ia).cmp(&(jb, ib)))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pick);
        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let mut r = s_polynomial(&basis[i], &basis[j], order).reduce(&basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let k = basis.len();
        basis.push(r);
        pairs.extend((0..k).map(|i| (i, k)));
    }

    // minimal basis: drop generators whose leading monomial is a multiple of another's
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(jdx, h)| {
            jdx != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || jdx < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // inter-reduce
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<SortedPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let head = SortedPoly {
            terms: vec![keep[idx].terms[0].clone()],
        };
        let tail = SortedPoly {
            terms: keep[idx].terms[1..].to_vec(),
        }
        .reduce(&others, order);
        let mut g = SortedPoly {
            terms: head.terms.into_iter().chain(tail.terms).collect(),
        };
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let generators = reduced.iter().map(|g| g.to_poly(nvars)).collect();
    GroebnerBasis {
        nvars,
        order: order.clone(),
        sorted: reduced,
        generators,
    }
}

/// Remainder of `p` modulo `gb`: no term is divisible by a leading monomial of `gb`.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    SortedPoly::from_poly(p, &gb.order)
        .reduce(&gb.sorted, &gb.order)
        .to_poly(p.nvars())
}
