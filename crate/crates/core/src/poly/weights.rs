use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Polynomial};
use crate::linalg::RatMatrix;
use crate::Rational;

/// Quasihomogeneous weights `ν_1, …, ν_n`, each strictly between 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights(Vec<Rational>);

impl Weights {
    pub fn new(nu: Vec<Rational>) -> Result<Self, PolyError> {
        if let Some(bad) = nu
            .iter()
            .find(|v| !v.is_positive() || **v >= Rational::one())
        {
            return Err(PolyError::WeightOutOfRange(bad.to_string()));
        }
        Ok(Self(nu))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ν_1 + … + ν_n`.
    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Weights with an extra `1/2` appended, for `f + z²`.
    pub fn suspended(&self) -> Weights {
        let mut nu = self.0.clone();
        nu.push(Rational::new(1.into(), 2.into()));
        Weights(nu)
    }
}

/// `⟨k, ν⟩ = Σ k_i ν_i`.
pub fn weighted_degree(m: &Monomial, w: &Weights) -> Result<Rational, PolyError> {
    if m.nvars() != w.len() {
        return Err(PolyError::LengthMismatch {
            expected: w.len(),
            got: m.nvars(),
        });
    }
    Ok(m.exponents()
        .iter()
        .zip(w.values())
        .map(|(&k, nu)| nu * Rational::from_integer(BigInt::from(k)))
        .sum())
}

/// Solves `⟨k, ν⟩ = 1` over the monomials `k` of `f`.
///
/// A unique solution is returned when every coordinate lies in `(0, 1)`. When
/// the system is underdetermined the candidates are the vertices of
/// `{⟨k, ν⟩ = 1, 0 ≤ ν ≤ 1/2}` with all coordinates positive; the one with the
/// smallest coordinate sum wins, ties broken lexicographically.
pub fn find_quasihomogeneous_weights(f: &Polynomial) -> Option<Weights> {
    let n = f.nvars();
    if f.is_zero() || n == 0 {
        return None;
    }
    let rows: Vec<Vec<Rational>> = f
        .monomials()
        .map(|m| {
            let mut row: Vec<Rational> = m
                .exponents()
                .iter()
                .map(|&e| Rational::from_integer(BigInt::from(e)))
                .collect();
            row.push(Rational::one());
            row
        })
        .collect();
    let (_, pivots) = RatMatrix::from_rows(rows.clone()).rref();
    if pivots.contains(&n) {
        return None;
    }
    if pivots.len() == n {
        let nu = solve_unique(&rows, n)?;
        return Weights::new(nu).ok();
    }

    let half = Rational::new(1.into(), 2.into());
    let free = n - pivots.len();
    let mut best: Option<Vec<Rational>> = None;
    for subset in combinations(n, free) {
        for mask in 0..(1u32 << free) {
            let mut system = rows.clone();
            for (bit, &var) in subset.iter().enumerate() {
                let mut row = vec![Rational::zero(); n + 1];
                row[var] = Rational::one();
                row[n] = if mask & (1 << bit) != 0 {
                    half.clone()
                } else {
                    Rational::zero()
                };
                system.push(row);
            }
            let Some(nu) = solve_unique(&system, n) else {
                continue;
            };
            if !nu.iter().all(|v| v.is_positive() && *v <= half) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    let (s, sb): (Rational, Rational) = (nu.iter().sum(), b.iter().sum());
                    s < sb || (s == sb && nu < *b)
                }
            };
            if better {
                best = Some(nu);
            }
        }
    }
    best.and_then(|nu| Weights::new(nu).ok())
}

/// Solution of the augmented system if it is consistent with full column rank.
fn solve_unique(rows: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let (r, pivots) = RatMatrix::from_rows(rows.to_vec()).rref();
    if pivots.contains(&n) || pivots.len() != n {
        return None;
    }
    Some((0..n).map(|i| r.get(i, n).clone()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
