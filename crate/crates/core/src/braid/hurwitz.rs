use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};

use super::{BraidError, EXHAUSTIVE_MAX_RANK};
use crate::linalg::IntMatrix;
use crate::weyl::{
    coxeter_element, positive_representative, reflection_length, reflection_unchecked,
    GroupElement, RootSystem,
};

/// An ordered tuple of reflections `(s_{β_1}, …, s_{β_μ})`, each stored by its
/// positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    roots: Vec<Vec<i64>>,
}

impl Factorization {
    /// Roots are normalized to be positive.
    pub fn new(roots: Vec<Vec<i64>>) -> Self {
        Self {
            roots: roots.iter().map(|r| positive_representative(r)).collect(),
        }
    }

    pub fn simple(rs: &RootSystem) -> Self {
        Self::new(rs.simple_roots())
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `s_{β_1} ⋯ s_{β_μ}`.
    pub fn product(&self, rs: &RootSystem) -> GroupElement {
        self.roots
            .iter()
            .fold(GroupElement::identity(rs.rank()), |acc, r| {
                acc.compose(&reflection_unchecked(rs.cartan(), r))
            })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|r| {
                let c: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("({})", c.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `s_β(α) = α − B(α, β)·β`.
fn reflect(rs: &RootSystem, alpha: &[i64], beta: &[i64]) -> Vec<i64> {
    let c = rs.form(alpha, beta);
    alpha.iter().zip(beta).map(|(a, b)| a - c * b).collect()
}

fn check_index(i: usize, len: usize) -> Result<(), BraidError> {
    if i + 1 < len {
        Ok(())
    } else {
        Err(BraidError::IndexOutOfRange { index: i, len })
    }
}

/// `(…, s_i, s_{i+1}, …) ↦ (…, s_{i+1}, s_{i+1} s_i s_{i+1}, …)`, 0-based `i`.
pub fn hurwitz_move(
    i: usize,
    fz: &Factorization,
    rs: &RootSystem,
) -> Result<Factorization, BraidError> {
    check_index(i, fz.len())?;
    let mut roots = fz.roots.clone();
    roots[i] = fz.roots[i + 1].clone();
    roots[i + 1] = positive_representative(&reflect(rs, &fz.roots[i], &fz.roots[i + 1]));
    Ok(Factorization { roots })
}

/// `(…, s_i, s_{i+1}, …) ↦ (…, s_i s_{i+1} s_i, s_i, …)`.
pub fn hurwitz_move_inverse(
    i: usize,
    fz: &Factorization,
    rs: &RootSystem,
) -> Result<Factorization, BraidError> {
    check_index(i, fz.len())?;
    let mut roots = fz.roots.clone();
    roots[i] = positive_representative(&reflect(rs, &fz.roots[i + 1], &fz.roots[i]));
    roots[i + 1] = fz.roots[i].clone();
    Ok(Factorization { roots })
}

/// The three conditions defining the set `S` of admissible tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SMembership {
    pub generates: bool,
    pub spans_lattice: bool,
    pub independent: bool,
}

impl SMembership {
    pub fn in_s(&self) -> bool {
        self.generates && self.spans_lattice && self.independent
    }
}

/// A reflection subgroup is determined by its root subsystem, which is the
/// orbit of the generating roots; the reflections generate `W` exactly when
/// that orbit is the whole root system.
fn generates_weyl_group(rs: &RootSystem, roots: &[Vec<i64>]) -> bool {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for r in roots {
        for v in [r.clone(), r.iter().map(|c| -c).collect()] {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for r in roots {
            let w = reflect(rs, &v, r);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == rs.roots().len()
}

pub fn is_in_s(rs: &RootSystem, fz: &Factorization) -> SMembership {
    let det = if fz.len() == rs.rank() {
        IntMatrix::from_columns(&fz.roots).determinant()
    } else {
        Zero::zero()
    };
    SMembership {
        generates: generates_weyl_group(rs, &fz.roots),
        spans_lattice: det.abs() == num_traits::One::one(),
        independent: !det.is_zero(),
    }
}

/// All tuples of `μ` reflections whose product is `s_1 ⋯ s_μ`, sorted.
///
/// Backtracking over positive roots; a partial product `P_k` can be completed
/// only if `P_k⁻¹ c` has reflection length `μ − k`.
pub fn enumerate_coxeter_factorizations(rs: &RootSystem) -> Result<Vec<Factorization>, BraidError> {
    let mu = rs.rank();
    if mu > EXHAUSTIVE_MAX_RANK {
        return Err(BraidError::RankTooLarge {
            rank: mu,
            max: EXHAUSTIVE_MAX_RANK,
        });
    }
    let positive = rs.positive_roots();
    let refl: Vec<GroupElement> = positive
        .iter()
        .map(|r| reflection_unchecked(rs.cartan(), r))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(mu);
    fn go(
        rest: &GroupElement,
        mu: usize,
        refl: &[GroupElement],
        positive: &[Vec<i64>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Factorization>,
    ) {
        if chosen.len() == mu {
            if rest.is_identity() {
                out.push(Factorization {
                    roots: chosen.iter().map(|&j| positive[j].clone()).collect(),
                });
            }
            return;
        }
        for (j, s) in refl.iter().enumerate() {
            let next = s.compose(rest);
            if reflection_length(&next) == mu - chosen.len() - 1 {
                chosen.push(j);
                go(&next, mu, refl, positive, chosen, out);
                chosen.pop();
            }
        }
    }
    go(
        &coxeter_element(rs),
        mu,
        &refl,
        &positive,
        &mut chosen,
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// Closure of `{fz}` under all moves and inverse moves, sorted.
pub fn hurwitz_orbit(
    fz: &Factorization,
    rs: &RootSystem,
    limit: usize,
) -> Result<Vec<Factorization>, BraidError> {
    let mut seen: BTreeSet<Factorization> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(fz.clone());
    queue.push_back(fz.clone());
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len().saturating_sub(1) {
            for y in [hurwitz_move(i, &x, rs)?, hurwitz_move_inverse(i, &x, rs)?] {
                if seen.contains(&y) {
                    continue;
                }
                if seen.len() >= limit {
                    return Err(BraidError::LimitExceeded { limit });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
