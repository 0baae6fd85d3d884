use std::collections::{HashMap, HashSet, VecDeque};

use super::roots::{is_positive, RootSystem};
use super::WeylError;
use crate::linalg::IntMatrix;

/// An element of the Weyl group acting on the root lattice in simple-root
/// coordinates (columns are images of simple roots).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    mat: IntMatrix,
}

impl GroupElement {
    pub fn from_matrix(mat: IntMatrix) -> Self {
        Self { mat }
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            mat: IntMatrix::identity(rank),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn rank(&self) -> usize {
        self.mat.dim()
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            mat: &self.mat * &other.mat,
        }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.mat.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn pow(&self, k: u64) -> GroupElement {
        GroupElement {
            mat: self.mat.pow(k),
        }
    }

    /// Inverse via `w⁻¹ = C⁻¹ wᵀ C`, computed as `w^(order−1)` to stay integral.
    pub fn inverse(&self, cap: u64) -> Result<GroupElement, WeylError> {
        let k = element_order(self, cap)?;
        Ok(self.pow(k - 1))
    }

    /// `wᵀ·B·w = B`.
    pub fn preserves_form(&self, form: &IntMatrix) -> bool {
        &(&self.mat.transpose() * form) * &self.mat == *form
    }

    pub fn trace(&self) -> i64 {
        self.mat.trace()
    }
}

/// `x ↦ x − B(x, α)·α`.
pub fn reflection(rs: &RootSystem, alpha: &[i64]) -> Result<GroupElement, WeylError> {
    if !rs.is_root(alpha) {
        return Err(WeylError::NotARoot(alpha.to_vec()));
    }
    Ok(reflection_unchecked(rs.cartan(), alpha))
}

/// Reflection in a vector of norm 2 for the form `cartan`, without root lookup.
pub(crate) fn reflection_unchecked(cartan: &IntMatrix, alpha: &[i64]) -> GroupElement {
    let n = alpha.len();
    let b_alpha = cartan.apply(alpha);
    let mut m = IntMatrix::identity(n);
    for (i, &a) in alpha.iter().enumerate() {
        for (j, &b) in b_alpha.iter().enumerate() {
            m.set(i, j, m.get(i, j) - a * b);
        }
    }
    GroupElement { mat: m }
}

pub fn simple_reflection(rs: &RootSystem, i: usize) -> GroupElement {
    reflection_unchecked(rs.cartan(), &rs.simple_root(i))
}

/// `s_1 s_2 ⋯ s_μ`.
pub fn coxeter_element(rs: &RootSystem) -> GroupElement {
    (0..rs.rank()).fold(GroupElement::identity(rs.rank()), |acc, i| {
        acc.compose(&simple_reflection(rs, i))
    })
}

/// Smallest `k ≤ cap` with `w^k = 1`.
pub fn element_order(w: &GroupElement, cap: u64) -> Result<u64, WeylError> {
    let mut acc = w.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Ok(k);
        }
        acc = acc.compose(w);
    }
    Err(WeylError::CapExceeded { cap })
}

/// `rank(w − 1)`: number of eigenvalues different from 1.
pub fn reflection_length(w: &GroupElement) -> usize {
    w.mat.sub(&IntMatrix::identity(w.rank())).rank()
}

pub fn trace(w: &GroupElement) -> i64 {
    w.trace()
}

/// Number of positive roots sent to negative roots (word length in simple reflections).
pub fn coxeter_length(rs: &RootSystem, w: &GroupElement) -> usize {
    rs.roots()
        .iter()
        .filter(|r| is_positive(r))
        .filter(|r| !is_positive(&w.apply(r)))
        .count()
}

/// Closure of `generators` under multiplication, sorted canonically.
pub fn generated_subgroup(
    generators: &[GroupElement],
    rank: usize,
    limit: usize,
) -> Result<Vec<GroupElement>, WeylError> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = GroupElement::identity(rank);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.compose(s);
            if seen.contains(&h) {
                continue;
            }
            if seen.len() >= limit {
                return Err(WeylError::LimitExceeded { limit });
            }
            seen.insert(h.clone());
            queue.push_back(h);
        }
    }
    let mut out: Vec<GroupElement> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All of `W`, by breadth-first closure of the simple reflections.
pub fn enumerate_group(rs: &RootSystem, limit: usize) -> Result<Vec<GroupElement>, WeylError> {
    let gens: Vec<GroupElement> = (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect();
    generated_subgroup(&gens, rs.rank(), limit)
}

/// All of `W` as a map from element to inverse.
pub(crate) fn enumerate_with_inverses(
    rs: &RootSystem,
    limit: usize,
) -> Result<HashMap<GroupElement, GroupElement>, WeylError> {
    let gens: Vec<GroupElement> = (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect();
    let id = GroupElement::identity(rs.rank());
    let mut seen = HashMap::new();
    seen.insert(id.clone(), id.clone());
    let mut queue = VecDeque::from([(id.clone(), id)]);
    while let Some((g, g_inv)) = queue.pop_front() {
        for s in &gens {
            let h = g.compose(s);
            if seen.contains_key(&h) {
                continue;
            }
            if seen.len() >= limit {
                return Err(WeylError::LimitExceeded { limit });
            }
            let h_inv = s.compose(&g_inv);
            seen.insert(h.clone(), h_inv.clone());
            queue.push_back((h, h_inv));
        }
    }
    Ok(seen)
}
