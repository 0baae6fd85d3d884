use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::WeylError;
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    D,
    E,
}

/// An irreducible simply-laced type: `A_k (k ≥ 1)`, `D_k (k ≥ 4)`, `E_6, E_7, E_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    letter: Letter,
    rank: usize,
}

impl RootSystemType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self, WeylError> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { letter, rank })
        } else {
            Err(WeylError::InvalidType(format!("{letter:?}{rank}")))
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Letter::A, rank).expect("valid A rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Letter::D, rank).expect("valid D rank")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Letter::E, rank).expect("valid E rank")
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every type of the given rank.
    pub fn all_of_rank(rank: usize) -> Vec<Self> {
        [Letter::A, Letter::D, Letter::E]
            .into_iter()
            .filter_map(|l| Self::new(l, rank).ok())
            .collect()
    }

    /// Every type with rank at most `max_rank`, ordered by letter then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=max_rank).flat_map(Self::all_of_rank).collect();
        out.sort();
        out
    }

    /// Edges of the Dynkin diagram, 0-based, Bourbaki numbering.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.letter {
            Letter::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Letter::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Letter::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Cartan matrix: 2 on the diagonal, −1 on Dynkin edges.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let mut c = IntMatrix::identity(self.rank);
        for i in 0..self.rank {
            c.set(i, i, 2);
        }
        for (i, j) in self.dynkin_edges() {
            c.set(i, j, -1);
            c.set(j, i, -1);
        }
        c
    }

    /// Cartan matrix of the extended (affine) diagram; the extra node is last.
    pub fn affine_cartan_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let attach: Vec<usize> = match (self.letter, n) {
            (Letter::A, 1) => vec![0, 0],
            (Letter::A, _) => vec![0, n - 1],
            (Letter::D, _) => vec![1],
            (Letter::E, 6) => vec![1],
            (Letter::E, 7) => vec![0],
            (Letter::E, _) => vec![7],
        };
        let mut rows = self.cartan_matrix().rows();
        for r in rows.iter_mut() {
            r.push(0);
        }
        rows.push(vec![0; n + 1]);
        rows[n][n] = 2;
        for a in attach {
            rows[a][n] -= 1;
            rows[n][a] -= 1;
        }
        IntMatrix::from_rows(&rows)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || WeylError::InvalidType(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(letter, rank)
    }
}

/// Roots in simple-root coordinates with the Cartan matrix as Gram form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rstype: RootSystemType,
    cartan: IntMatrix,
    roots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Closes the simple roots under all simple reflections.
    pub fn build(t: RootSystemType) -> Self {
        let cartan = t.cartan_matrix();
        let n = t.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            let cv = cartan.apply(&v);
            for j in 0..n {
                if cv[j] == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[j] -= cv[j];
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        Self {
            rstype: t,
            cartan,
            roots,
        }
    }

    pub fn rstype(&self) -> RootSystemType {
        self.rstype
    }

    pub fn rank(&self) -> usize {
        self.rstype.rank()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// All roots, ordered by height then lexicographically.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .filter(|r| is_positive(r))
            .cloned()
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.roots
            .binary_search_by(|r| height(r).cmp(&height(v)).then_with(|| r.as_slice().cmp(v)))
            .is_ok()
    }

    /// `B(u, v) = uᵀ C v`.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        self.cartan.form(u, v)
    }
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0)
}

/// `v` or `−v`, whichever is positive.
pub fn positive_representative(v: &[i64]) -> Vec<i64> {
    if is_positive(v) {
        v.to_vec()
    } else {
        v.iter().map(|c| -c).collect()
    }
}
