use num_traits::Signed;

use super::BraidError;
use crate::linalg::IntMatrix;
use crate::weyl::RootSystem;

/// A lattice `Z^μ` with an integral symmetric intersection form `∘`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLattice {
    form: IntMatrix,
}

impl CycleLattice {
    /// Requires a symmetric form with `−2` on the diagonal.
    pub fn new(form: IntMatrix) -> Result<Self, BraidError> {
        if !form.is_symmetric() || (0..form.dim()).any(|i| form.get(i, i) != -2) {
            return Err(BraidError::BadForm);
        }
        Ok(Self { form })
    }

    /// The lattice of vanishing cycles of a simple singularity: form `−C`.
    pub fn from_root_system(rs: &RootSystem) -> Self {
        Self {
            form: rs.cartan().neg(),
        }
    }

    pub fn rank(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn intersect(&self, u: &[i64], v: &[i64]) -> i64 {
        self.form.form(u, v)
    }

    fn check_cycle(&self, delta: &[i64]) -> Result<(), BraidError> {
        let s = self.intersect(delta, delta);
        if s == -2 {
            Ok(())
        } else {
            Err(BraidError::NotMinusTwo(s))
        }
    }
}

/// `σ ↦ σ + (σ∘Δ)·Δ`.
pub fn picard_lefschetz(
    sigma: &[i64],
    delta: &[i64],
    lattice: &CycleLattice,
) -> Result<Vec<i64>, BraidError> {
    lattice.check_cycle(delta)?;
    Ok(transvect(sigma, delta, lattice))
}

fn transvect(sigma: &[i64], delta: &[i64], lattice: &CycleLattice) -> Vec<i64> {
    let c = lattice.intersect(sigma, delta);
    sigma.iter().zip(delta).map(|(s, d)| s + c * d).collect()
}

/// Matrix of the transvection along `delta`, columns are images of basis vectors.
pub fn transvection_matrix(delta: &[i64], lattice: &CycleLattice) -> Result<IntMatrix, BraidError> {
    lattice.check_cycle(delta)?;
    let n = lattice.rank();
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            transvect(&e, delta, lattice)
        })
        .collect();
    Ok(IntMatrix::from_columns(&cols))
}

/// An ordered basis of vanishing cycles, each of self-intersection `−2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinguishedTuple {
    cycles: Vec<Vec<i64>>,
}

impl DistinguishedTuple {
    pub fn new(cycles: Vec<Vec<i64>>, lattice: &CycleLattice) -> Result<Self, BraidError> {
        if cycles.len() != lattice.rank() {
            return Err(BraidError::NotABasis);
        }
        for c in &cycles {
            lattice.check_cycle(c)?;
        }
        let det = IntMatrix::from_columns(&cycles).determinant();
        if !(det.is_integer() && det.abs() == crate::Rational::from_integer(1.into())) {
            return Err(BraidError::NotABasis);
        }
        Ok(Self { cycles })
    }

    /// The standard basis vectors.
    pub fn standard(lattice: &CycleLattice) -> Self {
        let n = lattice.rank();
        Self {
            cycles: (0..n)
                .map(|i| {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e
                })
                .collect(),
        }
    }

    pub fn cycles(&self) -> &[Vec<i64>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `h_1 ∘ h_2 ∘ ⋯ ∘ h_μ` as a matrix.
    pub fn monodromy(&self, lattice: &CycleLattice) -> IntMatrix {
        self.cycles
            .iter()
            .fold(IntMatrix::identity(lattice.rank()), |acc, d| {
                &acc * &transvection_matrix(d, lattice).expect("cycles have self-intersection -2")
            })
    }
}

fn check_index(i: usize, len: usize) -> Result<(), BraidError> {
    if i + 1 < len {
        Ok(())
    } else {
        Err(BraidError::IndexOutOfRange { index: i, len })
    }
}

/// Positions `i, i+1` (0-based) become `(Δ_{i+1}, Δ_i + (Δ_i∘Δ_{i+1})·Δ_{i+1})`.
pub fn braid_move_tuple(
    i: usize,
    t: &DistinguishedTuple,
    lattice: &CycleLattice,
) -> Result<DistinguishedTuple, BraidError> {
    check_index(i, t.len())?;
    let mut cycles = t.cycles.clone();
    let (a, b) = (&t.cycles[i], &t.cycles[i + 1]);
    cycles[i] = b.clone();
    cycles[i + 1] = transvect(a, b, lattice);
    Ok(DistinguishedTuple { cycles })
}

/// Positions `i, i+1` become `(Δ_{i+1} + (Δ_{i+1}∘Δ_i)·Δ_i, Δ_i)`.
pub fn braid_move_tuple_inverse(
    i: usize,
    t: &DistinguishedTuple,
    lattice: &CycleLattice,
) -> Result<DistinguishedTuple, BraidError> {
    check_index(i, t.len())?;
    let mut cycles = t.cycles.clone();
    let (a, b) = (&t.cycles[i], &t.cycles[i + 1]);
    cycles[i] = transvect(b, a, lattice);
    cycles[i + 1] = a.clone();
    Ok(DistinguishedTuple { cycles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::RootSystemType;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lattice(s: &str) -> CycleLattice {
        CycleLattice::from_root_system(&RootSystem::build(s.parse().unwrap()))
    }

    fn random_tuple(l: &CycleLattice, rng: &mut ChaCha8Rng, moves: usize) -> DistinguishedTuple {
        let mut t = DistinguishedTuple::standard(l);
        for _ in 0..moves {
            let i = rng.gen_range(0..l.rank() - 1);
            t = if rng.gen_bool(0.5) {
                braid_move_tuple(i, &t, l).unwrap()
            } else {
                braid_move_tuple_inverse(i, &t, l).unwrap()
            };
        }
        t
    }

    #[test]
    fn transvection_basics() {
        let l = lattice("A2");
        let d = vec![1, 0];
        assert_eq!(picard_lefschetz(&d, &d, &l).unwrap(), vec![-1, 0]);
        assert_eq!(picard_lefschetz(&[0, 1], &d, &l).unwrap(), vec![1, 1]);
        let l3 = lattice("A3");
        assert_eq!(
            picard_lefschetz(&[0, 0, 1], &[1, 0, 0], &l3).unwrap(),
            vec![0, 0, 1]
        );
        assert_eq!(picard_lefschetz(&[0, 1], &[1, 1], &l).unwrap(), vec![-1, 0]);
        assert_eq!(
            picard_lefschetz(&[1, 0], &[1, 2], &l),
            Err(BraidError::NotMinusTwo(-6))
        );
    }

    #[test]
    fn lattice_validation() {
        assert_eq!(
            CycleLattice::new(IntMatrix::from_rows(&[vec![-2, 1], vec![0, -2]])),
            Err(BraidError::BadForm)
        );
        assert!(CycleLattice::new(RootSystemType::d(4).cartan_matrix().neg()).is_ok());
        let l = lattice("A2");
        assert_eq!(
            DistinguishedTuple::new(vec![vec![1, 0], vec![1, 0]], &l),
            Err(BraidError::NotABasis)
        );
        assert!(DistinguishedTuple::new(vec![vec![1, 1], vec![0, 1]], &l).is_ok());
    }

    #[test]
    fn moves_invert_and_preserve_monodromy() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for name in ["A2", "A3", "D4"] {
            let l = lattice(name);
            let m = DistinguishedTuple::standard(&l).monodromy(&l);
            for _ in 0..50 {
                let t = random_tuple(&l, &mut rng, 6);
                assert_eq!(t.monodromy(&l), m, "{name}");
                assert!(DistinguishedTuple::new(t.cycles().to_vec(), &l).is_ok());
                let i = rng.gen_range(0..l.rank() - 1);
                let back =
                    braid_move_tuple_inverse(i, &braid_move_tuple(i, &t, &l).unwrap(), &l).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn braid_relations_on_tuples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = lattice("A3");
        let b = |i, t: &DistinguishedTuple| braid_move_tuple(i, t, &l).unwrap();
        for _ in 0..100 {
            let t = random_tuple(&l, &mut rng, 8);
            assert_eq!(b(0, &b(1, &b(0, &t))), b(1, &b(0, &b(1, &t))));
        }
        let l4 = lattice("A4");
        let b4 = |i, t: &DistinguishedTuple| braid_move_tuple(i, t, &l4).unwrap();
        for _ in 0..100 {
            let t = random_tuple(&l4, &mut rng, 8);
            assert_eq!(b4(0, &b4(2, &t)), b4(2, &b4(0, &t)));
        }
    }

    #[test]
    fn index_range() {
        let l = lattice("A2");
        let t = DistinguishedTuple::standard(&l);
        assert_eq!(
            braid_move_tuple(1, &t, &l),
            Err(BraidError::IndexOutOfRange { index: 1, len: 2 })
        );
    }
}
