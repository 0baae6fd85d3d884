use std::cmp::Ordering;

/// Exponent vector `(k_1, …, k_n)` standing for `z_1^{k_1} ⋯ z_n^{k_n}`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the first variable, then the second, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the variable if this is a pure power `z_i^k` with `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nonzero.next()?;
        nonzero.next().is_none().then_some(i)
    }

    /// Lexicographic comparison after comparing weighted degree.
    pub fn cmp_weighted(&self, other: &Monomial, weights: &[u64]) -> Ordering {
        let wd = |m: &Monomial| -> u64 {
            m.0.iter()
                .zip(weights)
                .map(|(&e, &w)| u64::from(e) * w)
                .sum()
        };
        wd(self).cmp(&wd(other)).then_with(|| self.0.cmp(&other.0))
    }

    pub(crate) fn remove_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(i);
        Monomial(e)
    }

    pub(crate) fn push_var(&self, exp: u32) -> Monomial {
        let mut e = self.0.clone();
        e.push(exp);
        Monomial(e)
    }

    pub(crate) fn exponent_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.0[i]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x3 = Monomial::new(vec![3, 0]);
        let y5 = Monomial::new(vec![0, 5]);
        let x2y = Monomial::new(vec![2, 1]);
        let xy2 = Monomial::new(vec![1, 2]);
        assert!(y5 > x3);
        assert!(x2y > xy2);
        assert!(Monomial::one(2) < Monomial::var(2, 1));
        assert!(Monomial::var(2, 1) < Monomial::var(2, 0));
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![3, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![2, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::new(vec![0, 4])), Monomial::new(vec![1, 4]));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::new(vec![0, 3]).pure_power_var(), Some(1));
        assert_eq!(Monomial::new(vec![1, 3]).pure_power_var(), None);
        assert_eq!(Monomial::one(2).pure_power_var(), None);
    }
}
