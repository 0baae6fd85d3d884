use super::roots::{height, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentData {
    /// Sorted ascending, with multiplicity.
    pub exponents: Vec<u64>,
    pub coxeter_number: u64,
}

/// Exponents as the partition dual to the heights of the positive roots:
/// `m` occurs `#{ht = m} − #{ht = m + 1}` times.
pub fn exponents_and_coxeter_number(rs: &RootSystem) -> ExponentData {
    let heights: Vec<usize> = rs
        .positive_roots()
        .iter()
        .map(|r| height(r) as usize)
        .collect();
    let max = heights.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 2];
    for h in heights {
        count[h] += 1;
    }
    let mut exponents = Vec::new();
    for m in 1..=max {
        for _ in 0..count[m] - count[m + 1] {
            exponents.push(m as u64);
        }
    }
    let coxeter_number = exponents.last().map_or(1, |m| m + 1);
    ExponentData {
        exponents,
        coxeter_number,
    }
}

/// `|W| = Π (m_i + 1)`.
pub fn weyl_group_order(rs: &RootSystem) -> u64 {
    exponents_and_coxeter_number(rs)
        .exponents
        .iter()
        .map(|m| m + 1)
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_group, RootSystemType};

    fn ex(s: &str) -> ExponentData {
        exponents_and_coxeter_number(&RootSystem::build(s.parse().unwrap()))
    }

    #[test]
    fn known_exponents() {
        for k in 1..=9u64 {
            let e = ex(&format!("A{k}"));
            assert_eq!(e.exponents, (1..=k).collect::<Vec<_>>());
            assert_eq!(e.coxeter_number, k + 1);
        }
        assert_eq!(ex("D4").exponents, vec![1, 3, 3, 5]);
        assert_eq!(ex("D4").coxeter_number, 6);
        assert_eq!(ex("E6").exponents, vec![1, 4, 5, 7, 8, 11]);
        assert_eq!(ex("E7").exponents, vec![1, 5, 7, 9, 11, 13, 17]);
        assert_eq!(ex("E7").coxeter_number, 18);
        assert_eq!(ex("E8").exponents, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(ex("E8").coxeter_number, 30);
    }

    #[test]
    fn exponent_symmetry_and_sum() {
        for t in RootSystemType::all_up_to_rank(10) {
            let rs = RootSystem::build(t);
            let e = exponents_and_coxeter_number(&rs);
            let n = e.exponents.len();
            assert_eq!(n, t.rank());
            assert_eq!(e.exponents[0], 1);
            for i in 0..n {
                assert_eq!(
                    e.exponents[i] + e.exponents[n - 1 - i],
                    e.coxeter_number,
                    "{t}"
                );
            }
            let sum: u64 = e.exponents.iter().sum();
            assert_eq!(sum as usize, rs.positive_roots().len(), "{t}");
        }
    }

    #[test]
    fn group_order_formula() {
        let order = |s: &str| weyl_group_order(&RootSystem::build(s.parse().unwrap()));
        assert_eq!(order("A2"), 6);
        assert_eq!(order("D4"), 192);
        assert_eq!(order("E8"), 696_729_600);
        for s in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"] {
            let rs = RootSystem::build(s.parse().unwrap());
            let n = enumerate_group(&rs, 5000).unwrap().len();
            assert_eq!(n as u64, weyl_group_order(&rs), "{s}");
        }
    }
}
