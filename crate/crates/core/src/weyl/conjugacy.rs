use std::collections::{HashSet, VecDeque};

use super::exponents::exponents_and_coxeter_number;
use super::group::{
    coxeter_element, coxeter_length, element_order, enumerate_with_inverses, reflection_length,
    simple_reflection, GroupElement,
};
use super::roots::{Letter, RootSystem};
use super::WeylError;
use crate::Rational;

/// Decides membership in the conjugacy class of Coxeter elements.
///
/// Small groups use the explicitly enumerated class. Larger ones use cyclic
/// shifts: conjugating by simple reflections without increasing the length
/// reaches an element of minimal length in the class, and the Coxeter class is
/// the one whose minimal length is the rank.
#[derive(Clone, Debug)]
pub struct CoxeterOracle {
    rs: RootSystem,
    h: u64,
    charpoly: Vec<Rational>,
    simple: Vec<GroupElement>,
    class: Option<HashSet<GroupElement>>,
    budget: usize,
}

impl CoxeterOracle {
    pub fn new(rs: &RootSystem, budget: usize) -> Result<Self, WeylError> {
        let c = coxeter_element(rs);
        let h = exponents_and_coxeter_number(rs).coxeter_number;
        let charpoly = c.matrix().to_rational().characteristic_polynomial();
        let simple = (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect();
        let t = rs.rstype();
        let class = if t.rank() <= 4 || (t.letter() == Letter::A && t.rank() == 5) {
            let group = enumerate_with_inverses(rs, budget.max(1000))?;
            Some(
                group
                    .iter()
                    .map(|(g, g_inv)| g.compose(&c).compose(g_inv))
                    .collect(),
            )
        } else {
            None
        };
        Ok(Self {
            rs: rs.clone(),
            h,
            charpoly,
            simple,
            class,
            budget,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Size of the enumerated class, when it was enumerated.
    pub fn class_size(&self) -> Option<usize> {
        self.class.as_ref().map(|c| c.len())
    }

    pub fn is_coxeter(&self, w: &GroupElement) -> Result<bool, WeylError> {
        let mu = self.rs.rank();
        if w.rank() != mu || reflection_length(w) != mu {
            return Ok(false);
        }
        match element_order(w, self.h) {
            Ok(k) if k == self.h => {}
            _ => return Ok(false),
        }
        if w.matrix().to_rational().characteristic_polynomial() != self.charpoly {
            return Ok(false);
        }
        if let Some(class) = &self.class {
            return Ok(class.contains(w));
        }
        self.cyclic_shift_search(w)
    }

    fn cyclic_shift_search(&self, w: &GroupElement) -> Result<bool, WeylError> {
        let mu = self.rs.rank();
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back((w.clone(), coxeter_length(&self.rs, w)));
        while let Some((x, len)) = queue.pop_front() {
            if len == mu {
                return Ok(true);
            }
            let mut shorter = None;
            for s in &self.simple {
                let y = s.compose(&x).compose(s);
                let l = coxeter_length(&self.rs, &y);
                if l > len || seen.contains(&y) {
                    continue;
                }
                if l < len {
                    shorter = Some((y, l));
                    break;
                }
                if seen.len() >= self.budget {
                    return Err(WeylError::Undecided {
                        budget: self.budget,
                    });
                }
                seen.insert(y.clone());
                queue.push_back((y, l));
            }
            if let Some((y, l)) = shorter {
                // strictly shorter: restart the search from there
                seen.clear();
                queue.clear();
                seen.insert(y.clone());
                queue.push_back((y, l));
            }
        }
        Ok(false)
    }
}

/// True iff `w` is conjugate in `W` to `s_1 ⋯ s_μ`.
pub fn is_coxeter_element(
    rs: &RootSystem,
    w: &GroupElement,
    budget: usize,
) -> Result<bool, WeylError> {
    CoxeterOracle::new(rs, budget)?.is_coxeter(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_group, reflection, RootSystemType};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn random_element(
        rs: &RootSystem,
        rng: &mut ChaCha8Rng,
        len: usize,
    ) -> (GroupElement, GroupElement) {
        let mut g = GroupElement::identity(rs.rank());
        let mut g_inv = g.clone();
        for _ in 0..len {
            let s = simple_reflection(rs, rng.gen_range(0..rs.rank()));
            g = g.compose(&s);
            g_inv = s.compose(&g_inv);
        }
        (g, g_inv)
    }

    #[test]
    fn coxeter_element_is_coxeter() {
        for t in RootSystemType::all_up_to_rank(8) {
            let rs = RootSystem::build(t);
            assert!(
                is_coxeter_element(&rs, &coxeter_element(&rs), 100_000).unwrap(),
                "{t}"
            );
        }
    }

    #[test]
    fn reflections_are_not_coxeter() {
        let d5 = rs("D5");
        let oracle = CoxeterOracle::new(&d5, 10_000).unwrap();
        for alpha in d5.roots() {
            assert!(!oracle.is_coxeter(&reflection(&d5, alpha).unwrap()).unwrap());
        }
    }

    #[test]
    fn conjugates_are_coxeter() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["A3", "D4", "A5", "D5", "E6", "E7", "E8"] {
            let rs = rs(name);
            let oracle = CoxeterOracle::new(&rs, 100_000).unwrap();
            let c = coxeter_element(&rs);
            for _ in 0..10 {
                let (g, g_inv) = random_element(&rs, &mut rng, 25);
                assert!(
                    oracle.is_coxeter(&g.compose(&c).compose(&g_inv)).unwrap(),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn class_sizes() {
        // |W| / h
        assert_eq!(
            CoxeterOracle::new(&rs("A3"), 1000).unwrap().class_size(),
            Some(6)
        );
        assert_eq!(
            CoxeterOracle::new(&rs("D4"), 1000).unwrap().class_size(),
            Some(32)
        );
        assert_eq!(
            CoxeterOracle::new(&rs("E6"), 1000).unwrap().class_size(),
            None
        );
    }

    #[test]
    fn shift_search_agrees_with_enumeration() {
        let d4 = rs("D4");
        let exact = CoxeterOracle::new(&d4, 1000).unwrap();
        let mut shifts = exact.clone();
        shifts.class = None;
        for w in enumerate_group(&d4, 1000).unwrap() {
            assert_eq!(
                exact.is_coxeter(&w).unwrap(),
                shifts.is_coxeter(&w).unwrap()
            );
        }
    }

    #[test]
    fn negated_coxeter_element() {
        // -1 lies in W(D4); -c fixes a plane
        let d4 = rs("D4");
        let c = coxeter_element(&d4);
        let w0 = GroupElement::from_matrix(crate::linalg::IntMatrix::identity(4).neg());
        let other = c.compose(&w0);
        assert!(!is_coxeter_element(&d4, &other, 1000).unwrap());
    }
}
