use std::collections::{BTreeSet, VecDeque};

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;

use super::hurwitz::{hurwitz_move, hurwitz_move_inverse, is_in_s, Factorization};
use super::BraidError;
use crate::weyl::{is_coxeter_element, RootSystem};

/// Nodes are the given roots; `i - j` carries weight `|B(α_i, α_j)|` when nonzero.
pub fn dynkin_diagram(rs: &RootSystem, roots: &[Vec<i64>]) -> UnGraph<Vec<i64>, i64> {
    let mut g = UnGraph::new_undirected();
    let nodes: Vec<_> = roots.iter().map(|r| g.add_node(r.clone())).collect();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let b = rs.form(&roots[i], &roots[j]).abs();
            if b != 0 {
                g.add_edge(nodes[i], nodes[j], b);
            }
        }
    }
    g
}

/// Whether the Gram matrix of `roots` is the Cartan matrix of `rs` up to
/// reordering and sign changes of roots.
pub fn is_dynkin_of(rs: &RootSystem, roots: &[Vec<i64>]) -> bool {
    let target = dynkin_diagram(rs, &rs.simple_roots());
    let g = dynkin_diagram(rs, roots);
    is_isomorphic_matching(&g, &target, |_, _| true, |a, b| a == b)
}

/// Breadth-first search of the Hurwitz orbit of `fz` for a tuple whose
/// diagram is the Dynkin diagram of `rs`.
pub fn canonical_dynkin_search(
    rs: &RootSystem,
    fz: &Factorization,
    limit: usize,
) -> Result<Factorization, BraidError> {
    if !is_in_s(rs, fz).in_s() {
        return Err(BraidError::Precondition("factorization is not in S".into()));
    }
    if !is_coxeter_element(rs, &fz.product(rs), limit)? {
        return Err(BraidError::Precondition(
            "product is not a Coxeter element".into(),
        ));
    }
    let mut seen: BTreeSet<Factorization> = BTreeSet::new();
    let mut queue = VecDeque::from([fz.clone()]);
    seen.insert(fz.clone());
    while let Some(x) = queue.pop_front() {
        if is_dynkin_of(rs, x.roots()) {
            return Ok(x);
        }
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
    Err(BraidError::Precondition(
        "orbit contains no Dynkin tuple".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{enumerate_coxeter_factorizations, hurwitz_orbit};

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn diagrams_of_simple_roots() {
        let a3 = rs("A3");
        let g = dynkin_diagram(&a3, &a3.simple_roots());
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let d4 = rs("D4");
        let g = dynkin_diagram(&d4, &d4.simple_roots());
        let degrees: Vec<usize> = g.node_indices().map(|n| g.neighbors(n).count()).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 3);
        let orth = dynkin_diagram(&a3, &[vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(orth.edge_count(), 0);
    }

    #[test]
    fn search_from_simple_is_immediate() {
        let d4 = rs("D4");
        let f = Factorization::simple(&d4);
        assert_eq!(canonical_dynkin_search(&d4, &f, 1000).unwrap(), f);
    }

    #[test]
    fn search_from_every_orbit_member() {
        for name in ["A2", "A3", "D4"] {
            let r = rs(name);
            for f in enumerate_coxeter_factorizations(&r).unwrap() {
                let found = canonical_dynkin_search(&r, &f, 1000).unwrap();
                assert!(is_dynkin_of(&r, found.roots()));
                assert!(hurwitz_orbit(&f, &r, 1000).unwrap().contains(&found));
            }
        }
    }

    #[test]
    fn preconditions() {
        let a3 = rs("A3");
        let not_s = Factorization::new(vec![vec![1, 0, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(matches!(
            canonical_dynkin_search(&a3, &not_s, 100),
            Err(BraidError::Precondition(_))
        ));
        let d4 = rs("D4");
        let pos = d4.positive_roots();
        let c = crate::weyl::CoxeterOracle::new(&d4, 1000).unwrap();
        let mut found = None;
        'search: for a in &pos {
            for b in &pos {
                for x in &pos {
                    let f =
                        Factorization::new(vec![a.clone(), b.clone(), x.clone(), pos[0].clone()]);
                    if is_in_s(&d4, &f).in_s() && !c.is_coxeter(&f.product(&d4)).unwrap() {
                        found = Some(f);
                        break 'search;
                    }
                }
            }
        }
        let f = found.expect("D4 has tuples in S with non-Coxeter product");
        assert!(matches!(
            canonical_dynkin_search(&d4, &f, 1000),
            Err(BraidError::Precondition(_))
        ));
    }
}
