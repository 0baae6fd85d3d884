use super::newton::{newton_diagram_2d, NewtonDiagram2D};
use super::Germ;
use crate::grobner::{class_in_local_algebra, milnor_number};
use crate::poly::Polynomial;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuConstSample {
    pub t: Rational,
    /// `None` when the germ is not a plane curve.
    pub diagram_preserved: Option<bool>,
    pub dimension: Option<usize>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuConstReport {
    /// Representative of `[f]` in the local algebra.
    pub class: Polynomial,
    /// `[f] = 0`: the family is constant and every sample passes.
    pub vacuous: bool,
    pub dimension: usize,
    pub diagram: Option<NewtonDiagram2D>,
    pub samples: Vec<MuConstSample>,
}

impl MuConstReport {
    pub fn pass(&self) -> bool {
        self.samples.iter().all(|s| s.pass)
    }
}

/// Checks that `f + t·[f]` keeps the Newton diagram and the Milnor number of
/// `f` at each sample `t`.
pub fn mu_const_linear_check(g: &Germ, samples: &[Rational]) -> MuConstReport {
    let f = g.poly();
    let class = class_in_local_algebra(f).expect("germ is isolated");
    let dimension = g.milnor_number();
    let diagram = newton_diagram_2d(f).ok();
    let vacuous = class.is_zero();
    let samples = samples
        .iter()
        .map(|t| {
            if vacuous {
                return MuConstSample {
                    t: t.clone(),
                    diagram_preserved: diagram.as_ref().map(|_| true),
                    dimension: Some(dimension),
                    error: None,
                    pass: true,
                };
            }
            let ft = f.add(&class.scale(t));
            let diagram_preserved = diagram
                .as_ref()
                .map(|d| newton_diagram_2d(&ft).ok().as_ref() == Some(d));
            match milnor_number(&ft) {
                Ok(mu) => MuConstSample {
                    t: t.clone(),
                    diagram_preserved,
                    dimension: Some(mu),
                    error: None,
                    pass: diagram_preserved != Some(false) && mu == dimension,
                },
                Err(e) => MuConstSample {
                    t: t.clone(),
                    diagram_preserved,
                    dimension: None,
                    error: Some(e.to_string()),
                    pass: false,
                },
            }
        })
        .collect();
    MuConstReport {
        class,
        vacuous,
        dimension,
        diagram,
        samples,
    }
}
