use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::spectrum::{monodromy_order, spectrum_length, spectrum_quasihomogeneous, Spectrum};
use super::{candidate_types, Germ, SingularityError};
use crate::poly::{hessian_corank, Monomial, Polynomial, Weights};
use crate::weyl::{exponents_and_coxeter_number, RootSystem, RootSystemType};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub rstype: RootSystemType,
    pub mu: usize,
    pub coxeter_number: u64,
    pub exponents: Vec<u64>,
    pub weights: Weights,
    /// Spectrum of the germ as given.
    pub spectrum: Spectrum,
    /// The same spectrum moved to three variables, all values in `(0, 1)`.
    pub spectrum3: Spectrum,
}

/// Removes variables that occur only in a single term `c·z²`.
///
/// Returns the remaining polynomial and the indices of the removed variables.
pub fn strip_suspension_variables(f: &Polynomial) -> (Polynomial, Vec<usize>) {
    let n = f.nvars();
    let stripped: Vec<usize> = (0..n)
        .filter(|&i| {
            let mut occurring = f.monomials().filter(|m| m.exponents()[i] > 0);
            let mut square = vec![0; n];
            square[i] = 2;
            occurring.next() == Some(&Monomial::new(square)) && occurring.next().is_none()
        })
        .collect();
    let mut core = Polynomial::from_terms(
        n,
        f.terms()
            .filter(|(m, _)| stripped.iter().all(|&i| m.exponents()[i] == 0))
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    for &i in stripped.iter().rev() {
        core = core.without_var(i);
    }
    (core, stripped)
}

/// Spectrum shifted by `(3 − n)/2`, as if stabilized to three variables.
pub fn three_variable_spectrum(s: &Spectrum) -> Spectrum {
    let shift = Rational::new(BigInt::from(3) - BigInt::from(s.nvars()), BigInt::from(2));
    Spectrum::new(s.values().iter().map(|v| v + &shift).collect(), 3)
}

/// Identifies the A-D-E type from the spectrum via the exponents of the
/// Coxeter element it must match.
pub fn classify_ade(g: &Germ) -> Result<ClassificationResult, SingularityError> {
    let (core, _) = strip_suspension_variables(g.poly());
    let corank = hessian_corank(g.poly())?;
    if corank > 2 {
        return Err(SingularityError::CorankTooLarge { corank });
    }
    if core.nvars() > 2 {
        return Err(SingularityError::CoreTooLarge {
            nvars: core.nvars(),
        });
    }
    let weights = g.require_weights()?.clone();
    let spectrum = spectrum_quasihomogeneous(g)?;
    let length = spectrum_length(&spectrum)?;
    if length >= Rational::one() {
        return Err(SingularityError::NotSimple { length });
    }
    let spectrum3 = three_variable_spectrum(&spectrum);
    debug_assert!(spectrum3.in_simple_interval());
    let h_big = monodromy_order(&spectrum3);
    let h = h_big.to_u64().expect("Coxeter number fits in u64");
    let h_rat = Rational::from_integer(h_big);
    let exponents: Vec<u64> = spectrum3
        .values()
        .iter()
        .map(|v| {
            let m = v * &h_rat;
            debug_assert!(m.is_integer() && m.is_positive());
            m.to_integer().to_u64().expect("exponent fits in u64")
        })
        .collect();
    let mu = g.milnor_number();
    let matches: Vec<RootSystemType> = candidate_types(mu)
        .into_iter()
        .filter(|t| {
            let data = exponents_and_coxeter_number(&RootSystem::build(*t));
            data.coxeter_number == h && data.exponents == exponents
        })
        .collect();
    match matches.as_slice() {
        [t] => Ok(ClassificationResult {
            rstype: *t,
            mu,
            coxeter_number: h,
            exponents,
            weights,
            spectrum,
            spectrum3,
        }),
        _ => Err(SingularityError::NoTableMatch { h, exponents }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn classify(s: &str) -> Result<ClassificationResult, SingularityError> {
        classify_ade(&Germ::parse(s).unwrap())
    }

    #[test]
    fn normal_forms() {
        for k in 1..=12 {
            let c = classify(&format!("x^{} + y^2", k + 1)).unwrap();
            assert_eq!(c.rstype, RootSystemType::a(k));
        }
        for k in 4..=12 {
            let c = classify(&format!("x^2*y + y^{}", k - 1)).unwrap();
            assert_eq!(c.rstype, RootSystemType::d(k));
        }
        assert_eq!(classify("x^3 + y^4").unwrap().rstype, RootSystemType::e(6));
        assert_eq!(classify("x^3 + y^5").unwrap().rstype, RootSystemType::e(8));
        let e7 = classify("x^3 + x*y^3").unwrap();
        assert_eq!(e7.rstype, RootSystemType::e(7));
        assert_eq!(e7.coxeter_number, 18);
        assert_eq!(e7.exponents, vec![1, 5, 7, 9, 11, 13, 17]);
        assert_eq!(e7.mu, 7);
    }

    #[test]
    fn suspended_and_one_variable_forms() {
        assert_eq!(classify("x^4").unwrap().rstype, RootSystemType::a(3));
        assert_eq!(
            classify("x^3 + y^4 + z^2").unwrap().rstype,
            RootSystemType::e(6)
        );
        assert_eq!(
            classify("x^3 + y^4 + z^2 + w^2").unwrap().rstype,
            RootSystemType::e(6)
        );
        assert_eq!(
            classify("x^2 + y^2 + z^2").unwrap().rstype,
            RootSystemType::a(1)
        );
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            classify("x^3 + y^6"),
            Err(SingularityError::NotSimple { .. })
        ));
        assert!(matches!(
            classify("x^4 + y^4"),
            Err(SingularityError::NotSimple { .. })
        ));
        assert!(matches!(
            classify("x^3 + y^3 + z^3"),
            Err(SingularityError::CorankTooLarge { corank: 3 })
        ));
        assert!(matches!(
            classify("x^3 + y^2 + z^2 + y*z"),
            Err(SingularityError::CoreTooLarge { nvars: 3 })
        ));
        assert!(matches!(
            classify("x^5 + x^2*y^2 + y^5"),
            Err(SingularityError::NoWeights)
        ));
    }

    #[test]
    fn stripping() {
        let f = parse_polynomial("x^3 + y^2 + z^2 + x*w^2 + w^3", &["x", "y", "z", "w"]).unwrap();
        let (core, removed) = strip_suspension_variables(&f);
        assert_eq!(removed, vec![1, 2]);
        assert_eq!(
            core,
            parse_polynomial("x^3 + x*w^2 + w^3", &["x", "w"]).unwrap()
        );
    }
}
