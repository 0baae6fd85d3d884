use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::hurwitz::{enumerate_coxeter_factorizations, hurwitz_orbit, is_in_s, Factorization};
use super::lattice::{CycleLattice, DistinguishedTuple};
use super::BraidError;
use crate::weyl::{coxeter_element, trace, CoxeterOracle, RootSystem, WeylError};

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "check-id")]
    pub check_id: String,
    #[serde(rename = "type")]
    pub rstype: String,
    pub parameters: BTreeMap<String, String>,
    pub counts: BTreeMap<String, i64>,
    pub mismatches: u64,
    pub pass: bool,
}

impl VerificationReport {
    fn new(check_id: &str, rs: &RootSystem) -> Self {
        Self {
            check_id: check_id.to_string(),
            rstype: rs.rstype().to_string(),
            parameters: BTreeMap::new(),
            counts: BTreeMap::new(),
            mismatches: 0,
            pass: false,
        }
    }

    fn count(&mut self, key: &str, v: impl TryInto<i64>) {
        self.counts
            .insert(key.to_string(), v.try_into().unwrap_or(i64::MAX));
    }

    fn param(&mut self, key: &str, v: impl ToString) {
        self.parameters.insert(key.to_string(), v.to_string());
    }

    /// One line: id, type, verdict, then the counts.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} {}: {}",
            self.check_id,
            self.rstype,
            if self.pass { "pass" } else { "FAIL" }
        );
        for (k, v) in &self.parameters {
            let _ = write!(out, " {k}={v}");
        }
        for (k, v) in &self.counts {
            let _ = write!(out, " {k}={v}");
        }
        let _ = write!(out, " mismatches={}", self.mismatches);
        out
    }
}

/// The Hurwitz orbit of the simple-root factorization is the set of all
/// reflection factorizations of the Coxeter element.
pub fn verify_deligne_transitivity(
    rs: &RootSystem,
    limit: usize,
) -> Result<VerificationReport, BraidError> {
    let all = enumerate_coxeter_factorizations(rs)?;
    let orbit = hurwitz_orbit(&Factorization::simple(rs), rs, limit)?;
    let outside_s = orbit.iter().filter(|f| !is_in_s(rs, f).in_s()).count();
    let missing = all
        .iter()
        .filter(|f| orbit.binary_search(f).is_err())
        .count();
    let extra = orbit
        .iter()
        .filter(|f| all.binary_search(f).is_err())
        .count();
    let mut r = VerificationReport::new("deligne", rs);
    r.param("limit", limit);
    r.count("orbit", orbit.len());
    r.count("factorizations", all.len());
    r.count("orbit-outside-s", outside_s);
    r.mismatches = (missing + extra) as u64;
    r.pass = r.mismatches == 0 && outside_s == 0;
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    /// Every `μ`-tuple of positive roots; rank at most 3.
    Exhaustive,
    /// Random tuples until `count` of them lie in `S`.
    Sample { count: usize, seed: u64 },
}

#[derive(Default)]
struct TraceTally {
    examined: u64,
    in_s: u64,
    coxeter: u64,
    trace_minus_one: u64,
    undecided: u64,
    mismatches: u64,
}

impl TraceTally {
    fn record(&mut self, rs: &RootSystem, oracle: &CoxeterOracle, fz: &Factorization) {
        self.examined += 1;
        if !is_in_s(rs, fz).in_s() {
            return;
        }
        self.in_s += 1;
        let w = fz.product(rs);
        let minus_one = trace(&w) == -1;
        self.trace_minus_one += u64::from(minus_one);
        match oracle.is_coxeter(&w) {
            Ok(c) => {
                self.coxeter += u64::from(c);
                self.mismatches += u64::from(c != minus_one);
            }
            Err(WeylError::Undecided { .. }) => self.undecided += 1,
            Err(_) => self.undecided += 1,
        }
    }
}

/// For tuples in `S`: the product has trace `−1` iff it is a Coxeter element.
pub fn verify_trace_criterion(
    rs: &RootSystem,
    mode: TraceMode,
    budget: usize,
) -> Result<VerificationReport, BraidError> {
    let oracle = CoxeterOracle::new(rs, budget)?;
    let pos = rs.positive_roots();
    let mu = rs.rank();
    let mut tally = TraceTally::default();
    let mut r = VerificationReport::new("trace-criterion", rs);
    let mut enough = true;
    match mode {
        TraceMode::Exhaustive => {
            if mu > 3 {
                return Err(BraidError::RankTooLarge { rank: mu, max: 3 });
            }
            r.param("mode", "exhaustive");
            let n = pos.len();
            for code in 0..n.pow(mu as u32) {
                let mut c = code;
                let roots = (0..mu)
                    .map(|_| {
                        let j = c % n;
                        c /= n;
                        pos[j].clone()
                    })
                    .collect();
                tally.record(rs, &oracle, &Factorization::new(roots));
            }
        }
        TraceMode::Sample { count, seed } => {
            r.param("mode", "sample");
            r.param("count", count);
            r.param("seed", seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let max_draws = 1000 * count as u64 + 1000;
            while (tally.in_s as usize) < count && tally.examined < max_draws {
                let roots = (0..mu)
                    .map(|_| pos[rng.gen_range(0..pos.len())].clone())
                    .collect();
                tally.record(rs, &oracle, &Factorization::new(roots));
            }
            enough = tally.in_s as usize >= count;
        }
    }
    r.param("budget", budget);
    r.count("examined", tally.examined);
    r.count("in-s", tally.in_s);
    r.count("coxeter", tally.coxeter);
    r.count("trace-minus-one", tally.trace_minus_one);
    r.count("undecided", tally.undecided);
    r.mismatches = tally.mismatches;
    r.pass = tally.mismatches == 0 && tally.undecided == 0 && enough;
    Ok(r)
}

/// The ordered product of the transvections along the simple cycles of the
/// lattice with form `−C` is the Coxeter element and has trace `−1`.
pub fn verify_monodromy_trace(rs: &RootSystem) -> VerificationReport {
    let lattice = CycleLattice::from_root_system(rs);
    let m = DistinguishedTuple::standard(&lattice).monodromy(&lattice);
    let tr = m.trace();
    let matches = &m == coxeter_element(rs).matrix();
    let mut r = VerificationReport::new("monodromy-trace", rs);
    r.count("trace", tr);
    r.count("matches-coxeter", i64::from(matches));
    r.mismatches = u64::from(!matches) + u64::from(tr != -1);
    r.pass = r.mismatches == 0;
    r
}
