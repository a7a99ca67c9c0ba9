use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::identities::{Checker, Domain, IdentityId, LambdaTag, ParamShape, Params, VerificationResult};
use crate::error::Result;
use crate::quaternions::{LambdaSig, SpecialSig};
use crate::scalars::{Poly3, Rational, Ring};
use crate::sequences::Family;

/// How λ is instantiated during a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum LambdaMode {
    Symbolic,
    Points(Vec<[Rational; 3]>),
    /// The four fixed table signatures followed by `random` seeded triples.
    Sampled { random: usize },
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub ids: Vec<IdentityId>,
    pub n_range: RangeInclusive<i64>,
    pub a_range: RangeInclusive<i64>,
    pub b_range: RangeInclusive<i64>,
    pub mode: LambdaMode,
    pub seed: u64,
    pub k_family: Family,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ids: IdentityId::ALL.to_vec(),
            n_range: -12..=60,
            a_range: -6..=6,
            b_range: -6..=6,
            mode: LambdaMode::Symbolic,
            seed: 0,
            k_family: Family::k3(),
        }
    }
}

/// `count` rational triples with numerators and denominators drawn from
/// `[-9, 9]` (denominators nonzero), deterministic in `seed`.
pub fn sample_points(seed: u64, count: usize) -> Vec<[Rational; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || {
        let num: i64 = rng.gen_range(-9..=9);
        let mut den: i64 = 0;
        while den == 0 {
            den = rng.gen_range(-9..=9);
        }
        Rational::new(num, den).expect("nonzero denominator")
    };
    (0..count).map(|_| [draw(), draw(), draw()]).collect()
}

impl LambdaMode {
    fn points(&self, seed: u64) -> Vec<[Rational; 3]> {
        match self {
            LambdaMode::Symbolic => Vec::new(),
            LambdaMode::Points(p) => p.clone(),
            LambdaMode::Sampled { random } => SpecialSig::FIXED
                .iter()
                .map(SpecialSig::lambda)
                .chain(sample_points(seed, *random))
                .collect(),
        }
    }
}

/// Parameter tuples of `id` over the configured ranges, in lexicographic order.
/// Tuples where the identity is undefined are skipped.
pub fn param_grid(id: IdentityId, cfg: &SuiteConfig) -> Vec<Params> {
    let ns = cfg.n_range.clone();
    let mut out = Vec::new();
    match id.shape() {
        ParamShape::N => out.extend(ns.map(Params::n)),
        ParamShape::NA => {
            for n in ns {
                out.extend(cfg.a_range.clone().map(|a| Params::na(n, a)));
            }
        }
        ParamShape::NAB => {
            for n in ns {
                for a in cfg.a_range.clone() {
                    out.extend(cfg.b_range.clone().map(|b| Params::nab(n, a, b)));
                }
            }
        }
        ParamShape::NPart(k) => {
            for n in ns {
                out.extend((0..k).map(|p| Params::n(n).with_part(p)));
            }
        }
        ParamShape::Part(k) => out.extend((0..k).map(Params::part)),
    }
    out.retain(|p| id.domain(p) != Domain::Undefined);
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub passed: usize,
    pub failed: usize,
    /// Failures outside the stated range; not counted in `failed`.
    pub informative_failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub results: Vec<VerificationResult>,
    pub totals: BTreeMap<String, Totals>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationResult> {
        self.results.iter().filter(|r| r.is_failure())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn sweep<S: Ring>(checker: &Checker<S>, jobs: &[(IdentityId, Params)], tag: &LambdaTag) -> Result<Vec<VerificationResult>> {
    jobs.par_iter()
        .map(|(id, p)| checker.check(*id, p, tag.clone()))
        .collect()
}

/// Sweeps every id over its parameter grid and λ instantiation.
///
/// Evaluation is parallel but the output order is fixed: failures first,
/// then by id, λ point and parameter tuple.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut ids = cfg.ids.clone();
    ids.sort();
    ids.dedup();
    let jobs: Vec<(IdentityId, Params)> = ids
        .iter()
        .flat_map(|&id| param_grid(id, cfg).into_iter().map(move |p| (id, p)))
        .collect();

    let mut results = Vec::new();
    if !jobs.is_empty() {
        match &cfg.mode {
            LambdaMode::Symbolic => {
                let checker = Checker::with_k_family(&LambdaSig::<Poly3>::symbolic(), cfg.k_family.clone());
                results = sweep(&checker, &jobs, &LambdaTag::Symbolic)?;
            }
            mode => {
                let points = mode.points(cfg.seed);
                let mut per_point = Vec::with_capacity(points.len());
                for point in points {
                    let checker = Checker::with_k_family(&LambdaSig::point(point.clone()), cfg.k_family.clone());
                    per_point.push(sweep(&checker, &jobs, &LambdaTag::Point(point))?);
                }
                // Group by id first so each id's results stay contiguous.
                let mut merged: Vec<(usize, usize, VerificationResult)> = per_point
                    .into_iter()
                    .enumerate()
                    .flat_map(|(pi, rs)| rs.into_iter().enumerate().map(move |(ji, r)| (ji, pi, r)))
                    .collect();
                merged.sort_by_key(|(ji, pi, _)| (jobs[*ji].0, *pi, *ji));
                results = merged.into_iter().map(|(_, _, r)| r).collect();
            }
        }
    }

    let mut totals: BTreeMap<String, Totals> = BTreeMap::new();
    for r in &results {
        let t = totals.entry(r.id.name().to_string()).or_default();
        match (r.pass, r.informative) {
            (true, _) => t.passed += 1,
            (false, false) => t.failed += 1,
            (false, true) => t.informative_failed += 1,
        }
    }
    results.sort_by_key(|r| !r.is_failure());
    Ok(SuiteReport { results, totals })
}
