//! Invariant suites behind `verify`. All randomness comes from the seed, and
//! the report carries no timings, so equal seeds give identical bytes.

use bcshift_core::hyperfun::eval_f;
use bcshift_core::quadrature::GaussLegendre;
use bcshift_core::rankone::frobenius_build;
use bcshift_core::root_system::{build_bc, mult_shift_data};
use bcshift_core::series::ChamberPoint;
use bcshift_core::shiftops::{apply_chain, chain_constant, e_minus, e_minus_chain, g_plus};
use bcshift_core::spherical::{chi_spherical, rank_one_weight, Picture, Sign, TorusPoint};
use bcshift_core::transform::{make_bump, transform_direct, transform_shifted, TransformSetup};
use bcshift_core::{Complex64, Multiplicity, SpectralParameter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{RunConfig, Suite};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFY};
use crate::output::{num, Rendered, Table};

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Property {
    pub name: &'static str,
    pub pass: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: usize,
}

impl Property {
    fn new(name: &'static str, max_residual: f64, tolerance: f64, samples: usize) -> Self {
        Property {
            name,
            pass: max_residual.is_finite() && max_residual < tolerance,
            max_residual,
            tolerance,
            samples,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub properties: Vec<Property>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyReport {
    pub command: &'static str,
    pub seed: u64,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
}

fn weyl(rng: &mut ChaCha8Rng) -> Result<Vec<Property>, CliError> {
    let mut out = Vec::new();
    for (n, order, tol, name) in [(1usize, 40usize, 1e-9, "weyl_invariance_rank1"), (2, 12, 1e-6, "weyl_invariance_rank2")] {
        let rs = build_bc(n)?;
        let mut worst = 0.0f64;
        let samples = 10;
        for _ in 0..samples {
            let m = Multiplicity::new(
                rng.gen_range(0.5..4.0),
                if n == 1 { 0.0 } else { rng.gen_range(0.5..3.0) },
                rng.gen_range(0.5..3.0),
            );
            let lam = SpectralParameter::new((0..n).map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(0.2..1.5))).collect());
            let x = if n == 1 {
                vec![rng.gen_range(0.8..1.5)]
            } else {
                let x2 = rng.gen_range(0.9..1.3);
                vec![x2 + rng.gen_range(0.9..1.3), x2]
            };
            let x = ChamberPoint::new(x);
            let f0 = eval_f(&lam, &m, &rs, &x, order)?.value;
            for w in rs.weyl_group() {
                let f = eval_f(&w.act_spectral(&lam), &m, &rs, &x, order)?.value;
                worst = worst.max(rel(f, f0));
            }
        }
        out.push(Property::new(name, worst, tol, samples));
    }
    Ok(out)
}

fn shift(rng: &mut ChaCha8Rng) -> Result<Vec<Property>, CliError> {
    let mut worst = 0.0f64;
    let mut spread = 0.0f64;
    let mut samples = 0;
    for q in 1..=3u32 {
        for l in 1..=3i64 {
            let data = mult_shift_data(&Multiplicity::grassmannian(q), l);
            let k = chain_constant(&data.prime, l);
            for _ in 0..3 {
                let lam = c(rng.gen_range(0.2..3.0), rng.gen_range(-1.5..1.5));
                let base = frobenius_build(data.prime.short, data.prime.long, lam, 200)?;
                let chained = apply_chain(&e_minus_chain(&data.prime, l), &base.series)?;
                let direct = frobenius_build(data.plus.short, data.plus.long, lam, 200)?;
                let at = |p: &bcshift_core::rankone::PowerSeries, s: f64| p.eval_s(c(s, 0.0)).map(|v| v.value);
                let ratio = at(&chained, 0.3)? / at(&direct.series, 0.3)?;
                spread = spread.max((ratio / k - 1.0).norm());
                for i in 0..10 {
                    let s = -0.6 + 1.5 * i as f64 / 9.0;
                    worst = worst.max(rel(at(&chained, s)? / k, at(&direct.series, s)?));
                }
                samples += 1;
            }
        }
    }
    Ok(vec![
        Property::new("chain_matches_direct", worst, 1e-7, samples),
        Property::new("normalization_is_chain_product", spread, 1e-9, samples),
    ])
}

fn sign(rng: &mut ChaCha8Rng) -> Result<Vec<Property>, CliError> {
    let rs = build_bc(1)?;
    let mut worst = 0.0f64;
    let mut samples = 0;
    for q in 1..=3u32 {
        let m = Multiplicity::grassmannian(q);
        for l in 0..=3i64 {
            for _ in 0..3 {
                let lam = SpectralParameter::new(vec![c(rng.gen_range(0.0..4.0), rng.gen_range(-2.0..2.0))]);
                for i in 0..10 {
                    let p = TorusPoint::compact(vec![0.1 + 2.3 * i as f64 / 9.0]);
                    let a = chi_spherical(&lam, l, &m, &p, Sign::Plus, &rs)?;
                    let b = chi_spherical(&lam, l, &m, &p, Sign::Minus, &rs)?;
                    worst = worst.max(rel(a, b));
                    samples += 1;
                }
            }
        }
    }
    Ok(vec![Property::new("eta_plus_equals_eta_minus", worst, 1e-8, samples)])
}

fn adjoint(nodes: usize) -> Result<Vec<Property>, CliError> {
    let low = Multiplicity::new(0.0, 0.0, 3.0);
    let up = Multiplicity::new(4.0, 0.0, 1.0);
    let e = e_minus(&up);
    let g = g_plus(&low)?;
    let gl = GaussLegendre::new(nodes);
    let monomial = |k: i32| move |s: f64| (s.powi(k), if k == 0 { 0.0 } else { k as f64 * s.powi(k - 1) });
    let pairs = [(0, 1), (2, 3), (1, 2), (3, 0)];
    let mut worst = 0.0f64;
    for (fk, hk) in pairs {
        let (f, h) = (monomial(fk), monomial(hk));
        let mut err = None;
        let lhs = gl.integrate(-1.0, 1.0, |s| {
            let w = rank_one_weight(&low, s);
            match (e.coefficients(s), w) {
                (Ok((p, q)), Ok(w)) => (p * f(s).1 + q * f(s).0) * h(s).0 * w,
                (Err(x), _) | (_, Err(x)) => {
                    err = Some(x);
                    0.0
                }
            }
        });
        let rhs = gl.integrate(-1.0, 1.0, |s| {
            let w = rank_one_weight(&up, s);
            match (g.coefficients(s), w) {
                (Ok((p, q)), Ok(w)) => f(s).0 * (p * h(s).1 + q * h(s).0) * w,
                (Err(x), _) | (_, Err(x)) => {
                    err = Some(x);
                    0.0
                }
            }
        });
        if let Some(x) = err {
            return Err(x.into());
        }
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(vec![Property::new("e_minus_g_plus_adjoint", worst, 1e-8, pairs.len())])
}

fn transform(rng: &mut ChaCha8Rng, nodes: usize) -> Result<Vec<Property>, CliError> {
    let mut worst = 0.0f64;
    let samples = 8;
    for i in 0..samples {
        let q = 1 + (i % 3) as u32;
        let l = (i % 4) as i64;
        let r = rng.gen_range(0.1..0.45);
        let lam = SpectralParameter::new(vec![c(rng.gen_range(0.0..3.0), rng.gen_range(-1.0..1.0))]);
        let f = make_bump(r, 1.0)?;
        let setup = TransformSetup::new(l, q, nodes).with_picture(Picture::Compact);
        let a = transform_direct(&f, &lam, &setup)?.value;
        let b = transform_shifted(&f, &lam, &setup)?.value;
        worst = worst.max(rel(a, b));
    }
    Ok(vec![Property::new("direct_matches_shifted", worst, 1e-7, samples)])
}

pub fn run_suites(cfg: &RunConfig, suite: Suite) -> Result<Rendered, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut suites = Vec::new();
    for s in suite.expand() {
        let properties = match s {
            Suite::Weyl => weyl(&mut rng)?,
            Suite::Shift => shift(&mut rng)?,
            Suite::Sign => sign(&mut rng)?,
            Suite::Adjoint => adjoint(cfg.nodes)?,
            Suite::Transform => transform(&mut rng, cfg.nodes)?,
            Suite::All => unreachable!("expanded above"),
        };
        suites.push(SuiteReport {
            suite: s.name(),
            properties,
        });
    }
    let pass = suites.iter().all(|s| s.properties.iter().all(|p| p.pass));
    let mut table = Table::new(&["suite", "property", "pass", "max_residual", "tolerance", "samples"]);
    for s in &suites {
        for p in &s.properties {
            table.push([
                s.suite.to_string(),
                p.name.to_string(),
                p.pass.to_string(),
                num(p.max_residual),
                num(p.tolerance),
                p.samples.to_string(),
            ]);
        }
    }
    let report = VerifyReport {
        command: "verify",
        seed: cfg.seed,
        pass,
        suites,
    };
    Rendered::new(&report, table, if pass { EXIT_OK } else { EXIT_VERIFY })
}
