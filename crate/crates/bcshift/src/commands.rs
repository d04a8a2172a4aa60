use bcshift_core::cfunction::{c_norm, c_tilde, gk_product, is_polar};
use bcshift_core::hyperfun::eval_f;
use bcshift_core::rankone::rank_one_value;
use bcshift_core::root_system::{build_bc, mult_shift_data};
use bcshift_core::series::{default_order, gamma_coefficients, ChamberPoint};
use bcshift_core::shiftops::{apply_chain, chain_constant, e_minus_chain};
use bcshift_core::spherical::{chi_spherical, Picture, Sign, TorusPoint};
use bcshift_core::transform::{growth_estimate, make_bump, transform_direct, transform_shifted, TransformSetup};
use bcshift_core::rankone::frobenius_build;
use bcshift_core::{Complex64, Error as CoreError, Multiplicity, SpectralParameter};
use serde::Serialize;

use crate::config::{Command, Route, RunConfig, TransformRoute};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFY};
use crate::output::{emit, num, pair, Pair, Rendered, Table};
use crate::verify::run_suites;

/// Relative tolerance of the `shift-verify` residual table.
pub const SHIFT_VERIFY_TOL: f64 = 1e-8;

/// Validates, runs and renders one command.
pub fn run(cfg: &RunConfig) -> Result<Rendered, CliError> {
    cfg.validate()?;
    match &cfg.command {
        Command::Eval { route, sign, picture } => cmd_eval(cfg, *route, *sign, *picture),
        Command::CFunction => cmd_c(cfg),
        Command::GammaTable => cmd_gamma_table(cfg),
        Command::Verify { suite } => run_suites(cfg, *suite),
        Command::Transform { radius, q, route, picture } => cmd_transform(cfg, *radius, *q, *route, *picture),
        Command::Growth { radius, q, xi_max, xi_count, picture, plot } => {
            cmd_growth(cfg, *radius, *q, *xi_max, *xi_count, *picture, plot.as_deref())
        }
        Command::ShiftVerify { q, points } => cmd_shift_verify(cfg, *q, *points),
    }
}

fn mult_array(m: &Multiplicity) -> [f64; 3] {
    m.as_array()
}

fn picture_name(p: Picture) -> &'static str {
    match p {
        Picture::Compact => "compact",
        Picture::Noncompact => "noncompact",
    }
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

#[derive(Serialize)]
struct TermOut {
    perm: Vec<usize>,
    signs: Vec<i8>,
    c: Pair,
    phi: Pair,
}

#[derive(Serialize)]
struct EvalDiagnostics {
    truncation: Option<f64>,
    cancellation: Option<f64>,
    terms: Vec<TermOut>,
}

#[derive(Serialize)]
struct EvalOut {
    command: &'static str,
    route: &'static str,
    method: &'static str,
    rank: usize,
    mult: [f64; 3],
    lambda: Vec<Pair>,
    point: Vec<f64>,
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    picture: Option<&'static str>,
    value: Pair,
    diagnostics: EvalDiagnostics,
}

fn cmd_eval(cfg: &RunConfig, route: Route, sign: Sign, picture: Picture) -> Result<Rendered, CliError> {
    let rs = build_bc(cfg.rank)?;
    let lam = SpectralParameter::new(cfg.lambda.clone());
    let mut out = EvalOut {
        command: "eval",
        route: "",
        method: "",
        rank: cfg.rank,
        mult: mult_array(&cfg.mult),
        lambda: cfg.lambda.iter().map(|&z| pair(z)).collect(),
        point: cfg.point.clone(),
        order: None,
        l: None,
        sign: None,
        picture: None,
        value: [0.0; 2],
        diagnostics: EvalDiagnostics {
            truncation: None,
            cancellation: None,
            terms: Vec::new(),
        },
    };
    match route {
        Route::Chamber => {
            let order = cfg.order.unwrap_or_else(|| default_order(cfg.rank));
            let f = eval_f(&lam, &cfg.mult, &rs, &ChamberPoint::new(cfg.point.clone()), order)?;
            out.route = "chamber";
            out.method = "sum over W of c(w lambda, m) Phi(w lambda, m; exp X), Harish-Chandra series truncated at height N";
            out.order = Some(order);
            out.value = pair(f.value);
            out.diagnostics = EvalDiagnostics {
                truncation: Some(f.truncation_diag),
                cancellation: Some(f.cancellation),
                terms: f
                    .per_term
                    .iter()
                    .map(|t| TermOut {
                        perm: t.w.perm().to_vec(),
                        signs: t.w.signs().to_vec(),
                        c: pair(t.c),
                        phi: pair(t.phi),
                    })
                    .collect(),
            };
        }
        Route::Frobenius => {
            let v = rank_one_value(cfg.mult.short, cfg.mult.long, cfg.lambda[0], Complex64::new(cfg.point[0], 0.0))?;
            out.route = "frobenius";
            out.method = "rank-one power series in u = (1 - s)/2, normalized to 1 at s = 1, order chosen adaptively";
            out.value = pair(v);
        }
        Route::Spherical => {
            let p = match picture {
                Picture::Compact => TorusPoint::compact(cfg.point.clone()),
                Picture::Noncompact => TorusPoint::noncompact(cfg.point.clone()),
            };
            let v = chi_spherical(&lam, cfg.l, &cfg.mult, &p, sign, &rs)?;
            out.route = "spherical";
            out.method = "eta_l^(+/-) F(lambda, m_(+/-)(l)) with the shifted multiplicity";
            out.l = Some(cfg.l);
            out.sign = Some(sign_name(sign));
            out.picture = Some(picture_name(picture));
            out.value = pair(v);
        }
    }
    let mut table = Table::new(&["route", "re", "im"]);
    table.push([out.route.to_string(), num(out.value[0]), num(out.value[1])]);
    Rendered::new(&out, table, EXIT_OK)
}

#[derive(Serialize)]
struct CTildeOut {
    log_value: Pair,
    pole_count: u32,
    zero_count: u32,
    is_pole: bool,
    is_zero: bool,
    indeterminate: bool,
}

#[derive(Serialize)]
struct COut {
    command: &'static str,
    rank: usize,
    mult: [f64; 3],
    lambda: Vec<Pair>,
    polar: bool,
    c: Pair,
    c_tilde: CTildeOut,
    /// `c(λ) c(−λ)`; null when one factor has a pole.
    gk_product: Option<Pair>,
}

fn cmd_c(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let rs = build_bc(cfg.rank)?;
    let lam = SpectralParameter::new(cfg.lambda.clone());
    let ct = c_tilde(&lam, &cfg.mult, &rs)?;
    let c = c_norm(&lam, &cfg.mult, &rs)?;
    let gk = match gk_product(&lam, &cfg.mult, &rs) {
        Ok(v) => Some(pair(v)),
        Err(CoreError::SpectralPole) => None,
        Err(e) => return Err(e.into()),
    };
    let out = COut {
        command: "c",
        rank: cfg.rank,
        mult: mult_array(&cfg.mult),
        lambda: cfg.lambda.iter().map(|&z| pair(z)).collect(),
        polar: is_polar(&cfg.mult, &rs),
        c: pair(c),
        c_tilde: CTildeOut {
            log_value: pair(ct.log_value),
            pole_count: ct.pole_count,
            zero_count: ct.zero_count,
            is_pole: ct.is_pole,
            is_zero: ct.is_zero,
            indeterminate: ct.indeterminate,
        },
        gk_product: gk,
    };
    let mut table = Table::new(&["c_re", "c_im", "gk_re", "gk_im"]);
    let g = gk.map(|p| (num(p[0]), num(p[1]))).unwrap_or_default();
    table.push([num(c.re), num(c.im), g.0, g.1]);
    Rendered::new(&out, table, EXIT_OK)
}

#[derive(Serialize)]
struct CoefficientOut {
    mu: Vec<u32>,
    height: usize,
    value: Pair,
}

#[derive(Serialize)]
struct GammaTableOut {
    command: &'static str,
    rank: usize,
    mult: [f64; 3],
    lambda: Vec<Pair>,
    max_height: usize,
    coefficients: Vec<CoefficientOut>,
}

fn cmd_gamma_table(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let rs = build_bc(cfg.rank)?;
    let lam = SpectralParameter::new(cfg.lambda.clone());
    let order = cfg.order.unwrap_or_else(|| default_order(cfg.rank));
    let tbl = gamma_coefficients(&lam, &cfg.mult, &rs, order)?;
    let mut table = Table::new(&["mu", "height", "re", "im"]);
    let mut coefficients = Vec::with_capacity(tbl.len());
    for (mu, v) in tbl.iter() {
        let label: Vec<String> = mu.coeffs().iter().map(|c| c.to_string()).collect();
        table.push([label.join(";"), mu.height().to_string(), num(v.re), num(v.im)]);
        coefficients.push(CoefficientOut {
            mu: mu.coeffs().to_vec(),
            height: mu.height(),
            value: pair(v),
        });
    }
    let out = GammaTableOut {
        command: "gamma-table",
        rank: cfg.rank,
        mult: mult_array(&cfg.mult),
        lambda: cfg.lambda.iter().map(|&z| pair(z)).collect(),
        max_height: order,
        coefficients,
    };
    Rendered::new(&out, table, EXIT_OK)
}

#[derive(Serialize)]
struct TransformRow {
    route: &'static str,
    lambda: Pair,
    value: Pair,
    log_abs: f64,
    quadrature_warning: Option<f64>,
}

#[derive(Serialize)]
struct TransformOut {
    command: &'static str,
    r: f64,
    q: u32,
    l: i64,
    nodes: usize,
    picture: &'static str,
    rows: Vec<TransformRow>,
    /// Largest relative gap between the two routes, when both ran.
    max_route_deviation: Option<f64>,
}

fn cmd_transform(cfg: &RunConfig, radius: f64, q: u32, route: TransformRoute, picture: Picture) -> Result<Rendered, CliError> {
    let f = make_bump(radius, 1.0)?;
    let setup = TransformSetup::new(cfg.l, q, cfg.nodes).with_picture(picture);
    let mut rows = Vec::new();
    let mut deviation: Option<f64> = None;
    for &lam in &cfg.lambda {
        let sp = SpectralParameter::new(vec![lam]);
        let mut push = |name: &'static str, v: bcshift_core::transform::TransformValue| {
            rows.push(TransformRow {
                route: name,
                lambda: pair(lam),
                value: pair(v.value),
                log_abs: v.value.norm().ln(),
                quadrature_warning: v.warning.map(|w| w.relative_change),
            });
            v.value
        };
        match route {
            TransformRoute::Direct => {
                push("direct", transform_direct(&f, &sp, &setup)?);
            }
            TransformRoute::Shifted => {
                push("shifted", transform_shifted(&f, &sp, &setup)?);
            }
            TransformRoute::Both => {
                let a = push("direct", transform_direct(&f, &sp, &setup)?);
                let b = push("shifted", transform_shifted(&f, &sp, &setup)?);
                let d = (a - b).norm() / a.norm().max(f64::MIN_POSITIVE);
                deviation = Some(deviation.map_or(d, |x: f64| x.max(d)));
            }
        }
    }
    let mut table = Table::new(&["route", "lambda_re", "lambda_im", "re", "im", "log_abs", "quadrature_warning"]);
    for r in &rows {
        table.push([
            r.route.to_string(),
            num(r.lambda[0]),
            num(r.lambda[1]),
            num(r.value[0]),
            num(r.value[1]),
            num(r.log_abs),
            r.quadrature_warning.map(num).unwrap_or_default(),
        ]);
    }
    let out = TransformOut {
        command: "transform",
        r: radius,
        q,
        l: cfg.l,
        nodes: cfg.nodes,
        picture: picture_name(picture),
        rows,
        max_route_deviation: deviation,
    };
    Rendered::new(&out, table, EXIT_OK)
}

#[derive(Serialize)]
struct GrowthPoint {
    xi: f64,
    log_abs: f64,
}

#[derive(Serialize)]
struct GrowthOut {
    command: &'static str,
    r: f64,
    q: u32,
    l: i64,
    nodes: usize,
    picture: &'static str,
    lambda0: f64,
    tau: f64,
    residual: f64,
    bound: f64,
    within_bound: bool,
    points: Vec<GrowthPoint>,
}

/// Slope and offset of the reference line `τ ≤ 1.05 r + 0.02`.
pub const GROWTH_BOUND: (f64, f64) = (1.05, 0.02);

fn cmd_growth(
    cfg: &RunConfig,
    radius: f64,
    q: u32,
    xi_max: f64,
    xi_count: usize,
    picture: Picture,
    plot: Option<&std::path::Path>,
) -> Result<Rendered, CliError> {
    let f = make_bump(radius, 1.0)?;
    let setup = TransformSetup::new(cfg.l, q, cfg.nodes).with_picture(picture);
    let grid: Vec<f64> = (1..=xi_count).map(|k| xi_max * k as f64 / xi_count as f64).collect();
    let rep = growth_estimate(&f, 1.0, &setup, &grid)?;
    let bound = GROWTH_BOUND.0 * radius + GROWTH_BOUND.1;
    let mut table = Table::new(&["xi", "log_abs"]);
    let mut plot_text = String::from("# xi log_abs\n");
    for (x, y) in rep.xi_grid.iter().zip(&rep.log_abs) {
        table.push([num(*x), num(*y)]);
        plot_text.push_str(&format!("{x} {y}\n"));
    }
    if let Some(p) = plot {
        emit(&plot_text, Some(p))?;
    }
    let out = GrowthOut {
        command: "growth",
        r: radius,
        q,
        l: cfg.l,
        nodes: cfg.nodes,
        picture: picture_name(picture),
        lambda0: rep.lambda0,
        tau: rep.tau,
        residual: rep.residual,
        bound,
        within_bound: rep.tau <= bound,
        points: rep
            .xi_grid
            .iter()
            .zip(&rep.log_abs)
            .map(|(&xi, &log_abs)| GrowthPoint { xi, log_abs })
            .collect(),
    };
    Rendered::new(&out, table, EXIT_OK)
}

#[derive(Serialize)]
struct ShiftRow {
    s: f64,
    chain: Pair,
    direct: Pair,
    residual: f64,
}

#[derive(Serialize)]
struct ShiftOut {
    command: &'static str,
    q: u32,
    l: i64,
    lambda: Pair,
    m_prime: [f64; 3],
    m_plus: [f64; 3],
    chain_constants: Vec<f64>,
    chain_constant: f64,
    /// `(E₋ chain F)(s) / F(s)` at `s = 0.3`.
    measured_constant: Pair,
    max_residual: f64,
    tolerance: f64,
    pass: bool,
    rows: Vec<ShiftRow>,
}

fn cmd_shift_verify(cfg: &RunConfig, q: u32, points: usize) -> Result<Rendered, CliError> {
    let lam = cfg.lambda[0];
    let data = mult_shift_data(&Multiplicity::grassmannian(q), cfg.l);
    if !data.prime.is_positive() {
        return Err(CoreError::NotPositive(data.prime.short, data.prime.medium, data.prime.long).into());
    }
    let order = cfg.order.unwrap_or(200);
    let base = frobenius_build(data.prime.short, data.prime.long, lam, order)?;
    let chain = e_minus_chain(&data.prime, cfg.l);
    let chained = apply_chain(&chain, &base.series)?;
    let direct = frobenius_build(data.plus.short, data.plus.long, lam, order)?;
    let k = chain_constant(&data.prime, cfg.l);
    let at = |p: &bcshift_core::rankone::PowerSeries, s: f64| -> Result<Complex64, CliError> {
        Ok(p.eval_s(Complex64::new(s, 0.0))?.value)
    };
    let grid: Vec<f64> = if points == 1 {
        vec![0.3]
    } else {
        (0..points).map(|i| -0.6 + 1.5 * i as f64 / (points - 1) as f64).collect()
    };
    let mut values = Vec::with_capacity(grid.len());
    for &s in &grid {
        values.push((s, at(&chained, s)? / k, at(&direct.series, s)?));
    }
    let scale = values.iter().map(|v| v.2.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let rows: Vec<ShiftRow> = values
        .iter()
        .map(|&(s, a, b)| ShiftRow {
            s,
            chain: pair(a),
            direct: pair(b),
            residual: (a - b).norm() / scale,
        })
        .collect();
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let measured = at(&chained, 0.3)? / at(&direct.series, 0.3)?;
    let pass = max_residual < SHIFT_VERIFY_TOL;
    let mut table = Table::new(&["s", "chain_re", "chain_im", "direct_re", "direct_im", "residual"]);
    for r in &rows {
        table.push([num(r.s), num(r.chain[0]), num(r.chain[1]), num(r.direct[0]), num(r.direct[1]), num(r.residual)]);
    }
    let out = ShiftOut {
        command: "shift-verify",
        q,
        l: cfg.l,
        lambda: pair(lam),
        m_prime: mult_array(&data.prime),
        m_plus: mult_array(&data.plus),
        chain_constants: chain.iter().map(|op| op.q.eval(0.0)).collect(),
        chain_constant: k,
        measured_constant: pair(measured),
        max_residual,
        tolerance: SHIFT_VERIFY_TOL,
        pass,
        rows,
    };
    Rendered::new(&out, table, if pass { EXIT_OK } else { EXIT_VERIFY })
}
