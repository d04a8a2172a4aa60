//! Run configuration shared by all subcommands, with the per-command checks
//! applied before anything is evaluated.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use bcshift_core::spherical::{Picture, Sign};
use bcshift_core::{Complex64, Multiplicity};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::usage(format!("unknown format '{s}' (json or csv)"))),
        }
    }
}

/// How `eval` computes its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// c-weighted Weyl sum of Harish-Chandra series at a chamber point.
    Chamber,
    /// Rank-one series in `s`.
    Frobenius,
    /// `η_l^± F(λ, m_±(l))`.
    Spherical,
}

impl std::str::FromStr for Route {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "chamber" => Ok(Route::Chamber),
            "frobenius" => Ok(Route::Frobenius),
            "spherical" => Ok(Route::Spherical),
            _ => Err(CliError::usage(format!(
                "unknown route '{s}' (chamber, frobenius or spherical)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformRoute {
    Direct,
    Shifted,
    Both,
}

impl std::str::FromStr for TransformRoute {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "direct" => Ok(TransformRoute::Direct),
            "shifted" => Ok(TransformRoute::Shifted),
            "both" => Ok(TransformRoute::Both),
            _ => Err(CliError::usage(format!(
                "unknown transform route '{s}' (direct, shifted or both)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Weyl,
    Shift,
    Sign,
    Adjoint,
    Transform,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Weyl, Suite::Shift, Suite::Sign, Suite::Adjoint, Suite::Transform],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Weyl => "weyl",
            Suite::Shift => "shift",
            Suite::Sign => "sign",
            Suite::Adjoint => "adjoint",
            Suite::Transform => "transform",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "weyl" => Ok(Suite::Weyl),
            "shift" => Ok(Suite::Shift),
            "sign" => Ok(Suite::Sign),
            "adjoint" => Ok(Suite::Adjoint),
            "transform" => Ok(Suite::Transform),
            "all" => Ok(Suite::All),
            _ => Err(CliError::usage(format!(
                "unknown suite '{s}' (weyl, shift, sign, adjoint, transform or all)"
            ))),
        }
    }
}

pub fn parse_picture(s: &str) -> Result<Picture, CliError> {
    match s {
        "compact" => Ok(Picture::Compact),
        "noncompact" => Ok(Picture::Noncompact),
        _ => Err(CliError::usage(format!("unknown picture '{s}' (compact or noncompact)"))),
    }
}

pub fn parse_sign(s: &str) -> Result<Sign, CliError> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(CliError::usage(format!("unknown sign '{s}' (plus or minus)"))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval { route: Route, sign: Sign, picture: Picture },
    CFunction,
    GammaTable,
    Verify { suite: Suite },
    Transform { radius: f64, q: u32, route: TransformRoute, picture: Picture },
    Growth { radius: f64, q: u32, xi_max: f64, xi_count: usize, picture: Picture, plot: Option<PathBuf> },
    ShiftVerify { q: u32, points: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::CFunction => "c",
            Command::GammaTable => "gamma-table",
            Command::Verify { .. } => "verify",
            Command::Transform { .. } => "transform",
            Command::Growth { .. } => "growth",
            Command::ShiftVerify { .. } => "shift-verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub rank: usize,
    pub mult: Multiplicity,
    pub l: i64,
    pub lambda: Vec<Complex64>,
    pub point: Vec<f64>,
    /// Series truncation order; `None` picks the evaluator default.
    pub order: Option<usize>,
    pub nodes: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            rank: 1,
            mult: Multiplicity::new(2.0, 0.0, 1.0),
            l: 0,
            lambda: Vec::new(),
            point: Vec::new(),
            order: None,
            nodes: 200,
            format: Format::Json,
            out: None,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.rank == 0 {
            return Err(CliError::usage("--rank must be at least 1"));
        }
        if !self.mult.as_array().iter().all(|x| x.is_finite()) {
            return Err(CliError::usage("--mult entries must be finite"));
        }
        if self.lambda.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CliError::usage("--lambda entries must be finite"));
        }
        if self.point.iter().any(|x| !x.is_finite()) {
            return Err(CliError::usage("--point entries must be finite"));
        }
        if self.nodes == 0 {
            return Err(CliError::usage("--nodes must be positive"));
        }
        if self.order == Some(0) {
            return Err(CliError::usage("--order must be positive"));
        }
        match &self.command {
            Command::Eval { route, .. } => {
                self.need_lambda(self.rank)?;
                match route {
                    Route::Frobenius => {
                        if self.rank != 1 {
                            return Err(CliError::usage("the frobenius route is rank one only"));
                        }
                        self.need_point(1, "the invariant variable s")?;
                    }
                    Route::Chamber | Route::Spherical => self.need_point(self.rank, "the point")?,
                }
            }
            Command::CFunction | Command::GammaTable => self.need_lambda(self.rank)?,
            Command::Verify { .. } => {}
            Command::Transform { radius, q, .. } => {
                check_radius(*radius)?;
                check_q(*q)?;
                if self.lambda.is_empty() {
                    return Err(CliError::usage("transform needs at least one --lambda"));
                }
            }
            Command::Growth { radius, q, xi_max, xi_count, .. } => {
                check_radius(*radius)?;
                check_q(*q)?;
                if !(*xi_max > 0.0 && *xi_max <= 100.0) {
                    return Err(CliError::usage("--xi-max must lie in (0, 100]"));
                }
                if *xi_count < 4 {
                    return Err(CliError::usage("--xi-count must be at least 4"));
                }
            }
            Command::ShiftVerify { q, points } => {
                check_q(*q)?;
                if *points == 0 {
                    return Err(CliError::usage("--points must be positive"));
                }
                if self.l == 0 {
                    return Err(CliError::usage("shift-verify needs a nonzero --l"));
                }
                self.need_lambda(1)?;
            }
        }
        Ok(())
    }

    fn need_lambda(&self, n: usize) -> Result<(), CliError> {
        if self.lambda.len() != n {
            return Err(CliError::usage(format!(
                "expected {n} --lambda component(s), got {}",
                self.lambda.len()
            )));
        }
        Ok(())
    }

    fn need_point(&self, n: usize, what: &str) -> Result<(), CliError> {
        if self.point.len() != n {
            return Err(CliError::usage(format!(
                "{what} needs {n} coordinate(s), got {}",
                self.point.len()
            )));
        }
        Ok(())
    }
}

fn check_radius(r: f64) -> Result<(), CliError> {
    if !(r > 0.0 && r < FRAC_PI_2) {
        return Err(CliError::usage(format!("--r {r} is outside (0, pi/2)")));
    }
    Ok(())
}

fn check_q(q: u32) -> Result<(), CliError> {
    if q == 0 {
        return Err(CliError::usage("--q must be at least 1"));
    }
    Ok(())
}

fn parse_f64(s: &str, what: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| CliError::usage(format!("cannot read '{s}' as a number in {what}")))
}

/// `"a,b,c"` as `(m_s, m_m, m_l)`.
pub fn parse_mult(s: &str) -> Result<Multiplicity, CliError> {
    let v = parse_list(s, "--mult")?;
    if v.len() != 3 {
        return Err(CliError::usage(format!("--mult needs three entries, got {}", v.len())));
    }
    Ok(Multiplicity::new(v[0], v[1], v[2]))
}

/// Comma separated reals.
pub fn parse_list(s: &str, what: &str) -> Result<Vec<f64>, CliError> {
    s.split(',').map(|x| parse_f64(x, what)).collect()
}

/// One complex number as `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let v = parse_list(s, "--lambda")?;
    match v.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err(CliError::usage(format!("--lambda '{s}' must be 're' or 're,im'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inputs() {
        assert_eq!(parse_mult("2,0,1").unwrap(), Multiplicity::new(2.0, 0.0, 1.0));
        assert!(parse_mult("2,0").is_err());
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("1.5,-0.25").unwrap(), Complex64::new(1.5, -0.25));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("x").is_err());
        assert!("verbose".parse::<Suite>().is_err());
        assert_eq!("all".parse::<Suite>().unwrap().expand().len(), 5);
    }

    #[test]
    fn validation_runs_before_evaluation() {
        let mut cfg = RunConfig::new(Command::Growth {
            radius: 2.0,
            q: 2,
            xi_max: 80.0,
            xi_count: 16,
            picture: Picture::Noncompact,
            plot: None,
        });
        assert_eq!(cfg.validate().unwrap_err().exit_code(), 64);
        cfg.command = Command::Eval {
            route: Route::Chamber,
            sign: Sign::Plus,
            picture: Picture::Noncompact,
        };
        cfg.lambda = vec![Complex64::new(2.0, 0.0)];
        assert!(cfg.validate().is_err());
        cfg.point = vec![0.6];
        assert!(cfg.validate().is_ok());
        cfg.rank = 2;
        assert!(cfg.validate().is_err());
    }
}
