//! Command-line surface. Every subcommand emits a single OutputRecord
//! (JSON or CSV) with fixed field order, so identical invocations produce
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error,
//! 3 computation domain error (JSON error object on stderr).

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{self, BoundOrder, BoundRequest, BoundState};
use crate::core::{hz_to_ev, PhysicalConstants, QuantumNumbers};
use crate::error::{Error, Result};
use crate::kgnc;
use crate::ncfield::{self, AngularMode, FieldPoint};
use crate::nrlimit::{self, HydrogenState};
use crate::nu;
use crate::output::{to_csv, to_json, Value};
use crate::verify;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "nckg", version, about = "Klein-Gordon-Coulomb spectra in non-commutative space-time")]
pub struct Cli {
    /// JSON constants file; falls back to the NCKG_CONFIG environment variable.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// Relativistic Klein-Gordon state (n = radial quantum number).
    Rel,
    /// Non-relativistic hydrogen state (n = principal quantum number).
    Nr,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Angular {
    /// Replace the polar average by 2/3.
    Spherical,
    /// Exact (l, m_l) expectation value.
    Exact,
}

impl Angular {
    fn mode(self) -> AngularMode {
        match self {
            Angular::Spherical => AngularMode::SphericalAverage,
            Angular::Exact => AngularMode::ExactLm,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderFlag {
    First,
    Second,
    Both,
}

impl OrderFlag {
    fn order(self) -> BoundOrder {
        match self {
            OrderFlag::First => BoundOrder::First,
            OrderFlag::Second => BoundOrder::Second,
            OrderFlag::Both => BoundOrder::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Energy table: E0, theta-shift terms, total, over ranges of quantum numbers.
    Spectrum {
        #[arg(long, value_enum, default_value_t = Model::Rel)]
        model: Model,
        /// Radial (rel) or principal (nr) quantum number; single value or inclusive range a..b.
        #[arg(long, default_value = "0")]
        n: String,
        #[arg(long, default_value = "0")]
        l: String,
        /// Magnetic quantum number: value, range a..b, or `all` for -l..l.
        #[arg(long, default_value = "0")]
        ml: String,
        /// Override theta in eV^-2.
        #[arg(long)]
        theta: Option<f64>,
        /// Override the fine-structure constant.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum, default_value_t = Angular::Spherical)]
        angular: Angular,
    },
    /// Inverse-power moments <r^-k>: closed form, quadrature oracle, printed formula.
    Moments {
        #[arg(long, value_enum, default_value_t = Model::Rel)]
        model: Model,
        #[arg(long, default_value = "0")]
        n: String,
        #[arg(long, default_value = "0")]
        l: String,
        /// Moment order k; single value or inclusive range a..b.
        #[arg(long, default_value = "4..6")]
        k: String,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Dump of the hypergeometric-type reduction: k candidates, branches, eigenvalue.
    Nu {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        /// Override the fine-structure constant; 0 gives the free limit E = m_e.
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Deformed potential table over a radial grid (natural units).
    Potential {
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        rmin: f64,
        #[arg(long)]
        rmax: f64,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Invert the shift formulas: largest theta compatible with a given accuracy.
    Bound {
        /// State as `n,l,ml` (n radial for rel, principal for nr).
        #[arg(long)]
        state: String,
        #[arg(long, value_enum, default_value_t = Model::Nr)]
        model: Model,
        /// Accuracy in eV (exclusive with --accuracy-hz).
        #[arg(long)]
        accuracy_ev: Option<f64>,
        /// Accuracy as a frequency in Hz, converted with E = h*nu.
        #[arg(long)]
        accuracy_hz: Option<f64>,
        #[arg(long, value_enum, default_value_t = OrderFlag::First)]
        order: OrderFlag,
    },
    /// Run the full invariant suite; exit 0 iff everything passes.
    Verify,
}

/// Execute a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let constants = match load_constants(&cli) {
        Ok(c) => c,
        Err(e) => return emit_error(&e),
    };
    let verify_mode = matches!(cli.command, Command::Verify);
    match dispatch(&cli.command, &constants) {
        Ok(record) => {
            let rendered = match cli.format {
                Format::Json => to_json(&record),
                Format::Csv => to_csv(&record),
            };
            if let Err(e) = write_out(&cli.out, &rendered) {
                return emit_error(&e);
            }
            if verify_mode {
                let all_passed = record
                    .get("results")
                    .and_then(|r| r.get("all_passed"))
                    .map(|v| *v == Value::Bool(true))
                    .unwrap_or(false);
                if !all_passed {
                    return 1;
                }
            }
            0
        }
        Err(e) => emit_error(&e),
    }
}

fn load_constants(cli: &Cli) -> Result<PhysicalConstants> {
    let path = cli
        .config
        .clone()
        .or_else(|| std::env::var_os("NCKG_CONFIG").map(PathBuf::from));
    match path {
        Some(p) => PhysicalConstants::from_config(&p),
        None => Ok(PhysicalConstants::default()),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::DivergentMoment(_) => "divergent_moment",
        Error::DivergentIntegral(_) => "divergent_integral",
        Error::NoPolynomialSolution(_) => "no_polynomial_solution",
        Error::NoAdmissibleBranch => "no_admissible_branch",
        Error::AmbiguousBranch(_) => "ambiguous_branch",
        Error::NoFirstOrderSensitivity => "no_first_order_sensitivity",
        Error::RootFinding(_) => "root_finding",
    }
}

fn emit_error(e: &Error) -> i32 {
    let mut inner = Value::object();
    inner.push("kind", error_kind(e).into());
    inner.push("message", e.to_string().into());
    let mut obj = Value::object();
    obj.push("error", inner);
    let _ = write!(std::io::stderr(), "{}", to_json(&obj));
    3
}

fn write_out(out: &Option<PathBuf>, rendered: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

/// Inclusive `a..b` range or a single value.
fn parse_range(text: &str, what: &str) -> Result<(i64, i64)> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| Error::Domain(format!("invalid {what} value '{s}'")))
    };
    if let Some((a, b)) = text.split_once("..") {
        let lo = parse_one(a)?;
        let hi = parse_one(b)?;
        if hi < lo {
            return Err(Error::Domain(format!("empty {what} range '{text}'")));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(text)?;
        Ok((v, v))
    }
}

enum MlSpec {
    All,
    Range(i64, i64),
}

fn parse_ml(text: &str) -> Result<MlSpec> {
    if text.trim() == "all" {
        Ok(MlSpec::All)
    } else {
        let (lo, hi) = parse_range(text, "ml")?;
        Ok(MlSpec::Range(lo, hi))
    }
}

fn record_skeleton(command: &str, inputs: Value) -> Value {
    let mut rec = Value::object();
    rec.push("schema_version", SCHEMA_VERSION.into());
    rec.push("command", command.into());
    rec.push("inputs", inputs);
    rec
}

fn dispatch(command: &Command, base: &PhysicalConstants) -> Result<Value> {
    match command {
        Command::Spectrum {
            model,
            n,
            l,
            ml,
            theta,
            alpha,
            angular,
        } => cmd_spectrum(base, *model, n, l, ml, *theta, *alpha, *angular),
        Command::Moments { model, n, l, k, alpha } => cmd_moments(base, *model, n, l, k, *alpha),
        Command::Nu { n, l, alpha } => cmd_nu(base, *n, *l, *alpha),
        Command::Potential {
            theta,
            rmin,
            rmax,
            points,
            alpha,
        } => cmd_potential(base, *theta, *rmin, *rmax, *points, *alpha),
        Command::Bound {
            state,
            model,
            accuracy_ev,
            accuracy_hz,
            order,
        } => cmd_bound(base, state, *model, *accuracy_ev, *accuracy_hz, *order),
        Command::Verify => cmd_verify(),
    }
}

fn apply_overrides(
    base: &PhysicalConstants,
    alpha: Option<f64>,
    theta: Option<f64>,
) -> Result<PhysicalConstants> {
    let mut c = *base;
    if let Some(a) = alpha {
        c = c.with_alpha(a)?;
    }
    if let Some(t) = theta {
        c = c.with_theta(t)?;
    }
    Ok(c)
}

/// One spectrum row; divergent second-order pieces become nulls plus a warning.
#[allow(clippy::too_many_arguments)]
fn spectrum_row(
    model: Model,
    c: &PhysicalConstants,
    mode: AngularMode,
    n: i64,
    l: i64,
    ml: i64,
    warnings: &mut Vec<String>,
) -> Result<Value> {
    let theta = c.theta_natural();
    let alpha = c.alpha;

    // Unperturbed energy and the wavefunction parameters per model.
    let (e0, w, e_factor) = match model {
        Model::Rel => {
            let q = QuantumNumbers::new(n, l, ml)?;
            let e0 = kgnc::unperturbed_energy(&q, c)?;
            (e0, kgnc::radial_wavefunction(&q, c)?, e0)
        }
        Model::Nr => {
            let s = HydrogenState::new(n, l, ml, c)?;
            (
                nrlimit::bohr_energy(&s, c),
                nrlimit::hydrogen_wavefunction(&s)?,
                2.0,
            )
        }
    };
    let engine = |k: i32| kgnc::moment_closed_engine(w.n, w.effective_exponent, w.a, k);
    let state_label = format!("(n={n}, l={l}, m_l={ml})");

    let mut diverged = false;
    let term = |k: i32, coeff: f64, warnings: &mut Vec<String>| -> Result<Option<f64>> {
        if theta == 0.0 || coeff == 0.0 {
            return Ok(Some(0.0));
        }
        match engine(k) {
            Ok(f) => Ok(Some(coeff * f)),
            Err(Error::DivergentMoment(msg)) => {
                warnings.push(format!("{state_label}: {msg}"));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };

    let af = ncfield::angular_factor(mode, l as u32, ml as i32);
    let s1 = term(4, -(alpha * alpha * ml as f64 / 2.0) * theta, warnings)?;
    let s2 = term(5, -(alpha.powi(3) / 5.0) * e_factor * theta * theta, warnings)?;
    let s3 = term(
        6,
        -(af / 16.0 + 0.2) * alpha.powi(4) * theta * theta,
        warnings,
    )?;
    diverged |= s1.is_none() || s2.is_none() || s3.is_none();

    let total = match (s1, s2, s3) {
        (Some(a), Some(b), Some(d)) => Some(e0 + a + b + d),
        _ => None,
    };

    let opt = |v: Option<f64>| v.map(Value::Float).unwrap_or(Value::Null);
    let mut row = Value::object();
    row.push("n", n.into());
    row.push("l", l.into());
    row.push("m_l", ml.into());
    row.push("e0", e0.into());
    row.push("shift_theta1", opt(s1));
    row.push("shift_theta2_f5", opt(s2));
    row.push("shift_theta2_f6", opt(s3));
    row.push("total", opt(total));
    row.push("total_ev", opt(total.map(|t| t * c.m_e)));
    row.push("converged", (!diverged).into());
    Ok(row)
}

#[allow(clippy::too_many_arguments)]
fn cmd_spectrum(
    base: &PhysicalConstants,
    model: Model,
    n: &str,
    l: &str,
    ml: &str,
    theta: Option<f64>,
    alpha: Option<f64>,
    angular: Angular,
) -> Result<Value> {
    let c = apply_overrides(base, alpha, theta)?;
    let (n_lo, n_hi) = parse_range(n, "n")?;
    let (l_lo, l_hi) = parse_range(l, "l")?;
    let ml_spec = parse_ml(ml)?;
    let mode = angular.mode();

    let mut warnings = Vec::new();
    let mut rows = Vec::new();
    for ni in n_lo..=n_hi {
        for li in l_lo..=l_hi {
            // nr model: l ranges that sweep past n_p - 1 skip invalid combinations.
            if model == Model::Nr && li > ni - 1 {
                continue;
            }
            let (m_lo, m_hi) = match ml_spec {
                MlSpec::All => (-li, li),
                MlSpec::Range(a, b) => (a.max(-li), b.min(li)),
            };
            for mi in m_lo..=m_hi {
                rows.push(spectrum_row(model, &c, mode, ni, li, mi, &mut warnings)?);
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Domain(
            "no valid states in the requested ranges".to_string(),
        ));
    }

    let mut inputs = Value::object();
    inputs.push("model", model_label(model).into());
    inputs.push("n", n.into());
    inputs.push("l", l.into());
    inputs.push("ml", ml.into());
    inputs.push("alpha", c.alpha.into());
    inputs.push("theta_ev_minus2", c.theta.into());
    inputs.push(
        "angular",
        match mode {
            AngularMode::SphericalAverage => "spherical",
            AngularMode::ExactLm => "exact",
        }
        .into(),
    );
    inputs.push("units", "natural (m_e = 1); total_ev in eV".into());

    let mut results = Value::object();
    results.push("rows", Value::Array(rows));
    let mut rec = record_skeleton("spectrum", inputs);
    rec.push("results", results);
    rec.push("warnings", string_array(&warnings));
    Ok(rec)
}

fn model_label(model: Model) -> &'static str {
    match model {
        Model::Rel => "rel",
        Model::Nr => "nr",
    }
}

fn string_array(items: &[String]) -> Value {
    Value::Array(items.iter().map(|s| Value::Str(s.clone())).collect())
}

fn cmd_moments(
    base: &PhysicalConstants,
    model: Model,
    n: &str,
    l: &str,
    k: &str,
    alpha: Option<f64>,
) -> Result<Value> {
    let c = apply_overrides(base, alpha, None)?;
    let (n_lo, n_hi) = parse_range(n, "n")?;
    let (l_lo, l_hi) = parse_range(l, "l")?;
    let (k_lo, k_hi) = parse_range(k, "k")?;

    let mut warnings = Vec::new();
    let mut rows = Vec::new();
    for ni in n_lo..=n_hi {
        for li in l_lo..=l_hi {
            if model == Model::Nr && li > ni - 1 {
                continue;
            }
            for ki in k_lo..=k_hi {
                let comparison = match model {
                    Model::Rel => {
                        let q = QuantumNumbers::new(ni, li, 0)?;
                        kgnc::moment_closed(&q, &c, ki as i32)
                    }
                    Model::Nr => {
                        let s = HydrogenState::new(ni, li, 0, &c)?;
                        nrlimit::hydrogen_moment_closed(&s, &c, ki as i32)
                    }
                };
                let mut row = Value::object();
                row.push("n", ni.into());
                row.push("l", li.into());
                row.push("k", ki.into());
                match comparison {
                    Ok(m) => {
                        row.push("closed_form", m.closed_form.into());
                        row.push("oracle", m.oracle.value.into());
                        row.push("oracle_error", m.oracle.abs_error_estimate.into());
                        row.push(
                            "paper_fidelity",
                            m.paper_fidelity.map(Value::Float).unwrap_or(Value::Null),
                        );
                        row.push("rel_discrepancy", m.rel_discrepancy.into());
                        row.push(
                            "paper_rel_discrepancy",
                            m.paper_rel_discrepancy()
                                .map(Value::Float)
                                .unwrap_or(Value::Null),
                        );
                        row.push("error", Value::Null);
                        if let Some(pd) = m.paper_rel_discrepancy() {
                            if pd > 1e-9 {
                                warnings.push(format!(
                                    "(n={ni}, l={li}, k={ki}): printed formula deviates from oracle by {pd:.3e}"
                                ));
                            }
                        }
                    }
                    Err(Error::DivergentMoment(msg)) => {
                        row.push("closed_form", Value::Null);
                        row.push("oracle", Value::Null);
                        row.push("oracle_error", Value::Null);
                        row.push("paper_fidelity", Value::Null);
                        row.push("rel_discrepancy", Value::Null);
                        row.push("paper_rel_discrepancy", Value::Null);
                        row.push("error", msg.clone().into());
                        warnings.push(format!("(n={ni}, l={li}, k={ki}): {msg}"));
                    }
                    Err(e) => return Err(e),
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Domain(
            "no valid states in the requested ranges".to_string(),
        ));
    }

    let mut inputs = Value::object();
    inputs.push("model", model_label(model).into());
    inputs.push("n", n.into());
    inputs.push("l", l.into());
    inputs.push("k", k.into());
    inputs.push("alpha", c.alpha.into());
    inputs.push("units", "natural (lengths in 1/m_e)".into());

    let mut results = Value::object();
    results.push("rows", Value::Array(rows));
    let mut rec = record_skeleton("moments", inputs);
    rec.push("results", results);
    rec.push("warnings", string_array(&warnings));
    Ok(rec)
}

fn polynomial_value(p: &crate::specfun::Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| Value::Float(c)).collect())
}

fn cmd_nu(base: &PhysicalConstants, n: u32, l: u32, alpha: Option<f64>) -> Result<Value> {
    let alpha = alpha.unwrap_or(base.alpha);
    if alpha < 0.0 {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    // Closed form E0 = 1/sqrt(1 + alpha^2/N^2), valid down to alpha = 0.
    let gamma = kgnc::nu_exponent(l, alpha)? + 0.5;
    let big_n = n as f64 + 0.5 + gamma;
    let e_closed = 1.0 / (1.0 + alpha * alpha / (big_n * big_n)).sqrt();
    let e_root = nu::kg_energy_rootfind(n, l, alpha, e_closed)?;

    let problem = nu::kg_coulomb_problem(e_closed, l, alpha)?;
    let branches = nu::k_candidates(&problem)?;
    // At the free limit (alpha = 0) the eigenvalue sits on the boundary
    // E = m_e where tau degenerates to zero slope and no branch is
    // admissible; report the branches without a selection there.
    let mut warnings = Vec::new();
    let selection = match nu::kg_select_branch(&branches) {
        Ok(sel) => Some(sel),
        Err(Error::NoAdmissibleBranch) if alpha == 0.0 => {
            warnings.push(
                "free limit: tau has zero slope at E = m_e, no branch selection".to_string(),
            );
            None
        }
        Err(e) => return Err(e),
    };

    let mut branch_rows = Vec::new();
    for b in &branches {
        let mut row = Value::object();
        row.push("k", b.k.into());
        row.push(
            "sign",
            match b.sign {
                nu::BranchSign::Plus => "plus",
                nu::BranchSign::Minus => "minus",
            }
            .into(),
        );
        row.push("pi_coeffs", polynomial_value(&b.pi));
        row.push("tau_coeffs", polynomial_value(&b.tau));
        row.push("lambda", b.lambda.into());
        row.push("admissible", b.is_admissible().into());
        branch_rows.push(row);
    }

    let selected_obj = match &selection {
        Some((selected, tie_break)) => {
            let mut obj = Value::object();
            obj.push("k", selected.k.into());
            obj.push("pi_coeffs", polynomial_value(&selected.pi));
            obj.push("tau_coeffs", polynomial_value(&selected.tau));
            obj.push("lambda", selected.lambda.into());
            obj.push("origin_regularity_tie_break", (*tie_break).into());
            obj
        }
        None => Value::Null,
    };

    let mut inputs = Value::object();
    inputs.push("n", (n as i64).into());
    inputs.push("l", (l as i64).into());
    inputs.push("alpha", alpha.into());

    let mut results = Value::object();
    results.push("branches", Value::Array(branch_rows));
    results.push("selected", selected_obj);
    results.push("energy_closed_form", e_closed.into());
    results.push("energy_rootfind", e_root.into());
    results.push("rel_difference", (((e_root - e_closed) / e_closed).abs()).into());
    results.push(
        "admissible_count",
        (branches.iter().filter(|b| b.is_admissible()).count() as i64).into(),
    );

    let mut rec = record_skeleton("nu", inputs);
    rec.push("results", results);
    rec.push("warnings", string_array(&warnings));
    Ok(rec)
}

fn cmd_potential(
    base: &PhysicalConstants,
    theta: Option<f64>,
    rmin: f64,
    rmax: f64,
    points: usize,
    alpha: Option<f64>,
) -> Result<Value> {
    let c = apply_overrides(base, alpha, theta)?;
    if !(rmin > 0.0) || rmax < rmin {
        return Err(Error::Domain(format!(
            "need 0 < rmin <= rmax, got rmin = {rmin}, rmax = {rmax}"
        )));
    }
    if points == 0 {
        return Err(Error::Domain("points must be >= 1".to_string()));
    }

    let mut rows = Vec::new();
    for i in 0..points {
        let r = if points == 1 {
            rmin
        } else {
            rmin + (rmax - rmin) * i as f64 / (points - 1) as f64
        };
        // Sample on the x-axis so the azimuthal vector potential is explicit.
        let p = FieldPoint::new(r, Some([r, 0.0, 0.0]), 1.0, 0, None)?;
        let a0 = ncfield::a0_deformed(&p, &c);
        let ai = ncfield::ai_deformed(&p, &c)?;
        let mut row = Value::object();
        row.push("r", r.into());
        row.push("a0", a0.into());
        row.push("ai_x", ai[0].into());
        row.push("ai_y", ai[1].into());
        row.push("ai_z", ai[2].into());
        rows.push(row);
    }

    let mut inputs = Value::object();
    inputs.push("alpha", c.alpha.into());
    inputs.push("theta_ev_minus2", c.theta.into());
    inputs.push("rmin", rmin.into());
    inputs.push("rmax", rmax.into());
    inputs.push("points", (points as i64).into());
    inputs.push("units", "natural (r in 1/m_e)".into());

    let mut results = Value::object();
    results.push("rows", Value::Array(rows));
    let mut rec = record_skeleton("potential", inputs);
    rec.push("results", results);
    rec.push("warnings", string_array(&[]));
    Ok(rec)
}

fn cmd_bound(
    base: &PhysicalConstants,
    state: &str,
    model: Model,
    accuracy_ev: Option<f64>,
    accuracy_hz: Option<f64>,
    order: OrderFlag,
) -> Result<Value> {
    let parts: Vec<&str> = state.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!(
            "state must be 'n,l,ml', got '{state}'"
        )));
    }
    let nums: Vec<i64> = parts
        .iter()
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Domain(format!("invalid state component '{s}'")))
        })
        .collect::<Result<_>>()?;

    let acc_ev = match (accuracy_ev, accuracy_hz) {
        (Some(ev), None) => ev,
        (None, Some(hz)) => hz_to_ev(hz, base),
        _ => {
            return Err(Error::Domain(
                "exactly one of --accuracy-ev and --accuracy-hz is required".to_string(),
            ))
        }
    };

    let bound_state = match model {
        Model::Rel => BoundState::Relativistic(QuantumNumbers::new(nums[0], nums[1], nums[2])?),
        Model::Nr => {
            BoundState::NonRelativistic(HydrogenState::new(nums[0], nums[1], nums[2], base)?)
        }
    };
    let req = BoundRequest::new(bound_state, acc_ev, order.order())?;
    let res = bounds::theta_bound(&req, base)?;

    let mut inputs = Value::object();
    inputs.push("model", model_label(model).into());
    inputs.push("state", state.into());
    inputs.push("accuracy_ev", acc_ev.into());
    inputs.push(
        "accuracy_conversion",
        "frequencies converted with E = h*nu".into(),
    );
    inputs.push(
        "order",
        match order {
            OrderFlag::First => "first",
            OrderFlag::Second => "second",
            OrderFlag::Both => "both",
        }
        .into(),
    );
    inputs.push("alpha", base.alpha.into());

    let mut results = Value::object();
    results.push("theta_max_ev2", res.theta_max_ev2.into());
    results.push("theta_max_gev2", res.theta_max_gev2.into());
    results.push("lambda_gev", res.lambda_gev.into());
    results.push(
        "dominant_term",
        match res.dominant_term {
            bounds::DominantTerm::FirstOrder => "first_order",
            bounds::DominantTerm::SecondOrder => "second_order",
        }
        .into(),
    );
    results.push("round_trip_residual", res.round_trip_residual.into());
    results.push("paper_reference_value_gev2", bounds::REFERENCE_BOUND_GEV2.into());
    results.push(
        "ratio_to_paper",
        (res.theta_max_gev2 / bounds::REFERENCE_BOUND_GEV2).into(),
    );

    let warnings = vec![
        "the reference value's derivation is not reproducible from the displayed formulas; the ratio is documentation, not a gate".to_string(),
    ];
    let mut rec = record_skeleton("bound", inputs);
    rec.push("results", results);
    rec.push("warnings", string_array(&warnings));
    Ok(rec)
}

fn cmd_verify() -> Result<Value> {
    let report = verify::run_all();
    let mut rows = Vec::new();
    for check in &report.checks {
        let mut row = Value::object();
        row.push("name", check.name.as_str().into());
        row.push("passed", check.passed.into());
        row.push("detail", check.detail.as_str().into());
        rows.push(row);
    }
    let mut results = Value::object();
    results.push("rows", Value::Array(rows));
    results.push("all_passed", report.all_passed().into());

    let mut rec = record_skeleton("verify", Value::object());
    rec.push("results", results);
    rec.push("warnings", string_array(&report.warnings));
    Ok(rec)
}
