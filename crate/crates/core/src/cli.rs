//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for invalid input (bad spec, bad flags,
//! preconditions), 2 when an internal verification fails.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactnum::{Cyclotomic, Field};
use crate::groebner::Ideal;
use crate::invariants::{
    check_saturation_theorems, equivariant_ideal, sibirsky_ideal, spec_hilbert_basis, two_dim_crosschecks,
    zeta_reversible_ideal, EquivariantRoute, IdealComparison, ZetaRoute,
};
use crate::normalform::{grading_holds, nf_invariance_check, normal_form, resonant_exponent, truncated_first_integral, FirstIntegral};
use crate::resonant::{a_matrices, l_matrix, m_matrix, ParameterPoint, SystemSpec};

#[derive(Parser, Debug)]
#[command(name = "resonaut", version, about = "Invariants, binomial ideals and normal forms of resonant polynomial systems")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The matrices L, M, A and A-hat of the family.
    Matrices { spec: PathBuf },
    /// Hilbert basis of the invariant monoid, one vector per line.
    Hilbert { spec: PathBuf },
    /// Reduced deglex basis of the Sibirsky ideal.
    Sibirsky { spec: PathBuf },
    /// Reduced basis of the equivariant ideal.
    Equivariant {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "toric")]
        route: EqRouteArg,
    },
    /// Reduced basis of the zeta-reversible ideal over Q(zeta).
    ZetaReversible {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "zeta-toric")]
        route: ZetaRouteArg,
    },
    /// Compares the saturated Sibirsky and reversibility ideals with the
    /// equivariant and zeta-reversible ideals.
    CheckSaturation { spec: PathBuf },
    /// Two-dimensional identities between the Sibirsky, kernel and lattice ideals.
    #[command(name = "crosscheck-2d")]
    Crosscheck2d { spec: PathBuf },
    /// Resonant coefficients of the normal form up to an order.
    NormalForm {
        spec: PathBuf,
        #[arg(long)]
        order: u32,
        /// Also certify each coefficient against the invariant subalgebra.
        #[arg(long)]
        certify: bool,
    },
    /// Truncated first integral x1*...*xn + h.o.t. at an exact parameter point.
    Integral {
        spec: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        order: u32,
    },
    /// Parameter names in canonical order.
    Vars { spec: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EqRouteArg {
    Elimination,
    Toric,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZetaRouteArg {
    Elimination,
    ZetaToric,
}

enum Failure {
    Invalid(String),
    Verification(String),
    // downstream reader went away; nothing left to report
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Structural(_) => Failure::Verification(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Invalid(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Caps the global rayon pool at `RESONAUT_THREADS` when set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("RESONAUT_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // a second call finds the pool already built; that is fine
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    configure_threads();
    match dispatch(&cli, out) {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            1
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {}", msg);
            2
        }
    }
}

fn load(path: &Path) -> std::result::Result<SystemSpec, Failure> {
    Ok(SystemSpec::from_file(path)?)
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json value serializes"))?;
    Ok(())
}

fn basis_lines<F: Field>(ideal: &Ideal<F>) -> std::result::Result<Vec<String>, Failure> {
    let gb = ideal.canonical_basis()?;
    if !gb.verify_criterion() {
        return Err(Failure::Verification("reduced basis fails the Buchberger criterion".into()));
    }
    Ok(gb.elements().iter().map(|p| p.to_string()).collect())
}

fn emit_ideal<F: Field>(out: &mut dyn Write, json_mode: bool, field: &str, ideal: &Ideal<F>) -> Outcome {
    let lines = basis_lines(ideal)?;
    if json_mode {
        emit_json(
            out,
            &json!({ "field": field, "vars": ideal.ring().vars(), "order": "deglex", "basis": lines }),
        )
    } else {
        for l in lines {
            writeln!(out, "{}", l)?;
        }
        Ok(())
    }
}

fn comparison_text(out: &mut dyn Write, title: &str, c: &IdealComparison) -> Outcome {
    writeln!(out, "{}: {}", title, if c.equal { "equal" } else { "DIFFERENT" })?;
    if !c.equal {
        writeln!(out, "  left:")?;
        for l in &c.left {
            writeln!(out, "    {}", l)?;
        }
        writeln!(out, "  right:")?;
        for r in &c.right {
            writeln!(out, "    {}", r)?;
        }
    }
    Ok(())
}

fn phase_monomial(exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn read_point(path: &Path, spec: &SystemSpec) -> std::result::Result<ParameterPoint, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
    let raw: HashMap<String, Value> =
        serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("point file: {}", e)))?;
    let names = spec.parameter_vars();
    let mut point = ParameterPoint::new();
    for (k, v) in raw {
        if !names.contains(&k) {
            return Err(Error::UnknownVariable(k).into());
        }
        let s = match v {
            Value::String(s) => s,
            Value::Number(n) => n.to_string(),
            other => return Err(Failure::Invalid(format!("value for {} must be a string or number, got {}", k, other))),
        };
        point.insert(k, Cyclotomic::parse(spec.n(), &s)?);
    }
    Ok(point)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let js = cli.json;
    match &cli.command {
        Command::Matrices { spec } => {
            let spec = load(spec)?;
            let l = l_matrix(&spec);
            let m = m_matrix(&spec);
            let (a, a_hat) = a_matrices(&spec);
            if js {
                emit_json(
                    out,
                    &json!({ "L": l.to_rows(), "M": m.to_rows(), "A": a.to_rows(), "A_hat": a_hat.to_rows() }),
                )
            } else {
                writeln!(out, "L = {}", l)?;
                writeln!(out, "M = {}", m)?;
                writeln!(out, "A = {}", a)?;
                writeln!(out, "A_hat = {}", a_hat)?;
                Ok(())
            }
        }
        Command::Hilbert { spec } => {
            let spec = load(spec)?;
            let h = spec_hilbert_basis(&spec)?;
            if js {
                emit_json(out, &json!({ "vars": spec.parameter_vars(), "basis": h.vectors }))
            } else {
                for v in &h.vectors {
                    let es: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                    writeln!(out, "[{}]", es.join(", "))?;
                }
                Ok(())
            }
        }
        Command::Sibirsky { spec } => {
            let spec = load(spec)?;
            emit_ideal(out, js, "Q", &sibirsky_ideal(&spec)?)
        }
        Command::Equivariant { spec, route } => {
            let spec = load(spec)?;
            let route = match route {
                EqRouteArg::Elimination => EquivariantRoute::Elimination,
                EqRouteArg::Toric => EquivariantRoute::Toric,
            };
            emit_ideal(out, js, "Q", &equivariant_ideal(&spec, route)?)
        }
        Command::ZetaReversible { spec, route } => {
            let spec = load(spec)?;
            let route = match route {
                ZetaRouteArg::Elimination => ZetaRoute::Elimination,
                ZetaRouteArg::ZetaToric => ZetaRoute::ZetaToric,
            };
            let field = format!("Q(zeta_{})", spec.n());
            emit_ideal(out, js, &field, &zeta_reversible_ideal(&spec, route)?)
        }
        Command::CheckSaturation { spec } => {
            let spec = load(spec)?;
            let report = check_saturation_theorems(&spec)?;
            if js {
                emit_json(out, &serde_json::to_value(&report).expect("report serializes"))?;
            } else {
                comparison_text(out, "I_S : a^inf = I_E", &report.sibirsky_vs_equivariant)?;
                comparison_text(out, "I_R : a^inf = I_zeta", &report.reversibility_vs_zeta)?;
            }
            if report.all_equal() {
                Ok(())
            } else {
                Err(Failure::Verification("saturation identities do not hold".into()))
            }
        }
        Command::Crosscheck2d { spec } => {
            let spec = load(spec)?;
            let report = two_dim_crosschecks(&spec)?;
            if js {
                emit_json(out, &serde_json::to_value(&report).expect("report serializes"))?;
            } else {
                comparison_text(out, "I_S = kernel ideal", &report.sibirsky_vs_kernel)?;
                comparison_text(out, "I_S = lattice ideal", &report.sibirsky_vs_lattice)?;
                writeln!(out, "disjoint supports: {}", if report.disjoint_supports { "yes" } else { "NO" })?;
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification("two-dimensional identities do not hold".into()))
            }
        }
        Command::NormalForm { spec, order, certify } => {
            let spec = load(spec)?;
            let nf = normal_form(&spec, *order)?;
            if !grading_holds(&nf, &spec)? {
                return Err(Failure::Verification("normal form violates the L-grading".into()));
            }
            let certified = if *certify { Some(nf_invariance_check(&nf, &spec)?) } else { None };
            if js {
                let mut v = nf.to_json();
                if let Some(c) = certified {
                    v["certified"] = json!(c);
                }
                emit_json(out, &v)?;
            } else {
                for c in &nf.coefficients {
                    writeln!(
                        out,
                        "q[{},{}] ({}) = {}",
                        c.coordinate + 1,
                        c.power,
                        phase_monomial(&resonant_exponent(nf.n, c.coordinate, c.power)),
                        c.coefficient
                    )?;
                }
                if let Some(c) = certified {
                    writeln!(out, "invariant subalgebra membership: {}", if c { "yes" } else { "NO" })?;
                }
            }
            match certified {
                Some(false) => Err(Failure::Verification("a coefficient lies outside the invariant subalgebra".into())),
                _ => Ok(()),
            }
        }
        Command::Integral { spec, point, order } => {
            let spec = load(spec)?;
            let point = read_point(point, &spec)?;
            let res = truncated_first_integral(&spec, &point, *order)?;
            if js {
                return emit_json(out, &serde_json::to_value(&res).expect("result serializes"));
            }
            match res {
                FirstIntegral::Solved { order, coefficients } => {
                    writeln!(out, "solved to order {}", order)?;
                    for (m, c) in coefficients {
                        writeln!(out, "{}: {}", phase_monomial(&m), c)?;
                    }
                }
                FirstIntegral::Obstructed { degree, monomial, residual } => {
                    writeln!(
                        out,
                        "obstructed at degree {}: residual {} at {}",
                        degree,
                        residual,
                        phase_monomial(&monomial)
                    )?;
                }
            }
            Ok(())
        }
        Command::Vars { spec } => {
            let spec = load(spec)?;
            let vars = spec.parameter_vars();
            if js {
                emit_json(out, &json!({ "vars": vars }))
            } else {
                for v in vars {
                    writeln!(out, "{}", v)?;
                }
                Ok(())
            }
        }
    }
}
