//! The `cmk` command line, as a library function so it can be driven from
//! tests without spawning a process.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 contract violation.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::clifford::Mat4;
use crate::error::Error;
use crate::forms::{g_form, projectivize_with, q_bilinear, q_form, Spinor, Tolerance, Vec6};
use crate::isotropic::{
    null_to_spinor_plane_with, plane_to_spinor_line_with, spinor_line_to_plane_with,
    IsotropicPlaneE, SpinorLine,
};
use crate::liesphere::{
    conformal_inversion, fixed_sphere_probe, lie_embed, InfinityReport, LieEntity,
};
use crate::sampling::RNG_NAME;
use crate::spin::{covering_matrix, vector_action_with, SpinElement};
use crate::suites;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;

/// Environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "CMK_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "cmk",
    version,
    about = "Spinorial model of compactified Minkowski space"
)]
struct Cli {
    /// Tolerance; overrides CMK_TOL and the per-command default.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per property (verify) or probe size (myth-report).
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Machine-readable output only.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run identity and property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Lie coordinates of a point, sphere, plane or infinity.
    Embed { payload: Option<String> },
    /// Conformal inversion of a null line.
    Invert { payload: Option<String> },
    /// Null line / spinor plane / spinor line correspondences.
    Correspond {
        direction: Direction,
        payload: Option<String>,
    },
    /// Act on a vector with an SU(2,2) matrix.
    Act {
        matrix: Option<String>,
        vector: Option<String>,
    },
    /// Probe the 2-sphere at conformal infinity fixed by inversion.
    MythReport,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    NullToPlane,
    PlaneToLine,
    LineToPlane,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Contract(e.to_string())
    }
}

type CliResult = std::result::Result<(String, i32), Failure>;

/// Runs `cmk` with `args` (including the program name). `stdin` is read only
/// when a payload argument is omitted; `env_tol` is the value of `CMK_TOL`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, env_tol: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match dispatch(&cli, stdin, env_tol) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(Failure::Usage(m)) => Outcome {
            stdout: String::new(),
            stderr: format!("usage error: {m}\n"),
            code: EXIT_USAGE,
        },
        Err(Failure::Contract(m)) => Outcome {
            stdout: String::new(),
            stderr: format!("contract violation: {m}\n"),
            code: EXIT_CONTRACT,
        },
    }
}

fn resolve_tol(cli: &Cli, env_tol: Option<&str>) -> std::result::Result<Option<f64>, Failure> {
    let tol = match (cli.tol, env_tol) {
        (Some(t), _) => Some(t),
        (None, Some(s)) => Some(
            s.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{TOL_ENV}={s:?} is not a number")))?,
        ),
        (None, None) => None,
    };
    match tol {
        Some(t) if !(t.is_finite() && t >= 0.0) => Err(Failure::Usage(format!(
            "tolerance must be finite and >= 0, got {t}"
        ))),
        t => Ok(t),
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, env_tol: Option<&str>) -> CliResult {
    let tol = resolve_tol(cli, env_tol)?;
    let mut payload = |arg: &Option<String>| -> std::result::Result<Value, Failure> {
        let text = match arg {
            Some(s) => s.clone(),
            None => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed JSON: {e}")))
    };
    match &cli.command {
        Command::Verify { suite } => {
            cmd_verify(suite, cli.seed, cli.count.unwrap_or(200), tol, cli.json)
        }
        Command::Embed { payload: p } => cmd_embed(&payload(p)?),
        Command::Invert { payload: p } => cmd_invert(&payload(p)?, tol),
        Command::Correspond {
            direction,
            payload: p,
        } => cmd_correspond(*direction, &payload(p)?, tol),
        Command::Act { matrix, vector } => {
            let (m, v) = match (matrix, vector) {
                (Some(_), Some(_)) => (payload(matrix)?, payload(vector)?),
                (None, None) => {
                    let both = payload(&None)?;
                    (
                        field(&both, "matrix")?.clone(),
                        field(&both, "vector")?.clone(),
                    )
                }
                _ => {
                    return Err(Failure::Usage(
                        "act takes both MATRIX and VECTOR, or one JSON object on stdin".into(),
                    ))
                }
            };
            cmd_act(&m, &v, tol)
        }
        Command::MythReport => cmd_myth_report(cli.count.unwrap_or(100), tol, cli.json),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable output")
}

fn cmd_verify(suite: &str, seed: u64, count: usize, tol: Option<f64>, json: bool) -> CliResult {
    let results = suites::run(suite, seed, count, tol).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown suite {suite:?}; expected one of {} or all",
            suites::SUITES.join(", ")
        ))
    })?;
    let mut out = String::new();
    let tol_text = tol.map_or("default".to_string(), |t| t.to_string());
    if json {
        out.push_str(&to_json(&json!({
            "rng": RNG_NAME,
            "seed": seed,
            "count": count,
            "tol": tol,
        })));
    } else {
        out.push_str(&format!(
            "# cmk verify rng={RNG_NAME} seed={seed} count={count} tol={tol_text}"
        ));
    }
    out.push('\n');
    for r in &results {
        out.push_str(&to_json(r));
        out.push('\n');
    }
    let code = if results.iter().all(|r| r.passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    Ok((out, code))
}

fn field<'a>(v: &'a Value, key: &str) -> std::result::Result<&'a Value, Failure> {
    v.get(key)
        .ok_or_else(|| Failure::Usage(format!("missing field {key:?}")))
}

fn number(v: &Value) -> std::result::Result<f64, Failure> {
    v.as_f64()
        .ok_or_else(|| Failure::Usage(format!("expected a number, got {v}")))
}

fn array<const N: usize>(v: &Value) -> std::result::Result<[f64; N], Failure> {
    let items = v
        .as_array()
        .filter(|a| a.len() == N)
        .ok_or_else(|| Failure::Usage(format!("expected an array of {N} numbers, got {v}")))?;
    let mut out = [0.0; N];
    for (o, item) in out.iter_mut().zip(items) {
        *o = number(item)?;
    }
    Ok(out)
}

/// A complex entry: `[re, im]` or a bare real number.
fn complex(v: &Value) -> std::result::Result<Complex64, Failure> {
    if v.is_number() {
        return Ok(Complex64::new(number(v)?, 0.0));
    }
    let [re, im] = array::<2>(v)?;
    Ok(Complex64::new(re, im))
}

// `+ 0.0` folds -0.0 into +0.0
fn complex_json(z: Complex64) -> Value {
    json!([z.re + 0.0, z.im + 0.0])
}

fn spinor(v: &Value) -> std::result::Result<Spinor, Failure> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| Failure::Usage(format!("expected a spinor of 4 entries, got {v}")))?;
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (o, item) in out.iter_mut().zip(items) {
        *o = complex(item)?;
    }
    Ok(Spinor(out))
}

fn spinor_json(s: &Spinor) -> Value {
    Value::Array(s.0.iter().map(|z| complex_json(*z)).collect())
}

fn vec6(v: &Value) -> std::result::Result<Vec6, Failure> {
    Ok(Vec6(array::<6>(v)?))
}

fn entity(v: &Value) -> std::result::Result<LieEntity, Failure> {
    let obj = v.as_object().filter(|o| o.len() == 1).ok_or_else(|| {
        Failure::Usage("expected an object with one of infinity, point, sphere, plane".into())
    })?;
    let (kind, body) = obj.iter().next().expect("one entry");
    Ok(match kind.as_str() {
        "infinity" => LieEntity::Infinity,
        "point" => LieEntity::Point { p: array(body)? },
        "sphere" => LieEntity::Sphere {
            center: array(field(body, "center")?)?,
            signed_radius: number(field(body, "radius")?)?,
        },
        "plane" => LieEntity::Plane {
            normal: array(field(body, "normal")?)?,
            offset: number(field(body, "offset")?)?,
        },
        other => return Err(Failure::Usage(format!("unknown entity kind {other:?}"))),
    })
}

fn tolerance(tol: Option<f64>) -> Tolerance {
    tol.map_or_else(Tolerance::default, Tolerance::uniform)
}

fn line_json(rep: &Vec6) -> String {
    to_json(&json!({ "rep": rep, "null_residual": q_form(rep) }))
}

fn cmd_embed(v: &Value) -> CliResult {
    let class = lie_embed(&entity(v)?)?;
    Ok((line_json(class.rep()) + "\n", EXIT_PASS))
}

/// Accepts a bare 6-array or the `{"rep": [...]}` object printed by
/// `embed` and `invert`.
fn line_input(v: &Value) -> std::result::Result<Vec6, Failure> {
    match v.get("rep") {
        Some(rep) => vec6(rep),
        None => vec6(v),
    }
}

fn cmd_invert(v: &Value, tol: Option<f64>) -> CliResult {
    let class = projectivize_with(&line_input(v)?, &tolerance(tol))?;
    Ok((
        line_json(conformal_inversion(&class).rep()) + "\n",
        EXIT_PASS,
    ))
}

fn cmd_correspond(dir: Direction, v: &Value, tol: Option<f64>) -> CliResult {
    let t = tolerance(tol);
    let out = match dir {
        Direction::NullToPlane => {
            let plane = null_to_spinor_plane_with(&line_input(v)?, &t)?;
            let [a, b] = plane.basis();
            let residual = [g_form(a, a), g_form(a, b), g_form(b, b)]
                .iter()
                .fold(0.0f64, |m, z| m.max(z.norm()));
            json!({
                "spinor_plane": [spinor_json(a), spinor_json(b)],
                "isotropy_residual": residual,
            })
        }
        Direction::PlaneToLine => {
            let basis = v.get("plane").unwrap_or(v);
            let items = basis
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Failure::Usage("expected two 6-vectors".into()))?;
            let n = IsotropicPlaneE::new_with(vec6(&items[0])?, vec6(&items[1])?, &t)?;
            let line = plane_to_spinor_line_with(&n, &t)?;
            json!({
                "spinor_line": spinor_json(line.rep()),
                "isotropy_residual": g_form(line.rep(), line.rep()).norm(),
            })
        }
        Direction::LineToPlane => {
            let s = spinor(v.get("spinor_line").unwrap_or(v))?;
            let n = spinor_line_to_plane_with(&SpinorLine::new_with(s, &t)?, &t)?;
            let [a, b] = n.basis();
            let residual = [q_form(a), q_bilinear(a, b), q_form(b)]
                .iter()
                .fold(0.0f64, |m, q| m.max(q.abs()));
            let clean = |x: &Vec6| Vec6(x.0.map(|c| c + 0.0));
            json!({ "plane": [clean(a), clean(b)], "isotropy_residual": residual })
        }
    };
    Ok((to_json(&out) + "\n", EXIT_PASS))
}

fn matrix(v: &Value) -> std::result::Result<Mat4, Failure> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 4)
        .ok_or_else(|| Failure::Usage("expected a 4x4 matrix of [re, im] entries".into()))?;
    let mut m = Mat4::zeros();
    for (i, row) in rows.iter().enumerate() {
        let s = spinor(row)?;
        for j in 0..4 {
            m[(i, j)] = s[j];
        }
    }
    Ok(m)
}

fn cmd_act(m: &Value, v: &Value, tol: Option<f64>) -> CliResult {
    let t = tolerance(tol);
    let s = SpinElement::new_with(matrix(m)?, t.abs_tol)?;
    let x = vec6(v)?;
    let y = vector_action_with(&s, &x, &t)?;
    let l = covering_matrix(&s)?;
    let rows: Vec<Vec<f64>> = (0..6)
        .map(|i| (0..6).map(|j| l.l[(i, j)]).collect())
        .collect();
    let out = json!({
        "vector": y,
        "covering_matrix": rows,
        "q_residual": l.isometry_defect(),
    });
    Ok((to_json(&out) + "\n", EXIT_PASS))
}

#[derive(Serialize)]
struct MythOutput {
    #[serde(flatten)]
    report: InfinityReport,
    tol: f64,
    errata_notes: Vec<String>,
}

fn cmd_myth_report(samples: usize, tol: Option<f64>, json: bool) -> CliResult {
    if samples == 0 {
        return Err(Failure::Usage("myth-report needs --count >= 1".into()));
    }
    let tol = tol.unwrap_or(1e-12);
    let report = fixed_sphere_probe(samples);
    let passed = report.missing_confirmed && report.fixed_sphere_max_drift <= tol;
    let mut out = String::new();
    if !json {
        out.push_str(&format!(
            "probed {} classes [(n, 1, 0, 0)] with |n| = 1\n\
             fixed by inversion: max drift {:e} (tol {tol:e})\n\
             at conformal infinity: {}\n\
             distance to the inverted light cone {}: min {} (control {:e})\n\
             missing from the inverted light cone: {}\n",
            report.sample_count,
            report.fixed_sphere_max_drift,
            report.fixed_sphere_at_infinity,
            report.lightcone_image_class,
            report.min_matching_residual,
            report.lightcone_control_max_residual,
            report.missing_confirmed,
        ));
    }
    let full = MythOutput {
        report,
        tol,
        errata_notes: suites::errata_for("myth-report"),
    };
    out.push_str(&to_json(&full));
    out.push('\n');
    Ok((out, if passed { EXIT_PASS } else { EXIT_FAIL }))
}
