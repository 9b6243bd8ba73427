//! Command-line front end.
//!
//! Every command reads a criteria matrix from a file, either a JSON object
//! `{"k": .., "n": .., "C": [[..], ..]}` or headerless comma-separated rows
//! (`#` starts a comment line). The format follows the file extension unless
//! `--format` is given. Column indices are 1-based on input and output.
//!
//! Exit codes: 0 success, 2 malformed input, 3 dimension mismatch,
//! 4 solver failure, 5 enumeration size cap.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::efftest::{Analyzer, EfficiencyReport, Verdict};
use crate::enumerate::{
    bicriterion_full_check, enumerate_faces, face_patterns, EfficientStructure, EnumerateOptions,
};
use crate::error::Error;
use crate::model::{vertex, CriteriaMatrix, PointClass, SimplexPoint, SupportPattern, Tolerances};
use crate::oracle::{dominance_lp_verdict, sample_dominators};
use crate::scalarize::{argmax_set, weighted_objective, SolutionSetDescriptor, WeightVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DIMENSION: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;
pub const EXIT_SIZE_CAP: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "molp-simplex",
    version,
    about = "Efficiency tests for multiple objective linear programs over the probability simplex"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Components at or below this value count as zero.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_x: f64,

    /// Tie threshold for weighted objective coefficients.
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub tol_d: f64,

    /// Simplex pivot and feasibility tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_lp: f64,

    /// Seed for the sampling oracle.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest support scanned by `enumerate`.
    #[arg(long, global = true)]
    pub max_support: Option<usize>,

    /// Allow `enumerate` on more than 16 columns.
    #[arg(long, global = true)]
    pub allow_large_n: bool,

    /// Matrix file format; guessed from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<MatrixFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide efficiency of one or more points.
    Test {
        matrix: PathBuf,
        /// Comma-separated coordinates, e.g. `0.55,0.45,0` or `1/3,1/3,1/3`.
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// List efficient vertices and efficient open faces.
    Enumerate {
        matrix: PathBuf,
        /// Cross-check every scanned pattern with the dominance program.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether every feasible point is efficient.
    CheckFull { matrix: PathBuf },
    /// Print lambda^T C and its argmax set for the given weights.
    Scalarize {
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Closed-form full-efficiency check for two criteria.
    Bicheck { matrix: PathBuf },
    /// Verdicts over a barycentric grid of a three-column problem.
    Plot3 {
        matrix: PathBuf,
        #[arg(long, default_value_t = 10)]
        density: usize,
    },
    /// Dominance-program verdict for one point.
    Oracle {
        matrix: PathBuf,
        point: String,
        /// Also search for a dominator by uniform sampling.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn dimension(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DIMENSION,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => EXIT_DIMENSION,
            Error::Lp(_) | Error::CertificateRejected { .. } => EXIT_SOLVER,
            Error::SizeCap { .. } => EXIT_SIZE_CAP,
            Error::InvalidMatrix(_)
            | Error::InvalidPoint(_)
            | Error::InvalidTolerances(_)
            | Error::InvalidSupport(_)
            | Error::Precondition(_) => EXIT_PARSE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        // A closed downstream pipe (`| head`) is not a failure.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Self {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Self::parse(e.to_string())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    k: usize,
    n: usize,
    #[serde(rename = "C")]
    c: Vec<Vec<f64>>,
}

/// Parses a matrix from text in the given format.
pub fn parse_matrix(text: &str, format: MatrixFormat) -> Result<CriteriaMatrix, CliError> {
    match format {
        MatrixFormat::Json => {
            let file: MatrixFile =
                serde_json::from_str(text).map_err(|e| CliError::parse(format!("matrix JSON: {e}")))?;
            if file.c.len() != file.k || file.c.iter().any(|r| r.len() != file.n) {
                return Err(CliError::parse(format!(
                    "matrix JSON declares k = {}, n = {} but C does not have that shape",
                    file.k, file.n
                )));
            }
            Ok(CriteriaMatrix::from_rows(&file.c)?)
        }
        MatrixFormat::Csv => {
            let rows = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(parse_numbers)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CriteriaMatrix::from_rows(&rows)?)
        }
    }
}

pub fn load_matrix(path: &Path, format: Option<MatrixFormat>) -> Result<CriteriaMatrix, CliError> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => MatrixFormat::Json,
        _ => MatrixFormat::Csv,
    });
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text, format)
}

fn parse_number(token: &str) -> Result<f64, CliError> {
    let token = token.trim();
    let bad = || CliError::parse(format!("not a number: {token:?}"));
    let value = match token.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            num / den
        }
        None => token.parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Splits a comma-separated list; fractions such as `1/3` are accepted.
pub fn parse_numbers(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',').map(parse_number).collect()
}

fn parse_point(text: &str, c: &CriteriaMatrix, tol: &Tolerances) -> Result<SimplexPoint, CliError> {
    let coords = parse_numbers(text)?;
    if coords.len() != c.n() {
        return Err(CliError::dimension(format!(
            "point {text:?} has {} components, the matrix has {} columns",
            coords.len(),
            c.n()
        )));
    }
    Ok(SimplexPoint::new(coords, tol)?)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct FaceJson {
    pub kind: String,
    pub support: Vec<usize>,
}

impl FaceJson {
    fn new(face: &SolutionSetDescriptor, n: usize) -> Self {
        Self {
            kind: face.kind().to_string(),
            support: face.support(n).one_based(),
        }
    }
}

/// Structured form of an [`EfficiencyReport`].
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportJson {
    pub class: String,
    pub support: Vec<usize>,
    pub verdict: String,
    pub test: String,
    /// Whether the tie-tolerant variant of the test decided the verdict.
    pub ties_allowed: bool,
    pub value: f64,
    pub certificate: Option<Vec<f64>>,
    pub face: Option<FaceJson>,
}

impl ReportJson {
    pub fn new(report: &EfficiencyReport) -> Self {
        let n = report.point.n();
        Self {
            class: report.class.name().to_string(),
            support: report.class.support(n).one_based(),
            verdict: report.verdict.label().to_string(),
            test: report.test.label().to_string(),
            ties_allowed: report.test.allows_ties(),
            value: report.value,
            certificate: report.certificate.as_ref().map(|w| w.as_slice().to_vec()),
            face: report.face.as_ref().map(|f| FaceJson::new(f, n)),
        }
    }
}

fn fmt_vec(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_pattern(p: &SupportPattern) -> String {
    p.to_string()
}

fn describe_class(class: &PointClass) -> String {
    match class {
        PointClass::Deterministic(j) => format!("deterministic (vertex e_{})", j + 1),
        PointClass::PartiallyRandomized(s) => format!("partially randomized on {}", fmt_pattern(s)),
        PointClass::Randomized => "randomized".to_string(),
    }
}

fn describe_face(face: &SolutionSetDescriptor) -> String {
    match face {
        SolutionSetDescriptor::AllOfX => "all of X".to_string(),
        SolutionSetDescriptor::Vertex(j) => format!("vertex e_{}", j + 1),
        SolutionSetDescriptor::OpenFace(s) => format!("open face {}", fmt_pattern(s)),
    }
}

pub fn render_report_text(report: &EfficiencyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "point       {}", fmt_vec(report.point.coords()));
    let _ = writeln!(s, "class       {}", describe_class(&report.class));
    let _ = writeln!(s, "verdict     {}", report.verdict.label());
    let _ = writeln!(s, "test        {} = {}", report.test, report.value);
    let cert = report
        .certificate
        .as_ref()
        .map_or("none".to_string(), |w| fmt_vec(w.as_slice()));
    let _ = writeln!(s, "certificate {cert}");
    let face = report.face.as_ref().map_or("none".to_string(), describe_face);
    let _ = writeln!(s, "face        {face}");
    if !report.clamped.is_empty() {
        let idx: Vec<String> = report.clamped.iter().map(|j| (j + 1).to_string()).collect();
        let _ = writeln!(s, "clamped     components {} read as zero", idx.join(", "));
    }
    s
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct OracleCheckJson {
    pub support: Vec<usize>,
    pub decide: String,
    pub oracle: String,
    pub agree: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureJson {
    pub full: bool,
    pub vertices: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
    pub exhaustive: bool,
    pub certificate: Option<Vec<f64>>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<Vec<OracleCheckJson>>,
}

impl StructureJson {
    fn new(s: &EfficientStructure) -> Self {
        Self {
            full: s.full,
            vertices: s.vertices.iter().map(|j| j + 1).collect(),
            faces: s.faces.iter().map(SupportPattern::one_based).collect(),
            exhaustive: s.exhaustive,
            certificate: s.certificate.as_ref().map(|w| w.as_slice().to_vec()),
            warnings: s.warnings.clone(),
            oracle: None,
        }
    }
}

/// Dominance-program verdicts for each vertex, each scanned face barycenter
/// and the barycenter of `X`, next to the enumeration's verdicts.
fn oracle_cross_check(
    c: &CriteriaMatrix,
    s: &EfficientStructure,
    max_support: usize,
    tol: &Tolerances,
) -> Result<Vec<OracleCheckJson>, CliError> {
    let n = c.n();
    let mut checks = Vec::new();
    let mut push = |pattern: SupportPattern, point: SimplexPoint, decided: bool| -> Result<(), CliError> {
        let oracle = dominance_lp_verdict(c, &point, tol)?.verdict.is_efficient();
        let label = |e: bool| if e { "efficient" } else { "dominated" }.to_string();
        checks.push(OracleCheckJson {
            support: pattern.one_based(),
            decide: label(decided),
            oracle: label(oracle),
            agree: decided == oracle,
        });
        Ok(())
    };
    for j in 0..n {
        push(
            SupportPattern::singleton(j),
            vertex(j, n)?,
            s.vertices.contains(&j),
        )?;
    }
    for pattern in face_patterns(n, max_support) {
        let point = SimplexPoint::barycenter(&pattern, n)?;
        let decided = s.faces.contains(&pattern);
        push(pattern, point, decided)?;
    }
    let full = SupportPattern::full(n);
    push(full.clone(), SimplexPoint::barycenter(&full, n)?, s.full)?;
    Ok(checks)
}

fn render_structure_text(s: &StructureJson) -> String {
    let list = |v: &[usize]| v.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    let _ = writeln!(out, "full        {}", s.full);
    let _ = writeln!(out, "vertices    [{}]", list(&s.vertices));
    let faces: Vec<String> = s.faces.iter().map(|f| format!("{{{}}}", list(f))).collect();
    let _ = writeln!(out, "faces       [{}]", faces.join(", "));
    let _ = writeln!(out, "exhaustive  {}", s.exhaustive);
    if let Some(cert) = &s.certificate {
        let _ = writeln!(out, "certificate {}", fmt_vec(cert));
    }
    for w in &s.warnings {
        let _ = writeln!(out, "warning     {w}");
    }
    if let Some(checks) = &s.oracle {
        let disagreements = checks.iter().filter(|c| !c.agree).count();
        let _ = writeln!(
            out,
            "oracle      {} patterns, {} disagreements",
            checks.len(),
            disagreements
        );
        for c in checks.iter().filter(|c| !c.agree) {
            let _ = writeln!(
                out,
                "  disagree  {{{}}} decide={} oracle={}",
                list(&c.support),
                c.decide,
                c.oracle
            );
        }
    }
    out
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string(value).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Barycentric grid points `(i, j, d - i - j) / d`, `i` outer and `j` inner.
pub fn barycentric_grid(density: usize) -> Vec<[f64; 3]> {
    let d = density as f64;
    let mut out = Vec::with_capacity((density + 1) * (density + 2) / 2);
    for i in 0..=density {
        for j in 0..=density - i {
            let l = density - i - j;
            out.push([i as f64 / d, j as f64 / d, l as f64 / d]);
        }
    }
    out
}

/// Executes a parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let g = &cli.global;
    let tol = Tolerances::new(g.tol_x, g.tol_d, g.tol_lp)?;
    match &cli.command {
        Command::Test { matrix, points } => {
            let c = load_matrix(matrix, g.format)?;
            let points = points
                .iter()
                .map(|p| parse_point(p, &c, &tol))
                .collect::<Result<Vec<_>, _>>()?;
            let analyzer = Analyzer::new(&c, tol)?;
            for (idx, x) in points.iter().enumerate() {
                let report = analyzer.decide(x)?;
                if g.json {
                    json_line(out, &ReportJson::new(&report))?;
                } else {
                    if idx > 0 {
                        writeln!(out)?;
                    }
                    write!(out, "{}", render_report_text(&report))?;
                }
            }
        }
        Command::Enumerate { matrix, oracle } => {
            let c = load_matrix(matrix, g.format)?;
            let analyzer = Analyzer::new(&c, tol)?;
            let options = EnumerateOptions {
                max_support: g.max_support,
                allow_large_n: g.allow_large_n,
            };
            let s = enumerate_faces(&analyzer, options)?;
            let mut view = StructureJson::new(&s);
            if *oracle {
                let cap = g.max_support.unwrap_or(c.n()).min(c.n() - 1);
                view.oracle = Some(oracle_cross_check(&c, &s, cap, &tol)?);
            }
            if g.json {
                json_line(out, &view)?;
            } else {
                write!(out, "{}", render_structure_text(&view))?;
            }
        }
        Command::CheckFull { matrix } => {
            let c = load_matrix(matrix, g.format)?;
            let analyzer = Analyzer::new(&c, tol)?;
            let t0 = analyzer.t0()?;
            let cert = crate::enumerate::check_full(&analyzer)?;
            if g.json {
                json_line(
                    out,
                    &serde_json::json!({
                        "full": cert.is_some(),
                        "value": t0.value,
                        "certificate": cert.as_ref().map(|w| w.as_slice().to_vec()),
                    }),
                )?;
            } else {
                writeln!(out, "full        {}", cert.is_some())?;
                writeln!(out, "T0          {}", t0.value)?;
                if let Some(w) = cert {
                    writeln!(out, "certificate {}", fmt_vec(w.as_slice()))?;
                }
            }
        }
        Command::Scalarize { matrix, weights } => {
            let c = load_matrix(matrix, g.format)?;
            let lambda = WeightVector::new(parse_numbers(weights)?);
            let d = weighted_objective(&c, &lambda)?;
            let set = argmax_set(&d, &tol);
            let descriptor = SolutionSetDescriptor::from_argmax(set.clone(), c.n());
            if g.json {
                json_line(
                    out,
                    &serde_json::json!({
                        "weights": lambda.as_slice(),
                        "coeffs": d.coeffs(),
                        "dmax": d.dmax(),
                        "argmax": set.one_based(),
                        "solution_set": FaceJson::new(&descriptor, c.n()),
                        "positive_weights": lambda.is_strictly_positive(),
                    }),
                )?;
            } else {
                writeln!(out, "coeffs      {}", fmt_vec(d.coeffs()))?;
                writeln!(out, "dmax        {}", d.dmax())?;
                writeln!(out, "argmax      {}", fmt_pattern(&set))?;
                writeln!(out, "optimal set {}", describe_face(&descriptor))?;
            }
        }
        Command::Bicheck { matrix } => {
            let c = load_matrix(matrix, g.format)?;
            let full = bicriterion_full_check(&c, &tol)?;
            if g.json {
                json_line(out, &serde_json::json!({ "full": full }))?;
            } else {
                writeln!(out, "ratio condition holds: {full}")?;
            }
        }
        Command::Plot3 { matrix, density } => {
            let c = load_matrix(matrix, g.format)?;
            if c.n() != 3 {
                return Err(CliError::dimension(format!(
                    "plot3 needs exactly 3 columns, the matrix has {}",
                    c.n()
                )));
            }
            if *density == 0 {
                return Err(CliError::parse("density must be at least 1"));
            }
            let analyzer = Analyzer::new(&c, tol)?;
            if !g.json {
                writeln!(out, "x1,x2,x3,verdict")?;
            }
            for coords in barycentric_grid(*density) {
                let x = SimplexPoint::new(coords.to_vec(), &tol)?;
                let verdict = analyzer.decide(&x)?.verdict;
                if g.json {
                    json_line(
                        out,
                        &serde_json::json!({ "x": coords, "verdict": verdict.label() }),
                    )?;
                } else {
                    writeln!(
                        out,
                        "{},{},{},{}",
                        coords[0],
                        coords[1],
                        coords[2],
                        verdict.label()
                    )?;
                }
            }
        }
        Command::Oracle {
            matrix,
            point,
            trials,
        } => {
            let c = load_matrix(matrix, g.format)?;
            let x = parse_point(point, &c, &tol)?;
            let outcome = dominance_lp_verdict(&c, &x, &tol)?;
            let sampled = match trials {
                Some(t) => Some(sample_dominators(&c, &x, *t, g.seed, &tol)?),
                None => None,
            };
            if g.json {
                let mut obj = serde_json::json!({
                    "verdict": outcome.verdict.label(),
                    "value": outcome.value,
                    "witness": outcome.witness,
                });
                if let Some(found) = &sampled {
                    obj["sampled_dominator"] = serde_json::json!(found.as_ref().map(|y| y.coords().to_vec()));
                }
                json_line(out, &obj)?;
            } else {
                writeln!(out, "verdict     {}", outcome.verdict.label())?;
                writeln!(out, "slack       {}", outcome.value)?;
                if outcome.verdict == Verdict::Dominated {
                    writeln!(out, "dominator   {}", fmt_vec(&outcome.witness))?;
                }
                if let Some(found) = &sampled {
                    let text = found
                        .as_ref()
                        .map_or("none found".to_string(), |y| fmt_vec(y.coords()));
                    writeln!(out, "sampled     {text}")?;
                }
            }
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            if !e.message.is_empty() {
                let _ = writeln!(err, "error: {}", e.message);
            }
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_and_fractions() {
        assert_eq!(parse_numbers("0.55, 0.45,0").unwrap(), vec![0.55, 0.45, 0.0]);
        assert_eq!(parse_numbers("1/4,3/4").unwrap(), vec![0.25, 0.75]);
        assert_eq!(parse_numbers("-0.5").unwrap(), vec![-0.5]);
        assert!(parse_numbers("a,b").is_err());
        assert!(parse_numbers("1/0").is_err());
        assert!(parse_numbers("").is_err());
    }

    #[test]
    fn matrix_formats() {
        let json = r#"{"k": 2, "n": 3, "C": [[1, 2, 3], [3, 2, 1]]}"#;
        let c = parse_matrix(json, MatrixFormat::Json).unwrap();
        assert_eq!(c.row(1), &[3.0, 2.0, 1.0]);
        let csv = "# criteria\n1,2,3\n\n3,2,1\n";
        assert_eq!(parse_matrix(csv, MatrixFormat::Csv).unwrap(), c);

        let bad_shape = r#"{"k": 3, "n": 3, "C": [[1, 2, 3], [3, 2, 1]]}"#;
        assert_eq!(
            parse_matrix(bad_shape, MatrixFormat::Json).unwrap_err().code,
            EXIT_PARSE
        );
        assert_eq!(
            parse_matrix("1,2\n3", MatrixFormat::Csv).unwrap_err().code,
            EXIT_PARSE
        );
        assert_eq!(
            parse_matrix("{", MatrixFormat::Json).unwrap_err().code,
            EXIT_PARSE
        );
    }

    #[test]
    fn grid_size() {
        assert_eq!(barycentric_grid(10).len(), 66);
        assert_eq!(barycentric_grid(1).len(), 3);
        for p in barycentric_grid(7) {
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn error_codes() {
        let code = |e: Error| CliError::from(e).code;
        assert_eq!(code(Error::SizeCap { n: 20, cap: 16 }), EXIT_SIZE_CAP);
        assert_eq!(code(Error::InvalidPoint("x".into())), EXIT_PARSE);
        assert_eq!(
            code(Error::DimensionMismatch {
                what: "point",
                expected: 3,
                found: 2
            }),
            EXIT_DIMENSION
        );
        assert_eq!(
            code(Error::Lp(crate::lp::LpError::NumericalBreakdown("x".into()))),
            EXIT_SOLVER
        );
    }
}
