//! Command-line front end.
//!
//! Exit codes: `0` success, `2` invalid arguments, form or file, `3`
//! singular form, `4` certificate failure. Data goes to standard output
//! (or `--out`), diagnostics to standard error.

mod args;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use serde::Serialize;

pub use args::{Cli, Command, NamedForm};
use args::{FormArgs, ToleranceArgs};

use crate::error::{Error, Result};
use crate::forms::{symplectic_matrix, validate_form_with, BilinearForm, FormKind};
use crate::io::{
    format_f64, matrix_to_json, read_matrix_file, write_matrix, write_matrix_with_comments,
    MatrixFormat,
};
use crate::matcore::RealMatrix;
use crate::stabilizer::generate_batch;
use crate::tolerance::Tolerances;
use crate::verify::{certify_sample, certify_with, moment_stats, Certificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_CERTIFICATE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gen,
    Verify,
    Stats,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FormSource {
    Named {
        form: NamedForm,
        n: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
    },
    File(PathBuf),
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub form: FormSource,
    pub count: usize,
    pub seed: u64,
    pub format: MatrixFormat,
    pub out: Option<PathBuf>,
    pub verify: bool,
    pub matrix: Option<PathBuf>,
    pub tolerances: Tolerances,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let (command, source, tol, count, seed, format, out, verify, matrix) = match cli.command {
            Command::Gen(a) => (
                CommandKind::Gen,
                a.source,
                a.tolerances,
                a.count,
                a.seed,
                a.format,
                a.out,
                a.verify,
                None,
            ),
            Command::Verify(a) => (
                CommandKind::Verify,
                a.source,
                a.tolerances,
                1,
                0,
                MatrixFormat::Mm,
                None,
                true,
                Some(a.matrix),
            ),
            Command::Stats(a) => (
                CommandKind::Stats,
                a.source,
                a.tolerances,
                a.count,
                a.seed,
                MatrixFormat::Json,
                None,
                false,
                None,
            ),
        };
        if count == 0 {
            return Err(Error::InvalidArgument("--count must be at least 1".into()));
        }
        Ok(Self {
            command,
            form: form_source(source)?,
            count,
            seed,
            format,
            out,
            verify,
            matrix,
            tolerances: tolerances(&tol)?,
        })
    }
}

fn form_source(a: FormArgs) -> Result<FormSource> {
    match (a.form, a.file) {
        (Some(form), None) => Ok(FormSource::Named {
            form,
            n: a.n,
            p: a.p,
            q: a.q,
        }),
        (None, Some(path)) => Ok(FormSource::File(path)),
        _ => Err(Error::InvalidArgument(
            "exactly one of --form and --file is required".into(),
        )),
    }
}

fn tolerances(a: &ToleranceArgs) -> Result<Tolerances> {
    let mut t = Tolerances::default();
    for (value, slot, name) in [
        (a.gen_tol, &mut t.gen_tol, "gen-tol"),
        (a.sym_tol, &mut t.sym_tol, "sym-tol"),
        (a.inv_tol, &mut t.inv_tol, "inv-tol"),
        (a.cluster_tol, &mut t.cluster_tol, "cluster-tol"),
        (a.det_tol, &mut t.det_tol, "det-tol"),
    ] {
        if let Some(v) = value {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "--{name} must be a non-negative number"
                )));
            }
            *slot = v;
        }
    }
    Ok(t)
}

fn need(value: Option<usize>, flag: &str, form: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidArgument(format!("--form {form} needs --{flag}")))
}

/// Reads or builds the form named by the configuration and validates it.
pub fn load_form(config: &RunConfig) -> Result<BilinearForm> {
    let matrix = match &config.form {
        FormSource::File(path) => read_matrix_file(path)?,
        FormSource::Named { form, n, p, q } => match form {
            NamedForm::Identity => {
                let n = need(*n, "n", "identity")?;
                if n == 0 {
                    return Err(Error::InvalidDimension("--n must be at least 1".into()));
                }
                RealMatrix::identity(n)
            }
            NamedForm::Symplectic => {
                let n = need(*n, "n", "symplectic")?;
                if n == 0 {
                    return Err(Error::InvalidDimension("--n must be at least 1".into()));
                }
                symplectic_matrix(n)
            }
            NamedForm::Indefinite => {
                let (p, q) = (need(*p, "p", "indefinite")?, need(*q, "q", "indefinite")?);
                if p + q == 0 {
                    return Err(Error::InvalidDimension(
                        "--p plus --q must be at least 1".into(),
                    ));
                }
                RealMatrix::from_diag(
                    &(0..p + q)
                        .map(|i| if i < p { 1.0 } else { -1.0 })
                        .collect::<Vec<_>>(),
                )
            }
            NamedForm::Minkowski => RealMatrix::from_diag(&[1.0, -1.0, -1.0, -1.0]),
        },
    };
    validate_form_with(&matrix, &config.tolerances)
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Singular(_) => EXIT_SINGULAR,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let outcome = RunConfig::from_cli(cli).and_then(|config| match config.command {
        CommandKind::Gen => cmd_gen(&config, stdout, stderr),
        CommandKind::Verify => cmd_verify(&config, stdout, stderr),
        CommandKind::Stats => cmd_stats(&config, stdout, stderr),
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "formstab: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Serialize)]
struct JsonSample<'a> {
    index: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
}

#[derive(Serialize)]
struct JsonHeader {
    form_kind: FormKind,
    dim: usize,
    seed: u64,
    count: usize,
}

/// `gen`: writes `count` samples, sample `i` from child stream `i` of `--seed`.
///
/// With `--out DIR` the files are `sample_NNNN.<ext>` (plus `sample_NNNN.cert.json`
/// under `--verify`). On standard output, Matrix Market documents carry the
/// certificate as a `% certificate` comment, JSON output is a single document
/// and CSV certificates go to standard error.
pub fn cmd_gen(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let form = load_form(config)?;
    let tol = &config.tolerances;
    let samples = generate_batch(&form, config.seed, config.count, tol)?;
    let certificates = if config.verify {
        samples
            .iter()
            .map(|s| certify_sample(s, &form, tol).map(Some))
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![None; samples.len()]
    };
    let cert_json = |c: &Certificate| serde_json::to_string(c).expect("certificate serializes");

    match &config.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            for (i, (s, cert)) in samples.iter().zip(&certificates).enumerate() {
                let path = dir.join(format!("sample_{i:04}.{}", config.format.extension()));
                let mut buf = Vec::new();
                write_matrix_with_comments(
                    &mut buf,
                    &s.a,
                    config.format,
                    &[sample_comment(i, s.seed)],
                )?;
                fs::write(&path, buf).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                if let Some(c) = cert {
                    let path = dir.join(format!("sample_{i:04}.cert.json"));
                    fs::write(&path, cert_json(c) + "\n")
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                }
            }
            writeln!(
                stderr,
                "wrote {} samples to {}",
                samples.len(),
                dir.display()
            )?;
        }
        None => match config.format {
            MatrixFormat::Json => {
                let header = JsonHeader {
                    form_kind: form.kind(),
                    dim: form.dim(),
                    seed: config.seed,
                    count: samples.len(),
                };
                let mut text = serde_json::to_string(&header).expect("header serializes");
                text.pop();
                text.push_str(", \"samples\": [");
                for (i, (s, cert)) in samples.iter().zip(&certificates).enumerate() {
                    let meta = JsonSample {
                        index: i,
                        seed: s.seed,
                        certificate: cert.as_ref(),
                    };
                    let mut entry = serde_json::to_string(&meta).expect("sample serializes");
                    entry.pop();
                    if i > 0 {
                        text.push_str(", ");
                    }
                    text.push_str(&entry);
                    text.push_str(", \"matrix\": ");
                    text.push_str(&matrix_to_json(&s.a));
                    text.push('}');
                }
                text.push_str("]}");
                writeln!(stdout, "{text}")?;
            }
            MatrixFormat::Mm => {
                for (i, (s, cert)) in samples.iter().zip(&certificates).enumerate() {
                    let mut comments = vec![sample_comment(i, s.seed)];
                    if let Some(c) = cert {
                        comments.push(format!("certificate {}", cert_json(c)));
                    }
                    write_matrix_with_comments(stdout, &s.a, MatrixFormat::Mm, &comments)?;
                }
            }
            MatrixFormat::Csv => {
                for (i, (s, cert)) in samples.iter().zip(&certificates).enumerate() {
                    if i > 0 {
                        writeln!(stdout)?;
                    }
                    write_matrix(stdout, &s.a, MatrixFormat::Csv)?;
                    if let Some(c) = cert {
                        writeln!(stderr, "{}", cert_json(c))?;
                    }
                }
            }
        },
    }

    let failed: Vec<usize> = certificates
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_ref().is_some_and(|c| !c.passed))
        .map(|(i, _)| i)
        .collect();
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(
            stderr,
            "formstab: certificate failed for samples {failed:?}"
        )?;
        Ok(EXIT_CERTIFICATE)
    }
}

fn sample_comment(index: usize, seed: u64) -> String {
    format!("formstab sample {index} stream seed {seed}")
}

/// `verify`: prints the certificate of `--matrix` against the form; exit 0 iff it passes.
pub fn cmd_verify(
    config: &RunConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let form = load_form(config)?;
    let path = config
        .matrix
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("verify needs --matrix".into()))?;
    let a = read_matrix_file(path)?;
    let cert = certify_with(&a, &form, &config.tolerances)?;
    writeln!(
        stdout,
        "{}",
        serde_json::to_string(&cert).expect("certificate serializes")
    )?;
    if cert.passed {
        Ok(EXIT_OK)
    } else {
        writeln!(
            stderr,
            "formstab: certificate failed (residual_s {}, residual_orth {}, det {})",
            format_f64(cert.residual_s),
            format_f64(cert.residual_orth),
            format_f64(cert.det_value)
        )?;
        Ok(EXIT_CERTIFICATE)
    }
}

/// `stats`: prints the moment summary of `count` generated samples.
pub fn cmd_stats(
    config: &RunConfig,
    stdout: &mut dyn Write,
    _stderr: &mut dyn Write,
) -> Result<i32> {
    let form = load_form(config)?;
    let samples = generate_batch(&form, config.seed, config.count, &config.tolerances)?;
    let matrices: Vec<RealMatrix> = samples.into_iter().map(|s| s.a).collect();
    let summary = moment_stats(&matrices)?;
    writeln!(
        stdout,
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    )?;
    Ok(EXIT_OK)
}
