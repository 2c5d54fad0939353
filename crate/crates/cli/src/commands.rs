use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use gorenstein::artinian::report as artinian_report;
use gorenstein::catalog::{catalog, find};
use gorenstein::constructions::{anglo_american, anglo_hellenic, british, gfat, italian, japanese, scandinavian};
use gorenstein::families::{classify_fiber, family, family_fiber};
use gorenstein::geometry::{affine_chart, degree, hilbert_function, is_ag, project_from_point, scheme_report, stratum};
use gorenstein::io::{IdealDoc, MatrixDoc};
use gorenstein::{classify, parse_poly, AlgebraLabel, Error, FieldSpec, Ideal, PolyRing, Polynomial, Ring};
use serde_json::json;

use crate::checks::{run_checks, Status};
use crate::dsl::run_script;
use crate::report::ReportDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

/// Input problems are usage errors; everything else failed while computing.
impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::InvalidRing(_)
            | Error::UnknownVariable(_)
            | Error::UnsupportedCharacteristic(_)
            | Error::RingMismatch => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "gorenstein", version, about = "Zero-dimensional arithmetically Gorenstein schemes and Artinian Gorenstein algebras")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct IdealArg {
    /// Ideal JSON file: {"ring": {...}, "generators": [...]}.
    #[arg(long)]
    pub ideal: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb(IdealArg),
    /// Hilbert function of a homogeneous ideal.
    Hfun {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 6)]
        up_to: u32,
    },
    /// Label of a zero-dimensional algebra; homogeneous positive-dimensional ideals are read on an affine chart.
    Classify(IdealArg),
    /// Tangent space dimension of the Hilbert scheme at an aG scheme.
    Tangent(IdealArg),
    /// Artinian-reduction Gorenstein test.
    IsAg(IdealArg),
    /// Span-codimension stratum.
    Stratum(IdealArg),
    /// Projection from a reduced point of the scheme.
    Project {
        #[command(flatten)]
        input: IdealArg,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    #[command(subcommand)]
    Construct(Construct),
    /// Fiber of a named one-parameter family.
    FamilyFiber {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "Fp(65537)")]
        field: String,
    },
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Run a script.
    Run { script: PathBuf },
    /// Run the named reproduction checks.
    VerifyPaper {
        /// Only checks whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value = "Fp(65537)")]
        field: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// The fat point G_d in P^{d-2}.
    Gfat {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "QQ")]
        field: String,
    },
    /// 2x2 minors of a 3x3 matrix of linear forms.
    Scandinavian {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Face minors of a 2x2x2 array of linear forms.
    AngloAmerican {
        #[arg(long)]
        array: PathBuf,
    },
    /// Order-4 pfaffians from antisymmetric A, symmetric S and a scalar q.
    British {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        s: PathBuf,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
    },
    /// Plane conic and cubic through a Veronese embedding.
    Japanese {
        #[arg(long, allow_hyphen_values = true)]
        conic: String,
        #[arg(long, allow_hyphen_values = true)]
        cubic: String,
        #[arg(long, default_value = "QQ")]
        field: String,
    },
    /// Degree-5 scheme in k[x0..x3] plus a linear form in k[x0..x4].
    Italian {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Unprojection of a 5x5 antisymmetric matrix, with s substituted.
    AngloHellenic {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    List,
    Show {
        label: String,
        #[arg(long, default_value = "QQ")]
        field: String,
    },
}

/// What a command produced: the text form and the JSON report carry the same values.
pub struct Output {
    pub text: String,
    pub doc: ReportDocument,
    pub exit: i32,
}

pub fn parse_field(text: &str) -> CliResult<FieldSpec> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(FieldSpec::rationals());
    }
    let inner = t.strip_prefix("Fp(").and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let p: u64 = inner.parse().map_err(|_| CliError::Usage(format!("unknown field '{text}' (expected QQ or Fp(p))")))?;
    Ok(FieldSpec::prime(p)?)
}

fn read(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn json_doc<T: serde::de::DeserializeOwned>(path: &Path, bytes: &[u8]) -> CliResult<T> {
    serde_json::from_slice(bytes).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> CliResult<(Ideal, Vec<u8>)> {
    let bytes = read(path)?;
    let doc: IdealDoc = json_doc(path, &bytes)?;
    Ok((doc.to_ideal()?, bytes))
}

fn load_matrix(path: &Path) -> CliResult<(MatrixDoc, Vec<u8>)> {
    let bytes = read(path)?;
    Ok((json_doc(path, &bytes)?, bytes))
}

fn lines(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n")
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn ideal_output(command: &str, inputs: &[&[u8]], ideal: &Ideal) -> Output {
    let mut doc = ReportDocument::new(command, inputs);
    doc.result = Some(json!({ "ideal": IdealDoc::from_ideal(ideal) }));
    Output { text: lines(ideal.gens()), doc, exit: EXIT_OK }
}

fn chart_if_projective(x: &Ideal) -> CliResult<Ideal> {
    if x.is_homogeneous() && !x.is_zero_dimensional() {
        Ok(affine_chart(x)?)
    } else {
        Ok(x.clone())
    }
}

fn scalar_list(field: FieldSpec, text: &str) -> CliResult<Vec<gorenstein::Scalar>> {
    text.split(',').map(|c| Ok(field.parse_scalar(c.trim())?)).collect()
}

fn p4(field: FieldSpec) -> CliResult<Ring> {
    Ok(PolyRing::indexed(field, "x", 0, 5)?)
}

pub fn execute(cmd: &Command) -> CliResult<Output> {
    match cmd {
        Command::Gb(a) => {
            let (x, bytes) = load_ideal(&a.ideal)?;
            let gb = Ideal::new(x.ring(), x.gb().elements().to_vec())?;
            Ok(ideal_output("gb", &[&bytes], &gb))
        }
        Command::Hfun { input, up_to } => {
            let (x, bytes) = load_ideal(&input.ideal)?;
            let h = hilbert_function(&x, *up_to)?;
            let mut doc = ReportDocument::new("hfun", &[&bytes, &up_to.to_le_bytes()]);
            doc.result = Some(json!({ "hilbert_fn": h }));
            Ok(Output { text: join(&h), doc, exit: EXIT_OK })
        }
        Command::Classify(a) => {
            let (x, bytes) = load_ideal(&a.ideal)?;
            let algebra = chart_if_projective(&x)?;
            let l = classify(&algebra)?;
            let mut doc = ReportDocument::new("classify", &[&bytes]);
            doc.artinian = artinian_report(&algebra).ok();
            doc.result = Some(json!({ "label": l }));
            Ok(Output { text: l.to_string(), doc, exit: EXIT_OK })
        }
        Command::Tangent(a) => {
            let (x, bytes) = load_ideal(&a.ideal)?;
            let rep = scheme_report(&x, true)?;
            let t = rep.tangent_dim.ok_or_else(|| CliError::Compute("scheme is not arithmetically Gorenstein".into()))?;
            let mut doc = ReportDocument::new("tangent", &[&bytes]);
            doc.result = Some(json!({ "tangent_dim": t }));
            doc.scheme = Some(rep);
            Ok(Output { text: t.to_string(), doc, exit: EXIT_OK })
        }
        Command::IsAg(a) => {
            let (x, bytes) = load_ideal(&a.ideal)?;
            let rep = is_ag(&x)?;
            let text = format!("aG: {}\ndelta h: {}\nsymmetric: {}\nsocle dim: {}", rep.ag, join(&rep.delta_h), rep.symmetric, rep.socle_dim);
            let mut doc = ReportDocument::new("is-ag", &[&bytes]);
            doc.result = Some(serde_json::to_value(&rep).expect("report serializes"));
            Ok(Output { text, doc, exit: EXIT_OK })
        }
        Command::Stratum(a) => {
            let (x, bytes) = load_ideal(&a.ideal)?;
            let st = stratum(&x, degree(&x)?, false)?;
            let mut doc = ReportDocument::new("stratum", &[&bytes]);
            doc.result = Some(serde_json::to_value(&st).expect("stratum serializes"));
            Ok(Output { text: st.label.clone(), doc, exit: EXIT_OK })
        }
        Command::Project { input, point } => {
            let (x, bytes) = load_ideal(&input.ideal)?;
            let p = scalar_list(x.ring().field(), point)?;
            Ok(ideal_output("project", &[&bytes, point.as_bytes()], &project_from_point(&x, &p)?))
        }
        Command::Construct(c) => construct(c),
        Command::FamilyFiber { family: name, b, field } => {
            let k = parse_field(field)?;
            let f = family(k, name)?;
            let b0 = k.parse_scalar(b)?;
            let x = family_fiber(&f, &b0)?;
            let l = classify_fiber(&f, &b0)?;
            let mut out = ideal_output("family-fiber", &[name.as_bytes(), b.as_bytes(), field.as_bytes()], &x);
            out.doc.result = Some(json!({ "ideal": IdealDoc::from_ideal(&x), "label": l }));
            out.text = format!("{l}\n{}", out.text);
            Ok(out)
        }
        Command::Catalog(CatalogCmd::List) => {
            let entries = catalog(FieldSpec::rationals())?;
            let text = entries
                .iter()
                .map(|e| format!("{}\t{}", e.label, if e.projective_model.is_some() { "projective model" } else { "-" }))
                .collect::<Vec<_>>()
                .join("\n");
            let mut doc = ReportDocument::new("catalog list", &[]);
            doc.result = Some(json!({
                "entries": entries.iter().map(|e| json!({ "label": e.label, "projective_model": e.projective_model.is_some() })).collect::<Vec<_>>()
            }));
            Ok(Output { text, doc, exit: EXIT_OK })
        }
        Command::Catalog(CatalogCmd::Show { label, field }) => {
            let k = parse_field(field)?;
            let l: AlgebraLabel = label.parse()?;
            let entries = catalog(k)?;
            let e = find(&entries, &l).ok_or_else(|| CliError::Usage(format!("no catalog entry for {l}")))?;
            let mut text = format!("label: {}\naffine model:\n{}", e.label, lines(e.affine_model.gens()));
            if let Some(p) = &e.projective_model {
                text += &format!("\nprojective model:\n{}", lines(p.gens()));
            }
            for r in &e.expected {
                text += &format!("\nsummand: dim {}, h {}, socle {}", r.dim, join(&r.hilbert_fn), r.socle_dim);
            }
            let mut doc = ReportDocument::new("catalog show", &[label.as_bytes(), field.as_bytes()]);
            doc.result = Some(json!({
                "label": e.label,
                "affine_model": IdealDoc::from_ideal(&e.affine_model),
                "projective_model": e.projective_model.as_ref().map(IdealDoc::from_ideal),
                "expected": e.expected,
            }));
            Ok(Output { text, doc, exit: EXIT_OK })
        }
        Command::Run { script } => {
            let bytes = read(script)?;
            let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Usage("script is not UTF-8".into()))?;
            let out = run_script(&text).map_err(|e| {
                let msg = format!("{}: {e}", script.display());
                if e.runtime {
                    CliError::Compute(msg)
                } else {
                    CliError::Usage(msg)
                }
            })?;
            let mut doc = ReportDocument::new("run", &[&bytes]);
            doc.result = Some(json!({ "output": out }));
            Ok(Output { text: out.join("\n"), doc, exit: EXIT_OK })
        }
        Command::VerifyPaper { filter, field } => {
            let k = parse_field(field)?;
            let verdicts = run_checks(k, filter.as_deref());
            if verdicts.is_empty() {
                return Err(CliError::Usage(format!("no check matches '{}'", filter.as_deref().unwrap_or(""))));
            }
            let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
            let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
            let mut text: Vec<String> =
                verdicts.iter().map(|v| format!("{} {} [criterion {}]: {}", v.status.word(), v.name, v.criterion, v.detail)).collect();
            text.push(format!("{pass} passed, {fail} failed, {skip} skipped"));
            let inputs = [field.as_bytes(), filter.as_deref().unwrap_or("").as_bytes()];
            let mut doc = ReportDocument::new("verify-paper", &inputs);
            doc.result = Some(json!({ "field": k.name(), "passed": pass, "failed": fail, "skipped": skip }));
            doc.verdicts = verdicts;
            Ok(Output { text: text.join("\n"), doc, exit: if fail > 0 { EXIT_CHECK_FAILED } else { EXIT_OK } })
        }
    }
}

fn construct(c: &Construct) -> CliResult<Output> {
    match c {
        Construct::Gfat { d, field } => {
            if *d < 4 {
                return Err(CliError::Usage(format!("--d must be at least 4, got {d}")));
            }
            let k = parse_field(field)?;
            Ok(ideal_output("construct gfat", &[&d.to_le_bytes(), field.as_bytes()], &gfat(k, *d)?))
        }
        Construct::Scandinavian { matrix } => {
            let (doc, bytes) = load_matrix(matrix)?;
            let m = doc.matrix()?;
            if m.len() != 3 {
                return Err(CliError::Usage(format!("expected a 3x3 matrix, got {0}x{0}", m.len())));
            }
            Ok(ideal_output("construct scandinavian", &[&bytes], &scandinavian(&m)?.ideal))
        }
        Construct::AngloAmerican { array } => {
            let (doc, bytes) = load_matrix(array)?;
            Ok(ideal_output("construct anglo-american", &[&bytes], &anglo_american(&doc.cube()?)?.ideal))
        }
        Construct::British { a, s, q } => {
            let (ad, abytes) = load_matrix(a)?;
            let (sd, sbytes) = load_matrix(s)?;
            let k = ad.ring()?.field();
            let q0 = k.parse_scalar(q)?;
            let out = british(&ad.matrix()?, &sd.matrix()?, &q0)?;
            Ok(ideal_output("construct british", &[&abytes, &sbytes, q.as_bytes()], &out.ideal))
        }
        Construct::Japanese { conic, cubic, field } => {
            let k = parse_field(field)?;
            let plane = PolyRing::indexed(k, "x", 0, 3)?;
            let x = japanese(&parse_poly(&plane, conic)?, &parse_poly(&plane, cubic)?)?;
            Ok(ideal_output("construct japanese", &[conic.as_bytes(), cubic.as_bytes(), field.as_bytes()], &x))
        }
        Construct::Italian { ideal, g } => {
            let (i5, bytes) = load_ideal(ideal)?;
            let r = p4(i5.ring().field())?;
            let out = italian(&i5, &parse_poly(&r, g)?)?;
            let mut o = ideal_output("construct italian", &[&bytes, g.as_bytes()], &out.ideal);
            o.doc.result = Some(json!({ "ideal": IdealDoc::from_ideal(&out.ideal), "f": out.f.to_string() }));
            o.text = format!("{}\nf = {}", o.text, out.f);
            Ok(o)
        }
        Construct::AngloHellenic { matrix, s } => {
            let (doc, bytes) = load_matrix(matrix)?;
            let ring = doc.ring()?;
            let x = anglo_hellenic(&doc.matrix()?, &parse_poly(&ring, s)?)?;
            Ok(ideal_output("construct anglo-hellenic", &[&bytes, s.as_bytes()], &x))
        }
    }
}

/// Parses `args` (without the program name), runs the command and writes to `out`/`err`. Returns the exit code.
pub fn run_command<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("gorenstein")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let body = if cli.json { serde_json::to_string_pretty(&o.doc).expect("report serializes") } else { o.text };
            let _ = writeln!(out, "{body}");
            o.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
