//! `polypath` command line. [`run`] takes the argument vector and two
//! writers so tests can drive it without spawning a process.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use polypath::excluded::witness_report;
use polypath::{
    find_excluded_minor, generate_type_instance, is_boolean, parse_document, recognize_lattice_path,
    recover_supports, region_names, render_diagram, verify_theorem, write_rank_table, write_support_family,
    Document, Error, Interval, Subset, SupportFamily, TypeTag,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_VAR: &str = "POLYPATH_THREADS";

#[derive(Parser, Debug)]
#[command(name = "polypath", version, about = "Integer polymatroid toolkit: Boolean and lattice path recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the polymatroid axioms
    Check { file: PathBuf },
    /// Test whether a polymatroid is Boolean
    Boolean { file: PathBuf },
    /// Print the support family of a Boolean polymatroid
    Supports { file: PathBuf },
    /// Rank of a subset
    Rank {
        file: PathBuf,
        /// Comma-separated element names; empty for the empty set
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Delete and contract elements
    Minor {
        file: PathBuf,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Lattice path certificate
    Lp { file: PathBuf },
    /// Search for an excluded minor
    Witness { file: PathBuf },
    /// Draw the lattice path diagram
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance of an excluded-minor type
    Gen {
        /// cycle<N>, T1..T4 or F1..F4
        #[arg(long = "type")]
        tag: String,
        /// Region sizes, either positional (`1,1,0,2`) or named (`T=1,Z=2`)
        #[arg(long, default_value = "")]
        sizes: String,
    },
    /// Check the excluded-minor characterization on all small families
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

/// A failed invocation: the exit code and a message for the error stream.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NotAPolymatroid | Error::NotBoolean => EXIT_FAILS,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = thread_pool().and_then(|pool| dispatch(cli.command, pool.as_ref(), out, err));
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "polypath: {message}");
            code
        }
    }
}

fn thread_pool() -> std::result::Result<Option<rayon::ThreadPool>, Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(None);
    };
    let threads: usize = match value.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => return Err(Failure(EXIT_USAGE, format!("{THREADS_VAR} must be a positive integer, got {value:?}"))),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| Failure(EXIT_USAGE, e.to_string()))
}

fn load(path: &Path) -> std::result::Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

/// The support family of a document; rank tables must be Boolean.
fn family(doc: Document) -> std::result::Result<SupportFamily, Failure> {
    match doc {
        Document::Supports(f) => Ok(f),
        Document::Rank(t) => Ok(recover_supports(&t)?.to_family()?),
    }
}

fn subset(doc: &Document, list: &str) -> std::result::Result<Subset, Failure> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(doc.ground().subset(&names)?)
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure(EXIT_USAGE, format!("write failed: {e}")))
}

/// Runs `f` inside the configured pool, if any.
fn compute<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn dispatch(command: Command, pool: Option<&rayon::ThreadPool>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file } => {
            let table = load(&file)?.rank_table();
            let report = table.check_axioms();
            let mut text = format!("{report}\n");
            if let Some(v) = &report.first_violation {
                text.push_str(&format!("violation: {}\n", v.describe(table.ground())));
            }
            emit(out, &text)?;
            Ok(if report.holds() { EXIT_OK } else { EXIT_FAILS })
        }
        Command::Boolean { file } => {
            let table = load(&file)?.rank_table();
            match is_boolean(&table) {
                Ok(None) => {
                    emit(out, "boolean\n")?;
                    Ok(EXIT_OK)
                }
                Ok(Some(d)) => {
                    let set = table.ground().format_subset(d.set);
                    emit(out, &format!("not-boolean deficit X={set} value={}\n", d.value))?;
                    Ok(EXIT_FAILS)
                }
                Err(Error::NotAPolymatroid) => {
                    emit(out, "not-polymatroid\n")?;
                    Ok(EXIT_FAILS)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Supports { file } => {
            let f = family(load(&file)?)?;
            emit(out, &write_support_family(&f))?;
            Ok(EXIT_OK)
        }
        Command::Rank { file, set } => {
            let doc = load(&file)?;
            let s = subset(&doc, &set)?;
            let value = match &doc {
                Document::Rank(t) => t.rank(s)?,
                Document::Supports(f) => {
                    let touched = s.positions().fold(polypath::IndexSet::EMPTY, |acc, p| acc | f.support(p));
                    touched.len() as i64
                }
            };
            emit(out, &format!("{value}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Minor { file, delete, contract } => {
            let doc = load(&file)?;
            let d = subset(&doc, &delete)?;
            let c = subset(&doc, &contract)?;
            let text = match &doc {
                Document::Rank(t) => write_rank_table(&t.minor(d, c)?),
                Document::Supports(f) => write_support_family(&f.minor(d, c)?),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Lp { file } => {
            let f = match family(load(&file)?) {
                Ok(f) => f,
                Err(Failure(EXIT_FAILS, message)) => {
                    let _ = writeln!(err, "polypath: {message}");
                    emit(out, "not-lattice-path\n")?;
                    return Ok(EXIT_FAILS);
                }
                Err(f) => return Err(f),
            };
            match recognize_lattice_path(&f) {
                Some(cert) => {
                    emit(out, &certificate_text(&f, &cert))?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(out, "not-lattice-path\n")?;
                    Ok(EXIT_FAILS)
                }
            }
        }
        Command::Witness { file } => {
            let f = match family(load(&file)?) {
                Ok(f) => f,
                Err(Failure(EXIT_FAILS, message)) => {
                    let _ = writeln!(err, "polypath: {message}");
                    emit(out, "status: not-boolean\n")?;
                    return Ok(EXIT_FAILS);
                }
                Err(f) => return Err(f),
            };
            let witness = compute(pool, || find_excluded_minor(&f))?;
            emit(out, &witness_report(&f, witness.as_ref()))?;
            Ok(if witness.is_none() { EXIT_OK } else { EXIT_FAILS })
        }
        Command::Render { file, format, out: path } => {
            let f = family(load(&file)?)?;
            let Some(cert) = recognize_lattice_path(&f) else {
                return Err(Failure(EXIT_FAILS, "not a lattice path polymatroid".into()));
            };
            let diagram = render_diagram(&f, &cert).map_err(|e| Failure(EXIT_FAILS, e.to_string()))?;
            let text = match format {
                Format::Ascii => diagram.to_ascii(),
                Format::Svg => diagram.to_svg(),
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Gen { tag, sizes } => {
            let tag: TypeTag = tag.parse()?;
            let sizes = parse_sizes(tag, &sizes)?;
            emit(out, &write_support_family(&generate_type_instance(tag, &sizes)?))?;
            Ok(EXIT_OK)
        }
        Command::Verify { n, k } => {
            let report = compute(pool, || verify_theorem(n, k))?;
            emit(out, &report.to_string())?;
            let _ = writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
            Ok(if report.confirmed() { EXIT_OK } else { EXIT_FAILS })
        }
    }
}

fn certificate_text(f: &SupportFamily, cert: &polypath::LatticePathCertificate) -> String {
    let g = f.ground();
    let names: Vec<&str> = cert.element_order.iter().map(|&e| g.name(e)).collect();
    let indices: Vec<String> = cert.universe_order.iter().map(|i| i.to_string()).collect();
    let mut text = format!(
        "lattice-path\nelement-order: {}\nuniverse-order: {}\n",
        names.join(" "),
        indices.join(" ")
    );
    for (name, interval) in names.iter().zip(&cert.intervals) {
        match interval {
            Interval::Loop => text.push_str(&format!("interval {name}: loop\n")),
            Interval::Span(a, b) => text.push_str(&format!("interval {name}: {a} {b}\n")),
        }
    }
    text
}

/// `1,0,2` assigns sizes in region order; `T=1,Z=2` by name.
fn parse_sizes(tag: TypeTag, csv: &str) -> std::result::Result<BTreeMap<String, u32>, Failure> {
    let names = region_names(tag)?;
    let bad = |m: String| Failure(EXIT_USAGE, format!("invalid region sizes: {m}"));
    let mut sizes = BTreeMap::new();
    let items: Vec<&str> = csv.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if items.len() > names.len() {
        return Err(bad(format!("{tag} has {} regions, got {}", names.len(), items.len())));
    }
    for (i, item) in items.iter().enumerate() {
        let (name, value) = match item.split_once('=') {
            Some((name, value)) => (name.trim().to_string(), value.trim()),
            None => (names[i].clone(), *item),
        };
        let value: u32 = value.parse().map_err(|_| bad(format!("{value:?} is not a size")))?;
        if sizes.insert(name.clone(), value).is_some() {
            return Err(bad(format!("region {name} given twice")));
        }
    }
    Ok(sizes)
}
