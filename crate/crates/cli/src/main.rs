use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hom_poisson::io::{serialize_document, write_document, Document, JobDocument};
use hom_poisson::jobs::{gallery_documents, run_job, verify_document, ExitClass, JobOutput};
use hom_poisson::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hompoisson", version, about = "Exact checks and constructions for Hom-Poisson type algebras")]
struct Cli {
    /// Worker threads for identity scans; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct CheckFlags {
    /// Run a checker even when the kind tag does not match.
    #[arg(long)]
    force: bool,
    /// Report every violation instead of the first.
    #[arg(long)]
    all_violations: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json_report: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check any document against the identities of its kind.
    Check {
        file: PathBuf,
        /// Check an algebra under another kind's checker (needs --force).
        #[arg(long = "as")]
        as_kind: Option<String>,
        #[command(flatten)]
        flags: CheckFlags,
    },
    /// Build a derived structure; outputs are verified before being written.
    Construct {
        construction: String,
        inputs: Vec<PathBuf>,
        /// Matrix parameter as JSON, e.g. '[[2,0],[0,4]]'.
        #[arg(long)]
        matrix: Option<String>,
        /// Formula for the cocycle construction: eq45 or proofline.
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Dual of a representation.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Yau twist of an untwisted algebra by a multiplicative endomorphism.
    Twist {
        file: PathBuf,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Undo a Yau twist with invertible twist map.
    Untwist {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the deformation equations up to the given order.
    DeformCheck {
        file: PathBuf,
        #[arg(long)]
        order: Option<u64>,
        #[command(flatten)]
        flags: CheckFlags,
    },
    /// Semi-classical limit of a deformation of order at least 2.
    Limit {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate O-operators with integer entries in [-bound, bound].
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        bound: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the built-in gallery, one file per fixture.
    Fixtures {
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a job document.
    Run {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json_report: bool,
    },
}

fn path_string(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

fn with_flags(mut job: JobDocument, flags: &CheckFlags, parallel: bool) -> JobDocument {
    for (key, on) in [("force", flags.force), ("all_violations", flags.all_violations), ("parallel", parallel)] {
        if on {
            job = job.with(key, true);
        }
    }
    job
}

fn matrix_param(job: JobDocument, text: Option<&str>) -> Result<JobDocument> {
    match text {
        None => Ok(job),
        Some(t) => {
            let v: serde_json::Value =
                serde_json::from_str(t).map_err(|e| Error::Parse { context: "--matrix".into(), message: e.to_string() })?;
            Ok(job.with("matrix", v))
        }
    }
}

/// Writes produced documents to `output` (an array when there are several)
/// or prints them.
fn emit(documents: &[Document], output: Option<&Path>) -> Result<()> {
    if documents.is_empty() {
        return Ok(());
    }
    let text = if documents.len() == 1 {
        serialize_document(&documents[0])?
    } else {
        let values = documents
            .iter()
            .map(|d| serde_json::to_value(d).map_err(|e| Error::Parse { context: "serialize".into(), message: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        let mut s = serde_json::to_string_pretty(&values)
            .map_err(|e| Error::Parse { context: "serialize".into(), message: e.to_string() })?;
        s.push('\n');
        s
    };
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report(out: &JobOutput, json_report: bool) {
    if json_report {
        println!("{}", serde_json::to_string_pretty(&out.report_json()).expect("json"));
    } else {
        print!("{}", out.text);
    }
}

fn execute(cli: Cli) -> Result<ExitClass> {
    let parallel = cli.jobs > 1;
    let base = PathBuf::from(".");
    let (job, output, json_report) = match cli.command {
        Command::Check { file, as_kind, flags } => {
            let mut job = with_flags(JobDocument::new("check", vec![path_string(&file)]), &flags, parallel);
            if let Some(k) = as_kind {
                job = job.with("as", k);
            }
            (job, None, flags.json_report)
        }
        Command::Construct { construction, inputs, matrix, variant, output } => {
            let mut job = JobDocument::new("construct", inputs.iter().map(|p| path_string(p)).collect())
                .with("construction", construction);
            job = matrix_param(job, matrix.as_deref())?;
            if let Some(v) = variant {
                job = job.with("variant", v);
            }
            (job, output, false)
        }
        Command::Dualize { file, output } => (JobDocument::new("dualize", vec![path_string(&file)]), output, false),
        Command::Twist { file, matrix, output } => {
            (matrix_param(JobDocument::new("twist", vec![path_string(&file)]), Some(&matrix))?, output, false)
        }
        Command::Untwist { file, output } => (JobDocument::new("untwist", vec![path_string(&file)]), output, false),
        Command::DeformCheck { file, order, flags } => {
            let mut job = with_flags(JobDocument::new("deform-check", vec![path_string(&file)]), &flags, parallel);
            if let Some(n) = order {
                job = job.with("order", n);
            }
            (job, None, flags.json_report)
        }
        Command::Limit { file, output } => (JobDocument::new("limit", vec![path_string(&file)]), output, false),
        Command::Search { file, bound, output } => {
            let job = JobDocument::new("search", vec![path_string(&file)]).with("bound", bound);
            (with_flags(job, &CheckFlags::default(), parallel), output, false)
        }
        Command::Fixtures { output } => return write_gallery(output.as_deref()),
        Command::Run { file, output, json_report } => {
            let job = match hom_poisson::io::read_document(&file)? {
                Document::Job(j) => j,
                other => {
                    return Err(Error::Parse {
                        context: path_string(&file),
                        message: format!("expected a job document, found {:?}", other.tag()),
                    })
                }
            };
            let dir = file.parent().map(Path::to_path_buf).unwrap_or_else(|| base.clone());
            let job = if parallel { job.with("parallel", true) } else { job };
            let output = output.or_else(|| job.parameters.get("output").and_then(|v| v.as_str()).map(|s| dir.join(s)));
            let out = run_job(&job, &dir)?;
            report(&out, json_report);
            emit(&out.documents, output.as_deref())?;
            return Ok(out.exit);
        }
    };
    let out = run_job(&job, &base)?;
    report(&out, json_report);
    emit(&out.documents, output.as_deref())?;
    Ok(out.exit)
}

fn write_gallery(output: Option<&Path>) -> Result<ExitClass> {
    let docs = gallery_documents();
    match output {
        None => {
            for (name, doc) in &docs {
                let kind = match doc {
                    Document::Algebra(a) => a.kind.clone(),
                    other => other.tag().to_string(),
                };
                println!("{name}\t{kind}");
            }
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for (name, doc) in &docs {
                // negative controls are written as-is; everything else must pass
                let doc = match verify_document(doc) {
                    Ok(d) => d,
                    Err(Error::Precondition { .. }) => doc.clone(),
                    Err(e) => return Err(e),
                };
                write_document(&dir.join(format!("{name}.json")), &doc)?;
            }
            println!("wrote {} fixture(s) to {}", docs.len(), dir.display());
        }
    }
    Ok(ExitClass::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let result = pool.install(|| execute(cli));
    match result {
        Ok(class) => ExitCode::from(class.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Precondition { report, .. } = &e {
                eprint!("{report}");
            }
            ExitCode::from(e.exit_class().code() as u8)
        }
    }
}
