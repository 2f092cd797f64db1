//! Command line front end: detectors, partitioners, templates, the codec,
//! the verifier and the enumerator over graph6 or `bip` input.
//!
//! Exit codes: 0 success, 1 verification or class-membership failure
//! (details as JSON on stderr), 2 usage or parse error, 3 size cap.

pub mod gen;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use freepart::encoding::{self, Code};
use freepart::formats;
use freepart::matching;
use freepart::patterns::{self, PatternSpec};
use freepart::stars::{self, StarParams};
use freepart::verify;
use freepart::{BipartiteGraph, Error, Graph, LabelledPartition};

#[derive(Parser, Debug)]
#[command(name = "freepart", version, about = "Partitions of graphs excluding star forests and matchings")]
struct Cli {
    /// Read input from this file instead of stdin.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long = "out", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Search the input for an induced copy of a pattern.
    Detect {
        #[arg(long)]
        pattern: String,
        /// Largest accepted multiplicity times star size.
        #[arg(long, default_value_t = 24)]
        max_nk: usize,
    },
    /// Compute and verify a labelled partition.
    Partition {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Comma-separated integers; see the README for each mode.
        #[arg(long)]
        params: String,
    },
    /// Print the template of a bipartite graph.
    Template {
        #[arg(long, value_enum)]
        kind: TemplateKind,
        /// `n,m` refines a chain template; `n,k` or five values give the
        /// star class of a d-template.
        #[arg(long)]
        params: Option<String>,
        /// Refine a d-template to consecutive-bag form.
        #[arg(long)]
        refine: bool,
    },
    /// Check a partition file against the input graph.
    Verify {
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Encode a bipartite graph free of two twin s-stars.
    Encode {
        #[arg(long)]
        s: usize,
    },
    /// Decode the wire format back to a bipartite graph.
    Decode {
        #[arg(long)]
        s: usize,
    },
    /// Count labelled graphs avoiding a list of patterns.
    Enumerate {
        #[arg(long)]
        free: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a random member of a class.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        free: String,
        /// Vertex count of a general graph.
        #[arg(long, conflicts_with = "bip")]
        n: Option<usize>,
        /// Side sizes `a,b` of a bipartite graph.
        #[arg(long)]
        bip: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    BipMatching,
    Matching,
    BipStars,
    Main,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TemplateKind {
    Chain,
    D,
}

enum Input {
    General(Graph),
    Bipartite(BipartiteGraph),
}

impl Input {
    fn parse(text: &str) -> freepart::Result<Input> {
        let first = text.split_whitespace().next().unwrap_or("");
        if first == "bip" {
            formats::parse_bipartite(text).map(Input::Bipartite)
        } else {
            formats::parse_graph6(text.trim_end()).map(Input::General)
        }
    }

    fn flat(&self) -> Graph {
        match self {
            Input::General(g) => g.clone(),
            Input::Bipartite(b) => b.to_graph(),
        }
    }

    fn bipartite(self) -> Result<BipartiteGraph, Failure> {
        match self {
            Input::Bipartite(b) => Ok(b),
            Input::General(_) => Err(Failure::Usage("this command needs `bip` input".into())),
        }
    }

    fn general(self) -> Graph {
        match self {
            Input::General(g) => g,
            Input::Bipartite(b) => b.to_graph(),
        }
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
    /// Exit 1 with this JSON on stderr.
    Rejected(serde_json::Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn params(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad parameter list {s:?}")))
}

fn star_params(v: &[usize]) -> Result<StarParams, Failure> {
    Ok(match *v {
        [n, k] => StarParams::uniform(n, k)?,
        [n_up, n_lambda, m_up, m_lambda, k] => StarParams::new(n_up, n_lambda, m_up, m_lambda, k)?,
        _ => return Err(Failure::Usage("star parameters are `n,k` or `n_up,n_lambda,m_up,m_lambda,k`".into())),
    })
}

fn arity<const N: usize>(v: &[usize], what: &str) -> Result<[usize; N], Failure> {
    v.try_into()
        .map_err(|_| Failure::Usage(format!("{what} takes {N} parameters, got {}", v.len())))
}

/// Runs the verifier and refuses the partition unless it passes.
fn checked(g: &Graph, p: LabelledPartition, k: usize) -> Result<String, Failure> {
    let report = verify::verify_partition(g, &p, k)?;
    if !report.verdict {
        return Err(Failure::Rejected(serde_json::to_value(&report).expect("report serializes")));
    }
    Ok(p.to_json())
}

fn detect(input: Input, name: &str, max_nk: usize) -> Result<String, Failure> {
    let spec: PatternSpec = name.parse()?;
    if spec.n * spec.k > max_nk {
        return Err(Error::SizeLimit {
            what: "pattern n*k".into(),
            limit: max_nk,
            got: spec.n * spec.k,
        }
        .into());
    }
    let witness = match &input {
        Input::Bipartite(b) if spec.family.is_bipartite() => {
            patterns::find_induced_bipartite(b, &spec)?.map(|e| e.flat(b.a_size()))
        }
        _ => patterns::find_induced(&input.flat(), &spec).map(|e| e.map),
    };
    Ok(match witness {
        None => "free".into(),
        Some(w) => json!({ "pattern": spec.to_string(), "witness": w }).to_string(),
    })
}

fn partition(input: Input, mode: Mode, raw: &str) -> Result<String, Failure> {
    let v = params(raw)?;
    match mode {
        Mode::BipMatching => {
            let [n, m] = arity(&v, "bip-matching")?;
            let b = input.bipartite()?;
            let p = matching::bipartite_matching_partition(&b, n, m)?;
            checked(&b.to_graph(), p, 0)
        }
        Mode::Matching => {
            let [n] = arity(&v, "matching")?;
            let g = input.general();
            let p = matching::matching_partition(&g, n)?;
            checked(&g, p, 1)
        }
        Mode::BipStars => {
            let sp = star_params(&v)?;
            let b = input.bipartite()?;
            let p = stars::bipartite_star_partition(&b, &sp)?;
            checked(&b.to_graph(), p, sp.k)
        }
        Mode::Main => {
            let [n, k, l] = arity(&v, "main")?;
            let g = input.general();
            let p = stars::main_partition(&g, n, k, l)?;
            checked(&g, p, k)
        }
    }
}

fn template(input: Input, kind: TemplateKind, raw: Option<&str>, refine: bool) -> Result<String, Failure> {
    let b = input.bipartite()?;
    match kind {
        TemplateKind::Chain => {
            if refine {
                return Err(Failure::Usage("chain templates are refined with --params n,m".into()));
            }
            let t = match raw {
                None => matching::build_chain_template(&b),
                Some(r) => {
                    let [n, m] = arity(&params(r)?, "chain refinement")?;
                    matching::refine_to_nm_template(&b, n, m)?
                }
            };
            Ok(t.to_json())
        }
        TemplateKind::D => {
            let raw = raw.ok_or_else(|| Failure::Usage("d-templates need --params".into()))?;
            let sp = star_params(&params(raw)?)?;
            let mut t = stars::d_template_procedure(&b, &sp)?;
            if refine {
                t = stars::refine_consecutive(&b, &t)?;
            }
            Ok(t.to_json())
        }
    }
}

fn verify_file(input: Input, k: usize, path: &PathBuf) -> Result<String, Failure> {
    let p = LabelledPartition::from_json(&fs::read_to_string(path)?)?;
    let report = verify::verify_partition(&input.flat(), &p, k)?;
    if !report.verdict {
        return Err(Failure::Rejected(serde_json::to_value(&report).expect("report serializes")));
    }
    Ok(report.to_json())
}

fn decode(text: &str, s: usize) -> Result<String, Failure> {
    let code = Code::from_wire(text)?;
    if code.s != s {
        return Err(Failure::Usage(format!("code was written with s = {}, not {s}", code.s)));
    }
    Ok(formats::write_bipartite(&encoding::decode(&code)?))
}

fn enumerate(free: &str, n: usize, jobs: Option<usize>) -> Result<String, Failure> {
    let specs = patterns::parse_spec_list(free)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(pool.install(|| freepart::enumerate::speed_csv(&specs, n))?)
}

fn generate(seed: u64, free: &str, n: Option<usize>, bip: Option<&str>) -> Result<String, Failure> {
    let specs = patterns::parse_spec_list(free)?;
    let mut r = gen::rng(seed);
    match (n, bip) {
        (Some(n), None) => {
            if let Some(s) = specs.iter().find(|s| s.family.is_bipartite()) {
                return Err(Failure::Usage(format!("{s} needs --bip")));
            }
            Ok(formats::write_graph6(&gen::random_member(&mut r, n, &specs)) + "\n")
        }
        (None, Some(sizes)) => {
            let [a, b] = arity(&params(sizes)?, "--bip")?;
            Ok(formats::write_bipartite(&gen::random_bip_member(&mut r, a, b, &specs)))
        }
        _ => Err(Failure::Usage("give exactly one of --n and --bip".into())),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut read_input = || -> Result<String, Failure> {
        let mut text = String::new();
        match &cli.input {
            Some(path) => text = fs::read_to_string(path)?,
            None => {
                stdin.read_to_string(&mut text)?;
            }
        }
        Ok(text)
    };
    let mut with_graph = || -> Result<Input, Failure> { Ok(Input::parse(&read_input()?)?) };
    let mut out = match &cli.cmd {
        Cmd::Detect { pattern, max_nk } => detect(with_graph()?, pattern, *max_nk)?,
        Cmd::Partition { mode, params } => partition(with_graph()?, *mode, params)?,
        Cmd::Template { kind, params, refine } => template(with_graph()?, *kind, params.as_deref(), *refine)?,
        Cmd::Verify { k, partition } => verify_file(with_graph()?, *k, partition)?,
        Cmd::Encode { s } => encoding::encode(&with_graph()?.bipartite()?, *s)?.to_wire(),
        Cmd::Decode { s } => decode(&read_input()?, *s)?,
        Cmd::Enumerate { free, n, jobs } => enumerate(free, *n, *jobs)?,
        Cmd::Generate { seed, free, n, bip } => generate(*seed, free, *n, bip.as_deref())?,
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn report_failure(f: Failure, stderr: &mut dyn Write) -> i32 {
    let (code, msg) = match f {
        Failure::Usage(m) => (2, m),
        Failure::Rejected(v) => (1, v.to_string()),
        Failure::Lib(e) => match e {
            Error::Contains { pattern, witness } => {
                (1, json!({ "contains": pattern, "witness": witness }).to_string())
            }
            Error::Contract(m) => (1, json!({ "contract": m }).to_string()),
            Error::SizeLimit { .. } => (3, e.to_string()),
            Error::Parse { .. } | Error::Argument(_) => (2, e.to_string()),
        },
    };
    let _ = writeln!(stderr, "{msg}");
    code
}

/// Parses `argv` (program name first) and runs one subcommand against the
/// given streams. Returns the exit status.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, text),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => report_failure(Failure::Usage(e.to_string()), stderr),
            }
        }
        Err(f) => report_failure(f, stderr),
    }
}

/// [`run_with`] on the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}
