//! `ringlab`: validate, inspect and classify finite rings, and run the
//! theorem checkers over a corpus.
//!
//! Exit codes: 0 success, 1 invalid ring or ideal, 2 theorem violation,
//! 3 I/O or usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ringlab::corpus::{load_corpus_dir, Corpus, GeneratorSpec};
use ringlab::predicates::{classify_ideal, is_fully_almost_prime_in, Failure, Universe};
use ringlab::ringfile::RingFile;
use ringlab::theorems::{explain_report, parse_selection, run_checks, CheckOptions, Mutation, SuiteReport};
use ringlab::{
    direct_product, enumerate_ideals, ideal_product, quotient, read_ring_file, ElementSubset, IdealHandle, IdealKind,
    Ring, RingFileError, DEFAULT_MAX_ORDER,
};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Ideals of finite rings and almost prime checks")]
struct Cli {
    /// Largest ring order any construction may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ring axioms.
    Validate { ring: String },
    /// List the ideals of one kind.
    Ideals {
        ring: String,
        #[arg(long, value_enum, default_value = "right")]
        kind: KindArg,
    },
    /// Classify proper right ideals, or a single one with --ideal.
    Classify {
        ring: String,
        /// Element indices or labels, comma separated.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Direct product of two rings as a ring file.
    Product {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Quotient by a two-sided ideal as a ring file.
    Quotient {
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a generated ring to a file.
    Generate {
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run theorem checkers over a corpus.
    Verify {
        /// A directory of ring files, or `default`.
        #[arg(long, default_value = "default")]
        corpus: String,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Where to write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Where to write the markdown summary.
        #[arg(long)]
        markdown: Option<PathBuf>,
        /// Inject a defect into the predicates.
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Right,
    Left,
    TwoSided,
}

impl From<KindArg> for IdealKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Right => IdealKind::Right,
            KindArg::Left => IdealKind::Left,
            KindArg::TwoSided => IdealKind::TwoSided,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    AlmostPrimeIgnoresSquare,
    WeaklyPrimeIgnoresNonzero,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::AlmostPrimeIgnoresSquare => Mutation::AlmostPrimeIgnoresSquare,
            MutationArg::WeaklyPrimeIgnoresNonzero => Mutation::WeaklyPrimeIgnoresNonzero,
        }
    }
}

enum Fail {
    Invalid(anyhow::Error),
    Violations(usize),
    Io(anyhow::Error),
    Usage(anyhow::Error),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Invalid(_) => 1,
            Fail::Violations(_) => 2,
            Fail::Io(_) | Fail::Usage(_) => 3,
        }
    }
}

impl From<RingFileError> for Fail {
    fn from(e: RingFileError) -> Self {
        match e {
            RingFileError::Io(..) => Fail::Io(e.into()),
            _ => Fail::Invalid(e.into()),
        }
    }
}

type Result<T> = std::result::Result<T, Fail>;

/// A ring argument: an existing file, otherwise a generator spec.
fn load_ring(arg: &str, max_order: usize) -> Result<Ring> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_ring_file(path, max_order).map_err(|e| match e {
            RingFileError::Io(..) => Fail::Io(e.into()),
            _ => Fail::Invalid(anyhow!(e).context(format!("in {arg}"))),
        });
    }
    if arg.ends_with(".json") {
        return Err(Fail::Io(anyhow!("{arg}: no such file")));
    }
    let spec: GeneratorSpec = arg
        .parse()
        .map_err(|e| Fail::Usage(anyhow!("{e}; expected a ring file or a generator spec")))?;
    spec.build(max_order)
        .map(|c| c.ring)
        .map_err(|e| Fail::Invalid(e.into()))
}

fn parse_elements(ring: &Ring, list: &str) -> Result<ElementSubset> {
    let mut idx = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i = match tok.parse::<usize>() {
            Ok(i) if i < ring.order() => i,
            _ => ring
                .labels()
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| Fail::Usage(anyhow!("`{tok}` is neither an element index nor a label")))?,
        };
        idx.push(i);
    }
    ElementSubset::from_indices(ring, idx).map_err(|e| Fail::Usage(e.into()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Fail::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn describe(ring: &Ring) -> String {
    format!(
        "{}: order {}, {}, {}",
        ring.name(),
        ring.order(),
        if ring.is_commutative() {
            "commutative"
        } else {
            "noncommutative"
        },
        match ring.identity() {
            Some(e) => format!("identity {}", ring.label(e)),
            None => "no identity".to_string(),
        }
    )
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn failure_text(f: &Failure) -> String {
    match f {
        Failure::Pair(w) => format!("A = {}, B = {}, AB = {}", w.a.subset(), w.b.subset(), w.product),
        Failure::Square(s) => format!("P^2 = {s}"),
        Failure::Between(i) => format!("{} lies strictly between 0 and P", i.subset()),
        Failure::ZeroIdeal => "the zero ideal is not minimal".to_string(),
    }
}

fn classify(ring: &Ring, ideal: Option<&str>) -> Result<String> {
    let universe = Universe::new(ring, IdealKind::Right);
    let mut out = format!("{}\n", describe(ring));
    let selected: Vec<IdealHandle> = match ideal {
        Some(list) => {
            let subset = parse_elements(ring, list)?;
            let handle = IdealHandle::new(subset, IdealKind::Right).map_err(|e| Fail::Invalid(e.into()))?;
            if !handle.is_proper() {
                return Err(Fail::Invalid(anyhow!("the whole ring is not a proper right ideal")));
            }
            vec![handle]
        }
        None => {
            let sets: Vec<String> = universe.ideals().iter().map(|i| i.subset().to_string()).collect();
            out.push_str(&format!("right ideals: {}\n", sets.join(" ")));
            let two: Vec<String> = enumerate_ideals(ring, IdealKind::TwoSided)
                .iter()
                .map(|i| i.subset().to_string())
                .collect();
            out.push_str(&format!("two-sided ideals: {}\n", two.join(" ")));
            universe.proper().map(|(_, p)| p.clone()).collect()
        }
    };
    let records: Vec<_> = selected
        .iter()
        .map(|p| classify_ideal(p, &universe).expect("proper right ideal"))
        .collect();

    let header = [
        "ideal",
        "two-sided",
        "P^2",
        "idempotent",
        "prime",
        "weakly prime",
        "almost prime",
        "minimal",
    ];
    let rows: Vec<[String; 8]> = records
        .iter()
        .map(|r| {
            [
                r.ideal.subset().to_string(),
                yes(r.two_sided).into(),
                r.square.to_string(),
                yes(r.is_idempotent).into(),
                yes(r.is_prime).into(),
                yes(r.is_weakly_prime).into(),
                yes(r.is_almost_prime).into(),
                yes(r.is_minimal).into(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..8)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    out.push('\n');
    out.push_str(&line(header.to_vec()));
    out.push_str(&line(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for r in &rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }

    let mut witnesses = Vec::new();
    for r in &records {
        let name = r.ideal.subset().to_string();
        for (what, f) in [
            ("not prime", &r.prime_failure),
            ("not weakly prime", &r.weakly_prime_failure),
            ("not almost prime", &r.almost_prime_failure),
        ] {
            if let Some(f) = f {
                witnesses.push(format!("  {name} {what}: {}\n", failure_text(f)));
            }
        }
        if ideal.is_some() {
            if let Some(f) = &r.minimal_failure {
                witnesses.push(format!("  {name} not minimal: {}\n", failure_text(f)));
            }
        }
    }
    if !witnesses.is_empty() {
        out.push_str("\nwitnesses:\n");
        witnesses.iter().for_each(|w| out.push_str(w));
    }

    if ideal.is_none() {
        let proper: Vec<&IdealHandle> = universe.ideals().iter().filter(|i| i.is_proper()).collect();
        if proper.len() <= 8 {
            out.push_str("\nproducts of proper right ideals:\n");
            for a in &proper {
                for b in &proper {
                    let ab = ideal_product(a.subset(), b.subset()).expect("same ring");
                    out.push_str(&format!("  {} {} = {}\n", a.subset(), b.subset(), ab));
                }
            }
        }
        let fully = is_fully_almost_prime_in(&universe);
        out.push_str(&format!("\nfully almost prime right ring: {}\n", yes(fully.holds)));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<()> {
    let max = cli.max_order;
    match cli.command {
        Command::Validate { ring } => {
            let r = load_ring(&ring, max)?;
            println!("ok: {}", describe(&r));
        }
        Command::Ideals { ring, kind } => {
            let r = load_ring(&ring, max)?;
            let kind = IdealKind::from(kind);
            let ideals = enumerate_ideals(&r, kind);
            println!("{} {kind} ideals of {}", ideals.len(), r.name());
            for i in &ideals {
                println!("{}", i.subset());
            }
        }
        Command::Classify { ring, ideal } => {
            let r = load_ring(&ring, max)?;
            print!("{}", classify(&r, ideal.as_deref())?);
        }
        Command::Product { left, right, output } => {
            let a = load_ring(&left, max)?;
            let b = load_ring(&right, max)?;
            let p = direct_product(&a, &b, max).map_err(|e| Fail::Invalid(e.into()))?;
            emit(&RingFile::from_ring(&p.ring).to_json(), output.as_deref())?;
        }
        Command::Quotient { ring, ideal, output } => {
            let r = load_ring(&ring, max)?;
            let subset = parse_elements(&r, &ideal)?;
            let handle = IdealHandle::new(subset, IdealKind::TwoSided).map_err(|e| Fail::Invalid(e.into()))?;
            let q = quotient(&r, &handle).map_err(|e| Fail::Invalid(e.into()))?;
            emit(&RingFile::from_ring(&q.ring).to_json(), output.as_deref())?;
        }
        Command::Generate { spec, output } => {
            let spec: GeneratorSpec = spec
                .parse()
                .map_err(|e: ringlab::ConstructionError| Fail::Usage(e.into()))?;
            let built = spec.build(max).map_err(|e| Fail::Invalid(e.into()))?;
            emit(&RingFile::from_ring(&built.ring).to_json(), Some(&output))?;
        }
        Command::Verify {
            corpus,
            theorems,
            report,
            markdown,
            mutation,
        } => {
            let selection = parse_selection(&theorems).map_err(|e| Fail::Usage(e.into()))?;
            let corpus = if corpus == "default" {
                Corpus::from_specs(ringlab::corpus::DEFAULT_CORPUS_SPECS, max).map_err(|e| Fail::Invalid(e.into()))?
            } else {
                load_corpus_dir(Path::new(&corpus), max)?
            };
            let mutation = mutation.map(Mutation::from);
            let start = Instant::now();
            let reports = run_checks(&corpus, &selection, CheckOptions { mutation });
            let suite = SuiteReport::new(&corpus, mutation, reports, start.elapsed().as_secs_f64() * 1000.0);
            let md = suite.to_markdown();
            print!("{md}");
            if let Some(p) = report {
                emit(&suite.to_json(), Some(&p))?;
            }
            if let Some(p) = markdown {
                emit(&md, Some(&p))?;
            }
            if suite.total_violations > 0 {
                eprint!("{}", explain_report(&suite.theorems, &corpus));
                return Err(Fail::Violations(suite.total_violations));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Fail::Invalid(e) | Fail::Io(e) | Fail::Usage(e) => eprintln!("error: {e:#}"),
                Fail::Violations(n) => eprintln!("{n} theorem violation(s) found"),
            }
            ExitCode::from(f.code())
        }
    }
}
