use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use grobfan::fan::{
    bfs_enumerate, cone_of, f_vector, facet_normals, flip, reverse_search, symmetric_bfs,
    universal_basis,
};
use grobfan::io::json::{self, basis_json, cone_json, facets_json, stats_json, summary_json};
use grobfan::io::text::format_polynomial_list;
use grobfan::io::{
    format_cone, format_marked_basis, format_stats, format_vector, parse_input, parse_order,
    parse_symmetry, render_slice_svg, InputDocument, OrderSpecError, ParseError, SymmetrySpecError,
};
use grobfan::{
    buchberger, Counters, FanError, FanSummary, IntegerVector, MarkedBasis, PermutationGroup,
    RunStats,
};
use grobfan::{AlgebraError, TermOrderMatrix};

#[derive(Parser)]
#[command(
    name = "grobfan",
    version,
    about = "Exact Gröbner fan computations over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Term order, e.g. `lex:z,y,x` or `weight:1,2,3;tiebreak=degrevlex:x,y,z`
    #[arg(long, global = true)]
    order: Option<String>,
    /// Symmetry generators as 1-based images, e.g. `2,3,1;2,1,3`
    #[arg(long, global = true)]
    symmetry: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long, global = true, value_enum, default_value_t = Algorithm::ReverseSearch)]
    algorithm: Algorithm,
    /// Only report flippable facets
    #[arg(long, global = true)]
    flippable_only: bool,
    /// Seed for randomized checks; the algorithms themselves are deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the input ideal
    Gb { file: Option<PathBuf> },
    /// Gröbner cone of a marked basis (or of the basis for the order)
    Cone { file: Option<PathBuf> },
    /// Facet normals of the Gröbner cone
    Facets { file: Option<PathBuf> },
    /// Flip across a facet with the given inner normal
    Flip {
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        facet: String,
    },
    /// All marked reduced Gröbner bases, one per line
    Enumerate { file: Option<PathBuf> },
    /// Dimension of the homogeneity space and cone counts by dimension
    Fvector { file: Option<PathBuf> },
    /// Union of all reduced Gröbner bases
    Universal { file: Option<PathBuf> },
    /// SVG of the fan intersected with the standard simplex
    Render { file: Option<PathBuf> },
    /// Counters and wall time of an enumeration
    Stats { file: Option<PathBuf> },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    ReverseSearch,
    Bfs,
    SymmetricBfs,
}

/// 1 parse error, 2 invalid order, 3 invalid symmetry, 4 anything else.
fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<ParseError>() {
            return 1;
        }
        if cause.is::<OrderSpecError>() {
            return 2;
        }
        if let Some(AlgebraError::NotATermOrder { .. }) = cause.downcast_ref::<AlgebraError>() {
            return 2;
        }
        if cause.is::<SymmetrySpecError>() {
            return 3;
        }
        if let Some(
            FanError::SymmetryViolated(_)
            | FanError::InvalidPermutation(_)
            | FanError::GroupTooLarge(_),
        ) = cause.downcast_ref::<FanError>()
        {
            return 3;
        }
    }
    4
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|c| c.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_document(file: &Option<PathBuf>) -> Result<InputDocument> {
    let text = match file {
        Some(path) => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    Ok(parse_input(&text)?)
}

struct Job {
    doc: InputDocument,
    order: TermOrderMatrix,
}

impl Job {
    fn new(cli: &Cli, file: &Option<PathBuf>) -> Result<Self> {
        let doc = read_document(file)?;
        let order = match cli.order.as_deref().or(doc.order.as_deref()) {
            Some(spec) => parse_order(spec, &doc.variables)?,
            None => TermOrderMatrix::default_for(doc.nvars()),
        };
        Ok(Job { doc, order })
    }

    fn vars(&self) -> &[String] {
        &self.doc.variables
    }

    /// The marked input when every generator is marked, otherwise the
    /// reduced basis for the order.
    fn basis(&self) -> Result<MarkedBasis> {
        match self.doc.marked_basis() {
            Some(g) => Ok(g),
            None => Ok(buchberger(&self.doc.generators, &self.order)?),
        }
    }

    fn group(&self, cli: &Cli) -> Result<Option<PermutationGroup>> {
        let Some(spec) = cli.symmetry.as_deref().or(self.doc.symmetry.as_deref()) else {
            return Ok(None);
        };
        let perms = parse_symmetry(spec, self.doc.nvars())?;
        Ok(Some(PermutationGroup::new(self.doc.nvars(), perms)?))
    }

    /// Enumerates with the selected algorithm, calling `emit` on each basis
    /// (or orbit representative with its orbit size) as soon as it is known.
    /// Reverse search keeps the bases in the summary only when `keep` is set.
    fn enumerate(
        &self,
        cli: &Cli,
        keep: bool,
        mut emit: impl FnMut(&MarkedBasis, Option<u64>) -> Result<()>,
    ) -> Result<FanSummary> {
        let start = Counters::snapshot();
        match cli.algorithm {
            Algorithm::ReverseSearch => {
                let mut all = Vec::new();
                let mut failure = None;
                reverse_search(&self.doc.generators, &self.order, |g| {
                    if failure.is_none() {
                        failure = emit(g, None).err();
                    }
                    if keep {
                        all.push(g.clone());
                    }
                })?;
                if let Some(e) = failure {
                    return Err(e);
                }
                Ok(FanSummary::from_bases(all, Counters::since(start)))
            }
            Algorithm::Bfs => {
                let all = bfs_enumerate(&buchberger(&self.doc.generators, &self.order)?)?;
                for g in &all {
                    emit(g, None)?;
                }
                Ok(FanSummary::from_bases(all, Counters::since(start)))
            }
            Algorithm::SymmetricBfs => {
                let group = self.group(cli)?.ok_or_else(|| {
                    anyhow!("symmetric-bfs needs --symmetry or a symmetry directive")
                })?;
                let summary = symmetric_bfs(&self.doc.generators, &group, &self.order)?;
                let sizes = summary.orbit_sizes.as_deref().unwrap_or_default();
                for (g, s) in summary.maximal_cones.iter().zip(sizes) {
                    emit(g, Some(*s))?;
                }
                Ok(summary)
            }
        }
    }

    /// All maximal cones, expanding orbits when a symmetric traversal ran.
    fn full_fan(&self, cli: &Cli) -> Result<FanSummary> {
        let mut s = self.enumerate(cli, true, |_, _| Ok(()))?;
        if s.orbit_sizes.is_some() {
            let group = self.group(cli)?.expect("symmetric traversal had a group");
            let counters = s.counters;
            s = FanSummary::from_bases(s.all_bases(&group), counters);
        }
        Ok(s)
    }
}

fn parse_vector(s: &str) -> Result<IntegerVector> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let entries: Vec<i64> = inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .with_context(|| format!("bad vector entry `{x}`"))
        })
        .collect::<Result<_>>()?;
    Ok(IntegerVector::from_i64(&entries))
}

fn print(out: &mut impl Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())?;
    if !s.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let json_out = cli.output == Output::Json;
    match &cli.command {
        Command::Gb { file } => {
            let job = Job::new(cli, file)?;
            let g = buchberger(&job.doc.generators, &job.order)?;
            if json_out {
                print(&mut out, &json::to_string(&basis_json(&g, job.vars())))?;
            } else {
                print(&mut out, &format_marked_basis(&g, job.vars()))?;
            }
        }
        Command::Cone { file } => {
            let job = Job::new(cli, file)?;
            let c = cone_of(&job.basis()?)?;
            if json_out {
                print(&mut out, &json::to_string(&cone_json(&c)))?;
            } else {
                print(&mut out, &format_cone(&c))?;
            }
        }
        Command::Facets { file } => {
            let job = Job::new(cli, file)?;
            let g = job.basis()?;
            cone_of(&g)?;
            let facets = facet_normals(&g, cli.flippable_only);
            if json_out {
                print(&mut out, &json::to_string(&facets_json(&facets)))?;
            } else {
                for f in &facets {
                    let tag = if f.flippable { "flippable" } else { "boundary" };
                    print(&mut out, &format!("{} {tag}", format_vector(&f.alpha)))?;
                }
            }
        }
        Command::Flip { file, facet } => {
            let job = Job::new(cli, file)?;
            let alpha = parse_vector(facet)?;
            if alpha.len() != job.doc.nvars() {
                bail!(
                    "facet normal has {} entries, expected {}",
                    alpha.len(),
                    job.doc.nvars()
                );
            }
            let u = flip(&job.basis()?, &alpha)?;
            if json_out {
                print(&mut out, &json::to_string(&basis_json(&u, job.vars())))?;
            } else {
                print(&mut out, &format_marked_basis(&u, job.vars()))?;
            }
        }
        Command::Enumerate { file } => {
            let job = Job::new(cli, file)?;
            if json_out {
                let s = job.enumerate(cli, true, |_, _| Ok(()))?;
                print(
                    &mut out,
                    &json::to_string(&summary_json(&s, job.vars(), true, &enumerate_warnings())?),
                )?;
            } else {
                job.enumerate(cli, false, |g, size| {
                    let line = format_marked_basis(g, job.vars());
                    match size {
                        Some(s) => writeln!(out, "{s} {line}")?,
                        None => writeln!(out, "{line}")?,
                    }
                    out.flush()?;
                    Ok(())
                })?;
            }
        }
        Command::Fvector { file } => {
            let job = Job::new(cli, file)?;
            let mut s = job.full_fan(cli)?;
            s.f_vector = Some(f_vector(&s.maximal_cones)?);
            if json_out {
                print(
                    &mut out,
                    &json::to_string(&summary_json(&s, job.vars(), false, &[])?),
                )?;
            } else {
                let f: Vec<String> = s.f_vector.iter().flatten().map(u64::to_string).collect();
                print(
                    &mut out,
                    &format!("h: {}\nf_vector: ({})", s.h, f.join(",")),
                )?;
            }
        }
        Command::Universal { file } => {
            let job = Job::new(cli, file)?;
            let mut s = job.full_fan(cli)?;
            let u = universal_basis(&s.maximal_cones);
            if json_out {
                s.universal_basis = Some(u);
                print(
                    &mut out,
                    &json::to_string(&summary_json(&s, job.vars(), false, &[])?),
                )?;
            } else {
                print(&mut out, &format_polynomial_list(&u, job.vars()))?;
            }
        }
        Command::Render { file } => {
            let job = Job::new(cli, file)?;
            let s = job.full_fan(cli)?;
            print(&mut out, &render_slice_svg(&s.maximal_cones)?)?;
        }
        Command::Stats { file } => {
            let job = Job::new(cli, file)?;
            let mut cones = 0u64;
            let (done, stats) = RunStats::measure(|| {
                job.enumerate(cli, false, |_, size| {
                    cones += size.unwrap_or(1);
                    Ok(())
                })
            });
            done?;
            if json_out {
                print(&mut out, &json::to_string(&stats_json(&stats, cones)))?;
            } else {
                print(
                    &mut out,
                    &format!("cones: {cones}\n{}", format_stats(&stats)),
                )?;
            }
        }
    }
    Ok(())
}

fn enumerate_warnings() -> Vec<String> {
    vec!["f_vector not requested; use the fvector command".to_string()]
}
