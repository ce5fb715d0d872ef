//! The `hdecomp` command line.
//!
//! Exit codes: 0 success, 1 domain or input error (including a failed
//! `verify` or `selftest`), 2 usage error, 3 a cap or budget was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hdecomp_core::canon::are_isomorphic;
use hdecomp_core::color::chromatic_number;
use hdecomp_core::enumerate::enumerate_graphs;
use hdecomp_core::extremal::{ExtremalRecord, DEFAULT_BUDGET};
use hdecomp_core::family::{chromatic_excess, decomposition_family, is_edge_critical, minimal_subfamily};
use hdecomp_core::graph6::emit_graph6;
use hdecomp_core::packing::{max_packing, phi_exact};
use hdecomp_core::pipeline::{decompose_with, lower_bound_construction, PipelineParams, Ratio, Step1Threshold};
use hdecomp_core::{verify_decomposition, Caps, Graph, GraphFamily};
use serde_json::json;

use crate::builtins::resolve;
use crate::cache::{cache_path, ExtremalCache};
use crate::formats::{self, DecompositionFile};
use crate::scan::phi_scan;
use crate::selftest::{self, Context, CRITERIA};
use crate::{io, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hdecomp", version, about = "Decompositions of graphs into copies of H and single edges")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Extremal-number cache (JSON lines); HDECOMP_CACHE takes precedence.
    #[arg(long, global = true, value_name = "PATH")]
    cache_path: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest host order for embedding search and canonical labelling.
    #[arg(long, global = true, default_value_t = Caps::default().embedding)]
    cap_embedding: usize,
    /// Largest order for exhaustive enumeration and exact extremal search.
    #[arg(long, global = true, default_value_t = Caps::default().enumeration)]
    cap_enumeration: usize,
    /// Largest order for a phi scan over all graphs.
    #[arg(long, global = true, default_value_t = Caps::default().phi_scan)]
    cap_phi_scan: usize,
    /// Most H-copies an exact packing will consider.
    #[arg(long, global = true, default_value_t = Caps::default().copies)]
    cap_copies: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            embedding: self.cap_embedding,
            enumeration: self.cap_enumeration,
            phi_scan: self.cap_phi_scan,
            copies: self.cap_copies,
        }
    }
}

/// A pattern: builtin name (k3, k4, c5, c7, bowtie, k222), graph6 file, or
/// graph6 literal.
#[derive(Args, Debug)]
struct PatternArg {
    #[arg(long = "h", value_name = "PATTERN")]
    h: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decomposition family F_H and its minimal subfamily F*_H.
    Family {
        #[command(flatten)]
        pattern: PatternArg,
        /// Write PREFIX.family.g6 and PREFIX.minimal.g6, each with a JSON sidecar.
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
    },
    /// Chromatic excess sigma(H).
    Sigma {
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// Whether H is edge-critical.
    Critical {
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// ex(n, F) for a family given as a graph6 list.
    Ex {
        #[arg(long, value_name = "PATH")]
        family: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// biex(n, H) = ex(n, F*_H).
    Biex {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A maximum edge-disjoint packing of H-copies in G.
    Pack {
        #[arg(long, value_name = "GRAPH")]
        g: String,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// phi_H(G) with an optimal decomposition.
    Phi {
        #[arg(long, value_name = "GRAPH")]
        g: String,
        #[command(flatten)]
        pattern: PatternArg,
        /// Write the optimal decomposition here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// phi_H(n): the maximum of phi_H(G) over all n-vertex graphs.
    PhiN {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
    },
    /// The Turán graph with a biex witness planted in its largest class.
    Construct {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the graph here as graph6.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the deletion pipeline on G.
    Decompose(DecomposeArgs),
    /// Check a decomposition file against G.
    Verify {
        #[arg(long, value_name = "GRAPH")]
        g: String,
        #[arg(long, value_name = "PATH")]
        decomposition: PathBuf,
        /// Also require the file's pattern to be isomorphic to this one.
        #[arg(long = "h", value_name = "PATTERN")]
        h: Option<String>,
    },
    /// All graphs on n vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance checks and print one line per check.
    Selftest {
        /// Only these checks (repeatable); all of them by default.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=10))]
        criteria: Vec<u8>,
    },
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long, value_name = "GRAPH")]
    g: String,
    #[command(flatten)]
    pattern: PatternArg,
    /// Rational in (0, 1), as a decimal or a/b.
    #[arg(long, default_value = "1/4")]
    beta: String,
    #[arg(long, default_value = "1/20")]
    gamma: String,
    /// Fixed Step 1 class threshold instead of biex at the core order.
    #[arg(long)]
    threshold: Option<usize>,
    /// Threshold to use when the core order is above the enumeration cap.
    #[arg(long, conflicts_with = "threshold")]
    fallback_threshold: Option<usize>,
    #[arg(long, default_value_t = PipelineParams::default().step1_budget)]
    step1_budget: u64,
    #[arg(long, default_value_t = PipelineParams::default().step2_budget)]
    step2_budget: u64,
    /// Node budget for the exact biex threshold.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = PipelineParams::default().restarts)]
    restarts: usize,
    /// Write the decomposition here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hdecomp: {e}");
            e.exit_code()
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn print(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    write_out(out, &s)
}

fn family_json(f: &GraphFamily) -> serde_json::Value {
    json!({
        "source": f.source(),
        "minimal": f.is_minimal(),
        "member_count": f.len(),
        "members": f.graphs().map(emit_graph6).collect::<Vec<_>>(),
    })
}

fn record_json(rec: &ExtremalRecord) -> serde_json::Value {
    json!({
        "n": rec.n,
        "family_key": rec.family_key,
        "value": rec.value,
        "witness_graph6": emit_graph6(&rec.witness),
        "status": rec.status,
        "nodes": rec.nodes,
        "ignored_members": rec.ignored_members,
    })
}

fn open_cache(explicit: Option<PathBuf>) -> Result<ExtremalCache> {
    match cache_path(explicit) {
        Some(p) => ExtremalCache::open(&p),
        None => Ok(ExtremalCache::in_memory()),
    }
}

fn ratio(s: &str, name: &str) -> Result<Ratio> {
    s.parse().map_err(|_| Error::Usage(format!("--{name}: not a rational number: {s:?}")))
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    let caps = cli.caps.caps();
    let threads = cli.threads.map(usize::from);
    match cli.command {
        Command::Family { pattern, out: prefix } => {
            let h = resolve(&pattern.h)?;
            let full = decomposition_family(&h, &caps)?;
            let min = minimal_subfamily(&full)?;
            if let Some(prefix) = prefix {
                let with = |ext: &str| {
                    let mut s = prefix.as_os_str().to_owned();
                    s.push(ext);
                    PathBuf::from(s)
                };
                formats::write_family(&with(".family.g6"), &full)?;
                formats::write_family(&with(".minimal.g6"), &min)?;
            }
            print(
                out,
                &json!({ "pattern": emit_graph6(&h), "family": family_json(&full), "minimal_family": family_json(&min) }),
            )?;
        }
        Command::Sigma { pattern } => {
            let h = resolve(&pattern.h)?;
            let sigma = chromatic_excess(&h, &caps)?;
            let chi = chromatic_number(&h, &caps)?;
            print(out, &json!({ "pattern": emit_graph6(&h), "chromatic_number": chi, "sigma": sigma }))?;
        }
        Command::Critical { pattern } => {
            let h = resolve(&pattern.h)?;
            print(out, &json!({ "pattern": emit_graph6(&h), "edge_critical": is_edge_critical(&h, &caps)? }))?;
        }
        Command::Ex { family, n, budget } => {
            let graphs = io::read_graphs(&family)?;
            let source = formats::read_family(&family)
                .map(|(_, side)| side.source)
                .unwrap_or_else(|_| family.display().to_string());
            let fam = GraphFamily::from_graphs(graphs, source, &caps)?;
            let rec = open_cache(cli.cache_path)?.extremal(n, &fam, budget, &caps)?;
            print(out, &record_json(&rec))?;
        }
        Command::Biex { pattern, n, budget } => {
            let h = resolve(&pattern.h)?;
            let rec = open_cache(cli.cache_path)?.biex_of(n, &h, budget, &caps)?;
            let mut v = record_json(&rec);
            v["pattern"] = json!(emit_graph6(&h));
            print(out, &v)?;
        }
        Command::Pack { g, pattern } => {
            let (g, h) = (resolve(&g)?, resolve(&pattern.h)?);
            let p = max_packing(&g, &h, &caps)?;
            let maps: Vec<&Vec<usize>> = p.copies.iter().map(|c| &c.map).collect();
            print(out, &json!({ "copies": maps.len(), "packing": maps }))?;
        }
        Command::Phi { g, pattern, out: path } => {
            let (g, h) = (resolve(&g)?, resolve(&pattern.h)?);
            let (t, d) = phi_exact(&g, &h, &caps)?;
            let (copies, singles) = (d.copies.len(), d.singles.len());
            if let Some(path) = path {
                let file = DecompositionFile { pattern: h.clone(), host_order: g.order(), decomposition: d };
                io::write_atomic(&path, formats::emit_decomposition(&file).as_bytes())?;
            }
            print(out, &json!({ "value": t, "copies": copies, "singles": singles }))?;
        }
        Command::PhiN { pattern, n } => {
            let h = resolve(&pattern.h)?;
            let scan = phi_scan(n, &h, &caps, threads)?;
            print(
                out,
                &json!({
                    "n": n,
                    "pattern_graph6": emit_graph6(&h),
                    "value": scan.value,
                    "witnesses": scan.witnesses.iter().map(emit_graph6).collect::<Vec<_>>(),
                    "graphs_scanned": scan.graphs_scanned,
                }),
            )?;
        }
        Command::Construct { pattern, n, budget, out: path } => {
            let h = resolve(&pattern.h)?;
            let (g, cert) = lower_bound_construction(n, &h, budget, &caps)?;
            if let Some(path) = path {
                io::write_atomic(&path, io::graph_lines([&g]).as_bytes())?;
            }
            print(out, &json!({ "graph6": emit_graph6(&g), "certificate": cert }))?;
        }
        Command::Decompose(args) => {
            let (g, h) = (resolve(&args.g)?, resolve(&args.pattern.h)?);
            let params = PipelineParams {
                beta: ratio(&args.beta, "beta")?,
                gamma: ratio(&args.gamma, "gamma")?,
                step1_threshold: match args.threshold {
                    Some(v) => Step1Threshold::Supplied(v),
                    None => Step1Threshold::ExactBiex { fallback: args.fallback_threshold },
                },
                step1_budget: args.step1_budget,
                step2_budget: args.step2_budget,
                biex_budget: args.budget,
                seed: args.seed,
                restarts: args.restarts,
                caps,
            };
            let mut cache = open_cache(cli.cache_path)?;
            let run = decompose_with(&g, &h, &params, &mut cache)?;
            let report = formats::emit_report(&g, &h, &run.report)?;
            if let Some(path) = &args.out {
                let file = DecompositionFile { pattern: h.clone(), host_order: g.order(), decomposition: run.decomposition };
                io::write_atomic(path, formats::emit_decomposition(&file).as_bytes())?;
            }
            if let Some(path) = &args.report {
                io::write_atomic(path, report.as_bytes())?;
            }
            write_out(out, &report)?;
        }
        Command::Verify { g, decomposition, h } => {
            let g = resolve(&g)?;
            let file = formats::read_decomposition(&decomposition)?;
            if let Some(h) = h {
                if !are_isomorphic(&resolve(&h)?, &file.pattern, &caps)? {
                    return Err(Error::Usage("the decomposition was made for a different pattern".into()));
                }
            }
            let result = if file.host_order != g.order() {
                Err(format!("decomposition is for {} vertices, the graph has {}", file.host_order, g.order()))
            } else {
                verify_decomposition(&g, &file.pattern, &file.decomposition).map_err(|v| v.to_string())
            };
            let violation = result.err();
            let valid = violation.is_none();
            print(out, &json!({ "valid": valid, "parts": file.decomposition.parts(), "violation": violation }))?;
            return Ok(if valid { 0 } else { 1 });
        }
        Command::Enumerate { n, out: path } => {
            let graphs: Vec<Graph> = enumerate_graphs(n, &caps)?.collect();
            let text = io::graph_lines(&graphs);
            match path {
                Some(path) => {
                    io::write_atomic(&path, text.as_bytes())?;
                    print(out, &json!({ "n": n, "count": graphs.len() }))?;
                }
                None => write_out(out, &text)?,
            }
        }
        Command::Selftest { criteria } => {
            let ids: Vec<u8> = if criteria.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { criteria };
            let mut ctx = Context { caps, threads, cache: open_cache(cli.cache_path)? };
            let mut failed = 0;
            for id in ids {
                let o = selftest::run(id, &mut ctx);
                failed += usize::from(!o.passed);
                write_out(out, &format!("{o}\n"))?;
            }
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}
