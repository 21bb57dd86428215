//! `topohom`: command-line front end for the topohom library.
//!
//! Every command prints data lines followed by one `RESULT <pass|fail> ...`
//! line. Exit code 0 means pass, 1 a verified failure, 2 bad input.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use topohom::coloring::{search, verify};
use topohom::generate::random_graph;
use topohom::group::{add_index, generate, verify_every_zero, GraphicGroup};
use topohom::hom::{check_hom, colored_check, find_homs, hom_violations, is_faithful, is_full};
use topohom::lattice::{build, lattice_hom, LatticeElement};
use topohom::oracle::{brute_force_colorings, brute_force_homs};
use topohom::sequence::{grow, labels_from_text, labels_to_text, verify_chain, LabeledStage};
use topohom::topcode::{
    decode, encode, nsd_pipeline, nsd_solve, to_string, to_string_ordered, PipelineLimits, TopcodeMatrix,
};
use topohom::{ColoredHom, Graph, TotalColoring, VertexMapping, WType};

#[derive(Parser)]
#[command(name = "topohom", version, about = "Totally-colored graph homomorphisms and topological codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a total coloring against a W-type
    VerifyColoring {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        wtype: WType,
    },
    /// Enumerate W-type colorings by backtracking
    FindColorings {
        graph: PathBuf,
        #[arg(long)]
        wtype: WType,
        #[arg(long)]
        limit: Option<usize>,
        /// Write coloring_<i>.txt files here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check that a vertex map is a homomorphism
    CheckHom { g: PathBuf, h: PathBuf, map: PathBuf },
    /// Enumerate homomorphisms G -> H
    FindHoms {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check a homomorphism between two colored graphs
    ColoredCheck {
        source: PathBuf,
        source_coloring: PathBuf,
        target: PathBuf,
        target_coloring: PathBuf,
        map: PathBuf,
        #[arg(long)]
        wtype: WType,
    },
    /// Run the growth algorithm
    GrowSequence {
        /// Seed graph file (default: triangle)
        #[arg(long)]
        seed_graph: Option<PathBuf>,
        #[arg(long)]
        steps: usize,
        /// Write stage_<k>.graph and stage_<k>.labels here
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Check the fold homomorphisms of stages written by grow-sequence
    VerifyChain {
        dir: PathBuf,
        #[arg(long)]
        steps: usize,
    },
    /// Every-zero graphic groups
    #[command(subcommand)]
    Group(GroupCommand),
    /// Edge-join / vertex-coincide lattices
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Topcode-matrices and number strings
    #[command(subcommand)]
    Topcode(TopcodeCommand),
    /// Exhaustive reference enumeration
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Print a seeded random graph
    RandomGraph {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Build the M shifted colorings
    Generate {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        modulus: u32,
        /// Write element_<i>.coloring files here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Index of G_i (+) G_j with zero G_k
    Add {
        #[arg(long)]
        modulus: u32,
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Check the group laws on element_<i>.coloring files
    Verify {
        graph: PathBuf,
        dir: PathBuf,
        #[arg(long)]
        modulus: u32,
    },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Evaluate an element over a base
    Build {
        element: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        base: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map an element through per-base homomorphisms
    HomCheck {
        element: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        source_base: Vec<PathBuf>,
        #[arg(long, num_args = 1.., required = true)]
        target_base: Vec<PathBuf>,
        #[arg(long, num_args = 1.., required = true)]
        maps: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TopcodeCommand {
    /// Colored graph to matrix
    Encode {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        wtype: WType,
    },
    /// Matrix to all consistent colored graphs
    Decode {
        matrix: PathBuf,
        #[arg(long)]
        wtype: WType,
        /// Keep disconnected candidates
        #[arg(long)]
        all: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Write candidate_<i>.graph / .coloring files here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Matrix to number string
    Stringify {
        matrix: PathBuf,
        /// Cell order as comma-separated column-major indices
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Split a number string back into matrices
    NsdSolve {
        string: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        wtype: WType,
        /// Tokens fill columns in order (top, mid, bottom)
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// nsd-solve, decode, then colored homomorphisms between candidates
    Pipeline {
        string: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        wtype: WType,
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 16)]
        solution_limit: usize,
        #[arg(long, default_value_t = 256)]
        candidate_limit: usize,
        #[arg(long, default_value_t = 1024)]
        pairing_limit: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Every map V(G) -> V(H) that is a homomorphism
    Homs { g: PathBuf, h: PathBuf },
    /// Every vertex coloring in range passing the W-type
    Colorings {
        graph: PathBuf,
        #[arg(long)]
        wtype: WType,
    },
}

/// Bad input; reported on stderr with exit code 2.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> topohom::Result<T>) -> Result<T, InputError> {
    parse(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, InputError> {
    load(path, Graph::from_text)
}

fn load_coloring(path: &Path) -> Result<TotalColoring, InputError> {
    load(path, TotalColoring::from_text)
}

fn load_map(path: &Path) -> Result<VertexMapping, InputError> {
    load(path, |s| s.parse())
}

fn write(path: &Path, text: &str) -> Result<(), InputError> {
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn out_dir(dir: &Option<PathBuf>) -> Result<Option<&Path>, InputError> {
    if let Some(d) = dir {
        fs::create_dir_all(d).map_err(|e| InputError(format!("{}: {e}", d.display())))?;
    }
    Ok(dir.as_deref())
}

fn result(pass: bool, detail: impl Display) -> Outcome {
    let word = if pass { "pass" } else { "fail" };
    let detail = detail.to_string();
    if detail.is_empty() {
        println!("RESULT {word}");
    } else {
        println!("RESULT {word} {detail}");
    }
    Ok(pass)
}

fn map_line(m: &VertexMapping) -> String {
    let imgs: Vec<String> = m.images().iter().map(usize::to_string).collect();
    format!("MAP {}", imgs.join(" "))
}

fn print_block(header: impl Display, body: &str) {
    println!("{header}");
    print!("{body}");
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::VerifyColoring { graph, coloring, wtype } => {
            let g = load_graph(&graph)?;
            let f = load_coloring(&coloring)?;
            let r = verify(&g, &f, wtype)?;
            print!("{r}");
            result(r.passed(), format!("{wtype} {}", r.failure_summary()).trim_end())
        }
        Command::FindColorings { graph, wtype, limit, out_dir: dir } => {
            let g = load_graph(&graph)?;
            let dir = out_dir(&dir)?;
            let found = search(&g, wtype, limit.unwrap_or(usize::MAX));
            for (i, f) in found.iter().enumerate() {
                print_block(format!("COLORING {}", i + 1), &f.to_text());
                if let Some(d) = dir {
                    write(&d.join(format!("coloring_{}.txt", i + 1)), &f.to_text())?;
                }
            }
            result(!found.is_empty(), format!("count={}", found.len()))
        }
        Command::CheckHom { g, h, map } => {
            let (g, h, m) = (load_graph(&g)?, load_graph(&h)?, load_map(&map)?);
            let bad = hom_violations(&g, &h, &m)?;
            for (u, v) in &bad {
                println!("VIOLATION {u}-{v} -> {}-{}", m.get(*u), m.get(*v));
            }
            if bad.is_empty() {
                println!("FAITHFUL {}", is_faithful(&g, &h, &m)?);
                println!("FULL {}", is_full(&g, &h, &m)?);
            }
            result(bad.is_empty(), format!("violations={}", bad.len()))
        }
        Command::FindHoms { g, h, limit } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let homs = find_homs(&g, &h, limit.unwrap_or(usize::MAX));
            for m in &homs {
                println!("{}", map_line(m));
            }
            result(!homs.is_empty(), format!("count={}", homs.len()))
        }
        Command::ColoredCheck { source, source_coloring, target, target_coloring, map, wtype } => {
            let (g, f) = (load_graph(&source)?, load_coloring(&source_coloring)?);
            let (h, fh) = (load_graph(&target)?, load_coloring(&target_coloring)?);
            let m = load_map(&map)?;
            let r = colored_check(&ColoredHom {
                source: &g,
                source_coloring: &f,
                target: &h,
                target_coloring: &fh,
                map: &m,
                wtype,
            })?;
            print!("{r}");
            result(r.passed(), r.failure_summary())
        }
        Command::GrowSequence { seed_graph, steps, emit_dir } => {
            let seed = match seed_graph {
                Some(p) => load_graph(&p)?,
                None => Graph::complete(3)?,
            };
            let dir = out_dir(&emit_dir)?;
            let stages = grow(&seed, steps)?;
            for s in &stages {
                println!("STAGE {} p={} q={}", s.stage(), s.graph().p(), s.graph().q());
                if let Some(d) = dir {
                    write(&d.join(format!("stage_{}.graph", s.stage())), &s.graph().to_text())?;
                    write(&d.join(format!("stage_{}.labels", s.stage())), &labels_to_text(s))?;
                }
            }
            result(true, format!("stages={}", stages.len()))
        }
        Command::VerifyChain { dir, steps } => {
            let mut stages = Vec::new();
            for k in 0..=steps {
                let g = load_graph(&dir.join(format!("stage_{k}.graph")))?;
                let labels = load(&dir.join(format!("stage_{k}.labels")), labels_from_text)?;
                stages.push(LabeledStage::from_parts(g, labels, k)?);
            }
            let (links, composite) = verify_chain(&stages)?;
            let word = |b: bool| if b { "pass" } else { "fail" };
            for l in &links {
                println!("LINK {} fold={} collapse={}", l.step, word(l.fold_ok), word(l.collapse_ok));
            }
            println!("COMPOSITE {}", word(composite));
            let ok = composite && links.iter().all(|l| l.fold_ok);
            result(ok, format!("links={}", links.len()))
        }
        Command::Group(cmd) => run_group(cmd),
        Command::Lattice(cmd) => run_lattice(cmd),
        Command::Topcode(cmd) => run_topcode(cmd),
        Command::Oracle(cmd) => run_oracle(cmd),
        Command::RandomGraph { p, prob, seed } => {
            if !(0.0..=1.0).contains(&prob) {
                return Err(InputError(format!("probability {prob} outside [0,1]")));
            }
            let g = random_graph(p, prob, seed);
            print!("{}", g.to_text());
            result(true, format!("p={} q={}", g.p(), g.q()))
        }
    }
}

fn run_group(cmd: GroupCommand) -> Outcome {
    match cmd {
        GroupCommand::Generate { graph, coloring, modulus, out_dir: dir } => {
            let g = load_graph(&graph)?;
            let f = load_coloring(&coloring)?;
            let dir = out_dir(&dir)?;
            let grp = generate(&g, &f, modulus)?;
            for (i, e) in grp.elements().iter().enumerate() {
                print_block(format!("ELEMENT {}", i + 1), &e.to_text());
                if let Some(d) = dir {
                    write(&d.join(format!("element_{}.coloring", i + 1)), &e.to_text())?;
                }
            }
            result(true, format!("elements={modulus}"))
        }
        GroupCommand::Add { modulus, i, j, k } => {
            let l = add_index(i, j, k, modulus)?;
            result(true, l)
        }
        GroupCommand::Verify { graph, dir, modulus } => {
            let g = load_graph(&graph)?;
            let elements = (1..=modulus)
                .map(|i| load_coloring(&dir.join(format!("element_{i}.coloring"))))
                .collect::<Result<Vec<_>, _>>()?;
            let grp = GraphicGroup::from_parts(g, modulus, elements)?;
            let r = verify_every_zero(&grp);
            print!("{r}");
            result(r.passed(), r.failure_summary())
        }
    }
}

fn run_lattice(cmd: LatticeCommand) -> Outcome {
    match cmd {
        LatticeCommand::Build { element, base, out } => {
            let e = load(&element, LatticeElement::from_text)?;
            let base = base.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
            let g = build(&base, &e)?;
            match out {
                Some(p) => write(&p, &g.to_text())?,
                None => print!("{}", g.to_text()),
            }
            let a: Vec<String> = e.coefficients(base.len()).iter().map(usize::to_string).collect();
            result(true, format!("p={} q={} a=({})", g.p(), g.q(), a.join(",")))
        }
        LatticeCommand::HomCheck { element, source_base, target_base, maps } => {
            let e = load(&element, LatticeElement::from_text)?;
            let bg = source_base.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
            let bh = target_base.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
            let th = maps.iter().map(|p| load_map(p)).collect::<Result<Vec<_>, _>>()?;
            let r = lattice_hom(&bg, &bh, &th, &e)?;
            print_block("IMAGE", &r.image.to_text());
            println!("{}", map_line(&r.map));
            for (u, v) in &r.loops {
                println!("LOOP {u}-{v}");
            }
            let ok = check_hom(&r.source, &r.image, &r.map)?;
            result(r.verdict, format!("hom={ok} loops={}", r.loops.len()))
        }
    }
}

fn run_topcode(cmd: TopcodeCommand) -> Outcome {
    match cmd {
        TopcodeCommand::Encode { graph, coloring, wtype } => {
            let g = load_graph(&graph)?;
            let f = load_coloring(&coloring)?;
            let t = encode(&g, &f, wtype)?;
            print!("{t}");
            result(true, format!("q={}", t.q()))
        }
        TopcodeCommand::Decode { matrix, wtype, all, limit, out_dir: dir } => {
            let t = load(&matrix, TopcodeMatrix::from_text)?;
            let dir = out_dir(&dir)?;
            let cands = decode(&t, wtype, !all, limit.unwrap_or(usize::MAX))?;
            for (i, (g, f)) in cands.iter().enumerate() {
                println!("CANDIDATE {} p={} q={}", i + 1, g.p(), g.q());
                print_block("GRAPH", &g.to_text());
                print_block("COLORING", &f.to_text());
                if let Some(d) = dir {
                    write(&d.join(format!("candidate_{}.graph", i + 1)), &g.to_text())?;
                    write(&d.join(format!("candidate_{}.coloring", i + 1)), &f.to_text())?;
                }
            }
            result(!cands.is_empty(), format!("count={}", cands.len()))
        }
        TopcodeCommand::Stringify { matrix, order } => {
            let t = load(&matrix, TopcodeMatrix::from_text)?;
            let s = match order {
                Some(o) => to_string_ordered(&t, &o)?,
                None => to_string(&t),
            };
            println!("STRING {s}");
            result(true, format!("digits={}", s.len()))
        }
        TopcodeCommand::NsdSolve { string, q, wtype, canonical, limit } => {
            let sols = nsd_solve(&string, q, wtype, canonical, limit.unwrap_or(usize::MAX))?;
            for (i, s) in sols.iter().enumerate() {
                let w: Vec<String> = s.widths.iter().map(usize::to_string).collect();
                print_block(format!("SOLUTION {} widths={}", i + 1, w.join(",")), &s.matrix.to_text());
            }
            if sols.is_empty() {
                return result(false, "NoSolution");
            }
            result(true, format!("count={}", sols.len()))
        }
        TopcodeCommand::Pipeline { string, q, wtype, canonical, solution_limit, candidate_limit, pairing_limit } => {
            let limits = PipelineLimits { solutions: solution_limit, candidates: candidate_limit, pairings: pairing_limit };
            let out = nsd_pipeline(&string, q, wtype, canonical, limits)?;
            let mut homs = 0;
            for (i, r) in out.iter().enumerate() {
                print_block(format!("SOLUTION {}", i + 1), &r.solution.matrix.to_text());
                for (k, (g, _)) in r.candidates.iter().enumerate() {
                    println!("CANDIDATE {} p={} q={}", k + 1, g.p(), g.q());
                }
                for h in &r.homs {
                    println!("HOM {} -> {} {}", h.source + 1, h.target + 1, map_line(&h.map));
                }
                homs += r.homs.len();
            }
            result(!out.is_empty(), format!("solutions={} homs={homs}", out.len()))
        }
    }
}

fn run_oracle(cmd: OracleCommand) -> Outcome {
    match cmd {
        OracleCommand::Homs { g, h } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let homs = brute_force_homs(&g, &h);
            for m in &homs {
                println!("{}", map_line(m));
            }
            result(!homs.is_empty(), format!("count={}", homs.len()))
        }
        OracleCommand::Colorings { graph, wtype } => {
            let g = load_graph(&graph)?;
            let found = brute_force_colorings(&g, wtype)?;
            for (i, f) in found.iter().enumerate() {
                print_block(format!("COLORING {}", i + 1), &f.to_text());
            }
            result(!found.is_empty(), format!("count={}", found.len()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
