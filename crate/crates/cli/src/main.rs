use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clawchroma::colorer::{class_color, omega_color_strict};
use clawchroma::coloring::{verify_proper, Properness};
use clawchroma::dimacs::{parse_coloring, parse_dimacs, write_coloring, write_dimacs};
use clawchroma::generators::{blown_up_odd_cycle, random_in_class, wheel};
use clawchroma::recognition::{is_in_class, ForbiddenWitness, Membership};
use clawchroma::report::{classify_trichotomy, emit_report};
use clawchroma::stress::{run_stress, StressMode, StressOptions};
use clawchroma::{Error, Graph};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "clawchroma", version, about = "Coloring tools for {claw, (K2+K1)+K2}-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership of a DIMACS graph.
    Check { file: PathBuf },
    /// Color an in-class graph; prints `v <vertex> <color>` lines.
    Color {
        file: PathBuf,
        /// Require Δ ≤ 2ω − 3 and an ω-coloring.
        #[arg(long)]
        strict_omega: bool,
    },
    /// Trichotomy report for a graph.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Where counterexample dumps go if a claim fails.
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
    },
    /// Write a generated graph as DIMACS.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Sweep graphs and check every claim on each.
    Stress {
        #[arg(long, value_name = "MAX_N", conflicts_with = "random", required_unless_present = "random")]
        exhaustive: Option<usize>,
        #[arg(long, num_args = 4, value_names = ["N_LO", "N_HI", "SAMPLES", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
    },
    /// Check a coloring file against a graph.
    Verify { graph_file: PathBuf, coloring_file: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Hub joined to a k-cycle.
    Wheel { k: usize },
    /// C_{2n+1} with alternate positions blown up to K_m.
    Blowup { n: usize, m: usize },
    /// First in-class G(n, p) draw from the seed.
    Random {
        n: usize,
        p: f64,
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_tries: usize,
    },
}

enum Failure {
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClaimViolation(m) => Failure::Violation(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { file } => check(&file),
        Command::Color { file, strict_omega } => color(&file, strict_omega),
        Command::Report { file, json, dump_dir } => report(&file, json, &dump_dir),
        Command::Gen { family } => gen(family),
        Command::Stress { exhaustive, random, dump_dir } => stress(exhaustive, random, &dump_dir),
        Command::Verify { graph_file, coloring_file } => verify(&graph_file, &coloring_file),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("claim violation: {m}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let parsed = parse_dimacs(&read_text(path)?)?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

fn describe_witness(w: &ForbiddenWitness) -> String {
    let vs: Vec<String> = w.vertices().iter().map(|v| (v + 1).to_string()).collect();
    match w {
        ForbiddenWitness::Claw { .. } => format!("claw center {} leaves {}", vs[0], vs[1..].join(" ")),
        ForbiddenWitness::W { .. } => {
            format!("w edge {} {} isolated {} joined edge {} {}", vs[0], vs[1], vs[2], vs[3], vs[4])
        }
    }
}

fn check(file: &Path) -> CmdResult {
    let g = load_graph(file)?;
    match is_in_class(&g) {
        Membership::InClass => println!("in_class"),
        Membership::Excluded(w) => println!("excluded {}", describe_witness(&w)),
    }
    Ok(())
}

fn color(file: &Path, strict: bool) -> CmdResult {
    let g = load_graph(file)?;
    let (coloring, _) = if strict { omega_color_strict(&g)? } else { class_color(&g)? };
    print!("c colors_used {}\n{}", coloring.colors_used(), write_coloring(&coloring));
    Ok(())
}

fn report(file: &Path, json: bool, dump_dir: &Path) -> CmdResult {
    let g = load_graph(file)?;
    let r = classify_trichotomy(&g)?;
    let text = emit_report(&r);
    if json {
        print!("{text}");
    } else {
        println!("in_class {}", r.membership.is_in_class());
        if let Some(w) = r.membership.witness() {
            println!("witness {}", describe_witness(&w));
        }
        println!("omega {}\ndelta {}\nchi {}", r.omega, r.delta, r.chi);
        println!("branch {}", serde_json::to_value(r.branch).unwrap().as_str().unwrap());
        if let Some(w6) = &r.w6_witness {
            let vs: Vec<String> = w6.iter().map(|v| (v + 1).to_string()).collect();
            println!("w6_witness {}", vs.join(" "));
        }
        if let Some(c) = &r.coloring {
            println!("colors_used {}", c.colors_used());
        }
    }
    if !r.violations.is_empty() {
        dump(dump_dir, "counterexample", &g, &text)?;
        return Err(Failure::Violation(format!("{} claim(s) failed on {}", r.violations.len(), file.display())));
    }
    Ok(())
}

fn dump(dir: &Path, stem: &str, g: &Graph, json: &str) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let col = dir.join(format!("{stem}.col"));
    let js = dir.join(format!("{stem}.json"));
    for (path, body) in [(&col, write_dimacs(g, &["counterexample"])), (&js, json.to_string())] {
        fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    eprintln!("counterexample written to {} and {}", col.display(), js.display());
    Ok(())
}

fn gen(family: Family) -> CmdResult {
    let (g, label) = match family {
        Family::Wheel { k } => (wheel(k)?, format!("wheel {k}")),
        Family::Blowup { n, m } => (blown_up_odd_cycle(n, m)?, format!("blowup {n} {m}")),
        Family::Random { n, p, seed, max_tries } => match random_in_class(n, p, seed, max_tries)? {
            Some(g) => (g, format!("random {n} {p} {seed} splitmix64")),
            None => {
                return Err(Failure::Input(format!("no in-class graph in {max_tries} draws")));
            }
        },
    };
    print!("{}", write_dimacs(&g, &[&label]));
    Ok(())
}

fn stress(exhaustive: Option<usize>, random: Option<Vec<u64>>, dump_dir: &Path) -> CmdResult {
    let mode = match (exhaustive, random) {
        (Some(max_n), _) => StressMode::Exhaustive { max_n },
        (None, Some(v)) => {
            StressMode::Random { n_lo: v[0] as usize, n_hi: v[1] as usize, samples: v[2] as usize, seed: v[3] }
        }
        (None, None) => return Err(Failure::Input("pass --exhaustive or --random".into())),
    };
    let summary = run_stress(&mode, StressOptions::from_env()?)?;
    print!("{}", summary.to_json());
    eprintln!("wall time {:.2}s", summary.wall_time.as_secs_f64());
    if summary.is_clean() {
        return Ok(());
    }
    for (i, cx) in summary.tally.counterexamples.iter().enumerate() {
        let g = cx.graph();
        let json = classify_trichotomy(&g).map(|r| emit_report(&r)).unwrap_or_default();
        dump(dump_dir, &format!("counterexample_{i}"), &g, &json)?;
    }
    Err(Failure::Violation(format!("{} violation(s)", summary.tally.total_violations())))
}

fn verify(graph_file: &Path, coloring_file: &Path) -> CmdResult {
    let g = load_graph(graph_file)?;
    let c = parse_coloring(&read_text(coloring_file)?, g.vertex_count())?;
    match verify_proper(&g, &c)? {
        Properness::Proper => {
            println!("proper colors_used {}", c.colors_used());
            Ok(())
        }
        Properness::Improper(u, v) => {
            println!("improper edge {} {}", u + 1, v + 1);
            Err(Failure::Violation(format!("edge {} {} is monochromatic", u + 1, v + 1)))
        }
    }
}
