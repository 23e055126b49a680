//! cs-lab: enumeration, counting, verification and rendering for k-Catalan
//! paths and their Spitzer permutations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod svg;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catalan_spitzer::action::{orbit_series, orbits, PermClass};
use catalan_spitzer::lattice::{
    enumerate_bridges, enumerate_catalan, fuss_catalan, steps_above_axis, up_steps_below_axis,
    LatticePath, PathKind,
};
use catalan_spitzer::series::{continuant_ones, t_series, type_count};
use catalan_spitzer::spitzer::{
    full_csp, path_type, reconstruct, short_csp, Permutation, TypeVector,
};

#[derive(Parser)]
#[command(
    name = "cs-lab",
    version,
    about = "Exact combinatorics of k-Catalan paths and Catalan-Spitzer permutations",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error.\n\
                  CS_LAB_THREADS caps worker threads for the orbit census."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    All,
    ShortCsp,
    ShortKCsp,
}

#[derive(Subcommand)]
enum Command {
    /// Stream k-Catalan paths (or bridges) of order n in lexicographic order
    Enumerate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        /// Enumerate unconstrained bridges instead of Catalan paths
        #[arg(long)]
        bridges: bool,
        /// text: one U/D word per line; csv: index,k,kind,steps; json: one object per line
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Count paths, optionally refined by a statistic
    Count {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        /// Table of augmented-path counts per type vector
        #[arg(long)]
        by_type: bool,
        /// Table of bridge counts per number of up steps below the axis
        #[arg(long)]
        by_below_axis: bool,
        /// Table of bridge counts per number of steps above the axis (k=2)
        #[arg(long)]
        by_above_axis: bool,
    },
    /// Full or short Catalan-Spitzer permutation of a path, or the inverse
    Perm {
        #[arg(long)]
        k: u32,
        /// Path as a U/D word (augmented or Catalan; counts decide)
        #[arg(long)]
        path: Option<String>,
        /// Emit the short permutation instead of the full one
        #[arg(long)]
        short: bool,
        /// Rebuild the Catalan path from a short permutation
        #[arg(long)]
        reconstruct: bool,
        /// Comma-separated one-line notation, e.g. 2,4,7,1,3,6,8,9,5
        #[arg(long)]
        perm: Option<String>,
    },
    /// Number of augmented paths of a given type vector
    Types {
        #[arg(long)]
        k: u32,
        /// Comma-separated level counts, e.g. 3,2,3,3,1,1
        #[arg(long)]
        vec: String,
    },
    /// Type generating function coefficients, or continuant tables
    Genfun {
        #[arg(long)]
        k: u32,
        /// Number of variables of T_k
        #[arg(long)]
        r: Option<usize>,
        /// Total-degree truncation of the expansion
        #[arg(long)]
        deg: Option<u32>,
        /// Tabulate K_{k,m}(1,...,1) for m = 0..=n instead
        #[arg(long)]
        continuant: bool,
        #[arg(long)]
        n: Option<usize>,
        /// All-ones evaluation (required with --continuant)
        #[arg(long)]
        ones: bool,
    },
    /// Orbits of the restricted Foata-Strehl action on a permutation class
    Orbits {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Parameter for --class short-k-csp
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: usize,
        /// Print P/O/P(x,y)/O(x,y) tables up to degree --deg instead
        #[arg(long)]
        series: bool,
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite; prints one line per case
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        /// Size cap (meaning depends on the suite; capped at the exhaustive bound)
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Emit an SVG drawing of a path or of a Foata-Strehl tree
    Render {
        /// Path as a U/D word (requires --k)
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        /// Permutation word whose Foata-Strehl tree is drawn
        #[arg(long)]
        tree: Option<String>,
        /// Output file, or - for stdout
        #[arg(long)]
        svg: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn thread_cap() -> usize {
    if let Ok(text) = std::env::var("CS_LAB_THREADS") {
        if let Ok(parsed) = text.trim().parse::<usize>() {
            return parsed.max(1);
        }
    }
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Enumerate {
            k,
            n,
            bridges,
            format,
        } => {
            check_k(k)?;
            let paths = if bridges {
                enumerate_bridges(n, k)
            } else {
                enumerate_catalan(n, k)
            };
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            if format == Format::Csv {
                writeln!(out, "index,k,kind,steps").map_err(io_err)?;
            }
            for (index, path) in paths.enumerate() {
                match format {
                    Format::Text => writeln!(out, "{path}").map_err(io_err)?,
                    Format::Csv => writeln!(
                        out,
                        "{index},{},{},{}",
                        path.k(),
                        path.kind(),
                        path.steps_string()
                    )
                    .map_err(io_err)?,
                    Format::Json => {
                        let line = serde_json::to_string(&path).map_err(|e| e.to_string())?;
                        writeln!(out, "{line}").map_err(io_err)?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            k,
            n,
            by_type,
            by_below_axis,
            by_above_axis,
        } => {
            check_k(k)?;
            let selected = [by_type, by_below_axis, by_above_axis]
                .iter()
                .filter(|&&b| b)
                .count();
            if selected > 1 {
                return Err(
                    "choose at most one of --by-type, --by-below-axis, --by-above-axis".into(),
                );
            }
            if by_type {
                let mut census: std::collections::BTreeMap<TypeVector, u64> =
                    std::collections::BTreeMap::new();
                for path in enumerate_catalan(n, k) {
                    let tv = path_type(&path.augment().map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    *census.entry(tv).or_default() += 1;
                }
                println!("# type count");
                for (tv, count) in census {
                    println!("{tv} {count}");
                }
            } else if by_below_axis {
                let mut histogram: std::collections::BTreeMap<usize, u64> =
                    std::collections::BTreeMap::new();
                for bridge in enumerate_bridges(n, k) {
                    *histogram
                        .entry(up_steps_below_axis(&bridge).map_err(|e| e.to_string())?)
                        .or_default() += 1;
                }
                println!("# below_ups count");
                for r in 0..=(k as usize - 1) * n {
                    println!("{r} {}", histogram.get(&r).copied().unwrap_or(0));
                }
            } else if by_above_axis {
                if k != 2 {
                    return Err("--by-above-axis requires --k 2".into());
                }
                let mut histogram: std::collections::BTreeMap<usize, u64> =
                    std::collections::BTreeMap::new();
                for bridge in enumerate_bridges(n, k) {
                    *histogram
                        .entry(steps_above_axis(&bridge).map_err(|e| e.to_string())?)
                        .or_default() += 1;
                }
                println!("# above_steps count");
                for r in 0..=n {
                    println!(
                        "{} {}",
                        2 * r,
                        histogram.get(&(2 * r)).copied().unwrap_or(0)
                    );
                }
            } else {
                println!("{}", fuss_catalan(n as u64, k));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Perm {
            k,
            path,
            short,
            reconstruct: do_reconstruct,
            perm,
        } => {
            check_k(k)?;
            if do_reconstruct {
                let text = perm.ok_or("--reconstruct requires --perm")?;
                let short_perm = Permutation::parse(&text).map_err(|e| e.to_string())?;
                let path = reconstruct(&short_perm, k).map_err(|e| e.to_string())?;
                println!("{path}");
                return Ok(ExitCode::SUCCESS);
            }
            let text = path.ok_or("--path is required (or use --reconstruct)")?;
            // Step counts distinguish augmented words from Catalan words.
            let parsed = LatticePath::parse(k, PathKind::Augmented, &text)
                .or_else(|_| LatticePath::parse(k, PathKind::Catalan, &text))
                .map_err(|e| e.to_string())?;
            let result = if short {
                let catalan = match parsed.kind() {
                    PathKind::Augmented => {
                        parsed.strip_augmentation().map_err(|e| e.to_string())?
                    }
                    _ => parsed,
                };
                short_csp(&catalan).map_err(|e| e.to_string())?
            } else {
                let augmented = match parsed.kind() {
                    PathKind::Augmented => parsed,
                    _ => parsed.augment().map_err(|e| e.to_string())?,
                };
                full_csp(&augmented).map_err(|e| e.to_string())?
            };
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Types { k, vec } => {
            check_k(k)?;
            let counts = parse_u64_list(&vec)?;
            let tv = TypeVector::new(counts).map_err(|e| e.to_string())?;
            println!("{}", type_count(&tv, k));
            Ok(ExitCode::SUCCESS)
        }
        Command::Genfun {
            k,
            r,
            deg,
            continuant,
            n,
            ones,
        } => {
            check_k(k)?;
            if continuant {
                if !ones {
                    return Err("--continuant currently requires --ones".into());
                }
                let n = n.ok_or("--continuant requires --n")?;
                println!("# m K_{{{k},m}}(1,...,1)");
                for m in 0..=n {
                    println!("{m} {}", continuant_ones(k, m));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let r = r.ok_or("--r is required (or use --continuant)")?;
            if r == 0 {
                return Err("--r must be at least 1".into());
            }
            let deg = deg.ok_or("--deg is required")?;
            let series = t_series(k, r, deg);
            println!("# T_{k} in x1..x{r} up to total degree {deg}");
            for (exps, coef) in series.poly().terms_graded_lex() {
                println!("{} {coef}", monomial_string(exps));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits {
            class,
            k,
            n,
            series,
            deg,
            format,
        } => {
            let class = build_class(class, k)?;
            if series {
                let deg = deg.unwrap_or(n);
                let series = orbit_series(&class, deg, thread_cap()).map_err(|e| e.to_string())?;
                print!("{}", render_orbit_series(&series, deg));
                return Ok(ExitCode::SUCCESS);
            }
            let records = orbits(&class, n).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    for record in &records {
                        println!(
                            "{}",
                            serde_json::to_string(record).map_err(|e| e.to_string())?
                        );
                    }
                }
                _ => {
                    for record in &records {
                        let flips: Vec<String> =
                            record.flip_indices.iter().map(|i| i.to_string()).collect();
                        println!(
                            "rep={} I={{{}}} size={}",
                            record.rep,
                            flips.join(","),
                            record.size
                        );
                    }
                    println!("# orbits={}", records.len());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max } => {
            let outcome = verify::run_suite(suite, max, thread_cap());
            for line in &outcome.lines {
                println!("{line}");
            }
            if let Some(message) = &outcome.failure {
                println!("FAIL: {message}");
                Ok(ExitCode::from(1))
            } else {
                println!("suite {}: PASS", suite.name());
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Render { path, k, tree, svg } => {
            let drawing = match (path, tree) {
                (Some(word), None) => {
                    let k = k.ok_or("--path requires --k")?;
                    check_k(k)?;
                    let parsed = LatticePath::parse(k, PathKind::Catalan, &word)
                        .or_else(|_| LatticePath::parse(k, PathKind::Augmented, &word))
                        .or_else(|_| LatticePath::parse(k, PathKind::Bridge, &word))
                        .map_err(|e| e.to_string())?;
                    svg::path_svg(&parsed)
                }
                (None, Some(word)) => {
                    let perm = Permutation::parse(&word).map_err(|e| e.to_string())?;
                    let tree = catalan_spitzer::fstree::FsTree::build(&perm.as_word())
                        .map_err(|e| e.to_string())?;
                    svg::tree_svg(&tree)
                }
                _ => return Err("provide exactly one of --path or --tree".into()),
            };
            if svg == "-" {
                print!("{drawing}");
            } else {
                std::fs::write(&svg, drawing).map_err(|e| format!("writing {svg}: {e}"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_k(k: u32) -> Result<(), String> {
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    Ok(())
}

fn io_err(err: std::io::Error) -> String {
    format!("writing output: {err}")
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid entry {t:?} in list"))
        })
        .collect()
}

fn monomial_string(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_owned()
    } else {
        factors.join("*")
    }
}

fn build_class(class: ClassArg, k: Option<u32>) -> Result<PermClass, String> {
    match class {
        ClassArg::All => Ok(PermClass::all()),
        ClassArg::ShortCsp => Ok(PermClass::short_csp()),
        ClassArg::ShortKCsp => {
            let k = k.ok_or("--class short-k-csp requires --k")?;
            check_k(k)?;
            Ok(PermClass::short_k_csp(k))
        }
    }
}

fn render_orbit_series(series: &catalan_spitzer::action::OrbitSeries, deg: usize) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let p: Vec<String> = (1..=deg).map(|n| series.p.coeff(n).to_string()).collect();
    let o: Vec<String> = (1..=deg).map(|n| series.o.coeff(n).to_string()).collect();
    let _ = writeln!(out, "P: {}", p.join(","));
    let _ = writeln!(out, "O: {}", o.join(","));
    let _ = writeln!(out, "P(x,y):");
    for n in 1..=deg {
        let _ = writeln!(out, "  x^{n}: {}", series.pxy.coeff(n));
    }
    let _ = writeln!(out, "O(x,y):");
    for n in 1..=deg {
        let _ = writeln!(out, "  x^{n}: {}", series.oxy.coeff(n));
    }
    out
}
