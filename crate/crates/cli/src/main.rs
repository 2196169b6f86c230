//! Batch command-line front end for the exactpoly toolkit.
//!
//! Every subcommand reads JSON files (or embedded fixtures via
//! `fixture:NAME`), writes deterministic JSON to stdout or `--output`, and
//! exits 0 when the queried property holds, 1 when it does not, and 2 on
//! any input or dimension error.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use exactpoly::ef::{check_ef_iff, check_ef_map, check_ef_standard, size_report};
use exactpoly::format::{self, PolyhedronFile};
use exactpoly::lp::{self, LpStatus, Sense};
use exactpoly::maps::{image, project_coords, AffineMap, CoordinateSplit};
use exactpoly::reduction::{
    check_graph_redundancy, is_bijective_on, verify_equivalence, ReductionInstance,
};
use exactpoly::{
    fixtures, is_redundant, remove_redundancy, Limits, Polyhedron, RVector, Rational,
};

#[derive(Parser)]
#[command(
    name = "exactpoly",
    version,
    about = "Exact rational polyhedral computation: conversions, projections, images, LP, extension checks, and LP reductions"
)]
struct Cli {
    /// Suppress the version banner printed to stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArg {
    /// Write the JSON payload here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a polyhedron file to the requested representation.
    Convert {
        /// Polyhedron file, or fixture:NAME.
        #[arg(short, long)]
        input: String,
        /// Target representation: h or v.
        #[arg(long, value_parser = ["h", "v"])]
        to: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Project a polyhedron onto a list of kept coordinates.
    Project {
        #[arg(short, long)]
        input: String,
        /// Comma-separated 0-based coordinate indices to keep, in order.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Image of a polyhedron under an affine map.
    Image {
        #[arg(short, long)]
        input: String,
        /// Affine map file, or fixture:NAME.
        #[arg(long)]
        map: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check the extended-formulation notions for an extension/target pair.
    CheckEf {
        /// Extension polyhedron file (halfspace representation is used).
        #[arg(long)]
        extension: String,
        /// Target polyhedron file.
        #[arg(long)]
        target: String,
        /// Kept coordinates defining the projection split.
        #[arg(long, value_delimiter = ',')]
        split_keep: Option<Vec<usize>>,
        /// Linear map file for the image notion.
        #[arg(long)]
        map: Option<String>,
        /// Allow a nonzero offset in the map (affine instead of linear).
        #[arg(long)]
        affine: bool,
        /// Run every notion plus the size report (needs both --split-keep
        /// and --map).
        #[arg(long)]
        all_definitions: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Minimize or maximize a linear objective over a polyhedron.
    Lp {
        #[arg(short, long)]
        input: String,
        /// Comma-separated objective to minimize.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "max")]
        min: Option<Vec<String>>,
        /// Comma-separated objective to maximize.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        max: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Run the full reduction pipeline on an instance file.
    Reduce {
        /// Reduction instance file, or fixture:NAME.
        #[arg(short, long)]
        input: String,
        /// Override the instance objective.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Remove redundancy, or test one inequality with --index.
    Redundancy {
        #[arg(short, long)]
        input: String,
        /// Test this inequality index instead of minimizing the system.
        #[arg(long)]
        index: Option<usize>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Report dimension, boundedness, and emptiness.
    Dimension {
        #[arg(short, long)]
        input: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// List or export the embedded fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Print the fixture names, one per line.
    List,
    /// Print one fixture payload.
    Export {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write every fixture as NAME.json into a directory.
    ExportAll {
        #[arg(long)]
        dir: PathBuf,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.quiet {
        eprintln!("exactpoly {}", env!("CARGO_PKG_VERSION"));
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(source: &str) -> Result<String, Failure> {
    if let Some(name) = source.strip_prefix("fixture:") {
        return fixtures::fixture_json(name)
            .ok_or_else(|| Failure(format!("unknown fixture {name:?}")));
    }
    fs::read_to_string(source).map_err(|e| Failure(format!("cannot read {source}: {e}")))
}

fn write_output(out: &OutputArg, payload: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, payload)
            .map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn load_polyhedron(source: &str) -> Result<Polyhedron, Failure> {
    Ok(format::parse_polyhedron(&read_input(source)?, &Limits::default())?)
}

fn load_map(source: &str) -> Result<AffineMap, Failure> {
    Ok(format::parse_affine_map(&read_input(source)?, &Limits::default())?)
}

fn parse_objective(parts: &[String]) -> Result<RVector, Failure> {
    let mut entries = Vec::with_capacity(parts.len());
    for p in parts {
        entries.push(Rational::from_str(p)?);
    }
    Ok(RVector::new(entries))
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Convert { input, to, out } => {
            let poly = load_polyhedron(&input)?;
            let file = match to.as_str() {
                "h" => PolyhedronFile::from_parts(poly.dim(), Some(poly.hrep()), None),
                _ => PolyhedronFile::from_parts(poly.dim(), None, Some(poly.vrep())),
            };
            write_output(&out, &format::to_json(&file))?;
            Ok(0)
        }
        Command::Project { input, keep, out } => {
            let poly = load_polyhedron(&input)?;
            let split = CoordinateSplit::new(poly.dim(), keep)?;
            let proj = project_coords(poly.hrep(), &split)?;
            let file = PolyhedronFile::from_parts(proj.dim(), Some(&proj), None);
            write_output(&out, &format::to_json(&file))?;
            Ok(0)
        }
        Command::Image { input, map, out } => {
            let poly = load_polyhedron(&input)?;
            let map = load_map(&map)?;
            let img = image(&poly, &map)?;
            let file = PolyhedronFile::from_parts(img.dim(), Some(img.hrep()), Some(img.vrep()));
            write_output(&out, &format::to_json(&file))?;
            Ok(0)
        }
        Command::CheckEf {
            extension,
            target,
            split_keep,
            map,
            affine,
            all_definitions,
            out,
        } => {
            let ext = load_polyhedron(&extension)?;
            let target = load_polyhedron(&target)?;
            if all_definitions && (split_keep.is_none() || map.is_none()) {
                return Err(Failure(
                    "--all-definitions needs both --split-keep and --map".into(),
                ));
            }
            if split_keep.is_none() && map.is_none() {
                return Err(Failure(
                    "pass --split-keep and/or --map to select the notion to check".into(),
                ));
            }
            let mut rep = report::CheckEfReport::default();
            let mut all_hold = true;
            if let Some(keep) = split_keep {
                let split = CoordinateSplit::new(ext.dim(), keep)?;
                let standard = check_ef_standard(ext.hrep(), &target, &split)?;
                let iff = check_ef_iff(ext.hrep(), &target, &split)?;
                all_hold &= standard.holds && iff.holds;
                rep.standard = Some(report::verdict(&standard));
                rep.iff = Some(report::verdict(&iff));
            }
            if let Some(map_spec) = map {
                let map = load_map(&map_spec)?;
                let by_map = check_ef_map(&ext, &target, &map, affine)?;
                all_hold &= by_map.holds;
                rep.map = Some(report::verdict(&by_map));
            }
            if all_definitions {
                rep.sizes = Some(report::sizes(&size_report(ext.hrep(), target.hrep())));
            }
            write_output(&out, &format::to_json(&rep))?;
            Ok(if all_hold { 0 } else { 1 })
        }
        Command::Lp {
            input,
            min,
            max,
            out,
        } => {
            let poly = load_polyhedron(&input)?;
            let (objective, sense) = match (min, max) {
                (Some(c), None) => (parse_objective(&c)?, Sense::Minimize),
                (None, Some(c)) => (parse_objective(&c)?, Sense::Maximize),
                _ => return Err(Failure("pass exactly one of --min or --max".into())),
            };
            let outcome = lp::optimize(poly.hrep(), &objective, sense)?;
            write_output(&out, &format::to_json(&report::lp_outcome(&outcome)))?;
            Ok(if outcome.status == LpStatus::Optimal { 0 } else { 1 })
        }
        Command::Reduce { input, alpha, out } => {
            let mut inst =
                format::parse_reduction_instance(&read_input(&input)?, &Limits::default())?;
            if let Some(parts) = alpha {
                inst = ReductionInstance::new(
                    inst.target.clone(),
                    inst.auxiliary.clone(),
                    inst.graph.clone(),
                    parse_objective(&parts)?,
                )?;
            }
            let equivalence = verify_equivalence(&inst)?;
            let target = inst.target.as_ref().expect("verified above");
            let redundant = check_graph_redundancy(target, &inst.auxiliary, &inst.graph)?;
            let bijective = is_bijective_on(target, &inst.auxiliary, &inst.graph)?;
            let rep = report::reduce(&inst, &equivalence, redundant, bijective);
            let ok = equivalence.all_agree();
            write_output(&out, &format::to_json(&rep))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Redundancy { input, index, out } => {
            let poly = load_polyhedron(&input)?;
            match index {
                Some(i) => {
                    let redundant = is_redundant(poly.hrep(), i)?;
                    write_output(
                        &out,
                        &format::to_json(&report::RedundancyVerdict { index: i, redundant }),
                    )?;
                    Ok(if redundant { 0 } else { 1 })
                }
                None => {
                    let reduced = remove_redundancy(poly.hrep());
                    let file = PolyhedronFile::from_parts(reduced.dim(), Some(&reduced), None);
                    write_output(&out, &format::to_json(&file))?;
                    Ok(0)
                }
            }
        }
        Command::Dimension { input, out } => {
            let poly = load_polyhedron(&input)?;
            let rep = report::DimensionReport {
                dim: poly.dimension(),
                ambient_dim: poly.dim(),
                bounded: poly.is_bounded(),
                empty: poly.is_empty(),
            };
            write_output(&out, &format::to_json(&rep))?;
            Ok(0)
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                for name in fixtures::FIXTURE_NAMES {
                    println!("{name}");
                }
                Ok(0)
            }
            FixturesAction::Export { name, out } => {
                let payload = fixtures::fixture_json(&name)
                    .ok_or_else(|| Failure(format!("unknown fixture {name:?}")))?;
                write_output(&out, &payload)?;
                Ok(0)
            }
            FixturesAction::ExportAll { dir } => {
                fs::create_dir_all(&dir)
                    .map_err(|e| Failure(format!("cannot create {}: {e}", dir.display())))?;
                for name in fixtures::FIXTURE_NAMES {
                    let payload = fixtures::fixture_json(name).expect("bundled name");
                    fs::write(dir.join(format!("{name}.json")), payload)
                        .map_err(|e| Failure(e.to_string()))?;
                }
                Ok(0)
            }
        },
    }
}
