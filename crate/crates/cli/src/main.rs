//! `yb`: build and verify Yang–Baxter operators from algebraic input files.
//!
//! Exit codes: 0 pass, 1 verification failure (a witness is printed),
//! 2 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use yb_core::algebras::{verify_3_leibniz, verify_leibniz, Algebra, CentralWitness};
use yb_core::coalgebra::{
    linearize_3rack, linearize_rack, threeleibniz_trilinear_rack, verify_coalgebra,
    verify_linear_rack, verify_trilinear_rack,
};
use yb_core::io::{self, AnyAlgebra, AnyRack, CoalgebraInput};
use yb_core::racks::{verify_finite_3rack, verify_finite_rack};
use yb_core::reference::{self, parse_subst};
use yb_core::repro::{self, ReproOptions, ReproTarget, FAST_BASE_DIM};
use yb_core::ybe::{self, compare_to_reference, YbeOperator};
use yb_core::{Error, Mat, VerificationReport};

#[derive(Parser)]
#[command(
    name = "yb",
    version,
    about = "Exact Yang–Baxter operators from Leibniz algebras, racks and coalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra, rack or coalgebra file.
    Verify {
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        json: bool,
    },
    /// Build an operator with a named builder and verify the braid relation.
    Build {
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        builder: Builder,
        #[arg(long)]
        json: bool,
        /// Check carriers with base dimension above 25.
        #[arg(long)]
        slow: bool,
    },
    /// Diff a built operator against a reference matrix file (JSON or CSV).
    Compare {
        reference: PathBuf,
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        builder: Builder,
        #[arg(long)]
        json: bool,
    },
    /// Run the scripted reproductions (all of them when no target is named).
    Reproduce {
        target: Option<String>,
        /// Parameter substitution for the 9×9 tables, e.g. `b1=2`.
        #[arg(long = "subst", value_name = "K=V")]
        subst: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        slow: bool,
    },
    /// Write an operator, or a diff report, to a file.
    Export {
        /// A reproduction target with a matrix, e.g. `matrix-25x25`.
        target: Option<String>,
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        builder: Option<Builder>,
        #[arg(long = "subst", value_name = "K=V")]
        subst: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Export the diff against the embedded reference instead of the matrix.
        #[arg(long)]
        diff: bool,
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Args, Default)]
struct Inputs {
    #[arg(long)]
    algebra: Option<PathBuf>,
    #[arg(long)]
    rack: Option<PathBuf>,
    #[arg(long)]
    coalgebra: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    /// Leibniz algebra whose first basis vector is central: y⊗x + e1⊗[x,y].
    CentralLeibniz,
    /// The linear rack on K⊕E of a Leibniz algebra E.
    LeibnizLinearRack,
    /// A linear rack from a coalgebra file, or a linearized binary rack.
    LinearRack,
    /// A trilinear rack from a coalgebra file, a linearized 3-rack, or a 3-Leibniz algebra.
    TrilinearRack,
    /// Closed form on (K⊕L)⊗(K⊕L) for a 3-Leibniz algebra L.
    TensorSquare,
    /// Closed form on K⊕(L⊗L) for a 3-Leibniz algebra L.
    Fundamental,
    /// Linearized set solution (x,y) ↦ (y, x◁y) of a binary rack.
    SetRack,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotACocycle(_)
            | Error::NotCentral(_)
            | Error::NotCocommutative(_)
            | Error::NotNilpotent { .. }
            | Error::Singular { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: yb_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        v => v,
    })
}

/// Exactly one loaded input file.
#[allow(clippy::large_enum_variant)]
enum Loaded {
    Algebra(AnyAlgebra),
    Rack(AnyRack),
    Coalgebra(CoalgebraInput),
}

fn load(input: &Inputs) -> Result<(Loaded, String), Failure> {
    let given = [&input.algebra, &input.rack, &input.coalgebra]
        .iter()
        .filter(|p| p.is_some())
        .count();
    if given != 1 {
        return Err(Failure::Input(
            "give exactly one of --algebra, --rack, --coalgebra".into(),
        ));
    }
    if let Some(p) = &input.algebra {
        let text = read(p)?;
        return Ok((
            Loaded::Algebra(with_path(p, io::algebra_from_json(&text))?),
            text,
        ));
    }
    if let Some(p) = &input.rack {
        let text = read(p)?;
        return Ok((Loaded::Rack(with_path(p, io::rack_from_json(&text))?), text));
    }
    let p = input.coalgebra.as_ref().expect("checked above");
    let text = read(p)?;
    Ok((
        Loaded::Coalgebra(with_path(p, io::coalgebra_from_json(&text))?),
        text,
    ))
}

fn emit_reports(reports: &[VerificationReport], json: bool) -> CliResult {
    if json {
        println!("{}", io::to_pretty_json(&reports).trim_end());
    } else {
        for r in reports {
            println!("{}", r.summary());
        }
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(Failure::Verification(r.summary())),
        None => Ok(()),
    }
}

fn verify(input: &Inputs, json: bool) -> CliResult {
    let (loaded, _) = load(input)?;
    let report = match &loaded {
        Loaded::Algebra(AnyAlgebra::Leibniz(a)) => verify_leibniz(a),
        Loaded::Algebra(AnyAlgebra::ThreeLeibniz(a)) => verify_3_leibniz(a),
        Loaded::Rack(AnyRack::Binary(r)) => verify_finite_rack(r),
        Loaded::Rack(AnyRack::Ternary(t)) => verify_finite_3rack(t),
        Loaded::Coalgebra(CoalgebraInput::Plain(c)) => verify_coalgebra(c),
        Loaded::Coalgebra(CoalgebraInput::Linear(l)) => verify_linear_rack(l),
        Loaded::Coalgebra(CoalgebraInput::Trilinear(t)) => verify_trilinear_rack(t),
    };
    emit_reports(&[report], json)
}

fn wrong_input(builder: &str, wants: &str) -> Failure {
    Failure::Input(format!("builder {builder} needs {wants}"))
}

fn build_operator(builder: Builder, loaded: &Loaded) -> Result<YbeOperator, Failure> {
    let op = match (builder, loaded) {
        (Builder::CentralLeibniz, Loaded::Algebra(AnyAlgebra::Leibniz(e))) => {
            ybe::solution_from_central_leibniz(e, &CentralWitness::unit(e.dim()))?
        }
        (Builder::CentralLeibniz, _) => {
            return Err(wrong_input("central-leibniz", "a Leibniz --algebra"))
        }
        (Builder::LeibnizLinearRack, Loaded::Algebra(AnyAlgebra::Leibniz(e))) => {
            ybe::solution_from_linear_rack(&yb_core::coalgebra::leibniz_linear_rack(e))?
        }
        (Builder::LeibnizLinearRack, _) => {
            return Err(wrong_input("leibniz-linear-rack", "a Leibniz --algebra"))
        }
        (Builder::LinearRack, Loaded::Coalgebra(CoalgebraInput::Linear(l))) => {
            ybe::solution_from_linear_rack(l)?
        }
        (Builder::LinearRack, Loaded::Rack(AnyRack::Binary(r))) => {
            ybe::solution_from_linear_rack(&linearize_rack(r)?)?
        }
        (Builder::LinearRack, _) => {
            return Err(wrong_input(
                "linear-rack",
                "a --coalgebra with op/tilde or a binary --rack",
            ))
        }
        (Builder::TrilinearRack, Loaded::Coalgebra(CoalgebraInput::Trilinear(t))) => {
            ybe::solution_from_trilinear_rack(t)?
        }
        (Builder::TrilinearRack, Loaded::Rack(AnyRack::Ternary(t))) => {
            ybe::solution_from_trilinear_rack(&linearize_3rack(t)?)?
        }
        (Builder::TrilinearRack, Loaded::Algebra(AnyAlgebra::ThreeLeibniz(l))) => {
            ybe::solution_from_trilinear_rack(&threeleibniz_trilinear_rack(l))?
        }
        (Builder::TrilinearRack, _) => {
            return Err(wrong_input(
                "trilinear-rack",
                "a --coalgebra with t/ttilde, a ternary --rack or a 3-Leibniz --algebra",
            ))
        }
        (Builder::TensorSquare, Loaded::Algebra(AnyAlgebra::ThreeLeibniz(l))) => {
            ybe::solution_3lei_tensor_square(l)
        }
        (Builder::TensorSquare, _) => {
            return Err(wrong_input("tensor-square", "a 3-Leibniz --algebra"))
        }
        (Builder::Fundamental, Loaded::Algebra(AnyAlgebra::ThreeLeibniz(l))) => {
            ybe::solution_3lei_fundamental(l)
        }
        (Builder::Fundamental, _) => {
            return Err(wrong_input("fundamental", "a 3-Leibniz --algebra"))
        }
        (Builder::SetRack, Loaded::Rack(AnyRack::Binary(r))) => ybe::solution_from_set_rack(r),
        (Builder::SetRack, _) => return Err(wrong_input("set-rack", "a binary --rack")),
    };
    Ok(op)
}

fn build(input: &Inputs, builder: Builder, json: bool, slow: bool) -> CliResult {
    let (loaded, source) = load(input)?;
    let op = build_operator(builder, &loaded)?;
    let report = if op.base_dim() <= FAST_BASE_DIM || slow {
        Some(op.verify())
    } else {
        None
    };
    if json {
        println!(
            "{}",
            io::operator_to_json(&op, source.as_bytes()).trim_end()
        );
    } else {
        println!("{}", op.matrix());
    }
    match report {
        Some(r) => {
            if !json {
                println!("{}", r.summary());
            }
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Verification(r.summary()))
            }
        }
        None => {
            eprintln!(
                "braid relation not checked: base dimension {} > {FAST_BASE_DIM} (use --slow)",
                op.base_dim()
            );
            Ok(())
        }
    }
}

fn read_matrix(path: &Path) -> Result<Mat, Failure> {
    let text = read(path)?;
    let parsed = if path.extension().is_some_and(|e| e == "csv") {
        io::mat_from_csv(&text)
    } else if text.contains("\"provenance\"") {
        // An exported operator file.
        io::operator_from_json(&text).map(YbeOperator::into_matrix)
    } else {
        io::mat_from_json(&text)
    };
    with_path(path, parsed)
}

fn compare(reference: &Path, input: &Inputs, builder: Builder, json: bool) -> CliResult {
    let (loaded, _) = load(input)?;
    let op = build_operator(builder, &loaded)?;
    let diff = compare_to_reference(&op, &read_matrix(reference)?)?;
    if json {
        println!("{}", io::diff_to_json(&diff).trim_end());
    } else if diff.is_match() {
        println!("MATCH reference");
    } else {
        for c in &diff.cells {
            println!(
                "({},{}): computed {}, reference {}",
                c.row, c.col, c.computed, c.reference
            );
        }
        println!("{} of {} columns match", diff.matching_columns, diff.cols);
    }
    if diff.is_match() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} cells differ",
            diff.cells.len()
        )))
    }
}

fn reproduce(target: Option<&str>, subst: &[String], json: bool, slow: bool) -> CliResult {
    let opts = ReproOptions {
        subst: parse_subst(subst.iter().map(String::as_str))?,
        slow,
    };
    let targets = match target {
        None | Some("all") => ReproTarget::all(),
        Some(name) => vec![ReproTarget::from_name(name)?],
    };
    let mut outcomes = Vec::new();
    for t in targets {
        outcomes.push(repro::run(t, &opts)?);
    }
    if json {
        println!("{}", io::to_pretty_json(&outcomes).trim_end());
    } else {
        for o in &outcomes {
            print!("{}", o.render());
        }
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.target.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "failed targets: {}",
            failed.join(", ")
        )))
    }
}

#[allow(clippy::too_many_arguments)]
fn export(
    target: Option<&str>,
    input: &Inputs,
    builder: Option<Builder>,
    subst: &[String],
    format: Format,
    diff: bool,
    out: &Path,
) -> CliResult {
    let (op, source, reference) = match (target, builder) {
        (Some(name), None) => {
            let t = ReproTarget::from_name(name)?;
            let subst = parse_subst(subst.iter().map(String::as_str))?;
            let (op, table) = match t {
                ReproTarget::Matrix4x4 => (repro::build_4x4()?, reference::matrix_4x4()),
                ReproTarget::Matrix9x9(v) => {
                    let s = repro::effective_subst(v, &subst)?;
                    (repro::build_9x9(v, &s)?, reference::matrix_9x9(v, &s)?)
                }
                ReproTarget::Matrix25x25 => (repro::build_25x25(), reference::matrix_25x25()),
                _ => {
                    return Err(Failure::Input(format!(
                        "target {name} has no matrix to export"
                    )))
                }
            };
            let source = io::mat_to_csv(&table);
            (op, source, Some(table))
        }
        (None, Some(b)) => {
            let (loaded, source) = load(input)?;
            (build_operator(b, &loaded)?, source, None)
        }
        _ => {
            return Err(Failure::Input(
                "export needs either a target name or --builder with an input file".into(),
            ))
        }
    };
    let text = if diff {
        let Some(table) = reference else {
            return Err(Failure::Input("--diff needs a reproduction target".into()));
        };
        let d = if matches!(target, Some("matrix-25x25")) {
            repro::diff_25x25(&op)?
        } else {
            compare_to_reference(&op, &table)?
        };
        io::diff_to_json(&d)
    } else {
        match format {
            Format::Json => io::operator_to_json(&op, source.as_bytes()),
            Format::Csv => io::mat_to_csv(op.matrix()),
        }
    };
    write(out, &text)
}

fn configure_threads() -> CliResult {
    if let Ok(v) = std::env::var("YB_THREADS") {
        let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            Failure::Input(format!("YB_THREADS must be a positive integer, got {v:?}"))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    configure_threads()?;
    match &cli.command {
        Command::Verify { input, json } => verify(input, *json),
        Command::Build {
            input,
            builder,
            json,
            slow,
        } => build(input, *builder, *json, *slow),
        Command::Compare {
            reference,
            input,
            builder,
            json,
        } => compare(reference, input, *builder, *json),
        Command::Reproduce {
            target,
            subst,
            json,
            slow,
        } => reproduce(target.as_deref(), subst, *json, *slow),
        Command::Export {
            target,
            input,
            builder,
            subst,
            format,
            diff,
            out,
        } => export(
            target.as_deref(),
            input,
            *builder,
            subst,
            *format,
            *diff,
            out,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
