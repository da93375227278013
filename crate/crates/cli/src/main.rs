//! Experiment driver: ladder profiling, adaptive/ordered convergence
//! runs, cost-bound curves, rule export and a self-check suite.
//!
//! Outputs are flat CSV files named after the run parameters, written
//! atomically (temp file + rename). Exit codes: 0 success, 2 config
//! error, 3 data error, 4 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spherequad::assembly::{materialize, verify_error};
use spherequad::da::{run_da, DaTrace, DownsetEnumeration, RunLimits};
use spherequad::design::{
    build_ladder, builtin_ladder, builtin_ladder_depth, load_manifest, verify_strength,
    DesignLadder,
};
use spherequad::kernel::{KernelParams, SpaceParams};
use spherequad::rules::{calibrate, qmc_error, CalibrationResult, LadderGram, LadderProfile};
use spherequad::ww::{run_ww, ww_cost_bound_eta_min, WwParams};
use spherequad::{Error, MultiIndex};

#[derive(Parser)]
#[command(
    name = "spherequad",
    about = "Sparse-grid quadrature experiments on products of the unit sphere",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Profile the single-sphere ladder and calibrate decay constants.
    Profile(CommonArgs),
    /// Produce convergence curves (Cost,Error rows per greedy step).
    Run(RunArgs),
    /// Export the eta-minimized cost-bound curve over a log grid of eps.
    Bound(RunArgs),
    /// Run the self-check suite (designs, solves, assembled errors,
    /// optimality) and exit nonzero on failure.
    Verify(CommonArgs),
    /// Materialize a rule for the target error and export its points
    /// and weights.
    Assemble(AssembleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Da,
    Ww,
    Both,
}

impl Algo {
    fn label(&self) -> &'static str {
        match self {
            Algo::Da => "da",
            Algo::Ww => "ww",
            Algo::Both => "both",
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Smoothness exponent of the kernel (must exceed 3/2).
    #[arg(long, default_value_t = 3.0)]
    r: f64,
    /// Ladder source: "builtin" or a manifest file path.
    #[arg(long, default_value = "builtin")]
    ladder: String,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Weight decay base: gamma_k = g^k.
    #[arg(long, default_value_t = 0.5)]
    g: f64,
    /// Number of sphere factors (1..=16).
    #[arg(long, default_value_t = 4)]
    d: usize,
    /// Target quadrature error in (0, 1).
    #[arg(long, default_value_t = 1e-6)]
    eps: f64,
    /// Budget on the total number of quadrature points.
    #[arg(long, default_value_t = 100_000)]
    max_points: u64,
    /// Cap on the 1-norm of selected indices.
    #[arg(long, default_value_t = 20)]
    max_norm: u32,
    /// Which index-selection strategy to run.
    #[arg(long, value_enum, default_value_t = Algo::Both)]
    algo: Algo,
    /// Interpolation parameter for the ordered variant's cutoff.
    #[arg(long, default_value_t = 0.5)]
    eta: f64,
}

#[derive(Args)]
struct AssembleArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Cap on the number of expanded grid tuples.
    #[arg(long, default_value_t = 10_000_000)]
    grid_cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Profile(args) => cmd_profile(&args),
        Command::Run(args) => cmd_run(&args),
        Command::Bound(args) => cmd_bound(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Assemble(args) => cmd_assemble(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_)
        | Error::Contract(_)
        | Error::Capability(_)
        | Error::Capacity(_)
        | Error::Admissibility(_)
        | Error::Exhausted(_) => 2,
        Error::Load { .. } | Error::Ladder(_) | Error::Io(_) => 3,
    }
}

fn resolve_ladder(spec: &str) -> Result<DesignLadder, Error> {
    if spec == "builtin" {
        builtin_ladder(builtin_ladder_depth())
    } else {
        build_ladder(load_manifest(spec)?)
    }
}

/// Writes through a temp file in the target directory, then renames.
fn write_atomic(dir: &Path, name: &str, content: &str) -> Result<PathBuf, Error> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".tmp-{name}"));
    std::fs::write(&tmp, content)?;
    let target = dir.join(name);
    std::fs::rename(&tmp, &target)?;
    Ok(target)
}

fn fmt_g(g: f64) -> String {
    format!("{g}")
}

fn cmd_profile(args: &CommonArgs) -> Result<ExitCode, Error> {
    let ladder = resolve_ladder(&args.ladder)?;
    for w in ladder.warnings() {
        eprintln!("warning: {w}");
    }
    let params = KernelParams::new(args.r, 1.0)?;
    let gram = LadderGram::new(&ladder, args.r, params.truncation_tol())?;
    let profile = gram.profile(1.0)?;
    let cal = calibrate(&profile, args.r)?;
    let mut csv = profile.to_csv();
    csv.push_str(&format!(
        "# calibration: C={:.16e} D={:.16e} rho={:.16e} criteria_ok={}\n",
        cal.c, cal.d, cal.rho, cal.criteria_ok
    ));
    let name = format!("profile-r{}.csv", args.r);
    let path = write_atomic(&args.out, &name, &csv)?;
    println!("wrote {}", path.display());
    println!(
        "calibration: C = {:.6}, D = {:.6}, rho = {:.6}",
        cal.c, cal.d, cal.rho
    );
    Ok(ExitCode::SUCCESS)
}

struct Experiment {
    space: SpaceParams,
    profiles: Vec<LadderProfile>,
    ladder: DesignLadder,
    calibration: CalibrationResult,
    limits: RunLimits,
}

fn prepare(args: &RunArgs) -> Result<Experiment, Error> {
    if args.d < 1 || args.d > 16 {
        return Err(Error::Contract(format!(
            "dimension must lie in 1..=16, got {}",
            args.d
        )));
    }
    if !(args.g > 0.0 && args.g <= 1.0) {
        return Err(Error::Contract(format!(
            "decay base g must lie in (0, 1], got {}",
            args.g
        )));
    }
    let ladder = resolve_ladder(&args.common.ladder)?;
    for w in ladder.warnings() {
        eprintln!("warning: {w}");
    }
    let space = SpaceParams::geometric(args.common.r, args.g, args.d)?;
    let gram = LadderGram::new(&ladder, args.common.r, space.truncation_tol())?;
    let profiles: Vec<LadderProfile> = (0..args.d)
        .map(|k| gram.profile(space.dim_params(k).gamma()))
        .collect::<Result<_, _>>()?;
    let calibration = calibrate(&gram.profile(1.0)?, args.common.r)?;
    let limits = RunLimits::new(args.eps, args.max_points)?.with_max_norm(args.max_norm);
    Ok(Experiment {
        space,
        profiles,
        ladder,
        calibration,
        limits,
    })
}

fn ww_params_for(exp: &Experiment, eta: f64) -> Result<WwParams, Error> {
    WwParams::from_calibration(&exp.calibration, eta, exp.space.gammas())
}

fn write_run_outputs(
    args: &RunArgs,
    algo: &str,
    trace: &DaTrace,
) -> Result<(), Error> {
    let tag = format!(
        "{algo}-r{}-d{}-g{}",
        args.common.r,
        args.d,
        fmt_g(args.g)
    );
    let path = write_atomic(
        &args.common.out,
        &format!("run-{tag}.csv"),
        &trace.to_cost_error_csv(),
    )?;
    println!("wrote {}", path.display());
    let path = write_atomic(&args.common.out, &format!("trace-{tag}.csv"), &trace.to_csv())?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_run(args: &RunArgs) -> Result<ExitCode, Error> {
    let exp = prepare(args)?;
    if matches!(args.algo, Algo::Da | Algo::Both) {
        let (_, trace) = run_da(&exp.space, &exp.profiles, &exp.limits)?;
        println!(
            "da: {} steps, cost {}, error {:.3e} ({})",
            trace.steps.len(),
            trace.steps.last().map_or(0, |s| s.nu_cum),
            trace.steps.last().map_or(1.0, |s| s.error),
            trace.terminal
        );
        write_run_outputs(args, "da", &trace)?;
    }
    if matches!(args.algo, Algo::Ww | Algo::Both) {
        let params = ww_params_for(&exp, args.eta)?;
        let (_, trace) = run_ww(&exp.space, &exp.profiles, &params, &exp.limits)?;
        println!(
            "ww: {} steps, cost {}, error {:.3e} ({})",
            trace.steps.len(),
            trace.steps.last().map_or(0, |s| s.nu_cum),
            trace.steps.last().map_or(1.0, |s| s.error),
            trace.terminal
        );
        write_run_outputs(args, "ww", &trace)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(args: &RunArgs) -> Result<ExitCode, Error> {
    let exp = prepare(args)?;
    let params = ww_params_for(&exp, args.eta)?;
    if !exp.calibration.criteria_ok || !params.criteria2_ok() {
        eprintln!("warning: calibration criteria failed; bound may not dominate");
    }
    // log grid over [1e-5, 1)
    let mut csv = String::from("Eps,Bound_Cost\n");
    let points = 51;
    for i in 0..points {
        let exponent = -5.0 + 5.0 * (i as f64) / (points as f64);
        let eps = 10f64.powf(exponent);
        let (bound, _) = ww_cost_bound_eta_min(eps, &params)?;
        csv.push_str(&format!("{eps:.16e},{bound:.16e}\n"));
    }
    let name = format!(
        "bound-r{}-d{}-g{}.csv",
        args.common.r,
        args.d,
        fmt_g(args.g)
    );
    let path = write_atomic(&args.common.out, &name, &csv)?;
    println!("wrote {}", path.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_assemble(args: &AssembleArgs) -> Result<ExitCode, Error> {
    let run = &args.run;
    let exp = prepare(run)?;
    let algo = if run.algo == Algo::Ww { Algo::Ww } else { Algo::Da };
    let (set, trace) = match algo {
        Algo::Ww => {
            let params = ww_params_for(&exp, run.eta)?;
            run_ww(&exp.space, &exp.profiles, &params, &exp.limits)?
        }
        _ => run_da(&exp.space, &exp.profiles, &exp.limits)?,
    };
    let ladders: Vec<&DesignLadder> = vec![&exp.ladder; run.d];
    let rule = materialize(&set, &exp.profiles, &ladders, Some(args.grid_cap))?;
    println!(
        "assembled {} points (pruned {}), declared error {:.6e} ({})",
        rule.len(),
        rule.pruned(),
        rule.declared_e2().sqrt(),
        trace.terminal
    );
    let name = format!(
        "rule-{}-r{}-d{}-g{}.csv",
        algo.label(),
        run.common.r,
        run.d,
        fmt_g(run.g)
    );
    let path = write_atomic(&run.common.out, &name, &rule.to_csv())?;
    println!("wrote {}", path.display());
    Ok(ExitCode::SUCCESS)
}

struct Checker {
    failures: usize,
}

impl Checker {
    fn report(&mut self, name: &str, pass: bool, detail: String) {
        if pass {
            println!("[pass] {name}: {detail}");
        } else {
            self.failures += 1;
            println!("[FAIL] {name}: {detail}");
        }
    }
}

fn cmd_verify(args: &CommonArgs) -> Result<ExitCode, Error> {
    let mut check = Checker { failures: 0 };
    let ladder = resolve_ladder(&args.ladder)?;

    // 1. design strengths
    for design in ladder.designs() {
        let report = verify_strength(design, 1e-9);
        check.report(
            &format!("strength[{}]", design.source()),
            report.passed,
            format!(
                "t={} max residual {:.3e}",
                design.strength(),
                report.max_residual()
            ),
        );
    }
    // negative control: a single point cannot have strength 1
    {
        let single = spherequad::design::SphericalDesign::new(
            vec![spherequad::kernel::NORTH_POLE],
            1,
            "control",
            "negative-control",
        )?;
        let report = verify_strength(&single, 1e-9);
        check.report(
            "strength negative control",
            !report.passed,
            format!("single point residual {:.3e}", report.max_residual()),
        );
    }

    // 2. per-gamma ladder profiles: residuals, monotonicity, telescoping,
    //    optimal vs equal weights
    let gram = LadderGram::new(&ladder, args.r, 1e-14)?;
    for &gamma in &[0.1, 0.5, 1.0] {
        let profile = gram.profile(gamma)?;
        let params = KernelParams::new(args.r, gamma)?;
        let mut residual_ok = true;
        let mut monotone_ok = true;
        let mut qmc_ok = true;
        let mut worst_gap = 0.0f64;
        for j in 0..profile.levels() {
            let n = profile.n()[j] as f64;
            residual_ok &= profile.flags()[j].residual <= 1e-8 * n;
            if j > 0 {
                monotone_ok &= profile.e2()[j] <= profile.e2()[j - 1] + 1e-12;
            }
            let qmc = qmc_error(ladder.level_points(j), &params);
            qmc_ok &= profile.e2()[j] <= qmc + 1e-12;
            worst_gap = worst_gap.max(profile.e2()[j] - qmc);
        }
        let telescoped: f64 =
            profile.delta2().iter().sum::<f64>() + profile.e2().last().unwrap();
        check.report(
            &format!("weight residuals (gamma={gamma})"),
            residual_ok,
            "|Kw-1| within 1e-8 n".into(),
        );
        check.report(
            &format!("error monotone (gamma={gamma})"),
            monotone_ok,
            "e2 nonincreasing across levels".into(),
        );
        check.report(
            &format!("optimal<=qmc (gamma={gamma})"),
            qmc_ok,
            format!("worst gap {worst_gap:.3e}"),
        );
        check.report(
            &format!("telescoping (gamma={gamma})"),
            (telescoped - 1.0).abs() <= 1e-10,
            format!("sum delta2 + e2_last - 1 = {:.3e}", telescoped - 1.0),
        );
    }

    // 3. declared vs direct error of an assembled rule at d=2
    {
        let space = SpaceParams::geometric(args.r, 0.5, 2)?;
        let profiles: Vec<LadderProfile> = (0..2)
            .map(|k| gram.profile(space.dim_params(k).gamma()))
            .collect::<Result<_, _>>()?;
        let limits = RunLimits::new(0.05, 2_000)?;
        let (set, _) = run_da(&space, &profiles, &limits)?;
        let rule = materialize(&set, &profiles, &[&ladder, &ladder], None)?;
        let direct = verify_error(&rule, &space)?;
        let gap = (direct - rule.declared_e2()).abs();
        check.report(
            "declared vs direct e2 (d=2)",
            gap <= 1e-8,
            format!("|gap| = {gap:.3e} over {} points", rule.len()),
        );
    }

    // 4. greedy prefixes vs exhaustive down-set optimum at d=2
    {
        let space = SpaceParams::geometric(args.r, 0.5, 2)?;
        let profiles: Vec<LadderProfile> = (0..2)
            .map(|k| gram.profile(space.dim_params(k).gamma()))
            .collect::<Result<_, _>>()?;
        let limits = RunLimits::new(0.2, 500)?;
        let (_, trace) = run_da(&space, &profiles, &limits)?;
        let side = profiles
            .iter()
            .map(|p| p.usable_levels().min(4))
            .collect::<Vec<_>>();
        let enumeration = DownsetEnumeration::new(&side, |j: &MultiIndex| {
            let it = spherequad::da::item(j, &profiles).expect("within box");
            (it.p, it.nu)
        })?;
        let mut optimal = true;
        for step in &trace.steps {
            if step
                .index
                .components()
                .iter()
                .zip(&side)
                .any(|(c, s)| *c as usize >= *s)
            {
                break; // prefix left the oracle box
            }
            let target = step.p_cum * (1.0 - 1e-12);
            if let Some(best) = enumeration.min_cost_for_profit(target) {
                optimal &= best == step.nu_cum;
            }
        }
        check.report(
            "greedy prefix optimality (d=2)",
            optimal,
            format!("{} prefixes checked", trace.steps.len()),
        );
    }

    if check.failures > 0 {
        println!("{} check(s) failed", check.failures);
        return Ok(ExitCode::from(4));
    }
    println!("all checks passed");
    Ok(ExitCode::SUCCESS)
}
