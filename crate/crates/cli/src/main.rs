use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use wigneroid::cohomology::{central_extension, h2, LieAlgebra, StructureConstantsJson, Q};
use wigneroid::covering::{osc_inv, osc_mul, project, OscElement};
use wigneroid::groupoid::{classify_orbit, classify_orbit_exact, isotropy_type};
use wigneroid::mackey::{
    classify_poincare, compare_with_group_classification, parse_spin, particle_table, DualPointH2, RepParams, Spin,
};
use wigneroid::repcheck::{run_suite, CheckReport, Suite, SuiteConfig};
use wigneroid::spacetime::{covector_to_chart, p_squared, CotangentPoint, MetricSpec, SpacetimePoint, TetradCovector};
use wigneroid::{Error, Result};

const SEED_VAR: &str = "WIGNEROID_SEED";

#[derive(Parser)]
#[command(name = "wigneroid", version, about = "Wigner classification on the groupoid of tetrad frames")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit, isotropy group and Poincaré little group of one covector.
    Classify(ClassifyArgs),
    /// Orbit → isotropy → representation labels for a set of covectors.
    ParticleTable(TableArgs),
    /// Second Lie algebra cohomology H²(g, ℝ).
    Cohomology(AlgebraArgs),
    /// Universal central extension by a basis of H².
    Extend(AlgebraArgs),
    /// Product, inverse and projection in the covering group of E(2).
    Covering(CoveringArgs),
    /// Run the finite-dimensional representation witnesses.
    Verify(VerifyArgs),
    /// Group versus groupoid classification of the massless sectors.
    Compare,
}

#[derive(Args)]
struct PointArgs {
    /// `minkowski` or `schwarzschild:M`.
    #[arg(long, default_value = "minkowski")]
    metric: String,
    /// Chart coordinates `x0,x1,x2,x3`; defaults to the origin (Minkowski)
    /// or `0,0,π/2,0` (Kruskal).
    #[arg(long)]
    point: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Tetrad covector `p0,p1,p2,p3`.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Read the covector as exact rationals and classify without tolerance.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Tetrad covector sample; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    p: Vec<String>,
    /// Spin offered to massive rows; repeatable.
    #[arg(long)]
    spin: Vec<String>,
    /// Helicity offered to massless rows; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    helicity: Vec<String>,
    /// Continuous-spin point `rho:phi0`; repeatable.
    #[arg(long)]
    circle: Vec<String>,
    /// Central parameter of a magnetic point; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Spectral shift of the magnetic points.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c0: String,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Preset (`e2`, `su2`, `heisenberg3`, `abelian:n`) or `@file.json`.
    #[arg(long)]
    algebra: String,
}

#[derive(Args)]
struct CoveringArgs {
    /// Element `s,a1,a2,phi`.
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    /// Second element `s,a1,a2,phi`; defaults to the identity.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Tolerance for the projection homomorphism check.
    #[arg(long, default_value_t = 1e-12)]
    tolerance: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, `svn`, `circle`, `spin` or `induction`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Central parameters for the truncated oscillator checks; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Truncation dimension N.
    #[arg(long)]
    trunc: Option<usize>,
    /// Circle grid size M.
    #[arg(long)]
    grid: Option<usize>,
    /// Spin for the su(2) checks; repeatable.
    #[arg(long)]
    spin: Vec<String>,
    /// Replaces every check's tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
}

/// Text and JSON renderings of one command's result.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Real number, optionally written as a fraction `p/q`.
fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a number"));
    let value = match s.split_once('/') {
        Some((n, d)) => n.trim().parse::<f64>().map_err(|_| bad())? / d.trim().parse::<f64>().map_err(|_| bad())?,
        None => s.parse::<f64>().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn parse_tuple<const N: usize>(s: &str) -> Result<[f64; N]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(Error::Parse(format!("expected {N} comma-separated numbers, got `{s}`")));
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_real(p)?;
    }
    Ok(out)
}

fn parse_metric(s: &str) -> Result<MetricSpec> {
    match s.trim() {
        "minkowski" => Ok(MetricSpec::Minkowski),
        other => match other.strip_prefix("schwarzschild:") {
            Some(m) => MetricSpec::schwarzschild(parse_real(m)?),
            None => Err(Error::Parse(format!("unknown metric `{other}` (minkowski or schwarzschild:M)"))),
        },
    }
}

fn base_point(args: &PointArgs) -> Result<SpacetimePoint> {
    let metric = parse_metric(&args.metric)?;
    let coords = match &args.point {
        Some(p) => parse_tuple::<4>(p)?,
        None => match metric {
            MetricSpec::Minkowski => [0.0; 4],
            MetricSpec::SchwarzschildKruskal { .. } => [0.0, 0.0, std::f64::consts::FRAC_PI_2, 0.0],
        },
    };
    SpacetimePoint::new(metric, coords)
}

fn load_algebra(spec: &str) -> Result<LieAlgebra> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let parsed: StructureConstantsJson =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            LieAlgebra::from_json(&parsed)
        }
        None => LieAlgebra::preset(spec),
    }
}

fn classify(args: &ClassifyArgs) -> Result<Report> {
    let x = base_point(&args.point)?;
    let orbit = if args.exact {
        let parts: Vec<&str> = args.p.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 comma-separated rationals, got `{}`", args.p)));
        }
        let mut q: [Q; 4] = Default::default();
        for (slot, part) in q.iter_mut().zip(parts) {
            *slot = part.trim().parse().map_err(|_| Error::Parse(format!("`{part}` is not a rational")))?;
        }
        classify_orbit_exact(&q)
    } else {
        classify_orbit(&TetradCovector(parse_tuple::<4>(&args.p)?))
    };
    let p = TetradCovector(parse_tuple::<4>(&args.p)?);
    let isotropy = isotropy_type(&orbit);
    let poincare = classify_poincare(p.0);
    let chart = covector_to_chart(&x.tetrad()?, &p);
    let chart: Vec<f64> = chart.iter().cloned().collect();
    let text = format!(
        "orbit         {orbit}\np^2           {}\nisotropy      {isotropy}\nlittle group  {:?}\nchart p       {chart:?}\n",
        p_squared(&p),
        poincare.little_group
    );
    let json = json!({
        "metric": x.metric,
        "point": x.coords,
        "p": p,
        "p_squared": p_squared(&p),
        "orbit": orbit,
        "isotropy": isotropy,
        "poincare": poincare,
        "chart_covector": chart,
    });
    Ok(Report::ok(text, json))
}

fn default_samples() -> Vec<[f64; 4]> {
    vec![[2.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0, 1.0], [0.0; 4], [0.0, 1.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0]]
}

fn table(args: &TableArgs) -> Result<Report> {
    let x = base_point(&args.point)?;
    let samples = if args.p.is_empty() {
        default_samples()
    } else {
        args.p.iter().map(|s| parse_tuple::<4>(s)).collect::<Result<_>>()?
    };
    let samples: Vec<CotangentPoint> = samples.into_iter().map(|p| CotangentPoint::new(x, TetradCovector(p))).collect();

    let spins: Vec<Spin> = if args.spin.is_empty() {
        (0..3).map(Spin::from_twice).collect()
    } else {
        args.spin.iter().map(|s| parse_spin(s)).collect::<Result<_>>()?
    };
    let origin = DualPointH2::Character { p: [0.0, 0.0] };
    let helicities: Vec<f64> = if args.helicity.is_empty() {
        vec![-1.0, 0.0, 1.0, 0.5]
    } else {
        args.helicity.iter().map(|s| parse_real(s)).collect::<Result<_>>()?
    };
    let mut massless: Vec<(DualPointH2, f64)> = helicities.into_iter().map(|l| (origin, l)).collect();
    let circles = if args.circle.is_empty() { vec!["1:0".to_string()] } else { args.circle.clone() };
    for c in &circles {
        let (rho, phi0) = c.split_once(':').ok_or_else(|| Error::Parse(format!("expected rho:phi0, got `{c}`")))?;
        let rho = parse_real(rho)?;
        if !(rho > 0.0) {
            return Err(Error::BadParams(format!("circle radius must be positive, got {rho}")));
        }
        massless.push((DualPointH2::Character { p: [rho, 0.0] }, parse_real(phi0)?));
    }
    let c0 = parse_real(&args.c0)?;
    let mus = if args.mu.is_empty() { vec!["1".to_string()] } else { args.mu.clone() };
    for mu in &mus {
        massless.push((DualPointH2::stone_von_neumann(parse_real(mu)?)?, c0));
    }

    let t = particle_table(&x.metric, &samples, &RepParams { spins, massless })?;
    Ok(Report::ok(t.to_text(), to_value(&t.rows)))
}

fn cohomology(args: &AlgebraArgs) -> Result<Report> {
    let alg = load_algebra(&args.algebra)?;
    let res = h2(&alg)?;
    let basis: Vec<_> = res.positive_leading().iter().map(|w| w.labelled(alg.names())).collect();
    let mut json = json!({ "dim_h2": res.dim_h2 });
    let mut text = format!("dim H^2 = {}\n", res.dim_h2);
    match basis.len() {
        0 => {}
        1 => json["generator"] = to_value(&basis[0]),
        _ => json["basis"] = to_value(&basis),
    }
    for (i, w) in basis.iter().enumerate() {
        let terms: Vec<String> = w.iter().map(|(k, v)| format!("ω{k} = {v}")).collect();
        text.push_str(&format!("generator {}: {}\n", i + 1, terms.join(", ")));
    }
    Ok(Report::ok(text, json))
}

fn extend(args: &AlgebraArgs) -> Result<Report> {
    let alg = load_algebra(&args.algebra)?;
    let res = h2(&alg)?;
    let ext = central_extension(&alg, &res.positive_leading())?;
    let spec = ext.to_json();
    let names = ext.names();
    let mut text = format!("dim = {}\n", ext.dim());
    let mut brackets: Vec<((usize, usize), Vec<String>)> = Vec::new();
    for e in &spec.c {
        let term = match e.val.as_str() {
            "1" => names[e.k].clone(),
            "-1" => format!("-{}", names[e.k]),
            v => format!("{v} {}", names[e.k]),
        };
        match brackets.last_mut() {
            Some((pair, terms)) if *pair == (e.i, e.j) => terms.push(term),
            _ => brackets.push(((e.i, e.j), vec![term])),
        }
    }
    for ((i, j), terms) in brackets {
        text.push_str(&format!("[{},{}] = {}\n", names[i], names[j], terms.join(" + ")));
    }
    Ok(Report::ok(text, to_value(&spec)))
}

fn covering(args: &CoveringArgs) -> Result<Report> {
    let elem = |s: &str| -> Result<OscElement> {
        let [s0, a1, a2, phi] = parse_tuple::<4>(s)?;
        Ok(OscElement::new(s0, [a1, a2], phi))
    };
    let g = elem(&args.g)?;
    let h = match &args.h {
        Some(h) => elem(h)?,
        None => OscElement::IDENTITY,
    };
    let gh = osc_mul(&g, &h);
    let residual = project(&gh).distance(&project(&g).mul(&project(&h)));
    let json = json!({
        "g": g,
        "h": h,
        "product": gh,
        "inverse_g": osc_inv(&g),
        "projection": project(&gh),
        "homomorphism_residual": residual,
        "tolerance": args.tolerance,
    });
    let show = |x: &OscElement| format!("(s={}, a=({}, {}), phi={})", x.s, x.a[0], x.a[1], x.phi);
    let e2 = project(&gh);
    let text = format!(
        "g·h        {}\ng^-1       {}\np(g·h)     (a=({}, {}), theta={})\nresidual   {residual:e} (tolerance {:e})\n",
        show(&gh),
        show(&osc_inv(&g)),
        e2.a[0],
        e2.a[1],
        e2.theta,
        args.tolerance
    );
    Ok(Report { text, json, ok: residual <= args.tolerance })
}

fn seed() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{SEED_VAR} must be an unsigned integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn verify(args: &VerifyArgs) -> Result<Report> {
    let suite: Suite = args.suite.parse()?;
    let mut config = SuiteConfig::default();
    if !args.mu.is_empty() {
        config.mus = args.mu.iter().map(|s| parse_real(s)).collect::<Result<_>>()?;
    }
    if let Some(n) = args.trunc {
        config.trunc = n;
    }
    if let Some(m) = args.grid {
        config.grid = m;
    }
    if !args.spin.is_empty() {
        config.spins = args.spin.iter().map(|s| parse_spin(s)).collect::<Result<_>>()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed()?);
    let mut checks = run_suite(suite, &config, &mut rng)?;
    if let Some(t) = args.tolerance {
        checks = checks.into_iter().map(|c| c.with_tolerance(t)).collect();
    }
    let ok = checks.iter().all(CheckReport::passed);
    let width = checks.iter().map(|c| c.check.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in &checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status}  {:<width$}  residual {:e}  tolerance {:e}\n", c.check, c.residual, c.tolerance));
    }
    text.push_str(&format!("{} / {} checks passed\n", checks.iter().filter(|c| c.passed()).count(), checks.len()));
    Ok(Report { text, json: to_value(&checks), ok })
}

fn compare() -> Report {
    let r = compare_with_group_classification();
    Report::ok(r.to_text(), to_value(&r.rows))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Classify(a) => classify(a),
        Command::ParticleTable(a) => table(a),
        Command::Cohomology(a) => cohomology(a),
        Command::Extend(a) => extend(a),
        Command::Covering(a) => covering(a),
        Command::Verify(a) => verify(a),
        Command::Compare => Ok(compare()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "code": e.code(), "message": e.to_string() }));
            match e {
                Error::Convergence(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
