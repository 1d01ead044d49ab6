//! Command-line interface: JSON in, JSON out. Exit codes: 0 success/match,
//! 1 mismatch, 2 guard or timeout, 3 invalid input.

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use hypertree_spectra::charpoly::{
    charpoly, pendant_growth_check, verify_hypertree_multiplicity, OracleConfig,
};
use hypertree_spectra::error::Error;
use hypertree_spectra::hypergraph::{
    hyperstar, loose_path, power_hypertree, random_hypertree, single_edge, GeneratorKind,
    Hypergraph, HypergraphJson,
};
use hypertree_spectra::matching::matching_polynomial;
use hypertree_spectra::report::*;
use hypertree_spectra::spectrum::{
    distinct_real_eigenvalues, spectral_radius_exact, subtree_monotonicity_check, width,
};
use hypertree_spectra::tensor::{nqz_spectral_radius, perron_identity_check};

#[derive(Parser)]
#[command(name = "hypertree-spectra", version, about = "Spectral toolkit for k-uniform hypertrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArg {
    /// Hypergraph JSON file; reads standard input when omitted or "-"
    input: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct OracleArgs {
    #[arg(long, default_value_t = 500)]
    degree_guard: u64,
    /// Abort when one sample-point evaluation exceeds this many milliseconds
    #[arg(long)]
    timeout_per_point: Option<u64>,
    /// Worker threads; 1 forces deterministic serial evaluation
    #[arg(long)]
    jobs: Option<usize>,
    /// Re-evaluate the interpolated polynomial at this many fresh points
    #[arg(long, default_value_t = 0)]
    extra_consistency_points: usize,
}

impl OracleArgs {
    fn to_config(&self) -> OracleConfig {
        OracleConfig {
            degree_guard: self.degree_guard,
            parallel: self.jobs != Some(1),
            extra_consistency_points: self.extra_consistency_points,
            timeout_per_point_ms: self.timeout_per_point,
            ..OracleConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a hypergraph from one of the generator families
    Generate {
        #[arg(long)]
        kind: GeneratorKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base tree JSON for power_hypertree
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Matching counts and matching polynomial
    Matching(InputArg),
    /// Distinct real eigenvalues and the spectral radius
    Spectrum(InputArg),
    /// Spectral radius by NQZ iteration, exact isolation, or both
    SpectralRadius {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value = "both")]
        method: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Oracle characteristic polynomial by evaluation-interpolation
    Charpoly {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Measure am(rho) and compare with k^(m(k-2)); exit 0 iff they match
    VerifyMultiplicity {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Check that am multiplies by k^(k-2) when a pendant edge is added
    PendantCheck {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Perron-vector quotient identities at a vertex
    Lemma31Check {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Subtree spectral-radius monotonicity with interval separation
    MonotonicityCheck {
        #[command(flatten)]
        input: InputArg,
    },
    /// Run a batch of commands over a list of instances
    Campaign {
        spec: PathBuf,
    },
}

fn read_hypergraph(arg: &InputArg) -> Result<Hypergraph, Error> {
    let text = match &arg.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let json: HypergraphJson = serde_json::from_str(&text)?;
    Hypergraph::from_json(&json)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::DegreeGuard { .. }
        | Error::Timeout(_)
        | Error::EdgeGuard(_)
        | Error::TooManyBadPoints { .. }
        | Error::NoConvergence { .. } => 2,
        _ => 3,
    }
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate { kind, k, m, seed, base } => {
            let h = match kind {
                GeneratorKind::SingleEdge => single_edge(k)?,
                GeneratorKind::LoosePath => loose_path(k, m)?,
                GeneratorKind::Hyperstar => hyperstar(k, m)?,
                GeneratorKind::RandomHypertree => random_hypertree(k, m, seed)?,
                GeneratorKind::PowerHypertree => {
                    let path = base.ok_or_else(|| {
                        Error::BadGenerator("power_hypertree needs --base".into())
                    })?;
                    let text = std::fs::read_to_string(path)?;
                    let json: HypergraphJson = serde_json::from_str(&text)?;
                    power_hypertree(&Hypergraph::from_json(&json)?, k)?
                }
            };
            emit(&h.to_json());
            Ok(0)
        }
        Command::Matching(input) => {
            let h = read_hypergraph(&input)?;
            let s = matching_polynomial(&h)?;
            emit(&MatchingJson::from(&s));
            Ok(0)
        }
        Command::Spectrum(input) => {
            let h = read_hypergraph(&input)?;
            let r = distinct_real_eigenvalues(&h)?;
            emit(&SpectrumJson::from(&r));
            Ok(0)
        }
        Command::SpectralRadius { input, method, tol } => {
            let h = read_hypergraph(&input)?;
            let mut out = SpectralRadiusJson {
                nqz: None,
                exact: None,
                difference: None,
            };
            if method == "nqz" || method == "both" {
                let p = nqz_spectral_radius(&h, tol, 1_000_000)?;
                out.nqz = Some(EigenPairJson::from(&p));
            }
            if method == "exact" || method == "both" {
                let iv = spectral_radius_exact(&h, &width(12))?;
                out.exact = Some(IntervalJson::from(&iv));
            }
            if let (Some(n), Some(e)) = (&out.nqz, &out.exact) {
                out.difference = Some((n.lambda - e.approx).abs());
            }
            emit(&out);
            Ok(0)
        }
        Command::Charpoly { input, oracle } => {
            let h = read_hypergraph(&input)?;
            configure_pool(oracle.jobs);
            let c = charpoly(&h, &oracle.to_config())?;
            emit(&CharPolyJson::from(&c));
            Ok(0)
        }
        Command::VerifyMultiplicity { input, oracle } => {
            let h = read_hypergraph(&input)?;
            configure_pool(oracle.jobs);
            let r = verify_hypertree_multiplicity(&h, &oracle.to_config())?;
            let matched = r.matched;
            emit(&MultiplicityJson::from(&r));
            Ok(if matched { 0 } else { 1 })
        }
        Command::PendantCheck { input, vertex, oracle } => {
            let h = read_hypergraph(&input)?;
            configure_pool(oracle.jobs);
            let r = pendant_growth_check(&h, vertex, &oracle.to_config())?;
            let matched = r.matched;
            emit(&PendantGrowthJson::from(&r));
            Ok(if matched { 0 } else { 1 })
        }
        Command::Lemma31Check { input, vertex, tol } => {
            let h = read_hypergraph(&input)?;
            let r = perron_identity_check(&h, vertex, tol)?;
            let passed = r.passed;
            emit(&PerronIdentityJson::from(&r));
            Ok(if passed { 0 } else { 1 })
        }
        Command::MonotonicityCheck { input } => {
            let h = read_hypergraph(&input)?;
            let r = subtree_monotonicity_check(&h, &width(10))?;
            let ok = r.all_separated;
            emit(&MonotonicityJson::from(&r));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Campaign { spec } => run_campaign(&spec),
    }
}

fn configure_pool(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // ignore the error if a pool already exists (tests, repeated calls)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[derive(Serialize, Deserialize)]
struct CampaignSpec {
    instances: Vec<CampaignInstance>,
    commands: Vec<String>,
    #[serde(default = "default_guard")]
    degree_guard: u64,
    #[serde(default = "default_tol")]
    tol: f64,
    #[serde(default)]
    jobs: Option<usize>,
    #[serde(default)]
    output_dir: Option<PathBuf>,
}

fn default_guard() -> u64 {
    500
}

fn default_tol() -> f64 {
    1e-8
}

#[derive(Serialize, Deserialize, Clone)]
struct CampaignInstance {
    id: String,
    #[serde(default)]
    kind: Option<GeneratorKind>,
    #[serde(default)]
    k: Option<usize>,
    #[serde(default)]
    m: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    path: Option<PathBuf>,
    /// Vertex for pendant-check / lemma31-check; defaults to 0
    #[serde(default)]
    vertex: Option<usize>,
}

#[derive(Serialize)]
struct CampaignResult {
    instance: String,
    command: String,
    status: String,
    exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    artifact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CampaignSummary {
    results: Vec<CampaignResult>,
    passed: usize,
    failed: usize,
    guarded: usize,
}

fn instance_hypergraph(inst: &CampaignInstance) -> Result<Hypergraph, Error> {
    if let Some(path) = &inst.path {
        let text = std::fs::read_to_string(path)?;
        let json: HypergraphJson = serde_json::from_str(&text)?;
        return Hypergraph::from_json(&json);
    }
    let k = inst.k.ok_or_else(|| Error::BadGenerator("instance needs k".into()))?;
    let m = inst.m.unwrap_or(1);
    match inst.kind {
        Some(GeneratorKind::SingleEdge) => single_edge(k),
        Some(GeneratorKind::LoosePath) => loose_path(k, m),
        Some(GeneratorKind::Hyperstar) => hyperstar(k, m),
        Some(GeneratorKind::RandomHypertree) => random_hypertree(k, m, inst.seed.unwrap_or(0)),
        Some(GeneratorKind::PowerHypertree) | None => Err(Error::BadGenerator(
            "instance needs kind or path".into(),
        )),
    }
}

fn run_campaign(spec_path: &PathBuf) -> Result<u8, Error> {
    let text = std::fs::read_to_string(spec_path)?;
    let spec: CampaignSpec = serde_json::from_str(&text)?;
    configure_pool(spec.jobs);
    let config = OracleConfig {
        degree_guard: spec.degree_guard,
        parallel: spec.jobs != Some(1),
        ..OracleConfig::default()
    };
    if let Some(dir) = &spec.output_dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut results = Vec::new();
    for inst in &spec.instances {
        for cmd in &spec.commands {
            let outcome = run_campaign_command(inst, cmd, &spec, &config);
            results.push(match outcome {
                Ok((json, code)) => {
                    let artifact = spec.output_dir.as_ref().map(|dir| {
                        let path = dir.join(format!("{}__{}.json", inst.id, cmd));
                        std::fs::write(&path, &json).ok();
                        path.display().to_string()
                    });
                    CampaignResult {
                        instance: inst.id.clone(),
                        command: cmd.clone(),
                        status: if code == 0 { "pass".into() } else { "mismatch".into() },
                        exit_code: code,
                        artifact,
                        error: None,
                    }
                }
                Err(e) => CampaignResult {
                    instance: inst.id.clone(),
                    command: cmd.clone(),
                    status: if exit_code_for(&e) == 2 { "guard".into() } else { "error".into() },
                    exit_code: exit_code_for(&e),
                    artifact: None,
                    error: Some(e.to_string()),
                },
            });
        }
    }
    results.sort_by(|a, b| (&a.instance, &a.command).cmp(&(&b.instance, &b.command)));
    let passed = results.iter().filter(|r| r.exit_code == 0).count();
    let guarded = results.iter().filter(|r| r.exit_code == 2).count();
    let failed = results.len() - passed - guarded;
    let summary = CampaignSummary {
        passed,
        failed,
        guarded,
        results,
    };
    emit(&summary);
    if summary.failed > 0 {
        Ok(1)
    } else if summary.guarded > 0 {
        Ok(2)
    } else {
        Ok(0)
    }
}

fn run_campaign_command(
    inst: &CampaignInstance,
    cmd: &str,
    spec: &CampaignSpec,
    config: &OracleConfig,
) -> Result<(String, u8), Error> {
    let h = instance_hypergraph(inst)?;
    match cmd {
        "generate" => Ok((serde_json::to_string_pretty(&h.to_json())?, 0)),
        "matching" => {
            let s = matching_polynomial(&h)?;
            Ok((serde_json::to_string_pretty(&MatchingJson::from(&s))?, 0))
        }
        "spectrum" => {
            let r = distinct_real_eigenvalues(&h)?;
            Ok((serde_json::to_string_pretty(&SpectrumJson::from(&r))?, 0))
        }
        "spectral-radius" => {
            let p = nqz_spectral_radius(&h, spec.tol * 1e-2, 1_000_000)?;
            let iv = spectral_radius_exact(&h, &width(12))?;
            let diff = (p.lambda - iv.to_f64()).abs();
            let out = SpectralRadiusJson {
                nqz: Some(EigenPairJson::from(&p)),
                exact: Some(IntervalJson::from(&iv)),
                difference: Some(diff),
            };
            Ok((serde_json::to_string_pretty(&out)?, u8::from(diff >= spec.tol)))
        }
        "charpoly" => {
            let c = charpoly(&h, config)?;
            Ok((serde_json::to_string_pretty(&CharPolyJson::from(&c))?, 0))
        }
        "verify-multiplicity" => {
            let r = verify_hypertree_multiplicity(&h, config)?;
            Ok((
                serde_json::to_string_pretty(&MultiplicityJson::from(&r))?,
                u8::from(!r.matched),
            ))
        }
        "pendant-check" => {
            let r = pendant_growth_check(&h, inst.vertex.unwrap_or(0), config)?;
            Ok((
                serde_json::to_string_pretty(&PendantGrowthJson::from(&r))?,
                u8::from(!r.matched),
            ))
        }
        "lemma31-check" => {
            let r = perron_identity_check(&h, inst.vertex.unwrap_or(0), spec.tol)?;
            Ok((
                serde_json::to_string_pretty(&PerronIdentityJson::from(&r))?,
                u8::from(!r.passed),
            ))
        }
        "monotonicity-check" => {
            let r = subtree_monotonicity_check(&h, &width(10))?;
            Ok((
                serde_json::to_string_pretty(&MonotonicityJson::from(&r))?,
                u8::from(!r.all_separated),
            ))
        }
        other => Err(Error::BadGenerator(format!("unknown campaign command {:?}", other))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}
