//! Command-line interface to the entrainment pipeline.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prosent::config::{ConditionFilter, PipelineConfig};
use prosent::entrain::Measure;
use prosent::error::{Error, Result};
use prosent::features::FeatureSet;
use prosent::pipeline;
use prosent::synth::{self, SynthScenario};

const CONFIG_ENV: &str = "PROSENT_CONFIG";

#[derive(Parser)]
#[command(
    name = "prosent",
    version,
    about = "Measure prosodic entrainment per dialog act over two-channel dialog corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Preprocess f0 and energy for every channel and write the tracks
    Extract(AnalysisOpts),
    /// Detect syllable nuclei, phrase boundaries, and pitch accents
    Detect(AnalysisOpts),
    /// Assemble the per-segment feature table
    Features(AnalysisOpts),
    /// Compute within/across-dialog deviations per segment and feature
    Entrain(AnalysisOpts),
    /// Summarize entrainment records into sign grids and group tests
    Stats(AnalysisOpts),
    /// Run every stage and write the full report bundle
    Run(AnalysisOpts),
    /// Generate a synthetic corpus from a scenario description
    Synth(SynthOpts),
    /// Render a feature-profile SVG for one dialog act cell
    Plot(PlotOpts),
}

#[derive(Args)]
struct AnalysisOpts {
    /// Corpus directory (da_tier.tsv plus signals or features.tsv)
    #[arg(long)]
    corpus: PathBuf,
    /// Output directory for this stage's files
    #[arg(long)]
    out: PathBuf,
    /// JSON config file; defaults come from the PROSENT_CONFIG env var
    #[arg(long)]
    config: Option<PathBuf>,
    /// Random seed (overrides the config file)
    #[arg(long)]
    seed: Option<u64>,
    /// Pair-sampling repetitions (overrides the config file)
    #[arg(long)]
    resamples: Option<usize>,
    /// Significance level for sign grids (overrides the config file)
    #[arg(long)]
    alpha: Option<f64>,
    /// Restrict analysis to one game condition
    #[arg(long, value_enum)]
    condition: Option<ConditionArg>,
    /// Use the fixed reference frequency split instead of the corpus median
    #[arg(long)]
    frozen_groupings: bool,
    /// Test each feature separately instead of pooling per set
    #[arg(long)]
    per_feature: bool,
}

#[derive(Args)]
struct SynthOpts {
    /// Scenario description (JSON)
    #[arg(long)]
    scenario: PathBuf,
    /// Directory to write the generated corpus into
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PlotOpts {
    /// Output directory of a previous entrain/run stage
    #[arg(long)]
    out: PathBuf,
    /// Dialog act label to plot
    #[arg(long)]
    da: String,
    /// Feature set (GEN, GF0, IP, ACC, RHY)
    #[arg(long)]
    set: String,
    /// Measure (convergence, synchrony)
    #[arg(long)]
    measure: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConditionArg {
    Coop,
    Comp,
    Both,
}

impl From<ConditionArg> for ConditionFilter {
    fn from(c: ConditionArg) -> ConditionFilter {
        match c {
            ConditionArg::Coop => ConditionFilter::Coop,
            ConditionArg::Comp => ConditionFilter::Comp,
            ConditionArg::Both => ConditionFilter::Both,
        }
    }
}

fn load_config(explicit: Option<&Path>) -> Result<PipelineConfig> {
    let from_env = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    let path = match (explicit, &from_env) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(p)) => p.clone(),
        (None, None) => return Ok(PipelineConfig::default()),
    };
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    let body = std::fs::read_to_string(&path)?;
    serde_json::from_str(&body)
        .map_err(|e| Error::Config(format!("config {}: {e}", path.display())))
}

fn resolve_config(opts: &AnalysisOpts) -> Result<PipelineConfig> {
    let mut cfg = load_config(opts.config.as_deref())?;
    if let Some(seed) = opts.seed {
        cfg.seed = seed;
    }
    if let Some(n) = opts.resamples {
        cfg.n_resamples = n;
    }
    if let Some(alpha) = opts.alpha {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Config(format!(
                "field alpha: {alpha} is outside (0, 1)"
            )));
        }
        cfg.alpha = alpha;
    }
    if let Some(c) = opts.condition {
        cfg.condition_filter = c.into();
    }
    if opts.frozen_groupings {
        cfg.frozen_groupings = true;
    }
    if opts.per_feature {
        cfg.per_feature = true;
    }
    Ok(cfg)
}

fn run_command(command: Command) -> Result<()> {
    match command {
        Command::Extract(opts) => {
            let cfg = resolve_config(&opts)?;
            let written = pipeline::stage_extract(&opts.corpus, &opts.out, &cfg)?;
            println!(
                "wrote {} track files under {}",
                written.len(),
                opts.out.display()
            );
        }
        Command::Detect(opts) => {
            let cfg = resolve_config(&opts)?;
            let path = pipeline::stage_detect(&opts.corpus, &opts.out, &cfg)?;
            println!("wrote {}", path.display());
        }
        Command::Features(opts) => {
            let cfg = resolve_config(&opts)?;
            let path = pipeline::stage_features(&opts.corpus, &opts.out, &cfg)?;
            println!("wrote {}", path.display());
        }
        Command::Entrain(opts) => {
            let cfg = resolve_config(&opts)?;
            let (path, reports) = pipeline::stage_entrain(&opts.corpus, &opts.out, &cfg)?;
            let pairs: usize = reports.iter().map(|r| r.n_complete_pairs).sum();
            println!("wrote {} ({} complete pairs)", path.display(), pairs);
        }
        Command::Stats(opts) => {
            let cfg = resolve_config(&opts)?;
            let written = pipeline::stage_stats(&opts.corpus, &opts.out, &cfg)?;
            for p in written {
                println!("wrote {}", p.display());
            }
        }
        Command::Run(opts) => {
            let cfg = resolve_config(&opts)?;
            let summary = pipeline::run_pipeline(&opts.corpus, &opts.out, &cfg)?;
            println!(
                "analyzed {} segments into {} entrainment records",
                summary.n_segments, summary.n_records
            );
            for p in summary.outputs {
                println!("wrote {}", p.display());
            }
        }
        Command::Synth(opts) => {
            if !opts.scenario.is_file() {
                return Err(Error::MissingInput(opts.scenario.display().to_string()));
            }
            let body = std::fs::read_to_string(&opts.scenario)?;
            let scenario: SynthScenario = serde_json::from_str(&body)
                .map_err(|e| Error::Config(format!("scenario {}: {e}", opts.scenario.display())))?;
            scenario.validate()?;
            synth::write_corpus(&opts.out, &scenario)?;
            println!("wrote corpus under {}", opts.out.display());
        }
        Command::Plot(opts) => {
            let set = FeatureSet::parse(&opts.set).ok_or_else(|| {
                Error::Config(format!(
                    "field set: unknown feature set {:?} (expected GEN, GF0, IP, ACC, or RHY)",
                    opts.set
                ))
            })?;
            let measure = Measure::parse(&opts.measure).ok_or_else(|| {
                Error::Config(format!(
                    "field measure: unknown measure {:?} (expected convergence or synchrony)",
                    opts.measure
                ))
            })?;
            let records = pipeline::read_entrain_jsonl(&opts.out.join(pipeline::ENTRAIN_OUT))?;
            let svg = prosent::plot::plot_profiles(&records, &opts.da, set, measure)?;
            let path = opts.out.join(format!(
                "profile_{}_{}_{}.svg",
                opts.da,
                set.as_str(),
                measure.as_str()
            ));
            std::fs::write(&path, svg)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(3);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run_command(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
