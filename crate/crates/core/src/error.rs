//! Error type shared across the pipeline.
//!
//! Errors fall in two families: data errors (bad or missing corpus input,
//! degenerate signal content) and configuration errors (invalid tunables or
//! scenario files). The CLI maps the former to exit code 2 and the latter to
//! exit code 3.

use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Empty audio or zero-length input where content is required.
    #[error("empty input")]
    EmptyInput,
    /// An interval or band with lower bound >= upper bound.
    #[error("bad range")]
    BadRange,
    /// A track with no voiced (valid) samples cannot be interpolated.
    #[error("no voiced frames")]
    NoVoicedFrames,
    /// Track shorter than the smoothing window.
    #[error("track too short")]
    TrackTooShort,
    /// Non-positive value where a frequency in Hz is required.
    #[error("invalid Hz")]
    InvalidHz,
    /// Classifier initialization found no representatives on one side.
    #[error("cannot bootstrap")]
    CannotBootstrap,
    /// Fewer samples in the accent stylization window than coefficients.
    #[error("accent window underpopulated")]
    AccentWindowUnderpopulated,
    /// A dialog-act interval containing no track samples.
    #[error("empty segment")]
    EmptySegment,
    /// Dialog-act label not in the 12-tag inventory.
    #[error("label outside inventory: {0}")]
    LabelOutsideInventory(String),
    /// Zero-variance samples with unequal means: the t statistic is undefined.
    #[error("degenerate samples")]
    DegenerateSamples,
    /// Permutation test invoked with zero permutations.
    #[error("no permutations")]
    NoPermutations,
    /// An operation over an empty record set (for example, plotting a cell
    /// with no entrainment records).
    #[error("no data")]
    NoData,
    /// A synth scenario whose dialog-act distribution or coupling is invalid.
    #[error("invalid distribution")]
    InvalidDistribution,
    /// A required corpus file is absent.
    #[error("missing input file: {0}")]
    MissingInput(String),
    /// A schema violation in a corpus file, with its location.
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    /// Invalid configuration value or unreadable config file.
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Build a parse error pointing at `path` line `line` (1-based).
    pub fn parse(path: &Path, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.display().to_string(),
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code for the CLI: 3 for configuration errors, 2 for
    /// input/data errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) | Error::InvalidDistribution | Error::NoPermutations => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
