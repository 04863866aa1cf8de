//! Measurement of prosodic entrainment between dialog partners, resolved
//! per dialog act type.
//!
//! The pipeline runs in stages over two-channel dialog corpora:
//!
//! 1. [`signal`] — f0 and energy track conditioning: outlier removal, gap
//!    interpolation, Savitzky–Golay smoothing, semitone transform, and an
//!    autocorrelation f0 extractor for corpora shipping raw audio only.
//! 2. [`structure`] — prosodic structure detection: syllable nuclei from
//!    the band-passed energy envelope, then phrase boundaries and pitch
//!    accents by unsupervised clustering of contextual prosodic profiles.
//! 3. [`stylize`] — superpositional intonation stylization: phrase-level
//!    register lines (base/mid/top) and range-normalized third-degree
//!    polynomial accent shapes, plus Gestalt deviation measures.
//! 4. [`features`] — per-segment feature sets (GEN, GF0, IP, ACC, RHY)
//!    summarizing energy, pitch, register, accent shape, and rhythm.
//! 5. [`entrain`] — within-dialog vs across-dialog feature deviations per
//!    dialog act segment (convergence and synchrony).
//! 6. [`stats`] — sign grids with Welch tests, grouping proportions, and
//!    stratified permutation contrasts.
//!
//! [`corpus`] reads and writes the on-disk formats, [`synth`] generates
//! verifiable synthetic corpora with planted entrainment, [`pipeline`]
//! orchestrates whole runs, and [`plot`] renders feature-profile SVGs.

pub mod config;
pub mod corpus;
pub mod dialacts;
pub mod entrain;
pub mod error;
pub mod features;
pub mod pipeline;
pub mod plot;
pub mod signal;
pub mod stats;
pub mod structure;
pub mod stylize;
pub mod synth;
