//! Pipeline configuration: every tunable of the processing chain, with
//! defaults matching the method's stated parameter values. Serialized as
//! JSON; a config round-trips losslessly.

use serde::{Deserialize, Serialize};

use crate::dialacts::Condition;
use crate::signal::F0Params;
use crate::structure::{NucleiConfig, StructureConfig};
use crate::stylize::RegisterParams;

/// Which game conditions a run analyzes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ConditionFilter {
    Coop,
    Comp,
    #[default]
    Both,
}

impl ConditionFilter {
    pub fn admits(self, condition: Condition) -> bool {
        match self {
            ConditionFilter::Coop => condition == Condition::Cooperative,
            ConditionFilter::Comp => condition == Condition::Competitive,
            ConditionFilter::Both => true,
        }
    }

    pub fn parse(s: &str) -> Option<ConditionFilter> {
        match s {
            "coop" => Some(ConditionFilter::Coop),
            "comp" => Some(ConditionFilter::Comp),
            "both" => Some(ConditionFilter::Both),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    // Run-level settings.
    pub seed: u64,
    /// Independent pair-sampling repetitions.
    pub n_resamples: usize,
    /// Significance level for the sign grids.
    pub alpha: f64,
    /// Analyze only dialogs of this condition.
    pub condition_filter: ConditionFilter,
    /// Test each feature separately instead of pooling per feature set.
    pub per_feature: bool,
    /// Use the fixed reference frequency grouping instead of the
    /// corpus-at-hand median split.
    pub frozen_groupings: bool,
    /// Restrict across-dialog partners to the target's condition.
    pub condition_matched_across: bool,
    /// Permutations per grouping contrast test.
    pub n_permutations: usize,

    // Track extraction and preprocessing.
    pub track_sample_rate: f64,
    pub f0_min_hz: f64,
    pub f0_max_hz: f64,
    pub f0_frame_len_s: f64,
    pub voicing_threshold: f64,
    pub outlier_iqr_factor: f64,
    pub energy_window_s: f64,

    // Syllable nucleus detection.
    pub nuclei_band_low_hz: f64,
    pub nuclei_band_high_hz: f64,
    pub nuclei_analysis_window_s: f64,
    pub nuclei_reference_window_s: f64,
    pub nuclei_step_s: f64,
    pub nuclei_energy_factor: f64,
    pub nuclei_max_fraction: f64,
    pub nuclei_min_gap_s: f64,

    // Boundary / accent detection.
    pub pause_gap_s: f64,
    pub boundary_context_s: f64,
    pub pause_vicinity_s: f64,
    pub min_phrase_s: f64,
    pub t_accent_s: f64,
    pub t_no_accent_s: f64,

    // Stylization.
    pub register_window_s: f64,
    pub register_step_s: f64,
    pub accent_window_s: f64,

    // Rhythm.
    pub dct_cutoff_hz: f64,
    pub dct_band_hz: f64,
    /// Include the k = 0 (mean) coefficient in the band-weight sums.
    pub dct_include_dc: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            seed: 1,
            n_resamples: 10,
            alpha: 0.05,
            condition_filter: ConditionFilter::Both,
            per_feature: false,
            frozen_groupings: false,
            condition_matched_across: true,
            n_permutations: 1000,

            track_sample_rate: 100.0,
            f0_min_hz: 75.0,
            f0_max_hz: 500.0,
            f0_frame_len_s: 0.040,
            voicing_threshold: 0.45,
            outlier_iqr_factor: 2.0,
            energy_window_s: 0.050,

            nuclei_band_low_hz: 200.0,
            nuclei_band_high_hz: 3000.0,
            nuclei_analysis_window_s: 0.050,
            nuclei_reference_window_s: 0.200,
            nuclei_step_s: 0.050,
            nuclei_energy_factor: 1.1,
            nuclei_max_fraction: 0.05,
            nuclei_min_gap_s: 0.100,

            pause_gap_s: 0.200,
            boundary_context_s: 0.500,
            pause_vicinity_s: 1.0,
            min_phrase_s: 1.0,
            t_accent_s: 0.5,
            t_no_accent_s: 0.1,

            register_window_s: 0.050,
            register_step_s: 0.010,
            accent_window_s: 0.300,

            dct_cutoff_hz: 10.0,
            dct_band_hz: 1.0,
            dct_include_dc: false,
        }
    }
}

impl PipelineConfig {
    pub fn f0_params(&self) -> F0Params {
        F0Params {
            frame_len: self.f0_frame_len_s,
            voicing_threshold: self.voicing_threshold,
        }
    }

    pub fn nuclei_config(&self) -> NucleiConfig {
        NucleiConfig {
            band_low_hz: self.nuclei_band_low_hz,
            band_high_hz: self.nuclei_band_high_hz,
            analysis_window_s: self.nuclei_analysis_window_s,
            reference_window_s: self.nuclei_reference_window_s,
            step_s: self.nuclei_step_s,
            energy_factor: self.nuclei_energy_factor,
            max_fraction: self.nuclei_max_fraction,
            min_gap_s: self.nuclei_min_gap_s,
        }
    }

    pub fn register_params(&self) -> RegisterParams {
        RegisterParams {
            window_s: self.register_window_s,
            step_s: self.register_step_s,
        }
    }

    pub fn structure_config(&self) -> StructureConfig {
        StructureConfig {
            pause_gap_s: self.pause_gap_s,
            boundary_context_s: self.boundary_context_s,
            pause_vicinity_s: self.pause_vicinity_s,
            min_phrase_s: self.min_phrase_s,
            t_accent_s: self.t_accent_s,
            t_no_accent_s: self.t_no_accent_s,
            accent_window_s: self.accent_window_s,
            register: self.register_params(),
        }
    }
}
