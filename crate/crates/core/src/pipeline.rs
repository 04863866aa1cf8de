//! End-to-end orchestration: per-channel preprocessing and structure
//! detection, per-segment feature assembly, entrainment measurement,
//! statistics, and the on-disk report bundle.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::PipelineConfig;
use crate::corpus::{self, ChannelKey, Corpus};
use crate::dialacts::{
    assign_groupings, compute_da_probs, label_predictability, Condition, DialogActSegment,
};
use crate::entrain::{
    compute_entrainment, EntrainmentRecord, Measure, PairReport, SegmentFeatures,
};
use crate::error::{Error, Result};
use crate::features::{
    acc_features, gen_features, gf0_features, ip_features, rhy_features, DialogActContext,
    FeatureSet, FeatureVector,
};
use crate::signal::{
    extract_f0_autocorr, interpolate_gaps, mark_outliers, rms_energy_with, savgol_smooth,
    semitone_transform, AudioBuffer, SampledTrack,
};
use crate::stats::{
    permutation_group_test, proportion_table, sign_table, GroupTestResult, LabelGrouping,
    ProportionRow, SignCell, DIMENSIONS,
};
use crate::structure::{
    detect_phrase_boundaries, detect_pitch_accents, detect_syllable_nuclei, ProsodicStructure,
    WordSegment,
};
use crate::stylize::{
    fit_accent_poly, fit_register, gestalt_deviation, range_normalize, AccentShape,
};
use crate::synth::mix_seed;

pub const FEATURES_OUT: &str = "features.tsv";
pub const ENTRAIN_OUT: &str = "entrain.jsonl";
pub const SIGNS_OUT: &str = "signs.tsv";
pub const PROPORTIONS_OUT: &str = "proportions.tsv";
pub const GROUP_TESTS_OUT: &str = "group_tests.tsv";
pub const MANIFEST_OUT: &str = "run_manifest.json";
pub const STRUCTURE_OUT: &str = "structure.json";

// ---------------------------------------------------------------------------
// Per-channel analysis
// ---------------------------------------------------------------------------

/// Preprocessed signals of one speaker channel.
#[derive(Debug, Clone)]
pub struct ChannelSignals {
    /// Semitone f0 track: outliers removed, gaps interpolated, smoothed.
    pub st: SampledTrack,
    /// RMS energy track at the f0 track rate.
    pub energy: SampledTrack,
    pub base_hz: f64,
}

/// Signals plus detected prosodic structure.
#[derive(Debug, Clone)]
pub struct ChannelAnalysis {
    pub signals: ChannelSignals,
    pub structure: ProsodicStructure,
}

/// Outlier removal, gap interpolation, smoothing, semitone transform.
pub fn preprocess_f0(raw: &SampledTrack, cfg: &PipelineConfig) -> Result<(SampledTrack, f64)> {
    let marked = mark_outliers(raw, cfg.outlier_iqr_factor);
    let filled = interpolate_gaps(&marked)?;
    let smoothed = savgol_smooth(&filled)?;
    let (st, base) = semitone_transform(&smoothed)?;
    Ok((st, base.base_hz))
}

/// Preprocess one channel's signals and detect its prosodic structure.
pub fn analyze_channel(
    audio: &AudioBuffer,
    raw_f0: &SampledTrack,
    words: &[WordSegment],
    cfg: &PipelineConfig,
) -> Result<ChannelAnalysis> {
    let (st, base_hz) = preprocess_f0(raw_f0, cfg)?;
    let energy = rms_energy_with(audio, cfg.energy_window_s)?;
    let nuclei = detect_syllable_nuclei(audio, &cfg.nuclei_config());
    let scfg = cfg.structure_config();
    let (phrase_boundaries, _) = detect_phrase_boundaries(words, &st, &nuclei, &scfg)?;
    let (accents, _) = detect_pitch_accents(words, &st, &energy, &nuclei, &scfg)?;
    Ok(ChannelAnalysis {
        signals: ChannelSignals {
            st,
            energy,
            base_hz,
        },
        structure: ProsodicStructure {
            nuclei,
            phrase_boundaries,
            accents,
        },
    })
}

/// Load and analyze every channel of a contour-mode corpus. Falls back to
/// autocorrelation f0 extraction for channels without a precomputed track.
pub fn analyze_corpus(
    corpus: &Corpus,
    cfg: &PipelineConfig,
) -> Result<BTreeMap<ChannelKey, ChannelAnalysis>> {
    if corpus.is_feature_mode() {
        return Err(Error::MissingInput(
            corpus
                .root
                .join(corpus::WORD_TIER_FILE)
                .display()
                .to_string(),
        ));
    }
    let mut analyses = BTreeMap::new();
    for (key, files) in &corpus.channels {
        let audio_path = files.audio.as_ref().expect("contour channel has audio");
        let audio = corpus::read_wav(audio_path)?;
        let raw_f0 = match &files.f0 {
            Some(path) => corpus::parse_f0_track(path)?,
            None => extract_f0_autocorr(&audio, cfg.f0_min_hz, cfg.f0_max_hz, cfg.f0_params())?,
        };
        let words = corpus
            .words
            .get(key)
            .ok_or_else(|| Error::Config(format!("channel {}_{} has no words", key.0, key.1)))?;
        let analysis = analyze_channel(&audio, &raw_f0, words, cfg)?;
        analyses.insert(key.clone(), analysis);
    }
    Ok(analyses)
}

// ---------------------------------------------------------------------------
// Feature assembly
// ---------------------------------------------------------------------------

/// Split `[start, end)` into phrase intervals at the channel's detected
/// boundaries strictly inside the segment.
fn phrase_intervals(boundaries: &[f64], start: f64, end: f64) -> Vec<(f64, f64)> {
    let mut cuts = vec![start];
    for &b in boundaries {
        if b > start + 1e-6 && b < end - 1e-6 {
            cuts.push(b);
        }
    }
    cuts.push(end);
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

fn merge_vector(out: &mut BTreeMap<String, f64>, v: FeatureVector) {
    let set = v.set.as_str();
    for (name, value) in v.entries {
        out.insert(format!("{set}.{name}"), value);
    }
}

/// Fit an accent's shape against the register of its enclosing phrase:
/// cubic over the phrase-normalized contour, local register lines, and the
/// Gestalt deviation between the two.
fn accent_shape(
    st: &SampledTrack,
    nucleus: f64,
    phrase: (f64, f64),
    cfg: &PipelineConfig,
) -> Option<AccentShape> {
    let phrase_reg = fit_register(st, phrase, cfg.register_params());
    let phrase_slice = st.slice(phrase.0, phrase.1);
    if phrase_slice.is_empty() {
        return None;
    }
    let normalized = range_normalize(&phrase_slice, &phrase_reg);
    let poly = fit_accent_poly(&normalized, nucleus, cfg.accent_window_s, phrase).ok()?;
    let half = cfg.accent_window_s / 2.0;
    let window = (
        (nucleus - half).max(phrase.0),
        (nucleus + half).min(phrase.1),
    );
    let local = fit_register(st, window, cfg.register_params());
    let (gestalt_lev, gestalt_rng) = gestalt_deviation(&local, &phrase_reg, window);
    Some(AccentShape {
        poly,
        local_register: local,
        gestalt_lev_rmsd: gestalt_lev,
        gestalt_rng_rmsd: gestalt_rng,
        nucleus_time: nucleus,
    })
}

/// Assemble the full per-segment feature map from one channel's signals
/// and structure.
pub fn assemble_segment(
    seg: &DialogActSegment,
    chan: &ChannelAnalysis,
    cfg: &PipelineConfig,
) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    let st = &chan.signals.st;
    let energy = &chan.signals.energy;
    let structure = &chan.structure;

    if let Ok(v) = gen_features(energy, seg.start, seg.end) {
        merge_vector(&mut out, v);
    }
    if let Ok(v) = gf0_features(st, seg.start, seg.end) {
        merge_vector(&mut out, v);
    }

    let intervals = phrase_intervals(&structure.phrase_boundaries, seg.start, seg.end);
    let reg_of = |iv: (f64, f64)| {
        if st.index_range(iv.0, iv.1).is_empty() {
            None
        } else {
            Some(fit_register(st, iv, cfg.register_params()))
        }
    };
    let first_phrase = intervals.first().copied().and_then(reg_of);
    let last_phrase = intervals.last().copied().and_then(reg_of);

    let segment_accents: Vec<f64> = structure
        .accents
        .iter()
        .copied()
        .filter(|&t| t >= seg.start && t < seg.end)
        .collect();
    let shape_of = |nucleus: f64| {
        let phrase = intervals
            .iter()
            .copied()
            .find(|&(lo, hi)| nucleus >= lo && nucleus < hi)?;
        accent_shape(st, nucleus, phrase, cfg)
    };
    let first_accent = segment_accents.first().copied().and_then(shape_of);
    let last_accent = segment_accents.last().copied().and_then(shape_of);

    let nuclei_in_segment: Vec<f64> = structure
        .nuclei
        .iter()
        .copied()
        .filter(|&t| t >= seg.start && t < seg.end)
        .collect();

    let ctx = DialogActContext {
        first_phrase,
        last_phrase,
        first_accent,
        last_accent,
        nuclei_in_segment: nuclei_in_segment.clone(),
    };
    merge_vector(&mut out, ip_features(&ctx));
    merge_vector(&mut out, acc_features(&ctx));
    merge_vector(
        &mut out,
        rhy_features(st, energy, &structure.nuclei, seg.start, seg.end),
    );
    out
}

/// Assemble per-segment features for a whole analyzed corpus.
pub fn assemble_corpus(
    corpus: &Corpus,
    analyses: &BTreeMap<ChannelKey, ChannelAnalysis>,
    cfg: &PipelineConfig,
) -> Result<Vec<SegmentFeatures>> {
    let mut rows = Vec::with_capacity(corpus.segments.len());
    for seg in &corpus.segments {
        let key = (seg.dialog_id.clone(), seg.speaker.clone());
        let chan = analyses
            .get(&key)
            .ok_or_else(|| Error::Config(format!("no analysis for channel {}_{}", key.0, key.1)))?;
        let values = assemble_segment(seg, chan, cfg);
        rows.push(SegmentFeatures {
            segment: seg.clone(),
            values,
        });
    }
    Ok(rows)
}

/// The corpus's feature rows: precomputed in feature mode, otherwise
/// detected and assembled from the signals.
pub fn corpus_features(corpus: &Corpus, cfg: &PipelineConfig) -> Result<Vec<SegmentFeatures>> {
    match &corpus.precomputed {
        Some(rows) => Ok(rows.clone()),
        None => {
            let analyses = analyze_corpus(corpus, cfg)?;
            assemble_corpus(corpus, &analyses, cfg)
        }
    }
}

// ---------------------------------------------------------------------------
// Entrainment and statistics
// ---------------------------------------------------------------------------

/// Run the configured number of pair-sampling repetitions over the
/// condition-admitted segments.
pub fn run_entrainment(
    rows: &[SegmentFeatures],
    cfg: &PipelineConfig,
) -> (Vec<EntrainmentRecord>, Vec<PairReport>) {
    let admitted: Vec<SegmentFeatures> = rows
        .iter()
        .filter(|r| cfg.condition_filter.admits(r.segment.condition))
        .cloned()
        .collect();
    let mut records = Vec::new();
    let mut reports = Vec::new();
    for r in 0..cfg.n_resamples.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(cfg.seed, r as u64));
        let (recs, report) =
            compute_entrainment(&admitted, cfg.condition_matched_across, r, &mut rng);
        records.extend(recs);
        reports.push(report);
    }
    (records, reports)
}

/// Label-level grouping assignments over the admitted segments.
pub fn label_groupings(
    segments: &[DialogActSegment],
    frozen: bool,
) -> Result<BTreeMap<String, LabelGrouping>> {
    let probs = compute_da_probs(segments);
    let occurrence = assign_groupings(segments, &probs, frozen)?;
    let predictability = label_predictability(segments, &occurrence);
    let mut map: BTreeMap<String, LabelGrouping> = BTreeMap::new();
    for (seg, g) in segments.iter().zip(&occurrence) {
        map.entry(seg.label.clone()).or_insert(LabelGrouping {
            authority: g.authority,
            support: g.support,
            frequency: g.frequency,
            predictability: g.predictability,
        });
    }
    for (label, level) in predictability {
        if let Some(entry) = map.get_mut(&label) {
            entry.predictability = level;
        }
    }
    Ok(map)
}

/// One row of the sign grid output: a cell tagged with the resample it came
/// from ("all" for the across-resample consensus).
#[derive(Debug, Clone)]
pub struct TaggedCell {
    pub resample: String,
    pub cell: SignCell,
}

/// Per-resample sign tables plus a consensus table (majority sign with
/// ties to '0', median p, averaged means, summed pair counts).
pub fn sign_tables(
    records: &[EntrainmentRecord],
    alpha: f64,
    per_feature: bool,
) -> (Vec<TaggedCell>, Vec<SignCell>) {
    let mut resamples: Vec<usize> = records.iter().map(|r| r.resample).collect();
    resamples.sort_unstable();
    resamples.dedup();

    let mut tagged = Vec::new();
    type CellKey = (Condition, String, FeatureSet, String, Measure);
    let mut by_key: BTreeMap<CellKey, Vec<SignCell>> = BTreeMap::new();
    for &r in &resamples {
        let subset: Vec<EntrainmentRecord> = records
            .iter()
            .filter(|rec| rec.resample == r)
            .cloned()
            .collect();
        for cell in sign_table(&subset, alpha, per_feature) {
            let key = (
                cell.condition,
                cell.da_label.clone(),
                cell.feature_set,
                cell.feature.clone(),
                cell.measure,
            );
            by_key.entry(key).or_default().push(cell.clone());
            tagged.push(TaggedCell {
                resample: r.to_string(),
                cell,
            });
        }
    }

    let mut consensus = Vec::new();
    for ((condition, da_label, feature_set, feature, measure), cells) in by_key {
        let n = cells.len() as f64;
        let count = |s: char| cells.iter().filter(|c| c.sign == s).count();
        let (plus, minus, zero) = (count('+'), count('-'), count('0'));
        let sign = if plus > minus && plus > zero {
            '+'
        } else if minus > plus && minus > zero {
            '-'
        } else if zero > plus && zero > minus {
            '0'
        } else {
            '0'
        };
        let mut ps: Vec<f64> = cells.iter().filter_map(|c| c.p_value).collect();
        ps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let p_value = if ps.is_empty() {
            None
        } else {
            Some(crate::signal::median(&ps))
        };
        let note = if ps.is_empty() {
            "n/a".to_string()
        } else {
            String::new()
        };
        consensus.push(SignCell {
            condition,
            da_label,
            feature_set,
            feature,
            measure,
            sign,
            p_value,
            mean_d_s: cells.iter().map(|c| c.mean_d_s).sum::<f64>() / n,
            mean_d_d: cells.iter().map(|c| c.mean_d_d).sum::<f64>() / n,
            n_within: cells.iter().map(|c| c.n_within).sum(),
            n_across: cells.iter().map(|c| c.n_across).sum(),
            note,
        });
    }
    (tagged, consensus)
}

/// One grouping-contrast permutation test row.
#[derive(Debug, Clone)]
pub struct GroupTestRow {
    pub dimension: String,
    pub condition: Condition,
    pub measure: Measure,
    pub level_a: String,
    pub level_b: String,
    pub result: Option<GroupTestResult>,
}

/// Stratified permutation contrasts of per-segment mean delta d between
/// the two levels of every grouping dimension. Uses the first resample's
/// records; each target segment contributes its across-feature mean delta,
/// stratified by speaker.
pub fn group_tests(
    records: &[EntrainmentRecord],
    groupings: &BTreeMap<String, LabelGrouping>,
    cfg: &PipelineConfig,
) -> Vec<GroupTestRow> {
    let first_resample = records.iter().map(|r| r.resample).min();
    let Some(r0) = first_resample else {
        return Vec::new();
    };
    // (condition, measure, dialog, segment) → (sum d, n, speaker, label)
    type TargetKey = (Condition, Measure, String, usize);
    let mut targets: BTreeMap<TargetKey, (f64, usize, String, String)> = BTreeMap::new();
    for rec in records.iter().filter(|r| r.resample == r0) {
        let key = (
            rec.condition,
            rec.measure,
            rec.dialog_id.clone(),
            rec.segment_index,
        );
        let entry =
            targets
                .entry(key)
                .or_insert((0.0, 0, rec.speaker.clone(), rec.da_label.clone()));
        entry.0 += rec.d;
        entry.1 += 1;
    }

    let mut conditions: Vec<Condition> = targets.keys().map(|k| k.0).collect();
    conditions.sort();
    conditions.dedup();

    let mut rows = Vec::new();
    let mut test_index = 0u64;
    for dimension in DIMENSIONS {
        let levels = match dimension {
            "support" => ["yes", "no"],
            _ => ["high", "low"],
        };
        for &condition in &conditions {
            for measure in Measure::ALL {
                test_index += 1;
                let mut deltas = Vec::new();
                let mut in_a = Vec::new();
                let mut strata = Vec::new();
                for ((cond, m, _, _), (sum, n, speaker, label)) in &targets {
                    if *cond != condition || *m != measure {
                        continue;
                    }
                    let Some(g) = groupings.get(label) else {
                        continue;
                    };
                    let level = match dimension {
                        "authority" => g.authority.as_str(),
                        "support" => g.support.as_str(),
                        "frequency" => g.frequency.as_str(),
                        _ => g.predictability.as_str(),
                    };
                    deltas.push(sum / *n as f64);
                    in_a.push(level == levels[0]);
                    strata.push(speaker.clone());
                }
                let result = permutation_group_test(
                    &deltas,
                    &in_a,
                    &strata,
                    cfg.n_permutations,
                    mix_seed(cfg.seed, 0x47_52_50 + test_index),
                )
                .ok();
                rows.push(GroupTestRow {
                    dimension: dimension.to_string(),
                    condition,
                    measure,
                    level_a: levels[0].to_string(),
                    level_b: levels[1].to_string(),
                    result,
                });
            }
        }
    }
    rows
}

// ---------------------------------------------------------------------------
// Output writers
// ---------------------------------------------------------------------------

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_entrain_jsonl(path: &Path, records: &[EntrainmentRecord]) -> Result<()> {
    let mut out = String::new();
    for rec in records {
        let line = serde_json::to_string(rec)
            .map_err(|e| Error::Config(format!("record serialization: {e}")))?;
        out.push_str(&line);
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn read_entrain_jsonl(path: &Path) -> Result<Vec<EntrainmentRecord>> {
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    let body = std::fs::read_to_string(path)?;
    let mut records = Vec::new();
    for (i, line) in body.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: EntrainmentRecord =
            serde_json::from_str(line).map_err(|e| Error::parse(path, i + 1, e.to_string()))?;
        records.push(rec);
    }
    Ok(records)
}

fn sign_row(resample: &str, c: &SignCell) -> String {
    format!(
        "{resample}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        c.condition,
        c.da_label,
        c.feature_set,
        c.feature,
        c.measure,
        c.sign,
        fmt_opt(c.p_value),
        c.mean_d_s,
        c.mean_d_d,
        c.n_within,
        c.n_across,
        c.note
    )
}

pub fn write_signs_tsv(path: &Path, tagged: &[TaggedCell], consensus: &[SignCell]) -> Result<()> {
    let mut out = String::from(
        "resample\tcondition\tda_label\tfeature_set\tfeature\tmeasure\tsign\tp_value\tmean_d_s\tmean_d_d\tn_within\tn_across\tnote\n",
    );
    for t in tagged {
        out.push_str(&sign_row(&t.resample, &t.cell));
    }
    for c in consensus {
        out.push_str(&sign_row("all", c));
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn write_proportions_tsv(
    path: &Path,
    per_resample: &[(String, Vec<ProportionRow>)],
    consensus: &[ProportionRow],
) -> Result<()> {
    let mut out = String::from("resample\tdimension\tlevel\tcondition\tp_plus\tp_minus\tn_cells\n");
    let push = |tag: &str, r: &ProportionRow, out: &mut String| {
        out.push_str(&format!(
            "{tag}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.dimension, r.level, r.condition, r.p_plus, r.p_minus, r.n_cells
        ));
    };
    for (tag, rows) in per_resample {
        for r in rows {
            push(tag, r, &mut out);
        }
    }
    for r in consensus {
        push("all", r, &mut out);
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn write_group_tests_tsv(path: &Path, rows: &[GroupTestRow]) -> Result<()> {
    let mut out = String::from(
        "dimension\tcondition\tmeasure\tlevel_a\tlevel_b\tmean_a\tmean_b\tobserved_diff\tp\tn_a\tn_b\tn_excluded\tnote\n",
    );
    for row in rows {
        match &row.result {
            Some(r) => out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t\n",
                row.dimension,
                row.condition,
                row.measure,
                row.level_a,
                row.level_b,
                r.mean_a,
                r.mean_b,
                r.observed_diff,
                r.p,
                r.n_a,
                r.n_b,
                r.n_excluded
            )),
            None => out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t\t\t\t\t\t\t\tn/a\n",
                row.dimension, row.condition, row.measure, row.level_a, row.level_b
            )),
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: String,
    pub seed: u64,
    pub config: PipelineConfig,
    /// SHA-256 of every corpus input file, keyed by relative path.
    pub inputs: BTreeMap<String, String>,
}

pub fn write_manifest(path: &Path, cfg: &PipelineConfig, corpus_root: &Path) -> Result<()> {
    let manifest = RunManifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.seed,
        config: cfg.clone(),
        inputs: corpus::input_digests(corpus_root)?,
    };
    let mut body = serde_json::to_string_pretty(&manifest)
        .map_err(|e| Error::Config(format!("manifest serialization: {e}")))?;
    body.push('\n');
    std::fs::write(path, body)?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct StructureFile {
    /// Keyed by "{dialog_id}_{speaker}".
    pub channels: BTreeMap<String, StructureEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct StructureEntry {
    pub nuclei: Vec<f64>,
    pub boundaries: Vec<f64>,
    pub accents: Vec<f64>,
}

pub fn write_structure_json(
    path: &Path,
    analyses: &BTreeMap<ChannelKey, ChannelAnalysis>,
) -> Result<()> {
    let mut file = StructureFile::default();
    for (key, a) in analyses {
        file.channels.insert(
            format!("{}_{}", key.0, key.1),
            StructureEntry {
                nuclei: a.structure.nuclei.clone(),
                boundaries: a.structure.phrase_boundaries.clone(),
                accents: a.structure.accents.clone(),
            },
        );
    }
    let mut body = serde_json::to_string_pretty(&file)
        .map_err(|e| Error::Config(format!("structure serialization: {e}")))?;
    body.push('\n');
    std::fs::write(path, body)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Stage entry points
// ---------------------------------------------------------------------------

fn ensure_out(out_dir: &Path) -> Result<()> {
    std::fs::create_dir_all(out_dir)?;
    Ok(())
}

/// Preprocess every channel and write semitone and energy tracks.
pub fn stage_extract(
    corpus_dir: &Path,
    out_dir: &Path,
    cfg: &PipelineConfig,
) -> Result<Vec<PathBuf>> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let analyses = analyze_corpus(&corpus, cfg)?;
    ensure_out(&out_dir.join("tracks"))?;
    let mut written = Vec::new();
    for (key, a) in &analyses {
        let stem = format!("{}_{}", key.0, key.1);
        let st_path = out_dir.join("tracks").join(format!("{stem}.st"));
        corpus::write_f0_track(&st_path, &a.signals.st)?;
        written.push(st_path);
        let en_path = out_dir.join("tracks").join(format!("{stem}.energy"));
        corpus::write_f0_track(&en_path, &a.signals.energy)?;
        written.push(en_path);
    }
    Ok(written)
}

/// Detect structure on every channel and write `structure.json`.
pub fn stage_detect(corpus_dir: &Path, out_dir: &Path, cfg: &PipelineConfig) -> Result<PathBuf> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let analyses = analyze_corpus(&corpus, cfg)?;
    ensure_out(out_dir)?;
    let path = out_dir.join(STRUCTURE_OUT);
    write_structure_json(&path, &analyses)?;
    Ok(path)
}

/// Assemble per-segment features and write the feature table.
pub fn stage_features(corpus_dir: &Path, out_dir: &Path, cfg: &PipelineConfig) -> Result<PathBuf> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let rows = corpus_features(&corpus, cfg)?;
    ensure_out(out_dir)?;
    let path = out_dir.join(FEATURES_OUT);
    corpus::write_features_tsv(&path, &rows)?;
    Ok(path)
}

fn load_feature_rows(corpus: &Corpus, out_dir: &Path) -> Result<Vec<SegmentFeatures>> {
    if let Some(rows) = &corpus.precomputed {
        return Ok(rows.clone());
    }
    let path = out_dir.join(FEATURES_OUT);
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    corpus::parse_features_tsv(&path, &corpus.segments)
}

/// Measure entrainment over previously assembled features and write the
/// per-record JSONL.
pub fn stage_entrain(
    corpus_dir: &Path,
    out_dir: &Path,
    cfg: &PipelineConfig,
) -> Result<(PathBuf, Vec<PairReport>)> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let rows = load_feature_rows(&corpus, out_dir)?;
    let (records, reports) = run_entrainment(&rows, cfg);
    ensure_out(out_dir)?;
    let path = out_dir.join(ENTRAIN_OUT);
    write_entrain_jsonl(&path, &records)?;
    Ok((path, reports))
}

/// Compute sign grids, proportion tables, and grouping contrasts from the
/// entrainment records and write the three report tables.
pub fn stage_stats(
    corpus_dir: &Path,
    out_dir: &Path,
    cfg: &PipelineConfig,
) -> Result<Vec<PathBuf>> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let records = read_entrain_jsonl(&out_dir.join(ENTRAIN_OUT))?;
    write_stats_outputs(&corpus.segments, &records, out_dir, cfg)
}

fn write_stats_outputs(
    segments: &[DialogActSegment],
    records: &[EntrainmentRecord],
    out_dir: &Path,
    cfg: &PipelineConfig,
) -> Result<Vec<PathBuf>> {
    ensure_out(out_dir)?;
    let admitted: Vec<DialogActSegment> = segments
        .iter()
        .filter(|s| cfg.condition_filter.admits(s.condition))
        .cloned()
        .collect();
    let groupings = label_groupings(&admitted, cfg.frozen_groupings)?;

    let (tagged, consensus) = sign_tables(records, cfg.alpha, cfg.per_feature);
    let signs_path = out_dir.join(SIGNS_OUT);
    write_signs_tsv(&signs_path, &tagged, &consensus)?;

    let mut resamples: Vec<String> = tagged.iter().map(|t| t.resample.clone()).collect();
    resamples.dedup();
    let mut per_resample = Vec::new();
    for r in resamples {
        let cells: Vec<SignCell> = tagged
            .iter()
            .filter(|t| t.resample == r)
            .map(|t| t.cell.clone())
            .collect();
        per_resample.push((r, proportion_table(&cells, &groupings)));
    }
    let consensus_props = proportion_table(&consensus, &groupings);
    let props_path = out_dir.join(PROPORTIONS_OUT);
    write_proportions_tsv(&props_path, &per_resample, &consensus_props)?;

    let tests = group_tests(records, &groupings, cfg);
    let tests_path = out_dir.join(GROUP_TESTS_OUT);
    write_group_tests_tsv(&tests_path, &tests)?;

    Ok(vec![signs_path, props_path, tests_path])
}

/// Summary of a full pipeline run, for reporting.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub n_segments: usize,
    pub n_records: usize,
    pub reports: Vec<PairReport>,
    pub outputs: Vec<PathBuf>,
}

/// Run every stage and write the complete report bundle plus manifest.
pub fn run_pipeline(corpus_dir: &Path, out_dir: &Path, cfg: &PipelineConfig) -> Result<RunSummary> {
    let corpus = corpus::load_corpus(corpus_dir)?;
    let rows = corpus_features(&corpus, cfg)?;
    ensure_out(out_dir)?;
    let mut outputs = Vec::new();

    let features_path = out_dir.join(FEATURES_OUT);
    corpus::write_features_tsv(&features_path, &rows)?;
    outputs.push(features_path);

    let (records, reports) = run_entrainment(&rows, cfg);
    let entrain_path = out_dir.join(ENTRAIN_OUT);
    write_entrain_jsonl(&entrain_path, &records)?;
    outputs.push(entrain_path);

    outputs.extend(write_stats_outputs(
        &corpus.segments,
        &records,
        out_dir,
        cfg,
    )?);

    let manifest_path = out_dir.join(MANIFEST_OUT);
    write_manifest(&manifest_path, cfg, corpus_dir)?;
    outputs.push(manifest_path);

    Ok(RunSummary {
        n_segments: corpus.segments.len(),
        n_records: records.len(),
        reports,
        outputs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{self, SynthMode, SynthScenario};

    fn feature_scenario() -> SynthScenario {
        SynthScenario {
            mode: SynthMode::Feature,
            n_dialogs: 4,
            n_segments_per_dialog: 24,
            seed: 17,
            coupling: [("EX".to_string(), 0.9)].into_iter().collect(),
            ..SynthScenario::default()
        }
    }

    #[test]
    fn phrase_intervals_partition_segment() {
        let iv = phrase_intervals(&[1.0, 2.5, 9.0], 0.5, 3.0);
        assert_eq!(iv, vec![(0.5, 1.0), (1.0, 2.5), (2.5, 3.0)]);
        let single = phrase_intervals(&[9.0], 0.5, 3.0);
        assert_eq!(single, vec![(0.5, 3.0)]);
        // boundary at the exact segment end is not an interior cut
        let edge = phrase_intervals(&[3.0], 0.5, 3.0);
        assert_eq!(edge, vec![(0.5, 3.0)]);
    }

    #[test]
    fn feature_mode_run_produces_full_bundle() {
        let corpus_dir = tempfile::tempdir().unwrap();
        let out_dir = tempfile::tempdir().unwrap();
        synth::write_corpus(corpus_dir.path(), &feature_scenario()).unwrap();
        let cfg = PipelineConfig {
            n_resamples: 2,
            n_permutations: 50,
            ..PipelineConfig::default()
        };
        let summary = run_pipeline(corpus_dir.path(), out_dir.path(), &cfg).unwrap();
        assert_eq!(summary.n_segments, 96);
        assert!(summary.n_records > 0);
        for name in [
            FEATURES_OUT,
            ENTRAIN_OUT,
            SIGNS_OUT,
            PROPORTIONS_OUT,
            GROUP_TESTS_OUT,
            MANIFEST_OUT,
        ] {
            assert!(out_dir.path().join(name).is_file(), "{name} missing");
        }
        // records round-trip through the JSONL
        let records = read_entrain_jsonl(&out_dir.path().join(ENTRAIN_OUT)).unwrap();
        assert_eq!(records.len(), summary.n_records);
        // manifest replays: identical second run
        let out2 = tempfile::tempdir().unwrap();
        run_pipeline(corpus_dir.path(), out2.path(), &cfg).unwrap();
        for name in [
            FEATURES_OUT,
            ENTRAIN_OUT,
            SIGNS_OUT,
            PROPORTIONS_OUT,
            GROUP_TESTS_OUT,
        ] {
            let a = std::fs::read(out_dir.path().join(name)).unwrap();
            let b = std::fs::read(out2.path().join(name)).unwrap();
            assert_eq!(a, b, "{name} differs between identical runs");
        }
    }

    #[test]
    fn consensus_majority_and_tie_rules() {
        use crate::entrain::EntrainmentRecord;
        // two resamples with clearly opposite data would each produce a
        // cell; here both agree, so consensus keeps the sign
        let mk = |resample: usize, d_s: f64, d_d: f64, i: usize| EntrainmentRecord {
            resample,
            dialog_id: "d0".into(),
            segment_index: i,
            speaker: "d0_B".into(),
            da_label: "EX".into(),
            condition: Condition::Cooperative,
            feature_set: FeatureSet::Gen,
            feature: "max".into(),
            measure: Measure::Convergence,
            d_s,
            d_d,
            d: d_s - d_d,
        };
        let mut records = Vec::new();
        for r in 0..2 {
            for i in 0..40 {
                records.push(mk(r, 0.1 + 0.001 * i as f64, 2.0 + 0.001 * i as f64, i));
            }
        }
        let (tagged, consensus) = sign_tables(&records, 0.05, false);
        assert_eq!(tagged.len(), 2);
        assert_eq!(consensus.len(), 1);
        assert_eq!(consensus[0].sign, '+');
        assert_eq!(consensus[0].n_within, 80);
        assert!(consensus[0].p_value.unwrap() < 0.05);
    }

    #[test]
    fn stats_stage_round_trips_through_files() {
        let corpus_dir = tempfile::tempdir().unwrap();
        let out_dir = tempfile::tempdir().unwrap();
        synth::write_corpus(corpus_dir.path(), &feature_scenario()).unwrap();
        let cfg = PipelineConfig {
            n_resamples: 1,
            n_permutations: 20,
            ..PipelineConfig::default()
        };
        let (path, reports) = stage_entrain(corpus_dir.path(), out_dir.path(), &cfg).unwrap();
        assert!(path.is_file());
        assert_eq!(reports.len(), 1);
        assert!(reports[0].n_complete_pairs > 0);
        let written = stage_stats(corpus_dir.path(), out_dir.path(), &cfg).unwrap();
        assert_eq!(written.len(), 3);
        let signs = std::fs::read_to_string(&written[0]).unwrap();
        assert!(signs.lines().count() > 1);
        let props = std::fs::read_to_string(&written[1]).unwrap();
        // every emitted proportion row satisfies p_plus + p_minus ≤ 1
        for line in props.lines().skip(1) {
            let cols: Vec<&str> = line.split('\t').collect();
            let p_plus: f64 = cols[4].parse().unwrap();
            let p_minus: f64 = cols[5].parse().unwrap();
            assert!(p_plus + p_minus <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn extract_refuses_feature_mode_corpora() {
        let corpus_dir = tempfile::tempdir().unwrap();
        let out_dir = tempfile::tempdir().unwrap();
        synth::write_corpus(corpus_dir.path(), &feature_scenario()).unwrap();
        let err = stage_extract(
            corpus_dir.path(),
            out_dir.path(),
            &PipelineConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingInput(_)));
    }

    #[test]
    fn contour_corpus_runs_end_to_end_small() {
        let corpus_dir = tempfile::tempdir().unwrap();
        let out_dir = tempfile::tempdir().unwrap();
        let scenario = SynthScenario {
            mode: SynthMode::Contour,
            n_dialogs: 1,
            n_segments_per_dialog: 6,
            seed: 23,
            ..SynthScenario::default()
        };
        synth::write_corpus(corpus_dir.path(), &scenario).unwrap();
        let cfg = PipelineConfig {
            n_resamples: 1,
            n_permutations: 20,
            ..PipelineConfig::default()
        };
        let summary = run_pipeline(corpus_dir.path(), out_dir.path(), &cfg).unwrap();
        assert_eq!(summary.n_segments, 6);
        // feature table holds real detected values for most segments
        let corpus = corpus::load_corpus(corpus_dir.path()).unwrap();
        let rows = corpus::parse_features_tsv(&out_dir.path().join(FEATURES_OUT), &corpus.segments)
            .unwrap();
        let with_gf0 = rows
            .iter()
            .filter(|r| r.values.contains_key("GF0.med"))
            .count();
        assert!(with_gf0 >= 5, "only {with_gf0} segments carry GF0");
        let with_rhy = rows
            .iter()
            .filter(|r| r.values.get("RHY.syl.rate").is_some_and(|&v| v > 2.0))
            .count();
        assert!(
            with_rhy >= 5,
            "only {with_rhy} segments carry a syllable rate"
        );
    }
}
