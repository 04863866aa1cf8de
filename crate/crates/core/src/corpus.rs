//! Corpus ingestion and the on-disk exchange formats: dialog-act tier,
//! word tier, f0 track files, per-channel WAV audio, and the feature table
//! used both as pipeline output and as feature-mode input.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::dialacts::{Condition, DialogActSegment, LABELS};
use crate::entrain::SegmentFeatures;
use crate::error::{Error, Result};
use crate::features::qualified_feature_names;
use crate::signal::{AudioBuffer, SampledTrack};
use crate::structure::WordSegment;

/// (dialog_id, speaker): one recorded speaker channel.
pub type ChannelKey = (String, String);

pub const DA_TIER_FILE: &str = "da_tier.tsv";
pub const WORD_TIER_FILE: &str = "word_tier.tsv";
pub const FEATURES_FILE: &str = "features.tsv";
pub const TRACKS_DIR: &str = "tracks";
pub const AUDIO_DIR: &str = "audio";

const DA_HEADER: &str = "dialog_id\tspeaker\tstart\tend\tda_label\tcondition";
const WORD_HEADER: &str = "dialog_id\tspeaker\tstart\tend\tword\tstress_nucleus_time";

/// Per-channel input files of a contour-mode corpus.
#[derive(Debug, Clone, Default)]
pub struct ChannelFiles {
    pub f0: Option<PathBuf>,
    pub audio: Option<PathBuf>,
}

/// A loaded corpus: the segment inventory plus either precomputed features
/// (feature mode) or word alignments and per-channel signals (contour mode).
#[derive(Debug, Clone)]
pub struct Corpus {
    pub root: PathBuf,
    /// Sorted by (dialog_id, index_in_dialog).
    pub segments: Vec<DialogActSegment>,
    /// Present iff the corpus ships a feature table (feature mode).
    pub precomputed: Option<Vec<SegmentFeatures>>,
    pub words: BTreeMap<ChannelKey, Vec<WordSegment>>,
    pub channels: BTreeMap<ChannelKey, ChannelFiles>,
}

impl Corpus {
    pub fn is_feature_mode(&self) -> bool {
        self.precomputed.is_some()
    }

    pub fn channel_keys(&self) -> Vec<ChannelKey> {
        let mut keys: Vec<ChannelKey> = self
            .segments
            .iter()
            .map(|s| (s.dialog_id.clone(), s.speaker.clone()))
            .collect();
        keys.sort();
        keys.dedup();
        keys
    }
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    let reader = BufReader::new(std::fs::File::open(path)?);
    Ok(reader.lines().collect::<std::io::Result<Vec<_>>>()?)
}

fn parse_num(path: &Path, line_no: usize, field: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::parse(path, line_no, format!("bad {field} value '{value}'")))
}

fn check_header(path: &Path, lines: &[String], expected: &str) -> Result<()> {
    match lines.first() {
        Some(h) if h.trim_end() == expected => Ok(()),
        Some(h) => Err(Error::parse(
            path,
            1,
            format!("expected header '{expected}', found '{h}'"),
        )),
        None => Err(Error::parse(path, 1, "empty file".to_string())),
    }
}

/// Parse the dialog-act tier. Segments are grouped per dialog, ordered by
/// start time, and given strictly increasing per-dialog indices. Every
/// dialog must carry a single condition.
pub fn parse_da_tier(path: &Path) -> Result<Vec<DialogActSegment>> {
    let lines = read_lines(path)?;
    check_header(path, &lines, DA_HEADER)?;
    let mut by_dialog: BTreeMap<String, Vec<DialogActSegment>> = BTreeMap::new();
    for (i, line) in lines.iter().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 1;
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 6 {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 6 columns, found {}", cols.len()),
            ));
        }
        let start = parse_num(path, line_no, "start", cols[2])?;
        let end = parse_num(path, line_no, "end", cols[3])?;
        if start >= end {
            return Err(Error::parse(
                path,
                line_no,
                format!("start {start} is not before end {end}"),
            ));
        }
        let label = cols[4].to_string();
        if !LABELS.contains(&label.as_str()) {
            return Err(Error::parse(
                path,
                line_no,
                format!("label outside inventory: {label}"),
            ));
        }
        let condition = Condition::parse(cols[5]).ok_or_else(|| {
            Error::parse(path, line_no, format!("unknown condition '{}'", cols[5]))
        })?;
        by_dialog
            .entry(cols[0].to_string())
            .or_default()
            .push(DialogActSegment {
                dialog_id: cols[0].to_string(),
                speaker: cols[1].to_string(),
                label,
                start,
                end,
                condition,
                index_in_dialog: 0,
            });
    }
    let mut segments = Vec::new();
    for (dialog_id, mut segs) in by_dialog {
        segs.sort_by(|a, b| a.start.partial_cmp(&b.start).unwrap());
        let condition = segs[0].condition;
        if segs.iter().any(|s| s.condition != condition) {
            return Err(Error::Config(format!(
                "dialog {dialog_id} mixes game conditions"
            )));
        }
        for (idx, seg) in segs.iter_mut().enumerate() {
            seg.index_in_dialog = idx;
        }
        segments.extend(segs);
    }
    if segments.is_empty() {
        return Err(Error::parse(path, 1, "no segments".to_string()));
    }
    Ok(segments)
}

pub fn write_da_tier(path: &Path, segments: &[DialogActSegment]) -> Result<()> {
    let mut out = String::from(DA_HEADER);
    out.push('\n');
    for s in segments {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            s.dialog_id, s.speaker, s.start, s.end, s.label, s.condition
        ));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Parse the word tier into per-channel word lists sorted by start time.
/// The stress-nucleus column may be empty.
pub fn parse_word_tier(path: &Path) -> Result<BTreeMap<ChannelKey, Vec<WordSegment>>> {
    let lines = read_lines(path)?;
    check_header(path, &lines, WORD_HEADER)?;
    let mut channels: BTreeMap<ChannelKey, Vec<WordSegment>> = BTreeMap::new();
    for (i, line) in lines.iter().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 1;
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 6 {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 6 columns, found {}", cols.len()),
            ));
        }
        let start = parse_num(path, line_no, "start", cols[2])?;
        let end = parse_num(path, line_no, "end", cols[3])?;
        if start >= end {
            return Err(Error::parse(
                path,
                line_no,
                format!("start {start} is not before end {end}"),
            ));
        }
        let stress_nucleus = if cols[5].is_empty() {
            None
        } else {
            Some(parse_num(path, line_no, "stress_nucleus_time", cols[5])?)
        };
        channels
            .entry((cols[0].to_string(), cols[1].to_string()))
            .or_default()
            .push(WordSegment {
                start,
                end,
                word: cols[4].to_string(),
                stress_nucleus,
            });
    }
    for words in channels.values_mut() {
        words.sort_by(|a, b| a.start.partial_cmp(&b.start).unwrap());
    }
    Ok(channels)
}

pub fn write_word_tier(path: &Path, words: &BTreeMap<ChannelKey, Vec<WordSegment>>) -> Result<()> {
    let mut out = String::from(WORD_HEADER);
    out.push('\n');
    for ((dialog, speaker), list) in words {
        for w in list {
            let stress = w.stress_nucleus.map(|t| t.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{dialog}\t{speaker}\t{}\t{}\t{}\t{stress}\n",
                w.start, w.end, w.word
            ));
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Parse a two-column `time_sec f0_hz` track file. Zero or negative f0
/// marks an unvoiced sample. The sample rate is inferred from the median
/// time step; `t0` is the first listed time.
pub fn parse_f0_track(path: &Path) -> Result<SampledTrack> {
    let lines = read_lines(path)?;
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 1;
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() != 2 {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 2 columns, found {}", cols.len()),
            ));
        }
        times.push(parse_num(path, line_no, "time_sec", cols[0])?);
        values.push(parse_num(path, line_no, "f0_hz", cols[1])?);
    }
    if values.is_empty() {
        return Err(Error::parse(path, 1, "empty track".to_string()));
    }
    let sample_rate = if times.len() < 2 {
        crate::signal::TRACK_RATE
    } else {
        let mut steps: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
        steps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dt = steps[steps.len() / 2];
        if dt <= 0.0 {
            return Err(Error::parse(path, 1, "times not increasing".to_string()));
        }
        1.0 / dt
    };
    let valid: Vec<bool> = values.iter().map(|&v| v > 0.0).collect();
    let mut track = SampledTrack::new(values, sample_rate, times[0]);
    track.valid = valid;
    Ok(track)
}

pub fn write_f0_track(path: &Path, track: &SampledTrack) -> Result<()> {
    let mut out = String::new();
    for i in 0..track.len() {
        let v = if track.valid[i] { track.values[i] } else { 0.0 };
        out.push_str(&format!("{:.4} {v}\n", track.time_at(i)));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Read 16-bit mono PCM WAV into a normalized buffer.
pub fn read_wav(path: &Path) -> Result<AudioBuffer> {
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    let mut reader = hound::WavReader::open(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let spec = reader.spec();
    if spec.channels != 1 || spec.bits_per_sample != 16 {
        return Err(Error::Config(format!(
            "{}: expected 16-bit mono PCM",
            path.display()
        )));
    }
    let samples: Vec<f64> = reader
        .samples::<i16>()
        .map(|s| s.map(|v| v as f64 / 32768.0))
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    Ok(AudioBuffer {
        samples,
        sample_rate: spec.sample_rate,
    })
}

pub fn write_wav(path: &Path, audio: &AudioBuffer) -> Result<()> {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate: audio.sample_rate,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut writer = hound::WavWriter::create(path, spec)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    for &s in &audio.samples {
        let v = (s.clamp(-1.0, 1.0) * 32767.0).round() as i16;
        writer
            .write_sample(v)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    writer
        .finalize()
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    Ok(())
}

fn features_header() -> String {
    let mut cols = vec![
        "dialog_id".to_string(),
        "segment_index".to_string(),
        "speaker".to_string(),
        "da_label".to_string(),
        "condition".to_string(),
        "start".to_string(),
        "end".to_string(),
    ];
    cols.extend(qualified_feature_names());
    cols.join("\t")
}

/// Write the feature table: one row per segment, one column per
/// set-qualified feature name, empty cells for missing features.
pub fn write_features_tsv(path: &Path, rows: &[SegmentFeatures]) -> Result<()> {
    let names = qualified_feature_names();
    let mut out = features_header();
    out.push('\n');
    for row in rows {
        let s = &row.segment;
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            s.dialog_id, s.index_in_dialog, s.speaker, s.label, s.condition, s.start, s.end
        ));
        for name in &names {
            out.push('\t');
            if let Some(v) = row.values.get(name) {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Parse a feature table against the segment inventory: rows join on
/// (dialog_id, segment_index) and must agree on speaker and label. Returns
/// one entry per segment, in segment order; segments without a row carry an
/// empty value map.
pub fn parse_features_tsv(
    path: &Path,
    segments: &[DialogActSegment],
) -> Result<Vec<SegmentFeatures>> {
    let lines = read_lines(path)?;
    let expected = features_header();
    check_header(path, &lines, &expected)?;
    let names = qualified_feature_names();
    let mut index: BTreeMap<(String, usize), usize> = BTreeMap::new();
    let mut rows: Vec<SegmentFeatures> = segments
        .iter()
        .enumerate()
        .map(|(i, s)| {
            index.insert((s.dialog_id.clone(), s.index_in_dialog), i);
            SegmentFeatures {
                segment: s.clone(),
                values: BTreeMap::new(),
            }
        })
        .collect();
    for (i, line) in lines.iter().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 1;
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 7 + names.len() {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected {} columns, found {}", 7 + names.len(), cols.len()),
            ));
        }
        let seg_index: usize = cols[1]
            .parse()
            .map_err(|_| Error::parse(path, line_no, format!("bad segment_index '{}'", cols[1])))?;
        let key = (cols[0].to_string(), seg_index);
        let Some(&row_i) = index.get(&key) else {
            return Err(Error::parse(
                path,
                line_no,
                format!(
                    "segment {}:{} not in the dialog-act tier",
                    cols[0], seg_index
                ),
            ));
        };
        let seg = &rows[row_i].segment;
        if seg.speaker != cols[2] || seg.label != cols[3] {
            return Err(Error::parse(
                path,
                line_no,
                format!(
                    "segment {}:{} disagrees with the dialog-act tier",
                    cols[0], seg_index
                ),
            ));
        }
        for (j, name) in names.iter().enumerate() {
            let cell = cols[7 + j];
            if cell.is_empty() {
                continue;
            }
            let v = parse_num(path, line_no, name, cell)?;
            rows[row_i].values.insert(name.clone(), v);
        }
    }
    Ok(rows)
}

/// Load a corpus directory. The dialog-act tier is always required. When a
/// feature table is present, the corpus is feature-mode and signals are not
/// needed; otherwise the word tier and per-channel audio are required
/// (precomputed f0 tracks are used when present, else f0 is extracted).
pub fn load_corpus(root: &Path) -> Result<Corpus> {
    let da_path = root.join(DA_TIER_FILE);
    if !da_path.is_file() {
        return Err(Error::MissingInput(da_path.display().to_string()));
    }
    let segments = parse_da_tier(&da_path)?;

    let features_path = root.join(FEATURES_FILE);
    if features_path.is_file() {
        let precomputed = parse_features_tsv(&features_path, &segments)?;
        return Ok(Corpus {
            root: root.to_path_buf(),
            segments,
            precomputed: Some(precomputed),
            words: BTreeMap::new(),
            channels: BTreeMap::new(),
        });
    }

    let words = parse_word_tier(&root.join(WORD_TIER_FILE))?;
    let mut channels = BTreeMap::new();
    let mut keys: Vec<ChannelKey> = segments
        .iter()
        .map(|s| (s.dialog_id.clone(), s.speaker.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    for key in keys {
        let stem = format!("{}_{}", key.0, key.1);
        let audio = root.join(AUDIO_DIR).join(format!("{stem}.wav"));
        let f0 = root.join(TRACKS_DIR).join(format!("{stem}.f0"));
        if !audio.is_file() {
            return Err(Error::MissingInput(audio.display().to_string()));
        }
        if !words.contains_key(&key) {
            return Err(Error::Config(format!(
                "channel {stem} has no words in {WORD_TIER_FILE}"
            )));
        }
        channels.insert(
            key,
            ChannelFiles {
                f0: f0.is_file().then_some(f0),
                audio: Some(audio),
            },
        );
    }
    Ok(Corpus {
        root: root.to_path_buf(),
        segments,
        precomputed: None,
        words,
        channels,
    })
}

/// SHA-256 digests of every regular file under `root`, keyed by relative
/// path with `/` separators, for the run manifest.
pub fn input_digests(root: &Path) -> Result<BTreeMap<String, String>> {
    let mut files = Vec::new();
    collect_files(root, root, &mut files)?;
    files.sort();
    let mut digests = BTreeMap::new();
    for rel in files {
        let data = std::fs::read(root.join(&rel))?;
        let mut hasher = Sha256::new();
        hasher.update(&data);
        digests.insert(rel, format!("{:x}", hasher.finalize()));
    }
    Ok(digests)
}

fn collect_files(root: &Path, dir: &Path, out: &mut Vec<String>) -> Result<()> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .collect();
    entries.sort();
    for path in entries {
        if path.is_dir() {
            collect_files(root, &path, out)?;
        } else if path.is_file() {
            let rel = path
                .strip_prefix(root)
                .unwrap_or(&path)
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            out.push(rel);
        }
    }
    Ok(())
}
