//! Script identification: per-character classification, inheritance
//! resolution and the script distribution of a text.
//!
//! The counting unit is the Unicode scalar value. `Zinh` characters take the
//! script of the nearest preceding non-`Zinh` character; a leading `Zinh` run
//! stays `Zinh`. The three special codes compete for the main script on equal
//! footing with proper scripts, so punctuation-only text reports `Zyyy`.

use std::collections::BTreeMap;

use crate::script::ScriptCode;
use crate::ucd::ScriptRangeTable;

/// Per-script character counts of one text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScriptDistribution {
    counts: BTreeMap<ScriptCode, u64>,
    total: u64,
}

impl ScriptDistribution {
    /// Number of scalar values tallied.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, code: ScriptCode) -> u64 {
        self.counts.get(&code).copied().unwrap_or(0)
    }

    /// Counts per script, sorted by code; zero-count entries are never stored.
    pub fn counts(&self) -> &BTreeMap<ScriptCode, u64> {
        &self.counts
    }

    /// Fraction of characters in `code`, exact ratio rendered as `f64`.
    pub fn fraction(&self, code: ScriptCode) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.count(code) as f64 / self.total as f64
        }
    }

    fn insert(&mut self, code: ScriptCode, count: u64) {
        if count > 0 {
            self.counts.insert(code, count);
            self.total += count;
        }
    }
}

/// Main script, its share of the text and the full script distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentificationResult {
    main_script: Option<ScriptCode>,
    distribution: ScriptDistribution,
}

impl IdentificationResult {
    /// The script with the maximal character count; ties resolve to the
    /// lexicographically smallest code. `None` for empty input.
    pub fn main_script(&self) -> Option<ScriptCode> {
        self.main_script
    }

    /// Character count of the main script.
    pub fn main_count(&self) -> u64 {
        self.main_script
            .map(|code| self.distribution.count(code))
            .unwrap_or(0)
    }

    /// Share of the main script in `[0, 1]`; `None` for empty input.
    pub fn main_percentage(&self) -> Option<f64> {
        self.main_script
            .map(|code| self.distribution.fraction(code))
    }

    pub fn distribution(&self) -> &ScriptDistribution {
        &self.distribution
    }
}

/// Classifies every scalar value of `text`, before inheritance resolution.
pub fn classify_chars(table: &ScriptRangeTable, text: &str) -> Vec<ScriptCode> {
    text.chars().map(|c| table.lookup(c)).collect()
}

/// Replaces each `Zinh` with the nearest preceding non-`Zinh` code. A leading
/// `Zinh` run has nothing to inherit from and is left as `Zinh`.
pub fn resolve_inherited(codes: &[ScriptCode]) -> Vec<ScriptCode> {
    let mut resolved = Vec::with_capacity(codes.len());
    let mut last_concrete = ScriptCode::INHERITED;
    for &code in codes {
        if code == ScriptCode::INHERITED {
            resolved.push(last_concrete);
        } else {
            last_concrete = code;
            resolved.push(code);
        }
    }
    resolved
}

/// Computes the script distribution and main script of `text`.
///
/// Equivalent to tallying `resolve_inherited(classify_chars(table, text))`,
/// fused into one pass. Pure and deterministic; results do not depend on how
/// many texts are identified concurrently elsewhere.
pub fn identify(table: &ScriptRangeTable, text: &str) -> IdentificationResult {
    let mut counts = vec![0u64; table.code_count()];
    let mut touched: Vec<u16> = Vec::new();
    let inherited = table.inherited_idx();
    let mut last_concrete = inherited;

    for c in text.chars() {
        let mut idx = table.lookup_idx(c as u32);
        if idx == inherited {
            idx = last_concrete;
        } else {
            last_concrete = idx;
        }
        if counts[idx as usize] == 0 {
            touched.push(idx);
        }
        counts[idx as usize] += 1;
    }

    let mut distribution = ScriptDistribution::default();
    for &idx in &touched {
        distribution.insert(table.code_at(idx), counts[idx as usize]);
    }

    // BTreeMap iterates in code order, so `>` keeps the smallest code on ties.
    let mut main_script = None;
    let mut best = 0u64;
    for (&code, &count) in distribution.counts() {
        if count > best {
            best = count;
            main_script = Some(code);
        }
    }

    IdentificationResult {
        main_script,
        distribution,
    }
}
