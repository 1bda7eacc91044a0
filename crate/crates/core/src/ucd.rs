//! Unicode Character Database ingestion.
//!
//! Two UCD source files feed the lookup table: `Scripts.txt` assigns the
//! Script property to code point ranges using long property names, and
//! `PropertyValueAliases.txt` maps those long names to ISO 15924 four-letter
//! codes. [`build_table`] combines both into an immutable [`ScriptRangeTable`]
//! that maps every Unicode scalar value to exactly one code.
//!
//! The table compiled from the bundled Unicode 15.0.0 files is embedded in
//! the binary as a generated artifact (see [`ScriptRangeTable::embedded`]),
//! so ordinary lookups need no file I/O.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::script::ScriptCode;

/// One data line of `Scripts.txt`: an inclusive code point range labelled
/// with a script property long name such as `Latin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UcdScriptEntry {
    pub range_start: u32,
    pub range_end: u32,
    pub property_value: String,
}

/// One `sc` line of `PropertyValueAliases.txt`: a script property long name
/// paired with its ISO 15924 code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptAlias {
    pub long_name: String,
    pub code: ScriptCode,
}

#[derive(Debug, Error)]
pub enum UcdParseError {
    #[error("line {line}: malformed code point {token:?}")]
    BadCodepoint { line: usize, token: String },
    #[error("line {line}: code point {value:#X} is not a Unicode scalar value")]
    NotScalarValue { line: usize, value: u32 },
    #[error("line {line}: range start {start:04X} exceeds range end {end:04X}")]
    InvertedRange { line: usize, start: u32, end: u32 },
    #[error("line {line}: expected `<code points> ; <value>`")]
    MissingField { line: usize },
    #[error("line {line}: invalid script code {code:?}")]
    BadScriptCode { line: usize, code: String },
    #[error(
        "line {line}: conflicting aliases for {long_name:?}: {existing} vs {new}"
    )]
    ConflictingAlias {
        line: usize,
        long_name: String,
        existing: ScriptCode,
        new: ScriptCode,
    },
    #[error("line {line}: code {code} already aliased to {existing:?}")]
    DuplicateCode {
        line: usize,
        code: ScriptCode,
        existing: String,
    },
}

/// Strips the trailing `#` comment and surrounding whitespace; returns `None`
/// for lines with no data.
fn data_portion(line: &str) -> Option<&str> {
    let data = line.split('#').next().unwrap_or("").trim();
    if data.is_empty() {
        None
    } else {
        Some(data)
    }
}

fn parse_codepoint(token: &str, line: usize) -> Result<u32, UcdParseError> {
    let value =
        u32::from_str_radix(token, 16).map_err(|_| UcdParseError::BadCodepoint {
            line,
            token: token.to_string(),
        })?;
    if char::from_u32(value).is_none() {
        return Err(UcdParseError::NotScalarValue { line, value });
    }
    Ok(value)
}

/// Parses the textual content of UCD `Scripts.txt`.
///
/// Data lines have the form `XXXX..YYYY ; Value` or `XXXX ; Value`; `#`
/// starts a comment and blank lines are ignored. Line numbers in errors are
/// 1-based over the full input.
pub fn parse_scripts_file(text: &str) -> Result<Vec<UcdScriptEntry>, UcdParseError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some(data) = data_portion(raw) else {
            continue;
        };
        let (cps, value) = data
            .split_once(';')
            .ok_or(UcdParseError::MissingField { line })?;
        let value = value.trim();
        if value.is_empty() || value.contains(|c: char| c.is_whitespace() || c == ';') {
            return Err(UcdParseError::MissingField { line });
        }
        let cps = cps.trim();
        let (start, end) = match cps.split_once("..") {
            Some((a, b)) => (
                parse_codepoint(a.trim(), line)?,
                parse_codepoint(b.trim(), line)?,
            ),
            None => {
                let v = parse_codepoint(cps, line)?;
                (v, v)
            }
        };
        if start > end {
            return Err(UcdParseError::InvertedRange { line, start, end });
        }
        entries.push(UcdScriptEntry {
            range_start: start,
            range_end: end,
            property_value: value.to_string(),
        });
    }
    Ok(entries)
}

/// Parses UCD `PropertyValueAliases.txt`, keeping only `sc` (Script) lines.
///
/// Each relevant line is `sc ; <code> ; <long name> [; <other aliases>]`.
/// The long-name/code mapping must be one-to-one; conflicting entries are
/// rejected, exact duplicates are tolerated.
pub fn parse_aliases_file(text: &str) -> Result<Vec<ScriptAlias>, UcdParseError> {
    let mut aliases: Vec<ScriptAlias> = Vec::new();
    let mut by_name: BTreeMap<String, ScriptCode> = BTreeMap::new();
    let mut by_code: BTreeMap<ScriptCode, String> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some(data) = data_portion(raw) else {
            continue;
        };
        let fields: Vec<&str> = data.split(';').map(str::trim).collect();
        if fields[0] != "sc" {
            continue;
        }
        if fields.len() < 3 {
            return Err(UcdParseError::MissingField { line });
        }
        let code = ScriptCode::new(fields[1]).map_err(|_| UcdParseError::BadScriptCode {
            line,
            code: fields[1].to_string(),
        })?;
        let long_name = fields[2].to_string();
        if let Some(&existing) = by_name.get(&long_name) {
            if existing != code {
                return Err(UcdParseError::ConflictingAlias {
                    line,
                    long_name,
                    existing,
                    new: code,
                });
            }
            continue;
        }
        if let Some(existing) = by_code.get(&code) {
            return Err(UcdParseError::DuplicateCode {
                line,
                code,
                existing: existing.clone(),
            });
        }
        by_name.insert(long_name.clone(), code);
        by_code.insert(code, long_name.clone());
        aliases.push(ScriptAlias { long_name, code });
    }
    Ok(aliases)
}

#[derive(Debug, Error)]
pub enum TableBuildError {
    #[error("no alias for script property value {0:?}")]
    UnknownPropertyValue(String),
    #[error(
        "overlapping ranges: {a_start:04X}..{a_end:04X} ({a_code}) and {b_start:04X}..{b_end:04X} ({b_code})"
    )]
    OverlappingRanges {
        a_start: u32,
        a_end: u32,
        a_code: ScriptCode,
        b_start: u32,
        b_end: u32,
        b_code: ScriptCode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RangeEntry {
    start: u32,
    end: u32,
    code_idx: u16,
}

/// Immutable code point -> ISO 15924 lookup table.
///
/// Entries are sorted by range start and strictly non-overlapping; every
/// scalar value not covered by an entry or an override resolves to `Zzzz`.
/// The table is safe to share across threads and all lookups are pure.
pub struct ScriptRangeTable {
    unicode_version: String,
    /// Interned codes, sorted; range entries and overrides index into this.
    codes: Vec<ScriptCode>,
    /// Long names from the alias table, for presentation.
    names: BTreeMap<ScriptCode, String>,
    entries: Vec<RangeEntry>,
    /// Post-lookup overrides, sorted by code point. U+FFFD -> Zzzz always.
    overrides: Vec<(u32, u16)>,
    /// Direct-index fast path for ASCII, built after overrides.
    ascii: [u16; 128],
    unknown_idx: u16,
    inherited_idx: u16,
    common_idx: u16,
}

impl fmt::Debug for ScriptRangeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScriptRangeTable")
            .field("unicode_version", &self.unicode_version)
            .field("codes", &self.codes.len())
            .field("entries", &self.entries.len())
            .field("overrides", &self.overrides.len())
            .finish()
    }
}

/// Builds a [`ScriptRangeTable`] from parsed `Scripts.txt` entries and the
/// alias table.
///
/// Ranges are sorted and checked for overlap, adjacent ranges that share a
/// code are merged, and the U+FFFD -> `Zzzz` override is installed. Every
/// property value must have an alias.
pub fn build_table(
    entries: &[UcdScriptEntry],
    aliases: &[ScriptAlias],
    unicode_version: &str,
) -> Result<ScriptRangeTable, TableBuildError> {
    build_table_inner(entries, aliases, unicode_version, true)
}

fn build_table_inner(
    entries: &[UcdScriptEntry],
    aliases: &[ScriptAlias],
    unicode_version: &str,
    merge_adjacent: bool,
) -> Result<ScriptRangeTable, TableBuildError> {
    let mut names = BTreeMap::new();
    let mut by_long: BTreeMap<&str, ScriptCode> = BTreeMap::new();
    for alias in aliases {
        names.insert(alias.code, alias.long_name.clone());
        by_long.insert(alias.long_name.as_str(), alias.code);
    }

    let mut resolved: Vec<(u32, u32, ScriptCode)> = Vec::with_capacity(entries.len());
    for entry in entries {
        let code = by_long
            .get(entry.property_value.as_str())
            .copied()
            .ok_or_else(|| {
                TableBuildError::UnknownPropertyValue(entry.property_value.clone())
            })?;
        resolved.push((entry.range_start, entry.range_end, code));
    }
    resolved.sort_by_key(|&(start, _, _)| start);
    for pair in resolved.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b.0 <= a.1 {
            return Err(TableBuildError::OverlappingRanges {
                a_start: a.0,
                a_end: a.1,
                a_code: a.2,
                b_start: b.0,
                b_end: b.1,
                b_code: b.2,
            });
        }
    }
    if merge_adjacent {
        let mut merged: Vec<(u32, u32, ScriptCode)> = Vec::with_capacity(resolved.len());
        for range in resolved {
            match merged.last_mut() {
                Some(last) if last.2 == range.2 && last.1 + 1 == range.0 => {
                    last.1 = range.1;
                }
                _ => merged.push(range),
            }
        }
        resolved = merged;
    }

    // Intern codes; the three special codes are always representable.
    let mut codes: Vec<ScriptCode> = resolved.iter().map(|&(_, _, c)| c).collect();
    codes.extend([ScriptCode::COMMON, ScriptCode::INHERITED, ScriptCode::UNKNOWN]);
    codes.sort();
    codes.dedup();
    let idx_of = |code: ScriptCode| -> u16 {
        codes.binary_search(&code).expect("interned") as u16
    };

    let entries: Vec<RangeEntry> = resolved
        .iter()
        .map(|&(start, end, code)| RangeEntry {
            start,
            end,
            code_idx: idx_of(code),
        })
        .collect();

    let unknown_idx = idx_of(ScriptCode::UNKNOWN);
    let overrides = vec![(REPLACEMENT_CHARACTER, unknown_idx)];

    let mut table = ScriptRangeTable {
        unicode_version: unicode_version.to_string(),
        unknown_idx,
        inherited_idx: idx_of(ScriptCode::INHERITED),
        common_idx: idx_of(ScriptCode::COMMON),
        codes,
        names,
        entries,
        overrides,
        ascii: [0; 128],
    };
    for cp in 0..128u32 {
        table.ascii[cp as usize] = table.lookup_idx_slow(cp);
    }
    Ok(table)
}

const REPLACEMENT_CHARACTER: u32 = 0xFFFD;

impl ScriptRangeTable {
    /// The Unicode version the table was built from, e.g. `15.0.0`.
    pub fn unicode_version(&self) -> &str {
        &self.unicode_version
    }

    /// Maps a scalar value to its script code. Total: overrides first, then
    /// binary search over the ranges, then the `Zzzz` default.
    #[inline]
    pub fn lookup(&self, cp: char) -> ScriptCode {
        self.codes[self.lookup_idx(cp as u32) as usize]
    }

    /// Interned-index variant of [`lookup`](Self::lookup); the index is only
    /// meaningful together with [`code_at`](Self::code_at).
    #[inline]
    pub(crate) fn lookup_idx(&self, cp: u32) -> u16 {
        if cp < 128 {
            return self.ascii[cp as usize];
        }
        self.lookup_idx_slow(cp)
    }

    fn lookup_idx_slow(&self, cp: u32) -> u16 {
        if let Ok(i) = self.overrides.binary_search_by_key(&cp, |&(c, _)| c) {
            return self.overrides[i].1;
        }
        let partition = self.entries.partition_point(|e| e.end < cp);
        match self.entries.get(partition) {
            Some(e) if e.start <= cp => e.code_idx,
            _ => self.unknown_idx,
        }
    }

    #[inline]
    pub(crate) fn code_at(&self, idx: u16) -> ScriptCode {
        self.codes[idx as usize]
    }

    #[inline]
    pub(crate) fn code_count(&self) -> usize {
        self.codes.len()
    }

    #[inline]
    pub(crate) fn inherited_idx(&self) -> u16 {
        self.inherited_idx
    }

    #[inline]
    pub(crate) fn common_idx(&self) -> u16 {
        self.common_idx
    }

    /// All codes the table can produce, sorted (includes the special codes).
    pub fn codes(&self) -> &[ScriptCode] {
        &self.codes
    }

    /// Number of distinct non-special scripts covered by range entries.
    pub fn distinct_script_count(&self) -> usize {
        let mut seen = vec![false; self.codes.len()];
        for entry in &self.entries {
            seen[entry.code_idx as usize] = true;
        }
        self.codes
            .iter()
            .zip(&seen)
            .filter(|(code, &seen)| seen && !code.is_special())
            .count()
    }

    /// Range entries as `(start, end, code)` triples, sorted by start.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, ScriptCode)> + '_ {
        self.entries
            .iter()
            .map(|e| (e.start, e.end, self.code_at(e.code_idx)))
    }

    /// The long property name for a code, when the alias table provided one.
    pub fn long_name(&self, code: ScriptCode) -> Option<&str> {
        self.names.get(&code).map(String::as_str)
    }

    /// Serializes the table in the versioned `scriptscan-table v1` text
    /// format. The output is deterministic for a given table.
    pub fn to_artifact_string(&self) -> String {
        let mut out = String::new();
        out.push_str("scriptscan-table v1\n");
        out.push_str(&format!("unicode {}\n", self.unicode_version));
        out.push_str(&format!("names {}\n", self.names.len()));
        for (code, long) in &self.names {
            out.push_str(&format!("{code} {long}\n"));
        }
        out.push_str(&format!("ranges {}\n", self.entries.len()));
        for entry in &self.entries {
            out.push_str(&format!(
                "{:04X} {:04X} {}\n",
                entry.start,
                entry.end,
                self.code_at(entry.code_idx)
            ));
        }
        out.push_str(&format!("overrides {}\n", self.overrides.len()));
        for &(cp, idx) in &self.overrides {
            out.push_str(&format!("{:04X} {}\n", cp, self.code_at(idx)));
        }
        out
    }

    /// Parses a `scriptscan-table v1` artifact produced by
    /// [`to_artifact_string`](Self::to_artifact_string).
    pub fn from_artifact_str(text: &str) -> Result<Self, TableArtifactError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &'static str| -> Result<(usize, &str), TableArtifactError> {
            lines
                .next()
                .ok_or(TableArtifactError::UnexpectedEof { expected: what })
        };

        let (line, header) = next("header")?;
        if header != "scriptscan-table v1" {
            return Err(TableArtifactError::BadHeader { line });
        }
        let (line, version) = next("unicode version")?;
        let unicode_version = version
            .strip_prefix("unicode ")
            .ok_or(TableArtifactError::Malformed { line })?
            .to_string();

        let section_count = |line: usize, text: &str, name: &'static str| {
            text.strip_prefix(name)
                .and_then(|rest| rest.trim().parse::<usize>().ok())
                .ok_or(TableArtifactError::Malformed { line })
        };

        let (line, counts) = next("names section")?;
        let n_names = section_count(line, counts, "names")?;
        let mut aliases = Vec::with_capacity(n_names);
        for _ in 0..n_names {
            let (line, row) = next("name row")?;
            let (code, long) = row
                .split_once(' ')
                .ok_or(TableArtifactError::Malformed { line })?;
            let code = ScriptCode::new(code)
                .map_err(|_| TableArtifactError::Malformed { line })?;
            aliases.push(ScriptAlias {
                long_name: long.to_string(),
                code,
            });
        }

        let (line, counts) = next("ranges section")?;
        let n_ranges = section_count(line, counts, "ranges")?;
        let mut entries = Vec::with_capacity(n_ranges);
        let mut by_code: BTreeMap<ScriptCode, &str> = BTreeMap::new();
        for alias in &aliases {
            by_code.insert(alias.code, alias.long_name.as_str());
        }
        for _ in 0..n_ranges {
            let (line, row) = next("range row")?;
            let mut fields = row.split(' ');
            let parse_hex = |f: Option<&str>| {
                f.and_then(|t| u32::from_str_radix(t, 16).ok())
                    .ok_or(TableArtifactError::Malformed { line })
            };
            let start = parse_hex(fields.next())?;
            let end = parse_hex(fields.next())?;
            let code = fields
                .next()
                .and_then(|t| ScriptCode::new(t).ok())
                .ok_or(TableArtifactError::Malformed { line })?;
            let long_name = by_code
                .get(&code)
                .copied()
                .ok_or(TableArtifactError::UnlistedCode { line, code })?;
            entries.push(UcdScriptEntry {
                range_start: start,
                range_end: end,
                property_value: long_name.to_string(),
            });
        }

        let (line, counts) = next("overrides section")?;
        let n_overrides = section_count(line, counts, "overrides")?;
        for _ in 0..n_overrides {
            let (line, row) = next("override row")?;
            // The only supported override is the fixed U+FFFD -> Zzzz one
            // that build_table installs; validate rather than reinterpret.
            if row != format!("{REPLACEMENT_CHARACTER:04X} Zzzz") {
                return Err(TableArtifactError::Malformed { line });
            }
        }

        build_table(&entries, &aliases, &unicode_version)
            .map_err(TableArtifactError::Rebuild)
    }

    /// The table compiled from the bundled Unicode 15.0.0 UCD files.
    ///
    /// Parsed once from an embedded artifact; no file I/O at run time.
    pub fn embedded() -> &'static ScriptRangeTable {
        static TABLE: OnceLock<ScriptRangeTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            ScriptRangeTable::from_artifact_str(EMBEDDED_TABLE_ARTIFACT)
                .expect("embedded script table artifact is valid")
        })
    }
}

/// Raw bytes of the embedded table artifact; regenerate with the
/// `build-table` CLI subcommand from the files under `data/ucd-15.0.0/`.
pub const EMBEDDED_TABLE_ARTIFACT: &str =
    include_str!("../data/script-table-v1.txt");

#[derive(Debug, Error)]
pub enum TableArtifactError {
    #[error("artifact line {line}: not a scriptscan-table v1 header")]
    BadHeader { line: usize },
    #[error("artifact truncated: expected {expected}")]
    UnexpectedEof { expected: &'static str },
    #[error("artifact line {line}: malformed row")]
    Malformed { line: usize },
    #[error("artifact line {line}: code {code} missing from names section")]
    UnlistedCode { line: usize, code: ScriptCode },
    #[error("artifact rebuild failed: {0}")]
    Rebuild(#[from] TableBuildError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn latin_fixture() -> (Vec<UcdScriptEntry>, Vec<ScriptAlias>) {
        let entries = parse_scripts_file("0041..005A ; Latin\n0621 ; Arabic\n").unwrap();
        let aliases =
            parse_aliases_file("sc ; Latn ; Latin\nsc ; Arab ; Arabic\n").unwrap();
        (entries, aliases)
    }

    #[test]
    fn parses_range_and_single_codepoint_lines() {
        let entries = parse_scripts_file(
            "# comment\n\n0041..005A    ; Latin # L& [26] A..Z\n00AA          ; Latin\n",
        )
        .unwrap();
        assert_eq!(
            entries,
            vec![
                UcdScriptEntry {
                    range_start: 0x41,
                    range_end: 0x5A,
                    property_value: "Latin".into()
                },
                UcdScriptEntry {
                    range_start: 0xAA,
                    range_end: 0xAA,
                    property_value: "Latin".into()
                },
            ]
        );
    }

    #[test]
    fn rejects_malformed_scripts_lines() {
        let err = parse_scripts_file("ZZZZ..0041 ; Latin").unwrap_err();
        assert!(matches!(err, UcdParseError::BadCodepoint { line: 1, .. }));

        let err = parse_scripts_file("0041..005A ; Latin\n0061..0041 ; Latin").unwrap_err();
        assert!(matches!(err, UcdParseError::InvertedRange { line: 2, .. }));

        let err = parse_scripts_file("0041..005A\n").unwrap_err();
        assert!(matches!(err, UcdParseError::MissingField { line: 1 }));

        let err = parse_scripts_file("D800 ; Latin\n").unwrap_err();
        assert!(matches!(err, UcdParseError::NotScalarValue { line: 1, .. }));
    }

    #[test]
    fn alias_parsing_filters_non_script_properties() {
        let aliases = parse_aliases_file(
            "gc ; Lu ; Uppercase_Letter\nsc ; Latn ; Latin\nsc ; Zyyy ; Common\n",
        )
        .unwrap();
        assert_eq!(aliases.len(), 2);
        assert_eq!(aliases[0].long_name, "Latin");
        assert_eq!(aliases[0].code, ScriptCode::new("Latn").unwrap());
        assert_eq!(aliases[1].code, ScriptCode::COMMON);
    }

    #[test]
    fn alias_conflicts_are_rejected() {
        let err =
            parse_aliases_file("sc ; Latn ; Latin\nsc ; Latg ; Latin\n").unwrap_err();
        assert!(matches!(err, UcdParseError::ConflictingAlias { line: 2, .. }));

        let err =
            parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Other_Latin\n").unwrap_err();
        assert!(matches!(err, UcdParseError::DuplicateCode { line: 2, .. }));

        // Exact duplicates are fine.
        let aliases =
            parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Latin\n").unwrap();
        assert_eq!(aliases.len(), 1);
    }

    #[test]
    fn uncovered_codepoints_default_to_unknown() {
        let (entries, aliases) = latin_fixture();
        let table = build_table(&entries, &aliases, "test").unwrap();
        assert_eq!(table.lookup('\u{41}').as_str(), "Latn");
        assert_eq!(table.lookup('\u{5B}'), ScriptCode::UNKNOWN);
        assert_eq!(table.lookup('\u{10FFFF}'), ScriptCode::UNKNOWN);
    }

    #[test]
    fn replacement_character_is_overridden_to_unknown() {
        // Even if the source data assigns U+FFFD, the override wins.
        let entries = parse_scripts_file("FFF9..FFFD ; Common\n").unwrap();
        let aliases = parse_aliases_file("sc ; Zyyy ; Common\n").unwrap();
        let table = build_table(&entries, &aliases, "test").unwrap();
        assert_eq!(table.lookup('\u{FFFC}'), ScriptCode::COMMON);
        assert_eq!(table.lookup('\u{FFFD}'), ScriptCode::UNKNOWN);
    }

    #[test]
    fn unknown_property_value_fails_the_build() {
        let entries = parse_scripts_file("0041..005A ; Klingon\n").unwrap();
        let aliases = parse_aliases_file("sc ; Latn ; Latin\n").unwrap();
        let err = build_table(&entries, &aliases, "test").unwrap_err();
        assert!(matches!(err, TableBuildError::UnknownPropertyValue(v) if v == "Klingon"));
    }

    #[test]
    fn overlapping_ranges_fail_the_build() {
        let entries = parse_scripts_file("0041..005A ; Latin\n0050..0060 ; Latin\n").unwrap();
        let aliases = parse_aliases_file("sc ; Latn ; Latin\n").unwrap();
        let err = build_table(&entries, &aliases, "test").unwrap_err();
        assert!(matches!(err, TableBuildError::OverlappingRanges { .. }));
    }

    #[test]
    fn merged_and_unmerged_builds_agree_pointwise() {
        let entries = parse_scripts_file(
            "0041..004F ; Latin\n0050..005A ; Latin\n0061..007A ; Latin\n0391..03A1 ; Greek\n",
        )
        .unwrap();
        let aliases = parse_aliases_file("sc ; Latn ; Latin\nsc ; Grek ; Greek\n").unwrap();
        let merged = build_table(&entries, &aliases, "test").unwrap();
        let unmerged = build_table_inner(&entries, &aliases, "test", false).unwrap();
        assert_eq!(merged.entries.len(), 2);
        assert_eq!(unmerged.entries.len(), 4);
        for cp in 0..0x500u32 {
            let c = char::from_u32(cp).unwrap();
            assert_eq!(merged.lookup(c), unmerged.lookup(c), "U+{cp:04X}");
        }
    }

    #[test]
    fn sortedness_and_non_overlap_hold_after_build() {
        let (entries, aliases) = latin_fixture();
        let table = build_table(&entries, &aliases, "test").unwrap();
        for pair in table.entries.windows(2) {
            assert!(pair[0].end < pair[1].start);
        }
    }

    #[test]
    fn artifact_round_trips() {
        let (entries, aliases) = latin_fixture();
        let table = build_table(&entries, &aliases, "9.9.9").unwrap();
        let artifact = table.to_artifact_string();
        let reparsed = ScriptRangeTable::from_artifact_str(&artifact).unwrap();
        assert_eq!(reparsed.unicode_version(), "9.9.9");
        assert_eq!(artifact, reparsed.to_artifact_string());
        for cp in [0x41u32, 0x5A, 0x5B, 0x621, 0xFFFD] {
            let c = char::from_u32(cp).unwrap();
            assert_eq!(table.lookup(c), reparsed.lookup(c));
        }
    }

    #[test]
    fn truncated_artifact_is_rejected() {
        let (entries, aliases) = latin_fixture();
        let table = build_table(&entries, &aliases, "test").unwrap();
        let artifact = table.to_artifact_string();
        let truncated = &artifact[..artifact.len() / 2];
        assert!(ScriptRangeTable::from_artifact_str(truncated).is_err());
    }

    proptest! {
        // Lookup is total: any scalar value yields exactly one code.
        #[test]
        fn lookup_total_over_random_scalars(cp in prop::char::any()) {
            let (entries, aliases) = latin_fixture();
            let table = build_table(&entries, &aliases, "test").unwrap();
            let code = table.lookup(cp);
            prop_assert!(table.codes().contains(&code));
        }
    }
}
