//! Identifier newtypes shared across the crate: ISO 15924 script codes and
//! three-letter ISO 639 language codes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An ISO 15924 four-letter script identifier such as `Latn` or `Arab`.
///
/// Codes are exactly four ASCII letters, the first uppercase and the rest
/// lowercase. Ordering is lexicographic, which is what every deterministic
/// tie-break in this crate relies on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ScriptCode([u8; 4]);

impl ScriptCode {
    /// `Zyyy`: characters shared across scripts (punctuation, digits, symbols).
    pub const COMMON: ScriptCode = ScriptCode(*b"Zyyy");
    /// `Zinh`: characters that take the script of the preceding character.
    pub const INHERITED: ScriptCode = ScriptCode(*b"Zinh");
    /// `Zzzz`: unassigned code points and the replacement character.
    pub const UNKNOWN: ScriptCode = ScriptCode(*b"Zzzz");

    pub fn new(code: &str) -> Result<Self, InvalidScriptCode> {
        let bytes = code.as_bytes();
        let ok = bytes.len() == 4
            && bytes[0].is_ascii_uppercase()
            && bytes[1..].iter().all(|b| b.is_ascii_lowercase());
        if !ok {
            return Err(InvalidScriptCode(code.to_string()));
        }
        Ok(ScriptCode([bytes[0], bytes[1], bytes[2], bytes[3]]))
    }

    pub fn as_str(&self) -> &str {
        // Constructors only admit ASCII letters.
        std::str::from_utf8(&self.0).unwrap()
    }

    /// True for the three codes that are not proper scripts
    /// (`Zyyy`, `Zinh`, `Zzzz`).
    pub fn is_special(&self) -> bool {
        matches!(*self, Self::COMMON | Self::INHERITED | Self::UNKNOWN)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid ISO 15924 script code {0:?}: expected four ASCII letters, leading uppercase")]
pub struct InvalidScriptCode(pub String);

impl fmt::Display for ScriptCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for ScriptCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScriptCode {
    type Err = InvalidScriptCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScriptCode::new(s)
    }
}

impl TryFrom<String> for ScriptCode {
    type Error = InvalidScriptCode;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        ScriptCode::new(&s)
    }
}

impl From<ScriptCode> for String {
    fn from(code: ScriptCode) -> String {
        code.as_str().to_string()
    }
}

/// A three-letter ISO 639 language code (`eng`, `fas`, `ber`, ...).
///
/// Validation is purely syntactic: three ASCII lowercase letters. All
/// three-letter code sets (639-2, 639-3, 639-5) are accepted; membership in a
/// registry is not checked.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LanguageCode([u8; 3]);

impl LanguageCode {
    pub fn new(code: &str) -> Result<Self, InvalidLanguageCode> {
        let bytes = code.as_bytes();
        if bytes.len() != 3 || !bytes.iter().all(|b| b.is_ascii_lowercase()) {
            return Err(InvalidLanguageCode(code.to_string()));
        }
        Ok(LanguageCode([bytes[0], bytes[1], bytes[2]]))
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).unwrap()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid language code {0:?}: expected three ASCII lowercase letters")]
pub struct InvalidLanguageCode(pub String);

impl fmt::Display for LanguageCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for LanguageCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LanguageCode {
    type Err = InvalidLanguageCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LanguageCode::new(s)
    }
}

impl TryFrom<String> for LanguageCode {
    type Error = InvalidLanguageCode;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        LanguageCode::new(&s)
    }
}

impl From<LanguageCode> for String {
    fn from(code: LanguageCode) -> String {
        code.as_str().to_string()
    }
}
