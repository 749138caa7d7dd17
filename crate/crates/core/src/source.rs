//! Source units: the input granularity of every analysis.
//!
//! A unit is one file's worth of text plus identity (path, language). The
//! id is derived from the path so repeated scans of the same tree produce
//! identical output.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Language tag for a unit. The built-in front end handles the Python
/// subset; anything else must be claimed by a registered plugin front end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Language {
    PythonSubset,
    Plugin(String),
}

impl Language {
    pub fn as_str(&self) -> &str {
        match self {
            Language::PythonSubset => "python-subset",
            Language::Plugin(name) => name,
        }
    }
}

impl From<&str> for Language {
    fn from(s: &str) -> Self {
        match s {
            "python-subset" | "python" | "py" => Language::PythonSubset,
            other => Language::Plugin(other.to_string()),
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Language {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Language {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(Language::from(s.as_str()))
    }
}

/// One file of source text, ready for analysis.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SourceUnit {
    /// Stable identifier; the normalized path.
    pub id: String,
    /// Path as given by the caller, with backslashes normalized to `/`.
    pub path: String,
    pub language: Language,
    pub text: String,
    /// Non-blank, non-comment line count.
    pub loc: u32,
}

impl SourceUnit {
    pub fn new(path: impl Into<String>, language: Language, text: impl Into<String>) -> Self {
        let path = path.into().replace('\\', "/");
        let text = text.into();
        let loc = count_loc(&text);
        SourceUnit { id: path.clone(), path, language, text, loc }
    }

    /// Shorthand for Python-subset units, the common case in tests.
    pub fn python(path: impl Into<String>, text: impl Into<String>) -> Self {
        SourceUnit::new(path, Language::PythonSubset, text)
    }

    /// Lines of the unit text, 1-indexed via `lines()[line - 1]`.
    pub fn lines(&self) -> Vec<&str> {
        self.text.lines().collect()
    }
}

/// Counts lines that contain something other than whitespace or a
/// full-line `#` comment. Trailing comments do not disqualify a line.
pub fn count_loc(text: &str) -> u32 {
    text.lines()
        .filter(|line| {
            let trimmed = line.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        })
        .count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loc_skips_blanks_and_comment_lines() {
        let text = "x = 1\n\n# comment\n   # indented comment\ny = 2  # trailing\n";
        assert_eq!(count_loc(text), 2);
    }

    #[test]
    fn language_round_trips_through_strings() {
        assert_eq!(Language::from("python-subset"), Language::PythonSubset);
        assert_eq!(Language::from("go"), Language::Plugin("go".into()));
        assert_eq!(Language::PythonSubset.as_str(), "python-subset");
    }

    #[test]
    fn unit_normalizes_windows_separators() {
        let unit = SourceUnit::python("a\\b.py", "x = 1\n");
        assert_eq!(unit.path, "a/b.py");
        assert_eq!(unit.id, "a/b.py");
    }
}
