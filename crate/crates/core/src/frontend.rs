//! Front-end dispatch: maps a unit's language to a tokenizer/parser pair.
//!
//! The built-in front end covers the Python subset. Other languages can
//! be added in-process by registering an implementation of [`FrontEnd`];
//! units whose language has no registered front end are reported as
//! unsupported rather than silently skipped.

use crate::ast::NormalizedAst;
use crate::error::{Error, Result};
use crate::lexer::{tokenize, TokenStream};
use crate::parser::parse;
use crate::source::{Language, SourceUnit};

/// A language front end: everything the analyzer needs to lift raw text
/// into the shared representations.
pub trait FrontEnd: Send + Sync {
    /// Language tag this front end claims, e.g. `python-subset`.
    fn language(&self) -> &str;

    fn tokenize(&self, unit: &SourceUnit) -> Result<TokenStream>;

    fn parse(&self, unit: &SourceUnit) -> Result<NormalizedAst>;
}

/// The built-in Python-subset front end.
pub struct PythonFrontEnd;

impl FrontEnd for PythonFrontEnd {
    fn language(&self) -> &str {
        Language::PythonSubset.as_str()
    }

    fn tokenize(&self, unit: &SourceUnit) -> Result<TokenStream> {
        tokenize(&unit.id, &unit.text)
    }

    fn parse(&self, unit: &SourceUnit) -> Result<NormalizedAst> {
        let stream = self.tokenize(unit)?;
        parse(&stream)
    }
}

/// Registry of available front ends. The default registry contains the
/// Python-subset front end; embedders extend it with `register`.
pub struct FrontEndRegistry {
    entries: Vec<Box<dyn FrontEnd>>,
}

impl Default for FrontEndRegistry {
    fn default() -> Self {
        FrontEndRegistry { entries: vec![Box::new(PythonFrontEnd)] }
    }
}

impl FrontEndRegistry {
    pub fn register(&mut self, front_end: Box<dyn FrontEnd>) {
        self.entries.push(front_end);
    }

    /// Finds the front end for a language. Later registrations shadow
    /// earlier ones so embedders can replace the built-in.
    pub fn for_language(&self, language: &Language) -> Result<&dyn FrontEnd> {
        self.entries
            .iter()
            .rev()
            .find(|fe| fe.language() == language.as_str())
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnsupportedLanguage(language.as_str().to_string()))
    }

    /// Tokenize + parse a unit with whichever front end claims it.
    pub fn parse_unit(&self, unit: &SourceUnit) -> Result<NormalizedAst> {
        self.for_language(&unit.language)?.parse(unit)
    }
}

/// Parses a unit with the default registry. Most callers want this.
pub fn parse_unit(unit: &SourceUnit) -> Result<NormalizedAst> {
    FrontEndRegistry::default().parse_unit(unit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_language_is_rejected() {
        let unit = SourceUnit::new("x.go", Language::Plugin("go".into()), "package x\n");
        let err = FrontEndRegistry::default().parse_unit(&unit).unwrap_err();
        assert!(matches!(err, Error::UnsupportedLanguage(l) if l == "go"));
    }

    #[test]
    fn registered_front_end_claims_its_language() {
        struct Fake;
        impl FrontEnd for Fake {
            fn language(&self) -> &str {
                "fake"
            }
            fn tokenize(&self, unit: &SourceUnit) -> Result<TokenStream> {
                Ok(TokenStream { unit_id: unit.id.clone(), tokens: Vec::new() })
            }
            fn parse(&self, unit: &SourceUnit) -> Result<NormalizedAst> {
                let stream = self.tokenize(unit)?;
                parse(&stream)
            }
        }
        let mut registry = FrontEndRegistry::default();
        registry.register(Box::new(Fake));
        let unit = SourceUnit::new("x.fake", Language::Plugin("fake".into()), "");
        assert!(registry.parse_unit(&unit).is_ok());
    }
}
