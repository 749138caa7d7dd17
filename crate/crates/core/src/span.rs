//! Source positions and ranges.
//!
//! Every artifact the analyzer produces (tokens, AST nodes, findings,
//! patches) carries a [`Span`] so it can be traced back to the original
//! text. Lines and columns are 1-based and the end position is inclusive:
//! the span of `x` on the first line is `1:1-1:1`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A contiguous source region, inclusive on both ends.
///
/// Columns count characters, not bytes, so multi-byte characters advance
/// the column by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Span {
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl Span {
    /// Builds a span, panicking in debug builds if the end precedes the start.
    pub fn new(start_line: u32, start_col: u32, end_line: u32, end_col: u32) -> Self {
        let span = Span { start_line, start_col, end_line, end_col };
        debug_assert!(span.is_ordered(), "span end precedes start: {span}");
        span
    }

    /// A single-character span at the given position.
    pub fn point(line: u32, col: u32) -> Self {
        Span::new(line, col, line, col)
    }

    /// The smallest span covering both `self` and `other`.
    pub fn merge(self, other: Span) -> Span {
        let (start_line, start_col) = min_pos(
            (self.start_line, self.start_col),
            (other.start_line, other.start_col),
        );
        let (end_line, end_col) =
            max_pos((self.end_line, self.end_col), (other.end_line, other.end_col));
        Span { start_line, start_col, end_line, end_col }
    }

    /// True when `other` lies entirely within `self`.
    pub fn contains(&self, other: &Span) -> bool {
        min_pos(
            (self.start_line, self.start_col),
            (other.start_line, other.start_col),
        ) == (self.start_line, self.start_col)
            && max_pos((self.end_line, self.end_col), (other.end_line, other.end_col))
                == (self.end_line, self.end_col)
    }

    /// True when the two spans share at least one line.
    pub fn overlaps_lines(&self, other: &Span) -> bool {
        self.start_line <= other.end_line && other.start_line <= self.end_line
    }

    /// Number of lines covered, at least 1.
    pub fn line_count(&self) -> u32 {
        self.end_line - self.start_line + 1
    }

    fn is_ordered(&self) -> bool {
        (self.start_line, self.start_col) <= (self.end_line, self.end_col)
            && self.start_line >= 1
            && self.start_col >= 1
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}-{}:{}",
            self.start_line, self.start_col, self.end_line, self.end_col
        )
    }
}

fn min_pos(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    a.min(b)
}

fn max_pos(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    a.max(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_covers_both_operands() {
        let a = Span::new(2, 5, 2, 9);
        let b = Span::new(1, 3, 2, 4);
        let merged = a.merge(b);
        assert_eq!(merged, Span::new(1, 3, 2, 9));
        assert!(merged.contains(&a));
        assert!(merged.contains(&b));
    }

    #[test]
    fn containment_is_inclusive_of_endpoints() {
        let outer = Span::new(1, 1, 4, 10);
        assert!(outer.contains(&outer));
        assert!(outer.contains(&Span::new(4, 10, 4, 10)));
        assert!(!outer.contains(&Span::new(4, 10, 4, 11)));
    }

    #[test]
    fn line_overlap_matches_shared_lines_only() {
        let a = Span::new(1, 1, 3, 5);
        assert!(a.overlaps_lines(&Span::new(3, 1, 6, 2)));
        assert!(!a.overlaps_lines(&Span::new(4, 1, 6, 2)));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(Span::new(1, 2, 3, 4).to_string(), "1:2-3:4");
    }
}
