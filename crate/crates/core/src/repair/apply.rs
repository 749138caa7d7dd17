//! Patch application and diff rendering.
//!
//! Edits address end-inclusive spans in the original text. Application
//! sorts them and splices right-to-left so earlier spans stay valid; the
//! function is pure and never touches the unit in place.

use super::Patch;
use crate::error::{Error, Result};
use crate::span::Span;

/// Applies every edit of `patch` to `text` and returns the result.
/// Overlapping or out-of-range edits are rejected before any splicing.
pub fn apply_patch(text: &str, patch: &Patch) -> Result<String> {
    if patch.edits.is_empty() {
        return Ok(text.to_string());
    }
    let mut edits: Vec<(usize, usize, &str)> = Vec::with_capacity(patch.edits.len());
    for edit in &patch.edits {
        let (start, end) = byte_range(text, edit.span)?;
        edits.push((start, end, edit.replacement.as_str()));
    }
    edits.sort_by_key(|&(start, end, _)| (start, end));
    for pair in edits.windows(2) {
        if pair[1].0 < pair[0].1 {
            let offending = patch
                .edits
                .iter()
                .find(|e| byte_range(text, e.span).map(|(s, _)| s).ok() == Some(pair[1].0))
                .map(|e| e.span)
                .unwrap_or(Span::point(1, 1));
            return Err(Error::OverlappingEdits(offending));
        }
    }
    let mut out = text.to_string();
    for &(start, end, replacement) in edits.iter().rev() {
        out.replace_range(start..end, replacement);
    }
    Ok(out)
}

/// Byte range `[start, end)` covered by an end-inclusive span. Columns
/// count characters, so multi-byte text maps through `char_indices`.
pub fn byte_range(text: &str, span: Span) -> Result<(usize, usize)> {
    let start = byte_at(text, span.start_line, span.start_col, false)?;
    let end = byte_at(text, span.end_line, span.end_col, true)?;
    if end < start {
        return Err(Error::OutOfBounds(span));
    }
    Ok((start, end))
}

/// Byte offset of the 1-based (line, col) position; with `after` the
/// offset just past that character.
fn byte_at(text: &str, line: u32, col: u32, after: bool) -> Result<usize> {
    let span = Span::new(line, col, line, col);
    if line == 0 || col == 0 {
        return Err(Error::OutOfBounds(span));
    }
    let mut offset = 0usize;
    for (current, l) in (1u32..).zip(text.split_inclusive('\n')) {
        if current == line {
            let mut chars = l.char_indices();
            for _ in 1..col {
                if chars.next().is_none() {
                    return Err(Error::OutOfBounds(span));
                }
            }
            return match chars.next() {
                Some((i, c)) => Ok(offset + i + if after { c.len_utf8() } else { 0 }),
                None if !after => Ok(offset + l.len()),
                None => Err(Error::OutOfBounds(span)),
            };
        }
        offset += l.len();
    }
    Err(Error::OutOfBounds(span))
}

/// Renders a unified diff between two versions of one file, with three
/// lines of context around a single change hunk. Equal inputs produce
/// an empty string.
pub fn unified_diff(path: &str, before: &str, after: &str) -> String {
    if before == after {
        return String::new();
    }
    let a: Vec<&str> = before.lines().collect();
    let b: Vec<&str> = after.lines().collect();

    let mut prefix = 0;
    while prefix < a.len() && prefix < b.len() && a[prefix] == b[prefix] {
        prefix += 1;
    }
    let mut suffix = 0;
    while suffix < a.len() - prefix && suffix < b.len() - prefix
        && a[a.len() - 1 - suffix] == b[b.len() - 1 - suffix]
    {
        suffix += 1;
    }

    let ctx_start = prefix.saturating_sub(3);
    let a_end = (a.len() - suffix + 3).min(a.len());
    let b_end = (b.len() - suffix + 3).min(b.len());

    let mut out = format!("--- a/{path}\n+++ b/{path}\n");
    let a_count = a_end - ctx_start;
    let b_count = b_end - ctx_start;
    let a_start = if a_count == 0 { ctx_start } else { ctx_start + 1 };
    let b_start = if b_count == 0 { ctx_start } else { ctx_start + 1 };
    out.push_str(&format!("@@ -{a_start},{a_count} +{b_start},{b_count} @@\n"));
    for line in &a[ctx_start..prefix] {
        out.push_str(&format!(" {line}\n"));
    }
    for line in &a[prefix..a.len() - suffix] {
        out.push_str(&format!("-{line}\n"));
    }
    for line in &b[prefix..b.len() - suffix] {
        out.push_str(&format!("+{line}\n"));
    }
    for line in &a[a.len() - suffix..a_end] {
        out.push_str(&format!(" {line}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repair::{Edit, Patch, PatchKind};

    fn patch(edits: Vec<Edit>) -> Patch {
        Patch { edits, description: "test".into(), kind: PatchKind::Advisory }
    }

    fn edit(span: Span, replacement: &str) -> Edit {
        Edit { span, replacement: replacement.into() }
    }

    #[test]
    fn empty_patch_is_identity() {
        let text = "a = 1\nb = 2\n";
        assert_eq!(apply_patch(text, &patch(vec![])).unwrap(), text);
    }

    #[test]
    fn single_edit_splices() {
        let text = "password = \"hunter2\"\n";
        // The literal spans columns 12..=20 on line 1.
        let got = apply_patch(
            text,
            &patch(vec![edit(Span::new(1, 12, 1, 20), "os.getenv(\"PASSWORD\")")]),
        )
        .unwrap();
        assert_eq!(got, "password = os.getenv(\"PASSWORD\")\n");
    }

    #[test]
    fn two_edits_compose_like_sequential_application() {
        let text = "x = alpha + beta\n";
        let e1 = edit(Span::new(1, 5, 1, 9), "a");
        let e2 = edit(Span::new(1, 13, 1, 16), "b");
        let both = apply_patch(text, &patch(vec![e1.clone(), e2.clone()])).unwrap();
        // Apply right edit first, then the left one, one at a time.
        let step = apply_patch(text, &patch(vec![e2])).unwrap();
        let sequential = apply_patch(&step, &patch(vec![e1])).unwrap();
        assert_eq!(both, sequential);
        assert_eq!(both, "x = a + b\n");
    }

    #[test]
    fn overlap_is_rejected() {
        let text = "x = alpha\n";
        let got = apply_patch(
            text,
            &patch(vec![
                edit(Span::new(1, 5, 1, 9), "a"),
                edit(Span::new(1, 7, 1, 9), "b"),
            ]),
        );
        assert!(matches!(got, Err(Error::OverlappingEdits(_))));
    }

    #[test]
    fn out_of_bounds_is_rejected() {
        let text = "x = 1\n";
        let got = apply_patch(text, &patch(vec![edit(Span::new(9, 1, 9, 2), "y")]));
        assert!(matches!(got, Err(Error::OutOfBounds(_))));
        let got = apply_patch(text, &patch(vec![edit(Span::new(1, 1, 1, 80), "y")]));
        assert!(matches!(got, Err(Error::OutOfBounds(_))));
    }

    #[test]
    fn multibyte_text_maps_columns_by_char() {
        let text = "s = \"héllo\"\nt = 1\n";
        let got = apply_patch(text, &patch(vec![edit(Span::new(2, 5, 2, 5), "2")])).unwrap();
        assert_eq!(got, "s = \"héllo\"\nt = 2\n");
    }

    #[test]
    fn diff_shows_change_with_context() {
        let before = "a\nb\nc\nd\ne\nf\ng\n";
        let after = "a\nb\nc\nD\ne\nf\ng\n";
        let diff = unified_diff("m.py", before, after);
        assert!(diff.starts_with("--- a/m.py\n+++ b/m.py\n@@ -1,7 +1,7 @@\n"), "{diff}");
        assert!(diff.contains("-d\n+D\n"), "{diff}");
        assert_eq!(unified_diff("m.py", before, before), "");
    }
}
