//! Token-based clone detection.
//!
//! Token streams are normalized (identifiers to `ID`, literals to `LIT`,
//! comments dropped) so renamed copies still match. A rolling polynomial
//! hash seeds candidate window pairs, which are verified token-by-token
//! and extended to maximal equal regions; every maximal region of at
//! least the configured token count becomes a candidate on both sides of
//! the pair.

use super::{enclosing_entity, Candidate, Evidence, Rule, UnitAnalysis};
use crate::config::ToolConfig;
use crate::lexer::TokenKind;
use crate::span::Span;
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};

/// Rolling-hash base; any odd constant with good bit spread works.
const BASE: u64 = 1_000_003;

#[derive(Debug, Clone)]
struct NormToken {
    text: String,
    span: Span,
}

pub fn detect_duplicated_code(
    analyses: &[UnitAnalysis],
    config: &ToolConfig,
) -> Vec<(usize, Candidate)> {
    let window = config.thresholds.clone_min_tokens as usize;
    if window == 0 {
        return Vec::new();
    }
    let streams: Vec<Vec<NormToken>> = analyses.iter().map(normalize).collect();

    // Seed index: window hash -> occurrences, in deterministic order.
    let mut buckets: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (unit_idx, tokens) in streams.iter().enumerate() {
        for (pos, hash) in window_hashes(tokens, window) {
            buckets.entry(hash).or_default().push((unit_idx, pos));
        }
    }

    // (unit_a, start_a, unit_b, start_b, length) for maximal verified pairs.
    let mut regions: BTreeSet<(usize, usize, usize, usize, usize)> = BTreeSet::new();
    for occurrences in buckets.values() {
        for i in 0..occurrences.len() {
            for j in (i + 1)..occurrences.len() {
                let (ua, pa) = occurrences[i];
                let (ub, pb) = occurrences[j];
                if ua == ub && pb < pa + window {
                    continue; // overlapping windows within one unit
                }
                if let Some(region) = verify_and_extend(&streams, (ua, pa), (ub, pb), window) {
                    regions.insert(region);
                }
            }
        }
    }

    let mut out = Vec::new();
    for (ua, sa, ub, sb, len) in regions {
        let token_count = len as u32;
        let score = (f64::from(token_count) / 120.0).min(1.0);
        let fingerprint = fingerprint(&streams[ua][sa..sa + len]);
        let span_a = region_span(&streams[ua], sa, len);
        let span_b = region_span(&streams[ub], sb, len);
        for (unit_idx, span, partner_idx, partner_span) in
            [(ua, span_a, ub, span_b), (ub, span_b, ua, span_a)]
        {
            let analysis = &analyses[unit_idx];
            out.push((
                unit_idx,
                Candidate {
                    rule: Rule::DuplicatedCode,
                    span,
                    entity: enclosing_entity(&analysis.ast, &analysis.unit, span),
                    structural_score: score,
                    evidence: Evidence::Clone {
                        partner_path: analyses[partner_idx].unit.path.clone(),
                        partner_span,
                        token_count,
                        fingerprint: fingerprint.clone(),
                    },
                },
            ));
        }
    }
    out
}

fn normalize(analysis: &UnitAnalysis) -> Vec<NormToken> {
    analysis
        .tokens
        .tokens
        .iter()
        .filter(|t| t.kind != TokenKind::Comment)
        .map(|t| {
            let text = match t.kind {
                TokenKind::Identifier => "ID".to_string(),
                TokenKind::StringLiteral | TokenKind::NumberLiteral => "LIT".to_string(),
                _ => t.lexeme.clone(),
            };
            NormToken { text, span: t.span }
        })
        .collect()
}

fn atom_hash(text: &str) -> u64 {
    // FNV-1a; cheap and stable across runs.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn window_hashes(tokens: &[NormToken], window: usize) -> Vec<(usize, u64)> {
    if tokens.len() < window {
        return Vec::new();
    }
    let atoms: Vec<u64> = tokens.iter().map(|t| atom_hash(&t.text)).collect();
    let mut pow = 1u64;
    for _ in 1..window {
        pow = pow.wrapping_mul(BASE);
    }
    let mut hash = 0u64;
    for atom in &atoms[..window] {
        hash = hash.wrapping_mul(BASE).wrapping_add(*atom);
    }
    let mut out = vec![(0usize, hash)];
    for i in window..atoms.len() {
        hash = hash
            .wrapping_sub(atoms[i - window].wrapping_mul(pow))
            .wrapping_mul(BASE)
            .wrapping_add(atoms[i]);
        out.push((i - window + 1, hash));
    }
    out
}

/// Confirms two seed windows match and grows them to the maximal equal
/// region. Returns the canonical region tuple, or None for hash
/// collisions and seeds interior to an already-discoverable region.
fn verify_and_extend(
    streams: &[Vec<NormToken>],
    (ua, pa): (usize, usize),
    (ub, pb): (usize, usize),
    window: usize,
) -> Option<(usize, usize, usize, usize, usize)> {
    let a = &streams[ua];
    let b = &streams[ub];
    if a[pa..pa + window]
        .iter()
        .zip(&b[pb..pb + window])
        .any(|(x, y)| x.text != y.text)
    {
        return None;
    }
    // Only left-maximal seeds proceed; interior windows of the same
    // region would extend to an identical result.
    if pa > 0 && pb > 0 && a[pa - 1].text == b[pb - 1].text && !(ua == ub && pb - pa < window + 1)
    {
        return None;
    }

    let mut start_a = pa;
    let mut start_b = pb;
    let mut len = window;
    while start_a > 0
        && start_b > 0
        && a[start_a - 1].text == b[start_b - 1].text
        && !(ua == ub && start_b - start_a < len + 1)
    {
        start_a -= 1;
        start_b -= 1;
        len += 1;
    }
    while start_a + len < a.len()
        && start_b + len < b.len()
        && a[start_a + len].text == b[start_b + len].text
        && !(ua == ub && start_b - start_a < len + 1)
    {
        len += 1;
    }
    Some((ua, start_a, ub, start_b, len))
}

fn region_span(tokens: &[NormToken], start: usize, len: usize) -> Span {
    tokens[start].span.merge(tokens[start + len - 1].span)
}

fn fingerprint(tokens: &[NormToken]) -> String {
    let mut hasher = Sha256::new();
    for t in tokens {
        hasher.update(t.text.as_bytes());
        hasher.update(b"\x1f");
    }
    let digest = hasher.finalize();
    digest[..6].iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::analyze_unit;
    use crate::source::SourceUnit;

    fn clone_candidates(texts: &[(&str, &str)]) -> Vec<(usize, Candidate)> {
        let analyses: Vec<UnitAnalysis> = texts
            .iter()
            .map(|(path, text)| {
                analyze_unit(&SourceUnit::python(*path, *text)).expect("analyzes")
            })
            .collect();
        detect_duplicated_code(&analyses, &ToolConfig::default())
    }

    fn chunk(name: &str) -> String {
        // 9 statements ≈ 45 normalized tokens: over the 30-token floor.
        format!(
            "def {name}(a, b):\n    total = a + b\n    total = total * 2\n    total = total - a\n    total = total + 7\n    total = total * b\n    total = total - b\n    total = total + a\n    return total\n"
        )
    }

    #[test]
    fn renamed_copies_across_units_are_clones() {
        let text_a = chunk("first");
        let text_b = chunk("second");
        let got = clone_candidates(&[("a.py", &text_a), ("b.py", &text_b)]);
        assert_eq!(got.len(), 2, "one candidate per side");
        let (_, candidate) = &got[0];
        assert_eq!(candidate.rule, Rule::DuplicatedCode);
        let Evidence::Clone { token_count, .. } = &candidate.evidence else {
            panic!("clone evidence");
        };
        assert!(*token_count >= 40, "got {token_count}");
    }

    #[test]
    fn fingerprints_match_across_the_pair() {
        let text_a = chunk("first");
        let text_b = chunk("second");
        let got = clone_candidates(&[("a.py", &text_a), ("b.py", &text_b)]);
        let prints: Vec<&str> = got
            .iter()
            .map(|(_, c)| match &c.evidence {
                Evidence::Clone { fingerprint, .. } => fingerprint.as_str(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(prints[0], prints[1]);
    }

    #[test]
    fn short_overlap_stays_quiet() {
        let a = "def f(x):\n    return x + 1\n";
        let b = "def g(x):\n    return x + 1\n";
        assert!(clone_candidates(&[("a.py", a), ("b.py", b)]).is_empty());
    }

    #[test]
    fn same_unit_duplication_is_found_once() {
        let text = format!("{}\n{}", chunk("alpha"), chunk("beta"));
        let got = clone_candidates(&[("a.py", &text)]);
        assert_eq!(got.len(), 2);
        let spans: Vec<Span> = got.iter().map(|(_, c)| c.span).collect();
        assert_ne!(spans[0], spans[1]);
    }

    #[test]
    fn regions_extend_to_maximal_length() {
        let text_a = chunk("first");
        let text_b = chunk("second");
        let got = clone_candidates(&[("a.py", &text_a), ("b.py", &text_b)]);
        let Evidence::Clone { token_count, .. } = &got[0].1.evidence else { panic!() };
        // Exactly one region per side, not a shower of sub-windows.
        assert_eq!(got.len(), 2);
        // The region covers the bodies after the differing names.
        assert!(*token_count > 30);
    }
}
