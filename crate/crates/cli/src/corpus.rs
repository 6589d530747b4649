//! Corpus files: UTF-8, one group spec per line. Blank lines and anything
//! after `#` are ignored.

use std::path::Path;

use thiserror::Error;

use crate::spec::{parse_spec_with_cap, GroupSpec, SpecError};

/// The corpus shipped with the crate.
pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.txt");

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("corpus line {line}: {source}")]
    Line { line: usize, source: SpecError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// 1-based line number in the source text.
    pub line: usize,
    pub spec: GroupSpec,
}

/// Parses every entry; the first malformed line aborts the whole corpus.
pub fn parse_corpus(text: &str, max_order: u64) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let spec = parse_spec_with_cap(line, max_order).map_err(|source| CorpusError::Line {
            line: i + 1,
            source,
        })?;
        out.push(CorpusEntry { line: i + 1, spec });
    }
    Ok(out)
}

pub fn load_corpus(path: &Path, max_order: u64) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus(&text, max_order)
}

pub fn default_corpus(max_order: u64) -> Result<Vec<CorpusEntry>, CorpusError> {
    parse_corpus(DEFAULT_CORPUS, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# header\n\nC(6)  # six\n   \nQ(8)\n";
        let entries = parse_corpus(text, 4096).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].line, 3);
        assert_eq!(entries[1].spec.render(), "Q(8)");
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let err = parse_corpus("C(6)\n\nQ(12)\n", 4096).unwrap_err();
        match err {
            CorpusError::Line { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
        assert!(err_line(parse_corpus("C(2)\nC(2", 4096)) == Some(2));
    }

    fn err_line(r: Result<Vec<CorpusEntry>, CorpusError>) -> Option<usize> {
        match r {
            Err(CorpusError::Line { line, .. }) => Some(line),
            _ => None,
        }
    }

    #[test]
    fn default_corpus_parses_within_the_default_cap() {
        let entries = default_corpus(4096).unwrap();
        assert!(entries.len() > 100);
        assert!(entries.iter().all(|e| e.spec.order() <= 4096));
        assert!(entries.iter().filter(|e| e.spec.order() <= 512).count() >= 60);
    }
}
