//! Line/token scanning shared by the text formats.

use crate::error::Error;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Tok<'a> {
    pub line: usize,
    pub col: usize,
    pub text: &'a str,
}

impl Tok<'_> {
    pub fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.col,
            message: message.into(),
        }
    }
}

/// Tokens of one line, 1-based columns counted in characters.
pub(crate) fn line_tokens(line: &str, line_no: usize) -> Vec<Tok<'_>> {
    let mut toks = Vec::new();
    for word in line.split_whitespace() {
        let offset = word.as_ptr() as usize - line.as_ptr() as usize;
        toks.push(Tok {
            line: line_no,
            col: line[..offset].chars().count() + 1,
            text: word,
        });
    }
    toks
}

/// Non-empty token lines with `#` comments stripped (gaut, slp, sequence files).
pub(crate) fn hash_token_lines(text: &str) -> Vec<Vec<Tok<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        let toks = line_tokens(line, i + 1);
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

/// Non-empty token lines with DIMACS `c` comment lines skipped.
pub(crate) fn dimacs_token_lines(text: &str) -> Vec<Vec<Tok<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim_start().starts_with('c') {
            continue;
        }
        let toks = line_tokens(raw, i + 1);
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

pub(crate) fn syntax_at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}
