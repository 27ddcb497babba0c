//! Contest-style input parsing and `Case #k: ...` output formatting.
//!
//! Every input starts with a case count followed by that many case payloads.
//! Payloads are either whitespace-separated tokens or, for problems whose
//! case is free text, one raw line.

use std::fmt::Write as _;

use crate::problems::osmos::OsmosInstance;
use crate::problems::prisoners::PrisonerInstance;
use crate::problems::triangle::TriangleInstance;
use crate::problems::welcome::WelcomeInstance;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("unexpected EOF")]
    UnexpectedEof,
    #[error("parse error at token {position} (line {line}): expected integer, found {token:?}")]
    Parse {
        token: String,
        position: usize,
        line: usize,
    },
    #[error("invalid input on line {line}: {reason}")]
    Invalid { line: usize, reason: String },
}

/// Cursor over a contest input that can be read either token by token or
/// line by line.
///
/// Token reads split on ASCII whitespace and may span lines. A line read
/// returns the next raw line verbatim; if token reads have already consumed
/// part of the current line, the rest of that line is skipped first.
#[derive(Debug, Clone)]
pub struct TokenStream<'a> {
    lines: Vec<&'a str>,
    line: usize,
    col: usize,
    tokens_read: usize,
}

impl<'a> TokenStream<'a> {
    pub fn new(input: &'a str) -> Self {
        let lines = input
            .split_inclusive('\n')
            .map(|l| {
                let l = l.strip_suffix('\n').unwrap_or(l);
                l.strip_suffix('\r').unwrap_or(l)
            })
            .collect();
        TokenStream {
            lines,
            line: 0,
            col: 0,
            tokens_read: 0,
        }
    }

    /// Number of tokens consumed so far.
    pub fn position(&self) -> usize {
        self.tokens_read
    }

    /// 1-based line number of the cursor.
    pub fn line_number(&self) -> usize {
        self.line + 1
    }

    pub fn next_token(&mut self) -> Result<&'a str, IoError> {
        while self.line < self.lines.len() {
            let text = self.lines[self.line];
            let rest = &text[self.col..];
            let trimmed = rest.trim_start_matches(|c: char| c.is_ascii_whitespace());
            if trimmed.is_empty() {
                self.line += 1;
                self.col = 0;
                continue;
            }
            let start = text.len() - trimmed.len();
            let len = trimmed
                .find(|c: char| c.is_ascii_whitespace())
                .unwrap_or(trimmed.len());
            self.col = start + len;
            self.tokens_read += 1;
            return Ok(&text[start..start + len]);
        }
        Err(IoError::UnexpectedEof)
    }

    pub fn read_int(&mut self) -> Result<i64, IoError> {
        let token = self.next_token()?;
        token.parse::<i64>().map_err(|_| IoError::Parse {
            token: token.to_string(),
            position: self.tokens_read - 1,
            line: self.line + 1,
        })
    }

    pub fn read_real(&mut self) -> Result<f64, IoError> {
        let token = self.next_token()?;
        token.parse::<f64>().map_err(|_| IoError::Parse {
            token: token.to_string(),
            position: self.tokens_read - 1,
            line: self.line + 1,
        })
    }

    pub fn read_line(&mut self) -> Result<&'a str, IoError> {
        if self.col > 0 {
            self.line += 1;
            self.col = 0;
        }
        let text = *self.lines.get(self.line).ok_or(IoError::UnexpectedEof)?;
        self.line += 1;
        Ok(text)
    }

    fn invalid(&self, reason: impl Into<String>) -> IoError {
        IoError::Invalid {
            line: self.line_number(),
            reason: reason.into(),
        }
    }
}

/// A parsed contest input: one payload per case, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFile<T> {
    pub cases: Vec<T>,
}

impl<T> CaseFile<T> {
    pub fn case_count(&self) -> usize {
        self.cases.len()
    }
}

pub fn format_case(case_num: usize, body: &str) -> String {
    format!("Case #{case_num}: {body}")
}

fn read_case_count(stream: &mut TokenStream<'_>) -> Result<usize, IoError> {
    let count = stream.read_int()?;
    if count < 1 {
        return Err(stream.invalid(format!("case count must be positive, got {count}")));
    }
    usize::try_from(count).map_err(|_| stream.invalid("case count too large"))
}

fn read_positive(stream: &mut TokenStream<'_>, what: &str) -> Result<i64, IoError> {
    let v = stream.read_int()?;
    if v < 1 {
        return Err(stream.invalid(format!("{what} must be positive, got {v}")));
    }
    Ok(v)
}

fn read_count(stream: &mut TokenStream<'_>, what: &str) -> Result<usize, IoError> {
    let v = stream.read_int()?;
    usize::try_from(v).map_err(|_| stream.invalid(format!("{what} must be non-negative, got {v}")))
}

/// `C`, then `C` lines of `N M A`.
pub fn parse_triangle(input: &str) -> Result<CaseFile<TriangleInstance>, IoError> {
    let mut s = TokenStream::new(input);
    let count = read_case_count(&mut s)?;
    let mut cases = Vec::with_capacity(count);
    for _ in 0..count {
        let n = read_positive(&mut s, "N")?;
        let m = read_positive(&mut s, "M")?;
        let a = read_positive(&mut s, "A")?;
        cases.push(TriangleInstance { n, m, a });
    }
    Ok(CaseFile { cases })
}

/// `C`, then `C` raw text lines.
pub fn parse_welcome(input: &str) -> Result<CaseFile<WelcomeInstance>, IoError> {
    let mut s = TokenStream::new(input);
    let count = read_case_count(&mut s)?;
    let mut cases = Vec::with_capacity(count);
    for _ in 0..count {
        cases.push(WelcomeInstance::new(s.read_line()?));
    }
    Ok(CaseFile { cases })
}

/// `C`, then per case `P Q` followed by `Q` cell indices.
pub fn parse_prisoners(input: &str) -> Result<CaseFile<PrisonerInstance>, IoError> {
    let mut s = TokenStream::new(input);
    let count = read_case_count(&mut s)?;
    let mut cases = Vec::with_capacity(count);
    for _ in 0..count {
        let p = read_positive(&mut s, "P")?;
        let q = read_count(&mut s, "Q")?;
        let mut free = Vec::with_capacity(q);
        for _ in 0..q {
            free.push(s.read_int()?);
        }
        let inst = PrisonerInstance::new(p, free).map_err(|e| s.invalid(e))?;
        cases.push(inst);
    }
    Ok(CaseFile { cases })
}

/// `C`, then per case `A N` followed by `N` mote sizes.
pub fn parse_osmos(input: &str) -> Result<CaseFile<OsmosInstance>, IoError> {
    let mut s = TokenStream::new(input);
    let count = read_case_count(&mut s)?;
    let mut cases = Vec::with_capacity(count);
    for _ in 0..count {
        let armin = read_positive(&mut s, "mote size")?;
        let n = read_count(&mut s, "mote count")?;
        let mut others = Vec::with_capacity(n);
        for _ in 0..n {
            others.push(read_positive(&mut s, "mote size")? as u64);
        }
        cases.push(OsmosInstance::new(armin as u64, others));
    }
    Ok(CaseFile { cases })
}

pub fn write_triangle(cases: &[TriangleInstance]) -> String {
    let mut out = format!("{}\n", cases.len());
    for c in cases {
        let _ = writeln!(out, "{} {} {}", c.n, c.m, c.a);
    }
    out
}

pub fn write_welcome(cases: &[WelcomeInstance]) -> String {
    let mut out = format!("{}\n", cases.len());
    for c in cases {
        out.push_str(&c.text);
        out.push('\n');
    }
    out
}

pub fn write_prisoners(cases: &[PrisonerInstance]) -> String {
    let mut out = format!("{}\n", cases.len());
    for c in cases {
        let _ = writeln!(out, "{} {}", c.cells(), c.free().len());
        let cells: Vec<String> = c.free().iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn write_osmos(cases: &[OsmosInstance]) -> String {
    let mut out = format!("{}\n", cases.len());
    for c in cases {
        let _ = writeln!(out, "{} {}", c.armin, c.others.len());
        let sizes: Vec<String> = c.others.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{}", sizes.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn read_int_advances_cursor() {
        let mut s = TokenStream::new("3 1 1");
        assert_eq!(s.read_int(), Ok(3));
        assert_eq!(s.position(), 1);
    }

    #[test]
    fn read_int_handles_sign() {
        assert_eq!(TokenStream::new("-5").read_int(), Ok(-5));
    }

    #[test]
    fn read_int_rejects_text() {
        let err = TokenStream::new("x").read_int().unwrap_err();
        assert_eq!(
            err,
            IoError::Parse {
                token: "x".into(),
                position: 0,
                line: 1
            }
        );
    }

    #[test]
    fn read_int_at_eof() {
        let mut s = TokenStream::new("  \n\n ");
        assert_eq!(s.read_int(), Err(IoError::UnexpectedEof));
        assert_eq!(s.position(), 0);
    }

    #[test]
    fn read_line_keeps_spaces() {
        assert_eq!(
            TokenStream::new("welcome to code jam\n").read_line(),
            Ok("welcome to code jam")
        );
        assert_eq!(
            TokenStream::new("  padded  \n").read_line(),
            Ok("  padded  ")
        );
        assert_eq!(
            TokenStream::new("crlf line\r\n").read_line(),
            Ok("crlf line")
        );
    }

    #[test]
    fn read_line_on_empty_input() {
        assert_eq!(
            TokenStream::new("").read_line(),
            Err(IoError::UnexpectedEof)
        );
    }

    #[test]
    fn line_after_token_skips_rest_of_line() {
        let mut s = TokenStream::new("2\nfirst line\n second \n");
        assert_eq!(s.read_int(), Ok(2));
        assert_eq!(s.read_line(), Ok("first line"));
        assert_eq!(s.read_line(), Ok(" second "));
        assert_eq!(s.read_line(), Err(IoError::UnexpectedEof));
    }

    #[test]
    fn format_case_examples() {
        assert_eq!(format_case(1, "IMPOSSIBLE"), "Case #1: IMPOSSIBLE");
        assert_eq!(format_case(42, "0001"), "Case #42: 0001");
        assert_eq!(format_case(3, "0 0 1 0 0 1"), "Case #3: 0 0 1 0 0 1");
    }

    #[test]
    fn parses_each_layout() {
        let t = parse_triangle("2\n1 1 3\n3 3 5\n").unwrap();
        assert_eq!(t.case_count(), 2);
        assert_eq!(t.cases[1], TriangleInstance { n: 3, m: 3, a: 5 });

        let w = parse_welcome("1\nwelcome to code jam\n").unwrap();
        assert_eq!(w.cases[0].text, "welcome to code jam");

        let p = parse_prisoners("2\n8 1\n3\n20 3\n3 6 14\n").unwrap();
        assert_eq!(p.cases[1].free(), &[3, 6, 14]);

        let o = parse_osmos("1\n2 2\n2 1\n").unwrap();
        assert_eq!(o.cases[0].armin, 2);
        assert_eq!(o.cases[0].others, vec![1, 2]);
    }

    #[test]
    fn trailing_content_beyond_case_count_is_ignored() {
        let t = parse_triangle("1\n1 1 1\n9 9 9\n\n  ").unwrap();
        assert_eq!(t.case_count(), 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            parse_triangle("0\n"),
            Err(IoError::Invalid { .. })
        ));
        assert!(matches!(
            parse_triangle("1\n1 1\n"),
            Err(IoError::UnexpectedEof)
        ));
        assert!(matches!(
            parse_prisoners("1\n5 1\n6\n"),
            Err(IoError::Invalid { .. })
        ));
        assert!(matches!(
            parse_osmos("1\n2 1\n0\n"),
            Err(IoError::Invalid { .. })
        ));
        assert!(matches!(
            parse_welcome("2\nonly one\n"),
            Err(IoError::UnexpectedEof)
        ));
    }
}
