//! Tokenizer for preprocessed C. Comments and preprocessor lines are dropped.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Keyword,
    Number,
    Char,
    Str,
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: u32,
    pub col: u32,
    pub end_line: u32,
    pub end_col: u32,
    /// Byte offsets into the source.
    pub start: usize,
    pub end: usize,
}

impl Token {
    pub fn is(&self, text: &str) -> bool {
        self.text == text && self.kind != TokenKind::Str && self.kind != TokenKind::Char
    }
}

pub const KEYWORDS: &[&str] = &[
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else", "enum",
    "extern", "float", "for", "goto", "if", "inline", "int", "long", "register", "restrict", "return",
    "short", "signed", "sizeof", "static", "struct", "switch", "typedef", "union", "unsigned", "void",
    "volatile", "while", "_Bool", "__inline", "__inline__", "__restrict", "__attribute__", "__extension__",
];

const PUNCTS: &[&str] = &[
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=", "-=",
    "*=", "/=", "%=", "&=", "|=", "^=", "{", "}", "(", ")", "[", "]", ";", ",", ".", "+", "-", "*", "/",
    "%", "&", "|", "^", "!", "~", "<", ">", "=", "?", ":",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl Cursor<'_> {
    fn peek(&self, off: usize) -> u8 {
        self.src.get(self.pos + off).copied().unwrap_or(0)
    }

    fn bump(&mut self) {
        if self.peek(0) == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut c = Cursor { src: text.as_bytes(), pos: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    let mut line_start = true;
    while !c.at_end() {
        let ch = c.peek(0);
        if ch == b'\n' {
            c.bump();
            line_start = true;
            continue;
        }
        if ch.is_ascii_whitespace() {
            c.bump();
            continue;
        }
        if ch == b'/' && c.peek(1) == b'/' {
            while !c.at_end() && c.peek(0) != b'\n' {
                c.bump();
            }
            continue;
        }
        if ch == b'/' && c.peek(1) == b'*' {
            let (l, col) = (c.line, c.col);
            c.bump();
            c.bump();
            loop {
                if c.at_end() {
                    return Err(Error::Parse { line: l, col, message: "unterminated comment".into() });
                }
                if c.peek(0) == b'*' && c.peek(1) == b'/' {
                    c.bump();
                    c.bump();
                    break;
                }
                c.bump();
            }
            continue;
        }
        if ch == b'#' && line_start {
            // preprocessor line, with continuations
            while !c.at_end() && c.peek(0) != b'\n' {
                if c.peek(0) == b'\\' && c.peek(1) == b'\n' {
                    c.bump();
                }
                c.bump();
            }
            continue;
        }
        line_start = false;
        let (line, col, start) = (c.line, c.col, c.pos);
        let kind;
        if ch.is_ascii_alphabetic() || ch == b'_' {
            while c.peek(0).is_ascii_alphanumeric() || c.peek(0) == b'_' {
                c.bump();
            }
            let word = &text[start..c.pos];
            // string prefix such as L"..."
            if (word == "L" || word == "u8" || word == "u" || word == "U") && c.peek(0) == b'"' {
                lex_quoted(&mut c, b'"', line, col)?;
                kind = TokenKind::Str;
            } else {
                kind = if is_keyword(word) { TokenKind::Keyword } else { TokenKind::Ident };
            }
        } else if ch.is_ascii_digit() || (ch == b'.' && c.peek(1).is_ascii_digit()) {
            while c.peek(0).is_ascii_alphanumeric()
                || c.peek(0) == b'.'
                || c.peek(0) == b'_'
                || ((c.peek(0) == b'+' || c.peek(0) == b'-')
                    && matches!(c.src[c.pos - 1], b'e' | b'E' | b'p' | b'P')
                    && !text[start..c.pos].starts_with("0x"))
            {
                c.bump();
            }
            kind = TokenKind::Number;
        } else if ch == b'"' {
            lex_quoted(&mut c, b'"', line, col)?;
            kind = TokenKind::Str;
        } else if ch == b'\'' {
            lex_quoted(&mut c, b'\'', line, col)?;
            kind = TokenKind::Char;
        } else {
            let rest = &text[c.pos..];
            let Some(p) = PUNCTS.iter().find(|p| rest.starts_with(**p)) else {
                return Err(Error::Parse { line, col, message: format!("unexpected character `{}`", ch as char) });
            };
            for _ in 0..p.len() {
                c.bump();
            }
            kind = TokenKind::Punct;
        }
        out.push(Token {
            kind,
            text: text[start..c.pos].to_string(),
            line,
            col,
            end_line: c.line,
            end_col: c.col,
            start,
            end: c.pos,
        });
    }
    Ok(out)
}

fn lex_quoted(c: &mut Cursor<'_>, quote: u8, line: u32, col: u32) -> Result<()> {
    c.bump();
    loop {
        if c.at_end() || c.peek(0) == b'\n' {
            return Err(Error::Parse { line, col, message: "unterminated literal".into() });
        }
        let ch = c.peek(0);
        c.bump();
        if ch == b'\\' {
            c.bump();
        } else if ch == quote {
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_directives() {
        let toks = tokenize("#include <x.h>\nint a; /* c */ // d\nx->y <<= 2;").unwrap();
        let texts: Vec<_> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, ["int", "a", ";", "x", "->", "y", "<<=", "2", ";"]);
        assert_eq!(toks[3].line, 3);
    }

    #[test]
    fn literals() {
        let toks = tokenize(r#""a\"b" 'c' 1e-3 0x1F"#).unwrap();
        assert_eq!(toks[0].kind, TokenKind::Str);
        assert_eq!(toks[0].text, r#""a\"b""#);
        assert_eq!(toks[1].kind, TokenKind::Char);
        assert_eq!(toks[2].text, "1e-3");
        assert_eq!(toks[3].text, "0x1F");
    }

    #[test]
    fn lexical_errors_carry_position() {
        let err = tokenize("int a;\n  @").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 3, .. }));
        assert!(tokenize("/* open").is_err());
    }
}
