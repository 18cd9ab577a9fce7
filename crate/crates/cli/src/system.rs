//! Loading a Coxeter system from a preset name or a system file.
//!
//! System files are UTF-8 text:
//!
//! ```text
//! # comments run to the end of the line
//! generators: s1 s2 s3
//! m s1 s2 3
//! m s2 s3 inf
//! ```
//!
//! Pairs that are not listed commute (`m = 2`). The generator order fixes
//! the ShortLex order used for reduced words.

use std::fmt;
use std::path::Path;

use artin_core::{CoxeterSystem, Error, Order};

/// A system file rejected at a given position (1-based, columns in chars).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

/// A token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError { line, column, message: message.into() }
}

fn valid_name(name: &str) -> bool {
    name != "1" && !name.contains(['\'', '{', '}', ',', ':'])
}

/// Parses the contents of a system file.
pub fn parse_system(text: &str) -> Result<CoxeterSystem, SyntaxError> {
    let mut names: Vec<String> = Vec::new();
    let mut generators_line = None;
    // ((s, t), order, line where the pair was set)
    let mut entries: Vec<((usize, usize), Order, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(first) = toks.first() else { continue };

        if let Some(rest) = first.text.strip_prefix("generators:") {
            if let Some(prev) = generators_line {
                return Err(err(lineno, first.column, format!("generators already declared on line {prev}")));
            }
            generators_line = Some(lineno);
            let mut list: Vec<(&str, usize)> = Vec::new();
            if !rest.is_empty() {
                list.push((rest, first.column + "generators:".len()));
            }
            list.extend(toks[1..].iter().map(|t| (t.text, t.column)));
            if list.is_empty() {
                return Err(err(lineno, first.column, "no generators listed"));
            }
            for (name, column) in list {
                if !valid_name(name) {
                    return Err(err(lineno, column, format!("invalid generator name `{name}`")));
                }
                if names.iter().any(|n| n == name) {
                    return Err(err(lineno, column, format!("generator `{name}` declared twice")));
                }
                names.push(name.to_string());
            }
            continue;
        }

        if first.text != "m" {
            return Err(err(lineno, first.column, format!("expected `generators:` or `m`, found `{}`", first.text)));
        }
        if generators_line.is_none() {
            return Err(err(lineno, first.column, "`m` line before the `generators:` line"));
        }
        if toks.len() != 4 {
            let column = toks.get(4).map_or(line.chars().count() + 1, |t| t.column);
            return Err(err(lineno, column, "expected `m <generator> <generator> <order>`"));
        }
        let index = |t: &Token<'_>| {
            names
                .iter()
                .position(|n| n == t.text)
                .ok_or_else(|| err(lineno, t.column, format!("unknown generator `{}`", t.text)))
        };
        let (s, t) = (index(&toks[1])?, index(&toks[2])?);
        if s == t {
            return Err(err(lineno, toks[2].column, "a generator paired with itself"));
        }
        let value = &toks[3];
        let order = match value.text {
            "inf" | "∞" => Order::Infinite,
            v => match v.parse::<u32>() {
                Ok(m) if m >= 2 => Order::Finite(m),
                Ok(_) => return Err(err(lineno, value.column, "order must be at least 2")),
                Err(_) => return Err(err(lineno, value.column, format!("expected an integer or `inf`, found `{v}`"))),
            },
        };
        let key = (s.min(t), s.max(t));
        if let Some((_, _, prev)) = entries.iter().find(|(k, _, _)| *k == key) {
            return Err(err(lineno, toks[1].column, format!("pair already set on line {prev}")));
        }
        entries.push((key, order, lineno));
    }

    let Some(gen_line) = generators_line else {
        return Err(err(text.lines().count().max(1), 1, "missing `generators:` line"));
    };
    let n = names.len();
    let mut matrix = vec![Order::Finite(2); n * n];
    for i in 0..n {
        matrix[i * n + i] = Order::Finite(1);
    }
    for &((s, t), m, _) in &entries {
        matrix[s * n + t] = m;
        matrix[t * n + s] = m;
    }
    CoxeterSystem::from_matrix(names, matrix).map_err(|e| err(gen_line, 1, e.to_string()))
}

/// Why `--system` could not be resolved.
#[derive(Debug)]
pub enum LoadError {
    Preset(Error),
    Io(String, std::io::Error),
    Syntax(String, SyntaxError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Preset(e) => write!(f, "{e} (and no such file)"),
            LoadError::Io(path, e) => write!(f, "{path}: {e}"),
            LoadError::Syntax(path, e) => write!(f, "{path}:{e}"),
        }
    }
}

/// A preset name when it is one, otherwise a path to a system file.
pub fn load(arg: &str) -> Result<CoxeterSystem, LoadError> {
    match CoxeterSystem::preset(arg) {
        Ok(sys) => Ok(sys),
        Err(e) if !Path::new(arg).exists() => Err(LoadError::Preset(e)),
        Err(_) => {
            let text = std::fs::read_to_string(arg).map_err(|e| LoadError::Io(arg.to_string(), e))?;
            parse_system(&text).map_err(|e| LoadError::Syntax(arg.to_string(), e))
        }
    }
}
