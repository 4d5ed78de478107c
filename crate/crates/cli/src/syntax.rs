//! Word syntax: `l {S2}{S1}`, `r *`, `o {}`, `l ~{S0}`, joins separated by `|` or `∨`.

use nctop_core::opens::{Flavor, LatticeElement, Letter, Model, Word};

use crate::CliError;

fn err(msg: impl Into<String>) -> CliError {
    CliError::Syntax(msg.into())
}

fn split_flavor(part: &str) -> (Option<Flavor>, &str) {
    let part = part.trim_start();
    let mut chars = part.chars();
    if let Some(c) = chars.next() {
        if let Some(f) = Flavor::from_tag(&c.to_string()) {
            let rest = chars.as_str();
            if rest.is_empty() || rest.starts_with(|c: char| c.is_whitespace() || "{*~".contains(c))
            {
                return (Some(f), rest);
            }
        }
    }
    (None, part)
}

fn parse_set(model: &Model, body: &str) -> Result<Vec<nctop_core::SimpleId>, CliError> {
    let q = model.quiver();
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            q.parse_simple(s, model.modulus())
                .ok_or_else(|| err(format!("unknown simple {s:?}")))
        })
        .collect()
}

fn parse_letters(model: &Model, mut s: &str) -> Result<Vec<Letter>, CliError> {
    let mut out = Vec::new();
    loop {
        s = s.trim_start();
        let Some(c) = s.chars().next() else {
            return Ok(out);
        };
        match c {
            '*' => {
                out.push(model.full_letter());
                s = &s[1..];
            }
            '{' | '~' => {
                let cofinite = c == '~';
                let open = if cofinite {
                    s[1..]
                        .trim_start()
                        .strip_prefix('{')
                        .ok_or_else(|| err("expected '{' after '~'"))?
                } else {
                    &s[1..]
                };
                let close = open.find('}').ok_or_else(|| err("unclosed '{'"))?;
                let simples = parse_set(model, &open[..close])?;
                out.push(if cofinite {
                    model.cofinite(&simples)?
                } else {
                    model.letter(&simples)?
                });
                s = &open[close + 1..];
            }
            other => return Err(err(format!("unexpected {other:?}"))),
        }
    }
}

/// Parses a join of words sharing one flavor; only the first needs the flavor tag.
pub fn parse_element(model: &Model, s: &str) -> Result<LatticeElement, CliError> {
    let mut flavor = None;
    let mut words = Vec::new();
    for part in s.split(['|', '∨']) {
        let (f, rest) = split_flavor(part);
        match (flavor, f) {
            (None, None) => return Err(err("word must start with a flavor: l, r or o")),
            (None, Some(f)) => flavor = Some(f),
            (Some(a), Some(b)) if a != b => return Err(err("mixed flavors in one join")),
            _ => {}
        }
        words.push(parse_letters(model, rest)?);
    }
    LatticeElement::new(flavor.expect("at least one part"), words).ok_or_else(|| err("empty join"))
}

pub fn parse_word(model: &Model, s: &str) -> Result<Word, CliError> {
    let x = parse_element(model, s)?;
    if x.word_count() != 1 {
        return Err(err("expected a single word"));
    }
    let w = x.words().next().expect("one word");
    Ok(w)
}

pub fn format_element(model: &Model, x: &LatticeElement) -> String {
    model.element_label(x)
}
