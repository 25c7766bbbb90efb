//! Plain-text ideal files.
//!
//! ```text
//! # the intro example
//! vars a b c d
//! field rational
//! ab, cd
//! ```
//!
//! Generators are separated by commas, whitespace or newlines. Inside a
//! generator `*` is optional; variable names are matched greedily, longest
//! first. `^k` raises a factor to the power `k ≥ 1`; `1` is the unit monomial.

use std::fmt;

use moncoh::{FieldSpec, Monomial, MonomialIdeal, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub vars: Vec<String>,
    pub gens: Vec<Monomial>,
    pub field: Option<FieldSpec>,
}

impl IdealSpec {
    /// The ideal generated by `gens`, minimalized. The zero ideal when there
    /// are no generators.
    pub fn ideal(&self) -> moncoh::Result<MonomialIdeal> {
        MonomialIdeal::new(self.vars.len(), self.gens.iter().cloned())
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn parse(text: &str) -> Result<IdealSpec, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut field = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(k) => (&trimmed[..k], &trimmed[k..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + keyword.len() + 1;
        match keyword {
            "vars" => {
                if vars.is_some() {
                    return Err(err(line, indent + 1, "duplicate `vars` line"));
                }
                vars = Some(parse_vars(rest, line, rest_col)?);
            }
            "field" => {
                if field.is_some() {
                    return Err(err(line, indent + 1, "duplicate `field` line"));
                }
                let spec = rest
                    .trim()
                    .parse::<FieldSpec>()
                    .map_err(|e| err(line, rest_col + 1, e.to_string()))?;
                field = Some(spec);
            }
            _ => {
                let Some(names) = vars.as_ref() else {
                    return Err(err(
                        line,
                        indent + 1,
                        "expected `vars` header before generators",
                    ));
                };
                let (body, offset) = match keyword {
                    "gens" => (rest, rest_col - 1),
                    _ => (content, 0),
                };
                parse_generators(body, names, line, offset, &mut gens)?;
            }
        }
    }
    let vars = vars.ok_or_else(|| err(1, 1, "missing `vars` header"))?;
    Ok(IdealSpec { vars, gens, field })
}

fn parse_vars(rest: &str, line: usize, col0: usize) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut pos = 0;
    for token in rest.split_whitespace() {
        let at = rest[pos..]
            .find(token)
            .expect("token comes from the same string")
            + pos;
        pos = at + token.len();
        let col = col0 + at;
        let mut chars = token.chars();
        let valid = chars.next().is_some_and(is_name_start) && chars.all(is_name_char);
        if !valid {
            return Err(err(line, col, format!("invalid variable name `{token}`")));
        }
        if names.iter().any(|n| n == token) {
            return Err(err(line, col, format!("duplicate variable `{token}`")));
        }
        names.push(token.to_string());
    }
    if names.is_empty() {
        return Err(err(line, col0, "`vars` needs at least one variable"));
    }
    if names.len() > MAX_VARS {
        return Err(err(
            line,
            col0,
            format!("at most {MAX_VARS} variables are supported"),
        ));
    }
    Ok(names)
}

fn parse_generators(
    body: &str,
    names: &[String],
    line: usize,
    offset: usize,
    out: &mut Vec<Monomial>,
) -> Result<(), ParseError> {
    let bytes: Vec<char> = body.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c == ',' || c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != ',' && !bytes[i].is_whitespace() {
            i += 1;
        }
        let token: String = bytes[start..i].iter().collect();
        out.push(parse_monomial(&token, names, line, offset + start + 1)?);
    }
    Ok(())
}

/// Parses one generator such as `a*b^2` or `x1x3`; `col` is the column of its first character.
pub fn parse_monomial(
    token: &str,
    names: &[String],
    line: usize,
    col: usize,
) -> Result<Monomial, ParseError> {
    let mut exps = vec![0u32; names.len()];
    if token == "1" {
        return Ok(Monomial::new(exps));
    }
    let chars: Vec<char> = token.chars().collect();
    let mut i = 0;
    let mut expect_factor = true;
    while i < chars.len() {
        if chars[i] == '*' {
            if expect_factor {
                return Err(err(line, col + i, "unexpected `*`"));
            }
            expect_factor = true;
            i += 1;
            continue;
        }
        let rest: String = chars[i..].iter().collect();
        let Some((j, name)) = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
        else {
            return Err(err(line, col + i, format!("unknown variable at `{rest}`")));
        };
        i += name.chars().count();
        let mut power = 1u32;
        if i < chars.len() && chars[i] == '^' {
            let digits_start = i + 1;
            let mut k = digits_start;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[digits_start..k].iter().collect();
            power = digits
                .parse()
                .map_err(|_| err(line, col + i, "expected a positive exponent after `^`"))?;
            if power == 0 {
                return Err(err(
                    line,
                    col + digits_start,
                    "exponents must be at least 1",
                ));
            }
            i = k;
        }
        exps[j] = exps[j]
            .checked_add(power)
            .ok_or_else(|| err(line, col, "exponent overflow"))?;
        expect_factor = false;
    }
    if expect_factor {
        return Err(err(
            line,
            col + chars.len().saturating_sub(1),
            "dangling `*`",
        ));
    }
    Ok(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_intro_file() {
        let spec = parse("# comment\nvars a b c d\nab, cd\n").unwrap();
        assert_eq!(spec.vars, vec!["a", "b", "c", "d"]);
        assert_eq!(spec.gens.len(), 2);
        assert_eq!(spec.gens[0], Monomial::new(vec![1, 1, 0, 0]));
        assert_eq!(spec.field, None);
    }

    #[test]
    fn stars_powers_and_long_names() {
        let spec = parse("vars x1 x2 x10\nfield gf 101\ngens x1^2*x10, x2x1 x10\n").unwrap();
        assert_eq!(spec.field, Some(FieldSpec::Prime(101)));
        assert_eq!(
            spec.gens,
            vec![
                Monomial::new(vec![2, 0, 1]),
                Monomial::new(vec![1, 1, 0]),
                Monomial::new(vec![0, 0, 1])
            ]
        );
    }

    #[test]
    fn positions_in_errors() {
        let e = parse("vars a b\nab, az\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 6));
        let e = parse("ab\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse("vars a a\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        let e = parse("vars a b\na^0\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse("vars a b\na**b\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        assert!(parse("vars a\nfield gf 4\n").is_err());
    }

    #[test]
    fn unit_and_repeated_factors() {
        let spec = parse("vars a b\n1\na*a*b\n").unwrap();
        assert_eq!(
            spec.gens,
            vec![Monomial::new(vec![0, 0]), Monomial::new(vec![2, 1])]
        );
        assert!(spec.ideal().unwrap().is_unit());
        assert!(parse("vars a b\n").unwrap().ideal().unwrap().is_zero());
    }
}
