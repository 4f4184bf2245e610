//! Reference root tables stored as plain text under `tables/`, and a small
//! parser for the linear forms they contain.
//!
//! A form is written in the variables l0 l1 l2 m1 m2 m3 m w, with rational
//! coefficients, parentheses and implicit multiplication, e.g.
//! `-((1/2)(l0+l1-2l2)-(1/2)m3+(2/3)m)`.

use thiserror::Error;

use crate::scalar::Rational;

pub const VARIABLES: [&str; 8] = ["l0", "l1", "l2", "m1", "m2", "m3", "m", "w"];

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Parse(String),
}

/// Coefficients of a linear form in `VARIABLES`.
pub type Form = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| format!("number {text} too large"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            // A variable name carries at most one trailing digit, so "a1a2" is rejected later
            // and "2l2" splits as 2 * l2.
            if i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

/// An affine form: coefficients of the named variables plus a constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Affine {
    coef: Vec<Rational>,
    constant: Rational,
}

impl Affine {
    fn constant(c: Rational, n: usize) -> Affine {
        Affine { coef: vec![Rational::ZERO; n], constant: c }
    }

    fn is_constant(&self) -> bool {
        self.coef.iter().all(Rational::is_zero)
    }

    fn add(&self, o: &Affine, sign: &Rational) -> Affine {
        Affine {
            coef: self.coef.iter().zip(&o.coef).map(|(a, b)| a + &(b * sign)).collect(),
            constant: &self.constant + &(&o.constant * sign),
        }
    }

    fn scale(&self, c: &Rational) -> Affine {
        Affine { coef: self.coef.iter().map(|a| a * c).collect(), constant: &self.constant * c }
    }
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Affine, String> {
        let mut sign = Rational::ONE;
        if self.eat('-') {
            sign = Rational::int(-1);
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, &Rational::ONE);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, &Rational::int(-1));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(a: Affine, b: Affine) -> Result<Affine, String> {
        if a.is_constant() {
            Ok(b.scale(&a.constant))
        } else if b.is_constant() {
            Ok(a.scale(&b.constant))
        } else {
            Err("product of two non-constant forms".into())
        }
    }

    fn term(&mut self) -> Result<Affine, String> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('/') {
                let d = self.factor()?;
                if !d.is_constant() || d.constant.is_zero() {
                    return Err("division by a non-constant or zero".into());
                }
                acc = acc.scale(&d.constant.recip().map_err(|e| e.to_string())?);
            } else if self.eat('*') {
                let f = self.factor()?;
                acc = Self::product(acc, f)?;
            } else if matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('('))) {
                let f = self.factor()?;
                acc = Self::product(acc, f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Affine, String> {
        let n = self.names.len();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(Affine::constant(Rational::int(k), n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self.names.iter().position(|v| *v == name).ok_or_else(|| format!("unknown variable {name}"))?;
                let mut a = Affine::constant(Rational::ZERO, n);
                a.coef[idx] = Rational::ONE;
                Ok(a)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("missing ')'".into());
                }
                Ok(e)
            }
            other => Err(format!("unexpected {other:?}")),
        }
    }
}

/// Parses a homogeneous linear form in the given variable names.
pub fn parse_linear(s: &str, names: &[&str]) -> Result<Vec<Rational>, String> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, names };
    let a = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input in '{s}'"));
    }
    if !a.constant.is_zero() {
        return Err(format!("'{s}' has a constant term"));
    }
    Ok(a.coef)
}

pub fn parse_form(s: &str) -> Result<Form, String> {
    parse_linear(s, &VARIABLES)
}

fn simple_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|k| format!("a{k}")).collect()
}

/// An entry that differs from the printed source, with the printed text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction {
    pub section: String,
    pub entry: String,
    pub printed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootTable {
    pub label: String,
    pub rank: usize,
    pub root_count: usize,
    pub dynkin: String,
    /// The listed roots, each ± pair expanded.
    pub roots: Vec<Form>,
    pub simple: Vec<Form>,
    /// Positive roots with their coefficients on the simple roots.
    pub positive: Vec<(Form, Vec<Rational>)>,
    /// Canonical elements in the encoding (l0, l1, l2, t1, t2, t3, m, w).
    pub canonical: Vec<Vec<Rational>>,
    /// Stated inner products (i, j, value) of simple roots, 0-based.
    pub inner: Vec<(usize, usize, Rational)>,
    pub corrections: Vec<Correction>,
}

fn simple_index(name: &str, rank: usize) -> Result<usize, String> {
    simple_names(rank).iter().position(|n| n == name).ok_or_else(|| format!("unknown simple root {name}"))
}

impl RootTable {
    pub fn parse(text: &str) -> Result<RootTable, TableError> {
        let mut t = RootTable {
            label: String::new(),
            rank: 0,
            root_count: 0,
            dynkin: String::new(),
            roots: Vec::new(),
            simple: Vec::new(),
            positive: Vec::new(),
            canonical: Vec::new(),
            inner: Vec::new(),
            corrections: Vec::new(),
        };
        let mut section = String::new();
        let mut last = String::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: String| TableError::Syntax { line: no + 1, msg };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(printed) = line.strip_prefix("! printed:") {
                t.corrections.push(Correction { section: section.clone(), entry: last.clone(), printed: printed.trim().to_string() });
                continue;
            }
            if line.starts_with('[') && line.ends_with(']') {
                section = line[1..line.len() - 1].to_string();
                continue;
            }
            last = line.to_string();
            let split = |l: &str| -> Result<(String, String), TableError> {
                let (a, b) = l.split_once('=').ok_or_else(|| err("expected '='".into()))?;
                Ok((a.trim().to_string(), b.trim().to_string()))
            };
            match section.as_str() {
                "meta" => {
                    let (k, v) = split(line)?;
                    let num = || v.parse::<usize>().map_err(|e| err(e.to_string()));
                    match k.as_str() {
                        "label" => t.label = v,
                        "rank" => t.rank = num()?,
                        "roots" => t.root_count = num()?,
                        "dynkin" => t.dynkin = v,
                        _ => return Err(err(format!("unknown key {k}"))),
                    }
                }
                "roots" => {
                    let body = line.strip_prefix("+-").ok_or_else(|| err("roots are listed as +-form".into()))?;
                    let f = parse_form(body).map_err(err)?;
                    t.roots.push(f.iter().map(|a| -a).collect());
                    t.roots.push(f);
                }
                "simple" => {
                    let (k, v) = split(line)?;
                    if simple_index(&k, t.rank).map_err(err)? != t.simple.len() {
                        return Err(err(format!("{k} out of order")));
                    }
                    t.simple.push(parse_form(&v).map_err(err)?);
                }
                "positive" => {
                    let (k, v) = split(line)?;
                    let names = simple_names(t.rank);
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    let coef = parse_linear(&v, &refs).map_err(err)?;
                    t.positive.push((parse_form(&k).map_err(err)?, coef));
                }
                "canonical" => {
                    let (k, v) = split(line)?;
                    if simple_index(&k, t.rank).map_err(err)? != t.canonical.len() {
                        return Err(err(format!("{k} out of order")));
                    }
                    let vals = v
                        .split_whitespace()
                        .map(|s| s.parse::<Rational>().map_err(|e| err(e.to_string())))
                        .collect::<Result<Vec<_>, _>>()?;
                    if vals.len() != VARIABLES.len() {
                        return Err(err("canonical elements have eight entries".into()));
                    }
                    t.canonical.push(vals);
                }
                "inner" => {
                    let (k, v) = split(line)?;
                    let names: Vec<&str> = k.split_whitespace().collect();
                    let [a, b] = names[..] else {
                        return Err(err("expected a pair of simple roots".into()));
                    };
                    let (i, j) = (simple_index(a, t.rank).map_err(err)?, simple_index(b, t.rank).map_err(err)?);
                    t.inner.push((i, j, v.parse::<Rational>().map_err(|e| err(e.to_string()))?));
                }
                _ => return Err(err(format!("entry outside a known section ({section})"))),
            }
        }
        if t.simple.len() != t.rank {
            return Err(TableError::Parse(format!("{}: {} simple roots for rank {}", t.label, t.simple.len(), t.rank)));
        }
        Ok(t)
    }
}

pub const F4_TABLE: &str = include_str!("../tables/f4.txt");
pub const E6_TABLE: &str = include_str!("../tables/e6.txt");
pub const E7_TABLE: &str = include_str!("../tables/e7.txt");
pub const E8_TABLE: &str = include_str!("../tables/e8.txt");

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn nested_forms() {
        let f = parse_form("-((1/2)(l0+l1-2l2)-(1/2)m3+(2/3)m)").unwrap();
        assert_eq!(f, vec![q(-1, 2), q(-1, 2), q(1, 1), q(0, 1), q(0, 1), q(1, 2), q(-2, 3), q(0, 1)]);
        assert_eq!(parse_form("2l2").unwrap()[2], q(2, 1));
        assert_eq!(parse_form("(-1/2)(l0-l1)").unwrap()[1], q(1, 2));
    }

    #[test]
    fn malformed_forms_are_rejected() {
        assert!(parse_form("l0*l1").is_err());
        assert!(parse_form("l0+1").is_err());
        assert!(parse_form("(l0").is_err());
        assert!(parse_form("x3").is_err());
    }

    #[test]
    fn implicit_product_of_variables_is_an_error() {
        // "a1a2" reads as a1 * a2, which is not linear.
        assert!(parse_linear("a1a2+a3", &["a1", "a2", "a3"]).is_err());
    }

    #[test]
    fn bundled_tables_parse() {
        for (text, rank, count) in [(F4_TABLE, 3, 18), (E6_TABLE, 5, 30), (E7_TABLE, 6, 60), (E8_TABLE, 7, 126)] {
            let t = RootTable::parse(text).unwrap();
            assert_eq!(t.rank, rank);
            assert_eq!(t.root_count, count);
            assert_eq!(t.roots.len(), count);
            assert_eq!(t.positive.len(), count / 2);
            assert_eq!(t.canonical.len(), rank);
            assert_eq!(t.inner.len(), rank * (rank + 1) / 2);
        }
    }

    #[test]
    fn corrections_attach_to_previous_entry() {
        let text = "[meta]\nlabel = x\nrank = 1\nroots = 2\ndynkin = A1\n[roots]\n+-l0\n[simple]\na1 = l0\n[inner]\na1 a1 = 1/2\n! printed: 1/3\n";
        let t = RootTable::parse(text).unwrap();
        assert_eq!(t.corrections.len(), 1);
        assert_eq!(t.corrections[0].entry, "a1 a1 = 1/2");
        assert_eq!(t.corrections[0].printed, "1/3");
    }
}
