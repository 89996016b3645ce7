use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A letter of a finitely presented group, encoded as a coset-table column:
/// `2 * generator` for the generator, `2 * generator + 1` for its inverse.
pub type Column = usize;

#[inline]
pub fn column(generator: usize, inverse: bool) -> Column {
    2 * generator + inverse as usize
}

#[inline]
pub fn inverse_column(c: Column) -> Column {
    c ^ 1
}

/// Word over the generators of a presentation, as a sequence of columns.
pub type FpWord = Vec<Column>;

pub fn invert_word(w: &[Column]) -> FpWord {
    w.iter().rev().map(|&c| inverse_column(c)).collect()
}

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FpWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FpWord>) -> Result<Self, ParseError> {
        let ncols = 2 * generators.len();
        for (i, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(ParseError::new(format!("relator {i} is empty")));
            }
            if r.iter().any(|&c| c >= ncols) {
                return Err(ParseError::new(format!("relator {i} uses an undeclared generator")));
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Builds a presentation from generator names and relators in the
    /// `name^k` token syntax.
    pub fn from_strs(generators: &[&str], relators: &[&str]) -> Result<Self, ParseError> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_fp_word(&generators, r))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(generators, rels)
    }

    /// `⟨r, s | r^n, s^2, r s r s^-1⟩`
    pub fn dihedral(n: usize) -> Self {
        let rn = format!("r^{n}");
        Presentation::from_strs(&["r", "s"], &[&rn, "s^2", "r s r s^-1"]).expect("dihedral presentation")
    }

    /// `⟨e1, e2 | e2 e1^-1 e2 e1 e2^-1 e1, (e2 e1^-1 e2)^4⟩`
    pub fn sl2z() -> Self {
        Presentation::from_strs(
            &["e1", "e2"],
            &["e2 e1^-1 e2 e1 e2^-1 e1", "e2 e1^-1 e2 e2 e1^-1 e2 e2 e1^-1 e2 e2 e1^-1 e2"],
        )
        .expect("SL2(Z) presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FpWord] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<FpWord, ParseError> {
        parse_fp_word(&self.generators, text)
    }

    pub fn format_word(&self, w: &[Column]) -> String {
        format_fp_word(&self.generators, w)
    }

    /// Same presentation with relators reordered.
    pub fn with_relators(&self, relators: Vec<FpWord>) -> Self {
        Presentation { generators: self.generators.clone(), relators }
    }
}

/// Parses whitespace-separated tokens `name` or `name^k`, `k` a possibly
/// negative integer. `1` denotes the empty word.
pub fn parse_fp_word(generators: &[String], text: &str) -> Result<FpWord, ParseError> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, k) = match tok.split_once('^') {
            Some((n, e)) => {
                let k: i64 = e
                    .parse()
                    .map_err(|_| ParseError::new(format!("malformed exponent in token {tok:?}")))?;
                (n, k)
            }
            None => (tok, 1),
        };
        let g = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| ParseError::new(format!("unknown generator {name:?}")))?;
        let c = column(g, k < 0);
        out.extend(std::iter::repeat_n(c, k.unsigned_abs() as usize));
    }
    Ok(out)
}

pub fn format_fp_word(generators: &[String], w: &[Column]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = &generators[w[i] / 2];
        let k = (j - i) as i64 * if w[i] % 2 == 1 { -1 } else { 1 };
        parts.push(if k == 1 { name.clone() } else { format!("{name}^{k}") });
        i = j;
    }
    parts.join(" ")
}

impl FromStr for Presentation {
    type Err = ParseError;

    /// File format: a `gens:` line, then one `rel:` line per relator. Blank
    /// lines and `#` comments are ignored.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| ParseError::new(format!("line {}: {msg}", lineno + 1));
            if let Some(rest) = line.strip_prefix("gens:") {
                if generators.is_some() {
                    return Err(at("duplicate gens line".into()));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(at("no generators declared".into()));
                }
                generators = Some(names);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let gens = generators.as_ref().ok_or_else(|| at("rel before gens".into()))?;
                let w = parse_fp_word(gens, rest).map_err(|e| at(e.message))?;
                if w.is_empty() {
                    return Err(at("empty relator".into()));
                }
                relators.push(w);
            } else {
                return Err(at(format!("unrecognised line {line:?}")));
            }
        }
        let generators = generators.ok_or_else(|| ParseError::new("missing gens line"))?;
        Presentation::new(generators, relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.format_word(r))?;
        }
        Ok(())
    }
}
