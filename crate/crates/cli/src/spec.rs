//! Textual group specifications: `cyclic:<m>`, `abelian:<m>,<n>`,
//! `dihedral:<n>`, `perm:<cycles;...>` and `fp:<path>`.

use std::path::PathBuf;
use std::str::FromStr;

use congruence::groups::{parse_permutation, permutation_degree};
use congruence::{Error, GroupTable, ParseError, Presentation, Result};

/// Generators of A5 used by the `perm:A5` shorthand.
pub const A5_CYCLES: [&str; 2] = ["(1 2 3 4 5)", "(1 2 3)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(usize, usize),
    Dihedral(usize),
    Perm(Vec<String>),
    Fp(PathBuf),
}

fn positive(s: &str, what: &str) -> Result<usize, ParseError> {
    match s.trim().parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(ParseError::new(format!("{what} must be a positive integer, got {s:?}"))),
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| ParseError::new(format!("group spec {s:?} needs the form <kind>:<args>")))?;
        match kind.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(positive(arg, "m")?)),
            "abelian" => {
                let (m, n) = arg
                    .split_once(',')
                    .ok_or_else(|| ParseError::new(format!("abelian spec needs m,n, got {arg:?}")))?;
                let (m, n) = (positive(m, "m")?, positive(n, "n")?);
                if m % n != 0 {
                    return Err(ParseError::new(format!("abelian:{m},{n} needs n to divide m")));
                }
                Ok(GroupSpec::Abelian(m, n))
            }
            "dihedral" => {
                let n = positive(arg, "n")?;
                if n < 3 {
                    return Err(ParseError::new(format!("dihedral:{n} needs n >= 3")));
                }
                Ok(GroupSpec::Dihedral(n))
            }
            "perm" => {
                let cycles: Vec<String> = if arg.trim().eq_ignore_ascii_case("a5") {
                    A5_CYCLES.iter().map(|c| c.to_string()).collect()
                } else {
                    arg.split(';').map(|c| c.trim().to_string()).filter(|c| !c.is_empty()).collect()
                };
                if cycles.is_empty() {
                    return Err(ParseError::new("perm spec needs at least one permutation"));
                }
                Ok(GroupSpec::Perm(cycles))
            }
            "fp" if !arg.trim().is_empty() => Ok(GroupSpec::Fp(PathBuf::from(arg.trim()))),
            other => Err(ParseError::new(format!("unknown group kind {other:?}"))),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupSpec::Abelian(m, n) => write!(f, "abelian:{m},{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Perm(c) => write!(f, "perm:{}", c.join(";")),
            GroupSpec::Fp(p) => write!(f, "fp:{}", p.display()),
        }
    }
}

impl GroupSpec {
    /// Builds the group. `fp` specs read a presentation through `load`, which
    /// maps a path to file contents.
    pub fn build(
        &self,
        max_cosets: usize,
        max_order: usize,
        load: impl Fn(&std::path::Path) -> Result<String>,
    ) -> Result<GroupTable> {
        let g = match self {
            GroupSpec::Cyclic(m) => GroupTable::abelian(*m, 1),
            GroupSpec::Abelian(m, n) => GroupTable::abelian(*m, *n),
            GroupSpec::Dihedral(n) => GroupTable::dihedral(*n)?,
            GroupSpec::Perm(cycles) => {
                let degree = cycles.iter().map(|c| permutation_degree(c)).max().unwrap_or(0);
                let gens = cycles
                    .iter()
                    .map(|c| parse_permutation(c, degree))
                    .collect::<Result<Vec<_>, _>>()?;
                GroupTable::from_permutations(&gens, max_order)?
            }
            GroupSpec::Fp(path) => {
                let pres: Presentation = load(path)?.parse()?;
                GroupTable::from_presentation(&pres, max_cosets, max_order)?
            }
        };
        if g.order() > max_order {
            return Err(Error::OrderCap { cap: max_order });
        }
        Ok(g)
    }
}

/// Splits `a,b` at the single comma outside parentheses, so labels such as
/// `(1,0),(0,1)` survive.
pub fn split_pair(s: &str) -> Result<(String, String), ParseError> {
    let mut depth = 0i32;
    let mut cut = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => cut.push(i),
            _ => {}
        }
    }
    match cut.as_slice() {
        [i] => Ok((s[..*i].trim().to_string(), s[i + 1..].trim().to_string())),
        _ => Err(ParseError::new(format!("--pi needs exactly two images separated by a comma, got {s:?}"))),
    }
}
