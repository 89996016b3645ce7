//! Data files shipped with the crate: the order-128 presentation, the two
//! generator tables for it, and the non-membership witness.

use std::path::Path;

use crate::autf2::FreeAutomorphism;
use crate::error::{Error, ParseError, Result};
use crate::groups::Presentation;
use crate::sl2::{Mat2, Sl2Word};

pub const G128_PRES: &str = include_str!("../fixtures/g128.pres");
pub const TABLE1_WORDS: &str = include_str!("../fixtures/table1.words");
pub const TABLE2_WORDS: &str = include_str!("../fixtures/table2.words");
pub const WITNESS_WORD: &str = include_str!("../fixtures/witness.word");

pub const FILE_NAMES: [&str; 4] = ["g128.pres", "table1.words", "table2.words", "witness.word"];

/// Non-empty lines with `#` comments stripped.
pub fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

/// The four fixture texts, either built in or read from `dir`.
#[derive(Clone, Debug)]
pub struct Fixtures {
    pub g128: String,
    pub table1: String,
    pub table2: String,
    pub witness: String,
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            g128: G128_PRES.to_string(),
            table1: TABLE1_WORDS.to_string(),
            table2: TABLE2_WORDS.to_string(),
            witness: WITNESS_WORD.to_string(),
        }
    }
}

impl Fixtures {
    pub fn load(dir: &Path) -> std::io::Result<Self> {
        let read = |name: &str| std::fs::read_to_string(dir.join(name));
        Ok(Fixtures {
            g128: read("g128.pres")?,
            table1: read("table1.words")?,
            table2: read("table2.words")?,
            witness: read("witness.word")?,
        })
    }

    /// `(file name, contents)` in [`FILE_NAMES`] order.
    pub fn files(&self) -> [(&'static str, &str); 4] {
        [
            (FILE_NAMES[0], &self.g128),
            (FILE_NAMES[1], &self.table1),
            (FILE_NAMES[2], &self.table2),
            (FILE_NAMES[3], &self.witness),
        ]
    }

    pub fn g128(&self) -> Result<Presentation> {
        Ok(self.g128.parse()?)
    }

    /// Table 1 as `(text, automorphism)` pairs.
    pub fn table1(&self) -> Result<Vec<(String, FreeAutomorphism)>> {
        data_lines(&self.table1)
            .map(|l| Ok((l.to_string(), l.parse::<FreeAutomorphism>()?)))
            .collect()
    }

    pub fn table2(&self) -> Result<Vec<(String, Sl2Word)>> {
        data_lines(&self.table2)
            .map(|l| Ok((l.to_string(), l.parse::<Sl2Word>()?)))
            .collect()
    }

    /// The witness word and the matrix it is claimed to evaluate to.
    pub fn witness(&self) -> Result<(Sl2Word, Mat2)> {
        let mut lines = data_lines(&self.witness);
        let missing = || Error::Parse(ParseError::new("witness file needs a word line and a matrix line"));
        let w: Sl2Word = lines.next().ok_or_else(missing)?.parse()?;
        let m: Mat2 = lines.next().ok_or_else(missing)?.parse()?;
        Ok((w, m))
    }
}
