//! Freely reduced words in the free group on `x` and `y`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// One of the two free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const X: Letter = Letter { gen: Gen::X, inverse: false };
    pub const Y: Letter = Letter { gen: Gen::Y, inverse: false };
    pub const X_INV: Letter = Letter { gen: Gen::X, inverse: true };
    pub const Y_INV: Letter = Letter { gen: Gen::Y, inverse: true };

    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    fn to_char(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::X, false) => 'x',
            (Gen::Y, false) => 'y',
            (Gen::X, true) => 'X',
            (Gen::Y, true) => 'Y',
        }
    }
}

/// Pushes `letter` onto an already reduced buffer, cancelling if possible.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last().is_some_and(|&l| l.cancels(letter)) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// Signed exponent sums of `x` and `y`: the image of a word in the
/// abelianization `Z^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    pub a: i64,
    pub b: i64,
}

impl std::ops::Add for ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: ExponentVector) -> ExponentVector {
        ExponentVector { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

/// An element of F2 in freely reduced form. Reduction happens on every
/// construction, so equality of values is equality in the group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn x() -> Self {
        ReducedWord { letters: vec![Letter::X] }
    }

    pub fn y() -> Self {
        ReducedWord { letters: vec![Letter::Y] }
    }

    pub fn letter(l: Letter) -> Self {
        ReducedWord { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut buf = Vec::new();
        for l in letters {
            push_reduced(&mut buf, l);
        }
        ReducedWord { letters: buf }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &ReducedWord) -> ReducedWord {
        // Only the junction can cancel.
        let mut k = 0;
        let (a, b) = (&self.letters, &other.letters);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].cancels(b[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        ReducedWord { letters }
    }

    pub fn invert(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> ReducedWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = ReducedWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Evaluates the endomorphism of F2 sending `x` to `image_x` and `y` to
    /// `image_y` on this word.
    pub fn substitute(&self, image_x: &ReducedWord, image_y: &ReducedWord) -> ReducedWord {
        let inv_x = image_x.invert();
        let inv_y = image_y.invert();
        let mut buf = Vec::with_capacity(self.len() * (image_x.len().max(image_y.len())));
        for l in &self.letters {
            let img = match (l.gen, l.inverse) {
                (Gen::X, false) => image_x,
                (Gen::X, true) => &inv_x,
                (Gen::Y, false) => image_y,
                (Gen::Y, true) => &inv_y,
            };
            for &m in &img.letters {
                push_reduced(&mut buf, m);
            }
        }
        ReducedWord { letters: buf }
    }

    pub fn exponent_vector(&self) -> ExponentVector {
        let mut v = ExponentVector::default();
        for l in &self.letters {
            let s = if l.inverse { -1 } else { 1 };
            match l.gen {
                Gen::X => v.a += s,
                Gen::Y => v.b += s,
            }
        }
        v
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for ReducedWord {
    type Err = ParseError;

    /// Parses `x`, `y`, `X` (= x^-1), `Y` (= y^-1); `1` is the empty word.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "1" {
            return Ok(ReducedWord::identity());
        }
        let mut letters = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            let l = match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                'X' => Letter::X_INV,
                'Y' => Letter::Y_INV,
                c if c.is_whitespace() => continue,
                other => {
                    return Err(ParseError::new(format!("unexpected character {other:?} at {pos} in word")))
                }
            };
            letters.push(l);
        }
        Ok(ReducedWord::reduce(letters))
    }
}
