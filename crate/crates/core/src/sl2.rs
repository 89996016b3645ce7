//! Exact arithmetic in SL2(Z), words in the generators
//! `e1 = [[1,0],[1,1]]` and `e2 = [[1,1],[0,1]]`, and the classical
//! congruence subgroups `Γ(m, n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::autf2::{AbelianizedMatrix, FreeAutomorphism};
use crate::error::{Error, ParseError, Result};
use crate::groups::{column, FpWord};

/// A matrix `[[a,b],[c,d]]` of determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::Invalid(format!("[[{a},{b}],[{c},{d}]] does not have determinant 1")));
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::raw(1.into(), 0.into(), 0.into(), 1.into())
    }

    pub fn minus_identity() -> Self {
        Mat2::raw((-1).into(), 0.into(), 0.into(), (-1).into())
    }

    /// `e1^k = [[1,0],[k,1]]`
    pub fn e1_pow(k: i64) -> Self {
        Mat2::raw(1.into(), 0.into(), k.into(), 1.into())
    }

    /// `e2^k = [[1,k],[0,1]]`
    pub fn e2_pow(k: i64) -> Self {
        Mat2::raw(1.into(), k.into(), 0.into(), 1.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::raw(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> Mat2 {
        Mat2::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, k: i64) -> Mat2 {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Entries reduced into `0..m`, row-major.
    pub fn residue(&self, m: u64) -> [u64; 4] {
        let m = BigInt::from(m);
        self.entries().map(|x| x.mod_floor(&m).to_u64().expect("residue fits"))
    }

    /// Entrywise congruent to the identity mod `m`.
    pub fn is_identity_mod(&self, m: u64) -> bool {
        in_gamma(self, m, m)
    }
}

impl From<&AbelianizedMatrix> for Mat2 {
    fn from(m: &AbelianizedMatrix) -> Mat2 {
        let [[a, b], [c, d]] = m.0;
        Mat2::from_i64(a, b, c, d).expect("abelianized special automorphism has determinant 1")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// `[[a,b],[c,d]]`, whitespace allowed.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseError::new(format!("expected [[a,b],[c,d]], got {s:?}"));
        let inner = compact
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (r1, r2) = inner.split_once("],[").ok_or_else(bad)?;
        let nums: Vec<BigInt> = r1
            .split(',')
            .chain(r2.split(','))
            .map(|t| t.parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let [a, b, c, d]: [BigInt; 4] = nums.try_into().map_err(|_| bad())?;
        Mat2::new(a, b, c, d)
    }
}

impl serde::Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Gen {
    E1,
    E2,
}

impl Sl2Gen {
    pub fn matrix_pow(self, k: i64) -> Mat2 {
        match self {
            Sl2Gen::E1 => Mat2::e1_pow(k),
            Sl2Gen::E2 => Mat2::e2_pow(k),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Sl2Gen::E1 => "e1",
            Sl2Gen::E2 => "e2",
        }
    }
}

/// A word in `e1`, `e2` in run-length form: adjacent syllables have distinct
/// generators and nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sl2Word {
    syllables: Vec<(Sl2Gen, i64)>,
}

impl Sl2Word {
    pub fn identity() -> Self {
        Sl2Word::default()
    }

    pub fn from_syllables<I: IntoIterator<Item = (Sl2Gen, i64)>>(it: I) -> Self {
        let mut w = Sl2Word::identity();
        for (g, k) in it {
            w.push(g, k);
        }
        w
    }

    pub fn push(&mut self, g: Sl2Gen, k: i64) {
        if k == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, e)) if *h == g => {
                *e += k;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, k)),
        }
    }

    pub fn syllables(&self) -> &[(Sl2Gen, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of generator letters, i.e. the sum of `|exponent|`.
    pub fn letter_count(&self) -> u64 {
        self.syllables.iter().map(|(_, k)| k.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Sl2Word) -> Sl2Word {
        let mut w = self.clone();
        for &(g, k) in &other.syllables {
            w.push(g, k);
        }
        w
    }

    pub fn inverse(&self) -> Sl2Word {
        Sl2Word::from_syllables(self.syllables.iter().rev().map(|&(g, k)| (g, -k)))
    }

    pub fn pow(&self, k: i64) -> Sl2Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Sl2Word::identity(), |acc, _| acc.mul(&base))
    }

    pub fn eval(&self) -> Mat2 {
        self.syllables
            .iter()
            .fold(Mat2::identity(), |acc, &(g, k)| acc.mul(&g.matrix_pow(k)))
    }

    /// The word over the presentation generators `e1` (index 0), `e2`
    /// (index 1), one column per letter.
    pub fn to_fp_word(&self) -> FpWord {
        let mut out = Vec::with_capacity(self.letter_count() as usize);
        for &(g, k) in &self.syllables {
            let c = column(g as usize, k < 0);
            out.extend(std::iter::repeat_n(c, k.unsigned_abs() as usize));
        }
        out
    }
}

impl fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, k)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if k == 1 {
                write!(f, "{}", g.name())?;
            } else {
                write!(f, "{}^{k}", g.name())?;
            }
        }
        Ok(())
    }
}

/// `eval_word`
pub fn eval_word(w: &Sl2Word) -> Mat2 {
    w.eval()
}

struct WordParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(format!("{msg} at offset {} in SL2 word", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        if self.s.get(self.pos) != Some(&b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("malformed exponent"))
    }

    fn sequence(&mut self) -> Result<Sl2Word, ParseError> {
        let mut w = Sl2Word::identity();
        loop {
            self.skip_ws();
            match self.s.get(self.pos) {
                None | Some(b')') => return Ok(w),
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sequence()?;
                    if self.s.get(self.pos) != Some(&b')') {
                        return Err(self.err("unclosed parenthesis"));
                    }
                    self.pos += 1;
                    let k = self.exponent()?;
                    w = w.mul(&inner.pow(k));
                }
                Some(b'1') => {
                    self.pos += 1;
                }
                Some(b'e') => {
                    let g = match self.s.get(self.pos + 1) {
                        Some(b'1') => Sl2Gen::E1,
                        Some(b'2') => Sl2Gen::E2,
                        _ => return Err(self.err("expected e1 or e2")),
                    };
                    self.pos += 2;
                    let k = self.exponent()?;
                    w.push(g, k);
                }
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
    }
}

impl FromStr for Sl2Word {
    type Err = ParseError;

    /// Tokens `e1`, `e2`, optionally `^k`; parenthesised groups may carry an
    /// exponent, e.g. `(e2 e1 e2)^4`. `1` is the empty word.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = WordParser { s: s.as_bytes(), pos: 0 };
        let w = p.sequence()?;
        if p.pos != p.s.len() {
            return Err(p.err("unbalanced ')'"));
        }
        Ok(w)
    }
}

/// `a ≡ 1, b ≡ 0 (mod m)` and `c ≡ 0, d ≡ 1 (mod n)`.
pub fn in_gamma(mat: &Mat2, m: u64, n: u64) -> bool {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let one = BigInt::one();
    (&mat.a - &one).is_multiple_of(&m)
        && mat.b.is_multiple_of(&m)
        && mat.c.is_multiple_of(&n)
        && (&mat.d - &one).is_multiple_of(&n)
}

/// Distinct prime divisors by trial division.
pub fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            ps.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        ps.push(m);
    }
    ps
}

/// `m^2 ∏_{p | m} (1 - 1/p^2)`, the order of the image of SL2(Z) in
/// `(Z/m)^2` under `A ↦ A e_1`.
fn projective_count(m: u64) -> u64 {
    prime_divisors(m).iter().fold(m * m, |acc, &p| acc / (p * p) * (p * p - 1))
}

/// `[SL2(Z) : Γ(a, b)]`, computed as `n m^2 ∏_{p|m}(1 - 1/p^2)` with
/// `m = lcm(a, b)` and `n = gcd(a, b)`.
pub fn index_gamma(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "moduli must be positive");
    let (m, n) = (a.lcm(&b), a.gcd(&b));
    n * projective_count(m)
}

/// `[SL2(Z) : Γ(m)] = m^3 ∏_{p|m}(1 - 1/p^2)`.
pub fn index_principal(m: u64) -> u64 {
    m * projective_count(m)
}

/// `[SL2(Z) : Γ¹(m)] = m^2 ∏_{p|m}(1 - 1/p^2)`.
pub fn index_gamma1(m: u64) -> u64 {
    projective_count(m)
}

fn exponent(k: &BigInt) -> i64 {
    k.to_i64().expect("generator exponent exceeds 64 bits")
}

/// A word in `e1`, `e2` evaluating to `mat`.
///
/// Right multiplication by `e1^k` adds `k` times the second column to the
/// first, and `e2^k` adds `k` times the first column to the second. A
/// Euclidean descent on the first row brings `mat` to `±e1^c`; `-I` is
/// written `(e2 e1^-1 e2)^2`.
pub fn matrix_to_word(mat: &Mat2) -> Sl2Word {
    let mut m = mat.clone();
    // m = mat · ops[0] · ops[1] · …
    let mut ops: Vec<(Sl2Gen, i64)> = Vec::new();
    let mut apply = |m: &mut Mat2, g: Sl2Gen, k: i64| {
        if k == 0 {
            return;
        }
        *m = m.mul(&g.matrix_pow(k));
        ops.push((g, k));
    };
    while !m.b.is_zero() {
        if m.a.is_zero() {
            apply(&mut m, Sl2Gen::E1, 1);
            continue;
        }
        let k = -(&m.b / &m.a);
        apply(&mut m, Sl2Gen::E2, exponent(&k));
        if m.b.is_zero() {
            break;
        }
        let k = -(&m.a / &m.b);
        apply(&mut m, Sl2Gen::E1, exponent(&k));
    }
    // m = [[±1, 0], [c, ±1]]
    let mut w = Sl2Word::identity();
    if m.a.is_negative() {
        w = minus_identity_word();
        w.push(Sl2Gen::E1, exponent(&-&m.c));
    } else {
        w.push(Sl2Gen::E1, exponent(&m.c));
    }
    for &(g, k) in ops.iter().rev() {
        w.push(g, -k);
    }
    w
}

/// `(e2 e1^-1 e2)^2 = -I`
pub fn minus_identity_word() -> Sl2Word {
    let s = Sl2Word::from_syllables([(Sl2Gen::E2, 1), (Sl2Gen::E1, -1), (Sl2Gen::E2, 1)]);
    s.pow(2)
}

/// `ρ`-images of automorphisms, deduplicated in first-seen order.
pub fn rho_subgroup_generators(stab: &[FreeAutomorphism]) -> Vec<Mat2> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for f in stab {
        let m = Mat2::from(&f.rho());
        if seen.insert(m.clone()) {
            out.push(m);
        }
    }
    out
}
