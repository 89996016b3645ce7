//! Special automorphisms of F2, written as words in the generators `u`, `v`,
//! `ax`, `ay` and carrying the images of `x` and `y`.
//!
//! Composition follows the usual function convention: `f.compose(&g)` is
//! `f ∘ g`, i.e. `g` is applied first. With the column convention of
//! [`AbelianizedMatrix`], [`FreeAutomorphism::rho`] is then a homomorphism.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::ParseError;
use crate::words::{ReducedWord, Gen, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutGen {
    /// x ↦ xy, y ↦ y
    U,
    /// x ↦ x, y ↦ xy
    V,
    /// conjugation by x
    Ax,
    /// conjugation by y
    Ay,
}

impl AutGen {
    pub const ALL: [AutGen; 4] = [AutGen::U, AutGen::V, AutGen::Ax, AutGen::Ay];

    fn name(self) -> &'static str {
        match self {
            AutGen::U => "u",
            AutGen::V => "v",
            AutGen::Ax => "ax",
            AutGen::Ay => "ay",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutLetter {
    pub gen: AutGen,
    pub inverse: bool,
}

impl AutLetter {
    pub fn new(gen: AutGen, inverse: bool) -> Self {
        AutLetter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        AutLetter { gen: self.gen, inverse: !self.inverse }
    }

    /// The acting generators in breadth-first order:
    /// u, u⁻¹, v, v⁻¹, ax, ax⁻¹, ay, ay⁻¹.
    pub const BFS_ORDER: [AutLetter; 8] = [
        AutLetter { gen: AutGen::U, inverse: false },
        AutLetter { gen: AutGen::U, inverse: true },
        AutLetter { gen: AutGen::V, inverse: false },
        AutLetter { gen: AutGen::V, inverse: true },
        AutLetter { gen: AutGen::Ax, inverse: false },
        AutLetter { gen: AutGen::Ax, inverse: true },
        AutLetter { gen: AutGen::Ay, inverse: false },
        AutLetter { gen: AutGen::Ay, inverse: true },
    ];

    /// Images of `x` and `y` under this basic automorphism.
    pub fn images(self) -> (ReducedWord, ReducedWord) {
        use Letter as L;
        let w = |ls: &[Letter]| ReducedWord::reduce(ls.iter().copied());
        match (self.gen, self.inverse) {
            (AutGen::U, false) => (w(&[L::X, L::Y]), w(&[L::Y])),
            (AutGen::U, true) => (w(&[L::X, L::Y_INV]), w(&[L::Y])),
            (AutGen::V, false) => (w(&[L::X]), w(&[L::X, L::Y])),
            (AutGen::V, true) => (w(&[L::X]), w(&[L::X_INV, L::Y])),
            (AutGen::Ax, false) => (w(&[L::X]), w(&[L::X, L::Y, L::X_INV])),
            (AutGen::Ax, true) => (w(&[L::X]), w(&[L::X_INV, L::Y, L::X])),
            (AutGen::Ay, false) => (w(&[L::Y, L::X, L::Y_INV]), w(&[L::Y])),
            (AutGen::Ay, true) => (w(&[L::Y_INV, L::X, L::Y]), w(&[L::Y])),
        }
    }
}

/// Integer 2×2 matrix of the induced map on `F2/F2' = Z^2`. Column `i` is the
/// exponent vector of the image of the `i`-th generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbelianizedMatrix(pub [[i64; 2]; 2]);

impl AbelianizedMatrix {
    pub const IDENTITY: AbelianizedMatrix = AbelianizedMatrix([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn mul(&self, other: &AbelianizedMatrix) -> AbelianizedMatrix {
        let (a, b) = (&self.0, &other.0);
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        AbelianizedMatrix(out)
    }
}

impl fmt::Display for AbelianizedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// An element of Aut⁺(F2). Equality, ordering and hashing look only at the
/// images of the generators, which determine the automorphism.
#[derive(Clone, Debug)]
pub struct FreeAutomorphism {
    word: Vec<AutLetter>,
    image_x: ReducedWord,
    image_y: ReducedWord,
}

fn push_aut_letter(word: &mut Vec<AutLetter>, l: AutLetter) {
    if word.last().is_some_and(|&m| m.gen == l.gen && m.inverse != l.inverse) {
        word.pop();
    } else {
        word.push(l);
    }
}

impl FreeAutomorphism {
    pub fn identity() -> Self {
        FreeAutomorphism { word: Vec::new(), image_x: ReducedWord::x(), image_y: ReducedWord::y() }
    }

    pub fn basic(gen: AutGen, inverse: bool) -> Self {
        let l = AutLetter::new(gen, inverse);
        let (image_x, image_y) = l.images();
        FreeAutomorphism { word: vec![l], image_x, image_y }
    }

    pub fn u() -> Self {
        Self::basic(AutGen::U, false)
    }

    pub fn v() -> Self {
        Self::basic(AutGen::V, false)
    }

    pub fn ax() -> Self {
        Self::basic(AutGen::Ax, false)
    }

    pub fn ay() -> Self {
        Self::basic(AutGen::Ay, false)
    }

    /// The composition of the letters, leftmost applied last.
    pub fn from_letters<I: IntoIterator<Item = AutLetter>>(letters: I) -> Self {
        let mut acc = FreeAutomorphism::identity();
        for l in letters {
            acc = acc.then_letter(l);
        }
        acc
    }

    /// `self ∘ l` for a single basic letter; cheap because the letter's
    /// images are short.
    pub fn then_letter(&self, l: AutLetter) -> Self {
        let (lx, ly) = l.images();
        let mut word = self.word.clone();
        push_aut_letter(&mut word, l);
        FreeAutomorphism {
            word,
            image_x: lx.substitute(&self.image_x, &self.image_y),
            image_y: ly.substitute(&self.image_x, &self.image_y),
        }
    }

    /// `l ∘ self` for a single basic letter.
    pub fn after_letter(&self, l: AutLetter) -> Self {
        let (lx, ly) = l.images();
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(l);
        for &m in &self.word {
            push_aut_letter(&mut word, m);
        }
        FreeAutomorphism {
            word,
            image_x: self.image_x.substitute(&lx, &ly),
            image_y: self.image_y.substitute(&lx, &ly),
        }
    }

    /// The inner automorphism `z ↦ w z w⁻¹`.
    pub fn inner(w: &ReducedWord) -> Self {
        FreeAutomorphism::from_letters(w.letters().iter().map(|l| {
            let gen = match l.gen {
                Gen::X => AutGen::Ax,
                Gen::Y => AutGen::Ay,
            };
            AutLetter::new(gen, l.inverse)
        }))
    }

    pub fn word(&self) -> &[AutLetter] {
        &self.word
    }

    pub fn image_x(&self) -> &ReducedWord {
        &self.image_x
    }

    pub fn image_y(&self) -> &ReducedWord {
        &self.image_y
    }

    pub fn is_identity(&self) -> bool {
        self.image_x == ReducedWord::x() && self.image_y == ReducedWord::y()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        let mut word = self.word.clone();
        for &l in &other.word {
            push_aut_letter(&mut word, l);
        }
        FreeAutomorphism {
            word,
            image_x: other.image_x.substitute(&self.image_x, &self.image_y),
            image_y: other.image_y.substitute(&self.image_x, &self.image_y),
        }
    }

    pub fn invert(&self) -> FreeAutomorphism {
        FreeAutomorphism::from_letters(self.word.iter().rev().map(|l| l.inv()))
    }

    pub fn pow(&self, k: i64) -> FreeAutomorphism {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = FreeAutomorphism::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn apply(&self, w: &ReducedWord) -> ReducedWord {
        w.substitute(&self.image_x, &self.image_y)
    }

    /// Whether the generator images are exactly `(ix, iy)`.
    pub fn has_images(&self, ix: &ReducedWord, iy: &ReducedWord) -> bool {
        &self.image_x == ix && &self.image_y == iy
    }

    pub fn rho(&self) -> AbelianizedMatrix {
        let cx = self.image_x.exponent_vector();
        let cy = self.image_y.exponent_vector();
        AbelianizedMatrix([[cx.a, cy.a], [cx.b, cy.b]])
    }
}

impl PartialEq for FreeAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.image_x == other.image_x && self.image_y == other.image_y
    }
}

impl Eq for FreeAutomorphism {}

impl Hash for FreeAutomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.image_x.hash(state);
        self.image_y.hash(state);
    }
}

impl fmt::Display for FreeAutomorphism {
    /// Run-length form over `u v ax ay`, e.g. `ax^-1 v^2`; the identity prints
    /// as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.word.len() {
            let l = self.word[i];
            let mut j = i;
            while j < self.word.len() && self.word[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * if l.inverse { -1 } else { 1 };
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if k == 1 {
                f.write_str(l.gen.name())?;
            } else {
                write!(f, "{}^{}", l.gen.name(), k)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// The defining relations of Aut⁺(F2) on `u, v, ax, ay`, as `(lhs, rhs)`.
pub const RELATIONS: [(&str, &str); 6] = [
    ("u ax u^-1", "ax ay"),
    ("u ay u^-1", "ay"),
    ("v ax v^-1", "ax"),
    ("v ay v^-1", "ax ay"),
    ("v u^-1 v u v^-1 u", "1"),
    ("(v u^-1 v)^4", "ax ay^-1 ax^-1 ay"),
];

/// Aut⁺(F2) as a finitely presented group on `u, v, ax, ay` (generator
/// indices 0..4), with relators `lhs · rhs^-1` from [`RELATIONS`].
pub fn presentation() -> crate::groups::Presentation {
    let gens = ["u", "v", "ax", "ay"].map(String::from).to_vec();
    let rels = RELATIONS
        .iter()
        .map(|(l, r)| {
            let mut w = fp_word_of(&l.parse::<FreeAutomorphism>().expect("relation parses"));
            let rhs = fp_word_of(&r.parse::<FreeAutomorphism>().expect("relation parses"));
            w.extend(crate::groups::invert_word(&rhs));
            w
        })
        .collect();
    crate::groups::Presentation::new(gens, rels).expect("Aut+(F2) presentation")
}

/// The stored word of `f` over the generators of [`presentation`].
pub fn fp_word_of(f: &FreeAutomorphism) -> crate::groups::FpWord {
    f.word()
        .iter()
        .map(|l| {
            let g = match l.gen {
                AutGen::U => 0,
                AutGen::V => 1,
                AutGen::Ax => 2,
                AutGen::Ay => 3,
            };
            crate::groups::column(g, l.inverse)
        })
        .collect()
}

/// Automorphisms named in the constructions of this crate.
pub mod named {
    use super::*;

    fn parse(s: &str) -> FreeAutomorphism {
        s.parse().expect("built-in word parses")
    }

    /// `p = ax^-1 u^-1 v u^-1`
    pub fn p() -> FreeAutomorphism {
        parse("ax^-1 u^-1 v u^-1")
    }

    /// `q = ax^-2 u^-1 v u^-2`
    pub fn q() -> FreeAutomorphism {
        parse("ax^-2 u^-1 v u^-2")
    }

    /// `γ1 = u^2`
    pub fn gamma1() -> FreeAutomorphism {
        FreeAutomorphism::u().pow(2)
    }

    /// `γ2 = v^n`
    pub fn gamma2(n: i64) -> FreeAutomorphism {
        FreeAutomorphism::v().pow(n)
    }

    /// `γ3 = ax^-1 v^2`
    pub fn gamma3() -> FreeAutomorphism {
        parse("ax^-1 v^2")
    }

    /// `γ4 = ax^-1 (u^-1 v)^3`
    pub fn gamma4() -> FreeAutomorphism {
        parse("ax^-1 (u^-1 v)^3")
    }

    /// All named automorphisms, with the dihedral parameter `n` fixed.
    pub fn table(n: i64) -> Vec<(&'static str, FreeAutomorphism)> {
        vec![
            ("p", p()),
            ("q", q()),
            ("gamma1", gamma1()),
            ("gamma2", gamma2(n)),
            ("gamma3", gamma3()),
            ("gamma4", gamma4()),
        ]
    }
}

// Parsing: juxtaposed factors `atom` or `atom^k`, atoms being `u v ax ay p q`,
// a parenthesised group, or `1`.
struct AutParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> AutParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(format!("{msg} at byte {} of automorphism word", self.pos))
    }

    fn product(&mut self, nested: bool) -> Result<FreeAutomorphism, ParseError> {
        let mut acc = FreeAutomorphism::identity();
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                None if nested => return Err(self.err("unclosed '('")),
                None => return Ok(acc),
                Some(b')') if nested => {
                    self.pos += 1;
                    return Ok(acc);
                }
                Some(b')') => return Err(self.err("unbalanced ')'")),
                _ => {}
            }
            let atom = self.atom()?;
            let k = self.exponent()?;
            acc = acc.compose(&atom.pow(k));
        }
    }

    fn atom(&mut self) -> Result<FreeAutomorphism, ParseError> {
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'u' => FreeAutomorphism::u(),
            b'v' => FreeAutomorphism::v(),
            b'p' => named::p(),
            b'q' => named::q(),
            b'1' => FreeAutomorphism::identity(),
            b'a' => {
                let next = self.src.get(self.pos).copied();
                self.pos += 1;
                match next {
                    Some(b'x') => FreeAutomorphism::ax(),
                    Some(b'y') => FreeAutomorphism::ay(),
                    _ => {
                        self.pos -= 2;
                        return Err(self.err("expected 'ax' or 'ay'"));
                    }
                }
            }
            b'(' => self.product(true)?,
            _ => {
                self.pos -= 1;
                return Err(self.err(&format!("unknown token {:?}", c as char)));
            }
        })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse::<i64>().map_err(|_| self.err("malformed exponent"))
    }
}

impl FromStr for FreeAutomorphism {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = AutParser { src: s.as_bytes(), pos: 0 };
        p.product(false)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    fn a(s: &str) -> FreeAutomorphism {
        s.parse().unwrap()
    }

    #[test]
    fn basic_images() {
        assert!(FreeAutomorphism::u().has_images(&w("xy"), &w("y")));
        assert!(FreeAutomorphism::v().has_images(&w("x"), &w("xy")));
        assert!(FreeAutomorphism::ax().has_images(&w("x"), &w("xyX")));
    }

    #[test]
    fn compose_examples() {
        let u = FreeAutomorphism::u();
        let v = FreeAutomorphism::v();
        assert!(u.compose(&u).has_images(&w("xyy"), &w("y")));
        assert_eq!(u.compose(&FreeAutomorphism::identity()), u);
        let g = FreeAutomorphism::basic(AutGen::Ax, true).compose(&v.compose(&v));
        assert!(g.has_images(&w("x"), &w("xyx")));
    }

    #[test]
    fn invert_examples() {
        let u = FreeAutomorphism::u();
        let v = FreeAutomorphism::v();
        assert!(u.invert().has_images(&w("xY"), &w("y")));
        assert!(FreeAutomorphism::identity().invert().is_identity());
        assert_eq!(u.compose(&v).invert(), v.invert().compose(&u.invert()));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(gamma4().apply(&w("x")), w("YXy"));
        assert_eq!(FreeAutomorphism::identity().apply(&w("xyXY")), w("xyXY"));
        for n in 1..6 {
            assert_eq!(gamma2(n).apply(&w("y")), w("x").pow(n).multiply(&w("y")));
        }
    }

    #[test]
    fn equal_examples() {
        assert_eq!(a("u ax u^-1"), a("ax ay"));
        assert_ne!(FreeAutomorphism::u(), FreeAutomorphism::v());
        assert_eq!(a("(v u^-1 v)^4"), a("ax ay^-1 ax^-1 ay"));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(FreeAutomorphism::u().rho(), AbelianizedMatrix([[1, 0], [1, 1]]));
        assert_eq!(FreeAutomorphism::v().rho(), AbelianizedMatrix([[1, 1], [0, 1]]));
        assert_eq!(FreeAutomorphism::ax().rho(), AbelianizedMatrix::IDENTITY);
        assert_eq!(gamma4().rho(), AbelianizedMatrix([[-1, 0], [0, -1]]));
    }

    #[test]
    fn named_examples() {
        assert_eq!(p().word(), a("ax^-1 u^-1 v u^-1").word());
        assert!(gamma3().has_images(&w("x"), &w("xyx")));
        assert!(gamma1().has_images(&w("xyy"), &w("y")));
        assert!(gamma4().has_images(&w("YXy"), &w("Y")));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(a("u^2"), gamma1());
        assert_eq!(a("p q^-1"), p().compose(&q().invert()));
        assert!("zz".parse::<FreeAutomorphism>().is_err());
        assert!("u^".parse::<FreeAutomorphism>().is_err());
        assert!("(u v".parse::<FreeAutomorphism>().is_err());
        assert!("u)".parse::<FreeAutomorphism>().is_err());
        assert!("a".parse::<FreeAutomorphism>().is_err());
        assert_eq!(a("1"), FreeAutomorphism::identity());
        assert_eq!(a("uv"), a("u v"));
    }

    #[test]
    fn display_roundtrip() {
        let f = a("ax^-2 u^-1 v u^-2 ay");
        assert_eq!(f.to_string(), "ax^-2 u^-1 v u^-2 ay");
        assert_eq!(a(&f.to_string()).word(), f.word());
        assert_eq!(FreeAutomorphism::identity().to_string(), "1");
    }

    #[test]
    fn presentation_relations_hold() {
        for (l, r) in RELATIONS {
            assert_eq!(a(l), a(r), "{l} = {r}");
        }
        assert_eq!(presentation().relators().len(), 6);
    }

    fn aut_letter() -> impl Strategy<Value = AutLetter> {
        (0usize..8).prop_map(|i| AutLetter::BFS_ORDER[i])
    }

    fn aut(max: usize) -> impl Strategy<Value = FreeAutomorphism> {
        prop::collection::vec(aut_letter(), 0..=max).prop_map(FreeAutomorphism::from_letters)
    }

    fn word(max: usize) -> impl Strategy<Value = ReducedWord> {
        prop::collection::vec(crate::words::tests::letter(), 0..=max).prop_map(ReducedWord::reduce)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn rho_is_homomorphism(f in aut(10), g in aut(10)) {
            prop_assert_eq!(f.compose(&g).rho(), f.rho().mul(&g.rho()));
            prop_assert_eq!(f.rho().det(), 1);
        }

        #[test]
        fn apply_is_homomorphism(f in aut(8), a in word(16), b in word(16)) {
            prop_assert_eq!(f.apply(&a.multiply(&b)), f.apply(&a).multiply(&f.apply(&b)));
        }

        #[test]
        fn compose_matches_apply(f in aut(6), g in aut(6), a in word(12)) {
            prop_assert_eq!(f.compose(&g).apply(&a), f.apply(&g.apply(&a)));
        }

        #[test]
        fn invert_is_two_sided(f in aut(12)) {
            prop_assert!(f.compose(&f.invert()).is_identity());
            prop_assert!(f.invert().compose(&f).is_identity());
        }

        #[test]
        fn equal_implies_same_rho(f in aut(8)) {
            let g = f.compose(&a("(v u^-1 v)^4 ay^-1 ax ay ax^-1"));
            prop_assert_eq!(&f, &g);
            prop_assert_eq!(f.rho(), g.rho());
        }
    }
}
