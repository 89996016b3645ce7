//! Finite-index subgroups of SL2(Z) given by generating matrices, via coset
//! enumeration over `⟨e1, e2 | e2 e1^-1 e2 e1 e2^-1 e1, (e2 e1^-1 e2)^4⟩`.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groups::{column, todd_coxeter, CosetTable, FpWord, Presentation};
use crate::sl2::{index_principal, matrix_to_word, Mat2, Sl2Gen, Sl2Word};

/// Cap on `|SL2(Z/a)| · index` for the congruence test.
pub const DEFAULT_CONGRUENCE_CAP: usize = 1 << 25;

#[derive(Clone, Debug)]
pub struct Sl2Subgroup {
    generators: Vec<Mat2>,
    table: CosetTable,
    /// `e1` and `e2` as permutations of the cosets.
    p1: Vec<usize>,
    p2: Vec<usize>,
    representatives: Vec<Sl2Word>,
    level: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LevelReport {
    pub level: u64,
    pub is_congruence: bool,
    /// An element of `Γ(level)` outside the subgroup.
    pub witness: Option<Mat2>,
}

fn fp_to_sl2(w: &FpWord) -> Sl2Word {
    Sl2Word::from_syllables(w.iter().map(|&c| {
        let g = if c / 2 == 0 { Sl2Gen::E1 } else { Sl2Gen::E2 };
        (g, if c % 2 == 1 { -1 } else { 1 })
    }))
}

fn cycle_lcm(p: &[usize]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut l = 1u64;
    for s in 0..p.len() {
        let mut len = 0u64;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = p[c];
            len += 1;
        }
        if len > 0 {
            l = l.lcm(&len);
        }
    }
    l
}

impl Sl2Subgroup {
    pub fn build(generators: Vec<Mat2>, max_cosets: usize) -> Result<Self> {
        let pres = Presentation::sl2z();
        let words: Vec<FpWord> = generators.iter().map(|m| matrix_to_word(m).to_fp_word()).collect();
        let table = todd_coxeter(&pres, &words, max_cosets)?;
        let p1 = table.permutation(column(0, false));
        let p2 = table.permutation(column(1, false));
        let representatives = table.representatives().iter().map(fp_to_sl2).collect();
        let level = cycle_lcm(&p2);
        Ok(Sl2Subgroup { generators, table, p1, p2, representatives, level })
    }

    pub fn from_words(words: &[Sl2Word], max_cosets: usize) -> Result<Self> {
        Sl2Subgroup::build(words.iter().map(Sl2Word::eval).collect(), max_cosets)
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn index(&self) -> usize {
        self.table.num_cosets()
    }

    pub fn coset_table(&self) -> &CosetTable {
        &self.table
    }

    pub fn p1(&self) -> &[usize] {
        &self.p1
    }

    pub fn p2(&self) -> &[usize] {
        &self.p2
    }

    /// Coset representatives: `representatives()[c]` carries coset 0 to `c`.
    pub fn representatives(&self) -> &[Sl2Word] {
        &self.representatives
    }

    /// Image of coset `c` under a word. Exponents are reduced mod the level,
    /// which is the common order of `P1` and `P2`.
    pub fn trace(&self, mut c: usize, w: &Sl2Word) -> usize {
        let l = self.level as i64;
        for &(g, k) in w.syllables() {
            let p = match g {
                Sl2Gen::E1 => &self.p1,
                Sl2Gen::E2 => &self.p2,
            };
            for _ in 0..k.rem_euclid(l) {
                c = p[c];
            }
        }
        c
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.trace(0, &matrix_to_word(m)) == 0
    }

    /// Wohlfahrt level: the lcm of the cycle lengths of `e2` on the cosets.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// The smallest `a ≤ bound` with `s e2^a s^-1` in the subgroup for every
    /// coset representative `s`, checked by matrix membership.
    pub fn level_by_conjugation(&self, bound: u64) -> Option<u64> {
        let conj: Vec<(Mat2, Mat2)> =
            self.representatives.iter().map(|s| (s.eval(), s.eval().inverse())).collect();
        (1..=bound).find(|&a| {
            let e = Mat2::e2_pow(a as i64);
            conj.iter().all(|(s, si)| self.contains(&s.mul(&e).mul(si)))
        })
    }

    /// Decides whether the subgroup contains `Γ(a)`, `a` the level, by
    /// checking that the coset action factors through `SL2(Z/a)`.
    pub fn is_congruence(&self) -> Result<LevelReport> {
        self.is_congruence_with_cap(DEFAULT_CONGRUENCE_CAP)
    }

    pub fn is_congruence_with_cap(&self, cap: usize) -> Result<LevelReport> {
        let a = self.level;
        let n = self.index();
        let order = index_principal(a) as usize;
        if order.saturating_mul(n) > cap {
            return Err(Error::OrderCap { cap });
        }
        let step = |r: [u64; 4], g: Sl2Gen| -> [u64; 4] {
            let [p, q, s, t] = r;
            match g {
                Sl2Gen::E1 => [(p + q) % a, q, (s + t) % a, t],
                Sl2Gen::E2 => [p, (p + q) % a, s, (s + t) % a],
            }
        };
        let start = Mat2::identity().residue(a);
        let mut index: HashMap<[u64; 4], usize> = HashMap::from([(start, 0)]);
        let mut nodes: Vec<([u64; 4], Sl2Word, Vec<u32>)> = vec![(start, Sl2Word::identity(), (0..n as u32).collect())];
        let mut i = 0;
        while i < nodes.len() {
            for g in [Sl2Gen::E1, Sl2Gen::E2] {
                let (r, w, perm) = &nodes[i];
                let p = match g {
                    Sl2Gen::E1 => &self.p1,
                    Sl2Gen::E2 => &self.p2,
                };
                let r2 = step(*r, g);
                let perm2: Vec<u32> = perm.iter().map(|&c| p[c as usize] as u32).collect();
                let mut w2 = w.clone();
                w2.push(g, 1);
                match index.get(&r2) {
                    Some(&j) => {
                        if nodes[j].2 != perm2 {
                            let m = nodes[j].1.eval().mul(&w2.eval().inverse());
                            return Ok(LevelReport { level: a, is_congruence: false, witness: self.witness_from(&m) });
                        }
                    }
                    None => {
                        index.insert(r2, nodes.len());
                        nodes.push((r2, w2, perm2));
                    }
                }
            }
            i += 1;
        }
        debug_assert_eq!(nodes.len(), order);
        Ok(LevelReport { level: a, is_congruence: true, witness: None })
    }

    /// `m` acts nontrivially on the cosets; some conjugate `t m t^-1` by a
    /// coset representative lies outside the subgroup.
    fn witness_from(&self, m: &Mat2) -> Option<Mat2> {
        self.representatives.iter().find_map(|t| {
            let t = t.eval();
            let c = t.mul(m).mul(&t.inverse());
            (!self.contains(&c)).then_some(c)
        })
    }

    /// Size of the orbit of coset 0 under `⟨P1, P2⟩`.
    pub fn orbit_size(&self) -> usize {
        let mut seen = vec![false; self.index()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for d in [self.p1[c], self.p2[c]] {
                if !seen[d] {
                    seen[d] = true;
                    count += 1;
                    stack.push(d);
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_MAX_COSETS;
    use crate::sl2::in_gamma;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_i64(a, b, c, d).unwrap()
    }

    fn build(gens: Vec<Mat2>) -> Sl2Subgroup {
        Sl2Subgroup::build(gens, DEFAULT_MAX_COSETS).unwrap()
    }

    fn gamma1_2() -> Sl2Subgroup {
        build(vec![m(1, 0, 2, 1), m(1, 1, 0, 1)])
    }

    fn gamma_2() -> Sl2Subgroup {
        build(vec![Mat2::minus_identity(), m(1, 0, 2, 1), m(1, 2, 0, 1)])
    }

    #[test]
    fn index_examples() {
        assert_eq!(gamma1_2().index(), 3);
        assert_eq!(gamma_2().index(), 6);
        let full = build(vec![m(1, 0, 1, 1), m(1, 1, 0, 1)]);
        assert_eq!(full.index(), 1);
        assert_eq!(full.level(), 1);
        assert!(full.is_congruence().unwrap().is_congruence);
    }

    #[test]
    fn infinite_index_hits_limit() {
        let r = Sl2Subgroup::build(vec![m(1, 1, 0, 1)], 2000);
        assert_eq!(r.unwrap_err(), Error::EnumerationLimit { limit: 2000 });
    }

    #[test]
    fn membership() {
        assert!(gamma1_2().contains(&m(1, 0, 2, 1)));
        let g2 = gamma_2();
        assert!(!g2.contains(&m(1, 1, 0, 1)));
        // agrees with the congruence conditions on a spread of matrices
        let mut checked = 0;
        for w in ["e1^3 e2^-2", "e1^2 e2^2 e1^-2", "(e1 e2)^3", "e2^4 e1^-6 e2", "e1 e2^2 e1 e2^-1", "(e2 e1^-1 e2)^2 e1^2"] {
            let x: Sl2Word = w.parse().unwrap();
            let x = x.eval();
            assert_eq!(g2.contains(&x), in_gamma(&x, 2, 2) || in_gamma(&Mat2::minus_identity().mul(&x), 2, 2), "{w}");
            checked += 1;
        }
        assert_eq!(checked, 6);
    }

    #[test]
    fn level_examples() {
        assert_eq!(gamma1_2().level(), 2);
        assert_eq!(gamma1_2().level_by_conjugation(100), Some(2));
        assert_eq!(gamma_2().level(), 2);
    }

    #[test]
    fn congruence_examples() {
        let r = gamma_2().is_congruence().unwrap();
        assert_eq!(r, LevelReport { level: 2, is_congruence: true, witness: None });
        assert!(gamma1_2().is_congruence().unwrap().is_congruence);
    }

    #[test]
    fn noncongruence_witness() {
        // Index 7 does not divide |SL2(Z/12)| = 1152, so this level-12
        // subgroup cannot contain Γ(12).
        let ws: Vec<Sl2Word> = ["e2^3", "e1 e2 e1^2", "e2^4 e1"].iter().map(|w| w.parse().unwrap()).collect();
        let s = Sl2Subgroup::from_words(&ws, 1000).unwrap();
        assert_eq!(s.index(), 7);
        assert_eq!(s.level(), 12);
        assert_eq!(index_principal(12), 1152);
        assert_ne!(1152 % 7, 0);
        let r = s.is_congruence().unwrap();
        assert!(!r.is_congruence);
        let w = r.witness.expect("witness");
        assert!(w.is_identity_mod(12));
        assert!(!s.contains(&w));
        assert_eq!(s.level_by_conjugation(100), Some(12));
    }

    #[test]
    fn orbit_is_transitive() {
        for s in [gamma1_2(), gamma_2()] {
            assert_eq!(s.orbit_size(), s.index());
        }
    }
}
