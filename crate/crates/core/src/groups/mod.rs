//! Finite groups as indexed multiplication tables.
//!
//! Every backend (abelian, dihedral, permutation closure, coset enumeration)
//! produces a [`GroupTable`]; downstream code only ever sees element indices.

mod presentation;
mod todd_coxeter;

use std::collections::HashMap;
use std::fmt::Write as _;

pub use presentation::{
    column, format_fp_word, invert_word, inverse_column, parse_fp_word, Column, FpWord, Presentation,
};
pub use todd_coxeter::{todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};

use crate::error::{Error, ParseError, Result};

pub const DEFAULT_MAX_ORDER: usize = 1 << 14;

/// A finite group of order `N` with elements `0..N`, identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    /// Names of distinguished generators (presentation generators, `r`/`s`,
    /// permutation generators) and the elements they denote.
    generators: Vec<(String, usize)>,
}

impl GroupTable {
    /// Builds a table from a row-major product table. Element 0 must be the
    /// identity; every row and column must be a permutation.
    pub fn from_mul_table(order: usize, mul: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        if order == 0 || mul.len() != order * order || labels.len() != order {
            return Err(Error::Invalid("malformed multiplication table".into()));
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::Invalid("table has an element without inverse".into()));
        }
        let g = GroupTable { order, mul, inv, labels, generators: Vec::new() };
        if !g.is_latin_square() {
            return Err(Error::Invalid("multiplication table is not a Latin square with identity 0".into()));
        }
        Ok(g)
    }

    fn with_generators(mut self, generators: Vec<(String, usize)>) -> Self {
        self.generators = generators;
        self
    }

    pub fn trivial() -> Self {
        GroupTable::abelian(1, 1)
    }

    /// `Z/m × Z/n`; element `(i, j)` has index `i * n + j`.
    pub fn abelian(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "abelian group factors must be positive");
        let order = m * n;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let (ai, aj) = (a / n, a % n);
            for b in 0..order {
                let (bi, bj) = (b / n, b % n);
                mul.push((((ai + bi) % m) * n + (aj + bj) % n) as u32);
            }
        }
        let labels = (0..order).map(|a| format!("({},{})", a / n, a % n)).collect();
        let gens = vec![("a".to_string(), (1 % m) * n), ("b".to_string(), 1 % n)];
        GroupTable::from_mul_table(order, mul, labels).expect("abelian table").with_generators(gens)
    }

    /// `D_n` of order `2n`: index `k` is `r^k`, index `n + k` is `s r^k`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!("dihedral group needs n >= 3, got {n}")));
        }
        let order = 2 * n;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let (sa, ka) = (a >= n, a % n);
            for b in 0..order {
                let (sb, kb) = (b >= n, b % n);
                // r^a s = s r^-a
                let k = if sb { (kb + n - ka) % n } else { (ka + kb) % n };
                mul.push((if sa != sb { n + k } else { k }) as u32);
            }
        }
        let power = |k: usize| match k {
            0 => String::new(),
            1 => "r".to_string(),
            k => format!("r^{k}"),
        };
        let labels = (0..order)
            .map(|a| match (a >= n, a % n) {
                (false, 0) => "1".to_string(),
                (false, k) => power(k),
                (true, k) => format!("s{}", power(k)),
            })
            .collect();
        let gens = vec![("r".to_string(), 1), ("s".to_string(), n)];
        Ok(GroupTable::from_mul_table(order, mul, labels)?.with_generators(gens))
    }

    /// Closure of permutations of `{0..degree}`. Products compose left to
    /// right: `(a·b)(i) = b(a(i))`.
    pub fn from_permutations(generators: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Vec::len);
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Invalid("generators must be permutations of one common degree".into()));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        // right multiplication by each generator, filled as elements appear
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut tree: Vec<Option<(usize, usize)>> = vec![None];
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (gi, g) in generators.iter().enumerate() {
                let prod: Vec<usize> = elements[i].iter().map(|&p| g[p]).collect();
                let k = match index.get(&prod) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= max_order {
                            return Err(Error::OrderCap { cap: max_order });
                        }
                        let k = elements.len();
                        index.insert(prod.clone(), k);
                        elements.push(prod);
                        tree.push(Some((i, gi)));
                        k
                    }
                };
                row.push(k);
            }
            right.push(row);
            i += 1;
        }
        let order = elements.len();
        let mul = product_table_from_tree(order, &tree, |e, gi| right[e][gi]);
        let labels = elements.iter().map(|p| cycle_string(p)).collect();
        let gens = generators
            .iter()
            .enumerate()
            .map(|(gi, g)| (format!("g{}", gi + 1), index[g]))
            .collect();
        Ok(GroupTable::from_mul_table(order, mul, labels)?.with_generators(gens))
    }

    /// The regular representation read off a trivial-subgroup coset table.
    pub fn from_presentation(pres: &Presentation, max_cosets: usize, max_order: usize) -> Result<Self> {
        let table = todd_coxeter(pres, &[], max_cosets)?;
        let order = table.num_cosets();
        if order > max_order {
            return Err(Error::OrderCap { cap: max_order });
        }
        let tree: Vec<Option<(usize, usize)>> = table.spanning_tree();
        let mul = product_table_from_tree(order, &tree, |e, col| table.act(e, col));
        let labels = table.representatives().iter().map(|w| pres.format_word(w)).collect();
        let gens = pres
            .generators()
            .iter()
            .enumerate()
            .map(|(g, name)| (name.clone(), table.act(0, column(g, false))))
            .collect();
        Ok(GroupTable::from_mul_table(order, mul, labels)?.with_generators(gens))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Looks an element up by label or by generator name.
    pub fn element(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        self.labels
            .iter()
            .position(|l| l == name)
            .or_else(|| self.generators.iter().find(|(g, _)| g == name).map(|&(_, e)| e))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        // a^-1 b^-1 a b
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders, a cheap isomorphism invariant.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Elements of the subgroup generated by `gens`, in discovery order
    /// starting from the identity.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i];
            i += 1;
            for &g in gens {
                let p = self.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    elems.push(p);
                }
            }
        }
        elems
    }

    pub fn generated_by(&self, gens: &[usize]) -> bool {
        self.subgroup(gens).len() == self.order
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|h| self.mul(z, h) == self.mul(h, z))).collect()
    }

    /// Commutator subgroup of the subgroup with elements `h`.
    pub fn derived_subgroup(&self, h: &[usize]) -> Vec<usize> {
        let mut comms = vec![false; self.order];
        for &a in h {
            for &b in h {
                comms[self.commutator(a, b)] = true;
            }
        }
        let gens: Vec<usize> = (0..self.order).filter(|&c| comms[c] && c != 0).collect();
        self.subgroup(&gens)
    }

    /// Orders of the derived series `G ⊇ G' ⊇ G'' ⊇ …`, stopping at the
    /// trivial group or as soon as the series stops shrinking.
    pub fn derived_series_lengths(&self) -> Vec<usize> {
        let mut current: Vec<usize> = (0..self.order).collect();
        let mut out = vec![current.len()];
        while current.len() > 1 {
            let next = self.derived_subgroup(&current);
            if next.len() == current.len() {
                break;
            }
            out.push(next.len());
            current = next;
        }
        out
    }

    /// Quotient by a normal subgroup, together with the projection.
    pub fn quotient(&self, normal: &[usize]) -> (GroupTable, Vec<usize>) {
        let mut class = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if class[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for &n in normal {
                class[self.mul(a, n)] = id;
            }
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(class[self.mul(a, b)] as u32);
            }
        }
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let gens = self.generators.iter().map(|(n, e)| (n.clone(), class[*e])).collect();
        let q = GroupTable::from_mul_table(k, mul, labels).expect("quotient by a normal subgroup").with_generators(gens);
        (q, class)
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b);
                let c = self.mul(b, a);
                if r >= n || c >= n || std::mem::replace(&mut row[r], true) || std::mem::replace(&mut col[c], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Full associativity check up to order 256; above that a deterministic
    /// sample of triples.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 256 {
            return (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| check(a, b, c))));
        }
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..100_000).all(|_| {
            let (a, b, c) = (next(), next(), next());
            check(a, b, c)
        })
    }

    /// Table invariants: Latin square with identity 0, inverses, associativity.
    pub fn check_invariants(&self) -> bool {
        self.is_latin_square() && (0..self.order).all(|a| self.mul(a, self.inv(a)) == 0) && self.is_associative()
    }
}

/// Fills the product table from a spanning tree of right-multiplication by
/// generators: `mul[a][b] = step(mul[a][parent(b)], gen(b))`.
fn product_table_from_tree(
    order: usize,
    tree: &[Option<(usize, usize)>],
    step: impl Fn(usize, usize) -> usize,
) -> Vec<u32> {
    // parents precede children in `tree`'s indexing, so a row fills in order
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        let row = &mut mul[a * order..(a + 1) * order];
        row[0] = a as u32;
        for b in 1..order {
            let (p, g) = tree[b].expect("every non-identity element has a parent");
            row[b] = step(row[p] as usize, g) as u32;
        }
    }
    mul
}

fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{}", i + 1);
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses a permutation in 1-based cycle notation, e.g. `(1 2 3)(4 5)`.
/// Points may be separated by spaces or commas.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Vec<usize>, ParseError> {
    let mut p: Vec<usize> = (0..degree).collect();
    let text = text.trim();
    if text.is_empty() || text == "()" {
        return Ok(p);
    }
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| ParseError::new(format!("expected '(' in {text:?}")))?;
        let close = open.find(')').ok_or_else(|| ParseError::new(format!("unclosed cycle in {text:?}")))?;
        let points = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(k) if k >= 1 && k <= degree => Ok(k - 1),
                _ => Err(ParseError::new(format!("bad point {s:?} in cycle (degree {degree})"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        // cycles compose left to right
        let mut cyc: Vec<usize> = (0..degree).collect();
        for (k, &a) in points.iter().enumerate() {
            cyc[a] = points[(k + 1) % points.len()];
        }
        let mut seen = vec![false; degree];
        if points.iter().any(|&a| std::mem::replace(&mut seen[a], true)) {
            return Err(ParseError::new(format!("repeated point in cycle of {text:?}")));
        }
        p = p.iter().map(|&i| cyc[i]).collect();
        rest = open[close + 1..].trim_start();
    }
    Ok(p)
}

/// Largest point mentioned in a cycle-notation string.
pub fn permutation_degree(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit()).filter_map(|s| s.parse::<usize>().ok()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> GroupTable {
        let g1 = parse_permutation("(1 2 3 4 5)", 5).unwrap();
        let g2 = parse_permutation("(1 2 3)", 5).unwrap();
        GroupTable::from_permutations(&[g1, g2], DEFAULT_MAX_ORDER).unwrap()
    }

    /// Brute-force closure over products of generator lists, independent of
    /// the table machinery.
    fn closure_size(gens: &[Vec<usize>]) -> usize {
        use std::collections::HashSet;
        let degree = gens[0].len();
        let mut set: HashSet<Vec<usize>> = HashSet::from([(0..degree).collect()]);
        loop {
            let before = set.len();
            let current: Vec<Vec<usize>> = set.iter().cloned().collect();
            for a in &current {
                for g in gens {
                    set.insert(a.iter().map(|&i| g[i]).collect());
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn abelian_examples() {
        let g = GroupTable::abelian(2, 1);
        assert_eq!(g.order(), 2);
        let g = GroupTable::abelian(4, 2);
        assert_eq!(g.order(), 8);
        assert!((0..8).all(|a| 4 % g.element_order(a) == 0));
        assert_eq!(GroupTable::abelian(1, 1).order(), 1);
        assert_eq!(g.center().len(), 8);
        assert_eq!(g.label(3), "(1,1)");
        assert!(g.check_invariants());
    }

    #[test]
    fn dihedral_examples() {
        let d3 = GroupTable::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.labels(), &["1", "r", "r^2", "s", "sr", "sr^2"]);
        let d4 = GroupTable::dihedral(4).unwrap();
        assert_eq!(d4.center(), vec![0, 2]);
        assert_eq!(d4.label(2), "r^2");
        assert!(GroupTable::dihedral(2).is_err());
        assert_eq!(GroupTable::dihedral(5).unwrap().center(), vec![0]);
        for n in 3..9 {
            let d = GroupTable::dihedral(n).unwrap();
            assert!(d.check_invariants());
            let (r, s) = (d.element("r").unwrap(), d.element("s").unwrap());
            // r s = s r^-1
            assert_eq!(d.mul(r, s), d.mul(s, d.inv(r)));
            assert_eq!(d.element_order(r), n);
            assert_eq!(d.element_order(s), 2);
        }
    }

    #[test]
    fn permutation_examples() {
        let g1 = parse_permutation("(1 2 3 4 5)", 5).unwrap();
        let g2 = parse_permutation("(1 2 3)", 5).unwrap();
        assert_eq!(closure_size(&[g1.clone(), g2.clone()]), 60);
        let a5 = a5();
        assert_eq!(a5.order(), 60);
        assert!(a5.check_invariants());
        let id = parse_permutation("()", 3).unwrap();
        assert_eq!(GroupTable::from_permutations(&[id], 10).unwrap().order(), 1);
        let t = parse_permutation("(1 2)", 2).unwrap();
        assert_eq!(GroupTable::from_permutations(&[t], 10).unwrap().order(), 2);
        assert_eq!(
            GroupTable::from_permutations(&[g1, g2], 59).unwrap_err(),
            Error::OrderCap { cap: 59 }
        );
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(parse_permutation("(1 2)(2 3)", 3).unwrap(), vec![2, 0, 1]);
        assert_eq!(parse_permutation("(1,2,3)", 3).unwrap(), vec![1, 2, 0]);
        assert!(parse_permutation("(1 4)", 3).is_err());
        assert!(parse_permutation("(1 2", 3).is_err());
        assert!(parse_permutation("(1 1)", 3).is_err());
        assert_eq!(permutation_degree("(1 2 3)(4 5)"), 5);
        assert_eq!(cycle_string(&[1, 2, 0, 4, 3]), "(1 2 3)(4 5)");
    }

    #[test]
    fn presentation_examples() {
        let d5 = GroupTable::from_presentation(&Presentation::dihedral(5), DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(d5.order(), 10);
        assert!(d5.check_invariants());
        let c4 = Presentation::from_strs(&["a"], &["a^4"]).unwrap();
        let c4 = GroupTable::from_presentation(&c4, 100, 100).unwrap();
        assert_eq!(c4.order_statistics(), vec![1, 2, 4, 4]);
    }

    #[test]
    fn dihedral_presentation_matches_closed_form() {
        for n in 3..=8 {
            let fp = GroupTable::from_presentation(&Presentation::dihedral(n), DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER).unwrap();
            let d = GroupTable::dihedral(n).unwrap();
            assert_eq!(fp.order(), d.order());
            assert_eq!(fp.order_statistics(), d.order_statistics());
        }
    }

    #[test]
    fn derived_series() {
        assert_eq!(GroupTable::abelian(6, 1).derived_series_lengths(), vec![6, 1]);
        assert_eq!(GroupTable::dihedral(3).unwrap().derived_series_lengths(), vec![6, 3, 1]);
        assert_eq!(a5().derived_series_lengths(), vec![60]);
    }

    #[test]
    fn derived_subgroup_brute_force() {
        // D3' computed by listing all commutators directly
        let d3 = GroupTable::dihedral(3).unwrap();
        let mut comms: Vec<usize> = (0..6).flat_map(|a| (0..6).map(move |b| (a, b))).map(|(a, b)| d3.commutator(a, b)).collect();
        comms.sort_unstable();
        comms.dedup();
        assert_eq!(comms, vec![0, 1, 2]);
        let mut got = d3.derived_subgroup(&(0..6).collect::<Vec<_>>());
        got.sort_unstable();
        assert_eq!(got, comms);
    }

    #[test]
    fn center_divides_order() {
        for g in [GroupTable::dihedral(6).unwrap(), a5(), GroupTable::abelian(4, 2)] {
            assert_eq!(g.order() % g.center().len(), 0);
        }
    }

    #[test]
    fn quotient_by_derived() {
        let d4 = GroupTable::dihedral(4).unwrap();
        let dd = d4.derived_subgroup(&(0..8).collect::<Vec<_>>());
        let (q, proj) = d4.quotient(&dd);
        assert_eq!(q.order(), 4);
        assert_eq!(q.order_statistics(), vec![1, 2, 2, 2]);
        assert!(q.check_invariants());
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(proj[d4.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn element_lookup() {
        let d4 = GroupTable::dihedral(4).unwrap();
        assert_eq!(d4.element("sr^3"), Some(7));
        assert_eq!(d4.element("s"), Some(4));
        assert_eq!(d4.element("t"), None);
    }
}
