//! Epimorphisms `F2 → G` and the right action of Aut⁺(F2) on them by
//! precomposition, `π·φ = π ∘ φ`.
//!
//! An epimorphism is stored as the pair `(π(x), π(y))` of element indices.
//! The stabilizer of `π` is the standard congruence subgroup `Γ⁺(G, π)`, and
//! its index is the length of the orbit of `π`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::autf2::{AutGen, AutLetter, FreeAutomorphism};
use crate::error::{Error, Result};
use crate::groups::GroupTable;
use crate::words::{Gen, ReducedWord};

pub type Pair = (usize, usize);

#[derive(Clone, Debug)]
pub struct Epimorphism {
    group: Arc<GroupTable>,
    gx: usize,
    gy: usize,
}

impl PartialEq for Epimorphism {
    fn eq(&self, other: &Self) -> bool {
        self.pair() == other.pair() && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Epimorphism {
    /// `x ↦ gx, y ↦ gy`; fails unless the two elements generate the group.
    pub fn new(group: Arc<GroupTable>, gx: usize, gy: usize) -> Result<Self> {
        let n = group.order();
        if gx >= n || gy >= n {
            return Err(Error::Invalid(format!("element index out of range for a group of order {n}")));
        }
        if !group.generated_by(&[gx, gy]) {
            return Err(Error::NotSurjective { gx, gy });
        }
        Ok(Epimorphism { group, gx, gy })
    }

    /// Looks both images up by label or generator name.
    pub fn from_labels(group: Arc<GroupTable>, x: &str, y: &str) -> Result<Self> {
        let find = |s: &str| group.element(s).ok_or_else(|| Error::Invalid(format!("no element named {s:?}")));
        let (gx, gy) = (find(x)?, find(y)?);
        Epimorphism::new(group, gx, gy)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn gx(&self) -> usize {
        self.gx
    }

    pub fn gy(&self) -> usize {
        self.gy
    }

    pub fn pair(&self) -> Pair {
        (self.gx, self.gy)
    }

    fn with_pair(&self, (gx, gy): Pair) -> Self {
        Epimorphism { group: Arc::clone(&self.group), gx, gy }
    }

    /// `π(w)` for a word in F2.
    pub fn eval(&self, w: &ReducedWord) -> usize {
        let g = &*self.group;
        let (ix, iy) = (g.inv(self.gx), g.inv(self.gy));
        w.letters().iter().fold(0, |acc, l| {
            let e = match (l.gen, l.inverse) {
                (Gen::X, false) => self.gx,
                (Gen::X, true) => ix,
                (Gen::Y, false) => self.gy,
                (Gen::Y, true) => iy,
            };
            g.mul(acc, e)
        })
    }

    /// `π ∘ f`, evaluated through the cached images of `f`.
    pub fn act(&self, f: &FreeAutomorphism) -> Epimorphism {
        self.with_pair((self.eval(f.image_x()), self.eval(f.image_y())))
    }

    /// `π ∘ f`, applying the letters of `f`'s word one at a time. Agrees with
    /// [`Epimorphism::act`] but never expands long images.
    pub fn act_by_word(&self, f: &FreeAutomorphism) -> Epimorphism {
        let pair = f.word().iter().fold(self.pair(), |p, &l| act_letter(&self.group, p, l));
        self.with_pair(pair)
    }

    pub fn is_stabilized_by(&self, f: &FreeAutomorphism) -> bool {
        self.act_by_word(f).pair() == self.pair()
    }

    /// The induced epimorphism onto `G / G'`.
    pub fn abelianized(&self) -> Epimorphism {
        let g = &*self.group;
        let all: Vec<usize> = (0..g.order()).collect();
        let derived = g.derived_subgroup(&all);
        let (q, proj) = g.quotient(&derived);
        Epimorphism { group: Arc::new(q), gx: proj[self.gx], gy: proj[self.gy] }
    }
}

/// Image of the pair `(π(x), π(y))` under precomposition with one basic
/// automorphism.
#[inline]
pub fn act_letter(g: &GroupTable, (a, b): Pair, l: AutLetter) -> Pair {
    match (l.gen, l.inverse) {
        (AutGen::U, false) => (g.mul(a, b), b),
        (AutGen::U, true) => (g.mul(a, g.inv(b)), b),
        (AutGen::V, false) => (a, g.mul(a, b)),
        (AutGen::V, true) => (a, g.mul(g.inv(a), b)),
        (AutGen::Ax, false) => (a, g.mul(g.mul(a, b), g.inv(a))),
        (AutGen::Ax, true) => (a, g.mul(g.mul(g.inv(a), b), a)),
        (AutGen::Ay, false) => (g.mul(g.mul(b, a), g.inv(b)), b),
        (AutGen::Ay, true) => (g.mul(g.mul(g.inv(b), a), b), b),
    }
}

/// Orbit of an epimorphism, its breadth-first Schreier tree, and Schreier
/// generators of the stabilizer.
#[derive(Clone, Debug)]
pub struct OrbitResult {
    pub orbit: Vec<Pair>,
    /// `tree[i] = (parent, letter)` with `orbit[i] = orbit[parent]·letter`;
    /// `None` for the seed.
    pub tree: Vec<Option<(usize, AutLetter)>>,
    pub stabilizer_gens: Vec<FreeAutomorphism>,
}

impl OrbitResult {
    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    /// The transversal element carrying the seed to `orbit[i]`, as a word.
    pub fn transversal_word(&self, i: usize) -> Vec<AutLetter> {
        let mut w = Vec::new();
        let mut k = i;
        while let Some((p, l)) = self.tree[k] {
            w.push(l);
            k = p;
        }
        w.reverse();
        w
    }
}

/// Breadth-first orbit of a pair under the given letters. Returns the points
/// in discovery order and the tree.
pub fn orbit_points(g: &GroupTable, seed: Pair, letters: &[AutLetter]) -> (Vec<Pair>, Vec<Option<(usize, AutLetter)>>) {
    let mut index: HashMap<Pair, usize> = HashMap::from([(seed, 0)]);
    let mut orbit = vec![seed];
    let mut tree = vec![None];
    let mut i = 0;
    while i < orbit.len() {
        let p = orbit[i];
        for &l in letters {
            let q = act_letter(g, p, l);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(q) {
                e.insert(orbit.len());
                orbit.push(q);
                tree.push(Some((i, l)));
            }
        }
        i += 1;
    }
    (orbit, tree)
}

/// Orbit–stabilizer with the default generator order
/// `u, u⁻¹, v, v⁻¹, ax, ax⁻¹, ay, ay⁻¹`.
pub fn orbit_stabilizer(seed: &Epimorphism) -> OrbitResult {
    orbit_stabilizer_with_order(seed, &AutLetter::BFS_ORDER)
}

/// Orbit–stabilizer with an explicit breadth-first generator order.
///
/// Schreier generators `t_p ∘ s ∘ t_{p·s}⁻¹` are formed for the positive
/// generators `s ∈ {u, v, ax, ay}` only; those for `s⁻¹` are inverses of
/// these. Identities and duplicates are dropped.
pub fn orbit_stabilizer_with_order(seed: &Epimorphism, letters: &[AutLetter]) -> OrbitResult {
    let g = &*seed.group;
    let (orbit, tree) = orbit_points(g, seed.pair(), letters);
    let index: HashMap<Pair, usize> = orbit.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // transversal automorphisms and their inverses, parents first
    let mut trans: Vec<FreeAutomorphism> = Vec::with_capacity(orbit.len());
    let mut trans_inv: Vec<FreeAutomorphism> = Vec::with_capacity(orbit.len());
    for node in &tree {
        match *node {
            None => {
                trans.push(FreeAutomorphism::identity());
                trans_inv.push(FreeAutomorphism::identity());
            }
            Some((p, l)) => {
                trans.push(trans[p].then_letter(l));
                trans_inv.push(trans_inv[p].after_letter(l.inv()));
            }
        }
    }

    let mut seen: HashSet<FreeAutomorphism> = HashSet::new();
    let mut stabilizer_gens = Vec::new();
    for (i, &p) in orbit.iter().enumerate() {
        for gen in AutGen::ALL {
            let s = AutLetter::new(gen, false);
            let j = index[&act_letter(g, p, s)];
            let ts = trans[i].then_letter(s);
            if ts == trans[j] {
                continue;
            }
            let h = ts.compose(&trans_inv[j]);
            debug_assert!(!h.is_identity());
            if !seen.contains(&h) {
                seen.insert(h.clone());
                stabilizer_gens.push(h);
            }
        }
    }
    OrbitResult { orbit, tree, stabilizer_gens }
}

/// `[T2 : T2 ∩ Γ⁺(G, π)]`: the orbit length under the inner automorphisms
/// alone. Equals `[G : Z(G)]`.
pub fn inner_index(e: &Epimorphism) -> usize {
    let inner = [
        AutLetter::new(AutGen::Ax, false),
        AutLetter::new(AutGen::Ax, true),
        AutLetter::new(AutGen::Ay, false),
        AutLetter::new(AutGen::Ay, true),
    ];
    orbit_points(&e.group, e.pair(), &inner).0.len()
}

/// Whether `e1` and `e2` have the same kernel, i.e. `e1.gx ↦ e2.gx`,
/// `e1.gy ↦ e2.gy` extends to an automorphism of the group.
pub fn same_kernel(e1: &Epimorphism, e2: &Epimorphism) -> bool {
    pairs_same_kernel(&e1.group, e1.pair(), e2.pair())
}

fn pairs_same_kernel(g: &GroupTable, (a1, b1): Pair, (a2, b2): Pair) -> bool {
    if g.element_order(a1) != g.element_order(a2) || g.element_order(b1) != g.element_order(b2) {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let h = queue[i];
        i += 1;
        for (s, t) in [(a1, a2), (b1, b2)] {
            let src = g.mul(h, s);
            let dst = g.mul(map[h], t);
            if map[src] == usize::MAX {
                map[src] = dst;
                queue.push(src);
            } else if map[src] != dst {
                return false;
            }
        }
    }
    if queue.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    map.iter().all(|&m| !std::mem::replace(&mut hit[m], true))
}

/// One Aut⁺(F2)-orbit on the set of kernels `R2(G)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KernelOrbit {
    /// Lexicographically smallest epimorphism whose kernel lies in the orbit.
    pub seed: Pair,
    /// `[Aut⁺(F2) : Γ⁺(G, π)]` for any `π` in this class.
    pub stabilizer_index: usize,
    /// Number of kernels in the orbit.
    pub kernel_count: usize,
    /// Number of Aut⁺(F2)-orbits on epimorphisms that map onto this orbit.
    pub epi_orbits: usize,
    /// Number of epimorphisms with kernel in this orbit.
    pub epi_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KernelCensus {
    pub group_order: usize,
    pub epimorphisms: usize,
    pub kernels: usize,
    /// `|Aut(G)|`, which acts freely on epimorphisms.
    pub automorphisms: usize,
    pub orbits: Vec<KernelOrbit>,
}

impl KernelCensus {
    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    pub fn distinct_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits.iter().map(|o| o.stabilizer_index).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Enumerates all epimorphisms `F2 → G`, splits them into Aut⁺(F2)-orbits,
/// and groups those by kernel. Refuses groups with `|G|^2 > max_pairs`.
pub fn kernel_orbit_census(g: &GroupTable, max_pairs: usize) -> Result<KernelCensus> {
    let n = g.order();
    if n.saturating_mul(n) > max_pairs {
        return Err(Error::OrderCap { cap: max_pairs });
    }
    let epis: Vec<Pair> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.generated_by(&[a, b]))
        .collect();

    // Aut⁺-orbits on epimorphisms
    let mut orbit_of: HashMap<Pair, usize> = HashMap::with_capacity(epis.len());
    let mut orbit_len = Vec::new();
    let mut orbit_seed = Vec::new();
    for &p in &epis {
        if orbit_of.contains_key(&p) {
            continue;
        }
        let id = orbit_len.len();
        let (pts, _) = orbit_points(g, p, &AutLetter::BFS_ORDER);
        orbit_len.push(pts.len());
        orbit_seed.push(*pts.iter().min().expect("nonempty orbit"));
        for q in pts {
            orbit_of.insert(q, id);
        }
    }

    // kernel classes: Aut(G)-orbits on epimorphisms
    let mut kernel_reps: Vec<Pair> = Vec::new();
    let mut kernel_of: HashMap<Pair, usize> = HashMap::with_capacity(epis.len());
    for &p in &epis {
        let k = match kernel_reps.iter().position(|&r| pairs_same_kernel(g, r, p)) {
            Some(k) => k,
            None => {
                kernel_reps.push(p);
                kernel_reps.len() - 1
            }
        };
        kernel_of.insert(p, k);
    }

    // epimorphism orbits sharing a kernel lie over the same kernel orbit
    let mut parent: Vec<usize> = (0..orbit_len.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut first_orbit_of_kernel: Vec<Option<usize>> = vec![None; kernel_reps.len()];
    for &p in &epis {
        let (o, k) = (orbit_of[&p], kernel_of[&p]);
        match first_orbit_of_kernel[k] {
            None => first_orbit_of_kernel[k] = Some(o),
            Some(o2) => {
                let (ra, rb) = (find(&mut parent, o), find(&mut parent, o2));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }

    let mut groups: Vec<(usize, KernelOrbit)> = Vec::new();
    for o in 0..orbit_len.len() {
        let root = find(&mut parent, o);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, ko)) => {
                ko.seed = ko.seed.min(orbit_seed[o]);
                ko.epi_orbits += 1;
                ko.epi_count += orbit_len[o];
                debug_assert_eq!(ko.stabilizer_index, orbit_len[o]);
            }
            None => groups.push((
                root,
                KernelOrbit {
                    seed: orbit_seed[o],
                    stabilizer_index: orbit_len[o],
                    kernel_count: 0,
                    epi_orbits: 1,
                    epi_count: orbit_len[o],
                },
            )),
        }
    }
    for k in 0..kernel_reps.len() {
        let root = find(&mut parent, orbit_of[&kernel_reps[k]]);
        if let Some((_, ko)) = groups.iter_mut().find(|(r, _)| *r == root) {
            ko.kernel_count += 1;
        }
    }
    let mut orbits: Vec<KernelOrbit> = groups.into_iter().map(|(_, ko)| ko).collect();
    orbits.sort_by_key(|o| o.seed);

    let kernels = kernel_reps.len();
    Ok(KernelCensus {
        group_order: n,
        epimorphisms: epis.len(),
        kernels,
        automorphisms: epis.len().checked_div(kernels).unwrap_or(0),
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autf2::named;
    use crate::groups::{parse_permutation, DEFAULT_MAX_ORDER};

    fn epi(g: GroupTable, x: &str, y: &str) -> Epimorphism {
        Epimorphism::from_labels(Arc::new(g), x, y).unwrap()
    }

    fn d(n: usize) -> Epimorphism {
        epi(GroupTable::dihedral(n).unwrap(), "r", "s")
    }

    fn a5() -> Arc<GroupTable> {
        let g1 = parse_permutation("(1 2 3 4 5)", 5).unwrap();
        let g2 = parse_permutation("(1 2 3)", 5).unwrap();
        Arc::new(GroupTable::from_permutations(&[g1, g2], DEFAULT_MAX_ORDER).unwrap())
    }

    #[test]
    fn make_epi_examples() {
        let _ = d(3);
        let z2 = Arc::new(GroupTable::abelian(2, 1));
        assert_eq!(Epimorphism::new(z2, 0, 0).unwrap_err(), Error::NotSurjective { gx: 0, gy: 0 });
    }

    #[test]
    fn act_examples() {
        let e = d(5);
        let g = e.group().clone();
        let u = e.act(&FreeAutomorphism::u());
        assert_eq!(u.pair(), (g.mul(e.gx(), e.gy()), e.gy()));
        let v = e.act(&FreeAutomorphism::v());
        assert_eq!(v.pair(), (e.gx(), g.mul(e.gx(), e.gy())));
        assert_eq!(e.act(&FreeAutomorphism::identity()), e);
    }

    #[test]
    fn letter_action_matches_image_action() {
        let e = epi(GroupTable::dihedral(7).unwrap(), "sr", "r^3");
        for l in AutLetter::BFS_ORDER {
            let f = FreeAutomorphism::from_letters([l]);
            assert_eq!(act_letter(e.group(), e.pair(), l), e.act(&f).pair(), "{l:?}");
        }
    }

    #[test]
    fn action_is_right_action() {
        // π·(f∘g) = (π·f)·g
        let e = epi(GroupTable::dihedral(6).unwrap(), "r", "s");
        let f: FreeAutomorphism = "u v^-1 ax".parse().unwrap();
        let h: FreeAutomorphism = "ay^2 v u".parse().unwrap();
        assert_eq!(e.act(&f.compose(&h)), e.act(&f).act(&h));
        assert_ne!(e.act(&f.compose(&h)), e.act(&h).act(&f));
    }

    #[test]
    fn orbit_examples() {
        let z2 = epi(GroupTable::abelian(2, 1), "(1,0)", "(0,0)");
        assert_eq!(orbit_stabilizer(&z2).len(), 3);
        let r = orbit_stabilizer(&d(3));
        assert_eq!(r.len(), 18);
        for h in &r.stabilizer_gens {
            assert!(d(3).is_stabilized_by(h));
            assert_eq!(d(3).act(h), d(3));
        }
    }

    #[test]
    fn transversal_words_reach_points() {
        let e = d(4);
        let r = orbit_stabilizer(&e);
        for i in 0..r.len() {
            let t = FreeAutomorphism::from_letters(r.transversal_word(i));
            assert_eq!(e.act(&t).pair(), r.orbit[i]);
        }
    }

    #[test]
    fn inner_index_examples() {
        assert_eq!(inner_index(&d(3)), 6);
        assert_eq!(inner_index(&d(4)), 4);
        assert_eq!(inner_index(&epi(GroupTable::abelian(4, 2), "(1,0)", "(0,1)")), 1);
    }

    /// All automorphisms of a group generated by `(a, b)`, by brute force over
    /// candidate image pairs and checking the full multiplication table.
    fn brute_force_automorphisms(g: &GroupTable, a: usize, b: usize) -> Vec<Vec<usize>> {
        let words = {
            // express every element as a product over {a, b} by BFS
            let mut w: Vec<Option<Vec<usize>>> = vec![None; g.order()];
            w[0] = Some(vec![]);
            let mut q = vec![0];
            let mut i = 0;
            while i < q.len() {
                let h = q[i];
                i += 1;
                for (k, s) in [a, b].into_iter().enumerate() {
                    let p = g.mul(h, s);
                    if w[p].is_none() {
                        let mut v = w[h].clone().unwrap();
                        v.push(k);
                        w[p] = Some(v);
                        q.push(p);
                    }
                }
            }
            w.into_iter().map(Option::unwrap).collect::<Vec<_>>()
        };
        let mut auts = Vec::new();
        for ia in 0..g.order() {
            for ib in 0..g.order() {
                let m: Vec<usize> = words.iter().map(|w| w.iter().fold(0, |acc, &k| g.mul(acc, [ia, ib][k]))).collect();
                let bij = { let mut s = m.clone(); s.sort_unstable(); s.dedup(); s.len() == g.order() };
                if bij && (0..g.order()).all(|x| (0..g.order()).all(|y| m[g.mul(x, y)] == g.mul(m[x], m[y]))) {
                    auts.push(m);
                }
            }
        }
        auts
    }

    #[test]
    fn same_kernel_examples() {
        let e = d(3);
        assert!(same_kernel(&e, &e));
        let g = e.group().clone();
        let other = Epimorphism::from_labels(g.clone(), "r^2", "sr").unwrap();
        let auts = brute_force_automorphisms(&g, e.gx(), e.gy());
        assert_eq!(auts.len(), 6);
        assert!(auts.iter().any(|m| m[e.gx()] == other.gx() && m[e.gy()] == other.gy()));
        assert!(same_kernel(&e, &other));
        let not_epi_image = Epimorphism::from_labels(g, "s", "sr").unwrap();
        // s ↦ ... has order 2, r has order 3
        assert!(!same_kernel(&e, &not_epi_image));
    }

    #[test]
    fn same_kernel_matches_brute_force_on_a5() {
        let g = a5();
        let base = Epimorphism::new(g.clone(), 1, 2).unwrap();
        let auts = brute_force_automorphisms(&g, base.gx(), base.gy());
        assert_eq!(auts.len(), 120);
        let mut checked = 0;
        for a in 0..60 {
            for b in (0..60).step_by(7) {
                if let Ok(e) = Epimorphism::new(g.clone(), a, b) {
                    let expected = auts.iter().any(|m| m[base.gx()] == a && m[base.gy()] == b);
                    assert_eq!(same_kernel(&base, &e), expected);
                    checked += 1;
                }
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn census_examples() {
        let c = kernel_orbit_census(&GroupTable::abelian(4, 2), 1 << 20).unwrap();
        assert!(c.is_transitive());
        assert_eq!(c.orbits[0].stabilizer_index, 24);
        let c = kernel_orbit_census(&GroupTable::dihedral(5).unwrap(), 1 << 20).unwrap();
        assert!(c.is_transitive());
        assert_eq!(c.orbits[0].stabilizer_index, 30);
        for o in &c.orbits {
            assert_eq!(o.epi_count, c.automorphisms * o.kernel_count);
        }
        assert!(kernel_orbit_census(&GroupTable::dihedral(5).unwrap(), 99).is_err());
    }

    #[test]
    fn abelianization_examples() {
        let ab = d(3).abelianized();
        assert_eq!(ab.group().order(), 2);
        assert_eq!(ab.gx(), 0);
        assert_ne!(ab.gy(), 0);
        let ab = d(4).abelianized();
        assert_eq!(ab.group().order(), 4);
        assert_eq!(ab.group().order_statistics(), vec![1, 2, 2, 2]);
        let e = epi(GroupTable::abelian(4, 2), "(1,0)", "(0,1)");
        let ab = e.abelianized();
        assert_eq!(ab.group().order(), 8);
        assert!(same_kernel(&ab, &ab));
    }

    #[test]
    fn stabilizer_gens_stabilize_abelianization() {
        for e in [d(3), d(4), d(6)] {
            let ab = e.abelianized();
            for h in orbit_stabilizer(&e).stabilizer_gens {
                assert!(ab.is_stabilized_by(&h));
            }
        }
    }

    #[test]
    fn dihedral_gammas_stabilize() {
        for n in 3..9 {
            let e = d(n);
            for f in [named::gamma1(), named::gamma2(n as i64), named::gamma3(), named::gamma4()] {
                assert!(e.is_stabilized_by(&f));
                assert!(e.act(&f) == e);
            }
        }
    }

    #[test]
    fn orbit_length_independent_of_order() {
        let mut rev = AutLetter::BFS_ORDER;
        rev.reverse();
        for e in [d(5), d(6), epi(GroupTable::abelian(6, 2), "(1,0)", "(0,1)")] {
            let a = orbit_stabilizer(&e);
            let b = orbit_stabilizer_with_order(&e, &rev);
            assert_eq!(a.len(), b.len());
        }
    }
}
