//! HLT coset enumeration.
//!
//! Cosets are defined in discovery order, every relator is scanned at every
//! live coset, and coincidences are processed in place with a union-find
//! forwarding array. The closed table is renumbered in breadth-first order
//! from the subgroup coset, so equal subgroups give identical tables.

use std::collections::VecDeque;

use super::presentation::{inverse_column, Column, FpWord, Presentation};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_COSETS: usize = 1 << 16;

const UNDEF: u32 = u32::MAX;

/// Closed coset table of a subgroup: the right action of every generator and
/// inverse on coset indices. Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ncols: usize,
    num_cosets: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_columns(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn act(&self, coset: usize, col: Column) -> usize {
        self.table[coset * self.ncols + col] as usize
    }

    pub fn trace(&self, coset: usize, word: &[Column]) -> usize {
        word.iter().fold(coset, |c, &col| self.act(c, col))
    }

    /// The permutation of cosets induced by one column.
    pub fn permutation(&self, col: Column) -> Vec<usize> {
        (0..self.num_cosets).map(|c| self.act(c, col)).collect()
    }

    /// Spanning tree from coset 0: for every coset except 0, the parent coset
    /// and the column that leads from it. Parents always precede children.
    pub fn spanning_tree(&self) -> Vec<Option<(usize, Column)>> {
        let mut tree = vec![None; self.num_cosets];
        let mut seen = vec![false; self.num_cosets];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for col in 0..self.ncols {
                let d = self.act(c, col);
                if !seen[d] {
                    seen[d] = true;
                    tree[d] = Some((c, col));
                    queue.push_back(d);
                }
            }
        }
        tree
    }

    /// A representative word for every coset, read off the spanning tree.
    pub fn representatives(&self) -> Vec<FpWord> {
        let tree = self.spanning_tree();
        let mut reps: Vec<FpWord> = vec![Vec::new(); self.num_cosets];
        for c in self.bfs_order() {
            if let Some((p, col)) = tree[c] {
                let mut w = reps[p].clone();
                w.push(col);
                reps[c] = w;
            }
        }
        reps
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.num_cosets);
        let mut seen = vec![false; self.num_cosets];
        seen[0] = true;
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.act(c, col);
                if !seen[d] {
                    seen[d] = true;
                    order.push(d);
                }
            }
        }
        order
    }

    /// Checks the closed-table invariants: inverse columns are mutually
    /// inverse, relators fix every coset, subgroup generators fix coset 0, and
    /// the action is transitive.
    pub fn is_consistent(&self, pres: &Presentation, subgroup: &[FpWord]) -> bool {
        let n = self.num_cosets;
        for c in 0..n {
            for col in 0..self.ncols {
                let d = self.act(c, col);
                if d >= n || self.act(d, inverse_column(col)) != c {
                    return false;
                }
            }
            if pres.relators().iter().any(|r| self.trace(c, r) != c) {
                return false;
            }
        }
        subgroup.iter().all(|w| self.trace(0, w) == 0) && self.bfs_order().len() == n
    }
}

struct Enumerator {
    ncols: usize,
    max_cosets: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ncols: usize, max_cosets: usize) -> Self {
        let mut e = Enumerator { ncols, max_cosets, table: Vec::new(), forward: Vec::new(), queue: Vec::new() };
        e.new_row();
        e
    }

    fn len(&self) -> usize {
        self.forward.len()
    }

    fn new_row(&mut self) -> u32 {
        let id = self.forward.len() as u32;
        self.forward.push(id);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        id
    }

    #[inline]
    fn get(&self, c: u32, col: Column) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: Column, d: u32) {
        self.table[c as usize * self.ncols + col] = d;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, col: Column) -> Result<()> {
        if self.len() >= self.max_cosets {
            return Err(Error::EnumerationLimit { limit: self.max_cosets });
        }
        let d = self.new_row();
        self.set(c, col, d);
        self.set(d, inverse_column(col), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut k = c;
        while self.forward[k as usize] != root {
            let next = self.forward[k as usize];
            self.forward[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.forward[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.get(dead, col);
                if d == UNDEF {
                    continue;
                }
                let icol = inverse_column(col);
                self.set(d, icol, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_ix = self.get(nu, icol);
                if nu_ix != UNDEF {
                    self.merge(mu, nu_ix);
                    continue;
                }
                self.set(mu, col, nu);
                self.set(nu, icol, mu);
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, word: &[Column]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, word[i as usize]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, inverse_column(word[j as usize]));
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction closes the relator cycle
                let col = word[i as usize];
                self.set(f, col, b);
                self.set(b, inverse_column(col), f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    fn finish(mut self) -> CosetTable {
        let live: Vec<u32> = (0..self.len() as u32).filter(|&c| self.alive(c)).collect();
        let mut index = vec![UNDEF; self.len()];
        for (k, &c) in live.iter().enumerate() {
            index[c as usize] = k as u32;
        }
        let ncols = self.ncols;
        let mut table = Vec::with_capacity(live.len() * ncols);
        for &c in &live {
            for col in 0..ncols {
                let d = self.get(c, col);
                let d = self.rep(d);
                table.push(index[d as usize]);
            }
        }
        standardize(CosetTable { ncols, num_cosets: live.len(), table })
    }
}

/// Renumbers cosets in breadth-first order from coset 0.
fn standardize(t: CosetTable) -> CosetTable {
    let order = t.bfs_order();
    let mut new_index = vec![0u32; t.num_cosets];
    for (k, &c) in order.iter().enumerate() {
        new_index[c] = k as u32;
    }
    let mut table = Vec::with_capacity(t.table.len());
    for &c in &order {
        for col in 0..t.ncols {
            table.push(new_index[t.act(c, col)]);
        }
    }
    CosetTable { ncols: t.ncols, num_cosets: t.num_cosets, table }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group given by `pres`.
/// Fails with [`Error::EnumerationLimit`] if more than `max_cosets` cosets
/// get defined before the table closes.
pub fn todd_coxeter(pres: &Presentation, subgroup: &[FpWord], max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::Invalid("max_cosets must be at least 1".into()));
    }
    let ncols = 2 * pres.num_generators();
    if ncols == 0 {
        return Ok(CosetTable { ncols, num_cosets: 1, table: Vec::new() });
    }
    let mut e = Enumerator::new(ncols, max_cosets);
    for w in subgroup {
        let c = e.rep(0);
        e.scan_and_fill(c, w)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.len() {
        for r in pres.relators() {
            if !e.alive(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        for col in 0..ncols {
            if !e.alive(c) {
                break;
            }
            if e.get(c, col) == UNDEF {
                e.define(c, col)?;
            }
        }
        c += 1;
    }
    Ok(e.finish())
}
