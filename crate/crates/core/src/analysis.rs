//! End-to-end computations shared by the command line tool and the test
//! suites: the index factorization, the congruence pipeline, identity checks,
//! and the semidirect-product experiment.

use std::sync::Arc;

use serde::Serialize;

use crate::autf2::{self, named, FreeAutomorphism};
use crate::epi::{inner_index, orbit_stabilizer, Epimorphism, OrbitResult};
use crate::error::{Error, Result};
use crate::groups::{todd_coxeter, GroupTable, Presentation};
use crate::sl2::{rho_subgroup_generators, Mat2, Sl2Word};
use crate::slsub::{LevelReport, Sl2Subgroup};
use crate::words::ReducedWord;

/// One named pass/fail item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub group_order: usize,
    pub center_order: usize,
    /// `[Aut⁺(F2) : Γ⁺(G, π)]`
    pub orbit_length: usize,
    /// `[T2 : T2 ∩ Γ⁺(G, π)]`
    pub inner_index: usize,
    pub schreier_generators: usize,
    pub rho_generators: usize,
    /// `[SL2(Z) : ρ(Γ⁺(G, π))]`
    pub rho_index: usize,
    /// `orbit_length == inner_index · rho_index` and `inner_index == [G : Z(G)]`
    pub factorization_holds: bool,
}

/// Orbit, stabilizer, and the ρ-image subgroup of one epimorphism.
pub struct IndexAnalysis {
    pub orbit: OrbitResult,
    pub image: Sl2Subgroup,
    pub report: IndexReport,
}

pub fn analyze_index(e: &Epimorphism, max_cosets: usize) -> Result<IndexAnalysis> {
    let g = e.group();
    let orbit = orbit_stabilizer(e);
    let mats = rho_subgroup_generators(&orbit.stabilizer_gens);
    let rho_generators = mats.len();
    let image = Sl2Subgroup::build(mats, max_cosets)?;
    let center_order = g.center().len();
    let inner = inner_index(e);
    let report = IndexReport {
        group_order: g.order(),
        center_order,
        orbit_length: orbit.len(),
        inner_index: inner,
        schreier_generators: orbit.stabilizer_gens.len(),
        rho_generators,
        rho_index: image.index(),
        factorization_holds: orbit.len() == inner * image.index() && inner * center_order == g.order(),
    };
    Ok(IndexAnalysis { orbit, image, report })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    #[serde(flatten)]
    pub index: IndexReport,
    pub level: u64,
    pub is_congruence: bool,
    pub witness: Option<Mat2>,
}

pub fn analyze_congruence(e: &Epimorphism, max_cosets: usize) -> Result<(IndexAnalysis, CongruenceReport)> {
    let a = analyze_index(e, max_cosets)?;
    let LevelReport { level, is_congruence, witness } = a.image.is_congruence()?;
    let report = CongruenceReport { index: a.report.clone(), level, is_congruence, witness };
    Ok((a, report))
}

/// The relations of Aut⁺(F2) as automorphism identities.
pub fn aut_plus_relation_checks() -> Vec<Check> {
    autf2::RELATIONS
        .iter()
        .map(|(l, r)| {
            let lhs: FreeAutomorphism = l.parse().expect("relation parses");
            let rhs: FreeAutomorphism = r.parse().expect("relation parses");
            Check::new(format!("{l} = {r}"), lhs == rhs)
        })
        .collect()
}

/// The two relators of SL2(Z), and `(e2 e1^-1 e2)^2 = -I`.
pub fn sl2_relator_checks() -> Vec<Check> {
    let ev = |s: &str| s.parse::<Sl2Word>().expect("relator parses").eval();
    vec![
        Check::new("e2 e1^-1 e2 e1 e2^-1 e1 = I", ev("e2 e1^-1 e2 e1 e2^-1 e1").is_identity()),
        Check::new("(e2 e1^-1 e2)^4 = I", ev("(e2 e1^-1 e2)^4").is_identity()),
        Check::new("(e2 e1^-1 e2)^2 = -I", ev("(e2 e1^-1 e2)^2") == Mat2::minus_identity()),
    ]
}

fn eq(checks: &mut Vec<Check>, name: impl Into<String>, lhs: &FreeAutomorphism, rhs: &FreeAutomorphism) {
    checks.push(Check::new(name, lhs == rhs));
}

fn by_images(checks: &mut Vec<Check>, name: &str, images: &(ReducedWord, ReducedWord), f: &FreeAutomorphism) {
    checks.push(Check::new(name, f.has_images(&images.0, &images.1)));
}

fn x_pow(k: i64) -> ReducedWord {
    ReducedWord::x().pow(k)
}

fn alpha(w: ReducedWord) -> FreeAutomorphism {
    FreeAutomorphism::inner(&w)
}

fn cat(ws: &[ReducedWord]) -> ReducedWord {
    ws.iter().fold(ReducedWord::identity(), |acc, w| acc.multiply(w))
}

fn prod(fs: &[&FreeAutomorphism]) -> FreeAutomorphism {
    fs.iter().fold(FreeAutomorphism::identity(), |acc, f| acc.compose(f))
}

/// Index of `⟨gens⟩` in Aut⁺(F2) by coset enumeration over its presentation.
pub fn aut_plus_subgroup_index(gens: &[FreeAutomorphism], max_cosets: usize) -> Result<usize> {
    let words: Vec<_> = gens.iter().map(autf2::fp_word_of).collect();
    Ok(todd_coxeter(&autf2::presentation(), &words, max_cosets)?.num_cosets())
}

/// The identities expressing the generators of `Γ⁺(D_n, π0)` through
/// `γ1 = u^2`, `γ2 = v^n`, `γ3 = ax^-1 v^2`, `γ4 = ax^-1 (u^-1 v)^3`, the
/// stabilization of `π0 = (r, s)` by the `φ_i`, and the index of
/// `⟨γ1, …, γ4⟩` by coset enumeration.
pub fn dihedral_identity_checks(n: usize, max_cosets: usize) -> Result<Vec<Check>> {
    if n < 3 {
        return Err(Error::Invalid(format!("dihedral identities need n >= 3, got {n}")));
    }
    let (g1, g2, g3, g4) = (named::gamma1(), named::gamma2(n as i64), named::gamma3(), named::gamma4());
    let (x, y) = (ReducedWord::x(), ReducedWord::y());
    let e = Epimorphism::from_labels(Arc::new(GroupTable::dihedral(n)?), "r", "s")?;
    let mut checks = Vec::new();
    let p1 = (cat(&[x.clone(), y.clone(), y.clone()]), y.clone());
    by_images(&mut checks, "phi1 = gamma1", &p1, &g1);

    // m = n for odd n, n/2 for even n
    let odd = n % 2 == 1;
    let m = if odd { n } else { n / 2 } as i64;
    let a_xm = alpha(x_pow(m));
    let a_y2 = alpha(y.pow(2));
    let mut phis = vec![("phi1", p1.clone())];
    if odd {
        let half = (n as i64 + 1) / 2;
        let p2 = (x.clone(), cat(&[x_pow(1 - half), y.clone(), x_pow(half)]));
        by_images(&mut checks, "phi2 = gamma2^-1 gamma3^((n+1)/2)", &p2, &prod(&[&g2.invert(), &g3.pow(half)]));
        eq(&mut checks, format!("alpha_(x^{m}) = gamma2^2 gamma3^-{m}"), &a_xm, &prod(&[&g2.pow(2), &g3.pow(-m)]));
        phis.push(("phi2", p2));
    } else {
        let p3 = (x.clone(), cat(&[x.clone(), y.clone(), x.clone()]));
        let p4 = (cat(&[y.invert(), x.invert(), y.clone()]), y.invert());
        by_images(&mut checks, "phi3 = gamma3", &p3, &g3);
        by_images(&mut checks, "phi4 = gamma4", &p4, &g4);
        eq(&mut checks, format!("alpha_(x^{m}) = gamma2 gamma3^-{m}"), &a_xm, &prod(&[&g2, &g3.pow(-m)]));
        phis.push(("phi3", p3));
        phis.push(("phi4", p4));
    }
    eq(&mut checks, "alpha_(y^2) = gamma1^-1 gamma4^-1 gamma1 gamma4", &a_y2, &prod(&[&g1.invert(), &g4.invert(), &g1, &g4]));
    eq(
        &mut checks,
        format!("alpha_(y x^{m} y^-1) = gamma4^-1 alpha_(y^2)^-1 alpha_(x^{m})^-1 alpha_(y^2) gamma4"),
        &alpha(cat(&[y.clone(), x_pow(m), y.invert()])),
        &prod(&[&g4.invert(), &a_y2.invert(), &a_xm.invert(), &a_y2, &g4]),
    );
    for k in 1..m {
        eq(
            &mut checks,
            format!("alpha_(x^{k} y x^{} y) = gamma3^{k} gamma4 alpha_(y^2)^-1 alpha_(x^{m}) gamma3^-{k} gamma4", k - m),
            &alpha(cat(&[x_pow(k), y.clone(), x_pow(k - m), y.clone()])),
            &prod(&[&g3.pow(k), &g4, &a_y2.invert(), &a_xm, &g3.pow(-k), &g4]),
        );
        eq(
            &mut checks,
            format!("alpha_(y x^{k} y x^{}) = alpha_(y^2) gamma4 gamma3^{k} gamma4^-1 gamma3^-{k} alpha_(x^{m})^-1", k - m),
            &alpha(cat(&[y.clone(), x_pow(k), y.clone(), x_pow(k - m)])),
            &prod(&[&a_y2, &g4, &g3.pow(k), &g4.invert(), &g3.pow(-k), &a_xm.invert()]),
        );
    }
    for (name, (ix, iy)) in &phis {
        let fixed = e.eval(ix) == e.gx() && e.eval(iy) == e.gy();
        checks.push(Check::new(format!("{name} stabilizes (r, s)"), fixed));
    }
    for (name, f) in [("gamma1", &g1), ("gamma2", &g2), ("gamma3", &g3), ("gamma4", &g4)] {
        checks.push(Check::new(format!("{name} stabilizes (r, s)"), e.is_stabilized_by(f)));
    }
    let idx = aut_plus_subgroup_index(&[g1, g2, g3, g4], max_cosets)?;
    checks.push(
        Check::new("[Aut+(F2) : <gamma1..gamma4>] = 6n", idx == 6 * n).with_detail(format!("coset enumeration gives {idx}")),
    );
    Ok(checks)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `Z/p ⋉ Z/q = ⟨a, b | a^p, b^q, a^-1 b a = b^k⟩` with `k` the least
/// element of order `p` in `(Z/q)^×`. Needs primes with `q ≡ 1 (mod p)`.
pub fn semidirect_product(p: u64, q: u64, max_cosets: usize) -> Result<(GroupTable, u64)> {
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::Invalid(format!("p = {p} and q = {q} must both be prime")));
    }
    if q % p != 1 {
        return Err(Error::Invalid(format!("q = {q} is not 1 mod p = {p}")));
    }
    let k = (2..q)
        .find(|&k| (1..=p).fold(1u64, |acc, _| acc * k % q) == 1)
        .expect("an element of order p exists when p divides q - 1");
    let pres = Presentation::from_strs(
        &["a", "b"],
        &[&format!("a^{p}"), &format!("b^{q}"), &format!("a^-1 b a b^-{k}")],
    )?;
    let g = GroupTable::from_presentation(&pres, max_cosets, (p * q) as usize)?;
    Ok((g, k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub p: u64,
    pub q: u64,
    /// The action of `a` on `Z/q` is `b ↦ b^k`.
    pub k: u64,
    pub group_order: usize,
    pub computed_index: usize,
    pub conjectured_index: u64,
    pub matches: bool,
}

/// Computes `[Aut⁺(F2) : Γ⁺(Z/p ⋉ Z/q, π)]` for `π = (a, b)` and compares
/// it with `q p (p^2 - 1)`.
pub fn conjecture(p: u64, q: u64, max_cosets: usize) -> Result<ConjectureReport> {
    let (g, k) = semidirect_product(p, q, max_cosets)?;
    let order = g.order();
    let e = Epimorphism::from_labels(Arc::new(g), "a", "b")?;
    let computed = orbit_stabilizer(&e).len();
    let conjectured = q * p * (p * p - 1);
    Ok(ConjectureReport {
        p,
        q,
        k,
        group_order: order,
        computed_index: computed,
        conjectured_index: conjectured,
        matches: computed as u64 == conjectured,
    })
}
