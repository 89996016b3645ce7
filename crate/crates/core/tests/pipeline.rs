use std::sync::Arc;

use congruence::analysis::{aut_plus_subgroup_index, conjecture, semidirect_product};
use congruence::epi::orbit_stabilizer;
use congruence::groups::DEFAULT_MAX_COSETS;
use congruence::{Epimorphism, GroupTable};

/// The stabilizer, enumerated over the presentation of Aut⁺(F2), has index
/// equal to the orbit length.
#[test]
fn stabilizer_index_by_coset_enumeration() {
    let groups = [
        GroupTable::abelian(3, 1),
        GroupTable::abelian(4, 2),
        GroupTable::abelian(6, 6),
        GroupTable::dihedral(4).unwrap(),
        GroupTable::dihedral(9).unwrap(),
    ];
    for g in groups {
        let (a, b) = (g.generators()[0].1, g.generators()[1].1);
        let e = Epimorphism::new(Arc::new(g), a, b).unwrap();
        let o = orbit_stabilizer(&e);
        assert_eq!(aut_plus_subgroup_index(&o.stabilizer_gens, DEFAULT_MAX_COSETS).unwrap(), o.len());
    }
}

#[test]
fn semidirect_products() {
    for (p, q) in [(2, 3), (2, 5), (3, 7), (2, 7), (3, 13)] {
        let (g, k) = semidirect_product(p, q, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(g.order() as u64, p * q);
        assert_ne!(k, 1);
        // nonabelian of order pq: trivial center
        assert_eq!(g.center().len(), 1);
        let r = conjecture(p, q, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(r.conjectured_index, q * p * (p * p - 1));
        assert!(r.matches, "{r:?}");
    }
    assert!(semidirect_product(3, 5, DEFAULT_MAX_COSETS).is_err());
    assert!(semidirect_product(4, 5, DEFAULT_MAX_COSETS).is_err());
}
