//! Class-table properties beyond the unit tests: power-coprime closure,
//! fused-count comparisons, trivial-group conventions.

mod common;

use common::group;
use ppcover_core::classes::{a_classes, m_invariant};
use ppcover_core::constructions::{
    agl1, alt_group, cyclic_group, dihedral_group, sym_group,
};
use ppcover_core::perm::PrimePowerOrder;
use ppcover_core::{Config, PermGroup};

#[test]
fn power_coprime_closure() {
    // For a class rep x of order p^s and any b coprime to p, x^b has the
    // same order and its class index is well defined within the table.
    let cfg = Config::default();
    let cases: Vec<(PermGroup, PermGroup)> = vec![
        (sym_group(5), alt_group(5)),
        (sym_group(4), sym_group(4)),
        (dihedral_group(6), dihedral_group(6)),
        (agl1(5, 1).unwrap(), cyclic_group(5)),
    ];
    for (a, g) in cases {
        let table = a_classes(&a, &g, &cfg).unwrap();
        for class in table.classes() {
            let (p, s) = match class.prime_power {
                PrimePowerOrder::Prime { prime, exponent } => (prime, exponent),
                _ => continue,
            };
            let order = class.element_order;
            for b in 1..order {
                if num_integer_gcd(b as u64, p) != 1 {
                    continue;
                }
                let powered = class.rep.pow(b as i64);
                assert_eq!(powered.order(), order, "power {} of order-{} rep", b, order);
                let _ = table.class_of(&powered).unwrap();
                let _ = s;
            }
        }
    }
}

fn num_integer_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_integer_gcd(b, a % b)
    }
}

#[test]
fn fusion_only_merges_classes_across_corpus_slice() {
    let cfg = Config::default();
    let pairs: Vec<(PermGroup, PermGroup)> = vec![
        (sym_group(5), alt_group(5)),
        (sym_group(4), group(4, &["(1 2)(3 4)", "(1 3)(2 4)"])),
        (sym_group(6), alt_group(6)),
        (dihedral_group(5), cyclic_group(5)),
    ];
    for (a, g) in pairs {
        let fused = m_invariant(&a, &g, &cfg).unwrap();
        let plain = m_invariant(&g, &g, &cfg).unwrap();
        assert!(fused.m <= plain.m);
        for (p, fused_count) in &fused.per_prime {
            assert!(fused_count <= &plain.per_prime[p]);
        }
    }
}

#[test]
fn affine_line_fuses_translations() {
    let cfg = Config::default();
    let a = agl1(5, 1).unwrap();
    let c5 = cyclic_group(5);
    let report = m_invariant(&a, &c5, &cfg).unwrap();
    assert_eq!(report.m, 2); // identity class + one fused nontrivial class
    assert_eq!(report.achieving_primes, vec![5]);
    assert_eq!(report.per_prime_excluding_identity()[&5], 1);
}

#[test]
fn trivial_group_conventions() {
    let cfg = Config::default();
    let t = PermGroup::trivial(3);
    let table = a_classes(&t, &t, &cfg).unwrap();
    assert_eq!(table.len(), 1);
    assert!(table.prime_power_class_indices().is_empty());
    let report = m_invariant(&t, &t, &cfg).unwrap();
    assert_eq!(report.m, 1);
    assert!(report.per_prime.is_empty());
}

#[test]
fn nontrivial_groups_have_m_at_least_two() {
    let cfg = Config::default();
    for g in [
        cyclic_group(2),
        cyclic_group(6),
        sym_group(3),
        alt_group(5),
        dihedral_group(4),
    ] {
        let report = m_invariant(&g, &g, &cfg).unwrap();
        assert!(report.m >= 2, "order {}", g.order());
    }
}

#[test]
fn prime_power_tags_agree_with_order_factorization() {
    let cfg = Config::default();
    for g in [sym_group(6), dihedral_group(10), alt_group(5)] {
        let table = a_classes(&g, &g, &cfg).unwrap();
        for class in table.classes() {
            let order = class.element_order as u64;
            let factors = factorize(order);
            let expected = factors.len() <= 1;
            assert_eq!(class.is_prime_power(), expected, "order {}", order);
            if let PrimePowerOrder::Prime { prime, exponent } = class.prime_power {
                assert_eq!(factors, vec![(prime, exponent)]);
            }
        }
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
