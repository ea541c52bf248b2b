//! Shared helpers for integration tests: independent brute-force oracles
//! that never touch the stabilizer-chain code paths they check.

#![allow(dead_code)]

use std::collections::HashSet;

use ppcover_core::perm::Permutation;
use ppcover_core::PermGroup;

pub fn perm(text: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(text, degree).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens.iter().map(|s| perm(s, degree)).collect();
    PermGroup::from_generators(degree, gens).unwrap()
}

/// Brute-force closure of a generator list under composition; independent of
/// the chain machinery.
pub fn brute_force_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let mut elements: HashSet<Permutation> = HashSet::new();
    let identity = Permutation::identity(degree);
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(current) = frontier.pop() {
        for g in gens {
            let next = current.compose(g).unwrap();
            if elements.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    elements
}

/// Brute-force conjugation orbits of `subject`'s elements under conjugation
/// by all elements of `ambient`.
pub fn brute_force_classes(
    ambient: &HashSet<Permutation>,
    subject: &HashSet<Permutation>,
) -> Vec<HashSet<Permutation>> {
    let mut remaining: HashSet<Permutation> = subject.clone();
    let mut classes = Vec::new();
    while let Some(seed) = remaining.iter().min().cloned() {
        let class: HashSet<Permutation> = ambient
            .iter()
            .map(|a| seed.conjugate_by(a))
            .collect();
        for x in &class {
            assert!(
                remaining.remove(x) || !subject.contains(x),
                "class escaped the subject set"
            );
        }
        classes.push(class);
    }
    classes
}

/// Exhaustive block-system search: all nontrivial proper partitions stable
/// under the group, checked directly. Returns true iff primitive.
pub fn brute_force_primitive(elements: &HashSet<Permutation>, degree: usize) -> bool {
    // Try every candidate block containing point 0 (subsets of size dividing
    // the degree); feasible for tiny degrees only.
    assert!(degree <= 8, "oracle is exponential");
    let point_sets: Vec<Vec<usize>> = (1..(1u32 << (degree - 1)))
        .map(|mask| {
            let mut block = vec![0usize];
            for p in 1..degree {
                if mask & (1 << (p - 1)) != 0 {
                    block.push(p);
                }
            }
            block
        })
        .collect();
    'candidates: for block in point_sets {
        if block.len() == 1 || block.len() == degree || degree % block.len() != 0 {
            continue;
        }
        let block_set: HashSet<usize> = block.iter().copied().collect();
        for g in elements {
            let image: HashSet<usize> = block.iter().map(|&p| g.apply(p)).collect();
            let overlap = image.intersection(&block_set).count();
            if overlap != 0 && overlap != block.len() {
                continue 'candidates;
            }
        }
        return false; // found a nontrivial block
    }
    true
}
