//! Conjugacy class fusion: the partition of a normal subgroup `G` into
//! `A`-classes under conjugation by an overgroup `A`, prime-power class
//! inventories, and the class-count invariants `m` / `m₀`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{is_normal, PermGroup};
use crate::perm::{factorize, Permutation, PrimePowerOrder};

/// One fused class: canonical representative (the minimal class element in
/// enumeration order), size, element order, prime-power tag.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: Permutation,
    pub size: u64,
    pub element_order: u128,
    pub prime_power: PrimePowerOrder,
}

impl ClassInfo {
    pub fn is_prime_power(&self) -> bool {
        self.prime_power.is_prime_power()
    }
}

/// The partition of `G` into `A`-classes, with an element-to-class map over
/// the full enumeration of `G`.
#[derive(Clone, Debug)]
pub struct AClassTable {
    ambient: PermGroup,
    subject: PermGroup,
    classes: Vec<ClassInfo>,
    elem_class: HashMap<Permutation, usize>,
}

impl AClassTable {
    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn subject(&self) -> &PermGroup {
        &self.subject
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `x`; errors if `x` is not in `G`.
    pub fn class_of(&self, x: &Permutation) -> Result<usize> {
        self.elem_class.get(x).copied().ok_or(Error::NotAMember)
    }

    /// Indices of all prime-power classes, including the identity class.
    pub fn prime_power_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].is_prime_power())
            .collect()
    }

    /// For each prime dividing `|G|`: indices of classes whose element order
    /// is a power of that prime. The identity class appears in every prime's
    /// list. The trivial group yields an empty map.
    pub fn prime_power_class_indices(&self) -> BTreeMap<u64, Vec<usize>> {
        let order = self.subject.order();
        let mut map = BTreeMap::new();
        for (p, _) in factorize(order as u64) {
            let indices: Vec<usize> = (0..self.classes.len())
                .filter(|&i| self.classes[i].prime_power.is_power_of(p))
                .collect();
            map.insert(p, indices);
        }
        map
    }

    /// TSV export: one row per class.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("class_index\trep_cycles\tsize\torder\tprime_power\tprime\n");
        for (i, c) in self.classes.iter().enumerate() {
            let prime = match c.prime_power {
                PrimePowerOrder::Prime { prime, .. } => prime.to_string(),
                _ => "-".to_string(),
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                i,
                c.rep.cycle_string(),
                c.size,
                c.element_order,
                c.is_prime_power(),
                prime
            ));
        }
        out
    }
}

/// Computes the `A`-classes of the elements of `G`, for `G` normal in `A`.
///
/// Full element enumeration of `G` with a marking sweep: each unmarked
/// element seeds a breadth-first conjugation orbit over `A`'s generators.
/// Classes are sorted by (element order, class size, first-seen index).
pub fn a_classes(a: &PermGroup, g: &PermGroup, config: &Config) -> Result<AClassTable> {
    if !is_normal(a, g)? {
        return Err(Error::NotNormal);
    }
    config.check_enumeration(g.order())?;

    let elems: Vec<Permutation> = g.elements(config)?.collect();
    let mut index_of: HashMap<Permutation, usize> = HashMap::with_capacity(elems.len());
    for (i, e) in elems.iter().enumerate() {
        index_of.insert(e.clone(), i);
    }

    let unassigned = usize::MAX;
    let mut class_id = vec![unassigned; elems.len()];
    let mut seeds: Vec<usize> = Vec::new();
    let mut sizes: Vec<u64> = Vec::new();

    for start in 0..elems.len() {
        if class_id[start] != unassigned {
            continue;
        }
        let cid = seeds.len();
        seeds.push(start);
        sizes.push(0);
        let mut queue = vec![start];
        class_id[start] = cid;
        let mut head = 0;
        while head < queue.len() {
            let idx = queue[head];
            head += 1;
            sizes[cid] += 1;
            let x = &elems[idx];
            for gen in a.generators() {
                let y = x.conjugate_by(gen);
                let yi = *index_of.get(&y).ok_or_else(|| {
                    Error::Invalid(
                        "conjugate left the subgroup; normality check was violated".into(),
                    )
                })?;
                if class_id[yi] == unassigned {
                    class_id[yi] = cid;
                    queue.push(yi);
                }
            }
        }
    }

    // Sort classes by (element order, size, first-seen index) and remap ids.
    let mut order_keys: Vec<(u128, u64, usize)> = seeds
        .iter()
        .enumerate()
        .map(|(cid, &seed)| (elems[seed].order(), sizes[cid], cid))
        .collect();
    order_keys.sort();
    let mut new_id = vec![0usize; seeds.len()];
    for (new, &(_, _, old)) in order_keys.iter().enumerate() {
        new_id[old] = new;
    }

    let classes: Vec<ClassInfo> = order_keys
        .iter()
        .map(|&(element_order, size, old)| {
            let rep = elems[seeds[old]].clone();
            let prime_power = rep.prime_power_order();
            ClassInfo {
                rep,
                size,
                element_order,
                prime_power,
            }
        })
        .collect();

    let mut elem_class = HashMap::with_capacity(elems.len());
    for (i, e) in elems.into_iter().enumerate() {
        elem_class.insert(e, new_id[class_id[i]]);
    }

    Ok(AClassTable {
        ambient: a.clone(),
        subject: g.clone(),
        classes,
        elem_class,
    })
}

/// Per-prime counts of `A`-classes of prime-power-order elements, the
/// maximum `m` over primes, and the primes achieving it. The identity class
/// is included in every prime's count.
#[derive(Clone, Debug, Serialize)]
pub struct MInvariantReport {
    /// prime -> number of classes of elements of p-power order.
    pub per_prime: BTreeMap<u64, u64>,
    /// Maximum count over primes (1 for the trivial group).
    pub m: u64,
    pub achieving_primes: Vec<u64>,
}

impl MInvariantReport {
    /// Counts with the identity class excluded, for comparison.
    pub fn per_prime_excluding_identity(&self) -> BTreeMap<u64, u64> {
        self.per_prime.iter().map(|(&p, &c)| (p, c - 1)).collect()
    }
}

/// Computes the class-count invariant for `G` under fusion by `A`. Using
/// `A = G` gives the plain conjugacy-class count (the `m₀` flavour); an
/// automorphism-realizing overgroup gives the fused count.
pub fn m_invariant(a: &PermGroup, g: &PermGroup, config: &Config) -> Result<MInvariantReport> {
    let table = a_classes(a, g, config)?;
    Ok(m_invariant_from_table(&table))
}

pub fn m_invariant_from_table(table: &AClassTable) -> MInvariantReport {
    let per_prime: BTreeMap<u64, u64> = table
        .prime_power_class_indices()
        .into_iter()
        .map(|(p, v)| (p, v.len() as u64))
        .collect();
    let m = per_prime.values().copied().max().unwrap_or(1);
    let achieving_primes = per_prime
        .iter()
        .filter(|(_, &c)| c == m)
        .map(|(&p, _)| p)
        .collect();
    MInvariantReport {
        per_prime,
        m,
        achieving_primes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens = gens.iter().map(|s| perm(s, degree)).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    fn alt5() -> PermGroup {
        group(5, &["(1 2 3 4 5)", "(1 2 3)"])
    }

    fn sym5() -> PermGroup {
        group(5, &["(1 2)", "(1 2 3 4 5)"])
    }

    #[test]
    fn alt5_self_classes() {
        let cfg = Config::default();
        let table = a_classes(&alt5(), &alt5(), &cfg).unwrap();
        let mut sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(table.classes().iter().map(|c| c.size).sum::<u64>(), 60);
    }

    #[test]
    fn alt5_fused_by_sym5() {
        let cfg = Config::default();
        let table = a_classes(&sym5(), &alt5(), &cfg).unwrap();
        // The two classes of 5-cycles fuse.
        assert_eq!(table.len(), 4);
        let mut sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 15, 20, 24]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let cfg = Config::default();
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let table = a_classes(&c6, &c6, &cfg).unwrap();
        assert_eq!(table.len(), 6);
        assert!(table.classes().iter().all(|c| c.size == 1));
    }

    #[test]
    fn prime_power_lists() {
        let cfg = Config::default();
        let table = a_classes(&alt5(), &alt5(), &cfg).unwrap();
        let lists = table.prime_power_class_indices();
        assert_eq!(lists[&5].len(), 3); // identity + two 5-classes
        assert_eq!(lists[&2].len(), 2);
        assert_eq!(lists[&3].len(), 2);

        let fused = a_classes(&sym5(), &alt5(), &cfg).unwrap();
        assert_eq!(fused.prime_power_class_indices()[&5].len(), 2);
    }

    #[test]
    fn m_invariants_alt5() {
        let cfg = Config::default();
        let m0 = m_invariant(&alt5(), &alt5(), &cfg).unwrap();
        assert_eq!(m0.m, 3);
        assert_eq!(m0.achieving_primes, vec![5]);
        let m = m_invariant(&sym5(), &alt5(), &cfg).unwrap();
        assert_eq!(m.m, 2);
        // Fusion only merges classes.
        assert!(m.m <= m0.m);
    }

    #[test]
    fn class_of_lookups() {
        let cfg = Config::default();
        let table = a_classes(&sym5(), &alt5(), &cfg).unwrap();
        let id_class = table.class_of(&Permutation::identity(5)).unwrap();
        assert_eq!(table.classes()[id_class].size, 1);
        // x and x^a in the same class for every generator a.
        let x = perm("(1 2 3 4 5)", 5);
        for a in sym5().generators() {
            assert_eq!(
                table.class_of(&x).unwrap(),
                table.class_of(&x.conjugate_by(a)).unwrap()
            );
        }
        // A 5-cycle and its square are conjugate under Sym(5).
        assert_eq!(
            table.class_of(&x).unwrap(),
            table.class_of(&x.pow(2)).unwrap()
        );
        assert!(table.class_of(&perm("(1 2)", 5)).is_err());
    }

    #[test]
    fn refinement_under_fusion() {
        // Every A-class is a union of G-classes.
        let cfg = Config::default();
        let fine = a_classes(&alt5(), &alt5(), &cfg).unwrap();
        let coarse = a_classes(&sym5(), &alt5(), &cfg).unwrap();
        for c in fine.classes() {
            let target = coarse.class_of(&c.rep).unwrap();
            // All elements of the fine class land in the same coarse class.
            let cfg2 = Config::default();
            for e in alt5().elements(&cfg2).unwrap() {
                if fine.class_of(&e).unwrap() == fine.class_of(&c.rep).unwrap() {
                    assert_eq!(coarse.class_of(&e).unwrap(), target);
                }
            }
        }
    }

    #[test]
    fn tsv_export_shape() {
        let cfg = Config::default();
        let table = a_classes(&alt5(), &alt5(), &cfg).unwrap();
        let tsv = table.to_tsv();
        assert_eq!(tsv.lines().count(), 6);
        assert!(tsv.starts_with("class_index\t"));
    }

    #[test]
    fn rejects_non_normal() {
        let cfg = Config::default();
        let s5 = sym5();
        let c2 = group(5, &["(1 2)"]);
        assert!(matches!(
            a_classes(&s5, &c2, &cfg),
            Err(Error::NotNormal)
        ));
    }
}
