//! A deterministic corpus of transitive permutation groups of degree 2..=16,
//! used by the derangement property suite and assorted structural tests.

use std::collections::HashSet;

use crate::config::Config;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::{
    agl1, alt_group, cyclic_group, dihedral_group, frobenius_group, gl_generators,
    named_group, pgl2, psl2, quaternion_regular, regular_representation, sym_group,
    translation_gens, wreath_product, GroupElementTable,
};

/// Direct product of two groups acting on the disjoint union of their
/// domains (intransitive; used as input to regular representations).
fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let da = a.degree();
    let db = b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = g.images().to_vec();
        images.extend(da..da + db);
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..da).collect();
        images.extend(g.images().iter().map(|&x| x + da));
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::from_generators(da + db, gens)
}

/// Right-regular representation of a small group.
fn regular_of(g: &PermGroup) -> Result<PermGroup> {
    let table = GroupElementTable::from_generators(g.generators().to_vec(), 64)?;
    regular_representation(&table)
}

/// Builds the corpus: every entry is transitive of degree 2..=16, and
/// entries are distinct as permutation groups. Sorted by
/// (degree, order, name).
pub fn transitive_corpus(config: &Config) -> Result<Vec<(String, PermGroup)>> {
    let mut raw: Vec<(String, PermGroup)> = Vec::new();
    let push = |raw: &mut Vec<(String, PermGroup)>, name: String, g: PermGroup| {
        raw.push((name, g));
    };

    for n in 2..=16usize {
        push(&mut raw, format!("c{}", n), cyclic_group(n));
    }
    for n in 3..=16usize {
        push(&mut raw, format!("d{}", n), dihedral_group(n));
    }
    for n in 2..=16usize {
        push(&mut raw, format!("sym{}", n), sym_group(n));
    }
    for n in 3..=16usize {
        push(&mut raw, format!("alt{}", n), alt_group(n));
    }

    // Frobenius groups C_p ⋊ C_k over prime fields.
    for &p in &[5u64, 7, 11, 13] {
        let mut k = 2;
        while k <= p - 1 {
            if (p - 1) % k == 0 {
                push(
                    &mut raw,
                    format!("frob_{}_{}", p, k),
                    frobenius_group(p, 1, k)?,
                );
            }
            k += 1;
        }
    }
    // Affine lines and their Frobenius subgroups over extension fields.
    for &(p, d) in &[(2u64, 2usize), (2, 3), (3, 2), (2, 4)] {
        let q = p.pow(d as u32);
        push(&mut raw, format!("agl1_{}", q), agl1(p, d)?);
        let mut k = 2;
        while k < q - 1 {
            if (q - 1) % k == 0 {
                push(
                    &mut raw,
                    format!("frob_{}_{}", q, k),
                    frobenius_group(p, d, k)?,
                );
            }
            k += 1;
        }
    }

    // Full affine groups.
    for &(d, p) in &[(2usize, 2u64), (3, 2), (4, 2), (2, 3)] {
        let degree = (p as usize).pow(d as u32);
        let mut gens = translation_gens(d, p)?;
        for m in gl_generators(d, p) {
            gens.push(m.to_vector_perm()?);
        }
        push(
            &mut raw,
            format!("agl_{}_{}", d, p),
            PermGroup::from_generators(degree, gens)?,
        );
    }
    // Sylow 2-subgroup of AGL(3,2): translations plus unitriangular matrices.
    {
        let mut gens = translation_gens(3, 2)?;
        gens.push(super::field::Matrix::transvection(3, 2, 0, 1).to_vector_perm()?);
        gens.push(super::field::Matrix::transvection(3, 2, 1, 2).to_vector_perm()?);
        push(
            &mut raw,
            "agl32_sylow2".into(),
            PermGroup::from_generators(8, gens)?,
        );
    }

    // Projective groups on q + 1 points.
    for &(p, d) in &[(5u64, 1usize), (7, 1), (3, 2), (11, 1), (13, 1)] {
        let q = p.pow(d as u32);
        push(&mut raw, format!("psl2_{}", q), psl2(p, d)?);
    }
    for &(p, d) in &[(3u64, 1usize), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)] {
        let q = p.pow(d as u32);
        push(&mut raw, format!("pgl2_{}", q), pgl2(p, d)?);
    }

    // Regular representations of assorted small groups.
    let klein4 = named_group("klein4").unwrap();
    let regular_sources: Vec<(String, PermGroup)> = vec![
        ("q8".into(), quaternion_regular()?),
        ("klein4_reg".into(), klein4.clone()),
        ("c2xc4_reg".into(), direct_product(&cyclic_group(2), &cyclic_group(4))?),
        ("c2cubed_reg".into(), direct_product(&cyclic_group(2), &klein4)?),
        ("c3xc3_reg".into(), direct_product(&cyclic_group(3), &cyclic_group(3))?),
        ("c2xc6_reg".into(), direct_product(&cyclic_group(2), &cyclic_group(6))?),
        ("c2xc8_reg".into(), direct_product(&cyclic_group(2), &cyclic_group(8))?),
        ("c4xc4_reg".into(), direct_product(&cyclic_group(4), &cyclic_group(4))?),
        ("c2xc2xc4_reg".into(), direct_product(&klein4, &cyclic_group(4))?),
        ("c2fourth_reg".into(), direct_product(&klein4, &klein4)?),
        ("sym3_reg".into(), sym_group(3)),
        ("alt4_reg".into(), alt_group(4)),
        ("d4_reg".into(), dihedral_group(4)),
        ("d8_reg".into(), dihedral_group(8)),
        ("sym3xc2_reg".into(), direct_product(&sym_group(3), &cyclic_group(2))?),
        ("d4xc2_reg".into(), direct_product(&dihedral_group(4), &cyclic_group(2))?),
        ("q8xc2_reg".into(), direct_product(&quaternion_regular()?, &cyclic_group(2))?),
        ("d5_reg".into(), dihedral_group(5)),
        ("f20_reg".into(), frobenius_group(5, 1, 4)?),
    ];
    for (name, g) in regular_sources {
        if g.order() <= 16 {
            push(&mut raw, format!("reg_{}", name), regular_of(&g)?);
        }
    }

    // Imprimitive wreath products T ≀ H with degree(T)·degree(H) <= 16.
    let catalog: Vec<(String, PermGroup)> = vec![
        ("c2".into(), cyclic_group(2)),
        ("c3".into(), cyclic_group(3)),
        ("sym3".into(), sym_group(3)),
        ("c4".into(), cyclic_group(4)),
        ("klein4".into(), klein4.clone()),
        ("d4".into(), dihedral_group(4)),
        ("alt4".into(), alt_group(4)),
        ("sym4".into(), sym_group(4)),
        ("c5".into(), cyclic_group(5)),
        ("d5".into(), dihedral_group(5)),
        ("f20".into(), frobenius_group(5, 1, 4)?),
        ("alt5".into(), alt_group(5)),
        ("sym5".into(), sym_group(5)),
        ("c6".into(), cyclic_group(6)),
        ("d6".into(), dihedral_group(6)),
        ("sym3reg".into(), regular_of(&sym_group(3))?),
        ("c7".into(), cyclic_group(7)),
        ("d7".into(), dihedral_group(7)),
        ("f21".into(), frobenius_group(7, 1, 3)?),
        ("f42".into(), frobenius_group(7, 1, 6)?),
        ("c8".into(), cyclic_group(8)),
        ("d8n".into(), dihedral_group(8)),
        ("q8reg".into(), quaternion_regular()?),
        ("c2cubedreg".into(), regular_of(&direct_product(&cyclic_group(2), &klein4)?)?),
        ("agl18".into(), agl1(2, 3)?),
        ("psl27".into(), psl2(7, 1)?),
    ];
    for (tn, t) in &catalog {
        for (hn, h) in &catalog {
            let k = h.degree();
            if t.degree() * k > 16 || k < 2 {
                continue;
            }
            push(
                &mut raw,
                format!("wr_{}_{}", tn, hn),
                wreath_product(t, h, k, config)?,
            );
        }
    }

    // Dedup: exact element set for small groups, generator lists otherwise.
    let mut seen: HashSet<String> = HashSet::new();
    let mut corpus: Vec<(String, PermGroup)> = Vec::new();
    for (name, g) in raw {
        debug_assert!(g.is_transitive(), "corpus entry {} is not transitive", name);
        let key = if g.order() <= 4096 {
            let mut elems: Vec<Permutation> = g.elements(config)?.collect();
            elems.sort();
            format!(
                "d{}:e{:?}",
                g.degree(),
                elems.iter().map(|p| p.images().to_vec()).collect::<Vec<_>>()
            )
        } else {
            let mut gens: Vec<String> = g.generators().iter().map(|p| p.cycle_string()).collect();
            gens.sort();
            format!("d{}:o{}:g{:?}", g.degree(), g.order(), gens)
        };
        if seen.insert(key) {
            corpus.push((name, g));
        }
    }
    corpus.sort_by(|a, b| {
        (a.1.degree(), a.1.order(), &a.0).cmp(&(b.1.degree(), b.1.order(), &b.0))
    });
    Ok(corpus)
}
