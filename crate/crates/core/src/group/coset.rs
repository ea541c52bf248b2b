//! Right-coset actions and action kernels (cores).

use std::collections::HashMap;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::chain::Chain;
use super::PermGroup;

/// The permutation representation of a group `A` on the right cosets of a
/// subgroup `U`, with explicit coset representatives.
///
/// Cosets are identified by a canonical representative: the element of `U·g`
/// whose image sequence on `U`'s base points is lexicographically least. The
/// base coset `U` has index 0.
#[derive(Clone, Debug)]
pub struct CosetActionMap {
    source: PermGroup,
    stabilizer: PermGroup,
    reps: Vec<Permutation>,
    gen_images: Vec<Permutation>,
    rep_index: HashMap<Permutation, usize>,
}

impl CosetActionMap {
    /// Number of cosets, i.e. the degree of the induced action.
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    /// The point stabilizer subgroup `U` the action was built from.
    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Induced permutations of the source generators, in generator order.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    /// Index of the coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Result<usize> {
        let canon = canonical_rep(self.stabilizer.chain(), g);
        self.rep_index.get(&canon).copied().ok_or(Error::NotAMember)
    }

    /// Induced permutation of an arbitrary element of the source group.
    pub fn image_of(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g) {
            return Err(Error::NotAMember);
        }
        let mut images = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            images.push(self.coset_of(&rep.then(g))?);
        }
        Permutation::from_images(images)
    }

    /// The induced action of the source group as a permutation group.
    pub fn image_group(&self) -> Result<PermGroup> {
        PermGroup::from_generators(self.reps.len(), self.gen_images.clone())
    }
}

/// Canonical representative of the right coset `U·g`: multiply by
/// transversal elements of `U`'s chain, level by level, minimising the image
/// of each base point.
fn canonical_rep(u_chain: &Chain, g: &Permutation) -> Permutation {
    let mut g = g.clone();
    for level in &u_chain.levels {
        if level.orbit.len() == 1 {
            continue;
        }
        let mut best_point = level.orbit[0];
        let mut best_image = g.apply(best_point);
        for &p in &level.orbit[1..] {
            let img = g.apply(p);
            if img < best_image {
                best_image = img;
                best_point = p;
            }
        }
        if best_point != level.base {
            let t = level.trans[best_point].as_ref().unwrap();
            g = t.then(&g);
        }
    }
    g
}

/// Builds the action of `a` on the right cosets of `u <= a`. The action is
/// transitive of degree `|a:u|` and the stabilizer of coset 0 is `u`.
pub fn coset_action(a: &PermGroup, u: &PermGroup, config: &Config) -> Result<CosetActionMap> {
    if a.degree() != u.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: u.degree(),
        });
    }
    if !a.contains_group(u) {
        return Err(Error::NotASubgroup(
            "coset action requires U <= A".into(),
        ));
    }
    let index = a.order() / u.order();
    if index > config.degree_cap as u128 {
        return Err(Error::DegreeCapExceeded {
            degree: usize::try_from(index).unwrap_or(usize::MAX),
            cap: config.degree_cap,
        });
    }
    let index = index as usize;

    let identity_rep = canonical_rep(u.chain(), &Permutation::identity(a.degree()));
    let mut reps = vec![identity_rep.clone()];
    let mut rep_index = HashMap::new();
    rep_index.insert(identity_rep, 0usize);
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); a.generators().len()];

    let mut idx = 0;
    while idx < reps.len() {
        let rep = reps[idx].clone();
        for (gi, s) in a.generators().iter().enumerate() {
            let moved = canonical_rep(u.chain(), &rep.then(s));
            let target = match rep_index.get(&moved) {
                Some(&t) => t,
                None => {
                    let t = reps.len();
                    reps.push(moved.clone());
                    rep_index.insert(moved, t);
                    t
                }
            };
            images[gi].push(target);
        }
        idx += 1;
    }

    if reps.len() != index {
        return Err(Error::Invalid(format!(
            "coset enumeration found {} cosets, expected {}",
            reps.len(),
            index
        )));
    }
    let gen_images = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetActionMap {
        source: a.clone(),
        stabilizer: u.clone(),
        reps,
        gen_images,
        rep_index,
    })
}

/// Kernel of the action of `a` on the cosets of `u`: the largest subgroup of
/// `u` that is normal in `a` (the `A`-core of `U`).
///
/// Computed as the pointwise stabilizer of the coset points in the combined
/// action of `a` on its own domain plus the coset space.
pub fn kernel_of_coset_action(a: &PermGroup, u: &PermGroup, config: &Config) -> Result<PermGroup> {
    let map = coset_action(a, u, config)?;
    let d = a.degree();
    let m = map.index();
    let combined: Vec<Permutation> = a
        .generators()
        .iter()
        .zip(map.generator_images())
        .map(|(g, phi)| {
            let mut images: Vec<usize> = g.images().to_vec();
            images.extend(phi.images().iter().map(|&x| x + d));
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let forced: Vec<usize> = (d..d + m).collect();
    let combined_group = PermGroup::from_gens_with_forced_base(d + m, combined, &forced)?;
    let kernel_gens: Vec<Permutation> = combined_group
        .chain()
        .prefix_stabilizer_gens()
        .into_iter()
        .map(|g| Permutation::from_images(g.images()[..d].to_vec()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(d, kernel_gens)
}

/// Alias for [`kernel_of_coset_action`].
pub fn core(a: &PermGroup, u: &PermGroup, config: &Config) -> Result<PermGroup> {
    kernel_of_coset_action(a, u, config)
}
