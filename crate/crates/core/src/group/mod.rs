//! Permutation groups from generators: stabilizer chains, order, membership,
//! deterministic element enumeration, orbits, primitivity, normality, normal
//! closures, intersections, coset actions and cores.

mod chain;
mod coset;

pub use coset::{core, coset_action, kernel_of_coset_action, CosetActionMap};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use chain::{Chain, ElementIter};

/// A permutation group given by generators, with a stabilizer-chain
/// certificate providing order, membership and enumeration.
///
/// Immutable after construction; safe to share read-only across tasks.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Chain,
    order: u128,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points. An empty
    /// generator list yields the trivial group.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Self::with_forced_base(degree, gens, &[])
    }

    fn with_forced_base(
        degree: usize,
        gens: Vec<Permutation>,
        forced_base: &[usize],
    ) -> Result<PermGroup> {
        let chain = Chain::build(degree, &gens, forced_base);
        let order = chain.order().ok_or(Error::OrderOverflow)?;
        Ok(PermGroup {
            degree,
            generators: gens,
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Base points of the stabilizer chain, in order.
    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    /// Set equality of the two generated groups.
    pub fn equals(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.contains_group(other)
    }

    /// Deterministic stream of all elements. The identity comes first and
    /// the order of the stream depends only on the generator list.
    pub fn elements(&self, config: &Config) -> Result<impl Iterator<Item = Permutation> + '_> {
        config.check_enumeration(self.order)?;
        Ok(ElementIter::new(&self.chain))
    }

    /// Orbit of a single point, sorted.
    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push(q);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Orbit partition, each orbit sorted, orbits ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if assigned[start] {
                continue;
            }
            let orbit = self.orbit_of(start);
            for &p in &orbit {
                assigned[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit_of(0).len() == self.degree
    }

    /// Stabilizer of `point`, via a chain whose base starts at `point`.
    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        let rebased = Chain::build(self.degree, &self.generators, &[point]);
        let gens = rebased.prefix_stabilizer_gens();
        PermGroup::from_generators(self.degree, gens).expect("stabilizer generators are valid")
    }

    /// Regular means transitive with trivial point stabilizers, i.e.
    /// order == degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order == self.degree as u128
    }

    pub fn is_abelian(&self) -> bool {
        for (i, g) in self.generators.iter().enumerate() {
            for h in &self.generators[i + 1..] {
                if g.then(h) != h.then(g) {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn chain(&self) -> &Chain {
        &self.chain
    }

    /// Read-only views of the stabilizer-chain levels, for chain-walking
    /// search algorithms.
    pub(crate) fn level_views(&self) -> Vec<LevelView<'_>> {
        self.chain
            .levels
            .iter()
            .map(|l| LevelView {
                base: l.base,
                orbit: &l.orbit,
                trans: &l.trans,
            })
            .collect()
    }

    pub(crate) fn from_gens_with_forced_base(
        degree: usize,
        gens: Vec<Permutation>,
        forced_base: &[usize],
    ) -> Result<PermGroup> {
        Self::with_forced_base(degree, gens, forced_base)
    }
}

/// Read-only view of one stabilizer-chain level.
pub(crate) struct LevelView<'a> {
    pub base: usize,
    pub orbit: &'a [usize],
    trans: &'a [Option<Permutation>],
}

impl LevelView<'_> {
    pub fn transversal(&self, point: usize) -> &Permutation {
        self.trans[point].as_ref().expect("point lies in the orbit")
    }
}

/// Primitivity verdict; the witness is a minimal nontrivial block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockVerdict {
    Primitive,
    /// A minimal block containing `{0, beta}` for the smallest failing
    /// `beta`, sorted ascending.
    Imprimitive { block: Vec<usize> },
}

impl BlockVerdict {
    pub fn is_primitive(&self) -> bool {
        matches!(self, BlockVerdict::Primitive)
    }
}

/// Minimal-block primitivity test. Requires transitivity and degree >= 2.
pub fn is_primitive(g: &PermGroup) -> Result<BlockVerdict> {
    if g.degree() < 2 || !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    for beta in 1..g.degree() {
        let block = minimal_block(g, 0, beta);
        if block.len() < g.degree() {
            return Ok(BlockVerdict::Imprimitive { block });
        }
    }
    Ok(BlockVerdict::Primitive)
}

/// The finest block system in which `a` and `b` share a block, returned as
/// the block containing them (union-find merge of images).
fn minimal_block(g: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue: Vec<(usize, usize)> = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    parent[rb] = ra;
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        for gen in g.generators() {
            let (gx, gy) = (gen.apply(x), gen.apply(y));
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry] = rx;
                queue.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..n).filter(|&x| find(&mut parent, x) == root).collect()
}

/// Expands a block into the full block system it generates (its orbit under
/// the group).
pub fn block_system(g: &PermGroup, block: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = vec![block.to_vec()];
    let mut seen: std::collections::HashSet<Vec<usize>> = blocks.iter().cloned().collect();
    let mut head = 0;
    while head < blocks.len() {
        let current = blocks[head].clone();
        head += 1;
        for gen in g.generators() {
            let mut image: Vec<usize> = current.iter().map(|&p| gen.apply(p)).collect();
            image.sort_unstable();
            if seen.insert(image.clone()) {
                blocks.push(image);
            }
        }
    }
    blocks.sort();
    blocks
}

/// Checks `h <= a` (else error) and then whether `a` normalizes `h`.
pub fn is_normal(a: &PermGroup, h: &PermGroup) -> Result<bool> {
    if a.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: h.degree(),
        });
    }
    if !a.contains_group(h) {
        return Err(Error::NotASubgroup(
            "candidate normal subgroup is not contained in the ambient group".into(),
        ));
    }
    for x in h.generators() {
        for g in a.generators() {
            if !h.contains(&x.conjugate_by(g)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest normal subgroup of `a` containing `seeds`.
pub fn normal_closure(a: &PermGroup, seeds: &[Permutation]) -> Result<PermGroup> {
    for s in seeds {
        if !a.contains(s) {
            return Err(Error::NotAMember);
        }
    }
    let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    let mut group = PermGroup::from_generators(a.degree(), gens.clone())?;
    loop {
        let mut added = Vec::new();
        for x in &gens {
            for g in a.generators() {
                let c = x.conjugate_by(g);
                if !group.contains(&c) && !added.contains(&c) {
                    added.push(c);
                }
            }
        }
        if added.is_empty() {
            return Ok(group);
        }
        gens.extend(added);
        group = PermGroup::from_generators(a.degree(), gens.clone())?;
    }
}

/// Intersection of two groups on a common domain, by streaming the smaller
/// group through the other's membership test. The walk over the smaller
/// group's chain is bounded by the enumeration cap.
pub fn intersection(g: &PermGroup, h: &PermGroup, config: &Config) -> Result<PermGroup> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    let (small, big) = if g.order() <= h.order() { (g, h) } else { (h, g) };
    config.check_enumeration(small.order())?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut result = PermGroup::trivial(g.degree());
    for e in small.elements(config)? {
        if e.is_identity() || result.contains(&e) {
            continue;
        }
        if big.contains(&e) {
            gens.push(e);
            result = PermGroup::from_generators(g.degree(), gens.clone())?;
        }
    }
    Ok(result)
}
