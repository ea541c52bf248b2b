//! Structural analysis: minimal normal subgroups, socle, plinths, innate
//! transitivity, orbit decompositions under a normal subgroup, the class
//! graph on minimal normal subgroups, and greedy vertex colouring.

use serde::Serialize;

use crate::classes::a_classes;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{is_normal, is_primitive, normal_closure, BlockVerdict, PermGroup};
use crate::perm::Permutation;

/// All inclusion-minimal nontrivial normal subgroups of `g`.
///
/// Every minimal normal subgroup is the normal closure of any of its
/// nontrivial elements, so the closures of class representatives exhaust the
/// candidates; duplicates are removed by order plus mutual containment.
pub fn minimal_normal_subgroups(g: &PermGroup, config: &Config) -> Result<Vec<PermGroup>> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    let table = a_classes(g, g, config)?;
    let mut closures: Vec<PermGroup> = Vec::new();
    for class in table.classes() {
        if class.rep.is_identity() {
            continue;
        }
        let n = normal_closure(g, std::slice::from_ref(&class.rep))?;
        if !closures.iter().any(|m| m.equals(&n)) {
            closures.push(n);
        }
    }
    // Keep inclusion-minimal ones.
    let minimal: Vec<PermGroup> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && n.contains_group(m))
        })
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by_key(|n| n.order());
    Ok(minimal)
}

/// Subgroup generated by all minimal normal subgroups.
pub fn socle(g: &PermGroup, config: &Config) -> Result<PermGroup> {
    let minimals = minimal_normal_subgroups(g, config)?;
    let gens: Vec<Permutation> = minimals
        .iter()
        .flat_map(|n| n.generators().iter().cloned())
        .collect();
    PermGroup::from_generators(g.degree(), gens)
}

/// Transitive minimal normal subgroups of a transitive group.
pub fn plinths(g: &PermGroup, config: &Config) -> Result<Vec<PermGroup>> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(minimal_normal_subgroups(g, config)?
        .into_iter()
        .filter(|n| n.is_transitive())
        .collect())
}

pub fn is_innately_transitive(g: &PermGroup, config: &Config) -> Result<bool> {
    Ok(!plinths(g, config)?.is_empty())
}

/// Full structural analysis of a transitive group.
#[derive(Clone, Debug)]
pub struct StructureAnalysis {
    pub minimal_normals: Vec<PermGroup>,
    pub socle: PermGroup,
    /// Indices into `minimal_normals` of the transitive ones.
    pub plinth_indices: Vec<usize>,
    pub innately_transitive: bool,
    pub primitive: bool,
}

impl StructureAnalysis {
    pub fn plinths(&self) -> Vec<&PermGroup> {
        self.plinth_indices
            .iter()
            .map(|&i| &self.minimal_normals[i])
            .collect()
    }

    pub fn report(&self) -> StructureReport {
        StructureReport {
            degree: self.socle.degree(),
            minimal_normals: self
                .minimal_normals
                .iter()
                .map(GroupSummary::of)
                .collect(),
            socle: GroupSummary::of(&self.socle),
            plinths: self
                .plinth_indices
                .iter()
                .map(|&i| PlinthSummary {
                    minimal_normal_index: i,
                    order: self.minimal_normals[i].order() as u64,
                    regular: self.minimal_normals[i].is_regular(),
                })
                .collect(),
            innately_transitive: self.innately_transitive,
            primitive: self.primitive,
        }
    }
}

/// Serializable structure report with deterministic field order.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub degree: usize,
    pub minimal_normals: Vec<GroupSummary>,
    pub socle: GroupSummary,
    pub plinths: Vec<PlinthSummary>,
    pub innately_transitive: bool,
    pub primitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub order: u64,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn of(g: &PermGroup) -> GroupSummary {
        GroupSummary {
            order: g.order() as u64,
            generators: g.generators().iter().map(|p| p.cycle_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlinthSummary {
    pub minimal_normal_index: usize,
    pub order: u64,
    pub regular: bool,
}

pub fn analyze(g: &PermGroup, config: &Config) -> Result<StructureAnalysis> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let minimal_normals = minimal_normal_subgroups(g, config)?;
    let gens: Vec<Permutation> = minimal_normals
        .iter()
        .flat_map(|n| n.generators().iter().cloned())
        .collect();
    let socle = PermGroup::from_generators(g.degree(), gens)?;
    let plinth_indices: Vec<usize> = (0..minimal_normals.len())
        .filter(|&i| minimal_normals[i].is_transitive())
        .collect();
    let primitive = g.degree() >= 2 && matches!(is_primitive(g)?, BlockVerdict::Primitive);
    Ok(StructureAnalysis {
        innately_transitive: !plinth_indices.is_empty(),
        minimal_normals,
        socle,
        plinth_indices,
        primitive,
    })
}

/// The orbits of a normal subgroup `g` of a transitive group `a`, ordered
/// with the orbit of point 0 first and the rest by least point. Verifies
/// that `a` permutes the orbits transitively.
pub fn g_orbit_decomposition(a: &PermGroup, g: &PermGroup) -> Result<Vec<Vec<usize>>> {
    if !a.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if !is_normal(a, g)? {
        return Err(Error::NotNormal);
    }
    let mut orbits = g.orbits();
    // Point 0's orbit first; orbits() already sorts the rest by least point.
    let zero_pos = orbits
        .iter()
        .position(|o| o.contains(&0))
        .expect("point 0 lies in some orbit");
    orbits.swap(0, zero_pos);
    if zero_pos != 0 {
        orbits[1..].sort();
    }

    // The induced action of `a` on the orbit list must be transitive.
    let orbit_index: Vec<usize> = {
        let mut idx = vec![0usize; a.degree()];
        for (k, orbit) in orbits.iter().enumerate() {
            for &p in orbit {
                idx[p] = k;
            }
        }
        idx
    };
    let n = orbits.len();
    let mut induced: Vec<Permutation> = Vec::new();
    for gen in a.generators() {
        let mut images = vec![usize::MAX; n];
        for (k, orbit) in orbits.iter().enumerate() {
            let target = orbit_index[gen.apply(orbit[0])];
            // Normality guarantees the whole orbit maps into one orbit.
            images[k] = target;
        }
        induced.push(Permutation::from_images(images).map_err(|_| {
            Error::Invalid("normal subgroup orbits are not permuted consistently".into())
        })?);
    }
    let quotient = PermGroup::from_generators(n, induced)?;
    if !quotient.is_transitive() {
        return Err(Error::Invalid(
            "ambient group does not permute the orbits transitively".into(),
        ));
    }
    Ok(orbits)
}

/// Restriction of a permutation to an invariant point set, reindexed by the
/// sorted order of the set.
fn restrict(p: &Permutation, points: &[usize]) -> Result<Permutation> {
    let pos: std::collections::HashMap<usize, usize> =
        points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let images = points
        .iter()
        .map(|&x| {
            pos.get(&p.apply(x)).copied().ok_or_else(|| {
                Error::Invalid("point set is not invariant under the permutation".into())
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Permutation::from_images(images)
}

/// Image of a group on an invariant point set.
pub fn image_on(g: &PermGroup, points: &[usize]) -> Result<PermGroup> {
    let gens = g
        .generators()
        .iter()
        .map(|p| restrict(p, points))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(points.len(), gens)
}

/// Graph on the minimal normal subgroups of `g`: `{S_i, S_j}` is an edge if
/// some `g`-orbit sees the socle acting exactly as the image of `S_i × S_j`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassGraph {
    pub vertices: Vec<GroupSummary>,
    /// Edges (i, j, witnessing orbit index) with i < j.
    pub edges: Vec<(usize, usize, usize)>,
    pub max_degree: usize,
    pub colouring: Vec<usize>,
    /// Number of g-orbits, the upper bound for the edge count.
    pub orbit_count: usize,
}

impl ClassGraph {
    pub fn colour_count(&self) -> usize {
        self.colouring.iter().copied().max().map_or(0, |c| c + 1)
    }

    /// DOT rendering for external tools.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph class_graph {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  s{} [label=\"S{} (order {}, colour {})\"];\n",
                i, i, v.order, self.colouring[i]
            ));
        }
        for &(i, j, k) in &self.edges {
            out.push_str(&format!("  s{} -- s{} [label=\"orbit {}\"];\n", i, j, k));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the class graph for `g` normal in the transitive group `a`, both
/// acting on the common domain. Rejects abelian minimal normal subgroups
/// with a typed error; the construction is meaningful only for nonabelian
/// socle configurations.
pub fn class_graph(a: &PermGroup, g: &PermGroup, config: &Config) -> Result<ClassGraph> {
    let orbits = g_orbit_decomposition(a, g)?;
    let minimals = minimal_normal_subgroups(g, config)?;
    if minimals.is_empty() {
        return Err(Error::AbelianSocle);
    }
    for m in &minimals {
        if m.is_abelian() {
            return Err(Error::AbelianSocle);
        }
    }
    let socle_gens: Vec<Permutation> = minimals
        .iter()
        .flat_map(|n| n.generators().iter().cloned())
        .collect();
    let socle = PermGroup::from_generators(g.degree(), socle_gens)?;

    let t = minimals.len();
    let mut edges = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            let mut witness = None;
            for (k, orbit) in orbits.iter().enumerate() {
                let socle_image = image_on(&socle, orbit)?;
                let mut pair_gens: Vec<Permutation> = Vec::new();
                for p in minimals[i].generators().iter().chain(minimals[j].generators()) {
                    pair_gens.push(restrict(p, orbit)?);
                }
                let pair_image = PermGroup::from_generators(orbit.len(), pair_gens)?;
                if socle_image.equals(&pair_image) {
                    witness = Some(k);
                    break;
                }
            }
            if let Some(k) = witness {
                edges.push((i, j, k));
            }
        }
    }

    let mut degrees = vec![0usize; t];
    for &(i, j, _) in &edges {
        degrees[i] += 1;
        degrees[j] += 1;
    }
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let plain_edges: Vec<(usize, usize)> = edges.iter().map(|&(i, j, _)| (i, j)).collect();
    let colouring = greedy_colouring(t, &plain_edges);

    Ok(ClassGraph {
        vertices: minimals.iter().map(GroupSummary::of).collect(),
        edges,
        max_degree,
        colouring,
        orbit_count: orbits.len(),
    })
}

/// Greedy proper vertex colouring in vertex order; uses at most
/// `max_degree + 1` colours.
pub fn greedy_colouring(vertices: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![usize::MAX; vertices];
    for v in 0..vertices {
        let mut used: Vec<bool> = vec![false; adj[v].len() + 1];
        for &w in &adj[v] {
            if colour[w] != usize::MAX && colour[w] < used.len() {
                used[colour[w]] = true;
            }
        }
        colour[v] = (0..used.len()).find(|&c| !used[c]).unwrap();
    }
    colour
}
