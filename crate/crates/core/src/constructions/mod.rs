//! Builders for the example families and supporting constructions: affine
//! groups, Singer cycles, extraspecial normalisers via holomorphs, wreath
//! products, regular representations, and automorphism extension from
//! generator images.

pub mod corpus;
pub mod field;

use std::collections::HashMap;

use serde::Serialize;

use crate::config::Config;
use crate::covering::subgroup_lattice;
use crate::error::{Error, Result};
use crate::group::{is_normal, PermGroup};
use crate::perm::Permutation;

use field::{
    companion_matrix, is_prime, primitive_polynomial, primitive_root, translation_perm,
    vector_index, Matrix,
};

/// Which point-stabilizer complement an affine builder uses.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineHChoice {
    /// All of GL(d, p).
    Full,
    /// The Singer cycle GL_1(p^d).
    Singer,
    /// Caller-supplied matrices.
    Custom(Vec<Matrix>),
}

impl AffineHChoice {
    pub fn label(&self) -> &'static str {
        match self {
            AffineHChoice::Full => "full",
            AffineHChoice::Singer => "singer",
            AffineHChoice::Custom(_) => "custom",
        }
    }
}

/// Family parameters, for manifests.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyTag {
    Affine {
        d: usize,
        p: u64,
        h_choice: String,
    },
    Extraspecial {
        r: u64,
        u_index: usize,
        u_choice_count: usize,
    },
    Wreath {
        t_degree: usize,
        t_order: u64,
        h_degree: usize,
        h_order: u64,
        k: usize,
    },
}

/// A constructed `(A, G, U)` triple with family provenance.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub a: PermGroup,
    pub g: PermGroup,
    pub u: PermGroup,
}

/// Generator of `GL_1(p^d)` as the companion matrix of the least primitive
/// polynomial; its multiplicative order `p^d - 1` is verified.
pub fn singer_matrix(d: usize, p: u64) -> Result<Matrix> {
    let coeffs = primitive_polynomial(d, p)?;
    let m = companion_matrix(&coeffs, p);
    let target = p.pow(d as u32) - 1;
    match field::matrix_order(&m, target) {
        Some(order) if order == target => Ok(m),
        _ => Err(Error::Invalid(
            "singer matrix does not have full multiplicative order; field arithmetic bug".into(),
        )),
    }
}

/// Generating matrices for GL(d, p): all transvections plus a diagonal
/// matrix with a primitive-root entry.
pub fn gl_generators(d: usize, p: u64) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                gens.push(Matrix::transvection(d, p, i, j));
            }
        }
    }
    if p > 2 || d == 1 {
        let mut diag = Matrix::identity(d, p);
        diag.set(0, 0, primitive_root(p));
        gens.push(diag);
    }
    gens
}

/// The affine family: `A = G ⋊ H` on the `p^d` vectors, `G` the translation
/// group, `H` a subgroup of GL(d, p) transitive on nonzero vectors, and `U`
/// the translations by a nonzero subspace (default: the first basis line).
pub fn affine_example(
    d: usize,
    p: u64,
    h_choice: AffineHChoice,
    u_basis: Option<&[Vec<u64>]>,
    config: &Config,
) -> Result<FamilySpec> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{} is not prime", p)));
    }
    let degree = (p as usize)
        .checked_pow(d as u32)
        .ok_or(Error::OrderOverflow)?;
    config.check_degree(degree)?;

    let h_mats = match &h_choice {
        AffineHChoice::Full => gl_generators(d, p),
        AffineHChoice::Singer => vec![singer_matrix(d, p)?],
        AffineHChoice::Custom(mats) => mats.clone(),
    };
    let h_perms = h_mats
        .iter()
        .map(|m| m.to_vector_perm())
        .collect::<Result<Vec<_>>>()?;
    let h_group = PermGroup::from_generators(degree, h_perms.clone())?;
    // Hypothesis of the family: H transitive on nonzero vectors.
    let e1 = vector_index(&basis_vector(d, 0), p);
    if h_group.orbit_of(e1).len() != degree - 1 {
        return Err(Error::Invalid(
            "H is not transitive on the nonzero vectors".into(),
        ));
    }

    let mut g_gens = Vec::new();
    for i in 0..d {
        g_gens.push(translation_perm(&basis_vector(d, i), p)?);
    }
    let g = PermGroup::from_generators(degree, g_gens.clone())?;

    let default_basis = vec![basis_vector(d, 0)];
    let basis = u_basis.unwrap_or(&default_basis);
    if basis.is_empty() || basis.iter().all(|v| v.iter().all(|&c| c == 0)) {
        return Err(Error::Invalid("U must be a nonzero subspace".into()));
    }
    let u_gens = basis
        .iter()
        .map(|v| translation_perm(v, p))
        .collect::<Result<Vec<_>>>()?;
    let u = PermGroup::from_generators(degree, u_gens)?;

    let mut a_gens = g_gens;
    a_gens.extend(h_perms);
    let a = PermGroup::from_generators(degree, a_gens)?;

    Ok(FamilySpec {
        tag: FamilyTag::Affine {
            d,
            p,
            h_choice: h_choice.label().to_string(),
        },
        a,
        g,
        u,
    })
}

fn basis_vector(d: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; d];
    v[i] = 1;
    v
}

/// Translations by the standard basis vectors of `F_p^d`.
pub fn translation_gens(d: usize, p: u64) -> Result<Vec<Permutation>> {
    (0..d)
        .map(|i| translation_perm(&basis_vector(d, i), p))
        .collect()
}

/// All nonzero proper subspaces of the translation group of `F_p^d`, as
/// subgroups (the translation group is elementary abelian, so subgroups and
/// subspaces coincide).
pub fn affine_subspace_choices(d: usize, p: u64, config: &Config) -> Result<Vec<PermGroup>> {
    let degree = (p as usize).pow(d as u32);
    let mut g_gens = Vec::new();
    for i in 0..d {
        g_gens.push(translation_perm(&basis_vector(d, i), p)?);
    }
    let g = PermGroup::from_generators(degree, g_gens)?;
    let lattice = subgroup_lattice(&g, config)?;
    Ok(lattice
        .into_iter()
        .filter(|u| u.order() > 1 && u.order() < g.order())
        .collect())
}

/// A small group captured as an explicit element list with generator words,
/// built by closure from a faithful permutation realization.
#[derive(Clone, Debug)]
pub struct GroupElementTable {
    gens: Vec<Permutation>,
    elems: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    words: Vec<Vec<usize>>,
}

impl GroupElementTable {
    /// Breadth-first closure of the generators; `cap` bounds the group size.
    pub fn from_generators(gens: Vec<Permutation>, cap: usize) -> Result<GroupElementTable> {
        if gens.is_empty() {
            return Err(Error::Invalid("element table needs at least one generator".into()));
        }
        let degree = gens[0].degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut elems = vec![Permutation::identity(degree)];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(elems[0].clone(), 0usize);
        let mut head = 0;
        while head < elems.len() {
            let current = elems[head].clone();
            let word = words[head].clone();
            head += 1;
            for (gi, g) in gens.iter().enumerate() {
                let next = current.then(g);
                if !index.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(Error::BudgetExhausted(format!(
                            "element table exceeded cap {}",
                            cap
                        )));
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                    let mut w = word.clone();
                    w.push(gi);
                    words.push(w);
                }
            }
        }
        Ok(GroupElementTable {
            gens,
            elems,
            index,
            words,
        })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elems[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the product `elems[i] · elems[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let prod = self.elems[i].then(&self.elems[j]);
        self.index[&prod]
    }

    /// Word evaluation: the table index reached by multiplying the listed
    /// element indices from the identity.
    pub fn eval_word(&self, word: &[usize], letters: &[usize]) -> usize {
        let mut acc = 0usize;
        for &gi in word {
            acc = self.mul(acc, letters[gi]);
        }
        acc
    }

    /// Element order inside the table.
    pub fn element_order(&self, i: usize) -> u128 {
        self.elems[i].order()
    }
}

/// Right-regular permutation representation on the element list.
pub fn regular_representation(table: &GroupElementTable) -> Result<PermGroup> {
    let n = table.len();
    let gens = table
        .generators()
        .iter()
        .map(|g| {
            let gi = table.index_of(g).ok_or(Error::NotAMember)?;
            let images = (0..n).map(|i| table.mul(i, gi)).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(n, gens)
}

/// Extends generator images to a map on the whole table by word evaluation
/// and accepts iff the result is a bijection that is multiplicative on every
/// Cayley edge. Returns the permutation of the element list.
pub fn automorphism_from_images(
    table: &GroupElementTable,
    images: &[usize],
) -> Result<Permutation> {
    if images.len() != table.generators().len() {
        return Err(Error::Invalid(format!(
            "expected {} generator images, got {}",
            table.generators().len(),
            images.len()
        )));
    }
    let n = table.len();
    let phi: Vec<usize> = (0..n)
        .map(|i| table.eval_word(&table.words[i], images))
        .collect();
    let perm = Permutation::from_images(phi.clone()).map_err(|_| {
        Error::Invalid("generator images do not extend to a bijection".into())
    })?;
    // Multiplicativity on Cayley edges suffices for a homomorphism.
    for i in 0..n {
        for (gi, g) in table.generators().iter().enumerate() {
            let g_idx = table.index_of(g).ok_or(Error::NotAMember)?;
            let lhs = phi[table.mul(i, g_idx)];
            let rhs = table.mul(phi[i], phi[g_idx]);
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "images are not multiplicative at element {} generator {}",
                    i, gi
                )));
            }
        }
    }
    Ok(perm)
}

/// The subgroup of the holomorph generated by the right-regular copy of the
/// table group and the given automorphism permutations of its element list.
/// The regular copy must come out normal.
pub fn holomorph_overgroup(
    table: &GroupElementTable,
    autos: &[Permutation],
) -> Result<PermGroup> {
    let n = table.len();
    let regular = regular_representation(table)?;
    for auto in autos {
        if auto.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: auto.degree(),
            });
        }
        // Re-check multiplicativity of the claimed automorphism.
        for i in 0..n {
            for g in table.generators() {
                let g_idx = table.index_of(g).ok_or(Error::NotAMember)?;
                if auto.apply(table.mul(i, g_idx))
                    != table.mul(auto.apply(i), auto.apply(g_idx))
                {
                    return Err(Error::Invalid(
                        "a supplied permutation is not an automorphism".into(),
                    ));
                }
            }
        }
    }
    let mut gens: Vec<Permutation> = regular.generators().to_vec();
    gens.extend(autos.iter().cloned());
    let a = PermGroup::from_generators(n, gens)?;
    if !is_normal(&a, &regular)? {
        return Err(Error::Invalid(
            "regular subgroup is not normal in the holomorph overgroup".into(),
        ));
    }
    Ok(a)
}

/// The extraspecial family for `m = 1`: `G` of order `r³` and exponent `r`
/// (Heisenberg group over F_r), `A = G ⋊ SL(2, r)` of order `r³·r(r²-1)`
/// acting on the element list, `U` a subgroup strictly between `Z(G)` and
/// `G` selected by index into the sorted choice list.
pub fn extraspecial_example(r: u64, u_index: usize, config: &Config) -> Result<FamilySpec> {
    if !is_prime(r) || r % 2 == 0 {
        return Err(Error::Invalid("r must be an odd prime".into()));
    }
    if r > 7 {
        return Err(Error::Invalid(
            "r must be 3, 5 or 7 to keep the subgroup lattice desk-scale".into(),
        ));
    }
    let (table, x_mat, y_mat, z_mat) = heisenberg_table(r)?;
    let g = regular_representation(&table)?;

    let sl2_gens = [
        // S = [[0, -1], [1, 0]]
        [[0, r - 1], [1, 0]],
        // T = [[1, 1], [0, 1]]
        [[1, 1], [0, 1]],
    ];
    let target_order = (r * r * r) as u128 * (r * (r * r - 1)) as u128;
    let sl_order = (r * (r * r - 1)) as u128;

    let lift_candidates = |m: &[[u64; 2]; 2]| -> Result<Vec<Permutation>> {
        let mut found = Vec::new();
        for e1 in 0..r {
            for e2 in 0..r {
                let img_x = mat_word(&x_mat, m[0][0], &y_mat, m[1][0], &z_mat, e1, r)?;
                let img_y = mat_word(&x_mat, m[0][1], &y_mat, m[1][1], &z_mat, e2, r)?;
                let ix = table
                    .index_of(&img_x)
                    .ok_or_else(|| Error::Invalid("image left the group".into()))?;
                let iy = table
                    .index_of(&img_y)
                    .ok_or_else(|| Error::Invalid("image left the group".into()))?;
                if let Ok(phi) = automorphism_from_images(&table, &[ix, iy]) {
                    found.push(phi);
                }
            }
        }
        Ok(found)
    };

    let cands_s = lift_candidates(&sl2_gens[0])?;
    let cands_t = lift_candidates(&sl2_gens[1])?;
    let mut chosen: Option<(Permutation, Permutation)> = None;
    'outer: for s in &cands_s {
        for t in &cands_t {
            let span = PermGroup::from_generators(table.len(), vec![s.clone(), t.clone()])?;
            if span.order() == sl_order {
                chosen = Some((s.clone(), t.clone()));
                break 'outer;
            }
        }
    }
    let (phi_s, phi_t) =
        chosen.ok_or_else(|| Error::Invalid("no symplectic lift pair found".into()))?;
    let a = holomorph_overgroup(&table, &[phi_s, phi_t])?;
    if a.order() != target_order {
        return Err(Error::Invalid(format!(
            "extraspecial overgroup has order {}, expected {}",
            a.order(),
            target_order
        )));
    }

    let choices = extraspecial_u_choices(&g, config)?;
    if u_index >= choices.len() {
        return Err(Error::Invalid(format!(
            "u_index {} out of range: {} subgroups lie strictly between Z(G) and G",
            u_index,
            choices.len()
        )));
    }
    Ok(FamilySpec {
        tag: FamilyTag::Extraspecial {
            r,
            u_index,
            u_choice_count: choices.len(),
        },
        a,
        g,
        u: choices[u_index].clone(),
    })
}

/// Subgroups strictly between the center and the whole group, sorted.
pub fn extraspecial_u_choices(g: &PermGroup, config: &Config) -> Result<Vec<PermGroup>> {
    let z = center(g, config)?;
    let lattice = subgroup_lattice(g, config)?;
    Ok(lattice
        .into_iter()
        .filter(|u| {
            u.order() > z.order()
                && u.order() < g.order()
                && u.contains_group(&z)
        })
        .collect())
}

/// Center of a group, by filtering elements commuting with every generator.
pub fn center(g: &PermGroup, config: &Config) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for e in g.elements(config)? {
        if e.is_identity() {
            continue;
        }
        if g.generators().iter().all(|h| e.then(h) == h.then(&e)) {
            gens.push(e);
        }
    }
    PermGroup::from_generators(g.degree(), gens)
}

/// `x^a · y^c · z^e` in the matrix realization of the Heisenberg group.
fn mat_word(
    x: &Matrix,
    a: u64,
    y: &Matrix,
    c: u64,
    z: &Matrix,
    e: u64,
    _r: u64,
) -> Result<Permutation> {
    let m = x.pow(a).mul(&y.pow(c)).mul(&z.pow(e));
    m.to_vector_perm()
}

/// Heisenberg group of order r³ and exponent r (r odd): upper unitriangular
/// 3x3 matrices over F_r, realized on the r³ column vectors.
fn heisenberg_table(r: u64) -> Result<(GroupElementTable, Matrix, Matrix, Matrix)> {
    let x = Matrix::transvection(3, r, 0, 1);
    let y = Matrix::transvection(3, r, 1, 2);
    let z = Matrix::transvection(3, r, 0, 2);
    let table = GroupElementTable::from_generators(
        vec![x.to_vector_perm()?, y.to_vector_perm()?],
        (r * r * r) as usize,
    )?;
    if table.len() != (r * r * r) as usize {
        return Err(Error::Invalid(
            "Heisenberg closure has the wrong order".into(),
        ));
    }
    Ok((table, x, y, z))
}

/// Imprimitive wreath product `T ≀ H` of degree `deg(T)·k`, generated by
/// `T`'s generators in block 0 plus `H`'s generators permuting the blocks.
/// `H` must be transitive on the `k` blocks (for `k = 1` the result is `T`).
pub fn wreath_product(t: &PermGroup, h: &PermGroup, k: usize, config: &Config) -> Result<PermGroup> {
    if h.degree() != k {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: k,
        });
    }
    if k == 1 {
        return PermGroup::from_generators(t.degree(), t.generators().to_vec());
    }
    if !h.is_transitive() {
        return Err(Error::Invalid(
            "wreath product requires the top group to be transitive on blocks".into(),
        ));
    }
    let nt = t.degree();
    let degree = nt
        .checked_mul(k)
        .ok_or(Error::OrderOverflow)?;
    config.check_degree(degree)?;
    let mut gens = Vec::new();
    for g in t.generators() {
        gens.push(embed_in_block(g, 0, k)?);
    }
    for h_gen in h.generators() {
        gens.push(block_perm(h_gen, nt)?);
    }
    PermGroup::from_generators(degree, gens)
}

/// Embeds a permutation of the block domain into block `block` of a
/// `k`-block imprimitive domain.
pub fn embed_in_block(p: &Permutation, block: usize, k: usize) -> Result<Permutation> {
    let nt = p.degree();
    let mut images: Vec<usize> = (0..nt * k).collect();
    for v in 0..nt {
        images[block * nt + v] = block * nt + p.apply(v);
    }
    Permutation::from_images(images)
}

/// The permutation of `deg·k` points induced by permuting blocks by `sigma`.
pub fn block_perm(sigma: &Permutation, block_size: usize) -> Result<Permutation> {
    let k = sigma.degree();
    let mut images = vec![0usize; block_size * k];
    for b in 0..k {
        for v in 0..block_size {
            images[b * block_size + v] = sigma.apply(b) * block_size + v;
        }
    }
    Permutation::from_images(images)
}

/// The wreath family: `A = T ≀ H`, `G = T^k`, and `U` the subgroup with full
/// factors in the first `k-2` coordinates and the straight diagonal in the
/// last two. `|G:U| = |T|`.
pub fn wreath_example(
    t: &PermGroup,
    h: &PermGroup,
    k: usize,
    config: &Config,
) -> Result<FamilySpec> {
    if k < 2 {
        return Err(Error::Invalid("wreath family needs k >= 2".into()));
    }
    let a = wreath_product(t, h, k, config)?;
    let nt = t.degree();
    let mut g_gens = Vec::new();
    for block in 0..k {
        for gen in t.generators() {
            g_gens.push(embed_in_block(gen, block, k)?);
        }
    }
    let g = PermGroup::from_generators(nt * k, g_gens)?;
    let mut u_gens = Vec::new();
    for block in 0..k.saturating_sub(2) {
        for gen in t.generators() {
            u_gens.push(embed_in_block(gen, block, k)?);
        }
    }
    for gen in t.generators() {
        let in_last_two = embed_in_block(gen, k - 2, k)?.then(&embed_in_block(gen, k - 1, k)?);
        u_gens.push(in_last_two);
    }
    let u = PermGroup::from_generators(nt * k, u_gens)?;

    if g.order() != t.order().pow(k as u32) {
        return Err(Error::Invalid("wreath base group has wrong order".into()));
    }
    if g.order() / u.order() != t.order() {
        return Err(Error::Invalid(
            "diagonal subgroup has the wrong index".into(),
        ));
    }
    Ok(FamilySpec {
        tag: FamilyTag::Wreath {
            t_degree: t.degree(),
            t_order: t.order() as u64,
            h_degree: h.degree(),
            h_order: h.order() as u64,
            k,
        },
        a,
        g,
        u,
    })
}

fn perm(text: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(text, degree).expect("builtin cycle string")
}

pub fn cyclic_group(n: usize) -> PermGroup {
    let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    PermGroup::from_generators(n, vec![Permutation::from_images(images).unwrap()]).unwrap()
}

pub fn sym_group(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        let mut tr: Vec<usize> = (0..n).collect();
        tr.swap(0, 1);
        gens.push(Permutation::from_images(tr).unwrap());
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(Permutation::from_images(cycle).unwrap());
    }
    PermGroup::from_generators(n, gens).unwrap()
}

pub fn alt_group(n: usize) -> PermGroup {
    assert!(n >= 3);
    let three_cycle = perm("(1 2 3)", n);
    if n == 3 {
        return PermGroup::from_generators(3, vec![three_cycle]).unwrap();
    }
    let big = if n % 2 == 1 {
        // (1 2 ... n)
        Permutation::from_images((0..n).map(|i| (i + 1) % n).collect::<Vec<_>>()).unwrap()
    } else {
        // (2 3 ... n)
        let mut images: Vec<usize> = (0..n).collect();
        for i in 1..n {
            images[i] = if i + 1 < n { i + 1 } else { 1 };
        }
        Permutation::from_images(images).unwrap()
    };
    PermGroup::from_generators(n, vec![three_cycle, big]).unwrap()
}

/// Dihedral group of order 2n acting naturally on n points.
pub fn dihedral_group(n: usize) -> PermGroup {
    assert!(n >= 3);
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    PermGroup::from_generators(
        n,
        vec![
            Permutation::from_images(rotation).unwrap(),
            Permutation::from_images(reflection).unwrap(),
        ],
    )
    .unwrap()
}

/// GL(d, p) acting on the nonzero vectors of `F_p^d` (degree `p^d - 1`).
pub fn gl_group(d: usize, p: u64) -> Result<PermGroup> {
    let degree = (p as usize).pow(d as u32) - 1;
    let gens = gl_generators(d, p)
        .iter()
        .map(|m| nonzero_vector_perm(m))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(degree, gens)
}

/// Restriction of a matrix action to the nonzero vectors, reindexed to
/// `0..p^d-2` (vector index minus one).
pub fn nonzero_vector_perm(m: &Matrix) -> Result<Permutation> {
    let full = m.to_vector_perm()?;
    let images = (1..full.degree())
        .map(|v| full.apply(v) - 1)
        .collect::<Vec<_>>();
    Permutation::from_images(images)
}

/// The unitriangular Sylow 2-subgroup of GL(3, 2) on the 7 nonzero vectors
/// (a dihedral group of order 8).
pub fn gl32_sylow2() -> Result<PermGroup> {
    let m12 = Matrix::transvection(3, 2, 0, 1);
    let m23 = Matrix::transvection(3, 2, 1, 2);
    PermGroup::from_generators(
        7,
        vec![nonzero_vector_perm(&m12)?, nonzero_vector_perm(&m23)?],
    )
}

/// The cyclic C4 inside the unitriangular Sylow 2 of GL(3, 2).
pub fn gl32_sylow2_c4() -> Result<PermGroup> {
    let m12 = Matrix::transvection(3, 2, 0, 1);
    let m23 = Matrix::transvection(3, 2, 1, 2);
    let order4 = m12.mul(&m23);
    PermGroup::from_generators(7, vec![nonzero_vector_perm(&order4)?])
}

/// PGL(2, q) on the projective line (degree q + 1). Point `i < q` is the
/// field element with index `i`; point `q` is infinity.
pub fn pgl2(q_p: u64, q_d: usize) -> Result<PermGroup> {
    projective_group(q_p, q_d, false)
}

/// PSL(2, q) on the projective line (degree q + 1).
pub fn psl2(q_p: u64, q_d: usize) -> Result<PermGroup> {
    projective_group(q_p, q_d, true)
}

fn projective_group(p: u64, d: usize, special: bool) -> Result<PermGroup> {
    let f = field::ExtField::new(p, d)?;
    let q = f.size();
    let inf = q;
    let degree = q + 1;

    // x -> x + 1
    let add_one = Permutation::from_images(
        (0..degree)
            .map(|i| if i == inf { inf } else { f.add(i, f.one()) })
            .collect(),
    )?;
    // x -> c·x for c the generator (PGL) or its square (PSL, odd q).
    let c = if special && p != 2 {
        f.mul(f.generator(), f.generator())
    } else {
        f.generator()
    };
    let scale = Permutation::from_images(
        (0..degree)
            .map(|i| if i == inf { inf } else { f.mul(c, i) })
            .collect(),
    )?;
    // x -> -1/x, swapping 0 and infinity.
    let invert = Permutation::from_images(
        (0..degree)
            .map(|i| {
                if i == inf {
                    0
                } else if i == 0 {
                    inf
                } else {
                    f.neg(f.inv(i))
                }
            })
            .collect(),
    )?;
    PermGroup::from_generators(degree, vec![add_one, scale, invert])
}

/// Frobenius group `C_q ⋊ C_k` on the `q` points of `F_q`, for `k` dividing
/// `q - 1` (k = q-1 gives AGL(1, q)).
pub fn frobenius_group(p: u64, d: usize, k: u64) -> Result<PermGroup> {
    let f = field::ExtField::new(p, d)?;
    let q = f.size() as u64;
    if k == 0 || (q - 1) % k != 0 {
        return Err(Error::Invalid(format!("{} does not divide {}", k, q - 1)));
    }
    // Translations by an F_p-basis of F_q generate the full additive group.
    let mut gens = Vec::new();
    let mut basis_elt = f.one();
    for _ in 0..d {
        gens.push(Permutation::from_images(
            (0..f.size()).map(|i| f.add(i, basis_elt)).collect(),
        )?);
        basis_elt = f.mul(basis_elt, f.generator());
    }
    if k > 1 {
        // Power of the generator with multiplicative order k.
        let e = (q - 1) / k;
        let mut c = f.one();
        for _ in 0..e {
            c = f.mul(c, f.generator());
        }
        gens.push(Permutation::from_images(
            (0..f.size()).map(|i| f.mul(c, i)).collect(),
        )?);
    }
    PermGroup::from_generators(f.size(), gens)
}

/// AGL(1, q) = `C_q ⋊ C_{q-1}` on q points.
pub fn agl1(p: u64, d: usize) -> Result<PermGroup> {
    let q = (p as u64).pow(d as u32);
    frobenius_group(p, d, q - 1)
}

/// Quaternion group of order 8 in its regular representation, built from
/// its matrix copy inside SL(2, 3).
pub fn quaternion_regular() -> Result<PermGroup> {
    let mut i_mat = Matrix::zero(2, 3);
    i_mat.set(0, 1, 2);
    i_mat.set(1, 0, 1);
    let mut j_mat = Matrix::zero(2, 3);
    j_mat.set(0, 0, 1);
    j_mat.set(0, 1, 1);
    j_mat.set(1, 0, 1);
    j_mat.set(1, 1, 2);
    let table = GroupElementTable::from_generators(
        vec![i_mat.to_vector_perm()?, j_mat.to_vector_perm()?],
        8,
    )?;
    regular_representation(&table)
}

/// Named built-in groups used by tests, the corpus and the CLI.
pub fn named_group(name: &str) -> Option<PermGroup> {
    if let Some(n) = name.strip_prefix("sym") {
        return n.parse::<usize>().ok().filter(|&n| (2..=16).contains(&n)).map(sym_group);
    }
    if let Some(n) = name.strip_prefix("alt") {
        return n.parse::<usize>().ok().filter(|&n| (3..=16).contains(&n)).map(alt_group);
    }
    if let Some(n) = name.strip_prefix('c') {
        return n.parse::<usize>().ok().filter(|&n| (2..=64).contains(&n)).map(cyclic_group);
    }
    if let Some(n) = name.strip_prefix('d') {
        return n.parse::<usize>().ok().filter(|&n| (3..=32).contains(&n)).map(dihedral_group);
    }
    match name {
        "klein4" => Some(
            PermGroup::from_generators(4, vec![perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)])
                .unwrap(),
        ),
        "q8" => quaternion_regular().ok(),
        "psl27" => psl2(7, 1).ok(),
        "pgl27" => pgl2(7, 1).ok(),
        "gl32" => gl_group(3, 2).ok(),
        "agl15" => agl1(5, 1).ok(),
        _ => None,
    }
}

/// An overgroup realizing the full automorphism action for shipped simple
/// groups, paired with the group itself: `(overgroup, group)`.
pub fn aut_realizing_overgroup(name: &str) -> Option<(PermGroup, PermGroup)> {
    if let Some(n) = name.strip_prefix("alt") {
        let n: usize = n.parse().ok()?;
        if (5..=16).contains(&n) && n != 6 {
            return Some((sym_group(n), alt_group(n)));
        }
        return None;
    }
    if name == "psl27" {
        return Some((pgl2(7, 1).ok()?, psl2(7, 1).ok()?));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singer_orders() {
        let m = singer_matrix(2, 3).unwrap();
        assert_eq!(field::matrix_order(&m, 100).unwrap(), 8);
        let m = singer_matrix(3, 2).unwrap();
        assert_eq!(field::matrix_order(&m, 100).unwrap(), 7);
        // d = 1: the scalar of multiplicative order p - 1.
        let m = singer_matrix(1, 5).unwrap();
        assert_eq!(field::matrix_order(&m, 100).unwrap(), 4);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_group(3, 2).unwrap().order(), 168);
        assert_eq!(gl_group(2, 2).unwrap().order(), 6);
        assert_eq!(gl_group(2, 3).unwrap().order(), 48);
    }

    #[test]
    fn affine_full_orders() {
        let cfg = Config::default();
        let spec = affine_example(3, 2, AffineHChoice::Full, None, &cfg).unwrap();
        assert_eq!(spec.a.order(), 1344);
        assert_eq!(spec.g.order(), 8);
        assert_eq!(spec.u.order(), 2);
        let spec = affine_example(2, 3, AffineHChoice::Singer, None, &cfg).unwrap();
        assert_eq!(spec.a.order() / spec.g.order(), 8);
        assert_eq!(spec.g.order() / spec.u.order(), 3);
    }

    #[test]
    fn affine_rejects_intransitive_h() {
        let cfg = Config::default();
        // The identity alone is not transitive on nonzero vectors.
        let h = vec![Matrix::identity(2, 3)];
        assert!(affine_example(2, 3, AffineHChoice::Custom(h), None, &cfg).is_err());
    }

    #[test]
    fn element_table_and_regular_rep() {
        let s3 = sym_group(3);
        let table = GroupElementTable::from_generators(s3.generators().to_vec(), 16).unwrap();
        assert_eq!(table.len(), 6);
        let reg = regular_representation(&table).unwrap();
        assert_eq!(reg.degree(), 6);
        assert_eq!(reg.order(), 6);
        assert!(reg.is_regular());
    }

    #[test]
    fn automorphism_extension() {
        // Identity images give the identity map.
        let c5 = cyclic_group(5);
        let table = GroupElementTable::from_generators(c5.generators().to_vec(), 8).unwrap();
        let g_idx = table.index_of(&table.generators()[0].clone()).unwrap();
        let id = automorphism_from_images(&table, &[g_idx]).unwrap();
        assert!(id.is_identity());
        // Inversion on abelian C5 is an order-2 automorphism.
        let inv_idx = table
            .index_of(&table.generators()[0].inverse())
            .unwrap();
        let inv = automorphism_from_images(&table, &[inv_idx]).unwrap();
        assert_eq!(inv.order(), 2);
    }

    #[test]
    fn holomorph_of_c5() {
        let c5 = cyclic_group(5);
        let table = GroupElementTable::from_generators(c5.generators().to_vec(), 8).unwrap();
        // g -> g^2 generates Aut(C5) = C4.
        let sq = table.mul(
            table.index_of(&table.generators()[0]).unwrap(),
            table.index_of(&table.generators()[0]).unwrap(),
        );
        let auto = automorphism_from_images(&table, &[sq]).unwrap();
        let hol = holomorph_overgroup(&table, &[auto]).unwrap();
        assert_eq!(hol.order(), 20);
    }

    #[test]
    fn trivial_automorphism_set_gives_g() {
        let s3 = sym_group(3);
        let table = GroupElementTable::from_generators(s3.generators().to_vec(), 16).unwrap();
        let hol = holomorph_overgroup(&table, &[]).unwrap();
        assert_eq!(hol.order(), 6);
    }

    #[test]
    fn wreath_products() {
        let cfg = Config::default();
        let c2 = cyclic_group(2);
        let w = wreath_product(&c2, &c2, 2, &cfg).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.order(), 8);
        let t = sym_group(3);
        let id_top = PermGroup::trivial(1);
        let w = wreath_product(&t, &id_top, 1, &cfg).unwrap();
        assert!(w.equals(&t));
    }

    #[test]
    fn wreath_example_indices() {
        let cfg = Config::default();
        let spec = wreath_example(&sym_group(3), &sym_group(3), 3, &cfg).unwrap();
        assert_eq!(spec.g.order(), 216);
        assert_eq!(spec.g.order() / spec.u.order(), 6);
        assert_eq!(spec.a.order() / spec.g.order(), 6);
        assert_eq!(spec.a.order(), 216 * 6);
    }

    #[test]
    fn projective_groups() {
        assert_eq!(psl2(7, 1).unwrap().order(), 168);
        assert_eq!(pgl2(7, 1).unwrap().order(), 336);
        assert_eq!(psl2(5, 1).unwrap().order(), 60);
        assert_eq!(pgl2(3, 1).unwrap().order(), 24);
        assert_eq!(pgl2(2, 2).unwrap().order(), 60); // PGL(2,4) = Alt(5)
    }

    #[test]
    fn frobenius_groups() {
        assert_eq!(frobenius_group(5, 1, 4).unwrap().order(), 20);
        assert_eq!(frobenius_group(7, 1, 3).unwrap().order(), 21);
        assert_eq!(agl1(2, 3).unwrap().order(), 56);
        assert!(agl1(3, 2).unwrap().is_transitive());
    }

    #[test]
    fn quaternion_group() {
        let q8 = quaternion_regular().unwrap();
        assert_eq!(q8.order(), 8);
        assert!(q8.is_regular());
        // Unique involution.
        let cfg = Config::default();
        let invs = q8
            .elements(&cfg)
            .unwrap()
            .filter(|e| e.order() == 2)
            .count();
        assert_eq!(invs, 1);
    }

    #[test]
    fn named_groups_resolve() {
        assert_eq!(named_group("alt5").unwrap().order(), 60);
        assert_eq!(named_group("sym4").unwrap().order(), 24);
        assert_eq!(named_group("c6").unwrap().order(), 6);
        assert_eq!(named_group("d4").unwrap().order(), 8);
        assert_eq!(named_group("psl27").unwrap().order(), 168);
        assert!(named_group("nope").is_none());
    }
}
