//! Deterministic Schreier-Sims stabilizer chains.
//!
//! Base points are chosen as the first moved point (or taken from a forced
//! prefix, used for point stabilizers and action kernels), orbits are
//! expanded breadth-first with generators in list order, and no code path
//! uses randomness, so the same generator list always yields the same base,
//! transversals and enumeration order.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Strong generators of the group at this level (they fix all earlier
    /// base points).
    pub gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order; `orbit[0] == base`.
    pub orbit: Vec<usize>,
    /// `trans[p]` maps `base` to `p`.
    pub trans: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Level {
        let mut trans = vec![None; degree];
        trans[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            trans,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        let mut trans: Vec<Option<Permutation>> = vec![None; degree];
        trans[self.base] = Some(Permutation::identity(degree));
        let mut orbit = vec![self.base];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if trans[q].is_none() {
                    let t = trans[p].as_ref().unwrap().then(g);
                    trans[q] = Some(t);
                    orbit.push(q);
                }
            }
        }
        self.orbit = orbit;
        self.trans = trans;
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub degree: usize,
    pub levels: Vec<Level>,
    /// Number of leading levels whose base was forced by the caller.
    pub forced_prefix: usize,
}

impl Chain {
    /// Builds a chain for `gens`. `forced_base` points become the leading
    /// base points in order, whether or not anything moves them; this is how
    /// point stabilizers and action kernels are extracted.
    pub fn build(degree: usize, gens: &[Permutation], forced_base: &[usize]) -> Chain {
        let mut chain = Chain {
            degree,
            levels: forced_base.iter().map(|&b| Level::new(degree, b)).collect(),
            forced_prefix: forced_base.len(),
        };
        let mut seed: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !seed.contains(g) {
                seed.push(g.clone());
            }
        }
        if seed.is_empty() {
            return chain;
        }
        for g in seed {
            chain.distribute(g);
        }
        for level in &mut chain.levels {
            level.recompute_orbit(degree);
        }
        chain.close();
        chain
    }

    /// Appends `g` to every level whose base prefix it fixes.
    fn distribute(&mut self, g: Permutation) {
        let mut j = 0;
        while j < self.levels.len() && g.apply(self.levels[j].base) == self.levels[j].base {
            self.levels[j].gens.push(g.clone());
            j += 1;
        }
        if j == self.levels.len() {
            // g fixes every existing base point; open a new level at its
            // first moved point.
            let base = g.first_moved_point().expect("identity was filtered out");
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[j].gens.push(g);
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// index at which sifting stopped (`levels.len()` if it ran through).
    pub fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for j in from..self.levels.len() {
            let p = h.apply(self.levels[j].base);
            match &self.levels[j].trans[p] {
                None => return (h, j),
                Some(t) => {
                    if p != self.levels[j].base {
                        h = h.then(&t.inverse());
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    /// Incremental Schreier-Sims verification: every Schreier generator of
    /// every level must sift to the identity through the deeper levels.
    fn close(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut new_gen: Option<(Permutation, usize)> = None;
            'scan: for oi in 0..self.levels[iu].orbit.len() {
                let p = self.levels[iu].orbit[oi];
                for si in 0..self.levels[iu].gens.len() {
                    let s = self.levels[iu].gens[si].clone();
                    let t_p = self.levels[iu].trans[p].as_ref().unwrap();
                    let q = s.apply(p);
                    let t_q = self.levels[iu].trans[q].as_ref().unwrap();
                    let schreier = t_p.then(&s).then(&t_q.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stop) = self.strip(&schreier, iu + 1);
                    if !residue.is_identity() {
                        new_gen = Some((residue, stop));
                        break 'scan;
                    }
                }
            }
            match new_gen {
                Some((residue, stop)) => {
                    let j = if stop == self.levels.len() {
                        let base = residue
                            .first_moved_point()
                            .expect("nonidentity residue moves a point");
                        self.levels.push(Level::new(self.degree, base));
                        self.levels.len() - 1
                    } else {
                        stop
                    };
                    for k in (iu + 1)..=j {
                        self.levels[k].gens.push(residue.clone());
                        let degree = self.degree;
                        self.levels[k].recompute_orbit(degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for level in &self.levels {
            acc = acc.checked_mul(level.orbit.len() as u128)?;
        }
        Some(acc)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.strip(g, 0);
        residue.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Generators of the subgroup stabilizing all `forced_prefix` leading
    /// base points pointwise.
    pub fn prefix_stabilizer_gens(&self) -> Vec<Permutation> {
        if self.forced_prefix >= self.levels.len() {
            return Vec::new();
        }
        self.levels[self.forced_prefix].gens.clone()
    }
}

/// Deterministic iterator over all group elements: one element per choice of
/// transversal entry at each level, with the level-0 coordinate varying
/// fastest. The identity always comes first.
pub(crate) struct ElementIter<'a> {
    chain: &'a Chain,
    /// Current orbit index per level.
    counters: Vec<usize>,
    /// suffix[k] = t_{L-1} · … · t_k (left-to-right); suffix[L] = identity.
    suffix: Vec<Permutation>,
    done: bool,
}

impl<'a> ElementIter<'a> {
    pub fn new(chain: &'a Chain) -> ElementIter<'a> {
        let levels = chain.levels.len();
        let mut it = ElementIter {
            chain,
            counters: vec![0; levels],
            suffix: vec![Permutation::identity(chain.degree); levels + 1],
            done: false,
        };
        it.rebuild_from(levels);
        it
    }

    fn trans_at(&self, level: usize) -> &Permutation {
        let point = self.chain.levels[level].orbit[self.counters[level]];
        self.chain.levels[level].trans[point].as_ref().unwrap()
    }

    /// Recomputes suffix products for levels `k < upto`.
    fn rebuild_from(&mut self, upto: usize) {
        for k in (0..upto).rev() {
            self.suffix[k] = self.suffix[k + 1].then(self.trans_at(k));
        }
    }
}

impl<'a> Iterator for ElementIter<'a> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = self.suffix[0].clone();
        // Odometer increment: level 0 fastest.
        let mut k = 0;
        loop {
            if k == self.counters.len() {
                self.done = true;
                return Some(current);
            }
            self.counters[k] += 1;
            if self.counters[k] < self.chain.levels[k].orbit.len() {
                break;
            }
            self.counters[k] = 0;
            k += 1;
        }
        self.rebuild_from(k + 1);
        Some(current)
    }
}
