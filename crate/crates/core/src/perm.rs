//! Permutations on finite point sets `{0, …, degree-1}`.
//!
//! The composition convention is left-to-right throughout: `compose(p, q)`
//! maps `i` to `q(p(i))`, so `x.conjugate_by(a)` computes `a⁻¹ x a`. Points
//! are 0-indexed internally and 1-indexed in every text format.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, …, degree-1}` stored as an image table.
///
/// Immutable value type; freely shareable between tasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::InvalidImages(format!(
                    "image {} of point {} is out of range for degree {}",
                    img, i, n
                )));
            }
            if seen[img] {
                return Err(Error::InvalidImages(format!(
                    "image {} appears more than once",
                    img
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-to-right composition: the result maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Composition without the degree check; panics on mismatch.
    /// Internal call sites guarantee equal degrees structurally.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// `a⁻¹ · self · a` in left-to-right convention.
    pub fn conjugate_by(&self, a: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), a.degree());
        let inv = a.inverse();
        inv.then(self).then(a)
    }

    /// `self^k`, with negative exponents through the inverse.
    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its least point, sorted by least
    /// moved point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat(1).take(self.degree() - moved));
        lengths.sort_unstable();
        CycleType(lengths)
    }

    /// Smallest `k >= 1` with `self^k = identity`, as the lcm of cycle
    /// lengths.
    ///
    /// Panics if the lcm exceeds 128 bits, which cannot happen below degree
    /// ~1000 (Landau's function) and never happens for members of groups
    /// whose order fits the supported range.
    pub fn order(&self) -> u128 {
        let mut acc: u128 = 1;
        for cycle in self.cycles() {
            acc = checked_lcm(acc, cycle.len() as u128)
                .expect("element order exceeds 128 bits; reduce the degree");
        }
        acc
    }

    /// Classifies the element order as a prime power.
    ///
    /// The identity is counted as having prime-power order (`q^0` for every
    /// prime): covering checks are unaffected, and class counts deliberately
    /// include the identity class.
    pub fn prime_power_order(&self) -> PrimePowerOrder {
        let mut lengths: Vec<u64> = self
            .cycles()
            .iter()
            .map(|c| c.len() as u64)
            .collect();
        lengths.sort_unstable();
        lengths.dedup();
        if lengths.is_empty() {
            return PrimePowerOrder::Identity;
        }
        let q = smallest_prime_factor(lengths[0]);
        let mut exponent = 0u32;
        for len in &lengths {
            let mut rest = *len;
            let mut e = 0u32;
            while rest % q == 0 {
                rest /= q;
                e += 1;
            }
            if rest != 1 {
                return PrimePowerOrder::Composite;
            }
            exponent = exponent.max(e);
        }
        PrimePowerOrder::Prime { prime: q, exponent }
    }

    pub fn is_prime_power_order(&self) -> bool {
        !matches!(self.prime_power_order(), PrimePowerOrder::Composite)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] == i).collect()
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i != img)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.images[i] != i)
    }

    /// Parses disjoint-cycle notation with 1-indexed points, e.g.
    /// `"(1 2 3)(4 5)"`. `"()"` denotes the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0usize;

        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };

        skip_ws(&mut pos);
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(Error::Parse {
                    pos,
                    reason: format!("expected '(' but found {:?}", bytes[pos] as char),
                });
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos >= bytes.len() {
                    return Err(Error::Parse {
                        pos,
                        reason: "unclosed cycle".into(),
                    });
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(Error::Parse {
                        pos,
                        reason: format!("expected a point but found {:?}", bytes[pos] as char),
                    });
                }
                let token = &text[start..pos];
                let value: usize = token.parse().map_err(|_| Error::Parse {
                    pos: start,
                    reason: format!("malformed point {:?}", token),
                })?;
                if value == 0 || value > degree {
                    return Err(Error::Parse {
                        pos: start,
                        reason: format!("point {} out of range 1..={}", value, degree),
                    });
                }
                let point = value - 1;
                if used[point] {
                    return Err(Error::Parse {
                        pos: start,
                        reason: format!("point {} repeated", value),
                    });
                }
                used[point] = true;
                cycle.push(point);
            }
            if cycle.len() >= 2 {
                for w in 0..cycle.len() {
                    images[cycle[w]] = cycle[(w + 1) % cycle.len()];
                }
            }
            skip_ws(&mut pos);
        }
        Permutation::from_images(images)
    }

    /// Canonical disjoint-cycle form: cycles sorted by least moved point,
    /// fixed points omitted, 1-indexed. The identity formats as `"()"`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[deg {}]{}", self.degree(), self.cycle_string())
    }
}

/// Multiset of cycle lengths (including fixed points) summing to the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    /// Order of any permutation with this cycle type.
    pub fn order(&self) -> u128 {
        self.0
            .iter()
            .fold(1u128, |acc, &len| checked_lcm(acc, len as u128).expect("order overflow"))
    }
}

/// Verdict of the prime-power-order test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimePowerOrder {
    /// Order 1, counted as `q^0` for every prime.
    Identity,
    /// Order `prime^exponent` with `exponent >= 1`.
    Prime { prime: u64, exponent: u32 },
    /// Order divisible by at least two distinct primes.
    Composite,
}

impl PrimePowerOrder {
    pub fn is_prime_power(&self) -> bool {
        !matches!(self, PrimePowerOrder::Composite)
    }

    /// The unique prime for nontrivial prime-power orders.
    pub fn prime(&self) -> Option<u64> {
        match self {
            PrimePowerOrder::Prime { prime, .. } => Some(*prime),
            _ => None,
        }
    }

    /// True when the order is a power of `p` (the identity matches every
    /// prime).
    pub fn is_power_of(&self, p: u64) -> bool {
        match self {
            PrimePowerOrder::Identity => true,
            PrimePowerOrder::Prime { prime, .. } => *prime == p,
            PrimePowerOrder::Composite => false,
        }
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

pub(crate) fn checked_lcm(a: u128, b: u128) -> Option<u128> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    let g = num_integer::gcd(a, b);
    (a / g).checked_mul(b)
}

/// Trial-division factorisation; adequate for desk-scale orders.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
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
