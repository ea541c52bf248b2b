//! Finite field and matrix arithmetic used by the affine and projective
//! builders: F_p, F_{p^d} as polynomials modulo a primitive polynomial, and
//! matrix-to-permutation conversion on vector spaces.

use crate::error::{Error, Result};
use crate::perm::{factorize, Permutation};

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Smallest primitive root modulo a prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let primes: Vec<u64> = factorize(phi).into_iter().map(|(q, _)| q).collect();
    'next: for g in 2..p {
        for q in &primes {
            if pow_mod(g, phi / q, p) == 1 {
                continue 'next;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Dense d x d matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub p: u64,
    pub dim: usize,
    /// Row-major entries.
    pub entries: Vec<u64>,
}

impl Matrix {
    pub fn identity(dim: usize, p: u64) -> Matrix {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { p, dim, entries }
    }

    pub fn zero(dim: usize, p: u64) -> Matrix {
        Matrix {
            p,
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn at(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.dim + col] = value % self.p;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = Matrix::zero(self.dim, self.p);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.dim {
                    let v = (out.at(i, j) + a * other.at(k, j)) % self.p;
                    out.entries[i * self.dim + j] = v;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim, self.p)
    }

    /// Elementary transvection `I + E_{row,col}`.
    pub fn transvection(dim: usize, p: u64, row: usize, col: usize) -> Matrix {
        let mut m = Matrix::identity(dim, p);
        m.set(row, col, (m.at(row, col) + 1) % p);
        m
    }

    /// Column-vector action: `v -> M v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.dim)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.dim {
                    acc = (acc + self.at(i, j) * v[j]) % self.p;
                }
                acc
            })
            .collect()
    }

    /// The permutation of the `p^dim` vectors induced by the matrix action.
    pub fn to_vector_perm(&self) -> Result<Permutation> {
        let n = (self.p as usize).pow(self.dim as u32);
        let images = (0..n)
            .map(|idx| vector_index(&self.apply(&index_vector(idx, self.p, self.dim)), self.p))
            .collect();
        Permutation::from_images(images)
    }
}

/// Vector with index `idx` in base-p little-endian encoding.
pub fn index_vector(idx: usize, p: u64, dim: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(dim);
    let mut rest = idx;
    for _ in 0..dim {
        v.push((rest % p as usize) as u64);
        rest /= p as usize;
    }
    v
}

pub fn vector_index(v: &[u64], p: u64) -> usize {
    let mut idx = 0usize;
    for &c in v.iter().rev() {
        idx = idx * p as usize + c as usize;
    }
    idx
}

/// Permutation of the `p^dim` vectors given by translation `v -> v + t`.
pub fn translation_perm(t: &[u64], p: u64) -> Result<Permutation> {
    let dim = t.len();
    let n = (p as usize).pow(dim as u32);
    let images = (0..n)
        .map(|idx| {
            let v = index_vector(idx, p, dim);
            let sum: Vec<u64> = v.iter().zip(t).map(|(&a, &b)| (a + b) % p).collect();
            vector_index(&sum, p)
        })
        .collect();
    Permutation::from_images(images)
}

/// Multiplicative order of a matrix, or `None` if it exceeds `bound`.
pub fn matrix_order(m: &Matrix, bound: u64) -> Option<u64> {
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.mul(m);
    }
    None
}

/// Companion matrix of the monic polynomial `x^d + c[d-1] x^{d-1} + … + c[0]`.
pub fn companion_matrix(coeffs: &[u64], p: u64) -> Matrix {
    let d = coeffs.len();
    let mut m = Matrix::zero(d, p);
    for i in 1..d {
        m.set(i, i - 1, 1);
    }
    for i in 0..d {
        m.set(i, d - 1, (p - coeffs[i] % p) % p);
    }
    m
}

/// The least monic polynomial (by coefficient tuple `(c_0, …, c_{d-1})` in
/// lexicographic order) whose companion matrix has multiplicative order
/// `p^d - 1`, i.e. the least primitive polynomial. Returns its coefficients.
pub fn primitive_polynomial(d: usize, p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{} is not prime", p)));
    }
    let q = (p as u64).pow(d as u32);
    let target = q - 1;
    let prime_divisors: Vec<u64> = factorize(target).into_iter().map(|(r, _)| r).collect();
    let total = (p as usize).pow(d as u32);
    for enc in 0..total {
        let coeffs = index_vector(enc, p, d);
        // A primitive polynomial has nonzero constant term.
        if coeffs[0] == 0 {
            continue;
        }
        let m = companion_matrix(&coeffs, p);
        if !m.pow(target).is_identity() {
            continue;
        }
        if prime_divisors
            .iter()
            .all(|&r| !m.pow(target / r).is_identity())
        {
            return Ok(coeffs);
        }
    }
    Err(Error::Invalid(format!(
        "no primitive polynomial of degree {} over F_{}; this indicates a field arithmetic bug",
        d, p
    )))
}

/// Arithmetic in F_{p^d} with elements encoded as indices (base-p coefficient
/// vectors of polynomials modulo the least primitive polynomial).
#[derive(Clone, Debug)]
pub struct ExtField {
    pub p: u64,
    pub d: usize,
    /// Companion matrix of the primitive modulus; multiplication by the
    /// field generator.
    generator_matrix: Matrix,
}

impl ExtField {
    pub fn new(p: u64, d: usize) -> Result<ExtField> {
        let coeffs = primitive_polynomial(d, p)?;
        Ok(ExtField {
            p,
            d,
            generator_matrix: companion_matrix(&coeffs, p),
        })
    }

    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.d as u32)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1 // the constant polynomial 1 encodes as index 1
    }

    /// Index of the field generator (the class of x).
    pub fn generator(&self) -> usize {
        if self.d == 1 {
            primitive_root(self.p) as usize
        } else {
            self.p as usize // the polynomial x
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let va = index_vector(a, self.p, self.d);
        let vb = index_vector(b, self.p, self.d);
        let sum: Vec<u64> = va
            .iter()
            .zip(&vb)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        vector_index(&sum, self.p)
    }

    pub fn neg(&self, a: usize) -> usize {
        let va = index_vector(a, self.p, self.d);
        let neg: Vec<u64> = va.iter().map(|&x| (self.p - x) % self.p).collect();
        vector_index(&neg, self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        // Multiply the polynomial for `a` by b's coefficients, using powers
        // of the generator matrix applied to a's coefficient vector.
        let va = index_vector(a, self.p, self.d);
        let vb = index_vector(b, self.p, self.d);
        let mut acc = vec![0u64; self.d];
        let mut shifted = va;
        for (k, &coeff) in vb.iter().enumerate() {
            if coeff != 0 {
                for i in 0..self.d {
                    acc[i] = (acc[i] + coeff * shifted[i]) % self.p;
                }
            }
            if k + 1 < self.d {
                shifted = self.generator_matrix.apply(&shifted);
            }
        }
        vector_index(&acc, self.p)
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        // a^(q-2) by square-and-multiply.
        let mut e = self.size() as u64 - 2;
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}
