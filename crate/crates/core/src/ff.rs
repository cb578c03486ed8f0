//! Prime fields, extension fields in polynomial basis, product spaces and
//! their lexicographic indexing.
//!
//! A point of a product space is always handled in *flattened* form: a vector
//! of `F_p` coordinates of length `n`. Each field component contributes its
//! polynomial coordinates from highest degree down to the constant term, so
//! the lexicographic order of flattened coordinate vectors is the order used
//! for truth tables everywhere in this crate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from field and space construction or element arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    BadModulusDegree { expected: usize, got: usize },
    #[error("modulus is not irreducible over F_{p}")]
    Reducible { p: u32 },
    #[error("designated generator has order {got}, expected {expected}")]
    NotPrimitive { got: u64, expected: u64 },
    #[error("coefficient {0} out of range for F_{1}")]
    CoeffRange(u32, u32),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("space component mismatch")]
    ComponentMismatch,
    #[error("domain size p^{n} exceeds the supported limit")]
    DomainTooLarge { n: usize },
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("matrix is not invertible")]
    Singular,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Modular inverse in F_p via Fermat.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, (p - 2) as u64, p)
}

pub fn pow_mod(b: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut bb = (b % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u64;
        }
        bb = bb * bb % p as u64;
        e >>= 1;
    }
    acc as u32
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (dense, low degree; only what field construction needs)
// ---------------------------------------------------------------------------

/// Coefficients low-to-high, no trailing zeros (empty = zero polynomial).
fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for i in 0..=db {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - c * b[i] % p) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Trial division by every monic polynomial of degree 1..=deg/2. Desk scale
/// only (m <= 8, p <= 7), where the candidate count stays in the thousands.
fn poly_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        // candidates: monic of degree d, enumerated by base-p counter
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = vec![0u32; d + 1];
            let mut t = idx;
            for c in cand.iter_mut().take(d) {
                *c = (t % p as u64) as u32;
                t /= p as u64;
            }
            cand[d] = 1;
            if poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// FieldCtx / FieldElem
// ---------------------------------------------------------------------------

/// An element of `GF(p^m)`, coefficients of the polynomial basis stored
/// low-to-high (index = degree). JSON and flattened-point contexts use the
/// reverse (highest degree first) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub coeffs: Vec<u32>,
}

impl FieldElem {
    /// Coordinates from highest degree down to the constant term.
    pub fn coords_desc(&self) -> Vec<u32> {
        self.coeffs.iter().rev().copied().collect()
    }
}

/// A concrete `GF(p^m)` with a validated irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u32,
    m: usize,
    /// low-to-high, length m+1, monic
    modulus: Vec<u32>,
    generator: Option<FieldElem>,
}

impl FieldCtx {
    /// `modulus_desc` lists coefficients `[c_m, ..., c_0]` (highest first).
    pub fn new(p: u32, m: usize, modulus_desc: &[u32]) -> Result<Self, FfError> {
        if !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        if modulus_desc.len() != m + 1 || modulus_desc[0] % p != 1 {
            return Err(FfError::BadModulusDegree {
                expected: m,
                got: modulus_desc.len().saturating_sub(1),
            });
        }
        let modulus: Vec<u32> = modulus_desc.iter().rev().map(|&c| c % p).collect();
        if m >= 2 && !poly_irreducible(&modulus, p) {
            return Err(FfError::Reducible { p });
        }
        Ok(FieldCtx {
            p,
            m,
            modulus,
            generator: None,
        })
    }

    /// Attach a designated primitive element, checking its multiplicative order.
    pub fn with_generator(mut self, gen_desc: &[u32]) -> Result<Self, FfError> {
        let g = self.elem_from_desc(gen_desc)?;
        let order = self.mult_order(&g);
        let full = self.size() as u64 - 1;
        if order != full {
            return Err(FfError::NotPrimitive {
                got: order,
                expected: full,
            });
        }
        self.generator = Some(g);
        Ok(self)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.m as u32)
    }

    pub fn modulus_desc(&self) -> Vec<u32> {
        self.modulus.iter().rev().copied().collect()
    }

    pub fn generator(&self) -> Option<&FieldElem> {
        self.generator.as_ref()
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(&self) -> FieldElem {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = 1;
        FieldElem { coeffs }
    }

    /// The basis monomial x^d (d < m).
    pub fn monomial(&self, d: usize) -> FieldElem {
        let mut coeffs = vec![0; self.m];
        coeffs[d] = 1;
        FieldElem { coeffs }
    }

    /// Build an element from `[c_{m-1}, ..., c_0]` (highest degree first).
    pub fn elem_from_desc(&self, desc: &[u32]) -> Result<FieldElem, FfError> {
        if desc.len() != self.m {
            return Err(FfError::DimMismatch {
                expected: self.m,
                got: desc.len(),
            });
        }
        Ok(FieldElem {
            coeffs: desc.iter().rev().map(|&c| c % self.p).collect(),
        })
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + self.p - y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn scale(&self, c: u32, a: &FieldElem) -> FieldElem {
        let c = c % self.p;
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| x * c % self.p).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let prod = poly_mul(&a.coeffs, &b.coeffs, self.p);
        let mut rem = poly_rem(&prod, &self.modulus, self.p);
        rem.resize(self.m, 0);
        FieldElem { coeffs: rem }
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem, FfError> {
        if self.is_zero(a) {
            return Err(FfError::ZeroInverse);
        }
        Ok(self.pow(a, self.size() as u64 - 2))
    }

    /// Absolute trace down to F_p.
    pub fn trace(&self, a: &FieldElem) -> u32 {
        let mut acc = self.zero();
        let mut t = a.clone();
        for _ in 0..self.m {
            acc = self.add(&acc, &t);
            t = self.pow(&t, self.p as u64);
        }
        debug_assert!(acc.coeffs.iter().skip(1).all(|&c| c == 0));
        acc.coeffs[0]
    }

    fn mult_order(&self, a: &FieldElem) -> u64 {
        if self.is_zero(a) {
            return 0;
        }
        let full = self.size() as u64 - 1;
        let mut order = full;
        let mut q = 2u64;
        let mut rest = full;
        let mut primes = Vec::new();
        while q * q <= rest {
            if rest % q == 0 {
                primes.push(q);
                while rest % q == 0 {
                    rest /= q;
                }
            }
            q += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        for &q in &primes {
            while order % q == 0 && self.pow(a, order / q) == self.one() {
                order /= q;
            }
        }
        order
    }

    /// Lexicographic enumeration: index -> element whose flattened
    /// coordinates are the base-p digits of the index (big endian).
    pub fn elem_at(&self, idx: usize) -> FieldElem {
        let mut coeffs = vec![0u32; self.m];
        let mut t = idx;
        for c in coeffs.iter_mut() {
            // low degree = least significant digit
            *c = (t % self.p as usize) as u32;
            t /= self.p as usize;
        }
        FieldElem { coeffs }
    }

    pub fn index_of(&self, a: &FieldElem) -> usize {
        let mut idx = 0usize;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p as usize + c as usize;
        }
        idx
    }
}

impl Serialize for FieldCtx {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            p: u32,
            m: usize,
            modulus: Vec<u32>,
            #[serde(skip_serializing_if = "Option::is_none")]
            generator: Option<&'a Vec<u32>>,
        }
        let gen = self.generator.as_ref().map(|g| g.coords_desc());
        Repr {
            p: self.p,
            m: self.m,
            modulus: self.modulus_desc(),
            generator: gen.as_ref(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FieldCtx {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            p: u32,
            m: usize,
            modulus: Vec<u32>,
            #[serde(default)]
            generator: Option<Vec<u32>>,
        }
        let r = Repr::deserialize(de)?;
        let ctx = FieldCtx::new(r.p, r.m, &r.modulus).map_err(serde::de::Error::custom)?;
        match r.generator {
            Some(g) => ctx.with_generator(&g).map_err(serde::de::Error::custom),
            None => Ok(ctx),
        }
    }
}

// ---------------------------------------------------------------------------
// SpaceDesc: V_n as a product of vector and field components
// ---------------------------------------------------------------------------

/// One factor of a product space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Component {
    Vector { dim: usize },
    Field { ctx: FieldCtx },
}

impl Component {
    pub fn dim(&self) -> usize {
        match self {
            Component::Vector { dim } => *dim,
            Component::Field { ctx } => ctx.m(),
        }
    }
}

/// A point in flattened F_p coordinates.
pub type Point = Vec<u32>;

/// Descriptor of `V_n = V_{n_1} x ... x V_{n_s}` with the inner product
/// `<a,b> = sum <a_i,b_i>`: dot product on vector components, trace form on
/// field components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDesc {
    pub p: u32,
    pub components: Vec<Component>,
}

impl SpaceDesc {
    pub fn vector(p: u32, n: usize) -> Self {
        SpaceDesc {
            p,
            components: vec![Component::Vector { dim: n }],
        }
    }

    pub fn of_field(ctx: FieldCtx) -> Self {
        SpaceDesc {
            p: ctx.p(),
            components: vec![Component::Field { ctx }],
        }
    }

    pub fn product(p: u32, components: Vec<Component>) -> Result<Self, FfError> {
        for c in &components {
            if let Component::Field { ctx } = c {
                if ctx.p() != p {
                    return Err(FfError::ComponentMismatch);
                }
            }
        }
        Ok(SpaceDesc { p, components })
    }

    pub fn validate(&self) -> Result<(), FfError> {
        if !is_prime(self.p) {
            return Err(FfError::NotPrime(self.p));
        }
        if self.n() == 0 {
            return Err(FfError::DimMismatch {
                expected: 1,
                got: 0,
            });
        }
        for c in &self.components {
            if let Component::Field { ctx } = c {
                if ctx.p() != self.p {
                    return Err(FfError::ComponentMismatch);
                }
            }
        }
        if self.n() >= 40 || self.size_checked().is_none() {
            return Err(FfError::DomainTooLarge { n: self.n() });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    fn size_checked(&self) -> Option<usize> {
        let mut acc: usize = 1;
        for _ in 0..self.n() {
            acc = acc.checked_mul(self.p as usize)?;
        }
        Some(acc)
    }

    /// p^n, the number of points.
    pub fn size(&self) -> usize {
        self.size_checked().expect("domain size overflow")
    }

    /// Byte offsets of each component in the flattened coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.components.len() + 1);
        let mut acc = 0;
        out.push(0);
        for c in &self.components {
            acc += c.dim();
            out.push(acc);
        }
        out
    }

    /// Position of a flattened coordinate vector in lexicographic order.
    pub fn lex_index(&self, pt: &[u32]) -> Result<usize, FfError> {
        if pt.len() != self.n() {
            return Err(FfError::DimMismatch {
                expected: self.n(),
                got: pt.len(),
            });
        }
        let mut idx = 0usize;
        for &c in pt {
            debug_assert!(c < self.p);
            idx = idx * self.p as usize + c as usize;
        }
        Ok(idx)
    }

    /// Inverse of `lex_index`.
    pub fn lex_elem(&self, mut idx: usize) -> Point {
        let n = self.n();
        let mut pt = vec![0u32; n];
        for i in (0..n).rev() {
            pt[i] = (idx % self.p as usize) as u32;
            idx /= self.p as usize;
        }
        pt
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Point {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Point {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Point {
        let c = c % self.p;
        a.iter().map(|&x| x * c % self.p).collect()
    }

    /// Index-level point addition (digit-wise mod p).
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p as usize;
        let mut out = 0usize;
        let mut mult = 1usize;
        let (mut a, mut b) = (a, b);
        while a > 0 || b > 0 {
            out += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out
    }

    /// Extract the field element sitting in component `ci` of a point.
    pub fn field_part(&self, pt: &[u32], ci: usize) -> FieldElem {
        let off = self.offsets();
        match &self.components[ci] {
            Component::Field { .. } => {
                let slice = &pt[off[ci]..off[ci + 1]];
                // flattened = highest degree first
                FieldElem {
                    coeffs: slice.iter().rev().copied().collect(),
                }
            }
            Component::Vector { .. } => panic!("component {ci} is not a field"),
        }
    }

    /// Write a field element into component `ci` of a point.
    pub fn set_field_part(&self, pt: &mut [u32], ci: usize, e: &FieldElem) {
        let off = self.offsets();
        let slice = &mut pt[off[ci]..off[ci + 1]];
        for (dst, src) in slice.iter_mut().zip(e.coeffs.iter().rev()) {
            *dst = *src;
        }
    }

    /// The space inner product, reduced mod p.
    pub fn inner(&self, a: &[u32], b: &[u32]) -> Result<u32, FfError> {
        if a.len() != self.n() || b.len() != self.n() {
            return Err(FfError::DimMismatch {
                expected: self.n(),
                got: a.len().min(b.len()),
            });
        }
        let off = self.offsets();
        let mut acc = 0u32;
        for (ci, comp) in self.components.iter().enumerate() {
            let (lo, hi) = (off[ci], off[ci + 1]);
            match comp {
                Component::Vector { .. } => {
                    for i in lo..hi {
                        acc = (acc + a[i] * b[i]) % self.p;
                    }
                }
                Component::Field { ctx } => {
                    let x = self.field_part(a, ci);
                    let y = self.field_part(b, ci);
                    acc = (acc + ctx.trace(&ctx.mul(&x, &y))) % self.p;
                }
            }
        }
        Ok(acc)
    }

    /// Gram matrix of the inner product w.r.t. flattened coordinates,
    /// or `None` when it is the identity (pure vector space).
    pub fn gram(&self) -> Option<Vec<Vec<u32>>> {
        if self
            .components
            .iter()
            .all(|c| matches!(c, Component::Vector { .. }))
        {
            return None;
        }
        let n = self.n();
        let mut g = vec![vec![0u32; n]; n];
        let unit = |i: usize| -> Point {
            let mut v = vec![0u32; n];
            v[i] = 1;
            v
        };
        for i in 0..n {
            let ei = unit(i);
            for j in 0..n {
                let ej = unit(j);
                g[i][j] = self.inner(&ei, &ej).expect("unit vectors");
            }
        }
        Some(g)
    }

    pub fn iter_points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.size()).map(move |i| self.lex_elem(i))
    }
}

// ---------------------------------------------------------------------------
// Small dense matrices over F_p
// ---------------------------------------------------------------------------

/// Row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatFp {
    pub p: u32,
    pub rows: Vec<Vec<u32>>,
}

impl MatFp {
    pub fn new(p: u32, rows: Vec<Vec<u32>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| c % p).collect())
            .collect();
        MatFp { p, rows }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut rows = vec![vec![0u32; n]; n];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = 1;
        }
        MatFp { p, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.nrows());
        let mut out = vec![0u32; self.ncols()];
        for (xi, row) in x.iter().zip(&self.rows) {
            if *xi == 0 {
                continue;
            }
            for (o, &rj) in out.iter_mut().zip(row) {
                *o = (*o + xi * rj) % self.p;
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.ncols());
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(0u32, |acc, (&r, &xi)| (acc + r * xi) % self.p)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        let p = self.p;
        let (nr, nc) = (self.nrows(), self.ncols());
        let mut rank = 0;
        for col in 0..nc {
            let Some(piv) = (rank..nr).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = inv_mod(m[rank][col], p);
            for c in 0..nc {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for r in 0..nr {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..nc {
                        m[r][c] = (m[r][c] + p - f * m[rank][c] % p) % p;
                    }
                }
            }
            rank += 1;
            if rank == nr {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.ncols() && self.rank() == self.nrows()
    }
}
