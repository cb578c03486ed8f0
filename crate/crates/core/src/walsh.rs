//! Exact forward/inverse Walsh transforms of generalized p-ary functions and
//! plateau classification.
//!
//! `W_f(a) = sum_x zeta_{p^k}^{f(x)} zeta_p^{-<a,x>}` is computed either by a
//! naive double sum (the test oracle) or by a radix-p butterfly over the n
//! F_p-coordinates (`n * p^{n+1}` cyclotomic operations). Structured inner
//! products (trace forms on field components) are folded into the butterfly by
//! permuting the input through the Gram matrix of the space.

use crate::cyclotomic::{
    acc_monomial, acc_rotated, slice_is_zero, slice_norm_sq, t_pow, Coeff, CycCtx, CycError,
    CycInt, PolarTable, UnitTag,
};
use crate::ff::{FfError, MatFp, SpaceDesc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WalshError {
    #[error(transparent)]
    Ff(#[from] FfError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error("table length {got} does not match domain size {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("table entry {value} at index {index} exceeds p^k = {pk}")]
    ValueRange { index: usize, value: u32, pk: u32 },
    #[error("functions do not share a common domain and codomain level")]
    DomainMismatch,
    #[error("spectrum is inconsistent: value at point index {witness} is not p^n * (p^k-th root of unity)")]
    InconsistentSpectrum { witness: usize },
    #[error(
        "not plateaued: support size {support_size} (of {domain}) admits no order; witnesses {witnesses:?}"
    )]
    NotPlateaued {
        support_size: usize,
        domain: usize,
        witnesses: Vec<usize>,
    },
    #[error("not plateaued: n + s = {n_plus_s} must be even for p = 2")]
    ParityViolation { n_plus_s: u32 },
}

/// A total map `V_n -> Z_{p^k}`, stored as a truth table in lexicographic
/// order of the flattened domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunction {
    pub space: SpaceDesc,
    pub k: u32,
    pub table: Vec<u32>,
}

impl GenFunction {
    pub fn new(space: SpaceDesc, k: u32, table: Vec<u32>) -> Result<Self, WalshError> {
        space.validate()?;
        let pn = space.size();
        if table.len() != pn {
            return Err(WalshError::TableLength {
                expected: pn,
                got: table.len(),
            });
        }
        let pk = (space.p as u64).pow(k);
        assert!(pk <= u32::MAX as u64, "codomain p^k too large");
        for (i, &v) in table.iter().enumerate() {
            if v as u64 >= pk {
                return Err(WalshError::ValueRange {
                    index: i,
                    value: v,
                    pk: pk as u32,
                });
            }
        }
        Ok(GenFunction { space, k, table })
    }

    pub fn from_fn(space: SpaceDesc, k: u32, f: impl FnMut(usize) -> u32) -> Self {
        let table = (0..space.size()).map(f).collect();
        GenFunction::new(space, k, table).expect("from_fn produced an invalid table")
    }

    pub fn constant(space: SpaceDesc, k: u32, v: u32) -> Self {
        let pn = space.size();
        GenFunction::new(space, k, vec![v; pn]).expect("constant")
    }

    pub fn p(&self) -> u32 {
        self.space.p
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    /// p^k as u32.
    pub fn pk(&self) -> u32 {
        (self.space.p).pow(self.k)
    }

    pub fn value(&self, idx: usize) -> u32 {
        self.table[idx]
    }

    /// Pointwise sum mod p^k.
    pub fn add(&self, other: &GenFunction) -> Result<GenFunction, WalshError> {
        if self.space != other.space || self.k != other.k {
            return Err(WalshError::DomainMismatch);
        }
        let pk = self.pk();
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + b) % pk)
            .collect();
        Ok(GenFunction {
            space: self.space.clone(),
            k: self.k,
            table,
        })
    }

    /// Pointwise `self - other` mod p^k.
    pub fn sub(&self, other: &GenFunction) -> Result<GenFunction, WalshError> {
        if self.space != other.space || self.k != other.k {
            return Err(WalshError::DomainMismatch);
        }
        let pk = self.pk();
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + pk - b) % pk)
            .collect();
        Ok(GenFunction {
            space: self.space.clone(),
            k: self.k,
            table,
        })
    }

    /// Integer-scale every value mod p^k.
    pub fn scale(&self, c: u32) -> GenFunction {
        let pk = self.pk();
        GenFunction {
            space: self.space.clone(),
            k: self.k,
            table: self
                .table
                .iter()
                .map(|&v| ((v as u64 * c as u64) % pk as u64) as u32)
                .collect(),
        }
    }

    /// Reinterpret a p-ary (k = 1) function into `Z_{p^new_k}` scaled by
    /// `p^{new_k - 1}`, the standard embedding used by every construction.
    pub fn lift_scaled(&self, new_k: u32) -> GenFunction {
        assert_eq!(self.k, 1, "lift_scaled expects a p-ary function");
        let factor = self.p().pow(new_k - 1);
        GenFunction {
            space: self.space.clone(),
            k: new_k,
            table: self.table.iter().map(|&v| v * factor).collect(),
        }
    }
}

impl Serialize for GenFunction {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            p: u32,
            k: u32,
            space: &'a SpaceDesc,
            table: &'a [u32],
        }
        Repr {
            p: self.space.p,
            k: self.k,
            space: &self.space,
            table: &self.table,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GenFunction {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            p: u32,
            k: u32,
            space: SpaceDesc,
            table: Vec<u32>,
        }
        let r = Repr::deserialize(de)?;
        if r.p != r.space.p {
            return Err(serde::de::Error::custom("p does not match space.p"));
        }
        GenFunction::new(r.space, r.k, r.table).map_err(serde::de::Error::custom)
    }
}

/// The full Walsh transform of a [`GenFunction`], stored as a flat buffer of
/// canonical coefficient slices indexed by `lex_index(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum<T> {
    pub space: SpaceDesc,
    pub k: u32,
    data: Vec<T>,
}

impl<T: Coeff> WalshSpectrum<T> {
    pub fn cyc_ctx(&self) -> CycCtx {
        CycCtx::new(self.space.p, self.k)
    }

    pub fn len(&self) -> usize {
        self.space.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn slice(&self, idx: usize) -> &[T] {
        let phi = self.cyc_ctx().phi();
        &self.data[idx * phi..(idx + 1) * phi]
    }

    pub fn value(&self, idx: usize) -> CycInt<T> {
        CycInt::from_coeffs(self.space.p, self.k, self.slice(idx).to_vec())
    }

    pub fn support_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !slice_is_zero(self.slice(i)))
            .collect()
    }

    /// Build a spectrum directly from (index, value) pairs; unmentioned
    /// indices are zero. Used by spectral designs.
    pub fn from_values(
        space: SpaceDesc,
        k: u32,
        values: impl Iterator<Item = (usize, CycInt<T>)>,
    ) -> Self {
        let ctx = CycCtx::new(space.p, k);
        let phi = ctx.phi();
        let mut data = vec![T::zero(); space.size() * phi];
        for (idx, v) in values {
            assert_eq!((v.p, v.k), (space.p, k));
            data[idx * phi..(idx + 1) * phi].clone_from_slice(&v.coeffs);
        }
        WalshSpectrum { space, k, data }
    }

    /// Parseval identity `sum_a |W(a)|^2 = p^{2n}`.
    pub fn parseval_holds(&self) -> bool {
        let ctx = self.cyc_ctx();
        let mut acc = T::zero();
        for i in 0..self.len() {
            match slice_norm_sq(ctx, self.slice(i)) {
                Ok(v) => acc = crate::cyclotomic::ck_add(&acc, &v),
                Err(_) => return false,
            }
        }
        acc == t_pow(self.space.p, 2 * self.space.n() as u32)
    }
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

fn gram_permuted_index(space: &SpaceDesc, gram: Option<&MatFp>, idx: usize) -> usize {
    match gram {
        None => idx,
        Some(g) => {
            let x = space.lex_elem(idx);
            let y = g.mul_vec(&x);
            space.lex_index(&y).expect("gram image in space")
        }
    }
}

/// Run the in-place radix-p butterfly over all n coordinates.
/// `negate` selects the forward kernel `zeta_p^{-u t}`.
fn butterfly<T: Coeff>(ctx: CycCtx, data: &mut [T], n: usize, negate: bool) {
    let p = ctx.p as usize;
    let phi = ctx.phi();
    let pkm1 = ctx.pkm1();
    // kernel exponents e[u][t] = (+- u t mod p) * p^{k-1}
    let mut kernel = vec![vec![0usize; p]; p];
    for (u, row) in kernel.iter_mut().enumerate() {
        for (t, e) in row.iter_mut().enumerate() {
            let ut = (u * t) % p;
            let ut = if negate && ut != 0 { p - ut } else { ut };
            *e = ut * pkm1;
        }
    }
    let pn = data.len() / phi;
    let mut stride = pn / p;
    // coordinate 1 (most significant digit) first; the stage order is fixed
    // so intermediate states are reproducible
    for _stage in 0..n {
        let block = stride * p;
        data.par_chunks_mut(block * phi).for_each(|chunk| {
            let mut tmp = vec![T::zero(); p * phi];
            let mut src = vec![T::zero(); phi];
            for lo in 0..stride {
                for x in tmp.iter_mut() {
                    *x = T::zero();
                }
                let mut any = false;
                for t in 0..p {
                    let pos = (lo + t * stride) * phi;
                    if slice_is_zero(&chunk[pos..pos + phi]) {
                        continue;
                    }
                    any = true;
                    src.clone_from_slice(&chunk[pos..pos + phi]);
                    for u in 0..p {
                        acc_rotated(ctx, &mut tmp[u * phi..(u + 1) * phi], &src, kernel[u][t]);
                    }
                }
                if any {
                    for u in 0..p {
                        let pos = (lo + u * stride) * phi;
                        chunk[pos..pos + phi].clone_from_slice(&tmp[u * phi..(u + 1) * phi]);
                    }
                } else {
                    for u in 0..p {
                        let pos = (lo + u * stride) * phi;
                        for c in chunk[pos..pos + phi].iter_mut() {
                            *c = T::zero();
                        }
                    }
                }
            }
        });
        stride /= p;
    }
}

/// Fast exact Walsh transform.
pub fn walsh_transform<T: Coeff>(f: &GenFunction) -> WalshSpectrum<T> {
    let space = f.space.clone();
    let ctx = CycCtx::new(space.p, f.k);
    let phi = ctx.phi();
    let pn = space.size();
    let gram = space.gram().map(|rows| MatFp::new(space.p, rows));
    let mut data = vec![T::zero(); pn * phi];
    for (i, &v) in f.table.iter().enumerate() {
        let yidx = gram_permuted_index(&space, gram.as_ref(), i);
        acc_monomial(
            ctx,
            &mut data[yidx * phi..(yidx + 1) * phi],
            v as usize,
            &T::one(),
        );
    }
    butterfly(ctx, &mut data, space.n(), true);
    WalshSpectrum {
        space,
        k: f.k,
        data,
    }
}

/// Naive double-sum oracle; quadratic in the domain size.
pub fn walsh_transform_naive<T: Coeff>(f: &GenFunction) -> WalshSpectrum<T> {
    let space = f.space.clone();
    let ctx = CycCtx::new(space.p, f.k);
    let phi = ctx.phi();
    let pn = space.size();
    let pkm1 = ctx.pkm1();
    let p = space.p as usize;
    let mut data = vec![T::zero(); pn * phi];
    let points: Vec<_> = space.iter_points().collect();
    for (ai, a) in points.iter().enumerate() {
        let dst = &mut data[ai * phi..(ai + 1) * phi];
        for (xi, x) in points.iter().enumerate() {
            let ip = space.inner(a, x).expect("same space") as usize;
            let e = f.table[xi] as usize + (p - ip) % p * pkm1;
            acc_monomial(ctx, dst, e, &T::one());
        }
    }
    WalshSpectrum {
        space,
        k: f.k,
        data,
    }
}

/// Invert a spectrum back to the unique generalized function, if every
/// normalized value is a p^k-th root of unity.
pub fn inverse_walsh<T: Coeff>(
    spec: &WalshSpectrum<T>,
    k: u32,
) -> Result<GenFunction, WalshError> {
    assert_eq!(spec.k, k);
    let space = spec.space.clone();
    let ctx = spec.cyc_ctx();
    let phi = ctx.phi();
    let pn = space.size();
    let mut data = spec.data.clone();
    butterfly(ctx, &mut data, space.n(), false);
    // reference values p^n * zeta^e
    let scale: T = t_pow(space.p, space.n() as u32);
    let mut refs = Vec::with_capacity(ctx.pk());
    for e in 0..ctx.pk() {
        let v = CycInt::<T>::root_power(space.p, spec.k, e as i64);
        let coeffs: Vec<T> = v
            .coeffs
            .iter()
            .map(|c| crate::cyclotomic::ck_mul(c, &scale))
            .collect();
        refs.push(coeffs);
    }
    let gram = space.gram().map(|rows| MatFp::new(space.p, rows));
    let mut table = vec![0u32; pn];
    for (x, entry) in table.iter_mut().enumerate() {
        let yidx = gram_permuted_index(&space, gram.as_ref(), x);
        let slice = &data[yidx * phi..(yidx + 1) * phi];
        match refs.iter().position(|r| r.as_slice() == slice) {
            Some(e) => *entry = e as u32,
            None => return Err(WalshError::InconsistentSpectrum { witness: x }),
        }
    }
    GenFunction::new(space, k, table)
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Regularity verdict of a plateaued function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "mu")]
pub enum Regularity {
    Regular,
    WeaklyRegular(UnitTag),
    NonWeaklyRegular,
    NotApplicable,
}

/// Everything classification learns about an s-plateaued function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlateauReport {
    pub p: u32,
    pub k: u32,
    pub n: usize,
    pub s: u32,
    /// lex indices of the Walsh support, ascending
    pub support: Vec<usize>,
    /// dual values f*(a), parallel to `support`
    pub dual: Vec<u32>,
    /// mu labels, parallel to `support`
    pub mu: Vec<UnitTag>,
    pub regularity: Regularity,
    /// `W_f(0) = 0`; for k > 1 read as zero correlation with constants
    pub balanced: bool,
}

impl PlateauReport {
    pub fn is_bent(&self) -> bool {
        self.s == 0
    }

    pub fn support_contains(&self, idx: usize) -> bool {
        self.support.binary_search(&idx).is_ok()
    }

    pub fn dual_at(&self, idx: usize) -> Option<u32> {
        self.support
            .binary_search(&idx)
            .ok()
            .map(|pos| self.dual[pos])
    }

    pub fn mu_at(&self, idx: usize) -> Option<UnitTag> {
        self.support
            .binary_search(&idx)
            .ok()
            .map(|pos| self.mu[pos])
    }

    /// The dual as a map keyed by lex index.
    pub fn dual_map(&self) -> std::collections::HashMap<usize, u32> {
        self.support
            .iter()
            .copied()
            .zip(self.dual.iter().copied())
            .collect()
    }

    /// Constant mu, when the function is (weakly) regular.
    pub fn constant_mu(&self) -> Option<UnitTag> {
        match self.regularity {
            Regularity::Regular => Some(UnitTag::One),
            Regularity::WeaklyRegular(t) => Some(t),
            _ => None,
        }
    }
}

/// Classify a spectrum that was already computed.
pub fn classify_spectrum<T: Coeff>(spec: &WalshSpectrum<T>) -> Result<PlateauReport, WalshError> {
    let space = &spec.space;
    let p = space.p;
    let n = space.n();
    let ctx = spec.cyc_ctx();
    let support = spec.support_indices();
    // support size fixes s via |S| = p^{n-s} (Parseval); magnitudes validated after
    let mut size = 1usize;
    let mut log = 0u32;
    while size < support.len() {
        size *= p as usize;
        log += 1;
    }
    if size != support.len() || log as usize > n {
        return Err(WalshError::NotPlateaued {
            support_size: support.len(),
            domain: space.size(),
            witnesses: Vec::new(),
        });
    }
    let s = n as u32 - log;
    let n_plus_s = n as u32 + s;
    if p == 2 && n_plus_s % 2 == 1 {
        return Err(WalshError::ParityViolation { n_plus_s });
    }
    let table = PolarTable::<T>::new(p, spec.k, n_plus_s)?;
    let expected_norm: T = t_pow(p, n_plus_s);
    let mut dual = Vec::with_capacity(support.len());
    let mut mu = Vec::with_capacity(support.len());
    let mut witnesses = Vec::new();
    for &idx in &support {
        let slice = spec.slice(idx);
        let norm_ok = matches!(slice_norm_sq(ctx, slice), Ok(v) if v == expected_norm);
        let polar = if norm_ok { table.match_slice(slice) } else { None };
        match polar {
            Some(pf) => {
                dual.push(pf.t);
                mu.push(pf.unit_tag(p));
            }
            None => {
                witnesses.push(idx);
                if witnesses.len() >= 8 {
                    break;
                }
            }
        }
    }
    if !witnesses.is_empty() {
        return Err(WalshError::NotPlateaued {
            support_size: support.len(),
            domain: space.size(),
            witnesses,
        });
    }
    let regularity = if mu.iter().all(|&t| t == UnitTag::One) {
        Regularity::Regular
    } else if mu.windows(2).all(|w| w[0] == w[1]) {
        Regularity::WeaklyRegular(mu[0])
    } else {
        Regularity::NonWeaklyRegular
    };
    let balanced = support.first() != Some(&0);
    Ok(PlateauReport {
        p,
        k: spec.k,
        n,
        s,
        support,
        dual,
        mu,
        regularity,
        balanced,
    })
}

/// Transform and classify in one step, over the default scalar.
pub fn classify(f: &GenFunction) -> Result<PlateauReport, WalshError> {
    classify_spectrum(&walsh_transform::<crate::DefaultCoeff>(f))
}

/// Classify with an explicit coefficient scalar.
pub fn classify_with<T: Coeff>(f: &GenFunction) -> Result<PlateauReport, WalshError> {
    classify_spectrum(&walsh_transform::<T>(f))
}

// ---------------------------------------------------------------------------
// Spectra bookkeeping
// ---------------------------------------------------------------------------

/// True iff the Walsh supports are pairwise disjoint.
pub fn disjoint_spectra(fs: &[&GenFunction]) -> Result<bool, WalshError> {
    if fs.is_empty() {
        return Ok(true);
    }
    for f in fs {
        if f.space != fs[0].space || f.k != fs[0].k {
            return Err(WalshError::DomainMismatch);
        }
    }
    let mut seen = vec![false; fs[0].space.size()];
    for f in fs {
        let spec = walsh_transform::<crate::DefaultCoeff>(f);
        for idx in spec.support_indices() {
            if seen[idx] {
                return Ok(false);
            }
            seen[idx] = true;
        }
    }
    Ok(true)
}

/// Base-p digits `f = sum_i p^{k-1-i} f_i`, each digit a p-ary function.
pub fn digit_decompose(f: &GenFunction) -> Vec<GenFunction> {
    let p = f.p();
    let k = f.k;
    (0..k)
        .map(|i| {
            let shift = p.pow(k - 1 - i);
            GenFunction {
                space: f.space.clone(),
                k: 1,
                table: f.table.iter().map(|&v| v / shift % p).collect(),
            }
        })
        .collect()
}

/// Inverse of [`digit_decompose`].
pub fn digit_recompose(digits: &[GenFunction], k: u32) -> Result<GenFunction, WalshError> {
    assert_eq!(digits.len(), k as usize);
    let p = digits[0].p();
    let space = digits[0].space.clone();
    let mut table = vec![0u32; space.size()];
    for (i, d) in digits.iter().enumerate() {
        if d.space != space || d.k != 1 {
            return Err(WalshError::DomainMismatch);
        }
        let shift = p.pow(k - 1 - i as u32);
        for (t, &v) in table.iter_mut().zip(&d.table) {
            *t += v * shift;
        }
    }
    GenFunction::new(space, k, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{Component, FieldCtx};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spike_at(space: &SpaceDesc, k: u32, a0: usize, b: u32) -> GenFunction {
        // f(x) = p^{k-1} <a0, x> + b
        let pkm1 = space.p.pow(k - 1);
        let pk = space.p.pow(k);
        let a = space.lex_elem(a0);
        GenFunction::from_fn(space.clone(), k, |i| {
            let x = space.lex_elem(i);
            (pkm1 * space.inner(&a, &x).unwrap() + b) % pk
        })
    }

    #[test]
    fn zero_function_spectrum() {
        let space = SpaceDesc::vector(2, 2);
        let f = GenFunction::constant(space.clone(), 1, 0);
        let spec = walsh_transform::<i64>(&f);
        assert_eq!(spec.value(0), CycInt::from_int(2, 1, 4));
        for i in 1..4 {
            assert!(spec.value(i).is_zero());
        }
        let rep = classify(&f).unwrap();
        assert_eq!(rep.s, 2);
        assert_eq!(rep.support, vec![0]);
        assert!(!rep.balanced);
    }

    #[test]
    fn character_spike() {
        for (space, k) in [
            (SpaceDesc::vector(3, 3), 2u32),
            (
                SpaceDesc::of_field(FieldCtx::new(3, 2, &[1, 2, 2]).unwrap()),
                2,
            ),
        ] {
            let pn = space.size();
            let a0 = pn / 2;
            let b = 5 % space.p.pow(k);
            let f = spike_at(&space, k, a0, b);
            let spec = walsh_transform::<i64>(&f);
            for i in 0..pn {
                if i == a0 {
                    let want =
                        CycInt::<i64>::root_power(space.p, k, b as i64).int_scale(pn as i64);
                    assert_eq!(spec.value(i), want);
                } else {
                    assert!(spec.value(i).is_zero(), "leak at {i}");
                }
            }
            // inverse of the spike spectrum reproduces the linear function
            let back = inverse_walsh(&spec, k).unwrap();
            assert_eq!(back, f);
            let rep = classify(&f).unwrap();
            assert_eq!(rep.s as usize, space.n());
            assert_eq!(rep.dual, vec![b]);
        }
    }

    #[test]
    fn fast_equals_naive_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f9 = FieldCtx::new(3, 2, &[1, 2, 2]).unwrap();
        let spaces = vec![
            SpaceDesc::vector(2, 5),
            SpaceDesc::vector(3, 3),
            SpaceDesc::vector(5, 2),
            SpaceDesc::of_field(f9.clone()),
            SpaceDesc::product(
                3,
                vec![Component::Vector { dim: 2 }, Component::Field { ctx: f9 }],
            )
            .unwrap(),
        ];
        for space in spaces {
            for k in 1..=3u32 {
                if space.p.pow(k) > 125 {
                    continue;
                }
                let pk = space.p.pow(k);
                for _ in 0..4 {
                    let f = GenFunction::from_fn(space.clone(), k, |_| rng.gen_range(0..pk));
                    let fast = walsh_transform::<i64>(&f);
                    let naive = walsh_transform_naive::<i64>(&f);
                    assert_eq!(fast, naive, "p={}, k={k}", space.p);
                    assert!(fast.parseval_holds());
                    let back = inverse_walsh(&fast, k).unwrap();
                    assert_eq!(back, f);
                }
            }
        }
    }

    #[test]
    fn parity_rejection_for_p2() {
        // weight-1 Boolean function on F_2^3: support is all of F_2^3, which
        // would force s = 0 and odd n + s
        let space = SpaceDesc::vector(2, 3);
        let mut table = vec![0u32; 8];
        table[7] = 1;
        let f = GenFunction::new(space, 1, table).unwrap();
        let err = classify(&f).unwrap_err();
        assert!(matches!(
            err,
            WalshError::NotPlateaued { .. } | WalshError::ParityViolation { .. }
        ));
    }

    #[test]
    fn bent_quadratic_classified() {
        // x1 x2 on F_2^2 is bent
        let space = SpaceDesc::vector(2, 2);
        let f = GenFunction::from_fn(space.clone(), 1, |i| {
            let x = space.lex_elem(i);
            x[0] * x[1] % 2
        });
        let rep = classify(&f).unwrap();
        assert_eq!(rep.s, 0);
        assert_eq!(rep.support.len(), 4);
        assert_eq!(rep.regularity, Regularity::Regular);
    }

    #[test]
    fn digits() {
        let space = SpaceDesc::vector(3, 2);
        let f = GenFunction::constant(space.clone(), 2, 5);
        let digits = digit_decompose(&f);
        assert_eq!(digits.len(), 2);
        assert!(digits[0].table.iter().all(|&v| v == 1));
        assert!(digits[1].table.iter().all(|&v| v == 2));
        assert_eq!(digit_recompose(&digits, 2).unwrap(), f);
        let g = GenFunction::constant(space, 1, 2);
        assert_eq!(digit_decompose(&g), vec![g.clone()]);
    }

    #[test]
    fn disjoint() {
        let space = SpaceDesc::vector(2, 3);
        let f = GenFunction::from_fn(space.clone(), 1, |i| (i as u32) & 1);
        assert!(!disjoint_spectra(&[&f, &f]).unwrap());
        let g = spike_at(&space, 1, 1, 0);
        let h = spike_at(&space, 1, 2, 1);
        assert!(disjoint_spectra(&[&g, &h]).unwrap());
    }

    #[test]
    fn not_plateaued_witnesses() {
        // mixed magnitudes: indicator-style table over F_3^2
        let space = SpaceDesc::vector(3, 2);
        let mut table = vec![0u32; 9];
        table[8] = 1;
        let f = GenFunction::new(space, 1, table).unwrap();
        let err = classify(&f).unwrap_err();
        match err {
            WalshError::NotPlateaued { witnesses, .. } => assert!(!witnesses.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bigint_spectrum_matches_default() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let space = SpaceDesc::vector(3, 3);
        let f = GenFunction::from_fn(space, 2, |_| rng.gen_range(0..9));
        let a = walsh_transform::<i64>(&f);
        let b = walsh_transform::<num_bigint::BigInt>(&f);
        for i in 0..a.len() {
            let av = a.value(i);
            let bv = b.value(i);
            for (x, y) in av.coeffs.iter().zip(&bv.coeffs) {
                assert_eq!(num_bigint::BigInt::from(*x), *y);
            }
        }
    }
}
