//! Exact arithmetic in the ring of integers `Z[zeta_{p^k}]`, plus the polar
//! decomposition of plateau-magnitude values into
//! `delta * G^half * p^r * zeta^t`, where `G` is the quadratic Gauss sum.
//!
//! Elements are coefficient vectors over the power basis
//! `{1, zeta, ..., zeta^{phi-1}}` with `phi = (p-1) p^{k-1}`, fully reduced by
//! the cyclotomic relation `zeta^phi = -sum_{j<p-1} zeta^{j p^{k-1}}`, so
//! equality is coefficient-wise. Coefficients are any scalar implementing
//! [`Coeff`]; the crate-root aliases pick `i64` for speed and `BigInt` for
//! unbounded headroom.

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Scalar type for cyclotomic coefficients. Arithmetic is checked: an
/// overflowing fixed-width scalar aborts loudly instead of wrapping.
pub trait Coeff:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

const OVERFLOW: &str = "cyclotomic coefficient overflow; rerun with a wider scalar (CycBig)";

#[inline]
pub(crate) fn ck_add<T: Coeff>(a: &T, b: &T) -> T {
    a.checked_add(b).expect(OVERFLOW)
}

#[inline]
pub(crate) fn ck_sub<T: Coeff>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect(OVERFLOW)
}

#[inline]
pub(crate) fn ck_mul<T: Coeff>(a: &T, b: &T) -> T {
    a.checked_mul(b).expect(OVERFLOW)
}

pub(crate) fn t_from_i64<T: Coeff>(v: i64) -> T {
    T::from_i64(v).expect("scalar cannot represent constant")
}

/// p^e as a scalar, with overflow checking.
pub(crate) fn t_pow<T: Coeff>(p: u32, e: u32) -> T {
    let pt: T = t_from_i64(p as i64);
    let mut acc = T::one();
    for _ in 0..e {
        acc = ck_mul(&acc, &pt);
    }
    acc
}

/// Errors from cyclotomic arithmetic and decomposition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("operands live in different rings: Z[zeta_{{{p0}^{k0}}}] vs Z[zeta_{{{p1}^{k1}}}]")]
    MixedRing { p0: u32, k0: u32, p1: u32, k1: u32 },
    #[error("norm is not a rational integer")]
    NonScalarNorm,
    #[error("value is not of plateau form for exponent {n_plus_s}")]
    NotPlateauForm { n_plus_s: u32 },
    #[error("value does not have plateau magnitude p^{expected}")]
    NotPlateauMagnitude { expected: u32 },
    #[error("sqrt(2) is not in Z[zeta_{{2^k}}]; Gauss sums require odd p")]
    EvenGaussSum,
}

/// Basis parameters of `Z[zeta_{p^k}]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycCtx {
    pub p: u32,
    pub k: u32,
}

impl CycCtx {
    pub fn new(p: u32, k: u32) -> Self {
        assert!(p >= 2 && k >= 1);
        CycCtx { p, k }
    }

    /// p^k, the order of zeta.
    pub fn pk(&self) -> usize {
        (self.p as usize).pow(self.k)
    }

    /// p^{k-1}, the stride of the cyclotomic relation.
    pub fn pkm1(&self) -> usize {
        (self.p as usize).pow(self.k - 1)
    }

    /// phi(p^k) = (p-1) p^{k-1}, the rank of the ring.
    pub fn phi(&self) -> usize {
        (self.p as usize - 1) * self.pkm1()
    }
}

/// Accumulate `c * zeta^e` into a canonical coefficient slice.
/// `e` may be any value below `2 * p^k`.
#[inline]
pub(crate) fn acc_monomial<T: Coeff>(ctx: CycCtx, dst: &mut [T], mut e: usize, c: &T) {
    let pk = ctx.pk();
    let phi = ctx.phi();
    if e >= pk {
        e -= pk;
    }
    if e < phi {
        dst[e] = ck_add(&dst[e], c);
    } else {
        // zeta^(phi + r) = -sum_{j=0}^{p-2} zeta^(j p^{k-1} + r)
        let r = e - phi;
        let step = ctx.pkm1();
        let mut at = r;
        for _ in 0..ctx.p - 1 {
            dst[at] = ck_sub(&dst[at], c);
            at += step;
        }
    }
}

/// dst += zeta^e * src, both canonical slices of length phi.
#[inline]
pub(crate) fn acc_rotated<T: Coeff>(ctx: CycCtx, dst: &mut [T], src: &[T], e: usize) {
    for (i, c) in src.iter().enumerate() {
        if !c.is_zero() {
            acc_monomial(ctx, dst, i + e, c);
        }
    }
}

pub(crate) fn slice_is_zero<T: Coeff>(s: &[T]) -> bool {
    s.iter().all(|c| c.is_zero())
}

/// Norm of a canonical slice: `z * conj(z)` when that product is a rational
/// integer, which is the case for every plateau-magnitude value under test.
pub(crate) fn slice_norm_sq<T: Coeff>(ctx: CycCtx, s: &[T]) -> Result<T, CycError> {
    let z = CycInt::from_coeffs(ctx.p, ctx.k, s.to_vec());
    z.norm_sq()
}

/// An exact element of `Z[zeta_{p^k}]` in canonical (fully reduced) form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycInt<T> {
    pub p: u32,
    pub k: u32,
    pub coeffs: Vec<T>,
}

impl<T: Coeff> CycInt<T> {
    pub fn ctx(&self) -> CycCtx {
        CycCtx::new(self.p, self.k)
    }

    pub fn zero(p: u32, k: u32) -> Self {
        let ctx = CycCtx::new(p, k);
        CycInt {
            p,
            k,
            coeffs: vec![T::zero(); ctx.phi()],
        }
    }

    pub fn from_coeffs(p: u32, k: u32, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), CycCtx::new(p, k).phi());
        CycInt { p, k, coeffs }
    }

    pub fn from_int(p: u32, k: u32, v: i64) -> Self {
        let mut z = Self::zero(p, k);
        z.coeffs[0] = t_from_i64(v);
        z
    }

    /// Canonical form of `zeta^j` (j arbitrary, reduced mod p^k).
    pub fn root_power(p: u32, k: u32, j: i64) -> Self {
        let ctx = CycCtx::new(p, k);
        let pk = ctx.pk() as i64;
        let e = j.rem_euclid(pk) as usize;
        let mut z = Self::zero(p, k);
        acc_monomial(ctx, &mut z.coeffs, e, &T::one());
        z
    }

    pub fn is_zero(&self) -> bool {
        slice_is_zero(&self.coeffs)
    }

    fn check_ring(&self, other: &Self) -> Result<(), CycError> {
        if self.p != other.p || self.k != other.k {
            return Err(CycError::MixedRing {
                p0: self.p,
                k0: self.k,
                p1: other.p,
                k1: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CycError> {
        self.check_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| ck_add(a, b))
            .collect();
        Ok(CycInt {
            p: self.p,
            k: self.k,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CycError> {
        self.check_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| ck_sub(a, b))
            .collect();
        Ok(CycInt {
            p: self.p,
            k: self.k,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        let z = T::zero();
        CycInt {
            p: self.p,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| ck_sub(&z, c)).collect(),
        }
    }

    pub fn int_scale(&self, c: i64) -> Self {
        let ct: T = t_from_i64(c);
        CycInt {
            p: self.p,
            k: self.k,
            coeffs: self.coeffs.iter().map(|x| ck_mul(x, &ct)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CycError> {
        self.check_ring(other)?;
        let ctx = self.ctx();
        let phi = ctx.phi();
        let mut conv = vec![T::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = ck_mul(a, b);
                conv[i + j] = ck_add(&conv[i + j], &prod);
            }
        }
        let mut out = Self::zero(self.p, self.k);
        for (e, c) in conv.into_iter().enumerate() {
            if !c.is_zero() {
                acc_monomial(ctx, &mut out.coeffs, e, &c);
            }
        }
        Ok(out)
    }

    /// Complex conjugation, zeta^j -> zeta^{-j}.
    pub fn conj(&self) -> Self {
        let ctx = self.ctx();
        let pk = ctx.pk();
        let mut out = Self::zero(self.p, self.k);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = if i == 0 { 0 } else { pk - i };
                acc_monomial(ctx, &mut out.coeffs, e, c);
            }
        }
        out
    }

    /// `z * conj(z)` when it is a rational integer (equivalently `|z|^2` for
    /// the magnitudes arising from Walsh values); otherwise an error.
    pub fn norm_sq(&self) -> Result<T, CycError> {
        let prod = self.mul(&self.conj())?;
        if prod.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Ok(prod.coeffs[0].clone())
        } else {
            Err(CycError::NonScalarNorm)
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_rational_int(&self) -> Option<T> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl<T: Coeff> fmt::Display for CycInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Quadratic Gauss sum `G = sum_{x in F_p} zeta_p^{x^2}`, embedded in
/// `Z[zeta_{p^k}]`. Its square is `p* = (-1/p) p`.
pub fn gauss_sum<T: Coeff>(p: u32, k: u32) -> Result<CycInt<T>, CycError> {
    if p == 2 {
        return Err(CycError::EvenGaussSum);
    }
    let ctx = CycCtx::new(p, k);
    let mut z = CycInt::zero(p, k);
    for x in 0..p as usize {
        let e = x * x % p as usize * ctx.pkm1();
        acc_monomial(ctx, &mut z.coeffs, e, &T::one());
    }
    Ok(z)
}

/// Legendre symbol (-1/p) for odd p.
pub fn legendre_minus_one(p: u32) -> i32 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// Polar decomposition
// ---------------------------------------------------------------------------

/// Symbolic fourth root of unity: the value of a `mu` label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitTag {
    #[serde(rename = "+1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "+i")]
    I,
    #[serde(rename = "-i")]
    MinusI,
}

impl UnitTag {
    pub fn is_imaginary(self) -> bool {
        matches!(self, UnitTag::I | UnitTag::MinusI)
    }

    /// Sign of the real (or imaginary) part: +1 or -1.
    pub fn sign(self) -> i8 {
        match self {
            UnitTag::One | UnitTag::I => 1,
            UnitTag::MinusOne | UnitTag::MinusI => -1,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            UnitTag::One => UnitTag::One,
            UnitTag::MinusOne => UnitTag::MinusOne,
            UnitTag::I => UnitTag::MinusI,
            UnitTag::MinusI => UnitTag::I,
        }
    }

    pub fn mul(self, other: Self) -> Self {
        // represent as i^a with a in 0..4
        let a = |t: Self| match t {
            UnitTag::One => 0u32,
            UnitTag::I => 1,
            UnitTag::MinusOne => 2,
            UnitTag::MinusI => 3,
        };
        match (a(self) + a(other)) % 4 {
            0 => UnitTag::One,
            1 => UnitTag::I,
            2 => UnitTag::MinusOne,
            _ => UnitTag::MinusI,
        }
    }
}

impl fmt::Display for UnitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UnitTag::One => "+1",
            UnitTag::MinusOne => "-1",
            UnitTag::I => "+i",
            UnitTag::MinusI => "-i",
        };
        write!(f, "{s}")
    }
}

/// Exact decomposition `delta * G^half * p^r * zeta^t` of a plateau-magnitude
/// value, with `G` the quadratic Gauss sum (convention: `G = sqrt(-1) sqrt(p)`
/// for `p = 3 mod 4`). For `p = 2`, `half` is always false and `delta` +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarForm {
    pub delta: i8,
    pub half: bool,
    pub r: u32,
    pub t: u32,
}

impl PolarForm {
    /// Reconstruct the represented value.
    pub fn value<T: Coeff>(&self, p: u32, k: u32) -> CycInt<T> {
        let mut z = CycInt::<T>::root_power(p, k, self.t as i64);
        if self.half {
            let g = gauss_sum::<T>(p, k).expect("half set for p = 2");
            z = z.mul(&g).expect("same ring");
        }
        let scale: T = t_pow(p, self.r);
        z = CycInt {
            p,
            k,
            coeffs: z.coeffs.iter().map(|c| ck_mul(c, &scale)).collect(),
        };
        if self.delta < 0 {
            z = z.neg();
        }
        z
    }

    /// The `mu` label this value carries when read as a Walsh value
    /// `mu * p^{(n+s)/2} * zeta^t`.
    pub fn unit_tag(&self, p: u32) -> UnitTag {
        if self.half && p % 4 == 3 {
            if self.delta > 0 {
                UnitTag::I
            } else {
                UnitTag::MinusI
            }
        } else if self.delta > 0 {
            UnitTag::One
        } else {
            UnitTag::MinusOne
        }
    }
}

/// Precomputed reference values `G^half * p^r * zeta^t` for all `t`, for fast
/// repeated decomposition while classifying a spectrum.
pub struct PolarTable<T> {
    pub p: u32,
    pub k: u32,
    pub half: bool,
    pub r: u32,
    refs: Vec<Vec<T>>,
}

impl<T: Coeff> PolarTable<T> {
    pub fn new(p: u32, k: u32, n_plus_s: u32) -> Result<Self, CycError> {
        let half = n_plus_s % 2 == 1;
        if p == 2 && half {
            return Err(CycError::EvenGaussSum);
        }
        let r = n_plus_s / 2;
        let base = PolarForm {
            delta: 1,
            half,
            r,
            t: 0,
        }
        .value::<T>(p, k);
        let pk = CycCtx::new(p, k).pk();
        let mut refs = Vec::with_capacity(pk);
        for t in 0..pk {
            let v = base
                .mul(&CycInt::root_power(p, k, t as i64))
                .expect("same ring");
            refs.push(v.coeffs);
        }
        Ok(PolarTable {
            p,
            k,
            half,
            r,
            refs,
        })
    }

    /// Match a canonical slice against `+-(G^half p^r zeta^t)`.
    /// For p = 2 only the +1 branch is reported (the sign is a root of unity).
    pub fn match_slice(&self, s: &[T]) -> Option<PolarForm> {
        let zero = T::zero();
        for (t, r) in self.refs.iter().enumerate() {
            let mut plus = true;
            let mut minus = self.p != 2;
            for (a, b) in s.iter().zip(r) {
                if plus && a != b {
                    plus = false;
                }
                if minus && ck_add(a, b) != zero {
                    minus = false;
                }
                if !plus && !minus {
                    break;
                }
            }
            if plus {
                return Some(PolarForm {
                    delta: 1,
                    half: self.half,
                    r: self.r,
                    t: t as u32,
                });
            }
            if minus {
                return Some(PolarForm {
                    delta: -1,
                    half: self.half,
                    r: self.r,
                    t: t as u32,
                });
            }
        }
        None
    }
}

/// Decompose `z` with `|z|^2 = p^{n_plus_s}` into its polar form by exhaustive
/// search over the finitely many candidates.
pub fn polar_decompose<T: Coeff>(z: &CycInt<T>, n_plus_s: u32) -> Result<PolarForm, CycError> {
    let expected: T = t_pow(z.p, n_plus_s);
    match z.norm_sq() {
        Ok(n) if n == expected => {}
        _ => {
            return Err(CycError::NotPlateauMagnitude {
                expected: n_plus_s,
            })
        }
    }
    let table = PolarTable::new(z.p, z.k, n_plus_s)?;
    table
        .match_slice(&z.coeffs)
        .ok_or(CycError::NotPlateauForm { n_plus_s })
}

/// Result of raising a normalized plateau value to the p^k-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkPower {
    Unity,
    MinusOne,
    Other,
}

/// Decide `(p^{(s-n)/2} * i^{imaginary_mu} * z)^{p^k}` exactly, where `z` is a
/// canonical ring element with `|z|^2 = p^{n-s}`. The `imaginary_mu` flag
/// accounts for designs whose `mu` labels are `+-sqrt(-1)`: the labels factor
/// as `sign * sqrt(-1)` and only the sign-weighted sum lives in the ring.
pub fn pk_power_unity<T: Coeff>(
    z: &CycInt<T>,
    n: u32,
    s: u32,
    imaginary_mu: bool,
) -> Result<PkPower, CycError> {
    assert!(n > s);
    let n_minus_s = n - s;
    let expected: T = t_pow(z.p, n_minus_s);
    match z.norm_sq() {
        Ok(v) if v == expected => {}
        _ => {
            return Err(CycError::NotPlateauMagnitude {
                expected: n_minus_s,
            })
        }
    }
    let polar = polar_decompose(z, n_minus_s)?;
    if z.p == 2 {
        // the unit is a p^k-th root of unity; its p^k-th power is 1
        return Ok(PkPower::Unity);
    }
    // unit u = delta * i^ipow * zeta^t with the Gauss convention
    let mut ipow: u32 = 0;
    if polar.half && z.p % 4 == 3 {
        ipow += 1;
    }
    if imaginary_mu {
        ipow += 1;
    }
    // u^{p^k}: zeta^t dies, delta survives (odd power), i^ipow -> i^{ipow p^k}
    let pk_mod4 = crate::ff::pow_mod(z.p % 4, z.k as u64, 4);
    let i_exp = (ipow * pk_mod4) % 4;
    let sign_neg = polar.delta < 0;
    Ok(match (i_exp, sign_neg) {
        (0, false) => PkPower::Unity,
        (0, true) => PkPower::MinusOne,
        (2, false) => PkPower::MinusOne,
        (2, true) => PkPower::Unity,
        _ => PkPower::Other,
    })
}

/// Read off `zeta^t`-normalized data for synthesis: when the unit part of
/// `p^{(s-n)/2} i^imag z` is exactly `zeta^t`, return `t`.
pub fn unit_root_exponent<T: Coeff>(
    z: &CycInt<T>,
    n: u32,
    s: u32,
    imaginary_mu: bool,
) -> Result<Option<u32>, CycError> {
    let polar = polar_decompose(z, n - s)?;
    if z.p == 2 {
        return Ok(Some(polar.t));
    }
    let mut ipow: u32 = 0;
    if polar.half && z.p % 4 == 3 {
        ipow += 1;
    }
    if imaginary_mu {
        ipow += 1;
    }
    // unit = delta * i^ipow * zeta^t; it equals zeta^t' iff delta*i^ipow = 1
    let eff_sign = match ipow % 4 {
        0 => Some(polar.delta),
        2 => Some(-polar.delta),
        _ => None,
    };
    Ok(match eff_sign {
        Some(1) => Some(polar.t),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type C = CycInt<i64>;

    #[test]
    fn cyclotomic_relation() {
        // p=3, k=1: 1 + z + z^2 = 0
        let one = C::root_power(3, 1, 0);
        let z1 = C::root_power(3, 1, 1);
        let z2 = C::root_power(3, 1, 2);
        assert!(one.add(&z1).unwrap().add(&z2).unwrap().is_zero());
        // p=2, k=1: zeta_2 = -1
        assert_eq!(C::root_power(2, 1, 1), C::from_int(2, 1, -1));
        // p=3, k=2: zeta_9^3 is the embedding of zeta_3; x^3 mod Phi_9 stays x^3
        let z3 = C::root_power(3, 2, 3);
        let mut want = C::zero(3, 2);
        want.coeffs[3] = 1;
        assert_eq!(z3, want);
        // and reducing x^6 wraps: zeta_9^6 = -1 - zeta_9^3
        let z6 = C::root_power(3, 2, 6);
        let mut want6 = C::zero(3, 2);
        want6.coeffs[0] = -1;
        want6.coeffs[3] = -1;
        assert_eq!(z6, want6);
    }

    #[test]
    fn mixed_ring_rejected() {
        let a = C::root_power(3, 1, 1);
        let b = C::root_power(3, 2, 1);
        assert!(matches!(a.add(&b), Err(CycError::MixedRing { .. })));
    }

    #[test]
    fn norm_examples() {
        // sum of all cube roots of unity is zero
        let mut z = C::zero(3, 1);
        for x in 0..3 {
            z = z.add(&C::root_power(3, 1, x)).unwrap();
        }
        assert_eq!(z.norm_sq().unwrap(), 0);
        // c * zeta^j has norm c^2
        let z = C::root_power(5, 1, 3).int_scale(-7);
        assert_eq!(z.norm_sq().unwrap(), 49);
        // Gauss sum over F_3 is 1 + 2 zeta_3, norm 3
        let g = gauss_sum::<i64>(3, 1).unwrap();
        assert_eq!(g.coeffs, vec![1, 2]);
        assert_eq!(g.norm_sq().unwrap(), 3);
    }

    #[test]
    fn gauss_sums() {
        // squares mod 5 are {0,1,4,4,1}
        let g5 = gauss_sum::<i64>(5, 1).unwrap();
        let mut expect = C::root_power(5, 1, 0);
        expect = expect.add(&C::root_power(5, 1, 1).int_scale(2)).unwrap();
        expect = expect.add(&C::root_power(5, 1, 4).int_scale(2)).unwrap();
        assert_eq!(g5, expect);
        for p in [3u32, 5, 7, 11, 13] {
            let g = gauss_sum::<i64>(p, 1).unwrap();
            assert_eq!(g.norm_sq().unwrap(), p as i64);
            let sq = g.mul(&g).unwrap();
            let want = C::from_int(p, 1, legendre_minus_one(p) as i64 * p as i64);
            assert_eq!(sq, want, "G^2 = (-1/p) p fails for p={p}");
            // conj(G) * G = p as well
            assert_eq!(
                g.mul(&g.conj()).unwrap(),
                C::from_int(p, 1, p as i64)
            );
        }
        assert!(gauss_sum::<i64>(2, 3).is_err());
    }

    #[test]
    fn polar_examples() {
        // 8 * zeta_8^3 with n+s = 6, p=2, k=3
        let z = CycInt::<i64>::root_power(2, 3, 3).int_scale(8);
        let pf = polar_decompose(&z, 6).unwrap();
        assert_eq!(
            pf,
            PolarForm {
                delta: 1,
                half: false,
                r: 3,
                t: 3
            }
        );
        // -G * 3 * zeta_9^2 with n+s = 3, p=3, k=2
        let g = gauss_sum::<i64>(3, 2).unwrap();
        let z = g
            .mul(&CycInt::root_power(3, 2, 2))
            .unwrap()
            .int_scale(-3);
        let pf = polar_decompose(&z, 3).unwrap();
        assert_eq!(
            pf,
            PolarForm {
                delta: -1,
                half: true,
                r: 1,
                t: 2
            }
        );
        assert_eq!(pf.value::<i64>(3, 2), z);
        assert_eq!(pf.unit_tag(3), UnitTag::MinusI);
        // wrong magnitude is refused
        assert!(polar_decompose(&z, 4).is_err());
    }

    #[test]
    fn pk_power_examples() {
        // z = p^{(n-s)/2} zeta^t, n-s even -> Unity
        let z = CycInt::<i64>::root_power(3, 2, 5).int_scale(9);
        assert_eq!(pk_power_unity(&z, 5, 1, false).unwrap(), PkPower::Unity);
        // z = -5^{(n-s)/2}, p=5, n-s even -> MinusOne
        let z = CycInt::<i64>::from_int(5, 1, -25);
        assert_eq!(pk_power_unity(&z, 5, 1, false).unwrap(), PkPower::MinusOne);
        // magnitude precondition
        let z = CycInt::<i64>::from_int(5, 1, 3);
        assert!(pk_power_unity(&z, 5, 1, false).is_err());
    }

    #[test]
    fn unit_tags() {
        assert_eq!(UnitTag::I.mul(UnitTag::I), UnitTag::MinusOne);
        assert_eq!(UnitTag::I.inverse(), UnitTag::MinusI);
        assert_eq!(UnitTag::MinusOne.mul(UnitTag::MinusI), UnitTag::I);
        for t in [UnitTag::One, UnitTag::MinusOne, UnitTag::I, UnitTag::MinusI] {
            assert_eq!(t.mul(t.inverse()), UnitTag::One);
        }
    }

    #[test]
    fn bigint_agrees_with_i64() {
        let a64 = C::root_power(3, 2, 4).int_scale(12);
        let b64 = gauss_sum::<i64>(3, 2).unwrap();
        let abig = CycInt::<BigInt>::root_power(3, 2, 4).int_scale(12);
        let bbig = gauss_sum::<BigInt>(3, 2).unwrap();
        let p64 = a64.mul(&b64).unwrap();
        let pbig = abig.mul(&bbig).unwrap();
        for (x, y) in p64.coeffs.iter().zip(&pbig.coeffs) {
            assert_eq!(BigInt::from(*x), *y);
        }
    }

    fn arb_cyc(p: u32, k: u32) -> impl Strategy<Value = C> {
        let phi = CycCtx::new(p, k).phi();
        proptest::collection::vec(-50i64..50, phi)
            .prop_map(move |coeffs| CycInt::from_coeffs(p, k, coeffs))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in (arb_cyc(3, 2), arb_cyc(3, 2), arb_cyc(3, 2))) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let comm = a.mul(&b).unwrap();
            prop_assert_eq!(comm, b.mul(&a).unwrap());
        }

        #[test]
        fn conj_is_involutive_automorphism((a, b) in (arb_cyc(5, 1), arb_cyc(5, 1))) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            let lhs = a.mul(&b).unwrap().conj();
            let rhs = a.conj().mul(&b.conj()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norm_multiplicative((a, b) in (arb_cyc(3, 1), arb_cyc(3, 1))) {
            if let (Ok(na), Ok(nb)) = (a.norm_sq(), b.norm_sq()) {
                let nab = a.mul(&b).unwrap().norm_sq().unwrap();
                prop_assert_eq!(nab, na * nb);
            }
        }

        #[test]
        fn polar_roundtrip(t in 0u32..9, sign in proptest::bool::ANY, half in proptest::bool::ANY, r in 0u32..4) {
            let n_plus_s = 2 * r + half as u32;
            if n_plus_s == 0 { return Ok(()); }
            let pf = PolarForm { delta: if sign {1} else {-1}, half, r, t };
            let z = pf.value::<i64>(3, 2);
            let back = polar_decompose(&z, n_plus_s).unwrap();
            prop_assert_eq!(back, pf);
        }
    }
}
