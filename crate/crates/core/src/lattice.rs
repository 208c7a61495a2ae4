//! Exact arithmetic in `G = Z^n`, its wedge square, and the mod 2 maps into
//! the symmetric tensor square of `G/2G`.
//!
//! Wedge coordinates are indexed by pairs `(i, j)` with `i < j` in
//! lexicographic order. A [`SymTensor`] stores the `n` diagonal coefficients
//! first and then the off-diagonal pairs in that same order, so the square
//! root map is a prefix projection and `pi` is the identity on the suffix.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::f2_linalg::F2Vector;

/// Number of pairs `i < j` among `n` coordinates.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Dimension `n(n+1)/2` of the symmetric tensor square of `F2^n`.
pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of the pair `(i, j)`, `i < j < n`, in lexicographic order.
pub fn wedge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < n`, in index order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn parity(x: &BigInt) -> bool {
    x.magnitude().bit(0)
}

fn write_tuple(f: &mut fmt::Formatter<'_>, coords: &[BigInt]) -> fmt::Result {
    f.write_str("(")?;
    for (k, c) in coords.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}

/// An element of `G = Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GVector(Vec<BigInt>);

impl GVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The 0/1 representative of a class in `G/2G`.
    pub fn lift(class: &F2Vector) -> Self {
        Self(
            class
                .bits()
                .map(|b| if b { BigInt::one() } else { BigInt::zero() })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> GVector {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn scale_i64(&self, k: i64) -> GVector {
        self.scale(&BigInt::from(k))
    }

    pub fn try_add(&self, other: &GVector) -> Result<GVector> {
        check_len(self.len(), other.len())?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn try_sub(&self, other: &GVector) -> Result<GVector> {
        check_len(self.len(), other.len())?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Coordinate-wise reduction to `G/2G`.
    pub fn mod2(&self) -> F2Vector {
        mod2(self)
    }

    /// Whether every coordinate is even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|c| !parity(c))
    }

    /// Halves an even vector.
    pub fn halve(&self) -> Option<GVector> {
        self.is_even()
            .then(|| Self(self.0.iter().map(|c| c / 2).collect()))
    }
}

impl Add for &GVector {
    type Output = GVector;

    /// # Panics
    /// Panics on a length mismatch; use [`GVector::try_add`] otherwise.
    fn add(self, rhs: &GVector) -> GVector {
        self.try_add(rhs).expect("GVector length mismatch")
    }
}

impl Sub for &GVector {
    type Output = GVector;

    fn sub(self, rhs: &GVector) -> GVector {
        self.try_sub(rhs).expect("GVector length mismatch")
    }
}

impl Neg for &GVector {
    type Output = GVector;

    fn neg(self) -> GVector {
        GVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GVector{self}")
    }
}

/// An element of `G ∧ G` in the pair basis `e_i ∧ e_j`, `i < j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WedgeVector {
    rank: usize,
    coords: Vec<BigInt>,
}

impl WedgeVector {
    pub fn zeros(rank: usize) -> Self {
        Self {
            rank,
            coords: vec![BigInt::zero(); pair_count(rank)],
        }
    }

    pub fn new(rank: usize, coords: Vec<BigInt>) -> Result<Self> {
        check_len(pair_count(rank), coords.len())?;
        Ok(Self { rank, coords })
    }

    pub fn from_i64s(rank: usize, coords: &[i64]) -> Result<Self> {
        Self::new(rank, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `e_i ∧ e_j` for `i < j`.
    pub fn basis(rank: usize, i: usize, j: usize) -> Self {
        let mut w = Self::zeros(rank);
        w.coords[wedge_index(rank, i, j)] = BigInt::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.coords[wedge_index(self.rank, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn try_add(&self, other: &WedgeVector) -> Result<WedgeVector> {
        check_len(self.rank, other.rank)?;
        Ok(Self {
            rank: self.rank,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn add_assign(&mut self, other: &WedgeVector) {
        assert_eq!(self.rank, other.rank, "WedgeVector rank mismatch");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn scale(&self, k: &BigInt) -> WedgeVector {
        Self {
            rank: self.rank,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mod2(&self) -> F2Vector {
        F2Vector::from_bits(self.coords.iter().map(parity))
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> BigInt {
        self.coords
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl Neg for &WedgeVector {
    type Output = WedgeVector;

    fn neg(self) -> WedgeVector {
        WedgeVector {
            rank: self.rank,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coords)
    }
}

impl fmt::Debug for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WedgeVector{self}")
    }
}

/// An element of the symmetric tensor square of `F2^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymTensor {
    pub diag: F2Vector,
    pub off: F2Vector,
}

impl SymTensor {
    pub fn zeros(rank: usize) -> Self {
        Self {
            diag: F2Vector::zeros(rank),
            off: F2Vector::zeros(pair_count(rank)),
        }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn is_zero(&self) -> bool {
        self.diag.is_zero() && self.off.is_zero()
    }

    /// Flat coordinates: diagonal first, then off-diagonal pairs.
    pub fn to_f2vector(&self) -> F2Vector {
        self.diag.concat(&self.off)
    }

    pub fn from_f2vector(rank: usize, flat: &F2Vector) -> Result<Self> {
        check_len(sym_dim(rank), flat.len())?;
        Ok(Self {
            diag: flat.slice(0, rank),
            off: flat.slice(rank, flat.len()),
        })
    }

    pub fn xor_assign(&mut self, other: &SymTensor) {
        self.diag.xor_assign(&other.diag);
        self.off.xor_assign(&other.off);
    }

    pub fn xor(&self, other: &SymTensor) -> SymTensor {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Symmetric `n × n` matrix with entry `(i, j)` the coefficient of
    /// `e_i ⊗ e_j`.
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.rank();
        let mut rows = vec![vec![false; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = self.diag.get(i);
        }
        for (i, j) in pairs(n) {
            let b = self.off.get(wedge_index(n, i, j));
            rows[i][j] = b;
            rows[j][i] = b;
        }
        rows
    }
}

/// `g ∧ h`, with coordinate `(i, j)` equal to `g_i h_j - g_j h_i`.
pub fn wedge(g: &GVector, h: &GVector) -> Result<WedgeVector> {
    check_len(g.len(), h.len())?;
    let n = g.len();
    let (g, h) = (g.coords(), h.coords());
    let coords = pairs(n).map(|(i, j)| &g[i] * &h[j] - &g[j] * &h[i]).collect();
    Ok(WedgeVector { rank: n, coords })
}

pub fn mod2(g: &GVector) -> F2Vector {
    F2Vector::from_bits(g.coords().iter().map(parity))
}

/// `g ⊗ g` for a class `g` of `G/2G`.
pub fn sym_square(gbar: &F2Vector) -> SymTensor {
    let n = gbar.len();
    let mut off = F2Vector::zeros(pair_count(n));
    let support: Vec<usize> = gbar.ones().collect();
    for (a, &i) in support.iter().enumerate() {
        for &j in &support[a + 1..] {
            off.set(wedge_index(n, i, j), true);
        }
    }
    SymTensor {
        diag: gbar.clone(),
        off,
    }
}

/// `u ∧ v ↦ u ⊗ v - v ⊗ u` over F2: zero diagonal, off-diagonal equal to the
/// wedge coordinates.
pub fn pi_map(rank: usize, w: &F2Vector) -> Result<SymTensor> {
    check_len(pair_count(rank), w.len())?;
    Ok(SymTensor {
        diag: F2Vector::zeros(rank),
        off: w.clone(),
    })
}

/// The square root `g ⊗ g ↦ g`, i.e. the diagonal.
pub fn sqrt_diag(s: &SymTensor) -> F2Vector {
    s.diag.clone()
}

/// `(w, g) ↦ pi(w) + g ⊗ g`.
pub fn phi(w: &F2Vector, gbar: &F2Vector) -> Result<SymTensor> {
    let mut s = pi_map(gbar.len(), w)?;
    s.xor_assign(&sym_square(gbar));
    Ok(s)
}

/// `g ∧ h` reduced mod 2, for classes of `G/2G`.
pub fn wedge_mod2(g: &F2Vector, h: &F2Vector) -> Result<F2Vector> {
    check_len(g.len(), h.len())?;
    let n = g.len();
    Ok(F2Vector::from_bits(
        pairs(n).map(|(i, j)| (g.get(i) && h.get(j)) ^ (g.get(j) && h.get(i))),
    ))
}

/// Product `(s, g)(t, h) = (s + t + g ∧ h, g + h)` in the mod 2 Heisenberg
/// group `(G2 ∧ G2) ×_∧ G2`.
pub fn heisenberg_mul_mod2(
    (s, g): (&F2Vector, &F2Vector),
    (t, h): (&F2Vector, &F2Vector),
) -> Result<(F2Vector, F2Vector)> {
    check_len(pair_count(g.len()), s.len())?;
    check_len(s.len(), t.len())?;
    let mut l = wedge_mod2(g, h)?;
    l.xor_assign(s);
    l.xor_assign(t);
    Ok((l, g.xor(h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> F2Vector {
        s.parse().unwrap()
    }

    #[test]
    fn index_map() {
        let n = 4;
        let idx: Vec<usize> = pairs(n).map(|(i, j)| wedge_index(n, i, j)).collect();
        assert_eq!(idx, (0..pair_count(n)).collect::<Vec<_>>());
        assert_eq!(pair_count(1), 0);
        assert_eq!(sym_dim(64), 2080);
    }

    #[test]
    fn wedge_examples() {
        let e0 = GVector::from_i64s(&[1, 0, 0]);
        let e1 = GVector::from_i64s(&[0, 1, 0]);
        assert_eq!(wedge(&e0, &e1).unwrap(), WedgeVector::from_i64s(3, &[1, 0, 0]).unwrap());
        let g = GVector::from_i64s(&[1, 2, 0]);
        let h = GVector::from_i64s(&[0, 1, 1]);
        assert_eq!(wedge(&g, &h).unwrap(), WedgeVector::from_i64s(3, &[1, 1, 2]).unwrap());
        assert!(wedge(&g, &g).unwrap().is_zero());
        assert_eq!(
            wedge(&g, &GVector::zeros(2)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn mod2_examples() {
        assert_eq!(mod2(&GVector::from_i64s(&[3, -2])), bits("10"));
        assert_eq!(mod2(&GVector::zeros(3)), bits("000"));
        assert_eq!(mod2(&GVector::from_i64s(&[-7, 14, -1])), bits("101"));
    }

    #[test]
    fn sym_square_examples() {
        let s = sym_square(&bits("10"));
        assert_eq!((s.diag, s.off), (bits("10"), bits("0")));
        let s = sym_square(&bits("11"));
        assert_eq!((s.diag.clone(), s.off.clone()), (bits("11"), bits("1")));
        assert_eq!(s.to_matrix(), vec![vec![true, true], vec![true, true]]);
        assert!(sym_square(&bits("000")).is_zero());
    }

    #[test]
    fn pi_and_sqrt() {
        let s = pi_map(3, &bits("100")).unwrap();
        assert!(s.diag.is_zero());
        assert!(s.off.get(wedge_index(3, 0, 1)));
        assert!(pi_map(3, &bits("00")).is_err());
        assert_eq!(sqrt_diag(&sym_square(&bits("101"))), bits("101"));
        assert!(sqrt_diag(&pi_map(3, &bits("111")).unwrap()).is_zero());
    }

    #[test]
    fn phi_examples() {
        let g = bits("1101");
        assert_eq!(phi(&F2Vector::zeros(6), &g).unwrap(), sym_square(&g));
        let w = bits("010011");
        assert_eq!(phi(&w, &F2Vector::zeros(4)).unwrap(), pi_map(4, &w).unwrap());
        assert!(phi(&bits("01"), &g).is_err());
    }

    #[test]
    fn flat_round_trip() {
        let s = phi(&bits("101"), &bits("011")).unwrap();
        let flat = s.to_f2vector();
        assert_eq!(flat.len(), 6);
        assert_eq!(SymTensor::from_f2vector(3, &flat).unwrap(), s);
    }

    #[test]
    fn halve_and_parity() {
        let v = GVector::from_i64s(&[4, -2, 0]);
        assert_eq!(v.halve(), Some(GVector::from_i64s(&[2, -1, 0])));
        assert_eq!(GVector::from_i64s(&[1, 2]).halve(), None);
    }
}
