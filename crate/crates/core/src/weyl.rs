//! Weyl group arithmetic.
//!
//! The Weyl group lives inside the central extension `(G∧G) ×_∧ G ⋊ V` with
//! product `(l,g,v)(l',g',v') = (l + l' + g∧(v g'), g + v g', v v')`; the
//! reflection of a root `t` is `(0, t, -1)`. Its abelianization is computed
//! in `(G2 ⊗_sym G2) × V` where the reflection of a class `t` is `(t⊗t, -1)`,
//! and the initial reflection group of the classes is `F(T^ab \ {0}) × V`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::f2_linalg::F2Vector;
use crate::lattice::{self, GVector, SymTensor, WedgeVector};
use crate::symmetric_space::RootDatum;

/// An element of `V = {1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `v·g`.
    pub fn apply(self, g: &GVector) -> GVector {
        match self {
            Sign::Plus => g.clone(),
            Sign::Minus => -g,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn require_root(d: &RootDatum, t: &GVector, index: usize) -> Result<()> {
    if d.contains(t)? {
        Ok(())
    } else {
        Err(Error::NotARoot { index })
    }
}

fn require_class(d: &RootDatum, t: &F2Vector, index: usize) -> Result<()> {
    if t.len() != d.rank() {
        return Err(Error::DimensionMismatch {
            expected: d.rank(),
            found: t.len(),
        });
    }
    if d.contains_class(t) {
        Ok(())
    } else {
        Err(Error::NotARoot { index })
    }
}

/// An element `(g, v)` of `A = G ⋊ V`, acting on roots by `t ↦ 2g + v t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineElement {
    pub g: GVector,
    pub v: Sign,
}

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            g: GVector::zeros(rank),
            v: Sign::Plus,
        }
    }

    /// `t^A = (t, -1)`.
    pub fn reflection(d: &RootDatum, t: &GVector) -> Result<Self> {
        require_root(d, t, 0)?;
        Ok(Self {
            g: t.clone(),
            v: Sign::Minus,
        })
    }

    pub fn multiply(&self, other: &AffineElement) -> Result<AffineElement> {
        Ok(Self {
            g: self.g.try_add(&self.v.apply(&other.g))?,
            v: self.v * other.v,
        })
    }

    /// `(g, v).t = 2g + v t`.
    pub fn act(&self, d: &RootDatum, t: &GVector) -> Result<GVector> {
        check_rank(self.g.len(), t.len())?;
        require_root(d, t, 0)?;
        self.g.scale_i64(2).try_add(&self.v.apply(t))
    }
}

/// An element `(l, g, v)` of `(G∧G) ×_∧ G ⋊ V`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    pub l: WedgeVector,
    pub g: GVector,
    pub v: Sign,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            l: WedgeVector::zeros(rank),
            g: GVector::zeros(rank),
            v: Sign::Plus,
        }
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn is_identity(&self) -> bool {
        self.v == Sign::Plus && self.g.is_zero() && self.l.is_zero()
    }

    /// `t^W = (0, t, -1)`; fails with [`Error::NotARoot`] unless `t` is a root.
    pub fn reflection(d: &RootDatum, t: &GVector) -> Result<Self> {
        require_root(d, t, 0)?;
        Ok(Self::reflection_unchecked(t))
    }

    pub(crate) fn reflection_unchecked(t: &GVector) -> Self {
        Self {
            l: WedgeVector::zeros(t.len()),
            g: t.clone(),
            v: Sign::Minus,
        }
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        check_rank(self.rank(), other.rank())?;
        let twisted = self.v.apply(&other.g);
        let mut l = self.l.try_add(&other.l)?;
        // cocycle g ∧ (v g')
        l.add_assign(&lattice::wedge(&self.g, &twisted)?);
        Ok(Self {
            l,
            g: &self.g + &twisted,
            v: self.v * other.v,
        })
    }

    /// `(l, g, v)^{-1} = (-l, -v g, v)`.
    pub fn inverse(&self) -> WeylElement {
        Self {
            l: -&self.l,
            g: -&self.v.apply(&self.g),
            v: self.v,
        }
    }

    /// Projection to `A` (drops the central part).
    pub fn project(&self) -> AffineElement {
        AffineElement {
            g: self.g.clone(),
            v: self.v,
        }
    }

    /// Action on roots through the projection to `A`.
    pub fn act(&self, d: &RootDatum, t: &GVector) -> Result<GVector> {
        self.project().act(d, t)
    }

    /// Image in `(G2 ⊗_sym G2) × V` under `(l, g, v) ↦ (phi(l mod 2, g mod 2), v)`.
    pub fn abelianize(&self) -> WabElement {
        let s = lattice::phi(&self.l.mod2(), &self.g.mod2())
            .expect("wedge and G parts of one element have consistent ranks");
        WabElement { s, v: self.v }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l={} g={} v={}", self.l, self.g, self.v)
    }
}

/// An element of the abelianized Weyl group `(G2 ⊗_sym G2) × V`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WabElement {
    pub s: SymTensor,
    pub v: Sign,
}

impl WabElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            s: SymTensor::zeros(rank),
            v: Sign::Plus,
        }
    }

    /// `(t⊗t, -1)`.
    pub fn reflection(class: &F2Vector) -> Self {
        Self {
            s: lattice::sym_square(class),
            v: Sign::Minus,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.v == Sign::Plus && self.s.is_zero()
    }

    pub fn multiply(&self, other: &WabElement) -> WabElement {
        Self {
            s: self.s.xor(&other.s),
            v: self.v * other.v,
        }
    }

    /// Action on classes: `2g + v t ≡ t`, the trivial multiplication.
    pub fn act(&self, t: &F2Vector) -> F2Vector {
        t.clone()
    }
}

/// An element of `U^ab = F(T^ab \ {0}) × V`. The free part is the set of
/// nonzero classes with coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UabElement {
    pub free: BTreeSet<F2Vector>,
    pub v: Sign,
}

impl UabElement {
    pub fn identity() -> Self {
        Self {
            free: BTreeSet::new(),
            v: Sign::Plus,
        }
    }

    /// `(iota(t), -1)` for `t ≠ 0` and `(0, -1)` for `t = 0`.
    pub fn reflection(class: &F2Vector) -> Self {
        let mut out = Self {
            free: BTreeSet::new(),
            v: Sign::Minus,
        };
        if !class.is_zero() {
            out.free.insert(class.clone());
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.v == Sign::Plus && self.free.is_empty()
    }

    pub fn multiply(&self, other: &UabElement) -> UabElement {
        Self {
            free: self.free.symmetric_difference(&other.free).cloned().collect(),
            v: self.v * other.v,
        }
    }

    /// Image in `W^ab`: each basis vector `iota(t)` maps to `t⊗t`.
    pub fn to_wab(&self, rank: usize) -> WabElement {
        let mut s = SymTensor::zeros(rank);
        for class in &self.free {
            s.xor_assign(&lattice::sym_square(class));
        }
        WabElement { s, v: self.v }
    }
}

/// Left-to-right product of the reflections `t^W` of the letters; the empty
/// word is the identity.
pub fn eval_word_w(d: &RootDatum, word: &[GVector]) -> Result<WeylElement> {
    for (index, t) in word.iter().enumerate() {
        require_root(d, t, index)?;
    }
    Ok(eval_reflections(d.rank(), word))
}

/// Product of `(0, t, -1)` over the letters, without checking membership.
pub(crate) fn eval_reflections(rank: usize, word: &[GVector]) -> WeylElement {
    word.iter().fold(WeylElement::identity(rank), |acc, t| {
        acc.multiply(&WeylElement::reflection_unchecked(t))
            .expect("letters checked against the datum rank")
    })
}

/// Product in `W^ab` of the class reflections `(t⊗t, -1)`.
pub fn eval_word_wab(d: &RootDatum, word: &[F2Vector]) -> Result<WabElement> {
    let mut acc = WabElement::identity(d.rank());
    for (index, t) in word.iter().enumerate() {
        require_class(d, t, index)?;
        acc = acc.multiply(&WabElement::reflection(t));
    }
    Ok(acc)
}

/// Product in `U^ab` of the class reflections.
pub fn eval_word_uab(d: &RootDatum, word: &[F2Vector]) -> Result<UabElement> {
    let mut acc = UabElement::identity();
    for (index, t) in word.iter().enumerate() {
        require_class(d, t, index)?;
        acc = acc.multiply(&UabElement::reflection(t));
    }
    Ok(acc)
}
