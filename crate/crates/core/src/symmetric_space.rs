//! Root data: the discrete symmetric space `T ⊆ G = Z^n` with `s·t = 2s - t`.
//!
//! A subset `T` with `0 ∈ T` and `G·T ⊆ T` is a union of cosets of `2G` that
//! contains `2G`, so it is the full preimage of its image in `G/2G`. A
//! [`RootDatum`] therefore stores only that image.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2_linalg::{F2Matrix, F2Vector};
use crate::lattice::GVector;

/// Rank `n` together with the set of classes of `T` in `F2^n`, sorted and
/// deduplicated.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootDatum {
    rank: usize,
    tab: Vec<F2Vector>,
}

impl RootDatum {
    /// Checks the classes and builds a datum.
    ///
    /// Fails with [`Error::BadLength`] on a class of the wrong length,
    /// [`Error::MissingZero`] if the zero class is absent and
    /// [`Error::NotGenerating`] if the classes do not span `F2^n`.
    pub fn validate<I>(rank: usize, raw_tab: I) -> Result<Self>
    where
        I: IntoIterator<Item = F2Vector>,
    {
        if rank == 0 {
            return Err(Error::InvalidRank);
        }
        let mut tab: Vec<F2Vector> = raw_tab.into_iter().collect();
        if let Some(bad) = tab.iter().find(|v| v.len() != rank) {
            return Err(Error::BadLength {
                expected: rank,
                found: bad.len(),
            });
        }
        tab.sort();
        tab.dedup();
        if tab.first().is_none_or(|z| !z.is_zero()) {
            return Err(Error::MissingZero);
        }
        let span = F2Matrix::from_rows(rank, tab.clone())?.rank();
        if span < rank {
            return Err(Error::NotGenerating { rank, span });
        }
        Ok(Self { rank, tab })
    }

    /// The datum with `T = G`.
    pub fn full(rank: usize) -> Result<Self> {
        if rank >= 32 {
            return Err(Error::RankTooLarge { rank, limit: 31 });
        }
        Self::validate(rank, (0..1u64 << rank).map(|m| F2Vector::from_mask(rank, m)))
    }

    /// The datum whose nonzero classes are the standard basis.
    pub fn standard_basis(rank: usize) -> Result<Self> {
        Self::validate(
            rank,
            std::iter::once(F2Vector::zeros(rank)).chain((0..rank).map(|i| F2Vector::unit(rank, i))),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All classes, sorted, zero first.
    pub fn tab(&self) -> &[F2Vector] {
        &self.tab
    }

    /// The nonzero classes, sorted.
    pub fn nonzero(&self) -> &[F2Vector] {
        &self.tab[1..]
    }

    pub fn contains_class(&self, class: &F2Vector) -> bool {
        self.tab.binary_search(class).is_ok()
    }

    /// Whether `t` is a root, i.e. its class lies in the datum.
    pub fn contains(&self, t: &GVector) -> Result<bool> {
        if t.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: t.len(),
            });
        }
        Ok(self.contains_class(&t.mod2()))
    }
}

impl fmt::Display for RootDatum {
    /// The text input format: a `rank:` line, a `tab:` line, one class per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "tab:")?;
        for class in &self.tab {
            writeln!(f, "{class}")?;
        }
        Ok(())
    }
}

/// The symmetric space multiplication `s·t = 2s - t`.
pub fn smul(s: &GVector, t: &GVector) -> Result<GVector> {
    s.scale_i64(2).try_sub(t)
}
