//! Deciding whether `U → W` is an isomorphism, and certifying the answer.
//!
//! The map is an isomorphism iff the sym-squares `t⊗t` of the nonzero classes
//! are linearly independent over F2. A dependency `S` gives the kernel element
//! `(Σ_S iota(t), +1)` of `U^ab → W^ab`, and [`find_identity_word`] lifts it to
//! an explicit word of reflections that is trivial in `W`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::f2_linalg::{F2Matrix, F2Vector};
use crate::lattice::{self, pairs, sym_dim, GVector};
use crate::symmetric_space::RootDatum;
use crate::weyl::{self, Sign, UabElement};

/// Outcome of the 2-independence test.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Verdict {
    pub independent: bool,
    /// Rank of the sym-squares of the nonzero classes.
    pub rank_sym: usize,
    /// Number of nonzero classes.
    pub cardinality: usize,
    /// Whether `U → W` is an isomorphism; always equal to `independent`.
    pub iso: bool,
}

/// A kernel element of `U^ab → W^ab`, optionally with a word over the roots
/// realizing it that is trivial in `W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    /// Distinct nonzero classes whose sym-squares sum to zero, in datum order.
    pub dependency: Vec<F2Vector>,
    /// Whether one zero-class reflection pads the word to even length.
    pub pad_zero: bool,
    pub uab_element: UabElement,
    pub word_in_w: Option<Vec<GVector>>,
}

impl Witness {
    /// The classes of the abelian word: the dependency, then the zero class
    /// when padding.
    pub fn letters(&self) -> Vec<F2Vector> {
        let mut letters = self.dependency.clone();
        if self.pad_zero {
            if let Some(first) = self.dependency.first() {
                letters.push(F2Vector::zeros(first.len()));
            }
        }
        letters
    }

    /// Checks every structural invariant against `d`.
    pub fn check(&self, d: &RootDatum) -> Result<()> {
        let invalid = |m: &str| Err(Error::InvalidWitness(m.to_string()));
        if self.dependency.is_empty() {
            return invalid("empty dependency");
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut sum = lattice::SymTensor::zeros(d.rank());
        for class in &self.dependency {
            if class.len() != d.rank() || class.is_zero() || !d.contains_class(class) {
                return invalid("dependency class is not a nonzero class of the datum");
            }
            if !seen.insert(class) {
                return invalid("repeated dependency class");
            }
            sum.xor_assign(&lattice::sym_square(class));
        }
        if !sum.is_zero() {
            return invalid("sym-squares of the dependency do not sum to zero");
        }
        if self.pad_zero != (self.dependency.len() % 2 == 1) {
            return invalid("pad flag does not match the dependency parity");
        }
        let expected = UabElement {
            free: self.dependency.iter().cloned().collect(),
            v: Sign::Plus,
        };
        if self.uab_element != expected {
            return invalid("U^ab element does not match the dependency");
        }
        if let Some(word) = &self.word_in_w {
            verify_identity_word(d, self, word)?;
        }
        Ok(())
    }
}

fn sym_rows(d: &RootDatum) -> F2Matrix {
    let rows = d
        .nonzero()
        .iter()
        .map(|t| lattice::sym_square(t).to_f2vector())
        .collect();
    F2Matrix::from_rows(sym_dim(d.rank()), rows).expect("sym-squares share one dimension")
}

/// Tests the nonzero classes of `d` for 2-independence.
pub fn decide(d: &RootDatum) -> Verdict {
    let rank_sym = sym_rows(d).rank();
    let cardinality = d.nonzero().len();
    let independent = rank_sym == cardinality;
    Verdict {
        independent,
        rank_sym,
        cardinality,
        iso: independent,
    }
}

/// The witness built from the first dependency among the sym-squares.
pub fn extract_witness(d: &RootDatum) -> Result<Witness> {
    let certificate = sym_rows(d)
        .dependency_certificate()
        .ok_or(Error::IsIndependent)?;
    let dependency: Vec<F2Vector> = certificate.ones().map(|i| d.nonzero()[i].clone()).collect();
    Ok(Witness {
        pad_zero: dependency.len() % 2 == 1,
        uab_element: UabElement {
            free: dependency.iter().cloned().collect(),
            v: Sign::Plus,
        },
        dependency,
        word_in_w: None,
    })
}

struct Steps {
    used: u64,
    budget: u64,
}

impl Steps {
    fn charge(&mut self, n: usize) -> Result<()> {
        self.used = self.used.saturating_add(n as u64);
        if self.used > self.budget {
            Err(Error::BudgetExhausted {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

/// `[0, 2u, t + 2u, t]`, which evaluates to `(2 t∧u, 0, +1)`. Uses the zero
/// class twice and the class of `t` twice.
pub fn shift_gadget(t: &GVector, u: &GVector) -> Vec<GVector> {
    let two_u = u.scale_i64(2);
    vec![GVector::zeros(t.len()), two_u.clone(), t + &two_u, t.clone()]
}

/// `[2a, 0, 2b, 2a + 2b]`, which evaluates to `(4 a∧b, 0, +1)`. All four
/// letters lie in the zero class.
pub fn wedge_gadget(a: &GVector, b: &GVector) -> Vec<GVector> {
    let (two_a, two_b) = (a.scale_i64(2), b.scale_i64(2));
    vec![two_a.clone(), GVector::zeros(a.len()), two_b.clone(), &two_a + &two_b]
}

/// Builds a word over the roots of `d` that is trivial in `W` and whose
/// classes realize `w.uab_element` in `U^ab`.
///
/// The word starts from the 0/1 lifts of the dependency (plus the zero pad)
/// with the first letter shifted by an even vector so the `G` part vanishes.
/// The remaining central part lies in `2 Λ²`; its class mod `4 Λ²` is removed
/// with [`shift_gadget`]s on lifts of a basis of classes, and the rest with
/// [`wedge_gadget`]s. Every appended or evaluated letter costs one step; the
/// result is verified by exact evaluation before it is returned.
pub fn find_identity_word(d: &RootDatum, w: &Witness, budget: u64) -> Result<Vec<GVector>> {
    if w.dependency.is_empty() {
        return Err(Error::InvalidWitness("empty dependency".into()));
    }
    Witness {
        word_in_w: None,
        ..w.clone()
    }
    .check(d)?;
    let mut steps = Steps { used: 0, budget };
    if budget == 0 {
        return Err(Error::BudgetExhausted { budget });
    }
    let n = d.rank();

    let mut word: Vec<GVector> = w.letters().iter().map(GVector::lift).collect();
    steps.charge(word.len())?;
    let alternating = alternating_sum(n, &word);
    if !alternating.is_even() {
        return Err(Error::InvalidWitness(
            "classes of the dependency do not sum to zero".into(),
        ));
    }
    word[0] = &word[0] - &alternating;

    steps.charge(word.len())?;
    let residue = weyl::eval_reflections(n, &word);
    debug_assert!(residue.g.is_zero() && residue.v == Sign::Plus);

    // central part is 2h; cancel h mod 2 with shift gadgets
    let half = lattice::WedgeVector::new(
        n,
        residue
            .l
            .coords()
            .iter()
            .map(|c| {
                debug_assert!((c % 2u8).is_zero());
                c / 2
            })
            .collect(),
    )?;
    let target = half.mod2();
    if !target.is_zero() {
        let (lifts, coefficients) = basis_coordinates(d);
        // u_k = Σ_{i<j, h_ij odd, A_ik = 1} e_j
        let mut shifts = vec![F2Vector::zeros(n); n];
        for (index, (i, j)) in pairs(n).enumerate() {
            if target.get(index) {
                for k in coefficients[i].ones() {
                    shifts[k].flip(j);
                }
            }
        }
        for (lift, shift) in lifts.iter().zip(&shifts) {
            if !shift.is_zero() {
                steps.charge(4)?;
                word.extend(shift_gadget(lift, &GVector::lift(shift)));
            }
        }
    }

    steps.charge(word.len())?;
    let residue = weyl::eval_reflections(n, &word);
    // remaining central part is 4c; cancel row by row: e_i ∧ (-Σ_j c_ij e_j)
    let mut rows: BTreeMap<usize, GVector> = BTreeMap::new();
    for (index, (i, j)) in pairs(n).enumerate() {
        let c = &residue.l.coords()[index];
        if c.is_zero() {
            continue;
        }
        debug_assert!((c % 4u8).is_zero());
        let quarter: BigInt = c / 4;
        let row = rows.entry(i).or_insert_with(|| GVector::zeros(n));
        let mut coords = row.coords().to_vec();
        coords[j] -= quarter;
        *row = GVector::new(coords);
    }
    for (i, b) in rows {
        steps.charge(4)?;
        word.extend(wedge_gadget(&GVector::unit(n, i), &b));
    }

    steps.charge(word.len())?;
    verify_identity_word(d, w, &word)?;
    Ok(word)
}

/// Checks that `word` is trivial in `W` and realizes `w.uab_element` in `U^ab`.
pub fn verify_identity_word(d: &RootDatum, w: &Witness, word: &[GVector]) -> Result<()> {
    let value = weyl::eval_word_w(d, word)?;
    if !value.is_identity() {
        return Err(Error::InvalidWitness(format!(
            "word evaluates to {value}, not the identity"
        )));
    }
    let classes: Vec<F2Vector> = word.iter().map(GVector::mod2).collect();
    let uab = weyl::eval_word_uab(d, &classes)?;
    if uab != w.uab_element || uab.is_identity() {
        return Err(Error::InvalidWitness(
            "word does not realize the U^ab kernel element".into(),
        ));
    }
    Ok(())
}

fn alternating_sum(n: usize, word: &[GVector]) -> GVector {
    word.iter().enumerate().fold(GVector::zeros(n), |acc, (i, t)| {
        if i % 2 == 0 {
            &acc + t
        } else {
            &acc - t
        }
    })
}

/// Lifts `r_k` of `n` independent nonzero classes of `d`, and for each unit
/// vector `e_i` the coefficients `A_i` with `e_i = Σ_k A_ik r_k` mod 2.
fn basis_coordinates(d: &RootDatum) -> (Vec<GVector>, Vec<F2Vector>) {
    let n = d.rank();
    let mut chosen: Vec<F2Vector> = Vec::with_capacity(n);
    for class in d.nonzero() {
        let mut candidate = chosen.clone();
        candidate.push(class.clone());
        let m = F2Matrix::from_rows(n, candidate.clone()).expect("classes have length n");
        if m.rank() == candidate.len() {
            chosen = candidate;
            if chosen.len() == n {
                break;
            }
        }
    }
    let basis = F2Matrix::from_rows(n, chosen.clone()).expect("classes have length n");
    let coefficients = (0..n)
        .map(|i| {
            basis
                .solve_left(&F2Vector::unit(n, i))
                .expect("a datum spans F2^n")
        })
        .collect();
    (chosen.iter().map(GVector::lift).collect(), coefficients)
}

/// Default largest rank [`enumerate`] accepts.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 4;
const HARD_ENUMERATION_LIMIT: usize = 5;

/// Every valid datum of rank `n` with its verdict, in ascending datum order.
/// With `up_to_gl`, one representative per `GL(n, F2)` orbit: the smallest
/// datum of the orbit.
pub fn enumerate(
    rank: usize,
    up_to_gl: bool,
) -> Result<impl Iterator<Item = (RootDatum, Verdict)>> {
    enumerate_with_limit(rank, up_to_gl, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate`] with a caller-chosen rank guard (at most 5).
pub fn enumerate_with_limit(
    rank: usize,
    up_to_gl: bool,
    limit: usize,
) -> Result<impl Iterator<Item = (RootDatum, Verdict)>> {
    let limit = limit.min(HARD_ENUMERATION_LIMIT);
    if rank > limit {
        return Err(Error::RankTooLarge { rank, limit });
    }
    if rank == 0 {
        return Err(Error::InvalidRank);
    }
    let subsets = spanning_subsets(rank);
    let masks: Vec<u64> = if up_to_gl {
        orbit_representatives(rank, &subsets)
    } else {
        subsets
    };
    let mut out: Vec<(RootDatum, Verdict)> = masks
        .into_iter()
        .map(|mask| {
            let d = datum_from_mask(rank, mask);
            let v = decide(&d);
            (d, v)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter())
}

/// Subsets of `F2^n` containing 0 that span, as masks over the `2^n` vectors
/// (bit `x` set iff the vector with coordinate mask `x` is present).
fn spanning_subsets(n: usize) -> Vec<u64> {
    let others = (1usize << n) - 1;
    (0..1u64 << others)
        .map(|m| (m << 1) | 1)
        .filter(|&mask| span_rank(mask) == n)
        .collect()
}

fn span_rank(mask: u64) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for x in set_bits(mask) {
        let mut v = x as u64;
        while v != 0 {
            let p = v.trailing_zeros() as usize;
            if basis[p] == 0 {
                basis[p] = v;
                rank += 1;
                break;
            }
            v ^= basis[p];
        }
    }
    rank
}

fn set_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

fn datum_from_mask(n: usize, mask: u64) -> RootDatum {
    RootDatum::validate(n, set_bits(mask).map(|x| F2Vector::from_mask(n, x as u64)))
        .expect("enumerated subsets contain zero and span")
}

/// Images of every vector under every invertible matrix, as permutations of
/// `0..2^n`.
fn general_linear_group(n: usize) -> Vec<Vec<usize>> {
    let size = 1usize << n;
    let mut out = Vec::new();
    // columns[j] is the image of e_j
    let total = 1u64 << (n * n);
    for code in 0..total {
        let columns: Vec<usize> = (0..n)
            .map(|j| ((code >> (j * n)) & (size as u64 - 1)) as usize)
            .collect();
        let image: Vec<usize> = (0..size)
            .map(|x| {
                set_bits(x as u64).fold(0, |acc, j| acc ^ columns[j])
            })
            .collect();
        let mut hit = vec![false; size];
        image.iter().for_each(|&y| hit[y] = true);
        if hit.iter().all(|&h| h) {
            out.push(image);
        }
    }
    out
}

fn orbit_representatives(n: usize, subsets: &[u64]) -> Vec<u64> {
    let size = 1usize << n;
    let group = general_linear_group(n);
    // position of each vector in the datum ordering
    let mut by_order: Vec<usize> = (0..size).collect();
    by_order.sort_by_key(|&x| F2Vector::from_mask(n, x as u64));
    let mut position = vec![0usize; size];
    for (p, &x) in by_order.iter().enumerate() {
        position[x] = p;
    }
    let relabel = |mask: u64| set_bits(mask).fold(0u64, |acc, x| acc | 1 << position[x]);

    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for &mask in subsets {
        if seen.contains(&mask) {
            continue;
        }
        let mut best = mask;
        for g in &group {
            let image = set_bits(mask).fold(0u64, |acc, x| acc | 1 << g[x]);
            if seen.insert(image) && sorted_lex_less(relabel(image), relabel(best)) {
                best = image;
            }
        }
        seen.insert(mask);
        reps.push(best);
    }
    reps
}

/// Lexicographic comparison of the ascending position lists of two masks.
fn sorted_lex_less(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return false,
            (true, false) => return true,
            (false, true) => return false,
            (false, false) => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x < y;
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}
