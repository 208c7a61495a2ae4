//! Seeded randomized checks of the algebraic laws, run by `a1-weyl selftest`.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decision::{decide, extract_witness, find_identity_word};
use crate::f2_linalg::F2Vector;
use crate::lattice::{self, pair_count, GVector, WedgeVector};
use crate::symmetric_space::{smul, RootDatum};
use crate::weyl::{self, AffineElement, Sign, WabElement, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Suite = fn(&mut ChaCha8Rng) -> Result<(), String>;

const SUITES: &[(&str, Suite)] = &[
    ("symmetric-space-axioms", symmetric_space_axioms),
    ("class-preservation", class_preservation),
    ("wedge-bilinear-alternating", wedge_laws),
    ("weyl-group-laws", weyl_group_laws),
    ("cocycle-consistency", cocycle_consistency),
    ("reflection-axioms-w", reflection_axioms_w),
    ("reflection-axioms-wab", reflection_axioms_wab),
    ("abelianization-square", abelianization_square),
    ("phi-homomorphism", phi_homomorphism),
    ("gadget-identity", gadget_identity),
    ("witness-soundness", witness_soundness),
];

/// Runs every suite for `iters` random cases.
pub fn run_all(seed: u64, iters: usize) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .enumerate()
        .map(|(k, (name, suite))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let failure = (0..iters).find_map(|case| {
                suite(&mut rng).err().map(|e| format!("case {case}: {e}"))
            });
            SuiteReport {
                name,
                cases: iters,
                failure,
            }
        })
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ok<T>(r: crate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn random_gvector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> GVector {
    GVector::new((0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

fn random_wedge<R: Rng>(rng: &mut R, n: usize, bound: i64) -> WedgeVector {
    WedgeVector::new(
        n,
        (0..pair_count(n)).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect(),
    )
    .expect("length matches")
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    Sign::from_parity(rng.gen())
}

fn random_class<R: Rng>(rng: &mut R, n: usize) -> F2Vector {
    F2Vector::from_bits((0..n).map(|_| rng.gen::<bool>()))
}

/// A random valid datum: zero, a random basis, and random extra classes.
pub fn random_datum<R: Rng>(rng: &mut R, n: usize, density: f64) -> RootDatum {
    loop {
        let mut tab = vec![F2Vector::zeros(n)];
        tab.extend((0..n).map(|_| random_class(rng, n)));
        let extra = ((1usize << n.min(20)) as f64 * density) as usize;
        tab.extend((0..extra).map(|_| random_class(rng, n)));
        if let Ok(d) = RootDatum::validate(n, tab) {
            return d;
        }
    }
}

/// A random root of `d`: a random class lifted and shifted by `2G`.
pub fn random_root<R: Rng>(rng: &mut R, d: &RootDatum, bound: i64) -> GVector {
    let class = d.tab().choose(rng).expect("datum contains zero");
    let shift = random_gvector(rng, d.rank(), bound).scale_i64(2);
    &GVector::lift(class) + &shift
}

fn random_weyl<R: Rng>(rng: &mut R, n: usize) -> WeylElement {
    WeylElement {
        l: random_wedge(rng, n, 30),
        g: random_gvector(rng, n, 30),
        v: random_sign(rng),
    }
}

fn symmetric_space_axioms(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let (r, s, t) = (
        random_gvector(rng, n, 50),
        random_gvector(rng, n, 50),
        random_gvector(rng, n, 50),
    );
    ensure(ok(smul(&s, &s))? == s, || format!("s·s != s for {s}"))?;
    ensure(ok(smul(&s, &ok(smul(&s, &t))?))? == t, || {
        format!("s·(s·t) != t for {s}, {t}")
    })?;
    let lhs = ok(smul(&r, &ok(smul(&s, &t))?))?;
    let rhs = ok(smul(&ok(smul(&r, &s))?, &ok(smul(&r, &t))?))?;
    ensure(lhs == rhs, || format!("left distributivity fails for {r}, {s}, {t}"))
}

fn class_preservation(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let d = random_datum(rng, n, 0.3);
    let s = random_root(rng, &d, 20);
    let t = random_root(rng, &d, 20);
    let p = ok(smul(&s, &t))?;
    ensure(p.mod2() == t.mod2() && ok(d.contains(&p))?, || {
        format!("{s}·{t} left the class of t")
    })
}

fn wedge_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let (g, g2, h) = (
        random_gvector(rng, n, 40),
        random_gvector(rng, n, 40),
        random_gvector(rng, n, 40),
    );
    let sum = ok(lattice::wedge(&(&g + &g2), &h))?;
    let split = ok(ok(lattice::wedge(&g, &h))?.try_add(&ok(lattice::wedge(&g2, &h))?))?;
    ensure(sum == split, || "wedge not additive".into())?;
    ensure(
        ok(lattice::wedge(&g, &h))? == -&ok(lattice::wedge(&h, &g))?,
        || "wedge not antisymmetric".into(),
    )?;
    ensure(ok(lattice::wedge(&g, &g))?.is_zero(), || "g∧g != 0".into())
}

fn weyl_group_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let (a, b, c) = (random_weyl(rng, n), random_weyl(rng, n), random_weyl(rng, n));
    let left = ok(ok(a.multiply(&b))?.multiply(&c))?;
    let right = ok(a.multiply(&ok(b.multiply(&c))?))?;
    ensure(left == right, || "product not associative".into())?;
    let id = WeylElement::identity(n);
    ensure(ok(a.multiply(&id))? == a && ok(id.multiply(&a))? == a, || {
        "identity law fails".into()
    })?;
    ensure(
        ok(a.multiply(&a.inverse()))?.is_identity() && ok(a.inverse().multiply(&a))?.is_identity(),
        || format!("inverse law fails for {a}"),
    )
}

fn cocycle_consistency(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let (a, b) = (random_weyl(rng, n), random_weyl(rng, n));
    let ab = ok(a.multiply(&b))?;
    let projected = ok(a.project().multiply(&b.project()))?;
    ensure(ab.project() == projected, || "projection to A not a homomorphism".into())?;
    let cocycle = ok(lattice::wedge(&a.g, &a.v.apply(&b.g)))?;
    let expected = ok(ok(a.l.try_add(&b.l))?.try_add(&cocycle))?;
    ensure(ab.l == expected, || "central part differs from l + l' + f".into())
}

fn reflection_axioms_w(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let d = random_datum(rng, n, 0.4);
    let t = random_root(rng, &d, 15);
    let s = random_root(rng, &d, 15);
    let rt = ok(WeylElement::reflection(&d, &t))?;
    let rs = ok(WeylElement::reflection(&d, &s))?;
    ensure(ok(rt.act(&d, &s))? == ok(smul(&t, &s))?, || "t^W.s != t·s".into())?;
    ensure(
        ok(AffineElement::reflection(&d, &t))?.act(&d, &s) == smul(&t, &s),
        || "t^A.s != t·s".into(),
    )?;
    let conj = ok(ok(rt.multiply(&rs))?.multiply(&rt.inverse()))?;
    ensure(conj == ok(WeylElement::reflection(&d, &ok(smul(&t, &s))?))?, || {
        format!("conjugation relation fails for t={t}, s={s}")
    })?;
    ensure(ok(rt.multiply(&rt))?.is_identity(), || "reflection not an involution".into())?;
    let twice = ok(rs.act(&d, &ok(rs.act(&d, &t))?))?;
    ensure(twice == t, || "s^W.(s^W.t) != t".into())
}

fn reflection_axioms_wab(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let d = random_datum(rng, n, 0.4);
    let t = d.tab().choose(rng).expect("nonempty").clone();
    let s = d.tab().choose(rng).expect("nonempty").clone();
    let (rt, rs) = (WabElement::reflection(&t), WabElement::reflection(&s));
    // t·s = 2t - s has the class of s
    ensure(rt.act(&s) == s, || "trivial multiplication fails".into())?;
    let conj = rt.multiply(&rs).multiply(&rt);
    ensure(conj == rs, || "conjugation relation fails in W^ab".into())?;
    ensure(rt.multiply(&rt).is_identity(), || "involution fails in W^ab".into())
}

fn abelianization_square(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=5);
    let d = random_datum(rng, n, 0.5);
    let len = rng.gen_range(0..12);
    let word: Vec<GVector> = (0..len).map(|_| random_root(rng, &d, 10)).collect();
    let classes: Vec<F2Vector> = word.iter().map(GVector::mod2).collect();
    let w = ok(weyl::eval_word_w(&d, &word))?;
    let wab = ok(weyl::eval_word_wab(&d, &classes))?;
    ensure(w.abelianize() == wab, || "W -> W^ab square does not commute".into())?;
    let uab = ok(weyl::eval_word_uab(&d, &classes))?;
    ensure(uab.to_wab(n) == wab, || "U^ab -> W^ab square does not commute".into())
}

fn phi_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=7);
    let m = pair_count(n);
    let (s, g) = (random_class(rng, m), random_class(rng, n));
    let (t, h) = (random_class(rng, m), random_class(rng, n));
    let (l, k) = ok(lattice::heisenberg_mul_mod2((&s, &g), (&t, &h)))?;
    let lhs = ok(lattice::phi(&l, &k))?;
    let rhs = ok(lattice::phi(&s, &g))?.xor(&ok(lattice::phi(&t, &h))?);
    ensure(lhs == rhs, || "phi is not a homomorphism".into())?;
    ensure(lattice::sqrt_diag(&ok(lattice::phi(&s, &g))?) == g, || {
        "sqrt does not recover g".into()
    })
}

fn gadget_identity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(2..=5);
    let d = RootDatum::standard_basis(n).map_err(|e| e.to_string())?;
    let (a, b) = (random_gvector(rng, n, 20), random_gvector(rng, n, 20));
    let w = ok(weyl::eval_word_w(&d, &crate::decision::wedge_gadget(&a, &b)))?;
    let expected = ok(lattice::wedge(&a, &b))?.scale(&BigInt::from(4));
    ensure(w.l == expected && w.g.is_zero() && w.v == Sign::Plus, || {
        format!("gadget for a={a}, b={b} gave {w}")
    })
}

fn witness_soundness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(3..=5);
    let d = random_datum(rng, n, 0.6);
    if decide(&d).independent {
        return ensure(extract_witness(&d).is_err(), || "witness for independent datum".into());
    }
    let w = ok(extract_witness(&d))?;
    ok(w.check(&d))?;
    let wab = ok(weyl::eval_word_wab(&d, &w.letters()))?;
    ensure(wab.is_identity(), || "witness letters not trivial in W^ab".into())?;
    let uab = ok(weyl::eval_word_uab(&d, &w.letters()))?;
    ensure(!uab.is_identity(), || "witness letters trivial in U^ab".into())?;
    let word = ok(find_identity_word(&d, &w, 1_000_000))?;
    ensure(ok(weyl::eval_word_w(&d, &word))?.is_identity(), || {
        "identity word not trivial".into()
    })
}
