use a1_weyl::decision::{decide, extract_witness};
use a1_weyl::f2_linalg::{F2Matrix, F2Vector};
use a1_weyl::lattice::{self, pair_count, sym_dim, GVector};
use a1_weyl::weyl;
use a1_weyl::RootDatum;
use proptest::prelude::*;

/// Rows as u64 masks; true iff some nonempty subset XORs to zero.
fn subset_xor_dependent(rows: &[u64]) -> bool {
    (1u64..1 << rows.len()).any(|subset| {
        rows.iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .fold(0, |acc, (_, r)| acc ^ r)
            == 0
    })
}

fn matrix_from_masks(ncols: usize, rows: &[u64]) -> F2Matrix {
    F2Matrix::from_rows(ncols, rows.iter().map(|&r| F2Vector::from_mask(ncols, r)).collect())
        .unwrap()
}

/// Sym-square of a class given as a mask: bit i for the diagonal, then the
/// pairs i < j in lexicographic order.
fn sym_square_mask(n: usize, x: u64) -> u64 {
    let mut out = x & ((1 << n) - 1);
    let mut pos = n;
    for i in 0..n {
        for j in i + 1..n {
            if (x >> i) & 1 == 1 && (x >> j) & 1 == 1 {
                out |= 1 << pos;
            }
            pos += 1;
        }
    }
    out
}

fn datum_from_masks(n: usize, masks: &[u64]) -> Option<RootDatum> {
    let mut tab: Vec<F2Vector> = masks.iter().map(|&m| F2Vector::from_mask(n, m)).collect();
    tab.push(F2Vector::zeros(n));
    RootDatum::validate(n, tab).ok()
}

#[test]
fn all_seven_sym_squares_of_rank_three() {
    let rows: Vec<u64> = (1..8).map(|x| sym_square_mask(3, x)).collect();
    // exhaustive: the only vanishing subset is the whole set
    let vanishing: Vec<u64> = (1u64..1 << 7)
        .filter(|s| {
            rows.iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .fold(0, |a, (_, r)| a ^ r)
                == 0
        })
        .collect();
    assert_eq!(vanishing, vec![0b111_1111]);
    let m = matrix_from_masks(6, &rows);
    assert_eq!(m.dependency_certificate(), Some("1111111".parse().unwrap()));
}

#[test]
fn phi_is_injective_and_sqrt_recovers_g() {
    for n in 1..=4 {
        let (m, total) = (pair_count(n), pair_count(n) + n);
        let mut images = std::collections::HashSet::new();
        for code in 0u64..1 << total {
            let w = F2Vector::from_mask(m, code & ((1 << m) - 1));
            let g = F2Vector::from_mask(n, code >> m);
            let s = lattice::phi(&w, &g).unwrap();
            assert_eq!(lattice::sqrt_diag(&s), g);
            assert!(images.insert(s.to_f2vector()), "phi not injective at n={n}");
        }
        // surjective onto the span of the sym-squares and the image of pi
        let mut gens: Vec<F2Vector> = (0..1u64 << n)
            .map(|x| lattice::sym_square(&F2Vector::from_mask(n, x)).to_f2vector())
            .collect();
        gens.extend((0..m).map(|k| {
            lattice::pi_map(n, &F2Vector::unit(m, k)).unwrap().to_f2vector()
        }));
        let span = F2Matrix::from_rows(sym_dim(n), gens).unwrap().rank();
        assert_eq!(1usize << span, images.len());
    }
}

#[test]
fn pi_is_injective() {
    for n in 2..=9 {
        let m = pair_count(n);
        let rows: Vec<F2Vector> = (0..m)
            .map(|k| lattice::pi_map(n, &F2Vector::unit(m, k)).unwrap().to_f2vector())
            .collect();
        assert_eq!(F2Matrix::from_rows(sym_dim(n), rows).unwrap().rank(), m);
    }
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=10).prop_flat_map(|ncols| {
        (Just(ncols), prop::collection::vec(0u64..1 << ncols, 0..=14))
    })
}

proptest! {
    #[test]
    fn rank_bounds_and_certificates((ncols, rows) in small_matrix()) {
        let m = matrix_from_masks(ncols, &rows);
        let r = m.rank();
        prop_assert!(r <= rows.len().min(ncols));
        let cert = m.dependency_certificate();
        prop_assert_eq!(cert.is_none(), r == rows.len());
        prop_assert_eq!(cert.is_some(), subset_xor_dependent(&rows));
        if let Some(c) = cert {
            prop_assert!(!c.is_zero());
            prop_assert!(m.combine(&c).is_zero());
        }
    }

    #[test]
    fn rank_is_permutation_invariant(
        (ncols, rows) in small_matrix(),
        seed in any::<u64>(),
    ) {
        let mut shuffled = rows.clone();
        // Fisher-Yates with a splitmix stream
        let mut state = seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            let j = (z ^ (z >> 31)) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        prop_assert_eq!(
            matrix_from_masks(ncols, &rows).rank(),
            matrix_from_masks(ncols, &shuffled).rank()
        );
    }

    #[test]
    fn wedge_is_bilinear_and_alternating(
        g in prop::collection::vec(-1000i64..1000, 4),
        g2 in prop::collection::vec(-1000i64..1000, 4),
        h in prop::collection::vec(-1000i64..1000, 4),
    ) {
        let (g, g2, h) = (GVector::from_i64s(&g), GVector::from_i64s(&g2), GVector::from_i64s(&h));
        let lhs = lattice::wedge(&(&g + &g2), &h).unwrap();
        let rhs = lattice::wedge(&g, &h).unwrap().try_add(&lattice::wedge(&g2, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(lattice::wedge(&g, &h).unwrap(), -&lattice::wedge(&h, &g).unwrap());
        prop_assert!(lattice::wedge(&g, &g).unwrap().is_zero());
    }

    #[test]
    fn mod2_matches_parity(k in -1_000_000i64..1_000_000) {
        let v = GVector::from_i64s(&[2 * k, 2 * k + 1]);
        prop_assert_eq!(v.mod2(), "01".parse::<F2Vector>().unwrap());
    }

    #[test]
    fn decide_matches_subset_oracle(
        n in 3usize..=5,
        picks in prop::collection::vec(1u64..32, 1..=12),
    ) {
        let masks: Vec<u64> = picks.iter().map(|p| p % ((1 << n) - 1) + 1).collect();
        if let Some(d) = datum_from_masks(n, &masks) {
            let classes: Vec<u64> = d.nonzero().iter().map(F2Vector::to_mask).collect();
            let rows: Vec<u64> = classes.iter().map(|&x| sym_square_mask(n, x)).collect();
            let v = decide(&d);
            prop_assert_eq!(v.independent, !subset_xor_dependent(&rows));
            prop_assert_eq!(v.iso, v.independent);
            prop_assert!(v.rank_sym <= v.cardinality.min(sym_dim(n)));
            if v.independent {
                prop_assert!(v.cardinality <= sym_dim(n));
            }
        }
    }

    #[test]
    fn decide_is_gl_invariant(
        n in 2usize..=5,
        picks in prop::collection::vec(1u64..32, 1..=14),
        matrix in prop::collection::vec(0u64..32, 5),
    ) {
        let size = 1u64 << n;
        let masks: Vec<u64> = picks.iter().map(|p| p % (size - 1) + 1).collect();
        let columns: Vec<u64> = matrix.iter().take(n).map(|c| c % size).collect();
        let apply = |x: u64| (0..n).filter(|j| x >> j & 1 == 1).fold(0, |acc, j| acc ^ columns[j]);
        let invertible = (0..size).map(apply).collect::<std::collections::HashSet<_>>().len() as u64 == size;
        if let (true, Some(d)) = (invertible, datum_from_masks(n, &masks)) {
            let moved: Vec<u64> = masks.iter().map(|&x| apply(x)).collect();
            let e = datum_from_masks(n, &moved).unwrap();
            prop_assert_eq!(decide(&d).independent, decide(&e).independent);
            prop_assert_eq!(decide(&d).rank_sym, decide(&e).rank_sym);
        }
    }

    #[test]
    fn dependence_is_monotone(
        n in 3usize..=5,
        picks in prop::collection::vec(1u64..32, 1..=14),
        extra in prop::collection::vec(1u64..32, 0..=6),
    ) {
        let modulus = (1u64 << n) - 1;
        let base: Vec<u64> = picks.iter().map(|p| p % modulus + 1).collect();
        let mut bigger = base.clone();
        bigger.extend(extra.iter().map(|p| p % modulus + 1));
        if let (Some(d), Some(e)) = (datum_from_masks(n, &base), datum_from_masks(n, &bigger)) {
            if !decide(&d).independent {
                prop_assert!(!decide(&e).independent);
            }
            if decide(&e).independent {
                prop_assert!(decide(&d).independent);
            }
        }
    }

    #[test]
    fn witnesses_are_sound(
        n in 3usize..=5,
        picks in prop::collection::vec(1u64..32, 4..=20),
    ) {
        let masks: Vec<u64> = picks.iter().map(|p| p % ((1 << n) - 1) + 1).collect();
        if let Some(d) = datum_from_masks(n, &masks) {
            match extract_witness(&d) {
                Ok(w) => {
                    prop_assert!(!decide(&d).independent);
                    let sum = w.dependency.iter().fold(0, |a, t| a ^ sym_square_mask(n, t.to_mask()));
                    prop_assert_eq!(sum, 0);
                    prop_assert!(weyl::eval_word_wab(&d, &w.letters()).unwrap().is_identity());
                    prop_assert!(!weyl::eval_word_uab(&d, &w.letters()).unwrap().is_identity());
                }
                Err(_) => prop_assert!(decide(&d).independent),
            }
        }
    }

    #[test]
    fn abelianization_square_commutes(
        n in 1usize..=5,
        letters in prop::collection::vec(prop::collection::vec(-20i64..20, 5), 0..10),
    ) {
        let d = RootDatum::full(n).unwrap();
        let word: Vec<GVector> = letters.iter().map(|c| GVector::from_i64s(&c[..n])).collect();
        let classes: Vec<F2Vector> = word.iter().map(GVector::mod2).collect();
        let w = weyl::eval_word_w(&d, &word).unwrap();
        prop_assert_eq!(w.abelianize(), weyl::eval_word_wab(&d, &classes).unwrap());
    }
}

/// Orbit representatives by brute force: minimum over all invertible images,
/// compared as sorted lists of bitstrings.
#[test]
fn gl_orbit_representatives_match_brute_force() {
    for n in 1..=3usize {
        let size = 1u64 << n;
        let mut matrices = Vec::new();
        for code in 0u64..1 << (n * n) {
            let columns: Vec<u64> = (0..n).map(|j| (code >> (j * n)) & (size - 1)).collect();
            let image: Vec<u64> = (0..size)
                .map(|x| (0..n).filter(|j| x >> j & 1 == 1).fold(0, |a, j| a ^ columns[j]))
                .collect();
            if image.iter().collect::<std::collections::HashSet<_>>().len() as u64 == size {
                matrices.push(image);
            }
        }
        let mut expected = std::collections::BTreeSet::new();
        for subset in 0u64..1 << (size - 1) {
            let members: Vec<u64> = (1..size).filter(|x| subset >> (x - 1) & 1 == 1).collect();
            if datum_from_masks(n, &members).is_none() {
                continue;
            }
            let canonical = matrices
                .iter()
                .map(|g| {
                    let mut s: Vec<String> = std::iter::once(0)
                        .chain(members.iter().copied())
                        .map(|x| F2Vector::from_mask(n, g[x as usize]).to_string())
                        .collect();
                    s.sort();
                    s
                })
                .min()
                .unwrap();
            expected.insert(canonical);
        }
        let got: Vec<Vec<String>> = a1_weyl::enumerate(n, true)
            .unwrap()
            .map(|(d, _)| d.tab().iter().map(ToString::to_string).collect())
            .collect();
        assert_eq!(got, expected.into_iter().collect::<Vec<_>>(), "n = {n}");
    }
}
