use commenergy::commgraph::{CommutingGraph, MatrixKind};
use commenergy::energies::{graph_energy_report, spectra_for, ExactOrInterval, PathChoice, SpectrumPath};
use commenergy::formulas::Surd;
use commenergy::groups::{FiniteGroup, GroupFamilySpec};
use commenergy::rational::{int, ratio};
use commenergy::spectra::exact_spectrum;
use num_rational::BigRational;
use proptest::prelude::*;

fn leaf_spec() -> impl Strategy<Value = GroupFamilySpec> {
    prop_oneof![
        (3u64..40).prop_map(|m| GroupFamilySpec::Dihedral { m }),
        (2u64..20).prop_map(|m| GroupFamilySpec::Dicyclic { m }),
        (3u64..12, 1u64..5).prop_map(|(m, n)| GroupFamilySpec::Metacyclic { m, n }),
        (4u64..8).prop_map(|n| GroupFamilySpec::Quasidihedral { n }),
        prop::sample::select(vec![(2u64, 3u64), (2, 5), (3, 7), (5, 11)])
            .prop_map(|(p, q)| GroupFamilySpec::FrobeniusPq { p, q }),
        (2u32..5).prop_map(|k| GroupFamilySpec::Psl2 { k }),
        prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|p| GroupFamilySpec::HanakiV { p, n: 1 }),
        (2u32..4).prop_map(|n| GroupFamilySpec::HanakiU { n }),
        Just(GroupFamilySpec::Suzuki2),
        Just(GroupFamilySpec::SymmetricS4),
        Just(GroupFamilySpec::AlternatingA4),
        Just(GroupFamilySpec::SpecialLinear23),
        Just(GroupFamilySpec::CentralProductD8Z4),
        Just(GroupFamilySpec::SmallGroup16_3),
    ]
}

fn any_spec() -> impl Strategy<Value = GroupFamilySpec> {
    prop_oneof![
        3 => leaf_spec(),
        1 => (leaf_spec(), 2u64..6)
            .prop_map(|(inner, k)| GroupFamilySpec::DirectProductWithCyclic { inner: Box::new(inner), k }),
        1 => prop::sample::select(vec![2u64, 3, 5])
            .prop_flat_map(|p| (1u64..4).prop_map(move |c| GroupFamilySpec::ElementaryWitness { p, z: p * c })),
    ]
}

fn small_group() -> impl Strategy<Value = GroupFamilySpec> {
    prop::sample::select(vec![
        "dihedral:m=5",
        "dicyclic:m=3",
        "a4",
        "s4",
        "sl23",
        "suzuki2",
        "pq:p=3,q=7",
        "hanakiV:p=3,n=1",
        "quasidihedral:n=4",
        "product:inner=dihedral:m=3,k=2",
    ])
    .prop_map(|d| d.parse().unwrap())
}

fn build(spec: &GroupFamilySpec) -> FiniteGroup {
    spec.build(2048).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn descriptor_round_trip(spec in any_spec()) {
        let text = spec.to_string();
        let back: GroupFamilySpec = text.parse().unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn conjugation_preserves_commuting_graph(spec in small_group(), seed in any::<u64>()) {
        let g = build(&spec);
        let h = (seed as usize) % g.order();
        let gamma = CommutingGraph::new(&g).unwrap();
        let index: Vec<usize> = gamma.vertices().iter().map(|&v| v as usize).collect();
        let position = |x: usize| index.iter().position(|&v| v == x);
        for i in 0..index.len() {
            let ci = position(g.conjugate(index[i], h));
            prop_assert!(ci.is_some(), "conjugation left the non-central set");
            for j in 0..index.len() {
                let cj = position(g.conjugate(index[j], h)).unwrap();
                prop_assert_eq!(gamma.adjacent(i, j), gamma.adjacent(ci.unwrap(), cj));
            }
        }
    }

    #[test]
    fn clique_closed_forms_match_char_poly(sizes in prop::collection::vec(1usize..12, 1..8)) {
        prop_assume!(sizes.iter().sum::<usize>() <= 60);
        prop_assume!(sizes.iter().any(|&s| s > 1));
        let gamma = CommutingGraph::clique_union(&sizes);
        let (_, fast) = spectra_for(&gamma, PathChoice::Force(SpectrumPath::CliqueUnion)).unwrap();
        let (_, slow) = spectra_for(&gamma, PathChoice::Force(SpectrumPath::General)).unwrap();
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!(a.same_multiset(b), "{:?} vs {:?}", a, b);
        }
        let tol = ratio(1, 1_000_000_000);
        let e1 = graph_energy_report(&gamma, &tol, PathChoice::Force(SpectrumPath::CliqueUnion)).unwrap();
        let e2 = graph_energy_report(&gamma, &tol, PathChoice::Force(SpectrumPath::General)).unwrap();
        prop_assert_eq!(e1.triple(), e2.triple());
    }

    #[test]
    fn laplacian_spectrum_is_permutation_invariant(spec in small_group(), seed in any::<u64>()) {
        let gamma = CommutingGraph::new(&build(&spec)).unwrap();
        let n = gamma.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state as usize) % (i + 1));
        }
        let m = gamma.matrices();
        for matrix in [&m.laplacian, &m.signless] {
            let a = exact_spectrum(matrix).unwrap();
            let b = exact_spectrum(&matrix.permuted(&perm)).unwrap();
            prop_assert!(a.same_multiset(&b));
        }
    }

    #[test]
    fn tolerance_enclosures_nest(coarse in 2u32..8, extra in 1u32..6) {
        let gamma = CommutingGraph::new(&build(&GroupFamilySpec::SymmetricS4)).unwrap();
        let t1 = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(coarse));
        let t2 = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(coarse + extra));
        let a = graph_energy_report(&gamma, &t1, PathChoice::Auto).unwrap();
        let b = graph_energy_report(&gamma, &t2, PathChoice::Auto).unwrap();
        for (wide, narrow) in a.triple().into_iter().zip(b.triple()) {
            prop_assert!(wide.width() <= t1);
            prop_assert!(narrow.width() <= t2);
            prop_assert!(wide.lo() <= narrow.lo() && narrow.hi() <= wide.hi());
        }
    }

    #[test]
    fn surd_enclosures_contain_float_value(a in -50i64..50, b in -20i64..20, r in 2u64..30) {
        let s = Surd::integer(a).add(&Surd::integer(b).mul(&Surd::sqrt(&int(r as i64)).unwrap()).unwrap());
        let (lo, hi) = s.enclosure(&ratio(1, 1_000_000));
        let x = a as f64 + b as f64 * (r as f64).sqrt();
        let to = |q: &BigRational| commenergy::rational::to_f64(q);
        prop_assert!(to(&lo) <= x + 1e-9 && x - 1e-9 <= to(&hi));
        prop_assert!(hi - lo <= ratio(1, 1_000_000));
    }
}

#[test]
fn interval_energies_are_interval_valued() {
    let gamma = CommutingGraph::new(&build(&GroupFamilySpec::SymmetricS4)).unwrap();
    let r = graph_energy_report(&gamma, &ratio(1, 1_000_000_000), PathChoice::Auto).unwrap();
    assert!(r.triple().iter().all(|e| matches!(e, ExactOrInterval::Interval { .. })));
    assert_eq!(r.path, SpectrumPath::General);
    let (_, spectra) = spectra_for(&gamma, PathChoice::Auto).unwrap();
    assert_eq!(spectra[0].kind(), MatrixKind::Adjacency);
}
