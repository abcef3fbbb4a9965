//! Property tests: oracle invariants, reduction vs. oracle, pencil identity.

use proptest::prelude::*;
use randic_core::closed_form::{energy_r2, energy_r3, r3_spectral_params, r3_coefficients, spectrum_r3};
use randic_core::eigen::{
    adjacency_energy, path_adjacency_spectrum, randic_energy, randic_spectrum, symmetric_eigenvalues,
};
use randic_core::graph::{build_caterpillar, randic_matrix, CaterpillarSpec, Graph};
use randic_core::hjoin::{caterpillar_blocks, caterpillar_randic_spectrum, hjoin_randic_spectrum, HJoinInstance};
use randic_core::Matrix;

fn caterpillar_spec(max_r: usize, max_p: usize) -> impl Strategy<Value = CaterpillarSpec> {
    prop::collection::vec(1..=max_p, 2..=max_r).prop_map(|p| CaterpillarSpec::new(p).unwrap())
}

/// Random labelled tree decoded from a Prüfer sequence.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..n, n - 2).prop_map(move |seq| (n, seq)))
        .prop_map(|(n, seq)| {
            let mut degree = vec![1usize; n];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut g = Graph::empty(n);
            for &v in &seq {
                let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
                g.add_edge(leaf, v).unwrap();
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
            g.add_edge(rest[0], rest[1]).unwrap();
            g
        })
}

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| (n, bits)))
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn trace_and_square_trace(g in random_graph(14)) {
        let m = randic_matrix(&g);
        prop_assert_eq!(m.trace(), 0.0);
        let s = symmetric_eigenvalues(&m).unwrap();
        let k = g.order() as f64;
        let sum: f64 = s.values().iter().sum();
        prop_assert!(sum.abs() <= 1e-9 * k);
        let sq: f64 = s.values().iter().map(|x| x * x).sum();
        let expected: f64 = g
            .edges()
            .iter()
            .map(|&(u, v)| 2.0 / (g.degree(u) * g.degree(v)) as f64)
            .sum();
        prop_assert!((sq - expected).abs() <= 1e-9 * k);
        prop_assert!((sq - m.trace_of_square()).abs() <= 1e-9 * k);
    }

    #[test]
    fn randic_rows_are_finite_and_positive(g in random_graph(12)) {
        let m = randic_matrix(&g);
        for v in 0..g.order() {
            let row: f64 = m.row(v).iter().sum();
            prop_assert!(row.is_finite());
            if g.degree(v) > 0 {
                prop_assert!(row > 0.0);
            }
        }
    }

    #[test]
    fn largest_eigenvalue_and_energy_bounds(g in random_graph(14)) {
        prop_assume!(g.size() > 0);
        let s = randic_spectrum(&g).unwrap();
        prop_assert!((s.largest().unwrap() - 1.0).abs() <= 1e-9);
        let re = s.energy();
        prop_assert!(re >= 2.0 - 1e-9);
        prop_assert!(re <= g.order() as f64 + 1e-9);
    }

    #[test]
    fn tree_spectra_are_symmetric(g in tree(20)) {
        prop_assert!(g.is_tree());
        let s = randic_spectrum(&g).unwrap();
        let v = s.values();
        for i in 0..v.len() {
            prop_assert!((v[i] + v[v.len() - 1 - i]).abs() <= 1e-9);
        }
    }

    #[test]
    fn caterpillar_is_a_tree_with_its_spine(spec in caterpillar_spec(7, 6)) {
        let g = build_caterpillar(&spec);
        prop_assert_eq!(g.order(), spec.order());
        prop_assert!(g.is_tree());
        let spine = g.non_pendant_vertices();
        prop_assert_eq!(spine.len(), spec.spine_len());
        prop_assert_eq!(g.induced_subgraph(&spine), Graph::path(spec.spine_len()));
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn reduction_matches_oracle(spec in caterpillar_spec(6, 8)) {
        let reduced = caterpillar_randic_spectrum(&spec).unwrap();
        let oracle = randic_spectrum(&build_caterpillar(&spec)).unwrap();
        prop_assert_eq!(reduced.len(), spec.order());
        prop_assert!(reduced.max_abs_diff(&oracle).unwrap() <= 1e-9);

        let general = hjoin_randic_spectrum(&HJoinInstance::caterpillar(&spec)).unwrap();
        prop_assert!(general.max_abs_diff(&oracle).unwrap() <= 1e-9);
    }

    #[test]
    fn gamma_spectrum_is_symmetric(spec in caterpillar_spec(6, 8)) {
        let blocks = caterpillar_blocks(&spec);
        let s = symmetric_eigenvalues(&blocks.gamma).unwrap();
        let v = s.values();
        for i in 0..v.len() {
            prop_assert!((v[i] + v[v.len() - 1 - i]).abs() <= 1e-9);
        }
        for &x in &blocks.b {
            prop_assert!(x > 0.0 && x.is_finite());
        }
    }

    #[test]
    fn pencil_equals_characteristic_polynomial(
        spec in caterpillar_spec(6, 5),
        lambdas in prop::collection::vec(-2.0f64..2.0, 20),
    ) {
        let blocks = caterpillar_blocks(&spec);
        for l in lambdas {
            let lhs = blocks.characteristic(l);
            let rhs = blocks.pencil_det(l);
            prop_assert!((lhs - rhs).abs() <= 1e-8, "{} at {}: {} vs {}", spec, l, lhs, rhs);
        }
    }

    #[test]
    fn schur_determinant_identity(
        m in 1usize..5,
        k in 1usize..5,
        entries in prop::collection::vec(-1.0f64..1.0, 64),
    ) {
        let size = m + k;
        let mut it = entries.into_iter().cycle();
        let mut full = Matrix::from_fn(size, size, |_, _| it.next().unwrap());
        // diagonal dominance keeps D nonsingular
        for i in m..size {
            full.set(i, i, full.get(i, i) + 4.0);
        }
        let a = full.block(0, 0, m, m);
        let b = full.block(0, m, m, k);
        let c = full.block(m, 0, k, m);
        let d = full.block(m, m, k, k);
        let d_inv = d.lu().unwrap().inverse().unwrap();
        let schur = a.sub(&b.mul(&d_inv).unwrap().mul(&c).unwrap()).unwrap();
        let lhs = full.determinant().unwrap();
        let rhs = schur.determinant().unwrap() * d.determinant().unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-8 * lhs.abs().max(1.0));
    }

    #[test]
    fn three_spine_params_in_range(n in 7u64..400, p in 1u64..200, q in 1u64..200) {
        prop_assume!(p + q + 4 <= n);
        let ps = r3_spectral_params(&r3_coefficients(n, p, q).unwrap()).unwrap();
        prop_assert!(ps.gamma >= 0.0 && ps.gamma < 1.0);
        let lo = ps.alpha - ps.beta;
        let hi = ps.alpha + ps.beta;
        prop_assert!(lo >= -1e-15 && lo <= hi && hi <= 1.0 + 1e-15);
        prop_assert_eq!(energy_r3(n, p, q).unwrap(), energy_r3(n, q, p).unwrap());
    }

    #[test]
    fn three_spine_roots_solve_the_pencil(n in 7u64..60, p in 1u64..30, q in 1u64..30) {
        prop_assume!(p + q + 4 <= n);
        let spec = CaterpillarSpec::new(vec![p as usize, (n - p - q - 3) as usize, q as usize]).unwrap();
        let blocks = caterpillar_blocks(&spec);
        for l in spectrum_r3(n, p, q).unwrap() {
            prop_assert!(blocks.pencil_det(l).abs() <= 1e-8);
        }
    }
}

#[test]
fn closed_forms_match_oracle_on_examples() {
    let s = CaterpillarSpec::new(vec![5, 12]).unwrap();
    let oracle = randic_spectrum(&build_caterpillar(&s)).unwrap();
    let nonzero: Vec<f64> = oracle.values().iter().copied().filter(|x| x.abs() > 1e-8).collect();
    let closed = randic_core::closed_form::spectrum_r2(19, 5).unwrap();
    assert_eq!(nonzero.len(), 4);
    for (a, b) in nonzero.iter().zip(closed) {
        assert!((a - b).abs() < 1e-9);
    }

    let s = CaterpillarSpec::new(vec![5, 6, 5]).unwrap();
    let oracle = randic_spectrum(&build_caterpillar(&s)).unwrap();
    assert_eq!(oracle.multiplicity_of(0.0), 13);
    let nonzero: Vec<f64> = oracle.values().iter().copied().filter(|x| x.abs() > 1e-8).collect();
    for (a, b) in nonzero.iter().zip(spectrum_r3(19, 5, 5).unwrap()) {
        assert!((a - b).abs() < 1e-9);
    }
    assert!((randic_energy(&build_caterpillar(&s)).unwrap() - energy_r3(19, 5, 5).unwrap()).abs() < 1e-9);
}

#[test]
fn double_star_closed_form_against_oracle() {
    for n in 4..=40u64 {
        for p in 1..=n - 3 {
            let s = CaterpillarSpec::new(vec![p as usize, (n - p - 2) as usize]).unwrap();
            let oracle = randic_energy(&build_caterpillar(&s)).unwrap();
            assert!((oracle - energy_r2(n, p).unwrap()).abs() <= 1e-9, "n={n} p={p}");
        }
    }
}

#[test]
fn path_relation_and_matchings() {
    for n in 4..=60 {
        let re = randic_energy(&Graph::path(n)).unwrap();
        let e = adjacency_energy(&Graph::path(n - 2)).unwrap();
        assert!((re - 2.0 - 0.5 * e).abs() <= 1e-8, "n={n}");
        let analytic = path_adjacency_spectrum(n - 2).energy();
        assert!((e - analytic).abs() <= 1e-9);
    }
    for k in 1..=10 {
        let re = randic_energy(&Graph::matching(k)).unwrap();
        assert_eq!(re, (2 * k) as f64);
    }
}

#[test]
fn complete_graphs_attain_the_lower_bound() {
    for n in 2..=12 {
        assert!((randic_energy(&Graph::complete(n)).unwrap() - 2.0).abs() < 1e-9);
    }
}
