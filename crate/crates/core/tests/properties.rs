use artin_core::classes::{classify, pip_rp_certificate, PipRpRegistry};
use artin_core::coxeter::{is_spherical, CoxeterMatrix};
use artin_core::families;
use artin_core::oracle::{brute_force_odd_join, brute_force_splittings, gram_positive_definite};
use artin_core::splittings::{
    criterion, enumerate_splittings, pair_criterion, theorem_verdict, Criterion, EnumerationMode, Verdict,
};
use artin_core::tits::{certify, validate_certificate, BaseClassRegistry, CertifyOptions};
use artin_core::{PresentationGraph, VertexSet};
use proptest::prelude::*;

/// Random graph on `1..=max_n` vertices; label 0 means no edge.
fn graph(max_n: usize, labels: &'static [u32]) -> impl Strategy<Value = PresentationGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::sample::select(labels), pairs).prop_map(move |ls| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if ls[k] != 0 {
                        edges.push((u, v, ls[k]));
                    }
                    k += 1;
                }
            }
            families::from_index_edges(n, &edges)
        })
    })
}

const LABELS: &[u32] = &[0, 0, 2, 2, 3, 4, 5, 6, 7];

fn subset(g: &PresentationGraph, bits: u64) -> VertexSet {
    VertexSet::from_bits(bits) & g.all()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn neighbourhood_of_union(g in graph(8, LABELS), a: u64, b: u64) {
        let (a, b) = (subset(&g, a), subset(&g, b));
        prop_assert_eq!(g.neighbourhood(a | b), g.neighbourhood(a) | g.neighbourhood(b));
        prop_assert!(a.is_subset(g.neighbourhood(a)));
    }

    #[test]
    fn link_avoids_its_set(g in graph(8, LABELS), a: u64) {
        let a = subset(&g, a);
        prop_assume!(!a.is_empty());
        prop_assert!(!g.link(a).intersects(a));
        prop_assert!(g.link(a).is_subset(g.neighbourhood(a)));
    }

    #[test]
    fn odd_join_symmetric_monotone_and_brute_forced(g in graph(8, LABELS), a: u64, b: u64, extra: u64) {
        let (a, b, extra) = (subset(&g, a), subset(&g, b), subset(&g, extra));
        let joined = g.joined_by_odd_path(a, b).is_some();
        prop_assert_eq!(joined, g.joined_by_odd_path(b, a).is_some());
        prop_assert_eq!(joined, brute_force_odd_join(&g, a, b).unwrap());
        if joined {
            prop_assert!(g.joined_by_odd_path(a | extra, b).is_some());
        }
        if let Some((x, y)) = g.joined_by_odd_path(a, b) {
            let path = g.odd_path(x, y).unwrap();
            prop_assert!(path.windows(2).all(|w| g.label(w[0], w[1]).is_some_and(|m| m % 2 == 1)));
        }
    }

    #[test]
    fn sphericity_matches_gram_form(g in graph(6, LABELS)) {
        prop_assert_eq!(is_spherical(&g, g.all()), gram_positive_definite(&CoxeterMatrix::from_graph(&g, g.all())));
    }

    #[test]
    fn sphericity_is_inherited(g in graph(7, LABELS), sub: u64) {
        if is_spherical(&g, g.all()) {
            prop_assert!(is_spherical(&g, subset(&g, sub)));
        }
    }

    #[test]
    fn invariant_under_renaming(g in graph(6, LABELS)) {
        // reverse-order names permute the sorted vertex indices
        let renamed = PresentationGraph::new(
            g.vertices().iter().map(|v| rename(v)).collect::<Vec<_>>().iter().map(String::as_str),
            g.edges().map(|(u, v, m)| (rename(g.vertex_name(u)), rename(g.vertex_name(v)), m)).collect::<Vec<_>>()
                .iter().map(|(u, v, m)| (u.as_str(), v.as_str(), *m)),
        ).unwrap();
        let (r1, r2) = (classify(&g), classify(&renamed));
        prop_assert_eq!(flags(&r1), flags(&r2));
        prop_assert_eq!(
            enumerate_splittings(&g, EnumerationMode::All, 16).unwrap().len(),
            enumerate_splittings(&renamed, EnumerationMode::All, 16).unwrap().len()
        );
        prop_assert_eq!(pair_criterion(&g).len(), pair_criterion(&renamed).len());
    }

    #[test]
    fn criterion_matches_brute_force_on_either_side(g in graph(7, LABELS)) {
        for s in enumerate_splittings(&g, EnumerationMode::All, 16).unwrap() {
            let r = criterion(&g, &s);
            let joined = brute_force_odd_join(&g, r.x_neighbourhood, r.y_neighbourhood).unwrap();
            prop_assert_eq!(joined, brute_force_odd_join(&g, r.y_neighbourhood, r.x_neighbourhood).unwrap());
            prop_assert_eq!(r.holds(), !joined);
            if let Criterion::Fails(join) = &r.outcome {
                prop_assert!(join.path.iter().all(|&v| s.z().contains(v)));
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(g in graph(5, LABELS)) {
        prop_assert_eq!(enumerate_splittings(&g, EnumerationMode::All, 16).unwrap(), brute_force_splittings(&g).unwrap());
    }

    #[test]
    fn verdicts_are_layered(g in graph(6, LABELS)) {
        let reg = PipRpRegistry::default();
        for s in enumerate_splittings(&g, EnumerationMode::All, 16).unwrap() {
            let v = theorem_verdict(&g, &s, (None, None), &reg).unwrap();
            prop_assert!(v.hypothesis_x.revalidate(&g.induced_subgraph(s.x())));
            prop_assert!(v.hypothesis_y.revalidate(&g.induced_subgraph(s.y())));
            match &v.verdict {
                Verdict::NotAcylindrical(w) => {
                    prop_assert!(!v.criterion.holds());
                    prop_assert_eq!(w.verify(&g, &s), Ok(()));
                }
                Verdict::Acylindrical { k, c } => {
                    prop_assert!(v.criterion.holds() && v.hypothesis_x.is_certified() && v.hypothesis_y.is_certified());
                    prop_assert_eq!((*k, *c), (3, 1));
                }
                Verdict::CriterionHoldsHypothesisUnknown => prop_assert!(v.criterion.holds()),
            }
        }
    }

    #[test]
    fn certified_evidence_revalidates(g in graph(7, LABELS)) {
        let e = pip_rp_certificate(&g, None, &PipRpRegistry::default()).unwrap();
        prop_assert!(e.revalidate(&g));
    }

    #[test]
    fn certificates_revalidate_and_memo_is_sound(g in graph(6, LABELS)) {
        let bases = BaseClassRegistry::default().without("fc_type").without("two_dimensional");
        let opts = CertifyOptions { max_depth: 4, ..CertifyOptions::default() };
        let c = certify(&g, &bases, &opts);
        let unmemoized = certify(&g, &bases, &CertifyOptions { memoize: false, ..opts.clone() });
        prop_assert_eq!(&c, &unmemoized);
        if c.is_complete() {
            prop_assert!(validate_certificate(&c, &bases).is_ok());
            // a larger registry keeps the certificate complete
            prop_assert!(certify(&g, &BaseClassRegistry::default(), &opts).is_complete());
        }
    }
}

fn rename(v: &str) -> String {
    // maps a..z to z..a so sorted order reverses
    v.chars().map(|c| if c.is_ascii_lowercase() { (b'z' - (c as u8 - b'a')) as char } else { c }).collect()
}

fn flags(r: &artin_core::ClassReport) -> [bool; 8] {
    [
        r.right_angled.holds,
        r.even.holds,
        r.large_type.holds,
        r.two_two_free.holds,
        r.two_dimensional.holds,
        r.fc_type.holds,
        r.spherical.holds,
        r.reducible.holds,
    ]
}

#[test]
fn right_angled_square_needs_a_base_class() {
    // C4 with all labels 2 splits as a product, never acylindrically
    let g = families::cycle(&[2, 2, 2, 2]);
    let c = certify(&g, &BaseClassRegistry::select(["large_type"]).unwrap(), &CertifyOptions::default());
    assert!(!c.is_complete());
    assert!(certify(&g, &BaseClassRegistry::default(), &CertifyOptions::default()).is_complete());
}
