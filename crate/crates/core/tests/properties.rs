//! Property tests over small random groups, elements and partition tuples.

use proptest::prelude::*;

use reflectra::group::{galois_apply, Group, GroupElement, GroupParams};
use reflectra::partition::{
    character_dimension, enumerate_partition_tuples, partitions, poincare_star_roots, xi_from_roots,
    PartitionTuple, DEFAULT_MAX_TUPLES,
};
use reflectra::reflection::codim;
use reflectra::spectra::{spectrum_numeric, MatrixKind};
use reflectra::{Connection, ReflectionGroup};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `(r, p, n)` with `p | r` and order at most `max_order`.
fn small_params(max_order: u128) -> impl Strategy<Value = GroupParams> {
    (1u32..=6, 1u32..=6, 1u32..=3)
        .prop_filter_map("p | r, bounded order", move |(r, p, n)| {
            let params = GroupParams::new(r, p, n).ok()?;
            (params.order()? <= max_order).then_some(params)
        })
}

fn random_tuple(r: u32, n: u32) -> impl Strategy<Value = PartitionTuple> {
    let all = enumerate_partition_tuples(r, n, DEFAULT_MAX_TUPLES).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(params in small_params(400), seeds in prop::array::uniform3(any::<prop::sample::Index>())) {
        let g = Group::new(params).unwrap();
        let [a, b, c] = seeds.map(|s| s.index(g.order()));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        let (x, y) = (g.element(a), g.element(b));
        let xy = x.multiply(y).unwrap();
        prop_assert!(params.contains(&xy));
        prop_assert_eq!(g.index_of(&xy), Some(g.mul(a, b)));
        prop_assert!(x.multiply(&x.inverse()).unwrap().is_identity());
        prop_assert!(x.pow(x.order()).is_identity());
    }

    #[test]
    fn codim_is_a_lower_bound_for_length(params in small_params(400)) {
        let rg = ReflectionGroup::new(params).unwrap();
        for x in 0..rg.order() {
            prop_assert!(rg.lengths.codims[x] <= rg.lengths.lengths[x]);
            prop_assert_eq!(rg.lengths.codims[x] as usize, codim(rg.group.element(x)));
        }
        prop_assert_eq!(rg.reflections.len(), rg.lengths.lengths.iter().filter(|&&l| l == 1).count());
    }

    #[test]
    fn galois_action_is_a_codim_preserving_bijection(params in small_params(200), e in 1i64..30) {
        prop_assume!(gcd(e as u64, params.r as u64) == 1);
        let g = Group::new(params).unwrap();
        let mut hit = vec![false; g.order()];
        for x in g.elements() {
            let y = galois_apply(x, e).unwrap();
            prop_assert_eq!(codim(&y), codim(x));
            let j = g.index_of(&y).expect("image stays in the group");
            prop_assert!(!hit[j]);
            hit[j] = true;
        }
    }

    #[test]
    fn slots_past_the_first_are_interchangeable(lambda in random_tuple(4, 4), shift in 1usize..3) {
        let mut rest: Vec<_> = lambda.parts()[1..].to_vec();
        rest.rotate_left(shift);
        let mut parts = vec![lambda.parts()[0].clone()];
        parts.extend(rest);
        let moved = PartitionTuple::new(parts).unwrap();
        let mut a = poincare_star_roots(&lambda, 4).unwrap().roots;
        let mut b = poincare_star_roots(&moved, 4).unwrap().roots;
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(character_dimension(&lambda).unwrap(), character_dimension(&moved).unwrap());
    }

    #[test]
    fn xi_matches_expanded_polynomial(lambda in random_tuple(3, 4)) {
        let roots = poincare_star_roots(&lambda, 3).unwrap();
        // Coefficients of Π (1 + α t), then R'(1) = Σ k c_k.
        let mut coeffs = vec![1i128];
        for &a in &roots.roots {
            let mut next = vec![0i128; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k] += c;
                next[k + 1] += c * a as i128;
            }
            coeffs = next;
        }
        let derivative: i128 = coeffs.iter().enumerate().map(|(k, &c)| k as i128 * c).sum();
        prop_assert_eq!(xi_from_roots(&roots).unwrap(), derivative);
    }

    #[test]
    fn trace_and_frobenius_identities(params in small_params(150), kind_ix in 0usize..3) {
        let kind = [MatrixKind::Adjacency, MatrixKind::Distance, MatrixKind::Codimension][kind_ix];
        let rg = ReflectionGroup::new(params).unwrap();
        let m = rg.matrix(kind, Connection::AllReflections, 1200).unwrap();
        let s = spectrum_numeric(&m, 1e-6).unwrap();
        prop_assert!(s.is_integral());
        prop_assert_eq!(s.total_multiplicity(), rg.order());
        prop_assert_eq!(s.trace(), m.trace());
        prop_assert_eq!(s.sum_of_squares(), m.frobenius_sq());
        prop_assert_eq!(m.trace(), 0);
    }

    #[test]
    fn class_algebra_matches_numeric(params in small_params(100), kind_ix in 0usize..3) {
        let kind = [MatrixKind::Adjacency, MatrixKind::Distance, MatrixKind::Codimension][kind_ix];
        let rg = ReflectionGroup::new(params).unwrap();
        let f = rg.class_function(kind).unwrap();
        let by_algebra = rg.class_algebra().unwrap().spectrum(&f, 1e-6).unwrap();
        let by_matrix = spectrum_numeric(&rg.matrix(kind, Connection::AllReflections, 1200).unwrap(), 1e-6).unwrap();
        prop_assert!(by_algebra.same_eigenvalues(&by_matrix), "{} vs {}", by_algebra, by_matrix);
    }
}

#[test]
fn dimensions_square_sum_to_order() {
    for (r, n) in [(1, 5), (2, 3), (3, 3), (4, 2)] {
        let order = (r as u128).pow(n) * (1..=n as u128).product::<u128>();
        let total: u128 = enumerate_partition_tuples(r, n, DEFAULT_MAX_TUPLES)
            .unwrap()
            .iter()
            .map(|t| character_dimension(t).unwrap().pow(2))
            .sum();
        assert_eq!(total, order, "r = {r}, n = {n}");
    }
    assert_eq!(partitions(5).len(), 7);
}

#[test]
fn element_parse_display_roundtrip() {
    let g = Group::new(GroupParams::new(3, 1, 3).unwrap()).unwrap();
    for x in g.elements() {
        assert_eq!(&GroupElement::parse(3, &x.to_string()).unwrap(), x);
    }
}
