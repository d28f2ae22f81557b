use planarlab::field::{FieldCtx, FieldElem};
use planarlab::irreducibility::{build_h, capelli_for_h};
use planarlab::planarity::{is_planar_monomial, MonomialSpec};
use planarlab::poly::BiPoly;
use planarlab::weil::{
    count_affine_zeros, count_affine_zeros_with, inequality_chain_check, weil_consistency_check,
    CountStrategy,
};
use proptest::prelude::*;

fn random_bipoly(ctx: &FieldCtx, terms: &[(u32, u32, u32)]) -> BiPoly {
    BiPoly::from_terms(
        terms
            .iter()
            .filter(|&&(i, j, _)| i + j <= 8)
            .map(|&(i, j, c)| ((i, j), FieldElem::from_bits(c & (ctx.q() - 1)))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn counting_strategies_agree(
        r in 1u32..=7,
        terms in prop::collection::vec((0u32..=8, 0u32..=8, any::<u32>()), 1..8),
    ) {
        let f = FieldCtx::new(r).unwrap();
        let p = random_bipoly(&f, &terms);
        prop_assume!(!p.is_zero());
        let a = count_affine_zeros_with(&f, &p, CountStrategy::Exhaustive).unwrap();
        let b = count_affine_zeros_with(&f, &p, CountStrategy::PerRow).unwrap();
        prop_assert_eq!((a.n, a.on_axes), (b.n, b.on_axes));
    }
}

#[test]
fn counting_strategies_agree_on_h_at_q_1024() {
    let f = FieldCtx::new(10).unwrap();
    for t in [3u64, 5, 6, 7] {
        for a in [FieldElem::ONE, f.primitive_element()] {
            let h = build_h(&f, a, t).unwrap();
            let x = count_affine_zeros_with(&f, &h, CountStrategy::Exhaustive).unwrap();
            let y = count_affine_zeros_with(&f, &h, CountStrategy::PerRow).unwrap();
            assert_eq!(x.n, y.n);
        }
    }
}

/// Planar non-power-of-2 monomials would force every zero of `H` onto the
/// axes; none exist at these sizes, and `H` always has off-axis zeros.
#[test]
fn planarity_and_axis_zeros() {
    for r in 2..=6 {
        let f = FieldCtx::new(r).unwrap();
        for t in 3..f.q() as u64 {
            if t.is_power_of_two() {
                continue;
            }
            for a in f.nonzero_elements() {
                let planar = is_planar_monomial(&f, &MonomialSpec::new(&f, a, t).unwrap(), 1)
                    .unwrap()
                    .planar;
                if planar {
                    let c = count_affine_zeros(&f, &build_h(&f, a, t).unwrap()).unwrap();
                    assert!(c.axis_only && c.n <= 2 * (t - 2), "r={r} t={t} a={a}");
                }
            }
        }
    }
    let f = FieldCtx::new(3).unwrap();
    let c = count_affine_zeros(&f, &build_h(&f, FieldElem::ONE, 3).unwrap()).unwrap();
    assert_eq!(c.n, 8);
    let t = 3;
    assert!(c.n > 2 * (t - 2));
}

#[test]
fn lower_bound_holds_at_q_4096() {
    let f = FieldCtx::new(12).unwrap();
    let g = f.primitive_element();
    for t in [3u64, 5, 6, 7] {
        for a in [FieldElem::ONE, g, f.square(g), f.inv(g).unwrap()] {
            let h = build_h(&f, a, t).unwrap();
            let abs = capelli_for_h(&f, a, t).unwrap().abs_irreducible;
            let rep = weil_consistency_check(&f, &h, abs).unwrap();
            assert_eq!(rep.satisfied, Some(true), "t={t} a={a}");
        }
    }
}

#[test]
fn chain_identity_holds_to_ten_thousand() {
    for t in 3..=10_000u64 {
        let q = ((t as u128).pow(4)).next_power_of_two() as u64;
        let c = inequality_chain_check(t, q).unwrap();
        assert!(c.identity_holds && c.cubic_positive, "t={t}");
    }
}
