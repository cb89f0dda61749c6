mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use snakefrac::check::{self, CheckError, Methods};
use snakefrac::fpoly::{self, FpolyError};
use snakefrac::laurent::{LaurentPolynomial, Monomial, Var};
use snakefrac::matchings::{self, DEFAULT_LIMIT};
use snakefrac::{ContinuedFraction, SnakeGraph};

#[test]
fn grid_has_expected_size() {
    // 3 choices of a1, 4 for every later entry
    let expected: usize = (0..5).map(|k| 3 * 4usize.pow(k)).sum();
    assert_eq!(common::grid(5, 4).len(), expected);
}

#[test]
fn matching_count_is_the_continuant() {
    for cf in common::grid(5, 4) {
        let g = SnakeGraph::build(&cf).unwrap();
        assert_eq!(g.tile_count() as u64, cf.total() - 1);
        let count = matchings::enumerate(&g, DEFAULT_LIMIT).unwrap().len();
        assert_eq!(BigUint::from(count), cf.numerator(), "{cf}");
    }
}

#[test]
fn only_extremes_avoid_interior_edges() {
    for cf in common::grid(4, 4) {
        let g = SnakeGraph::build(&cf).unwrap();
        let interior: BTreeSet<_> = g.interior_edges().iter().collect();
        let boundary_only: BTreeSet<_> = matchings::enumerate(&g, DEFAULT_LIMIT)
            .unwrap()
            .into_iter()
            .filter(|m| m.edges().all(|e| !interior.contains(e)))
            .collect();
        let expected: BTreeSet<_> = [g.minimal_matching(), g.maximal_matching()].into();
        assert_eq!(boundary_only, expected, "{cf}");
    }
}

#[test]
fn completed_minimal_matchings_are_perfect_on_subgraphs() {
    for cf in common::grid(5, 4) {
        let g = SnakeGraph::build(&cf).unwrap();
        for i in 1..=cf.len() {
            let h = g.subgraph(&cf, i).unwrap();
            if h.tile_count() == 0 {
                continue;
            }
            let m = g.completed_minimal_matching(&cf, i).unwrap();
            assert!(h.is_perfect_matching(&m), "{cf}, i = {i}");
            let boundary = h.boundary_edges();
            let foreign = m.edges().filter(|e| !boundary.contains(e)).count();
            assert!(foreign <= 1, "{cf}, i = {i}");
            assert!(h.steps().windows(2).all(|w| w[0] != w[1]), "H_{i} of {cf} is not a zigzag");
        }
    }
}

#[test]
fn poset_extremes() {
    for cf in common::grid(4, 4) {
        let g = SnakeGraph::build(&cf).unwrap();
        let base = g.minimal_matching();
        let top = matchings::height(&g, &g.maximal_matching(), &base).unwrap();
        assert_eq!(top, Monomial::range_product(1, g.tile_count() as Var, false), "{cf}");
        let f = matchings::f_polynomial(&g, None, DEFAULT_LIMIT).unwrap();
        assert!(f.all_coefficients_one(), "{cf}");
    }
}

#[test]
fn heights_against_arbitrary_base_are_monomials_of_tiles() {
    let cf: ContinuedFraction = "2,3,4".parse().unwrap();
    let g = SnakeGraph::build(&cf).unwrap();
    let all = matchings::enumerate(&g, DEFAULT_LIMIT).unwrap();
    let base = &all[7];
    let f = matchings::f_polynomial(&g, Some(base), DEFAULT_LIMIT).unwrap();
    assert_eq!(f.eval_all_ones(), 30.into());
    assert!(f.is_polynomial());
}

// C_i with the odd and even cases swapped
fn swapped_formula(cf: &ContinuedFraction) -> Result<LaurentPolynomial, FpolyError> {
    cf.ensure_snake()?;
    let n = cf.len();
    let swapped = |i: usize| {
        let l = |k: usize| cf.ell(k).unwrap() as Var;
        if i % 2 == 0 {
            Monomial::range_product(1, l(i - 1), false)
        } else {
            Monomial::range_product(1, l(i) - 1, true)
        }
    };
    let entries: Vec<_> = (1..=n)
        .map(|i| fpoly::zigzag_polynomial(cf, i).unwrap().mul_monomial(&swapped(i)))
        .collect();
    let mut f = fpoly::continuant(&entries);
    if n % 2 == 0 {
        f = f.mul_monomial(&swapped(n).inverse());
    }
    Ok(f)
}

fn reversed_zigzag(cf: &ContinuedFraction, i: usize) -> Result<LaurentPolynomial, FpolyError> {
    let lo = cf.ell(i - 1)? as Var;
    let hi = cf.ell(i)? as Var - 1;
    let mut phi = LaurentPolynomial::one();
    for k in lo + 1..=hi {
        phi = phi + LaurentPolynomial::range_product(lo + 1, k, false);
    }
    Ok(phi)
}

#[test]
fn check_catches_mutations() {
    let cf: ContinuedFraction = "2,3,4,2".parse().unwrap();
    assert!(check::check(&cf, DEFAULT_LIMIT).is_ok());

    let broken = Methods { formula: swapped_formula, ..Methods::default() };
    assert!(matches!(check::check_with(&cf, DEFAULT_LIMIT, &broken), Err(CheckError::Mismatch { .. })));

    let broken = Methods { graft: swapped_formula, ..Methods::default() };
    assert!(matches!(check::check_with(&cf, DEFAULT_LIMIT, &broken), Err(CheckError::Mismatch { .. })));

    let broken = Methods { zigzag: reversed_zigzag, ..Methods::default() };
    let err = check::check_with(&cf, DEFAULT_LIMIT, &broken).unwrap_err();
    assert!(err.to_string().contains("F(H_2)"), "{err}");
}

#[test]
fn formula_at_moderate_scale() {
    // [2, 1 x 18, 2]: too large to enumerate quickly, still cheap symbolically
    let mut entries = vec![2];
    entries.extend([1; 18]);
    entries.push(2);
    let cf = ContinuedFraction::new(entries).unwrap();
    let f = fpoly::formula(&cf).unwrap();
    assert_eq!(f.eval_all_ones(), cf.numerator().into());
    assert_eq!(BigUint::from(f.term_count()), cf.numerator());
    assert_eq!(f, fpoly::graft(&cf).unwrap());
}
