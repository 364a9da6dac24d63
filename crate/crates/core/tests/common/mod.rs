#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use toric_stci::exactmath::{Field, Rationals};
use toric_stci::family::{make_family, FamilyParams};
use toric_stci::polyring::{ExponentVector, MonomialOrder, PolyRing, Polynomial, VariableTable};

pub fn ring(names: &[&str], order: MonomialOrder) -> Arc<PolyRing<Rationals>> {
    PolyRing::new(
        VariableTable::new(names.iter().copied()).unwrap(),
        order,
        Rationals,
    )
    .unwrap()
}

pub fn xyz(order: MonomialOrder) -> Arc<PolyRing<Rationals>> {
    ring(&["x", "y", "z"], order)
}

pub fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::block(3, &[0])),
        Just(MonomialOrder::block(3, &[0, 1])),
    ]
}

pub fn exponents(nvars: usize, max_exp: u32) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| ExponentVector::new(e).unwrap())
}

/// Small polynomials with integer coefficients in `[-5, 5]`.
pub fn poly(
    ring: Arc<PolyRing<Rationals>>,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial<Rationals>> {
    let n = ring.nvars();
    prop::collection::vec((-5i64..=5, exponents(n, max_exp)), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &ring,
                terms.into_iter().map(|(c, e)| (Rationals.from_i64(c), e)),
            )
            .unwrap()
        },
    )
}

/// Generators for Buchberger properties: up to three under grevlex, two
/// under elimination orders, where generic dense systems grow too fast.
pub fn generators(order: MonomialOrder) -> impl Strategy<Value = Vec<Polynomial<Rationals>>> {
    let max = if order == MonomialOrder::Grevlex {
        3
    } else {
        2
    };
    prop::collection::vec(poly(xyz(order), 3, 2), 1..=max)
}

/// `(n, d, a)` with `n ∈ {2, 3}`, `d ≤ 12`, `a_i ≤ 3`, validated non-strictly.
pub fn family_strategy() -> impl Strategy<Value = FamilyParams> {
    (2usize..=3, 1u32..=12, prop::collection::vec(1u32..=3, 2))
        .prop_map(|(n, d, a)| make_family(n, d, a[..n - 1].to_vec(), false).unwrap())
}
