//! Multivariate division.

use crate::error::Result;
use crate::exactmath::Field;
use crate::polyring::{Polynomial, Term};

/// Divides `f` by `divisors`: `f = Σ qᵢ·gᵢ + r` where no term of `r` is
/// divisible by a leading monomial of a divisor. The leading term of the
/// running dividend is always reduced first, by the first divisor whose
/// leading monomial divides it.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    let mut quotients: Vec<Polynomial<F>> = divisors
        .iter()
        .map(|_| Polynomial::zero(f.ring()))
        .collect();
    let remainder = reduce_with(f, divisors.iter(), |i, c, m| {
        let step = Polynomial::monomial(f.ring(), c.clone(), m.clone());
        quotients[i] = quotients[i].add(&step);
    })?;
    Ok((quotients, remainder))
}

/// Remainder of `f` under full reduction by `divisors`.
pub fn reduce<'a, F: Field>(
    f: &Polynomial<F>,
    divisors: impl Iterator<Item = &'a Polynomial<F>> + Clone,
) -> Result<Polynomial<F>> {
    reduce_with(f, divisors, |_, _, _| {})
}

fn reduce_with<'a, F: Field>(
    f: &Polynomial<F>,
    divisors: impl Iterator<Item = &'a Polynomial<F>> + Clone,
    mut record: impl FnMut(usize, &F::Elem, &crate::polyring::ExponentVector),
) -> Result<Polynomial<F>> {
    let field = f.field();
    let mut p = f.clone();
    let mut remainder: Vec<Term<F>> = Vec::new();
    while let Some(lt) = p.leading_term() {
        let hit = divisors.clone().enumerate().find_map(|(i, g)| {
            let glt = g.leading_term()?;
            glt.monomial
                .quotient_of(&lt.monomial)
                .map(|m| (i, g, glt, m))
        });
        match hit {
            Some((i, g, glt, m)) => {
                let c = field.mul(&lt.coeff, &field.inv(&glt.coeff).expect("nonzero"));
                record(i, &c, &m);
                p = p.sub(&g.mul_term(&c, &m)?);
            }
            None => {
                remainder.push(p.pop_leading().expect("nonempty"));
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(f.ring(), remainder))
}
