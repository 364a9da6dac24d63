//! Ideal presentations and the operations built from block-order bases:
//! elimination, saturation and radical membership.

use std::sync::Arc;

use super::buchberger::{buchberger, GroebnerBasis, GroebnerOptions};
use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::polyring::{MonomialOrder, PolyRing, Polynomial, VariableTable};

/// Generators of an ideal in one ring; the ring carries order and field.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPresentation<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> IdealPresentation<F> {
    /// Drops zero generators; every generator must live in `ring`.
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| **g.ring() != **ring) {
            return Err(Error::RingMismatch(
                "generators must share the presentation's ring".into(),
            ));
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Same generators re-sorted for another order on the same variables.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        let ring = self.ring.with_order(order)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.reorder(&ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&ring, gens)
    }
}

fn restrict_order(order: &MonomialOrder, keep: &[usize]) -> MonomialOrder {
    match order {
        MonomialOrder::Block { front } => MonomialOrder::Block {
            front: keep.iter().map(|&i| front[i]).collect(),
        },
        other => other.clone(),
    }
}

/// Generators of `I ∩ K[remaining variables]`, read off a block-order basis
/// with `front` as the eliminated block. The result lives in the ring of the
/// remaining variables with the order of `I` restricted to them.
pub fn eliminate<F: Field>(
    ideal: &IdealPresentation<F>,
    front: &[usize],
    opts: &GroebnerOptions,
) -> Result<IdealPresentation<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = front.iter().find(|&&i| i >= n) {
        return Err(Error::Malformed(format!(
            "variable index {bad} out of range"
        )));
    }
    if front.is_empty() {
        return Ok(buchberger(ideal, opts)?.into_presentation());
    }
    let block = ideal.with_order(MonomialOrder::block(n, front))?;
    let gb = buchberger(&block, opts)?;

    let keep: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
    let sub_vars = VariableTable::new(keep.iter().map(|&i| ring.vars().name(i).to_string()))?;
    let sub_ring = PolyRing::new(
        sub_vars,
        restrict_order(ring.order(), &keep),
        ring.field().clone(),
    )?;
    let mut var_map = vec![0usize; n];
    for (new, &old) in keep.iter().enumerate() {
        var_map[old] = new;
    }
    let gens = gb
        .elements()
        .iter()
        .filter(|g| front.iter().all(|&i| !g.involves(i)))
        .map(|g| g.embed(&sub_ring, &var_map))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(&sub_ring, gens)
}

/// `ring` with a fresh variable prepended (so it is the largest variable).
fn extend_with_fresh<F: Field>(
    ring: &Arc<PolyRing<F>>,
    base: &str,
    order: MonomialOrder,
) -> Result<Arc<PolyRing<F>>> {
    let fresh = ring.vars().fresh_name(base);
    let names = std::iter::once(fresh).chain(ring.vars().names().iter().cloned());
    PolyRing::new(VariableTable::new(names)?, order, ring.field().clone())
}

fn shift_into<F: Field>(
    gens: &[Polynomial<F>],
    extended: &Arc<PolyRing<F>>,
) -> Result<Vec<Polynomial<F>>> {
    let shift: Vec<usize> = (1..extended.nvars()).collect();
    gens.iter().map(|g| g.embed(extended, &shift)).collect()
}

/// `t·f − 1` in the extended ring, `t` being variable 0.
fn rabinowitsch_generator<F: Field>(
    f: &Polynomial<F>,
    extended: &Arc<PolyRing<F>>,
) -> Result<Polynomial<F>> {
    let shift: Vec<usize> = (1..extended.nvars()).collect();
    let t = Polynomial::var(extended, 0);
    Ok(t.mul(&f.embed(extended, &shift)?)?
        .sub(&Polynomial::one(extended)))
}

/// `I : f^∞`, eliminating a single auxiliary variable against `t·f − 1`.
pub fn saturate_ideal<F: Field>(
    ideal: &IdealPresentation<F>,
    f: &Polynomial<F>,
    opts: &GroebnerOptions,
) -> Result<IdealPresentation<F>> {
    if f.is_zero() {
        return Err(Error::Malformed(
            "cannot saturate by the zero polynomial".into(),
        ));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let extended = extend_with_fresh(ring, "t", MonomialOrder::block(n + 1, &[0]))?;
    let mut gens = shift_into(ideal.generators(), &extended)?;
    gens.push(rabinowitsch_generator(f, &extended)?);
    let gb = buchberger(&IdealPresentation::new(&extended, gens)?, opts)?;

    let mut back = vec![0usize; n + 1];
    for (i, slot) in back.iter_mut().enumerate().skip(1) {
        *slot = i - 1;
    }
    let gens = gb
        .elements()
        .iter()
        .filter(|g| !g.involves(0))
        .map(|g| g.embed(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(ring, gens)
}

/// Whether `f` vanishes on the zero set of `I` over the algebraic closure:
/// `1 ∈ I + (t·f − 1)`.
pub fn radical_member<F: Field>(
    f: &Polynomial<F>,
    ideal: &IdealPresentation<F>,
    opts: &GroebnerOptions,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let extended = extend_with_fresh(ring, "t", MonomialOrder::Grevlex)?;
    let mut gens = shift_into(ideal.generators(), &extended)?;
    gens.push(rabinowitsch_generator(f, &extended)?);
    let gb = buchberger(&IdealPresentation::new(&extended, gens)?, opts)?;
    Ok(gb.is_unit_ideal())
}

/// Mutual containment of two ideals in the same ring.
pub fn ideals_equal<F: Field>(
    a: &IdealPresentation<F>,
    b: &IdealPresentation<F>,
    opts: &GroebnerOptions,
) -> Result<bool> {
    let ga: GroebnerBasis<F> = buchberger(a, opts)?;
    let gb: GroebnerBasis<F> = buchberger(b, opts)?;
    for g in b.generators() {
        if !ga.is_member(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !gb.is_member(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
