//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of the coprime and chain criteria.

use std::sync::Arc;

use super::division::reduce;
use super::ideal::IdealPresentation;
use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::polyring::{ExponentVector, MonomialOrder, PolyRing, Polynomial};

/// Default cap on processed S-pairs.
pub const DEFAULT_STEP_LIMIT: usize = 200_000;

/// Environment variable overriding the step limit.
pub const STEP_LIMIT_ENV: &str = "TORIC_STCI_STEP_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerOptions {
    pub step_limit: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        Self {
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }
}

impl GroebnerOptions {
    /// Defaults, with the step limit taken from `TORIC_STCI_STEP_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(STEP_LIMIT_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|step_limit| Self { step_limit })
                .map_err(|_| Error::Malformed(format!("{STEP_LIMIT_ENV}={v} is not a count"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Reduced Gröbner basis: monic elements sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !Arc::ptr_eq(f.ring(), &self.ring) && **f.ring() != *self.ring {
            return Err(Error::RingMismatch(
                "polynomial and basis live in different rings".into(),
            ));
        }
        reduce(f, self.elements.iter())
    }

    pub fn is_member(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn into_presentation(self) -> IdealPresentation<F> {
        IdealPresentation::new(&self.ring, self.elements).expect("basis lives in its ring")
    }
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let field = f.field();
    let (Some(ft), Some(gt)) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let lcm = ft.monomial.lcm(&gt.monomial);
    let mf = ft.monomial.quotient_of(&lcm).expect("lcm");
    let mg = gt.monomial.quotient_of(&lcm).expect("lcm");
    let cf = field.inv(&ft.coeff).expect("nonzero");
    let cg = field.inv(&gt.coeff).expect("nonzero");
    Ok(f.mul_term(&cf, &mf)?.sub(&g.mul_term(&cg, &mg)?))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

struct Engine<'a, F: Field> {
    order: &'a MonomialOrder,
    polys: Vec<Polynomial<F>>,
    lms: Vec<ExponentVector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn active_polys(&self) -> impl Iterator<Item = &Polynomial<F>> + Clone {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
    }

    /// Adds `h` (monic, reduced against the active set) and updates the pair set.
    fn insert(&mut self, h: Polynomial<F>) {
        let hi = self.polys.len();
        let hlm = h.leading_monomial().expect("nonzero").clone();

        let mut fresh: Vec<(usize, ExponentVector, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lcm = hlm.lcm(&self.lms[g]);
                let coprime = hlm.is_coprime(&self.lms[g]);
                (g, lcm, coprime)
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, ExponentVector, bool)> = Vec::new();
        while !fresh.is_empty() {
            let (g, lcm, coprime) = fresh.remove(0);
            let dominated = fresh
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }

        // chain criterion on old pairs
        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm) && hlm.lcm(&lms[p.i]) != p.lcm && hlm.lcm(&lms[p.j]) != p.lcm)
        });

        // coprime criterion
        self.pairs.extend(
            kept.into_iter()
                .filter(|(_, _, coprime)| !coprime)
                .map(|(g, lcm, _)| Pair { i: g, j: hi, lcm }),
        );

        for g in 0..hi {
            if self.active[g] && hlm.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.lms.push(hlm);
        self.active.push(true);
    }

    /// Normal selection: least lcm degree, then least lcm in the order.
    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.cmp_unchecked(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal, w.r.t. the ring's order.
pub fn buchberger<F: Field>(
    ideal: &IdealPresentation<F>,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis<F>> {
    let ring = ideal.ring().clone();
    let order = ring.order();
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Polynomial::one(&ring)],
    };
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        lms: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    for f in ideal.generators() {
        let h = reduce(f, engine.active_polys())?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        engine.insert(h.monic());
    }

    let mut steps = 0usize;
    while let Some(pair) = engine.pop_pair() {
        steps += 1;
        if steps > opts.step_limit {
            return Err(Error::StepLimitExceeded {
                limit: opts.step_limit,
            });
        }
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j])?;
        let h = reduce(&s, engine.active_polys())?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        engine.insert(h.monic());
    }

    // the active set is minimal; interreduce tails
    let mut elements: Vec<Polynomial<F>> = engine.active_polys().cloned().collect();
    elements.sort_by(|a, b| {
        order.cmp_unchecked(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    for k in 0..elements.len() {
        let others: Vec<&Polynomial<F>> = elements
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, p)| p)
            .collect();
        let reduced = reduce(&elements[k], others.iter().copied())?;
        elements[k] = reduced.monic();
    }
    debug_assert!(elements.iter().all(|e| !e.is_zero()));
    Ok(GroebnerBasis { ring, elements })
}

/// True when every S-polynomial of `basis` reduces to zero modulo it.
pub fn satisfies_buchberger_criterion<F: Field>(basis: &[Polynomial<F>]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j])?;
            if !reduce(&s, basis.iter())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{PrimeField, Rationals};
    use crate::polyring::{parse_poly, VariableTable};

    fn ring(names: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(
            VariableTable::new(names.iter().copied()).unwrap(),
            MonomialOrder::Grevlex,
            Rationals,
        )
        .unwrap()
    }

    fn ideal(r: &Arc<PolyRing<Rationals>>, gens: &[&str]) -> IdealPresentation<Rationals> {
        IdealPresentation::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn single_generators() {
        let r = ring(&["x"]);
        let gb = buchberger(&ideal(&r, &["x"]), &GroebnerOptions::default()).unwrap();
        assert_eq!(gb.elements(), &[parse_poly("x", &r).unwrap()]);

        let r = ring(&["x1", "x2", "y1"]);
        let gb = buchberger(&ideal(&r, &["y1^6 - x1^6*x2"]), &GroebnerOptions::default()).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements()[0], parse_poly("x1^6*x2 - y1^6", &r).unwrap());
    }

    #[test]
    fn two_binomials_satisfy_criterion() {
        let r = ring(&["x1", "x2", "x3", "y1", "y2"]);
        let input = ideal(&r, &["y1^6 - x1^6*x3", "x2*y1 - x1*y2"]);
        let gb = buchberger(&input, &GroebnerOptions::default()).unwrap();
        assert!(satisfies_buchberger_criterion(gb.elements()).unwrap());
        for g in input.generators() {
            assert!(gb.is_member(g).unwrap());
        }
        for (i, a) in gb.elements().iter().enumerate() {
            assert!(a.field().is_one(a.leading_coeff().unwrap()));
            for (j, b) in gb.elements().iter().enumerate() {
                if i != j {
                    let lm = b.leading_monomial().unwrap();
                    assert!(a.terms().iter().all(|t| !lm.divides(&t.monomial)));
                }
            }
        }
        let again = buchberger(&input, &GroebnerOptions::default()).unwrap();
        assert_eq!(gb, again);
    }

    #[test]
    fn textbook_example_over_prime_field() {
        let r = PolyRing::new(
            VariableTable::new(["x", "y"]).unwrap(),
            MonomialOrder::Lex,
            PrimeField::new(101).unwrap(),
        )
        .unwrap();
        let gens = ["x^2 + y^2 - 1", "x - y"]
            .iter()
            .map(|g| parse_poly(g, &r).unwrap())
            .collect();
        let gb = buchberger(
            &IdealPresentation::new(&r, gens).unwrap(),
            &GroebnerOptions::default(),
        )
        .unwrap();
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        // -1/2 = 50 mod 101
        assert_eq!(shown, vec!["y^2 + 50", "x - y"]);
    }

    #[test]
    fn unit_ideal_and_zero_ideal() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x*y - 1", "x"]), &GroebnerOptions::default()).unwrap();
        assert!(gb.is_unit_ideal());
        let gb = buchberger(&ideal(&r, &["0"]), &GroebnerOptions::default()).unwrap();
        assert!(gb.is_empty());
        assert_eq!(
            gb.normal_form(&parse_poly("x + 1", &r).unwrap())
                .unwrap()
                .to_string(),
            "x + 1"
        );
    }

    #[test]
    fn step_limit_is_a_hard_error() {
        let r = ring(&["x", "y", "z"]);
        let input = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y + x"]);
        let res = buchberger(&input, &GroebnerOptions { step_limit: 1 });
        assert_eq!(res, Err(Error::StepLimitExceeded { limit: 1 }));
    }
}
