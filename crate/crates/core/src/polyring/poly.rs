use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::ExponentVector;
use super::ring::PolyRing;
use crate::error::{Error, Result};
use crate::exactmath::{Field, PrimeField};

#[derive(Debug, Clone, PartialEq)]
pub struct Term<F: Field> {
    pub coeff: F::Elem,
    pub monomial: ExponentVector,
}

/// Sparse polynomial: nonzero terms sorted strictly descending under the
/// ring's order. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[allow(clippy::len_without_is_empty)]
impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        Self::monomial(ring, c, ExponentVector::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<PolyRing<F>>, index: usize) -> Self {
        Self::monomial(
            ring,
            ring.field().one(),
            ExponentVector::variable(ring.nvars(), index),
        )
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, c: F::Elem, monomial: ExponentVector) -> Self {
        assert_eq!(monomial.len(), ring.nvars(), "monomial length");
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, monomial }]
        };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(
        ring: &Arc<PolyRing<F>>,
        terms: impl IntoIterator<Item = (F::Elem, ExponentVector)>,
    ) -> Result<Self> {
        let field = ring.field();
        let order = ring.order();
        let mut raw: Vec<Term<F>> = Vec::new();
        for (coeff, monomial) in terms {
            if monomial.len() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: monomial.len(),
                });
            }
            raw.push(Term { coeff, monomial });
        }
        raw.sort_by(|a, b| order.cmp_unchecked(&b.monomial, &a.monomial));
        let mut terms: Vec<Term<F>> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !field.is_zero(&t.coeff));
        Ok(Self {
            ring: ring.clone(),
            terms,
        })
    }

    /// Wraps terms already sorted strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(
                |w| ring.order().cmp_unchecked(&w[0].monomial, &w[1].monomial) == Ordering::Greater
            ));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term<F>> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&ExponentVector> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> F::Elem {
        self.terms
            .last()
            .filter(|t| t.monomial.is_one())
            .map_or_else(|| self.field().zero(), |t| t.coeff.clone())
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.monomial.degree())
            .max()
            .unwrap_or(0)
    }

    /// True if variable `index` occurs in some term.
    pub fn involves(&self, index: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.get(index) > 0)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(self.same_ring(other), "polynomials from different rings");
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.assert_same_ring(other);
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let map_other = |c: &F::Elem| {
            if negate_other {
                field.neg(c)
            } else {
                c.clone()
            }
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp_unchecked(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: map_other(&b.coeff),
                        monomial: b.monomial.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        field.sub(&a.coeff, &b.coeff)
                    } else {
                        field.add(&a.coeff, &b.coeff)
                    };
                    if !field.is_zero(&c) {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|b| Term {
            coeff: map_other(&b.coeff),
            monomial: b.monomial.clone(),
        }));
        Self {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// `c · m · self`. Term order is preserved since the order is multiplicative.
    pub fn mul_term(&self, c: &F::Elem, m: &ExponentVector) -> Result<Self> {
        let field = self.field();
        if field.is_zero(c) {
            return Ok(Self::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: field.mul(&t.coeff, c),
                    monomial: t.monomial.mul(m)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.assert_same_ring(other);
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(&self.ring);
        for t in &small.terms {
            acc = acc.add(&large.mul_term(&t.coeff, &t.monomial)?);
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !self.field().is_one(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let field = self.field();
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v = field.mul(&v, &field.pow(x, u64::from(e)));
                }
            }
            acc = field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Image under the ring map sending variable `i` to the monomial `map[i]`
    /// of `target`.
    pub fn substitute_monomials(
        &self,
        target: &Arc<PolyRing<F>>,
        map: &[ExponentVector],
    ) -> Result<Self> {
        if map.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: map.len(),
            });
        }
        if let Some(bad) = map.iter().find(|m| m.len() != target.nvars()) {
            return Err(Error::LengthMismatch {
                expected: target.nvars(),
                got: bad.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut image = ExponentVector::one(target.nvars());
                for (m, &e) in map.iter().zip(t.monomial.exponents()) {
                    if e > 0 {
                        image = image.mul(&m.pow(e)?)?;
                    }
                }
                Ok((t.coeff.clone(), image))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(target, terms)
    }

    /// Renames variables into `target`: variable `i` becomes `var_map[i]`.
    /// Terms are re-sorted under the target order.
    pub fn embed(&self, target: &Arc<PolyRing<F>>, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: var_map.len(),
            });
        }
        let terms = self.terms.iter().map(|t| {
            let mut e = vec![0u32; target.nvars()];
            for (i, &exp) in t.monomial.exponents().iter().enumerate() {
                e[var_map[i]] += exp;
            }
            (
                t.coeff.clone(),
                ExponentVector::new(e).expect("bounded exponents"),
            )
        });
        Self::from_terms(target, terms)
    }

    /// Same polynomial in a ring that differs only by term order.
    pub fn reorder(&self, target: &Arc<PolyRing<F>>) -> Result<Self> {
        if target.vars() != self.ring.vars() || target.field() != self.field() {
            return Err(Error::RingMismatch(
                "reorder requires the same variables and field".into(),
            ));
        }
        let identity: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &identity)
    }

    /// Coefficients reduced into `F_p`; `target` must have the same variables.
    pub fn to_prime(&self, target: &Arc<PolyRing<PrimeField>>) -> Result<Polynomial<PrimeField>> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch(
                "reduction mod p needs the same variables".into(),
            ));
        }
        let p = target.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((self.field().to_prime(&t.coeff, p)?, t.monomial.clone())))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(target, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rationals;
    use crate::polyring::{parse_poly, MonomialOrder, VariableTable};

    fn ring_q(names: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(
            VariableTable::new(names.iter().copied()).unwrap(),
            MonomialOrder::Grevlex,
            Rationals,
        )
        .unwrap()
    }

    fn ring_f7(names: &[&str]) -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            VariableTable::new(names.iter().copied()).unwrap(),
            MonomialOrder::Grevlex,
            PrimeField::new(7).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let r = ring_f7(&["x1", "x2", "y1"]);
        let f = parse_poly("y1^6 - x1^6*x2 + 3", &r).unwrap();
        let zero = vec![r.field().zero(); 3];
        assert_eq!(f.evaluate(&zero).unwrap(), r.field().element(3));

        let f = parse_poly("y1^6 - x1^6*x2", &r).unwrap();
        let p: Vec<_> = [2, 1, 3].iter().map(|&v| r.field().element(v)).collect();
        assert!(f.evaluate(&p).unwrap().is_zero());

        let r = ring_f7(&["x1", "x2", "x3", "y1", "y2"]);
        let g = parse_poly("y1^5*y2 - x1^5*x2*x3", &r).unwrap();
        let p: Vec<_> = [1, 1, 1, 1, 2]
            .iter()
            .map(|&v| r.field().element(v))
            .collect();
        assert_eq!(g.evaluate(&p).unwrap(), r.field().one());
        assert!(g.evaluate(&p[..4]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let amb = ring_q(&["x1", "x2", "y1"]);
        let par = ring_q(&["u1", "u2"]);
        let f = parse_poly("y1^6 - x1^6*x2", &amb).unwrap();

        let ev = |e: &[u32]| ExponentVector::new(e.to_vec()).unwrap();
        let map = vec![ev(&[1, 0]), ev(&[0, 6]), ev(&[1, 1])];
        assert!(f.substitute_monomials(&par, &map).unwrap().is_zero());

        let id = vec![ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])];
        assert_eq!(f.substitute_monomials(&amb, &id).unwrap(), f);

        let amb = ring_q(&["x1", "x2", "x3", "y1", "y2"]);
        let par = ring_q(&["u1", "u2", "u3"]);
        let f = parse_poly("x2*y1 - x1*y2", &amb).unwrap();
        let map = vec![
            ev(&[1, 0, 0]),
            ev(&[0, 1, 0]),
            ev(&[0, 0, 6]),
            ev(&[1, 0, 1]),
            ev(&[0, 1, 1]),
        ];
        assert!(f.substitute_monomials(&par, &map).unwrap().is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring_q(&["x", "y"]);
        let f = parse_poly("x + y", &r).unwrap();
        let g = parse_poly("x - y", &r).unwrap();
        assert_eq!(f.mul(&g).unwrap(), parse_poly("x^2 - y^2", &r).unwrap());
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.pow(2).unwrap().to_string(), "x^2 + 2*x*y + y^2");
        let h = parse_poly("3*x - 6", &r).unwrap();
        assert_eq!(h.monic().to_string(), "x - 2");
        assert_eq!(h.constant_term(), Rationals.from_i64(-6));
    }

    #[test]
    fn embed_moves_variables() {
        let small = ring_q(&["x", "y"]);
        let big = ring_q(&["t", "x", "y"]);
        let f = parse_poly("x^2*y - y", &small).unwrap();
        let g = f.embed(&big, &[1, 2]).unwrap();
        assert_eq!(g, parse_poly("x^2*y - y", &big).unwrap());
        assert!(!g.involves(0));
    }
}
