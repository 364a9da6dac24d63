//! Toric ideals of lattice point configurations, and brute-force point sets
//! over prime fields.

use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{kernel_lattice, rank, Field, IntegerMatrix, PrimeField};
use crate::groebner::{
    buchberger, saturate_ideal, GroebnerBasis, GroebnerOptions, IdealPresentation,
};
use crate::polyring::{
    ExponentVector, MonomialOrder, PolyRing, Polynomial, VariableTable, EXPONENT_BOUND,
};

/// Default cap on enumerated points.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Lattice points labelling the ambient variables. Ambient variable `j` is
/// sent to the monomial `u^{points[j]}` in the parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfiguration {
    n: usize,
    vars: Vec<String>,
    params: Vec<String>,
    points: Vec<Vec<u32>>,
}

impl PointConfiguration {
    pub fn new(vars: Vec<String>, params: Vec<String>, points: Vec<Vec<u32>>) -> Result<Self> {
        let c = Self {
            n: params.len(),
            vars,
            params,
            points,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let (n, big_n) = (self.n, self.points.len());
        if self.params.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.params.len(),
            });
        }
        if self.vars.len() != big_n {
            return Err(Error::LengthMismatch {
                expected: big_n,
                got: self.vars.len(),
            });
        }
        if n == 0 || big_n < n {
            return Err(Error::Malformed(format!(
                "need N >= n >= 1, got N = {big_n}, n = {n}"
            )));
        }
        if let Some(bad) = self.points.iter().find(|p| p.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        if self.points.iter().flatten().any(|&e| e >= EXPONENT_BOUND) {
            return Err(Error::ExponentOverflow);
        }
        VariableTable::new(self.vars.iter().cloned())?;
        VariableTable::new(self.params.iter().cloned())?;
        Ok(())
    }

    /// Parses `{"n": .., "vars": [..], "params": [..], "points": [[..], ..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    /// The configuration `e_1, …, e_n` with ambient variables `x1..xn`.
    pub fn standard_basis(n: usize) -> Result<Self> {
        let points = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        Self::new(
            (1..=n).map(|i| format!("x{i}")).collect(),
            (1..=n).map(|i| format!("u{i}")).collect(),
            points,
        )
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Number of ambient variables.
    pub fn ambient_dimension(&self) -> usize {
        self.points.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn ambient_ring<F: Field>(
        &self,
        field: F,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing<F>>> {
        PolyRing::new(VariableTable::new(self.vars.iter().cloned())?, order, field)
    }

    pub fn parameter_ring<F: Field>(&self, field: F) -> Result<Arc<PolyRing<F>>> {
        PolyRing::new(
            VariableTable::new(self.params.iter().cloned())?,
            MonomialOrder::Grevlex,
            field,
        )
    }

    /// Ambient variable `j` ↦ monomial `u^{points[j]}`.
    pub fn parametrization_map(&self) -> Vec<ExponentVector> {
        self.points
            .iter()
            .map(|p| ExponentVector::new(p.clone()).expect("validated"))
            .collect()
    }
}

/// The `n × N` matrix whose columns are the lattice points.
pub fn config_matrix(c: &PointConfiguration) -> IntegerMatrix {
    let columns: Vec<Vec<i64>> = c
        .points
        .iter()
        .map(|p| p.iter().map(|&e| i64::from(e)).collect())
        .collect();
    IntegerMatrix::from_columns(&columns).expect("validated configuration")
}

pub fn codimension(c: &PointConfiguration) -> usize {
    c.ambient_dimension() - rank(&config_matrix(c))
}

/// `x^{u+} − x^{u−}` for each vector of a kernel basis.
pub fn lattice_binomials<F: Field>(
    c: &PointConfiguration,
    ring: &Arc<PolyRing<F>>,
) -> Result<Vec<Polynomial<F>>> {
    let field = ring.field();
    kernel_lattice(&config_matrix(c))
        .vectors
        .iter()
        .map(|u| {
            let part = |positive: bool| -> Result<ExponentVector> {
                let exps = u
                    .iter()
                    .map(|x| {
                        let keep = if positive {
                            x.is_positive()
                        } else {
                            x.is_negative()
                        };
                        if keep {
                            x.abs().to_u32().ok_or(Error::ExponentOverflow)
                        } else {
                            Ok(0)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                ExponentVector::new(exps)
            };
            let plus = Polynomial::monomial(ring, field.one(), part(true)?);
            let minus = Polynomial::monomial(ring, field.one(), part(false)?);
            Ok(plus.sub(&minus))
        })
        .collect()
}

/// Reduced Gröbner basis of the toric ideal: the lattice ideal of the full
/// integer kernel saturated by the product of all ambient variables.
pub fn toric_ideal<F: Field>(
    c: &PointConfiguration,
    field: F,
    order: MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis<F>> {
    let ring = c.ambient_ring(field, order)?;
    let binomials = lattice_binomials(c, &ring)?;
    let lattice = IdealPresentation::new(&ring, binomials)?;
    if lattice.generators().is_empty() {
        return buchberger(&lattice, opts);
    }
    let product = Polynomial::monomial(
        &ring,
        ring.field().one(),
        ExponentVector::new(vec![1; ring.nvars()])?,
    );
    let saturated = saturate_ideal(&lattice, &product, opts)?;
    buchberger(&saturated, opts)
}

/// Exact check that `f` maps to zero under the monomial parametrization.
pub fn vanishes_on_parametrization<F: Field>(
    f: &Polynomial<F>,
    c: &PointConfiguration,
) -> Result<bool> {
    if f.ring().vars().names() != c.vars() {
        return Err(Error::RingMismatch(
            "polynomial is not in the configuration's ambient ring".into(),
        ));
    }
    let target = c.parameter_ring(f.field().clone())?;
    Ok(f.substitute_monomials(&target, &c.parametrization_map())?
        .is_zero())
}

/// Points of `F_p^N`, sorted lexicographically and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePointSet {
    pub p: u64,
    pub dimension: usize,
    pub points: Vec<Vec<u64>>,
}

impl FinitePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(point))
            .is_ok()
    }

    /// One point per line, residues separated by commas.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let line: Vec<String> = pt.iter().map(u64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Points of `self` not in `other`.
    pub fn difference(&self, other: &FinitePointSet) -> Vec<Vec<u64>> {
        self.points
            .iter()
            .filter(|pt| !other.contains(pt))
            .cloned()
            .collect()
    }
}

struct CompiledPoly {
    // (coefficient residue, [(variable, exponent)])
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

fn compile<F: Field>(f: &Polynomial<F>, field: &PrimeField) -> Result<CompiledPoly> {
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let c = f.field().to_prime(&t.coeff, field)?.residue();
            let vars = t
                .monomial
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            Ok((c, vars))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CompiledPoly { terms })
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl CompiledPoly {
    fn vanishes_at(&self, point: &[u64], p: u64) -> bool {
        let mut acc = 0u64;
        for (c, vars) in &self.terms {
            let mut v = *c;
            for &(i, e) in vars {
                v = v * pow_mod(point[i], u64::from(e), p) % p;
                if v == 0 {
                    break;
                }
            }
            acc = (acc + v) % p;
        }
        acc == 0
    }
}

/// Every point of `F_p^N` (N = variables of `ring`) where all generators
/// vanish, by exhaustive enumeration.
pub fn solution_set<F: Field>(
    ring: &Arc<PolyRing<F>>,
    gens: &[Polynomial<F>],
    p: &PrimeField,
    cap: u64,
) -> Result<FinitePointSet> {
    let dim = ring.nvars();
    let q = p.modulus();
    let total = (q as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total > u128::from(cap) {
        return Err(Error::CapExceeded { points: total, cap });
    }
    if gens.iter().any(|g| **g.ring() != **ring) {
        return Err(Error::RingMismatch("generators must share the ring".into()));
    }
    let compiled = gens
        .iter()
        .map(|g| compile(g, p))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<Vec<u64>> = (0..total as u64)
        .into_par_iter()
        .filter_map(|mut index| {
            let mut pt = vec![0u64; dim];
            for slot in pt.iter_mut().rev() {
                *slot = index % q;
                index /= q;
            }
            compiled.iter().all(|g| g.vanishes_at(&pt, q)).then_some(pt)
        })
        .collect();
    Ok(FinitePointSet {
        p: q,
        dimension: dim,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Integer, Rationals};
    use crate::polyring::parse_poly;
    use num_traits::Zero;

    fn config(points: &[&[u32]]) -> PointConfiguration {
        let n = points[0].len();
        let big_n = points.len();
        let vars = match (n, big_n) {
            (2, 3) => vec!["x1", "x2", "y1"],
            (3, 5) => vec!["x1", "x2", "x3", "y1", "y2"],
            _ => panic!("test helper"),
        };
        PointConfiguration::new(
            vars.into_iter().map(String::from).collect(),
            (1..=n).map(|i| format!("u{i}")).collect(),
            points.iter().map(|p| p.to_vec()).collect(),
        )
        .unwrap()
    }

    fn n2() -> PointConfiguration {
        config(&[&[1, 0], &[0, 6], &[1, 1]])
    }

    fn n3() -> PointConfiguration {
        config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 6], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn matrix_examples() {
        let m = config_matrix(&n2());
        assert_eq!(
            m,
            IntegerMatrix::from_i64(&[vec![1, 0, 1], vec![0, 6, 1]]).unwrap()
        );
        let m = config_matrix(&n3());
        assert_eq!(
            m.column(2),
            vec![Integer::from(0), Integer::from(0), Integer::from(6)]
        );
        assert_eq!(
            m.column(4),
            vec![Integer::from(0), Integer::from(1), Integer::from(1)]
        );
        let id = PointConfiguration::standard_basis(4).unwrap();
        assert_eq!(config_matrix(&id), IntegerMatrix::identity(4));
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(codimension(&n2()), 1);
        assert_eq!(codimension(&n3()), 2);
        assert_eq!(
            codimension(&PointConfiguration::standard_basis(3).unwrap()),
            0
        );
    }

    #[test]
    fn toric_ideal_examples() {
        let opts = GroebnerOptions::default();
        let gb = toric_ideal(&n2(), Rationals, MonomialOrder::Grevlex, &opts).unwrap();
        let shown: Vec<String> = gb.elements().iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["x1^6*x2 - y1^6"]);

        let id = PointConfiguration::standard_basis(3).unwrap();
        assert!(toric_ideal(&id, Rationals, MonomialOrder::Grevlex, &opts)
            .unwrap()
            .is_empty());

        let gb = toric_ideal(&n3(), Rationals, MonomialOrder::Grevlex, &opts).unwrap();
        for f in [
            "y1^6 - x1^6*x3",
            "y2^6 - x2^6*x3",
            "y1^5*y2 - x1^5*x2*x3",
            "x2*y1 - x1*y2",
        ] {
            assert!(
                gb.is_member(&parse_poly(f, gb.ring()).unwrap()).unwrap(),
                "{f}"
            );
        }
        for g in gb.elements() {
            assert_eq!(g.len(), 2);
            assert!(vanishes_on_parametrization(g, &n3()).unwrap());
        }
    }

    #[test]
    fn vanishing_examples() {
        let r = n2()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        assert!(
            vanishes_on_parametrization(&parse_poly("y1^6 - x1^6*x2", &r).unwrap(), &n2()).unwrap()
        );
        assert!(!vanishes_on_parametrization(&parse_poly("x1", &r).unwrap(), &n2()).unwrap());
        let r = n3()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        assert!(
            vanishes_on_parametrization(&parse_poly("x2*y1 - x1*y2", &r).unwrap(), &n3()).unwrap()
        );
        assert!(vanishes_on_parametrization(&parse_poly("x1", &r).unwrap(), &n2()).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let r = n3()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let all = solution_set(&r, &[], &f2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(all.len(), 32);
        assert_eq!(all.points[1], vec![0, 0, 0, 0, 1]);

        let r = n2()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        let f = parse_poly("y1^6 - x1^6*x2", &r).unwrap();
        let s = solution_set(&r, std::slice::from_ref(&f), &f2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.report(), "0,0,0\n0,1,0\n1,0,0\n1,1,1\n");
        let f7 = PrimeField::new(7).unwrap();
        let s = solution_set(&r, &[f], &f7, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(s.len(), 49);
    }

    #[test]
    fn cap_is_enforced() {
        let r = n3()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(
            solution_set(&r, &[], &f7, 1000),
            Err(Error::CapExceeded {
                points: 16807,
                cap: 1000
            })
        );
    }

    #[test]
    fn configuration_json() {
        let text = r#"{"n": 2, "vars": ["x1","x2","y1"], "params": ["u1","u2"],
                       "points": [[1,0],[0,6],[1,1]]}"#;
        let c = PointConfiguration::from_json(text).unwrap();
        assert_eq!(c, n2());
        assert_eq!(PointConfiguration::from_json(&c.to_json()).unwrap(), c);
        let bad = r#"{"n": 2, "vars": ["x1","x2"], "params": ["u1","u2"], "points": [[1,0],[0,6],[1,1]]}"#;
        assert!(PointConfiguration::from_json(bad).is_err());
        let bad = r#"{"n": 3, "vars": ["x1","x2","y1"], "params": ["u1","u2"], "points": [[1,0],[0,6],[1,1]]}"#;
        assert!(PointConfiguration::from_json(bad).is_err());
        let bad = r#"{"n": 2, "vars": ["x1","x2","y1"], "params": ["u1","u2"], "points": [[1,0],[0,6],[1]]}"#;
        assert!(PointConfiguration::from_json(bad).is_err());
    }

    #[test]
    fn kernel_binomials_are_differences_of_monomials() {
        let r = n3()
            .ambient_ring(Rationals, MonomialOrder::Grevlex)
            .unwrap();
        let bins = lattice_binomials(&n3(), &r).unwrap();
        assert_eq!(bins.len(), 2);
        for b in &bins {
            assert!(vanishes_on_parametrization(b, &n3()).unwrap());
            assert!(b.terms().iter().all(|t| !t.coeff.is_zero()));
        }
    }
}
