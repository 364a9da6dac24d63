//! The family of toric varieties in `K^{2n-1}` parametrized by
//! `(u_1, …, u_{n-1}, u_n^d, u_1^{a_1} u_n, …, u_{n-1}^{a_{n-1}} u_n)`.
//!
//! Ambient variables are `x1..xn, y1..y{n-1}` in that order; parameters are
//! `u1..un`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{dth_roots, Field, PrimeField, PrimeFieldElement};
use crate::polyring::{ExponentVector, PolyRing, Polynomial, EXPONENT_BOUND};
use crate::toric::PointConfiguration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    n: usize,
    d: u32,
    a: Vec<u32>,
    strict: bool,
    primes: Option<(u64, u64)>,
    warning: Option<String>,
}

/// The two smallest distinct prime divisors of `d`, if it has two.
fn two_smallest_prime_divisors(mut d: u64) -> Option<(u64, u64)> {
    let mut found = Vec::new();
    let mut q = 2;
    while q * q <= d && found.len() < 2 {
        if d.is_multiple_of(q) {
            found.push(q);
            while d.is_multiple_of(q) {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 && found.len() < 2 {
        found.push(d);
    }
    (found.len() >= 2).then(|| (found[0], found[1]))
}

/// Validates `(n, d, a)`. In strict mode `d` must have two distinct prime
/// divisors; otherwise a missing divisor is recorded as a warning.
pub fn make_family(n: usize, d: u32, a: Vec<u32>, strict: bool) -> Result<FamilyParams> {
    if n < 2 {
        return Err(Error::Malformed(format!("n must be at least 2, got {n}")));
    }
    if d < 1 {
        return Err(Error::Malformed("d must be at least 1".into()));
    }
    if a.len() != n - 1 {
        return Err(Error::Malformed(format!(
            "expected {} values of a, got {}",
            n - 1,
            a.len()
        )));
    }
    if a.iter().any(|&ai| ai < 1) {
        return Err(Error::Malformed("every a_i must be at least 1".into()));
    }
    let bound = u64::from(EXPONENT_BOUND);
    if u64::from(d) >= bound || a.iter().any(|&ai| u64::from(ai) * u64::from(d) >= bound) {
        return Err(Error::ExponentOverflow);
    }
    let primes = two_smallest_prime_divisors(u64::from(d));
    let mut warning = None;
    if primes.is_none() {
        let msg = format!("d = {d} is not divisible by two distinct primes");
        if strict {
            return Err(Error::Hypothesis(msg));
        }
        warning = Some(msg);
    }
    Ok(FamilyParams {
        n,
        d,
        a,
        strict,
        primes,
        warning,
    })
}

/// Parses `n=<int>,d=<int>,a=<int>[,<int>...]`.
pub fn parse_family(text: &str, strict: bool) -> Result<FamilyParams> {
    let (mut n, mut d, mut a): (Option<usize>, Option<u32>, Option<Vec<u32>>) = (None, None, None);
    let mut in_a = false;
    let bad = |msg: String| Error::Malformed(format!("family `{text}`: {msg}"));
    for token in text.split(',').map(str::trim) {
        let (key, value) = match token.split_once('=') {
            Some((k, v)) => {
                in_a = false;
                (Some(k.trim()), v.trim())
            }
            None if in_a => (None, token),
            None => return Err(bad(format!("unexpected `{token}`"))),
        };
        let num: u64 = value
            .parse()
            .map_err(|_| bad(format!("`{value}` is not a nonnegative integer")))?;
        let small = |v: u64| u32::try_from(v).map_err(|_| Error::ExponentOverflow);
        match key {
            Some("n") => n = Some(num as usize),
            Some("d") => d = Some(small(num)?),
            Some("a") => {
                a = Some(vec![small(num)?]);
                in_a = true;
            }
            None => a.as_mut().expect("inside a").push(small(num)?),
            Some(other) => return Err(bad(format!("unknown key `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| bad("missing n".into()))?;
    let d = d.ok_or_else(|| bad("missing d".into()))?;
    let a = a.ok_or_else(|| bad("missing a".into()))?;
    make_family(n, d, a, strict)
}

impl FamilyParams {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn primes(&self) -> Option<(u64, u64)> {
        self.primes
    }

    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    /// Ambient dimension `2n − 1`.
    pub fn ambient_dimension(&self) -> usize {
        2 * self.n - 1
    }

    pub fn ambient_names(&self) -> Vec<String> {
        (1..=self.n)
            .map(|i| format!("x{i}"))
            .chain((1..self.n).map(|i| format!("y{i}")))
            .collect()
    }

    fn x(&self, i: usize) -> usize {
        i - 1
    }

    fn y(&self, i: usize) -> usize {
        self.n + i - 1
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "n={},d={},a={}", self.n, self.d, a.join(","))
    }
}

/// Lattice points `e_1..e_{n-1}, d·e_n, a_1 e_1 + e_n, …, a_{n-1} e_{n-1} + e_n`.
pub fn family_config(p: &FamilyParams) -> PointConfiguration {
    let n = p.n;
    let unit = |i: usize, scale: u32| -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = scale;
        v
    };
    let mut points: Vec<Vec<u32>> = (0..n - 1).map(|i| unit(i, 1)).collect();
    points.push(unit(n - 1, p.d));
    for (i, &ai) in p.a.iter().enumerate() {
        let mut v = unit(i, ai);
        v[n - 1] = 1;
        points.push(v);
    }
    PointConfiguration::new(
        p.ambient_names(),
        (1..=n).map(|i| format!("u{i}")).collect(),
        points,
    )
    .expect("family configuration is valid")
}

/// The parametrization evaluated at `u`.
pub fn phi<F: Field>(p: &FamilyParams, field: &F, u: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if u.len() != p.n {
        return Err(Error::LengthMismatch {
            expected: p.n,
            got: u.len(),
        });
    }
    let un = &u[p.n - 1];
    let mut out: Vec<F::Elem> = u[..p.n - 1].to_vec();
    out.push(field.pow(un, u64::from(p.d)));
    for (ui, &ai) in u.iter().zip(&p.a) {
        out.push(field.mul(&field.pow(ui, u64::from(ai)), un));
    }
    Ok(out)
}

fn binomial<F: Field>(
    ring: &Arc<PolyRing<F>>,
    plus: &[(usize, u32)],
    minus: &[(usize, u32)],
) -> Result<Polynomial<F>> {
    let monomial = |factors: &[(usize, u32)]| -> Result<Polynomial<F>> {
        let mut e = vec![0u32; ring.nvars()];
        for &(i, k) in factors {
            e[i] += k;
        }
        Ok(Polynomial::monomial(
            ring,
            ring.field().one(),
            ExponentVector::new(e)?,
        ))
    };
    Ok(monomial(plus)?.sub(&monomial(minus)?))
}

fn check_family_ring<F: Field>(p: &FamilyParams, ring: &Arc<PolyRing<F>>) -> Result<()> {
    if ring.vars().names() != p.ambient_names().as_slice() {
        return Err(Error::RingMismatch(format!(
            "expected variables {}",
            p.ambient_names().join(",")
        )));
    }
    Ok(())
}

/// `y_i^d − x_i^{a_i d} x_n` for `i = 1..n−1`.
pub fn power_binomials<F: Field>(
    p: &FamilyParams,
    ring: &Arc<PolyRing<F>>,
) -> Result<Vec<Polynomial<F>>> {
    check_family_ring(p, ring)?;
    (1..p.n)
        .map(|i| {
            binomial(
                ring,
                &[(p.y(i), p.d)],
                &[(p.x(i), p.a[i - 1] * p.d), (p.x(p.n), 1)],
            )
        })
        .collect()
}

/// The explicit equations known to cut out the variety: `F` for `n = 2`;
/// `F1, F2, G` for `n = 3`. Refused for `n ≥ 4`, where none are known.
pub fn candidate_binomials<F: Field>(
    p: &FamilyParams,
    ring: &Arc<PolyRing<F>>,
) -> Result<Vec<Polynomial<F>>> {
    check_family_ring(p, ring)?;
    match p.n {
        2 => power_binomials(p, ring),
        3 => {
            let mut gens = power_binomials(p, ring)?;
            let d = p.d;
            // G = y1^{d-1} y2 − x1^{a1(d-1)} x2^{a2} x3
            gens.push(binomial(
                ring,
                &[(p.y(1), d - 1), (p.y(2), 1)],
                &[(p.x(1), p.a[0] * (d - 1)), (p.x(2), p.a[1]), (p.x(3), 1)],
            )?);
            Ok(gens)
        }
        n => Err(Error::NotProvided(format!(
            "no explicit defining binomials are known for n = {n} (open problem for n >= 4)"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbsenceReason {
    /// Some `y_i^d = x_i^{a_i d} x_n` fails, or `x_n = 0` with a nonzero `y_i`.
    EquationViolated,
    /// `x_n` has no `d`-th root in the field.
    NoDthRoot,
    /// No `d`-th root `r` of `x_n` gives `y_i = x_i^{a_i} r` for all `i`.
    RootsOfUnityMismatch,
}

impl fmt::Display for AbsenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::EquationViolated => "equation-violated",
            Self::NoDthRoot => "no-dth-root",
            Self::RootsOfUnityMismatch => "roots-of-unity-mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessResult {
    Witness(Vec<PrimeFieldElement>),
    Absent(AbsenceReason),
}

/// Constructs `u` with `φ(u) = w` over `F_p`: `u_i = x_i` for `i < n`; if
/// `x_n = 0` every `y_i` must vanish and `u_n = 0`; otherwise `u_n` ranges
/// over the `d`-th roots of `x_n` until `y_i = x_i^{a_i} u_n` for every `i`.
/// Returns the first step that fails when no witness exists.
pub fn reconstruct_witness(
    p: &FamilyParams,
    field: &PrimeField,
    w: &[PrimeFieldElement],
) -> Result<WitnessResult> {
    let n = p.n;
    if w.len() != p.ambient_dimension() {
        return Err(Error::LengthMismatch {
            expected: p.ambient_dimension(),
            got: w.len(),
        });
    }
    if w.iter().any(|c| c.modulus() != field.modulus()) {
        return Err(Error::IncompatibleField(
            "point residues use another modulus".into(),
        ));
    }
    let d = u64::from(p.d);
    let xs = &w[..n - 1];
    let xn = w[n - 1];
    let ys = &w[n..];

    for ((x, y), &ai) in xs.iter().zip(ys).zip(&p.a) {
        if y.pow(d) != x.pow(u64::from(ai) * d) * xn {
            return Ok(WitnessResult::Absent(AbsenceReason::EquationViolated));
        }
    }
    let mut u: Vec<PrimeFieldElement> = xs.to_vec();
    if xn.is_zero() {
        if ys.iter().any(|y| !y.is_zero()) {
            return Ok(WitnessResult::Absent(AbsenceReason::EquationViolated));
        }
        u.push(field.zero());
        debug_assert_eq!(phi(p, field, &u)?, w);
        return Ok(WitnessResult::Witness(u));
    }
    let roots = dth_roots(xn, d);
    if roots.is_empty() {
        return Ok(WitnessResult::Absent(AbsenceReason::NoDthRoot));
    }
    let found = roots.into_iter().find(|&r| {
        xs.iter()
            .zip(ys)
            .zip(&p.a)
            .all(|((x, y), &ai)| *y == x.pow(u64::from(ai)) * r)
    });
    match found {
        Some(r) => {
            u.push(r);
            debug_assert_eq!(phi(p, field, &u)?, w);
            Ok(WitnessResult::Witness(u))
        }
        None => Ok(WitnessResult::Absent(AbsenceReason::RootsOfUnityMismatch)),
    }
}

/// Arithmetical-rank bounds reported for the family (not computed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBounds {
    #[serde(rename = "N")]
    pub ambient_dimension: usize,
    pub codim: usize,
    /// `N − 2`, from the étale-cohomological lower bound.
    pub lower: usize,
    /// `N`, the Eisenbud–Evans bound.
    pub upper: usize,
    /// Exact value where the lower bound is attained (`n ∈ {2, 3}`).
    pub ara_known: Option<usize>,
}

pub fn rank_bounds(p: &FamilyParams) -> Result<RankBounds> {
    if p.primes.is_none() {
        return Err(Error::Hypothesis(format!(
            "bounds need d divisible by two distinct primes, got d = {}",
            p.d
        )));
    }
    let big_n = p.ambient_dimension();
    Ok(RankBounds {
        ambient_dimension: big_n,
        codim: p.n - 1,
        lower: big_n - 2,
        upper: big_n,
        ara_known: matches!(p.n, 2 | 3).then_some(big_n - 2),
    })
}
