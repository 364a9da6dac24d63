//! Set-theoretic cut-out certification: candidates ⊆ I(V) by normal forms,
//! I(V) ⊆ rad(candidates) by Rabinowitsch, and finite-field point counts.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Field, PrimeField};
use crate::groebner::{radical_member, GroebnerOptions, IdealPresentation};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::toric::{solution_set, toric_ideal, PointConfiguration};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForwardFailure {
    pub index: usize,
    pub candidate: String,
    pub normal_form: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReverseFailure {
    pub index: usize,
    pub generator: String,
    pub note: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub toric_ideal: u64,
    pub forward: u64,
    pub reverse: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub forward_failures: Vec<ForwardFailure>,
    pub reverse_failures: Vec<ReverseFailure>,
    pub field: String,
    pub timings_ms: Timings,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    /// Equality ignoring timings.
    pub fn same_outcome(&self, other: &Verdict) -> bool {
        self.holds == other.holds
            && self.forward_failures == other.forward_failures
            && self.reverse_failures == other.reverse_failures
            && self.field == other.field
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Decides whether `candidates` cut out the toric variety of `c` over the
/// algebraic closure of `field`.
pub fn verify_cutout<F: Field>(
    c: &PointConfiguration,
    candidates: &[Polynomial<F>],
    field: F,
    order: MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<Verdict> {
    let descriptor = field.descriptor();
    let ring = c.ambient_ring(field, order.clone())?;
    if candidates.iter().any(|g| **g.ring() != *ring) {
        return Err(Error::RingMismatch(
            "candidates must lie in the configuration's ambient ring".into(),
        ));
    }
    let mut timings = Timings::default();

    let start = Instant::now();
    let gb =
        toric_ideal(c, ring.field().clone(), order, opts).map_err(|e| e.in_phase("toric-ideal"))?;
    timings.toric_ideal = elapsed_ms(start);

    let start = Instant::now();
    let mut forward_failures = Vec::new();
    for (index, f) in candidates.iter().enumerate() {
        let nf = gb.normal_form(f).map_err(|e| e.in_phase("forward"))?;
        if !nf.is_zero() {
            forward_failures.push(ForwardFailure {
                index,
                candidate: f.to_string(),
                normal_form: nf.to_string(),
            });
        }
    }
    timings.forward = elapsed_ms(start);

    let start = Instant::now();
    let ideal = IdealPresentation::new(&ring, candidates.to_vec())?;
    let members: Vec<bool> = gb
        .elements()
        .par_iter()
        .map(|g| radical_member(g, &ideal, opts))
        .collect::<Result<_>>()
        .map_err(|e| e.in_phase("reverse"))?;
    let reverse_failures: Vec<ReverseFailure> = gb
        .elements()
        .iter()
        .zip(members)
        .enumerate()
        .filter(|(_, (_, member))| !member)
        .map(|(index, (g, _))| ReverseFailure {
            index,
            generator: g.to_string(),
            note: "not in the radical of the candidate ideal".into(),
        })
        .collect();
    timings.reverse = elapsed_ms(start);

    Ok(Verdict {
        holds: forward_failures.is_empty() && reverse_failures.is_empty(),
        forward_failures,
        reverse_failures,
        field: descriptor,
        timings_ms: timings,
    })
}

const SEPARATING_SHOWN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub p: u64,
    pub candidate_count: usize,
    pub variety_count: usize,
    /// Up to ten points where the candidates vanish but the variety does not.
    pub separating: Vec<Vec<u64>>,
    pub equal: bool,
}

/// Compares the `F_p`-points of the candidates with those of the toric ideal.
pub fn finite_field_crosscheck<F: Field>(
    c: &PointConfiguration,
    candidates: &[Polynomial<F>],
    p: &PrimeField,
    cap: u64,
    opts: &GroebnerOptions,
) -> Result<CrossCheckReport> {
    let ring = c.ambient_ring(*p, MonomialOrder::Grevlex)?;
    let reduced = candidates
        .iter()
        .map(|g| g.to_prime(&ring))
        .collect::<Result<Vec<_>>>()?;
    let cand_points = solution_set(&ring, &reduced, p, cap)?;
    let gb = toric_ideal(c, *p, MonomialOrder::Grevlex, opts)?;
    let variety_points = solution_set(&ring, gb.elements(), p, cap)?;
    let mut separating = cand_points.difference(&variety_points);
    separating.truncate(SEPARATING_SHOWN);
    Ok(CrossCheckReport {
        p: p.modulus(),
        candidate_count: cand_points.len(),
        variety_count: variety_points.len(),
        separating,
        equal: cand_points == variety_points,
    })
}
