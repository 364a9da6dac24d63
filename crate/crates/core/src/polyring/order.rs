use std::cmp::Ordering;

use super::monomial::ExponentVector;
use crate::error::{Error, Result};

/// A term order. Variable `0` of the table is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Grevlex on the front block, ties broken by grevlex on the rest.
    /// `front[i]` marks variable `i` as belonging to the front block.
    Block {
        front: Vec<bool>,
    },
}

impl MonomialOrder {
    pub fn block(nvars: usize, front: &[usize]) -> Self {
        let mut mask = vec![false; nvars];
        for &i in front {
            mask[i] = true;
        }
        MonomialOrder::Block { front: mask }
    }

    /// Comparison used in hot loops; lengths are assumed equal.
    pub(crate) fn cmp_unchecked(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.revlex_tail(b, None)),
            MonomialOrder::Block { front } => {
                let (mut fa, mut fb, mut ba, mut bb) = (0u64, 0u64, 0u64, 0u64);
                for (i, &in_front) in front.iter().enumerate() {
                    let (x, y) = (u64::from(a.get(i)), u64::from(b.get(i)));
                    if in_front {
                        fa += x;
                        fb += y;
                    } else {
                        ba += x;
                        bb += y;
                    }
                }
                fa.cmp(&fb)
                    .then_with(|| a.revlex_tail(b, Some((front, true))))
                    .then_with(|| ba.cmp(&bb))
                    .then_with(|| a.revlex_tail(b, Some((front, false))))
            }
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        a.check_len(b)?;
        if let MonomialOrder::Block { front } = self {
            if front.len() != a.len() {
                return Err(Error::LengthMismatch {
                    expected: front.len(),
                    got: a.len(),
                });
            }
        }
        Ok(self.cmp_unchecked(a, b))
    }
}
