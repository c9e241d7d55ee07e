//! The characteristic-2 Mullineux analogue `M(λ)`: the rim algorithm, the
//! odd-reflection oracle, and the `χ^μ`-twisted general form.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::weights::{GlpLabel, ReflectionTable, Weight};

/// A finite sequence of GL(P) labels, canonically without trailing trivials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MSequence {
    pub labels: Vec<GlpLabel>,
}

impl MSequence {
    pub fn new(labels: Vec<GlpLabel>) -> Self {
        MSequence { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.labels.iter().map(GlpLabel::degree).sum()
    }

    fn strip_trailing_trivial(mut self) -> Self {
        while self.labels.last().is_some_and(GlpLabel::is_trivial) {
            self.labels.pop();
        }
        self
    }

    pub fn pretty(&self) -> String {
        let t: Vec<String> = self.labels.iter().map(GlpLabel::pretty).collect();
        format!("({})", t.join(", "))
    }
}

impl fmt::Display for MSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.labels.iter().map(GlpLabel::to_string).collect();
        write!(f, "{}", t.join(","))
    }
}

impl fmt::Debug for MSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// The label attached to a 4-segment union of size `4q + r` removed from a
/// partition with first part `first`.
fn segment_label(size: usize, first: usize) -> GlpLabel {
    let q = (size / 4) as i64;
    let odd = first % 2 == 1;
    let (r, xi) = match size % 4 {
        0 => (0, odd),
        1 => (1, !odd),
        2 => (2, false),
        _ => (3, !odd),
    };
    GlpLabel::raw(q, r, xi)
}

/// `M(λ)` by iterated 4-segment removal.
pub fn m_rim(lambda: &Partition) -> Result<MSequence> {
    let chain = lambda.j_chain()?;
    let labels = chain
        .windows(2)
        .map(|w| segment_label(w[0].size() - w[1].size(), w[0].first()))
        .collect();
    Ok(MSequence { labels })
}

/// The number of trivial labels used to embed `λ` for the reflection oracle.
pub fn oracle_width(lambda: &Partition) -> usize {
    (lambda.size() + 1).div_ceil(4)
}

/// `M(λ)` as the `𝐓`-part of the Borel-change image of `λ|𝟙ⁿ`.
pub fn m_reflect(lambda: &Partition) -> Result<MSequence> {
    m_reflect_with(lambda, &ReflectionTable::corrected(), oracle_width(lambda))
}

/// [`m_reflect`] with an explicit table and embedding width. Fails with
/// [`Error::ResidualWeight`] if the chain leaves a nonzero integer part.
pub fn m_reflect_with(lambda: &Partition, table: &ReflectionTable, n: usize) -> Result<MSequence> {
    if !lambda.is_two_restricted() {
        return Err(Error::NotTwoRestricted(lambda.to_string()));
    }
    let start = Weight::new(
        lambda.parts().iter().map(|&p| p as i64).collect(),
        vec![GlpLabel::TRIVIAL; n],
    );
    let end = table.borel_chain(&start);
    if end.zpart.iter().any(|&z| z != 0) {
        return Err(Error::ResidualWeight(end.zpart));
    }
    Ok(MSequence { labels: end.tpart }.strip_trailing_trivial())
}

/// Pads `Λ` and `μ` to length `n` and multiplies componentwise by `χ^{μ_j}`.
pub fn chi_mul(big_lambda: &MSequence, mu: &Partition, n: usize) -> Result<MSequence> {
    if big_lambda.len() > n {
        return Err(Error::Length(format!(
            "label sequence of length {} exceeds n = {n}",
            big_lambda.len()
        )));
    }
    if mu.len() > n {
        return Err(Error::Length(format!("μ = {mu} has more than n = {n} parts")));
    }
    let labels = (0..n)
        .map(|j| {
            let base = big_lambda.labels.get(j).copied().unwrap_or(GlpLabel::TRIVIAL);
            base.chi_mul(mu.part(j) as i64)
        })
        .collect();
    Ok(MSequence { labels })
}

/// `λ* | χ^μ · M(λ̄)`, where `λ = λ̄ + λ*` with `λ̄` 2-restricted and `λ*` even.
/// The integer part has length `ℓ(λ)`.
pub fn m_general(lambda: &Partition, mu: &Partition, n: usize) -> Result<Weight> {
    let (restricted, even) = lambda.restricted_even_decompose();
    let t = chi_mul(&m_rim(&restricted)?, mu, n)?;
    let zpart = (0..lambda.len()).map(|i| even.part(i) as i64).collect();
    Ok(Weight::new(zpart, t.labels))
}

/// Closed form of `M(λ)` for oddly regular `λ`, read off consecutive pairs
/// `(λ_{2i−1}, λ_{2i})`.
pub fn m_oddly_regular(lambda: &Partition) -> Result<MSequence> {
    if !lambda.is_oddly_regular()? {
        return Err(Error::NotOddlyRegular(lambda.to_string()));
    }
    let labels = (0..lambda.len().div_ceil(2))
        .map(|i| {
            let a = lambda.part(2 * i);
            let b = lambda.part(2 * i + 1);
            let q = ((a + b) / 4) as i64;
            let (r, xi) = match (a % 2, b % 2) {
                (1, 0) => (1, false),
                (1, 1) => (2, false),
                (0, 1) => (3, true),
                _ => (0, false),
            };
            GlpLabel::raw(q, r, xi)
        })
        .collect();
    Ok(MSequence { labels })
}
