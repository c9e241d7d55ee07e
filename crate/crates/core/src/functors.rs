//! Simple polynomial functors `D_{λ|μ}` on Ver₄⁺: evaluation on `m𝟙 + nP`,
//! discerning and faithful objects, catalogs of additive and exact functors,
//! and the corresponding sVec predicates in odd characteristic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mullineux::{chi_mul, m_rim};
use crate::partitions::{enumerate_label_pairs, enumerate_partitions, Partition};
use crate::weights::Weight;

/// The label `(λ, μ)` of the simple functor `D_{λ|μ}` of degree `|λ| + 4|μ|`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctorLabel {
    pub lambda: Partition,
    pub mu: Partition,
}

impl FunctorLabel {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        FunctorLabel { lambda, mu }
    }

    pub fn degree(&self) -> usize {
        self.lambda.size() + 4 * self.mu.size()
    }
}

impl fmt::Display for FunctorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

impl fmt::Debug for FunctorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{self}]")
    }
}

/// `λ|μ`, each side a partition in comma syntax; `4,1|1`, `3,2,1|0`, `|1`.
impl FromStr for FunctorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, m) = s.split_once('|').unwrap_or((s, ""));
        Ok(FunctorLabel::new(l.parse()?, m.parse()?))
    }
}

/// The object `m𝟙 + nP`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ver4Object {
    pub m: usize,
    pub n: usize,
}

impl Ver4Object {
    pub fn new(m: usize, n: usize) -> Self {
        Ver4Object { m, n }
    }
}

impl fmt::Display for Ver4Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}P", self.m, self.n)
    }
}

/// `m,n` or `m+nP`.
impl FromStr for Ver4Object {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad object `{s}`; expected `m,n` or `m+nP`"));
        let t = s.trim();
        let (a, b) = if let Some(x) = t.strip_suffix('P') {
            x.split_once('+').ok_or_else(bad)?
        } else {
            t.split_once(',').ok_or_else(bad)?
        };
        let m = a.trim().parse().map_err(|_| bad())?;
        let n = b.trim().parse().map_err(|_| bad())?;
        Ok(Ver4Object { m, n })
    }
}

/// The value of a simple functor on an object: zero, or a simple
/// GL(m+nP)-representation given by its highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalResult {
    Zero,
    Simple(Weight),
}

impl EvalResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, EvalResult::Zero)
    }

    pub fn weight(&self) -> Option<&Weight> {
        match self {
            EvalResult::Zero => None,
            EvalResult::Simple(w) => Some(w),
        }
    }
}

/// `D_{λ|μ}(m + nP)`.
///
/// Nonzero iff `λ[m]` is 2-restricted, `ℓ(M(λ[m])) ≤ n` and `ℓ(μ) ≤ n`; the
/// highest weight is then `(λ₁, …, λ_m) | χ^μ · M(λ[m])`.
pub fn evaluate(f: &FunctorLabel, x: Ver4Object) -> EvalResult {
    let tail = f.lambda.truncate(x.m);
    if !tail.is_two_restricted() || f.mu.len() > x.n {
        return EvalResult::Zero;
    }
    let m = m_rim(&tail).expect("tail is 2-restricted");
    match chi_mul(&m, &f.mu, x.n) {
        Ok(t) => {
            let zpart = (0..x.m).map(|i| f.lambda.part(i) as i64).collect();
            EvalResult::Simple(Weight::new(zpart, t.labels))
        }
        Err(_) => EvalResult::Zero,
    }
}

/// All simple functor labels of degree `d`.
pub fn enumerate_simple_functors(d: usize) -> Vec<FunctorLabel> {
    enumerate_label_pairs(d)
        .into_iter()
        .map(|(l, m)| FunctorLabel::new(l, m))
        .collect()
}

/// Labels of degree `d` that do not vanish on `x`, with their highest weights.
pub fn polynomial_simples_gl(x: Ver4Object, d: usize) -> Vec<(FunctorLabel, Weight)> {
    enumerate_simple_functors(d)
        .into_iter()
        .filter_map(|f| match evaluate(&f, x) {
            EvalResult::Simple(w) => Some((f, w)),
            EvalResult::Zero => None,
        })
        .collect()
}

/// Labels of degree `d` whose weight on `x` is not dominant.
pub fn dominance_violations(x: Ver4Object, d: usize) -> Vec<(FunctorLabel, Weight)> {
    polynomial_simples_gl(x, d)
        .into_iter()
        .filter(|(_, w)| !w.is_dominant())
        .collect()
}

/// Whether every simple functor of degree `d` is nonzero on `x`.
pub fn is_discerning(x: Ver4Object, d: usize) -> bool {
    let Ver4Object { m, n } = x;
    match d {
        0 => true,
        1 => m >= 1 || n >= 1,
        2 => m + n >= 2 && m >= 1,
        3 => m >= 3 || (n >= 1 && m >= 1),
        _ => m >= d / 2 && n >= d / 4,
    }
}

pub fn is_discerning_bruteforce(x: Ver4Object, d: usize) -> bool {
    enumerate_simple_functors(d).iter().all(|f| !evaluate(f, x).is_zero())
}

/// Whether every indecomposable projective of degree `d` is nonzero on `x`:
/// `m + 4n ≥ d` and `m + 2n ≥ 1 + ⌊d/2⌋`.
pub fn is_faithful(x: Ver4Object, d: usize) -> bool {
    if d == 0 {
        return true;
    }
    x.m + 4 * x.n >= d && x.m + 2 * x.n > d / 2
}

pub fn is_faithful_bruteforce(x: Ver4Object, d: usize) -> bool {
    enumerate_partitions(d)
        .into_iter()
        .filter(Partition::is_two_restricted)
        .all(|l| !evaluate(&FunctorLabel::new(l, Partition::empty()), x).is_zero())
}

/// An indecomposable functor given by its Loewy layers, top first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indecomposable {
    pub name: String,
    pub layers: Vec<Vec<FunctorLabel>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdditiveCatalog {
    pub degree: usize,
    pub simples: Vec<FunctorLabel>,
    pub indecomposables: Vec<Indecomposable>,
}

fn one_part(k: usize) -> Partition {
    Partition::from_sorted(vec![k])
}

fn simple_indecomposable(name: String, f: &FunctorLabel) -> Indecomposable {
    Indecomposable { name, layers: vec![vec![f.clone()]] }
}

/// The simple and indecomposable additive polynomial functors of degree `d`.
pub fn additive_catalog(d: usize) -> AdditiveCatalog {
    let mut cat = AdditiveCatalog { degree: d, ..Default::default() };
    if d == 0 || !d.is_power_of_two() {
        return cat;
    }
    let top = FunctorLabel::new(one_part(d), Partition::empty());
    if d <= 2 {
        let name = if d == 1 { "id" } else { "Fr+" };
        cat.simples.push(top.clone());
        cat.indecomposables.push(simple_indecomposable(name.into(), &top));
        return cat;
    }
    let bottom = FunctorLabel::new(Partition::empty(), one_part(d / 4));
    let a = format!("D[{top}]");
    let b = format!("D[{bottom}]");
    cat.simples = vec![top.clone(), bottom.clone()];
    cat.indecomposables = vec![
        simple_indecomposable(a.clone(), &top),
        simple_indecomposable(b.clone(), &bottom),
        Indecomposable {
            name: format!("P({a})"),
            layers: vec![vec![top.clone()], vec![bottom.clone()]],
        },
        Indecomposable {
            name: format!("I({a})"),
            layers: vec![vec![bottom.clone()], vec![top.clone()]],
        },
        Indecomposable {
            name: format!("P({b}) = I({b})"),
            layers: vec![vec![bottom.clone()], vec![top], vec![bottom]],
        },
    ];
    cat
}

/// The indecomposable exact polynomial functors of degree `d`.
pub fn exact_catalog(d: usize) -> Vec<Indecomposable> {
    match d {
        1 => additive_catalog(1).indecomposables,
        _ if d >= 4 && d.is_power_of_two() => additive_catalog(d)
            .indecomposables
            .into_iter()
            .filter(|i| i.layers.len() == 3)
            .collect(),
        _ => Vec::new(),
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// Normalizes sVec arguments to `m ≥ n > 0` with `p` an odd prime; returns
/// `(m, n, 2c)` with `c = (p + n − m)/2`.
fn svec_args(m: u64, n: u64, p: u64) -> Result<(i64, i64, i64)> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
    }
    let (m, n) = (m.max(n) as i64, m.min(n) as i64);
    if n == 0 {
        return Err(Error::InvalidArgument("both m and n must be positive".into()));
    }
    Ok((m, n, p as i64 + n - m))
}

/// Whether `S^{m|n}` (the super vector space of dimension `m|n`) is
/// `d`-faithful for polynomial functors over a field of odd characteristic `p`.
pub fn svec_faithful(m: u64, n: u64, p: u64, d: u64) -> Result<bool> {
    let (m, n, c2) = svec_args(m, n, p)?;
    let (p, d) = (p as i64, d as i64);
    Ok(if c2 < 4 {
        d <= m + (p - 1) * n
    } else if c2 <= 2 * n {
        // ⌈(n+1)p − 1 − c²⌉ with c² = c2²/4.
        d <= (4 * ((n + 1) * p - 1) - c2 * c2).div_euclid(4) + i64::from((c2 * c2) % 4 != 0)
    } else {
        d <= m + n + m * n
    })
}

/// Whether `S^{m|n}` is relatively `d`-discerning over a field of odd
/// characteristic `p`.
pub fn svec_discerning(m: u64, n: u64, p: u64, d: u64) -> Result<bool> {
    let (m, n, c2) = svec_args(m, n, p)?;
    let (p, d) = (p as i64, d as i64);
    if c2 <= 0 {
        return Ok(d < (n + 1) * p);
    }
    svec_faithful(m as u64, n as u64, p as u64, d as u64)
}
