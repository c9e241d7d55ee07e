//! Commutative algebras in Ver₄⁺ over F₂: generators, normal-form monomials,
//! the product `ab = ba + a'b'` and the derivation `δ`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Whether a generator carries a nonzero derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// `δg = g'` is a new generator.
    Twisting,
    /// `δg = 0`; the generator is central.
    Closed,
}

/// Generators in a fixed total order; each twisting generator `g` has a
/// primed partner `g'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    kinds: Vec<GenKind>,
    max_degree: Option<u32>,
    lookup: HashMap<String, usize>,
}

/// At most this many generators, so primed subsets fit a `u64` mask.
pub const MAX_GENERATORS: usize = 64;

impl VarTable {
    pub fn new(gens: Vec<(String, GenKind)>) -> Result<Self> {
        if gens.len() > MAX_GENERATORS {
            return Err(Error::InvalidArgument(format!(
                "{} generators exceed the limit of {MAX_GENERATORS}",
                gens.len()
            )));
        }
        let mut lookup = HashMap::new();
        for (i, (name, _)) in gens.iter().enumerate() {
            let ok = !name.is_empty()
                && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '{' || c == '}')
                && !name.chars().next().unwrap().is_ascii_digit();
            if !ok {
                return Err(Error::InvalidArgument(format!("bad generator name `{name}`")));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate generator `{name}`")));
            }
        }
        let (names, kinds) = gens.into_iter().unzip();
        Ok(VarTable { names, kinds, max_degree: None, lookup })
    }

    /// Twisting generators with the given names, in order.
    pub fn twisting(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|n| (n.to_string(), GenKind::Twisting)).collect())
    }

    /// The quotient by all monomials of degree above `n`.
    pub fn truncated(mut self, n: u32) -> Self {
        self.max_degree = Some(n);
        self
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn kind(&self, i: usize) -> GenKind {
        self.kinds[i]
    }

    pub fn is_twisting(&self, i: usize) -> bool {
        self.kinds[i] == GenKind::Twisting
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.max_degree
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    fn twisting_mask(&self) -> u64 {
        (0..self.len()).filter(|&i| self.is_twisting(i)).fold(0, |m, i| m | 1 << i)
    }
}

/// A generator `g_i` or its derivative `g_i'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub index: usize,
    pub primed: bool,
}

impl Symbol {
    pub fn plain(index: usize) -> Self {
        Symbol { index, primed: false }
    }

    pub fn prime(index: usize) -> Self {
        Symbol { index, primed: true }
    }
}

/// A normal-form monomial `∏ g_i^{e_i} · ∏_{i ∈ S} g_i'`: unprimed powers in
/// generator order times a squarefree set of primed generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
    pub primes: u64,
}

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial { exps: vec![0; ngens], primes: 0 }
    }

    pub fn symbol(ngens: usize, s: Symbol) -> Self {
        let mut m = Self::one(ngens);
        if s.primed {
            m.primes = 1 << s.index;
        } else {
            m.exps[s.index] = 1;
        }
        m
    }

    /// Every generator, primed or not, has degree 1.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum::<u32>() + self.primes.count_ones()
    }

    pub fn is_one(&self) -> bool {
        self.primes == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn has_prime(&self, i: usize) -> bool {
        self.primes >> i & 1 == 1
    }

    /// The defining word: unprimed letters in generator order, then primes.
    pub fn word(&self) -> Vec<Symbol> {
        let mut w = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(Symbol::plain(i), e as usize));
        }
        w.extend((0..self.exps.len()).filter(|&i| self.has_prime(i)).map(Symbol::prime));
        w
    }

    /// Per-generator count of `g_i` and `g_i'` together.
    pub fn family_content(&self) -> Vec<u32> {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| e + u32::from(self.has_prime(i)))
            .collect()
    }

    pub fn render(&self, table: &VarTable) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut f: Vec<String> = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => f.push(table.name(i).to_string()),
                _ => f.push(format!("{}^{e}", table.name(i))),
            }
        }
        for i in 0..self.exps.len() {
            if self.has_prime(i) {
                f.push(format!("{}'", table.name(i)));
            }
        }
        f.join("*")
    }
}

/// Degree ascending, then exponent vectors descending, then primed sets.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.primes.cmp(&other.primes))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:#b}", self.exps, self.primes)
    }
}

/// Adds `m` to an F₂-combination.
pub(crate) fn toggle<T: Ord>(set: &mut BTreeSet<T>, m: T) {
    if let Some(m) = set.replace(m) {
        set.remove(&m);
    }
}

/// Shared handle to a generator table.
#[derive(Clone, Debug)]
pub struct Algebra(Arc<VarTable>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Algebra {}

impl std::ops::Deref for Algebra {
    type Target = VarTable;

    fn deref(&self) -> &VarTable {
        &self.0
    }
}

impl Algebra {
    pub fn new(table: VarTable) -> Self {
        Algebra(Arc::new(table))
    }

    pub fn table(&self) -> &VarTable {
        &self.0
    }

    fn fits(&self, degree: u32) -> bool {
        self.max_degree.is_none_or(|n| degree <= n)
    }

    pub fn zero(&self) -> Element {
        Element { alg: self.clone(), terms: BTreeSet::new() }
    }

    pub fn one(&self) -> Element {
        self.monomial(Monomial::one(self.len()))
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        let mut terms = BTreeSet::new();
        if self.fits(m.degree()) {
            terms.insert(m);
        }
        Element { alg: self.clone(), terms }
    }

    pub fn sym(&self, s: Symbol) -> Element {
        self.monomial(Monomial::symbol(self.len(), s))
    }

    pub fn gen(&self, i: usize) -> Element {
        self.sym(Symbol::plain(i))
    }

    /// Looks up `name` or `name'`.
    pub fn symbol(&self, text: &str) -> Result<Symbol> {
        let (name, primed) = match text.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (text, false),
        };
        let index = self.index(name).ok_or_else(|| Error::UnknownSymbol(text.to_string()))?;
        if primed && !self.is_twisting(index) {
            return Err(Error::UnknownSymbol(format!("{text} (`{name}` has δ = 0)")));
        }
        Ok(Symbol { index, primed })
    }

    /// Element named by a symbol string such as `x` or `x'`.
    pub fn var(&self, text: &str) -> Result<Element> {
        Ok(self.sym(self.symbol(text)?))
    }

    /// Normal form of a word by literal rewriting: adjacent unprimed letters
    /// out of order are replaced by `g_j g_i + g_i' g_j'`, primed letters are
    /// moved out as central and square to zero.
    pub fn normalize(&self, word: &[Symbol]) -> Result<Element> {
        for s in word {
            if s.index >= self.len() || (s.primed && !self.is_twisting(s.index)) {
                return Err(Error::UnknownSymbol(format!("{s:?}")));
            }
        }
        let mut pending: Vec<(Vec<usize>, u64)> = Vec::new();
        let mut start = (Vec::new(), 0u64);
        for s in word {
            if s.primed {
                if start.1 >> s.index & 1 == 1 {
                    return Ok(self.zero());
                }
                start.1 |= 1 << s.index;
            } else {
                start.0.push(s.index);
            }
        }
        pending.push(start);
        let mut out = BTreeSet::new();
        while let Some((mut w, primes)) = pending.pop() {
            let descent = w.windows(2).position(|p| p[0] > p[1]);
            let Some(k) = descent else {
                let mut m = Monomial::one(self.len());
                m.primes = primes;
                for i in w {
                    m.exps[i] += 1;
                }
                if self.fits(m.degree()) {
                    toggle(&mut out, m);
                }
                continue;
            };
            let (i, j) = (w[k], w[k + 1]);
            if self.is_twisting(i) && self.is_twisting(j) {
                let bits = (1u64 << i) | (1u64 << j);
                if primes & bits == 0 {
                    let mut v = w.clone();
                    v.drain(k..k + 2);
                    pending.push((v, primes | bits));
                }
            }
            w.swap(k, k + 1);
            pending.push((w, primes));
        }
        Ok(Element { alg: self.clone(), terms: out })
    }

    /// The product of two normal monomials.
    ///
    /// Nonzero terms are indexed by matchings of pairs `(i, j)` with `i > j`,
    /// `g_i` twisting with odd exponent in `a`, `g_j` twisting with odd
    /// exponent in `b`, every index in at most one pair and unprimed in both
    /// factors. Each pair lowers both exponents by one and primes both.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial, out: &mut BTreeSet<Monomial>) {
        if a.primes & b.primes != 0 || !self.fits(a.degree() + b.degree()) {
            return;
        }
        let primes = a.primes | b.primes;
        let tw = self.twisting_mask();
        let odd = |m: &Monomial| -> Vec<usize> {
            (0..m.exps.len())
                .filter(|&i| m.exps[i] % 2 == 1 && tw >> i & 1 == 1 && primes >> i & 1 == 0)
                .collect()
        };
        let left = odd(a);
        let right = odd(b);
        let mut base = a.clone();
        for (e, f) in base.exps.iter_mut().zip(&b.exps) {
            *e += f;
        }
        base.primes = primes;
        fn rec(
            k: usize,
            left: &[usize],
            right: &[usize],
            used: u64,
            base: &Monomial,
            out: &mut BTreeSet<Monomial>,
        ) {
            if k == left.len() {
                let mut m = base.clone();
                for i in 0..m.exps.len() {
                    if used >> i & 1 == 1 {
                        m.exps[i] -= 1;
                    }
                }
                m.primes |= used;
                toggle(out, m);
                return;
            }
            rec(k + 1, left, right, used, base, out);
            let i = left[k];
            if used >> i & 1 == 1 {
                return;
            }
            for &j in right.iter().take_while(|&&j| j < i) {
                if used >> j & 1 == 0 {
                    rec(k + 1, left, right, used | 1 << i | 1 << j, base, out);
                }
            }
        }
        rec(0, &left, &right, 0, &base, out);
    }

    /// `δ` of a normal monomial, added into `out`.
    pub fn delta_monomial(&self, a: &Monomial, out: &mut BTreeSet<Monomial>) {
        for i in 0..a.exps.len() {
            if a.exps[i] % 2 == 1 && self.is_twisting(i) && !a.has_prime(i) {
                let mut m = a.clone();
                m.exps[i] -= 1;
                m.primes |= 1 << i;
                toggle(out, m);
            }
        }
    }

    /// Parses `x^2*y + x'*y'`; each term is a word, normalized.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut acc = self.zero();
        for term in t.split('+').map(str::trim) {
            if term == "0" {
                continue;
            }
            let mut word = Vec::new();
            for factor in term.split('*').map(str::trim) {
                if factor == "1" {
                    continue;
                }
                let (sym, exp) = match factor.split_once('^') {
                    Some((s, e)) => (
                        s.trim(),
                        e.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let s = self.symbol(sym)?;
                word.extend(std::iter::repeat_n(s, exp));
            }
            acc = acc.add(&self.normalize(&word)?)?;
        }
        Ok(acc)
    }
}

/// An F₂-linear combination of normal monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    alg: Algebra,
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeSet<Monomial> {
        &self.terms
    }

    pub fn from_terms(alg: &Algebra, terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut set = BTreeSet::new();
        for m in terms {
            if alg.fits(m.degree()) {
                toggle(&mut set, m);
            }
        }
        Element { alg: alg.clone(), terms: set }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.first().unwrap().is_one()
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(Element { alg: self.alg.clone(), terms })
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                self.alg.mul_monomials(a, b, &mut out);
            }
        }
        Ok(Element { alg: self.alg.clone(), terms: out })
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `δ`, extended by the Leibniz rule.
    pub fn delta(&self) -> Element {
        let mut out = BTreeSet::new();
        for a in &self.terms {
            self.alg.delta_monomial(a, &mut out);
        }
        Element { alg: self.alg.clone(), terms: out }
    }

    /// Every monomial contains a primed generator.
    pub fn in_delta_ideal(&self) -> bool {
        self.terms.iter().all(|m| m.primes != 0)
    }

    pub fn is_delta_closed(&self) -> bool {
        self.delta().is_zero()
    }

    /// The degree-0 coefficient.
    pub fn constant(&self) -> bool {
        self.terms.first().is_some_and(Monomial::is_one)
    }

    /// The homogeneous part of degree `d`.
    pub fn homogeneous(&self, d: u32) -> Element {
        let terms = self.terms.iter().filter(|m| m.degree() == d).cloned().collect();
        Element { alg: self.alg.clone(), terms }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(Monomial::degree).max()
    }

    /// Coefficients grouped by degree.
    pub fn by_degree(&self) -> BTreeMap<u32, Vec<Monomial>> {
        let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.degree()).or_default().push(m.clone());
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.render(&self.alg)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Panics if the operands live in different algebras.
impl std::ops::Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs).expect("operands from the same algebra")
    }
}

/// Panics if the operands live in different algebras.
impl std::ops::Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("operands from the same algebra")
    }
}
