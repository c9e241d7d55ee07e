//! The coordinate bialgebra `M_X = Sym(End(X))` of `X = m𝟙 + nP` with its
//! multiplicative coproduct `Δ×` and additive coproduct `Δ₊`, and the
//! primitive subcoalgebras `C_X^d`.

use std::collections::{BTreeMap, HashMap};

use super::algebra::{Algebra, Element, GenKind, Monomial, Symbol, VarTable};
use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_images, BitVec, Echelon};

/// The five generator families of `M_X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F,
    B,
    C,
    D,
    E,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::F, Family::B, Family::C, Family::D, Family::E];

    fn letter(self) -> char {
        match self {
            Family::F => 'F',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

/// `M_X` for `X = m𝟙 + nP`. Generators are ordered `F, B, C, D, E`, each
/// block row-major; `F` entries are closed, the others twisting.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub m: usize,
    pub n: usize,
    alg: Algebra,
    index: HashMap<(Family, usize, usize), usize>,
    entries: Vec<(Family, usize, usize)>,
}

/// Which coproduct to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    Times,
    Plus,
}

impl EndAlgebra {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 && n == 0 {
            return Err(Error::InvalidArgument("X = 0 has no coordinates".into()));
        }
        let wide = m.max(n) >= 10;
        let mut gens = Vec::new();
        let mut entries = Vec::new();
        for fam in Family::ALL {
            let (r, c) = Self::shape_of(fam, m, n);
            for i in 0..r {
                for j in 0..c {
                    let name = if wide {
                        format!("{}{}_{}", fam.letter(), i + 1, j + 1)
                    } else {
                        format!("{}{}{}", fam.letter(), i + 1, j + 1)
                    };
                    let kind = if fam == Family::F { GenKind::Closed } else { GenKind::Twisting };
                    gens.push((name, kind));
                    entries.push((fam, i, j));
                }
            }
        }
        let index = entries.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        Ok(EndAlgebra { m, n, alg: Algebra::new(VarTable::new(gens)?), index, entries })
    }

    fn shape_of(fam: Family, m: usize, n: usize) -> (usize, usize) {
        match fam {
            Family::F => (m, m),
            Family::B => (n, m),
            Family::C => (m, n),
            Family::D | Family::E => (n, n),
        }
    }

    pub fn shape(&self, fam: Family) -> (usize, usize) {
        Self::shape_of(fam, self.m, self.n)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Generator index of entry `(i, j)` (0-indexed) of a family.
    pub fn gen_index(&self, fam: Family, i: usize, j: usize) -> usize {
        self.index[&(fam, i, j)]
    }

    pub fn entry_of(&self, gen: usize) -> (Family, usize, usize) {
        self.entries[gen]
    }

    pub fn gen(&self, fam: Family, i: usize, j: usize) -> Element {
        self.alg.gen(self.gen_index(fam, i, j))
    }

    pub fn gen_prime(&self, fam: Family, i: usize, j: usize) -> Element {
        self.alg.sym(Symbol::prime(self.gen_index(fam, i, j)))
    }

    /// All degree-1 symbols: every generator and every primed generator.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = (0..self.alg.len()).map(Symbol::plain).collect();
        out.extend((0..self.alg.len()).filter(|&i| self.alg.is_twisting(i)).map(Symbol::prime));
        out
    }

    fn pair(&self, x: &Element, y: &Element) -> Tensor {
        Tensor::pure(&[x, y]).expect("same algebra")
    }

    /// `Δ×` of an unprimed generator.
    fn times_generator(&self, fam: Family, i: usize, j: usize) -> Tensor {
        let (m, n) = (self.m, self.n);
        let g = |f, a, b| self.gen(f, a, b);
        let p = |f, a, b| self.gen_prime(f, a, b);
        let mut t = Tensor::zero(&self.alg, 2);
        let mut add = |x: Element, y: Element| t.add_assign(&self.pair(&x, &y));
        use Family::*;
        match fam {
            F => {
                for k in 0..m {
                    add(g(F, i, k), g(F, k, j));
                }
                for k in 0..n {
                    add(g(C, i, k), p(B, k, j));
                    add(p(C, i, k), g(B, k, j));
                }
            }
            B => {
                for k in 0..m {
                    add(g(B, i, k), g(F, k, j));
                }
                for k in 0..n {
                    add(g(E, i, k), p(B, k, j));
                    add(&g(D, i, k) + &p(E, i, k), g(B, k, j));
                }
            }
            C => {
                for k in 0..m {
                    add(g(F, i, k), g(C, k, j));
                }
                for k in 0..n {
                    add(g(C, i, k), g(D, k, j));
                    add(p(C, i, k), g(E, k, j));
                }
            }
            D => {
                for k in 0..m {
                    add(p(B, i, k), g(C, k, j));
                }
                for k in 0..n {
                    add(g(D, i, k), g(D, k, j));
                    add(p(D, i, k), g(E, k, j));
                }
            }
            E => {
                for k in 0..m {
                    add(g(B, i, k), g(C, k, j));
                }
                for k in 0..n {
                    add(g(E, i, k), g(D, k, j));
                    add(&g(D, i, k) + &p(E, i, k), g(E, k, j));
                }
            }
        }
        t
    }

    /// A coproduct on a degree-1 symbol; primes follow `Δ(g') = (δ⊗1 + 1⊗δ)Δ(g)`.
    pub fn coproduct_symbol(&self, kind: Coproduct, s: Symbol) -> Tensor {
        let base = match kind {
            Coproduct::Times => {
                let (fam, i, j) = self.entries[s.index];
                self.times_generator(fam, i, j)
            }
            Coproduct::Plus => {
                let g = self.alg.gen(s.index);
                let one = self.alg.one();
                self.pair(&g, &one).add(&self.pair(&one, &g))
            }
        };
        if s.primed {
            base.delta()
        } else {
            base
        }
    }

    /// A coproduct on a monomial, as the braided product over its word.
    pub fn coproduct_monomial(&self, kind: Coproduct, mono: &Monomial) -> Tensor {
        let mut acc = Tensor::one(&self.alg, 2);
        for s in mono.word() {
            acc = acc.mul(&self.coproduct_symbol(kind, s));
        }
        acc
    }

    pub fn coproduct(&self, kind: Coproduct, x: &Element) -> Tensor {
        let mut acc = Tensor::zero(&self.alg, 2);
        for mono in x.terms() {
            acc.add_assign(&self.coproduct_monomial(kind, mono));
        }
        acc
    }

    pub fn delta_times(&self, x: &Element) -> Tensor {
        self.coproduct(Coproduct::Times, x)
    }

    pub fn delta_plus(&self, x: &Element) -> Tensor {
        self.coproduct(Coproduct::Plus, x)
    }

    /// The counit on a monomial: `ε×` sends the diagonal entries of `F` and
    /// `D` to 1 and all other symbols to 0; `ε₊` is nonzero only on 1.
    pub fn counit_monomial(&self, kind: Coproduct, mono: &Monomial) -> bool {
        if mono.primes != 0 {
            return false;
        }
        match kind {
            Coproduct::Plus => mono.is_one(),
            Coproduct::Times => mono.exps.iter().enumerate().all(|(g, &e)| {
                let (fam, i, j) = self.entries[g];
                e == 0 || (matches!(fam, Family::F | Family::D) && i == j)
            }),
        }
    }

    /// Degree-`d` monomials of `M_X`, in ascending monomial order.
    pub fn monomials(&self, d: u32) -> Vec<Monomial> {
        let ng = self.alg.len();
        let twisting: Vec<usize> = (0..ng).filter(|&i| self.alg.is_twisting(i)).collect();
        let mut out = Vec::new();
        let mut subsets: Vec<u64> = vec![0];
        for &i in &twisting {
            let more: Vec<u64> = subsets.iter().map(|s| s | 1 << i).collect();
            subsets.extend(more);
        }
        for primes in subsets {
            let k = primes.count_ones();
            if k > d {
                continue;
            }
            let mut exps = vec![0u32; ng];
            compositions(d - k, 0, &mut exps, &mut |e| {
                out.push(Monomial { exps: e.to_vec(), primes });
            });
        }
        out.sort();
        out
    }

    /// A basis of `C_X^d`: the kernel of `v ↦ Δ₊(v) − v⊗1 − 1⊗v` on the
    /// degree-`d` piece. The map preserves family content, so the kernel is
    /// computed one content block at a time.
    pub fn primitives(&self, d: u32) -> Result<Vec<Element>> {
        if d == 0 {
            return Err(Error::ZeroDegree(0));
        }
        let mut blocks: BTreeMap<Vec<u32>, Vec<Monomial>> = BTreeMap::new();
        for mono in self.monomials(d) {
            blocks.entry(mono.family_content()).or_default().push(mono);
        }
        let mut cache: HashMap<Monomial, Tensor> = HashMap::new();
        let mut basis = Vec::new();
        for monos in blocks.values() {
            let mut coords: HashMap<Vec<Monomial>, usize> = HashMap::new();
            let cross: Vec<Vec<Vec<Monomial>>> = monos
                .iter()
                .map(|mono| {
                    let t = self.plus_cached(mono, &mut cache);
                    t.terms()
                        .iter()
                        .filter(|v| v[0].degree() > 0 && v[1].degree() > 0)
                        .cloned()
                        .collect()
                })
                .collect();
            for terms in &cross {
                for v in terms {
                    let next = coords.len();
                    coords.entry(v.clone()).or_insert(next);
                }
            }
            let images: Vec<BitVec> = cross
                .iter()
                .map(|terms| BitVec::from_indices(coords.len(), terms.iter().map(|v| coords[v])))
                .collect();
            for kv in kernel_of_images(&images, coords.len()) {
                basis.push(Element::from_terms(&self.alg, kv.ones().map(|i| monos[i].clone())));
            }
        }
        Ok(basis)
    }

    /// `Δ₊` with a prefix cache: `Δ₊(w·g) = Δ₊(w)·Δ₊(g)` for the last letter `g`.
    fn plus_cached(&self, mono: &Monomial, cache: &mut HashMap<Monomial, Tensor>) -> Tensor {
        if let Some(t) = cache.get(mono) {
            return t.clone();
        }
        let t = if mono.is_one() {
            Tensor::one(&self.alg, 2)
        } else {
            let word = mono.word();
            let last = *word.last().unwrap();
            let mut prefix = mono.clone();
            if last.primed {
                prefix.primes &= !(1 << last.index);
            } else {
                prefix.exps[last.index] -= 1;
            }
            self.plus_cached(&prefix, cache).mul(&self.coproduct_symbol(Coproduct::Plus, last))
        };
        cache.insert(mono.clone(), t.clone());
        t
    }

    /// Whether `Δ×(C_X^d) ⊆ C_X^d ⊗ C_X^d`.
    pub fn subcoalgebra_check(&self, d: u32) -> Result<bool> {
        let basis = self.primitives(d)?;
        Ok(is_subcoalgebra(&basis, |x| self.delta_times(x)))
    }
}

/// Whether `Δ(span basis) ⊆ span basis ⊗ span basis`.
pub fn is_subcoalgebra(basis: &[Element], mut coproduct: impl FnMut(&Element) -> Tensor) -> bool {
    let images: Vec<Tensor> = basis.iter().map(&mut coproduct).collect();
    let mut products = Vec::new();
    for x in basis {
        for y in basis {
            products.push(Tensor::pure(&[x, y]).expect("same algebra"));
        }
    }
    let mut coords: HashMap<Vec<Monomial>, usize> = HashMap::new();
    for t in products.iter().chain(&images) {
        for v in t.terms() {
            let next = coords.len();
            coords.entry(v.clone()).or_insert(next);
        }
    }
    let vec_of = |t: &Tensor| BitVec::from_indices(coords.len(), t.terms().iter().map(|v| coords[v]));
    let mut span = Echelon::new(coords.len());
    for p in &products {
        span.insert(vec_of(p));
    }
    images.iter().all(|t| span.contains(&vec_of(t)))
}

/// Calls `f` on every exponent vector with entries from position `pos` on
/// summing to `rest`.
fn compositions(rest: u32, pos: usize, exps: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if pos + 1 >= exps.len() {
        if exps.is_empty() {
            if rest == 0 {
                f(exps);
            }
            return;
        }
        let last = exps.len() - 1;
        exps[last] = rest;
        f(exps);
        exps[last] = 0;
        return;
    }
    for e in 0..=rest {
        exps[pos] = e;
        compositions(rest - e, pos + 1, exps, f);
    }
    exps[pos] = 0;
}

/// Whether `a` and `b` span the same subspace.
pub fn same_span(a: &[Element], b: &[Element]) -> bool {
    let mut coords: HashMap<Monomial, usize> = HashMap::new();
    for x in a.iter().chain(b) {
        for m in x.terms() {
            let next = coords.len();
            coords.entry(m.clone()).or_insert(next);
        }
    }
    let vec_of = |x: &Element| BitVec::from_indices(coords.len(), x.terms().iter().map(|m| coords[m]));
    let mut ea = Echelon::new(coords.len());
    let ra = a.iter().filter(|x| ea.insert(vec_of(x))).count();
    let mut eb = Echelon::new(coords.len());
    let rb = b.iter().filter(|x| eb.insert(vec_of(x))).count();
    ra == rb && b.iter().all(|x| ea.contains(&vec_of(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_names() {
        let x = EndAlgebra::new(1, 1).unwrap();
        let names: Vec<&str> = (0..x.algebra().len()).map(|i| x.algebra().name(i)).collect();
        assert_eq!(names, vec!["F11", "B11", "C11", "D11", "E11"]);
        assert_eq!(x.symbols().len(), 9);
        assert!(EndAlgebra::new(0, 0).is_err());
    }

    #[test]
    fn times_examples() {
        let x = EndAlgebra::new(0, 1).unwrap();
        let a = x.algebra();
        let d = a.var("D11").unwrap();
        let expect = Tensor::pure(&[&d, &d])
            .unwrap()
            .add(&Tensor::pure(&[&a.var("D11'").unwrap(), &a.var("E11").unwrap()]).unwrap());
        assert_eq!(x.delta_times(&d), expect);
        let y = EndAlgebra::new(1, 0).unwrap();
        let f = y.algebra().var("F11").unwrap();
        assert_eq!(y.delta_times(&f), Tensor::pure(&[&f, &f]).unwrap());
    }

    #[test]
    fn plus_square() {
        let x = EndAlgebra::new(0, 1).unwrap();
        let a = x.algebra();
        let y = a.var("D11").unwrap();
        let one = a.one();
        let y2 = y.pow(2);
        let yp = a.var("D11'").unwrap();
        let expect = Tensor::pure(&[&y2, &one])
            .unwrap()
            .add(&Tensor::pure(&[&one, &y2]).unwrap())
            .add(&Tensor::pure(&[&yp, &yp]).unwrap());
        assert_eq!(x.delta_plus(&y2), expect);
    }

    #[test]
    fn monomial_counts() {
        let x = EndAlgebra::new(1, 1).unwrap();
        assert_eq!(x.monomials(1).len(), 9);
        // 5 unprimed and 4 primed symbols, primes squarefree.
        assert_eq!(x.monomials(2).len(), 15 + 5 * 4 + 6);
    }

    #[test]
    fn primitive_dimensions_small() {
        let x = EndAlgebra::new(1, 1).unwrap();
        assert_eq!(x.primitives(1).unwrap().len(), 9);
        let p2 = x.primitives(2).unwrap();
        assert!(same_span(&p2, &[x.gen(Family::F, 0, 0).pow(2)]));
        assert!(x.primitives(3).unwrap().is_empty());
    }

    #[test]
    fn same_span_detects_dependence() {
        let x = EndAlgebra::new(1, 0).unwrap();
        let f = x.gen(Family::F, 0, 0);
        assert!(same_span(std::slice::from_ref(&f), std::slice::from_ref(&f)));
        assert!(same_span(&[f.clone(), f.clone()], std::slice::from_ref(&f)));
        assert!(!same_span(std::slice::from_ref(&f), &[f.pow(2)]));
        assert!(!same_span(&[f.clone(), f.pow(2)], std::slice::from_ref(&f)));
    }
}
