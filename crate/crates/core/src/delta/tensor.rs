//! Tensor powers of a commutative algebra in Ver₄⁺ with the braided product
//! `(a⊗b)(c⊗d) = ac⊗bd + ac'⊗b'd`.

use std::collections::BTreeSet;
use std::fmt;

use super::algebra::{toggle, Algebra, Element, Monomial};
use crate::error::{Error, Result};

/// An F₂-combination of pure tensors of normal monomials, all of arity `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    alg: Algebra,
    arity: usize,
    terms: BTreeSet<Vec<Monomial>>,
}

impl Tensor {
    pub fn zero(alg: &Algebra, arity: usize) -> Self {
        Tensor { alg: alg.clone(), arity, terms: BTreeSet::new() }
    }

    /// `1 ⊗ ⋯ ⊗ 1`.
    pub fn one(alg: &Algebra, arity: usize) -> Self {
        let mut t = Self::zero(alg, arity);
        t.terms.insert(vec![Monomial::one(alg.len()); arity]);
        t
    }

    /// `e_1 ⊗ ⋯ ⊗ e_k`.
    pub fn pure(factors: &[&Element]) -> Result<Self> {
        let alg = factors
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty tensor".into()))?
            .algebra()
            .clone();
        let mut terms: BTreeSet<Vec<Monomial>> = [Vec::new()].into();
        for f in factors {
            if *f.algebra() != alg {
                return Err(Error::TableMismatch);
            }
            let mut next = BTreeSet::new();
            for t in &terms {
                for m in f.terms() {
                    let mut v = t.clone();
                    v.push(m.clone());
                    toggle(&mut next, v);
                }
            }
            terms = next;
        }
        Ok(Tensor { alg, arity: factors.len(), terms })
    }

    pub fn from_terms(alg: &Algebra, arity: usize, terms: impl IntoIterator<Item = Vec<Monomial>>) -> Self {
        let mut t = Self::zero(alg, arity);
        for v in terms {
            assert_eq!(v.len(), arity, "arity mismatch");
            toggle(&mut t.terms, v);
        }
        t
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeSet<Vec<Monomial>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        assert!(self.alg == other.alg && self.arity == other.arity, "incompatible tensors");
        for v in &other.terms {
            toggle(&mut self.terms, v.clone());
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add_assign(other);
        t
    }

    /// `Σ_k 1⊗⋯⊗δ⊗⋯⊗1`.
    pub fn delta(&self) -> Tensor {
        let mut out = BTreeSet::new();
        for v in &self.terms {
            delta_pure(&self.alg, v, &mut out);
        }
        Tensor { alg: self.alg.clone(), arity: self.arity, terms: out }
    }

    /// The braided product.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        assert!(self.alg == other.alg && self.arity == other.arity, "incompatible tensors");
        let mut out = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                mul_pure(&self.alg, a, b, &mut out);
            }
        }
        Tensor { alg: self.alg.clone(), arity: self.arity, terms: out }
    }

    /// Applies a linear map `M → M^{⊗r}` to factor `pos`.
    pub fn map_factor(&self, pos: usize, r: usize, mut f: impl FnMut(&Monomial) -> Tensor) -> Tensor {
        let mut result = BTreeSet::new();
        for v in &self.terms {
            let image = f(&v[pos]);
            assert_eq!(image.arity, r, "image arity mismatch");
            for w in &image.terms {
                let mut u = v[..pos].to_vec();
                u.extend(w.iter().cloned());
                u.extend(v[pos + 1..].iter().cloned());
                toggle(&mut result, u);
            }
        }
        Tensor { alg: self.alg.clone(), arity: self.arity - 1 + r, terms: result }
    }

    /// Applies a linear map `M → k` to factor `pos`, dropping it.
    pub fn contract_factor(&self, pos: usize, f: impl Fn(&Monomial) -> bool) -> Tensor {
        let mut out = BTreeSet::new();
        for v in &self.terms {
            if f(&v[pos]) {
                let mut u = v.clone();
                u.remove(pos);
                toggle(&mut out, u);
            }
        }
        Tensor { alg: self.alg.clone(), arity: self.arity - 1, terms: out }
    }

    /// An arity-1 tensor as an element.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1, "not an element");
        Element::from_terms(&self.alg, self.terms.iter().map(|v| v[0].clone()))
    }

    pub fn from_element(e: &Element) -> Tensor {
        Tensor::from_terms(e.algebra(), 1, e.terms().iter().map(|m| vec![m.clone()]))
    }
}

fn delta_pure(alg: &Algebra, v: &[Monomial], out: &mut BTreeSet<Vec<Monomial>>) {
    for k in 0..v.len() {
        let mut d = BTreeSet::new();
        alg.delta_monomial(&v[k], &mut d);
        for m in d {
            let mut u = v.to_vec();
            u[k] = m;
            toggle(out, u);
        }
    }
}

/// `(a⊗A)(c⊗C) = ac⊗AC + ac'⊗(δA)C`.
fn mul_pure(alg: &Algebra, a: &[Monomial], c: &[Monomial], out: &mut BTreeSet<Vec<Monomial>>) {
    if a.len() == 1 {
        let mut p = BTreeSet::new();
        alg.mul_monomials(&a[0], &c[0], &mut p);
        for m in p {
            toggle(out, vec![m]);
        }
        return;
    }
    let mut head = BTreeSet::new();
    alg.mul_monomials(&a[0], &c[0], &mut head);
    if !head.is_empty() {
        let mut rest = BTreeSet::new();
        mul_pure(alg, &a[1..], &c[1..], &mut rest);
        cross(&head, &rest, out);
    }
    let mut dc = BTreeSet::new();
    alg.delta_monomial(&c[0], &mut dc);
    let mut twisted_head = BTreeSet::new();
    for m in &dc {
        alg.mul_monomials(&a[0], m, &mut twisted_head);
    }
    if !twisted_head.is_empty() {
        let mut da = BTreeSet::new();
        delta_pure(alg, &a[1..], &mut da);
        let mut rest = BTreeSet::new();
        for u in &da {
            mul_pure(alg, u, &c[1..], &mut rest);
        }
        cross(&twisted_head, &rest, out);
    }
}

fn cross(head: &BTreeSet<Monomial>, rest: &BTreeSet<Vec<Monomial>>, out: &mut BTreeSet<Vec<Monomial>>) {
    for h in head {
        for r in rest {
            let mut v = Vec::with_capacity(r.len() + 1);
            v.push(h.clone());
            v.extend(r.iter().cloned());
            toggle(out, v);
        }
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|v| v.iter().map(|m| m.render(&self.alg)).collect::<Vec<_>>().join(" ⊗ "))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::algebra::VarTable;

    #[test]
    fn braided_square_of_primitive() {
        let a = Algebra::new(VarTable::twisting(&["y"]).unwrap());
        let y = a.var("y").unwrap();
        let one = a.one();
        let p = Tensor::pure(&[&y, &one]).unwrap().add(&Tensor::pure(&[&one, &y]).unwrap());
        let sq = p.mul(&p);
        let yp = a.var("y'").unwrap();
        let y2 = y.pow(2);
        let expect = Tensor::pure(&[&y2, &one])
            .unwrap()
            .add(&Tensor::pure(&[&one, &y2]).unwrap())
            .add(&Tensor::pure(&[&yp, &yp]).unwrap());
        assert_eq!(sq, expect);
    }

    #[test]
    fn arity_one_is_the_algebra() {
        let a = Algebra::new(VarTable::twisting(&["y", "x"]).unwrap());
        let x = a.var("x").unwrap();
        let y = a.var("y").unwrap();
        let tx = Tensor::from_element(&x);
        let ty = Tensor::from_element(&y);
        assert_eq!(tx.mul(&ty).to_element(), &x * &y);
        assert_eq!(tx.delta().to_element(), x.delta());
    }
}
