//! The image of `Γ²R → R` for `R = Sym(P)`, the twisted algebra on one
//! generator `x`.

use std::collections::HashMap;

use super::algebra::{Algebra, Element, Monomial, VarTable};
use super::tensor::Tensor;
use crate::linalg::{kernel_of_images, BitVec, Echelon};

/// `Sym(P)`: basis `x^a` and `x^a x'`.
pub fn sym_p() -> Algebra {
    Algebra::new(VarTable::twisting(&["x"]).expect("valid table"))
}

fn basis(d: u32) -> Vec<Monomial> {
    match d {
        0 => vec![Monomial { exps: vec![0], primes: 0 }],
        _ => vec![Monomial { exps: vec![d], primes: 0 }, Monomial { exps: vec![d - 1], primes: 1 }],
    }
}

/// A spanning set, in echelon form, of the image of the multiplication map on
/// the invariants of `u⊗v ↦ v⊗u + v'⊗u'` in `(R⊗R)_d`.
pub fn gamma2_image_degree(alg: &Algebra, d: u32) -> Vec<Element> {
    let pairs: Vec<(Monomial, Monomial)> = (0..=d)
        .flat_map(|i| {
            let right = basis(d - i);
            basis(i).into_iter().flat_map(move |u| right.clone().into_iter().map(move |v| (u.clone(), v)))
        })
        .collect();
    let index: HashMap<Vec<Monomial>, usize> =
        pairs.iter().enumerate().map(|(k, (u, v))| (vec![u.clone(), v.clone()], k)).collect();
    // Images of (τ + 1) on each basis tensor.
    let images: Vec<BitVec> = pairs
        .iter()
        .map(|(u, v)| {
            let ue = alg.monomial(u.clone());
            let ve = alg.monomial(v.clone());
            let swapped = Tensor::pure(&[&ve, &ue]).unwrap();
            let twisted = Tensor::pure(&[&ve.delta(), &ue.delta()]).unwrap();
            let fixed = Tensor::pure(&[&ue, &ve]).unwrap();
            let t = swapped.add(&twisted).add(&fixed);
            BitVec::from_indices(pairs.len(), t.terms().iter().map(|w| index[w]))
        })
        .collect();
    let target = basis(d);
    let mut span = Echelon::new(target.len());
    let mut out = Vec::new();
    for inv in kernel_of_images(&images, pairs.len()) {
        let mut prod = alg.zero();
        for k in inv.ones() {
            let (u, v) = &pairs[k];
            prod = &prod + &(&alg.monomial(u.clone()) * &alg.monomial(v.clone()));
        }
        let coords = BitVec::from_indices(
            target.len(),
            prod.terms().iter().map(|m| target.iter().position(|t| t == m).expect("degree d")),
        );
        if span.insert(coords) {
            out.push(prod);
        }
    }
    out
}

/// `gamma2_image_degree` for each degree `0..=max_degree`.
pub fn gamma2_image(max_degree: u32) -> Vec<Vec<Element>> {
    let alg = sym_p();
    (0..=max_degree).map(|d| gamma2_image_degree(&alg, d)).collect()
}
