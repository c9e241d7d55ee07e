mod common;

use common::{random_block_matrix, random_closed, random_element, random_monomial, test_algebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ver4plus::delta::{
    det, det_block_kernel_check, det_representative, same_span, Algebra, Coproduct, Element,
    EndAlgebra, ExpansionOrder, Family, Matrix, Monomial, Symbol, Tensor,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_word(rng: &mut impl Rng, alg: &Algebra, len: usize) -> Vec<Symbol> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(0..alg.len());
            if alg.is_twisting(i) && rng.gen_bool(0.25) {
                Symbol::prime(i)
            } else {
                Symbol::plain(i)
            }
        })
        .collect()
}

#[test]
fn rewriting_agrees_with_fast_product() {
    let alg = test_algebra(3, 1, 12);
    let mut r = rng(1);
    for _ in 0..400 {
        let len = r.gen_range(0..=8);
        let word = random_word(&mut r, &alg, len);
        let fast = word.iter().fold(alg.one(), |acc, &s| &acc * &alg.sym(s));
        assert_eq!(alg.normalize(&word).unwrap(), fast, "{word:?}");
    }
}

#[test]
fn rewriting_is_confluent() {
    let alg = test_algebra(3, 1, 12);
    let mut r = rng(21);
    for _ in 0..200 {
        let lens = [0; 3].map(|_| r.gen_range(0..=3));
        let [u, v, w] = lens.map(|l| random_word(&mut r, &alg, l));
        let [nu, nv, nw] = [&u, &v, &w].map(|x| alg.normalize(x).unwrap());
        let whole = alg.normalize(&[u, v, w].concat()).unwrap();
        assert_eq!(whole, &(&nu * &nv) * &nw);
        assert_eq!(whole, &nu * &(&nv * &nw));
    }
}

#[test]
fn normal_forms_are_fixed_points() {
    let alg = test_algebra(3, 1, 12);
    let mut r = rng(2);
    for _ in 0..200 {
        let m = random_monomial(&mut r, &alg, 0, 6, false);
        assert_eq!(alg.normalize(&m.word()).unwrap(), alg.monomial(m.clone()));
    }
}

#[test]
fn product_is_associative() {
    let alg = test_algebra(3, 1, 9);
    let mut r = rng(3);
    for _ in 0..200 {
        let [a, b, c] = [0; 3].map(|_| random_element(&mut r, &alg, 0, 3, 3));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}

#[test]
fn twisted_commutativity() {
    let alg = test_algebra(3, 2, 10);
    let mut r = rng(4);
    for _ in 0..300 {
        let u = random_element(&mut r, &alg, 0, 4, 3);
        let v = random_element(&mut r, &alg, 0, 4, 3);
        assert_eq!(&(&u * &v) + &(&v * &u), &u.delta() * &v.delta(), "u = {u}, v = {v}");
    }
}

#[test]
fn derivation_laws() {
    let alg = test_algebra(3, 2, 10);
    let mut r = rng(5);
    for _ in 0..300 {
        let u = random_element(&mut r, &alg, 0, 4, 3);
        let v = random_element(&mut r, &alg, 0, 4, 3);
        assert!(u.delta().delta().is_zero());
        assert_eq!((&u * &v).delta(), &(&u.delta() * &v) + &(&u * &v.delta()));
        assert!(u.pow(2).is_delta_closed(), "u = {u}");
        let z = random_closed(&mut r, &alg, 0, 3, 3);
        let c = &z + &u.delta();
        assert!(c.is_delta_closed());
        assert_eq!(&c * &v, &v * &c, "closed {c} does not commute with {v}");
    }
}

#[test]
fn truncation_is_an_ideal() {
    let alg = test_algebra(2, 1, 4);
    let mut r = rng(6);
    for _ in 0..100 {
        let u = random_element(&mut r, &alg, 0, 4, 3);
        let v = random_element(&mut r, &alg, 0, 4, 3);
        assert!((&u * &v).max_degree().unwrap_or(0) <= 4);
    }
}

#[test]
fn parse_and_display_round_trip() {
    let alg = test_algebra(3, 1, 12);
    let mut r = rng(7);
    for _ in 0..100 {
        let u = random_element(&mut r, &alg, 0, 5, 4);
        assert_eq!(alg.parse(&u.to_string()).unwrap(), u);
    }
}

fn coalgebras() -> Vec<EndAlgebra> {
    [(1, 0), (0, 1), (1, 1)].into_iter().map(|(m, n)| EndAlgebra::new(m, n).unwrap()).collect()
}

fn test_monomials(end: &EndAlgebra, max_d: u32) -> Vec<Monomial> {
    (0..=max_d).flat_map(|d| end.monomials(d)).collect()
}

fn apply_left(end: &EndAlgebra, kind: Coproduct, t: &Tensor) -> Tensor {
    t.map_factor(0, 2, |m| end.coproduct_monomial(kind, m))
}

fn apply_right(end: &EndAlgebra, kind: Coproduct, t: &Tensor, pos: usize) -> Tensor {
    t.map_factor(pos, 2, |m| end.coproduct_monomial(kind, m))
}

#[test]
fn coassociative_counital_and_delta_compatible() {
    for end in coalgebras() {
        let max_d = if end.symbols().len() > 4 { 2 } else { 3 };
        for mono in test_monomials(&end, max_d) {
            let x = end.algebra().monomial(mono.clone());
            for kind in [Coproduct::Times, Coproduct::Plus] {
                let dx = end.coproduct(kind, &x);
                assert_eq!(apply_left(&end, kind, &dx), apply_right(&end, kind, &dx, 1), "{kind:?} {x}");
                let left = dx.contract_factor(0, |m| end.counit_monomial(kind, m));
                let right = dx.contract_factor(1, |m| end.counit_monomial(kind, m));
                assert_eq!(left.to_element(), x, "{kind:?} left counit on {x}");
                assert_eq!(right.to_element(), x, "{kind:?} right counit on {x}");
                assert_eq!(end.coproduct(kind, &x.delta()), dx.delta(), "{kind:?} δ on {x}");
            }
        }
    }
}

#[test]
fn coproducts_are_multiplicative() {
    for end in coalgebras() {
        let alg = end.algebra().clone();
        let mut r = rng(8);
        for _ in 0..40 {
            let a = alg.monomial(random_monomial(&mut r, &alg, 0, 2, false));
            let b = alg.monomial(random_monomial(&mut r, &alg, 0, 2, false));
            for kind in [Coproduct::Times, Coproduct::Plus] {
                let lhs = end.coproduct(kind, &(&a * &b));
                let rhs = end.coproduct(kind, &a).mul(&end.coproduct(kind, &b));
                assert_eq!(lhs, rhs, "{kind:?} on {a} · {b}");
            }
        }
    }
}

fn el(alg: &Algebra, m: &Monomial) -> Element {
    alg.monomial(m.clone())
}

/// `x1⊗x2⊗x3⊗x4 ↦ x1⊗x3⊗x2x4 + x1⊗δx3⊗(δx2)x4`.
fn regroup_left(t: &Tensor) -> Tensor {
    let alg = t.algebra();
    let mut out = Tensor::zero(alg, 3);
    for v in t.terms() {
        let [x1, x2, x3, x4] = [0, 1, 2, 3].map(|k| el(alg, &v[k]));
        out.add_assign(&Tensor::pure(&[&x1, &x3, &(&x2 * &x4)]).unwrap());
        out.add_assign(&Tensor::pure(&[&x1, &x3.delta(), &(&x2.delta() * &x4)]).unwrap());
    }
    out
}

/// `x1⊗x2⊗x3⊗x4 ↦ x1x3⊗x2⊗x4 + x1·δx3⊗δx2⊗x4`.
fn regroup_right(t: &Tensor) -> Tensor {
    let alg = t.algebra();
    let mut out = Tensor::zero(alg, 3);
    for v in t.terms() {
        let [x1, x2, x3, x4] = [0, 1, 2, 3].map(|k| el(alg, &v[k]));
        out.add_assign(&Tensor::pure(&[&(&x1 * &x3), &x2, &x4]).unwrap());
        out.add_assign(&Tensor::pure(&[&(&x1 * &x3.delta()), &x2.delta(), &x4]).unwrap());
    }
    out
}

#[test]
fn composition_distributes_over_addition() {
    for end in coalgebras() {
        for mono in test_monomials(&end, 2) {
            let x = end.algebra().monomial(mono);
            let times = end.delta_times(&x);
            let plus = end.delta_plus(&x);
            let doubled = apply_right(&end, Coproduct::Times, &apply_left(&end, Coproduct::Times, &plus), 2);
            let lhs = apply_left(&end, Coproduct::Plus, &times);
            assert_eq!(lhs, regroup_left(&doubled), "left distributivity on {x}");
            let rhs = apply_right(&end, Coproduct::Plus, &times, 1);
            assert_eq!(rhs, regroup_right(&doubled), "right distributivity on {x}");
        }
    }
}

#[test]
fn primitives_are_primitive_and_closed_under_times() {
    let end = EndAlgebra::new(1, 1).unwrap();
    let alg = end.algebra().clone();
    for d in [1, 2, 4] {
        let basis = end.primitives(d).unwrap();
        for p in &basis {
            let want = Tensor::pure(&[p, &alg.one()]).unwrap().add(&Tensor::pure(&[&alg.one(), p]).unwrap());
            assert_eq!(end.delta_plus(p), want, "{p}");
        }
        assert!(end.subcoalgebra_check(d).unwrap());
    }
    let squares = vec![end.gen(Family::F, 0, 0).pow(2)];
    assert!(same_span(&end.primitives(2).unwrap(), &squares));
    let fourth: Vec<Element> = [Family::F, Family::B, Family::C, Family::D, Family::E]
        .into_iter()
        .map(|f| end.gen(f, 0, 0).pow(4))
        .collect();
    assert!(same_span(&end.primitives(4).unwrap(), &fourth));
}

fn is_primitive(end: &EndAlgebra, x: &Element) -> bool {
    let one = end.algebra().one();
    let want = Tensor::pure(&[x, &one]).unwrap().add(&Tensor::pure(&[&one, x]).unwrap());
    end.delta_plus(x) == want
}

#[test]
fn primitivity_laws() {
    for end in coalgebras() {
        let alg = end.algebra().clone();
        let mut closed_seen = 0;
        for s in end.symbols() {
            let y = alg.sym(s);
            assert!(is_primitive(&end, &y));
            assert!(is_primitive(&end, &y.pow(4)), "{y}⁴");
            if y.is_delta_closed() {
                closed_seen += 1;
                assert!(is_primitive(&end, &y.pow(2)), "{y}²");
            } else {
                assert!(!is_primitive(&end, &y.pow(2)), "{y}²");
            }
        }
        assert!(closed_seen > 0);
        for p in end.primitives(2).unwrap() {
            assert!(p.is_delta_closed());
            assert!(is_primitive(&end, &p.pow(2)), "({p})²");
        }
    }
}

#[test]
fn primitive_dimensions_for_two_by_one() {
    let end = EndAlgebra::new(2, 1).unwrap();
    assert_eq!(end.primitives(1).unwrap().len(), end.symbols().len());
    assert_eq!(end.primitives(2).unwrap().len(), 4);
    assert_eq!(end.primitives(3).unwrap().len(), 0);
}

fn orders(n: usize) -> Vec<ExpansionOrder> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(ExpansionOrder::Rows(perm.clone()));
        out.push(ExpansionOrder::Columns(perm.clone()));
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

#[test]
fn determinant_is_well_defined_modulo_delta_ideal() {
    let alg = test_algebra(4, 1, 12);
    let mut r = rng(9);
    for _ in 0..30 {
        let n = r.gen_range(1..=3);
        let mut m = Matrix::zeros(&alg, n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = random_element(&mut r, &alg, 0, 2, 2);
            }
        }
        let base = det(&m).unwrap();
        for ord in orders(n) {
            let rep = det_representative(&m, &ord).unwrap();
            assert!((&rep + &base).in_delta_ideal(), "{ord:?}");
        }
    }
}

#[test]
fn block_determinant_is_closed_and_represents_det() {
    let alg = test_algebra(3, 2, 6);
    let mut r = rng(11);
    for k in 0..60 {
        let (m, n) = [(1, 1), (0, 1), (2, 1), (1, 2), (0, 2)][k % 5];
        let bm = random_block_matrix(&mut r, &alg, m, n);
        let (rep, closed) = det_block_kernel_check(&bm).unwrap();
        assert!(closed, "δ(det) = {}", rep.delta());
        assert!((&rep + &det(&bm.full()).unwrap()).in_delta_ideal());
    }
}

#[test]
fn block_matrices_form_a_monoid() {
    let alg = test_algebra(3, 2, 6);
    let mut r = rng(12);
    for _ in 0..20 {
        let x = random_block_matrix(&mut r, &alg, 1, 1);
        let y = random_block_matrix(&mut r, &alg, 1, 1);
        let z = random_block_matrix(&mut r, &alg, 1, 1);
        let id = ver4plus::delta::BlockMatrix::identity(&alg, 1, 1);
        assert_eq!(x.mul(&id).unwrap(), x);
        assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }
}
