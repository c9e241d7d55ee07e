#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use ver4plus::delta::{Algebra, BlockMatrix, Element, GenKind, Matrix, Monomial, VarTable};
use ver4plus::{GlpLabel, Partition, Weight};

/// Nonempty 2-restricted partitions are built bottom-up: the last part is 1
/// and each part above exceeds the one below by 0 or 1.
pub fn two_restricted(steps: &[bool]) -> Partition {
    if steps.is_empty() {
        return Partition::empty();
    }
    let mut parts = vec![1usize];
    for &s in &steps[1..] {
        let below = *parts.last().unwrap();
        parts.push(below + usize::from(s));
    }
    parts.reverse();
    Partition::new(parts).unwrap()
}

pub fn arb_two_restricted(max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|s| two_restricted(&s))
}

pub fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

pub fn arb_label() -> impl Strategy<Value = GlpLabel> {
    (-3i64..=3, 0u8..4, any::<bool>())
        .prop_map(|(q, r, xi)| GlpLabel::new(q, r, xi && r != 2).unwrap())
}

/// Simple polynomial GL(P) labels of degree `ell`: `T_i (i ≥ 1)`,
/// `χ^i (i ≥ 0)`, `ξχ^i (i ≥ 1)`, `ξT_{4i+1} (i ≥ 1)`, `ξT_{4i+3} (i ≥ 0)`.
pub fn glp_list(ell: usize) -> Vec<GlpLabel> {
    let q = (ell / 4) as i64;
    let r = ell % 4;
    let mut out = Vec::new();
    // T_ell, which is χ^q when r = 0.
    out.push(GlpLabel::t(ell as u64));
    match r {
        0 if q >= 1 => out.push(GlpLabel::new(q, 0, true).unwrap()),
        1 if q >= 1 => out.push(GlpLabel::new(q, 1, true).unwrap()),
        3 => out.push(GlpLabel::new(q, 3, true).unwrap()),
        _ => {}
    }
    out
}

/// All GL(P) labels of degree `ell`.
pub fn all_labels(ell: usize) -> Vec<GlpLabel> {
    let (q, r) = ((ell / 4) as i64, (ell % 4) as u8);
    let mut v = vec![GlpLabel::new(q, r, false).unwrap()];
    if r != 2 {
        v.push(GlpLabel::new(q, r, true).unwrap());
    }
    v
}

/// Highest weights `a|T` of simple polynomial GL(1+P)-representations of
/// degree `d`: `L(a|T)` for `a ≥ 2`, `T ∉ {ξ, ξT₁}`; `L(1|T)` for
/// `T = T_k, ξχ^k, χ^k`; `L(0|χ^k)`.
pub fn gl1p_list(d: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 0..=d {
        for t in all_labels(d - a) {
            let xi_small = t.xi() && t.q() == 0 && t.r() <= 1;
            let ok = match a {
                0 => t.is_chi_power(),
                1 => !t.xi() || (t.r() == 0 && t.q() >= 1),
                _ => !xi_small,
            };
            if ok {
                out.push(Weight::new(vec![a as i64], vec![t]));
            }
        }
    }
    out
}

/// A twisted algebra with `tw` twisting generators `u1, u2, …` and `cl`
/// closed generators `f1, f2, …`, truncated above degree `trunc`.
pub fn test_algebra(tw: usize, cl: usize, trunc: u32) -> Algebra {
    let mut gens: Vec<(String, GenKind)> =
        (1..=tw).map(|i| (format!("u{i}"), GenKind::Twisting)).collect();
    gens.extend((1..=cl).map(|i| (format!("f{i}"), GenKind::Closed)));
    Algebra::new(VarTable::new(gens).unwrap().truncated(trunc))
}

pub fn random_monomial(rng: &mut impl Rng, alg: &Algebra, min_deg: u32, max_deg: u32, closed_only: bool) -> Monomial {
    let n = alg.len();
    let allowed: Vec<usize> = (0..n).filter(|&i| !closed_only || !alg.is_twisting(i)).collect();
    let target = rng.gen_range(min_deg..=max_deg);
    let mut m = Monomial::one(n);
    for _ in 0..target {
        let i = allowed[rng.gen_range(0..allowed.len())];
        if alg.is_twisting(i) && !m.has_prime(i) && rng.gen_bool(0.3) {
            m.primes |= 1 << i;
        } else {
            m.exps[i] += 1;
        }
    }
    m
}

pub fn random_element(rng: &mut impl Rng, alg: &Algebra, min_deg: u32, max_deg: u32, terms: usize) -> Element {
    let k = rng.gen_range(0..=terms);
    Element::from_terms(alg, (0..k).map(|_| random_monomial(rng, alg, min_deg, max_deg, false)))
}

pub fn random_closed(rng: &mut impl Rng, alg: &Algebra, min_deg: u32, max_deg: u32, terms: usize) -> Element {
    let k = rng.gen_range(0..=terms);
    Element::from_terms(alg, (0..k).map(|_| random_monomial(rng, alg, min_deg, max_deg, true)))
}

fn random_matrix<R: Rng>(rng: &mut R, alg: &Algebra, r: usize, c: usize, mut f: impl FnMut(&mut R) -> Element) -> Matrix {
    let mut m = Matrix::zeros(alg, r, c);
    for i in 0..r {
        for j in 0..c {
            m[(i, j)] = f(rng);
        }
    }
    m
}

/// A point of GL(m+nP) over `alg` with `F = I + closed nilpotent` and
/// `D = I + nilpotent`.
pub fn random_block_matrix(rng: &mut impl Rng, alg: &Algebra, m: usize, n: usize) -> BlockMatrix {
    let id_m = Matrix::identity(alg, m);
    let id_n = Matrix::identity(alg, n);
    let f = id_m.add(&random_matrix(rng, alg, m, m, |r| random_closed(r, alg, 1, 2, 2))).unwrap();
    let d = id_n.add(&random_matrix(rng, alg, n, n, |r| random_element(r, alg, 1, 2, 2))).unwrap();
    let c = random_matrix(rng, alg, m, n, |r| random_element(r, alg, 0, 2, 2));
    let b = random_matrix(rng, alg, n, m, |r| random_element(r, alg, 0, 2, 2));
    let e = random_matrix(rng, alg, n, n, |r| random_element(r, alg, 0, 2, 2));
    BlockMatrix::new(f, c, b, d, e).unwrap()
}
