//! Matrices over a commutative algebra in Ver₄⁺: products, determinant
//! representatives, the GL(m+nP) block layout and the Frobenius projection.

use std::fmt;

use super::algebra::{Algebra, Element};
use crate::error::{Error, Result};

/// A dense matrix of algebra elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn zeros(alg: &Algebra, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![alg.zero(); rows * cols] }
    }

    pub fn identity(alg: &Algebra, n: usize) -> Self {
        let mut m = Self::zeros(alg, n, n);
        for i in 0..n {
            m[(i, i)] = alg.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data: Vec<Element> = rows.into_iter().flatten().collect();
        if let Some(first) = data.first() {
            if data.iter().any(|e| e.algebra() != first.algebra()) {
                return Err(Error::TableMismatch);
            }
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Parses a row-major grid of element strings.
    pub fn parse(alg: &Algebra, rows: &[Vec<&str>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| alg.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Element]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise `δ`.
    pub fn prime(&self) -> Matrix {
        self.map(Element::delta)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let alg = self.data.first().or(other.data.first()).map(|e| e.algebra().clone());
        let Some(alg) = alg else {
            return Err(Error::Shape("product of empty matrices".into()));
        };
        let mut out = Matrix::zeros(&alg, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = alg.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self[(i, k)].mul(&other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let data = (r0..r0 + rows)
            .flat_map(|i| (c0..c0 + cols).map(move |j| (i, j)))
            .map(|ij| self[ij].clone())
            .collect();
        Matrix { rows, cols, data }
    }

    fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Inverse of `I + N` with `N` having no constant terms, as the geometric
    /// series `Σ N^k`; requires the series to terminate, which holds in any
    /// truncated algebra.
    pub fn inverse_unipotent(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let alg = self.data.first().map(|e| e.algebra().clone()).ok_or_else(|| {
            Error::Shape("inverse of an empty matrix".into())
        })?;
        let id = Matrix::identity(&alg, n);
        let nil = self.add(&id)?;
        if nil.data.iter().any(Element::constant) {
            return Err(Error::NotInvertible("constant part is not the identity".into()));
        }
        let bound = alg.max_degree().ok_or_else(|| {
            Error::NotInvertible("geometric series needs a truncated algebra".into())
        })?;
        let mut inv = id.clone();
        let mut power = id;
        for _ in 0..=bound {
            power = power.mul(&nil)?;
            if power.data.iter().all(Element::is_zero) {
                return Ok(inv);
            }
            inv = inv.add(&power)?;
        }
        Err(Error::NotInvertible("geometric series did not terminate".into()))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Element;

    fn index(&self, (i, j): (usize, usize)) -> &Element {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Element {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(Element::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The order in which Leibniz products are multiplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpansionOrder {
    /// `∏_k M[r_k, σ(r_k)]` for rows `r_0, r_1, …` in the given order.
    Rows(Vec<usize>),
    /// `∏_k M[σ⁻¹(c_k), c_k]` for columns `c_0, c_1, …` in the given order.
    Columns(Vec<usize>),
}

impl ExpansionOrder {
    pub fn natural(n: usize) -> Self {
        ExpansionOrder::Rows((0..n).collect())
    }

    fn order(&self) -> &[usize] {
        match self {
            ExpansionOrder::Rows(v) | ExpansionOrder::Columns(v) => v,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A determinant representative: the Leibniz sum with each product taken in
/// the given order. Representatives for different orders agree modulo the
/// ideal generated by the image of `δ`.
pub fn det_representative(m: &Matrix, order: &ExpansionOrder) -> Result<Element> {
    if !m.is_square() {
        return Err(Error::Shape(format!("det of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let ord = order.order();
    let mut sorted = ord.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument(format!("{ord:?} is not a permutation of 0..{n}")));
    }
    let Some(alg) = m.data.first().map(|e| e.algebra().clone()) else {
        return Err(Error::Shape("det of an empty matrix".into()));
    };
    let mut acc = alg.zero();
    for sigma in permutations(n) {
        let mut inv = vec![0; n];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        let mut prod = alg.one();
        for &k in ord {
            let entry = match order {
                ExpansionOrder::Rows(_) => &m[(k, sigma[k])],
                ExpansionOrder::Columns(_) => &m[(inv[k], k)],
            };
            prod = prod.mul(entry)?;
            if prod.is_zero() {
                break;
            }
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

/// `det_representative` in natural row order.
pub fn det(m: &Matrix) -> Result<Element> {
    det_representative(m, &ExpansionOrder::natural(m.rows))
}

/// A point of GL(m+nP) given by its blocks; the full matrix is
///
/// ```text
/// [ F   C   C'     ]
/// [ B'  D   D'     ]
/// [ B   E   D + E' ]
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    pub m: usize,
    pub n: usize,
    /// `m × m`, entries in `ker δ`.
    pub f: Matrix,
    /// `m × n`.
    pub c: Matrix,
    /// `n × m`.
    pub b: Matrix,
    /// `n × n`.
    pub d: Matrix,
    /// `n × n`.
    pub e: Matrix,
}

impl BlockMatrix {
    pub fn new(f: Matrix, c: Matrix, b: Matrix, d: Matrix, e: Matrix) -> Result<Self> {
        let m = f.rows;
        let n = d.rows;
        let shapes = [
            (&f, m, m, "F"),
            (&c, m, n, "C"),
            (&b, n, m, "B"),
            (&d, n, n, "D"),
            (&e, n, n, "E"),
        ];
        for (x, r, k, name) in shapes {
            if (x.rows, x.cols) != (r, k) {
                return Err(Error::Shape(format!("{name} is {}x{}, expected {r}x{k}", x.rows, x.cols)));
            }
        }
        if f.data.iter().any(|x| !x.is_delta_closed()) {
            return Err(Error::InvalidArgument("F has entries outside ker δ".into()));
        }
        Ok(BlockMatrix { m, n, f, c, b, d, e })
    }

    pub fn identity(alg: &Algebra, m: usize, n: usize) -> Self {
        BlockMatrix {
            m,
            n,
            f: Matrix::identity(alg, m),
            c: Matrix::zeros(alg, m, n),
            b: Matrix::zeros(alg, n, m),
            d: Matrix::identity(alg, n),
            e: Matrix::zeros(alg, n, n),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.f
            .data
            .first()
            .or(self.d.data.first())
            .map(|e| e.algebra().clone())
            .expect("nonempty block matrix")
    }

    /// The `(m+2n) × (m+2n)` matrix.
    pub fn full(&self) -> Matrix {
        let (m, n) = (self.m, self.n);
        let mut out = Matrix::zeros(&self.algebra(), m + 2 * n, m + 2 * n);
        out.set_block(0, 0, &self.f);
        out.set_block(0, m, &self.c);
        out.set_block(0, m + n, &self.c.prime());
        out.set_block(m, 0, &self.b.prime());
        out.set_block(m, m, &self.d);
        out.set_block(m, m + n, &self.d.prime());
        out.set_block(m + n, 0, &self.b);
        out.set_block(m + n, m, &self.e);
        out.set_block(m + n, m + n, &self.d.add(&self.e.prime()).expect("same shape"));
        out
    }

    /// Reads the blocks back from a full matrix, checking the derived blocks.
    pub fn from_full(full: &Matrix, m: usize, n: usize) -> Result<Self> {
        if (full.rows, full.cols) != (m + 2 * n, m + 2 * n) {
            return Err(Error::Shape(format!("expected a {0}x{0} matrix", m + 2 * n)));
        }
        let bm = BlockMatrix::new(
            full.block(0, 0, m, m),
            full.block(0, m, m, n),
            full.block(m + n, 0, n, m),
            full.block(m, m, n, n),
            full.block(m + n, m, n, n),
        )?;
        if bm.full() != *full {
            return Err(Error::Shape("matrix is not of GL(m+nP) block form".into()));
        }
        Ok(bm)
    }

    /// The group product, computed on full matrices.
    pub fn mul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::Shape("block shapes differ".into()));
        }
        BlockMatrix::from_full(&self.full().mul(&other.full())?, self.m, self.n)
    }
}

/// A `ker δ` representative of the determinant of a block matrix:
/// `det F · det(I + (ÊD̂⁻¹)') · (det D̂)²` with `D̂ = D + B'F⁻¹C` and
/// `Ê = E + BF⁻¹C`. Returns it with whether `δ` kills it.
pub fn det_block_kernel_check(bm: &BlockMatrix) -> Result<(Element, bool)> {
    let alg = bm.algebra();
    let (d_hat, e_hat, det_f) = if bm.m > 0 {
        let f_inv = bm.f.inverse_unipotent()?;
        let d_hat = bm.d.add(&bm.b.prime().mul(&f_inv)?.mul(&bm.c)?)?;
        let e_hat = bm.e.add(&bm.b.mul(&f_inv)?.mul(&bm.c)?)?;
        (d_hat, e_hat, det(&bm.f)?)
    } else {
        (bm.d.clone(), bm.e.clone(), alg.one())
    };
    let rep = if bm.n > 0 {
        let d_inv = d_hat.inverse_unipotent()?;
        let twist = Matrix::identity(&alg, bm.n).add(&e_hat.mul(&d_inv)?.prime())?;
        let dd = det(&d_hat)?;
        det_f.mul(&det(&twist)?)?.mul(&dd.mul(&dd)?)?
    } else {
        det_f
    };
    let closed = rep.is_delta_closed();
    Ok((rep, closed))
}

/// The projection onto the reductive part of the Frobenius kernel quotient:
/// entrywise squares of `F` and entrywise fourth powers of `D`.
pub fn frobenius_project(bm: &BlockMatrix) -> (Matrix, Matrix) {
    (bm.f.map(|x| x.pow(2)), bm.d.map(|x| x.pow(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::algebra::VarTable;

    fn abcd() -> Algebra {
        Algebra::new(VarTable::twisting(&["a", "b", "c", "d"]).unwrap())
    }

    fn gl2p_matrix(a: &Algebra) -> Matrix {
        Matrix::parse(
            a,
            &[
                vec!["a", "b", "a'", "b'"],
                vec!["c", "d", "c'", "d'"],
                vec!["0", "0", "a", "b"],
                vec!["0", "0", "c", "d"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        let a = abcd();
        assert!(det(&Matrix::identity(&a, 3)).unwrap().is_one());
        let m = Matrix::parse(&a, &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        assert_eq!(det(&m).unwrap(), a.parse("a*d + b*c").unwrap());
    }

    #[test]
    fn gl2p_representatives() {
        let a = abcd();
        let m = gl2p_matrix(&a);
        let first = det_representative(&m, &ExpansionOrder::Rows(vec![0, 1, 2, 3])).unwrap();
        let second = det_representative(&m, &ExpansionOrder::Rows(vec![0, 1, 3, 2])).unwrap();
        let ad_bc = a.parse("a*d + b*c").unwrap();
        assert_eq!(first, &ad_bc * &ad_bc);
        assert_eq!(second, &ad_bc * &a.parse("d*a + c*b").unwrap());
        assert!(first.is_delta_closed());
        assert!(!second.is_delta_closed());
        let diff = &first + &second;
        assert!(diff.in_delta_ideal());
        assert_eq!(diff, &ad_bc * &a.parse("a'*d' + b'*c'").unwrap());
    }

    #[test]
    fn block_layout_round_trips() {
        let a = abcd();
        let one = |s: &str| Matrix::parse(&a, &[vec![s]]).unwrap();
        let f = Matrix::identity(&a, 1);
        let bm = BlockMatrix::new(f, one("c"), one("b"), one("1 + a"), one("d")).unwrap();
        let full = bm.full();
        assert_eq!(full[(1, 0)], a.parse("b'").unwrap());
        assert_eq!(full[(2, 2)], a.parse("1 + a + d'").unwrap());
        assert_eq!(BlockMatrix::from_full(&full, 1, 1).unwrap(), bm);
    }

    #[test]
    fn block_check_examples() {
        let a = Algebra::new(VarTable::twisting(&["u", "v"]).unwrap().truncated(6));
        let (rep, ok) = det_block_kernel_check(&BlockMatrix::identity(&a, 1, 1)).unwrap();
        assert!(rep.is_one() && ok);
        let one = |s: &str| Matrix::parse(&a, &[vec![s]]).unwrap();
        let empty = Matrix::zeros(&a, 0, 0);
        let bm = BlockMatrix::new(
            empty,
            Matrix::zeros(&a, 0, 1),
            Matrix::zeros(&a, 1, 0),
            one("1 + u"),
            one("v"),
        )
        .unwrap();
        let (rep, ok) = det_block_kernel_check(&bm).unwrap();
        let d_inv = one("1 + u").inverse_unipotent().unwrap()[(0, 0)].clone();
        let expect = &(&a.one() + &(&a.parse("v").unwrap() * &d_inv).delta()) * &a.parse("1 + u").unwrap().pow(2);
        assert_eq!(rep, expect);
        assert!(ok);
    }

    #[test]
    fn unipotent_inverse() {
        let a = Algebra::new(VarTable::twisting(&["u", "v"]).unwrap().truncated(6));
        let m = Matrix::parse(&a, &[vec!["1 + u", "v"], vec!["u*v", "1 + v'"]]).unwrap();
        let inv = m.inverse_unipotent().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&a, 2));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(&a, 2));
        let bad = Matrix::parse(&a, &[vec!["u"]]).unwrap();
        assert!(matches!(bad.inverse_unipotent(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn frobenius_identity() {
        let a = abcd();
        let (f, d) = frobenius_project(&BlockMatrix::identity(&a, 2, 1));
        assert_eq!(f, Matrix::identity(&a, 2));
        assert_eq!(d, Matrix::identity(&a, 1));
    }
}
