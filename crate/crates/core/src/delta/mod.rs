//! Symbolic algebra over F₂ for commutative algebras in Ver₄⁺: the
//! derivation `δ`, the rule `ab = ba + a'b'`, matrices and determinants, the
//! coproducts on `Sym(End(X))` and divided-power images.

pub mod algebra;
pub mod coalgebra;
pub mod gamma;
pub mod matrix;
pub mod tensor;

pub use algebra::{Algebra, Element, GenKind, Monomial, Symbol, VarTable};
pub use coalgebra::{is_subcoalgebra, same_span, Coproduct, EndAlgebra, Family};
pub use gamma::{gamma2_image, gamma2_image_degree, sym_p};
pub use matrix::{
    det, det_block_kernel_check, det_representative, frobenius_project, BlockMatrix,
    ExpansionOrder, Matrix,
};
pub use tensor::Tensor;
