//! The built-in gallery of small algebras used by tests, the acceptance
//! suite and the `fixtures` CLI command. Basis indices are zero-based in code;
//! comments use the one-based names `e1, e2, …`.

use crate::algebra::{HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::deformations::TruncatedDeformation;
use crate::graded::{GradedAlgebra, GradedBasis, GradedKind};
use crate::linalg::{Matrix, Tensor3};

/// Zero product in dimension 2, identity twist.
pub fn f0(kind: Kind) -> HomAlgebra {
    HomAlgebra::zero(kind, 2)
}

pub fn f0_pair(kind: PairKind) -> HomPairAlgebra {
    HomPairAlgebra::zero(kind, 2)
}

/// Dual numbers: `e1·e1 = e1`, `e1·e2 = e2·e1 = e2`, `e2·e2 = 0`.
pub fn f1_product() -> Tensor3 {
    Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

pub fn f1() -> HomAlgebra {
    HomAlgebra::untwisted(Kind::CommutativeHomAssociative, f1_product()).expect("F1")
}

/// `e1⋄e1 = e2`, everything else zero.
pub fn f2_product() -> Tensor3 {
    Tensor3::from_entries(2, &[(0, 0, 1, 1)])
}

pub fn f2() -> HomAlgebra {
    HomAlgebra::untwisted(Kind::HomZinbiel, f2_product()).expect("F2")
}

/// F2 twisted by `α = diag(2, 4)`: `e1⋄e1 = 4e2`.
pub fn f2_alpha() -> HomAlgebra {
    HomAlgebra::new(Kind::HomZinbiel, Tensor3::from_entries(2, &[(0, 0, 1, 4)]), Matrix::diag_i64(&[2, 4]))
        .expect("F2α")
}

/// `[e1, e2] = e2 = −[e2, e1]`.
pub fn f3_bracket() -> Tensor3 {
    Tensor3::from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

pub fn f3() -> HomAlgebra {
    HomAlgebra::untwisted(Kind::HomLie, f3_bracket()).expect("F3")
}

/// `e1*e2 = e2`, everything else zero.
pub fn f4_product() -> Tensor3 {
    Tensor3::from_entries(2, &[(0, 1, 1, 1)])
}

pub fn f4() -> HomAlgebra {
    HomAlgebra::untwisted(Kind::HomPreLie, f4_product()).expect("F4")
}

/// F1 with the zero bracket, a Hom-Poisson algebra.
pub fn f1_poisson() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPoisson, f1_product(), Tensor3::zeros(2)).expect("F1 Poisson")
}

/// `e1·e1 = 2e2`, zero bracket: the sub-adjacent Hom-Poisson algebra of P1.
pub fn f6() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPoisson, Tensor3::from_entries(2, &[(0, 0, 1, 2)]), Tensor3::zeros(2))
        .expect("F6")
}

/// Negative control: F1's product with F3's bracket. Not Hom-Poisson.
pub fn f7() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPoisson, f1_product(), f3_bracket()).expect("F7")
}

/// `(⋄ = F2, * = 0)`.
pub fn p1() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPrePoisson, f2_product(), Tensor3::zeros(2)).expect("P1")
}

/// `(⋄ = 0, * = F4)`.
pub fn p2() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPrePoisson, Tensor3::zeros(2), f4_product()).expect("P2")
}

/// `(⋄ = F2, * = F4)`; fails Eq. (21), kept as a negative control.
pub fn p3() -> HomPairAlgebra {
    HomPairAlgebra::untwisted(PairKind::HomPrePoisson, f2_product(), f4_product()).expect("P3")
}

/// P1 twisted by `diag(2, 4)`: `e1⋄e1 = 4e2`, `* = 0`.
pub fn p1_alpha() -> HomPairAlgebra {
    HomPairAlgebra::new(
        PairKind::HomPrePoisson,
        Tensor3::from_entries(2, &[(0, 0, 1, 4)]),
        Tensor3::zeros(2),
        Matrix::diag_i64(&[2, 4]),
    )
    .expect("P1α")
}

/// Three-dimensional zinbiel algebra generated by `e1`:
/// `e1⋄e1 = e2`, `e1⋄e2 = 2e3`, `e2⋄e1 = e3`.
pub fn z3() -> HomAlgebra {
    HomAlgebra::untwisted(Kind::HomZinbiel, z3_product()).expect("Z3")
}

pub fn z3_product() -> Tensor3 {
    Tensor3::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 2), (1, 0, 2, 1)])
}

/// Zero-product Poisson algebra of dimension 2 carrying the cocycle [`w1`].
pub fn w1_algebra() -> HomPairAlgebra {
    f0_pair(PairKind::HomPoisson)
}

/// `ω(e1, e2) = 1`.
pub fn w1() -> Matrix {
    Matrix::from_i64(&[&[0, 1], &[-1, 0]])
}

/// Two copies of `[e1, e2] = e2`, Yau-twisted by the swap of the copies:
/// `[e1,e2] = e4`, `[e3,e4] = e2`, `α(e1) = e3`, `α(e2) = e4`.
pub fn w2_algebra() -> HomPairAlgebra {
    let swap = Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let br = Tensor3::from_entries(4, &[(0, 1, 3, 1), (1, 0, 3, -1), (2, 3, 1, 1), (3, 2, 1, -1)]);
    HomPairAlgebra::new(PairKind::HomPoisson, Tensor3::zeros(4), br, swap).expect("W2")
}

/// `ω = e1∧e2 + e3∧e4`.
pub fn w2() -> Matrix {
    Matrix::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

/// Order-2 deformation of the zero zinbiel algebra of dimension 2 with
/// `e1 ≻_1 e1 = e2` and every other term zero.
pub fn d1() -> TruncatedDeformation {
    let succ1 = Tensor3::from_entries(2, &[(0, 0, 1, 1)]);
    TruncatedDeformation::new(f0(Kind::HomZinbiel), vec![Tensor3::zeros(2); 2], vec![succ1, Tensor3::zeros(2)])
        .expect("D1")
}

/// Degrees `(0, 1)`, both products zero.
pub fn g0() -> GradedAlgebra {
    GradedAlgebra::zero(GradedKind::HomPreGerstenhaber, GradedBasis::new(vec![0, 1]))
}

/// F2 placed in degree 0 with `*` zero.
pub fn g1() -> GradedAlgebra {
    GradedAlgebra::untwisted(GradedKind::HomPreGerstenhaber, GradedBasis::concentrated(2), f2_product(), Tensor3::zeros(2))
        .expect("G1")
}

/// Two degree-1 elements with `f1 * f1 = f2` and `⋄` zero.
pub fn g2() -> GradedAlgebra {
    GradedAlgebra::untwisted(
        GradedKind::HomPreGerstenhaber,
        GradedBasis::new(vec![1, 1]),
        Tensor3::zeros(2),
        Tensor3::from_entries(2, &[(0, 0, 1, 1)]),
    )
    .expect("G2")
}

/// The graded fixtures with their gallery names.
pub fn graded_gallery() -> Vec<(&'static str, GradedAlgebra)> {
    vec![("G0", g0()), ("G1", g1()), ("G2", g2())]
}

/// A named algebra of the gallery.
#[derive(Clone, Debug)]
pub enum GalleryItem {
    Single(HomAlgebra),
    Pair(HomPairAlgebra),
}

/// Every algebra fixture with its gallery name.
pub fn gallery() -> Vec<(&'static str, GalleryItem)> {
    use GalleryItem::{Pair, Single};
    vec![
        ("F0", Pair(f0_pair(PairKind::HomPoisson))),
        ("F1", Single(f1())),
        ("F1P", Pair(f1_poisson())),
        ("F2", Single(f2())),
        ("F2a", Single(f2_alpha())),
        ("F3", Single(f3())),
        ("F4", Single(f4())),
        ("F6", Pair(f6())),
        ("F7", Pair(f7())),
        ("P1", Pair(p1())),
        ("P1a", Pair(p1_alpha())),
        ("P2", Pair(p2())),
        ("P3", Pair(p3())),
        ("W2", Pair(w2_algebra())),
        ("Z3", Single(z3())),
    ]
}
