//! The algebra data model: one- and two-product Hom-algebras given by
//! structure constants and a twist map.

use std::fmt;
use std::str::FromStr;

use crate::check::{CheckOptions, CheckReport, Scan};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};

/// Kind tag of a single-product Hom-algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    HomAssociative,
    CommutativeHomAssociative,
    HomLie,
    HomPreLie,
    HomZinbiel,
    HomPermutative,
    HomLeibniz,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::HomAssociative,
        Kind::CommutativeHomAssociative,
        Kind::HomLie,
        Kind::HomPreLie,
        Kind::HomZinbiel,
        Kind::HomPermutative,
        Kind::HomLeibniz,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::HomAssociative => "hom-associative",
            Kind::CommutativeHomAssociative => "commutative-hom-associative",
            Kind::HomLie => "hom-lie",
            Kind::HomPreLie => "hom-pre-lie",
            Kind::HomZinbiel => "hom-zinbiel",
            Kind::HomPermutative => "hom-permutative",
            Kind::HomLeibniz => "hom-leibniz",
        }
    }

    /// Key of the product in serialized documents.
    pub fn product_name(self) -> &'static str {
        match self {
            Kind::HomAssociative | Kind::CommutativeHomAssociative => "dot",
            Kind::HomLie => "bracket",
            Kind::HomPreLie => "prelie",
            Kind::HomZinbiel => "zinbiel",
            Kind::HomPermutative => "perm",
            Kind::HomLeibniz => "leibniz",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown single-product kind {s:?}")))
    }
}

/// Kind tag of a two-product Hom-algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    /// `(·, [·,·])`
    HomPoisson,
    /// `(⋄, *)`
    HomPrePoisson,
    /// `(≺, ≻)`
    HomDendriform,
    /// `(•, {·,·})`
    DualHomPrePoisson,
}

impl PairKind {
    pub const ALL: [PairKind; 4] =
        [PairKind::HomPoisson, PairKind::HomPrePoisson, PairKind::HomDendriform, PairKind::DualHomPrePoisson];

    pub fn tag(self) -> &'static str {
        match self {
            PairKind::HomPoisson => "hom-poisson",
            PairKind::HomPrePoisson => "hom-pre-poisson",
            PairKind::HomDendriform => "hom-dendriform",
            PairKind::DualHomPrePoisson => "dual-hom-pre-poisson",
        }
    }

    pub fn product_names(self) -> (&'static str, &'static str) {
        match self {
            PairKind::HomPoisson => ("dot", "bracket"),
            PairKind::HomPrePoisson => ("zinbiel", "prelie"),
            PairKind::HomDendriform => ("prec", "succ"),
            PairKind::DualHomPrePoisson => ("perm", "leibniz"),
        }
    }

    /// Single-product kinds of the two halves, where they form structures on their own.
    pub fn components(self) -> Option<(Kind, Kind)> {
        match self {
            PairKind::HomPoisson => Some((Kind::CommutativeHomAssociative, Kind::HomLie)),
            PairKind::HomPrePoisson => Some((Kind::HomZinbiel, Kind::HomPreLie)),
            PairKind::DualHomPrePoisson => Some((Kind::HomPermutative, Kind::HomLeibniz)),
            PairKind::HomDendriform => None,
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PairKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PairKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown two-product kind {s:?}")))
    }
}

/// Checks `α(e_i ∘ e_j) = α(e_i) ∘ α(e_j)` for every listed product.
pub fn check_multiplicativity_of(
    twist: &Matrix,
    products: &[(&str, &Tensor3)],
    opts: &CheckOptions,
) -> Result<CheckReport> {
    for (name, t) in products {
        if !twist.is_square() || twist.rows() != t.dim() {
            return Err(Error::dims(format!(
                "twist is {}x{} but product `{name}` has dimension {}",
                twist.rows(),
                twist.cols(),
                t.dim()
            )));
        }
    }
    let n = twist.rows();
    let images: Vec<Vector> = (0..n).map(|j| twist.column(j)).collect();
    let mut scan = Scan::new(opts);
    for (name, t) in products {
        scan.pairs(&format!("multiplicativity ({name})"), n, |i, j| {
            &twist.apply(&t.basis_product(i, j)) - &t.apply(&images[i], &images[j])
        });
    }
    Ok(scan.finish())
}

pub(crate) fn ensure_multiplicative(twist: &Matrix, products: &[(&str, &Tensor3)]) -> Result<()> {
    let report = check_multiplicativity_of(twist, products, &CheckOptions::default())?;
    match report.first() {
        None => Ok(()),
        Some(v) => {
            let product = products
                .iter()
                .map(|(name, _)| *name)
                .find(|name| v.identity.contains(&format!("({name})")))
                .unwrap_or("?")
                .to_string();
            Err(Error::NotMultiplicative { product, pair: (v.indices[0], v.indices[1]) })
        }
    }
}

/// A vector space with one bilinear product and a multiplicative twist `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    product: Tensor3,
    twist: Matrix,
    kind: Kind,
}

impl HomAlgebra {
    /// Validates shapes and that the twist is an algebra morphism.
    pub fn new(kind: Kind, product: Tensor3, twist: Matrix) -> Result<Self> {
        ensure_multiplicative(&twist, &[(kind.product_name(), &product)])?;
        Ok(HomAlgebra { product, twist, kind })
    }

    /// Identity twist.
    pub fn untwisted(kind: Kind, product: Tensor3) -> Result<Self> {
        let n = product.dim();
        Self::new(kind, product, Matrix::identity(n))
    }

    pub fn zero(kind: Kind, dim: usize) -> Self {
        HomAlgebra { product: Tensor3::zeros(dim), twist: Matrix::identity(dim), kind }
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn product(&self) -> &Tensor3 {
        &self.product
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Same structure constants under another kind tag.
    pub fn relabel(&self, kind: Kind) -> HomAlgebra {
        HomAlgebra { kind, ..self.clone() }
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.product.apply(x, y)
    }

    pub fn alpha(&self, x: &Vector) -> Vector {
        self.twist.apply(x)
    }

    /// Regular means the twist is invertible.
    pub fn is_regular(&self) -> bool {
        self.twist.inverse().is_ok()
    }

    pub fn check_multiplicativity(&self, opts: &CheckOptions) -> CheckReport {
        check_multiplicativity_of(&self.twist, &[(self.kind.product_name(), &self.product)], opts)
            .expect("shapes validated at construction")
    }
}

/// A vector space with two bilinear products sharing one twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPairAlgebra {
    first: Tensor3,
    second: Tensor3,
    twist: Matrix,
    kind: PairKind,
}

impl HomPairAlgebra {
    pub fn new(kind: PairKind, first: Tensor3, second: Tensor3, twist: Matrix) -> Result<Self> {
        if first.dim() != second.dim() {
            return Err(Error::dims(format!(
                "products of dimensions {} and {}",
                first.dim(),
                second.dim()
            )));
        }
        let (a, b) = kind.product_names();
        ensure_multiplicative(&twist, &[(a, &first), (b, &second)])?;
        Ok(HomPairAlgebra { first, second, twist, kind })
    }

    pub fn untwisted(kind: PairKind, first: Tensor3, second: Tensor3) -> Result<Self> {
        let n = first.dim();
        Self::new(kind, first, second, Matrix::identity(n))
    }

    pub fn zero(kind: PairKind, dim: usize) -> Self {
        HomPairAlgebra {
            first: Tensor3::zeros(dim),
            second: Tensor3::zeros(dim),
            twist: Matrix::identity(dim),
            kind,
        }
    }

    /// Assembles a pair from two single-product algebras with the same twist.
    pub fn from_parts(kind: PairKind, first: &HomAlgebra, second: &HomAlgebra) -> Result<Self> {
        if first.twist != second.twist {
            return Err(Error::Invalid("components carry different twists".into()));
        }
        Self::new(kind, first.product.clone(), second.product.clone(), first.twist.clone())
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn first(&self) -> &Tensor3 {
        &self.first
    }

    pub fn second(&self) -> &Tensor3 {
        &self.second
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn relabel(&self, kind: PairKind) -> HomPairAlgebra {
        HomPairAlgebra { kind, ..self.clone() }
    }

    pub fn alpha(&self, x: &Vector) -> Vector {
        self.twist.apply(x)
    }

    pub fn is_regular(&self) -> bool {
        self.twist.inverse().is_ok()
    }

    /// The two halves as single-product algebras, when the kind has such halves.
    pub fn components(&self) -> Option<(HomAlgebra, HomAlgebra)> {
        let (ka, kb) = self.kind.components()?;
        Some((
            HomAlgebra { product: self.first.clone(), twist: self.twist.clone(), kind: ka },
            HomAlgebra { product: self.second.clone(), twist: self.twist.clone(), kind: kb },
        ))
    }

    pub fn check_multiplicativity(&self, opts: &CheckOptions) -> CheckReport {
        let (a, b) = self.kind.product_names();
        check_multiplicativity_of(&self.twist, &[(a, &self.first), (b, &self.second)], opts)
            .expect("shapes validated at construction")
    }
}

/// Either shape of algebra, for operations that accept both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Single(HomAlgebra),
    Pair(HomPairAlgebra),
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Single(a) => a.dim(),
            AnyAlgebra::Pair(a) => a.dim(),
        }
    }

    pub fn twist(&self) -> &Matrix {
        match self {
            AnyAlgebra::Single(a) => a.twist(),
            AnyAlgebra::Pair(a) => a.twist(),
        }
    }

    pub fn kind_tag(&self) -> &'static str {
        match self {
            AnyAlgebra::Single(a) => a.kind().tag(),
            AnyAlgebra::Pair(a) => a.kind().tag(),
        }
    }

    /// Named products, in document order.
    pub fn products(&self) -> Vec<(&'static str, &Tensor3)> {
        match self {
            AnyAlgebra::Single(a) => vec![(a.kind().product_name(), a.product())],
            AnyAlgebra::Pair(a) => {
                let (n1, n2) = a.kind().product_names();
                vec![(n1, a.first()), (n2, a.second())]
            }
        }
    }
}

impl From<HomAlgebra> for AnyAlgebra {
    fn from(a: HomAlgebra) -> Self {
        AnyAlgebra::Single(a)
    }
}

impl From<HomPairAlgebra> for AnyAlgebra {
    fn from(a: HomPairAlgebra) -> Self {
        AnyAlgebra::Pair(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Tensor3;

    #[test]
    fn construction_rejects_non_multiplicative_twist() {
        let f2 = Tensor3::from_entries(2, &[(0, 0, 1, 1)]);
        // diag(2, 4) happens to be multiplicative for F2 itself: 4e2 on both sides
        assert!(HomAlgebra::new(Kind::HomZinbiel, f2.clone(), Matrix::diag_i64(&[2, 4])).is_ok());
        let err = HomAlgebra::new(Kind::HomZinbiel, f2, Matrix::diag_i64(&[1, 2])).unwrap_err();
        match err {
            Error::NotMultiplicative { product, pair } => {
                assert_eq!(product, "zinbiel");
                assert_eq!(pair, (0, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        let t = Tensor3::zeros(2);
        assert!(matches!(
            HomAlgebra::new(Kind::HomLie, t.clone(), Matrix::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            HomPairAlgebra::untwisted(PairKind::HomPoisson, t, Tensor3::zeros(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kind_tags_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.tag().parse::<Kind>().unwrap(), k);
        }
        for k in PairKind::ALL {
            assert_eq!(k.tag().parse::<PairKind>().unwrap(), k);
        }
        assert!("hom-nothing".parse::<Kind>().is_err());
    }

    #[test]
    fn dimension_zero_is_legal() {
        let a = HomAlgebra::untwisted(Kind::HomLie, Tensor3::zeros(0)).unwrap();
        assert_eq!(a.dim(), 0);
        assert!(a.check_multiplicativity(&CheckOptions::default()).passed());
    }
}
