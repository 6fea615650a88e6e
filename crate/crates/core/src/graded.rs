//! Graded algebras with Koszul signs: Hom-Gerstenhaber and
//! Hom-pre-Gerstenhaber structures.
//!
//! Signs are computed from the stored basis degrees at evaluation time; the
//! structure constants themselves carry no signs.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{ensure_multiplicative, HomPairAlgebra, PairKind};
use crate::check::{CheckOptions, CheckReport, Scan};
use crate::checkers::Frame;
use crate::error::{Error, Result};
use crate::linalg::{sign_pow, Matrix, Scalar, Tensor3, Vector};
use crate::representations::ensure_passes;

/// `(−1)^{pq}`; negative degrees are allowed.
pub fn koszul_sign(p: i64, q: i64) -> Scalar {
    sign_pow(p * q)
}

/// Degrees `|e_i|` of the basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedBasis {
    pub degrees: Vec<i64>,
}

impl GradedBasis {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedBasis { degrees }
    }

    /// Every element in degree 0.
    pub fn concentrated(dim: usize) -> Self {
        GradedBasis { degrees: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradedKind {
    HomGerstenhaber,
    HomPreGerstenhaber,
}

impl GradedKind {
    pub const ALL: [GradedKind; 2] = [GradedKind::HomGerstenhaber, GradedKind::HomPreGerstenhaber];

    pub fn tag(self) -> &'static str {
        match self {
            GradedKind::HomGerstenhaber => "hom-gerstenhaber",
            GradedKind::HomPreGerstenhaber => "hom-pre-gerstenhaber",
        }
    }

    /// Names of the degree-0 and degree-(−1) products.
    pub fn product_names(self) -> (&'static str, &'static str) {
        match self {
            GradedKind::HomGerstenhaber => ("dot", "bracket"),
            GradedKind::HomPreGerstenhaber => ("zinbiel", "prelie"),
        }
    }
}

impl fmt::Display for GradedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GradedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GradedKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown graded kind {s:?}")))
    }
}

/// A degree-0 product, a degree-(−1) product and a degree-0 twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    basis: GradedBasis,
    product0: Tensor3,
    product_m1: Tensor3,
    twist: Matrix,
    kind: GradedKind,
}

impl GradedAlgebra {
    /// Validates shapes, degree homogeneity, and that the twist is of degree 0
    /// and multiplicative.
    pub fn new(
        kind: GradedKind,
        basis: GradedBasis,
        product0: Tensor3,
        product_m1: Tensor3,
        twist: Matrix,
    ) -> Result<Self> {
        let n = basis.dim();
        if product0.dim() != n || product_m1.dim() != n || !twist.is_square() || twist.rows() != n {
            return Err(Error::dims(format!(
                "{n} degrees, products of dimension {} and {}, twist {}x{}",
                product0.dim(),
                product_m1.dim(),
                twist.rows(),
                twist.cols()
            )));
        }
        let (n0, n1) = kind.product_names();
        for (name, t, shift) in [(n0, &product0, 0), (n1, &product_m1, -1)] {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let want = basis.degree(i) + basis.degree(j) + shift;
                        if basis.degree(k) != want && !t.get(i, j, k).is_zero() {
                            return Err(Error::Inhomogeneous(format!(
                                "`{name}` sends (e{}, e{}) to e{} of degree {}, expected degree {want}",
                                i + 1,
                                j + 1,
                                k + 1,
                                basis.degree(k)
                            )));
                        }
                    }
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                if basis.degree(r) != basis.degree(c) && !twist.get(r, c).is_zero() {
                    return Err(Error::Inhomogeneous(format!(
                        "twist maps e{} into degree {}, expected {}",
                        c + 1,
                        basis.degree(r),
                        basis.degree(c)
                    )));
                }
            }
        }
        ensure_multiplicative(&twist, &[(n0, &product0), (n1, &product_m1)])?;
        Ok(GradedAlgebra { basis, product0, product_m1, twist, kind })
    }

    pub fn untwisted(kind: GradedKind, basis: GradedBasis, product0: Tensor3, product_m1: Tensor3) -> Result<Self> {
        let n = basis.dim();
        Self::new(kind, basis, product0, product_m1, Matrix::identity(n))
    }

    pub fn zero(kind: GradedKind, basis: GradedBasis) -> Self {
        let n = basis.dim();
        GradedAlgebra { basis, product0: Tensor3::zeros(n), product_m1: Tensor3::zeros(n), twist: Matrix::identity(n), kind }
    }

    /// A Hom-Poisson or Hom-pre-Poisson algebra with every element placed in
    /// degree 0. The second product must then vanish for homogeneity.
    pub fn concentrated_in_degree_zero(alg: &HomPairAlgebra) -> Result<Self> {
        let kind = match alg.kind() {
            PairKind::HomPoisson => GradedKind::HomGerstenhaber,
            PairKind::HomPrePoisson => GradedKind::HomPreGerstenhaber,
            other => {
                return Err(Error::WrongKind { expected: "hom-poisson or hom-pre-poisson".into(), found: other.tag().into() })
            }
        };
        Self::new(
            kind,
            GradedBasis::concentrated(alg.dim()),
            alg.first().clone(),
            alg.second().clone(),
            alg.twist().clone(),
        )
    }

    pub fn kind(&self) -> GradedKind {
        self.kind
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn product0(&self) -> &Tensor3 {
        &self.product0
    }

    pub fn product_m1(&self) -> &Tensor3 {
        &self.product_m1
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Same data under another kind tag.
    pub fn relabel(&self, kind: GradedKind) -> Self {
        GradedAlgebra { kind, ..self.clone() }
    }
}

fn require(g: &GradedAlgebra, kind: GradedKind, opts: &CheckOptions) -> Result<()> {
    if g.kind == kind || opts.force {
        Ok(())
    } else {
        Err(Error::WrongKind { expected: kind.tag().into(), found: g.kind.tag().into() })
    }
}

/// `v` scaled by `(−1)^{e}`.
fn signed(e: i64, v: Vector) -> Vector {
    v.scale(&sign_pow(e))
}

/// Graded commutativity, Hom-associativity, graded skew-symmetry, the
/// graded Hom-Jacobi identity and the graded Leibniz rule.
pub fn check_hom_gerstenhaber(g: &GradedAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(g, GradedKind::HomGerstenhaber, opts)?;
    let f = Frame::new(&g.twist);
    let d = |i: usize| g.basis.degree(i);
    let (m, b) = (&g.product0, &g.product_m1);
    let n = g.dim();
    let mut scan = Scan::new(opts);
    scan.pairs("graded commutativity", n, |i, j| {
        &m.basis_product(i, j) - &signed(d(i) * d(j), m.basis_product(j, i))
    });
    scan.triples("Eq. (1)", n, |i, j, k| {
        &m.apply(&f.a[i], &m.basis_product(j, k)) - &m.apply(&m.basis_product(i, j), &f.a[k])
    });
    scan.pairs("graded skew-symmetry", n, |i, j| {
        &b.basis_product(i, j) + &signed((d(i) - 1) * (d(j) - 1), b.basis_product(j, i))
    });
    scan.triples("graded Hom-Jacobi", n, |i, j, k| {
        let lhs = b.apply(&f.a[i], &b.basis_product(j, k));
        let r1 = b.apply(&b.basis_product(i, j), &f.a[k]);
        let r2 = signed((d(i) - 1) * (d(j) - 1), b.apply(&f.a[j], &b.basis_product(i, k)));
        &(&lhs - &r1) - &r2
    });
    scan.triples("graded Leibniz rule", n, |i, j, k| {
        let lhs = b.apply(&f.a[i], &m.basis_product(j, k));
        let r1 = m.apply(&b.basis_product(i, j), &f.a[k]);
        let r2 = signed((d(i) - 1) * d(j), m.apply(&f.a[j], &b.basis_product(i, k)));
        &(&lhs - &r1) - &r2
    });
    Ok(scan.finish())
}

/// Eq. (26), the graded Hom-pre-Lie identity, and Eqs. (27), (28).
pub fn check_hom_pre_gerstenhaber(g: &GradedAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(g, GradedKind::HomPreGerstenhaber, opts)?;
    let f = Frame::new(&g.twist);
    let d = |i: usize| g.basis.degree(i);
    let (z, s) = (&g.product0, &g.product_m1);
    let n = g.dim();
    let mut scan = Scan::new(opts);
    scan.triples("Eq. (26)", n, |i, j, k| {
        let lhs = z.apply(&f.a[i], &z.basis_product(j, k));
        let r1 = signed(d(i) * d(j), z.apply(&z.basis_product(j, i), &f.a[k]));
        let r2 = z.apply(&z.basis_product(i, j), &f.a[k]);
        &(&lhs - &r1) - &r2
    });
    scan.triples("graded Hom-pre-Lie", n, |i, j, k| {
        let lhs = &s.apply(&s.basis_product(i, j), &f.a[k]) - &s.apply(&f.a[i], &s.basis_product(j, k));
        let rhs = &s.apply(&s.basis_product(j, i), &f.a[k]) - &s.apply(&f.a[j], &s.basis_product(i, k));
        &lhs - &signed((d(i) - 1) * (d(j) - 1), rhs)
    });
    scan.triples("Eq. (27)", n, |i, j, k| {
        let comm = &s.basis_product(i, j) - &signed((d(i) - 1) * (d(j) - 1), s.basis_product(j, i));
        let lhs = z.apply(&comm, &f.a[k]);
        let r1 = s.apply(&f.a[i], &z.basis_product(j, k));
        let r2 = signed((d(i) - 1) * d(j), z.apply(&f.a[j], &s.basis_product(i, k)));
        &(&lhs - &r1) + &r2
    });
    scan.triples("Eq. (28)", n, |i, j, k| {
        let sym = &z.basis_product(i, j) + &signed(d(i) * d(j), z.basis_product(j, i));
        let lhs = s.apply(&sym, &f.a[k]);
        let r1 = z.apply(&f.a[i], &s.basis_product(j, k));
        let r2 = signed(d(i) * d(j), z.apply(&f.a[j], &s.basis_product(i, k)));
        &(&lhs - &r1) - &r2
    });
    Ok(scan.finish())
}

/// Dispatches on the kind tag.
pub fn check_graded(g: &GradedAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    match g.kind {
        GradedKind::HomGerstenhaber => check_hom_gerstenhaber(g, opts),
        GradedKind::HomPreGerstenhaber => check_hom_pre_gerstenhaber(g, opts),
    }
}

/// `x·y = x⋄y + (−1)^{|x||y|} y⋄x`, `[x,y] = x*y − (−1)^{(|x|−1)(|y|−1)} y*x`.
pub fn subadjacent_gerstenhaber(g: &GradedAlgebra) -> Result<GradedAlgebra> {
    ensure_passes("input is not Hom-pre-Gerstenhaber", check_hom_pre_gerstenhaber(g, &CheckOptions::default())?)?;
    let d = |i: usize| g.basis.degree(i);
    let (z, s) = (&g.product0, &g.product_m1);
    let dot = Tensor3::from_products(g.dim(), |i, j| &z.basis_product(i, j) + &signed(d(i) * d(j), z.basis_product(j, i)));
    let bracket = Tensor3::from_products(g.dim(), |i, j| {
        &s.basis_product(i, j) - &signed((d(i) - 1) * (d(j) - 1), s.basis_product(j, i))
    });
    GradedAlgebra::new(GradedKind::HomGerstenhaber, g.basis.clone(), dot, bracket, g.twist.clone())
}
