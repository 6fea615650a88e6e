//! Hom-O-operators, 2-cocycles and Hom-average-operators, with the
//! structures they induce and a bounded search for O-operators.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{AnyAlgebra, HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::check::{CheckOptions, CheckReport, Scan};
use crate::checkers::{check_any, check_hom_poisson};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar, Tensor3, Vector};
use crate::representations::{
    check_rep_comm_assoc, check_rep_lie, check_rep_poisson, ensure_passes, ActionMap, PoissonRepresentation,
    Representation,
};

/// A representation of either shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRepresentation {
    Single(Representation),
    Poisson(PoissonRepresentation),
}

impl AnyRepresentation {
    pub fn algebra_dim(&self) -> usize {
        match self {
            AnyRepresentation::Single(r) => r.algebra().dim(),
            AnyRepresentation::Poisson(r) => r.algebra().dim(),
        }
    }

    pub fn carrier_dim(&self) -> usize {
        self.beta().rows()
    }

    pub fn alpha(&self) -> &Matrix {
        match self {
            AnyRepresentation::Single(r) => r.algebra().twist(),
            AnyRepresentation::Poisson(r) => r.algebra().twist(),
        }
    }

    pub fn beta(&self) -> &Matrix {
        match self {
            AnyRepresentation::Single(r) => r.beta(),
            AnyRepresentation::Poisson(r) => r.beta(),
        }
    }

    /// Runs the representation checker matching the algebra kind.
    pub fn check(&self, opts: &CheckOptions) -> Result<CheckReport> {
        match self {
            AnyRepresentation::Single(r) if r.algebra().kind() == Kind::HomLie => check_rep_lie(r, opts),
            AnyRepresentation::Single(r) => check_rep_comm_assoc(r, opts),
            AnyRepresentation::Poisson(r) => check_rep_poisson(r, opts),
        }
    }

    /// `(product tensor, action)` of the commutative associative half, if any.
    fn comm_half(&self) -> Option<(&Tensor3, &ActionMap)> {
        match self {
            AnyRepresentation::Single(r) if r.algebra().kind() == Kind::CommutativeHomAssociative => {
                Some((r.algebra().product(), r.action()))
            }
            AnyRepresentation::Poisson(r) => Some((r.algebra().first(), r.mu())),
            _ => None,
        }
    }

    fn lie_half(&self) -> Option<(&Tensor3, &ActionMap)> {
        match self {
            AnyRepresentation::Single(r) if r.algebra().kind() == Kind::HomLie => {
                Some((r.algebra().product(), r.action()))
            }
            AnyRepresentation::Poisson(r) => Some((r.algebra().second(), r.rho())),
            _ => None,
        }
    }
}

impl From<Representation> for AnyRepresentation {
    fn from(r: Representation) -> Self {
        AnyRepresentation::Single(r)
    }
}

impl From<PoissonRepresentation> for AnyRepresentation {
    fn from(r: PoissonRepresentation) -> Self {
        AnyRepresentation::Poisson(r)
    }
}

/// A linear map `T : V → A` commuting with the twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    rep: AnyRepresentation,
    t: Matrix,
}

impl OOperator {
    /// Checks the shape of `T` and `T∘β = α∘T`.
    pub fn new(rep: impl Into<AnyRepresentation>, t: Matrix) -> Result<Self> {
        let rep = rep.into();
        if t.rows() != rep.algebra_dim() || t.cols() != rep.carrier_dim() {
            return Err(Error::dims(format!(
                "operator is {}x{}, expected {}x{}",
                t.rows(),
                t.cols(),
                rep.algebra_dim(),
                rep.carrier_dim()
            )));
        }
        if &t * rep.beta() != rep.alpha() * &t {
            return Err(Error::NotIntertwining("T∘β ≠ α∘T".into()));
        }
        Ok(OOperator { rep, t })
    }

    pub fn rep(&self) -> &AnyRepresentation {
        &self.rep
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    /// `T∘β⁻¹`, after checking the representation itself.
    fn prepared(&self) -> Result<Matrix> {
        ensure_passes("not a representation", self.rep.check(&CheckOptions::default())?)?;
        let inv = self.rep.beta().inverse().map_err(|_| Error::Singular("β must be invertible".into()))?;
        Ok(&self.t * &inv)
    }
}

fn wrong_half(expected: &str) -> Error {
    Error::WrongKind { expected: expected.into(), found: "representation without that half".into() }
}

// Eq. (36) and Eq. (38) differ only in the product and the sign of the second term.
fn scan_o_operator(scan: &mut Scan, label: &str, t: &Matrix, k: &Matrix, prod: &Tensor3, act: &ActionMap, sign: i64) {
    let m = t.cols();
    let cols: Vec<Vector> = (0..m).map(|u| t.column(u)).collect();
    let ops: Vec<Matrix> = (0..m).map(|u| act.at(&k.column(u))).collect();
    let s = int(sign);
    scan.pairs(label, m, |u, v| {
        let lhs = prod.apply(&cols[u], &cols[v]);
        let inner = &ops[u].column(v) + &ops[v].column(u).scale(&s);
        &lhs - &t.apply(&inner)
    });
}

/// Eq. (36).
pub fn check_o_operator_comm(op: &OOperator, opts: &CheckOptions) -> Result<CheckReport> {
    let (prod, mu) = op.rep.comm_half().ok_or_else(|| wrong_half("commutative-hom-associative representation"))?;
    let k = op.prepared()?;
    let mut scan = Scan::new(opts);
    scan_o_operator(&mut scan, "Eq. (36)", &op.t, &k, prod, mu, 1);
    Ok(scan.finish())
}

/// Eq. (38).
pub fn check_o_operator_lie(op: &OOperator, opts: &CheckOptions) -> Result<CheckReport> {
    let (br, rho) = op.rep.lie_half().ok_or_else(|| wrong_half("hom-lie representation"))?;
    let k = op.prepared()?;
    let mut scan = Scan::new(opts);
    scan_o_operator(&mut scan, "Eq. (38)", &op.t, &k, br, rho, -1);
    Ok(scan.finish())
}

/// Eqs. (36) and (38).
pub fn check_o_operator_poisson(op: &OOperator, opts: &CheckOptions) -> Result<CheckReport> {
    if !matches!(op.rep, AnyRepresentation::Poisson(_)) {
        return Err(wrong_half("hom-poisson representation"));
    }
    let k = op.prepared()?;
    let (prod, mu) = op.rep.comm_half().expect("Poisson rep");
    let (br, rho) = op.rep.lie_half().expect("Poisson rep");
    let mut scan = Scan::new(opts);
    scan_o_operator(&mut scan, "Eq. (36)", &op.t, &k, prod, mu, 1);
    scan_o_operator(&mut scan, "Eq. (38)", &op.t, &k, br, rho, -1);
    Ok(scan.finish())
}

/// Runs whichever O-operator check fits the representation.
pub fn check_o_operator(op: &OOperator, opts: &CheckOptions) -> Result<CheckReport> {
    match &op.rep {
        AnyRepresentation::Poisson(_) => check_o_operator_poisson(op, opts),
        AnyRepresentation::Single(r) if r.algebra().kind() == Kind::HomLie => check_o_operator_lie(op, opts),
        AnyRepresentation::Single(_) => check_o_operator_comm(op, opts),
    }
}

/// `u ∘_T v = A(T(β⁻¹(u)))v`.
fn induced(k: &Matrix, act: &ActionMap) -> Tensor3 {
    let m = k.cols();
    let ops: Vec<Matrix> = (0..m).map(|u| act.at(&k.column(u))).collect();
    Tensor3::from_products(m, |u, v| ops[u].column(v))
}

/// `u ⋄_T v = μ(T(β⁻¹(u)))v` with twist `β`.
pub fn induced_zinbiel(op: &OOperator) -> Result<HomAlgebra> {
    ensure_passes("not a Hom-O-operator", check_o_operator_comm(op, &CheckOptions::default())?)?;
    let (_, mu) = op.rep.comm_half().expect("checked");
    HomAlgebra::new(Kind::HomZinbiel, induced(&op.prepared()?, mu), op.rep.beta().clone())
}

/// `u *_T v = ρ(T(β⁻¹(u)))v` with twist `β`.
pub fn induced_prelie(op: &OOperator) -> Result<HomAlgebra> {
    ensure_passes("not a Hom-O-operator", check_o_operator_lie(op, &CheckOptions::default())?)?;
    let (_, rho) = op.rep.lie_half().expect("checked");
    HomAlgebra::new(Kind::HomPreLie, induced(&op.prepared()?, rho), op.rep.beta().clone())
}

/// `(V, ⋄_T, *_T, β)`.
pub fn induced_prepoisson(op: &OOperator) -> Result<HomPairAlgebra> {
    ensure_passes("not a Hom-O-operator", check_o_operator_poisson(op, &CheckOptions::default())?)?;
    let k = op.prepared()?;
    let (_, mu) = op.rep.comm_half().expect("checked");
    let (_, rho) = op.rep.lie_half().expect("checked");
    HomPairAlgebra::new(PairKind::HomPrePoisson, induced(&k, mu), induced(&k, rho), op.rep.beta().clone())
}

/// The induced structure carried over to the image `T(V)`.
///
/// The image basis is the set of pivot columns of `T`; coordinates are taken
/// in that basis. Products are transported as `T(u) ∘ T(v) = T(u ∘_T v)`, and
/// transport is checked to be independent of the preimages chosen.
pub fn image_structure(op: &OOperator) -> Result<(HomPairAlgebra, Matrix)> {
    let pp = induced_prepoisson(op)?;
    let t = &op.t;
    let (_, pivots) = t.rref();
    let basis = Matrix::from_columns(t.rows(), &pivots.iter().map(|&p| t.column(p)).collect::<Vec<_>>());
    let m = t.cols();
    for k in t.nullspace() {
        for u in 0..m {
            let e = Vector::basis(m, u);
            for (name, prod) in [("⋄", pp.first()), ("*", pp.second())] {
                for (x, y) in [(&k, &e), (&e, &k)] {
                    let img = t.apply(&prod.apply(x, y));
                    if !img.is_zero() {
                        return Err(Error::IllDefinedTransport(format!(
                            "T({x} {name} {y}) = {img} although {k} lies in the kernel"
                        )));
                    }
                }
            }
        }
    }
    let coords = |v: &Vector| basis.solve(&t.apply(v)).expect("lies in the image");
    let r = pivots.len();
    let transport = |prod: &Tensor3| {
        Tensor3::from_products(r, |i, j| coords(&prod.basis_product(pivots[i], pivots[j])))
    };
    let twist = Matrix::from_columns(r, &pivots.iter().map(|&p| coords(&op.rep.beta().column(p))).collect::<Vec<_>>());
    let alg = HomPairAlgebra::new(PairKind::HomPrePoisson, transport(pp.first()), transport(pp.second()), twist)?;
    Ok((alg, basis))
}

/// `x⋄y = T(μ(α⁻¹(x))T⁻¹(y))`, `x*y = T(ρ(α⁻¹(x))T⁻¹(y))` on `A`.
pub fn compatible_from_invertible(op: &OOperator) -> Result<HomPairAlgebra> {
    let t_inv = op.t.inverse().map_err(|_| Error::Singular("T must be invertible".into()))?;
    let alpha = op.rep.alpha();
    let a_inv = alpha.inverse().map_err(|_| Error::Singular("α must be invertible".into()))?;
    ensure_passes("not a Hom-O-operator", check_o_operator_poisson(op, &CheckOptions::default())?)?;
    let (_, mu) = op.rep.comm_half().expect("checked");
    let (_, rho) = op.rep.lie_half().expect("checked");
    let n = alpha.rows();
    let build = |act: &ActionMap| {
        let ops: Vec<Matrix> = (0..n).map(|i| &(&op.t * &act.at(&a_inv.column(i))) * &t_inv).collect();
        Tensor3::from_products(n, |i, j| ops[i].column(j))
    };
    HomPairAlgebra::new(PairKind::HomPrePoisson, build(mu), build(rho), alpha.clone())
}

/// A skew bilinear form `ω(e_i, e_j) = omega[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    omega: Matrix,
}

impl TwoCocycle {
    pub fn new(omega: Matrix) -> Result<Self> {
        if !omega.is_square() {
            return Err(Error::dims(format!("ω is {}x{}", omega.rows(), omega.cols())));
        }
        if omega.transpose() != -&omega {
            return Err(Error::Invalid("ω is not skew-symmetric".into()));
        }
        Ok(TwoCocycle { omega })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.iter().zip(self.omega.apply(y).iter()).map(|(a, b)| a * b).sum()
    }
}

fn cyclic(scan: &mut Scan, label: &str, w: &TwoCocycle, prod: &Tensor3, a: &[Vector]) {
    scan.triples(label, a.len(), |i, j, k| {
        let s = w.eval(&prod.basis_product(i, j), &a[k])
            + w.eval(&prod.basis_product(j, k), &a[i])
            + w.eval(&prod.basis_product(k, i), &a[j]);
        Vector(vec![s])
    });
}

/// Eqs. (42)–(44).
pub fn check_two_cocycle(a: &HomPairAlgebra, w: &TwoCocycle, opts: &CheckOptions) -> Result<CheckReport> {
    if w.omega.rows() != a.dim() {
        return Err(Error::dims(format!("ω has dimension {}, algebra {}", w.omega.rows(), a.dim())));
    }
    ensure_passes("algebra is not Hom-Poisson", check_hom_poisson(a, &CheckOptions { parallel: opts.parallel, ..Default::default() })?)?;
    let n = a.dim();
    let al: Vec<Vector> = (0..n).map(|i| a.twist().column(i)).collect();
    let e: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut scan = Scan::new(opts);
    cyclic(&mut scan, "Eq. (42)", w, a.first(), &al);
    cyclic(&mut scan, "Eq. (43)", w, a.second(), &al);
    scan.pairs("Eq. (44)", n, |i, j| Vector(vec![w.eval(&e[i], &e[j]) - w.eval(&al[i], &al[j])]));
    Ok(scan.finish())
}

/// Basis of all skew forms satisfying Eqs. (42)–(44) for `a`.
pub fn cocycle_space(a: &HomPairAlgebra) -> Vec<TwoCocycle> {
    let n = a.dim();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let form = |coeffs: &dyn Fn(usize) -> Scalar| {
        let mut om = Matrix::zeros(n, n);
        for (s, &(i, j)) in slots.iter().enumerate() {
            let c = coeffs(s);
            om.set(j, i, -c.clone());
            om.set(i, j, c);
        }
        TwoCocycle { omega: om }
    };
    let residuals = |w: &TwoCocycle| {
        let mut scan = Scan::new(&CheckOptions::all());
        let al: Vec<Vector> = (0..n).map(|i| a.twist().column(i)).collect();
        let e: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
        cyclic(&mut scan, "Eq. (42)", w, a.first(), &al);
        cyclic(&mut scan, "Eq. (43)", w, a.second(), &al);
        scan.pairs("Eq. (44)", n, |i, j| Vector(vec![w.eval(&e[i], &e[j]) - w.eval(&al[i], &al[j])]));
        scan.finish()
    };
    // every constraint is linear in ω; evaluate on unit forms to get the system
    let rows = n * n * n * 2 + n * n;
    let columns: Vec<Vector> = (0..slots.len())
        .map(|s| {
            let w = form(&|t| if t == s { int(1) } else { int(0) });
            let mut col = Vector::zeros(rows);
            let idx = |v: &crate::check::Violation| match v.identity.as_str() {
                "Eq. (42)" => v.indices[0] * n * n + v.indices[1] * n + v.indices[2],
                "Eq. (43)" => n * n * n + v.indices[0] * n * n + v.indices[1] * n + v.indices[2],
                _ => 2 * n * n * n + v.indices[0] * n + v.indices[1],
            };
            for v in residuals(&w).violations {
                let i = idx(&v);
                col.0[i] = v.discrepancy[0].clone();
            }
            col
        })
        .collect();
    Matrix::from_columns(rows, &columns)
        .nullspace()
        .into_iter()
        .map(|v| form(&|s| v[s].clone()))
        .collect()
}

/// Which power of `α⁻¹` acts on `z` in the bracket formula of the cocycle construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CocycleVariant {
    /// `ω(x*y, z) = −ω(y, [α⁻¹(x), α⁻²(z)])`
    #[default]
    Eq45,
    /// `ω(x*y, z) = −ω(y, [α⁻¹(x), α⁻¹(z)])`
    ProofLine,
}

impl CocycleVariant {
    pub fn tag(self) -> &'static str {
        match self {
            CocycleVariant::Eq45 => "eq45",
            CocycleVariant::ProofLine => "proofline",
        }
    }
}

impl fmt::Display for CocycleVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CocycleVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq45" => Ok(CocycleVariant::Eq45),
            "proofline" => Ok(CocycleVariant::ProofLine),
            _ => Err(Error::Invalid(format!("unknown variant {s:?} (expected eq45 or proofline)"))),
        }
    }
}

/// Solves `ω(x⋄y, z) = ω(y, α⁻¹(x)·α⁻²(z))` and the bracket analogue for
/// `⋄` and `*`.
pub fn prepoisson_from_cocycle(a: &HomPairAlgebra, w: &TwoCocycle, variant: CocycleVariant) -> Result<HomPairAlgebra> {
    ensure_passes("ω is not a 2-cocycle", check_two_cocycle(a, w, &CheckOptions::default())?)?;
    let om = &w.omega;
    let om_inv = om.inverse().map_err(|_| Error::Singular("ω♯ is not invertible".into()))?;
    let a_inv = a.twist().inverse().map_err(|_| Error::Singular("α must be invertible".into()))?;
    let a_inv2 = a_inv.pow(2);
    let z_power = match variant {
        CocycleVariant::Eq45 => a_inv2.clone(),
        CocycleVariant::ProofLine => a_inv.clone(),
    };
    let n = a.dim();
    // ω(w, z) = ω(y, M z) for all z  ⇔  w = Ω⁻¹ Mᵀ Ω y
    let solve = |m: &Matrix| &(&om_inv * &m.transpose()) * om;
    let dia: Vec<Matrix> = (0..n)
        .map(|i| solve(&(&a.first().left_mul(&a_inv.column(i)) * &a_inv2)))
        .collect();
    let star: Vec<Matrix> = (0..n)
        .map(|i| -&solve(&(&a.second().left_mul(&a_inv.column(i)) * &z_power)))
        .collect();
    HomPairAlgebra::new(
        PairKind::HomPrePoisson,
        Tensor3::from_products(n, |i, j| dia[i].column(j)),
        Tensor3::from_products(n, |i, j| star[i].column(j)),
        a.twist().clone(),
    )
}

/// A linear map `S : A → A` commuting with `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageOperator {
    algebra: AnyAlgebra,
    s: Matrix,
}

impl AverageOperator {
    /// Checks the shape of `S` and `S∘α = α∘S`.
    pub fn new(algebra: impl Into<AnyAlgebra>, s: Matrix) -> Result<Self> {
        let algebra = algebra.into();
        let n = algebra.dim();
        if s.rows() != n || s.cols() != n {
            return Err(Error::dims(format!("operator is {}x{}, algebra has dimension {n}", s.rows(), s.cols())));
        }
        if &s * algebra.twist() != algebra.twist() * &s {
            return Err(Error::NotIntertwining("S∘α ≠ α∘S".into()));
        }
        Ok(AverageOperator { algebra, s })
    }

    pub fn algebra(&self) -> &AnyAlgebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.s
    }

    fn comm_half(&self) -> Option<&Tensor3> {
        match &self.algebra {
            AnyAlgebra::Single(a) if a.kind() == Kind::CommutativeHomAssociative => Some(a.product()),
            AnyAlgebra::Pair(a) if a.kind() == PairKind::HomPoisson => Some(a.first()),
            _ => None,
        }
    }

    fn lie_half(&self) -> Option<&Tensor3> {
        match &self.algebra {
            AnyAlgebra::Single(a) if a.kind() == Kind::HomLie => Some(a.product()),
            AnyAlgebra::Pair(a) if a.kind() == PairKind::HomPoisson => Some(a.second()),
            _ => None,
        }
    }

    /// `α⁻¹`, after checking regularity and the algebra itself.
    fn prepared(&self) -> Result<Matrix> {
        let inv = self.algebra.twist().inverse().map_err(|_| Error::Singular("α must be invertible".into()))?;
        ensure_passes("algebra fails its kind checker", check_any(&self.algebra, &CheckOptions::default()))?;
        Ok(inv)
    }

    /// `x ↦ S(α⁻¹(x))`.
    fn s_alpha_inv(&self, a_inv: &Matrix) -> Matrix {
        &self.s * a_inv
    }
}

fn scan_average(scan: &mut Scan, label: &str, s: &Matrix, sa: &Matrix, prod: &Tensor3) {
    let n = s.rows();
    let scol: Vec<Vector> = (0..n).map(|i| s.column(i)).collect();
    let sacol: Vec<Vector> = (0..n).map(|i| sa.column(i)).collect();
    scan.pairs(label, n, |i, j| {
        let lhs = prod.apply(&scol[i], &scol[j]);
        &lhs - &s.apply(&prod.apply(&sacol[i], &Vector::basis(n, j)))
    });
}

/// Eq. (50) for the product and/or Eq. (53) for the bracket.
pub fn check_average_operator(op: &AverageOperator, opts: &CheckOptions) -> Result<CheckReport> {
    let (comm, lie) = (op.comm_half(), op.lie_half());
    if comm.is_none() && lie.is_none() {
        return Err(Error::WrongKind {
            expected: "commutative-hom-associative, hom-lie or hom-poisson".into(),
            found: op.algebra.kind_tag().into(),
        });
    }
    let sa = op.s_alpha_inv(&op.prepared()?);
    let mut scan = Scan::new(opts);
    if let Some(p) = comm {
        scan_average(&mut scan, "Eq. (50)", &op.s, &sa, p);
    }
    if let Some(b) = lie {
        scan_average(&mut scan, "Eq. (53)", &op.s, &sa, b);
    }
    Ok(scan.finish())
}

fn half_report(op: &AverageOperator, label: &str, prod: &Tensor3) -> Result<CheckReport> {
    let sa = op.s_alpha_inv(&op.prepared()?);
    let mut scan = Scan::new(&CheckOptions::default());
    scan_average(&mut scan, label, &op.s, &sa, prod);
    Ok(scan.finish())
}

/// `(x, y) ↦ S(α⁻¹(x)) ∘ y`.
fn averaged(sa: &Matrix, prod: &Tensor3) -> Tensor3 {
    let n = sa.rows();
    Tensor3::from_products(n, |i, j| prod.apply(&sa.column(i), &Vector::basis(n, j)))
}

/// `x•y = S(α⁻¹(x))·y`.
pub fn induced_permutative(op: &AverageOperator) -> Result<HomAlgebra> {
    let p = op.comm_half().ok_or_else(|| wrong_half("commutative-hom-associative or hom-poisson algebra"))?;
    ensure_passes("not a Hom-average-operator", half_report(op, "Eq. (50)", p)?)?;
    let sa = op.s_alpha_inv(&op.prepared()?);
    HomAlgebra::new(Kind::HomPermutative, averaged(&sa, p), op.algebra.twist().clone())
}

/// `{x,y} = [S(α⁻¹(x)), y]`.
pub fn induced_leibniz(op: &AverageOperator) -> Result<HomAlgebra> {
    let b = op.lie_half().ok_or_else(|| wrong_half("hom-lie or hom-poisson algebra"))?;
    ensure_passes("not a Hom-average-operator", half_report(op, "Eq. (53)", b)?)?;
    let sa = op.s_alpha_inv(&op.prepared()?);
    HomAlgebra::new(Kind::HomLeibniz, averaged(&sa, b), op.algebra.twist().clone())
}

/// Both induced products on a Hom-Poisson algebra.
pub fn induced_dual_prepoisson(op: &AverageOperator) -> Result<HomPairAlgebra> {
    if !matches!(&op.algebra, AnyAlgebra::Pair(a) if a.kind() == PairKind::HomPoisson) {
        return Err(Error::WrongKind { expected: "hom-poisson".into(), found: op.algebra.kind_tag().into() });
    }
    ensure_passes("not a Hom-average-operator", check_average_operator(op, &CheckOptions::default())?)?;
    let sa = op.s_alpha_inv(&op.prepared()?);
    let (p, b) = (op.comm_half().expect("Poisson"), op.lie_half().expect("Poisson"));
    HomPairAlgebra::new(PairKind::DualHomPrePoisson, averaged(&sa, p), averaged(&sa, b), op.algebra.twist().clone())
}

/// Largest grid `search_o_operators` will enumerate.
pub const SEARCH_GRID_LIMIT: u128 = 1 << 22;

/// Integer points of the solution space of `T∘β = α∘T` passing the quadratic
/// O-operator identities.
///
/// The linear condition is solved exactly; its nullspace basis `N_1, …, N_d`
/// is then combined with every coefficient tuple in `[−bound, bound]^d`, in
/// lexicographic order. The result is complete within that grid only.
pub fn search_o_operators(rep: &AnyRepresentation, bound: u32, opts: &CheckOptions) -> Result<Vec<OOperator>> {
    let (alpha, beta) = (rep.alpha(), rep.beta());
    alpha.inverse().map_err(|_| Error::Singular("α must be invertible".into()))?;
    beta.inverse().map_err(|_| Error::Singular("β must be invertible".into()))?;
    ensure_passes("not a representation", rep.check(&CheckOptions::default())?)?;
    let (n, m) = (rep.algebra_dim(), rep.carrier_dim());
    // unknown r*m + c is the entry T[r][c]
    let columns: Vec<Vector> = (0..n * m)
        .map(|idx| {
            let mut e = Matrix::zeros(n, m);
            e.set(idx / m, idx % m, int(1));
            (&(&e * beta) - &(alpha * &e)).flatten()
        })
        .collect();
    let basis: Vec<Matrix> = Matrix::from_columns(n * m, &columns)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n, m, |r, c| v[r * m + c].clone()))
        .collect();
    let d = basis.len() as u32;
    let side = 2 * bound as u128 + 1;
    let total = side.checked_pow(d).filter(|t| *t <= SEARCH_GRID_LIMIT).ok_or_else(|| {
        Error::Invalid(format!("search grid of {side}^{d} points exceeds the limit of {SEARCH_GRID_LIMIT}"))
    })? as u64;

    let candidate = |idx: u64| -> Option<OOperator> {
        let mut t = Matrix::zeros(n, m);
        let mut rest = idx;
        let coeffs: Vec<i64> = (0..d)
            .map(|_| {
                let c = (rest % side as u64) as i64 - bound as i64;
                rest /= side as u64;
                c
            })
            .collect();
        // first basis vector varies slowest
        for (b, c) in basis.iter().zip(coeffs.iter().rev()) {
            if *c != 0 {
                t = &t + &b.scale(&int(*c));
            }
        }
        let op = OOperator { rep: rep.clone(), t };
        check_o_operator(&op, &CheckOptions::default()).ok()?.passed().then_some(op)
    };
    Ok(if opts.parallel {
        (0..total).into_par_iter().filter_map(candidate).collect()
    } else {
        (0..total).filter_map(candidate).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::subadjacent_poisson;
    use crate::fixtures::*;
    use crate::representations::{prepoisson_representation, regular_poisson_representation, regular_representation};

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    fn shift() -> Matrix {
        Matrix::from_i64(&[&[0, 0], &[1, 0]])
    }

    #[test]
    fn o_operator_examples_on_f1() {
        let reg = regular_representation(&f1()).unwrap();
        let op = OOperator::new(reg.clone(), shift()).unwrap();
        assert!(check_o_operator_comm(&op, &opts()).unwrap().passed());
        assert_eq!(induced_zinbiel(&op).unwrap(), f2());
        let id = OOperator::new(reg, Matrix::identity(2)).unwrap();
        let v = check_o_operator_comm(&id, &opts()).unwrap().first().cloned().unwrap();
        assert_eq!(v.indices, vec![0, 0]);
        assert_eq!(v.discrepancy, Vector::from_i64(&[-1, 0]));
    }

    #[test]
    fn o_operator_on_f3() {
        let ad = regular_representation(&f3()).unwrap();
        let id = OOperator::new(ad, Matrix::identity(2)).unwrap();
        let v = check_o_operator_lie(&id, &opts()).unwrap().first().cloned().unwrap();
        assert_eq!(v.indices, vec![0, 1]);
        assert_eq!(v.discrepancy, Vector::from_i64(&[0, -1]));
    }

    #[test]
    fn poisson_operator_induces_p1() {
        let reg = regular_poisson_representation(&f1_poisson()).unwrap();
        let op = OOperator::new(reg, shift()).unwrap();
        assert!(check_o_operator_poisson(&op, &opts()).unwrap().passed());
        assert_eq!(induced_prepoisson(&op).unwrap(), p1());
        let (img, basis) = image_structure(&op).unwrap();
        assert_eq!(img.dim(), 1);
        assert_eq!(basis.column(0), Vector::from_i64(&[0, 1]));
        assert!(img.first().is_zero() && img.second().is_zero());
    }

    #[test]
    fn twist_is_an_operator_and_recovers_p1() {
        for pp in [p1(), p2(), p1_alpha()] {
            let rep = prepoisson_representation(&pp).unwrap();
            let op = OOperator::new(rep, pp.twist().clone()).unwrap();
            assert!(check_o_operator_poisson(&op, &opts()).unwrap().passed());
            let back = compatible_from_invertible(&op).unwrap();
            assert_eq!(back, pp);
            assert_eq!(subadjacent_poisson(&back).unwrap(), op_algebra(&op));
        }
    }

    fn op_algebra(op: &OOperator) -> HomPairAlgebra {
        match op.rep() {
            AnyRepresentation::Poisson(r) => r.algebra().clone(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn cocycle_examples() {
        let w = TwoCocycle::new(Matrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap();
        let zero = f0_pair(PairKind::HomPoisson);
        assert!(check_two_cocycle(&zero, &w, &opts()).unwrap().passed());
        let pp = prepoisson_from_cocycle(&zero, &w, CocycleVariant::Eq45).unwrap();
        assert!(pp.first().is_zero() && pp.second().is_zero());
        let v = check_two_cocycle(&f6(), &w, &opts()).unwrap().first().cloned().unwrap();
        assert_eq!((v.identity.as_str(), v.indices.clone()), ("Eq. (42)", vec![0, 0, 0]));
        assert_eq!(v.discrepancy, Vector::from_i64(&[-6]));
        assert!(TwoCocycle::new(Matrix::identity(2)).is_err());
    }

    #[test]
    fn average_operator_examples() {
        let s = AverageOperator::new(f1(), Matrix::diag_i64(&[1, 0])).unwrap();
        assert!(check_average_operator(&s, &opts()).unwrap().passed());
        let p = induced_permutative(&s).unwrap();
        assert_eq!(p.product(), &Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]));
        let bad = AverageOperator::new(f1(), Matrix::diag_i64(&[0, 1])).unwrap();
        let v = check_average_operator(&bad, &opts()).unwrap().first().cloned().unwrap();
        assert_eq!(v.indices, vec![1, 0]);
        let id = AverageOperator::new(f3(), Matrix::identity(2)).unwrap();
        assert_eq!(induced_leibniz(&id).unwrap().product(), f3().product());
        let s = AverageOperator::new(f1_poisson(), Matrix::diag_i64(&[1, 0])).unwrap();
        let d = induced_dual_prepoisson(&s).unwrap();
        assert_eq!(d.first(), p.product());
        assert!(d.second().is_zero());
    }

    #[test]
    fn search_on_regular_rep_of_f1() {
        let reg = AnyRepresentation::from(regular_representation(&f1()).unwrap());
        let found = search_o_operators(&reg, 1, &opts()).unwrap();
        let mats: Vec<&Matrix> = found.iter().map(OOperator::matrix).collect();
        assert!(mats.contains(&&Matrix::zeros(2, 2)));
        assert!(mats.contains(&&shift()));
        assert!(mats.contains(&&-&shift()));
        let par = search_o_operators(&reg, 1, &CheckOptions { parallel: true, ..opts() }).unwrap();
        assert_eq!(found, par);
    }
}
