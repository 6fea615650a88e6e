//! Representations of commutative Hom-associative, Hom-Lie and Hom-Poisson
//! algebras, their regular versions and their duals.
//!
//! An action is stored as one `dim V × dim V` matrix per basis element of the
//! algebra. Rep identities are checked on basis elements and pairs of the
//! algebra; an operator-valued discrepancy is flattened row-major.

use crate::algebra::{HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::check::{CheckOptions, CheckReport, Scan};
use crate::checkers::{check_hom_associative, check_hom_lie, check_hom_poisson, check_hom_pre_poisson};
use crate::constructions::subadjacent_poisson;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};

/// `x ↦ A(x)`, given on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMap {
    ops: Vec<Matrix>,
    carrier: usize,
}

impl ActionMap {
    /// `ops[k]` is the operator of `e_k`; all must be `carrier × carrier`.
    pub fn new(carrier: usize, ops: Vec<Matrix>) -> Result<Self> {
        for (k, m) in ops.iter().enumerate() {
            if m.rows() != carrier || m.cols() != carrier {
                return Err(Error::dims(format!(
                    "operator of e{} is {}x{}, carrier has dimension {carrier}",
                    k + 1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(ActionMap { ops, carrier })
    }

    pub fn zero(algebra_dim: usize, carrier: usize) -> Self {
        ActionMap { ops: vec![Matrix::zeros(carrier, carrier); algebra_dim], carrier }
    }

    /// Left multiplications `e_k ↦ (y ↦ e_k ∘ y)` of a product.
    pub fn left_multiplication(t: &Tensor3) -> Self {
        let n = t.dim();
        ActionMap { ops: (0..n).map(|k| t.left_mul(&Vector::basis(n, k))).collect(), carrier: n }
    }

    pub fn algebra_dim(&self) -> usize {
        self.ops.len()
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    pub fn basis_op(&self, k: usize) -> &Matrix {
        &self.ops[k]
    }

    /// Operator of an arbitrary element, by linearity.
    pub fn at(&self, x: &Vector) -> Matrix {
        let mut acc = Matrix::zeros(self.carrier, self.carrier);
        for (c, m) in x.iter().zip(&self.ops) {
            if !num_traits::Zero::is_zero(c) {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }

    fn map(&self, f: impl Fn(usize) -> Matrix) -> ActionMap {
        ActionMap { ops: (0..self.ops.len()).map(f).collect(), carrier: self.carrier }
    }
}

fn validate(alg_dim: usize, beta: &Matrix, actions: &[&ActionMap]) -> Result<()> {
    if !beta.is_square() {
        return Err(Error::dims(format!("β is {}x{}", beta.rows(), beta.cols())));
    }
    for a in actions {
        if a.algebra_dim() != alg_dim {
            return Err(Error::dims(format!(
                "action lists {} operators for an algebra of dimension {alg_dim}",
                a.algebra_dim()
            )));
        }
        if a.carrier_dim() != beta.rows() {
            return Err(Error::dims(format!(
                "action acts on dimension {}, β on dimension {}",
                a.carrier_dim(),
                beta.rows()
            )));
        }
    }
    Ok(())
}

/// `(V, β, μ)` or `(V, β, ρ)` over a single-product algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: HomAlgebra,
    beta: Matrix,
    action: ActionMap,
}

impl Representation {
    pub fn new(algebra: HomAlgebra, beta: Matrix, action: ActionMap) -> Result<Self> {
        validate(algebra.dim(), &beta, &[&action])?;
        Ok(Representation { algebra, beta, action })
    }

    pub fn zero(algebra: HomAlgebra, carrier: usize) -> Self {
        let n = algebra.dim();
        Representation { algebra, beta: Matrix::identity(carrier), action: ActionMap::zero(n, carrier) }
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn action(&self) -> &ActionMap {
        &self.action
    }

    pub fn carrier_dim(&self) -> usize {
        self.beta.rows()
    }
}

/// `(V, β, ρ, μ)` over a Hom-Poisson algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonRepresentation {
    algebra: HomPairAlgebra,
    beta: Matrix,
    rho: ActionMap,
    mu: ActionMap,
}

impl PoissonRepresentation {
    pub fn new(algebra: HomPairAlgebra, beta: Matrix, rho: ActionMap, mu: ActionMap) -> Result<Self> {
        validate(algebra.dim(), &beta, &[&rho, &mu])?;
        Ok(PoissonRepresentation { algebra, beta, rho, mu })
    }

    pub fn zero(algebra: HomPairAlgebra, carrier: usize) -> Self {
        let n = algebra.dim();
        PoissonRepresentation {
            algebra,
            beta: Matrix::identity(carrier),
            rho: ActionMap::zero(n, carrier),
            mu: ActionMap::zero(n, carrier),
        }
    }

    pub fn algebra(&self) -> &HomPairAlgebra {
        &self.algebra
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// Action of the bracket.
    pub fn rho(&self) -> &ActionMap {
        &self.rho
    }

    /// Action of the product.
    pub fn mu(&self) -> &ActionMap {
        &self.mu
    }

    pub fn carrier_dim(&self) -> usize {
        self.beta.rows()
    }

    /// The commutative Hom-associative half `(V, β, μ)`.
    pub fn associative_part(&self) -> Representation {
        let (dot, _) = self.halves();
        Representation { algebra: dot, beta: self.beta.clone(), action: self.mu.clone() }
    }

    /// The Hom-Lie half `(V, β, ρ)`.
    pub fn lie_part(&self) -> Representation {
        let (_, br) = self.halves();
        Representation { algebra: br, beta: self.beta.clone(), action: self.rho.clone() }
    }

    fn halves(&self) -> (HomAlgebra, HomAlgebra) {
        self.algebra.relabel(PairKind::HomPoisson).components().expect("Poisson kind has halves")
    }
}

fn inner_opts(opts: &CheckOptions) -> CheckOptions {
    CheckOptions { parallel: opts.parallel, ..Default::default() }
}

pub(crate) fn ensure_passes(what: &str, report: CheckReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(what, report))
    }
}

struct RepFrame {
    a: Vec<Vector>,
    n: usize,
}

impl RepFrame {
    fn new(alpha: &Matrix) -> Self {
        let n = alpha.rows();
        RepFrame { a: (0..n).map(|i| alpha.column(i)).collect(), n }
    }
}

fn scan_rep_comm_assoc(scan: &mut Scan, f: &RepFrame, dot: &Tensor3, beta: &Matrix, mu: &ActionMap) {
    scan.singles("Eq. (2)", f.n, |k| (&(&mu.at(&f.a[k]) * beta) - &(beta * mu.basis_op(k))).flatten());
    scan.pairs("Eq. (3)", f.n, |i, j| {
        let lhs = &mu.at(&dot.basis_product(i, j)) * beta;
        let rhs = &mu.at(&f.a[i]) * mu.basis_op(j);
        (&lhs - &rhs).flatten()
    });
}

fn scan_rep_lie(scan: &mut Scan, f: &RepFrame, br: &Tensor3, beta: &Matrix, rho: &ActionMap) {
    scan.singles("Eq. (8)", f.n, |k| (&(&rho.at(&f.a[k]) * beta) - &(beta * rho.basis_op(k))).flatten());
    scan.pairs("Eq. (9)", f.n, |i, j| {
        let lhs = &rho.at(&br.basis_product(i, j)) * beta;
        let rhs = &(&rho.at(&f.a[i]) * rho.basis_op(j)) - &(&rho.at(&f.a[j]) * rho.basis_op(i));
        (&lhs - &rhs).flatten()
    });
}

/// Eqs. (2)–(3).
pub fn check_rep_comm_assoc(rep: &Representation, opts: &CheckOptions) -> Result<CheckReport> {
    let alg = &rep.algebra;
    if alg.kind() != Kind::CommutativeHomAssociative && !opts.force {
        return Err(Error::WrongKind { expected: Kind::CommutativeHomAssociative.tag().into(), found: alg.kind().tag().into() });
    }
    let assoc = alg.relabel(Kind::CommutativeHomAssociative);
    ensure_passes("algebra is not commutative Hom-associative", check_hom_associative(&assoc, &inner_opts(opts))?)?;
    let mut scan = Scan::new(opts);
    scan_rep_comm_assoc(&mut scan, &RepFrame::new(alg.twist()), alg.product(), &rep.beta, &rep.action);
    Ok(scan.finish())
}

/// Eqs. (8)–(9).
pub fn check_rep_lie(rep: &Representation, opts: &CheckOptions) -> Result<CheckReport> {
    let alg = &rep.algebra;
    if alg.kind() != Kind::HomLie && !opts.force {
        return Err(Error::WrongKind { expected: Kind::HomLie.tag().into(), found: alg.kind().tag().into() });
    }
    ensure_passes("algebra is not Hom-Lie", check_hom_lie(&alg.relabel(Kind::HomLie), &inner_opts(opts))?)?;
    let mut scan = Scan::new(opts);
    scan_rep_lie(&mut scan, &RepFrame::new(alg.twist()), alg.product(), &rep.beta, &rep.action);
    Ok(scan.finish())
}

/// Eqs. (17)–(18), after checking both component representations.
///
/// Eq. (18) is checked in the orientation
/// `ρ(α(x))∘μ(y) = μ(α(y))∘ρ(x) + μ([x,y])∘β`.
pub fn check_rep_poisson(rep: &PoissonRepresentation, opts: &CheckOptions) -> Result<CheckReport> {
    let alg = &rep.algebra;
    if alg.kind() != PairKind::HomPoisson && !opts.force {
        return Err(Error::WrongKind { expected: PairKind::HomPoisson.tag().into(), found: alg.kind().tag().into() });
    }
    let inner = inner_opts(opts);
    ensure_passes("algebra is not Hom-Poisson", check_hom_poisson(&alg.relabel(PairKind::HomPoisson), &inner)?)?;
    let f = RepFrame::new(alg.twist());
    let (dot, br) = (alg.first(), alg.second());

    let mut comp = Scan::new(&inner);
    scan_rep_comm_assoc(&mut comp, &f, dot, &rep.beta, &rep.mu);
    ensure_passes("μ is not a representation of the commutative Hom-associative part", comp.finish())?;
    let mut comp = Scan::new(&inner);
    scan_rep_lie(&mut comp, &f, br, &rep.beta, &rep.rho);
    ensure_passes("ρ is not a representation of the Hom-Lie part", comp.finish())?;

    let (beta, rho, mu) = (&rep.beta, &rep.rho, &rep.mu);
    let mut scan = Scan::new(opts);
    scan.pairs("Eq. (17)", f.n, |i, j| {
        let lhs = &rho.at(&dot.basis_product(i, j)) * beta;
        let r1 = &mu.at(&f.a[j]) * rho.basis_op(i);
        let r2 = &mu.at(&f.a[i]) * rho.basis_op(j);
        (&(&lhs - &r1) - &r2).flatten()
    });
    scan.pairs("Eq. (18)", f.n, |i, j| {
        let lhs = &rho.at(&f.a[i]) * mu.basis_op(j);
        let r1 = &mu.at(&f.a[j]) * rho.basis_op(i);
        let r2 = &mu.at(&br.basis_product(i, j)) * beta;
        (&(&lhs - &r1) - &r2).flatten()
    });
    Ok(scan.finish())
}

/// Regular representation `L` of a commutative Hom-associative algebra, or
/// adjoint representation `ad` of a Hom-Lie algebra, with `β = α`.
pub fn regular_representation(a: &HomAlgebra) -> Result<Representation> {
    let report = match a.kind() {
        Kind::CommutativeHomAssociative => check_hom_associative(a, &CheckOptions::default())?,
        Kind::HomLie => check_hom_lie(a, &CheckOptions::default())?,
        other => {
            return Err(Error::WrongKind {
                expected: "commutative-hom-associative or hom-lie".into(),
                found: other.tag().into(),
            })
        }
    };
    ensure_passes("algebra fails its kind checker", report)?;
    Ok(Representation {
        algebra: a.clone(),
        beta: a.twist().clone(),
        action: ActionMap::left_multiplication(a.product()),
    })
}

/// `(A, α, ad, L)`.
pub fn regular_poisson_representation(a: &HomPairAlgebra) -> Result<PoissonRepresentation> {
    ensure_passes("algebra is not Hom-Poisson", check_hom_poisson(a, &CheckOptions::default())?)?;
    Ok(PoissonRepresentation {
        algebra: a.clone(),
        beta: a.twist().clone(),
        rho: ActionMap::left_multiplication(a.second()),
        mu: ActionMap::left_multiplication(a.first()),
    })
}

/// Left `*`- and `⋄`-multiplications of a Hom-pre-Poisson algebra, as a
/// representation `(A, α, ρ = L_*, μ = L_⋄)` of its sub-adjacent Hom-Poisson algebra.
pub fn prepoisson_representation(pp: &HomPairAlgebra) -> Result<PoissonRepresentation> {
    ensure_passes("algebra is not Hom-pre-Poisson", check_hom_pre_poisson(pp, &CheckOptions::default())?)?;
    let sub = subadjacent_poisson(pp)?;
    Ok(PoissonRepresentation {
        algebra: sub,
        beta: pp.twist().clone(),
        rho: ActionMap::left_multiplication(pp.second()),
        mu: ActionMap::left_multiplication(pp.first()),
    })
}

/// `⟨A*(x)ξ, u⟩ = −⟨ξ, A(x)u⟩` in dual-basis coordinates.
fn plain_dual(op: &Matrix) -> Matrix {
    -&op.transpose()
}

/// `x ↦ A*(α(x)) ∘ (β⁻²)*`.
fn twisted_dual(action: &ActionMap, alpha: &Matrix, beta_inv_sq_t: &Matrix) -> ActionMap {
    action.map(|k| &plain_dual(&action.at(&alpha.column(k))) * beta_inv_sq_t)
}

fn inverse_beta(beta: &Matrix) -> Result<Matrix> {
    beta.inverse().map_err(|_| Error::Singular("β must be invertible to dualize".into()))
}

/// `(V*, (β⁻¹)*, −μ*)` with the twisted `μ*`.
pub fn dual_rep_comm_assoc(rep: &Representation) -> Result<Representation> {
    ensure_passes("not a representation", check_rep_comm_assoc(rep, &CheckOptions::default())?)?;
    let inv = inverse_beta(&rep.beta)?;
    let inv_sq_t = inv.pow(2).transpose();
    let tw = twisted_dual(&rep.action, rep.algebra.twist(), &inv_sq_t);
    Ok(Representation {
        algebra: rep.algebra.clone(),
        beta: inv.transpose(),
        action: tw.map(|k| -tw.basis_op(k)),
    })
}

/// `(V*, (β⁻¹)*, ρ*)` with the twisted `ρ*`, not negated.
pub fn dual_rep_lie(rep: &Representation) -> Result<Representation> {
    ensure_passes("not a representation", check_rep_lie(rep, &CheckOptions::default())?)?;
    let inv = inverse_beta(&rep.beta)?;
    let inv_sq_t = inv.pow(2).transpose();
    Ok(Representation {
        algebra: rep.algebra.clone(),
        beta: inv.transpose(),
        action: twisted_dual(&rep.action, rep.algebra.twist(), &inv_sq_t),
    })
}

/// `(V*, (β⁻¹)*, ρ*, −μ*)`.
pub fn dual_rep_poisson(rep: &PoissonRepresentation) -> Result<PoissonRepresentation> {
    ensure_passes("not a representation", check_rep_poisson(rep, &CheckOptions::default())?)?;
    let inv = inverse_beta(&rep.beta)?;
    let inv_sq_t = inv.pow(2).transpose();
    let alpha = rep.algebra.twist();
    let mu = twisted_dual(&rep.mu, alpha, &inv_sq_t);
    Ok(PoissonRepresentation {
        algebra: rep.algebra.clone(),
        beta: inv.transpose(),
        rho: twisted_dual(&rep.rho, alpha, &inv_sq_t),
        mu: mu.map(|k| -mu.basis_op(k)),
    })
}
