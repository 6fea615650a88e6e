//! Maps between kinds: sub-adjacent algebras, Yau twists, direct sums,
//! semidirect products and changes of basis.

use crate::algebra::{check_multiplicativity_of, AnyAlgebra, HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::check::CheckOptions;
use crate::checkers::{
    check_any, check_hom_dendriform, check_hom_pre_lie, check_hom_pre_poisson, check_hom_zinbiel,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::representations::{check_rep_poisson, ensure_passes, PoissonRepresentation};

/// An algebra endomorphism used to twist a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub endo: Matrix,
}

impl TwistSpec {
    pub fn new(endo: Matrix) -> Self {
        TwistSpec { endo }
    }
}

fn sym(t: &Tensor3) -> Tensor3 {
    t + &t.flip()
}

fn commutator(t: &Tensor3) -> Tensor3 {
    t - &t.flip()
}

fn opts() -> CheckOptions {
    CheckOptions::default()
}

/// `x·y = x⋄y + y⋄x`.
pub fn subadjacent_commutative(z: &HomAlgebra) -> Result<HomAlgebra> {
    ensure_passes("input is not Hom-zinbiel", check_hom_zinbiel(z, &opts())?)?;
    HomAlgebra::new(Kind::CommutativeHomAssociative, sym(z.product()), z.twist().clone())
}

/// `[x,y] = x*y − y*x`.
pub fn subadjacent_lie(p: &HomAlgebra) -> Result<HomAlgebra> {
    ensure_passes("input is not Hom-pre-Lie", check_hom_pre_lie(p, &opts())?)?;
    HomAlgebra::new(Kind::HomLie, commutator(p.product()), p.twist().clone())
}

/// `x·y = x≻y + x≺y` and `x*y = x≻y − y≺x`.
pub fn dendriform_split(d: &HomPairAlgebra) -> Result<(HomAlgebra, HomAlgebra)> {
    ensure_passes("input is not Hom-dendriform", check_hom_dendriform(d, &opts())?)?;
    let (prec, succ) = (d.first(), d.second());
    let dot = HomAlgebra::new(Kind::HomAssociative, succ + prec, d.twist().clone())?;
    let star = HomAlgebra::new(Kind::HomPreLie, succ - &prec.flip(), d.twist().clone())?;
    Ok((dot, star))
}

/// `x·y = x⋄y + y⋄x`, `[x,y] = x*y − y*x`.
pub fn subadjacent_poisson(pp: &HomPairAlgebra) -> Result<HomPairAlgebra> {
    ensure_passes("input is not Hom-pre-Poisson", check_hom_pre_poisson(pp, &opts())?)?;
    HomPairAlgebra::new(PairKind::HomPoisson, sym(pp.first()), commutator(pp.second()), pp.twist().clone())
}

/// Composes every product with `α` and installs `α` as the twist.
///
/// The base must carry the identity twist and pass its kind checker.
pub fn yau_twist(base: &AnyAlgebra, t: &TwistSpec) -> Result<AnyAlgebra> {
    if !base.twist().is_identity() {
        return Err(Error::Invalid("Yau twist needs a base with identity twist".into()));
    }
    ensure_passes("base fails its kind checker", check_any(base, &opts()))?;
    if let Some(v) = check_multiplicativity_of(&t.endo, &base.products(), &opts())?.first() {
        let product = base
            .products()
            .iter()
            .map(|(n, _)| *n)
            .find(|n| v.identity.ends_with(&format!("({n})")))
            .unwrap_or("?")
            .to_string();
        return Err(Error::NotMultiplicative { product, pair: (v.indices[0], v.indices[1]) });
    }
    Ok(match base {
        AnyAlgebra::Single(a) => HomAlgebra::new(a.kind(), a.product().compose_left(&t.endo), t.endo.clone())?.into(),
        AnyAlgebra::Pair(a) => HomPairAlgebra::new(
            a.kind(),
            a.first().compose_left(&t.endo),
            a.second().compose_left(&t.endo),
            t.endo.clone(),
        )?
        .into(),
    })
}

/// Composes every product with `α⁻¹` and resets the twist to the identity.
pub fn untwist(h: &AnyAlgebra) -> Result<AnyAlgebra> {
    let inv = h.twist().inverse().map_err(|_| Error::Singular("untwisting needs an invertible twist".into()))?;
    ensure_passes("input fails its kind checker", check_any(h, &opts()))?;
    Ok(match h {
        AnyAlgebra::Single(a) => HomAlgebra::untwisted(a.kind(), a.product().compose_left(&inv))?.into(),
        AnyAlgebra::Pair(a) => {
            HomPairAlgebra::untwisted(a.kind(), a.first().compose_left(&inv), a.second().compose_left(&inv))?.into()
        }
    })
}

/// Componentwise products with twist `α_A ⊕ α_B`.
pub fn direct_sum(a: &HomPairAlgebra, b: &HomPairAlgebra) -> Result<HomPairAlgebra> {
    if a.kind() != b.kind() {
        return Err(Error::WrongKind { expected: a.kind().tag().into(), found: b.kind().tag().into() });
    }
    ensure_passes("left summand fails its kind checker", check_any(&a.clone().into(), &opts()))?;
    ensure_passes("right summand fails its kind checker", check_any(&b.clone().into(), &opts()))?;
    HomPairAlgebra::new(
        a.kind(),
        a.first().direct_sum(b.first()),
        a.second().direct_sum(b.second()),
        a.twist().block_diag(b.twist()),
    )
}

/// `A ⊕ V` with `(x+u)·(y+v) = x·y + μ(x)v + μ(y)u`,
/// `[x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u` and twist `α ⊕ β`.
pub fn semidirect_product(rep: &PoissonRepresentation) -> Result<HomPairAlgebra> {
    ensure_passes("not a Hom-Poisson representation", check_rep_poisson(rep, &opts())?)?;
    let a = rep.algebra();
    let (n, m) = (a.dim(), rep.carrier_dim());
    let (rho, mu) = (rep.rho(), rep.mu());
    // basis e_0..e_{n-1} of A, then e_n.. of V
    let dot = Tensor3::from_products(n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.first().basis_product(i, j).concat(&Vector::zeros(m)),
        (true, false) => Vector::zeros(n).concat(&mu.basis_op(i).column(j - n)),
        (false, true) => Vector::zeros(n).concat(&mu.basis_op(j).column(i - n)),
        (false, false) => Vector::zeros(n + m),
    });
    let bracket = Tensor3::from_products(n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.second().basis_product(i, j).concat(&Vector::zeros(m)),
        (true, false) => Vector::zeros(n).concat(&rho.basis_op(i).column(j - n)),
        (false, true) => Vector::zeros(n).concat(&-&rho.basis_op(j).column(i - n)),
        (false, false) => Vector::zeros(n + m),
    });
    HomPairAlgebra::new(PairKind::HomPoisson, dot, bracket, a.twist().block_diag(rep.beta()))
}

/// Transports an algebra along an invertible `g`: products become
/// `g(g⁻¹x ∘ g⁻¹y)` and the twist `gαg⁻¹`.
pub fn change_basis(alg: &AnyAlgebra, g: &Matrix) -> Result<AnyAlgebra> {
    if g.rows() != alg.dim() || !g.is_square() {
        return Err(Error::dims(format!("change of basis is {}x{} for dimension {}", g.rows(), g.cols(), alg.dim())));
    }
    let inv = g.inverse()?;
    let twist = &(g * alg.twist()) * &inv;
    Ok(match alg {
        AnyAlgebra::Single(a) => HomAlgebra::new(a.kind(), a.product().conjugate(g, &inv), twist)?.into(),
        AnyAlgebra::Pair(a) => {
            HomPairAlgebra::new(a.kind(), a.first().conjugate(g, &inv), a.second().conjugate(g, &inv), twist)?.into()
        }
    })
}
