//! Truncated Hom-dendriform formal deformations of Hom-zinbiel algebras and
//! their semi-classical limits.
//!
//! A deformation of order `N` stores `≺_i, ≻_i` for `i = 1..N`; the order-0
//! terms are derived from the base product according to a
//! [`ZeroOrderConvention`]. The deformation equations are checked for
//! `n = 1..N` only.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{ensure_multiplicative, HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::check::{CheckOptions, CheckReport, Scan};
use crate::checkers::check_hom_zinbiel;
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Tensor3, Vector};
use crate::representations::ensure_passes;

/// How the order-0 terms are read off the base product `⋄`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ZeroOrderConvention {
    /// `x ≻_0 y = x⋄y` and `x ≺_0 y = y⋄x`: the dendriform structure of a
    /// zinbiel algebra.
    #[default]
    SuccIsProduct,
    /// `x ≺_0 y = x⋄y` and `x ≻_0 y = y⋄x`.
    PrecIsProduct,
}

impl ZeroOrderConvention {
    pub fn tag(self) -> &'static str {
        match self {
            ZeroOrderConvention::SuccIsProduct => "succ-is-product",
            ZeroOrderConvention::PrecIsProduct => "prec-is-product",
        }
    }
}

impl fmt::Display for ZeroOrderConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ZeroOrderConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "succ-is-product" => Ok(ZeroOrderConvention::SuccIsProduct),
            "prec-is-product" => Ok(ZeroOrderConvention::PrecIsProduct),
            _ => Err(Error::Invalid(format!("unknown order-0 convention {s:?}"))),
        }
    }
}

/// Which of the two deformed products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Prec,
    Succ,
}

/// `≺_t = Σ ≺_i tⁱ`, `≻_t = Σ ≻_i tⁱ`, truncated at order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: HomAlgebra,
    prec: Vec<Tensor3>,
    succ: Vec<Tensor3>,
    convention: ZeroOrderConvention,
}

impl TruncatedDeformation {
    /// `prec[i - 1]` is `≺_i`, `succ[i - 1]` is `≻_i`.
    pub fn new(base: HomAlgebra, prec: Vec<Tensor3>, succ: Vec<Tensor3>) -> Result<Self> {
        Self::with_convention(base, prec, succ, ZeroOrderConvention::default())
    }

    pub fn with_convention(
        base: HomAlgebra,
        prec: Vec<Tensor3>,
        succ: Vec<Tensor3>,
        convention: ZeroOrderConvention,
    ) -> Result<Self> {
        if base.kind() != Kind::HomZinbiel {
            return Err(Error::WrongKind { expected: Kind::HomZinbiel.tag().into(), found: base.kind().tag().into() });
        }
        if prec.is_empty() || prec.len() != succ.len() {
            return Err(Error::Invalid(format!(
                "need the same positive number of ≺ and ≻ terms, got {} and {}",
                prec.len(),
                succ.len()
            )));
        }
        let n = base.dim();
        if let Some(t) = prec.iter().chain(&succ).find(|t| t.dim() != n) {
            return Err(Error::dims(format!("deformation term of dimension {} over a base of dimension {n}", t.dim())));
        }
        let names: Vec<String> = (1..=prec.len()).flat_map(|i| [format!("prec_{i}"), format!("succ_{i}")]).collect();
        let terms: Vec<(&str, &Tensor3)> = prec
            .iter()
            .zip(&succ)
            .enumerate()
            .flat_map(|(i, (p, s))| [(names[2 * i].as_str(), p), (names[2 * i + 1].as_str(), s)])
            .collect();
        ensure_multiplicative(base.twist(), &terms)?;
        Ok(TruncatedDeformation { base, prec, succ, convention })
    }

    /// Every higher term zero.
    pub fn trivial(base: HomAlgebra, order: usize) -> Result<Self> {
        let n = base.dim();
        Self::new(base, vec![Tensor3::zeros(n); order], vec![Tensor3::zeros(n); order])
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.prec.len()
    }

    pub fn convention(&self) -> ZeroOrderConvention {
        self.convention
    }

    pub fn prec_terms(&self) -> &[Tensor3] {
        &self.prec
    }

    pub fn succ_terms(&self) -> &[Tensor3] {
        &self.succ
    }

    /// `≺_i` for `i = 0..N`.
    pub fn prec(&self, i: usize) -> Tensor3 {
        match (i, self.convention) {
            (0, ZeroOrderConvention::SuccIsProduct) => self.base.product().flip(),
            (0, ZeroOrderConvention::PrecIsProduct) => self.base.product().clone(),
            _ => self.prec[i - 1].clone(),
        }
    }

    /// `≻_i` for `i = 0..N`.
    pub fn succ(&self, i: usize) -> Tensor3 {
        match (i, self.convention) {
            (0, ZeroOrderConvention::SuccIsProduct) => self.base.product().clone(),
            (0, ZeroOrderConvention::PrecIsProduct) => self.base.product().flip(),
            _ => self.succ[i - 1].clone(),
        }
    }

    /// The first `m` orders only.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.order() {
            return Err(Error::Invalid(format!("cannot truncate order {} to {m}", self.order())));
        }
        Ok(TruncatedDeformation {
            base: self.base.clone(),
            prec: self.prec[..m].to_vec(),
            succ: self.succ[..m].to_vec(),
            convention: self.convention,
        })
    }
}

fn scan_order(scan: &mut Scan, n: usize, prec: &[Tensor3], succ: &[Tensor3], alpha: &Matrix) {
    let d = alpha.rows();
    let a: Vec<Vector> = (0..d).map(|i| alpha.column(i)).collect();
    let pairs: Vec<(usize, usize)> = (0..=n).map(|i| (i, n - i)).collect();
    scan.triples(&format!("Eq. (29), n = {n}"), d, |x, y, z| {
        let mut acc = Vector::zeros(d);
        for &(i, j) in &pairs {
            acc += &prec[j].apply(&prec[i].basis_product(x, y), &a[z]);
            let inner = &prec[j].basis_product(y, z) + &succ[j].basis_product(y, z);
            acc = &acc - &prec[i].apply(&a[x], &inner);
        }
        acc
    });
    scan.triples(&format!("Eq. (30), n = {n}"), d, |x, y, z| {
        let mut acc = Vector::zeros(d);
        for &(i, j) in &pairs {
            acc += &prec[j].apply(&succ[i].basis_product(x, y), &a[z]);
            acc = &acc - &succ[i].apply(&a[x], &prec[j].basis_product(y, z));
        }
        acc
    });
    scan.triples(&format!("Eq. (31), n = {n}"), d, |x, y, z| {
        let mut acc = Vector::zeros(d);
        for &(i, j) in &pairs {
            acc += &succ[i].apply(&a[x], &succ[j].basis_product(y, z));
            let inner = &prec[i].basis_product(x, y) + &succ[i].basis_product(x, y);
            acc = &acc - &succ[j].apply(&inner, &a[z]);
        }
        acc
    });
}

fn all_terms(d: &TruncatedDeformation) -> (Vec<Tensor3>, Vec<Tensor3>) {
    ((0..=d.order()).map(|i| d.prec(i)).collect(), (0..=d.order()).map(|i| d.succ(i)).collect())
}

/// Eqs. (29)–(31) for `n = 1..N`; labels carry the order, e.g. `Eq. (31), n = 2`.
pub fn check_deformation(d: &TruncatedDeformation, opts: &CheckOptions) -> Result<CheckReport> {
    ensure_passes("base is not Hom-zinbiel", check_hom_zinbiel(&d.base, &CheckOptions::default())?)?;
    let (prec, succ) = all_terms(d);
    let mut scan = Scan::new(opts);
    for n in 1..=d.order() {
        scan_order(&mut scan, n, &prec, &succ, d.base.twist());
    }
    Ok(scan.finish())
}

/// `(A, ⋄, *, α)` with `x*y = x≻_1 y − y≺_1 x`. Needs order at least 2.
pub fn semiclassical_limit(d: &TruncatedDeformation) -> Result<HomPairAlgebra> {
    if d.order() < 2 {
        return Err(Error::Invalid(format!("semi-classical limit needs order ≥ 2, got {}", d.order())));
    }
    ensure_passes("not a Hom-dendriform deformation", check_deformation(d, &CheckOptions::default())?)?;
    let star = &d.succ(1) - &d.prec(1).flip();
    HomPairAlgebra::new(PairKind::HomPrePoisson, d.base.product().clone(), star, d.base.twist().clone())
}

/// Coefficients of `t⁰..t^N` in `x ≺_t y` or `x ≻_t y`.
pub fn truncated_product(d: &TruncatedDeformation, x: &Vector, y: &Vector, side: Side) -> Result<Vec<Vector>> {
    let n = d.base.dim();
    if x.dim() != n || y.dim() != n {
        return Err(Error::dims(format!("vectors of dimension {} and {}, base has {n}", x.dim(), y.dim())));
    }
    Ok((0..=d.order())
        .map(|i| match side {
            Side::Prec => d.prec(i).apply(x, y),
            Side::Succ => d.succ(i).apply(x, y),
        })
        .collect())
}

/// Order-`n` residuals as an affine function of the unknown `(≺_n, ≻_n)`,
/// returned as `(A, b)` with residual `A·v + b`; `v` lists the entries of
/// `≺_n` then `≻_n` in `(i, j, k)` order.
fn order_system(d: &TruncatedDeformation, n: usize) -> (Matrix, Vector) {
    let dim = d.base.dim();
    let cube = dim * dim * dim;
    let (mut prec, mut succ) = all_terms(d);
    prec.resize(n + 1, Tensor3::zeros(dim));
    succ.resize(n + 1, Tensor3::zeros(dim));
    let residual = |prec: &[Tensor3], succ: &[Tensor3]| {
        let mut scan = Scan::new(&CheckOptions::all());
        scan_order(&mut scan, n, prec, succ, d.base.twist());
        let mut out = Vector::zeros(3 * cube * dim);
        for v in scan.finish().violations {
            let eq = ["Eq. (29)", "Eq. (30)", "Eq. (31)"].iter().position(|l| v.identity.starts_with(l)).unwrap();
            let base = eq * cube * dim + (v.indices[0] * dim * dim + v.indices[1] * dim + v.indices[2]) * dim;
            for k in 0..dim {
                out.0[base + k] = v.discrepancy[k].clone();
            }
        }
        out
    };
    prec[n] = Tensor3::zeros(dim);
    succ[n] = Tensor3::zeros(dim);
    let b = residual(&prec, &succ);
    let cols: Vec<Vector> = (0..2 * cube)
        .map(|u| {
            let (mut p, mut s) = (prec.clone(), succ.clone());
            let e = u % cube;
            let target = if u < cube { &mut p[n] } else { &mut s[n] };
            target.set(e / (dim * dim), (e / dim) % dim, e % dim, int(1));
            &residual(&p, &s) - &b
        })
        .collect();
    (Matrix::from_columns(3 * cube * dim, &cols), b)
}

fn split_unknowns(dim: usize, v: &Vector) -> (Tensor3, Tensor3) {
    let cube = dim * dim * dim;
    let at = |off: usize| Tensor3::from_fn(dim, |i, j, k| v[off + i * dim * dim + j * dim + k].clone());
    (at(0), at(cube))
}

/// Basis of all first-order terms `(≺_1, ≻_1)` solving the `n = 1` equations.
///
/// Multiplicativity of the twist is not imposed here.
pub fn first_order_solutions(base: &HomAlgebra, convention: ZeroOrderConvention) -> Result<Vec<(Tensor3, Tensor3)>> {
    let n = base.dim();
    let d = TruncatedDeformation::with_convention(base.clone(), vec![Tensor3::zeros(n)], vec![Tensor3::zeros(n)], convention)?;
    let (a, _) = order_system(&d, 1);
    Ok(a.nullspace().iter().map(|v| split_unknowns(n, v)).collect())
}

/// One solution `(≺_{N+1}, ≻_{N+1})` extending `d` by an order, if any.
pub fn extend_order(d: &TruncatedDeformation) -> Option<(Tensor3, Tensor3)> {
    let (a, b) = order_system(d, d.order() + 1);
    a.solve(&-&b).map(|v| split_unknowns(d.base.dim(), &v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::check_hom_pre_poisson;
    use crate::fixtures::{d1, f2, p1, z3};

    #[test]
    fn trivial_deformation_of_f2_limits_to_p1() {
        let d = TruncatedDeformation::trivial(f2(), 2).unwrap();
        assert!(check_deformation(&d, &CheckOptions::default()).unwrap().passed());
        assert_eq!(semiclassical_limit(&d).unwrap(), p1());
        assert!(matches!(semiclassical_limit(&d.truncate(1).unwrap()), Err(Error::Invalid(_))));
    }

    #[test]
    fn d1_examples() {
        let d = d1();
        assert!(check_deformation(&d, &CheckOptions::default()).unwrap().passed());
        let lim = semiclassical_limit(&d).unwrap();
        assert_eq!(lim.second(), &Tensor3::from_entries(2, &[(0, 0, 1, 1)]));
        assert!(check_hom_pre_poisson(&lim, &CheckOptions::default()).unwrap().passed());
        let e1 = Vector::basis(2, 0);
        let series = truncated_product(&d, &e1, &e1, Side::Succ).unwrap();
        assert_eq!(series, vec![Vector::zeros(2), Vector::basis(2, 1), Vector::zeros(2)]);
    }

    #[test]
    fn d1_with_extra_term_fails_at_order_two() {
        let d = d1();
        let mut succ = d.succ_terms().to_vec();
        succ[0].set(1, 1, 0, int(1));
        let bad = TruncatedDeformation::new(d.base().clone(), d.prec_terms().to_vec(), succ).unwrap();
        let r = check_deformation(&bad, &CheckOptions::default()).unwrap();
        assert!(r.first().unwrap().identity.ends_with("n = 2"));
    }

    fn limits(base: &HomAlgebra, conv: ZeroOrderConvention) -> Vec<Option<bool>> {
        first_order_solutions(base, conv)
            .unwrap()
            .into_iter()
            .map(|(p, s)| {
                let d = TruncatedDeformation::with_convention(base.clone(), vec![p.clone()], vec![s.clone()], conv).unwrap();
                let (p2, s2) = extend_order(&d)?;
                let d2 = TruncatedDeformation::with_convention(base.clone(), vec![p, p2], vec![s, s2], conv).unwrap();
                let lim = semiclassical_limit(&d2).unwrap();
                Some(check_hom_pre_poisson(&lim, &CheckOptions::default()).unwrap().passed())
            })
            .collect()
    }

    #[test]
    fn first_order_solutions_of_z3_extend_to_pre_poisson_limits() {
        let got = limits(&z3(), ZeroOrderConvention::SuccIsProduct);
        assert_eq!(got.len(), 10);
        assert!(got.iter().all(|r| *r == Some(true)));
    }

    #[test]
    fn prec_is_product_convention_breaks_the_limit_on_z3() {
        let got = limits(&z3(), ZeroOrderConvention::PrecIsProduct);
        assert!(got.contains(&None));
        assert!(got.contains(&Some(false)));
    }
}
