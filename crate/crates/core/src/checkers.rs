//! Identity checkers for every single- and two-product structure.
//!
//! Each checker scans basis tuples in lexicographic order, identity by
//! identity, and reports `LHS − RHS` for every failing tuple (or only the
//! first one unless [`CheckOptions::all_violations`] is set). Identity labels
//! follow the equation numbering of the defining identities.

use crate::algebra::{AnyAlgebra, HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::check::{CheckOptions, CheckReport, Scan};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};

/// Basis vectors and their twists, precomputed once per check.
pub(crate) struct Frame {
    pub e: Vec<Vector>,
    pub a: Vec<Vector>,
}

impl Frame {
    pub fn new(twist: &Matrix) -> Self {
        let n = twist.rows();
        Frame { e: (0..n).map(|i| Vector::basis(n, i)).collect(), a: (0..n).map(|i| twist.column(i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.e.len()
    }
}

fn require(ok: bool, opts: &CheckOptions, expected: &str, found: &str) -> Result<()> {
    if ok || opts.force {
        Ok(())
    } else {
        Err(Error::WrongKind { expected: expected.into(), found: found.into() })
    }
}

// Identity families on raw tensors. Shared by the single- and two-product
// checkers so that a Hom-Poisson check literally contains the commutative
// Hom-associative and Hom-Lie checks.

pub(crate) fn scan_associative(scan: &mut Scan, f: &Frame, m: &Tensor3, commutative: bool) {
    scan.triples("Eq. (1)", f.n(), |i, j, k| {
        let lhs = m.apply(&f.a[i], &m.basis_product(j, k));
        let rhs = m.apply(&m.basis_product(i, j), &f.a[k]);
        &lhs - &rhs
    });
    if commutative {
        scan.pairs("commutativity", f.n(), |i, j| &m.basis_product(i, j) - &m.basis_product(j, i));
    }
}

pub(crate) fn scan_lie(scan: &mut Scan, f: &Frame, b: &Tensor3) {
    scan.pairs("skew-symmetry", f.n(), |i, j| &b.basis_product(i, j) + &b.basis_product(j, i));
    scan.triples("Eq. (7)", f.n(), |i, j, k| {
        let t1 = b.apply(&f.a[i], &b.basis_product(j, k));
        let t2 = b.apply(&f.a[j], &b.basis_product(k, i));
        let t3 = b.apply(&f.a[k], &b.basis_product(i, j));
        &(&t1 + &t2) + &t3
    });
}

pub(crate) fn scan_pre_lie(scan: &mut Scan, f: &Frame, s: &Tensor3) {
    scan.triples("Eq. (11)", f.n(), |i, j, k| {
        let lhs = &s.apply(&s.basis_product(i, j), &f.a[k]) - &s.apply(&f.a[i], &s.basis_product(j, k));
        let rhs = &s.apply(&s.basis_product(j, i), &f.a[k]) - &s.apply(&f.a[j], &s.basis_product(i, k));
        &lhs - &rhs
    });
}

pub(crate) fn scan_zinbiel(scan: &mut Scan, f: &Frame, z: &Tensor3) {
    scan.triples("Eq. (12)", f.n(), |i, j, k| {
        let lhs = z.apply(&f.a[i], &z.basis_product(j, k));
        let r1 = z.apply(&z.basis_product(i, j), &f.a[k]);
        let r2 = z.apply(&z.basis_product(j, i), &f.a[k]);
        &(&lhs - &r1) - &r2
    });
}

pub(crate) fn scan_dendriform(scan: &mut Scan, f: &Frame, prec: &Tensor3, succ: &Tensor3) {
    scan.triples("Eq. (13)", f.n(), |i, j, k| {
        let lhs = prec.apply(&prec.basis_product(i, j), &f.a[k]);
        let inner = &prec.basis_product(j, k) + &succ.basis_product(j, k);
        &lhs - &prec.apply(&f.a[i], &inner)
    });
    scan.triples("Eq. (14)", f.n(), |i, j, k| {
        let lhs = prec.apply(&succ.basis_product(i, j), &f.a[k]);
        &lhs - &succ.apply(&f.a[i], &prec.basis_product(j, k))
    });
    scan.triples("Eq. (15)", f.n(), |i, j, k| {
        let lhs = succ.apply(&f.a[i], &succ.basis_product(j, k));
        let inner = &prec.basis_product(i, j) + &succ.basis_product(i, j);
        &lhs - &succ.apply(&inner, &f.a[k])
    });
}

pub(crate) fn scan_permutative(scan: &mut Scan, f: &Frame, p: &Tensor3) {
    scan.triples("Eq. (48), left", f.n(), |i, j, k| {
        &p.apply(&f.a[i], &p.basis_product(j, k)) - &p.apply(&p.basis_product(i, j), &f.a[k])
    });
    scan.triples("Eq. (48), right", f.n(), |i, j, k| {
        &p.apply(&p.basis_product(i, j), &f.a[k]) - &p.apply(&p.basis_product(j, i), &f.a[k])
    });
}

pub(crate) fn scan_leibniz(scan: &mut Scan, f: &Frame, l: &Tensor3) {
    scan.triples("Eq. (51)", f.n(), |i, j, k| {
        let lhs = l.apply(&l.basis_product(i, j), &f.a[k]);
        let r1 = l.apply(&f.a[i], &l.basis_product(j, k));
        let r2 = l.apply(&f.a[j], &l.basis_product(i, k));
        &(&lhs - &r1) + &r2
    });
}

pub(crate) fn scan_poisson_compat(scan: &mut Scan, f: &Frame, dot: &Tensor3, br: &Tensor3) {
    scan.triples("Eq. (16)", f.n(), |i, j, k| {
        let lhs = br.apply(&f.a[i], &dot.basis_product(j, k));
        let r1 = dot.apply(&br.basis_product(i, j), &f.a[k]);
        let r2 = dot.apply(&f.a[j], &br.basis_product(i, k));
        &(&lhs - &r1) - &r2
    });
}

pub(crate) fn scan_pre_poisson_compat(scan: &mut Scan, f: &Frame, z: &Tensor3, s: &Tensor3) {
    scan.triples("Eq. (21)", f.n(), |i, j, k| {
        let comm = &s.basis_product(i, j) - &s.basis_product(j, i);
        let lhs = z.apply(&comm, &f.a[k]);
        let r1 = s.apply(&f.a[i], &z.basis_product(j, k));
        let r2 = z.apply(&f.a[j], &s.basis_product(i, k));
        &(&lhs - &r1) + &r2
    });
    scan.triples("Eq. (22)", f.n(), |i, j, k| {
        let sym = &z.basis_product(i, j) + &z.basis_product(j, i);
        let lhs = s.apply(&sym, &f.a[k]);
        let r1 = z.apply(&f.a[i], &s.basis_product(j, k));
        let r2 = z.apply(&f.a[j], &s.basis_product(i, k));
        &(&lhs - &r1) - &r2
    });
}

pub(crate) fn scan_dual_pre_poisson_compat(scan: &mut Scan, f: &Frame, p: &Tensor3, l: &Tensor3) {
    scan.triples("Eq. (54)", f.n(), |i, j, k| {
        let lhs = l.apply(&f.a[i], &p.basis_product(j, k));
        let r1 = p.apply(&l.basis_product(i, j), &f.a[k]);
        let r2 = p.apply(&f.a[j], &l.basis_product(i, k));
        &(&lhs - &r1) - &r2
    });
    scan.triples("Eq. (55)", f.n(), |i, j, k| {
        let lhs = l.apply(&p.basis_product(i, j), &f.a[k]);
        let r1 = p.apply(&f.a[i], &l.basis_product(j, k));
        let r2 = p.apply(&f.a[j], &l.basis_product(i, k));
        &(&lhs - &r1) - &r2
    });
    scan.triples("Eq. (56)", f.n(), |i, j, k| {
        let sum = &l.basis_product(i, j) + &l.basis_product(j, i);
        p.apply(&sum, &f.a[k])
    });
}

/// Twist multiplicativity of every product of the algebra.
pub fn check_multiplicativity(alg: &AnyAlgebra, opts: &CheckOptions) -> CheckReport {
    match alg {
        AnyAlgebra::Single(a) => a.check_multiplicativity(opts),
        AnyAlgebra::Pair(a) => a.check_multiplicativity(opts),
    }
}

/// `α(x)·(y·z) = (x·y)·α(z)`, plus commutativity for the commutative kind.
pub fn check_hom_associative(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    let k = alg.kind();
    require(
        matches!(k, Kind::HomAssociative | Kind::CommutativeHomAssociative),
        opts,
        "hom-associative",
        k.tag(),
    )?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_associative(&mut scan, &f, alg.product(), k == Kind::CommutativeHomAssociative);
    Ok(scan.finish())
}

/// Skew-symmetry and the Hom-Jacobi identity.
pub fn check_hom_lie(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == Kind::HomLie, opts, "hom-lie", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_lie(&mut scan, &f, alg.product());
    Ok(scan.finish())
}

pub fn check_hom_pre_lie(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == Kind::HomPreLie, opts, "hom-pre-lie", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_pre_lie(&mut scan, &f, alg.product());
    Ok(scan.finish())
}

pub fn check_hom_zinbiel(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == Kind::HomZinbiel, opts, "hom-zinbiel", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_zinbiel(&mut scan, &f, alg.product());
    Ok(scan.finish())
}

pub fn check_hom_permutative(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == Kind::HomPermutative, opts, "hom-permutative", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_permutative(&mut scan, &f, alg.product());
    Ok(scan.finish())
}

pub fn check_hom_leibniz(alg: &HomAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == Kind::HomLeibniz, opts, "hom-leibniz", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_leibniz(&mut scan, &f, alg.product());
    Ok(scan.finish())
}

/// First product is `≺`, second is `≻`.
pub fn check_hom_dendriform(alg: &HomPairAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == PairKind::HomDendriform, opts, "hom-dendriform", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_dendriform(&mut scan, &f, alg.first(), alg.second());
    Ok(scan.finish())
}

/// Commutative Hom-associative `·`, Hom-Lie `[·,·]`, and the Hom-Leibniz rule.
pub fn check_hom_poisson(alg: &HomPairAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == PairKind::HomPoisson, opts, "hom-poisson", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_associative(&mut scan, &f, alg.first(), true);
    scan_lie(&mut scan, &f, alg.second());
    scan_poisson_compat(&mut scan, &f, alg.first(), alg.second());
    Ok(scan.finish())
}

/// Hom-zinbiel `⋄`, Hom-pre-Lie `*`, and the two compatibilities.
pub fn check_hom_pre_poisson(alg: &HomPairAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == PairKind::HomPrePoisson, opts, "hom-pre-poisson", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_zinbiel(&mut scan, &f, alg.first());
    scan_pre_lie(&mut scan, &f, alg.second());
    scan_pre_poisson_compat(&mut scan, &f, alg.first(), alg.second());
    Ok(scan.finish())
}

/// Hom-permutative `•`, Hom-Leibniz `{·,·}`, and the three compatibilities.
pub fn check_dual_hom_pre_poisson(alg: &HomPairAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    require(alg.kind() == PairKind::DualHomPrePoisson, opts, "dual-hom-pre-poisson", alg.kind().tag())?;
    let f = Frame::new(alg.twist());
    let mut scan = Scan::new(opts);
    scan_permutative(&mut scan, &f, alg.first());
    scan_leibniz(&mut scan, &f, alg.second());
    scan_dual_pre_poisson_compat(&mut scan, &f, alg.first(), alg.second());
    Ok(scan.finish())
}

/// Runs the checker matching the algebra's own kind.
pub fn check_algebra(alg: &HomAlgebra, opts: &CheckOptions) -> CheckReport {
    let r = match alg.kind() {
        Kind::HomAssociative | Kind::CommutativeHomAssociative => check_hom_associative(alg, opts),
        Kind::HomLie => check_hom_lie(alg, opts),
        Kind::HomPreLie => check_hom_pre_lie(alg, opts),
        Kind::HomZinbiel => check_hom_zinbiel(alg, opts),
        Kind::HomPermutative => check_hom_permutative(alg, opts),
        Kind::HomLeibniz => check_hom_leibniz(alg, opts),
    };
    r.expect("kind matches its own checker")
}

pub fn check_pair_algebra(alg: &HomPairAlgebra, opts: &CheckOptions) -> CheckReport {
    let r = match alg.kind() {
        PairKind::HomPoisson => check_hom_poisson(alg, opts),
        PairKind::HomPrePoisson => check_hom_pre_poisson(alg, opts),
        PairKind::HomDendriform => check_hom_dendriform(alg, opts),
        PairKind::DualHomPrePoisson => check_dual_hom_pre_poisson(alg, opts),
    };
    r.expect("kind matches its own checker")
}

pub fn check_any(alg: &AnyAlgebra, opts: &CheckOptions) -> CheckReport {
    match alg {
        AnyAlgebra::Single(a) => check_algebra(a, opts),
        AnyAlgebra::Pair(a) => check_pair_algebra(a, opts),
    }
}

/// Checks that `f` preserves every product and intertwines the twists.
///
/// For Hom-pre-Poisson algebras the identities carry their usual labels
/// (23)–(25); other kinds use `morphism (<product>)` and `Eq. (25)`.
pub fn check_morphism(src: &AnyAlgebra, dst: &AnyAlgebra, f: &Matrix, opts: &CheckOptions) -> Result<CheckReport> {
    if src.kind_tag() != dst.kind_tag() {
        return Err(Error::WrongKind { expected: src.kind_tag().into(), found: dst.kind_tag().into() });
    }
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Err(Error::dims(format!(
            "morphism is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim(),
            src.dim()
        )));
    }
    let pre_poisson = src.kind_tag() == PairKind::HomPrePoisson.tag();
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|j| f.column(j)).collect();
    let mut scan = Scan::new(opts);
    for (idx, ((name, ts), (_, td))) in src.products().into_iter().zip(dst.products()).enumerate() {
        let label = if pre_poisson {
            format!("Eq. ({})", 23 + idx)
        } else {
            format!("morphism ({name})")
        };
        scan.pairs(&label, n, |i, j| &f.apply(&ts.basis_product(i, j)) - &td.apply(&images[i], &images[j]));
    }
    let (a_src, a_dst) = (src.twist(), dst.twist());
    scan.singles("Eq. (25)", n, |i| &f.apply(&a_src.column(i)) - &a_dst.apply(&images[i]));
    Ok(scan.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn first() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn wrong_kind_is_an_error_unless_forced() {
        let f1 = fixtures::f1();
        assert!(matches!(check_hom_zinbiel(&f1, &first()), Err(Error::WrongKind { .. })));
        let forced = check_hom_zinbiel(&f1, &CheckOptions::forced()).unwrap();
        assert!(!forced.passed());
    }

    #[test]
    fn lie_skewness_break_reports_pair() {
        // F3 with [e2,e1] = e2 instead of -e2.
        let b = Tensor3::from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, 1)]);
        let alg = HomAlgebra::untwisted(Kind::HomLie, b).unwrap();
        let r = check_hom_lie(&alg, &first()).unwrap();
        let v = r.first().unwrap();
        assert_eq!(v.identity, "skew-symmetry");
        // lexicographically first failing pair is (e1,e2); its mirror (e2,e1) follows in full mode
        assert_eq!(v.indices, vec![0, 1]);
        let all = check_hom_lie(&alg, &CheckOptions::all()).unwrap();
        assert!(all.of("skew-symmetry").any(|v| v.indices == vec![1, 0]));
    }

    #[test]
    fn poisson_negative_control() {
        let r = check_hom_poisson(&fixtures::f7(), &first()).unwrap();
        let v = r.first().unwrap();
        assert_eq!(v.identity, "Eq. (16)");
        assert_eq!(v.indices, vec![1, 0, 0]);
        assert_eq!(v.discrepancy, Vector::from_i64(&[0, 1]));
    }

    #[test]
    fn morphism_checks() {
        let p1: AnyAlgebra = fixtures::p1().into();
        assert!(check_morphism(&p1, &p1, &Matrix::identity(2), &first()).unwrap().passed());

        let f0 = AnyAlgebra::Pair(HomPairAlgebra::zero(PairKind::HomPrePoisson, 2));
        assert!(check_morphism(&p1, &f0, &Matrix::zeros(2, 2), &first()).unwrap().passed());

        let f2a: AnyAlgebra = fixtures::f2_alpha().into();
        let alpha = fixtures::f2_alpha().twist().clone();
        assert!(check_morphism(&f2a, &f2a, &alpha, &first()).unwrap().passed());

        let f1: AnyAlgebra = fixtures::f1().into();
        assert!(matches!(check_morphism(&p1, &f1, &Matrix::identity(2), &first()), Err(Error::WrongKind { .. })));
        assert!(matches!(
            check_morphism(&p1, &p1, &Matrix::identity(3), &first()),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn morphism_detects_twist_mismatch() {
        let f2a: AnyAlgebra = fixtures::f2_alpha().into();
        // e1 ↦ e1 + e2 does not commute with diag(2, 4)
        let g = Matrix::from_i64(&[&[1, 0], &[1, 1]]);
        let r = check_morphism(&f2a, &f2a, &g, &CheckOptions::all()).unwrap();
        assert!(!r.passed());
        assert!(r.of("Eq. (25)").count() > 0);
    }
}
