//! Seeded random instances built from known-good seeds.
//!
//! Random raw tensors almost never satisfy the identities, so instances are
//! produced by pushing fixtures through structure-preserving operations:
//! Yau twists by weight-diagonal endomorphisms, direct sums, changes of basis
//! and scaled O-operators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AnyAlgebra, HomAlgebra, HomPairAlgebra, PairKind};
use crate::constructions::{change_basis, direct_sum, subadjacent_poisson, yau_twist, TwistSpec};
use crate::deformations::{extend_order, first_order_solutions, TruncatedDeformation, ZeroOrderConvention};
use crate::fixtures;
use crate::linalg::{int, Matrix, Scalar, Tensor3};
use crate::operators::{induced_prepoisson, prepoisson_from_cocycle, CocycleVariant, OOperator, TwoCocycle};
use crate::representations::prepoisson_representation;

/// Largest dimension produced by sums.
pub const MAX_DIM: usize = 6;

pub struct Generator {
    rng: ChaCha8Rng,
}

fn pair(a: AnyAlgebra) -> HomPairAlgebra {
    match a {
        AnyAlgebra::Pair(p) => p,
        AnyAlgebra::Single(_) => unreachable!("operation preserves the number of products"),
    }
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn small(&mut self, lo: i64, hi: i64) -> Scalar {
        int(self.rng.gen_range(lo..=hi))
    }

    fn nonzero(&mut self) -> Scalar {
        let v = *[-3i64, -2, -1, 1, 2, 3].choose(&mut self.rng).unwrap();
        int(v)
    }

    /// A diagonal multiplicative endomorphism `diag(t^{w_i})` where the
    /// weights `w` make every product homogeneous; invertible by construction.
    pub fn weight_twist(&mut self, alg: &AnyAlgebra) -> Matrix {
        let n = alg.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (_, t) in alg.products() {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !num_traits::Zero::is_zero(t.get(i, j, k)) {
                            let mut r = vec![int(0); n];
                            r[k] += int(1);
                            r[i] -= int(1);
                            r[j] -= int(1);
                            rows.push(r);
                        }
                    }
                }
            }
        }
        if rows.is_empty() {
            rows.push(vec![int(0); n]);
        }
        let system = Matrix::from_rows(rows).expect("rectangular");
        let mut w = vec![int(0); n];
        for b in system.nullspace() {
            let c = self.small(-2, 2);
            for (wi, bi) in w.iter_mut().zip(b.iter()) {
                *wi += &c * bi;
            }
        }
        let den = w.iter().fold(num_bigint::BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let base = *[2i64, 3, -2, 2].choose(&mut self.rng).unwrap();
        let d: Vec<Scalar> = w
            .iter()
            .map(|x| {
                let e: i32 = (x * Scalar::from(den.clone())).to_integer().try_into().expect("small weight");
                int(base).pow(e)
            })
            .collect();
        Matrix::diag(&d)
    }

    /// Unit lower-triangular times a permutation times a signed diagonal.
    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let mut l = Matrix::identity(n);
        for r in 0..n {
            for c in 0..r {
                l.set(r, c, self.small(-1, 1));
            }
        }
        let p = Matrix::from_fn(n, n, |r, c| if perm[c] == r { int(1) } else { int(0) });
        let d: Vec<Scalar> = (0..n).map(|_| self.nonzero()).collect();
        &(&l * &p) * &Matrix::diag(&d)
    }

    fn untwisted_seed(&mut self) -> HomPairAlgebra {
        let z3 = HomPairAlgebra::untwisted(PairKind::HomPrePoisson, fixtures::z3_product(), Tensor3::zeros(3)).expect("Z3");
        let d1_limit = HomPairAlgebra::untwisted(
            PairKind::HomPrePoisson,
            Tensor3::zeros(2),
            Tensor3::from_entries(2, &[(0, 0, 1, 1)]),
        )
        .expect("D1 limit");
        let seeds = [fixtures::p1(), fixtures::p2(), z3, d1_limit, HomPairAlgebra::zero(PairKind::HomPrePoisson, 1)];
        seeds.choose(&mut self.rng).unwrap().clone()
    }

    /// `c·pp`, induced by the O-operator `c·α` on `pp`'s own representation.
    fn scaled(&mut self, pp: &HomPairAlgebra) -> HomPairAlgebra {
        if !pp.is_regular() {
            return pp.clone();
        }
        let rep = prepoisson_representation(pp).expect("pre-Poisson input");
        let c = self.nonzero();
        let op = OOperator::new(rep, pp.twist().scale(&c)).expect("cα intertwines");
        induced_prepoisson(&op).expect("O-operator")
    }

    /// A Hom-pre-Poisson algebra with identity twist.
    pub fn untwisted_prepoisson(&mut self) -> HomPairAlgebra {
        self.untwisted_at(2)
    }

    fn untwisted_at(&mut self, depth: u32) -> HomPairAlgebra {
        if depth == 0 {
            return self.untwisted_seed();
        }
        match self.rng.gen_range(0..4) {
            0 => self.untwisted_seed(),
            1 => {
                let a = self.untwisted_at(depth - 1);
                let b = self.untwisted_at(depth - 1);
                if a.dim() + b.dim() <= MAX_DIM {
                    direct_sum(&a, &b).expect("sum of passing algebras")
                } else {
                    a
                }
            }
            2 => {
                let a = self.untwisted_at(depth - 1);
                let g = self.invertible_matrix(a.dim());
                pair(change_basis(&a.into(), &g).expect("invertible"))
            }
            _ => {
                let a = self.untwisted_at(depth - 1);
                self.scaled(&a)
            }
        }
    }

    /// A Hom-pre-Poisson algebra, twisted or not.
    pub fn prepoisson(&mut self) -> HomPairAlgebra {
        self.prepoisson_at(2)
    }

    fn prepoisson_at(&mut self, depth: u32) -> HomPairAlgebra {
        if depth == 0 {
            return match self.rng.gen_range(0..4) {
                0 => fixtures::p1_alpha(),
                1 => prepoisson_from_cocycle(
                    &fixtures::w2_algebra(),
                    &TwoCocycle::new(fixtures::w2()).expect("skew"),
                    CocycleVariant::Eq45,
                )
                .expect("W2"),
                _ => self.untwisted_seed(),
            };
        }
        match self.rng.gen_range(0..5) {
            0 => {
                let base = self.untwisted_at(depth - 1);
                let endo = self.weight_twist(&base.clone().into());
                pair(yau_twist(&base.into(), &TwistSpec::new(endo)).expect("multiplicative endomorphism"))
            }
            1 => {
                let a = self.prepoisson_at(depth - 1);
                let b = self.prepoisson_at(depth - 1);
                if a.dim() + b.dim() <= MAX_DIM {
                    direct_sum(&a, &b).expect("sum of passing algebras")
                } else {
                    a
                }
            }
            2 => {
                let a = self.prepoisson_at(depth - 1);
                let g = self.invertible_matrix(a.dim());
                pair(change_basis(&a.into(), &g).expect("invertible"))
            }
            3 => {
                let a = self.prepoisson_at(depth - 1);
                self.scaled(&a)
            }
            _ => self.prepoisson_at(0),
        }
    }

    /// A Hom-Poisson algebra: sub-adjacent of a pre-Poisson instance, or a
    /// twisted F1.
    pub fn poisson(&mut self) -> HomPairAlgebra {
        if self.rng.gen_bool(0.25) {
            let f1: AnyAlgebra = fixtures::f1_poisson().into();
            let endo = self.weight_twist(&f1);
            return pair(yau_twist(&f1, &TwistSpec::new(endo)).expect("multiplicative endomorphism"));
        }
        subadjacent_poisson(&self.prepoisson()).expect("pre-Poisson input")
    }

    /// An untwisted Hom-zinbiel algebra of dimension at most 3.
    pub fn small_zinbiel(&mut self) -> HomAlgebra {
        loop {
            let pp = self.untwisted_at(1);
            if pp.dim() <= 3 {
                return HomAlgebra::untwisted(crate::algebra::Kind::HomZinbiel, pp.first().clone()).expect("zinbiel");
            }
        }
    }

    /// A deformation of order `order ≥ 1` with a random first-order term,
    /// extended order by order. Falls back to smaller first-order terms when
    /// an extension is obstructed.
    pub fn deformation(&mut self, order: usize) -> TruncatedDeformation {
        let conv = ZeroOrderConvention::SuccIsProduct;
        loop {
            let base = self.small_zinbiel();
            let n = base.dim();
            let sols = first_order_solutions(&base, conv).expect("zinbiel base");
            let mut prec = Tensor3::zeros(n);
            let mut succ = Tensor3::zeros(n);
            for (p, s) in &sols {
                if self.rng.gen_bool(0.4) {
                    let c = self.nonzero();
                    prec = &prec + &p.scale(&c);
                    succ = &succ + &s.scale(&c);
                }
            }
            let mut d = TruncatedDeformation::with_convention(base.clone(), vec![prec], vec![succ], conv).expect("identity twist");
            let mut ok = true;
            while d.order() < order {
                match extend_order(&d) {
                    Some((p, s)) => {
                        let mut ps = d.prec_terms().to_vec();
                        let mut ss = d.succ_terms().to_vec();
                        ps.push(p);
                        ss.push(s);
                        d = TruncatedDeformation::with_convention(base.clone(), ps, ss, conv).expect("identity twist");
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return d;
            }
        }
    }
}
