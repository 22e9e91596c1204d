//! Weight-graded truncations of U(L) with exponential, logarithm and BCH.
//!
//! Only weight-gradable algebras are admitted: the span of weight-≥ N
//! monomials is then a two-sided ideal and a coideal, so dropping it yields
//! a finite-dimensional quotient Hopf algebra stage. Plain degree
//! truncation is deliberately not offered as an algebra quotient (for
//! non-graded algebras such as sl2 the augmentation-adic filtration
//! collapses).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::pbw::{self, PbwElement, PbwMonomial};
use crate::scalar::{factorial, Rat};

/// An element of a truncation is an element of U(L) supported on
/// monomials of weight below the cutoff.
pub type TruncElement = PbwElement;

/// One finite stage of the graded completion: PBW monomials of total
/// weight below `cutoff`, with weight-≥ cutoff products dropped.
#[derive(Debug, Clone)]
pub struct GradedTruncation {
    lie: LieAlgebra,
    weights: Vec<u32>,
    cutoff: u32,
    basis: Vec<PbwMonomial>,
}

/// An element of the truncated tensor square: pairs of total weight
/// below the cutoff.
pub type TruncTensor = pbw::TensorElement;

impl GradedTruncation {
    /// Build a truncation; weights must be bracket-additive.
    pub fn new(l: &LieAlgebra, weights: Vec<u32>, cutoff: u32) -> Result<Self, Error> {
        if cutoff == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if weights.contains(&0) {
            return Err(Error::WeightsNotAdditive { i: 0, j: 0, k: 0 });
        }
        let graded = l.clone().with_weights(weights.clone())?;
        let basis = weighted_monomials(graded.dim(), &weights, cutoff);
        Ok(Self {
            lie: graded,
            weights,
            cutoff,
            basis,
        })
    }

    /// Build from an algebra that already carries weights.
    pub fn from_weighted(l: &LieAlgebra, cutoff: u32) -> Result<Self, Error> {
        let weights = l
            .weights()
            .ok_or(Error::WeightsNotAdditive { i: 0, j: 0, k: 0 })?
            .to_vec();
        Self::new(l, weights, cutoff)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// The monomial basis of the stage, graded-lex sorted.
    pub fn basis(&self) -> &[PbwMonomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomial_weight(&self, m: &PbwMonomial) -> u32 {
        m.weight(&self.weights)
    }

    /// Drop all monomials of weight ≥ cutoff.
    pub fn truncate(&self, a: &PbwElement) -> TruncElement {
        let mut out = PbwElement::zero();
        for (m, c) in a.terms() {
            if self.monomial_weight(m) < self.cutoff {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn mul(&self, a: &TruncElement, b: &TruncElement) -> TruncElement {
        self.truncate(&pbw::mul(&self.lie, a, b))
    }

    /// The truncated exponential Σ a^k / k!; defined for counit zero,
    /// where the series terminates below the cutoff.
    pub fn exp(&self, a: &TruncElement) -> Result<TruncElement, Error> {
        if !a.counit().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let a = self.truncate(a);
        let mut out = PbwElement::one();
        let mut power = a.clone();
        let mut k = 1u64;
        while !power.is_zero() {
            out = out.add(&power.scale(&factorial(k).recip()));
            power = self.mul(&power, &a);
            k += 1;
        }
        Ok(out)
    }

    /// The truncated logarithm Σ (-1)^(k+1) (u-1)^k / k; defined for
    /// counit one.
    pub fn log(&self, u: &TruncElement) -> Result<TruncElement, Error> {
        if !u.counit().is_one() {
            return Err(Error::CounitNotOne);
        }
        let v = self.truncate(&u.sub(&PbwElement::one()));
        let mut out = PbwElement::zero();
        let mut power = v.clone();
        let mut k: i64 = 1;
        while !power.is_zero() {
            let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
            out = out.add(&power.scale(&(sign / Rat::from_integer(k.into()))));
            power = self.mul(&power, &v);
            k += 1;
        }
        Ok(out)
    }

    /// log(exp a · exp b) for primitive a, b; the result is again
    /// primitive up to the cutoff.
    pub fn bch(&self, a: &TruncElement, b: &TruncElement) -> Result<TruncElement, Error> {
        if !self.is_primitive(a) || !self.is_primitive(b) {
            return Err(Error::NotPrimitive);
        }
        let ea = self.exp(a)?;
        let eb = self.exp(b)?;
        self.log(&self.mul(&ea, &eb))
    }

    /// Δ in the truncated tensor square: pairs of total weight < cutoff.
    pub fn coproduct(&self, a: &TruncElement) -> TruncTensor {
        let full = pbw::coproduct(&self.lie, &self.truncate(a));
        let mut out = TruncTensor::zero();
        for ((m1, m2), c) in full.terms() {
            if self.monomial_weight(m1) + self.monomial_weight(m2) < self.cutoff {
                out.add_term(m1.clone(), m2.clone(), c.clone());
            }
        }
        out
    }

    fn truncate_tensor(&self, t: &TruncTensor) -> TruncTensor {
        let mut out = TruncTensor::zero();
        for ((m1, m2), c) in t.terms() {
            if self.monomial_weight(m1) + self.monomial_weight(m2) < self.cutoff {
                out.add_term(m1.clone(), m2.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_grouplike(&self, u: &TruncElement) -> bool {
        if u.is_zero() || !u.counit().is_one() {
            return false;
        }
        let expect = self.truncate_tensor(&pbw::TensorElement::from_pair(u, u));
        self.coproduct(u) == expect
    }

    pub fn is_primitive(&self, a: &TruncElement) -> bool {
        let one = PbwElement::one();
        let expect = self
            .truncate_tensor(&pbw::TensorElement::from_pair(a, &one))
            .add(&self.truncate_tensor(&pbw::TensorElement::from_pair(&one, a)));
        self.coproduct(a) == expect
    }

    /// Inverse of a counit-one element (geometric series on u - 1).
    pub fn inverse(&self, u: &TruncElement) -> Result<TruncElement, Error> {
        if !u.counit().is_one() {
            return Err(Error::CounitNotOne);
        }
        let v = self.truncate(&u.sub(&PbwElement::one()));
        let mut out = PbwElement::one();
        let mut power = v.clone();
        let mut sign = -Rat::one();
        while !power.is_zero() {
            out = out.add(&power.scale(&sign));
            power = self.mul(&power, &v);
            sign = -sign;
        }
        Ok(out)
    }
}

/// All non-decreasing monomials of total weight below `cutoff`.
fn weighted_monomials(dim: usize, weights: &[u32], cutoff: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        dim: usize,
        weights: &[u32],
        cutoff: u32,
        start: usize,
        acc: u32,
        current: &mut Vec<usize>,
        out: &mut Vec<PbwMonomial>,
    ) {
        out.push(PbwMonomial(current.clone()));
        for i in start..dim {
            let w = acc + weights[i];
            if w < cutoff {
                current.push(i);
                rec(dim, weights, cutoff, i, w, current, out);
                current.pop();
            }
        }
    }
    rec(dim, weights, cutoff, 0, 0, &mut current, &mut out);
    out.sort();
    out
}

/// Associativity of the truncated product on all basis triples.
pub fn check_associativity(t: &GradedTruncation) -> bool {
    let elems: Vec<TruncElement> = t
        .basis()
        .iter()
        .map(|m| {
            let mut e = PbwElement::zero();
            e.add_term(m.clone(), Rat::one());
            e
        })
        .collect();
    for a in &elems {
        for b in &elems {
            let ab = t.mul(a, b);
            for c in &elems {
                if t.mul(&ab, c) != t.mul(a, &t.mul(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Multiplication table of the stage, as coordinates over the basis.
pub fn multiplication_table(t: &GradedTruncation) -> Vec<Vec<Vec<Rat>>> {
    let index: BTreeMap<&PbwMonomial, usize> =
        t.basis().iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut table = vec![vec![vec![Rat::zero(); t.dim()]; t.dim()]; t.dim()];
    for (i, mi) in t.basis().iter().enumerate() {
        for (j, mj) in t.basis().iter().enumerate() {
            let mut word = mi.0.clone();
            word.extend_from_slice(&mj.0);
            let prod = t.truncate(&pbw::straighten(t.lie(), &word));
            for (m, c) in prod.terms() {
                table[i][j][index[m]] = c.clone();
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::{rat, ratio};

    fn elem(pairs: &[(&[usize], Rat)]) -> PbwElement {
        let mut e = PbwElement::zero();
        for (m, c) in pairs {
            e.add_term(PbwMonomial(m.to_vec()), c.clone());
        }
        e
    }

    #[test]
    fn abelian_truncation_basis() {
        let k1 = corpus::abelian(1);
        let t = GradedTruncation::new(&k1, vec![1], 3).unwrap();
        assert_eq!(t.dim(), 3); // 1, x, x²
        let x = PbwElement::generator(0);
        let x2 = elem(&[(&[0, 0], rat(1))]);
        assert_eq!(t.mul(&x, &x2), PbwElement::zero());
    }

    #[test]
    fn heisenberg_truncation_dim7() {
        let h = corpus::heisenberg();
        let t = GradedTruncation::new(&h, vec![1, 1, 2], 3).unwrap();
        // 1, x, y, z, x², xy, y²
        assert_eq!(t.dim(), 7);
    }

    #[test]
    fn weights_not_additive_rejected() {
        let h = corpus::heisenberg();
        assert!(matches!(
            GradedTruncation::new(&h, vec![1, 1, 3], 3),
            Err(Error::WeightsNotAdditive { .. })
        ));
    }

    #[test]
    fn exp_examples() {
        let k1 = corpus::abelian(1);
        let t = GradedTruncation::new(&k1, vec![1], 3).unwrap();
        assert_eq!(t.exp(&PbwElement::zero()).unwrap(), PbwElement::one());
        let x = PbwElement::generator(0);
        let expect = elem(&[(&[], rat(1)), (&[0], rat(1)), (&[0, 0], ratio(1, 2))]);
        assert_eq!(t.exp(&x).unwrap(), expect);
        // exp(x)·exp(-x) = 1 in the Heisenberg stage
        let h = corpus::heisenberg();
        let th = GradedTruncation::new(&h, vec![1, 1, 2], 4).unwrap();
        let ex = th.exp(&PbwElement::generator(0)).unwrap();
        let emx = th.exp(&PbwElement::generator(0).neg()).unwrap();
        assert_eq!(th.mul(&ex, &emx), PbwElement::one());
        assert!(matches!(
            t.exp(&PbwElement::one()),
            Err(Error::NonzeroConstantTerm)
        ));
    }

    #[test]
    fn log_examples() {
        let k1 = corpus::abelian(1);
        let t = GradedTruncation::new(&k1, vec![1], 3).unwrap();
        assert_eq!(t.log(&PbwElement::one()).unwrap(), PbwElement::zero());
        let x = PbwElement::generator(0);
        assert_eq!(t.log(&t.exp(&x).unwrap()).unwrap(), x);
        let one_plus_x = elem(&[(&[], rat(1)), (&[0], rat(1))]);
        let expect = elem(&[(&[0], rat(1)), (&[0, 0], ratio(-1, 2))]);
        assert_eq!(t.log(&one_plus_x).unwrap(), expect);
        assert!(matches!(t.log(&x), Err(Error::CounitNotOne)));
    }

    #[test]
    fn bch_heisenberg() {
        let h = corpus::heisenberg();
        let t = GradedTruncation::new(&h, vec![1, 1, 2], 4).unwrap();
        let x = PbwElement::generator(0);
        let y = PbwElement::generator(1);
        let got = t.bch(&x, &y).unwrap();
        let expect = elem(&[(&[0], rat(1)), (&[1], rat(1)), (&[2], ratio(1, 2))]);
        assert_eq!(got, expect);
        assert!(t.is_primitive(&got));
    }

    #[test]
    fn bch_commuting_is_sum() {
        let k2 = corpus::abelian(2);
        let t = GradedTruncation::new(&k2, vec![1, 1], 4).unwrap();
        let a = elem(&[(&[0], rat(2)), (&[1], rat(-1))]);
        let b = elem(&[(&[1], ratio(1, 3))]);
        assert_eq!(t.bch(&a, &b).unwrap(), a.add(&b));
    }

    #[test]
    fn bch_free_nilpotent_class3() {
        let l = corpus::free_nilpotent_class3();
        let t = GradedTruncation::from_weighted(&l, 4).unwrap();
        let x = PbwElement::generator(0);
        let y = PbwElement::generator(1);
        let got = t.bch(&x, &y).unwrap();
        let expect = elem(&[
            (&[0], rat(1)),
            (&[1], rat(1)),
            (&[2], ratio(1, 2)),
            (&[3], ratio(1, 12)),
            (&[4], ratio(-1, 12)),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn grouplike_examples() {
        let h = corpus::heisenberg();
        let t = GradedTruncation::new(&h, vec![1, 1, 2], 4).unwrap();
        assert!(t.is_grouplike(&PbwElement::one()));
        let ex = t.exp(&PbwElement::generator(0)).unwrap();
        assert!(t.is_grouplike(&ex));
        let one_plus_x = elem(&[(&[], rat(1)), (&[0], rat(1))]);
        assert!(!t.is_grouplike(&one_plus_x));
    }

    #[test]
    fn truncated_product_associative() {
        let h = corpus::heisenberg();
        let t = GradedTruncation::new(&h, vec![1, 1, 2], 3).unwrap();
        assert!(check_associativity(&t));
    }
}
