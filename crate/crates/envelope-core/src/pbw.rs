//! The enveloping algebra U(L) on PBW monomials: straightening
//! multiplication, the Hopf operations, membership in U(L)J, and
//! universal-property extensions into matrix algebras.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{self, LieAlgebra, OrderedAdaptedBasis, Subspace, Vector};
use crate::linalg::{self, Mat};
use crate::scalar::Rat;

/// A PBW basis monomial: a non-decreasing sequence of basis positions.
/// The empty sequence is the unit 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial(pub Vec<usize>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        PbwMonomial(vec![i])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Total weight under a weight function on generators.
    pub fn weight(&self, weights: &[u32]) -> u32 {
        self.0.iter().map(|&i| weights[i]).sum()
    }
}

// graded lexicographic order, used for canonical serialization
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of U(L): a finite rational combination of PBW monomials.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Rat>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rat::one())
    }

    pub fn scalar(c: Rat) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial::one(), c);
        e
    }

    pub fn generator(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial::generator(i), Rat::one());
        e
    }

    /// Degree-1 element from a Lie algebra vector.
    pub fn from_vector(v: &Vector) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(PbwMonomial::generator(i), c.clone());
            }
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(PbwMonomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.is_sorted());
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            // re-fetch key to remove; cheapest is retain
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    /// The coidentity: coefficient of the empty monomial.
    pub fn counit(&self) -> Rat {
        self.coeff(&PbwMonomial::one())
    }
}

/// PBW normal form of a product of generators in the given order.
///
/// Strategy: always rewrite the leftmost adjacent inversion with
/// b_p b_q = b_q b_p + [b_p, b_q] (p > q). Each step strictly decreases
/// the (degree, #inversions) measure, so the rewriting terminates;
/// confluence is exercised by the property suite.
pub fn straighten(l: &LieAlgebra, word: &[usize]) -> PbwElement {
    straighten_signed(l, word, false)
}

/// Fault-injection hook for the mutation smoke tests: straightening with
/// the bracket term's sign flipped. Not part of the public contract.
#[doc(hidden)]
pub fn straighten_sign_flipped(l: &LieAlgebra, word: &[usize]) -> PbwElement {
    straighten_signed(l, word, true)
}

fn straighten_signed(l: &LieAlgebra, word: &[usize], flip: bool) -> PbwElement {
    let mut out = PbwElement::zero();
    let mut stack: Vec<(Vec<usize>, Rat)> = vec![(word.to_vec(), Rat::one())];
    while let Some((w, c)) = stack.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => out.add_term(PbwMonomial(w), c),
            Some(j) => {
                let (p, q) = (w[j], w[j + 1]);
                let mut swapped = w.clone();
                swapped.swap(j, j + 1);
                stack.push((swapped, c.clone()));
                let br = l.bracket_basis(p, q);
                for (k, coeff) in br.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut nw = Vec::with_capacity(w.len() - 1);
                    nw.extend_from_slice(&w[..j]);
                    nw.push(k);
                    nw.extend_from_slice(&w[j + 2..]);
                    let factor = if flip { -coeff } else { coeff.clone() };
                    stack.push((nw, &c * factor));
                }
            }
        }
    }
    out
}

/// Product in U(L): bilinear extension of straightening on concatenations.
pub fn mul(l: &LieAlgebra, a: &PbwElement, b: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut word = ma.0.clone();
            word.extend_from_slice(&mb.0);
            let s = straighten(l, &word);
            let c = ca * cb;
            for (m, v) in s.terms() {
                out.add_term(m.clone(), v * &c);
            }
        }
    }
    out
}

pub fn pow(l: &LieAlgebra, a: &PbwElement, k: usize) -> PbwElement {
    let mut out = PbwElement::one();
    for _ in 0..k {
        out = mul(l, &out, a);
    }
    out
}

/// An element of U(L) ⊗ U(L) (or, for the multiplicativity witness,
/// U(L1) ⊗ U(L2)), on pairs of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Rat>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(PbwMonomial::one(), PbwMonomial::one(), Rat::one());
        t
    }

    pub fn add_term(&mut self, m1: PbwMonomial, m2: PbwMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m1, m2)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m1, m2), c) in &other.terms {
            out.add_term(m1.clone(), m2.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m1, m2), c) in &other.terms {
            out.add_term(m1.clone(), m2.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// a ⊗ b for plain elements.
    pub fn from_pair(a: &PbwElement, b: &PbwElement) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        out
    }
}

/// Componentwise product in U(L1) ⊗ U(L2); each side straightens in its
/// own algebra. No Koszul signs.
pub fn tensor_mul(
    left: &LieAlgebra,
    right: &LieAlgebra,
    a: &TensorElement,
    b: &TensorElement,
) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((a1, a2), ca) in a.terms() {
        for ((b1, b2), cb) in b.terms() {
            let mut w1 = a1.0.clone();
            w1.extend_from_slice(&b1.0);
            let mut w2 = a2.0.clone();
            w2.extend_from_slice(&b2.0);
            let s1 = straighten(left, &w1);
            let s2 = straighten(right, &w2);
            let c = ca * cb;
            for (m1, c1) in s1.terms() {
                for (m2, c2) in s2.terms() {
                    out.add_term(m1.clone(), m2.clone(), &(c1 * c2) * &c);
                }
            }
        }
    }
    out
}

/// The comultiplication: the unique algebra morphism with all generators
/// primitive, computed by multiplying (b_i ⊗ 1 + 1 ⊗ b_i) factors.
pub fn coproduct(l: &LieAlgebra, a: &PbwElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.terms() {
        let mut t = TensorElement::one();
        for &i in &m.0 {
            let mut factor = TensorElement::zero();
            factor.add_term(PbwMonomial::generator(i), PbwMonomial::one(), Rat::one());
            factor.add_term(PbwMonomial::one(), PbwMonomial::generator(i), Rat::one());
            t = tensor_mul(l, l, &t, &factor);
        }
        out = out.add(&t.scale(c));
    }
    out
}

/// The antipode: the anti-automorphism with S(x) = -x on generators,
/// S(b_1 ... b_n) = (-1)^n b_n ... b_1 re-straightened.
pub fn antipode(l: &LieAlgebra, a: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (m, c) in a.terms() {
        let mut rev = m.0.clone();
        rev.reverse();
        let sign = if m.degree() % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        let s = straighten(l, &rev);
        for (mm, v) in s.terms() {
            out.add_term(mm.clone(), v * &(&sign * c));
        }
    }
    out
}

pub fn is_primitive(l: &LieAlgebra, a: &PbwElement) -> bool {
    let mut expect = TensorElement::from_pair(a, &PbwElement::one());
    expect = expect.add(&TensorElement::from_pair(&PbwElement::one(), a));
    coproduct(l, a) == expect
}

pub fn is_grouplike(l: &LieAlgebra, a: &PbwElement) -> bool {
    !a.is_zero() && a.counit().is_one() && coproduct(l, a) == TensorElement::from_pair(a, a)
}

/// All PBW monomials of degree at most `d`, in graded-lex order.
pub fn window_monomials(dim: usize, d: usize) -> Vec<PbwMonomial> {
    let mut out = vec![PbwMonomial::one()];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for seq in &layer {
            let lo = seq.last().copied().unwrap_or(0);
            for i in lo..dim {
                let mut s = seq.clone();
                s.push(i);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned().map(PbwMonomial));
        layer = next;
    }
    out.sort();
    out
}

/// Basis of the solution space of Δ(u) = u ⊗ 1 + 1 ⊗ u on the degree-≤ d
/// window, as a subspace of the window coordinate space. The window
/// monomial list indexing the coordinates is returned alongside.
pub fn primitive_space(l: &LieAlgebra, d: usize) -> (Vec<PbwMonomial>, Subspace) {
    let window = window_monomials(l.dim(), d);
    // coordinates of the defect Δ(m) - m⊗1 - 1⊗m, per window monomial
    let mut pair_index: BTreeMap<(PbwMonomial, PbwMonomial), usize> = BTreeMap::new();
    let mut defects = Vec::with_capacity(window.len());
    for m in &window {
        let e = {
            let mut e = PbwElement::zero();
            e.add_term(m.clone(), Rat::one());
            e
        };
        let mut t = coproduct(l, &e);
        t = t.sub(&TensorElement::from_pair(&e, &PbwElement::one()));
        t = t.sub(&TensorElement::from_pair(&PbwElement::one(), &e));
        for (key, _) in t.terms() {
            let next = pair_index.len();
            pair_index.entry(key.clone()).or_insert(next);
        }
        defects.push(t);
    }
    let ncols = pair_index.len();
    // rows of the constraint matrix: one row per tensor coordinate would be
    // the transpose; build per-monomial coordinate rows and take the kernel
    // of the coefficient matrix (monomials x pairs), acting on the left.
    let mut rows = Vec::with_capacity(ncols);
    for _ in 0..ncols {
        rows.push(vec![Rat::zero(); window.len()]);
    }
    for (col, t) in defects.iter().enumerate() {
        for (key, c) in t.terms() {
            let r = pair_index[key];
            rows[r][col] = c.clone();
        }
    }
    let kernel = linalg::nullspace(&rows, window.len());
    let sub = Subspace::from_vectors(window.len(), &kernel).unwrap();
    (window, sub)
}

/// Membership in U(L)J: rewrite in the adapted basis of the splitting
/// L = H ⊕ J and test that every surviving monomial ends with a factor
/// from F''.
pub fn membership_ulj(l: &LieAlgebra, u: &PbwElement, j: &Subspace) -> Result<bool, Error> {
    let ab = lie::adapted_basis(l, j, &[])?;
    Ok(membership_ulj_adapted(l, u, &ab))
}

/// Same check against a precomputed adapted basis.
pub fn membership_ulj_adapted(l: &LieAlgebra, u: &PbwElement, ab: &OrderedAdaptedBasis) -> bool {
    let (l_ad, t_inv) = lie::adapted_algebra(l, ab).expect("adapted basis spans");
    let n = l.dim();
    // old generator i as a degree-1 element of the adapted algebra
    let gen_images: Vec<PbwElement> = (0..n)
        .map(|i| {
            let coords: Vector = (0..n).map(|a| t_inv[a][i].clone()).collect();
            PbwElement::from_vector(&coords)
        })
        .collect();
    let map = PbwMap {
        target: l_ad.clone(),
        gen_images,
    };
    let rewritten = map.apply(u);
    let start = ab.ideal_start();
    let positive = rewritten
        .terms()
        .all(|(m, _)| m.0.last().is_some_and(|&last| last >= start));
    positive
}

/// A morphism U(L) → U(L') determined by degree-1 images of generators.
#[derive(Debug, Clone)]
pub struct PbwMap {
    pub target: LieAlgebra,
    pub gen_images: Vec<PbwElement>,
}

impl PbwMap {
    /// Apply monomial-wise over the target algebra.
    pub fn apply(&self, u: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in u.terms() {
            let mut acc = PbwElement::one();
            for &i in &m.0 {
                acc = mul(&self.target, &acc, &self.gen_images[i]);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    pub fn compose_images(&self, inner: &PbwMap) -> PbwMap {
        // images of `inner`'s source generators under self ∘ inner
        let gen_images = inner.gen_images.iter().map(|g| self.apply(g)).collect();
        PbwMap {
            target: self.target.clone(),
            gen_images,
        }
    }
}

/// U applied to the quotient projection p: L → L/J. Returns the quotient
/// algebra, the projection matrix, and the induced U(p).
pub fn functor_u_on_quotient(
    l: &LieAlgebra,
    j: &Subspace,
) -> Result<(LieAlgebra, Mat, PbwMap), Error> {
    let (q, p) = lie::quotient(l, j)?;
    let qdim = q.dim();
    let gen_images: Vec<PbwElement> = (0..l.dim())
        .map(|i| {
            let coords: Vector = (0..qdim).map(|r| p[r][i].clone()).collect();
            PbwElement::from_vector(&coords)
        })
        .collect();
    Ok((
        q.clone(),
        p,
        PbwMap {
            target: q,
            gen_images,
        },
    ))
}

/// The unique algebra morphism U(L) → M_k extending a Lie morphism given
/// by generator images, restricted to a degree window.
#[derive(Debug, Clone)]
pub struct AlgebraMorphismWindow {
    pub degree: usize,
    pub size: usize,
    pub images: Vec<Mat>,
}

impl AlgebraMorphismWindow {
    pub fn apply_monomial(&self, m: &PbwMonomial) -> Mat {
        let mut acc = linalg::identity(self.size);
        for &i in &m.0 {
            acc = linalg::mat_mul(&acc, &self.images[i]);
        }
        acc
    }

    pub fn apply(&self, u: &PbwElement) -> Mat {
        let mut out = linalg::zeros(self.size, self.size);
        for (m, c) in u.terms() {
            out = linalg::mat_add(&out, &linalg::mat_scale(&self.apply_monomial(m), c));
        }
        out
    }
}

/// Validate that matrix images satisfy the brackets as commutators and
/// package them as a window morphism.
pub fn extend_lie_morphism(
    l: &LieAlgebra,
    images: &[Mat],
    degree: usize,
) -> Result<AlgebraMorphismWindow, Error> {
    if images.len() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: images.len(),
        });
    }
    let size = images.first().map_or(0, Vec::len);
    for m in images {
        if m.len() != size || m.iter().any(|r| r.len() != size) {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: m.len(),
            });
        }
    }
    for i in 0..l.dim() {
        for jj in (i + 1)..l.dim() {
            let mut expect = linalg::zeros(size, size);
            for (k, c) in l.bracket_basis(i, jj).iter().enumerate() {
                if !c.is_zero() {
                    expect = linalg::mat_add(&expect, &linalg::mat_scale(&images[k], c));
                }
            }
            if linalg::commutator(&images[i], &images[jj]) != expect {
                return Err(Error::ImagesNotALieMorphism { i, j: jj });
            }
        }
    }
    Ok(AlgebraMorphismWindow {
        degree,
        size,
        images: images.to_vec(),
    })
}

/// Witness data for multiplicativity of U: the canonical map from the
/// degree-≤ d window of U(L1 × L2) onto pairs of windows of U(L1), U(L2).
#[derive(Debug, Clone)]
pub struct MultiplicativityWitness {
    pub source_window: Vec<PbwMonomial>,
    pub target_pairs: Vec<(PbwMonomial, PbwMonomial)>,
    pub rank: usize,
    pub images: Vec<TensorElement>,
}

impl MultiplicativityWitness {
    pub fn is_bijective(&self) -> bool {
        self.rank == self.source_window.len() && self.rank == self.target_pairs.len()
    }
}

/// Build the generator map (v,0) ↦ v⊗1, (0,w) ↦ 1⊗w extended
/// multiplicatively over the degree-≤ d window, and measure its rank.
pub fn multiplicativity_witness(
    l1: &LieAlgebra,
    l2: &LieAlgebra,
    d: usize,
) -> MultiplicativityWitness {
    let (prod, _) = lie::direct_product(l1, l2);
    let n1 = l1.dim();
    let source_window = window_monomials(prod.dim(), d);
    let mut target_pairs = Vec::new();
    for a in 0..=d {
        for m1 in window_monomials(n1, a) {
            if m1.degree() != a {
                continue;
            }
            for m2 in window_monomials(l2.dim(), d - a) {
                target_pairs.push((m1.clone(), m2));
            }
        }
    }
    target_pairs.sort();
    target_pairs.dedup();
    let pair_pos: BTreeMap<_, _> = target_pairs
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut images = Vec::with_capacity(source_window.len());
    let mut rows = Vec::with_capacity(source_window.len());
    for m in &source_window {
        let mut t = TensorElement::one();
        for &i in &m.0 {
            let mut factor = TensorElement::zero();
            if i < n1 {
                factor.add_term(PbwMonomial::generator(i), PbwMonomial::one(), Rat::one());
            } else {
                factor.add_term(
                    PbwMonomial::one(),
                    PbwMonomial::generator(i - n1),
                    Rat::one(),
                );
            }
            t = tensor_mul(l1, l2, &t, &factor);
        }
        let mut row = vec![Rat::zero(); target_pairs.len()];
        for (key, c) in t.terms() {
            row[pair_pos[key]] = c.clone();
        }
        rows.push(row);
        images.push(t);
    }
    let rank = linalg::rank(&rows);
    MultiplicativityWitness {
        source_window,
        target_pairs,
        rank,
        images,
    }
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
    fn straighten_heisenberg_yx() {
        let h = corpus::heisenberg();
        let got = straighten(&h, &[1, 0]);
        let expect = elem(&[(&[0, 1], rat(1)), (&[2], rat(-1))]);
        assert_eq!(got, expect);
    }

    #[test]
    fn straighten_sl2_fe() {
        let l = corpus::sl2();
        // order e < f < h; f e = e f - h
        let got = straighten(&l, &[1, 0]);
        let expect = elem(&[(&[0, 1], rat(1)), (&[2], rat(-1))]);
        assert_eq!(got, expect);
    }

    #[test]
    fn straighten_heisenberg_yxx() {
        let h = corpus::heisenberg();
        // y x x = x^2 y - 2 x z
        let got = straighten(&h, &[1, 0, 0]);
        let expect = elem(&[(&[0, 0, 1], rat(1)), (&[0, 2], rat(-2))]);
        assert_eq!(got, expect);
    }

    #[test]
    fn mul_unit_and_commutative() {
        let h = corpus::heisenberg();
        let a = elem(&[(&[0, 1], rat(3)), (&[], rat(1))]);
        assert_eq!(mul(&h, &PbwElement::one(), &a), a);
        // abelian K[x]: (x+1)(x-1) = x^2 - 1
        let k1 = corpus::abelian(1);
        let xp1 = elem(&[(&[0], rat(1)), (&[], rat(1))]);
        let xm1 = elem(&[(&[0], rat(1)), (&[], rat(-1))]);
        let expect = elem(&[(&[0, 0], rat(1)), (&[], rat(-1))]);
        assert_eq!(mul(&k1, &xp1, &xm1), expect);
    }

    #[test]
    fn mul_associative_sl2() {
        let l = corpus::sl2();
        let e = PbwElement::generator(0);
        let f = PbwElement::generator(1);
        let h = PbwElement::generator(2);
        let lhs = mul(&l, &mul(&l, &e, &f), &h);
        let rhs = mul(&l, &e, &mul(&l, &f, &h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(PbwElement::one().counit(), rat(1));
        assert_eq!(PbwElement::generator(0).counit(), rat(0));
        let a = elem(&[(&[], rat(3)), (&[0], rat(2)), (&[0, 1], rat(1))]);
        assert_eq!(a.counit(), rat(3));
    }

    #[test]
    fn coproduct_examples() {
        let h = corpus::heisenberg();
        let x = PbwElement::generator(0);
        let d = coproduct(&h, &x);
        let mut expect = TensorElement::zero();
        expect.add_term(PbwMonomial::generator(0), PbwMonomial::one(), rat(1));
        expect.add_term(PbwMonomial::one(), PbwMonomial::generator(0), rat(1));
        assert_eq!(d, expect);
        assert_eq!(coproduct(&h, &PbwElement::one()), TensorElement::one());
        // abelian: Δ(x²) = x²⊗1 + 2 x⊗x + 1⊗x²
        let k1 = corpus::abelian(1);
        let x2 = elem(&[(&[0, 0], rat(1))]);
        let d = coproduct(&k1, &x2);
        let mut expect = TensorElement::zero();
        expect.add_term(PbwMonomial(vec![0, 0]), PbwMonomial::one(), rat(1));
        expect.add_term(PbwMonomial::generator(0), PbwMonomial::generator(0), rat(2));
        expect.add_term(PbwMonomial::one(), PbwMonomial(vec![0, 0]), rat(1));
        assert_eq!(d, expect);
    }

    #[test]
    fn antipode_examples() {
        let h = corpus::heisenberg();
        let x = PbwElement::generator(0);
        assert_eq!(antipode(&h, &x), x.neg());
        assert_eq!(antipode(&h, &PbwElement::one()), PbwElement::one());
        // S(x y) = y x = x y - z
        let xy = elem(&[(&[0, 1], rat(1))]);
        let expect = elem(&[(&[0, 1], rat(1)), (&[2], rat(-1))]);
        assert_eq!(antipode(&h, &xy), expect);
    }

    #[test]
    fn primitivity_examples() {
        let h = corpus::heisenberg();
        let v = elem(&[(&[0], rat(2)), (&[2], ratio(1, 3))]);
        assert!(is_primitive(&h, &v));
        assert!(is_primitive(&h, &PbwElement::zero()));
        let k1 = corpus::abelian(1);
        assert!(!is_primitive(&k1, &elem(&[(&[0, 0], rat(1))])));
    }

    #[test]
    fn primitive_space_dims() {
        let k1 = corpus::abelian(1);
        let (_, p) = primitive_space(&k1, 3);
        assert_eq!(p.dim(), 1);
        let l = corpus::sl2();
        let (_, p) = primitive_space(&l, 4);
        assert_eq!(p.dim(), 3);
        // degree-1 window: exactly the generators
        for alg in corpus::all() {
            if alg.dim() == 0 {
                continue;
            }
            let (_, p) = primitive_space(&alg, 1);
            assert_eq!(p.dim(), alg.dim());
        }
    }

    #[test]
    fn membership_examples() {
        let h = corpus::heisenberg();
        let j = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let u = elem(&[(&[0, 2], rat(1)), (&[2], rat(1))]);
        assert!(membership_ulj(&h, &u, &j).unwrap());
        let xy = elem(&[(&[0, 1], rat(1))]);
        assert!(!membership_ulj(&h, &xy, &j).unwrap());
        assert!(membership_ulj(&h, &PbwElement::zero(), &j).unwrap());
    }

    #[test]
    fn functor_on_quotient_examples() {
        let h = corpus::heisenberg();
        let j = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let (q, _, map) = functor_u_on_quotient(&h, &j).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(map.apply(&PbwElement::generator(2)).is_zero());
        let xy = elem(&[(&[0, 1], rat(1))]);
        assert_eq!(map.apply(&xy), elem(&[(&[0, 1], rat(1))]));
        // x^a y^b z^c maps to zero iff c > 0
        for (word, kills) in [(vec![0, 1, 2], true), (vec![0, 0, 1], false)] {
            let m = elem(&[(&word[..], rat(1))]);
            assert_eq!(map.apply(&m).is_zero(), kills);
        }
        // J = 0 gives the identity
        let (q0, _, id_map) = functor_u_on_quotient(&h, &Subspace::zero(3)).unwrap();
        assert_eq!(q0.dim(), 3);
        let u = elem(&[(&[0, 1, 2], ratio(3, 2)), (&[1], rat(-1))]);
        assert_eq!(id_map.apply(&u), u);
    }

    #[test]
    fn extend_lie_morphism_heisenberg_rep() {
        let h = corpus::heisenberg();
        let e = |i: usize, j: usize| -> Mat {
            let mut m = linalg::zeros(3, 3);
            m[i][j] = rat(1);
            m
        };
        let images = vec![e(0, 1), e(1, 2), e(0, 2)];
        let w = extend_lie_morphism(&h, &images, 4).unwrap();
        let xy = elem(&[(&[0, 1], rat(1))]);
        assert_eq!(w.apply(&xy), e(0, 2));
        assert_eq!(w.apply(&PbwElement::one()), linalg::identity(3));
        // zero images fail the bracket [x,y] = z unless z ↦ 0 too; zero rep
        // of the abelian algebra is fine, but killing only z is not
        let bad = vec![e(0, 1), e(1, 2), linalg::zeros(3, 3)];
        assert!(matches!(
            extend_lie_morphism(&h, &bad, 4),
            Err(Error::ImagesNotALieMorphism { .. })
        ));
        let zero = vec![linalg::zeros(2, 2); 3];
        let w = extend_lie_morphism(&h, &zero, 4).unwrap();
        assert_eq!(w.apply(&elem(&[(&[0, 1], rat(1))])), linalg::zeros(2, 2));
        assert_eq!(w.apply(&PbwElement::one()), linalg::identity(2));
    }

    #[test]
    fn multiplicativity_witness_examples() {
        let h = corpus::heisenberg();
        let k1 = corpus::abelian(1);
        let w = multiplicativity_witness(&h, &k1, 2);
        assert!(w.is_bijective());
        // trivial factor: iso is the identity on the U(L1) window
        let zero = crate::lie::LieAlgebra::abelian(alloc::vec::Vec::new());
        let w0 = multiplicativity_witness(&h, &zero, 3);
        assert!(w0.is_bijective());
        assert_eq!(w0.source_window.len(), window_monomials(3, 3).len());
        // (x,0)·(0,a) = x ⊗ a
        let w = multiplicativity_witness(&h, &k1, 2);
        let pos = w
            .source_window
            .iter()
            .position(|m| m.0 == vec![0, 3])
            .unwrap();
        let mut expect = TensorElement::zero();
        expect.add_term(PbwMonomial::generator(0), PbwMonomial::generator(0), rat(1));
        assert_eq!(w.images[pos], expect);
    }

    #[test]
    fn window_dimension_binomial() {
        // C(n + d, d) monomials of degree ≤ d
        let binom = |n: usize, k: usize| -> usize {
            let mut v = 1usize;
            for i in 0..k {
                v = v * (n + i + 1) / (i + 1);
            }
            v
        };
        for n in 1..=4 {
            for d in 0..=5 {
                assert_eq!(window_monomials(n, d).len(), binom(n, d));
            }
        }
    }

    #[test]
    fn fault_injected_straighten_differs() {
        let h = corpus::heisenberg();
        assert_ne!(
            straighten(&h, &[1, 0]),
            straighten_sign_flipped(&h, &[1, 0])
        );
    }
}
