//! The dual function Hopf algebra on an abelian g: exp-polynomial
//! functions on the dual space, the comultiplication by argument
//! addition, the quotient map from U(g), radical computation, and the
//! two-dimensional counterexample algebra A2.
//!
//! Only the computable subclass Σ p_i(ω) e^{ℓ_i(ω)} (polynomial times
//! exponential of a linear form) is represented. Distinct exponentials of
//! linear forms are linearly independent over polynomials, so equality of
//! canonical forms decides equality of functions; for the exact values
//! (formal sums Σ c_i e^{q_i}) this rests on the linear independence of
//! e^q over Q for distinct rational q.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::findim::FinDimQuotient;
use crate::lie::{LieAlgebra, Subspace, Vector};
use crate::linalg::{self, Mat};
use crate::pbw::PbwElement;
use crate::scalar::Rat;

/// A point of the dual space, in dual-basis coordinates.
pub type DualVector = Vec<Rat>;

/// Polynomial in d dual coordinates: exponent vector → coefficient.
pub type Poly = BTreeMap<Vec<u32>, Rat>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert_with(Rat::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add_into(target: &mut Poly, other: &Poly) {
    for (e, c) in other {
        let entry = target.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
    }
    target.retain(|_, c| !c.is_zero());
}

/// A function φ(ω) = Σ_i p_i(ω) e^{ℓ_i(ω)} in canonical form: the linear
/// forms ℓ_i are pairwise distinct keys and every p_i is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpPolyFunction {
    dim: usize,
    summands: BTreeMap<Vec<Rat>, Poly>,
}

/// A formal exact value Σ c_i e^{q_i} with distinct rational exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpRational {
    pub terms: BTreeMap<Rat, Rat>,
}

impl ExpRational {
    pub fn rational(c: Rat) -> Self {
        let mut t = Self::default();
        t.add(Rat::zero(), c);
        t
    }

    pub fn add(&mut self, exponent: Rat, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }
}

impl ExpPolyFunction {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            summands: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rat) -> Self {
        let mut poly = Poly::new();
        if !c.is_zero() {
            poly.insert(vec![0; dim], c);
        }
        Self::from_summand(dim, vec![Rat::zero(); dim], poly)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rat::one())
    }

    /// The coordinate function ω ↦ ω_i.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut e = vec![0u32; dim];
        e[i] = 1;
        let mut poly = Poly::new();
        poly.insert(e, Rat::one());
        Self::from_summand(dim, vec![Rat::zero(); dim], poly)
    }

    /// e^{ℓ(ω)} for a linear form ℓ.
    pub fn exp_linear(dim: usize, linear: Vec<Rat>) -> Self {
        let mut poly = Poly::new();
        poly.insert(vec![0; dim], Rat::one());
        Self::from_summand(dim, linear, poly)
    }

    fn from_summand(dim: usize, linear: Vec<Rat>, poly: Poly) -> Self {
        let mut s = Self::zero(dim);
        if !poly.is_empty() {
            s.summands.insert(linear, poly);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = (&Vec<Rat>, &Poly)> {
        self.summands.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut out = self.clone();
        for (l, p) in &other.summands {
            let entry = out.summands.entry(l.clone()).or_default();
            poly_add_into(entry, p);
        }
        out.summands.retain(|_, p| !p.is_empty());
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for p in out.summands.values_mut() {
            for c in p.values_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = self.clone();
        for p in out.summands.values_mut() {
            for v in p.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Pointwise product; exponential parts add.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (la, pa) in &self.summands {
            for (lb, pb) in &other.summands {
                let l: Vec<Rat> = la.iter().zip(lb).map(|(x, y)| x + y).collect();
                let p = poly_mul(pa, pb);
                let entry = out.summands.entry(l).or_default();
                poly_add_into(entry, &p);
            }
        }
        out.summands.retain(|_, p| !p.is_empty());
        Ok(out)
    }

    /// Exact evaluation at a rational dual vector.
    pub fn eval(&self, omega: &DualVector) -> Result<ExpRational, Error> {
        if omega.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: omega.len(),
            });
        }
        let mut out = ExpRational::default();
        for (l, p) in &self.summands {
            let exponent: Rat = l.iter().zip(omega).map(|(a, w)| a * w).sum();
            let mut value = Rat::zero();
            for (e, c) in p {
                let mut term = c.clone();
                for (pow, w) in e.iter().zip(omega) {
                    for _ in 0..*pow {
                        term *= w;
                    }
                }
                value += term;
            }
            out.add(exponent, value);
        }
        Ok(out)
    }

    /// φ(0) as a rational (the whole value is rational at ω = 0).
    pub fn value_at_zero(&self) -> Rat {
        let mut v = Rat::zero();
        for p in self.summands.values() {
            if let Some(c) = p.get(&vec![0; self.dim]) {
                v += c;
            }
        }
        v
    }

    /// The comultiplication: (γφ)(ω₁, ω₂) = φ(ω₁ + ω₂), a function in 2d
    /// variables (first block ω₁, second block ω₂).
    pub fn gamma(&self) -> PairFunction {
        let d = self.dim;
        let mut out = ExpPolyFunction::zero(2 * d);
        for (l, p) in &self.summands {
            let mut l2: Vec<Rat> = l.clone();
            l2.extend(l.iter().cloned());
            // substitute ω_i ← u_i + v_i in the polynomial
            let mut acc = Poly::new();
            for (e, c) in p {
                let mut term = Poly::new();
                term.insert(vec![0; 2 * d], c.clone());
                for (i, &pow) in e.iter().enumerate() {
                    // (u_i + v_i)^pow
                    let mut binom = Poly::new();
                    let mut u = vec![0u32; 2 * d];
                    u[i] = 1;
                    let mut v = vec![0u32; 2 * d];
                    v[d + i] = 1;
                    binom.insert(u, Rat::one());
                    binom.insert(v, Rat::one());
                    for _ in 0..pow {
                        term = poly_mul(&term, &binom);
                    }
                }
                poly_add_into(&mut acc, &term);
            }
            let entry = out.summands.entry(l2).or_default();
            poly_add_into(entry, &acc);
        }
        out.summands.retain(|_, p| !p.is_empty());
        out
    }

    /// Substitute each variable by a sum of variables of a new ambient
    /// space: variable i is replaced by Σ_{j ∈ images[i]} ω'_j. Used to
    /// compare iterated comultiplications, which are all substitutions of
    /// this shape.
    pub fn substitute_sum(&self, new_dim: usize, images: &[Vec<usize>]) -> Self {
        assert_eq!(images.len(), self.dim);
        let mut out = Self::zero(new_dim);
        for (l, p) in &self.summands {
            let mut nl = vec![Rat::zero(); new_dim];
            for (i, c) in l.iter().enumerate() {
                for &j in &images[i] {
                    nl[j] += c;
                }
            }
            let mut acc = Poly::new();
            for (e, c) in p {
                let mut term = Poly::new();
                term.insert(vec![0; new_dim], c.clone());
                for (i, &pow) in e.iter().enumerate() {
                    let mut sum = Poly::new();
                    for &j in &images[i] {
                        let mut v = vec![0u32; new_dim];
                        v[j] = 1;
                        sum.insert(v, Rat::one());
                    }
                    for _ in 0..pow {
                        term = poly_mul(&term, &sum);
                    }
                }
                poly_add_into(&mut acc, &term);
            }
            let entry = out.summands.entry(nl).or_default();
            poly_add_into(entry, &acc);
        }
        out.summands.retain(|_, p| !p.is_empty());
        out
    }

    /// The symmetry (antipode): (σφ)(ω) = φ(-ω).
    pub fn sigma(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (l, p) in &self.summands {
            let nl: Vec<Rat> = l.iter().map(|c| -c.clone()).collect();
            let mut np = Poly::new();
            for (e, c) in p {
                let parity: u32 = e.iter().sum();
                let c = if parity.is_multiple_of(2) {
                    c.clone()
                } else {
                    -c.clone()
                };
                np.insert(e.clone(), c);
            }
            let entry = out.summands.entry(nl).or_default();
            poly_add_into(entry, &np);
        }
        out.summands.retain(|_, p| !p.is_empty());
        out
    }

    /// φ ⊗ 1: the same function in the first block of 2d variables.
    pub fn embed_left(&self) -> PairFunction {
        self.embed(0)
    }

    /// 1 ⊗ φ: the same function in the second block.
    pub fn embed_right(&self) -> PairFunction {
        self.embed(self.dim)
    }

    fn embed(&self, offset: usize) -> PairFunction {
        let d = self.dim;
        let mut out = ExpPolyFunction::zero(2 * d);
        for (l, p) in &self.summands {
            let mut l2 = vec![Rat::zero(); 2 * d];
            for (i, c) in l.iter().enumerate() {
                l2[offset + i] = c.clone();
            }
            let mut p2 = Poly::new();
            for (e, c) in p {
                let mut e2 = vec![0u32; 2 * d];
                for (i, &pow) in e.iter().enumerate() {
                    e2[offset + i] = pow;
                }
                p2.insert(e2, c.clone());
            }
            out.summands.insert(l2, p2);
        }
        out
    }
}

/// An element of the tensor square: a function of (ω₁, ω₂) in 2d
/// variables, same representation class.
pub type PairFunction = ExpPolyFunction;

/// φ ⊗ ψ as a pair function.
pub fn tensor(phi: &ExpPolyFunction, psi: &ExpPolyFunction) -> Result<PairFunction, Error> {
    phi.embed_left().mul(&psi.embed_right())
}

/// The embedding ν_g: x ↦ (ω ↦ ⟨ω, x⟩), a linear polynomial.
pub fn nu_embed(x: &Vector) -> ExpPolyFunction {
    let d = x.len();
    let mut out = ExpPolyFunction::zero(d);
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out = out
                .add(&ExpPolyFunction::coordinate(d, i).scale(c))
                .unwrap();
        }
    }
    out
}

/// Additivity test: γφ = φ⊗1 + 1⊗φ. On the representable subclass this
/// holds exactly for homogeneous-linear polynomials with no exponential
/// part.
pub fn is_primitive_fn(phi: &ExpPolyFunction) -> bool {
    let expect = phi.embed_left().add(&phi.embed_right()).unwrap();
    phi.gamma() == expect
}

/// Multiplicativity test: γφ = φ⊗φ and φ(0) = 1. On the subclass this
/// holds exactly for exponentials of linear forms.
pub fn is_grouplike_fn(phi: &ExpPolyFunction) -> bool {
    if !phi.value_at_zero().is_one() {
        return false;
    }
    match tensor(phi, phi) {
        Ok(expect) => phi.gamma() == expect,
        Err(_) => false,
    }
}

/// The quotient morphism q_g: U(g) → K^{g'} for abelian g, sending the
/// monomial x_{i1}...x_{in} to the polynomial ω ↦ ω_{i1}...ω_{in}.
pub fn q_map(l: &LieAlgebra, u: &PbwElement) -> Result<ExpPolyFunction, Error> {
    if !l.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let d = l.dim();
    let mut out = ExpPolyFunction::zero(d);
    for (m, c) in u.terms() {
        let mut e = vec![0u32; d];
        for &i in &m.0 {
            e[i] += 1;
        }
        let mut poly = Poly::new();
        poly.insert(e, c.clone());
        out = out.add(&ExpPolyFunction::from_summand(
            d,
            vec![Rat::zero(); d],
            poly,
        ))?;
    }
    Ok(out)
}

/// Extended q on a formal product u · exp(x): q(u) · e^{⟨ω, x⟩}.
pub fn q_map_exp(l: &LieAlgebra, u: &PbwElement, x: &Vector) -> Result<ExpPolyFunction, Error> {
    let base = q_map(l, u)?;
    let factor = ExpPolyFunction::exp_linear(l.dim(), x.clone());
    base.mul(&factor)
}

/// Jacobson radical of a commutative algebra over Q, as the kernel of the
/// trace form (x, y) ↦ tr(L_x L_y).
pub fn radical_commutative(a: &FinDimQuotient) -> Result<Subspace, Error> {
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = a.dim();
    let left: Vec<Mat> = (0..n).map(|i| a.left_mult_matrix(i)).collect();
    let mut gram = linalg::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let prod = linalg::mat_mul(&left[i], &left[j]);
            let mut tr = Rat::zero();
            for (k, row) in prod.iter().enumerate() {
                tr += &row[k];
            }
            gram[i][j] = tr;
        }
    }
    let kernel = linalg::nullspace(&gram, n);
    Subspace::from_vectors(n, &kernel)
}

/// A point of the counterexample algebra A2 = K² with the product
/// (x1,y1)(x2,y2) = (y1 x2 + y2 x1, y1 y2) and identity (0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Element(pub Rat, pub Rat);

pub fn a2_mul(a: &A2Element, b: &A2Element) -> A2Element {
    A2Element(&a.1 * &b.0 + &b.1 * &a.0, &a.1 * &b.1)
}

/// The faithful representation (x, y) ↦ [[y, x], [0, y]].
pub fn a2_matrix(a: &A2Element) -> Mat {
    vec![
        vec![a.1.clone(), a.0.clone()],
        vec![Rat::zero(), a.1.clone()],
    ]
}

pub fn a2_is_unit(a: &A2Element) -> bool {
    !a.1.is_zero()
}

pub fn a2_one() -> A2Element {
    A2Element(Rat::zero(), Rat::one())
}

/// The idempotents of A2 (solving (x,y)² = (x,y) coordinatewise).
pub fn a2_idempotents() -> Vec<A2Element> {
    vec![A2Element(Rat::zero(), Rat::zero()), a2_one()]
}

/// A2 as a table algebra on the basis (1,0), (0,1).
pub fn a2_algebra() -> FinDimQuotient {
    use crate::scalar::{rat, zero};
    let unit = vec![zero(), rat(1)];
    // e1 e1 = 0, e1 e2 = e2 e1 = e1, e2 e2 = e2
    let table = vec![
        vec![vec![zero(), zero()], vec![rat(1), zero()]],
        vec![vec![rat(1), zero()], vec![zero(), rat(1)]],
    ];
    FinDimQuotient::from_table(unit, table, vec!["c".into(), "u".into()]).unwrap()
}

/// One unital algebra morphism K^S → A2 from the census: columns are the
/// images of the coordinate idempotents (x and y components).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Morphism {
    pub idempotent_images: Vec<A2Element>,
}

impl A2Morphism {
    pub fn apply(&self, t: &[Rat]) -> A2Element {
        let mut out = A2Element(Rat::zero(), Rat::zero());
        for (c, img) in t.iter().zip(&self.idempotent_images) {
            out.0 += c * &img.0;
            out.1 += c * &img.1;
        }
        out
    }

    /// Property (iv): the preimage of the radical K × {0} is contained in
    /// the kernel, checked as exact subspace containment.
    pub fn radical_preimage_in_kernel(&self) -> bool {
        let n = self.idempotent_images.len();
        let row_x: Vec<Rat> = self.idempotent_images.iter().map(|a| a.0.clone()).collect();
        let row_y: Vec<Rat> = self.idempotent_images.iter().map(|a| a.1.clone()).collect();
        // preimage of the radical: y ∘ F = 0; kernel: both rows vanish
        let pre = linalg::nullspace(core::slice::from_ref(&row_y), n);
        let ker = linalg::nullspace(&[row_x, row_y], n);
        let ker_sub = Subspace::from_vectors(n, &ker).unwrap();
        pre.iter().all(|v| ker_sub.contains(v))
    }
}

/// Enumerate all unital algebra morphisms K^S → A2 for |S| = n by images
/// of the coordinate idempotents: each image idempotent, pairwise
/// orthogonal, summing to the identity.
pub fn a2_morphism_census(n: usize) -> Vec<A2Morphism> {
    let idems = a2_idempotents();
    let mut out = Vec::new();
    // each idempotent maps to one of the |idems| candidates
    let mut assignment = vec![0usize; n];
    loop {
        let images: Vec<A2Element> = assignment.iter().map(|&k| idems[k].clone()).collect();
        let orthogonal = (0..n).all(|i| {
            ((i + 1)..n)
                .all(|j| a2_mul(&images[i], &images[j]) == A2Element(Rat::zero(), Rat::zero()))
        });
        let idempotent = images.iter().all(|a| a2_mul(a, a) == *a);
        let mut sum = A2Element(Rat::zero(), Rat::zero());
        for a in &images {
            sum.0 += &a.0;
            sum.1 += &a.1;
        }
        if orthogonal && idempotent && sum == a2_one() {
            out.push(A2Morphism {
                idempotent_images: images,
            });
        }
        // next assignment
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            assignment[pos] += 1;
            if assignment[pos] < idems.len() {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}
