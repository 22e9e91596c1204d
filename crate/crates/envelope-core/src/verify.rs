//! Named invariant suites over the bundled corpus, shared between the
//! command-line `verify` subcommand and the acceptance tests. The
//! independent cross-check oracles (free-algebra reduction, free
//! associative BCH series) live here too: they deliberately use their own
//! data representations and rewriting strategy.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::abelian::{self, ExpPolyFunction};
use crate::corpus;
use crate::lie::{self, LieAlgebra, Subspace};
use crate::linalg::{self, Mat};
use crate::pbw::{self, PbwElement, PbwMonomial, TensorElement};
use crate::scalar::{factorial, rat, Rat};
use crate::tower;
use crate::trunc::GradedTruncation;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        Self {
            name: name.to_string(),
            pass: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Self {
            name: name.to_string(),
            pass: false,
            detail,
        }
    }

    fn of(name: &str, pass: bool, detail: String) -> Self {
        if pass {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

/// Small deterministic generator (splitmix64) so suite runs are
/// reproducible from a printed seed without external dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Small random rational with numerator in [-4, 4] and denominator in
    /// [1, 3].
    pub fn small_rat(&mut self) -> Rat {
        let num = self.below(9) as i64 - 4;
        let den = self.below(3) as i64 + 1;
        crate::scalar::ratio(num, den)
    }

    pub fn word(&mut self, dim: usize, max_len: usize) -> Vec<usize> {
        let len = 1 + self.below(max_len);
        (0..len).map(|_| self.below(dim)).collect()
    }

    /// Random element supported on the degree-≤ d window.
    pub fn element(&mut self, dim: usize, d: usize) -> PbwElement {
        let mut e = PbwElement::zero();
        for _ in 0..3 {
            let len = self.below(d + 1);
            let mut idx: Vec<usize> = (0..len).map(|_| self.below(dim)).collect();
            idx.sort_unstable();
            e.add_term(PbwMonomial(idx), self.small_rat());
        }
        e
    }
}

// ---------------------------------------------------------------------
// independent free-algebra reduction oracle

/// Reduce a product of generators to PBW normal form by rewriting in the
/// free associative algebra modulo the relations b_j b_i - b_i b_j -
/// [b_j, b_i] for j > i. Unlike `pbw::straighten`, this works on a whole
/// linear combination at once and always rewrites the rightmost descent
/// of the largest unsorted word.
pub fn free_reduce(l: &LieAlgebra, word: &[usize]) -> PbwElement {
    let mut terms: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
    terms.insert(word.to_vec(), Rat::one());
    loop {
        let unsorted = terms
            .keys()
            .rev()
            .find(|w| w.windows(2).any(|p| p[0] > p[1]))
            .cloned();
        let Some(w) = unsorted else { break };
        let c = terms.remove(&w).unwrap();
        let j = w
            .windows(2)
            .enumerate()
            .rev()
            .find(|(_, p)| p[0] > p[1])
            .map(|(j, _)| j)
            .unwrap();
        let (p, q) = (w[j], w[j + 1]);
        let mut swapped = w.clone();
        swapped.swap(j, j + 1);
        let entry = terms.entry(swapped).or_insert_with(Rat::zero);
        *entry += c.clone();
        for (k, coeff) in l.bracket_basis(p, q).iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mut nw = Vec::with_capacity(w.len() - 1);
            nw.extend_from_slice(&w[..j]);
            nw.push(k);
            nw.extend_from_slice(&w[j + 2..]);
            let entry = terms.entry(nw).or_insert_with(Rat::zero);
            *entry += &c * coeff;
        }
        terms.retain(|_, v| !v.is_zero());
    }
    let mut out = PbwElement::zero();
    for (w, c) in terms {
        out.add_term(PbwMonomial(w), c);
    }
    out
}

// ---------------------------------------------------------------------
// triple tensors for coassociativity

type Tensor3 = BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), Rat>;

fn tensor3_add(t: &mut Tensor3, key: (PbwMonomial, PbwMonomial, PbwMonomial), c: Rat) {
    if c.is_zero() {
        return;
    }
    let entry = t.entry(key).or_insert_with(Rat::zero);
    *entry += c;
    if entry.is_zero() {
        t.retain(|_, v| !v.is_zero());
    }
}

fn coproduct_on_left(l: &LieAlgebra, t: &TensorElement) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((m1, m2), c) in t.terms() {
        let mut e = PbwElement::zero();
        e.add_term(m1.clone(), Rat::one());
        for ((a, b), ca) in pbw::coproduct(l, &e).terms() {
            tensor3_add(&mut out, (a.clone(), b.clone(), m2.clone()), c * ca);
        }
    }
    out
}

fn coproduct_on_right(l: &LieAlgebra, t: &TensorElement) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((m1, m2), c) in t.terms() {
        let mut e = PbwElement::zero();
        e.add_term(m2.clone(), Rat::one());
        for ((a, b), ca) in pbw::coproduct(l, &e).terms() {
            tensor3_add(&mut out, (m1.clone(), a.clone(), b.clone()), c * ca);
        }
    }
    out
}

fn monomial_elem(m: &PbwMonomial) -> PbwElement {
    let mut e = PbwElement::zero();
    e.add_term(m.clone(), Rat::one());
    e
}

// ---------------------------------------------------------------------
// suites

/// Jacobi and ideal-closure checks over the corpus.
pub fn suite_lie(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in corpus::all() {
        let report = l.check_jacobi();
        out.push(CheckResult::of(
            &format!("lie/jacobi/{}", label(&l)),
            report.passed(),
            format!("{} violations", report.violations.len()),
        ));
    }
    // bracket closure of a random subspace is an ideal
    let mut rng = Rng::new(seed);
    for l in [
        corpus::heisenberg(),
        corpus::sl2(),
        corpus::free_nilpotent_class3(),
    ] {
        let n = l.dim();
        let v: Vec<Rat> = (0..n).map(|_| rng.small_rat()).collect();
        let mut gens = vec![v];
        // close under bracketing with basis vectors
        loop {
            let mut new_gens = gens.clone();
            for g in &gens {
                for i in 0..n {
                    new_gens.push(l.bracket(&l.basis_vector(i), g).unwrap());
                }
            }
            let before = linalg::rank(&gens);
            let after = linalg::rank(&new_gens);
            gens = new_gens;
            if after == before {
                break;
            }
        }
        let s = Subspace::from_vectors(n, &gens).unwrap();
        out.push(CheckResult::of(
            &format!("lie/derived-ideal-closure/{}", label(&l)),
            lie::is_ideal(&l, &s).unwrap(),
            format!("closure dim {}", s.dim()),
        ));
    }
    out
}

/// PBW oracle equivalence, window dimensions, confluence, filtration.
pub fn suite_pbw(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = Rng::new(seed);
    let algebras = [corpus::heisenberg(), corpus::sl2(), corpus::solvable2()];
    let mut mismatches = 0usize;
    let mut total = 0usize;
    for _ in 0..200 {
        let l = &algebras[rng.below(3)];
        let w = rng.word(l.dim(), 6);
        total += 1;
        if pbw::straighten(l, &w) != free_reduce(l, &w) {
            mismatches += 1;
        }
    }
    out.push(CheckResult::of(
        "pbw/oracle-equivalence",
        mismatches == 0,
        format!("{total} random words, {mismatches} mismatches"),
    ));
    // window dimension C(dim+d, d)
    let mut dim_ok = true;
    for l in corpus::all() {
        for d in 0..=5usize {
            let expect = binomial(l.dim() + d, d);
            if pbw::window_monomials(l.dim(), d).len() != expect {
                dim_ok = false;
            }
        }
    }
    out.push(CheckResult::of(
        "pbw/window-dimension",
        dim_ok,
        "C(dim+d, d) for d <= 5".to_string(),
    ));
    // filtration degree bounds on random elements
    let mut filt_ok = true;
    for l in &algebras {
        for _ in 0..10 {
            let a = rng.element(l.dim(), 3);
            let b = rng.element(l.dim(), 3);
            let ab = pbw::mul(l, &a, &b);
            let ba = pbw::mul(l, &b, &a);
            if !a.is_zero() && !b.is_zero() {
                if ab.degree() > a.degree() + b.degree() {
                    filt_ok = false;
                }
                let comm = ab.sub(&ba);
                if !comm.is_zero() && comm.degree() + 1 > a.degree() + b.degree() {
                    filt_ok = false;
                }
            }
        }
    }
    out.push(CheckResult::of(
        "pbw/filtration",
        filt_ok,
        "deg bounds on products and commutators".to_string(),
    ));
    out
}

/// The exact Hopf axioms on the degree-≤ d window of U(L).
pub fn hopf_checks(l: &LieAlgebra, d: usize) -> Vec<CheckResult> {
    let tag = label(l);
    let window = pbw::window_monomials(l.dim(), d);
    let mut coassoc = true;
    let mut counit_laws = true;
    let mut convolution = true;
    for m in &window {
        let e = monomial_elem(m);
        let delta = pbw::coproduct(l, &e);
        if coproduct_on_left(l, &delta) != coproduct_on_right(l, &delta) {
            coassoc = false;
        }
        // (ε⊗id)Δ = id = (id⊗ε)Δ
        let mut left = PbwElement::zero();
        let mut right = PbwElement::zero();
        for ((m1, m2), c) in delta.terms() {
            if m1.degree() == 0 {
                left.add_term(m2.clone(), c.clone());
            }
            if m2.degree() == 0 {
                right.add_term(m1.clone(), c.clone());
            }
        }
        if left != e || right != e {
            counit_laws = false;
        }
        // m(S⊗id)Δ = ε·1 = m(id⊗S)Δ
        let mut conv_l = PbwElement::zero();
        let mut conv_r = PbwElement::zero();
        for ((m1, m2), c) in delta.terms() {
            let s1 = pbw::antipode(l, &monomial_elem(m1));
            let p = pbw::mul(l, &s1, &monomial_elem(m2));
            conv_l = conv_l.add(&p.scale(c));
            let s2 = pbw::antipode(l, &monomial_elem(m2));
            let p = pbw::mul(l, &monomial_elem(m1), &s2);
            conv_r = conv_r.add(&p.scale(c));
        }
        let expect = PbwElement::scalar(e.counit());
        if conv_l != expect || conv_r != expect {
            convolution = false;
        }
    }
    let mut delta_multiplicative = true;
    let mut antipode_anti = true;
    for m1 in &window {
        for m2 in &window {
            if m1.degree() + m2.degree() > d {
                continue;
            }
            let a = monomial_elem(m1);
            let b = monomial_elem(m2);
            let ab = pbw::mul(l, &a, &b);
            let lhs = pbw::coproduct(l, &ab);
            let rhs = pbw::tensor_mul(l, l, &pbw::coproduct(l, &a), &pbw::coproduct(l, &b));
            if lhs != rhs {
                delta_multiplicative = false;
            }
            let s_ab = pbw::antipode(l, &ab);
            let sb_sa = pbw::mul(l, &pbw::antipode(l, &b), &pbw::antipode(l, &a));
            if s_ab != sb_sa {
                antipode_anti = false;
            }
        }
    }
    let mut out = vec![
        CheckResult::of(
            &format!("hopf/coassociativity/{tag}"),
            coassoc,
            format!("degree <= {d}"),
        ),
        CheckResult::of(
            &format!("hopf/counit-laws/{tag}"),
            counit_laws,
            format!("degree <= {d}"),
        ),
        CheckResult::of(
            &format!("hopf/antipode-convolution/{tag}"),
            convolution,
            format!("degree <= {d}"),
        ),
        CheckResult::of(
            &format!("hopf/coproduct-multiplicative/{tag}"),
            delta_multiplicative,
            format!("pairs of total degree <= {d}"),
        ),
        CheckResult::of(
            &format!("hopf/antipode-antiautomorphism/{tag}"),
            antipode_anti,
            format!("pairs of total degree <= {d}"),
        ),
    ];
    if l.is_abelian() {
        let mut inv_ok = true;
        for m in &window {
            let e = monomial_elem(m);
            if pbw::antipode(l, &pbw::antipode(l, &e)) != e {
                inv_ok = false;
            }
        }
        out.push(CheckResult::of(
            &format!("hopf/antipode-involutive/{tag}"),
            inv_ok,
            "S² = id on the abelian window".to_string(),
        ));
    }
    out
}

pub fn suite_hopf(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in [corpus::heisenberg(), corpus::sl2(), corpus::abelian(3)] {
        out.extend(hopf_checks(&l, d));
    }
    out
}

/// Primitive space dimension equals dim g on the degree-≤ d window.
pub fn suite_primitives(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in corpus::all() {
        if l.dim() == 0 {
            continue;
        }
        let (_, p) = pbw::primitive_space(&l, d);
        out.push(CheckResult::of(
            &format!("primitives/dimension/{}", label(&l)),
            p.dim() == l.dim(),
            format!(
                "dim P = {} (expected {}), window degree {d}",
                p.dim(),
                l.dim()
            ),
        ));
    }
    out
}

/// Compare the membership-positive subspace of a window against the
/// kernel of U(p): rank equality and containment both ways.
pub fn membership_kernel_comparison(
    l: &LieAlgebra,
    j: &Subspace,
    d: usize,
) -> Result<CheckResult, crate::Error> {
    let window = pbw::window_monomials(l.dim(), d);
    let (q, _, map) = pbw::functor_u_on_quotient(l, j)?;
    let target_window = pbw::window_monomials(q.dim(), d);
    let pos_of: BTreeMap<&PbwMonomial, usize> = target_window
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Vec::with_capacity(window.len());
    for m in &window {
        let img = map.apply(&monomial_elem(m));
        let mut row = vec![Rat::zero(); target_window.len()];
        for (tm, c) in img.terms() {
            row[pos_of[tm]] = c.clone();
        }
        rows.push(row);
    }
    // kernel of the map on the window (in window coordinates): vectors v
    // with Σ v_m map(m) = 0
    let ncols = target_window.len();
    let mut transposed = Vec::with_capacity(ncols);
    for c in 0..ncols {
        transposed.push(
            window
                .iter()
                .enumerate()
                .map(|(r, _)| rows[r][c].clone())
                .collect::<Vec<_>>(),
        );
    }
    let kernel = linalg::nullspace(&transposed, window.len());
    // membership-positive count: adapted monomials whose last factor lies
    // in the ideal segment
    let ab = lie::adapted_basis(l, j, &[])?;
    let start = ab.ideal_start();
    let positive_count = window
        .iter()
        .filter(|m| m.0.last().is_some_and(|&i| i >= start))
        .count();
    // kernel ⊆ membership-positive
    let mut kernel_in_membership = true;
    for v in &kernel {
        let mut u = PbwElement::zero();
        for (m, c) in window.iter().zip(v) {
            u.add_term(m.clone(), c.clone());
        }
        if !pbw::membership_ulj(l, &u, j)? {
            kernel_in_membership = false;
        }
    }
    // membership-positive elements map to zero: build them from products
    // of adapted basis vectors
    let ordered = ab.ordered();
    let mut positive_to_zero = true;
    for m in &window {
        if !m.0.last().is_some_and(|&i| i >= start) {
            continue;
        }
        let mut u = PbwElement::one();
        for &i in &m.0 {
            u = pbw::mul(l, &u, &PbwElement::from_vector(&ordered[i]));
        }
        if !map.apply(&u).is_zero() {
            positive_to_zero = false;
        }
    }
    let rank_equal = kernel.len() == positive_count;
    Ok(CheckResult::of(
        &format!("membership/kernel-comparison/{}", label(l)),
        rank_equal && kernel_in_membership && positive_to_zero,
        format!(
            "kernel dim {} vs positive count {positive_count}; containments {} {}",
            kernel.len(),
            kernel_in_membership,
            positive_to_zero
        ),
    ))
}

pub fn suite_membership(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let h = corpus::heisenberg();
    let j = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
    out.push(membership_kernel_comparison(&h, &j, d).unwrap());
    // two-sided ideal property on the window: closed under left/right
    // multiplication by generators
    let window = pbw::window_monomials(3, d.saturating_sub(1));
    let mut two_sided = true;
    for m in &window {
        if !m.0.last().is_some_and(|&i| i >= 2) {
            continue;
        }
        let u = monomial_elem(m);
        for g in 0..3 {
            let left = pbw::mul(&h, &PbwElement::generator(g), &u);
            let right = pbw::mul(&h, &u, &PbwElement::generator(g));
            if !pbw::membership_ulj(&h, &left, &j).unwrap()
                || !pbw::membership_ulj(&h, &right, &j).unwrap()
            {
                two_sided = false;
            }
        }
    }
    out.push(CheckResult::of(
        "membership/two-sided-ideal",
        two_sided,
        "closure under generator multiplication".to_string(),
    ));
    out
}

/// exp/log inversion, BCH values against the free associative series
/// oracle, grouplike/primitive interplay.
pub fn suite_trunc(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = Rng::new(seed);
    // exp/log mutual inversion on random elements at cutoff 5
    let models: Vec<GradedTruncation> = vec![
        GradedTruncation::from_weighted(&corpus::heisenberg(), 5).unwrap(),
        GradedTruncation::from_weighted(&corpus::abelian(2), 5).unwrap(),
        GradedTruncation::from_weighted(&corpus::free_nilpotent_class3(), 5).unwrap(),
    ];
    let mut roundtrip_ok = true;
    for _ in 0..50 {
        let t = &models[rng.below(models.len())];
        let mut a = rng.element(t.lie().dim(), 3);
        a = a.sub(&PbwElement::scalar(a.counit()));
        a = t.truncate(&a);
        let e = t.exp(&a).unwrap();
        if t.log(&e).unwrap() != a {
            roundtrip_ok = false;
        }
        let u = PbwElement::one().add(&a);
        if t.exp(&t.log(&u).unwrap()).unwrap() != t.truncate(&u) {
            roundtrip_ok = false;
        }
    }
    out.push(CheckResult::of(
        "trunc/exp-log-roundtrip",
        roundtrip_ok,
        "50 random elements, cutoff 5".to_string(),
    ));
    // BCH on the free nilpotent class-3 model vs the series oracle
    let l3 = corpus::free_nilpotent_class3();
    let t3 = GradedTruncation::from_weighted(&l3, 4).unwrap();
    let x = PbwElement::generator(0);
    let y = PbwElement::generator(1);
    let got = t3.bch(&x, &y).unwrap();
    let mut expect = PbwElement::zero();
    expect.add_term(PbwMonomial::generator(0), rat(1));
    expect.add_term(PbwMonomial::generator(1), rat(1));
    expect.add_term(PbwMonomial::generator(2), crate::scalar::ratio(1, 2));
    expect.add_term(PbwMonomial::generator(3), crate::scalar::ratio(1, 12));
    expect.add_term(PbwMonomial::generator(4), crate::scalar::ratio(-1, 12));
    let coeffs_ok = got == expect;
    let oracle_ok = bch_matches_free_series(&l3, &got, 4);
    out.push(CheckResult::of(
        "trunc/bch-class3",
        coeffs_ok && oracle_ok,
        format!("coefficients {coeffs_ok}, series oracle {oracle_ok}"),
    ));
    // BCH antisymmetry on the class-4 model
    let l4 = corpus::free_nilpotent_class4();
    let t4 = GradedTruncation::from_weighted(&l4, 5).unwrap();
    let mut anti_ok = true;
    for _ in 0..5 {
        let a = PbwElement::from_vector(
            &(0..2)
                .map(|_| rng.small_rat())
                .chain((2..8).map(|_| Rat::zero()))
                .collect(),
        );
        let b = PbwElement::from_vector(
            &(0..2)
                .map(|_| rng.small_rat())
                .chain((2..8).map(|_| Rat::zero()))
                .collect(),
        );
        let lhs = t4.bch(&a, &b).unwrap();
        let rhs = t4.bch(&b.neg(), &a.neg()).unwrap().neg();
        if lhs != rhs {
            anti_ok = false;
        }
    }
    out.push(CheckResult::of(
        "trunc/bch-antisymmetry",
        anti_ok,
        "bch(a,b) = -bch(-b,-a), class 4, cutoff 5".to_string(),
    ));
    // exp of primitive is grouplike; log of grouplike is primitive;
    // grouplikes closed under product and inverse
    let th = &models[0];
    let mut gp_ok = true;
    for _ in 0..10 {
        let mut a = PbwElement::from_vector(&(0..3).map(|_| rng.small_rat()).collect());
        a = th.truncate(&a);
        let e = th.exp(&a).unwrap();
        if !th.is_grouplike(&e) {
            gp_ok = false;
        }
        if !th.is_primitive(&th.log(&e).unwrap()) {
            gp_ok = false;
        }
        let b = th
            .exp(&th.truncate(&PbwElement::from_vector(
                &(0..3).map(|_| rng.small_rat()).collect(),
            )))
            .unwrap();
        if !th.is_grouplike(&th.mul(&e, &b)) {
            gp_ok = false;
        }
        if !th.is_grouplike(&th.inverse(&e).unwrap()) {
            gp_ok = false;
        }
    }
    out.push(CheckResult::of(
        "trunc/grouplike-primitive",
        gp_ok,
        "exp/log exchange primitives and grouplikes; group closure".to_string(),
    ));
    out
}

/// Compare a primitive BCH result (an element of the free nilpotent Lie
/// algebra on x, y) against log(exp X exp Y) computed independently in
/// the degree-truncated free associative algebra on two letters.
fn bch_matches_free_series(l: &LieAlgebra, result: &PbwElement, max_degree: usize) -> bool {
    // embed the Hall basis into free words
    let x = FreeNc::gen(0);
    let y = FreeNc::gen(1);
    let c = x.comm(&y, max_degree);
    let images: Vec<FreeNc> = match l.dim() {
        5 => vec![
            x.clone(),
            y.clone(),
            c.clone(),
            x.comm(&c, max_degree),
            y.comm(&c, max_degree),
        ],
        _ => return false,
    };
    let mut lhs = FreeNc::zero();
    for (m, coeff) in result.terms() {
        if m.degree() != 1 {
            return false; // BCH of primitives must be primitive
        }
        lhs = lhs.add(&images[m.0[0]].scale(coeff));
    }
    let rhs = FreeNc::log(
        &FreeNc::exp(&x, max_degree).mul(&FreeNc::exp(&y, max_degree), max_degree),
        max_degree,
    );
    lhs == rhs
}

/// Noncommutative polynomial in free generators, truncated by word length.
#[derive(Debug, Clone, PartialEq, Eq)]
struct FreeNc {
    terms: BTreeMap<Vec<u8>, Rat>,
}

impl FreeNc {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        let mut t = Self::zero();
        t.terms.insert(vec![], Rat::one());
        t
    }

    fn gen(i: u8) -> Self {
        let mut t = Self::zero();
        t.terms.insert(vec![i], Rat::one());
        t
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            let e = out.terms.entry(w.clone()).or_insert_with(Rat::zero);
            *e += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn mul(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                if wa.len() + wb.len() >= max_degree {
                    continue;
                }
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let e = out.terms.entry(w).or_insert_with(Rat::zero);
                *e += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn comm(&self, other: &Self, max_degree: usize) -> Self {
        self.mul(other, max_degree)
            .add(&other.mul(self, max_degree).scale(&-Rat::one()))
    }

    fn exp(a: &Self, max_degree: usize) -> Self {
        let mut out = Self::one();
        let mut power = a.clone();
        let mut k = 1u64;
        while !power.terms.is_empty() {
            out = out.add(&power.scale(&factorial(k).recip()));
            power = power.mul(a, max_degree);
            k += 1;
        }
        out
    }

    fn log(u: &Self, max_degree: usize) -> Self {
        let mut v = u.clone();
        let e = v.terms.entry(vec![]).or_insert_with(Rat::zero);
        *e -= Rat::one();
        v.terms.retain(|_, c| !c.is_zero());
        let mut out = Self::zero();
        let mut power = v.clone();
        let mut k: i64 = 1;
        while !power.terms.is_empty() {
            let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
            out = out.add(&power.scale(&(sign / Rat::from_integer(k.into()))));
            power = power.mul(&v, max_degree);
            k += 1;
        }
        out
    }
}

/// Tower coherence and universal factorization for the Heisenberg tower.
pub fn suite_tower(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let h = corpus::heisenberg();
    let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
    let t = tower::make_tower(&h, &[center, Subspace::zero(3)]).unwrap();
    out.push(CheckResult::of(
        "tower/bonding-composition",
        t.check_bonding_composition(d),
        format!("window degree {d}"),
    ));
    // bundled representations: factor and cross-check against the direct
    // extension (factor_through_tower verifies the agreement internally)
    let e = |n: usize, i: usize, j: usize| -> Mat {
        let mut m = linalg::zeros(n, n);
        m[i][j] = rat(1);
        m
    };
    let reps: Vec<(&str, Vec<Mat>, usize)> = vec![
        ("faithful-3x3", vec![e(3, 0, 1), e(3, 1, 2), e(3, 0, 2)], 1),
        (
            "abelianized-2x2",
            vec![e(2, 0, 1), linalg::zeros(2, 2), linalg::zeros(2, 2)],
            0,
        ),
        ("zero-2x2", vec![linalg::zeros(2, 2); 3], 0),
    ];
    for (name, images, expect_stage) in reps {
        match tower::factor_through_tower(&t, &images, d) {
            Ok(f) => out.push(CheckResult::of(
                &format!("tower/factorization/{name}"),
                f.stage == expect_stage,
                format!("factored at stage {}", f.stage),
            )),
            Err(e) => out.push(CheckResult::fail(
                &format!("tower/factorization/{name}"),
                format!("{e}"),
            )),
        }
    }
    // products of threads remain threads
    let mut rng = Rng::new(7);
    let mut thread_ok = true;
    for _ in 0..10 {
        let a = t.project_thread(&rng.element(3, 3));
        let b = t.project_thread(&rng.element(3, 3));
        let p = t.thread_mul(&a, &b).unwrap();
        if !t.check_thread(&p).unwrap() {
            thread_ok = false;
        }
    }
    out.push(CheckResult::of(
        "tower/thread-products",
        thread_ok,
        "stage-wise products stay compatible".to_string(),
    ));
    out
}

/// The abelian dual suite: γ coassociativity, q_map as a Hopf morphism,
/// exact primitive/grouplike characterization on a generated family.
pub fn suite_abelian(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = Rng::new(seed);
    // γ coassociativity via triple substitution
    let d = 2usize;
    let mut samples: Vec<ExpPolyFunction> = vec![
        ExpPolyFunction::one(d),
        ExpPolyFunction::coordinate(d, 0),
        ExpPolyFunction::exp_linear(d, vec![rat(1), rat(-2)]),
    ];
    for _ in 0..5 {
        samples.push(random_exp_poly(&mut rng, d));
    }
    let mut coassoc_ok = true;
    let mut morphism_ok = true;
    for phi in &samples {
        let g = phi.gamma();
        // (γ⊗id)γ and (id⊗γ)γ both substitute ω ← ω₁+ω₂+ω₃
        let left_imgs: Vec<Vec<usize>> = (0..d)
            .map(|i| vec![i, d + i])
            .chain((0..d).map(|i| vec![2 * d + i]))
            .collect();
        let right_imgs: Vec<Vec<usize>> = (0..d)
            .map(|i| vec![i])
            .chain((0..d).map(|i| vec![d + i, 2 * d + i]))
            .collect();
        let lhs = g.substitute_sum(3 * d, &left_imgs);
        let rhs = g.substitute_sum(3 * d, &right_imgs);
        if lhs != rhs {
            coassoc_ok = false;
        }
    }
    for _ in 0..5 {
        let a = random_exp_poly(&mut rng, d);
        let b = random_exp_poly(&mut rng, d);
        // γ is an algebra morphism
        if a.mul(&b).unwrap().gamma() != a.gamma().mul(&b.gamma()).unwrap() {
            morphism_ok = false;
        }
    }
    out.push(CheckResult::of(
        "abelian/gamma-coassociative",
        coassoc_ok,
        "triple substitution agreement".to_string(),
    ));
    out.push(CheckResult::of(
        "abelian/gamma-morphism",
        morphism_ok,
        "γ(φψ) = γφ · γψ".to_string(),
    ));
    // q_map is a Hopf morphism on degree-≤4 inputs over abelian g
    let mut q_ok = true;
    let mut inj_ok = true;
    for dim in 1..=3usize {
        let l = corpus::abelian(dim);
        let window = pbw::window_monomials(dim, 4);
        let monos: Vec<&PbwMonomial> = if dim < 3 {
            window.iter().collect()
        } else {
            window.iter().step_by(3).collect()
        };
        for m in &monos {
            let u = monomial_elem(m);
            let qu = abelian::q_map(&l, &u).unwrap();
            // ε square: counit vs value at zero
            if qu.value_at_zero() != u.counit() {
                q_ok = false;
            }
            // Δ square: γ(q u) = (q⊗q)(Δ u)
            let lhs = qu.gamma();
            let mut rhs = ExpPolyFunction::zero(2 * dim);
            for ((m1, m2), c) in pbw::coproduct(&l, &u).terms() {
                let q1 = abelian::q_map(&l, &monomial_elem(m1)).unwrap();
                let q2 = abelian::q_map(&l, &monomial_elem(m2)).unwrap();
                rhs = rhs
                    .add(&abelian::tensor(&q1, &q2).unwrap().scale(c))
                    .unwrap();
            }
            if lhs != rhs {
                q_ok = false;
            }
        }
        // multiplicativity on random pairs
        for _ in 0..5 {
            let a = rng.element(dim, 2);
            let b = rng.element(dim, 2);
            let lhs = abelian::q_map(&l, &pbw::mul(&l, &a, &b)).unwrap();
            let rhs = abelian::q_map(&l, &a)
                .unwrap()
                .mul(&abelian::q_map(&l, &b).unwrap())
                .unwrap();
            if lhs != rhs {
                q_ok = false;
            }
        }
        // injectivity on polynomials: distinct monomials hit distinct
        // exponent vectors, so images of a window are independent
        let mut seen = alloc::collections::BTreeSet::new();
        for m in &window {
            let q = abelian::q_map(&l, &monomial_elem(m)).unwrap();
            let key = format!("{q:?}");
            if !seen.insert(key) {
                inj_ok = false;
            }
        }
    }
    out.push(CheckResult::of(
        "abelian/q-map-hopf-morphism",
        q_ok,
        "both intertwining squares and multiplicativity".to_string(),
    ));
    out.push(CheckResult::of(
        "abelian/q-map-injective-on-polynomials",
        inj_ok,
        "degree <= 4, dim <= 3".to_string(),
    ));
    // primitive/grouplike classification across a generated family
    let mut class_ok = true;
    let mut cases = 0usize;
    while cases < 100 {
        let kind = rng.below(5);
        let dim = 1 + rng.below(2);
        let (phi, expect_prim, expect_gp) = match kind {
            0 => {
                // nonzero linear form: primitive, not grouplike
                let mut l = ExpPolyFunction::zero(dim);
                let mut nonzero = false;
                for i in 0..dim {
                    let c = rng.small_rat();
                    if !c.is_zero() {
                        nonzero = true;
                    }
                    l = l
                        .add(&ExpPolyFunction::coordinate(dim, i).scale(&c))
                        .unwrap();
                }
                if !nonzero {
                    continue;
                }
                (l, true, false)
            }
            1 => {
                // exponential of a linear form: grouplike, not primitive
                let lin: Vec<Rat> = (0..dim).map(|_| rng.small_rat()).collect();
                let is_zero_form = lin.iter().all(Rat::is_zero);
                let e = ExpPolyFunction::exp_linear(dim, lin);
                // e^0 = 1 is still grouplike but not primitive
                let _ = is_zero_form;
                (e, false, true)
            }
            2 => {
                // quadratic polynomial: neither
                let i = rng.below(dim);
                let w = ExpPolyFunction::coordinate(dim, i);
                let sq = w.mul(&w).unwrap();
                (sq.add(&w).unwrap(), false, false)
            }
            3 => {
                // polynomial times exponential: neither
                let w = ExpPolyFunction::coordinate(dim, 0);
                let e = ExpPolyFunction::exp_linear(dim, vec![rat(1); dim]);
                (w.mul(&e).unwrap(), false, false)
            }
            _ => {
                // nonunit constant: neither (0 is primitive, skip it)
                let c = rng.small_rat();
                if c.is_zero() || c.is_one() {
                    continue;
                }
                (ExpPolyFunction::constant(dim, c), false, false)
            }
        };
        cases += 1;
        if abelian::is_primitive_fn(&phi) != expect_prim {
            class_ok = false;
        }
        if abelian::is_grouplike_fn(&phi) != expect_gp {
            class_ok = false;
        }
    }
    out.push(CheckResult::of(
        "abelian/primitive-grouplike-classification",
        class_ok,
        "100 generated cases".to_string(),
    ));
    // ν_g lands in primitives; antipode convolution law
    let mut nu_ok = true;
    for dim in 1..=3usize {
        for i in 0..dim {
            let mut x = vec![Rat::zero(); dim];
            x[i] = Rat::one();
            if !abelian::is_primitive_fn(&abelian::nu_embed(&x)) {
                nu_ok = false;
            }
        }
    }
    out.push(CheckResult::of(
        "abelian/nu-embed-primitive",
        nu_ok,
        "basis embeddings are additive".to_string(),
    ));
    // grouplikes closed under product and inverse on the subclass
    let mut closure_ok = true;
    for _ in 0..10 {
        let l1: Vec<Rat> = (0..d).map(|_| rng.small_rat()).collect();
        let l2: Vec<Rat> = (0..d).map(|_| rng.small_rat()).collect();
        let g1 = ExpPolyFunction::exp_linear(d, l1.clone());
        let g2 = ExpPolyFunction::exp_linear(d, l2);
        if !abelian::is_grouplike_fn(&g1.mul(&g2).unwrap()) {
            closure_ok = false;
        }
        let inv = ExpPolyFunction::exp_linear(d, l1.iter().map(|c| -c.clone()).collect());
        if !abelian::is_grouplike_fn(&inv) || g1.mul(&inv).unwrap() != ExpPolyFunction::one(d) {
            closure_ok = false;
        }
    }
    out.push(CheckResult::of(
        "abelian/grouplike-group-closure",
        closure_ok,
        "products and inverses of exponentials".to_string(),
    ));
    // canonical-form equality is sound on sample points
    let mut sound_ok = true;
    for _ in 0..3 {
        let a = random_exp_poly(&mut rng, d);
        let b = random_exp_poly(&mut rng, d);
        let diff = a.sub(&b).unwrap();
        if !diff.is_zero() {
            // some of 20 sample points should witness the difference
            let mut witnessed = false;
            for _ in 0..20 {
                let omega: Vec<Rat> = (0..d).map(|_| rng.small_rat()).collect();
                if a.eval(&omega).unwrap() != b.eval(&omega).unwrap() {
                    witnessed = true;
                    break;
                }
            }
            if !witnessed {
                sound_ok = false;
            }
        }
    }
    out.push(CheckResult::of(
        "abelian/canonical-form-soundness",
        sound_ok,
        "pointwise disagreement witnesses".to_string(),
    ));
    out
}

fn random_exp_poly(rng: &mut Rng, d: usize) -> ExpPolyFunction {
    let mut out = ExpPolyFunction::zero(d);
    for _ in 0..2 {
        let lin: Vec<Rat> = (0..d).map(|_| rat(rng.below(3) as i64 - 1)).collect();
        let mut poly = ExpPolyFunction::constant(d, rng.small_rat());
        for _ in 0..rng.below(3) {
            let i = rng.below(d);
            poly = poly.mul(&ExpPolyFunction::coordinate(d, i)).unwrap();
        }
        out = out
            .add(&poly.mul(&ExpPolyFunction::exp_linear(d, lin)).unwrap())
            .unwrap();
    }
    out
}

/// The Example-4.7 suite around A2.
pub fn suite_a2(seed: u64) -> Vec<CheckResult> {
    use crate::abelian::{a2_is_unit, a2_matrix, a2_morphism_census, a2_mul, A2Element};
    let mut out = Vec::new();
    let mut rng = Rng::new(seed);
    let mut mult_ok = true;
    let mut unit_ok = true;
    for _ in 0..100 {
        let a = A2Element(rng.small_rat(), rng.small_rat());
        let b = A2Element(rng.small_rat(), rng.small_rat());
        let lhs = a2_matrix(&a2_mul(&a, &b));
        let rhs = linalg::mat_mul(&a2_matrix(&a), &a2_matrix(&b));
        if lhs != rhs {
            mult_ok = false;
        }
        if a2_is_unit(&a) != !a.1.is_zero() {
            unit_ok = false;
        }
    }
    out.push(CheckResult::of(
        "a2/matrix-representation-multiplicative",
        mult_ok,
        "100 random pairs".to_string(),
    ));
    out.push(CheckResult::of(
        "a2/units-characterization",
        unit_ok,
        "unit iff second coordinate nonzero".to_string(),
    ));
    let radical = abelian::radical_commutative(&abelian::a2_algebra()).unwrap();
    out.push(CheckResult::of(
        "a2/radical",
        radical.dim() == 1 && radical.contains(&vec![rat(1), rat(0)]),
        format!("radical dim {}", radical.dim()),
    ));
    let mut census_ok = true;
    for n in 1..=8usize {
        let census = a2_morphism_census(n);
        if census.len() != n {
            census_ok = false;
        }
        for m in &census {
            if !m.radical_preimage_in_kernel() {
                census_ok = false;
            }
        }
    }
    out.push(CheckResult::of(
        "a2/morphism-census",
        census_ok,
        "n morphisms for n <= 8, radical preimage in kernel".to_string(),
    ));
    out
}

/// Mutation smoke test: the sign-flipped straightening must be caught by
/// the oracle comparison and by the Hopf convolution law.
pub fn suite_mutation(seed: u64) -> Vec<CheckResult> {
    let mut rng = Rng::new(seed);
    let mut out = Vec::new();
    let algebras = [corpus::heisenberg(), corpus::sl2()];
    // criterion-1 analogue: oracle equivalence must fail somewhere
    let mut caught_oracle = false;
    for _ in 0..100 {
        let l = &algebras[rng.below(2)];
        let w = rng.word(l.dim(), 5);
        if pbw::straighten_sign_flipped(l, &w) != free_reduce(l, &w) {
            caught_oracle = true;
            break;
        }
    }
    out.push(CheckResult::of(
        "mutation/oracle-detects-sign-error",
        caught_oracle,
        "flipped bracket sign breaks PBW oracle equivalence".to_string(),
    ));
    // criterion-3 analogue: the antipode convolution law computed with a
    // product built on the mutated straightening must fail
    let h = corpus::heisenberg();
    let mul_mut = |a: &PbwElement, b: &PbwElement| -> PbwElement {
        let mut out = PbwElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut w = ma.0.clone();
                w.extend_from_slice(&mb.0);
                let s = pbw::straighten_sign_flipped(&h, &w);
                for (m, v) in s.terms() {
                    out.add_term(m.clone(), v * &(ca * cb));
                }
            }
        }
        out
    };
    let mut caught_hopf = false;
    for m in pbw::window_monomials(3, 3) {
        let e = monomial_elem(&m);
        let delta = pbw::coproduct(&h, &e);
        let mut conv = PbwElement::zero();
        for ((m1, m2), c) in delta.terms() {
            let s1 = pbw::antipode(&h, &monomial_elem(m1));
            conv = conv.add(&mul_mut(&s1, &monomial_elem(m2)).scale(c));
        }
        if conv != PbwElement::scalar(e.counit()) {
            caught_hopf = true;
            break;
        }
    }
    out.push(CheckResult::of(
        "mutation/hopf-detects-sign-error",
        caught_hopf,
        "convolution law fails under the mutated product".to_string(),
    ));
    out
}

/// All suite names accepted by `run_suite`.
pub const SUITE_NAMES: &[&str] = &[
    "lie",
    "pbw",
    "hopf",
    "primitives",
    "membership",
    "trunc",
    "tower",
    "abelian",
    "a2",
    "mutation",
];

pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CheckResult>> {
    match name {
        "lie" => Some(suite_lie(seed)),
        "pbw" => Some(suite_pbw(seed)),
        "hopf" => Some(suite_hopf(4)),
        "primitives" => Some(suite_primitives(4)),
        "membership" => Some(suite_membership(4)),
        "trunc" => Some(suite_trunc(seed)),
        "tower" => Some(suite_tower(3)),
        "abelian" => Some(suite_abelian(seed)),
        "a2" => Some(suite_a2(seed)),
        "mutation" => Some(suite_mutation(seed)),
        _ => None,
    }
}

pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for name in SUITE_NAMES {
        out.extend(run_suite(name, seed).unwrap());
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

fn binomial(n: usize, k: usize) -> usize {
    let mut v = 1usize;
    for i in 0..k {
        v = v * (n - k + i + 1) / (i + 1);
    }
    v
}

fn label(l: &LieAlgebra) -> String {
    let mut s = String::new();
    for (i, n) in l.basis_names().iter().enumerate() {
        if i > 0 {
            s.push('-');
        }
        s.push_str(n);
    }
    if s.is_empty() {
        s.push_str("trivial");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduce_agrees_on_known_case() {
        let h = corpus::heisenberg();
        assert_eq!(free_reduce(&h, &[1, 0]), pbw::straighten(&h, &[1, 0]));
        assert_eq!(free_reduce(&h, &[1, 0, 0]), pbw::straighten(&h, &[1, 0, 0]));
    }

    #[test]
    fn all_suites_pass() {
        for r in run_all(0xC0FFEE) {
            assert!(r.pass, "{}: {}", r.name, r.detail);
        }
    }
}
