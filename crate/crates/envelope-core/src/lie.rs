//! Structure-constant Lie algebras over exact rationals: brackets, ideals,
//! quotients, direct products, and the adapted complement basis used to
//! decide membership in U(L)J.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{self, Mat};
use crate::scalar::Rat;

/// Element of a Lie algebra, as coefficients over the basis.
pub type Vector = Vec<Rat>;

/// Sparse bracket table: `((i, j), [(k, c), ...])` means `[b_i, b_j] = Σ c·b_k`.
pub type BracketSpec = Vec<((usize, usize), Vec<(usize, Rat)>)>;

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Brackets are stored sparsely for `i < j` only; `[b_j, b_i]` is the
/// negation by construction, and `[b_i, b_i] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
    weights: Option<Vec<u32>>,
}

/// Outcome of a Jacobi identity scan over all basis triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Basis triples (i, j, k) with a nonzero Jacobi sum.
    pub violations: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieAlgebra {
    /// Build from basis names and sparse brackets `[b_i, b_j] = Σ c_k b_k`.
    /// Pairs with `i > j` are antisymmetrized into storage order; a nonzero
    /// `[b_i, b_i]` contradicts antisymmetry and is rejected.
    pub fn new(basis_names: Vec<String>, brackets: BracketSpec) -> Result<Self, Error> {
        let n = basis_names.len();
        let mut seen = BTreeMap::new();
        for name in &basis_names {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        let mut store: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: i.max(j) + 1,
                });
            }
            let (key, flip) = if i < j {
                ((i, j), false)
            } else {
                ((j, i), true)
            };
            if i == j {
                if terms.iter().any(|(_, c)| !c.is_zero()) {
                    return Err(Error::UnknownSymbol(basis_names[i].clone()));
                }
                continue;
            }
            let entry = store.entry(key).or_default();
            for (k, c) in terms {
                let c = if flip { -c } else { c };
                entry.push((k, c));
            }
        }
        // merge duplicate targets, drop zeros
        for terms in store.values_mut() {
            let mut merged: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, c) in terms.drain(..) {
                *merged.entry(k).or_insert_with(Rat::zero) += c;
            }
            *terms = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        store.retain(|_, v| !v.is_empty());
        Ok(Self {
            basis_names,
            brackets: store,
            weights: None,
        })
    }

    pub fn abelian(names: Vec<String>) -> Self {
        Self::new(names, vec![]).expect("abelian algebra construction cannot fail")
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Weights per basis element, when the algebra is graded.
    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// Attach positive weights; bracket-additivity is checked here so a
    /// weighted algebra is graded by construction.
    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self, Error> {
        if weights.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: weights.len(),
            });
        }
        for (&(i, j), terms) in &self.brackets {
            for (k, c) in terms {
                if !c.is_zero() && weights[*k] != weights[i] + weights[j] {
                    return Err(Error::WeightsNotAdditive { i, j, k: *k });
                }
            }
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Rat::zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero_vector();
        v[i] = crate::scalar::one();
        v
    }

    /// `[b_i, b_j]` as a vector (any index order).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero_vector();
        if i == j {
            return v;
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(terms) = self.brackets.get(&key) {
            for (k, c) in terms {
                v[*k] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        v
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, v: &Vector, w: &Vector) -> Result<Vector, Error> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
        let mut out = self.zero_vector();
        for (&(i, j), terms) in &self.brackets {
            // coefficient of [b_i,b_j] in [v,w] is v_i w_j - v_j w_i
            let c = &v[i] * &w[j] - &v[j] * &w[i];
            if c.is_zero() {
                continue;
            }
            for (k, s) in terms {
                let t = &c * s;
                out[*k] += t;
            }
        }
        Ok(out)
    }

    /// Scan every basis triple for the Jacobi identity.
    pub fn check_jacobi(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let bi = self.basis_vector(i);
                    let bj = self.basis_vector(j);
                    let bk = self.basis_vector(k);
                    let mut sum = self.bracket(&bi, &self.bracket(&bj, &bk).unwrap()).unwrap();
                    let t2 = self.bracket(&bj, &self.bracket(&bk, &bi).unwrap()).unwrap();
                    let t3 = self.bracket(&bk, &self.bracket(&bi, &bj).unwrap()).unwrap();
                    for ((a, b), c) in sum.iter_mut().zip(t2).zip(t3) {
                        *a += b;
                        *a += c;
                    }
                    if sum.iter().any(|c| !c.is_zero()) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

/// Direct product with zero cross brackets. Colliding names from the second
/// factor are suffixed; the renames are returned alongside.
pub fn direct_product(l1: &LieAlgebra, l2: &LieAlgebra) -> (LieAlgebra, Vec<(String, String)>) {
    let n1 = l1.dim();
    let mut names = l1.basis_names.clone();
    let mut renames = Vec::new();
    for name in &l2.basis_names {
        let mut candidate = name.clone();
        let mut suffix = 2;
        while names.contains(&candidate) {
            candidate = format!("{name}_{suffix}");
            suffix += 1;
        }
        if &candidate != name {
            renames.push((name.clone(), candidate.clone()));
        }
        names.push(candidate);
    }
    let mut brackets: BracketSpec = Vec::new();
    for (&(i, j), terms) in &l1.brackets {
        brackets.push(((i, j), terms.clone()));
    }
    for (&(i, j), terms) in &l2.brackets {
        let shifted = terms.iter().map(|(k, c)| (k + n1, c.clone())).collect();
        brackets.push(((i + n1, j + n1), shifted));
    }
    let alg = LieAlgebra::new(names, brackets).expect("product of valid algebras is valid");
    (alg, renames)
}

/// A subspace in canonical reduced row echelon form, so equality of
/// subspaces is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(ambient: usize, vectors: &[Vector]) -> Result<Self, Error> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let mut rows = vectors.to_vec();
        let pivots = linalg::rref(&mut rows);
        Ok(Self {
            ambient,
            rows,
            pivots,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, &linalg::identity(ambient)).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let (_, res) = linalg::reduce_against(&self.rows, &self.pivots, v);
        res.iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Reduce `v` modulo the subspace (clear all pivot coordinates).
    pub fn reduce(&self, v: &Vector) -> Vector {
        linalg::reduce_against(&self.rows, &self.pivots, v).1
    }
}

/// True iff `[L, S] ⊆ S`, checked on basis pairs.
pub fn is_ideal(l: &LieAlgebra, s: &Subspace) -> Result<bool, Error> {
    if s.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: s.ambient_dim(),
        });
    }
    for i in 0..l.dim() {
        let bi = l.basis_vector(i);
        for v in s.basis() {
            if !s.contains(&l.bracket(&bi, v)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The quotient Lie algebra together with the projection matrix
/// (rows indexed by quotient basis, columns by the ambient basis).
pub fn quotient(l: &LieAlgebra, j: &Subspace) -> Result<(LieAlgebra, Mat), Error> {
    if !is_ideal(l, j)? {
        return Err(Error::NotAnIdeal);
    }
    let n = l.dim();
    let free: Vec<usize> = (0..n).filter(|i| !j.pivots().contains(i)).collect();
    let q = free.len();
    // projection: reduce mod J, then read off free coordinates
    let project = |v: &Vector| -> Vector {
        let r = j.reduce(v);
        free.iter().map(|&i| r[i].clone()).collect()
    };
    let cols: Vec<Vector> = (0..n).map(|i| project(&l.basis_vector(i))).collect();
    let projection: Mat = (0..q)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    let names: Vec<String> = free.iter().map(|&i| l.basis_names[i].clone()).collect();
    let mut brackets = Vec::new();
    for a in 0..q {
        for b in (a + 1)..q {
            let w = l.bracket_basis(free[a], free[b]);
            let img = project(&w);
            let terms: Vec<(usize, Rat)> = img
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                brackets.push(((a, b), terms));
            }
        }
    }
    let quotient_alg = LieAlgebra::new(names, brackets)?;
    Ok((quotient_alg, projection))
}

/// The ordered basis F, F', F'' of a splitting L = H ⊕ J with span(F) ⊆ H
/// and span(F'') = J, in that concatenation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedAdaptedBasis {
    pub f: Vec<Vector>,
    pub f_prime: Vec<Vector>,
    pub f_double: Vec<Vector>,
}

impl OrderedAdaptedBasis {
    pub fn ordered(&self) -> Vec<Vector> {
        let mut out = self.f.clone();
        out.extend(self.f_prime.iter().cloned());
        out.extend(self.f_double.iter().cloned());
        out
    }

    /// Index of the first F'' position in the concatenated order.
    pub fn ideal_start(&self) -> usize {
        self.f.len() + self.f_prime.len()
    }
}

/// Complete `seed` to an adapted basis: the complement H ⊇ span(seed) is
/// chosen by greedy pivot selection over the ambient basis order (lowest
/// index first); F'' is the canonical basis of J.
pub fn adapted_basis(
    l: &LieAlgebra,
    j: &Subspace,
    seed: &[Vector],
) -> Result<OrderedAdaptedBasis, Error> {
    if !is_ideal(l, j)? {
        return Err(Error::NotAnIdeal);
    }
    let n = l.dim();
    // seed must stay independent modulo J
    let mut probe: Vec<Vector> = j.basis().to_vec();
    let base_rank = probe.len();
    probe.extend(seed.iter().cloned());
    if linalg::rank(&probe) != base_rank + seed.len() {
        return Err(Error::DependentModuloIdeal);
    }
    let mut f_prime = Vec::new();
    let mut current = probe;
    let mut current_rank = linalg::rank(&current);
    for i in 0..n {
        if current_rank == n {
            break;
        }
        let e = l.basis_vector(i);
        current.push(e.clone());
        let r = linalg::rank(&current);
        if r > current_rank {
            current_rank = r;
            f_prime.push(e);
        } else {
            current.pop();
        }
    }
    Ok(OrderedAdaptedBasis {
        f: seed.to_vec(),
        f_prime,
        f_double: j.basis().to_vec(),
    })
}

/// Re-express the algebra in the adapted basis order. Returns the algebra
/// over the new ordered basis together with the matrix whose column `i`
/// holds the coordinates of the old generator `b_i` in the new basis.
pub fn adapted_algebra(
    l: &LieAlgebra,
    basis: &OrderedAdaptedBasis,
) -> Result<(LieAlgebra, Mat), Error> {
    let n = l.dim();
    let ordered = basis.ordered();
    if ordered.len() != n || linalg::rank(&ordered) != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: ordered.len(),
        });
    }
    // T has the adapted vectors as columns; T^{-1} e_i = coords of e_i
    let mut t = linalg::zeros(n, n);
    for (c, v) in ordered.iter().enumerate() {
        for r in 0..n {
            t[r][c] = v[r].clone();
        }
    }
    let t_inv = linalg::invert(&t).expect("full-rank basis");
    let names: Vec<String> = (0..n).map(|i| format!("t{}", i).to_string()).collect();
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let w = l.bracket(&ordered[a], &ordered[b])?;
            // coords of w in the adapted basis
            let coords: Vector = (0..n)
                .map(|r| {
                    let mut acc = Rat::zero();
                    for c in 0..n {
                        let term = &t_inv[r][c] * &w[c];
                        acc += term;
                    }
                    acc
                })
                .collect();
            let terms: Vec<(usize, Rat)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                brackets.push(((a, b), terms));
            }
        }
    }
    let alg = LieAlgebra::new(names, brackets)?;
    // column i of t_inv is T^{-1} e_i
    Ok((alg, t_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::{rat, ratio};

    #[test]
    fn heisenberg_bracket() {
        let h = corpus::heisenberg();
        let x = h.basis_vector(0);
        let y = h.basis_vector(1);
        let z = h.basis_vector(2);
        assert_eq!(h.bracket(&x, &y).unwrap(), z);
        assert_eq!(h.bracket(&x, &x).unwrap(), h.zero_vector());
        // bilinearity: [2x + y, y] = 2z
        let v: Vector = vec![rat(2), rat(1), rat(0)];
        let mut expect = h.zero_vector();
        expect[2] = rat(2);
        assert_eq!(h.bracket(&v, &y).unwrap(), expect);
    }

    #[test]
    fn jacobi_passes_on_corpus() {
        for l in corpus::all() {
            assert!(l.check_jacobi().passed(), "{:?}", l.basis_names());
        }
    }

    #[test]
    fn jacobi_catches_perturbed_sl2() {
        // [e,f] = h + e breaks Jacobi
        let l = LieAlgebra::new(
            vec!["e".into(), "f".into(), "h".into()],
            vec![
                ((0, 1), vec![(2, rat(1)), (0, rat(1))]),
                ((2, 0), vec![(0, rat(2))]),
                ((2, 1), vec![(1, rat(-2))]),
            ],
        )
        .unwrap();
        assert!(!l.check_jacobi().passed());
    }

    #[test]
    fn product_dimensions_and_cross_brackets() {
        let h = corpus::heisenberg();
        let a2 = LieAlgebra::abelian(vec!["a".into(), "b".into()]);
        let (p, renames) = direct_product(&h, &a2);
        assert_eq!(p.dim(), 5);
        assert!(renames.is_empty());
        let x = p.basis_vector(0);
        let a = p.basis_vector(3);
        assert_eq!(p.bracket(&x, &a).unwrap(), p.zero_vector());
        let (sp, _) = direct_product(&corpus::sl2(), &h);
        assert!(sp.check_jacobi().passed());
    }

    #[test]
    fn ideal_checks() {
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        assert!(is_ideal(&h, &center).unwrap());
        let sl2 = corpus::sl2();
        let span_e = Subspace::from_vectors(3, &[sl2.basis_vector(0)]).unwrap();
        assert!(!is_ideal(&sl2, &span_e).unwrap());
        assert!(is_ideal(&h, &Subspace::full(3)).unwrap());
    }

    #[test]
    fn quotient_heisenberg_by_center() {
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let (q, p) = quotient(&h, &center).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        // projection respects brackets
        for i in 0..3 {
            for j in 0..3 {
                let w = h.bracket_basis(i, j);
                let lhs: Vector = (0..2)
                    .map(|r| (0..3).fold(Rat::zero(), |acc, c| acc + &p[r][c] * &w[c]))
                    .collect();
                let pi = |v: &Vector| -> Vector {
                    (0..2)
                        .map(|r| (0..3).fold(Rat::zero(), |acc, c| acc + &p[r][c] * &v[c]))
                        .collect()
                };
                let rhs = q
                    .bracket(&pi(&h.basis_vector(i)), &pi(&h.basis_vector(j)))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quotient_edge_cases() {
        let h = corpus::heisenberg();
        let (q, _) = quotient(&h, &Subspace::full(3)).unwrap();
        assert_eq!(q.dim(), 0);
        let (q, p) = quotient(&h, &Subspace::zero(3)).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(p, linalg::identity(3));
    }

    #[test]
    fn adapted_basis_heisenberg() {
        let h = corpus::heisenberg();
        let j = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let ab = adapted_basis(&h, &j, &[h.basis_vector(0)]).unwrap();
        assert_eq!(ab.f, vec![h.basis_vector(0)]);
        assert_eq!(ab.f_prime, vec![h.basis_vector(1)]);
        assert_eq!(ab.f_double, vec![h.basis_vector(2)]);
        assert_eq!(linalg::rank(&ab.ordered()), 3);
    }

    #[test]
    fn adapted_basis_edge_cases() {
        let h = corpus::heisenberg();
        let ab = adapted_basis(&h, &Subspace::zero(3), &[]).unwrap();
        assert_eq!(ab.f_prime.len(), 3);
        assert!(ab.f_double.is_empty());
        let ab = adapted_basis(&h, &Subspace::full(3), &[]).unwrap();
        assert!(ab.f.is_empty() && ab.f_prime.is_empty());
        assert_eq!(ab.f_double.len(), 3);
        // seed inside J is rejected
        let j = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        assert_eq!(
            adapted_basis(&h, &j, &[h.basis_vector(2)]),
            Err(Error::DependentModuloIdeal)
        );
    }

    #[test]
    fn weights_additivity_enforced() {
        let h = corpus::heisenberg();
        assert!(h.clone().with_weights(vec![1, 1, 2]).is_ok());
        assert_eq!(
            h.with_weights(vec![1, 1, 1]),
            Err(Error::WeightsNotAdditive { i: 0, j: 1, k: 2 })
        );
    }

    #[test]
    fn fractional_structure_constants() {
        let l = LieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![((0, 1), vec![(2, ratio(1, 2))])],
        )
        .unwrap();
        let v = l.bracket(&l.basis_vector(0), &l.basis_vector(1)).unwrap();
        assert_eq!(v[2], ratio(1, 2));
    }
}
