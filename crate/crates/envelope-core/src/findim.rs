//! Finite-dimensional unital associative algebras: multiplication tables,
//! matrix span closure, the back-adjunction from U(li A), and the matrix
//! exponential.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::linalg::{self, Mat};
use crate::pbw::{self, AlgebraMorphismWindow, PbwElement};
use crate::scalar::{factorial, Rat};

/// Matrix realization of an algebra: basis matrices together with the
/// echelonized flat span used for exact re-expansion.
#[derive(Debug, Clone)]
pub struct MatrixPresentation {
    pub size: usize,
    pub basis_mats: Vec<Mat>,
    flat: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl MatrixPresentation {
    /// Coordinates of a matrix over the basis, if it lies in the span.
    pub fn expand(&self, m: &Mat) -> Option<Vec<Rat>> {
        let v = linalg::flatten(m);
        let (coords, res) = linalg::reduce_against(&self.flat, &self.pivots, &v);
        if res.iter().all(Rat::is_zero) {
            Some(coords)
        } else {
            None
        }
    }
}

/// A finite-dimensional unital algebra with an exact multiplication table,
/// optionally backed by a matrix presentation.
#[derive(Debug, Clone)]
pub struct FinDimQuotient {
    dim: usize,
    unit: Vec<Rat>,
    table: Vec<Vec<Vec<Rat>>>,
    names: Vec<String>,
    pub matrix: Option<MatrixPresentation>,
}

impl FinDimQuotient {
    /// Build from a multiplication table; associativity and unitality are
    /// verified on basis triples and pairs.
    pub fn from_table(
        unit: Vec<Rat>,
        table: Vec<Vec<Vec<Rat>>>,
        names: Vec<String>,
    ) -> Result<Self, Error> {
        let dim = unit.len();
        if table.len() != dim
            || table.iter().any(|r| r.len() != dim)
            || table.iter().any(|r| r.iter().any(|v| v.len() != dim))
        {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: table.len(),
            });
        }
        let a = Self {
            dim,
            unit,
            table,
            names,
            matrix: None,
        };
        for i in 0..dim {
            let bi = a.basis_element(i);
            if a.mul(&a.unit, &bi) != bi || a.mul(&bi, &a.unit) != bi {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i,
                });
            }
            for j in 0..dim {
                let bj = a.basis_element(j);
                let ij = a.mul(&bi, &bj);
                for k in 0..dim {
                    let bk = a.basis_element(k);
                    if a.mul(&ij, &bk) != a.mul(&bi, &a.mul(&bj, &bk)) {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            got: k,
                        });
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_element(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Product of coordinate vectors through the table.
    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        let t = &c * &self.table[i][j][k];
                        out[k] += t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis element i.
    pub fn left_mult_matrix(&self, i: usize) -> Mat {
        let mut m = linalg::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[k][j] = self.table[i][j][k].clone();
            }
        }
        m
    }

    pub fn left_mult_of(&self, a: &[Rat]) -> Mat {
        let mut m = linalg::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m = linalg::mat_add(&m, &linalg::mat_scale(&self.left_mult_matrix(i), c));
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// The commutator Lie algebra li A on the same basis.
    pub fn commutator_lie(&self) -> LieAlgebra {
        let names = if self.names.len() == self.dim {
            self.names.clone()
        } else {
            (0..self.dim).map(|i| format!("a{i}")).collect()
        };
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bi = self.basis_element(i);
                let bj = self.basis_element(j);
                let mut comm = self.mul(&bi, &bj);
                let ji = self.mul(&bj, &bi);
                for (a, b) in comm.iter_mut().zip(ji) {
                    *a -= b;
                }
                let terms: Vec<(usize, Rat)> = comm
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        LieAlgebra::new(names, brackets).expect("associative table gives a Lie bracket")
    }
}

/// The unital subalgebra of matrices generated by `generators`, computed
/// by span closure: multiply the current span by the generators and
/// re-echelonize until the dimension stabilizes.
pub fn span_closure(generators: &[Mat]) -> Result<(FinDimQuotient, MatrixPresentation), Error> {
    let size = generators.first().map_or(0, Vec::len);
    let n2 = size * size;
    let mut flat: Vec<Vec<Rat>> = vec![linalg::flatten(&linalg::identity(size))];
    for g in generators {
        flat.push(linalg::flatten(g));
    }
    linalg::rref(&mut flat);
    let cap = n2 + 1;
    for _ in 0..cap {
        let before = flat.len();
        let mut extended = flat.clone();
        for row in &flat {
            let m = linalg::unflatten(row, size);
            for g in generators {
                extended.push(linalg::flatten(&linalg::mat_mul(&m, g)));
            }
        }
        let pivots = linalg::rref(&mut extended);
        let grew = extended.len() > before;
        flat = extended;
        if !grew {
            let pres = MatrixPresentation {
                size,
                basis_mats: flat.iter().map(|r| linalg::unflatten(r, size)).collect(),
                flat: flat.clone(),
                pivots: pivots.clone(),
            };
            let dim = pres.basis_mats.len();
            let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
            for i in 0..dim {
                for j in 0..dim {
                    let prod = linalg::mat_mul(&pres.basis_mats[i], &pres.basis_mats[j]);
                    // closure certificate: every product re-expands exactly
                    let coords = pres
                        .expand(&prod)
                        .ok_or(Error::ClosureExceedsBound { cap })?;
                    table[i][j] = coords;
                }
            }
            let unit = pres
                .expand(&linalg::identity(size))
                .ok_or(Error::ClosureExceedsBound { cap })?;
            let names = (0..dim).map(|i| format!("a{i}")).collect();
            let mut alg = FinDimQuotient::from_table(unit, table, names)?;
            alg.matrix = Some(pres.clone());
            return Ok((alg, pres));
        }
    }
    Err(Error::ClosureExceedsBound { cap })
}

/// Representation quotient of Prop-1.7 type: the matrix algebra generated
/// by validated Lie morphism images, with the quotient map from PBW
/// windows attached.
pub struct RepQuotient {
    pub algebra: FinDimQuotient,
    pub presentation: MatrixPresentation,
    pub window_map: AlgebraMorphismWindow,
}

pub fn rep_quotient(
    l: &LieAlgebra,
    images: &[Mat],
    window_degree: usize,
) -> Result<RepQuotient, Error> {
    let window_map = pbw::extend_lie_morphism(l, images, window_degree)?;
    let (algebra, presentation) = span_closure(images)?;
    Ok(RepQuotient {
        algebra,
        presentation,
        window_map,
    })
}

/// The back-adjunction ν_A: U(li A) → A, sending a PBW monomial over the
/// basis of A to its product in A. Degree-1 monomials land on the basis
/// elements themselves.
pub struct NuBackadjunction {
    pub lie: LieAlgebra,
    algebra: FinDimQuotient,
}

pub fn nu_backadjunction(a: &FinDimQuotient) -> NuBackadjunction {
    NuBackadjunction {
        lie: a.commutator_lie(),
        algebra: a.clone(),
    }
}

impl NuBackadjunction {
    pub fn apply(&self, u: &PbwElement) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.algebra.dim()];
        for (m, c) in u.terms() {
            let mut acc = self.algebra.unit().to_vec();
            for &i in &m.0 {
                acc = self.algebra.mul(&acc, &self.algebra.basis_element(i));
            }
            for (o, v) in out.iter_mut().zip(acc) {
                *o += v * c;
            }
        }
        out
    }
}

/// Result of the matrix exponential: exact rational coordinates when the
/// argument is nilpotent, floating coordinates otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixExpResult {
    Exact(Vec<Rat>),
    Approx(Vec<f64>),
}

const EXP_TOLERANCE: f64 = 1e-12;

/// Exponential of an algebra element given in basis coordinates over a
/// matrix presentation. Nilpotent arguments terminate exactly; otherwise
/// scaling-and-squaring with entrywise tolerance 1e-12 on re-expansion.
pub fn matrix_exp(pres: &MatrixPresentation, coords: &[Rat]) -> Result<MatrixExpResult, Error> {
    let size = pres.size;
    let mut m = linalg::zeros(size, size);
    for (c, b) in coords.iter().zip(&pres.basis_mats) {
        if !c.is_zero() {
            m = linalg::mat_add(&m, &linalg::mat_scale(b, c));
        }
    }
    // nilpotency: some power up to the matrix size vanishes
    let mut power = linalg::identity(size);
    let mut powers = vec![power.clone()];
    let mut nilpotent_at = None;
    for k in 1..=size {
        power = linalg::mat_mul(&power, &m);
        if linalg::mat_is_zero(&power) {
            nilpotent_at = Some(k);
            break;
        }
        powers.push(power.clone());
    }
    if let Some(k) = nilpotent_at {
        let mut sum = linalg::zeros(size, size);
        for (j, p) in powers.iter().enumerate().take(k) {
            sum = linalg::mat_add(&sum, &linalg::mat_scale(p, &factorial(j as u64).recip()));
        }
        let out = pres.expand(&sum).ok_or(Error::ResultOutsideAlgebra)?;
        return Ok(MatrixExpResult::Exact(out));
    }
    // floating path
    let mf: Vec<Vec<f64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let norm = mf
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |a, &b| if fabs(b) > a { fabs(b) } else { a });
    let mut s = 0u32;
    let mut scale = 1.0f64;
    while norm * scale > 0.5 {
        s += 1;
        scale *= 0.5;
    }
    let scaled: Vec<Vec<f64>> = mf
        .iter()
        .map(|r| r.iter().map(|x| x * scale).collect())
        .collect();
    let mut result = fidentity(size);
    let mut term = fidentity(size);
    for j in 1..64 {
        term = fmat_mul(&term, &scaled);
        for r in term.iter_mut() {
            for x in r.iter_mut() {
                *x /= j as f64;
            }
        }
        result = fmat_add(&result, &term);
        if fmax_abs(&term) < 1e-22 {
            break;
        }
    }
    for _ in 0..s {
        result = fmat_mul(&result, &result);
    }
    // re-expand in the basis with float elimination against the exact RREF
    let flatf: Vec<Vec<f64>> = pres
        .flat
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let mut residual: Vec<f64> = result.iter().flat_map(|r| r.iter().copied()).collect();
    let mut out = Vec::with_capacity(flatf.len());
    for (row, &p) in flatf.iter().zip(&pres.pivots) {
        let c = residual[p];
        if c != 0.0 {
            for (x, y) in residual.iter_mut().zip(row) {
                *x -= c * y;
            }
        }
        out.push(c);
    }
    if residual.iter().any(|&x| fabs(x) > EXP_TOLERANCE) {
        return Err(Error::ResultOutsideAlgebra);
    }
    Ok(MatrixExpResult::Approx(out))
}

fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

fn fidentity(n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for (i, r) in m.iter_mut().enumerate() {
        r[i] = 1.0;
    }
    m
}

fn fmat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

fn fmat_add(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

fn fmax_abs(a: &[Vec<f64>]) -> f64 {
    a.iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, &x| if fabs(x) > m { fabs(x) } else { m })
}
