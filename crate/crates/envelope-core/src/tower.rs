//! Finite inverse systems of enveloping-algebra stages: the computable
//! shadow of the projective limit U(g) = lim U(g/I).

use alloc::vec::Vec;

use crate::error::Error;
use crate::lie::{self, LieAlgebra, Subspace, Vector};
use crate::linalg::{self, Mat};
use crate::pbw::{self, AlgebraMorphismWindow, PbwElement, PbwMap};
use crate::scalar::Rat;

/// A decreasing chain of ideals J_1 ⊇ J_2 ⊇ ... with the stage algebras
/// g/J_k, the stage maps U(g) → U(g/J_k), and the bonding morphisms
/// U(g/J_{k+1}) → U(g/J_k).
pub struct Tower {
    pub base: LieAlgebra,
    pub ideals: Vec<Subspace>,
    pub stages: Vec<LieAlgebra>,
    pub projections: Vec<Mat>,
    pub stage_maps: Vec<PbwMap>,
    pub bondings: Vec<PbwMap>,
}

/// One element per stage; compatible iff bonding maps carry each entry
/// onto the previous one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub entries: Vec<PbwElement>,
}

pub fn make_tower(base: &LieAlgebra, chain: &[Subspace]) -> Result<Tower, Error> {
    for (k, j) in chain.iter().enumerate() {
        if !lie::is_ideal(base, j)? {
            return Err(Error::NotAnIdeal);
        }
        if k > 0 && !chain[k - 1].contains_subspace(j) {
            return Err(Error::ChainNotDecreasing { stage: k });
        }
    }
    let mut stages = Vec::new();
    let mut projections = Vec::new();
    let mut stage_maps = Vec::new();
    for j in chain {
        let (q, p, map) = pbw::functor_u_on_quotient(base, j)?;
        stages.push(q);
        projections.push(p);
        stage_maps.push(map);
    }
    // bonding k: U(g/J_{k+1}) → U(g/J_k). A generator of stage k+1 is the
    // class of the ambient basis vector at a non-pivot index of J_{k+1};
    // its image is the class of that same vector at stage k.
    let mut bondings = Vec::new();
    for k in 0..chain.len().saturating_sub(1) {
        let free: Vec<usize> = (0..base.dim())
            .filter(|i| !chain[k + 1].pivots().contains(i))
            .collect();
        let qdim = stages[k].dim();
        let gen_images: Vec<PbwElement> = free
            .iter()
            .map(|&i| {
                let coords: Vector = (0..qdim).map(|r| projections[k][r][i].clone()).collect();
                PbwElement::from_vector(&coords)
            })
            .collect();
        bondings.push(PbwMap {
            target: stages[k].clone(),
            gen_images,
        });
    }
    Ok(Tower {
        base: base.clone(),
        ideals: chain.to_vec(),
        stages,
        projections,
        stage_maps,
        bondings,
    })
}

impl Tower {
    pub fn num_stages(&self) -> usize {
        self.stages.len()
    }

    /// The thread of images of an element of U(g) at every stage.
    pub fn project_thread(&self, u: &PbwElement) -> Thread {
        Thread {
            entries: self.stage_maps.iter().map(|m| m.apply(u)).collect(),
        }
    }

    /// Bonding compatibility of all entries, exactly.
    pub fn check_thread(&self, t: &Thread) -> Result<bool, Error> {
        if t.entries.len() != self.num_stages() {
            return Err(Error::StageMismatch);
        }
        for (k, b) in self.bondings.iter().enumerate() {
            if b.apply(&t.entries[k + 1]) != t.entries[k] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Stage-wise product; morphisms preserve products, so the result of
    /// multiplying threads is again a thread.
    pub fn thread_mul(&self, a: &Thread, b: &Thread) -> Result<Thread, Error> {
        if a.entries.len() != self.num_stages() || b.entries.len() != self.num_stages() {
            return Err(Error::StageMismatch);
        }
        let entries = self
            .stages
            .iter()
            .zip(a.entries.iter().zip(&b.entries))
            .map(|(l, (x, y))| pbw::mul(l, x, y))
            .collect();
        Ok(Thread { entries })
    }

    /// Bonding composition identities U(p_13) = U(p_12) ∘ U(p_23) checked
    /// on the degree-≤ d window of the base.
    pub fn check_bonding_composition(&self, d: usize) -> bool {
        let window = pbw::window_monomials(self.base.dim(), d);
        for m in &window {
            let mut u = PbwElement::zero();
            u.add_term(m.clone(), crate::scalar::one());
            let thread = self.project_thread(&u);
            match self.check_thread(&thread) {
                Ok(true) => {}
                _ => return false,
            }
        }
        true
    }
}

/// Factor a Lie morphism (given by matrix images of the base generators)
/// through the first stage whose ideal sits inside its kernel, and extend
/// over that stage's enveloping algebra.
pub struct Factorization {
    pub stage: usize,
    pub extension: AlgebraMorphismWindow,
}

pub fn factor_through_tower(
    tower: &Tower,
    images: &[Mat],
    degree: usize,
) -> Result<Factorization, Error> {
    // validates the bracket relations
    let direct = pbw::extend_lie_morphism(&tower.base, images, degree)?;
    let n = tower.base.dim();
    // kernel of the linear map v ↦ Σ v_i X_i
    let flat: Vec<Vec<Rat>> = images.iter().map(linalg::flatten).collect();
    let ncoords = flat.first().map_or(0, Vec::len);
    let mut rows = Vec::with_capacity(ncoords);
    for r in 0..ncoords {
        rows.push((0..n).map(|i| flat[i][r].clone()).collect::<Vec<_>>());
    }
    let kernel_vs = linalg::nullspace(&rows, n);
    let kernel = Subspace::from_vectors(n, &kernel_vs)?;
    let stage = tower
        .ideals
        .iter()
        .position(|j| kernel.contains_subspace(j))
        .ok_or(Error::NoStageContained)?;
    // images of the stage generators: X at the ambient lift of each
    // non-pivot index
    let free: Vec<usize> = (0..n)
        .filter(|i| !tower.ideals[stage].pivots().contains(i))
        .collect();
    let stage_images: Vec<Mat> = free.iter().map(|&i| images[i].clone()).collect();
    let extension = pbw::extend_lie_morphism(&tower.stages[stage], &stage_images, degree)?;
    // the composite through the stage agrees with the direct extension
    let window = pbw::window_monomials(n, degree);
    for m in &window {
        let mut u = PbwElement::zero();
        u.add_term(m.clone(), crate::scalar::one());
        let through = extension.apply(&tower.stage_maps[stage].apply(&u));
        if through != direct.apply(&u) {
            return Err(Error::ImagesNotALieMorphism { i: 0, j: 0 });
        }
    }
    Ok(Factorization { stage, extension })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::pbw::PbwMonomial;
    use crate::scalar::rat;

    fn heis_tower() -> Tower {
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        make_tower(&h, &[center, Subspace::zero(3)]).unwrap()
    }

    fn e(n: usize, i: usize, j: usize) -> Mat {
        let mut m = linalg::zeros(n, n);
        m[i][j] = rat(1);
        m
    }

    #[test]
    fn heisenberg_tower_shape() {
        let t = heis_tower();
        assert_eq!(t.num_stages(), 2);
        assert_eq!(t.stages[0].dim(), 2);
        assert_eq!(t.stages[1].dim(), 3);
        assert!(t.check_bonding_composition(3));
    }

    #[test]
    fn constant_chain_bonding_is_identity() {
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let t = make_tower(&h, &[center.clone(), center]).unwrap();
        let u = pbw::straighten(&h, &[1, 0]);
        let thread = t.project_thread(&u);
        assert_eq!(thread.entries[0], thread.entries[1]);
        assert!(t.check_thread(&thread).unwrap());
    }

    #[test]
    fn single_stage_tower() {
        let h = corpus::heisenberg();
        let t = make_tower(&h, &[Subspace::zero(3)]).unwrap();
        assert!(t.bondings.is_empty());
        assert!(t
            .check_thread(&t.project_thread(&PbwElement::generator(0)))
            .unwrap());
    }

    #[test]
    fn increasing_chain_rejected() {
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        assert!(matches!(
            make_tower(&h, &[Subspace::zero(3), center]),
            Err(Error::ChainNotDecreasing { stage: 1 })
        ));
    }

    #[test]
    fn thread_compatibility_and_products() {
        let t = heis_tower();
        let h = &t.base;
        let xy = pbw::mul(h, &PbwElement::generator(0), &PbwElement::generator(1));
        let thread = t.project_thread(&xy);
        assert!(t.check_thread(&thread).unwrap());
        // perturb the finer stage by +1: no longer compatible
        let mut bad = thread.clone();
        bad.entries[1] = bad.entries[1].add(&PbwElement::one());
        assert!(!t.check_thread(&bad).unwrap());
        // units squared stay the thread of units
        let units = Thread {
            entries: alloc::vec![PbwElement::one(); 2],
        };
        let sq = t.thread_mul(&units, &units).unwrap();
        assert_eq!(sq, units);
        assert!(t.check_thread(&sq).unwrap());
        // products of threads are threads
        let t2 = t.thread_mul(&thread, &thread).unwrap();
        assert!(t.check_thread(&t2).unwrap());
    }

    #[test]
    fn factor_abelianized_rep_at_center_stage() {
        let t = heis_tower();
        // z ↦ 0: factors through g/span(z); use commuting images
        let images = alloc::vec![e(2, 0, 1), linalg::zeros(2, 2), linalg::zeros(2, 2)];
        let f = factor_through_tower(&t, &images, 3).unwrap();
        assert_eq!(f.stage, 0);
    }

    #[test]
    fn factor_zero_rep_at_largest_stage() {
        let t = heis_tower();
        let images = alloc::vec![linalg::zeros(2, 2); 3];
        let f = factor_through_tower(&t, &images, 3).unwrap();
        assert_eq!(f.stage, 0);
    }

    #[test]
    fn faithful_rep_factors_at_zero_stage_or_fails() {
        let t = heis_tower();
        let images = alloc::vec![e(3, 0, 1), e(3, 1, 2), e(3, 0, 2)];
        let f = factor_through_tower(&t, &images, 3).unwrap();
        assert_eq!(f.stage, 1);
        // a tower whose smallest ideal is still span(z) cannot host it
        let h = corpus::heisenberg();
        let center = Subspace::from_vectors(3, &[h.basis_vector(2)]).unwrap();
        let small = make_tower(&h, &[center]).unwrap();
        assert!(matches!(
            factor_through_tower(&small, &images, 3),
            Err(Error::NoStageContained)
        ));
    }

    #[test]
    fn thread_mul_respects_straightening() {
        let t = heis_tower();
        let x = t.project_thread(&PbwElement::generator(0));
        let y = t.project_thread(&PbwElement::generator(1));
        let yx = t.thread_mul(&y, &x).unwrap();
        // at the full stage, y·x = x·y - z
        let mut expect = PbwElement::zero();
        expect.add_term(PbwMonomial(alloc::vec![0, 1]), rat(1));
        expect.add_term(PbwMonomial::generator(2), rat(-1));
        assert_eq!(yx.entries[1], expect);
        assert!(t.check_thread(&yx).unwrap());
    }
}
