//! The bundled test algebras used throughout the verification suites.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::lie::LieAlgebra;
use crate::scalar::rat;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| String::from(*s)).collect()
}

/// The 3-dimensional Heisenberg algebra: [x, y] = z.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::new(names(&["x", "y", "z"]), vec![((0, 1), vec![(2, rat(1))])])
        .unwrap()
        .with_weights(vec![1, 1, 2])
        .unwrap()
}

/// sl2 in the basis order e < f < h: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        names(&["e", "f", "h"]),
        vec![
            ((0, 1), vec![(2, rat(1))]),
            ((0, 2), vec![(0, rat(-2))]),
            ((1, 2), vec![(1, rat(2))]),
        ],
    )
    .unwrap()
}

/// The 2-dimensional solvable algebra: [x, y] = y.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::new(names(&["x", "y"]), vec![((0, 1), vec![(1, rat(1))])]).unwrap()
}

/// Abelian algebra of dimension d with basis x1..xd (or just x for d = 1).
pub fn abelian(d: usize) -> LieAlgebra {
    let ns: Vec<String> = if d == 1 {
        vec![String::from("x")]
    } else {
        (1..=d).map(|i| alloc::format!("x{i}")).collect()
    };
    let mut l = LieAlgebra::abelian(ns);
    l = l.with_weights(vec![1; d]).unwrap();
    l
}

/// Free nilpotent Lie algebra of class 3 on generators x, y.
/// Basis x, y, c = [x,y], d1 = [x,c], d2 = [y,c]; all weight-4 brackets zero.
pub fn free_nilpotent_class3() -> LieAlgebra {
    LieAlgebra::new(
        names(&["x", "y", "c", "d1", "d2"]),
        vec![
            ((0, 1), vec![(2, rat(1))]),
            ((0, 2), vec![(3, rat(1))]),
            ((1, 2), vec![(4, rat(1))]),
        ],
    )
    .unwrap()
    .with_weights(vec![1, 1, 2, 3, 3])
    .unwrap()
}

/// Free nilpotent Lie algebra of class 4 on generators x, y, in the Hall
/// basis x, y, c = [x,y], d1 = [x,c], d2 = [y,c],
/// e1 = [x,d1], e2 = [y,d1] = [x,d2], e3 = [y,d2].
pub fn free_nilpotent_class4() -> LieAlgebra {
    LieAlgebra::new(
        names(&["x", "y", "c", "d1", "d2", "e1", "e2", "e3"]),
        vec![
            ((0, 1), vec![(2, rat(1))]),
            ((0, 2), vec![(3, rat(1))]),
            ((1, 2), vec![(4, rat(1))]),
            ((0, 3), vec![(5, rat(1))]),
            ((1, 3), vec![(6, rat(1))]),
            ((0, 4), vec![(6, rat(1))]),
            ((1, 4), vec![(7, rat(1))]),
        ],
    )
    .unwrap()
    .with_weights(vec![1, 1, 2, 3, 3, 4, 4, 4])
    .unwrap()
}

/// Every bundled algebra, for corpus-wide property sweeps.
pub fn all() -> Vec<LieAlgebra> {
    vec![
        abelian(1),
        abelian(2),
        abelian(3),
        heisenberg(),
        sl2(),
        solvable2(),
        free_nilpotent_class3(),
        free_nilpotent_class4(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_satisfies_jacobi() {
        for l in all() {
            assert!(l.check_jacobi().passed());
        }
    }

    #[test]
    fn free_nilpotent_hall_relation() {
        // [x,[y,c]] = [y,[x,c]] in class 4 (both equal e2)
        let l = free_nilpotent_class4();
        let x = l.basis_vector(0);
        let y = l.basis_vector(1);
        let c = l.basis_vector(2);
        let lhs = l.bracket(&x, &l.bracket(&y, &c).unwrap()).unwrap();
        let rhs = l.bracket(&y, &l.bracket(&x, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, l.basis_vector(6));
    }
}
