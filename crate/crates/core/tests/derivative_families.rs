//! Pinned behavior of the blockwise derivative across the families. The
//! one-dimensional families that admit no finite-rank operator (standard,
//! Radon, exceptional) transfer along the derivative in both directions;
//! rank-one mixed instances do not (their derivative breaks the central
//! character identity), and a dim-0 quadruple can have a dim-1 derivative.

use grasshom::chars::{segment, FieldSpec, GLChar, Rat};
use grasshom::homspace::{classify, Quadruple};

#[test]
fn rank_one_derivative_breaks_the_central_constraint() {
    let f = FieldSpec::real();
    // Rank-one instance with every block of size >= 2: k=6, i=2, j=4.
    let x = Quadruple::new(
        f.clone(),
        segment(&f, 4, 6).unwrap(),
        segment(&f, 0, 4).unwrap(),
        segment(&f, 0, 2).unwrap(),
        segment(&f, 2, 6).unwrap(),
    )
    .unwrap();
    assert_eq!(classify(&x).dim(), 1);
    let d = x.derivative().unwrap();
    assert!(!d.central_constraint());
    assert_eq!(classify(&d).dim(), 0);
}

#[test]
fn a_dim_zero_quadruple_can_have_a_dim_one_derivative() {
    // The blockwise extension of a rank-one instance: central fails at the
    // top, while the derivative is the rank-one member itself.
    let f = FieldSpec::real();
    let y = Quadruple::new(
        f.clone(),
        GLChar::new(2, f.nu(Rat::from_integer(2))),
        GLChar::new(3, f.nu(Rat::new(1, 2))),
        GLChar::new(2, f.trivial_char()),
        GLChar::new(3, f.nu(Rat::new(3, 2))),
    )
    .unwrap();
    assert!(!y.central_constraint());
    assert_eq!(classify(&y).dim(), 0);
    let d = y.derivative().unwrap();
    assert!(d.central_constraint());
    assert_eq!(classify(&d).dim(), 1);
}
