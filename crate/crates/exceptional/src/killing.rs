//! Killing forms: closed forms B₄, B₆, B₇, B₈ on the octonionic algebras,
//! the invariant inner products ( , )₇ and ( , )₈ on the quaternionic
//! algebras, and the proportionality constants between them and the traces.

use crate::algebras::{e6, e7_h, e8_h};
use crate::freudenthal::{E7Op, Freudenthal};
use crate::jordan::{JordanAlgebra, Kind};
use crate::lie::{proportionality, Ambient, E8Elem, LieError};
use crate::linalg::{Mat, SpMat};
use crate::scalar::{Complex, Rational};

/// B₄(δ, δ') = 3 tr(δδ') on Der 𝔍ᶜ.
pub fn b4(d1: &SpMat, d2: &SpMat) -> Complex {
    &d1.trace_product(d2) * &Complex::int(3)
}

/// B₆(φ, φ') = (4/3)B₄(δ, δ') + 12(T, T') where φ = δ + T̃, T = φ(E).
pub fn b6(j: &JordanAlgebra, p1: &SpMat, p2: &SpMat) -> Result<Complex, LieError> {
    for p in [p1, p2] {
        e6(j.kind).coords(p)?;
    }
    let (d1, t1) = j.split_e6(p1);
    let (d2, t2) = j.split_e6(p2);
    Ok(&(&b4(&d1, &d2) * &Complex::frac(4, 3)) + &(&j.inner(&t1, &t2) * &Complex::int(12)))
}

/// B₇ = (3/2)B₆(φ, φ') + 36(A, B') + 36(A', B) + 24νν'.
pub fn b7(f: &Freudenthal, x: &E7Op, y: &E7Op) -> Result<Complex, LieError> {
    let j = f.j;
    let cross = &j.inner(&x.a, &y.b) + &j.inner(&y.a, &x.b);
    Ok(&(&(&b6(j, &x.phi, &y.phi)? * &Complex::frac(3, 2)) + &(&cross * &Complex::int(36))) + &(&(&x.nu * &y.nu) * &Complex::int(24)))
}

/// B₈ = (5/3)B₇(Φ, Φ') + 15{Q, P'} − 15{P, Q'} + 120rr' + 60ts' + 60st'.
pub fn b8(f: &Freudenthal, x: &E8Elem, y: &E8Elem) -> Result<Complex, LieError> {
    let skew = &f.skew(&x.q, &y.p) - &f.skew(&x.p, &y.q);
    let scalars = &(&(&x.r * &y.r) * &Complex::int(2)) + &(&(&x.t * &y.s) + &(&x.s * &y.t));
    Ok(&(&(&b7(f, &x.phi, &y.phi)? * &Complex::frac(5, 3)) + &(&skew * &Complex::int(15))) + &(&scalars * &Complex::int(60)))
}

/// (φ₁, φ₂)₆ := (1/10)B₇,ℍ(Φ(φ₁, 0, 0, 0), Φ(φ₂, 0, 0, 0)).
pub fn inner6_h(p1: &SpMat, p2: &SpMat) -> Result<Complex, LieError> {
    let e7 = e7_h();
    let jd = e7.amb.f.jdim();
    let op = |p: &SpMat| E7Op { phi: p.clone(), ..E7Op::zero(jd) };
    let (c1, c2) = (e7.coords(&op(p1))?, e7.coords(&op(p2))?);
    Ok(&e7.lie.killing(&c1, &c2) * &Complex::frac(1, 10))
}

/// (Φ₁, Φ₂)₇ = −2(φ₁, φ₂)₆ − 4(A₁, B₂) − 4(A₂, B₁) − (8/3)ν₁ν₂.
pub fn inner7_h(x: &E7Op, y: &E7Op) -> Result<Complex, LieError> {
    let j = JordanAlgebra::get(Kind::Quaternionic);
    let phi = &inner6_h(&x.phi, &y.phi)? * &Complex::int(-2);
    let cross = &(&j.inner(&x.a, &y.b) + &j.inner(&y.a, &x.b)) * &Complex::int(-4);
    Ok(&(&phi + &cross) + &(&(&x.nu * &y.nu) * &Complex::frac(-8, 3)))
}

/// (R₁, R₂)₈ = (Φ₁, Φ₂)₇ − {Q₁, P₂} + {P₁, Q₂} − 8r₁r₂ − 4t₁s₂ − 4s₁t₂.
pub fn inner8_h(x: &E8Elem, y: &E8Elem) -> Result<Complex, LieError> {
    let f = &e8_h().amb.e7.f;
    let skew = &f.skew(&x.p, &y.q) - &f.skew(&x.q, &y.p);
    let scalars = &(&(&x.r * &y.r) * &Complex::int(-8)) + &(&(&(&x.t * &y.s) + &(&x.s * &y.t)) * &Complex::int(-4));
    Ok(&(&inner7_h(&x.phi, &y.phi)? + &skew) + &scalars)
}

/// Gram matrix of a bilinear form on a list of elements.
pub fn gram<T>(elems: &[T], form: impl Fn(&T, &T) -> Result<Complex, LieError>) -> Result<Mat, LieError> {
    let n = elems.len();
    let mut g = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = form(&elems[i], &elems[j])?;
            g.set(j, i, v.clone());
            g.set(i, j, v);
        }
    }
    Ok(g)
}

/// Outcome of comparing a trace form with an invariant form over a whole basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proportionality {
    pub constant: Option<Rational>,
    pub first_violation: Option<(usize, usize)>,
}

fn compare(killing: &Mat, inner: &Mat) -> Proportionality {
    match proportionality(killing, inner) {
        Ok(k) => Proportionality { constant: Some(k), first_violation: None },
        Err(ij) => Proportionality { constant: None, first_violation: Some(ij) },
    }
}

/// k with B₇,ℍ = k( , )₇ on all pairs of the 66-dim basis.
pub fn constant_e7_h() -> Result<Proportionality, LieError> {
    let e7 = e7_h();
    let elems: Vec<E7Op> = (0..e7.dim()).map(|k| e7.basis_element(k)).collect();
    Ok(compare(&e7.lie.killing_gram(), &gram(&elems, inner7_h)?))
}

/// k with B₈,ℍ = k( , )₈ on all pairs of the 133-dim basis.
pub fn constant_e8_h() -> Result<Proportionality, LieError> {
    let e8 = e8_h();
    let elems: Vec<E8Elem> = (0..e8.dim()).map(|k| e8.basis_element(k)).collect();
    Ok(compare(&e8.lie.killing_gram(), &gram(&elems, inner8_h)?))
}

/// Φ(0, 0, 0, 1) in (𝔢₇,ℍ)ᶜ.
pub fn nu_generator(jdim: usize) -> E7Op {
    E7Op { nu: Complex::ONE, ..E7Op::zero(jdim) }
}

/// (tr(ad x)², (x, x)₇) for x ∈ (𝔢₇,ℍ)ᶜ.
pub fn e7_h_self(x: &E7Op) -> Result<(Complex, Complex), LieError> {
    let e7 = e7_h();
    let c = e7.coords(x)?;
    Ok((e7.lie.killing(&c, &c), inner7_h(x, x)?))
}

/// (tr(ad x)², (x, x)₈) for x ∈ (𝔢₈,ℍ)ᶜ.
pub fn e8_h_self(x: &E8Elem) -> Result<(Complex, Complex), LieError> {
    let e8 = e8_h();
    let c = e8.coords(x)?;
    Ok((e8.lie.killing(&c, &c), inner8_h(x, x)?))
}

/// The ratio between the intrinsic trace form of a subalgebra and a closed
/// form on the ambient algebra, when it is a single constant.
pub fn restriction_ratio<A: Ambient>(
    sub: &crate::lie::Subalgebra<A>,
    closed: impl Fn(&A::Elem, &A::Elem) -> Result<Complex, LieError>,
) -> Result<Proportionality, LieError> {
    let elems: Vec<A::Elem> = (0..sub.dim()).map(|k| sub.basis_element(k)).collect();
    Ok(compare(&sub.lie.killing_gram(), &gram(&elems, closed)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::e8;
    use crate::linalg::random_svec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn b8_of_the_grading_element_counts_degrees() {
        // ad 1~ has eigenvalues ±1 on the two 56-dim pieces and ±2 on s, t.
        let f = &e8(Kind::Octonionic).e7.f;
        let h = E8Elem::r_tilde(f.jdim(), Complex::ONE);
        assert_eq!(b8(f, &h, &h).unwrap(), Complex::int(56 + 56 + 4 + 4));
    }

    #[test]
    fn closed_forms_are_symmetric() {
        let e8 = e8(Kind::Octonionic);
        let f = &e8.e7.f;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..3 {
            let x = e8.element(&random_svec(&mut rng, e8.dim(), 0.02));
            let y = e8.element(&random_svec(&mut rng, e8.dim(), 0.02));
            assert_eq!(b8(f, &x, &y).unwrap(), b8(f, &y, &x).unwrap());
        }
    }

    #[test]
    fn quaternionic_e7_constants() {
        let (tr, inner) = e7_h_self(&nu_generator(15)).unwrap();
        assert_eq!(tr, Complex::frac(40, 3));
        assert_eq!(inner, Complex::frac(-8, 3));
        assert_eq!(constant_e7_h().unwrap().constant, Some(Rational::int(-5)));
    }

    #[test]
    fn gram_is_symmetric_and_reports_errors() {
        let g = gram(&[1i64, 2, 3], |a, b| Ok(Complex::int(a * 10 + b))).unwrap();
        assert_eq!(*g.get(0, 2), Complex::int(13));
        assert_eq!(*g.get(2, 0), Complex::int(13));
        let e = gram(&[1i64], |_, _| Err(LieError::NotInSpan("x".into())));
        assert!(e.is_err());
    }
}
