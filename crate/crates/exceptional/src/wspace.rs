//! The 𝔚-locus of 𝔢₈: the operator R × R, the thirteen conditions that
//! characterize R × R = 0 on the quaternionic algebra, and exp(ad Θ) applied
//! to 1₋ for ad-nilpotent Θ.

use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

use crate::algebras::{e7_h, e8, e8_eps, e8_h};
use crate::freudenthal::{E7Op, FVec, Freudenthal};
use crate::jordan::Kind;
use crate::killing::b8;
use crate::lie::{Ambient, E8Elem, E8Lie, LieError};
use crate::linalg::{random_svec, small_complex, Mat, SVec, SpMat};
use crate::scalar::Complex;

#[derive(Debug, Error)]
pub enum WError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("ad(G)^n(target) does not vanish for n <= {0}")]
    NotNilpotent(usize),
}

/// Which algebra R × R lives on, and with which Killing normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// (𝔢₈,ℍ)ᶜ with (1/18)B₈,ℍ, B₈,ℍ its own trace form.
    Quaternionic,
    /// (𝔢₈ᶜ)^{ε₁,ε₂} with (1/30)B₈, B₈ the closed form of 𝔢₈ᶜ.
    EpsilonFixed,
}

impl Normalization {
    pub fn label(self) -> &'static str {
        match self {
            Normalization::Quaternionic => "e8H, 1/18 B8H",
            Normalization::EpsilonFixed => "e8^eps, 1/30 B8",
        }
    }

    fn coefficient(self) -> Complex {
        match self {
            Normalization::Quaternionic => Complex::frac(1, 18),
            Normalization::EpsilonFixed => Complex::frac(1, 30),
        }
    }

    fn dim(self) -> usize {
        match self {
            Normalization::Quaternionic => e8_h().dim(),
            Normalization::EpsilonFixed => e8_eps().dim(),
        }
    }

    fn ad(self, r: &SVec) -> SpMat {
        match self {
            Normalization::Quaternionic => e8_h().lie.ad(r),
            Normalization::EpsilonFixed => e8_eps().lie.ad(r),
        }
    }

    /// B(R, b_k) for every basis element b_k.
    fn killing_row(self, r: &SVec) -> Result<Vec<Complex>, LieError> {
        match self {
            Normalization::Quaternionic => {
                let g = quaternionic_gram();
                Ok((0..g.cols).map(|k| r.iter().map(|(i, a)| a * g.get(*i, k)).sum()).collect())
            }
            Normalization::EpsilonFixed => {
                let sub = e8_eps();
                let f = &e8(Kind::Octonionic).e7.f;
                let x = sub.element(r);
                (0..sub.dim()).map(|k| b8(f, &x, &sub.basis_element(k))).collect()
            }
        }
    }

    /// Subalgebra coordinates of an ambient element.
    pub fn coords(self, x: &E8Elem) -> Result<SVec, LieError> {
        match self {
            Normalization::Quaternionic => e8_h().coords(x),
            Normalization::EpsilonFixed => e8_eps().coords(x),
        }
    }

    pub fn jdim(self) -> usize {
        match self {
            Normalization::Quaternionic => e8_h().amb.jdim(),
            Normalization::EpsilonFixed => e8_eps().amb.jdim(),
        }
    }
}

fn quaternionic_gram() -> &'static Mat {
    static G: OnceLock<Mat> = OnceLock::new();
    G.get_or_init(|| e8_h().lie.killing_gram())
}

/// The matrix of R × R in subalgebra coordinates: ad(R)² + c·R·B(R, ·).
pub fn cross_matrix(norm: Normalization, r: &SVec) -> Result<SpMat, LieError> {
    let ad = norm.ad(r);
    let row = norm.killing_row(r)?;
    let c = norm.coefficient();
    let n = norm.dim();
    let rank_one = SpMat::from_triples(
        n,
        n,
        r.iter().flat_map(|(i, a)| {
            let ca = a * &c;
            row.iter().enumerate().filter(|(_, b)| !b.is_zero()).map(move |(k, b)| (*i, k, &ca * b)).collect::<Vec<_>>()
        }),
    );
    Ok(ad.mul(&ad).add(&rank_one))
}

/// (R × R)R₁.
pub fn cross_apply(norm: Normalization, r: &SVec, r1: &SVec) -> Result<SVec, LieError> {
    Ok(cross_matrix(norm, r)?.apply(r1))
}

/// The first basis element not annihilated by R × R, if any.
pub fn first_survivor(norm: Normalization, r: &SVec) -> Result<Option<usize>, LieError> {
    let m = cross_matrix(norm, r)?;
    Ok((0..m.cols).find(|k| !m.column(*k).is_zero()))
}

/// R ∈ 𝔚: R ≠ 0 and R × R annihilates the whole algebra.
pub fn in_w(norm: Normalization, r: &SVec) -> Result<bool, LieError> {
    Ok(!r.is_zero() && first_survivor(norm, r)?.is_none())
}

/// dim [𝔤, R], the tangent dimension of the adjoint orbit through R.
pub fn orbit_dim(norm: Normalization, r: &SVec) -> usize {
    norm.ad(r).to_dense().rank()
}

/// 1₋ = (0, 0, 0, 0, 0, 1).
pub fn one_lower(jdim: usize) -> E8Elem {
    E8Elem::t_lower(jdim, Complex::ONE)
}

/// 1⁻ = (0, 0, 0, 0, 1, 0).
pub fn one_upper(jdim: usize) -> E8Elem {
    E8Elem::s_upper(jdim, Complex::ONE)
}

/// 1̇⁻ = (0, 1̇, 0, 0, 0, 0).
pub fn one_dot_upper(jdim: usize) -> E8Elem {
    E8Elem::p_upper(jdim, FVec::one_dot())
}

/// Σ (1/n!) ad(G)ⁿ(target), which must terminate by n = max_power.
pub fn exp_ad_truncated(amb: &E8Lie, g: &E8Elem, target: &E8Elem, max_power: usize) -> Result<E8Elem, WError> {
    let pg = amb.prepare(g);
    let mut term = target.clone();
    let mut sum = target.clone();
    for n in 1..=max_power + 1 {
        term = amb.bracket_prepared(&pg, &amb.prepare(&term)).scale(&Complex::frac(1, n as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        if n > max_power {
            break;
        }
        sum = sum.add(&term);
    }
    Err(WError::NotNilpotent(max_power))
}

/// ad(G)ⁿ(target).
pub fn ad_power(amb: &E8Lie, g: &E8Elem, target: &E8Elem, n: usize) -> E8Elem {
    let pg = amb.prepare(g);
    (0..n).fold(target.clone(), |x, _| amb.bracket_prepared(&pg, &amb.prepare(&x)))
}

/// The closed form of exp(ad(0, P₁, 0, 0, s₁, 0))1₋:
/// (−½P₁×P₁, −s₁P₁ + ⅙(P₁×P₁)P₁, −P₁, s₁, −s₁² + (1/96){P₁, (P₁×P₁)P₁}, 1).
pub fn exp_closed_form(f: &Freudenthal, p1: &FVec, s1: &Complex) -> E8Elem {
    let pp = f.cross(p1, p1);
    let ppp = f.apply(&pp, p1);
    E8Elem {
        phi: pp.scale(&Complex::frac(-1, 2)),
        p: p1.scale(&-s1).axpy(&Complex::frac(1, 6), &ppp),
        q: p1.neg(),
        r: s1.clone(),
        s: &-&(s1 * s1) + &(&f.skew(p1, &ppp) * &Complex::frac(1, 96)),
        t: Complex::ONE,
    }
}

/// Outcome of the thirteen conditions; universally quantified ones are
/// checked against every basis element of (𝔢₇,ℍ)ᶜ and (𝔓_ℍ)ᶜ.
pub fn w_conditions(x: &E8Elem) -> Result<[bool; 13], LieError> {
    let e7 = e7_h();
    let f = &e7.amb.f;
    let (phi, p, q, r, s, t) = (&x.phi, &x.p, &x.q, &x.r, &x.s, &x.t);
    let int = Complex::int;
    let app = |op: &E7Op, v: &FVec| f.apply(op, v);
    let st = s * t;
    let r2 = r * r;
    let mut ok = [true; 13];

    ok[0] = phi.scale(&(&int(2) * s)).sub(&f.cross(p, p)).is_zero();
    ok[1] = phi.scale(&(&int(2) * t)).add(&f.cross(q, q)).is_zero();
    ok[2] = phi.scale(&(&int(2) * r)).add(&f.cross(p, q)).is_zero();
    ok[3] = app(phi, p).axpy(&(&int(-3) * r), p).axpy(&(&int(-3) * s), q).is_zero();
    ok[4] = app(phi, q).axpy(&(&int(3) * r), q).axpy(&(&int(-3) * t), p).is_zero();
    ok[5] = (&f.skew(p, q) - &(&int(16) * &(&st + &r2))).is_zero();

    let units: Vec<FVec> = (0..f.dim()).map(|k| f.from_coords(&SVec::unit(k))).collect();
    let phi_p = app(phi, p);
    for q1 in &units {
        if !(ok[6] || ok[8]) {
            break;
        }
        let phi_q1 = app(phi, q1);
        if ok[6] {
            let inner = f
                .cross(&phi_p, q1)
            .add(&f.cross(p, &phi_q1).scale(&int(2)))
            .sub(&f.cross(p, q1).scale(r))
            .sub(&f.cross(q, q1).scale(s));
            ok[6] = inner.scale(&int(2)).sub(&phi.scale(&f.skew(p, q1))).is_zero();
        }
        if ok[8] {
            let inner = app(&f.cross(p, q1), q)
                .axpy(&-&(&st + &r2), q1)
                .sub(&app(phi, &phi_q1))
                .axpy(&(&int(2) * r), &phi_q1);
            let lhs = inner.scale(&int(8)).axpy(&(&int(5) * &f.skew(p, q1)), q).axpy(&(&int(-2) * &f.skew(q, q1)), p);
            ok[8] = lhs.is_zero();
        }
    }
    let phi_q = app(phi, q);
    for p1 in &units {
        if !(ok[7] || ok[9]) {
            break;
        }
        let phi_p1 = app(phi, p1);
        if ok[7] {
            let inner = f
                .cross(&phi_q, p1)
            .add(&f.cross(q, &phi_p1).scale(&int(2)))
            .add(&f.cross(q, p1).scale(r))
            .sub(&f.cross(p, p1).scale(t));
            ok[7] = inner.scale(&int(2)).sub(&phi.scale(&f.skew(q, p1))).is_zero();
        }
        if ok[9] {
            let inner = app(&f.cross(q, p1), p)
                .axpy(&(&st + &r2), p1)
                .add(&app(phi, &phi_p1))
                .axpy(&(&int(2) * r), &phi_p1);
            let lhs = inner.scale(&int(8)).axpy(&(&int(5) * &f.skew(q, p1)), p).axpy(&(&int(-2) * &f.skew(p, p1)), q);
            ok[9] = lhs.is_zero();
        }
    }

    let phi_c = e7.coords(phi)?;
    let m_phi = f.matrix(phi);
    for k in 0..e7.dim() {
        if !(ok[10] || ok[11] || ok[12]) {
            break;
        }
        let phi1 = e7.basis_element(k);
        let b = e7.lie.killing(&phi_c, &SVec::unit(k));
        let (phi1_p, phi1_q) = (app(&phi1, p), app(&phi1, q));
        if ok[10] {
            let ad2 = f.decompose(&m_phi.commutator(&m_phi.commutator(&f.matrix(&phi1))));
            let c11 = ad2.add(&f.cross(q, &phi1_p)).sub(&f.cross(p, &phi1_q));
            ok[10] = c11.scale(&int(10)).add(&phi.scale(&b)).is_zero();
        }

        let c12 = app(&phi1, &phi_p).sub(&app(phi, &phi1_p).scale(&int(2))).axpy(&-r, &phi1_p).axpy(&-s, &phi1_q);
        ok[11] &= c12.scale(&int(10)).axpy(&b, p).is_zero();

        let c13 = app(&phi1, &phi_q).sub(&app(phi, &phi1_q).scale(&int(2))).axpy(r, &phi1_q).axpy(&-t, &phi1_p);
        ok[12] &= c13.scale(&int(10)).axpy(&b, q).is_zero();
    }
    Ok(ok)
}

/// (0, P₁, 0, 0, s₁, 0) with random entries; ad of it raises the grading
/// degree, so it is ad-nilpotent.
pub fn random_raising<R: Rng>(rng: &mut R, f: &Freudenthal, density: f64) -> E8Elem {
    E8Elem { s: small_complex(rng), ..E8Elem::p_upper(f.jdim(), f.from_coords(&random_svec(rng, f.dim(), density))) }
}

/// (0, 0, Q₁, 0, 0, t₁) with random entries, ad-nilpotent as well.
pub fn random_lowering<R: Rng>(rng: &mut R, f: &Freudenthal, density: f64) -> E8Elem {
    E8Elem { t: small_complex(rng), ..E8Elem::q_lower(f.jdim(), f.from_coords(&random_svec(rng, f.dim(), density))) }
}

/// exp(ad N₂) exp(ad N₁) 1₋ in (𝔢₈,ℍ)ᶜ with N₁ raising and N₂ lowering.
pub fn random_member<R: Rng>(rng: &mut R) -> Result<E8Elem, WError> {
    let amb = e8_h().amb;
    let f = amb.f();
    let n1 = random_raising(rng, f, 0.15);
    let n2 = random_lowering(rng, f, 0.1);
    let x = exp_ad_truncated(amb, &n1, &one_lower(f.jdim()), 5)?;
    exp_ad_truncated(amb, &n2, &x, 5)
}

/// A random nonzero element; R × R ≠ 0 for such elements in practice, and
/// the sweep decides membership independently anyway.
pub fn random_element<R: Rng>(rng: &mut R) -> E8Elem {
    let sub = e8_h();
    loop {
        let c = random_svec(rng, sub.dim(), 0.05);
        if !c.is_zero() {
            return sub.element(&c);
        }
    }
}

/// A member moved off the locus along one random basis direction.
pub fn perturbed_member<R: Rng>(rng: &mut R) -> Result<E8Elem, WError> {
    let sub = e8_h();
    let x = random_member(rng)?;
    let k = rng.gen_range(0..sub.dim());
    Ok(x.add(&sub.basis_element(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quat(x: &E8Elem) -> SVec {
        e8_h().coords(x).unwrap()
    }

    #[test]
    fn one_lower_is_in_both_loci() {
        for norm in [Normalization::Quaternionic, Normalization::EpsilonFixed] {
            let x = norm.coords(&one_lower(norm.jdim())).unwrap();
            assert_eq!(first_survivor(norm, &x).unwrap(), None, "{}", norm.label());
            assert_eq!(orbit_dim(norm, &x), 34);
        }
    }

    #[test]
    fn one_dot_upper_is_a_member() {
        let d = e8_h().amb.jdim();
        assert!(in_w(Normalization::Quaternionic, &quat(&one_dot_upper(d))).unwrap());
        assert!(w_conditions(&one_dot_upper(d)).unwrap().iter().all(|b| *b));
    }

    #[test]
    fn one_tilde_fails_condition_six() {
        let d = e8_h().amb.jdim();
        let x = E8Elem::r_tilde(d, Complex::ONE);
        let ok = w_conditions(&x).unwrap();
        assert!(!ok[5]);
        assert!(!in_w(Normalization::Quaternionic, &quat(&x)).unwrap());
    }

    #[test]
    fn cross_of_a_random_element_with_itself() {
        // [R, [R, R]] = 0, so (R × R)R = (1/18)B(R, R)R.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = quat(&random_element(&mut rng));
        let b = e8_h().lie.killing(&x, &x);
        let expected = x.scale(&(&b * &Complex::frac(1, 18)));
        assert_eq!(cross_apply(Normalization::Quaternionic, &x, &x).unwrap(), expected);
    }

    #[test]
    fn exp_matches_closed_form() {
        let amb = e8_h().amb;
        let f = amb.f();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let g = random_raising(&mut rng, f, 0.3);
            let one = one_lower(f.jdim());
            let lhs = exp_ad_truncated(amb, &g, &one, 4).unwrap();
            let closed = exp_closed_form(f, &g.p, &g.s);
            assert_eq!(lhs, closed);
            // Θ⁴1₋ = 4!·(1/96){P₁, (P₁×P₁)P₁} in the s-slot, so Θ⁵ is the first vanishing power.
            let quartic = f.skew(&g.p, &f.apply(&f.cross(&g.p, &g.p), &g.p));
            let fourth = E8Elem::s_upper(f.jdim(), &quartic * &Complex::frac(1, 4));
            assert_eq!(ad_power(amb, &g, &one, 4), fourth);
            assert!(!fourth.is_zero());
            assert!(ad_power(amb, &g, &one, 5).is_zero());
        }
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let amb = e8_h().amb;
        let one = one_lower(amb.jdim());
        assert_eq!(exp_ad_truncated(amb, &E8Elem::zero(amb.jdim()), &one, 0).unwrap(), one);
    }

    #[test]
    fn exp_reports_non_nilpotent_generators() {
        let amb = e8_h().amb;
        let d = amb.jdim();
        let g = E8Elem::r_tilde(d, Complex::ONE);
        assert!(matches!(exp_ad_truncated(amb, &g, &one_lower(d), 6), Err(WError::NotNilpotent(6))));
    }

    #[test]
    fn conditions_agree_with_annihilation_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 0..4 {
            let x = match k % 2 {
                0 => random_member(&mut rng).unwrap(),
                _ => perturbed_member(&mut rng).unwrap(),
            };
            let all = w_conditions(&x).unwrap().iter().all(|b| *b);
            assert_eq!(all, in_w(Normalization::Quaternionic, &quat(&x)).unwrap(), "sample {k}");
            assert_eq!(all, k % 2 == 0, "sample {k}");
        }
    }
}
