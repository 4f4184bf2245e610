//! The concrete algebras: 𝔣₄ᶜ, 𝔢₆ᶜ, 𝔢₇ᶜ, 𝔢₈ᶜ over 𝔍(3, 𝔈ᶜ) and 𝔍(3, ℍᶜ),
//! their ε₁, ε₂-fixed subalgebras and the quaternionic algebras, built once
//! per process (structure constants optionally read from the disk cache).

use std::sync::OnceLock;

use crate::cache;
use crate::cayley::{epsilon1, epsilon2};
use crate::freudenthal::Freudenthal;
use crate::jordan::{JordanAlgebra, Kind};
use crate::lie::{fixed_subspace, Ambient, E7Lie, E8Lie, LieError, MatrixLie, Subalgebra};
use crate::linalg::{SVec, SpMat};

fn per_kind<T>(kind: Kind, oct: &'static OnceLock<T>, quat: &'static OnceLock<T>, build: impl FnOnce() -> T) -> &'static T {
    match kind {
        Kind::Octonionic => oct.get_or_init(build),
        Kind::Quaternionic => quat.get_or_init(build),
    }
}

fn suffix(kind: Kind) -> &'static str {
    match kind {
        Kind::Octonionic => "",
        Kind::Quaternionic => "H",
    }
}

/// Der(𝔍ᶜ): dimension 52 (octonionic) or 21 (quaternionic).
pub fn f4(kind: Kind) -> &'static MatrixLie {
    static O: OnceLock<MatrixLie> = OnceLock::new();
    static Q: OnceLock<MatrixLie> = OnceLock::new();
    per_kind(kind, &O, &Q, || {
        let j = JordanAlgebra::get(kind);
        MatrixLie::new(format!("f4{}", suffix(kind)), j.dim, j.derivation_basis()).expect("independent basis")
    })
}

/// {φ : (φX, X, X) = 0}: dimension 78 (octonionic) or 35 (quaternionic).
pub fn e6(kind: Kind) -> &'static MatrixLie {
    static O: OnceLock<MatrixLie> = OnceLock::new();
    static Q: OnceLock<MatrixLie> = OnceLock::new();
    per_kind(kind, &O, &Q, || {
        let j = JordanAlgebra::get(kind);
        MatrixLie::new(format!("e6{}", suffix(kind)), j.dim, j.e6_basis()).expect("independent basis")
    })
}

pub fn e7(kind: Kind) -> &'static E7Lie {
    static O: OnceLock<E7Lie> = OnceLock::new();
    static Q: OnceLock<E7Lie> = OnceLock::new();
    per_kind(kind, &O, &Q, || E7Lie { f: Freudenthal::new(kind), e6: e6(kind) })
}

pub fn e8(kind: Kind) -> &'static E8Lie {
    static O: OnceLock<E8Lie> = OnceLock::new();
    static Q: OnceLock<E8Lie> = OnceLock::new();
    per_kind(kind, &O, &Q, || E8Lie { e7: e7(kind) })
}

/// ε₁, ε₂ lifted to 𝔍(3, 𝔈ᶜ), each with its inverse.
pub fn epsilon_jordan() -> &'static [(SpMat, SpMat); 2] {
    static E: OnceLock<[(SpMat, SpMat); 2]> = OnceLock::new();
    E.get_or_init(|| {
        let j = JordanAlgebra::get(Kind::Octonionic);
        let lift = |m: crate::linalg::Mat| {
            let inv = m.inverse().expect("ε is invertible");
            (j.lift(&m), j.lift(&inv))
        };
        [lift(epsilon1()), lift(epsilon2())]
    })
}

fn units(n: usize) -> Vec<SVec> {
    (0..n).map(SVec::unit).collect()
}

/// Builds a subalgebra, reusing cached structure constants when available.
fn build<A: Ambient>(amb: &'static A, label: &str, basis: Vec<SVec>) -> Subalgebra<'static, A> {
    if let Some(sub) = cache::load(amb, label, &basis) {
        return sub;
    }
    let sub = Subalgebra::new(amb, label, basis).unwrap_or_else(|e| panic!("{label}: {e}"));
    cache::store(&sub);
    sub
}

fn fixed<A: Ambient>(
    amb: &'static A,
    act: impl Fn(&SpMat, &SpMat, &A::Elem) -> A::Elem,
) -> Result<Vec<SVec>, LieError> {
    let [(l1, i1), (l2, i2)] = epsilon_jordan();
    let m1 = |x: &A::Elem| act(l1, i1, x);
    let m2 = |x: &A::Elem| act(l2, i2, x);
    fixed_subspace(amb, &units(amb.dim()), &[&m1, &m2])
}

pub fn conj_matrix(l: &SpMat, l_inv: &SpMat, x: &SpMat) -> SpMat {
    l.mul(x).mul(l_inv)
}

/// (𝔣₄ᶜ)^{ε₁,ε₂}, dimension 21.
pub fn f4_eps() -> &'static Subalgebra<'static, MatrixLie> {
    static S: OnceLock<Subalgebra<'static, MatrixLie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = f4(Kind::Octonionic);
        build(amb, "f4^eps", fixed(amb, conj_matrix).expect("ε preserves 𝔣₄ᶜ"))
    })
}

/// (𝔢₆ᶜ)^{ε₁,ε₂}, dimension 35.
pub fn e6_eps() -> &'static Subalgebra<'static, MatrixLie> {
    static S: OnceLock<Subalgebra<'static, MatrixLie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e6(Kind::Octonionic);
        build(amb, "e6^eps", fixed(amb, conj_matrix).expect("ε preserves 𝔢₆ᶜ"))
    })
}

/// (𝔢₇ᶜ)^{ε₁,ε₂}, dimension 66.
pub fn e7_eps() -> &'static Subalgebra<'static, E7Lie> {
    static S: OnceLock<Subalgebra<'static, E7Lie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e7(Kind::Octonionic);
        let basis = fixed(amb, |l, li, x| amb.conjugate_by_jordan(l, li, x)).expect("ε preserves 𝔢₇ᶜ");
        build(amb, "e7^eps", basis)
    })
}

/// (𝔢₈ᶜ)^{ε₁,ε₂}, dimension 133.
pub fn e8_eps() -> &'static Subalgebra<'static, E8Lie> {
    static S: OnceLock<Subalgebra<'static, E8Lie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e8(Kind::Octonionic);
        let basis = fixed(amb, |l, li, x| amb.conjugate_by_jordan(l, li, x)).expect("ε preserves 𝔢₈ᶜ");
        build(amb, "e8^eps", basis)
    })
}

/// (𝔣₄,ℍ)ᶜ = Der 𝔍(3, ℍᶜ), dimension 21.
pub fn f4_h() -> &'static Subalgebra<'static, MatrixLie> {
    static S: OnceLock<Subalgebra<'static, MatrixLie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = f4(Kind::Quaternionic);
        build(amb, "f4H", units(amb.dim()))
    })
}

/// (𝔢₆,ℍ)ᶜ, dimension 35.
pub fn e6_h() -> &'static Subalgebra<'static, MatrixLie> {
    static S: OnceLock<Subalgebra<'static, MatrixLie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e6(Kind::Quaternionic);
        build(amb, "e6H", units(amb.dim()))
    })
}

/// (𝔢₇,ℍ)ᶜ, dimension 66.
pub fn e7_h() -> &'static Subalgebra<'static, E7Lie> {
    static S: OnceLock<Subalgebra<'static, E7Lie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e7(Kind::Quaternionic);
        build(amb, "e7H", units(amb.dim()))
    })
}

/// (𝔢₈,ℍ)ᶜ, dimension 133.
pub fn e8_h() -> &'static Subalgebra<'static, E8Lie> {
    static S: OnceLock<Subalgebra<'static, E8Lie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = e8(Kind::Quaternionic);
        build(amb, "e8H", units(amb.dim()))
    })
}

/// The full octonionic 𝔣₄ᶜ with structure constants (52-dim), used for B₄.
pub fn f4_full() -> &'static Subalgebra<'static, MatrixLie> {
    static S: OnceLock<Subalgebra<'static, MatrixLie>> = OnceLock::new();
    S.get_or_init(|| {
        let amb = f4(Kind::Octonionic);
        build(amb, "f4", units(amb.dim()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random_svec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn epsilon_lifts_are_jordan_automorphisms() {
        let j = JordanAlgebra::get(Kind::Octonionic);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (l, l_inv) in epsilon_jordan() {
            assert_eq!(l.mul(l_inv), SpMat::identity(j.dim));
            for _ in 0..5 {
                let (x, y) = (random_svec(&mut rng, j.dim, 0.3), random_svec(&mut rng, j.dim, 0.3));
                assert_eq!(l.apply(&j.mul(&x, &y)), j.mul(&l.apply(&x), &l.apply(&y)));
            }
        }
    }

    #[test]
    fn fixed_derivations_commute_with_epsilon() {
        let sub = f4_eps();
        for k in 0..sub.dim() {
            let d = sub.basis_element(k);
            assert!(JordanAlgebra::get(Kind::Octonionic).is_derivation(&d));
            for (l, l_inv) in epsilon_jordan() {
                assert_eq!(conj_matrix(l, l_inv, &d), d);
            }
        }
    }

    #[test]
    fn quaternionic_dimensions() {
        assert_eq!(f4_h().dim(), 21);
        assert_eq!(e6_h().dim(), 35);
        assert_eq!(e7_h().dim(), 66);
        assert_eq!(f4(Kind::Octonionic).dim(), 52);
    }
}
