//! Seeded property sweeps: Cayley algebra laws, automorphisms ε₁, ε₂, γ,
//! triality, Jacobi identity and ad-invariance of the Killing form.

use rand::Rng;

use crate::cayley::{epsilon1, epsilon2, gamma, so8_from_coords, triality_companions, Cayley};
use crate::lie::LieAlgebra;
use crate::linalg::{random_svec, small_complex, Mat, SVec};

/// How many samples were tried and the first one that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sweep {
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Sweep {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.samples > 0
    }

    pub fn summary(&self) -> String {
        match &self.first_failure {
            None => format!("{} failures in {} samples", self.failures, self.samples),
            Some(f) => format!("{} failures in {} samples, first: {f}", self.failures, self.samples),
        }
    }
}

pub fn random_cayley<R: Rng>(rng: &mut R) -> Cayley {
    Cayley(std::array::from_fn(|_| small_complex(rng)))
}

/// Alternativity x(xy) = (xx)y, (yx)x = y(xx) and the composition law
/// N(xy) = N(x)N(y) on random elements of 𝔈ᶜ.
pub fn cayley_laws<R: Rng>(rng: &mut R, n: usize) -> Sweep {
    let mut sweep = Sweep::default();
    for k in 0..n {
        let (x, y) = (random_cayley(rng), random_cayley(rng));
        let ok = x.mul(&x.mul(&y)) == x.mul(&x).mul(&y)
            && y.mul(&x).mul(&x) == y.mul(&x.mul(&x))
            && x.mul(&y).norm() == &x.norm() * &y.norm();
        sweep.record(ok, || format!("sample {k}"));
    }
    sweep
}

/// m(xy) = m(x)m(y) for m = ε₁, ε₂, γ on random pairs.
pub fn automorphisms<R: Rng>(rng: &mut R, n: usize) -> Sweep {
    let maps = [("eps1", epsilon1()), ("eps2", epsilon2()), ("gamma", gamma())];
    let mut sweep = Sweep::default();
    for k in 0..n {
        let (x, y) = (random_cayley(rng), random_cayley(rng));
        for (name, m) in &maps {
            let ok = Cayley::apply(m, &x.mul(&y)) == Cayley::apply(m, &x).mul(&Cayley::apply(m, &y));
            sweep.record(ok, || format!("{name}, sample {k}"));
        }
    }
    sweep
}

/// ε₁² = γ, ε₂² = γ, γ² = 1.
pub fn epsilon_relations() -> [(&'static str, bool); 3] {
    let (e1, e2, g) = (epsilon1(), epsilon2(), gamma());
    [("eps1^2 = gamma", e1.mul(&e1) == g), ("eps2^2 = gamma", e2.mul(&e2) == g), ("gamma^2 = 1", g.mul(&g) == Mat::identity(8))]
}

/// The companions of a random D₁ ∈ 𝔰𝔬(8) satisfy the triality identity on all basis pairs.
pub fn triality<R: Rng>(rng: &mut R, n: usize) -> Sweep {
    let mut sweep = Sweep::default();
    for k in 0..n {
        let c: Vec<_> = (0..28).map(|_| small_complex(rng)).collect();
        let ok = triality_companions(&so8_from_coords(&c)).map(|t| t.holds()).unwrap_or(false);
        sweep.record(ok, || format!("sample {k}"));
    }
    sweep
}

/// Jacobi on basis triples: all of them when there are at most `n`, otherwise `n` random ones.
pub fn jacobi<R: Rng>(lie: &LieAlgebra, rng: &mut R, n: usize) -> Sweep {
    let d = lie.dim;
    let mut sweep = Sweep::default();
    let check = |i: usize, j: usize, k: usize, sweep: &mut Sweep| {
        let ok = lie.jacobiator(&SVec::unit(i), &SVec::unit(j), &SVec::unit(k)).is_zero();
        sweep.record(ok, || format!("({i}, {j}, {k})"));
    };
    let triples = d * (d - 1) * (d.saturating_sub(2)) / 6;
    if triples <= n {
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    check(i, j, k, &mut sweep);
                }
            }
        }
    } else {
        for _ in 0..n {
            let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            check(i, j, k, &mut sweep);
        }
    }
    sweep
}

/// B([x, y], z) + B(y, [x, z]) = 0 on random sparse triples, with B given by its Gram matrix.
pub fn ad_invariance<R: Rng>(lie: &LieAlgebra, gram: &Mat, rng: &mut R, n: usize) -> Sweep {
    let d = lie.dim;
    let form = |u: &SVec, v: &SVec| -> crate::scalar::Complex {
        u.iter().map(|(i, a)| v.iter().map(|(j, b)| &(a * b) * gram.get(*i, *j)).sum::<crate::scalar::Complex>()).sum()
    };
    let density = (3.0 / d as f64).min(1.0);
    let mut sweep = Sweep::default();
    for k in 0..n {
        let mut pick = || loop {
            let v = random_svec(rng, d, density);
            if !v.is_zero() {
                break v;
            }
        };
        let (x, y, z) = (pick(), pick(), pick());
        let lhs = &form(&lie.bracket(&x, &y), &z) + &form(&y, &lie.bracket(&x, &z));
        sweep.record(lhs.is_zero(), || format!("sample {k}"));
    }
    sweep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{e6_h, f4_eps};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn octonion_sweeps_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(cayley_laws(&mut rng, 20).passed());
        assert!(automorphisms(&mut rng, 10).passed());
        assert!(triality(&mut rng, 3).passed());
        assert!(epsilon_relations().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn jacobi_is_exhaustive_on_small_algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sweep = jacobi(&f4_eps().lie, &mut rng, 5000);
        assert_eq!(sweep.samples, 21 * 20 * 19 / 6);
        assert!(sweep.passed());
    }

    #[test]
    fn a_broken_table_is_caught() {
        // [b0, b1] = b2 alone, with [b0, b2] = b0: the Jacobi identity fails on (0, 1, 2).
        let upper = vec![SVec::unit(2), SVec::unit(0), SVec::new()];
        let lie = LieAlgebra::from_upper("broken", 3, upper);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sweep = jacobi(&lie, &mut rng, 10);
        assert_eq!(sweep.failures, 1);
        assert_eq!(sweep.first_failure.as_deref(), Some("(0, 1, 2)"));
    }

    #[test]
    fn killing_form_is_invariant() {
        let lie = &e6_h().lie;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(ad_invariance(lie, &lie.killing_gram(), &mut rng, 30).passed());
    }
}
