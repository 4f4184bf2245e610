//! The complexified Cayley algebra 𝔈ᶜ, its quaternion subalgebra ℍᶜ, the
//! automorphisms γ, ε₁, ε₂ and infinitesimal triality on 𝔰𝔬(8, C).
//!
//! Multiplication is Cayley–Dickson doubling over ℍ (with e₁e₂ = e₃):
//! (a + b e₄)(c + d e₄) = (ac − d̄b) + (da + bc̄)e₄.
//! The doubled basis is e₄, e₅ = e₁e₄, e₆ = e₄e₂ = −e₂e₄, e₇ = e₃e₄; with this
//! choice φ(e₁,1) and φ(e₂,1) have exactly the ε₁, ε₂ matrices that define the
//! fixed subalgebras studied here.

use std::sync::OnceLock;

use thiserror::Error;

use crate::linalg::{Echelon, Mat, SVec};
use crate::scalar::Complex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CayleyError {
    #[error("{0} is not a quaternion")]
    NotQuaternionic(&'static str),
    #[error("{0} is not a unit quaternion")]
    NotUnit(&'static str),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("triality system has no unique solution")]
    TrialityInconsistent,
}

/// Coordinates of e₄..e₇ relative to (e₀e₄, e₁e₄, e₂e₄, e₃e₄).
const DOUBLING_SIGNS: [i64; 4] = [1, 1, -1, 1];

pub type Quat = [Complex; 4];

pub fn qmul(a: &Quat, b: &Quat) -> Quat {
    let m = |i: usize, j: usize| &a[i] * &b[j];
    [
        &(&m(0, 0) - &m(1, 1)) - &(&m(2, 2) + &m(3, 3)),
        &(&m(0, 1) + &m(1, 0)) + &(&m(2, 3) - &m(3, 2)),
        &(&m(0, 2) - &m(1, 3)) + &(&m(2, 0) + &m(3, 1)),
        &(&m(0, 3) + &m(1, 2)) + &(&m(3, 0) - &m(2, 1)),
    ]
}

pub fn qconj(a: &Quat) -> Quat {
    [a[0].clone(), -&a[1], -&a[2], -&a[3]]
}

fn qadd(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|k| &a[k] + &b[k])
}

fn qsub(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|k| &a[k] - &b[k])
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cayley(pub [Complex; 8]);

impl Cayley {
    pub fn zero() -> Cayley {
        Cayley::default()
    }

    pub fn one() -> Cayley {
        Cayley::basis(0)
    }

    pub fn basis(i: usize) -> Cayley {
        let mut c = Cayley::zero();
        c.0[i] = Complex::ONE;
        c
    }

    pub fn scalar(a: Complex) -> Cayley {
        let mut c = Cayley::zero();
        c.0[0] = a;
        c
    }

    pub fn from_ints(v: [i64; 8]) -> Cayley {
        Cayley(v.map(Complex::int))
    }

    pub fn from_quat(q: &Quat) -> Cayley {
        let mut c = Cayley::zero();
        c.0[..4].clone_from_slice(q);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Complex::is_zero)
    }

    pub fn is_quaternionic(&self) -> bool {
        self.0[4..].iter().all(Complex::is_zero)
    }

    pub fn quat_part(&self) -> Quat {
        std::array::from_fn(|k| self.0[k].clone())
    }

    /// x = m + n e₄ with m, n ∈ ℍᶜ.
    pub fn split(&self) -> (Quat, Quat) {
        let m = std::array::from_fn(|k| self.0[k].clone());
        let n = std::array::from_fn(|k| self.0[4 + k].scale(&DOUBLING_SIGNS[k].into()));
        (m, n)
    }

    pub fn join(m: &Quat, n: &Quat) -> Cayley {
        Cayley(std::array::from_fn(|k| if k < 4 { m[k].clone() } else { n[k - 4].scale(&DOUBLING_SIGNS[k - 4].into()) }))
    }

    /// The doubling rule itself; `Mul` uses the table derived from it.
    pub fn dickson_mul(&self, y: &Cayley) -> Cayley {
        let (a, b) = self.split();
        let (c, d) = y.split();
        let m = qsub(&qmul(&a, &c), &qmul(&qconj(&d), &b));
        let n = qadd(&qmul(&d, &a), &qmul(&b, &qconj(&c)));
        Cayley::join(&m, &n)
    }

    pub fn conj(&self) -> Cayley {
        Cayley(std::array::from_fn(|k| if k == 0 { self.0[0].clone() } else { -&self.0[k] }))
    }

    pub fn tau(&self) -> Cayley {
        Cayley(std::array::from_fn(|k| self.0[k].tau()))
    }

    pub fn add(&self, o: &Cayley) -> Cayley {
        Cayley(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }

    pub fn sub(&self, o: &Cayley) -> Cayley {
        Cayley(std::array::from_fn(|k| &self.0[k] - &o.0[k]))
    }

    pub fn scale(&self, a: &Complex) -> Cayley {
        Cayley(std::array::from_fn(|k| &self.0[k] * a))
    }

    pub fn neg(&self) -> Cayley {
        Cayley(std::array::from_fn(|k| -&self.0[k]))
    }

    pub fn mul(&self, o: &Cayley) -> Cayley {
        let table = mul_table();
        let mut out = Cayley::zero();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = table[i][j];
                let p = a * b;
                if sign > 0 {
                    out.0[k] += &p;
                } else {
                    out.0[k] -= &p;
                }
            }
        }
        out
    }

    /// (x, y) = Σ xᵢyᵢ, so that (eᵢ, eⱼ) = δᵢⱼ.
    pub fn inner(&self, o: &Cayley) -> Complex {
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    /// N(x) = x x̄ (a scalar).
    pub fn norm(&self) -> Complex {
        self.inner(self)
    }

    pub fn to_svec(&self) -> SVec {
        SVec::from_dense(&self.0)
    }

    pub fn from_svec(v: &SVec) -> Cayley {
        let mut c = Cayley::zero();
        for (i, a) in v.iter() {
            c.0[*i] = a.clone();
        }
        c
    }

    pub fn apply(m: &Mat, x: &Cayley) -> Cayley {
        Cayley::from_svec(&SVec::from_dense(&m.apply(&x.0)))
    }
}

/// mul_table()[i][j] = (s, k) means eᵢeⱼ = s·e_k.
pub fn mul_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let p = Cayley::basis(i).dickson_mul(&Cayley::basis(j));
                let (k, a) = p.0.iter().enumerate().find(|(_, a)| !a.is_zero()).expect("basis product is nonzero");
                let sign = if *a == Complex::ONE { 1 } else { -1 };
                (sign, k)
            })
        })
    })
}

/// The map qm q̄ + (p n q̄)e₄ on x = m + n e₄, as an 8×8 matrix (columns are images of eⱼ).
pub fn phi_g2(p: &Cayley, q: &Cayley) -> Result<Mat, CayleyError> {
    if !p.is_quaternionic() {
        return Err(CayleyError::NotQuaternionic("p"));
    }
    if !q.is_quaternionic() {
        return Err(CayleyError::NotQuaternionic("q"));
    }
    if p.norm() != Complex::ONE {
        return Err(CayleyError::NotUnit("p"));
    }
    if q.norm() != Complex::ONE {
        return Err(CayleyError::NotUnit("q"));
    }
    let (pq, qq) = (p.quat_part(), q.quat_part());
    let qbar = qconj(&qq);
    let mut out = Mat::zeros(8, 8);
    for j in 0..8 {
        let (m, n) = Cayley::basis(j).split();
        let image = Cayley::join(&qmul(&qmul(&qq, &m), &qbar), &qmul(&qmul(&pq, &n), &qbar));
        for i in 0..8 {
            out.set(i, j, image.0[i].clone());
        }
    }
    Ok(out)
}

pub fn gamma() -> Mat {
    phi_g2(&Cayley::from_ints([-1, 0, 0, 0, 0, 0, 0, 0]), &Cayley::one()).expect("unit quaternions")
}

pub fn epsilon1() -> Mat {
    phi_g2(&Cayley::basis(1), &Cayley::one()).expect("unit quaternions")
}

pub fn epsilon2() -> Mat {
    phi_g2(&Cayley::basis(2), &Cayley::one()).expect("unit quaternions")
}

/// G_ij: eⱼ ↦ eᵢ, eᵢ ↦ −eⱼ.
pub fn g(i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(8, 8);
    m.set(i, j, Complex::ONE);
    m.set(j, i, -Complex::ONE);
    m
}

pub fn so8_pairs() -> Vec<(usize, usize)> {
    (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).collect()
}

pub fn is_skew(m: &Mat) -> bool {
    m.rows == 8 && m.cols == 8 && m.add(&m.transpose()).is_zero()
}

/// Coefficients of D in the basis G_ij, i < j.
pub fn so8_coords(m: &Mat) -> Vec<Complex> {
    so8_pairs().into_iter().map(|(i, j)| m.get(i, j).clone()).collect()
}

pub fn so8_from_coords(c: &[Complex]) -> Mat {
    let mut m = Mat::zeros(8, 8);
    for ((i, j), a) in so8_pairs().into_iter().zip(c) {
        m.set(i, j, a.clone());
        m.set(j, i, -a);
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityTriple {
    pub d1: Mat,
    pub d2: Mat,
    pub d3: Mat,
}

impl TrialityTriple {
    /// Checks (D₁x)y + x(D₂y) = conj(D₃ conj(xy)) on all basis pairs.
    pub fn holds(&self) -> bool {
        (0..8).all(|a| {
            (0..8).all(|b| {
                let (x, y) = (Cayley::basis(a), Cayley::basis(b));
                let lhs = Cayley::apply(&self.d1, &x).mul(&y).add(&x.mul(&Cayley::apply(&self.d2, &y)));
                let rhs = Cayley::apply(&self.d3, &x.mul(&y).conj()).conj();
                lhs == rhs
            })
        })
    }
}

/// Solves for the unique D₂, D₃ completing D₁ to a triality triple.
pub fn triality_companions(d1: &Mat) -> Result<TrialityTriple, CayleyError> {
    if !is_skew(d1) {
        return Err(CayleyError::NotSkew);
    }
    let pairs = so8_pairs();
    let n = pairs.len();
    // Column 0 carries the D₁ term, columns 1..=n the D₂ unknowns, n+1..=2n the D₃ unknowns.
    let mut ech = Echelon::new(1 + 2 * n);
    for a in 0..8 {
        for b in 0..8 {
            let (x, y) = (Cayley::basis(a), Cayley::basis(b));
            let fixed = Cayley::apply(d1, &x).mul(&y);
            let xy_bar = x.mul(&y).conj();
            let d2_terms: Vec<Cayley> = pairs.iter().map(|(i, j)| x.mul(&Cayley::apply(&g(*i, *j), &y))).collect();
            let d3_terms: Vec<Cayley> = pairs.iter().map(|(i, j)| Cayley::apply(&g(*i, *j), &xy_bar).conj().neg()).collect();
            for k in 0..8 {
                let row = std::iter::once(fixed.0[k].clone())
                    .chain(d2_terms.iter().map(|c| c.0[k].clone()))
                    .chain(d3_terms.iter().map(|c| c.0[k].clone()))
                    .collect::<Vec<_>>();
                ech.insert(SVec::from_dense(&row));
            }
        }
    }
    let null = ech.nullspace();
    let sol = match null.as_slice() {
        [v] if !v.get(0).is_zero() => v.scale(&v.get(0).inv().expect("nonzero")),
        _ => return Err(CayleyError::TrialityInconsistent),
    };
    let dense = sol.to_dense(1 + 2 * n);
    Ok(TrialityTriple {
        d1: d1.clone(),
        d2: so8_from_coords(&dense[1..=n]),
        d3: so8_from_coords(&dense[n + 1..]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::small_complex;
    use crate::scalar::Rational;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize) -> Cayley {
        Cayley::basis(i)
    }

    fn random_cayley(rng: &mut ChaCha8Rng) -> Cayley {
        Cayley(std::array::from_fn(|_| small_complex(rng)))
    }

    #[test]
    fn basic_products() {
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(4).mul(&e(4)), e(0).neg());
        assert_eq!(e(1).mul(&e(4)), e(5));
        assert_eq!(e(4).mul(&e(2)), e(6));
        assert_eq!(e(3).mul(&e(4)), e(7));
    }

    #[test]
    fn table_matches_doubling_rule_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (x, y) = (random_cayley(&mut rng), random_cayley(&mut rng));
            assert_eq!(x.mul(&y), x.dickson_mul(&y));
        }
    }

    #[test]
    fn basis_is_alternative_and_composes() {
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (e(a), e(b));
                assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
                assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
                assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(e(3).inner(&e(3)), Complex::ONE);
        assert_eq!(e(2).inner(&e(5)), Complex::ZERO);
        let x = e(0).add(&e(1).scale(&Complex::I));
        let y = e(0).sub(&e(1).scale(&Complex::I));
        assert_eq!(x.inner(&y), Complex::int(2));
    }

    #[test]
    fn inner_is_scalar_part_of_symmetrized_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let (x, y) = (random_cayley(&mut rng), random_cayley(&mut rng));
            let s = x.mul(&y.conj()).add(&y.mul(&x.conj()));
            assert_eq!(s.0[0].scale(&Rational::new(1, 2)), x.inner(&y));
            assert!(s.0[1..].iter().all(Complex::is_zero));
        }
    }

    #[test]
    fn epsilon_matrices_match_the_defining_tables() {
        let eps1 = Mat::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0, -1, 0],
        ]);
        let eps2 = Mat::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, -1, 0, 0, 0],
            &[0, 0, 0, 0, 0, -1, 0, 0],
        ]);
        assert_eq!(epsilon1(), eps1);
        assert_eq!(epsilon2(), eps2);
        assert_eq!(Cayley::apply(&epsilon1(), &e(4)), e(5));
    }

    #[test]
    fn gamma_fixes_quaternions_and_negates_the_rest() {
        let g = gamma();
        for i in 0..8 {
            let expected = if i < 4 { e(i) } else { e(i).neg() };
            assert_eq!(Cayley::apply(&g, &e(i)), expected);
        }
    }

    #[test]
    fn epsilon_relations() {
        let (e1, e2, g) = (epsilon1(), epsilon2(), gamma());
        assert_eq!(e1.mul(&e1), g);
        assert_eq!(e2.mul(&e2), g);
        assert_eq!(g.mul(&g), Mat::identity(8));
        // ε₁ε₂ = φ(e₃,1) and ε₂ε₁ = φ(−e₃,1): they commute only up to γ.
        assert_eq!(e1.mul(&e2), g.mul(&e2).mul(&e1));
        assert!(!e1.commutator(&e2).is_zero());
    }

    #[test]
    fn maps_are_automorphisms() {
        for m in [epsilon1(), epsilon2(), gamma()] {
            for a in 0..8 {
                for b in 0..8 {
                    let lhs = Cayley::apply(&m, &e(a)).mul(&Cayley::apply(&m, &e(b)));
                    assert_eq!(lhs, Cayley::apply(&m, &e(a).mul(&e(b))));
                }
            }
        }
    }

    #[test]
    fn phi_rejects_bad_arguments() {
        assert_eq!(phi_g2(&e(4), &e(0)).err(), Some(CayleyError::NotQuaternionic("p")));
        assert_eq!(phi_g2(&e(0), &e(0).scale(&Complex::int(2))).err(), Some(CayleyError::NotUnit("q")));
    }

    fn scaled_ig(i: usize, j: usize, c: Rational) -> Mat {
        g(i, j).scale(&Complex::new(Rational::ZERO, c))
    }

    /// L₂, L₃ as functions of (λ₀, λ₁, λ₂) in the basis iG₀₁, iG₂₃, i(G₄₅+G₆₇).
    fn cartan_so8(c: [Rational; 3]) -> Mat {
        scaled_ig(0, 1, c[0].clone())
            .add(&scaled_ig(2, 3, c[1].clone()))
            .add(&scaled_ig(4, 5, c[2].clone()))
            .add(&scaled_ig(6, 7, c[2].clone()))
    }

    #[test]
    fn cartan_companions_match_the_explicit_display() {
        let h = Rational::new(1, 2);
        let lin = |l: [i64; 3], row: [[i64; 3]; 3]| -> [Rational; 3] {
            std::array::from_fn(|k| &h * &Rational::int(row[k].iter().zip(&l).map(|(a, b)| a * b).sum()))
        };
        // Rows: coefficients of iG₀₁, iG₂₃, i(G₄₅+G₆₇) as ½·(linear form in λ).
        let l2 = [[-1, 1, 2], [-1, 1, -2], [-1, -1, 0]];
        let l3 = [[-1, -1, -2], [1, 1, -2], [1, -1, 0]];
        for l in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, -3, 5]] {
            let d1 = cartan_so8(l.map(Rational::int));
            let t = triality_companions(&d1).unwrap();
            assert_eq!(t.d2, cartan_so8(lin(l, l2)), "L2 for {l:?}");
            assert_eq!(t.d3, cartan_so8(lin(l, l3)), "L3 for {l:?}");
            assert!(t.holds());
        }
    }

    #[test]
    fn zero_has_zero_companions() {
        let t = triality_companions(&Mat::zeros(8, 8)).unwrap();
        assert!(t.d2.is_zero() && t.d3.is_zero());
        assert_eq!(triality_companions(&Mat::identity(8)).err(), Some(CayleyError::NotSkew));
    }

    fn fixed_span() -> Vec<Mat> {
        vec![
            g(0, 1),
            g(0, 2),
            g(0, 3),
            g(1, 2),
            g(1, 3),
            g(2, 3),
            g(4, 5).add(&g(6, 7)),
            g(4, 6).sub(&g(5, 7)),
            g(4, 7).add(&g(5, 6)),
        ]
    }

    #[test]
    fn fixed_so8_part_is_closed_under_companions() {
        let span = fixed_span();
        let mut ech = Echelon::new(28);
        for m in &span {
            ech.insert(SVec::from_dense(&so8_coords(m)));
        }
        assert_eq!(ech.rank(), 9);
        for m in &span {
            let t = triality_companions(m).unwrap();
            assert!(ech.contains(&SVec::from_dense(&so8_coords(&t.d2))));
            assert!(ech.contains(&SVec::from_dense(&so8_coords(&t.d3))));
            let (e1, e2) = (epsilon1(), epsilon2());
            for eps in [&e1, &e2] {
                let inv = eps.inverse().unwrap();
                assert_eq!(&eps.mul(m).mul(&inv), m);
            }
        }
    }

    #[test]
    fn companions_cycle() {
        for (i, j) in so8_pairs() {
            let t = triality_companions(&g(i, j)).unwrap();
            let next = triality_companions(&t.d2).unwrap();
            assert_eq!(next.d2, t.d3);
            assert_eq!(next.d3, t.d1);
        }
    }

    fn unit_quaternion(rng: &mut ChaCha8Rng) -> Cayley {
        loop {
            let h: Quat = std::array::from_fn(|_| Complex::real(crate::linalg::small_rational(rng)));
            let hh = Cayley::from_quat(&h);
            let n = hh.norm();
            if n.is_zero() {
                continue;
            }
            return hh.mul(&hh).scale(&n.inv().unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]
        #[test]
        fn phi_is_an_automorphism_for_unit_quaternions(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (p, q) = (unit_quaternion(&mut rng), unit_quaternion(&mut rng));
            let m = phi_g2(&p, &q).unwrap();
            for a in 0..8 {
                for b in 0..8 {
                    let lhs = Cayley::apply(&m, &e(a)).mul(&Cayley::apply(&m, &e(b)));
                    prop_assert_eq!(lhs, Cayley::apply(&m, &e(a).mul(&e(b))));
                }
            }
        }

        #[test]
        fn composition_law_on_random_elements(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (x, y) = (random_cayley(&mut rng), random_cayley(&mut rng));
            prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
            prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
            prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
            prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        }

        #[test]
        fn companions_are_linear(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c1: Vec<Complex> = (0..28).map(|_| small_complex(&mut rng)).collect();
            let c2: Vec<Complex> = (0..28).map(|_| small_complex(&mut rng)).collect();
            let a = small_complex(&mut rng);
            let (m1, m2) = (so8_from_coords(&c1), so8_from_coords(&c2));
            let t1 = triality_companions(&m1).unwrap();
            let t2 = triality_companions(&m2).unwrap();
            let t = triality_companions(&m1.add(&m2.scale(&a))).unwrap();
            prop_assert_eq!(t.d2, t1.d2.add(&t2.d2.scale(&a)));
            prop_assert_eq!(t.d3, t1.d3.add(&t2.d3.scale(&a)));
        }
    }
}
