//! The exceptional Jordan algebra 𝔍(3, 𝔈ᶜ) and its quaternionic subalgebra
//! 𝔍(3, ℍᶜ), with structure tables for ∘, × and ( , ), plus linear solvers
//! for the derivation algebra 𝔣₄ᶜ and the algebra 𝔢₆ᶜ.

use std::sync::OnceLock;

use crate::cayley::Cayley;
use crate::linalg::{Echelon, Mat, SVec, SpMat};
use crate::scalar::{Complex, Rational};

/// Which composition algebra fills the off-diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Octonionic,
    Quaternionic,
}

impl Kind {
    /// Real dimension of the composition algebra.
    pub fn n(self) -> usize {
        match self {
            Kind::Octonionic => 8,
            Kind::Quaternionic => 4,
        }
    }

    /// Dimension of the Jordan algebra, 3 + 3n.
    pub fn jdim(self) -> usize {
        3 + 3 * self.n()
    }

    pub fn label(self) -> &'static str {
        match self {
            Kind::Octonionic => "octonionic",
            Kind::Quaternionic => "quaternionic",
        }
    }
}

/// A Hermitian matrix
/// ```text
/// ( ξ₁  x₃  x̄₂ )
/// ( x̄₃  ξ₂  x₁ )
/// ( x₂  x̄₁  ξ₃ )
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JordanMatrix {
    pub xi: [Complex; 3],
    pub x: [Cayley; 3],
}

impl JordanMatrix {
    pub fn zero() -> JordanMatrix {
        JordanMatrix::default()
    }

    /// E₁, E₂, E₃ for k = 0, 1, 2.
    pub fn e(k: usize) -> JordanMatrix {
        let mut m = JordanMatrix::zero();
        m.xi[k] = Complex::ONE;
        m
    }

    pub fn identity() -> JordanMatrix {
        JordanMatrix { xi: [Complex::ONE, Complex::ONE, Complex::ONE], x: Default::default() }
    }

    /// F₁(x), F₂(x), F₃(x) for k = 0, 1, 2.
    pub fn f(k: usize, x: Cayley) -> JordanMatrix {
        let mut m = JordanMatrix::zero();
        m.x[k] = x;
        m
    }

    pub fn diag(xi: [Complex; 3]) -> JordanMatrix {
        JordanMatrix { xi, x: Default::default() }
    }

    pub fn is_quaternionic(&self) -> bool {
        self.x.iter().all(Cayley::is_quaternionic)
    }

    pub fn add(&self, o: &JordanMatrix) -> JordanMatrix {
        JordanMatrix {
            xi: std::array::from_fn(|k| &self.xi[k] + &o.xi[k]),
            x: std::array::from_fn(|k| self.x[k].add(&o.x[k])),
        }
    }

    pub fn sub(&self, o: &JordanMatrix) -> JordanMatrix {
        self.add(&o.scale(&-Complex::ONE))
    }

    pub fn scale(&self, a: &Complex) -> JordanMatrix {
        JordanMatrix { xi: std::array::from_fn(|k| &self.xi[k] * a), x: std::array::from_fn(|k| self.x[k].scale(a)) }
    }

    pub fn tau(&self) -> JordanMatrix {
        JordanMatrix { xi: std::array::from_fn(|k| self.xi[k].tau()), x: std::array::from_fn(|k| self.x[k].tau()) }
    }

    fn full(&self) -> [[Cayley; 3]; 3] {
        let s = |a: &Complex| Cayley::scalar(a.clone());
        let [x1, x2, x3] = &self.x;
        [
            [s(&self.xi[0]), x3.clone(), x2.conj()],
            [x3.conj(), s(&self.xi[1]), x1.clone()],
            [x2.clone(), x1.conj(), s(&self.xi[2])],
        ]
    }

    fn from_full(m: &[[Cayley; 3]; 3]) -> JordanMatrix {
        for i in 0..3 {
            assert!(m[i][i].0[1..].iter().all(Complex::is_zero), "diagonal entry is not a scalar");
            for j in 0..3 {
                assert_eq!(m[i][j], m[j][i].conj(), "matrix is not Hermitian");
            }
        }
        JordanMatrix {
            xi: std::array::from_fn(|k| m[k][k].0[0].clone()),
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    /// X∘Y = ½(XY + YX), computed from the 3×3 matrix product.
    pub fn jordan_mul(&self, o: &JordanMatrix) -> JordanMatrix {
        let (a, b) = (self.full(), o.full());
        let half = Complex::frac(1, 2);
        let prod = |p: &[[Cayley; 3]; 3], q: &[[Cayley; 3]; 3], i: usize, j: usize| {
            (0..3).fold(Cayley::zero(), |acc, k| acc.add(&p[i][k].mul(&q[k][j])))
        };
        let sym: [[Cayley; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| prod(&a, &b, i, j).add(&prod(&b, &a, i, j)).scale(&half)));
        JordanMatrix::from_full(&sym)
    }

    pub fn trace(&self) -> Complex {
        self.xi.iter().cloned().sum()
    }

    /// (X, Y) = tr(X∘Y).
    pub fn inner(&self, o: &JordanMatrix) -> Complex {
        self.jordan_mul(o).trace()
    }

    /// X×Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr(X)tr(Y) − (X,Y))E).
    pub fn cross(&self, o: &JordanMatrix) -> JordanMatrix {
        let (tx, ty) = (self.trace(), o.trace());
        let two = Complex::int(2);
        let sum = self
            .jordan_mul(o)
            .scale(&two)
            .sub(&o.scale(&tx))
            .sub(&self.scale(&ty))
            .add(&JordanMatrix::identity().scale(&(&(&tx * &ty) - &self.inner(o))));
        sum.scale(&Complex::frac(1, 2))
    }

    /// (X, Y, Z) = (X, Y×Z).
    pub fn trilinear(&self, y: &JordanMatrix, z: &JordanMatrix) -> Complex {
        self.inner(&y.cross(z))
    }

    /// det X = ⅓(X, X, X).
    pub fn det(&self) -> Complex {
        self.trilinear(self, self).scale(&Rational::new(1, 3))
    }

    /// Coordinates in the basis E₁, E₂, E₃, F₁(e₀..), F₂(e₀..), F₃(e₀..).
    pub fn coords(&self, kind: Kind) -> SVec {
        let n = kind.n();
        let mut v = self.xi.to_vec();
        for k in 0..3 {
            assert!(kind == Kind::Octonionic || self.x[k].is_quaternionic(), "entry outside the quaternions");
            v.extend(self.x[k].0[..n].iter().cloned());
        }
        SVec::from_dense(&v)
    }

    pub fn from_coords(kind: Kind, v: &SVec) -> JordanMatrix {
        let n = kind.n();
        let d = v.to_dense(kind.jdim());
        let mut m = JordanMatrix::zero();
        m.xi = std::array::from_fn(|k| d[k].clone());
        for k in 0..3 {
            for i in 0..n {
                m.x[k].0[i] = d[3 + k * n + i].clone();
            }
        }
        m
    }
}

/// Index of F_k(e_i) in the coordinate basis.
pub fn f_index(kind: Kind, k: usize, i: usize) -> usize {
    3 + k * kind.n() + i
}

pub fn basis_label(kind: Kind, idx: usize) -> String {
    if idx < 3 {
        format!("E{}", idx + 1)
    } else {
        let r = idx - 3;
        format!("F{}(e{})", r / kind.n() + 1, r % kind.n())
    }
}

/// Structure tables of 𝔍ᶜ in the fixed coordinate basis.
#[derive(Debug)]
pub struct JordanAlgebra {
    pub kind: Kind,
    pub dim: usize,
    mul: Vec<Vec<SVec>>,
    cross: Vec<Vec<SVec>>,
    gram: Vec<Complex>,
    lmul: Vec<SpMat>,
}

impl JordanAlgebra {
    pub fn get(kind: Kind) -> &'static JordanAlgebra {
        static OCT: OnceLock<JordanAlgebra> = OnceLock::new();
        static QUAT: OnceLock<JordanAlgebra> = OnceLock::new();
        match kind {
            Kind::Octonionic => OCT.get_or_init(|| JordanAlgebra::build(kind)),
            Kind::Quaternionic => QUAT.get_or_init(|| JordanAlgebra::build(kind)),
        }
    }

    fn build(kind: Kind) -> JordanAlgebra {
        let dim = kind.jdim();
        let basis: Vec<JordanMatrix> = (0..dim).map(|i| JordanMatrix::from_coords(kind, &SVec::unit(i))).collect();
        let mut mul = vec![vec![SVec::new(); dim]; dim];
        let mut cross = vec![vec![SVec::new(); dim]; dim];
        let mut gram = vec![Complex::ZERO; dim];
        for i in 0..dim {
            for j in i..dim {
                let p = basis[i].jordan_mul(&basis[j]).coords(kind);
                let c = basis[i].cross(&basis[j]).coords(kind);
                mul[i][j] = p.clone();
                mul[j][i] = p;
                cross[i][j] = c.clone();
                cross[j][i] = c;
                let g = basis[i].inner(&basis[j]);
                if i == j {
                    gram[i] = g;
                } else {
                    assert!(g.is_zero(), "coordinate basis is orthogonal");
                }
            }
        }
        let lmul = (0..dim)
            .map(|i| SpMat::from_columns(dim, &(0..dim).map(|j| mul[i][j].clone()).collect::<Vec<_>>()))
            .collect();
        JordanAlgebra { kind, dim, mul, cross, gram, lmul }
    }

    fn bilinear(&self, table: &[Vec<SVec>], a: &SVec, b: &SVec) -> SVec {
        let mut terms = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                terms.push((x * y, &table[*i][*j]));
            }
        }
        SVec::combination(terms.iter().map(|(c, v)| (c, *v)))
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        self.bilinear(&self.mul, a, b)
    }

    pub fn cross(&self, a: &SVec, b: &SVec) -> SVec {
        self.bilinear(&self.cross, a, b)
    }

    pub fn inner(&self, a: &SVec, b: &SVec) -> Complex {
        let mut acc = Complex::ZERO;
        let (mut p, mut q) = (0, 0);
        while p < a.0.len() && q < b.0.len() {
            match a.0[p].0.cmp(&b.0[q].0) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    let i = a.0[p].0;
                    acc += &(&(&a.0[p].1 * &b.0[q].1) * &self.gram[i]);
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    pub fn trace(&self, a: &SVec) -> Complex {
        (0..3).map(|k| a.get(k)).sum()
    }

    pub fn identity(&self) -> SVec {
        SVec((0..3).map(|k| (k, Complex::ONE)).collect())
    }

    pub fn gram_diag(&self) -> &[Complex] {
        &self.gram
    }

    /// Multiplication operator X̃ : Y ↦ X∘Y.
    pub fn lmul(&self, a: &SVec) -> SpMat {
        let mut out = SpMat::zeros(self.dim, self.dim);
        for (i, x) in a.iter() {
            out = out.axpy(x, &self.lmul[*i]);
        }
        out
    }

    pub fn basis_lmul(&self, i: usize) -> &SpMat {
        &self.lmul[i]
    }

    /// ᵗφ with respect to ( , ): (φX, Y) = (X, ᵗφY).
    pub fn transpose(&self, phi: &SpMat) -> SpMat {
        SpMat::from_triples(
            self.dim,
            self.dim,
            phi.data.iter().enumerate().flat_map(|(i, row)| {
                row.iter().map(move |(j, a)| (*j, i, &(a * &self.gram[i]) / &self.gram[*j]))
            }),
        )
    }

    /// Lift of an 𝔈ᶜ-linear map acting on every off-diagonal entry.
    pub fn lift(&self, map8: &Mat) -> SpMat {
        let n = self.kind.n();
        let mut triples: Vec<(usize, usize, Complex)> = (0..3).map(|k| (k, k, Complex::ONE)).collect();
        for k in 0..3 {
            for j in 0..8 {
                for i in 0..8 {
                    let a = map8.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    assert!(i < n && j < n || j >= n, "map does not preserve the coefficient algebra");
                    if j < n {
                        triples.push((f_index(self.kind, k, i), f_index(self.kind, k, j), a.clone()));
                    }
                }
            }
        }
        SpMat::from_triples(self.dim, self.dim, triples)
    }

    /// δ = (D₁, D₂, D₃) acting by F_k(x) ↦ F_k(D_k x), killing E₁, E₂, E₃.
    pub fn so8_triple(&self, d: [&Mat; 3]) -> SpMat {
        let n = self.kind.n();
        let mut triples = Vec::new();
        for (k, dk) in d.iter().enumerate() {
            for j in 0..n {
                for i in 0..8 {
                    let a = dk.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    assert!(i < n, "so(8) element does not preserve the coefficient algebra");
                    triples.push((f_index(self.kind, k, i), f_index(self.kind, k, j), a.clone()));
                }
            }
        }
        SpMat::from_triples(self.dim, self.dim, triples)
    }

    /// Ã_k(a) := 2[(E_{k+1} − E_{k+2})~, F_k(a)~], an element of 𝔣₄ᶜ.
    pub fn a_tilde(&self, k: usize, a: &Cayley) -> SpMat {
        let d = JordanMatrix::e((k + 1) % 3).sub(&JordanMatrix::e((k + 2) % 3)).coords(self.kind);
        let f = JordanMatrix::f(k, a.clone()).coords(self.kind);
        self.lmul(&d).commutator(&self.lmul(&f)).scale(&Complex::int(2))
    }

    pub fn is_derivation(&self, delta: &SpMat) -> bool {
        let img: Vec<SVec> = (0..self.dim).map(|j| delta.column(j)).collect();
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                let lhs = delta.apply(&self.mul[i][j]);
                let rhs = self.mul(&img[i], &SVec::unit(j)).add(&self.mul(&SVec::unit(i), &img[j]));
                lhs == rhs
            })
        })
    }

    /// (φX,Y,Z) + (X,φY,Z) + (X,Y,φZ) = 0 on all basis triples.
    pub fn is_e6(&self, phi: &SpMat) -> bool {
        let img: Vec<SVec> = (0..self.dim).map(|j| phi.column(j)).collect();
        (0..self.dim).all(|a| {
            (a..self.dim).all(|b| {
                (b..self.dim).all(|c| {
                    let t1 = self.inner(&img[a], &self.cross[b][c]);
                    let t2 = self.inner(&img[b], &self.cross[a][c]);
                    let t3 = self.inner(&img[c], &self.cross[a][b]);
                    (&(&t1 + &t2) + &t3).is_zero()
                })
            })
        })
    }

    /// Unknown index of the matrix entry φ_{ij} (coefficient of bᵢ in φ(bⱼ)).
    fn unknown(&self, i: usize, j: usize) -> usize {
        i * self.dim + j
    }

    fn solve(&self, rows: impl Iterator<Item = SVec>) -> Vec<SpMat> {
        let mut ech = Echelon::new(self.dim * self.dim);
        for r in rows {
            if !r.is_zero() {
                ech.insert(r);
            }
        }
        ech.nullspace().iter().map(|v| SpMat::unvectorize(v, self.dim, self.dim)).collect()
    }

    /// Basis of {δ : δ(X∘Y) = δX∘Y + X∘δY}.
    pub fn derivation_basis(&self) -> Vec<SpMat> {
        let dim = self.dim;
        let rows = (0..dim).flat_map(move |a| {
            (a..dim).flat_map(move |b| {
                (0..dim).map(move |k| {
                    let mut pairs: Vec<(usize, Complex)> = Vec::new();
                    for (m, c) in self.mul[a][b].iter() {
                        pairs.push((self.unknown(k, *m), c.clone()));
                    }
                    for i in 0..dim {
                        let c1 = self.mul[i][b].get(k);
                        if !c1.is_zero() {
                            pairs.push((self.unknown(i, a), -c1));
                        }
                        let c2 = self.mul[a][i].get(k);
                        if !c2.is_zero() {
                            pairs.push((self.unknown(i, b), -c2));
                        }
                    }
                    SVec::from_pairs(pairs)
                })
            })
        });
        self.solve(rows)
    }

    /// Basis of {φ : (φX, X, X) = 0}, via the polarized identity.
    pub fn e6_basis(&self) -> Vec<SpMat> {
        let dim = self.dim;
        let weighted = |v: &SVec| -> Vec<(usize, Complex)> { v.iter().map(|(i, a)| (*i, a * &self.gram[*i])).collect() };
        let rows = (0..dim).flat_map(move |a| {
            (a..dim).flat_map(move |b| {
                (b..dim).map(move |c| {
                    let mut pairs = Vec::new();
                    for (i, t) in weighted(&self.cross[b][c]) {
                        pairs.push((self.unknown(i, a), t));
                    }
                    for (i, t) in weighted(&self.cross[a][c]) {
                        pairs.push((self.unknown(i, b), t));
                    }
                    for (i, t) in weighted(&self.cross[a][b]) {
                        pairs.push((self.unknown(i, c), t));
                    }
                    SVec::from_pairs(pairs)
                })
            })
        });
        self.solve(rows)
    }

    /// Splits φ ∈ 𝔢₆ᶜ as δ + T̃ with T = φ(E) and δ a derivation.
    pub fn split_e6(&self, phi: &SpMat) -> (SpMat, SVec) {
        let t = phi.apply(&self.identity());
        (phi.sub(&self.lmul(&t)), t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{epsilon1, epsilon2, g, gamma, triality_companions};
    use crate::linalg::{random_svec, small_complex};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize) -> Cayley {
        Cayley::basis(i)
    }

    fn random_j(rng: &mut ChaCha8Rng, kind: Kind) -> JordanMatrix {
        JordanMatrix::from_coords(kind, &random_svec(rng, kind.jdim(), 0.6))
    }

    #[test]
    fn product_examples() {
        let e1 = JordanMatrix::e(0);
        assert_eq!(e1.jordan_mul(&e1), e1);
        let f1 = JordanMatrix::f(0, e(0));
        assert_eq!(f1.jordan_mul(&f1), JordanMatrix::e(1).add(&JordanMatrix::e(2)));
        for i in 0..8 {
            assert_eq!(e1.jordan_mul(&JordanMatrix::f(0, e(i))), JordanMatrix::zero());
        }
    }

    #[test]
    fn cross_examples() {
        let (e1, e2, e3) = (JordanMatrix::e(0), JordanMatrix::e(1), JordanMatrix::e(2));
        assert_eq!(e1.cross(&e2), e3.scale(&Complex::frac(1, 2)));
        assert_eq!(JordanMatrix::identity().cross(&JordanMatrix::identity()), JordanMatrix::identity());
        assert_eq!(e1.cross(&e1), JordanMatrix::zero());
    }

    #[test]
    fn forms_examples() {
        assert_eq!(JordanMatrix::identity().det(), Complex::ONE);
        let d = JordanMatrix::diag([Complex::int(2), Complex::frac(1, 3), Complex::int(-5)]);
        assert_eq!(d.det(), Complex::frac(-10, 3));
        assert_eq!(JordanMatrix::e(0).inner(&JordanMatrix::e(0)), Complex::ONE);
        assert_eq!(JordanMatrix::e(0).inner(&JordanMatrix::e(1)), Complex::ZERO);
    }

    #[test]
    fn tables_agree_with_literal_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for kind in [Kind::Octonionic, Kind::Quaternionic] {
            let alg = JordanAlgebra::get(kind);
            for _ in 0..5 {
                let (x, y) = (random_j(&mut rng, kind), random_j(&mut rng, kind));
                let (a, b) = (x.coords(kind), y.coords(kind));
                assert_eq!(alg.mul(&a, &b), x.jordan_mul(&y).coords(kind));
                assert_eq!(alg.cross(&a, &b), x.cross(&y).coords(kind));
                assert_eq!(alg.inner(&a, &b), x.inner(&y));
                assert_eq!(alg.lmul(&a).apply(&b), alg.mul(&a, &b));
            }
        }
    }

    #[test]
    fn gamma_lift_negates_the_doubled_part() {
        let alg = JordanAlgebra::get(Kind::Octonionic);
        let lg = alg.lift(&gamma());
        let v = JordanMatrix::f(0, e(4)).coords(Kind::Octonionic);
        assert_eq!(lg.apply(&v), v.neg());
        let l1 = alg.lift(&epsilon1());
        let e2 = JordanMatrix::e(1).coords(Kind::Octonionic);
        assert_eq!(l1.apply(&e2), e2);
        assert_eq!(l1.mul(&l1), lg);
    }

    #[test]
    fn lifted_automorphisms_preserve_structure() {
        let alg = JordanAlgebra::get(Kind::Octonionic);
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for m in [epsilon1(), epsilon2(), gamma()] {
            let l = alg.lift(&m);
            for _ in 0..5 {
                let a = random_j(&mut rng, Kind::Octonionic).coords(Kind::Octonionic);
                let b = random_j(&mut rng, Kind::Octonionic).coords(Kind::Octonionic);
                let (la, lb) = (l.apply(&a), l.apply(&b));
                assert_eq!(alg.mul(&la, &lb), l.apply(&alg.mul(&a, &b)));
                assert_eq!(alg.cross(&la, &lb), l.apply(&alg.cross(&a, &b)));
                assert_eq!(alg.inner(&la, &lb), alg.inner(&a, &b));
            }
        }
    }

    #[test]
    fn quaternionic_solvers() {
        let alg = JordanAlgebra::get(Kind::Quaternionic);
        let der = alg.derivation_basis();
        assert_eq!(der.len(), 21);
        let e6 = alg.e6_basis();
        assert_eq!(e6.len(), 35);
        let mut span = Echelon::new(alg.dim * alg.dim);
        for m in &e6 {
            span.insert(m.vectorize());
        }
        for d in &der {
            assert!(alg.is_derivation(d));
            assert!(span.contains(&d.vectorize()));
        }
    }

    #[test]
    fn octonionic_solvers() {
        let alg = JordanAlgebra::get(Kind::Octonionic);
        let der = alg.derivation_basis();
        assert_eq!(der.len(), 52);
        let e6 = alg.e6_basis();
        assert_eq!(e6.len(), 78);
        let mut span = Echelon::new(alg.dim * alg.dim);
        for m in &e6 {
            span.insert(m.vectorize());
        }
        let mut der_span = Echelon::new(alg.dim * alg.dim);
        for d in &der {
            assert!(span.contains(&d.vectorize()));
            der_span.insert(d.vectorize());
        }
        for phi in e6.iter().take(20) {
            let (delta, t) = alg.split_e6(phi);
            assert!(alg.trace(&t).is_zero());
            assert!(der_span.contains(&delta.vectorize()));
        }
        // Members of the ε-fixed derivation algebra, as described by generators.
        let fixed_so8 = [
            g(0, 1),
            g(0, 2),
            g(0, 3),
            g(1, 2),
            g(1, 3),
            g(2, 3),
            g(4, 5).add(&g(6, 7)),
            g(4, 6).sub(&g(5, 7)),
            g(4, 7).add(&g(5, 6)),
        ];
        for d1 in &fixed_so8 {
            let t = triality_companions(d1).unwrap();
            let delta = alg.so8_triple([&t.d1, &t.d2, &t.d3]);
            assert!(alg.is_derivation(&delta));
            assert!(der_span.contains(&delta.vectorize()));
        }
        for k in 0..3 {
            for i in 0..4 {
                let a = alg.a_tilde(k, &e(i));
                assert!(der_span.contains(&a.vectorize()));
            }
        }
    }

    #[test]
    fn vee_like_commutators_are_derivations() {
        let alg = JordanAlgebra::get(Kind::Quaternionic);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let a = random_svec(&mut rng, alg.dim, 0.5);
            let b = random_svec(&mut rng, alg.dim, 0.5);
            assert!(alg.is_derivation(&alg.lmul(&a).commutator(&alg.lmul(&b))));
        }
        let mut t = random_svec(&mut rng, alg.dim, 0.5);
        t = t.axpy(&-alg.trace(&t).scale(&Rational::new(1, 3)), &alg.identity());
        assert!(alg.is_e6(&alg.lmul(&t)));
        assert!(!alg.is_derivation(&alg.lmul(&t)) || t.is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn jordan_identity(seed in 0u64..10_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let alg = JordanAlgebra::get(Kind::Octonionic);
            let x = random_svec(&mut rng, alg.dim, 0.5);
            let y = random_svec(&mut rng, alg.dim, 0.5);
            let xx = alg.mul(&x, &x);
            prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &xx), alg.mul(&x, &alg.mul(&y, &xx)));
            prop_assert_eq!(alg.mul(&x, &y), alg.mul(&y, &x));
        }

        #[test]
        fn forms_are_symmetric_and_det_is_cubic(seed in 0u64..10_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let kind = Kind::Quaternionic;
            let (x, y, z) = (random_j(&mut rng, kind), random_j(&mut rng, kind), random_j(&mut rng, kind));
            prop_assert_eq!(x.inner(&y), y.inner(&x));
            let t = x.trilinear(&y, &z);
            prop_assert_eq!(&t, &y.trilinear(&z, &x));
            prop_assert_eq!(&t, &z.trilinear(&y, &x));
            let a = small_complex(&mut rng);
            prop_assert_eq!(x.scale(&a).det(), &a.pow(3) * &x.det());
        }
    }
}
