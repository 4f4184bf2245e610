//! The Freudenthal space 𝔓ᶜ = 𝔍ᶜ ⊕ 𝔍ᶜ ⊕ C ⊕ C, the operators Φ(φ, A, B, ν)
//! spanning 𝔢₇ᶜ, the cross product P×Q and the maps λ, τλ.

use crate::jordan::{JordanAlgebra, Kind};
use crate::linalg::{SVec, SpMat};
use crate::scalar::{Complex, Rational};

/// P = (X, Y, ξ, η) with X, Y in Jordan coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FVec {
    pub x: SVec,
    pub y: SVec,
    pub xi: Complex,
    pub eta: Complex,
}

impl FVec {
    pub fn zero() -> FVec {
        FVec::default()
    }

    /// Ẋ = (X, 0, 0, 0).
    pub fn dot_x(x: SVec) -> FVec {
        FVec { x, ..FVec::zero() }
    }

    /// Ẏ-style embedding (0, Y, 0, 0).
    pub fn under_y(y: SVec) -> FVec {
        FVec { y, ..FVec::zero() }
    }

    /// 1̇ = (0, 0, 1, 0).
    pub fn one_dot() -> FVec {
        FVec { xi: Complex::ONE, ..FVec::zero() }
    }

    /// 1̣ = (0, 0, 0, 1).
    pub fn one_under() -> FVec {
        FVec { eta: Complex::ONE, ..FVec::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.xi.is_zero() && self.eta.is_zero()
    }

    pub fn add(&self, o: &FVec) -> FVec {
        FVec { x: self.x.add(&o.x), y: self.y.add(&o.y), xi: &self.xi + &o.xi, eta: &self.eta + &o.eta }
    }

    pub fn sub(&self, o: &FVec) -> FVec {
        FVec { x: self.x.sub(&o.x), y: self.y.sub(&o.y), xi: &self.xi - &o.xi, eta: &self.eta - &o.eta }
    }

    pub fn scale(&self, a: &Complex) -> FVec {
        FVec { x: self.x.scale(a), y: self.y.scale(a), xi: &self.xi * a, eta: &self.eta * a }
    }

    pub fn axpy(&self, a: &Complex, o: &FVec) -> FVec {
        self.add(&o.scale(a))
    }

    pub fn neg(&self) -> FVec {
        self.scale(&-Complex::ONE)
    }

    pub fn tau(&self) -> FVec {
        FVec { x: self.x.tau(), y: self.y.tau(), xi: self.xi.tau(), eta: self.eta.tau() }
    }

    /// λ(X, Y, ξ, η) = (Y, −X, η, −ξ).
    pub fn lambda(&self) -> FVec {
        FVec { x: self.y.clone(), y: self.x.neg(), xi: self.eta.clone(), eta: -&self.xi }
    }
}

/// Φ(φ, A, B, ν) ∈ 𝔢₇ᶜ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E7Op {
    pub phi: SpMat,
    pub a: SVec,
    pub b: SVec,
    pub nu: Complex,
}

impl E7Op {
    pub fn zero(jdim: usize) -> E7Op {
        E7Op { phi: SpMat::zeros(jdim, jdim), a: SVec::new(), b: SVec::new(), nu: Complex::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.a.is_zero() && self.b.is_zero() && self.nu.is_zero()
    }

    pub fn add(&self, o: &E7Op) -> E7Op {
        E7Op { phi: self.phi.add(&o.phi), a: self.a.add(&o.a), b: self.b.add(&o.b), nu: &self.nu + &o.nu }
    }

    pub fn sub(&self, o: &E7Op) -> E7Op {
        E7Op { phi: self.phi.sub(&o.phi), a: self.a.sub(&o.a), b: self.b.sub(&o.b), nu: &self.nu - &o.nu }
    }

    pub fn scale(&self, c: &Complex) -> E7Op {
        E7Op { phi: self.phi.scale(c), a: self.a.scale(c), b: self.b.scale(c), nu: &self.nu * c }
    }

    pub fn axpy(&self, c: &Complex, o: &E7Op) -> E7Op {
        if c.is_zero() {
            return self.clone();
        }
        E7Op { phi: self.phi.axpy(c, &o.phi), a: self.a.axpy(c, &o.a), b: self.b.axpy(c, &o.b), nu: &self.nu + &(c * &o.nu) }
    }

    pub fn tau(&self) -> E7Op {
        E7Op { phi: self.phi.tau(), a: self.a.tau(), b: self.b.tau(), nu: self.nu.tau() }
    }
}

/// Operations on 𝔓ᶜ over a fixed Jordan algebra.
#[derive(Clone, Copy, Debug)]
pub struct Freudenthal {
    pub kind: Kind,
    pub j: &'static JordanAlgebra,
}

impl Freudenthal {
    pub fn new(kind: Kind) -> Freudenthal {
        Freudenthal { kind, j: JordanAlgebra::get(kind) }
    }

    pub fn jdim(&self) -> usize {
        self.j.dim
    }

    /// dim 𝔓ᶜ = 2·dim 𝔍ᶜ + 2.
    pub fn dim(&self) -> usize {
        2 * self.j.dim + 2
    }

    pub fn coords(&self, p: &FVec) -> SVec {
        let d = self.j.dim;
        let mut v = p.x.clone();
        v.0.extend(p.y.shifted(d).0);
        if !p.xi.is_zero() {
            v.0.push((2 * d, p.xi.clone()));
        }
        if !p.eta.is_zero() {
            v.0.push((2 * d + 1, p.eta.clone()));
        }
        v
    }

    pub fn from_coords(&self, v: &SVec) -> FVec {
        let d = self.j.dim;
        FVec { x: v.slice(0, d), y: v.slice(d, 2 * d), xi: v.get(2 * d), eta: v.get(2 * d + 1) }
    }

    /// (P, Q) = (X,Z) + (Y,W) + ξζ + ηω.
    pub fn inner(&self, p: &FVec, q: &FVec) -> Complex {
        let j = self.j;
        &(&j.inner(&p.x, &q.x) + &j.inner(&p.y, &q.y)) + &(&(&p.xi * &q.xi) + &(&p.eta * &q.eta))
    }

    /// {P, Q} = (X,W) − (Y,Z) + ξω − ηζ.
    pub fn skew(&self, p: &FVec, q: &FVec) -> Complex {
        let j = self.j;
        &(&j.inner(&p.x, &q.y) - &j.inner(&p.y, &q.x)) + &(&(&p.xi * &q.eta) - &(&p.eta * &q.xi))
    }

    /// Φ(φ, A, B, ν)(X, Y, ξ, η).
    pub fn apply(&self, op: &E7Op, p: &FVec) -> FVec {
        let j = self.j;
        let third = Complex::frac(1, 3);
        let two = Complex::int(2);
        let nu3 = &op.nu * &third;
        let x = op
            .phi
            .apply(&p.x)
            .axpy(&-&nu3, &p.x)
            .axpy(&two, &j.cross(&op.b, &p.y))
            .axpy(&p.eta, &op.a);
        let y = j
            .cross(&op.a, &p.x)
            .scale(&two)
            .sub(&j.transpose(&op.phi).apply(&p.y))
            .axpy(&nu3, &p.y)
            .axpy(&p.xi, &op.b);
        let xi = &j.inner(&op.a, &p.y) + &(&op.nu * &p.xi);
        let eta = &j.inner(&op.b, &p.x) - &(&op.nu * &p.eta);
        FVec { x, y, xi, eta }
    }

    /// The operator as a matrix on 𝔓ᶜ coordinates.
    pub fn matrix(&self, op: &E7Op) -> SpMat {
        let n = self.dim();
        let cols: Vec<SVec> = (0..n).map(|k| self.coords(&self.apply(op, &self.from_coords(&SVec::unit(k))))).collect();
        SpMat::from_columns(n, &cols)
    }

    /// Reads (φ, A, B, ν) back from a matrix in 𝔢₇ᶜ: ν and B from the image
    /// of 1̇, A from the image of 1̣, φ from the X-block.
    pub fn decompose(&self, m: &SpMat) -> E7Op {
        let d = self.j.dim;
        let col_xi = m.column(2 * d);
        let col_eta = m.column(2 * d + 1);
        let nu = col_xi.get(2 * d);
        let b = col_xi.slice(d, 2 * d);
        let a = col_eta.slice(0, d);
        let phi = m.block(0, d, 0, d).add(&SpMat::scalar(d, &nu.scale(&Rational::new(1, 3))));
        E7Op { phi, a, b, nu }
    }

    /// X ∨ W = [X̃, W̃] + (X∘W − ⅓(X,W)E)~.
    pub fn vee(&self, x: &SVec, w: &SVec) -> SpMat {
        let j = self.j;
        let t = j.mul(x, w).axpy(&-j.inner(x, w).scale(&Rational::new(1, 3)), &j.identity());
        j.lmul(x).commutator(&j.lmul(w)).add(&j.lmul(&t))
    }

    /// P × Q for P = (X, Y, ξ, η), Q = (Z, W, ζ, ω).
    pub fn cross(&self, p: &FVec, q: &FVec) -> E7Op {
        let j = self.j;
        let (x, y, xi, eta) = (&p.x, &p.y, &p.xi, &p.eta);
        let (z, w, zeta, omega) = (&q.x, &q.y, &q.xi, &q.eta);
        let phi = self.vee(x, w).add(&self.vee(z, y)).scale(&Complex::frac(-1, 2));
        let a = j
            .cross(y, w)
            .scale(&Complex::int(2))
            .axpy(&-xi, z)
            .axpy(&-zeta, x)
            .scale(&Complex::frac(-1, 4));
        let b = j
            .cross(x, z)
            .scale(&Complex::int(2))
            .axpy(&-eta, w)
            .axpy(&-omega, y)
            .scale(&Complex::frac(1, 4));
        let s = &(&(xi * omega) + &(zeta * eta)) * &Complex::int(3);
        let nu = (&(&j.inner(x, w) + &j.inner(z, y)) - &s).scale(&Rational::new(1, 8));
        E7Op { phi, a, b, nu }
    }

    /// [Φ₁, Φ₂] computed as a commutator of 𝔓ᶜ-matrices.
    pub fn bracket(&self, p1: &E7Op, p2: &E7Op) -> E7Op {
        if p1.is_zero() || p2.is_zero() {
            return E7Op::zero(self.j.dim);
        }
        let (m1, m2) = (self.matrix(p1), self.matrix(p2));
        self.decompose(&m1.commutator(&m2))
    }

    /// The matrix of λ on 𝔓ᶜ coordinates.
    pub fn lambda_matrix(&self) -> SpMat {
        let n = self.dim();
        let cols: Vec<SVec> = (0..n).map(|k| self.coords(&self.from_coords(&SVec::unit(k)).lambda())).collect();
        SpMat::from_columns(n, &cols)
    }

    /// The matrix of an F₄-type map acting as (LX, LY, ξ, η).
    pub fn diagonal_lift(&self, l: &SpMat) -> SpMat {
        let d = self.j.dim;
        let n = self.dim();
        let mut triples = Vec::new();
        for (i, row) in l.data.iter().enumerate() {
            for (k, a) in row.iter() {
                triples.push((i, *k, a.clone()));
                triples.push((d + i, d + k, a.clone()));
            }
        }
        triples.push((2 * d, 2 * d, Complex::ONE));
        triples.push((2 * d + 1, 2 * d + 1, Complex::ONE));
        SpMat::from_triples(n, n, triples)
    }

    /// Ψ ↦ gΨg⁻¹ on an operator, via matrices.
    pub fn conjugate(&self, g: &SpMat, g_inv: &SpMat, op: &E7Op) -> E7Op {
        self.decompose(&g.mul(&self.matrix(op)).mul(g_inv))
    }
}
