//! Lie algebras given by explicit realizations (operators on 𝔍ᶜ, on 𝔓ᶜ, and
//! the six-component 𝔢₈ᶜ), their subalgebras with exact structure constants,
//! fixed subalgebras of automorphisms and real forms of semilinear involutions.

use thiserror::Error;

use crate::freudenthal::{E7Op, FVec, Freudenthal};
use crate::jordan::{basis_label, Kind};
use crate::linalg::{Coordinatizer, Echelon, LinalgError, Mat, SVec, SpMat};
use crate::scalar::{Complex, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("element is not in {0}")]
    NotInSpan(String),
    #[error("bracket of basis elements {0} and {1} leaves the subalgebra")]
    NotClosed(usize, usize),
    #[error("{0} does not preserve the bracket")]
    NotAutomorphism(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A Lie algebra realized concretely, with a coordinate system on it.
pub trait Ambient {
    type Elem: Clone;
    /// A form of an element that makes repeated brackets cheaper.
    type Prepared;

    fn dim(&self) -> usize;
    fn coord_label(&self, i: usize) -> String;
    fn coords(&self, x: &Self::Elem) -> Result<SVec, LieError>;
    fn element(&self, v: &SVec) -> Self::Elem;
    fn prepare(&self, x: &Self::Elem) -> Self::Prepared;
    fn bracket_prepared(&self, x: &Self::Prepared, y: &Self::Prepared) -> Self::Elem;

    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.bracket_prepared(&self.prepare(x), &self.prepare(y))
    }

    fn bracket_coords(&self, x: &SVec, y: &SVec) -> Result<SVec, LieError> {
        self.coords(&self.bracket(&self.element(x), &self.element(y)))
    }

    /// Readable form of a coordinate vector.
    fn describe(&self, v: &SVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.iter().map(|(i, a)| format!("({a}){}", self.coord_label(*i))).collect::<Vec<_>>().join(" + ")
    }

    /// The element with coordinates `v`, written out in its natural model where
    /// basis indices alone would say little. Defaults to `describe`.
    fn render(&self, v: &SVec) -> String {
        self.describe(v)
    }
}

/// ad x in ambient coordinates: column k is [x, b_k].
pub fn ambient_ad<A: Ambient>(amb: &A, x: &A::Elem) -> Result<SpMat, LieError> {
    let px = amb.prepare(x);
    let cols = (0..amb.dim())
        .map(|k| amb.coords(&amb.bracket_prepared(&px, &amb.prepare(&amb.element(&SVec::unit(k))))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpMat::from_columns(amb.dim(), &cols))
}

/// tr(ad x ∘ ad y) over the whole ambient algebra.
pub fn ambient_killing<A: Ambient>(amb: &A, x: &A::Elem, y: &A::Elem) -> Result<Complex, LieError> {
    Ok(ambient_ad(amb, x)?.trace_product(&ambient_ad(amb, y)?))
}

/// A matrix Lie algebra with a fixed basis (𝔣₄ᶜ, 𝔢₆ᶜ acting on 𝔍ᶜ).
#[derive(Debug)]
pub struct MatrixLie {
    pub label: String,
    pub n: usize,
    pub basis: Vec<SpMat>,
    coord: Coordinatizer,
}

impl MatrixLie {
    pub fn new(label: impl Into<String>, n: usize, basis: Vec<SpMat>) -> Result<MatrixLie, LieError> {
        let vecs: Vec<SVec> = basis.iter().map(SpMat::vectorize).collect();
        let coord = Coordinatizer::new(n * n, &vecs)?;
        Ok(MatrixLie { label: label.into(), n, basis, coord })
    }
}

impl Ambient for MatrixLie {
    type Elem = SpMat;
    type Prepared = SpMat;

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coord_label(&self, i: usize) -> String {
        format!("{}[{i}]", self.label)
    }

    fn coords(&self, x: &SpMat) -> Result<SVec, LieError> {
        self.coord.coords(&x.vectorize()).map_err(|_| LieError::NotInSpan(self.label.clone()))
    }

    fn element(&self, v: &SVec) -> SpMat {
        v.iter().fold(SpMat::zeros(self.n, self.n), |acc, (k, a)| acc.axpy(a, &self.basis[*k]))
    }

    fn prepare(&self, x: &SpMat) -> SpMat {
        x.clone()
    }

    fn bracket_prepared(&self, x: &SpMat, y: &SpMat) -> SpMat {
        x.commutator(y)
    }

    /// The action on the basis of 𝔍ᶜ: "E2 -> (i)F1(e3) + ..." per moved basis element.
    fn render(&self, v: &SVec) -> String {
        let kind = if self.n == 27 { Kind::Octonionic } else { Kind::Quaternionic };
        let cols = self.element(v).transpose();
        let parts: Vec<String> = (0..self.n)
            .filter_map(|j| {
                let col = &cols.data[j];
                (!col.is_zero()).then(|| {
                    let image: Vec<String> = col.iter().map(|(i, a)| format!("({a}){}", basis_label(kind, *i))).collect();
                    format!("{} -> {}", basis_label(kind, j), image.join(" + "))
                })
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("; ")
        }
    }
}

/// Renders the first `m` coordinates through `inner` and the rest through `label`.
fn render_split(v: &SVec, m: usize, inner: impl Fn(&SVec) -> String, label: impl Fn(usize) -> String) -> String {
    let head = SVec::from_pairs(v.iter().filter(|(i, _)| *i < m).cloned().collect::<Vec<_>>());
    let mut parts = Vec::new();
    if !head.is_zero() {
        parts.push(format!("[{}]", inner(&head)));
    }
    parts.extend(v.iter().filter(|(i, _)| *i >= m).map(|(i, a)| format!("({a}){}", label(*i))));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// 𝔢₇ᶜ (or its quaternionic version) as 𝔢₆ᶜ ⊕ 𝔍ᶜ ⊕ 𝔍ᶜ ⊕ C.
#[derive(Debug)]
pub struct E7Lie {
    pub f: Freudenthal,
    pub e6: &'static MatrixLie,
}

impl E7Lie {
    fn jdim(&self) -> usize {
        self.f.jdim()
    }

    /// Φ ↦ gΦg⁻¹ for g = λ, combined with τ: the involution τλ.
    pub fn tau_lambda(&self, op: &E7Op) -> E7Op {
        let l = self.f.lambda_matrix();
        self.f.conjugate(&l, &l.neg(), &op.tau())
    }

    /// Φ ↦ (L⊕L⊕1⊕1)Φ(L⊕L⊕1⊕1)⁻¹ for an automorphism L of 𝔍ᶜ.
    pub fn conjugate_by_jordan(&self, l: &SpMat, l_inv: &SpMat, op: &E7Op) -> E7Op {
        self.f.conjugate(&self.f.diagonal_lift(l), &self.f.diagonal_lift(l_inv), op)
    }
}

impl Ambient for E7Lie {
    fn render(&self, v: &SVec) -> String {
        render_split(v, self.e6.dim(), |h| self.e6.render(h), |i| self.coord_label(i))
    }

    type Elem = E7Op;
    type Prepared = (E7Op, SpMat);

    fn dim(&self) -> usize {
        self.e6.dim() + 2 * self.jdim() + 1
    }

    fn coord_label(&self, i: usize) -> String {
        let (m, d) = (self.e6.dim(), self.jdim());
        if i < m {
            self.e6.coord_label(i)
        } else if i < m + d {
            format!("A:{}", basis_label(self.f.kind, i - m))
        } else if i < m + 2 * d {
            format!("B:{}", basis_label(self.f.kind, i - m - d))
        } else {
            "nu".into()
        }
    }

    fn coords(&self, op: &E7Op) -> Result<SVec, LieError> {
        let (m, d) = (self.e6.dim(), self.jdim());
        let mut v = self.e6.coords(&op.phi)?;
        v.0.extend(op.a.shifted(m).0);
        v.0.extend(op.b.shifted(m + d).0);
        if !op.nu.is_zero() {
            v.0.push((m + 2 * d, op.nu.clone()));
        }
        Ok(v)
    }

    fn element(&self, v: &SVec) -> E7Op {
        let (m, d) = (self.e6.dim(), self.jdim());
        E7Op { phi: self.e6.element(&v.slice(0, m)), a: v.slice(m, m + d), b: v.slice(m + d, m + 2 * d), nu: v.get(m + 2 * d) }
    }

    fn prepare(&self, x: &E7Op) -> (E7Op, SpMat) {
        (x.clone(), self.f.matrix(x))
    }

    fn bracket_prepared(&self, x: &(E7Op, SpMat), y: &(E7Op, SpMat)) -> E7Op {
        if x.0.is_zero() || y.0.is_zero() {
            return E7Op::zero(self.jdim());
        }
        self.f.decompose(&x.1.commutator(&y.1))
    }
}

/// R = (Φ, P, Q, r, s, t) ∈ 𝔢₈ᶜ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E8Elem {
    pub phi: E7Op,
    pub p: FVec,
    pub q: FVec,
    pub r: Complex,
    pub s: Complex,
    pub t: Complex,
}

impl E8Elem {
    pub fn zero(jdim: usize) -> E8Elem {
        E8Elem {
            phi: E7Op::zero(jdim),
            p: FVec::zero(),
            q: FVec::zero(),
            r: Complex::ZERO,
            s: Complex::ZERO,
            t: Complex::ZERO,
        }
    }

    /// Φ = (Φ, 0, 0, 0, 0, 0).
    pub fn from_phi(phi: E7Op) -> E8Elem {
        let d = phi.phi.rows;
        E8Elem { phi, ..E8Elem::zero(d) }
    }

    /// P⁻ = (0, P, 0, 0, 0, 0).
    pub fn p_upper(jdim: usize, p: FVec) -> E8Elem {
        E8Elem { p, ..E8Elem::zero(jdim) }
    }

    /// Q₋ = (0, 0, Q, 0, 0, 0).
    pub fn q_lower(jdim: usize, q: FVec) -> E8Elem {
        E8Elem { q, ..E8Elem::zero(jdim) }
    }

    /// r̃ = (0, 0, 0, r, 0, 0).
    pub fn r_tilde(jdim: usize, r: Complex) -> E8Elem {
        E8Elem { r, ..E8Elem::zero(jdim) }
    }

    /// s⁻ = (0, 0, 0, 0, s, 0).
    pub fn s_upper(jdim: usize, s: Complex) -> E8Elem {
        E8Elem { s, ..E8Elem::zero(jdim) }
    }

    /// t₋ = (0, 0, 0, 0, 0, t).
    pub fn t_lower(jdim: usize, t: Complex) -> E8Elem {
        E8Elem { t, ..E8Elem::zero(jdim) }
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.p.is_zero() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    pub fn add(&self, o: &E8Elem) -> E8Elem {
        E8Elem {
            phi: self.phi.add(&o.phi),
            p: self.p.add(&o.p),
            q: self.q.add(&o.q),
            r: &self.r + &o.r,
            s: &self.s + &o.s,
            t: &self.t + &o.t,
        }
    }

    pub fn sub(&self, o: &E8Elem) -> E8Elem {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Complex) -> E8Elem {
        E8Elem {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: &self.r * c,
            s: &self.s * c,
            t: &self.t * c,
        }
    }

    pub fn axpy(&self, c: &Complex, o: &E8Elem) -> E8Elem {
        self.add(&o.scale(c))
    }

    pub fn neg(&self) -> E8Elem {
        self.scale(&-Complex::ONE)
    }

    pub fn tau(&self) -> E8Elem {
        E8Elem {
            phi: self.phi.tau(),
            p: self.p.tau(),
            q: self.q.tau(),
            r: self.r.tau(),
            s: self.s.tau(),
            t: self.t.tau(),
        }
    }
}

/// 𝔢₈ᶜ (or its quaternionic version) with the six-part bracket.
#[derive(Debug)]
pub struct E8Lie {
    pub e7: &'static E7Lie,
}

impl E8Lie {
    pub fn f(&self) -> &Freudenthal {
        &self.e7.f
    }

    pub fn jdim(&self) -> usize {
        self.e7.f.jdim()
    }

    fn phi_apply(&self, m: &SpMat, p: &FVec) -> FVec {
        if p.is_zero() {
            return FVec::zero();
        }
        let f = self.f();
        f.from_coords(&m.apply(&f.coords(p)))
    }

    fn cross(&self, p: &FVec, q: &FVec) -> E7Op {
        if p.is_zero() || q.is_zero() {
            return E7Op::zero(self.jdim());
        }
        self.f().cross(p, q)
    }

    /// λ_ω(Φ, P, Q, r, s, t) = (λΦλ⁻¹, λQ, −λP, −r, −t, −s).
    pub fn lambda_omega(&self, x: &E8Elem) -> E8Elem {
        let l = self.f().lambda_matrix();
        E8Elem {
            phi: self.f().conjugate(&l, &l.neg(), &x.phi),
            p: x.q.lambda(),
            q: x.p.lambda().neg(),
            r: -&x.r,
            s: -&x.t,
            t: -&x.s,
        }
    }

    /// The involution τλ_ω.
    pub fn tau_lambda_omega(&self, x: &E8Elem) -> E8Elem {
        self.lambda_omega(&x.tau())
    }

    /// Componentwise action of an automorphism L of 𝔍ᶜ:
    /// ((ad L)Φ, LP, LQ, r, s, t) with L acting on 𝔓ᶜ as (LX, LY, ξ, η).
    pub fn conjugate_by_jordan(&self, l: &SpMat, l_inv: &SpMat, x: &E8Elem) -> E8Elem {
        let g = self.f().diagonal_lift(l);
        E8Elem {
            phi: self.e7.conjugate_by_jordan(l, l_inv, &x.phi),
            p: self.phi_apply(&g, &x.p),
            q: self.phi_apply(&g, &x.q),
            r: x.r.clone(),
            s: x.s.clone(),
            t: x.t.clone(),
        }
    }
}

impl Ambient for E8Lie {
    fn render(&self, v: &SVec) -> String {
        render_split(v, self.e7.dim(), |h| format!("Phi: {}", self.e7.render(h)), |i| self.coord_label(i))
    }

    type Elem = E8Elem;
    type Prepared = (E8Elem, SpMat);

    fn dim(&self) -> usize {
        self.e7.dim() + 2 * self.f().dim() + 3
    }

    fn coord_label(&self, i: usize) -> String {
        let (m, n) = (self.e7.dim(), self.f().dim());
        let d = self.jdim();
        let pvec = |k: usize| match k {
            k if k < d => format!("X:{}", basis_label(self.f().kind, k)),
            k if k < 2 * d => format!("Y:{}", basis_label(self.f().kind, k - d)),
            k if k == 2 * d => "xi".to_string(),
            _ => "eta".to_string(),
        };
        match i {
            i if i < m => format!("Phi.{}", self.e7.coord_label(i)),
            i if i < m + n => format!("P.{}", pvec(i - m)),
            i if i < m + 2 * n => format!("Q.{}", pvec(i - m - n)),
            i if i == m + 2 * n => "r".into(),
            i if i == m + 2 * n + 1 => "s".into(),
            _ => "t".into(),
        }
    }

    fn coords(&self, x: &E8Elem) -> Result<SVec, LieError> {
        let (m, n) = (self.e7.dim(), self.f().dim());
        let mut v = self.e7.coords(&x.phi)?;
        v.0.extend(self.f().coords(&x.p).shifted(m).0);
        v.0.extend(self.f().coords(&x.q).shifted(m + n).0);
        for (k, c) in [&x.r, &x.s, &x.t].into_iter().enumerate() {
            if !c.is_zero() {
                v.0.push((m + 2 * n + k, c.clone()));
            }
        }
        Ok(v)
    }

    fn element(&self, v: &SVec) -> E8Elem {
        let (m, n) = (self.e7.dim(), self.f().dim());
        E8Elem {
            phi: self.e7.element(&v.slice(0, m)),
            p: self.f().from_coords(&v.slice(m, m + n)),
            q: self.f().from_coords(&v.slice(m + n, m + 2 * n)),
            r: v.get(m + 2 * n),
            s: v.get(m + 2 * n + 1),
            t: v.get(m + 2 * n + 2),
        }
    }

    fn prepare(&self, x: &E8Elem) -> (E8Elem, SpMat) {
        (x.clone(), self.f().matrix(&x.phi))
    }

    fn bracket_prepared(&self, a: &(E8Elem, SpMat), b: &(E8Elem, SpMat)) -> E8Elem {
        let (x, mx) = a;
        let (y, my) = b;
        let f = self.f();
        let quarter = Complex::frac(1, 4);
        let eighth = Complex::frac(1, 8);
        let two = Complex::int(2);

        let mut phi = if x.phi.is_zero() || y.phi.is_zero() {
            E7Op::zero(self.jdim())
        } else {
            f.decompose(&mx.commutator(my))
        };
        phi = phi.add(&self.cross(&x.p, &y.q)).sub(&self.cross(&y.p, &x.q));

        let p = self
            .phi_apply(mx, &y.p)
            .sub(&self.phi_apply(my, &x.p))
            .axpy(&x.r, &y.p)
            .axpy(&-&y.r, &x.p)
            .axpy(&x.s, &y.q)
            .axpy(&-&y.s, &x.q);
        let q = self
            .phi_apply(mx, &y.q)
            .sub(&self.phi_apply(my, &x.q))
            .axpy(&-&x.r, &y.q)
            .axpy(&y.r, &x.q)
            .axpy(&x.t, &y.p)
            .axpy(&-&y.t, &x.p);
        let r = &(&(&f.skew(&y.p, &x.q) - &f.skew(&x.p, &y.q)) * &eighth) + &(&(&x.s * &y.t) - &(&y.s * &x.t));
        let s = &(&f.skew(&x.p, &y.p) * &quarter) + &(&(&(&x.r * &y.s) - &(&y.r * &x.s)) * &two);
        let t = &(&f.skew(&x.q, &y.q) * &-&quarter) + &(&(&(&y.r * &x.t) - &(&x.r * &y.t)) * &two);
        E8Elem { phi, p, q, r, s, t }
    }
}

/// Exact structure constants in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub label: String,
    pub dim: usize,
    table: Vec<Vec<SVec>>,
    ad: Vec<SpMat>,
    ad_t: Vec<SpMat>,
}

impl LieAlgebra {
    /// `upper` lists [b_i, b_j] for i < j in row-major order.
    pub fn from_upper(label: impl Into<String>, dim: usize, upper: Vec<SVec>) -> LieAlgebra {
        let mut table = vec![vec![SVec::new(); dim]; dim];
        let mut it = upper.into_iter();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = it.next().expect("structure constants are complete");
                table[j][i] = v.neg();
                table[i][j] = v;
            }
        }
        let ad: Vec<SpMat> = table.iter().map(|row| SpMat::from_columns(dim, row)).collect();
        let ad_t = ad.iter().map(SpMat::transpose).collect();
        LieAlgebra { label: label.into(), dim, table, ad, ad_t }
    }

    pub fn structure(&self, i: usize, j: usize) -> &SVec {
        &self.table[i][j]
    }

    /// Nonzero structure constants c_{ij}^k for i < j.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Complex)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, a) in self.table[i][j].iter() {
                    out.push((i, j, *k, a.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &SVec, y: &SVec) -> SVec {
        let mut terms = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if i != j {
                    terms.push((a * b, &self.table[*i][*j]));
                }
            }
        }
        SVec::combination(terms.iter().map(|(c, v)| (c, *v)))
    }

    pub fn ad_basis(&self, i: usize) -> &SpMat {
        &self.ad[i]
    }

    pub fn ad(&self, x: &SVec) -> SpMat {
        x.iter().fold(SpMat::zeros(self.dim, self.dim), |acc, (i, a)| acc.axpy(a, &self.ad[*i]))
    }

    /// B(x, y) = tr(ad x ∘ ad y).
    pub fn killing(&self, x: &SVec, y: &SVec) -> Complex {
        let mut acc = Complex::ZERO;
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc += &(&(a * b) * &self.killing_basis(*i, *j));
            }
        }
        acc
    }

    pub fn killing_basis(&self, i: usize, j: usize) -> Complex {
        self.ad[i].data.iter().zip(&self.ad_t[j].data).map(|(a, b)| a.dot(b)).sum()
    }

    pub fn killing_gram(&self) -> Mat {
        let mut g = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let b = self.killing_basis(i, j);
                g.set(j, i, b.clone());
                g.set(i, j, b);
            }
        }
        g
    }

    /// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
    pub fn jacobiator(&self, x: &SVec, y: &SVec, z: &SVec) -> SVec {
        self.bracket(x, &self.bracket(y, z))
            .add(&self.bracket(y, &self.bracket(z, x)))
            .add(&self.bracket(z, &self.bracket(x, y)))
    }

    /// Kernel of ad x.
    pub fn centralizer(&self, x: &SVec) -> Vec<SVec> {
        let mut ech = Echelon::new(self.dim);
        for row in &self.ad(x).data {
            if !row.is_zero() {
                ech.insert(row.clone());
            }
        }
        ech.nullspace()
    }
}

/// A subalgebra spanned by ambient coordinate vectors, with structure constants.
#[derive(Debug)]
pub struct Subalgebra<'a, A: Ambient> {
    pub amb: &'a A,
    pub basis: Vec<SVec>,
    coord: Coordinatizer,
    pub lie: LieAlgebra,
}

impl<'a, A: Ambient> Subalgebra<'a, A> {
    pub fn new(amb: &'a A, label: impl Into<String>, basis: Vec<SVec>) -> Result<Self, LieError> {
        let label = label.into();
        let coord = Coordinatizer::new(amb.dim(), &basis)?;
        let prepared: Vec<A::Prepared> = basis.iter().map(|v| amb.prepare(&amb.element(v))).collect();
        let n = basis.len();
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let v = amb.coords(&amb.bracket_prepared(&prepared[i], &prepared[j]))?;
                upper.push(coord.coords(&v).map_err(|_| LieError::NotClosed(i, j))?);
            }
        }
        let lie = LieAlgebra::from_upper(label, n, upper);
        Ok(Subalgebra { amb, basis, coord, lie })
    }

    /// Reassembles a subalgebra from previously computed structure constants.
    pub fn from_parts(amb: &'a A, basis: Vec<SVec>, lie: LieAlgebra) -> Result<Self, LieError> {
        let coord = Coordinatizer::new(amb.dim(), &basis)?;
        Ok(Subalgebra { amb, basis, coord, lie })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self) -> &str {
        &self.lie.label
    }

    pub fn coords_ambient(&self, v: &SVec) -> Result<SVec, LieError> {
        self.coord.coords(v).map_err(|_| LieError::NotInSpan(self.lie.label.clone()))
    }

    pub fn coords(&self, x: &A::Elem) -> Result<SVec, LieError> {
        self.coords_ambient(&self.amb.coords(x)?)
    }

    pub fn ambient_vec(&self, c: &SVec) -> SVec {
        SVec::combination(c.iter().map(|(k, a)| (a, &self.basis[*k])))
    }

    pub fn element(&self, c: &SVec) -> A::Elem {
        self.amb.element(&self.ambient_vec(c))
    }

    pub fn basis_element(&self, k: usize) -> A::Elem {
        self.amb.element(&self.basis[k])
    }

    pub fn descriptors(&self) -> Vec<String> {
        self.basis.iter().map(|v| self.amb.describe(v)).collect()
    }

    /// Matrix of a linear map of the ambient algebra preserving this subalgebra.
    pub fn restrict(&self, map: &dyn Fn(&A::Elem) -> A::Elem) -> Result<SpMat, LieError> {
        let cols = (0..self.dim()).map(|k| self.coords(&map(&self.basis_element(k)))).collect::<Result<Vec<_>, _>>()?;
        Ok(SpMat::from_columns(self.dim(), &cols))
    }
}

/// Common fixed vectors of the given maps inside span(`within`), as ambient vectors.
pub fn fixed_subspace<A: Ambient>(
    amb: &A,
    within: &[SVec],
    maps: &[&dyn Fn(&A::Elem) -> A::Elem],
) -> Result<Vec<SVec>, LieError> {
    let n = amb.dim();
    let mut cols = Vec::with_capacity(within.len());
    for b in within {
        let x = amb.element(b);
        let mut parts = Vec::new();
        for m in maps {
            parts.push(amb.coords(&m(&x))?.sub(b));
        }
        cols.push(SVec::concat(&parts.iter().map(|v| (v, n)).collect::<Vec<_>>()));
    }
    let system = SpMat::from_columns(n * maps.len(), &cols);
    let mut ech = Echelon::new(within.len());
    for row in system.data {
        if !row.is_zero() {
            ech.insert(row);
        }
    }
    Ok(ech.nullspace().iter().map(|c| SVec::combination(c.iter().map(|(k, a)| (a, &within[*k])))).collect())
}

/// Checks φ[x, y] = [φx, φy] on the given pairs.
pub fn preserves_bracket<A: Ambient>(
    amb: &A,
    map: &dyn Fn(&A::Elem) -> A::Elem,
    pairs: &[(A::Elem, A::Elem)],
) -> Result<bool, LieError> {
    for (x, y) in pairs {
        let lhs = amb.coords(&map(&amb.bracket(x, y)))?;
        let rhs = amb.coords(&amb.bracket(&map(x), &map(y)))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fixed points of a conjugate-linear involution σ on a complex subalgebra.
#[derive(Clone, Debug)]
pub struct RealForm {
    /// Basis over ℚ, as complex coordinate vectors in the subalgebra.
    pub basis: Vec<SVec>,
    /// σ² = id on the subalgebra basis.
    pub involutive: bool,
}

impl RealForm {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Treats ℚ(i) as ℚ² and computes {c : σ(c) = c} where σ(Σ c_k b_k) = Σ τ(c_k) σ(b_k).
pub fn real_form<A: Ambient>(sub: &Subalgebra<A>, sigma: &dyn Fn(&A::Elem) -> A::Elem) -> Result<RealForm, LieError> {
    let n = sub.dim();
    let s = sub.restrict(sigma)?;
    // σ(σ(b)) = S τ(S e_k) must be e_k.
    let involutive = (0..n).all(|k| s.apply(&s.column(k).tau()) == SVec::unit(k));
    // c = u + iv: S_re u + S_im v = u and S_im u − S_re v = v.
    let mut ech = Echelon::new(2 * n);
    for i in 0..n {
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for (j, a) in s.data[i].iter() {
            let re = Complex::real(a.re.clone());
            let im = Complex::real(a.im.clone());
            top.push((*j, re.clone()));
            top.push((n + *j, im.clone()));
            bottom.push((*j, im));
            bottom.push((n + *j, -re));
        }
        top.push((i, -Complex::ONE));
        bottom.push((n + i, -Complex::ONE));
        for row in [top, bottom] {
            let v = SVec::from_pairs(row);
            if !v.is_zero() {
                ech.insert(v);
            }
        }
    }
    let basis = ech
        .nullspace()
        .iter()
        .map(|w| w.slice(0, n).add(&w.slice(n, 2 * n).scale(&Complex::I)))
        .collect();
    Ok(RealForm { basis, involutive })
}

/// The unique k with g1 = k·g2 entrywise, or the first violating pair.
pub fn proportionality(g1: &Mat, g2: &Mat) -> Result<Rational, (usize, usize)> {
    let n = g1.rows;
    let mut k: Option<Complex> = None;
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (g1.get(i, j), g2.get(i, j));
            if b.is_zero() {
                if !a.is_zero() {
                    return Err((i, j));
                }
                continue;
            }
            let q = a.checked_div(b).expect("nonzero divisor");
            match &k {
                None => k = Some(q),
                Some(k0) if *k0 != q => return Err((i, j)),
                _ => {}
            }
        }
    }
    match k {
        Some(k) if k.is_real() => Ok(k.re),
        Some(_) => Err((0, 0)),
        None => Ok(Rational::ZERO),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{e8_h, f4_h};
    use crate::linalg::{random_svec, small_complex};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// 𝔰𝔩₂ with basis (e, f, h): [e, f] = h, [e, h] = −2e, [f, h] = 2f.
    fn sl2() -> LieAlgebra {
        let upper = vec![SVec::unit(2), SVec::single(0, Complex::int(-2)), SVec::single(1, Complex::int(2))];
        LieAlgebra::from_upper("sl2", 3, upper)
    }

    #[test]
    fn sl2_killing_form_and_centralizer() {
        let g = sl2();
        let k = g.killing_gram();
        assert_eq!(*k.get(0, 1), Complex::int(4));
        assert_eq!(*k.get(2, 2), Complex::int(8));
        assert!(k.get(0, 0).is_zero() && k.get(0, 2).is_zero());
        assert_eq!(g.centralizer(&SVec::unit(2)), vec![SVec::unit(2)]);
        assert!(g.jacobiator(&SVec::unit(0), &SVec::unit(1), &SVec::unit(2)).is_zero());
        assert_eq!(g.bracket(&SVec::unit(1), &SVec::unit(0)), SVec::single(2, Complex::int(-1)));
    }

    #[test]
    fn proportionality_finds_the_constant_or_the_violation() {
        let mut a = Mat::zeros(2, 2);
        let mut b = Mat::zeros(2, 2);
        a.set(0, 0, Complex::int(6));
        b.set(0, 0, Complex::int(-2));
        a.set(1, 1, Complex::int(3));
        b.set(1, 1, Complex::int(-1));
        assert_eq!(proportionality(&a, &b), Ok(Rational::int(-3)));
        a.set(0, 1, Complex::ONE);
        assert_eq!(proportionality(&a, &b), Err((0, 1)));
    }

    #[test]
    fn one_tilde_is_the_grading_operator() {
        let amb = e8_h().amb;
        let jd = amb.jdim();
        let f = amb.f();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = f.from_coords(&random_svec(&mut rng, f.dim(), 0.3));
        let s = small_complex(&mut rng);
        let h = E8Elem::r_tilde(jd, Complex::ONE);
        let up = E8Elem::p_upper(jd, p.clone());
        let down = E8Elem::q_lower(jd, p);
        assert_eq!(amb.bracket(&h, &up), up);
        assert_eq!(amb.bracket(&h, &down), down.neg());
        assert_eq!(amb.bracket(&h, &E8Elem::s_upper(jd, s.clone())), E8Elem::s_upper(jd, &s * &Complex::int(2)));
        assert!(amb.bracket(&h, &h).is_zero());
    }

    #[test]
    fn coordinates_round_trip_through_elements() {
        let sub = e8_h();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..5 {
            let c = random_svec(&mut rng, sub.dim(), 0.1);
            assert_eq!(sub.coords(&sub.element(&c)).unwrap(), c);
        }
    }

    #[test]
    fn conjugation_fixes_a_rational_form() {
        let sub = f4_h();
        let rf = real_form(sub, &|x: &SpMat| x.tau()).unwrap();
        assert!(rf.involutive);
        assert_eq!(rf.dim(), sub.dim());
    }

    #[test]
    fn matrices_render_as_actions() {
        let sub = f4_h();
        assert_eq!(sub.amb.render(&SVec::new()), "0");
        let text = sub.amb.render(&sub.ambient_vec(&SVec::unit(0)));
        assert!(text.contains(" -> "), "{text}");
    }
}
