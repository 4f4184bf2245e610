//! Root systems of the ε₁, ε₂-fixed subalgebras of 𝔣₄ᶜ, 𝔢₆ᶜ, 𝔢₇ᶜ, 𝔢₈ᶜ
//! relative to explicit Cartan subalgebras.
//!
//! The roots are found without reference to any table: ad of a generic
//! Cartan element is split into eigenspaces (candidate eigenvalues from its
//! minimal polynomial modulo a prime, each one confirmed by an exact kernel
//! over ℚ(i)), and the roots are read off as the simultaneous eigenvalues of
//! the Cartan generators. Inner products come from the closed Killing forms.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebras::{e6, e6_eps, e7, e7_eps, e8, e8_eps, f4, f4_eps};
use crate::cayley::{g, triality_companions};
use crate::freudenthal::E7Op;
use crate::jordan::{JordanAlgebra, JordanMatrix, Kind};
use crate::killing::{b4, b6, b7, b8};
use crate::lie::{ambient_ad, Ambient, E8Elem, LieError, Subalgebra};
use crate::linalg::{Echelon, Mat, SVec, SpMat};
use crate::scalar::{Complex, Rational};
use crate::table::{Form, RootTable, E6_TABLE, E7_TABLE, E8_TABLE, F4_TABLE, VARIABLES};

#[derive(Debug, Error)]
pub enum RootError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("triality: {0}")]
    Triality(String),
    #[error("{0} is not a rational number")]
    NotRational(String),
    #[error("eigenspace decomposition failed: {0}")]
    Spectrum(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    F4,
    E6,
    E7,
    E8,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::F4, Level::E6, Level::E7, Level::E8];

    pub fn rank(self) -> usize {
        match self {
            Level::F4 => 3,
            Level::E6 => 5,
            Level::E7 => 6,
            Level::E8 => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Level::F4 => "f4",
            Level::E6 => "e6",
            Level::E7 => "e7",
            Level::E8 => "e8",
        }
    }

    pub fn table(self) -> RootTable {
        let text = match self {
            Level::F4 => F4_TABLE,
            Level::E6 => E6_TABLE,
            Level::E7 => E7_TABLE,
            Level::E8 => E8_TABLE,
        };
        RootTable::parse(text).expect("bundled tables parse")
    }

    pub fn generator_labels(self) -> Vec<&'static str> {
        ["H_l0", "H_l1", "H_l2", "H_m1", "H_m2", "H_m", "H_w"][..self.rank()].to_vec()
    }
}

/// λ₀(iG₀₁) + λ₁(iG₂₃) + λ₂(i(G₄₅ + G₆₇)).
pub fn so8_cartan(l: &[Rational; 3]) -> Mat {
    let i = |r: &Rational| Complex::new(Rational::ZERO, r.clone());
    g(0, 1).scale(&i(&l[0])).add(&g(2, 3).scale(&i(&l[1]))).add(&g(4, 5).add(&g(6, 7)).scale(&i(&l[2])))
}

/// δ(λ) = (L₁, L₂, L₃) acting on 𝔍(3, 𝔈ᶜ), with L₂, L₃ the triality companions of L₁.
pub fn delta(l: &[Rational; 3]) -> Result<SpMat, RootError> {
    let t = triality_companions(&so8_cartan(l)).map_err(|e| RootError::Triality(e.to_string()))?;
    Ok(JordanAlgebra::get(Kind::Octonionic).so8_triple([&t.d1, &t.d2, &t.d3]))
}

/// L₂, L₃ for δ(λ) written out:
/// L₂ = ½((−λ₀+λ₁+2λ₂)iG₀₁ + (−λ₀+λ₁−2λ₂)iG₂₃ + (−λ₀−λ₁)i(G₄₅+G₆₇)),
/// L₃ = ½((−λ₀−λ₁−2λ₂)iG₀₁ + (λ₀+λ₁−2λ₂)iG₂₃ + (λ₀−λ₁)i(G₄₅+G₆₇)).
pub fn explicit_companions(l: &[Rational; 3]) -> (Mat, Mat) {
    let (l0, l1, l2) = (&l[0], &l[1], &l[2]);
    let half = Rational::new(1, 2);
    let two = Rational::int(2);
    let mk = |a: Rational, b: Rational, c: Rational| so8_cartan(&[&a * &half, &b * &half, &c * &half]);
    let l2x2 = l2 * &two;
    let m2 = mk(&(&-l0 + l1) + &l2x2, &(&-l0 + l1) - &l2x2, &-l0 - l1);
    let m3 = mk(&(&-l0 - l1) - &l2x2, &(l0 + l1) - &l2x2, l0 - l1);
    (m2, m3)
}

fn unit3(k: usize) -> [Rational; 3] {
    let mut l = [Rational::ZERO, Rational::ZERO, Rational::ZERO];
    l[k] = Rational::ONE;
    l
}

pub fn f4_generators() -> Result<Vec<SpMat>, RootError> {
    (0..3).map(|k| delta(&unit3(k))).collect()
}

/// δ(e₀), δ(e₁), δ(e₂), (E₁ − E₃)~, (E₂ − E₃)~.
pub fn e6_generators() -> Result<Vec<SpMat>, RootError> {
    let j = JordanAlgebra::get(Kind::Octonionic);
    let mut gens = f4_generators()?;
    for k in 0..2 {
        let t = JordanMatrix::e(k).sub(&JordanMatrix::e(2));
        gens.push(j.lmul(&t.coords(Kind::Octonionic)));
    }
    Ok(gens)
}

/// Φ(φ, 0, 0, 0) for the 𝔢₆ generators, then Φ(0, 0, 0, 1).
pub fn e7_generators() -> Result<Vec<E7Op>, RootError> {
    let jd = Kind::Octonionic.jdim();
    let mut gens: Vec<E7Op> = e6_generators()?.into_iter().map(|phi| E7Op { phi, ..E7Op::zero(jd) }).collect();
    gens.push(E7Op { nu: Complex::ONE, ..E7Op::zero(jd) });
    Ok(gens)
}

/// The 𝔢₇ generators embedded as (Φ, 0, 0, 0, 0, 0), then 1̃ = (0, 0, 0, 1, 0, 0).
pub fn e8_generators() -> Result<Vec<E8Elem>, RootError> {
    let jd = Kind::Octonionic.jdim();
    let mut gens: Vec<E8Elem> = e7_generators()?.into_iter().map(E8Elem::from_phi).collect();
    gens.push(E8Elem::r_tilde(jd, Complex::ONE));
    Ok(gens)
}

fn to_rational(c: &Complex) -> Result<Rational, RootError> {
    if c.is_real() {
        Ok(c.re.clone())
    } else {
        Err(RootError::NotRational(c.to_string()))
    }
}

fn rational_matrix(m: &Mat) -> Result<Vec<Vec<Rational>>, RootError> {
    (0..m.rows).map(|i| (0..m.cols).map(|j| to_rational(m.get(i, j))).collect()).collect()
}

fn complex_matrix(m: &[Vec<Rational>]) -> Mat {
    Mat::from_rows(&m.iter().map(|row| row.iter().cloned().map(Complex::real).collect()).collect::<Vec<_>>())
}

fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    rational_matrix(&complex_matrix(m).inverse().ok()?).ok()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::ZERO, |acc, (x, y)| &acc + &(x * y))
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Arithmetic modulo a prime p ≡ 1 (mod 4), so that i has an image.
mod modp {
    pub const P: u64 = 1_000_000_009;

    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    pub fn add(a: u64, b: u64) -> u64 {
        (a + b) % P
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        (a + P - b) % P
    }

    pub fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    pub fn from_i64(k: i64) -> u64 {
        k.rem_euclid(P as i64) as u64
    }

    /// A square root of −1.
    pub fn iota() -> u64 {
        (2..)
            .map(|a| pow(a, (P - 1) / 4))
            .find(|x| mul(*x, *x) == P - 1)
            .expect("p ≡ 1 mod 4")
    }
}

fn reduce_rational(r: &Rational) -> Option<u64> {
    let p = num_bigint::BigInt::from(modp::P);
    let m = |b: num_bigint::BigInt| {
        let v = ((b % &p) + &p) % &p;
        v.to_u64().expect("reduced below p")
    };
    let d = m(r.denom());
    (d != 0).then(|| modp::mul(m(r.numer()), modp::inv(d)))
}

fn reduce_complex(c: &Complex, iota: u64) -> Option<u64> {
    Some(modp::add(reduce_rational(&c.re)?, modp::mul(reduce_rational(&c.im)?, iota)))
}

/// Minimal polynomial of the Krylov sequence of a random vector, modulo p,
/// as coefficients from degree 0 up (monic).
fn krylov_min_poly(m: &SpMat, rng: &mut ChaCha8Rng) -> Option<Vec<u64>> {
    let iota = modp::iota();
    let n = m.rows;
    let rows: Vec<Vec<(usize, u64)>> = m
        .data
        .iter()
        .map(|r| r.iter().map(|(j, a)| reduce_complex(a, iota).map(|x| (*j, x))).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let apply = |v: &[u64]| -> Vec<u64> {
        rows.iter().map(|r| r.iter().fold(0, |acc, (j, a)| modp::add(acc, modp::mul(*a, v[*j])))).collect()
    };
    let mut v: Vec<u64> = (0..n).map(|_| rng.gen_range(1..modp::P)).collect();
    // Stored rows: (pivot, reduced vector, its expression in the Krylov vectors).
    let mut stored: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    for d in 0..=n {
        let mut w = v.clone();
        let mut comb = vec![0; d + 1];
        comb[d] = 1;
        for (p, row, c) in &stored {
            let a = w[*p];
            if a != 0 {
                for k in 0..n {
                    w[k] = modp::sub(w[k], modp::mul(a, row[k]));
                }
                for (k, ck) in c.iter().enumerate() {
                    comb[k] = modp::sub(comb[k], modp::mul(a, *ck));
                }
            }
        }
        match w.iter().position(|x| *x != 0) {
            None => return Some(comb),
            Some(p) => {
                let s = modp::inv(w[p]);
                let w: Vec<u64> = w.iter().map(|x| modp::mul(*x, s)).collect();
                let comb: Vec<u64> = comb.iter().map(|x| modp::mul(*x, s)).collect();
                stored.push((p, w, comb));
            }
        }
        v = apply(&v);
    }
    None
}

fn eval_mod_p(poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, c| modp::add(modp::mul(acc, x), *c))
}

/// Bound for the eigenvalues when they are all real: |λ| ≤ √(Σ λ²) = √tr(M²).
/// A matrix violating the premise is caught by the dimension count afterwards.
fn spectral_bound(m: &SpMat) -> Option<i64> {
    let t = m.trace_product(m);
    if !t.is_real() || t.re.signum() < 0 {
        return None;
    }
    let floor: num_bigint::BigInt = t.re.numer() / t.re.denom();
    (floor.sqrt() + 1u32).to_i64()
}

fn kernel(m: &SpMat, shift: &Complex) -> Vec<SVec> {
    let mut ech = Echelon::new(m.cols);
    for (i, row) in m.data.iter().enumerate() {
        let r = row.sub(&SVec::single(i, shift.clone()));
        if !r.is_zero() {
            ech.insert(r);
        }
    }
    ech.nullspace()
}

/// Simultaneous eigenvalues of commuting ad-matrices with their root vectors,
/// and the dimension of the common zero weight space.
fn weights(ads: &[SpMat], seed: u64) -> Result<(Vec<(Vec<Rational>, SVec)>, usize), RootError> {
    let n = ads[0].rows;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::new();
    for _attempt in 0..8 {
        let coefs: Vec<Complex> = ads.iter().map(|_| Complex::int(6 * rng.gen_range(1..=1000))).collect();
        let m = ads.iter().zip(&coefs).fold(SpMat::zeros(n, n), |acc, (a, c)| acc.axpy(c, a));
        let Some(poly) = krylov_min_poly(&m, &mut rng) else {
            last = "matrix does not reduce modulo p".into();
            continue;
        };
        let Some(b) = spectral_bound(&m) else {
            last = "tr(M²) is not a nonnegative rational".into();
            continue;
        };
        let candidates: Vec<i64> = (-b..=b).filter(|k| eval_mod_p(&poly, modp::from_i64(*k)) == 0).collect();
        let mut found = Vec::new();
        let mut total = 0;
        let mut zero_dim = 0;
        let mut degenerate = false;
        for k in candidates {
            let ker = kernel(&m, &Complex::int(k));
            total += ker.len();
            if k == 0 {
                zero_dim = ker.len();
            } else if ker.len() > 1 {
                degenerate = true;
            } else if let Some(v) = ker.into_iter().next() {
                found.push(v);
            }
        }
        if degenerate || total != n {
            last = format!("eigenspaces of dimension {total} out of {n}{}", if degenerate { ", not regular" } else { "" });
            continue;
        }
        let mut roots = Vec::with_capacity(found.len());
        for v in &found {
            let (i0, v0) = v.iter().next().cloned().expect("nonzero eigenvector");
            let mut vals = Vec::with_capacity(ads.len());
            for a in ads {
                let w = a.apply(v);
                let c = w.get(i0).checked_div(&v0).map_err(|e| RootError::Spectrum(e.to_string()))?;
                if w != v.scale(&c) {
                    return Err(RootError::Spectrum("Cartan generators are not simultaneously diagonal".into()));
                }
                vals.push(to_rational(&c)?);
            }
            roots.push((vals, v.clone()));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok((roots, zero_dim));
    }
    Err(RootError::Spectrum(last))
}

/// dim{x : [x, 𝔥] ⊂ 𝔥} inside the subalgebra, for 𝔥 spanned by `h`.
fn normalizer_dim<A: Ambient>(sub: &Subalgebra<A>, h: &[SVec]) -> usize {
    let n = sub.dim();
    let mut span = Echelon::new(n);
    for v in h {
        span.insert(v.clone());
    }
    let mut image = Echelon::new(n * h.len());
    for k in 0..n {
        let parts: Vec<SVec> = h.iter().map(|v| span.reduce(sub.lie.bracket(&SVec::unit(k), v))).collect();
        image.insert(SVec::concat(&parts.iter().map(|p| (p, n)).collect::<Vec<_>>()));
    }
    n - image.rank()
}

/// Everything computed about one level, independent of the reference tables.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub level: Level,
    pub dim: usize,
    /// Closed Killing form (B₄, B₆, B₇ or B₈) on the Cartan generators.
    pub closed_gram: Vec<Vec<Rational>>,
    /// tr(ad x ad y) over the whole complex algebra, on the same pairs.
    pub brute_gram: Vec<Vec<Rational>>,
    pub abelian: bool,
    pub normalizer_dim: usize,
    /// Normalizer of the span of all generators but the last (a control that must exceed rank − 1).
    pub control_normalizer_dim: usize,
    pub zero_weight_dim: usize,
    /// Each root as its values on the generators, sorted.
    pub roots: Vec<Vec<Rational>>,
    /// A root vector for each root, in ambient coordinates, written out.
    pub root_vectors: Vec<String>,
    /// The closed form pairs the dual basis Σ (G⁻¹)ⱼₖ Hₖ with the generators as the identity.
    pub dual_basis_ok: bool,
    gram_inv: Vec<Vec<Rational>>,
}

fn analyse<A: Ambient>(
    level: Level,
    sub: &Subalgebra<A>,
    gens: &[A::Elem],
    closed: &dyn Fn(&A::Elem, &A::Elem) -> Result<Complex, LieError>,
    seed: u64,
) -> Result<RootSystem, RootError> {
    let r = gens.len();
    let coords = gens.iter().map(|x| sub.coords(x)).collect::<Result<Vec<_>, _>>()?;
    let abelian = (0..r).all(|i| (i + 1..r).all(|j| sub.lie.bracket(&coords[i], &coords[j]).is_zero()));
    let normalizer = normalizer_dim(sub, &coords);
    let control = normalizer_dim(sub, &coords[..r - 1]);

    let mut closed_gram = vec![vec![Rational::ZERO; r]; r];
    let mut brute_gram = vec![vec![Rational::ZERO; r]; r];
    let ads_amb = gens.iter().map(|x| ambient_ad(sub.amb, x)).collect::<Result<Vec<_>, _>>()?;
    for i in 0..r {
        for j in 0..r {
            closed_gram[i][j] = to_rational(&closed(&gens[i], &gens[j])?)?;
            brute_gram[i][j] = to_rational(&ads_amb[i].trace_product(&ads_amb[j]))?;
        }
    }
    let gram_inv = rational_inverse(&closed_gram).ok_or_else(|| RootError::Spectrum("degenerate Killing form on the Cartan subalgebra".into()))?;

    let amb_coords = gens.iter().map(|x| sub.amb.coords(x)).collect::<Result<Vec<_>, _>>()?;
    let mut dual_basis_ok = true;
    for j in 0..r {
        let h = SVec::combination(gram_inv[j].iter().cloned().map(Complex::real).collect::<Vec<_>>().iter().zip(&amb_coords));
        let h = sub.amb.element(&h);
        for (i, x) in gens.iter().enumerate() {
            let expected = if i == j { Complex::ONE } else { Complex::ZERO };
            if closed(&h, x)? != expected {
                dual_basis_ok = false;
            }
        }
    }

    let ads: Vec<SpMat> = coords.iter().map(|c| sub.lie.ad(c)).collect();
    let (pairs, zero_weight_dim) = weights(&ads, seed)?;
    let root_vectors = pairs.iter().map(|(_, v)| sub.amb.render(&sub.ambient_vec(v))).collect();
    let roots = pairs.into_iter().map(|(r, _)| r).collect();
    Ok(RootSystem {
        level,
        dim: sub.dim(),
        closed_gram,
        brute_gram,
        abelian,
        normalizer_dim: normalizer,
        control_normalizer_dim: control,
        zero_weight_dim,
        roots,
        root_vectors,
        dual_basis_ok,
        gram_inv,
    })
}

/// Fixed seed for the generic Cartan element; any choice gives the same roots.
const SEED: u64 = 0x5eed_0f_c0ffee;

pub fn root_system(level: Level) -> Result<RootSystem, RootError> {
    let oct = Kind::Octonionic;
    match level {
        Level::F4 => {
            let gens = f4_generators()?;
            analyse(level, f4_eps(), &gens, &|x, y| Ok(b4(x, y)), SEED)
        }
        Level::E6 => {
            let j = JordanAlgebra::get(oct);
            let gens = e6_generators()?;
            analyse(level, e6_eps(), &gens, &|x, y| b6(j, x, y), SEED)
        }
        Level::E7 => {
            let f = &e7(oct).f;
            let gens = e7_generators()?;
            analyse(level, e7_eps(), &gens, &|x, y| b7(f, x, y), SEED)
        }
        Level::E8 => {
            let f = e8(oct).f();
            let gens = e8_generators()?;
            analyse(level, e8_eps(), &gens, &|x, y| b8(f, x, y), SEED)
        }
    }
}

/// The ambient algebras, for reference: 𝔣₄ᶜ, 𝔢₆ᶜ, 𝔢₇ᶜ, 𝔢₈ᶜ have dimensions 52, 78, 133, 248.
pub fn ambient_dim(level: Level) -> usize {
    let oct = Kind::Octonionic;
    match level {
        Level::F4 => f4(oct).dim(),
        Level::E6 => e6(oct).dim(),
        Level::E7 => e7(oct).dim(),
        Level::E8 => e8(oct).dim(),
    }
}

/// A root system up to the sign convention: lexicographically positive roots
/// and the simple roots among them.
pub fn lex_positive(roots: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    roots.iter().filter(|r| r.iter().find(|a| !a.is_zero()).is_some_and(|a| a.signum() > 0)).cloned().collect()
}

pub fn simple_roots(positive: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let set: BTreeSet<&Vec<Rational>> = positive.iter().collect();
    positive
        .iter()
        .filter(|a| {
            !positive.iter().any(|b| {
                let diff: Vec<Rational> = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
                set.contains(&diff)
            })
        })
        .cloned()
        .collect()
}

/// Coefficients of `root` on a basis of simple roots, if it lies in their span.
pub fn expand(simple: &[Vec<Rational>], root: &[Rational]) -> Option<Vec<Rational>> {
    let inv = rational_inverse(simple)?;
    // root = c·S, so c = root·S⁻¹.
    let r = simple.len();
    Some((0..r).map(|j| (0..r).fold(Rational::ZERO, |acc, k| &acc + &(&root[k] * &inv[k][j]))).collect())
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.level.rank()
    }

    /// (α, β) = αᵀ G⁻¹ β, G the closed Killing form on the generators.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, &mat_vec(&self.gram_inv, b))
    }

    /// Coefficients of the canonical element H_α on the generators.
    pub fn canonical_coords(&self, a: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.gram_inv, a)
    }

    /// H_α in the encoding (l0, l1, l2, t1, t2, t3, m, w), T = Σ tₖEₖ.
    pub fn canonical(&self, a: &[Rational]) -> Vec<Rational> {
        let c = self.canonical_coords(a);
        let get = |k: usize| c.get(k).cloned().unwrap_or(Rational::ZERO);
        let (t1, t2) = (get(3), get(4));
        let t3 = -&(&t1 + &t2);
        vec![get(0), get(1), get(2), t1, t2, t3, get(5), get(6)]
    }

    /// Values on the generators of a form in l0 l1 l2 m1 m2 m3 m w; variables
    /// outside this level must not occur.
    pub fn values_of(&self, f: &Form) -> Result<Vec<Rational>, String> {
        let r = self.rank();
        let used: &[usize] = match r {
            3 => &[0, 1, 2],
            5 => &[0, 1, 2, 3, 4, 5],
            6 => &[0, 1, 2, 3, 4, 5, 6],
            _ => &[0, 1, 2, 3, 4, 5, 6, 7],
        };
        if let Some(k) = (0..VARIABLES.len()).find(|k| !used.contains(k) && !f[*k].is_zero()) {
            return Err(format!("variable {} does not occur at this level", VARIABLES[k]));
        }
        let all = [f[0].clone(), f[1].clone(), f[2].clone(), &f[3] - &f[5], &f[4] - &f[5], f[6].clone(), f[7].clone()];
        Ok(all[..r].to_vec())
    }

    /// The form with the given values, normalized so that the μ-coefficients sum to zero.
    pub fn form_of(&self, v: &[Rational]) -> Form {
        let mut f = vec![Rational::ZERO; VARIABLES.len()];
        for k in 0..3 {
            f[k] = v[k].clone();
        }
        if v.len() >= 5 {
            let b3 = &(-&(&v[3] + &v[4])) / &Rational::int(3);
            f[3] = &v[3] + &b3;
            f[4] = &v[4] + &b3;
            f[5] = b3;
        }
        if v.len() >= 6 {
            f[6] = v[5].clone();
        }
        if v.len() >= 7 {
            f[7] = v[6].clone();
        }
        f
    }

    pub fn cartan_matrix(&self, simple: &[Vec<Rational>]) -> Option<Vec<Vec<i64>>> {
        simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| {
                        let c = &(&self.inner(a, b) * &Rational::int(2)) / &self.inner(b, b);
                        c.to_i64()
                    })
                    .collect()
            })
            .collect()
    }

    /// Every root is an integral combination of `simple` with coefficients of one sign.
    pub fn is_fundamental(&self, simple: &[Vec<Rational>]) -> bool {
        simple.len() == self.rank()
            && self.roots.iter().all(|r| match expand(simple, r) {
                Some(c) => c.iter().all(Rational::is_integer) && (c.iter().all(|a| a.signum() >= 0) || c.iter().all(|a| a.signum() <= 0)),
                None => false,
            })
    }

    pub fn positive_wrt(&self, simple: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        self.roots
            .iter()
            .filter(|r| expand(simple, r).is_some_and(|c| c.iter().all(|a| a.signum() >= 0)))
            .cloned()
            .collect()
    }

    pub fn dynkin(&self, simple: &[Vec<Rational>]) -> Option<String> {
        dynkin_type(&self.cartan_matrix(simple)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCheck {
    pub form: String,
    pub stated: Vec<Rational>,
    /// Coefficients on the tabulated simple roots, when the form is a root.
    pub computed: Option<Vec<Rational>>,
}

impl ExpansionCheck {
    pub fn ok(&self) -> bool {
        self.computed.as_ref() == Some(&self.stated)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueCheck<T> {
    pub name: String,
    pub stated: T,
    pub computed: T,
}

impl<T: PartialEq> ValueCheck<T> {
    pub fn ok(&self) -> bool {
        self.stated == self.computed
    }
}

/// The computed root data set against a reference table.
#[derive(Clone, Debug)]
pub struct TableComparison {
    pub level: Level,
    pub table: RootTable,
    /// Table roots that are not roots, and computed roots absent from the table.
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    /// Table entries that do not parse as forms of this level.
    pub malformed: Vec<String>,
    pub simple_are_roots: bool,
    pub fundamental: bool,
    pub expansions: Vec<ExpansionCheck>,
    /// The tabulated positive roots are exactly the roots positive for the tabulated simple system.
    pub positive_set_ok: bool,
    pub canonical: Vec<ValueCheck<Vec<Rational>>>,
    pub inner: Vec<ValueCheck<Rational>>,
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    pub dynkin_table: Option<String>,
    /// Type read off an independently chosen (lexicographic) simple system.
    pub dynkin_lex: Option<String>,
}

impl TableComparison {
    pub fn roots_match(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.malformed.is_empty()
    }
}

impl RootSystem {
    pub fn compare(&self, table: &RootTable) -> TableComparison {
        let mut malformed = Vec::new();
        let mut values = |f: &Form| match self.values_of(f) {
            Ok(v) => Some(v),
            Err(e) => {
                malformed.push(format!("{}: {e}", format_form(f)));
                None
            }
        };
        let table_roots: BTreeSet<Vec<Rational>> = table.roots.iter().filter_map(&mut values).collect();
        let simple: Vec<Vec<Rational>> = table.simple.iter().filter_map(&mut values).collect();
        let stated_positive: Vec<(Form, Option<Vec<Rational>>, Vec<Rational>)> =
            table.positive.iter().map(|(f, c)| (f.clone(), values(f), c.clone())).collect();
        let computed: BTreeSet<Vec<Rational>> = self.roots.iter().cloned().collect();
        let show = |v: &Vec<Rational>| format_form(&self.form_of(v));
        let missing = table_roots.difference(&computed).map(show).collect();
        let extra = computed.difference(&table_roots).map(show).collect();
        let simple_ok = simple.len() == self.rank();
        let simple_are_roots = simple_ok && simple.iter().all(|a| computed.contains(a));
        let fundamental = simple_ok && self.is_fundamental(&simple);

        let expansions: Vec<ExpansionCheck> = stated_positive
            .iter()
            .map(|(f, v, c)| ExpansionCheck {
                form: format_form(f),
                stated: c.clone(),
                computed: v.as_ref().filter(|v| computed.contains(*v)).and_then(|v| if simple_ok { expand(&simple, v) } else { None }),
            })
            .collect();
        let listed: BTreeSet<Vec<Rational>> = stated_positive.iter().filter_map(|(_, v, _)| v.clone()).collect();
        let positive_set_ok = simple_ok
            && listed.len() == stated_positive.len()
            && listed == self.positive_wrt(&simple).into_iter().collect::<BTreeSet<_>>();

        let names: Vec<String> = (1..=table.rank).map(|k| format!("a{k}")).collect();
        let canonical = if simple_ok {
            table
                .canonical
                .iter()
                .zip(&simple)
                .zip(&names)
                .map(|((stated, a), name)| ValueCheck { name: format!("H_{name}"), stated: stated.clone(), computed: self.canonical(a) })
                .collect()
        } else {
            Vec::new()
        };
        let inner = if simple_ok {
            table
                .inner
                .iter()
                .map(|(i, j, v)| ValueCheck {
                    name: format!("({}, {})", names[*i], names[*j]),
                    stated: v.clone(),
                    computed: self.inner(&simple[*i], &simple[*j]),
                })
                .collect()
        } else {
            Vec::new()
        };
        let cartan_matrix = if simple_ok { self.cartan_matrix(&simple) } else { None };
        let dynkin_table = cartan_matrix.as_ref().and_then(|a| dynkin_type(a));
        let dynkin_lex = self.dynkin(&simple_roots(&lex_positive(&self.roots)));
        TableComparison {
            level: self.level,
            table: table.clone(),
            missing,
            extra,
            malformed,
            simple_are_roots,
            fundamental,
            expansions,
            positive_set_ok,
            canonical,
            inner,
            cartan_matrix,
            dynkin_table,
            dynkin_lex,
        }
    }
}

/// Name of the Dynkin diagram of a Cartan matrix A_ij = 2(αᵢ, αⱼ)/(αⱼ, αⱼ),
/// components joined by " + ".
pub fn dynkin_type(a: &[Vec<i64>]) -> Option<String> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut names = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        names.push(component_type(a, &comp)?);
    }
    names.sort();
    Some(names.join(" + "))
}

fn component_type(a: &[Vec<i64>], nodes: &[usize]) -> Option<String> {
    let n = nodes.len();
    if nodes.iter().any(|i| a[*i][*i] != 2) {
        return None;
    }
    let mut edges = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for &j in &nodes[x + 1..] {
            if (a[i][j] == 0) != (a[j][i] == 0) || a[i][j] > 0 || a[j][i] > 0 {
                return None;
            }
            if a[i][j] != 0 {
                edges.push((i, j, a[i][j] * a[j][i]));
            }
        }
    }
    if edges.len() + 1 != n {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|(i, j, _)| *i == v || *j == v).count();
    let multiple: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    match multiple[..] {
        [] => {}
        [&(i, j, 3)] if n == 2 => {
            let _ = (i, j);
            return Some("G2".into());
        }
        [&(i, j, 2)] => {
            if n == 2 {
                return Some("B2".into());
            }
            if n == 4 && degree(i) == 2 && degree(j) == 2 {
                return Some("F4".into());
            }
            // a[i][j] = −2 means αⱼ is the shorter root.
            let (short, long) = if a[i][j] == -2 { (j, i) } else { (i, j) };
            if nodes.iter().any(|v| degree(*v) > 2) {
                return None;
            }
            return if degree(short) == 1 {
                Some(format!("B{n}"))
            } else if degree(long) == 1 {
                Some(format!("C{n}"))
            } else {
                None
            };
        }
        _ => return None,
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|v| degree(*v) >= 3).collect();
    match branch[..] {
        [] => Some(format!("A{n}")),
        [b] if degree(b) == 3 => {
            let mut arms = Vec::new();
            for &(i, j, _) in edges.iter().filter(|(i, j, _)| *i == b || *j == b) {
                let mut prev = b;
                let mut cur = if i == b { j } else { i };
                let mut len = 1;
                loop {
                    let next: Vec<usize> = edges
                        .iter()
                        .filter_map(|(x, y, _)| if *x == cur && *y != prev { Some(*y) } else if *y == cur && *x != prev { Some(*x) } else { None })
                        .collect();
                    match next[..] {
                        [] => break,
                        [nx] => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        _ => return None,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            match arms[..] {
                [1, 1, _] => Some(format!("D{n}")),
                [1, 2, 2] => Some("E6".into()),
                [1, 2, 3] => Some("E7".into()),
                [1, 2, 4] => Some("E8".into()),
                _ => None,
            }
        }
        _ => None,
    }
}

/// "−1/2 l0 + l1 − 2/3 m".
pub fn format_form(f: &[Rational]) -> String {
    let mut out = String::new();
    for (a, name) in f.iter().zip(VARIABLES) {
        if a.is_zero() {
            continue;
        }
        let neg = a.signum() < 0;
        let mag = a.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn triality_companions_match_explicit_forms() {
        for l in [[q(1, 1), q(0, 1), q(0, 1)], [q(0, 1), q(1, 1), q(0, 1)], [q(0, 1), q(0, 1), q(1, 1)], [q(3, 2), q(-2, 5), q(7, 3)]] {
            let t = triality_companions(&so8_cartan(&l)).unwrap();
            let (m2, m3) = explicit_companions(&l);
            assert_eq!(t.d2, m2);
            assert_eq!(t.d3, m3);
        }
    }

    #[test]
    fn dynkin_names() {
        let a = |m: &[&[i64]]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
        assert_eq!(dynkin_type(&a(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])).as_deref(), Some("A3"));
        // C3: the last simple root is the long one.
        assert_eq!(dynkin_type(&a(&[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]])).as_deref(), Some("C3"));
        assert_eq!(dynkin_type(&a(&[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]])).as_deref(), Some("B3"));
        assert_eq!(dynkin_type(&a(&[&[2, -1, 0, 0], &[-1, 2, -2, 0], &[0, -1, 2, -1], &[0, 0, -1, 2]])).as_deref(), Some("F4"));
        assert_eq!(dynkin_type(&a(&[&[2, -3], &[-1, 2]])).as_deref(), Some("G2"));
        assert_eq!(dynkin_type(&a(&[&[2, 0], &[0, 2]])).as_deref(), Some("A1 + A1"));
        let d4 = a(&[&[2, -1, 0, 0], &[-1, 2, -1, -1], &[0, -1, 2, 0], &[0, -1, 0, 2]]);
        assert_eq!(dynkin_type(&d4).as_deref(), Some("D4"));
        // A cycle is not a Dynkin diagram.
        assert_eq!(dynkin_type(&a(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])), None);
    }

    #[test]
    fn e_series_branch_lengths() {
        let chain = |n: usize, branch_at: usize| {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 0..n - 2 {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
            m[branch_at][n - 1] = -1;
            m[n - 1][branch_at] = -1;
            m
        };
        assert_eq!(dynkin_type(&chain(6, 2)).as_deref(), Some("E6"));
        assert_eq!(dynkin_type(&chain(7, 2)).as_deref(), Some("E7"));
        assert_eq!(dynkin_type(&chain(8, 2)).as_deref(), Some("E8"));
        assert_eq!(dynkin_type(&chain(6, 1)).as_deref(), Some("D6"));
    }

    #[test]
    fn forms_print_readably() {
        assert_eq!(format_form(&[q(-1, 2), q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(-2, 3), q(0, 1)]), "-1/2 l0 + l1 - 2/3 m");
        assert_eq!(format_form(&vec![q(0, 1); 8]), "0");
    }

    #[test]
    fn modular_square_root_of_minus_one() {
        let i = modp::iota();
        assert_eq!(modp::mul(i, i), modp::P - 1);
    }

    #[test]
    fn eigenvalues_of_a_small_diagonalizable_matrix() {
        // diag(3, −2, 0) conjugated by an upper triangular matrix.
        let d = Mat::from_int_rows(&[&[3, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        let s = Mat::from_int_rows(&[&[1, 1, 2], &[0, 1, 1], &[0, 0, 1]]);
        let m = s.mul(&d).mul(&s.inverse().unwrap()).to_sparse();
        let (roots, zero) = weights(&[m.clone()], 7).unwrap();
        assert_eq!(zero, 1);
        let values: Vec<_> = roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(values, vec![vec![q(-2, 1)], vec![q(3, 1)]]);
        for (r, v) in &roots {
            assert_eq!(m.apply(v), v.scale(&Complex::real(r[0].clone())));
        }
    }
}
