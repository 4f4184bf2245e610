//! Exact sparse and dense linear algebra over ℚ(i).

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::scalar::{Complex, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("vector is not in the span of the basis")]
    NotInSpan,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec(pub Vec<(usize, Complex)>);

impl SVec {
    pub fn new() -> SVec {
        SVec(Vec::new())
    }

    pub fn unit(i: usize) -> SVec {
        SVec(vec![(i, Complex::ONE)])
    }

    pub fn single(i: usize, a: Complex) -> SVec {
        if a.is_zero() {
            SVec::new()
        } else {
            SVec(vec![(i, a)])
        }
    }

    pub fn from_dense(v: &[Complex]) -> SVec {
        SVec(v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect())
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Complex)>) -> SVec {
        let mut map: BTreeMap<usize, Complex> = BTreeMap::new();
        for (i, a) in pairs {
            *map.entry(i).or_default() += &a;
        }
        SVec(map.into_iter().filter(|(_, a)| !a.is_zero()).collect())
    }

    pub fn to_dense(&self, n: usize) -> Vec<Complex> {
        let mut out = vec![Complex::ZERO; n];
        for (i, a) in &self.0 {
            out[*i] = a.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Complex {
        match self.0.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.0[p].1.clone(),
            Err(_) => Complex::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Complex)> {
        self.0.iter()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, a: &Complex) -> SVec {
        if a.is_zero() {
            return SVec::new();
        }
        if a.is_one() {
            return self.clone();
        }
        SVec(self.0.iter().map(|(i, x)| (*i, x * a)).collect())
    }

    pub fn neg(&self) -> SVec {
        SVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    /// self + a·x
    pub fn axpy(&self, a: &Complex, x: &SVec) -> SVec {
        if a.is_zero() || x.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + x.0.len());
        let (mut p, mut q) = (0, 0);
        while p < self.0.len() || q < x.0.len() {
            let ip = self.0.get(p).map(|e| e.0).unwrap_or(usize::MAX);
            let iq = x.0.get(q).map(|e| e.0).unwrap_or(usize::MAX);
            if ip < iq {
                out.push(self.0[p].clone());
                p += 1;
            } else if iq < ip {
                out.push((iq, a * &x.0[q].1));
                q += 1;
            } else {
                let v = &self.0[p].1 + &(a * &x.0[q].1);
                if !v.is_zero() {
                    out.push((ip, v));
                }
                p += 1;
                q += 1;
            }
        }
        SVec(out)
    }

    pub fn add(&self, x: &SVec) -> SVec {
        self.axpy(&Complex::ONE, x)
    }

    pub fn sub(&self, x: &SVec) -> SVec {
        self.axpy(&-Complex::ONE, x)
    }

    /// Bilinear pairing Σ aᵢbᵢ (no conjugation).
    pub fn dot(&self, x: &SVec) -> Complex {
        let (mut p, mut q) = (0, 0);
        let mut acc = Complex::ZERO;
        while p < self.0.len() && q < x.0.len() {
            match self.0[p].0.cmp(&x.0[q].0) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&self.0[p].1 * &x.0[q].1);
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    pub fn dot_dense(&self, x: &[Complex]) -> Complex {
        let mut acc = Complex::ZERO;
        for (i, a) in &self.0 {
            if !x[*i].is_zero() {
                acc += &(a * &x[*i]);
            }
        }
        acc
    }

    pub fn tau(&self) -> SVec {
        SVec(self.0.iter().map(|(i, a)| (*i, a.tau())).collect())
    }

    /// Reindexes by adding `offset` to every index.
    pub fn shifted(&self, offset: usize) -> SVec {
        SVec(self.0.iter().map(|(i, a)| (i + offset, a.clone())).collect())
    }

    /// Keeps the entries with index in `lo..hi`, shifted down by `lo`.
    pub fn slice(&self, lo: usize, hi: usize) -> SVec {
        SVec(self.0.iter().filter(|(i, _)| *i >= lo && *i < hi).map(|(i, a)| (i - lo, a.clone())).collect())
    }

    pub fn concat(parts: &[(&SVec, usize)]) -> SVec {
        let mut out = Vec::new();
        let mut offset = 0;
        for (v, len) in parts {
            out.extend(v.0.iter().map(|(i, a)| (i + offset, a.clone())));
            offset += len;
        }
        SVec(out)
    }

    /// Linear combination Σ cᵢ·vᵢ.
    pub fn combination<'a>(terms: impl IntoIterator<Item = (&'a Complex, &'a SVec)>) -> SVec {
        let mut acc: BTreeMap<usize, Complex> = BTreeMap::new();
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            for (i, a) in &v.0 {
                *acc.entry(*i).or_default() += &(c * a);
            }
        }
        SVec(acc.into_iter().filter(|(_, a)| !a.is_zero()).collect())
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Complex::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let data = rows.iter().flat_map(|row| {
            assert_eq!(row.len(), c, "ragged rows");
            row.iter().cloned()
        });
        Mat { rows: r, cols: c, data: data.collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(&rows.iter().map(|r| r.iter().map(|x| Complex::int(*x)).collect()).collect::<Vec<_>>())
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Complex]) -> Vec<Complex> {
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Complex) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn tau(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(Complex::tau).collect() }
    }

    pub fn trace(&self) -> Complex {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Complex::is_zero)
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn to_sparse(&self) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: (0..self.rows).map(|i| SVec::from_dense(self.row(i))).collect() }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(SVec::from_dense(self.row(i)));
        }
        ech.rank()
    }

    /// Basis of {x : Mx = 0}.
    pub fn kernel(&self) -> Vec<SVec> {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(SVec::from_dense(self.row(i)));
        }
        ech.nullspace()
    }

    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut ech = Echelon::new(2 * n);
        for i in 0..n {
            let mut row = SVec::from_dense(self.row(i)).0;
            row.push((n + i, Complex::ONE));
            ech.insert(SVec(row));
        }
        let rref = ech.rref_rows();
        if rref.len() != n || rref.iter().any(|(p, _)| *p >= n) {
            return Err(LinalgError::Singular);
        }
        let mut out = Mat::zeros(n, n);
        for (p, row) in rref {
            for (j, a) in row.slice(n, 2 * n).0 {
                out.set(p, j, a);
            }
        }
        Ok(out)
    }

    /// Solves M x = b for square invertible M.
    pub fn solve(&self, b: &[Complex]) -> Result<Vec<Complex>, LinalgError> {
        Ok(self.inverse()?.apply(b))
    }
}

/// Sparse matrix stored by rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SVec>,
}

impl SpMat {
    pub fn zeros(rows: usize, cols: usize) -> SpMat {
        SpMat { rows, cols, data: vec![SVec::new(); rows] }
    }

    pub fn identity(n: usize) -> SpMat {
        SpMat { rows: n, cols: n, data: (0..n).map(SVec::unit).collect() }
    }

    pub fn scalar(n: usize, c: &Complex) -> SpMat {
        SpMat { rows: n, cols: n, data: (0..n).map(|i| SVec::single(i, c.clone())).collect() }
    }

    pub fn from_triples(rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, Complex)>) -> SpMat {
        let mut per_row: Vec<Vec<(usize, Complex)>> = vec![Vec::new(); rows];
        for (i, j, a) in triples {
            per_row[i].push((j, a));
        }
        SpMat { rows, cols, data: per_row.into_iter().map(SVec::from_pairs).collect() }
    }

    pub fn from_columns(rows: usize, cols: &[SVec]) -> SpMat {
        SpMat::from_triples(
            rows,
            cols.len(),
            cols.iter().enumerate().flat_map(|(j, c)| c.0.iter().map(move |(i, a)| (*i, j, a.clone()))),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i].get(j)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SVec::nnz).sum()
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.rows, self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (j, a) in &row.0 {
                m.set(i, *j, a.clone());
            }
        }
        m
    }

    pub fn mul(&self, o: &SpMat) -> SpMat {
        assert_eq!(self.cols, o.rows);
        let data = self
            .data
            .iter()
            .map(|row| SVec::combination(row.0.iter().map(|(k, a)| (a, &o.data[*k]))))
            .collect();
        SpMat { rows: self.rows, cols: o.cols, data }
    }

    pub fn add(&self, o: &SpMat) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &SpMat) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn axpy(&self, c: &Complex, o: &SpMat) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.axpy(c, b)).collect() }
    }

    pub fn scale(&self, c: &Complex) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn neg(&self) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(SVec::neg).collect() }
    }

    pub fn commutator(&self, o: &SpMat) -> SpMat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> SpMat {
        SpMat::from_triples(
            self.cols,
            self.rows,
            self.data.iter().enumerate().flat_map(|(i, r)| r.0.iter().map(move |(j, a)| (*j, i, a.clone()))),
        )
    }

    pub fn tau(&self) -> SpMat {
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(SVec::tau).collect() }
    }

    pub fn trace(&self) -> Complex {
        self.data.iter().enumerate().map(|(i, r)| r.get(i)).sum()
    }

    /// tr(self · o) without forming the product.
    pub fn trace_product(&self, o: &SpMat) -> Complex {
        let ot = o.transpose();
        self.data.iter().zip(&ot.data).map(|(a, b)| a.dot(b)).sum()
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        SVec(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let a = r.dot(v);
                    (!a.is_zero()).then_some((i, a))
                })
                .collect(),
        )
    }

    pub fn apply_dense(&self, v: &[Complex]) -> Vec<Complex> {
        self.data.iter().map(|r| r.dot_dense(v)).collect()
    }

    pub fn column(&self, j: usize) -> SVec {
        SVec(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let a = r.get(j);
                    (!a.is_zero()).then_some((i, a))
                })
                .collect(),
        )
    }

    /// Row-major vectorization: entry (i, j) goes to index i·cols + j.
    pub fn vectorize(&self) -> SVec {
        SVec(
            self.data
                .iter()
                .enumerate()
                .flat_map(|(i, r)| r.0.iter().map(move |(j, a)| (i * self.cols + j, a.clone())))
                .collect(),
        )
    }

    pub fn unvectorize(v: &SVec, rows: usize, cols: usize) -> SpMat {
        SpMat::from_triples(rows, cols, v.0.iter().map(|(k, a)| (k / cols, k % cols, a.clone())))
    }

    /// Block of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> SpMat {
        SpMat { rows: r1 - r0, cols: c1 - c0, data: self.data[r0..r1].iter().map(|r| r.slice(c0, c1)).collect() }
    }
}

/// Incrementally built row echelon form; each stored row has leading
/// coefficient 1 in its pivot column and no entries before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: SVec) -> SVec {
        let mut pos = 0;
        while pos < v.0.len() {
            let c = v.0[pos].0;
            match self.pivot_row[c] {
                Some(r) => {
                    let a = -&v.0[pos].1;
                    v = v.axpy(&a, &self.rows[r]);
                }
                None => pos += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Returns true when `v` enlarged the row space.
    pub fn insert(&mut self, v: SVec) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.0.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r.scale(&inv));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.ncols).filter(|c| self.pivot_row[*c].is_some()).collect();
        p.sort();
        p
    }

    /// Fully reduced rows, sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<(usize, SVec)> {
        let mut order: Vec<usize> = self.pivots();
        order.reverse();
        let mut done = Echelon::new(self.ncols);
        let mut out = Vec::with_capacity(order.len());
        for p in order {
            let row = &self.rows[self.pivot_row[p].unwrap()];
            let head = SVec(vec![row.0[0].clone()]);
            let tail = done.reduce(SVec(row.0[1..].to_vec()));
            let full = head.add(&tail);
            done.pivot_row[p] = Some(done.rows.len());
            done.rows.push(full.clone());
            out.push((p, full));
        }
        out.reverse();
        out
    }

    /// Basis of the solution space of the homogeneous system with these rows,
    /// one vector per free column (coefficient 1 there, 0 at other free columns).
    pub fn nullspace(&self) -> Vec<SVec> {
        let rref = self.rref_rows();
        let mut by_col: BTreeMap<usize, Vec<(usize, Complex)>> = BTreeMap::new();
        for (p, row) in &rref {
            for (j, a) in row.0.iter().skip(1) {
                by_col.entry(*j).or_default().push((*p, -a));
            }
        }
        (0..self.ncols)
            .filter(|c| self.pivot_row[*c].is_none())
            .map(|f| {
                let mut entries = by_col.remove(&f).unwrap_or_default();
                entries.push((f, Complex::ONE));
                entries.sort_by_key(|e| e.0);
                SVec(entries)
            })
            .collect()
    }
}

/// Expresses vectors in a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    ambient: usize,
    len: usize,
    rows: Vec<(usize, SVec, SVec)>,
}

impl Coordinatizer {
    pub fn new(ambient: usize, basis: &[SVec]) -> Result<Coordinatizer, LinalgError> {
        let m = basis.len();
        let mut ech = Echelon::new(ambient + m);
        for (k, v) in basis.iter().enumerate() {
            if let Some(top) = v.max_index() {
                if top >= ambient {
                    return Err(LinalgError::Shape(format!("index {top} outside ambient dimension {ambient}")));
                }
            }
            let mut row = v.0.clone();
            row.push((ambient + k, Complex::ONE));
            ech.insert(SVec(row));
        }
        let rows: Vec<(usize, SVec, SVec)> = ech
            .rref_rows()
            .into_iter()
            .map(|(p, row)| (p, row.slice(0, ambient), row.slice(ambient, ambient + m)))
            .collect();
        if rows.len() != m || rows.iter().any(|(p, _, _)| *p >= ambient) {
            return Err(LinalgError::Dependent);
        }
        Ok(Coordinatizer { ambient, len: m, rows })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self, v: &SVec) -> Result<SVec, LinalgError> {
        let mut residual = v.clone();
        let mut coefs = Vec::new();
        for (p, r, t) in &self.rows {
            let c = v.get(*p);
            if !c.is_zero() {
                residual = residual.axpy(&-&c, r);
                coefs.push((c, t));
            }
        }
        if !residual.is_zero() {
            return Err(LinalgError::NotInSpan);
        }
        Ok(SVec::combination(coefs.iter().map(|(c, t)| (c, *t))))
    }
}

/// Seeded sampling of small exact scalars.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-7..=7), rng.gen_range(1..=7))
}

pub fn small_complex<R: Rng>(rng: &mut R) -> Complex {
    if rng.gen_bool(0.5) {
        Complex::real(small_rational(rng))
    } else {
        Complex::new(small_rational(rng), small_rational(rng))
    }
}

pub fn random_svec<R: Rng>(rng: &mut R, n: usize, density: f64) -> SVec {
    let mut out = Vec::new();
    for i in 0..n {
        if rng.gen_bool(density) {
            let a = small_complex(rng);
            if !a.is_zero() {
                out.push((i, a));
            }
        }
    }
    SVec(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_mat(rng: &mut ChaCha8Rng, r: usize, c: usize, density: f64) -> Mat {
        let mut m = Mat::zeros(r, c);
        for k in 0..r * c {
            if rng.gen_bool(density) {
                m.data[k] = small_complex(rng);
            }
        }
        m
    }

    #[test]
    fn concat_places_parts_side_by_side() {
        let a = SVec::from_pairs([(0, Complex::ONE), (2, Complex::int(2))]);
        let b = SVec::from_pairs([(1, Complex::int(3))]);
        let v = SVec::concat(&[(&a, 3), (&b, 2)]);
        assert_eq!(v, SVec::from_pairs([(0, Complex::ONE), (2, Complex::int(2)), (4, Complex::int(3))]));
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_rank_nullity_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..20 {
            let (r, c) = (3 + trial % 5, 6 + trial % 4);
            let m = dense_mat(&mut rng, r, c, 0.5);
            let ker = m.kernel();
            assert_eq!(ker.len() + m.rank(), c);
            for v in &ker {
                assert!(m.apply(&v.to_dense(c)).iter().all(Complex::is_zero));
            }
        }
    }

    #[test]
    fn inverse_of_known_matrix() {
        let m = Mat::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Mat::from_int_rows(&[&[1, -1], &[-1, 2]]));
        assert_eq!(Mat::from_int_rows(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn coordinatizer_recovers_coefficients_and_rejects_outside_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let basis: Vec<SVec> = (0..6).map(|_| random_svec(&mut rng, 12, 0.4)).collect();
        let mut ech = Echelon::new(12);
        let basis: Vec<SVec> = basis.into_iter().filter(|v| ech.insert(v.clone())).collect();
        let coord = Coordinatizer::new(12, &basis).unwrap();
        for _ in 0..10 {
            let coefs: Vec<Complex> = (0..basis.len()).map(|_| small_complex(&mut rng)).collect();
            let v = SVec::combination(coefs.iter().zip(&basis));
            assert_eq!(coord.coords(&v).unwrap(), SVec::from_dense(&coefs));
        }
        let outside = (0..12).map(SVec::unit).find(|e| !ech.contains(e)).unwrap();
        assert_eq!(coord.coords(&outside), Err(LinalgError::NotInSpan));
        let dup = vec![basis[0].clone(), basis[0].scale(&Complex::int(2))];
        assert_eq!(Coordinatizer::new(12, &dup).err(), Some(LinalgError::Dependent));
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = dense_mat(&mut rng, 5, 6, 0.4);
        let b = dense_mat(&mut rng, 6, 4, 0.4);
        assert_eq!(a.to_sparse().mul(&b.to_sparse()).to_dense(), a.mul(&b));
        let c = dense_mat(&mut rng, 6, 5, 0.4);
        assert_eq!(a.to_sparse().trace_product(&c.to_sparse()), a.mul(&c).trace());
        assert_eq!(a.to_sparse().transpose().to_dense(), a.transpose());
    }

    proptest! {
        #[test]
        fn axpy_matches_dense(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_svec(&mut rng, 10, 0.5);
            let y = random_svec(&mut rng, 10, 0.5);
            let a = small_complex(&mut rng);
            let dense: Vec<Complex> = x.to_dense(10).iter().zip(y.to_dense(10)).map(|(p, q)| p + &(&a * &q)).collect();
            prop_assert_eq!(x.axpy(&a, &y), SVec::from_dense(&dense));
        }

        #[test]
        fn vectorize_roundtrip(seed in 0u64..200) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = dense_mat(&mut rng, 4, 7, 0.3).to_sparse();
            prop_assert_eq!(SpMat::unvectorize(&m.vectorize(), 4, 7), m);
        }
    }
}
