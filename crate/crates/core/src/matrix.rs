//! Dense matrices over a `Ring`, with elimination routines over a `Field`.

use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::poly::Poly;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<R: Ring<Elem = E>>(r: &R, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![r.zero(); rows * cols],
        }
    }

    pub fn identity<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        Self::scalar(r, n, r.one())
    }

    pub fn scalar<R: Ring<Elem = E>>(r: &R, n: usize, c: E) -> Self {
        let mut m = Self::zeros(r, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// The matrix unit E_ij (0-based).
    pub fn unit<R: Ring<Elem = E>>(r: &R, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(r, n, n);
        m.set(i, j, r.one());
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries; the coordinate vector of the matrix.
    pub fn as_slice(&self) -> &[E] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<E> {
        self.data
    }

    pub fn map<R2: Ring>(&self, g: impl Fn(&E) -> R2::Elem) -> Matrix<R2::Elem> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(g).collect(),
        }
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.data.iter().all(|x| r.is_zero(x))
    }

    pub fn add<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.add(a, b)).collect(),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.sub(a, b)).collect(),
        }
    }

    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| r.neg(a)).collect(),
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, s: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| r.mul(a, s)).collect(),
        }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Self::zeros(r, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, o.get(k, j)));
                }
            }
        }
        out
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, r: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)))
            })
            .collect()
    }

    pub fn pow<R: Ring<Elem = E>>(&self, r: &R, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(r, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(r, &base);
            }
            base = base.mul(r, &base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace<R: Ring<Elem = E>>(&self, r: &R) -> E {
        (0..self.rows.min(self.cols)).fold(r.zero(), |acc, i| r.add(&acc, self.get(i, i)))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block_diag<R: Ring<Elem = E>>(r: &R, blocks: &[&Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, n, m);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            out.set_block(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        out
    }

    /// xy − yx
    pub fn commutator<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        self.mul(r, o).sub(r, &o.mul(r, self))
    }

    /// Monic det(X·I − M) by Berkowitz's algorithm; uses no division, so it
    /// is valid over any commutative ring.
    pub fn char_poly<R: Ring<Elem = E>>(&self, r: &R) -> Result<Poly<E>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // big-endian coefficients of the char poly of the leading k×k block
        let mut p = vec![r.one()];
        for k in 0..n {
            // v = [1, −a_kk, −R C, −R M C, …, −R M^{k−1} C]
            let mut v = Vec::with_capacity(k + 2);
            v.push(r.one());
            v.push(r.neg(self.get(k, k)));
            let mut col: Vec<E> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let rc = (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(self.get(k, j), &col[j])));
                v.push(r.neg(&rc));
                col = (0..k)
                    .map(|i| {
                        (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(self.get(i, j), &col[j])))
                    })
                    .collect();
            }
            // p ← T p, T lower-triangular Toeplitz with first column v
            let q: Vec<E> = (0..k + 2)
                .map(|i| {
                    (0..=i.min(k)).fold(r.zero(), |acc, j| {
                        if i - j < v.len() {
                            r.add(&acc, &r.mul(&v[i - j], &p[j]))
                        } else {
                            acc
                        }
                    })
                })
                .collect();
            p = q;
        }
        p.reverse();
        Ok(Poly::new(r, p))
    }

    /// Determinant over a ring via the characteristic polynomial.
    pub fn det_ring<R: Ring<Elem = E>>(&self, r: &R) -> Result<E> {
        let p = self.char_poly(r)?;
        let c0 = p.coeff(r, 0);
        Ok(if self.rows % 2 == 1 { r.neg(&c0) } else { c0 })
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref<F: Field<Elem = E>>(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&i| !f.is_zero(self.get(i, col))) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = f.inv(self.get(row, col)).unwrap();
            for j in col..self.cols {
                let v = f.mul(self.get(row, j), &inv);
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || f.is_zero(self.get(i, col)) {
                    continue;
                }
                let c = self.get(i, col).clone();
                for j in col..self.cols {
                    let v = f.sub(self.get(i, j), &f.mul(&c, self.get(row, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of {x : M x = 0}.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![f.zero(); self.cols];
                x[fc] = f.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(m.get(i, fc));
                }
                x
            })
            .collect()
    }

    /// Some x with M x = b.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> Result<E> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut d = f.one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&i| !f.is_zero(m.get(i, col))) else {
                return Ok(f.zero());
            };
            if pr != col {
                m.swap_rows(pr, col);
                d = f.neg(&d);
            }
            let piv = m.get(col, col).clone();
            d = f.mul(&d, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in col + 1..n {
                if f.is_zero(m.get(i, col)) {
                    continue;
                }
                let c = f.mul(m.get(i, col), &inv);
                for j in col..n {
                    let v = f.sub(m.get(i, j), &f.mul(&c, m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(d)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(aug.block(0, n, n, n))
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| f.display(x)).collect())
            .collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
                format!("[{}]", s.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
