//! Exact rational vectors and matrices, and the incremental elimination used
//! for rank tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Q::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub_assign(&mut self, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
    }

    pub fn scale(&mut self, s: &Q) {
        for a in &mut self.data {
            *a *= s;
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut f = RankFilter::new(self.cols);
        (0..self.rows)
            .filter(|&i| f.insert(&self.data[i * self.cols..(i + 1) * self.cols]))
            .count()
    }
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return v;
            }
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Incremental fraction-free elimination. Rows are kept as primitive integer
/// vectors in semi-echelon form: every row vanishes at the pivots of the rows
/// inserted before it.
#[derive(Clone, Debug, Default)]
pub struct RankFilter {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RankFilter {
    pub fn new(dim: usize) -> Self {
        RankFilter {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &[Q]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length does not match the filter");
        let mut x = primitive(v);
        for (p, r) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let g = r[*p].gcd(&x[*p]);
            let a = &r[*p] / &g;
            let b = &x[*p] / &g;
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi = &a * &*xi - &b * ri;
            }
            x = make_primitive(x);
        }
        x
    }

    /// Whether `v` is independent of the rows inserted so far.
    pub fn is_independent(&self, v: &[Q]) -> bool {
        !self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts `v` if it increases the rank; returns whether it did.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut x = self.reduce(v);
        match x.iter().position(|c| !c.is_zero()) {
            Some(p) => {
                if x[p].is_negative() {
                    for c in &mut x {
                        *c = -&*c;
                    }
                }
                self.rows.push((p, x));
                true
            }
            None => false,
        }
    }
}

/// Semi-echelon basis over the rationals that also records how each stored
/// row is combined from the accepted input vectors, so that any vector in the
/// span can be expressed in terms of the accepted ones.
#[derive(Clone, Debug, Default)]
pub struct TrackedEchelon {
    dim: usize,
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
}

pub enum Reduced {
    /// Coordinates in terms of the previously accepted vectors.
    InSpan(Vec<Q>),
    /// The vector was accepted as basis element number `.0`.
    Accepted(usize),
}

impl TrackedEchelon {
    pub fn new(dim: usize) -> Self {
        TrackedEchelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v`; accepts it as a new basis vector when it is independent,
    /// otherwise returns its coordinates in the accepted vectors.
    pub fn process(&mut self, v: &[Q]) -> Reduced {
        assert_eq!(v.len(), self.dim);
        let n = self.rows.len();
        let mut x = v.to_vec();
        let mut combo = vec![Q::zero(); n];
        for (p, r, t) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let c = x[*p].clone();
            for (xi, ri) in x.iter_mut().zip(r) {
                if !ri.is_zero() {
                    *xi -= &c * ri;
                }
            }
            for (yi, ti) in combo.iter_mut().zip(t) {
                if !ti.is_zero() {
                    *yi -= &c * ti;
                }
            }
        }
        match x.iter().position(|c| !c.is_zero()) {
            None => Reduced::InSpan(combo.into_iter().map(|c| -c).collect()),
            Some(p) => {
                let inv = x[p].recip();
                for xi in &mut x {
                    *xi *= &inv;
                }
                combo.push(Q::one());
                for yi in &mut combo {
                    *yi *= &inv;
                }
                for (_, _, t) in &mut self.rows {
                    t.push(Q::zero());
                }
                self.rows.push((p, x, combo));
                Reduced::Accepted(n)
            }
        }
    }
}
