//! Elements of free modules `A^g`, stored as columns of polynomials.

use std::fmt;

use crate::field::Field;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq)]
pub struct FreeElem<F: Field>(pub Vec<Poly<F>>);

impl<F: Field> FreeElem<F> {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        FreeElem(vec![Poly::zero(nvars); rank])
    }

    /// The `i`-th unit vector.
    pub fn unit(rank: usize, nvars: usize, i: usize) -> Self {
        let mut v = Self::zero(rank, nvars);
        v.0[i] = Poly::one(nvars);
        v
    }

    pub fn from_polys(entries: Vec<Poly<F>>) -> Self {
        FreeElem(entries)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Poly<F>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.0.iter().map(Poly::len).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        FreeElem(self.0.iter().map(|a| a * p).collect())
    }

    pub fn embed(&self, map: &[usize], nvars: usize) -> Self {
        FreeElem(self.0.iter().map(|a| a.embed(map, nvars)).collect())
    }

    /// Place this vector at offset `at` inside a vector of rank `rank`.
    pub fn shifted(&self, at: usize, rank: usize, nvars: usize) -> Self {
        let mut out = Self::zero(rank, nvars);
        for (i, p) in self.0.iter().enumerate() {
            out.0[at + i] = p.clone();
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> FreeElemDisplay<'a, F> {
        FreeElemDisplay { elem: self, names }
    }
}

impl<F: Field> fmt::Debug for FreeElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub struct FreeElemDisplay<'a, F: Field> {
    elem: &'a FreeElem<F>,
    names: &'a [String],
}

impl<F: Field> fmt::Display for FreeElemDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.elem.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display(self.names))?;
        }
        write!(f, ")")
    }
}

/// Dense matrix with polynomial entries; `cols[j]` is the image of the
/// `j`-th source unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: Vec<FreeElem<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: Vec<FreeElem<F>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.rank() == rows));
        Matrix { rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<F> {
        &self.cols[j].0[i]
    }

    pub fn apply(&self, v: &FreeElem<F>, nvars: usize) -> FreeElem<F> {
        assert_eq!(v.rank(), self.ncols());
        let mut out = FreeElem::zero(self.rows, nvars);
        for (c, coeff) in self.cols.iter().zip(&v.0) {
            if !coeff.is_zero() {
                out = out.add(&c.mul_poly(coeff));
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Matrix<F>, nvars: usize) -> Matrix<F> {
        Matrix::new(
            self.rows,
            rhs.cols.iter().map(|c| self.apply(c, nvars)).collect(),
        )
    }

    /// `self ⊗ I_g`: acts on `g` copies of a module, row/column index
    /// `(i, k) -> i * g + k`.
    pub fn kron_identity(&self, g: usize, nvars: usize) -> Matrix<F> {
        let mut cols = Vec::with_capacity(self.ncols() * g);
        for c in &self.cols {
            for k in 0..g {
                let mut v = FreeElem::zero(self.rows * g, nvars);
                for (i, p) in c.0.iter().enumerate() {
                    v.0[i * g + k] = p.clone();
                }
                cols.push(v);
            }
        }
        Matrix::new(self.rows * g, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(FreeElem::is_zero)
    }
}
