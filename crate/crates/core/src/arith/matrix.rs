use super::field::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: E) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<T: Clone, G: FnMut(&E) -> T>(&self, f: G) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Clone, Er, G: FnMut(&E) -> Result<T, Er>>(&self, f: G) -> Result<Matrix<T>, Er> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), &field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        self.map(|x| field.mul(x, s))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = field.mul(self.get(i, j), other.get(k, l));
                        out.set(i * other.rows + k, j * other.cols + l, v);
                    }
                }
            }
        }
        out
    }
}

/// Result of reduced row-echelon elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub rank: usize,
    /// Same shape as the input; zero rows at the bottom.
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

/// Exact Gauss-Jordan elimination. The output is the unique RREF of `m`.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.row_vecs();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, pr);
        let inv = field.inv(&a[r][c]).expect("pivot is nonzero");
        for x in a[r].iter_mut().skip(c) {
            *x = field.mul(x, &inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rank: r, reduced: Matrix::from_rows(cols, a), pivots }
}

/// Determinant by elimination.
pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.row_vecs();
    let mut det = field.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if pr != c {
            a.swap(pr, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("pivot is nonzero");
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..n {
                let v = field.sub(&a[i][j], &field.mul(&factor, &a[c][j]));
                a[i][j] = v;
            }
        }
    }
    det
}

/// A linear subspace of `K^ambient_dim`, stored as its unique RREF basis.
/// Two subspaces are equal iff their representatives are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient_dim: usize,
    basis: Matrix<E>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    /// Row span of `generators`.
    pub fn span<F: Field<Elem = E>>(field: &F, generators: &Matrix<E>) -> Self {
        let Rref { rank, reduced, .. } = rref(field, generators);
        let rows = (0..rank).map(|r| reduced.row(r).to_vec()).collect();
        Self { ambient_dim: generators.cols(), basis: Matrix::from_rows(generators.cols(), rows) }
    }

    pub fn from_vectors<F: Field<Elem = E>>(field: &F, ambient_dim: usize, vectors: Vec<Vec<E>>) -> Self {
        Self::span(field, &Matrix::from_rows(ambient_dim, vectors))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::from_rows(ambient_dim, Vec::new()) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        rref(field, &Matrix::from_rows(self.ambient_dim, rows)).rank == self.dim()
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image<F: Field<Elem = E>>(&self, field: &F, map: &Matrix<E>) -> Self {
        assert_eq!(map.cols(), self.ambient_dim);
        let images = (0..self.dim()).map(|r| map.mul_vec(field, self.basis.row(r))).collect();
        Self::from_vectors(field, map.rows(), images)
    }

    pub fn map_entries<T: Clone + PartialEq, F: Field<Elem = T>>(
        &self,
        field: &F,
        f: impl FnMut(&E) -> T,
    ) -> Subspace<T> {
        Subspace::span(field, &self.basis.map(f))
    }
}

/// Null space `{v : m v = 0}` as a subspace of `K^cols`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let Rref { reduced, pivots, .. } = rref(field, m);
    let cols = m.cols();
    let mut vectors = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(reduced.get(r, free));
        }
        vectors.push(v);
    }
    Subspace::from_vectors(field, cols, vectors)
}
