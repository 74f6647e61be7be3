use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolveOutcome<T> {
    Unique(Vec<T>),
    Underdetermined,
    Inconsistent,
}

impl<T> LinearSolveOutcome<T> {
    pub fn unique(self) -> Option<Vec<T>> {
        match self {
            LinearSolveOutcome::Unique(v) => Some(v),
            _ => None,
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged matrix");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    fn to_grid(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        if self.cols == 0 {
            return 0;
        }
        let mut g = self.to_grid();
        bareiss_echelon(&mut g, self.cols).len()
    }

    /// Solves `self * x = rhs` exactly.
    pub fn solve(&self, rhs: &[T]) -> LinearSolveOutcome<T> {
        assert_eq!(rhs.len(), self.rows, "rhs length");
        let n = self.cols;
        let mut g: Vec<Vec<T>> = self
            .to_grid()
            .into_iter()
            .zip(rhs.iter())
            .map(|(mut row, b)| {
                row.resize(n, T::zero());
                row.push(b.clone());
                row
            })
            .collect();
        if self.rows == 0 {
            return if n == 0 { LinearSolveOutcome::Unique(vec![]) } else { LinearSolveOutcome::Underdetermined };
        }
        let pivots = bareiss_echelon(&mut g, n + 1);
        if pivots.last() == Some(&n) {
            return LinearSolveOutcome::Inconsistent;
        }
        if pivots.len() < n {
            return LinearSolveOutcome::Underdetermined;
        }
        let mut x = vec![T::zero(); n];
        for r in (0..n).rev() {
            let mut acc = g[r][n].clone();
            for c in r + 1..n {
                acc = acc - g[r][c].clone() * x[c].clone();
            }
            x[r] = acc / g[r][r].clone();
        }
        LinearSolveOutcome::Unique(x)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

// Fraction-free forward elimination; returns pivot columns.
fn bareiss_echelon<T: Scalar>(g: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let rows = g.len();
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !g[i][c].is_zero()) else { continue };
        g.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (g[i][j].clone() * g[r][c].clone() - g[i][c].clone() * g[r][j].clone()) / prev.clone();
                g[i][j] = v;
            }
            g[i][c] = T::zero();
        }
        prev = g[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}
