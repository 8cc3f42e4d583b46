//! Dense elimination on small complex matrices: rank, kernel, image.
//!
//! Pivots below `rel_tol * max|entry|` count as zero. Real systems go
//! through the same path with zero imaginary parts, so their kernels come out
//! real.

use num_complex::Complex64;

pub type Row = Vec<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Row>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn max_entry(rows: &[Row]) -> f64 {
    rows.iter()
        .flat_map(|r| r.iter())
        .fold(0.0, |m, z| m.max(z.norm()))
}

pub fn rref(rows: &[Row], ncols: usize, rel_tol: f64) -> Rref {
    let mut m: Vec<Row> = rows.to_vec();
    let scale = max_entry(&m);
    let threshold = rel_tol * scale;
    let mut pivots = Vec::new();
    let mut r = 0;
    if scale == 0.0 {
        return Rref {
            rows: m,
            pivots,
            ncols,
        };
    }
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let (best, mag) = (r..m.len())
            .map(|i| (i, m[i][col].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag <= threshold {
            for row in m.iter_mut().skip(r) {
                row[col] = ZERO;
            }
            continue;
        }
        m.swap(r, best);
        let inv = m[r][col].inv();
        for v in m[r].iter_mut() {
            *v *= inv;
        }
        m[r][col] = Complex64::new(1.0, 0.0);
        for i in 0..m.len() {
            if i == r {
                continue;
            }
            let f = m[i][col];
            if f == ZERO {
                continue;
            }
            for j in 0..ncols {
                let d = f * m[r][j];
                m[i][j] -= d;
            }
            m[i][col] = ZERO;
        }
        pivots.push(col);
        r += 1;
    }
    Rref {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(rows: &[Row], ncols: usize, rel_tol: f64) -> usize {
    rref(rows, ncols, rel_tol).rank()
}

/// Basis of { v : rows · v = 0 }, one vector per free column.
pub fn kernel(rows: &[Row], ncols: usize, rel_tol: f64) -> Vec<Row> {
    let red = rref(rows, ncols, rel_tol);
    let free: Vec<usize> = (0..ncols).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ZERO; ncols];
            v[f] = Complex64::new(1.0, 0.0);
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = -red.rows[r][f];
            }
            v
        })
        .collect()
}

/// Basis of the column space: the pivot columns of the original matrix.
pub fn image(rows: &[Row], ncols: usize, rel_tol: f64) -> Vec<Row> {
    let red = rref(rows, ncols, rel_tol);
    red.pivots
        .iter()
        .map(|&c| rows.iter().map(|r| r[c]).collect())
        .collect()
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Row], b: &[Row], rel_tol: f64) -> bool {
    let n = a.first().or(b.first()).map_or(0, |v| v.len());
    let ra = rank(a, n, rel_tol);
    let rb = rank(b, n, rel_tol);
    let joint: Vec<Row> = a.iter().chain(b.iter()).cloned().collect();
    ra == rb && rank(&joint, n, rel_tol) == ra
}

pub fn real_rows(rows: &[Vec<f64>]) -> Vec<Row> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
        .collect()
}
