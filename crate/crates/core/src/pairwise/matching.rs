//! Maximum-weight bipartite matching with integer weights.
//!
//! The rectangular matrix is padded to a square one with zero entries and
//! solved as a min-cost assignment on `max - w` with the O(n^3) potential
//! (Hungarian) method. Padding makes "not necessarily perfect" matchings
//! come for free: a row assigned to a padding column is unmatched.

/// Dense nonnegative integer weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    w: Vec<u64>,
}

impl WeightMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        WeightMatrix {
            rows,
            cols,
            w: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged weight matrix");
        WeightMatrix {
            rows: rows.len(),
            cols,
            w: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.w[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.w[r * self.cols + c] = value;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub value: u64,
    /// Matched `(row, col)` pairs with positive weight, sorted by row.
    pub pairs: Vec<(usize, usize)>,
}

pub fn max_weight_matching(weights: &WeightMatrix) -> Matching {
    let n = weights.rows.max(weights.cols);
    if n == 0 || weights.rows == 0 || weights.cols == 0 {
        return Matching {
            value: 0,
            pairs: Vec::new(),
        };
    }
    let max = weights.w.iter().copied().max().unwrap_or(0) as i64;
    let cost = |i: usize, j: usize| -> i64 {
        if i < weights.rows && j < weights.cols {
            max - weights.get(i, j) as i64
        } else {
            max
        }
    };

    // 1-based potentials; p[j] is the row assigned to column j, 0 = none.
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut pairs = Vec::new();
    let mut value = 0;
    for (j, &pj) in p.iter().enumerate().take(n + 1).skip(1) {
        let (r, c) = (pj - 1, j - 1);
        if r < weights.rows && c < weights.cols && weights.get(r, c) > 0 {
            value += weights.get(r, c);
            pairs.push((r, c));
        }
    }
    pairs.sort_unstable();
    Matching { value, pairs }
}
