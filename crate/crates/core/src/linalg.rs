//! Small exact integer linear algebra: determinants, ranks, kernels and a
//! Smith normal form that keeps track of the row transform.

use num_integer_gcd::gcd;

pub type IntMatrix = Vec<Vec<i64>>;

mod num_integer_gcd {
    pub fn gcd(mut a: i128, mut b: i128) -> i128 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Row echelon form over the rationals, computed fraction-free; returns the
/// reduced rows and pivot columns.
fn echelon(rows: &[Vec<i64>], ncols: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                for j in 0..ncols {
                    a[i][j] = a[i][j] * x - a[r][j] * y;
                }
                normalize_row(&mut a[i]);
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

fn normalize_row(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// Integer basis of the rational kernel `{x : A x = 0}` (primitive vectors, one
/// per free column).
pub fn kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let (a, pivots) = echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        // x_f = L, x_p = -a[r][f] * L / a[r][p]
        let l = pivots.iter().enumerate().fold(1i128, |l, (r, &p)| lcm(l, a[r][p]));
        let mut v = vec![0i128; ncols];
        v[f] = l;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -a[r][f] * (l / a[r][p]);
        }
        let mut v128 = v;
        normalize_row(&mut v128);
        out.push(v128.into_iter().map(|x| x as i64).collect());
    }
    out
}

fn lcm(a: i128, b: i128) -> i128 {
    (a / gcd(a, b) * b).abs()
}

/// `P B Q = D` with `P`, `Q` unimodular and `D` diagonal with each entry
/// dividing the next. Only `P` and its inverse are kept.
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub left_inverse: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Diagonal entries different from one (the torsion coefficients).
    pub fn torsion(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d.abs() != 1).map(i64::abs).collect()
    }
}

/// Smith normal form of an `m x n` integer matrix given as rows.
pub fn smith_normal_form(b: &[Vec<i64>], m: usize, n: usize) -> SmithForm {
    let mut a: Vec<Vec<i128>> = b.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut p = identity128(m);
    let mut pinv = identity128(m);
    let mut diagonal = Vec::new();

    // Row op helpers keep P and P^-1 in sync: row_i += k row_j on A and P,
    // col_j -= k col_i on P^-1.
    let add_row =
        |a: &mut Vec<Vec<i128>>, p: &mut Vec<Vec<i128>>, pinv: &mut Vec<Vec<i128>>, i: usize, j: usize, k: i128| {
            for c in 0..n {
                a[i][c] += k * a[j][c];
            }
            for c in 0..m {
                p[i][c] += k * p[j][c];
            }
            for row in pinv.iter_mut() {
                row[j] -= k * row[i];
            }
        };
    let swap_rows = |a: &mut Vec<Vec<i128>>, p: &mut Vec<Vec<i128>>, pinv: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        a.swap(i, j);
        p.swap(i, j);
        for row in pinv.iter_mut() {
            row.swap(i, j);
        }
    };
    let negate_row = |a: &mut Vec<Vec<i128>>, p: &mut Vec<Vec<i128>>, pinv: &mut Vec<Vec<i128>>, i: usize| {
        a[i].iter_mut().for_each(|x| *x = -*x);
        p[i].iter_mut().for_each(|x| *x = -*x);
        for row in pinv.iter_mut() {
            row[i] = -row[i];
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut a, &mut p, &mut pinv, t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    add_row(&mut a, &mut p, &mut pinv, i, t, -q);
                    if a[i][t] != 0 {
                        clean = false;
                        swap_rows(&mut a, &mut p, &mut pinv, t, i);
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        clean = false;
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if clean {
                // divisibility: fold any offending row into the pivot row
                let piv = a[t][t];
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % piv != 0));
                match bad {
                    Some(i) => add_row(&mut a, &mut p, &mut pinv, t, i, 1),
                    None => break,
                }
            }
        }
        if a[t][t] < 0 {
            negate_row(&mut a, &mut p, &mut pinv, t);
        }
        diagonal.push(a[t][t] as i64);
        t += 1;
    }
    let to64 = |m: Vec<Vec<i128>>| -> IntMatrix {
        m.into_iter()
            .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("entry overflow in Smith form")).collect())
            .collect()
    };
    SmithForm { diagonal, left: to64(p), left_inverse: to64(pinv) }
}

fn identity128(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>], inner: usize, cols: usize) -> IntMatrix {
    a.iter().map(|r| (0..cols).map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        assert_eq!(det_i64(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_i64(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![vec![1, -1, -1], vec![1, -1, -1]];
        assert_eq!(rank(&rows, 3), 1);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&rows, v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn smith_form_transforms() {
        let b = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_normal_form(&b, 3, 3);
        assert_eq!(s.diagonal, vec![2, 6, 12]);
        let prod = mat_mul(&s.left, &s.left_inverse, 3, 3);
        for (i, r) in prod.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                assert_eq!(x, (i == j) as i64);
            }
        }
        assert_eq!(s.torsion(), vec![2, 6, 12]);
    }
}
