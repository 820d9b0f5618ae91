//! Fraction-free integer elimination.
//!
//! Bareiss elimination keeps every intermediate entry an integer minor of the
//! input, so ranks and determinants of small integer matrices are exact.

/// Rank of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    bareiss(&mut m).0
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (rank, sign) = bareiss(&mut m);
    if rank < n {
        0
    } else {
        sign * m[n - 1][n - 1]
    }
}

// Returns (rank, sign of the row permutation). On full rank the last pivot is
// the determinant up to that sign.
fn bareiss(m: &mut [Vec<i128>]) -> (usize, i128) {
    let rows = m.len();
    if rows == 0 {
        return (0, 1);
    }
    let cols = m[0].len();
    let mut sign = 1;
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    (r, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(
            determinant(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            4
        );
        assert_eq!(
            determinant(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
            0
        );
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
        assert_eq!(rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 1, 1]]), 3);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
    }
}
