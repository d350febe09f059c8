//! Dense Gaussian elimination over `F_p`.

use crate::field::Field;

/// Rank of a dense matrix given as rows.
pub fn rank(field: &Field, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(*x, field.mul(c, p));
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let f = Field::new(7).unwrap();
        assert_eq!(rank(&f, vec![]), 0);
        assert_eq!(rank(&f, vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![3, 4]]), 2);
        // 1 2 / 4 1 is singular mod 7 (1 - 8 = -7)
        assert_eq!(rank(&f, vec![vec![1, 2], vec![4, 1]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
    }
}
