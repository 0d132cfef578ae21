//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_integer::Integer;

/// Rank over ℚ of an integer matrix. Every intermediate entry is a minor of
/// the input, so divisions are exact.
pub fn integer_rank<T: Integer + Clone>(m: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for i in rank + 1..rows {
            let lead = a[i][col].clone();
            for j in col + 1..cols {
                let v = piv.clone() * a[i][j].clone() - lead.clone() * a[rank][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][col] = T::zero();
        }
        prev = piv;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_cases() {
        assert_eq!(integer_rank::<i64>(&[]), 0);
        assert_eq!(integer_rank(&[vec![0i64, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![0i64, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]]), 2);
        assert_eq!(integer_rank(&[vec![2i64, 4], vec![1, 2]]), 1);
        let big: Vec<Vec<BigInt>> = vec![vec![1.into(), 2.into(), 3.into()], vec![4.into(), 5.into(), 6.into()], vec![7.into(), 8.into(), 10.into()]];
        assert_eq!(integer_rank(&big), 3);
    }
}
