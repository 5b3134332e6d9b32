//! Rank over the prime field F_p with p = 2^61 - 1.
//!
//! For an integer matrix the rank mod p never exceeds the rank over Q, so a
//! modular rank that meets a proven upper bound certifies the rational rank.

pub const P61: u64 = (1 << 61) - 1;

#[inline]
fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P61;
    let hi = (x >> 61) as u64;
    let s = lo + hi;
    let s = (s & P61) + (s >> 61);
    if s >= P61 {
        s - P61
    } else {
        s
    }
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    reduce(u128::from(a) * u128::from(b))
}

#[inline]
fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P61 - b
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P61 - 2)
}

pub fn to_field(x: i64) -> u64 {
    let r = x.rem_euclid(P61 as i64);
    r as u64
}

/// Rank of a row-major `rows x cols` integer matrix modulo `2^61 - 1`.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[i64]) -> usize {
    let mut a: Vec<u64> = entries.iter().map(|&x| to_field(x)).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i * cols + col] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pinv = inv(a[rank * cols + col]);
        for j in col..cols {
            a[rank * cols + j] = mul(a[rank * cols + j], pinv);
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for row in tail.chunks_mut(cols) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                row[j] = sub(row[j], mul(f, pivot_row[j]));
            }
        }
        rank += 1;
    }
    rank
}
