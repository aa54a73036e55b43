//! 2×2 matrices over a prime field, row-major `[a, b, c, d]`.

use crate::error::{Error, Result};

pub(crate) fn det(m: &[u32; 4], p: u32) -> u32 {
    (m[0] * m[3] + p * p - m[1] * m[2]) % p
}

pub(crate) fn mat_mul(x: &[u32; 4], y: &[u32; 4], p: u32) -> [u32; 4] {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // a^(p-2) by square-and-multiply
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn mat_inv(m: &[u32; 4], p: u32) -> [u32; 4] {
    let di = inv_mod(det(m, p), p);
    [
        m[3] * di % p,
        (p - m[1]) % p * di % p,
        (p - m[2]) % p * di % p,
        m[0] * di % p,
    ]
}

pub(crate) fn code(m: &[u32; 4], p: u32) -> usize {
    let p = p as usize;
    m[0] as usize + p * (m[1] as usize + p * (m[2] as usize + p * m[3] as usize))
}

/// Invertible (or determinant-one) matrices: identity first, the rest in
/// lexicographic order of `(a, b, c, d)`.
pub(crate) fn enumerate(p: u32, special: bool) -> Vec<[u32; 4]> {
    let identity = [1, 0, 0, 1];
    let mut out = vec![identity];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    let dm = det(&m, p);
                    let keep = if special { dm == 1 } else { dm != 0 };
                    if keep && m != identity {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn label(m: &[u32; 4]) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}

pub(crate) fn parse(text: &str, p: u32) -> Result<[u32; 4]> {
    let nums: Vec<u32> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map(|v| v % p))
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
    if nums.len() != 4 {
        return Err(Error::Parse(format!("expected four entries in {text:?}")));
    }
    Ok([nums[0], nums[1], nums[2], nums[3]])
}
