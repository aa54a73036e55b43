use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || seen[i as usize] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Permutation(cur.clone())];
        // Standard next-permutation loop.
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycle notation on `1..=n`, each cycle starting at its
    /// smallest point, fixed points omitted; the identity is `()`.
    pub fn cycle_notation(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            out.push('(');
            out.push_str(&cycle.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parses a product of cycles such as `(1,2)(3 4)` on points `1..=degree`.
/// Cycles are applied left to right, matching group multiplication in
/// permutation groups; `e` and `()` denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let text = text.trim();
    let mut result = Permutation::identity(degree);
    if text == "e" {
        return Ok(result);
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
        let points: Vec<usize> = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&p| (1..=degree).contains(&p))
                    .ok_or_else(|| Error::Parse(format!("bad point {t:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        let mut dedup = points.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != points.len() {
            return Err(Error::Parse(format!("repeated point in cycle of {text:?}")));
        }
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    for cycle in &cycles {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for (k, &p) in cycle.iter().enumerate() {
            let q = cycle[(k + 1) % cycle.len()];
            images[p - 1] = (q - 1) as u8;
        }
        result = Permutation(images).compose(&result);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::identity(4));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
    }

    #[test]
    fn cycle_round_trip() {
        for p in Permutation::all(5) {
            let text = p.cycle_notation();
            assert_eq!(parse_cycles(&text, 5).unwrap(), p, "{text}");
        }
    }

    #[test]
    fn non_disjoint_cycles_apply_left_to_right() {
        // (1,2)(1,3): apply (1,2) first: 1->2, 2->1->3, 3->1.
        let p = parse_cycles("(1,2)(1,3)", 3).unwrap();
        assert_eq!(p.cycle_notation(), "(1,2,3)");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_cycles("(1,2", 3).is_err());
        assert!(parse_cycles("(1,4)", 3).is_err());
        assert!(parse_cycles("(1,1)", 3).is_err());
        assert!(parse_cycles("1,2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
