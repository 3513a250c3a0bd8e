//! Partitions and their shifted weight vectors.
//!
//! A `Partition` is a weakly decreasing tuple of nonnegative integers of
//! length `L >= 1`. Zero parts are admitted: the strictly positive object is
//! the shifted vector `mu_i = lambda_i + L - i + 1`, and `lambda = 0` (whose
//! `mu` is the staircase `delta = (L, ..., 2, 1)`) is needed throughout.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid { what: "partition", why: "length must be >= 1".into() });
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Invalid { what: "partition", why: "parts must be >= 0".into() });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid {
                what: "partition",
                why: format!("parts must be weakly decreasing, got {parts:?}"),
            });
        }
        Ok(Partition { parts })
    }

    /// The zero partition of length `l`.
    pub fn zero(l: usize) -> Self {
        assert!(l >= 1);
        Partition { parts: vec![0; l] }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// The shifted weight `mu = lambda + delta`.
    pub fn mu(&self) -> MuVector {
        let l = self.len() as i64;
        MuVector {
            mu: self
                .parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p + l - i as i64)
                .collect(),
        }
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { l: self.len(), lambda: self.parts.clone() }
    }

    pub fn from_json(j: &PartitionJson) -> Result<Self> {
        if j.lambda.len() != j.l {
            return Err(Error::Invalid {
                what: "partition JSON",
                why: format!("lambda has length {}, L = {}", j.lambda.len(), j.l),
            });
        }
        Partition::new(j.lambda.clone())
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(rename = "L")]
    pub l: usize,
    pub lambda: Vec<i64>,
}

/// Strictly decreasing positive weights `mu_1 > ... > mu_L >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuVector {
    mu: Vec<i64>,
}

impl MuVector {
    pub fn new(mu: Vec<i64>) -> Result<Self> {
        if mu.is_empty() || mu.last().copied().unwrap_or(0) < 1 {
            return Err(Error::Invalid { what: "mu vector", why: "entries must be >= 1".into() });
        }
        if mu.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid {
                what: "mu vector",
                why: format!("entries must be strictly decreasing, got {mu:?}"),
            });
        }
        Ok(MuVector { mu })
    }

    /// The staircase `delta = (l, l-1, ..., 1)`, i.e. `mu` of the zero
    /// partition.
    pub fn delta(l: usize) -> Self {
        MuVector { mu: (1..=l as i64).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[i64] {
        &self.mu
    }

    pub fn get(&self, j: usize) -> i64 {
        self.mu[j]
    }
}

/// All partitions of length `l` with parts bounded by `max_part`, in
/// lexicographic order (so sweep reports are reproducible).
pub fn partitions(l: usize, max_part: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    fn rec(l: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if cur.len() == l {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in 0..=bound {
            cur.push(p);
            rec(l, p, cur, out);
            cur.pop();
        }
    }
    rec(l, max_part, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_from_lambda_examples() {
        // lambda = (0,0): mu = delta = (2,1)
        assert_eq!(Partition::zero(2).mu().values(), &[2, 1]);
        // lambda = (1,0): mu = (3,1)
        assert_eq!(Partition::new(vec![1, 0]).unwrap().mu().values(), &[3, 1]);
        // lambda = (2,2,1): mu = (5,4,2)
        assert_eq!(Partition::new(vec![2, 2, 1]).unwrap().mu().values(), &[5, 4, 2]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        assert!(MuVector::new(vec![3, 3]).is_err());
        assert!(MuVector::new(vec![2, 0]).is_err());
        assert_eq!(MuVector::delta(3).values(), &[3, 2, 1]);
    }

    #[test]
    fn sweep_is_lexicographic() {
        let ps = partitions(2, 2);
        let flat: Vec<Vec<i64>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            flat,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0],
                vec![2, 1],
                vec![2, 2]
            ]
        );
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(sorted, ps);
    }

    #[test]
    fn json_round_trip() {
        let p = Partition::new(vec![2, 1, 0]).unwrap();
        let j = p.to_json();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"L":3,"lambda":[2,1,0]}"#);
        let back = Partition::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
