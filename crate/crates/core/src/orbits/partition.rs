//! Integer partitions and ab-diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&x| x == k).count()
    }

    /// `(d_1 + 1, …)` with each `d` as the Jordan block degree.
    pub fn degrees(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p - 1).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{x}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

/// All partitions of `total`, in lexicographic order of their part lists.
pub fn partitions(total: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=rest.min(max) {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(|parts| Partition { parts }).collect()
}

/// Rows of strictly alternating `a`/`b` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct ABDiagram {
    rows: Vec<String>,
}

impl TryFrom<Vec<String>> for ABDiagram {
    type Error = Error;
    fn try_from(rows: Vec<String>) -> Result<Self> {
        ABDiagram::new(rows)
    }
}

impl From<ABDiagram> for Vec<String> {
    fn from(d: ABDiagram) -> Self {
        d.rows
    }
}

impl ABDiagram {
    /// Rows are stored longest first, ties broken alphabetically.
    pub fn new(mut rows: Vec<String>) -> Result<Self> {
        for r in &rows {
            let b = r.as_bytes();
            if b.is_empty() || b.iter().any(|c| *c != b'a' && *c != b'b') || b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPartition(format!("row `{r}` is not an alternating a/b word")));
            }
        }
        rows.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        Ok(ABDiagram { rows })
    }

    /// The row of length `len` starting with `a` (`start_a`) or `b`.
    pub fn row_word(len: usize, start_a: bool) -> String {
        (0..len).map(|i| if (i % 2 == 0) == start_a { 'a' } else { 'b' }).collect()
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    /// `(#a, #b)`.
    pub fn counts(&self) -> (usize, usize) {
        let a = self.rows.iter().map(|r| r.bytes().filter(|&c| c == b'a').count()).sum();
        let b = self.rows.iter().map(|r| r.bytes().filter(|&c| c == b'b').count()).sum();
        (a, b)
    }

    pub fn jordan_type(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(String::len).collect()).expect("nonempty rows")
    }
}

impl fmt::Display for ABDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(0), vec![Partition::new(vec![]).unwrap()]);
        assert_eq!(partitions(3).iter().map(ToString::to_string).collect::<Vec<_>>(), ["(1,1,1)", "(2,1)", "(3)"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(ABDiagram::new(vec!["aab".into()]).is_err());
        assert!(ABDiagram::new(vec!["".into()]).is_err());
    }

    #[test]
    fn ab_counts() {
        let d = ABDiagram::new(vec!["a".into(), "bab".into(), "aba".into()]).unwrap();
        assert_eq!(d.counts(), (4, 3));
        assert_eq!(d.jordan_type().parts(), &[3, 3, 1]);
        assert_eq!(d.to_string(), "{aba,bab,a}");
        assert_eq!("3, 1,3".parse::<Partition>().unwrap().parts(), &[3, 3, 1]);
    }
}
