//! Coxeter systems: validated generator labels plus a Coxeter matrix.
//!
//! Built-in families use a fixed diagram numbering, since there is no
//! universal one:
//!
//! * `An`: chain, `m(i, i+1) = 3`.
//! * `Bn`: chain of 3s with `m(n-1, n) = 4`.
//! * `Dn`: chain `s1 .. s(n-1)` plus `sn` attached to `s(n-2)`.
//! * `E6`, `E7`, `E8`: chain `s1 s3 s4 .. sn` with `s2` attached to `s4`.
//! * `F4`: labels 3, 4, 3 along `s1 .. s4`.
//! * `H3`, `H4`: label 5 between `s1` and `s2`, then 3s.
//! * `I2(m)` (and `G2` = `I2(6)`).
//!
//! All pairs not listed commute. Products such as `A2xI2(2)` join the
//! blocks diagonally and relabel the generators `s1 .. sN` left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the generators of a system, as a bitmask.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        if rank == 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << rank) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> GenSet {
        GenSet(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn single(i: usize) -> GenSet {
        GenSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1u64 << i) != 0)
    }

    /// All subsets of `self`, in ascending bitmask order.
    pub fn subsets(self) -> Vec<GenSet> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u64;
        loop {
            out.push(GenSet(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort();
        out
    }
}

/// JSON document accepted for user-supplied systems.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDocument {
    pub name: String,
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

/// A finite-type Coxeter presentation `<s_i | (s_i s_j)^m_ij = 1>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterSystem {
    name: String,
    generators: Vec<String>,
    matrix: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    /// Validates a raw matrix and label list.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        matrix: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = generators.len();
        if n > 64 {
            return Err(Error::BadShape(format!(
                "{n} generators, at most 64 supported"
            )));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::BadShape(format!(
                "matrix must be {n}x{n} to match the generator list"
            )));
        }
        for i in 0..n {
            if generators[..i].contains(&generators[i]) {
                return Err(Error::DuplicateLabel(generators[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::AsymmetricMatrix(i, j));
                }
            }
        }
        for i in 0..n {
            if matrix[i][i] != 1 {
                return Err(Error::BadDiagonal(i));
            }
            for j in 0..n {
                if i != j && matrix[i][j] < 2 {
                    return Err(Error::EntryBelow2(i, j, matrix[i][j]));
                }
            }
        }
        Ok(CoxeterSystem {
            name: name.into(),
            generators,
            matrix,
        })
    }

    pub fn from_document(doc: SystemDocument) -> Result<Self> {
        CoxeterSystem::new(doc.name, doc.generators, doc.matrix)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SystemDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        CoxeterSystem::from_document(doc)
    }

    pub fn to_document(&self) -> SystemDocument {
        SystemDocument {
            name: self.name.clone(),
            generators: self.generators.clone(),
            matrix: self.matrix.clone(),
        }
    }

    /// The rank-0 system (trivial group).
    pub fn trivial() -> Self {
        CoxeterSystem {
            name: "trivial".into(),
            generators: vec![],
            matrix: vec![],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i][j]
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.generators[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// Parses a comma-separated label list (`"s1,s3"`); empty string is `∅`.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        let mut set = GenSet::EMPTY;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set.insert(self.index_of(part)?);
        }
        Ok(set)
    }

    pub fn subset_labels(&self, set: GenSet) -> Vec<String> {
        set.iter().map(|i| self.generators[i].clone()).collect()
    }

    pub fn word_labels(&self, word: &[usize]) -> Vec<String> {
        word.iter().map(|&i| self.generators[i].clone()).collect()
    }

    pub fn format_subset(&self, set: GenSet) -> String {
        format!("{{{}}}", self.subset_labels(set).join(","))
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        word.iter()
            .map(|&i| self.generators[i].as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Relators `s_i s_j` repeated `m_ij` times, `i < j`. The `s_i^2`
    /// relators are implicit in the involutive coset table.
    pub fn relators(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.matrix[i][j] as usize;
                let mut rel = Vec::with_capacity(2 * m);
                for _ in 0..m {
                    rel.push(i);
                    rel.push(j);
                }
                out.push(rel);
            }
        }
        out
    }

    /// Block-diagonal join with `m = 2` across blocks. Labels are kept
    /// when they stay distinct; otherwise the result is relabelled
    /// `s1 .. sN`.
    pub fn direct_product(&self, other: &CoxeterSystem) -> CoxeterSystem {
        let n = self.rank();
        let k = other.rank();
        let mut matrix = vec![vec![2u32; n + k]; n + k];
        for i in 0..n + k {
            matrix[i][i] = 1;
        }
        for i in 0..n {
            for j in 0..n {
                matrix[i][j] = self.matrix[i][j];
            }
        }
        for i in 0..k {
            for j in 0..k {
                matrix[n + i][n + j] = other.matrix[i][j];
            }
        }
        let mut generators: Vec<String> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        let clash = (0..generators.len()).any(|i| generators[..i].contains(&generators[i]));
        if clash {
            generators = (1..=n + k).map(|i| format!("s{i}")).collect();
        }
        let name = match (n, k) {
            (_, 0) => self.name.clone(),
            (0, _) => other.name.clone(),
            _ => format!("{}x{}", self.name, other.name),
        };
        CoxeterSystem {
            name,
            generators,
            matrix,
        }
    }

    /// Resolves a built-in name such as `F4`, `I2(7)` or `A2xI2(2)`.
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        let factors = split_product(name);
        if factors.len() > 1 {
            let mut acc = CoxeterSystem::builtin(factors[0])?;
            for f in &factors[1..] {
                acc = acc.direct_product(&CoxeterSystem::builtin(f)?);
            }
            // relabel uniformly so flags can address s1..sN
            let generators = (1..=acc.rank()).map(|i| format!("s{i}")).collect();
            return CoxeterSystem::new(name, generators, acc.matrix);
        }
        let unknown = || Error::UnknownSystem(name.to_string());
        let (family, rest) = name.split_at(
            name.find(|c: char| !c.is_ascii_alphabetic())
                .unwrap_or(name.len()),
        );
        let edges: Vec<(usize, usize, u32)>;
        let rank: usize;
        match family {
            "I" => {
                let inner = rest
                    .strip_prefix("2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                let m: u32 = inner.parse().map_err(|_| unknown())?;
                if m < 2 {
                    return Err(unknown());
                }
                rank = 2;
                edges = vec![(0, 1, m)];
            }
            _ => {
                let n: usize = rest.parse().map_err(|_| unknown())?;
                rank = n;
                let chain = |upto: usize| {
                    (0..upto.saturating_sub(1))
                        .map(|i| (i, i + 1, 3))
                        .collect::<Vec<_>>()
                };
                edges = match (family, n) {
                    ("A", n) if n >= 1 => chain(n),
                    ("B", n) if n >= 2 => {
                        let mut e = chain(n);
                        e.last_mut().unwrap().2 = 4;
                        e
                    }
                    ("D", n) if n >= 4 => {
                        let mut e = chain(n - 1);
                        e.push((n - 3, n - 1, 3));
                        e
                    }
                    ("E", 6..=8) => {
                        let mut e = vec![(0, 2, 3), (1, 3, 3)];
                        e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                        e
                    }
                    ("F", 4) => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
                    ("G", 2) => vec![(0, 1, 6)],
                    ("H", 3) | ("H", 4) => {
                        let mut e = chain(n);
                        e[0].2 = 5;
                        e
                    }
                    _ => return Err(unknown()),
                };
            }
        }
        let mut matrix = vec![vec![2u32; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, m) in edges {
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
        let generators = (1..=rank).map(|i| format!("s{i}")).collect();
        CoxeterSystem::new(name, generators, matrix)
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {})", self.name, self.rank())
    }
}

fn split_product(name: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in name.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' | '*' if depth == 0 => {
                out.push(&name[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&name[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("s{i}")).collect()
    }

    #[test]
    fn validates_a2() {
        let sys = CoxeterSystem::new("A2", labels(2), vec![vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(sys.rank(), 2);
        assert_eq!(sys, CoxeterSystem::builtin("A2").unwrap());
    }

    #[test]
    fn rejects_bad_matrices() {
        let e = CoxeterSystem::new("x", labels(2), vec![vec![1, 2], vec![3, 1]]).unwrap_err();
        assert_eq!(e.code(), "ASYMMETRIC_MATRIX");
        let e = CoxeterSystem::new("x", labels(2), vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(e.code(), "ENTRY_BELOW_2");
        let e = CoxeterSystem::new("x", labels(2), vec![vec![2, 3], vec![3, 1]]).unwrap_err();
        assert_eq!(e.code(), "BAD_DIAGONAL");
        let e = CoxeterSystem::new(
            "x",
            vec!["a".into(), "a".into()],
            vec![vec![1, 3], vec![3, 1]],
        )
        .unwrap_err();
        assert_eq!(e.code(), "DUPLICATE_LABEL");
    }

    #[test]
    fn builtin_numbering() {
        let f4 = CoxeterSystem::builtin("F4").unwrap();
        assert_eq!(
            (f4.m(0, 1), f4.m(1, 2), f4.m(2, 3), f4.m(0, 3)),
            (3, 4, 3, 2)
        );
        let d4 = CoxeterSystem::builtin("D4").unwrap();
        assert_eq!(
            (d4.m(0, 1), d4.m(1, 2), d4.m(1, 3), d4.m(2, 3)),
            (3, 3, 3, 2)
        );
        let b3 = CoxeterSystem::builtin("B3").unwrap();
        assert_eq!((b3.m(0, 1), b3.m(1, 2)), (3, 4));
        let h3 = CoxeterSystem::builtin("H3").unwrap();
        assert_eq!((h3.m(0, 1), h3.m(1, 2)), (5, 3));
        assert_eq!(CoxeterSystem::builtin("I2(7)").unwrap().m(0, 1), 7);
        assert!(CoxeterSystem::builtin("Q3").is_err());
        assert!(CoxeterSystem::builtin("I2(1)").is_err());
    }

    #[test]
    fn product_relabels() {
        let p = CoxeterSystem::builtin("A2xI2(2)").unwrap();
        assert_eq!(p.generators(), &labels(4)[..]);
        assert_eq!(p.m(0, 1), 3);
        assert_eq!(p.m(2, 3), 2);
        assert_eq!(p.m(1, 2), 2);
        let a2 = CoxeterSystem::builtin("A2").unwrap();
        assert_eq!(a2.direct_product(&CoxeterSystem::trivial()), a2);
    }

    #[test]
    fn json_document() {
        let sys = CoxeterSystem::from_json(
            r#"{"name":"x","generators":["a","b"],"matrix":[[1,4],[4,1]]}"#,
        )
        .unwrap();
        assert_eq!(sys.m(0, 1), 4);
        assert_eq!(sys.parse_subset("b").unwrap(), GenSet::single(1));
        assert!(sys.parse_subset("c").is_err());
    }

    #[test]
    fn subsets_enumerate() {
        let s = GenSet::from_indices([0, 2]);
        assert_eq!(
            s.subsets(),
            vec![GenSet(0), GenSet(1), GenSet(4), GenSet(5)]
        );
    }
}
