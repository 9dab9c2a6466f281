//! Permutations in one-line notation, transpositions, and Hessenberg
//! functions, all 1-indexed.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap for the factorial/Catalan enumerations; override with the
/// `HESSMG_MAX_N` environment variable.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Current enumeration cap: `HESSMG_MAX_N` if set to a positive integer,
/// otherwise [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumeration_bound() -> usize {
    std::env::var("HESSMG_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_ENUMERATION_BOUND)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("one-line notation must contain each of 1..={n} exactly once, got {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },
    #[error("transposition needs 1 <= j < k, got j={j}, k={k}")]
    BadTransposition { j: usize, k: usize },
    #[error("cannot parse {input:?} as {expected}")]
    Parse { input: String, expected: &'static str },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HessenbergError {
    #[error("a Hessenberg function needs at least one value")]
    Empty,
    #[error("h({j}) = {value} is outside the allowed range {j}..={n}")]
    OutOfRange { j: usize, value: usize, n: usize },
    #[error("h({j}) = {value} > h({next}) = {next_value}: values must be nondecreasing", next = j + 1)]
    NotMonotone {
        j: usize,
        value: usize,
        next_value: usize,
    },
    #[error("cannot parse {input:?} as a Hessenberg function")]
    Parse { input: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the enumeration bound {bound}; set HESSMG_MAX_N to raise it")]
    BoundExceeded { n: usize, bound: usize },
}

/// A permutation of `1..=n` stored in one-line notation: the i-th entry is
/// `w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking that the values
    /// are exactly `1..=n` in some order.
    pub fn from_one_line(values: Vec<usize>) -> Result<Self, PermutationError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        let ok = n > 0
            && values.iter().all(|&v| {
                let fresh = (1..=n).contains(&v) && !seen[v];
                if fresh {
                    seen[v] = true;
                }
                fresh
            });
        if ok {
            Ok(Permutation { values })
        } else {
            Err(PermutationError::NotAPermutation { n, values })
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for `1 <= i <= n`. Panics on an out-of-range index.
    pub fn value(&self, i: usize) -> usize {
        assert!(
            (1..=self.n()).contains(&i),
            "permutation index {i} out of range 1..={}",
            self.n()
        );
        self.values[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.values
    }

    /// The inverse permutation: `inverse().value(w(i)) == i`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || PermutationError::Parse {
            input: s.to_string(),
            expected: "a permutation in one-line notation like \"1,3,2\"",
        };
        let values = s
            .split(',')
            .map(|part| part.trim().parse::<usize>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_one_line(values).map_err(|_| parse_err())
    }
}

impl TryFrom<String> for Permutation {
    type Error = PermutationError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(w: Permutation) -> String {
        w.to_string()
    }
}

/// The transposition swapping the values `j` and `k`, written `s(j,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    j: usize,
    k: usize,
}

impl Transposition {
    pub fn new(j: usize, k: usize) -> Result<Self, PermutationError> {
        if 1 <= j && j < k {
            Ok(Transposition { j, k })
        } else {
            Err(PermutationError::BadTransposition { j, k })
        }
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Left action on one-line notation: swaps the values `j` and `k`
    /// wherever they occur, so `(s . w)(i) = s(w(i))`.
    pub fn apply(&self, w: &Permutation) -> Permutation {
        assert!(
            self.k <= w.n(),
            "transposition {self} does not act on a permutation of 1..={}",
            w.n()
        );
        let values = w
            .one_line()
            .iter()
            .map(|&v| {
                if v == self.j {
                    self.k
                } else if v == self.k {
                    self.j
                } else {
                    v
                }
            })
            .collect();
        Permutation { values }
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.j, self.k)
    }
}

impl FromStr for Transposition {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || PermutationError::Parse {
            input: s.to_string(),
            expected: "a transposition like \"s(2,3)\"",
        };
        let inner = s
            .trim()
            .strip_prefix("s(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(parse_err)?;
        let (j, k) = inner.split_once(',').ok_or_else(parse_err)?;
        let j = j.trim().parse::<usize>().map_err(|_| parse_err())?;
        let k = k.trim().parse::<usize>().map_err(|_| parse_err())?;
        Transposition::new(j, k).map_err(|_| parse_err())
    }
}

/// A Hessenberg function: a nondecreasing `h: {1..n} -> {1..n}` with
/// `h(j) >= j`. By convention `h(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    /// Validates and wraps a value sequence, reporting the first offending
    /// index: a value outside `j..=n`, or a descent.
    pub fn new(values: Vec<usize>) -> Result<Self, HessenbergError> {
        let n = values.len();
        if n == 0 {
            return Err(HessenbergError::Empty);
        }
        for (idx, &value) in values.iter().enumerate() {
            let j = idx + 1;
            if value < j || value > n {
                return Err(HessenbergError::OutOfRange { j, value, n });
            }
        }
        for j in 1..n {
            if values[j - 1] > values[j] {
                return Err(HessenbergError::NotMonotone {
                    j,
                    value: values[j - 1],
                    next_value: values[j],
                });
            }
        }
        Ok(HessenbergFunction { values })
    }

    /// The constant function `h(j) = n` (the whole flag variety).
    pub fn full(n: usize) -> Self {
        HessenbergFunction {
            values: vec![n; n],
        }
    }

    /// The minimal function `h(j) = j`.
    pub fn minimal(n: usize) -> Self {
        HessenbergFunction {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(j)` for `1 <= j <= n`, with the convention `h(0) = 0`.
    pub fn value(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        assert!(
            j <= self.n(),
            "Hessenberg function index {j} out of range 0..={}",
            self.n()
        );
        self.values[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_full(&self) -> bool {
        let n = self.n();
        self.values.iter().all(|&v| v == n)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(","))
    }
}

impl FromStr for HessenbergFunction {
    type Err = HessenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || HessenbergError::Parse {
            input: s.to_string(),
        };
        let values = s
            .split(',')
            .map(|part| part.trim().parse::<usize>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>, _>>()?;
        HessenbergFunction::new(values)
    }
}

impl TryFrom<String> for HessenbergFunction {
    type Error = HessenbergError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<HessenbergFunction> for String {
    fn from(h: HessenbergFunction) -> String {
        h.to_string()
    }
}

fn check_bound(n: usize) -> Result<(), EnumerationError> {
    let bound = enumeration_bound();
    if n > bound {
        Err(EnumerationError::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// All permutations of `1..=n` in lexicographic order of one-line notation.
pub fn enumerate_permutations(n: usize) -> Result<Vec<Permutation>, EnumerationError> {
    check_bound(n)?;
    // itertools yields k-permutations of a sorted iterator in lexicographic
    // order, which is exactly the contract here.
    Ok((1..=n)
        .permutations(n)
        .map(|values| Permutation { values })
        .collect())
}

/// All Hessenberg functions for a given `n` in lexicographic order of their
/// value sequences. The count is the n-th Catalan number.
pub fn enumerate_hessenberg_functions(
    n: usize,
) -> Result<Vec<HessenbergFunction>, EnumerationError> {
    check_bound(n)?;
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n);
    extend_hessenberg(n, &mut values, &mut out);
    Ok(out)
}

fn extend_hessenberg(n: usize, values: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
    let j = values.len() + 1;
    if j > n {
        out.push(HessenbergFunction {
            values: values.clone(),
        });
        return;
    }
    // h(j) ranges over max(j, h(j-1))..=n; ascending choice gives lex order.
    let lo = values.last().copied().unwrap_or(0).max(j);
    for value in lo..=n {
        values.push(value);
        extend_hessenberg(n, values, out);
        values.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(values: &[usize]) -> Permutation {
        Permutation::from_one_line(values.to_vec()).unwrap()
    }

    fn h(values: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(values.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(matches!(
            Permutation::from_one_line(vec![1, 1, 3]),
            Err(PermutationError::NotAPermutation { n: 3, .. })
        ));
        assert!(matches!(
            Permutation::from_one_line(vec![0, 1]),
            Err(PermutationError::NotAPermutation { .. })
        ));
        assert!(matches!(
            Permutation::from_one_line(vec![]),
            Err(PermutationError::NotAPermutation { n: 0, .. })
        ));
    }

    #[test]
    fn inverse_of_231_is_312() {
        assert_eq!(w(&[2, 3, 1]).inverse(), w(&[3, 1, 2]));
    }

    #[test]
    fn inverse_roundtrips() {
        for v in enumerate_permutations(5).unwrap() {
            assert_eq!(v.inverse().inverse(), v);
            for i in 1..=5 {
                assert_eq!(v.inverse().value(v.value(i)), i);
            }
        }
    }

    #[test]
    fn transposition_swaps_values() {
        let s23 = Transposition::new(2, 3).unwrap();
        assert_eq!(s23.apply(&w(&[1, 3, 2])), w(&[1, 2, 3]));
        let s13 = Transposition::new(1, 3).unwrap();
        assert_eq!(s13.apply(&w(&[3, 2, 1])), w(&[1, 2, 3]));
        let s12 = Transposition::new(1, 2).unwrap();
        assert_eq!(s12.apply(&w(&[1, 2])), w(&[2, 1]));
    }

    #[test]
    fn transposition_is_an_involution() {
        for v in enumerate_permutations(5).unwrap() {
            for j in 1..=4 {
                for k in j + 1..=5 {
                    let s = Transposition::new(j, k).unwrap();
                    assert_eq!(s.apply(&s.apply(&v)), v);
                }
            }
        }
    }

    #[test]
    fn bad_transpositions_are_rejected() {
        assert!(Transposition::new(0, 2).is_err());
        assert!(Transposition::new(2, 2).is_err());
        assert!(Transposition::new(3, 2).is_err());
    }

    #[test]
    fn permutation_text_roundtrip() {
        let v = w(&[1, 3, 2]);
        assert_eq!(v.to_string(), "1,3,2");
        assert_eq!("1,3,2".parse::<Permutation>().unwrap(), v);
        assert!("1,1,3".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn transposition_text_roundtrip() {
        let s = Transposition::new(2, 3).unwrap();
        assert_eq!(s.to_string(), "s(2,3)");
        assert_eq!("s(2,3)".parse::<Transposition>().unwrap(), s);
        assert!("s(3,2)".parse::<Transposition>().is_err());
        assert!("2,3".parse::<Transposition>().is_err());
    }

    #[test]
    fn hessenberg_validation_pinpoints_first_violation() {
        assert_eq!(
            HessenbergFunction::new(vec![1, 1, 3]),
            Err(HessenbergError::OutOfRange {
                j: 2,
                value: 1,
                n: 3
            })
        );
        assert_eq!(
            HessenbergFunction::new(vec![2, 1, 3]),
            Err(HessenbergError::NotMonotone {
                j: 1,
                value: 2,
                next_value: 1
            })
        );
        assert_eq!(
            HessenbergFunction::new(vec![1, 2, 4]),
            Err(HessenbergError::OutOfRange {
                j: 3,
                value: 4,
                n: 3
            })
        );
        assert_eq!(HessenbergFunction::new(vec![]), Err(HessenbergError::Empty));
        assert!(HessenbergFunction::new(vec![2, 3, 3]).is_ok());
    }

    #[test]
    fn hessenberg_value_uses_h0_convention() {
        let f = h(&[2, 3, 3]);
        assert_eq!(f.value(0), 0);
        assert_eq!(f.value(1), 2);
        assert_eq!(f.value(3), 3);
    }

    #[test]
    fn enumerates_permutations_in_lex_order() {
        let all = enumerate_permutations(3).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], w(&[1, 2, 3]));
        assert_eq!(all[1], w(&[1, 3, 2]));
        assert_eq!(all[5], w(&[3, 2, 1]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn enumerates_hessenberg_functions_in_lex_order() {
        let two = enumerate_hessenberg_functions(2).unwrap();
        assert_eq!(two, vec![h(&[1, 2]), h(&[2, 2])]);
        let three = enumerate_hessenberg_functions(3).unwrap();
        assert_eq!(three.len(), 5);
        assert_eq!(three[0], h(&[1, 2, 3]));
        assert_eq!(three[4], h(&[3, 3, 3]));
        let mut sorted = three.clone();
        sorted.sort();
        assert_eq!(three, sorted);
        assert_eq!(enumerate_hessenberg_functions(4).unwrap().len(), 14);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let bound = enumeration_bound();
        assert_eq!(
            enumerate_permutations(bound + 1),
            Err(EnumerationError::BoundExceeded {
                n: bound + 1,
                bound
            })
        );
        assert_eq!(
            enumerate_hessenberg_functions(bound + 1),
            Err(EnumerationError::BoundExceeded {
                n: bound + 1,
                bound
            })
        );
    }
}
