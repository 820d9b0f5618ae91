//! Bruhat inversions, supports and the Jordan-Hölder test.
//!
//! A positive root `β ∈ inv(w)` is a Bruhat inversion when `ℓ(t_β w) = ℓ(w) − 1`.
//! Three independent characterisations are implemented:
//!
//! * [`RootSystem::bruhat_inversions_def`] checks the length drop directly;
//! * [`RootSystem::bruhat_inversions_deletion`] deletes single letters from a
//!   reduced word and keeps the roots whose deletion stays reduced;
//! * [`RootSystem::non_bruhat_by_sum`] finds the inversions that are sums of
//!   two other inversions (valid because every diagram here is simply laced).
//!
//! Bruhat inversions are exactly the dimension vectors of the simple objects
//! of the torsion-free class attached to `w`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::roots::{Root, RootSystem};
use crate::weyl::{RootSequence, WeylElement, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BinvMethod {
    Definition,
    #[default]
    Deletion,
    Sum,
}

impl FromStr for BinvMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "def" | "definition" => Ok(BinvMethod::Definition),
            "deletion" => Ok(BinvMethod::Deletion),
            "sum" => Ok(BinvMethod::Sum),
            other => Err(format!("unknown method `{other}` (def, deletion, sum)")),
        }
    }
}

impl fmt::Display for BinvMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinvMethod::Definition => "def",
            BinvMethod::Deletion => "deletion",
            BinvMethod::Sum => "sum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JhpReport {
    pub binv: BTreeSet<Root>,
    pub supp: BTreeSet<usize>,
    pub counts_equal: bool,
    pub linearly_independent: bool,
    pub verdict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BrickFlag {
    Simple,
    NonSimple,
}

impl BrickFlag {
    pub fn symbol(self) -> char {
        match self {
            BrickFlag::Simple => 'S',
            BrickFlag::NonSimple => 'N',
        }
    }
}

/// Dimension vectors of the brick labels along the maximal green sequence of
/// a reduced word, each flagged simple or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickSequence {
    pub roots: RootSequence,
    pub flags: Vec<BrickFlag>,
}

impl RootSystem {
    /// `{ β ∈ inv(w) : ℓ(t_β w) = ℓ(w) − 1 }`.
    pub fn bruhat_inversions_def(&self, w: &WeylElement) -> BTreeSet<Root> {
        let l = self.length(w);
        self.inversion_set(w)
            .into_iter()
            .filter(|b| self.length(&self.left_mul_reflection(b, w)) + 1 == l)
            .collect()
    }

    /// Roots `β_i` of the root sequence of `word` whose letter can be deleted
    /// leaving a reduced word.
    pub fn bruhat_inversions_deletion(&self, word: &Word) -> Result<BTreeSet<Root>> {
        let seq = self.root_sequence(word)?;
        let mut out = BTreeSet::new();
        for (i, beta) in seq.0.into_iter().enumerate() {
            if self.is_reduced(&word.without(i))? {
                out.insert(beta);
            }
        }
        Ok(out)
    }

    /// Inversions expressible as `γ₁ + γ₂` with `γ₁, γ₂ ∈ inv(w)`.
    pub fn non_bruhat_by_sum(&self, w: &WeylElement) -> BTreeSet<Root> {
        let inv = self.inversion_set(w);
        let members: HashSet<&Root> = inv.iter().collect();
        let list: Vec<&Root> = inv.iter().collect();
        let mut out = BTreeSet::new();
        for (a, g1) in list.iter().enumerate() {
            for g2 in &list[a + 1..] {
                let s = *g1 + *g2;
                if members.contains(&s) {
                    out.insert(s);
                }
            }
        }
        out
    }

    pub fn bruhat_inversions(&self, w: &WeylElement, method: BinvMethod) -> BTreeSet<Root> {
        match method {
            BinvMethod::Definition => self.bruhat_inversions_def(w),
            BinvMethod::Deletion => self
                .bruhat_inversions_deletion(&self.canonical_reduced_word(w))
                .expect("canonical words are reduced"),
            BinvMethod::Sum => {
                let non = self.non_bruhat_by_sum(w);
                self.inversion_set(w)
                    .into_iter()
                    .filter(|b| !non.contains(b))
                    .collect()
            }
        }
    }

    /// Vertices occurring in the support of some inversion; equivalently the
    /// letters of any reduced word of `w`.
    pub fn support(&self, w: &WeylElement) -> BTreeSet<usize> {
        self.inversion_set(w)
            .iter()
            .flat_map(|r| r.support())
            .collect()
    }

    /// Decides the Jordan-Hölder property for the torsion-free class of `w`
    /// by counting, and cross-checks the count against the exact rank of the
    /// Bruhat inversions. A disagreement is an internal error.
    pub fn jhp_check(&self, w: &WeylElement) -> Result<JhpReport> {
        let binv = self.bruhat_inversions(w, BinvMethod::Definition);
        let supp = self.support(w);
        let rows: Vec<Vec<i64>> = binv
            .iter()
            .map(|b| b.coords().iter().map(|&c| c as i64).collect())
            .collect();
        let linearly_independent = linalg::rank(&rows) == binv.len();
        let counts_equal = binv.len() == supp.len();
        if counts_equal != linearly_independent {
            return Err(Error::Internal(format!(
                "#Binv = #supp is {counts_equal} but linear independence is {linearly_independent}"
            )));
        }
        Ok(JhpReport {
            binv,
            supp,
            counts_equal,
            linearly_independent,
            verdict: counts_equal,
        })
    }

    /// Dimension vectors of the simple objects of the torsion-free class of `w`.
    pub fn simple_dimension_vectors(&self, w: &WeylElement) -> BTreeSet<Root> {
        self.bruhat_inversions_def(w)
    }

    pub fn brick_dimension_sequence(&self, word: &Word) -> Result<BrickSequence> {
        let roots = self.root_sequence(word)?;
        let w = self.evaluate(word)?;
        let binv = self.bruhat_inversions_def(&w);
        let flags = roots
            .0
            .iter()
            .map(|r| {
                if binv.contains(r) {
                    BrickFlag::Simple
                } else {
                    BrickFlag::NonSimple
                }
            })
            .collect();
        Ok(BrickSequence { roots, flags })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;

    fn r(s: &str) -> Root {
        Root::from_digits(s).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<Root> {
        xs.iter().map(|s| r(s)).collect()
    }

    fn d(top: i32, bottom: &str) -> Root {
        let b: Vec<i32> = bottom
            .chars()
            .map(|c| c.to_digit(10).unwrap() as i32)
            .collect();
        Root::new(vec![b[1], b[0], top, b[2]])
    }

    #[test]
    fn a3_example() {
        let rs = RootSystem::preset("A3").unwrap();
        let word = rs.word(&[1, 2, 3, 1, 2]).unwrap();
        let w = rs.evaluate(&word).unwrap();
        let expected = set(&["100", "010", "011"]);
        assert_eq!(rs.bruhat_inversions_def(&w), expected);
        assert_eq!(rs.bruhat_inversions_deletion(&word).unwrap(), expected);
        assert_eq!(rs.non_bruhat_by_sum(&w), set(&["110", "111"]));
        assert_eq!(rs.support(&w), BTreeSet::from([0, 1, 2]));
        let rep = rs.jhp_check(&w).unwrap();
        assert!(rep.verdict && rep.linearly_independent);
        assert_eq!(rs.simple_dimension_vectors(&w), expected);
    }

    #[test]
    fn d4_example() {
        let rs = RootSystem::preset("D4").unwrap();
        let word = rs.word(&[0, 1, 2, 3, 0, 1, 2, 3, 0]).unwrap();
        let w = rs.evaluate(&word).unwrap();
        let mut expected = rs.inversion_set(&w);
        assert!(expected.remove(&d(1, "121")));
        assert_eq!(expected.len(), 8);
        assert_eq!(rs.bruhat_inversions_def(&w), expected);
        assert_eq!(rs.bruhat_inversions_deletion(&word).unwrap(), expected);
        assert_eq!(rs.non_bruhat_by_sum(&w), BTreeSet::from([d(1, "121")]));
        assert_eq!(rs.support(&w), BTreeSet::from([0, 1, 2, 3]));
        let rep = rs.jhp_check(&w).unwrap();
        assert!(!rep.verdict && !rep.linearly_independent && !rep.counts_equal);
        // only the middle 0 fails the deletion test
        let dropped: Vec<usize> = (0..word.len())
            .filter(|&i| !rs.is_reduced(&word.without(i)).unwrap())
            .collect();
        assert_eq!(dropped, vec![4]);
    }

    #[test]
    fn trivial_cases() {
        let rs = RootSystem::preset("A3").unwrap();
        let e = rs.identity();
        assert!(rs.bruhat_inversions_def(&e).is_empty());
        assert!(rs.support(&e).is_empty());
        assert!(rs.jhp_check(&e).unwrap().verdict);
        assert!(rs.simple_dimension_vectors(&e).is_empty());
        assert_eq!(
            rs.bruhat_inversions_deletion(&rs.word(&[1]).unwrap())
                .unwrap(),
            set(&["100"])
        );
        assert!(rs
            .bruhat_inversions_deletion(&rs.word(&[2, 2]).unwrap())
            .is_err());
    }

    #[test]
    fn short_elements_have_no_sums() {
        let rs = RootSystem::preset("D4").unwrap();
        for w in rs.all_elements(DEFAULT_CAP).unwrap() {
            if rs.length(&w) <= 2 {
                assert!(rs.non_bruhat_by_sum(&w).is_empty());
            }
        }
    }

    #[test]
    fn brick_sequences() {
        let rs = RootSystem::preset("A3").unwrap();
        let b = rs
            .brick_dimension_sequence(&rs.word(&[1, 2, 3, 1, 2]).unwrap())
            .unwrap();
        let flags: String = b.flags.iter().map(|f| f.symbol()).collect();
        assert_eq!(flags, "SNNSS");
        let b = rs
            .brick_dimension_sequence(&rs.word(&[2, 3, 1, 2, 3]).unwrap())
            .unwrap();
        assert_eq!(b.roots.0, ["010", "011", "110", "111", "100"].map(r));
        let flags: String = b.flags.iter().map(|f| f.symbol()).collect();
        assert_eq!(flags, "SSNNS");
        let b = rs
            .brick_dimension_sequence(&rs.word(&[1]).unwrap())
            .unwrap();
        assert_eq!(b.flags, vec![BrickFlag::Simple]);
    }

    #[test]
    fn methods_agree_exhaustively_small() {
        for name in ["A1", "A2", "A3", "D4"] {
            let rs = RootSystem::preset(name).unwrap();
            for w in rs.all_elements(DEFAULT_CAP).unwrap() {
                let def = rs.bruhat_inversions(&w, BinvMethod::Definition);
                assert_eq!(def, rs.bruhat_inversions(&w, BinvMethod::Deletion));
                assert_eq!(def, rs.bruhat_inversions(&w, BinvMethod::Sum));
                assert!(def.len() <= rs.length(&w));
            }
        }
    }

    #[test]
    fn deletion_is_word_independent() {
        let rs = RootSystem::preset("A3").unwrap();
        for w in rs.all_elements(DEFAULT_CAP).unwrap() {
            let def = rs.bruhat_inversions_def(&w);
            for word in rs.all_reduced_words(&w, DEFAULT_CAP).unwrap() {
                assert_eq!(rs.bruhat_inversions_deletion(&word).unwrap(), def);
                let simple: BTreeSet<Root> = rs
                    .brick_dimension_sequence(&word)
                    .unwrap()
                    .roots
                    .0
                    .into_iter()
                    .zip(rs.brick_dimension_sequence(&word).unwrap().flags)
                    .filter(|(_, f)| *f == BrickFlag::Simple)
                    .map(|(r, _)| r)
                    .collect();
                assert_eq!(simple, def);
            }
        }
    }

    #[test]
    fn method_parsing() {
        assert_eq!("def".parse::<BinvMethod>().unwrap(), BinvMethod::Definition);
        assert_eq!("sum".parse::<BinvMethod>().unwrap(), BinvMethod::Sum);
        assert!("foo".parse::<BinvMethod>().is_err());
    }
}
