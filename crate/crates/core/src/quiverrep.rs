//! Thin representations of the double quiver of type `A_n`.
//!
//! Every vertex space is `0` or the base field and every arrow acts by `0` or
//! `1`, which is all the bricks built from arc diagrams need. Homomorphism
//! spaces are solved over `ℚ`. For thin 0/1 data their dimensions do not
//! depend on the field.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::Root;
use crate::typea::{
    arc_diagram, bruhat_classical_inversions, defining_quiver, DefiningQuiver, DisjointSets,
    Permutation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct ArrowJson {
    from: usize,
    to: usize,
}

#[derive(Serialize, Deserialize)]
struct ThinRepJson {
    n: usize,
    support: Vec<usize>,
    arrows: Vec<ArrowJson>,
}

/// Vertices are `1..=n`. An arrow `(a, b)` listed in `arrows` acts by the
/// identity; every other arrow of the double quiver acts by zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ThinRepJson", into = "ThinRepJson")]
pub struct ThinRep {
    n: usize,
    support: BTreeSet<usize>,
    arrows: BTreeSet<(usize, usize)>,
}

impl TryFrom<ThinRepJson> for ThinRep {
    type Error = Error;

    fn try_from(j: ThinRepJson) -> Result<Self> {
        ThinRep::new(j.n, j.support, j.arrows.into_iter().map(|a| (a.from, a.to)))
    }
}

impl From<ThinRep> for ThinRepJson {
    fn from(m: ThinRep) -> Self {
        ThinRepJson {
            n: m.n,
            support: m.support.into_iter().collect(),
            arrows: m
                .arrows
                .into_iter()
                .map(|(from, to)| ArrowJson { from, to })
                .collect(),
        }
    }
}

impl ThinRep {
    pub fn new(
        n: usize,
        support: impl IntoIterator<Item = usize>,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        if let Some(&v) = support.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidRepresentation(format!(
                "vertex {v} outside 1..={n}"
            )));
        }
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        for &(a, b) in &arrows {
            if a.abs_diff(b) != 1 {
                return Err(Error::InvalidRepresentation(format!(
                    "{a}->{b} is not an arrow of the double quiver"
                )));
            }
            if !support.contains(&a) || !support.contains(&b) {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {a}->{b} leaves the support"
                )));
            }
        }
        Ok(ThinRep { n, support, arrows })
    }

    pub fn zero(n: usize) -> Self {
        ThinRep {
            n,
            support: BTreeSet::new(),
            arrows: BTreeSet::new(),
        }
    }

    /// The simple module `S_i`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        Self::new(n, [i], [])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    fn scalar(&self, a: usize, b: usize) -> i64 {
        self.arrows.contains(&(a, b)) as i64
    }

    // every arrow of the double quiver
    fn double_arrows(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..n).flat_map(|k| [(k, k + 1), (k + 1, k)])
    }

    /// Indicator vector of the support.
    pub fn dimension_vector(&self) -> Root {
        Root::new(
            (1..=self.n)
                .map(|v| self.support.contains(&v) as i32)
                .collect(),
        )
    }

    /// Value of `Σ ± a a*` at each vertex, listing those where it is nonzero.
    pub fn preprojective_defects(&self) -> Vec<(usize, i64)> {
        (1..=self.n)
            .filter_map(|v| {
                let mut value = 0;
                if v < self.n {
                    value += self.scalar(v, v + 1) * self.scalar(v + 1, v);
                }
                if v > 1 {
                    value -= self.scalar(v, v - 1) * self.scalar(v - 1, v);
                }
                (value != 0).then_some((v, value))
            })
            .collect()
    }

    pub fn check_preprojective_relations(&self) -> bool {
        self.preprojective_defects().is_empty()
    }

    /// Composition-series picture: one column per vertex, arrows point down.
    pub fn to_tex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let lo = *self.support.first().unwrap();
        let hi = *self.support.last().unwrap();
        let mut level: BTreeMap<usize, usize> = self.support.iter().map(|&v| (v, 0)).collect();
        // the support graph is a disjoint union of paths, so n passes settle it
        for _ in 0..self.support.len() {
            for &(a, b) in &self.arrows {
                let next = level[&a] + 1;
                if level[&b] < next {
                    level.insert(b, next);
                }
            }
        }
        let depth = level.values().copied().max().unwrap_or(0);
        let mut out = String::from("\\begin{smallmatrix}");
        for row in 0..=depth {
            if row > 0 {
                out.push_str(" \\\\ ");
            }
            let cells: Vec<String> = (lo..=hi)
                .map(|v| match level.get(&v) {
                    Some(&l) if l == row => v.to_string(),
                    _ => String::new(),
                })
                .collect();
            out.push_str(&cells.join(" & "));
        }
        out.push_str("\\end{smallmatrix}");
        out
    }
}

/// Thin representation attached to a defining quiver on `1..=n`.
pub fn build_brick(q: &DefiningQuiver, n: usize) -> Result<ThinRep> {
    ThinRep::new(n, q.vertices.iter().copied(), q.arrows.iter().copied())
}

/// `B_e` for every Bruhat inversion `e` of `p`, keyed by edge.
pub fn bricks_of_permutation(p: &Permutation) -> Result<Vec<((usize, usize), ThinRep)>> {
    let n = p.size() - 1;
    bruhat_classical_inversions(p)
        .into_iter()
        .map(|e| {
            let q = defining_quiver(&arc_diagram(p, e)?);
            Ok((e, build_brick(&q, n)?))
        })
        .collect()
}

/// `Hom(M, N)` as a subspace of `ℚ^shared`, one coordinate per vertex in both
/// supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub vertices: Vec<usize>,
    pub basis: Vec<Vec<Rational64>>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn check_same_rank(m: &ThinRep, nn: &ThinRep) -> Result<()> {
    if m.n != nn.n {
        return Err(Error::DimensionMismatch {
            expected: m.n,
            found: nn.n,
        });
    }
    Ok(())
}

// One row per arrow a: u -> t, encoding φ_t M_a − N_a φ_u = 0.
fn commuting_rows(m: &ThinRep, nn: &ThinRep, index: &BTreeMap<usize, usize>) -> Vec<Vec<i64>> {
    ThinRep::double_arrows(m.n)
        .filter_map(|(u, t)| {
            let mut row = vec![0; index.len()];
            if let Some(&k) = index.get(&t) {
                row[k] += m.scalar(u, t);
            }
            if let Some(&k) = index.get(&u) {
                row[k] -= nn.scalar(u, t);
            }
            row.iter().any(|&x| x != 0).then_some(row)
        })
        .collect()
}

fn nullspace(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<Rational64>> {
    let mut a: Vec<Vec<Rational64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in &mut a[r] {
            *x *= inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational64::zero(); cols];
            v[free] = Rational64::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][free];
            }
            v
        })
        .collect()
}

pub fn hom_space(m: &ThinRep, nn: &ThinRep) -> Result<HomSpace> {
    check_same_rank(m, nn)?;
    let vertices: Vec<usize> = m.support.intersection(&nn.support).copied().collect();
    let index: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let basis = nullspace(&commuting_rows(m, nn, &index), vertices.len());
    Ok(HomSpace { vertices, basis })
}

// Components of the shared vertices under φ_u = φ_t, with a flag for those
// forced to vanish.
fn propagate(m: &ThinRep, nn: &ThinRep) -> (Vec<usize>, Vec<usize>, BTreeSet<usize>) {
    let shared: Vec<usize> = m.support.intersection(&nn.support).copied().collect();
    let mut sets = DisjointSets::new(m.n + 1);
    let mut forced = Vec::new();
    for (u, t) in ThinRep::double_arrows(m.n) {
        let lhs = if shared.contains(&t) {
            m.scalar(u, t)
        } else {
            0
        };
        let rhs = if shared.contains(&u) {
            nn.scalar(u, t)
        } else {
            0
        };
        match (lhs, rhs) {
            (0, 0) => {}
            (0, _) => forced.push(u),
            (_, 0) => forced.push(t),
            _ => {
                sets.union(u, t);
            }
        }
    }
    let roots: Vec<usize> = shared.iter().map(|&v| sets.find(v)).collect();
    let dead: BTreeSet<usize> = forced.iter().map(|&v| sets.find(v)).collect();
    (shared, roots, dead)
}

/// `dim Hom(M, N)` by union-find on the commuting constraints, an
/// independent route to the same number as [`hom_space`].
pub fn hom_dimension_by_propagation(m: &ThinRep, nn: &ThinRep) -> Result<usize> {
    check_same_rank(m, nn)?;
    let (_, roots, dead) = propagate(m, nn);
    let live: BTreeSet<usize> = roots.into_iter().filter(|r| !dead.contains(r)).collect();
    Ok(live.len())
}

/// `End(M)` is one-dimensional.
pub fn is_brick(m: &ThinRep) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    Ok(hom_space(m, m)?.dimension() == 1)
}

/// Whether every nonzero `M → N` is injective.
///
/// A thin hom is injective iff its scalar at every support vertex of `M` is
/// nonzero. With `Hom` of dimension at least two some nonzero combination
/// vanishes at any chosen vertex, so only a line can pass.
pub fn zero_mono_check(m: &ThinRep, nn: &ThinRep) -> Result<bool> {
    let hom = hom_space(m, nn)?;
    Ok(match hom.dimension() {
        0 => true,
        1 => hom.vertices.len() == m.support.len() && hom.basis[0].iter().all(|x| !x.is_zero()),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typea::beta;

    fn rep(n: usize, support: &[usize], arrows: &[(usize, usize)]) -> ThinRep {
        ThinRep::new(n, support.iter().copied(), arrows.iter().copied()).unwrap()
    }

    fn red() -> ThinRep {
        rep(4, &[1, 2, 3, 4], &[(2, 1), (2, 3), (4, 3)])
    }

    #[test]
    fn construction_and_validation() {
        assert!(ThinRep::new(3, [4], []).is_err());
        assert!(ThinRep::new(3, [1, 3], [(1, 3)]).is_err());
        assert!(ThinRep::new(3, [1], [(1, 2)]).is_err());
        let q = defining_quiver(&arc_diagram(&"42513".parse().unwrap(), (1, 5)).unwrap());
        assert_eq!(build_brick(&q, 4).unwrap(), red());
        assert_eq!(red().dimension_vector(), Root::new(vec![1, 1, 1, 1]));
        let blue = rep(4, &[3, 4], &[(4, 3)]);
        assert_eq!(blue.dimension_vector(), Root::new(vec![0, 0, 1, 1]));
        assert_eq!(
            ThinRep::simple(3, 2).unwrap().dimension_vector(),
            Root::simple(3, 1)
        );
    }

    #[test]
    fn json_schema() {
        let json = serde_json::to_string(&rep(4, &[3, 4], &[(4, 3)])).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"support":[3,4],"arrows":[{"from":4,"to":3}]}"#
        );
        let back: ThinRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep(4, &[3, 4], &[(4, 3)]));
        assert!(serde_json::from_str::<ThinRep>(
            r#"{"n":2,"support":[1],"arrows":[{"from":1,"to":2}]}"#
        )
        .is_err());
    }

    #[test]
    fn preprojective_relations() {
        assert!(red().check_preprojective_relations());
        assert!(ThinRep::zero(3).check_preprojective_relations());
        let both = rep(3, &[1, 2], &[(1, 2), (2, 1)]);
        assert_eq!(both.preprojective_defects(), vec![(1, 1), (2, -1)]);
        assert!(!both.check_preprojective_relations());
    }

    #[test]
    fn hom_dimensions() {
        let s1 = ThinRep::simple(3, 1).unwrap();
        let s2 = ThinRep::simple(3, 2).unwrap();
        assert_eq!(hom_space(&s1, &s1).unwrap().dimension(), 1);
        assert_eq!(hom_space(&s1, &s2).unwrap().dimension(), 0);
        assert_eq!(hom_space(&red(), &red()).unwrap().dimension(), 1);
        let top = rep(2, &[1, 2], &[(1, 2)]);
        let s1 = ThinRep::simple(2, 1).unwrap();
        let s2 = ThinRep::simple(2, 2).unwrap();
        assert_eq!(hom_space(&top, &s1).unwrap().dimension(), 1);
        assert_eq!(hom_space(&top, &s2).unwrap().dimension(), 0);
        assert_eq!(hom_space(&s2, &top).unwrap().dimension(), 1);
        assert!(hom_space(&s1, &red()).is_err());
    }

    #[test]
    fn propagation_agrees_with_elimination() {
        let reps = [
            red(),
            rep(4, &[3, 4], &[(4, 3)]),
            rep(4, &[2, 3], &[(2, 3)]),
            rep(4, &[1, 3], &[]),
            rep(4, &[1, 2, 3], &[(1, 2), (3, 2)]),
            rep(4, &[2, 3, 4], &[(3, 2), (3, 4)]),
            ThinRep::simple(4, 3).unwrap(),
        ];
        for m in &reps {
            for nn in &reps {
                assert_eq!(
                    hom_space(m, nn).unwrap().dimension(),
                    hom_dimension_by_propagation(m, nn).unwrap(),
                    "{m:?} {nn:?}"
                );
            }
        }
    }

    #[test]
    fn bricks() {
        assert!(is_brick(&red()).unwrap());
        assert!(is_brick(&ThinRep::simple(3, 2).unwrap()).unwrap());
        assert!(!is_brick(&rep(3, &[1, 3], &[])).unwrap());
        assert_eq!(is_brick(&ThinRep::zero(2)), Err(Error::ZeroRepresentation));
    }

    #[test]
    fn zero_or_mono() {
        let s1 = ThinRep::simple(2, 1).unwrap();
        let top = rep(2, &[1, 2], &[(1, 2)]);
        assert!(zero_mono_check(&s1, &top).unwrap());
        assert!(zero_mono_check(&s1, &s1).unwrap());
        // the projection onto the top S_1 is nonzero but not injective
        assert!(!zero_mono_check(&top, &s1).unwrap());
        let split = rep(3, &[1, 3], &[]);
        assert!(!zero_mono_check(&split, &split).unwrap());
    }

    #[test]
    fn bricks_of_42513() {
        let p: Permutation = "42513".parse().unwrap();
        let bricks = bricks_of_permutation(&p).unwrap();
        assert_eq!(bricks.len(), 5);
        for ((i, j), b) in &bricks {
            assert_eq!(b.dimension_vector(), beta(*i, *j, 5));
            assert!(is_brick(b).unwrap());
            assert!(b.check_preprojective_relations());
        }
        for (_, s) in &bricks {
            for (_, t) in &bricks {
                assert!(zero_mono_check(s, t).unwrap());
            }
        }
    }

    #[test]
    fn tex_pictures() {
        assert_eq!(ThinRep::zero(2).to_tex(), "0");
        assert_eq!(
            rep(4, &[3, 4], &[(4, 3)]).to_tex(),
            "\\begin{smallmatrix} & 4 \\\\ 3 & \\end{smallmatrix}"
        );
        assert_eq!(
            red().to_tex(),
            "\\begin{smallmatrix} & 2 &  & 4 \\\\ 1 &  & 3 & \\end{smallmatrix}"
        );
    }
}
