//! Type A: permutations of `[n+1]` as elements of `W(A_n)`.
//!
//! A permutation acts by `w(ε_k) = ε_{w(k)}` and the simple root `α_i` is
//! `ε_i − ε_{i+1}`, so the positive root `β_(i,j) = α_i + ⋯ + α_{j−1}`
//! corresponds to the value pair `(i, j)`. Everything in this module is
//! phrased with one-line notation and 1-based values.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Preset, Root, RootSystem};
use crate::weyl::WeylElement;

/// One-line notation `w(1) … w(n+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
    // positions[v - 1] = w⁻¹(v)
    positions: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        if m == 0 {
            return Err(Error::MalformedPermutation(
                "empty one-line notation".into(),
            ));
        }
        let mut positions = vec![0; m];
        for (k, &v) in one_line.iter().enumerate() {
            if v == 0 || v > m {
                return Err(Error::MalformedPermutation(format!(
                    "value {v} outside 1..={m}"
                )));
            }
            if positions[v - 1] != 0 {
                return Err(Error::MalformedPermutation(format!("value {v} repeats")));
            }
            positions[v - 1] = k + 1;
        }
        Ok(Permutation {
            one_line,
            positions,
        })
    }

    pub fn identity(m: usize) -> Self {
        Self::new((1..=m).collect()).expect("identity is a permutation")
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `n + 1`, the number of letters permuted.
    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// `w(k)` for 1-based `k`.
    pub fn value_at(&self, k: usize) -> usize {
        self.one_line[k - 1]
    }

    /// `w⁻¹(v)`, the 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.positions[v - 1]
    }

    pub fn descent_count(&self) -> usize {
        self.one_line.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// Root system `A_n` for this permutation's `S_{n+1}`.
    pub fn root_system(&self) -> Result<RootSystem> {
        type_a_system(self.size())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `42153` (only when `n+1 ≤ 9`) or `4,2,1,5,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: &str| Error::MalformedPermutation(format!("`{s}`: {m}"));
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad("non-numeric entry"))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(bad("compact digit form only allowed up to 9 letters"));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| bad("non-digit"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// `A_{m−1}` for permutations of `m` letters.
pub fn type_a_system(m: usize) -> Result<RootSystem> {
    if m < 2 {
        return Err(Error::MalformedPermutation(
            "type A needs at least two letters".into(),
        ));
    }
    Ok(RootSystem::new(crate::roots::DynkinDiagram::from_preset(
        Preset::A(m - 1),
    )))
}

/// `β_(i,j) = α_i + ⋯ + α_{j−1}` in `A_n` coordinates (`n = m − 1`).
pub fn beta(i: usize, j: usize, m: usize) -> Root {
    let mut v = vec![0; m - 1];
    for c in &mut v[i - 1..j - 1] {
        *c = 1;
    }
    Root::new(v)
}

/// The value pair `(i, j)` of a positive type-A root, if it is one.
pub fn pair_of_root(r: &Root) -> Option<(usize, usize)> {
    let c = r.coords();
    let first = c.iter().position(|&x| x != 0)?;
    let last = c.iter().rposition(|&x| x != 0)?;
    c[first..=last]
        .iter()
        .all(|&x| x == 1)
        .then_some((first + 1, last + 2))
}

// ε_a − ε_b in simple-root coordinates
fn epsilon_difference(a: usize, b: usize, n: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    for c in &mut v[lo - 1..hi - 1] {
        *c = sign;
    }
    v
}

fn check_rank(rs: &RootSystem, m: usize) -> Result<()> {
    match rs.diagram().preset_kind() {
        Some(Preset::A(n)) if n + 1 == m => Ok(()),
        _ => Err(Error::MalformedPermutation(format!(
            "a permutation of {m} letters needs the A{} root system, got {}",
            m.saturating_sub(1),
            rs.diagram()
        ))),
    }
}

pub fn perm_to_weyl(rs: &RootSystem, p: &Permutation) -> Result<WeylElement> {
    let m = p.size();
    check_rank(rs, m)?;
    let images = (1..m)
        .map(|i| epsilon_difference(p.value_at(i), p.value_at(i + 1), m - 1))
        .collect();
    Ok(WeylElement::from_images(images))
}

pub fn weyl_to_perm(rs: &RootSystem, w: &WeylElement) -> Result<Permutation> {
    let n = rs.rank();
    check_rank(rs, n + 1)?;
    let mut one_line = Vec::with_capacity(n + 1);
    for i in 0..n {
        let img = Root::new(w.image_of_simple(i).to_vec());
        let (pair, positive) = if img.is_positive() {
            (pair_of_root(&img), true)
        } else {
            (pair_of_root(&-&img), false)
        };
        let (lo, hi) = pair.ok_or_else(|| Error::NotARoot(img.coords().to_vec()))?;
        let (a, b) = if positive { (lo, hi) } else { (hi, lo) };
        if i == 0 {
            one_line.push(a);
        } else if one_line[i] != a {
            return Err(Error::Internal("inconsistent simple-root images".into()));
        }
        one_line.push(b);
    }
    Permutation::new(one_line)
}

/// `{ (i, j) : i < j, w⁻¹(j) < w⁻¹(i) }`.
pub fn classical_inversions(p: &Permutation) -> BTreeSet<(usize, usize)> {
    let m = p.size();
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for j in i + 1..=m {
            if p.position_of(j) < p.position_of(i) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Inversions `(i, j)` with no value `i < k < j` placed between `j` and `i`.
pub fn bruhat_classical_inversions(p: &Permutation) -> BTreeSet<(usize, usize)> {
    classical_inversions(p)
        .into_iter()
        .filter(|&(i, j)| {
            let (pj, pi) = (p.position_of(j), p.position_of(i));
            !(i + 1..j).any(|k| {
                let pk = p.position_of(k);
                pj < pk && pk < pi
            })
        })
        .collect()
}

/// Vertex labels `1..=n` lying in the support of some inversion.
pub fn support(p: &Permutation) -> BTreeSet<usize> {
    classical_inversions(p)
        .into_iter()
        .flat_map(|(i, j)| i..j)
        .collect()
}

/// The Bruhat inversion graph: one dot per row at `(i, w(i))`, joined along
/// Bruhat inversions. Edges are stored as value pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InversionGraph {
    pub dots: Vec<(usize, usize)>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl InversionGraph {
    pub fn size(&self) -> usize {
        self.dots.len()
    }
}

pub fn inversion_graph(p: &Permutation) -> InversionGraph {
    InversionGraph {
        dots: (1..=p.size()).map(|i| (i, p.value_at(i))).collect(),
        edges: bruhat_classical_inversions(p),
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// false if `a` and `b` were already joined
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Acyclicity of the graph as an undirected simple graph.
pub fn is_forest(g: &InversionGraph) -> bool {
    let mut sets = DisjointSets::new(g.size() + 1);
    g.edges.iter().all(|&(i, j)| sets.union(i, j))
}

/// No `a < b < c < d` with `w = ⋯d⋯b⋯c⋯a⋯`, and none with `w = ⋯c⋯da⋯b⋯`
/// where `d` and `a` are adjacent.
pub fn avoids_patterns(p: &Permutation) -> bool {
    let w = p.one_line();
    let m = w.len();
    for p1 in 0..m {
        for p2 in p1 + 1..m {
            for p3 in p2 + 1..m {
                for p4 in p3 + 1..m {
                    let (x1, x2, x3, x4) = (w[p1], w[p2], w[p3], w[p4]);
                    // 4231
                    if x4 < x2 && x2 < x3 && x3 < x1 {
                        return false;
                    }
                    // 3 41 2 with the 4 and 1 adjacent
                    if p3 == p2 + 1 && x3 < x4 && x4 < x1 && x1 < x2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// Calls `f` on every permutation of 1..=m starting with `first`, in
// lexicographic order.
fn for_each_with_first(m: usize, first: usize, mut f: impl FnMut(&[usize])) {
    let mut w: Vec<usize> = std::iter::once(first)
        .chain((1..=m).filter(|&v| v != first))
        .collect();
    loop {
        f(&w);
        // next permutation of w[1..]
        let tail = &mut w[1..];
        let Some(i) = (0..tail.len().saturating_sub(1))
            .rev()
            .find(|&i| tail[i] < tail[i + 1])
        else {
            return;
        };
        let j = (i + 1..tail.len())
            .rev()
            .find(|&j| tail[j] > tail[i])
            .unwrap();
        tail.swap(i, j);
        tail[i + 1..].reverse();
    }
}

/// Visits every permutation of `m` letters, split into blocks by first value
/// and processed in parallel.
pub fn par_count_permutations<F>(m: usize, pred: F) -> u64
where
    F: Fn(&Permutation) -> bool + Sync,
{
    (1..=m)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            for_each_with_first(m, first, |w| {
                let p = Permutation::new(w.to_vec()).expect("valid permutation");
                if pred(&p) {
                    count += 1;
                }
            });
            count
        })
        .sum()
}

/// All permutations of `m` letters in lexicographic order.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for first in 1..=m {
        for_each_with_first(m, first, |w| {
            out.push(Permutation::new(w.to_vec()).expect("valid permutation"));
        });
    }
    out
}

/// Number of permutations of `m` letters whose Bruhat inversion graph is a
/// forest. Refuses when `m!` exceeds `cap`.
pub fn count_forest_like(m: usize, cap: usize) -> Result<u64> {
    let too_many = (1..=m as u64)
        .try_fold(1u64, |acc, k| {
            acc.checked_mul(k).filter(|&f| f <= cap as u64)
        })
        .is_none();
    if too_many {
        return Err(Error::CapExceeded { cap });
    }
    if m == 0 {
        return Ok(0);
    }
    Ok(par_count_permutations(m, |p| {
        is_forest(&inversion_graph(p))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

/// An arc between the dots `i < j` after all dots are pushed onto one line,
/// recording on which side of each intermediate dot it passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcDiagram {
    pub endpoints: (usize, usize),
    pub passes: BTreeMap<usize, Side>,
}

fn require_bruhat(p: &Permutation, (i, j): (usize, usize)) -> Result<()> {
    if i == 0 || j > p.size() || i >= j || !bruhat_classical_inversions(p).contains(&(i, j)) {
        return Err(Error::NotBruhatInversion(i, j));
    }
    Ok(())
}

/// Dots below the segment (placed after `i` in one-line notation) keep the
/// arc above them; dots placed before `j` push it below. The Bruhat
/// condition rules out dots in between.
pub fn arc_diagram(p: &Permutation, edge: (usize, usize)) -> Result<ArcDiagram> {
    require_bruhat(p, edge)?;
    let (i, j) = edge;
    let (pi, pj) = (p.position_of(i), p.position_of(j));
    let passes = (i + 1..j)
        .map(|k| {
            let pk = p.position_of(k);
            let side = if pk > pi {
                Side::Above
            } else {
                debug_assert!(pk < pj);
                Side::Below
            };
            (k, side)
        })
        .collect();
    Ok(ArcDiagram {
        endpoints: edge,
        passes,
    })
}

/// The subquiver of the double quiver on the gaps crossed by an arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningQuiver {
    pub edge: (usize, usize),
    pub vertices: Vec<usize>,
    /// `(from, to)` between adjacent vertices.
    pub arrows: Vec<(usize, usize)>,
}

/// Vertices `i..j−1`; between gaps `k` and `k+1` sits dot `k+1`, giving
/// `k → k+1` if the arc passes above it and `k+1 → k` if below.
pub fn defining_quiver(arc: &ArcDiagram) -> DefiningQuiver {
    let (i, j) = arc.endpoints;
    let arrows = (i..j - 1)
        .map(|k| match arc.passes[&(k + 1)] {
            Side::Above => (k, k + 1),
            Side::Below => (k + 1, k),
        })
        .collect();
    DefiningQuiver {
        edge: arc.endpoints,
        vertices: (i..j).collect(),
        arrows,
    }
}

/// Splits `w = (a) j (b) i (c)`, moves values below `i` from `(b)`, `(c)` into
/// `(a)` and values above `j` from `(a)`, `(b)` into `(c)`, then sorts both
/// sides. The result has the single descent `j i`.
pub fn join_irreducible_w_e(p: &Permutation, edge: (usize, usize)) -> Result<Permutation> {
    require_bruhat(p, edge)?;
    let (i, j) = edge;
    let (pi, pj) = (p.position_of(i), p.position_of(j));
    let w = p.one_line();
    let (a, rest) = w.split_at(pj - 1);
    let b = &rest[1..pi - pj];
    let c = &w[pi..];
    let mut left: Vec<usize> = a.iter().copied().filter(|&v| v <= j).collect();
    let mut right: Vec<usize> = c.iter().copied().filter(|&v| v >= i).collect();
    left.extend(b.iter().chain(c).copied().filter(|&v| v < i));
    right.extend(a.iter().chain(b).copied().filter(|&v| v > j));
    debug_assert!(b.iter().all(|&v| v < i || v > j));
    left.sort_unstable();
    right.sort_unstable();
    let mut one_line = left;
    one_line.push(j);
    one_line.push(i);
    one_line.extend(right);
    Permutation::new(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pairs(xs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        xs.iter().copied().collect()
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("42153").one_line(), &[4, 2, 1, 5, 3]);
        assert_eq!(perm("4,2,1,5,3"), perm("42153"));
        assert!("4215".parse::<Permutation>().is_err());
        assert!("4415".parse::<Permutation>().is_err());
        assert!("1234567890".parse::<Permutation>().is_err());
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(perm("42153").to_string(), "42153");
    }

    #[test]
    fn weyl_round_trip_and_inversions() {
        let p = perm("42153");
        let rs = p.root_system().unwrap();
        let w = perm_to_weyl(&rs, &p).unwrap();
        assert_eq!(weyl_to_perm(&rs, &w).unwrap(), p);
        let inv: BTreeSet<Root> = [(1, 2), (1, 4), (2, 4), (3, 4), (3, 5)]
            .iter()
            .map(|&(i, j)| beta(i, j, 5))
            .collect();
        assert_eq!(rs.inversion_set(&w), inv);

        let id = perm("12345");
        assert!(perm_to_weyl(&rs, &id).unwrap().is_identity());
        let a1 = type_a_system(2).unwrap();
        assert_eq!(
            perm_to_weyl(&a1, &perm("21")).unwrap(),
            a1.simple_reflection(0)
        );
        assert!(perm_to_weyl(&a1, &p).is_err());
    }

    #[test]
    fn product_convention() {
        // s_1 s_2 sends 1 -> 2 -> ... as (s1 s2)(k) = s1(s2(k))
        let rs = type_a_system(3).unwrap();
        let w = rs.evaluate(&rs.word(&[1, 2]).unwrap()).unwrap();
        assert_eq!(weyl_to_perm(&rs, &w).unwrap(), perm("231"));
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(
            classical_inversions(&perm("42153")),
            pairs(&[(1, 2), (1, 4), (2, 4), (3, 4), (3, 5)])
        );
        assert!(classical_inversions(&perm("12345")).is_empty());
        assert_eq!(
            classical_inversions(&perm("42513")),
            pairs(&[(1, 2), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5)])
        );
        assert_eq!(
            bruhat_classical_inversions(&perm("42153")),
            pairs(&[(1, 2), (2, 4), (3, 4), (3, 5)])
        );
        assert_eq!(
            bruhat_classical_inversions(&perm("42513")),
            pairs(&[(1, 2), (1, 5), (2, 4), (3, 4), (3, 5)])
        );
        assert_eq!(
            bruhat_classical_inversions(&perm("12543")),
            pairs(&[(3, 4), (4, 5)])
        );
    }

    #[test]
    fn graphs_and_forests() {
        let g = inversion_graph(&perm("42153"));
        assert_eq!(g.edges.len(), 4);
        assert!(is_forest(&g));
        let g = inversion_graph(&perm("42513"));
        assert_eq!(g.edges.len(), 5);
        assert!(!is_forest(&g));
        let g = inversion_graph(&perm("12345"));
        assert!(g.edges.is_empty() && is_forest(&g));
        assert_eq!(g.dots[0], (1, 1));
    }

    #[test]
    fn patterns() {
        assert!(!avoids_patterns(&perm("42513")));
        assert!(avoids_patterns(&perm("42153")));
        assert!(avoids_patterns(&perm("12345")));
        assert!(!avoids_patterns(&perm("4231")));
        assert!(!avoids_patterns(&perm("3412")));
        // 3 4 x 1 2 with 4 and 1 apart is allowed by the second pattern
        assert!(avoids_patterns(&perm("34512")) == is_forest(&inversion_graph(&perm("34512"))));
    }

    #[test]
    fn support_sets() {
        assert_eq!(support(&perm("42153")), BTreeSet::from([1, 2, 3, 4]));
        assert!(support(&perm("123")).is_empty());
        assert_eq!(support(&perm("12543")), BTreeSet::from([3, 4]));
    }

    #[test]
    fn small_forest_counts() {
        assert_eq!(count_forest_like(2, DEFAULT_CAP).unwrap(), 2);
        assert_eq!(count_forest_like(3, DEFAULT_CAP).unwrap(), 6);
        assert_eq!(count_forest_like(4, DEFAULT_CAP).unwrap(), 22);
        assert_eq!(
            count_forest_like(10, DEFAULT_CAP),
            Err(Error::CapExceeded { cap: DEFAULT_CAP })
        );
    }

    #[test]
    fn permutation_enumeration() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn arcs() {
        let p = perm("42513");
        let arc = arc_diagram(&p, (2, 4)).unwrap();
        assert_eq!(arc.passes, BTreeMap::from([(3, Side::Above)]));
        let arc = arc_diagram(&p, (1, 5)).unwrap();
        assert_eq!(
            arc.passes,
            BTreeMap::from([(2, Side::Below), (3, Side::Above), (4, Side::Below)])
        );
        assert!(arc_diagram(&p, (1, 2)).unwrap().passes.is_empty());
        assert_eq!(
            arc_diagram(&p, (1, 4)),
            Err(Error::NotBruhatInversion(1, 4))
        );
        assert_eq!(
            arc_diagram(&p, (2, 3)),
            Err(Error::NotBruhatInversion(2, 3))
        );
    }

    #[test]
    fn defining_quivers() {
        let q = defining_quiver(&arc_diagram(&perm("42513"), (1, 5)).unwrap());
        assert_eq!(q.vertices, vec![1, 2, 3, 4]);
        assert_eq!(q.arrows, vec![(2, 1), (2, 3), (4, 3)]);
        let q = defining_quiver(&arc_diagram(&perm("42513"), (2, 4)).unwrap());
        assert_eq!((q.vertices, q.arrows), (vec![2, 3], vec![(2, 3)]));
        let q = defining_quiver(&arc_diagram(&perm("42351"), (1, 5)).unwrap());
        assert_eq!(q.arrows, vec![(2, 1), (3, 2), (4, 3)]);
    }

    #[test]
    fn w_e_construction() {
        let w = join_irreducible_w_e(&perm("56723814"), (3, 6)).unwrap();
        assert_eq!(w, perm("12563478"));
        assert_eq!(
            join_irreducible_w_e(&perm("21"), (1, 2)).unwrap(),
            perm("21")
        );
        let p = perm("42513");
        let we = join_irreducible_w_e(&p, (2, 4)).unwrap();
        assert_eq!(we, perm("14235"));
        assert_eq!(we.descent_count(), 1);
        assert!(classical_inversions(&we).is_subset(&classical_inversions(&p)));
        assert!(join_irreducible_w_e(&p, (1, 4)).is_err());
    }

    #[test]
    fn root_pairs() {
        assert_eq!(pair_of_root(&beta(2, 4, 5)), Some((2, 4)));
        assert_eq!(pair_of_root(&Root::new(vec![1, 0, 1])), None);
    }
}
