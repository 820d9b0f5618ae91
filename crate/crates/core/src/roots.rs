//! Simply-laced Dynkin diagrams, their Cartan matrices and root systems.
//!
//! Roots are always stored in simple-root coordinates: entry `i` of a [`Root`]
//! is the coefficient of the simple root attached to vertex index `i`. With the
//! normalization `(α_i, α_i) = 2` the Cartan matrix is the Gram matrix of the
//! simple roots, so the pairing of two coordinate vectors is `xᵀ C y`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Named ADE diagrams.
///
/// Vertex labelling: `A_n` is the path `1 - 2 - ... - n` (labels start at 1 so
/// that `s_i` is the transposition `(i, i+1)`). `D_n` has branch vertex `0`
/// joined to the leaves `1`, `2` and to the arm `3 - 4 - ... - (n-1)`, which
/// for `D_4` is the picture with centre `0` and leaves `1, 2, 3`. `E_n` uses
/// Bourbaki's numbering shifted down by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl Preset {
    pub fn rank(self) -> usize {
        match self {
            Preset::A(n) | Preset::D(n) => n,
            Preset::E6 => 6,
            Preset::E7 => 7,
            Preset::E8 => 8,
        }
    }

    fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Preset::A(n) => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Preset::D(n) => {
                let mut e = vec![(0, 1), (0, 2), (0, 3)];
                e.extend((3..n - 1).map(|i| (i, i + 1)));
                e
            }
            Preset::E6 | Preset::E7 | Preset::E8 => {
                let n = self.rank();
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::A(n) => write!(f, "A{n}"),
            Preset::D(n) => write!(f, "D{n}"),
            Preset::E6 => f.write_str("E6"),
            Preset::E7 => f.write_str("E7"),
            Preset::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownPreset(s.to_string());
        let s = s.trim();
        let (kind, rank) = s.split_at(s.len().min(1));
        let rank: usize = rank.parse().map_err(|_| bad())?;
        match (kind.to_ascii_uppercase().as_str(), rank) {
            ("A", 1..=8) => Ok(Preset::A(rank)),
            ("D", 4..=8) => Ok(Preset::D(rank)),
            ("E", 6) => Ok(Preset::E6),
            ("E", 7) => Ok(Preset::E7),
            ("E", 8) => Ok(Preset::E8),
            _ => Err(bad()),
        }
    }
}

/// JSON form of a custom diagram: `{"vertices": n, "edges": [[i,j],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

/// A validated simply-laced Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    preset: Option<Preset>,
    label_base: usize,
    cartan: Vec<Vec<i64>>,
}

impl DynkinDiagram {
    pub fn from_preset(preset: Preset) -> Self {
        let mut d = Self::build(preset.rank(), preset.edges()).expect("preset diagrams are valid");
        d.preset = Some(preset);
        if matches!(preset, Preset::A(_)) {
            d.label_base = 1;
        }
        d
    }

    /// Parses a preset name such as `"A3"` or `"E6"`.
    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::from_preset(name.parse()?))
    }

    /// A custom diagram on vertices `0..n`. Rejects loops, repeated edges,
    /// disconnected graphs and anything whose Cartan matrix is not positive
    /// definite.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges.into_iter().collect())
    }

    pub fn from_spec(spec: &DiagramSpec) -> Result<Self> {
        Self::from_edges(spec.vertices, spec.edges.iter().map(|&[a, b]| (a, b)))
    }

    fn build(n: usize, raw: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram(
                "a diagram needs at least one vertex".into(),
            ));
        }
        let mut edges = BTreeSet::new();
        for (a, b) in raw {
            if a >= n || b >= n {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({a},{b}) uses a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("loop at vertex {a}")));
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidDiagram(format!("repeated edge ({a},{b})")));
            }
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        let d = DynkinDiagram {
            n,
            edges,
            preset: None,
            label_base: 0,
            cartan,
        };
        if !d.is_connected() {
            return Err(Error::InvalidDiagram("graph is not connected".into()));
        }
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = d.cartan[..k].iter().map(|r| r[..k].to_vec()).collect();
            let det = linalg::determinant(&minor);
            if det <= 0 {
                return Err(Error::InvalidDiagram(format!(
                    "Cartan matrix is not positive definite (leading minor of order {k} is {det})"
                )));
            }
        }
        Ok(d)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn preset_kind(&self) -> Option<Preset> {
        self.preset
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.cartan[i][j] == -1)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// External label of vertex index `i` (1-based for type A presets).
    pub fn label(&self, i: usize) -> usize {
        i + self.label_base
    }

    pub fn label_base(&self) -> usize {
        self.label_base
    }

    pub fn index_of_label(&self, label: i64) -> Result<usize> {
        let base = self.label_base as i64;
        if label < base || label >= base + self.n as i64 {
            return Err(Error::InvalidLetter(label));
        }
        Ok((label - base) as usize)
    }

    /// Formats a coordinate vector the way roots are written by hand: digits
    /// in vertex order (`110`), or for `D_n` presets the two-row form
    /// `top/bottom` with vertex 2 on top and `1, 0, 3, ..., n-1` below
    /// (`1/121` is `α_0·2 + α_1 + α_2 + α_3`).
    pub fn format_coords(&self, coords: &[i32]) -> String {
        if coords.iter().all(|&c| c <= 0) && coords.iter().any(|&c| c < 0) {
            let neg: Vec<i32> = coords.iter().map(|c| -c).collect();
            return format!("-{}", self.format_coords(&neg));
        }
        let wide = coords.iter().any(|&c| !(0..=9).contains(&c));
        let digits = |idx: &mut dyn Iterator<Item = usize>| -> String {
            if wide {
                let parts: Vec<String> = idx.map(|i| coords[i].to_string()).collect();
                format!("({})", parts.join(","))
            } else {
                idx.map(|i| char::from(b'0' + coords[i] as u8)).collect()
            }
        };
        match self.preset {
            Some(Preset::D(n)) if coords.len() == n => {
                let top = digits(&mut std::iter::once(2));
                let bottom = digits(&mut [1usize, 0].into_iter().chain(3..n));
                format!("{top}/{bottom}")
            }
            _ => digits(&mut (0..coords.len())),
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "custom({} vertices)", self.n),
        }
    }
}

/// An integer vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    pub fn zero(n: usize) -> Self {
        Root(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Root(v)
    }

    /// Parses a digit string such as `"011"`.
    pub fn from_digits(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as i32))
            .collect::<Option<Vec<_>>>()
            .map(Root)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i32> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Vertex indices with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn zip_with(&self, other: &Root, f: impl Fn(i32, i32) -> i32) -> Root {
        assert_eq!(self.dim(), other.dim(), "root dimensions differ");
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub(crate) fn scaled_sub(&self, k: i64, other: &Root) -> Root {
        self.zip_with(other, |a, b| a - (k as i32) * b)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl From<Vec<i32>> for Root {
    fn from(v: Vec<i32>) -> Self {
        Root(v)
    }
}

/// A diagram together with its enumerated positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let positive = enumerate_positive_roots(&diagram);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        RootSystem {
            diagram,
            positive,
            index,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(DynkinDiagram::preset(name)?))
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// Positive roots in lexicographic order of coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.is_positive_root(r) || (r.is_negative() && self.is_positive_root(&-r))
    }

    fn check_dim(&self, r: &Root) -> Result<()> {
        if r.dim() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: r.dim(),
            });
        }
        Ok(())
    }

    /// `⟨β, γ⟩ = βᵀ C γ`. Symmetric and integer valued; on dimension vectors
    /// this is also the Euler-type form of the preprojective algebra.
    pub fn pairing(&self, beta: &Root, gamma: &Root) -> Result<i64> {
        self.check_dim(beta)?;
        self.check_dim(gamma)?;
        Ok(self.pairing_unchecked(beta.coords(), gamma.coords()))
    }

    pub(crate) fn pairing_unchecked(&self, x: &[i32], y: &[i32]) -> i64 {
        let c = self.diagram.cartan_matrix();
        let mut total = 0i64;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row: i64 = c[i].iter().zip(y).map(|(&cij, &yj)| cij * yj as i64).sum();
            total += xi as i64 * row;
        }
        total
    }

    /// The reflection `t_α(β) = β − ⟨β,α⟩ α`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        self.check_dim(alpha)?;
        self.check_dim(beta)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.coords().to_vec()));
        }
        Ok(self.reflect_unchecked(alpha, beta))
    }

    pub(crate) fn reflect_unchecked(&self, alpha: &Root, beta: &Root) -> Root {
        let k = self.pairing_unchecked(beta.coords(), alpha.coords());
        beta.scaled_sub(k, alpha)
    }

    /// All unordered pairs `{γ₁, γ₂} ⊆ pool` with `γ₁ + γ₂ = β`, each pair
    /// listed with its lexicographically smaller member first.
    pub fn sum_decompositions<'a, I>(&self, beta: &Root, pool: I) -> Vec<(Root, Root)>
    where
        I: IntoIterator<Item = &'a Root>,
    {
        let mut pool: Vec<&Root> = pool.into_iter().collect();
        pool.sort();
        pool.dedup();
        let mut out = Vec::new();
        for (a, g1) in pool.iter().enumerate() {
            for g2 in &pool[a + 1..] {
                if &(*g1 + *g2) == beta {
                    out.push(((*g1).clone(), (*g2).clone()));
                }
            }
        }
        out
    }

    pub fn format_root(&self, r: &Root) -> String {
        self.diagram.format_coords(r.coords())
    }
}

/// Saturates the simple roots under simple reflections, keeping the positive
/// orbit.
fn enumerate_positive_roots(d: &DynkinDiagram) -> Vec<Root> {
    let n = d.rank();
    let c = d.cartan_matrix();
    let mut seen: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let k: i64 = beta
                .0
                .iter()
                .zip(c)
                .map(|(&b, row)| b as i64 * row[i])
                .sum();
            if k == 0 {
                continue;
            }
            let mut next = beta.clone();
            next.0[i] -= k as i32;
            if next.is_positive() && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Root {
        Root::from_digits(s).unwrap()
    }

    #[test]
    fn cartan_a3() {
        let d = DynkinDiagram::preset("A3").unwrap();
        assert_eq!(
            d.cartan_matrix(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
    }

    #[test]
    fn cartan_d4_centre_row() {
        let d = DynkinDiagram::preset("D4").unwrap();
        assert_eq!(d.cartan_matrix()[0], vec![2, -1, -1, -1]);
        let custom = DynkinDiagram::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(custom.cartan_matrix(), d.cartan_matrix());
    }

    #[test]
    fn rejects_bad_diagrams() {
        assert!(matches!(
            DynkinDiagram::from_edges(3, [(0, 1), (1, 2), (2, 0)]),
            Err(Error::InvalidDiagram(_))
        ));
        // affine D4~
        assert!(DynkinDiagram::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).is_err());
        assert!(DynkinDiagram::from_edges(3, [(0, 1)]).is_err());
        assert!(DynkinDiagram::from_edges(2, [(0, 0)]).is_err());
        assert!(DynkinDiagram::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(DynkinDiagram::preset("B3").is_err());
        assert!(DynkinDiagram::preset("D3").is_err());
        assert!(DynkinDiagram::preset("A9").is_err());
    }

    #[test]
    fn pairing_examples() {
        let rs = RootSystem::preset("A3").unwrap();
        assert_eq!(rs.pairing(&r("100"), &r("100")).unwrap(), 2);
        assert_eq!(rs.pairing(&r("100"), &r("010")).unwrap(), -1);
        // (1,1,0) C (0,1,1) = 2-1-1 + ... evaluated by hand: 0
        assert_eq!(rs.pairing(&r("110"), &r("011")).unwrap(), 0);
        assert!(matches!(
            rs.pairing(&r("10"), &r("100")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflect_examples() {
        let rs = RootSystem::preset("A3").unwrap();
        assert_eq!(rs.reflect(&r("100"), &r("100")).unwrap(), -r("100"));
        assert_eq!(rs.reflect(&r("100"), &r("010")).unwrap(), r("110"));
        assert!(matches!(
            rs.reflect(&r("101"), &r("010")),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [
            ("A1", 1),
            ("A3", 6),
            ("A8", 36),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(
                RootSystem::preset(name).unwrap().positive_roots().len(),
                count,
                "{name}"
            );
        }
    }

    #[test]
    fn type_a_roots_are_intervals() {
        // independent description: β_(i,j) = α_i + ... + α_{j-1}
        for n in 1..=6 {
            let rs = RootSystem::preset(&format!("A{n}")).unwrap();
            let mut expected = Vec::new();
            for i in 0..n {
                for j in i + 1..=n {
                    let mut v = vec![0; n];
                    v[i..j].iter_mut().for_each(|c| *c = 1);
                    expected.push(Root::new(v));
                }
            }
            expected.sort();
            assert_eq!(rs.positive_roots(), expected.as_slice());
        }
    }

    #[test]
    fn highest_root_e8() {
        let rs = RootSystem::preset("E8").unwrap();
        let top = rs
            .positive_roots()
            .iter()
            .max_by_key(|r| r.height())
            .unwrap();
        assert_eq!(top.height(), 29);
    }

    #[test]
    fn sum_decompositions_examples() {
        let rs = RootSystem::preset("A3").unwrap();
        let pool: Vec<Root> = ["100", "110", "111", "010", "011"].map(r).to_vec();
        assert_eq!(
            rs.sum_decompositions(&r("111"), &pool),
            vec![(r("011"), r("100"))]
        );
        assert!(rs.sum_decompositions(&r("100"), &pool).is_empty());
        assert_eq!(
            rs.sum_decompositions(&r("110"), &pool),
            vec![(r("010"), r("100"))]
        );
    }

    #[test]
    fn d_format() {
        let d = DynkinDiagram::preset("D4").unwrap();
        // α_0·2 + α_1 + α_2 + α_3
        assert_eq!(d.format_coords(&[2, 1, 1, 1]), "1/121");
        // α_0 + α_2 + α_3
        assert_eq!(d.format_coords(&[1, 0, 1, 1]), "1/011");
        assert_eq!(d.format_coords(&[-1, 0, 0, 0]), "-0/010");
        let a = DynkinDiagram::preset("A3").unwrap();
        assert_eq!(a.format_coords(&[1, 1, 0]), "110");
    }

    #[test]
    fn labels() {
        let a = DynkinDiagram::preset("A3").unwrap();
        assert_eq!(a.index_of_label(1).unwrap(), 0);
        assert!(a.index_of_label(0).is_err());
        assert!(a.index_of_label(4).is_err());
        let d = DynkinDiagram::preset("D4").unwrap();
        assert_eq!(d.index_of_label(0).unwrap(), 0);
        assert_eq!(d.label(3), 3);
    }
}
