//! The path-algebra side: Coxeter elements of quiver orientations and
//! `c`-sortable elements.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{DynkinDiagram, Root, RootSystem};
use crate::weyl::{WeylElement, Word};

/// JSON form, e.g. `{"diagram":"A3","arrows":[[2,1],[2,3]]}` with vertex
/// labels as printed by the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationSpec {
    pub diagram: String,
    pub arrows: Vec<[i64; 2]>,
}

/// A Dynkin quiver: every diagram edge directed once. Arrows are stored as
/// `(source, target)` internal indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    diagram: DynkinDiagram,
    arrows: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn new(
        diagram: DynkinDiagram,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        let mut covered = BTreeSet::new();
        for &(a, b) in &arrows {
            if a >= diagram.rank() || b >= diagram.rank() || !diagram.is_adjacent(a, b) {
                return Err(Error::InvalidOrientation(format!(
                    "{}->{} is not an edge of {diagram}",
                    diagram.label(a.min(diagram.rank() - 1)),
                    diagram.label(b.min(diagram.rank() - 1))
                )));
            }
            if !covered.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidOrientation(format!(
                    "edge {}-{} is directed twice",
                    diagram.label(a),
                    diagram.label(b)
                )));
            }
        }
        if covered.len() != diagram.edges().count() {
            return Err(Error::InvalidOrientation(
                "every edge of the diagram needs a direction".into(),
            ));
        }
        let o = Orientation { diagram, arrows };
        if o.topological_order().is_none() {
            return Err(Error::InvalidOrientation("orientation has a cycle".into()));
        }
        Ok(o)
    }

    /// Every edge pointing from the larger index to the smaller one, so the
    /// Coxeter element is `s_0 s_1 ⋯` in index order.
    pub fn descending(diagram: DynkinDiagram) -> Self {
        let arrows: Vec<(usize, usize)> =
            diagram.edges().map(|(a, b)| (a.max(b), a.min(b))).collect();
        Self::new(diagram, arrows).expect("descending orientation is acyclic")
    }

    pub fn from_spec(spec: &OrientationSpec) -> Result<Self> {
        let diagram = DynkinDiagram::preset(&spec.diagram)?;
        let arrows = spec
            .arrows
            .iter()
            .map(|&[a, b]| Ok((diagram.index_of_label(a)?, diagram.index_of_label(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(diagram, arrows)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    // Kahn's algorithm on "targets come first", smallest index first.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.diagram.rank();
        let mut pending = vec![0usize; n];
        for &(source, _) in &self.arrows {
            pending[source] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| pending[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(source, target) in &self.arrows {
                if target == v {
                    pending[source] -= 1;
                    if pending[source] == 0 {
                        ready.insert(source);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

/// `c_Q`: for an arrow `i ← j`, `s_i` comes before `s_j`.
pub fn coxeter_element(o: &Orientation) -> Word {
    Word::new(o.topological_order().expect("orientation is acyclic"))
}

/// Blocks `c⁽⁰⁾ c⁽¹⁾ ⋯`, each a subword of `c` listed in `c`-order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortingWord {
    pub blocks: Vec<Vec<usize>>,
}

impl SortingWord {
    pub fn word(&self) -> Word {
        Word::new(self.blocks.concat())
    }

    pub fn supports(&self) -> Vec<BTreeSet<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().copied().collect())
            .collect()
    }
}

/// The greedy `c`-sorting word exists but its block supports are not nested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortFailure {
    pub blocks: Vec<Vec<usize>>,
    /// First `k` with `supp(c⁽ᵏ⁾) ⊉ supp(c⁽ᵏ⁺¹⁾)`.
    pub first_violation: usize,
}

fn nested_violation(blocks: &[Vec<usize>]) -> Option<usize> {
    blocks.windows(2).position(|pair| {
        let outer: BTreeSet<usize> = pair[0].iter().copied().collect();
        pair[1].iter().any(|s| !outer.contains(s))
    })
}

impl RootSystem {
    /// Scans `c c c ⋯` and takes each letter that is a left descent of what
    /// is still left of `w`. The result is the leftmost subword of `c^∞`
    /// spelling `w` reducedly; `w` is `c`-sortable iff its blocks are nested.
    pub fn c_sorting_word(
        &self,
        w: &WeylElement,
        c: &Word,
    ) -> std::result::Result<SortingWord, SortFailure> {
        let mut rest = w.clone();
        let mut blocks = Vec::new();
        while !rest.is_identity() {
            let mut block = Vec::new();
            for &s in c.letters() {
                if self
                    .inverse(&rest)
                    .apply(&self.simple_root(s))
                    .is_negative()
                {
                    rest = self.left_mul_simple(s, &rest);
                    block.push(s);
                }
            }
            debug_assert!(!block.is_empty(), "c must contain every letter");
            blocks.push(block);
        }
        match nested_violation(&blocks) {
            None => Ok(SortingWord { blocks }),
            Some(first_violation) => Err(SortFailure {
                blocks,
                first_violation,
            }),
        }
    }

    pub fn is_c_sortable(&self, w: &WeylElement, c: &Word) -> bool {
        self.c_sorting_word(w, c).is_ok()
    }

    /// Existential check straight from the definition: some reduced word of
    /// `w` splits into consecutive subwords of `c` with nested supports.
    pub fn is_c_sortable_brute_force(&self, w: &WeylElement, c: &Word, cap: usize) -> Result<bool> {
        let mut rank_in_c = vec![usize::MAX; self.rank()];
        for (k, &s) in c.letters().iter().enumerate() {
            rank_in_c[s] = k;
        }
        let all: BTreeSet<usize> = (0..self.rank()).collect();
        Ok(self
            .all_reduced_words(w, cap)?
            .iter()
            .any(|word| splits_nested(word.letters(), &rank_in_c, &all)))
    }

    /// All `c_Q`-sortable elements, in breadth-first order.
    pub fn sortable_elements(&self, o: &Orientation, cap: usize) -> Result<Vec<WeylElement>> {
        let c = coxeter_element(o);
        let all = self.all_elements(cap)?;
        Ok(all
            .into_par_iter()
            .filter(|w| self.is_c_sortable(w, &c))
            .collect())
    }

    fn require_sortable(&self, w: &WeylElement, o: &Orientation) -> Result<()> {
        if self.is_c_sortable(w, &coxeter_element(o)) {
            Ok(())
        } else {
            Err(Error::NotSortable)
        }
    }

    /// Dimension vectors of the indecomposables in `F_Q(w)`, which is `inv(w)`.
    pub fn torsion_free_indecomposables(
        &self,
        w: &WeylElement,
        o: &Orientation,
    ) -> Result<BTreeSet<Root>> {
        self.require_sortable(w, o)?;
        Ok(self.inversion_set(w))
    }

    /// Dimension vectors of the simple objects of `F_Q(w)`, which is `Binv(w)`.
    pub fn path_algebra_simples(&self, w: &WeylElement, o: &Orientation) -> Result<BTreeSet<Root>> {
        self.require_sortable(w, o)?;
        Ok(self.bruhat_inversions_def(w))
    }
}

fn splits_nested(word: &[usize], rank_in_c: &[usize], outer: &BTreeSet<usize>) -> bool {
    if word.is_empty() {
        return true;
    }
    let mut block = BTreeSet::new();
    for end in 0..word.len() {
        let s = word[end];
        if end > 0 && rank_in_c[word[end - 1]] >= rank_in_c[s] {
            break;
        }
        if !outer.contains(&s) {
            break;
        }
        block.insert(s);
        if splits_nested(&word[end + 1..], rank_in_c, &block) {
            return true;
        }
    }
    false
}
