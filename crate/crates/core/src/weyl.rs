//! Weyl group elements, reduced words, inversion sets and root sequences.
//!
//! An element is stored as the integer matrix of its action on the simple
//! root basis (column `i` is `w(α_i)`), which is a faithful, type-uniform
//! normal form: two elements are equal iff their matrices are.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{Root, RootSystem};

/// Default bound on the number of elements or words an enumeration may visit.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    // column-major: cols[i * n + k] is the α_k coefficient of w(α_i)
    cols: Vec<i32>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut cols = vec![0; n * n];
        for i in 0..n {
            cols[i * n + i] = 1;
        }
        WeylElement { n, cols }
    }

    /// Builds an element from the images `w(α_i)`. The caller guarantees the
    /// columns come from an actual group element.
    pub(crate) fn from_images(images: Vec<Vec<i32>>) -> Self {
        let n = images.len();
        debug_assert!(images.iter().all(|c| c.len() == n));
        WeylElement {
            n,
            cols: images.into_iter().flatten().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `w(α_i)` in simple-root coordinates.
    pub fn image_of_simple(&self, i: usize) -> &[i32] {
        &self.cols[i * self.n..(i + 1) * self.n]
    }

    /// The matrix as rows, row `k` listing the `α_k` coefficients.
    pub fn matrix(&self) -> Vec<Vec<i32>> {
        (0..self.n)
            .map(|k| (0..self.n).map(|i| self.cols[i * self.n + k]).collect())
            .collect()
    }

    pub fn apply_coords(&self, v: &[i32]) -> Vec<i32> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(&self.cols[i * n..(i + 1) * n]) {
                *o += vi * c;
            }
        }
        out
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root::new(self.apply_coords(r.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            cols.extend(self.apply_coords(other.image_of_simple(i)));
        }
        WeylElement { n, cols }
    }
}

/// A word in the simple reflections, stored as vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn without(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(pos);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

/// The ordered roots attached to a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSequence(pub Vec<Root>);

impl RootSequence {
    pub fn roots(&self) -> &[Root] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PapiRule {
    /// `α` and `β` both occur but `α + β` does not lie strictly between them.
    SumBetween,
    /// `α + β` occurs before both `α` and `β` (or neither occurs).
    SummandFirst,
    /// An entry repeats or is not a positive root.
    Malformed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PapiViolation {
    pub rule: PapiRule,
    pub alpha: Root,
    pub beta: Root,
    pub sum: Root,
}

/// Result of [`RootSystem::papi_check`]: `Ok(())` or the first violating triple.
pub type PapiVerdict = std::result::Result<(), PapiViolation>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseArrow {
    /// Index of the longer element `v s_i`.
    pub from: usize,
    /// Index of `v`.
    pub to: usize,
    pub letter: usize,
    /// `v(α_i)`.
    pub label: Root,
}

/// The lower interval `[e, w]` of the right weak order with root-labelled
/// arrows `v ← v s_i`.
#[derive(Debug, Clone)]
pub struct WeakInterval {
    /// Sorted by length, then by canonical reduced word.
    pub vertices: Vec<WeylElement>,
    pub words: Vec<Word>,
    pub arrows: Vec<HasseArrow>,
    pub top: usize,
    pub bottom: usize,
}

impl WeakInterval {
    /// Number of maximal paths from the top element down to the identity.
    pub fn maximal_path_count(&self) -> u128 {
        let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for a in &self.arrows {
            out_arrows[a.from].push(a.to);
        }
        // vertices are sorted by length, so targets precede sources
        let mut paths = vec![0u128; self.vertices.len()];
        for v in 0..self.vertices.len() {
            paths[v] = if v == self.bottom {
                1
            } else {
                out_arrows[v].iter().map(|&t| paths[t]).sum()
            };
        }
        paths[self.top]
    }
}

impl RootSystem {
    /// Builds a word from external vertex labels.
    pub fn word(&self, labels: &[i64]) -> Result<Word> {
        let d = self.diagram();
        labels
            .iter()
            .map(|&l| d.index_of_label(l))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn word_labels(&self, w: &Word) -> Vec<usize> {
        w.0.iter().map(|&i| self.diagram().label(i)).collect()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.right_mul_simple(&self.identity(), i)
    }

    /// `w s_i`: only columns adjacent to `i` change.
    pub fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let n = self.rank();
        let c = self.diagram().cartan_matrix();
        let wi: Vec<i32> = w.image_of_simple(i).to_vec();
        let mut out = w.clone();
        for (j, row) in c.iter().enumerate() {
            let k = row[i];
            if k == 0 {
                continue;
            }
            for (o, &x) in out.cols[j * n..(j + 1) * n].iter_mut().zip(&wi) {
                *o -= k as i32 * x;
            }
        }
        out
    }

    /// `t_β w`.
    pub fn left_mul_reflection(&self, beta: &Root, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            let col = Root::new(w.image_of_simple(i).to_vec());
            cols.extend(self.reflect_unchecked(beta, &col).into_coords());
        }
        WeylElement { n, cols }
    }

    pub fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.left_mul_reflection(&self.simple_root(i), w)
    }

    /// The reflection `t_β` as a group element.
    pub fn reflection(&self, beta: &Root) -> Result<WeylElement> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.coords().to_vec()));
        }
        Ok(self.left_mul_reflection(beta, &self.identity()))
    }

    fn check_word(&self, word: &Word) -> Result<()> {
        match word.0.iter().find(|&&l| l >= self.rank()) {
            Some(&l) => Err(Error::InvalidLetter(l as i64)),
            None => Ok(()),
        }
    }

    /// The product `s_{u_1} ⋯ s_{u_l}`.
    pub fn evaluate(&self, word: &Word) -> Result<WeylElement> {
        self.check_word(word)?;
        Ok(word
            .0
            .iter()
            .fold(self.identity(), |w, &i| self.right_mul_simple(&w, i)))
    }

    fn sends_negative(v: &[i32]) -> bool {
        v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    /// `ℓ(w)`, counted as the positive roots sent negative by `w`.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|b| Self::sends_negative(&w.apply_coords(b.coords())))
            .count()
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.length(&self.evaluate(word)?) == word.len())
    }

    /// `w(α_i) ∈ Φ⁻`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        Self::sends_negative(w.image_of_simple(i))
    }

    /// `inv(w) = Φ⁺ ∩ w(Φ⁻) = { −w(γ) : γ ∈ Φ⁺, w(γ) ∈ Φ⁻ }`.
    pub fn inversion_set(&self, w: &WeylElement) -> BTreeSet<Root> {
        self.positive_roots()
            .iter()
            .filter_map(|g| {
                let img = w.apply_coords(g.coords());
                Self::sends_negative(&img).then(|| -Root::new(img))
            })
            .collect()
    }

    /// The lexicographically least reduced word of `w`: repeatedly strip the
    /// smallest left descent `s_i` (those with `α_i ∈ inv(w)`).
    pub fn canonical_reduced_word(&self, w: &WeylElement) -> Word {
        let mut letters = Vec::new();
        let mut u = w.clone();
        loop {
            let inv = self.inversion_set(&u);
            let Some(i) = (0..self.rank()).find(|&i| inv.contains(&self.simple_root(i))) else {
                break;
            };
            letters.push(i);
            u = self.left_mul_simple(i, &u);
        }
        Word(letters)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.evaluate(&self.canonical_reduced_word(w).reversed())
            .expect("canonical words use valid letters")
    }

    /// Entry `m` is `s_{u_1} ⋯ s_{u_{m-1}}(α_{u_m})`. Errors on non-reduced
    /// words.
    pub fn root_sequence(&self, word: &Word) -> Result<RootSequence> {
        if !self.is_reduced(word)? {
            return Err(Error::NonReducedWord(self.word_labels(word)));
        }
        Ok(self.root_sequence_unchecked(word))
    }

    pub(crate) fn root_sequence_unchecked(&self, word: &Word) -> RootSequence {
        let mut prefix = self.identity();
        let mut out = Vec::with_capacity(word.len());
        for &i in &word.0 {
            out.push(Root::new(prefix.image_of_simple(i).to_vec()));
            prefix = self.right_mul_simple(&prefix, i);
        }
        RootSequence(out)
    }

    /// Papi's betweenness test for root sequences. Returns the first violating
    /// triple `(α, β, α+β)` in scan order.
    pub fn papi_check(&self, seq: &RootSequence) -> PapiVerdict {
        let mut pos: HashMap<&Root, usize> = HashMap::new();
        for (k, r) in seq.0.iter().enumerate() {
            if !self.is_positive_root(r) || pos.insert(r, k).is_some() {
                return Err(PapiViolation {
                    rule: PapiRule::Malformed,
                    alpha: r.clone(),
                    beta: r.clone(),
                    sum: r.clone(),
                });
            }
        }
        // condition 1: α, β present ⇒ α+β present strictly between them
        for (a, alpha) in seq.0.iter().enumerate() {
            for (b, beta) in seq.0.iter().enumerate().skip(a + 1) {
                let sum = alpha + beta;
                if !self.is_positive_root(&sum) {
                    continue;
                }
                let ok = pos.get(&sum).is_some_and(|&s| a < s && s < b);
                if !ok {
                    return Err(PapiViolation {
                        rule: PapiRule::SumBetween,
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        sum,
                    });
                }
            }
        }
        // condition 2: α+β present ⇒ α or β precedes it
        for (s, sum) in seq.0.iter().enumerate() {
            for alpha in self.positive_roots() {
                let beta = sum - alpha;
                if alpha >= &beta || !self.is_positive_root(&beta) {
                    continue;
                }
                let before = |r: &Root| pos.get(r).is_some_and(|&p| p < s);
                if !before(alpha) && !before(&beta) {
                    return Err(PapiViolation {
                        rule: PapiRule::SummandFirst,
                        alpha: alpha.clone(),
                        beta,
                        sum: sum.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// All elements of `W`, breadth first from the identity.
    pub fn all_elements(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.identity()]);
        seen.insert(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let next = self.right_mul_simple(&w, i);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    queue.push_back(next);
                }
            }
            order.push(w);
        }
        Ok(order)
    }

    /// The element of a uniformly random word of the given length.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, word_len: usize) -> WeylElement {
        let letters = (0..word_len)
            .map(|_| rng.gen_range(0..self.rank()))
            .collect();
        self.evaluate(&Word(letters)).expect("letters are in range")
    }

    /// The right weak order interval below `w`, generated by stripping right
    /// descents.
    pub fn weak_order_hasse_interval(&self, w: &WeylElement, cap: usize) -> Result<WeakInterval> {
        let mut index: HashMap<WeylElement, usize> = HashMap::new();
        let mut elems = vec![w.clone()];
        index.insert(w.clone(), 0);
        let mut raw_arrows = Vec::new();
        let mut k = 0;
        while k < elems.len() {
            let u = elems[k].clone();
            for i in 0..self.rank() {
                if !self.is_right_descent(&u, i) {
                    continue;
                }
                let v = self.right_mul_simple(&u, i);
                let label = -Root::new(u.image_of_simple(i).to_vec());
                let t = match index.get(&v) {
                    Some(&t) => t,
                    None => {
                        if elems.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        elems.push(v.clone());
                        index.insert(v, elems.len() - 1);
                        elems.len() - 1
                    }
                };
                raw_arrows.push((k, t, i, label));
            }
            k += 1;
        }
        let mut keyed: Vec<(usize, Word, usize)> = elems
            .iter()
            .enumerate()
            .map(|(old, e)| {
                let word = self.canonical_reduced_word(e);
                (word.len(), word, old)
            })
            .collect();
        keyed.sort();
        let mut remap = vec![0; elems.len()];
        for (new, (_, _, old)) in keyed.iter().enumerate() {
            remap[*old] = new;
        }
        let vertices: Vec<WeylElement> = keyed
            .iter()
            .map(|(_, _, old)| elems[*old].clone())
            .collect();
        let words: Vec<Word> = keyed.into_iter().map(|(_, w, _)| w).collect();
        let mut arrows: Vec<HasseArrow> = raw_arrows
            .into_iter()
            .map(|(f, t, letter, label)| HasseArrow {
                from: remap[f],
                to: remap[t],
                letter,
                label,
            })
            .collect();
        arrows.sort_by_key(|a| (a.from, a.to));
        Ok(WeakInterval {
            top: remap[0],
            bottom: 0,
            vertices,
            words,
            arrows,
        })
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn all_reduced_words(&self, w: &WeylElement, cap: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.collect_words(w, &mut suffix, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn collect_words(
        &self,
        w: &WeylElement,
        suffix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<()> {
        if w.is_identity() {
            if out.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(Word(suffix.iter().rev().copied().collect()));
            return Ok(());
        }
        for i in 0..self.rank() {
            if self.is_right_descent(w, i) {
                suffix.push(i);
                self.collect_words(&self.right_mul_simple(w, i), suffix, out, cap)?;
                suffix.pop();
            }
        }
        Ok(())
    }

    /// Lower Bruhat covers `(β, t_β w)` for `β ∈ Binv(w)`.
    pub fn bruhat_covers_down(&self, w: &WeylElement) -> Vec<(Root, WeylElement)> {
        self.bruhat_inversions_def(w)
            .into_iter()
            .map(|b| {
                let u = self.left_mul_reflection(&b, w);
                (b, u)
            })
            .collect()
    }

    /// Coefficients `a_0..a_ℓ` of `Σ_{v ≤ w} q^{ℓ(v)}` over the Bruhat interval
    /// `[e, w]`, computed as the downward closure of `w` under `v ↦ t_β v` for
    /// `β ∈ inv(v)`.
    pub fn bruhat_interval_poincare(&self, w: &WeylElement, cap: usize) -> Result<Vec<usize>> {
        let top = self.length(w);
        let mut coeffs = vec![0usize; top + 1];
        let mut seen: HashSet<WeylElement> = HashSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(v) = stack.pop() {
            let inv = self.inversion_set(&v);
            coeffs[inv.len()] += 1;
            for beta in &inv {
                let u = self.left_mul_reflection(beta, &v);
                if seen.insert(u.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    stack.push(u);
                }
            }
        }
        Ok(coeffs)
    }
}
