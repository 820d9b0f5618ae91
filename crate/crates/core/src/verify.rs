//! Acceptance checks shared by the test suite and `weylbrick verify`.
//!
//! Each criterion recomputes its data from scratch and compares it against
//! pinned values or an independent method. Nothing here is cached.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::BinvMethod;
use crate::error::Error;
use crate::quiverrep::{
    bricks_of_permutation, hom_dimension_by_propagation, hom_space, is_brick, zero_mono_check,
};
use crate::roots::{Root, RootSystem};
use crate::sortable::{coxeter_element, Orientation, OrientationSpec};
use crate::typea::{
    all_permutations, arc_diagram, avoids_patterns, beta, bruhat_classical_inversions,
    classical_inversions, count_forest_like, defining_quiver, inversion_graph, is_forest,
    join_irreducible_w_e, perm_to_weyl, Permutation,
};
use crate::weyl::{RootSequence, WeylElement, DEFAULT_CAP};

pub const DEFAULT_SEED: u64 = 0x5eed_b1ac;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Figures,
    Counts,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Oracle => &[2, 4, 5, 6, 8],
            Suite::Figures => &[3, 7],
            Suite::Counts => &[1, 9],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "figures" => Ok(Suite::Figures),
            "counts" => Ok(Suite::Counts),
            _ => Err(Error::Internal(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "forest-like counts"),
    (2, "Binv oracle triangle"),
    (3, "worked examples"),
    (4, "Papi round trip"),
    (5, "Poincare endpoints"),
    (6, "type-A triangle on S6"),
    (7, "defining quivers and w_e"),
    (8, "thin brick verification on S5"),
    (9, "sortable counts"),
];

type Check = Result<String, String>;

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Outcome {
    let (_, name) = CRITERIA
        .iter()
        .copied()
        .find(|&(k, _)| k == id)
        .unwrap_or((id, "unknown criterion"));
    let start = Instant::now();
    let result = match id {
        1 => forest_counts(),
        2 => oracle_triangle(cfg),
        3 => worked_examples(),
        4 => papi_round_trip(),
        5 => poincare_endpoints(),
        6 => type_a_triangle(),
        7 => pinned_quivers(),
        8 => brick_verification(),
        9 => sortable_counts(),
        _ => Err(format!("no criterion {id}")),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Outcome> {
    suite
        .criteria()
        .iter()
        .map(|&id| run_criterion(id, cfg))
        .collect()
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, cfg))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || {
        format!(
            "{what} took {:.2}s, limit {limit_secs}s",
            elapsed.as_secs_f64()
        )
    })
}

fn system(name: &str) -> RootSystem {
    RootSystem::preset(name).expect("preset name")
}

fn parse_roots(s: &[&str]) -> Vec<Root> {
    s.iter()
        .map(|d| Root::from_digits(d).expect("digit string"))
        .collect()
}

fn forest_counts() -> Check {
    let expected = [2u64, 6, 22, 89, 379, 1661];
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let mut got = Vec::new();
    let mut last = Duration::ZERO;
    for m in 2..=7 {
        let start = Instant::now();
        let c = pool
            .install(|| count_forest_like(m, DEFAULT_CAP))
            .map_err(|e| e.to_string())?;
        last = start.elapsed();
        got.push(c);
    }
    ensure(got == expected, || {
        format!("counts {got:?}, expected {expected:?}")
    })?;
    within(last, 10, "m = 7 on one thread")?;
    Ok(format!(
        "{got:?} for m = 2..7; m = 7 single-threaded in {:.2}s",
        last.as_secs_f64()
    ))
}

fn three_way(rs: &RootSystem, w: &WeylElement) -> Result<(), String> {
    let def = rs.bruhat_inversions(w, BinvMethod::Definition);
    let del = rs.bruhat_inversions(w, BinvMethod::Deletion);
    let sum = rs.bruhat_inversions(w, BinvMethod::Sum);
    ensure(def == del && del == sum, || {
        format!(
            "{} word {:?}: def {} deletion {} sum {}",
            rs.diagram(),
            rs.word_labels(&rs.canonical_reduced_word(w)),
            def.len(),
            del.len(),
            sum.len()
        )
    })
}

fn oracle_triangle(cfg: &VerifyConfig) -> Check {
    let start = Instant::now();
    let mut report = Vec::new();
    for name in ["A3", "A4", "D4"] {
        let rs = system(name);
        let all = rs.all_elements(DEFAULT_CAP).map_err(|e| e.to_string())?;
        all.par_iter().try_for_each(|w| three_way(&rs, w))?;
        report.push(format!("{name} {}", all.len()));
    }
    for (k, name) in ["D5", "E6"].into_iter().enumerate() {
        let rs = system(name);
        let max_len = 2 * rs.positive_roots().len();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
        let samples: Vec<WeylElement> = (0..cfg.samples)
            .map(|_| {
                let len = rng.gen_range(0..=max_len);
                rs.random_element(&mut rng, len)
            })
            .collect();
        samples.par_iter().try_for_each(|w| three_way(&rs, w))?;
        let distinct: HashSet<&WeylElement> = samples.iter().collect();
        report.push(format!(
            "{name} {} sampled ({} distinct)",
            samples.len(),
            distinct.len()
        ));
    }
    within(start.elapsed(), 60, "the triangle")?;
    Ok(format!("three methods agree on {}", report.join(", ")))
}

fn worked_examples() -> Check {
    let a3 = system("A3");
    let word = a3.word(&[1, 2, 3, 1, 2]).map_err(|e| e.to_string())?;
    let seq = a3.root_sequence(&word).map_err(|e| e.to_string())?;
    let expected = parse_roots(&["100", "110", "111", "010", "011"]);
    ensure(seq.0 == expected, || {
        format!("A3 root sequence {:?}", seq.0)
    })?;
    let w = a3.evaluate(&word).map_err(|e| e.to_string())?;
    let binv: BTreeSet<Root> = parse_roots(&["100", "010", "011"]).into_iter().collect();
    for m in [
        BinvMethod::Definition,
        BinvMethod::Deletion,
        BinvMethod::Sum,
    ] {
        ensure(a3.bruhat_inversions(&w, m) == binv, || {
            format!("A3 Binv by {m}")
        })?;
    }
    let jhp = a3.jhp_check(&w).map_err(|e| e.to_string())?;
    ensure(jhp.verdict, || "A3 JHP should hold".into())?;

    let d4 = system("D4");
    let word = d4
        .word(&[0, 1, 2, 3, 0, 1, 2, 3, 0])
        .map_err(|e| e.to_string())?;
    let w = d4.evaluate(&word).map_err(|e| e.to_string())?;
    let inv = d4.inversion_set(&w);
    ensure(inv.len() == 9, || {
        format!("D4 has {} inversions", inv.len())
    })?;
    // 1/121: α_2 on top, α_1 + 2α_0 + α_3 below
    let excluded = Root::new(vec![2, 1, 1, 1]);
    let expected: BTreeSet<Root> = inv.iter().filter(|r| **r != excluded).cloned().collect();
    ensure(inv.contains(&excluded), || {
        "1/121 is not an inversion".into()
    })?;
    for m in [
        BinvMethod::Definition,
        BinvMethod::Deletion,
        BinvMethod::Sum,
    ] {
        ensure(d4.bruhat_inversions(&w, m) == expected, || {
            format!("D4 Binv by {m}")
        })?;
    }
    ensure(expected.len() == 8, || "D4 Binv size".into())?;
    let jhp = d4.jhp_check(&w).map_err(|e| e.to_string())?;
    ensure(!jhp.verdict, || "D4 JHP should fail".into())?;

    let p: Permutation = "42153".parse().map_err(|e: Error| e.to_string())?;
    let inv: BTreeSet<(usize, usize)> = [(1, 2), (1, 4), (2, 4), (3, 4), (3, 5)].into();
    ensure(classical_inversions(&p) == inv, || "Inv(42153)".into())?;
    let binv: BTreeSet<(usize, usize)> = [(1, 2), (2, 4), (3, 4), (3, 5)].into();
    ensure(bruhat_classical_inversions(&p) == binv, || {
        "BInv(42153)".into()
    })?;
    Ok("A3 s12312, D4 s012301230 and 42153 match".into())
}

// Every ordering of inv(w) passes Papi exactly when it is a root sequence.
fn papi_round_trip() -> Check {
    let rs = system("A3");
    let mut orderings = 0usize;
    let mut rejected = 0usize;
    let mut witnessed = 0usize;
    let mut needs_witness = 0usize;
    for w in rs.all_elements(DEFAULT_CAP).map_err(|e| e.to_string())? {
        let words = rs
            .all_reduced_words(&w, DEFAULT_CAP)
            .map_err(|e| e.to_string())?;
        let mut sequences = HashSet::new();
        for word in &words {
            let seq = rs.root_sequence(word).map_err(|e| e.to_string())?;
            rs.papi_check(&seq).map_err(|v| {
                format!(
                    "root sequence of {:?} rejected: {v:?}",
                    rs.word_labels(word)
                )
            })?;
            sequences.insert(seq.0);
        }
        let inv: Vec<Root> = rs.inversion_set(&w).into_iter().collect();
        let mut found = false;
        let orders = if inv.is_empty() {
            Vec::new()
        } else {
            all_permutations(inv.len())
        };
        for perm in orders {
            let order: Vec<Root> = perm
                .one_line()
                .iter()
                .map(|&k| inv[k - 1].clone())
                .collect();
            orderings += 1;
            let is_seq = sequences.contains(&order);
            let passes = rs.papi_check(&RootSequence(order)).is_ok();
            ensure(is_seq == passes, || {
                format!("ordering verdict {passes} but root sequence {is_seq}")
            })?;
            if !passes {
                rejected += 1;
                found = true;
            }
        }
        let factorial: usize = (1..=inv.len()).product();
        if factorial > sequences.len() {
            needs_witness += 1;
            ensure(found, || "no failing ordering found".into())?;
            witnessed += 1;
        }
    }
    Ok(format!(
        "{orderings} orderings over W(A3), {rejected} rejected; witnesses for {witnessed}/{needs_witness} elements with a non-sequence ordering"
    ))
}

fn poincare_endpoints() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for name in ["A3", "A4"] {
        let rs = system(name);
        let all = rs.all_elements(DEFAULT_CAP).map_err(|e| e.to_string())?;
        all.par_iter().try_for_each(|w| -> Result<(), String> {
            let l = rs.length(w);
            if l == 0 {
                return Ok(());
            }
            let a = rs
                .bruhat_interval_poincare(w, DEFAULT_CAP)
                .map_err(|e| e.to_string())?;
            let supp = rs.support(w).len();
            let binv = rs.bruhat_inversions_def(w).len();
            ensure(a.len() == l + 1 && a[1] == supp && a[l - 1] == binv, || {
                format!(
                    "{name} {:?}: coefficients {a:?}, #supp {supp}, #Binv {binv}",
                    rs.word_labels(&rs.canonical_reduced_word(w))
                )
            })
        })?;
        checked += all.len() - 1;
    }
    within(start.elapsed(), 30, "Poincare checks")?;
    Ok(format!(
        "a_1 = #supp and a_(l-1) = #Binv for {checked} non-identity elements of W(A3), W(A4)"
    ))
}

fn type_a_triangle() -> Check {
    let rs = system("A5");
    let perms = all_permutations(6);
    let forests = perms
        .par_iter()
        .map(|p| -> Result<bool, String> {
            let forest = is_forest(&inversion_graph(p));
            let avoids = avoids_patterns(p);
            let w = perm_to_weyl(&rs, p).map_err(|e| e.to_string())?;
            let jhp = rs.jhp_check(&w).map_err(|e| e.to_string())?.verdict;
            ensure(forest == avoids && avoids == jhp, || {
                format!("{p}: forest {forest}, avoids {avoids}, #Binv = #supp {jhp}")
            })?;
            Ok(forest)
        })
        .collect::<Result<Vec<bool>, String>>()?;
    let yes = forests.iter().filter(|&&f| f).count();
    Ok(format!(
        "{} permutations agree; {yes} satisfy all three",
        perms.len()
    ))
}

type Quiver = (Vec<usize>, Vec<(usize, usize)>);

fn pinned_quivers() -> Check {
    let pinned: [(&str, (usize, usize), Quiver); 7] = [
        ("42513", (1, 2), (vec![1], vec![])),
        ("42513", (2, 4), (vec![2, 3], vec![(2, 3)])),
        (
            "42513",
            (1, 5),
            (vec![1, 2, 3, 4], vec![(2, 1), (2, 3), (4, 3)]),
        ),
        ("42513", (3, 4), (vec![3], vec![])),
        ("42513", (3, 5), (vec![3, 4], vec![(4, 3)])),
        ("42351", (2, 4), (vec![2, 3], vec![(2, 3)])),
        (
            "42351",
            (1, 5),
            (vec![1, 2, 3, 4], vec![(2, 1), (3, 2), (4, 3)]),
        ),
    ];
    let mut per_perm: BTreeMap<&str, usize> = BTreeMap::new();
    for (p, edge, (vertices, arrows)) in &pinned {
        let perm: Permutation = p.parse().map_err(|e: Error| e.to_string())?;
        let q = defining_quiver(&arc_diagram(&perm, *edge).map_err(|e| e.to_string())?);
        ensure(&q.vertices == vertices && &q.arrows == arrows, || {
            format!("{p} {edge:?}: got {:?} {:?}", q.vertices, q.arrows)
        })?;
        *per_perm.entry(p).or_default() += 1;
    }
    let full: Permutation = "42513".parse().map_err(|e: Error| e.to_string())?;
    ensure(
        bruhat_classical_inversions(&full).len() == per_perm["42513"],
        || "42513 has Bruhat inversions beyond the pinned set".into(),
    )?;
    let p: Permutation = "56723814".parse().map_err(|e: Error| e.to_string())?;
    let we = join_irreducible_w_e(&p, (3, 6)).map_err(|e| e.to_string())?;
    ensure(we.to_string() == "12563478", || format!("w_e = {we}"))?;
    Ok(format!("{} quivers reproduced; w_e = {we}", pinned.len()))
}

fn brick_verification() -> Check {
    let start = Instant::now();
    let perms = all_permutations(5);
    let counts = perms
        .par_iter()
        .map(|p| -> Result<(usize, usize), String> {
            let bricks = bricks_of_permutation(p).map_err(|e| e.to_string())?;
            for ((i, j), b) in &bricks {
                ensure(b.check_preprojective_relations(), || {
                    format!("{p} ({i},{j}): relations")
                })?;
                ensure(is_brick(b).map_err(|e| e.to_string())?, || {
                    format!(
                        "{p} ({i},{j}): End has dimension {:?}",
                        hom_space(b, b).map(|h| h.dimension())
                    )
                })?;
                ensure(b.dimension_vector() == beta(*i, *j, 5), || {
                    format!("{p} ({i},{j}): dimension vector {:?}", b.dimension_vector())
                })?;
            }
            let mut pairs = 0;
            for (_, s) in &bricks {
                for (_, t) in &bricks {
                    let h = hom_space(s, t).map_err(|e| e.to_string())?.dimension();
                    let prop = hom_dimension_by_propagation(s, t).map_err(|e| e.to_string())?;
                    ensure(h == prop, || format!("{p}: hom solvers disagree"))?;
                    ensure(zero_mono_check(s, t).map_err(|e| e.to_string())?, || {
                        format!("{p}: a nonzero non-injective map between simples")
                    })?;
                    pairs += 1;
                }
            }
            Ok((bricks.len(), pairs))
        })
        .collect::<Result<Vec<_>, String>>()?;
    within(start.elapsed(), 60, "brick checks")?;
    let bricks: usize = counts.iter().map(|c| c.0).sum();
    let pairs: usize = counts.iter().map(|c| c.1).sum();
    Ok(format!(
        "{bricks} bricks over S5 verified; {pairs} ordered pairs zero-or-mono"
    ))
}

fn sortable_counts() -> Check {
    let cases: [(&str, &[[i64; 2]], usize); 4] = [
        ("A1", &[], 2),
        ("A2", &[[2, 1]], 5),
        ("A3", &[[2, 1], [3, 2]], 14),
        ("A3", &[[2, 1], [2, 3]], 14),
    ];
    let mut lines = Vec::new();
    for (name, arrows, expected) in cases {
        let o = Orientation::from_spec(&OrientationSpec {
            diagram: name.into(),
            arrows: arrows.to_vec(),
        })
        .map_err(|e| e.to_string())?;
        let rs = system(name);
        let c = coxeter_element(&o);
        let mut brute = 0;
        for w in rs.all_elements(DEFAULT_CAP).map_err(|e| e.to_string())? {
            if rs
                .is_c_sortable_brute_force(&w, &c, DEFAULT_CAP)
                .map_err(|e| e.to_string())?
            {
                brute += 1;
            }
        }
        let greedy = rs
            .sortable_elements(&o, DEFAULT_CAP)
            .map_err(|e| e.to_string())?
            .len();
        ensure(brute == expected && greedy == expected, || {
            format!(
                "{name} c = {:?}: brute force {brute}, greedy {greedy}, expected {expected}",
                rs.word_labels(&c)
            )
        })?;
        lines.push(format!("{name} c = {:?}: {expected}", rs.word_labels(&c)));
    }
    Ok(lines.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_cover_every_criterion() {
        let mut ids: Vec<u8> = [Suite::Oracle, Suite::Figures, Suite::Counts]
            .iter()
            .flat_map(|s| s.criteria().iter().copied())
            .collect();
        ids.sort();
        assert_eq!(ids, (1..=9).collect::<Vec<u8>>());
    }

    #[test]
    fn unknown_criterion_fails() {
        let o = run_criterion(42, &VerifyConfig::default());
        assert!(!o.passed);
        assert!(o.to_string().starts_with("FAIL [42]"));
    }

    #[test]
    fn figures_suite_passes() {
        for o in run_suite(Suite::Figures, &VerifyConfig::default()) {
            assert!(o.passed, "{o}");
        }
    }
}
