//! Exhaustive and sampled checks of the main theorems, shared by the
//! acceptance tests and the `verify` command.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::lcm::{lcm_cases, brute_force_left_lcm, left_lcm_formula, LcmSearch};
use crate::braid::{
    enumerate_divisors, enumerate_divisors_bounded, garside_element, initial_set,
    is_square_free, left_divides, permutation_to_divisor, word_to_permutation, BraidWord, NormalForm, VerySimpleFactor,
};
use crate::conjugacy::{
    conjugate_by_simple, find_square_conjugate, invariant_simple_set, is_conjugate_simple, is_markov_simple_bounded_with,
    positive_conjugacy_orbit_with, simple_conjugators, SearchLimits,
};
use crate::error::BraidError;
use crate::link::{
    closure_components, d_two_strand, is_geometrically_simple, mu_power, DEvaluator, LaurentPolynomial,
};
use crate::oracle;
use crate::simple::{
    apply_move, canonical_conjugacy_word, conjugacy_type, cycle_decomposition, cycle_initial_set, cycles_to_braid,
    is_literally_simple, markov_reduce, satisfies_block_criterion, Cycle, CycleDecomposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "[{tag}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Upper bound on the strand counts any suite uses.
    pub max_strands: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_strands: 10, seed: 20240917 }
    }
}

impl VerifyConfig {
    fn cap(&self, n: usize) -> usize {
        n.min(self.max_strands)
    }
}

enum Failure {
    Fail(String),
    Skip(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::BoundExceeded { .. } => Failure::Skip(e.to_string()),
            other => Failure::Fail(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Failure::Fail(format!($($msg)+)));
        }
    };
}

fn run(id: u8, name: &'static str, body: impl FnOnce() -> Outcome) -> SuiteReport {
    let start = Instant::now();
    let (status, detail) = match body() {
        Ok(d) => (Status::Pass, d),
        Err(Failure::Fail(d)) => (Status::Fail, d),
        Err(Failure::Skip(d)) => (Status::Skipped, d),
    };
    SuiteReport { id, name, status, detail, elapsed: start.elapsed() }
}

fn word(n: usize, letters: &[usize]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("fixed word fits")
}

pub const SUITE_NAMES: [&str; 10] = [
    "divisor census",
    "word problem",
    "five characterizations",
    "square-free examples",
    "cycle decomposition",
    "initial sets",
    "conjugacy classes",
    "Markov reduction",
    "D polynomial",
    "lcm identities",
];

pub fn run_suite(id: u8, cfg: &VerifyConfig) -> SuiteReport {
    let name = SUITE_NAMES[(id - 1) as usize];
    match id {
        1 => run(id, name, || divisor_census(cfg)),
        2 => run(id, name, || word_problem(cfg)),
        3 => run(id, name, || characterizations(cfg)),
        4 => run(id, name, square_free_examples),
        5 => run(id, name, || decompositions(cfg)),
        6 => run(id, name, || initial_sets(cfg)),
        7 => run(id, name, || conjugacy_classes(cfg)),
        8 => run(id, name, || markov_reduction(cfg)),
        9 => run(id, name, || d_invariant(cfg)),
        10 => run(id, name, || lcm_identities(cfg)),
        _ => panic!("no suite {id}"),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    (1..=10).map(|id| run_suite(id, cfg)).collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn divisor_census(cfg: &VerifyConfig) -> Outcome {
    let top = cfg.cap(5);
    let mut sizes = Vec::new();
    for n in 1..=top {
        let divisors = enumerate_divisors(n)?;
        ensure!(divisors.len() == factorial(n), "n={n}: {} divisors", divisors.len());
        let mut perms = HashSet::new();
        for d in &divisors {
            let w = d.to_word();
            let p = word_to_permutation(&w);
            ensure!(NormalForm::of_word(&permutation_to_divisor(&p)) == *d, "section fails on {w}");
            perms.insert(p);
        }
        ensure!(perms.len() == factorial(n), "n={n}: projection not injective");
        sizes.push(divisors.len().to_string());
    }
    let m = cfg.cap(4);
    for (k, p) in crate::braid::divisor::all_permutations(m).iter().enumerate() {
        let canonical = permutation_to_divisor(p);
        let minimal = oracle::minimal_reduced_word(p);
        ensure!(canonical == minimal, "permutation #{k}: block word {canonical} vs minimal {minimal}");
    }
    Ok(format!("|Div| for n=1..{top}: {}; block words minimal on all of S{m}", sizes.join(", ")))
}

fn word_problem(cfg: &VerifyConfig) -> Outcome {
    let n = cfg.cap(4);
    let words = oracle::all_words_up_to(n, 6);
    let artin = oracle::artin_classes(&words);
    let nfs: Vec<NormalForm> = words.iter().map(NormalForm::of_word).collect();
    let mut by_nf: HashMap<&NormalForm, usize> = HashMap::new();
    let mut by_class: HashMap<usize, &NormalForm> = HashMap::new();
    for (k, nf) in nfs.iter().enumerate() {
        let class = artin[k];
        if let Some(&c) = by_nf.get(nf) {
            ensure!(c == class, "{} and another word share a normal form but not an Artin class", words[k]);
        } else {
            by_nf.insert(nf, class);
        }
        if let Some(&other) = by_class.get(&class) {
            ensure!(other == nf, "{} is Artin-equivalent to a word with a different normal form", words[k]);
        } else {
            by_class.insert(class, nf);
        }
        ensure!(nf.degree() == words[k].len(), "degree of {} is {}", words[k], nf.degree());
    }
    Ok(format!("{} words in MB{n} up to length 6 form {} classes", words.len(), by_nf.len()))
}

fn characterizations(cfg: &VerifyConfig) -> Outcome {
    let top = cfg.cap(5);
    let mut counts = Vec::new();
    for n in 1..=top {
        let limits = SearchLimits { max_strands: n + 2, ..SearchLimits::default() };
        let invariant: HashSet<NormalForm> = invariant_simple_set(n, limits)?.into_iter().collect();
        let mut simple = 0;
        for d in enumerate_divisors(n)? {
            let w = d.to_word();
            let ls = is_literally_simple(&w);
            ensure!(ls == satisfies_block_criterion(&w), "{w}: block criterion disagrees");
            let cs = is_conjugate_simple(&w)?;
            let gs = is_geometrically_simple(&w)?;
            let is = invariant.contains(&d);
            let ms = is_markov_simple_bounded_with(&w, 2, limits)?;
            ensure!(
                ls == cs && ls == is && ls == gs && ls == ms,
                "{w} (n={n}): literal {ls}, conjugate {cs}, invariant {is}, geometric {gs}, Markov {ms}"
            );
            if !ls {
                let found = find_square_conjugate(&w)?;
                ensure!(
                    found.as_ref().is_some_and(|s| s.witness.has_adjacent_square()),
                    "{w}: no conjugate with a square"
                );
            }
            simple += ls as usize;
        }
        counts.push(format!("{simple}/{}", factorial(n)));
    }
    Ok(format!("simple divisors for n=1..{top}: {}", counts.join(", ")))
}

fn square_free_examples() -> Outcome {
    let a = word(4, &[2, 1, 3, 2, 1, 3]);
    ensure!(is_square_free(&a), "{a} should be square-free");
    ensure!(!is_literally_simple(&a), "{a} should not be literally simple");

    let b = word(4, &[3, 2, 1, 3, 2, 1]);
    let nb = NormalForm::of_word(&b);
    ensure!(nb.factor_count() >= 2, "{b} has {} factors", nb.factor_count());
    let target = word(4, &[2, 1, 3, 2, 1, 1]);
    ensure!(NormalForm::of_word(&target) == nb, "{b} differs from {target}");
    let wit = nb.square_witness_word().ok_or(Failure::Fail(format!("{b}: no witness")))?;
    ensure!(wit.has_adjacent_square() && NormalForm::of_word(&wit) == nb, "bad witness {wit}");
    ensure!(!is_conjugate_simple(&b)?, "{b} should not be conjugate simple");

    let delta = garside_element(4);
    let s = find_square_conjugate(&delta)?.ok_or(Failure::Fail("Δ4 has no square conjugate".into()))?;
    ensure!(s.conjugator == word(4, &[1]) && s.witness == target, "Δ4 witness {} by {}", s.witness, s.conjugator);

    let c = word(3, &[1, 2, 1]);
    ensure!(is_square_free(&c) && !is_literally_simple(&c), "{c} classification");
    let orbit = positive_conjugacy_orbit_with(&c, SearchLimits::default())?;
    ensure!(orbit.representatives.contains(&NormalForm::of_word(&word(3, &[1, 1, 2]))), "orbit of {c} misses x1 x1 x2");
    ensure!(!orbit.all_square_free, "orbit of {c} is square-free");
    Ok(format!("{b} = {target}; orbit of {c} has {} members", orbit.representatives.len()))
}

fn decompositions(cfg: &VerifyConfig) -> Outcome {
    let top = cfg.cap(7);
    let mut total = 0;
    for n in 1..=top {
        for d in oracle::literally_simple_braids(n)? {
            let w = d.to_word();
            let dec = cycle_decomposition(&w)?;
            let back = cycles_to_braid(&dec);
            ensure!(NormalForm::of_word(&back) == d, "{w}: product of {dec} is {back}");
            ensure!(cycle_decomposition(&back)? == dec, "{w}: decomposition not stable");
            let supports: Vec<(usize, usize)> = dec.cycles().iter().map(Cycle::support).collect();
            ensure!(supports == w.support_blocks(), "{w}: cycle supports {supports:?}");
            let rebuilt = CycleDecomposition::new(n, dec.cycles().to_vec())?;
            ensure!(rebuilt == dec, "{w}: decomposition fails validation");
            total += 1;
        }
    }
    Ok(format!("{total} simple braids with n<={top} round-trip"))
}

fn initial_sets(cfg: &VerifyConfig) -> Outcome {
    use VerySimpleFactor::{D, U};
    let top = cfg.cap(7);
    let mut total = 0;
    for n in 1..=top {
        for d in oracle::literally_simple_braids(n)? {
            let w = d.to_word();
            let dec = cycle_decomposition(&w)?;
            let from_cycles = cycle_initial_set(&dec);
            ensure!(from_cycles == oracle::brute_initial_set(&w), "{w}: cycles give {from_cycles:?}");
            ensure!(from_cycles == initial_set(&w), "{w}: normal form disagrees");
            total += 1;
        }
    }
    let alpha = CycleDecomposition::new(
        18,
        vec![Cycle::new(vec![U(2, 4), D(6, 5), D(9, 7), U(10, 11)])?, Cycle::new(vec![U(13, 14), D(17, 15)])?],
    )?;
    let expected: BTreeSet<usize> = [2, 6, 9, 13, 17].into_iter().collect();
    let w = cycles_to_braid(&alpha);
    ensure!(cycle_initial_set(&alpha) == expected, "example gives {:?}", cycle_initial_set(&alpha));
    ensure!(oracle::brute_initial_set(&w) == expected, "example brute force gives {:?}", oracle::brute_initial_set(&w));
    Ok(format!("{total} simple braids with n<={top}; example on 18 strands gives {expected:?}"))
}

fn conjugacy_classes(cfg: &VerifyConfig) -> Outcome {
    let top = cfg.cap(5);
    let mut classes = 0;
    for n in 1..=top {
        let simple = oracle::literally_simple_braids(n)?;
        let mut by_type: BTreeMap<Vec<usize>, Vec<NormalForm>> = BTreeMap::new();
        for d in &simple {
            let t = conjugacy_type(&d.to_word())?;
            let mut cycle_lengths: Vec<usize> =
                word_to_permutation(&d.to_word()).cycles().iter().map(Vec::len).filter(|&l| l >= 2).collect();
            cycle_lengths.sort_unstable_by(|a, b| b.cmp(a));
            ensure!(cycle_lengths == t.sizes(), "{}: type {t} vs permutation cycles {cycle_lengths:?}", d.to_word());
            by_type.entry(t.sizes().to_vec()).or_default().push(d.clone());
        }
        for (sizes, members) in &by_type {
            let t = crate::simple::ConjugacyType::new(sizes.clone(), n)?;
            let canonical = canonical_conjugacy_word(&t);
            let orbit = positive_conjugacy_orbit_with(&canonical, SearchLimits::default())?;
            ensure!(orbit.complete, "orbit of {canonical} truncated");
            let orbit_set: HashSet<&NormalForm> = orbit.representatives.iter().collect();
            for m in members {
                ensure!(orbit_set.contains(m), "{} is not conjugate to {canonical}", m.to_word());
            }
            let simple_in_orbit = simple.iter().filter(|d| orbit_set.contains(d)).count();
            ensure!(simple_in_orbit == members.len(), "orbit of {canonical} meets another type");
            classes += 1;
        }
    }
    Ok(format!("{classes} conjugacy types for n<={top}, each a single orbit"))
}

fn check_reduction(w: &BraidWord) -> std::result::Result<(), Failure> {
    let moves = markov_reduce(w)?;
    let mut current = NormalForm::of_word(w);
    for (k, mv) in moves.iter().enumerate() {
        current = apply_move(&current, mv).map_err(|e| Failure::Fail(format!("{w}: move {k}: {e}")))?;
        ensure!(current.is_square_free(), "{w}: move {k} leaves {current}");
    }
    let components = closure_components(w).count();
    ensure!(current.is_unit(), "{w}: reduction ends at {current}");
    ensure!(current.strands() == components, "{w}: ends on {} strands, {components} components", current.strands());
    ensure!(conjugacy_type(w)?.components() == components, "{w}: conjugacy type component count");
    Ok(())
}

fn markov_reduction(cfg: &VerifyConfig) -> Outcome {
    let top = cfg.cap(7);
    let mut total = 0;
    for n in 1..=top {
        for d in oracle::literally_simple_braids(n)? {
            check_reduction(&d.to_word())?;
            total += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random_top = cfg.cap(10).max(2);
    for _ in 0..100 {
        let n = rng.gen_range(2..=random_top);
        check_reduction(&oracle::random_simple_braid(&mut rng, n))?;
    }
    Ok(format!("{total} simple braids with n<={top} and 100 random ones with n<={random_top}"))
}

fn random_positive_conjugate(rng: &mut impl Rng, w: &BraidWord) -> crate::error::Result<BraidWord> {
    let conjugators = simple_conjugators(w.strands())?;
    let nf = NormalForm::of_word(w);
    for _ in 0..10 {
        if conjugators.is_empty() {
            break;
        }
        let p = &conjugators[rng.gen_range(0..conjugators.len())];
        if let Some(c) = conjugate_by_simple(&nf, p) {
            return Ok(c.to_word());
        }
    }
    Ok(w.rotate(rng.gen_range(0..=w.len())))
}

/// `s⁻¹ D(a+1) + s D(a-1) - 2 D(a)` for the closures of `x1^k`.
pub fn two_strand_skein(ev: &mut DEvaluator, a: usize) -> crate::error::Result<LaurentPolynomial> {
    let d = |ev: &mut DEvaluator, k: usize| ev.evaluate(&BraidWord::new(2, vec![1; k]).expect("two strands"));
    let up = d(ev, a + 1)?.shift(-1);
    let down = d(ev, a - 1)?.shift(1);
    let mid = d(ev, a)?;
    Ok(&(&up + &down) - &(&mid + &mid))
}

fn d_invariant(cfg: &VerifyConfig) -> Outcome {
    let mut ev = DEvaluator::new(SearchLimits::default());
    for a in 0..=8u32 {
        let w = BraidWord::new(2, vec![1; a as usize])?;
        let d = ev.evaluate(&w)?;
        ensure!(d == d_two_strand(a), "D(x1^{a}) = {d}, closed form {}", d_two_strand(a));
    }
    for n in 1..=cfg.cap(7) {
        let w = BraidWord::new(n, (1..n).collect())?;
        ensure!(ev.evaluate(&w)? == LaurentPolynomial::one(), "D({w}) is not 1");
    }
    for n in 1..=cfg.cap(6) {
        ensure!(ev.evaluate(&BraidWord::unit(n))? == mu_power(n - 1), "D(1_{n}) is not a power of μ");
    }

    let m = cfg.cap(4);
    let mut full_support = 0;
    for len in m..=8 {
        for w in oracle::all_words(m, len) {
            if !w.has_full_support() {
                continue;
            }
            let d = ev.evaluate(&w)?;
            ensure!(d.min_exponent().is_some_and(|e| e >= 1), "D({w}) = {d} has an exponent below 1");
            full_support += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37);
    let sample_top = cfg.cap(4).max(2);
    for _ in 0..200 {
        let n = rng.gen_range(2..=sample_top);
        let len = rng.gen_range(0..=8);
        let w = oracle::random_word(&mut rng, n, len);
        let d = ev.evaluate(&w)?;
        let c = random_positive_conjugate(&mut rng, &w)?;
        ensure!(ev.evaluate(&c)? == d, "D({w}) = {d} but D({c}) differs");
        let mut stabilized = w.with_strands(n + 1)?;
        stabilized.push(n)?;
        ensure!(ev.evaluate(&stabilized)? == d, "D({w}) changes under stabilization");
    }

    for a in 1..=7 {
        let r = two_strand_skein(&mut ev, a)?;
        ensure!(r.is_zero(), "skein relation fails at a={a}: {r}");
    }
    Ok(format!("{full_support} full-support words in MB{m} checked; 200 conjugation and stabilization samples"))
}

fn lcm_identities(cfg: &VerifyConfig) -> Outcome {
    let n = cfg.cap(7);
    let cases = lcm_cases(n);
    for c in &cases {
        let left = NormalForm::of_word(&c.left);
        let label = c.rule.label();
        ensure!(left == NormalForm::of_word(&c.right), "{label}: {} != {}", c.left, c.right);
        let (x, y) = &c.operands;
        match brute_force_left_lcm(x, y, c.left.len())? {
            LcmSearch::Found(l) => ensure!(l == left, "{label}: lcm of {x} and {y} is {l}, table says {}", c.left),
            LcmSearch::BoundHit { .. } => {
                return Err(Failure::Fail(format!("{label}: no common multiple of {x} and {y} up to length {}", c.left.len())))
            }
        }
        if let Some((i, f)) = c.formula {
            let formula = left_lcm_formula(n, i, f)?;
            ensure!(NormalForm::of_word(&formula) == left, "{label}: formula for x{i}, {f} gives {formula}");
        }
    }

    let mut implications = 0;
    if n >= 7 {
        let betas = oracle::all_words_up_to(7, 3);
        for b in 2..=5 {
            for e in b..=5 {
                for gamma in cycles_on(7, b, e) {
                    for beta in &betas {
                        let product = gamma.concat(beta)?;
                        for i in [b - 1, e + 1] {
                            let xi = word(7, &[i]);
                            if left_divides(&xi, &product)? {
                                ensure!(left_divides(&xi, beta)?, "x{i} divides {gamma} {beta} but not {beta}");
                                implications += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} identity instances on {n} strands; {implications} divisibility implications", cases.len()))
}

/// All cycles with support exactly `[b, e]`: one letter per generator, in
/// every relative order of neighbours.
fn cycles_on(n: usize, b: usize, e: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for d in enumerate_divisors_bounded(n, usize::MAX).expect("small n") {
        let w = d.to_word();
        if w.len() == e - b + 1 && w.support() == (b..=e).collect::<BTreeSet<_>>() {
            out.push(w);
        }
    }
    out
}
