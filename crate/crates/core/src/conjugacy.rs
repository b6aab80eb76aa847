//! Positive conjugation by divisors of the Garside element, conjugacy
//! orbits, and the bounded Markov exploration.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::braid::{enumerate_divisors_bounded, permutation_to_divisor, BraidWord, NormalForm, Permutation};
use crate::error::{BraidError, Result};

/// Largest strand count any search accepts unless told otherwise.
pub const DEFAULT_MAX_STRANDS: usize = 7;
/// Largest orbit or Markov state set explored unless told otherwise.
pub const DEFAULT_MAX_ORBIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_strands: usize,
    pub max_orbit: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_strands: DEFAULT_MAX_STRANDS, max_orbit: DEFAULT_MAX_ORBIT }
    }
}

impl SearchLimits {
    fn check_strands(&self, n: usize) -> Result<()> {
        if n > self.max_strands {
            Err(BraidError::BoundExceeded { what: "strand", limit: self.max_strands })
        } else {
            Ok(())
        }
    }
}

/// Non-trivial divisors of `Δ_n` as permutations, in normal form order.
pub fn simple_conjugators(n: usize) -> Result<Arc<Vec<Permutation>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Permutation>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().expect("cache lock").get(&n) {
        return Ok(found.clone());
    }
    let divisors = enumerate_divisors_bounded(n, usize::MAX)?;
    let list: Vec<Permutation> =
        divisors.iter().filter(|d| !d.is_unit()).map(|d| d.factors()[0].clone()).collect();
    let list = Arc::new(list);
    cache.lock().expect("cache lock").insert(n, list.clone());
    Ok(list)
}

/// `p⁻¹ · β · p` when it is positive.
pub fn conjugate_by_simple(nf: &NormalForm, p: &Permutation) -> Option<NormalForm> {
    let mut product = nf.clone();
    product.push_simple(p.clone());
    product.left_quotient_simple(p)
}

/// `d⁻¹ · w · d` when it is positive, computed as the left quotient of `w·d` by `d`.
pub fn conjugate_by(w: &BraidWord, d: &BraidWord) -> Result<Option<NormalForm>> {
    if w.strands() != d.strands() {
        return Err(BraidError::StrandMismatch { left: w.strands(), right: d.strands() });
    }
    let nd = NormalForm::of_word(d);
    let product = NormalForm::of_word(w).multiply(&nd)?;
    Ok(product.left_quotient(&nd))
}

/// A conjugate exhibiting a square: `witness` is a word of `c⁻¹ w c` with two
/// equal adjacent letters, where `c` is `conjugator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareWitness {
    #[serde(serialize_with = "as_string")]
    pub conjugator: BraidWord,
    #[serde(serialize_with = "as_string")]
    pub witness: BraidWord,
}

fn as_string<S: serde::Serializer>(w: &BraidWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

#[derive(Debug, Clone)]
pub struct OrbitResult {
    /// Members in normal form order.
    pub representatives: Vec<NormalForm>,
    pub all_square_free: bool,
    pub square_witness: Option<SquareWitness>,
    /// False when the search stopped at the size bound.
    pub complete: bool,
}

struct Explored {
    members: Vec<NormalForm>,
    parent: Vec<Option<(usize, usize)>>,
    complete: bool,
    hit: Option<usize>,
}

impl Explored {
    fn chain(&self, conjugators: &[Permutation], mut idx: usize, strands: usize) -> BraidWord {
        let mut steps = Vec::new();
        while let Some((p, d)) = self.parent[idx] {
            steps.push(d);
            idx = p;
        }
        let mut letters = Vec::new();
        for &d in steps.iter().rev() {
            letters.extend_from_slice(permutation_to_divisor(&conjugators[d]).letters());
        }
        BraidWord::new(strands, letters).expect("conjugator letters fit")
    }
}

fn explore(
    start: NormalForm,
    conjugators: &[Permutation],
    max_size: usize,
    mut stop: impl FnMut(&NormalForm) -> bool,
) -> Explored {
    let mut index: HashMap<NormalForm, usize> = HashMap::new();
    let mut out = Explored { members: Vec::new(), parent: Vec::new(), complete: true, hit: None };
    index.insert(start.clone(), 0);
    if stop(&start) {
        out.hit = Some(0);
    }
    out.members.push(start);
    out.parent.push(None);
    if out.hit.is_some() {
        out.complete = false;
        return out;
    }
    let mut head = 0;
    while head < out.members.len() {
        let current = out.members[head].clone();
        for (d, p) in conjugators.iter().enumerate() {
            let Some(next) = conjugate_by_simple(&current, p) else { continue };
            if index.contains_key(&next) {
                continue;
            }
            if out.members.len() >= max_size {
                out.complete = false;
                return out;
            }
            let idx = out.members.len();
            index.insert(next.clone(), idx);
            let hit = stop(&next);
            out.members.push(next);
            out.parent.push(Some((head, d)));
            if hit {
                out.hit = Some(idx);
                out.complete = false;
                return out;
            }
        }
        head += 1;
    }
    out
}

pub fn positive_conjugacy_orbit(w: &BraidWord, max_size: usize) -> Result<OrbitResult> {
    positive_conjugacy_orbit_with(w, SearchLimits { max_orbit: max_size, ..SearchLimits::default() })
}

pub fn positive_conjugacy_orbit_with(w: &BraidWord, limits: SearchLimits) -> Result<OrbitResult> {
    let n = w.strands();
    limits.check_strands(n)?;
    let conjugators = simple_conjugators(n)?;
    let explored = explore(NormalForm::of_word(w), &conjugators, limits.max_orbit, |_| false);

    let witness_idx = (0..explored.members.len())
        .filter(|&i| !explored.members[i].is_square_free())
        .min_by(|&a, &b| explored.members[a].cmp(&explored.members[b]));
    let square_witness = witness_idx.map(|i| SquareWitness {
        conjugator: explored.chain(&conjugators, i, n),
        witness: explored.members[i].square_witness_word().expect("member has two factors"),
    });
    let mut representatives = explored.members;
    representatives.sort();
    Ok(OrbitResult {
        all_square_free: square_witness.is_none(),
        representatives,
        square_witness,
        complete: explored.complete,
    })
}

pub fn is_conjugate_simple(w: &BraidWord) -> Result<bool> {
    is_conjugate_simple_with(w, SearchLimits::default())
}

pub fn is_conjugate_simple_with(w: &BraidWord, limits: SearchLimits) -> Result<bool> {
    let n = w.strands();
    limits.check_strands(n)?;
    let conjugators = simple_conjugators(n)?;
    let explored = explore(NormalForm::of_word(w), &conjugators, limits.max_orbit, |m| !m.is_square_free());
    if explored.hit.is_some() {
        return Ok(false);
    }
    if !explored.complete {
        return Err(BraidError::BoundExceeded { what: "orbit size", limit: limits.max_orbit });
    }
    Ok(true)
}

pub fn are_conjugate(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    are_conjugate_with(u, v, SearchLimits::default())
}

pub fn are_conjugate_with(u: &BraidWord, v: &BraidWord, limits: SearchLimits) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    if u.len() != v.len() {
        return Ok(false);
    }
    let n = u.strands();
    limits.check_strands(n)?;
    let target = NormalForm::of_word(v);
    let conjugators = simple_conjugators(n)?;
    let explored = explore(NormalForm::of_word(u), &conjugators, limits.max_orbit, |m| *m == target);
    if explored.hit.is_some() {
        return Ok(true);
    }
    if !explored.complete {
        return Err(BraidError::BoundExceeded { what: "orbit size", limit: limits.max_orbit });
    }
    Ok(false)
}

/// The largest subset of `Div(Δ_n)` closed under positive conjugation: the
/// union of the orbits that stay square-free. Sorted by normal form.
pub fn invariant_simple_set(n: usize, limits: SearchLimits) -> Result<Vec<NormalForm>> {
    limits.check_strands(n)?;
    let conjugators = simple_conjugators(n)?;
    let mut classified: HashSet<NormalForm> = HashSet::new();
    let mut out = Vec::new();
    for d in enumerate_divisors_bounded(n, usize::MAX)? {
        if classified.contains(&d) {
            continue;
        }
        let explored = explore(d, &conjugators, limits.max_orbit, |_| false);
        if !explored.complete {
            return Err(BraidError::BoundExceeded { what: "orbit size", limit: limits.max_orbit });
        }
        let closed = explored.members.iter().all(NormalForm::is_square_free);
        for m in explored.members {
            if closed {
                out.push(m.clone());
            }
            classified.insert(m);
        }
    }
    out.sort();
    Ok(out)
}

/// A conjugate with an explicit square, trying cyclic rotations first.
pub fn find_square_conjugate(w: &BraidWord) -> Result<Option<SquareWitness>> {
    find_square_conjugate_with(w, SearchLimits::default())
}

pub fn find_square_conjugate_with(w: &BraidWord, limits: SearchLimits) -> Result<Option<SquareWitness>> {
    let n = w.strands();
    let nf = NormalForm::of_word(w);
    if !nf.is_square_free() {
        let witness = if w.has_adjacent_square() { w.clone() } else { nf.square_witness_word().expect("two factors") };
        return Ok(Some(SquareWitness { conjugator: BraidWord::unit(n), witness }));
    }
    let canonical = nf.to_word();
    for word in [&canonical, w] {
        for k in 1..word.len() {
            let rotated = word.rotate(k);
            let rnf = NormalForm::of_word(&rotated);
            if rnf.is_square_free() {
                continue;
            }
            let conjugator = BraidWord::new(n, word.letters()[..k].to_vec())?;
            let witness =
                if rotated.has_adjacent_square() { rotated } else { rnf.square_witness_word().expect("two factors") };
            return Ok(Some(SquareWitness { conjugator, witness }));
        }
    }
    limits.check_strands(n)?;
    let conjugators = simple_conjugators(n)?;
    let explored = explore(nf, &conjugators, limits.max_orbit, |m| !m.is_square_free());
    match explored.hit {
        Some(i) => Ok(Some(SquareWitness {
            conjugator: explored.chain(&conjugators, i, n),
            witness: explored.members[i].square_witness_word().expect("two factors"),
        })),
        None if explored.complete => Ok(None),
        None => Err(BraidError::BoundExceeded { what: "orbit size", limit: limits.max_orbit }),
    }
}

/// Removes a final `x(n-1)` from a braid `w' x(n-1)` with `w'` free of
/// `x(n-1)`, giving `w'` on one strand fewer.
pub fn destabilize(nf: &NormalForm) -> Option<NormalForm> {
    let n = nf.strands();
    if n < 2 {
        return None;
    }
    let top = n - 1;
    let reversed = NormalForm::of_word(&nf.to_word().reverse());
    let mut x = Permutation::identity(n);
    x.push_letter(top);
    let q = reversed.left_quotient_simple(&x)?;
    let q = NormalForm::of_word(&q.to_word().reverse());
    if q.to_word().letters().contains(&top) {
        return None;
    }
    q.restrict(n - 1)
}

/// `w · x_n` on one more strand.
pub fn stabilize(nf: &NormalForm) -> NormalForm {
    let n = nf.strands();
    nf.embed(n + 1).times_letter(n)
}

/// Explores conjugation, stabilization up to `n + extra_strands` strands and
/// destabilization from `w`; false as soon as a reached braid has a square.
pub fn is_markov_simple_bounded(w: &BraidWord, extra_strands: usize) -> Result<bool> {
    is_markov_simple_bounded_with(w, extra_strands, SearchLimits::default())
}

pub fn is_markov_simple_bounded_with(w: &BraidWord, extra_strands: usize, limits: SearchLimits) -> Result<bool> {
    let n = w.strands();
    let ceiling = n + extra_strands;
    limits.check_strands(ceiling)?;
    let start = NormalForm::of_word(w);
    if !start.is_square_free() {
        return Ok(false);
    }
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(current) = queue.pop_front() {
        let m = current.strands();
        let conjugators = simple_conjugators(m)?;
        let mut next_states: Vec<NormalForm> = conjugators.iter().filter_map(|p| conjugate_by_simple(&current, p)).collect();
        if m < ceiling {
            next_states.push(stabilize(&current));
        }
        if let Some(d) = destabilize(&current) {
            next_states.push(d);
        }
        for next in next_states {
            if seen.contains(&next) {
                continue;
            }
            if !next.is_square_free() {
                return Ok(false);
            }
            if seen.len() >= limits.max_orbit {
                return Err(BraidError::BoundExceeded { what: "Markov state", limit: limits.max_orbit });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(true)
}
