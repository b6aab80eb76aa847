//! Positive Markov moves and the reduction of a simple braid to a unit braid.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::cycles::{is_literally_simple, CycleDecomposition};
use crate::braid::{shifted_garside_element, BraidWord, NormalForm, VerySimpleFactor};
use crate::conjugacy::{conjugate_by, destabilize, stabilize};
use crate::error::{BraidError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Conjugation `β -> c⁻¹ β c` by a positive braid.
    Conjugate,
    /// `β' x(n-1) -> β'`, dropping the top strand.
    Destabilize,
    /// `β -> β x_n` on one more strand.
    Stabilize,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Conjugate => "MI",
            MoveKind::Destabilize => "MII_destabilize",
            MoveKind::Stabilize => "MII_stabilize",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkovMove {
    pub kind: MoveKind,
    pub conjugator: Option<BraidWord>,
    pub strands_before: usize,
    pub strands_after: usize,
}

impl MarkovMove {
    pub fn conjugate(conjugator: BraidWord) -> Self {
        let n = conjugator.strands();
        MarkovMove { kind: MoveKind::Conjugate, conjugator: Some(conjugator), strands_before: n, strands_after: n }
    }

    pub fn destabilize(strands_before: usize) -> Self {
        MarkovMove { kind: MoveKind::Destabilize, conjugator: None, strands_before, strands_after: strands_before - 1 }
    }

    pub fn stabilize(strands_before: usize) -> Self {
        MarkovMove { kind: MoveKind::Stabilize, conjugator: None, strands_before, strands_after: strands_before + 1 }
    }
}

impl Serialize for MarkovMove {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("kind", self.kind.name())?;
        if let Some(c) = &self.conjugator {
            map.serialize_entry("conjugator", &c.to_string())?;
        }
        map.serialize_entry("strands_before", &self.strands_before)?;
        map.serialize_entry("strands_after", &self.strands_after)?;
        map.end()
    }
}

/// Applies one move, or explains why it does not apply.
pub fn apply_move(current: &NormalForm, mv: &MarkovMove) -> std::result::Result<NormalForm, String> {
    let n = current.strands();
    if mv.strands_before != n {
        return Err(format!("move expects {} strands, braid has {n}", mv.strands_before));
    }
    let next = match mv.kind {
        MoveKind::Conjugate => {
            let c = mv.conjugator.as_ref().ok_or("conjugation without a conjugator")?;
            if c.strands() != n {
                return Err(format!("conjugator lives on {} strands, braid has {n}", c.strands()));
            }
            conjugate_by(&current.to_word(), c)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("conjugate by {c} is not positive"))?
        }
        MoveKind::Destabilize => destabilize(current).ok_or("braid is not of the form w' x(n-1)")?,
        MoveKind::Stabilize => stabilize(current),
    };
    if next.strands() != mv.strands_after {
        return Err(format!("move claims {} strands after, got {}", mv.strands_after, next.strands()));
    }
    Ok(next)
}

pub fn replay_moves(start: &BraidWord, moves: &[MarkovMove]) -> Result<BraidWord> {
    let mut current = NormalForm::of_word(start);
    for (index, mv) in moves.iter().enumerate() {
        current = apply_move(&current, mv).map_err(|reason| BraidError::InapplicableMove { index, reason })?;
    }
    Ok(current.to_word())
}

struct Reducer {
    current: NormalForm,
    moves: Vec<MarkovMove>,
}

impl Reducer {
    fn apply(&mut self, mv: MarkovMove) -> Result<()> {
        let next = apply_move(&self.current, &mv)
            .map_err(|reason| BraidError::Internal(format!("reduction produced a bad move: {reason}")))?;
        if !is_literally_simple(&next.to_word()) {
            return Err(BraidError::Internal(format!("reduction left the simple braids at {next}")));
        }
        self.current = next;
        self.moves.push(mv);
        Ok(())
    }

    fn conjugate(&mut self, letters: Vec<usize>) -> Result<()> {
        let n = self.current.strands();
        self.apply(MarkovMove::conjugate(BraidWord::new(n, letters)?))
    }

    fn decomposition(&self) -> Result<CycleDecomposition> {
        super::cycles::decompose_normal_form(&self.current)
    }

    fn blocks(&self) -> Result<Vec<(usize, usize)>> {
        Ok(self.decomposition()?.cycles().iter().map(|c| c.support()).collect())
    }

    /// Rotates sources of every cycle until each cycle is `U(b,e)`.
    fn make_ascending(&mut self) -> Result<()> {
        loop {
            let d = self.decomposition()?;
            let Some(letter) = d.cycles().iter().find(|c| !c.is_ascending()).map(|c| {
                let (b, _) = c.support();
                *c.initial_set().iter().find(|&&i| i > b).expect("a non-ascending cycle has a source above its base")
            }) else {
                return Ok(());
            };
            self.conjugate(vec![letter])?;
        }
    }

    /// Slides ascending blocks down until they are separated by a single gap.
    fn pack(&mut self) -> Result<()> {
        loop {
            let blocks = self.blocks()?;
            let mut floor = 1;
            let mut slide = None;
            for &(b, e) in &blocks {
                if b > floor {
                    slide = Some((b, e));
                    break;
                }
                floor = e + 2;
            }
            let Some((b, e)) = slide else { return Ok(()) };
            // U(b-1,e)⁻¹ U(b,e) U(b-1,e) = U(b-1,e-1)
            self.conjugate((b - 1..=e).collect())?;
        }
    }

    /// Flips the strands `lo+1 ..= lo+m` with their half twist.
    fn half_twist(&mut self, m: usize, offset: usize) -> Result<()> {
        let n = self.current.strands();
        let twist = shifted_garside_element(m, offset, n)?;
        if twist.is_empty() {
            return Ok(());
        }
        self.apply(MarkovMove::conjugate(twist))
    }

    /// Orders packed ascending blocks by decreasing size.
    fn sort_blocks(&mut self) -> Result<()> {
        loop {
            let blocks = self.blocks()?;
            let Some(k) = (0..blocks.len().saturating_sub(1)).find(|&k| {
                let (b1, e1) = blocks[k];
                let (b2, e2) = blocks[k + 1];
                e1 - b1 < e2 - b2
            }) else {
                return Ok(());
            };
            let (b1, _) = blocks[k];
            let (_, e2) = blocks[k + 1];
            self.half_twist(e2 + 2 - b1, b1 - 1)?;
            for (b, e) in self.blocks()?.into_iter().skip(k).take(2) {
                self.half_twist(e + 2 - b, b - 1)?;
            }
        }
    }

    /// Peels the top block strand by strand, flipping the remaining blocks
    /// up whenever the top strand becomes trivial.
    fn peel(&mut self) -> Result<()> {
        loop {
            let m = self.current.strands();
            let word = self.current.to_word();
            let support = word.support();
            let Some(&lowest) = support.iter().next() else { return Ok(()) };
            let top = m - 1;
            if !support.contains(&top) {
                let bottom = lowest - 1;
                self.half_twist(m - bottom, bottom)?;
                continue;
            }
            if destabilize(&self.current).is_some() {
                self.apply(MarkovMove::destabilize(m))?;
            } else {
                self.conjugate(vec![top])?;
            }
        }
    }
}

/// Positive Markov moves taking a literally simple braid to `1_c`, `c` the
/// number of closure components.
pub fn markov_reduce(w: &BraidWord) -> Result<Vec<MarkovMove>> {
    if !is_literally_simple(w) {
        return Err(BraidError::NotLiterallySimple);
    }
    let mut r = Reducer { current: NormalForm::of_word(w), moves: Vec::new() };
    r.make_ascending()?;
    r.pack()?;
    r.sort_blocks()?;
    debug_assert!(r.decomposition().is_ok_and(|d| d.cycles().iter().all(|c| matches!(
        c.factors(),
        [VerySimpleFactor::U(..)]
    ))));
    r.peel()?;
    Ok(r.moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simple::{canonical_conjugacy_word, conjugacy_type, ConjugacyType};

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn small_reductions() {
        let moves = markov_reduce(&w(2, &[1])).unwrap();
        assert_eq!(moves, vec![MarkovMove::destabilize(2)]);
        let moves = markov_reduce(&w(3, &[1, 2])).unwrap();
        assert_eq!(moves, vec![MarkovMove::destabilize(3), MarkovMove::destabilize(2)]);
        assert!(markov_reduce(&w(3, &[1, 2, 1])).is_err());
    }

    #[test]
    fn reduces_canonical_word() {
        let t = ConjugacyType::new(vec![4, 3, 2, 2], 13).unwrap();
        let start = canonical_conjugacy_word(&t);
        let moves = markov_reduce(&start).unwrap();
        let end = replay_moves(&start, &moves).unwrap();
        assert!(end.is_empty());
        assert_eq!(end.strands(), 6);
    }

    #[test]
    fn reduces_mixed_cycles() {
        for start in [w(7, &[2, 1, 3, 5]), w(9, &[7, 6, 8, 2, 1, 3, 4]), w(6, &[5, 4, 3, 2, 1])] {
            let moves = markov_reduce(&start).unwrap();
            let end = replay_moves(&start, &moves).unwrap();
            assert!(end.is_empty());
            assert_eq!(end.strands(), conjugacy_type(&start).unwrap().components());
        }
    }

    #[test]
    fn replay_checks_moves() {
        assert_eq!(replay_moves(&w(2, &[1]), &[MarkovMove::destabilize(2)]).unwrap(), BraidWord::unit(1));
        let r = replay_moves(&w(3, &[1, 2, 1]), &[MarkovMove::conjugate(w(3, &[1]))]).unwrap();
        assert_eq!(r.letters(), &[2, 1, 1]);
        let r = replay_moves(&w(2, &[1]), &[MarkovMove::stabilize(2)]).unwrap();
        assert_eq!(r, w(3, &[1, 2]));
        let err = replay_moves(&w(3, &[1, 2, 1]), &[MarkovMove::stabilize(3), MarkovMove::destabilize(3)]);
        assert!(matches!(err, Err(BraidError::InapplicableMove { index: 1, .. })));
    }

    #[test]
    fn trace_json() {
        let m = MarkovMove::conjugate(w(3, &[1, 2]));
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"kind":"MI","conjugator":"x1 x2","strands_before":3,"strands_after":3}"#
        );
        assert_eq!(
            serde_json::to_string(&MarkovMove::destabilize(2)).unwrap(),
            r#"{"kind":"MII_destabilize","strands_before":2,"strands_after":1}"#
        );
    }
}
