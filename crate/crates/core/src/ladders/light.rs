use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::webs::{compose_all, pad, parse_text, tensor, Diagram};
use crate::weights::{is_dominant_sequence, tensor_summands, wt, Letter, Weight, WeightSeq, Word, ZERO};

/// Elementary light ladder for one step: applied to `suffix ++ letter`,
/// it produces `replacement`.
#[derive(Clone, Debug)]
pub struct ElementaryLadder {
    pub mu: Weight,
    pub letter: Letter,
    pub suffix: Word,
    pub replacement: Word,
    pub diagram: Diagram,
}

pub fn elementary_ladder(mu: Weight) -> Option<ElementaryLadder> {
    let (letter, suffix, repl, text) = match (mu.a, mu.b) {
        (1, 0) => (Letter::One, "", "1", ""),
        (-1, 1) => (Letter::One, "1", "2", "PVertex"),
        (1, -1) => (Letter::One, "2", "1", "IVertex Id1 | Id1 Cap1"),
        (-1, 0) => (Letter::One, "1", "", "Cap1"),
        (0, 1) => (Letter::Two, "", "2", ""),
        (2, -1) => (Letter::Two, "2", "11", "IVertex IVertex | Id1 Cap1 Id1"),
        (0, 0) => (Letter::Two, "1", "1", "Id1 IVertex | Cap1 Id1"),
        (-2, 1) => (Letter::Two, "11", "2", "Id1 Id1 IVertex | Id1 Cap1 Id1 | PVertex"),
        (0, -1) => (Letter::Two, "2", "", "Cap2"),
        _ => return None,
    };
    let suffix: Word = suffix.parse().unwrap();
    let mut source = suffix.clone();
    source.push(letter);
    let diagram = if text.is_empty() { Diagram::identity(&source) } else { parse_text(text).unwrap() };
    debug_assert_eq!(diagram.source, source);
    Some(ElementaryLadder { mu, letter, suffix, replacement: repl.parse().unwrap(), diagram })
}

/// All nine elementary ladders.
pub fn all_elementary_ladders() -> Vec<ElementaryLadder> {
    [(1, 0), (-1, 1), (1, -1), (-1, 0), (0, 1), (2, -1), (0, 0), (-2, 1), (0, -1)]
        .into_iter()
        .map(|(a, b)| elementary_ladder(wt(a, b)).unwrap())
        .collect()
}

/// "12" -> "21" (N for moving a 1 rightward past a 2).
pub fn neutral_12_21() -> Diagram {
    parse_text("Id1 IVertex | PVertex Id1").unwrap()
}

/// "21" -> "12".
pub fn neutral_21_12() -> Diagram {
    parse_text("IVertex Id1 | Id1 PVertex").unwrap()
}

/// Swap of the adjacent letters at `k`, `k + 1` of `w`, which must differ.
fn swap_at(w: &Word, k: usize) -> Diagram {
    let basic = match (w.0[k], w.0[k + 1]) {
        (Letter::One, Letter::Two) => neutral_12_21(),
        (Letter::Two, Letter::One) => neutral_21_12(),
        _ => panic!("swap of equal letters"),
    };
    pad(&Word(w.0[..k].to_vec()), &basic, &Word(w.0[k + 2..].to_vec()))
}

fn apply_swaps(from: &Word, swaps: &[usize]) -> Diagram {
    let mut cur = from.clone();
    let mut parts = vec![Diagram::identity(from)];
    for &k in swaps {
        parts.push(swap_at(&cur, k));
        cur.0.swap(k, k + 1);
    }
    compose_all(&parts).unwrap()
}

/// Composite of basic neutral maps rearranging `from` into `to`. Letters are
/// brought into place left to right, each by the fewest adjacent swaps.
pub fn neutral_diagram(from: &Word, to: &Word) -> Result<Diagram> {
    if from.len() != to.len() || from.count(Letter::One) != to.count(Letter::One) {
        return Err(Error::WeightMismatch(from.clone(), to.clone()));
    }
    let mut cur = from.clone();
    let mut swaps = Vec::new();
    for i in 0..to.len() {
        if cur.0[i] == to.0[i] {
            continue;
        }
        let j = (i + 1..cur.len()).find(|&j| cur.0[j] == to.0[i]).unwrap();
        for k in (i..j).rev() {
            swaps.push(k);
            cur.0.swap(k, k + 1);
        }
    }
    Ok(apply_swaps(from, &swaps))
}

/// Moves the rightmost letters needed for `suffix` to the end of the sorted
/// word `u`, innermost first. Returns the diagram and the remaining prefix.
fn shuffle_to_suffix(u: &Word, suffix: &Word) -> Option<(Diagram, Word)> {
    let mut cur = u.clone();
    let mut swaps = Vec::new();
    let n = cur.len();
    for (placed, &l) in suffix.0.iter().rev().enumerate() {
        let end = n - placed;
        let pos = (0..end).rev().find(|&p| cur.0[p] == l)?;
        for k in pos..end - 1 {
            swaps.push(k);
            cur.0.swap(k, k + 1);
        }
    }
    let prefix = Word(cur.0[..n - suffix.len()].to_vec());
    Some((apply_swaps(u, &swaps), prefix))
}

fn sorted(w: &Word) -> Word {
    let mut v = w.0.clone();
    v.sort();
    Word(v)
}

fn not_dominant(w: &Word, reason: String) -> Error {
    Error::NotADominantSubsequence { word: w.clone(), reason }
}

/// One step of the recursion: extends the ladder of the prefix by the next
/// letter, ending on the standard word of the new partial sum.
fn extend(prev: &Diagram, letter: Letter, mu: Weight) -> Option<Diagram> {
    let el = elementary_ladder(mu).filter(|e| e.letter == letter)?;
    let u = prev.target.clone();
    let (n1, y) = shuffle_to_suffix(&u, &el.suffix)?;
    let lw = Word(vec![letter]);
    let step_in = tensor(prev, &Diagram::identity(&lw));
    let shuffle = tensor(&n1, &Diagram::identity(&lw));
    let apply = pad(&y, &el.diagram, &Word::empty());
    let after = y.concat(&el.replacement);
    let back = neutral_diagram(&after, &sorted(&after)).ok()?;
    compose_all(&[step_in, shuffle, apply, back]).ok()
}

/// The light ladder LL_{w, mus}: V(w) -> V(1^a 2^b), (a, b) = Σ mus.
pub fn light_ladder(w: &Word, mus: &WeightSeq) -> Result<Diagram> {
    if !is_dominant_sequence(w, mus) {
        return Err(not_dominant(w, format!("{mus} is not in E({w})")));
    }
    let mut d = Diagram::identity(&Word::empty());
    let mut lam = ZERO;
    for (i, (&l, &mu)) in w.0.iter().zip(&mus.0).enumerate() {
        d = extend(&d, l, mu).ok_or_else(|| not_dominant(w, format!("step {i} with {mu} after {lam}")))?;
        lam = lam + mu;
    }
    debug_assert_eq!(d.target, Word::standard(lam).unwrap());
    Ok(d)
}

/// Memoised light ladders, shared across threads. Prefix ladders are cached
/// too, since every ladder extends the ladder of its prefix.
#[derive(Default)]
pub struct LadderChoice {
    cache: RwLock<HashMap<(Word, WeightSeq), Diagram>>,
}

impl LadderChoice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, w: &Word, mus: &WeightSeq) -> Result<Diagram> {
        let key = (w.clone(), mus.clone());
        if let Some(d) = self.cache.read().unwrap().get(&key) {
            return Ok(d.clone());
        }
        if !is_dominant_sequence(w, mus) {
            return Err(not_dominant(w, format!("{mus} is not in E({w})")));
        }
        let d = if w.is_empty() {
            Diagram::identity(w)
        } else {
            let n = w.len() - 1;
            let prev = self.get(&Word(w.0[..n].to_vec()), &WeightSeq(mus.0[..n].to_vec()))?;
            extend(&prev, w.0[n], mus.0[n]).ok_or_else(|| not_dominant(w, format!("last step {}", mus.0[n])))?
        };
        self.cache.write().unwrap().insert(key, d.clone());
        Ok(d)
    }
}

/// Whether `mu` is a legal step from `lam` with `letter`.
pub fn is_step(lam: Weight, letter: Letter, mu: Weight) -> bool {
    tensor_summands(lam, letter).is_ok_and(|v| v.contains(&mu))
}
