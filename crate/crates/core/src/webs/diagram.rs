use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingElem;
use crate::weights::{Letter, Word};

/// Elementary pieces of a web slice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Generator {
    Id1,
    Id2,
    Cup1,
    Cup2,
    Cap1,
    Cap2,
    /// Trivalent vertex "2" -> "11".
    IVertex,
    /// Trivalent vertex "11" -> "2".
    PVertex,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::Id1,
        Generator::Id2,
        Generator::Cup1,
        Generator::Cup2,
        Generator::Cap1,
        Generator::Cap2,
        Generator::IVertex,
        Generator::PVertex,
    ];

    pub fn source(self) -> &'static [Letter] {
        use Letter::*;
        match self {
            Generator::Id1 => &[One],
            Generator::Id2 => &[Two],
            Generator::Cup1 | Generator::Cup2 => &[],
            Generator::Cap1 | Generator::PVertex => &[One, One],
            Generator::Cap2 => &[Two, Two],
            Generator::IVertex => &[Two],
        }
    }

    pub fn target(self) -> &'static [Letter] {
        self.flip().source()
    }

    /// Mirror image top to bottom.
    pub fn flip(self) -> Generator {
        match self {
            Generator::Cup1 => Generator::Cap1,
            Generator::Cap1 => Generator::Cup1,
            Generator::Cup2 => Generator::Cap2,
            Generator::Cap2 => Generator::Cup2,
            Generator::IVertex => Generator::PVertex,
            Generator::PVertex => Generator::IVertex,
            g => g,
        }
    }

    pub fn identity(l: Letter) -> Generator {
        match l {
            Letter::One => Generator::Id1,
            Letter::Two => Generator::Id2,
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(self, Generator::Id1 | Generator::Id2)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// Generators side by side, left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Slice(pub Vec<Generator>);

impl Slice {
    pub fn source(&self) -> Word {
        Word(self.0.iter().flat_map(|g| g.source().iter().copied()).collect())
    }

    pub fn target(&self) -> Word {
        Word(self.0.iter().flat_map(|g| g.target().iter().copied()).collect())
    }

    pub fn identity(w: &Word) -> Slice {
        Slice(w.letters().iter().map(|&l| Generator::identity(l)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|g| g.is_identity())
    }

    /// `id_left ⊗ self ⊗ id_right`.
    pub fn padded(&self, left: &Word, right: &Word) -> Slice {
        let mut v = Slice::identity(left).0;
        v.extend_from_slice(&self.0);
        v.extend(Slice::identity(right).0);
        Slice(v)
    }
}

/// A web as a stack of slices, read bottom (source) to top (target).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    pub source: Word,
    pub target: Word,
    pub slices: Vec<Slice>,
}

impl Diagram {
    pub fn identity(w: &Word) -> Diagram {
        Diagram { source: w.clone(), target: w.clone(), slices: Vec::new() }
    }

    /// Checks that consecutive slices meet and builds the diagram.
    pub fn from_slices(slices: Vec<Slice>) -> Result<Diagram> {
        let Some(first) = slices.first() else {
            return Ok(Diagram::identity(&Word::empty()));
        };
        let source = first.source();
        let mut cur = source.clone();
        for (i, s) in slices.iter().enumerate() {
            if s.source() != cur {
                return Err(Error::BoundaryMismatch(format!(
                    "slice {i} expects {} but receives {cur}",
                    s.source()
                )));
            }
            cur = s.target();
        }
        Ok(Diagram { source, target: cur, slices })
    }

    pub fn generator(g: Generator) -> Diagram {
        Diagram::from_slices(vec![Slice(vec![g])]).unwrap()
    }

    pub fn validate(&self) -> Result<()> {
        let mut cur = self.source.clone();
        for (i, s) in self.slices.iter().enumerate() {
            if s.source() != cur {
                return Err(Error::BoundaryMismatch(format!("slice {i} expects {} but receives {cur}", s.source())));
            }
            cur = s.target();
        }
        if cur != self.target {
            return Err(Error::BoundaryMismatch(format!("diagram ends at {cur}, declared {}", self.target)));
        }
        Ok(())
    }

    /// Drops slices made only of identities.
    pub fn normalized(&self) -> Diagram {
        Diagram {
            source: self.source.clone(),
            target: self.target.clone(),
            slices: self.slices.iter().filter(|s| !s.is_identity()).cloned().collect(),
        }
    }

    pub fn num_slices(&self) -> usize {
        self.slices.len()
    }

    /// Same morphism as `other` up to identity slices.
    pub fn same_as(&self, other: &Diagram) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [{}]", self.source, self.target, to_text(self))
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(g: &Diagram, f: &Diagram) -> Result<Diagram> {
    if f.target != g.source {
        return Err(Error::BoundaryMismatch(format!("cannot stack {} on top of {}", g.source, f.target)));
    }
    let mut slices = f.slices.clone();
    slices.extend(g.slices.iter().cloned());
    Ok(Diagram { source: f.source.clone(), target: g.target.clone(), slices })
}

/// Compose a chain given bottom to top.
pub fn compose_all(parts: &[Diagram]) -> Result<Diagram> {
    let mut it = parts.iter();
    let mut acc = it.next().cloned().ok_or_else(|| Error::BoundaryMismatch("empty composition".into()))?;
    for d in it {
        acc = compose(d, &acc)?;
    }
    Ok(acc)
}

/// Side by side, `f` on the left. The shorter stack is padded with
/// identity slices on its top boundary.
pub fn tensor(f: &Diagram, g: &Diagram) -> Diagram {
    let n = f.slices.len().max(g.slices.len());
    let pad = |d: &Diagram, i: usize| {
        d.slices.get(i).cloned().unwrap_or_else(|| Slice::identity(&d.target))
    };
    let slices = (0..n)
        .map(|i| {
            let mut v = pad(f, i).0;
            v.extend(pad(g, i).0);
            Slice(v)
        })
        .collect();
    Diagram { source: f.source.concat(&g.source), target: f.target.concat(&g.target), slices }
}

/// `id_left ⊗ d ⊗ id_right`.
pub fn pad(left: &Word, d: &Diagram, right: &Word) -> Diagram {
    Diagram {
        source: left.concat(&d.source).concat(right),
        target: left.concat(&d.target).concat(right),
        slices: d.slices.iter().map(|s| s.padded(left, right)).collect(),
    }
}

/// Upside-down mirror image.
pub fn flip(d: &Diagram) -> Diagram {
    Diagram {
        source: d.target.clone(),
        target: d.source.clone(),
        slices: d.slices.iter().rev().map(|s| Slice(s.0.iter().map(|g| g.flip()).collect())).collect(),
    }
}

/// Formal A-linear combination of diagrams with common boundary.
#[derive(Clone, PartialEq, Debug)]
pub struct WebExpr {
    pub source: Word,
    pub target: Word,
    pub terms: BTreeMap<Diagram, RingElem>,
}

impl WebExpr {
    pub fn zero(source: Word, target: Word) -> Self {
        WebExpr { source, target, terms: BTreeMap::new() }
    }

    pub fn single(d: Diagram) -> Self {
        Self::term(RingElem::one(), d)
    }

    pub fn term(c: RingElem, d: Diagram) -> Self {
        let mut e = WebExpr::zero(d.source.clone(), d.target.clone());
        e.add_term(c, d).unwrap();
        e
    }

    pub fn add_term(&mut self, c: RingElem, d: Diagram) -> Result<()> {
        if d.source != self.source || d.target != self.target {
            return Err(Error::BoundaryMismatch(format!(
                "term {} -> {} in a sum over {} -> {}",
                d.source, d.target, self.source, self.target
            )));
        }
        let e = self.terms.entry(d).or_default();
        *e = &*e + &c;
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }

    pub fn plus(mut self, other: &WebExpr) -> Result<WebExpr> {
        for (d, c) in &other.terms {
            self.add_term(c.clone(), d.clone())?;
        }
        Ok(self)
    }

    pub fn scaled(&self, c: &RingElem) -> WebExpr {
        let mut e = WebExpr::zero(self.source.clone(), self.target.clone());
        for (d, x) in &self.terms {
            e.add_term(c * x, d.clone()).unwrap();
        }
        e
    }

    /// Bilinear extension of diagram composition, `self` on top.
    pub fn after(&self, f: &WebExpr) -> Result<WebExpr> {
        let mut e = WebExpr::zero(f.source.clone(), self.target.clone());
        for (dg, cg) in &self.terms {
            for (df, cf) in &f.terms {
                e.add_term(cg * cf, compose(dg, df)?)?;
            }
        }
        Ok(e)
    }
}

/// Slices separated by `|`, bottom to top; generators by whitespace.
pub fn to_text(d: &Diagram) -> String {
    d.slices
        .iter()
        .map(|s| s.0.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Parses `to_text` output. An empty string is the empty diagram; use
/// `parse_text_with_source` for identities on other words.
pub fn parse_text(s: &str) -> Result<Diagram> {
    if s.trim().is_empty() {
        return Ok(Diagram::identity(&Word::empty()));
    }
    let slices = s
        .split('|')
        .map(|part| part.split_whitespace().map(str::parse).collect::<Result<Vec<Generator>>>().map(Slice))
        .collect::<Result<Vec<_>>>()?;
    Diagram::from_slices(slices)
}

pub fn parse_text_with_source(source: &Word, s: &str) -> Result<Diagram> {
    if s.trim().is_empty() {
        return Ok(Diagram::identity(source));
    }
    let d = parse_text(s)?;
    if &d.source != source {
        return Err(Error::BoundaryMismatch(format!("diagram starts at {}, expected {source}", d.source)));
    }
    Ok(d)
}

pub fn to_json(d: &Diagram) -> serde_json::Value {
    serde_json::to_value(d).expect("diagram serialises")
}

pub fn from_json(v: &serde_json::Value) -> Result<Diagram> {
    let d: Diagram = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    d.validate()?;
    Ok(d)
}
