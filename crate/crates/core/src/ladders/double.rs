use std::cmp::Ordering;

use serde::Serialize;

use crate::error::Result;
use crate::webs::{compose, flip, Diagram};
use crate::weights::{dlex_compare, e_by_lambda, sort_dominance_compatible, Weight, WeightSeq, Word};

use super::light::LadderChoice;

/// flip(LL_{u, top}) ∘ LL_{w, bottom}, through V(λ).
#[derive(Clone, Debug, Serialize)]
pub struct DoubleLadder {
    pub lambda: Weight,
    pub bottom: WeightSeq,
    pub top: WeightSeq,
    #[serde(skip)]
    pub diagram: Diagram,
}

/// Double ladders Hom(V(w), V(u)), grouped by λ in dominance-compatible order;
/// bottoms descending lex, tops descending reverse-lex. With `only`, just the
/// cell of that λ.
pub fn double_ladders(w: &Word, u: &Word, only: Option<Weight>, choice: &LadderChoice) -> Result<Vec<DoubleLadder>> {
    let ew = e_by_lambda(w);
    let eu = e_by_lambda(u);
    let mut lams: Vec<Weight> = ew.keys().filter(|l| eu.contains_key(l)).copied().collect();
    if let Some(l) = only {
        lams.retain(|&x| x == l);
    }
    sort_dominance_compatible(&mut lams);
    let mut out = Vec::new();
    for lam in lams {
        let mut tops = eu[&lam].clone();
        tops.sort_by(|x, y| dlex_compare(u, y, x).unwrap_or(Ordering::Equal));
        for bottom in &ew[&lam] {
            let lb = choice.get(w, bottom)?;
            for top in &tops {
                let lt = choice.get(u, top)?;
                let diagram = compose(&flip(&lt), &lb)?;
                out.push(DoubleLadder { lambda: lam, bottom: bottom.clone(), top: top.clone(), diagram });
            }
        }
    }
    Ok(out)
}
