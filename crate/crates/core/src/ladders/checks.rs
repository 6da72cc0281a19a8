use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::repr::linmap::{add, compose as compose_maps, scale, LinMap};
use crate::report::Report;
use crate::ring::{CoeffField, CoeffRing, LaurentPoly, RingElem, SymbolicA};
use crate::webs::{flip, Diagram, Evaluator};
use crate::weights::{
    dlex_compare, dominance_leq, e_by_lambda, enumerate_e_lambda, hom_dim, lex_compare, Weight, WeightSeq, Word,
};

use super::double::{double_ladders, DoubleLadder};
use super::light::LadderChoice;

/// Triangularity matrix: `matrix[i][j]` is the coefficient of the highest
/// weight vector of V(x_λ) in LL_{w, labels[i]}(v_{w, labels[j]}).
#[derive(Clone, Debug)]
pub struct Triangularity<E> {
    pub word: Word,
    pub lambda: Weight,
    pub labels: Vec<WeightSeq>,
    pub matrix: Vec<Vec<E>>,
    pub report: Report,
}

pub fn triangularity_check<K: CoeffRing>(
    ev: &Evaluator<K>,
    choice: &LadderChoice,
    w: &Word,
    lam: Weight,
) -> Result<Triangularity<K::Elem>> {
    let start = Instant::now();
    let k = &ev.ring;
    let labels = enumerate_e_lambda(w, lam);
    let top = Word::standard(lam)?.highest_index();
    let mut report = Report::new("triangularity", json!({"word": w.to_string(), "lambda": [lam.a, lam.b], "ring": k.describe()}));
    let mut matrix = Vec::new();
    for mu in &labels {
        let ll = choice.get(w, mu)?;
        let row: Vec<K::Elem> = labels
            .iter()
            .map(|nu| {
                let v = ev.apply_basis(&ll, w.index_of_seq(nu).unwrap());
                v.get(&top).cloned().unwrap_or_else(|| k.zero())
            })
            .collect();
        for (nu, x) in labels.iter().zip(&row) {
            let ord = lex_compare(w, nu, mu)?;
            if ord == Ordering::Greater && !k.is_zero(x) {
                report.fail(format!("LL{mu} on v{nu} has top coefficient {}", k.render(x)));
            }
            if ord == Ordering::Equal && !k.is_unit(x) {
                report.fail(format!("diagonal entry at {mu} is {}, not a unit", k.render(x)));
            }
        }
        matrix.push(row);
    }
    Ok(Triangularity { word: w.clone(), lambda: lam, labels, matrix, report: report.timed(start) })
}

/// Checks that flip(LL_{w, mu}) sends the highest weight vector of V(x_λ)
/// to a unit multiple of v_{w, mu} plus terms strictly above it in
/// reverse-lex order.
pub fn upside_down_check<K: CoeffRing>(
    ev: &Evaluator<K>,
    choice: &LadderChoice,
    w: &Word,
    mu: &WeightSeq,
) -> Result<Report> {
    let start = Instant::now();
    let k = &ev.ring;
    let mut report = Report::new("upside-down", json!({"word": w.to_string(), "sequence": mu, "ring": k.describe()}));
    let ll = choice.get(w, mu)?;
    let up = flip(&ll);
    let v = ev.apply_basis(&up, up.source.highest_index());
    let mi = w.index_of_seq(mu)?;
    match v.get(&mi) {
        Some(c) if k.is_unit(c) => {}
        Some(c) => report.fail(format!("coefficient of v{mu} is {}, not a unit", k.render(c))),
        None => report.fail(format!("v{mu} does not appear")),
    }
    for &i in v.keys() {
        if i == mi {
            continue;
        }
        let tau = w.seq_of_index(i);
        if dlex_compare(w, mu, &tau)? != Ordering::Less {
            report.fail(format!("support contains {tau}, not above {mu}"));
        }
    }
    Ok(report.timed(start))
}

type EvalKey = (Word, WeightSeq, bool);

/// Evaluated light ladders (and their flips) over a field, cached.
///
/// Over Q(q) the diagrams are evaluated over A and then embedded, which is
/// much cheaper than rational-function arithmetic during propagation.
pub struct LadderEvals<F: CoeffField> {
    pub field: F,
    direct: Option<Evaluator<F>>,
    via_a: Option<Evaluator<SymbolicA>>,
    cache: RwLock<HashMap<EvalKey, Arc<LinMap<F::Elem>>>>,
}

impl<F: CoeffField + Clone> LadderEvals<F> {
    pub fn direct(field: F) -> Self {
        LadderEvals { direct: Some(Evaluator::new(field.clone())), via_a: None, field, cache: Default::default() }
    }

    pub fn through_a(field: F) -> Self {
        LadderEvals { direct: None, via_a: Some(Evaluator::new(SymbolicA)), field, cache: Default::default() }
    }

    pub fn eval(&self, d: &Diagram) -> LinMap<F::Elem> {
        match (&self.direct, &self.via_a) {
            (Some(ev), _) => ev.eval(d),
            (None, Some(ev)) => ev.eval(d).map_coeffs(|x| self.field.embed(x)),
            _ => unreachable!(),
        }
    }

    /// LL_{w, mu}, or its flip.
    pub fn ladder(&self, choice: &LadderChoice, w: &Word, mu: &WeightSeq, flipped: bool) -> Result<Arc<LinMap<F::Elem>>> {
        let key = (w.clone(), mu.clone(), flipped);
        if let Some(m) = self.cache.read().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let d = choice.get(w, mu)?;
        let d = if flipped { flip(&d) } else { d };
        let m = Arc::new(self.eval(&d));
        self.cache.write().unwrap().insert(key, m.clone());
        Ok(m)
    }

    pub fn double_ladder(&self, choice: &LadderChoice, w: &Word, u: &Word, dl: &DoubleLadder) -> Result<LinMap<F::Elem>> {
        let bottom = self.ladder(choice, w, &dl.bottom, false)?;
        let top = self.ladder(choice, u, &dl.top, true)?;
        Ok(compose_maps(&self.field, &top, &bottom))
    }
}

/// Echelon form of the double ladder basis of Hom(V(w), V(u)).
pub struct LadderBasis<'a, F: CoeffField> {
    pub ladders: Vec<DoubleLadder>,
    pub matrices: Vec<LinMap<F::Elem>>,
    pub echelon: Echelon<'a, F>,
    pub independent: bool,
}

pub fn ladder_basis<'a, F: CoeffField + Clone>(
    evals: &'a LadderEvals<F>,
    choice: &LadderChoice,
    w: &Word,
    u: &Word,
) -> Result<LadderBasis<'a, F>> {
    let ladders = double_ladders(w, u, None, choice)?;
    let mut echelon = Echelon::new(&evals.field);
    let mut independent = true;
    let mut matrices = Vec::with_capacity(ladders.len());
    for dl in &ladders {
        let m = evals.double_ladder(choice, w, u, dl)?;
        independent &= echelon.insert(m.flatten());
        matrices.push(m);
    }
    Ok(LadderBasis { ladders, matrices, echelon, independent })
}

/// Rank of the double ladders against dim Hom(V(w), V(u)).
pub fn basis_check<F: CoeffField + Clone>(evals: &LadderEvals<F>, choice: &LadderChoice, w: &Word, u: &Word) -> Result<Report> {
    let start = Instant::now();
    let b = ladder_basis(evals, choice, w, u)?;
    let dim = hom_dim(w, u);
    let rank = b.echelon.rank();
    let mut r = Report::new(
        "basis",
        json!({"w": w.to_string(), "u": u.to_string(), "field": evals.field.describe(), "rank": rank, "hom_dim": dim, "count": b.ladders.len()}),
    );
    if b.ladders.len() != dim || rank != dim {
        r.fail(format!("{w} -> {u}: {} ladders, rank {rank}, dimension {dim}", b.ladders.len()));
    }
    Ok(r.timed(start))
}

/// Coordinates of `m` in the double ladder basis.
pub fn express_in_basis<F: CoeffField + Clone>(
    evals: &LadderEvals<F>,
    choice: &LadderChoice,
    m: &LinMap<F::Elem>,
) -> Result<(Vec<DoubleLadder>, Vec<F::Elem>)> {
    let b = ladder_basis(evals, choice, &m.source, &m.target)?;
    if !b.independent {
        return Err(Error::NotInSpan);
    }
    let c = b.echelon.coordinates(m.flatten()).ok_or(Error::NotInSpan)?;
    Ok((b.ladders, c))
}

/// A random element of A: `±n q^e`, sometimes divided by [2].
fn random_coeff(rng: &mut ChaCha8Rng) -> RingElem {
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let e = rng.gen_range(-3..=3);
    RingElem::new(LaurentPoly::monomial(n, e), rng.gen_range(0..=1))
}

/// Random morphisms V(w) -> V(u): combinations of the double ladders with
/// random coefficients, preceded by the identity when `w == u`.
pub fn random_morphisms<F: CoeffField + Clone>(
    evals: &LadderEvals<F>,
    choice: &LadderChoice,
    w: &Word,
    u: &Word,
    seed: u64,
    samples: usize,
) -> Result<Vec<LinMap<F::Elem>>> {
    let k = &evals.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if w == u {
        out.push(crate::repr::linmap::identity_map(k, w));
    }
    let mut fs = vec![LinMap::zero(w.clone(), u.clone()); samples];
    for dl in double_ladders(w, u, None, choice)? {
        let m = evals.double_ladder(choice, w, u, &dl)?;
        for f in fs.iter_mut() {
            let c = k.embed(&random_coeff(&mut rng));
            *f = add(k, f, &scale(k, &c, &m));
        }
    }
    out.extend(fs);
    Ok(out)
}

/// The double ladder basis of Hom(V(w), V(x_λ)), against which composites
/// LL ∘ f are expanded.
pub struct CellTarget<'a, F: CoeffField> {
    pub lambda: Weight,
    basis: LadderBasis<'a, F>,
    lambda_top: Option<WeightSeq>,
}

impl<'a, F: CoeffField + Clone> CellTarget<'a, F> {
    pub fn new(evals: &'a LadderEvals<F>, choice: &LadderChoice, w: &Word, lam: Weight) -> Result<Self> {
        let x = Word::standard(lam)?;
        let basis = ladder_basis(evals, choice, w, &x)?;
        Ok(CellTarget { lambda: lam, basis, lambda_top: enumerate_e_lambda(&x, lam).into_iter().next() })
    }

    /// Checks LL_{u, mu} ∘ f for every mu in E(u, λ) and every f.
    pub fn check(
        &self,
        evals: &LadderEvals<F>,
        choice: &LadderChoice,
        u: &Word,
        morphisms: &[LinMap<F::Elem>],
        report: &mut Report,
    ) -> Result<()> {
        let k = &evals.field;
        let lam = self.lambda;
        if !self.basis.independent {
            report.fail(format!("double ladders into {} are dependent", Word::standard(lam)?));
            return Ok(());
        }
        for mu in &enumerate_e_lambda(u, lam) {
            let ll = evals.ladder(choice, u, mu, false)?;
            for f in morphisms {
                let comp = compose_maps(k, &ll, f);
                let Some(coords) = self.basis.echelon.coordinates(comp.flatten()) else {
                    report.fail(format!("LL{mu} ∘ f not in the span of the double ladders"));
                    continue;
                };
                for (dl, c) in self.basis.ladders.iter().zip(&coords) {
                    if k.is_zero(c) {
                        continue;
                    }
                    let ok = if dl.lambda == lam {
                        Some(&dl.top) == self.lambda_top.as_ref()
                    } else {
                        dominance_leq(dl.lambda, lam)
                    };
                    if !ok {
                        report.fail(format!(
                            "LL{mu} ∘ f uses the double ladder {} | {} in cell {}",
                            dl.bottom, dl.top, dl.lambda
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Composes LL_{u, mu} (for each mu ending at λ) with random morphisms
/// V(w) -> V(u) and checks the result lies in the span of the double
/// ladders through cells at or below λ, using only the λ-cell ladder whose
/// top is the dominant sequence of x_λ. With `w == u` the identity is among
/// the samples.
pub fn cellularity_check<F: CoeffField + Clone>(
    evals: &LadderEvals<F>,
    choice: &LadderChoice,
    w: &Word,
    u: &Word,
    lam: Weight,
    seed: u64,
    samples: usize,
) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(
        "cellularity",
        json!({"w": w.to_string(), "u": u.to_string(), "lambda": [lam.a, lam.b], "field": evals.field.describe(), "seed": seed}),
    );
    if enumerate_e_lambda(u, lam).is_empty() {
        return Ok(report.timed(start));
    }
    let target = CellTarget::new(evals, choice, w, lam)?;
    let morphisms = random_morphisms(evals, choice, w, u, seed, samples)?;
    target.check(evals, choice, u, &morphisms, &mut report)?;
    Ok(report.timed(start))
}

/// Cellularity for V(w) against every word in `us` and every λ, sharing
/// the target bases.
pub fn cellularity_from_word<F: CoeffField + Clone>(
    evals: &LadderEvals<F>,
    choice: &LadderChoice,
    w: &Word,
    us: &[Word],
    seed: u64,
    samples: usize,
) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(
        "cellularity",
        json!({"w": w.to_string(), "field": evals.field.describe(), "seed": seed, "samples": samples}),
    );
    let lams: Vec<Weight> = e_by_lambda(w).into_keys().collect();
    let targets = lams.iter().map(|&l| CellTarget::new(evals, choice, w, l)).collect::<Result<Vec<_>>>()?;
    let mut cases = 0;
    for u in us {
        let eu = e_by_lambda(u);
        let relevant: Vec<&CellTarget<F>> = targets.iter().filter(|t| eu.contains_key(&t.lambda)).collect();
        if relevant.is_empty() {
            continue;
        }
        let morphisms = random_morphisms(evals, choice, w, u, seed, samples)?;
        for t in relevant {
            cases += 1;
            let before = report.witnesses.len();
            t.check(evals, choice, u, &morphisms, &mut report)?;
            for wit in &mut report.witnesses[before..] {
                *wit = format!("{w} -> {u}, cell {}: {wit}", t.lambda);
            }
        }
    }
    report.params["cases"] = json!(cases);
    Ok(report.timed(start))
}
