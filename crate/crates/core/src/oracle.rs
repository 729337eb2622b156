//! Brute-force checks in the truncated tensor algebra `⊕_{n<=N} g^{⊗n}`.
//!
//! Coordinates enumerate words by degree, then lexicographically. Every computation is exact;
//! reports carry the seeds and sizes needed to reproduce them.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::hom_lie::HomLieAlgebra;
use crate::linalg::{RatMatrix, SparseEchelon, SparseVec};
use crate::pbw::{is_pbw_word, PbwContext, Strategy};
use crate::random::{random_word, rng, TestRng};
use crate::scalar::Scalar;
use crate::tensor::{TensorElement, Word};

/// All words of degree `1..=max_degree` over `dim` letters, in coordinate order.
#[derive(Clone, Debug)]
pub struct DegreeTruncation {
    dim: usize,
    max_degree: usize,
    offsets: Vec<usize>,
}

impl DegreeTruncation {
    pub fn new(dim: usize, max_degree: usize) -> Self {
        let mut offsets = vec![0, 0];
        let mut size = 1;
        for _ in 1..=max_degree {
            size *= dim;
            offsets.push(offsets.last().unwrap() + size);
        }
        Self { dim, max_degree, offsets }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `dim + dim^2 + ... + dim^N`.
    pub fn len(&self) -> usize {
        self.offsets[self.max_degree + 1]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of coordinates of degree at most `n`.
    pub fn len_up_to(&self, n: usize) -> usize {
        self.offsets[n.min(self.max_degree) + 1]
    }

    pub fn coordinate(&self, w: &Word) -> Option<usize> {
        let n = w.len();
        if n > self.max_degree || w.letters().iter().any(|&l| l >= self.dim) {
            return None;
        }
        let rank = w.letters().iter().fold(0, |acc, &l| acc * self.dim + l);
        Some(self.offsets[n] + rank)
    }

    pub fn word(&self, coord: usize) -> Word {
        let n = (1..=self.max_degree).find(|&n| coord < self.offsets[n + 1]).expect("coordinate in range");
        let mut rank = coord - self.offsets[n];
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = rank % self.dim;
            rank /= self.dim;
        }
        Word::new(letters).expect("positive degree")
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(|c| self.word(c))
    }

    pub fn pbw_count(&self, n: usize) -> usize {
        (0..self.len_up_to(n)).filter(|&c| is_pbw_word(self.word(c).letters())).count()
    }

    pub fn to_sparse(&self, t: &TensorElement) -> SparseVec {
        t.iter()
            .map(|(w, c)| (self.coordinate(w).expect("element within truncation"), c.clone()))
            .collect()
    }

    pub fn to_element(&self, v: &SparseVec) -> TensorElement {
        TensorElement::from_terms(v.iter().map(|(c, x)| (self.word(*c), x.clone())))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub check: String,
    pub parameters: BTreeMap<String, Value>,
    pub ranks: BTreeMap<String, usize>,
    pub counts: BTreeMap<String, usize>,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

impl OracleReport {
    fn new(check: &str) -> Self {
        Self {
            check: check.to_string(),
            parameters: BTreeMap::new(),
            ranks: BTreeMap::new(),
            counts: BTreeMap::new(),
            pass: true,
            witnesses: Vec::new(),
        }
    }

    fn param(mut self, k: &str, v: Value) -> Self {
        self.parameters.insert(k.to_string(), v);
        self
    }

    fn fail(&mut self, witness: String) {
        self.pass = false;
        if self.witnesses.len() < 10 {
            self.witnesses.push(witness);
        }
    }
}

fn words_of_length(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..dim).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// All `(a, x, y, b)` with `|a| + |b| + 2 = n` and `x > y`.
fn generator_indices(dim: usize, n: usize) -> Vec<(Vec<usize>, usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for i in 0..=n - 2 {
        let j = n - 2 - i;
        for a in words_of_length(dim, i) {
            for b in words_of_length(dim, j) {
                for x in 0..dim {
                    for y in 0..x {
                        out.push((a.clone(), x, y, b.clone()));
                    }
                }
            }
        }
    }
    out
}

type GeneratorFn<'a> = dyn Fn(&[usize], usize, usize, &[usize]) -> Result<TensorElement> + Sync + 'a;

/// Generators of one degree block, built in parallel.
fn generator_block(dim: usize, n: usize, f: &GeneratorFn) -> Result<Vec<TensorElement>> {
    generator_indices(dim, n).par_iter().map(|(a, x, y, b)| f(a, *x, *y, b)).collect()
}

/// The relation generators `j_generator(a, x, y, b)` with `|a| + |b| + 2 <= n`, by degree.
pub fn j_generators(ctx: &PbwContext, max_degree: usize) -> Result<Vec<Vec<TensorElement>>> {
    (2..=max_degree).map(|n| generator_block(ctx.dim(), n, &|a, x, y, b| ctx.j_generator(a, x, y, b))).collect()
}

/// Rows are the relation generators up to `max_degree`, in the coordinates of [`DegreeTruncation`].
pub fn span_j(ctx: &PbwContext, max_degree: usize) -> Result<RatMatrix> {
    let tr = DegreeTruncation::new(ctx.dim(), max_degree);
    let rows: Vec<Vec<Scalar>> = j_generators(ctx, max_degree)?
        .into_iter()
        .flatten()
        .map(|g| {
            let mut row = vec![crate::scalar::zero(); tr.len()];
            for (c, x) in tr.to_sparse(&g) {
                row[c] = x;
            }
            row
        })
        .collect();
    if rows.is_empty() {
        return Ok(RatMatrix::zeros(0, tr.len()));
    }
    RatMatrix::from_rows(rows)
}

fn echelon_of(tr: &DegreeTruncation, gens: &[Vec<TensorElement>]) -> SparseEchelon {
    let mut ech = SparseEchelon::new();
    for g in gens.iter().flatten() {
        ech.insert(tr.to_sparse(g));
    }
    ech
}

/// Checks `rank J + |W| = dim T` in degrees up to `max_degree` and that `J + kW` has full rank.
pub fn verify_direct_sum(ctx: &PbwContext, max_degree: usize) -> Result<OracleReport> {
    let tr = DegreeTruncation::new(ctx.dim(), max_degree);
    let mut ech = echelon_of(&tr, &j_generators(ctx, max_degree)?);
    let rank_j = ech.rank();
    let pbw = tr.pbw_count(max_degree);
    let total = tr.len();
    for c in 0..total {
        if is_pbw_word(tr.word(c).letters()) {
            ech.insert(SparseVec::from([(c, crate::scalar::one())]));
        }
    }
    let stacked = ech.rank();
    let mut r = OracleReport::new("direct-sum").param("max_degree", json!(max_degree)).param("dim", json!(ctx.dim()));
    r.ranks.insert("j".into(), rank_j);
    r.ranks.insert("stacked".into(), stacked);
    r.counts.insert("pbw_words".into(), pbw);
    r.counts.insert("total".into(), total);
    if rank_j + pbw != total {
        r.fail(format!("{rank_j} + {pbw} != {total}"));
    }
    if stacked != total {
        r.fail(format!("stacked rank {stacked} < {total}"));
    }
    Ok(r)
}

/// `"rank J + |W| = total"` from a direct-sum report.
pub fn direct_sum_line(r: &OracleReport) -> String {
    format!("{} + {} = {}", r.ranks["j"], r.counts["pbw_words"], r.counts["total"])
}

/// Projection onto `kW` along `J`, computed by elimination with non-PBW columns eliminated first.
pub struct Projector {
    tr: DegreeTruncation,
    // coordinate -> elimination order; non-PBW words come first
    order: Vec<usize>,
    coords: Vec<usize>,
    ech: SparseEchelon,
}

impl Projector {
    pub fn new(ctx: &PbwContext, max_degree: usize) -> Result<Self> {
        let tr = DegreeTruncation::new(ctx.dim(), max_degree);
        let (pbw, rest): (Vec<usize>, Vec<usize>) = (0..tr.len()).partition(|&c| is_pbw_word(tr.word(c).letters()));
        let coords: Vec<usize> = rest.into_iter().chain(pbw).collect();
        let mut order = vec![0; tr.len()];
        for (i, &c) in coords.iter().enumerate() {
            order[c] = i;
        }
        let mut p = Self { tr, order, coords, ech: SparseEchelon::new() };
        for g in j_generators(ctx, max_degree)?.iter().flatten() {
            let v = p.permute(g);
            p.ech.insert(v);
        }
        Ok(p)
    }

    fn permute(&self, t: &TensorElement) -> SparseVec {
        self.tr.to_sparse(t).into_iter().map(|(c, x)| (self.order[c], x)).collect()
    }

    /// The `kW` component of `t`; `None` when some non-PBW coordinate survives elimination,
    /// which happens only if `J + kW` is not the whole space.
    pub fn project(&self, t: &TensorElement) -> Option<TensorElement> {
        let reduced = self.ech.reduce(self.permute(t));
        let mut out = TensorElement::zero();
        for (i, x) in reduced {
            let w = self.tr.word(self.coords[i]);
            if !is_pbw_word(w.letters()) {
                return None;
            }
            out.add_term(w, x);
        }
        Some(out)
    }
}

/// Compares the rewriting operator with the linear-algebra projection on random elements.
pub fn compare_l_vs_projection(ctx: &PbwContext, max_degree: usize, samples: usize, seed: u64) -> Result<OracleReport> {
    let proj = Projector::new(ctx, max_degree)?;
    let mut r = rng(seed);
    let mut report = OracleReport::new("l-vs-projection")
        .param("max_degree", json!(max_degree))
        .param("samples", json!(samples))
        .param("seed", json!(seed));
    let mut agree = 0;
    for _ in 0..samples {
        let t = crate::random::random_element(&mut r, ctx.dim(), max_degree, 4);
        let l = ctx.normal_form_l(&t)?;
        match proj.project(&t) {
            Some(p) if p == l => agree += 1,
            Some(p) => report.fail(format!("t = {t}: L = {l}, projection = {p}")),
            None => report.fail(format!("t = {t}: no decomposition into J + kW")),
        }
    }
    report.counts.insert("agree".into(), agree);
    Ok(report)
}

fn random_split(r: &mut TestRng, dim: usize, max_degree: usize) -> (Vec<usize>, usize, usize, Vec<usize>) {
    let n = r.random_range(2..=max_degree.max(2));
    let i = r.random_range(0..=n - 2);
    let word = |r: &mut TestRng, len: usize| -> Vec<usize> {
        if len == 0 {
            Vec::new()
        } else {
            random_word(r, dim, len, len).letters().to_vec()
        }
    };
    let a = word(r, i);
    let b = word(r, n - 2 - i);
    (a, r.random_range(0..dim), r.random_range(0..dim), b)
}

/// Adds the degree-`n` blocks of two generator families to their echelons and checks that the
/// spans agree up to each degree.
fn compare_spans(
    report: &mut OracleReport,
    tr: &DegreeTruncation,
    left: &[Vec<TensorElement>],
    right: &[Vec<TensorElement>],
    names: (&str, &str),
) {
    let mut el = SparseEchelon::new();
    let mut er = SparseEchelon::new();
    for (k, (lb, rb)) in left.iter().zip(right).enumerate() {
        let n = k + 2;
        for g in lb {
            el.insert(tr.to_sparse(g));
        }
        for g in rb {
            er.insert(tr.to_sparse(g));
        }
        report.ranks.insert(format!("{}_deg{n}", names.0), el.rank());
        report.ranks.insert(format!("{}_deg{n}", names.1), er.rank());
        if let Some(g) = lb.iter().find(|g| !er.contains(tr.to_sparse(g))) {
            report.fail(format!("degree {n}: {} element {g} outside span of {}", names.0, names.1));
        }
        if let Some(g) = rb.iter().find(|g| !el.contains(tr.to_sparse(g))) {
            report.fail(format!("degree {n}: {} element {g} outside span of {}", names.1, names.0));
        }
    }
}

/// Twisting the ideal generators by `phi` lands in `J`, and the two spans agree degree by degree.
pub fn phi_conjugation_check(ctx: &PbwContext, max_degree: usize, samples: usize, seed: u64) -> Result<OracleReport> {
    let mut report = OracleReport::new("phi-conjugation")
        .param("max_degree", json!(max_degree))
        .param("samples", json!(samples))
        .param("seed", json!(seed));
    let mut r = rng(seed);
    let mut zero_i = 0;
    let mut zero_j = 0;
    for _ in 0..samples {
        let (a, x, y, b) = random_split(&mut r, ctx.dim(), max_degree);
        let i = ctx.ideal_generator(&a, x, y, &b)?;
        if ctx.normal_form_l(&ctx.phi(&i)?)?.is_zero() {
            zero_i += 1;
        } else {
            report.fail(format!("L(phi(i)) != 0 for i = {i}"));
        }
        let (a, x, y, b) = random_split(&mut r, ctx.dim(), max_degree);
        let j = ctx.j_generator(&a, x, y, &b)?;
        if ctx.normal_form_u(&ctx.phi(&j)?)?.is_zero() {
            zero_j += 1;
        } else {
            report.fail(format!("NF_U(phi(j)) != 0 for j = {j}"));
        }
    }
    report.counts.insert("ideal_samples_zero".into(), zero_i);
    report.counts.insert("j_samples_zero".into(), zero_j);

    let tr = DegreeTruncation::new(ctx.dim(), max_degree);
    let phi_i: Vec<Vec<TensorElement>> = (2..=max_degree)
        .map(|n| {
            generator_block(ctx.dim(), n, &|a, x, y, b| ctx.phi(&ctx.ideal_generator(a, x, y, b)?))
        })
        .collect::<Result<_>>()?;
    let j = j_generators(ctx, max_degree)?;
    compare_spans(&mut report, &tr, &phi_i, &j, ("phi_i", "j"));
    Ok(report)
}

/// The relation space built from the engine map and sign equals the parameter-free one built
/// from `beta`, degree by degree.
pub fn case2_consistency(ctx: &PbwContext, max_degree: usize) -> Result<OracleReport> {
    let mut report = OracleReport::new("parameter-consistency")
        .param("max_degree", json!(max_degree))
        .param("mu", json!(ctx.mu().as_i8()));
    let tr = DegreeTruncation::new(ctx.dim(), max_degree);
    let hom: Vec<Vec<TensorElement>> = (2..=max_degree)
        .map(|n| generator_block(ctx.dim(), n, &|a, x, y, b| ctx.hom_j_generator(a, x, y, b)))
        .collect::<Result<_>>()?;
    let j = j_generators(ctx, max_degree)?;
    compare_spans(&mut report, &tr, &j, &hom, ("j_mu", "j_beta"));
    Ok(report)
}

/// Outcome of fully reducing one word along every available route.
fn confluence_witness(ctx: &PbwContext, w: &Word) -> Result<Option<(String, bool)>> {
    let t = TensorElement::from_word(w.clone());
    let left = ctx.normal_form_with(&t, Strategy::Leftmost)?;
    let right = ctx.normal_form_with(&t, Strategy::Rightmost)?;
    if left != right {
        return Ok(Some((format!("{w:?}: leftmost {left} vs rightmost {right}"), false)));
    }
    let l = w.letters();
    let inversions: Vec<usize> = (0..l.len().saturating_sub(1)).filter(|&s| l[s] < l[s + 1]).collect();
    for (k, &r) in inversions.iter().enumerate() {
        let via_r = ctx.normal_form_l(&ctx.reduce_step(w, r)?)?;
        for &s in &inversions[k + 1..] {
            let via_s = ctx.normal_form_l(&ctx.reduce_step(w, s)?)?;
            if via_r != via_s {
                return Ok(Some((format!("{w:?}: position {r} gives {via_r}, position {s} gives {via_s}"), s == r + 1)));
            }
        }
    }
    Ok(None)
}

/// Counts inversion pairs by kind: `(far apart, adjacent)`.
fn pair_kinds(w: &Word) -> (usize, usize) {
    let l = w.letters();
    let inv: Vec<usize> = (0..l.len().saturating_sub(1)).filter(|&s| l[s] < l[s + 1]).collect();
    let mut far = 0;
    let mut near = 0;
    for (k, &r) in inv.iter().enumerate() {
        for &s in &inv[k + 1..] {
            if s == r + 1 {
                near += 1;
            } else {
                far += 1;
            }
        }
    }
    (far, near)
}

/// Leftmost versus rightmost reduction, and every pair of first steps, on the given words.
pub fn confluence_on_words(ctx: &PbwContext, words: &[Word]) -> Result<OracleReport> {
    let mut report = OracleReport::new("confluence").param("words", json!(words.len()));
    let results: Vec<Option<(String, bool)>> =
        words.par_iter().map(|w| confluence_witness(ctx, w)).collect::<Result<_>>()?;
    let (far, near) = words.iter().map(pair_kinds).fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    report.counts.insert("disjoint_pairs".into(), far);
    report.counts.insert("overlapping_pairs".into(), near);
    for (msg, _) in results.into_iter().flatten() {
        report.fail(msg);
    }
    Ok(report)
}

/// Confluence on `samples` random words of degree `2..=max_degree`.
pub fn confluence_fuzz(ctx: &PbwContext, max_degree: usize, samples: usize, seed: u64) -> Result<OracleReport> {
    let mut r = rng(seed);
    let words: Vec<Word> = (0..samples).map(|_| random_word(&mut r, ctx.dim(), 2.min(max_degree), max_degree)).collect();
    let report = confluence_on_words(ctx, &words)?;
    Ok(report.param("max_degree", json!(max_degree)).param("seed", json!(seed)))
}

/// Every word of degree `2..=max_degree`, for exhaustive confluence checks.
pub fn all_words(dim: usize, max_degree: usize) -> Vec<Word> {
    let tr = DegreeTruncation::new(dim, max_degree);
    tr.words().filter(|w| w.len() >= 2).collect()
}

/// Runs the direct-sum and exhaustive confluence checks on an algebra that may violate the
/// axioms. The report passes when at least one of them fails.
pub fn negative_control_on(g: &HomLieAlgebra, max_degree: usize) -> Result<(OracleReport, Vec<OracleReport>)> {
    let ctx = PbwContext::new(g)?;
    let ds = verify_direct_sum(&ctx, max_degree)?;
    let conf = confluence_on_words(&ctx, &all_words(ctx.dim(), max_degree))?.param("max_degree", json!(max_degree));
    let mut report = OracleReport::new("negative-control").param("max_degree", json!(max_degree));
    report.pass = !ds.pass || !conf.pass;
    report.witnesses = ds.witnesses.iter().chain(&conf.witnesses).cloned().collect();
    if !report.pass {
        report.witnesses.push("no failure witnessed".into());
    }
    Ok((report, vec![ds, conf]))
}

/// The designated invalid input: the untwisted sl2 bracket with the Chevalley involution.
pub fn negative_control(max_degree: usize) -> Result<(OracleReport, Vec<OracleReport>)> {
    let (bracket, beta) = crate::fixtures::untwisted_sl2_with_involution();
    negative_control_on(&HomLieAlgebra::new_unchecked(bracket, beta)?, max_degree)
}

/// The full suite used by `verify`: direct sum, projection, phi-conjugation and confluence.
pub fn full_verification(ctx: &PbwContext, max_degree: usize, samples: usize, seed: u64) -> Result<Vec<OracleReport>> {
    Ok(vec![
        verify_direct_sum(ctx, max_degree)?,
        compare_l_vs_projection(ctx, max_degree, samples, seed)?,
        phi_conjugation_check(ctx, max_degree, samples, seed)?,
        case2_consistency(ctx, max_degree)?,
        confluence_fuzz(ctx, max_degree.max(2), samples, seed)?,
    ])
}
