//! Paths, walks and stacks along a braid, and the series `Σ E_N(Cⁿ)`.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::braid::{BraidWord, DiagramCell};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::operator::{CanonicalOperator, OperatorMonomial, OperatorPolynomial, PbwKey};
use crate::qops::{CrossingWord, Letter};
use crate::scalar::Coeff;

/// A bottom-to-top path through the braid diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    /// Letters keyed by crossing index, for the crossings the path takes part in.
    pub letters: BTreeMap<usize, Letter>,
    /// One cell per gap, from gap `k` (bottom) to gap 0 (top).
    pub footprint: Vec<DiagramCell>,
}

/// All paths from bottom position `from`, in depth-first order with jumps
/// explored before staying on the over-strand.
pub fn enumerate_paths(braid: &BraidWord, from: usize) -> Result<Vec<Path>> {
    let m = braid.strands();
    if from < 1 || from > m {
        return Err(Error::StrandOutOfRange { strand: from, strands: m });
    }
    let k = braid.len();
    let mut out = Vec::new();
    let mut letters = BTreeMap::new();
    let mut footprint = vec![DiagramCell { gap: k, position: from }];
    extend_paths(braid, k, from, from, &mut letters, &mut footprint, &mut out);
    Ok(out)
}

fn extend_paths(
    braid: &BraidWord,
    gap: usize,
    position: usize,
    start: usize,
    letters: &mut BTreeMap<usize, Letter>,
    footprint: &mut Vec<DiagramCell>,
    out: &mut Vec<Path>,
) {
    if gap == 0 {
        out.push(Path { start, end: position, letters: letters.clone(), footprint: footprint.clone() });
        return;
    }
    let g = braid.crossing(gap);
    let moves = g.moves(position);
    if moves.is_empty() {
        footprint.push(DiagramCell { gap: gap - 1, position });
        extend_paths(braid, gap - 1, position, start, letters, footprint, out);
        footprint.pop();
        return;
    }
    for &(letter, delta) in moves {
        let next = position.checked_add_signed(delta).unwrap();
        letters.insert(gap, letter);
        footprint.push(DiagramCell { gap: gap - 1, position: next });
        extend_paths(braid, gap - 1, next, start, letters, footprint, out);
        footprint.pop();
        letters.remove(&gap);
    }
}

/// A set `J` of bottom positions, a permutation of `J`, and one path `j -> π(j)` per `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    /// Ascending.
    pub starts: Vec<usize>,
    /// `ends[i] = π(starts[i])`.
    pub ends: Vec<usize>,
    /// Ordered like `starts`.
    pub paths: Vec<Path>,
}

impl Walk {
    pub fn size(&self) -> usize {
        self.starts.len()
    }

    /// Number of pairs `i < j` in `J` with `π(i) > π(j)`.
    pub fn inversions(&self) -> usize {
        let e = &self.ends;
        (0..e.len()).map(|i| (i + 1..e.len()).filter(|&j| e[i] > e[j]).count()).sum()
    }

    /// True when no two paths share a diagram cell.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(|p| p.footprint.iter()).all(|c| seen.insert(*c))
    }
}

/// All walks with nonempty `J ⊆ {2..m}`. The empty braid has none.
pub fn enumerate_walks(braid: &BraidWord, simple_only: bool) -> Vec<Walk> {
    let m = braid.strands();
    if braid.is_empty() || m < 2 {
        return Vec::new();
    }
    let by_start: Vec<Vec<Path>> =
        (2..=m).map(|j| enumerate_paths(braid, j).expect("start in range")).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << (m - 1)) {
        let starts: Vec<usize> = (2..=m).filter(|j| mask & (1 << (j - 2)) != 0).collect();
        let mut chosen = Vec::with_capacity(starts.len());
        let mut used = vec![false; m + 1];
        choose_paths(&starts, &by_start, &mut used, &mut chosen, &mut |paths: &[&Path]| {
            let walk = Walk {
                starts: starts.clone(),
                ends: paths.iter().map(|p| p.end).collect(),
                paths: paths.iter().map(|&p| p.clone()).collect(),
            };
            if !simple_only || walk.is_simple() {
                out.push(walk);
            }
        });
    }
    out
}

fn choose_paths<'a>(
    starts: &[usize],
    by_start: &'a [Vec<Path>],
    used: &mut [bool],
    chosen: &mut Vec<&'a Path>,
    emit: &mut dyn FnMut(&[&'a Path]),
) {
    let i = chosen.len();
    if i == starts.len() {
        emit(chosen);
        return;
    }
    for p in &by_start[starts[i] - 2] {
        if used[p.end] || !starts.contains(&p.end) {
            continue;
        }
        used[p.end] = true;
        chosen.push(p);
        choose_paths(starts, by_start, used, chosen, emit);
        chosen.pop();
        used[p.end] = false;
    }
}

/// `(-1)(-q)^{|J| + inv(π)}` times the paths' letters, leftmost-starting path first.
pub fn walk_weight<R: Coeff>(braid: &BraidWord, walk: &Walk) -> OperatorMonomial<R> {
    let e = (walk.size() + walk.inversions()) as i64;
    let sign = if e % 2 == 0 { -R::one() } else { R::one() };
    let mut words: BTreeMap<usize, CrossingWord> = BTreeMap::new();
    for path in &walk.paths {
        for (&j, &letter) in &path.letters {
            words
                .entry(j)
                .or_insert_with(|| CrossingWord::empty(braid.crossing(j).sign))
                .letters
                .push(letter);
        }
    }
    OperatorMonomial { coeff: LaurentPoly::monomial(sign, e), words }
}

/// `C` as the sum of walk weights.
pub fn walk_sum_c<R: Coeff>(braid: &BraidWord, simple_only: bool) -> OperatorPolynomial<R> {
    let mut c = OperatorPolynomial::zero();
    for w in enumerate_walks(braid, simple_only) {
        c.add_monomial(walk_weight(braid, &w));
    }
    c
}

/// Cancellation check: all walks and simple walks give the same canonical `C`,
/// and nonsimple walks come in an even number.
pub fn cancellation_pairing(braid: &BraidWord) -> bool {
    let all = enumerate_walks(braid, false);
    let nonsimple = all.iter().filter(|w| !w.is_simple()).count();
    let full: OperatorPolynomial<i64> = walk_sum_c(braid, false);
    let simple: OperatorPolynomial<i64> = walk_sum_c(braid, true);
    nonsimple % 2 == 0 && full.canonical() == simple.canonical()
}

/// For each bottom position, the lowest crossing touching it and the letters
/// there that arrive from it. Counting those letters in a stack monomial gives
/// how many of its walks start at that position.
#[derive(Clone, Debug)]
pub struct BottomCells {
    entries: Vec<(usize, Vec<Letter>)>,
}

impl BottomCells {
    pub fn new(braid: &BraidWord) -> Self {
        let mut entries = Vec::new();
        for p in 1..=braid.strands() {
            let lowest = (1..=braid.len()).rev().find(|&j| {
                let g = braid.crossing(j);
                g.index == p || g.index + 1 == p
            });
            if let Some(j) = lowest {
                let g = braid.crossing(j);
                let letters = Letter::ALL.iter().copied().filter(|&l| g.origin_of(l) == p).collect();
                entries.push((j, letters));
            }
        }
        Self { entries }
    }

    /// The largest number of walks sharing one bottom cell.
    pub fn max_usage(&self, key: &PbwKey) -> u32 {
        self.entries
            .iter()
            .map(|(j, letters)| key.get(*j).map_or(0, |p| letters.iter().map(|&l| p.count(l)).sum()))
            .max()
            .unwrap_or(0)
    }
}

/// `n_max = (m-1)(N-1)`: beyond it every stack reuses a bottom cell `N` times.
pub fn truncation_bound(braid: &BraidWord, n: u32) -> u32 {
    (braid.strands() as u32 - 1) * (n - 1)
}

/// `[E_N(C⁰), E_N(C¹), ..., E_N(C^upto)]`.
///
/// With `prune`, stack monomials using a bottom cell `N` or more times are
/// dropped as soon as they appear; they and all their multiples evaluate to 0.
pub fn series_terms<R: Coeff>(
    c: &CanonicalOperator<R>,
    braid: &BraidWord,
    n: u32,
    upto: u32,
    prune: bool,
) -> Vec<LaurentPoly<R>> {
    let cells = BottomCells::new(braid);
    let keep = |key: &PbwKey| !prune || cells.max_usage(key) < n;
    let mut c_kept = CanonicalOperator::zero();
    for (k, v) in c.terms() {
        if keep(k) {
            c_kept.add_term(k.clone(), v.clone());
        }
    }
    let mut power = CanonicalOperator::one();
    let mut out = vec![LaurentPoly::one()];
    for _ in 0..upto {
        power = power.mul_filtered(&c_kept, keep);
        out.push(power.evaluate(n));
    }
    out
}

/// `Σ_{n=0}^{n_max} E_N(Cⁿ)` for a knot closure.
pub fn evaluate_series<R: Coeff>(c: &CanonicalOperator<R>, braid: &BraidWord, n: u32) -> Result<LaurentPoly<R>> {
    braid.require_knot()?;
    if n < 2 {
        return Err(Error::ColorTooSmall(n));
    }
    if braid.is_empty() {
        return Ok(LaurentPoly::one());
    }
    Ok(series_terms(c, braid, n, truncation_bound(braid, n), true).into_iter().sum())
}
