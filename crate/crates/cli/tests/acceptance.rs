//! Acceptance suite. Runs every criterion, prints one line each, fails if any fails.
//!
//! `cargo test -p cjones-cli --test acceptance`

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cjones::corpus::knot_words;
use cjones::jones::{bracket_jones_oracle, figure_eight_closed_form, positive_braid_report, predicted_lowest_degree};
use cjones::qdet::{c_qdet, is_right_quantum, rho};
use cjones::qops::oracle::{oracle_apply, relation_oracle_check_with, relations};
use cjones::qops::{eval_crossing, normal_order};
use cjones::walks::{
    cancellation_pairing, enumerate_walks, series_terms, truncation_bound, walk_sum_c, walk_weight,
};
use cjones::{
    colored_jones, BraidWord, CrossingWord, Generator, Letter, Method, OperatorPolynomial, Poly, Sign,
};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn braid(text: &str, m: usize) -> BraidWord {
    BraidWord::parse(text, m).unwrap()
}

fn fig8() -> BraidWord {
    braid("1 -2 1 -2", 3)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every word in the corpus satisfies `f`; reports the first offender.
fn over_corpus<F>(words: &[BraidWord], f: F) -> Result<(), String>
where
    F: Fn(&BraidWord) -> Result<(), String> + Sync,
{
    match words.par_iter().find_map_first(|b| f(b).err().map(|e| format!("{b}: {e}"))) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn jones(b: &BraidWord, n: u32, method: Method) -> Result<Poly, String> {
    colored_jones::<i64>(b, n, method).map(|r| r.polynomial).map_err(|e| e.to_string())
}

fn ac1_figure_eight_cli() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cjones"))
        .args(["compute", "--braid", "1 -2 1 -2", "--strands", "3", "--color", "2"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    ensure(stdout.trim_end() == "q^-2 - q^-1 + 1 - q + q^2", || format!("printed {stdout:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{elapsed:.0?}"))
}

fn ac2_intermediate_values() -> Check {
    let b = fig8();
    let walks = enumerate_walks(&b, true);
    ensure(walks.len() == 2, || format!("{} simple walks", walks.len()))?;
    let wa = walk_weight::<i64>(&b, walks.iter().find(|w| w.size() == 1).ok_or("no walk A")?);
    let wb = walk_weight::<i64>(&b, walks.iter().find(|w| w.size() == 2).ok_or("no walk B")?);
    let word = |sign, text| CrossingWord::parse(sign, text).unwrap();
    let a_words = [(2, word(Sign::Neg, "a")), (4, word(Sign::Neg, "a"))];
    let b_words = [
        (1, word(Sign::Pos, "c")),
        (2, word(Sign::Neg, "a")),
        (3, word(Sign::Pos, "b")),
        (4, word(Sign::Neg, "bc")),
    ];
    ensure(wa.coeff == Poly::q_pow(1) && wa.words == a_words.into_iter().collect(), || format!("A = {wa}"))?;
    ensure(wb.coeff == Poly::q_pow(3) && wb.words == b_words.into_iter().collect(), || format!("B = {wb}"))?;
    let e_a = wa.evaluate(2);
    let e_b = wb.evaluate(2);
    ensure(e_a == Poly::q_pow(1) * Poly::one_minus_q_pow(-1).pow(2), || format!("E2(A) = {e_a}"))?;
    ensure(e_b == Poly::q_pow(3) * Poly::one_minus_q_pow(-1), || format!("E2(B) = {e_b}"))?;
    let a: OperatorPolynomial<i64> = wa.into();
    let bb: OperatorPolynomial<i64> = wb.into();
    ensure(a.mul(&bb).canonical() == bb.mul(&a).canonical().scale(&Poly::q_pow(1)), || "AB != qBA".into())?;
    Ok("A, B, E2(A), E2(B), AB = qBA".into())
}

fn ac3_pipeline_equivalence(corpus: &[BraidWord]) -> Check {
    over_corpus(corpus, |b| {
        let qdet = c_qdet::<i64>(b).canonical();
        let walks = walk_sum_c::<i64>(b, false).canonical();
        ensure(qdet == walks, || "C_qdet differs from walk sum".into())?;
        for n in [2, 3] {
            let w = jones(b, n, Method::Walks)?;
            let q = jones(b, n, Method::Qdet)?;
            ensure(w == q, || format!("N={n}: walks {w}, qdet {q}"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} words, N = 2, 3", corpus.len()))
}

fn ac4_cancellation(corpus: &[BraidWord]) -> Check {
    over_corpus(corpus, |b| {
        let nonsimple = enumerate_walks(b, false).iter().filter(|w| !w.is_simple()).count();
        ensure(nonsimple % 2 == 0, || format!("{nonsimple} nonsimple walks"))?;
        let all = walk_sum_c::<i64>(b, false).canonical();
        let simple = walk_sum_c::<i64>(b, true).canonical();
        ensure(all == simple, || "all-walk C differs from simple-walk C".into())?;
        ensure(cancellation_pairing(b), || "cancellation_pairing false".into())
    })?;
    Ok(format!("{} words", corpus.len()))
}

fn vanishing_range(b: &BraidWord, n: u32, from: u32, to: u32) -> Result<(), String> {
    let c = walk_sum_c::<i64>(b, true).canonical();
    let terms = series_terms(&c, b, n, to, false);
    for (i, t) in terms.iter().enumerate().skip(from as usize) {
        ensure(t.is_zero(), || format!("N={n}: E_N(C^{i}) = {t}"))?;
    }
    Ok(())
}

fn ac5_truncation(corpus: &[BraidWord]) -> Check {
    for n in 2..=5 {
        vanishing_range(&fig8(), n, n, 2 * (n - 1)).map_err(|e| format!("figure-eight {e}"))?;
    }
    over_corpus(corpus, |b| {
        for n in [2, 3] {
            let bound = truncation_bound(b, n);
            vanishing_range(b, n, bound + 1, bound + 2)?;
        }
        Ok(())
    })?;
    Ok(format!("figure-eight N = 2..5; {} words past the bound, N = 2, 3", corpus.len()))
}

fn all_crossing_words(sign: Sign, max_len: usize) -> Vec<CrossingWord> {
    let mut out = vec![CrossingWord::empty(sign)];
    let mut layer = vec![CrossingWord::empty(sign)];
    for _ in 0..max_len {
        let next: Vec<CrossingWord> = layer
            .iter()
            .flat_map(|w| Letter::ALL.iter().map(move |&l| CrossingWord::new(sign, [w.letters.clone(), vec![l]].concat())))
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn pbw_matches_oracle(w: &CrossingWord) -> Result<(), String> {
    let nf = normal_order(w);
    for n in 2..=5 {
        let fast: Poly = eval_crossing(&nf, n);
        let slow: Poly = oracle_apply(w, n);
        ensure(fast == slow, || format!("{w} ({:?}) at N={n}: {fast} vs {slow}", w.sign))?;
    }
    Ok(())
}

fn ac6_pbw_oracle() -> Check {
    let mut exhaustive: Vec<CrossingWord> = all_crossing_words(Sign::Pos, 5);
    exhaustive.extend(all_crossing_words(Sign::Neg, 5));
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let random: Vec<CrossingWord> = (0..1000)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let len = rng.gen_range(1..=10);
            CrossingWord::new(sign, (0..len).map(|_| Letter::ALL[rng.gen_range(0..3)]).collect())
        })
        .collect();
    let first_err = |ws: &[CrossingWord]| ws.par_iter().find_map_first(|w| pbw_matches_oracle(w).err());
    if let Some(e) = first_err(&exhaustive).or_else(|| first_err(&random)) {
        return Err(e);
    }
    for sign in [Sign::Pos, Sign::Neg] {
        let rels = relations(sign);
        ensure(relation_oracle_check_with::<i64>(sign, &rels, 11), || format!("{sign:?} relations fail"))?;
        for i in 0..3 {
            let mut bad = rels;
            bad[i].q_exp += 1;
            ensure(!relation_oracle_check_with::<i64>(sign, &bad, 11), || format!("perturbed {sign:?} relation {i} passes"))?;
        }
    }
    Ok(format!("{} exhaustive + {} random words, N = 2..5; relations and perturbed controls", exhaustive.len(), random.len()))
}

fn ac7_bracket(corpus: &[BraidWord]) -> Check {
    over_corpus(corpus, |b| {
        let ours = jones(b, 2, Method::Both)?;
        let bracket: Poly = bracket_jones_oracle(b).map_err(|e| e.to_string())?;
        ensure(ours == bracket, || format!("J'(2) = {ours}, bracket {bracket}"))
    })?;
    Ok(format!("{} words", corpus.len()))
}

fn positive_ok(b: &BraidWord, n: u32, expected_l: Option<i64>) -> Result<(), String> {
    let report = positive_braid_report::<i64>(b, n, Method::Both).map_err(|e| e.to_string())?;
    if let Some(l) = expected_l {
        ensure(report.l_n == l, || format!("{b} N={n}: L_N = {}, expected {l}", report.l_n))?;
    }
    ensure(report.verdict, || format!("{b} N={n}: {report:?}"))
}

fn ac8_positive_braids() -> Check {
    let named = [("1 1 1", 2, 1), ("1 1 1 1 1", 2, 2), ("1 1 1 1 1 1 1", 2, 3), ("1 2 1 2 1 2 1 2", 3, 3)];
    for (text, m, mult) in named {
        for n in 2..=4u32 {
            positive_ok(&braid(text, m), n, Some(mult * (i64::from(n) - 1)))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut random = Vec::new();
    while random.len() < 100 {
        let m = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=8);
        let word: Vec<i64> = (0..len).map(|_| rng.gen_range(1..m as i64)).collect();
        let b = BraidWord::from_signed(m, &word).unwrap();
        if b.is_knot_closure() {
            random.push(b);
        }
    }
    let failure = random.par_iter().find_map_first(|b| {
        [2, 3].into_iter().find_map(|n| positive_ok(b, n, Some(predicted_lowest_degree(b, n))).err())
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok("σ1^3, σ1^5, σ1^7, (σ1σ2)^4 at N = 2..4; 100 random positive words at N = 2, 3".into())
}

fn ac9_closed_form() -> Check {
    for n in 2..=5 {
        let ours = colored_jones::<BigInt>(&fig8(), n, Method::Both).map_err(|e| e.to_string())?.polynomial;
        let closed = figure_eight_closed_form::<BigInt>(n);
        ensure(ours == closed, || format!("N={n}: {ours} vs {closed}"))?;
    }
    Ok("N = 2..5".into())
}

fn ac10_markov() -> Check {
    let mut checked = 0;
    for base in [braid("1 1 1", 2), fig8()] {
        let m = base.strands();
        let mut variants = vec![base.stabilize(Sign::Pos), base.stabilize(Sign::Neg)];
        for i in 1..m {
            for sign in [Sign::Pos, Sign::Neg] {
                variants.push(base.conjugate(Generator::new(i, sign)).unwrap());
            }
        }
        for n in [2, 3] {
            let expected = jones(&base, n, Method::Both)?;
            for v in &variants {
                let got = jones(v, n, Method::Both)?;
                ensure(got == expected, || format!("{v} N={n}: {got}, expected {expected}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} variant evaluations"))
}

fn ac11_right_quantum(corpus: &[BraidWord]) -> Check {
    let short: Vec<BraidWord> = corpus.iter().filter(|b| b.len() <= 4).cloned().collect();
    over_corpus(&short, |b| ensure(is_right_quantum(&rho::<i64>(b)), || "ρ not right-quantum".into()))?;
    let mut bad = rho::<i64>(&fig8());
    let (x, y) = (bad.get(1, 1).clone(), bad.get(1, 2).clone());
    bad.set(1, 1, y);
    bad.set(1, 2, x);
    ensure(!is_right_quantum(&bad), || "corrupted matrix passes".into())?;
    Ok(format!("{} words; corrupted control rejected", short.len()))
}

fn main() -> ExitCode {
    let corpus = knot_words(4, 6);
    let criteria: Vec<Criterion> = vec![
        ("figure-eight N=2 via CLI", Box::new(ac1_figure_eight_cli)),
        ("intermediate walk values", Box::new(ac2_intermediate_values)),
        ("pipeline equivalence", Box::new(|| ac3_pipeline_equivalence(&corpus))),
        ("cancellation of nonsimple walks", Box::new(|| ac4_cancellation(&corpus))),
        ("truncation", Box::new(|| ac5_truncation(&corpus))),
        ("PBW evaluation vs operator oracle", Box::new(ac6_pbw_oracle)),
        ("Kauffman bracket at N=2", Box::new(|| ac7_bracket(&corpus))),
        ("positive braid leading window", Box::new(ac8_positive_braids)),
        ("figure-eight closed form", Box::new(ac9_closed_form)),
        ("Markov invariance", Box::new(ac10_markov)),
        ("right-quantum ρ", Box::new(|| ac11_right_quantum(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail} [{t:.1?}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {e} [{t:.1?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
