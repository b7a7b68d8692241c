//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Reference values come from `rainbow_torus_tests`, not from the library's
//! own bound code.

use std::time::{Duration, Instant};

use rainbow_torus::bounds::lower_bound;
use rainbow_torus::oracle::{exact_brute, exact_dp, gamma_prism, ExactResult};
use rainbow_torus::patterns::{construct_upper, pattern_f1, pattern_f2};
use rainbow_torus::{lemma33_check, verify, Assignment};
use rainbow_torus_cli::format::to_grid;
use rainbow_torus_cli::report::ub_comparison;
use rainbow_torus_tests::{
    best_upper, c3_formula, c4_formula, gap_limit, lower, ub1, ub2, UB1_TABLE, UB2_TABLE, WINNERS,
};

struct Outcome {
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), note: String::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

/// Valid 2RDFs seen so far, for the column-sum criterion.
#[derive(Default)]
struct Corpus(Vec<(String, Assignment)>);

impl Corpus {
    fn witness(&mut self, o: &mut Outcome, tag: String, r: &ExactResult) {
        let rep = verify(&r.witness);
        o.check(rep.valid && rep.weight == r.value, || format!("{tag}: witness invalid or weight != {}", r.value));
        if r.witness.dims().k_colors == 2 {
            self.0.push((tag, r.witness.clone()));
        }
    }
}

fn c1(corpus: &mut Corpus) -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=20 {
        let r = exact_dp(3, n, 2).unwrap();
        corpus.witness(&mut o, format!("(3,{n})"), &r);
        o.check(r.value == c3_formula(n as u64), || {
            format!("n={n}: exact {} formula {}", r.value, c3_formula(n as u64))
        });
    }
    o
}

fn c2(corpus: &mut Corpus) -> Outcome {
    let mut o = Outcome::new();
    for n in 4..=16 {
        let r = exact_dp(4, n, 2).unwrap();
        corpus.witness(&mut o, format!("(4,{n})"), &r);
        let f = c4_formula(n as u64);
        if r.value != f {
            o.failures.push(format!("n={n}: exact {} formula {f}", r.value));
            let rep = verify(&r.witness);
            o.note.push_str(&format!(
                "    witness for n={n} (valid={}, weight={}):\n{}",
                rep.valid,
                rep.weight,
                to_grid(&r.witness).lines().map(|l| format!("      {l}\n")).collect::<String>()
            ));
        }
    }
    o
}

fn c3(corpus: &mut Corpus) -> Outcome {
    let mut o = Outcome::new();
    let budget = Duration::from_secs(30 * 60);
    let start = Instant::now();
    for n in [5, 6, 7] {
        if start.elapsed() > budget {
            o.note = format!("    skipped n={n} and above: 30 min budget spent");
            break;
        }
        let r = exact_dp(5, n, 2).unwrap();
        corpus.witness(&mut o, format!("(5,{n})"), &r);
        o.check(r.value == 2 * n as u64, || format!("n={n}: exact {} expected {}", r.value, 2 * n));
    }
    o
}

fn c4_and_10(corpus: &mut Corpus) -> (Outcome, Outcome) {
    let mut o4 = Outcome::new();
    let mut o10 = Outcome::new();
    for m in 3..=4 {
        for n in 3..=12 / m {
            let mut v = [0; 2];
            for k in 1..=2 {
                let b = exact_brute(m, n, k).unwrap();
                let d = exact_dp(m, n, k).unwrap();
                corpus.witness(&mut o4, format!("brute ({m},{n},{k})"), &b);
                corpus.witness(&mut o4, format!("dp ({m},{n},{k})"), &d);
                o4.check(b.value == d.value, || format!("({m},{n},{k}): brute {} dp {}", b.value, d.value));
                v[k - 1] = d.value;
            }
            let [r1, r2] = v;
            o10.check(r2 <= 2 * r1, || format!("({m},{n}): r2 {r2} > 2 * {r1}"));
        }
    }
    (o4, o10)
}

fn c5(corpus: &mut Corpus) -> Outcome {
    let mut o = Outcome::new();
    let sizes = [(3, 6), (6, 6), (9, 6), (3, 12), (6, 9), (12, 9)];
    let mut checked = 0;
    for (m, n) in sizes {
        for (name, p) in [("f1", pattern_f1(m, n)), ("f2", pattern_f2(m, n))] {
            let Ok(a) = p else { continue };
            checked += 1;
            let rep = verify(&a);
            o.check(rep.valid && rep.weight == (m * n / 3) as u64, || {
                format!("{name} ({m},{n}): valid={} weight={}", rep.valid, rep.weight)
            });
            corpus.0.push((format!("{name} ({m},{n})"), a));
        }
    }
    // Every size carries at least one of the two patterns.
    o.check(checked >= sizes.len(), || format!("only {checked} patterns applied"));
    o
}

fn c6_and_8(corpus: &mut Corpus) -> (Outcome, Outcome) {
    let mut o6 = Outcome::new();
    let mut o8 = Outcome::new();
    for m in 3..=15usize {
        for n in 6..=30usize {
            let (mu, nu) = (m as u64, n as u64);
            let lb = lower(mu, nu);
            o6.check(lower_bound(m, n) == lb, || format!("({m},{n}): lower bound {} expected {lb}", lower_bound(m, n)));
            let best = best_upper(mu, nu).unwrap();
            let c = match construct_upper(m, n, None) {
                Ok(c) => c,
                Err(e) => {
                    o6.failures.push(format!("({m},{n}): {e}"));
                    continue;
                }
            };
            let rep = verify(&c.assignment);
            o6.check(rep.valid, || format!("({m},{n}) {}: invalid", c.recipe));
            o6.check(rep.weight == c.claimed_weight, || {
                format!("({m},{n}): weight {} claimed {}", rep.weight, c.claimed_weight)
            });
            o6.check(lb <= c.claimed_weight, || format!("({m},{n}): lower {lb} > {}", c.claimed_weight));
            o6.check(c.claimed_weight == best, || format!("({m},{n}): claimed {} best {best}", c.claimed_weight));
            let gap = gap_limit(mu, nu);
            o8.check(best - lb.min(best) <= gap, || format!("({m},{n}): gap {} > {gap}", best - lb));
            corpus.0.push((format!("{} ({m},{n})", c.recipe), c.assignment));
        }
    }
    (o6, o8)
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    for m in [5u64, 8, 11, 14] {
        for n in [6u64, 12, 18] {
            let want = (m + 1) * n / 3;
            let (lb, best) = (lower_bound(m as usize, n as usize), best_upper(m, n).unwrap());
            let lib_best = construct_upper(m as usize, n as usize, None).map(|c| c.claimed_weight).ok();
            o.check(lb == want && best == want && lib_best == Some(want), || {
                format!("({m},{n}): lower {lb} best {best} library {lib_best:?} expected {want}")
            });
        }
    }
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    for (m, n) in [(3, 3), (3, 4)] {
        let r = exact_dp(m, n, 2).unwrap().value;
        let p = gamma_prism(m, n).unwrap();
        o.check(r == p, || format!("({m},{n}): r2 {r} prism {p}"));
    }
    o
}

fn c11(corpus: &Corpus) -> Outcome {
    let mut o = Outcome::new();
    for (tag, a) in &corpus.0 {
        let rep = verify(a);
        if !rep.valid {
            continue;
        }
        let bad = lemma33_check(&rep.profile, a.dims().m);
        o.check(bad.is_empty(), || format!("{tag}: columns {bad:?}"));
    }
    o.note = format!("    {} assignments checked", corpus.0.len());
    o
}

fn table_rows(text: &str, title: &str) -> Vec<Vec<String>> {
    let mut lines = text.lines().skip_while(|l| !l.starts_with(title)).skip(2);
    (0..6).map(|_| lines.next().unwrap_or("").split_whitespace().skip(1).map(String::from).collect()).collect()
}

fn c12() -> Outcome {
    let mut o = Outcome::new();
    let rep = ub_comparison();
    let text = rep.render();
    let ub1_text = table_rows(&text, "UB1(m,n) =");
    let ub2_text = table_rows(&text, "UB2(m,n) =");
    let win_text = table_rows(&text, "smaller of");
    for mr in 0..6 {
        for nr in 0..6 {
            for (name, table, got, shown) in
                [("UB1", &UB1_TABLE, &rep.ub1, &ub1_text), ("UB2", &UB2_TABLE, &rep.ub2, &ub2_text)]
            {
                let (x, y, z) = table[mr][nr];
                let g = &got[mr][nr];
                let s = format!("({x},{y},{z})");
                o.check((g.x, g.y, g.z) == (x, y, z) && shown[mr].get(nr) == Some(&s), || {
                    format!(
                        "{name} [{mr}][{nr}]: got ({},{},{}) shown {:?}, table {s}",
                        g.x,
                        g.y,
                        g.z,
                        shown[mr].get(nr)
                    )
                });
            }
            let w = WINNERS[mr][nr];
            o.check(rep.winner[mr][nr] == w && win_text[mr].get(nr).map(String::as_str) == Some(w), || {
                format!("winner [{mr}][{nr}]: got {} table {w}", rep.winner[mr][nr])
            });
        }
    }
    // Incomparable cells: the printed rule must match direct evaluation.
    let rules =
        [((2, 3), "m+1 >=< n", (1u64, 0u64, 1u64), (0u64, 1u64, 0u64)), ((3, 3), "m >=< 2n", (1, 0, 0), (0, 2, 0))];
    o.check(rep.incomparable.len() == 2, || format!("{} incomparable cells", rep.incomparable.len()));
    for ((mr, nr), rule, (lm, ln, lc), (rm, rn, rc)) in rules {
        let Some(cell) = rep.incomparable.iter().find(|c| (c.m_mod6, c.n_mod6) == (mr, nr)) else {
            o.failures.push(format!("({mr},{nr}) not reported"));
            continue;
        };
        o.check(cell.rule.ends_with(rule), || format!("({mr},{nr}): rule {:?}", cell.rule));
        for m in (6..=200u64).filter(|m| m % 6 == mr as u64) {
            for n in (6..=200u64).filter(|n| n % 6 == nr as u64) {
                let direct = ub1(m, n).cmp(&ub2(m, n));
                let predicted = (lm * m + ln * n + lc).cmp(&(rm * m + rn * n + rc));
                o.check(direct == predicted, || format!("({m},{n}): direct {direct:?} rule {predicted:?}"));
            }
        }
    }
    o
}

fn main() {
    let mut corpus = Corpus::default();
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    macro_rules! timed {
        ($e:expr) => {{
            let t = Instant::now();
            let r = $e;
            (r, t.elapsed())
        }};
    }

    let (o, t) = timed!(c1(&mut corpus));
    results.push((1, "C3 family against the closed form, n = 3..20", o, t));
    let (o, t) = timed!(c2(&mut corpus));
    results.push((2, "C4 family against the closed form, n = 4..16", o, t));
    let (o, t) = timed!(c3(&mut corpus));
    results.push((3, "C5 spot checks, n = 5, 6, 7", o, t));
    let ((o4, o10), t) = timed!(c4_and_10(&mut corpus));
    let (o, t5) = timed!(c5(&mut corpus));
    let ((o6, o8), t6) = timed!(c6_and_8(&mut corpus));
    results.push((4, "brute force and DP agree for mn <= 12, k = 1, 2", o4, t));
    results.push((5, "third-of-vertices patterns", o, t5));
    results.push((6, "sandwich sweep m = 3..15, n = 6..30", o6, t6));
    let (o, t) = timed!(c7());
    results.push((7, "tight family (m+1)n/3", o, t));
    results.push((8, "gap at most ceil((2m+2n+4)/3)", o8, t6));
    let (o, t) = timed!(c9());
    results.push((9, "rainbow number equals prism domination", o, t));
    results.push((10, "r2 <= 2 * domination number", o10, Duration::ZERO));
    let (o, t) = timed!(c11(&corpus));
    results.push((11, "column sums for every valid assignment", o, t));
    let (o, t) = timed!(c12());
    results.push((12, "upper-bound comparison tables", o, t));

    results.sort_by_key(|r| r.0);
    let mut failed = 0;
    for (id, what, o, t) in &results {
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {id:>2} {what} ({:.2}s)", t.as_secs_f64());
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        if o.failures.len() > 10 {
            println!("    ... {} more", o.failures.len() - 10);
        }
        if !o.note.is_empty() {
            println!("{}", o.note.trim_end());
        }
        failed += usize::from(!o.failures.is_empty());
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
