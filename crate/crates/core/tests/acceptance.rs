//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p snakefrac-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use snakefrac::fpoly::{self, FpolyError};
use snakefrac::laurent::{LaurentPolynomial, Monomial, Var};
use snakefrac::matchings::{self, DEFAULT_LIMIT};
use snakefrac::{ContinuedFraction, SnakeGraph, Step};

type Outcome = Result<String, String>;

fn cf(s: &str) -> ContinuedFraction {
    s.parse().unwrap()
}

fn poly(s: &str) -> LaurentPolynomial {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_methods(cf: &ContinuedFraction) -> Result<[LaurentPolynomial; 3], String> {
    let g = SnakeGraph::build(cf).map_err(|e| e.to_string())?;
    Ok([
        fpoly::formula(cf).map_err(|e| e.to_string())?,
        fpoly::graft(cf).map_err(|e| e.to_string())?,
        matchings::f_polynomial(&g, None, DEFAULT_LIMIT).map_err(|e| e.to_string())?,
    ])
}

fn golden(cf: &ContinuedFraction, expected: &LaurentPolynomial) -> Result<(), String> {
    for (name, f) in ["formula", "graft", "matchings"].iter().zip(all_methods(cf)?) {
        ensure(&f == expected, || format!("{name} gave {f}"))?;
    }
    Ok(())
}

fn golden_2_2() -> Outcome {
    golden(&cf("2,2"), &poly("1 + y1 + y3 + y1*y3 + y1*y2*y3"))?;
    Ok("3 methods equal 1 + y1 + y3 + y1*y3 + y1*y2*y3".into())
}

fn golden_4() -> Outcome {
    golden(&cf("4"), &poly("1 + y1 + y1*y2 + y1*y2*y3"))?;
    let poset = matchings::build_poset(&SnakeGraph::build(&cf("4")).unwrap(), DEFAULT_LIMIT)
        .map_err(|e| e.to_string())?;
    let order = poset.topological_order();
    let chain = order.windows(2).all(|w| poset.up_edges.iter().any(|e| e.from == w[0] && e.to == w[1]));
    ensure(poset.len() == 4 && poset.up_edges.len() == 3 && chain, || "poset is not a 4-chain".into())?;
    Ok("3 methods agree, poset is a 4-chain".into())
}

fn sum(parts: impl IntoIterator<Item = LaurentPolynomial>) -> LaurentPolynomial {
    parts.into_iter().fold(LaurentPolynomial::zero(), |a, b| a + b)
}

fn product(parts: &[LaurentPolynomial]) -> LaurentPolynomial {
    parts.iter().fold(LaurentPolynomial::one(), |a, b| &a * b)
}

fn counts(cf: &ContinuedFraction, f: &LaurentPolynomial, n: u32, value: &str) -> Result<(), String> {
    ensure(f.term_count() == n as usize, || format!("{} terms", f.term_count()))?;
    ensure(f.eval_all_ones() == BigInt::from(n), || format!("value at ones {}", f.eval_all_ones()))?;
    let v = cf.value().map_err(|e| e.to_string())?.to_string();
    ensure(v == value, || format!("value {v}"))
}

fn golden_2_3_4() -> Outcome {
    let c = cf("2,3,4");
    // the published factored form, expanded here
    let phi1 = poly("1 + y1");
    let phi2 = poly("1 + y4 + y3*y4");
    let phi3 = poly("1 + y6 + y6*y7 + y6*y7*y8");
    let expected = sum([
        product(&[phi1.clone(), phi2, phi3.clone(), poly("y5")]),
        phi1,
        product(&[phi3, poly("y1*y2*y3*y4*y5")]),
    ]);
    golden(&c, &expected)?;
    counts(&c, &expected, 30, "30/13")?;
    Ok("expanded display matched, 30 terms, value 30/13".into())
}

fn golden_2_3_4_2() -> Outcome {
    let c = cf("2,3,4,2");
    let phi1 = poly("1 + y1");
    let phi2 = poly("1 + y4 + y3*y4");
    let phi3 = poly("1 + y6 + y6*y7 + y6*y7*y8");
    let phi4 = poly("1 + y10");
    let expected = sum([
        product(&[phi1.clone(), phi2.clone(), phi3.clone(), phi4.clone(), poly("y5")]),
        product(&[phi1.clone(), phi2, poly("y5*y6*y7*y8*y9*y10")]),
        product(&[phi1, phi4.clone()]),
        product(&[phi3, phi4, poly("y1*y2*y3*y4*y5")]),
        LaurentPolynomial::range_product(1, 10, false),
    ]);
    golden(&c, &expected)?;
    counts(&c, &expected, 67, "67/29")?;
    Ok("expanded display matched, 67 terms, value 67/29".into())
}

fn grid_equivalence() -> Outcome {
    let grid = common::grid(5, 4);
    for c in &grid {
        let [formula, graft, oracle] = all_methods(c)?;
        ensure(formula == graft && graft == oracle, || format!("{c}: methods disagree"))?;
        let g = SnakeGraph::build(c).unwrap();
        let enumerated = matchings::enumerate(&g, DEFAULT_LIMIT).map_err(|e| e.to_string())?.len();
        let n = BigInt::from(c.numerator());
        ensure(
            BigInt::from(formula.term_count()) == n
                && formula.eval_all_ones() == n
                && BigInt::from(enumerated) == n,
            || format!("{c}: counts differ from N = {n}"),
        )?;
        ensure(formula.constant_term() == BigInt::from(1), || format!("{c}: constant term"))?;
        let top = Monomial::range_product(1, g.tile_count() as Var, false);
        ensure(formula.leading_monomial() == Some(&top), || format!("{c}: top term"))?;
        ensure(formula.all_coefficients_one(), || format!("{c}: coefficients"))?;
    }
    Ok(format!("{} continued fractions, 3 methods agree exactly", grid.len()))
}

fn zigzag_subgraphs() -> Outcome {
    let mut checked = 0;
    for c in common::grid(5, 4) {
        let g = SnakeGraph::build(&c).unwrap();
        for i in 1..=c.len() {
            let h = g.subgraph(&c, i).map_err(|e| e.to_string())?;
            if h.tile_count() == 0 {
                continue;
            }
            let base = g.completed_minimal_matching(&c, i).map_err(|e| e.to_string())?;
            let oracle = matchings::f_polynomial(&h, Some(&base), DEFAULT_LIMIT).map_err(|e| e.to_string())?;
            let phi = fpoly::zigzag_polynomial(&c, i).map_err(|e| e.to_string())?;
            ensure(oracle == phi, || format!("{c}, i = {i}: {oracle} != {phi}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} subgraphs H_i match phi_i"))
}

fn poset_laws() -> Outcome {
    let mut checked = 0;
    for c in common::grid(5, 4) {
        if c.numerator() > BigUint::from(10_000u32) {
            continue;
        }
        let g = SnakeGraph::build(&c).unwrap();
        let p = matchings::build_poset(&g, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        let (sources, sinks) = (p.sources(), p.sinks());
        ensure(sources.len() == 1 && p.heights[sources[0]].is_one(), || format!("{c}: sources {sources:?}"))?;
        ensure(sinks.len() == 1, || format!("{c}: sinks {sinks:?}"))?;
        for e in &p.up_edges {
            let lifted = p.heights[e.from].product(&Monomial::var(e.label as Var));
            ensure(p.heights[e.to] == lifted, || format!("{c}: incoherent edge {e:?}"))?;
        }
        for (k, d) in p.distances().into_iter().enumerate() {
            let d = d.ok_or_else(|| format!("{c}: node {k} unreachable"))?;
            ensure(d as i64 == p.heights[k].degree(), || format!("{c}: node {k} not graded"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} posets: unique source/sink, graded, coherent, connected"))
}

fn reflection() -> Outcome {
    let grid = common::grid(5, 4);
    for c in &grid {
        let right = matchings::f_polynomial(&SnakeGraph::build(c).unwrap(), None, DEFAULT_LIMIT);
        let up = matchings::f_polynomial(&SnakeGraph::build_with(c, Step::Up).unwrap(), None, DEFAULT_LIMIT);
        ensure(right.is_ok() && right == up, || format!("{c}: mirrored build differs"))?;
    }
    Ok(format!("{} mirrored builds give identical F", grid.len()))
}

/// Memory guard for the scale probe; the full answer has N terms and every
/// intermediate continuant grows with it.
const SCALE_TERM_BUDGET: usize = 1_000_000;

fn scale_probe() -> Outcome {
    let mut entries = vec![2];
    entries.extend([1; 38]);
    entries.push(2);
    let c = ContinuedFraction::new(entries).unwrap();
    let start = Instant::now();
    let f = fpoly::formula_bounded(&c, SCALE_TERM_BUDGET).map_err(|e| match e {
        FpolyError::TooLarge { terms, budget } => format!(
            "n = 40 has N = {} terms; gave up at {terms} intermediate terms (budget {budget}) after {:.1?}",
            c.numerator(),
            start.elapsed()
        ),
        other => other.to_string(),
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:.1?}"))?;
    ensure(f.eval_all_ones() == BigInt::from(c.numerator()), || "value at ones differs from N".into())?;
    Ok(format!("n = 40 in {elapsed:.1?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("1 golden F(G[2,2])", golden_2_2, Duration::from_secs(1)),
        ("2 golden F(G[4]) and chain poset", golden_4, Duration::from_secs(1)),
        ("3 golden F(G[2,3,4])", golden_2_3_4, Duration::from_secs(1)),
        ("4 golden F(G[2,3,4,2])", golden_2_3_4_2, Duration::from_secs(1)),
        ("5 grid equivalence", grid_equivalence, Duration::from_secs(120)),
        ("6 zigzag subgraphs", zigzag_subgraphs, Duration::from_secs(120)),
        ("7 poset laws", poset_laws, Duration::from_secs(120)),
        ("8 reflection invariance", reflection, Duration::from_secs(120)),
        ("9 scale probe [2,1,...,1,2], n = 40", scale_probe, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}, but took {elapsed:.2?} (budget {budget:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS  {name}: {msg} [{elapsed:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} [{elapsed:.2?}]");
            }
        }
    }
    println!("{} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
